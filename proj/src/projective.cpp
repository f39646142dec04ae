#include "terracini/projective.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace terracini {

Point Point::normalized(const PrimeField& f, Vec coords) {
  std::size_t i = 0;
  while (i < coords.size() && coords[i] % f.modulus() == 0) ++i;
  if (i == coords.size()) throw Error("point with all coordinates zero");
  const Elem inv = f.inv(coords[i] % f.modulus());
  for (auto& c : coords) c = f.mul(c % f.modulus(), inv);
  return Point(std::move(coords));
}

std::size_t Point::lead() const noexcept {
  std::size_t i = 0;
  while (coords_[i] == 0) ++i;
  return i;
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  std::uint64_t h = 0x51ed270b27e5c3a1ULL;
  for (auto c : p.coords()) h = splitmix64(h ^ c);
  return static_cast<std::size_t>(h);
}

std::optional<Vec> normalize_direction(const PrimeField& f, const Point& base, Vec v) {
  if (v.size() != base.coords().size()) throw Error("direction dimension mismatch");
  const std::size_t l = base.lead();
  const Elem c = v[l] % f.modulus();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(v[i] % f.modulus(), f.mul(c, base.coords()[i]));
  std::size_t i = 0;
  while (i < v.size() && v[i] == 0) ++i;
  if (i == v.size()) return std::nullopt;
  const Elem inv = f.inv(v[i]);
  for (auto& e : v) e = f.mul(e, inv);
  return v;
}

Matrix coordinate_matrix(const PrimeField& f, std::span<const Point> points) {
  if (points.empty()) throw Error("coordinate_matrix: empty input");
  Matrix m(f, points.size(), points.front().coords().size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].coords().size() != m.cols()) throw Error("points of different dimensions");
    std::copy(points[i].coords().begin(), points[i].coords().end(), m.row(i).begin());
  }
  return m;
}

int span_dim(const PrimeField& f, std::span<const Point> points) {
  if (points.empty()) throw Error("EmptyInput: span of no points");
  return static_cast<int>(rank(coordinate_matrix(f, points))) - 1;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t monomial_count(int n, int d) {
  if (n < 0 || d < 0) return 0;
  return binomial(static_cast<unsigned>(n + d), static_cast<unsigned>(n));
}

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d), count_(monomial_count(n, d)) {
  if (n < 0 || d < 0 || d > 255) throw Error("MonomialBasis: bad (n, d)");
  exps_.reserve(count_ * (n + 1));
  std::vector<std::uint8_t> cur(n + 1, 0);
  // Depth-first, largest exponent of the current variable first.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n) {
      cur[var] = static_cast<std::uint8_t>(remaining);
      exps_.insert(exps_.end(), cur.begin(), cur.end());
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[var] = static_cast<std::uint8_t>(e);
      self(self, var + 1, remaining - e);
    }
  };
  rec(rec, 0, d);
  for (std::size_t i = 0; i < count_; ++i) index_.emplace(key(exponents(i)), i);
}

std::uint64_t MonomialBasis::key(std::span<const std::uint8_t> e) const {
  std::uint64_t k = 0;
  for (auto x : e) k = k * 256 + x;
  return k;
}

std::ptrdiff_t MonomialBasis::index_of(std::span<const std::uint8_t> e) const {
  if (e.size() != static_cast<std::size_t>(n_ + 1)) return -1;
  auto it = index_.find(key(e));
  return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

const MonomialBasis& monomial_basis(int n, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<MonomialBasis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, d}];
  if (!slot) slot = std::make_unique<MonomialBasis>(n, d);
  return *slot;
}

namespace {

std::vector<Vec> power_table(const PrimeField& f, std::span<const Elem> pt, int d) {
  std::vector<Vec> pw(pt.size(), Vec(d + 1, 1));
  for (std::size_t j = 0; j < pt.size(); ++j)
    for (int e = 1; e <= d; ++e) pw[j][e] = f.mul(pw[j][e - 1], pt[j]);
  return pw;
}

}  // namespace

Vec monomial_values(const PrimeField& f, const MonomialBasis& basis, std::span<const Elem> pt) {
  const auto pw = power_table(f, pt, basis.d());
  Vec out(basis.size());
  for (std::size_t m = 0; m < basis.size(); ++m) {
    Elem v = 1;
    for (std::size_t j = 0; j < pt.size(); ++j) v = f.mul(v, pw[j][basis.exponent(m, j)]);
    out[m] = v;
  }
  return out;
}

Vec monomial_partials(const PrimeField& f, const MonomialBasis& basis, std::span<const Elem> pt,
                      std::size_t var) {
  const auto pw = power_table(f, pt, basis.d());
  Vec out(basis.size(), 0);
  for (std::size_t m = 0; m < basis.size(); ++m) {
    const auto a = basis.exponent(m, var);
    if (a == 0) continue;
    Elem v = a;
    for (std::size_t j = 0; j < pt.size(); ++j) {
      const auto e = basis.exponent(m, j) - (j == var ? 1 : 0);
      v = f.mul(v, pw[j][e]);
    }
    out[m] = v;
  }
  return out;
}

Vec monomial_directional(const PrimeField& f, const MonomialBasis& basis,
                         std::span<const Elem> pt, std::span<const Elem> v) {
  Vec out(basis.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const auto part = monomial_partials(f, basis, pt, i);
    for (std::size_t m = 0; m < out.size(); ++m) out[m] = f.add(out[m], f.mul(v[i], part[m]));
  }
  return out;
}

Hypersurface::Hypersurface(const PrimeField& f, int n, int degree, Vec coeffs)
    : field_(f), n_(n), degree_(degree), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != monomial_count(n, degree)) throw Error("Hypersurface: wrong coefficient count");
  bool nonzero = false;
  for (auto& c : coeffs_) {
    c %= f.modulus();
    nonzero = nonzero || c != 0;
  }
  if (!nonzero) throw Error("Hypersurface: identically zero form");
}

Hypersurface Hypersurface::linear(const PrimeField& f, Vec coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  // Degree-1 basis order is x₀, x₁, …, xₙ.
  return Hypersurface(f, n, 1, std::move(coeffs));
}

Hypersurface Hypersurface::operator*(const Hypersurface& o) const {
  if (n_ != o.n_) throw Error("Hypersurface product: dimension mismatch");
  const auto& a = monomial_basis(n_, degree_);
  const auto& b = monomial_basis(n_, o.degree_);
  const auto& c = monomial_basis(n_, degree_ + o.degree_);
  Vec out(c.size(), 0);
  std::vector<std::uint8_t> e(n_ + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      for (int k = 0; k <= n_; ++k) e[k] = a.exponent(i, k) + b.exponent(j, k);
      const auto idx = c.index_of(e);
      out[idx] = field_.add(out[idx], field_.mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return Hypersurface(field_, n_, degree_ + o.degree_, std::move(out));
}

Hypersurface Hypersurface::power(int k) const {
  if (k < 1) throw Error("Hypersurface::power: exponent must be positive");
  Hypersurface r = *this;
  for (int i = 1; i < k; ++i) r = r * *this;
  return r;
}

ValueAndGradient evaluate_with_gradient(const Hypersurface& h, std::span<const Elem> pt) {
  if (pt.size() != static_cast<std::size_t>(h.n() + 1)) throw Error("evaluate: dimension mismatch");
  const auto& f = h.field();
  const auto& basis = monomial_basis(h.n(), h.degree());
  ValueAndGradient out;
  out.value = evaluate(h, pt);
  out.gradient.assign(pt.size(), 0);
  for (std::size_t i = 0; i < pt.size(); ++i) {
    const auto part = monomial_partials(f, basis, pt, i);
    Elem acc = 0;
    for (std::size_t m = 0; m < part.size(); ++m) acc = f.add(acc, f.mul(part[m], h.coeffs()[m]));
    out.gradient[i] = acc;
  }
  return out;
}

Elem evaluate(const Hypersurface& h, std::span<const Elem> pt) {
  const auto& f = h.field();
  const auto vals = monomial_values(f, monomial_basis(h.n(), h.degree()), pt);
  Elem acc = 0;
  for (std::size_t m = 0; m < vals.size(); ++m) acc = f.add(acc, f.mul(vals[m], h.coeffs()[m]));
  return acc;
}

Subspace::Subspace(const PrimeField& f, std::vector<Vec> generators) : field_(f), ambient_(0) {
  if (generators.empty()) throw Error("Subspace: no generators");
  ambient_ = generators.front().size() - 1;
  // Greedy independent subset, tracked through an incremental echelon form.
  std::vector<Vec> ech;
  std::vector<std::size_t> piv;
  for (auto& g : generators) {
    if (g.size() != ambient_ + 1) throw Error("Subspace: dimension mismatch");
    Vec r = g;
    for (auto& x : r) x %= f.modulus();
    for (std::size_t k = 0; k < ech.size(); ++k) {
      const Elem c = r[piv[k]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] = f.sub(r[j], f.mul(c, ech[k][j]));
    }
    std::size_t lead = 0;
    while (lead < r.size() && r[lead] == 0) ++lead;
    if (lead == r.size()) continue;
    const Elem inv = f.inv(r[lead]);
    for (auto& x : r) x = f.mul(x, inv);
    ech.push_back(std::move(r));
    piv.push_back(lead);
    basis_.push_back(g);
    for (auto& x : basis_.back()) x %= f.modulus();
  }
  if (basis_.empty()) throw Error("Subspace: generators span zero");

  // Full reduced echelon form of the chosen basis with its transform.
  const std::size_t k = basis_.size();
  const std::size_t w = ambient_ + 1 + k;
  std::vector<Vec> a(k, Vec(w, 0));
  for (std::size_t i = 0; i < k; ++i) {
    std::copy(basis_[i].begin(), basis_[i].end(), a[i].begin());
    a[i][ambient_ + 1 + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c <= ambient_ && r < k; ++c) {
    std::size_t p = r;
    while (p < k && a[p][c] == 0) ++p;
    if (p == k) continue;
    std::swap(a[p], a[r]);
    const Elem inv = f.inv(a[r][c]);
    for (auto& x : a[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Elem fac = a[i][c];
      for (std::size_t j = 0; j < w; ++j) a[i][j] = f.sub(a[i][j], f.mul(fac, a[r][j]));
    }
    pivots_.push_back(c);
    ++r;
  }
  for (auto& row : a) {
    echelon_.emplace_back(row.begin(), row.begin() + ambient_ + 1);
    transform_.emplace_back(row.begin() + ambient_ + 1, row.end());
  }
}

Subspace Subspace::hyperplane(const PrimeField& f, const Vec& linear_form) {
  Matrix m = Matrix::from_rows(f, {linear_form}, linear_form.size());
  auto ker = right_kernel(m);
  if (ker.size() + 1 != linear_form.size()) throw Error("hyperplane: zero linear form");
  return Subspace(f, std::move(ker));
}

std::optional<Vec> Subspace::coordinates(std::span<const Elem> v) const {
  if (v.size() != ambient_ + 1) throw Error("Subspace::coordinates: dimension mismatch");
  const auto& f = field_;
  Vec recon(ambient_ + 1, 0);
  Vec c(basis_.size(), 0);
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Elem w = v[pivots_[k]] % f.modulus();
    if (w == 0) continue;
    for (std::size_t j = 0; j <= ambient_; ++j) recon[j] = f.add(recon[j], f.mul(w, echelon_[k][j]));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = f.add(c[j], f.mul(w, transform_[k][j]));
  }
  for (std::size_t j = 0; j <= ambient_; ++j)
    if (recon[j] != v[j] % f.modulus()) return std::nullopt;
  return c;
}

bool Subspace::contains(std::span<const Elem> v) const { return coordinates(v).has_value(); }

Vec Subspace::embed(std::span<const Elem> c) const {
  if (c.size() != basis_.size()) throw Error("Subspace::embed: dimension mismatch");
  Vec out(ambient_ + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j <= ambient_; ++j)
      out[j] = field_.add(out[j], field_.mul(c[i], basis_[i][j]));
  return out;
}

std::vector<Vec> Subspace::equations() const {
  return right_kernel(Matrix::from_rows(field_, basis_, ambient_ + 1));
}

Point random_point(const PrimeField& f, int n, Rng& rng) {
  for (;;) {
    Vec c(n + 1);
    for (auto& x : c) x = rng.element(f);
    bool nz = false;
    for (auto x : c) nz = nz || x != 0;
    if (nz) return Point::normalized(f, std::move(c));
  }
}

Matrix random_projectivity(const PrimeField& f, int n, Rng& rng) {
  for (;;) {
    Matrix m(f, n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) m.at(i, j) = rng.element(f);
    if (rank(m) == static_cast<std::size_t>(n + 1)) return m;
  }
}

Vec apply(const Matrix& m, std::span<const Elem> v) { return m.right_multiply(v); }

Point apply(const Matrix& m, const Point& p) {
  return Point::normalized(m.field(), m.right_multiply(p.coords()));
}

}  // namespace terracini
