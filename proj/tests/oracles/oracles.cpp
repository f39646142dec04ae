#include "oracles.hpp"

#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

namespace {

using u64 = std::uint64_t;
using Mono = std::vector<int>;

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
u64 addm(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 subm(u64 a, u64 b, u64 p) { return (a + p - b) % p; }

u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (u64 i = 0; i < e; ++i) r = mulm(r, a, p);
  return r;
}

u64 invm(u64 a, u64 p) {
  // Extended Euclid.
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    const auto q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw std::runtime_error("oracle: not invertible");
  return static_cast<u64>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

// Ascending colex: exponent vectors of degree d, last variable varying slowest.
void monomials(int vars, int d, Mono& cur, int idx, std::vector<Mono>& out) {
  if (idx < 0) {
    if (d == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e <= d; ++e) {
    cur[idx] = e;
    monomials(vars, d - e, cur, idx - 1, out);
  }
}

std::vector<Mono> all_monomials(int n, int d) {
  std::vector<Mono> out;
  Mono cur(n + 1, 0);
  monomials(n + 1, d, cur, n, out);
  return out;
}

u64 eval_mono(const Mono& m, const std::vector<u64>& pt, u64 p) {
  u64 v = 1;
  for (std::size_t i = 0; i < m.size(); ++i) v = mulm(v, powm(pt[i], m[i], p), p);
  return v;
}

// ∂ᵢ of the monomial, evaluated.
u64 deriv_mono(const Mono& m, std::size_t i, const std::vector<u64>& pt, u64 p) {
  if (m[i] == 0) return 0;
  Mono q = m;
  q[i] -= 1;
  return mulm(static_cast<u64>(m[i]) % p, eval_mono(q, pt, p), p);
}

// Condition functionals of z, each a function of a monomial.
std::vector<std::vector<u64>> condition_columns(const terracini::ZeroDimScheme& z,
                                                const std::vector<Mono>& monos, u64 p) {
  std::vector<std::vector<u64>> cols;
  for (const auto& m : monos) {
    std::vector<u64> col;
    for (const auto& c : z.components()) {
      const auto& pt = c.base.coords();
      col.push_back(eval_mono(m, pt, p));
      if (c.kind == terracini::ComponentKind::Jet) {
        u64 s = 0;
        for (std::size_t i = 0; i < pt.size(); ++i)
          s = addm(s, mulm(c.direction[i], deriv_mono(m, i, pt, p), p), p);
        col.push_back(s);
      } else if (c.kind == terracini::ComponentKind::Double) {
        std::size_t lead = 0;
        while (pt[lead] == 0) ++lead;
        for (std::size_t i = 0; i < pt.size(); ++i)
          if (i != lead) col.push_back(deriv_mono(m, i, pt, p));
      }
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

// Rank of a list of column vectors; pivot = largest residue in the column.
std::int64_t rank_of_columns(std::vector<std::vector<u64>> cols, u64 p) {
  if (cols.empty()) return 0;
  const std::size_t rows = cols.front().size();
  std::vector<bool> used(rows, false);
  std::int64_t r = 0;
  // Row-major copy: a[row][col].
  std::vector<std::vector<u64>> a(rows, std::vector<u64>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = cols[j][i] % p;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::size_t best = rows;
    for (std::size_t i = 0; i < rows; ++i)
      if (!used[i] && a[i][j] != 0 && (best == rows || a[i][j] > a[best][j])) best = i;
    if (best == rows) continue;
    used[best] = true;
    ++r;
    const u64 inv = invm(a[best][j], p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == best || a[i][j] == 0) continue;
      const u64 fac = mulm(a[i][j], inv, p);
      for (std::size_t k = j; k < cols.size(); ++k) a[i][k] = subm(a[i][k], mulm(fac, a[best][k], p), p);
    }
  }
  return r;
}

std::int64_t binom(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

H h_oracle(const terracini::ZeroDimScheme& z, int d) {
  const u64 p = z.field().modulus();
  const auto monos = all_monomials(z.n(), d);
  const auto r = z.empty() ? 0 : rank_of_columns(condition_columns(z, monos, p), p);
  H h;
  h.h0 = binom(z.n() + d, z.n()) - r;
  h.h1 = static_cast<std::int64_t>(z.degree()) - r;
  return h;
}

std::int64_t residual_degree_oracle(const terracini::ZeroDimScheme& z,
                                    const terracini::Hypersurface& f, int e) {
  const u64 p = z.field().modulus();
  const int n = z.n();
  const int t = f.degree();
  const auto& fb = terracini::monomial_basis(n, t);
  const auto big = all_monomials(n, e + t);
  const auto small = all_monomials(n, e);
  const auto cond = condition_columns(z, big, p);  // per monomial of degree e+t
  auto index_of = [&](const Mono& m) {
    for (std::size_t i = 0; i < big.size(); ++i)
      if (big[i] == m) return i;
    throw std::runtime_error("oracle: monomial not found");
  };
  // Column for g = x^m: conditions of f·x^m.
  std::vector<std::vector<u64>> cols;
  const std::size_t rows = z.degree();
  for (const auto& m : small) {
    std::vector<u64> col(rows, 0);
    for (std::size_t k = 0; k < fb.size(); ++k) {
      const u64 c = f.coeffs()[k];
      if (c == 0) continue;
      Mono prod = m;
      for (int i = 0; i <= n; ++i) prod[i] += fb.exponent(k, i);
      const auto& src = cond[index_of(prod)];
      for (std::size_t i = 0; i < rows; ++i) col[i] = addm(col[i], mulm(c, src[i], p), p);
    }
    cols.push_back(std::move(col));
  }
  const auto r = rows == 0 ? 0 : rank_of_columns(cols, p);
  // The kernel is I_Res(e), of codimension deg Res for e large.
  return r;
}

std::int64_t curve_h1_oracle(int genus, std::int64_t e, bool trivial) {
  if (genus == 0) return e >= -1 ? 0 : -e - 1;
  if (genus == 1) {
    if (e > 0) return 0;
    if (e == 0) return trivial ? 1 : 0;
    return -e;
  }
  throw std::runtime_error("curve_h1_oracle: genus must be 0 or 1");
}

}  // namespace oracle
