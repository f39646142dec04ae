#include "terracini/poly.hpp"

namespace terracini {

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_degree(const Poly& a) {
  for (std::size_t i = a.size(); i > 0; --i)
    if (a[i - 1] != 0) return static_cast<int>(i) - 1;
  return -1;
}

Elem poly_eval(const PrimeField& f, const Poly& a, Elem x) {
  Elem r = 0;
  for (std::size_t i = a.size(); i > 0; --i) r = f.add(f.mul(r, x), a[i - 1]);
  return r;
}

Poly poly_derivative(const PrimeField& f, const Poly& a) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(f.mul(f.reduce_u(i), a[i]));
  poly_trim(d);
  return d;
}

Poly poly_mul(const PrimeField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  poly_trim(c);
  return c;
}

void poly_divmod(const PrimeField& f, const Poly& a, const Poly& b, Poly& q, Poly& r) {
  Poly bb = b;
  poly_trim(bb);
  if (bb.empty()) throw Error("polynomial division by zero");
  r = a;
  poly_trim(r);
  const int db = poly_degree(bb);
  const Elem lead_inv = f.inv(bb.back());
  q.assign(r.size() > bb.size() - 1 ? r.size() - bb.size() + 1 : 0, 0);
  while (poly_degree(r) >= db) {
    const int dr = poly_degree(r);
    const Elem c = f.mul(r[dr], lead_inv);
    q[dr - db] = c;
    for (int i = 0; i <= db; ++i) r[dr - db + i] = f.sub(r[dr - db + i], f.mul(c, bb[i]));
    poly_trim(r);
  }
  poly_trim(q);
}

Poly poly_gcd(const PrimeField& f, Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly q, r;
    poly_divmod(f, a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Elem inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  return a;
}

Poly poly_interpolate(const PrimeField& f, std::span<const Elem> xs, std::span<const Elem> ys) {
  if (xs.size() != ys.size()) throw Error("interpolate: size mismatch");
  // Newton divided differences.
  const std::size_t n = xs.size();
  Vec coef(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      const Elem den = f.sub(xs[i], xs[i - j]);
      coef[i] = f.div(f.sub(coef[i], coef[i - 1]), den);
      if (i == j) break;
    }
  Poly out{coef[n - 1]};
  for (std::size_t k = n - 1; k > 0; --k) {
    // out = out * (x - xs[k-1]) + coef[k-1]
    Poly next(out.size() + 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], out[i]);
      next[i] = f.sub(next[i], f.mul(xs[k - 1], out[i]));
    }
    next[0] = f.add(next[0], coef[k - 1]);
    out = std::move(next);
  }
  poly_trim(out);
  return out;
}

Elem resultant(const PrimeField& f, const Poly& a, int da, const Poly& b, int db) {
  const std::size_t n = static_cast<std::size_t>(da + db);
  if (n == 0) return 1;
  Matrix s(f, n, n);
  auto coeff = [](const Poly& p, int i) -> Elem {
    return i >= 0 && static_cast<std::size_t>(i) < p.size() ? p[i] : 0;
  };
  for (int r = 0; r < db; ++r)
    for (int i = 0; i <= da; ++i) s.at(r, r + i) = coeff(a, da - i);
  for (int r = 0; r < da; ++r)
    for (int i = 0; i <= db; ++i) s.at(db + r, r + i) = coeff(b, db - i);
  return determinant(s);
}

}  // namespace terracini
