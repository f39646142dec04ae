#include "terracini/constructions.hpp"

#include <algorithm>
#include <set>

#include "terracini/membership.hpp"
#include "terracini/poly.hpp"

namespace terracini {

const char* curve_kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::RNC: return "rnc";
    case CurveKind::ReducibleRNC: return "reducible_rnc";
    case CurveKind::SmoothConic: return "smooth_conic";
    case CurveKind::PlaneCubic: return "plane_cubic";
    case CurveKind::EllipticQuartic: return "elliptic_quartic";
  }
  return "?";
}

namespace {

bool contains_point(const std::vector<Point>& pts, const Point& p) {
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

// Applies a fresh random projectivity to every point and records it.
void move_by_projectivity(const PrimeField& f, int n, Rng& rng, CurveSample& out) {
  const auto g = random_projectivity(f, n, rng);
  for (auto& p : out.points) p = apply(g, p);
  out.spec.transform.clear();
  for (std::size_t i = 0; i < g.rows(); ++i) out.spec.transform.emplace_back(g.row(i).begin(), g.row(i).end());
}

Vec rnc_coords(const PrimeField& f, int n, Elem t) {
  Vec c(n + 1);
  Elem v = 1;
  for (int i = 0; i <= n; ++i) {
    c[i] = v;
    v = f.mul(v, t);
  }
  return c;
}

// Rank of the gradients of `forms` at y.
std::size_t jacobian_rank(const PrimeField& f, const std::vector<Hypersurface>& forms, const Vec& y) {
  std::vector<Vec> rows;
  for (const auto& h : forms) rows.push_back(evaluate_with_gradient(h, y).gradient);
  return rank(Matrix::from_rows(f, rows, y.size()));
}

// A random element of the span of `basis`.
Vec random_combination(const PrimeField& f, const std::vector<Vec>& basis, std::size_t size, Rng& rng) {
  Vec c(size, 0);
  for (const auto& v : basis) {
    const Elem w = rng.nonzero(f);
    for (std::size_t i = 0; i < size; ++i) c[i] = f.add(c[i], f.mul(w, v[i]));
  }
  return c;
}

// Forms of degree t through `pts` (a basis of the kernel of evaluation).
std::vector<Vec> forms_through(const PrimeField& f, int n, int t, const std::vector<Vec>& pts) {
  const auto& b = monomial_basis(n, t);
  std::vector<Vec> rows;
  for (const auto& p : pts) rows.push_back(monomial_values(f, b, p));
  return right_kernel(Matrix::from_rows(f, rows, b.size()));
}

// ---- quartic elliptic curves on the split quadric y0 y3 = y1 y2 ----
//
// Model chart (1, t, s, st) parametrizes the quadric; a second quadric q1 cuts
// a (2,2) curve, quadratic in t for fixed s.

Hypersurface split_quadric(const PrimeField& f) {
  const auto& b = monomial_basis(3, 2);
  Vec c(b.size(), 0);
  const std::uint8_t y0y3[] = {1, 0, 0, 1};
  const std::uint8_t y1y2[] = {0, 1, 1, 0};
  c[b.index_of(y0y3)] = 1;
  c[b.index_of(y1y2)] = f.neg(1);
  return Hypersurface(f, 3, 2, c);
}

// h(1, t, s, st) as a polynomial in t.
Poly chart_poly_quadric(const PrimeField& f, const Hypersurface& h, Elem s) {
  const auto& b = monomial_basis(3, h.degree());
  Poly p(h.degree() + 1, 0);
  for (std::size_t m = 0; m < b.size(); ++m) {
    const Elem c = h.coeffs()[m];
    if (c == 0) continue;
    const auto tdeg = b.exponent(m, 1) + b.exponent(m, 3);
    const auto sdeg = b.exponent(m, 2) + b.exponent(m, 3);
    p[tdeg] = f.add(p[tdeg], f.mul(c, f.pow(s, sdeg)));
  }
  return p;
}

Vec quadric_chart_point(const PrimeField& f, Elem s, Elem t) { return {1, t, s, f.mul(s, t)}; }

// Symmetric matrix of a quadratic form.
Matrix quadric_matrix(const PrimeField& f, const Hypersurface& q) {
  const auto& b = monomial_basis(3, 2);
  Matrix m(f, 4, 4);
  const Elem half = f.inv(2);
  for (std::size_t k = 0; k < b.size(); ++k) {
    std::vector<int> vars;
    for (int i = 0; i < 4; ++i)
      for (int e = 0; e < b.exponent(k, i); ++e) vars.push_back(i);
    if (vars[0] == vars[1]) m.at(vars[0], vars[0]) = q.coeffs()[k];
    else {
      const Elem c = f.mul(q.coeffs()[k], half);
      m.at(vars[0], vars[1]) = c;
      m.at(vars[1], vars[0]) = c;
    }
  }
  return m;
}

// Q ∩ Q' is a smooth quartic iff det(B + λA) has four distinct roots over the
// algebraic closure, i.e. is squarefree of degree 4 (A invertible).
bool pencil_is_smooth(const PrimeField& f, const Hypersurface& q0, const Hypersurface& q1) {
  const auto a = quadric_matrix(f, q0);
  const auto b = quadric_matrix(f, q1);
  if (determinant(a) == 0) return false;
  Vec xs, ys;
  for (Elem l = 0; l < 5; ++l) {
    Matrix m(f, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m.at(i, j) = f.add(b.at(i, j), f.mul(l, a.at(i, j)));
    xs.push_back(l);
    ys.push_back(determinant(m));
  }
  const auto g = poly_interpolate(f, xs, ys);
  if (poly_degree(g) != 4) return false;
  return poly_degree(poly_gcd(f, g, poly_derivative(f, g))) == 0;
}

struct EllipticModel {
  Hypersurface q0;
  Hypersurface q1;
};

std::optional<EllipticModel> random_elliptic_model(const PrimeField& f, Rng& rng) {
  Vec c(monomial_count(3, 2));
  for (auto& e : c) e = rng.element(f);
  c[0] = rng.nonzero(f);
  EllipticModel m{split_quadric(f), Hypersurface(f, 3, 2, c)};
  if (!pencil_is_smooth(f, m.q0, m.q1)) return std::nullopt;
  return m;
}

// A smooth point of the curve with the given s, if the fibre has a rational one.
std::optional<std::pair<Elem, Elem>> elliptic_point_at(const PrimeField& f, const EllipticModel& m,
                                                       Elem s, Rng& rng) {
  const auto p = chart_poly_quadric(f, m.q1, s);
  if (poly_degree(p) != 2) return std::nullopt;
  const Elem disc = f.sub(f.mul(p[1], p[1]), f.mul(4, f.mul(p[2], p[0])));
  Elem r = 0;
  if (!f.sqrt(disc, r)) return std::nullopt;
  if (rng.below(2)) r = f.neg(r);
  const Elem t = f.div(f.sub(r, p[1]), f.mul(2, p[2]));
  const auto y = quadric_chart_point(f, s, t);
  if (jacobian_rank(f, {m.q0, m.q1}, y) != 2) return std::nullopt;
  return std::make_pair(s, t);
}

// Points with pairwise distinct s.
std::vector<std::pair<Elem, Elem>> elliptic_sample(const PrimeField& f, const EllipticModel& m,
                                                   std::size_t count, Rng& rng) {
  std::vector<std::pair<Elem, Elem>> out;
  std::set<Elem> used;
  std::size_t guard = 0;
  while (out.size() < count) {
    if (++guard > 100 * count + 1000) throw Error("elliptic sampling does not progress");
    const Elem s = rng.element(f);
    if (used.count(s)) continue;
    auto pt = elliptic_point_at(f, m, s, rng);
    if (!pt) continue;
    used.insert(s);
    out.push_back(*pt);
  }
  return out;
}

Vec flatten_pairs(const std::vector<std::pair<Elem, Elem>>& v) {
  Vec out;
  for (auto [a, b] : v) {
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

// ---- Weierstrass cubics Y²Z = X³ + aXZ² + bZ³ ----

Hypersurface weierstrass(const PrimeField& f, Elem a, Elem b) {
  const auto& basis = monomial_basis(2, 3);
  Vec c(basis.size(), 0);
  auto set = [&](std::uint8_t x, std::uint8_t y, std::uint8_t z, Elem v) {
    const std::uint8_t e[] = {x, y, z};
    c[basis.index_of(e)] = v;
  };
  set(0, 2, 1, 1);
  set(3, 0, 0, f.neg(1));
  set(1, 0, 2, f.neg(a));
  set(0, 0, 3, f.neg(b));
  return Hypersurface(f, 2, 3, c);
}

// h(x, Y, 1) as a polynomial in Y.
Poly chart_poly_plane(const PrimeField& f, const Hypersurface& h, Elem x) {
  const auto& b = monomial_basis(2, h.degree());
  Poly p(h.degree() + 1, 0);
  for (std::size_t m = 0; m < b.size(); ++m) {
    const Elem c = h.coeffs()[m];
    if (c == 0) continue;
    p[b.exponent(m, 1)] = f.add(p[b.exponent(m, 1)], f.mul(c, f.pow(x, b.exponent(m, 0))));
  }
  return p;
}

struct CubicModel {
  Elem a = 0;
  Elem b = 0;
  Hypersurface c;
};

CubicModel random_cubic_model(const PrimeField& f, Rng& rng) {
  for (;;) {
    const Elem a = rng.element(f);
    const Elem b = rng.element(f);
    const Elem disc = f.add(f.mul(4, f.pow(a, 3)), f.mul(27, f.mul(b, b)));
    if (disc != 0) return {a, b, weierstrass(f, a, b)};
  }
}

// Points (x, y, 1) with pairwise distinct x.
std::vector<Vec> cubic_sample(const PrimeField& f, const CubicModel& m, std::size_t count, Rng& rng) {
  std::vector<Vec> out;
  std::set<Elem> used;
  std::size_t guard = 0;
  while (out.size() < count) {
    if (++guard > 100 * count + 1000) throw Error("cubic sampling does not progress");
    const Elem x = rng.element(f);
    if (used.count(x)) continue;
    const Elem rhs = f.add(f.add(f.pow(x, 3), f.mul(m.a, x)), m.b);
    Elem y = 0;
    if (rhs == 0 || !f.sqrt(rhs, y)) continue;
    if (rng.below(2)) y = f.neg(y);
    used.insert(x);
    out.push_back({x, y, 1});
  }
  return out;
}

}  // namespace

std::vector<Point> general_points(const PrimeField& f, int n, int x, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < x) {
    auto p = random_point(f, n, rng);
    if (!contains_point(pts, p)) pts.push_back(std::move(p));
  }
  return pts;
}

CurveSample rnc_points(const PrimeField& f, int n, int x, std::uint64_t seed) {
  if (n < 1 || x < 1) throw ParameterOutOfTheoremRange("rnc_points: need n >= 1, x >= 1");
  Rng rng(seed);
  CurveSample out;
  out.spec.kind = n == 2 ? CurveKind::SmoothConic : CurveKind::RNC;
  out.spec.n = n;
  out.spec.degree = n;
  std::set<Elem> used;
  while (static_cast<int>(out.points.size()) < x) {
    const Elem t = rng.element(f);
    if (!used.insert(t).second) continue;
    out.spec.parameters.push_back(t);
    out.points.push_back(Point::normalized(f, rnc_coords(f, n, t)));
  }
  out.smooth.assign(out.points.size(), true);
  move_by_projectivity(f, n, rng, out);
  return out;
}

CurveSample reducible_rnc_points(const PrimeField& f, const std::vector<int>& segments,
                                 const std::vector<int>& allocation, std::uint64_t seed,
                                 int node_points) {
  if (segments.empty() || segments.size() != allocation.size())
    throw Error("reducible_rnc_points: one allocation per segment");
  int n = 0;
  for (int s : segments) {
    if (s < 1) throw Error("reducible_rnc_points: segment degree must be positive");
    n += s;
  }
  const int nodes = static_cast<int>(segments.size()) - 1;
  if (node_points > nodes)
    throw SingularSamplingRequestedButImpossible("SingularSamplingRequestedButImpossible: " +
                                                 std::to_string(node_points) + " node points requested, chain has " +
                                                 std::to_string(nodes) + " nodes");
  Rng rng(seed);
  CurveSample out;
  out.spec.kind = CurveKind::ReducibleRNC;
  out.spec.n = n;
  out.spec.degree = n;
  out.spec.segments = segments;
  // Segment i lives on coordinates [o_i, o_i + n_i]; it meets segment i+1 at e_{o_{i+1}}.
  int offset = 0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    std::set<Elem> used;
    int placed = 0;
    while (placed < allocation[i]) {
      const Elem t = rng.nonzero(f);
      if (!used.insert(t).second) continue;
      Vec c(n + 1, 0);
      const auto seg = rnc_coords(f, segments[i], t);
      std::copy(seg.begin(), seg.end(), c.begin() + offset);
      out.points.push_back(Point::normalized(f, c));
      out.smooth.push_back(true);
      out.spec.parameters.push_back(t);
      ++placed;
    }
    offset += segments[i];
  }
  offset = 0;
  for (int k = 0; k < node_points; ++k) {
    offset += segments[k];
    Vec c(n + 1, 0);
    c[offset] = 1;
    out.points.push_back(Point::normalized(f, c));
    out.smooth.push_back(false);
    out.spec.parameters.push_back(0);
  }
  move_by_projectivity(f, n, rng, out);
  return out;
}

CurveSample elliptic_quartic_points(const PrimeField& f, int d, std::uint64_t seed, int retry_budget) {
  if (d < 6 || d % 2 != 0)
    throw ParameterOutOfTheoremRange("elliptic_quartic_points: d must be even and at least 6");
  const int k = d / 2;
  const std::size_t total = 4 * static_cast<std::size_t>(k);
  CurveSample out;
  bool any_smooth = false;
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    Rng rng(derive_seed({seed, static_cast<std::uint64_t>(attempt)}));
    auto model = random_elliptic_model(f, rng);
    if (!model) {
      out.retries.push_back("attempt " + std::to_string(attempt) + ": quadric pencil is not smooth");
      continue;
    }
    any_smooth = true;
    auto pts = elliptic_sample(f, *model, total - 1, rng);
    std::vector<Vec> ys;
    for (auto [s, t] : pts) ys.push_back(quadric_chart_point(f, s, t));
    const auto& basis = monomial_basis(3, k);
    Hypersurface form(f, 3, k, random_combination(f, forms_through(f, 3, k, ys), basis.size(), rng));
    // F must not contain C: test at a fresh curve point.
    auto probe = elliptic_sample(f, *model, 1, rng).front();
    if (evaluate(form, quadric_chart_point(f, probe.first, probe.second)) == 0) {
      out.retries.push_back("attempt " + std::to_string(attempt) + ": form contains the curve");
      continue;
    }
    // Res_t(F, Q') is a polynomial of degree <= 4k in s vanishing at every s of C ∩ F.
    const int bound = 4 * k;
    Vec xs, vals;
    for (int j = 0; j <= bound; ++j) {
      const Elem s = static_cast<Elem>(j + 1);
      xs.push_back(s);
      vals.push_back(resultant(f, chart_poly_quadric(f, form, s), k, chart_poly_quadric(f, model->q1, s), 2));
    }
    Poly r = poly_interpolate(f, xs, vals);
    bool ok = true;
    for (auto [s, t] : pts) {
      Poly q, rem;
      poly_divmod(f, r, {f.neg(s), 1}, q, rem);
      if (!rem.empty()) ok = false;
      r = std::move(q);
    }
    if (!ok || poly_degree(r) != 1) {
      out.retries.push_back("attempt " + std::to_string(attempt) + ": last intersection point not in the chart");
      continue;
    }
    const Elem s_last = f.neg(f.div(r[0], r[1]));
    const auto g = poly_gcd(f, chart_poly_quadric(f, form, s_last), chart_poly_quadric(f, model->q1, s_last));
    if (poly_degree(g) != 1 ||
        std::any_of(pts.begin(), pts.end(), [&](const auto& p) { return p.first == s_last; })) {
      out.retries.push_back("attempt " + std::to_string(attempt) + ": last point is not a simple intersection");
      continue;
    }
    pts.emplace_back(s_last, f.neg(g[0]));
    ys.push_back(quadric_chart_point(f, s_last, f.neg(g[0])));
    bool transversal = evaluate(form, ys.back()) == 0;
    for (const auto& y : ys) transversal = transversal && jacobian_rank(f, {model->q0, model->q1, form}, y) == 3;
    if (!transversal) {
      out.retries.push_back("attempt " + std::to_string(attempt) + ": F is not transversal to C");
      continue;
    }
    out.spec.kind = CurveKind::EllipticQuartic;
    out.spec.n = 3;
    out.spec.genus = 1;
    out.spec.degree = 4;
    out.spec.forms = {model->q0.coeffs(), model->q1.coeffs(), form.coeffs()};
    out.spec.parameters = flatten_pairs(pts);
    for (const auto& y : ys) out.points.push_back(Point::normalized(f, y));
    out.smooth.assign(out.points.size(), true);
    move_by_projectivity(f, 3, rng, out);
    return out;
  }
  if (!any_smooth) throw SmoothnessCertificationFailed("SmoothnessCertificationFailed: no smooth pencil within budget");
  throw TransversalityFailed("TransversalityFailed: retry budget exhausted");
}

CurveSample elliptic_quartic_free_points(const PrimeField& f, int x, std::uint64_t seed) {
  CurveSample out;
  for (int attempt = 0;; ++attempt) {
    Rng rng(derive_seed({seed, static_cast<std::uint64_t>(attempt)}));
    auto model = random_elliptic_model(f, rng);
    if (!model) {
      out.retries.push_back("attempt " + std::to_string(attempt) + ": quadric pencil is not smooth");
      if (attempt > 64) throw SmoothnessCertificationFailed("SmoothnessCertificationFailed");
      continue;
    }
    const auto pts = elliptic_sample(f, *model, x, rng);
    out.spec.kind = CurveKind::EllipticQuartic;
    out.spec.n = 3;
    out.spec.genus = 1;
    out.spec.degree = 4;
    out.spec.forms = {model->q0.coeffs(), model->q1.coeffs()};
    out.spec.parameters = flatten_pairs(pts);
    for (auto [s, t] : pts) out.points.push_back(Point::normalized(f, quadric_chart_point(f, s, t)));
    out.smooth.assign(out.points.size(), true);
    move_by_projectivity(f, 3, rng, out);
    return out;
  }
}

CurveSample plane_cubic_points(const PrimeField& f, int d, CubicMode mode, std::uint64_t seed, int retry_budget) {
  if (mode == CubicMode::FreePointsOddD) {
    if (d < 7 || d % 2 == 0) throw ParameterOutOfTheoremRange("plane_cubic_points: odd mode needs odd d >= 7");
    return plane_cubic_free_points(f, (3 * d + 1) / 2, seed);
  }
  if (d < 6 || d % 2 != 0) throw ParameterOutOfTheoremRange("plane_cubic_points: even mode needs even d >= 6");
  const int k = d / 2;
  const std::size_t total = 3 * static_cast<std::size_t>(k);
  CurveSample out;
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    Rng rng(derive_seed({seed, static_cast<std::uint64_t>(attempt)}));
    const auto model = random_cubic_model(f, rng);
    auto pts = cubic_sample(f, model, total - 1, rng);
    const auto& basis = monomial_basis(2, k);
    Hypersurface form(f, 2, k, random_combination(f, forms_through(f, 2, k, pts), basis.size(), rng));
    const auto probe = cubic_sample(f, model, 1, rng).front();
    if (evaluate(form, probe) == 0) {
      out.retries.push_back("attempt " + std::to_string(attempt) + ": form contains the cubic");
      continue;
    }
    // Res_Y(T, C) has degree <= 5k in x by the Sylvester bound.
    const int bound = 5 * k;
    Vec xs, vals;
    for (int j = 0; j <= bound; ++j) {
      const Elem x = static_cast<Elem>(j + 1);
      xs.push_back(x);
      vals.push_back(resultant(f, chart_poly_plane(f, form, x), k, chart_poly_plane(f, model.c, x), 2));
    }
    Poly r = poly_interpolate(f, xs, vals);
    bool ok = true;
    for (const auto& p : pts) {
      Poly q, rem;
      poly_divmod(f, r, {f.neg(p[0]), 1}, q, rem);
      if (!rem.empty()) ok = false;
      r = std::move(q);
    }
    if (!ok || poly_degree(r) != 1) {
      out.retries.push_back("attempt " + std::to_string(attempt) + ": last intersection point not in the chart");
      continue;
    }
    const Elem x_last = f.neg(f.div(r[0], r[1]));
    const auto g = poly_gcd(f, chart_poly_plane(f, form, x_last), chart_poly_plane(f, model.c, x_last));
    if (poly_degree(g) != 1 || std::any_of(pts.begin(), pts.end(), [&](const Vec& p) { return p[0] == x_last; })) {
      out.retries.push_back("attempt " + std::to_string(attempt) + ": last point is not a simple intersection");
      continue;
    }
    pts.push_back({x_last, f.neg(g[0]), 1});
    bool transversal = evaluate(form, pts.back()) == 0;
    for (const auto& p : pts) transversal = transversal && jacobian_rank(f, {model.c, form}, p) == 2;
    if (!transversal) {
      out.retries.push_back("attempt " + std::to_string(attempt) + ": T is not transversal to C");
      continue;
    }
    out.spec.kind = CurveKind::PlaneCubic;
    out.spec.n = 2;
    out.spec.genus = 1;
    out.spec.degree = 3;
    out.spec.forms = {model.c.coeffs(), form.coeffs()};
    for (const auto& p : pts) {
      out.spec.parameters.push_back(p[0]);
      out.spec.parameters.push_back(p[1]);
      out.points.push_back(Point::normalized(f, p));
    }
    out.smooth.assign(out.points.size(), true);
    move_by_projectivity(f, 2, rng, out);
    return out;
  }
  throw TransversalityFailed("TransversalityFailed: retry budget exhausted");
}

CurveSample plane_cubic_free_points(const PrimeField& f, int x, std::uint64_t seed) {
  Rng rng(seed);
  const auto model = random_cubic_model(f, rng);
  CurveSample out;
  out.spec.kind = CurveKind::PlaneCubic;
  out.spec.n = 2;
  out.spec.genus = 1;
  out.spec.degree = 3;
  out.spec.forms = {model.c.coeffs()};
  for (const auto& p : cubic_sample(f, model, x, rng)) {
    out.spec.parameters.push_back(p[0]);
    out.spec.parameters.push_back(p[1]);
    out.points.push_back(Point::normalized(f, p));
  }
  out.smooth.assign(out.points.size(), true);
  move_by_projectivity(f, 2, rng, out);
  return out;
}

CurveSample conic_points(const PrimeField& f, int n, int x, std::uint64_t seed) {
  if (n < 2) throw ParameterOutOfTheoremRange("conic_points: n must be at least 2");
  Rng rng(seed);
  CurveSample out;
  out.spec.kind = CurveKind::SmoothConic;
  out.spec.n = n;
  out.spec.degree = 2;
  // The conic (1, t, t²) in the plane x3 = … = xn = 0.
  std::set<Elem> used;
  while (static_cast<int>(out.points.size()) < x) {
    const Elem t = rng.element(f);
    if (!used.insert(t).second) continue;
    Vec c(n + 1, 0);
    c[0] = 1;
    c[1] = t;
    c[2] = f.mul(t, t);
    out.spec.parameters.push_back(t);
    out.points.push_back(Point::normalized(f, c));
  }
  out.smooth.assign(out.points.size(), true);
  move_by_projectivity(f, n, rng, out);
  return out;
}

std::vector<Point> line_union_points(const PrimeField& f, int n, const std::vector<int>& counts,
                                     std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> out;
  for (int c : counts) {
    const auto a = random_point(f, n, rng);
    const auto b = random_point(f, n, rng);
    int placed = 0;
    while (placed < c) {
      const Elem t = rng.element(f);
      Vec v(n + 1);
      for (int i = 0; i <= n; ++i) v[i] = f.add(a.coords()[i], f.mul(t, b.coords()[i]));
      if (std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; })) continue;
      auto p = Point::normalized(f, v);
      if (contains_point(out, p)) continue;
      out.push_back(std::move(p));
      ++placed;
    }
  }
  return out;
}

namespace {

// A random point with the listed coordinates zero and, if `one` >= 0, that coordinate 1.
Point point_with(const PrimeField& f, int n, std::initializer_list<int> zeros, int one, Rng& rng) {
  for (;;) {
    Vec c(n + 1);
    for (auto& e : c) e = rng.element(f);
    for (int z : zeros) c[z] = 0;
    if (one >= 0) c[one] = 1;
    if (std::any_of(c.begin(), c.end(), [](Elem e) { return e != 0; })) return Point::normalized(f, c);
  }
}

std::vector<Point> ai0_configuration(const PrimeField& f, int n, int d, int x, Rng& rng,
                                     bool collinear_variant) {
  std::vector<Point> s;
  auto push = [&](Point p) {
    if (!contains_point(s, p)) s.push_back(std::move(p));
  };
  if (n == 2) {
    // L = {x2 = 0}, M = {x0 = 0}, N = {x1 = 0}; M ∩ N = (0:0:1).
    push(Point::normalized(f, {0, 0, 1}));
    while (static_cast<int>(s.size()) < x) push(Point::normalized(f, {1, rng.nonzero(f), 0}));
    return s;
  }
  // H = {x0 = 0}, K = {x1 = 0}, U = {x2 = 0}.
  if (d == 3 && !collinear_variant) {
    // One point of H ∩ K, n of H ∩ U, one of K ∩ U off H.
    push(point_with(f, n, {0, 1}, -1, rng));
    while (static_cast<int>(s.size()) < n + 1) push(point_with(f, n, {0, 2}, -1, rng));
    push(point_with(f, n, {1, 2}, 0, rng));
    while (static_cast<int>(s.size()) < x) push(point_with(f, n, {0, 1}, -1, rng));
    return s;
  }
  if (d == 3) {
    // Three collinear points of H ∩ K, n-3 more spanning H ∩ K, one of H ∩ U,
    // one of K ∩ U off H. The line carries 2·3 ≥ d+2.
    const auto a = point_with(f, n, {0, 1}, -1, rng);
    const auto b = point_with(f, n, {0, 1}, -1, rng);
    push(a);
    push(b);
    while (s.size() < 3) {
      Vec v(n + 1);
      const Elem t = rng.nonzero(f);
      for (int i = 0; i <= n; ++i) v[i] = f.add(a.coords()[i], f.mul(t, b.coords()[i]));
      push(Point::normalized(f, v));
    }
    while (static_cast<int>(s.size()) < n) push(point_with(f, n, {0, 1}, -1, rng));
    push(point_with(f, n, {0, 2}, -1, rng));
    push(point_with(f, n, {1, 2}, 0, rng));
    while (static_cast<int>(s.size()) < x) push(point_with(f, n, {0, 1}, -1, rng));
    return s;
  }
  const auto a = point_with(f, n, {0}, -1, rng);
  const auto b = point_with(f, n, {0}, -1, rng);
  while (static_cast<int>(s.size()) < x - n + 1) {
    const Elem t = rng.element(f);
    Vec v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = f.add(a.coords()[i], f.mul(t, b.coords()[i]));
    if (std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; })) continue;
    push(Point::normalized(f, v));
  }
  while (static_cast<int>(s.size()) < x - 1) push(point_with(f, n, {0}, -1, rng));
  push(point_with(f, n, {1, 2}, 0, rng));
  return s;
}

}  // namespace

std::vector<Point> ai0_witness(const PrimeField& f, int n, int d, int x, std::uint64_t seed) {
  if (n < 2 || d < 3 || (n == 2 && d == 3) || x < n + (d + 1) / 2)
    throw ParameterOutOfTheoremRange("ParameterOutOfTheoremRange: need n >= 2, d >= 3, (n,d) != (2,3), x >= n + ceil(d/2)");
  // For d = 3 and n >= 5 the layout with general points has h¹ = 0; the
  // collinear variant takes over after the first failed attempt.
  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    Rng rng(derive_seed({seed, attempt}));
    auto s = ai0_configuration(f, n, d, x, rng, d == 3 && attempt > 0);
    const auto g = random_projectivity(f, n, rng);
    for (auto& p : s) p = apply(g, p);
    if (is_terracini(f, s, d).terracini) return s;
  }
  throw Error("ai0_witness: construction did not verify");
}

std::int64_t curve_side_oracle(const CurveSpec& spec, std::size_t x, int d) {
  const std::int64_t e = static_cast<std::int64_t>(spec.degree) * d - 2 * static_cast<std::int64_t>(x);
  switch (spec.kind) {
    case CurveKind::RNC:
    case CurveKind::SmoothConic:
      return std::max<std::int64_t>(0, -e - 1);
    case CurveKind::PlaneCubic:
    case CurveKind::EllipticQuartic:
      if (e > 0) return 0;
      return e == 0 ? 1 : -e;
    case CurveKind::ReducibleRNC:
      break;
  }
  throw Error("curve_side_oracle: no formula for reducible chains");
}

}  // namespace terracini
