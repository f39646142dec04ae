#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "terracini/scheme.hpp"

using namespace terracini;
using testutil::pt;

namespace {

Hypersurface random_form(const PrimeField& f, int n, int t, Rng& rng) {
  Vec c(monomial_count(n, t));
  for (auto& e : c) e = rng.element(f);
  c[0] = 1;
  return Hypersurface(f, n, t, c);
}

// A random form of degree t through the given points (solve the linear system).
Hypersurface form_through(const PrimeField& f, int n, int t, const std::vector<Point>& pts,
                          Rng& rng) {
  const auto& b = monomial_basis(n, t);
  std::vector<Vec> rows;
  for (const auto& p : pts) rows.push_back(monomial_values(f, b, p.coords()));
  auto ker = right_kernel(Matrix::from_rows(f, rows, b.size()));
  Vec c(b.size(), 0);
  for (const auto& v : ker) {
    const Elem s = rng.element(f);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(c[i], f.mul(s, v[i]));
  }
  return Hypersurface(f, n, t, c);
}

}  // namespace

TEST_SUITE("schemes") {
  TEST_CASE("double scheme degrees") {
    PrimeField f;
    CHECK(double_scheme(f, testutil::random_points(f, 2, 5, 1)).degree() == 15);
    CHECK(double_scheme(f, testutil::random_points(f, 3, 12, 2)).degree() == 48);
    CHECK(double_scheme(f, testutil::random_points(f, 4, 1, 3)).degree() == 5);
    auto pts = testutil::random_points(f, 2, 3, 4);
    pts.push_back(pts[1]);
    CHECK_THROWS_AS(double_scheme(f, pts), DuplicatePoint);
  }

  TEST_CASE("jets reject the Euler direction") {
    PrimeField f;
    auto p = pt(f, {1, 2, 3});
    CHECK_THROWS(Component::jet(f, p, {3, 6, 9}));
    CHECK(Component::jet(f, p, {0, 1, 0}).degree() == 2);
  }

  TEST_CASE("residual of a double point by a smooth hyperplane is the point") {
    PrimeField f;
    auto p = pt(f, {1, 2, 0});
    ZeroDimScheme z(f, 2, {Component::doubled(p)});
    auto h = Hypersurface::linear(f, {0, 0, 1});
    auto r = residual(z, h);
    REQUIRE(r.components().size() == 1);
    CHECK(r.components()[0].kind == ComponentKind::Simple);
    CHECK(intersection_degree_hypersurface(z, h) == 2);
    CHECK(oracle::residual_degree_oracle(z, h, 4) == 1);
  }

  TEST_CASE("a jet inside a hyperplane has empty residual") {
    PrimeField f;
    auto p = pt(f, {1, 2, 0, 0});
    ZeroDimScheme z(f, 3, {Component::jet(f, p, {0, 0, 1, 0})});
    auto h = Hypersurface::linear(f, {0, 0, 0, 1});
    CHECK(residual(z, h).empty());
    CHECK(oracle::residual_degree_oracle(z, h, 3) == 0);
    // A transversal jet leaves its point.
    ZeroDimScheme w(f, 3, {Component::jet(f, p, {0, 0, 0, 1})});
    CHECK(residual(w, h).degree() == 1);
    CHECK(oracle::residual_degree_oracle(w, h, 3) == 1);
  }

  TEST_CASE("double point on a double plane has empty residual") {
    PrimeField f;
    auto p = pt(f, {1, 5, 7, 0});
    ZeroDimScheme z(f, 3, {Component::doubled(p)});
    auto h = Hypersurface::linear(f, {0, 0, 0, 1}).power(2);
    CHECK(residual(z, h).empty());
    CHECK(oracle::residual_degree_oracle(z, h, 4) == 0);
  }

  TEST_CASE("residual rules agree with the ideal-quotient oracle") {
    PrimeField f;
    Rng rng(21);
    for (int trial = 0; trial < 12; ++trial) {
      const int n = 2 + trial % 2;
      auto pts = testutil::random_points(f, n, 4, 500 + trial);
      ZeroDimScheme z(f, n);
      z.add(Component::doubled(pts[0]));
      z.add(Component::jet(f, pts[1], random_point(f, n, rng).coords()));
      z.add(Component::simple(pts[2]));
      z.add(Component::jet(f, pts[3], random_point(f, n, rng).coords()));
      // Form through some of the support.
      std::vector<Point> through{pts[0], pts[1]};
      const int t = 1 + trial % 2;
      if (t == 2) through.push_back(pts[2]);
      auto h = form_through(f, n, t, through, rng);
      const auto r = residual(z, h);
      CHECK(static_cast<std::int64_t>(r.degree()) ==
            oracle::residual_degree_oracle(z, h, static_cast<int>(z.degree())));
      CHECK(r.degree() + intersection_degree_hypersurface(z, h) == z.degree());
    }
  }

  TEST_CASE("residual is the identity away from the support and monotone") {
    PrimeField f;
    Rng rng(22);
    auto pts = testutil::random_points(f, 3, 5, 23);
    auto z = double_scheme(f, pts);
    auto far = random_form(f, 3, 2, rng);
    CHECK(residual(z, far).components() == z.components());
    auto h = form_through(f, 3, 1, {pts[0], pts[1], pts[2]}, rng);
    ZeroDimScheme w(f, 3, {Component::simple(pts[0]), Component::doubled(pts[1]),
                           Component::jet(f, pts[3], {0, 1, 0, 0})});
    REQUIRE(is_subscheme(w, z));
    CHECK(is_subscheme(residual(w, h), residual(z, h)));
  }

  TEST_CASE("intersection with lines") {
    PrimeField f;
    auto a = pt(f, {1, 0, 0});
    auto b = pt(f, {0, 1, 0});
    ZeroDimScheme six(f, 2);
    for (std::int64_t t = 1; t <= 6; ++t) six.add(Component::simple(pt(f, {1, t, 0})));
    CHECK(intersection_degree_line(six, a, b) == 6);
    ZeroDimScheme dbl(f, 2, {Component::doubled(pt(f, {1, 3, 0})), Component::doubled(pt(f, {1, 1, 1}))});
    CHECK(intersection_degree_line(dbl, a, b) == 2);
    ZeroDimScheme jt(f, 2, {Component::jet(f, pt(f, {1, 3, 0}), {0, 1, 0})});
    CHECK(intersection_degree_line(jt, a, b) == 2);
    ZeroDimScheme jx(f, 2, {Component::jet(f, pt(f, {1, 3, 0}), {0, 0, 1})});
    CHECK(intersection_degree_line(jx, a, b) == 1);
    CHECK_THROWS_AS(intersection_degree_line(jx, a, a), DegenerateLine);
  }

  TEST_CASE("hypersurface intersection of double points") {
    PrimeField f;
    Rng rng(24);
    auto p = pt(f, {1, 2, 3, 4});
    ZeroDimScheme z(f, 3, {Component::doubled(p)});
    auto h = form_through(f, 3, 2, {p}, rng);
    CHECK(intersection_degree_hypersurface(z, h) == 3);
    ZeroDimScheme j(f, 3, {Component::jet(f, random_point(f, 3, rng), {0, 1, 0, 0})});
    CHECK(intersection_degree_hypersurface(j, h) == 0);
  }

  TEST_CASE("double points on a twisted cubic against a quadric containing it") {
    // x0 x2 - x1^2 contains t -> (1, t, t^2, t^3); degree n per point, oracle agrees.
    PrimeField f;
    std::vector<Point> s;
    for (std::int64_t t = 2; t <= 6; ++t) s.push_back(pt(f, {1, t, t * t, t * t * t}));
    auto z = double_scheme(f, s);
    const auto& b = monomial_basis(3, 2);
    Vec c(b.size(), 0);
    const std::uint8_t x0x2[] = {1, 0, 1, 0};
    const std::uint8_t x1sq[] = {0, 2, 0, 0};
    c[b.index_of(x0x2)] = 1;
    c[b.index_of(x1sq)] = f.neg(1);
    Hypersurface q(f, 3, 2, c);
    CHECK(intersection_degree_hypersurface(z, q) == 15);
    CHECK(oracle::residual_degree_oracle(z, q, 4) == 5);
  }

  TEST_CASE("restriction to a plane") {
    PrimeField f;
    auto plane = Subspace::hyperplane(f, {0, 0, 0, 1});
    ZeroDimScheme z(f, 3, {Component::doubled(pt(f, {1, 2, 3, 0})),
                           Component::jet(f, pt(f, {1, 1, 1, 0}), {0, 1, 0, 0}),
                           Component::jet(f, pt(f, {1, 5, 1, 0}), {0, 0, 0, 1}),
                           Component::simple(pt(f, {1, 1, 1, 1}))});
    auto r = restrict_to_subspace(z, plane);
    CHECK(r.n() == 2);
    CHECK(r.degree() == 3 + 2 + 1);
    CHECK(intersection_degree_subspace(z, plane) == 6);
    CHECK(scheme_span_dim(z) == 3);
    CHECK(scheme_span_dim(restrict_to_subspace(r, Subspace::hyperplane(f, {0, 0, 1}))) <= 1);
  }
}
