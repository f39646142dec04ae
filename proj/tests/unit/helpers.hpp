#pragma once

#include <vector>

#include "terracini/scheme.hpp"

namespace testutil {

inline std::vector<terracini::Point> random_points(const terracini::PrimeField& f, int n, int x,
                                                   std::uint64_t seed) {
  terracini::Rng rng(seed);
  std::vector<terracini::Point> pts;
  while (static_cast<int>(pts.size()) < x) {
    auto p = terracini::random_point(f, n, rng);
    bool dup = false;
    for (const auto& q : pts) dup = dup || q == p;
    if (!dup) pts.push_back(p);
  }
  return pts;
}

inline terracini::Point pt(const terracini::PrimeField& f, std::vector<std::int64_t> c) {
  terracini::Vec v;
  for (auto x : c) v.push_back(f.reduce(x));
  return terracini::Point::normalized(f, v);
}

// Seeded scheme mixing simple, jet and double components; about a third of
// them put every base point on one line so that h¹ > 0 shows up often.
inline terracini::ZeroDimScheme seeded_scheme(const terracini::PrimeField& f, int n, int d, std::uint64_t seed) {
  using namespace terracini;
  Rng rng(seed);
  const auto cap = static_cast<std::uint64_t>(monomial_count(n, d) / (n + 1) + 3);
  const auto k = 1 + rng.below(cap);
  const bool on_line = rng.below(3) == 0;
  const auto a = random_point(f, n, rng), b = random_point(f, n, rng);
  ZeroDimScheme z(f, n);
  while (z.components().size() < k) {
    Point p = random_point(f, n, rng);
    if (on_line) {
      const Elem s = rng.element(f), t = rng.nonzero(f);
      Vec v(n + 1);
      for (int i = 0; i <= n; ++i) v[i] = f.add(f.mul(s, a.coords()[i]), f.mul(t, b.coords()[i]));
      p = Point::normalized(f, v);
    }
    bool dup = false;
    for (const auto& c : z.components()) dup = dup || c.base == p;
    if (dup) continue;
    switch (rng.below(3)) {
      case 0: z.add(Component::simple(p)); break;
      case 1: z.add(Component::doubled(p)); break;
      default: {
        Vec v(n + 1);
        for (auto& e : v) e = rng.element(f);
        if (!normalize_direction(f, p, v)) continue;
        z.add(Component::jet(f, p, v));
      }
    }
  }
  return z;
}

}  // namespace testutil
