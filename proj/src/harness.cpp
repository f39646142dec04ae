#include "terracini/harness.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <thread>

namespace terracini {

namespace {

// ---------------------------------------------------------------------------
// Plumbing

using Builder = std::function<std::vector<Point>(const PrimeField&, std::uint64_t)>;

struct Ctx {
  std::vector<PrimeField> fields;
  std::size_t budget;
};

using TrialFn = std::function<Json(const Ctx&, std::uint64_t seed)>;

struct Trial {
  std::string generator;
  TrialFn run;
};

struct Cell {
  Json params;
  std::string kind;
  std::string expectation;
  std::vector<Trial> trials;
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<int> range(int a, int b) {
  std::vector<int> v;
  for (int i = a; i <= b; ++i) v.push_back(i);
  return v;
}

Json config_json(const SuiteConfig& c) {
  return {{"suite", c.suite},   {"n", c.n_values},         {"d", c.d_values},
          {"x", c.x_values},    {"trials", c.trials},      {"seed", c.seed},
          {"primes", c.primes}, {"budget", c.budget}};
}

// ---------------------------------------------------------------------------
// Point-set generators

void append_general(const PrimeField& f, int n, std::vector<Point>& pts, int count, Rng& rng) {
  int added = 0;
  while (added < count) {
    auto p = random_point(f, n, rng);
    if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
    pts.push_back(std::move(p));
    ++added;
  }
}

// k points of a random linear subspace of projective dimension m.
void append_in_subspace(const PrimeField& f, int n, int m, std::vector<Point>& pts, int k, Rng& rng) {
  std::vector<Vec> basis;
  for (int i = 0; i <= m; ++i) basis.push_back(random_point(f, n, rng).coords());
  int added = 0;
  while (added < k) {
    Vec v(n + 1, 0);
    for (const auto& b : basis) {
      const Elem w = rng.element(f);
      for (int i = 0; i <= n; ++i) v[i] = f.add(v[i], f.mul(w, b[i]));
    }
    if (std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; })) continue;
    auto p = Point::normalized(f, v);
    if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
    pts.push_back(std::move(p));
    ++added;
  }
}

Builder uniform(int n, int x) {
  return [=](const PrimeField& f, std::uint64_t seed) { return general_points(f, n, x, seed); };
}

// k points on a random m-dimensional subspace, the rest general.
Builder augmented(int n, int x, int m, int k) {
  return [=](const PrimeField& f, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Point> pts;
    append_in_subspace(f, n, m, pts, k, rng);
    append_general(f, n, pts, x - k, rng);
    return pts;
  };
}

Builder conic_augmented(int n, int x, int k) {
  return [=](const PrimeField& f, std::uint64_t seed) {
    auto pts = conic_points(f, n, k, seed).points;
    Rng rng(derive_seed({seed, 1}));
    append_general(f, n, pts, x - k, rng);
    return pts;
  };
}

Builder rnc(int n, int x) {
  return [=](const PrimeField& f, std::uint64_t seed) { return rnc_points(f, n, x, seed).points; };
}

// base points of a rational normal curve plus x - base general points.
Builder rnc_plus(int n, int x, int base) {
  return [=](const PrimeField& f, std::uint64_t seed) {
    auto pts = rnc_points(f, n, base, seed).points;
    Rng rng(derive_seed({seed, 2}));
    append_general(f, n, pts, x - base, rng);
    return pts;
  };
}

// x points of a rational normal curve with the first j moved off it.
Builder perturbed_rnc(int n, int x, int j) {
  return [=](const PrimeField& f, std::uint64_t seed) {
    auto pts = rnc_points(f, n, x - j, seed).points;
    Rng rng(derive_seed({seed, 3}));
    append_general(f, n, pts, j, rng);
    return pts;
  };
}

Builder elliptic_free(int x) {
  return [=](const PrimeField& f, std::uint64_t seed) {
    return elliptic_quartic_free_points(f, x, seed).points;
  };
}

Builder cubic_free(int x) {
  return [=](const PrimeField& f, std::uint64_t seed) {
    return plane_cubic_free_points(f, x, seed).points;
  };
}

// Two lines of P² through a common point q: a points on one, b on the other,
// q itself when `with_node`.
Builder line_pair(int a, int b, bool with_node) {
  return [=](const PrimeField& f, std::uint64_t seed) {
    Rng rng(seed);
    const auto q = random_point(f, 2, rng);
    std::vector<Point> pts;
    if (with_node) pts.push_back(q);
    for (int count : {a, b}) {
      const auto r = random_point(f, 2, rng);
      int added = 0;
      while (added < count) {
        Vec v(3);
        const Elem t = rng.element(f);
        for (int i = 0; i < 3; ++i) v[i] = f.add(r.coords()[i], f.mul(t, q.coords()[i]));
        auto p = Point::normalized(f, v);
        if (p == q || std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
        pts.push_back(std::move(p));
        ++added;
      }
    }
    return pts;
  };
}

// Random composition of n into at least two parts.
std::vector<int> random_segments(int n, Rng& rng) {
  std::vector<int> s;
  int left = n;
  while (left > 0) {
    int part = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(left)));
    if (s.empty() && part == n) part = n - 1;
    s.push_back(part);
    left -= part;
  }
  return s;
}

Builder random_reducible(int n, int x) {
  return [=](const PrimeField& f, std::uint64_t seed) {
    Rng rng(derive_seed({seed, 4}));
    auto segs = random_segments(n, rng);
    std::vector<int> alloc(segs.size(), 1);
    for (int left = x - static_cast<int>(segs.size()); left > 0; --left)
      ++alloc[rng.below(alloc.size())];
    return reducible_rnc_points(f, segs, alloc, seed, 0).points;
  };
}

// Structured generators shared by the emptiness suites, for sets of x points
// in Pⁿ and degree d.
std::vector<std::pair<std::string, Builder>> structured(int n, int d, int x) {
  std::vector<std::pair<std::string, Builder>> out;
  out.emplace_back("rnc", rnc(n, x));
  if (x > n + 1) {
    out.emplace_back("perturbed_rnc_1", perturbed_rnc(n, x, 1));
    out.emplace_back("perturbed_rnc_2", perturbed_rnc(n, x, 2));
  }
  if (x >= n + 1) {
    out.emplace_back("reducible_rnc", random_reducible(n, x));
    out.emplace_back("reducible_rnc_b", random_reducible(n, x));
  }
  // Collinear-augmented around the line threshold ⌈d/2⌉ + 1.
  const int line_hit = ceil_div(d, 2) + 1;
  // Clamped to x; a set that no longer spans is refuted as span deficient.
  std::set<int> line_counts;
  for (int k : {line_hit - 1, line_hit, line_hit + 1})
    if (std::min(k, x) >= 3) line_counts.insert(std::min(k, x));
  for (int k : line_counts) out.emplace_back("collinear_" + std::to_string(k), augmented(n, x, 1, k));
  if (n >= 3)
    for (int k : {x - 1, x - 2})
      if (k >= 3 && x - k >= n - 2) out.emplace_back("coplanar_" + std::to_string(k), augmented(n, x, 2, k));
  for (int k : {d + 1, d + 2})
    if (k >= 5 && k <= x - (n - 2)) out.emplace_back("conic_" + std::to_string(k), conic_augmented(n, x, k));
  if (n == 3 && x >= 8) out.emplace_back("elliptic", elliptic_free(x));
  if (n == 2 && x >= 4) out.emplace_back("plane_cubic", cubic_free(x));
  return out;
}

// ---------------------------------------------------------------------------
// Trial bodies

enum class Target { Terracini, Minimal };

Json base_record(const MembershipCertificate& c) {
  return {{"x", c.points.size()}, {"h0", c.h0}, {"h1", c.h1}, {"span_dim", c.span_dim}};
}

// A trial of an emptiness suite: no set may be Terracini (Target::Terracini)
// or minimally Terracini (Target::Minimal). Every negative carries its reason.
TrialFn emptiness(Builder b, int d, Target target, bool classify_critical) {
  return [=](const Ctx& ctx, std::uint64_t seed) {
    const auto& f = ctx.fields.front();
    const auto s = b(f, seed);
    const auto c = is_minimally_terracini(f, s, d);
    Json r = base_record(c);
    r["ok"] = true;
    if (!c.terracini) {
      r["verdict"] = "not_terracini";
      r["refutation"] = c.refutation;
      return r;
    }
    if (target == Target::Terracini || c.minimal) {
      r["verdict"] = c.minimal ? "member" : "terracini";
      r["ok"] = false;
      r["counterexample"] = true;
      r["certificate"] = to_json(c);
      return r;
    }
    r["verdict"] = "terracini_not_minimal";
    r["refutation"] = c.refutation;
    r["violating_subset"] = c.violating_subset;
    if (classify_critical) {
      const auto crit = find_critical(f, s, d);
      r["critical_h1"] = crit.h1;
      r["critical_degree"] = crit.scheme.degree();
      if (crit.h1 != 1) r["ok"] = false;
      try {
        const auto w = classify(crit.scheme, d, ctx.budget);
        r["witness"] = to_json(w);
        if (recheck_witness(crit.scheme, w) < w.threshold && w.kind != WitnessKind::PlaneCubicCandidate)
          r["ok"] = false;
      } catch (const ClassificationIncomplete& e) {
        r["ok"] = false;
        r["classification_incomplete"] = e.what();
        r["critical_scheme"] = to_json(crit.scheme);
      } catch (const PreconditionViolated& e) {
        r["ok"] = false;
        r["classification_precondition"] = e.what();
        r["critical_scheme"] = to_json(crit.scheme);
      }
    }
    return r;
  };
}

// Structural checks on a minimal member: the bounds and the critical scheme.
void member_checks(const PrimeField& f, const MembershipCertificate& c, Json& r) {
  Json bounds = Json::array();
  for (const auto& v : check_member_bounds(f, c)) {
    bounds.push_back(to_json(v));
    if (!v.passed) r["ok"] = false;
  }
  r["bounds"] = bounds;
  const auto crit = find_critical(f, c.points, c.d);
  r["critical"] = {{"h1", crit.h1},
                   {"full_support", crit.full_support},
                   {"degree", crit.scheme.degree()}};
  if (crit.h1 != 1 || !crit.full_support) r["ok"] = false;
}

struct MemberExpect {
  bool minimal = true;
  std::optional<std::int64_t> h1;
};

// A positive trial: the construction must be Terracini, minimally so when
// asked, and give the same verdict over every configured prime.
TrialFn member(Builder b, int d, MemberExpect e) {
  return [=](const Ctx& ctx, std::uint64_t seed) {
    const auto& f = ctx.fields.front();
    const auto s = b(f, seed);
    const auto c = e.minimal ? is_minimally_terracini(f, s, d) : is_terracini(f, s, d);
    Json r = base_record(c);
    r["ok"] = e.minimal ? c.minimal : c.terracini;
    r["verdict"] = c.minimal ? "member" : c.terracini ? (c.minimality_checked ? "terracini_not_minimal" : "terracini")
                                                      : "not_terracini";
    if (!c.refutation.empty()) r["refutation"] = c.refutation;
    if (e.h1 && c.h1 != *e.h1) {
      r["ok"] = false;
      r["expected_h1"] = *e.h1;
    }
    r["certificate"] = to_json(c);
    if (c.minimal) member_checks(f, c, r);
    Json other = Json::array();
    for (std::size_t k = 1; k < ctx.fields.size(); ++k) {
      const auto& g = ctx.fields[k];
      const auto s2 = b(g, seed);
      const auto c2 = e.minimal ? is_minimally_terracini(g, s2, d) : is_terracini(g, s2, d);
      other.push_back({{"prime", g.modulus()}, {"h0", c2.h0}, {"h1", c2.h1}, {"terracini", c2.terracini},
                       {"minimal", c2.minimal}});
      if (c2.terracini != c.terracini || c2.minimal != c.minimal || c2.h1 != c.h1) r["ok"] = false;
    }
    r["other_primes"] = other;
    return r;
  };
}

// h¹(2S, d) must equal `want`.
TrialFn exact_h1(Builder b, int d, std::int64_t want) {
  return [=](const Ctx& ctx, std::uint64_t seed) {
    const auto& f = ctx.fields.front();
    const auto s = b(f, seed);
    const auto rep = cohomology(double_scheme(f, s), d);
    return Json{{"x", s.size()}, {"h0", rep.h0}, {"h1", rep.h1}, {"ok", rep.h1 == want},
                {"verdict", rep.h1 == 0 ? "h1 = 0" : "h1 > 0"}};
  };
}

// ---------------------------------------------------------------------------
// Suites

struct Plan {
  std::vector<Cell> cells;
};

void add_random(Cell& cell, int trials, const Builder& b, int d, Target t, bool cls) {
  for (int i = 0; i < trials; ++i) cell.trials.push_back({"uniform", emptiness(b, d, t, cls)});
}

void add_structured(Cell& cell, int n, int d, int x, Target t, bool cls) {
  for (auto& [name, b] : structured(n, d, x)) cell.trials.push_back({name, emptiness(b, d, t, cls)});
}

Cell emptiness_cell(int n, int d, int x, int trials, Target t, bool cls, const std::string& expectation) {
  Cell c{{{"n", n}, {"d", d}, {"x", x}}, "emptiness", expectation, {}};
  add_structured(c, n, d, x, t, cls);
  add_random(c, trials, uniform(n, x), d, t, cls);
  return c;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterOutOfTheoremRange("ParameterOutOfTheoremRange: " + what);
}

Plan plan_ai0(const SuiteConfig& cfg) {
  Plan p;
  for (int n : cfg.n_values)
    for (int d : cfg.d_values) {
      require(n >= 2 && d >= 3, "ai0 needs n >= 2, d >= 3");
      // Plane cubics: no Terracini set at all, covered by the unit tests.
      if (n == 2 && d == 3) continue;
      const int x0 = n + ceil_div(d, 2);
      auto xs = cfg.x_values.empty() ? range(n + 1, x0 + 3) : cfg.x_values;
      for (int x : xs) {
        if (x < x0) {
          p.cells.push_back(emptiness_cell(n, d, x, cfg.trials, Target::Terracini, false,
                                           "no Terracini set below n + ceil(d/2)"));
        } else {
          Cell c{{{"n", n}, {"d", d}, {"x", x}}, "positive", "existence construction is Terracini", {}};
          for (int i = 0; i < 2; ++i)
            c.trials.push_back({"ai0_witness", member([=](const PrimeField& f, std::uint64_t s) {
                                                 return ai0_witness(f, n, d, x, s);
                                               }, d, {false, {}})});
          p.cells.push_back(std::move(c));
        }
      }
    }
  return p;
}

Plan plan_43(const SuiteConfig& cfg) {
  Plan p;
  for (int n : cfg.n_values)
    for (int d : cfg.d_values) {
      require(n >= 2 && d >= 2, "Proposition needs n, d >= 2");
      const int top = n + ceil_div(d, 2) - 1;
      auto xs = cfg.x_values.empty() ? range(n + 1, top) : cfg.x_values;
      for (int x : xs) {
        require(x <= top, "x must be at most n + ceil(d/2) - 1");
        p.cells.push_back(emptiness_cell(n, d, x, cfg.trials, Target::Terracini, false,
                                         "no Terracini set with x <= n + ceil(d/2) - 1"));
      }
    }
  return p;
}

// The uniqueness of d for a minimal member.
TrialFn rob1_trial(Builder b, int d) {
  return [=](const Ctx& ctx, std::uint64_t seed) {
    const auto& f = ctx.fields.front();
    const auto s = b(f, seed);
    const auto c = is_minimally_terracini(f, s, d);
    Json r = base_record(c);
    r["ok"] = c.minimal;
    r["verdict"] = c.minimal ? "member" : "not_member";
    if (!c.minimal) return r;
    member_checks(f, c, r);
    const auto next = cohomology(double_scheme(f, s), d + 1);
    r["h1_d_plus_1"] = next.h1;
    if (next.h1 != 0) r["ok"] = false;
    Json higher = Json::array(), lower = Json::array();
    for (int t = d + 1; t <= d + 3; ++t) {
      const auto ct = is_terracini(f, s, t);
      higher.push_back({{"t", t}, {"terracini", ct.terracini}});
      if (ct.terracini) r["ok"] = false;
    }
    for (int t = 2; t < d; ++t) {
      const auto ct = is_minimally_terracini(f, s, t);
      lower.push_back({{"t", t}, {"minimal", ct.minimal}, {"refutation", ct.refutation}});
      if (ct.minimal) r["ok"] = false;
    }
    r["higher_t"] = higher;
    r["lower_t"] = lower;
    return r;
  };
}

Plan plan_rob1(const SuiteConfig& cfg) {
  Plan p;
  const int seeds = std::max(1, cfg.trials);
  for (int n : cfg.n_values)
    for (int d : cfg.d_values) {
      require(n >= 2 && d >= 4, "rob1 grid needs n >= 2, d >= 4");
      const int x = 1 + ceil_div(n * d, 2);
      Cell c{{{"n", n}, {"d", d}, {"x", x}}, "positive",
             "members: h1(2S, d+1) = 0, not Terracini above d, not minimal below d", {}};
      for (int i = 0; i < seeds; ++i) c.trials.push_back({"rnc", rob1_trial(rnc(n, x), d)});
      if (n == 2)
        for (int i = 0; i < seeds; ++i)
          c.trials.push_back({"conic", rob1_trial([=](const PrimeField& f, std::uint64_t s) {
                                return conic_points(f, 2, d + 1, s).points;
                              }, d)});
      if (n == 3 && d % 2 == 0 && d >= 6)
        for (int i = 0; i < seeds; ++i)
          c.trials.push_back({"elliptic_2d", rob1_trial([=](const PrimeField& f, std::uint64_t s) {
                                return elliptic_quartic_points(f, d, s).points;
                              }, d)});
      p.cells.push_back(std::move(c));
    }
  return p;
}

Plan plan_a90(const SuiteConfig& cfg) {
  Plan p;
  const int seeds = std::max(1, cfg.trials);
  for (int n : cfg.n_values)
    for (int d : cfg.d_values) {
      require(n >= 2 && d >= 3, "a9.0 needs n >= 2, d >= 3");
      const int x1 = 1 + ceil_div(n * d, 2);
      if (d >= 4) {
        Cell m{{{"n", n}, {"d", d}, {"x", x1}, {"part", "iii"}}, "positive",
               "x = 1 + ceil(nd/2) points of a rational normal curve are minimally Terracini", {}};
        for (int i = 0; i < seeds; ++i) m.trials.push_back({"rnc", member(rnc(n, x1), d, {})});
        p.cells.push_back(std::move(m));
        Cell z{{{"n", n}, {"d", d}, {"x", x1 - 1}, {"part", "a9.00"}}, "exact",
               "x = ceil(nd/2) points of a rational normal curve give h1 = 0", {}};
        for (int i = 0; i < seeds; ++i) z.trials.push_back({"rnc", exact_h1(rnc(n, x1 - 1), d, 0)});
        p.cells.push_back(std::move(z));
      }
      if (n >= 3 && d >= 4)
        for (int x : {x1 + 1, x1 + 2}) {
          Cell t{{{"n", n}, {"d", d}, {"x", x}, {"part", "i"}}, "positive",
                 "x > 1 + ceil(nd/2) points of a rational normal curve are Terracini", {}};
          for (int i = 0; i < seeds; ++i) t.trials.push_back({"rnc", member(rnc(n, x), d, {false, {}})});
          p.cells.push_back(std::move(t));
        }
      if (n >= 4 && d == 3) {
        Cell t{{{"n", n}, {"d", d}, {"x", x1}, {"part", "ii"}}, "positive",
               "x = 1 + ceil(3n/2) points of a rational normal curve are Terracini", {}};
        for (int i = 0; i < seeds; ++i) t.trials.push_back({"rnc", member(rnc(n, x1), d, {false, {}})});
        p.cells.push_back(std::move(t));
      }
    }
  return p;
}

// Members on a reducible chain must avoid the nodes, need n even and d odd,
// and have 2xᵢ = nᵢd + 1 with nᵢ odd on both end segments.
TrialFn de2_trial(std::vector<int> segs, std::vector<int> alloc, int nodes, int n, int d) {
  return [=](const Ctx& ctx, std::uint64_t seed) {
    const auto& f = ctx.fields.front();
    const auto s = reducible_rnc_points(f, segs, alloc, seed, nodes).points;
    const auto c = is_minimally_terracini(f, s, d);
    Json r = base_record(c);
    r["segments"] = segs;
    r["allocation"] = alloc;
    r["node_points"] = nodes;
    r["ok"] = true;
    r["verdict"] = c.minimal ? "member" : c.terracini ? "terracini_not_minimal" : "not_terracini";
    if (!c.refutation.empty()) r["refutation"] = c.refutation;
    if (!c.violating_subset.empty()) r["violating_subset"] = c.violating_subset;
    if (!c.minimal) return r;
    member_checks(f, c, r);
    const auto end_ok = [&](std::size_t i) {
      return segs[i] % 2 == 1 && 2 * (alloc[i] + (i > 0 && nodes >= static_cast<int>(i) ? 1 : 0) +
                                      (i + 1 < segs.size() && nodes > static_cast<int>(i) ? 1 : 0)) ==
                                     segs[i] * d + 1;
    };
    const bool claim = nodes == 0 && n % 2 == 0 && d % 2 == 1 && end_ok(0) && end_ok(segs.size() - 1);
    if (!claim) {
      r["ok"] = false;
      r["counterexample"] = true;
      r["certificate"] = to_json(c);
    }
    return r;
  };
}

void compositions(int total, int parts, int lo, std::vector<int>& cur, std::vector<std::vector<int>>& out,
                  const std::vector<int>& hi) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    if (total >= lo && total <= hi[cur.size()]) {
      cur.push_back(total);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int v = lo; v <= std::min(total, hi[cur.size()]); ++v) {
    cur.push_back(v);
    compositions(total - v, parts, lo, cur, out, hi);
    cur.pop_back();
  }
}

Plan plan_de2(const SuiteConfig& cfg) {
  Plan p;
  for (int n : cfg.n_values)
    for (int d : cfg.d_values) {
      require(n >= 2 && d >= 5, "de2 needs n >= 2, d >= 5");
      const int x = 1 + ceil_div(n * d, 2);
      // Every composition of n into at least two segments.
      std::vector<std::vector<int>> seg_lists;
      std::vector<std::vector<int>> all;
      for (int parts = 2; parts <= n; ++parts) {
        std::vector<int> cur;
        compositions(n, parts, 1, cur, all, std::vector<int>(parts, n));
      }
      seg_lists = all;
      Cell c{{{"n", n}, {"d", d}, {"x", x}}, "constraint",
             "members on reducible chains avoid nodes, need n even and d odd, and balanced end segments", {}};
      for (const auto& segs : seg_lists)
        for (int nodes = 0; nodes <= 1; ++nodes) {
          // Segment i holds at most nᵢd/2 + 2 points; more already forces a violating subset.
          std::vector<int> hi;
          for (int s : segs) hi.push_back((s * d) / 2 + 2);
          std::vector<std::vector<int>> allocs;
          std::vector<int> cur;
          compositions(x - nodes, static_cast<int>(segs.size()), 1, cur, allocs, hi);
          for (const auto& a : allocs) c.trials.push_back({"reducible_rnc", de2_trial(segs, a, nodes, n, d)});
        }
      p.cells.push_back(std::move(c));
    }
  return p;
}

Plan plan_n2a1(const SuiteConfig& cfg) {
  Plan p;
  const int seeds = 3;
  for (int d : cfg.d_values) {
    require(d >= 4, "n2a1 needs d >= 4");
    for (int x = 3; x <= d; ++x)
      p.cells.push_back(emptiness_cell(2, d, x, cfg.trials, Target::Minimal, true, "(a) no member for x <= d"));

    Cell b{{{"n", 2}, {"d", d}, {"x", d + 1}, {"part", "b-smooth"}}, "positive",
           "(b) d+1 points of a smooth conic are minimally Terracini", {}};
    for (int i = 0; i < seeds; ++i)
      b.trials.push_back({"conic", member([=](const PrimeField& f, std::uint64_t s) {
                            return conic_points(f, 2, d + 1, s).points;
                          }, d, {})});
    p.cells.push_back(std::move(b));

    Cell r{{{"n", 2}, {"d", d}, {"x", d + 1}, {"part", "b-reducible"}}, "constraint",
           "(b) a line pair carries a member exactly for odd d, split (d+1)/2 + (d+1)/2 off the node", {}};
    for (int node = 0; node <= 1; ++node)
      for (int a = 1; a <= d - node; ++a) {
        const int bb = d + 1 - node - a;
        if (bb < a) continue;
        const bool expect = d % 2 == 1 && node == 0 && a == bb;
        r.trials.push_back({"line_pair", [=](const Ctx& ctx, std::uint64_t seed) {
                              const auto& f = ctx.fields.front();
                              const auto s = line_pair(a, bb, node == 1)(f, seed);
                              const auto c = is_minimally_terracini(f, s, d);
                              Json rec = base_record(c);
                              rec["split"] = {a, bb};
                              rec["node"] = node == 1;
                              rec["expected_member"] = expect;
                              rec["verdict"] = c.minimal ? "member" : c.terracini ? "terracini_not_minimal"
                                                                                  : "not_terracini";
                              if (!c.refutation.empty()) rec["refutation"] = c.refutation;
                              if (!c.violating_subset.empty()) rec["violating_subset"] = c.violating_subset;
                              rec["ok"] = c.minimal == expect;
                              if (c.minimal) member_checks(f, c, rec);
                              if (c.minimal && !expect) rec["counterexample"] = true;
                              return rec;
                            }});
      }
    p.cells.push_back(std::move(r));

    if (d >= 5)
      for (int x = d + 2; 2 * x < 3 * d; ++x)
        p.cells.push_back(
            emptiness_cell(2, d, x, cfg.trials, Target::Minimal, true, "(c) no member for d+2 <= x < 3d/2"));

    if (d % 2 == 0 && d >= 6) {
      Cell e{{{"n", 2}, {"d", d}, {"x", 3 * d / 2}, {"part", "complete_intersection"}}, "positive",
             "C ∩ T with C a smooth cubic and deg T = d/2 is minimally Terracini", {}};
      for (int i = 0; i < seeds; ++i)
        e.trials.push_back({"plane_cubic_ci", member([=](const PrimeField& f, std::uint64_t s) {
                              return plane_cubic_points(f, d, CubicMode::CompleteIntersectionEvenD, s).points;
                            }, d, {true, d == 6 ? std::optional<std::int64_t>(2) : std::optional<std::int64_t>(1)})});
      p.cells.push_back(std::move(e));
    }
    if (d % 2 == 1 && d >= 7) {
      Cell e{{{"n", 2}, {"d", d}, {"x", (3 * d + 1) / 2}, {"part", "odd_cubic"}}, "positive",
             "(3d+1)/2 points of a smooth cubic are minimally Terracini", {}};
      for (int i = 0; i < seeds; ++i)
        e.trials.push_back({"plane_cubic", member([=](const PrimeField& f, std::uint64_t s) {
                              return plane_cubic_points(f, d, CubicMode::FreePointsOddD, s).points;
                            }, d, {})});
      p.cells.push_back(std::move(e));
    }
  }
  return p;
}

Plan plan_ooo1(const SuiteConfig& cfg) {
  Plan p;
  for (int d : cfg.d_values) {
    require(d >= 4, "ooo1 needs d >= 4");
    auto xs = cfg.x_values.empty() ? range(4, (3 * d + 1) / 2) : cfg.x_values;
    for (int x : xs) {
      require(2 * x <= 3 * d + 1, "ooo1 needs 2x <= 3d+1");
      p.cells.push_back(emptiness_cell(3, d, x, cfg.trials, Target::Minimal, true,
                                       "no member with 2x <= 3d+1; every critical scheme classified"));
    }
  }
  return p;
}

Plan plan_n31(const SuiteConfig& cfg) {
  Plan p;
  for (int d : cfg.d_values) {
    require(d >= 7, "n3.1 needs d >= 7");
    const int x = 1 + ceil_div(3 * d, 2);
    Cell m{{{"n", 3}, {"d", d}, {"x", x}, {"part", "rnc"}}, "positive",
           "points of a rational normal curve are minimally Terracini", {}};
    for (int i = 0; i < 5; ++i) m.trials.push_back({"rnc", member(rnc(3, x), d, {})});
    p.cells.push_back(std::move(m));

    Cell e{{{"n", 3}, {"d", d}, {"x", x}, {"part", "non_rnc"}}, "emptiness",
           "no member off rational normal curves", {}};
    const std::vector<std::pair<std::string, Builder>> gens = {
        {"reducible_rnc", random_reducible(3, x)},
        {"elliptic", elliptic_free(x)},
        {"perturbed_rnc_1", perturbed_rnc(3, x, 1)},
        {"perturbed_rnc_3", perturbed_rnc(3, x, 3)},
        {"collinear", augmented(3, x, 1, ceil_div(d, 2) + 1)},
        {"coplanar", augmented(3, x, 2, x - 2)},
        {"conic", conic_augmented(3, x, 2 * d + 2 <= x ? 2 * d + 2 : x - 2)},
        {"uniform", uniform(3, x)}};
    for (int i = 0; i < cfg.trials; ++i) {
      const auto& g = gens[static_cast<std::size_t>(i) % gens.size()];
      e.trials.push_back({g.first, emptiness(g.second, d, Target::Minimal, false)});
    }
    p.cells.push_back(std::move(e));
  }
  return p;
}

Plan plan_ceo1(const SuiteConfig& cfg) {
  Plan p;
  for (int d : cfg.d_values) {
    require(d >= 17, "ceo1 needs d >= 17");
    const int x1 = 1 + ceil_div(3 * d, 2);
    Cell m{{{"n", 3}, {"d", d}, {"x", x1}, {"part", "rnc"}}, "positive",
           "x = 1 + ceil(3d/2) points of a rational normal curve are minimally Terracini", {}};
    m.trials.push_back({"rnc", member(rnc(3, x1), d, {})});
    p.cells.push_back(std::move(m));
    Cell z{{{"n", 3}, {"d", d}, {"x", x1 - 1}, {"part", "a9.00"}}, "exact",
           "x = ceil(3d/2) points of a rational normal curve give h1 = 0", {}};
    z.trials.push_back({"rnc", exact_h1(rnc(3, x1 - 1), d, 0)});
    p.cells.push_back(std::move(z));

    auto xs = cfg.x_values.empty() ? range(x1 + 1, 2 * d - 1) : cfg.x_values;
    for (int x : xs) {
      require(x > x1 && x < 2 * d, "ceo1 needs 1 + ceil(3d/2) < x < 2d");
      Cell c{{{"n", 3}, {"d", d}, {"x", x}}, "emptiness", "no member with 1 + ceil(3d/2) < x < 2d", {}};
      c.trials.push_back({"rnc_plus", emptiness(rnc_plus(3, x, x1), d, Target::Minimal, false)});
      add_structured(c, 3, d, x, Target::Minimal, false);
      add_random(c, cfg.trials, uniform(3, x), d, Target::Minimal, false);
      p.cells.push_back(std::move(c));
    }

    // The sharpness example needs d even.
    const int de = d % 2 == 0 ? d : d - 1;
    Cell e{{{"n", 3}, {"d", de}, {"x", 2 * de}, {"part", "elliptic_2d"}}, "positive",
           "2d points cut on an elliptic quartic by a form of degree d/2 are minimally Terracini", {}};
    if (de != d) {
      e.params["requested_d"] = d;
      e.params["flag"] = "out_of_range_odd_d";
    }
    e.trials.push_back({"elliptic_ci", member([=](const PrimeField& f, std::uint64_t s) {
                          return elliptic_quartic_points(f, de, s).points;
                        }, de, {true, 1})});
    p.cells.push_back(std::move(e));
  }
  return p;
}

// 2d points on an elliptic quartic; every proper subset imposes independent
// conditions. Checking the x maximal subsets suffices since h¹ only drops on
// subschemes; smaller subsets are also checked exhaustively (x ≤ 12) or by a
// seeded sample.
TrialFn ex4d_trial(int d) {
  return [=](const Ctx& ctx, std::uint64_t seed) {
    const auto& f = ctx.fields.front();
    const auto sample = elliptic_quartic_points(f, d, seed);
    const auto& s = sample.points;
    const auto c = is_minimally_terracini(f, s, d);
    Json r = base_record(c);
    r["verdict"] = c.minimal ? "member" : "not_member";
    r["ok"] = c.minimal && c.h1 == 1;
    r["certificate"] = to_json(c);
    r["curve"] = to_json(sample);
    r["curve_side_h1"] = curve_side_oracle(sample.spec, s.size(), d);
    if (curve_side_oracle(sample.spec, s.size(), d) != 1) r["ok"] = false;
    if (c.minimal) member_checks(f, c, r);
    const std::size_t x = s.size();
    std::size_t checked = 0, bad = 0;
    auto check = [&](std::uint64_t mask) {
      std::vector<Point> sub;
      for (std::size_t i = 0; i < x; ++i)
        if (mask >> i & 1) sub.push_back(s[i]);
      ++checked;
      if (!sub.empty() && cohomology(double_scheme(f, sub), d).h1 != 0) ++bad;
    };
    if (x <= 12) {
      for (std::uint64_t mask = 1; mask + 1 < (1ULL << x); ++mask) check(mask);
      r["subsets"] = "exhaustive";
    } else {
      Rng rng(derive_seed({seed, 5}));
      for (int i = 0; i < 200; ++i) {
        std::uint64_t mask;
        do {
          mask = rng.next() & ((1ULL << x) - 1);
        } while (mask == 0 || mask == (1ULL << x) - 1);
        check(mask);
      }
      r["subsets"] = "maximal subsets exact, 200 seeded smaller subsets";
    }
    r["subsets_checked"] = checked;
    r["subsets_with_h1"] = bad;
    if (bad) r["ok"] = false;
    return r;
  };
}

Plan plan_ex4d(const SuiteConfig& cfg) {
  Plan p;
  const int seeds = std::max(1, cfg.trials);
  for (int d : cfg.d_values) {
    require(d >= 6 && d % 2 == 0, "ex4d covers even d >= 6");
    Cell c{{{"n", 3}, {"d", d}, {"x", 2 * d}}, "positive",
           "h1(2S, d) = 1, minimally Terracini, every proper subset h1 = 0", {}};
    for (int i = 0; i < seeds; ++i) c.trials.push_back({"elliptic_ci", ex4d_trial(d)});
    p.cells.push_back(std::move(c));
  }
  return p;
}

Plan plan_oo1(const SuiteConfig& cfg) {
  Plan p;
  for (int n : cfg.n_values)
    for (int d : cfg.d_values) {
      require(n >= 2 && d >= 3, "oo1 needs n >= 2, d >= 3");
      const int r = static_cast<int>(rho(n, d));
      const auto cnt = monomial_count(n, d);
      std::vector<int> xs = cfg.x_values.empty() ? std::vector<int>{r + 1, r + 2} : cfg.x_values;
      if (cfg.x_values.empty() && cnt % static_cast<std::size_t>(n + 1) == 0)
        xs.insert(xs.begin(), 1 + static_cast<int>(cnt / (n + 1)));
      for (int x : xs) {
        auto c = emptiness_cell(n, d, x, cfg.trials, Target::Minimal, false, "no member beyond rho");
        c.params["rho"] = r;
        p.cells.push_back(std::move(c));
      }
    }
  return p;
}

// S inside a random m-dimensional subspace M: h¹ over M and over Pⁿ are
// positive together, and the ambient one is at least the restricted one.
TrialFn prepa1_trial(int n, int m, int d, Builder in_m) {
  return [=](const Ctx& ctx, std::uint64_t seed) {
    const auto& f = ctx.fields.front();
    Rng rng(derive_seed({seed, 6}));
    std::vector<Vec> basis;
    for (int i = 0; i <= m; ++i) basis.push_back(random_point(f, n, rng).coords());
    const Subspace sub(f, basis);
    const auto local = in_m(f, seed);
    std::vector<Point> s;
    for (const auto& q : local) s.push_back(Point::normalized(f, sub.embed(q.coords())));
    const auto z = double_scheme(f, s);
    const auto ambient = cohomology(z, d);
    const auto restricted = cohomology(restrict_to_subspace(z, sub), d);
    return Json{{"x", s.size()},
                {"m", m},
                {"h1_ambient", ambient.h1},
                {"h1_subspace", restricted.h1},
                {"verdict", ambient.h1 > 0 ? "h1 > 0" : "h1 = 0"},
                {"ok", sub.dim() == m && (ambient.h1 > 0) == (restricted.h1 > 0) && ambient.h1 >= restricted.h1}};
  };
}

Plan plan_prepa1(const SuiteConfig& cfg) {
  Plan p;
  for (int n : cfg.n_values)
    for (int d : cfg.d_values) {
      require(n >= 3 && d >= 3, "prepa1 grid needs n >= 3, d >= 3");
      for (int m = 2; m < n; ++m) {
        Cell c{{{"n", n}, {"d", d}, {"m", m}}, "identity",
               "h1 of 2S is positive in the span iff it is positive in the ambient space", {}};
        const int t = m + ceil_div(d, 2);
        for (int x : {t - 1, t, t + 1}) {
          c.trials.push_back({"collinear", prepa1_trial(n, m, d, augmented(m, x, 1, ceil_div(d, 2) + 1))});
          c.trials.push_back({"uniform", prepa1_trial(n, m, d, uniform(m, x))});
        }
        const int r = ceil_div(m * d, 2);
        for (int x : {r, r + 1}) c.trials.push_back({"rnc", prepa1_trial(n, m, d, rnc(m, x))});
        for (int i = 0; i < cfg.trials; ++i) {
          const int x = m + 1 + static_cast<int>(i % (r + 1));
          c.trials.push_back({"uniform", prepa1_trial(n, m, d, uniform(m, x))});
        }
        p.cells.push_back(std::move(c));
      }
    }
  return p;
}

struct SuiteDef {
  std::vector<int> n, d;
  int trials;
  Plan (*plan)(const SuiteConfig&);
};

const std::map<std::string, SuiteDef>& registry() {
  static const std::map<std::string, SuiteDef> r = {
      {"ai0", {{2, 3}, range(3, 8), 500, plan_ai0}},
      {"rob1", {{2, 3, 4}, range(4, 8), 2, plan_rob1}},
      {"a9.0", {{2, 3, 4}, range(3, 8), 3, plan_a90}},
      {"de2", {{2, 3, 4}, range(5, 8), 0, plan_de2}},
      {"n2a1", {{2}, range(4, 8), 300, plan_n2a1}},
      {"ooo1", {{3}, range(4, 8), 200, plan_ooo1}},
      {"n3.1", {{3}, {7}, 500, plan_n31}},
      {"ceo1", {{3}, {17}, 100, plan_ceo1}},
      {"ex4d", {{3}, {6, 8}, 2, plan_ex4d}},
      {"oo1", {{2, 3}, range(3, 6), 50, plan_oo1}},
      {"prepa1", {{3, 4}, range(3, 6), 30, plan_prepa1}},
      {"43", {{2, 3, 4}, range(2, 6), 200, plan_43}},
  };
  return r;
}

// Runs every trial on `workers` threads; slot i always holds trial i.
std::vector<std::pair<Json, double>> run_all(const Ctx& ctx, const std::vector<const Trial*>& trials,
                                             const std::vector<std::uint64_t>& seeds, unsigned workers) {
  std::vector<std::pair<Json, double>> out(trials.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= trials.size()) return;
      const auto t0 = std::chrono::steady_clock::now();
      Json r;
      try {
        r = trials[i]->run(ctx, seeds[i]);
      } catch (const std::exception& e) {
        r = {{"ok", false}, {"verdict", "error"}, {"error", e.what()}};
      }
      r["generator"] = trials[i]->generator;
      r["seed"] = seeds[i];
      out[i] = {std::move(r), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
    }
  };
  const unsigned w = std::max(1u, workers);
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < w; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {"ai0", "rob1", "a9.0", "de2", "n2a1", "ooo1",
                                               "n3.1", "ceo1", "ex4d", "oo1", "prepa1", "43"};
  return ids;
}

SuiteConfig default_config(const std::string& suite) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw Error("unknown suite '" + suite + "'");
  SuiteConfig c;
  c.suite = suite;
  c.n_values = it->second.n;
  c.d_values = it->second.d;
  c.trials = it->second.trials;
  return c;
}

SuiteReport run_suite(const SuiteConfig& in) {
  const auto it = registry().find(in.suite);
  if (it == registry().end()) throw Error("unknown suite '" + in.suite + "'");
  SuiteConfig cfg = in;
  if (cfg.n_values.empty()) cfg.n_values = it->second.n;
  if (cfg.d_values.empty()) cfg.d_values = it->second.d;
  if (cfg.trials < 0) cfg.trials = it->second.trials;
  if (cfg.primes.empty()) cfg.primes = {kDefaultPrime};

  Ctx ctx{{}, cfg.budget};
  for (auto p : cfg.primes) {
    PrimeField f(p);
    if (!f.is_geometric()) throw Error("prime " + std::to_string(p) + " is too small");
    ctx.fields.push_back(f);
  }

  const auto t0 = std::chrono::steady_clock::now();
  const Plan plan = it->second.plan(cfg);

  std::vector<const Trial*> flat;
  std::vector<std::uint64_t> seeds;
  std::vector<std::size_t> owner;
  const std::uint64_t tag = fnv1a(cfg.suite);
  for (std::size_t c = 0; c < plan.cells.size(); ++c)
    for (std::size_t t = 0; t < plan.cells[c].trials.size(); ++t) {
      flat.push_back(&plan.cells[c].trials[t]);
      seeds.push_back(derive_seed({cfg.seed, tag, c, t}));
      owner.push_back(c);
    }
  auto results = run_all(ctx, flat, seeds, cfg.workers);

  SuiteReport rep;
  rep.suite = cfg.suite;
  rep.config = cfg;
  std::size_t k = 0;
  for (std::size_t c = 0; c < plan.cells.size(); ++c) {
    const auto& cell = plan.cells[c];
    CellReport cr;
    Json records = Json::array();
    std::map<std::string, std::size_t> verdicts, refutations;
    std::size_t failed = 0;
    for (std::size_t t = 0; t < cell.trials.size(); ++t, ++k) {
      auto& [r, secs] = results[k];
      cr.seconds += secs;
      if (!r.value("ok", false)) ++failed;
      if (r.value("counterexample", false)) ++cr.counterexamples;
      ++verdicts[r.value("verdict", "?")];
      if (r.contains("refutation")) ++refutations[r["refutation"].get<std::string>()];
      records.push_back(std::move(r));
    }
    cr.passed = failed == 0;
    cr.body = cell.params;
    cr.body["kind"] = cell.kind;
    cr.body["expectation"] = cell.expectation;
    cr.body["trials"] = cell.trials.size();
    cr.body["failed"] = failed;
    cr.body["counterexamples"] = cr.counterexamples;
    cr.body["verdicts"] = verdicts;
    cr.body["refutations"] = refutations;
    cr.body["passed"] = cr.passed;
    cr.body["records"] = std::move(records);
    rep.passed = rep.passed && cr.passed;
    rep.counterexamples += cr.counterexamples;
    rep.cells.push_back(std::move(cr));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

Json SuiteReport::to_json(bool with_timing) const {
  Json cells_json = Json::array();
  for (const auto& c : cells) cells_json.push_back(c.body);
  Json j{{"schema_version", kSchemaVersion},
         {"suite", suite},
         {"config", config_json(config)},
         {"passed", passed},
         {"counterexamples", counterexamples},
         {"note", "randomized emptiness results are evidence, not proof"},
         {"cells", cells_json}};
  if (with_timing) {
    Json per_cell = Json::array();
    for (const auto& c : cells) per_cell.push_back(c.seconds);
    j["timing"] = {{"total_seconds", seconds}, {"cell_seconds", per_cell}};
    j["environment"] = {{"workers", config.workers},
                        {"hardware_threads", std::thread::hardware_concurrency()},
#ifdef __VERSION__
                        {"compiler", __VERSION__},
#endif
                        {"cplusplus", __cplusplus}};
  }
  return j;
}

void throw_if_counterexample(const SuiteReport& r) {
  for (const auto& c : r.cells) {
    if (c.passed) continue;
    for (const auto& rec : c.body["records"]) {
      if (rec.value("ok", true)) continue;
      Json cert = {{"suite", r.suite}, {"cell", Json::object()}, {"record", rec}};
      for (const char* key : {"n", "d", "x", "m", "part"})
        if (c.body.contains(key)) cert["cell"][key] = c.body[key];
      throw CounterexampleFound("CounterexampleFound in suite " + r.suite, cert);
    }
  }
}

Json check_scheme(std::string_view text, std::optional<int> d_override, const CheckOptions& opt) {
  const auto in = parse_scheme(text, opt.prime);
  const int d = d_override ? *d_override : in.d.value_or(0);
  if (d < 1) throw Error("no degree: pass --d or set \"d\" in the document");
  const auto& f = in.field;
  if (!f.is_geometric()) throw Error("prime " + std::to_string(f.modulus()) + " is too small");
  const auto z = in.scheme();
  Json out{{"schema_version", kSchemaVersion}, {"d", d}, {"scheme", to_json(z)}};
  const auto rep = cohomology(z, d);
  out["cohomology"] = to_json(rep);
  std::string verdict = "h1 = " + std::to_string(rep.h1);

  if (in.is_point_set) {
    const auto cert = opt.minimality ? is_minimally_terracini(f, in.points, d) : is_terracini(f, in.points, d);
    out["membership"] = to_json(cert);
    verdict = cert.minimal ? "minimally_terracini"
              : cert.terracini ? (opt.minimality ? "terracini_not_minimal" : "terracini")
                               : "not_terracini";
    if (cert.minimal) {
      Json b = Json::array();
      for (const auto& v : check_member_bounds(f, cert)) b.push_back(to_json(v));
      out["bounds"] = b;
    }
  }
  // The document's integers read modulo each further prime.
  Json other = Json::array();
  for (auto p : opt.cross_primes) {
    if (p == f.modulus()) continue;
    const auto again = parse_scheme(text, p);
    const auto r2 = cohomology(again.scheme(), d);
    other.push_back({{"prime", p}, {"h0", r2.h0}, {"h1", r2.h1}, {"agrees", r2.h1 == rep.h1}});
  }
  if (!other.empty()) out["other_primes"] = other;

  std::optional<ZeroDimScheme> crit_scheme;
  if ((opt.critical || opt.witness) && rep.h1 > 0) {
    try {
      if (in.is_point_set) {
        const auto crit = find_critical(f, in.points, d);
        out["critical"] = to_json(crit);
        crit_scheme = crit.scheme;
      } else {
        const auto crit = minimize(z, d);
        out["critical"] = to_json(crit);
        crit_scheme = crit.scheme;
      }
    } catch (const Error& e) {
      out["critical"] = {{"error", e.what()}};
    }
  }
  if (opt.witness) {
    const auto& target = crit_scheme ? *crit_scheme : z;
    try {
      out["witness"] = to_json(classify(target, d, opt.budget));
    } catch (const Error& e) {
      out["witness"] = {{"error", e.what()}};
    }
  }
  out["verdict"] = verdict;
  return out;
}

}  // namespace terracini
