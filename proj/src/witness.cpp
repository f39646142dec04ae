#include "terracini/witness.hpp"

#include <set>
#include <sstream>

namespace terracini {

const char* witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::Line: return "line";
    case WitnessKind::Conic: return "conic";
    case WitnessKind::PlaneCubicCandidate: return "plane_cubic_candidate";
    case WitnessKind::None: return "none";
  }
  return "?";
}

namespace {

Vec cross(const PrimeField& f, const Vec& a, const Vec& b) {
  return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])), f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
          f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

bool is_zero(const Vec& v) {
  for (auto e : v)
    if (e != 0) return false;
  return true;
}

// Planes of the search, in order of first appearance. For n = 3 they are
// spanned by triples taken from the support points and the second points of
// jet tangent lines, so a scheme with collinear support but jets leaving the
// line still gets its plane.
std::vector<Subspace> search_planes(const ZeroDimScheme& z) {
  const auto& f = z.field();
  std::vector<Subspace> out;
  if (z.n() == 2) {
    out.emplace_back(f, std::vector<Vec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    return out;
  }
  std::vector<Vec> gens;
  for (const auto& c : z.components()) gens.push_back(c.base.coords());
  for (const auto& c : z.components())
    if (c.kind == ComponentKind::Jet) gens.push_back(c.direction);
  std::set<Point> seen;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      for (std::size_t k = j + 1; k < gens.size(); ++k) {
        Subspace m(f, {gens[i], gens[j], gens[k]});
        if (m.dim() != 2) continue;
        auto eq = Point::normalized(f, m.equations().front());
        if (!seen.insert(eq).second) continue;
        out.push_back(std::move(m));
      }
  return out;
}

// Visits k-subsets of {0..m-1} in lexicographic order until `visit` returns false.
template <class F>
bool for_each_subset(std::size_t m, std::size_t k, F&& visit) {
  if (k > m) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct ConicSearch {
  const PrimeField& f;
  int d;
  std::size_t budget;
  std::size_t candidates = 0;
  bool exhausted = false;
  Witness best;

  // False once the budget is gone.
  bool offer(const ZeroDimScheme& zm, const Subspace& m, const Vec& coeffs) {
    if (candidates >= budget) {
      exhausted = true;
      return false;
    }
    ++candidates;
    if (is_zero(coeffs)) return true;
    const std::size_t a = intersection_degree_hypersurface(zm, Hypersurface(f, 2, 2, coeffs));
    if (a > best.achieved) {
      best.achieved = a;
      best.span = m.basis();
      best.form = coeffs;
    }
    return true;
  }

  bool search_plane(const ZeroDimScheme& zm, const Subspace& m) {
    const auto& b = monomial_basis(2, 2);
    std::vector<Vec> pts;
    std::vector<const Component*> comps;
    for (const auto& c : zm.components()) {
      pts.push_back(c.base.coords());
      comps.push_back(&c);
    }
    const std::size_t np = pts.size();

    // Conics through 5 support points.
    bool ok = for_each_subset(np, 5, [&](const std::vector<std::size_t>& idx) {
      std::vector<Vec> rows;
      for (auto i : idx) rows.push_back(monomial_values(f, b, pts[i]));
      auto ker = right_kernel(Matrix::from_rows(f, rows, b.size()));
      if (ker.size() != 1) return true;
      return offer(zm, m, ker.front());
    });
    if (!ok) return false;

    // Line pairs and double lines.
    std::vector<Vec> lines;
    std::set<Point> seen;
    auto add_line = [&](Vec l) {
      if (is_zero(l)) return;
      auto key = Point::normalized(f, l);
      if (seen.insert(key).second) lines.push_back(key.coords());
    };
    for (std::size_t i = 0; i < np; ++i)
      for (std::size_t j = i + 1; j < np; ++j) add_line(cross(f, pts[i], pts[j]));
    for (std::size_t i = 0; i < np; ++i)
      if (comps[i]->kind == ComponentKind::Jet) add_line(cross(f, pts[i], comps[i]->direction));
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i; j < lines.size(); ++j) {
        const auto q = Hypersurface::linear(f, lines[i]) * Hypersurface::linear(f, lines[j]);
        if (!offer(zm, m, q.coeffs())) return false;
      }

    // Few support points: conics through them, tangent to their jets.
    if (np < 5 || d <= 3) {
      for (std::size_t k = 3; k <= 4; ++k) {
        ok = for_each_subset(np, k, [&](const std::vector<std::size_t>& idx) {
          std::vector<Vec> rows;
          for (auto i : idx) {
            rows.push_back(monomial_values(f, b, pts[i]));
            if (comps[i]->kind == ComponentKind::Jet)
              rows.push_back(monomial_directional(f, b, pts[i], comps[i]->direction));
          }
          auto ker = right_kernel(Matrix::from_rows(f, rows, b.size()));
          if (ker.empty()) return true;
          return offer(zm, m, ker.front());
        });
        if (!ok) return false;
      }
    }
    return true;
  }
};

void require_low_dimension(const ZeroDimScheme& z, const char* who) {
  if (z.n() != 2 && z.n() != 3) {
    std::ostringstream os;
    os << who << ": ambient dimension " << z.n() << " is not 2 or 3";
    throw PreconditionViolated(os.str());
  }
}

}  // namespace

Witness find_line_witness(const ZeroDimScheme& z, int d) {
  const auto& f = z.field();
  Witness w;
  w.threshold = static_cast<std::size_t>(d + 2);
  std::size_t best = 0;
  std::vector<Vec> best_span;
  auto consider = [&](const Vec& a, const Vec& b) {
    Subspace line(f, {a, b});
    if (line.dim() != 1) return;
    ++w.candidates;
    const auto deg = intersection_degree_line(z, line);
    if (deg > best) {
      best = deg;
      best_span = line.basis();
    }
  };
  const auto& comps = z.components();
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      consider(comps[i].base.coords(), comps[j].base.coords());
  for (const auto& c : comps)
    if (c.kind == ComponentKind::Jet) consider(c.base.coords(), c.direction);
  w.achieved = best;
  if (best >= w.threshold) {
    w.kind = WitnessKind::Line;
    w.span = std::move(best_span);
  }
  return w;
}

Witness find_conic_witness(const ZeroDimScheme& z, int d, std::size_t budget) {
  require_low_dimension(z, "find_conic_witness");
  ConicSearch s{z.field(), d, budget, 0, false, {}};
  const std::size_t threshold = static_cast<std::size_t>(2 * d + 2);
  for (const auto& m : search_planes(z)) {
    auto zm = z.n() == 2 ? z : restrict_to_subspace(z, m);
    if (zm.degree() < threshold) continue;
    if (!s.search_plane(zm, m)) break;
  }
  Witness w = std::move(s.best);
  w.threshold = threshold;
  w.candidates = s.candidates;
  w.budget_exhausted = s.exhausted;
  if (w.achieved >= threshold) {
    w.kind = WitnessKind::Conic;
    w.form_degree = 2;
  } else {
    w.span.clear();
    w.form.clear();
  }
  return w;
}

Witness find_plane_cubic_candidate(const ZeroDimScheme& z, int d) {
  require_low_dimension(z, "find_plane_cubic_candidate");
  Witness w;
  w.threshold = static_cast<std::size_t>(3 * d);
  for (const auto& m : search_planes(z)) {
    ++w.candidates;
    auto zm = z.n() == 2 ? z : restrict_to_subspace(z, m);
    w.achieved = std::max(w.achieved, zm.degree());
    if (zm.degree() != w.threshold) continue;
    auto cubics = right_kernel(condition_rows(zm, 3));
    if (cubics.empty()) continue;
    if (h1(zm, d) <= 0) continue;
    w.kind = WitnessKind::PlaneCubicCandidate;
    w.span = m.basis();
    w.form = cubics.front();
    w.form_degree = 3;
    w.achieved = zm.degree();
    return w;
  }
  return w;
}

Witness classify(const ZeroDimScheme& z, int d, std::size_t budget) {
  require_low_dimension(z, "classify");
  const auto rep = cohomology(z, d);
  std::ostringstream why;
  if (rep.h1 <= 0) why << "h1 = " << rep.h1 << " is not positive";
  if (z.n() == 3) {
    for (const auto& c : z.components())
      if (c.kind == ComponentKind::Double) why << (why.tellp() ? "; " : "") << "has a double point";
    if (z.degree() > static_cast<std::size_t>(3 * d + 1))
      why << (why.tellp() ? "; " : "") << "degree " << z.degree() << " > 3d+1";
  } else if (z.degree() > static_cast<std::size_t>(3 * d)) {
    why << (why.tellp() ? "; " : "") << "degree " << z.degree() << " > 3d";
  }
  if (why.tellp()) throw PreconditionViolated("classify: " + why.str());

  std::optional<bool> maximal;
  if (z.n() == 2) maximal = h1(z, d + 1) == 0;
  std::string note;
  if (z.n() == 3 && scheme_span_dim(z) < 3) note = "scheme does not span P3; searched inside its span";

  auto finish = [&](Witness w) {
    w.d_maximal = maximal;
    w.note = note;
    return w;
  };
  auto line = find_line_witness(z, d);
  if (line.kind != WitnessKind::None) return finish(std::move(line));
  auto conic = find_conic_witness(z, d, budget);
  if (conic.kind != WitnessKind::None) return finish(std::move(conic));
  auto cubic = find_plane_cubic_candidate(z, d);
  if (cubic.kind != WitnessKind::None) return finish(std::move(cubic));

  std::ostringstream os;
  os << "ClassificationIncomplete: n = " << z.n() << ", d = " << d << ", deg = " << z.degree()
     << ", h1 = " << rep.h1 << "; best line " << line.achieved << "/" << line.threshold
     << ", best conic " << conic.achieved << "/" << conic.threshold
     << (conic.budget_exhausted ? " (budget exhausted)" : "") << ", best plane degree "
     << cubic.achieved << "/" << cubic.threshold;
  throw ClassificationIncomplete(os.str());
}

std::size_t recheck_witness(const ZeroDimScheme& z, const Witness& w) {
  const auto& f = z.field();
  switch (w.kind) {
    case WitnessKind::None: return 0;
    case WitnessKind::Line: return intersection_degree_line(z, Subspace(f, w.span));
    case WitnessKind::Conic:
    case WitnessKind::PlaneCubicCandidate: {
      Subspace m(f, w.span);
      if (m.dim() != 2 || m.ambient_dim() != static_cast<std::size_t>(z.n()))
        throw Error("recheck_witness: span is not a plane of the ambient space");
      auto zm = restrict_to_subspace(z, m);
      if (w.kind == WitnessKind::PlaneCubicCandidate) return zm.degree();
      return intersection_degree_hypersurface(zm, Hypersurface(f, 2, w.form_degree, w.form));
    }
  }
  return 0;
}

}  // namespace terracini
