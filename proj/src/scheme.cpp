#include "terracini/scheme.hpp"

#include <algorithm>

namespace terracini {

const char* kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::Simple: return "simple";
    case ComponentKind::Jet: return "jet";
    case ComponentKind::Double: return "double";
  }
  return "?";
}

Component Component::jet(const PrimeField& f, Point p, Vec v) {
  auto dir = normalize_direction(f, p, std::move(v));
  if (!dir) throw Error("jet direction is proportional to its base point");
  return {ComponentKind::Jet, std::move(p), std::move(*dir)};
}

std::size_t Component::degree() const noexcept {
  switch (kind) {
    case ComponentKind::Simple: return 1;
    case ComponentKind::Jet: return 2;
    case ComponentKind::Double: return base.coords().size();
  }
  return 0;
}

ZeroDimScheme::ZeroDimScheme(const PrimeField& f, int n, std::vector<Component> components)
    : field_(f), n_(n) {
  components_.reserve(components.size());
  for (auto& c : components) add(std::move(c));
}

void ZeroDimScheme::add(Component c) {
  if (c.base.coords().size() != static_cast<std::size_t>(n_ + 1))
    throw Error("component in the wrong ambient dimension");
  for (const auto& o : components_)
    if (o.base == c.base) throw DuplicatePoint("DuplicatePoint: repeated support point");
  components_.push_back(std::move(c));
}

std::size_t ZeroDimScheme::degree() const noexcept {
  std::size_t s = 0;
  for (const auto& c : components_) s += c.degree();
  return s;
}

std::vector<Point> ZeroDimScheme::support() const {
  std::vector<Point> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.base);
  return out;
}

ZeroDimScheme double_scheme(const PrimeField& f, std::span<const Point> s) {
  if (s.empty()) throw Error("double_scheme: no points");
  const int n = static_cast<int>(s.front().ambient_dim());
  ZeroDimScheme z(f, n);
  for (const auto& p : s) z.add(Component::doubled(p));
  return z;
}

ZeroDimScheme simple_scheme(const PrimeField& f, std::span<const Point> s) {
  if (s.empty()) throw Error("simple_scheme: no points");
  ZeroDimScheme z(f, static_cast<int>(s.front().ambient_dim()));
  for (const auto& p : s) z.add(Component::simple(p));
  return z;
}

ZeroDimScheme residual(const ZeroDimScheme& z, const Hypersurface& h) {
  if (h.n() != z.n()) throw Error("residual: dimension mismatch");
  const auto& f = z.field();
  ZeroDimScheme out(f, z.n());
  for (const auto& c : z.components()) {
    const auto vg = evaluate_with_gradient(h, c.base);
    if (vg.value != 0) {
      out.add(c);
      continue;
    }
    switch (c.kind) {
      case ComponentKind::Simple:
        break;
      case ComponentKind::Jet: {
        Elem dv = 0;
        for (std::size_t i = 0; i < vg.gradient.size(); ++i)
          dv = f.add(dv, f.mul(c.direction[i], vg.gradient[i]));
        if (dv != 0) out.add(Component::simple(c.base));
        break;
      }
      case ComponentKind::Double: {
        const bool singular = std::all_of(vg.gradient.begin(), vg.gradient.end(),
                                          [](Elem g) { return g == 0; });
        if (!singular) out.add(Component::simple(c.base));
        break;
      }
    }
  }
  return out;
}

std::size_t intersection_degree_line(const ZeroDimScheme& z, const Subspace& line) {
  if (line.dim() != 1) throw DegenerateLine("DegenerateLine: subspace is not a line");
  std::size_t deg = 0;
  for (const auto& c : z.components()) {
    if (!line.contains(c.base.coords())) continue;
    switch (c.kind) {
      case ComponentKind::Simple: deg += 1; break;
      case ComponentKind::Jet: deg += line.contains(c.direction) ? 2 : 1; break;
      case ComponentKind::Double: deg += 2; break;
    }
  }
  return deg;
}

std::size_t intersection_degree_line(const ZeroDimScheme& z, const Point& a, const Point& b) {
  if (a == b) throw DegenerateLine("DegenerateLine: the two points coincide");
  return intersection_degree_line(z, Subspace(z.field(), {a.coords(), b.coords()}));
}

std::size_t intersection_degree_hypersurface(const ZeroDimScheme& z, const Hypersurface& h) {
  return z.degree() - residual(z, h).degree();
}

ZeroDimScheme restrict_to_subspace(const ZeroDimScheme& z, const Subspace& m) {
  const auto& f = z.field();
  ZeroDimScheme out(f, m.dim());
  for (const auto& c : z.components()) {
    auto pc = m.coordinates(c.base.coords());
    if (!pc) continue;
    Point p = Point::normalized(f, std::move(*pc));
    switch (c.kind) {
      case ComponentKind::Simple: out.add(Component::simple(std::move(p))); break;
      case ComponentKind::Double: out.add(Component::doubled(std::move(p))); break;
      case ComponentKind::Jet: {
        auto vc = m.coordinates(c.direction);
        if (vc && m.dim() >= 1) out.add(Component::jet(f, std::move(p), std::move(*vc)));
        else out.add(Component::simple(std::move(p)));
        break;
      }
    }
  }
  return out;
}

std::size_t intersection_degree_subspace(const ZeroDimScheme& z, const Subspace& m) {
  return restrict_to_subspace(z, m).degree();
}

bool is_subscheme(const ZeroDimScheme& w, const ZeroDimScheme& z) {
  if (w.n() != z.n()) return false;
  for (const auto& a : w.components()) {
    auto it = std::find_if(z.components().begin(), z.components().end(),
                           [&](const Component& b) { return b.base == a.base; });
    if (it == z.components().end()) return false;
    switch (a.kind) {
      case ComponentKind::Simple: break;
      case ComponentKind::Jet:
        if (it->kind == ComponentKind::Simple) return false;
        if (it->kind == ComponentKind::Jet && it->direction != a.direction) return false;
        break;
      case ComponentKind::Double:
        if (it->kind != ComponentKind::Double) return false;
        break;
    }
  }
  return true;
}

int scheme_span_dim(const ZeroDimScheme& z) {
  if (z.empty()) return -1;
  std::vector<Vec> gens;
  for (const auto& c : z.components()) {
    if (c.kind == ComponentKind::Double) return z.n();
    gens.push_back(c.base.coords());
    if (c.kind == ComponentKind::Jet) gens.push_back(c.direction);
  }
  return Subspace(z.field(), std::move(gens)).dim();
}

}  // namespace terracini
