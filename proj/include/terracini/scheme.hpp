#pragma once

#include <optional>
#include <span>
#include <vector>

#include "terracini/projective.hpp"

namespace terracini {

class DuplicatePoint : public Error {
 public:
  using Error::Error;
};

class DegenerateLine : public Error {
 public:
  using Error::Error;
};

enum class ComponentKind { Simple, Jet, Double };

const char* kind_name(ComponentKind k);

/// A simple point, a curvilinear degree-2 jet (point plus tangent direction),
/// or the full double point 2p.
struct Component {
  ComponentKind kind = ComponentKind::Simple;
  Point base;
  /// Only for jets; normalized modulo scalars and the Euler direction.
  Vec direction;

  static Component simple(Point p) { return {ComponentKind::Simple, std::move(p), {}}; }
  static Component doubled(Point p) { return {ComponentKind::Double, std::move(p), {}}; }
  /// Throws if v is proportional to the base point.
  static Component jet(const PrimeField& f, Point p, Vec v);

  std::size_t degree() const noexcept;

  bool operator==(const Component&) const = default;
};

class ZeroDimScheme {
 public:
  ZeroDimScheme(const PrimeField& f, int n) : field_(f), n_(n) {}
  /// Throws DuplicatePoint on a repeated base point.
  ZeroDimScheme(const PrimeField& f, int n, std::vector<Component> components);

  const PrimeField& field() const noexcept { return field_; }
  int n() const noexcept { return n_; }
  const std::vector<Component>& components() const noexcept { return components_; }
  std::size_t degree() const noexcept;
  std::vector<Point> support() const;
  bool empty() const noexcept { return components_.empty(); }

  void add(Component c);

 private:
  PrimeField field_;
  int n_;
  std::vector<Component> components_;
};

/// 2S: one Double component per point.
ZeroDimScheme double_scheme(const PrimeField& f, std::span<const Point> s);
/// The reduced scheme S.
ZeroDimScheme simple_scheme(const PrimeField& f, std::span<const Point> s);

/// Res_f(z), the scheme of the ideal quotient (I_z : f), componentwise.
ZeroDimScheme residual(const ZeroDimScheme& z, const Hypersurface& h);

/// deg(z ∩ L) for the line through a and b. Throws DegenerateLine when a = b.
std::size_t intersection_degree_line(const ZeroDimScheme& z, const Point& a, const Point& b);
/// deg(z ∩ L) for a line given as a Subspace of projective dimension 1.
std::size_t intersection_degree_line(const ZeroDimScheme& z, const Subspace& line);

/// deg(z) - deg(Res_f(z)).
std::size_t intersection_degree_hypersurface(const ZeroDimScheme& z, const Hypersurface& h);

/// z ∩ M written in the coordinates of M's basis, so it lives in P^{dim M}.
/// A double point of z on M becomes a double point of M; a jet keeps its
/// tangent only when the tangent lies in M.
ZeroDimScheme restrict_to_subspace(const ZeroDimScheme& z, const Subspace& m);

/// deg(z ∩ M).
std::size_t intersection_degree_subspace(const ZeroDimScheme& z, const Subspace& m);

/// Componentwise containment w ⊆ z.
bool is_subscheme(const ZeroDimScheme& w, const ZeroDimScheme& z);

/// Projective dimension of the linear span of z. A double point spans Pⁿ on
/// its own; a jet spans its tangent line.
int scheme_span_dim(const ZeroDimScheme& z);

}  // namespace terracini
