#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "terracini/field.hpp"
#include "terracini/matrix.hpp"
#include "terracini/rng.hpp"

namespace terracini {

/// A point of Pⁿ with its first nonzero homogeneous coordinate scaled to 1.
class Point {
 public:
  /// Throws if all coordinates vanish.
  static Point normalized(const PrimeField& f, Vec coords);

  const Vec& coords() const noexcept { return coords_; }
  std::size_t ambient_dim() const noexcept { return coords_.size() - 1; }
  /// Index of the leading 1.
  std::size_t lead() const noexcept;

  auto operator<=>(const Point&) const = default;

 private:
  explicit Point(Vec c) : coords_(std::move(c)) {}
  Vec coords_;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

/// Canonical representative of a tangent direction at `base`, modulo scalars
/// and modulo the Euler direction: the coordinate at base.lead() is cleared
/// and the first nonzero entry scaled to 1. Empty when `v` is proportional to
/// the base point.
std::optional<Vec> normalize_direction(const PrimeField& f, const Point& base, Vec v);

/// Projective dimension of the linear span. Throws on empty input.
int span_dim(const PrimeField& f, std::span<const Point> points);

/// Matrix whose rows are the coordinate vectors.
Matrix coordinate_matrix(const PrimeField& f, std::span<const Point> points);

std::uint64_t binomial(unsigned n, unsigned k);

/// C(n+d, n), the number of degree-d monomials in n+1 variables.
std::size_t monomial_count(int n, int d);

/// Degree-d monomials in x₀..xₙ, ordered lexicographically by exponent vector
/// with x₀ᵈ first. The order is fixed; matrices and reports depend on it.
class MonomialBasis {
 public:
  MonomialBasis(int n, int d);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  std::size_t size() const noexcept { return count_; }
  std::uint8_t exponent(std::size_t mono, std::size_t var) const noexcept {
    return exps_[mono * (n_ + 1) + var];
  }
  std::span<const std::uint8_t> exponents(std::size_t mono) const noexcept {
    return {exps_.data() + mono * (n_ + 1), static_cast<std::size_t>(n_ + 1)};
  }
  /// Index of an exponent vector, or -1 when it is not a degree-d monomial.
  std::ptrdiff_t index_of(std::span<const std::uint8_t> e) const;

 private:
  std::uint64_t key(std::span<const std::uint8_t> e) const;

  int n_;
  int d_;
  std::size_t count_;
  std::vector<std::uint8_t> exps_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Shared, immutable basis for (n, d); thread-safe.
const MonomialBasis& monomial_basis(int n, int d);

/// Values of every degree-d monomial at `pt`, in basis order.
Vec monomial_values(const PrimeField& f, const MonomialBasis& basis, std::span<const Elem> pt);
/// Values of ∂ᵢ of every monomial at `pt`.
Vec monomial_partials(const PrimeField& f, const MonomialBasis& basis, std::span<const Elem> pt,
                      std::size_t var);
/// Values of the directional derivative D_v = Σ vᵢ∂ᵢ of every monomial at `pt`.
Vec monomial_directional(const PrimeField& f, const MonomialBasis& basis,
                         std::span<const Elem> pt, std::span<const Elem> v);

/// A nonzero form of degree t on Pⁿ, coefficients over MonomialBasis(n, t).
class Hypersurface {
 public:
  Hypersurface(const PrimeField& f, int n, int degree, Vec coeffs);

  static Hypersurface linear(const PrimeField& f, Vec coeffs);
  Hypersurface operator*(const Hypersurface& o) const;
  Hypersurface power(int k) const;

  const PrimeField& field() const noexcept { return field_; }
  int n() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  const Vec& coeffs() const noexcept { return coeffs_; }

 private:
  PrimeField field_;
  int n_;
  int degree_;
  Vec coeffs_;
};

struct ValueAndGradient {
  Elem value = 0;
  Vec gradient;
};

ValueAndGradient evaluate_with_gradient(const Hypersurface& h, std::span<const Elem> pt);
inline ValueAndGradient evaluate_with_gradient(const Hypersurface& h, const Point& pt) {
  return evaluate_with_gradient(h, pt.coords());
}
Elem evaluate(const Hypersurface& h, std::span<const Elem> pt);

/// A linear subspace of K^{n+1} (a projective subspace of Pⁿ) with a fixed basis,
/// used to restrict points and schemes to their own coordinates.
class Subspace {
 public:
  /// Spanned by `generators`; a maximal independent subset (in order) is kept.
  Subspace(const PrimeField& f, std::vector<Vec> generators);
  /// The hyperplane {h · x = 0}.
  static Subspace hyperplane(const PrimeField& f, const Vec& linear_form);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  /// Projective dimension.
  int dim() const noexcept { return static_cast<int>(basis_.size()) - 1; }
  const std::vector<Vec>& basis() const noexcept { return basis_; }

  bool contains(std::span<const Elem> v) const;
  /// Coordinates with respect to basis(); empty when v is not in the subspace.
  std::optional<Vec> coordinates(std::span<const Elem> v) const;
  /// Ambient vector Σ cᵢ·basisᵢ.
  Vec embed(std::span<const Elem> c) const;
  /// Linear forms cutting out the subspace (a basis of its annihilator).
  std::vector<Vec> equations() const;

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<Vec> basis_;
  // Reduced echelon form of the basis and the transform T with T·B = R.
  std::vector<Vec> echelon_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> transform_;
};

Point random_point(const PrimeField& f, int n, Rng& rng);
/// Random invertible (n+1)×(n+1) matrix.
Matrix random_projectivity(const PrimeField& f, int n, Rng& rng);
Point apply(const Matrix& m, const Point& p);
Vec apply(const Matrix& m, std::span<const Elem> v);

}  // namespace terracini
