#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "terracini/cohomology.hpp"

namespace terracini {

/// No line, conic or plane cubic candidate explains h¹ > 0. Either the
/// trichotomy is wrong as implemented or the prime was bad for this input.
class ClassificationIncomplete : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

enum class WitnessKind { Line, Conic, PlaneCubicCandidate, None };

const char* witness_kind_name(WitnessKind k);

/// A curve explaining h¹ > 0, stored so the degree can be re-checked offline.
///
/// Line: `span` holds two points of the line. Conic and cubic: `span` is a
/// basis of the plane and `form` the coefficients, over MonomialBasis(2, deg),
/// of the curve in the coordinates of that basis.
struct Witness {
  WitnessKind kind = WitnessKind::None;
  std::vector<Vec> span;
  Vec form;
  int form_degree = 0;
  std::size_t achieved = 0;
  std::size_t threshold = 0;
  /// Candidate curves looked at.
  std::size_t candidates = 0;
  bool budget_exhausted = false;
  /// classify only: h¹(z, d+1) = 0.
  std::optional<bool> d_maximal;
  std::string note;
};

inline constexpr std::size_t kDefaultWitnessBudget = 500'000;

/// Best line with deg(z ∩ L) ≥ d+2, or None.
///
/// Candidates are the lines through two support points and the tangent lines
/// of jets. For components of degree ≤ 2 that is exhaustive above degree 2: a
/// line through a single support point meets z in degree at most 2.
Witness find_line_witness(const ZeroDimScheme& z, int d);

/// Best conic D with deg(z ∩ D) ≥ 2d+2, or None. Ambient n ∈ {2, 3}.
///
/// Planes are the whole plane for n = 2 and the planes through support triples
/// for n = 3. Inside a plane the candidates are the conics through 5 support
/// points, the line pairs and double lines through pairs of support points or
/// jet tangents, and for 3 or 4 support points the conics through them tangent
/// to their jets. The budget bounds the candidates; running out is reported.
Witness find_conic_witness(const ZeroDimScheme& z, int d,
                           std::size_t budget = kDefaultWitnessBudget);

/// A plane M with deg(z ∩ M) = 3d, z ∩ M on a cubic of M, and h¹(z ∩ M, d) > 0.
/// This stands in for the complete intersection of a plane cubic with a
/// curve of degree d.
Witness find_plane_cubic_candidate(const ZeroDimScheme& z, int d);

/// Line, else conic, else plane cubic candidate; throws ClassificationIncomplete
/// when none exists.
///
/// n = 3 needs components of degree ≤ 2, deg(z) ≤ 3d+1 and h¹ > 0; a scheme
/// spanning only a plane is classified inside it. n = 2 needs deg(z) ≤ 3d and
/// h¹ > 0; whether d is maximal is recorded, not enforced. Violations throw
/// PreconditionViolated.
Witness classify(const ZeroDimScheme& z, int d, std::size_t budget = kDefaultWitnessBudget);

/// deg(z ∩ curve) recomputed from the stored curve data.
std::size_t recheck_witness(const ZeroDimScheme& z, const Witness& w);

}  // namespace terracini
