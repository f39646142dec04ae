#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "terracini/projective.hpp"

namespace terracini {

class ParameterOutOfTheoremRange : public Error {
 public:
  using Error::Error;
};

class SingularSamplingRequestedButImpossible : public Error {
 public:
  using Error::Error;
};

class SmoothnessCertificationFailed : public Error {
 public:
  using Error::Error;
};

class TransversalityFailed : public Error {
 public:
  using Error::Error;
};

enum class CurveKind { RNC, ReducibleRNC, SmoothConic, PlaneCubic, EllipticQuartic };

const char* curve_kind_name(CurveKind k);

struct CurveSpec {
  CurveKind kind = CurveKind::RNC;
  int n = 0;
  int genus = 0;
  /// Degree of the curve in Pⁿ.
  int degree = 0;
  /// Segment degrees of a reducible chain, in good order.
  std::vector<int> segments;
  /// Defining forms in the curve's model coordinates (before `transform`).
  std::vector<Vec> forms;
  /// Rows of the projectivity taking model coordinates to the output.
  std::vector<Vec> transform;
  /// Sampled parameter values, in point order.
  Vec parameters;
};

struct CurveSample {
  CurveSpec spec;
  std::vector<Point> points;
  /// False for a point placed at a singular point of the curve.
  std::vector<bool> smooth;
  /// One line per re-sample, with the reason.
  std::vector<std::string> retries;
};

/// x distinct seeded-random points of Pⁿ.
std::vector<Point> general_points(const PrimeField& f, int n, int x, std::uint64_t seed);

/// x points on a random rational normal curve t ↦ [1:t:…:tⁿ]·g.
CurveSample rnc_points(const PrimeField& f, int n, int x, std::uint64_t seed);

/// Points on a chain T₁ ∪ … ∪ T_k of rational normal curves of degrees
/// `segments` (summing to n), consecutive ones meeting in a node.
/// `allocation[i]` points go on T_i away from the nodes; `node_points` more sit
/// on nodes, and asking for more than the k-1 nodes throws.
CurveSample reducible_rnc_points(const PrimeField& f, const std::vector<int>& segments,
                                 const std::vector<int>& allocation, std::uint64_t seed,
                                 int node_points = 0);

/// 2d points S = C ∩ F on a smooth quartic C = Q ∩ Q' ⊂ P³, F of degree d/2,
/// so that 2S ∩ C ∈ |O_C(d)|. d even, d ≥ 6.
CurveSample elliptic_quartic_points(const PrimeField& f, int d, std::uint64_t seed,
                                    int retry_budget = 64);

/// x random points on a smooth quartic elliptic curve of P³.
CurveSample elliptic_quartic_free_points(const PrimeField& f, int x, std::uint64_t seed);

enum class CubicMode { CompleteIntersectionEvenD, FreePointsOddD };

/// Points on a smooth plane cubic: the complete intersection C ∩ T with T of
/// degree d/2 (3d/2 points), or (3d+1)/2 random points for odd d.
CurveSample plane_cubic_points(const PrimeField& f, int d, CubicMode mode, std::uint64_t seed,
                               int retry_budget = 64);

/// x random points on a smooth plane cubic.
CurveSample plane_cubic_free_points(const PrimeField& f, int x, std::uint64_t seed);

/// x points on a smooth conic inside a random plane of Pⁿ.
CurveSample conic_points(const PrimeField& f, int n, int x, std::uint64_t seed);

/// Points on random lines of Pⁿ, counts[i] on the i-th line.
std::vector<Point> line_union_points(const PrimeField& f, int n, const std::vector<int>& counts,
                                     std::uint64_t seed);

/// The Terracini configuration from the existence argument for x ≥ n + ⌈d/2⌉:
/// n = 2: the node of two lines M, N and x-1 points of a third line L;
/// d = 3: points on pairwise intersections of three hyperplanes (for n >= 5
/// three of them are made collinear inside H ∩ K);
/// d ≥ 4: x-n+1 points on a line of a hyperplane H, n-2 general points of H,
/// and one point of K ∩ U off H.
/// The result is checked to be Terracini; throws otherwise.
std::vector<Point> ai0_witness(const PrimeField& f, int n, int d, int x, std::uint64_t seed);

/// Expected h¹ of 2S ∩ C on the curve: max(0, 2x - nd - 1) for a rational
/// normal curve; 1 for the plane cubic and elliptic constructions where
/// 2S ∩ C ∈ |O_C(d)|.
std::int64_t curve_side_oracle(const CurveSpec& spec, std::size_t x, int d);

}  // namespace terracini
