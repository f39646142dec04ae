#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "terracini/cohomology.hpp"

namespace terracini {

/// Everything needed to re-verify a verdict about S with respect to O(d).
struct MembershipCertificate {
  int n = 0;
  int d = 0;
  std::uint64_t prime = 0;
  std::vector<Point> points;
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  int span_dim = -1;
  bool t1 = false;
  bool terracini = false;
  bool minimality_checked = false;
  bool minimal = false;
  /// h¹ of 2(S minus the i-th point), one entry per point.
  std::vector<std::int64_t> subset_h1;
  /// Indices of a proper subset with h¹ > 0, when one refutes minimality.
  std::vector<std::size_t> violating_subset;
  /// Why the strongest checked verdict fails; empty when it holds.
  std::string refutation;
};

/// h⁰(I_2S(d)) > 0 and h¹(I_2S(d)) > 0.
MembershipCertificate is_T1(const PrimeField& f, std::span<const Point> s, int d);
/// T1 and S spans Pⁿ.
MembershipCertificate is_terracini(const PrimeField& f, std::span<const Point> s, int d);
/// Terracini and every (x-1)-subset has h¹ = 0. By monotonicity a smaller
/// violating subset extends to one of these, so x subsets suffice.
///
/// All x subset values come from one elimination: the left kernel of the
/// (x-1)-subset is the part of ker M(2S) vanishing on the dropped block, so
/// h¹(2(S∖p)) = h¹(2S) - rank(kernel restricted to p's rows).
MembershipCertificate is_minimally_terracini(const PrimeField& f, std::span<const Point> s,
                                             int d);

/// ⌈(C(n+d,n)+1)/(n+1)⌉
std::uint64_t rho(int n, int d);

struct BoundVerdict {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Structural bounds every minimal member satisfies: h¹ ≤ n+1, h¹(2S,d+1) = 0,
/// x ≤ ρ, and x ≠ 1 + C(n+d,n)/(n+1) when that quotient is an integer.
std::vector<BoundVerdict> check_member_bounds(const PrimeField& f,
                                              const MembershipCertificate& cert);

}  // namespace terracini
