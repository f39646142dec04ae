#pragma once

#include <cstdint>
#include <span>

#include "terracini/cohomology.hpp"

namespace terracini {

class ZeroKernelVector : public Error {
 public:
  using Error::Error;
};

class NotPositiveH1 : public Error {
 public:
  using Error::Error;
};

/// A d-critical scheme: curvilinear, h¹ = 1, every maximal proper subscheme
/// has h¹ = 0.
struct CriticalScheme {
  ZeroDimScheme scheme;
  int d = 0;
  std::int64_t h1 = 0;
  /// Left-kernel vector of M(2S, d) the scheme was read from.
  Vec kernel_vector;
  bool full_support = false;
};

/// Reads a curvilinear subscheme of 2S off a dependence λ among the rows of
/// condition_rows(2S, d). On p's block, λ_p = 0 drops p, λ_p ∝ p gives Simple(p)
/// (D_p = d·eval by Euler), anything else gives Jet(p, λ_p).
ZeroDimScheme kernel_to_curvilinear(const PrimeField& f, std::span<const Point> s, int d,
                                    std::span<const Elem> lambda);

/// Descends through maximal proper subschemes (drop a Simple, or shrink a Jet
/// to its point) while h¹ stays positive, first candidate in component order.
///
/// Dropping condition row r keeps h¹ > 0 iff the current left kernel has a
/// nonzero vector with λ_r = 0, so the kernel is computed once and cut down
/// in place rather than re-eliminating each candidate.
CriticalScheme minimize(const ZeroDimScheme& z, int d);

/// kernel_to_curvilinear on the first kernel vector, then minimize.
CriticalScheme find_critical(const PrimeField& f, std::span<const Point> s, int d);

}  // namespace terracini
