#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "terracini/matrix.hpp"
#include "terracini/scheme.hpp"

namespace terracini {

/// Interpolation conditions of z on degree-d forms: rows are conditions,
/// columns are monomials of MonomialBasis(n, d).
///
/// Simple(p) gives the evaluation row; Jet(p, v) the evaluation row then D_v;
/// Double(p) the n+1 partials ∂₀..∂ₙ at p, evaluation being implied by Euler.
/// Requires a geometric field with p > d.
Matrix condition_rows(const ZeroDimScheme& z, int d);

/// Row ranges of each component inside condition_rows, in component order.
std::vector<std::size_t> condition_row_offsets(const ZeroDimScheme& z);

struct CohomologyReport {
  int n = 0;
  int d = 0;
  std::size_t scheme_degree = 0;
  std::size_t rank = 0;
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::size_t> per_prime_rank;
  bool disagreement = false;
};

CohomologyReport cohomology(const ZeroDimScheme& z, int d);

/// The scheme rebuilt over a given field; coordinates are sampled per prime.
using SchemeRecipe = std::function<ZeroDimScheme(const PrimeField&)>;

/// Runs the recipe over each prime; rank is the maximum across primes.
CohomologyReport cohomology_multi_prime(const SchemeRecipe& recipe, int d,
                                        std::span<const std::uint64_t> primes);

inline std::int64_t h1(const ZeroDimScheme& z, int d) { return cohomology(z, d).h1; }
inline std::int64_t h0(const ZeroDimScheme& z, int d) { return cohomology(z, d).h0; }

}  // namespace terracini
