#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace terracini {

/// Residue in [0, p). Always reduced with respect to the field it came from.
using Elem = std::uint64_t;

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1
inline constexpr std::uint64_t kSecondPrime = 2147483629ULL;
inline constexpr std::uint64_t kMinGeometricPrime = 1'000'000ULL;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic in Z/pZ for a prime p < 2^32.
///
/// Any prime is accepted here; the geometric layers additionally require
/// p > kMinGeometricPrime so that p divides no degree or binomial in use.
///
/// Reduction scheme: operands are kept in [0, p). A product of two residues is
/// below 2^64, so `a * b % p` is exact in 64-bit unsigned arithmetic; sums are
/// below 2^33 and reduced by one conditional subtraction.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t modulus() const noexcept { return p_; }
  bool is_geometric() const noexcept { return p_ > kMinGeometricPrime; }

  Elem reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  Elem reduce_u(std::uint64_t v) const noexcept { return v % p_; }

  Elem add(Elem a, Elem b) const noexcept {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept { return a * b % p_; }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// Throws on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Square root if `a` is a quadratic residue (Tonelli-Shanks).
  bool sqrt(Elem a, Elem& root) const;

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace terracini
