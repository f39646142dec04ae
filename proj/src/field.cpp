#include "terracini/field.hpp"

namespace terracini {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % q == 0) return n == q;
  }
  for (std::uint64_t q = 17; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 32) || !is_prime(p)) {
    throw Error("modulus must be a prime below 2^32: " + std::to_string(p));
  }
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = 1;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw Error("inverse of zero");
  return pow(a, p_ - 2);
}

bool PrimeField::sqrt(Elem a, Elem& root) const {
  a %= p_;
  if (a == 0) {
    root = 0;
    return true;
  }
  if (pow(a, (p_ - 1) / 2) != 1) return false;
  if (p_ % 4 == 3) {
    root = pow(a, (p_ + 1) / 4);
    return true;
  }
  std::uint64_t q = p_ - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Elem z = 2;
  while (pow(z, (p_ - 1) / 2) != p_ - 1) ++z;
  Elem m = s;
  Elem c = pow(z, q);
  Elem t = pow(a, q);
  Elem r = pow(a, (q + 1) / 2);
  while (t != 1) {
    Elem i = 0;
    Elem t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    Elem b = c;
    for (Elem j = 0; j + 1 < m - i; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  root = r;
  return true;
}

}  // namespace terracini
