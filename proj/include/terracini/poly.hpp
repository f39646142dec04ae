#pragma once

#include <span>

#include "terracini/matrix.hpp"

namespace terracini {

/// Dense univariate polynomials over F_p, coefficient of x^i at index i.
/// The zero polynomial is the empty vector.
using Poly = Vec;

void poly_trim(Poly& a);
int poly_degree(const Poly& a);
Elem poly_eval(const PrimeField& f, const Poly& a, Elem x);
Poly poly_derivative(const PrimeField& f, const Poly& a);
Poly poly_mul(const PrimeField& f, const Poly& a, const Poly& b);
/// Quotient and remainder; throws on division by zero.
void poly_divmod(const PrimeField& f, const Poly& a, const Poly& b, Poly& q, Poly& r);
/// Monic gcd.
Poly poly_gcd(const PrimeField& f, Poly a, Poly b);
/// The polynomial of degree < xs.size() through (xs[i], ys[i]); xs distinct.
Poly poly_interpolate(const PrimeField& f, std::span<const Elem> xs, std::span<const Elem> ys);
/// Resultant of a and b taken with formal degrees da, db (Sylvester determinant).
Elem resultant(const PrimeField& f, const Poly& a, int da, const Poly& b, int db);

}  // namespace terracini
