#pragma once

#include "finsler/algebra/polynomial.hpp"

namespace finsler::algebra {

/// Greatest common divisor in Z[s, u, C, T, ...].
///
/// The result carries the integer content gcd and a positive leading
/// coefficient; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// True when a and b are proven coprime by modular images.
///
/// Each shared symbol is tested by mapping every other symbol to a random
/// residue modulo 2^61 - 1 and taking the univariate gcd. A constant image
/// gcd with non-vanishing leading coefficients proves the true gcd has degree
/// zero in that symbol. A false return is inconclusive.
bool certified_coprime(const Polynomial& a, const Polynomial& b);

}  // namespace finsler::algebra
