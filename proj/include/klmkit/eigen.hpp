#pragma once

#include <vector>

#include "klmkit/matrix.hpp"

namespace klmkit {

/// Coefficients of det(xI - m), low degree first, monic of degree rows().
/// Computed division-free (Samuelson-Berkowitz) on a denominator-cleared
/// matrix, so intermediate values stay integral over the rationals.
std::vector<Scalar> charpoly(const ExactMatrix& m);

/// All tau in k with det(m - tau I) = 0, sorted. Over Q this is a rational
/// root search on the cleared characteristic polynomial; over F_p the roots
/// of gcd(charpoly, x^p - x).
std::vector<Scalar> eigenvalues_in_field(const ExactMatrix& m);

}  // namespace klmkit
