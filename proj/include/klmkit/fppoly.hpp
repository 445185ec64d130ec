#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace klmkit::fppoly {

// Dense polynomials over F_p with int64 coefficients in [0, p), stored
// low degree first and trimmed (the zero polynomial is the empty vector).
// p < 2^31, so products of residues fit in int64.

using Poly = std::vector<std::int64_t>;

Poly trim(Poly f);
int deg(const Poly& f);  // -1 for the zero polynomial
Poly make_monic(const Poly& f, std::int64_t p);

Poly add(const Poly& a, const Poly& b, std::int64_t p);
Poly sub(const Poly& a, const Poly& b, std::int64_t p);
Poly mul(const Poly& a, const Poly& b, std::int64_t p);
// division with remainder; divisor must be nonzero
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::int64_t p);
Poly gcd(Poly a, Poly b, std::int64_t p);  // monic

std::int64_t eval(const Poly& f, std::int64_t x, std::int64_t p);

// base^e mod (f, p); e may exceed 64 bits
Poly powmod(const Poly& base, const mpz_class& e, const Poly& f,
            std::int64_t p);

/// Distinct roots of f in F_p, unsorted.
std::vector<std::int64_t> roots(const Poly& f, std::int64_t p,
                                std::mt19937_64& rng);

bool is_irreducible(const Poly& f, std::int64_t p);

/// Some irreducible factor of f (not necessarily of minimal degree).
/// f must be non-constant.
Poly some_irreducible_factor(const Poly& f, std::int64_t p,
                             std::mt19937_64& rng);

}  // namespace klmkit::fppoly
