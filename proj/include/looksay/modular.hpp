/* Word-sized prime fields: primality testing, prime streams, dense modular
 * characteristic polynomials, and polynomial arithmetic modulo p.
 *
 * All moduli are primes below 2^31, so products of two residues fit in an
 * unsigned 64-bit word and can be reduced with a plain remainder.  These are
 * the building blocks for the CRT characteristic-polynomial reconstruction
 * and for distinct-degree factorization during certification.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "looksay/polynomial.hpp"

namespace looksay {

/* Deterministic Miller-Rabin for 64-bit integers. */
bool is_prime_u64(std::uint64_t n);

/* The `count` largest primes strictly below `below`, in descending order. */
std::vector<std::uint64_t> descending_primes(std::uint64_t below, std::size_t count);

/* The `count` smallest primes >= `from`, in ascending order. */
std::vector<std::uint64_t> ascending_primes(std::uint64_t from, std::size_t count);

/* base^exp mod p for p < 2^31. */
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

/* Multiplicative inverse mod a prime p; throws domain_error on a % p == 0. */
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

/* Characteristic polynomial det(xI - A) of a dense n-by-n matrix modulo a
 * prime p < 2^31.  `matrix` is row-major with entries already reduced mod p
 * and is consumed as scratch space.  The similarity reduction to Hessenberg
 * form plus the standard leading-minor recurrence costs O(n^3).  Returns the
 * monic coefficient vector in ascending order, length n + 1. */
std::vector<std::uint64_t> charpoly_mod(std::vector<std::uint64_t> matrix, std::size_t n,
                                        std::uint64_t p);

/* Polynomials over Z/p: ascending coefficient vectors with no trailing
 * zeros; the zero polynomial is the empty vector. */
using ModPoly = std::vector<std::uint64_t>;

/* Coefficients of f reduced modulo p (nonnegative residues). */
ModPoly reduce_mod(const IntPoly& f, std::uint64_t p);

/* Strips trailing zeros. */
ModPoly mod_trim(ModPoly a);

/* Scales a nonzero polynomial so its leading coefficient is 1. */
ModPoly mod_monic(ModPoly a, std::uint64_t p);

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, std::uint64_t p);

/* Remainder of a modulo f (f nonzero; normalized internally). */
ModPoly mod_rem(ModPoly a, const ModPoly& f, std::uint64_t p);

/* Quotient and remainder of a divided by f (f nonzero; normalized
 * internally, so the quotient is relative to the monic form of f). */
std::pair<ModPoly, ModPoly> mod_divmod(ModPoly a, const ModPoly& f, std::uint64_t p);

/* Monic gcd; gcd with the zero polynomial is the other argument made monic. */
ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t p);

ModPoly mod_derivative(const ModPoly& a, std::uint64_t p);

} // namespace looksay
