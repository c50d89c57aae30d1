/* Square-free reduction, trivial-factor stripping, and irreducibility
 * certification — the pipeline that turns a characteristic polynomial plus
 * its dominant root into a certified algebraic degree.
 *
 * Certification intersects mod-p factor-degree patterns: if the subset sums
 * achievable from every tried prime's pattern collapse to {0, deg}, no
 * integer factorization can exist, so the polynomial is irreducible.  The
 * method never reports a false "Irreducible"; when the budget runs out it
 * reports Inconclusive, and it never claims "Reducible" without an exact
 * factor witness.
 */
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "looksay/polynomial.hpp"

namespace looksay {

/* Multiset of irreducible-factor degrees over one prime field, ascending. */
using DegreePattern = std::vector<unsigned>;

/* Outcome of an irreducibility certification attempt. */
struct Certification {
    enum class Status { Irreducible, Reducible, Inconclusive };
    Status status = Status::Inconclusive;
    /* Exact integer factor; only populated for Reducible. */
    IntPoly witness;
    /* Primes whose degree patterns entered the intersection, with the
     * patterns themselves in matching order. */
    std::vector<std::uint64_t> primes_used;
    std::vector<DegreePattern> patterns;
};

/* Factors peeled off by strip_trivial_factors. */
struct StrippedFactors {
    unsigned power_of_x = 0;
    /* Cyclotomic orders, ascending, repeated per multiplicity. */
    std::vector<unsigned> cyclotomic_orders;
};

/* Result of the growth-degree pipeline. */
struct GrowthDegreeResult {
    /* Certified algebraic degree of the dominant root, or -1 when the
     * certification was inconclusive. */
    int degree = -1;
    /* The factor that vanishes at the dominant root. */
    IntPoly factor;
    Certification certification;
    std::string note;
};

/* p divided by gcd(p, p'): same roots, all simple.  A single prime with a
 * square-free reduction certifies p square-free outright; the exact
 * integer-gcd fallback only runs when that certificate fails. */
IntPoly squarefree_part(const IntPoly& p);

/* Repeatedly divides out x and every cyclotomic polynomial of order at most
 * max_cyclotomic_order while division stays exact.  Returns the residual
 * and the removed factors; the product of the factors and the residual is
 * the input. */
std::pair<IntPoly, StrippedFactors> strip_trivial_factors(const IntPoly& p,
                                                          unsigned max_cyclotomic_order = 128);

/* Degrees of the irreducible factors of p over Z/prime, by distinct-degree
 * factorization (Frobenius-matrix powering, gcd ladder).  Requires the
 * prime not to divide the leading coefficient and the reduction to be
 * square-free; violations raise domain_error (callers skip such primes). */
DegreePattern factor_degrees_mod_p(const IntPoly& p, std::uint64_t prime);

/* Certifies irreducibility by intersecting achievable degree subset-sums
 * across word-sized primes >= 1009, skipping primes with non-square-free
 * reductions, stopping after prime_budget usable primes. */
Certification certify_irreducible(const IntPoly& p, unsigned prime_budget = 25);

/* Full pipeline: square-free part, trivial-factor strip, locate the factor
 * vanishing at the dominant root (Newton-refined high-precision evaluation,
 * scaled threshold), certify it.  Stripped cyclotomic factors are
 * irreducible by construction; the residual goes through certification. */
GrowthDegreeResult growth_degree(const IntPoly& char_polynomial, double lambda);

} // namespace looksay
