/* Exact univariate integer polynomials.
 *
 * Coefficients are arbitrary-precision integers stored in ascending order
 * (coeff(k) multiplies x^k).  This is the currency of the characteristic-
 * polynomial pipeline: CRT reconstruction produces an IntPoly, trivial
 * factors are peeled off by exact division, and the certification layer
 * reduces IntPolys modulo word-sized primes.
 */
#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <utility>
#include <vector>

#include "looksay/errors.hpp"

namespace looksay {

/* Dense integer polynomial.  The zero polynomial has an empty coefficient
 * vector; every other instance is normalized so the leading coefficient is
 * nonzero. */
class IntPoly {
  public:
    IntPoly() = default;
    /* Takes coefficients in ascending order; trailing zeros are stripped. */
    explicit IntPoly(std::vector<mpz_class> ascending);

    static IntPoly constant(long value);
    /* coefficient * x^degree */
    static IntPoly monomial(std::size_t degree, long coefficient = 1);
    /* Parses one decimal integer per entry, ascending order. */
    static IntPoly from_strings(const std::vector<std::string>& ascending_decimal);

    bool is_zero() const { return coeff_.empty(); }
    /* Degree of the zero polynomial is -1 by convention. */
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    /* Leading coefficient; throws domain_error on the zero polynomial. */
    const mpz_class& leading() const;
    /* Coefficient of x^k; zero beyond the degree. */
    const mpz_class& coeff(std::size_t k) const;
    const std::vector<mpz_class>& coefficients() const { return coeff_; }

    IntPoly operator+(const IntPoly& other) const;
    IntPoly operator-(const IntPoly& other) const;
    IntPoly operator*(const IntPoly& other) const;
    bool operator==(const IntPoly& other) const = default;

    IntPoly derivative() const;
    /* gcd of all coefficients (positive); 0 for the zero polynomial. */
    mpz_class content() const;
    /* this / content, sign-normalized to a positive leading coefficient. */
    IntPoly primitive_part() const;

    /* Exact quotient; throws verify_error if the division leaves a remainder
     * or requires non-integer coefficients. */
    IntPoly divide_exact(const IntPoly& divisor) const;
    /* Long division by a monic divisor (always exact over the integers).
     * Returns {quotient, remainder}; throws domain_error if the divisor is
     * not monic. */
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

    mpz_class eval(const mpz_class& x) const;
    /* Horner evaluation at the precision of x. */
    mpf_class eval(const mpf_class& x) const;
    /* Evaluation with coefficients and argument reduced modulo p < 2^31. */
    std::uint64_t eval_mod(std::uint64_t x, std::uint64_t p) const;

    /* Human-readable form, descending powers: "x^3 - 2*x + 11". */
    std::string to_string(const std::string& var = "x") const;

  private:
    std::vector<mpz_class> coeff_;

    void normalize();
};

/* Polynomial gcd over the integers via the primitive-PRS algorithm.  The
 * result is primitive with positive leading coefficient (gcd up to sign and
 * rational scaling, which is all the squarefree machinery needs). */
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/* m-th cyclotomic polynomial, m >= 1.  Computed by dividing x^m - 1 by the
 * cyclotomic polynomials of the proper divisors of m; results are memoized. */
const IntPoly& cyclotomic(unsigned m);

} // namespace looksay
