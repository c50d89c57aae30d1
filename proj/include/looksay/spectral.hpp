/* Dominant-eigenvalue analysis and exact characteristic polynomials of
 * decay matrices.
 *
 * The floating path is plain 64-bit power iteration with an automatic +I
 * shift retry for oscillating (non-primitive) matrices.  The precise path
 * repeats the iteration in multiple-precision floats so limiting abundances
 * can be compared far below double precision.  The exact path computes
 * det(xI - A) one word-sized prime at a time and reassembles the integer
 * coefficients by Chinese remaindering, with two held-out primes used as a
 * verification backstop.
 */
#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <vector>

#include "looksay/polynomial.hpp"
#include "looksay/sparse_matrix.hpp"

namespace looksay {

/* Result of double-precision power iteration. */
struct EigenResult {
    double value = 0.0;
    /* Nonnegative, normalized to unit 1-norm. */
    std::vector<double> vector;
    /* max-norm of (A v - lambda v) divided by max-norm of v. */
    double residual = 0.0;
    std::size_t iterations = 0;
    /* True when convergence needed the automatic A + I restart. */
    bool shifted = false;
};

/* Result of multiple-precision power iteration. */
struct PreciseEigenResult {
    mpf_class value;
    std::vector<mpf_class> vector;
    std::size_t iterations = 0;
    bool shifted = false;
};

/* Perron value and vector of a nonnegative matrix by power iteration.
 * Convergence requires successive eigenvalue estimates to differ by at most
 * tol and the residual to drop below tol.  If maxIter is exhausted the
 * iteration restarts once on A + I (which damps period-k oscillation); a
 * second failure raises verify_error. */
EigenResult dominant_eigen(const SparseMatrix& matrix, double tol = 1e-12,
                           std::size_t max_iterations = 100000);

/* Same iteration carried out with `precision`-bit floats until every
 * positive eigenvector entry is stable to a relative change below
 * 10^-tol_digits.  Feeds the abundance ordering, which separates ties far
 * below double precision. */
PreciseEigenResult dominant_eigen_precise(const SparseMatrix& matrix, unsigned precision = 256,
                                          unsigned tol_digits = 35,
                                          std::size_t max_iterations = 400000);

/* Eigenvector components rescaled to percentages summing to 100. */
std::vector<double> abundances(const EigenResult& eigen);

/* Exact characteristic polynomial det(xI - A).  Per-prime Hessenberg
 * charpolys (primes descending from 2^31) are combined by CRT with
 * symmetric residue lifting; the prime count covers a Hadamard-style
 * coefficient bound and two extra primes re-check the reconstruction
 * (mismatch -> verify_error).  `threads` 0 means one worker per hardware
 * thread. */
IntPoly char_poly(const SparseMatrix& matrix, unsigned threads = 0);

/* Newton refinement of a root of p starting from x0, evaluated with
 * `precision`-bit floats.  The refined root must stay within 1e-6 of x0
 * (they cross-check two independent computations of the same eigenvalue);
 * larger disagreement raises verify_error. */
mpf_class newton_refine(const IntPoly& p, double x0, double tol = 1e-30,
                        unsigned precision = 256);

} // namespace looksay
