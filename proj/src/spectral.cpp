#include "looksay/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

#include "looksay/errors.hpp"
#include "looksay/modular.hpp"

namespace looksay {

namespace {

/* One power-iteration run; shift=1 iterates A + I. */
bool power_run(const SparseMatrix& matrix, double shift, double tol, std::size_t max_iterations,
               EigenResult& out) {
    const std::size_t n = matrix.rows();
    std::vector<double> v(n, 1.0 / static_cast<double>(n));
    std::vector<double> w(n);
    double estimate = 0.0;
    for (std::size_t iter = 1; iter <= max_iterations; ++iter) {
        matrix.multiply(v, w);
        double wsum = 0.0;
        if (shift != 0.0) {
            for (std::size_t i = 0; i < n; ++i) w[i] += shift * v[i];
        }
        for (double x : w) wsum += x;
        if (wsum <= 0.0) { // nilpotent direction collapsed to zero
            out.value = shift == 0.0 ? 0.0 : -shift;
            out.vector = v;
            out.residual = 0.0;
            out.iterations += iter;
            return true;
        }
        const double previous = estimate;
        estimate = wsum; // 1-norm ratio: v is kept at unit 1-norm
        double vmax = 0.0;
        double rmax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            vmax = std::max(vmax, v[i]);
            rmax = std::max(rmax, std::fabs(w[i] - estimate * v[i]));
        }
        const double residual = vmax > 0.0 ? rmax / vmax : 0.0;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wsum;
        if (iter > 1 && std::fabs(estimate - previous) <= tol * std::max(1.0, std::fabs(estimate)) &&
            residual <= tol) {
            out.value = estimate - shift;
            out.vector = v;
            out.residual = residual;
            out.iterations += iter;
            return true;
        }
    }
    out.iterations += max_iterations;
    return false;
}

} // namespace

EigenResult dominant_eigen(const SparseMatrix& matrix, double tol, std::size_t max_iterations) {
    if (matrix.rows() != matrix.cols()) throw domain_error("eigen analysis requires a square matrix");
    if (matrix.rows() == 0) throw domain_error("eigen analysis requires a nonempty matrix");
    EigenResult result;
    if (power_run(matrix, 0.0, tol, max_iterations, result)) return result;
    // Oscillation (e.g. a permutation block) is damped by iterating A + I.
    result.shifted = true;
    if (power_run(matrix, 1.0, tol, max_iterations, result)) return result;
    throw verify_error("power iteration failed to converge, even for the shifted matrix");
}

PreciseEigenResult dominant_eigen_precise(const SparseMatrix& matrix, unsigned precision,
                                          unsigned tol_digits, std::size_t max_iterations) {
    if (matrix.rows() != matrix.cols()) throw domain_error("eigen analysis requires a square matrix");
    if (matrix.rows() == 0) throw domain_error("eigen analysis requires a nonempty matrix");
    const std::size_t n = matrix.rows();

    mpf_class tol(1, precision);
    for (unsigned k = 0; k < tol_digits; ++k) tol /= 10;

    auto run = [&](long shift, PreciseEigenResult& out) {
        std::vector<mpf_class> v(n, mpf_class(1, precision));
        std::vector<mpf_class> w(n, mpf_class(0, precision));
        mpf_class wsum(0, precision), estimate(0, precision), diff(0, precision);
        for (std::size_t iter = 1; iter <= max_iterations; ++iter) {
            matrix.multiply(v, w);
            wsum = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (shift != 0) w[i] += shift * v[i];
                wsum += w[i];
            }
            if (wsum == 0) {
                out.value = mpf_class(-shift, precision);
                out.vector = v;
                out.iterations += iter;
                return true;
            }
            estimate = wsum; // unit 1-norm maintained below
            bool stable = iter > 1;
            for (std::size_t i = 0; i < n; ++i) {
                w[i] /= wsum;
                if (stable) {
                    diff = w[i] - v[i];
                    if (diff < 0) diff = -diff;
                    if (w[i] > 0 && diff > tol * w[i]) stable = false;
                }
                v[i] = w[i];
            }
            if (stable) {
                out.value = estimate - shift;
                out.vector = std::move(v);
                out.iterations += iter;
                return true;
            }
        }
        out.iterations += max_iterations;
        return false;
    };

    PreciseEigenResult result;
    result.value.set_prec(precision);
    if (run(0, result)) return result;
    result.shifted = true;
    if (run(1, result)) return result;
    throw verify_error("high-precision power iteration failed to converge");
}

std::vector<double> abundances(const EigenResult& eigen) {
    double sum = 0.0;
    for (double x : eigen.vector) {
        if (x < 0.0) throw domain_error("abundance normalization requires a nonnegative vector");
        sum += x;
    }
    if (sum <= 0.0) throw domain_error("abundance normalization requires a nonzero vector");
    std::vector<double> out(eigen.vector.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = eigen.vector[i] / sum * 100.0;
    return out;
}

namespace {

/* Number of bits needed for the largest charpoly coefficient: the degree-k
 * coefficient is a sum of C(n,k) principal minors, each bounded by the
 * product of its k largest column norms (Hadamard).  Maximized over k in
 * log2 space. */
double coefficient_bound_bits(const SparseMatrix& matrix) {
    const std::size_t n = matrix.cols();
    std::vector<double> logs;
    for (std::size_t j = 0; j < n; ++j) {
        const double norm2 = static_cast<double>(matrix.column_norm_squared(j));
        if (norm2 > 0.0) logs.push_back(0.5 * std::log2(norm2));
    }
    std::sort(logs.begin(), logs.end(), std::greater<>());
    double binom = 0.0, run = 0.0, best = 0.0;
    for (std::size_t k = 1; k <= logs.size(); ++k) {
        binom += std::log2(static_cast<double>(n - k + 1) / static_cast<double>(k));
        run += logs[k - 1];
        best = std::max(best, binom + run);
    }
    return best + 2; // sign bit plus slack
}

std::vector<std::uint64_t> dense_mod(const SparseMatrix& matrix, std::uint64_t p) {
    const std::size_t n = matrix.rows();
    std::vector<std::uint64_t> dense(n * n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = matrix.col_start(j); k < matrix.col_start(j + 1); ++k) {
            const std::int64_t v = matrix.value(k);
            const std::int64_t r = ((v % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                   static_cast<std::int64_t>(p);
            dense[matrix.row_index(k) * n + j] = static_cast<std::uint64_t>(r);
        }
    }
    return dense;
}

} // namespace

IntPoly char_poly(const SparseMatrix& matrix, unsigned threads) {
    if (matrix.rows() != matrix.cols())
        throw domain_error("characteristic polynomial requires a square matrix");
    const std::size_t n = matrix.rows();
    if (n == 0) return IntPoly::constant(1);

    const double bits = coefficient_bound_bits(matrix);
    const std::size_t prime_count = static_cast<std::size_t>(bits / 30.0) + 2;
    const std::vector<std::uint64_t> primes = descending_primes(1ULL << 31, prime_count + 2);
    const std::size_t verify_from = prime_count;

    std::vector<std::vector<std::uint64_t>> residues(primes.size());
    if (threads == 0) {
        const char* env = std::getenv("LOOKSAY_THREADS");
        if (env != nullptr && *env != '\0') {
            const long parsed = std::strtol(env, nullptr, 10);
            if (parsed >= 1) threads = static_cast<unsigned>(parsed);
        }
        if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(primes.size()));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < primes.size(); i = next.fetch_add(1))
            residues[i] = charpoly_mod(dense_mod(matrix, primes[i]), n, primes[i]);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    // CRT with symmetric lifting over the working primes
    mpz_class modulus = 1;
    for (std::size_t i = 0; i < verify_from; ++i)
        modulus *= static_cast<unsigned long>(primes[i]);
    std::vector<mpz_class> basis(verify_from); // M/p_i * (M/p_i)^-1 mod p_i
    for (std::size_t i = 0; i < verify_from; ++i) {
        const mpz_class partial = modulus / static_cast<unsigned long>(primes[i]);
        const std::uint64_t inv = mod_inverse(mpz_fdiv_ui(partial.get_mpz_t(), primes[i]), primes[i]);
        basis[i] = partial * static_cast<unsigned long>(inv);
    }
    const mpz_class half = modulus / 2;
    std::vector<mpz_class> coefficients(n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
        mpz_class acc = 0;
        for (std::size_t i = 0; i < verify_from; ++i)
            acc += basis[i] * static_cast<unsigned long>(residues[i][d]);
        acc %= modulus;
        if (acc < 0) acc += modulus;
        if (acc > half) acc -= modulus;
        coefficients[d] = std::move(acc);
    }
    IntPoly result{std::move(coefficients)};

    // two held-out primes re-check the reconstruction end to end
    for (std::size_t i = verify_from; i < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        const std::vector<std::uint64_t>& independent = residues[i];
        for (std::size_t d = 0; d <= n; ++d) {
            if (mpz_fdiv_ui(result.coeff(d).get_mpz_t(), p) != independent[d])
                throw verify_error("characteristic polynomial failed the held-out prime check");
        }
    }
    return result;
}

mpf_class newton_refine(const IntPoly& p, double x0, double tol, unsigned precision) {
    if (p.degree() < 1) throw domain_error("root refinement requires degree >= 1");
    const IntPoly dp = p.derivative();
    mpf_class x(x0, precision);
    mpf_class step(0, precision);
    for (int iter = 0; iter < 200; ++iter) {
        const mpf_class fx = p.eval(x);
        const mpf_class dfx = dp.eval(x);
        if (dfx == 0) throw verify_error("root refinement hit a vanishing derivative");
        step = fx / dfx;
        x -= step;
        mpf_class bound(tol, precision);
        bound *= (x > 0 ? x : -x);
        if (step < 0) step = -step;
        if (step <= bound) break;
    }
    mpf_class drift = x - mpf_class(x0, precision);
    if (drift < 0) drift = -drift;
    if (drift > 1e-6)
        throw verify_error("refined root disagrees with the power-iteration estimate");
    return x;
}

} // namespace looksay
