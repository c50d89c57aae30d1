#include "looksay/modular.hpp"

#include "looksay/errors.hpp"

namespace looksay {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                            29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // these witnesses are deterministic for all 64-bit integers
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                            29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::uint64_t> descending_primes(std::uint64_t below, std::size_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t p = below; p-- > 2 && out.size() < count;) {
        if (is_prime_u64(p)) out.push_back(p);
    }
    if (out.size() < count) throw domain_error("not enough primes below the requested bound");
    return out;
}

std::vector<std::uint64_t> ascending_primes(std::uint64_t from, std::size_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t p = from < 2 ? 2 : from; out.size() < count; ++p) {
        if (is_prime_u64(p)) out.push_back(p);
    }
    return out;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw domain_error("no inverse for 0 modulo a prime");
    return mod_pow(a, p - 2, p);
}

/* Similarity reduction to upper Hessenberg form, in place.  Row operations
 * are mirrored by the inverse column operations so the characteristic
 * polynomial is preserved; a zero pivot column simply stays (the matrix is
 * already Hessenberg at that position). */
static void hessenberg_mod(std::vector<std::uint64_t>& h, std::size_t n, std::uint64_t p) {
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return h[r * n + c]; };
    if (n < 3) return;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::size_t piv = 0;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (at(r, k) != 0) {
                piv = r;
                break;
            }
        }
        if (piv == 0) continue; // column already eliminated
        if (piv != k + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(at(k + 1, c), at(piv, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(at(r, k + 1), at(r, piv));
        }
        const std::uint64_t inv = mod_inverse(at(k + 1, k), p);
        for (std::size_t r = k + 2; r < n; ++r) {
            const std::uint64_t f = at(r, k) * inv % p;
            if (f == 0) continue;
            // row_r -= f * row_{k+1}  (columns before k are already zero)
            const std::uint64_t neg = p - f;
            for (std::size_t c = k; c < n; ++c)
                at(r, c) = (at(r, c) + neg * at(k + 1, c)) % p;
            // col_{k+1} += f * col_r  (the inverse similarity operation)
            for (std::size_t r2 = 0; r2 < n; ++r2)
                at(r2, k + 1) = (at(r2, k + 1) + f * at(r2, r)) % p;
        }
    }
}

std::vector<std::uint64_t> charpoly_mod(std::vector<std::uint64_t> matrix, std::size_t n,
                                        std::uint64_t p) {
    if (p < 2 || p >= (1ULL << 31) || !is_prime_u64(p))
        throw domain_error("modulus must be a prime below 2^31");
    if (matrix.size() != n * n) throw domain_error("matrix storage does not match dimension");
    for (std::uint64_t& v : matrix) v %= p;
    hessenberg_mod(matrix, n, p);
    auto at = [&](std::size_t r, std::size_t c) { return matrix[r * n + c]; };

    /* p_k = characteristic polynomial of the leading k-by-k minor:
     *   p_k = (x - h[k-1][k-1]) p_{k-1}
     *         - sum_i h[i-1][k-1] * (prod_{j=i+1..k} h[j][j-1]) * p_{i-1}   */
    std::vector<std::vector<std::uint64_t>> minors(n + 1);
    minors[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        const std::uint64_t hkk = at(k - 1, k - 1);
        std::vector<std::uint64_t> pk(k + 1, 0);
        for (std::size_t d = 0; d < k; ++d) {
            pk[d + 1] = minors[k - 1][d]; // x * p_{k-1}
            if (hkk) pk[d] = (pk[d] + (p - hkk) * minors[k - 1][d]) % p;
        }
        std::uint64_t beta = 1;
        for (std::size_t i = k - 1; i >= 1; --i) {
            beta = beta * at(i, i - 1) % p;
            if (beta == 0) break;
            const std::uint64_t w = at(i - 1, k - 1) * beta % p;
            if (w == 0) continue;
            const std::uint64_t neg = p - w;
            for (std::size_t d = 0; d < i; ++d)
                pk[d] = (pk[d] + neg * minors[i - 1][d]) % p;
        }
        minors[k] = std::move(pk);
    }
    return minors[n];
}

ModPoly reduce_mod(const IntPoly& f, std::uint64_t p) {
    if (p < 2 || p >= (1ULL << 31)) throw domain_error("modulus must be a positive word-sized prime");
    ModPoly out(f.coefficients().size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = mpz_fdiv_ui(f.coefficients()[k].get_mpz_t(), p);
    return mod_trim(std::move(out));
}

ModPoly mod_trim(ModPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

ModPoly mod_monic(ModPoly a, std::uint64_t p) {
    a = mod_trim(std::move(a));
    if (a.empty() || a.back() == 1) return a;
    const std::uint64_t inv = mod_inverse(a.back(), p);
    for (std::uint64_t& c : a) c = c * inv % p;
    return a;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t k = 0; k < b.size(); ++k)
            out[i + k] = (out[i + k] + a[i] * b[k]) % p;
    }
    return mod_trim(std::move(out));
}

ModPoly mod_rem(ModPoly a, const ModPoly& f, std::uint64_t p) {
    return mod_divmod(std::move(a), f, p).second;
}

std::pair<ModPoly, ModPoly> mod_divmod(ModPoly a, const ModPoly& f, std::uint64_t p) {
    ModPoly d = mod_monic(f, p);
    if (d.empty()) throw domain_error("division by the zero polynomial");
    a = mod_trim(std::move(a));
    if (a.size() < d.size()) return {{}, std::move(a)};
    ModPoly quotient(a.size() - d.size() + 1, 0);
    while (a.size() >= d.size()) {
        const std::uint64_t top = a.back();
        const std::size_t shift = a.size() - d.size();
        if (top != 0) {
            quotient[shift] = top;
            const std::uint64_t neg = p - top;
            for (std::size_t i = 0; i < d.size(); ++i)
                a[shift + i] = (a[shift + i] + neg * d[i]) % p;
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return {mod_trim(std::move(quotient)), std::move(a)};
}

ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
    a = mod_trim(std::move(a));
    b = mod_trim(std::move(b));
    while (!b.empty()) {
        ModPoly r = mod_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return mod_monic(std::move(a), p);
}

ModPoly mod_derivative(const ModPoly& a, std::uint64_t p) {
    if (a.size() <= 1) return {};
    ModPoly out(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) out[k - 1] = a[k] % p * (k % p) % p;
    return mod_trim(std::move(out));
}

} // namespace looksay
