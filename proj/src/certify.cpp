#include "looksay/certify.hpp"

#include <algorithm>
#include <bitset>
#include <sstream>

#include "looksay/errors.hpp"
#include "looksay/modular.hpp"
#include "looksay/spectral.hpp"

namespace looksay {

namespace {

constexpr std::size_t kMaxCertDegree = 4096;
constexpr std::uint64_t kFirstPatternPrime = 1009;

/* True when p reduced mod q keeps its degree and is square-free there. */
bool usable_prime(const IntPoly& p, std::uint64_t q, ModPoly* reduced = nullptr) {
    if (mpz_fdiv_ui(p.leading().get_mpz_t(), q) == 0) return false;
    ModPoly fm = reduce_mod(p, q);
    if (mod_gcd(fm, mod_derivative(fm, q), q).size() != 1) return false;
    if (reduced != nullptr) *reduced = std::move(fm);
    return true;
}

} // namespace

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw domain_error("square-free part of the zero polynomial");
    if (p.degree() <= 1) return p;
    for (std::uint64_t q : ascending_primes(kFirstPatternPrime, 8)) {
        if (usable_prime(p, q)) return p; // square-free mod q implies square-free over Z
    }
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return p.divide_exact(g);
}

std::pair<IntPoly, StrippedFactors> strip_trivial_factors(const IntPoly& p,
                                                          unsigned max_cyclotomic_order) {
    if (p.is_zero()) throw domain_error("cannot strip factors from the zero polynomial");
    IntPoly residual = p;
    StrippedFactors factors;
    while (residual.degree() >= 1 && residual.coeff(0) == 0) {
        std::vector<mpz_class> shifted(residual.coefficients().begin() + 1,
                                       residual.coefficients().end());
        residual = IntPoly(std::move(shifted));
        ++factors.power_of_x;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (unsigned m = 1; m <= max_cyclotomic_order; ++m) {
            const IntPoly& phi = cyclotomic(m);
            while (residual.degree() >= phi.degree()) {
                auto [quotient, remainder] = residual.divmod_monic(phi);
                if (!remainder.is_zero()) break;
                residual = std::move(quotient);
                factors.cyclotomic_orders.push_back(m);
                changed = true;
            }
        }
    }
    std::sort(factors.cyclotomic_orders.begin(), factors.cyclotomic_orders.end());
    // stripping reached a fixed point, so no stripped root may remain
    if (residual.degree() >= 1 &&
        (residual.eval(mpz_class(1)) == 0 || residual.eval(mpz_class(-1)) == 0 ||
         residual.coeff(0) == 0))
        throw verify_error("trivial-factor stripping left a trivial root behind");
    return {std::move(residual), std::move(factors)};
}

DegreePattern factor_degrees_mod_p(const IntPoly& p, std::uint64_t prime) {
    if (p.degree() < 1) throw domain_error("degree pattern requires degree >= 1");
    if (!is_prime_u64(prime) || prime >= (1ULL << 31))
        throw domain_error("degree pattern requires a word-sized prime");
    ModPoly fm;
    if (!usable_prime(p, prime, &fm))
        throw domain_error("prime divides the leading coefficient or the reduction is not square-free");
    fm = mod_monic(std::move(fm), prime);
    const std::size_t n = fm.size() - 1;

    // x^prime modulo fm by square-and-multiply
    ModPoly xp = {0, 1};
    xp = mod_rem(std::move(xp), fm, prime);
    {
        ModPoly acc = {1};
        ModPoly base = xp;
        std::uint64_t e = prime;
        while (e) {
            if (e & 1) acc = mod_rem(mod_mul(acc, base, prime), fm, prime);
            base = mod_rem(mod_mul(base, base, prime), fm, prime);
            e >>= 1;
        }
        xp = std::move(acc);
    }

    /* Frobenius matrix: column j holds x^(j*prime) mod fm, so applying it to
     * a coefficient vector is the p-power map on the quotient ring.  One
     * matrix-vector product per rung replaces a fresh modular exponentiation. */
    std::vector<ModPoly> frobenius(n);
    if (n > 0) {
        frobenius[0] = {1};
        for (std::size_t j = 1; j < n; ++j)
            frobenius[j] = mod_rem(mod_mul(frobenius[j - 1], xp, prime), fm, prime);
    }
    auto apply_frobenius = [&](const ModPoly& v) {
        ModPoly out;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] == 0) continue;
            const ModPoly& column = frobenius[j];
            if (out.size() < column.size()) out.resize(column.size(), 0);
            for (std::size_t i = 0; i < column.size(); ++i)
                out[i] = (out[i] + v[j] * column[i]) % prime;
        }
        return mod_trim(std::move(out));
    };

    DegreePattern pattern;
    ModPoly remaining = fm;
    ModPoly v = xp; // x^(prime^d) mod fm for the current rung d
    for (unsigned d = 1; remaining.size() >= 1 + 2 * d;) {
        ModPoly shifted = v;
        if (shifted.size() < 2) shifted.resize(2, 0);
        shifted[1] = (shifted[1] + prime - 1) % prime; // v - x
        ModPoly g = mod_gcd(remaining, mod_trim(std::move(shifted)), prime);
        if (g.size() > 1) {
            const unsigned found = static_cast<unsigned>(g.size() - 1);
            if (found % d != 0)
                throw verify_error("distinct-degree factorization produced an impossible degree");
            pattern.insert(pattern.end(), found / d, d);
            auto [quotient, remainder] = mod_divmod(std::move(remaining), g, prime);
            if (!remainder.empty())
                throw verify_error("distinct-degree factorization division was not exact");
            remaining = std::move(quotient);
        }
        ++d;
        if (remaining.size() >= 1 + 2 * d) v = apply_frobenius(v);
    }
    if (remaining.size() > 1) pattern.push_back(static_cast<unsigned>(remaining.size() - 1));
    std::sort(pattern.begin(), pattern.end());
    unsigned total = 0;
    for (unsigned d : pattern) total += d;
    if (total != n) throw verify_error("degree pattern does not sum to the polynomial degree");
    return pattern;
}

Certification certify_irreducible(const IntPoly& p, unsigned prime_budget) {
    if (p.degree() < 1) throw domain_error("irreducibility requires degree >= 1");
    Certification cert;
    const std::size_t n = static_cast<std::size_t>(p.degree());
    if (n == 1) {
        cert.status = Certification::Status::Irreducible;
        return cert;
    }
    if (n >= kMaxCertDegree) throw domain_error("degree too large for certification");

    std::bitset<kMaxCertDegree> achievable;
    bool have_pattern = false;
    std::uint64_t q = kFirstPatternPrime;
    std::size_t attempts = 0;
    const std::size_t max_attempts = static_cast<std::size_t>(prime_budget) * 4 + 16;
    while (cert.primes_used.size() < prime_budget && attempts < max_attempts) {
        q = ascending_primes(q, 1).front();
        ++attempts;
        if (!usable_prime(p, q)) {
            ++q;
            continue;
        }
        DegreePattern pattern = factor_degrees_mod_p(p, q);
        std::bitset<kMaxCertDegree> sums;
        sums.set(0);
        for (unsigned d : pattern) sums |= sums << d;
        achievable = have_pattern ? (achievable & sums) : sums;
        have_pattern = true;
        cert.primes_used.push_back(q);
        cert.patterns.push_back(std::move(pattern));
        std::bitset<kMaxCertDegree> trivial;
        trivial.set(0);
        trivial.set(n);
        if (achievable == trivial) {
            cert.status = Certification::Status::Irreducible;
            return cert;
        }
        ++q;
    }
    cert.status = Certification::Status::Inconclusive;
    return cert;
}

GrowthDegreeResult growth_degree(const IntPoly& char_polynomial, double lambda) {
    if (char_polynomial.degree() < 1) throw domain_error("growth degree requires degree >= 1");
    const IntPoly squarefree = squarefree_part(char_polynomial);
    auto [residual, stripped] = strip_trivial_factors(squarefree);

    const mpf_class root = newton_refine(squarefree, lambda);

    // candidate factors: the residual plus each distinct stripped cyclotomic
    std::vector<std::pair<const IntPoly*, unsigned>> candidates;
    if (residual.degree() >= 1) candidates.emplace_back(&residual, 0);
    for (std::size_t i = 0; i < stripped.cyclotomic_orders.size(); ++i) {
        const unsigned m = stripped.cyclotomic_orders[i];
        if (i > 0 && m == stripped.cyclotomic_orders[i - 1]) continue;
        candidates.emplace_back(&cyclotomic(m), m);
    }
    if (candidates.empty()) throw verify_error("no nontrivial factor remains after stripping");

    /* The factor with the dominant root is the one whose scaled value at the
     * refined root is both minimal and far below every competitor. */
    const IntPoly* best = nullptr;
    unsigned best_order = 0;
    mpf_class best_ratio;
    for (auto [factor, order] : candidates) {
        mpf_class value = factor->eval(root);
        if (value < 0) value = -value;
        mpz_class magnitude = 0;
        for (const mpz_class& c : factor->coefficients()) {
            mpz_class a = abs(c);
            if (a > magnitude) magnitude = a;
        }
        mpf_class scale(magnitude, root.get_prec());
        mpf_class base = root > 1 ? root : mpf_class(1, root.get_prec());
        mpf_class power(0, root.get_prec());
        mpf_pow_ui(power.get_mpf_t(), base.get_mpf_t(),
                   static_cast<unsigned long>(factor->degree()));
        scale *= power;
        mpf_class ratio = value / scale;
        if (best == nullptr || ratio < best_ratio) {
            best = factor;
            best_order = order;
            best_ratio = ratio;
        }
    }

    GrowthDegreeResult result;
    result.factor = *best;
    if (best_ratio > 1e-9) {
        std::ostringstream note;
        note << "no factor vanishes at the dominant root (best scaled value "
             << best_ratio.get_d() << ")";
        throw verify_error(note.str());
    }
    if (best_order != 0) {
        // cyclotomic polynomials are irreducible over the rationals
        result.degree = best->degree();
        result.certification.status = Certification::Status::Irreducible;
        result.note = "dominant root lies in a cyclotomic factor";
        return result;
    }
    result.certification = certify_irreducible(residual);
    if (result.certification.status == Certification::Status::Irreducible) {
        result.degree = residual.degree();
        result.note = "residual factor certified irreducible";
    } else {
        result.note = "residual factor certification inconclusive";
    }
    return result;
}

} // namespace looksay
