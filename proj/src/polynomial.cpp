#include "looksay/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "looksay/errors.hpp"

namespace looksay {

namespace {

const mpz_class kZero = 0;

} // namespace

IntPoly::IntPoly(std::vector<mpz_class> ascending) : coeff_(std::move(ascending)) {
    normalize();
}

IntPoly IntPoly::constant(long value) {
    if (value == 0) return IntPoly();
    return IntPoly(std::vector<mpz_class>{mpz_class(value)});
}

IntPoly IntPoly::monomial(std::size_t degree, long coefficient) {
    if (coefficient == 0) return IntPoly();
    std::vector<mpz_class> c(degree + 1, kZero);
    c[degree] = coefficient;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::from_strings(const std::vector<std::string>& ascending_decimal) {
    std::vector<mpz_class> c;
    c.reserve(ascending_decimal.size());
    for (const std::string& s : ascending_decimal) {
        mpz_class v;
        if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
            throw domain_error("not a decimal integer: \"" + s + "\"");
        c.push_back(std::move(v));
    }
    return IntPoly(std::move(c));
}

void IntPoly::normalize() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

const mpz_class& IntPoly::leading() const {
    if (coeff_.empty()) throw domain_error("zero polynomial has no leading coefficient");
    return coeff_.back();
}

const mpz_class& IntPoly::coeff(std::size_t k) const {
    return k < coeff_.size() ? coeff_[k] : kZero;
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
    std::vector<mpz_class> c(std::max(coeff_.size(), other.coeff_.size()), kZero);
    for (std::size_t k = 0; k < coeff_.size(); ++k) c[k] = coeff_[k];
    for (std::size_t k = 0; k < other.coeff_.size(); ++k) c[k] += other.coeff_[k];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& other) const {
    std::vector<mpz_class> c(std::max(coeff_.size(), other.coeff_.size()), kZero);
    for (std::size_t k = 0; k < coeff_.size(); ++k) c[k] = coeff_[k];
    for (std::size_t k = 0; k < other.coeff_.size(); ++k) c[k] -= other.coeff_[k];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
    if (is_zero() || other.is_zero()) return IntPoly();
    std::vector<mpz_class> c(coeff_.size() + other.coeff_.size() - 1, kZero);
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        for (std::size_t k = 0; k < other.coeff_.size(); ++k)
            c[i + k] += coeff_[i] * other.coeff_[k];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
    if (coeff_.size() <= 1) return IntPoly();
    std::vector<mpz_class> c(coeff_.size() - 1);
    for (std::size_t k = 1; k < coeff_.size(); ++k) c[k - 1] = coeff_[k] * static_cast<long>(k);
    return IntPoly(std::move(c));
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const mpz_class& c : coeff_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    mpz_class g = content();
    if (leading() < 0) g = -g;
    std::vector<mpz_class> c(coeff_.size());
    for (std::size_t k = 0; k < coeff_.size(); ++k) c[k] = coeff_[k] / g;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw domain_error("division by the zero polynomial");
    if (is_zero()) return IntPoly();
    if (degree() < divisor.degree())
        throw verify_error("exact division failed: dividend degree below divisor degree");
    std::vector<mpz_class> rem = coeff_;
    std::vector<mpz_class> quo(coeff_.size() - divisor.coeff_.size() + 1, kZero);
    const mpz_class& lead = divisor.leading();
    for (std::size_t k = quo.size(); k-- > 0;) {
        mpz_class& top = rem[k + divisor.coeff_.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw verify_error("exact division failed: leading coefficient does not divide");
        quo[k] = top / lead;
        for (std::size_t i = 0; i < divisor.coeff_.size(); ++i)
            rem[k + i] -= quo[k] * divisor.coeff_[i];
    }
    for (const mpz_class& r : rem)
        if (r != 0) throw verify_error("exact division failed: nonzero remainder");
    return IntPoly(std::move(quo));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
    if (divisor.is_zero() || divisor.leading() != 1)
        throw domain_error("divmod_monic requires a monic divisor");
    if (degree() < divisor.degree()) return {IntPoly(), *this};
    std::vector<mpz_class> rem = coeff_;
    std::vector<mpz_class> quo(coeff_.size() - divisor.coeff_.size() + 1, kZero);
    for (std::size_t k = quo.size(); k-- > 0;) {
        mpz_class top = rem[k + divisor.coeff_.size() - 1];
        if (top == 0) continue;
        quo[k] = top;
        for (std::size_t i = 0; i < divisor.coeff_.size(); ++i)
            rem[k + i] -= top * divisor.coeff_[i];
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (std::size_t k = coeff_.size(); k-- > 0;) acc = acc * x + coeff_[k];
    return acc;
}

mpf_class IntPoly::eval(const mpf_class& x) const {
    mpf_class acc(0, x.get_prec());
    for (std::size_t k = coeff_.size(); k-- > 0;) {
        acc *= x;
        acc += mpf_class(coeff_[k], x.get_prec());
    }
    return acc;
}

std::uint64_t IntPoly::eval_mod(std::uint64_t x, std::uint64_t p) const {
    if (p == 0 || p >= (1ULL << 31)) throw domain_error("modulus must be a positive word-sized prime");
    const std::uint64_t xm = x % p;
    std::uint64_t acc = 0;
    for (std::size_t k = coeff_.size(); k-- > 0;) {
        // mpz_fdiv_ui yields the nonnegative residue even for negative coefficients
        const std::uint64_t c = mpz_fdiv_ui(coeff_[k].get_mpz_t(), p);
        acc = (acc * xm + c) % p;
    }
    return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeff_.size(); k-- > 0;) {
        const mpz_class& c = coeff_[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

namespace {

/* Remainder of a modulo b up to scalar multiples: each elimination step
 * scales by lead(b) and divides the content back out, so coefficients stay
 * small.  Scalar factors are irrelevant for gcd purposes. */
IntPoly scaled_rem(IntPoly a, const IntPoly& b) {
    const mpz_class& lb = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        std::vector<mpz_class> c = a.coefficients();
        const mpz_class la = a.leading();
        const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
        for (mpz_class& v : c) v *= lb;
        for (std::size_t i = 0; i < b.coefficients().size(); ++i)
            c[shift + i] -= la * b.coefficients()[i];
        a = IntPoly(std::move(c)).primitive_part();
    }
    return a;
}

} // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly f = a.primitive_part();
    IntPoly g = b.primitive_part();
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPoly r = scaled_rem(std::move(f), g);
        f = std::move(g);
        g = std::move(r);
    }
    return f;
}

namespace {

const IntPoly& cyclotomic_locked(unsigned m, std::map<unsigned, IntPoly>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // x^m - 1 divided by the cyclotomics of all proper divisors of m
    std::vector<mpz_class> xm(m + 1, kZero);
    xm[0] = -1;
    xm[m] = 1;
    IntPoly result{std::move(xm)};
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        result = result.divmod_monic(cyclotomic_locked(d, cache)).first;
    }
    return cache.emplace(m, std::move(result)).first->second;
}

} // namespace

const IntPoly& cyclotomic(unsigned m) {
    static std::map<unsigned, IntPoly> cache;
    static std::mutex lock;
    if (m == 0) throw domain_error("cyclotomic index must be positive");
    std::lock_guard<std::mutex> guard(lock);
    return cyclotomic_locked(m, cache);
}

} // namespace looksay
