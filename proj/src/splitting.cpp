#include "looksay/splitting.hpp"

#include <cstring>

namespace looksay {

bool split_after_zero(const DigitString& s, std::size_t i) {
    if (i + 1 >= s.size()) throw domain_error("cut index out of range");
    return s[i] == 0 && s[i + 1] != 0;
}

SplitPredicate SplitPredicate::after_zero() {
    SplitPredicate p;
    p.tag = "after-zero";
    p.at = [](const DigitString& s, std::size_t i) { return split_after_zero(s, i); };
    p.compatible = {RuleKind::Standard, RuleKind::Stutter, RuleKind::JStutter};
    p.builtin_after_zero = true;
    return p;
}

bool SplitPredicate::compatible_with(const RuleSpec& rule) const {
    for (RuleKind k : compatible)
        if (k == rule.kind) return true;
    return false;
}

std::vector<DigitString> split(const DigitString& s, const SplitPredicate& pred) {
    if (s.empty()) throw domain_error("cannot split an empty string");
    std::vector<DigitString> chunks;
    const std::string& v = s.values();
    std::size_t start = 0;
    if (pred.builtin_after_zero) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i] == 0 && v[i + 1] != 0) {
                chunks.push_back(s.substr(start, i + 1 - start));
                start = i + 1;
            }
        }
    } else {
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            if (pred.at(s, i)) {
                chunks.push_back(s.substr(start, i + 1 - start));
                start = i + 1;
            }
        }
    }
    chunks.push_back(s.substr(start, v.size() - start));
    return chunks;
}

std::vector<DigitString> split(const DigitString& s) {
    static const SplitPredicate kAfterZero = SplitPredicate::after_zero();
    return split(s, kAfterZero);
}

bool is_element(const DigitString& s, const SplitPredicate& pred) {
    if (s.empty()) throw domain_error("empty string is not a candidate element");
    if (pred.builtin_after_zero) {
        const std::string& v = s.values();
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] == 0 && v[i + 1] != 0) return false;
        return true;
    }
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (pred.at(s, i)) return false;
    return true;
}

bool is_element(const DigitString& s) {
    static const SplitPredicate kAfterZero = SplitPredicate::after_zero();
    return is_element(s, kAfterZero);
}

bool verify_split_empirically(const DigitString& L, const DigitString& R,
                              const RuleSpec& rule, int depth, std::uint64_t max_digits) {
    if (L.empty() || R.empty()) throw domain_error("verify_split_empirically needs nonempty parts");
    if (depth < 1) throw domain_error("verify depth must be >= 1");
    DigitString left = L, right = R;
    DigitString whole = DigitString::trusted(L.values() + R.values(), L.base());
    for (int n = 1; n <= depth; ++n) {
        left = say_step(left, rule, max_digits);
        right = say_step(right, rule, max_digits);
        whole = say_step(whole, rule, max_digits);
        if (left.size() + right.size() != whole.size()) return false;
        const std::string& w = whole.values();
        if (std::memcmp(w.data(), left.values().data(), left.size()) != 0) return false;
        if (std::memcmp(w.data() + left.size(), right.values().data(), right.size()) != 0)
            return false;
    }
    return true;
}

std::size_t verify_all_cuts(const DigitString& s, const RuleSpec& rule, int depth,
                            std::uint64_t max_digits) {
    std::vector<DigitString> pieces = split(s);
    std::size_t cuts = pieces.size() - 1;
    if (cuts == 0) return 0;
    DigitString whole = s;
    for (int n = 1; n <= depth; ++n) {
        whole = say_step(whole, rule, max_digits);
        std::size_t offset = 0;
        const std::string& w = whole.values();
        for (std::size_t k = 0; k < pieces.size(); ++k) {
            pieces[k] = say_step(pieces[k], rule, max_digits);
            const std::string& p = pieces[k].values();
            /* boundary invariant: interior pieces end in 0, later pieces
             * start nonzero — this is what makes each cut independent */
            if (k + 1 < pieces.size() && p.back() != 0)
                throw verify_error("piecewise check: interior piece lost its trailing 0");
            if (k > 0 && p.front() == 0)
                throw verify_error("piecewise check: piece gained a leading 0");
            if (offset + p.size() > w.size() ||
                std::memcmp(w.data() + offset, p.data(), p.size()) != 0)
                throw verify_error("piecewise check: chunk evolution diverged from the whole");
            offset += p.size();
        }
        if (offset != w.size())
            throw verify_error("piecewise check: chunk lengths do not cover the whole");
    }
    return cuts;
}

} // namespace looksay
