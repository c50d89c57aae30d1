#include "looksay/digits.hpp"

#include <array>
#include <cstring>

namespace looksay {

namespace {

constexpr std::string_view kAlphabet = "0123456789abcdefghijklmnopqrstuvwxyz";

void check_base(unsigned base) {
    if (base < kMinBase || base > kMaxBase)
        throw domain_error("base must be between 2 and 36, got " + std::to_string(base));
}

int digit_of_char(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    return -1;
}

} // namespace

DigitString::DigitString(std::string digit_values, unsigned base) {
    check_base(base);
    for (char c : digit_values) {
        if (static_cast<std::uint8_t>(c) >= base)
            throw domain_error("digit value " + std::to_string(int(c)) +
                               " out of range for base " + std::to_string(base));
    }
    digits_ = std::move(digit_values);
    base_ = static_cast<std::uint8_t>(base);
}

DigitString DigitString::from_text(std::string_view text, unsigned base) {
    check_base(base);
    std::string values;
    values.reserve(text.size());
    for (char c : text) {
        int d = digit_of_char(c);
        if (d < 0 || static_cast<unsigned>(d) >= base)
            throw domain_error(std::string("invalid digit character '") + c +
                               "' for base " + std::to_string(base));
        values.push_back(static_cast<char>(d));
    }
    return trusted(std::move(values), base);
}

DigitString DigitString::trusted(std::string digit_values, unsigned base) {
    DigitString s;
    s.digits_ = std::move(digit_values);
    s.base_ = static_cast<std::uint8_t>(base);
    return s;
}

std::string DigitString::to_text() const {
    std::string out;
    out.reserve(digits_.size());
    for (char v : digits_) out.push_back(kAlphabet[static_cast<std::uint8_t>(v)]);
    return out;
}

DigitString DigitString::substr(std::size_t pos, std::size_t count) const {
    return trusted(digits_.substr(pos, count), base_);
}

bool DigitString::shorter_lex_less(const DigitString& other) const {
    if (digits_.size() != other.digits_.size())
        return digits_.size() < other.digits_.size();
    return digits_ < other.digits_;
}

RuleSpec RuleSpec::standard(unsigned base) {
    check_base(base);
    return {RuleKind::Standard, 1, static_cast<std::uint8_t>(base)};
}

RuleSpec RuleSpec::stutter(unsigned base) {
    check_base(base);
    return {RuleKind::Stutter, 1, static_cast<std::uint8_t>(base)};
}

RuleSpec RuleSpec::j_stutter(unsigned j, unsigned base) {
    check_base(base);
    if (j < 1) throw domain_error("j-stutter requires j >= 1");
    return {RuleKind::JStutter, j, static_cast<std::uint8_t>(base)};
}

std::string RuleSpec::name() const {
    switch (kind) {
        case RuleKind::Standard: return "standard";
        case RuleKind::Stutter: return "stutter";
        case RuleKind::JStutter: return "jstutter:" + std::to_string(j);
    }
    return "?";
}

RuleSpec RuleSpec::parse(std::string_view name, unsigned base) {
    if (name == "standard") return standard(base);
    if (name == "stutter") return stutter(base);
    if (name.rfind("jstutter", 0) == 0) {
        std::string_view rest = name.substr(8);
        if (!rest.empty() && (rest[0] == ':' || rest[0] == '=')) rest.remove_prefix(1);
        unsigned j = 0;
        for (char c : rest) {
            if (c < '0' || c > '9') throw domain_error("bad rule name: " + std::string(name));
            j = j * 10 + static_cast<unsigned>(c - '0');
        }
        return j_stutter(j, base);
    }
    throw domain_error("unknown rule name: " + std::string(name));
}

std::vector<Run> encode_runs(const DigitString& s) {
    std::vector<Run> runs;
    const std::string& v = s.values();
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t r = i + 1;
        while (r < v.size() && v[r] == v[i]) ++r;
        runs.push_back({static_cast<std::uint8_t>(v[i]), r - i});
        i = r;
    }
    return runs;
}

DigitString decode_runs(const std::vector<Run>& runs, unsigned base) {
    std::string out;
    for (const Run& r : runs) out.append(r.count, static_cast<char>(r.digit));
    return DigitString(std::move(out), base);
}

DigitString render_count(std::uint64_t n, unsigned base) {
    check_base(base);
    if (n == 0) throw domain_error("run counts are positive; cannot render 0");
    char buf[64];
    int len = 0;
    while (n) {
        buf[len++] = static_cast<char>(n % base);
        n /= base;
    }
    std::string out(static_cast<std::size_t>(len), '\0');
    for (int k = 0; k < len; ++k) out[static_cast<std::size_t>(k)] = buf[len - 1 - k];
    return DigitString::trusted(std::move(out), base);
}

namespace {

/* Per-run emission counts for a rule: how many numeral copies and how many
 * trailing digits. */
inline void rule_multiplicities(const RuleSpec& rule, std::uint64_t run_count,
                                std::uint64_t& numeral_reps, std::uint64_t& digit_reps) {
    numeral_reps = digit_reps = 1;
    switch (rule.kind) {
        case RuleKind::Standard: numeral_reps = 1; digit_reps = 1; break;
        case RuleKind::Stutter: numeral_reps = run_count; digit_reps = 1; break;
        case RuleKind::JStutter: numeral_reps = rule.j; digit_reps = rule.j; break;
    }
}

inline void check_rule_input(const DigitString& s, const RuleSpec& rule) {
    if (s.empty()) throw domain_error("say step requires a nonempty string");
    if (s.base() != rule.base)
        throw domain_error("string base " + std::to_string(s.base()) +
                           " does not match rule base " + std::to_string(rule.base));
}

/* Base-b digits of n in output order; returns length. */
inline int numeral_digits(std::uint64_t n, unsigned base, char out[64]) {
    char rev[64];
    int len = 0;
    while (n) {
        rev[len++] = static_cast<char>(n % base);
        n /= base;
    }
    for (int k = 0; k < len; ++k) out[k] = rev[len - 1 - k];
    return len;
}

} // namespace

std::pair<std::uint64_t, std::uint64_t> rule_repeats(const RuleSpec& rule,
                                                     std::uint64_t run_length) {
    if (run_length == 0) throw domain_error("runs must have positive length");
    std::uint64_t reps, tail;
    rule_multiplicities(rule, run_length, reps, tail);
    return {reps, tail};
}

std::uint64_t say_step_length(const DigitString& s, const RuleSpec& rule) {
    check_rule_input(s, rule);
    const std::string& v = s.values();
    const unsigned base = rule.base;
    std::uint64_t total = 0;
    std::size_t i = 0;
    char buf[64];
    while (i < v.size()) {
        std::size_t r = i + 1;
        while (r < v.size() && v[r] == v[i]) ++r;
        std::uint64_t n = r - i;
        std::uint64_t reps, tail;
        rule_multiplicities(rule, n, reps, tail);
        total += reps * static_cast<std::uint64_t>(numeral_digits(n, base, buf)) + tail;
        i = r;
    }
    return total;
}

DigitString say_step(const DigitString& s, const RuleSpec& rule, std::uint64_t max_digits) {
    std::uint64_t out_len = say_step_length(s, rule);
    if (out_len > max_digits)
        throw budget_error("say step output of " + std::to_string(out_len) +
                           " digits exceeds the cap of " + std::to_string(max_digits));
    const std::string& v = s.values();
    const unsigned base = rule.base;
    std::string out;
    out.reserve(out_len);
    std::size_t i = 0;
    char num[64];
    while (i < v.size()) {
        const char d = v[i];
        std::size_t r = i + 1;
        while (r < v.size() && v[r] == d) ++r;
        std::uint64_t n = r - i;
        std::uint64_t reps, tail;
        rule_multiplicities(rule, n, reps, tail);
        int len = numeral_digits(n, base, num);
        for (std::uint64_t t = 0; t < reps; ++t) out.append(num, static_cast<std::size_t>(len));
        out.append(tail, d);
        i = r;
    }
    return DigitString::trusted(std::move(out), base);
}

std::vector<DigitString> generate_sequence(const DigitString& seed, const RuleSpec& rule,
                                           std::size_t terms, std::uint64_t max_digits) {
    if (terms < 1) throw domain_error("generate_sequence requires terms >= 1");
    check_rule_input(seed, rule);
    std::vector<DigitString> seq;
    seq.reserve(terms);
    seq.push_back(seed);
    for (std::size_t k = 1; k < terms; ++k)
        seq.push_back(say_step(seq.back(), rule, max_digits));
    return seq;
}

std::string run_notation(const DigitString& s) {
    std::string out;
    for (const Run& r : encode_runs(s)) {
        if (!out.empty()) out.push_back(' ');
        out.push_back(kAlphabet[r.digit]);
        if (r.count > 1) {
            out.push_back('^');
            out += std::to_string(r.count);
        }
    }
    return out;
}

DigitString parse_run_notation(std::string_view text, unsigned base) {
    check_base(base);
    std::vector<Run> runs;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ') {
            ++i;
            continue;
        }
        int d = digit_of_char(text[i]);
        if (d < 0 || static_cast<unsigned>(d) >= base)
            throw domain_error(std::string("invalid digit character '") + text[i] +
                               "' in run notation");
        ++i;
        std::uint64_t count = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            if (i >= text.size() || text[i] < '0' || text[i] > '9')
                throw domain_error("run notation: '^' must be followed by a count");
            count = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9')
                count = count * 10 + static_cast<std::uint64_t>(text[i++] - '0');
            if (count == 0) throw domain_error("run notation: count must be positive");
        }
        runs.push_back({static_cast<std::uint8_t>(d), count});
    }
    if (runs.empty()) throw domain_error("run notation: no digits present");
    return decode_runs(runs, base);
}

std::vector<Ratio> length_ratios(const std::vector<DigitString>& seq) {
    if (seq.size() < 2) throw domain_error("length_ratios requires at least 2 terms");
    std::vector<Ratio> out;
    out.reserve(seq.size() - 1);
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        std::uint64_t a = seq[k + 1].size(), b = seq[k].size();
        if (b == 0) throw domain_error("length_ratios: empty term at index " + std::to_string(k));
        std::uint64_t g = std::gcd(a, b);
        out.push_back({a / g, b / g});
    }
    return out;
}

} // namespace looksay
