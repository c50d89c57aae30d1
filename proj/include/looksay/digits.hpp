/* Digit strings over a base-b alphabet and the say-what-you-see rewrite step
 * for the three rule families:
 *
 *   standard     d^n -> n d          (numeral once, digit once)
 *   stutter      d^n -> n^n d        (numeral n times, digit once)
 *   j-stutter    d^n -> n^j d^j      (numeral j times, digit j times)
 *
 * Run counts use standard positional base-b numerals (no leading zeros), so a
 * run of length >= b contributes a multi-digit numeral.  j-stutter with j = 1
 * coincides with the standard rule.
 */
#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "looksay/errors.hpp"

namespace looksay {

inline constexpr unsigned kMinBase = 2;
inline constexpr unsigned kMaxBase = 36;

/* Default cap on the digit count of any single produced string. */
inline constexpr std::uint64_t kDefaultMaxDigits = 100'000'000;

/* A string of digit values (not characters): each byte is in [0, base).
 * Textual I/O maps values 0-9 to '0'-'9' and 10-35 to 'a'-'z'. */
class DigitString {
  public:
    DigitString() = default;

    /* Validating constructor over raw digit values. */
    DigitString(std::string digit_values, unsigned base);

    /* Parse a textual form ("333110", "a0f" for base >= 16, ...). */
    static DigitString from_text(std::string_view text, unsigned base);

    /* Wrap an already-valid value buffer without re-checking each byte.
     * Callers must guarantee every byte is < base. */
    static DigitString trusted(std::string digit_values, unsigned base);

    std::string to_text() const;

    const std::string& values() const { return digits_; }
    unsigned base() const { return base_; }
    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }
    std::uint8_t operator[](std::size_t i) const {
        return static_cast<std::uint8_t>(digits_[i]);
    }

    DigitString substr(std::size_t pos, std::size_t count) const;

    bool operator==(const DigitString& other) const = default;
    /* Order by (length, lexicographic) — the tie-break order used when two
     * elements are equally abundant. */
    bool shorter_lex_less(const DigitString& other) const;

  private:
    std::string digits_;
    std::uint8_t base_ = 10;
};

/* One maximal run: `count` copies of `digit`. */
struct Run {
    std::uint8_t digit = 0;
    std::uint64_t count = 0;

    bool operator==(const Run&) const = default;
};

enum class RuleKind { Standard, Stutter, JStutter };

struct RuleSpec {
    RuleKind kind = RuleKind::Stutter;
    std::uint32_t j = 1;  /* repetition count; meaningful for JStutter only */
    std::uint8_t base = 10;

    static RuleSpec standard(unsigned base = 10);
    static RuleSpec stutter(unsigned base = 10);
    static RuleSpec j_stutter(unsigned j, unsigned base = 10);

    /* "standard" | "stutter" | "jstutter:<j>", used in serialized output. */
    std::string name() const;
    static RuleSpec parse(std::string_view name, unsigned base);

    bool operator==(const RuleSpec&) const = default;
};

/* Maximal-run decomposition; concatenating the runs reproduces s. */
std::vector<Run> encode_runs(const DigitString& s);

/* Inverse of encode_runs. */
DigitString decode_runs(const std::vector<Run>& runs, unsigned base);

/* Standard positional base-b numeral of n >= 1 as digit values. */
DigitString render_count(std::uint64_t n, unsigned base);

/* Per-run emission counts of a rule: {numeral copies, trailing digit copies}
 * produced for one run of the given length. */
std::pair<std::uint64_t, std::uint64_t> rule_repeats(const RuleSpec& rule,
                                                     std::uint64_t run_length);

/* Digit count of say_step(s) without producing it (the length law). */
std::uint64_t say_step_length(const DigitString& s, const RuleSpec& rule);

/* One application of the rule.  Throws budget_error if the output would
 * exceed max_digits, domain_error on empty input or base mismatch. */
DigitString say_step(const DigitString& s, const RuleSpec& rule,
                     std::uint64_t max_digits = kDefaultMaxDigits);

/* seed, say(seed), say^2(seed), ... — `terms` strings in total (terms >= 1),
 * so the result holds S_0 .. S_{terms-1}. */
std::vector<DigitString> generate_sequence(const DigitString& seed,
                                           const RuleSpec& rule, std::size_t terms,
                                           std::uint64_t max_digits = kDefaultMaxDigits);

/* Exact length ratio len(S_{k+1}) / len(S_k), reduced. */
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Ratio&) const = default;
};

/* Ratios of successive term lengths; result[k] = len(seq[k+1]) / len(seq[k]).
 * Requires >= 2 terms, none empty. */
std::vector<Ratio> length_ratios(const std::vector<DigitString>& seq);

/* Compact display form, one token per run: "9^10 8^9 ... 1^2 0" (count
 * omitted when 1).  parse_run_notation is the exact inverse and also accepts
 * plain digit strings (a token per character). */
std::string run_notation(const DigitString& s);
DigitString parse_run_notation(std::string_view text, unsigned base);

} // namespace looksay
