/* Decomposition of digit strings into independently-evolving chunks.
 *
 * A cut between positions i and i+1 is sound when the left part always ends
 * in 0 and the right part always starts nonzero from that step onward; the
 * built-in predicate cuts exactly after a 0 that is followed by a nonzero
 * digit.  Soundness for all built-in rules follows because say output chunks
 * begin with the leading (nonzero) digit of a numeral, and a trailing 0 run
 * re-emits a trailing 0.  An empirical verifier is provided as an oracle for
 * custom predicates and as a property-test hook.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "looksay/digits.hpp"

namespace looksay {

inline constexpr int kDefaultVerifyDepth = 15;

struct SplitPredicate {
    /* Short tag used in serialized output ("after-zero"). */
    std::string tag;
    /* True iff a split is proven between s[i] and s[i+1]; requires
     * 0 <= i < len(s)-1. */
    std::function<bool(const DigitString&, std::size_t)> at;
    /* Rules this predicate is known to be sound for. */
    std::vector<RuleKind> compatible;
    /* Set for the built-in predicate; enables a branch-free scan in split(). */
    bool builtin_after_zero = false;

    static SplitPredicate after_zero();
    bool compatible_with(const RuleSpec& rule) const;
};

/* The built-in cut test: s[i] == 0 and s[i+1] != 0. */
bool split_after_zero(const DigitString& s, std::size_t i);

/* Cut s at every position accepted by pred; chunks concatenate back to s.
 * With the built-in predicate every chunk except possibly the last ends in a
 * run of zeros, and no chunk has an internal accepted cut. */
std::vector<DigitString> split(const DigitString& s, const SplitPredicate& pred);
std::vector<DigitString> split(const DigitString& s);

/* True iff split(s, pred) returns exactly one chunk; for the built-in
 * predicate this means: at most one run of 0's, and only at the end. */
bool is_element(const DigitString& s, const SplitPredicate& pred);
bool is_element(const DigitString& s);

/* Evolve L, R and L||R independently `depth` steps and compare term by term;
 * true iff say^n(L||R) == say^n(L) || say^n(R) for all n <= depth. */
bool verify_split_empirically(const DigitString& L, const DigitString& R,
                              const RuleSpec& rule, int depth = kDefaultVerifyDepth,
                              std::uint64_t max_digits = kDefaultMaxDigits);

/* Verify every built-in cut of s at once: evolve the chunks of split(s)
 * piecewise alongside the whole string and require (a) the concatenation of
 * the evolved chunks equals the evolved whole at every step, and (b) the
 * boundary digits keep the cut invariant (left ends 0, right starts nonzero).
 * Returns the number of cuts covered.  Equivalent in coverage to running
 * verify_split_empirically at every cut, at the cost of a single evolution. */
std::size_t verify_all_cuts(const DigitString& s, const RuleSpec& rule,
                            int depth = kDefaultVerifyDepth,
                            std::uint64_t max_digits = kDefaultMaxDigits);

} // namespace looksay
