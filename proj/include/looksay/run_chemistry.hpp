/* Chemistry discovery on run-length encoded strings.
 *
 * The j-stutter rules explode materialized strings: under the zero-split
 * predicate alone their non-splitting chunks reach millions of digits.  Two
 * tools make these rules tractable.  First, the say step works directly on
 * run lists (numeral runs emitted with junction merging), so length is never
 * a memory problem.  Second, a finer cut rule keeps chunks small: the last
 * digit of a left part L is invariant under every rule family (d^n always
 * ends with a copy of d), so a cut x|R persists for all time exactly when x
 * never equals the first digit of any future iterate of R.  Those first
 * digits are computed exactly over a fixed horizon from a bounded prefix
 * window of R — knowing the leading runs of one generation requires no more
 * leading runs of the previous one.  When the window cannot decide, the cut
 * is rejected, which is always safe (a missed cut only makes elements
 * bigger, never wrong).
 */
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "looksay/chemistry.hpp"
#include "looksay/digits.hpp"
#include "looksay/sparse_matrix.hpp"

namespace looksay {

using RunString = std::vector<Run>;

/* Sum of run counts (the length of the encoded string). */
std::uint64_t total_digits(const RunString& runs);

/* Display form matching run_notation: "9^10 8^9 ... 0", count omitted at 1. */
std::string run_text(const RunString& runs);

/* One say step on a run list.  Output digit total above max_digits raises
 * budget_error. */
RunString say_runs(const RunString& runs, const RuleSpec& rule,
                   std::uint64_t max_digits = kDefaultMaxDigits);

/* Window and horizon of the first-digit-orbit cut decision. */
struct OrbitCutParams {
    /* Generations of first digits examined. */
    unsigned horizon = 96;
    /* Leading runs retained per generation. */
    unsigned window_runs = 48;
    /* Digit budget of the suffix window the decision may inspect. */
    std::uint64_t window_digits = 4096;
};

/* Decides the cut <left_digit> | suffix: true when left_digit is 0 (the
 * always-safe zero cut) or provably absent from the first digits of
 * say^t(suffix) for every t up to the horizon.  Returns false whenever the
 * bounded window cannot decide. */
bool orbit_cut_safe(std::uint8_t left_digit, std::span<const Run> suffix,
                    const RuleSpec& rule, const OrbitCutParams& params = {});

/* The zero-split predicate on run lists: cut after every non-terminal run
 * of zeros. */
std::vector<RunString> split_runs_after_zero(const RunString& runs);

/* Zero cuts plus every run boundary the orbit rule certifies. */
std::vector<RunString> split_runs_orbit(const RunString& runs, const RuleSpec& rule,
                                        const OrbitCutParams& params = {});

struct RunElement {
    std::uint32_t id = 0; /* 1-based, discovery (BFS) order */
    RunString runs;
    std::vector<std::uint32_t> decay; /* ids, order and repeats kept */
};

/* Closure of a seed's chunks under decay, every chunk an element. */
class RunChemistry {
  public:
    RunChemistry(RuleSpec rule, bool orbit_cuts, std::vector<RunElement> elements)
        : rule_(rule), orbit_cuts_(orbit_cuts), elements_(std::move(elements)) {}

    const RuleSpec& rule() const { return rule_; }
    bool orbit_cuts() const { return orbit_cuts_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<RunElement>& elements() const { return elements_; }
    const RunElement& by_id(std::uint32_t id) const;

  private:
    RuleSpec rule_;
    bool orbit_cuts_ = false;
    std::vector<RunElement> elements_;
};

/* Breadth-first closure from the seed's first decay.  With orbit_cuts false
 * this reproduces the zero-split chemistry on run lists; with true the
 * finer cut rule applies (required for j-stutter rules).  Budget violations
 * raise budget_error. */
RunChemistry discover_run_elements(const DigitString& seed, const RuleSpec& rule,
                                   bool orbit_cuts, const DiscoveryLimits& limits = {},
                                   const OrbitCutParams& params = {});

/* n-by-n decay matrix over all elements: entry (i, j) counts element i+1 in
 * the decay of element j+1. */
SparseMatrix build_decay_matrix(const RunChemistry& chem);

} // namespace looksay
