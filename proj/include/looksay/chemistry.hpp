#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "looksay/digits.hpp"
#include "looksay/splitting.hpp"
#include "looksay/sparse_matrix.hpp"

namespace looksay {

/* One discovered element.  Ids are 1-based and global: 1..n name the matrix
 * elements (strings whose zeros, if any, form one terminal run ending the
 * string in 0), n+1..n+m name the exotics (strings not ending in 0, which can
 * only ever be the final chunk of a compound and so have abundance zero). */
struct Element {
    std::uint32_t id = 0;
    DigitString string;
    std::vector<std::uint32_t> decay;  /* chunk ids in order, repeats kept */
    bool persistent = false;           /* reachable from a decay-digraph cycle */
};

struct DiscoveryLimits {
    std::size_t max_elements = 5000;      /* elements + exotics combined */
    std::size_t max_digits = 1'000'000;   /* per element string */
    std::size_t max_iterations = 200;     /* closure rounds */
};

class Chemistry {
public:
    RuleSpec rule;
    std::string predicate_tag;
    std::vector<Element> elements;  /* elements[i].id == i+1 */
    std::vector<Element> exotics;   /* exotics[i].id == elements.size()+i+1 */
    bool ordered = false;           /* ids follow descending abundance */
    /* set by order_by_abundance: ordering[k] = pre-ordering id of element k+1 */
    std::vector<std::uint32_t> ordering;

    std::size_t size() const { return elements.size(); }
    const Element& by_id(std::uint32_t id) const;
    std::optional<std::uint32_t> id_of(const DigitString& s) const;

    void rebuild_index();

private:
    std::unordered_map<std::string, std::uint32_t> index_;
};

/* Thrown when discovery exceeds its limits; carries what was found so far. */
class discovery_overflow : public budget_error {
public:
    discovery_overflow(const std::string& what, Chemistry partial)
        : budget_error(what), partial_(std::make_shared<Chemistry>(std::move(partial))) {}
    const Chemistry& partial() const { return *partial_; }

private:
    std::shared_ptr<const Chemistry> partial_;
};

/* One rewrite step followed by a split: the decay of s. */
std::vector<DigitString> decay_of(const DigitString& s, const RuleSpec& rule,
                                  const SplitPredicate& pred = SplitPredicate::after_zero());

/* Breadth-first decay closure of the chunks of the seed's first rewrite.
 * Deterministic: ids follow first-appearance order, elements before exotics. */
Chemistry discover_elements(const DigitString& seed, const RuleSpec& rule,
                            const SplitPredicate& pred = SplitPredicate::after_zero(),
                            const DiscoveryLimits& limits = DiscoveryLimits());

/* n-by-n matrix over the non-exotic elements: entry (i,j), 0-based, counts
 * occurrences of element i+1 in the decay of element j+1. */
SparseMatrix build_decay_matrix(const Chemistry& chem);

/* Relabels element ids so abundance is non-increasing; groups whose members
 * agree within tie_rel_tol (relative) are ordered by (length, lexicographic).
 * abundance[i] belongs to element id i+1 and may use any normalization. */
Chemistry order_by_abundance(const Chemistry& chem, const std::vector<mpf_class>& abundance,
                             double tie_rel_tol = 1e-30);

/* Decay id lists rendered with the table's abbreviations: runs of a repeated
 * token get ^count, nine 1's before an id x collapse to "f<x>", ten to
 * "g<x>".  Example: 366 1*9 26 1*9 26 ... -> "e366 f26^2 ...". */
std::string render_decay_expression(const std::vector<std::uint32_t>& ids);

struct TableRow {
    std::uint32_t id = 0;
    std::size_t length = 0;
    std::string display;     /* digit string, or run notation when long */
    std::string decay_expr;
    double abundance_percent = 0.0;
};

/* Rows for every non-exotic element of an ordered chemistry.  Strings longer
 * than display_threshold are shown in run notation. */
std::vector<TableRow> periodic_table_export(const Chemistry& chem,
                                            const std::vector<double>& abundance_percent,
                                            std::size_t display_threshold = 1000);

struct TailReport {
    DigitString seed;
    /* terminal chunk of terms 0..first_cycle_term-1 (index = term) */
    std::vector<DigitString> trail;
    /* terminal chunks repeat from this term index on (term k is the kth rewrite) */
    std::size_t first_cycle_term = 0;
    std::vector<DigitString> cycle;
    /* distinct terminal chunks that do not end in 0, in first-seen order */
    std::vector<DigitString> exotic;
};

/* Thrown when the terminal chunk fails to repeat within the term budget;
 * carries the trail followed so far. */
class tail_overflow : public budget_error {
public:
    tail_overflow(const std::string& what, TailReport partial)
        : budget_error(what), partial_(std::make_shared<TailReport>(std::move(partial))) {}
    const TailReport& partial() const { return *partial_; }

private:
    std::shared_ptr<const TailReport> partial_;
};

/* Follows the terminal chunk of each term until it repeats.  The terminal
 * chunk evolves autonomously — it is the last chunk of the rewrite of its
 * predecessor — so no full terms are materialized. */
TailReport tail_analysis(const DigitString& seed, const RuleSpec& rule,
                         const SplitPredicate& pred = SplitPredicate::after_zero(),
                         std::size_t max_terms = 500);

struct AuditReport {
    bool conformant = false;
    /* first term from which every chunk of every later inspected term lies in
     * the common set or the exotic allowance; meaningful when conformant */
    std::size_t first_conformant_term = 0;
    std::size_t terms_inspected = 0;
    /* allowance members actually seen, first-seen order */
    std::vector<DigitString> allowance_used;
    /* when not conformant: (term, chunk) pairs past the last candidate start */
    std::vector<std::pair<std::size_t, DigitString>> violations;
};

/* Checks that the sequence eventually splits entirely into common_set plus
 * the listed exotic strings (the conjectured universal end behavior). */
AuditReport audit_seed(const DigitString& seed, const RuleSpec& rule, const SplitPredicate& pred,
                       const std::vector<DigitString>& common_set,
                       const std::vector<DigitString>& exotic_allowance, std::size_t max_terms,
                       std::size_t max_digits = kDefaultMaxDigits);

} // namespace looksay
