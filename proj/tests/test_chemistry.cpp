#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "looksay/chemistry.hpp"
#include "looksay/run_chemistry.hpp"
#include "looksay/spectral.hpp"

using namespace looksay;

namespace {

DigitString ds(const char* text, unsigned base = 10) {
    return DigitString::from_text(text, base);
}

std::string fixture_line(const char* name) {
    std::ifstream in(std::string(LOOKSAY_FIXTURE_DIR "/") + name);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    return line;
}

/* Decay lists must reconstruct the rewrite: concatenating the chunk strings
 * of the decay gives exactly say(element). */
void check_closure(const Chemistry& chem) {
    for (const Element& element : chem.elements) {
        std::string expected = say_step(element.string, chem.rule).to_text();
        std::string rebuilt;
        for (std::uint32_t id : element.decay) rebuilt += chem.by_id(id).string.to_text();
        CHECK(rebuilt == expected);
    }
    for (const Element& exotic : chem.exotics) CHECK(exotic.decay.empty() == false);
    for (std::size_t i = 0; i < chem.elements.size(); ++i)
        CHECK(chem.elements[i].id == i + 1);
    /* matrix elements end in zero; zeros only ever form the terminal run */
    for (const Element& element : chem.elements) {
        const DigitString& s = element.string;
        CHECK(s[s.size() - 1] == 0);
        std::size_t first_zero = s.size();
        for (std::size_t k = 0; k < s.size(); ++k)
            if (s[k] == 0) { first_zero = k; break; }
        for (std::size_t k = first_zero; k < s.size(); ++k) CHECK(s[k] == 0);
    }
    for (const Element& exotic : chem.exotics) CHECK(exotic.string[exotic.string.size() - 1] != 0);
}

Chemistry ordered_base10() {
    Chemistry chem = discover_elements(ds("0"), RuleSpec::stutter(10));
    SparseMatrix D = build_decay_matrix(chem);
    PreciseEigenResult precise = dominant_eigen_precise(D);
    return order_by_abundance(chem, precise.vector);
}

} // namespace

TEST_CASE("base-2 chemistry is the known five-element system") {
    Chemistry chem = discover_elements(ds("0", 2), RuleSpec::stutter(2));
    REQUIRE(chem.elements.size() == 5);
    CHECK(chem.exotics.empty());
    std::vector<std::string> strings;
    for (const Element& e : chem.elements) strings.push_back(e.string.to_text());
    CHECK(strings ==
          std::vector<std::string>{"10", "1110", "111111110", "1000", "110"});
    check_closure(chem);
    /* 10 -> 1110 -> 11 10 111 0? no: say(1110) = 111111 10 -> one chunk */
    CHECK(chem.by_id(1).decay == std::vector<std::uint32_t>{2});
    CHECK(decay_of(ds("10", 2), RuleSpec::stutter(2)) ==
          std::vector<DigitString>{ds("1110", 2)});
}

TEST_CASE("element counts across bases") {
    const std::size_t expected[] = {5, 15, 82, 96, 364, 422, 664, 575, 714, 859, 1043};
    for (unsigned base = 2; base <= 12; ++base) {
        Chemistry chem = discover_elements(ds("0", base), RuleSpec::stutter(base));
        CHECK(chem.elements.size() == expected[base - 2]);
        CHECK(chem.exotics.empty());
    }
}

TEST_CASE("decay closure invariants for small bases") {
    for (unsigned base : {3u, 4u, 5u, 6u}) {
        Chemistry chem = discover_elements(ds("0", base), RuleSpec::stutter(base));
        check_closure(chem);
    }
}

TEST_CASE("base-10 discovery, ordering, and named elements") {
    Chemistry ordered = ordered_base10();
    REQUIRE(ordered.elements.size() == 714);
    CHECK(ordered.exotics.empty());
    CHECK(ordered.ordered);
    check_closure(ordered);

    /* ordering is a permutation of the pre-ordering ids */
    std::vector<bool> seen(715, false);
    for (std::uint32_t id : ordered.ordering) {
        CHECK(!seen[id]);
        seen[id] = true;
    }
    CHECK(ordered.ordering.size() == 714);

    CHECK(ordered.by_id(1).string.to_text() == "10");
    CHECK(ordered.by_id(16).string.to_text() == fixture_line("e16.txt"));

    std::size_t longest = 0;
    std::uint32_t longest_id = 0;
    for (const Element& e : ordered.elements)
        if (e.string.size() > longest) {
            longest = e.string.size();
            longest_id = e.id;
        }
    CHECK(longest == 45460);
    CHECK(longest_id == 619);

    /* abundance ordering holds for the reordered matrix */
    SparseMatrix D = build_decay_matrix(ordered);
    EigenResult eig = dominant_eigen(D);
    std::vector<double> percent = abundances(eig);
    for (std::size_t k = 0; k + 1 < percent.size(); ++k)
        CHECK(percent[k] >= percent[k + 1] - 1e-9);
}

TEST_CASE("seeding with 1 adds the sixteen non-terminating strings") {
    Chemistry chem = discover_elements(ds("1"), RuleSpec::stutter(10));
    CHECK(chem.elements.size() == 714);
    REQUIRE(chem.exotics.size() == 16);
    CHECK(chem.exotics[0].id == 715);
    CHECK(chem.exotics[15].id == 730);
    check_closure(chem);
}

TEST_CASE("terminal chunks settle into the staircase or the two-cycle") {
    RuleSpec r = RuleSpec::stutter(10);
    TailReport t0 = tail_analysis(ds("0"), r);
    CHECK(t0.first_cycle_term == 29);
    CHECK(t0.trail.size() == 29);
    REQUIRE(t0.cycle.size() == 1);
    CHECK(t0.cycle[0].size() == 55);
    CHECK(t0.exotic.empty());
    Chemistry ordered = ordered_base10();
    CHECK(t0.cycle[0] == ordered.by_id(244).string);

    TailReport t1 = tail_analysis(ds("1"), r);
    CHECK(t1.first_cycle_term == 15);
    REQUIRE(t1.cycle.size() == 2);
    CHECK(t1.cycle[0].to_text() == fixture_line("epsilon1.txt"));
    CHECK(t1.cycle[1].to_text() == fixture_line("epsilon2.txt"));
    CHECK(t1.exotic.size() == 17); /* every terminal chunk of this seed */

    /* the two-cycle means each member's rewrite ends with the other */
    std::string s1 = say_step(t1.cycle[0], r).to_text();
    std::string s2 = say_step(t1.cycle[1], r).to_text();
    CHECK(s1.substr(s1.size() - t1.cycle[1].size()) == t1.cycle[1].to_text());
    CHECK(s2.substr(s2.size() - t1.cycle[0].size()) == t1.cycle[0].to_text());

    for (unsigned d = 2; d <= 9; ++d) {
        TailReport td = tail_analysis(ds(std::string(1, '0' + d).c_str()), r);
        CHECK(td.first_cycle_term == 29);
        REQUIRE(td.cycle.size() == 1);
        CHECK(td.cycle[0].size() == 55);      /* isotopes of the staircase */
        CHECK(td.cycle[0] != t0.cycle[0]);
    }
}

TEST_CASE("audit against the common set") {
    RuleSpec r = RuleSpec::stutter(10);
    Chemistry chem = discover_elements(ds("0"), r);
    std::vector<DigitString> commons;
    for (const Element& e : chem.elements) commons.push_back(e.string);

    AuditReport a0 = audit_seed(ds("0"), r, SplitPredicate::after_zero(), commons, {}, 40);
    CHECK(a0.conformant);
    CHECK(a0.first_conformant_term == 1);
    CHECK(a0.terms_inspected == 41);
    CHECK(a0.allowance_used.empty());

    TailReport t1 = tail_analysis(ds("1"), r);
    AuditReport a1 = audit_seed(ds("1"), r, SplitPredicate::after_zero(), commons, t1.cycle, 40);
    CHECK(a1.conformant);
    CHECK(a1.first_conformant_term == 15);
    CHECK(a1.allowance_used.size() == 2);

    /* allowing every terminal chunk ever seen pushes conformance to the seed */
    AuditReport a1full =
        audit_seed(ds("1"), r, SplitPredicate::after_zero(), commons, t1.exotic, 40);
    CHECK(a1full.conformant);
    CHECK(a1full.first_conformant_term == 0);

    std::vector<DigitString> few(commons.begin(), commons.begin() + 10);
    AuditReport bad = audit_seed(ds("1"), r, SplitPredicate::after_zero(), few, {}, 25);
    CHECK_FALSE(bad.conformant);
    CHECK_FALSE(bad.violations.empty());
}

TEST_CASE("discovery and tail budgets raise carrying partial results") {
    RuleSpec r = RuleSpec::stutter(10);
    try {
        discover_elements(ds("0"), r, SplitPredicate::after_zero(), DiscoveryLimits{3, 1000000, 200});
        FAIL("expected discovery_overflow");
    } catch (const discovery_overflow& e) {
        CHECK(e.partial().elements.size() == 3);
    }
    try {
        tail_analysis(ds("1"), r, SplitPredicate::after_zero(), 10);
        FAIL("expected tail_overflow");
    } catch (const tail_overflow& e) {
        CHECK(e.partial().trail.size() == 11);
        CHECK(e.partial().cycle.empty());
    }
}

TEST_CASE("decay expressions use the table abbreviations") {
    CHECK(render_decay_expression({5}) == "e5");
    CHECK(render_decay_expression({2, 2, 2}) == "e2^3");
    std::vector<std::uint32_t> nine_then(9, 1);
    nine_then.push_back(26);
    CHECK(render_decay_expression(nine_then) == "f26");
    std::vector<std::uint32_t> ten_then(10, 1);
    ten_then.push_back(7);
    CHECK(render_decay_expression(ten_then) == "g7");
    std::vector<std::uint32_t> mixed{366};
    for (int rep = 0; rep < 2; ++rep) {
        mixed.insert(mixed.end(), 9, 1);
        mixed.push_back(26);
    }
    CHECK(render_decay_expression(mixed) == "e366 f26^2");
    CHECK(render_decay_expression({1, 1, 1}) == "e1^3"); /* bare ones stay ones */
    CHECK(render_decay_expression({}) == "");
}

TEST_CASE("periodic table export") {
    Chemistry ordered = ordered_base10();
    SparseMatrix D = build_decay_matrix(ordered);
    EigenResult eig = dominant_eigen(D);
    std::vector<TableRow> rows = periodic_table_export(ordered, abundances(eig));
    REQUIRE(rows.size() == 714);
    CHECK(rows[0].id == 1);
    CHECK(rows[0].display == "10");
    CHECK(rows[0].decay_expr == "e2");
    CHECK(rows[0].abundance_percent == doctest::Approx(27.8158566808).epsilon(1e-6));
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].id == k + 1);
        CHECK(rows[k].length == ordered.by_id(rows[k].id).string.size());
    }
    /* long strings switch to run notation */
    const TableRow& big = rows[618];
    CHECK(big.length == 45460);
    CHECK(big.display == run_notation(ordered.by_id(619).string));
    CHECK(big.display.find('^') != std::string::npos);
}

TEST_CASE("run-list rewriting matches digit-string rewriting") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 400; ++trial) {
        unsigned base = 2 + rng() % 11;
        RuleSpec rule;
        switch (rng() % 3) {
            case 0: rule = RuleSpec::standard(base); break;
            case 1: rule = RuleSpec::stutter(base); break;
            default: rule = RuleSpec::j_stutter(2 + rng() % 9, base); break;
        }
        std::size_t len = 1 + rng() % 40;
        std::string v(len, '\0');
        for (auto& c : v) c = static_cast<char>(rng() % base);
        DigitString s(v, base);
        RunString runs = encode_runs(s);
        CHECK(total_digits(runs) == s.size());
        RunString said = say_runs(runs, rule);
        CHECK(decode_runs(said, base) == say_step(s, rule));
    }
}

TEST_CASE("orbit-certified cuts never change the evolution") {
    std::mt19937 rng(271828);
    int certified = 0;
    for (int trial = 0; trial < 250; ++trial) {
        unsigned base = 2 + rng() % 9;
        RuleSpec rule = (trial % 2) ? RuleSpec::stutter(base)
                                    : RuleSpec::j_stutter(2 + rng() % 6, base);
        std::size_t len = 2 + rng() % 30;
        std::string v(len, '\0');
        for (auto& c : v) c = static_cast<char>(rng() % base);
        RunString runs = encode_runs(DigitString(v, base));
        if (runs.size() < 2) continue;
        std::size_t boundary = 1 + rng() % (runs.size() - 1);
        std::span<const Run> suffix(runs.data() + boundary, runs.size() - boundary);
        if (!orbit_cut_safe(runs[boundary - 1].digit, suffix, rule)) continue;
        ++certified;
        RunString left(runs.begin(), runs.begin() + boundary);
        RunString right(runs.begin() + boundary, runs.end());
        RunString whole = runs;
        for (int step = 0; step < 6; ++step) {
            left = say_runs(left, rule);
            right = say_runs(right, rule);
            whole = say_runs(whole, rule);
            RunString joined = left;
            /* concatenation with junction merge */
            for (const Run& run : right) {
                if (!joined.empty() && joined.back().digit == run.digit)
                    joined.back().count += run.count;
                else
                    joined.push_back(run);
            }
            CHECK(joined == whole);
        }
    }
    CHECK(certified > 40); /* the predicate must actually certify cuts */
}

TEST_CASE("splitting run lists refines the zero cut") {
    RuleSpec rule = RuleSpec::j_stutter(4, 10);
    RunString runs = encode_runs(ds("2222110"));
    std::vector<RunString> zero_cut = split_runs_after_zero(runs);
    CHECK(zero_cut.size() == 1);
    std::vector<RunString> fine = split_runs_orbit(runs, rule);
    RunString rebuilt;
    for (const RunString& chunk : fine)
        rebuilt.insert(rebuilt.end(), chunk.begin(), chunk.end());
    CHECK(rebuilt == runs);
    CHECK(fine.size() >= zero_cut.size());
}

TEST_CASE("run discovery without orbit cuts reproduces plain discovery") {
    for (unsigned base : {3u, 10u}) {
        Chemistry plain = discover_elements(ds("0", base), RuleSpec::stutter(base));
        RunChemistry rle = discover_run_elements(ds("0", base), RuleSpec::stutter(base), false);
        REQUIRE(rle.size() == plain.elements.size());
        for (std::size_t i = 0; i < rle.size(); ++i) {
            CHECK(decode_runs(rle.elements()[i].runs, base) == plain.elements[i].string);
            CHECK(rle.elements()[i].decay == plain.elements[i].decay);
        }
    }
}

TEST_CASE("variant-rule chemistries with orbit cuts") {
    RunChemistry j4 = discover_run_elements(ds("0"), RuleSpec::j_stutter(4, 10), true);
    CHECK(j4.size() == 40);
    EigenResult e4 = dominant_eigen(build_decay_matrix(j4));
    CHECK(e4.value == doctest::Approx(2.2590553129).epsilon(1e-9));

    RunChemistry j6 = discover_run_elements(ds("0"), RuleSpec::j_stutter(6, 10), true);
    CHECK(j6.size() == 20);
    EigenResult e6 = dominant_eigen(build_decay_matrix(j6));
    CHECK(e6.value == doctest::Approx(2.7546059731).epsilon(1e-9));

    /* every element's decay rebuilds its rewrite, as in the plain case */
    for (const RunElement& element : j4.elements()) {
        RunString said = say_runs(element.runs, j4.rule());
        RunString rebuilt;
        for (std::uint32_t id : element.decay) {
            for (const Run& run : j4.by_id(id).runs) {
                if (!rebuilt.empty() && rebuilt.back().digit == run.digit)
                    rebuilt.back().count += run.count;
                else
                    rebuilt.push_back(run);
            }
        }
        CHECK(rebuilt == said);
    }
}
