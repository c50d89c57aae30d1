#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "looksay/chemistry.hpp"
#include "looksay/serialize.hpp"
#include "looksay/spectral.hpp"

using namespace looksay;

namespace {

DigitString ds(const char* text, unsigned base = 10) {
    return DigitString::from_text(text, base);
}

bool same_elements(const std::vector<Element>& a, const std::vector<Element>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].id != b[i].id || !(a[i].string == b[i].string) || a[i].decay != b[i].decay ||
            a[i].persistent != b[i].persistent)
            return false;
    return true;
}

} // namespace

TEST_CASE("chemistry JSON round trip") {
    for (unsigned base : {2u, 10u}) {
        Chemistry chem = discover_elements(ds("0", base), RuleSpec::stutter(base));
        std::string json = chemistry_to_json(chem);
        Chemistry back = chemistry_from_json(json);
        CHECK(back.rule == chem.rule);
        CHECK(back.predicate_tag == chem.predicate_tag);
        CHECK(back.ordered == chem.ordered);
        CHECK(back.ordering == chem.ordering);
        CHECK(same_elements(back.elements, chem.elements));
        CHECK(same_elements(back.exotics, chem.exotics));
        /* index rebuilt on import */
        CHECK(back.id_of(chem.elements[0].string) == chem.elements[0].id);
    }

    /* exotics and ordering survive too */
    Chemistry seeded = discover_elements(ds("1"), RuleSpec::stutter(10));
    Chemistry back = chemistry_from_json(chemistry_to_json(seeded));
    CHECK(same_elements(back.exotics, seeded.exotics));

    /* strings beyond the threshold are emitted in marked run notation */
    std::string compact = chemistry_to_json(seeded, 100);
    CHECK(compact.find("\"rle\"") != std::string::npos);
    CHECK(same_elements(chemistry_from_json(compact).elements, seeded.elements));
}

TEST_CASE("chemistry JSON rejects malformed input") {
    CHECK_THROWS_AS(chemistry_from_json("not json"), domain_error);
    CHECK_THROWS_AS(chemistry_from_json("{}"), domain_error);
    CHECK_THROWS_AS(chemistry_from_json(R"({"rule":"stutter","base":10,"elements":[
        {"id":2,"string":"10","decay":[],"persistent":false}]})"),
                    domain_error); /* ids must start at 1 */
    CHECK_THROWS_AS(chemistry_from_json(R"({"rule":"waffle","base":10,"elements":[]})"),
                    domain_error);
}

TEST_CASE("periodic table CSV") {
    Chemistry chem = discover_elements(ds("0"), RuleSpec::stutter(10));
    SparseMatrix D = build_decay_matrix(chem);
    PreciseEigenResult precise = dominant_eigen_precise(D);
    Chemistry ordered = order_by_abundance(chem, precise.vector);
    SparseMatrix Dord = build_decay_matrix(ordered);
    EigenResult eig = dominant_eigen(Dord);
    std::string csv = periodic_table_csv(periodic_table_export(ordered, abundances(eig)));

    CHECK(csv.rfind("id,length,display,decay,abundance_percent\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 715);
    CHECK(csv.find("\n1,2,10,e2,27.81585668\n") != std::string::npos);
}

TEST_CASE("decay graph DOT") {
    Chemistry chem = discover_elements(ds("0", 2), RuleSpec::stutter(2));
    CHECK(decay_graph_dot(chem) ==
          "digraph decay {\n"
          "  e1;\n  e2;\n  e3;\n  e4;\n  e5;\n"
          "  e1 -> e2;\n"
          "  e2 -> e3;\n"
          "  e3 -> e4 [label=\"8\"];\n"
          "  e3 -> e5;\n"
          "  e4 -> e3;\n"
          "  e5 -> e1 [label=\"2\"];\n"
          "  e5 -> e5;\n"
          "}\n");
    Chemistry big = discover_elements(ds("0"), RuleSpec::stutter(10));
    std::string dot = decay_graph_dot(big);
    CHECK(std::count(dot.begin(), dot.end(), ';') >= 714);
}

TEST_CASE("polynomial JSON round trip") {
    IntPoly p = IntPoly::from_strings({"-11", "-407", "-6281", "0", "1"});
    std::string json = polynomial_to_json(p);
    CHECK(json == "[\"-11\",\"-407\",\"-6281\",\"0\",\"1\"]\n");
    CHECK(polynomial_from_json(json) == p);

    mpz_class huge = mpz_class(1) << 200;
    IntPoly big(std::vector<mpz_class>{huge, -huge, 1});
    CHECK(polynomial_from_json(polynomial_to_json(big)) == big);

    CHECK(polynomial_from_json("[1, -2, 3]") == IntPoly::from_strings({"1", "-2", "3"}));
    CHECK(polynomial_from_json(R"({"coefficients":["5"]})") == IntPoly::constant(5));
    CHECK(polynomial_from_json("[]").is_zero());
    CHECK_THROWS_AS(polynomial_from_json("{\"a\":1}"), domain_error);
    CHECK_THROWS_AS(polynomial_from_json("[1.5]"), domain_error);
    CHECK_THROWS_AS(polynomial_from_json("nope"), domain_error);
}

TEST_CASE("sparse matrix triplet text round trip") {
    Chemistry chem = discover_elements(ds("0"), RuleSpec::stutter(10));
    SparseMatrix D = build_decay_matrix(chem);
    std::string text = matrix_to_triplet_text(D);
    CHECK(text.rfind("714 714 1473\n", 0) == 0);
    SparseMatrix back = matrix_from_triplet_text(text);
    CHECK(matrix_to_triplet_text(back) == text);

    SparseMatrix small = matrix_from_triplet_text("2 3 2\n1 1 5\n2 3 -7\n");
    CHECK(small.rows() == 2);
    CHECK(small.cols() == 3);
    CHECK(small.nonzeros() == 2);
    CHECK(small.value(small.col_start(2)) == -7);

    CHECK_THROWS_AS(matrix_from_triplet_text(""), domain_error);
    CHECK_THROWS_AS(matrix_from_triplet_text("2 2 2\n1 1 1\n"), domain_error);
    CHECK_THROWS_AS(matrix_from_triplet_text("2 2 1\n0 1 1\n"), domain_error);
}

TEST_CASE("ratio data files") {
    std::vector<DigitString> seq = generate_sequence(ds("0"), RuleSpec::stutter(10), 4);
    std::string dat = ratios_to_dat(length_ratios(seq));
    CHECK(dat == "1 2\n2 2\n3 1.5\n");
}

TEST_CASE("certification report JSON") {
    Chemistry chem = discover_elements(ds("0", 2), RuleSpec::stutter(2));
    SparseMatrix D = build_decay_matrix(chem);
    EigenResult eig = dominant_eigen(D);
    GrowthDegreeResult result = growth_degree(char_poly(D), eig.value);
    std::string json = certification_to_json(result);
    CHECK(json.find("\"degree\": 4") != std::string::npos);
    CHECK(json.find("\"status\": \"irreducible\"") != std::string::npos);
    CHECK(json.find("\"primes\"") != std::string::npos);
    CHECK(json.find("\"patterns\"") != std::string::npos);
}

TEST_CASE("run chemistry JSON export") {
    RunChemistry rc = discover_run_elements(ds("0"), RuleSpec::j_stutter(4, 10), true);
    std::string json = run_chemistry_to_json(rc);
    CHECK(json.find("\"rule\": \"jstutter:4\"") != std::string::npos);
    CHECK(json.find("\"orbit_cuts\": true") != std::string::npos);
    CHECK(json.find("\"rle\"") != std::string::npos);
}
