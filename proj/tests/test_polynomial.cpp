#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "looksay/polynomial.hpp"

using namespace looksay;

namespace {

IntPoly poly(std::vector<long> ascending) {
    std::vector<std::string> text;
    text.reserve(ascending.size());
    for (long c : ascending) text.push_back(std::to_string(c));
    return IntPoly::from_strings(text);
}

IntPoly random_poly(std::mt19937& rng, int max_degree, long span = 20) {
    int degree = static_cast<int>(rng() % (max_degree + 1));
    std::vector<long> c(degree + 1);
    for (auto& v : c) v = static_cast<long>(rng() % (2 * span + 1)) - span;
    if (c.back() == 0) c.back() = 1;
    return poly(c);
}

} // namespace

TEST_CASE("construction and normalization") {
    CHECK(IntPoly().is_zero());
    CHECK(IntPoly().degree() == -1);
    CHECK(IntPoly::constant(0).is_zero());
    CHECK(IntPoly::constant(-7).degree() == 0);
    CHECK(IntPoly::monomial(3).degree() == 3);
    CHECK(IntPoly::monomial(3, 2).coeff(3) == 2);
    CHECK(IntPoly::monomial(0) == IntPoly::constant(1));

    IntPoly p = poly({1, 2, 0, 0});  /* trailing zeros stripped */
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(99) == 0);  /* reads past the end are zero */

    CHECK(IntPoly::from_strings({"-11", "-407", "-6281"}).coeff(2) == -6281);
    CHECK_THROWS_AS(IntPoly().leading(), domain_error);
    CHECK(poly({0, 0, 5}).leading() == 5);
}

TEST_CASE("arithmetic identities and known products") {
    IntPoly a = poly({1, 1});        /* x + 1 */
    IntPoly b = poly({-1, 1});       /* x - 1 */
    CHECK(a * b == poly({-1, 0, 1}));
    CHECK(a + b == poly({0, 2}));
    CHECK(a - a == IntPoly());
    CHECK(a * IntPoly() == IntPoly());
    CHECK(a * IntPoly::constant(1) == a);

    /* (x^2+2x+1)(x^3-3) = x^5+2x^4+x^3-3x^2-6x-3 */
    CHECK(poly({1, 2, 1}) * poly({-3, 0, 0, 1}) == poly({-3, -6, -3, 1, 2, 1}));

    std::mt19937 rng(99);
    for (int t = 0; t < 50; ++t) {
        IntPoly p = random_poly(rng, 6), q = random_poly(rng, 6), r = random_poly(rng, 6);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("derivative") {
    CHECK(poly({5, 3, 0, 2}).derivative() == poly({3, 0, 6}));
    CHECK(IntPoly::constant(9).derivative().is_zero());
    CHECK(IntPoly().derivative().is_zero());
}

TEST_CASE("content and primitive part") {
    CHECK(poly({6, -9, 12}).content() == 3);
    CHECK(poly({-6, -9}).content() == 3);
    CHECK(IntPoly().content() == 0);
    CHECK(poly({6, -9, 12}).primitive_part() == poly({2, -3, 4}));
    /* primitive part fixes the leading sign positive */
    CHECK(poly({6, -9, -12}).primitive_part() == poly({-2, 3, 4}));
}

TEST_CASE("exact division and monic division with remainder") {
    IntPoly p = poly({-1, 0, 1});
    CHECK(p.divide_exact(poly({1, 1})) == poly({-1, 1}));
    CHECK_THROWS_AS(poly({1, 0, 1}).divide_exact(poly({1, 1})), verify_error);

    auto [q, r] = poly({1, 2, 3, 4}).divmod_monic(poly({1, 0, 1}));
    CHECK(q * poly({1, 0, 1}) + r == poly({1, 2, 3, 4}));
    CHECK(r.degree() < 2);
    CHECK_THROWS_AS(poly({1, 1}).divmod_monic(poly({1, 2})), domain_error);

    std::mt19937 rng(7);
    for (int t = 0; t < 60; ++t) {
        IntPoly a = random_poly(rng, 8), b = random_poly(rng, 5);
        CHECK((a * b).divide_exact(b) == a);
    }
}

TEST_CASE("evaluation over integers, floats, and residues") {
    IntPoly p = poly({1, -3, 0, 2});  /* 2x^3 - 3x + 1 */
    CHECK(p.eval(mpz_class(5)) == 2 * 125 - 15 + 1);
    CHECK(p.eval(mpz_class(-2)) == -16 + 6 + 1);

    mpf_class x(1.5, 128);
    mpf_class y = p.eval(x);
    CHECK(y.get_prec() >= 128);
    CHECK(std::abs(y.get_d() - (2 * 3.375 - 4.5 + 1)) < 1e-12);

    CHECK(p.eval_mod(5, 101) == ((2 * 125 - 15 + 1) % 101));
    IntPoly negative = poly({-1});
    CHECK(negative.eval_mod(0, 97) == 96);  /* residues come out reduced */
}

TEST_CASE("gcd is primitive with positive leading coefficient") {
    IntPoly g = poly({1, 1});
    IntPoly a = g * poly({-3, 1});
    IntPoly b = g * poly({2, 0, 1});
    CHECK(poly_gcd(a, b) == g);
    CHECK(poly_gcd(a, IntPoly()) == a.primitive_part());
    CHECK(poly_gcd(IntPoly(), IntPoly()).is_zero());
    /* scalar multiples do not change the result and the sign is normalized */
    CHECK(poly_gcd(a * IntPoly::constant(-6), b * IntPoly::constant(10)) == g);
    CHECK(poly_gcd(poly({2}), poly({0, 4})) == IntPoly::constant(1));

    std::mt19937 rng(21);
    for (int t = 0; t < 30; ++t) {
        IntPoly common = random_poly(rng, 4);
        IntPoly x = common * random_poly(rng, 4);
        IntPoly y = common * random_poly(rng, 4);
        IntPoly g2 = poly_gcd(x, y);
        /* the common factor divides the gcd */
        CHECK(!g2.is_zero());
        (void)g2.divide_exact(common.primitive_part());
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == poly({-1, 1}));
    CHECK(cyclotomic(2) == poly({1, 1}));
    CHECK(cyclotomic(3) == poly({1, 1, 1}));
    CHECK(cyclotomic(4) == poly({1, 0, 1}));
    CHECK(cyclotomic(6) == poly({1, -1, 1}));
    CHECK(cyclotomic(12) == poly({1, 0, -1, 0, 1}));
    /* x^n - 1 is the product over all divisors */
    for (unsigned n : {12u, 16u, 30u}) {
        IntPoly product = IntPoly::constant(1);
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) product = product * cyclotomic(d);
        CHECK(product == IntPoly::monomial(n) + IntPoly::constant(-1));
    }
    /* first index with a coefficient outside {-1,0,1} */
    CHECK(cyclotomic(105).coeff(7) == -2);
    CHECK_THROWS_AS(cyclotomic(0), domain_error);
}

TEST_CASE("printable form") {
    CHECK(poly({-11, -407, -6281}).to_string() == "-6281*x^2 - 407*x - 11");
    CHECK(poly({1, 0, 1}).to_string("t") == "t^2 + 1");
    CHECK(poly({0, -1}).to_string() == "-x");
    CHECK(IntPoly().to_string() == "0");
    CHECK(IntPoly::constant(42).to_string() == "42");
}
