#include "sdlab/bi_laurent.hpp"
#include "sdlab/error.hpp"
#include "sdlab/laurent_poly.hpp"
#include "sdlab/poly_json.hpp"
#include "sdlab/rational.hpp"
#include "sdlab/roots.hpp"

#include <doctest.h>

#include <random>

using namespace sdlab;

namespace {

LaurentPoly q(long e, long c = 1) { return LaurentPoly::monomial(e, c); }

// q + q^2 + q^4 + q^7, the gap polynomial of <3,5>.
LaurentPoly c35() { return q(1) + q(2) + q(4) + q(7); }

LaurentPoly random_poly(std::mt19937_64& rng) {
    LaurentPoly f;
    int terms = static_cast<int>(rng() % 6);
    for (int i = 0; i < terms; ++i) {
        long e = static_cast<long>(rng() % 13) - 4;
        long num = static_cast<long>(rng() % 11) - 5;
        long den = static_cast<long>(rng() % 4) + 1;
        f += LaurentPoly::monomial(e, make_rational(num, den));
    }
    return f;
}

} // namespace

TEST_CASE("rational helpers") {
    CHECK(make_rational(2, 4) == Rational(1, 2));
    CHECK(make_rational(3, -6) == make_rational(-1, 2));
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, 2) == 3);
    CHECK(mod(-7, 5) == 3);
    CHECK(floor(make_rational(-1, 3)) == -1);
    CHECK(to_fraction_string(Rational(3)) == "3/1");
    CHECK(to_fraction_string(make_rational(-2, 6)) == "-1/3");
    CHECK(to_display_string(Rational(3)) == "3");
    CHECK(parse_rational("-4/6") == make_rational(-2, 3));
    CHECK(parse_rational("5") == Rational(5));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("addition cancels and multiplication telescopes") {
    CHECK(q(1) + q(2) + -q(2) == q(1));
    CHECK((q(1) + q(2) - q(2)).size() == 1);
    CHECK((LaurentPoly(1) - q(1)) * (LaurentPoly(1) + q(1) + q(2)) == LaurentPoly(1) - q(3));
    CHECK(c35() * q(-1) == LaurentPoly(1) + q(1) + q(3) + q(6));
    CHECK((q(3) - q(3)).is_zero());
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f - f == LaurentPoly());
        CHECK(f * LaurentPoly(1) == f);
    }
}

TEST_CASE("shift, substitution, truncation, sums") {
    LaurentPoly f = q(-2, 3) + q(0, -1) + q(5);
    CHECK(f.shifted(2) == q(0, 3) + q(2, -1) + q(7));
    CHECK(f.substituted_power(3) == q(-6, 3) + q(0, -1) + q(15));
    CHECK(f.truncated(0) == q(-2, 3) + q(0, -1));
    CHECK(f.coefficient_sum() == 3);
    CHECK(f.abs_coefficient_sum() == doctest::Approx(5.0));
    CHECK(f.min_exp() == -2);
    CHECK(f.max_exp() == 5);
    CHECK_THROWS_AS(LaurentPoly().min_exp(), Error);
}

TEST_CASE("geometric sums") {
    CHECK(geom_sum(0).is_zero());
    CHECK(geom_sum(1) == LaurentPoly(1));
    CHECK(geom_sum(4) == LaurentPoly(1) + q(1) + q(2) + q(3));
    CHECK(geom_sum(3, 5) == LaurentPoly(1) + q(5) + q(10));
}

TEST_CASE("multisection") {
    CHECK(multisection(c35(), 5, 2) == q(2) + q(7));
    CHECK(multisection(c35(), 5, 0).is_zero());
    CHECK(multisection(c35(), 1, 0) == c35());
    CHECK(root_class_sum(c35(), 5, 2) == q(2) + q(7));
    CHECK(root_class_sum(LaurentPoly(), 4, 1).is_zero());
    CHECK(root_class_sum(q(3), 3, 0) == q(3));
    CHECK(multisection(q(-3) + q(-1), 3, 0) == q(-3));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly f = random_poly(rng);
        long n = static_cast<long>(rng() % 6) + 1;
        LaurentPoly sum;
        for (long r = 0; r < n; ++r)
            sum += multisection(f, n, r);
        CHECK(sum == f);
    }
}

TEST_CASE("multisection agrees with the literal root-of-unity average") {
    const CxVal z(0.6, 0.2);
    for (long n = 1; n <= 7; ++n)
        for (long k = 0; k < n; ++k) {
            CxVal literal = root_class_sum_float(c35(), n, k, z);
            CxVal exact = multisection(c35(), n, k).eval(z);
            CHECK(std::abs(literal - exact) < 1e-12);
        }
}

TEST_CASE("roots of unity") {
    CHECK(root_of_unity(4, 1) == CxVal(0, 1));
    CHECK(root_of_unity(4, -1) == CxVal(0, -1));
    CHECK(root_of_unity(6, 6) == CxVal(1, 0));
    CHECK(std::abs(root_eval(LaurentPoly(1) + q(1) + q(2) + q(3) + q(4), 5, 1)) < 1e-12);
    CHECK(std::abs(root_eval(c35(), 1, 0) - CxVal(4)) < 1e-12);
    CHECK(std::abs(root_eval(q(1), 4, 1) - CxVal(0, 1)) < 1e-15);
    // f(eps^j) g(eps^j) = (fg)(eps^j)
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly f = random_poly(rng), g = random_poly(rng);
        for (long j = 0; j < 7; ++j) {
            CxVal lhs = root_eval(f, 7, j) * root_eval(g, 7, j);
            CHECK(std::abs(lhs - root_eval(f * g, 7, j)) < 1e-9);
        }
    }
}

TEST_CASE("division and rational-function equality") {
    LaurentPoly one_minus = LaurentPoly(1) - q(1);
    CHECK(divide_exact(LaurentPoly(1) - q(3), one_minus) == LaurentPoly(1) + q(1) + q(2));
    DivisionResult r = divide(q(2) + LaurentPoly(1), q(1) + LaurentPoly(1));
    CHECK(r.remainder == LaurentPoly(2));
    CHECK(r.quotient * (q(1) + LaurentPoly(1)) + r.remainder == q(2) + LaurentPoly(1));
    CHECK_THROWS_AS(divide_exact(q(2) + LaurentPoly(1), q(1) + LaurentPoly(1)), Error);

    CHECK(rational_eq(LaurentPoly(1) - q(3), one_minus, LaurentPoly(1) + q(1) + q(2), LaurentPoly(1)));
    CHECK(rational_eq(q(1), LaurentPoly(1), q(2), q(1)));
    LaurentPoly num = (LaurentPoly(1) - q(6)) * one_minus;
    LaurentPoly den = (LaurentPoly(1) - q(2)) * (LaurentPoly(1) - q(3));
    CHECK(rational_eq(num, den, LaurentPoly(1) - q(1) + q(2), LaurentPoly(1)));
    CHECK_FALSE(rational_eq(num, den, LaurentPoly(1) + q(1), LaurentPoly(1)));
}

TEST_CASE("evaluation") {
    CHECK(c35().eval(Rational(1)) == 4);
    CHECK(c35().eval(Rational(2)) == 2 + 4 + 16 + 128);
    CHECK((q(-1) + q(1)).eval(Rational(2)) == make_rational(5, 2));
    CHECK(c35().eval(0.5) == doctest::Approx(0.5 + 0.25 + 0.0625 + 0.0078125));
}

TEST_CASE("bivariate polynomials") {
    BiLaurent c = BiLaurent(1) + BiLaurent::monomial(1, 1) + BiLaurent::monomial(1, 2) +
                  BiLaurent::monomial(2, 3);
    CHECK(c.eval(Rational(1), Rational(1)) == 4);
    CHECK(c.coeff(1, 2) == 1);
    CHECK(c.coeff(5, 5) == 0);
    CHECK(c.substituted_q_power(5).coeff(10, 3) == 1);
    CHECK(c.shifted(-1, 0).min_q_exp() == -1);
    CHECK(BiLaurent::embed(geom_sum(3), Var::t) == geom_quotient(3, Var::t));
    CHECK(pow(BiLaurent::monomial(1, 1) + BiLaurent(1), 2) ==
          BiLaurent::monomial(2, 2) + BiLaurent::monomial(1, 1, 2) + BiLaurent(1));
    BiLaurent f = BiLaurent::monomial(2, -1, make_rational(1, 3));
    CHECK((f * c) * BiLaurent(3) == BiLaurent::monomial(2, -1) * c);
    CHECK(std::abs(c.eval(CxVal(0.5), CxVal(2.0)) - CxVal(1 + 1 + 2 + 0.25 * 8)) < 1e-12);
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly f = random_poly(rng);
        CHECK(laurent_from_json(to_json(f)) == f);
        BiLaurent g = BiLaurent::embed(f, Var::q) * BiLaurent::embed(random_poly(rng), Var::t);
        CHECK(bi_laurent_from_json(to_json(g)) == g);
    }
    CHECK(to_json(q(2) * LaurentPoly(make_rational(-1, 2))).dump() == R"({"terms":[[2,"-1/2"]]})");
    CHECK_THROWS_AS(laurent_from_json(nlohmann::json::parse(R"({"terms":[[1,"1/1"],[1,"2/1"]]})")),
                    Error);
    CHECK_THROWS_AS(laurent_from_json(nlohmann::json::parse(R"({"terms":[[1]]})")), Error);
}

TEST_CASE("to_string") {
    CHECK(to_string(LaurentPoly()) == "0");
    CHECK(to_string(c35()).find("q^7") != std::string::npos);
}
