#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "narayana/format.hpp"

using namespace narayana;

namespace {

std::mt19937 rng(424242);

IntPoly random_poly(long max_deg, long max_coeff) {
    std::uniform_int_distribution<long> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
    long d = deg(rng);
    std::vector<BigInt> c(static_cast<size_t>(d) + 1);
    for (auto& v : c) v = coeff(rng);
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("golden renderings") {
    CHECK(format_value(IntPoly::zero()) == "0");
    CHECK(format_value(IntPoly({1, 3, 1})) == "1 + 3t + t^2");
    CHECK(format_value(IntPoly({0, -2, 0, 5})) == "-2t + 5t^3");
    CHECK(format_value(Rational(13, 3)) == "13/3");
    CHECK(format_value(Rational(-4)) == "-4");
    CHECK(format_value(RatFunc(IntPoly({1, 4, 1}), IntPoly({1, 1}))) ==
          "(1 + 4t + t^2)/(1 + t)");
    CHECK(format_value(XPoly::monomial(2) - XPoly(RatFunc(IntPoly({1, 1})))) ==
          "-1 - t + x^2");
    CHECK(format_value(XPoly::monomial(3, RatFunc(2L))) == "2x^3");
    CHECK(format_value(XPoly::zero()) == "0");
}

TEST_CASE("parser basics") {
    CHECK(parse_intpoly("1+3t+t^2") == IntPoly({1, 3, 1}));
    CHECK(parse_intpoly("(1+t)^3") == IntPoly({1, 3, 3, 1}));
    CHECK(parse_intpoly("2 t (1 + t)") == IntPoly({0, 2, 2}));
    CHECK(parse_intpoly("-t + t") == IntPoly::zero());
    CHECK(parse_rational("7/2") == Rational(7, 2));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_ratfunc("(1+4t+t^2)/(1+t)") == RatFunc(IntPoly({1, 4, 1}), IntPoly({1, 1})));
    CHECK(parse_xpoly("x^2 - (1+t)") ==
          XPoly::monomial(2) - XPoly(RatFunc(IntPoly({1, 1}))));
}

TEST_CASE("parser error handling") {
    CHECK_THROWS_AS(parse_intpoly("1 + "), ParseError);
    CHECK_THROWS_AS(parse_intpoly("y"), ParseError);
    CHECK_THROWS_AS(parse_intpoly("(1+t"), ParseError);
    CHECK_THROWS_AS(parse_intpoly("t^(2)"), ParseError);
    CHECK_THROWS_AS(parse_intpoly("1/0"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("1/x"), ParseError);       // denominator contains x
    CHECK_THROWS_AS(parse_intpoly("1/(1+t)"), ParseError);   // not polynomial
    CHECK_THROWS_AS(parse_rational("1+t"), ParseError);      // contains t
    CHECK_THROWS_AS(parse_ratfunc("x"), ParseError);         // contains x
}

TEST_CASE("round trip on random integer polynomials") {
    for (int i = 0; i < 300; ++i) {
        IntPoly p = random_poly(8, 30);
        CHECK(parse_intpoly(format_value(p)) == p);
    }
}

TEST_CASE("round trip on random rational functions") {
    for (int i = 0; i < 200; ++i) {
        IntPoly num = random_poly(5, 12);
        IntPoly den = random_poly(3, 6);
        if (den.is_zero()) den = IntPoly::one();
        RatFunc f(num, den);
        CHECK(parse_ratfunc(format_value(f)) == f);
    }
}

TEST_CASE("round trip on random rationals") {
    std::uniform_int_distribution<long> num(-10000, 10000);
    std::uniform_int_distribution<long> den(1, 9999);
    for (int i = 0; i < 300; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(parse_rational(format_value(r)) == r);
    }
}

TEST_CASE("round trip on random x-polynomials") {
    for (int i = 0; i < 150; ++i) {
        std::uniform_int_distribution<long> deg(0, 4);
        long d = deg(rng);
        std::vector<RatFunc> coeffs;
        for (long j = 0; j <= d; ++j) {
            IntPoly den = random_poly(2, 4);
            if (den.is_zero()) den = IntPoly::one();
            coeffs.emplace_back(random_poly(3, 9), den);
        }
        XPoly p(std::move(coeffs));
        CHECK(parse_xpoly(format_value(p)) == p);
    }
}
