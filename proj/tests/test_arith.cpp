#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "narayana/format.hpp"
#include "narayana/ratfunc.hpp"
#include "narayana/xpoly.hpp"

using namespace narayana;

namespace {

std::mt19937 rng(20240817);

IntPoly random_poly(long max_deg, long max_coeff) {
    std::uniform_int_distribution<long> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
    long d = deg(rng);
    std::vector<BigInt> c(static_cast<size_t>(d) + 1);
    for (auto& v : c) v = coeff(rng);
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("binomial conventions") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(catalan_number(0) == 1);
    CHECK(catalan_number(5) == 42);
    CHECK(int_pow(3, 4) == 81);
}

TEST_CASE("polynomial ring axioms on random samples") {
    for (int i = 0; i < 200; ++i) {
        IntPoly a = random_poly(6, 9), b = random_poly(6, 9), c = random_poly(6, 9);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == IntPoly::zero());
        CHECK(a * IntPoly::one() == a);
        if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("derivative satisfies the Leibniz rule") {
    for (int i = 0; i < 100; ++i) {
        IntPoly a = random_poly(6, 9), b = random_poly(6, 9);
        CHECK((a * b).derivative(1) == a.derivative(1) * b + a * b.derivative(1));
    }
    IntPoly p({5, 0, 3, 7});  // 5 + 3t^2 + 7t^3
    CHECK(p.derivative(2) == IntPoly({6, 42}));
    CHECK(p.derivative(4) == IntPoly::zero());
}

TEST_CASE("evaluation is a ring homomorphism") {
    for (int i = 0; i < 100; ++i) {
        IntPoly a = random_poly(6, 9), b = random_poly(6, 9);
        Rational x(3, 7);
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
}

TEST_CASE("palindromic detection and products") {
    auto [pal1, c1] = IntPoly({1, 3, 1}).is_palindromic();
    CHECK(pal1);
    CHECK(c1 == 2);
    auto [pal2, c2] = IntPoly({1, 2, 3}).is_palindromic();
    CHECK_FALSE(pal2);
    // products of palindromic polynomials are palindromic
    for (int i = 0; i < 50; ++i) {
        IntPoly half = random_poly(3, 5);
        if (half.is_zero() || half[0] == 0) continue;  // both ends must be nonzero
        std::vector<BigInt> mirror;
        for (long j = half.degree(); j >= 0; --j) mirror.push_back(half[j]);
        IntPoly a = half * IntPoly(mirror);  // palindromic by construction
        auto [pal, center] = a.is_palindromic();
        CHECK(pal);
        CHECK(center == a.degree());
    }
}

TEST_CASE("content and exact division") {
    IntPoly p({6, 12, 18});
    CHECK(p.content() == 6);
    CHECK(p.primitive_part() == IntPoly({1, 2, 3}));
    IntPoly a = IntPoly({1, 1}) * IntPoly({2, 0, 3});
    CHECK(a.div_exact(IntPoly({1, 1})) == IntPoly({2, 0, 3}));
}

TEST_CASE("polynomial gcd") {
    IntPoly g({1, 1});  // 1+t
    IntPoly a = g * IntPoly({3, 0, 1});
    IntPoly b = g * IntPoly({-2, 5});
    IntPoly d = poly_gcd(a, b);
    CHECK(a.div_exact(d) * d == a);
    CHECK(b.div_exact(d) * d == b);
    CHECK(d.degree() == 1);
}

TEST_CASE("rational functions reduce to canonical form") {
    // (1+t)(1+3t+t^2) / (1+t)^2 -> (1+3t+t^2)/(1+t)
    RatFunc f(IntPoly({1, 1}) * IntPoly({1, 3, 1}), IntPoly({1, 1}) * IntPoly({1, 1}));
    CHECK(f.num() == IntPoly({1, 3, 1}));
    CHECK(f.den() == IntPoly({1, 1}));
    // shared integer content cancels, denominator keeps positive leading coeff
    RatFunc g(IntPoly({0, 4}), IntPoly({-2, -2}));
    CHECK(g == RatFunc(IntPoly({0, -2}), IntPoly({1, 1})));
}

TEST_CASE("rational function field axioms on random samples") {
    for (int i = 0; i < 60; ++i) {
        RatFunc a(random_poly(4, 6), IntPoly({1, 2}));
        RatFunc b(random_poly(4, 6), IntPoly({3, 1}));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == RatFunc::zero());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("rational function evaluation and poles") {
    RatFunc f(IntPoly({1, 4, 1}), IntPoly({1, 1}));  // (1+4t+t^2)/(1+t)
    CHECK(f.eval(2) == Rational(13, 3));
    CHECK(f.eval(1) == 3);
    CHECK_THROWS_AS(f.eval(-1), PoleAtPoint);
    CHECK_THROWS_AS(RatFunc(IntPoly::one(), IntPoly::zero()), ZeroDenominator);
}

TEST_CASE("rational function quotient rule") {
    RatFunc f(IntPoly({0, 1}), IntPoly({1, 1}));  // t/(1+t)
    CHECK(f.derivative() == RatFunc(IntPoly::one(), IntPoly({1, 1}) * IntPoly({1, 1})));
}

TEST_CASE("as_poly guards non-polynomial values") {
    RatFunc f(IntPoly({1, 0, 1}), IntPoly({1, 1}));
    CHECK_FALSE(f.is_polynomial());
    CHECK_THROWS_AS(f.as_poly(), NonIntegerQuotient);
    RatFunc g(IntPoly({1, 2, 1}), IntPoly({1, 1}));
    CHECK(g.as_poly() == IntPoly({1, 1}));
}

TEST_CASE("x-polynomials over rational functions") {
    XPoly p = XPoly::monomial(2) - XPoly(RatFunc(IntPoly({1, 1})));  // x^2 - (1+t)
    CHECK(p.degree() == 2);
    CHECK(p.eval_x(2) == RatFunc(IntPoly({3, -1})));
    CHECK(p.eval(2, 3) == 0);
    CHECK(p.specialize_t(1) == XPoly::monomial(2) - XPoly(RatFunc(2L)));
    XPoly q = p * p;
    CHECK(q.degree() == 4);
    CHECK(q[2] == RatFunc(IntPoly({-2, -2})));
}

TEST_CASE("to_integer rejects non-integers") {
    CHECK(to_integer(Rational(42)) == 42);
    CHECK_THROWS_AS(to_integer(Rational(1, 3)), NonIntegerQuotient);
}
