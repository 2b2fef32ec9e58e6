#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "narayana/format.hpp"
#include "narayana/series.hpp"
#include "narayana/triangles.hpp"

using namespace narayana;

namespace {

IntPoly ip(const std::string& text) { return parse_intpoly(text); }
IntPoly cn(long n) { return narayana::narayana(n); }

}  // namespace

TEST_CASE("series arithmetic keeps track of truncation order") {
    PolySeries a(4), b(8);
    a.set_coef(0, IntPoly::one());
    a.set_coef(1, ip("t"));
    b.set_coef(0, IntPoly::one());
    CHECK((a * b).order() == 4);
    CHECK((a + b).order() == 4);
    CHECK(a.shift(2).coef(3) == ip("t"));
    CHECK(a.shift(2).coef(1) == IntPoly::zero());
    PolySeries sq = a.pow(2);
    CHECK(sq.coef(1) == ip("2t"));
    CHECK(sq.coef(2) == ip("t^2"));
}

TEST_CASE("Narayana generating function solves its quadratic") {
    PolySeries c = solve_catalan_gf(16);
    for (long n = 0; n <= 16; ++n) CHECK(c.coef(n) == cn(n));
    // tzC^2 + (z - tz - 1)C + 1 = 0
    IntPoly t = ip("t");
    PolySeries res(16);
    res += PolySeries::one(16);
    for (long n = 0; n <= 16; ++n) {
        IntPoly v = -c.coef(n);
        if (n >= 1) v += (IntPoly::one() - t) * c.coef(n - 1);
        res.set_coef(n, res.coef(n) + v);
    }
    res += (c * c).shift(1) * PolySeries::constant(t, 16);
    CHECK(res.is_zero());
}

TEST_CASE("the z^2 Catalan series") {
    PolySeries f = solve_gf(GfTag::CatalanZ2, 16);
    for (long n = 0; 2 * n <= 16; ++n) CHECK(f.coef(2 * n) == IntPoly(catalan_number(n)));
    for (long n = 0; 2 * n + 1 <= 16; ++n) CHECK(f.coef(2 * n + 1).is_zero());
}

TEST_CASE("the shifted Narayana series") {
    PolySeries f = solve_gf(GfTag::BGf, 16);
    for (long n = 0; n <= 16; ++n) CHECK(f.coef(n) == cn(n + 1));
}

TEST_CASE("the central binomial series") {
    PolySeries f = solve_gf(GfTag::CentralBinom, 16);
    for (long n = 0; n <= 16; ++n) CHECK(f.coef(n) == IntPoly(binomial(2 * n, n)));
}

TEST_CASE("the type-B Narayana series") {
    PolySeries m = solve_gf(GfTag::MGf, 16);
    for (long n = 0; n <= 16; ++n) CHECK(m.coef(n) == narayana_b(n));
    // M^2 ((1-(1+t)z)^2 - 4tz^2) = 1
    PolySeries disc(16);
    disc.set_coef(0, IntPoly::one());
    disc.set_coef(1, ip("0-2-2t"));
    disc.set_coef(2, (IntPoly::one() - ip("t")) * (IntPoly::one() - ip("t")));
    CHECK((m * m * disc) == PolySeries::one(16));
}

TEST_CASE("column generating functions") {
    for (long k = 0; k <= 4; ++k) {
        CHECK(column_gf_check('A', k, 14).ok);
        CHECK(column_gf_check('B', k, 14).ok);
        CHECK(column_gf_check('D', k, 14).ok);
    }
}

TEST_CASE("convolution powers of the Narayana series") {
    PolySeries c = solve_catalan_gf(12);
    for (long m = 1; m <= 5; ++m) {
        PolySeries p = c.pow(m);
        for (long n = 0; n <= 12; ++n) CHECK(p.coef(n) == convolution_c(n, m));
    }
    CHECK(convolution_c(2, 2) == ip("3+2t"));
    for (long n = 0; n <= 12; ++n) CHECK(convolution_c(n, 1) == cn(n));
}

TEST_CASE("convolution values at t=1") {
    for (long m = 1; m <= 5; ++m)
        for (long n = 0; n <= 12; ++n) {
            Rational expected = Rational(m, 2 * n + m) * Rational(binomial(2 * n + m, n));
            CHECK(Rational(convolution_c(n, m).coeff_sum()) == expected);
        }
}

TEST_CASE("convolution powers of the type-B series") {
    PolySeries m_series = solve_gf(GfTag::MGf, 12);
    for (long m = 1; m <= 5; ++m) {
        PolySeries p = m_series.pow(m);
        for (long n = 0; n <= 12; ++n) CHECK(p.coef(n) == convolution_u(n, m));
    }
}

TEST_CASE("u-table golden values") {
    CHECK(convolution_u(2, 2) == ip("3+10t+3t^2"));
    CHECK(convolution_u(3, 2) == ip("4+28t+28t^2+4t^3"));
    CHECK(convolution_u(4, 2) == ip("5+60t+126t^2+60t^3+5t^4"));
    CHECK(convolution_u(4, 3) == ip("15+150t+300t^2+150t^3+15t^4"));
    CHECK(convolution_u(2, 4) == ip("10+28t+10t^2"));
    CHECK(convolution_u(3, 4) == ip("20+108t+108t^2+20t^3"));
    CHECK(convolution_u(4, 5) == ip("70+560t+1050t^2+560t^3+70t^4"));
    for (long m = 1; m <= 5; ++m)
        for (long n = 0; n <= 10; ++n) CHECK(convolution_u(n, m).is_palindromic().first);
}

TEST_CASE("gamma form of the u polynomials") {
    for (long m = 1; m <= 5; ++m)
        for (long n = 0; n <= 10; ++n) {
            GammaVector g = u_gamma_closed(n, m);
            CHECK(g.nonnegative);
            CHECK(g.reconstruct() == convolution_u(n, m));
        }
}

TEST_CASE("central binomial convolutions") {
    for (long n = 0; n <= 14; ++n) CHECK(central_binom_convolution(n, 2) == int_pow(4, n));
    // against the exhaustive m-fold convolution
    std::vector<BigInt> conv(15);
    for (long n = 0; n <= 14; ++n) conv[n] = binomial(2 * n, n);
    for (long m = 1; m <= 5; ++m) {
        for (long n = 0; n <= 14; ++n) CHECK(central_binom_convolution(n, m) == conv[n]);
        std::vector<BigInt> next(conv.size());
        for (long n = 0; n <= 14; ++n)
            for (long k = 0; k <= n; ++k) next[n] += conv[k] * binomial(2 * (n - k), n - k);
        conv = std::move(next);
    }
}

TEST_CASE("the half-sum identity for u_2") {
    for (long n = 0; n <= 14; ++n) CHECK(u2_closed_check(n));
}

TEST_CASE("u_3 reduces to scaled Narayana polynomials") {
    for (long n = 0; n <= 12; ++n)
        CHECK(convolution_u(n, 3) == binomial(n + 2, 2) * cn(n + 1));
}

TEST_CASE("derivative-shift identity") {
    for (long k = 0; k <= 2; ++k)
        for (long m = 1; m <= 2; ++m) CHECK(derivative_shift_check(k, m, 8).ok);
}
