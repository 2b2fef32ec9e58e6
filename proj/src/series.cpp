#include "narayana/series.hpp"

#include "narayana/triangles.hpp"

namespace narayana {

PolySeries solve_catalan_gf(long order) {
    // tzC^2 = C - 1 - zC + tzC rearranged to C = 1 + zC - tzC + tzC^2
    PolySeries c(order);
    c.set_coef(0, IntPoly::one());
    IntPoly t = IntPoly::monomial(1);
    for (long n = 1; n <= order; ++n) {
        IntPoly conv;
        for (long i = 0; i <= n - 1; ++i) conv += c.coef(i) * c.coef(n - 1 - i);
        c.set_coef(n, c.coef(n - 1) - t * c.coef(n - 1) + t * conv);
    }
    return c;
}

PolySeries solve_gf(GfTag tag, long order) {
    PolySeries f(order);
    f.set_coef(0, IntPoly::one());
    IntPoly t = IntPoly::monomial(1);
    IntPoly one_plus_t({1, 1});
    switch (tag) {
        case GfTag::CatalanZ2:
            // f = 1 + z^2 f^2
            for (long n = 1; n <= order; ++n) {
                IntPoly conv;
                for (long i = 0; i <= n - 2; ++i) conv += f.coef(i) * f.coef(n - 2 - i);
                f.set_coef(n, conv);
            }
            return f;
        case GfTag::BGf:
            // 1 - (1 - (1+t)z) f + t z^2 f^2 = 0
            for (long n = 1; n <= order; ++n) {
                IntPoly conv;
                for (long i = 0; i <= n - 2; ++i) conv += f.coef(i) * f.coef(n - 2 - i);
                f.set_coef(n, one_plus_t * f.coef(n - 1) + t * conv);
            }
            return f;
        case GfTag::CentralBinom:
            // f0 = 1 + 2 z f0 f with f the Catalan number series
            for (long n = 1; n <= order; ++n) {
                IntPoly acc;
                for (long i = 0; i <= n - 1; ++i)
                    acc += f.coef(i) * IntPoly(catalan_number(n - 1 - i));
                f.set_coef(n, BigInt(2) * acc);
            }
            return f;
        case GfTag::MGf: {
            // f0 = 1 + (1+t) z f0 + 2t z^2 f0 g with g the B-column series
            PolySeries g = solve_gf(GfTag::BGf, order);
            for (long n = 1; n <= order; ++n) {
                IntPoly conv;
                for (long i = 0; i <= n - 2; ++i) conv += f.coef(i) * g.coef(n - 2 - i);
                f.set_coef(n, one_plus_t * f.coef(n - 1) + BigInt(2) * t * conv);
            }
            return f;
        }
    }
    throw std::invalid_argument("unreachable generating function tag");
}

SeriesCheck column_gf_check(char triangle, long k, long order) {
    PolySeries c = solve_catalan_gf(order);
    PolySeries c_minus_1 = c - PolySeries::one(order);
    TriangleTag tag;
    switch (triangle) {
        case 'A': tag = TriangleTag::A; break;
        case 'B': tag = TriangleTag::B; break;
        case 'D': tag = TriangleTag::D; break;
        default: throw UnknownTriangle("column_gf_check expects A, B or D");
    }
    Triangle tri = make_triangle(tag);
    PolySeries column(order);
    for (long n = 0; n <= order; ++n)
        if (k <= n) column.set_coef(n, tri.entry(n, k).as_poly());
    PolySeries rhs(order);
    switch (triangle) {
        case 'A':
            rhs = c * c_minus_1.pow(k);
            break;
        case 'B':
            // z * column = (C-1)^{k+1}
            column = column.shift(1);
            rhs = c_minus_1.pow(k + 1);
            break;
        case 'D':
            rhs = solve_gf(GfTag::MGf, order) * c_minus_1.pow(k);
            break;
    }
    SeriesCheck res;
    for (long n = 0; n <= order; ++n)
        if (!(column.coef(n) == rhs.coef(n))) {
            res.ok = false;
            res.witness_index = n;
            break;
        }
    return res;
}

IntPoly convolution_c(long n, long m) {
    if (n == 0) return IntPoly::one();
    std::vector<BigInt> c(static_cast<size_t>(n));
    for (long k = 0; k <= n - 1; ++k) {
        Rational w =
            Rational(binomial(n - 1, k) * binomial(n + m, k + m)) * Rational(m, n + m);
        c[static_cast<size_t>(k)] = to_integer(w);
    }
    return IntPoly(std::move(c));
}

IntPoly convolution_u(long n, long m) {
    std::vector<BigInt> c(static_cast<size_t>(n) + 1);
    BigInt lead = binomial(n + m - 1, m - 1);
    for (long k = 0; k <= n; ++k) {
        BigInt pn = 1, pd = 1;
        for (long j = 0; j < k; ++j) {
            pn *= 2 * n + m - 1 - 2 * j;
            pd *= 2 * k + m - 1 - 2 * j;
        }
        Rational w = Rational(lead * binomial(n, k)) * Rational(pn, pd);
        c[static_cast<size_t>(k)] = to_integer(w);
    }
    return IntPoly(std::move(c));
}

GammaVector u_gamma_closed(long n, long m) {
    GammaVector gv;
    gv.degree_bound = n;
    BigInt lead = binomial(n + m - 1, m - 1);
    for (long k = 0; 2 * k <= n; ++k) {
        // (2k)!! = 2^k k!
        BigInt dfact = int_pow(2, k) * factorial(k);
        BigInt denom = 1;
        for (long i = 0; i < k; ++i) denom *= m + 2 * i + 1;
        Rational w = Rational(lead * binomial(2 * k, k) * binomial(n, 2 * k) * dfact, denom);
        gv.gamma.push_back(to_integer(w));
    }
    while (!gv.gamma.empty() && gv.gamma.back() == 0) gv.gamma.pop_back();
    for (const auto& g : gv.gamma)
        if (g < 0) gv.nonnegative = false;
    return gv;
}

BigInt central_binom_convolution(long n, long m) {
    // 4^n binom(m/2 + n - 1, n) with the half-integer binomial expanded as a
    // falling product; integrality is asserted
    BigInt prod = 1;
    for (long i = 0; i < n; ++i) prod *= m + 2 * n - 2 - 2 * i;
    Rational w = Rational(int_pow(2, n) * prod, factorial(n));
    return to_integer(w);
}

bool u2_closed_check(long n) {
    IntPoly u2 = convolution_u(n, 2);
    std::vector<BigInt> half(static_cast<size_t>(n) + 1);
    for (long k = 0; k <= n; ++k)
        half[static_cast<size_t>(k)] = to_integer(Rational(binomial(2 * n + 2, 2 * k + 1), 2));
    IntPoly half_sum(std::move(half));
    IntPoly even_part, odd_part;
    for (long k = 0; 2 * k <= n + 1; ++k) {
        even_part += IntPoly::monomial(k, binomial(n + 1, 2 * k));
        odd_part += IntPoly::monomial(k, binomial(n + 1, 2 * k + 1));
    }
    return u2 == half_sum && u2 == even_part * odd_part;
}

SeriesCheck derivative_shift_check(long k, long m, long order) {
    auto d_entry = [](long n, long kk) {
        return (kk <= n) ? d_closed(n, kk) : IntPoly::zero();
    };
    TSeries<RatFunc> lhs(order);
    for (long n = 0; n <= order; ++n) {
        BigInt fall = 1;  // (n+m)(n+m-1)...(n+1)
        for (long j = 1; j <= m; ++j) fall *= n + j;
        lhs.set_coef(n, RatFunc(d_entry(n + m, k).derivative(m), IntPoly(fall)));
    }
    PolySeries c = solve_catalan_gf(order);
    TSeries<RatFunc> rhs(order);
    {
        TSeries<RatFunc> cm(order), dcol(order);
        PolySeries cpow = c.pow(m);
        for (long n = 0; n <= order; ++n) {
            cm.set_coef(n, RatFunc(cpow.coef(n)));
            dcol.set_coef(n, RatFunc(d_entry(n, k)));
        }
        rhs = cm * dcol;
    }
    SeriesCheck res;
    for (long n = 0; n <= order; ++n)
        if (!(lhs.coef(n) == rhs.coef(n))) {
            res.ok = false;
            res.witness_index = n;
            break;
        }
    return res;
}

}  // namespace narayana
