#include "narayana/families.hpp"

namespace narayana {

namespace {

RatFunc rf(std::initializer_list<BigInt> coeffs) { return RatFunc(IntPoly(coeffs)); }

RatFunc one_plus_t() { return rf({1, 1}); }

// 1 + t^m
IntPoly one_plus_tpow(long m) { return IntPoly::one() + IntPoly::monomial(m); }

long floordiv2(long a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

}  // namespace

XPoly run_recurrence(const Recurrence& r, long n) {
    if (n == 0) return r.p0;
    if (n == 1) return r.p1;
    XPoly prev2 = r.p0;
    XPoly prev1 = r.p1;
    for (long i = 2; i <= n; ++i) {
        RatFunc si, ti;
        try {
            si = r.s(i - 1);
            ti = r.t(i - 2);
        } catch (const ZeroDenominator&) {
            throw PoleInCoefficient("recurrence coefficient has a zero denominator");
        }
        XPoly cur = (XPoly::x() - XPoly(si)) * prev1 - XPoly(ti) * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

RatFunc tau_type_a(long k) { return (k % 2 == 0) ? RatFunc::one() : RatFunc::t(); }

RatFunc tau_type_b(long k) {
    if (k == 0) return one_plus_t();
    long n = k / 2;
    if (k % 2 == 0) return RatFunc(one_plus_tpow(n + 1), one_plus_tpow(n));
    return RatFunc(IntPoly::monomial(1) * one_plus_tpow(n), one_plus_tpow(n + 1));
}

RatFunc t_seq_r(long k) { return k == 0 ? rf({0, 2}) : RatFunc::t(); }

RatFunc sigma_type_a(long k) { return k == 0 ? RatFunc::one() : one_plus_t(); }

RatFunc sigma_type_b(long k) {
    if (k == 0) return RatFunc(IntPoly({1, 4, 1}), IntPoly({1, 1}));
    return RatFunc(one_plus_tpow(k + 1), one_plus_tpow(k)) +
           RatFunc(IntPoly::monomial(1) * one_plus_tpow(k), one_plus_tpow(k + 1));
}

RatFunc t_seq_s(long k) {
    return RatFunc(IntPoly::monomial(1) * one_plus_tpow(k) * one_plus_tpow(k + 2),
                   one_plus_tpow(k + 1) * one_plus_tpow(k + 1));
}

XPoly fibonacci_general(long n, const RatFunc& s_val) {
    if (n <= 0) return XPoly::zero();
    XPoly acc;
    for (long k = 0; 2 * k <= n - 1; ++k)
        acc += XPoly::monomial(n - 1 - 2 * k, RatFunc(binomial(n - 1 - k, k)) * s_val.pow(k));
    return acc;
}

XPoly lucas_general(long n, const RatFunc& s_val) {
    if (n == 0) return XPoly(2L);
    XPoly acc;
    for (long k = 0; 2 * k <= n; ++k) {
        Rational c = Rational(n) / Rational(n - k) * Rational(binomial(n - k, k));
        acc += XPoly::monomial(n - 2 * k, RatFunc(c) * s_val.pow(k));
    }
    return acc;
}

namespace {

Recurrence fib_rec() {
    return {[](long) { return RatFunc::zero(); }, [](long) { return RatFunc::one(); }, XPoly::one(),
            XPoly::x()};
}

Recurrence fib_t_rec() {
    return {[](long) { return RatFunc::zero(); }, tau_type_a, XPoly::one(), XPoly::x()};
}

Recurrence q_rec() {
    return {[](long) { return one_plus_t(); }, [](long) { return RatFunc::t(); }, XPoly::one(),
            XPoly::x() - XPoly(one_plus_t())};
}

Recurrence p_rec() {
    return {sigma_type_a, [](long) { return RatFunc::t(); }, XPoly::one(),
            XPoly::x() - XPoly::one()};
}

Recurrence lucas_rec() {
    return {[](long) { return RatFunc::zero(); },
            [](long k) { return k == 0 ? RatFunc(2L) : RatFunc::one(); }, XPoly::one(), XPoly::x()};
}

Recurrence lucas_t_rec() {
    return {[](long) { return RatFunc::zero(); }, tau_type_b, XPoly::one(), XPoly::x()};
}

Recurrence r_rec() {
    return {[](long) { return one_plus_t(); }, t_seq_r, XPoly::one(),
            XPoly::x() - XPoly(one_plus_t())};
}

Recurrence s_rec() {
    return {sigma_type_b, t_seq_s, XPoly::one(), XPoly::x() - XPoly(sigma_type_b(0))};
}

}  // namespace

XPoly fib(long n) { return run_recurrence(fib_rec(), n); }
XPoly fib_t(long n) { return run_recurrence(fib_t_rec(), n); }
XPoly q_poly(long n) { return run_recurrence(q_rec(), n); }
XPoly p_poly(long n) { return run_recurrence(p_rec(), n); }
XPoly lucas(long n) { return run_recurrence(lucas_rec(), n); }
XPoly lucas_t(long n) { return run_recurrence(lucas_t_rec(), n); }
XPoly r_poly(long n) { return run_recurrence(r_rec(), n); }
XPoly s_poly(long n) { return run_recurrence(s_rec(), n); }

XPoly fib_even(long n) {
    auto [p, q] = split_even_odd([](long) { return RatFunc::one(); });
    (void)q;
    return run_recurrence(p, n);
}

XPoly fib_odd(long n) {
    auto [p, q] = split_even_odd([](long) { return RatFunc::one(); });
    (void)p;
    return run_recurrence(q, n);
}

XPoly lucas_even(long n) {
    auto [p, q] = split_even_odd([](long k) { return k == 0 ? RatFunc(2L) : RatFunc::one(); });
    (void)q;
    return run_recurrence(p, n);
}

XPoly lucas_odd(long n) {
    auto [p, q] = split_even_odd([](long k) { return k == 0 ? RatFunc(2L) : RatFunc::one(); });
    (void)p;
    return run_recurrence(q, n);
}

IntPoly coef_closed_q(long n, long k) {
    if (k < 0 || k > n) throw IndexOutOfTriangle("q_{n,k}: need 0 <= k <= n");
    std::vector<BigInt> c(static_cast<size_t>(n - k) + 1);
    for (long j = 0; j <= n - k; ++j) c[static_cast<size_t>(j)] = binomial(n - j, k) * binomial(k + j, j);
    return IntPoly(std::move(c));
}

IntPoly coef_closed_p(long n, long k) {
    if (k < 0 || k > n) throw IndexOutOfTriangle("p_{n,k}: need 0 <= k <= n");
    std::vector<BigInt> c(static_cast<size_t>(n - k) + 1);
    for (long j = 0; j <= n - k; ++j) {
        // binom(k-1+j, j) with binom(m, 0) = 1 for every m
        BigInt b2 = (j == 0) ? BigInt(1) : binomial(k - 1 + j, j);
        c[static_cast<size_t>(j)] = binomial(n - j, k) * b2;
    }
    return IntPoly(std::move(c));
}

IntPoly coef_closed_F(long n, long k) {
    if (k < 0 || 2 * k > n) throw IndexOutOfTriangle("F coefficient: need 0 <= 2k <= n");
    long h = n / 2;
    long h1 = floordiv2(n - 1);
    std::vector<BigInt> c(static_cast<size_t>(k) + 1);
    for (long j = 0; j <= k; ++j) {
        BigInt b1 = (k - j == 0) ? BigInt(1) : binomial(h - j, k - j);
        BigInt b2 = (j == 0) ? BigInt(1) : binomial(h1 - k + j, j);
        c[static_cast<size_t>(j)] = b1 * b2;
    }
    IntPoly p(std::move(c));
    return (k % 2 == 0) ? p : -p;
}

XPoly coef_closed_R(long n) {
    if (n <= 0) throw IndexOutOfTriangle("closed form of R_n needs n > 0");
    std::vector<RatFunc> c(static_cast<size_t>(n) + 1);
    // constant term (-1)^n (1 + t^n); the displayed (1+t)^n is a typo, as the
    // recurrence and the Binet roots -1, -t at x = 0 both show
    IntPoly constant = one_plus_tpow(n);
    c[0] = RatFunc((n % 2 == 0) ? constant : -constant);
    for (long ell = 1; ell <= n; ++ell) {
        RatFunc inner;
        for (long j = 0; j <= n - ell; ++j) {
            BigInt num = binomial(n - ell, j) * ((j == 0) ? BigInt(1) : binomial(ell + j - 1, j));
            Rational coef = Rational(num) / Rational(binomial(n - 1, j));
            inner += RatFunc(coef) * RatFunc(IntPoly::monomial(j));
        }
        RatFunc sign((n - ell) % 2 == 0 ? 1L : -1L);
        c[static_cast<size_t>(ell)] = sign * RatFunc(binomial(n, ell)) * inner;
    }
    return XPoly(std::move(c));
}

IntPoly g_coef(long n, long k) {
    if (k < 0 || k > n) throw IndexOutOfTriangle("G_{n,k}: need 0 <= k <= n");
    if (k == 0) {
        IntPoly acc = IntPoly::monomial(n, 2 * n + 1);
        for (long j = 0; j <= 2 * n; ++j) acc += IntPoly::monomial(j);
        return acc;
    }
    std::vector<Rational> c(static_cast<size_t>(2 * n - k) + 1);
    for (long j = 0; j <= n - k; ++j) {
        BigInt num = binomial(j + k, k) * binomial(n - j - 1, k - 1) * BigInt(n * (k + 1) - j);
        Rational w = Rational(num) / Rational(BigInt(k) * BigInt(k + 1));
        c[static_cast<size_t>(j)] += w;
        c[static_cast<size_t>(2 * n - k - j)] += w;
    }
    std::vector<BigInt> ci(c.size());
    for (size_t i = 0; i < c.size(); ++i) ci[i] = to_integer(c[i]);
    return IntPoly(std::move(ci));
}

RatFunc coef_closed_S(long n, long k) {
    IntPoly g = g_coef(n, k);
    if ((n - k) % 2 != 0) g = -g;
    return RatFunc(g, one_plus_tpow(n));
}

std::pair<Recurrence, Recurrence> split_even_odd(std::function<RatFunc(long)> t_seq) {
    Recurrence even{
        [t_seq](long k) { return k == 0 ? t_seq(0) : t_seq(2 * k - 1) + t_seq(2 * k); },
        [t_seq](long k) { return t_seq(2 * k) * t_seq(2 * k + 1); },
        XPoly::one(),
        XPoly::x() - XPoly(t_seq(0)),
    };
    Recurrence odd{
        [t_seq](long k) { return t_seq(2 * k) + t_seq(2 * k + 1); },
        [t_seq](long k) { return t_seq(2 * k + 1) * t_seq(2 * k + 2); },
        XPoly::one(),
        XPoly::x() - XPoly(t_seq(0) + t_seq(1)),
    };
    return {std::move(even), std::move(odd)};
}

PeriodResult periodic_check(const std::function<BigInt(long)>& values, const BigInt& scale_base,
                            long scale_period, long claimed_period, long n_max) {
    PeriodResult res;
    std::vector<BigInt> scaled;
    scaled.reserve(static_cast<size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        BigInt v = values(n);
        BigInt d = int_pow(scale_base, n / scale_period);
        if (v % d != 0)
            throw NonIntegerQuotient("scaled family value is not divisible by the claimed power");
        scaled.push_back(v / d);
    }
    res.periodic = true;
    for (long n = claimed_period; n <= n_max; ++n) {
        if (scaled[static_cast<size_t>(n)] != scaled[static_cast<size_t>(n - claimed_period)]) {
            res.periodic = false;
            res.counterexample = n;
            break;
        }
    }
    long keep = std::min<long>(claimed_period, n_max + 1);
    res.scaled_prefix.assign(scaled.begin(), scaled.begin() + keep);
    return res;
}

std::function<BigInt(long)> fib_t_at(long t0) {
    return [t0](long n) {
        BigInt prev2 = 1, prev1 = 1;  // F_0(1,t) = 1, F_1(1,t) = 1
        if (n == 0) return prev2;
        if (n == 1) return prev1;
        for (long i = 2; i <= n; ++i) {
            BigInt tau = (i % 2 == 0) ? BigInt(1) : BigInt(t0);  // tau_{i-2}
            BigInt cur = prev1 - tau * prev2;
            prev2 = prev1;
            prev1 = cur;
        }
        return prev1;
    };
}

std::function<BigInt(long)> r_at_with_r0_2(long t0) {
    // With R_0 = 2 the Binet form holds and the plain constant-coefficient
    // recurrence R_n = -t R_{n-1} - t R_{n-2} applies at x = 1.
    return [t0](long n) {
        BigInt prev2 = 2, prev1 = -t0;
        if (n == 0) return prev2;
        if (n == 1) return prev1;
        for (long i = 2; i <= n; ++i) {
            BigInt cur = -BigInt(t0) * (prev1 + prev2);
            prev2 = prev1;
            prev1 = cur;
        }
        return prev1;
    };
}

}  // namespace narayana
