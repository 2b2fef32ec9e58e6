#pragma once

// Every polynomial family, constructed two ways: by its three-term
// recurrence (the ground truth) and by its closed-form coefficient formula
// (verified claims, cross-checked in the test suite).

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "narayana/xpoly.hpp"

namespace narayana {

// p_n(x) = (x - s_{n-1}) p_{n-1}(x) - t_{n-2} p_{n-2}(x) for n >= 2.
struct Recurrence {
    std::function<RatFunc(long)> s;
    std::function<RatFunc(long)> t;
    XPoly p0;
    XPoly p1;
};

XPoly run_recurrence(const Recurrence& r, long n);

// ---- coefficient sequences --------------------------------------------

// type A: 1, t, 1, t, ...
RatFunc tau_type_a(long k);
// type B: tau_0 = 1+t, tau_{2n} = (1+t^{n+1})/(1+t^n), tau_{2n+1} = t(1+t^n)/(1+t^{n+1})
RatFunc tau_type_b(long k);
// T_0 = 2t, T_n = t
RatFunc t_seq_r(long k);
// sigma_0 = 1, sigma_n = 1+t
RatFunc sigma_type_a(long k);
// sigma_0 = (1+4t+t^2)/(1+t), sigma_n = (1+t^{n+1})/(1+t^n) + t(1+t^n)/(1+t^{n+1})
RatFunc sigma_type_b(long k);
// t-coefficients of the S_n recursion: t_k = t(1+t^k)(1+t^{k+2})/(1+t^{k+1})^2
RatFunc t_seq_s(long k);

// ---- named families ----------------------------------------------------

// f_n(x, s) by the explicit binomial sum, with s specialized to a rational
// function value.
XPoly fibonacci_general(long n, const RatFunc& s_val);
// l_n(x, s), l_0 = 2, l_1 = x.
XPoly lucas_general(long n, const RatFunc& s_val);

XPoly fib(long n);       // F_n(x) = f_{n+1}(x, -1)
XPoly fib_t(long n);     // F_n(x, t)
XPoly q_poly(long n);    // Q_n(x, t)
XPoly p_poly(long n);    // P_n(x, t)
XPoly lucas(long n);     // special Lucas L_n(x)
XPoly lucas_t(long n);   // L_n(x, t)
XPoly r_poly(long n);    // R_n(x, t) = L_{2n}(sqrt x, t)
XPoly s_poly(long n);    // S_n(x, t) = L_{2n+1}(sqrt x, t)/sqrt x
XPoly fib_even(long n);  // P_n(x) of the t=1 split, F_{2n}(sqrt x)
XPoly fib_odd(long n);   // Q_n(x) of the t=1 split
XPoly lucas_even(long n);  // R_n(x) = L_{2n}(sqrt x)
XPoly lucas_odd(long n);   // S_n(x) = L_{2n+1}(sqrt x)/sqrt x

// ---- closed-form coefficients ------------------------------------------

// q_{n,k}(t) = sum_j binom(n-j, k) binom(k+j, j) t^j
IntPoly coef_closed_q(long n, long k);
// p_{n,k}(t) = sum_j binom(n-j, k) binom(k-1+j, j) t^j
IntPoly coef_closed_p(long n, long k);
// coefficient of x^{n-2k} in F_n(x, t), sign included
IntPoly coef_closed_F(long n, long k);
// R_n(x, t) by the explicit formula, n > 0
XPoly coef_closed_R(long n);
// G_{n,k}(t)
IntPoly g_coef(long n, long k);
// coefficient of x^k in S_n(x, t): (-1)^{n-k} G_{n,k}(t) / (1 + t^n)
RatFunc coef_closed_S(long n, long k);

// ---- odd-even splitting ------------------------------------------------

// Given a symmetric recurrence (all s_k = 0) with coefficients t_seq, return
// the recurrences of the even part P_n(x) = p_{2n}(sqrt x) and the odd part
// Q_n(x) = p_{2n+1}(sqrt x)/sqrt x.
std::pair<Recurrence, Recurrence> split_even_odd(std::function<RatFunc(long)> t_seq);

// ---- periodicity -------------------------------------------------------

struct PeriodResult {
    bool periodic = false;
    std::optional<long> counterexample;  // first index violating the claim
    std::vector<BigInt> scaled_prefix;   // first min(period, n_max+1) scaled values
};

// Checks that values(n) / scale_base^{floor(n/scale_period)} is an exact
// integer sequence with the claimed period over 0 <= n <= n_max.
PeriodResult periodic_check(const std::function<BigInt(long)>& values, const BigInt& scale_base,
                            long scale_period, long claimed_period, long n_max);

// Integer value sequences for the periodicity remarks.
std::function<BigInt(long)> fib_t_at(long t0);
// R_n(1, t0) with the override R_0 := 2 (Binet normalization).
std::function<BigInt(long)> r_at_with_r0_2(long t0);

}  // namespace narayana
