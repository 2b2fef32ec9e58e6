#pragma once

// Truncated formal power series in z.  Coefficients live in any of the exact
// rings used here (IntPoly, RatFunc, XPoly).  Every series carries its
// truncation order; operations never claim coefficients beyond what both
// operands support.

#include <algorithm>
#include <utility>
#include <vector>

#include "narayana/intpoly.hpp"
#include "narayana/paths.hpp"
#include "narayana/ratfunc.hpp"
#include "narayana/xpoly.hpp"

namespace narayana {

inline constexpr long kDefaultSeriesOrder = 16;

template <class C>
class TSeries {
   public:
    explicit TSeries(long order) : order_(order), c_(static_cast<size_t>(order) + 1) {}
    TSeries(std::vector<C> coeffs, long order) : order_(order), c_(std::move(coeffs)) {
        c_.resize(static_cast<size_t>(order) + 1);
    }

    static TSeries constant(C value, long order) {
        TSeries s(order);
        s.c_[0] = std::move(value);
        return s;
    }
    static TSeries one(long order) { return constant(C::one(), order); }

    long order() const { return order_; }
    const C& coef(long n) const {
        static const C kZero{};
        if (n < 0 || n > order_) return kZero;
        return c_[static_cast<size_t>(n)];
    }
    void set_coef(long n, C v) { c_[static_cast<size_t>(n)] = std::move(v); }

    friend TSeries operator+(const TSeries& a, const TSeries& b) {
        long ord = std::min(a.order_, b.order_);
        TSeries r(ord);
        for (long n = 0; n <= ord; ++n) r.c_[static_cast<size_t>(n)] = a.coef(n) + b.coef(n);
        return r;
    }
    friend TSeries operator-(const TSeries& a, const TSeries& b) {
        long ord = std::min(a.order_, b.order_);
        TSeries r(ord);
        for (long n = 0; n <= ord; ++n) r.c_[static_cast<size_t>(n)] = a.coef(n) - b.coef(n);
        return r;
    }
    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        long ord = std::min(a.order_, b.order_);
        TSeries r(ord);
        for (long i = 0; i <= ord; ++i) {
            if (a.coef(i) == C{}) continue;
            for (long j = 0; i + j <= ord; ++j)
                r.c_[static_cast<size_t>(i + j)] += a.coef(i) * b.coef(j);
        }
        return r;
    }

    TSeries& operator+=(const TSeries& o) { return *this = *this + o; }
    TSeries& operator-=(const TSeries& o) { return *this = *this - o; }
    TSeries& operator*=(const TSeries& o) { return *this = *this * o; }

    TSeries pow(long e) const {
        TSeries r = one(order_), b = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }

    // multiply by z^k; the reliable window shrinks accordingly
    TSeries shift(long k) const {
        long ord = order_;
        TSeries r(ord);
        for (long n = k; n <= ord; ++n) r.c_[static_cast<size_t>(n)] = coef(n - k);
        return r;
    }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!(x == C{})) return false;
        return true;
    }

    bool operator==(const TSeries& o) const {
        long ord = std::min(order_, o.order_);
        for (long n = 0; n <= ord; ++n)
            if (!(coef(n) == o.coef(n))) return false;
        return true;
    }

   private:
    long order_;
    std::vector<C> c_;
};

using PolySeries = TSeries<IntPoly>;

enum class GfTag { CatalanZ2, BGf, CentralBinom, MGf };

// C(t, z) from the quadratic functional equation (3.1), coefficient by
// coefficient; coefficients are the Narayana polynomials C_n(t)
PolySeries solve_catalan_gf(long order);

// the remaining generating functions, each from its functional equation
PolySeries solve_gf(GfTag tag, long order);

struct SeriesCheck {
    bool ok = true;
    long witness_index = -1;
};

// triangle column vs the closed series expression of (1.42) / (2.25)
SeriesCheck column_gf_check(char triangle, long k, long order);

// c_n(m, t): closed form (3.3); equals [z^n] C(t,z)^m
IntPoly convolution_c(long n, long m);
// u_m(n, t): closed form (3.10); equals [z^n] M(t,z)^m
IntPoly convolution_u(long n, long m);
// the gamma form (3.11) of u_m(n, t)
GammaVector u_gamma_closed(long n, long m);

// m-fold convolution of central binomial coefficients: 4^n binom(m/2+n-1, n)
BigInt central_binom_convolution(long n, long m);

// verifies (3.13) for u_2, including the product-of-two-sums form
bool u2_closed_check(long n);

// verifies (3.4) for the given k, m through the stated order
SeriesCheck derivative_shift_check(long k, long m, long order);

}  // namespace narayana
