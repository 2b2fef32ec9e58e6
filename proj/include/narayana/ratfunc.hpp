#pragma once

// Reduced rational functions in t.  Canonical form: the polynomial gcd of
// numerator and denominator is cancelled, the shared integer content is
// cancelled, and the denominator has positive leading coefficient.  Equality
// is therefore structural.

#include <utility>

#include "narayana/intpoly.hpp"

namespace narayana {

class RatFunc {
   public:
    RatFunc() = default;  // zero
    RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    explicit RatFunc(IntPoly num) : num_(std::move(num)), den_(IntPoly::one()) {}
    explicit RatFunc(const BigInt& c) : num_(c), den_(IntPoly::one()) {}
    explicit RatFunc(long c) : num_(c), den_(IntPoly::one()) {}
    explicit RatFunc(const Rational& r)
        : num_(boost::multiprecision::numerator(r)), den_(boost::multiprecision::denominator(r)) {}

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1L); }
    // the identity function t
    static RatFunc t() { return RatFunc(IntPoly::monomial(1)); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    const IntPoly& as_poly() const {
        if (!is_polynomial()) throw NonIntegerQuotient("rational function is not a polynomial");
        return num_;
    }

    bool operator==(const RatFunc& o) const = default;

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw ZeroDenominator("division of rational functions by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc pow(long e) const {
        RatFunc r = one(), b = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }

    Rational eval(const Rational& t0) const {
        Rational d = den_.eval(t0);
        if (d == 0) throw PoleAtPoint("denominator vanishes at evaluation point");
        return num_.eval(t0) / d;
    }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

   private:
    void reduce();

    IntPoly num_;
    IntPoly den_ = IntPoly::one();
};

inline RatFunc operator*(const RatFunc& a, const BigInt& s) { return a * RatFunc(s); }
inline RatFunc operator*(const BigInt& s, const RatFunc& a) { return a * RatFunc(s); }

}  // namespace narayana
