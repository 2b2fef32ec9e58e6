#pragma once

// Polynomials in x whose coefficients are rational functions in t.  One
// member of any of the polynomial families lives here.

#include <utility>
#include <vector>

#include "narayana/ratfunc.hpp"

namespace narayana {

class XPoly {
   public:
    XPoly() = default;
    explicit XPoly(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { normalize(); }
    XPoly(std::initializer_list<RatFunc> coeffs) : c_(coeffs) { normalize(); }
    explicit XPoly(RatFunc constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    explicit XPoly(long constant) : XPoly(RatFunc(constant)) {}

    static XPoly zero() { return XPoly(); }
    static XPoly one() { return XPoly(1L); }
    static XPoly x() { return monomial(1); }
    static XPoly monomial(long k, RatFunc coeff = RatFunc::one()) {
        if (coeff.is_zero()) return XPoly();
        std::vector<RatFunc> v(static_cast<size_t>(k) + 1);
        v.back() = std::move(coeff);
        return XPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const RatFunc& operator[](long i) const {
        static const RatFunc kZero;
        if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<RatFunc>& coeffs() const { return c_; }
    const RatFunc& leading() const { return c_.back(); }

    bool operator==(const XPoly& o) const = default;

    XPoly operator-() const {
        std::vector<RatFunc> v(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
        XPoly r;
        r.c_ = std::move(v);
        return r;
    }

    friend XPoly operator+(const XPoly& a, const XPoly& b) {
        std::vector<RatFunc> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a[static_cast<long>(i)] + b[static_cast<long>(i)];
        return XPoly(std::move(v));
    }
    friend XPoly operator-(const XPoly& a, const XPoly& b) { return a + (-b); }
    friend XPoly operator*(const XPoly& a, const XPoly& b) {
        if (a.is_zero() || b.is_zero()) return XPoly();
        std::vector<RatFunc> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return XPoly(std::move(v));
    }
    friend XPoly operator*(const XPoly& a, const RatFunc& s) {
        std::vector<RatFunc> v(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i] * s;
        return XPoly(std::move(v));
    }
    friend XPoly operator*(const RatFunc& s, const XPoly& a) { return a * s; }

    XPoly& operator+=(const XPoly& o) { return *this = *this + o; }
    XPoly& operator-=(const XPoly& o) { return *this = *this - o; }
    XPoly& operator*=(const XPoly& o) { return *this = *this * o; }

    // evaluate at a rational x, keeping t symbolic
    RatFunc eval_x(const Rational& x0) const {
        RatFunc acc;
        RatFunc x(x0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // evaluate both variables
    Rational eval(const Rational& x0, const Rational& t0) const {
        Rational acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x0 + c_[i].eval(t0);
        return acc;
    }

    // substitute t -> t0, yielding a polynomial in x over Q represented with
    // RatFunc constants
    XPoly specialize_t(const Rational& t0) const {
        std::vector<RatFunc> v(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) v[i] = RatFunc(c_[i].eval(t0));
        return XPoly(std::move(v));
    }

   private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<RatFunc> c_;
};

}  // namespace narayana
