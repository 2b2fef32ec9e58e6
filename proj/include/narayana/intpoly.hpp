#pragma once

// Dense polynomials in t over BigInt, coefficients stored low-to-high.
// Normal form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector.

#include <optional>
#include <utility>
#include <vector>

#include "narayana/numeric.hpp"

namespace narayana {

class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<BigInt> coeffs) : c_(coeffs) { normalize(); }
    explicit IntPoly(const BigInt& constant) {
        if (constant != 0) c_.push_back(constant);
    }
    explicit IntPoly(long constant) : IntPoly(BigInt(constant)) {}

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly(BigInt(1)); }
    // t^k
    static IntPoly monomial(long k, BigInt coeff = 1) {
        if (coeff == 0) return IntPoly();
        std::vector<BigInt> v(static_cast<size_t>(k) + 1);
        v.back() = std::move(coeff);
        return IntPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const BigInt& operator[](long i) const {
        static const BigInt kZero = 0;
        if (i < 0 || i >= static_cast<long>(c_.size())) return kZero;
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& leading() const { return c_.back(); }

    bool operator==(const IntPoly& o) const = default;

    IntPoly operator-() const {
        std::vector<BigInt> v(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
        IntPoly r;
        r.c_ = std::move(v);
        return r;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a[static_cast<long>(i)] + b[static_cast<long>(i)];
        return IntPoly(std::move(v));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(v));
    }
    friend IntPoly operator*(const IntPoly& a, const BigInt& s) {
        std::vector<BigInt> v(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i] * s;
        return IntPoly(std::move(v));
    }
    friend IntPoly operator*(const BigInt& s, const IntPoly& a) { return a * s; }

    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    IntPoly pow(long e) const {
        IntPoly r = one(), b = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }

    // m-th formal derivative with respect to t
    IntPoly derivative(long m = 1) const {
        IntPoly r = *this;
        for (long d = 0; d < m; ++d) {
            if (r.is_zero()) return r;
            std::vector<BigInt> v;
            v.reserve(r.c_.size());
            for (size_t i = 1; i < r.c_.size(); ++i) v.push_back(r.c_[i] * BigInt(i));
            r = IntPoly(std::move(v));
        }
        return r;
    }

    Rational eval(const Rational& t0) const {
        Rational acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * t0 + Rational(c_[i]);
        return acc;
    }
    BigInt eval_int(const BigInt& t0) const {
        BigInt acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * t0 + c_[i];
        return acc;
    }

    // sum of coefficients, i.e. eval at t = 1
    BigInt coeff_sum() const {
        BigInt s = 0;
        for (const auto& x : c_) s += x;
        return s;
    }

    // True iff the coefficient vector reads the same reversed.  The zero
    // polynomial counts as palindromic; the center is degree().
    std::pair<bool, long> is_palindromic() const {
        for (size_t i = 0, j = c_.size(); i < j; ++i)
            if (c_[i] != c_[j - 1 - i]) return {false, degree()};
        return {true, degree()};
    }

    // gcd of all coefficients, nonnegative; 0 for the zero polynomial
    BigInt content() const {
        BigInt g = 0;
        for (const auto& x : c_) {
            g = boost::multiprecision::gcd(g, x);
            if (g == 1) break;
        }
        return g;
    }

    IntPoly primitive_part() const {
        if (is_zero()) return *this;
        BigInt g = content();
        if (leading() < 0) g = -g;
        return div_scalar_exact(g);
    }

    IntPoly div_scalar_exact(const BigInt& s) const {
        std::vector<BigInt> v(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) {
            BigInt q = c_[i] / s;
            if (q * s != c_[i]) throw NonIntegerQuotient("scalar division is not exact");
            v[i] = std::move(q);
        }
        return IntPoly(std::move(v));
    }

    // Exact polynomial division; throws NonIntegerQuotient when *this is not
    // a multiple of d (over Q[t]).
    IntPoly div_exact(const IntPoly& d) const;

    // Pseudo-remainder of *this by d (d nonzero).
    IntPoly pseudo_rem(const IntPoly& d) const;

   private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

// gcd in Z[t]: primitive, positive leading coefficient; content of the
// inputs is folded in via integer gcd.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

}  // namespace narayana
