#include "narayana/intpoly.hpp"

namespace narayana {

IntPoly IntPoly::pseudo_rem(const IntPoly& d) const {
    if (d.is_zero()) throw ZeroDenominator("pseudo_rem by zero polynomial");
    IntPoly r = *this;
    const long dd = d.degree();
    const BigInt& lc = d.leading();
    while (!r.is_zero() && r.degree() >= dd) {
        long shift = r.degree() - dd;
        BigInt q = r.leading();
        r = r * lc - d * IntPoly::monomial(shift, q);
    }
    return r;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part() * b.content();
    if (b.is_zero()) return a.primitive_part() * a.content();
    BigInt cont = boost::multiprecision::gcd(a.content(), b.content());
    IntPoly u = a.primitive_part();
    IntPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = u.pseudo_rem(v);
        u = std::move(v);
        v = r.primitive_part();
    }
    return u * cont;
}

IntPoly IntPoly::div_exact(const IntPoly& d) const {
    if (d.is_zero()) throw ZeroDenominator("division by zero polynomial");
    if (is_zero()) return IntPoly();
    // long division over Q, then certify integrality of the result times d
    long dd = d.degree();
    long qd = degree() - dd;
    if (qd < 0) throw NonIntegerQuotient("degree of divisor exceeds dividend");
    std::vector<Rational> rem(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) rem[i] = Rational(c_[i]);
    std::vector<Rational> q(static_cast<size_t>(qd) + 1);
    Rational lc(d.leading());
    for (long i = qd; i >= 0; --i) {
        Rational coef = rem[static_cast<size_t>(i + dd)] / lc;
        q[static_cast<size_t>(i)] = coef;
        if (coef != 0)
            for (long j = 0; j <= dd; ++j) rem[static_cast<size_t>(i + j)] -= coef * Rational(d[j]);
    }
    for (const auto& r : rem)
        if (r != 0) throw NonIntegerQuotient("polynomial division is not exact");
    std::vector<BigInt> qi(q.size());
    for (size_t i = 0; i < q.size(); ++i) qi[i] = to_integer(q[i]);
    return IntPoly(std::move(qi));
}

}  // namespace narayana
