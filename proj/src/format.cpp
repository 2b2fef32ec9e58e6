#include "narayana/format.hpp"

#include <cctype>
#include <sstream>

namespace narayana {

namespace {

// appends one monomial |c| var^e (sign handled by the caller)
void append_term(std::string& out, const BigInt& mag, const std::string& var, long e) {
    if (e == 0) {
        out += mag.str();
        return;
    }
    if (mag != 1) out += mag.str();
    out += var;
    if (e > 1) {
        out += '^';
        out += std::to_string(e);
    }
}

}  // namespace

std::string format_value(const BigInt& v) { return v.str(); }

std::string format_value(const Rational& v) {
    BigInt den = boost::multiprecision::denominator(v);
    std::string s = boost::multiprecision::numerator(v).str();
    if (den != 1) s += "/" + den.str();
    return s;
}

std::string format_value(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (long i = 0; i <= p.degree(); ++i) {
        const BigInt& c = p[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out += '-';
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        append_term(out, abs(c), var, i);
    }
    return out;
}

std::string format_value(const RatFunc& f) {
    if (f.is_polynomial()) return format_value(f.num());
    if (f.num().is_constant() && f.den().is_constant())
        return f.num()[0].str() + "/" + f.den()[0].str();
    return "(" + format_value(f.num()) + ")/(" + format_value(f.den()) + ")";
}

std::string format_value(const XPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (long i = 0; i <= p.degree(); ++i) {
        const RatFunc& c = p[i];
        if (c.is_zero()) continue;
        // constant integer coefficients get the compact sign-extracted form;
        // anything else is parenthesized so the term stays unambiguous
        bool simple = c.is_polynomial() && c.num().is_constant();
        if (first) {
            first = false;
            if (simple && c.num()[0] < 0) out += '-';
        } else {
            bool neg = simple && c.num()[0] < 0;
            out += neg ? " - " : " + ";
        }
        if (simple) {
            BigInt mag = abs(c.num()[0]);
            if (i == 0) {
                out += mag.str();
            } else {
                if (mag != 1) out += mag.str();
                out += 'x';
                if (i > 1) {
                    out += '^';
                    out += std::to_string(i);
                }
            }
        } else if (i == 0) {
            // the constant term needs no parentheses: it multiplies nothing
            // and always prints first, so addition keeps it unambiguous
            out += format_value(c);
        } else {
            out += "(" + format_value(c) + ")";
            if (i >= 1) {
                out += 'x';
                if (i > 1) {
                    out += '^';
                    out += std::to_string(i);
                }
            }
        }
    }
    return out;
}

// ---- parsing -----------------------------------------------------------

namespace {

class Parser {
   public:
    explicit Parser(const std::string& text) : s_(text) {}

    XPoly parse() {
        XPoly v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input at offset " + std::to_string(pos_));
        return v;
    }

   private:
    XPoly expr() {
        XPoly acc = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc += term();
            } else if (peek() == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    XPoly term() {
        XPoly acc = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= factor();
            } else if (c == '/') {
                ++pos_;
                acc = divide(acc, factor());
            } else if (c == '(' || c == 't' || c == 'x' || std::isdigit(static_cast<unsigned char>(c))) {
                acc *= factor();  // implicit multiplication
            } else {
                return acc;
            }
        }
    }

    XPoly factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (peek() == '-') neg = !neg;
            ++pos_;
            skip_ws();
        }
        XPoly v = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            long e = integer_literal();
            XPoly b = v;
            v = XPoly::one();
            for (long i = 0; i < e; ++i) v *= b;
        }
        return neg ? -v : v;
    }

    XPoly atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            XPoly v = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected )");
            ++pos_;
            return v;
        }
        if (c == 't') {
            ++pos_;
            return XPoly(RatFunc::t());
        }
        if (c == 'x') {
            ++pos_;
            return XPoly::x();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return XPoly(RatFunc(BigInt(number())));
        throw ParseError(std::string("unexpected character '") + c + "'");
    }

    BigInt number() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return BigInt(s_.substr(start, pos_ - start));
    }

    long integer_literal() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("exponent must be a nonnegative integer literal");
        return number().convert_to<long>();
    }

    static XPoly divide(const XPoly& a, const XPoly& b) {
        if (b.is_zero()) throw ParseError("division by zero");
        if (b.degree() > 0) throw ParseError("division by an expression containing x");
        const RatFunc& d = b[0];
        std::vector<RatFunc> v;
        v.reserve(static_cast<size_t>(a.degree()) + 1);
        for (long i = 0; i <= a.degree(); ++i) v.push_back(a[i] / d);
        return XPoly(std::move(v));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

XPoly parse_xpoly(const std::string& text) { return Parser(text).parse(); }

RatFunc parse_ratfunc(const std::string& text) {
    XPoly p = parse_xpoly(text);
    if (p.degree() > 0) throw ParseError("expression contains x but a function of t was expected");
    return p[0];
}

IntPoly parse_intpoly(const std::string& text) {
    RatFunc f = parse_ratfunc(text);
    if (!f.is_polynomial()) throw ParseError("expression is not a polynomial in t");
    return f.num();
}

Rational parse_rational(const std::string& text) {
    RatFunc f = parse_ratfunc(text);
    if (f.num().degree() > 0 || f.den().degree() > 0)
        throw ParseError("expression contains t but a rational number was expected");
    BigInt num = f.num().is_zero() ? BigInt(0) : f.num()[0];
    return Rational(num, f.den()[0]);
}

}  // namespace narayana
