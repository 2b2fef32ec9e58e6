#include "narayana/triangles.hpp"

namespace narayana {

const RatFunc& Triangle::entry(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw IndexOutOfTriangle("triangle entry: need 0 <= k <= n");
    ensure_rows(n);
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

const std::vector<RatFunc>& Triangle::row(long n) {
    if (n < 0) throw IndexOutOfTriangle("triangle row index must be nonnegative");
    ensure_rows(n);
    return rows_[static_cast<size_t>(n)];
}

void Triangle::ensure_rows(long n_max) {
    while (static_cast<long>(rows_.size()) <= n_max) {
        long n = static_cast<long>(rows_.size());
        const auto& prev = rows_.back();
        std::vector<RatFunc> row(static_cast<size_t>(n) + 1);
        auto at = [&](long k) -> RatFunc {
            if (k < 0 || k >= static_cast<long>(prev.size())) return RatFunc::zero();
            return prev[static_cast<size_t>(k)];
        };
        for (long k = 0; k <= n; ++k)
            row[static_cast<size_t>(k)] = at(k - 1) + s_(k) * at(k) + t_(k) * at(k + 1);
        rows_.push_back(std::move(row));
    }
}

Triangle stieltjes_from_recurrence(TriangleTag tag, std::function<RatFunc(long)> s_seq,
                                   std::function<RatFunc(long)> t_seq) {
    return Triangle(tag, std::move(s_seq), std::move(t_seq));
}

Triangle make_triangle(TriangleTag tag) {
    auto zero = [](long) { return RatFunc::zero(); };
    auto one = [](long) { return RatFunc::one(); };
    auto t = [](long) { return RatFunc::t(); };
    auto one_plus_t = [](long) { return RatFunc(IntPoly({1, 1})); };
    switch (tag) {
        case TriangleTag::Ballot:
            return Triangle(tag, zero, one);
        case TriangleTag::Lucas1:
            return Triangle(tag, zero, [](long k) { return k == 0 ? RatFunc(2L) : RatFunc::one(); });
        case TriangleTag::B:
            return Triangle(tag, one_plus_t, t);
        case TriangleTag::A:
            return Triangle(tag, sigma_type_a, t);
        case TriangleTag::D:
            return Triangle(tag, one_plus_t, t_seq_r);
        case TriangleTag::E:
            return Triangle(tag, sigma_type_b, t_seq_s);
    }
    throw UnknownTriangle("unreachable triangle tag");
}

TriangleTag triangle_tag_from_name(const std::string& name) {
    if (name == "A") return TriangleTag::A;
    if (name == "B") return TriangleTag::B;
    if (name == "D") return TriangleTag::D;
    if (name == "E") return TriangleTag::E;
    if (name == "ballot") return TriangleTag::Ballot;
    if (name == "lucas1") return TriangleTag::Lucas1;
    throw UnknownTriangle("unknown triangle: " + name);
}

BigInt ballot_closed(long steps, long k) {
    if (k < 0 || k > steps || (steps - k) % 2 != 0) return 0;
    long n = (steps - k) / 2;
    return binomial(steps, n) - binomial(steps, n - 1);
}

IntPoly b_closed(long n, long k) {
    if (k < 0 || k > n) throw IndexOutOfTriangle("B_{n,k}: need 0 <= k <= n");
    std::vector<BigInt> c(static_cast<size_t>(n - k) + 1);
    for (long j = 0; j <= n - k; ++j) {
        Rational w = Rational(binomial(n + 1, k + 1 + j) * binomial(n + 1, j)) * Rational(k + 1, n + 1);
        c[static_cast<size_t>(j)] = to_integer(w);
    }
    return IntPoly(std::move(c));
}

IntPoly b_closed_alt(long n, long k) {
    if (k < 0 || k > n) throw IndexOutOfTriangle("B_{n,k}: need 0 <= k <= n");
    std::vector<BigInt> c(static_cast<size_t>(n) + 1);
    for (long j = 0; j <= n; ++j)
        c[static_cast<size_t>(j)] =
            binomial(n, j) * binomial(n + 1, k + j + 1) - binomial(n + 1, j) * binomial(n, k + j + 1);
    return IntPoly(std::move(c));
}

IntPoly a_closed(long n, long k) {
    if (k < 0 || k > n) throw IndexOutOfTriangle("A_{n,k}: need 0 <= k <= n");
    if (n == 0) return IntPoly::one();
    std::vector<BigInt> c(static_cast<size_t>(n - k) + 1);
    for (long j = 0; j <= n - k; ++j) {
        BigInt num = binomial(n - 1, j) * binomial(n, k + j);
        if (num == 0) continue;  // vanishing term may sit over a zero denominator factor
        Rational w = Rational(num * BigInt(k * n + n - j)) /
                     Rational(BigInt(n - j) * BigInt(k + 1 + j));
        c[static_cast<size_t>(j)] = to_integer(w);
    }
    return IntPoly(std::move(c));
}

IntPoly a_closed_alt(long n, long k) {
    if (k < 0 || k > n) throw IndexOutOfTriangle("A_{n,k}: need 0 <= k <= n");
    if (n == 0) return IntPoly::one();
    std::vector<BigInt> c(static_cast<size_t>(n - k) + 1);
    for (long j = 0; j <= n - k; ++j)
        c[static_cast<size_t>(j)] = binomial(n - 1, j) * binomial(n + 1, k + j + 1) -
                                    binomial(n, j) * binomial(n, k + j + 1);
    return IntPoly(std::move(c));
}

IntPoly d_closed(long n, long k) {
    if (k < 0 || k > n) throw IndexOutOfTriangle("D_{n,k}: need 0 <= k <= n");
    std::vector<BigInt> c(static_cast<size_t>(n) + 1);
    for (long j = 0; j <= n; ++j) c[static_cast<size_t>(j)] = binomial(n, j) * binomial(n, k + j);
    return IntPoly(std::move(c));
}

IntPoly d_by_extraction(long n, long k) {
    if (k < 0 || k > n) throw IndexOutOfTriangle("D_{n,k}: need 0 <= k <= n");
    // (1 + (1+t) x + t x^2)^n as a polynomial in x with IntPoly coefficients
    std::vector<IntPoly> base = {IntPoly::one(), IntPoly({1, 1}), IntPoly::monomial(1)};
    std::vector<IntPoly> acc = {IntPoly::one()};
    for (long i = 0; i < n; ++i) {
        std::vector<IntPoly> next(acc.size() + 2);
        for (size_t a = 0; a < acc.size(); ++a)
            for (size_t b = 0; b < base.size(); ++b) next[a + b] += acc[a] * base[b];
        acc = std::move(next);
    }
    size_t idx = static_cast<size_t>(n - k);
    return idx < acc.size() ? acc[idx] : IntPoly::zero();
}

RatFunc e_closed(long n, long k) {
    if (k < 0 || k > n) throw IndexOutOfTriangle("E_{n,k}: need 0 <= k <= n");
    IntPoly num;
    for (long j = 0; j <= n - k; ++j) {
        BigInt w = binomial(n, k + j) * binomial(n + 1, j);
        num += IntPoly::monomial(j, w) + IntPoly::monomial(n + 1 - j, w);
    }
    return RatFunc(num, IntPoly::one() + IntPoly::monomial(k + 1));
}

RatFunc e_from_d(long n, long k) {
    if (k < 0 || k > n) throw IndexOutOfTriangle("E_{n,k}: need 0 <= k <= n");
    RatFunc d1(d_closed(n, k));
    RatFunc d2 = (k + 1 <= n) ? RatFunc(d_closed(n, k + 1)) : RatFunc::zero();
    return d1 + tau_type_b(2 * k + 1) * d2;
}

std::vector<RatFunc> expand_monomial(const std::vector<XPoly>& basis, long n) {
    if (static_cast<long>(basis.size()) <= n)
        throw SingularLeadingCoefficient("basis must contain p_0..p_n");
    for (long k = 0; k <= n; ++k)
        if (basis[static_cast<size_t>(k)].degree() != k)
            throw SingularLeadingCoefficient("basis polynomial p_k must have exact degree k");
    std::vector<RatFunc> coeffs(static_cast<size_t>(n) + 1);
    XPoly residual = XPoly::monomial(n);
    for (long k = n; k >= 0; --k) {
        const XPoly& pk = basis[static_cast<size_t>(k)];
        RatFunc c = residual[k] / pk.leading();
        coeffs[static_cast<size_t>(k)] = c;
        residual -= XPoly(c) * pk;
    }
    if (!residual.is_zero())
        throw SingularLeadingCoefficient("triangular solve left a nonzero residual");
    return coeffs;
}

std::vector<RatFunc> moments(MomentTag tag, long n_max) {
    auto column0 = [n_max](Triangle tri) {
        std::vector<RatFunc> out;
        out.reserve(static_cast<size_t>(n_max) + 1);
        for (long n = 0; n <= n_max; ++n) out.push_back(tri.entry(n, 0));
        return out;
    };
    // the interleaved triangles carry the n-th moment in row 2n
    auto column0_even = [n_max](Triangle tri) {
        std::vector<RatFunc> out;
        out.reserve(static_cast<size_t>(n_max) + 1);
        for (long n = 0; n <= n_max; ++n) out.push_back(tri.entry(2 * n, 0));
        return out;
    };
    auto zero = [](long) { return RatFunc::zero(); };
    switch (tag) {
        case MomentTag::L:
            return column0_even(Triangle(TriangleTag::Ballot, zero, tau_type_a));
        case MomentTag::L0:
            return column0(make_triangle(TriangleTag::A));
        case MomentTag::L1:
            return column0(make_triangle(TriangleTag::B));
        case MomentTag::M:
            return column0_even(Triangle(TriangleTag::Ballot, zero, tau_type_b));
        case MomentTag::M0:
            return column0(make_triangle(TriangleTag::D));
        case MomentTag::M1:
            return column0(make_triangle(TriangleTag::E));
    }
    throw UnknownTriangle("unreachable moment tag");
}

IntPoly narayana(long n) {
    if (n == 0) return IntPoly::one();
    std::vector<BigInt> c;
    for (long k = 0; k <= n - 1; ++k) {
        Rational w = Rational(binomial(n - 1, k) * binomial(n, k)) / Rational(k + 1);
        c.push_back(to_integer(w));
    }
    return IntPoly(std::move(c));
}

IntPoly narayana_b(long n) {
    std::vector<BigInt> c(static_cast<size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        BigInt b = binomial(n, k);
        c[static_cast<size_t>(k)] = b * b;
    }
    return IntPoly(std::move(c));
}

}  // namespace narayana
