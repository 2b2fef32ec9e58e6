#pragma once

// Catalan-Stieltjes matrices: built from the universal row recursion, from
// each triangle's closed form, and by triangular-solve inversion of the
// family basis.  Moments are the k = 0 column.

#include <functional>
#include <string>
#include <vector>

#include "narayana/families.hpp"

namespace narayana {

enum class TriangleTag { A, B, D, E, Ballot, Lucas1 };

class Triangle {
   public:
    Triangle(TriangleTag tag, std::function<RatFunc(long)> s_seq, std::function<RatFunc(long)> t_seq)
        : tag_(tag), s_(std::move(s_seq)), t_(std::move(t_seq)) {
        rows_.push_back({RatFunc::one()});
    }

    TriangleTag tag() const { return tag_; }

    // rows materialize lazily and are immutable once computed
    const RatFunc& entry(long n, long k);
    const std::vector<RatFunc>& row(long n);
    void ensure_rows(long n_max);

   private:
    TriangleTag tag_;
    std::function<RatFunc(long)> s_;
    std::function<RatFunc(long)> t_;
    std::vector<std::vector<RatFunc>> rows_;
};

// a(n,k) from an arbitrary recurrence-coefficient pair via (1.1)
Triangle stieltjes_from_recurrence(TriangleTag tag, std::function<RatFunc(long)> s_seq,
                                   std::function<RatFunc(long)> t_seq);

Triangle make_triangle(TriangleTag tag);
TriangleTag triangle_tag_from_name(const std::string& name);

// ---- closed forms ------------------------------------------------------

// ballot number a(2n+k, k); zero when the parity of (steps, height) is off
BigInt ballot_closed(long steps, long k);

// the two displayed sums for B_{n,k}(t); both are implemented
IntPoly b_closed(long n, long k);
IntPoly b_closed_alt(long n, long k);

// the two displayed sums for A_{n,k}(t), n > 0
IntPoly a_closed(long n, long k);
IntPoly a_closed_alt(long n, long k);

IntPoly d_closed(long n, long k);
// D_{n,k}(t) = [x^{n-k}] (1 + (1+t)x + t x^2)^n
IntPoly d_by_extraction(long n, long k);

RatFunc e_closed(long n, long k);
// E_{n,k}(t) = D_{n,k}(t) + tau_B(2k+1) D_{n,k+1}(t)
RatFunc e_from_d(long n, long k);

// ---- inversion and moments --------------------------------------------

// Solves x^n = sum_k c_k p_k(x) by back-substitution over RatFunc; basis
// must contain p_0..p_n with exact degrees.
std::vector<RatFunc> expand_monomial(const std::vector<XPoly>& basis, long n);

enum class MomentTag { L, L0, L1, M, M0, M1 };

// moments of the tagged functional for n = 0..n_max
std::vector<RatFunc> moments(MomentTag tag, long n_max);

// Narayana polynomials C_n(t) and M_n(t)
IntPoly narayana(long n);
IntPoly narayana_b(long n);

}  // namespace narayana
