#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "narayana/format.hpp"
#include "narayana/paths.hpp"
#include "narayana/triangles.hpp"

using namespace narayana;

namespace {

IntPoly ip(const std::string& text) { return parse_intpoly(text); }

}  // namespace

TEST_CASE("path basics") {
    Path p = {Step::N, Step::E, Step::S, Step::W};
    CHECK(path_height(p) == 0);
    CHECK(path_nonnegative(p));
    Path dip = {Step::S, Step::N};
    CHECK_FALSE(path_nonnegative(dip));
    CHECK(all_paths(0).size() == 1);
    CHECK(all_paths(3).size() == 64);
}

TEST_CASE("displayed example weights for the A scheme at n=3") {
    // k=0: w(EEE)=1, w(NSE+ENS+NES)=3t, w(NWS)=t^2
    CHECK(enumerate_weight(WeightScheme::A, 3, 0) == ip("1+3t+t^2"));
    // k=2: w(NNE+ENN+NEN)=3, w(NNW+NWN)=2t
    CHECK(enumerate_weight(WeightScheme::A, 3, 2) == ip("3+2t"));
}

TEST_CASE("displayed example weights for the D scheme at n=2") {
    // k=0: w(EE)=1, w(WW)=t^2, w(NS)=2t, w(EW)=w(WE)=t
    CHECK(enumerate_weight(WeightScheme::D, 2, 0) == ip("1+4t+t^2"));
    // k=1: w(NE)=w(EN)=1, w(WN)=w(NW)=t
    CHECK(enumerate_weight(WeightScheme::D, 2, 1) == ip("2+2t"));
}

TEST_CASE("path enumeration matches the triangles") {
    Triangle b = make_triangle(TriangleTag::B);
    Triangle a = make_triangle(TriangleTag::A);
    Triangle d = make_triangle(TriangleTag::D);
    Triangle l = make_triangle(TriangleTag::Lucas1);
    for (long n = 0; n <= 6; ++n)
        for (long k = 0; k <= n; ++k) {
            CHECK(RatFunc(enumerate_weight(WeightScheme::B, n, k)) == b.entry(n, k));
            CHECK(RatFunc(enumerate_weight(WeightScheme::A, n, k)) == a.entry(n, k));
            CHECK(RatFunc(enumerate_weight(WeightScheme::D, n, k)) == d.entry(n, k));
            CHECK(RatFunc(enumerate_weight(WeightScheme::Lucas1, n, k)) == l.entry(n, k));
        }
}

TEST_CASE("ballot words match the ballot triangle") {
    Triangle tri = make_triangle(TriangleTag::Ballot);
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(RatFunc(count_ballot_words(n, k)) == tri.entry(n, k));
}

TEST_CASE("endpoint counts are consistent with the B scheme at t=1") {
    for (long n = 0; n <= 6; ++n)
        for (long k = 0; k <= n; ++k) {
            BigInt total = 0;
            for (long x = -n; x <= n; ++x) total += count_nsew_endpoint(n, x, k);
            CHECK(total == enumerate_weight(WeightScheme::B, n, k).coeff_sum());
        }
}

TEST_CASE("enumeration honors its budget") {
    CHECK_THROWS_AS(enumerate_weight(WeightScheme::B, 40, 0), BudgetExceeded);
    CHECK_THROWS_AS(count_ballot_words(40, 0), BudgetExceeded);
}

TEST_CASE("gamma expansion basics") {
    GammaVector g = gamma_expand(ip("1+3t+t^2"), 2);
    CHECK(g.gamma == std::vector<BigInt>({1, 1}));
    CHECK(g.nonnegative);
    CHECK(g.reconstruct() == ip("1+3t+t^2"));
    // (1+t)^4
    GammaVector pure = gamma_expand(ip("1+4t+6t^2+4t^3+t^4"), 4);
    CHECK(pure.gamma == std::vector<BigInt>({1}));  // trailing zeros are trimmed
    // a palindromic polynomial that is NOT gamma-nonnegative
    GammaVector neg = gamma_expand(ip("1+t^2"), 2);
    CHECK(neg.gamma == std::vector<BigInt>({1, -2}));
    CHECK_FALSE(neg.nonnegative);
    CHECK(neg.reconstruct() == ip("1+t^2"));
    CHECK_THROWS_AS(gamma_expand(ip("1+2t+3t^2"), 2), NotPalindromic);
}

TEST_CASE("closed gamma vectors for the B and D triangles") {
    Triangle b = make_triangle(TriangleTag::B);
    Triangle d = make_triangle(TriangleTag::D);
    for (long n = 0; n <= 9; ++n)
        for (long k = 0; k <= n; ++k) {
            GammaVector gb = gamma_closed_b(n, k);
            CHECK(gb.nonnegative);
            CHECK(gb.reconstruct() == b.entry(n, k).as_poly());
            CHECK(gb == gamma_expand(b.entry(n, k).as_poly(), n - k));
            GammaVector gd = gamma_closed_d(n, k);
            CHECK(gd.nonnegative);
            CHECK(gd.reconstruct() == d.entry(n, k).as_poly());
            CHECK(gd == gamma_expand(d.entry(n, k).as_poly(), n - k));
        }
}

TEST_CASE("ascent-flipping involution is a weighted bijection") {
    for (long n = 0; n <= 6; ++n) {
        std::map<Path, long> seen;
        IntPoly total;
        for (const Path& p : all_paths(n)) {
            if (!path_nonnegative(p)) continue;
            long k = path_height(p);
            IntPoly w = path_weight(WeightScheme::B, p);
            for (long i = 0; i <= k; ++i) {
                Path q = phi_involution(p, i);
                ++seen[q];
                total += w * IntPoly::monomial(i);
                // the involution is invertible
                auto [back, idx] = phi_inverse(q);
                CHECK(back == p);
                CHECK(idx == i);
            }
        }
        // every unrestricted path is hit exactly once
        CHECK(seen.size() == all_paths(n).size());
        for (const auto& [q, count] : seen) CHECK(count == 1);
        CHECK(total == IntPoly({2, 2}).pow(n));
    }
}

TEST_CASE("involution fixes non-negative paths at i=0") {
    Path p = {Step::N, Step::N, Step::E, Step::S};
    CHECK(phi_involution(p, 0) == p);
    auto [back, idx] = phi_inverse(p);
    CHECK(back == p);
    CHECK(idx == 0);
}
