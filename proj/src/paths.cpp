#include "narayana/paths.hpp"

#include <array>

namespace narayana {

namespace {

int delta(Step s) { return s == Step::N ? 1 : (s == Step::S ? -1 : 0); }

constexpr std::array<Step, 4> kSteps = {Step::N, Step::S, Step::E, Step::W};

}  // namespace

long path_height(const Path& p) {
    long h = 0;
    for (Step s : p) h += delta(s);
    return h;
}

bool path_nonnegative(const Path& p) {
    long h = 0;
    for (Step s : p) {
        h += delta(s);
        if (h < 0) return false;
    }
    return true;
}

bool path_admissible(WeightScheme scheme, const Path& p) {
    if (scheme != WeightScheme::A) return true;
    long h = 0;
    for (Step s : p) {
        if (s == Step::W && h == 0) return false;
        h += delta(s);
    }
    return true;
}

IntPoly path_weight(WeightScheme scheme, const Path& p) {
    BigInt coeff = 1;
    long texp = 0;
    long h = 0;
    for (Step s : p) {
        h += delta(s);
        switch (scheme) {
            case WeightScheme::B:
            case WeightScheme::A:
                if (s == Step::S || s == Step::W) ++texp;
                break;
            case WeightScheme::D:
                if (s == Step::W) ++texp;
                if (s == Step::S) {
                    ++texp;
                    if (h == 0) coeff *= 2;
                }
                break;
            case WeightScheme::Lucas1:
                // level steps carry weight zero in this scheme
                if (s == Step::E || s == Step::W) return IntPoly::zero();
                if (s == Step::S && h == 0) coeff *= 2;
                break;
        }
    }
    return IntPoly::monomial(texp, coeff);
}

IntPoly enumerate_weight(WeightScheme scheme, long n, long k, long budget) {
    if (n < 0 || k < 0) throw IndexOutOfTriangle("enumerate_weight: need n, k >= 0");
    if (n > budget) throw BudgetExceeded("path enumeration budget exceeded");
    std::vector<BigInt> acc;  // coefficient of t^e
    auto add = [&](long e, const BigInt& c) {
        if (static_cast<long>(acc.size()) <= e) acc.resize(static_cast<size_t>(e) + 1);
        acc[static_cast<size_t>(e)] += c;
    };
    // DFS with incremental height; weights are coeff * t^texp
    auto dfs = [&](auto&& self, long pos, long h, BigInt coeff, long texp) -> void {
        long remaining = n - pos;
        if (h - remaining > k || h + remaining < k) return;
        if (pos == n) {
            if (h == k) add(texp, coeff);
            return;
        }
        for (Step s : kSteps) {
            long nh = h + delta(s);
            if (nh < 0) continue;
            if (scheme == WeightScheme::A && s == Step::W && h == 0) continue;
            if (scheme == WeightScheme::Lucas1 && (s == Step::E || s == Step::W)) continue;
            BigInt nc = coeff;
            long ne = texp;
            switch (scheme) {
                case WeightScheme::B:
                case WeightScheme::A:
                    if (s == Step::S || s == Step::W) ++ne;
                    break;
                case WeightScheme::D:
                    if (s == Step::W) ++ne;
                    if (s == Step::S) {
                        ++ne;
                        if (nh == 0) nc *= 2;
                    }
                    break;
                case WeightScheme::Lucas1:
                    if (s == Step::S && nh == 0) nc *= 2;
                    break;
            }
            self(self, pos + 1, nh, std::move(nc), ne);
        }
    };
    dfs(dfs, 0, 0, BigInt(1), 0);
    return IntPoly(std::move(acc));
}

BigInt count_ballot_words(long n, long k, long budget) {
    if (n < 0 || k < 0) throw IndexOutOfTriangle("count_ballot_words: need n, k >= 0");
    if (n > budget) throw BudgetExceeded("ballot word enumeration budget exceeded");
    BigInt count = 0;
    auto dfs = [&](auto&& self, long pos, long sum) -> void {
        long remaining = n - pos;
        if (sum - remaining > k || sum + remaining < k) return;
        if (pos == n) {
            if (sum == k) ++count;
            return;
        }
        self(self, pos + 1, sum + 1);
        if (sum > 0) self(self, pos + 1, sum - 1);
    };
    dfs(dfs, 0, 0);
    return count;
}

BigInt count_nsew_endpoint(long n, long x_end, long k, long budget) {
    if (n > budget) throw BudgetExceeded("path enumeration budget exceeded");
    BigInt count = 0;
    auto dfs = [&](auto&& self, long pos, long x, long h) -> void {
        long remaining = n - pos;
        if (h - remaining > k || h + remaining < k) return;
        if (x - remaining > x_end || x + remaining < x_end) return;
        if (pos == n) {
            if (h == k && x == x_end) ++count;
            return;
        }
        self(self, pos + 1, x, h + 1);
        if (h > 0) self(self, pos + 1, x, h - 1);
        self(self, pos + 1, x + 1, h);
        self(self, pos + 1, x - 1, h);
    };
    dfs(dfs, 0, 0, 0);
    return count;
}

IntPoly GammaVector::reconstruct() const {
    IntPoly acc;
    IntPoly one_plus_t({1, 1});
    for (size_t i = 0; i < gamma.size(); ++i)
        acc += IntPoly::monomial(static_cast<long>(i), gamma[i]) *
               one_plus_t.pow(degree_bound - 2 * static_cast<long>(i));
    return acc;
}

GammaVector gamma_expand(const IntPoly& p, long d) {
    if (p.degree() > d) throw NotPalindromic("polynomial degree exceeds the gamma degree bound");
    for (long i = 0; 2 * i <= d; ++i)
        if (p[i] != p[d - i]) throw NotPalindromic("polynomial is not palindromic about d/2");
    GammaVector gv;
    gv.degree_bound = d;
    IntPoly residual = p;
    IntPoly one_plus_t({1, 1});
    for (long i = 0; 2 * i <= d; ++i) {
        BigInt g = residual[i];
        gv.gamma.push_back(g);
        if (g < 0) gv.nonnegative = false;
        if (g != 0) residual -= IntPoly::monomial(i, g) * one_plus_t.pow(d - 2 * i);
    }
    while (!gv.gamma.empty() && gv.gamma.back() == 0) gv.gamma.pop_back();
    if (!residual.is_zero()) throw NotPalindromic("gamma elimination left a nonzero residual");
    return gv;
}

GammaVector gamma_closed_b(long n, long k) {
    if (k < 0 || k > n) throw IndexOutOfTriangle("gamma of B_{n,k}: need 0 <= k <= n");
    GammaVector gv;
    gv.degree_bound = n - k;
    for (long i = 0; 2 * i <= n - k; ++i) {
        Rational w = Rational(binomial(k + 2 * i, i) * binomial(n, 2 * i + k)) *
                     Rational(k + 1, i + k + 1);
        gv.gamma.push_back(to_integer(w));
    }
    while (!gv.gamma.empty() && gv.gamma.back() == 0) gv.gamma.pop_back();
    return gv;
}

GammaVector gamma_closed_d(long n, long k) {
    if (k < 0 || k > n) throw IndexOutOfTriangle("gamma of D_{n,k}: need 0 <= k <= n");
    GammaVector gv;
    gv.degree_bound = n - k;
    for (long j = 0; 2 * j <= n - k; ++j)
        gv.gamma.push_back(binomial(2 * j + k, j) * binomial(n, 2 * j + k));
    while (!gv.gamma.empty() && gv.gamma.back() == 0) gv.gamma.pop_back();
    return gv;
}

Path phi_involution(const Path& p, long i) {
    if (i == 0) return p;
    Path q = p;
    // last ascent to height h: last N step arriving at height h in p
    for (long h = 1; h <= i; ++h) {
        long idx = -1;
        long cur = 0;
        for (size_t j = 0; j < p.size(); ++j) {
            cur += delta(p[j]);
            if (p[j] == Step::N && cur == h) idx = static_cast<long>(j);
        }
        if (idx < 0) throw AscentMissing("path has no ascent to the requested height");
        q[static_cast<size_t>(idx)] = Step::S;
    }
    return q;
}

std::pair<Path, long> phi_inverse(const Path& q) {
    // premier descents are identified on q itself: the first S step from
    // height m to m-1, for m = 0, -1, ...
    std::vector<size_t> flips;
    for (long m = 0;; --m) {
        long idx = -1;
        long cur = 0;
        for (size_t j = 0; j < q.size(); ++j) {
            if (q[j] == Step::S && cur == m) {
                idx = static_cast<long>(j);
                break;
            }
            cur += delta(q[j]);
        }
        if (idx < 0) break;
        flips.push_back(static_cast<size_t>(idx));
    }
    Path p = q;
    for (size_t j : flips) p[j] = Step::N;
    return {std::move(p), static_cast<long>(flips.size())};
}

std::vector<Path> all_paths(long n) {
    std::vector<Path> out;
    Path cur;
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<long>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (Step s : kSteps) {
            cur.push_back(s);
            self(self);
            cur.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

std::vector<Path> nonnegative_paths_ending_at(long n, long k) {
    std::vector<Path> out;
    Path cur;
    auto dfs = [&](auto&& self, long h) -> void {
        long remaining = n - static_cast<long>(cur.size());
        if (h - remaining > k || h + remaining < k) return;
        if (remaining == 0) {
            if (h == k) out.push_back(cur);
            return;
        }
        for (Step s : kSteps) {
            long nh = h + delta(s);
            if (nh < 0) continue;
            cur.push_back(s);
            self(self, nh);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

}  // namespace narayana
