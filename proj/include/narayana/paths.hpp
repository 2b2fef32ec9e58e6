#pragma once

// Brute-force enumeration of weighted NSEW paths and ballot words: the
// independent combinatorial oracle for the triangles.  Also the gamma
// expansion machinery and the ascent-flipping involution behind (1.30).

#include <utility>
#include <vector>

#include "narayana/intpoly.hpp"

namespace narayana {

enum class Step : unsigned char { N, S, E, W };

using Path = std::vector<Step>;

enum class WeightScheme { B, A, D, Lucas1 };

// Paths of n steps get too many for exhaustive enumeration quickly; the
// default ceiling keeps oracle runs at 4^12 paths.
inline constexpr long kDefaultEnumBudget = 12;

// height after the path; N = +1, S = -1, E/W = 0
long path_height(const Path& p);
// true iff no prefix height dips below zero
bool path_nonnegative(const Path& p);

// weight of one path under the scheme; t enters as IntPoly powers
IntPoly path_weight(WeightScheme scheme, const Path& p);
// whether the scheme admits the path at all (A: no W step at height 0)
bool path_admissible(WeightScheme scheme, const Path& p);

// total weight of all admissible non-negative n-step paths ending at height k
IntPoly enumerate_weight(WeightScheme scheme, long n, long k, long budget = kDefaultEnumBudget);

// exhaustive count of +-1 ballot words of length n with sum k
BigInt count_ballot_words(long n, long k, long budget = 20);

// number of non-negative NSEW paths from the origin to (x_end, k)
BigInt count_nsew_endpoint(long n, long x_end, long k, long budget = kDefaultEnumBudget);

// ---- gamma expansion ---------------------------------------------------

struct GammaVector {
    std::vector<BigInt> gamma;  // gamma_i multiplies t^i (1+t)^{d-2i}
    long degree_bound = 0;      // the d above
    bool nonnegative = true;

    IntPoly reconstruct() const;
    bool operator==(const GammaVector& o) const = default;
};

// unique expansion p = sum gamma_i t^i (1+t)^{d-2i}; p must be palindromic
// with center d/2.  A negative gamma_i is reported, not hidden.
GammaVector gamma_expand(const IntPoly& p, long d);

// closed-form gamma vectors for the B and D triangles
GammaVector gamma_closed_b(long n, long k);
GammaVector gamma_closed_d(long n, long k);

// ---- the ascent-flipping involution ------------------------------------

// flips the last ascents to heights 1..i into S steps
Path phi_involution(const Path& p, long i);
// recovers (p, i) from a path that crosses the x-axis (i = 0 for one that
// does not)
std::pair<Path, long> phi_inverse(const Path& q);

std::vector<Path> all_paths(long n);
std::vector<Path> nonnegative_paths_ending_at(long n, long k);

}  // namespace narayana
