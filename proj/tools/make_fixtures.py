#!/usr/bin/env python3
"""Regenerate the vendored integer-sequence fixtures in data/oeis/.

Every sequence is produced from a closed form that is independent of the C++
implementation: binomial sums, the trinomial coefficient extraction for the
Delannoy-type triangle, parity-masked binomials for the Lucas triangle, the
super-Catalan recurrence, and the base-3 digit criterion.
"""

import os
from fractions import Fraction
from math import comb


def b_entry(n, k, t):
    # (k+1)/(n+1) sum_j C(n+1, k+1+j) C(n+1, j) t^j
    acc = Fraction(0)
    for j in range(n + 1):
        acc += comb(n + 1, k + 1 + j) * comb(n + 1, j) * Fraction(t) ** j
    acc *= Fraction(k + 1, n + 1)
    assert acc.denominator == 1
    return acc.numerator


def a_entry(n, k, t):
    if n == 0:
        return 1 if k == 0 else 0
    acc = 0
    for j in range(n - k + 1):
        acc += (comb(n - 1, j) * comb(n + 1, k + j + 1)
                - comb(n, j) * comb(n, k + j + 1)) * t ** j
    return acc


def d_entry(n, k, t):
    # [x^{n-k}] ((1+x)(1+tx))^n
    acc = 0
    for j in range(n - k + 1):
        acc += comb(n, j) * comb(n, n - k - j) * t ** (n - k - j)
    return acc


def triangle_terms(entry, rows):
    return [entry(n, k) for n in range(rows) for k in range(n + 1)]


def schroeder_terms(count):
    # little Schroeder numbers: (n+1) a(n) = 3(2n-1) a(n-1) - (n-2) a(n-2)
    a = [1, 1]
    while len(a) < count:
        n = len(a)
        num = 3 * (2 * n - 1) * a[-1] - (n - 2) * a[-2]
        assert num % (n + 1) == 0
        a.append(num // (n + 1))
    return a[:count]


def base3_has_one(n):
    while n:
        if n % 3 == 1:
            return True
        n //= 3
    return False


FIXTURES = {
    # B triangle at t=1: T(n,k) = (2k+2)/(n+k+2) C(2n+1, n-k)
    "A039598": (0, lambda: triangle_terms(
        lambda n, k: comb(2 * n + 1, n - k) * (2 * k + 2) // (n + k + 2), 12)),
    # B triangle at t=2
    "A110440": (0, lambda: triangle_terms(lambda n, k: b_entry(n, k, 2), 12)),
    # A triangle at t=1: T(n,k) = (2k+1)/(n+k+1) C(2n, n-k)
    "A039599": (0, lambda: triangle_terms(
        lambda n, k: comb(2 * n, n - k) * (2 * k + 1) // (n + k + 1), 12)),
    # A triangle at t=2
    "A172094": (0, lambda: triangle_terms(lambda n, k: a_entry(n, k, 2), 12)),
    # D triangle at t=1: T(n,k) = C(2n, n-k)
    "A094527": (0, lambda: triangle_terms(lambda n, k: comb(2 * n, n - k), 12)),
    # D triangle at t=2
    "A118384": (0, lambda: triangle_terms(lambda n, k: d_entry(n, k, 2), 12)),
    # Lucas triangle: T(n,k) = C(n, (n-k)/2) when n-k is even, else 0
    "A108044": (0, lambda: triangle_terms(
        lambda n, k: comb(n, (n - k) // 2) if (n - k) % 2 == 0 else 0, 14)),
    # little Schroeder numbers
    "A001003": (0, lambda: schroeder_terms(20)),
    # numbers whose base-3 representation contains at least one 1
    "A081606": (1, lambda: [n for n in range(1, 200) if base3_has_one(n)][:60]),
}


def main():
    out_dir = os.path.join(os.path.dirname(__file__), "..", "data", "oeis")
    os.makedirs(out_dir, exist_ok=True)
    for seq_id, (offset, gen) in sorted(FIXTURES.items()):
        terms = gen()
        path = os.path.join(out_dir, seq_id + ".txt")
        with open(path, "w") as f:
            f.write(f"# {seq_id} offset={offset}\n")
            for i, term in enumerate(terms):
                f.write(f"{offset + i} {term}\n")
        print(f"wrote {path} ({len(terms)} terms)")


if __name__ == "__main__":
    main()
