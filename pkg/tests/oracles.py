"""Reference computations that share no code with the determinant engines."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Sequence


def fraction_det(M: Sequence[Sequence[int]]) -> int:
    """Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in M]
    m = len(a)
    out = Fraction(1)
    for t in range(m):
        piv = next((i for i in range(t, m) if a[i][t] != 0), None)
        if piv is None:
            return 0
        if piv != t:
            a[t], a[piv] = a[piv], a[t]
            out = -out
        out *= a[t][t]
        inv = 1 / a[t][t]
        for i in range(t + 1, m):
            f = a[i][t] * inv
            if f:
                row_t, row_i = a[t], a[i]
                for j in range(t + 1, m):
                    row_i[j] -= f * row_t[j]
    assert out.denominator == 1
    return int(out)


def monomial_value(exps: Sequence[int], point: Sequence[int]) -> int:
    v = 1
    for e, x in zip(exps, point):
        if e:
            v *= x**e
    return v


def evaluate_exponent_matrix(entries, point: Sequence[int]) -> list[list[int]]:
    cache: dict = {}
    out = []
    for row in entries:
        line = []
        for e in row:
            if e not in cache:
                cache[e] = monomial_value(e, point)
            line.append(cache[e])
        out.append(line)
    return out


def random_points(nvars: int, count: int = 20, seed: int = 0, lo: int = -5, hi: int = 5) -> list[list[int]]:
    rng = random.Random(seed)
    return [[rng.randint(lo, hi) for _ in range(nvars)] for _ in range(count)]


def brute_noncrossing(n: int) -> list[tuple[int, ...]]:
    """All non-crossing perfect matchings of 2n points, by filtering all matchings."""

    def matchings(points):
        if not points:
            yield {}
            return
        a = points[0]
        for b in points[1:]:
            rest = [p for p in points if p not in (a, b)]
            for m in matchings(rest):
                yield {a: b, b: a, **m}

    def crosses(p, q):
        (a, b), (c, d) = sorted(p), sorted(q)
        return a < c < b < d or c < a < d < b

    out = []
    for m in matchings(list(range(2 * n))):
        chords = {tuple(sorted((a, b))) for a, b in m.items()}
        if not any(crosses(p, q) for p, q in combinations(chords, 2)):
            out.append(tuple(m[i] for i in range(2 * n)))
    return sorted(out)
