"""Catalan states and hole-decorated chord diagrams.

A diagram with ``n`` chords lives in a disk with ``2n`` marked boundary points
``a_0, ..., a_{2n-1}`` numbered counter-clockwise.  Its chords form a
non-crossing perfect matching, stored as an involution ``matching`` with
``matching[p]`` the partner of ``a_p``.

The chords cut the disk into ``n + 1`` regions.  Regions are named by the
innermost chord bounding them from outside (the chord's smaller endpoint) or
by ``OUTER`` for the region touching the reference boundary arc that runs
from ``a_{2n-1}`` to ``a_0``.  Boundary arc ``t`` is the arc from ``a_t`` to
``a_{t+1}`` (indices mod ``2n``), so arc ``2n - 1`` is the reference arc.

Holes are abstract labels ``1..k`` that sit in regions; two diagrams are
equal exactly when they share the matching and every hole's region.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

OUTER = -1

# Marker returned by contract_p when the glued chord does not close up.
NONE = None


def is_noncrossing_matching(seq: Sequence[int]) -> bool:
    """Return True if ``seq`` is a fixed-point-free, non-crossing involution."""
    m = len(seq)
    if m % 2:
        return False
    if not all(0 <= seq[i] < m and seq[i] != i and seq[seq[i]] == i for i in range(m)):
        return False
    stack: list[int] = []
    for p in range(m):
        if p < seq[p]:
            stack.append(p)
        elif not stack or stack.pop() != seq[p]:
            return False
    return True


@dataclass(frozen=True, order=True)
class CatalanState:
    matching: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "matching", tuple(self.matching))
        if not is_noncrossing_matching(self.matching):
            raise ValueError(f"not a non-crossing perfect matching: {self.matching}")

    @property
    def n(self) -> int:
        return len(self.matching) // 2

    @cached_property
    def chords(self) -> tuple[tuple[int, int], ...]:
        """Chords as ``(p, q)`` with ``p < q``, sorted by ``p``."""
        return tuple((p, q) for p, q in enumerate(self.matching) if p < q)

    @cached_property
    def arc_regions(self) -> tuple[int, ...]:
        """Region touched by each boundary arc ``0..2n-1``."""
        stack: list[int] = []
        out = []
        for p, q in enumerate(self.matching):
            if p < q:
                stack.append(p)
            else:
                stack.pop()
            out.append(stack[-1] if stack else OUTER)
        return tuple(out)

    @cached_property
    def parent(self) -> dict[int, int]:
        """Chord id -> the chord immediately enclosing it (or OUTER)."""
        stack: list[int] = []
        par = {}
        for p, q in enumerate(self.matching):
            if p < q:
                par[p] = stack[-1] if stack else OUTER
                stack.append(p)
            else:
                stack.pop()
        return par

    @cached_property
    def ancestry(self) -> dict[int, frozenset[int]]:
        """Region -> chords separating it from the reference arc."""
        anc: dict[int, frozenset[int]] = {OUTER: frozenset()}
        for p, _ in self.chords:  # parents precede children in this order
            anc[p] = anc[self.parent[p]] | {p}
        return anc

    def region_ids(self) -> list[int]:
        return [OUTER] + [p for p, _ in self.chords]

    def arcs_of(self, region: int) -> list[int]:
        return [t for t, r in enumerate(self.arc_regions) if r == region]


@dataclass(frozen=True, order=True)
class Diagram:
    catalan: CatalanState
    holes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "holes", tuple(self.holes))
        valid = set(self.catalan.region_ids())
        for r in self.holes:
            if r not in valid:
                raise ValueError(f"region {r} does not exist in {self.catalan.matching}")

    @property
    def n(self) -> int:
        return self.catalan.n

    @property
    def k(self) -> int:
        return len(self.holes)

    @property
    def matching(self) -> tuple[int, ...]:
        return self.catalan.matching

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "matching": list(self.matching),
            "holes": ["outer" if r == OUTER else r for r in self.holes],
        }

    @classmethod
    def from_json(cls, data: dict) -> Diagram:
        holes = tuple(OUTER if h == "outer" else int(h) for h in data["holes"])
        d = cls(CatalanState(tuple(data["matching"])), holes)
        if d.n != data.get("n", d.n) or d.k != data.get("k", d.k):
            raise ValueError("n/k fields disagree with matching/holes")
        return d


def _matchings(points: list[int]) -> Iterator[dict[int, int]]:
    if not points:
        yield {}
        return
    first = points[0]
    for idx in range(1, len(points), 2):
        inner, outer = points[1:idx], points[idx + 1:]
        for a in _matchings(inner):
            for b in _matchings(outer):
                m = {first: points[idx], points[idx]: first}
                m.update(a)
                m.update(b)
                yield m


def enumerate_catalan(n: int) -> list[CatalanState]:
    """All non-crossing matchings of ``2n`` points, sorted by matching array."""
    if n < 0:
        raise ValueError("n must be non-negative")
    seqs = sorted(tuple(m[p] for p in range(2 * n)) for m in _matchings(list(range(2 * n))))
    return [CatalanState(s) for s in seqs]


def regions(c: CatalanState) -> tuple[list[int], dict[int, frozenset[int]]]:
    """Region ids (OUTER first) and the ancestry map of ``c``."""
    return c.region_ids(), dict(c.ancestry)


def enumerate_diagrams(n: int, k: int) -> list[Diagram]:
    """Every element of B_{n,k} in canonical order."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    out = []
    for c in enumerate_catalan(n):
        for placement in itertools.product(c.region_ids(), repeat=k):
            out.append(Diagram(c, placement))
    return out


def diagram_count(n: int, k: int) -> int:
    """Closed form ``(n+1)^(k-1) * C(2n, n)`` (the Catalan number when k = 0)."""
    from math import comb

    if k == 0:
        return comb(2 * n, n) // (n + 1)
    return (n + 1) ** (k - 1) * comb(2 * n, n)


def gamma(b: Diagram) -> CatalanState:
    """Underlying Catalan state: fill in the holes."""
    return b.catalan


def _move_holes(old: CatalanState, new: CatalanState, holes: Sequence[int], arc_map) -> tuple[int, ...]:
    """Carry hole regions across a relabeling, using boundary arcs as witnesses.

    ``arc_map(region, arcs)`` returns a new-diagram arc touching the image of
    an old region given that region's old arcs.
    """
    cache: dict[int, int] = {}
    out = []
    for r in holes:
        if r not in cache:
            cache[r] = new.arc_regions[arc_map(r, old.arcs_of(r))]
        out.append(cache[r])
    return tuple(out)


def rotate(b: Diagram, j: int) -> Diagram:
    """Relabel point ``a_p`` as ``a_{p+j}``; holes keep their geometric regions."""
    m = 2 * b.n
    if m == 0:
        return b
    j %= m
    seq = [0] * m
    for p, q in enumerate(b.matching):
        seq[(p + j) % m] = (q + j) % m
    new = CatalanState(tuple(seq))
    holes = _move_holes(b.catalan, new, b.holes, lambda r, arcs: (arcs[0] + j) % m)
    return Diagram(new, holes)


def embed_i(b: Diagram, pos: int) -> Diagram:
    """Adjoin a boundary-parallel chord joining ``a_{pos-1}`` and ``a_pos``.

    The old point ``a_q`` becomes ``a_{pos+1+((q-pos) mod 2(n-1))}``, so the
    new chord sits between old ``a_{pos-1}`` and old ``a_pos`` and the rest of
    the diagram keeps its place.  The new chord encloses no hole.
    """
    old_m = 2 * b.n
    m = old_m + 2
    s = pos % m

    def f(q: int) -> int:
        return (s + 1 + (q - s) % old_m) % m

    seq = [0] * m
    seq[(s - 1) % m], seq[s] = s, (s - 1) % m
    for q, r in enumerate(b.matching):
        seq[f(q)] = f(r)
    new = CatalanState(tuple(seq))
    if old_m == 0:
        holes = tuple(new.arc_regions[(s - 2) % m] for _ in b.holes)
    else:
        holes = _move_holes(b.catalan, new, b.holes, lambda r, arcs: f(arcs[0]))
    return Diagram(new, holes)


def contract_p(b: Diagram, pos: int) -> tuple[Diagram, frozenset[int] | None]:
    """Glue an outside chord across ``a_{pos-1}, a_pos`` and push it in.

    Returns the ``(n-1)``-chord diagram together with ``None`` when the two
    points were joined to different chords.  When ``b`` already joins them, a
    closed curve appears; the marker is then the frozenset of hole labels
    (1-based) that curve encloses.  Points after the glued pair are relabeled
    so that ``contract_p(embed_i(c, pos + 1), pos) == (c, None)`` for
    ``0 <= pos <= 2n - 2``.
    """
    n = b.n
    if n == 0:
        raise ValueError("cannot contract a diagram with no chords")
    m = 2 * n
    s = pos % m
    lo = (s - 1) % m
    mt = b.matching
    closed = mt[s] == lo

    if n == 1:
        empty = CatalanState(())
        enclosed = frozenset(h + 1 for h, r in enumerate(b.holes) if r == b.catalan.arc_regions[lo])
        return Diagram(empty, (OUTER,) * b.k), enclosed

    new_m = m - 2

    def g(p: int) -> int:
        return (s + (p - s - 1) % m) % new_m

    seq = [0] * new_m
    if closed:
        for p, q in enumerate(mt):
            if p not in (lo, s):
                seq[g(p)] = g(q)
    else:
        u, v = mt[lo], mt[s]
        for p, q in enumerate(mt):
            if p in (lo, s) or p in (u, v):
                continue
            seq[g(p)] = g(q)
        seq[g(u)], seq[g(v)] = g(v), g(u)
    new = CatalanState(tuple(seq))
    merged = g((s - 2) % m)

    def arc_map(region: int, arcs: list[int]) -> int:
        for t in arcs:
            if t != lo:
                return merged if t in ((s - 2) % m, s) else g(t)
        return merged

    holes = _move_holes(b.catalan, new, b.holes, arc_map)
    marker = None
    if closed:
        near = b.catalan.arc_regions[lo]
        marker = frozenset(h + 1 for h, r in enumerate(b.holes) if r == near)
    return Diagram(new, holes), marker
