"""The bilinear pairing on hole-decorated diagrams.

Gluing ``b_i`` to the inversion of ``b_j`` along the outer circle yields
closed curves on a sphere carrying the ``2k`` holes: ``+h`` for hole ``h`` of
``b_i`` and ``-h`` for the inverted hole ``h`` of ``b_j``.  Each curve splits
these labels in two, and the side opposite a fixed reference point is found
by parity: a hole of ``b_i`` lies across a curve from the reference arc iff
an odd number of the curve's ``b_i``-chords separate the hole from that arc
(same for ``b_j`` on the other hemisphere).  No geometry is ever built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .diagrams import CatalanState, Diagram
from .polyring import Exponents, Polynomial, canonical_subset, curve_types, varset


@dataclass(frozen=True)
class CurveType:
    subset: frozenset[int]
    k: int

    @property
    def name(self) -> str:
        vs = varset(self.k)
        return vs.names[vs.type_index[self.subset]]

    @property
    def index(self) -> int:
        return varset(self.k).type_index[self.subset]

    def __str__(self) -> str:
        return self.name


def classify_curve(bits, k: int) -> CurveType:
    """Curve type of a closed curve with the labels ``bits`` on one side."""
    bits = frozenset(bits)
    allowed = {s * h for h in range(1, k + 1) for s in (1, -1)}
    if not bits <= allowed:
        raise ValueError(f"labels {sorted(bits - allowed)} out of range for k={k}")
    return CurveType(canonical_subset(bits, k), k)


def _bit(label: int) -> int:
    return 1 << (2 * (abs(label) - 1) + (label < 0))


@cache
def _mask_table(k: int) -> tuple[int, ...]:
    """Bitmask of a label subset -> variable index."""
    index = {s: i for i, s in enumerate(curve_types(k))}
    labels = [s * h for h in range(1, k + 1) for s in (1, -1)]
    table = []
    for mask in range(1 << (2 * k)):
        sub = frozenset(lab for lab in labels if mask & _bit(lab))
        table.append(index[canonical_subset(sub, k)])
    return tuple(table)


def union_cycles(ci: CatalanState, cj: CatalanState) -> list[tuple[int, ...]]:
    """Closed curves of the glued pair as point sequences.

    Each cycle starts at its smallest point and first follows a chord of
    ``ci``; chords alternate ``ci``, ``cj``, ``ci``, ...
    """
    if ci.n != cj.n:
        raise ValueError(f"size mismatch: {ci.n} vs {cj.n} chords")
    a, b = ci.matching, cj.matching
    seen = [False] * len(a)
    cycles = []
    for start in range(len(a)):
        if seen[start]:
            continue
        pts = []
        p = start
        while True:
            q = a[p]
            seen[p] = seen[q] = True
            pts.extend((p, q))
            p = b[q]
            if p == start:
                break
        cycles.append(tuple(pts))
    return cycles


def _hole_masks(b: Diagram, negate: bool) -> dict[int, int]:
    """Chord id -> bitmask of the holes that chord separates from the reference arc."""
    anc = b.catalan.ancestry
    out: dict[int, int] = {}
    for h, r in enumerate(b.holes, start=1):
        bit = _bit(-h if negate else h)
        for c in anc[r]:
            out[c] = out.get(c, 0) | bit
    return out


def cycle_masks(bi: Diagram, bj: Diagram) -> list[int]:
    """Bitmask (labels on the far side from the reference) for each cycle."""
    mi = _hole_masks(bi, False)
    mj = _hole_masks(bj, True)
    masks = []
    for pts in union_cycles(bi.catalan, bj.catalan):
        mask = 0
        for t in range(0, len(pts), 2):
            mask ^= mi.get(min(pts[t], pts[t + 1]), 0)
            q = pts[(t + 2) % len(pts)]
            mask ^= mj.get(min(pts[t + 1], q), 0)
        masks.append(mask)
    return masks


def pair(bi: Diagram, bj: Diagram) -> Exponents:
    """Exponent vector of ``<b_i, b_j>``: one variable per closed curve."""
    if bi.n != bj.n or bi.k != bj.k:
        raise ValueError("diagrams must share n and k")
    k = bi.k
    table = _mask_table(k)
    exps = [0] * len(curve_types(k))
    for mask in cycle_masks(bi, bj):
        exps[table[mask]] += 1
    return tuple(exps)


def pair_curves(bi: Diagram, bj: Diagram) -> list[CurveType]:
    """The curve type of every closed curve, in cycle order."""
    k = bi.k
    types = curve_types(k)
    table = _mask_table(k)
    return [CurveType(types[table[m]], k) for m in cycle_masks(bi, bj)]


def pair_poly(bi: Diagram, bj: Diagram) -> Polynomial:
    return Polynomial.monomial(varset(bi.k), pair(bi, bj))


def marker_type(marker: frozenset[int] | None, k: int) -> CurveType | None:
    """Curve type for a ``contract_p`` marker (holes enclosed by the closed curve)."""
    if marker is None:
        return None
    return classify_curve(marker, k)
