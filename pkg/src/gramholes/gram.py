"""Gram matrices of the pairing, their submatrices and Catalan blocks."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .diagrams import CatalanState, Diagram, diagram_count, enumerate_diagrams, rotate
from .pairing import pair
from .polyring import Exponents, Polynomial, VarSet, varset

DEFAULT_CAP = 400


class ResourceCapError(RuntimeError):
    """A requested computation exceeds a configured size limit."""


@dataclass(frozen=True)
class GramMatrix:
    n: int
    k: int
    order: tuple[Diagram, ...]
    entries: tuple[tuple[Exponents, ...], ...] = field(repr=False)

    @property
    def vs(self) -> VarSet:
        return varset(self.k)

    @property
    def dim(self) -> int:
        return len(self.order)

    def entry(self, i: int, j: int) -> Polynomial:
        return Polynomial.monomial(self.vs, self.entries[i][j])

    def to_polys(self) -> list[list[Polynomial]]:
        vs = self.vs
        return [[Polynomial.monomial(vs, e) for e in row] for row in self.entries]

    def diagonal(self) -> list[Exponents]:
        return [self.entries[i][i] for i in range(self.dim)]

    def entry_strings(self) -> list[list[str]]:
        vs = self.vs
        cache: dict[Exponents, str] = {}
        out = []
        for row in self.entries:
            line = []
            for e in row:
                if e not in cache:
                    cache[e] = Polynomial.monomial(vs, e).to_string()
                line.append(cache[e])
            out.append(line)
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "variables": list(self.vs.names),
            "order": [b.to_json() for b in self.order],
            "entries": self.entry_strings(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> GramMatrix:
        from .polyring import parse

        n, k = int(data["n"]), int(data["k"])
        vs = varset(k)
        order = tuple(Diagram.from_json(b) for b in data["order"])
        rows = []
        for row in data["entries"]:
            exps = []
            for text in row:
                p = parse(vs, text)
                if not p.is_monomial():
                    raise ValueError(f"Gram entry is not a monomial: {text!r}")
                exps.append(p.terms()[0][0])
            rows.append(tuple(exps))
        if len(rows) != len(order) or any(len(r) != len(order) for r in rows):
            raise ValueError("entries are not a square matrix matching the order")
        return cls(n, k, order, tuple(rows))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["# n", self.n, "k", self.k])
        w.writerow(["# order"] + [json.dumps(b.to_json(), sort_keys=True) for b in self.order])
        for row in self.entry_strings():
            w.writerow(row)
        return buf.getvalue()


def _rows(args: tuple[Sequence[Diagram], Sequence[Diagram]]) -> list[tuple[Exponents, ...]]:
    rows, cols = args
    return [tuple(pair(a, b) for b in cols) for a in rows]


def submatrix(A: Sequence[Diagram], B: Sequence[Diagram], jobs: int = 1) -> list[list[Exponents]]:
    """Matrix ``<A, B>`` of pairing exponent vectors."""
    sizes = {(b.n, b.k) for b in list(A) + list(B)}
    if len(sizes) > 1:
        raise ValueError(f"diagrams of mixed sizes: {sorted(sizes)}")
    if jobs <= 1 or len(A) < 2 * jobs:
        return [list(r) for r in _rows((A, B))]
    chunk = -(-len(A) // jobs)
    parts = [(list(A[i:i + chunk]), list(B)) for i in range(0, len(A), chunk)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        out: list[list[Exponents]] = []
        for rows in pool.map(_rows, parts):
            out.extend(list(r) for r in rows)
    return out


def check_cap(dim: int, cap: int | None, what: str = "Gram matrix") -> None:
    if cap is not None and dim > cap:
        raise ResourceCapError(f"{what} dimension {dim} exceeds cap {cap}")


def gram_matrix(n: int, k: int, cap: int | None = DEFAULT_CAP, jobs: int = 1) -> GramMatrix:
    """The Gram matrix of B_{n,k} in canonical diagram order."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    check_cap(diagram_count(n, k), cap)
    order = tuple(enumerate_diagrams(n, k))
    rows = submatrix(order, order, jobs=jobs)
    return GramMatrix(n, k, order, tuple(tuple(r) for r in rows))


def catalan_blocks(n: int, k: int = 2) -> list[tuple[CatalanState, list[Diagram], list[list[Exponents]]]]:
    """Diagonal blocks of the Gram matrix grouped by underlying Catalan state."""
    groups: dict[CatalanState, list[Diagram]] = {}
    for b in enumerate_diagrams(n, k):
        groups.setdefault(b.catalan, []).append(b)
    return [(c, ds, submatrix(ds, ds)) for c, ds in groups.items()]


def rotation_orbits(order: Sequence[Diagram]) -> list[list[int]]:
    """Orbits of the one-step rotation as index lists ``[x, r x, r^2 x, ...]``.

    Orbits are listed by their smallest index, each starting there.
    """
    index = {b: i for i, b in enumerate(order)}
    seen = [False] * len(order)
    orbits = []
    for i, b in enumerate(order):
        if seen[i]:
            continue
        orbit = []
        cur = b
        while True:
            j = index[cur]
            if seen[j]:
                break
            seen[j] = True
            orbit.append(j)
            cur = rotate(cur, 1)
        orbits.append(orbit)
    return orbits
