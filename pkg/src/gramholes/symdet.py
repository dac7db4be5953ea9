"""Exact symbolic determinants and structured eliminations.

Two general engines are provided: fraction-free Bareiss elimination and
expansion by minors memoized on column subsets.  Gram matrices are also
invariant under simultaneous rotation of both diagrams, so they commute with
the permutation induced by a one-step rotation.  ``rotation_blocks`` uses
this to split a Gram determinant into one integer block per divisor ``o`` of
``2n``: the character eigenspaces of order ``o`` form one Galois orbit, and
the regular representation of ``Z[w]/Phi_o(w)`` turns that orbit's block
into an integer polynomial matrix whose determinant is the product of the
orbit's eigenspace determinants.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from flint.utils.flint_exceptions import DomainError

from .gram import GramMatrix, ResourceCapError, check_cap, gram_matrix, rotation_orbits
from .polyring import Exponents, Polynomial, Scalar, VarSet, varset

Matrix = Sequence[Sequence[Polynomial]]

DEFAULT_DET_CAP = 100
MINORS_TERM_BUDGET = 30_000_000


class DeterminantError(ArithmeticError):
    """An elimination step that must divide exactly did not."""


class MemoryGuardError(ResourceCapError):
    """The minor-expansion memo table would exceed its term budget."""


def _square(M: Matrix) -> int:
    m = len(M)
    if any(len(row) != m for row in M):
        raise ValueError("matrix is not square")
    return m


def _common_vs(M: Matrix, vs: VarSet | None) -> VarSet:
    for row in M:
        for p in row:
            if vs is None:
                vs = p.vs
            elif p.vs is not vs:
                raise ValueError("matrix entries live in different rings")
    if vs is None:
        raise ValueError("empty matrix needs an explicit VarSet")
    return vs


def det_bareiss(M: Matrix, vs: VarSet | None = None) -> Polynomial:
    """Fraction-free Bareiss elimination.

    The pivot for step ``t`` is the first nonzero entry of column ``t`` at or
    below the diagonal; a row swap flips the sign.  An all-zero column gives 0.
    """
    m = _square(M)
    vs = _common_vs(M, vs)
    if m == 0:
        return Polynomial.one(vs)
    a = [[p.raw for p in row] for row in M]
    sign = 1
    prev = None
    for t in range(m - 1):
        if a[t][t] == 0:
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    a[t], a[i] = a[i], a[t]
                    sign = -sign
                    break
            else:
                return Polynomial.zero(vs)
        piv = a[t][t]
        row_t = a[t]
        for i in range(t + 1, m):
            row_i = a[i]
            lead = row_i[t]
            for j in range(t + 1, m):
                num = row_i[j] * piv
                if lead != 0 and row_t[j] != 0:
                    num -= lead * row_t[j]
                if prev is not None and num != 0:
                    try:
                        num = num / prev
                    except DomainError as exc:
                        raise DeterminantError(f"inexact Bareiss step at pivot {t}") from exc
                row_i[j] = num
            row_i[t] = vs.ctx.from_dict({})
        prev = piv
    out = a[m - 1][m - 1]
    return Polynomial(vs, out if sign > 0 else -out)


def det_minors(M: Matrix, vs: VarSet | None = None, term_budget: int = MINORS_TERM_BUDGET) -> Polynomial:
    """Laplace expansion along rows, memoizing minors by their column subset.

    Level ``r`` holds every nonzero minor on rows ``0..r-1``; zero entries and
    zero minors are skipped, which makes sparse monomial matrices cheap.
    """
    m = _square(M)
    vs = _common_vs(M, vs)
    if m == 0:
        return Polynomial.one(vs)
    if m > 30:
        raise MemoryGuardError(f"minor expansion refuses dimension {m} > 30")
    cols = [[(j, p.raw) for j, p in enumerate(row) if p] for row in M]
    level: dict[int, object] = {0: vs.ctx.from_dict({(0,) * len(vs): 1})}
    for r in range(m):
        nxt: dict[int, object] = {}
        stored = 0
        for mask, minor in level.items():
            for j, entry in cols[r]:
                bit = 1 << j
                if mask & bit:
                    continue
                term = entry * minor
                if bin(mask >> (j + 1)).count("1") & 1:
                    term = -term
                key = mask | bit
                old = nxt.get(key)
                if old is None:
                    nxt[key] = term
                    stored += len(term)
                else:
                    stored -= len(old)
                    new = old + term
                    stored += len(new)
                    nxt[key] = new
            if stored > term_budget:
                raise MemoryGuardError(f"minor table exceeds {term_budget} terms at row {r}")
        level = {key: p for key, p in nxt.items() if p != 0}
        if not level:
            return Polynomial.zero(vs)
    (result,) = level.values()
    return Polynomial(vs, result)


ENGINES = ("bareiss", "minors", "auto")


def choose_engine(M: Matrix) -> str:
    """Minor expansion up to 16 rows, or 20 rows of monomials; Bareiss beyond."""
    m = len(M)
    if m <= 16:
        return "minors"
    if m <= 20 and all(p.is_monomial() or not p for row in M for p in row):
        return "minors"
    return "bareiss"


def det(M: Matrix, engine: str = "auto", vs: VarSet | None = None) -> Polynomial:
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; choose from {ENGINES}")
    if engine == "bareiss":
        return det_bareiss(M, vs)
    if engine == "minors":
        return det_minors(M, vs)
    if choose_engine(M) == "minors":
        try:
            return det_minors(M, vs)
        except MemoryGuardError:
            pass
    return det_bareiss(M, vs)


def integer_det(M: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    m = len(M)
    a = [list(map(int, row)) for row in M]
    sign, prev = 1, 1
    for t in range(m):
        piv = next((i for i in range(t, m) if a[i][t]), None)
        if piv is None:
            return 0
        if piv != t:
            a[t], a[piv] = a[piv], a[t]
            sign = -sign
        for i in range(t + 1, m):
            for j in range(t + 1, m):
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
        prev = a[t][t]
    return sign * a[m - 1][m - 1] if m else 1


# ---------------------------------------------------------------- rotation blocks


def cyclotomic(o: int) -> list[int]:
    """Coefficients (constant term first) of the ``o``-th cyclotomic polynomial."""
    num = [-1] + [0] * (o - 1) + [1]
    for e in range(1, o):
        if o % e == 0:
            den = cyclotomic(e)
            quot = [0] * (len(num) - len(den) + 1)
            for i in range(len(quot) - 1, -1, -1):
                c = num[i + len(den) - 1]  # divisor is monic
                quot[i] = c
                for j, dj in enumerate(den):
                    num[i + j] -= c * dj
            num = quot
    return num


def _power_matrices(o: int) -> list[list[list[int]]]:
    """Matrices of multiplication by ``w^e`` (``e < o``) on ``Z[w]/Phi_o``."""
    phi = cyclotomic(o)
    deg = len(phi) - 1

    def times_w(v: list[int]) -> list[int]:
        top = v[-1]
        out = [0] + v[:-1]
        return [out[i] - top * phi[i] for i in range(deg)]

    mats = []
    basis = [[int(i == j) for i in range(deg)] for j in range(deg)]  # column j = w^j
    cols = basis
    for _ in range(o):
        mats.append([[cols[j][i] for j in range(deg)] for i in range(deg)])
        cols = [times_w(c) for c in cols]
    return mats


@dataclass
class RotationBlock:
    order: int
    orbits: list[int] = field(repr=False)
    matrix: list[list[Polynomial]] = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.matrix)


def rotation_blocks(entries: Sequence[Sequence[Polynomial]], orbits: Sequence[Sequence[int]], period: int) -> list[RotationBlock]:
    """Split a rotation-invariant matrix into integer blocks by character order.

    ``orbits[i]`` lists ``x, r x, r^2 x, ...`` and ``period`` is the order of
    ``r``.  The determinant of ``entries`` is the product of the block
    determinants.
    """
    vs = _common_vs(entries, None)
    zero = Polynomial.zero(vs)
    blocks = []
    for o in range(1, period + 1):
        if period % o:
            continue
        chosen = [i for i, orb in enumerate(orbits) if len(orb) % o == 0]
        if not chosen:
            continue
        powers = _power_matrices(o)
        deg = len(powers[0])
        size = deg * len(chosen)
        mat = [[zero] * size for _ in range(size)]
        for bi, oi in enumerate(chosen):
            x = orbits[oi][0]
            for bj, oj in enumerate(chosen):
                acc = [[{} for _ in range(deg)] for _ in range(deg)]
                for t, y in enumerate(orbits[oj]):
                    g = entries[x][y]
                    if not g:
                        continue
                    pm = powers[t % o]
                    for a in range(deg):
                        for b in range(deg):
                            c = pm[a][b]
                            if c:
                                acc[a][b][g] = acc[a][b].get(g, 0) + c
                for a in range(deg):
                    for b in range(deg):
                        total = zero
                        for g, c in acc[a][b].items():
                            total = total + g * c
                        mat[bi * deg + a][bj * deg + b] = total
        blocks.append(RotationBlock(o, chosen, mat))
    return blocks


# ---------------------------------------------------------------- Gram determinants


def substitute_entries(gm: GramMatrix, bindings: Mapping[str, Scalar] | None) -> list[list[Polynomial]]:
    vs = gm.vs
    cache: dict[Exponents, Polynomial] = {}
    out = []
    for row in gm.entries:
        line = []
        for e in row:
            p = cache.get(e)
            if p is None:
                p = Polynomial.monomial(vs, e)
                if bindings:
                    p = p.substitute(bindings)
                cache[e] = p
            line.append(p)
        out.append(line)
    return out


@dataclass
class DetResult:
    poly: Polynomial
    provenance: dict

    def to_json(self) -> dict:
        return {"determinant": self.poly.to_string(), **self.provenance}


def matrix_id(n: int, k: int, bindings: Mapping[str, Scalar] | None) -> str:
    label = f"G(n={n},k={k})"
    if bindings:
        parts = []
        for name in sorted(bindings):
            v = bindings[name]
            parts.append(f"{name}={v.to_string() if isinstance(v, Polynomial) else v}")
        label += "|" + ",".join(parts)
    return label


def _det_tracked(M: Matrix, engine: str, vs: VarSet, used: set[str]) -> Polynomial:
    if engine == "auto" and choose_engine(M) == "minors":
        try:
            out = det_minors(M, vs)
            used.add("minors")
            return out
        except MemoryGuardError:
            engine = "bareiss"
    eng = "bareiss" if engine == "auto" else engine
    used.add(eng)
    return det(M, eng, vs)


def det_gram(
    gm: GramMatrix,
    engine: str = "auto",
    bindings: Mapping[str, Scalar] | None = None,
    symmetry: bool = True,
) -> DetResult:
    """Determinant of a (possibly specialized) Gram matrix with provenance."""
    start = time.perf_counter()
    entries = substitute_entries(gm, bindings)
    vs = gm.vs
    block_dims: list[int] = []
    used: set[str] = set()
    if symmetry and gm.dim > 1:
        blocks = rotation_blocks(entries, rotation_orbits(gm.order), 2 * gm.n)
        result = Polynomial.one(vs)
        for blk in blocks:
            block_dims.append(blk.dim)
            result = result * _det_tracked(blk.matrix, engine, vs, used)
    else:
        block_dims.append(gm.dim)
        result = _det_tracked(entries, engine, vs, used)
    prov = {
        "matrix": matrix_id(gm.n, gm.k, bindings),
        "engine": "+".join(sorted(used)),
        "rotation_blocks": block_dims if symmetry else None,
        "elapsed_seconds": round(time.perf_counter() - start, 3),
    }
    return DetResult(result, prov)


def gram_det(
    n: int,
    k: int = 2,
    engine: str = "auto",
    bindings: Mapping[str, Scalar] | None = None,
    symmetry: bool = True,
    cap: int | None = DEFAULT_DET_CAP,
) -> Polynomial:
    gm = gram_matrix(n, k, cap=None)
    check_cap(gm.dim, cap, "determinant")
    return det_gram(gm, engine, bindings, symmetry).poly


# ---------------------------------------------------------------- divisibility


@dataclass
class DivisibilityResult:
    divides: bool
    power: int
    achieved: int
    quotients: list[Polynomial] = field(repr=False)


def divides_check(p: Polynomial, q: Polynomial, power: int) -> DivisibilityResult:
    """Divide ``p`` by ``q`` up to ``power`` times, keeping every quotient."""
    if not q:
        raise ZeroDivisionError("divisor is the zero polynomial")
    if power < 1:
        raise ValueError("power must be at least 1")
    chain: list[Polynomial] = []
    cur = p
    for _ in range(power):
        nxt = cur.exact_div(q)
        if nxt is None:
            break
        chain.append(nxt)
        cur = nxt
    return DivisibilityResult(len(chain) == power, power, len(chain), chain)


def multiplicity(p: Polynomial, q: Polynomial, limit: int = 10_000) -> tuple[int, Polynomial]:
    """Largest ``e`` with ``q^e | p`` (for nonzero ``p``) and the cofactor."""
    if not p:
        raise ValueError("multiplicity in the zero polynomial is unbounded")
    if q.total_degree() <= 0:
        raise ValueError("divisor must be non-constant")
    e = 0
    while e < limit:
        nxt = p.exact_div(q)
        if nxt is None:
            break
        p, e = nxt, e + 1
    return e, p


# ---------------------------------------------------------------- localization at 1 - d^2


def _unit(vs: VarSet) -> Polynomial:
    d = vs.var("d")
    return 1 - d * d


@dataclass(frozen=True)
class LocalizedEntry:
    """``numerator / (1 - d^2)^denom_power`` kept in lowest terms."""

    numerator: Polynomial
    denom_power: int = 0

    def __post_init__(self) -> None:
        if self.denom_power < 0:
            raise ValueError("denominator power must be non-negative")
        num, e = self.numerator, self.denom_power
        if not num:
            e = 0
        else:
            u = _unit(num.vs)
            while e > 0:
                q = num.exact_div(u)
                if q is None:
                    break
                num, e = q, e - 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denom_power", e)

    @classmethod
    def of(cls, p: Polynomial) -> LocalizedEntry:
        return cls(p, 0)

    def _lift(self, e: int) -> Polynomial:
        return self.numerator * _unit(self.numerator.vs) ** (e - self.denom_power)

    def __add__(self, other: LocalizedEntry) -> LocalizedEntry:
        e = max(self.denom_power, other.denom_power)
        return LocalizedEntry(self._lift(e) + other._lift(e), e)

    def __neg__(self) -> LocalizedEntry:
        return LocalizedEntry(-self.numerator, self.denom_power)

    def __sub__(self, other: LocalizedEntry) -> LocalizedEntry:
        return self + (-other)

    def __mul__(self, other: LocalizedEntry | Polynomial) -> LocalizedEntry:
        if isinstance(other, Polynomial):
            return LocalizedEntry(self.numerator * other, self.denom_power)
        return LocalizedEntry(self.numerator * other.numerator, self.denom_power + other.denom_power)

    def cleared(self, e: int) -> Polynomial:
        """``(1 - d^2)^e`` times this entry; ``e`` must cover the denominator."""
        if e < self.denom_power:
            raise ValueError(f"power {e} does not clear denominator power {self.denom_power}")
        return self._lift(e)

    def __bool__(self) -> bool:
        return bool(self.numerator)

    def to_string(self) -> str:
        if self.denom_power == 0:
            return self.numerator.to_string()
        return f"({self.numerator.to_string()})/(1 - 1*d^2)^{self.denom_power}"


# ---------------------------------------------------------------- embedding reduction


class ReductionError(ArithmeticError):
    """A row did not have the structure the elimination relies on."""


@dataclass
class RowOp:
    """``row[target] -= sum(coeff * row[source])`` in the reordered basis."""

    target: int
    terms: list[tuple[LocalizedEntry, int]]
    scalar: str | None = None


@dataclass
class Reduction:
    n: int
    order: list  # diagrams: i0-images, then i1-images, then the rest
    m: int  # number of (n-1)-chord diagrams
    stage1: list[RowOp] = field(repr=False)
    stage2: list[RowOp] = field(repr=False)
    reduced: list[list[LocalizedEntry]] = field(repr=False)
    scalars: dict[str, int] = field(default_factory=dict)

    @property
    def sign(self) -> int:
        """Sign from swapping the two leading block rows."""
        return -1 if self.m % 2 else 1

    def row_clearing_powers(self) -> list[int]:
        return [max(e.denom_power for e in row) for row in self.reduced]

    def cleared_matrix(self) -> tuple[list[list[Polynomial]], int]:
        """Rows scaled to polynomials and the total power of ``1 - d^2`` used."""
        powers = self.row_clearing_powers()
        rows = [[e.cleared(p) for e in row] for row, p in zip(self.reduced, powers)]
        return rows, sum(powers)


def _apply(rows: list[list[LocalizedEntry]], ops: list[RowOp], base: list[list[LocalizedEntry]]) -> None:
    for op in ops:
        new = list(rows[op.target])
        for coeff, src in op.terms:
            srow = base[src]
            new = [a - coeff * b if b else a for a, b in zip(new, srow)]
        rows[op.target] = new


def embed_reduce(n: int) -> Reduction:
    """Eliminate the i0/i1 image blocks of G_n, leaving the localized remainder.

    Stage one subtracts ``c * row(i1(p0(b)))`` from every row ``b`` outside
    the i1 block, with ``c`` the closed-curve scalar of ``p0``; this clears
    every i0 column outside the i1 rows.  Stage two clears the i1 columns of
    the remaining rows using the modified i0 rows, whose i1 block is
    ``(1 - d^2) G_{n-1}``.  Only row operations are used, so
    ``det G_n = sign * (1 - d^2)^m * det(G_{n-1})^2 * det(reduced)``.
    """
    from .diagrams import contract_p, embed_i, enumerate_diagrams
    from .pairing import marker_type, pair

    if n < 2:
        raise ValueError("embedding reduction needs n >= 2")
    k = 2
    vs = varset(k)
    small = enumerate_diagrams(n - 1, k)
    m = len(small)
    i0 = [embed_i(b, 0) for b in small]
    i1 = [embed_i(b, 1) for b in small]
    lead = set(i0) | set(i1)
    if len(lead) != 2 * m:
        raise ReductionError("i0 and i1 images overlap")
    rest = [b for b in enumerate_diagrams(n, k) if b not in lead]
    order = i0 + i1 + rest
    pos = {b: i for i, b in enumerate(order)}
    size = len(order)
    G = [[LocalizedEntry.of(Polynomial.monomial(vs, pair(a, b))) for b in order] for a in order]
    d = vs.var("d")

    def scalar(marker) -> tuple[Polynomial, str]:
        t = marker_type(marker, k)
        if t is None:
            return Polynomial.one(vs), "1"
        return vs.var(t.name), t.name

    scalars: dict[str, int] = {}
    stage1: list[RowOp] = []
    for r in range(size):
        if m <= r < 2 * m:
            continue
        alpha, marker = contract_p(order[r], 0)
        c, name = scalar(marker)
        src = pos[embed_i(alpha, 1)]
        for j in range(m):
            if G[r][j] != G[src][j] * c:
                raise ReductionError(f"row {r} is not {name} times row {src} on the i0 columns")
        scalars[name] = scalars.get(name, 0) + 1
        stage1.append(RowOp(r, [(LocalizedEntry.of(c), src)], name))
    G1p = [list(row) for row in G]
    _apply(G1p, stage1, G)
    unit = _unit(vs)
    for r in range(size):
        if not (m <= r < 2 * m) and any(G1p[r][j] for j in range(m)):
            raise ReductionError(f"row {r} keeps a nonzero i0 column after the first stage")
    # the i1 block of a modified i0 row is (1 - d^2) times a row of G_{n-1}
    small_pos = {b: i for i, b in enumerate(small)}
    for r in range(m):
        for j in range(m):
            expect = Polynomial.monomial(vs, pair(small[r], small[j])) * unit
            if G1p[r][m + j] != LocalizedEntry.of(expect):
                raise ReductionError(f"i0 row {r} does not reduce to (1 - d^2) G_(n-1)")

    stage2: list[RowOp] = []
    inv_unit = LocalizedEntry(Polynomial.one(vs), 1)
    for r in range(2 * m, size):
        b = order[r]
        beta, marker1 = contract_p(b, 1)
        c1, _ = scalar(marker1)
        alpha, marker0 = contract_p(b, 0)
        c0, _ = scalar(marker0)
        terms = [(inv_unit * c1, small_pos[beta])]
        terms.append((-(inv_unit * (c0 * d)), small_pos[alpha]))
        stage2.append(RowOp(r, terms))
    G2p = [list(row) for row in G1p]
    _apply(G2p, stage2, G1p)
    for r in range(2 * m, size):
        if any(G2p[r][j] for j in range(2 * m)):
            raise ReductionError(f"row {r} keeps a nonzero i0/i1 column after the second stage")
    reduced = [row[2 * m:] for row in G2p[2 * m:]]
    return Reduction(n, order, m, stage1, stage2, reduced, dict(sorted(scalars.items())))
