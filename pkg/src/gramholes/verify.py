"""Mechanical checks of the structural claims about Gram determinants.

Every check returns a :class:`VerificationReport`.  The registry maps short
claim ids to checks so the command line can run them one at a time or all
together.  Checks beyond their feasible size report ``skipped-infeasible``.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache, partial
from math import comb
from typing import Callable, Iterable, Mapping, Sequence

from . import goldens
from .diagrams import contract_p, diagram_count, embed_i, enumerate_catalan, enumerate_diagrams
from .gram import catalan_blocks, gram_matrix, rotation_orbits, submatrix
from .pairing import marker_type, pair
from .polyring import K2_INVOLUTIONS, Polynomial, VarSet, curve_types, parse, varset
from .symdet import (
    det,
    det_gram,
    divides_check,
    embed_reduce,
    integer_det,
    multiplicity,
    rotation_blocks,
)

PASS, FAIL, SKIP = "pass", "fail", "skipped-infeasible"


@dataclass
class VerificationReport:
    claim: str
    scope: dict
    verdict: str
    witness: dict = field(default_factory=dict)
    elapsed_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.verdict != FAIL

    def to_json(self) -> dict:
        return asdict(self)


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


# ---------------------------------------------------------------- shared helpers


def expand_factored(vs: VarSet, factored: tuple[int, Sequence[tuple[str, int]]]) -> Polynomial:
    sign, factors = factored
    out = Polynomial.const(vs, sign)
    for text, e in factors:
        out = out * parse(vs, text) ** e
    return out


def factor_over(p: Polynomial, candidates: Sequence[Polynomial]) -> tuple[int, list[int]] | None:
    """Write ``p = sign * prod(c_i ** e_i)`` by exact division, or None."""
    exps = []
    for c in candidates:
        e, p = multiplicity(p, c)
        exps.append(e)
    if p == Polynomial.one(p.vs):
        return 1, exps
    if p == -Polynomial.one(p.vs):
        return -1, exps
    return None


def parse_matrix(vs: VarSet, rows: Sequence[Sequence[str]]) -> list[list[Polynomial]]:
    return [[parse(vs, c) for c in row] for row in rows]


def match_permutation(A: Sequence[Sequence[Polynomial]], B: Sequence[Sequence[Polynomial]]) -> list[int] | None:
    """A permutation ``p`` with ``A[i][j] == B[p[i]][p[j]]`` for all ``i, j``."""
    n = len(A)
    if len(B) != n:
        return None
    perm: list[int] = [-1] * n
    used = [False] * n

    def fits(i: int, c: int) -> bool:
        if A[i][i] != B[c][c]:
            return False
        return all(A[i][t] == B[c][perm[t]] and A[t][i] == B[perm[t]][c] for t in range(i))

    def search(i: int) -> bool:
        if i == n:
            return True
        for c in range(n):
            if not used[c] and fits(i, c):
                perm[i], used[c] = c, True
                if search(i + 1):
                    return True
                used[c] = False
        return False

    return list(perm) if search(0) else None


@lru_cache(maxsize=None)
def _gram(n: int, k: int = 2):
    return gram_matrix(n, k, cap=None)


@lru_cache(maxsize=None)
def _det(n: int, k: int = 2, subst: tuple[tuple[str, int], ...] = ()) -> Polynomial:
    return det_gram(_gram(n, k), bindings=dict(subst) or None).poly


def _key(bindings: Mapping[str, int]) -> tuple[tuple[str, int], ...]:
    return tuple(sorted(bindings.items()))


def _block_dets(n: int, k: int = 2) -> list[Polynomial]:
    vs = varset(k)
    return [det([[Polynomial.monomial(vs, e) for e in row] for row in m]) for _, _, m in catalan_blocks(n, k)]


def max_degree(n: int) -> int:
    """Total degree of the top part of det G_n: ``n (n+1) C(2n, n)``."""
    return n * (n + 1) * comb(2 * n, n)


# ---------------------------------------------------------------- diagonal product


def delta_diag(n: int) -> tuple[int, int]:
    """Exponents ``(alpha, beta)`` of ``d`` and ``z1`` in the diagonal product."""
    vs = varset(2)
    total = [0] * len(vs)
    for b in enumerate_diagrams(n, 2):
        for i, e in enumerate(pair(b, b)):
            total[i] += e
    d, z1 = vs.index["d"], vs.index["z1"]
    others = [e for i, e in enumerate(total) if i not in (d, z1)]
    if any(others):
        raise ArithmeticError(f"diagonal product uses variables beyond d, z1: {total}")
    return total[d], total[z1]


def check_delta(n: int) -> VerificationReport:
    alpha, beta = delta_diag(n)
    expected_beta = 2 * n * 4 ** (n - 1)
    ok = beta == expected_beta and alpha + beta == max_degree(n)
    table = {1: (2, 2), 2: (20, 16), 3: (144, 96), 4: (888, 512)}
    if n in table:
        ok = ok and (alpha, beta) == table[n]
    return VerificationReport("Thm4.1", {"n": n, "k": 2}, _verdict(ok), {"alpha": alpha, "beta": beta, "expected_beta": expected_beta})


# ---------------------------------------------------------------- type B


def chebyshev_T(i: int) -> Polynomial:
    """``T_0 = 2``, ``T_1 = d``, ``T_i = d T_{i-1} - T_{i-2}`` in the annulus ring."""
    if i < 0:
        raise ValueError("index must be non-negative")
    vs = varset(1)
    d = vs.var("d")
    prev, cur = Polynomial.const(vs, 2), d
    if i == 0:
        return prev
    for _ in range(i - 1):
        prev, cur = cur, d * cur - prev
    return cur


def type_b_product(n: int) -> Polynomial:
    vs = varset(1)
    a = vs.var("a")
    out = Polynomial.one(vs)
    for i in range(1, n + 1):
        t = chebyshev_T(i)
        out = out * (t * t - a * a) ** comb(2 * n, n - i)
    return out


def type_b_check(n: int) -> VerificationReport:
    scope = {"n": n, "k": 1}
    if not 1 <= n <= 3:
        return VerificationReport("Thm7.1", scope, SKIP)
    got = _det(n, 1)
    ok = got == type_b_product(n)
    return VerificationReport("Thm7.1", scope, _verdict(ok), {"terms": len(got), "degree": got.total_degree()})


# ---------------------------------------------------------------- involutions

# expected sign of det f(G_n) relative to det G_n
_H_SIGNS = {"h1": (-1, 1), "h2": (-1, 1), "h3": (1, 1), "ht": (1, 1)}
G_MAPS = ("g1", "g2", "g3", "g1g2", "g1g3", "g2g3", "g1g2g3")
G3_SUBST = goldens.G3_SPECIAL_SUBST


def _mapped_det(n: int, name: str) -> tuple[Polynomial, Polynomial]:
    """``(det f(G), det G)`` where ``f`` is applied to every entry first."""
    gm = _gram(n)
    m = K2_INVOLUTIONS[name]
    if n <= 2:
        base = _det(n)
        mapped = [[p.var_map(m) for p in row] for row in gm.to_polys()]
        out = Polynomial.one(base.vs)
        for blk in rotation_blocks(mapped, rotation_orbits(gm.order), 2 * n):
            out = out * det(blk.matrix)
        return out, base
    base = _det(n, 2, _key(G3_SUBST))
    return base.var_map(m), base


def involution_claim_id(name: str) -> str:
    h = {"h1": "Thm3.2(1)", "h2": "Thm3.2(2)", "h3": "Thm3.2(3)", "ht": "Thm3.2(4)"}
    return h.get(name) or f"Thm3.3({G_MAPS.index(name) + 1})"


def _involution_run(name: str, n: int) -> VerificationReport:
    return involution_check(name, n)


def involution_check(name: str, n: int) -> VerificationReport:
    claim = involution_claim_id(name)
    scope: dict = {"n": n, "k": 2, "map": name}
    if not 1 <= n <= 3:
        return VerificationReport(claim, scope, SKIP)
    if n == 3:
        scope["subst"] = dict(G3_SUBST)
    expected = _H_SIGNS[name][0 if n == 1 else 1] if name in _H_SIGNS else 1
    mapped, base = _mapped_det(n, name)
    if mapped == base:
        sign = 1
    elif mapped == -base:
        sign = -1
    else:
        sign = 0
    witness = {"sign": sign, "expected_sign": expected}
    if n <= 2:
        witness["homomorphism"] = mapped == base.var_map(K2_INVOLUTIONS[name])
    ok = sign == expected and witness.get("homomorphism", True)
    return VerificationReport(claim, scope, _verdict(ok), witness)


def involution_suite(n: int) -> list[VerificationReport]:
    return [involution_check(name, n) for name in ("h1", "h2", "h3", "ht") + G_MAPS]


# ---------------------------------------------------------------- top-degree part


def highest_terms_check(n: int) -> VerificationReport:
    scope = {"n": n, "k": 2}
    if not 1 <= n <= 3:
        return VerificationReport("Prop4.1", scope, SKIP)
    vs = varset(2)
    blocks = _block_dets(n)
    witness: dict = {"blocks": len(blocks), "block_terms": [len(b) for b in blocks]}
    if n == 1:
        ok = blocks[0] == _det(1) and _det(1).h_truncate(4) == _det(1)
        return VerificationReport("Prop4.1", scope, _verdict(ok), witness)
    if n == 2:
        product = blocks[0] * blocks[1]
        shown = expand_factored(vs, goldens.HIGH_G2_FACTORS)
        trunc = _det(2).h_truncate(max_degree(2))
        witness.update(matches_display=product == shown, matches_truncation=product == trunc, equal_blocks=blocks[0] == blocks[1])
        ok = witness["matches_display"] and witness["matches_truncation"] and witness["equal_blocks"]
        return VerificationReport("Prop4.1", scope, _verdict(ok), witness)
    return VerificationReport("Prop4.1", scope, **_high_g3(vs, blocks, witness))


def _high_g3(vs: VarSet, blocks: list[Polynomial], witness: dict) -> dict:
    """Compare the block product with the factored top-degree part of det G3.

    Each block is written over a candidate list by exact division, so both
    sides become products of the same named factors and the identity
    ``prod(blocks) * det(G1)^9 == h(det G2)^6 * d^30 * w^3 * wbar^3`` reduces
    to comparing exponent vectors and signs.  A random-point evaluation of
    the same identity is recorded alongside.
    """
    names = ["d", "A", "B", "C", "F", "w", "wbar"]
    cands = [
        vs.var("d"),
        parse(vs, goldens.QUAD_A),
        parse(vs, goldens.QUAD_B),
        parse(vs, goldens.CUBIC_C),
        parse(vs, goldens.QUARTIC_F3),
        parse(vs, goldens.QUINTIC_W),
        parse(vs, goldens.QUINTIC_WBAR),
    ]
    sign, exps = 1, [0] * len(cands)
    for b in blocks:
        f = factor_over(b, cands)
        if f is None:
            witness["unfactored_block"] = len(b)
            return {"verdict": FAIL, "witness": witness}
        sign *= f[0]
        exps = [x + y for x, y in zip(exps, f[1])]
    witness["block_product"] = {"sign": sign, **dict(zip(names, exps))}

    shown_sign, shown = goldens.HIGH_G3_FACTORS
    shown_exps = [0] * len(cands)
    for text, e in shown:
        shown_exps[_index_of(vs, cands, text)] += e
    matches_display = (sign, exps) == (shown_sign, shown_exps)

    h2 = _block_dets(2)
    h2_fac = factor_over(h2[0] * h2[1], cands)
    g1_fac = factor_over(_det(1), cands)
    if h2_fac is None or g1_fac is None:
        return {"verdict": FAIL, "witness": {**witness, "reason": "h(det G2) or det G1 not over candidates"}}
    lhs_sign = sign * g1_fac[0] ** 9
    lhs = [x + 9 * y for x, y in zip(exps, g1_fac[1])]
    rhs_sign = h2_fac[0] ** 6
    rhs = [6 * y for y in h2_fac[1]]
    rhs[0] += 30
    rhs[5] += 3
    rhs[6] += 3
    matches_identity = (lhs_sign, lhs) == (rhs_sign, rhs)

    rng = random.Random(20240607)
    h2p, g1p = h2[0] * h2[1], _det(1)
    w, wb = cands[5], cands[6]
    points_ok = True
    for _ in range(20):
        pt = [rng.randint(-5, 5) for _ in range(len(vs))]
        left = g1p.evaluate(pt) ** 9
        for b in blocks:
            left *= b.evaluate(pt)
        right = h2p.evaluate(pt) ** 6 * pt[0] ** 30 * w.evaluate(pt) ** 3 * wb.evaluate(pt) ** 3
        points_ok = points_ok and left == right
    witness.update(matches_display=matches_display, matches_identity=matches_identity, random_points=points_ok)
    return {"verdict": _verdict(matches_display and matches_identity and points_ok), "witness": witness}


def _index_of(vs: VarSet, cands: Sequence[Polynomial], text: str) -> int:
    p = parse(vs, text)
    for i, c in enumerate(cands):
        if p == c or p == -c:
            return i
    raise KeyError(text)


# ---------------------------------------------------------------- specializations


def three_hole_zero_subst() -> dict[str, int]:
    """Every singleton and pair variable of the three-hole ring set to 0."""
    vs = varset(3)
    return {vs.names[i]: 0 for i, s in enumerate(curve_types(3)) if 1 <= len(s) <= 2}


def substitution_goldens() -> list[VerificationReport]:
    out = []
    vs2, vs3 = varset(2), varset(3)
    start = time.perf_counter()
    got = _det(3, 2, _key(G3_SUBST))
    want = expand_factored(vs2, goldens.G3_SPECIAL_FACTORS)
    out.append(
        VerificationReport(
            "App7.6",
            {"n": 3, "k": 2, "subst": dict(G3_SUBST)},
            _verdict(got == want),
            {"terms": len(got)},
            time.perf_counter() - start,
        )
    )
    start = time.perf_counter()
    zero = three_hole_zero_subst()
    got3 = _det(1, 3, _key(zero))
    want3 = expand_factored(vs3, goldens.THREE_HOLES_SPECIAL_FACTORS)
    witness: dict = {"terms": len(got3)}
    if got3 != want3:
        sign, facs = goldens.THREE_HOLES_SPECIAL_FACTORS
        lin = expand_factored(vs3, (sign, facs[:2]))
        q = got3.exact_div(lin)
        if q is not None:
            witness["square_part"] = q.to_string()
    out.append(
        VerificationReport("App7.7", {"n": 1, "k": 3, "subst": "singletons and pairs = 0"}, _verdict(got3 == want3), witness, time.perf_counter() - start)
    )
    allzero = {nm: 0 for nm in vs2.names}
    z = _det(1, 2, _key(allzero))
    out.append(VerificationReport("Sec2.zero", {"n": 1, "k": 2, "subst": "all = 0"}, _verdict(not z), {}))
    return out


# ---------------------------------------------------------------- conjectures


def conjecture_one(n: int) -> VerificationReport:
    scope = {"n": n, "k": 2}
    if not 1 <= n <= 2:
        return VerificationReport("Conj1", scope, SKIP)
    power = comb(2 * n, n - 1)
    res = divides_check(_det(n), _det(1), power)
    beyond = divides_check(_det(n), _det(1), power + 1)
    return VerificationReport("Conj1", scope, _verdict(res.divides), {"power": power, "achieved": res.achieved, "next_power_divides": beyond.divides})


def conjecture_two(n: int, h_prev: Sequence[Polynomial] | None) -> VerificationReport:
    scope = {"n": n, "k": 2}
    if h_prev is None:
        raise ValueError("conjecture two needs the factors of H_(n-1)")
    if n != 2:
        return VerificationReport("Conj2", scope, SKIP)
    h = Polynomial.one(varset(2))
    for f in h_prev:
        h = h * f
    res = divides_check(_det(2), h, 2 * n)
    return VerificationReport("Conj2", scope, _verdict(res.divides), {"power": 2 * n, "achieved": res.achieved})


R1_MAPS = ("h1", "h2", "ht", "g1", "g2", "g3")


def classify_pair(u: Polynomial, v: Polynomial) -> dict:
    """Invariance of ``u`` and anti-invariance pattern of ``v`` under the maps."""
    u_fixed = {m: u.var_map(K2_INVOLUTIONS[m]) == u for m in R1_MAPS}
    v_neg = {m: v.var_map(K2_INVOLUTIONS[m]) == -v for m in ("h1", "h2")}
    v_fixed = {m: v.var_map(K2_INVOLUTIONS[m]) == v for m in ("ht", "g1", "g2", "g3")}
    return {"u_in_R1": all(u_fixed.values()), "v_in_R2": all(v_neg.values()) and all(v_fixed.values()), "u_fixed": u_fixed, "v_negated": v_neg, "v_fixed": v_fixed}


def halves(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """``((a+b)/2, (a-b)/2)`` by exact integer division."""
    two = Polynomial.const(a.vs, 2)
    u, v = (a + b).exact_div(two), (a - b).exact_div(two)
    if u is None or v is None:
        raise ArithmeticError("a + b or a - b has an odd coefficient")
    return u, v


def conjecture_three(n: int, candidate: tuple[Polynomial, Polynomial] | None) -> VerificationReport:
    scope = {"n": n, "k": 2}
    if candidate is None:
        raise ValueError("conjecture three needs a candidate (u, v)")
    if not 1 <= n <= 2:
        return VerificationReport("Conj3", scope, SKIP)
    u, v = candidate
    is_diff = u * u - v * v == _det(n)
    cls = classify_pair(u, v)
    witness = {"det_equals_u2_minus_v2": is_diff, **cls}
    if not cls["u_in_R1"] and u.var_map(K2_INVOLUTIONS["h1"]) == v:
        witness["h1_swaps_u_and_v"] = True
    return VerificationReport("Conj3", scope, _verdict(is_diff and cls["u_in_R1"] and cls["v_in_R2"]), witness)


def default_candidate(n: int) -> tuple[Polynomial, Polynomial]:
    """Candidate ``(u, v)`` assembled from the recorded factors."""
    vs = varset(2)
    if n == 1:
        a, b = (parse(vs, t) for t, _ in goldens.DET_G1_FACTORS[1])
        return halves(a, b)
    if n == 2:
        d = vs.var("d")
        common = d * parse(vs, goldens.QUAD_A) ** 2 * parse(vs, goldens.QUAD_B) ** 2 * parse(vs, goldens.CUBIC_C)
        p, q = halves(parse(vs, goldens.SEXTIC_D), parse(vs, goldens.SEXTIC_E))
        return common * p, common * q
    raise ValueError("no recorded candidate beyond n = 2")


def conjecture_harness(n: int, candidates: Mapping[str, object] | None = None) -> list[VerificationReport]:
    """Conjecture one always; two and three need ``candidates['H']`` / ``['uv']``."""
    candidates = candidates or {}
    out = [conjecture_one(n)]
    if "H" in candidates:
        out.append(conjecture_two(n, candidates["H"]))  # type: ignore[arg-type]
    if "uv" in candidates:
        out.append(conjecture_three(n, candidates["uv"]))  # type: ignore[arg-type]
    return out


def three_hole_diagonal(n: int) -> VerificationReport:
    """Diagonal product over B_{n,3} against ``d^a (x{1,-1} x{2,-2} x{3,-3})^b``."""
    scope = {"n": n, "k": 3}
    if not 1 <= n <= 3:
        return VerificationReport("Sec7.1.diag", scope, SKIP)
    vs = varset(3)
    total = [0] * len(vs)
    for b in enumerate_diagrams(n, 3):
        for i, e in enumerate(pair(b, b)):
            total[i] += e
    named = {vs.names[i]: e for i, e in enumerate(total) if e}
    beta = n * (n + 1) * 4 ** (n - 1)
    alpha = n * (n + 1) ** 2 * comb(2 * n, n) - 3 * beta
    want = {"d": alpha, "x{1,-1}": beta, "x{2,-2}": beta, "x{3,-3}": beta}
    return VerificationReport("Sec7.1.diag", scope, _verdict(named == want), {"exponents": named, "expected": want})


# ---------------------------------------------------------------- structural claims


def count_check(n: int) -> VerificationReport:
    rows = {}
    ok = True
    for k in (0, 1, 2, 3):
        if n <= 0:
            break
        got = len(enumerate_diagrams(n, k)) if k else len(enumerate_catalan(n))
        rows[k] = got
        ok = ok and got == diagram_count(n, k)
    return VerificationReport("Sec1.count", {"n": n}, _verdict(ok), {"counts": rows})


def g1_display_check() -> VerificationReport:
    vs = varset(2)
    ours = _gram(1).to_polys()
    shown = parse_matrix(vs, goldens.G1_MATRIX)
    perm = match_permutation(shown, ours)
    ok_det = _det(1) == expand_factored(vs, goldens.DET_G1_FACTORS)
    return VerificationReport("Sec2.G1", {"n": 1, "k": 2}, _verdict(perm is not None and ok_det), {"permutation": perm, "det_matches": ok_det})


def g2_matrix_check() -> VerificationReport:
    vs = varset(2)
    shown = parse_matrix(vs, goldens.G2_MATRIX)
    perm = match_permutation(shown, _gram(2).to_polys())
    witness: dict = {"permutation": perm}
    ok = perm is not None
    # with a matching permutation the determinants agree; confirm independently at random points
    rng = random.Random(7)
    agree = True
    for _ in range(5):
        pt = [rng.randint(-5, 5) for _ in range(len(vs))]
        agree = agree and integer_det([[p.evaluate(pt) for p in row] for row in shown]) == _det(2).evaluate(pt)
    witness["det_agrees_at_points"] = agree
    return VerificationReport("App7.2", {"n": 2, "k": 2}, _verdict(ok and agree), witness)


def det_g2_check() -> VerificationReport:
    vs = varset(2)
    got = _det(2)
    recorded = expand_factored(vs, goldens.DET_G2_FACTORS)
    witness = {"terms": len(got), "equals_recorded": got == recorded, "equals_negated_recorded": got == -recorded}
    return VerificationReport("App7.4", {"n": 2, "k": 2}, _verdict(got == recorded), witness)


def three_hole_matrix_check() -> VerificationReport:
    """Entrywise comparison with the recorded three-hole G1 in canonical order."""
    vs = varset(3)
    shown = parse_matrix(vs, goldens.G1_THREE_HOLES_MATRIX)
    ours = _gram(1, 3).to_polys()
    perm = match_permutation(shown, ours)
    diffs = [(i, j, shown[i][j].to_string(), ours[i][j].to_string()) for i in range(8) for j in range(8) if shown[i][j] != ours[i][j]]
    diag_ok = sorted(p.to_string() for p in (shown[i][i] for i in range(8))) == sorted(p.to_string() for p in (ours[i][i] for i in range(8)))
    return VerificationReport(
        "Sec7.1.G1", {"n": 1, "k": 3}, _verdict(perm is not None), {"permutation": perm, "entry_differences": diffs, "diagonal_multiset_matches": diag_ok}
    )


def transpose_law(n: int) -> VerificationReport:
    scope = {"n": n, "k": 2}
    if not 1 <= n <= 3:
        return VerificationReport("Sec2.transpose", scope, SKIP)
    gm = _gram(n)
    ht = K2_INVOLUTIONS["ht"]
    vs = gm.vs
    swap = [vs.index[ht.get(nm, (1, nm))[1]] for nm in vs.names]
    bad = 0
    for i in range(gm.dim):
        for j in range(gm.dim):
            e = gm.entries[j][i]
            if gm.entries[i][j] != tuple(e[swap[t]] for t in range(len(e))):
                bad += 1
    return VerificationReport("Sec2.transpose", scope, _verdict(bad == 0), {"violations": bad})


def degree_criterion(n: int) -> VerificationReport:
    scope = {"n": n, "k": 2}
    if not 1 <= n <= 3:
        return VerificationReport("Lem3.1", scope, SKIP)
    gm = _gram(n)
    bad = sum(
        (sum(gm.entries[i][j]) == n) != (gm.order[i].catalan == gm.order[j].catalan)
        for i in range(gm.dim)
        for j in range(gm.dim)
    )
    return VerificationReport("Lem3.1", scope, _verdict(bad == 0), {"violations": bad})


def nonvanishing(n: int) -> VerificationReport:
    scope = {"n": n, "k": 2}
    if not 1 <= n <= 2:
        return VerificationReport("Thm3.1", scope, SKIP)
    vs = varset(2)
    D = _det(n)
    gm = _gram(n)
    dz = {vs.index["d"], vs.index["z1"]}
    # the only top-degree d,z1-only term must be the diagonal product
    top = [(e, c) for e, c in D.h_truncate(max_degree(n)).terms() if all(x == 0 or i in dz for i, x in enumerate(e))]
    diag = [0] * len(vs)
    for e in gm.diagonal():
        diag = [a + b for a, b in zip(diag, e)]
    # uniqueness step: same Catalan state and a d,z1-only pairing forces equality
    uniq = all(
        gm.order[i] == gm.order[j]
        for i in range(gm.dim)
        for j in range(gm.dim)
        if gm.order[i].catalan == gm.order[j].catalan and all(x == 0 or t in dz for t, x in enumerate(gm.entries[i][j]))
    )
    ok = bool(D) and top == [(tuple(diag), 1)] and uniq
    return VerificationReport("Thm3.1", scope, _verdict(ok), {"nonzero": bool(D), "dz1_top_terms": len(top), "uniqueness": uniq})


def embedding_laws(n: int) -> list[VerificationReport]:
    """Pairings of i0/i1 images for B_{n-1} against G_{n-1}."""
    scope = {"n": n, "k": 2}
    if not 2 <= n <= 3:
        return [VerificationReport("Lem6.1", scope, SKIP), VerificationReport("Lem6.2", scope, SKIP)]
    small = enumerate_diagrams(n - 1, 2)
    i0 = [embed_i(b, 0) for b in small]
    i1 = [embed_i(b, 1) for b in small]
    base = submatrix(small, small)
    d = varset(2).index["d"]
    cross = submatrix(i0, i1) == base and submatrix(i1, i0) == base
    scaled = [[tuple(x + (t == d) for t, x in enumerate(e)) for e in row] for row in base]
    diag = submatrix(i0, i0) == scaled and submatrix(i1, i1) == scaled
    return [VerificationReport("Lem6.1", scope, _verdict(cross)), VerificationReport("Lem6.2", scope, _verdict(diag))]


def contraction_identity(n: int) -> VerificationReport:
    """``<b, i_s(c)> = m * <p_s(b), c>`` with ``m`` the closed-curve scalar, all slots."""
    scope = {"n": n, "k": 2}
    if not 2 <= n <= 3:
        return VerificationReport("Prop2.1", scope, SKIP)
    vs = varset(2)
    big, small = enumerate_diagrams(n, 2), enumerate_diagrams(n - 1, 2)
    bad = 0
    for s in range(2 * n):
        for b in big:
            c_b, marker = contract_p(b, s)
            t = marker_type(marker, 2)
            extra = vs.index[t.name] if t is not None else None
            for c in small:
                e = list(pair(c_b, c))
                if extra is not None:
                    e[extra] += 1
                bad += pair(b, embed_i(c, s)) != tuple(e)
    return VerificationReport("Prop2.1", scope, _verdict(bad == 0), {"violations": bad, "slots": 2 * n})


def divisibility_check(n: int) -> VerificationReport:
    scope = {"n": n, "k": 2}
    if n != 2:
        return VerificationReport("Thm5.1", scope, SKIP)
    q = _det(2).exact_div(_det(1))
    return VerificationReport("Thm5.1", scope, _verdict(q is not None), {"quotient_terms": len(q) if q is not None else None})


def scalar_check(n: int) -> VerificationReport:
    scope = {"n": n, "k": 2}
    if not 2 <= n <= 3:
        return VerificationReport("Cor5.1", scope, SKIP)
    red = embed_reduce(n)
    ok = set(red.scalars) <= {"1", "d", "x1", "y1", "z2"}
    return VerificationReport("Cor5.1", scope, _verdict(ok), {"scalars": red.scalars})


def reduction_check(n: int) -> VerificationReport:
    """Cross-multiplied identity between det G_n, det G_(n-1) and the reduced block."""
    scope = {"n": n, "k": 2}
    if n != 2:
        return VerificationReport("Thm6.1", scope, SKIP)
    vs = varset(2)
    u = 1 - vs.var("d") ** 2
    red = embed_reduce(n)
    cleared, power = red.cleared_matrix()
    dn = det(cleared)
    lhs = red.sign * u ** red.m * _det(n - 1) ** 2 * dn
    ok = lhs == _det(n) * u ** power
    held, _ = multiplicity(dn, u)
    witness = {
        "reduced_dim": len(red.reduced),
        "clearing_power": power,
        "power_in_cleared_det": held,
        "minimal_inverse_power": power - held,
        "scalars": red.scalars,
    }
    return VerificationReport("Thm6.1", scope, _verdict(ok and len(red.reduced) == diagram_count(n, 2) - 2 * diagram_count(n - 1, 2)), witness)


# ---------------------------------------------------------------- registry


@dataclass(frozen=True)
class Claim:
    id: str
    summary: str
    run: Callable[[int], VerificationReport | list[VerificationReport]]
    default_n: int


def _single(fn: Callable[[], VerificationReport | list[VerificationReport]]):
    return lambda n: fn()


def _pick(claim_id: str, fn: Callable[[int], list[VerificationReport]]):
    def run(n: int) -> VerificationReport:
        return next(r for r in fn(n) if r.claim == claim_id)

    return run


def _conj2_default(n: int) -> VerificationReport:
    return conjecture_two(n, [parse(varset(2), t) for t, _ in goldens.DET_G1_FACTORS[1]])


def _conj3_default(n: int) -> VerificationReport:
    if not 1 <= n <= 2:
        return VerificationReport("Conj3", {"n": n, "k": 2}, SKIP)
    return conjecture_three(n, default_candidate(n))


def _claims() -> dict[str, Claim]:
    items = [
        Claim("Sec1.count", "diagram counts match (n+1)^(k-1) C(2n,n)", count_check, 4),
        Claim("Sec2.G1", "G1 matches the recorded 4x4 matrix and factored determinant", _single(g1_display_check), 1),
        Claim("Sec2.transpose", "transpose of G_n equals h_t applied entrywise", transpose_law, 3),
        Claim("Sec2.zero", "all-zero specialization has determinant 0", _pick("Sec2.zero", lambda n: substitution_goldens()), 1),
        Claim("Prop2.1", "contraction identity at every slot", contraction_identity, 3),
        Claim("Lem3.1", "maximal degree iff equal Catalan states", degree_criterion, 3),
        Claim("Thm3.1", "det G_n is nonzero with the diagonal as unique d,z1 top term", nonvanishing, 2),
        Claim("Thm4.1", "diagonal product exponents", check_delta, 4),
        Claim("Prop4.1", "top-degree part equals the product of Catalan blocks", highest_terms_check, 3),
        Claim("Cor5.1", "elimination scalars lie in {1, d, x1, y1, z2}", scalar_check, 2),
        Claim("Thm5.1", "det G1 divides det G2", divisibility_check, 2),
        Claim("Lem6.1", "<i0 B, i1 B> = <i1 B, i0 B> = G_(n-1)", _pick("Lem6.1", embedding_laws), 3),
        Claim("Lem6.2", "<i0 B, i0 B> = <i1 B, i1 B> = d G_(n-1)", _pick("Lem6.2", embedding_laws), 3),
        Claim("Thm6.1", "localized reduction identity", reduction_check, 2),
        Claim("Thm7.1", "annulus determinant is the Chebyshev product", type_b_check, 3),
        Claim("Conj1", "det G1^C(2n,n-1) divides det G_n", conjecture_one, 2),
        Claim("Conj2", "H_1^(2n) divides det G_n", _conj2_default, 2),
        Claim("Conj3", "det G_n = u^2 - v^2 with u in R1, v in R2", _conj3_default, 1),
        Claim("Sec7.1.diag", "three-hole diagonal product shape", three_hole_diagonal, 2),
        Claim("Sec7.1.G1", "three-hole G1 matches the recorded 8x8 matrix", _single(three_hole_matrix_check), 1),
        Claim("App7.2", "G2 matches the recorded 18x18 matrix", _single(g2_matrix_check), 2),
        Claim("App7.4", "det G2 equals the recorded factored form", _single(det_g2_check), 2),
        Claim("App7.6", "specialized det G3 equals the recorded factored form", _pick("App7.6", lambda n: substitution_goldens()), 3),
        Claim("App7.7", "specialized three-hole det G1 equals the recorded factored form", _pick("App7.7", lambda n: substitution_goldens()), 1),
    ]
    for name in ("h1", "h2", "h3", "ht") + G_MAPS:
        items.append(Claim(involution_claim_id(name), f"determinant sign under {name}", partial(_involution_run, name), 2))
    return {c.id: c for c in items}


REGISTRY: dict[str, Claim] = _claims()


def run_claim(claim_id: str, n: int | None = None) -> list[VerificationReport]:
    if claim_id not in REGISTRY:
        raise KeyError(f"unknown claim {claim_id!r}; known: {', '.join(sorted(REGISTRY))}")
    c = REGISTRY[claim_id]
    start = time.perf_counter()
    res = c.run(c.default_n if n is None else n)
    reports = res if isinstance(res, list) else [res]
    for r in reports:
        if not r.elapsed_seconds:
            r.elapsed_seconds = round(time.perf_counter() - start, 3)
        r.elapsed_seconds = round(r.elapsed_seconds, 3)
    return reports


def _run_one(args: tuple[str, int | None]) -> list[VerificationReport]:
    return run_claim(*args)


def run_claims(ids: Iterable[str] | None = None, n: int | None = None, jobs: int = 1) -> list[VerificationReport]:
    """Run claims (all by default) and return reports ordered by claim id."""
    ids = sorted(REGISTRY) if ids is None else list(ids)
    tasks = [(cid, n) for cid in ids]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_run_one, tasks))
    else:
        batches = [_run_one(t) for t in tasks]
    reports = [r for batch in batches for r in batch]
    return sorted(reports, key=lambda r: (r.claim, str(r.scope)))


def summary_table(reports: Sequence[VerificationReport]) -> str:
    width = max([len(r.claim) for r in reports] + [5])
    lines = [f"{'claim':<{width}}  {'verdict':<18}  scope"]
    for r in reports:
        scope = ", ".join(f"{k}={v}" for k, v in r.scope.items() if k != "subst")
        lines.append(f"{r.claim:<{width}}  {r.verdict:<18}  {scope}")
    failed = sum(r.verdict == FAIL for r in reports)
    lines.append(f"{len(reports)} checks, {failed} failed")
    return "\n".join(lines)
