from __future__ import annotations

import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gramholes import goldens
from gramholes.gram import gram_matrix
from gramholes.polyring import Polynomial, parse, varset
from gramholes.symdet import (
    DeterminantError,
    LocalizedEntry,
    MemoryGuardError,
    choose_engine,
    cyclotomic,
    det,
    det_bareiss,
    det_gram,
    det_minors,
    divides_check,
    embed_reduce,
    gram_det,
    integer_det,
    multiplicity,
)
from gramholes.gram import ResourceCapError
from gramholes.verify import _det, _key

from oracles import evaluate_exponent_matrix, fraction_det, random_points

VS = varset(2)
small_polys = st.dictionaries(
    st.tuples(*[st.integers(0, 2)] * len(VS)), st.integers(-4, 4).filter(bool), max_size=3
).map(lambda t: Polynomial.from_terms(VS, t))


@st.composite
def poly_matrices(draw, max_dim=4):
    m = draw(st.integers(1, max_dim))
    return [[draw(small_polys) for _ in range(m)] for _ in range(m)]


def value(p: Polynomial, pt) -> int:
    return p.evaluate(pt)


@settings(max_examples=60, deadline=None)
@given(M=poly_matrices(), pt=st.lists(st.integers(-5, 5), min_size=8, max_size=8))
def test_engines_agree_with_rational_oracle(M, pt):
    a, b = det_bareiss(M, VS), det_minors(M, VS)
    assert a == b
    assert a.evaluate(pt) == fraction_det([[value(p, pt) for p in row] for row in M])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=5, max_size=5), min_size=5, max_size=5))
def test_integer_det_matches_rational_oracle(M):
    assert integer_det(M) == fraction_det(M)


def test_degenerate_matrices():
    z, one, d = Polynomial.zero(VS), Polynomial.one(VS), VS.var("d")
    assert det([], vs=VS) == one
    assert det([[d]]) == d
    assert det_bareiss([[z, d], [z, one]]) == z
    assert det_bareiss([[z, d], [d, one]]) == -d * d
    assert det_minors([[z, d], [d, one]]) == -d * d
    with pytest.raises(ValueError):
        det([[d, d]])
    with pytest.raises(ValueError):
        det([[d]], engine="magic")
    with pytest.raises(ValueError):
        det([[d, varset(1).var("d")], [d, d]])


def test_minors_guards():
    d = VS.var("d")
    M = [[d + i * j for j in range(8)] for i in range(8)]
    with pytest.raises(MemoryGuardError):
        det_minors(M, term_budget=10)
    assert isinstance(MemoryGuardError("x"), ResourceCapError)
    # auto falls back to elimination when the memo table would blow up
    big = [[d ** ((i * j) % 3) + i - j for j in range(6)] for i in range(6)]
    assert det(big, "auto") == det_bareiss(big)
    assert issubclass(DeterminantError, ArithmeticError)


def test_engine_choice():
    d = VS.var("d")
    assert choose_engine([[d + 1] * 10] * 10) == "minors"
    assert choose_engine([[d] * 18] * 18) == "minors"
    assert choose_engine([[d + 1] * 18] * 18) == "bareiss"
    assert choose_engine([[d] * 21] * 21) == "bareiss"


def test_cyclotomic():
    assert cyclotomic(1) == [-1, 1]
    assert cyclotomic(4) == [1, 0, 1]
    assert cyclotomic(6) == [1, -1, 1]
    assert len(cyclotomic(12)) == 5


# determinant, its Gram matrix and the variables pinned to zero
CASES = {
    "G1": (1, 2, {}),
    "B1": (1, 1, {}),
    "B2": (2, 1, {}),
    "B3": (3, 1, {}),
    "three-hole G1": (1, 3, {}),
    "G2": (2, 2, {}),
    "G3 specialized": (3, 2, dict(goldens.G3_SPECIAL_SUBST)),
}


@pytest.mark.parametrize("name", list(CASES))
def test_twenty_point_oracle(name):
    n, k, zero = CASES[name]
    gm = gram_matrix(n, k)
    vs = gm.vs
    D = _det(n, k, _key(zero))
    pinned = [vs.index[v] for v in zero]
    for pt in random_points(len(vs), 20, seed=n * 10 + k):
        for i in pinned:
            pt[i] = 0
        assert D.evaluate(pt) == fraction_det(evaluate_exponent_matrix(gm.entries, pt))


@pytest.mark.parametrize("n,k", [(1, 2), (2, 1), (3, 1), (1, 3)])
def test_engines_and_block_split_agree(n, k):
    gm = gram_matrix(n, k)
    ref = det_gram(gm, "bareiss", symmetry=False).poly
    assert det_gram(gm, "minors", symmetry=False).poly == ref
    assert det_gram(gm, "bareiss", symmetry=True).poly == ref
    assert det_gram(gm, "minors", symmetry=True).poly == ref
    assert det_gram(gm, "auto").poly == ref


def test_g2_engines_agree_on_blocks():
    gm = gram_matrix(2, 2)
    assert det_gram(gm, "bareiss").poly == det_gram(gm, "minors").poly == _det(2)


def test_substituted_engines_agree():
    gm = gram_matrix(2, 2)
    b = {"x1": 0, "y2": parse(VS, "d - 1"), "z3": 2}
    full = _det(2).substitute(b)
    assert det_gram(gm, "bareiss", b).poly == full
    assert det_gram(gm, "minors", b, symmetry=False).poly == full


def test_provenance():
    res = det_gram(gram_matrix(1, 2), bindings={"x1": 0})
    assert res.provenance["matrix"] == "G(n=1,k=2)|x1=0"
    assert res.provenance["engine"] == "minors"
    assert set(res.to_json()) == {"determinant", "matrix", "engine", "rotation_blocks", "elapsed_seconds"}


def test_det_cap():
    with pytest.raises(ResourceCapError):
        gram_det(4, 2)
    with pytest.raises(ResourceCapError):
        gram_det(2, 2, cap=17)


def test_divisibility_helpers():
    a, b = parse(VS, "d + x1"), parse(VS, "z1 - y2")
    p = a**3 * b
    res = divides_check(p, a, 3)
    assert res.divides and res.achieved == 3 and res.quotients[-1] == b
    res = divides_check(p, a, 4)
    assert not res.divides and res.achieved == 3
    e, rest = multiplicity(p, a)
    assert (e, rest) == (3, b)
    with pytest.raises(ValueError):
        multiplicity(p, Polynomial.const(VS, -1))


def test_localized_entries():
    d = VS.var("d")
    u = 1 - d * d
    x = LocalizedEntry(u * d, 2)
    assert (x.numerator, x.denom_power) == (d, 1)
    y = LocalizedEntry(Polynomial.one(VS), 1)
    s = x + y
    assert s.denom_power == 1 and s.numerator == d + 1
    assert (x * y).denom_power == 2
    assert (x - x).denom_power == 0 and not (x - x)
    assert x.cleared(3) == d * u * u
    with pytest.raises(ValueError):
        x.cleared(0)
    with pytest.raises(ValueError):
        LocalizedEntry(d, -1)


def test_embed_reduce_identity():
    red = embed_reduce(2)
    d = VS.var("d")
    u = 1 - d * d
    rows, power = red.cleared_matrix()
    assert len(red.reduced) == 10
    assert (red.m, red.sign, power) == (4, 1, 10)
    lhs = red.sign * u**red.m * _det(1) ** 2 * det(rows)
    assert lhs == _det(2) * u**power
    assert red.scalars == {"1": 5, "d": 4, "x1": 2, "y1": 2, "z2": 1}


def test_full_g2_is_fast_with_blocks():
    start = time.perf_counter()
    res = det_gram(gram_matrix(2, 2))
    assert time.perf_counter() - start < 60
    assert res.provenance["rotation_blocks"] == [5, 5, 8]
    assert len(res.poly) == 446559
