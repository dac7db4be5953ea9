from __future__ import annotations

from math import comb

import pytest

from gramholes import goldens
from gramholes.polyring import Polynomial, parse, varset
from gramholes.verify import (
    FAIL,
    PASS,
    REGISTRY,
    SKIP,
    _det,
    _key,
    three_hole_zero_subst,
    chebyshev_T,
    check_delta,
    classify_pair,
    conjecture_harness,
    conjecture_one,
    conjecture_three,
    default_candidate,
    delta_diag,
    det_g2_check,
    expand_factored,
    factor_over,
    halves,
    highest_terms_check,
    involution_suite,
    match_permutation,
    max_degree,
    run_claim,
    run_claims,
    substitution_goldens,
    summary_table,
    three_hole_diagonal,
    three_hole_matrix_check,
    type_b_check,
)

VS = varset(2)


@pytest.mark.parametrize("n,expected", [(1, (2, 2)), (2, (20, 16)), (3, (144, 96)), (4, (888, 512))])
def test_delta_table(n, expected):
    assert delta_diag(n) == expected
    assert check_delta(n).verdict == PASS


@pytest.mark.parametrize("n", range(1, 9))
def test_delta_closed_form(n):
    alpha, beta = delta_diag(n)
    assert beta == 2 * n * 4 ** (n - 1)
    assert alpha + beta == n * (n + 1) * comb(2 * n, n) == max_degree(n)


def test_chebyshev():
    vs1 = varset(1)
    assert chebyshev_T(0) == Polynomial.const(vs1, 2)
    assert chebyshev_T(1) == parse(vs1, "d")
    assert chebyshev_T(2) == parse(vs1, "d^2 - 2")
    assert chebyshev_T(3) == parse(vs1, "d^3 - 3*d")
    with pytest.raises(ValueError):
        chebyshev_T(-1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_type_b(n):
    assert type_b_check(n).verdict == PASS


def test_type_b_small_case_by_hand():
    vs1 = varset(1)
    assert _det(1, 1) == parse(vs1, "d^2 - a^2")
    assert type_b_check(4).verdict == SKIP


@pytest.mark.parametrize("n", [1, 2, 3])
def test_involution_suite(n):
    reports = involution_suite(n)
    assert len(reports) == 11
    assert [r.verdict for r in reports] == [PASS] * 11
    signs = [r.witness["sign"] for r in reports]
    if n == 1:
        assert signs == [-1, -1] + [1] * 9
    else:
        assert signs == [1] * 11


@pytest.mark.parametrize("n", [1, 2, 3])
def test_highest_terms(n):
    r = highest_terms_check(n)
    assert r.verdict == PASS, r.witness


def test_substitution_goldens():
    r76, r77, zero = substitution_goldens()
    assert r76.verdict == PASS
    assert zero.verdict == PASS
    # the recorded three-hole product repeats a factor where a neighbouring one is meant
    assert r77.verdict == FAIL


def test_three_hole_special_factor_with_amended_term():
    vs3 = varset(3)
    sign, facs = goldens.THREE_HOLES_SPECIAL_FACTORS
    literal = facs[2][0]
    amended = literal.replace("x{1,-1,-2}*x{1,-1,-2}*x{1,-2,3}", "x{1,-1,2}*x{1,-1,-2}*x{1,-2,3}")
    assert amended != literal
    got = _det(1, 3, _key(three_hole_zero_subst()))
    assert got == expand_factored(vs3, (sign, facs[:2] + [(amended, 2)]))
    assert got != expand_factored(vs3, (sign, facs))


def test_det_g2_against_recorded_product():
    r = det_g2_check()
    # recorded overall sign is off by -1; every factor and exponent agrees
    assert r.verdict == FAIL
    assert r.witness["equals_negated_recorded"] is True


def test_three_hole_matrix_single_entry():
    r = three_hole_matrix_check()
    assert r.verdict == FAIL
    assert r.witness["entry_differences"] == [(6, 3, "1*x{1,-3}", "1*x{-1,3}")]
    assert r.witness["diagonal_multiset_matches"]


def test_conjecture_one():
    r = conjecture_one(2)
    assert r.verdict == PASS
    assert r.witness == {"power": 4, "achieved": 4, "next_power_divides": False}
    assert conjecture_one(1).verdict == PASS
    assert conjecture_one(3).verdict == SKIP


def test_conjecture_harness_requires_candidates():
    reports = conjecture_harness(2)
    assert [r.claim for r in reports] == ["Conj1"]
    with pytest.raises(ValueError):
        conjecture_three(1, None)
    h = [parse(VS, t) for t, _ in goldens.DET_G1_FACTORS[1]]
    reports = conjecture_harness(2, {"H": h, "uv": default_candidate(2)})
    assert [r.claim for r in reports] == ["Conj1", "Conj2", "Conj3"]
    assert reports[1].verdict == PASS


def test_conjecture_three_at_one_hole_pair():
    a, b = (parse(VS, t) for t, _ in goldens.DET_G1_FACTORS[1])
    u, v = halves(a, b)
    assert u * u - v * v == _det(1)
    r = conjecture_three(1, (u, v))
    assert r.witness["det_equals_u2_minus_v2"]
    # h1 exchanges the two halves, so neither lands in its ring
    assert r.witness["h1_swaps_u_and_v"]
    assert r.verdict == FAIL
    # h1 negates det G1 while fixing u^2 - v^2 for any u in R1 and v in R2
    h1 = {"x1": (1, "y1"), "y1": (1, "x1"), "z1": (1, "z3"), "z3": (1, "z1")}
    assert _det(1).var_map(h1) == -_det(1)


def test_classify_pair_on_known_elements():
    d, z2 = VS.var("d"), VS.var("z2")
    cls = classify_pair(d, parse(VS, "z1 - z3"))
    assert cls["u_in_R1"]
    assert cls["v_negated"] == {"h1": True, "h2": True}
    assert not classify_pair(z2, d)["u_in_R1"]


def test_halves_requires_even():
    d = VS.var("d")
    with pytest.raises(ArithmeticError):
        halves(d, Polynomial.one(VS))


def test_factor_over():
    a, b = parse(VS, "d + z1"), parse(VS, "x1 - y2")
    assert factor_over(-(a**2) * b, [a, b]) == (-1, [2, 1])
    assert factor_over(a * b + 1, [a, b]) is None


@pytest.mark.parametrize("n", [1, 2, 3])
def test_three_hole_diagonal(n):
    assert three_hole_diagonal(n).verdict == PASS


def test_match_permutation():
    p = [[parse(VS, x) for x in row] for row in (("d", "x1"), ("x2", "z1"))]
    q = [[parse(VS, x) for x in row] for row in (("z1", "x2"), ("x1", "d"))]
    assert match_permutation(p, q) == [1, 0]
    assert match_permutation(p, [[parse(VS, "d")]]) is None


STRUCTURAL = ["Sec1.count", "Sec2.G1", "Sec2.transpose", "Sec2.zero", "Prop2.1", "Lem3.1", "Thm3.1",
              "Lem6.1", "Lem6.2", "Cor5.1", "Thm5.1", "Thm6.1", "App7.2", "Sec7.1.diag"]


@pytest.mark.parametrize("claim", STRUCTURAL)
def test_structural_claims_pass(claim):
    for r in run_claim(claim):
        assert r.verdict == PASS, r.witness


@pytest.mark.parametrize("claim,n", [("Sec2.transpose", 1), ("Sec2.transpose", 2), ("Lem3.1", 1), ("Lem3.1", 2),
                                     ("Prop2.1", 2), ("Lem6.1", 2), ("Lem6.2", 2), ("Thm3.1", 1)])
def test_structural_claims_at_smaller_n(claim, n):
    assert run_claim(claim, n)[0].verdict == PASS


def test_out_of_range_is_skipped():
    assert run_claim("Thm5.1", 3)[0].verdict == SKIP
    assert run_claim("Conj3", 3)[0].verdict == SKIP
    assert run_claim("Prop4.1", 4)[0].verdict == SKIP


def test_registry_errors_and_summary():
    with pytest.raises(KeyError):
        run_claim("Thm99")
    reports = run_claims(["Thm4.1", "Sec1.count"], n=3)
    assert [r.claim for r in reports] == ["Sec1.count", "Thm4.1"]
    table = summary_table(reports)
    assert table.splitlines()[-1] == "2 checks, 0 failed"


def test_claims_are_worker_count_independent():
    ids = ["Thm4.1", "Lem3.1", "Sec1.count", "Thm7.1"]
    one = [(r.claim, r.verdict, r.witness) for r in run_claims(ids, jobs=1)]
    two = [(r.claim, r.verdict, r.witness) for r in run_claims(ids, jobs=2)]
    assert one == two


def test_every_claim_has_an_id_and_summary():
    assert len(REGISTRY) >= 30
    for cid, c in REGISTRY.items():
        assert c.id == cid and c.summary
