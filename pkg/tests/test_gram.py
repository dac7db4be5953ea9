from __future__ import annotations

import json

import pytest

from gramholes.diagrams import diagram_count, enumerate_diagrams, rotate
from gramholes.gram import (
    GramMatrix,
    ResourceCapError,
    catalan_blocks,
    gram_matrix,
    rotation_orbits,
    submatrix,
)
from gramholes.pairing import pair


@pytest.mark.parametrize("n,k", [(1, 2), (2, 2), (1, 3), (2, 1)])
def test_entries_are_pairings(n, k):
    gm = gram_matrix(n, k)
    assert gm.dim == diagram_count(n, k)
    for i, a in enumerate(gm.order):
        for j, b in enumerate(gm.order):
            assert gm.entries[i][j] == pair(a, b)
            assert gm.entry(i, j).is_monomial()


def test_json_round_trip():
    gm = gram_matrix(2, 2)
    again = GramMatrix.from_json(json.loads(gm.dumps()))
    assert again == gm
    assert again.dumps() == gm.dumps()


def test_json_rejects_bad_entries():
    data = gram_matrix(1, 2).to_json()
    data["entries"][0][0] = "d + 1"
    with pytest.raises(ValueError):
        GramMatrix.from_json(data)
    data = gram_matrix(1, 2).to_json()
    data["entries"].pop()
    with pytest.raises(ValueError):
        GramMatrix.from_json(data)


def test_csv_layout():
    gm = gram_matrix(1, 2)
    lines = gm.to_csv().splitlines()
    assert lines[0] == "# n,1,k,2"
    assert lines[1].startswith("# order,")
    assert len(lines) == 2 + gm.dim
    assert lines[2].split(",") == gm.entry_strings()[0]


def test_submatrix_worker_independence():
    ds = enumerate_diagrams(3, 2)
    assert submatrix(ds, ds[:20], jobs=1) == submatrix(ds, ds[:20], jobs=3)
    assert gram_matrix(2, 2, jobs=2) == gram_matrix(2, 2, jobs=1)


def test_submatrix_rejects_mixed_sizes():
    with pytest.raises(ValueError):
        submatrix(enumerate_diagrams(1, 2), enumerate_diagrams(2, 2))


def test_caps():
    with pytest.raises(ResourceCapError):
        gram_matrix(5, 2)
    with pytest.raises(ResourceCapError):
        gram_matrix(3, 2, cap=79)
    assert gram_matrix(3, 2, cap=80).dim == 80
    with pytest.raises(ValueError):
        gram_matrix(0, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_catalan_blocks_partition(n):
    blocks = catalan_blocks(n)
    assert sum(len(ds) for _, ds, _ in blocks) == diagram_count(n, 2)
    for state, ds, m in blocks:
        assert len(ds) == (n + 1) ** 2
        assert all(b.catalan == state for b in ds)
        assert m == submatrix(ds, ds)


@pytest.mark.parametrize("n,k,sizes", [(2, 2, [2, 4, 4, 4, 4]), (3, 2, [2] + [6] * 13)])
def test_rotation_orbits(n, k, sizes):
    gm = gram_matrix(n, k)
    orbits = rotation_orbits(gm.order)
    assert sorted(len(o) for o in orbits) == sorted(sizes)
    for orb in orbits:
        for a, b in zip(orb, orb[1:] + orb[:1]):
            assert rotate(gm.order[a], 1) == gm.order[b]
