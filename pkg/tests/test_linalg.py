"""Sparse integer elimination against a dense Fraction oracle."""

import random
from fractions import Fraction
from math import gcd

from hypothesis import given, settings, strategies as st

from helpers import dense_rank
from spin9.linalg import (
    det,
    int_echelon,
    modp_independent_rows,
    nullspace,
    rank,
    reduce_against,
    row_to_int,
)


def _random_rows(rng, nrows, ncols, density=0.6, span=5):
    rows = []
    for _ in range(nrows):
        row = {c: rng.randint(-span, span) for c in range(ncols)
               if rng.random() < density}
        rows.append({c: v for c, v in row.items() if v})
    return rows


def test_rank_known_matrices():
    assert rank([{0: 1, 1: 2}, {0: 2, 1: 4}]) == 1
    assert rank([{0: 1}, {1: 1}, {0: 1, 1: 1}]) == 2
    assert rank([]) == 0
    assert rank([{}]) == 0


def test_row_to_int_clears_denominators():
    row = {0: Fraction(1, 2), 3: Fraction(-2, 3)}
    cleared = row_to_int(row)
    assert all(isinstance(v, int) for v in cleared.values())
    assert cleared[0] * Fraction(-2, 3) == cleared[3] * Fraction(1, 2)
    g = gcd(*(abs(v) for v in cleared.values()))
    assert g == 1


def test_nullspace_known_system():
    # x0 + x1 + x2 = 0, x0 - x1 = 0  ->  span{(1, 1, -2)}
    vecs = nullspace([{0: 1, 1: 1, 2: 1}, {0: 1, 1: -1}], 3)
    assert len(vecs) == 1
    v = vecs[0]
    assert v[0] == v[1] and v[2] == -2 * v[0]
    g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]))
    assert g == 1


def test_nullspace_vectors_satisfy_system():
    rng = random.Random(31)
    for _ in range(20):
        rows = _random_rows(rng, 6, 8)
        for v in nullspace(rows, 8):
            assert any(v)
            for row in rows:
                assert sum(coef * v[c] for c, coef in row.items()) == 0


def test_rank_nullity_on_random_systems():
    rng = random.Random(32)
    for _ in range(20):
        rows = _random_rows(rng, 7, 9)
        r = rank(rows)
        n = len(nullspace(rows, 9))
        assert r + n == 9
        assert r == dense_rank(rows, 9)


def test_reduce_against_detects_membership():
    rows = [{0: 1, 1: 2}, {2: 3, 3: 1}]
    ech = int_echelon(rows)
    assert not reduce_against(ech, {0: 2, 1: 4, 2: 3, 3: 1})
    assert reduce_against(ech, {0: 1, 1: 1})


def test_modp_preselection_matches_exact_rank():
    rng = random.Random(33)
    for _ in range(15):
        rows = _random_rows(rng, 8, 6)
        idx = modp_independent_rows(rows, 6)
        # selected rows are genuinely independent for any prime
        assert rank([rows[i] for i in idx]) == len(idx)
        assert len(idx) <= rank(rows)


def test_det_known_values():
    assert det([[2, 1], [1, 1]]) == 1
    assert det([[1, 2], [2, 4]]) == 0
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[Fraction(1, 2), 0], [0, Fraction(1, 3)]]) == Fraction(1, 6)


small_matrix = st.lists(
    st.lists(st.integers(-3, 3), min_size=5, max_size=5),
    min_size=5,
    max_size=5,
)


@given(small_matrix)
@settings(max_examples=60)
def test_rank_matches_dense_oracle(mat):
    rows = [{c: v for c, v in enumerate(row) if v} for row in mat]
    assert rank(rows) == dense_rank(rows, 5)


@given(small_matrix)
@settings(max_examples=40)
def test_echelon_row_space_membership(mat):
    rows = [{c: v for c, v in enumerate(row) if v} for row in mat]
    ech = int_echelon(rows)
    for row in rows:
        assert not reduce_against(ech, dict(row))
