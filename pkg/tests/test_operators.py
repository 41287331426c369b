"""The nine involutions, the graded product basis, and exact isometries."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers import rand_vector
from spin9.linalg import rank
from spin9.operators import (
    Operator16,
    RationalCirclePoint,
    Vector16,
    boost8,
    build_involutions,
    clifford_product,
    commutator,
    inner16,
    lambda_basis,
    rotation,
    sparse_rows,
    apply_sparse,
)

FAM = build_involutions()
IDENT = Operator16.identity()


def _vec_rows(op):
    return {r * 16 + c: v for r, row in enumerate(op.rows)
            for c, v in enumerate(row) if v}


def test_involution_axioms():
    for k in range(9):
        ik = FAM[k]
        assert ik.is_symmetric()
        assert ik @ ik == IDENT
    for k in range(9):
        for l in range(k + 1, 9):
            assert FAM[k] @ FAM[l] == -(FAM[l] @ FAM[k])


def test_involutions_are_isometries():
    rng = random.Random(21)
    for k in range(9):
        for _ in range(5):
            x, y = rand_vector(rng), rand_vector(rng)
            assert inner16(FAM[k].apply(x), FAM[k].apply(y)) == inner16(x, y)


def test_graded_counts_and_independence():
    sizes = []
    for r in range(1, 5):
        ops = lambda_basis(FAM, r)
        sizes.append(len(ops))
        assert rank([_vec_rows(op) for op in ops]) == len(ops)
    assert sizes == [9, 36, 84, 126]


def test_pair_products_are_skew():
    for i in range(9):
        for j in range(i + 1, 9):
            assert clifford_product(FAM, (i, j)).is_skew()


def test_averaging_conjugation_identity():
    # sum_j I_j I_kl I_j = 5 I_kl for every pair
    for k in range(9):
        for l in range(k + 1, 9):
            ikl = clifford_product(FAM, (k, l))
            acc = Operator16.zero()
            for j in range(9):
                acc = acc + FAM[j] @ ikl @ FAM[j]
            assert acc == ikl.scale(5)


def test_triple_product_outside_pair_span():
    pairs = [_vec_rows(clifford_product(FAM, (i, j)))
             for i in range(9) for j in range(i + 1, 9)]
    assert rank(pairs) == 36
    witness = _vec_rows(clifford_product(FAM, (0, 1, 2)))
    assert rank(pairs + [witness]) == 37


def test_pair_commutators_close():
    # [I_ij, I_kl] lies in span{I_pq}: reconstruct via trace projection,
    # using tr(A^T B) with each I_pq of squared norm 16
    pair_ops = [clifford_product(FAM, (i, j))
                for i in range(9) for j in range(i + 1, 9)]
    rng = random.Random(22)
    sample = rng.sample(list(itertools.combinations(pair_ops, 2)), 60)
    for a, b in sample:
        br = commutator(a, b)
        rebuilt = Operator16.zero()
        for p in pair_ops:
            coeff = Fraction((p.transpose() @ br).trace(), 16)
            if coeff:
                rebuilt = rebuilt + p.scale(coeff)
        assert rebuilt == br


def test_conjugated_commutators_disjoint_index():
    # [I_k A, I_k B] = -[A, B] exactly when k avoids both triples
    rng = random.Random(23)
    for _ in range(40):
        k = rng.randrange(9)
        others = [i for i in range(9) if i != k]
        abc = tuple(sorted(rng.sample(others, 3)))
        defs = tuple(sorted(rng.sample(others, 3)))
        lhs = commutator(FAM[k] @ clifford_product(FAM, abc),
                         FAM[k] @ clifford_product(FAM, defs))
        assert lhs == -commutator(clifford_product(FAM, abc),
                                  clifford_product(FAM, defs))


def test_conjugated_commutators_need_disjointness():
    a = clifford_product(FAM, (1, 2, 3))
    b = clifford_product(FAM, (4, 5, 6))
    c = clifford_product(FAM, (1, 4, 5))
    # k inside one triple: the minus-sign form fails
    assert (commutator(FAM[1] @ a, FAM[1] @ b)
            != -commutator(a, b))
    # k inside both triples: the sign flips to plus
    assert (commutator(FAM[1] @ a, FAM[1] @ c)
            == commutator(a, c))


def test_clifford_product_validation():
    with pytest.raises(ValueError):
        clifford_product(FAM, (2, 1))
    with pytest.raises(ValueError):
        clifford_product(FAM, (1, 1))
    with pytest.raises(ValueError):
        clifford_product(FAM, (0, 9))
    assert clifford_product(FAM, (3,)) == FAM[3]
    assert clifford_product(FAM, (0, 1)) @ clifford_product(FAM, (0, 1)) == -IDENT


def test_quadruple_from_commutator():
    # 2 I_{abcd} = [I_a, I_bcd] for distinct indices
    quad = clifford_product(FAM, (0, 2, 5, 7))
    assert quad.scale(2) == commutator(FAM[0], clifford_product(FAM, (2, 5, 7)))


circle_params = st.tuples(st.integers(-9, 9), st.integers(1, 9))


@given(circle_params)
def test_rotation_is_orthogonal(param):
    # rational circle points from the tangent half-angle parametrization
    num, den = param
    c = Fraction(den * den - num * num, den * den + num * num)
    s = Fraction(2 * num * den, den * den + num * num)
    p = RationalCirclePoint(c, s)
    rot = rotation(FAM, 1, 4, p)
    assert rot.transpose() @ rot == IDENT


def test_rotation_validation():
    p = RationalCirclePoint(Fraction(3, 5), Fraction(4, 5))
    with pytest.raises(ValueError):
        rotation(FAM, 4, 1, p)
    with pytest.raises(ValueError):
        rotation(FAM, 1, 1, p)
    boost_pt = RationalCirclePoint(Fraction(5, 4), Fraction(3, 4))
    with pytest.raises(ValueError):
        rotation(FAM, 1, 4, boost_pt)
    with pytest.raises(ValueError):
        boost8(FAM, p)


def test_circle_point_validation():
    RationalCirclePoint(Fraction(3, 5), Fraction(4, 5))
    RationalCirclePoint(Fraction(5, 4), Fraction(3, 4))
    RationalCirclePoint(1, 0)
    with pytest.raises(ValueError):
        RationalCirclePoint(1, 1)
    with pytest.raises(ValueError):
        RationalCirclePoint(Fraction(-5, 4), Fraction(3, 4))


def test_boost_preserves_quadratic_form():
    # c Id + s I_8 rescales the two octonion lines by reciprocal factors
    p = RationalCirclePoint(Fraction(5, 4), Fraction(3, 4))
    b = boost8(FAM, p)
    lo = b.apply(Vector16.basis(0))
    hi = b.apply(Vector16.basis(8))
    assert lo == Vector16.basis(0).scale(p.c - p.s)
    assert hi == Vector16.basis(8).scale(p.c + p.s)
    assert (p.c + p.s) * (p.c - p.s) == 1


def test_sparse_rows_round_trip():
    rng = random.Random(24)
    op = clifford_product(FAM, (2, 6))
    rows = sparse_rows(op)
    for _ in range(10):
        v = rand_vector(rng)
        assert tuple(apply_sparse(rows, v.coords())) == op.apply(v).coords()
