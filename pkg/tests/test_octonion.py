"""Octonion arithmetic against an independent dense-quaternion oracle."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers import oct_mul_oracle, rand_octonion
from spin9.octonion import (
    MUL_TABLE,
    Octonion,
    apply_matrix8,
    associator,
    automorphism_from_triple,
    cross_oct,
    inner_oct,
    unit_conj,
    unit_mul,
)

UNITS = [Octonion.unit(k) for k in range(8)]

small_coeffs = st.lists(st.integers(-4, 4), min_size=8, max_size=8)
small_oct = small_coeffs.map(Octonion)


def test_unit_table_matches_doubling_oracle():
    for a, b in itertools.product(range(8), repeat=2):
        got = (UNITS[a] * UNITS[b]).coeffs
        want = oct_mul_oracle(UNITS[a].coeffs, UNITS[b].coeffs)
        assert got == tuple(want)


def test_hand_checked_products():
    # quaternion block, doubling products, and the e-block sign
    assert UNITS[1] * UNITS[2] == UNITS[3]
    assert UNITS[2] * UNITS[1] == -UNITS[3]
    assert UNITS[1] * UNITS[4] == UNITS[5]
    assert UNITS[2] * UNITS[4] == UNITS[6]
    assert UNITS[3] * UNITS[4] == UNITS[7]
    assert UNITS[4] * UNITS[4] == -UNITS[0]
    assert UNITS[5] * UNITS[1] == UNITS[4]
    for k in range(1, 8):
        assert UNITS[k] * UNITS[k] == -UNITS[0]


@given(small_oct, small_oct)
def test_dense_product_matches_oracle(x, y):
    assert (x * y).coeffs == oct_mul_oracle(x.coeffs, y.coeffs)


def test_unit_mul_signed_pairs():
    for a in range(8):
        for b in range(8):
            s, k = MUL_TABLE[a][b]
            assert unit_mul((1, a), (1, b)) == (s, k)
            assert unit_mul((-1, a), (1, b)) == (-s, k)
    assert unit_conj((1, 0)) == (1, 0)
    assert unit_conj((1, 3)) == (-1, 3)


def test_anticommuting_imaginary_units():
    for a in range(1, 8):
        for b in range(1, 8):
            if a != b:
                assert UNITS[a] * UNITS[b] == -(UNITS[b] * UNITS[a])


def test_associator_alternates_on_all_basis_triples():
    # 512 triples: the associator vanishes whenever two slots coincide
    # and is totally antisymmetric in its arguments
    for a, b, c in itertools.product(UNITS, repeat=3):
        t = associator(a, b, c)
        assert associator(b, a, c) == -t
        assert associator(a, c, b) == -t
    for a, b in itertools.product(UNITS, repeat=2):
        assert not associator(a, a, b)
        assert not associator(a, b, b)
        assert not associator(a, b, a)


@given(small_oct, small_oct)
def test_alternative_laws(x, y):
    assert (x * x) * y == x * (x * y)
    assert (x * y) * y == x * (y * y)
    assert (x * y) * x == x * (y * x)


@given(small_oct, small_oct)
def test_norm_composition(x, y):
    assert inner_oct(x * y, x * y) == inner_oct(x, x) * inner_oct(y, y)


@given(small_oct, small_oct)
def test_conjugation_reverses_products(x, y):
    assert (x * y).conj() == y.conj() * x.conj()


@given(small_oct)
def test_conjugation_norm_form(x):
    n = inner_oct(x, x)
    assert x * x.conj() == Octonion.scalar(n)
    assert x.conj() * x == Octonion.scalar(n)


def test_moufang_identity_sampled():
    rng = random.Random(11)
    for _ in range(60):
        x, y, z = (rand_octonion(rng) for _ in range(3))
        assert (x * y) * (z * x) == x * ((y * z) * x)


def test_inner_product_associativity_rules():
    rng = random.Random(12)
    for _ in range(40):
        a, b, c = (rand_octonion(rng) for _ in range(3))
        assert inner_oct(a * b, c) == inner_oct(b, a.conj() * c)
        assert inner_oct(a * b, c) == inner_oct(a, c * b.conj())
        assert inner_oct(a, b) == inner_oct(a.conj(), b.conj())


def test_cross_product_of_units():
    # cross(u, v) = Im(conj(v) u); conj(u2) u1 = -u2 u1 = u3
    assert cross_oct(UNITS[1], UNITS[2]) == UNITS[3]
    assert not cross_oct(UNITS[1], UNITS[1])
    rng = random.Random(13)
    for _ in range(30):
        u, v = rand_octonion(rng), rand_octonion(rng)
        assert cross_oct(u, v) == (v.conj() * u).im()
        assert not cross_oct(u, u)


def test_cross_product_skew():
    rng = random.Random(14)
    for _ in range(30):
        u, v = rand_octonion(rng), rand_octonion(rng)
        assert cross_oct(u, v) == -cross_oct(v, u)


def test_scalar_and_fraction_coefficients():
    x = Octonion([Fraction(1, 2)] + [0] * 7)
    y = Octonion([0, Fraction(2, 3)] + [0] * 6)
    assert x * y == Octonion([0, Fraction(1, 3)] + [0] * 6)
    assert (x + y) - y == x
    assert x.scale(4) == Octonion([2] + [0] * 7)


def test_automorphism_identity_triple():
    rows = automorphism_from_triple((1, 1), (1, 2), (1, 4))
    for k in range(8):
        assert apply_matrix8(rows, UNITS[k]) == UNITS[k]


def test_automorphism_worked_example():
    rows = automorphism_from_triple((1, 2), (1, 1), (1, 4))
    assert apply_matrix8(rows, UNITS[1]) == UNITS[2]
    assert apply_matrix8(rows, UNITS[2]) == UNITS[1]
    assert apply_matrix8(rows, UNITS[4]) == UNITS[4]
    assert apply_matrix8(rows, UNITS[3]) == -UNITS[3]


@pytest.mark.parametrize(
    "triple",
    [
        ((1, 1), (1, 2), (1, 4)),
        ((1, 2), (1, 1), (1, 4)),
        ((-1, 3), (1, 5), (1, 1)),
        ((1, 6), (-1, 2), (1, 5)),
    ],
)
def test_automorphism_preserves_products(triple):
    rows = automorphism_from_triple(*triple)
    for a, b in itertools.product(UNITS, repeat=2):
        fa = apply_matrix8(rows, a)
        fb = apply_matrix8(rows, b)
        assert apply_matrix8(rows, a * b) == fa * fb


def test_automorphism_rejects_bad_triples():
    with pytest.raises(ValueError):
        automorphism_from_triple((1, 0), (1, 2), (1, 4))
    with pytest.raises(ValueError):
        automorphism_from_triple((2, 1), (1, 2), (1, 4))
    with pytest.raises(ValueError):
        automorphism_from_triple((1, 1), (1, 1), (1, 4))
    with pytest.raises(ValueError):
        automorphism_from_triple((1, 1), (-1, 1), (1, 4))
    with pytest.raises(ValueError):
        # third unit must avoid the quaternion algebra of the first two
        automorphism_from_triple((1, 1), (1, 2), (1, 3))


def test_octonion_immutability_and_validation():
    with pytest.raises(ValueError):
        Octonion([1, 2, 3])
    x = Octonion.unit(3)
    with pytest.raises(AttributeError):
        x.coeffs = ()
    with pytest.raises(ValueError):
        Octonion.unit(8)
