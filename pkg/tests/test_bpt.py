"""The competing cross-product 8-form: census, defect, and factorization."""

import itertools
import random
from fractions import Fraction

from helpers import rand_fraction_vector, rand_vector
from spin9.bpt import (
    bpt_4form,
    bpt_8form_full,
    bpt_8form_reduced,
    bpt_cross,
    bpt_invariance_defect,
    bpt_square_check,
    defect_vectors,
    head_to_head,
    materialize_bpt_4form,
    materialize_bpt_8form,
    s8_star,
)
from spin9.octonion import Octonion, cross_oct
from spin9.operators import Vector16, build_involutions, clifford_product

FAM = build_involutions()


def test_permutation_census():
    perms = s8_star()
    assert len(perms) == 315
    seen = set()
    for perm, sign in perms:
        assert perm[0] == 0
        assert perm[0] < perm[1] and perm[2] < perm[3]
        assert perm[4] < perm[5] and perm[6] < perm[7]
        assert perm[0] < perm[2] and perm[4] < perm[6]
        assert perm[0] < perm[4]
        assert sign in (1, -1)
        assert perm not in seen
        seen.add(perm)


def test_census_against_direct_count():
    # 7!! * (3!!)^2-style pairing count: 105 pair partitions of 8 into
    # blocks of two pairs, times 3 orderings inside, collapse to 315
    count = 0
    for perm in itertools.permutations(range(8)):
        if any(perm[2 * i] > perm[2 * i + 1] for i in range(4)):
            continue
        if perm[0] > perm[2] or perm[4] > perm[6] or perm[0] > perm[4]:
            continue
        count += 1
    assert count == 315


def test_cross_on_pair_vectors():
    rng = random.Random(81)
    for _ in range(20):
        u, v = rand_vector(rng), rand_vector(rng)
        expected = cross_oct(u.x1.conj(), v.x1.conj()) + cross_oct(u.x2, v.x2)
        assert bpt_cross(u, v) == expected
        assert bpt_cross(u, v) == -bpt_cross(v, u)
        assert not bpt_cross(u, u)


def test_full_and_reduced_sums_agree_on_basis():
    rng = random.Random(82)
    for _ in range(15):
        vs = [Vector16.basis(k) for k in rng.sample(range(16), 8)]
        assert bpt_8form_full(vs) == bpt_8form_reduced(vs)


def test_full_and_reduced_sums_agree_on_random():
    rng = random.Random(83)
    for _ in range(6):
        vs = [rand_vector(rng, span=2) for _ in range(8)]
        assert bpt_8form_full(vs) == bpt_8form_reduced(vs)
    vs = [rand_fraction_vector(rng) for _ in range(8)]
    assert bpt_8form_full(vs) == bpt_8form_reduced(vs)


def test_materialized_form_matches_evaluator():
    form = materialize_bpt_8form()
    assert form.term_count() == 870
    assert form.coefficient((0, 1, 2, 3, 4, 5, 6, 7)) == -63
    rng = random.Random(84)
    for _ in range(25):
        idx = sorted(rng.sample(range(16), 8))
        vs = [Vector16.basis(k) for k in idx]
        assert form.coefficient(tuple(idx)) == bpt_8form_reduced(vs)
    for _ in range(3):
        vs = [rand_vector(rng, span=2) for _ in range(8)]
        assert form.evaluate(vs) == bpt_8form_reduced(vs)


def test_alternating_under_argument_swap():
    rng = random.Random(85)
    vs = [rand_vector(rng, span=2) for _ in range(8)]
    swapped = [vs[1], vs[0]] + vs[2:]
    assert bpt_8form_reduced(swapped) == -bpt_8form_reduced(vs)
    assert bpt_8form_reduced([vs[0]] * 2 + vs[2:]) == 0


def test_invariance_defect_values():
    defect = bpt_invariance_defect()
    assert defect.terms == (63, -9, 9, 9, 9, 9, 9, 9)
    assert defect.total == 108
    assert sum(defect.terms) == defect.total


def test_defect_witness_vectors():
    vs = defect_vectors()
    assert vs[0] == Vector16(Octonion.zero(), Octonion.unit(0))
    for k in range(7):
        assert vs[k + 1] == Vector16(Octonion.unit(k), Octonion.zero())
    gen = clifford_product(FAM, (7, 8))
    moved = gen.apply(vs[0])
    assert moved == Vector16(Octonion.unit(7), Octonion.zero())


def test_square_factorization():
    rep = bpt_square_check()
    assert rep.passed
    details = {c.check_id: dict(c.details) for c in rep.checks}
    factor = details["bpt.square-factor"]["factor"]
    assert Fraction(factor) == Fraction(1, 128)


def test_four_form_materialization():
    form = materialize_bpt_4form()
    rng = random.Random(86)
    for _ in range(15):
        idx = sorted(rng.sample(range(16), 4))
        vs = [Vector16.basis(k) for k in idx]
        assert form.coefficient(tuple(idx)) == bpt_4form(vs)


def test_head_to_head(omega8):
    rep = head_to_head(omega8)
    assert rep.passed
    ids = {c.check_id for c in rep.checks}
    assert "bpt.not-invariant" in ids
    assert "bpt.canonical-invariant" in ids
