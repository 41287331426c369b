"""Audit of the cross-product 8-form and its invariance defect.

A published alternative construction builds an 8-form on O^2 from the
cross product U x V = conj(u1) x conj(v1) + u2 x v2, where the octonion
cross is x x y = Im(conj(y) x).  The form is a signed sum over S_8 of
products of paired crosses, normalized by 2^-7, or equivalently a sum
over the 315 canonical representatives S*_8 of products of real parts.
This module implements both sums literally, materializes the form's full
coefficient map, and computes the exact invariance defect under the
generator I_7 I_8: the defect is nonzero, so the construction is not
invariant and cannot equal the canonical 8-form in any scaling.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

import numpy as np

from .exterior import AlternatingForm, _merge_sign
from .octonion import Octonion, cross_oct, re_mul
from .operators import Operator16, Vector16, build_involutions, clifford_product
from .report import VerificationReport


def bpt_cross(u: Vector16, v: Vector16) -> Octonion:
    """Cross product on O^2: conjugated in the first slot, plain in the second."""
    return cross_oct(u.x1.conj(), v.x1.conj()) + cross_oct(u.x2, v.x2)


def _perm_sign(perm) -> int:
    inv = sum(
        1
        for a in range(len(perm))
        for b in range(a + 1, len(perm))
        if perm[a] > perm[b]
    )
    return -1 if inv & 1 else 1


@cache
def s8_star() -> tuple:
    """Signed canonical representatives of S_8 modulo pair symmetries.

    Filtered from all of S_8 by the defining inequalities: each of the
    four pairs ascends, the pairs ascend within each half, and the
    halves ascend.  Positions are 0-based.  The census (315 elements,
    every representative starting at the first slot) is asserted at
    build time rather than recorded.
    """
    reps = []
    for perm in itertools.permutations(range(8)):
        if any(perm[2 * i] > perm[2 * i + 1] for i in range(4)):
            continue
        if perm[0] > perm[2] or perm[4] > perm[6] or perm[0] > perm[4]:
            continue
        reps.append((perm, _perm_sign(perm)))
    assert len(reps) == 315
    assert all(perm[0] == 0 for perm, _ in reps)
    return tuple(reps)


@cache
def _s4_signed() -> tuple:
    return tuple(
        (perm, _perm_sign(perm)) for perm in itertools.permutations(range(4))
    )


def _cross_table(vectors) -> dict:
    table = {}
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            table[i, j] = bpt_cross(vectors[i], vectors[j])
    return table


def bpt_8form_reduced(vectors) -> Fraction | int:
    """The 315-term reduced sum of products of two real parts."""
    vs = list(vectors)
    if len(vs) != 8:
        raise ValueError("the 8-form takes eight vectors")
    table = _cross_table(vs)
    total = 0
    for perm, sign in s8_star():
        a = table[perm[0], perm[1]]
        b = table[perm[2], perm[3]]
        first = re_mul(a, b)
        if not first:
            continue
        c = table[perm[4], perm[5]]
        d = table[perm[6], perm[7]]
        second = re_mul(c, d)
        if second:
            total += sign * first * second
    return total


def _signed_cross(table, a: int, b: int) -> Octonion:
    return table[a, b] if a < b else -table[b, a]


def bpt_8form_full(vectors) -> Fraction | int:
    """The 2^-7-normalized sum over all of S_8, with octonion products.

    Factorized over the 70 ways to split the eight slots into two
    blocks of four: the inner signed sums over each block's 24
    arrangements multiply as octonions, and the block interleaving
    contributes the shuffle sign.  The grand total must be a real
    octonion, which is asserted, not assumed.
    """
    vs = list(vectors)
    if len(vs) != 8:
        raise ValueError("the 8-form takes eight vectors")
    table = _cross_table(vs)

    def block_sum(positions) -> Octonion:
        # skewness of the cross folds the 24 arrangements into the three
        # pairings of the block, each in both product orders, times four
        a, b, c, d = positions
        ab, cd = table[a, b], table[c, d]
        ac, bd = table[a, c], table[b, d]
        ad, bc = table[a, d], table[b, c]
        s = (ab * cd + cd * ab) - (ac * bd + bd * ac) + (ad * bc + bc * ad)
        return s.scale(4)

    total = Octonion.zero()
    for first in itertools.combinations(range(8), 4):
        rest = tuple(k for k in range(8) if k not in first)
        fmask = sum(1 << k for k in first)
        rmask = sum(1 << k for k in rest)
        prod = block_sum(first) * block_sum(rest)
        if _merge_sign(fmask, rmask) > 0:
            total = total + prod
        else:
            total = total - prod
    if total.im():
        raise AssertionError("symmetrized cross-product sum is not real")
    value = Fraction(total.re(), 128)
    return int(value) if value.denominator == 1 else value


def bpt_4form(vectors) -> Fraction | int:
    """Signed S_4 sum of the real part of one product of two crosses."""
    vs = list(vectors)
    if len(vs) != 4:
        raise ValueError("the 4-form takes four vectors")
    table = _cross_table(vs)
    total = 0
    for perm, sign in _s4_signed():
        a = _signed_cross(table, perm[0], perm[1])
        b = _signed_cross(table, perm[2], perm[3])
        v = re_mul(a, b)
        if v:
            total += sign * v
    return total


@cache
def _basis_cross_units() -> list:
    """(sign, imaginary index) of each nonzero basis-pair cross product."""
    entries = []
    for a in range(16):
        for b in range(16):
            if a == b:
                continue
            x = bpt_cross(Vector16.basis(a), Vector16.basis(b))
            cs = x.coeffs
            nz = [k for k, v in enumerate(cs) if v]
            if not nz:
                continue
            assert len(nz) == 1 and nz[0] >= 1 and cs[nz[0]] in (1, -1)
            entries.append((a, b, nz[0], cs[nz[0]]))
    return entries


@cache
def _re_pair_table() -> np.ndarray:
    """R[a,b,c,d] = Re[(e_a x e_b)(e_c x e_d)] over the 16 basis vectors."""
    table = np.zeros((16, 16, 16, 16), dtype=np.int8)
    units = _basis_cross_units()
    for a, b, p, s in units:
        for c, d, q, t in units:
            if p == q:
                # the square of an imaginary unit is -1
                table[a, b, c, d] = -s * t
    return table


@cache
def materialize_bpt_8form() -> AlternatingForm:
    """Coefficient map of the cross-product 8-form on all basis 8-tuples.

    Vectorizes the reduced sum: on basis vectors every cross is zero or
    a signed imaginary unit, so each real-part factor is a table lookup
    and the 315-representative sum runs over all 12870 ascending tuples
    at once.  Spot-checked against the scalar evaluators in the tests.
    """
    table = _re_pair_table()
    combos = np.array(
        list(itertools.combinations(range(16), 8)), dtype=np.int64
    )
    cols = [combos[:, k] for k in range(8)]
    acc = np.zeros(len(combos), dtype=np.int64)
    for perm, sign in s8_star():
        first = table[cols[perm[0]], cols[perm[1]], cols[perm[2]], cols[perm[3]]]
        second = table[
            cols[perm[4]], cols[perm[5]], cols[perm[6]], cols[perm[7]]
        ]
        acc += sign * first.astype(np.int64) * second
    terms = {}
    for row, value in zip(combos, acc):
        if value:
            mask = 0
            for k in row:
                mask |= 1 << int(k)
            terms[mask] = int(value)
    return AlternatingForm._raw(8, terms)


@cache
def materialize_bpt_4form() -> AlternatingForm:
    basis = [Vector16.basis(k) for k in range(16)]
    terms = {}
    for combo in itertools.combinations(range(16), 4):
        v = bpt_4form([basis[k] for k in combo])
        if v:
            terms[sum(1 << k for k in combo)] = v
    return AlternatingForm._raw(4, terms)


@dataclass(frozen=True)
class BptDefect:
    """Slotwise invariance defect of the 8-form under I_7 I_8."""

    terms: tuple
    total: Fraction | int


def defect_vectors() -> list:
    """The witness tuple: (0, u_0) followed by (u_0, 0) through (u_6, 0)."""
    return [Vector16.basis(8)] + [Vector16.basis(k) for k in range(7)]


def bpt_invariance_defect() -> BptDefect:
    """Exact slotwise Lie-derivative sum of the 8-form along I_7 I_8.

    A vanishing total for every argument tuple is necessary for
    invariance under the ninth-generator rotation plane; the witness
    tuple produces a nonzero total, refuting invariance.
    """
    fam = build_involutions()
    gen = clifford_product(fam, (7, 8))
    vs = defect_vectors()
    terms = []
    for slot in range(8):
        moved = list(vs)
        moved[slot] = gen.apply(moved[slot])
        terms.append(bpt_8form_reduced(moved))
    total = sum(terms)
    return BptDefect(terms=tuple(terms), total=total)


def bpt_square_check() -> VerificationReport:
    """The 8-form is a constant multiple of the wedge square of the 4-form.

    The constant is computed from the two exact coefficient maps, never
    assumed; the report also certifies that the 4-form itself fails
    I_7 I_8-invariance, so no rescaling rescues either form.
    """
    report = VerificationReport()
    omega8 = materialize_bpt_8form()
    omega4 = materialize_bpt_4form()
    square = omega4.wedge(omega4)
    factor = None
    for (indices, value) in square.items():
        target = omega8.coefficient(indices)
        if value:
            factor = Fraction(target, value)
            break
    proportional = (
        factor is not None and omega8 == square.scale(factor)
    )
    report.add(
        "bpt.square-factor",
        proportional,
        factor=str(factor),
    )
    fam = build_involutions()
    gen = clifford_product(fam, (7, 8))
    report.add(
        "bpt.four-form-not-invariant",
        bool(omega4.lie_derivative(gen)),
    )
    return report


def head_to_head(canonical: AlternatingForm) -> VerificationReport:
    """L along I_7 I_8 moves the cross-product form but fixes the canonical one."""
    report = VerificationReport()
    fam = build_involutions()
    gen = clifford_product(fam, (7, 8))
    report.add(
        "bpt.not-invariant",
        bool(materialize_bpt_8form().lie_derivative(gen)),
    )
    report.add(
        "bpt.canonical-invariant",
        not canonical.lie_derivative(gen),
    )
    return report
