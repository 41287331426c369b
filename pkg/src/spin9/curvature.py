"""Curvature operator of the rank-one model space built on the involutions.

Four equivalent expressions for the curvature with scale c:

  * the two-form expansion  R_XY Z = -(c/4) sum_{i<j} omega_ij(X, Y) I_i I_j Z,
  * the octonion-pair formula of Brown-Gray, R = S_XY - S_YX,
  * its operator rewriting through S'_XY Z = -(c/4)(3 g(Y,Z) X + sum_i g(I_i Y, Z) I_i X),
  * the octonion form of S'.

The module also provides the averaging identity 5 R_XY = sum_j I_j R_XY I_j
and exact sectional curvature, pinched between c/4 and c on the nose.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from itertools import combinations
from typing import Union

from .canonical import _pair_sp
from .octonion import Octonion, inner_oct
from .operators import (
    Operator16,
    Vector16,
    build_involutions,
    inner16,
)
from .report import VerificationReport

Num = Union[int, Fraction]


def _require_scale(c: Num) -> Num:
    if not c:
        raise ValueError("curvature scale c must be nonzero")
    return c


@functools.cache
def _pairs():
    return tuple(combinations(range(9), 2))


def _sp_apply_coords(sp, coords):
    perm, sign = sp
    out = [0] * 16
    for t in range(16):
        v = coords[t]
        if v:
            out[perm[t]] = sign[t] * v
    return out


def curvature_omega(x: Vector16, y: Vector16, z: Vector16, c: Num) -> Vector16:
    """R_XY Z via the two-form expansion over the 36 involution pairs."""
    _require_scale(c)
    cx, cy, cz = x.coords(), y.coords(), z.coords()
    total = [0] * 16
    for i, j in _pairs():
        sp = _pair_sp(i, j)
        iy = _sp_apply_coords(sp, cy)
        coeff = sum(p * q for p, q in zip(cx, iy))
        if coeff:
            iz = _sp_apply_coords(sp, cz)
            total = [t + coeff * v for t, v in zip(total, iz)]
    scale = -Fraction(c, 4)
    return Vector16.from_coords([scale * t for t in total])


def _brown_gray_s(x: Vector16, y: Vector16, z: Vector16, c: Num) -> Vector16:
    """S_XY Z in octonion pairs; the curvature is its antisymmetrization."""
    x1, x2 = x.x1, x.x2
    y1, y2 = y.x1, y.x2
    z1, z2 = z.x1, z.x2
    first = (
        x1.scale(4 * inner_oct(y1, z1))
        + (z1 * y2) * x2.conj()
        + (x1 * y2) * z2.conj()
    )
    second = (
        x2.scale(4 * inner_oct(y2, z2))
        + x1.conj() * (y1 * z2)
        + z1.conj() * (y1 * x2)
    )
    scale = -Fraction(c, 4)
    return Vector16(first.scale(scale), second.scale(scale))


def curvature_brown_gray(x: Vector16, y: Vector16, z: Vector16, c: Num) -> Vector16:
    _require_scale(c)
    return _brown_gray_s(x, y, z, c) - _brown_gray_s(y, x, z, c)


def s_prime_operator(x: Vector16, y: Vector16, z: Vector16, c: Num) -> Vector16:
    """S'_XY Z = -(c/4)(3 g(Y,Z) X + sum_i g(I_i Y, Z) I_i X)."""
    _require_scale(c)
    fam = build_involutions()
    cy = y.coords()
    cz = z.coords()
    cx = x.coords()
    total = [3 * inner16(y, z) * v for v in cx]
    for i in range(9):
        sp = fam.signed[i]
        iy = _sp_apply_coords(sp, cy)
        coeff = sum(p * q for p, q in zip(iy, cz))
        if coeff:
            ix = _sp_apply_coords(sp, cx)
            total = [t + coeff * v for t, v in zip(total, ix)]
    scale = -Fraction(c, 4)
    return Vector16.from_coords([scale * t for t in total])


def s_prime_octonion(x: Vector16, y: Vector16, z: Vector16, c: Num) -> Vector16:
    """The same S' written through octonion products."""
    _require_scale(c)
    x1, x2 = x.x1, x.x2
    y1, y2 = y.x1, y.x2
    z1, z2 = z.x1, z.x2
    first = (
        (x1 * y1.conj()) * z1
        + (x1 * y2) * z2.conj()
        + (z1 * y1.conj()) * x1
        + (z1 * y2) * x2.conj()
    )
    second = (
        z1.conj() * (y1 * x2)
        + z2 * (y2.conj() * x2)
        + x2 * (y2.conj() * z2)
        + x1.conj() * (y1 * z2)
    )
    scale = -Fraction(c, 4)
    return Vector16(first.scale(scale), second.scale(scale))


def curvature_prime_operator(x, y, z, c: Num) -> Vector16:
    return s_prime_operator(x, y, z, c) - s_prime_operator(y, x, z, c)


def curvature_prime_octonion(x, y, z, c: Num) -> Vector16:
    return s_prime_octonion(x, y, z, c) - s_prime_octonion(y, x, z, c)


def averaging_identity(x: Vector16, y: Vector16, z: Vector16, c: Num) -> VerificationReport:
    """Check 5 R_XY Z = sum_j I_j R_XY (I_j Z) for the given arguments."""
    fam = build_involutions()
    lhs = 5 * curvature_omega(x, y, z, c)
    acc = Vector16.from_coords([0] * 16)
    for j in range(9):
        ij = fam[j]
        acc = acc + ij.apply(curvature_omega(x, y, ij.apply(z), c))
    rep = VerificationReport()
    rep.add("curvature.averaging", lhs == acc)
    return rep


def curvature_entry(x, y, z, w, c: Num) -> Num:
    """The (4,0) tensor R_XYZW = <R_XY Z, W>."""
    return inner16(curvature_omega(x, y, z, c), w)


def sectional_curvature(v: Vector16, w: Vector16, c: Num) -> Fraction:
    """K(v, w) = R_vwvw / (|v|^2 |w|^2 - <v,w>^2) for independent v, w."""
    _require_scale(c)
    gram = inner16(v, v) * inner16(w, w) - inner16(v, w) ** 2
    if not gram:
        raise ValueError("vectors are linearly dependent")
    num = curvature_entry(v, w, v, w, c)
    return Fraction(num) / Fraction(gram)
