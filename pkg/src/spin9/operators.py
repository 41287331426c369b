"""Nine anticommuting symmetric involutions on R^16 and their products.

R^16 is identified with pairs of octonions; the basis is e_k = (u_k, 0)
for k = 0..7 and e_{k+8} = (0, u_k).  The involutions act by

    I_i (x1, x2) = (u_i conj(x2), conj(x1) u_i)   for i = 0..7,
    I_8 (x1, x2) = (-x1, x2),

and satisfy I_i I_j + I_j I_i = 2 delta_ij, I_i symmetric, trace zero.
Products of distinct I_i are signed permutations of the basis, which the
internal helpers exploit; the public surface stays plain exact matrices.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

from .octonion import Octonion, Scalar, inner_oct

Num = Union[int, Fraction]


class Vector16:
    """A point of R^16 as an octonion pair."""

    __slots__ = ("x1", "x2")

    def __init__(self, x1: Octonion, x2: Octonion):
        object.__setattr__(self, "x1", x1)
        object.__setattr__(self, "x2", x2)

    def __setattr__(self, name, value):
        raise AttributeError("Vector16 is immutable")

    @classmethod
    def basis(cls, k: int) -> "Vector16":
        if not 0 <= k <= 15:
            raise ValueError("basis index out of range 0..15")
        if k < 8:
            return cls(Octonion.unit(k), Octonion.zero())
        return cls(Octonion.zero(), Octonion.unit(k - 8))

    @classmethod
    def from_coords(cls, coords: Sequence[Num]) -> "Vector16":
        c = tuple(coords)
        if len(c) != 16:
            raise ValueError("need 16 coordinates")
        return cls(Octonion(c[:8]), Octonion(c[8:]))

    def coords(self) -> tuple:
        return self.x1.coeffs + self.x2.coeffs

    def __add__(self, other: "Vector16") -> "Vector16":
        return Vector16(self.x1 + other.x1, self.x2 + other.x2)

    def __sub__(self, other: "Vector16") -> "Vector16":
        return Vector16(self.x1 - other.x1, self.x2 - other.x2)

    def __neg__(self) -> "Vector16":
        return Vector16(-self.x1, -self.x2)

    def scale(self, t: Num) -> "Vector16":
        return Vector16(self.x1.scale(t), self.x2.scale(t))

    def __rmul__(self, t) -> "Vector16":
        return self.scale(t)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Vector16)
            and self.x1 == other.x1
            and self.x2 == other.x2
        )

    def __hash__(self) -> int:
        return hash((self.x1, self.x2))

    def __bool__(self) -> bool:
        return bool(self.x1) or bool(self.x2)

    def __repr__(self) -> str:
        return f"Vector16({self.x1!r}, {self.x2!r})"


def inner16(x: Vector16, y: Vector16) -> Num:
    return inner_oct(x.x1, y.x1) + inner_oct(x.x2, y.x2)


class Operator16:
    """A linear operator on R^16 as a dense 16x16 exact matrix."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        r = tuple(tuple(row) for row in rows)
        if len(r) != 16 or any(len(row) != 16 for row in r):
            raise ValueError("need a 16x16 matrix")
        object.__setattr__(self, "rows", r)

    def __setattr__(self, name, value):
        raise AttributeError("Operator16 is immutable")

    @classmethod
    def identity(cls, scale: Num = 1) -> "Operator16":
        return cls(
            tuple(
                tuple(scale if a == b else 0 for b in range(16)) for a in range(16)
            )
        )

    @classmethod
    def zero(cls) -> "Operator16":
        return cls(((0,) * 16,) * 16)

    def __add__(self, other: "Operator16") -> "Operator16":
        return Operator16(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __sub__(self, other: "Operator16") -> "Operator16":
        return Operator16(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __neg__(self) -> "Operator16":
        return Operator16(tuple(tuple(-a for a in row) for row in self.rows))

    def scale(self, t: Num) -> "Operator16":
        return Operator16(tuple(tuple(t * a for a in row) for row in self.rows))

    def __rmul__(self, t) -> "Operator16":
        return self.scale(t)

    def __matmul__(self, other: "Operator16") -> "Operator16":
        bcols = tuple(zip(*other.rows))
        return Operator16(
            tuple(
                tuple(sum(x * y for x, y in zip(row, col) if x) for col in bcols)
                for row in self.rows
            )
        )

    def transpose(self) -> "Operator16":
        return Operator16(tuple(zip(*self.rows)))

    def trace(self) -> Num:
        return sum(self.rows[a][a] for a in range(16))

    def is_symmetric(self) -> bool:
        return self.rows == self.transpose().rows

    def is_skew(self) -> bool:
        return self.rows == (-self).transpose().rows

    def apply(self, v: Vector16) -> Vector16:
        c = v.coords()
        out = tuple(sum(r[k] * c[k] for k in range(16) if c[k]) for r in self.rows)
        return Vector16.from_coords(out)

    def det(self) -> Fraction:
        m = [[Fraction(x) for x in row] for row in self.rows]
        d = Fraction(1)
        for col in range(16):
            piv = next((r for r in range(col, 16) if m[r][col]), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                d = -d
            d *= m[col][col]
            inv = 1 / m[col][col]
            for r in range(col + 1, 16):
                if m[r][col]:
                    f = m[r][col] * inv
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return d

    def __eq__(self, other) -> bool:
        return isinstance(other, Operator16) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Operator16({self.rows!r})"


def commutator(a: Operator16, b: Operator16) -> Operator16:
    return a @ b - b @ a


# Signed permutations (perm, sign): op(e_t) = sign[t] * e_perm[t].
# Used internally because products of the involutions stay in this class.


def _sp_compose(a, b):
    pa, sa = a
    pb, sb = b
    return (
        tuple(pa[pb[t]] for t in range(16)),
        tuple(sb[t] * sa[pb[t]] for t in range(16)),
    )


def _sp_to_operator(sp) -> Operator16:
    perm, sign = sp
    rows = [[0] * 16 for _ in range(16)]
    for t in range(16):
        rows[perm[t]][t] = sign[t]
    return Operator16(rows)


_SP_IDENTITY = (tuple(range(16)), (1,) * 16)


@dataclass(frozen=True)
class InvolutionFamily:
    """The nine involutions, with their signed-permutation forms."""

    ops: tuple
    signed: tuple

    def __getitem__(self, i: int) -> Operator16:
        return self.ops[i]


@functools.cache
def build_involutions() -> InvolutionFamily:
    sps = []
    for i in range(8):
        ui = Octonion.unit(i)
        perm = [0] * 16
        sign = [0] * 16
        for b in range(16):
            if b < 8:
                img = Octonion.unit(b).conj() * ui  # low block maps to high
                k = next(t for t in range(8) if img.coeffs[t])
                perm[b], sign[b] = k + 8, img.coeffs[k]
            else:
                img = ui * Octonion.unit(b - 8).conj()
                k = next(t for t in range(8) if img.coeffs[t])
                perm[b], sign[b] = k, img.coeffs[k]
        sps.append((tuple(perm), tuple(sign)))
    sps.append((tuple(range(16)), (-1,) * 8 + (1,) * 8))
    return InvolutionFamily(
        ops=tuple(_sp_to_operator(sp) for sp in sps), signed=tuple(sps)
    )


def _validate_indices(indices) -> tuple:
    idx = tuple(indices)
    if not 1 <= len(idx) <= 4:
        raise ValueError("index tuple length must be 1..4")
    if any(not isinstance(i, int) or not 0 <= i <= 8 for i in idx):
        raise ValueError("indices must be integers in 0..8")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValueError("indices must be strictly increasing")
    return idx


def clifford_product(family: InvolutionFamily, indices) -> Operator16:
    """The product I_{i1} ... I_{ir} for a strictly increasing index tuple."""
    idx = _validate_indices(indices)
    sp = _SP_IDENTITY
    for i in idx:
        sp = _sp_compose(sp, family.signed[i])
    return _sp_to_operator(sp)


def clifford_signed(family: InvolutionFamily, indices):
    """Signed-permutation form of clifford_product, for fast composition."""
    idx = _validate_indices(indices)
    sp = _SP_IDENTITY
    for i in idx:
        sp = _sp_compose(sp, family.signed[i])
    return sp


def lambda_basis(family: InvolutionFamily, r: int) -> list:
    """All products over strictly increasing r-tuples from 0..8."""
    if not 1 <= r <= 4:
        raise ValueError("grade r must be in 1..4")
    return [clifford_product(family, c) for c in combinations(range(9), r)]


@dataclass(frozen=True)
class RationalCirclePoint:
    """Exact point (c, s) on the circle c^2 + s^2 = 1 or the hyperbola c^2 - s^2 = 1."""

    c: Fraction
    s: Fraction

    def __init__(self, c, s):
        object.__setattr__(self, "c", Fraction(c))
        object.__setattr__(self, "s", Fraction(s))
        if not (self.is_rotation or self.is_boost):
            raise ValueError(
                "point satisfies neither c^2 + s^2 = 1 nor (c^2 - s^2 = 1, c >= 1)"
            )

    @property
    def is_rotation(self) -> bool:
        return self.c * self.c + self.s * self.s == 1

    @property
    def is_boost(self) -> bool:
        return self.c * self.c - self.s * self.s == 1 and self.c >= 1


def rotation(
    family: InvolutionFamily, k: int, l: int, p: RationalCirclePoint
) -> Operator16:
    """The rotation c * Id + s * I_k I_l in the plane of the pair (k, l)."""
    if not (isinstance(k, int) and isinstance(l, int) and 0 <= k < l <= 8):
        raise ValueError("need 0 <= k < l <= 8")
    if not p.is_rotation:
        raise ValueError("rotation needs a circle point with c^2 + s^2 = 1")
    return Operator16.identity(p.c) + clifford_product(family, (k, l)).scale(p.s)


def boost8(family: InvolutionFamily, p: RationalCirclePoint) -> Operator16:
    """The boost c * Id + s * I_8, diagonal on the two octonion blocks."""
    if not p.is_boost:
        raise ValueError("boost needs a hyperbola point with c^2 - s^2 = 1, c >= 1")
    return Operator16.identity(p.c) + family[8].scale(p.s)


def sparse_rows(op: Operator16) -> tuple:
    """Rows as tuples of (column, value) with zeros dropped."""
    return tuple(
        tuple((b, x) for b, x in enumerate(row) if x) for row in op.rows
    )


def apply_sparse(rows, coords):
    """Apply sparse_rows output to a coordinate tuple."""
    return tuple(sum(x * coords[b] for b, x in row) for row in rows)
