"""Exact octonion arithmetic over the doubled quaternion basis.

The eight basis units are indexed 0..7 in the order

    u0 = 1, u1 = i, u2 = j, u3 = ij, u4 = e, u5 = ie, u6 = je, u7 = (ij)e,

so an octonion is a quaternion pair q1 + q2 e.  The multiplication table
is generated from the quaternion relations together with the doubling
rules

    q1 (q2 e) = (q2 q1) e,
    (q1 e) q2 = (q1 conj(q2)) e,
    (q1 e)(q2 e) = -conj(q2) q1.

Everything is exact: coefficients are ints or fractions.Fraction, never
floats.  All objects here are immutable, so values can be shared freely
across threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

BASIS_NAMES = ("1", "i", "j", "ij", "e", "ie", "je", "(ij)e")

# A signed basis unit is a pair (sign, index) with sign in {+1, -1}.
SignedUnit = tuple


def _quaternion_unit_mul(a: int, b: int) -> tuple[int, int]:
    """Product of quaternion units 1, i, j, k indexed 0..3, as (sign, index)."""
    if a == 0:
        return (1, b)
    if b == 0:
        return (1, a)
    if a == b:
        return (-1, 0)
    c = 6 - a - b
    # cyclic (1,2), (2,3), (3,1) carry +1
    sign = 1 if (a, b) in ((1, 2), (2, 3), (3, 1)) else -1
    return (sign, c)


def _build_mul_table() -> tuple:
    table = []
    for a in range(8):
        al, ah = a % 4, a // 4
        row = []
        for b in range(8):
            bl, bh = b % 4, b // 4
            if ah == 0 and bh == 0:
                s, k = _quaternion_unit_mul(al, bl)
                row.append((s, k))
            elif ah == 0 and bh == 1:
                # q1 (q2 e) = (q2 q1) e
                s, k = _quaternion_unit_mul(bl, al)
                row.append((s, k + 4))
            elif ah == 1 and bh == 0:
                # (q1 e) q2 = (q1 conj(q2)) e
                s, k = _quaternion_unit_mul(al, bl)
                if bl != 0:
                    s = -s
                row.append((s, k + 4))
            else:
                # (q1 e)(q2 e) = -conj(q2) q1
                s, k = _quaternion_unit_mul(bl, al)
                if bl != 0:
                    s = -s
                row.append((-s, k))
        table.append(tuple(row))
    out = tuple(table)
    # consistency of the doubling: u5 = u1 u4, u6 = u2 u4, u7 = u3 u4
    assert out[1][4] == (1, 5) and out[2][4] == (1, 6) and out[3][4] == (1, 7)
    return out


# MUL_TABLE[a][b] = (sign, index) with u_a u_b = sign * u_index
MUL_TABLE = _build_mul_table()


def unit_mul(a: SignedUnit, b: SignedUnit) -> SignedUnit:
    """Product of two signed basis units, as a signed basis unit."""
    s, k = MUL_TABLE[a[1]][b[1]]
    return (a[0] * b[0] * s, k)


def unit_conj(a: SignedUnit) -> SignedUnit:
    return a if a[1] == 0 else (-a[0], a[1])


class Octonion:
    """An octonion with exact rational coefficients on u0..u7."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        c = tuple(coeffs)
        if len(c) != 8:
            raise ValueError("octonion needs exactly 8 coefficients")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("Octonion is immutable")

    @classmethod
    def zero(cls) -> "Octonion":
        return _ZERO

    @classmethod
    def unit(cls, k: int, sign: Scalar = 1) -> "Octonion":
        if not 0 <= k <= 7:
            raise ValueError("basis index out of range 0..7")
        return cls(tuple(sign if t == k else 0 for t in range(8)))

    @classmethod
    def scalar(cls, x: Scalar) -> "Octonion":
        return cls((x, 0, 0, 0, 0, 0, 0, 0))

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Octonion":
        return Octonion(tuple(-a for a in self.coeffs))

    def scale(self, x: Scalar) -> "Octonion":
        return Octonion(tuple(x * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Octonion):
            out = [0] * 8
            for a, ca in enumerate(self.coeffs):
                if not ca:
                    continue
                row = MUL_TABLE[a]
                for b, cb in enumerate(other.coeffs):
                    if not cb:
                        continue
                    s, k = row[b]
                    out[k] += s * ca * cb
            return Octonion(out)
        return self.scale(other)

    def __rmul__(self, other) -> "Octonion":
        return self.scale(other)

    def conj(self) -> "Octonion":
        c = self.coeffs
        return Octonion((c[0],) + tuple(-a for a in c[1:]))

    def re(self) -> Scalar:
        return self.coeffs[0]

    def im(self) -> "Octonion":
        return Octonion((0,) + self.coeffs[1:])

    def __eq__(self, other) -> bool:
        return isinstance(other, Octonion) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}*{BASIS_NAMES[k]}" if k else f"{c}")
        return "Octonion<" + (" + ".join(parts) if parts else "0") + ">"


_ZERO = Octonion((0,) * 8)


def inner_oct(a: Octonion, b: Octonion) -> Scalar:
    """Euclidean inner product; agrees with Re(a conj(b)) for this basis."""
    return sum(x * y for x, y in zip(a.coeffs, b.coeffs))


def re_mul(a: Octonion, b: Octonion) -> Scalar:
    """Re(a b) without forming the full product."""
    ac, bc = a.coeffs, b.coeffs
    return ac[0] * bc[0] - sum(ac[k] * bc[k] for k in range(1, 8))


def associator(a: Octonion, b: Octonion, c: Octonion) -> Octonion:
    return (a * b) * c - a * (b * c)


def cross_oct(u: Octonion, v: Octonion) -> Octonion:
    """Cross product Im(conj(v) u) = (conj(v) u - conj(u) v) / 2."""
    return (v.conj() * u).im()


def apply_matrix8(rows: Sequence[Sequence[Scalar]], a: Octonion) -> Octonion:
    """Apply an 8x8 matrix (tuple of rows) to the coefficient vector."""
    c = a.coeffs
    return Octonion(tuple(sum(r[k] * c[k] for k in range(8) if c[k]) for r in rows))


def _require_imaginary_unit(x: SignedUnit, name: str) -> None:
    if (
        not isinstance(x, tuple)
        or len(x) != 2
        or x[0] not in (1, -1)
        or not isinstance(x[1], int)
    ):
        raise ValueError(f"{name} must be a signed basis unit (sign, index)")
    if not 1 <= x[1] <= 7:
        raise ValueError(f"{name} must be imaginary: index in 1..7, got {x[1]}")


def automorphism_from_triple(ip: SignedUnit, jp: SignedUnit, ep: SignedUnit):
    """The algebra automorphism sending the basic triple (ip, jp, ep) to (u1, u2, u4).

    Arguments are signed imaginary basis units (sign, index).  jp must not
    be +-ip, and ep must avoid the quaternion triple +-ip, +-jp, +-(ip jp);
    under those conditions the triple generates the full basis and the map
    extends uniquely.  Returns the automorphism as an 8x8 matrix, a tuple
    of rows.  Multiplicativity is asserted on all 64 basis pairs rather
    than assumed.
    """
    _require_imaginary_unit(ip, "ip")
    _require_imaginary_unit(jp, "jp")
    _require_imaginary_unit(ep, "ep")
    if jp[1] == ip[1]:
        raise ValueError("jp must not lie in {+ip, -ip}")
    kp = unit_mul(ip, jp)
    if ep[1] in (ip[1], jp[1], kp[1]):
        raise ValueError("ep must avoid {+-ip, +-jp, +-(ip jp)}")

    # images of u0..u7 under the inverse map psi: standard basis -> triple basis
    images = [None] * 8
    images[0] = (1, 0)
    images[1] = ip
    images[2] = jp
    images[4] = ep
    images[3] = unit_mul(images[1], images[2])
    images[5] = unit_mul(images[1], images[4])
    images[6] = unit_mul(images[2], images[4])
    images[7] = unit_mul(images[3], images[4])

    occupied = {im[1] for im in images}
    if len(occupied) != 8:
        raise ValueError("triple does not generate the basis")
    for a in range(8):
        for b in range(8):
            lhs = unit_mul(images[a], images[b])
            s, k = MUL_TABLE[a][b]
            rhs = (s * images[k][0], images[k][1])
            if lhs != rhs:
                raise ValueError("triple does not extend to an automorphism")

    # psi as a matrix has column k equal to images[k]; the answer is its
    # inverse, which for a signed permutation is the transpose.
    rows = [[0] * 8 for _ in range(8)]
    for k, (s, p) in enumerate(images):
        rows[k][p] = s
    return tuple(tuple(r) for r in rows)
