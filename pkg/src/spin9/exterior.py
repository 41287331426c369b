"""Sparse alternating forms on R^16 with exact coefficients.

A form of degree p is a finite map from strictly increasing p-tuples of
indices 0..15 to nonzero rationals; the tuple (i1 < ... < ip) stands for
dx_{i1} ^ ... ^ dx_{ip}.  Internally a tuple is packed into a 16-bit
mask, and the sign bookkeeping of a wedge is a popcount parity.

Conventions (the determinant convention):

    (dx_{i1} ^ ... ^ dx_{ip})(X_1, ..., X_p) = det [dx_{ia}(X_b)],
    (alpha ^ beta)(X_1, ..., X_{p+q})
        = 1/(p! q!) sum_sigma eps(sigma) alpha(X_sigma(1..p)) beta(...),

so evaluation of a monomial on the matching basis vectors gives exactly
1, and wedge is the coefficient-level shuffle product with no extra
factorials.

Forms are immutable.  The `_np_*` helpers at the bottom are the exact
int64 kernel used by the heavy eight-form assemblies; callers must keep
coefficient products and accumulation sums below 2**62, which the users
in `spin9.canonical` do by construction (their inputs are tiny integers).
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, Mapping, Union

import numpy as np

from .operators import Operator16, Vector16, sparse_rows

Num = Union[int, Fraction]


def _mask_of(indices) -> int:
    m = 0
    prev = -1
    for i in indices:
        if not isinstance(i, int) or not 0 <= i <= 15:
            raise ValueError("indices must be integers in 0..15")
        if i <= prev:
            raise ValueError("indices must be strictly increasing")
        prev = i
        m |= 1 << i
    return m


def _tuple_of(mask: int) -> tuple:
    return tuple(i for i in range(16) if mask >> i & 1)


def _merge_sign(a: int, b: int) -> int:
    """Sign of dx_A ^ dx_B for disjoint masks, by inversion parity."""
    parity = 0
    while b:
        low = b & -b
        parity ^= (a >> low.bit_length()).bit_count() & 1
        b ^= low
    return -1 if parity else 1


class AlternatingForm:
    """An exact alternating form, stored sparsely by index mask."""

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping = ()):
        if not 0 <= degree <= 16:
            raise ValueError("degree must be in 0..16")
        clean = {}
        for key, val in dict(terms).items():
            idx = (key,) if isinstance(key, int) else tuple(key)
            if len(idx) != degree:
                raise ValueError("index tuple length must equal the degree")
            if val:
                clean[_mask_of(idx)] = val
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("AlternatingForm is immutable")

    @classmethod
    def _raw(cls, degree: int, mask_terms: dict) -> "AlternatingForm":
        f = cls.__new__(cls)
        object.__setattr__(f, "degree", degree)
        object.__setattr__(f, "_terms", mask_terms)
        return f

    @classmethod
    def zero(cls, degree: int) -> "AlternatingForm":
        return cls(degree, {})

    @classmethod
    def monomial(cls, indices, coeff: Num = 1) -> "AlternatingForm":
        """dx over arbitrary distinct indices, sorted with the sign it costs."""
        idx = tuple(indices)
        if len(set(idx)) != len(idx):
            return cls.zero(len(idx))
        sign = 1
        lst = list(idx)
        for a in range(len(lst)):
            for b in range(a + 1, len(lst)):
                if lst[a] > lst[b]:
                    lst[a], lst[b] = lst[b], lst[a]
                    sign = -sign
        return cls(len(idx), {tuple(lst): sign * coeff})

    def items(self):
        """Sorted (index_tuple, coefficient) pairs."""
        return sorted(
            ((_tuple_of(m), v) for m, v in self._terms.items()),
            key=lambda kv: kv[0],
        )

    def coefficient(self, indices) -> Num:
        return self._terms.get(_mask_of(indices), 0)

    def term_count(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlternatingForm)
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __add__(self, other: "AlternatingForm") -> "AlternatingForm":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = dict(self._terms)
        for m, v in other._terms.items():
            w = out.get(m, 0) + v
            if w:
                out[m] = w
            else:
                out.pop(m, None)
        return AlternatingForm._raw(self.degree, out)

    def __sub__(self, other: "AlternatingForm") -> "AlternatingForm":
        return self + (-other)

    def __neg__(self) -> "AlternatingForm":
        return AlternatingForm._raw(
            self.degree, {m: -v for m, v in self._terms.items()}
        )

    def scale(self, t: Num) -> "AlternatingForm":
        if not t:
            return AlternatingForm.zero(self.degree)
        return AlternatingForm._raw(
            self.degree, {m: t * v for m, v in self._terms.items()}
        )

    def __rmul__(self, t) -> "AlternatingForm":
        return self.scale(t)

    def __repr__(self) -> str:
        return (
            f"AlternatingForm(degree={self.degree}, "
            f"terms={len(self._terms)})"
        )

    def wedge(self, other: "AlternatingForm") -> "AlternatingForm":
        if self.degree + other.degree > 16:
            raise ValueError("wedge degree exceeds 16")
        out: dict = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                if ma & mb:
                    continue
                m = ma | mb
                w = out.get(m, 0) + _merge_sign(ma, mb) * ca * cb
                if w:
                    out[m] = w
                else:
                    del out[m]
        return AlternatingForm._raw(self.degree + other.degree, out)

    def evaluate(self, vectors: Iterable[Vector16]) -> Num:
        vs = list(vectors)
        if len(vs) != self.degree:
            raise ValueError(
                f"form of degree {self.degree} takes {self.degree} vectors"
            )
        if not self._terms:
            return 0
        if self.degree == 0:
            return self._terms.get(0, 0)
        cols = [v.coords() for v in vs]
        total = 0
        for m, coeff in self._terms.items():
            idx = _tuple_of(m)
            total += coeff * _det([[col[i] for i in idx] for col in cols])
        return total

    def pullback(self, op: Operator16) -> "AlternatingForm":
        """The form X -> self(op X1, ..., op Xp)."""
        rows = sparse_rows(op)
        out: dict = {}
        for m, coeff in self._terms.items():
            _expand_pullback(rows, _tuple_of(m), 0, 0, coeff, out)
        return AlternatingForm._raw(
            self.degree, {m: v for m, v in out.items() if v}
        )

    def lie_derivative(self, op: Operator16) -> "AlternatingForm":
        """Derivative of the pullback along exp(t op) at t = 0.

        Equals sum over slots of self with op inserted in one argument;
        on coefficients this replaces one index a by b weighted by the
        matrix entry op[a][b].
        """
        rows = op.rows
        out: dict = {}
        for m, coeff in self._terms.items():
            for a in _tuple_of(m):
                row = rows[a]
                rest = m & ~(1 << a)
                sign_a = _merge_sign(1 << a, rest)
                for b in range(16):
                    v = row[b]
                    if not v:
                        continue
                    if b == a:
                        w = out.get(m, 0) + coeff * v
                        if w:
                            out[m] = w
                        else:
                            del out[m]
                        continue
                    if rest >> b & 1:
                        continue
                    m2 = rest | 1 << b
                    s = sign_a * _merge_sign(1 << b, rest)
                    w = out.get(m2, 0) + s * coeff * v
                    if w:
                        out[m2] = w
                    else:
                        del out[m2]
        return AlternatingForm._raw(self.degree, out)

    def restrict_low(self) -> "AlternatingForm":
        """Keep only monomials supported on the first octonion block 0..7."""
        return AlternatingForm._raw(
            self.degree, {m: v for m, v in self._terms.items() if m < 256}
        )


def wedge(a: AlternatingForm, b: AlternatingForm) -> AlternatingForm:
    return a.wedge(b)


def _det(m) -> Num:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    rows = [list(r) for r in m]
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        pval = rows[col][col]
        det *= pval
        inv = Fraction(1, 1) / pval
        for r in range(col + 1, n):
            if rows[r][col]:
                f = rows[r][col] * inv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return det if isinstance(det, int) else _as_int_if_whole(det)


def _as_int_if_whole(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _expand_pullback(rows, idx, depth, mask, coeff, out):
    if depth == len(idx):
        w = out.get(mask, 0) + coeff
        if w:
            out[mask] = w
        else:
            del out[mask]
        return
    for b, v in rows[idx[depth]]:
        bit = 1 << b
        if mask & bit:
            continue
        # the accumulated mask sits to the left of the incoming factor
        _expand_pullback(
            rows,
            idx,
            depth + 1,
            mask | bit,
            coeff * v * _merge_sign(mask, bit),
            out,
        )


def two_form_from_operator(op: Operator16) -> AlternatingForm:
    """The two-form (X, Y) -> <X, op Y> of a skew operator.

    Coefficient on (a, b) with a < b is the matrix entry op[a][b].
    Symmetric parts have no alternating shadow, so they are rejected
    rather than silently dropped.
    """
    if not op.is_skew:
        raise ValueError("operator has a nonzero symmetric part")
    terms = {}
    for a in range(16):
        row = op.rows[a]
        for b in range(a + 1, 16):
            if row[b]:
                terms[1 << a | 1 << b] = row[b]
    return AlternatingForm._raw(2, terms)


# exact int64 numpy kernel ---------------------------------------------------


@functools.cache
def _np_tables():
    """Parity tables: P16[m] bit b = parity of popcount(m >> (b+1))."""
    masks = np.arange(1 << 16, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(16)[None, :]) & 1
    # parity of the bits strictly above position b, as a 16-bit word
    above = np.cumsum(bits[:, ::-1], axis=1)[:, ::-1]  # inclusive suffix sums
    strictly_above = (above - bits) & 1
    p16 = (strictly_above << np.arange(16)[None, :]).sum(axis=1)
    poppar = bits.sum(axis=1) & 1
    return p16.astype(np.int64), poppar.astype(np.int64)


def _np_terms(form_terms: dict):
    """Dict {mask: int} to (masks, coeffs) int64 arrays, sorted by mask."""
    if not form_terms:
        return (np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64))
    masks = np.array(sorted(form_terms), dtype=np.int64)
    coeffs = np.array([form_terms[int(m)] for m in masks], dtype=np.int64)
    return masks, coeffs


def _np_wedge_into(acc, a, b, scale: int = 1):
    """acc[m] += coefficients of (a wedge b), exactly, in int64."""
    ma, ca = a
    mb, cb = b
    if ma.size == 0 or mb.size == 0:
        return
    p16, poppar = _np_tables()
    cross = ma[:, None] & mb[None, :]
    keep = cross == 0
    if not keep.any():
        return
    union = (ma[:, None] | mb[None, :])[keep]
    parity = poppar[p16[ma][:, None] & mb[None, :]][keep]
    vals = (ca[:, None] * cb[None, :])[keep] * (1 - 2 * parity)
    if scale != 1:
        vals = vals * scale
    np.add.at(acc, union, vals)


def _np_acc_to_terms(acc) -> dict:
    nz = np.nonzero(acc)[0]
    return {int(m): int(acc[m]) for m in nz}


def _np_acc() -> np.ndarray:
    return np.zeros(1 << 16, dtype=np.int64)
