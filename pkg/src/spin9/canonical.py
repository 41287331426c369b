"""The canonical eight-form on R^16 and its defining identities.

The two-forms omega_ij(X, Y) = <X, I_i I_j Y> for the nine involutions
assemble into the invariant eight-form

    Omega = sum_{i,j,i',j' = 0..8} omega_ij ^ omega_ij' ^ omega_i'j ^ omega_i'j'

with omega_ii = 0 and omega_ji = -omega_ij.  The sum here is literal,
over all ordered index quadruples; the cancellations down to 702
surviving monomials are an output, never an assumption.  This module
also provides the S8-sum evaluation kernel used to cross-check wedge
arithmetic, the vanishing corollaries, an alternative grouping of the
sum, the triple-form analogue whose equality with Omega is settled by
exact expansion, deterministic coefficient export, and the two-form
expansion identities of X-flat wedge Y-flat.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import lcm
from typing import Optional, Union

from .exterior import (
    AlternatingForm,
    _merge_sign,
    _np_acc,
    _np_terms,
    _np_wedge_into,
)
from .octonion import Octonion
from .operators import (
    InvolutionFamily,
    Operator16,
    RationalCirclePoint,
    Vector16,
    build_involutions,
    clifford_signed,
    rotation,
)
from .report import VerificationReport

Num = Union[int, Fraction]


# two-form coefficient tables ------------------------------------------------


def _sp_two_form_terms(sp) -> dict:
    """Coefficients {mask(a,b): value} of the two-form of a skew signed perm."""
    perm, sign = sp
    terms = {}
    for b in range(16):
        a = perm[b]
        if a < b:
            terms[1 << a | 1 << b] = sign[b]
    return terms


@functools.cache
def _pair_sp(i: int, j: int):
    """Signed permutation of I_i I_j, any i != j in 0..8."""
    fam = build_involutions()
    from .operators import _sp_compose

    return _sp_compose(fam.signed[i], fam.signed[j])


@functools.cache
def _omega_terms(i: int, j: int) -> dict:
    return _sp_two_form_terms(_pair_sp(i, j))


@functools.cache
def _sigma_terms(i: int, j: int, k: int) -> dict:
    fam = build_involutions()
    return _sp_two_form_terms(clifford_signed(fam, (i, j, k)))


def omega2(i: int, j: int) -> AlternatingForm:
    """The two-form of I_i I_j; zero when i = j, skew in (i, j)."""
    if not (0 <= i <= 8 and 0 <= j <= 8):
        raise ValueError("indices must lie in 0..8")
    if i == j:
        return AlternatingForm.zero(2)
    return AlternatingForm._raw(2, dict(_omega_terms(i, j)))


def sigma2(i: int, j: int, k: int) -> AlternatingForm:
    """The two-form of I_i I_j I_k for a strictly increasing triple."""
    if not (0 <= i < j < k <= 8):
        raise ValueError("need 0 <= i < j < k <= 8")
    return AlternatingForm._raw(2, dict(_sigma_terms(i, j, k)))


# small pure-python wedge on coefficient dicts -------------------------------


def _wedge_dicts(ta: dict, tb: dict, scale: Num = 1) -> dict:
    out: dict = {}
    for ma, ca in ta.items():
        for mb, cb in tb.items():
            if ma & mb:
                continue
            m = ma | mb
            w = out.get(m, 0) + _merge_sign(ma, mb) * ca * cb * scale
            if w:
                out[m] = w
            else:
                del out[m]
    return out


def _wedge_dicts_into(acc: dict, ta: dict, tb: dict) -> None:
    for ma, ca in ta.items():
        for mb, cb in tb.items():
            if ma & mb:
                continue
            m = ma | mb
            w = acc.get(m, 0) + _merge_sign(ma, mb) * ca * cb
            if w:
                acc[m] = w
            else:
                del acc[m]


# the canonical eight-form ---------------------------------------------------


def _quadruples():
    for i in range(9):
        for ip in range(9):
            banned = {i, ip}
            for j in range(9):
                if j in banned:
                    continue
                for jp in range(9):
                    if jp in banned:
                        continue
                    yield i, j, ip, jp


@functools.cache
def canonical_8form() -> AlternatingForm:
    """The literal quadruple sum, with exact int64 inner arithmetic.

    Pair products omega_ij ^ omega_ij' are computed once per (i, j, j')
    and the quadruple loop wedges matching pairs; this is plain
    distributivity, no index-set reduction.
    """
    arrays = {}
    for i in range(9):
        for j in range(9):
            if i != j:
                arrays[(i, j)] = _np_terms(_omega_terms(i, j))
    acc4 = _np_acc()
    pair = {}
    for i in range(9):
        for j in range(9):
            if j == i:
                continue
            for jp in range(9):
                if jp == i:
                    continue
                acc4[:] = 0
                _np_wedge_into(acc4, arrays[(i, j)], arrays[(i, jp)])
                nz = acc4.nonzero()[0]
                pair[(i, j, jp)] = (nz.copy(), acc4[nz].copy())
    acc8 = _np_acc()
    for i, j, ip, jp in _quadruples():
        _np_wedge_into(acc8, pair[(i, j, jp)], pair[(ip, j, jp)])
    nz = acc8.nonzero()[0]
    return AlternatingForm._raw(8, {int(m): int(acc8[m]) for m in nz})


def build_8form_from_two_forms(w2: dict) -> dict:
    """The same quadruple sum over arbitrary two-form coefficient dicts.

    Pure python big-int path: exact for any integer coefficients, used to
    cross-check the int64 kernel and for rotated frames where scaled
    coefficients overflow 64 bits.  w2 maps ordered (i, j), i != j, to
    {mask: coeff}.
    """
    pair = {}
    for i in range(9):
        for j in range(9):
            if j == i:
                continue
            for jp in range(9):
                if jp == i:
                    continue
                pair[(i, j, jp)] = _wedge_dicts(w2[(i, j)], w2[(i, jp)])
    acc: dict = {}
    for i, j, ip, jp in _quadruples():
        _wedge_dicts_into(acc, pair[(i, j, jp)], pair[(ip, j, jp)])
    return acc


@functools.cache
def canonical_8form_alt() -> AlternatingForm:
    """Alternative grouping: -1/2 sum of squared two-by-two differences.

    For each ordered quadruple the four-form
        D = omega_ij ^ omega_i'j' - omega_i'j ^ omega_ij'
    is squared and accumulated; the total is -1/2 of the sum.
    """
    empty: dict = {}
    acc8 = _np_acc()
    for i in range(9):
        for ip in range(9):
            for j in range(9):
                for jp in range(9):
                    d = _wedge_dicts(
                        _omega_terms(i, j) if i != j else empty,
                        _omega_terms(ip, jp) if ip != jp else empty,
                    )
                    for m, v in _wedge_dicts(
                        _omega_terms(ip, j) if ip != j else empty,
                        _omega_terms(i, jp) if i != jp else empty,
                    ).items():
                        w = d.get(m, 0) - v
                        if w:
                            d[m] = w
                        else:
                            d.pop(m, None)
                    if not d:
                        continue
                    arrs = _np_terms(d)
                    _np_wedge_into(acc8, arrs, arrs)
    nz = acc8.nonzero()[0]
    terms = {}
    for m in nz:
        c = int(acc8[m])
        terms[int(m)] = -c // 2 if c % 2 == 0 else Fraction(-c, 2)
    return AlternatingForm._raw(8, terms)


# S8-sum evaluation kernel ---------------------------------------------------


@functools.cache
def _perms8():
    out = []
    for perm in permutations(range(8)):
        inv = 0
        for a in range(8):
            pa = perm[a]
            for b in range(a + 1, 8):
                if pa > perm[b]:
                    inv += 1
        out.append((perm, -1 if inv & 1 else 1))
    return out


def w_tilde(v: Octonion, vp: Octonion, w: Octonion, wp: Octonion) -> Num:
    """The 2^-4-normalized S8 sum of four octonion Gram factors.

    Independent of the wedge machinery; evaluating the corresponding
    product of restricted two-forms on the octonion-line basis gives the
    same number, which tests exploit as a cross-check.
    """
    mats = []
    for x, y in ((v, w), (v, wp), (vp, w), (vp, wp)):
        cols = tuple((x * (y * Octonion.unit(b))).coeffs for b in range(8))
        mats.append(cols)
    m0, m1, m2, m3 = mats
    total = 0
    for perm, sign in _perms8():
        f = m0[perm[1]][perm[0]]
        if not f:
            continue
        g = m1[perm[3]][perm[2]]
        if not g:
            continue
        h = m2[perm[5]][perm[4]]
        if not h:
            continue
        k = m3[perm[7]][perm[6]]
        if not k:
            continue
        total += sign * f * g * h * k
    return Fraction(total, 16) if total % 16 else total // 16


# vanishing corollaries ------------------------------------------------------


def four_form_omega_sum() -> AlternatingForm:
    """sum_{i<j} omega_ij ^ omega_ij; vanishes identically."""
    acc: dict = {}
    for i in range(9):
        for j in range(i + 1, 9):
            t = _omega_terms(i, j)
            _wedge_dicts_into(acc, t, t)
    return AlternatingForm._raw(4, acc)


def four_form_sigma_sum() -> AlternatingForm:
    """sum_{i<j<k} sigma_ijk ^ sigma_ijk; vanishes identically."""
    acc: dict = {}
    for i in range(9):
        for j in range(i + 1, 9):
            for k in range(j + 1, 9):
                t = _sigma_terms(i, j, k)
                _wedge_dicts_into(acc, t, t)
    return AlternatingForm._raw(4, acc)


@functools.cache
def _pair_sparse():
    out = {}
    for i in range(9):
        for j in range(i + 1, 9):
            perm, sign = _pair_sp(i, j)
            out[(i, j)] = (perm, sign)
    return out


def _sp_apply(sp, coords):
    perm, sign = sp
    out = [0] * 16
    for t in range(16):
        c = coords[t]
        if c:
            out[perm[t]] = sign[t] * c
    return out


def bianchi_cyclic_residual(x: Vector16, y: Vector16, z: Vector16) -> Vector16:
    """Cyclic sum over (x, y, z) of sum_{i<j} omega_ij(x, y) I_i I_j z.

    Identically zero; this is the algebraic heart of the first Bianchi
    identity for the associated curvature operator.
    """
    cx, cy, cz = x.coords(), y.coords(), z.coords()
    total = [0] * 16
    for sp in _pair_sparse().values():
        iy = _sp_apply(sp, cy)
        iz = _sp_apply(sp, cz)
        ix = _sp_apply(sp, cx)
        a = sum(p * q for p, q in zip(cx, iy))  # omega(x, y)
        b = sum(p * q for p, q in zip(cy, iz))  # omega(y, z)
        c = sum(p * q for p, q in zip(cz, ix))  # omega(z, x)
        if a:
            total = [t + a * v for t, v in zip(total, iz)]
        if b:
            total = [t + b * v for t, v in zip(total, ix)]
        if c:
            total = [t + c * v for t, v in zip(total, iy)]
    return Vector16.from_coords(total)


# rotation invariance and frame independence ---------------------------------


def rotation_fixes(
    form: AlternatingForm, family: InvolutionFamily, k: int, l: int, p: RationalCirclePoint
) -> bool:
    """Exact check that the (k, l) rotation pulls the form back to itself.

    Scales the rotation to an integer matrix first: (d R)* f = d^deg R* f,
    so R fixes f iff the integer pullback equals d^deg f.
    """
    rot = rotation(family, k, l, p)
    d = lcm(p.c.denominator, p.s.denominator)
    scaled = Operator16(
        tuple(tuple(int(v * d) for v in row) for row in rot.rows)
    )
    return form.pullback(scaled) == form.scale(d**form.degree)


def givens9(a: int, b: int, p: RationalCirclePoint):
    """Rational Givens rotation of R^9 in the (a, b) plane, as tuple rows."""
    if not (0 <= a < b <= 8):
        raise ValueError("need 0 <= a < b <= 8")
    if not p.is_rotation:
        raise ValueError("needs a circle point")
    rows = [[Fraction(1) if r == c else Fraction(0) for c in range(9)] for r in range(9)]
    rows[a][a] = rows[b][b] = p.c
    rows[a][b] = -p.s
    rows[b][a] = p.s
    return tuple(tuple(r) for r in rows)


def mat9_mul(m1, m2):
    return tuple(
        tuple(sum(m1[r][t] * m2[t][c] for t in range(9)) for c in range(9))
        for r in range(9)
    )


def frame_change_fixes(m9) -> bool:
    """Whether rebuilding the eight-form from I'_i = sum_j m[i][j] I_j changes it.

    m9 must be special orthogonal with rational entries.  Works with
    integer-scaled operators throughout, comparing against d^8 times the
    canonical coefficients, so no rational division enters the big sum.
    """
    rows = tuple(tuple(Fraction(v) for v in row) for row in m9)
    ident = tuple(
        tuple(Fraction(1) if r == c else Fraction(0) for c in range(9))
        for r in range(9)
    )
    tr = tuple(zip(*rows))
    if mat9_mul(tr, rows) != ident:
        raise ValueError("frame matrix is not orthogonal")
    from .linalg import det as _det9

    if _det9(rows) != 1:
        raise ValueError("frame matrix must have determinant 1")
    d = 1
    for row in rows:
        for v in row:
            d = lcm(d, v.denominator)
    fam = build_involutions()
    scaled_ops = []
    for i in range(9):
        acc = Operator16.zero()
        for j in range(9):
            c = rows[i][j]
            if c:
                acc = acc + fam[j].scale(int(c * d))
        scaled_ops.append(acc)
    w2 = {}
    for i in range(9):
        for j in range(9):
            if i != j:
                prod = scaled_ops[i] @ scaled_ops[j]
                terms = {}
                for a in range(16):
                    ra = prod.rows[a]
                    for b in range(a + 1, 16):
                        if ra[b]:
                            terms[1 << a | 1 << b] = ra[b]
                w2[(i, j)] = terms
    rebuilt = build_8form_from_two_forms(w2)
    target = {m: c * d**8 for m, c in canonical_8form()._terms.items()}
    return rebuilt == target


# the triple-form sum --------------------------------------------------------


def _sigma_lookup(i: int, j: int, p: int, signed: bool):
    """Sorted triple and sign for sigma with arbitrary index order."""
    if i == j or i == p or j == p:
        return None
    seq = (i, j, p)
    inv = sum(
        1 for x in range(3) for y in range(x + 1, 3) if seq[x] > seq[y]
    )
    sign = -1 if (signed and inv % 2) else 1
    return sign, tuple(sorted(seq))


def conjecture_8form(convention: str = "antisymmetric") -> AlternatingForm:
    """One quarter of the sextuple sigma sum, under the stated convention.

    convention "antisymmetric": sigma with out-of-order indices picks up
    the sign of the sorting permutation (and vanishes on repeats).
    convention "unsigned": out-of-order indices give the sorted form with
    coefficient +1 (still zero on repeats).
    """
    if convention not in ("antisymmetric", "unsigned"):
        raise ValueError("convention must be 'antisymmetric' or 'unsigned'")
    return _conjecture_build(convention)


@functools.cache
def _conjecture_build(convention: str) -> AlternatingForm:
    signed = convention == "antisymmetric"
    acc8 = _np_acc()
    for p in range(9):
        for pp in range(9):
            t_acc: dict = {}
            for i in range(9):
                for j in range(9):
                    f1 = _sigma_lookup(i, j, p, signed)
                    if f1 is None:
                        continue
                    f2 = _sigma_lookup(i, j, pp, signed)
                    if f2 is None:
                        continue
                    s = f1[0] * f2[0]
                    ta = _sigma_terms(*f1[1])
                    tb = _sigma_terms(*f2[1])
                    for ma, ca in ta.items():
                        for mb, cb in tb.items():
                            if ma & mb:
                                continue
                            m = ma | mb
                            w = t_acc.get(m, 0) + _merge_sign(ma, mb) * ca * cb * s
                            if w:
                                t_acc[m] = w
                            else:
                                del t_acc[m]
            if not t_acc:
                continue
            arrs = _np_terms(t_acc)
            _np_wedge_into(acc8, arrs, arrs)
    nz = acc8.nonzero()[0]
    terms = {}
    for m in nz:
        c = int(acc8[m])
        terms[int(m)] = c // 4 if c % 4 == 0 else Fraction(c, 4)
    return AlternatingForm._raw(8, terms)


@dataclass(frozen=True)
class ConjectureVerdict:
    equal: bool
    convention: str
    lhs_terms: int
    rhs_terms: int
    difference_terms: int
    sample_monomials: tuple
    alternative: Optional["ConjectureVerdict"] = None


def conjecture_verdict() -> ConjectureVerdict:
    """Definitive equality verdict for the triple-form sum, both conventions.

    The primary convention is the antisymmetric extension; when it fails,
    the unsigned extension is evaluated as well and attached.
    """
    lhs = canonical_8form()
    primary = _verdict_against(lhs, "antisymmetric")
    if primary.equal:
        return primary
    alt = _verdict_against(lhs, "unsigned")
    return ConjectureVerdict(
        equal=primary.equal,
        convention=primary.convention,
        lhs_terms=primary.lhs_terms,
        rhs_terms=primary.rhs_terms,
        difference_terms=primary.difference_terms,
        sample_monomials=primary.sample_monomials,
        alternative=alt,
    )


def _verdict_against(lhs: AlternatingForm, convention: str) -> ConjectureVerdict:
    rhs = conjecture_8form(convention)
    diff = lhs - rhs
    samples = tuple(
        (idx, str(Fraction(v))) for idx, v in diff.items()[:3]
    )
    return ConjectureVerdict(
        equal=not diff,
        convention=convention,
        lhs_terms=lhs.term_count(),
        rhs_terms=rhs.term_count(),
        difference_terms=diff.term_count(),
        sample_monomials=samples,
    )


# coefficient export ---------------------------------------------------------


def export_coefficients(form: AlternatingForm, fmt: str) -> bytes:
    """Deterministic byte serialization, sorted by index tuple.

    "json": one object per line with indices and num/den strings.
    "csv": header i1..ip,num,den then one row per monomial.
    """
    items = form.items()
    if fmt == "json":
        lines = []
        for idx, v in items:
            q = Fraction(v)
            idx_s = ",".join(str(i) for i in idx)
            lines.append(
                '{"indices":[%s],"num":"%s","den":"%s"}'
                % (idx_s, q.numerator, q.denominator)
            )
        return ("\n".join(lines) + "\n").encode()
    if fmt == "csv":
        head = ",".join(f"i{t + 1}" for t in range(form.degree)) + ",num,den"
        lines = [head]
        for idx, v in items:
            q = Fraction(v)
            lines.append(
                ",".join(str(i) for i in idx)
                + f",{q.numerator},{q.denominator}"
            )
        return ("\n".join(lines) + "\n").encode()
    raise ValueError("format must be 'json' or 'csv'")


# flat-wedge expansion identities --------------------------------------------


def flat(x: Vector16) -> AlternatingForm:
    """The metric dual one-form of a vector."""
    c = x.coords()
    return AlternatingForm(1, {(a,): c[a] for a in range(16) if c[a]})


def friedrich_identities(x: Vector16, y: Vector16) -> VerificationReport:
    """Expansion of 8 x-flat ^ y-flat in the omega and sigma two-forms.

    Checks the pair of identities

      8 xb ^ yb            = sum omega_ij(x,y) omega_ij + sum sigma_ijk(x,y) sigma_ijk
      8 sum_l (I_l x)b ^ (I_l y)b
                           = 5 sum omega_ij(x,y) omega_ij - 3 sum sigma_ijk(x,y) sigma_ijk

    with both sums over increasing index tuples.
    """
    fam = build_involutions()
    cx, cy = x.coords(), y.coords()

    omega_part: dict = {}
    sigma_part: dict = {}
    for i in range(9):
        for j in range(i + 1, 9):
            t = _omega_terms(i, j)
            val = _eval_two_form(t, cx, cy)
            if val:
                _accumulate_scaled(omega_part, t, val)
    for i in range(9):
        for j in range(i + 1, 9):
            for k in range(j + 1, 9):
                t = _sigma_terms(i, j, k)
                val = _eval_two_form(t, cx, cy)
                if val:
                    _accumulate_scaled(sigma_part, t, val)

    lhs1 = flat(x).wedge(flat(y)).scale(8)
    rhs1_terms = dict(omega_part)
    _accumulate_scaled(rhs1_terms, sigma_part, 1)
    rhs1 = AlternatingForm._raw(2, rhs1_terms)

    lhs2 = AlternatingForm.zero(2)
    for l in range(9):
        ilx = fam[l].apply(x)
        ily = fam[l].apply(y)
        lhs2 = lhs2 + flat(ilx).wedge(flat(ily))
    lhs2 = lhs2.scale(8)
    rhs2_terms = {m: 5 * v for m, v in omega_part.items()}
    _accumulate_scaled(rhs2_terms, sigma_part, -3)
    rhs2 = AlternatingForm._raw(2, rhs2_terms)

    rep = VerificationReport()
    rep.add("friedrich.wedge-expansion", lhs1 == rhs1)
    rep.add("friedrich.averaged-expansion", lhs2 == rhs2)
    return rep


def _eval_two_form(terms: dict, cx, cy) -> Num:
    total = 0
    for m, v in terms.items():
        a = (m & -m).bit_length() - 1
        b = m.bit_length() - 1
        total += v * (cx[a] * cy[b] - cx[b] * cy[a])
    return total


def _accumulate_scaled(acc: dict, terms: dict, scale: Num) -> None:
    for m, v in terms.items():
        w = acc.get(m, 0) + v * scale
        if w:
            acc[m] = w
        else:
            del acc[m]
