"""Infinitesimal stabilizer of an alternating form inside the matrix algebra.

The stabilizer algebra of a p-form w on R^n is the kernel of the linear
map A -> L_A w from the n x n matrices to p-forms.  The kernel is found
in three stages: assemble the exact integer system row by row, select a
maximal independent subset of equations modulo a large prime, then solve
that subsystem exactly and certify the candidate kernel by substituting
every basis vector back into the full map.  Modular selection can only
drop equations, never corrupt them, so a certified kernel is exact
regardless of the prime; a failed certificate feeds the violated
equations back into the subsystem and retries.

The solver is anchored on two closed-form cases before being trusted on
the canonical 8-form: the standard symplectic 2-form on R^4, whose
stabilizer is the rank-10 symplectic algebra, and the decomposable
8-form dx0^...^dx7, whose stabilizer is block-triangular of dimension
191.  Both oracles are independent computations, not recorded answers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exterior import AlternatingForm, _merge_sign
from .linalg import (
    int_echelon,
    modp_independent_rows,
    nullspace,
    reduce_against,
    row_to_int,
)
from .operators import (
    Operator16,
    RationalCirclePoint,
    Vector16,
    boost8,
    build_involutions,
    clifford_product,
    commutator,
)
from .report import VerificationReport


def generator_image(form: AlternatingForm, r: int, c: int) -> dict:
    """Terms of the Lie derivative of `form` along the matrix unit E_rc.

    E_rc replaces the index r by c in every monomial containing r (the
    diagonal unit E_rr rescales those monomials instead).  This is the
    single-entry specialization of AlternatingForm.lie_derivative and is
    cross-checked against it in the test suite.
    """
    out: dict = {}
    rbit = 1 << r
    if r == c:
        return {m: v for m, v in form._terms.items() if m & rbit}
    cbit = 1 << c
    for m, v in form._terms.items():
        if not m & rbit or m & cbit:
            continue
        rest = m & ~rbit
        s = _merge_sign(rbit, rest) * _merge_sign(cbit, rest)
        m2 = rest | cbit
        w = out.get(m2, 0) + s * v
        if w:
            out[m2] = w
        else:
            del out[m2]
    return out


def stabilizer_system(form: AlternatingForm, n: int) -> list:
    """Equation rows of {A : L_A form = 0} over the n*n matrix entries.

    Column n*r + c carries the matrix entry A[r][c]; each row demands
    that one monomial coefficient of L_A form vanish.  Rows are sorted
    by monomial mask so the system is reproducible.
    """
    equations: dict = {}
    for r in range(n):
        for c in range(n):
            col = n * r + c
            for m, v in generator_image(form, r, c).items():
                equations.setdefault(m, {})[col] = v
    return [equations[m] for m in sorted(equations)]


def vec_to_operator(vec, n: int) -> Operator16:
    rows = [[0] * 16 for _ in range(16)]
    for r in range(n):
        for c in range(n):
            rows[r][c] = vec[n * r + c]
    return Operator16(rows)


def operator_to_vec(op: Operator16, n: int = 16) -> tuple:
    return tuple(op.rows[r][c] for r in range(n) for c in range(n))


@dataclass(frozen=True)
class StabilizerResult:
    """Exact kernel of A -> L_A form, with its certificates.

    kernel_basis elements are primitive integer matrices; system_rank is
    the exact rank of the equation system, so system_rank plus
    kernel_dimension equals n*n.
    """

    kernel_dimension: int
    kernel_basis: tuple
    contains_spin9: bool
    system_rank: int
    dimension: int


def _support_bound(form: AlternatingForm) -> int:
    top = 0
    for m in form._terms:
        top = max(top, m.bit_length())
    return top


def infinitesimal_stabilizer(form: AlternatingForm, n: int = 16) -> StabilizerResult:
    """Solve {A in gl(n) : L_A form = 0} exactly.

    Every reported kernel vector is substituted back through the full
    Lie-derivative map; the result is returned only once each image is
    the exact zero form.
    """
    if not 1 <= n <= 16:
        raise ValueError("dimension must be between 1 and 16")
    if form.degree < 1 or form.degree > n:
        raise ValueError(f"degree {form.degree} form does not fit R^{n}")
    if _support_bound(form) > n:
        raise ValueError(f"form uses coordinates beyond R^{n}")
    ncols = n * n
    all_rows = [row_to_int(r) for r in stabilizer_system(form, n)]
    work = [all_rows[i] for i in modp_independent_rows(all_rows, ncols)]
    while True:
        vecs = nullspace(work, ncols)
        ops = [vec_to_operator(v, n) for v in vecs]
        if not any(form.lie_derivative(op) for op in ops):
            break
        if len(work) == len(all_rows):
            raise AssertionError("system rows inconsistent with the form")
        # unlucky prime dropped a needed equation; redo on the full system
        work = all_rows
    exact_rank = len(int_echelon(work))
    if exact_rank + len(vecs) != ncols:
        raise AssertionError("rank-nullity certificate failed")
    fam = build_involutions()
    contains = n == 16 and all(
        not form.lie_derivative(clifford_product(fam, (i, j)))
        for i in range(9)
        for j in range(i + 1, 9)
    )
    return StabilizerResult(
        kernel_dimension=len(vecs),
        kernel_basis=tuple(ops),
        contains_spin9=contains,
        system_rank=exact_rank,
        dimension=n,
    )


def kernel_echelon(result: StabilizerResult) -> list:
    n = result.dimension
    return int_echelon(
        row_to_int(
            {i: v for i, v in enumerate(operator_to_vec(op, n)) if v}
        )
        for op in result.kernel_basis
    )


def in_kernel_span(result: StabilizerResult, op: Operator16, ech=None) -> bool:
    if ech is None:
        ech = kernel_echelon(result)
    n = result.dimension
    vec = {i: v for i, v in enumerate(operator_to_vec(op, n)) if v}
    return not reduce_against(ech, vec)


def bracket_closure(result: StabilizerResult) -> VerificationReport:
    """Pairwise commutators of the kernel basis land back in the kernel."""
    report = VerificationReport()
    ech = kernel_echelon(result)
    basis = result.kernel_basis
    bad = 0
    pairs = 0
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            pairs += 1
            if not in_kernel_span(result, commutator(basis[i], basis[j]), ech):
                bad += 1
    report.add(
        "stabilizer.bracket-closure",
        bad == 0,
        pairs=pairs,
        failures=bad,
    )
    return report


def spans_involution_pairs(result: StabilizerResult) -> bool:
    """Kernel span equals span{I_i I_j : i < j} exactly.

    Containment one way is certified by in_kernel_span for each product;
    equality follows when the 36 products are independent and the kernel
    dimension is 36.
    """
    if result.dimension != 16 or result.kernel_dimension != 36:
        return False
    fam = build_involutions()
    prods = [
        clifford_product(fam, (i, j))
        for i in range(9)
        for j in range(i + 1, 9)
    ]
    ech = kernel_echelon(result)
    if not all(in_kernel_span(result, p, ech) for p in prods):
        return False
    prod_rank = len(
        int_echelon(
            row_to_int({i: v for i, v in enumerate(operator_to_vec(p)) if v})
            for p in prods
        )
    )
    return prod_rank == 36


def symplectic_form_r4() -> AlternatingForm:
    return AlternatingForm.monomial((0, 1)) + AlternatingForm.monomial((2, 3))


def decomposable_form_low() -> AlternatingForm:
    return AlternatingForm.monomial(tuple(range(8)))


def _dense_fraction_nullity(rows, ncols: int) -> int:
    """Textbook Gaussian elimination over Fraction; oracle-grade and slow."""
    m = [[Fraction(r.get(c, 0)) for c in range(ncols)] for r in rows]
    rank_count = 0
    for col in range(ncols):
        piv = next(
            (r for r in range(rank_count, len(m)) if m[r][col]), None
        )
        if piv is None:
            continue
        m[rank_count], m[piv] = m[piv], m[rank_count]
        pivrow = m[rank_count]
        inv = 1 / pivrow[col]
        m[rank_count] = [x * inv for x in pivrow]
        for r in range(len(m)):
            if r != rank_count and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank_count])]
        rank_count += 1
    return ncols - rank_count


def sp4_oracle_dimension() -> int:
    """Brute-force stabilizer dimension of dx0^dx1 + dx2^dx3 on R^4.

    Built by evaluating the Lie derivative on basis pairs through the
    generic evaluator, then eliminating densely over Fraction: no code
    shared with the production assembly or the integer solver.
    """
    form = symplectic_form_r4()
    basis = [Vector16.basis(k) for k in range(4)]
    rows = []
    for i in range(4):
        for j in range(i + 1, 4):
            row = {}
            for r in range(4):
                for c in range(4):
                    # E_rc sends e_c to e_r and kills the other basis vectors
                    val = 0
                    if c == i:
                        val += form.evaluate([basis[r], basis[j]])
                    if c == j:
                        val += form.evaluate([basis[i], basis[r]])
                    if val:
                        row[4 * r + c] = val
            if row:
                rows.append(row)
    return _dense_fraction_nullity(rows, 16)


def sp4_certification() -> VerificationReport:
    """Production solver vs the independent symplectic oracle on R^4."""
    report = VerificationReport()
    oracle_dim = sp4_oracle_dimension()
    result = infinitesimal_stabilizer(symplectic_form_r4(), n=4)
    report.add(
        "stabilizer.sp4.dimension",
        result.kernel_dimension == 10 and oracle_dim == 10,
        solver_dim=result.kernel_dimension,
        oracle_dim=oracle_dim,
    )
    jrows = [[0] * 4 for _ in range(4)]
    for a, b in ((0, 1), (2, 3)):
        jrows[a][b] = 1
        jrows[b][a] = -1
    ok = True
    for op in result.kernel_basis:
        a4 = [[op.rows[r][c] for c in range(4)] for r in range(4)]
        ja = _mat4_mul(jrows, a4)
        atj = _mat4_mul(_transpose4(a4), jrows)
        if any(
            ja[r][c] + atj[r][c] for r in range(4) for c in range(4)
        ):
            ok = False
    report.add("stabilizer.sp4.symplectic-condition", ok)
    report.extend(bracket_closure(result))
    return report


def _mat4_mul(a, b):
    return [
        [sum(a[r][k] * b[k][c] for k in range(4)) for c in range(4)]
        for r in range(4)
    ]


def _transpose4(a):
    return [[a[c][r] for c in range(4)] for r in range(4)]


def decomposable_certification() -> VerificationReport:
    """Stabilizer of dx0^...^dx7: block-triangular matrices, dimension 191."""
    report = VerificationReport()
    result = infinitesimal_stabilizer(decomposable_form_low(), n=16)
    report.add(
        "stabilizer.decomposable.dimension",
        result.kernel_dimension == 191,
        dim=result.kernel_dimension,
        expected=64 + 64 + 63,
    )
    ok = True
    for op in result.kernel_basis:
        upper_right = any(
            op.rows[r][c] for r in range(8) for c in range(8, 16)
        )
        block_trace = sum(op.rows[r][r] for r in range(8))
        if upper_right or block_trace:
            ok = False
    report.add("stabilizer.decomposable.block-structure", ok)
    return report


def lambda1_exclusion(form: AlternatingForm) -> VerificationReport:
    """The nine involutions are not infinitesimal symmetries.

    A hyperbolic rotation generated by the ninth involution rescales the
    restriction of the 8-form to the first octonion block by the eighth
    power of (c - s); any factor other than one on a nonzero restriction
    rules the generator out of the stabilizer.  The direct Lie-derivative
    witness is run alongside as the cheaper equivalent.
    """
    report = VerificationReport()
    fam = build_involutions()
    low = form.restrict_low()
    report.add("stabilizer.lambda1.restriction-nonzero", bool(low))

    trivial = RationalCirclePoint(1, 0)
    pulled = form.pullback(boost8(fam, trivial)).restrict_low()
    report.add("stabilizer.lambda1.identity-boost", pulled == low)

    p = RationalCirclePoint(Fraction(5, 4), Fraction(3, 4))
    factor = (p.c - p.s) ** 8
    pulled = form.pullback(boost8(fam, p)).restrict_low()
    report.add(
        "stabilizer.lambda1.boost-scaling",
        pulled == low.scale(factor),
        factor=str(factor),
    )

    witness = form.lie_derivative(fam[8])
    report.add("stabilizer.lambda1.lie-witness", bool(witness))
    return report


def lambda3_exclusion(form: AlternatingForm) -> VerificationReport:
    """A triple Clifford product moves the 8-form; a double does not.

    Together with the identity rescaling the degree-0 and degree-3 parts
    of the Clifford grading are excluded from the stabilizer, leaving
    the 36-dimensional degree-2 part found by the kernel solve.
    """
    report = VerificationReport()
    fam = build_involutions()
    report.add(
        "stabilizer.lambda3.witness",
        bool(form.lie_derivative(clifford_product(fam, (0, 1, 2)))),
    )
    report.add(
        "stabilizer.lambda3.pair-control",
        not form.lie_derivative(clifford_product(fam, (0, 1))),
    )
    scaling = form.lie_derivative(Operator16.identity())
    report.add(
        "stabilizer.lambda0.identity-scaling",
        scaling == form.scale(8) and bool(form),
    )
    return report
