"""Shared random generators and small independent oracles for the tests."""

from fractions import Fraction

from spin9.octonion import Octonion
from spin9.operators import Vector16


def rand_octonion(rng, span=3):
    return Octonion([rng.randint(-span, span) for _ in range(8)])


def rand_vector(rng, span=3):
    return Vector16.from_coords([rng.randint(-span, span) for _ in range(16)])


def rand_fraction_vector(rng):
    return Vector16.from_coords(
        [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(16)]
    )


def dense_rank(rows, ncols):
    """Textbook Gaussian elimination over Fraction, as an independent oracle."""
    mat = [[Fraction(row.get(c, 0)) for c in range(ncols)] for row in rows]
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def quat_mul(p, q):
    """Hamilton product of 4-tuples (1, i, j, k)."""
    a, b, c, d = p
    e, f, g, h = q
    return (
        a * e - b * f - c * g - d * h,
        a * f + b * e + c * h - d * g,
        a * g - b * h + c * e + d * f,
        a * h + b * g - c * f + d * e,
    )


def quat_conj(p):
    return (p[0], -p[1], -p[2], -p[3])


def oct_mul_oracle(x, y):
    """Octonion product via dense quaternion pairs.

    Doubling rule (p + q e)(r + s e) = (pr - conj(s) q) + (s p + q conj(r)) e,
    evaluated with the explicit Hamilton product instead of unit tables.
    """
    p, q = x[:4], x[4:]
    r, s = y[:4], y[4:]
    lo = tuple(
        a - b for a, b in zip(quat_mul(p, r), quat_mul(quat_conj(s), q))
    )
    hi = tuple(
        a + b for a, b in zip(quat_mul(s, p), quat_mul(q, quat_conj(r)))
    )
    return lo + hi
