"""Exact integer and rational linear algebra for sparse systems.

Rows are dicts mapping column index to a nonzero value.  Elimination is
fraction-free over the integers: a row update is the cross-multiplied
difference, then the row is divided by the gcd of its entries, so no
rationals appear until back-substitution.  Pivots follow a fixed order
(rows in the order given, pivot on each row's least column), making every
result deterministic.

For very tall systems, `modp_independent_rows` preselects a maximal
independent subset of rows by elimination modulo a fixed prime.  Modular
independence certifies independence over Q for integer rows; callers that
need the converse direction (no dependent row wrongly kept) must verify
the resulting kernel exactly, which `spin9.stabilizer` does.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

MODP_PRIME = 67108859  # largest prime below 2**26; keeps int64 matmul exact


def row_to_int(row: dict) -> dict:
    """Scale a rational row to integers and divide out the gcd."""
    if not row:
        return {}
    denom = 1
    for v in row.values():
        if isinstance(v, Fraction):
            denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = {c: int(v * denom) for c, v in row.items() if v}
    if not ints:
        return {}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {c: v // g for c, v in ints.items()}
    return ints


def _normalize(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def int_echelon(rows) -> list:
    """Fraction-free row echelon of integer rows.

    Returns a list of (pivot_col, row_dict) sorted by pivot column; each
    row is gcd-reduced with a positive pivot entry.
    """
    pivots = {}  # pivot_col -> row dict
    for raw in rows:
        row = dict(raw)
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                if row[lead] < 0:
                    row = {c: -v for c, v in row.items()}
                pivots[lead] = _normalize(row)
                break
            a, b = piv[lead], row[lead]
            new = {}
            for c, v in row.items():
                w = a * v - b * piv.get(c, 0)
                if w:
                    new[c] = w
            for c, v in piv.items():
                if c not in row:
                    w = -b * v
                    if w:
                        new[c] = w
            row = _normalize(new)
    return sorted(pivots.items())


def reduce_against(echelon, raw: dict) -> dict:
    """Reduce a row against an echelon list; empty dict means dependent."""
    row = row_to_int(raw)
    table = dict(echelon)
    while row:
        lead = min(row)
        piv = table.get(lead)
        if piv is None:
            return row
        a, b = piv[lead], row[lead]
        new = {}
        for c, v in row.items():
            w = a * v - b * piv.get(c, 0)
            if w:
                new[c] = w
        for c, v in piv.items():
            if c not in row:
                w = -b * v
                if w:
                    new[c] = w
        row = _normalize(new)
    return {}


def rank(rows) -> int:
    return len(int_echelon(row_to_int(r) for r in rows))


def nullspace(rows, ncols: int) -> list:
    """Primitive integer kernel basis of the system {row . x = 0}.

    One basis vector per free column, in increasing free-column order:
    the vector whose free coordinates are zero except a one in that
    column, scaled to primitive integers with positive entry there.
    """
    ech = int_echelon(row_to_int(r) for r in rows)
    pivot_cols = [c for c, _ in ech]
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        x = {f: Fraction(1)}
        # rows are in increasing pivot order; solve bottom-up
        for c, row in reversed(ech):
            s = Fraction(0)
            for col, v in row.items():
                if col == c:
                    continue
                xv = x.get(col)
                if xv:
                    s += v * xv
            if s:
                x[c] = -s / row[c]
        denom = 1
        for v in x.values():
            denom = denom * v.denominator // gcd(denom, v.denominator)
        vec = [0] * ncols
        for c, v in x.items():
            vec[c] = int(v * denom)
        g = 0
        for v in vec:
            g = gcd(g, v)
        if g > 1:
            vec = [v // g for v in vec]
        if vec[f] < 0:
            vec = [-v for v in vec]
        basis.append(vec)
    return basis


def modp_independent_rows(rows: list, ncols: int, p: int = MODP_PRIME) -> list:
    """Indices of a maximal mod-p independent subset, in input order.

    Maintains a reduced echelon mod p so each incoming row reduces in one
    matrix-vector product.  Integer rows independent mod p are independent
    over Q, so every selected row is safe; rows discarded here could in
    principle be independent over Q, which the caller's exact kernel
    verification rules out after the fact.
    """
    basis = np.zeros((min(len(rows), ncols), ncols), dtype=np.int64)
    pivot_cols: list[int] = []
    selected = []
    for idx, row in enumerate(rows):
        v = np.zeros(ncols, dtype=np.int64)
        for c, val in row.items():
            v[c] = val % p
        if pivot_cols:
            coef = v[pivot_cols] % p
            if coef.any():
                v = (v - coef @ basis[: len(pivot_cols)]) % p
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            continue
        lead = int(nz[0])
        inv = pow(int(v[lead]), p - 2, p)
        v = (v * inv) % p
        # keep the basis fully reduced so reduction stays a single matmul
        col = basis[: len(pivot_cols), lead] % p
        if col.any():
            basis[: len(pivot_cols)] = (
                basis[: len(pivot_cols)] - np.outer(col, v)
            ) % p
        basis[len(pivot_cols)] = v
        pivot_cols.append(lead)
        selected.append(idx)
        if len(pivot_cols) == ncols:
            break
    return selected


def det(rows) -> Fraction:
    """Determinant of a small dense square matrix by rational elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    d = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            d = -d
        d *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return d
