"""Exact nullspaces: Gauss-Jordan over Q and fraction-free elimination over Q[vars].

Matrices are lists of rows.  Entries are ``Fraction`` for the rational path
and :class:`~vertexkit.algebra.Polynomial` for the fraction-free path.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .algebra import Polynomial, _mono_mul, divide_exact


def rational_rref(matrix: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [[Fraction(v) for v in r] for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        prow = rows[r] = [v * inv if v else v for v in rows[r]]
        nz = [j for j, v in enumerate(prow) if v]
        for i in range(len(rows)):
            f = rows[i][c]
            if i != r and f:
                ri = rows[i]
                for j in nz:
                    ri[j] -= f * prow[j]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rational_nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {v : M v = 0}; one vector per free column."""
    if ncols is None:
        ncols = len(matrix[0])
    rref, pivots = rational_rref(matrix) if matrix else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(rref, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def rational_rank(matrix: Sequence[Sequence]) -> int:
    return len(rational_rref(matrix)[1])


def fraction_free_gauss_jordan(matrix: Sequence[Sequence[Polynomial]]) -> tuple[list[list[Polynomial]], list[int]]:
    """Fraction-free Gauss-Jordan elimination over a polynomial ring.

    Every division is exact.  On return, pivot columns hold ``d`` on the
    diagonal and zero elsewhere, where ``d`` is the last pivot (a minor of the
    input).  Zero rows are dropped.
    """
    rows = [[Polynomial.coerce(v) for v in r] for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    prev = Polynomial.const(1)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        cands = [i for i in range(r, len(rows)) if not rows[i][c].is_zero()]
        if not cands:
            continue
        # smallest pivot keeps intermediate expressions small
        piv = min(cands, key=lambda i: len(rows[i][c]))
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(len(rows)):
            if i == r:
                continue
            f = rows[i][c]
            new = []
            for j in range(ncols):
                v = p * rows[i][j] - f * rows[r][j]
                new.append(divide_exact(v, prev) if prev != 1 else v)
            rows[i] = new
        # rows above the pivot row were updated; earlier pivots now equal p
        prev = p
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def polynomial_nullvector(matrix: Sequence[Sequence[Polynomial]]) -> tuple[list[Polynomial], int]:
    """A polynomial vector spanning the nullspace when it is one-dimensional.

    Returns ``(vector, rank)``.  Raises ``ValueError`` if the nullspace
    dimension over the fraction field is not exactly one.
    """
    ncols = len(matrix[0])
    rows, pivots = fraction_free_gauss_jordan(matrix)
    rank = len(pivots)
    if rank != ncols - 1:
        raise ValueError(f"nullspace dimension is {ncols - rank}, expected 1")
    free = next(c for c in range(ncols) if c not in pivots)
    d = rows[-1][pivots[-1]] if rows else Polynomial.const(1)
    v = [Polynomial()] * ncols
    v[free] = d
    for row, pc in zip(rows, pivots):
        v[pc] = -row[free]
    return v, rank


def lowest_degree_multiple(vec: Sequence[Polynomial]) -> list[Polynomial]:
    """The lowest-degree polynomial vector proportional to ``vec``.

    Stands in for dividing out the gcd of the entries: for each degree bound
    D the proportionality conditions ``w_i v_j = w_j v_i`` are linear in the
    coefficients of ``w``, so the first D with a solution gives the ray's
    primitive representative (up to a rational scalar).
    """
    vec = [Polynomial.coerce(v) for v in vec]
    j = next(t for t, v in enumerate(vec) if not v.is_zero())
    variables = sorted({v for p in vec for v in p.variables()})
    support = [t for t, v in enumerate(vec) if not v.is_zero()]
    top = max(vec[t].degree() for t in support)
    for bound in range(top + 1):
        monos = [()]
        for d in range(1, bound + 1):
            for combo in itertools.combinations_with_replacement(variables, d):
                exps: dict = {}
                for v in combo:
                    exps[v] = exps.get(v, 0) + 1
                monos.append(tuple(sorted(exps.items(), reverse=True)))
        unknowns = [(t, mu) for t in support for mu in monos]
        index = {u: n for n, u in enumerate(unknowns)}
        eqs: dict = {}
        for t in support:
            if t == j:
                continue
            # w_t * v_j - w_j * v_t = 0
            for mu in monos:
                for m, c in vec[j]._terms.items():
                    row = eqs.setdefault((t, _mono_mul(mu, m)), {})
                    row[index[t, mu]] = row.get(index[t, mu], 0) + c
                for m, c in vec[t]._terms.items():
                    row = eqs.setdefault((t, _mono_mul(mu, m)), {})
                    row[index[j, mu]] = row.get(index[j, mu], 0) - c
        matrix = [[row.get(n, 0) for n in range(len(unknowns))] for row in eqs.values()]
        basis = rational_nullspace(matrix, len(unknowns)) if matrix else []
        if not matrix:
            basis = [[Fraction(int(u == (j, ()))) for u in unknowns]]
        if basis:
            sol = basis[0]
            out = [Polynomial() for _ in vec]
            for (t, mu), c in zip(unknowns, sol):
                if c:
                    out[t] = out[t] + Polynomial({mu: c})
            return out
    return list(vec)


def polynomial_det(matrix: Sequence[Sequence]) -> Polynomial:
    """Determinant by Bareiss elimination; every division is exact."""
    rows = [[Polynomial.coerce(v) for v in r] for r in matrix]
    size = len(rows)
    if size == 0:
        return Polynomial.const(1)
    sign = 1
    prev = Polynomial.const(1)
    for k in range(size - 1):
        if rows[k][k].is_zero():
            swap = next((i for i in range(k + 1, size) if not rows[i][k].is_zero()), None)
            if swap is None:
                return Polynomial()
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        p = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = divide_exact(p * rows[i][j] - rows[i][k] * rows[k][j], prev)
        prev = p
    det = rows[-1][-1]
    return det if sign == 1 else -det
