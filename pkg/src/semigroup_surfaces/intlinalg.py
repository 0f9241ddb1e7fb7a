"""Smith normal form over the integers, with unimodular transforms.

Matrices are plain lists of row lists of Python ints; sizes here are tiny
(2x2 for every torus map) so clarity wins over speed.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def det2(m: Matrix) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _swap_rows(m: Matrix, i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: Matrix, i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m: Matrix, src: int, dst: int, k: int) -> None:
    # row[dst] += k * row[src]
    m[dst] = [x + k * y for x, y in zip(m[dst], m[src])]


def _add_col(m: Matrix, src: int, dst: int, k: int) -> None:
    for row in m:
        row[dst] += k * row[src]


def smith_normal_form(a: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U @ a @ V == D``.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with nonnegative
    entries and each diagonal entry divides the next.
    """
    rows, cols = len(a), len(a[0])
    d = [list(r) for r in a]
    u = identity(rows)
    v = identity(cols)

    for t in range(min(rows, cols)):
        # pick the smallest nonzero pivot in the remaining block
        nonzero = [(abs(d[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if d[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        _swap_rows(d, t, pi)
        _swap_rows(u, t, pi)
        _swap_cols(d, t, pj)
        _swap_cols(v, t, pj)

        while True:
            done = True
            for i in range(t + 1, rows):
                q = d[i][t] // d[t][t]
                _add_row(d, t, i, -q)
                _add_row(u, t, i, -q)
                if d[i][t]:
                    done = False
                    _swap_rows(d, t, i)
                    _swap_rows(u, t, i)
            for j in range(t + 1, cols):
                q = d[t][j] // d[t][t]
                _add_col(d, t, j, -q)
                _add_col(v, t, j, -q)
                if d[t][j]:
                    done = False
                    _swap_cols(d, t, j)
                    _swap_cols(v, t, j)
            if not done:
                continue
            # divisibility: fold any offending entry into the pivot row
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if d[i][j] % d[t][t]), None)
            if bad is None:
                break
            _add_row(d, bad[0], t, 1)
            _add_row(u, bad[0], t, 1)

        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]

    return u, d, v


def solve_congruence_mod_lattice(a: Matrix, rhs: tuple[Fraction, Fraction]) -> list[tuple[Fraction, Fraction]]:
    """All ``x`` in ``(Q/Z)^2`` with ``a @ x == rhs (mod Z^2)``.

    ``a`` must be a nonsingular 2x2 integer matrix; the answer has exactly
    ``|det a|`` elements, each reduced into ``[0, 1)^2``.
    """
    if det2(a) == 0:
        raise ValueError("singular matrix: solution set is not finite")
    u, d, v = smith_normal_form(a)
    # D y = U rhs + U k,  x = V y.  U k sweeps Z^2 as k does.
    c = [sum(Fraction(u[i][k]) * rhs[k] for k in range(2)) for i in range(2)]
    diag = [d[0][0], d[1][1]]
    solutions = set()
    for j0, j1 in product(range(diag[0]), range(diag[1])):
        y = ((c[0] + j0) / diag[0], (c[1] + j1) / diag[1])
        x = tuple((v[i][0] * y[0] + v[i][1] * y[1]) % 1 for i in range(2))
        solutions.add(x)
    return sorted(solutions)
