"""Twisters as integer combinations of components.

A coefficient vector ``c`` stands for the twister of ``sum c_i C_i``.  Its
multidegree is the negated graph Laplacian applied to ``c`` (chip firing
with edge multiplicities), so the coefficients are defined up to adding a
constant vector.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .curve import NodalCurve, Subcurve
from .multidegree import Multidegree, check_length

TwisterCoefficients = tuple[int, ...]


def twister_multidegree(curve: NodalCurve, c: Sequence[int]) -> Multidegree:
    check_length(curve, c)
    w = curve.weights
    n = curve.gamma
    return tuple(sum(w[v][u] * (c[u] - c[v]) for u in range(n)) for v in range(n))


def normalize(c: Sequence[int]) -> TwisterCoefficients:
    low = min(c)
    return tuple(x - low for x in c)


def support_subcurve(curve: NodalCurve, c: Sequence[int]) -> Subcurve:
    """Components where the coefficient attains its minimum."""
    check_length(curve, c)
    return Subcurve.of(i for i, x in enumerate(normalize(c)) if x == 0)


def indicator(curve: NodalCurve, z: Subcurve | None) -> TwisterCoefficients:
    """0/1 coefficient vector of ``z``; all zeros for the empty subcurve."""
    mask = z.mask if z is not None else 0
    return tuple(mask >> i & 1 for i in range(curve.gamma))


def laplacian(curve: NodalCurve) -> list[list[int]]:
    w = curve.weights
    n = curve.gamma
    return [[sum(w[i]) if i == j else -w[i][j] for j in range(n)] for i in range(n)]


@lru_cache(maxsize=256)
def reduced_inverse(curve: NodalCurve) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """``(det, adj)`` for the Laplacian with the last row and column removed.

    ``det`` is the number of spanning trees (nonzero for a connected graph)
    and ``adj`` the integer adjugate, so the inverse is ``adj / det``.
    """
    m = curve.gamma - 1
    lap = laplacian(curve)
    rows = [
        [Fraction(lap[i][j]) for j in range(m)] + [Fraction(int(i == j)) for j in range(m)]
        for i in range(m)
    ]
    det = Fraction(1)
    for col in range(m):
        piv = next(r for r in range(col, m) if rows[r][col] != 0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        p = rows[col][col]
        det *= p
        rows[col] = [x / p for x in rows[col]]
        for r in range(m):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    adj = tuple(tuple(int(x * det) for x in row[m:]) for row in rows)
    return int(det), adj


def solve_twister(curve: NodalCurve, delta: Sequence[int]) -> TwisterCoefficients | None:
    """Normalized ``c`` with ``twister_multidegree(curve, c) == delta``, or ``None``.

    The last coefficient is grounded at 0.  The reduced Laplacian of a
    connected graph is nonsingular, so the rational solution is unique and an
    integral solution exists exactly when it is integral.
    """
    check_length(curve, delta)
    if sum(delta) != 0:
        return None
    if curve.gamma == 1:
        return (0,)
    det, adj = reduced_inverse(curve)
    rhs = [-x for x in delta[:-1]]
    sol = []
    for row in adj:
        num = sum(a * b for a, b in zip(row, rhs))
        if num % det:
            return None
        sol.append(num // det)
    c = normalize(sol + [0])
    assert twister_multidegree(curve, c) == tuple(delta)
    return c
