"""Multidegrees and the canonical (semi)stability tests.

A multidegree is a tuple of integers in the curve's vertex order.  Both
sides of the stability inequalities are additive over the connected
components of a subcurve, so only connected proper subcurves are checked.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .curve import NodalCurve, Subcurve, total_genus
from .errors import InvalidInputError

Multidegree = tuple[int, ...]


def as_multidegree(values: Iterable[int]) -> Multidegree:
    return tuple(int(v) for v in values)


def parse_multidegree(text: str) -> Multidegree:
    """Parse the comma-separated form, e.g. ``"0,2,0,2"``."""
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError:
        raise InvalidInputError(f"not a comma-separated integer list: {text!r}") from None


def format_multidegree(d: Sequence[int]) -> str:
    return ",".join(str(x) for x in d)


def total(d: Sequence[int]) -> int:
    return sum(d)


def restrict(d: Sequence[int], z: Subcurve) -> Multidegree:
    return tuple(d[i] for i in z.members)


def is_effective(d: Sequence[int]) -> bool:
    return all(x >= 0 for x in d)


def check_length(curve: NodalCurve, d: Sequence[int]) -> None:
    if len(d) != curve.gamma:
        raise InvalidInputError(
            f"multidegree has {len(d)} entries but the curve has {curve.gamma} components"
        )


def degree_on(d: Sequence[int], mask: int) -> int:
    return sum(x for i, x in enumerate(d) if mask >> i & 1)


def omega_restricted_degree(curve: NodalCurve, z: Subcurve) -> int:
    mask = z.mask
    return (
        2 * curve.genus_mask(mask) - 2 * curve._component_count(mask) + curve.cut_edges(mask)
    )


def _require_genus(curve: NodalCurve) -> int:
    g = total_genus(curve)
    if g < 2:
        raise InvalidInputError(f"stability is only defined for genus >= 2 (got {g})")
    return g


def _proper_connected(curve: NodalCurve):
    full = curve.full_mask
    return (m for m in curve.connected_masks if m != full)


def _basic_bound(curve: NodalCurve, d: Sequence[int], mask: int) -> Fraction:
    """Right-hand side of the canonical inequality for a connected subcurve."""
    g = total_genus(curve)
    k = curve.cut_edges(mask)
    omega = 2 * curve.connected_genus(mask) - 2 + k
    return Fraction(sum(d) * omega, 2 * g - 2) - Fraction(k, 2)


def semistability_witness(curve: NodalCurve, d: Sequence[int]) -> Subcurve | None:
    """First connected proper subcurve violating the canonical inequality."""
    check_length(curve, d)
    _require_genus(curve)
    for mask in _proper_connected(curve):
        if degree_on(d, mask) < _basic_bound(curve, d, mask):
            return Subcurve(mask)
    return None


def is_semistable(curve: NodalCurve, d: Sequence[int]) -> bool:
    return semistability_witness(curve, d) is None


def is_stable(curve: NodalCurve, d: Sequence[int]) -> bool:
    check_length(curve, d)
    _require_genus(curve)
    return all(
        degree_on(d, mask) > _basic_bound(curve, d, mask) for mask in _proper_connected(curve)
    )


def g1_witness(curve: NodalCurve, d: Sequence[int]) -> Subcurve | None:
    """First connected proper ``Z`` with ``d_Z < g_Z - 1``, at total degree ``g - 1``."""
    check_length(curve, d)
    g = _require_genus(curve)
    if sum(d) != g - 1:
        raise InvalidInputError(f"total degree {sum(d)} differs from g - 1 = {g - 1}")
    return _g1_violation(curve, d, curve.full_mask)


def is_semistable_g1(curve: NodalCurve, d: Sequence[int]) -> bool:
    return g1_witness(curve, d) is None


def _g1_violation(curve: NodalCurve, d: Sequence[int], within: int) -> Subcurve | None:
    # Connected proper submasks of ``within``; connectivity does not depend on
    # the ambient curve because subcurves carry their induced edges.
    sub = (within - 1) & within
    found = None
    while sub:
        if curve.is_connected_submask(sub):
            if degree_on(d, sub) < curve.connected_genus(sub) - 1:
                found = sub
        sub = (sub - 1) & within
    return Subcurve(found) if found else None


def holds_g1_on(curve: NodalCurve, values: dict[int, int], within: int) -> bool:
    """Degree-``g-1`` semistability on the connected subcurve ``within``.

    ``values`` maps the vertices of ``within`` to degrees.  No genus guard:
    the inequality ``e_Y >= g_Y - 1`` is meaningful for every genus.
    """
    sub = (within - 1) & within
    while sub:
        if curve.is_connected_submask(sub):
            deg = 0
            s = sub
            while s:
                low = s & -s
                deg += values[low.bit_length() - 1]
                s ^= low
            if deg < curve.connected_genus(sub) - 1:
                return False
        sub = (sub - 1) & within
    return True
