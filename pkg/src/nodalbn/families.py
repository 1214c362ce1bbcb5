"""Two-component and circular curves, with their closed-form counts.

These closed forms are used as oracles against the general enumerator.
Positions in circular patterns are 1-based, matching the usual
``C_1, ..., C_gamma`` numbering.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .curve import NodalCurve, total_genus
from .errors import InvalidInputError
from .multidegree import Multidegree, is_semistable_g1


def two_component_curve(g1: int, g2: int, k: int) -> NodalCurve:
    if k < 1:
        raise InvalidInputError("the two components must meet in at least one node")
    if g1 < 0 or g2 < 0:
        raise InvalidInputError("genera must be nonnegative")
    return NodalCurve.build([g1, g2], [(0, 1)] * k)


def circular_curve(genera: Sequence[int]) -> NodalCurve:
    n = len(genera)
    if n < 3:
        raise InvalidInputError("a circular curve needs at least 3 components")
    return NodalCurve.build(list(genera), [(i, (i + 1) % n) for i in range(n)])


@dataclass(frozen=True)
class CircularPattern:
    """Positions (1-based) where ``d_i = g_i - 1`` and ``d_i = g_i + 1``.

    After rotation the two sets interleave as
    ``1 = k_1 < j_1 < k_2 < ... < k_l < j_l <= gamma``.
    """

    gamma: int
    i_minus: tuple[int, ...]
    i_plus: tuple[int, ...]

    @property
    def ell(self) -> int:
        return len(self.i_minus)

    def is_interleaved(self) -> bool:
        if len(self.i_minus) != len(self.i_plus):
            return False
        if not self.i_minus:
            return True
        merged = [x for pair in zip(self.i_minus, self.i_plus) for x in pair]
        return merged[0] == 1 and merged == sorted(set(merged)) and merged[-1] <= self.gamma


def _pattern_signs(gamma: int):
    """Sign vectors in {-1, 0, 1}^gamma whose nonzero entries alternate cyclically."""
    yield (0,) * gamma
    for size in range(2, gamma + 1, 2):
        for support in combinations(range(gamma), size):
            for first in (-1, 1):
                signs = [0] * gamma
                for r, pos in enumerate(support):
                    signs[pos] = first if r % 2 == 0 else -first
                yield tuple(signs)


def circular_semistable_multidegrees(genera: Sequence[int]) -> list[Multidegree]:
    """All semistable multidegrees of total degree ``g - 1`` on the circular curve."""
    if len(genera) < 3:
        raise InvalidInputError("a circular curve needs at least 3 components")
    return [
        tuple(g + s for g, s in zip(genera, signs)) for signs in _pattern_signs(len(genera))
    ]


def circular_pattern(genera: Sequence[int], d: Sequence[int]) -> tuple[int, CircularPattern]:
    """Rotate so position 1 lies in ``I^-``; return the shift and the pattern.

    The shift ``r`` means rotated position ``p`` is original index
    ``(p - 1 + r) % gamma``.
    """
    n = len(genera)
    if len(d) != n:
        raise InvalidInputError("multidegree length differs from the number of components")
    diff = [x - g for x, g in zip(d, genera)]
    if any(abs(x) > 1 for x in diff):
        raise InvalidInputError(f"multidegree {tuple(d)} is not semistable")
    shift = next((i for i, x in enumerate(diff) if x == -1), 0)
    rot = diff[shift:] + diff[:shift]
    pattern = CircularPattern(
        gamma=n,
        i_minus=tuple(p + 1 for p, x in enumerate(rot) if x == -1),
        i_plus=tuple(p + 1 for p, x in enumerate(rot) if x == 1),
    )
    if not pattern.is_interleaved():
        raise InvalidInputError(f"multidegree {tuple(d)} is not semistable")
    return shift, pattern


def circular_count_formula(pattern: CircularPattern) -> int:
    ks = list(pattern.i_minus) + [pattern.gamma + 1]
    js = pattern.i_plus
    ell = pattern.ell
    return 1 + sum(
        (js[r] - ks[r]) * (ks[s + 1] - js[s]) for r in range(ell) for s in range(ell)
    )


def circular_component_count(genera: Sequence[int], d: Sequence[int]) -> int:
    """Closed-form number of components for a strictly semistable ``d``."""
    if any(g < 1 for g in genera):
        raise InvalidInputError("the closed form needs every component of positive genus")
    curve = circular_curve(genera)
    if sum(d) != total_genus(curve) - 1 or not is_semistable_g1(curve, d):
        raise InvalidInputError(f"multidegree {tuple(d)} is not semistable of degree g - 1")
    _, pattern = circular_pattern(genera, d)
    if pattern.ell == 0:
        raise InvalidInputError(f"multidegree {tuple(d)} is stable, not strictly semistable")
    return circular_count_formula(pattern)


def alternating_multidegree(genera: Sequence[int]) -> Multidegree:
    if len(genera) % 2:
        raise InvalidInputError("the alternating pattern needs an even number of components")
    return tuple(g - 1 if i % 2 == 0 else g + 1 for i, g in enumerate(genera))


@dataclass(frozen=True)
class ExpectedComponent:
    """A component in normal form: Abel degree ``abel`` twisted along ``twist``.

    ``subcurve`` is the label subcurve (``"C"`` for the whole curve) and
    ``twist`` the twisting subcurve (``None`` for no twist).
    """

    subcurve: str
    abel: Multidegree
    twist: str | None


@dataclass(frozen=True)
class TwoComponentReport:
    g1: int
    g2: int
    k: int
    case: str
    d: Multidegree
    e: Multidegree
    components_d: tuple[ExpectedComponent, ...]
    components_e: tuple[ExpectedComponent, ...]

    @property
    def count_d(self) -> int:
        return len(self.components_d)

    @property
    def count_e(self) -> int:
        return len(self.components_e)


def two_component_classification(g1: int, g2: int, k: int) -> TwoComponentReport:
    """Case table for the two strictly semistable multidegrees of a two-component curve."""
    if k < 1:
        raise InvalidInputError("the two components must meet in at least one node")
    d = (g1 - 1, g2 - 1 + k)
    e = (g1 - 1 + k, g2 - 1)
    whole_d = ExpectedComponent("C", d, None)
    whole_e = ExpectedComponent("C", e, None)
    # W_{d,C_2} = A_{e,C_1} and W_{e,C_1} = A_{d,C_2}
    on_c2 = ExpectedComponent("C2", e, "C1")
    on_c1 = ExpectedComponent("C1", d, "C2")
    if g1 == 0 and g2 == 0:
        case, wd, we = "a", (), ()
    elif g1 == 0:
        case, wd, we = "b", (on_c2,), (whole_e,)
    elif g2 == 0:
        case, wd, we = "c", (whole_d,), (on_c1,)
    else:
        case, wd, we = "d", (whole_d, on_c2), (whole_e, on_c1)
    return TwoComponentReport(g1, g2, k, case, d, e, wd, we)
