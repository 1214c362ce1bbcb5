"""Irreducible components of the degree ``g - 1`` Brill-Noether locus.

For a semistable multidegree ``d`` of total degree ``g - 1`` the components
are indexed by connected subcurves ``Z`` such that ``e_Z``, the restriction
of ``d`` to ``Z`` lowered by the nodes joining ``Z`` to its complement, is
effective, semistable on ``Z`` and of total degree ``g_Z - 1``.  Components
are modelled by these labels only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .curve import NodalCurve, Subcurve, complement, total_genus
from .errors import InvalidInputError
from .multidegree import (
    Multidegree,
    check_length,
    holds_g1_on,
    is_effective,
    is_semistable_g1,
)
from .twister import (
    TwisterCoefficients,
    indicator,
    solve_twister,
    twister_multidegree,
)


class InvariantViolation(AssertionError):
    """An internal consistency check failed; this is a bug, not bad input."""


@dataclass(frozen=True)
class ComponentLabel:
    z: Subcurve
    e_z: Multidegree
    global_e: Multidegree | None = None
    twisted_abel: bool = False


@dataclass(frozen=True)
class Decomposition:
    """Either the whole Jacobian (``d`` not semistable) or a list of components."""

    full_jacobian: bool
    components: tuple[ComponentLabel, ...] = ()


def _validate_degree(curve: NodalCurve, d: Sequence[int]) -> int:
    check_length(curve, d)
    g = total_genus(curve)
    if g < 2:
        raise InvalidInputError(f"curve genus must be at least 2 (got {g})")
    if sum(d) != g - 1:
        raise InvalidInputError(f"total degree {sum(d)} differs from g - 1 = {g - 1}")
    return g


def _restricted_mask(curve: NodalCurve, d: Sequence[int], mask: int) -> Multidegree:
    outside = curve.full_mask & ~mask
    return tuple(
        d[i] - curve.edges_to(i, outside) for i in range(curve.gamma) if mask >> i & 1
    )


def induced_restricted(curve: NodalCurve, d: Sequence[int], z: Subcurve) -> Multidegree:
    """``d`` on ``z`` minus, at each vertex, its number of nodes leading out of ``z``."""
    check_length(curve, d)
    return _restricted_mask(curve, d, z.mask)


def s_set(curve: NodalCurve, d: Sequence[int]) -> list[Subcurve]:
    """Subcurves (connected or not) whose induced restricted degree is effective."""
    check_length(curve, d)
    return [
        Subcurve(m)
        for m in range(1, curve.full_mask + 1)
        if is_effective(_restricted_mask(curve, d, m))
    ]


def _label_for(curve: NodalCurve, d: Sequence[int], mask: int) -> ComponentLabel | None:
    e_z = _restricted_mask(curve, d, mask)
    if not is_effective(e_z):
        return None
    if sum(e_z) != curve.connected_genus(mask) - 1:
        return None
    members = [i for i in range(curve.gamma) if mask >> i & 1]
    if not holds_g1_on(curve, dict(zip(members, e_z)), mask):
        return None
    z = Subcurve(mask)
    form = twisted_abel_form(curve, d, z)
    return ComponentLabel(
        z=z,
        e_z=e_z,
        global_e=form[0] if form else None,
        twisted_abel=form is not None,
    )


def enumerate_components(curve: NodalCurve, d: Sequence[int]) -> list[ComponentLabel]:
    """Component labels of the Brill-Noether locus of a semistable ``d``.

    Labels come out ordered by subcurve bitmask, one per admissible
    connected subcurve.
    """
    d = tuple(d)
    _validate_degree(curve, d)
    if not is_semistable_g1(curve, d):
        raise InvalidInputError("multidegree is not semistable; use classify()")
    return list(_components(curve, d))


@lru_cache(maxsize=4096)
def _components(curve: NodalCurve, d: Multidegree) -> tuple[ComponentLabel, ...]:
    labels = []
    for mask in curve.connected_masks:
        label = _label_for(curve, d, mask)
        if label is not None:
            labels.append(label)
    return tuple(labels)


def classify(curve: NodalCurve, d: Sequence[int]) -> Decomposition:
    d = tuple(d)
    _validate_degree(curve, d)
    if not is_semistable_g1(curve, d):
        return Decomposition(full_jacobian=True)
    return Decomposition(full_jacobian=False, components=tuple(enumerate_components(curve, d)))


def component_dimension(curve: NodalCurve, label: ComponentLabel) -> int:
    """Dimension of a component from the fibration over the Jacobian of ``Z``.

    Base contributes ``g_Z - 1`` (a theta divisor), the Jacobian of the
    complement ``g_{Z'}``, and the torus fibre ``k_Z - n_Z - n_{Z'} + 1``.
    """
    g = total_genus(curve)
    mask = label.z.mask
    if mask == curve.full_mask:
        dim = g - 1
    else:
        rest = curve.full_mask & ~mask
        torus = (
            curve.cut_edges(mask)
            - curve._component_count(mask)
            - curve._component_count(rest)
            + 1
        )
        dim = (curve.genus_mask(mask) - 1) + curve.genus_mask(rest) + torus
    if dim != g - 1:
        raise InvariantViolation(f"component of dimension {dim}, expected {g - 1}")
    return dim


def twisted_abel_form(
    curve: NodalCurve, d: Sequence[int], z: Subcurve
) -> tuple[Multidegree, TwisterCoefficients] | None:
    """``(e, 1_{Z'})`` with ``e = d`` twisted down along ``Z'``, if ``e`` is effective."""
    check_length(curve, d)
    twist = indicator(curve, complement(curve, z))
    shift = twister_multidegree(curve, [-c for c in twist])
    e = tuple(a + b for a, b in zip(d, shift))
    if not is_effective(e):
        return None
    return e, twist


@dataclass(frozen=True)
class Pair:
    """One matched pair of components of ``W_d`` and ``W_e``.

    ``basis`` says why the two labels were matched: ``"abel_degree"`` when
    both normal forms share the effective multidegree (the twisted loci then
    coincide), ``"subcurve"`` when the leftover labels share ``Z``, and
    ``"order"`` for leftovers matched by canonical order.
    """

    source: ComponentLabel
    target: ComponentLabel
    basis: str


def correspondence(
    curve: NodalCurve, d: Sequence[int], e: Sequence[int]
) -> list[Pair] | None:
    """Bijection between the components of ``W_d`` and ``W_e``.

    Only defined when ``e - d`` is the multidegree of a twister; returns
    ``None`` otherwise.  Every component of ``W_d`` has a normal form
    ``A_f`` twisted along the complement of its subcurve, and twisting that
    locus further by ``T`` gives a component of ``W_e``.
    """
    d, e = tuple(d), tuple(e)
    if any(g < 1 for g in curve.genera):
        raise InvalidInputError("every component must have positive genus")
    for deg in (d, e):
        _validate_degree(curve, deg)
        if not is_semistable_g1(curve, deg):
            raise InvalidInputError(f"multidegree {deg} is not semistable")
    if solve_twister(curve, [b - a for a, b in zip(d, e)]) is None:
        return None
    source = _components(curve, d)
    target = _components(curve, e)
    if len(source) != len(target):
        raise InvariantViolation(
            f"W_d has {len(source)} components but W_e has {len(target)}"
        )
    for lab in source + target:
        if not lab.twisted_abel:
            raise InvariantViolation(f"component {lab.z.members} has no effective normal form")

    pairs = []
    left_s, left_t = list(source), list(target)
    for basis, key in (
        ("abel_degree", lambda lab: lab.global_e),
        ("subcurve", lambda lab: lab.z.mask),
    ):
        by_key = {key(lab): lab for lab in left_t}
        rest = []
        for lab in left_s:
            match = by_key.pop(key(lab), None)
            if match is None:
                rest.append(lab)
            else:
                pairs.append(Pair(lab, match, basis))
        left_s, left_t = rest, [lab for lab in left_t if key(lab) in by_key]
    pairs.extend(Pair(a, b, "order") for a, b in zip(left_s, left_t))
    pairs.sort(key=lambda p: p.source.z.mask)
    return pairs
