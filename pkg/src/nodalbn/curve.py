"""Nodal curves encoded by their genus-decorated dual multigraph.

Subcurves are stored as bitmasks over the vertex order fixed at
construction: bit ``i`` set means component ``i`` belongs to the subcurve.
That order is also the order of every multidegree on the curve.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from .errors import InvalidInputError


@dataclass(frozen=True)
class Subcurve:
    """A nonempty union of irreducible components, as a vertex bitmask."""

    mask: int

    def __post_init__(self):
        if self.mask <= 0:
            raise InvalidInputError("a subcurve must contain at least one component")

    @classmethod
    def of(cls, indices: Iterable[int]) -> "Subcurve":
        mask = 0
        for i in indices:
            mask |= 1 << i
        return cls(mask)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.mask.bit_length()) if self.mask >> i & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> i & 1)


@dataclass(frozen=True)
class NodalCurve:
    """Dual graph of a nodal curve.

    ``edges`` lists each node once as a pair ``(i, j)`` with ``i < j``;
    repeated pairs encode several nodes between the same two components.
    Self-nodes are not allowed: fold them into the component genus.
    """

    labels: tuple[str, ...]
    genera: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        n = len(self.labels)
        if n == 0:
            raise InvalidInputError("a curve needs at least one component")
        if len(self.genera) != n:
            raise InvalidInputError("one genus per component is required")
        if len(set(self.labels)) != n:
            raise InvalidInputError("component labels must be unique")
        if any(g < 0 for g in self.genera):
            raise InvalidInputError("component genera must be nonnegative")
        canon = []
        for a, b in self.edges:
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidInputError(f"edge ({a}, {b}) references an unknown component")
            if a == b:
                raise InvalidInputError(
                    f"self-node on component {self.labels[a]!r}: absorb it into the genus"
                )
            canon.append((min(a, b), max(a, b)))
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "genera", tuple(int(g) for g in self.genera))
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        if not self.is_connected_mask(self.full_mask):
            raise InvalidInputError("the dual graph must be connected")

    @classmethod
    def build(
        cls,
        genera: Sequence[int],
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "NodalCurve":
        if labels is None:
            labels = [f"C{i + 1}" for i in range(len(genera))]
        return cls(tuple(labels), tuple(genera), tuple(edges))

    # -- serialization -------------------------------------------------

    @classmethod
    def from_dict(cls, data: dict) -> "NodalCurve":
        try:
            verts = data["vertices"]
            labels = [str(v["label"]) for v in verts]
            genera = [v["genus"] for v in verts]
            raw_edges = data.get("edges", [])
        except (KeyError, TypeError) as exc:
            raise InvalidInputError(f"malformed curve object: {exc}") from None
        if any(not isinstance(g, int) or isinstance(g, bool) for g in genera):
            raise InvalidInputError("genus values must be integers")
        if len(set(labels)) != len(labels):
            raise InvalidInputError("component labels must be unique")
        index = {lab: i for i, lab in enumerate(labels)}
        edges = []
        for pair in raw_edges:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise InvalidInputError(f"edge {pair!r} is not a pair of labels")
            a, b = (str(x) for x in pair)
            if a not in index or b not in index:
                raise InvalidInputError(f"edge {pair!r} references an unknown label")
            edges.append((index[a], index[b]))
        return cls(tuple(labels), tuple(genera), tuple(edges))

    def to_dict(self) -> dict:
        return {
            "vertices": [{"label": l, "genus": g} for l, g in zip(self.labels, self.genera)],
            "edges": [[self.labels[a], self.labels[b]] for a, b in self.edges],
        }

    @classmethod
    def load(cls, path: str | Path) -> "NodalCurve":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"curve file is not valid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise InvalidInputError("curve file must hold a JSON object")
        return cls.from_dict(data)

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2) + "\n", encoding="utf-8")

    # -- graph data ----------------------------------------------------

    @property
    def gamma(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.gamma) - 1

    @cached_property
    def multiplicity(self) -> dict[tuple[int, int], int]:
        return dict(Counter(self.edges))

    @cached_property
    def weights(self) -> tuple[tuple[int, ...], ...]:
        """Symmetric matrix of edge multiplicities."""
        w = [[0] * self.gamma for _ in range(self.gamma)]
        for (a, b), m in self.multiplicity.items():
            w[a][b] += m
            w[b][a] += m
        return tuple(tuple(row) for row in w)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        return tuple(
            sum(1 << j for j, m in enumerate(row) if m) for row in self.weights
        )

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidInputError(f"unknown component label {label!r}") from None

    def subcurve(self, *labels: str) -> Subcurve:
        return Subcurve.of(self.index(l) for l in labels)

    def subcurve_labels(self, z: Subcurve) -> list[str]:
        return [self.labels[i] for i in z.members]

    # -- mask-level arithmetic (mask may be 0 for the empty subcurve) ---

    def is_connected_mask(self, mask: int) -> bool:
        return mask != 0 and self._component_count(mask) == 1

    def _component_count(self, mask: int) -> int:
        nbrs = self.neighbor_masks
        left, count = mask, 0
        while left:
            frontier = left & -left
            seen = 0
            while frontier:
                seen |= frontier
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= nbrs[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & mask & ~seen
            left &= ~seen
            count += 1
        return count

    def internal_edges(self, mask: int) -> int:
        return sum(
            m for (a, b), m in self.multiplicity.items() if mask >> a & 1 and mask >> b & 1
        )

    def cut_edges(self, mask: int) -> int:
        return sum(
            m for (a, b), m in self.multiplicity.items() if (mask >> a & 1) != (mask >> b & 1)
        )

    def edges_to(self, i: int, mask: int) -> int:
        """Number of nodes joining component ``i`` to the components in ``mask``."""
        row = self.weights[i]
        return sum(row[j] for j in range(self.gamma) if mask >> j & 1)

    def genus_mask(self, mask: int) -> int:
        if mask == 0:
            return 0
        return (
            sum(g for i, g in enumerate(self.genera) if mask >> i & 1)
            + self.internal_edges(mask)
            - mask.bit_count()
            + self._component_count(mask)
        )

    @cached_property
    def connected_masks(self) -> tuple[int, ...]:
        return tuple(m for m in range(1, self.full_mask + 1) if self.is_connected_mask(m))

    @cached_property
    def _connected_set(self) -> frozenset[int]:
        return frozenset(self.connected_masks)

    @cached_property
    def _connected_genus(self) -> dict[int, int]:
        return {m: self.genus_mask(m) for m in self.connected_masks}

    def connected_genus(self, mask: int) -> int:
        """Genus of a connected subcurve, from the per-curve table."""
        return self._connected_genus[mask]

    def is_connected_submask(self, mask: int) -> bool:
        return mask in self._connected_set


def total_genus(curve: NodalCurve) -> int:
    return len(curve.edges) - curve.gamma + 1 + sum(curve.genera)


def complement(curve: NodalCurve, z: Subcurve) -> Subcurve | None:
    """Complementary subcurve, or ``None`` when ``z`` is the whole curve."""
    rest = curve.full_mask & ~z.mask
    return Subcurve(rest) if rest else None


def edge_cut(curve: NodalCurve, z: Subcurve) -> int:
    return curve.cut_edges(z.mask)


def n_components(curve: NodalCurve, z: Subcurve) -> int:
    return curve._component_count(z.mask)


def subcurve_genus(curve: NodalCurve, z: Subcurve) -> int:
    return curve.genus_mask(z.mask)


def connected_subcurves(curve: NodalCurve) -> list[Subcurve]:
    """All connected subcurves, ascending by bitmask."""
    return [Subcurve(m) for m in curve.connected_masks]


def induced_curve(curve: NodalCurve, z: Subcurve) -> NodalCurve:
    """The connected subcurve ``z`` as a standalone nodal curve."""
    members = z.members
    pos = {v: i for i, v in enumerate(members)}
    edges = [(pos[a], pos[b]) for a, b in curve.edges if a in pos and b in pos]
    return NodalCurve(
        tuple(curve.labels[v] for v in members),
        tuple(curve.genera[v] for v in members),
        tuple(edges),
    )
