"""The cube of smoothings: resolved-diagram cycles and signed cube edges."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .pd import LinkDiagram


@dataclass(frozen=True)
class SmoothingState:
    """One cube vertex: a full resolution of the diagram into cycles.

    ``alpha`` is the 0/1 choice per crossing (in crossing order), ``cycles``
    the partition of edge labels, each cycle keyed by its minimum label.
    """

    alpha: tuple[int, ...]
    cycles: tuple[frozenset[int], ...]

    @property
    def height(self) -> int:
        return sum(self.alpha)

    @property
    def cycle_labels(self) -> tuple[int, ...]:
        return tuple(min(c) for c in self.cycles)


@dataclass(frozen=True)
class CubeEdge:
    """A directed cube edge flipping one coordinate 0 -> 1."""

    source: tuple[int, ...]
    star: int  # coordinate index holding the star

    @property
    def target(self) -> tuple[int, ...]:
        t = list(self.source)
        t[self.star] = 1
        return tuple(t)

    @property
    def sign(self) -> int:
        return -1 if sum(self.source[: self.star]) % 2 else 1

    @property
    def weight(self) -> int:
        return sum(self.source)

    @property
    def xi(self) -> tuple:
        return tuple("*" if i == self.star else a for i, a in enumerate(self.source))


def smoothing_pairs(crossing, choice: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Edge pairings a smoothing induces at one crossing.

    The 0-smoothing joins {i,l} and {j,k}; the 1-smoothing joins {i,j} and
    {k,l}.  This global choice is calibrated so the table trefoil code gives
    two cycles at 000 and three at 111.
    """
    i, j, k, l = crossing
    if choice == 0:
        return (i, l), (j, k)
    return (i, j), (k, l)


def smoothing_cycles(d: LinkDiagram, alpha: Sequence[int]) -> SmoothingState:
    """Resolve every crossing per ``alpha`` and collect the resulting cycles."""
    if len(alpha) != d.n:
        raise ValueError(f"alpha has length {len(alpha)}, diagram has {d.n} crossings")
    parent = list(range(d.edge_count + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c, a in zip(d.crossings, alpha):
        for x, y in smoothing_pairs(c, a):
            parent[find(x)] = find(y)

    groups: dict[int, set[int]] = {}
    for e in d.edge_labels():
        groups.setdefault(find(e), set()).add(e)
    cycles = tuple(
        sorted((frozenset(g) for g in groups.values()), key=min)
    )
    return SmoothingState(tuple(alpha), cycles)


def cube_edges_from(alpha: Sequence[int]) -> list[CubeEdge]:
    """All outgoing cube edges of a vertex: one per 0-coordinate."""
    alpha = tuple(alpha)
    return [CubeEdge(alpha, i) for i, a in enumerate(alpha) if a == 0]


def all_vertices(n: int):
    """Cube vertices in ascending order of alpha read as a binary numeral."""
    for v in range(1 << n):
        yield tuple((v >> (n - 1 - i)) & 1 for i in range(n))
