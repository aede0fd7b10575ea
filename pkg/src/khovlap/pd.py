"""Planar-diagram (PD) codes: parsing, validation, signs, mirrors, R1 twists.

A PD code lists each crossing as ``X[i,j,k,l]`` with the four incident edge
labels counterclockwise, starting from the incoming under-strand edge.  Edge
labels increase along the orientation of each component and each component
occupies a contiguous block of labels.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .errors import (
    DiagramError,
    EmptyDiagramError,
    LabelCountError,
    NonContiguousComponentError,
    PDSyntaxError,
    UnknownEdgeError,
)


class Crossing(NamedTuple):
    i: int
    j: int
    k: int
    l: int


@dataclass(frozen=True)
class LinkDiagram:
    """A validated PD diagram.

    ``signs[c]`` is +1/-1 per crossing, ``over_in[c]`` is the slot index
    (1 or 3) of the over-strand's incoming edge, and ``components`` holds
    the contiguous label range ``(lo, hi)`` of each link component.
    """

    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, int], ...]
    signs: tuple[int, ...]
    over_in: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def n_plus(self) -> int:
        return sum(1 for s in self.signs if s > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    def edge_labels(self) -> range:
        return range(1, self.edge_count + 1)

    def successor(self, e: int) -> int:
        """Next edge label along the orientation (wraps within a component)."""
        for lo, hi in self.components:
            if lo <= e <= hi:
                return lo if e == hi else e + 1
        raise UnknownEdgeError(f"edge {e} not in diagram")


_TERM = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")
_SKIP = re.compile(r"[\s,]+")


def parse_pd(text: str) -> LinkDiagram:
    """Parse a PD-code string into a validated :class:`LinkDiagram`.

    The grammar is whitespace- or comma-separated ``X[a,b,c,d]`` terms with
    positive integer labels; ``#`` starts a comment running to end of line.
    Crossing order is preserved exactly as written.
    """
    stripped = "\n".join(line.split("#", 1)[0] for line in text.split("\n"))
    crossings: list[Crossing] = []
    pos = 0
    while pos < len(stripped):
        m = _SKIP.match(stripped, pos)
        if m:
            pos = m.end()
            continue
        m = _TERM.match(stripped, pos)
        if m is None:
            raise PDSyntaxError("expected crossing term X[a,b,c,d]", pos)
        labels = tuple(int(g) for g in m.groups())
        if 0 in labels:
            raise PDSyntaxError("edge labels must be positive", pos)
        crossings.append(Crossing(*labels))
        pos = m.end()
    if not crossings:
        raise EmptyDiagramError("PD code contains no crossings")
    return diagram_from_crossings(crossings)


def serialize_pd(d: LinkDiagram) -> str:
    """Inverse of :func:`parse_pd` on validated diagrams."""
    return " ".join(f"X[{c.i},{c.j},{c.k},{c.l}]" for c in d.crossings)


def _label_occurrences(crossings: Sequence[Crossing]) -> dict[int, list[tuple[int, int]]]:
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, c in enumerate(crossings):
        for slot, e in enumerate(c):
            occ.setdefault(e, []).append((ci, slot))
    return occ


def _find_components(crossings: Sequence[Crossing]) -> tuple[tuple[int, int], ...]:
    # Union-find over edge labels: each strand through a crossing joins
    # its incoming and outgoing labels (i-k under, j-l over).
    labels = sorted(_label_occurrences(crossings))
    parent = {e: e for e in labels}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        parent[find(a)] = find(b)

    for c in crossings:
        union(c.i, c.k)
        union(c.j, c.l)
    groups: dict[int, list[int]] = {}
    for e in labels:
        groups.setdefault(find(e), []).append(e)
    comps = []
    for members in groups.values():
        lo, hi = min(members), max(members)
        if hi - lo + 1 != len(members):
            raise NonContiguousComponentError(
                f"component labels {sorted(members)} are not a contiguous range"
            )
        comps.append((lo, hi))
    return tuple(sorted(comps))


def _resolve_over_in(
    crossings: Sequence[Crossing], components: Sequence[tuple[int, int]]
) -> tuple[int, ...]:
    """Classify, per crossing, which of slots 1/3 carries the incoming over edge.

    Each label occurs at exactly two slots: once incoming, once outgoing.
    Under slots are known (i in, k out); the rest is fixed-point propagation,
    with numeric label succession as a fallback for all-over components.
    """
    occ = _label_occurrences(crossings)
    # state[(crossing, slot)] = "in" | "out" | None
    state: dict[tuple[int, int], str] = {}
    for ci, c in enumerate(crossings):
        state[(ci, 0)] = "in"
        state[(ci, 2)] = "out"
        state[(ci, 1)] = state[(ci, 3)] = None

    changed = True
    while changed:
        changed = False
        for e, places in occ.items():
            if len(places) != 2:
                continue  # caught by validation later
            a, b = places
            sa, sb = state[a], state[b]
            if sa is not None and sb is None:
                state[b] = "out" if sa == "in" else "in"
                changed = True
            elif sb is not None and sa is None:
                state[a] = "out" if sb == "in" else "in"
                changed = True
        for ci in range(len(crossings)):
            sj, sl = state[(ci, 1)], state[(ci, 3)]
            if sj is not None and sl is None:
                state[(ci, 3)] = "out" if sj == "in" else "in"
                changed = True
            elif sl is not None and sj is None:
                state[(ci, 1)] = "out" if sl == "in" else "in"
                changed = True

    def succ(e: int) -> int:
        for lo, hi in components:
            if lo <= e <= hi:
                return lo if e == hi else e + 1
        raise UnknownEdgeError(f"edge {e} not in diagram")

    over_in = []
    for ci, c in enumerate(crossings):
        sj = state[(ci, 1)]
        if sj is not None:
            over_in.append(1 if sj == "in" else 3)
        elif succ(c.j) == c.l:
            over_in.append(1)
        elif succ(c.l) == c.j:
            over_in.append(3)
        else:
            raise DiagramError(
                f"cannot orient over strand of crossing {ci}: X{tuple(c)}"
            )
    return tuple(over_in)


def diagram_from_crossings(crossings: Sequence[Crossing]) -> LinkDiagram:
    """Validate raw crossings and derive components, orientations and signs."""
    crossings = tuple(Crossing(*c) for c in crossings)
    if not crossings:
        raise EmptyDiagramError("diagram has no crossings")
    occ = _label_occurrences(crossings)
    expected = set(range(1, 2 * len(crossings) + 1))
    if set(occ) != expected:
        missing = sorted(expected - set(occ))
        extra = sorted(set(occ) - expected)
        raise LabelCountError(
            f"edge labels must be exactly 1..{2 * len(crossings)}; "
            f"missing {missing}, unexpected {extra}"
        )
    for e, places in occ.items():
        if len(places) != 2:
            raise LabelCountError(f"edge label {e} appears {len(places)} times, expected 2")
    components = _find_components(crossings)
    over_in = _resolve_over_in(crossings, components)

    d = LinkDiagram(crossings, components, _derive_signs(crossings, over_in), over_in)
    # Orientation consistency: the under strand must follow label succession.
    for c in crossings:
        if d.successor(c.i) != c.k:
            raise DiagramError(
                f"under strand of X{tuple(c)} breaks label succession "
                f"({c.i} -> {c.k})"
            )
    for ci, c in enumerate(crossings):
        j_in = over_in[ci] == 1
        src, dst = (c.j, c.l) if j_in else (c.l, c.j)
        if d.successor(src) != dst:
            raise DiagramError(
                f"over strand of X{tuple(c)} breaks label succession ({src} -> {dst})"
            )
    return d


def _derive_signs(crossings: Sequence[Crossing], over_in: Sequence[int]) -> tuple[int, ...]:
    # Positive exactly when the over strand runs j -> l, i.e. the ccw listing
    # starting at the under-incoming edge meets the over-incoming edge first.
    return tuple(1 if s == 1 else -1 for s in over_in)


def validate_diagram(d: LinkDiagram) -> None:
    """Re-check every LinkDiagram invariant; raises a DiagramError subclass."""
    rebuilt = diagram_from_crossings(d.crossings)
    if rebuilt != d:
        raise DiagramError("diagram fields are inconsistent with its crossings")


def crossing_sign(c: Crossing, d: LinkDiagram) -> int:
    """Sign (+1/-1) of crossing ``c`` of ``d``."""
    for ci, cc in enumerate(d.crossings):
        if cc == c:
            return d.signs[ci]
    raise DiagramError(f"crossing X{tuple(c)} not in diagram")


def mirror_diagram(d: LinkDiagram) -> LinkDiagram:
    """Mirror image: over and under strands swap roles at every crossing.

    Tuples are rotated so the old over-incoming edge becomes the new
    under-incoming first entry, keeping the PD convention intact.  Sign
    counts swap: (n+, n-) -> (n-, n+).
    """
    mirrored = []
    for c, oi in zip(d.crossings, d.over_in):
        if oi == 1:  # over ran j -> l
            mirrored.append(Crossing(c.j, c.k, c.l, c.i))
        else:  # over ran l -> j
            mirrored.append(Crossing(c.l, c.i, c.j, c.k))
    return diagram_from_crossings(mirrored)


def r1_twist(d: LinkDiagram, edge: int, handedness: int = 1) -> LinkDiagram:
    """Insert a Reidemeister-1 kink on ``edge``; returns an (n+1)-crossing diagram.

    ``handedness`` +1 adds a positive crossing, -1 a negative one.  Labels
    above ``edge`` shift by 2 so components stay contiguous.
    """
    if edge not in d.edge_labels():
        raise UnknownEdgeError(f"edge {edge} not in diagram")
    if handedness not in (1, -1):
        raise ValueError("handedness must be +1 or -1")

    def relabel(e: int, incoming: bool) -> int:
        if e > edge:
            return e + 2
        if e == edge:
            # The strand now reaches its old destination via the kink: the
            # occurrence that *arrives* at an old crossing becomes edge+2.
            return edge + 2 if incoming else edge
        return e

    new_crossings = []
    for c, oi in zip(d.crossings, d.over_in):
        inc = {0: True, 2: False, 1: oi == 1, 3: oi == 3}
        new_crossings.append(
            Crossing(*(relabel(e, inc[slot]) for slot, e in enumerate(c)))
        )
    if handedness > 0:
        kink = Crossing(edge, edge + 1, edge + 1, edge + 2)
    else:
        kink = Crossing(edge, edge + 2, edge + 1, edge + 1)
    return diagram_from_crossings(new_crossings + [kink])


def parse_knot_table(text: str) -> list[tuple[str, LinkDiagram]]:
    """Parse a knot-table file: one ``name: <pd-code>`` per line, ``#`` comments."""
    out = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise PDSyntaxError(f"line {lineno}: expected 'name: pd-code'", 0)
        name, code = line.split(":", 1)
        out.append((name.strip(), parse_pd(code)))
    return out


def iter_bundled_table() -> Iterator[tuple[str, LinkDiagram]]:
    """Diagrams from the bundled prime-knot table."""
    from importlib.resources import files

    text = files("khovlap.data").joinpath("knot_table.txt").read_text()
    yield from parse_knot_table(text)
