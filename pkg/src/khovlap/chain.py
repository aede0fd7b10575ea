"""Bigraded chain groups and differentials of the cube of smoothings.

Basis ordering is fixed: cube vertices ascend as binary numerals (first
coordinate most significant); within a vertex, sign vectors ascend with
v- < v+ and the lowest-labelled cycle's factor most significant.  This
reproduces printed reference matrices entry-for-entry.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .cube import CubeEdge, SmoothingState, all_vertices, cube_edges_from, smoothing_cycles
from .errors import ComplexViolationError
from .pd import LinkDiagram

V_MINUS, V_PLUS = 0, 1


@dataclass(frozen=True)
class BasisElement:
    """A tensor basis vector: one v+/v- factor per cycle of its smoothing."""

    alpha: tuple[int, ...]
    signs: tuple[int, ...]  # 0 = v-, 1 = v+, ordered by ascending cycle label
    r: int
    q: int

    def label(self, state: SmoothingState) -> str:
        bits = "".join(str(a) for a in self.alpha)
        factors = "".join(
            f"v{'+' if s else '-'}^{lab}" for s, lab in zip(self.signs, state.cycle_labels)
        )
        return f"V_{bits} {factors}"


@dataclass(frozen=True)
class SparseIntMatrix:
    """Integer matrix in coordinate form, entries sorted by (row, col)."""

    shape: tuple[int, int]
    entries: tuple[tuple[int, int, int], ...]  # (row, col, value)

    def to_dense(self) -> np.ndarray:
        m = np.zeros(self.shape, dtype=np.int64)
        for r, c, v in self.entries:
            m[r, c] = v
        return m


class KhovanovComplex:
    """Cached per-diagram cube, graded bases and differential matrices."""

    def __init__(self, d: LinkDiagram):
        self.d = d
        self.n = d.n
        self.n_plus = d.n_plus
        self.n_minus = d.n_minus
        self._states: dict[tuple[int, ...], SmoothingState] = {}
        self._basis: dict[tuple[int, int], list[BasisElement]] | None = None
        self._index: dict[tuple[int, int], dict[tuple, int]] = {}
        self._matrices: dict[tuple[int, int], SparseIntMatrix] = {}

    # -- cube ---------------------------------------------------------------

    def state(self, alpha: tuple[int, ...]) -> SmoothingState:
        st = self._states.get(alpha)
        if st is None:
            st = smoothing_cycles(self.d, alpha)
            self._states[alpha] = st
        return st

    # -- graded basis ---------------------------------------------------------

    @property
    def r_range(self) -> range:
        return range(-self.n_minus, self.n - self.n_minus + 1)

    def basis(self) -> dict[tuple[int, int], list[BasisElement]]:
        if self._basis is None:
            cells: dict[tuple[int, int], list[BasisElement]] = {}
            shift = self.n_plus - 2 * self.n_minus
            for alpha in all_vertices(self.n):
                st = self.state(alpha)
                ell = st.height
                r = ell - self.n_minus
                c = len(st.cycles)
                for signs in itertools.product((V_MINUS, V_PLUS), repeat=c):
                    q = 2 * sum(signs) - c + ell + shift
                    cells.setdefault((r, q), []).append(BasisElement(alpha, signs, r, q))
            self._basis = cells
            for cell, elems in cells.items():
                self._index[cell] = {(e.alpha, e.signs): i for i, e in enumerate(elems)}
        return self._basis

    def cell(self, r: int, q: int) -> list[BasisElement]:
        return self.basis().get((r, q), [])

    def dim(self, r: int, q: int) -> int:
        return len(self.cell(r, q))

    def q_values(self) -> list[int]:
        return sorted({q for _, q in self.basis()})

    # -- differentials ----------------------------------------------------------

    def _edge_plan(self, edge: CubeEdge):
        """Factor correspondence across one cube edge (merge or split)."""
        src = self.state(edge.source)
        tgt = self.state(edge.target)
        src_sets = {s: i for i, s in enumerate(src.cycles)}
        tgt_sets = {s: i for i, s in enumerate(tgt.cycles)}
        if len(src.cycles) == len(tgt.cycles) + 1:
            changed_src = [i for s, i in src_sets.items() if s not in tgt_sets]
            changed_tgt = [i for s, i in tgt_sets.items() if s not in src_sets]
            if len(changed_src) != 2 or len(changed_tgt) != 1:
                raise ComplexViolationError(
                    f"cube edge {edge.xi} is not a simple merge"
                )
            a, b = changed_src
            t = changed_tgt[0]
            if src.cycles[a] | src.cycles[b] != tgt.cycles[t]:
                raise ComplexViolationError(f"merged cycle mismatch on edge {edge.xi}")
            passthrough = {
                i: tgt_sets[s] for s, i in src_sets.items() if s in tgt_sets
            }
            return ("merge", (a, b), t, passthrough, tgt)
        if len(tgt.cycles) == len(src.cycles) + 1:
            changed_src = [i for s, i in src_sets.items() if s not in tgt_sets]
            changed_tgt = [i for s, i in tgt_sets.items() if s not in src_sets]
            if len(changed_src) != 1 or len(changed_tgt) != 2:
                raise ComplexViolationError(f"cube edge {edge.xi} is not a simple split")
            s0 = changed_src[0]
            t1, t2 = sorted(changed_tgt)
            if tgt.cycles[t1] | tgt.cycles[t2] != src.cycles[s0]:
                raise ComplexViolationError(f"split cycle mismatch on edge {edge.xi}")
            passthrough = {
                i: tgt_sets[s] for s, i in src_sets.items() if s in tgt_sets
            }
            return ("split", s0, (t1, t2), passthrough, tgt)
        raise ComplexViolationError(
            f"cycle counts differ by {len(tgt.cycles) - len(src.cycles)} on edge {edge.xi}"
        )

    def edge_differential(
        self, edge: CubeEdge, x: BasisElement
    ) -> list[tuple[int, BasisElement]]:
        """Apply the merge (m) or split (Delta) map of one cube edge to ``x``.

        Returns an unsigned formal sum of target basis elements; the cube
        sign sgn(xi) is applied during matrix assembly.
        """
        if x.alpha != edge.source:
            raise ValueError("basis element does not live at the edge source")
        kind, a, b, passthrough, tgt = self._edge_plan(edge)
        n_tgt = len(tgt.cycles)
        base = [None] * n_tgt
        for si, ti in passthrough.items():
            base[ti] = x.signs[si]
        out = []
        if kind == "merge":
            sa, sb = x.signs[a[0]], x.signs[a[1]]
            if sa == V_MINUS and sb == V_MINUS:
                return []  # m(v- ⊗ v-) = 0
            merged = V_PLUS if (sa == V_PLUS and sb == V_PLUS) else V_MINUS
            signs = list(base)
            signs[b] = merged
            out.append((1, tuple(signs)))
        else:
            t1, t2 = b
            if x.signs[a] == V_MINUS:
                signs = list(base)
                signs[t1], signs[t2] = V_MINUS, V_MINUS
                out.append((1, tuple(signs)))
            else:
                for s1, s2 in ((V_PLUS, V_MINUS), (V_MINUS, V_PLUS)):
                    signs = list(base)
                    signs[t1], signs[t2] = s1, s2
                    out.append((1, tuple(signs)))
        result = []
        for coef, signs in out:
            y = BasisElement(edge.target, signs, x.r + 1, x.q)
            result.append((coef, y))
        return result

    def matrix(self, r: int, q: int) -> SparseIntMatrix:
        """Matrix of d^{r,q}: C^{r,q} -> C^{r+1,q} in the deterministic bases."""
        key = (r, q)
        cached = self._matrices.get(key)
        if cached is not None:
            return cached
        src = self.cell(r, q)
        tgt_index = self._cell_index(r + 1, q)
        acc: dict[tuple[int, int], int] = {}
        for col, x in enumerate(src):
            for edge in cube_edges_from(x.alpha):
                for coef, y in self.edge_differential(edge, x):
                    row = tgt_index.get((y.alpha, y.signs))
                    if row is None:
                        raise ComplexViolationError(
                            "differential output left its quantum degree", r=r, q=q
                        )
                    acc[(row, col)] = acc.get((row, col), 0) + edge.sign * coef
        entries = tuple(
            (rw, cl, v) for (rw, cl), v in sorted(acc.items()) if v != 0
        )
        for _, _, v in entries:
            if v not in (-1, 1):
                raise ComplexViolationError(
                    f"differential entry {v} outside {{-1,0,1}}", r=r, q=q
                )
        m = SparseIntMatrix((len(self.cell(r + 1, q)), len(src)), entries)
        self._matrices[key] = m
        return m

    def _cell_index(self, r: int, q: int) -> dict[tuple, int]:
        self.basis()
        return self._index.get((r, q), {})


@functools.lru_cache(maxsize=64)
def complex_for(d: LinkDiagram) -> KhovanovComplex:
    return KhovanovComplex(d)


def grade_basis(d: LinkDiagram) -> dict[tuple[int, int], list[BasisElement]]:
    """All (r, q) cells of the normalized complex with their ordered bases."""
    return complex_for(d).basis()


def edge_differential(
    d: LinkDiagram, edge: CubeEdge, x: BasisElement
) -> list[tuple[int, BasisElement]]:
    return complex_for(d).edge_differential(edge, x)


def differential_matrix(d: LinkDiagram, r: int, q: int) -> SparseIntMatrix:
    return complex_for(d).matrix(r, q)
