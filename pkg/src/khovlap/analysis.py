"""Mirror-symmetry reporting: spectrum symmetry, mirror comparison, heatmaps."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .pd import LinkDiagram, mirror_diagram
from .spectral import Spectrum, betti_table, spectra_table

DEFAULT_TOL = 1e-6

SYMMETRIC = "symmetric"
ASYMMETRIC = "asymmetric"
ONE_SIDE_EMPTY = "one-side-empty"


@dataclass(frozen=True)
class CellVerdict:
    r: int
    q: int
    verdict: str
    spectrum: tuple[float, ...]
    mirror_spectrum: tuple[float, ...]
    betti: int = 0
    lam: float | None = None


@dataclass(frozen=True)
class SymmetryReport:
    """Per-cell comparison of S^{r,q} against S^{-r,-q}."""

    knot: str
    all_symmetric: bool
    cells: tuple[CellVerdict, ...]

    def verdict(self, r: int, q: int) -> str | None:
        for c in self.cells:
            if (c.r, c.q) == (r, q):
                return c.verdict
        return None

    def to_json(self, precision: int = 6) -> str:
        return json.dumps(
            {
                "knot": self.knot,
                "all_symmetric": self.all_symmetric,
                "cells": [
                    {
                        "r": c.r,
                        "q": c.q,
                        "verdict": c.verdict,
                        "spectrum": [_sig(v, precision) for v in c.spectrum],
                        "mirror_spectrum": [_sig(v, precision) for v in c.mirror_spectrum],
                        "betti": c.betti,
                        "lambda": None if c.lam is None else _sig(c.lam, precision),
                    }
                    for c in self.cells
                ],
            },
            indent=2,
        )


def _sig(v: float, precision: int) -> float:
    return float(f"{v:.{precision}g}")


def _compare_cells(
    table_a: dict[tuple[int, int], Spectrum],
    table_b: dict[tuple[int, int], Spectrum],
    knot: str,
    tol: float,
    reflect_b: bool,
) -> SymmetryReport:
    keys = set(table_a)
    keys |= {((-r, -q) if reflect_b else (r, q)) for (r, q) in table_b}
    cells = []
    all_symmetric = True
    for r, q in sorted(keys):
        sa = table_a.get((r, q))
        sb = table_b.get((-r, -q) if reflect_b else (r, q))
        va = sa.values if sa else ()
        vb = sb.values if sb else ()
        if sa is None or sb is None:
            verdict = ONE_SIDE_EMPTY
        elif sa.matches(sb, tol=tol):
            verdict = SYMMETRIC
        else:
            verdict = ASYMMETRIC
        if verdict != SYMMETRIC:
            all_symmetric = False
        cells.append(
            CellVerdict(
                r,
                q,
                verdict,
                va,
                vb,
                betti=sa.zero_multiplicity if sa else 0,
                lam=sa.least_nonzero if sa else None,
            )
        )
    return SymmetryReport(knot, all_symmetric, tuple(cells))


def symmetry_report(
    d: LinkDiagram, tol: float = DEFAULT_TOL, knot: str = ""
) -> SymmetryReport:
    """Compare S^{r,q} with S^{-r,-q} of the same diagram, cell by cell.

    A cell that is nonempty on only one side counts as not symmetric: the
    dimension mismatch is itself the strongest asymmetry signal.
    """
    table = spectra_table(d)
    return _compare_cells(table, table, knot, tol, reflect_b=True)


@dataclass(frozen=True)
class MirrorReport:
    """Does anything distinguish a diagram from its mirror image?"""

    knot: str
    homology_differs: bool
    spectra_differ: bool
    cells: tuple[CellVerdict, ...] = field(repr=False)

    @property
    def distinguished_by(self) -> str:
        if self.homology_differs:
            return "homology"
        if self.spectra_differ:
            return "spectra"
        return "nothing"


def mirror_report(d: LinkDiagram, tol: float = DEFAULT_TOL, knot: str = "") -> MirrorReport:
    """Compare the diagram against its actual mirror diagram, per cell."""
    md = mirror_diagram(d)
    bt, mbt = betti_table(d), betti_table(md)
    report = _compare_cells(spectra_table(d), spectra_table(md), knot, tol, reflect_b=False)
    return MirrorReport(
        knot,
        homology_differs=bt != mbt,
        spectra_differ=not report.all_symmetric,
        cells=report.cells,
    )


@dataclass(frozen=True)
class HeatmapTable:
    """Least nonzero eigenvalue and Betti rank per nonempty cell."""

    lam: dict[tuple[int, int], float]
    betti: dict[tuple[int, int], int]

    def to_csv(self, precision: int = 6) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["r", "q", "lambda", "betti"])
        for r, q in sorted(set(self.lam) | set(self.betti)):
            lam = self.lam.get((r, q))
            w.writerow(
                [r, q, "" if lam is None else f"{lam:.{precision}g}", self.betti.get((r, q), 0)]
            )
        return buf.getvalue()


def heatmap_table(d: LinkDiagram) -> HeatmapTable:
    """lambda^{r,q} plus the Betti companion table, ready for plotting."""
    table = spectra_table(d)
    bt = betti_table(d)
    lam = {}
    for cell, spec in table.items():
        least = spec.least_nonzero
        if least is not None:
            lam[cell] = least
    betti_full = {cell: bt.get(cell, 0) for cell in table}
    return HeatmapTable(lam, betti_full)
