"""Khovanov Laplacian and Dirac spectra of knot and link diagrams.

Builds the bigraded cochain complex of a link diagram from its PD code,
assembles combinatorial Laplacians and the Dirac operator in each bidegree,
and reads topology out of the spectra: harmonic multiplicities recover
Khovanov homology (hence the Jones polynomial), while the nonzero spectrum
carries diagram-sensitive geometric information such as chirality signals.
"""

__version__ = "0.1.0"

from .analysis import (
    HeatmapTable,
    MirrorReport,
    SymmetryReport,
    heatmap_table,
    mirror_report,
    symmetry_report,
)
from .chain import KhovanovComplex, complex_for, differential_matrix
from .errors import (
    ComplexViolationError,
    ComputationError,
    DiagramError,
    EigenConvergenceError,
    EmptyDiagramError,
    KhovlapError,
    LabelCountError,
    NonContiguousComponentError,
    NonDivisibleError,
    OracleMismatchError,
    PDSyntaxError,
    UnknownEdgeError,
)
from .oracle import graded_euler_characteristic, homology_rank, homology_table, verify_complex
from .pd import (
    Crossing,
    LinkDiagram,
    diagram_from_crossings,
    iter_bundled_table,
    mirror_diagram,
    parse_knot_table,
    parse_pd,
    r1_twist,
    serialize_pd,
)
from .poly import BivariatePoly, LaurentPoly
from .spectral import (
    DiracMatrix,
    Laplacian,
    Spectrum,
    betti,
    betti_table,
    dirac,
    jones_polynomial,
    knot_determinant,
    laplacian,
    poincare_polynomial,
    spectra_table,
    spectrum,
)

__all__ = [
    "__version__",
    "BivariatePoly",
    "ComplexViolationError",
    "ComputationError",
    "Crossing",
    "DiagramError",
    "DiracMatrix",
    "EigenConvergenceError",
    "EmptyDiagramError",
    "HeatmapTable",
    "KhovanovComplex",
    "KhovlapError",
    "LabelCountError",
    "Laplacian",
    "LaurentPoly",
    "LinkDiagram",
    "MirrorReport",
    "NonContiguousComponentError",
    "NonDivisibleError",
    "OracleMismatchError",
    "PDSyntaxError",
    "UnknownEdgeError",
    "Spectrum",
    "SymmetryReport",
    "betti",
    "betti_table",
    "complex_for",
    "diagram_from_crossings",
    "differential_matrix",
    "dirac",
    "graded_euler_characteristic",
    "heatmap_table",
    "homology_rank",
    "homology_table",
    "iter_bundled_table",
    "jones_polynomial",
    "knot_determinant",
    "laplacian",
    "mirror_diagram",
    "mirror_report",
    "parse_knot_table",
    "parse_pd",
    "poincare_polynomial",
    "r1_twist",
    "serialize_pd",
    "spectra_table",
    "spectrum",
    "symmetry_report",
    "verify_complex",
]
