"""Exact-arithmetic models of so(3,2) and the curvature apparatus of
girdled CR structures in dimension five.

The submodules layer bottom-up: `numfield` (the coefficient field
Q(i, sqrt2, sqrt3)), `linalg` (exact dense linear algebra), `liealg`
(bases, brackets, grading, Killing form), `cohomology` (codifferential
kernels and the torsion complement), `structeq` (symbolic coframe
structure equations and the frame-change check), `model` (the projective
hypersurface and the tube over the light cone), `cli` (verification
suites and artifact emission).
"""

from . import cohomology, liealg, linalg, model, structeq
from .cohomology import codifferential_kernel, torsion_complement
from .liealg import build_basis, grading_decomposition, killing_matrix
from .numfield import AlgNum
from .structeq import (generate_structure_equations, load_constraints,
                       verify_iz_change_of_frame)

__all__ = [
    "AlgNum",
    "build_basis",
    "codifferential_kernel",
    "cohomology",
    "generate_structure_equations",
    "grading_decomposition",
    "killing_matrix",
    "liealg",
    "linalg",
    "load_constraints",
    "model",
    "structeq",
    "torsion_complement",
    "verify_iz_change_of_frame",
]
__version__ = "0.1.0"
