"""Exact computation with weighted partial Motzkin path triangles."""

from .algebra import BiPoly, binomial, catalan, rising_factorial
from .paths import MarkedPath, PartialMotzkinPath, enumerate_paths, r_visible_ups
from .triangle import WeightTriangle, build_triangle, specialized
from .identities import REGISTRY, VerificationReport, det2, sweep, verify_sum_identity

__version__ = "0.1.0"
