"""Desk-scale verification engine for a Born-Infeld-type action that couples
gravity and the electroweak sector through Dirac-matrix invariants.

Subpackages cover: exact polynomial fields and truncated series, the dense
contraction kernels (compiled with a numpy fallback), Dirac-matrix
construction from tetrads, gravity- and gauge-sector curvature, the
determinant-like scalar densities with their expansions, the hyperbolic
pair-rotation sector, and the physical-constant formulas.
"""

from .kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["KERNEL_BACKEND", "__version__"]
