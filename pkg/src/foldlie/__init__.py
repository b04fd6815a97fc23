"""foldlie: exact-arithmetic folding of root systems, Weyl groups, Lie
algebras, Slodowy slices, cameral covers, and Hitchin-base bookkeeping."""

from .kernel import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
