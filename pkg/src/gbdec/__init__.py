"""Generalized bicycle codes, anisotropic min-sum decoding, and degeneracy analysis."""

__version__ = "0.1.0"
