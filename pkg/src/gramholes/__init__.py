"""Gram determinants of curve diagrams in a disk with holes."""

from __future__ import annotations

__version__ = "0.1.0"
