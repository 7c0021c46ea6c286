"""Exact block computations for the queer Lie superalgebras q(3) and sq(3)."""
from __future__ import annotations

__version__ = "0.1.0"
