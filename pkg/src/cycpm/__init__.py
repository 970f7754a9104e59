"""Circular (rotation-invariant) string matching, exact and approximate."""

from cycpm.pillar import Fragment, Progression, TextStore, build

__all__ = ["Fragment", "Progression", "TextStore", "build"]
__version__ = "0.1.0"
