"""Finite blocks of category O over triangular generalized Weyl algebras.

Closed formulas (``blockcalc``), the quiver algebra and its phi-basis
(``quiver``), explicit representations as an oracle (``repcat``,
``submodules``), Cartan data and block discovery (``cartan``) and the
tableau combinatorics (``styt``).
"""

__version__ = "0.1.0"
