"""quadalg: exact noncommutative-algebra engine and verification suites for
the quadratic algebras of Askey-Wilson type (Racah, Hahn, Bannai-Ito,
Askey-Wilson, q-Hahn) in their oscillator, spinorial and q-oscillator
realizations.
"""

from .engine import (Element, anticommutator, cliffdiff_algebra, commutator,
                     normalize, q_commutator, qosc_algebra, weyl_algebra)
from .fields import Gauss, PoleError, RatFunc, specialize

__version__ = "0.1.0"

__all__ = [
    "Element", "Gauss", "PoleError", "RatFunc", "anticommutator",
    "cliffdiff_algebra", "commutator", "normalize", "q_commutator",
    "qosc_algebra", "specialize", "weyl_algebra", "__version__",
]
