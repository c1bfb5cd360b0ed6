"""Numerically stable invariants and eigenvalues of 3x3 matrices.

The heavy lifting lives in the compiled extension `_eig33`; this package
re-exports its public surface.
"""

try:
    from ._eig33 import *  # noqa: F401,F403  (installed layout)
    from ._eig33 import __all__ as _impl_all
except ImportError:  # in-tree builds put the extension on PYTHONPATH instead
    from _eig33 import *  # noqa: F401,F403
    from _eig33 import __all__ as _impl_all

__all__ = list(_impl_all)
__version__ = "0.1.0"
