"""PairSmell: modular-relation smell detection via consensus modularization.

The heavy lifting lives in the compiled extension; this package re-exports
its surface for both installed wheels and in-tree builds.
"""

try:
    from pairsmell._pairsmell import *  # noqa: F401,F403  (installed layout)
    from pairsmell import _pairsmell as _ext
except ImportError:  # in-tree build: extension sits on PYTHONPATH
    from _pairsmell import *  # noqa: F401,F403
    import _pairsmell as _ext

__version__ = "0.1.0"
__all__ = [name for name in dir(_ext) if not name.startswith("_")]
