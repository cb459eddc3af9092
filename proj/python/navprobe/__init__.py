"""Language-side analysis toolkit for instruction-guided navigation corpora.

Thin wrapper around the C++ extension module. The extension lives inside
the package in installed wheels and on the build tree's PYTHONPATH during
development.
"""

try:
    from ._navprobe import *  # noqa: F401,F403
    from . import _navprobe as _impl
except ImportError:  # in-tree builds put the extension on PYTHONPATH directly
    from _navprobe import *  # noqa: F401,F403
    import _navprobe as _impl

__version__ = "0.1.0"
__all__ = [name for name in dir(_impl) if not name.startswith("_")]
