"""Synchronization strings, indexing decoders, and insertion/deletion codes.

Thin wrapper over the C++ extension module; see the package README for the
underlying library and CLI.
"""

from ._syncstr import *  # noqa: F401,F403
from ._syncstr import __doc__ as _core_doc  # noqa: F401
