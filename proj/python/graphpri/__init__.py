"""Entropy-guided graph sparsification.

Thin wrapper over the compiled core; see the package README for usage.
"""

try:
    from ._graphpri import *  # noqa: F401,F403
    from ._graphpri import __version__  # noqa: F401
except ImportError:  # development build: module sits on PYTHONPATH
    from _graphpri import *  # noqa: F401,F403
    from _graphpri import __version__  # noqa: F401
