"""Kernel backend selection.

The compiled ``_speedups`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` take over.  Set ``DARTDIG_PURE_PYTHON=1`` to force
the fallback.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("DARTDIG_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _speedups as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

_active = compiled_backend if compiled_backend is not None else python_backend

BACKEND = _active.BACKEND
scc_csr = _active.scc_csr
scc_a2d = _active.scc_a2d
bipartite_csr = _active.bipartite_csr
bipartite_a2d = _active.bipartite_a2d
product_bfs = _active.product_bfs


def available_backends():
    """Backend modules importable in this environment, fallback first."""
    found = [python_backend]
    if compiled_backend is not None:
        found.append(compiled_backend)
    return found
