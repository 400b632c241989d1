"""Kernel backend selection.

The compiled extension is preferred when importable; otherwise the pure
Python twin is used. Set CHIBOUND_KERNELS=py (or =c) to force a backend.
Both implement identical algorithms with identical tie-breaking, so the
choice never changes a result, only the speed.
"""

import os

_forced = os.environ.get("CHIBOUND_KERNELS", "auto").strip().lower()

if _forced in ("py", "python"):
    from . import pykernels as _impl
elif _forced in ("auto", "", "c"):
    try:
        from . import _ckernels as _impl
    except ImportError:
        if _forced == "c":
            raise
        from . import pykernels as _impl
else:
    raise RuntimeError(f"CHIBOUND_KERNELS must be 'auto', 'c', or 'py', got {_forced!r}")

BACKEND = _impl.BACKEND_NAME

greedy_clique = _impl.greedy_clique
k_color = _impl.k_color
max_clique = _impl.max_clique
find_embedding = _impl.find_embedding
count_embeddings = _impl.count_embeddings
