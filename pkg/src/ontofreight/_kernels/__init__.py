"""Hot-kernel selection: compiled extension if available, else pure Python.

Set ONTOFREIGHT_PURE_PYTHON=1 to force the fallback (used by the benchmark
and by tests that exercise both back ends).
"""

import os

if os.environ.get("ONTOFREIGHT_PURE_PYTHON") == "1":
    from .py_kernels import enumerate_paths, pareto_mask

    BACKEND = "python"
else:
    try:
        from ._speedups import enumerate_paths, pareto_mask

        BACKEND = "compiled"
    except ImportError:  # extension not built; degrade gracefully
        from .py_kernels import enumerate_paths, pareto_mask

        BACKEND = "python"

__all__ = ["BACKEND", "enumerate_paths", "pareto_mask"]
