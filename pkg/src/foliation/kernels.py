"""Backend selection for the integer-polynomial kernels.

The compiled extension ``foliation._intpoly`` is preferred when it was built;
``FOLIATION_PURE_PYTHON=1`` in the environment forces the pure-Python twin.
Both expose the same functions with identical semantics.
"""

import os

if os.environ.get("FOLIATION_PURE_PYTHON") == "1":
    from . import _intpoly_py as impl
else:
    try:
        from . import _intpoly as impl  # type: ignore[no-redef]
    except ImportError:
        from . import _intpoly_py as impl  # type: ignore[no-redef]

BACKEND = impl.BACKEND


def get_backend(name):
    """Return a kernel module by name ("pure" or "compiled").

    Used by the benchmark and the backend-equivalence tests; normal code goes
    through the selected ``impl``.
    """
    if name == "pure":
        from . import _intpoly_py

        return _intpoly_py
    if name == "compiled":
        from . import _intpoly

        return _intpoly
    raise ValueError(f"unknown kernel backend: {name!r}")
