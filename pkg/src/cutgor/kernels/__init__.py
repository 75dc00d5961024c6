"""Enumeration kernels with a compiled fast path and a pure fallback.

The compiled extension is preferred when importable.  Set the environment
variable ``CUTGOR_KERNELS=pure`` to force the reference implementation, or
``CUTGOR_KERNELS=compiled`` to fail loudly when the extension is missing.
Both backends expose the same five functions with identical semantics.
"""

import os as _os

_requested = _os.environ.get("CUTGOR_KERNELS", "auto").strip().lower() or "auto"
if _requested not in ("auto", "pure", "compiled"):
    raise ImportError(
        f"CUTGOR_KERNELS must be 'pure', 'compiled', or unset, got {_requested!r}"
    )

if _requested == "pure":
    from . import _pyref as _impl

    BACKEND = "pure"
else:
    try:
        from . import _fast as _impl

        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        from . import _pyref as _impl

        BACKEND = "pure"

count_lattice_points = _impl.count_lattice_points
iter_lattice_points = _impl.iter_lattice_points
list_lattice_points = _impl.list_lattice_points
first_lattice_point = _impl.first_lattice_point
semigroup_layer_counts = _impl.semigroup_layer_counts


def available_backends():
    """Names of importable backends, compiled first when present."""
    names = []
    try:
        from . import _fast  # noqa: F401

        names.append("compiled")
    except ImportError:
        pass
    names.append("pure")
    return tuple(names)


def backend_module(name):
    if name == "pure":
        from . import _pyref

        return _pyref
    if name == "compiled":
        from . import _fast

        return _fast
    raise ValueError(f"unknown backend {name!r}")
