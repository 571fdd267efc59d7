"""Kernel backend selection.

The structural kernel lives in ``cadeque._core`` as plain Python and may
additionally be compiled into extension modules under ``cadeque._ccore``
(see tools/build_kernel.py).  The compiled twin is preferred when it
imports; set CADEQUE_BACKEND=pure or =compiled to force one side.
"""

import os

_requested = os.environ.get("CADEQUE_BACKEND", "auto").strip().lower()

if _requested not in ("auto", "pure", "compiled"):
    raise ValueError("CADEQUE_BACKEND must be auto, pure, or compiled")

backend_name = "pure"
if _requested in ("auto", "compiled"):
    try:
        from ._ccore import work, colors, counter, deque, sbuffer, cadeque  # noqa: F401
        from ._ccore import cadeque as cadeques, deque as deques  # noqa: F401

        backend_name = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise ImportError(
                "compiled kernel requested but not built; run tools/build_kernel.py"
            )

if backend_name == "pure":
    from ._core import work, colors, counter, deque, sbuffer, cadeque  # noqa: F401
    from ._core import cadeque as cadeques, deque as deques  # noqa: F401


def load(name):
    """Load one backend family explicitly: 'pure' or 'compiled'.

    Returns a namespace with the kernel modules; used by the benchmark's
    backend comparison."""
    if name == "pure":
        from ._core import work, colors, counter, deque, sbuffer, cadeque
    elif name == "compiled":
        from ._ccore import work, colors, counter, deque, sbuffer, cadeque
    else:
        raise ValueError(name)

    class _NS:
        pass

    ns = _NS()
    ns.name = name
    ns.work = work
    ns.colors = colors
    ns.counter = counter
    ns.deque = deque
    ns.sbuffer = sbuffer
    ns.cadeque = cadeque
    return ns


def available_backends():
    out = ["pure"]
    try:
        from ._ccore import cadeque  # noqa: F401

        out.append("compiled")
    except ImportError:
        pass
    return out
