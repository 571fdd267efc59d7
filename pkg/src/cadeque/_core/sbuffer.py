"""Size-tracked buffers: a deque plus a claimed lower bound on its size.

Catenable deques store their elements in these buffers.  The bound lets
callers prove "this extraction cannot fail" arithmetically; it is
maintained exactly here (bound == true size), but the invariant is
stated and validated as bound <= size so under-approximating operations
remain legal.
"""

from . import deque as dq
from .work import tick


class BufferBoundError(ValueError):
    """An extraction was attempted without the required size bound."""


class BufferInvariantError(AssertionError):
    """The claimed bound exceeded the true size (broken internal invariant)."""


class SBuffer:
    __slots__ = ("inner", "bound")

    def __init__(self, inner, bound):
        tick()
        self.inner = inner
        self.bound = bound

    def __len__(self):
        return self.bound


_EMPTY = None


def empty():
    global _EMPTY
    if _EMPTY is None:
        _EMPTY = SBuffer(dq.empty(), 0)
    return _EMPTY


def size(b):
    return b.bound


def push(x, b):
    return SBuffer(dq.push(x, b.inner), b.bound + 1)


def inject(b, x):
    return SBuffer(dq.inject(b.inner, x), b.bound + 1)


def pop(b):
    if b.bound < 1:
        raise BufferBoundError("pop requires a size bound of at least 1")
    got = dq.pop(b.inner)
    if got is None:
        raise BufferInvariantError("bound %d on an empty buffer" % b.bound)
    x, rest = got
    return x, SBuffer(rest, b.bound - 1)


def eject(b):
    if b.bound < 1:
        raise BufferBoundError("eject requires a size bound of at least 1")
    got = dq.eject(b.inner)
    if got is None:
        raise BufferInvariantError("bound %d on an empty buffer" % b.bound)
    rest, x = got
    return SBuffer(rest, b.bound - 1), x


def push_several(xs, b):
    """Push xs left to right: the final front element is the last of xs."""
    for x in xs:
        b = push(x, b)
    return b


def inject_several(b, xs):
    for x in xs:
        b = inject(b, x)
    return b


def of_list(xs):
    """Buffer whose sequence is exactly xs."""
    return inject_several(empty(), xs)


def to_list(b):
    """Materialize the buffer's sequence (bounded uses only in the kernel)."""
    out = []
    while b.bound:
        x, b = pop(b)
        out.append(x)
    return out


def pop_k(b, k):
    """Pop k front elements; returns (list, rest)."""
    out = []
    for _ in range(k):
        x, b = pop(b)
        out.append(x)
    return out, b


def eject_k(b, k):
    """Eject k rear elements; returns (rest, list in sequence order)."""
    out = []
    for _ in range(k):
        b, x = eject(b)
        out.append(x)
    out.reverse()
    return b, out


def seq(b):
    return dq.seq(b.inner)


def validate(b):
    out = []
    if b.bound > b.inner.length:
        out.append("bound %d exceeds true size %d" % (b.bound, b.inner.length))
    if b.bound < 0:
        out.append("negative bound")
    return out
