"""Structural work counter.

Every constructor of a buffer, packet, chain node, element, or stored
triple calls ``tick``.  The difference of the counter across one public
operation is that operation's "structural work".  The library's
constant-time claim is tested by asserting that this per-operation delta
never exceeds a frozen bound, no matter how large the operands are.

The counter is a plain module-global: operations are pure, so the delta
around a call is exactly the work done by that call (single-threaded).
"""

_count = 0


def tick(n=1):
    global _count
    _count += n


def now():
    return _count


def reset():
    global _count
    _count = 0


class meter:
    """Context manager measuring structural work of a code block."""

    __slots__ = ("start", "delta")

    def __enter__(self):
        self.start = _count
        return self

    def __exit__(self, *exc):
        self.delta = _count - self.start
        return False
