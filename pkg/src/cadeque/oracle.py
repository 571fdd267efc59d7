"""Reference persistent sequence: the differential-testing ground truth.

A sequence is a plain tuple.  Every operation copies; nothing is clever;
correctness is immediate from Python's tuple semantics.  Costs are
linear, so the fuzz harness caps the lengths it compares in full.
"""

OracleSeq = tuple


def empty():
    return ()


def push(x, s):
    return (x,) + s


def inject(s, x):
    return s + (x,)


def pop(s):
    if not s:
        return None
    return s[0], s[1:]


def eject(s):
    if not s:
        return None
    return s[:-1], s[-1]


def concat(a, b):
    return a + b


def seq(s):
    return list(s)


def length(s):
    return len(s)
