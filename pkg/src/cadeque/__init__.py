"""Persistent sequences with worst-case constant-time operations.

Two structures are provided: non-catenable deques (push/pop/inject/eject)
and catenable deques (the same plus O(1) concat), together with a
redundant-binary counter that showcases the coloring discipline both
structures are built on, runtime invariant validators, a differential
fuzz harness, and a benchmark CLI.
"""

from .backend import backend_name, cadeques, colors, counter, deques, sbuffer, work

__all__ = [
    "backend_name",
    "cadeques",
    "colors",
    "counter",
    "deques",
    "sbuffer",
    "work",
]
