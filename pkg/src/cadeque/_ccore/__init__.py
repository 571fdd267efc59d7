# Compiled kernel twin.  Populated by tools/build_kernel.py; importing the
# submodules fails (falling back to the pure kernel) until it has run.
