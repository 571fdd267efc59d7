# Pure-Python kernel.
