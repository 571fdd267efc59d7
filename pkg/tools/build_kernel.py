"""Compile the structural kernel into extension modules.

The pure-Python kernel under ``src/cadeque/_core`` is the source of
truth.  This script copies those modules into ``src/cadeque/_ccore`` and
cythonizes the copies in place, producing a compiled twin that the
package prefers at import time (see cadeque.backend).  The build is
optional: without it the pure kernel is used.

Usage: python tools/build_kernel.py [--force]
"""

import argparse
import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent
CORE = ROOT / "src" / "cadeque" / "_core"
CCORE = ROOT / "src" / "cadeque" / "_ccore"
MODULES = ["work", "colors", "counter", "deque", "sbuffer", "cadeque"]

SETUP = """\
from setuptools import setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [{exts}],
        compiler_directives={{"language_level": "3"}},
        quiet=True,
    ),
)
"""


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--force", action="store_true", help="rebuild even if present")
    args = parser.parse_args()

    try:
        import Cython  # noqa: F401
    except ImportError:
        print("Cython is not installed; the pure-Python kernel will be used.")
        return 1

    built = list(CCORE.glob("cadeque.*.so")) + list(CCORE.glob("cadeque.*.pyd"))
    if built and not args.force:
        print("compiled kernel already present (use --force to rebuild)")
        return 0

    with tempfile.TemporaryDirectory() as tmp:
        tmppath = pathlib.Path(tmp)
        pkg = tmppath / "cadeque" / "_ccore"
        pkg.parent.mkdir(parents=True)
        pkg.mkdir()
        (tmppath / "cadeque" / "__init__.py").write_text("")
        (pkg / "__init__.py").write_text((CCORE / "__init__.py").read_text())
        for mod in MODULES:
            shutil.copy(CORE / f"{mod}.py", pkg / f"{mod}.py")
        exts = ", ".join(f"'cadeque/_ccore/{m}.py'" for m in MODULES)
        (tmppath / "setup.py").write_text(SETUP.format(exts=exts))
        proc = subprocess.run(
            [sys.executable, "setup.py", "build_ext", "--inplace"],
            cwd=tmppath,
            capture_output=True,
            text=True,
        )
        if proc.returncode != 0:
            print(proc.stdout)
            print(proc.stderr)
            print("kernel build failed; the pure-Python kernel will be used.")
            return 1
        moved = 0
        for so in pkg.iterdir():
            if so.suffix in (".so", ".pyd"):
                shutil.copy(so, CCORE / so.name)
                moved += 1
    print(f"installed {moved} compiled kernel modules into {CCORE}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
