"""Kernel backend selection.

The compiled kernels are used when importable. Setting the environment
variable ``EXACT_R2_BACKEND=python`` forces the numpy fallback.
"""

import contextlib
import importlib
import os

BACKENDS = ("cython", "python")
_MODULES = {"cython": "exact_r2._ckernels", "python": "exact_r2._pykernels"}


def load(name):
    """Import and return the kernel module for backend ``name``."""
    if name not in _MODULES:
        raise ValueError(f"unknown backend {name!r}; choose from {BACKENDS}")
    return importlib.import_module(_MODULES[name])


def available():
    names = []
    for name in BACKENDS:
        try:
            load(name)
        except ImportError:
            continue
        names.append(name)
    return names


def _select():
    requested = os.environ.get("EXACT_R2_BACKEND", "").strip().lower()
    if requested:
        return load(requested)
    try:
        return load("cython")
    except ImportError:
        return load("python")


kernels = _select()


@contextlib.contextmanager
def use(name):
    """Temporarily route all kernel calls to backend ``name``."""
    global kernels
    previous, kernels = kernels, load(name)
    try:
        yield kernels
    finally:
        kernels = previous
