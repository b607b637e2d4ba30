"""Selection between the compiled and the pure-Python elimination kernel.

The compiled extension is used when it was built (``pip install -e .`` with
Cython available); otherwise the interpreter fallback is used transparently.
"""

from . import _kernel_py

python_rref_integer = _kernel_py.rref_integer

try:
    from ._kernel import rref_integer as compiled_rref_integer
except ImportError:  # extension not built
    compiled_rref_integer = None

rref_integer = compiled_rref_integer or python_rref_integer
BACKEND = "compiled" if compiled_rref_integer is not None else "python"


def use_backend(name: str) -> None:
    """Switch the active kernel (``"python"`` or ``"compiled"``); used by the benchmark."""
    global rref_integer, BACKEND
    if name == "python":
        rref_integer = python_rref_integer
    elif name == "compiled":
        if compiled_rref_integer is None:
            raise RuntimeError("compiled kernel not available; build the extension first")
        rref_integer = compiled_rref_integer
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name
