"""Kernel backend selection.

The hot loops (profile enumeration, swing counting, Monte Carlo sampling)
have two interchangeable implementations: numba-jitted loops and vectorized
pure numpy.  Both are exact integer code paths and return identical values.

Set COMMITTEE_POWER_BACKEND=numpy or =numba to force one; by default numba
is used when importable, numpy otherwise.
"""

import os
from importlib import import_module

ENV_VAR = "COMMITTEE_POWER_BACKEND"
BACKENDS = ("numba", "numpy")

_MODULES = {
    "numba": "committee_power._kernels_numba",
    "numpy": "committee_power._kernels_numpy",
}


def available_backends() -> tuple[str, ...]:
    out = []
    for name in BACKENDS:
        try:
            import_module(_MODULES[name])
        except ImportError:
            continue
        out.append(name)
    return tuple(out)


def active_backend() -> str:
    """Backend name that get_kernels() will use."""
    choice = os.environ.get(ENV_VAR, "").strip().lower()
    if choice:
        if choice not in BACKENDS:
            raise ValueError(
                f"{ENV_VAR}={choice!r} is not one of {', '.join(BACKENDS)}"
            )
        return choice
    try:
        import_module(_MODULES["numba"])
    except ImportError:
        return "numpy"
    return "numba"


def get_kernels(name: str | None = None):
    """Kernel module for `name` (default: the active backend)."""
    if name is None:
        name = active_backend()
    if name not in _MODULES:
        raise ValueError(f"unknown backend {name!r}")
    try:
        return import_module(_MODULES[name])
    except ImportError as exc:
        raise RuntimeError(f"backend {name!r} is not importable: {exc}") from exc
