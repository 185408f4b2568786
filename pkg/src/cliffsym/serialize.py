"""Text and map-based forms for multivectors and matrices.

The map form of a multivector is ``{"p": 1, "q": 3, "": [re, im], "01": [re, im], ...}``.
Blade keys are label digits in increasing order, and omitted blades are zero.
Matrices are row-major nested lists of ``[re, im]`` pairs.

Floats are written with ``repr``, which gives the shortest string that reads
back to the same double.
"""

from __future__ import annotations

import numpy as np

from .clifford import Multivector, Signature, blade_from_name, blade_name

MAX_NAMED_GENERATORS = 10  # single-digit labels keep blade names unambiguous


def _check_nameable(sig: Signature):
    if sig.n > MAX_NAMED_GENERATORS:
        raise ValueError(f"blade names need single-digit labels; {sig} has {sig.n} generators")


def format_number(x: float) -> str:
    return repr(float(x) + 0.0)  # + 0.0 folds -0.0


def format_complex(c: complex) -> str:
    return f"({format_number(c.real)},{format_number(c.imag)})"


def format_multivector(u: Multivector) -> str:
    """Expression text that the CLI parser reads back to the same coefficients."""
    _check_nameable(u.sig)
    terms = [f"{format_complex(complex(c))}*e{blade_name(m)}"
             for m, c in enumerate(u.coeffs) if c != 0]
    return " + ".join(terms) if terms else "0"


def multivector_to_dict(u: Multivector) -> dict:
    _check_nameable(u.sig)
    out = {"p": u.sig.p, "q": u.sig.q}
    for m, c in enumerate(u.coeffs):
        if c != 0:
            out[blade_name(m)] = [float(c.real) + 0.0, float(c.imag) + 0.0]
    return out


def multivector_from_dict(d: dict) -> Multivector:
    sig = Signature(int(d["p"]), int(d["q"]))
    _check_nameable(sig)
    coeffs = np.zeros(sig.size, dtype=np.complex128)
    for key, value in d.items():
        if key in ("p", "q"):
            continue
        re, im = value
        coeffs[blade_from_name(key, sig)] = complex(re, im)
    return Multivector(sig, coeffs)


def matrix_to_list(m) -> list:
    m = np.asarray(m, dtype=np.complex128)
    return [[[float(c.real) + 0.0, float(c.imag) + 0.0] for c in row] for row in m]


def matrix_from_list(rows) -> np.ndarray:
    arr = np.asarray(rows, dtype=float)
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise ValueError("matrix must be a row-major list of [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def format_matrix(m) -> str:
    m = np.asarray(m, dtype=np.complex128)
    cells = [[_short_complex(c) for c in row] for row in m]
    width = max(len(c) for row in cells for c in row)
    return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def _short_complex(c: complex) -> str:
    re, im = float(c.real) + 0.0, float(c.imag) + 0.0
    if im == 0:
        return format_number(re)
    if re == 0:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return f"{format_number(im)}i"
    return f"{format_number(re)}{'+' if im >= 0 else '-'}{format_number(abs(im))}i"
