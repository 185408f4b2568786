"""The modified Majorana representation of Cl(1,3) on 4x4 complex matrices.

``gamma`` sends a multivector to ``sum_A u_A * gamma(e^A)``.  Here
``gamma(e^A)`` is the product of the generator matrices in ascending label
order.  Every ``i * gamma^a`` is real, so the real elements of the even part
plus the imaginary elements of the odd part map onto the real 4x4 matrices.

The matrix-group predicates (symplectic, pseudounitary) live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .clifford import CL13, Multivector, SignatureError

_i = 1j

GAMMA0 = np.array([
    [0, 0, _i, 0],
    [0, 0, 0, _i],
    [-_i, 0, 0, 0],
    [0, -_i, 0, 0],
])
GAMMA1 = np.array([
    [0, -_i, 0, 0],
    [-_i, 0, 0, 0],
    [0, 0, 0, _i],
    [0, 0, _i, 0],
])
GAMMA2 = np.array([
    [0, 0, _i, 0],
    [0, 0, 0, _i],
    [_i, 0, 0, 0],
    [0, _i, 0, 0],
])
GAMMA3 = np.array([
    [-_i, 0, 0, 0],
    [0, _i, 0, 0],
    [0, 0, _i, 0],
    [0, 0, 0, -_i],
])

I2 = np.eye(2)
J = np.block([[np.zeros((2, 2)), -I2], [I2, np.zeros((2, 2))]]).astype(np.complex128)

for _m in (GAMMA0, GAMMA1, GAMMA2, GAMMA3, J):
    _m.setflags(write=False)


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class GammaTable:
    """Four generator matrices plus the derived sixteen blade matrices."""

    generators: tuple
    blades: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(np.array(g, dtype=np.complex128) for g in self.generators)
        if len(gens) != 4 or any(g.shape != (4, 4) for g in gens):
            raise DimensionError("a Cl(1,3) table needs four 4x4 generator matrices")
        for g in gens:
            g.setflags(write=False)
        blades = np.empty((16, 4, 4), dtype=np.complex128)
        for mask in range(16):
            m = np.eye(4, dtype=np.complex128)
            for a in range(4):
                if mask >> a & 1:
                    m = m @ gens[a]
            blades[mask] = m
        blades.setflags(write=False)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "blades", blades)

    def with_generator(self, a: int, matrix) -> GammaTable:
        gens = list(self.generators)
        gens[a] = matrix
        return GammaTable(tuple(gens))


MAJORANA = GammaTable((GAMMA0, GAMMA1, GAMMA2, GAMMA3))


def _require_cl13(u: Multivector):
    if u.sig != CL13:
        raise SignatureError(f"the matrix representation covers Cl(1,3) only, got {u.sig}")


def _require_square(m: np.ndarray, n: int | None = None) -> np.ndarray:
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    if n is not None and m.shape[0] != n:
        raise DimensionError(f"expected a {n}x{n} matrix, got {m.shape[0]}x{m.shape[0]}")
    return m


def gamma(u: Multivector, table: GammaTable = MAJORANA) -> np.ndarray:
    _require_cl13(u)
    return np.tensordot(u.coeffs, table.blades, axes=1)


def gamma_inverse(m, table: GammaTable = MAJORANA) -> Multivector:
    """Recover the multivector from its matrix via ``u_A = tr(gamma(e^A)^H M) / 4``."""
    m = _require_square(m, 4)
    coeffs = np.einsum("aji,jk->aik", table.blades.conj(), m).trace(axis1=1, axis2=2) / 4
    return Multivector(CL13, coeffs)


def matrix_star_relation(m) -> np.ndarray:
    """``-J M^T J``; equals gamma(A*) whenever gamma(A) is real."""
    m = _require_square(m, 4)
    return -J @ m.T @ J


# ---------------------------------------------------------------------------
# matrix utilities

def transpose(m) -> np.ndarray:
    return _require_square(m).T


def hermitian_conjugate(m) -> np.ndarray:
    return _require_square(m).conj().T


def matrix_mul(a, b) -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def det(m) -> complex:
    return complex(np.linalg.det(_require_square(m)))


def matrix_norm(m) -> float:
    return float(np.linalg.norm(np.asarray(m), "fro"))


def symplectic_form(n: int = 4) -> np.ndarray:
    if n <= 0 or n % 2:
        raise DimensionError(f"symplectic form needs a positive even dimension, got {n}")
    k = n // 2
    ik = np.eye(k)
    return np.block([[np.zeros((k, k)), -ik], [ik, np.zeros((k, k))]]).astype(np.complex128)


def beta(r: int, s: int) -> np.ndarray:
    if r < 0 or s < 0 or r + s == 0:
        raise ValueError(f"invalid pseudounitary signature ({r}, {s})")
    return np.diag([1.0] * r + [-1.0] * s).astype(np.complex128)


# ---------------------------------------------------------------------------
# matrix group predicates

def _even_square(m) -> np.ndarray:
    m = _require_square(m)
    if m.shape[0] % 2:
        raise DimensionError(f"symplectic predicates need even dimension, got {m.shape[0]}")
    return m


def symplectic_residual(m) -> float:
    m = _even_square(m)
    jn = symplectic_form(m.shape[0])
    return matrix_norm(m.T @ jn @ m - jn)


def sp_algebra_residual(m) -> float:
    m = _even_square(m)
    jn = symplectic_form(m.shape[0])
    return matrix_norm(m.T @ jn + jn @ m)


def imag_residual(m) -> float:
    return matrix_norm(np.asarray(m).imag)


def is_symplectic(m, tol: float = 1e-9) -> bool:
    return symplectic_residual(m) <= tol and imag_residual(m) <= tol


def is_sp_algebra(m, tol: float = 1e-9) -> bool:
    return sp_algebra_residual(m) <= tol and imag_residual(m) <= tol


def pseudounitary_residual(m, metric) -> float:
    m = _require_square(m)
    metric = _require_square(metric, m.shape[0])
    return matrix_norm(m.conj().T @ metric @ m - metric)


def is_pseudounitary(m, metric, tol: float = 1e-9, special: bool = False) -> bool:
    """``M^H B M = B`` for a metric ``B``; ``special`` also demands ``det M = 1``.

    ``B`` is normally :func:`beta`, but any Hermitian metric is accepted, e.g.
    ``GAMMA0`` for the relation satisfied by images of the group W.
    """
    if pseudounitary_residual(m, metric) > tol:
        return False
    return not special or abs(det(m) - 1) <= tol
