"""Pseudounitary and symplectic subsets of Cl(1,3), and their Lie algebras.

All six sets are defined through the pseudo-Hermitian conjugation ``*``:

* ``W``  = {U : U*U = e}              ``w``  = {U : U* = -U}
* ``SW`` = {U in W : Det U = 1}       ``sw`` = {U in w : Tr U = 0}
* ``Sp`` = W restricted to real-even + imaginary-odd elements
* ``sp`` = imaginary grade 1 + real grade 2

Membership is tolerance based.  The residuals are reported so callers can see
how close a candidate came.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import gamma_rep
from .clifford import (
    CL13,
    Multivector,
    Signature,
    SignatureError,
    grade_table,
    mv_mul,
    norm,
    star,
    trace,
)

DEFAULT_TOL = 1e-9


class CliffordSet(enum.Enum):
    W = "W"
    SW = "SW"
    w = "w"
    sw = "sw"
    Sp = "Sp"
    sp = "sp"

    @property
    def is_group(self) -> bool:
        return self in (CliffordSet.W, CliffordSet.SW, CliffordSet.Sp)

    @property
    def algebra(self) -> CliffordSet:
        return {CliffordSet.W: CliffordSet.w, CliffordSet.SW: CliffordSet.sw,
                CliffordSet.Sp: CliffordSet.sp}.get(self, self)


# A reality pattern maps each allowed grade to the phase (1 or 1j) its
# coefficients must carry; grades absent from the map must vanish.
RealityPattern = Mapping[int, complex]

EVEN_REAL_ODD_IMAG: RealityPattern = {0: 1, 1: 1j, 2: 1, 3: 1j, 4: 1}
SP_PATTERN: RealityPattern = {1: 1j, 2: 1}
W_PATTERN: RealityPattern = {0: 1j, 1: 1j, 2: 1, 3: 1, 4: 1j}
SW_PATTERN: RealityPattern = {1: 1j, 2: 1, 3: 1, 4: 1j}

_ALGEBRA_PATTERNS = {
    CliffordSet.w: W_PATTERN,
    CliffordSet.sw: SW_PATTERN,
    CliffordSet.sp: SP_PATTERN,
}


def pattern_dim(sig: Signature, pattern: RealityPattern) -> int:
    return sum(math.comb(sig.n, k) for k in pattern)


def _phases(sig: Signature, pattern: RealityPattern) -> np.ndarray:
    """Per-blade phase, 0 where the grade is not allowed."""
    return np.array([pattern.get(int(g), 0) for g in grade_table(sig)], dtype=np.complex128)


def project_subspace(u: Multivector, pattern: RealityPattern) -> Multivector:
    ph = _phases(u.sig, pattern)
    real_part = np.where(ph != 0, (u.coeffs * np.conj(ph)).real, 0.0)
    return Multivector(u.sig, real_part * ph)


def subspace_leak(u: Multivector, pattern: RealityPattern) -> float:
    """Canonical norm of the part of ``u`` outside the real span of the pattern."""
    ph = _phases(u.sig, pattern)
    inside = ph != 0
    outside_grade = np.sum(np.abs(u.coeffs[~inside]) ** 2)
    wrong_phase = np.sum(((u.coeffs[inside] * np.conj(ph[inside])).imag) ** 2)
    return float(np.sqrt(outside_grade + wrong_phase))


def commutator(u: Multivector, v: Multivector) -> Multivector:
    return mv_mul(u, v) - mv_mul(v, u)


def det_clifford(u: Multivector) -> complex:
    """Determinant of the matrix image under the Majorana representation."""
    if u.sig != CL13:
        raise SignatureError(f"Det is only available for Cl(1,3), got {u.sig}")
    return gamma_rep.det(gamma_rep.gamma(u))


# ---------------------------------------------------------------------------
# membership

@dataclass
class MembershipReport:
    kind: CliffordSet
    member: bool
    residuals: dict = field(default_factory=dict)
    tol: float = DEFAULT_TOL

    def to_dict(self) -> dict:
        return {
            "set": self.kind.value,
            "member": self.member,
            "residuals": {k: float(v) for k, v in self.residuals.items()},
            "tol": self.tol,
        }


def is_member(u: Multivector, kind, tol: float = DEFAULT_TOL) -> MembershipReport:
    kind = CliffordSet(kind)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if u.sig != CL13:
        raise SignatureError(f"{kind.value} membership is only defined for Cl(1,3), got {u.sig}")
    e = Multivector.scalar(u.sig)
    res = {}
    if kind in (CliffordSet.W, CliffordSet.SW, CliffordSet.Sp):
        res["star_unitarity"] = norm(mv_mul(star(u), u) - e)
    if kind is CliffordSet.SW:
        res["det_deviation"] = abs(det_clifford(u) - 1)
    if kind in (CliffordSet.w, CliffordSet.sw):
        res["star_antisymmetry"] = norm(star(u) + u)
    if kind is CliffordSet.sw:
        res["trace"] = abs(trace(u))
    if kind is CliffordSet.Sp:
        res["grade_leak"] = subspace_leak(u, EVEN_REAL_ODD_IMAG)
    if kind is CliffordSet.sp:
        res["grade_leak"] = subspace_leak(u, SP_PATTERN)
    member = all(r <= tol for r in res.values())
    return MembershipReport(kind, member, res, tol)


# ---------------------------------------------------------------------------
# exponential

def exp(v: Multivector, tol: float = 1e-12, max_terms: int = 200) -> Multivector:
    """Power series with scaling and squaring.

    ``v`` is scaled by ``2**-s`` until its canonical norm is at most 0.5.  The
    series is summed until a term drops below ``tol * max(1, |partial sum|)``,
    and the result is squared ``s`` times.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not np.all(np.isfinite(v.coeffs)):
        raise ValueError("exp of non-finite multivector")
    nv = norm(v)
    s = max(0, math.ceil(math.log2(nv / 0.5))) if nv > 0.5 else 0
    x = v / 2**s if s else v
    total = Multivector.scalar(v.sig)
    term = total
    for k in range(1, max_terms + 1):
        term = mv_mul(term, x) / k
        total = total + term
        if norm(term) <= tol * max(1.0, norm(total)):
            break
    else:
        raise ArithmeticError(f"exp series did not converge in {max_terms} terms")
    for _ in range(s):
        total = mv_mul(total, total)
    return total


# ---------------------------------------------------------------------------
# sampling

def sample_subspace(pattern: RealityPattern, seed: int, sig: Signature = CL13) -> Multivector:
    """Uniform [-1, 1] real coefficient on every blade the pattern allows."""
    rng = np.random.default_rng(seed)
    ph = _phases(sig, pattern)
    vals = rng.uniform(-1.0, 1.0, size=sig.size)
    return Multivector(sig, np.where(ph != 0, vals * ph, 0))


def sample(kind, seed: int, tol: float = 1e-12) -> Multivector:
    """Seeded sample of a set; group kinds are exponentials of algebra samples."""
    kind = CliffordSet(kind)
    v = sample_subspace(_ALGEBRA_PATTERNS[kind.algebra], seed)
    return exp(v, tol) if kind.is_group else v


# ---------------------------------------------------------------------------
# the sp basis

def _sp_basis() -> tuple:
    e = lambda name, c=1: Multivector.blade(CL13, name, c)
    return tuple(
        [e(f"e{a}", 1j) for a in range(4)]
        + [e(name) for name in ("e01", "e02", "e03", "e12", "e13", "e23")]
    )


SP_BASIS = _sp_basis()
SP_BASIS_NAMES = ("ie0", "ie1", "ie2", "ie3", "e01", "e02", "e03", "e12", "e13", "e23")


def decompose(u: Multivector, basis=SP_BASIS) -> tuple[np.ndarray, float]:
    """Real coordinates of ``u`` in ``basis`` and the residual norm."""
    a = np.stack([b.coeffs for b in basis], axis=1)
    a_real = np.vstack([a.real, a.imag])
    b_real = np.concatenate([u.coeffs.real, u.coeffs.imag])
    coords, *_ = np.linalg.lstsq(a_real, b_real, rcond=None)
    residual = float(np.linalg.norm(a_real @ coords - b_real))
    return coords, residual
