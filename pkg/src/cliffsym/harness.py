"""Executable check suite for Sp(Cl(1,3)) ~ Sp(4,R) and sp(Cl(1,3)) ~ sp(4,R).

Each check evaluates one identity from the isomorphism argument, either
exhaustively over the blade basis or on seeded random samples.  Exact checks
require a residual of exactly zero.  Roundoff checks use a fixed 1e-12.  Group
level checks use the caller's tolerance.

The seed for trial ``k`` of a check is ``seed + k``, so every check sees the
same sample stream and reports are reproducible.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import gamma_rep as gr
from .clifford import (
    CL13,
    Multivector,
    basis,
    dagger,
    mv_mul,
    norm,
    star,
    trace,
)
from .gamma_rep import GammaTable, MAJORANA
from .lie_sets import (
    EVEN_REAL_ODD_IMAG,
    SP_BASIS,
    SP_PATTERN,
    W_PATTERN,
    CliffordSet,
    commutator,
    decompose,
    exp,
    is_member,
    pattern_dim,
    sample,
    sample_subspace,
    subspace_leak,
)

ROUNDOFF_TOL = 1e-12
DEFAULT_TRIALS = 200
DEFAULT_SEED = 42


@dataclass(frozen=True)
class CheckSpec:
    name: str
    kind: str  # "exhaustive" or "randomized"
    tolerance: float
    anchor: str
    trials: int = 1
    seed: int = 0
    informational: bool = False

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.tolerance < 0:
            raise ValueError("tolerance must be >= 0")


@dataclass
class CheckResult:
    spec: CheckSpec
    passed: bool
    max_residual: float
    trials: int
    elapsed: float = 0.0
    detail: str = ""

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "name": self.spec.name,
            "kind": self.spec.kind,
            "anchor": self.spec.anchor,
            "passed": self.passed,
            "max_residual": self.max_residual,
            "tolerance": self.spec.tolerance,
            "trials": self.trials,
            "informational": self.spec.informational,
        }
        if self.detail:
            d["detail"] = self.detail
        if timing:
            d["elapsed"] = self.elapsed
        return d


@dataclass
class VerificationReport:
    seed: int
    tol: float
    trials: int
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.spec.informational)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.spec.name == name:
                return c
        raise KeyError(name)

    def failed(self) -> list[str]:
        return [c.spec.name for c in self.checks if not c.passed]

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "seed": self.seed,
            "tol": self.tol,
            "trials": self.trials,
            "passed": self.passed,
            "checks": [c.to_dict(timing) for c in self.checks],
        }

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = []
        for i, c in enumerate(self.checks, 1):
            status = "PASS" if c.passed else "FAIL"
            if c.spec.informational:
                status += " (info)"
            lines.append(
                f"{i:2d}. {status:11s} {c.spec.name:32s} max_residual={c.max_residual:.3e} "
                f"tol={c.spec.tolerance:.0e} trials={c.trials} ({c.elapsed * 1e3:.1f} ms)"
            )
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# samplers

def sample_sp4_matrix(seed: int) -> np.ndarray:
    """``J S`` for a seeded random real symmetric ``S``; an element of sp(4,R)."""
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.uniform(-1.0, 1.0, size=(4, 4)))
    s = upper + np.triu(upper, 1).T
    return (gr.J @ s).real.astype(np.complex128)


def _sample_real_rep(seed: int) -> Multivector:
    return sample_subspace(EVEN_REAL_ODD_IMAG, seed)


def _sample_general(seed: int) -> Multivector:
    rng = np.random.default_rng(seed)
    return Multivector(CL13, rng.uniform(-1, 1, 16) + 1j * rng.uniform(-1, 1, 16))


# ---------------------------------------------------------------------------
# individual checks; each returns (max residual, detail)

def _gamma_anticommutation(table: GammaTable, **_):
    eta = CL13.eta()
    g = table.generators
    worst = 0.0
    for a in range(4):
        for b in range(4):
            r = gr.matrix_norm(g[a] @ g[b] + g[b] @ g[a] - 2 * eta[a, b] * np.eye(4))
            worst = max(worst, r)
    return worst, ""


def _gamma_hermiticity(table: GammaTable, **_):
    g = table.generators
    signs = [1, -1, -1, -1]
    return max(gr.matrix_norm(gr.hermitian_conjugate(g[a]) - signs[a] * g[a]) for a in range(4)), ""


def _i_gamma_real(table: GammaTable, **_):
    return max(gr.imag_residual(1j * g) for g in table.generators), ""


def _blade_gram(table: GammaTable, **_):
    b = table.blades
    gram = np.einsum("bji,ajk->abik", b.conj(), b).trace(axis1=2, axis2=3) / 4
    return gr.matrix_norm(gram - np.eye(16)), ""


def _j_structure(table: GammaTable, **_):
    j = 1j * table.generators[0]
    r1 = gr.matrix_norm(j - gr.J)
    r2 = gr.matrix_norm(gr.J @ gr.J + np.eye(4))
    return max(r1, r2), ""


def _homomorphism(table: GammaTable, **_):
    worst = 0.0
    blades = basis(CL13)
    for ea in blades:
        for eb in blades:
            lhs = gr.gamma(mv_mul(ea, eb), table)
            rhs = gr.gamma(ea, table) @ gr.gamma(eb, table)
            worst = max(worst, gr.matrix_norm(lhs - rhs))
    return worst, ""


def _dagger_compat(table: GammaTable, seeds, **_):
    worst = 0.0
    for s in seeds:
        u = _sample_general(s)
        worst = max(worst, gr.matrix_norm(gr.gamma(dagger(u), table) - gr.hermitian_conjugate(gr.gamma(u, table))))
    return worst, ""


def _star_matrix(table: GammaTable, seeds, **_):
    worst = 0.0
    for s in seeds:
        u = _sample_real_rep(s)
        m = gr.gamma(u, table)
        worst = max(worst, gr.matrix_norm(gr.gamma(star(u), table) - gr.matrix_star_relation(m)),
                    gr.imag_residual(m))
    return worst, ""


def _sp_algebra(table: GammaTable, seeds, **_):
    worst = 0.0
    for s in seeds:
        m = gr.gamma(sample(CliffordSet.sp, s), table)
        worst = max(worst, gr.imag_residual(m), gr.sp_algebra_residual(m))
    return worst, ""


def _sp_group(table: GammaTable, seeds, **_):
    worst = 0.0
    e = Multivector.scalar(CL13)
    for s in seeds:
        a = exp(sample(CliffordSet.sp, s), ROUNDOFF_TOL)
        m = gr.gamma(a, table)
        worst = max(worst, norm(mv_mul(star(a), a) - e), gr.symplectic_residual(m), gr.imag_residual(m))
    return worst, ""


def _sp_closure(table: GammaTable, **_):
    worst = 0.0
    for i in range(len(SP_BASIS)):
        for j in range(i + 1, len(SP_BASIS)):
            _, r = decompose(commutator(SP_BASIS[i], SP_BASIS[j]))
            worst = max(worst, r)
    return worst, f"{len(SP_BASIS) * (len(SP_BASIS) - 1) // 2} pairs"


def _dimension_count(table: GammaTable, **_):
    sp_cl = len(SP_BASIS)
    sp_pattern = pattern_dim(CL13, SP_PATTERN)
    sym4 = 4 * 5 // 2
    ok = sp_cl == sp_pattern == sym4 == 10
    return (0.0 if ok else 1.0), f"dim sp(Cl(1,3))={sp_cl}, dim sp(4,R)={sym4}"


def _reverse_direction(table: GammaTable, seeds, **_):
    worst = 0.0
    for s in seeds:
        m = sample_sp4_matrix(s)
        worst = max(worst, subspace_leak(gr.gamma_inverse(m, table), SP_PATTERN))
    return worst, ""


def _w_characterization(table: GammaTable, seeds, **_):
    worst = 0.0
    g0 = table.generators[0]
    for s in seeds:
        w = sample_subspace(W_PATTERN, s)
        worst = max(worst, norm(star(w) + w))
        m = gr.gamma(w, table)
        worst = max(worst, gr.matrix_norm(gr.hermitian_conjugate(m) @ g0 + g0 @ m))
    return worst, ""


def _w_star_exact(table: GammaTable, seeds, **_):
    worst = 0.0
    for s in seeds:
        w = sample_subspace(W_PATTERN, s)
        worst = max(worst, norm(star(w) + w))
    return worst, ""


def _algebra_axioms(table: GammaTable, seeds, **_):
    worst = 0.0
    for s in seeds:
        u, v, w = _sample_general(3 * s), _sample_general(3 * s + 1), _sample_general(3 * s + 2)
        uv = mv_mul(u, v)
        vu = mv_mul(v, u)
        scale = max(1.0, norm(u) * norm(v) * norm(w))
        worst = max(
            worst,
            norm(mv_mul(uv, w) - mv_mul(u, mv_mul(v, w))) / scale,
            abs(trace(uv) - trace(vu)),
            abs(trace(uv - vu)),
            norm(dagger(uv) - mv_mul(dagger(v), dagger(u))),
            abs(trace(mv_mul(dagger(u), u)) - np.sum(np.abs(u.coeffs) ** 2)),
        )
        if not trace(mv_mul(dagger(u), u)).real > 0:
            worst = math.inf
    # orthonormality of the blades, exhaustively
    blades = basis(CL13)
    for a, ea in enumerate(blades):
        for b, eb in enumerate(blades):
            worst = max(worst, abs(trace(mv_mul(dagger(eb), ea)) - (a == b)))
    return worst, ""


def _intersection(table: GammaTable, seeds, tol, **_):
    # candidates drawn from spaces that straddle the sp boundary
    patterns = [SP_PATTERN, W_PATTERN, EVEN_REAL_ODD_IMAG, {1: 1, 2: 1}, {1: 1j, 2: 1, 3: 1}]
    mismatches = 0
    for s in seeds:
        u = sample_subspace(patterns[s % len(patterns)], s)
        in_sp = is_member(u, CliffordSet.sp, tol).member
        in_w = is_member(u, CliffordSet.w, tol).member
        in_real = subspace_leak(u, EVEN_REAL_ODD_IMAG) <= tol
        mismatches += in_sp != (in_w and in_real)
    return float(mismatches), f"{mismatches} mismatches"


def _sp_product_closure(table: GammaTable, seeds, **_):
    worst = 0.0
    for s in seeds:
        a = sample(CliffordSet.Sp, 2 * s)
        b = sample(CliffordSet.Sp, 2 * s + 1)
        rep = is_member(mv_mul(a, b), CliffordSet.Sp, 1e-8)
        worst = max(worst, *rep.residuals.values())
    return worst, "empirical; not part of the verdict"


# name, function, kind, tolerance (None = caller tol), anchor, informational
_CHECKS: list[tuple[str, Callable, str, float | None, str, bool]] = [
    ("gamma_anticommutation", _gamma_anticommutation, "exhaustive", 0.0, "gamma^a gamma^b + gamma^b gamma^a = 2 eta^ab 1", False),
    ("gamma_hermiticity", _gamma_hermiticity, "exhaustive", 0.0, "(gamma^0)^H = gamma^0, (gamma^k)^H = -gamma^k", False),
    ("i_gamma_real", _i_gamma_real, "exhaustive", 0.0, "i gamma^a real", False),
    ("blade_gram_identity", _blade_gram, "exhaustive", 0.0, "16 blade matrices orthonormal under tr(B^H A)/4", False),
    ("J_structure", _j_structure, "exhaustive", 0.0, "J = i gamma(e^0), J^2 = -1", False),
    ("homomorphism", _homomorphism, "exhaustive", ROUNDOFF_TOL, "gamma(e^A e^B) = gamma(e^A) gamma(e^B), 256 pairs", False),
    ("star_matrix_relation", _star_matrix, "randomized", ROUNDOFF_TOL, "gamma(A*) = -J gamma(A)^T J", False),
    ("sp_algebra_direction", _sp_algebra, "randomized", ROUNDOFF_TOL, "gamma(v)^T J = -J gamma(v)", False),
    ("sp_group_direction", _sp_group, "randomized", None, "gamma(A)^T J gamma(A) = J", False),
    ("sp_commutator_closure", _sp_closure, "exhaustive", ROUNDOFF_TOL, "[sp, sp] in sp", False),
    ("sp_reverse_direction", _reverse_direction, "randomized", ROUNDOFF_TOL, "gamma^-1(sp(4,R)) in i Cl_1 + Cl_2", False),
    ("w_characterization", _w_characterization, "randomized", ROUNDOFF_TOL, "w = iCl_0 + iCl_1 + Cl_2 + Cl_3 + iCl_4", False),
    ("w_star_exact", _w_star_exact, "randomized", 0.0, "w* = -w exactly on sampled w", False),
    ("dagger_compatibility", _dagger_compat, "randomized", ROUNDOFF_TOL, "gamma(A^dagger) = gamma(A)^H", False),
    ("algebra_axioms", _algebra_axioms, "randomized", ROUNDOFF_TOL, "associativity, trace cyclicity, dagger, positivity, orthonormality", False),
    ("dimension_count", _dimension_count, "exhaustive", 0.0, "dim sp(Cl(1,3)) = dim sp(4,R) = 10", False),
    ("sp_intersection", _intersection, "randomized", 0.0, "sp = w intersect (Cl_even + i Cl_odd)", False),
    ("sp_group_product_closure", _sp_product_closure, "randomized", 1e-8, "Sp(Cl(1,3)) closed under product", True),
]

CHECK_NAMES = tuple(c[0] for c in _CHECKS)


def run_theorem_suite(
    seed: int = DEFAULT_SEED,
    tol: float = 1e-9,
    trials: int = DEFAULT_TRIALS,
    table: GammaTable = MAJORANA,
    only: tuple[str, ...] | None = None,
) -> VerificationReport:
    """Run every check in order; failures are recorded, never raised."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    report = VerificationReport(seed=seed, tol=tol, trials=trials)
    for name, fn, kind, check_tol, anchor, info in _CHECKS:
        if only is not None and name not in only:
            continue
        spec = CheckSpec(
            name=name,
            kind=kind,
            tolerance=tol if check_tol is None else check_tol,
            anchor=anchor,
            trials=trials if kind == "randomized" else 1,
            seed=seed,
            informational=info,
        )
        seeds = range(seed, seed + spec.trials)
        t0 = time.perf_counter()
        try:
            residual, detail = fn(table=table, seeds=seeds, tol=tol)
        except Exception as exc:  # a broken table must show up as a failed check
            residual, detail = math.inf, f"{type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - t0
        residual = float(residual)
        passed = bool(residual <= spec.tolerance)
        report.checks.append(CheckResult(spec, passed, residual, spec.trials, elapsed, detail))
    return report
