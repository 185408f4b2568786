"""Dense multivector arithmetic for the Clifford algebras Cl(p, q).

Generators carry 0-based labels ``0 .. n-1``; the first ``p`` square to
``+e`` and the remaining ``q`` square to ``-e``.  A basis blade is stored as
a bitmask over those labels, so ``e^{013}`` is mask ``0b1011``.  A
:class:`Multivector` holds one complex coefficient per blade, indexed by mask.

Blade signs are exact integers.  Only the coefficient arithmetic is floating
point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from numbers import Number
from typing import Iterable, Mapping, Union

import numpy as np

MAX_GENERATORS = 12


class SignatureError(ValueError):
    """Raised for invalid signatures or mismatched/unsupported signatures."""


@dataclass(frozen=True)
class Signature:
    p: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise SignatureError("p and q must be integers")
        if self.p < 0 or self.q < 0:
            raise SignatureError(f"negative signature ({self.p}, {self.q})")
        if not 1 <= self.p + self.q <= MAX_GENERATORS:
            raise SignatureError(
                f"p + q must lie in 1..{MAX_GENERATORS}, got {self.p + self.q}")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def size(self) -> int:
        return 1 << self.n

    def metric(self, a: int) -> int:
        if not 0 <= a < self.n:
            raise IndexError(f"generator label {a} out of range for n={self.n}")
        return 1 if a < self.p else -1

    def eta(self) -> np.ndarray:
        return np.diag([self.metric(a) for a in range(self.n)])

    def __str__(self):
        return f"Cl({self.p},{self.q})"


CL13 = Signature(1, 3)


# ---------------------------------------------------------------------------
# blades

@dataclass(frozen=True)
class Blade:
    mask: int

    @property
    def grade(self) -> int:
        return popcount(self.mask)

    def labels(self) -> tuple[int, ...]:
        return tuple(a for a in range(self.mask.bit_length()) if self.mask >> a & 1)

    @property
    def name(self) -> str:
        return blade_name(self.mask)

    def __str__(self):
        return "e" + self.name


def popcount(x: int) -> int:
    return bin(x).count("1")


def blade_name(mask: int) -> str:
    """Digits of the labels in increasing order; ``""`` for the identity."""
    return "".join(str(a) for a in range(mask.bit_length()) if mask >> a & 1)


def blade_from_name(name: str, sig: Signature) -> int:
    labels = [int(ch) for ch in name]
    if any(b <= a for a, b in zip(labels, labels[1:])):
        raise ValueError(f"blade digits must be strictly increasing: e{name}")
    if any(a >= sig.n for a in labels):
        raise ValueError(f"generator label out of range for {sig}: e{name}")
    mask = 0
    for a in labels:
        mask |= 1 << a
    return mask


def reorder_sign(a: int, b: int) -> int:
    """Sign of the permutation that sorts the label list of ``a`` followed by ``b``.

    Each label of ``b`` has to move left past every label of ``a`` that is
    larger than it.
    """
    a >>= 1
    swaps = 0
    while a:
        swaps += popcount(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


def blade_mul(a: int, b: int, sig: Signature) -> tuple[int, int]:
    """Product of basis blades ``e^a e^b`` as ``(sign, mask)``."""
    if a >> sig.n or b >> sig.n:
        raise ValueError(f"blade mask out of range for {sig}")
    sign = reorder_sign(a, b)
    common = a & b
    # repeated labels contract to their metric value; the q-type ones give -1
    if popcount(common >> sig.p) & 1:
        sign = -sign
    return sign, a ^ b


@lru_cache(maxsize=None)
def _tables(p: int, q: int):
    sig = Signature(p, q)
    size = sig.size
    signs = np.empty((size, size), dtype=np.int8)
    for a in range(size):
        for b in range(size):
            signs[a, b] = blade_mul(a, b, sig)[0]
    grades = np.array([popcount(m) for m in range(size)], dtype=np.int64)
    # (e^A)^dagger = product of metric signs times reversion sign
    dagger = np.array(
        [
            (-1 if popcount(m >> p) & 1 else 1) * (-1 if (g * (g - 1) // 2) & 1 else 1)
            for m, g in zip(range(size), grades)
        ],
        dtype=np.int8,
    )
    for arr in (signs, grades, dagger):
        arr.setflags(write=False)
    return signs, grades, dagger


def sign_table(sig: Signature) -> np.ndarray:
    """``table[a, b]`` is the sign of ``e^a e^b``; the blade is ``a ^ b``."""
    return _tables(sig.p, sig.q)[0]


def grade_table(sig: Signature) -> np.ndarray:
    return _tables(sig.p, sig.q)[1]


def dagger_signs(sig: Signature) -> np.ndarray:
    return _tables(sig.p, sig.q)[2]


# ---------------------------------------------------------------------------
# multivectors

Scalar = Union[int, float, complex]


class Multivector:
    """Immutable element of Cl(p, q) with dense complex coefficients."""

    __slots__ = ("sig", "coeffs")

    def __init__(self, sig: Signature, coeffs):
        arr = np.array(coeffs, dtype=np.complex128)
        if arr.shape != (sig.size,):
            raise ValueError(f"expected {sig.size} coefficients, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("multivector coefficients must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # constructors
    @classmethod
    def zero(cls, sig: Signature) -> Multivector:
        return cls(sig, np.zeros(sig.size))

    @classmethod
    def scalar(cls, sig: Signature, value: Scalar = 1) -> Multivector:
        c = np.zeros(sig.size, dtype=np.complex128)
        c[0] = value
        return cls(sig, c)

    @classmethod
    def blade(cls, sig: Signature, blade: Union[int, str, Blade], value: Scalar = 1) -> Multivector:
        if isinstance(blade, str):
            mask = blade_from_name(blade.removeprefix("e"), sig)
        elif isinstance(blade, Blade):
            mask = blade.mask
        else:
            mask = blade
        if not 0 <= mask < sig.size:
            raise ValueError(f"blade mask {mask} out of range for {sig}")
        c = np.zeros(sig.size, dtype=np.complex128)
        c[mask] = value
        return cls(sig, c)

    @classmethod
    def from_terms(cls, sig: Signature, terms: Mapping[str, Scalar]) -> Multivector:
        c = np.zeros(sig.size, dtype=np.complex128)
        for name, value in terms.items():
            c[blade_from_name(name.removeprefix("e"), sig)] += value
        return cls(sig, c)

    # arithmetic
    def _check(self, other: Multivector):
        if not isinstance(other, Multivector):
            raise TypeError(f"expected Multivector, got {type(other).__name__}")
        if other.sig != self.sig:
            raise SignatureError(f"signature mismatch: {self.sig} vs {other.sig}")

    def __add__(self, other):
        if isinstance(other, Number):
            other = Multivector.scalar(self.sig, other)
        return mv_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Number):
            other = Multivector.scalar(self.sig, other)
        return mv_add(self, mv_scale(-1, other))

    def __rsub__(self, other):
        return mv_scale(-1, self) + other

    def __neg__(self):
        return mv_scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, Number):
            return mv_scale(other, self)
        return mv_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, Number):
            return mv_scale(other, self)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Number):
            return mv_scale(1 / other, self)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and bool(np.array_equal(self.coeffs, other.coeffs))

    __hash__ = None

    def __getitem__(self, blade: Union[int, str]) -> complex:
        if isinstance(blade, str):
            blade = blade_from_name(blade.removeprefix("e"), self.sig)
        return complex(self.coeffs[blade])

    def terms(self) -> dict[str, complex]:
        """Nonzero coefficients keyed by blade name."""
        return {blade_name(m): complex(c) for m, c in enumerate(self.coeffs) if c != 0}

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def __repr__(self):
        from .serialize import format_multivector
        return f"Multivector({self.sig}, {format_multivector(self)})"


def mv_add(u: Multivector, v: Multivector) -> Multivector:
    u._check(v)
    return Multivector(u.sig, u.coeffs + v.coeffs)


def mv_scale(lam: Scalar, u: Multivector) -> Multivector:
    return Multivector(u.sig, lam * u.coeffs)


def mv_mul(u: Multivector, v: Multivector) -> Multivector:
    """Clifford product, bilinear over blade products."""
    u._check(v)
    signs = sign_table(u.sig)
    idx = np.arange(u.sig.size)
    out = np.zeros(u.sig.size, dtype=np.complex128)
    vnz = v.coeffs != 0
    if not vnz.any():
        return Multivector(u.sig, out)
    for a in np.flatnonzero(u.coeffs):
        # a ^ idx is a permutation, so plain fancy-index accumulation is safe
        out[a ^ idx[vnz]] += u.coeffs[a] * signs[a, vnz] * v.coeffs[vnz]
    return Multivector(u.sig, out)


# ---------------------------------------------------------------------------
# grades

@dataclass(frozen=True)
class GradeSelector:
    """A set of grades: a single grade, the even or odd grades, or an explicit subset."""

    kind: str
    grades: frozenset = frozenset()

    def __post_init__(self):
        if self.kind not in ("single", "even", "odd", "subset"):
            raise ValueError(f"unknown grade selector kind {self.kind!r}")
        if self.kind == "single" and len(self.grades) != 1:
            raise ValueError("single selector needs exactly one grade")

    @classmethod
    def single(cls, k: int) -> GradeSelector:
        return cls("single", frozenset([k]))

    @classmethod
    def subset(cls, grades: Iterable[int]) -> GradeSelector:
        return cls("subset", frozenset(grades))

    @classmethod
    def coerce(cls, sel) -> GradeSelector:
        if isinstance(sel, GradeSelector):
            return sel
        if isinstance(sel, int):
            return cls.single(sel)
        if sel in ("even", "odd"):
            return cls(sel)
        return cls.subset(sel)

    def resolve(self, n: int) -> frozenset:
        if self.kind == "even":
            return frozenset(range(0, n + 1, 2))
        if self.kind == "odd":
            return frozenset(range(1, n + 1, 2))
        bad = [k for k in self.grades if not 0 <= k <= n]
        if bad:
            raise ValueError(f"grades {sorted(bad)} outside 0..{n}")
        return self.grades


def grade_mask(sig: Signature, sel) -> np.ndarray:
    grades = GradeSelector.coerce(sel).resolve(sig.n)
    return np.isin(grade_table(sig), list(grades))


def grade_project(u: Multivector, sel) -> Multivector:
    return Multivector(u.sig, np.where(grade_mask(u.sig, sel), u.coeffs, 0))


def dim_grade(sig: Signature, sel) -> int:
    grades = GradeSelector.coerce(sel).resolve(sig.n)
    return sum(math.comb(sig.n, k) for k in grades)


# ---------------------------------------------------------------------------
# trace, conjugations, scalar product

def trace(u: Multivector) -> complex:
    return complex(u.coeffs[0])


def dagger(u: Multivector) -> Multivector:
    """Hermitian conjugation: reversed product of lowered generators, conjugated scalars."""
    return Multivector(u.sig, dagger_signs(u.sig) * np.conj(u.coeffs))


@lru_cache(maxsize=None)
def _star_signs() -> np.ndarray:
    # e^0 (e^A)^dagger e^0, blade by blade
    sig = CL13
    dsign = dagger_signs(sig)
    out = np.empty(sig.size, dtype=np.int8)
    for m in range(sig.size):
        s1, m1 = blade_mul(1, m, sig)
        s2, m2 = blade_mul(m1, 1, sig)
        assert m2 == m
        out[m] = dsign[m] * s1 * s2
    out.setflags(write=False)
    return out


def star_signs(sig: Signature) -> np.ndarray:
    if sig != CL13:
        raise SignatureError(f"pseudo-Hermitian conjugation is only defined for Cl(1,3), got {sig}")
    return _star_signs()


def star(u: Multivector) -> Multivector:
    """Pseudo-Hermitian conjugation ``U* = e^0 U^dagger e^0`` in Cl(1,3)."""
    return Multivector(u.sig, star_signs(u.sig) * np.conj(u.coeffs))


def scalar_product(u: Multivector, v: Multivector) -> complex:
    """``(U, V) = Tr(V^dagger U)``."""
    u._check(v)
    # only the A == A blade pairs reach the identity component
    diag = np.diagonal(sign_table(u.sig))
    return complex(np.sum(dagger_signs(u.sig) * diag * np.conj(v.coeffs) * u.coeffs))


def norm(u: Multivector) -> float:
    """Canonical norm ``sqrt((U, U))``, the root of the summed squared moduli."""
    mags = np.abs(u.coeffs)
    top = mags.max()
    if top == 0:
        return 0.0
    # rescale so tiny coefficients do not underflow when squared
    return float(top * np.sqrt(np.sum((mags / top) ** 2)))


def basis(sig: Signature) -> list[Multivector]:
    return [Multivector.blade(sig, m) for m in range(sig.size)]
