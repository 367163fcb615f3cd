"""Complex scalar and 2x2 complex matrix arithmetic.

Scalars are plain Python ``complex`` values. Matrices and unit vectors are
small frozen dataclasses so they can be shared freely between threads.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

UNIT_TOL = 1e-12


def _finite(z: complex, name: str) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{name} must be finite, got {z!r}")
    return z


def principal_sqrt(z: complex) -> complex:
    """Square root with argument in (-pi/2, pi/2]."""
    r = cmath.sqrt(z)
    # cmath follows the sign of a negative-zero imaginary part; fold it back.
    if r.real == 0.0 and r.imag < 0.0:
        r = -r
    return complex(r.real + 0.0, r.imag + 0.0)


@dataclass(frozen=True, slots=True)
class Matrix2C:
    a11: complex
    a12: complex
    a21: complex
    a22: complex

    def __post_init__(self) -> None:
        for name in ("a11", "a12", "a21", "a22"):
            object.__setattr__(self, name, _finite(getattr(self, name), name))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[complex]]) -> Matrix2C:
        (a11, a12), (a21, a22) = rows
        return cls(a11, a12, a21, a22)

    @classmethod
    def from_array(cls, arr) -> Matrix2C:
        arr = np.asarray(arr, dtype=complex)
        if arr.shape != (2, 2):
            raise ValueError(f"expected a 2x2 array, got shape {arr.shape}")
        return cls(arr[0, 0], arr[0, 1], arr[1, 0], arr[1, 1])

    def to_array(self) -> np.ndarray:
        return np.array([[self.a11, self.a12], [self.a21, self.a22]], dtype=complex)

    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.a11, self.a12, self.a21, self.a22)

    def __add__(self, other: Matrix2C) -> Matrix2C:
        return Matrix2C(self.a11 + other.a11, self.a12 + other.a12,
                        self.a21 + other.a21, self.a22 + other.a22)

    def __sub__(self, other: Matrix2C) -> Matrix2C:
        return Matrix2C(self.a11 - other.a11, self.a12 - other.a12,
                        self.a21 - other.a21, self.a22 - other.a22)

    def __matmul__(self, other: Matrix2C) -> Matrix2C:
        return mat_mul(self, other)

    def scale(self, s: complex) -> Matrix2C:
        return Matrix2C(s * self.a11, s * self.a12, s * self.a21, s * self.a22)


IDENTITY = Matrix2C(1, 0, 0, 1)
ZERO = Matrix2C(0, 0, 0, 0)


def scalar_matrix(alpha: complex) -> Matrix2C:
    return Matrix2C(alpha, 0, 0, alpha)


def diag(d1: complex, d2: complex) -> Matrix2C:
    return Matrix2C(d1, 0, 0, d2)


@dataclass(frozen=True, slots=True)
class UnitVector2:
    """A unit vector (z1, z2) of C^2; construction rejects non-unit input."""

    z1: complex
    z2: complex

    def __post_init__(self) -> None:
        z1 = _finite(self.z1, "z1")
        z2 = _finite(self.z2, "z2")
        norm2 = abs(z1) ** 2 + abs(z2) ** 2
        if abs(norm2 - 1.0) > UNIT_TOL:
            raise ValueError(f"|z1|^2 + |z2|^2 = {norm2!r}, not 1")
        object.__setattr__(self, "z1", z1)
        object.__setattr__(self, "z2", z2)

    @classmethod
    def normalized(cls, z1: complex, z2: complex) -> UnitVector2:
        """Explicit normalization for callers that want it."""
        n = math.hypot(abs(z1), abs(z2))
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(z1 / n, z2 / n)


E1 = UnitVector2(1, 0)
E2 = UnitVector2(0, 1)


@dataclass(frozen=True, slots=True)
class SphereVector:
    s1: float
    s2: float
    s3: float

    def __post_init__(self) -> None:
        # |S| = |x|^2 for S = hopf_map(x), so the norm (not its square)
        # inherits the unit-vector tolerance.
        norm = math.sqrt(self.s1 ** 2 + self.s2 ** 2 + self.s3 ** 2)
        if not math.isfinite(norm) or abs(norm - 1.0) > UNIT_TOL:
            raise ValueError(f"sphere vector has norm {norm!r}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.s1, self.s2, self.s3)


def trace(A: Matrix2C) -> complex:
    return A.a11 + A.a22


def det(A: Matrix2C) -> complex:
    return A.a11 * A.a22 - A.a12 * A.a21


def frobenius_norm(A: Matrix2C) -> float:
    return math.hypot(*(abs(a) for a in A.entries()))


def adjoint(A: Matrix2C) -> Matrix2C:
    return Matrix2C(A.a11.conjugate(), A.a21.conjugate(),
                    A.a12.conjugate(), A.a22.conjugate())


def mat_mul(A: Matrix2C, B: Matrix2C) -> Matrix2C:
    return Matrix2C(
        A.a11 * B.a11 + A.a12 * B.a21,
        A.a11 * B.a12 + A.a12 * B.a22,
        A.a21 * B.a11 + A.a22 * B.a21,
        A.a21 * B.a12 + A.a22 * B.a22,
    )


def apply_plane_transform(A: Matrix2C, theta: float, v: complex) -> Matrix2C:
    """Return ``exp(i*theta) * A + v * I``."""
    if not math.isfinite(theta):
        raise ValueError(f"theta must be finite, got {theta!r}")
    w = cmath.exp(1j * theta)
    v = _finite(v, "v")
    return Matrix2C(w * A.a11 + v, w * A.a12, w * A.a21, w * A.a22 + v)


def eigenvalues2(A: Matrix2C) -> tuple[complex, complex]:
    """Both eigenvalues, larger real part first (ties: larger imaginary part).

    The discriminant ``(tr/2)^2 - det`` is evaluated in the equivalent form
    ``((a11 - a22)/2)^2 + a12*a21``, which does not cancel for large traces.
    """
    half_tr = (A.a11 + A.a22) / 2
    half_diff = (A.a11 - A.a22) / 2
    m = max(abs(half_diff), abs(A.a12), abs(A.a21))
    if m == 0.0:
        root = 0j
    else:
        hd, p, q = half_diff / m, A.a12 / m, A.a21 / m
        root = m * principal_sqrt(hd * hd + p * q)
    l1, l2 = half_tr + root, half_tr - root
    if (l2.real, l2.imag) > (l1.real, l1.imag):
        l1, l2 = l2, l1
    return l1, l2


def rayleigh(A: Matrix2C, x: UnitVector2) -> complex:
    """``<Ax, x>`` with the inner product conjugate-linear in the second slot."""
    y1 = A.a11 * x.z1 + A.a12 * x.z2
    y2 = A.a21 * x.z1 + A.a22 * x.z2
    return y1 * x.z1.conjugate() + y2 * x.z2.conjugate()


def hopf_map(x: UnitVector2) -> SphereVector:
    w = x.z1.conjugate() * x.z2
    return SphereVector(2 * w.real, 2 * w.imag, abs(x.z2) ** 2 - abs(x.z1) ** 2)
