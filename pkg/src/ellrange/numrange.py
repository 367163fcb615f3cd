"""Numerical range of a 2x2 complex matrix as an elliptical disk.

Two independent routes produce the semi-axes:

* :func:`semi_axes` evaluates the closed-form trace expression on the
  trace-free part ``B = A - tr(A)/2 * I``;
* :func:`canonicalize` rotates, shifts and unitarily triangularizes ``A`` to
  ``[[c, 2b], [0, -c]]`` with ``b, c >= 0``, whose range has semi-axes
  ``sqrt(b^2 + c^2)`` and ``b``.

:func:`numerical_range` assembles the full :class:`RangeShape` (foci are the
eigenvalues) and the geometry helpers query it.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import (
    IDENTITY,
    Matrix2C,
    adjoint,
    eigenvalues2,
    frobenius_norm,
    mat_mul,
    principal_sqrt,
    trace,
)

DEGENERACY_RTOL = 1e-10
UNITARY_TOL = 1e-12


def degeneracy_threshold(A: Matrix2C) -> float:
    """Lengths at or below this value count as zero when classifying W(A)."""
    return DEGENERACY_RTOL * (1.0 + frobenius_norm(A))


class Kind(str, enum.Enum):
    POINT = "point"
    SEGMENT = "segment"
    DISK = "disk"
    ELLIPSE = "ellipse"


@dataclass(frozen=True, slots=True)
class PlaneTransform:
    """Maps the canonical range back: ``A = exp(-i*theta) * U K U^* + v*I``."""

    theta: float
    v: complex
    U: Matrix2C

    def __post_init__(self) -> None:
        if not math.isfinite(self.theta):
            raise ValueError("theta must be finite")
        v = complex(self.v)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ValueError("v must be finite")
        object.__setattr__(self, "v", v)
        P = mat_mul(self.U, adjoint(self.U))
        err = max(abs(p - q) for p, q in zip(P.entries(), IDENTITY.entries()))
        if err > UNITARY_TOL:
            raise ValueError(f"U is not unitary (|UU* - I| = {err:.3g})")

    def apply(self, K: Matrix2C) -> Matrix2C:
        """Undo the canonicalization: map a canonical matrix back to A's frame."""
        w = cmath.exp(-1j * self.theta)
        M = mat_mul(mat_mul(self.U, K), adjoint(self.U))
        return Matrix2C(w * M.a11 + self.v, w * M.a12,
                        w * M.a21, w * M.a22 + self.v)


@dataclass(frozen=True, slots=True)
class CanonicalForm:
    b: float
    c: float
    transform: PlaneTransform

    def __post_init__(self) -> None:
        if not (self.b >= 0 and self.c >= 0):
            raise ValueError(f"b and c must be nonnegative, got b={self.b}, c={self.c}")

    @property
    def matrix(self) -> Matrix2C:
        return Matrix2C(self.c, 2 * self.b, 0, -self.c)

    def reconstruct(self) -> Matrix2C:
        return self.transform.apply(self.matrix)

    @property
    def semi_axes(self) -> tuple[float, float]:
        return math.hypot(self.b, self.c), self.b


@dataclass(frozen=True, slots=True)
class RangeShape:
    center: complex
    focus1: complex
    focus2: complex
    semi_major: float
    semi_minor: float
    orientation: float
    kind: Kind

    def __post_init__(self) -> None:
        if not (self.semi_major >= self.semi_minor >= 0.0):
            raise ValueError(
                f"need semi_major >= semi_minor >= 0, got "
                f"{self.semi_major!r}, {self.semi_minor!r}")
        if not (0.0 <= self.orientation < math.pi):
            raise ValueError(f"orientation {self.orientation!r} outside [0, pi)")

    @property
    def half_focal_distance(self) -> float:
        return abs(self.focus1 - self.focus2) / 2


@dataclass(frozen=True, eq=False)
class FactorDecomposition:
    """Diagonal dilation ``F`` and rotation ``R`` with ``F @ R @ S`` giving W(A)."""

    f: tuple[float, float, float]
    R: np.ndarray

    @property
    def F(self) -> np.ndarray:
        return np.diag(self.f)

    def apply(self, s) -> np.ndarray:
        """``F @ R @ s`` for a sphere point (or an (n, 3) stack of them)."""
        s = np.asarray(s, dtype=float)
        return (s @ self.R.T) * np.asarray(self.f)


def center(A: Matrix2C) -> complex:
    return trace(A) / 2


def _traceless(A: Matrix2C) -> Matrix2C:
    half = trace(A) / 2
    return Matrix2C(A.a11 - half, A.a12, A.a21, A.a22 - half)


def _scaled_traceless(A: Matrix2C) -> tuple[Matrix2C, float]:
    """Trace-free part divided by its largest entry modulus, and that modulus."""
    B = _traceless(A)
    m = max(abs(x) for x in B.entries())
    if m == 0.0:
        return B, m
    return Matrix2C(*(x / m for x in B.entries())), m


def semi_axes(A: Matrix2C) -> tuple[float, float]:
    """Major and minor semi-axes ``s+ >= s- >= 0`` of W(A).

    With ``B`` the trace-free part, ``s+- = sqrt(tr(B^*B) +- |tr(B^2)|) / 2``.
    The minus branch is the departure from normality of ``B``; subtracting
    the two traces directly loses half the significant digits for nearly
    normal ``A``, so it is evaluated through the commutator ``[B^*, B]``
    instead. For trace-free 2x2 ``B`` with ``m = tr(B^*B) - |tr(B^2)|``,
    ``||[B^*, B]||_F^2 = 2 m (m + 2 |tr(B^2)|)``, solved for ``m`` without
    cancellation.
    """
    B, m = _scaled_traceless(A)
    if m == 0.0:
        return 0.0, 0.0
    gram = sum(abs(x) ** 2 for x in B.entries())
    sq_trace = abs(B.a11 * B.a11 + B.a12 * B.a21 + B.a21 * B.a12 + B.a22 * B.a22)
    s_plus = 0.5 * math.sqrt(max(gram + sq_trace, 0.0))

    Bh = adjoint(B)
    comm = mat_mul(Bh, B) - mat_mul(B, Bh)
    half_comm2 = 0.5 * sum(abs(x) ** 2 for x in comm.entries())
    denom = sq_trace + math.sqrt(sq_trace * sq_trace + half_comm2)
    dep = half_comm2 / denom if denom > 0.0 else 0.0
    s_minus = 0.5 * math.sqrt(max(dep, 0.0))
    return m * s_plus, m * min(s_minus, s_plus)


def semi_axes_direct(A: Matrix2C) -> tuple[float, float]:
    """The trace formula evaluated term by term, for comparison."""
    B = _traceless(A)
    gram = max(sum(abs(x) ** 2 for x in B.entries()), 0.0)
    sq_trace = abs(trace(mat_mul(B, B)))
    return (0.5 * math.sqrt(max(gram + sq_trace, 0.0)),
            0.5 * math.sqrt(max(gram - sq_trace, 0.0)))


def _unit_column(p: complex, q: complex) -> tuple[complex, complex]:
    s = max(abs(p), abs(q))
    p, q = p / s, q / s
    n = math.hypot(abs(p), abs(q))
    return p / n, q / n


def canonicalize(A: Matrix2C) -> CanonicalForm:
    """Reduce ``A`` to ``[[c, 2b], [0, -c]]`` and record how to undo it."""
    v = trace(A) / 2
    # U does not depend on the scale of B; b and c scale linearly.
    B, scale = _scaled_traceless(A)
    half_diff = B.a11
    lam = principal_sqrt(half_diff * half_diff + B.a12 * B.a21)
    if lam == 0:
        theta = 0.0
    else:
        theta = -cmath.phase(lam)
    c = abs(lam)
    C = B.scale(cmath.exp(1j * theta))

    if c > 0.0:
        # (C - cI)(C + cI) = 0, so the columns of C + cI span the c-eigenspace.
        col1 = (C.a11 + c, C.a21)
        col2 = (C.a12, C.a22 + c)
        p, q = max(col1, col2, key=lambda col: abs(col[0]) ** 2 + abs(col[1]) ** 2)
        u1, u2 = _unit_column(p, q)
    elif any(x != 0 for x in C.entries()):
        row1 = (C.a11, C.a12)
        row2 = (C.a21, C.a22)
        p, q = max(row1, row2, key=lambda row: abs(row[0]) ** 2 + abs(row[1]) ** 2)
        u1, u2 = _unit_column(q, -p)
    else:
        u1, u2 = 1 + 0j, 0j

    U = Matrix2C(u1, -u2.conjugate(), u2, u1.conjugate())
    T = mat_mul(mat_mul(adjoint(U), C), U)
    beta = T.a12 / 2
    if beta != 0:
        # Conjugating by D = diag(e^{i phi}, e^{-i phi}) multiplies T12 by e^{2 i phi}.
        phi = -cmath.phase(beta) / 2
        d = cmath.exp(-1j * phi)
        U = Matrix2C(U.a11 * d, U.a12 * d.conjugate(), U.a21 * d, U.a22 * d.conjugate())
    b = abs(beta) * scale
    c = c * scale
    return CanonicalForm(b=b, c=c, transform=PlaneTransform(theta=theta, v=v, U=U))


def _orientation(f1: complex, f2: complex, tau: float) -> float:
    d = f1 - f2
    if abs(d) <= tau:
        return 0.0
    o = math.atan2(d.imag, d.real) % math.pi
    return 0.0 if o >= math.pi else o


def classify(semi_major: float, semi_minor: float, focal_distance: float,
             tau: float) -> Kind:
    if semi_major <= tau:
        return Kind.POINT
    if semi_minor <= tau:
        return Kind.SEGMENT
    if focal_distance <= tau:
        return Kind.DISK
    return Kind.ELLIPSE


def numerical_range(A: Matrix2C) -> RangeShape:
    """W(A) = {<Ax, x> : |x| = 1} as a possibly degenerate elliptical disk."""
    tau = degeneracy_threshold(A)
    f1, f2 = eigenvalues2(A)
    s_plus, s_minus = semi_axes(A)
    kind = classify(s_plus, s_minus, abs(f1 - f2), tau)
    orientation = 0.0 if kind in (Kind.POINT, Kind.DISK) else _orientation(f1, f2, tau)
    return RangeShape(center=center(A), focus1=f1, focus2=f2,
                      semi_major=s_plus, semi_minor=s_minus,
                      orientation=orientation, kind=kind)


def contains(shape: RangeShape, z: complex, tol: float = 0.0) -> bool:
    """Focal-sum membership test, valid for every kind including the degenerate ones."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    return abs(z - shape.focus1) + abs(z - shape.focus2) <= 2 * shape.semi_major + tol


def boundary_point(shape: RangeShape, t: float) -> complex:
    local = complex(shape.semi_major * math.cos(t), shape.semi_minor * math.sin(t))
    return shape.center + cmath.exp(1j * shape.orientation) * local


def boundary_points(shape: RangeShape, t) -> np.ndarray:
    """Vectorized :func:`boundary_point` over an array of parameters."""
    t = np.asarray(t, dtype=float)
    local = shape.semi_major * np.cos(t) + 1j * shape.semi_minor * np.sin(t)
    return shape.center + cmath.exp(1j * shape.orientation) * local


def support_value(A: Matrix2C, phi: float) -> float:
    """Largest eigenvalue of the Hermitian part of ``exp(-i*phi) * A``.

    This is max Re(exp(-i*phi) z) over z in W(A), computed without any
    knowledge of the ellipse.
    """
    w = cmath.exp(-1j * phi)
    h11 = (w * A.a11).real
    h22 = (w * A.a22).real
    h12 = (w * A.a12 + (w * A.a21).conjugate()) / 2
    return (h11 + h22) / 2 + math.hypot((h11 - h22) / 2, abs(h12))


def ellipse_support(shape: RangeShape, phi: float) -> float:
    """Analytic support function of the shape in direction ``exp(i*phi)``."""
    psi = phi - shape.orientation
    base = (cmath.exp(-1j * phi) * shape.center).real
    return base + math.hypot(shape.semi_major * math.cos(psi),
                             shape.semi_minor * math.sin(psi))


def factor_decomposition(b: float, c: float) -> FactorDecomposition:
    if b < 0 or c < 0:
        raise ValueError(f"b and c must be nonnegative, got b={b}, c={c}")
    m = max(b, c)
    if m == 0.0:
        r = 0.0
        R = np.eye(3)
    else:
        # scale first so subnormal inputs still give an orthogonal R
        bs, cs = b / m, c / m
        rs = math.hypot(bs, cs)
        r = m * rs
        R = np.array([[bs / rs, 0.0, -cs / rs],
                      [0.0, 1.0, 0.0],
                      [cs / rs, 0.0, bs / rs]])
    R.setflags(write=False)
    return FactorDecomposition(f=(r, float(b), 0.0), R=R)
