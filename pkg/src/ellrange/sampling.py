"""Monte-Carlo oracle for the numerical range.

Unit vectors of C^2 are drawn uniformly (four standard normals, normalized),
mapped through the Rayleigh quotient, and compared against the closed-form
shape from :mod:`ellrange.numrange`.

Random streams come from numpy's PCG64. The sample sequence is cut into
fixed-size chunks and chunk ``k`` is drawn from ``SeedSequence(seed,
spawn_key=(k,))``, so the output depends only on ``(n, seed)``: any number of
workers produces the same samples, and a shorter run is a prefix of a longer
one.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import Matrix2C, UnitVector2
from .numrange import Kind, numerical_range

CHUNK = 1 << 16
NBINS = 256


@dataclass(frozen=True, slots=True)
class SampleReport:
    n_samples: int
    max_violation: float
    boundary_gap: float
    seed: int
    kind: Kind

    def to_dict(self) -> dict:
        return {"n_samples": self.n_samples, "max_violation": self.max_violation,
                "boundary_gap": self.boundary_gap, "seed": self.seed,
                "kind": self.kind.value}


def _check_count(n: int, name: str = "n") -> int:
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {n!r}")
    return int(n)


def _chunk(seed: int, k: int, m: int) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(k,))))
    g = rng.standard_normal((m, 4))
    zero = ~g.any(axis=1)
    while zero.any():
        g[zero] = rng.standard_normal((int(zero.sum()), 4))
        zero = ~g.any(axis=1)
    return g


def sample_unit_array(n: int, seed: int, workers: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """``n`` uniform unit vectors of C^2 as two complex arrays ``(z1, z2)``."""
    n = _check_count(n)
    seed = _check_count(seed, "seed")
    sizes = [min(CHUNK, n - start) for start in range(0, n, CHUNK)]
    jobs = list(enumerate(sizes))
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda job: _chunk(seed, *job), jobs))
    else:
        parts = [_chunk(seed, k, m) for k, m in jobs]
    g = np.concatenate(parts) if parts else np.empty((0, 4))
    g /= np.sqrt((g * g).sum(axis=1))[:, None]
    z1 = g[:, 0] + 1j * g[:, 1]
    z2 = g[:, 2] + 1j * g[:, 3]
    return np.ascontiguousarray(z1), np.ascontiguousarray(z2)


def sample_unit_vectors(n: int, seed: int) -> list[UnitVector2]:
    z1, z2 = sample_unit_array(n, seed)
    return [UnitVector2(complex(a), complex(b)) for a, b in zip(z1, z2)]


def sample_range(A: Matrix2C, n: int, seed: int, workers: int = 1) -> np.ndarray:
    """Rayleigh quotients ``<Ax, x>`` for ``n`` sampled unit vectors."""
    z1, z2 = sample_unit_array(n, seed, workers)
    return kernels.rayleigh_batch(A.a11, A.a12, A.a21, A.a22, z1, z2)


def verify_inclusion(A: Matrix2C, n: int, seed: int, workers: int = 1) -> SampleReport:
    n = _check_count(n)
    if n == 0:
        raise ValueError("verify_inclusion needs at least one sample")
    shape = numerical_range(A)
    pts = sample_range(A, n, seed, workers)
    violation = kernels.max_focal_excess(pts, shape.focus1, shape.focus2, shape.semi_major)
    if shape.kind is Kind.POINT:
        gap = float(np.abs(pts - shape.center).max())
    elif shape.kind is Kind.SEGMENT:
        gap = kernels.segment_gap(pts, shape.center, shape.orientation,
                                  shape.semi_major, NBINS)
    else:
        gap = kernels.sector_gap(pts, shape.center, shape.orientation,
                                 shape.semi_major, shape.semi_minor, NBINS)
    return SampleReport(n_samples=n, max_violation=float(violation),
                        boundary_gap=float(gap), seed=int(seed), kind=shape.kind)


def convex_hull_2d(points) -> np.ndarray:
    """Counterclockwise hull vertices of complex points; collinear points dropped."""
    pts = np.asarray(points, dtype=complex).ravel()
    if pts.size <= 2:
        return pts.copy()
    x = np.ascontiguousarray(pts.real)
    y = np.ascontiguousarray(pts.imag)
    order = np.lexsort((y, x))
    x, y = x[order], y[order]
    keep = np.ones(x.size, dtype=bool)
    keep[1:] = (x[1:] != x[:-1]) | (y[1:] != y[:-1])
    x, y = np.ascontiguousarray(x[keep]), np.ascontiguousarray(y[keep])
    if x.size <= 2:
        return x + 1j * y
    idx = kernels.hull_chain(x, y)
    return x[idx] + 1j * y[idx]


def polygon_area(vertices) -> float:
    """Shoelace area of a polygon given as complex vertices in order."""
    v = np.asarray(vertices, dtype=complex)
    if v.size < 3:
        return 0.0
    x, y = v.real, v.imag
    return 0.5 * abs(float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))))
