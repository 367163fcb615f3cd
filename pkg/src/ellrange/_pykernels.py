"""Pure-Python/numpy versions of the sampling-oracle inner loops.

Used when the compiled ``_ckernels`` extension is unavailable or disabled
with ``ELLRANGE_PURE=1``. Both backends share these signatures.
"""
from __future__ import annotations

import math

import numpy as np


def rayleigh_batch(a11: complex, a12: complex, a21: complex, a22: complex,
                   z1: np.ndarray, z2: np.ndarray) -> np.ndarray:
    # Real arithmetic in the same order as the compiled kernel; numpy's
    # complex multiply may fuse operations and differ in the last bit.
    x1r, x1i, x2r, x2i = z1.real, z1.imag, z2.real, z2.imag
    y1r = (a11.real * x1r - a11.imag * x1i) + (a12.real * x2r - a12.imag * x2i)
    y1i = (a11.real * x1i + a11.imag * x1r) + (a12.real * x2i + a12.imag * x2r)
    y2r = (a21.real * x1r - a21.imag * x1i) + (a22.real * x2r - a22.imag * x2i)
    y2i = (a21.real * x1i + a21.imag * x1r) + (a22.real * x2i + a22.imag * x2r)
    out = np.empty(z1.shape, dtype=np.complex128)
    out.real = (y1r * x1r + y1i * x1i) + (y2r * x2r + y2i * x2i)
    out.imag = (y1i * x1r - y1r * x1i) + (y2i * x2r - y2r * x2i)
    return out


def max_focal_excess(pts: np.ndarray, f1: complex, f2: complex,
                     semi_major: float) -> float:
    if pts.size == 0:
        return 0.0
    excess = (np.hypot(pts.real - f1.real, pts.imag - f1.imag)
              + np.hypot(pts.real - f2.real, pts.imag - f2.imag) - 2.0 * semi_major)
    return max(float(excess.max()), 0.0)


def _local(pts: np.ndarray, center: complex, orientation: float):
    c, s = math.cos(orientation), math.sin(orientation)
    dx = pts.real - center.real
    dy = pts.imag - center.imag
    return c * dx + s * dy, c * dy - s * dx


def sector_gap(pts: np.ndarray, center: complex, orientation: float,
               a: float, b: float, nbins: int) -> float:
    if pts.size == 0:
        return 0.0
    u, v = _local(pts, center, orientation)
    r = np.hypot(u, v)
    alpha = np.arctan2(v, u)
    bins = np.clip(np.floor((alpha + math.pi) / (2.0 * math.pi) * nbins), 0, nbins - 1)
    bins = bins.astype(np.intp)
    # first sample (by index) attaining each bin's maximum radius
    order = np.lexsort((np.arange(r.size), -r, bins))
    _, first = np.unique(bins[order], return_index=True)
    pick = order[first]
    ra, al = r[pick], alpha[pick]
    rho = a * b / np.hypot(b * np.cos(al), a * np.sin(al))
    return max(float((rho - ra).max()), 0.0)


def segment_gap(pts: np.ndarray, center: complex, orientation: float,
                a: float, nbins: int) -> float:
    if pts.size == 0:
        return 0.0
    u, v = _local(pts, center, orientation)
    transverse = float(np.abs(v).max())
    bins = np.clip(np.floor((u + a) / (2.0 * a) * nbins), 0, nbins - 1).astype(np.intp)
    hit = np.zeros(nbins, dtype=bool)
    hit[bins] = True
    longest = run = 0
    for h in hit:
        run = 0 if h else run + 1
        longest = max(longest, run)
    longitudinal = max(longest * (2.0 * a / nbins), a - float(u.max()), float(u.min()) + a)
    return max(longitudinal, transverse)


def hull_chain(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Andrew's monotone chain over points already sorted by (x, y), no duplicates."""
    xs, ys = x.tolist(), y.tolist()

    def turns_left(i: int, j: int, k: int) -> bool:
        return (xs[j] - xs[i]) * (ys[k] - ys[i]) - (ys[j] - ys[i]) * (xs[k] - xs[i]) > 0.0

    hull: list[int] = []
    for k in range(len(xs)):
        while len(hull) >= 2 and not turns_left(hull[-2], hull[-1], k):
            hull.pop()
        hull.append(k)
    floor = len(hull) + 1
    for k in range(len(xs) - 2, -1, -1):
        while len(hull) >= floor and not turns_left(hull[-2], hull[-1], k):
            hull.pop()
        hull.append(k)
    return np.asarray(hull[:-1], dtype=np.intp)
