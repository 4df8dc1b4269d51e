"""Distortion statistics and weight-growth analysis.

MSE/PSNR measure actual cover-vs-stego damage.  WSE = W(plane)**2 is the
worst squared error a single-plane write can inflict on one pixel, WMSE its
image-wide total, and the worst-case PSNR follows from WSE; together they
rank the number systems without needing any particular cover image.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .imageio import GrayImage
from .numsys import NumberSystem, fibonacci_numbers, prime_weights

PEAK = 255  # peak signal value of an 8-bit image


def mse(cover: GrayImage, stego: GrayImage) -> float:
    """Mean squared pixel difference."""
    if cover.pixels.shape != stego.pixels.shape:
        raise ValueError(
            f"dimension mismatch: {cover.width}x{cover.height} vs "
            f"{stego.width}x{stego.height}")
    diff = cover.pixels.astype(np.int64) - stego.pixels.astype(np.int64)
    return float(np.mean(diff * diff))


def psnr(cover: GrayImage, stego: GrayImage) -> float:
    """10*log10(PEAK**2 / MSE) in dB; +inf for identical images."""
    m = mse(cover, stego)
    if m == 0.0:
        return math.inf
    return 10.0 * math.log10(PEAK * PEAK / m)


def wse(sys: NumberSystem, plane: int) -> int:
    """Worst squared error per pixel for a write in ``plane``: W(plane)**2."""
    if not 0 <= plane < sys.plane_count:
        raise ValueError(
            f"plane {plane} out of range 0..{sys.plane_count - 1} for {sys.label}")
    return sys.weights[plane] ** 2


def wmse(width: int, height: int, sys: NumberSystem, plane: int) -> int:
    """Image-total worst squared error: width * height * wse."""
    if width <= 0 or height <= 0:
        raise ValueError(f"dimensions must be positive, got {width}x{height}")
    return width * height * wse(sys, plane)


def psnr_worst(k: int, sys: NumberSystem, plane: int) -> float:
    """Worst-case PSNR for a k-bit image: 10*log10((2**k - 1)**2 / WSE)."""
    if not 1 <= k <= 16:
        raise ValueError(f"bit depth k must be in 1..16, got {k}")
    peak = (1 << k) - 1
    return 10.0 * math.log10(peak * peak / wse(sys, plane))


def alpha_root(p: int, tolerance: float = 1e-12) -> float:
    """The root above 1 of a**(p+1) - a**p - 1 = 0, to within ``tolerance``.

    This is the base of the exponential lower bound on the order-p
    Fibonacci numbers; it decreases towards 1 as p grows.  Newton-Raphson
    from 1.5, falling back to bisection on [1, 2] if the iteration strays.
    """
    if p < 1:
        raise ValueError(f"sequence order p must be >= 1, got {p}")
    if tolerance <= 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")

    def f(a: float) -> float:
        return a ** (p + 1) - a ** p - 1.0

    def df(a: float) -> float:
        return (p + 1) * a ** p - p * a ** (p - 1)

    x = 1.5
    for _ in range(100):
        step = f(x) / df(x)
        x -= step
        if not 1.0 < x < 2.0:
            break
        if abs(step) < tolerance:
            return x
    lo, hi = 1.0, 2.0  # f(1) = -1 < 0 < 2**p - 1 = f(2)
    while hi - lo > tolerance:
        mid = (lo + hi) / 2.0
        if f(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


@dataclass(frozen=True)
class GrowthRow:
    """Weights of plane ``plane`` in the three systems, plus the prime
    weight divided by plane*ln(plane) (None below plane 2)."""

    plane: int
    binary: int
    fibonacci1: int
    prime: int
    prime_over_nlogn: float | None


def growth_table(n_max: int) -> list[GrowthRow]:
    """One row per plane index 0..n_max comparing the weight functions.

    Weights are exact integers (2**i and the Fibonacci numbers overflow
    doubles quickly); only the ratio column is floating point.
    """
    if not 2 <= n_max <= 64:
        raise ValueError(f"n_max must be in 2..64, got {n_max}")
    fib = fibonacci_numbers(1, n_max + 2)
    primes = prime_weights(n_max + 1)
    rows = []
    for i in range(n_max + 1):
        ratio = primes[i] / (i * math.log(i)) if i >= 2 else None
        rows.append(GrowthRow(i, 1 << i, fib[i + 1], primes[i], ratio))
    return rows


@dataclass(frozen=True)
class MetricsReport:
    mse: float
    psnr_db: float
    plane: int | None
    wse: int
    wmse: int
    psnr_worst_db: float


def distortion_report(cover: GrayImage, stego: GrayImage, sys: NumberSystem,
                      plane: int) -> MetricsReport:
    """Measured and worst-case statistics for one embedding run."""
    return MetricsReport(
        mse=mse(cover, stego),
        psnr_db=psnr(cover, stego),
        plane=plane,
        wse=wse(sys, plane),
        wmse=wmse(cover.width, cover.height, sys, plane),
        psnr_worst_db=psnr_worst(8, sys, plane),
    )
