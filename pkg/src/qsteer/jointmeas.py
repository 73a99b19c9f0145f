"""Analytic joint-measurability conditions and threshold solvers.

All arguments named ``va``/``vx`` are visibilities: the coefficient of the
sharp measurement in ``v * ideal + (1 - v) * white noise``.  Noise in the
complementary convention is ``1 - v``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .config import DEFAULT_TOLS


class NonBracketingError(ValueError):
    """Bisection endpoints do not straddle the predicate boundary."""


class ThresholdSolution(NamedTuple):
    """Solver result; ``saturated`` marks a boundary-pinned solution."""

    value: float
    saturated: bool = False


@dataclass(frozen=True)
class ThresholdRecord:
    """One scan row: parameter, detected and exact visibility thresholds.

    ``exact`` is None when the true boundary is not computable for that
    parameter; the gap then stays undefined.  A detected threshold may never
    undershoot a known exact boundary by more than the sufficiency slack.
    """

    parameter: float
    detected: float
    exact: float | None = None
    gap: float | None = None
    alpha: float | None = None
    saturated: bool = False

    def __post_init__(self):
        if not 0.0 <= self.detected <= 1.0:
            raise ValueError(f"detected threshold {self.detected!r} outside [0, 1]")
        if self.exact is not None:
            if not 0.0 <= self.exact <= 1.0:
                raise ValueError(f"exact threshold {self.exact!r} outside [0, 1]")
            gap = self.detected - self.exact
            if gap < -DEFAULT_TOLS.sufficiency:
                raise ValueError(
                    f"detected threshold undershoots the exact boundary by {-gap:.3e}"
                )
            object.__setattr__(self, "gap", gap)


def bisect_threshold(
    pred: Callable[[float], bool],
    tol: float,
    *,
    lo: float = 0.0,
    hi: float = 1.0,
    side: str = "midpoint",
    check_monotone: bool = False,
) -> float:
    """Locate the switching point of a monotone boolean predicate.

    ``side`` selects what is returned once the bracket is narrower than
    ``tol``: the bracket midpoint, or the endpoint on which the predicate
    is True/False (useful when the answer must not undershoot a boundary).
    Monotonicity is the caller's responsibility; ``check_monotone`` scans 16
    points and rejects predicates that switch more than once.
    """
    if not tol > 0.0:
        raise ValueError("tolerance must be positive")
    if side not in ("midpoint", "true", "false"):
        raise ValueError(f"unknown side {side!r}")
    p_lo, p_hi = pred(lo), pred(hi)
    if p_lo == p_hi:
        raise NonBracketingError(
            f"predicate does not change over [{lo}, {hi}] (both {p_lo})"
        )
    if check_monotone:
        values = [pred(v) for v in np.linspace(lo, hi, 16)]
        switches = sum(a != b for a, b in zip(values, values[1:]))
        if switches != 1:
            raise NonBracketingError(f"predicate switches {switches} times; not monotone")
    a, b = lo, hi
    while b - a > tol:
        mid = 0.5 * (a + b)
        if pred(mid) == p_lo:
            a = mid
        else:
            b = mid
    if side == "midpoint":
        return 0.5 * (a + b)
    want_true = side == "true"
    if p_lo == want_true:
        return a
    return b


def _check_visibility(v: float, name: str) -> float:
    v = float(v)
    if not 0.0 <= v <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {v!r}")
    return v


def mub_jm_holds(d: int, va: float, vx: float) -> bool:
    """Joint measurability of two noisy mutually unbiased bases.

    For d >= 3 this is the known algebraic condition; the d = 2 case is its
    equality-curve limit va^2 + vx^2 <= 1.
    """
    d = int(d)
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")
    va = _check_visibility(va, "va")
    vx = _check_visibility(vx, "vx")
    slack = DEFAULT_TOLS.boundary
    if d == 2:
        return va * va + vx * vx <= 1.0 + slack
    radicand = max(d - (d - 1) * (va - vx) ** 2, 0.0)
    lhs = ((d - 1) * (va + vx) - math.sqrt(radicand)) / (d - 2)
    return lhs <= 1.0 + slack


def mub_jm_threshold_symmetric(d: int) -> float:
    """Symmetric visibility threshold (sqrt(d)+2)/(2(sqrt(d)+1)).

    Closed-form solution of the joint-measurability boundary at equal noise;
    the d = 2 limit 1/sqrt(2) is included.
    """
    d = int(d)
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")
    s = math.sqrt(d)
    return (s + 2.0) / (2.0 * (s + 1.0))


def renyi_mub_holds(d: int, va: float, vx: float) -> bool:
    """No-steering condition of the min/max-entropy criterion for noisy MUBs.

    ``va`` is the visibility on the measurement evaluated by the
    min-entropy (it enters the denominator), ``vx`` the one evaluated by the
    max-entropy (numerator).
    """
    d = int(d)
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")
    va = _check_visibility(va, "va")
    vx = _check_visibility(vx, "vx")
    numer = (math.sqrt(vx + (1.0 - vx) / d) + (d - 1) * math.sqrt((1.0 - vx) / d)) ** 2
    return numer / (1.0 + (d - 1) * va) >= 1.0 - DEFAULT_TOLS.boundary


def renyi_mub_threshold_symmetric(d: int, tol: float = 1e-9) -> float:
    """Symmetric visibility threshold of the entropic criterion, by bisection."""
    return bisect_threshold(lambda v: renyi_mub_holds(d, v, v), tol)


def _eta_of_chi(pred: Callable[[float], bool], tol: float) -> ThresholdSolution:
    if not pred(0.0):
        # cannot happen for valid inputs: zero visibility is always compatible
        return ThresholdSolution(0.0, saturated=True)
    if pred(1.0):
        return ThresholdSolution(1.0, saturated=True)
    return ThresholdSolution(bisect_threshold(pred, tol))


def renyi_eta_of_chi(d: int, vx: float, tol: float = 1e-9) -> ThresholdSolution:
    """Largest va for which the entropic criterion stays silent, given vx."""
    vx = _check_visibility(vx, "vx")
    return _eta_of_chi(lambda va: renyi_mub_holds(d, va, vx), tol)


def exact_eta_of_chi(d: int, vx: float, tol: float = 1e-9) -> ThresholdSolution:
    """Largest va keeping the noisy MUB pair jointly measurable, given vx."""
    vx = _check_visibility(vx, "vx")
    return _eta_of_chi(lambda va: mub_jm_holds(d, va, vx), tol)


def qubit_exact_threshold(z, x) -> float:
    """Visibility threshold 2/(|z+x| + |z-x|) for equal-visibility unbiased
    qubit measurements along unit Bloch vectors z and x."""
    z = np.asarray(z, dtype=float)
    x = np.asarray(x, dtype=float)
    for name, u in (("z", z), ("x", x)):
        if u.shape != (3,) or abs(np.linalg.norm(u) - 1.0) > DEFAULT_TOLS.projective:
            raise ValueError(f"{name} must be a unit 3-vector")
    return 2.0 / (np.linalg.norm(z + x) + np.linalg.norm(z - x))


def qubit_renyi_threshold(theta: float) -> float:
    """Detected visibility threshold 1/(sqrt(2) cos(theta)) of the
    min/max-entropy criterion in the symmetric qubit geometry."""
    theta = float(theta)
    if not 0.0 <= theta <= math.pi / 4.0 + DEFAULT_TOLS.boundary:
        raise ValueError(f"theta must lie in [0, pi/4], got {theta!r}")
    return min(1.0, 1.0 / (math.sqrt(2.0) * math.cos(theta)))
