"""The generalized logarithm h and its equivalent special-function forms.

For a weight exponent a > -1 the function

    h(s) = integral_0^s t^a / (1 - t) dt
         = sum_{n >= 0} s^(a+1+n) / (a+1+n),        0 <= s < 1,

plays the role of -log(1-s) (which it equals at a = 0).  It also equals the
incomplete beta function B(s; a+1, 0) and is proportional to the
zero-balanced hypergeometric 2F1(1, a+1; a+2; s).

The raw power series loses ground as s -> 1 (the sum diverges like
-log(1-s)), so above a configurable threshold the evaluation switches to

    h(s) = -log(1-s) - J(a, s),
    J(a, s) = integral_0^s (1 - t^a) / (1 - t) dt,

whose integrand extends continuously to t = 1 (with value a) and carries no
logarithmic growth.  J is computed by composite Gauss-Legendre quadrature on
a geometric partition of [eps, s] (so the t^a endpoint behaviour at 0 never
meets a panel interior) plus a short power series on [0, eps]; the panel
prefix sums are cached per exponent, so one evaluation costs a single
partial panel.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, DomainError

__all__ = [
    "Alpha",
    "SeriesControl",
    "DEFAULT_SERIES_CONTROL",
    "as_alpha",
    "h",
    "h_prime",
    "hyp2f1_zero_balanced",
    "incomplete_beta_a_plus1_zero",
]

# Lower end of the quadrature range for J; [0, eps] is handled by the series.
_J_SERIES_SPLIT = 1e-3
_J_PANEL_ORDER = 32
_J_PARTIAL_ORDER = 16


@dataclass(frozen=True)
class Alpha:
    """Weight exponent; every kernel evaluation carries one.  Must be > -1."""

    value: float

    def __post_init__(self):
        v = self.value
        if not (isinstance(v, (int, float)) and math.isfinite(v) and v > -1.0):
            raise DomainError(f"weight exponent must be a finite real > -1, got {v!r}")
        object.__setattr__(self, "value", float(v))


def as_alpha(alpha) -> Alpha:
    """Coerce a float (or Alpha) to a validated Alpha."""
    if isinstance(alpha, Alpha):
        return alpha
    return Alpha(float(alpha))


@dataclass(frozen=True)
class SeriesControl:
    """Truncation controls for the power-series evaluations.

    tol is an absolute truncation tolerance; split_threshold is the s-value
    at which h switches from the raw series to the log-split form (the
    log-split branch is used at the threshold itself).
    """

    tol: float = 1e-12
    max_terms: int = 10**6
    split_threshold: float = 0.5

    def __post_init__(self):
        if not (self.tol > 0.0):
            raise DomainError(f"tol must be positive, got {self.tol!r}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms!r}")
        if not (0.0 < self.split_threshold < 1.0):
            raise DomainError(
                f"split_threshold must lie in (0,1), got {self.split_threshold!r}"
            )


DEFAULT_SERIES_CONTROL = SeriesControl()


@lru_cache(maxsize=8)
def _leggauss(order: int):
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return nodes, weights


def _h_series(a: float, s: float, tol: float, max_terms: int) -> float:
    # Terms t_n = s^(a+1+n)/(a+1+n) decrease with ratio < s, so the tail
    # after t_n is below t_n * s/(1-s).
    if s <= 0.0:
        return 0.0
    pref = s ** (a + 1.0)
    guard = s / (1.0 - s)
    total = 0.0
    spow = 1.0
    for n in range(max_terms):
        term = pref * spow / (a + 1.0 + n)
        total += term
        if term * guard <= tol:
            return total
        spow *= s
    raise ConvergenceError(
        f"h series not converged to tol={tol} within {max_terms} terms at s={s}"
    )


def _j_integrand(a: float, t: np.ndarray, one_minus_t: np.ndarray) -> np.ndarray:
    # (1 - t^a)/(1 - t) via expm1 to avoid cancellation near t = 1.
    return -np.expm1(a * np.log(t)) / one_minus_t


@lru_cache(maxsize=64)
def _j_table(a: float):
    """Geometric panel boundaries of [eps, 1] and prefix integrals of J."""
    bounds = [_J_SERIES_SPLIT]
    while bounds[-1] < 1.0:
        bounds.append(min(2.0 * bounds[-1], 1.0))
    x, w = _leggauss(_J_PANEL_ORDER)
    prefix = [0.0]
    acc = 0.0
    for lo, hi in zip(bounds[:-1], bounds[1:]):
        c = 0.5 * (lo + hi)
        hw = 0.5 * (hi - lo)
        t = c + hw * x
        omt = (1.0 - c) - hw * x
        acc += hw * float(np.dot(w, _j_integrand(a, t, omt)))
        prefix.append(acc)
    # Series head on [0, eps] at machine accuracy (a handful of terms).
    head = -math.log1p(-_J_SERIES_SPLIT) - _h_series(a, _J_SERIES_SPLIT, 1e-18, 64)
    return tuple(bounds), tuple(prefix), head


def _j_value(a: float, s: float) -> float:
    """J(a, s) = integral_0^s (1-t^a)/(1-t) dt, for 0 <= s <= 1."""
    if s <= _J_SERIES_SPLIT:
        return -math.log1p(-s) - _h_series(a, s, 1e-18, 64)
    bounds, prefix, head = _j_table(a)
    k = bisect.bisect_right(bounds, s) - 1
    if k >= len(bounds) - 1:
        k = len(bounds) - 2
        if s >= bounds[-1]:
            return head + prefix[-1]
    lo = bounds[k]
    x, w = _leggauss(_J_PARTIAL_ORDER)
    c = 0.5 * (lo + s)
    hw = 0.5 * (s - lo)
    t = c + hw * x
    omt = (1.0 - c) - hw * x
    partial = hw * float(np.dot(w, _j_integrand(a, t, omt)))
    return head + prefix[k] + partial


def h(alpha, s: float, ctrl: SeriesControl | None = None, *, one_minus_s: float | None = None) -> float:
    """Evaluate h(s) = integral_0^s t^a/(1-t) dt.

    one_minus_s may be supplied when the caller knows the complement 1-s to
    better accuracy than 1.0 - s can represent (the kernel does this very
    close to its pole, where s rounds to 1).
    """
    a = as_alpha(alpha).value
    c = ctrl if ctrl is not None else DEFAULT_SERIES_CONTROL
    if one_minus_s is None:
        if not (0.0 <= s < 1.0):
            raise DomainError(f"h requires 0 <= s < 1, got s={s!r}")
        one_minus_s = 1.0 - s
    else:
        if s < 0.0 or one_minus_s <= 0.0:
            raise DomainError(
                f"h requires s >= 0 and 1-s > 0, got s={s!r}, 1-s={one_minus_s!r}"
            )
    if s < c.split_threshold:
        return _h_series(a, s, c.tol, c.max_terms)
    return -math.log(one_minus_s) - _j_value(a, s)


def h_prime(alpha, s: float) -> float:
    """Closed-form derivative h'(s) = s^a / (1 - s) on 0 < s < 1."""
    a = as_alpha(alpha).value
    if not (0.0 < s < 1.0):
        raise DomainError(f"h_prime requires 0 < s < 1, got s={s!r}")
    return s**a / (1.0 - s)


def hyp2f1_zero_balanced(alpha, x: float, ctrl: SeriesControl | None = None) -> float:
    """2F1(1, a+1; a+2; x) by direct power-series summation.

    The Pochhammer ratio collapses termwise: the n-th coefficient is
    (a+1)/(a+1+n).  Kept independent of h so the identity
    (a+1) x^-(a+1) h(x) = 2F1(1, a+1; a+2; x) is a genuine cross-check
    between two evaluation routes.
    """
    a = as_alpha(alpha).value
    c = ctrl if ctrl is not None else DEFAULT_SERIES_CONTROL
    if not (0.0 <= x < 1.0):
        raise DomainError(f"hyp2f1_zero_balanced requires 0 <= x < 1, got x={x!r}")
    if x == 0.0:
        return 1.0
    guard = x / (1.0 - x)
    total = 0.0
    xpow = 1.0
    for n in range(c.max_terms):
        term = (a + 1.0) * xpow / (a + 1.0 + n)
        total += term
        if term * guard <= c.tol:
            return total
        xpow *= x
    raise ConvergenceError(
        f"2F1 series not converged to tol={c.tol} within {c.max_terms} terms at x={x}"
    )


def incomplete_beta_a_plus1_zero(alpha, x: float, ctrl: SeriesControl | None = None) -> float:
    """B(x; a+1, 0) = integral_0^x t^a (1-t)^-1 dt, i.e. exactly h(x)."""
    return h(alpha, x, ctrl)
