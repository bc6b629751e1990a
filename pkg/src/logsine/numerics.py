"""Floating-point kernels shared by the oracles and the numeric pipelines.

Contents: compensated summation, Cohen-Rodriguez Villegas-Zagier alternating
series acceleration, double-exponential (tanh-sinh) quadrature tolerant of
logarithmic endpoint singularities, real-argument polygamma, Richardson
central differencing, truncated power-series arithmetic and exact cotangent
derivatives.

All functions are pure; there is no shared mutable state beyond small
memoization caches of immutable results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .specialfn import bernoulli


@dataclass(frozen=True)
class NumericConfig:
    """Knobs for the numeric kernels."""

    target_abs_tol: float = 1e-10
    max_series_terms: int = 10**6
    quadrature_levels: int = 12
    richardson_levels: int = 5

    def __post_init__(self):
        if not self.target_abs_tol > 0:
            raise ValueError("target_abs_tol must be > 0")
        if self.max_series_terms < 10:
            raise ValueError("max_series_terms must be >= 10")
        if self.quadrature_levels < 3:
            raise ValueError("quadrature_levels must be >= 3")


DEFAULT_CONFIG = NumericConfig()


class AccelerationError(RuntimeError):
    """Series acceleration failed to certify the target tolerance."""

    def __init__(self, message: str, estimate: float, error_bound: float):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound


class QuadratureError(RuntimeError):
    """Quadrature failed to certify the target tolerance."""

    def __init__(self, message: str, estimate: float, error_bound: float):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound


def compensated_sum(terms: Sequence[float]) -> float:
    """Neumaier compensated sum: error O(1 ulp * sum|terms|), length-independent."""
    total = 0.0
    comp = 0.0
    for t in terms:
        s = total + t
        if abs(total) >= abs(t):
            comp += (total - s) + t
        else:
            comp += (t - s) + total
        total = s
    result = total + comp
    if not math.isfinite(result):
        raise OverflowError("compensated_sum produced a non-finite result")
    return result


# -- alternating series acceleration -----------------------------------------


def _cvz_pass(a: list[float]) -> float:
    # Chebyshev-polynomial acceleration: one pass over n precomputed magnitudes,
    # returns an estimate of sum_{k>=1} (-1)^{k+1} a_k.
    n = len(a)
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    s = 0.0
    for k in range(n):
        c = b - c
        s += c * a[k]
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0))
    return s / d


def accelerate_alternating(
    term_fn: Callable[[int], float], cfg: NumericConfig = DEFAULT_CONFIG
) -> float:
    """Accelerated value of sum_{k>=1} (-1)^{k+1} term_fn(k).

    ``term_fn(k)`` must return the magnitude of the k-th term of a convergent
    alternating series whose magnitudes are (eventually) smooth and totally
    monotone.  The number of terms follows the ceil(1.31 * digits) rule with
    a verification pass at a larger depth; failure to certify the tolerance
    raises :class:`AccelerationError` carrying the best estimate.
    """
    digits = max(4, math.ceil(-math.log10(cfg.target_abs_tol)) + 2)
    n = max(10, math.ceil(1.31 * digits))
    cap = min(cfg.max_series_terms, 280)
    best = None
    best_err = math.inf
    while n + 8 <= cap:
        values = [float(term_fn(k)) for k in range(1, n + 9)]
        s_low = _cvz_pass(values[:n])
        s_high = _cvz_pass(values)
        err = abs(s_high - s_low)
        if err < best_err:
            best, best_err = s_high, err
        if err <= cfg.target_abs_tol:
            return s_high
        n *= 2
    if best is None:
        # term budget too small for the requested depth: best effort estimate
        values = [float(term_fn(k)) for k in range(1, cap + 1)]
        best = _cvz_pass(values)
        best_err = abs(best - _cvz_pass(values[: max(cap - 8, 2)]))
    raise AccelerationError(
        f"alternating series did not certify tol={cfg.target_abs_tol}",
        estimate=best,
        error_bound=best_err,
    )


@lru_cache(maxsize=None)
def zeta_numeric(n: int, _cfg_ignored=None) -> float:
    """Numeric zeta(n) for integer n >= 2 via the accelerated eta series."""
    if n < 2:
        raise ValueError("zeta_numeric requires n >= 2")
    cfg = NumericConfig(target_abs_tol=1e-14)
    eta = accelerate_alternating(lambda k: 1.0 / float(k) ** n, cfg)
    return eta / (1.0 - 2.0 ** (1 - n))


# -- tanh-sinh quadrature ------------------------------------------------------

_T_MAX = 6.5


def _ts_nodes(level: int, h: float):
    # Positive abscissa parameters for one refinement level; level 0 emits the
    # integer grid including t = 0, later levels only the odd multiples of h.
    if level == 0:
        k = 0
        while k * h <= _T_MAX:
            yield k * h
            k += 1
    else:
        t = h
        while t <= _T_MAX:
            yield t
            t += 2 * h


def _ts_half_integral(
    f: Callable[[float], float], lo: float, hi: float, tol: float, max_level: int
) -> tuple[float, float, float]:
    """Tanh-sinh on [lo, hi]; both endpoints are mapped to transform infinity.

    Returns (value, error_estimate, roundoff_floor); the floor is the best
    absolute accuracy binary64 can express for this integrand's mass.
    """
    halfw = (hi - lo) / 2.0
    center = (lo + hi) / 2.0

    def weighted(t: float) -> float:
        u = (math.pi / 2.0) * math.sinh(t)
        e2u = math.exp(-2.0 * u)  # in (0, 1]; underflows to 0 far out
        sech2 = 4.0 * e2u / (1.0 + e2u) ** 2
        w = halfw * (math.pi / 2.0) * math.cosh(t) * sech2
        if w == 0.0:
            return 0.0
        if t == 0.0:
            return w * f(center)
        # distance to the near endpoint, computed without cancellation; nodes
        # falling inside the last representable ulp are clamped to the nearest
        # interior point so their (log-singular) mass is not silently dropped
        d = (hi - lo) * e2u / (1.0 + e2u)
        x_hi = hi - d
        if x_hi >= hi:
            x_hi = math.nextafter(hi, lo)
        x_lo = lo + d
        if x_lo <= lo:
            x_lo = math.nextafter(lo, hi)
        return w * (f(x_hi) + f(x_lo))

    def level_pass(level: int, h: float) -> tuple[float, float]:
        vals = [weighted(t) for t in _ts_nodes(level, h)]
        return math.fsum(vals), math.fsum(abs(v) for v in vals)

    h = 0.5
    level_sum, scale = level_pass(0, h)
    value = h * level_sum
    prev = value
    err = math.inf
    floor = 0.0
    for level in range(1, max_level + 1):
        h /= 2.0
        inc, inc_abs = level_pass(level, h)
        level_sum += inc
        scale += inc_abs
        value = h * level_sum
        err = abs(value - prev)
        prev = value
        # differences below a few ulps of the absolute mass carry no
        # information, so treat them as converged
        floor = 8.0 * 2.2e-16 * h * scale
        if level >= 2 and err <= max(tol, floor):
            return value, err, floor
    return value, err, floor


def tanh_sinh_quadrature(
    f: Callable[[float], float],
    a: float,
    b: float,
    cfg: NumericConfig = DEFAULT_CONFIG,
) -> float:
    """Integral of f over (a, b) by double-exponential quadrature.

    Logarithmic singularities at either endpoint are harmless: the interval
    is split at its midpoint and each half is transformed so that both of
    its endpoints sit at transform infinity; nodes closer to an endpoint
    than float spacing allows are clamped onto the last representable
    interior point so their singular mass is kept at its leading order.

    Raises :class:`QuadratureError` when the internal error estimate cannot
    reach ``cfg.target_abs_tol`` within ``cfg.quadrature_levels`` levels.
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("finite integration limits required")
    if a == b:
        return 0.0
    if a > b:
        return -tanh_sinh_quadrature(f, b, a, cfg)
    mid = (a + b) / 2.0
    tol = cfg.target_abs_tol / 2.0
    v1, e1, f1 = _ts_half_integral(f, a, mid, tol, cfg.quadrature_levels)
    v2, e2, f2 = _ts_half_integral(f, mid, b, tol, cfg.quadrature_levels)
    value = v1 + v2
    if not math.isfinite(value):
        raise QuadratureError("integrand produced non-finite values", value, math.inf)
    if e1 + e2 > max(cfg.target_abs_tol, f1 + f2):
        raise QuadratureError(
            f"quadrature error estimate {e1 + e2:.3e} above target {cfg.target_abs_tol:.3e}",
            estimate=value,
            error_bound=e1 + e2,
        )
    return value


# -- polygamma on the positive real axis --------------------------------------

_ASYMPTOTIC_CUT = 20.0
_BERNOULLI_TERMS = 14


@lru_cache(maxsize=None)
def _b2k_float(k: int) -> float:
    return float(bernoulli(2 * k))


def polygamma_real(order: int, x: float) -> float:
    """psi^(order)(x) for real x > 0.

    Shifts the argument upward with the recurrence
    psi^{(n)}(x) = psi^{(n)}(x+1) - (-1)^n n!/x^{n+1} and then applies the
    Bernoulli-number asymptotic expansion.
    """
    if order < 0:
        raise ValueError("polygamma order must be >= 0")
    if not x > 0:
        raise ValueError("polygamma_real requires x > 0")
    n = order
    shift_terms = []
    y = x
    while y < _ASYMPTOTIC_CUT:
        shift_terms.append(1.0 / y ** (n + 1))
        y += 1.0
    if n == 0:
        tail = math.log(y) - 1.0 / (2.0 * y)
        ypow = y * y
        for k in range(1, _BERNOULLI_TERMS + 1):
            tail -= _b2k_float(k) / (2 * k * ypow)
            ypow *= y * y
        return tail - compensated_sum(shift_terms)
    sign = (-1.0) ** (n + 1)
    head = math.factorial(n - 1) / y**n + math.factorial(n) / (2.0 * y ** (n + 1))
    ypow = y ** (n + 2)
    for k in range(1, _BERNOULLI_TERMS + 1):
        head += _b2k_float(k) * _rising_ratio(2 * k, n) / ypow
        ypow *= y * y
    shifted = sign * head
    # undo the recurrence shifts: psi^{(n)}(x) = psi^{(n)}(y) - (-1)^n n! sum 1/(x+i)^{n+1}
    return shifted - (-1.0) ** n * math.factorial(n) * compensated_sum(shift_terms)


@lru_cache(maxsize=None)
def _rising_ratio(two_k: int, n: int) -> float:
    # (2k + n - 1)! / (2k)!
    out = 1.0
    for i in range(two_k + 1, two_k + n):
        out *= i
    return out


def euler_gamma_numeric() -> float:
    """Euler-Mascheroni constant as -psi(1); used only inside numeric oracles."""
    return -polygamma_real(0, 1.0)


# -- Richardson central differences --------------------------------------------

_STENCILS = {
    1: ((1, 0.5), (-1, -0.5)),
    2: ((1, 1.0), (0, -2.0), (-1, 1.0)),
    3: ((2, 0.5), (1, -1.0), (-1, 1.0), (-2, -0.5)),
    4: ((2, 1.0), (1, -4.0), (0, 6.0), (-1, -4.0), (-2, 1.0)),
}


def richardson_derivative(
    f: Callable[[float], float],
    x0: float,
    order: int,
    cfg: NumericConfig = DEFAULT_CONFIG,
) -> tuple[float, float]:
    """Derivative of ``f`` at ``x0`` of the given order with an error estimate.

    Central differences (even-power error expansion) refined by Richardson
    extrapolation with step halving from h0 = 1e-2 (5e-2 for orders 3-4).
    Orders above 4 are not supported here; use the power-series oracle
    instead.  Returns ``(value, error_estimate)`` for the tableau entry with
    the smallest observed successive difference, which guards against
    roundoff blowup at tiny steps.
    """
    if order < 1 or order > 4:
        raise ValueError("richardson_derivative supports orders 1..4")
    stencil = _STENCILS[order]
    # orders 3-4 need a larger base step: their stencils divide by h^3, h^4,
    # so roundoff at h = 1e-2 already exceeds the achievable truncation error
    h0 = 1e-2 if order <= 2 else 5e-2
    levels = max(2, cfg.richardson_levels)

    def difference(h: float) -> float:
        acc = [c * f(x0 + k * h) for k, c in stencil]
        return compensated_sum(acc) / h**order

    table: list[list[float]] = []
    best = None
    best_err = math.inf
    for i in range(levels):
        h = h0 / 2**i
        row = [difference(h)]
        for j in range(1, i + 1):
            factor = 4.0**j
            row.append((factor * row[j - 1] - table[i - 1][j - 1]) / (factor - 1.0))
        table.append(row)
        if i >= 1:
            err = abs(table[i][i] - table[i - 1][i - 1])
            if err < best_err:
                best, best_err = table[i][i], err
    return best, best_err


# -- truncated power series -----------------------------------------------------


@dataclass
class PowerSeries:
    """Truncated real power series; coeffs[i] is the coefficient of m^i."""

    coeffs: list[float]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def zero(order: int) -> "PowerSeries":
        return PowerSeries([0.0] * (order + 1))

    def _check(self, other: "PowerSeries"):
        if self.order != other.order:
            raise ValueError("power series truncation orders must match")

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        return PowerSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        n = self.order
        out = [0.0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0.0:
                continue
            for j in range(0, n - i + 1):
                out[i + j] += a * other.coeffs[j]
        return PowerSeries(out)

    def scale(self, c: float) -> "PowerSeries":
        return PowerSeries([c * a for a in self.coeffs])

    def exp(self) -> "PowerSeries":
        """exp of the series, exact to the truncation order."""
        n = self.order
        out = [0.0] * (n + 1)
        out[0] = math.exp(self.coeffs[0])
        for i in range(1, n + 1):
            acc = 0.0
            for j in range(1, i + 1):
                acc += j * self.coeffs[j] * out[i - j]
            out[i] = acc / i
        return PowerSeries(out)

    def compose_scalar(self, c: float) -> "PowerSeries":
        """Substitute m -> c*m."""
        return PowerSeries([a * c**i for i, a in enumerate(self.coeffs)])

    def derivative_at_zero(self, p: int) -> float:
        """p! * coeffs[p] = the p-th derivative at 0."""
        if p > self.order:
            raise ValueError("derivative order exceeds truncation order")
        return math.factorial(p) * self.coeffs[p]


# -- derivatives of pi*cot(pi*k) -------------------------------------------------


@lru_cache(maxsize=None)
def _cot_poly(n: int) -> tuple[int, ...]:
    # Integer coefficients of the polynomial P_n with d^n/du^n cot(u) = P_n(cot u),
    # generated by P_0 = c and P_{n+1} = P_n'(c) * (-(1 + c^2)).
    if n == 0:
        return (0, 1)
    prev = _cot_poly(n - 1)
    deriv = tuple(i * prev[i] for i in range(1, len(prev)))
    out = [0] * (len(deriv) + 2)
    for i, a in enumerate(deriv):
        out[i] -= a
        out[i + 2] -= a
    return tuple(out)


def cot_derivative(order: int, k: float) -> float:
    """d^order/dk^order of pi*cot(pi*k) at non-integer real k.

    Exact recursion: derivatives of cot are integer polynomials in cot
    (d/du cot = -(1 + cot^2)), scaled by powers of pi.  order = 0 returns
    pi*cot(pi*k) itself.
    """
    if order < 0:
        raise ValueError("cot_derivative requires order >= 0")
    if k == round(k):
        raise ValueError("pi*cot(pi*k) has a pole at integer k")
    c = math.cos(math.pi * k) / math.sin(math.pi * k)
    poly = _cot_poly(order)
    acc = 0.0
    for coef in reversed(poly):
        acc = acc * c + coef
    return math.pi ** (order + 1) * acc
