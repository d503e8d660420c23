"""Floating-point exponential smoothing models and their weight schedules.

These are the real-arithmetic forecasters: single and double exponential
smoothing, the hybrid model that starts as a recursive mean and switches to
trend smoothing, and a plain moving average for comparison.  The integer
production twin lives in ``intsmooth``.
"""

import math
from collections import deque
from dataclasses import dataclass

from .errors import UnprimedError

__all__ = [
    "TrendForecast",
    "SingleExpSmoother",
    "DoubleExpSmoother",
    "FloatSmoother",
    "MovingAverage",
    "startup_length",
    "smoothing_weights",
    "initial_estimate_weights",
    "startup_weights",
]


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"smoothing constant must satisfy 0 < alpha < 1, got {alpha}")


def _check_finite(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"observation must be finite, got {x}")
    return x


def startup_length(alpha: float) -> int:
    """Number of recursive-mean startup observations, floor(1/alpha).

    A tiny epsilon absorbs binary rounding so alphas with an exact integer
    inverse (0.1, 0.2, 0.25, ...) always map to that inverse.
    """
    _check_alpha(alpha)
    return math.floor(1.0 / alpha + 1e-9)


@dataclass(frozen=True)
class TrendForecast:
    """Level/slope pair produced by a trend-aware smoother."""

    a: float  # level estimate
    b: float  # slope estimate, per step
    horizon: int = 1  # steps ahead the forecast targets

    @property
    def value(self) -> float:
        return self.a + self.b * self.horizon


class SingleExpSmoother:
    """Constant-model smoother: s = alpha*x + (1 - alpha)*s.

    Seeds from the first observation unless an explicit initial estimate is
    supplied, in which case the very first update already discounts it.
    """

    def __init__(self, alpha: float, initial: float | None = None):
        _check_alpha(alpha)
        self.alpha = alpha
        self.s = None if initial is None else float(initial)

    def update(self, x: float) -> float:
        x = _check_finite(x)
        if self.s is None:
            self.s = x
        else:
            self.s = self.alpha * x + (1.0 - self.alpha) * self.s
        return self.s

    @property
    def forecast(self) -> float:
        if self.s is None:
            raise UnprimedError("forecast read before any observation")
        return self.s


class DoubleExpSmoother:
    """Trend-model smoother that smooths the smoothed statistic again.

        s1 = alpha*x  + (1 - alpha)*s1
        s2 = alpha*s1 + (1 - alpha)*s2
        forecast = a + b  with  a = 2*s1 - s2,  b = alpha/(1-alpha)*(s1 - s2)

    Tracks a linear ramp without the steady-state lag the single smoother
    develops.  Both statistics seed from the first observation unless an
    initial estimate is supplied.
    """

    def __init__(self, alpha: float, initial: float | None = None):
        _check_alpha(alpha)
        self.alpha = alpha
        self.s1 = None if initial is None else float(initial)
        self.s2 = self.s1

    def update(self, x: float) -> float:
        x = _check_finite(x)
        if self.s1 is None:
            self.s1 = x
            self.s2 = x
        else:
            self.s1 = self.alpha * x + (1.0 - self.alpha) * self.s1
            self.s2 = self.alpha * self.s1 + (1.0 - self.alpha) * self.s2
        return self.trend().value

    def trend(self) -> TrendForecast:
        if self.s1 is None:
            raise UnprimedError("forecast read before any observation")
        b = self.alpha / (1.0 - self.alpha) * (self.s1 - self.s2)
        return TrendForecast(a=2.0 * self.s1 - self.s2, b=b)

    @property
    def forecast(self) -> float:
        return self.trend().value


class FloatSmoother:
    """Hybrid forecaster: recursive-mean startup, then double smoothing.

    The first floor(1/alpha) observations are absorbed as a running
    arithmetic mean (s = x/n + (1 - 1/n)*s), which removes the initial-
    estimate bias; after that the double-smoothing recurrences take over,
    with the second statistic seeded from the first at the handover.
    This is the real-arithmetic twin of ``intsmooth.IntSmoother``.
    """

    def __init__(self, alpha: float):
        _check_alpha(alpha)
        self.alpha = alpha
        self.n_alpha = startup_length(alpha)
        self.n = 0
        self.s1 = 0.0
        self.s2 = 0.0
        self._primed = False

    def update(self, x: float) -> float:
        """Absorb one observation, dispatching on the startup boundary."""
        if self.n < self.n_alpha:
            return self.startup_step(x)
        return self.double_step(x).value

    def startup_step(self, x: float) -> float:
        """One recursive-mean step; forecast equals the mean of all inputs so far."""
        assert self.n < self.n_alpha, "startup already complete"
        x = _check_finite(x)
        self.n += 1
        self.s1 = x / self.n + (1.0 - 1.0 / self.n) * self.s1
        self.s2 = self.s1
        self._primed = True
        return self.s1

    def double_step(self, x: float) -> TrendForecast:
        """One double-smoothing step; only valid once startup is complete."""
        assert self.n >= self.n_alpha, "startup incomplete"
        x = _check_finite(x)
        self.s1 = self.alpha * x + (1.0 - self.alpha) * self.s1
        self.s2 = self.alpha * self.s1 + (1.0 - self.alpha) * self.s2
        self._primed = True
        return self.trend()

    def trend(self) -> TrendForecast:
        if not self._primed:
            raise UnprimedError("forecast read before any observation")
        b = self.alpha / (1.0 - self.alpha) * (self.s1 - self.s2)
        return TrendForecast(a=2.0 * self.s1 - self.s2, b=b)

    @property
    def forecast(self) -> float:
        if not self._primed:
            raise UnprimedError("forecast read before any observation")
        if self.n < self.n_alpha:
            return self.s1
        return self.trend().value


class MovingAverage:
    """Mean of the last ``window`` observations (partial-buffer mean before
    the window fills, so a forecast exists from the first point)."""

    def __init__(self, window: int):
        if window < 1:
            raise ValueError(f"window must be >= 1, got {window}")
        self.window = window
        self._buf = deque(maxlen=window)

    def update(self, x: float) -> float:
        self._buf.append(_check_finite(x))
        return math.fsum(self._buf) / len(self._buf)

    @property
    def forecast(self) -> float:
        if not self._buf:
            raise UnprimedError("forecast read before any observation")
        return math.fsum(self._buf) / len(self._buf)

    def __len__(self) -> int:
        return len(self._buf)


def smoothing_weights(alpha: float, k: int) -> list[float]:
    """Weights the smoother gives the k most recent observations, newest
    first: alpha, alpha*(1-alpha), ..., alpha*(1-alpha)**(k-1)."""
    _check_alpha(alpha)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return [alpha * (1.0 - alpha) ** i for i in range(k)]


def initial_estimate_weights(alpha: float, k: int) -> list[tuple[float, float]]:
    """Rows (cumulative data weight, initial-estimate weight) after i = 1..k
    observations.  Each row sums to 1: the data carry 1 - (1-alpha)**i and
    the initial estimate keeps the remaining (1-alpha)**i."""
    _check_alpha(alpha)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    rows = []
    for i in range(1, k + 1):
        w0 = (1.0 - alpha) ** i
        rows.append((1.0 - w0, w0))
    return rows


def startup_weights(alpha: float, k: int) -> list[float]:
    """Weight the first observation carries after i = 1..k updates under the
    recursive-mean startup: 1, 1/2, ..., 1/n_a, then decaying as
    (1/n_a)*(1-alpha)**(i-n_a) once ongoing smoothing takes over."""
    _check_alpha(alpha)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n_a = startup_length(alpha)
    out = []
    for i in range(1, k + 1):
        if i <= n_a:
            out.append(1.0 / i)
        else:
            out.append((1.0 / n_a) * (1.0 - alpha) ** (i - n_a))
    return out
