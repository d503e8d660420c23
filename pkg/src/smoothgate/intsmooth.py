"""Integer-only double exponential smoothing with startup averaging and
elapsed-time reset.

All arithmetic is 32-bit safe: observations are clamped so that every
product and dividend stays inside the signed 32-bit range, and every
division truncates toward zero the way C's signed ``/`` does.  The design
goal is an algorithm that can run where floating point cannot (e.g. inside
a kernel-level driver) while matching its real-arithmetic twin closely.
"""

import time
from typing import Callable

from .errors import UnprimedError

__all__ = [
    "INT32_MAX",
    "INT32_MIN",
    "cdiv",
    "clamp_observation",
    "system_seconds",
    "ManualClock",
    "IntSmoother",
]

INT32_MAX = 2**31 - 1
INT32_MIN = -(2**31)


def cdiv(a: int, b: int) -> int:
    """Signed integer division truncating toward zero (C semantics).

    Python's ``//`` floors, which differs for negative quotients:
    cdiv(-10, 9) == -1 while -10 // 9 == -2.
    """
    q = abs(a) // abs(b)
    return q if (a >= 0) == (b >= 0) else -q


def clamp_observation(x: int, n_alpha: int) -> int:
    """Saturate x to [INT32_MIN/n_alpha, INT32_MAX/n_alpha] (bounds computed
    with truncating division), so x + (n_alpha-1)*s never leaves int32."""
    if n_alpha < 1:
        raise ValueError(f"n_alpha must be >= 1, got {n_alpha}")
    hi = cdiv(INT32_MAX, n_alpha)
    lo = cdiv(INT32_MIN, n_alpha)
    if x > hi:
        return hi
    if x < lo:
        return lo
    return x


def system_seconds() -> int:
    """Wall clock in whole seconds, the default production time source."""
    return int(time.time())


class ManualClock:
    """Deterministic injectable time source for tests and simulations."""

    def __init__(self, start: int = 0):
        self.now = int(start)

    def __call__(self) -> int:
        return self.now

    def advance(self, seconds: int) -> None:
        self.now += int(seconds)


class IntSmoother:
    """Streaming integer forecaster.

    The first n_alpha observations are absorbed as a recursive mean
    (s1 = (x + (n-1)*s1) / n); after that the double-smoothing recurrences
    run with 1/n_alpha as the effective smoothing constant:

        s1 = (x  + (n_alpha-1)*s1) / n_alpha
        s2 = (s1 + (n_alpha-1)*s2) / n_alpha
        ft = 2*s1 - s2 + (s1 - s2)/(n_alpha-1)      # ft = s1 when n_alpha == 1

    If more than ``reset_interval`` seconds pass between updates the sample
    count drops back to zero, so the next observation restarts the mean and
    becomes the forecast verbatim (stale smoothed state is worthless for
    event-driven latency streams).

    Updates must be serialized by the caller; the instance may be moved
    between threads between updates.
    """

    def __init__(
        self,
        n_alpha: int = 10,
        reset_interval: int = 5,
        clock: Callable[[], int] = system_seconds,
    ):
        if n_alpha < 1:
            raise ValueError(f"n_alpha must be >= 1, got {n_alpha}")
        if reset_interval < 0:
            raise ValueError(f"reset_interval must be >= 0, got {reset_interval}")
        self.n_alpha = n_alpha
        self.reset_interval = reset_interval
        self._clock = clock
        self.n = 0
        self.s1 = 0
        self.s2 = 0
        self.last_update = 0
        self._ft = 0
        self._primed = False

    def update(self, x: int) -> int:
        """Absorb one observation and return the new forecast."""
        x = clamp_observation(int(x), self.n_alpha)
        now = int(self._clock())
        # Strictly greater-than: a pause of exactly reset_interval does not reset.
        if now - self.last_update > self.reset_interval:
            self.n = 0
        self.last_update = now
        if self.n < self.n_alpha:
            self.n += 1
            self.s1 = cdiv(x + (self.n - 1) * self.s1, self.n)
            self.s2 = self.s1
            self._ft = self.s1
        else:
            self.s1 = cdiv(x + (self.n_alpha - 1) * self.s1, self.n_alpha)
            self.s2 = cdiv(self.s1 + (self.n_alpha - 1) * self.s2, self.n_alpha)
            if self.n_alpha > 1:
                self._ft = 2 * self.s1 - self.s2 + cdiv(self.s1 - self.s2, self.n_alpha - 1)
            else:
                self._ft = self.s1
        self._primed = True
        return self._ft

    @property
    def forecast(self) -> int:
        """Most recent forecast; raises UnprimedError before the first update."""
        if not self._primed:
            raise UnprimedError("forecast read before any observation")
        return self._ft

    def trend(self) -> tuple[int, int]:
        """Current (level, slope) integer pair; slope is 0 when n_alpha == 1.

        During startup s2 == s1, so this collapses to (s1, 0).
        """
        if not self._primed:
            raise UnprimedError("trend read before any observation")
        a = 2 * self.s1 - self.s2
        b = cdiv(self.s1 - self.s2, self.n_alpha - 1) if self.n_alpha > 1 else 0
        return a, b
