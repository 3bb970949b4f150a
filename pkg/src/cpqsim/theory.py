"""Exact steady-state results for the continuous-priority preemptive queue.

A single server works at unit rate; customers arrive in a Poisson stream of
rate rho and carry independent U([0, 1]) priority levels; the highest priority
present is always the one in service.  Everything here follows from the fact
that the sub-population above a level p evolves as an M/M/1 queue with
arrival rate (1 - p) * rho: below the critical level (when the queue is
overloaded) every steady-state quantity is infinite, above it they are given
in closed form.

Infinity is a first-class return value (math.inf); callers that serialize
these quantities spell it "inf".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .measure import Interval

# Monotone nondecreasing map from [0, 1] into the extended reals, used to
# relabel uniform priority levels without changing the scheduling order.
QuantileMap = Callable[[float], float]


def _check_priority(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"priority outside [0, 1]: {p!r}")


@dataclass(frozen=True)
class QueueParams:
    """Arrival rate of the queue; the service rate is normalized to one."""

    rho: float

    def __post_init__(self):
        if not (isinstance(self.rho, (int, float)) and math.isfinite(self.rho) and self.rho > 0):
            raise ValueError(f"arrival rate must be positive and finite: {self.rho!r}")

    def load_above(self, p: float) -> float:
        """Arrival rate (1 - p) * rho of the sub-queue of priorities above p."""
        return (1.0 - p) * self.rho

    def is_stable(self, p: float) -> bool:
        """Whether the sub-queue above p reaches a proper equilibrium."""
        return self.load_above(p) < 1.0


@dataclass(frozen=True)
class GeometricLaw:
    """Equilibrium law of the customer count above a fixed priority level.

    When not divergent, pmf(k) = (1 - ratio) * ratio**k for k = 0, 1, ...;
    `divergent` marks the overloaded case where the count grows without bound
    (all probability mass escapes to infinity).
    """

    ratio: float
    divergent: bool = False

    def pmf(self, k: int) -> float:
        if self.divergent or k < 0:
            return 0.0
        return (1.0 - self.ratio) * self.ratio**k

    def cdf(self, k: int) -> float:
        if self.divergent or k < 0:
            return 0.0
        return 1.0 - self.ratio ** (k + 1)

    @property
    def mean(self) -> float:
        if self.divergent:
            return math.inf
        return self.ratio / (1.0 - self.ratio)


def critical_priority(params: QueueParams) -> float | None:
    """Level 1 - 1/rho separating starved from served priorities.

    Returns None when rho < 1 (every priority level is stable).  The critical
    level itself belongs to the starved side.
    """
    if params.rho < 1.0:
        return None
    return 1.0 - 1.0 / params.rho


def ccdf_equilibrium_law(params: QueueParams, p: float) -> GeometricLaw:
    """Equilibrium distribution of the number of customers above level p."""
    _check_priority(p)
    q = params.load_above(p)
    return GeometricLaw(ratio=q, divergent=q >= 1.0)


def mean_ccdf(params: QueueParams, p: float) -> float:
    """Expected number of customers above level p in equilibrium."""
    _check_priority(p)
    q = params.load_above(p)
    if q >= 1.0:
        return math.inf
    return q / (1.0 - q)


def mean_density(params: QueueParams, p: float) -> float:
    """Density of the expected priority profile: rho / (1 - (1-p) rho)^2."""
    _check_priority(p)
    q = params.load_above(p)
    if q >= 1.0:
        return math.inf
    return params.rho / (1.0 - q) ** 2


def mean_measure(params: QueueParams, interval: Interval) -> float:
    """Expected number of customers with priority in the interval.

    Evaluated through the antiderivative of the density: the expected count
    above the lower endpoint minus the expected count above the upper one.
    Infinite whenever the integral diverges, i.e. when the interval starts at
    or below the critical level and has positive length.
    """
    a, b = interval.lo, interval.hi
    if a == b:
        return 0.0
    if params.is_stable(a):
        return mean_ccdf(params, a) - mean_ccdf(params, b)
    return math.inf


def sojourn(params: QueueParams, p: float) -> float:
    """Expected arrival-to-departure time at priority p: 1 / (1 - (1-p) rho)^2."""
    _check_priority(p)
    q = params.load_above(p)
    if q >= 1.0:
        return math.inf
    return 1.0 / (1.0 - q) ** 2


def waiting(params: QueueParams, p: float) -> float:
    """Expected time from arrival to the final service entry: sojourn minus
    the unit-mean service requirement."""
    s = sojourn(params, p)
    if not math.isfinite(s):
        return math.inf
    return s - 1.0


def mean_sojourn_above(params: QueueParams, p: float) -> float:
    """Expected sojourn averaged over customers with priority above p.

    Equals 1 / (1 - (1-p) rho); by Little's law the expected count above p is
    (1-p) * rho times this quantity.
    """
    _check_priority(p)
    if p >= 1.0:
        raise ValueError("no priority levels above 1")
    q = params.load_above(p)
    if q >= 1.0:
        return math.inf
    return 1.0 / (1.0 - q)


def transform_priority(quantile: QuantileMap, p: float) -> float:
    """Relabel a uniform priority level through a quantile map.

    The map must be monotone nondecreasing, so relative order (and hence the
    scheduling dynamics) is preserved.
    """
    _check_priority(p)
    return quantile(p)
