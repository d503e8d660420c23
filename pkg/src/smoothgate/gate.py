"""Latency-threshold admission control driven by a smoothed forecast.

New session requests are denied (or delayed) while the forecast response
time sits above the overload threshold; work already in progress is always
allowed to finish.
"""

from dataclasses import dataclass

__all__ = [
    "NEW_SESSION",
    "IN_PROGRESS",
    "ADMIT",
    "DENY",
    "DELAY",
    "GatePolicy",
    "GateDecision",
    "GateStats",
    "decide",
    "CongestionGate",
]

NEW_SESSION = "new_session"
IN_PROGRESS = "in_progress"
_REQUEST_KINDS = (NEW_SESSION, IN_PROGRESS)

ADMIT = "admit"
DENY = "deny"
DELAY = "delay"


@dataclass(frozen=True)
class GatePolicy:
    """Overload threshold plus what happens to new sessions that exceed it.

    The threshold shares units with the observations fed to the smoother;
    nothing converts between units here.
    """

    threshold: int
    mode: str = DENY
    delay_amount: int = 0  # returned to the caller in delay mode

    def __post_init__(self):
        if self.threshold <= 0:
            raise ValueError(f"threshold must be positive, got {self.threshold}")
        if self.mode not in (DENY, DELAY):
            raise ValueError(f"mode must be {DENY!r} or {DELAY!r}, got {self.mode!r}")
        if self.delay_amount < 0:
            raise ValueError(f"delay_amount must be >= 0, got {self.delay_amount}")


@dataclass(frozen=True)
class GateDecision:
    verdict: str
    forecast_at_decision: int
    request_kind: str
    retry_after: int | None = None  # set only on delay verdicts

    @property
    def admitted(self) -> bool:
        return self.verdict == ADMIT


def decide(policy: GatePolicy, forecast: int, request_kind: str = NEW_SESSION) -> GateDecision:
    """Pure admission verdict for one request.

    In-progress requests always pass.  A new session passes unless the
    forecast strictly exceeds the threshold (equality admits); over the
    threshold the policy's mode picks deny or delay.
    """
    if request_kind not in _REQUEST_KINDS:
        raise ValueError(f"unknown request kind {request_kind!r}")
    if request_kind == IN_PROGRESS or forecast <= policy.threshold:
        return GateDecision(ADMIT, forecast, request_kind)
    if policy.mode == DELAY:
        return GateDecision(DELAY, forecast, request_kind, retry_after=policy.delay_amount)
    return GateDecision(DENY, forecast, request_kind)


@dataclass
class GateStats:
    admitted: int = 0
    denied: int = 0
    delayed: int = 0

    @property
    def decisions(self) -> int:
        return self.admitted + self.denied + self.delayed

    def record(self, decision: GateDecision) -> None:
        if decision.verdict == ADMIT:
            self.admitted += 1
        elif decision.verdict == DENY:
            self.denied += 1
        else:
            self.delayed += 1

    def summary(self) -> str:
        return (
            f"admitted={self.admitted} denied={self.denied} "
            f"delayed={self.delayed} decisions={self.decisions}"
        )


class CongestionGate:
    """Admission gate bound to a live smoother.

    Each offered event carries the latency measured for a completed
    transaction; the smoother absorbs it and the fresh forecast is compared
    against the policy.  Inherits the smoother's single-writer contract.
    """

    def __init__(self, smoother, policy: GatePolicy):
        self.smoother = smoother
        self.policy = policy
        self.stats = GateStats()

    def observe_and_decide(self, x: int, request_kind: str = NEW_SESSION) -> GateDecision:
        """Advance the smoother by one observation, then rule on the request."""
        forecast = self.smoother.update(x)
        decision = decide(self.policy, forecast, request_kind)
        self.stats.record(decision)
        return decision
