import pytest

from smoothgate import (
    ADMIT,
    DELAY,
    DENY,
    IN_PROGRESS,
    NEW_SESSION,
    CongestionGate,
    GatePolicy,
    GateStats,
    IntSmoother,
    ManualClock,
    decide,
)

from tables import CANONICAL_TRACE, CANONICAL_VALUES


@pytest.fixture
def policy():
    return GatePolicy(threshold=600)


class TestDecide:
    def test_over_threshold_denies_new_sessions(self, policy):
        d = decide(policy, 612, NEW_SESSION)
        assert d.verdict == DENY
        assert d.forecast_at_decision == 612
        assert not d.admitted

    def test_under_threshold_admits(self, policy):
        assert decide(policy, 599, NEW_SESSION).verdict == ADMIT

    def test_exactly_at_threshold_admits(self, policy):
        assert decide(policy, 600, NEW_SESSION).verdict == ADMIT

    def test_in_progress_always_admits(self, policy):
        for forecast in (0, 600, 601, 10**9):
            d = decide(policy, forecast, IN_PROGRESS)
            assert d.verdict == ADMIT

    def test_delay_mode_returns_the_retry_amount(self):
        p = GatePolicy(threshold=100, mode=DELAY, delay_amount=250)
        d = decide(p, 150, NEW_SESSION)
        assert d.verdict == DELAY
        assert d.retry_after == 250

    def test_repeated_identical_calls_agree(self, policy):
        first = decide(policy, 612, NEW_SESSION)
        for _ in range(10):
            assert decide(policy, 612, NEW_SESSION) == first

    def test_monotone_in_the_forecast(self, policy):
        verdicts = [decide(policy, f, NEW_SESSION).admitted for f in range(590, 611)]
        # Once a forecast is rejected, every larger forecast is rejected too.
        assert verdicts == sorted(verdicts, reverse=True)

    def test_unknown_request_kind_rejected(self, policy):
        with pytest.raises(ValueError):
            decide(policy, 100, "batch")


class TestPolicyValidation:
    def test_threshold_must_be_positive(self):
        with pytest.raises(ValueError):
            GatePolicy(threshold=0)

    def test_mode_must_be_known(self):
        with pytest.raises(ValueError):
            GatePolicy(threshold=10, mode="drop")

    def test_delay_amount_must_be_non_negative(self):
        with pytest.raises(ValueError):
            GatePolicy(threshold=10, mode=DELAY, delay_amount=-1)


class TestGateStats:
    def test_counts_partition_the_decisions(self, policy):
        stats = GateStats()
        delay_policy = GatePolicy(threshold=600, mode=DELAY, delay_amount=5)
        stats.record(decide(policy, 700, NEW_SESSION))
        stats.record(decide(policy, 100, NEW_SESSION))
        stats.record(decide(delay_policy, 700, NEW_SESSION))
        stats.record(decide(policy, 700, IN_PROGRESS))
        assert (stats.admitted, stats.denied, stats.delayed) == (2, 1, 1)
        assert stats.decisions == 4

    def test_summary_line(self):
        stats = GateStats(admitted=3, denied=2, delayed=1)
        assert stats.summary() == "admitted=3 denied=2 delayed=1 decisions=6"


class TestCongestionGate:
    def test_fresh_gate_admits_the_first_sample(self, policy):
        gate = CongestionGate(IntSmoother(clock=ManualClock(0)), policy)
        d = gate.observe_and_decide(571)
        assert d.verdict == ADMIT
        assert d.forecast_at_decision == 571

    def test_one_smoother_update_per_decision(self, policy):
        smoother = IntSmoother(clock=ManualClock(0))
        gate = CongestionGate(smoother, policy)
        for i, x in enumerate((571, 565, 564), start=1):
            gate.observe_and_decide(x)
            assert smoother.n == i

    def test_canonical_replay_denies_exactly_the_over_threshold_rows(self, policy):
        gate = CongestionGate(IntSmoother(clock=ManualClock(0)), policy)
        denied_at = [
            t
            for t, x in enumerate(CANONICAL_VALUES, start=1)
            if gate.observe_and_decide(x).verdict == DENY
        ]
        expected = [row[0] for row in CANONICAL_TRACE if row[2] > 600]
        assert denied_at == expected
        assert gate.stats.denied == len(expected)
        assert gate.stats.decisions == len(CANONICAL_VALUES)
