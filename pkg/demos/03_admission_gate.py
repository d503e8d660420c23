"""Closing the loop: latency forecasts driving an admission gate.

A burst of overload latency pushes the forecast over the threshold; the
gate starts refusing new sessions while in-progress work keeps running,
then reopens as the forecast recovers.

Run:  python demos/03_admission_gate.py
"""

from smoothgate import (
    IN_PROGRESS,
    CongestionGate,
    GatePolicy,
    IntSmoother,
    ManualClock,
    Scenario,
    decide,
    generate,
    run,
)

THRESHOLD = 400

print("=" * 68)
print(f"1. Burst scenario through a deny gate (threshold {THRESHOLD} ms)")
print("=" * 68)
scenario = Scenario(
    kind="burst", length=40, level=120, high=900, switch_at=12, burst_len=8,
    jitter="uniform", jitter_scale=40, seed=42,
)
trace = run(scenario, n_alpha=5, policy=GatePolicy(threshold=THRESHOLD))
print(f"{'t':>3} {'latency':>8} {'forecast':>9}  verdict")
for r in trace.rows:
    marker = "" if r.decision.admitted else "   <-- new sessions refused"
    print(f"{r.t:>3} {r.observe:>8} {r.forecast:>9}  {r.decision.verdict}{marker}")
print()
print("Totals:", trace.stats.summary())
print()
print("The gate trips a few events into the burst (the smoother needs to be")
print("convinced) and reopens shortly after it ends: exactly the damping an")
print("overloaded system wants, no flapping on single slow samples.")
print()

print("=" * 68)
print("2. In-progress traffic is never refused")
print("=" * 68)
policy = GatePolicy(threshold=THRESHOLD)
smoother = IntSmoother(n_alpha=5, clock=ManualClock(0))
gate = CongestionGate(smoother, policy)
for x in (900, 950, 980):
    gate.observe_and_decide(x, request_kind=IN_PROGRESS)
print(f"Forecast is {smoother.forecast} ms, far over the threshold, yet:")
print("  stats after three in-progress requests:", gate.stats.summary())
print()

print("=" * 68)
print("3. Delay mode hands back a retry hint instead of refusing")
print("=" * 68)
delay_policy = GatePolicy(threshold=THRESHOLD, mode="delay", delay_amount=250)
d = decide(delay_policy, forecast=612, request_kind="new_session")
print(f"  verdict={d.verdict} retry_after={d.retry_after} "
      f"(forecast was {d.forecast_at_decision})")
print()

print("=" * 68)
print("4. Pause and resume: the reset keeps the gate honest")
print("=" * 68)
# Overload, then the load generator stops, then light traffic resumes.
overload = Scenario(kind="constant", length=10, level=800)
clock = ManualClock(0)
smoother = IntSmoother(n_alpha=5, reset_interval=5, clock=clock)
gate = CongestionGate(smoother, GatePolicy(threshold=THRESHOLD))
for when, x in generate(overload):
    clock.now = when
    gate.observe_and_decide(x)
print(f"During overload: forecast {smoother.forecast} ms -> refusing:",
      gate.stats.summary())
clock.advance(9)  # idle gap well past the 5 s reset interval
d = gate.observe_and_decide(130)
print(f"First event after the pause: forecast {d.forecast_at_decision} ms, "
      f"verdict {d.verdict}")
print()
print("Without the reset the stale 800 ms forecast would keep refusing")
print("traffic for several more events after the overload had ended.")
