"""The production integer forecaster, step by step.

Integer-only math (no floats, division last, everything inside int32) makes
the algorithm safe for kernel-space code.  This demo replays the canonical
25-sample latency series, then shows the elapsed-time reset that guards
against stale state on event-driven streams.

Run:  python demos/02_integer_forecaster.py
"""

from smoothgate import IntSmoother, ManualClock, clamp_observation

LATENCIES = [571, 565, 564, 936, 576, 574, 569, 563, 562, 570,
             585, 573, 570, 574, 570, 567, 567, 563, 562, 569,
             569, 595, 566, 796, 594]

print("=" * 60)
print("1. Canonical run, n_alpha = 10")
print("=" * 60)
clock = ManualClock(0)
sm = IntSmoother(n_alpha=10, reset_interval=5, clock=clock)
print(f"{'t':>3} {'observe':>8} {'forecast':>9} {'n':>3} {'s1':>5} {'s2':>5} {'a':>5} {'b':>3}")
for t, x in enumerate(LATENCIES, 1):
    ft = sm.update(x)
    a, b = sm.trend()
    print(f"{t:>3} {x:>8} {ft:>9} {sm.n:>3} {sm.s1:>5} {sm.s2:>5} {a:>5} {b:>3}")
print()
print("Rows 1-10 are running means (s2 rides along equal to s1); from row 11")
print("the trend model takes over.  Note how the 936 spike at t=4 and the")
print("796 spike at t=24 pull the forecast up without capturing it outright.")
print()

print("=" * 60)
print("2. All divisions truncate toward zero, like C")
print("=" * 60)
print("At t=18 the state is s1=581, s2=591, so the slope term is")
print("(581-591)/9 = -10/9 -> -1 under truncation (floor would say -2),")
print("giving forecast 2*581 - 591 - 1 = 570.  Bit-for-bit C behavior.")
print()

print("=" * 60)
print("3. Input clamping keeps every product inside int32")
print("=" * 60)
for x in (2**31 - 1, -(2**31), 571):
    print(f"   clamp({x:>12}, n_alpha=10) = {clamp_observation(x, 10)}")
print()

print("=" * 60)
print("4. The elapsed-time reset")
print("=" * 60)
clock = ManualClock(0)
sm = IntSmoother(n_alpha=5, reset_interval=5, clock=clock)
print("Feed a ramp one second per event, then go idle for 6 seconds")
print("(reset interval is 5), then resume:")
print(f"{'t':>3} {'clock':>6} {'observe':>8} {'forecast':>9} {'n':>3}")
for t in range(1, 18):
    clock.now = t - 1 + (5 if t >= 12 else 0)  # 6s gap between events 11 and 12
    x = 10 * (t - 1)
    ft = sm.update(x)
    print(f"{t:>3} {clock.now:>6} {x:>8} {ft:>9} {sm.n:>3}")
print()
print("After the gap the sample count drops to 1 and the forecast equals the")
print("fresh observation: smoothed state older than the reset interval says")
print("nothing useful about current congestion.  A pause of exactly the")
print("interval does NOT reset; the comparison is strictly greater-than.")
