"""Why plain exponential smoothing disappoints, and what fixes it.

Walks the two classic failure modes -- a heavily weighted initial estimate
at startup, and a lagged response to a ramp -- then shows the repairs:
recursive-mean startup and double smoothing.

Run:  python demos/01_smoothing_basics.py
"""

from smoothgate import (
    DoubleExpSmoother,
    FloatSmoother,
    MovingAverage,
    SingleExpSmoother,
)

print("=" * 66)
print("1. A step change: the constant model handles this fine")
print("=" * 66)
step = [100, 100] + [200] * 18
single = SingleExpSmoother(0.2)
ma = MovingAverage(5)
print(f"{'t':>3} {'x':>5} {'single ES':>10} {'moving avg(5)':>14}")
for t, x in enumerate(step, 1):
    print(f"{t:>3} {x:>5} {single.update(x):>10.2f} {ma.update(x):>14.2f}")
print()
print("Both converge on 200; exponential smoothing needs to remember only")
print("one number, the moving average keeps a whole window.")
print()

print("=" * 66)
print("2. A ramp: the constant model develops a permanent lag")
print("=" * 66)
ramp = [10 * (t - 1) for t in range(1, 21)]
single = SingleExpSmoother(0.2)
double = DoubleExpSmoother(0.2)
print(f"{'t':>3} {'x':>5} {'single':>8} {'lag':>7} {'double':>8} {'lag':>7}")
for t, x in enumerate(ramp, 1):
    s = single.update(x)
    d = double.update(x)
    print(f"{t:>3} {x:>5} {s:>8.2f} {x - s:>7.2f} {d:>8.2f} {x - d:>7.2f}")
limit = (1 - 0.2) / 0.2 * 10
print()
print(f"The single-smoother lag approaches (1-a)/a * slope = {limit:.2f} and")
print("never closes.  Smoothing the smoothed statistic a second time and")
print("extrapolating one step (a_t + b_t) removes the bias: by t=20 the")
print("double smoother is within 3 units of the next ramp point.")
print()

print("=" * 66)
print("3. Startup: averaging in, instead of trusting a seed")
print("=" * 66)
# A hybrid smoother spends its first floor(1/alpha) points computing the
# running mean, so no initial estimate ever dominates.
hybrid = FloatSmoother(0.2)
xs = [120, 80, 100, 90, 110, 105, 95]
print(f"{'n':>3} {'x':>5} {'forecast':>9}   phase")
for x in xs:
    f = hybrid.update(x)
    phase = "startup mean" if hybrid.n < hybrid.n_alpha else "double smoothing"
    print(f"{hybrid.n:>3} {x:>5} {f:>9.2f}   {phase}")
print()
print("The first forecast is the first observation; each startup forecast is")
print("the exact mean so far; after floor(1/alpha) points the trend model")
print("takes over from that mean.")
