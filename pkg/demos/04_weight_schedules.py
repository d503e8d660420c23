"""Where the forecast weight actually goes.

Three schedules tell the whole story: how exponential smoothing discounts
history, how much weight a naive initial estimate keeps, and how the
recursive-mean startup spreads that weight across real data instead.

Run:  python demos/04_weight_schedules.py
"""

import math

from smoothgate import (
    MovingAverage,
    initial_estimate_weights,
    smoothing_weights,
    startup_weights,
)

ALPHA = 0.10
K = 20

print(f"alpha = {ALPHA}, {K} points in time\n")

print("1. Data weights: exponential smoothing vs a 20-point moving average")
print(f"{'i':>3} {'ES weight':>10} {'MA weight':>10}")
es = smoothing_weights(ALPHA, K)
for i, w in enumerate(es, 1):
    print(f"{i:>3} {w:>10.6f} {1 / K:>10.6f}")
print(f"    ES weights sum to {math.fsum(es):.6f}; the moving average gives")
print("    every point exactly 0.05 and anything older exactly zero.\n")

print("2. How long a naive initial estimate dominates")
print(f"{'i':>3} {'sum(data)':>10} {'initial':>10}")
rows = initial_estimate_weights(ALPHA, K)
crossover = None
for i, (data_w, init_w) in enumerate(rows, 1):
    note = ""
    if crossover is None and data_w > init_w:
        crossover = i
        note = "  <- data finally outweighs the seed"
    print(f"{i:>3} {data_w:>10.6f} {init_w:>10.6f}{note}")
print(f"    With alpha={ALPHA} the seed out-votes all observed data until")
print(f"    i={crossover}, and still holds {rows[9][1]:.6f} at i=10 -- more than")
print("    three times the newest observation's 0.10.\n")

print("3. The repair: seed with the first observation, average it down")
print(f"{'i':>3} {'naive seed':>11} {'startup':>10}")
naive = [w0 for _, w0 in rows]
for i, (n_w, s_w) in enumerate(zip(naive, startup_weights(ALPHA, K)), 1):
    tag = "  <- 1/i while averaging" if i <= 10 else "  <- decaying normally"
    print(f"{i:>3} {n_w:>11.6f} {s_w:>10.6f}{tag}")
print("    The first observation's influence falls as 1/i during startup and")
print("    then decays geometrically, instead of lingering near 0.35 at i=10.")

# Sanity: a moving average really is flat weights -- mean of 20 ones is 1.
ma = MovingAverage(K)
for _ in range(K):
    last = ma.update(1.0)
assert abs(last - 1.0) < 1e-12
