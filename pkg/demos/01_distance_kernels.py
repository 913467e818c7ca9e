"""
Edit distance to short run patterns
===================================

Exact DP against the one-run and two-run kernels.
"""

import time

import numpy as np

from levgraph import TwoRunPattern, dist_one_run, dist_two_run_linear, edit_distance_dp, hamming_distance
from levgraph.strings import format_string

# a random ternary string and a two-run target 0^l 1^r
rng = np.random.default_rng(7)
w = tuple(rng.integers(0, 3, 12).tolist())
p = TwoRunPattern(0, 4, 1, 5)
print("w      =", format_string(w, 3))
print("target =", format_string(p.to_string(), 3))

# the linear pass agrees with the quadratic DP
print("kernel:", dist_two_run_linear(w, p), " dp:", edit_distance_dp(w, p.to_string()))

# one run only: a closed form
print("to 0^6:", dist_one_run(w, 0, 6), edit_distance_dp(w, (0,) * 6))

# same length and a two-run target, so edit distance is Hamming distance
v = (2,) * 5 + (1,) * 7
print("same length:", edit_distance_dp(w, v), hamming_distance(w, v))

# cost as the input grows
for n in (2**12, 2**13, 2**14):
    w = tuple(rng.integers(0, 3, n).tolist())
    p = TwoRunPattern(0, n // 4, 1, n // 4)
    t = time.perf_counter()
    dist_two_run_linear(w, p)
    print(f"n={n:6d}  kernel {1e3 * (time.perf_counter() - t):7.2f} ms")
