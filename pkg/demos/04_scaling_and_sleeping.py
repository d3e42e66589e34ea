"""
Run time as the graph grows, and what sleeping agents buy
=========================================================

Agents whose neighbourhood did not change since they last looked are put
to sleep and skipped. We time both modes on growing benchmark graphs.
"""

import time

from fnca import EngineConfig, RnSpec, generate_rn, run

print("    n        m   sleep ms  no-sleep ms   Q sleep  Q no-sleep")
for C in (10, 30, 100, 300):
    g = generate_rn(RnSpec(C=C, s=100, d=16, z_out=5, seed=0)).graph
    row = []
    for sleeping in (True, False):
        t0 = time.perf_counter()
        res = run(g, EngineConfig(p=0.95, max_iters=50, seed=0, sleeping_enabled=sleeping))
        row.append(((time.perf_counter() - t0) * 1000, res.q))
    print("%6d %8d %10.1f %12.1f %9.4f %10.4f"
          % (g.n, g.m, row[0][0], row[1][0], row[0][1], row[1][1]))

# The awake count per sweep shows where the savings come from
g = generate_rn(RnSpec(C=100, s=100, d=16, z_out=5, seed=0)).graph
res = run(g, EngineConfig(p=0.95, max_iters=50, seed=0))
print("\nawake agents per sweep on n = %d:" % g.n, [t.awake for t in res.trace])
