"""
Sensitivity to p and to the sweep budget
========================================

p is the probability that an agent takes its best label instead of a
random improving one. The sweep budget caps how many passes the agents
get. Both are scanned on one benchmark graph.
"""

import statistics

from fnca import EngineConfig, RnSpec, generate_rn, run

g = generate_rn(RnSpec(C=4, s=32, d=16, z_out=6, seed=3)).graph
RUNS = 20

print("   p   mean Q   std Q")
for p in (0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 1.0):
    qs = [run(g, EngineConfig(p=p, max_iters=100, seed=s)).q for s in range(RUNS)]
    print("%4.2f  %.4f  %.4f" % (p, statistics.fmean(qs), statistics.pstdev(qs)))

# Q after t sweeps can be read from the trace of one long run, so a budget
# scan needs no reruns. Runs that stopped early keep their final Q.
traces = [[e.q for e in run(g, EngineConfig(p=0.95, max_iters=20, seed=s)).trace] for s in range(RUNS)]
print("\nsweeps  mean Q")
for t in range(1, 21):
    qs = [tr[min(t, len(tr)) - 1] for tr in traces]
    print("%6d  %.4f" % (t, statistics.fmean(qs)))
