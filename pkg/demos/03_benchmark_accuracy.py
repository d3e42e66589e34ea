"""
How well are planted communities recovered?
===========================================

Four communities of 32 nodes, every node with degree 16. As z_out grows,
more of each node's edges leave its own community and the planted
structure fades. Accuracy is the fraction of nodes that land in the
found cluster matched to their planted group.
"""

import statistics

from fnca import EngineConfig, RnSpec, accuracy, generate_rn, planted_modularity, run

GRAPHS_PER_POINT = 10   # raise to 50 for smoother numbers

print("z_out  planted Q  found Q  clusters  accuracy")
for z_out in range(0, 9):
    accs, qs, ks = [], [], []
    for seed in range(GRAPHS_PER_POINT):
        pg = generate_rn(RnSpec(C=4, s=32, d=16, z_out=z_out, seed=seed))
        res = run(pg.graph, EngineConfig(p=0.95, max_iters=100, seed=seed))
        accs.append(accuracy(res.labels.labels, pg.planted).accuracy)
        qs.append(res.q)
        ks.append(res.n_communities)
    spec = RnSpec(C=4, s=32, d=16, z_out=z_out)
    print("%5d  %9.3f  %7.3f  %8.1f  %8.3f"
          % (z_out, planted_modularity(spec), statistics.fmean(qs), statistics.fmean(ks), statistics.fmean(accs)))

# Near z_out = 8 half of every node's edges leave its community. The
# engine tends to stop in a finer partition whose Q is below the planted
# one, which is where accuracy drops.
