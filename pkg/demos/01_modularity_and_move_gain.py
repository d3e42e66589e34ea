"""
Modularity from the point of view of a single node
==================================================

Two triangles joined by one bridge edge are the smallest graph with an
obvious answer. We score a few labelings, then look at what one node
would gain by switching community.
"""

from fnca import Labeling, build_graph, delta_q, local_f, modularity_pairwise, modularity_q

# nodes 0-2 and 3-5 form triangles, 2-3 is the bridge
g = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
print("n =", g.n, " m =", g.m)

# everyone together scores zero, the natural split scores about 0.357
for labels in ([0, 0, 0, 0, 0, 0], [0, 0, 0, 1, 1, 1], [0, 1, 2, 3, 4, 5]):
    lab = Labeling(g, labels)
    print(labels, "Q = %.4f" % modularity_q(g, lab), " pairwise = %.4f" % modularity_pairwise(g, labels))

# Each node owns a share of Q. Summing the shares over all nodes and
# dividing by 2m gives Q back exactly.
lab = Labeling(g, [0, 0, 0, 1, 1, 1])
shares = [local_f(g, lab, i, lab.labels[i]) for i in range(g.n)]
print("shares:", ["%.3f" % f for f in shares])
print("sum / 2m = %.4f" % (sum(shares) / (2 * g.m)))

# Moving the bridge node 2 into the other triangle loses modularity,
# and the predicted change matches a full recomputation.
before = modularity_q(g, lab)
gain = delta_q(g, lab, 2, 1)
after = modularity_q(g, Labeling(g, [0, 0, 1, 1, 1, 1]))
print("predicted dQ = %.4f, recomputed dQ = %.4f" % (gain, after - before))
