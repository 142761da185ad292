"""
Similarity indices on small vectors and on the 5 x 8 example network.
"""
import numpy as np

from coincnet import coincidence, coincidence_network, feature_matrix, project
from coincnet.datasets import example_network

np.set_printoptions(precision=3, suppress=True)

## Two multisets
x = [2, 0, 1, 3.5]
y = [1.2, 3, 2, 0]
j, i, c = coincidence(x, y)
print(f"jaccard={j:.6f} (2.2/10.5)  interiority={i:.6f} (2.2/6.2)  coincidence={c:.6f}")

## The example network seen from both sides
net = example_network()
direct = feature_matrix(net, "direct")
reverse = feature_matrix(net, "reverse")
print("\ndirect features (A-rows, B-columns):")
print(direct.matrix)
print("reverse features (B-rows, A-columns):")
print(reverse.matrix)

## Coincidence similarity networks
for o in ("direct", "reverse"):
    sim = coincidence_network(net, o)
    print(f"\n{o}: {len(sim.labels)} nodes over {sim.source_features} features")
    print(sim.matrix)
    u, v, w = max(sim.edges(), key=lambda e: e[2])
    print(f"strongest pair: {u}-{v} ({w:.4f})")

## Shared-neighbour projections ignore weights and see less structure
print("\nprojection onto A (shared B neighbours):")
print(project(net, "a").matrix)
print("weighted projection onto A (sum of min weights):")
print(project(net, "a", use_weights=True).matrix)
