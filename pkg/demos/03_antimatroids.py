# Antimatroids from k random permutations of t items.
import numpy as np

from pcube import generators as gen
from pcube.recognize import recognize

cells = [(2, 15), (2, 20), (3, 15), (3, 20), (4, 15)]
print(" k   t     |V|     |E|  rounds  steps/vertex")
for k, t in cells:
    rows = []
    for seed in range(10):
        g = gen.permutation_antimatroid(k, t, seed)
        r = recognize(g)
        assert r, (k, t, seed)
        rows.append((g.n, g.m, r.phase1.rounds, r.phase2.steps_per_vertex))
    nv, ne, rd, st = np.mean(rows, axis=0)
    print(f"{k:2d} {t:3d} {nv:7.1f} {ne:7.1f} {rd:7.1f} {st:13.1f}")

# dropping one edge breaks the embedding
g = gen.permutation_antimatroid(2, 10, 0)
print("after deleting an edge:", recognize(gen.perturb(g, "delete-edge", 1)).reason)
