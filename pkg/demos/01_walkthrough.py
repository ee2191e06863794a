# Recognize a few small graphs and look at what comes back.
import numpy as np

from pcube import generators as gen
from pcube.graph import Graph
from pcube.oracle import apsp_bfs, hamming_matrix
from pcube.recognize import recognize

# a path on four vertices needs three coordinates, one per edge
p4 = gen.path(4)
res = recognize(p4)
print("P4 dim", res.dimension, "labels", res.labeling.to_strings())

# K_{2,3} fails inside the first BFS round: some edge differs in two bits
res = recognize(gen.complete_bipartite(2, 3))
print("K23:", res.refusal)

# an odd cycle never gets that far
print("C5:", recognize(gen.cycle(5)).reason)

# a graph with one vertex of degree 4, a 4-cycle and a tail; three rounds
g = Graph.from_edge_list(10, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5),
                              (1, 6), (5, 7), (6, 7), (6, 8), (8, 9)])
res = recognize(g)
print("rounds", res.phase1.round_degrees, "dim", res.dimension)
for v, s in enumerate(res.labeling.to_strings()):
    print(f"  {v}: {s}")

# distances and Hamming distances agree entry by entry
D = apsp_bfs(g)
H = hamming_matrix(res.labeling)
print("max |D - H| =", int(np.abs(D - H).max()))
