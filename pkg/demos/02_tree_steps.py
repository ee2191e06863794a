# Phase-II scan steps on random ordered trees.
# Each vertex pays exactly (n-1)/2 steps on average, the same numbers as the
# published tree table.
import numpy as np

from pcube import generators as gen
from pcube.recognize import recognize

for n in [50, 100, 200, 400, 800]:
    res = [recognize(gen.random_tree(n, seed)) for seed in range(10)]
    steps = np.mean([r.phase2.steps_per_vertex for r in res])
    rounds = np.mean([r.phase1.rounds for r in res])
    passes = np.mean([r.phase1.passes(32) for r in res])
    print(f"n={n:4d}  rounds={rounds:5.1f}  32-bit passes={passes:5.1f}  steps/vertex={steps:6.1f}  (n-1)/2={(n - 1) / 2}")

# the worst case is a path: work grows by 4x per doubling
for n in [1000, 2000, 4000]:
    r = recognize(gen.path(n))
    print(n, "word ops", r.phase1.word_ops, "scan steps", r.phase2.total_steps, f"{r.seconds:.2f}s")
