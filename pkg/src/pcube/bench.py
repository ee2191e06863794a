"""Experiment harness: per-instance measurements and per-cell means laid out
like the published tables (antimatroids by ``(k, t)``, trees by ``n``)."""

import csv
import time

from . import generators as gen
from .recognize import recognize

ANTIMATROID_CELLS = [
    (2, 15), (2, 20), (2, 25), (2, 30), (2, 35), (2, 40),
    (3, 15), (3, 20), (3, 25), (3, 30),
    (4, 15), (4, 20),
    (5, 15),
]
TREE_SIZES = [50, 100, 200, 400, 800]

COLUMNS = [
    "row", "family", "k", "t", "size", "seed", "n", "m", "accepted",
    "phase1_rounds", "phase1_passes", "phase2_steps_per_vertex", "seconds",
]
_AVERAGED = ["n", "m", "phase1_rounds", "phase1_passes", "phase2_steps_per_vertex", "seconds"]


def measure(g, word_cap=32):
    start = time.perf_counter()
    result = recognize(g)
    return {
        "n": g.n,
        "m": g.m,
        "accepted": int(result.is_partial_cube),
        "phase1_rounds": result.phase1.rounds,
        "phase1_passes": result.phase1.passes(word_cap),
        "phase2_steps_per_vertex": result.phase2.steps_per_vertex if result.phase2 else "",
        "seconds": time.perf_counter() - start,
    }


def _mean_row(rows, **key):
    out = {"row": "mean", "seed": "", "accepted": sum(r["accepted"] for r in rows), **key}
    for col in _AVERAGED:
        vals = [r[col] for r in rows if r[col] != ""]
        out[col] = sum(vals) / len(vals) if vals else ""
    return out


def tree_rows(sizes=TREE_SIZES, seeds=range(10), word_cap=32):
    rows = []
    for n in sizes:
        cell = []
        for seed in seeds:
            row = {"row": "instance", "family": "tree", "k": "", "t": "", "size": n, "seed": seed}
            row.update(measure(gen.random_tree(n, seed), word_cap))
            cell.append(row)
        rows.extend(cell)
        if cell:
            rows.append(_mean_row(cell, family="tree", k="", t="", size=n))
    return rows


def antimatroid_rows(cells=ANTIMATROID_CELLS, seeds=range(10), word_cap=32):
    rows = []
    for k, t in cells:
        cell = []
        for seed in seeds:
            row = {"row": "instance", "family": "antimatroid", "k": k, "t": t, "size": "", "seed": seed}
            row.update(measure(gen.permutation_antimatroid(k, t, seed), word_cap))
            cell.append(row)
        rows.extend(cell)
        if cell:
            rows.append(_mean_row(cell, family="antimatroid", k=k, t=t, size=""))
    return rows


def write_csv(rows, fh):
    writer = csv.DictWriter(fh, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: _fmt(row.get(c, "")) for c in COLUMNS})


def _fmt(value):
    if isinstance(value, float):
        return f"{value:.4f}"
    return value
