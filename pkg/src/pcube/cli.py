"""Command-line front end.

Exit status: 0 partial cube / success, 1 not a partial cube (or an
oracle disagreement), 2 I/O, format or parameter error.

Label files hold one 0/1 string per vertex after a ``dim=<d>`` header;
coordinate 0 is the rightmost character.
"""

import argparse
import sys
from pathlib import Path

from . import bench, crosscheck, fileio
from . import generators as gen
from .bitvec import ALL_ZERO, MANY
from .errors import GraphError, NotPartialCube
from .graph import is_connected
from .labeler import EdgeClassPartition
from .recognize import recognize
from .verifier import edge_label_differences, verify

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2

LABEL_HELP = "label files: 'dim=<d>' header, then one 0/1 string per vertex, coordinate 0 rightmost"


class UsageError(Exception):
    pass


def _shared(p):
    p.add_argument("--seed", type=int, default=None, help="RNG seed (numpy PCG64)")
    p.add_argument("--word-cap", type=int, default=32, metavar="BITS",
                   help="bits per word when counting Phase-I passes (default 32)")
    p.add_argument("--trace", action="store_true", help="print Phase-II root moves to stderr")
    p.add_argument("--out", default=None, metavar="PATH", help="output path")


def build_parser():
    parser = argparse.ArgumentParser(prog="pcube", description="Partial cube recognition.", epilog=LABEL_HELP)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decide whether a graph is a partial cube", epilog=LABEL_HELP)
    p.add_argument("graph", help="edge-list file ('n m' header, then m lines 'u v')")
    _shared(p)
    p.set_defaults(func=cmd_recognize)
    p.epilog = LABEL_HELP + ". --out PREFIX writes PREFIX.labels and PREFIX.classes (default: the input path stem)"

    p = sub.add_parser("verify", help="check a given labeling", epilog=LABEL_HELP)
    p.add_argument("graph")
    p.add_argument("labels")
    _shared(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a generated graph as an edge list")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", help="positional values or key=value pairs")
    _shared(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="run the experiment grids and emit CSV")
    p.add_argument("--trees", default=None, metavar="SIZES",
                   help="comma-separated tree sizes (default grid if neither grid flag is given)")
    p.add_argument("--antimatroids", default=None, metavar="CELLS",
                   help="comma-separated k:t cells, e.g. 2:15,3:15")
    p.add_argument("--seeds", type=int, default=10, help="instances per cell")
    _shared(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle-check", help="compare the pipeline with the brute-force oracle")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--count", type=int, default=500, help="random connected graphs to draw")
    _shared(p)
    p.set_defaults(func=cmd_oracle_check)
    return parser


def _write_text(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _tracer(args):
    if not args.trace:
        return None
    return lambda line: print(line, file=sys.stderr)


def cmd_recognize(args):
    g = fileio.read_edge_list(args.graph)
    result = recognize(g, trace=_tracer(args))
    if not result:
        print("partial cube: no")
        print(f"reason: {result.refusal}")
        print(f"seconds={result.seconds:.4f}")
        return EXIT_NO
    prefix = args.out if args.out is not None else str(Path(args.graph).with_suffix(""))
    fileio.write_labels(result.labeling, prefix + ".labels")
    fileio.write_classes(result.partition, prefix + ".classes")
    print("partial cube: yes")
    print(f"dim={result.dimension}")
    print(f"phase1_rounds={result.phase1.rounds} phase1_passes={result.phase1.passes(args.word_cap)}")
    print(f"phase2_steps_per_vertex={result.phase2.steps_per_vertex:.2f}")
    print(f"seconds={result.seconds:.4f}")
    return EXIT_YES


def cmd_verify(args):
    g = fileio.read_edge_list(args.graph)
    lab = fileio.read_labels(args.labels)
    if lab.n != g.n:
        raise UsageError(f"label file has {lab.n} labels, graph has {g.n} vertices")
    if not is_connected(g):
        print("valid: no (graph is disconnected)")
        return EXIT_NO
    diffs = edge_label_differences(g, lab)
    bad = [e for e, c in enumerate(diffs.tolist()) if c in (ALL_ZERO, MANY)]
    if bad:
        u, v = g.edges[bad[0]]
        print(f"valid: no (edge {u}-{v} does not differ in exactly one bit)")
        return EXIT_NO
    try:
        stats = verify(g, lab, EdgeClassPartition.from_coordinates(diffs, lab.dimension), trace=_tracer(args))
    except NotPartialCube as refusal:
        print(f"valid: no ({refusal})")
        return EXIT_NO
    print("valid: yes")
    print(f"dim={lab.dimension}")
    print(f"phase2_steps_per_vertex={stats.steps_per_vertex:.2f}")
    return EXIT_YES


FAMILIES = {
    "hypercube": (gen.hypercube, ["d"], False),
    "path": (gen.path, ["n"], False),
    "cycle": (gen.even_cycle, ["n"], False),
    "star": (gen.star, ["n"], False),
    "complete-bipartite": (gen.complete_bipartite, ["a", "b"], False),
    "tree": (gen.random_tree, ["n"], True),
    "antimatroid": (gen.permutation_antimatroid, ["k", "t"], True),
    "random-connected": (gen.random_connected_graph, ["n", "extra"], True),
}


def parse_params(names, tokens, seed=None):
    values = {}
    positional = []
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if sep:
            values[key] = val
        else:
            positional.append(tok)
    unknown = set(values) - set(names) - {"seed"}
    if unknown:
        raise UsageError(f"unknown parameter(s) {sorted(unknown)}; expected {names}")
    free = [k for k in names if k not in values]
    if len(positional) > len(free):
        raise UsageError(f"too many positional parameters; expected {names}")
    values.update(zip(free, positional))
    missing = [k for k in names if k not in values]
    if missing:
        raise UsageError(f"missing parameter(s) {missing}")
    try:
        out = {k: int(v) for k, v in values.items()}
    except ValueError as exc:
        raise UsageError(f"parameters must be integers: {exc}") from None
    if seed is not None:
        out.setdefault("seed", seed)
    return out


def cmd_generate(args):
    fn, names, seeded = FAMILIES[args.family]
    params = parse_params(names, args.params, args.seed)
    seed = params.pop("seed", None)
    if not seeded and seed is not None and "seed=" in " ".join(args.params):
        raise UsageError(f"family {args.family} takes no seed")
    ordered = [params[k] for k in names]
    g = fn(*ordered, seed) if seeded else fn(*ordered)
    _write_text(fileio.format_edge_list(g), args.out)
    return EXIT_YES


def _parse_sizes(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad size list {text!r}") from None


def _parse_cells(text):
    cells = []
    for item in filter(None, (x.strip() for x in text.split(","))):
        try:
            k, t = item.split(":")
            cells.append((int(k), int(t)))
        except ValueError:
            raise UsageError(f"bad cell {item!r}; expected k:t") from None
    return cells


def cmd_bench(args):
    if args.trees is None and args.antimatroids is None:
        sizes, cells = bench.TREE_SIZES, bench.ANTIMATROID_CELLS
    else:
        sizes = _parse_sizes(args.trees or "")
        cells = _parse_cells(args.antimatroids or "")
    base = args.seed or 0
    seeds = range(base, base + args.seeds)
    rows = bench.antimatroid_rows(cells, seeds, args.word_cap) + bench.tree_rows(sizes, seeds, args.word_cap)
    if args.out is None:
        bench.write_csv(rows, sys.stdout)
    else:
        with open(args.out, "w", newline="") as fh:
            bench.write_csv(rows, fh)
    return EXIT_YES


def cmd_oracle_check(args):
    seed = args.seed or 0
    families = list(crosscheck.family_corpus(args.n_max))
    corpus = [
        *families,
        *crosscheck.tree_corpus(min(args.n_max, 7)),
        *crosscheck.perturbed_corpus(families, seed),
        *crosscheck.random_corpus(args.n_max, args.count, seed),
    ]
    for name, g, problem in crosscheck.run(corpus):
        print(f"disagreement on {name}: {problem}")
        print(fileio.format_edge_list(g), end="")
        return EXIT_NO
    print(f"checked {len(corpus)} graphs, 0 disagreements")
    return EXIT_YES


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, GraphError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
