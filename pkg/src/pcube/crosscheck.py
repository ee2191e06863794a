"""Pipeline-versus-oracle comparison over generated corpora."""

from itertools import combinations

import numpy as np

from . import generators as gen
from .oracle import is_partial_cube_bruteforce, label_bruteforce, same_up_to_symmetry
from .recognize import recognize


def compare(g):
    """Describe how the pipeline and the oracle disagree on ``g``, or None."""
    expected = is_partial_cube_bruteforce(g)
    result = recognize(g)
    if result.is_partial_cube != expected:
        return f"pipeline says {result.is_partial_cube} ({result.reason}), oracle says {expected}"
    if expected and not same_up_to_symmetry(result.labeling, label_bruteforce(g)):
        return "labelings differ beyond coordinate permutation/complement"
    return None


def family_corpus(max_n=12):
    """Every generator family at small sizes."""
    for d in range(0, 5):
        if 1 << d <= max(max_n, 16):
            yield f"hypercube({d})", gen.hypercube(d)
    for n in range(1, max_n + 1):
        yield f"path({n})", gen.path(n)
        yield f"star({n})", gen.star(n)
        if n >= 3:
            yield f"cycle({n})", gen.cycle(n)
    for a in range(1, 4):
        for b in range(a, 5):
            if a + b <= max_n:
                yield f"complete_bipartite({a},{b})", gen.complete_bipartite(a, b)
    for seed in range(5):
        yield f"random_tree({max_n},{seed})", gen.random_tree(max_n, seed)
        yield f"permutation_antimatroid(2,4,{seed})", gen.permutation_antimatroid(2, 4, seed)
        yield f"permutation_antimatroid(3,3,{seed})", gen.permutation_antimatroid(3, 3, seed)


def dyck_words(pairs):
    """All Dyck words with ``pairs`` up-steps, as +1/-1 lists."""
    for ups in combinations(range(2 * pairs), pairs):
        word = [-1] * (2 * pairs)
        for i in ups:
            word[i] = 1
        height = 0
        for step in word:
            height += step
            if height < 0:
                break
        else:
            yield word


def tree_corpus(max_n=7):
    """Every rooted ordered tree up to ``max_n`` nodes, hence every tree shape."""
    for n in range(1, max_n + 1):
        for i, word in enumerate(dyck_words(n - 1)):
            yield f"ordered_tree({n},#{i})", gen.tree_from_dyck(word)


def perturbed_corpus(base, seed=0):
    rng = np.random.default_rng(seed)
    for name, g in base:
        for op in ("delete-edge", "add-edge"):
            if (op == "delete-edge" and g.m == 0) or (op == "add-edge" and g.m == g.n * (g.n - 1) // 2):
                continue
            s = int(rng.integers(2**31))
            yield f"perturb({name},{op},{s})", gen.perturb(g, op, s)


def random_corpus(n_max, count, seed=0):
    rng = np.random.default_rng(seed)
    for i in range(count):
        n = int(rng.integers(1, n_max + 1))
        extra = int(rng.integers(0, n + 1))
        s = int(rng.integers(2**31))
        yield f"random_connected({n},{extra},{s})", gen.random_connected_graph(n, extra, s)


def run(corpus):
    """Yield ``(name, graph, problem)`` for every disagreement."""
    for name, g in corpus:
        problem = compare(g)
        if problem is not None:
            yield name, g, problem
