"""Text formats.

Edge list::

    # comments and blank lines are ignored
    n m
    u v        (m lines, 0-based)

Labels: a ``dim=<d>`` header, then one 0/1 string per vertex with
coordinate 0 as the rightmost character.  Classes: one coordinate index
per edge, in edge order.
"""

from .errors import GraphError
from .graph import Graph
from .labeler import SemicubeLabeling


class FormatError(GraphError):
    pass


def _content_lines(text):
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


def _ints(line, count):
    parts = line.split()
    if len(parts) != count:
        raise FormatError(f"expected {count} integers, got {line!r}")
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise FormatError(f"non-integer field in {line!r}") from None


def parse_edge_list(text):
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty edge list")
    n, m = _ints(lines[0], 2)
    if n < 0 or m < 0:
        raise FormatError("negative header value")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header promises {m} edges, found {len(body)}")
    try:
        return Graph.from_edge_list(n, [_ints(line, 2) for line in body])
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def read_edge_list(path):
    with open(path) as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g):
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g, path):
    with open(path, "w") as fh:
        fh.write(format_edge_list(g))


def format_labels(lab):
    return "".join(f"{line}\n" for line in [f"dim={lab.dimension}", *lab.to_strings()])


def parse_labels(text):
    lines = text.splitlines()
    if not lines or not lines[0].startswith("dim="):
        raise FormatError("label file must start with 'dim=<dimension>'")
    try:
        dim = int(lines[0][4:])
    except ValueError:
        raise FormatError(f"bad header {lines[0]!r}") from None
    rows = [line.strip() for line in lines[1:]]
    for v, row in enumerate(rows):
        if len(row) != dim or set(row) - {"0", "1"}:
            raise FormatError(f"label of vertex {v} is not a {dim}-bit 0/1 string: {row!r}")
    return SemicubeLabeling.from_ints(dim, [int(r, 2) if r else 0 for r in rows])


def read_labels(path):
    with open(path) as fh:
        return parse_labels(fh.read())


def write_labels(lab, path):
    with open(path, "w") as fh:
        fh.write(format_labels(lab))


def format_classes(part):
    return "".join(f"{c}\n" for c in part.edge_coordinates().tolist())


def write_classes(part, path):
    with open(path, "w") as fh:
        fh.write(format_classes(part))


def parse_classes(text):
    return [_ints(line, 1)[0] for line in _content_lines(text)]
