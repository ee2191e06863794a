import pytest

from pcube import fileio
from pcube import generators as gen
from pcube.labeler import SemicubeLabeling, label_all


def test_edge_list_roundtrip(tmp_path):
    g = gen.permutation_antimatroid(2, 6, 4)
    path = tmp_path / "g.txt"
    fileio.write_edge_list(g, path)
    h = fileio.read_edge_list(path)
    assert (h.n, h.edges) == (g.n, g.edges)


def test_comments_and_blank_lines():
    g = fileio.parse_edge_list("# square\n\n4 4\n0 1\n1 2\n# mid\n2 3\n3 0\n")
    assert (g.n, g.m) == (4, 4)


@pytest.mark.parametrize("text", [
    "", "garbage", "3 2\n0 1\n", "3 1\n0 x\n", "3 1\n0 5\n", "2 1\n1 1\n", "-1 0\n", "3 1 4\n0 1\n",
])
def test_malformed_edge_lists(text):
    with pytest.raises(fileio.FormatError):
        fileio.parse_edge_list(text)


def test_labels_roundtrip(tmp_path):
    lab, _ = label_all(gen.hypercube(3))
    path = tmp_path / "q.labels"
    fileio.write_labels(lab, path)
    text = path.read_text()
    assert text.startswith("dim=3\n")
    back = fileio.read_labels(path)
    assert back.as_ints() == lab.as_ints() and back.dimension == 3


def test_label_convention_rightmost_is_coordinate_zero():
    lab = fileio.parse_labels("dim=3\n001\n100\n")
    assert lab.bit(0, 0) == 1 and lab.bit(1, 2) == 1


def test_zero_dimension_labels():
    lab = SemicubeLabeling.from_ints(0, [0])
    assert fileio.parse_labels(fileio.format_labels(lab)).n == 1


@pytest.mark.parametrize("text", ["", "3\n001\n", "dim=x\n", "dim=2\n001\n", "dim=2\n0a\n"])
def test_malformed_labels(text):
    with pytest.raises(fileio.FormatError):
        fileio.parse_labels(text)


def test_classes_roundtrip():
    g = gen.path(4)
    _, part = label_all(g)
    assert fileio.parse_classes(fileio.format_classes(part)) == part.edge_coordinates().tolist()
