import pytest

from kneser_lab.dihedral import DihedralElement, rho, rotation
from kneser_lab.dimacs import dimacs_dumps, dimacs_loads, read_dimacs, write_dimacs
from kneser_lab.families import kneser, stable_kneser
from kneser_lab.graphs import GraphError, cycle_graph, make_graph
from kneser_lab.labels import CyclicElem, KSubset, format_label, parse_label


def test_ksubset_validation():
    KSubset((1, 4), 6)
    with pytest.raises(ValueError):
        KSubset((4, 1), 6)
    with pytest.raises(ValueError):
        KSubset((0, 3), 6)
    with pytest.raises(ValueError):
        KSubset((2, 7), 6)
    with pytest.raises(ValueError):
        KSubset((), 6)


def test_ksubset_gaps_sum_to_ambient():
    v = KSubset((1, 4, 6), 9)
    assert v.gaps() == (3, 2, 4)
    assert sum(v.gaps()) == 9


def test_ksubset_ordering_is_lexicographic():
    a = KSubset((1, 3), 6)
    b = KSubset((1, 4), 6)
    c = KSubset((2, 4), 6)
    assert sorted([c, b, a]) == [a, b, c]


def test_cyclic_elem_validation():
    CyclicElem(0, 5)
    with pytest.raises(ValueError):
        CyclicElem(5, 5)
    with pytest.raises(ValueError):
        CyclicElem(-1, 5)


@pytest.mark.parametrize(
    "label",
    [
        KSubset((1, 4), 6),
        CyclicElem(3, 8),
        rotation(2, 6),
        rho(1, 7),
        DihedralElement("d", 2, 8),
        (KSubset((2, 5), 7), CyclicElem(0, 4)),
        ((1, 2), (CyclicElem(1, 3), 4)),
        17,
    ],
)
def test_label_text_round_trip(label):
    assert parse_label(format_label(label)) == label


def test_dimacs_round_trip_plain():
    g = cycle_graph(6)
    assert dimacs_loads(dimacs_dumps(g)) == g


def test_dimacs_round_trip_with_labels():
    g = stable_kneser(6, 2, 2)
    text = dimacs_dumps(g)
    assert "c label 1 {1,3}@6" in text.splitlines()
    assert f"p edge {g.order} {g.edge_count}" in text.splitlines()
    assert dimacs_loads(text) == g


def test_dimacs_file_round_trip(tmp_path):
    g = kneser(5, 2)
    path = tmp_path / "petersen.dimacs"
    write_dimacs(g, path)
    assert read_dimacs(path) == g


def test_dimacs_rejects_garbage():
    with pytest.raises(GraphError):
        dimacs_loads("e 1 2\n")
    with pytest.raises(GraphError):
        dimacs_loads("p vertex 3 0\n")
    with pytest.raises(GraphError):
        dimacs_loads("c nothing here\n")


def test_dimacs_rejects_partial_labels():
    g = make_graph(3, [(0, 1)], labels=[10, 11, 12])
    lines = dimacs_dumps(g).splitlines()
    del lines[1]
    with pytest.raises(GraphError):
        dimacs_loads("\n".join(lines))


def test_dimacs_one_based_endpoints():
    text = dimacs_dumps(make_graph(2, [(0, 1)]))
    assert "e 1 2" in text.splitlines()
