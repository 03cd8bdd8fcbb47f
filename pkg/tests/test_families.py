import pytest

from helpers import stable_subsets_by_gaps
from kneser_lab.dihedral import delta, rho, rotation
from kneser_lab.families import (
    cayley_dihedral,
    circulant,
    circular_graph,
    cycle_power,
    embed_circular_in_kneser,
    enumerate_stable_subsets,
    is_s_stable,
    kneser,
    parse_family_spec,
    prop_iso_images,
    prop_iso_map,
    stable_kneser,
)
from kneser_lab.graphs import (
    audit_graph,
    complement,
    complete_graph,
    connected_components,
    cycle_graph,
    graph_power,
)
from kneser_lab.isomorphism import are_isomorphic, verify_isomorphism
from kneser_lab.labels import KSubset


def test_is_s_stable_examples():
    assert is_s_stable(KSubset((1, 4), 6), 2)
    assert not is_s_stable(KSubset((1, 2), 6), 2)
    # 1 and n count as consecutive
    assert not is_s_stable(KSubset((1, 6), 6), 2)


def test_enumerate_stable_subsets_7_2_3():
    got = enumerate_stable_subsets(7, 2, 3)
    assert len(got) == 7
    expected = {(1, 4), (2, 5), (3, 6), (4, 7), (1, 5), (2, 6), (3, 7)}
    assert {v.elements for v in got} == expected
    # lexicographic order is the canonical vertex indexing
    assert [v.elements for v in got] == sorted(v.elements for v in got)


@pytest.mark.parametrize("n,k,s,count", [(6, 2, 2, 9), (8, 2, 3, 12), (7, 2, 3, 7)])
def test_enumerate_stable_subsets_counts(n, k, s, count):
    got = enumerate_stable_subsets(n, k, s)
    assert len(got) == count
    assert {v.elements for v in got} == stable_subsets_by_gaps(n, k, s)


def test_enumerate_stable_subsets_oracle_grid():
    for n, k, s in ((9, 2, 3), (10, 3, 3), (12, 3, 2), (13, 4, 3)):
        got = enumerate_stable_subsets(n, k, s)
        assert {v.elements for v in got} == stable_subsets_by_gaps(n, k, s)


def test_kneser_petersen():
    p = kneser(5, 2)
    assert p.order == 10 and p.edge_count == 15
    assert all(p.degree(u) == 3 for u in range(10))
    audit_graph(p)


def test_kneser_perfect_matching():
    g = kneser(4, 2)
    assert g.order == 6 and g.edge_count == 3
    assert all(g.degree(u) == 1 for u in range(6))


def test_kneser_rejects_small_n():
    with pytest.raises(ValueError):
        kneser(3, 2)


def test_stable_kneser_orders():
    assert stable_kneser(7, 2, 3).order == 7
    assert stable_kneser(6, 2, 2).order == 9
    assert stable_kneser(8, 2, 3).order == 12
    with pytest.raises(ValueError):
        stable_kneser(5, 2, 3)
    with pytest.raises(ValueError):
        stable_kneser(8, 2, 1)


def test_stable_kneser_is_induced_in_kneser():
    big = kneser(8, 2)
    sub = stable_kneser(8, 2, 3)
    big_index = big.label_index()
    for i, u in enumerate(sub.labels):
        for j, v in enumerate(sub.labels):
            assert sub.has_edge(i, j) == big.has_edge(big_index[u], big_index[v])


def test_circular_graph_c5():
    g = circular_graph(5, 2)
    assert are_isomorphic(g, cycle_graph(5)) is not None


def test_circular_graph_complete_when_k1():
    assert circular_graph(4, 1).adj == complete_graph(4).adj


def test_circular_rejects_small_n():
    with pytest.raises(ValueError):
        circular_graph(3, 2)


def test_cycle_power_matches_bfs_power():
    cp = cycle_power(8, 2)
    assert cp.adj == graph_power(cycle_graph(8), 2).adj
    assert all(cp.degree(u) == 4 for u in range(8))
    assert cycle_power(6, 1).adj == cycle_graph(6).adj


def test_cycle_power_complement_is_circular():
    assert complement(cycle_power(7, 1)) == circular_graph(7, 2)


def test_cycle_power_rejects_small_n():
    with pytest.raises(ValueError):
        cycle_power(3, 2)


def test_circulant_basics():
    assert circulant(6, {1, 5}).adj == cycle_graph(6).adj
    assert circulant(8, {1, 2, 6, 7}).adj == cycle_power(8, 2).adj


def test_circulant_validation():
    with pytest.raises(ValueError):
        circulant(8, {1, 2})  # not closed under negation
    with pytest.raises(ValueError):
        circulant(8, {0, 1, 7})


def test_circulant_rotation_is_automorphism():
    for n, conn in ((8, {1, 2, 6, 7}), (7, {2, 3, 4, 5}), (9, {1, 8})):
        g = circulant(n, conn)
        perm = [(v + 1) % n for v in range(n)]
        for u in range(n):
            for v in range(n):
                if u != v:
                    assert g.has_edge(u, v) == g.has_edge(perm[u], perm[v])


def test_cayley_dihedral_two_hexagons():
    g = cayley_dihedral(6, {rotation(1, 6), rotation(5, 6)})
    assert g.order == 12 and g.edge_count == 12
    comps = connected_components(g)
    assert [len(c) for c in comps] == [6, 6]
    assert all(g.degree(u) == 2 for u in range(12))


def test_cayley_dihedral_two_cycle_squares():
    gens = {rotation(i, 8) for i in (1, 2, 6, 7)}
    g = cayley_dihedral(8, gens)
    two = cycle_power(8, 2)
    from kneser_lab.graphs import disjoint_union

    assert are_isomorphic(g, disjoint_union(two, two)) is not None


def test_cayley_degree_is_generator_count():
    gens = {rho(1, 8), rho(2, 8), delta(1, 8)}
    g = cayley_dihedral(8, gens)
    assert all(g.degree(u) == 3 for u in range(16))


def test_cayley_validation():
    with pytest.raises(ValueError):
        cayley_dihedral(6, {rotation(0, 6)})
    with pytest.raises(ValueError):
        cayley_dihedral(6, {rotation(1, 6)})  # inverse missing
    with pytest.raises(ValueError):
        cayley_dihedral(6, set())


def test_prop_iso_images_examples():
    phi = prop_iso_images(2, 2)
    assert phi[0] == KSubset((1, 3), 5)
    assert phi[1] == KSubset((1, 4), 5)
    assert phi[4] == KSubset((3, 5), 5)
    assert prop_iso_images(2, 3)[3] == KSubset((2, 6), 7)


def test_prop_iso_map_is_bijection_and_checked():
    for k, s in ((2, 2), (2, 3), (3, 2), (4, 2), (2, 4)):
        mapping = prop_iso_map(k, s)
        assert sorted(mapping) == list(range(k * s + 1))
        assert verify_isomorphism(
            circular_graph(k * s + 1, k), stable_kneser(k * s + 1, k, s), mapping
        )


def test_embed_circular_in_kneser():
    mapping = embed_circular_in_kneser(5, 2)
    big = kneser(5, 2)
    assert big.labels[mapping[0]] == KSubset((1, 2), 5)
    assert big.labels[mapping[4]] == KSubset((1, 5), 5)
    assert len(set(embed_circular_in_kneser(7, 3))) == 7


def test_embed_image_induces_circular():
    mapping = embed_circular_in_kneser(7, 3)
    big = kneser(7, 3)
    src = circular_graph(7, 3)
    for u in range(7):
        for v in range(u + 1, 7):
            assert src.has_edge(u, v) == big.has_edge(mapping[u], mapping[v])


def test_family_spec_round_trip():
    texts = [
        "kneser:n=5,k=2",
        "stable:n=8,k=2,s=3",
        "circular:n=7,k=2",
        "cyclepow:n=8,a=2",
        "circulant:n=8,conn=1,2,6,7",
        "caydih:n=8,gens=r1,r7",
    ]
    for text in texts:
        spec = parse_family_spec(text)
        assert spec.text == text
        g = spec.build()
        assert g.order > 0
        audit_graph(g)


def test_family_spec_build_values():
    assert parse_family_spec("caydih:n=6,gens=r1,r5").build().order == 12
    assert parse_family_spec("circulant:n=8,conn=1,2,6,7").build().adj == cycle_power(8, 2).adj


def test_family_spec_errors():
    for bad in (
        "nope:n=4",
        "kneser:n=5",
        "kneser:",
        "stable:n=8,k=2",
        "kneser:n=5,k=2,s=3",
        "circulant:n=8",
        "kneser:k=2,9",
    ):
        with pytest.raises(ValueError):
            parse_family_spec(bad)


def test_gap_structure_tight_family():
    for k in (2, 3, 4):
        for s in (2, 3, 4):
            g = stable_kneser(k * s + 1, k, s)
            want = sorted([s] * (k - 1) + [s + 1])
            assert all(sorted(v.gaps()) == want for v in g.labels)


def test_vertex_count_tight_family():
    for k in (2, 3, 4, 5):
        for s in (2, 3, 4, 5):
            assert stable_kneser(k * s + 1, k, s).order == k * s + 1
