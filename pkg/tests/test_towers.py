import math

import networkx as nx
import pytest

from qbrauer import towers
from qbrauer.partitions import Partition
from qbrauer.qarith import RootOfUnityContext as C


def test_golden_graphs_are_perron_frobenius(golden):
    g = towers.principal_graph(golden)
    assert towers.pf_consistency(g) < 1e-10


def test_index_two_ways(golden):
    assert math.isclose(towers.index_ratio(golden), towers.index_closed_form(golden), rel_tol=1e-10)


def test_stabilization_levels():
    assert towers.stabilize(C(3, 7))[0] <= 6
    assert towers.stabilize(C(4, 8))[0] <= 12
    assert towers.principal_level(C(4, 8), 10) == 12
    assert towers.principal_level(C(3, 9), 10) == 12


def test_three_seven_is_d8():
    g = towers.principal_graph(C(3, 7))
    assert towers.identify_dynkin(g) == "D8"


def test_two_eight_is_a_path():
    # A7 has the same norm as D5; the computed tower gives the path
    g = towers.principal_graph(C(2, 8))
    assert towers.identify_dynkin(g) == "A7"
    assert math.isclose(g.index, 4 * math.cos(math.pi / 8) ** 2)


def test_two_ten_is_not_dynkin():
    g = towers.principal_graph(C(2, 10))
    assert g.index > 4
    assert towers.identify_dynkin(g) is None


@pytest.mark.parametrize("ell", [4, 6, 8, 10, 12])
def test_brauer_labels_of_n2_form_type_d(ell):
    g = towers.brauer_label_graph(C(2, ell))
    assert nx.is_isomorphic(g, towers.dynkin_graph("D", ell // 2 + 1))


def test_three_nine_double_edge():
    g = towers.principal_graph(C(3, 9))
    doubles = [e for e, v in g.edges.items() if v == 2]
    assert doubles == [(Partition([6, 4, 2]), Partition([2]))]
    assert sum(abs(g.a[lam] - 1) < 1e-9 for lam in g.even) == 3


def test_four_eight_orbit_hangs_off_the_adjoint():
    g = towers.inclusion_graph(C(4, 8), 12)
    orbit = {Partition(p) for p in ([4, 3, 3, 2], [5, 3, 2, 2], [5, 4, 2, 1], [4, 4, 3, 1])}
    assert g.neighbours(Partition([1, 1])) == orbit
    assert g.neighbours(Partition([2])) == {Partition(p) for p in ([4, 4, 2, 2], [4, 4, 3, 1], [5, 3, 2, 2])}


def test_four_eight_matches_minus_four_eight():
    assert towers.graphs_isomorphic(towers.principal_graph(C(4, 8)), towers.principal_graph(C(-4, 8)))


def test_local_indices_scale_with_d_squared():
    g = towers.principal_graph(C(3, 7))
    loc = towers.local_indices(g)
    assert math.isclose(loc[Partition()], g.index)


def test_dim_p():
    assert [towers.dim_p(N) for N in (2, 3, 4, 5, -4, -6)] == [2, 5, 9, 14, 5, 14]


def test_asymptotics_settle():
    t = towers.asymptotics_probe(3, range(7, 33, 2))
    assert t.monotone() and t.settling()
    assert abs(t.rows[-1].ratio / t.limit - 1) < 0.05


def test_bratteli_dimensions():
    # untruncated Brauer algebra: (2n-1)!! once N is large
    assert [towers.classical_dimension(8, n) for n in range(1, 5)] == [1, 3, 15, 105]
    d = towers.build_bratteli(C(2, 8), "hecke", 4)
    # N = 2 gives the Temperley-Lieb quotient: Catalan numbers
    assert [d.algebra_dimension(n) for n in range(5)] == [1, 1, 2, 5, 14]


def test_dot_and_json_agree():
    g = towers.principal_graph(C(3, 7))
    data = g.as_json()
    dot = g.to_dot()
    assert dot.count("--") == len(data["edges"])
    assert dot.count("shape=box") == len(data["even"])


def test_dynkin_reference_sizes():
    assert towers.dynkin_graph("D", 5).number_of_edges() == 4
    assert nx.is_isomorphic(towers.dynkin_graph("D", 3), towers.dynkin_graph("A", 3))
    with pytest.raises(ValueError):
        towers.dynkin_graph("E", 6)
