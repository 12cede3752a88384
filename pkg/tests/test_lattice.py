import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qbrauer import lattice
from qbrauer.lattice import LatticePair, SignedPermutation, WeylGroupBk
from qbrauer.partitions import Partition
from qbrauer.qarith import RootOfUnityContext as C


@st.composite
def signed_perms(draw, k):
    perm = draw(st.permutations(range(k)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=k, max_size=k))
    return SignedPermutation(tuple(perm), tuple(signs))


@given(st.integers(1, 3).flatmap(lambda k: st.tuples(signed_perms(k), signed_perms(k))))
def test_signs_are_characters(pair):
    a, b = pair
    for name in ("epsilon", "epsilon_tilde"):
        assert (a * b).sign(name) == a.sign(name) * b.sign(name)


@given(st.integers(1, 3).flatmap(lambda k: st.tuples(signed_perms(k), signed_perms(k), st.lists(st.integers(-5, 5), min_size=k, max_size=k))))
def test_product_acts_as_composition(data):
    a, b, v = data
    assert (a * b).act(v) == a.act(b.act(v))


def test_twisted_sign_matches_on_type_d():
    g = WeylGroupBk(3)
    assert len(g) == 48
    for w in g:
        if g.is_type_d(w):
            assert w.epsilon_tilde() == w.epsilon()
        else:
            assert w.epsilon_tilde() == -w.epsilon()


def test_lattice_indices():
    assert LatticePair(lattice.lattice("Z", 2, Fraction(1, 7)), lattice.lattice("Z", 2)).index == 49
    assert LatticePair(lattice.lattice("P", 2), lattice.lattice("Q", 2)).index == 4
    assert LatticePair(lattice.lattice("Z", 1), lattice.lattice("Q", 1)).index == 2


def test_coset_representatives_are_centered():
    pair = LatticePair(lattice.lattice("Z", 2, Fraction(1, 5)), lattice.lattice("Z", 2))
    reps = lattice.coset_representatives(pair)
    assert len(reps) == 25
    assert all(Fraction(-1, 2) <= c < Fraction(1, 2) for v in reps for c in v)


@pytest.mark.parametrize(
    "L,M,scale,k,sign",
    [
        ("Z", "Z", Fraction(1, 7), 2, "epsilon"),
        ("Z", "Z", Fraction(1, 9), 1, "epsilon"),
        ("P", "Q", Fraction(1, 8), 2, "epsilon_tilde"),
        ("P", "Q", Fraction(1, 8), 2, "epsilon"),
        ("Z", "Z", Fraction(1, 6), 3, "epsilon_tilde"),
    ],
)
def test_s_matrices_are_unitary(L, M, scale, k, sign):
    s = lattice.s_matrix(LatticePair(lattice.lattice(L, k, scale), lattice.lattice(M, k)), sign)
    assert s.unitarity_defect() < 1e-10
    assert s.matrix.shape[0] > 0


def test_smallest_s_matrix():
    s = lattice.s_matrix(LatticePair(lattice.lattice("Z", 1, Fraction(1, 4)), lattice.lattice("Z", 1)), "epsilon")
    assert s.matrix.shape == (1, 1)
    assert abs(abs(s.matrix[0, 0]) - 1) < 1e-12


eigen = st.lists(st.floats(0.01, 0.99), min_size=1, max_size=4, unique=True).map(
    lambda ts: [complex(math.cos(2 * math.pi * t), math.sin(2 * math.pi * t)) for t in ts]
)


@given(eigen, st.lists(st.integers(1, 4), max_size=4))
@settings(deadline=None)
def test_jacobi_trudi_matches_bialternant(z, rows):
    lam = Partition(sorted(rows, reverse=True)[: len(z)])
    zs = sorted(z, key=lambda c: math.atan2(c.imag, c.real))
    gaps = [abs(a - b) for a, b in itertools.combinations(zs, 2)]
    if gaps and min(gaps) < 0.05:
        return
    a = lattice.schur(lam, z)
    b = lattice.schur_bialternant(lam, z)
    assert abs(a - b) < 1e-7 * max(1.0, abs(b))


@given(st.sampled_from(["SO_odd", "Sp"]), st.lists(st.floats(0.02, 0.48), min_size=2, max_size=3, unique=True), st.data())
@settings(deadline=None)
def test_characters_are_weyl_invariant(family, x, data):
    k = len(x)
    if min(abs(a - b) for a, b in itertools.combinations(x, 2)) < 0.02:
        return
    w = data.draw(signed_perms(k))
    lam = Partition([2, 1][:k])
    a = lattice.weyl_character(family, lam, x)
    b = lattice.weyl_character(family, lam, w.act(x))
    assert abs(a - b) < 1e-6 * max(1.0, abs(a))


@pytest.mark.parametrize(
    "family,k,lam,dim",
    [("SO_odd", 2, [1], 5), ("SO_odd", 1, [2], 5), ("Sp", 2, [1], 4), ("Sp", 2, [1, 1], 5), ("O_even", 2, [1], 4), ("O_even", 2, [2], 9), ("O_even", 2, [1, 1], 6)],
)
def test_characters_near_identity_give_dimensions(family, k, lam, dim):
    # small but generic x; the deviation from the dimension is second order
    x = 2e-3 * np.arange(k, 0, -1) + 3e-4 * np.arange(k)
    assert abs(lattice.weyl_character(family, Partition(lam), x) - dim) < 1e-3 * dim


def test_associated_diagram_character_on_det_minus_one():
    # chi_{lam-dagger} = det * chi_lam
    y = [0.13]
    for lam in ([1], [2], [2, 1]):
        lam = Partition(lam)
        from qbrauer.labels import associated_diagram

        dag = associated_diagram(lam, 4)
        assert abs(lattice.orthogonal_character(4, dag, y, -1) + lattice.orthogonal_character(4, lam, y, -1)) < 1e-12


@pytest.mark.parametrize("N,ell", [(2, 8), (3, 7), (3, 9), (4, 8), (-4, 8), (5, 9), (2, 10), (-2, 7)])
def test_square_sums(N, ell):
    rep = lattice.verify_square_sums(C(N, ell), 1e-9)
    assert rep.passed, rep.as_dict()


def test_square_sum_for_n2_is_half_ell():
    assert abs(lattice.verify_square_sums(C(2, 8)).even_sum - 4) < 1e-12


@pytest.mark.parametrize("k,ell", [(1, 7), (2, 9), (2, 11)])
def test_alcove_sum(k, ell):
    assert lattice.alcove_square_sum_defect(k, ell) < 1e-10
