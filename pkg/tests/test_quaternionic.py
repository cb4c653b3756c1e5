import pytest

from qkverify.rational_linalg import QQ, rank, subspace_equal
from qkverify.exterior import KForm, Endomorphism
from qkverify import quaternionic as q


@pytest.mark.parametrize("n", [1, 2, 3])
def test_quaternion_relations(n):
    t = q.build_triple(n)
    N = t.N
    minus_id = Endomorphism.identity(N).scale(QQ(-1))
    assert t.I.compose(t.I) == minus_id
    assert t.J.compose(t.J) == minus_id
    assert t.K.compose(t.K) == minus_id
    assert t.I.compose(t.J) == t.K
    assert t.J.compose(t.K) == t.I
    assert t.K.compose(t.I) == t.J
    assert t.J.compose(t.I) == t.K.scale(QQ(-1))


def test_kaehler_forms_n1():
    wI, wJ, wK = q.kaehler_forms(1)
    assert wI == KForm(4, 2, {(1, 2): QQ(1), (3, 4): QQ(1)})
    assert wJ == KForm(4, 2, {(1, 3): QQ(1), (2, 4): QQ(-1)})
    assert wK == KForm(4, 2, {(1, 4): QQ(1), (2, 3): QQ(1)})


def test_phi_n1_is_6_vol():
    phi = q.build_phi(1)
    assert phi == KForm(4, 4, {(1, 2, 3, 4): QQ(6)})


def test_two_form_requires_skew():
    with pytest.raises(ValueError):
        q.two_form_of(Endomorphism(2, {(1, 1): QQ(1)}))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_algebra_dimension(n):
    alg = q.explicit_structure_algebra(n)
    assert alg.dim == 2 * n * n + n + 3
    assert q.sp_n_part(n).dim == n * (2 * n + 1)
    # sp(1) meets sp(n) trivially
    assert q.sp_n_part(n).intersection(q.sp_1_part(n)).dim == 0


def test_algebra_contains_ijk_and_is_skew():
    n = 2
    t = q.build_triple(n)
    alg = q.explicit_structure_algebra(n)
    for e in (t.I, t.J, t.K):
        assert alg.contains(e.coordinates())
    for v in alg.basis_vectors():
        assert Endomorphism.from_coordinates(4 * n, v).is_skew()


def test_structure_constants():
    sc1 = q.structure_constants(1)
    assert sc1.c_n == QQ(6)
    assert sc1.phi_norm2 == QQ(36)
    sc3 = q.structure_constants(3)
    assert sc3.c_n == QQ(5040)
    assert sc3.phi_norm2 == QQ(252)
