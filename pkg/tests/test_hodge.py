import pytest

from qkverify.rational_linalg import QQ, rational_str
from qkverify.exterior import KForm
from qkverify import hodge, quaternionic
from qkverify.engine import so_subspace


def test_symm0_dimension():
    assert hodge.symm0_subspace(8).dim == 8 * 9 // 2 - 1


def test_euler_identity():
    for n in (1, 2, 3):
        assert hodge.euler_identity_check(n)


def test_split_dims_n3():
    s = hodge.split_E1(3)
    assert (s.a_plus.dim, s.r_phi.dim, s.a_minus.dim) == (42, 1, 77)
    assert s.total_dim() == 120


def test_split_components_orthogonal_n2():
    s = hodge.split_E1(2)
    assert hodge.components_orthogonal(s)


def test_j_operator_on_phi():
    phi = quaternionic.build_phi(3)
    lam = hodge.base_eigenvalue(3)
    assert lam == QQ(20)
    assert hodge.j_operator(phi, 3) == phi.scale(lam)


def test_j_rejects_wrong_degree():
    with pytest.raises(ValueError):
        hodge.j_operator(KForm.monomial(12, (1, 2)), 3)


def test_j_eigenvalues_n3():
    v = hodge.verify_j_eigenvalues(3)
    assert v["all_annihilated"]
    lam0 = v["base_eigenvalue"]
    assert v["components"]["a_plus"]["eigenvalue"] == lam0 / 2
    assert v["components"]["a_minus"]["eigenvalue"] == -lam0 / 2


def test_j_self_adjoint():
    assert hodge.j_self_adjoint_check(3, samples=10, seed=3)


def test_invariant_subspace_n2():
    alg = quaternionic.explicit_structure_algebra(2)
    inv = hodge.invariant_subspace(alg, 8, 4, check_bracket=True)
    assert inv.dim == 1
    assert inv.contains(quaternionic.build_phi(2).sparse_coordinates())
    assert hodge.invariant_subspace(alg, 8, 1, check_bracket=False).dim == 0
    assert hodge.invariant_subspace(so_subspace(8), 8, 4,
                                    check_bracket=False).dim == 0


def test_trivial_summand_crosscheck_n3():
    tc = hodge.trivial_summand_crosscheck(3)
    assert tc["match"]
    assert tc["contains_phi"]


def test_a_minus_isotypic_n3():
    assert hodge.a_minus_isotypic_check(3)["match"]
