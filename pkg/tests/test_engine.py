import random

import pytest

from qkverify.rational_linalg import (
    QQ, rank, kernel, column_space, subspace_equal,
)
from qkverify.exterior import KForm, VectorValuedForm, Endomorphism
from qkverify import quaternionic
from qkverify import engine
from qkverify.engine import (
    rho_star, rho_star_matrix, StructureForm, StructureContext, qk_context,
    isotropy_algebra, a_map_matrix, so_subspace, symbol_map, exactness_at_1,
    condition_C2_intersection, rotation_basis, lemma_decompose,
    tensor_endomorphism, random_covectors, g2_form, cayley_form,
    volume_structure,
)


def test_rho_star_identity_scales_by_degree():
    for N, k in ((4, 2), (5, 3)):
        ident = Endomorphism.identity(N)
        for t in [(1, 2), (2, 3)] if k == 2 else [(1, 2, 4)]:
            a = KForm.monomial(N, t)
            assert rho_star(ident, a) == a.scale(QQ(-k))


def test_rho_star_is_derivation():
    rng = random.Random(2)
    N = 5
    for _ in range(10):
        e = Endomorphism(N, {(rng.randint(1, N), rng.randint(1, N)):
                             QQ(rng.randint(-4, 4)) for _ in range(5)})
        a = KForm.monomial(N, (1, 3), QQ(rng.randint(1, 5)))
        b = KForm.monomial(N, (2,), QQ(rng.randint(1, 5)))
        lhs = rho_star(e, a.wedge(b))
        rhs = rho_star(e, a).wedge(b) + a.wedge(rho_star(e, b))
        assert lhs == rhs


def test_rho_star_matrix_consistent():
    e = Endomorphism(4, {(1, 2): QQ(3), (3, 3): QQ(-1)})
    m = rho_star_matrix(e, 2)
    a = KForm.monomial(4, (1, 3))
    via_matrix = KForm.from_coordinates(
        4, 2, m.matvec(a.sparse_coordinates()))
    assert via_matrix == rho_star(e, a)


def test_isotropy_matches_explicit_n2():
    ctx = qk_context(2)
    assert ctx.g.dim == 13
    assert subspace_equal(ctx.g, quaternionic.explicit_structure_algebra(2))


def test_isotropy_of_presets():
    assert StructureContext(g2_form()).g.dim == 14
    assert StructureContext(cayley_form()).g.dim == 21
    # volume form: traceless endomorphisms
    assert StructureContext(volume_structure(3)).g.dim == 8


def test_gk_contained_in_kernel_of_ak():
    ctx = qk_context(2)
    for k in (1, 2):
        ak = ctx.ak(k)
        for v in ctx.gk(k).basis_vectors():
            img = ak.matvec(v)
            assert not img


def test_a_map_bijective_n2():
    N = 8
    m = a_map_matrix(N, so_subspace(N))
    assert m.rows == m.cols
    assert rank(m) == m.cols


def test_symbol_composition_vanishes():
    ctx = qk_context(2)
    sb0 = symbol_map(ctx, (1,), 0)
    sb1 = symbol_map(ctx, (1,), 1)
    assert (sb1.matrix * sb0.matrix).is_zero()


def test_exactness_at_1_n2():
    ctx = qk_context(2)
    res = exactness_at_1(ctx, (1,))
    assert res["equal"]
    assert res["dim_im_sb0"] == res["dim_ker_sb1"] == 8


def test_zero_covector_rejected():
    ctx = qk_context(2)
    with pytest.raises(ValueError):
        symbol_map(ctx, {}, 0)


def test_condition_c2():
    n = 2
    N = 4 * n
    g = quaternionic.explicit_structure_algebra(n)
    assert condition_C2_intersection(g, N) == 0
    for kind in (1, 2):
        assert condition_C2_intersection(g, N, rotation_basis(N, kind)) == 0
    # full so(N) has the first-row/column skew slice as witness
    assert condition_C2_intersection(so_subspace(N), N) == N - 1


def test_rotation_bases_are_orthonormal():
    for kind in (1, 2):
        rows = rotation_basis(8, kind)
        for i, a in enumerate(rows):
            for j, b in enumerate(rows):
                dot = sum(x * y for x, y in zip(a, b))
                assert dot == (QQ(1) if i == j else 0)


def test_lemma_decompose_roundtrip_and_precondition():
    ctx = qk_context(2)
    N = 8
    rng = random.Random(9)
    gvecs = ctx.g.basis_vectors()
    for _ in range(5):
        coords = {}
        for v in gvecs:
            c = rng.randint(-3, 3)
            if c:
                for pos, x in v.items():
                    coords[pos] = coords.get(pos, QQ(0)) + c * x
        b0 = Endomorphism.from_coordinates(N, coords)
        u = KForm(N, 1, {(rng.randint(1, N),): QQ(rng.randint(1, 5))})
        w0 = {rng.randint(1, N): QQ(rng.randint(-5, 5), rng.randint(1, 3))}
        a = b0 + tensor_endomorphism(N, u, w0)
        b, w = lemma_decompose(ctx, a, u)
        assert b + tensor_endomorphism(N, u, w) == a
        assert ctx.g.contains(b.coordinates())
    # generic symmetric endomorphism violates u ^ a in g^2
    bad = Endomorphism(N, {(2, 3): QQ(1), (3, 2): QQ(1), (4, 5): QQ(2)})
    with pytest.raises(ValueError):
        lemma_decompose(ctx, bad, KForm.monomial(N, (1,)))


def test_random_covectors_deterministic():
    a = random_covectors(12, 4, seed=7)
    b = random_covectors(12, 4, seed=7)
    assert a == b
    assert all(not f.is_zero() for f in a)


def test_structure_form_json_roundtrip():
    phi = qk_context(2).phi
    back = StructureForm.from_json_dict(phi.to_json_dict())
    assert back.pieces[0] == phi.pieces[0]


def test_projection_splits_vector():
    ctx = qk_context(2)
    rng = random.Random(1)
    from qkverify.exterior import vvf_dim
    dim = vvf_dim(8, 2)
    vec = {rng.randrange(dim): QQ(rng.randint(-5, 5), rng.randint(1, 3))
           for _ in range(10)}
    pg = ctx.project_gk(2, vec)
    pp = ctx.project_pk(2, vec)
    total = dict(pg)
    for i, v in pp.items():
        total[i] = total.get(i, QQ(0)) + v
    total = {i: v for i, v in total.items() if v != 0}
    assert total == {i: v for i, v in vec.items() if v != 0}
    assert ctx.gk(2).contains(pg)
    # P^2 part is orthogonal to every g^2 basis vector
    for row in ctx.gk(2).basis_vectors():
        dot = sum(row.get(i, QQ(0)) * v for i, v in pp.items())
        assert dot == 0
