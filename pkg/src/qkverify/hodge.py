"""Eigenstructure of alpha -> *(alpha ^ Phi^{n-2}) on E^1 and invariant
4-forms.

End(R^{4n}) splits orthogonally into so(4n), R Id and traceless
symmetric parts; pushing each through A^1 splits E^1 into A^+, R Phi and
A^-.  The star operator J acts on these with eigenvalue ratios 1,
1/(n-1), -1/(n-1) against the base eigenvalue |Phi|^2 / c_n.  The joint
kernel of the infinitesimal algebra action on Lambda^4 recovers R Phi as
the full invariant subspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rational_linalg import (
    QQ, ZERO, ONE, Matrix, LinearSubspace, kernel, column_space,
)
from .exterior import KForm, Endomorphism, kform_dim, wedge_power
from .engine import (
    StructureContext, qk_context, rho_star_matrix, apply_a1, so_subspace,
    bracket_closed,
)
from . import quaternionic


# ---------------------------------------------------------------------
# the splitting of E^1
# ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def symm0_subspace(N: int) -> LinearSubspace:
    """Traceless symmetric endomorphisms inside End(R^N)."""
    vecs = []
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            vecs.append(Endomorphism(N, {(i, j): 1, (j, i): 1}).coordinates())
    for i in range(2, N + 1):
        vecs.append(Endomorphism(N, {(1, 1): 1, (i, i): -1}).coordinates())
    return LinearSubspace.from_vectors(vecs, N * N)


def _a1_image(ctx: StructureContext, endos: LinearSubspace) -> LinearSubspace:
    """Image of an endomorphism subspace under A^1, in Lambda^4 coords."""
    a1 = ctx.ak(1)
    vecs = []
    for v in endos.basis_vectors():
        e = Endomorphism.from_coordinates(ctx.N, v)
        vecs.append(a1.matvec(e.to_vector_valued_form().sparse_coordinates()))
    return LinearSubspace.from_vectors(vecs, a1.rows)


@dataclass
class E1Splitting:
    n: int
    a_plus: LinearSubspace
    r_phi: LinearSubspace
    a_minus: LinearSubspace

    def total_dim(self) -> int:
        return self.a_plus.dim + self.r_phi.dim + self.a_minus.dim


@lru_cache(maxsize=None)
def split_E1(n: int) -> E1Splitting:
    """A^1 applied to so(4n), R Id, symm_0(4n); stores the computed ranks."""
    if n < 2:
        raise ValueError("the splitting needs n >= 2")
    ctx = qk_context(n)
    N = 4 * n
    a_plus = _a1_image(ctx, so_subspace(N))
    ident_span = LinearSubspace.from_vectors(
        [Endomorphism.identity(N).coordinates()], N * N)
    r_phi = _a1_image(ctx, ident_span)
    a_minus = _a1_image(ctx, symm0_subspace(N))
    return E1Splitting(n, a_plus, r_phi, a_minus)


def euler_identity_check(n: int) -> bool:
    """A^1(Id) = 4 Phi: wedging e^i against iota_{v_i} sums to degree * form."""
    phi = quaternionic.build_phi(n)
    out = apply_a1(qk_context(n).phi, Endomorphism.identity(4 * n))[0]
    return out == phi.scale(QQ(4))


def components_orthogonal(split: E1Splitting) -> bool:
    pairs = ((split.a_plus, split.r_phi),
             (split.a_plus, split.a_minus),
             (split.r_phi, split.a_minus))
    N = 4 * split.n
    for left, right in pairs:
        for u in left.basis_vectors():
            fu = KForm.from_coordinates(N, 4, u)
            for v in right.basis_vectors():
                if fu.inner(KForm.from_coordinates(N, 4, v)) != 0:
                    return False
    return True


# ---------------------------------------------------------------------
# the star operator J
# ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def _phi_power(n: int, m: int) -> KForm:
    return wedge_power(quaternionic.build_phi(n), m)


def j_operator(alpha: KForm, n: int) -> KForm:
    """J(alpha) = *(alpha ^ Phi^{n-2}) on 4-forms of R^{4n}."""
    if n < 2:
        raise ValueError("needs n >= 2")
    if alpha.k != 4 or alpha.N != 4 * n:
        raise ValueError("expected a 4-form on R^{4n}")
    return alpha.wedge(_phi_power(n, n - 2)).hodge()


def j_matrix(n: int) -> Matrix:
    N = 4 * n
    dim = kform_dim(N, 4)
    cols = []
    from .exterior import basis_tuples
    for t in basis_tuples(N, 4):
        cols.append(j_operator(KForm.monomial(N, t), n).sparse_coordinates())
    return Matrix.from_columns(cols, dim)


def base_eigenvalue(n: int):
    """c_n / |Phi|^2, the eigenvalue of J on R Phi.

    Forced by Phi^n = c_n vol and Phi ^ *Phi = |Phi|^2 vol once monomials
    are orthonormal: *Phi^{n-1} = (c_n / |Phi|^2) Phi.  Conventions that
    weight the k-form norm differently quote the reciprocal for the same
    operator; the eigenvalue ratios are convention-free.
    """
    sc = quaternionic.structure_constants(n)
    return sc.c_n / sc.phi_norm2


def verify_j_eigenvalues(n: int) -> dict:
    """(J - lambda I) annihilates each component basis, exact ratios.

    Ratios are 1 on R Phi, 1/(n-1) on A^+, -1/(n-1) on A^-.  At n = 2
    the latter two collide with +/-1, so callers should treat that case
    as observational.
    """
    split = split_E1(n)
    lam0 = base_eigenvalue(n)
    ratios = {"r_phi": QQ(1),
              "a_plus": ONE / QQ(n - 1),
              "a_minus": -ONE / QQ(n - 1)}
    out = {"base_eigenvalue": lam0, "ratios": ratios, "components": {}}
    N = 4 * n
    ok = True
    for name in ("a_plus", "r_phi", "a_minus"):
        comp: LinearSubspace = getattr(split, name)
        lam = lam0 * ratios[name]
        good = True
        for v in comp.basis_vectors():
            alpha = KForm.from_coordinates(N, 4, v)
            if j_operator(alpha, n) != alpha.scale(lam):
                good = False
                break
        out["components"][name] = {"dim": comp.dim, "eigenvalue": lam,
                                   "annihilated": good}
        ok = ok and good
    out["all_annihilated"] = ok
    return out


def j_self_adjoint_check(n: int, samples: int = 20, seed: int = 5) -> bool:
    """<J a, b> = <a, J b> on seeded random rational 4-forms."""
    import random
    rng = random.Random(seed)
    N = 4 * n
    from .exterior import basis_tuples
    tuples = basis_tuples(N, 4)
    for _ in range(samples):
        def rand_form():
            f = KForm(N, 4)
            for t in rng.sample(tuples, 6):
                f.terms[t] = QQ(rng.randint(-9, 9), rng.randint(1, 7))
            return f
        a, b = rand_form(), rand_form()
        if j_operator(a, n).inner(b) != a.inner(j_operator(b, n)):
            return False
    return True


# ---------------------------------------------------------------------
# invariant subspaces
# ---------------------------------------------------------------------


def invariant_subspace(algebra: LinearSubspace, N: int, k: int,
                       check_bracket: bool = True) -> LinearSubspace:
    """Joint kernel of rho_*(A) on Lambda^k over an algebra basis."""
    if check_bracket and not bracket_closed(algebra, N):
        raise ValueError("algebra is not closed under the bracket")
    stacked: Matrix | None = None
    for v in algebra.basis_vectors():
        R = rho_star_matrix(Endomorphism.from_coordinates(N, v), k)
        stacked = R if stacked is None else stacked.stack(R)
    if stacked is None:
        return LinearSubspace.full(kform_dim(N, k))
    return kernel(stacked)


def trivial_summand_crosscheck(n: int) -> dict:
    """Invariant 4-form count against the trivial entries of the table."""
    from . import rep
    algebra = quaternionic.explicit_structure_algebra(n)
    inv = invariant_subspace(algebra, 4 * n, 4, check_bracket=False)
    phi = quaternionic.build_phi(n)
    table_trivials = sum(1 for e in rep.LAMBDA4_TABLE if e == (0, 0, 0))
    inv3 = invariant_subspace(algebra, 4 * n, 3, check_bracket=False)
    table3_trivials = sum(1 for e in rep.LAMBDA3_TABLE if e == (0, 0, 0))
    return {
        "dim_invariant_4": inv.dim,
        "table_trivial_entries_4": table_trivials,
        "contains_phi": inv.contains(phi.sparse_coordinates()),
        "dim_invariant_3": inv3.dim,
        "table_trivial_entries_3": table3_trivials,
        "match": (inv.dim == table_trivials
                  and inv3.dim == table3_trivials),
    }


def a_minus_isotypic_check(n: int) -> dict:
    """Casimir-oracle decomposition of A^-; printed claim is L2_1*S2 + L2_0."""
    from . import rep
    split = split_E1(n)
    dec = rep.casimir_decompose_subspace(split.a_minus, 4, n)
    got = dec.as_dict()
    expected = {"L2_1*S2": rep.weyl_dim(2, 1, n) * 3, "L2_0": rep.weyl_dim(2, 0, n)}
    return {"oracle": got, "expected": expected, "match": got == expected}
