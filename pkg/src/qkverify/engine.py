"""Generic stabilizer-form machinery on V = R^N.

Given a structure form (a list of pieces of fixed degrees) this module
computes the infinitesimal action rho_*, the isotropy algebra, the wedge
map a: V* (x) End(V) -> Lambda^2 (x) V, the subspaces g^k and their
orthogonal complements P^k, the maps A^k and their images E^k, the
conditions (C1)/(C2), the symbol maps Sb_k(u) and the exactness check at
k = 1.

Everything is generic over the form; the quaternionic case enters only
through qk_context(n).  G2 / Spin(7) / volume-form presets are provided
as cross-validation fixtures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .rational_linalg import (
    QQ, ZERO, ONE, Matrix, LinearSubspace, kernel, column_space,
    orthogonal_complement, subspace_equal, solve,
)
from .exterior import (
    KForm, VectorValuedForm, Endomorphism,
    basis_tuples, kform_dim, vvf_dim,
)
from . import quaternionic


# ---------------------------------------------------------------------
# infinitesimal action
# ---------------------------------------------------------------------


def rho_star(a: Endomorphism, alpha: KForm) -> KForm:
    """Derivation action: (rho_*(A) alpha)(x_1..x_k) = -sum_s alpha(.., A x_s, ..).

    On basis covectors rho_*(A) v^i = -sum_j A_j^i v^j, extended as a
    degree-0 derivation of the exterior algebra.
    """
    if a.N != alpha.N:
        raise ValueError("ambient mismatch")
    # group entries by upper index: repl[i] = [(j, A_j^i), ...]
    repl: dict = {}
    for (j, i), v in a.entries.items():
        repl.setdefault(i, []).append((j, v))
    acc: dict = {}
    for t, c in alpha.terms.items():
        for pos, idx in enumerate(t):
            for j, v in repl.get(idx, ()):
                if j == idx:
                    nt, sign = t, 1
                elif j in t:
                    continue
                else:
                    rest = t[:pos] + t[pos + 1:]
                    p2 = 0
                    while p2 < len(rest) and rest[p2] < j:
                        p2 += 1
                    nt = rest[:p2] + (j,) + rest[p2:]
                    sign = -1 if (pos + p2) % 2 else 1
                w = acc.get(nt, ZERO) - sign * v * c
                if w == 0:
                    acc.pop(nt, None)
                else:
                    acc[nt] = w
    out = KForm(alpha.N, alpha.k)
    out.terms = acc
    return out


def rho_star_matrix(a: Endomorphism, k: int) -> Matrix:
    """Matrix of rho_*(a) on Lambda^k in the lexicographic monomial basis."""
    N = a.N
    cols = []
    for t in basis_tuples(N, k):
        cols.append(rho_star(a, KForm.monomial(N, t)).sparse_coordinates())
    return Matrix.from_columns(cols, kform_dim(N, k))


# ---------------------------------------------------------------------
# structure forms
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class StructureForm:
    N: int
    pieces: tuple

    def __post_init__(self):
        if not self.pieces or all(p.is_zero() for p in self.pieces):
            raise ValueError("structure form needs a nonzero piece")
        for p in self.pieces:
            if p.N != self.N:
                raise ValueError("piece ambient mismatch")

    @classmethod
    def single(cls, form: KForm) -> "StructureForm":
        return cls(form.N, (form,))

    def degrees(self) -> tuple[int, ...]:
        return tuple(p.k for p in self.pieces)

    def codomain_dim(self, k: int) -> int:
        """Dimension of (+)_i Lambda^{p_i + k - 1}."""
        return sum(kform_dim(self.N, p.k + k - 1) for p in self.pieces)

    def to_json_dict(self) -> dict:
        return {"pieces": [p.to_json_dict() for p in self.pieces]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "StructureForm":
        pieces = tuple(KForm.from_json_dict(p) for p in d["pieces"])
        return cls(pieces[0].N, pieces)


def isotropy_algebra(phi: StructureForm) -> LinearSubspace:
    """Kernel of A -> rho_*(A) Phi over End(V)."""
    N = phi.N
    offsets = []
    off = 0
    for p in phi.pieces:
        offsets.append(off)
        off += kform_dim(N, p.k)
    cols = []
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            E = Endomorphism(N, {(i, j): 1})
            col: dict = {}
            for p, o in zip(phi.pieces, offsets):
                img = rho_star(E, p)
                for pos, v in img.sparse_coordinates().items():
                    col[o + pos] = v
            cols.append(col)
    return kernel(Matrix.from_columns(cols, off))


def bracket_closed(g: LinearSubspace, N: int) -> bool:
    basis = [Endomorphism.from_coordinates(N, v) for v in g.basis_vectors()]
    for i, a in enumerate(basis):
        for b in basis[i + 1:]:
            if not g.contains(a.bracket(b).coordinates()):
                return False
    return True


# ---------------------------------------------------------------------
# the a-map and g^k / P^k
# ---------------------------------------------------------------------


def a_map_matrix(N: int, g: LinearSubspace) -> Matrix:
    """Matrix of a(u^c (x) b) = (u^c ^ b^j) (x) v_j on V* (x) g.

    Columns are indexed (c, basis element of g), c major; rows are
    Lambda^2 (x) V coordinates.
    """
    rows_dim = vvf_dim(N, 2)
    cols = []
    basis = [Endomorphism.from_coordinates(N, v) for v in g.basis_vectors()]
    for c in range(1, N + 1):
        u = KForm.monomial(N, (c,))
        for b in basis:
            vvf = b.to_vector_valued_form()
            w = VectorValuedForm(N, 2, [u.wedge(comp) for comp in vvf.components])
            cols.append(w.sparse_coordinates())
    return Matrix.from_columns(cols, rows_dim)


@lru_cache(maxsize=None)
def so_subspace(N: int) -> LinearSubspace:
    vecs = []
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            vecs.append(Endomorphism(N, {(i, j): 1, (j, i): -1}).coordinates())
    return LinearSubspace.from_vectors(vecs, N * N)


def gk_subspace(g: LinearSubspace, N: int, k: int) -> LinearSubspace:
    """g^k in Lambda^k (x) V: wedges of (k-1)-forms with g, g^1 = g, g^0 = 0."""
    if k < 0:
        raise ValueError("negative degree")
    if k == 0:
        return LinearSubspace(vvf_dim(N, 0))
    if k == 1:
        # identify End(V) coordinates with Lambda^1 (x) V coordinates
        vecs = []
        for v in g.basis_vectors():
            e = Endomorphism.from_coordinates(N, v)
            vecs.append(e.to_vector_valued_form().sparse_coordinates())
        return LinearSubspace.from_vectors(vecs, vvf_dim(N, 1))
    basis = [Endomorphism.from_coordinates(N, v) for v in g.basis_vectors()]
    vecs = []
    for t in basis_tuples(N, k - 1):
        alpha = KForm.monomial(N, t)
        for b in basis:
            comps = [alpha.wedge(c) for c in b.to_vector_valued_form().components]
            vecs.append(VectorValuedForm(N, k, comps).sparse_coordinates())
    return LinearSubspace.from_vectors(vecs, vvf_dim(N, k))


# ---------------------------------------------------------------------
# A^k maps
# ---------------------------------------------------------------------


def ak_matrix(phi: StructureForm, k: int) -> Matrix:
    """Matrix of A^k(omega (x) v) = omega ^ iota_v Phi on Lambda^k (x) V.

    Columns follow VectorValuedForm coordinates (component-major); rows
    stack the pieces' codomains Lambda^{p_i + k - 1}.
    """
    N = phi.N
    iotas = []  # iota_{v_j} applied to each piece
    for j in range(1, N + 1):
        iotas.append([p.interior(j) for p in phi.pieces])
    out_dims = [kform_dim(N, p.k + k - 1) for p in phi.pieces]
    offsets = [sum(out_dims[:i]) for i in range(len(out_dims))]
    cols = []
    monomials = [KForm.monomial(N, t) for t in basis_tuples(N, k)]
    for j in range(1, N + 1):
        for omega in monomials:
            col: dict = {}
            for piece_idx, ip in enumerate(iotas[j - 1]):
                w = omega.wedge(ip)
                if w.k > N:
                    continue
                for pos, v in w.sparse_coordinates().items():
                    col[offsets[piece_idx] + pos] = v
            cols.append(col)
    return Matrix.from_columns(cols, sum(out_dims))


def apply_a1(phi: StructureForm, a: Endomorphism) -> list[KForm]:
    """A^1(a) = sum_{i,j} a_i^j v^i ^ iota_{v_j} Phi, one KForm per piece."""
    N = phi.N
    out = [KForm.zero(N, p.k) for p in phi.pieces]
    for (i, j), v in a.entries.items():
        u = KForm.monomial(N, (i,), v)
        for idx, p in enumerate(phi.pieces):
            out[idx] = out[idx] + u.wedge(p.interior(j))
    return out


# ---------------------------------------------------------------------
# context: all derived data for one structure form, computed lazily
# ---------------------------------------------------------------------


class StructureContext:
    """Caches the expensive per-form artifacts (g, g^k, P^k, A^k, E^k)."""

    def __init__(self, phi: StructureForm, algebra: LinearSubspace | None = None):
        self.phi = phi
        self.N = phi.N
        self._g = algebra
        self._gk: dict[int, LinearSubspace] = {}
        self._pk: dict[int, LinearSubspace] = {}
        self._ak: dict[int, Matrix] = {}
        self._ek: dict[int, LinearSubspace] = {}
        self._proj_gk: dict[int, Matrix] = {}

    @property
    def g(self) -> LinearSubspace:
        if self._g is None:
            self._g = isotropy_algebra(self.phi)
        return self._g

    def gk(self, k: int) -> LinearSubspace:
        if k not in self._gk:
            self._gk[k] = gk_subspace(self.g, self.N, k)
        return self._gk[k]

    def pk(self, k: int) -> LinearSubspace:
        if k not in self._pk:
            self._pk[k] = orthogonal_complement(self.gk(k))
        return self._pk[k]

    def ak(self, k: int) -> Matrix:
        if k not in self._ak:
            self._ak[k] = ak_matrix(self.phi, k)
        return self._ak[k]

    def ek(self, k: int) -> LinearSubspace:
        if k not in self._ek:
            self._ek[k] = column_space(self.ak(k))
        return self._ek[k]

    # orthogonal projection onto g^k: pr(x) = B^t (B B^t)^{-1} B x
    def project_gk(self, k: int, vec: dict) -> dict:
        B = self.gk(k).basis
        if B.rows == 0:
            return {}
        key = k
        if key not in self._proj_gk:
            self._proj_gk[key] = B * B.transpose()
        gram = self._proj_gk[key]
        bx = B.matvec(vec)
        rhs = Matrix(B.rows, 1)
        for i, v in bx.items():
            rhs.entries[(i, 0)] = v
        y = solve(gram, rhs)
        return B.transpose().matvec(y.column(0))

    def project_pk(self, k: int, vec: dict) -> dict:
        pg = self.project_gk(k, vec)
        out = dict(vec)
        for i, v in pg.items():
            w = out.get(i, ZERO) - v
            if w == 0:
                out.pop(i, None)
            else:
                out[i] = w
        return out


@lru_cache(maxsize=None)
def qk_context(n: int) -> StructureContext:
    phi = StructureForm.single(quaternionic.build_phi(n))
    return StructureContext(phi)


# ---------------------------------------------------------------------
# E^k versus P^k
# ---------------------------------------------------------------------


def ek_dimension_formula(n: int) -> int:
    """Predicted dim E^2 = 24n^3 - 12n^2 - 12n for the quaternionic form."""
    return 24 * n ** 3 - 12 * n ** 2 - 12 * n


def ak_restricted_matrix(ctx: StructureContext, k: int) -> Matrix:
    """A^k composed with the inclusion of P^k (columns = P^k basis)."""
    ak = ctx.ak(k)
    return ak * ctx.pk(k).basis.transpose()


def restricted_ak_iso_check(ctx: StructureContext, k: int) -> dict:
    """Does A^k map P^k isomorphically onto E^k?  Returns the evidence."""
    m = ak_restricted_matrix(ctx, k)
    img = column_space(m)
    pk_dim = ctx.pk(k).dim
    ek = ctx.ek(k)
    return {
        "dim_pk": pk_dim,
        "dim_ek": ek.dim,
        "rank_restricted": img.dim,
        "injective": img.dim == pk_dim,
        "image_is_ek": subspace_equal(img, ek),
    }


# ---------------------------------------------------------------------
# symbol maps and exactness
# ---------------------------------------------------------------------


@dataclass
class SymbolMap:
    u: KForm           # nonzero covector (1-form)
    k: int
    matrix: Matrix     # P^k coordinates -> P^{k+1} coordinates


def _covector_form(N: int, u) -> KForm:
    if isinstance(u, KForm):
        if u.k != 1:
            raise ValueError("covector must be a 1-form")
        return u
    if isinstance(u, dict):
        return KForm(N, 1, {(i,): c for i, c in u.items()})
    return KForm(N, 1, {(i + 1,): c for i, c in enumerate(u) if c != 0})


def symbol_map(ctx: StructureContext, u, k: int) -> SymbolMap:
    """Sb_k(u): X -> pr_{P^{k+1}}(u ^ X), restricted to P^k."""
    N = ctx.N
    uf = _covector_form(N, u)
    if uf.is_zero():
        raise ValueError("covector must be nonzero")
    pk = ctx.pk(k)
    pk1 = ctx.pk(k + 1)
    cols = []
    for vec in pk.basis_vectors():
        X = VectorValuedForm.from_coordinates(N, k, vec)
        wX = VectorValuedForm(N, k + 1, [uf.wedge(c) for c in X.components])
        proj = ctx.project_pk(k + 1, wX.sparse_coordinates())
        # coordinates in the echelon basis of P^{k+1}: read pivot entries
        cols.append({i: proj.get(p, ZERO) for i, p in enumerate(pk1.pivots)
                     if proj.get(p, ZERO) != 0})
    return SymbolMap(uf, k, Matrix.from_columns(cols, pk1.dim))


def exactness_at_1(ctx: StructureContext, u) -> dict:
    """Im Sb_0(u) vs Ker Sb_1(u) inside P^1; returns the comparison data."""
    sb0 = symbol_map(ctx, u, 0)
    sb1 = symbol_map(ctx, u, 1)
    image = column_space(sb0.matrix)
    ker = kernel(sb1.matrix)
    return {
        "dim_im_sb0": image.dim,
        "dim_ker_sb1": ker.dim,
        "rank_sb0": image.dim,
        "equal": subspace_equal(image, ker),
    }


# ---------------------------------------------------------------------
# conditions (C1)/(C2) and Lemma-style decomposition
# ---------------------------------------------------------------------


def rotation_basis(N: int, kind: int) -> list[list]:
    """Exact rational orthonormal bases: products of Pythagorean rotations.

    kind = 0 is the standard basis; kinds 1, 2 apply (3/5, 4/5) and
    (5/13, 12/13) Givens rotations across consecutive coordinate pairs.
    """
    rows = [[ONE if i == j else ZERO for j in range(N)] for i in range(N)]
    if kind == 0:
        return rows
    c, s = (QQ(3, 5), QQ(4, 5)) if kind == 1 else (QQ(5, 13), QQ(12, 13))
    for p in range(N - 1):
        a, b = rows[p], rows[p + 1]
        rows[p] = [c * x + s * y for x, y in zip(a, b)]
        rows[p + 1] = [-s * x + c * y for x, y in zip(a, b)]
    return rows


def condition_C2_intersection(g: LinearSubspace, N: int,
                              basis_rows: list[list] | None = None) -> int:
    """dim of g intersected with {A : A_i^j = 0 for i, j != 1}.

    In a rotated orthonormal basis Q (rows = new basis vectors) the endo
    matrix transforms by conjugation with Q.
    """
    constraints = []
    endos = [Endomorphism.from_coordinates(N, v) for v in g.basis_vectors()]
    if basis_rows is not None:
        Q = Endomorphism(N, {(i + 1, j + 1): basis_rows[i][j]
                             for i in range(N) for j in range(N)
                             if basis_rows[i][j] != 0})
        Qt = Q.transpose()
        endos = [Q.compose(e).compose(Qt) for e in endos]
    # columns = g basis coefficients; rows = entries A_i^j with i, j >= 2
    cols = []
    for e in endos:
        col = {}
        for (i, j), v in e.entries.items():
            if i != 1 and j != 1:
                col[(i - 2) * (N - 1) + (j - 2)] = v
        cols.append(col)
    m = Matrix.from_columns(cols, (N - 1) * (N - 1))
    return kernel(m).dim


def lemma_decompose(ctx: StructureContext, a: Endomorphism, u) -> tuple:
    """Write a = b + u (x) w with b in g, given u ^ a in g^2.

    Returns (b, w) with b an Endomorphism and w a vector dict; raises
    ValueError when the wedge precondition fails.  Witnesses are not
    unique; any exact solution of the linear system is returned.
    """
    N = ctx.N
    uf = _covector_form(N, u)
    if uf.is_zero():
        raise ValueError("covector must be nonzero")
    wedge_vec = VectorValuedForm(
        N, 2, [uf.wedge(c) for c in a.to_vector_valued_form().components])
    if not ctx.gk(2).contains(wedge_vec.sparse_coordinates()):
        raise ValueError("u ^ a is not in g^2")
    gdim = ctx.g.dim
    cols = [dict(v) for v in ctx.g.basis_vectors()]
    for kk in range(1, N + 1):
        # u (x) v_k as an endomorphism: entries (i, k) = u_i
        e = Endomorphism(N, {(i, kk): c for (i,), c in uf.terms.items()})
        cols.append(e.coordinates())
    M = Matrix.from_columns(cols, N * N)
    rhs = Matrix.from_columns([a.coordinates()], N * N)
    x = solve(M, rhs)
    if x is None:
        raise ValueError("decomposition system inconsistent")
    sol = x.column(0)
    b_coords: dict = {}
    for i in range(gdim):
        c = sol.get(i)
        if c is None or c == 0:
            continue
        for pos, v in ctx.g.basis_vectors()[i].items():
            w = b_coords.get(pos, ZERO) + c * v
            if w == 0:
                b_coords.pop(pos, None)
            else:
                b_coords[pos] = w
    b = Endomorphism.from_coordinates(N, b_coords)
    w = {kk - gdim + 1: v for kk, v in sol.items() if kk >= gdim and v != 0}
    return b, w


def tensor_endomorphism(N: int, u: KForm, w: dict) -> Endomorphism:
    """u (x) w as an endomorphism: x -> u(x) w."""
    return Endomorphism(N, {(i, j): c * wv
                            for (i,), c in u.terms.items()
                            for j, wv in w.items()})


# ---------------------------------------------------------------------
# randomized covectors (seeded, small rationals)
# ---------------------------------------------------------------------


def random_covectors(N: int, count: int, seed: int,
                     max_num: int = 16, max_den: int = 16) -> list[KForm]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        terms = {}
        for i in range(1, N + 1):
            if rng.random() < 0.4:
                num = rng.randint(-max_num, max_num)
                den = rng.randint(1, max_den)
                if num:
                    terms[(i,)] = QQ(num, den)
        if terms:
            out.append(KForm(N, 1, terms))
    return out


# ---------------------------------------------------------------------
# cross-validation presets
# ---------------------------------------------------------------------


def g2_form() -> StructureForm:
    """The standard G2 3-form on R^7 (stabilizer dimension 14)."""
    terms = {
        (1, 2, 3): 1,
        (1, 4, 5): 1,
        (1, 6, 7): 1,
        (2, 4, 6): 1,
        (2, 5, 7): -1,
        (3, 4, 7): -1,
        (3, 5, 6): -1,
    }
    return StructureForm.single(KForm(7, 3, terms))


def cayley_form() -> StructureForm:
    """The standard self-dual 4-form on R^8 (stabilizer dimension 21)."""
    terms = {
        (1, 2, 3, 4): 1, (1, 2, 5, 6): 1, (1, 2, 7, 8): 1,
        (1, 3, 5, 7): 1, (1, 3, 6, 8): -1, (1, 4, 5, 8): -1,
        (1, 4, 6, 7): -1, (2, 3, 5, 8): -1, (2, 3, 6, 7): -1,
        (2, 4, 5, 7): -1, (2, 4, 6, 8): 1, (3, 4, 5, 6): 1,
        (3, 4, 7, 8): 1, (5, 6, 7, 8): 1,
    }
    return StructureForm.single(KForm(8, 4, terms))


def volume_structure(N: int) -> StructureForm:
    from .exterior import volume_form
    return StructureForm.single(volume_form(N))
