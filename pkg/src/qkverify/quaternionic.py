"""The explicit quaternionic data on V = R^{4n}.

I, J, K are transcribed as 4x4 block matrices with +/-E_n blocks acting by
the ordinary column convention; Endomorphism.from_matrix performs the
documented transpose into the A_i^j = <A v_i, v_j> convention used
everywhere else, so the only transcription surface is the block layout
below.

The Kahler forms are omega(x, y) = <A x, y>, the structure 4-form is
Phi = omega_I^2 + omega_J^2 + omega_K^2, and sp(n) is obtained as the
solution space of {A skew, AI = IA, AJ = JA} rather than by enumerating
quaternionic matrices by hand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rational_linalg import (
    QQ, Matrix, LinearSubspace, kernel, rational_str,
)
from .exterior import (
    Endomorphism, KForm, volume_form, wedge_power,
)


def _block_matrix(n: int, blocks) -> list[list[int]]:
    """4x4 grid of blocks, each 0, +1 or -1 meaning O, +E_n, -E_n."""
    N = 4 * n
    M = [[0] * N for _ in range(N)]
    for br in range(4):
        for bc in range(4):
            s = blocks[br][bc]
            if s:
                for t in range(n):
                    M[br * n + t][bc * n + t] = s
    return M


@dataclass(frozen=True)
class QuaternionicTriple:
    n: int
    I: Endomorphism
    J: Endomorphism
    K: Endomorphism

    @property
    def N(self) -> int:
        return 4 * self.n


def build_triple(n: int) -> QuaternionicTriple:
    if n < 1:
        raise ValueError("n must be >= 1")
    I = Endomorphism.from_matrix(_block_matrix(n, [
        [0, -1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, -1],
        [0, 0, 1, 0],
    ]))
    J = Endomorphism.from_matrix(_block_matrix(n, [
        [0, 0, -1, 0],
        [0, 0, 0, 1],
        [1, 0, 0, 0],
        [0, -1, 0, 0],
    ]))
    K = Endomorphism.from_matrix(_block_matrix(n, [
        [0, 0, 0, -1],
        [0, 0, -1, 0],
        [0, 1, 0, 0],
        [1, 0, 0, 0],
    ]))
    return QuaternionicTriple(n, I, J, K)


def two_form_of(a: Endomorphism) -> KForm:
    """omega(x, y) = <a(x), y>; requires a skew-symmetric."""
    if not a.is_skew():
        raise ValueError("two_form_of requires a skew-symmetric endomorphism")
    terms = {}
    for (i, j), v in a.entries.items():
        if i < j:
            terms[(i, j)] = v
    return KForm(a.N, 2, terms)


@lru_cache(maxsize=None)
def kaehler_forms(n: int) -> tuple[KForm, KForm, KForm]:
    t = build_triple(n)
    return two_form_of(t.I), two_form_of(t.J), two_form_of(t.K)


@lru_cache(maxsize=None)
def build_phi(n: int) -> KForm:
    wI, wJ, wK = kaehler_forms(n)
    return wI.wedge(wI) + wJ.wedge(wJ) + wK.wedge(wK)


@lru_cache(maxsize=None)
def explicit_structure_algebra(n: int) -> LinearSubspace:
    """sp(n) (+) sp(1) as a subspace of End(R^{4n}) coordinates.

    sp(n) = {A in so(4n) : AI = IA, AJ = JA}, computed as a kernel;
    sp(1) = span{I, J, K}.  Expected dimension 2n^2 + n + 3.
    """
    return sp_n_part(n).sum(sp_1_part(n))


@lru_cache(maxsize=None)
def sp_n_part(n: int) -> LinearSubspace:
    """Kernel of A -> (A + A^t, AI - IA, AJ - JA) over unit-endo columns."""
    t = build_triple(n)
    N = t.N
    cols = []
    nrows = 3 * N * N
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            E = Endomorphism(N, {(i, j): 1})
            col = {}
            for block, C in enumerate(
                    (E + E.transpose(),
                     E.compose(t.I) - t.I.compose(E),
                     E.compose(t.J) - t.J.compose(E))):
                for pos, v in C.coordinates().items():
                    col[block * N * N + pos] = v
            cols.append(col)
    return kernel(Matrix.from_columns(cols, nrows))


def sp_1_part(n: int) -> LinearSubspace:
    t = build_triple(n)
    N = t.N
    return LinearSubspace.from_vectors(
        [t.I.coordinates(), t.J.coordinates(), t.K.coordinates()], N * N)


@dataclass(frozen=True)
class StructureConstants:
    n: int
    c_n: object        # exact rational, Phi^n = c_n * vol
    phi_norm2: object  # exact rational, <Phi, Phi>

    def __repr__(self):
        return (f"StructureConstants(n={self.n}, c_n={rational_str(self.c_n)}, "
                f"|Phi|^2={rational_str(self.phi_norm2)})")


@lru_cache(maxsize=None)
def structure_constants(n: int) -> StructureConstants:
    phi = build_phi(n)
    top = wedge_power(phi, n)
    vol = volume_form(4 * n)
    vol_tuple = next(iter(vol.terms))
    c_n = top.terms.get(vol_tuple, QQ(0))
    if top != vol.scale(c_n):
        raise AssertionError("Phi^n is not proportional to the volume form")
    if c_n <= 0:
        raise AssertionError("c_n must be positive")
    return StructureConstants(n, c_n, phi.inner(phi))
