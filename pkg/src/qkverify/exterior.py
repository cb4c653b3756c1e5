"""Exterior algebra over V = R^N with exact rational coefficients.

KForm terms are sparse maps from strictly increasing 1-based index tuples
to rationals.  The wedge monomials with increasing indices form an
orthonormal basis, ordered lexicographically; all coordinate vectors and
every subspace computation downstream inherit that order.

Sign conventions (fixed here once for the whole package):
  * interior product:  (iota_v a)(x2,...,xk) = a(v, x2,...,xk), so
    iota_{v_i} removes index i with sign (-1)^position.
  * Hodge star: b ^ *a = <b, a> vol with vol = e^1 ^ ... ^ e^N.
  * Endomorphism entries A_i^j mean A(v_i) = sum_j A_i^j v_j; a matrix M
    acting by the usual column convention corresponds to A_i^j = M[j][i].
"""

from __future__ import annotations

from itertools import combinations
from functools import lru_cache
from typing import Sequence

from .rational_linalg import QQ, ZERO, ONE, Matrix, rational_str, parse_rational


@lru_cache(maxsize=None)
def basis_tuples(N: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Lexicographically ordered increasing index tuples: the Lambda^k basis."""
    return tuple(combinations(range(1, N + 1), k))


@lru_cache(maxsize=None)
def basis_index(N: int, k: int) -> dict:
    return {t: i for i, t in enumerate(basis_tuples(N, k))}


def _merge_wedge(s: tuple[int, ...], t: tuple[int, ...]):
    """Merge two increasing tuples; returns (tuple, sign) or (None, 0)."""
    if set(s) & set(t):
        return None, 0
    merged = []
    sign = 1
    i = j = 0
    while i < len(s) and j < len(t):
        if s[i] < t[j]:
            merged.append(s[i])
            i += 1
        else:
            merged.append(t[j])
            # t[j] moves past the remaining len(s)-i factors of s
            if (len(s) - i) % 2:
                sign = -sign
            j += 1
    merged.extend(s[i:])
    merged.extend(t[j:])
    return tuple(merged), sign


def _insert_sorted(idx: int, t: tuple[int, ...]):
    """Insert idx into increasing tuple t; returns (tuple, sign) or (None, 0)."""
    if idx in t:
        return None, 0
    pos = 0
    while pos < len(t) and t[pos] < idx:
        pos += 1
    sign = -1 if pos % 2 else 1
    return t[:pos] + (idx,) + t[pos:], sign


class KForm:
    """Element of Lambda^k V* in the wedge-monomial basis."""

    __slots__ = ("N", "k", "terms")

    def __init__(self, N: int, k: int, terms=None):
        if not 0 <= k:
            raise ValueError("negative degree")
        self.N = N
        self.k = k
        self.terms = {}
        if terms:
            for t, c in dict(terms).items():
                t = tuple(t)
                if len(t) != k or any(not 1 <= i <= N for i in t):
                    raise ValueError(f"bad index tuple {t}")
                if list(t) != sorted(set(t)):
                    raise ValueError(f"indices not strictly increasing: {t}")
                c = QQ(c)
                if c != 0:
                    self.terms[t] = c

    @classmethod
    def zero(cls, N: int, k: int) -> "KForm":
        return cls(N, k)

    @classmethod
    def monomial(cls, N: int, indices: Sequence[int], coeff=1) -> "KForm":
        return cls(N, len(indices), {tuple(indices): coeff})

    @classmethod
    def constant(cls, N: int, value=1) -> "KForm":
        return cls(N, 0, {(): value})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, KForm)
            and (self.N, self.k) == (other.N, other.k)
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return f"KForm({self.N},{self.k}; 0)"
        parts = [
            f"{rational_str(c)}*e{''.join(map(str, t)) if t else '0'}"
            for t, c in sorted(self.terms.items())
        ]
        return f"KForm({self.N},{self.k}; " + " + ".join(parts[:8]) + (
            " + ..." if len(parts) > 8 else "") + ")"

    def __add__(self, other: "KForm") -> "KForm":
        if (self.N, self.k) != (other.N, other.k):
            raise ValueError("degree/ambient mismatch")
        out = dict(self.terms)
        for t, c in other.terms.items():
            w = out.get(t, ZERO) + c
            if w == 0:
                out.pop(t, None)
            else:
                out[t] = w
        f = KForm(self.N, self.k)
        f.terms = out
        return f

    def __sub__(self, other: "KForm") -> "KForm":
        return self + other.scale(-1)

    def scale(self, c) -> "KForm":
        c = QQ(c)
        f = KForm(self.N, self.k)
        if c != 0:
            f.terms = {t: c * v for t, v in self.terms.items()}
        return f

    def wedge(self, other: "KForm") -> "KForm":
        if self.N != other.N:
            raise ValueError("ambient mismatch")
        k = self.k + other.k
        if k > self.N:
            return KForm(self.N, k)  # zero space
        acc: dict = {}
        for s, cs in self.terms.items():
            for t, ct in other.terms.items():
                m, sign = _merge_wedge(s, t)
                if m is None:
                    continue
                w = acc.get(m, ZERO) + sign * cs * ct
                if w == 0:
                    acc.pop(m, None)
                else:
                    acc[m] = w
        out = KForm(self.N, k)
        out.terms = acc
        return out

    def interior(self, v) -> "KForm":
        """Interior product iota_v with v a coefficient vector or basis index."""
        if self.k == 0:
            raise ValueError("interior product undefined on 0-forms")
        if isinstance(v, int):
            vec = {v: ONE}
        elif isinstance(v, dict):
            vec = {i: QQ(c) for i, c in v.items() if c != 0}
        else:
            vec = {i + 1: QQ(c) for i, c in enumerate(v) if c != 0}
        acc: dict = {}
        for t, c in self.terms.items():
            for pos, idx in enumerate(t):
                vi = vec.get(idx)
                if vi is None:
                    continue
                sign = -1 if pos % 2 else 1
                nt = t[:pos] + t[pos + 1:]
                w = acc.get(nt, ZERO) + sign * vi * c
                if w == 0:
                    acc.pop(nt, None)
                else:
                    acc[nt] = w
        out = KForm(self.N, self.k - 1)
        out.terms = acc
        return out

    def hodge(self) -> "KForm":
        """Hodge star w.r.t. the orthonormal basis and vol = e^1...e^N."""
        out = KForm(self.N, self.N - self.k)
        acc: dict = {}
        full = range(1, self.N + 1)
        for t, c in self.terms.items():
            comp = tuple(i for i in full if i not in t)
            # sign of the permutation (t, comp) of (1..N):
            # count inversions between the two sorted blocks
            inv = 0
            ci = 0
            for x in t:
                while ci < len(comp) and comp[ci] < x:
                    ci += 1
                inv += ci
            sign = -1 if inv % 2 else 1
            acc[comp] = sign * c
        out.terms = acc
        return out

    def inner(self, other: "KForm"):
        if (self.N, self.k) != (other.N, other.k):
            raise ValueError("degree mismatch")
        s = ZERO
        a, b = self.terms, other.terms
        if len(b) < len(a):
            a, b = b, a
        for t, c in a.items():
            d = b.get(t)
            if d is not None:
                s += c * d
        return s

    def coordinates(self) -> list:
        idx = basis_index(self.N, self.k)
        out = [ZERO] * len(idx)
        for t, c in self.terms.items():
            out[idx[t]] = c
        return out

    def sparse_coordinates(self) -> dict:
        idx = basis_index(self.N, self.k)
        return {idx[t]: c for t, c in self.terms.items()}

    @classmethod
    def from_coordinates(cls, N: int, k: int, coords) -> "KForm":
        tuples = basis_tuples(N, k)
        if isinstance(coords, dict):
            return cls(N, k, {tuples[i]: c for i, c in coords.items()})
        return cls(N, k, {tuples[i]: c for i, c in enumerate(coords)})

    # -- serialization ------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "N": self.N,
            "degree": self.k,
            "terms": [
                {"indices": list(t), "coeff": rational_str(c)}
                for t, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "KForm":
        return cls(
            d["N"],
            d["degree"],
            {tuple(t["indices"]): parse_rational(t["coeff"]) for t in d["terms"]},
        )


def wedge(a: KForm, b: KForm) -> KForm:
    return a.wedge(b)


def wedge_power(a: KForm, m: int) -> KForm:
    out = KForm.constant(a.N)
    for _ in range(m):
        out = out.wedge(a)
    return out


def volume_form(N: int) -> KForm:
    return KForm.monomial(N, tuple(range(1, N + 1)))


class Endomorphism:
    """Element of End(V) with entries A_i^j meaning A(v_i) = sum_j A_i^j v_j."""

    __slots__ = ("N", "entries")

    def __init__(self, N: int, entries=None):
        self.N = N
        self.entries = {}
        if entries:
            for (i, j), v in dict(entries).items():
                v = QQ(v)
                if v != 0:
                    if not (1 <= i <= N and 1 <= j <= N):
                        raise ValueError("index out of range")
                    self.entries[(i, j)] = v

    @classmethod
    def identity(cls, N: int) -> "Endomorphism":
        return cls(N, {(i, i): 1 for i in range(1, N + 1)})

    @classmethod
    def from_matrix(cls, M: Sequence[Sequence]) -> "Endomorphism":
        """From a matrix acting by the column convention: (Mx)_r = sum_c M[r][c] x_c.

        The bridge is A_i^j = M[j][i] (documented transpose).
        """
        N = len(M)
        e = cls(N)
        for r in range(N):
            for c in range(N):
                v = QQ(M[r][c])
                if v != 0:
                    e.entries[(c + 1, r + 1)] = v
        return e

    def __getitem__(self, ij):
        return self.entries.get(ij, ZERO)

    def apply(self, x: dict) -> dict:
        """Apply to a vector {i: coeff} in the v_i basis."""
        out: dict = {}
        for (i, j), a in self.entries.items():
            xi = x.get(i)
            if xi is None:
                continue
            w = out.get(j, ZERO) + a * xi
            if w == 0:
                out.pop(j, None)
            else:
                out[j] = w
        return out

    def compose(self, other: "Endomorphism") -> "Endomorphism":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        out = Endomorphism(self.N)
        acc: dict = {}
        by_first: dict = {}
        for (i, j), a in self.entries.items():
            by_first.setdefault(i, []).append((j, a))
        for (i, j), b in other.entries.items():
            for k, a in by_first.get(j, ()):
                w = acc.get((i, k), ZERO) + b * a
                if w == 0:
                    acc.pop((i, k), None)
                else:
                    acc[(i, k)] = w
        out.entries = acc
        return out

    def bracket(self, other: "Endomorphism") -> "Endomorphism":
        return self.compose(other) - other.compose(self)

    def __add__(self, other):
        out = Endomorphism(self.N)
        acc = dict(self.entries)
        for ij, v in other.entries.items():
            w = acc.get(ij, ZERO) + v
            if w == 0:
                acc.pop(ij, None)
            else:
                acc[ij] = w
        out.entries = acc
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "Endomorphism":
        c = QQ(c)
        out = Endomorphism(self.N)
        if c != 0:
            out.entries = {ij: c * v for ij, v in self.entries.items()}
        return out

    def trace(self):
        return sum((v for (i, j), v in self.entries.items() if i == j), ZERO)

    def transpose(self) -> "Endomorphism":
        out = Endomorphism(self.N)
        out.entries = {(j, i): v for (i, j), v in self.entries.items()}
        return out

    def is_skew(self) -> bool:
        return (self + self.transpose()).entries == {}

    def __eq__(self, other):
        return (
            isinstance(other, Endomorphism)
            and self.N == other.N
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"Endomorphism(N={self.N}, nnz={len(self.entries)})"

    # coordinates: position (i-1)*N + (j-1) holds A_i^j
    def coordinates(self) -> dict:
        N = self.N
        return {(i - 1) * N + (j - 1): v for (i, j), v in self.entries.items()}

    @classmethod
    def from_coordinates(cls, N: int, coords: dict) -> "Endomorphism":
        e = cls(N)
        for pos, v in coords.items():
            if v != 0:
                e.entries[(pos // N + 1, pos % N + 1)] = QQ(v)
        return e

    def to_vector_valued_form(self) -> "VectorValuedForm":
        comps = []
        for j in range(1, self.N + 1):
            comps.append(KForm(self.N, 1, {
                (i,): v for (i, jj), v in self.entries.items() if jj == j}))
        return VectorValuedForm(self.N, 1, comps)


class VectorValuedForm:
    """Element of Lambda^k V* (x) V: one KForm per basis vector v_j."""

    __slots__ = ("N", "k", "components")

    def __init__(self, N: int, k: int, components: Sequence[KForm]):
        if len(components) != N:
            raise ValueError("need exactly N components")
        for c in components:
            if (c.N, c.k) != (N, k):
                raise ValueError("component degree/ambient mismatch")
        self.N = N
        self.k = k
        self.components = list(components)

    @classmethod
    def zero(cls, N: int, k: int) -> "VectorValuedForm":
        return cls(N, k, [KForm.zero(N, k) for _ in range(N)])

    @classmethod
    def simple(cls, omega: KForm, j: int) -> "VectorValuedForm":
        """omega (x) v_j."""
        comps = [KForm.zero(omega.N, omega.k) for _ in range(omega.N)]
        comps[j - 1] = omega
        return cls(omega.N, omega.k, comps)

    def __add__(self, other):
        return VectorValuedForm(
            self.N, self.k,
            [a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        return VectorValuedForm(
            self.N, self.k,
            [a - b for a, b in zip(self.components, other.components)])

    def scale(self, c):
        return VectorValuedForm(self.N, self.k,
                                [a.scale(c) for a in self.components])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __eq__(self, other):
        return (
            isinstance(other, VectorValuedForm)
            and (self.N, self.k) == (other.N, other.k)
            and self.components == other.components
        )

    # coordinates are component-major: component j occupies the block
    # [ (j-1)*C(N,k), j*C(N,k) ) in lexicographic monomial order.
    def coordinates(self) -> list:
        out = []
        for c in self.components:
            out.extend(c.coordinates())
        return out

    def sparse_coordinates(self) -> dict:
        block = len(basis_tuples(self.N, self.k))
        out: dict = {}
        for j, c in enumerate(self.components):
            for i, v in c.sparse_coordinates().items():
                out[j * block + i] = v
        return out

    @classmethod
    def from_coordinates(cls, N: int, k: int, coords: dict) -> "VectorValuedForm":
        block = len(basis_tuples(N, k))
        comps = []
        for j in range(N):
            part = {i - j * block: v for i, v in coords.items()
                    if j * block <= i < (j + 1) * block}
            comps.append(KForm.from_coordinates(N, k, part))
        return cls(N, k, comps)

    def to_endomorphism(self) -> Endomorphism:
        if self.k != 1:
            raise ValueError("only degree-1 forms identify with End(V)")
        e = Endomorphism(self.N)
        for j, c in enumerate(self.components, start=1):
            for (i,), v in c.terms.items():
                e.entries[(i, j)] = v
        return e


def vvf_dim(N: int, k: int) -> int:
    return len(basis_tuples(N, k)) * N


def kform_dim(N: int, k: int) -> int:
    return len(basis_tuples(N, k))


def kform_space_matrix(forms: Sequence[KForm], N: int, k: int) -> Matrix:
    """Rows = coordinate vectors of the given forms."""
    return Matrix.from_sparse_rows(
        [f.sparse_coordinates() for f in forms], kform_dim(N, k))
