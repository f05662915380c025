"""Conormal chains and the boundary maps between them.

The basis of ``C_p`` is ``f ⊗ ε_f`` for the codimension-``p`` faces ``f``,
with ``ε_f`` the increasing wedge of ``e_i = dρ_i`` over ``i ∈ I(f)``.  The
differential sends ``f ⊗ ε_f`` to the sum over incidences ``(f, g, i)`` of
``g ⊗ (e_i ⌟ ε_f)``, and ``e_i ⌟ ε_f = ±ε_g`` with the Koszul sign of the
slot that ``i`` occupies.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Mapping, Sequence

from .face_complex import FaceComplex, FaceId
from .zlinalg import IntMatrix, Vector

__all__ = [
    "Chain",
    "ChainComplex",
    "IntMatrix",
    "boundary_matrix",
    "boundary_of",
    "chain_add",
    "chain_scale",
    "conormal_complex",
    "contraction_sign",
    "format_matrix",
]


def contraction_sign(index_set: Sequence[int], i: int) -> int:
    """Sign of ``e_i ⌟ (e_{i_1} ∧ ... ∧ e_{i_p})`` relative to the wedge with ``e_i`` removed.

    >>> contraction_sign((1, 3), 1), contraction_sign((1, 3), 3)
    (1, -1)
    """
    try:
        k = list(index_set).index(i)
    except ValueError:
        raise ValueError(f"index {i} not in index set {list(index_set)}") from None
    return -1 if k % 2 else 1


class Chain:
    """Integer combination of codimension-``degree`` faces.

    Zero coefficients are dropped on construction, so two chains are equal
    exactly when their nonzero coefficients agree.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Mapping[FaceId, int] | None = None):
        self.degree = int(degree)
        self.coeffs = {k: int(v) for k, v in sorted((coeffs or {}).items()) if v}

    @classmethod
    def zero(cls, degree: int) -> Chain:
        return cls(degree)

    @classmethod
    def from_vector(cls, degree: int, labels: Sequence[FaceId], vector: Sequence[int]) -> Chain:
        return cls(degree, dict(zip(labels, vector)))

    def to_vector(self, labels: Sequence[FaceId]) -> Vector:
        unknown = set(self.coeffs) - set(labels)
        if unknown:
            raise KeyError(f"chain of degree {self.degree} has faces outside the basis: {sorted(unknown)}")
        return [self.coeffs.get(f, 0) for f in labels]

    def __getitem__(self, face: FaceId) -> int:
        return self.coeffs.get(face, 0)

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def support(self) -> list[FaceId]:
        return list(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, tuple(self.coeffs.items())))

    def __add__(self, other: Chain) -> Chain:
        return chain_add(self, other)

    def __neg__(self) -> Chain:
        return chain_scale(-1, self)

    def __sub__(self, other: Chain) -> Chain:
        return chain_add(self, chain_scale(-1, other))

    def __rmul__(self, n: int) -> Chain:
        return chain_scale(n, self)

    def __repr__(self):
        return f"Chain({self.degree}, {self.coeffs!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for f, c in self.coeffs.items():
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}·"
            terms.append(f"{sign} {mag}{f}")
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def chain_add(a: Chain, b: Chain) -> Chain:
    if a.degree != b.degree:
        raise ValueError(f"cannot add chains of degrees {a.degree} and {b.degree}")
    out = dict(a.coeffs)
    for f, c in b.coeffs.items():
        out[f] = out.get(f, 0) + c
    return Chain(a.degree, out)


def chain_scale(n: int, a: Chain) -> Chain:
    return Chain(a.degree, {f: n * c for f, c in a.coeffs.items()})


class ChainComplex:
    """Free chain complex ``C_d -> ... -> C_0`` with labelled bases.

    ``bases[p]`` lists the basis labels of ``C_p``; ``boundaries[p - 1]`` is
    the matrix of ``δ_p : C_p -> C_{p-1}``.  The conormal complex of a face
    complex is one instance; tests also build complexes by hand (for
    example to exercise torsion).
    """

    def __init__(self, bases: Sequence[Sequence[FaceId]], boundaries: Sequence[IntMatrix]):
        self.bases = [tuple(b) for b in bases]
        if len(boundaries) != max(len(self.bases) - 1, 0):
            raise ValueError("need one boundary matrix per positive degree")
        self._maps = []
        for p, M in enumerate(boundaries, start=1):
            rows, cols = len(self.bases[p - 1]), len(self.bases[p])
            if (M.rows, M.cols) != (rows, cols):
                raise ValueError(f"δ_{p} should be {rows}x{cols}, got {M.rows}x{M.cols}")
            self._maps.append(IntMatrix(M.entries, rows, cols, self.bases[p - 1], self.bases[p]))

    @property
    def top(self) -> int:
        return len(self.bases) - 1

    def rank(self, p: int) -> int:
        return len(self.bases[p]) if 0 <= p <= self.top else 0

    def basis(self, p: int) -> tuple[FaceId, ...]:
        return self.bases[p] if 0 <= p <= self.top else ()

    def boundary(self, p: int) -> IntMatrix:
        """Matrix of ``δ_p``; the zero map for ``p = 0`` and ``p = top + 1``."""
        if 1 <= p <= self.top:
            return self._maps[p - 1]
        if p == 0 or p == self.top + 1:
            return IntMatrix.zeros(self.rank(p - 1), self.rank(p),
                                   row_labels=self.basis(p - 1), col_labels=self.basis(p))
        raise ValueError(f"no boundary map in degree {p} (complex has degrees 0..{self.top})")

    def degree_of(self, face: FaceId) -> int:
        for p, b in enumerate(self.bases):
            if face in b:
                return p
        raise KeyError(f"unknown face id {face!r}")

    def boundary_of(self, c: Chain) -> Chain:
        if c.degree < 1:
            raise ValueError("degree-0 chains have no boundary")
        M = self.boundary(c.degree)
        return Chain.from_vector(c.degree - 1, self.basis(c.degree - 1), M.apply(c.to_vector(self.basis(c.degree))))

    def flipped(self, signs: Mapping[FaceId, int]) -> ChainComplex:
        """Same complex after replacing basis vectors ``f`` by ``signs[f] * f``."""
        maps = []
        for p in range(1, self.top + 1):
            M = self.boundary(p)
            rs = [signs.get(g, 1) for g in self.basis(p - 1)]
            cs = [signs.get(f, 1) for f in self.basis(p)]
            maps.append(IntMatrix([[rs[i] * M[i, j] * cs[j] for j in range(M.cols)] for i in range(M.rows)],
                                  M.rows, M.cols))
        return ChainComplex(self.bases, maps)


@lru_cache(maxsize=256)
def conormal_complex(X: FaceComplex) -> ChainComplex:
    """The conormal chain complex of ``X`` in the canonical orientation."""
    d = X.codim
    return ChainComplex([X.faces_of_codim(p) for p in range(d + 1)],
                        [boundary_matrix(X, p) for p in range(1, d + 1)])


def as_chain_complex(X: FaceComplex | ChainComplex) -> ChainComplex:
    return X if isinstance(X, ChainComplex) else conormal_complex(X)


def boundary_matrix(X: FaceComplex, p: int) -> IntMatrix:
    """Matrix of ``δ_p``: rows are codim ``p-1`` faces, columns codim ``p`` faces."""
    if not 1 <= p <= X.codim:
        raise ValueError(f"boundary degree {p} out of range 1..{X.codim}")
    rows = X.faces_of_codim(p - 1)
    cols = X.faces_of_codim(p)
    row_of = {g: k for k, g in enumerate(rows)}
    data = [[0] * len(cols) for _ in rows]
    for j, f in enumerate(cols):
        iset = X.index_set(f)
        for g, i in X.supers_of(f):
            data[row_of[g]][j] += contraction_sign(iset, i)
    return IntMatrix(data, len(rows), len(cols), rows, cols)


def boundary_of(X: FaceComplex | ChainComplex, c: Chain) -> Chain:
    return as_chain_complex(X).boundary_of(c)


def format_matrix(M: IntMatrix, title: str = "") -> str:
    """Header lines with the labels, then one line of integers per row."""
    lines = []
    if title:
        lines.append(f"# {title}")
    lines.append("# rows: " + " ".join(M.row_labels or ()))
    lines.append("# cols: " + " ".join(M.col_labels or ()))
    width = max((len(str(x)) for r in M.entries for x in r), default=1)
    lines += [" ".join(str(x).rjust(width) for x in r) for r in M.entries]
    return "\n".join(lines)
