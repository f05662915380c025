"""Exact integer linear algebra: Smith normal form and what follows from it.

Everything here works on Python ``int`` (arbitrary precision), so there is
no overflow to detect.  Matrices are small and dense; clarity wins over
asymptotics.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

Vector = list[int]


class IntMatrix:
    """Immutable dense integer matrix with optional row/column labels."""

    __slots__ = ("rows", "cols", "entries", "row_labels", "col_labels")

    def __init__(self, entries, rows=None, cols=None, row_labels=None, col_labels=None):
        data = tuple(tuple(int(x) for x in r) for r in entries)
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"entries do not form a {rows}x{cols} matrix")
        if row_labels is not None and len(row_labels) != rows:
            raise ValueError("row label count does not match rows")
        if col_labels is not None and len(col_labels) != cols:
            raise ValueError("column label count does not match cols")
        self.rows = rows
        self.cols = cols
        self.entries = data
        self.row_labels = None if row_labels is None else tuple(row_labels)
        self.col_labels = None if col_labels is None else tuple(col_labels)

    @classmethod
    def zeros(cls, rows: int, cols: int, **labels) -> IntMatrix:
        return cls([[0] * cols for _ in range(rows)], rows, cols, **labels)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        return cls([[c[i] for c in columns] for i in range(rows)], rows, len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.entries]!r})"

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        data = [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.entries]
        return IntMatrix(data, self.rows, other.cols, self.row_labels, other.col_labels)

    def apply(self, v: Sequence[int]) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for matrix with {self.cols} columns")
        return [sum(a * b for a, b in zip(r, v)) for r in self.entries]

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            [list(c) for c in zip(*self.entries)] if self.rows else [[] for _ in range(self.cols)],
            self.cols, self.rows, self.col_labels, self.row_labels,
        )

    def column(self, j: int) -> Vector:
        return [r[j] for r in self.entries]

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def row(self, i: int) -> Vector:
        return list(self.entries[i])

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class SNFResult:
    """``U @ M @ V == S`` with ``U``, ``V`` unimodular and ``S`` in Smith form.

    ``U_inv`` and ``V_inv`` are carried along so callers can change basis in
    both directions without inverting anything.
    """

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix = field(repr=False)
    V_inv: IntMatrix = field(repr=False)

    @property
    def diagonal(self) -> list[int]:
        return [self.S[k, k] for k in range(min(self.S.rows, self.S.cols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def snf(M: IntMatrix) -> SNFResult:
    """Smith normal form with unimodular transforms.

    The pivot is the nonzero entry of least absolute value in the remaining
    block, ties going to the lowest row and then the lowest column.  Row
    operations are mirrored on ``U`` (and inversely on ``U_inv``), column
    operations on ``V`` (and ``V_inv``).
    """
    m, n = M.rows, M.cols
    A = M.tolist()
    U = _eye(m)
    Ui = _eye(m)
    V = _eye(n)
    Vi = _eye(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for r in Ui:
            r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        if q == 0:
            return
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]
        for r in Ui:
            r[src] -= q * r[dst]

    def add_col(dst, src, q):
        # col_dst += q * col_src
        if q == 0:
            return
        for r in A:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]
        Vi[src] = [a - q * b for a, b in zip(Vi[src], Vi[dst])]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]
        for r in Ui:
            r[i] = -r[i]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                row = A[i]
                for j in range(t, n):
                    a = row[j]
                    if a and (pivot is None or abs(a) < pivot[0]):
                        pivot = (abs(a), i, j)
            if pivot is None:
                break
            _, pi, pj = pivot
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = A[t][t]
            for i in range(t + 1, m):
                add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                add_col(j, t, -(A[t][j] // p))
            if any(A[i][t] for i in range(t + 1, m)) or any(A[t][j] for j in range(t + 1, n)):
                continue
            culprit = next(
                (i for i in range(t + 1, m) if any(A[i][j] % p for j in range(t + 1, n))), None
            )
            if culprit is None:
                break
            add_row(t, culprit, 1)
        if pivot is None:
            break
        if A[t][t] < 0:
            negate_row(t)

    return SNFResult(
        IntMatrix(U, m, m), IntMatrix(A, m, n), IntMatrix(V, n, n), IntMatrix(Ui, m, m), IntMatrix(Vi, n, n)
    )


def _eye(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def rational_rank(M: IntMatrix) -> int:
    return snf(M).rank


def kernel_basis(M: IntMatrix) -> list[Vector]:
    """Basis of the integer kernel ``{x : M x = 0}``.

    These are the trailing columns of ``V``; since ``V`` is unimodular the
    span is saturated, i.e. every integer kernel vector is an integer
    combination of the basis.
    """
    res = snf(M)
    r = res.rank
    return [res.V.column(j) for j in range(r, M.cols)]


def solvability(M: IntMatrix, b: Sequence[int]) -> str:
    """``"integral"``, ``"rational"`` (only over Q) or ``"none"`` for ``M x = b``."""
    return _solve(M, b)[0]


def solve_integer(M: IntMatrix, b: Sequence[int]) -> Vector | None:
    """Some integer ``x`` with ``M x = b``, or ``None`` if there is none."""
    return _solve(M, b)[1]


def _solve(M: IntMatrix, b):
    if len(b) != M.rows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {M.rows} rows")
    res = snf(M)
    c = res.U.apply(list(b))
    r = res.rank
    if any(c[k] for k in range(r, M.rows)):
        return "none", None
    d = res.diagonal
    if any(c[k] % d[k] for k in range(r)):
        return "rational", None
    y = [c[k] // d[k] for k in range(r)] + [0] * (M.cols - r)
    return "integral", res.V.apply(y)


@dataclass(frozen=True)
class AbelianPresentation:
    """``Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k`` with ``d_1 | d_2 | ... | d_k`` and all ``d_i > 1``.

    >>> str(AbelianPresentation(2, (3,)))
    'Z^2 ⊕ Z/3'
    """

    free_rank: int
    invariant_factors: tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.invariant_factors]
        return " ⊕ ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Quotient:
    """The quotient of a free submodule ``K`` by a submodule of it.

    ``free_generators`` and ``torsion_generators`` are vectors in the
    ambient coordinates; together they generate the quotient as the
    summands of ``presentation``.
    """

    presentation: AbelianPresentation
    free_generators: tuple[tuple[int, ...], ...]
    torsion_generators: tuple[tuple[tuple[int, ...], int], ...]
    _kernel: IntMatrix = field(repr=False)
    _change: SNFResult = field(repr=False)

    def coordinates(self, v: Sequence[int]) -> tuple[list[int], list[int]]:
        """``(free, torsion)`` coordinates of ``v`` against the generators.

        Torsion coordinates are residues modulo the invariant factors.
        Raises ``ValueError`` if ``v`` is not in the submodule ``K``.
        """
        c = solve_integer(self._kernel, v)
        if c is None:
            raise ValueError("vector is not in the kernel lattice")
        y = self._change.U.apply(c)
        diag = self._change.diagonal
        r = self._change.rank
        torsion = [y[k] % diag[k] for k in range(r) if diag[k] > 1]
        return y[r:], torsion


def quotient_presentation(kernel: Sequence[Sequence[int]], image_generators: Sequence[Sequence[int]],
                          ambient_dim: int | None = None) -> Quotient:
    """Present ``span(kernel) / span(image_generators)``.

    ``kernel`` must be a basis (linearly independent); every image generator
    must be an integer combination of it.
    """
    if ambient_dim is None:
        sample = list(kernel) + list(image_generators)
        if not sample:
            raise ValueError("ambient dimension needed when there are no vectors")
        ambient_dim = len(sample[0])
    K = IntMatrix.from_columns(kernel, ambient_dim)
    coords = []
    for g in image_generators:
        c = solve_integer(K, g)
        if c is None:
            raise ArithmeticError("image generator is not an integer combination of the kernel basis")
        coords.append(c)
    C = IntMatrix.from_columns(coords, K.cols)
    res = snf(C)
    new_basis = K @ res.U_inv
    diag = res.diagonal
    r = res.rank
    torsion = tuple((tuple(new_basis.column(k)), diag[k]) for k in range(r) if diag[k] > 1)
    free = tuple(tuple(new_basis.column(k)) for k in range(r, K.cols))
    pres = AbelianPresentation(K.cols - r, tuple(d for d in diag[:r] if d > 1))
    return Quotient(pres, free, torsion, K, res)

