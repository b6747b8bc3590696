"""Exact scalars, dense matrices/tensors and multivariate polynomials.

Scalars are :class:`fractions.Fraction` throughout; nothing in here ever
touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Iterable, NamedTuple, Sequence

from .errors import DimensionMismatch, SizeExceeded

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]

POLY_DET_MAX = 12


def frac(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings. Floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact scalar {x!r}")
    return Fraction(x)


def vec(*xs) -> tuple:
    return tuple(frac(x) for x in xs)


def zero_vec(n: int) -> tuple:
    return (Fraction(0),) * n


def basis_vec(n: int, i: int) -> tuple:
    return tuple(Fraction(int(k == i)) for k in range(n))


def _check_len(v: Sequence, n: int, what: str = "vector") -> None:
    if len(v) != n:
        raise DimensionMismatch(f"{what} has length {len(v)}, expected {n}")


@dataclass(frozen=True, repr=False)
class Matrix:
    rows: int
    cols: int
    entries: tuple

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, {self})"

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> Matrix:
        rows = [tuple(frac(x) for x in r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def from_function(cls, rows: int, cols: int, f: Callable[[int, int], object]) -> Matrix:
        return cls(rows, cols, tuple(frac(f(i, j)) for i in range(rows) for j in range(cols)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> Matrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls.from_function(n, n, lambda i, j: int(i == j))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> Matrix:
        cols = len(columns)
        rows = len(columns[0]) if cols else 0
        return cls.from_function(rows, cols, lambda i, j: columns[j][i])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> Matrix:
        return Matrix.from_function(self.cols, self.rows, lambda i, j: self[j, i])

    def is_zero(self) -> bool:
        return not any(self.entries)

    def _same_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, s) -> Matrix:
        s = frac(s)
        return Matrix(self.rows, self.cols, tuple(s * a for a in self.entries))

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        rows_a = [self.row(i) for i in range(self.rows)]
        cols_b = [other.column(j) for j in range(other.cols)]
        return Matrix(self.rows, other.cols, tuple(
            sum((a * b for a, b in zip(r, c) if a and b), Fraction(0))
            for r in rows_a for c in cols_b))

    def apply(self, v: Sequence) -> tuple:
        _check_len(v, self.cols)
        return tuple(sum((a * b for a, b in zip(self.row(i), v) if a and b), Fraction(0))
                     for i in range(self.rows))

    def commutator(self, other: Matrix) -> Matrix:
        return self @ other - other @ self

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in self.row(i)) + "]"
                               for i in range(self.rows)) + "]"


def lincomb(coeffs: Sequence, mats: Sequence[Matrix], rows: int, cols: int | None = None) -> Matrix:
    """sum_i coeffs[i] * mats[i], skipping zero coefficients."""
    acc = Matrix.zeros(rows, cols)
    for c, m in zip(coeffs, mats):
        if c:
            acc = acc + m.scale(c)
    return acc


@dataclass(frozen=True, repr=False)
class Tensor3:
    dims: tuple[int, int, int]
    entries: tuple

    def __repr__(self) -> str:
        nz = ", ".join(f"{idx}: {v}" for idx, v in self.nonzero())
        return f"Tensor3({self.dims}, {{{nz}}})"

    def __post_init__(self):
        n1, n2, n3 = self.dims
        if len(self.entries) != n1 * n2 * n3:
            raise DimensionMismatch(f"{len(self.entries)} entries for dims {self.dims}")

    @classmethod
    def zeros(cls, n1: int, n2: int | None = None, n3: int | None = None) -> Tensor3:
        n2 = n1 if n2 is None else n2
        n3 = n1 if n3 is None else n3
        return cls((n1, n2, n3), (Fraction(0),) * (n1 * n2 * n3))

    @classmethod
    def from_function(cls, dims: tuple[int, int, int], f: Callable[[int, int, int], object]) -> Tensor3:
        return cls(tuple(dims), tuple(frac(f(i, j, k)) for i, j, k in product(*map(range, dims))))

    @classmethod
    def from_nested(cls, data: Sequence[Sequence[Sequence]]) -> Tensor3:
        n1 = len(data)
        n2 = len(data[0]) if n1 else 0
        n3 = len(data[0][0]) if n2 else 0
        for plane in data:
            if len(plane) != n2 or any(len(r) != n3 for r in plane):
                raise DimensionMismatch("ragged tensor data")
        return cls((n1, n2, n3), tuple(frac(x) for plane in data for r in plane for x in r))

    @classmethod
    def from_dict(cls, dims: tuple[int, int, int], values: dict) -> Tensor3:
        n1, n2, n3 = dims
        flat = [Fraction(0)] * (n1 * n2 * n3)
        for (i, j, k), v in values.items():
            flat[(i * n2 + j) * n3 + k] = frac(v)
        return cls(tuple(dims), tuple(flat))

    def __getitem__(self, ijk: tuple[int, int, int]) -> Fraction:
        i, j, k = ijk
        _, n2, n3 = self.dims
        return self.entries[(i * n2 + j) * n3 + k]

    def slice(self, i: int) -> Matrix:
        """The n2 x n3 matrix at first index i."""
        _, n2, n3 = self.dims
        return Matrix(n2, n3, self.entries[i * n2 * n3:(i + 1) * n2 * n3])

    def nonzero(self) -> Iterable[tuple[tuple[int, int, int], Fraction]]:
        for idx, v in zip(product(*map(range, self.dims)), self.entries):
            if v:
                yield idx, v

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __add__(self, other: Tensor3) -> Tensor3:
        if self.dims != other.dims:
            raise DimensionMismatch(f"dims {self.dims} and {other.dims} differ")
        return Tensor3(self.dims, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> Tensor3:
        return Tensor3(self.dims, tuple(-a for a in self.entries))

    def __sub__(self, other: Tensor3) -> Tensor3:
        return self + (-other)


# ---------------------------------------------------------------------------
# Rational linear algebra
# ---------------------------------------------------------------------------

class DetRank(NamedTuple):
    det: Fraction
    rank: int
    square: bool


def _row_reduce(rows: list[list[Fraction]], ncols: int) -> tuple[list[int], int]:
    """In-place reduced row echelon form on the first ``ncols`` columns.

    Returns (pivot columns, number of row swaps).
    """
    pivots = []
    swaps = 0
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            swaps += 1
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots, swaps


def rational_det_rank(m: Matrix) -> DetRank:
    """Determinant and rank by exact Gaussian elimination.

    Non-square input has no determinant; 0 is returned with ``square=False``.
    """
    rows = m.to_rows()
    rank = 0
    det = Fraction(1)
    r = 0
    for c in range(m.cols):
        p = next((i for i in range(r, m.rows) if rows[i][c] != 0), None)
        if p is None:
            det = Fraction(0)
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            det = -det
        piv = rows[r][c]
        det *= piv
        for i in range(r + 1, m.rows):
            if rows[i][c] != 0:
                f = rows[i][c] / piv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        rank += 1
        if r == m.rows:
            break
    if not m.is_square:
        return DetRank(Fraction(0), rank, False)
    if rank < m.rows:
        det = Fraction(0)
    return DetRank(det, rank, True)


def rank(m: Matrix) -> int:
    return rational_det_rank(m).rank


def solve_linear(a: Matrix, b: Sequence) -> tuple | None:
    """One exact solution of ``a x = b``, or None if the system is inconsistent.

    Free variables are set to zero, so the answer is the first solution in
    elimination order.
    """
    _check_len(b, a.rows, "right-hand side")
    rows = [list(a.row(i)) + [frac(b[i])] for i in range(a.rows)]
    pivots, _ = _row_reduce(rows, a.cols)
    for i in range(len(pivots), a.rows):
        if rows[i][a.cols] != 0:
            return None
    x = [Fraction(0)] * a.cols
    for i, c in enumerate(pivots):
        x[c] = rows[i][a.cols]
    return tuple(x)


# ---------------------------------------------------------------------------
# Polynomials (the symmetric algebra on a basis)
# ---------------------------------------------------------------------------

def _grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


class MultiPoly:
    """Polynomial in ``nvars`` variables with exact rational coefficients.

    Terms print in graded lexicographic order, highest first.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise DimensionMismatch(f"exponent vector {exps} for {nvars} variables")
            c = frac(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self._terms = clean
        self._hash = None

    @classmethod
    def constant(cls, nvars: int, c) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> MultiPoly:
        return cls(nvars, {tuple(int(k == i) for k in range(nvars)): 1})

    @classmethod
    def linear(cls, coeffs: Sequence) -> MultiPoly:
        """sum_i coeffs[i] * x_i"""
        n = len(coeffs)
        return cls(n, {tuple(int(k == i) for k in range(n)): c for i, c in enumerate(coeffs)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise DimensionMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        return MultiPoly.constant(self.nvars, other)

    def __add__(self, other) -> MultiPoly:
        other = self._coerce(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> MultiPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> MultiPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> MultiPoly:
        other = self._coerce(other)
        terms: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == MultiPoly.constant(self.nvars, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def evaluate(self, point: Sequence) -> Fraction:
        _check_len(point, self.nvars, "evaluation point")
        point = [frac(p) for p in point]
        total = Fraction(0)
        for exps, c in self._terms.items():
            t = c
            for p, e in zip(point, exps):
                if e:
                    t *= p ** e
            total += t
        return total

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self.format()!r})"


def poly_det(m: Sequence[Sequence[MultiPoly]], max_size: int = POLY_DET_MAX) -> MultiPoly:
    """Determinant of a square matrix of polynomials.

    Laplace expansion along rows with every minor memoised by its column
    set, so each of the 2**n minors is built once and no division is needed.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionMismatch("poly_det needs a square matrix")
    if n > max_size:
        raise SizeExceeded(f"symbolic determinant of size {n} exceeds the guard {max_size}")
    if n == 0:
        raise DimensionMismatch("empty matrix")
    nvars = m[0][0].nvars
    one = MultiPoly.constant(nvars, 1)
    # minors[S] = det of rows (n-|S|..n-1) restricted to columns in bitmask S
    minors = {0: one}
    for k in range(n - 1, -1, -1):
        size = n - k
        nxt = {}
        for mask in _masks_of_size(n, size):
            acc = MultiPoly(nvars)
            pos = 0
            for j in range(n):
                if not mask >> j & 1:
                    continue
                entry = m[k][j]
                sub = minors.get(mask & ~(1 << j))
                if entry and sub:
                    term = entry * sub
                    acc = acc - term if pos % 2 else acc + term
                pos += 1
            if acc:
                nxt[mask] = acc
        minors = nxt
    return minors.get((1 << n) - 1, MultiPoly(nvars))


def _masks_of_size(n: int, size: int) -> Iterable[int]:
    for cols in combinations(range(n), size):
        mask = 0
        for c in cols:
            mask |= 1 << c
        yield mask
