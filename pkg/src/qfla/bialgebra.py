"""Cobrackets, Lie bialgebras and r-matrices.

A cobracket ``gamma`` is stored as ``f[i, j, k]``, the coefficient of
``e_j (x) e_k`` in ``gamma(e_i)``; an element of g (x) g is an n x n matrix
``T`` meaning ``sum T[a, b] e_a (x) e_b``. Wedges carry no 1/2:
``a ^ b = a (x) b - b (x) a``.

The coboundary of r is ``(delta r)(x) = ad_x^(2) r``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import DimensionMismatch
from .exact import Matrix, Tensor3
from .lie import CheckReport, LieAlgebra, ad_basis, validate_lie


@dataclass(frozen=True)
class Cobracket:
    algebra: LieAlgebra
    f: Tensor3

    def __post_init__(self):
        n = self.algebra.dim
        if self.f.dims != (n, n, n):
            raise DimensionMismatch(f"cobracket tensor {self.f.dims} on a {n}-dim algebra")

    @classmethod
    def zero(cls, algebra: LieAlgebra) -> Cobracket:
        return cls(algebra, Tensor3.zeros(algebra.dim))

    @classmethod
    def from_images(cls, algebra: LieAlgebra, images: list[Matrix]) -> Cobracket:
        n = algebra.dim
        return cls(algebra, Tensor3((n, n, n), tuple(x for m in images for x in m.entries)))

    def image(self, i: int) -> Matrix:
        return self.f.slice(i)

    def first_non_skew(self) -> tuple | None:
        n = self.algebra.dim
        for i, j, k in product(range(n), repeat=3):
            if self.f[i, j, k] != -self.f[i, k, j]:
                return (i, j, k)
        return None

    def is_skew(self) -> bool:
        return self.first_non_skew() is None


@dataclass(frozen=True)
class RMatrix:
    algebra: LieAlgebra
    r: Matrix

    def __post_init__(self):
        n = self.algebra.dim
        if self.r.shape != (n, n):
            raise DimensionMismatch(f"r-matrix of shape {self.r.shape} on a {n}-dim algebra")

    @classmethod
    def zero(cls, algebra: LieAlgebra) -> RMatrix:
        return cls(algebra, Matrix.zeros(algebra.dim))

    @classmethod
    def from_terms(cls, algebra: LieAlgebra, terms) -> RMatrix:
        """terms: iterable of (i, j, coeff) meaning coeff * e_i (x) e_j."""
        n = algebra.dim
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i, j, c in terms:
            rows[i][j] += Fraction(c)
        return cls(algebra, Matrix.from_rows(rows))

    def swapped(self) -> RMatrix:
        return RMatrix(self.algebra, self.r.T)

    def is_skew(self) -> bool:
        return self.r.T == -self.r


@dataclass(frozen=True)
class LieBialgebra:
    algebra: LieAlgebra
    cobracket: Cobracket
    co_jacobi: bool
    one_cocycle: bool
    skew: bool
    first_failure: tuple | None = None

    @property
    def valid(self) -> bool:
        return self.co_jacobi and self.one_cocycle and self.skew


def ad2(a: Matrix, t: Matrix) -> Matrix:
    """ad_x^(2) on g (x) g where ``a`` is ad_x: (A (x) 1 + 1 (x) A) T = A T + T A^T."""
    return a @ t + t @ a.T


def ad3(a: Matrix, t: Tensor3) -> Tensor3:
    """ad_x^(3) on g (x) g (x) g."""
    n = a.rows
    out = [Fraction(0)] * (n ** 3)
    for (p, q, s), v in t.nonzero():
        for m in range(n):
            am = a[m, p]
            if am:
                out[(m * n + q) * n + s] += am * v
            am = a[m, q]
            if am:
                out[(p * n + m) * n + s] += am * v
            am = a[m, s]
            if am:
                out[(p * n + q) * n + m] += am * v
    return Tensor3((n, n, n), tuple(out))


def _check_on(g: LieAlgebra, obj_algebra: LieAlgebra, what: str) -> None:
    if obj_algebra.dim != g.dim:
        raise DimensionMismatch(f"{what} lives on a {obj_algebra.dim}-dim algebra, expected {g.dim}")


def dual_bracket_from_cobracket(gamma: Cobracket) -> Tensor3:
    """Constants of g*: [e_j*, e_k*] = sum_i f[i, j, k] e_i*."""
    n = gamma.algebra.dim
    return Tensor3.from_function((n, n, n), lambda j, k, i: gamma.f[i, j, k])


def is_one_cocycle(g: LieAlgebra, gamma: Cobracket) -> CheckReport:
    """gamma([x, y]) == ad_x^(2) gamma(y) - ad_y^(2) gamma(x) on basis pairs."""
    _check_on(g, gamma.algebra, "cobracket")
    n = g.dim
    ads = ad_basis(g)
    images = [gamma.image(i) for i in range(n)]
    for i, j in product(range(n), repeat=2):
        lhs = Matrix.zeros(n)
        for k, c in enumerate(g.bracket_matrix(i, j)):
            if c:
                lhs = lhs + images[k].scale(c)
        rhs = ad2(ads[i], images[j]) - ad2(ads[j], images[i])
        if lhs != rhs:
            return CheckReport(False, (i, j))
    return CheckReport(True)


def validate_bialgebra(g: LieAlgebra, gamma: Cobracket) -> LieBialgebra:
    _check_on(g, gamma.algebra, "cobracket")
    co = validate_lie(dual_bracket_from_cobracket(gamma))
    cocycle = is_one_cocycle(g, gamma)
    non_skew = gamma.first_non_skew()
    first = non_skew or (co.first_failure if not co.ok else None) or cocycle.first_failure
    return LieBialgebra(g, gamma, co.ok, cocycle.ok, non_skew is None, first)


def cobracket_from_r(g: LieAlgebra, r: RMatrix) -> Cobracket:
    """delta r: e_i -> ad_{e_i}^(2) r. The image need not be skew."""
    _check_on(g, r.algebra, "r-matrix")
    return Cobracket.from_images(g, [ad2(a, r.r) for a in ad_basis(g)])


def yb_bracket(g: LieAlgebra, r: RMatrix) -> Tensor3:
    """[[r, r]] = [r12, r13] + [r12, r23] + [r13, r23] in g (x) g (x) g."""
    _check_on(g, r.algebra, "r-matrix")
    n = g.dim
    terms = [((a, b), v) for (a, b), v in zip(product(range(n), repeat=2), r.r.entries) if v]
    brackets = [[[(k, v) for k in range(n) if (v := g.c[i, j, k])] for j in range(n)]
                for i in range(n)]
    out = [Fraction(0)] * (n ** 3)

    def at(p, q, s):
        return (p * n + q) * n + s

    for (a, b), x in terms:
        for (c, d), y in terms:
            xy = x * y
            for p, v in brackets[a][c]:       # [a_i, a_j] (x) b_i (x) b_j
                out[at(p, b, d)] += xy * v
            for q, v in brackets[b][c]:       # a_i (x) [b_i, a_j] (x) b_j
                out[at(a, q, d)] += xy * v
            for s, v in brackets[b][d]:       # a_i (x) a_j (x) [b_i, b_j]
                out[at(a, c, s)] += xy * v
    return Tensor3((n, n, n), tuple(out))


class Verdict(enum.IntEnum):
    NOT_COBOUNDARY = 0
    COBOUNDARY = 1
    QUASITRIANGULAR = 2
    TRIANGULAR = 3

    @property
    def label(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class RClassification:
    sym_invariant: bool
    yb_invariant: bool
    cybe: bool
    skew: bool
    verdict: Verdict
    yb: Tensor3

    def first_cybe_failure(self) -> tuple | None:
        return next((idx for idx, _ in self.yb.nonzero()), None)


def classify_r(g: LieAlgebra, r: RMatrix) -> RClassification:
    """All four flags are always computed, even after an early failure."""
    _check_on(g, r.algebra, "r-matrix")
    ads = ad_basis(g)
    sym = r.r + r.r.T
    sym_invariant = all(ad2(a, sym).is_zero() for a in ads)
    yb = yb_bracket(g, r)
    yb_invariant = all(ad3(a, yb).is_zero() for a in ads)
    cybe = yb.is_zero()
    skew = r.is_skew()
    if not (sym_invariant and yb_invariant):
        verdict = Verdict.NOT_COBOUNDARY
    elif not cybe:
        verdict = Verdict.COBOUNDARY
    elif not skew:
        verdict = Verdict.QUASITRIANGULAR
    else:
        verdict = Verdict.TRIANGULAR
    return RClassification(sym_invariant, yb_invariant, cybe, skew, verdict, yb)


def dual_label(label: str) -> str:
    return f"{label}s"


def dual_bialgebra(b: LieBialgebra) -> LieBialgebra:
    """(g*, dual of g's bracket), with g*'s bracket dual to gamma."""
    if not b.valid:
        raise ValueError(f"not a Lie bialgebra (first failure {b.first_failure})")
    g = b.algebra
    n = g.dim
    gstar = LieAlgebra(f"{g.name}s", tuple(dual_label(x) for x in g.basis),
                       dual_bracket_from_cobracket(b.cobracket))
    # gamma_{g*}(e_k*) = sum_{i,j} c[i, j, k] e_i* (x) e_j*
    f = Tensor3.from_function((n, n, n), lambda k, i, j: g.c[i, j, k])
    return validate_bialgebra(gstar, Cobracket(gstar, f))

