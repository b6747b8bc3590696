"""The Drinfeld double D(g) = g + g* of a finite-dimensional Lie bialgebra.

Basis order is fixed as (e_1..e_n, e_1*..e_n*). Mixed brackets come from

    [x, xi] = ad*_x xi - ad*_xi x

and invariance of the canonical pairing is then checked, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .bialgebra import Cobracket, LieBialgebra, RMatrix, dual_label
from .errors import DimensionMismatch, InvalidBialgebra
from .exact import Matrix, Tensor3, _check_len
from .lie import CheckReport, LieAlgebra, validate_lie


@dataclass(frozen=True)
class DoubleAlgebra:
    base: LieBialgebra
    total: LieAlgebra
    pairing: Matrix
    canonical_r: RMatrix
    cobracket: Cobracket

    @property
    def n(self) -> int:
        return self.base.algebra.dim

    @property
    def g_embedding(self) -> Matrix:
        n = self.n
        return Matrix.from_function(2 * n, n, lambda i, j: int(i == j))

    @property
    def dual_embedding(self) -> Matrix:
        n = self.n
        return Matrix.from_function(2 * n, n, lambda i, j: int(i == n + j))


def coadjoint_on_dual(g: LieAlgebra, i: int, a: int) -> tuple:
    """ad*_{e_i} e_a* in dual coordinates: m -> -c[i, m, a]."""
    return tuple(-g.c[i, m, a] for m in range(g.dim))


def coadjoint_on_g(gamma: Cobracket, a: int, i: int) -> tuple:
    """ad*_{e_a*} e_i in g coordinates: m -> -f[i, a, m]."""
    return tuple(-gamma.f[i, a, m] for m in range(gamma.algebra.dim))


def double_constants(b: LieBialgebra) -> Tensor3:
    g, gamma = b.algebra, b.cobracket
    n = g.dim
    vals: dict = {}

    def put(i, j, vector, offset):
        for m, v in enumerate(vector):
            if v:
                vals[i, j, offset + m] = vals.get((i, j, offset + m), 0) + v
                vals[j, i, offset + m] = vals.get((j, i, offset + m), 0) - v

    for i, j in product(range(n), repeat=2):
        if i < j:
            put(i, j, g.bracket_matrix(i, j), 0)
            put(n + i, n + j, [gamma.f[m, i, j] for m in range(n)], n)
    for i, a in product(range(n), repeat=2):
        put(i, n + a, coadjoint_on_dual(g, i, a), n)
        put(i, n + a, [-v for v in coadjoint_on_g(gamma, a, i)], 0)
    return Tensor3.from_dict((2 * n, 2 * n, 2 * n), vals)


def pairing_matrix(n: int) -> Matrix:
    return Matrix.from_function(2 * n, 2 * n, lambda i, j: int(abs(i - j) == n))


def pairing_eval(d: DoubleAlgebra, a: Sequence, b: Sequence) -> Fraction:
    """<x + xi, y + eta> = xi(y) + eta(x)."""
    _check_len(a, 2 * d.n)
    _check_len(b, 2 * d.n)
    return sum((x * y for x, y in zip(a, d.pairing.apply(b)) if x and y), Fraction(0))


def check_pairing_invariance(d: DoubleAlgebra | LieAlgebra, pairing: Matrix | None = None) -> CheckReport:
    """<[x, y], z> == <x, [y, z]> on all basis triples."""
    if isinstance(d, DoubleAlgebra):
        total, pairing = d.total, d.pairing
    else:
        total = d
    m = total.dim
    if pairing is None or pairing.shape != (m, m):
        raise DimensionMismatch("pairing must be square of the algebra's dimension")
    for x, y, z in product(range(m), repeat=3):
        lhs = sum((c * pairing[k, z] for k, c in enumerate(total.bracket_matrix(x, y)) if c),
                  Fraction(0))
        rhs = sum((pairing[x, k] * c for k, c in enumerate(total.bracket_matrix(y, z)) if c),
                  Fraction(0))
        if lhs != rhs:
            return CheckReport(False, (x, y, z))
    return CheckReport(True)


def canonical_r(d: DoubleAlgebra | LieAlgebra, n: int | None = None) -> RMatrix:
    """r = sum_i e_i (x) e_i*."""
    total = d.total if isinstance(d, DoubleAlgebra) else d
    n = total.dim // 2 if n is None else n
    return RMatrix(total, Matrix.from_function(2 * n, 2 * n, lambda i, j: int(j == n + i)))


def double_cobracket(d: DoubleAlgebra | LieBialgebra, total: LieAlgebra | None = None) -> Cobracket:
    """gamma_D = gamma_g - gamma_{g*}, with gamma_{g*} the dual of g's bracket."""
    if isinstance(d, DoubleAlgebra):
        base, total = d.base, d.total
    else:
        base = d
    g, gamma = base.algebra, base.cobracket
    n = g.dim
    vals = {}
    for (i, j, k), v in gamma.f.nonzero():
        vals[i, j, k] = v
    for (i, j, a), v in g.c.nonzero():
        vals[n + a, n + i, n + j] = -v
    return Cobracket(total, Tensor3.from_dict((2 * n, 2 * n, 2 * n), vals))


def build_double(b: LieBialgebra, name: str | None = None) -> DoubleAlgebra:
    """Assemble D(g); raises InvalidBialgebra if anything fails to check out."""
    if not b.valid:
        raise InvalidBialgebra(
            f"input is not a Lie bialgebra (co-Jacobi={b.co_jacobi}, "
            f"1-cocycle={b.one_cocycle}, skew={b.skew})", b.first_failure)
    g = b.algebra
    n = g.dim
    total = LieAlgebra(name or f"D_{g.name}", g.basis + tuple(dual_label(x) for x in g.basis),
                       double_constants(b))
    report = validate_lie(total.c)
    if not report:
        raise InvalidBialgebra(f"double fails the Jacobi identity at {report.first_failure}",
                               report.first_failure)
    pairing = pairing_matrix(n)
    inv = check_pairing_invariance(total, pairing)
    if not inv:
        raise InvalidBialgebra(f"pairing is not invariant at {inv.first_failure}", inv.first_failure)
    return DoubleAlgebra(b, total, pairing, canonical_r(total, n), double_cobracket(b, total))
