"""Quasi-Frobenius and Frobenius structures on a Lie algebra.

Sign convention: an exact form is ``beta(x, y) = alpha([x, y])``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .errors import DimensionMismatch, NotSkewError, PreconditionError, SizeExceeded
from .exact import (Matrix, MultiPoly, _check_len, basis_vec, frac, poly_det,
                    rational_det_rank, solve_linear)
from .lie import CheckReport, LieAlgebra, bracket

SYMBOLIC_MAX_DIM = 8


@dataclass(frozen=True)
class SkewForm:
    algebra: LieAlgebra
    gram: Matrix

    def __post_init__(self):
        n = self.algebra.dim
        if self.gram.shape != (n, n):
            raise DimensionMismatch(f"gram of shape {self.gram.shape} on a {n}-dim algebra")
        if self.gram.T != -self.gram:
            bad = next((i, j) for i, j in product(range(n), repeat=2)
                       if self.gram[i, j] != -self.gram[j, i])
            raise NotSkewError(f"gram matrix is not skew at {bad}", bad)

    @classmethod
    def zero(cls, algebra: LieAlgebra) -> SkewForm:
        return cls(algebra, Matrix.zeros(algebra.dim))

    @classmethod
    def from_wedges(cls, algebra: LieAlgebra, wedges: Sequence[tuple[int, int, object]]) -> SkewForm:
        """Sum of c * (e_i^* ^ e_j^*), with (a ^ b)(u, v) = a(u)b(v) - b(u)a(v)."""
        n = algebra.dim
        g = [[Fraction(0)] * n for _ in range(n)]
        for i, j, c in wedges:
            c = frac(c)
            g[i][j] += c
            g[j][i] -= c
        return cls(algebra, Matrix.from_rows(g))

    def __call__(self, u: Sequence, v: Sequence) -> Fraction:
        return sum((a * b for a, b in zip(u, self.gram.apply(v)) if a and b), Fraction(0))


@dataclass(frozen=True)
class QuasiFrobenius:
    form: SkewForm
    cocycle: bool
    nondegenerate: bool
    frobenius_witness: tuple | None = None

    @property
    def algebra(self) -> LieAlgebra:
        return self.form.algebra

    @property
    def ok(self) -> bool:
        return self.cocycle and self.nondegenerate


def quasi_frobenius(form: SkewForm, witness: Sequence | None = None) -> QuasiFrobenius:
    """Run the cocycle and nondegeneracy checks and record them.

    A supplied Frobenius witness is checked against the form and rejected
    if it does not reproduce it.
    """
    if witness is not None:
        witness = tuple(frac(a) for a in witness)
        if coboundary_form(form.algebra, witness).gram != form.gram:
            raise ValueError("witness functional does not reproduce the form")
    return QuasiFrobenius(form, is_two_cocycle(form).ok, is_nondegenerate(form), witness)


def is_two_cocycle(beta: SkewForm) -> CheckReport:
    """beta([x,y],z) + beta([y,z],x) + beta([z,x],y) == 0 on triples i < j < k."""
    q = beta.algebra
    n = q.dim
    for i, j, k in combinations(range(n), 3):
        e = [basis_vec(n, t) for t in (i, j, k)]
        s = (beta(q.bracket_matrix(i, j), e[2])
             + beta(q.bracket_matrix(j, k), e[0])
             + beta(q.bracket_matrix(k, i), e[1]))
        if s:
            return CheckReport(False, (i, j, k))
    return CheckReport(True)


def is_nondegenerate(beta: SkewForm) -> bool:
    if beta.algebra.dim % 2:
        return False
    return rational_det_rank(beta.gram).det != 0


def coboundary_form(q: LieAlgebra, alpha: Sequence) -> SkewForm:
    """The form (x, y) -> alpha([x, y])."""
    n = q.dim
    _check_len(alpha, n, "functional")
    alpha = [frac(a) for a in alpha]
    return SkewForm(q, Matrix.from_function(
        n, n, lambda i, j: sum((alpha[k] * q.c[i, j, k] for k in range(n) if alpha[k]), Fraction(0))))


def exactness_witness(beta: SkewForm) -> tuple | None:
    """A functional alpha with beta = alpha o [.,.], or None if beta is not exact.

    Raises PreconditionError if beta is not a 2-cocycle in the first place.
    """
    report = is_two_cocycle(beta)
    if not report:
        raise PreconditionError(f"form is not a 2-cocycle (fails at {report.first_failure})",
                                report.first_failure)
    q = beta.algebra
    n = q.dim
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return (Fraction(0),) * n
    a = Matrix.from_function(len(pairs), n, lambda r, k: q.c[pairs[r][0], pairs[r][1], k])
    b = [beta.gram[i, j] for i, j in pairs]
    return solve_linear(a, b)


def bracket_poly_matrix(q: LieAlgebra) -> list[list[MultiPoly]]:
    """[e_i, e_j] read as linear polynomials in the basis variables."""
    n = q.dim
    return [[MultiPoly.linear(q.bracket_matrix(i, j)) for j in range(n)] for i in range(n)]


def frobenius_test_symbolic(q: LieAlgebra, max_dim: int = SYMBOLIC_MAX_DIM) -> MultiPoly:
    """det([e_i, e_j]) in the symmetric algebra; nonzero iff q admits a Frobenius functional."""
    if q.dim > max_dim:
        raise SizeExceeded(f"symbolic Frobenius test limited to dim {max_dim}, got {q.dim}")
    if q.dim == 0:
        return MultiPoly.constant(0, 1)
    return poly_det(bracket_poly_matrix(q), max_size=max(max_dim, q.dim))


def is_frobenius_functional(q: LieAlgebra, alpha: Sequence) -> bool:
    return rational_det_rank(coboundary_form(q, alpha).gram).det != 0


def frobenius_functional_search(q: LieAlgebra, seed: int = 0, max_rounds: int = 8,
                                samples_per_round: int = 16,
                                max_dim: int = SYMBOLIC_MAX_DIM) -> tuple | None:
    """Find alpha with det(alpha([e_i, e_j])) != 0 by seeded random sampling.

    Points come from the box {-N..N}^n with N = 1, 2, 4, ... per round.
    Gives up immediately when the symbolic determinant vanishes.
    """
    if not frobenius_test_symbolic(q, max_dim=max_dim):
        return None
    rng = random.Random(seed)
    n = q.dim
    bound = 1
    for _ in range(max_rounds):
        for _ in range(samples_per_round):
            alpha = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n))
            if is_frobenius_functional(q, alpha):
                return alpha
        bound *= 2
    return None


@dataclass(frozen=True)
class MorphismReport:
    lie_hom: bool
    pullback: bool
    iso: bool


def check_qf_morphism(phi: Matrix, src: QuasiFrobenius, dst: QuasiFrobenius) -> MorphismReport:
    """phi: src -> dst, given as a dst.dim x src.dim matrix (columns are images)."""
    g1, g2 = src.algebra, dst.algebra
    if phi.shape != (g2.dim, g1.dim):
        raise DimensionMismatch(f"map of shape {phi.shape} from dim {g1.dim} to dim {g2.dim}")
    cols = [phi.column(j) for j in range(g1.dim)]
    lie_hom = all(
        phi.apply(g1.bracket_matrix(i, j)) == bracket(g2, cols[i], cols[j])
        for i, j in product(range(g1.dim), repeat=2))
    pullback = phi.T @ dst.form.gram @ phi == src.form.gram
    iso = lie_hom and pullback and g1.dim == g2.dim and rational_det_rank(phi).rank == g1.dim
    return MorphismReport(lie_hom, pullback, iso)
