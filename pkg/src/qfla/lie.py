"""Lie algebras given by structure constants, and their representations.

Conventions: ``c[i, j, k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]``.
A linear map is stored as the matrix whose column ``j`` is the image of
``e_j``. Indices are 0-based everywhere; labels are cosmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .errors import DimensionMismatch
from .exact import Matrix, Tensor3, _check_len, basis_vec, frac, lincomb, solve_linear


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an identity check over basis tuples.

    ``first_failure`` is the lexicographically first violating index tuple.
    """

    ok: bool
    first_failure: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class LieReport:
    antisymmetry: bool
    jacobi: bool
    first_failure: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.antisymmetry and self.jacobi

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class LieAlgebra:
    name: str
    basis: tuple[str, ...]
    c: Tensor3

    def __post_init__(self):
        n = len(self.basis)
        if self.c.dims != (n, n, n):
            raise DimensionMismatch(f"structure constants {self.c.dims} for {n} basis labels")
        if len(set(self.basis)) != n:
            raise ValueError(f"repeated basis label in {self.basis}")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label: str) -> int:
        return self.basis.index(label)

    @classmethod
    def from_brackets(cls, name: str, basis: Sequence[str],
                      brackets: Mapping[tuple[str, str], Mapping[str, object]]) -> LieAlgebra:
        """Build from nonzero relations ``{(a, b): {c: coeff}}``.

        ``[b, a]`` is filled in by antisymmetry; giving both orders is
        allowed only when they agree.
        """
        basis = tuple(basis)
        pos = {b: i for i, b in enumerate(basis)}
        values: dict = {}
        for (a, b), combo in brackets.items():
            i, j = pos[a], pos[b]
            for lab, coef in combo.items():
                k = pos[lab]
                coef = frac(coef)
                for key, val in (((i, j, k), coef), ((j, i, k), -coef)):
                    if values.get(key, val) != val:
                        raise ValueError(f"bracket [{a},{b}] conflicts with its reverse")
                    values[key] = val
        n = len(basis)
        return cls(name, basis, Tensor3.from_dict((n, n, n), values))

    @classmethod
    def abelian(cls, n: int, name: str = "abelian", prefix: str = "e") -> LieAlgebra:
        return cls(name, tuple(f"{prefix}{i + 1}" for i in range(n)), Tensor3.zeros(n))

    def bracket_matrix(self, i: int, j: int) -> tuple:
        """[e_i, e_j] as a coordinate vector."""
        n = self.dim
        return tuple(self.c[i, j, k] for k in range(n))

    def relations(self) -> list[tuple[int, int, tuple]]:
        """Nonzero [e_i, e_j] for i < j."""
        out = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                v = self.bracket_matrix(i, j)
                if any(v):
                    out.append((i, j, v))
        return out


def validate_lie(c: Tensor3) -> LieReport:
    """Check antisymmetry and the Jacobi identity coordinate-wise.

    ``first_failure`` is the first bad (i, j, k) of the constants when
    antisymmetry fails, otherwise the first basis triple (i, j, k) on which
    the Jacobi sum is nonzero.
    """
    n1, n2, n3 = c.dims
    if not n1 == n2 == n3:
        raise DimensionMismatch(f"structure constants must be n x n x n, got {c.dims}")
    n = n1
    antisym_fail = None
    for i, j, k in product(range(n), repeat=3):
        if c[i, j, k] + c[j, i, k] != 0:
            antisym_fail = (i, j, k)
            break

    sparse = _sparse_brackets(c)
    jacobi_fail = None
    for i, j, k in product(range(n), repeat=3):
        acc: dict = {}
        for a, b, d in ((i, j, k), (j, k, i), (k, i, j)):
            for m, x in sparse[a][b]:
                for l, y in sparse[m][d]:
                    acc[l] = acc.get(l, 0) + x * y
        if any(acc.values()):
            jacobi_fail = (i, j, k)
            break
    return LieReport(antisym_fail is None, jacobi_fail is None, antisym_fail or jacobi_fail)


def _sparse_brackets(c: Tensor3) -> list[list[list[tuple[int, Fraction]]]]:
    n = c.dims[0]
    out = [[[] for _ in range(n)] for _ in range(n)]
    for (i, j, k), v in c.nonzero():
        out[i][j].append((k, v))
    return out


def bracket(g: LieAlgebra, u: Sequence, v: Sequence) -> tuple:
    n = g.dim
    _check_len(u, n)
    _check_len(v, n)
    out = [Fraction(0)] * n
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if not b:
                continue
            ab = a * b
            for k in range(n):
                ck = g.c[i, j, k]
                if ck:
                    out[k] += ab * ck
    return tuple(out)


def ad_matrix(g: LieAlgebra, x: Sequence) -> Matrix:
    """Matrix of y -> [x, y]."""
    n = g.dim
    _check_len(x, n)
    x = [frac(a) for a in x]
    return Matrix.from_function(
        n, n, lambda k, j: sum((x[i] * g.c[i, j, k] for i in range(n) if x[i]), Fraction(0)))


def ad_basis(g: LieAlgebra) -> list[Matrix]:
    return [ad_matrix(g, basis_vec(g.dim, i)) for i in range(g.dim)]


def coadjoint_matrix(g: LieAlgebra, x: Sequence) -> Matrix:
    """ad*_x = -(ad_x)^T acting on dual coordinates."""
    return -ad_matrix(g, x).T


@dataclass(frozen=True)
class Representation:
    """Action of ``source`` on a ``dim``-dimensional module.

    ``matrices[i]`` is the operator of the i-th basis element.
    """

    source: LieAlgebra
    dim: int
    matrices: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.matrices) != self.source.dim:
            raise DimensionMismatch(
                f"{len(self.matrices)} matrices for a {self.source.dim}-dimensional algebra")
        for m in self.matrices:
            if m.shape != (self.dim, self.dim):
                raise DimensionMismatch(f"operator of shape {m.shape} on a {self.dim}-dim module")

    @classmethod
    def zero(cls, source: LieAlgebra, dim: int) -> Representation:
        return cls(source, dim, tuple(Matrix.zeros(dim) for _ in range(source.dim)))

    @classmethod
    def adjoint(cls, g: LieAlgebra) -> Representation:
        return cls(g, g.dim, tuple(ad_basis(g)))

    def at(self, x: Sequence) -> Matrix:
        """Operator of an arbitrary element sum_i x_i e_i."""
        _check_len(x, self.source.dim)
        return lincomb(x, self.matrices, self.dim)


def validate_representation(rho: Representation) -> CheckReport:
    """rho([e_i, e_j]) == [rho_i, rho_j] for every ordered basis pair."""
    g = rho.source
    for i, j in product(range(g.dim), repeat=2):
        lhs = rho.at(g.bracket_matrix(i, j))
        if lhs != rho.matrices[i].commutator(rho.matrices[j]):
            return CheckReport(False, (i, j))
    return CheckReport(True)


def dual_representation(rho: Representation) -> Representation:
    report = validate_representation(rho)
    if not report:
        raise ValueError(f"not a representation; module law fails at {report.first_failure}")
    return Representation(rho.source, rho.dim, tuple(-m.T for m in rho.matrices))


def is_derivation(g: LieAlgebra, d: Matrix) -> bool:
    """D[u, v] == [Du, v] + [u, Dv] on all basis pairs."""
    n = g.dim
    if d.shape != (n, n):
        raise DimensionMismatch(f"derivation candidate of shape {d.shape} on a {n}-dim algebra")
    cols = [d.column(j) for j in range(n)]
    for i, j in product(range(n), repeat=2):
        e_i, e_j = basis_vec(n, i), basis_vec(n, j)
        lhs = d.apply(g.bracket_matrix(i, j))
        rhs = tuple(a + b for a, b in zip(bracket(g, cols[i], e_j), bracket(g, e_i, cols[j])))
        if lhs != rhs:
            return False
    return True


def transport(g: LieAlgebra, s: Matrix, name: str | None = None) -> LieAlgebra:
    """Constants of g in the basis f_j = sum_i s[i, j] e_i (s invertible)."""
    n = g.dim
    cols = [s.column(j) for j in range(n)]
    values = {}
    for a, b in product(range(n), repeat=2):
        img = bracket(g, cols[a], cols[b])
        coords = solve_linear(s, img)
        if coords is None:
            raise ValueError("change of basis is singular")
        for k, v in enumerate(coords):
            if v:
                values[a, b, k] = v
    return LieAlgebra(name or g.name, g.basis, Tensor3.from_dict((n, n, n), values))
