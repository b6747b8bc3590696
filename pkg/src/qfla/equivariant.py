"""Lie algebra actions on quasi-Frobenius Lie algebras, and their extension
to the Drinfeld double when the acting algebra carries an r-matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .bialgebra import (LieBialgebra, RMatrix, classify_r, cobracket_from_r,
                        dual_bracket_from_cobracket, dual_label, validate_bialgebra)
from .double import DoubleAlgebra, build_double, coadjoint_on_dual, coadjoint_on_g
from .errors import ActingAlgebraMismatch, CYBEViolation, DimensionMismatch
from .exact import Matrix, lincomb
from .frobenius import MorphismReport, QuasiFrobenius, check_qf_morphism
from .lie import CheckReport, LieAlgebra, Representation, is_derivation, validate_representation


@dataclass(frozen=True)
class EquivariantQF:
    acting: LieAlgebra
    target: QuasiFrobenius
    action: Representation
    module_law: CheckReport
    derivation: CheckReport
    invariance: CheckReport

    @property
    def valid(self) -> bool:
        return bool(self.module_law and self.derivation and self.invariance and self.target.ok)

    def restrict(self, indices) -> tuple[Matrix, ...]:
        return tuple(self.action.matrices[i] for i in indices)


def _invariance(gram: Matrix, rho: Matrix) -> CheckReport:
    """beta(rho u, v) + beta(u, rho v) == 0 on basis pairs (u, v)."""
    m = rho.T @ gram + gram @ rho
    n = gram.rows
    for u, v in product(range(n), repeat=2):
        if m[u, v]:
            return CheckReport(False, (u, v))
    return CheckReport(True)


def validate_gqf(g: LieAlgebra, q_beta: QuasiFrobenius, rho: Representation) -> EquivariantQF:
    """Check the module law, that every rho_x is a derivation of q, and
    that every rho_x preserves beta.

    Failures are reported as (x,) for derivations and (x, u, v) for
    invariance.
    """
    q = q_beta.algebra
    if rho.source.dim != g.dim or rho.dim != q.dim:
        raise DimensionMismatch(
            f"action of a {rho.source.dim}-dim algebra on a {rho.dim}-dim module; "
            f"expected {g.dim} on {q.dim}")
    module_law = validate_representation(Representation(g, rho.dim, rho.matrices))
    derivation = next((CheckReport(False, (i,)) for i, m in enumerate(rho.matrices)
                       if not is_derivation(q, m)), CheckReport(True))
    invariance = CheckReport(True)
    for i, m in enumerate(rho.matrices):
        rep = _invariance(q_beta.form.gram, m)
        if not rep:
            invariance = CheckReport(False, (i,) + rep.first_failure)
            break
    return EquivariantQF(g, q_beta, rho, module_law, derivation, invariance)


@dataclass(frozen=True)
class EquivariantMorphismReport:
    qf_hom: bool
    equivariant: bool
    detail: MorphismReport


def _same_algebra(a: LieAlgebra, b: LieAlgebra) -> bool:
    return a.dim == b.dim and a.c == b.c


def check_equivariant_morphism(psi: Matrix, src: EquivariantQF, dst: EquivariantQF) -> EquivariantMorphismReport:
    if not _same_algebra(src.acting, dst.acting):
        raise ActingAlgebraMismatch("source and target are acted on by different algebras")
    detail = check_qf_morphism(psi, src.target, dst.target)
    equivariant = all(psi @ phi == mu @ psi
                      for phi, mu in zip(src.action.matrices, dst.action.matrices))
    return EquivariantMorphismReport(detail.lie_hom and detail.pullback, equivariant, detail)


def dual_algebra_of_r(g: LieAlgebra, r: RMatrix) -> LieAlgebra:
    """g* with the bracket dual to delta r."""
    return LieAlgebra(f"{g.name}s", tuple(dual_label(x) for x in g.basis),
                      dual_bracket_from_cobracket(cobracket_from_r(g, r)))


def induce_dual_action(e: EquivariantQF, r: RMatrix) -> Representation:
    """psi(xi) = sum_i xi(a_i) phi(b_i) over the basis expansion of r.

    With r = sum r[i, j] e_i (x) e_j this is psi(e_i*) = sum_j r[i, j] phi(e_j).
    """
    g = e.acting
    if r.algebra.dim != g.dim:
        raise DimensionMismatch(f"r-matrix on a {r.algebra.dim}-dim algebra, expected {g.dim}")
    cl = classify_r(g, r)
    if not cl.cybe:
        idx = cl.first_cybe_failure()
        raise CYBEViolation(f"r does not satisfy the classical Yang-Baxter equation: "
                            f"[[r,r]]{list(idx)} = {cl.yb[idx]}", idx, cl.yb[idx])
    phi = e.action
    psi = tuple(lincomb(r.r.row(i), phi.matrices, phi.dim) for i in range(g.dim))
    return Representation(dual_algebra_of_r(g, r), phi.dim, psi)


def check_mixed_compatibility(phi: Representation, psi: Representation, b: LieBialgebra) -> CheckReport:
    """psi(ad*_x xi) - phi(ad*_xi x) == [phi_x, psi_xi] for basis x and xi.

    Failures are reported as (i, a) for x = e_i, xi = e_a*.
    """
    g, gamma = b.algebra, b.cobracket
    n = g.dim
    if phi.source.dim != n or psi.source.dim != n:
        raise DimensionMismatch("actions must come from g and g* of the given bialgebra")
    if phi.dim != psi.dim:
        raise DimensionMismatch(f"modules of dims {phi.dim} and {psi.dim}")
    for i, a in product(range(n), repeat=2):
        lhs = psi.at(coadjoint_on_dual(g, i, a)) - phi.at(coadjoint_on_g(gamma, a, i))
        if lhs != phi.matrices[i].commutator(psi.matrices[a]):
            return CheckReport(False, (i, a))
    return CheckReport(True)


@dataclass(frozen=True)
class DoubleAction:
    """A D(g)-action assembled from phi and the induced psi, with its checks."""

    double: DoubleAlgebra
    psi: Representation
    structure: EquivariantQF
    mixed: CheckReport

    @property
    def valid(self) -> bool:
        return self.structure.valid and self.mixed.ok

    def restricted_to_g(self) -> tuple[Matrix, ...]:
        return self.structure.restrict(range(self.double.n))


def assemble_double_action(e: EquivariantQF, r: RMatrix) -> DoubleAction:
    """rho(x + xi) = phi(x) + psi(xi) on D(g) for the bialgebra (g, delta r).

    Every module, derivation and invariance check is re-run over D(g).
    """
    psi = induce_dual_action(e, r)
    g = e.acting
    b = validate_bialgebra(g, cobracket_from_r(g, r))
    d = build_double(b)
    rho = Representation(d.total, e.action.dim, e.action.matrices + psi.matrices)
    structure = validate_gqf(d.total, e.target, rho)
    mixed = check_mixed_compatibility(e.action, psi, b)
    return DoubleAction(d, psi, structure, mixed)
