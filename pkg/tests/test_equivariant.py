from fractions import Fraction

import pytest

from qfla import catalog
from qfla.bialgebra import Cobracket, RMatrix, cobracket_from_r, validate_bialgebra
from qfla.equivariant import (assemble_double_action, check_equivariant_morphism,
                              check_mixed_compatibility, induce_dual_action, validate_gqf)
from qfla.errors import ActingAlgebraMismatch, CYBEViolation, DimensionMismatch
from qfla.exact import Matrix
from qfla.frobenius import quasi_frobenius
from qfla.lie import LieAlgebra, Representation, validate_representation


@pytest.fixture
def qf():
    return quasi_frobenius(catalog.solvable_form())


@pytest.fixture
def structure(qf):
    return validate_gqf(catalog.triangular_2d(), qf, catalog.triangular_action())


def flags(e):
    return (e.module_law.ok, e.derivation.ok, e.invariance.ok)


def matrix_invariance(e) -> bool:
    """G rho_x is symmetric for every generator: a second oracle for invariance.

    With G skew, rho^T G + G rho = 0 is the same as (G rho)^T = G rho.
    """
    gram = e.target.form.gram
    return all((gram @ m).T == gram @ m for m in e.action.matrices)


def test_trivial_action_valid(qf):
    g = catalog.symmetry_3d()
    e = validate_gqf(g, qf, Representation.zero(g, 4))
    assert e.valid and flags(e) == (True, True, True)


def test_symmetry_action_valid(qf):
    e = validate_gqf(catalog.symmetry_3d(), qf, catalog.symmetry_action())
    assert e.valid and matrix_invariance(e)


def test_triangular_action_valid(structure):
    assert structure.valid and matrix_invariance(structure)


def test_invariance_failure_reported(qf):
    g = LieAlgebra.abelian(1)
    rho = Representation(g, 4, (Matrix.identity(4),))
    e = validate_gqf(g, qf, rho)
    assert e.module_law.ok and not e.derivation.ok and not e.invariance.ok
    assert e.derivation.first_failure == (0,)
    assert e.invariance.first_failure == (0, 0, 3)
    assert not matrix_invariance(e)


def test_dimension_mismatch(qf):
    g = catalog.triangular_2d()
    with pytest.raises(DimensionMismatch):
        validate_gqf(g, qf, Representation.zero(g, 3))


def test_equivariant_morphisms(qf, structure):
    g = catalog.triangular_2d()
    rep = check_equivariant_morphism(Matrix.identity(4), structure, structure)
    assert rep.qf_hom and rep.equivariant
    trivial = validate_gqf(g, qf, Representation.zero(g, 4))
    assert not check_equivariant_morphism(Matrix.identity(4), structure, trivial).equivariant
    assert not check_equivariant_morphism(Matrix.zeros(4), structure, structure).qf_hom
    other = validate_gqf(catalog.symmetry_3d(), qf, catalog.symmetry_action())
    with pytest.raises(ActingAlgebraMismatch):
        check_equivariant_morphism(Matrix.identity(4), structure, other)


def test_induced_action_of_triangular_r(structure):
    psi = induce_dual_action(structure, catalog.triangular_r())
    assert psi.matrices[0] == -catalog.phi_y()
    assert psi.matrices[1] == catalog.phi_x()
    assert validate_representation(psi).ok
    assert psi.source.basis == ("xs", "ys")


def test_induced_action_zero_cases(qf, structure):
    g = catalog.triangular_2d()
    assert all(m.is_zero() for m in induce_dual_action(structure, RMatrix.zero(g)).matrices)
    trivial = validate_gqf(g, qf, Representation.zero(g, 4))
    assert all(m.is_zero() for m in induce_dual_action(trivial, catalog.triangular_r()).matrices)


def test_induced_action_rejects_non_cybe(structure):
    g = catalog.triangular_2d()
    with pytest.raises(CYBEViolation) as err:
        induce_dual_action(structure, RMatrix.from_terms(g, [(0, 1, 1)]))
    assert err.value.kind == "cybe-violation"
    assert err.value.first_failure == (0, 0, 1) and err.value.value == -1


def test_induced_action_is_equivariant_structure(qf, structure):
    psi = induce_dual_action(structure, catalog.triangular_r())
    e_dual = validate_gqf(psi.source, qf, psi)
    assert e_dual.valid and matrix_invariance(e_dual)


def test_mixed_compatibility(structure):
    g = catalog.triangular_2d()
    b = validate_bialgebra(g, cobracket_from_r(g, catalog.triangular_r()))
    psi = induce_dual_action(structure, catalog.triangular_r())
    assert check_mixed_compatibility(structure.action, psi, b).ok
    zero_phi, zero_psi = Representation.zero(g, 4), Representation.zero(psi.source, 4)
    assert check_mixed_compatibility(zero_phi, zero_psi, b).ok
    negated = Representation(psi.source, 4, tuple(-m for m in psi.matrices))
    rep = check_mixed_compatibility(structure.action, negated, b)
    # the identity happens to hold at (x, x*); the first violation is at (y, x*)
    assert not rep.ok and rep.first_failure == (1, 0)
    with pytest.raises(DimensionMismatch):
        check_mixed_compatibility(structure.action, Representation.zero(psi.source, 3), b)


def test_assemble_triangular_action(structure):
    da = assemble_double_action(structure, catalog.triangular_r())
    assert da.valid
    assert da.double.total.dim == 4
    assert da.restricted_to_g() == structure.action.matrices
    assert da.structure.action.matrices[2] == -catalog.phi_y()
    assert flags(da.structure) == (True, True, True)


def test_assemble_trivial_bialgebra(qf, structure):
    g = catalog.triangular_2d()
    da = assemble_double_action(structure, RMatrix.zero(g))
    assert da.valid
    assert da.structure.action.matrices == structure.action.matrices + (Matrix.zeros(4),) * 2
    trivial = validate_gqf(g, qf, Representation.zero(g, 4))
    assert assemble_double_action(trivial, RMatrix.zero(g)).valid


@pytest.mark.parametrize("r", [catalog.triangular_r(), RMatrix.zero(catalog.triangular_2d()),
                               RMatrix.from_terms(catalog.triangular_2d(), [(0, 1, 3), (1, 0, -3)])],
                         ids=["y^x", "zero", "3x^y"])
def test_double_action_decomposition(qf, structure, r):
    g = catalog.triangular_2d()
    psi = induce_dual_action(structure, r)
    b = validate_bialgebra(g, cobracket_from_r(g, r))
    three_way = (check_mixed_compatibility(structure.action, psi, b).ok and structure.valid
                 and validate_gqf(psi.source, qf, psi).valid)
    da = assemble_double_action(structure, r)
    assert da.valid == three_way
    assert da.restricted_to_g() == structure.action.matrices


def test_half_scaled_action_still_valid(qf):
    # any scalar multiple of phi_y alone spans an abelian acting algebra
    g = LieAlgebra.abelian(1)
    rho = Representation(g, 4, (catalog.phi_y().scale(Fraction(7, 3)),))
    assert validate_gqf(g, qf, rho).valid
    assert validate_bialgebra(g, Cobracket.zero(g)).valid
