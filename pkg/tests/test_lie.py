from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qfla import catalog
from qfla.errors import DimensionMismatch
from qfla.exact import Matrix, Tensor3, basis_vec
from qfla.lie import (LieAlgebra, Representation, ad_basis, ad_matrix, bracket, coadjoint_matrix,
                      dual_representation, is_derivation, transport, validate_lie,
                      validate_representation)

from strategies import SMALL_ALGEBRAS, algebra_and_vector, invertible, jacobi_oracle, lie_algebras


def e(n, i):
    return basis_vec(n, i)


def test_validate_lie_examples():
    assert validate_lie(Tensor3.zeros(3)).ok
    assert validate_lie(catalog.frobenius_4d().c).ok
    sym = Tensor3.from_dict((3, 3, 3), {(0, 1, 0): 1, (1, 0, 0): 1})
    rep = validate_lie(sym)
    assert not rep.antisymmetry and rep.first_failure == (0, 1, 0)


def test_validate_lie_jacobi_failure_first_triple():
    bad = LieAlgebra.from_brackets("bad", ["e1", "e2", "e3"],
                                   {("e1", "e2"): {"e2": 1}, ("e2", "e3"): {"e1": 1}})
    rep = validate_lie(bad.c)
    assert rep.antisymmetry and not rep.jacobi
    assert rep.first_failure == (0, 1, 2)
    assert any(jacobi_oracle(bad, e(3, 0), e(3, 1), e(3, 2)))


def test_validate_lie_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        validate_lie(Tensor3.zeros(2, 2, 3))


@pytest.mark.parametrize("g", catalog.bundled_algebras(), ids=lambda g: g.name)
def test_bundled_algebras_are_lie(g):
    assert validate_lie(g.c).ok
    for i, j, k in product(range(min(g.dim, 4)), repeat=3):
        assert not any(jacobi_oracle(g, e(g.dim, i), e(g.dim, j), e(g.dim, k)))


def test_bracket_examples():
    u = catalog.two_dim_nonabelian()
    assert bracket(u, e(2, 0), e(2, 1)) == e(2, 1)
    a2 = catalog.affine(2)
    assert bracket(a2, e(6, a2.index("E1_2")), e(6, a2.index("E2_3"))) == e(6, a2.index("E1_3"))
    with pytest.raises(DimensionMismatch):
        bracket(u, (1,), (1, 0))


@given(algebra_and_vector())
def test_bracket_self_vanishes(gx):
    g, x = gx
    assert not any(bracket(g, x, x))


def test_ad_examples():
    assert ad_matrix(LieAlgebra.abelian(3), (1, 2, 3)).is_zero()
    g = catalog.triangular_2d()
    adx = ad_matrix(g, e(2, 0))
    assert adx.apply(e(2, 1)) == e(2, 0) and adx.apply(e(2, 0)) == (0, 0)
    fil = catalog.filiform_4d()
    ad1 = ad_matrix(fil, e(4, 0))
    assert ad1.apply(e(4, 1)) == e(4, 2) and ad1.apply(e(4, 2)) == e(4, 3)


def test_coadjoint_examples():
    assert coadjoint_matrix(LieAlgebra.abelian(2), (1, 1)).is_zero()
    g = catalog.triangular_2d()
    assert coadjoint_matrix(g, e(2, 0)).apply(e(2, 0)) == (0, -1)   # ad*_x x* = -y*
    assert coadjoint_matrix(g, e(2, 1)).apply(e(2, 0)) == (1, 0)    # ad*_y x* = x*


def test_representation_examples():
    assert validate_representation(Representation.zero(catalog.solvable_4d(), 3)).ok
    assert validate_representation(catalog.symmetry_action()).ok
    phi = catalog.triangular_action()
    assert validate_representation(phi).ok
    assert phi.matrices[0].commutator(phi.matrices[1]) == phi.matrices[0]


def test_representation_failure_pair():
    g = catalog.triangular_2d()
    wrong = Representation(g, 2, (Matrix.identity(2), Matrix.zeros(2)))
    rep = validate_representation(wrong)
    assert not rep.ok and rep.first_failure == (0, 1)


def test_dual_representation_examples():
    g = catalog.triangular_2d()
    assert dual_representation(Representation.zero(g, 2)) == Representation.zero(g, 2)
    dual_ad = dual_representation(Representation.adjoint(g))
    assert dual_ad.matrices == tuple(coadjoint_matrix(g, e(2, i)) for i in range(2))
    dual_phi = dual_representation(catalog.triangular_action())
    h = Fraction(1, 2)
    assert dual_phi.matrices[1] == Matrix.from_rows(
        [[0, 0, 0, 0], [0, h, 0, 0], [0, 0, -h, 0], [0, 0, 0, 0]])
    assert validate_representation(dual_phi).ok
    with pytest.raises(ValueError):
        dual_representation(Representation(g, 2, (Matrix.identity(2), Matrix.zeros(2))))


def test_derivation_examples():
    f4 = catalog.frobenius_4d()
    assert is_derivation(f4, Matrix.zeros(4))
    assert is_derivation(f4, ad_matrix(f4, e(4, 0)))
    assert is_derivation(catalog.solvable_4d(), catalog.symmetry_operator(0, 0, 1))
    assert not is_derivation(catalog.heisenberg(), Matrix.identity(3))
    with pytest.raises(DimensionMismatch):
        is_derivation(f4, Matrix.zeros(3))


def test_from_brackets_conflict():
    with pytest.raises(ValueError):
        LieAlgebra.from_brackets("x", ["a", "b"], {("a", "b"): {"a": 1}, ("b", "a"): {"a": 1}})


@given(st.sampled_from(SMALL_ALGEBRAS).flatmap(lambda g: st.tuples(st.just(g), invertible(g.dim))))
def test_change_of_basis_keeps_verdict(gs):
    g, s = gs
    assert validate_lie(transport(g, s).c).ok == validate_lie(g.c).ok


@given(st.data())
def test_change_of_basis_keeps_failure(data):
    bad = LieAlgebra.from_brackets("bad", ["e1", "e2", "e3"],
                                   {("e1", "e2"): {"e2": 1}, ("e2", "e3"): {"e1": 1}})
    s = data.draw(invertible(3))
    assert not validate_lie(transport(bad, s).c).ok


@given(algebra_and_vector())
def test_ad_is_derivation(gx):
    g, x = gx
    assert is_derivation(g, ad_matrix(g, x))


@given(lie_algebras())
def test_adjoint_is_representation_and_dual_involutive(g):
    ad = Representation.adjoint(g)
    assert validate_representation(ad).ok
    assert dual_representation(dual_representation(ad)).matrices == ad.matrices
    assert tuple(ad_basis(g)) == ad.matrices
