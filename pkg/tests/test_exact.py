from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qfla import catalog
from qfla.errors import DimensionMismatch, SizeExceeded
from qfla.exact import (Matrix, MultiPoly, Tensor3, frac, poly_det, rank, rational_det_rank,
                        solve_linear)
from qfla.frobenius import bracket_poly_matrix

from strategies import matrices, rationals, skew_matrices, small


def to_sympy(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(x.numerator, x.denominator) for x in m.entries])


def poly_to_sympy(p: MultiPoly, syms):
    return sum((sympy.Rational(c.numerator, c.denominator)
                * sympy.Mul(*[s ** e for s, e in zip(syms, exps)]) for exps, c in p.terms.items()),
               sympy.Integer(0))


# -- scalars ----------------------------------------------------------------

def test_frac_refuses_floats():
    with pytest.raises(TypeError):
        frac(0.5)
    assert frac("3/6") == Fraction(1, 2)


@given(rationals, rationals, rationals)
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    for x in (a + b, a * b, a - c):
        assert x.denominator > 0
        assert sympy.gcd(abs(x.numerator), x.denominator) == 1


# -- matrices and tensors -----------------------------------------------------

def test_matrix_basics():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    assert a.T == Matrix.from_rows([[1, 3], [2, 4]])
    assert a @ Matrix.identity(2) == a
    assert a.apply((1, 0)) == (1, 3)
    assert a.column(1) == (2, 4)
    assert (a - a).is_zero()
    assert a.commutator(a).is_zero()
    with pytest.raises(DimensionMismatch):
        Matrix(2, 2, (1, 2, 3))
    assert "2x2" in repr(a)


def test_tensor_basics():
    t = Tensor3.from_dict((2, 2, 2), {(0, 1, 0): 1, (1, 0, 0): -1})
    assert t[0, 1, 0] == 1 and t[1, 1, 1] == 0
    assert list(t.nonzero()) == [((0, 1, 0), 1), ((1, 0, 0), -1)]
    assert (t - t).is_zero()
    assert t.slice(0) == Matrix.from_rows([[0, 0], [1, 0]])


# -- determinant and rank -----------------------------------------------------

def test_det_rank_examples():
    assert rational_det_rank(Matrix.identity(3))[:2] == (1, 3)
    gram = catalog.solvable_form().gram
    assert rational_det_rank(gram)[:2] == (4, 4)
    assert rational_det_rank(Matrix.zeros(2))[:2] == (0, 0)


def test_non_square_flagged():
    dr = rational_det_rank(Matrix.from_rows([[1, 2, 3]]))
    assert dr == (0, 1, False)


@given(st.integers(1, 5).flatmap(lambda n: matrices(n, n, rationals)))
def test_det_rank_matches_sympy(m):
    s = to_sympy(m)
    dr = rational_det_rank(m)
    assert dr.det == Fraction(str(s.det()))
    assert dr.rank == s.rank()


@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(lambda c: matrices(r, c))))
def test_rank_non_square_matches_sympy(m):
    assert rank(m) == to_sympy(m).rank()


@settings(max_examples=60)
@given(st.sampled_from([1, 3, 5, 7]).flatmap(skew_matrices))
def test_odd_skew_determinant_vanishes(m):
    assert rational_det_rank(m).det == 0


def test_solve_linear_examples():
    assert solve_linear(Matrix.identity(2), (1, 2)) == (1, 2)
    assert solve_linear(Matrix.zeros(1), (1,)) is None


@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.tuples(matrices(r, c), st.lists(small, min_size=c, max_size=c)))))
def test_solve_linear_consistent_systems(args):
    a, x = args
    b = a.apply([Fraction(v) for v in x])
    sol = solve_linear(a, b)
    assert sol is not None and a.apply(sol) == b


# -- polynomials --------------------------------------------------------------

def test_multipoly_arithmetic_and_order():
    x1, x2 = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
    p = (x1 + x2) ** 2
    assert p == x1 * x1 + x2 * x2 + x1 * x2 * 2
    assert p.degree == 2
    assert p.format() == "x1^2 + 2*x1*x2 + x2^2"
    assert (p - p).is_zero() and not (p - p)
    assert p.evaluate((1, 2)) == 9
    assert MultiPoly.constant(2, 0).terms == {}


def test_poly_det_examples():
    x = MultiPoly.variable(1, 0)
    assert poly_det([[x]]) == x
    x4 = MultiPoly.variable(4, 3)
    assert poly_det(bracket_poly_matrix(catalog.frobenius_4d())) == x4 ** 4
    assert poly_det(bracket_poly_matrix(catalog.filiform_4d())).is_zero()


def test_poly_det_guard():
    one = MultiPoly.constant(1, 1)
    with pytest.raises(SizeExceeded):
        poly_det([[one] * 13 for _ in range(13)])
    with pytest.raises(DimensionMismatch):
        poly_det([[one, one]])


def _poly_matrix(n, nvars=2):
    coeffs = st.lists(st.integers(-2, 2), min_size=nvars + 1, max_size=nvars + 1)

    def build(c):
        return MultiPoly.linear(c[:nvars]) + MultiPoly.constant(nvars, c[nvars])
    return st.lists(st.lists(coeffs.map(build), min_size=n, max_size=n), min_size=n, max_size=n)


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(_poly_matrix))
def test_poly_det_matches_sympy(m):
    syms = sympy.symbols("a b")
    sm = sympy.Matrix([[poly_to_sympy(p, syms) for p in row] for row in m])
    assert sympy.expand(poly_to_sympy(poly_det(m), syms) - sm.det(method="berkowitz")) == 0


@settings(max_examples=60)
@given(st.integers(3, 4).flatmap(_poly_matrix), st.data())
def test_poly_det_duplicated_row_is_zero(m, data):
    i = data.draw(st.integers(0, len(m) - 1))
    j = data.draw(st.integers(0, len(m) - 1).filter(lambda j: j != i))
    m = [list(r) for r in m]
    m[j] = m[i]
    assert poly_det(m).is_zero()


@given(st.integers(1, 5).flatmap(lambda n: matrices(n, n, rationals)))
def test_poly_det_on_constants_matches_rational(m):
    pm = [[MultiPoly.constant(1, m[i, j]) for j in range(m.cols)] for i in range(m.rows)]
    d = poly_det(pm)
    assert d.evaluate((0,)) == rational_det_rank(m).det
    assert d.degree <= 0
