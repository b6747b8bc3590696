from itertools import product

import pytest
from hypothesis import given

from qfla import catalog
from qfla.bialgebra import (Cobracket, Verdict, classify_r, cobracket_from_r,
                            dual_bracket_from_cobracket, validate_bialgebra)
from qfla.double import (build_double, canonical_r, check_pairing_invariance, double_cobracket,
                         pairing_eval, pairing_matrix)
from qfla.errors import DimensionMismatch, InvalidBialgebra
from qfla.exact import Matrix, Tensor3, basis_vec
from qfla.lie import LieAlgebra, bracket, validate_lie

from strategies import bialgebras, outer


def relations(t: LieAlgebra) -> dict:
    """{(a, b): {c: coeff}} over pairs of labels with a before b."""
    return {(t.basis[i], t.basis[j]): {t.basis[k]: c for k, c in enumerate(v) if c}
            for i, j, v in t.relations()}


@pytest.fixture
def g():
    return catalog.triangular_2d()


@pytest.fixture
def triangular_double(g):
    return build_double(validate_bialgebra(g, cobracket_from_r(g, catalog.triangular_r())))


def test_triangular_double_relations(triangular_double):
    t = triangular_double.total
    assert t.basis == ("x", "y", "xs", "ys")
    assert relations(t) == {
        ("x", "y"): {"x": 1},
        ("xs", "ys"): {"ys": 1},
        ("x", "xs"): {"ys": -1},
        ("y", "xs"): {"xs": 1, "y": 1},
        ("y", "ys"): {"x": -1},
    }
    assert not any(bracket(t, basis_vec(4, 0), basis_vec(4, 3)))      # [x, y*] = 0


def test_trivial_cobracket_double(g):
    t = build_double(validate_bialgebra(g, Cobracket.zero(g))).total
    assert relations(t) == {("x", "y"): {"x": 1}, ("x", "xs"): {"ys": -1}, ("y", "xs"): {"xs": 1}}


def test_one_dim_abelian_double():
    a = LieAlgebra.abelian(1)
    d = build_double(validate_bialgebra(a, Cobracket.zero(a)))
    assert d.total.dim == 2 and d.total.c.is_zero()
    assert canonical_r(d).r == Matrix.from_rows([[0, 1], [0, 0]])


def test_pairing_eval(triangular_double):
    d = triangular_double
    e = [basis_vec(4, i) for i in range(4)]
    assert pairing_eval(d, e[0], e[1]) == 0
    assert pairing_eval(d, e[0], e[2]) == 1 and pairing_eval(d, e[1], e[3]) == 1
    u = tuple(a + b for a, b in zip(e[0], e[2]))
    assert pairing_eval(d, u, u) == 2
    with pytest.raises(DimensionMismatch):
        pairing_eval(d, (1, 0), e[0])


def test_pairing_invariance_and_mutation(g, triangular_double):
    assert check_pairing_invariance(triangular_double).ok
    assert check_pairing_invariance(build_double(validate_bialgebra(g, Cobracket.zero(g)))).ok
    t = triangular_double.total
    values = dict(t.c.nonzero())
    values[1, 2, 2] = values.get((1, 2, 2), 0) + 1           # [y, x*] gains one more x*
    values[2, 1, 2] = values.get((2, 1, 2), 0) - 1
    mutated = LieAlgebra(t.name, t.basis, Tensor3.from_dict((4, 4, 4), values))
    rep = check_pairing_invariance(mutated, pairing_matrix(2))
    assert not rep.ok and rep.first_failure is not None


def test_canonical_r(triangular_double):
    r = canonical_r(triangular_double)
    expected = outer(basis_vec(4, 0), basis_vec(4, 2)) + outer(basis_vec(4, 1), basis_vec(4, 3))
    assert r.r == expected
    cl = classify_r(triangular_double.total, r)
    assert cl.verdict is Verdict.QUASITRIANGULAR and not cl.skew


def test_double_cobracket(g, triangular_double):
    d = triangular_double
    gd = double_cobracket(d)
    # gamma_D(y) = x ^ y
    assert gd.image(1) == outer(basis_vec(4, 0), basis_vec(4, 1)) - outer(basis_vec(4, 1), basis_vec(4, 0))
    assert gd.f == cobracket_from_r(d.total, canonical_r(d)).f
    zero = build_double(validate_bialgebra(g, Cobracket.zero(g)))
    gz = double_cobracket(zero)
    assert gz.image(0).is_zero() and gz.image(1).is_zero()
    # on g*: minus the dual of [x, y] = x, i.e. gamma_D(x*) = -(x* ^ y*)
    assert gz.image(2) == outer(basis_vec(4, 3), basis_vec(4, 2)) - outer(basis_vec(4, 2), basis_vec(4, 3))
    assert gz.f == cobracket_from_r(zero.total, canonical_r(zero)).f
    a = LieAlgebra.abelian(2)
    assert double_cobracket(build_double(validate_bialgebra(a, Cobracket.zero(a)))).f.is_zero()


def test_build_double_rejects_invalid_bialgebra():
    h = catalog.heisenberg()
    gamma = Cobracket.from_images(h, [Matrix.zeros(3), Matrix.zeros(3),
                                      outer(basis_vec(3, 0), basis_vec(3, 1))
                                      - outer(basis_vec(3, 1), basis_vec(3, 0))])
    with pytest.raises(InvalidBialgebra) as err:
        build_double(validate_bialgebra(h, gamma))
    assert err.value.first_failure == (0, 1)


def test_embeddings(triangular_double):
    d = triangular_double
    assert d.g_embedding.shape == (4, 2) and d.dual_embedding.column(0) == basis_vec(4, 2)


@given(bialgebras())
def test_double_laws(b):
    d = build_double(b)
    n, t = d.n, d.total
    assert validate_lie(t.c).ok
    assert check_pairing_invariance(d).ok
    assert double_cobracket(d).f == cobracket_from_r(t, canonical_r(d)).f
    cl = classify_r(t, canonical_r(d))
    assert cl.verdict is Verdict.QUASITRIANGULAR and not cl.skew
    dual = dual_bracket_from_cobracket(b.cobracket)
    for i, j, k in product(range(n), repeat=3):
        assert t.c[i, j, k] == b.algebra.c[i, j, k]
        assert t.c[n + i, n + j, n + k] == dual[i, j, k]
        assert t.c[i, j, n + k] == 0 and t.c[n + i, n + j, k] == 0
