"""Ready-made algebras, forms and actions used across tests and the corpus."""

from __future__ import annotations

from fractions import Fraction

from .bialgebra import RMatrix
from .exact import Matrix
from .frobenius import SkewForm
from .lie import LieAlgebra, Representation

half = Fraction(1, 2)


def frobenius_4d() -> LieAlgebra:
    """4-dim Frobenius algebra; det([x_i, x_j]) = x4^4."""
    return LieAlgebra.from_brackets("frob4", ["x1", "x2", "x3", "x4"], {
        ("x1", "x2"): {"x2": half, "x3": 1},
        ("x1", "x3"): {"x3": half},
        ("x1", "x4"): {"x4": 1},
        ("x2", "x3"): {"x4": 1},
    })


def filiform_4d() -> LieAlgebra:
    """4-dim nilpotent algebra, quasi-Frobenius but not Frobenius."""
    return LieAlgebra.from_brackets("fil4", ["x1", "x2", "x3", "x4"], {
        ("x1", "x2"): {"x3": 1},
        ("x1", "x3"): {"x4": 1},
    })


def filiform_form() -> SkewForm:
    """x1* ^ x4* + x2* ^ x3*."""
    return SkewForm.from_wedges(filiform_4d(), [(0, 3, 1), (1, 2, 1)])


def affine_basis(n: int) -> list[tuple[int, int]]:
    """Index pairs (i, j), 1 <= i <= n, 1 <= j <= n + 1, in row-major order."""
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 2)]


def affine(n: int) -> LieAlgebra:
    """a(n): [E_ij, E_kl] = d_jk E_il - d_li E_kj."""
    pairs = affine_basis(n)
    pos = {p: t for t, p in enumerate(pairs)}
    labels = [f"E{i}_{j}" for i, j in pairs]
    brackets: dict = {}
    for (i, j) in pairs:
        for (k, l) in pairs:
            if pos[i, j] >= pos[k, l]:
                continue
            combo: dict = {}
            if j == k:
                lab = labels[pos[i, l]]
                combo[lab] = combo.get(lab, 0) + 1
            if l == i:
                lab = labels[pos[k, j]]
                combo[lab] = combo.get(lab, 0) - 1
            combo = {a: c for a, c in combo.items() if c}
            if combo:
                brackets[labels[pos[i, j]], labels[pos[k, l]]] = combo
    return LieAlgebra.from_brackets(f"aff{n}", labels, brackets)


def affine_functional(n: int) -> tuple:
    """E12* + E23* + ... + E_{n,n+1}*."""
    return tuple(Fraction(int(j == i + 1)) for i, j in affine_basis(n))


def affine_gram_formula(n: int) -> Matrix:
    """beta(E_ij, E_kl) = d_jk d_{l,i+1} - d_li d_{j,k+1}, straight from the formula."""
    pairs = affine_basis(n)
    return Matrix.from_function(len(pairs), len(pairs), lambda s, t: (
        int(pairs[s][1] == pairs[t][0] and pairs[t][1] == pairs[s][0] + 1)
        - int(pairs[t][1] == pairs[s][0] and pairs[s][1] == pairs[t][0] + 1)))


def two_dim_nonabelian(x: str = "u1", y: str = "u2", image: str | None = None) -> LieAlgebra:
    """[x, y] = image, where image is y (default) or x."""
    return LieAlgebra.from_brackets(f"{x}{y}", [x, y], {(x, y): {image or y: 1}})


def triangular_2d() -> LieAlgebra:
    """[x, y] = x; carries the triangular r-matrix y ^ x."""
    return LieAlgebra.from_brackets("g", ["x", "y"], {("x", "y"): {"x": 1}})


def triangular_r() -> RMatrix:
    """r = y ^ x = y (x) x - x (x) y."""
    return RMatrix.from_terms(triangular_2d(), [(1, 0, 1), (0, 1, -1)])


def solvable_4d() -> LieAlgebra:
    """[e1,e2]=e2, [e1,e3]=e3, [e1,e4]=2e4, [e2,e3]=e4."""
    return LieAlgebra.from_brackets("q", ["e1", "e2", "e3", "e4"], {
        ("e1", "e2"): {"e2": 1},
        ("e1", "e3"): {"e3": 1},
        ("e1", "e4"): {"e4": 2},
        ("e2", "e3"): {"e4": 1},
    })


def solvable_form() -> SkewForm:
    """alpha([u, v]) for alpha = e4*; gram rows (0,0,0,2),(0,0,1,0),(0,-1,0,0),(-2,0,0,0)."""
    return SkewForm(solvable_4d(), Matrix.from_rows(
        [[0, 0, 0, 2], [0, 0, 1, 0], [0, -1, 0, 0], [-2, 0, 0, 0]]))


def symmetry_3d() -> LieAlgebra:
    """Infinitesimal symmetries of the solvable 4-dim form: [x2, x3] = 2 x3."""
    return LieAlgebra.from_brackets("sym3", ["x1", "x2", "x3"], {("x2", "x3"): {"x3": 2}})


def symmetry_operator(a1, a2, a3) -> Matrix:
    return Matrix.from_rows([
        [0, 0, 0, 0],
        [0, a2, a3, 0],
        [0, 0, -a2, 0],
        [a1, 0, 0, 0],
    ])


def symmetry_action() -> Representation:
    return Representation(symmetry_3d(), 4, (
        symmetry_operator(1, 0, 0), symmetry_operator(0, 1, 0), symmetry_operator(0, 0, 1)))


def phi_x() -> Matrix:
    """e3 -> e2."""
    return symmetry_operator(0, 0, 1)


def phi_y() -> Matrix:
    """e2 -> -1/2 e2, e3 -> 1/2 e3."""
    return symmetry_operator(0, -half, 0)


def triangular_action() -> Representation:
    """The 2-dim algebra [x, y] = x acting on the solvable 4-dim algebra."""
    return Representation(triangular_2d(), 4, (phi_x(), phi_y()))


def heisenberg() -> LieAlgebra:
    return LieAlgebra.from_brackets("heis", ["e1", "e2", "e3"], {("e1", "e2"): {"e3": 1}})


def bundled_algebras() -> list[LieAlgebra]:
    return [
        LieAlgebra.abelian(1), LieAlgebra.abelian(2, name="ab2"), LieAlgebra.abelian(3, name="ab3"),
        two_dim_nonabelian(), triangular_2d(), heisenberg(), symmetry_3d(),
        frobenius_4d(), filiform_4d(), solvable_4d(), affine(1), affine(2),
    ]
