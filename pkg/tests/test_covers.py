import cmath

import pytest
import sympy

from transient.catalog import default_catalog
from transient.covers import (
    GoeritzMatrix,
    InvalidMatrixError,
    SeifertMatrix,
    alexander_polynomial,
    cover_homology,
    cover_presentation,
    fox_order,
    format_homology,
    goeritz_matrix,
    parse_homology,
    seifert_matrix_from_braid,
)
from transient.exactalg import AbelianGroup, IntMatrix, IntPolynomial, det, group_from_presentation
from transient.knotcodes import parse_braid, parse_pd, reconstruct_diagram

from conftest import FIGURE_EIGHT_PD, KINK_PD, TREFOIL_PD

TREFOIL_BRAID = "2: 1 1 1"
FIGURE_EIGHT_BRAID = "3: 1 -2 1 -2"


def seifert(braid):
    return seifert_matrix_from_braid(parse_braid(braid))


def goeritz(pd):
    return goeritz_matrix(reconstruct_diagram(parse_pd(pd)))


def companion_presentation(s, p):
    """Presentation of H1 of the p-fold cover as a module over Z[t]/(1 + t + ... + t^(p-1))."""
    n = p - 1
    c = IntMatrix.from_rows(
        [[(1 if i == j + 1 else 0) - (1 if j == n - 1 else 0) for j in range(n)] for i in range(n)], n)
    return s.v.kron(c) - s.v.T.kron(IntMatrix.identity(n))


def sympy_alexander(s):
    t = sympy.symbols("t")
    v = sympy.Matrix(s.v.to_rows())
    poly = sympy.Poly(sympy.expand((v - t * v.T).det()), t)
    coeffs = list(reversed(poly.all_coeffs()))
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return tuple(int(c) for c in coeffs)


def numeric_fox(delta, p):
    value = 1.0
    for j in range(1, p):
        value *= abs(delta(cmath.exp(2j * cmath.pi * j / p)))
    return value


# -- Goeritz -----------------------------------------------------------------

@pytest.mark.parametrize("pd,expected", [(TREFOIL_PD, 3), (FIGURE_EIGHT_PD, 5), (KINK_PD, 1)])
def test_goeritz_determinants(pd, expected):
    g = goeritz(pd)
    assert abs(det(g.g)) == expected
    assert g.g == g.g.T


def test_goeritz_size_is_white_regions_minus_one():
    # unbounded face white: for the trefoil the white regions are the two triangles
    d = reconstruct_diagram(parse_pd(TREFOIL_PD))
    assert sum(d.white) == 2
    assert goeritz_matrix(d).g == IntMatrix.from_rows([[-3]])
    d8 = reconstruct_diagram(parse_pd(FIGURE_EIGHT_PD))
    assert goeritz_matrix(d8).g.rows == sum(d8.white) - 1


def test_goeritz_validation():
    with pytest.raises(InvalidMatrixError):
        GoeritzMatrix(IntMatrix.from_rows([[1, 2], [3, 4]]))
    with pytest.raises(InvalidMatrixError):
        GoeritzMatrix(IntMatrix.from_rows([[2]]))


# -- Seifert matrices ------------------------------------------------------

def test_braid_seifert_examples():
    tre = seifert(TREFOIL_BRAID)
    fig = seifert(FIGURE_EIGHT_BRAID)
    assert tre.v.rows == fig.v.rows == 2
    assert abs(det(tre.v + tre.v.T)) == 3
    assert abs(det(fig.v + fig.v.T)) == 5
    assert seifert("1:").v.rows == 0


def test_seifert_size_matches_surface_rank():
    for rec in default_catalog():
        if rec.braid is not None:
            k, n = len(rec.braid.letters), rec.braid.strands
            assert seifert_matrix_from_braid(rec.braid).v.rows == k - n + 1


def test_seifert_validation():
    with pytest.raises(InvalidMatrixError):
        SeifertMatrix(IntMatrix.from_rows([[1]]))
    with pytest.raises(InvalidMatrixError):
        SeifertMatrix(IntMatrix.from_rows([[1, 0], [0, 1]]))


# -- Alexander polynomial ----------------------------------------------------

def test_alexander_examples():
    assert alexander_polynomial(seifert(TREFOIL_BRAID)).coefficients == (1, -1, 1)
    fig = alexander_polynomial(seifert(FIGURE_EIGHT_BRAID)).coefficients
    assert fig in ((1, -3, 1), (-1, 3, -1))
    assert alexander_polynomial(seifert("1:")).coefficients == (1,)


def test_alexander_properties_on_catalog():
    for rec in default_catalog():
        if rec.braid is None:
            continue
        delta = alexander_polynomial(seifert_matrix_from_braid(rec.braid))
        assert abs(delta(1)) == 1
        assert delta.coefficients == tuple(reversed(delta.coefficients))


def test_alexander_against_symbolic_determinant():
    for rec in list(default_catalog())[:60]:
        s = rec.seifert_source()
        if s.v.rows:
            assert alexander_polynomial(s).coefficients == sympy_alexander(s)


# -- covers ------------------------------------------------------------------

def test_cover_presentation_p2_is_symmetrized():
    s = seifert(FIGURE_EIGHT_BRAID)
    assert cover_presentation(s, 2) == s.v + s.v.T
    assert cover_presentation(s, 4).rows == 2 * 3


@pytest.mark.parametrize("braid,p,expected", [
    (TREFOIL_BRAID, 2, AbelianGroup((3,))),
    (TREFOIL_BRAID, 3, AbelianGroup((2, 2))),
    (FIGURE_EIGHT_BRAID, 3, AbelianGroup((4, 4))),
    (TREFOIL_BRAID, 6, AbelianGroup((), 2)),
])
def test_cover_examples(braid, p, expected):
    assert cover_homology(seifert(braid), p) == expected


def test_cover_presentation_rejects_small_p():
    with pytest.raises(ValueError):
        cover_presentation(seifert(TREFOIL_BRAID), 1)


def test_goeritz_source_only_double_cover():
    g = goeritz(TREFOIL_PD)
    assert cover_homology(g, 2) == AbelianGroup((3,))
    with pytest.raises(ValueError):
        cover_homology(g, 3)


@pytest.mark.parametrize("name,p,torsion,free", [
    ("10_99", 2, (9, 9), 0),
    ("12a_427", 4, (3, 3, 3, 3, 15, 15), 0),
    ("12a_427", 6, (4, 4, 20, 20), 4),
])
def test_catalog_cover_examples(name, p, torsion, free):
    rec = default_catalog().query(name)
    assert cover_homology(rec.seifert_source(), p) == AbelianGroup(torsion, free)


def test_tridiagonal_matches_companion_presentation():
    for rec in default_catalog():
        s = rec.seifert_source()
        if not s.v.rows or s.v.rows > 8:
            continue
        for p in (2, 3, 4, 5):
            assert cover_homology(s, p) == group_from_presentation(companion_presentation(s, p)), (rec.name, p)


def test_braid_and_vendored_seifert_agree():
    for rec in default_catalog():
        if rec.braid is None or rec.seifert is None:
            continue
        ours = seifert_matrix_from_braid(rec.braid)
        for p in (2, 3):
            assert cover_homology(ours, p) == cover_homology(rec.seifert, p), (rec.name, p)


def test_double_cover_order_odd():
    for rec in default_catalog():
        assert cover_homology(rec.seifert_source(), 2).order % 2 == 1


# -- Fox's formula -------------------------------------------------------------

def test_fox_examples():
    tre = alexander_polynomial(seifert(TREFOIL_BRAID))
    fig = alexander_polynomial(seifert(FIGURE_EIGHT_BRAID))
    assert fox_order(tre, 2) == 3
    assert fox_order(fig, 3) == 16
    assert fox_order(tre, 6) is None


def test_fox_against_numeric_roots():
    for rec in list(default_catalog())[:80]:
        delta = alexander_polynomial(rec.seifert_source())
        for p in range(2, 7):
            exact = fox_order(delta, p)
            approx = numeric_fox(delta, p)
            if exact is None:
                assert approx < 1e-6
            else:
                assert exact == round(approx)


def test_fox_rejects_small_p():
    with pytest.raises(ValueError):
        fox_order(IntPolynomial((1,)), 1)


# -- notation ----------------------------------------------------------------

@pytest.mark.parametrize("p,group,text", [
    (2, AbelianGroup((9, 9)), "{2,{9,9}}"),
    (6, AbelianGroup((2, 2, 2, 10, 20, 340), 2), "{6,{2,2,2,10,20,340,0,0}}"),
    (2, AbelianGroup(), "{2,{1}}"),
])
def test_format_and_parse_homology(p, group, text):
    assert format_homology(p, group) == text
    assert parse_homology(text) == (p, group)


def test_parse_homology_rejects_garbage():
    with pytest.raises(ValueError):
        parse_homology("{2,9,9}")
