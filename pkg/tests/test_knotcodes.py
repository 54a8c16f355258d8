import random

import pytest

from transient.knotcodes import (
    BraidWord,
    DanglingEdgeError,
    GeneratorRangeError,
    LinkNotKnotError,
    NonPlanarError,
    PdCode,
    PdSyntaxError,
    BraidSyntaxError,
    closure_components,
    format_braid,
    format_pd,
    parse_braid,
    parse_pd,
    reconstruct_diagram,
)
from transient.catalog import default_catalog

from conftest import FIGURE_EIGHT_PD, KINK_PD, TREFOIL_PD


def test_parse_trefoil():
    pd = parse_pd(TREFOIL_PD)
    assert len(pd) == 3
    assert pd.crossings[0] == (1, 4, 2, 5)


def test_parse_figure_eight():
    assert len(parse_pd(FIGURE_EIGHT_PD)) == 4


def test_list_form_and_whitespace():
    a = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]")
    b = parse_pd("  PD[ X(1, 4,2,5) ,X(3,6,4,1),\n X(5,2,6,3) ] ")
    assert a == b == parse_pd(TREFOIL_PD)


def test_dangling_labels_reported():
    with pytest.raises(DanglingEdgeError) as exc:
        parse_pd("PD[X(1,4,2,5),X(3,6,4,1)]")
    assert "[2, 3, 5, 6]" in str(exc.value)


def test_syntax_error_position():
    with pytest.raises(PdSyntaxError) as exc:
        parse_pd("PD[X(1,4,2;5)]")
    assert exc.value.position == 10


def test_syntax_error_trailing():
    with pytest.raises(PdSyntaxError):
        parse_pd(TREFOIL_PD + " x")


def test_nonpositive_label():
    with pytest.raises(PdSyntaxError):
        parse_pd("PD[X(0,1,1,0)]")


def test_two_component_pd():
    # standard Hopf link
    with pytest.raises(LinkNotKnotError):
        parse_pd("PD[X(4,1,3,2),X(2,3,1,4)]")


def test_braid_examples():
    assert parse_braid("2: 1 1 1") == BraidWord(2, (1, 1, 1))
    assert parse_braid("3: 1 -2 1 -2") == BraidWord(3, (1, -2, 1, -2))
    assert parse_braid("[1,-2,1,-2]") == BraidWord(3, (1, -2, 1, -2))
    assert parse_braid("1:") == BraidWord(1, ())


def test_hopf_braid_rejected():
    with pytest.raises(LinkNotKnotError, match="2 components"):
        parse_braid("2: 1 1")


@pytest.mark.parametrize("text,exc", [
    ("3: 1 3", GeneratorRangeError),
    ("2: 0 1", BraidSyntaxError),
    ("1 1 1", BraidSyntaxError),
    ("x: 1", BraidSyntaxError),
    ("[1, 2", BraidSyntaxError),
])
def test_braid_errors(text, exc):
    with pytest.raises(exc):
        parse_braid(text)


def _brute_components(n, letters):
    # follow each strand position through the word directly
    pos = list(range(n))
    for e in letters:
        i = abs(e) - 1
        pos = [i + 1 if p == i else i if p == i + 1 else p for p in pos]
    seen, count = set(), 0
    for s in range(n):
        if s in seen:
            continue
        count += 1
        k = s
        while k not in seen:
            seen.add(k)
            k = pos[k]
    return count


def test_closure_components_matches_strand_tracking():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 5)
        letters = [rng.choice([-1, 1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 8))] if n > 1 else []
        assert closure_components(n, letters) == _brute_components(n, letters)


@pytest.mark.parametrize("text,counts", [
    (TREFOIL_PD, (3, 6, 5)),
    (FIGURE_EIGHT_PD, (4, 8, 6)),
    (KINK_PD, (1, 2, 3)),
])
def test_face_counts(text, counts):
    d = reconstruct_diagram(parse_pd(text))
    assert (len(d.crossings), len(d.edges), len(d.faces)) == counts
    assert d.euler_characteristic == 2
    assert d.white[d.unbounded]


def test_nonplanar_pd():
    # a valid single-cycle labelling whose corner tracing is not spherical
    with pytest.raises(NonPlanarError):
        reconstruct_diagram(parse_pd("PD[X(1,2,3,4),X(1,3,2,4)]"))


def test_catalog_diagrams_are_checkerboard():
    for rec in default_catalog():
        if rec.pd is None:
            continue
        d = reconstruct_diagram(rec.pd)
        c = len(d.crossings)
        assert (len(d.edges), len(d.faces)) == (2 * c, c + 2)
        for label in d.edges:
            sides = [f for f, face in enumerate(d.faces)
                     if any(d.crossings[x][s] == label for x, s in face)]
            assert len(sides) == 2 and d.white[sides[0]] != d.white[sides[1]]


def test_round_trips():
    for rec in default_catalog():
        if rec.pd is not None:
            assert parse_pd(format_pd(rec.pd)) == rec.pd
        if rec.braid is not None:
            assert parse_braid(format_braid(rec.braid)) == rec.braid


def test_pdcode_is_hashable_and_immutable():
    pd = parse_pd(TREFOIL_PD)
    assert hash(pd) == hash(PdCode(pd.crossings))
    with pytest.raises(AttributeError):
        pd.crossings = ()
