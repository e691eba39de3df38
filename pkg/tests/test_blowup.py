"""Strict transforms of the origin blow-up and germ classification."""

import pytest

from icis.blowup import (BlowupReport, GermType, blowup_type_list,
                         classify_hypersurface_germ, strict_transform)
from icis.catalogue import normal_form
from icis.classify import random_linear_change
from icis.gb import contains
from icis.invariants import milnor_hyp, tjurina_hyp
from icis.poly import Polynomial, parse_polynomial
from icis.types import SingularityType


def P(s):
    return parse_polynomial(s)


def _germ(text):
    f = parse_polynomial(text, nvars=3)
    return classify_hypersurface_germ(f, milnor_hyp(f), tjurina_hyp(f))


# A(k), D(k), E(6..8): the full catalogue needed for the strict-transform
# germs of the unimodular families.
ADE_CASES = (
    [(f"x^2 + y^2 + z^{k + 1}", ("A", (k,))) for k in range(1, 13)]
    + [(f"x^2 + z*y^2 + z^{k - 1}", ("D", (k,))) for k in range(4, 11)]
    + [("x^3 + y^4 + z^2", ("E", (6,))),
       ("x^3 + x*y^3 + z^2", ("E", (7,))),
       ("x^3 + y^5 + z^2", ("E", (8,)))]
)


@pytest.mark.parametrize("text,expected", ADE_CASES,
                         ids=[f"{k}{i}" for _t, (k, i) in ADE_CASES])
def test_ade_germ_classifier(text, expected):
    assert _germ(text) == GermType(*expected)


def test_smooth_and_j_germs():
    assert _germ("x + y^5 + z^9").kind == "Smooth"
    # parabolic germ x^3 + x*y^4 (+ deformation) carries a modulus
    assert _germ("x^3 + x*y^4 + z^2") == GermType("J", (1, 0))
    assert _germ("x^3 + y^9 + z^2") == GermType("J", (2, 0))


def test_germ_render():
    assert GermType("A", (3,)).render() == "A3"
    assert GermType("J", (1, 2)).render() == "J1,2"
    report = BlowupReport(types=(GermType("A", (1,)), GermType("D", (5,))))
    assert report.render() == "{A1, D5}"
    assert BlowupReport(types=()).render() == "1"
    assert BlowupReport(types=()).smooth


def test_strict_transform_divides_exceptional():
    # total transform of x^2+y^3 in chart 1 (y=exceptional) is
    # y^2*(x^2 + y); the strict transform drops the y^2 factor
    T = strict_transform([P("x^2 + y^3"), P("z"), P("w")], 1)
    assert contains(T, P("x^2 + y"))


@pytest.mark.parametrize("fam,idx,expected", [
    ("T", (2, 2, 2, 2), ()),                      # cone: resolved in one step
    ("Kprime", (10,), ()),
    ("M", (11,), ()),
    ("I", (1, 0), (("A", (1,)),)),
    ("I", (1, 1), (("A", (2,)),)),
    ("T", (4, 2, 2, 2), (("A", (1,)),)),
    ("T", (3, 3, 3, 4), (("A", (1,)),)),
    ("T", (4, 4, 2, 2), (("A", (1,)), ("A", (1,)))),
    ("Jprime", (15,), (("E", (6,)),)),
    ("M", (15,), (("D", (4,)),)),
], ids=lambda v: str(v))
def test_blowup_type_lists(fam, idx, expected):
    f, g = normal_form(SingularityType(fam, idx))
    B = blowup_type_list(f, g)
    assert tuple((t.kind, t.indices) for t in B.types) == expected


def test_blowup_invariant_under_coordinate_change():
    f, g = normal_form(SingularityType("T", (4, 4, 2, 2)))
    ch = random_linear_change(5)
    B = blowup_type_list(ch.apply(f), ch.apply(g))
    assert B.render() == "{A1, A1}"
