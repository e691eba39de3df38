"""Primary structure of the 2-jet pencil: frozen golden bundle.

Each coarse class is pinned by its representative normal form together with
the full component data (dimension, Hilbert polynomial, conjugate count).
"""

import pytest

from icis.catalogue import normal_form
from icis.classify import random_linear_change
from icis.errors import UnsupportedTwoJet
from icis.poly import parse_polynomial
from icis.twojet import classify_two_jet
from icis.types import SingularityType

# (family, indices, class, s, t, [(d, hilbert coeffs, j)])
GOLDEN = [
    ("I", (1, 0), "I", 4, 4,
     [(2, (1, 1), 1), (2, (1, 1), 1), (2, (1, 1), 1), (2, (1, 1), 1)]),
    ("T", (2, 2, 2, 2), "T2222", 1, 1, [(2, (0, 4), 1)]),
    ("T", (3, 2, 2, 2), "Tp222", 1, 1, [(2, (0, 4), 1)]),
    ("T", (3, 3, 2, 2), "Tpq22", 2, 2, [(2, (1, 2), 1), (2, (1, 2), 1)]),
    ("T", (3, 3, 3, 2), "Tpqr2", 3, 3,
     [(2, (1, 1), 1), (2, (1, 1), 1), (2, (1, 2), 1)]),
    ("T", (3, 3, 3, 4), "Tpqrs", 4, 4,
     [(2, (1, 1), 1), (2, (1, 1), 1), (2, (1, 1), 1), (2, (1, 1), 1)]),
    ("Jprime", (15,), "Jprime", 1, 1, [(2, (0, 4), 1)]),
    ("Kprime", (10,), "Kprime", 1, 2, [(2, (0, 4), 2)]),
    ("L", (15,), "L", 2, 2, [(2, (1, 1), 1), (2, (1, 3), 1)]),
    ("M", (11,), "M", 3, 3, [(2, (1, 1), 1), (2, (1, 2), 1), (2, (1, 1), 1)]),
]


def _bundle(analysis):
    comps = sorted(
        (c.d, tuple(int(x) for x in c.h.coeffs), c.j)
        for c in analysis.components)
    return analysis.cls, analysis.s, analysis.t, comps


@pytest.mark.parametrize("fam,idx,cls,s,t,comps", GOLDEN,
                         ids=[f"{g[0]}{g[1]}" for g in GOLDEN])
def test_two_jet_golden_bundle(fam, idx, cls, s, t, comps):
    f, g = normal_form(SingularityType(fam, idx))
    got = _bundle(classify_two_jet(f, g))
    assert got == (cls, s, t, sorted(comps))


@pytest.mark.parametrize("fam,idx,cls,s,t,comps", GOLDEN,
                         ids=[f"{g[0]}{g[1]}-dense" for g in GOLDEN])
def test_two_jet_invariant_under_coordinate_change(fam, idx, cls, s, t, comps):
    f, g = normal_form(SingularityType(fam, idx))
    ch = random_linear_change(3)
    got = _bundle(classify_two_jet(ch.apply(f), ch.apply(g)))
    assert got == (cls, s, t, sorted(comps))


def test_two_jet_invariant_under_generator_mixing():
    f, g = normal_form(SingularityType("M", (11,)))
    assert _bundle(classify_two_jet(f + g, g)) == \
        _bundle(classify_two_jet(f, g))


def test_degenerate_pencil_rejected():
    # 2-jet <x^2, x*y> is not one of the primary bundles
    f = parse_polynomial("x^2 + y^3")
    g = parse_polynomial("x*y + z^3 + w^3")
    with pytest.raises(UnsupportedTwoJet):
        classify_two_jet(f, g)
