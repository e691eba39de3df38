"""Milnor and Tjurina numbers and corank, hypersurface and codimension 2."""

import pytest

from icis.catalogue import expected_invariants, normal_form
from icis.errors import NotIsolated
from icis.invariants import (corank, invariants_icis, milnor_hyp, milnor_icis,
                             tjurina_hyp, tjurina_icis)
from icis.poly import parse_polynomial
from icis.types import SingularityType


def P(s):
    return parse_polynomial(s)


# Simple hypersurface germs x^2+... in four variables: mu = tau = index.
@pytest.mark.parametrize("text,mu,tau,co", [
    ("x^2 + y^2 + z^2 + w^2", 1, 1, 0),           # A1
    ("x^3 + y^2 + z^2 + w^2", 2, 2, 1),           # A2
    ("x^6 + y^2 + z^2 + w^2", 5, 5, 1),           # A5
    ("x^2*y + y^3 + z^2 + w^2", 4, 4, 2),         # D4
    ("x^2*y + y^6 + z^2 + w^2", 7, 7, 2),         # D7
    ("x^3 + y^4 + z^2 + w^2", 6, 6, 2),           # E6
    ("x^3 + x*y^3 + z^2 + w^2", 7, 7, 2),         # E7
    ("x^3 + y^5 + z^2 + w^2", 8, 8, 2),           # E8
])
def test_hypersurface_invariants(text, mu, tau, co):
    f = P(text)
    assert milnor_hyp(f) == mu
    assert tjurina_hyp(f) == tau
    assert corank(f) == co


def test_tjurina_below_milnor_for_non_quasihomogeneous():
    # T_{3,3} curve-like germ: x^3 + y^3 + a*x*y has mu=tau; perturbing a
    # quasi-homogeneous germ with a high-order term drops tau below mu
    f = P("x^3 + y^7 + x*y^5 + z^2 + w^2")
    mu, tau = milnor_hyp(f), tjurina_hyp(f)
    assert mu == 12 and tau == 11


@pytest.mark.parametrize("fam,idx", [
    ("T", (2, 2, 2, 2)), ("T", (3, 4, 2, 2)), ("I", (1, 1)),
    ("Jprime", (15,)), ("Kprime", (10,)), ("Kprime", (11, 1)),
    ("L", (15,)), ("M", (11,)),
])
def test_icis_invariants_match_expected(fam, idx):
    t = SingularityType(fam, idx)
    f, g = normal_form(t)
    emu, etau = expected_invariants(t)
    assert milnor_icis(f, g) == emu
    assert tjurina_icis(f, g) == etau


def test_milnor_generic_draw_independence():
    f, g = normal_form(SingularityType("T", (3, 3, 2, 2)))
    assert milnor_icis(f, g, seed=0) == milnor_icis(f, g, seed=1) == 9


def test_invariants_record():
    f, g = normal_form(SingularityType("Kprime", (10,)))
    rec = invariants_icis(f, g)
    assert (rec.mu, rec.tau) == (10, 10)
    assert rec.mu >= rec.tau


def test_not_isolated_raises():
    with pytest.raises(NotIsolated):
        invariants_icis(P("x^2"), P("y^2"))


def test_not_isolated_positive_dimensional_pair():
    # V(x*y, z*w) is a union of planes through the origin
    with pytest.raises(NotIsolated):
        invariants_icis(P("x*y"), P("z*w"))
