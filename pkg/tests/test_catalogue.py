"""Normal-form catalogue: index validation, moduli, grid composition."""

import pytest

from icis.catalogue import (DEFAULT_MODULUS, acceptance_grid,
                            expected_invariants, l_series, normal_form)
from icis.errors import ExcludedModulus, IndexOutOfRange, UnknownNormalForm
from icis.poly import QQ, Polynomial
from icis.types import SingularityType

Y, W = Polynomial.variable(1), Polynomial.variable(3)


def test_l_series():
    # l_0 = a, l_1 = b^2, l_2 = a*b, l_3 = b^3, l_4 = a*b^2
    assert l_series(0, Y, W) == Y
    assert l_series(1, Y, W) == W ** 2
    assert l_series(2, Y, W) == Y * W
    assert l_series(3, Y, W) == W ** 3
    assert l_series(4, Y, W) == Y * W ** 2
    with pytest.raises(IndexOutOfRange):
        l_series(-1, Y, W)


def test_every_grid_type_has_a_normal_form():
    grid = acceptance_grid()
    assert len(grid) == len(set(grid))
    for t in grid:
        f, g = normal_form(t)
        assert not f.is_zero() and not g.is_zero()
        assert f.order() >= 2 and g.order() >= 2
        mu, tau = expected_invariants(t)
        assert mu >= tau >= 1


def test_grid_size():
    assert len(acceptance_grid()) == 104


def test_excluded_moduli():
    t = SingularityType("T", (2, 2, 2, 2))
    for bad in (0, 1):
        with pytest.raises(ExcludedModulus):
            normal_form(t, lam=bad)
    normal_form(t, lam=QQ(1, 2))  # any other value is fine
    with pytest.raises(ExcludedModulus):
        normal_form(SingularityType("Kprime", (1, 0)), lam=QQ(1, 4))


def test_modulus_only_affects_moduli_families():
    t = SingularityType("T", (3, 4, 2, 2))
    assert normal_form(t, lam=3) == normal_form(t, lam=DEFAULT_MODULUS)


def test_t_index_convention():
    with pytest.raises(IndexOutOfRange):
        normal_form(SingularityType("T", (2, 2, 3, 3)))  # 2s must come last
    with pytest.raises(IndexOutOfRange):
        normal_form(SingularityType("T", (4, 3, 2, 2)))  # big part ascending
    with pytest.raises(IndexOutOfRange):
        normal_form(SingularityType("T", (3, 3, 3)))
    normal_form(SingularityType("T", (3, 4, 2, 2)))


def test_unknown_branches():
    with pytest.raises(UnknownNormalForm):
        normal_form(SingularityType("Lb", (1, 1)))
    with pytest.raises(UnknownNormalForm):
        normal_form(SingularityType("L", (1, 1)))


def test_bad_indices():
    for fam, idx in [("I", (2, 0)), ("Jprime", (14,)), ("Kprime", (12,)),
                     ("M", (12,)), ("Jprime", (1, 0))]:
        with pytest.raises(IndexOutOfRange):
            normal_form(SingularityType(fam, idx))


def test_type_render():
    assert SingularityType("I", (1, 0)).render() == "I_{1,0}"
    assert SingularityType("Jprime", (3, 0)).render() == "J'_{3,0}"
    assert SingularityType("Kb", (1, 3)).render() == "K^b_{1,3}"
    assert SingularityType("Kprime", (15, 2)).render() == "K'_{15,2}"


def test_has_modulus():
    assert SingularityType("T", (2, 2, 2, 2)).has_modulus
    assert SingularityType("M", (1, 0)).has_modulus
    assert not SingularityType("M", (1, 1)).has_modulus
    assert not SingularityType("T", (3, 4, 2, 2)).has_modulus
    assert SingularityType("Jprime", (2, 0)).has_modulus
    assert not SingularityType("Jprime", (15,)).has_modulus
