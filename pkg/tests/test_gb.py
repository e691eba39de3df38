"""Standard bases, normal forms, quotient dimensions, ideal operations.

The quotient-dimension routines are cross-checked against an independent
dense linear-algebra oracle: dim Q[[x]]/I equals the corank of the matrix
of all truncated monomial multiples of the generators, once the truncation
degree clears the corner of the staircase.
"""

from fractions import Fraction
from itertools import product

import pytest

from icis.gb import (INFINITE, IdealBasis, ModOrder, STAIRCASE_PRIMES,
                     _capped_staircase, _vec_mod, capped_local_vdim, contains,
                     eliminate_first, ideal_equal, intersect, leading_exponents,
                     module_vdim, normal_form, poly_to_vec, saturate, std_basis,
                     vdim)
from icis.poly import (GradedRevLex, LocalRevLex, Polynomial, QQ,
                       parse_polynomial)

x, y, z, w = (Polynomial.variable(i) for i in range(4))


def P(s):
    return parse_polynomial(s)


# ---------------------------------------------------------------------------
# Dense linear-algebra oracle for local quotient dimensions.


def _monomials_upto(nvars, deg):
    out = []
    for e in product(range(deg + 1), repeat=nvars):
        if sum(e) <= deg:
            out.append(e)
    return out


def _rank(rows):
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    col = 0
    ncols = len(rows[0]) if rows else 0
    while rows and col < ncols:
        piv = next((i for i, r in enumerate(rows) if r[col]), None)
        if piv is None:
            col += 1
            continue
        rows[0], rows[piv] = rows[piv], rows[0]
        head = rows.pop(0)
        inv = Fraction(1) / head[col]
        rows = [[ri - r[col] * inv * hi for ri, hi in zip(r, head)]
                if r[col] else r for r in rows]
        rank += 1
        col += 1
    return rank


def local_vdim_oracle(gens, nvars, deg):
    """dim of Q[[x]]/(I + m^(deg+1)) by row reduction over Q."""
    monos = _monomials_upto(nvars, deg)
    index = {e: i for i, e in enumerate(monos)}
    rows = []
    for g in gens:
        for m in monos:
            row = [Fraction(0)] * len(monos)
            hit = False
            for e, c in g.terms.items():
                s = tuple(a + b for a, b in zip(e, m))
                if sum(s) <= deg:
                    row[index[s]] += Fraction(int(c.numerator),
                                              int(c.denominator))
                    hit = True
            if hit:
                rows.append(row)
    for m in monos:
        if sum(m) == deg:
            row = [Fraction(0)] * len(monos)
            row[index[m]] = Fraction(1)
            rows.append(row)
    return len(monos) - _rank(rows)


@pytest.mark.parametrize("gens,nvars,expected,deg", [
    # Jacobian ideals of simple hypersurface germs: vdim = Milnor number
    ([P("x^2"), P("y"), P("z"), P("w")], 4, 2, 4),          # A2: x^3+...
    ([P("x^4"), P("y"), P("z"), P("w")], 4, 4, 6),          # A4
    ([P("y^2+3x^2"), P("2xy"), P("z"), P("w")], 4, 4, 5),   # D4: x^3+xy^2
    ([P("3x^2"), P("4y^3"), P("z"), P("w")], 4, 6, 6),      # E6: x^3+y^4
    # a genuinely mixed ideal
    ([P("x^2+y^3"), P("xy+z^2"), P("zw+x^3"), P("w^2+yz")], 4, 19, 6),
])
def test_local_vdim_matches_dense_oracle(gens, nvars, expected, deg):
    assert capped_local_vdim(gens, nvars) == expected
    assert local_vdim_oracle(gens, nvars, deg) == expected


def test_local_vdim_dense_coordinates():
    # the same ideal after an invertible substitution has the same vdim
    gens = [P("x^2+y^3"), P("xy+z^2"), P("zw+x^3"), P("w^2+yz")]
    imgs = [x + y, y + z, z + w, w]  # unipotent, hence invertible
    dense = [g.substitute(imgs) for g in gens]
    assert capped_local_vdim(dense, 4) == 19
    assert local_vdim_oracle(dense, 4, 6) == 19


def test_local_vdim_infinite():
    assert capped_local_vdim([P("x*y"), P("z"), P("w")], 4) is INFINITE


# ---------------------------------------------------------------------------
# Standard bases and normal forms.


def test_std_basis_global_katsura_like():
    I = IdealBasis([P("x+y+z-1"), P("x^2+y^2+z^2-1"), P("xy+yz+zx")],
                   GradedRevLex(4))
    # the quotient is finite over the first three variables: check membership
    assert contains(I, P("x+y+z-1") * P("x^2-y")
                    + P("xy+yz+zx") * P("z^3-2x"))
    assert not contains(I, P("x"))


def test_normal_form_is_zero_iff_member():
    I = IdealBasis([P("x^2-y"), P("y^2-z")], GradedRevLex(4))
    assert normal_form(I, P("x^4-z")).is_zero()
    nf = normal_form(I, P("x^3"))
    assert not nf.is_zero()
    # the normal form differs from the input by an ideal element
    assert contains(I, P("x^3") - nf)


def test_local_leading_terms_pick_lowest_order():
    order = ModOrder(LocalRevLex(4))
    G = std_basis([poly_to_vec(P("x+x^2"))], order, cap=10)
    exps = leading_exponents(G, order)
    assert exps[0] == [(1, 0, 0, 0)]


def test_local_unit_is_whole_ring():
    # 1 + x is a unit in the local ring
    assert capped_local_vdim([P("1+x"), ], 4) == 0


def test_module_vdim_positions_over_terms():
    # F = R^2 over Q[[x]]: quotient by <x*e1, x*e2, y*e1, z*e1, w*e1,
    # y^2*e2, z*e2, w*e2> has basis {e1, e2, y*e2}
    vecs = [[P("x"), P("0")], [P("0"), P("x")], [P("y"), P("0")],
            [P("z"), P("0")], [P("w"), P("0")], [P("0"), P("y^2")],
            [P("0"), P("z")], [P("0"), P("w")]]
    assert module_vdim(vecs, 2, 4) == 3


def test_vdim_global():
    I = IdealBasis([P("x^2"), P("y^3"), P("z"), P("w")], GradedRevLex(4))
    assert vdim(I) == 6


# ---------------------------------------------------------------------------
# Elimination, saturation, intersection.


def test_eliminate_first():
    # t-parametrized twisted cubic: eliminate t=x to get relations in y,z,w
    gens = [P("y-x^2"), P("z-x^3")]
    out = eliminate_first(gens, 1, 4)
    I = IdealBasis(out, GradedRevLex(4))
    assert contains(I, P("y^3-z^2"))
    assert all(all(e[0] == 0 for e in g.terms) for g in out)


def test_saturate_removes_exceptional_factor():
    I = IdealBasis([P("x^2*y"), P("x*y^2")], GradedRevLex(4))
    S = saturate(I, P("x"))
    assert ideal_equal(S, IdealBasis([P("y")], GradedRevLex(4)))


def test_saturate_can_reach_unit_ideal():
    I = IdealBasis([P("x^2"), P("x*y")], GradedRevLex(4))
    S = saturate(I, P("x"))
    assert contains(S, Polynomial.constant(1))


def test_saturate_by_exceptional_power():
    I = IdealBasis([P("x^3*y - x^2*z^2")], GradedRevLex(4))
    S = saturate(I, P("x"))
    assert ideal_equal(S, IdealBasis([P("x*y - z^2")], GradedRevLex(4)))


def test_intersect():
    a = IdealBasis([P("x")], GradedRevLex(4))
    b = IdealBasis([P("y")], GradedRevLex(4))
    assert ideal_equal(intersect(a, b),
                       IdealBasis([P("x*y")], GradedRevLex(4)))


# ---------------------------------------------------------------------------
# Modular staircase path.


def test_vec_mod_is_primitive_image():
    v = poly_to_vec(QQ(2, 3) * x + QQ(4, 3) * y)
    p = STAIRCASE_PRIMES[0]
    assert _vec_mod(v, p) == {(0, (1, 0, 0, 0)): 1, (0, (0, 1, 0, 0)): 2}


def test_modular_staircase_matches_exact():
    gens = [P("x^2+y^3"), P("xy+z^2"), P("zw+x^3"), P("w^2+yz")]
    order = ModOrder(LocalRevLex(4))
    vecs = [poly_to_vec(g) for g in gens]
    mod = _capped_staircase(vecs, order, 10)
    exact = leading_exponents(std_basis(vecs, order, cap=10), order)
    assert mod is not None
    assert {c: sorted(e) for c, e in mod.items()} == \
        {c: sorted(e) for c, e in exact.items()}


def test_modular_vdim_agrees_with_rational_lift():
    # coefficients with large numerators and denominators
    gens = [QQ(10**12 + 39, 7) * x**2 + QQ(3, 10**6 + 3) * y**3,
            x * y + QQ(10**9 + 7) * z**2,
            z * w + x**3,
            w**2 + QQ(1, 999983) * y * z]
    n = capped_local_vdim(gens, 4)
    assert n == local_vdim_oracle(gens, 4, 7)
