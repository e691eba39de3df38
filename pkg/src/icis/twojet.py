"""Primary structure of an ideal generated by two quadrics.

The 2-jet ideal of a codimension-2 germ is spanned by two quadratic forms.
Its primary components over Q, together with their affine dimensions,
Hilbert polynomials and absolute conjugate counts, form a finite invariant
bundle that resolves the coarse class of the germ.  Decomposition projects
the cone along a certified direction: when the elimination ideal of the
direction variable is principal with a squarefree quartic generator, the
irreducible factors of that generator correspond bijectively to the
components, and saturating away the other factors recovers each one.
"""

import random
from dataclasses import dataclass

import sympy

from .errors import NotIsolated, UnsupportedTwoJet
from .gb import (HilbertPoly, IdealBasis, INFINITE, contains, eliminate_first,
                 hilbert_poly, ideal_contains, ideal_equal, ideal_sum,
                 intersect, krull_dim, saturate, vdim)
from .invariants import _rank, milnor_icis, minors2
from .poly import GradedRevLex, Polynomial, QQ, _var_names

H_PLANE = HilbertPoly([1, 1])        # 1 + t
H_CONE = HilbertPoly([1, 2])         # 1 + 2t
H_CUBIC_CONE = HilbertPoly([1, 3])   # 1 + 3t
H_CURVE_CONE = HilbertPoly([0, 4])   # 4t


@dataclass(frozen=True)
class ComponentReport:
    """One primary component over Q with its dimension data."""

    Q: IdealBasis
    d: int
    h: HilbertPoly
    j: int


@dataclass(frozen=True)
class TwoJetAnalysis:
    """Component list of the 2-jet ideal and the class it resolves to."""

    components: list
    cls: str            # one of the coarse class names, or None

    @property
    def s(self):
        return len(self.components)

    @property
    def t(self):
        return sum(c.j for c in self.components)


# ---------------------------------------------------------------------------
# Factorization bridge.


def _to_sympy(p, syms):
    expr = sympy.Integer(0)
    for e, c in p.terms.items():
        term = sympy.Rational(int(c.numerator), int(c.denominator))
        for s, k in zip(syms, e):
            if k:
                term *= s ** k
        expr += term
    return expr


def _from_sympy(expr, syms, nvars):
    poly = sympy.Poly(expr, *syms)
    terms = {}
    for mono, coeff in poly.terms():
        q = sympy.Rational(coeff)
        terms[tuple(int(k) for k in mono)] = QQ(int(q.p), int(q.q))
    return Polynomial(terms, nvars)


def factor_rational(p):
    """Irreducible factors of p over Q as [(factor, multiplicity), ...]."""
    syms = sympy.symbols(_var_names(p.nvars))
    _, factors = sympy.factor_list(_to_sympy(p, syms))
    out = []
    for expr, mult in factors:
        out.append((_from_sympy(expr, syms, p.nvars).primitive(), int(mult)))
    return out


# ---------------------------------------------------------------------------
# Quadratic-form linear algebra.


def quadric_matrix(q, nvars=None):
    """Symmetric Gram matrix of the quadratic form q (doubled on diagonal)."""
    n = nvars if nvars is not None else q.nvars
    M = [[QQ(0)] * n for _ in range(n)]
    for e, c in q.terms.items():
        idx = [i for i in range(n) for _ in range(e[i])]
        i, j = idx
        if i == j:
            M[i][i] = 2 * c
        else:
            M[i][j] += c
            M[j][i] += c
    return M


def quadric_rank(q):
    return _rank(quadric_matrix(q))


def _is_square(r):
    if r < 0:
        return False
    num, den = int(r.numerator), int(r.denominator)
    rn = sympy.integer_nthroot(num, 2)
    rd = sympy.integer_nthroot(den, 2)
    return rn[1] and rd[1]


def splits_over_extension(q):
    """True if the rank-2 form q is a product of two conjugate linear forms.

    A symmetric rank-2 matrix has a nonsingular principal 2x2 block; the
    form factors over Q exactly when minus that block's determinant is a
    square (a*u^2 + b*u*v + c*v^2 factors over Q(sqrt(b^2 - 4ac))).
    """
    M = quadric_matrix(q)
    n = len(M)
    for i in range(n):
        for j in range(i + 1, n):
            det = M[i][i] * M[j][j] - M[i][j] * M[i][j]
            if det != 0:
                return not _is_square(-det)
    return False


def conjugate_count(component):
    """Number of absolutely irreducible conjugates of a Q-primary component.

    A component in scope splits over C only through a rank-2 quadric with
    non-square discriminant in its space of quadric elements; the search
    covers the generators and the rank-dropping members of their pencil.
    """
    gens = component.std()
    for g in list(gens) + _pencil_split_candidates(gens):
        if g.degree() == 2 and g.is_homogeneous():
            if quadric_rank(g) == 2 and splits_over_extension(g):
                return 2
    return 1


# ---------------------------------------------------------------------------
# Projection-certified decomposition.


def _pencil_split_candidates(gens):
    """Degree-2 ideal members that drop rank: rational roots of the pencil
    determinant det(a*M1 + b*M2)."""
    quads = [g for g in gens if g.degree() == 2 and g.is_homogeneous()]
    if len(quads) != 2:
        return quads
    q1, q2 = quads
    out = [q1, q2]
    n = q1.nvars
    # det as a univariate polynomial in b at a=1, plus the a=0 member
    A = quadric_matrix(q1, n)
    B = quadric_matrix(q2, n)
    t = sympy.Symbol("t")
    M = sympy.Matrix(n, n, lambda i, j: sympy.Rational(
        int(A[i][j].numerator), int(A[i][j].denominator)) + t * sympy.Rational(
        int(B[i][j].numerator), int(B[i][j].denominator)))
    det = sympy.Poly(M.det(), t)
    for root in sympy.roots(det, filter="Q"):
        lam = QQ(int(sympy.Rational(root).p), int(sympy.Rational(root).q))
        out.append((q1 + q2 * lam).primitive())
    return out


def _matrix_inverse(A):
    """Inverse of a square QQ matrix by Gauss-Jordan elimination."""
    n = len(A)
    M = [row[:] + [QQ(1) if i == j else QQ(0) for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        inv = M[c][c]
        M[c] = [v / inv for v in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return [row[n:] for row in M]


def _direction_matrix(v):
    """Invertible integer matrix whose first column is the direction v."""
    n = len(v)
    cols = [[QQ(x) for x in v]]
    for k in range(n):
        e = [QQ(1) if i == k else QQ(0) for i in range(n)]
        cand = cols + [e]
        if _rank([c[:] for c in cand]) == len(cand):
            cols.append(e)
        if len(cols) == n:
            break
    A = [[cols[j][i] for j in range(n)] for i in range(n)]
    return A


def _projection_directions(n):
    """Deterministic direction candidates: axes, small shears, then a
    seeded pseudorandom tail for configurations that dodge the fixed list
    (e.g. four planes pairwise spanning coordinate hyperplanes)."""
    dirs = []
    for k in range(n - 1, -1, -1):
        v = [0] * n
        v[k] = 1
        dirs.append(tuple(v))
    for i in range(n):
        for j in range(i + 1, n):
            for sj in (1, -1):
                v = [0] * n
                v[i], v[j] = 1, sj
                dirs.append(tuple(v))
    dirs.append((1,) * n)
    dirs.append(tuple(1 if k % 2 == 0 else -1 for k in range(n)))
    rng = random.Random(f"projection:{n}")
    while len(dirs) < 40:
        v = tuple(rng.randint(-5, 5) for _ in range(n))
        if any(v) and v not in dirs:
            dirs.append(v)
    return dirs


def _substitute_matrix(p, A):
    """p(A x): compose with the linear change x -> A x."""
    n = p.nvars
    imgs = []
    for i in range(n):
        img = Polynomial.zero(n)
        for j in range(n):
            if A[i][j] != 0:
                img = img + Polynomial.variable(j, n) * A[i][j]
        imgs.append(img)
    return p.substitute(imgs)


def _decompose_along(I2, v):
    """Components of I2 via the cone projection along direction v, or None.

    In coordinates where v is the first basis vector, the elimination ideal
    of the first variable is principal for a 2-dimensional cone.  When its
    generator F is squarefree of total degree 4 the projection is faithful:
    the irreducible factors of F correspond bijectively to the components,
    and each component is recovered by saturating away the other factors.
    """
    n = I2.nvars
    A = _direction_matrix(v)
    Ainv = _matrix_inverse(A)
    gens = [_substitute_matrix(g, A) for g in I2.generators]
    E = eliminate_first(gens, 1, n)
    if len(E) != 1:
        return None
    F = E[0]
    if F.degree() != 4:
        return None
    factors = factor_rational(F)
    if any(m > 1 for _f, m in factors):
        return None
    lifted = [_substitute_matrix(f, Ainv) for f, _m in factors]
    if len(lifted) == 1:
        comps = [I2]
    else:
        comps = []
        for i, fi in enumerate(lifted):
            rest = Polynomial.constant(1, n)
            for k, fk in enumerate(lifted):
                if k != i:
                    rest = rest * fk
            comps.append(saturate(list(I2.generators) + [fi], rest))
        total = comps[0]
        for Q in comps[1:]:
            total = intersect(total, Q)
        if not ideal_equal(total, I2):
            return None
    reports = []
    for Q, (f, _m) in zip(comps, factors):
        d = krull_dim(Q)
        h = hilbert_poly(Q)
        if d != 2 or h.degree() != 1 or h.coeffs[1] != f.degree():
            return None  # component degree disagrees with its image
        reports.append(ComponentReport(Q=Q, d=d, h=h, j=conjugate_count(Q)))
    reports.sort(key=lambda r: (r.d, r.h.coeffs, r.j))
    return reports


def decompose_two_quadrics(I2):
    """Irredundant primary components over Q of an ideal of two quadrics."""
    if not isinstance(I2, IdealBasis):
        I2 = IdealBasis(list(I2))
    for v in _projection_directions(I2.nvars):
        reports = _decompose_along(I2, v)
        if reports is not None:
            return reports
    raise UnsupportedTwoJet(
        "no projection direction certifies a faithful decomposition")


# ---------------------------------------------------------------------------
# Rational points of the singular locus (cone tiebreak).


def _permute_vars(p, perm):
    return Polynomial({tuple(e[i] for i in perm): c
                       for e, c in p.terms.items()}, p.nvars)


def _univariate_roots(coeffs):
    """(rational roots, all-roots-rational flag) of sum coeffs[k]*t^k."""
    p = Polynomial({(k,): c for k, c in enumerate(coeffs) if c != 0}, 1)
    if p.degree() < 1:
        return [], True
    roots = []
    all_rational = True
    for f, _mult in factor_rational(p):
        if f.degree() == 0:
            continue
        if f.degree() > 1:
            all_rational = False
            continue
        a = f.terms.get((1,), QQ(0))
        b = f.terms.get((0,), QQ(0))
        r = -b / a
        if r not in roots:
            roots.append(r)
    return roots, all_rational


def _coordinate_minpoly(gens, nvars, i):
    """Eliminate every variable except x_i; univariate result as coeff list."""
    perm = [k for k in range(nvars) if k != i] + [i]
    shifted = [_permute_vars(g, perm) for g in gens]
    elim = eliminate_first(shifted, nvars - 1, nvars)
    best = None
    for g in elim:
        if all(all(e[k] == 0 for k in range(nvars - 1)) for e in g.terms):
            if best is None or g.degree() < best.degree():
                best = g
    if best is None:
        return None
    coeffs = [QQ(0)] * (best.degree() + 1)
    for e, c in best.terms.items():
        coeffs[e[nvars - 1]] = c
    return coeffs


def rational_points(gens, nvars):
    """All rational points of a zero-dimensional affine ideal, or None when
    some point has an irrational coordinate (a coordinate minimal polynomial
    with an irreducible factor of degree > 1)."""
    axes = []
    for i in range(nvars):
        coeffs = _coordinate_minpoly(gens, nvars, i)
        if coeffs is None:
            return None
        roots, all_rational = _univariate_roots(coeffs)
        if not all_rational:
            return None
        axes.append(roots)
    points = [()]
    for roots in axes:
        points = [p + (r,) for p in points for r in roots]
    out = []
    for p in points:
        if all(g.substitute([QQ(v) for v in p]).is_zero() for g in gens):
            out.append(p)
    return out


def singular_rays(q1, q2):
    """Rational projective singular points of the curve V(q1, q2) in P^3.

    Returns a list of normalized coordinate tuples (first nonzero entry 1),
    or None when a singular point is not rational.
    """
    n = q1.nvars
    sing = [q1, q2] + minors2(q1, q2)
    found = {}
    for chart in range(n):
        images = []
        kept = []
        for i in range(n):
            if i == chart:
                images.append(Polynomial.constant(1, n - 1))
            else:
                images.append(Polynomial.variable(len(kept), n - 1))
                kept.append(i)
        chart_gens = [g.substitute(images) for g in sing]
        chart_gens = [g for g in chart_gens if not g.is_zero()]
        if any(g.degree() == 0 for g in chart_gens):
            continue
        basis = IdealBasis(chart_gens, GradedRevLex(n - 1), n - 1)
        if vdim(basis) is INFINITE:
            return None
        pts = rational_points(chart_gens, n - 1)
        if pts is None:
            return None
        for p in pts:
            proj = [QQ(0)] * n
            proj[chart] = QQ(1)
            for i, v in zip(kept, p):
                proj[i] = QQ(v)
            lead = next(k for k in range(n) if proj[k] != 0)
            scale = proj[lead]
            key = tuple(v / scale for v in proj)
            found[key] = True
    return list(found)


def _transverse_milnor(q1, q2, point):
    """Milnor number of the curve germ of V(q1, q2) at a projective point."""
    n = q1.nvars
    chart = next(k for k in range(n) if point[k] != 0)
    images = []
    kept = []
    for i in range(n):
        if i == chart:
            images.append(Polynomial.constant(1, n - 1))
        else:
            v = Polynomial.variable(len(kept), n - 1)
            images.append(v + Polynomial.constant(point[i] / point[chart],
                                                  n - 1))
            kept.append(i)
    f = q1.substitute(images)
    g = q2.substitute(images)
    return milnor_icis(f, g)


# ---------------------------------------------------------------------------
# Class resolution.


def _pairwise_sum_dims(components):
    dims = []
    comps = [c.Q for c in components]
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            dims.append(krull_dim(ideal_sum(comps[i], comps[j])))
    return sorted(dims)


def classify_two_jet(f, g, seed=0):
    """Invariant bundle and coarse class of the 2-jet ideal of (f, g)."""
    q1 = f.jet(2).homogeneous_part(2)
    q2 = g.jet(2).homogeneous_part(2)
    quads = IdealBasis([q for q in (q1, q2) if not q.is_zero()])
    if q1.is_zero() or q2.is_zero() or contains(
            IdealBasis([q1]), q2) or contains(IdealBasis([q2]), q1):
        raise UnsupportedTwoJet(
            "the 2-jet does not span a pencil of quadrics")
    components = decompose_two_quadrics(quads)
    cls = _resolve_class(components, q1, q2, seed=seed)
    return TwoJetAnalysis(components=components, cls=cls)


def _resolve_class(components, q1, q2, seed=0):
    s = len(components)
    hs = sorted(c.h.coeffs for c in components)
    if s == 4:
        if hs != [H_PLANE.coeffs] * 4:
            return None
        dims = _pairwise_sum_dims(components)
        if dims == [1, 1, 1, 1, 1, 1]:
            return "I"
        if dims == [0, 0, 1, 1, 1, 1]:
            return "Tpqrs"
        return None
    if s == 3:
        if hs != [H_PLANE.coeffs, H_PLANE.coeffs, H_CONE.coeffs]:
            return None
        cone = next(c for c in components if c.h == H_CONE)
        planes = [c for c in components if c.h == H_PLANE]
        plane_sum = ideal_sum(planes[0].Q, planes[1].Q)
        has_order2 = any(g.degree() == 2 for g in cone.Q.std())
        if has_order2 and ideal_contains(plane_sum, cone.Q):
            return "M"
        return "Tpqr2"
    if s == 2:
        if hs == [H_CONE.coeffs, H_CONE.coeffs]:
            return "Tpq22"
        if hs == [H_PLANE.coeffs, H_CUBIC_CONE.coeffs]:
            return "L"
        return None
    if s == 1:
        if hs != [H_CURVE_CONE.coeffs]:
            return None
        if components[0].j == 2:
            return "Kprime"
        rays = singular_rays(q1, q2)
        if rays is None:
            return None
        if not rays:
            return "T2222"
        if len(rays) != 1:
            return None
        try:
            mu = _transverse_milnor(q1, q2, rays[0])
        except NotIsolated:
            return None
        if mu == 1:
            return "Tp222"
        if mu == 2:
            return "Jprime"
        return None
    return None
