"""Blow-up of the origin and classification of strict-transform germs.

The blow-up of four-space at the origin is covered by four affine charts.
The strict transform of a surface ideal in a chart is the saturation of the
substituted ideal by the exceptional variable.  Singular points of the
transform on the exceptional divisor are located by elimination and
rational root extraction; each germ is reduced to a three-variable
hypersurface by implicit elimination of smooth directions and classified
into the A/D/E/J catalogue through (mu, tau, corank) and the root
structure of the residual binary cubic.
"""

from dataclasses import dataclass

from .errors import (IrrationalSingularPoint, PositiveDimensionalSingularLocus,
                     ReductionFailed)
from .gb import (INFINITE, IdealBasis, ModOrder, STAIRCASE_PRIMES,
                 capped_local_vdim, modular_coordinate_roots, poly_to_vec,
                 rational_reconstruct, saturate, std_basis, vdim,
                 vdim_modular, vec_to_poly)
from .germdata import TRIPLE_ROOT_GERMS
from .invariants import corank, milnor_hyp, minors2, tjurina_hyp
from .poly import LocalRevLex, Polynomial, QQ
from .twojet import (_direction_matrix, _matrix_inverse, _substitute_matrix,
                     factor_rational, quadric_matrix, rational_points)

JET_CAPS = (8, 12, 18, 26, 40)


@dataclass(frozen=True)
class GermType:
    """Singularity type of one strict-transform germ."""

    kind: str        # "A", "D", "E", "J", "Other"
    indices: tuple

    def render(self):
        if self.kind in ("A", "D", "E"):
            return f"{self.kind}{self.indices[0]}"
        if self.kind == "J":
            return f"J{self.indices[0]},{self.indices[1]}"
        return self.kind

    def __repr__(self):
        return f"GermType({self.render()})"


@dataclass(frozen=True)
class BlowupReport:
    """Multiset of germ types on the strict transform; empty means smooth."""

    types: tuple

    @property
    def smooth(self):
        return not self.types

    def render(self):
        if self.smooth:
            return "1"
        return "{" + ", ".join(t.render() for t in self.types) + "}"


def A(k):
    return GermType("A", (k,))


def D(k):
    return GermType("D", (k,))


def E(k):
    return GermType("E", (k,))


def J(k, i):
    return GermType("J", (k, i))


OTHER = GermType("Other", ())


# ---------------------------------------------------------------------------
# Charts and strict transforms.


def chart_images(k, nvars):
    """Blow-up chart k: the chart variable scales every other variable."""
    e = Polynomial.variable(k, nvars)
    return [e if i == k else e * Polynomial.variable(i, nvars)
            for i in range(nvars)]


def _divide_exceptional(p, k):
    """Divide out the full power of the chart variable."""
    if p.is_zero():
        return p
    m = min(e[k] for e in p.terms)
    if m == 0:
        return p
    shift = tuple(-m if i == k else 0 for i in range(p.nvars))
    return Polynomial({tuple(a + b for a, b in zip(e, shift)): c
                       for e, c in p.terms.items()}, p.nvars, _clean=False)


def strict_transform(gens, k):
    """Strict transform of the ideal in chart k (saturated total transform)."""
    nv = gens[0].nvars
    imgs = chart_images(k, nv)
    moved = [_divide_exceptional(g.substitute(imgs), k) for g in gens]
    return saturate(moved, Polynomial.variable(k, nv))


def _jacobian_minor_set(gens):
    out = []
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            out.extend(minors2(gens[a], gens[b]))
    return out


def _modular_point_candidates(sing, nv):
    """Rational points of the singular scheme recovered from one modular
    image: per-coordinate eliminant roots mod p, lifted by rational
    reconstruction and filtered by exact vanishing."""
    p = STAIRCASE_PRIMES[0]
    axes = []
    for i in range(nv):
        roots = modular_coordinate_roots(sing, nv, i, p)
        if roots is None:
            return None
        cands = []
        for r in roots:
            q = rational_reconstruct(r, p)
            if q is not None and q not in cands:
                cands.append(q)
        axes.append(cands)
    points = [()]
    for cands in axes:
        points = [pt + (c,) for pt in points for c in cands]
    return [pt for pt in points
            if all(g.substitute([QQ(v) for v in pt]).is_zero() for g in sing)]


def _translate(p, point):
    n = p.nvars
    imgs = [Polynomial.variable(i, n) + Polynomial.constant(point[i], n)
            for i in range(n)]
    return p.substitute(imgs)


def _certified_points(sing, nv, total):
    """Point list whose local multiplicities sum to the scheme length.

    The candidates come from a single modular image, so completeness needs a
    certificate: mass not sitting at a recovered rational point (an
    irrational point, or a lifting failure) leaves the sum short.
    """
    pts = _modular_point_candidates(sing, nv)
    if pts is None:
        return None
    acc = 0
    for pt in pts:
        m = capped_local_vdim([_translate(g, pt) for g in sing], nv)
        if m is INFINITE:
            return None
        acc += m
    return pts if acc == total else None


def exceptional_singular_points(T, k):
    """Rational singular points of the transform on the exceptional divisor.

    Raises PositiveDimensionalSingularLocus when the singular scheme meets
    the divisor in positive dimension and IrrationalSingularPoint when a
    singular point has an irrational coordinate.
    """
    gens = list(T.std())
    nv = T.nvars
    sing = gens + _jacobian_minor_set(gens) + [Polynomial.variable(k, nv)]
    n = vdim_modular(sing, nv)
    if n is None:
        n = vdim(IdealBasis(sing))
    if n is INFINITE:
        raise PositiveDimensionalSingularLocus(
            f"singular locus of the chart-{k} transform is not finite")
    if n == 0:
        return []
    pts = _certified_points(sing, nv, n)
    if pts is None:
        pts = rational_points(sing, nv)
    if pts is None:
        raise IrrationalSingularPoint(
            f"chart-{k} transform has a non-rational singular point")
    return pts


def _projective_key(p, k):
    """Normalized exceptional-divisor coordinates of a chart point.

    In chart k the slot-k coordinate is the exceptional variable (zero on
    the divisor) and the homogeneous coordinate X_k is 1 there.
    """
    proj = list(p)
    proj[k] = QQ(1)
    lead = next(i for i in range(len(proj)) if proj[i] != 0)
    scale = proj[lead]
    return tuple(QQ(v) / scale for v in proj)


# ---------------------------------------------------------------------------
# Germ reduction: implicit elimination down to a hypersurface.


def _implicit_solve(g, var, cap):
    """Power series h with g(..., x_var = h, ...) = 0 modulo degree cap.

    Requires the linear part of g to depend on x_var.
    """
    n = g.nvars
    lin = g.homogeneous_part(1)
    a = lin.terms.get(tuple(1 if i == var else 0 for i in range(n)), QQ(0))
    if a == 0:
        raise ValueError("generator is not solvable for this variable")
    h = Polynomial.zero(n)
    for _ in range(cap + 1):
        imgs = [h if i == var else Polynomial.variable(i, n) for i in range(n)]
        residue = g.substitute(imgs).jet(cap)
        if residue.is_zero():
            break
        h = (h - residue * (QQ(1) / a)).jet(cap)
    return h


def _drop_variable(p, var):
    terms = {}
    for e, c in p.terms.items():
        if e[var]:
            raise ValueError("variable still present")
        terms[e[:var] + e[var + 1:]] = c
    return Polynomial(terms, p.nvars - 1)


def reduce_to_hypersurface(gens, cap):
    """Eliminate smooth directions until one generator remains.

    Each step solves a generator with nonzero linear part for one variable
    (implicitly, modulo the degree cap) and substitutes into the rest.
    Raises ReductionFailed when several generators remain but none has a
    linear part.
    """
    gens = [g.jet(cap) for g in gens if not g.is_zero()]
    retried = False
    while len(gens) > 1:
        pick = None
        for gi, g in enumerate(gens):
            lin = g.homogeneous_part(1)
            if lin.is_zero():
                continue
            n = g.nvars
            for var in range(n):
                if lin.terms.get(
                        tuple(1 if i == var else 0 for i in range(n))):
                    pick = (gi, var)
                    break
            if pick:
                break
        if pick is None:
            if not retried:
                # the presentation may hide smooth directions (or a common
                # local factor); a capped local standard basis exposes them
                # (elements of order > cap are padding and carry no germ data)
                n = gens[0].nvars
                order = ModOrder(LocalRevLex(n))
                vecs = [poly_to_vec(g) for g in gens]
                basis = std_basis(vecs, order, cap=cap)
                gens = []
                for v in basis:
                    h = vec_to_poly(v, n).jet(cap)
                    if not h.is_zero() and h.order() <= cap:
                        gens.append(h)
                retried = True
                continue
            raise ReductionFailed(
                "no generator of the germ has a smooth direction")
        retried = False
        gi, var = pick
        h = _implicit_solve(gens[gi], var, cap)
        n = gens[gi].nvars
        imgs = [h if i == var else Polynomial.variable(i, n) for i in range(n)]
        rest = []
        for j, g in enumerate(gens):
            if j == gi:
                continue
            rest.append(_drop_variable(g.substitute(imgs).jet(cap), var))
        gens = [g for g in rest if not g.is_zero()]
        if not gens:
            gens = [Polynomial.zero(n - 1)]
    return gens[0]


# ---------------------------------------------------------------------------
# Hypersurface germ classification.


def _rank_one_direction(q, n):
    """Coordinate change whose first variable carries the rank-1 quadric."""
    M = quadric_matrix(q, n)
    row = next((M[i] for i in range(n) if any(v != 0 for v in M[i])), None)
    if row is None:
        return None
    B = _direction_matrix(tuple(row))      # columns; we need ell as a row
    Bt = [[B[j][i] for j in range(n)] for i in range(n)]
    return _matrix_inverse(Bt)


def _residual_two_germ(f, cap):
    """Split off the rank-1 quadratic direction of a corank-2 germ."""
    n = f.nvars
    q = f.homogeneous_part(2)
    Binv = _rank_one_direction(q, n)
    if Binv is None:
        return None
    g = _substitute_matrix(f, Binv).jet(cap)
    # now the quadratic part is c*u^2 with u the first variable
    du = g.derivative(0)
    h = _implicit_solve(du, 0, cap)
    imgs = [h] + [Polynomial.variable(i, n) for i in range(1, n)]
    return _drop_variable(g.substitute(imgs).jet(cap), 0)


def _cubic_root_pattern(c3):
    """Multiplicity profile of the roots of a binary cubic: 3, 2, or 1
    distinct roots; None for the zero form."""
    if c3.is_zero():
        return None
    mults = []
    for f, m in factor_rational(c3):
        if f.degree() == 0:
            continue
        mults.extend([m] * f.degree())
    return max(mults)


def classify_hypersurface_germ(f, mu, tau):
    """A/D/E/J decision for an isolated 3-variable hypersurface germ."""
    ck = corank(f)
    if mu == 0:
        return GermType("Smooth", ())
    if ck <= 1:
        return A(mu)
    if ck != 2:
        return OTHER
    for cap in JET_CAPS:
        if mu <= cap - 2:
            g2 = _residual_two_germ(f.jet(cap), cap)
            break
    else:
        g2 = None
    if g2 is None:
        return OTHER
    pattern = _cubic_root_pattern(g2.homogeneous_part(3))
    if pattern == 1:
        return D(4) if mu == 4 else OTHER
    if pattern == 2:
        return D(mu)
    if pattern == 3:
        entry = TRIPLE_ROOT_GERMS.get((mu, tau))
        return GermType(*entry) if entry is not None else OTHER
    return OTHER


def classify_germ(T, point):
    """Germ type of the strict transform at a singular point."""
    gens = list(T.std())
    nv = T.nvars
    for cap in JET_CAPS:
        imgs = [Polynomial.variable(i, nv) + Polynomial.constant(point[i], nv)
                for i in range(nv)]
        local = [g.substitute(imgs) for g in gens]
        f = reduce_to_hypersurface(local, cap)
        mu = milnor_hyp(f)
        if mu is INFINITE or mu > cap - 2:
            continue  # truncation too coarse; retry deeper
        tau = tjurina_hyp(f)
        return classify_hypersurface_germ(f, mu, tau)
    raise ReductionFailed(
        "germ did not stabilize within the truncation schedule")


# ---------------------------------------------------------------------------
# The list B.


def blowup_type_list(f, g):
    """Multiset of strict-transform germ types over all four charts."""
    nv = f.nvars
    found = {}
    for k in range(nv):
        T = strict_transform([f, g], k)
        for p in exceptional_singular_points(T, k):
            key = _projective_key(p, k)
            if key not in found:
                found[key] = classify_germ(T, p)
    return BlowupReport(types=tuple(
        sorted(found.values(), key=lambda t: (t.kind, t.indices))))
