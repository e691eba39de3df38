"""Milnor and Tjurina numbers, corank, for hypersurface and codim-2 germs.

Hypersurface germs use the Jacobian ideal directly.  For a codimension-2
complete intersection (f, g) in four variables the Milnor number comes from
the inductive formula

    mu(f, g) = dim O/(<h> + 2-minors of Jac(h, f)) - mu(h)

with h a sufficiently general linear combination of f and g, and the Tjurina
number from the normal-module quotient O^2 / (Jacobian columns + (f,g)*O^2).
"""

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import NotIsolated, InternalInconsistency
from .gb import capped_local_vdim, module_vdim, INFINITE
from .poly import Polynomial, QQ

MAX_COMBINATION_ATTEMPTS = 12

# classification depth knob: degree caps escalate up to MU_CAP + 2
MU_CAP = 40


def jacobian(f):
    return [f.derivative(i) for i in range(f.nvars)]


def minors2(f, g):
    """All 2x2 minors of the 2 x nvars Jacobian matrix of (f, g)."""
    df, dg = jacobian(f), jacobian(g)
    out = []
    for i in range(f.nvars):
        for j in range(i + 1, f.nvars):
            out.append(df[i] * dg[j] - df[j] * dg[i])
    return out


def local_vdim(gens, nvars=None, max_cap=None):
    if nvars is None:
        nvars = gens[0].nvars
    if max_cap is None:
        max_cap = MU_CAP + 2
    return capped_local_vdim(gens, nvars, max_cap=max_cap)


def milnor_hyp(f):
    """Milnor number of a hypersurface germ; INFINITE if not isolated."""
    return local_vdim(jacobian(f), f.nvars)


def tjurina_hyp(f):
    return local_vdim([f] + jacobian(f), f.nvars)


def corank(f):
    """nvars minus the rank of the Hessian of the quadratic part."""
    n = f.nvars
    q = f.homogeneous_part(2)
    H = [[QQ(0)] * n for _ in range(n)]
    for e, c in q.terms.items():
        idx = [i for i in range(n) for _ in range(e[i])]
        i, j = idx
        if i == j:
            H[i][i] = 2 * c
        else:
            H[i][j] = H[i][j] + c
            H[j][i] = H[j][i] + c
    return n - _rank(H)


def _rank(M):
    M = [row[:] for row in M]
    rank = 0
    rows = len(M)
    cols = len(M[0]) if rows else 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        inv = M[r][c]
        for i in range(r + 1, rows):
            if M[i][c] != 0:
                factor = M[i][c] / inv
                M[i] = [a - factor * b for a, b in zip(M[i], M[r])]
        r += 1
        rank += 1
    return rank


def milnor_icis(f, g, seed=0):
    """Milnor number of the complete-intersection surface germ V(f, g).

    Draws the combining coefficients deterministically from the seed and
    re-draws when a combination is degenerate.  Raises NotIsolated when no
    combination yields finite dimensions.
    """
    rng = random.Random(f"milnor:{seed}")
    for attempt in range(MAX_COMBINATION_ATTEMPTS):
        if attempt == 0:
            a, b = 1, 1
        else:
            a = rng.choice([c for c in range(-7, 8) if c])
            b = rng.choice([c for c in range(-7, 8) if c])
        h = a * f + b * g
        mu_h = milnor_hyp(h)
        if mu_h is INFINITE:
            continue
        total = local_vdim([h] + minors2(h, f), f.nvars)
        if total is INFINITE:
            continue
        return total - mu_h
    raise NotIsolated("no generic combination gives finite Milnor algebra")


def tjurina_icis(f, g):
    """Tjurina number of the complete-intersection germ V(f, g)."""
    return module_vdim(_normal_module_columns(f, g), 2, f.nvars,
                       pot=True, local=True, max_cap=MU_CAP + 2)


def _normal_module_columns(f, g):
    n = f.nvars
    zero = Polynomial.zero(n)
    cols = [[f.derivative(i), g.derivative(i)] for i in range(n)]
    cols += [[f, zero], [g, zero], [zero, f], [zero, g]]
    return cols


def tjurina_filtration(f, g, k):
    """dim T^1 / m^k T^1: the m-adic Hilbert-Samuel value of the Tjurina
    module at level k, a coordinate-invariant refinement of tau."""
    n = f.nvars
    zero = Polynomial.zero(n)
    cols = _normal_module_columns(f, g)
    for combo in combinations_with_replacement(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] += 1
        m = Polynomial({tuple(e): QQ(1)}, nvars=n)
        cols.append([m, zero])
        cols.append([zero, m])
    return module_vdim(cols, 2, n, pot=True, local=True, max_cap=k + 6)


@dataclass(frozen=True)
class InvariantRecord:
    """Invariants of a germ: exact Milnor/Tjurina numbers and corank."""

    mu: int
    tau: int
    corank: int


def invariants_icis(f, g, seed=0):
    mu = milnor_icis(f, g, seed=seed)
    tau = tjurina_icis(f, g)
    if tau is INFINITE or mu < tau:
        raise InternalInconsistency(
            f"mu={mu} tau={tau}: Milnor must dominate Tjurina")
    return InvariantRecord(mu=mu, tau=tau, corank=corank(f + g))
