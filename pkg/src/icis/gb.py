"""Standard bases for local and graded orderings, with derived quantities.

The engine works on "vectors": dicts mapping (component, exponent-tuple) to a
rational coefficient.  Ring polynomials are vectors with a single component,
free-module elements (needed for Tjurina numbers) use several.  Local
orderings are handled with Mora's normal form with ecart control; graded
orderings reduce to ordinary Buchberger reduction.
"""

import heapq
from functools import lru_cache
from math import gcd, isqrt

from .poly import (Polynomial, GradedRevLex, LocalRevLex, BlockElim, QQ,
                   _add_exps)

INFINITE = "infinite"


class ModOrder:
    """Module ordering on (component, monomial) pairs.

    pot=True gives position-over-term with component 0 strongest; otherwise
    term-over-position.
    """

    def __init__(self, base, pot=True):
        self.base = base
        self.pot = pot
        self.is_local = base.is_local

    def key(self, m):
        comp, e = m
        if self.pot:
            return (-comp,) + self.base.key(e)
        return self.base.key(e) + (-comp,)


def poly_to_vec(p, comp=0):
    return {(comp, e): c for e, c in p.terms.items()}


def vec_to_poly(v, nvars):
    return Polynomial({e: c for (_, e), c in v.items()}, nvars, _clean=False)


def _vec_degree(v):
    return max(sum(e) for (_, e) in v)


def _leading(v, order):
    return max(v, key=order.key)


def _divides(e1, e2):
    return all(a <= b for a, b in zip(e1, e2))


def _sub_exps(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _monic(v, order, prime=None):
    if not v:
        return v
    lc = v[_leading(v, order)]
    if lc == 1:
        return v
    if prime is not None:
        inv = pow(lc, prime - 2, prime)
        return {m: c * inv % prime for m, c in v.items()}
    return {m: c / lc for m, c in v.items()}


# two fixed 31-bit primes for the modular staircase computations; staircase
# agreement between them certifies the count (disagreement falls back to
# exact rational arithmetic)
STAIRCASE_PRIMES = (2147483647, 2147483629)


def _vec_mod(v, prime):
    """Primitive-integer image of a rational coefficient vector mod prime."""
    den = 1
    for c in v.values():
        d = int(c.denominator)
        den = den // gcd(den, d) * d
    ints = {m: int(c.numerator) * (den // int(c.denominator))
            for m, c in v.items()}
    content = 0
    for c in ints.values():
        content = gcd(content, c)
    out = {}
    for m, c in ints.items():
        r = c // content % prime
        if r:
            out[m] = r
    return out


def _reduce_step(h, g, order, lm_h=None):
    """h - (lt(h)/lt(g)) * g; g must be monic with lt(g) | lt(h)."""
    if lm_h is None:
        lm_h = _leading(h, order)
    lm_g = _leading(g, order)
    shift = _sub_exps(lm_h[1], lm_g[1])
    c = h[lm_h]
    out = dict(h)
    for (comp, e), cg in g.items():
        m = (comp, _add_exps(e, shift))
        s = out.get(m)
        if s is None:
            out[m] = -c * cg
        else:
            s = s - c * cg
            if s == 0:
                del out[m]
            else:
                out[m] = s
    return out


def _trunc(v, cap):
    """Drop terms of total degree above cap (work modulo m^(cap+1))."""
    if cap is None:
        return v
    return {m: c for m, c in v.items() if sum(m[1]) <= cap}


# ---------------------------------------------------------------------------
# Packed monomials for the basis completion inner loops.
#
# A (component, exponent) pair becomes one int: 10-bit exponent fields (top
# bit of each field is a guard) with the component in the high bits.  Then a
# monomial product is an int addition and divisibility is one subtract-and-
# mask: ((b | guards) - a) keeps every guard bit exactly when a | b.

_FIELD = 10
_EXP_MASK = (1 << (_FIELD - 1)) - 1
_COMP_SHIFT = 55


@lru_cache(maxsize=None)
def _guard_mask(nvars):
    g = 0
    for i in range(nvars):
        g |= 1 << (_FIELD * i + _FIELD - 1)
    return g


def _pack(comp, e):
    m = comp << _COMP_SHIFT
    for i, v in enumerate(e):
        m |= v << (_FIELD * i)
    return m


def _unpack(m, nvars):
    return (m >> _COMP_SHIFT,
            tuple((m >> (_FIELD * i)) & _EXP_MASK for i in range(nvars)))


def _pack_vec(v):
    return {_pack(comp, e): c for (comp, e), c in v.items()}


def _unpack_vec(pv, nvars):
    return {_unpack(m, nvars): c for m, c in pv.items()}


def _key_memo(order, nvars):
    """Memoized (heap key, total degree) of a packed monomial.

    The heap key is the negated order key, so the order-largest monomial is
    the heap-smallest entry.
    """
    okey = order.key
    memo = {}

    def nk(m):
        k = memo.get(m)
        if k is None:
            comp = m >> _COMP_SHIFT
            e = tuple((m >> (_FIELD * i)) & _EXP_MASK for i in range(nvars))
            k = (tuple(-v for v in okey((comp, e))), sum(e))
            memo[m] = k
        return k

    return nk


def _packed_monic(pv, lm, prime):
    c0 = pv[lm]
    if c0 == 1:
        return pv
    if prime is not None:
        inv = pow(c0, prime - 2, prime)
        return {m: c * inv % prime for m, c in pv.items()}
    return {m: c / c0 for m, c in pv.items()}


def _mora_core(h, bucket, nk, guards, local, cap, prime):
    """Weak normal form of the packed workspace h (mutated in place).

    bucket maps component -> reducer entries (lm, deg, ecart, items) sorted
    by ecart; items hold (monomial, coefficient, term degree).  The caller
    must pass a private copy: the local side list appends to it.
    """
    heap = [(nk(m)[0], m) for m in h]
    heapq.heapify(heap)
    while True:
        lm_h = None
        while heap:
            m = heap[0][1]
            if m in h:
                lm_h = m
                break
            heapq.heappop(heap)
        if lm_h is None:
            return h
        best = None
        lst = bucket.get(lm_h >> _COMP_SHIFT)
        if lst:
            lmg = lm_h | guards
            for entry in lst:
                if (lmg - entry[0]) & guards == guards:
                    best = entry  # ecart-sorted: first divisor is minimal
                    break
        if best is None:
            return h
        deg_lm = nk(lm_h)[1]
        if local and best[2] > 0:
            deg_h = max(nk(m)[1] for m in h)
            if best[2] > deg_h - deg_lm:
                gm = _packed_monic(h, lm_h, prime)
                if gm is h:
                    gm = dict(gm)  # must not alias the mutating workspace
                items = tuple((m, c, nk(m)[1]) for m, c in gm.items())
                entry = (lm_h, deg_h, deg_h - deg_lm, items)
                pos = 0
                while pos < len(lst) and lst[pos][2] <= entry[2]:
                    pos += 1
                lst.insert(pos, entry)
        shift = lm_h - best[0]
        shift_deg = deg_lm - (best[1] - best[2])
        c = h[lm_h]
        if prime is None:
            for m0, cg, d in best[3]:
                if cap is not None and d + shift_deg > cap:
                    continue
                m = m0 + shift
                s = h.get(m)
                if s is None:
                    h[m] = -c * cg
                    heapq.heappush(heap, (nk(m)[0], m))
                else:
                    s = s - c * cg
                    if s == 0:
                        del h[m]
                    else:
                        h[m] = s
        else:
            for m0, cg, d in best[3]:
                if cap is not None and d + shift_deg > cap:
                    continue
                m = m0 + shift
                s = h.get(m)
                s = -c * cg if s is None else s - c * cg
                s %= prime
                if s == 0:
                    if m in h:
                        del h[m]
                else:
                    if m not in h:
                        heapq.heappush(heap, (nk(m)[0], m))
                    h[m] = s


def mora_nf(f, G, order, cap=None, prime=None):
    """Weak normal form of f with respect to G (Mora's algorithm).

    For global orderings this is ordinary leading-term reduction; for local
    orderings the ecart-controlled side list guarantees termination.  With a
    degree cap the computation happens modulo m^(cap+1).
    """
    f = _trunc(f, cap)
    if not f:
        return f
    nvars = order.base.nvars
    nk = _key_memo(order, nvars)
    guards = _guard_mask(nvars)
    bucket = {}
    for g in G:
        if g:
            _add_reducer(_pack_vec(g), bucket, nk, prime)
    h = _mora_core(_pack_vec(f), bucket, nk, guards, order.is_local,
                   cap, prime)
    return _unpack_vec(h, nvars)


def _add_reducer(pv, bucket, nk, prime):
    """Monic packed reducer entry, inserted in ecart order; returns (lm, pv)."""
    lm = min(pv, key=lambda m: nk(m)[0])
    pv = _packed_monic(pv, lm, prime)
    deg = max(nk(m)[1] for m in pv)
    entry = (lm, deg, deg - nk(lm)[1],
             tuple((m, c, nk(m)[1]) for m, c in pv.items()))
    lst = bucket.setdefault(lm >> _COMP_SHIFT, [])
    pos = 0
    while pos < len(lst) and lst[pos][2] <= entry[2]:
        pos += 1
    lst.insert(pos, entry)
    return lm, pv


def _spair_packed(f, g, lf, lg, nvars, prime):
    cf, ef = _unpack(lf, nvars)
    _cg, eg = _unpack(lg, nvars)
    lcm = _pack(cf, tuple(max(a, b) for a, b in zip(ef, eg)))
    sf = lcm - lf
    sg = lcm - lg
    out = {}
    for m, c in f.items():
        out[m + sf] = c
    for m, c in g.items():
        mm = m + sg
        s = out.get(mm)
        s = -c if s is None else s - c
        if prime is not None:
            s %= prime
        if s == 0:
            out.pop(mm, None)
        else:
            out[mm] = s
    return out


def std_basis(vecs, order, cap=None, prime=None):
    """Standard basis (Buchberger loop with Mora normal form), minimalized.

    A degree cap computes the standard basis of the input plus m^(cap+1);
    tail terms of local-order elements never have degree below the leading
    term, so pairs whose lcm exceeds the cap reduce to zero and are skipped.
    """
    nvars = order.base.nvars
    nk = _key_memo(order, nvars)
    guards = _guard_mask(nvars)
    local = order.is_local
    G, leads, lexps, pairs = [], [], [], []
    bucket = {}

    def add_elem(pv):
        if any(m & guards for m in pv):
            raise OverflowError("monomial exponent exceeds the packed field")
        lm, pv = _add_reducer(pv, bucket, nk, prime)
        G.append(pv)
        leads.append(lm)
        lexps.append(_unpack(lm, nvars)[1])

    for v in vecs:
        v = _trunc(v, cap)
        if v:
            add_elem(_pack_vec(v))
    ring = all(m >> _COMP_SHIFT == 0 for pv in G for m in pv)

    def push_pairs(j):
        cj = leads[j] >> _COMP_SHIFT
        for i in range(j):
            if leads[i] >> _COMP_SHIFT != cj:
                continue
            # product criterion (ring elements, global ordering only)
            if (not local and cj == 0 and ring
                    and all(min(a, b) == 0
                            for a, b in zip(lexps[i], lexps[j]))):
                continue
            lcm_e = tuple(max(a, b) for a, b in zip(lexps[i], lexps[j]))
            pairs.append((sum(lcm_e), i, j, _pack(cj, lcm_e), lcm_e))

    for j in range(len(G)):
        push_pairs(j)
    pairs.sort()
    idx = 0
    while idx < len(pairs):
        deg, i, j, lcm_p, lcm_e = pairs[idx]
        idx += 1
        if cap is not None and local and deg > cap:
            continue
        # chain criterion
        skip = False
        ci = leads[i] >> _COMP_SHIFT
        lcm_g = lcm_p | guards
        for k in range(len(G)):
            if k == i or k == j:
                continue
            lk = leads[k]
            if lk >> _COMP_SHIFT == ci and (lcm_g - lk) & guards == guards:
                le_k = lexps[k]
                l1 = tuple(max(a, b) for a, b in zip(lexps[i], le_k))
                l2 = tuple(max(a, b) for a, b in zip(lexps[j], le_k))
                if l1 != lcm_e and l2 != lcm_e:
                    skip = True
                    break
        if skip:
            continue
        h = _spair_packed(G[i], G[j], leads[i], leads[j], nvars, prime)
        if cap is not None:
            h = {m: c for m, c in h.items() if nk(m)[1] <= cap}
        if h:
            # the mora side list appends to its bucket: pass a private copy
            bcopy = {c2: list(l) for c2, l in bucket.items()}
            h = _mora_core(h, bcopy, nk, guards, local, cap, prime)
        if h:
            add_elem(h)
            push_pairs(len(G) - 1)
            pairs[idx:] = sorted(pairs[idx:], key=lambda t: t[:3])
    # minimal basis: drop elements whose lead is divisible by another lead
    keep = []
    for i in range(len(G)):
        li = leads[i]
        ci = li >> _COMP_SHIFT
        lig = li | guards
        redundant = False
        for j in range(len(G)):
            if i == j:
                continue
            lj = leads[j]
            if lj >> _COMP_SHIFT == ci and (lig - lj) & guards == guards:
                if lj != li or j < i:
                    redundant = True
                    break
        if not redundant:
            keep.append((li, G[i]))
    keep.sort(key=lambda t: nk(t[0])[0])
    return [_unpack_vec(pv, nvars) for _lm, pv in keep]


def interreduce_global(G, order):
    """Fully reduced (canonical) basis for a global ordering."""
    out = []
    for i, g in enumerate(G):
        h = _total_reduce(g, [x for j, x in enumerate(G) if j != i], order)
        if h:
            out.append(_monic(h, order))
    out.sort(key=lambda g: order.key(_leading(g, order)), reverse=True)
    return out


def _total_reduce(f, G, order):
    """Reduce every term of f (only valid when termination is guaranteed)."""
    data = [(_leading(g, order), g) for g in G if g]
    h = dict(f)
    result = {}
    while h:
        lm = _leading(h, order)
        hit = None
        for lm_g, g in data:
            if lm_g[0] == lm[0] and _divides(lm_g[1], lm[1]):
                hit = g
                break
        if hit is None:
            result[lm] = h.pop(lm)
        else:
            h = _reduce_step(h, hit, order, lm)
    return result


# ---------------------------------------------------------------------------
# Derived quantities from the leading module.


def leading_exponents(G, order):
    """Minimal generators of the leading module, grouped by component."""
    by_comp = {}
    for g in G:
        comp, e = _leading(g, order)
        by_comp.setdefault(comp, []).append(e)
    for comp, exps in by_comp.items():
        minimal = []
        for e in exps:
            if not any(_divides(o, e) and o != e for o in exps):
                if e not in minimal:
                    minimal.append(e)
        by_comp[comp] = minimal
    return by_comp


def count_standard_monomials(exps, nvars):
    """Number of monomials outside the monomial ideal; INFINITE if unbounded."""
    if any(e == (0,) * nvars for e in exps):
        return 0
    bounds = []
    for i in range(nvars):
        pure = [e[i] for e in exps if sum(e) == e[i]]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    count = 0
    seen = set()
    stack = [(0,) * nvars]
    seen.add(stack[0])
    while stack:
        m = stack.pop()
        if any(_divides(e, m) for e in exps):
            continue
        count += 1
        for i in range(nvars):
            if m[i] + 1 > bounds[i]:
                continue
            m2 = list(m)
            m2[i] += 1
            m2 = tuple(m2)
            if m2 not in seen:
                seen.add(m2)
                stack.append(m2)
    return count


def standard_monomials(exps, nvars):
    """The monomials outside the ideal (assumes finiteness)."""
    out = []
    seen = set()
    stack = [(0,) * nvars]
    seen.add(stack[0])
    while stack:
        m = stack.pop()
        if any(_divides(e, m) for e in exps):
            continue
        out.append(m)
        for i in range(nvars):
            m2 = list(m)
            m2[i] += 1
            m2 = tuple(m2)
            if m2 not in seen:
                seen.add(m2)
                stack.append(m2)
    return sorted(out)


def monomial_krull_dim(exps, nvars):
    """Krull dimension of K[x]/monomial ideal: maximal independent var set."""
    if any(sum(e) == 0 for e in exps):
        return -1
    best = 0
    for mask in range(1 << nvars):
        subset = [i for i in range(nvars) if mask >> i & 1]
        if len(subset) <= best:
            continue
        ok = True
        for e in exps:
            if all(e[i] == 0 or i in subset for i in range(nvars)):
                ok = False
                break
        if ok:
            best = len(subset)
    return best


# Hilbert series numerator of K[x]/I for a monomial ideal I, as the
# coefficient list of N(s) with HS = N(s)/(1-s)^nvars.


def hilbert_numerator(exps, nvars):
    exps = tuple(sorted(_minimal_monomials(exps)))
    return list(_hilbert_num_cached(exps, nvars))


def _minimal_monomials(exps):
    out = []
    for e in exps:
        if not any(_divides(o, e) and o != e for o in exps):
            if e not in out:
                out.append(e)
    return out


@lru_cache(maxsize=None)
def _hilbert_num_cached(exps, nvars):
    if not exps:
        return (1,)
    if any(sum(e) == 0 for e in exps):
        return (0,)
    # base case: pairwise coprime generators
    if all(all(all(min(a, b) == 0 for a, b in zip(e1, e2))
               for e2 in exps if e2 != e1) for e1 in exps):
        num = [1]
        for e in exps:
            num = _poly_mul(num, _one_minus_s_power(sum(e)))
        return tuple(num)
    # pivot on the most frequent variable
    counts = [sum(1 for e in exps if e[i]) for i in range(nvars)]
    i = max(range(nvars), key=lambda k: counts[k])
    pivot = tuple(1 if k == i else 0 for k in range(nvars))
    plus = tuple(sorted(_minimal_monomials(list(exps) + [pivot])))
    colon = tuple(sorted(_minimal_monomials(
        [tuple(max(a - b, 0) for a, b in zip(e, pivot)) for e in exps])))
    a = list(_hilbert_num_cached(plus, nvars))
    b = list(_hilbert_num_cached(colon, nvars))
    return tuple(_poly_add(a, _poly_shift(b, 1)))


def _one_minus_s_power(d):
    out = [0] * (d + 1)
    out[0] = 1
    out[d] = -1
    return out


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(n)]


def _poly_shift(a, k):
    return [0] * k + list(a)


class HilbertPoly:
    """Univariate polynomial in t with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = [QQ(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    def __eq__(self, other):
        if isinstance(other, HilbertPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, t):
        out = QQ(0)
        for c in reversed(self.coeffs):
            out = out * t + c
        return out

    def degree(self):
        return len(self.coeffs) - 1

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("t" if c == 1 else f"{c}*t")
            else:
                parts.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
        return " + ".join(reversed(parts)).replace("+ -", "- ")

    def __repr__(self):
        return f"HilbertPoly({self})"


def hilbert_polynomial(exps, nvars):
    """Hilbert polynomial of K[x]/I for the monomial ideal I."""
    num = hilbert_numerator(exps, nvars)
    divisions = 0
    while num and sum(num) == 0:
        acc = 0
        out = []
        for c in num[:-1]:
            acc += c
            out.append(acc)
        num = out
        divisions += 1
    d = nvars - divisions  # HS = num/(1-s)^d with num(1) != 0
    if d <= 0:
        return HilbertPoly([])
    # h(t) = sum_i num[i] * C(t - i + d - 1, d - 1)
    coeffs = [QQ(0)] * d
    for i, c in enumerate(num):
        if c == 0:
            continue
        # expand C(t - i + d - 1, d - 1) as polynomial in t
        term = [QQ(1)]
        for j in range(d - 1):
            # multiply by (t - i + d - 1 - j)
            shift = QQ(d - 1 - j - i)
            term = _poly_add([x * shift for x in term], _poly_shift(term, 1))
        fact = 1
        for j in range(2, d):
            fact *= j
        for k, x in enumerate(term):
            coeffs[k] += QQ(c) * x / fact
    return HilbertPoly(coeffs)


# ---------------------------------------------------------------------------
# Public ideal interface on Polynomial lists.


class IdealBasis:
    """Generators plus (lazily) a completed standard basis for an ordering."""

    __slots__ = ("generators", "ordering", "completed", "nvars")

    def __init__(self, generators, ordering=None, nvars=None):
        self.generators = [g for g in generators]
        if nvars is None:
            nvars = generators[0].nvars if generators else 4
        self.nvars = nvars
        if ordering is None:
            ordering = GradedRevLex(nvars)
        self.ordering = ordering
        self.completed = None

    def std(self):
        if self.completed is None:
            order = ModOrder(self.ordering)
            vecs = [poly_to_vec(g) for g in self.generators if g]
            G = std_basis(vecs, order)
            if not self.ordering.is_local:
                G = interreduce_global(G, order)
            else:
                G = _canonicalize_local(G, order, self.nvars)
            self.completed = [vec_to_poly(g, self.nvars).primitive() for g in G]
        return self.completed

    def lead_exponents(self):
        order = ModOrder(self.ordering)
        return [max(g.terms, key=self.ordering.key) for g in self.std()]

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"IdealBasis([{gens}], {self.ordering.kind})"


def _canonicalize_local(G, order, nvars):
    """Canonical completed basis for a local ordering where possible.

    Zero-dimensional case: all monomials of degree >= N lie in the ideal
    (N = 1 + top standard-monomial degree), so tails can be fully reduced in
    the finite-dimensional algebra.  Homogeneous case: degreewise reduction
    terminates.  Otherwise return the minimal monic basis sorted by leading
    term (leading ideal is canonical; tails may depend on generator order).
    """
    if not G:
        return G
    exps = [_leading(g, order)[1] for g in G]
    v = count_standard_monomials(exps, nvars)
    if v is not INFINITE:
        N = 1 + max((sum(m) for m in standard_monomials(exps, nvars)),
                    default=0)
        data = [(_leading(g, order), g) for g in G]
        out = []
        for lm, g in data:
            if sum(lm[1]) > N:
                continue
            tail = {m: c for m, c in _monic(g, order).items() if m != lm}
            out.append(_local_tail_reduce(lm, tail, data, order, N))
        out.sort(key=lambda g: order.key(_leading(g, order)), reverse=True)
        return out
    if all(_is_homogeneous_vec(g) for g in G):
        out = []
        for i, g in enumerate(G):
            others = G[:i] + G[i + 1:]
            h = _total_reduce(g, others, order)
            if h:
                out.append(_monic(h, order))
        out.sort(key=lambda g: order.key(_leading(g, order)), reverse=True)
        return out
    return G


def _is_homogeneous_vec(v):
    degs = {sum(e) for (_c, e) in v}
    return len(degs) <= 1


def _local_tail_reduce(lm, tail, data, order, N):
    """lead + tail with the tail fully reduced; degree >= N+1 terms dropped."""
    h = {m: c for m, c in tail.items() if sum(m[1]) <= N}
    result = {lm: QQ(1)}
    while h:
        m = _leading(h, order)
        hit = None
        for lm_g, g in data:
            if lm_g[0] == m[0] and _divides(lm_g[1], m[1]):
                hit = g
                break
        if hit is None:
            result[m] = h.pop(m)
        else:
            h = _reduce_step(h, _monic(hit, order), order, m)
            h = {mm: c for mm, c in h.items() if sum(mm[1]) <= N}
    return result


def vdim(ideal):
    """Number of standard monomials of the quotient; INFINITE if unbounded."""
    ideal.std()
    exps = ideal.lead_exponents()
    return count_standard_monomials(exps, ideal.nvars)


def krull_dim(ideal):
    exps = ideal.lead_exponents()
    return monomial_krull_dim(exps, ideal.nvars)


def hilbert_poly(ideal):
    for g in ideal.generators:
        if not g.is_homogeneous():
            raise ValueError("hilbert polynomial needs a homogeneous ideal")
    exps = ideal.lead_exponents()
    return hilbert_polynomial(exps, ideal.nvars)


def normal_form(ideal, f):
    order = ModOrder(ideal.ordering)
    G = [poly_to_vec(g) for g in ideal.std()]
    return vec_to_poly(mora_nf(poly_to_vec(f), G, order), ideal.nvars)


def contains(ideal, f):
    return normal_form(ideal, f).is_zero()


def ideal_contains(ideal, other):
    gens = other.generators if isinstance(other, IdealBasis) else other
    return all(contains(ideal, g) for g in gens)


def ideal_equal(a, b):
    return ideal_contains(a, b) and ideal_contains(b, a)


# ---------------------------------------------------------------------------
# Elimination, saturation, intersection (auxiliary-variable constructions).


def _shift_poly(p, extra):
    """Embed into a ring with `extra` new leading variables."""
    pad = (0,) * extra
    return Polynomial({pad + e: c for e, c in p.terms.items()},
                      p.nvars + extra, _clean=False)


def _unshift_poly(p, extra):
    return Polynomial({e[extra:]: c for e, c in p.terms.items()},
                      p.nvars - extra, _clean=False)


def eliminate_first(gens, nelim, nvars):
    """Basis of the elimination ideal w.r.t. the first nelim variables."""
    order = ModOrder(BlockElim(nelim, nvars))
    G = std_basis([poly_to_vec(g) for g in gens if g], order)
    G = interreduce_global(G, order)
    out = []
    for g in G:
        if all(all(v == 0 for v in e[:nelim]) for (_c, e) in g):
            out.append(vec_to_poly(g, nvars).primitive())
    return out


def saturate(ideal, f):
    """(I : f^infinity) via the auxiliary-variable (Rabinowitsch) trick."""
    gens = ideal.generators if isinstance(ideal, IdealBasis) else list(ideal)
    nv = gens[0].nvars if gens else f.nvars
    if f.is_zero():
        raise ValueError("cannot saturate by zero")
    shifted = [_shift_poly(g, 1) for g in gens]
    uf = _shift_poly(f, 1).mul_monomial((1,) + (0,) * nv)
    shifted.append(uf - Polynomial.constant(1, nv + 1))
    elim = eliminate_first(shifted, 1, nv + 1)
    out = [_unshift_poly(g, 1) for g in elim]
    if not out:
        out = [Polynomial.zero(nv)]
    if isinstance(ideal, IdealBasis) and isinstance(
            ideal.ordering, (GradedRevLex, LocalRevLex)):
        order = type(ideal.ordering)(nv)
    else:
        order = GradedRevLex(nv)
    return IdealBasis(out, order, nv)


def intersect(a, b):
    """Ideal intersection via t*I + (1-t)*J and elimination of t."""
    ga = a.generators if isinstance(a, IdealBasis) else list(a)
    gb = b.generators if isinstance(b, IdealBasis) else list(b)
    nv = ga[0].nvars
    t_mono = (1,) + (0,) * nv
    shifted = [_shift_poly(g, 1).mul_monomial(t_mono) for g in ga]
    one_minus_t = Polynomial.constant(1, nv + 1) - Polynomial.monomial(t_mono)
    shifted += [_shift_poly(g, 1) * one_minus_t for g in gb]
    elim = eliminate_first(shifted, 1, nv + 1)
    out = [_unshift_poly(g, 1) for g in elim]
    return IdealBasis(out if out else [Polynomial.zero(nv)],
                      GradedRevLex(nv), nv)


def ideal_sum(a, b):
    ga = a.generators if isinstance(a, IdealBasis) else list(a)
    gb = b.generators if isinstance(b, IdealBasis) else list(b)
    order = a.ordering if isinstance(a, IdealBasis) else GradedRevLex(ga[0].nvars)
    return IdealBasis(ga + gb, order, ga[0].nvars)


def _cap_schedule(max_cap):
    return tuple(c for c in (4, 6, 8, 10, 14, 20, 28)
                 if c < max_cap) + (max_cap,)


def _counts_with_corner(by_comp, ncomp, nvars):
    """Total standard-monomial count and top corner degree, or None."""
    total = 0
    corner = 0
    for comp in range(ncomp):
        exps = by_comp.get(comp, [])
        n = count_standard_monomials(exps, nvars)
        if n is INFINITE:
            return None
        total += n
        top = max((sum(m) for m in standard_monomials(exps, nvars)),
                  default=-1)
        corner = max(corner, top + 1)
    return total, corner


def _capped_staircase(vecs, order, cap):
    """Leading exponents of the capped standard basis, computed modulo the
    two fixed primes.  Returns None unless both staircases agree (a prime
    dividing a pivot coefficient would distort the leading module)."""
    stair = None
    by_comp = None
    for p in STAIRCASE_PRIMES:
        G = std_basis([_vec_mod(v, p) for v in vecs], order, cap=cap, prime=p)
        by_comp = leading_exponents(G, order)
        key = {c: sorted(es) for c, es in by_comp.items()}
        if stair is None:
            stair = key
        elif stair != key:
            return None
    return by_comp


def _certified_staircase(vecs, order, cap):
    """Capped-staircase with exact-rational fallback on prime disagreement."""
    by_comp = _capped_staircase(vecs, order, cap)
    if by_comp is None:
        G = std_basis(vecs, order, cap=cap)
        by_comp = leading_exponents(G, order)
    return by_comp


def vdim_modular(gens, nvars):
    """Global quotient dimension via two-prime staircases; None unless the
    primes agree on the leading ideal."""
    order = ModOrder(GradedRevLex(nvars))
    vecs = [poly_to_vec(g) for g in gens if g]
    if not vecs:
        return INFINITE
    by_comp = _capped_staircase(vecs, order, None)
    if by_comp is None:
        return None
    return count_standard_monomials(by_comp.get(0, []), nvars)


def rational_reconstruct(r, prime):
    """The unique a/b with a*1/b = r mod prime and |a|, b <= sqrt(prime/2),
    or None when no such fraction exists."""
    bound = isqrt(prime // 2)
    r0, r1 = prime, r % prime
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound or gcd(r1, abs(t1)) != 1:
        return None
    return QQ(r1, t1) if t1 > 0 else QQ(-r1, -t1)


def modular_coordinate_roots(gens, nvars, i, prime):
    """Roots in F_p of the minimal polynomial of x_i on the quotient, or
    None when the eliminant is missing (positive-dimensional image)."""
    import sympy
    perm = [k for k in range(nvars) if k != i] + [i]
    order = ModOrder(BlockElim(nvars - 1, nvars))
    vecs = []
    for g in gens:
        if not g:
            continue
        moved = {tuple(e[k] for k in perm): c for e, c in g.terms.items()}
        vecs.append(_vec_mod({(0, e): c for e, c in moved.items()}, prime))
    G = std_basis(vecs, order, prime=prime)
    best = None
    for g in G:
        if all(all(e[k] == 0 for k in range(nvars - 1)) for (_c, e) in g):
            d = max(e[nvars - 1] for (_c, e) in g)
            if best is None or d < max(e[nvars - 1] for (_c, e) in best):
                best = g
    if best is None:
        return None
    t = sympy.Symbol("t")
    expr = sum(c * t ** e[nvars - 1] for (_comp, e), c in best.items())
    poly = sympy.Poly(expr, t, modulus=prime)
    return [int(r) % prime for r in poly.ground_roots()]


def capped_local_vdim(polys, nvars, max_cap=42):
    """vdim of the local quotient via degree-capped standard bases.

    Modulo m^(cap+1) the leading ideal is exact below the cap; once the
    quotient's corner degree fits under the cap, the count is certified
    (Krull intersection: m^N inside I + m^(cap+1) with N <= cap forces
    m^N inside I).  Returns INFINITE when no cap certifies finiteness.
    """
    order = ModOrder(LocalRevLex(nvars))
    vecs = [poly_to_vec(p) for p in polys if p]
    if not vecs:
        return INFINITE
    for cap in _cap_schedule(max_cap):
        by_comp = _certified_staircase(vecs, order, cap)
        got = _counts_with_corner(by_comp, 1, nvars)
        if got is not None and got[1] <= cap:
            return got[0]
    return INFINITE


def module_vdim(vectors, ncomp, nvars, pot=True, local=True, max_cap=42):
    """vdim of F/M for M generated by `vectors` (lists of Polynomials)."""
    base = LocalRevLex(nvars) if local else GradedRevLex(nvars)
    order = ModOrder(base, pot=pot)
    vecs = []
    for vec in vectors:
        v = {}
        for comp, p in enumerate(vec):
            for e, c in p.terms.items():
                v[(comp, e)] = c
        if v:
            vecs.append(v)
    if not vecs:
        return INFINITE
    if not local:
        G = std_basis(vecs, order)
        got = _counts_with_corner(leading_exponents(G, order), ncomp, nvars)
        return INFINITE if got is None else got[0]
    for cap in _cap_schedule(max_cap):
        by_comp = _certified_staircase(vecs, order, cap)
        got = _counts_with_corner(by_comp, ncomp, nvars)
        if got is not None and got[1] <= cap:
            return got[0]
    return INFINITE
