"""Sparse exact-rational multivariate polynomials in x, y, z, w.

The ambient ring of the public API is Q[x,y,z,w]; internal routines
(elimination, saturation) build polynomials over more variables.  Exponent
vectors are plain tuples of non-negative ints, coefficients are exact
rationals.  All operations are pure; polynomials are never mutated after
construction.
"""

from math import gcd

from .errors import ParseError

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ

VARS = ("x", "y", "z", "w")
NVARS = 4

ZERO4 = (0, 0, 0, 0)


def _add_exps(a, b):
    return tuple(x + y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Monomial orderings.  key(exp) returns a tuple; larger key = larger monomial.
# Graded degrevlex: higher total degree wins; local degrevlex: lower total
# degree wins (the ordering of the local ring O = Q[x]_<x>).


class GradedRevLex:
    """Global degree-reverse-lexicographic ordering (dp)."""

    kind = "GradedDegRevLex"
    is_local = False

    def __init__(self, nvars=NVARS):
        self.nvars = nvars

    def key(self, e):
        return (sum(e),) + tuple(-v for v in reversed(e))


class LocalRevLex:
    """Local degree-reverse-lexicographic ordering (ds)."""

    kind = "LocalDegRevLex"
    is_local = True

    def __init__(self, nvars=NVARS):
        self.nvars = nvars

    def key(self, e):
        return (-sum(e),) + tuple(-v for v in reversed(e))


class BlockElim:
    """Elimination order: the first `nelim` variables dominate (each block dp)."""

    kind = "Elimination"
    is_local = False

    def __init__(self, nelim, nvars):
        self.nelim = nelim
        self.nvars = nvars

    def key(self, e):
        a, b = e[:self.nelim], e[self.nelim:]
        return ((sum(a),) + tuple(-v for v in reversed(a))
                + (sum(b),) + tuple(-v for v in reversed(b)))


class Polynomial:
    """Sparse polynomial: dict from exponent tuple to nonzero rational."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms=None, nvars=NVARS, _clean=True):
        if terms is None:
            terms = {}
        if _clean:
            terms = {e: QQ(c) for e, c in terms.items() if c != 0}
        self.terms = terms
        self.nvars = nvars

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars=NVARS):
        return cls({}, nvars, _clean=False)

    @classmethod
    def constant(cls, c, nvars=NVARS):
        c = QQ(c)
        if c == 0:
            return cls.zero(nvars)
        return cls({(0,) * nvars: c}, nvars, _clean=False)

    @classmethod
    def variable(cls, i, nvars=NVARS):
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): QQ(1)}, nvars, _clean=False)

    @classmethod
    def monomial(cls, e, c=1):
        c = QQ(c)
        if c == 0:
            return cls.zero(len(e))
        return cls({tuple(e): c}, len(e), _clean=False)

    # -- basic queries -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self):
        """Maximal total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def order(self):
        """Minimal total degree among terms; None for zero (infinite order)."""
        if not self.terms:
            return None
        return min(sum(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, QQ(0))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.nvars)
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e)
            if s is None:
                t[e] = c
            else:
                s = s + c
                if s == 0:
                    del t[e]
                else:
                    t[e] = s
        return Polynomial(t, self.nvars, _clean=False)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()},
                          self.nvars, _clean=False)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = QQ(other)
            if c == 0:
                return Polynomial.zero(self.nvars)
            return Polynomial({e: v * c for e, v in self.terms.items()},
                              self.nvars, _clean=False)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exps(e1, e2)
                s = t.get(e)
                if s is None:
                    t[e] = c1 * c2
                else:
                    t[e] = s + c1 * c2
        return Polynomial({e: c for e, c in t.items() if c != 0},
                          self.nvars, _clean=False)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def mul_monomial(self, e, c=1):
        c = QQ(c)
        return Polynomial({_add_exps(e0, e): c0 * c
                           for e0, c0 in self.terms.items()},
                          self.nvars, _clean=c == 0)

    # -- calculus-ish --------------------------------------------------------

    def derivative(self, i):
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                t[tuple(e2)] = c * e[i]
        return Polynomial(t, self.nvars, _clean=False)

    def jet(self, k):
        """Sum of the terms of total degree <= k."""
        return Polynomial({e: c for e, c in self.terms.items() if sum(e) <= k},
                          self.nvars, _clean=False)

    def homogeneous_part(self, k):
        return Polynomial({e: c for e, c in self.terms.items() if sum(e) == k},
                          self.nvars, _clean=False)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def substitute(self, images):
        """Evaluate at x_i -> images[i] (Polynomial or rational)."""
        imgs = [im if isinstance(im, Polynomial)
                else Polynomial.constant(im, self.nvars) for im in images]
        nv = imgs[0].nvars if imgs else self.nvars
        # Horner-free: compute power tables lazily per variable.
        powers = [{0: Polynomial.constant(1, nv)} for _ in range(self.nvars)]

        def power(i, k):
            tab = powers[i]
            if k not in tab:
                tab[k] = power(i, k - 1) * imgs[i]
            return tab[k]

        result = Polynomial.zero(nv)
        for e, c in self.terms.items():
            term = Polynomial.constant(c, nv)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def primitive(self):
        """Divide out content: integer coefficients, gcd 1, leading-ish sign +."""
        if not self.terms:
            return self
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = gcd(num_gcd, abs(int(c.numerator)))
            d = int(c.denominator)
            den_lcm = den_lcm * d // gcd(den_lcm, d)
        factor = QQ(den_lcm, num_gcd)
        t = {e: c * factor for e, c in self.terms.items()}
        # deterministic sign: make the degrevlex-leading coefficient positive
        lead = max(t, key=_DP_KEYS.setdefault(self.nvars, GradedRevLex(self.nvars)).key)
        if t[lead] < 0:
            t = {e: -c for e, c in t.items()}
        return Polynomial(t, self.nvars, _clean=False)

    # -- printing ------------------------------------------------------------

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)})"


_DP_KEYS = {}


def _var_names(nvars):
    if nvars <= NVARS:
        return VARS[:nvars]
    return VARS + tuple(f"u{i}" for i in range(nvars - NVARS))


def format_polynomial(p):
    """Canonical printer: descending graded degrevlex term order."""
    if not p.terms:
        return "0"
    names = _var_names(p.nvars)
    order = _DP_KEYS.setdefault(p.nvars, GradedRevLex(p.nvars))
    out = []
    for e in sorted(p.terms, key=order.key, reverse=True):
        c = p.terms[e]
        factors = []
        for i, k in enumerate(e):
            if k == 1:
                factors.append(names[i])
            elif k > 1:
                factors.append(f"{names[i]}^{k}")
        mono = "*".join(factors)
        ac = abs(c)
        if not mono:
            piece = str(ac)
        elif ac == 1:
            piece = mono
        else:
            piece = f"{ac}*{mono}"
        if not out:
            out.append(piece if c > 0 else "-" + piece)
        else:
            out.append((" + " if c > 0 else " - ") + piece)
    return "".join(out)


# ---------------------------------------------------------------------------
# Parser.  Grammar: variables x,y,z,w; integer and rational p/q literals;
# + - * ^; parentheses; whitespace insignificant; '*' optional only between a
# coefficient and a variable.


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._skip_ws()
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def take(self):
        ch = self.peek()
        self.pos += 1
        return ch

    def take_int(self):
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])


def parse_polynomial(text, nvars=NVARS):
    """Parse an expression into a Polynomial; raises ParseError on bad input."""
    toks = _Tokens(text)
    p = _parse_sum(toks, nvars)
    if toks.peek() is not None:
        raise ParseError(f"unexpected character {toks.peek()!r}", toks.pos)
    return p


def _parse_sum(toks, nvars):
    ch = toks.peek()
    negate = False
    if ch in ("+", "-"):
        toks.take()
        negate = ch == "-"
    p = _parse_product(toks, nvars)
    if negate:
        p = -p
    while toks.peek() in ("+", "-"):
        op = toks.take()
        q = _parse_product(toks, nvars)
        p = p - q if op == "-" else p + q
    return p


def _parse_product(toks, nvars):
    p = _parse_power(toks, nvars)
    while True:
        ch = toks.peek()
        if ch == "*":
            toks.take()
            p = p * _parse_power(toks, nvars)
        elif ch is not None and (ch.isalpha() or ch == "("):
            # implicit product: only allowed right after a coefficient, and
            # _parse_power below rejects '(' adjacency by requiring a variable
            if ch == "(":
                raise ParseError("missing '*' before '('", toks.pos)
            p = p * _parse_power(toks, nvars)
        else:
            return p


def _parse_power(toks, nvars):
    base = _parse_atom(toks, nvars)
    if toks.peek() == "^":
        toks.take()
        neg = False
        if toks.peek() == "-":
            raise ParseError("negative exponent", toks.pos)
        n = toks.take_int()
        base = base ** n
    return base


def _parse_atom(toks, nvars):
    ch = toks.peek()
    if ch is None:
        raise ParseError("unexpected end of input", toks.pos)
    if ch == "(":
        toks.take()
        p = _parse_sum(toks, nvars)
        if toks.peek() != ")":
            raise ParseError("expected ')'", toks.pos)
        toks.take()
        return p
    if ch.isdigit():
        num = toks.take_int()
        if toks.peek() == "/":
            toks.take()
            den = toks.take_int()
            if den == 0:
                raise ParseError("zero denominator", toks.pos)
            return Polynomial.constant(QQ(num, den), nvars)
        return Polynomial.constant(num, nvars)
    if ch.isalpha():
        pos = toks.pos
        name = toks.take()
        names = _var_names(nvars)
        if name not in names:
            raise ParseError(f"unknown variable {name!r}", pos)
        return Polynomial.variable(names.index(name), nvars)
    raise ParseError(f"unexpected character {ch!r}", toks.pos)


# convenience handles for building polynomials in code
X = Polynomial.variable(0)
Y = Polynomial.variable(1)
Z = Polynomial.variable(2)
W = Polynomial.variable(3)
