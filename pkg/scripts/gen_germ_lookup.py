#!/usr/bin/env python3
"""Regenerate the (mu, tau) lookup for triple-root corank-2 germs.

Computes Milnor and Tjurina numbers of the exceptional-family normal forms
with the local engine and emits the table body for src/icis/germdata.py.
The cubic part of every family below is a perfect cube, so (mu, tau) is
the discriminating pair; the script asserts it separates all entries.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from icis.invariants import milnor_hyp, tjurina_hyp  # noqa: E402
from icis.poly import Polynomial  # noqa: E402

X = Polynomial.variable(0, 2)
Y = Polynomial.variable(1, 2)


def families():
    # exceptional unimodal and bimodal hypersurface germs with cubic x^3
    yield ("E", (6,)), X ** 3 + Y ** 4
    yield ("E", (7,)), X ** 3 + X * Y ** 3
    yield ("E", (8,)), X ** 3 + Y ** 5
    yield ("E", (12,)), X ** 3 + Y ** 7
    yield ("E", (13,)), X ** 3 + X * Y ** 5
    yield ("E", (14,)), X ** 3 + Y ** 8
    # x^3 + x^2 y^k + (modulus-generic tail); the label index is k-1 so
    # that the parent-family decision tables read off their own index
    for k in (2, 3, 4):
        yield ("J", (k - 1, 0)), X ** 3 + X ** 2 * Y ** k + Y ** (3 * k)
        for i in range(1, 3 * k + 1):
            yield (("J", (k - 1, i)),
                   X ** 3 + X ** 2 * Y ** k + Y ** (3 * k + i))


def main():
    rows = []
    seen = {}
    for germ, f in families():
        mu = milnor_hyp(f)
        tau = tjurina_hyp(f)
        key = (mu, tau)
        if key in seen:
            raise SystemExit(f"collision at {key}: {seen[key]} vs {germ}")
        seen[key] = germ
        rows.append((mu, tau, germ))
    for mu, tau, (kind, idx) in rows:
        print(f"    ({mu}, {tau}, ({kind!r}, {idx!r})),")


if __name__ == "__main__":
    main()
