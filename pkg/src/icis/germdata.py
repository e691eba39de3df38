"""Frozen (mu, tau) lookup for corank-2 germs with a perfect-cube cubic.

Regenerated by scripts/gen_germ_lookup.py, which computes Milnor and
Tjurina numbers of the exceptional families with the local engine and
asserts that (mu, tau) separates every entry.
"""

_ENTRIES = (
    (6, 6, ("E", (6,))),
    (7, 7, ("E", (7,))),
    (8, 8, ("E", (8,))),
    (12, 12, ("E", (12,))),
    (13, 13, ("E", (13,))),
    (14, 14, ("E", (14,))),
    (10, 10, ("J", (1, 0))),
    (11, 10, ("J", (1, 1))),
    (12, 11, ("J", (1, 2))),
    (13, 12, ("J", (1, 3))),
    (14, 13, ("J", (1, 4))),
    (15, 14, ("J", (1, 5))),
    (16, 15, ("J", (1, 6))),
    (16, 16, ("J", (2, 0))),
    (17, 15, ("J", (2, 1))),
    (18, 16, ("J", (2, 2))),
    (19, 17, ("J", (2, 3))),
    (20, 18, ("J", (2, 4))),
    (21, 19, ("J", (2, 5))),
    (22, 20, ("J", (2, 6))),
    (23, 21, ("J", (2, 7))),
    (24, 22, ("J", (2, 8))),
    (25, 23, ("J", (2, 9))),
    (22, 22, ("J", (3, 0))),
    (23, 20, ("J", (3, 1))),
    (24, 21, ("J", (3, 2))),
    (25, 22, ("J", (3, 3))),
    (26, 23, ("J", (3, 4))),
    (27, 24, ("J", (3, 5))),
    (28, 25, ("J", (3, 6))),
    (29, 26, ("J", (3, 7))),
    (30, 27, ("J", (3, 8))),
    (31, 28, ("J", (3, 9))),
    (32, 29, ("J", (3, 10))),
    (33, 30, ("J", (3, 11))),
    (34, 31, ("J", (3, 12))),
)

TRIPLE_ROOT_GERMS = {(mu, tau): germ for mu, tau, germ in _ENTRIES}
