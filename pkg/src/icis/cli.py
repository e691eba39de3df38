"""Command-line frontend: classify an ideal, regenerate the family tables,
or run the self-test suite.

Exit codes for `classify`: 0 unimodular type found, 1 not unimodular,
2 input or computation error, 3 degenerate germ (not isolated, not a
complete intersection, or a hypersurface in disguise).
"""

import argparse
import json
import sys

from . import invariants
from .catalogue import acceptance_grid, expected_invariants, normal_form
from .classify import classify, random_linear_change
from .errors import (Hypersurface, IcisError, NotCompleteIntersection,
                     NotIsolated, ParseError, PositiveDimensionalSingularLocus)
from .invariants import milnor_icis, tjurina_icis
from .poly import format_polynomial, parse_polynomial

EXIT_OK = 0
EXIT_NOT_UNIMODULAR = 1
EXIT_INPUT_ERROR = 2
EXIT_DEGENERATE = 3

_DEGENERATE = (NotIsolated, NotCompleteIntersection, Hypersurface,
               PositiveDimensionalSingularLocus)


def _strip_comments(text):
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def parse_ideal(text):
    """Two generators separated by a comma or newline; # starts a comment."""
    parts = [p.strip() for p in
             _strip_comments(text).replace("\n", ",").split(",")]
    parts = [p for p in parts if p]
    if len(parts) != 2:
        raise ParseError(f"expected exactly 2 generators, got {len(parts)}")
    return parse_polynomial(parts[0]), parse_polynomial(parts[1])


def _hilbert_str(h):
    parts = []
    for k, c in enumerate(h.coeffs):
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            mono = "t" if k == 1 else f"t^{k}"
            parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts) if parts else "0"


def _result_json(res):
    out = {
        "unimodular": res.unimodular,
        "type": None,
        "mu": res.invariants.mu,
        "tau": res.invariants.tau,
        "corank": res.invariants.corank,
        "twojet": None,
        "blowup": None,
        "diagnostics": list(res.diagnostics),
    }
    if res.type is not None:
        out["type"] = {
            "family": res.type.family,
            "indices": list(res.type.indices),
            "name": res.type.render(),
            "has_modulus": res.type.has_modulus,
        }
    if res.twojet is not None:
        out["twojet"] = {
            "class": res.twojet.cls,
            "s": res.twojet.s,
            "t": res.twojet.t,
            "components": [
                {"d": c.d, "h": _hilbert_str(c.h), "j": c.j}
                for c in res.twojet.components
            ],
        }
    if res.blowup is not None:
        out["blowup"] = {
            "smooth": res.blowup.smooth,
            "germs": [t.render() for t in res.blowup.types],
        }
    return out


def _print_result(res, as_json, out=None):
    if out is None:
        out = sys.stdout
    if as_json:
        json.dump(_result_json(res), out, indent=2, sort_keys=True)
        out.write("\n")
        return
    inv = res.invariants
    out.write(f"{res.render()}  mu={inv.mu} tau={inv.tau}\n")
    jet = res.twojet.cls if res.twojet is not None else "-"
    B = res.blowup.render() if res.blowup is not None else "-"
    out.write(f"2-jet: {jet}  B: {B}\n")
    for d in res.diagnostics:
        out.write(f"note: {d}\n")


def cmd_classify(args):
    if args.expr is not None:
        text = args.expr
    elif args.file == "-":
        text = sys.stdin.read()
    elif args.file is not None:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    else:
        print("error: provide FILE or -e \"f, g\"", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        f, g = parse_ideal(text)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    invariants.MU_CAP = args.mu_cap
    try:
        res = classify(f, g, seed=args.seed)
        if args.verify:
            again = milnor_icis(f, g, seed=args.seed + 1)
            if again != res.invariants.mu:
                print(f"error: mu verification failed "
                      f"({res.invariants.mu} vs {again})", file=sys.stderr)
                return EXIT_INPUT_ERROR
    except _DEGENERATE as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except IcisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    _print_result(res, args.json)
    return EXIT_OK if res.unimodular else EXIT_NOT_UNIMODULAR


def _table_rows(family=None, perturb=False):
    for t in acceptance_grid():
        if family is not None and t.family.lower() != family.lower():
            continue
        f, g = normal_form(t)
        mu = milnor_icis(f, g)
        tau = tjurina_icis(f, g)
        emu, etau = expected_invariants(t)
        if perturb:
            emu += 1
            perturb = False
        yield {
            "name": t.render(),
            "generators": [format_polynomial(f), format_polynomial(g)],
            "mu": mu, "tau": tau,
            "expected_mu": emu, "expected_tau": etau,
            "ok": (mu, tau) == (emu, etau),
        }


def cmd_tables(args):
    rows = list(_table_rows(family=args.family,
                            perturb=getattr(args, "inject_failure", False)))
    if args.json:
        json.dump(rows, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        for r in rows:
            status = "PASS" if r["ok"] else "FAIL"
            print(f"{status}  {r['name']:<14} mu={r['mu']:<3} "
                  f"tau={r['tau']:<3} <{r['generators'][0]}; "
                  f"{r['generators'][1]}>")
    return EXIT_OK if all(r["ok"] for r in rows) else 1


_SELFTEST_TYPES = ("I", "T", "Jprime", "Kprime", "L", "M")


def cmd_selftest(args):
    failures = 0
    rows = list(_table_rows(perturb=getattr(args, "inject_failure", False)))
    for r in rows:
        if not r["ok"]:
            failures += 1
            print(f"FAIL table {r['name']}: mu/tau ({r['mu']},{r['tau']}) "
                  f"!= ({r['expected_mu']},{r['expected_tau']})")
    print(f"table fidelity: {len(rows) - failures}/{len(rows)} rows")
    # round-trip on one representative per family, identity + one seed
    picked = []
    for fam in _SELFTEST_TYPES:
        picked.append(next(t for t in acceptance_grid() if t.family == fam))
    for t in picked:
        f, g = normal_form(t)
        for seed in (-1, args.seed):
            ch = random_linear_change(seed)
            res = classify(ch.apply(f), ch.apply(g))
            if res.type != t:
                failures += 1
                print(f"FAIL round-trip {t.render()} seed={seed}: "
                      f"got {res.render()}")
    print(f"round-trip: {2 * len(picked)} classifications checked")
    print("selftest:", "FAIL" if failures else "PASS")
    return 1 if failures else EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(
        prog="icis",
        description="Classify unimodular complete-intersection surface "
                    "singularities in four variables.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify an ideal <f, g>")
    c.add_argument("file", nargs="?", default=None, metavar="FILE",
                   help="file with two generators ('-' for stdin)")
    c.add_argument("-e", "--expr", default=None, metavar='"f, g"',
                   help="inline generators")
    c.add_argument("--json", action="store_true")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--mu-cap", type=int, default=40, dest="mu_cap")
    c.add_argument("--verify", action="store_true",
                   help="recompute mu with a second generic draw")
    c.set_defaults(func=cmd_classify)

    t = sub.add_parser("tables", help="regenerate the family tables")
    t.add_argument("--family", default=None,
                   choices=["I", "T", "Jprime", "Kprime", "Kb", "L", "M"])
    t.add_argument("--json", action="store_true")
    t.add_argument("--inject-failure", action="store_true",
                   help=argparse.SUPPRESS)
    t.set_defaults(func=cmd_tables)

    s = sub.add_parser("selftest", help="run the built-in checks")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--inject-failure", action="store_true",
                   help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "mu_cap", 40) < 20:
        print("error: --mu-cap must be at least 20", file=sys.stderr)
        return EXIT_INPUT_ERROR
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
