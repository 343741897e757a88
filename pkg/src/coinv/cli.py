"""Command-line surface for the library.

Subcommands expose presentations, dimensions, Hilbert series, graded
bases, operator words on weight families, tableau combinatorics, and
the verification suites.  All arithmetic is exact; there are no
tolerance flags.  Exit codes: 0 success, 1 verification failure,
2 bad input, 3 internal invariant breach, 4 window overflow.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import factorial

from .errors import (
    CoinvError,
    NonTerminatingError,
    NotInvariantError,
    WindowOverflowError,
)
from .glaction import (
    WeightFamily,
    apply_operator_family,
    hilbert_identity_check,
    ideal_invariance_check,
    relation_report,
    weight_dim_report,
)
from .polynomials import Poly, verify_identity_suite
from .quotients import (
    ideals_equal,
    is_nonzero,
    presentation,
    quotient_identity_report,
    tanisaki_generators_e,
    tanisaki_generators_h,
)
from .reporting import Report
from .shapes import (
    Composition,
    Partition,
    compositions_of,
    partitions_of,
    quotient_top_degree,
    transpose,
)
from .tableaux import (
    count_column_strict,
    enumerate_column_strict,
    enumerate_semistandard,
    kostka,
    kostka_foulkes,
)
from .traces import adjunction_report, trace_map_report

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3
EXIT_WINDOW = 4

DEFAULT_NMAX = 8
SUITE_NMAX = 5

SUITES = (
    "identities",
    "ideals-equal",
    "dims",
    "relations",
    "ideal-invariance",
    "weights",
    "hilbert",
    "traces",
    "all",
)


class InputError(Exception):
    """Malformed command-line input."""


# ----------------------------------------------------------------------
# parsing helpers


def n_limit(for_suite: bool = False) -> int:
    raw = os.environ.get("COINV_NMAX")
    if raw is None:
        return SUITE_NMAX if for_suite else DEFAULT_NMAX
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"COINV_NMAX must be an integer, got {raw!r}")


def check_size(n: int, for_suite: bool = False) -> None:
    cap = n_limit(for_suite)
    if n > cap:
        raise InputError(
            f"n={n} exceeds the configured maximum {cap} "
            "(set COINV_NMAX to raise it)"
        )


def parse_composition(text: str) -> Composition:
    """Comma list with optional @offset, e.g. ``1,2,1`` or ``2@0``."""
    body, sep, off = text.partition("@")
    lo = 1
    if sep:
        try:
            lo = int(off)
        except ValueError:
            raise InputError(f"bad offset in composition {text!r}")
    try:
        parts = [int(p) for p in body.split(",")] if body else []
    except ValueError:
        raise InputError(f"bad composition {text!r}")
    try:
        return Composition(lo, parts)
    except ValueError as exc:
        raise InputError(str(exc))


def parse_partition(text: str) -> Partition:
    try:
        parts = [int(p) for p in text.split(",")] if text else []
        return Partition(parts)
    except ValueError as exc:
        raise InputError(f"bad partition {text!r}: {exc}")


def parse_window(text: str) -> tuple:
    try:
        lo_s, hi_s = text.split(",")
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise InputError(f"bad window {text!r}; expected LO,HI")
    if lo > hi:
        raise InputError(f"empty window {text!r}")
    return (lo, hi)


def parse_mu(text: str | None, n: int) -> Composition | None:
    """Shape argument; ``regular`` means the length-n all-ones shape."""
    if text is None:
        return None
    if text == "regular":
        return Composition(1, [1] * n)
    mu = parse_composition(text)
    if mu.n != n:
        raise InputError(f"total of mu ({mu.n}) does not match n ({n})")
    return mu


def format_composition(nu: Composition) -> str:
    if not nu.parts:
        return "0@1"
    return ",".join(str(p) for p in nu.parts) + f"@{nu.lo}"


def emit(args, lines, data) -> None:
    if args.output == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _weights(n: int, window: tuple):
    """Compositions of n inside the window, one per distinct key."""
    seen = set()
    for nu in compositions_of(n, window):
        if nu.key() in seen:
            continue
        seen.add(nu.key())
        yield nu


def _shapes(n: int):
    for mu in partitions_of(n):
        yield Composition(1, list(mu.parts))


# ----------------------------------------------------------------------
# plain commands


def cmd_present(args) -> int:
    nu = parse_composition(args.nu)
    check_size(nu.n)
    mu = parse_mu(args.mu, nu.n)
    if mu is None:
        raise InputError("present requires --mu (a composition or 'regular')")
    if args.form == "h":
        gens = tanisaki_generators_h(mu, nu)
    else:
        gens = tanisaki_generators_e(mu, nu)
    lines = [
        f"ideal generators ({args.form}-form) for mu={format_composition(mu)}, "
        f"nu={format_composition(nu)}: {len(gens)}"
    ]
    lines.extend(f"  {g}" for g in gens)
    data = {
        "mu": mu.to_json(),
        "nu": nu.to_json(),
        "form": args.form,
        "generators": [{"pretty": str(g), "terms": g.to_json()} for g in gens],
    }
    emit(args, lines, data)
    return EXIT_OK


def _orbit_count(nu: Composition) -> int:
    out = factorial(nu.n)
    for p in nu.parts:
        out //= factorial(p)
    return out


def cmd_dim(args) -> int:
    nu = parse_composition(args.nu)
    check_size(nu.n)
    mu = parse_mu(args.mu, nu.n)
    pres = presentation(nu, mu, form=args.form)
    d = pres.dim()
    if mu is None:
        cross = _orbit_count(nu)
        label = "coset count"
    else:
        cross = count_column_strict(transpose(mu), nu)
        label = "column-strict tableau count"
    ok = d == cross
    lines = [
        f"dim = {d}",
        f"cross-check ({label}) = {cross}",
        "OK" if ok else "MISMATCH",
    ]
    data = {
        "nu": nu.to_json(),
        "mu": None if mu is None else mu.to_json(),
        "dim": d,
        "cross_check": cross,
        "ok": ok,
    }
    emit(args, lines, data)
    return EXIT_OK if ok else EXIT_INTERNAL


def cmd_hilbert(args) -> int:
    nu = parse_composition(args.nu)
    check_size(nu.n)
    mu = parse_mu(args.mu, nu.n)
    series = presentation(nu, mu, form=args.form).hilbert()
    coeffs = list(series.coeffs)
    lines = [f"hilbert = {series}", f"coeffs = {coeffs}"]
    data = {
        "nu": nu.to_json(),
        "mu": None if mu is None else mu.to_json(),
        "coeffs": coeffs,
        "pretty": str(series),
    }
    emit(args, lines, data)
    return EXIT_OK


def cmd_basis(args) -> int:
    nu = parse_composition(args.nu)
    check_size(nu.n)
    mu = parse_mu(args.mu, nu.n)
    pres = presentation(nu, mu, form=args.form)
    if pres.is_zero_algebra:
        degrees = []
    elif args.degree is not None:
        if args.degree < 0 or args.degree % 2:
            raise InputError("degree must be even and non-negative")
        degrees = [args.degree]
    else:
        degrees = list(range(0, pres.top_degree + 1, 2))
    lines = []
    blocks = []
    for d in degrees:
        basis = pres.graded_basis(d)
        lines.append(f"degree {d}: dim {len(basis)}")
        lines.extend(f"  {b.rep}" for b in basis)
        blocks.append(
            {
                "degree": d,
                "basis": [
                    {"pretty": str(b.rep), "terms": b.rep.to_json()}
                    for b in basis
                ],
            }
        )
    if not degrees:
        lines.append("zero algebra")
    data = {
        "nu": nu.to_json(),
        "mu": None if mu is None else mu.to_json(),
        "degrees": blocks,
    }
    emit(args, lines, data)
    return EXIT_OK


def cmd_act(args) -> int:
    nu = parse_composition(args.nu)
    n = nu.n
    check_size(n)
    mu = parse_mu(args.mu, n)
    if args.window is not None:
        window = parse_window(args.window)
    else:
        window = (min(1, nu.lo), max(n, nu.hi))
    elem = None
    if args.elem is not None:
        try:
            payload = json.loads(args.elem)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad element JSON: {exc}")
        try:
            elem = Poly.from_json(n, payload)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad element JSON: {exc}")
    family = WeightFamily.unit(nu, window, mu, elem)
    result = apply_operator_family(args.op, family)
    lines = []
    if result.is_zero:
        lines.append("0")
    for w in sorted(result.components, key=lambda c: c.key()):
        lines.append(f"{format_composition(w)}: {result.components[w].rep}")
    data = {
        "op": args.op,
        "window": list(window),
        "mu": None if mu is None else mu.to_json(),
        "components": result.to_json(),
    }
    emit(args, lines, data)
    return EXIT_OK


def cmd_kostka(args) -> int:
    lam = parse_partition(args.lam)
    nu = parse_composition(args.nu)
    check_size(max(lam.n, nu.n))
    value = kostka(lam, nu)
    emit(
        args,
        [str(value)],
        {"lam": lam.to_json(), "nu": nu.to_json(), "kostka": value},
    )
    return EXIT_OK


def cmd_kf(args) -> int:
    tau = parse_partition(args.tau)
    mu = parse_composition(args.mu)
    check_size(max(tau.n, mu.n))
    poly = kostka_foulkes(tau, mu)
    coeffs = list(poly.coeffs)
    emit(
        args,
        [f"kostka_foulkes = {poly}", f"coeffs = {coeffs}"],
        {
            "tau": tau.to_json(),
            "mu": mu.to_json(),
            "coeffs": coeffs,
            "pretty": str(poly),
        },
    )
    return EXIT_OK


def cmd_tableaux(args) -> int:
    lam = parse_partition(args.lam)
    nu = parse_composition(args.nu)
    check_size(max(lam.n, nu.n))
    if args.kind == "semistandard":
        fillings = enumerate_semistandard(lam, nu)
    else:
        fillings = enumerate_column_strict(lam, nu)
    lines = [f"count = {len(fillings)}"]
    for t in fillings:
        lines.append("  " + " / ".join(" ".join(map(str, row)) for row in t.rows))
    data = {
        "lam": lam.to_json(),
        "nu": nu.to_json(),
        "kind": args.kind,
        "count": len(fillings),
        "tableaux": [t.to_json() for t in fillings],
    }
    emit(args, lines, data)
    return EXIT_OK


# ----------------------------------------------------------------------
# verification suites


def _suite_identities(n: int, r_max: int) -> list:
    return [verify_identity_suite(n, r_max), quotient_identity_report(n, r_max)]


def _suite_ideals_equal(n: int, window: tuple) -> list:
    report = Report(f"h-form vs e-form generators, n={n}")
    ok = True
    bad = ""
    for mu in _shapes(n):
        for nu in _weights(n, window):
            gh = tanisaki_generators_h(mu, nu)
            ge = tanisaki_generators_e(mu, nu)
            if not ideals_equal(gh, ge, nu):
                ok = False
                bad = bad or f"mu={format_composition(mu)} nu={format_composition(nu)}"
    report.add("generator_forms_define_equal_ideals", ok, bad)
    return [report]


def _suite_dims(n: int, window: tuple, form: str) -> list:
    report = Report(f"dimension formulas, n={n}")
    regular = Composition(1, [1] * n)
    report.add(
        "regular_coinvariants_have_group_order_dimension",
        presentation(regular).dim() == factorial(n),
    )

    ok_orbit = ok_sym = True
    for nu in _weights(n, window):
        pres = presentation(nu)
        if pres.dim() != _orbit_count(nu):
            ok_orbit = False
        coeffs = list(pres.hilbert().coeffs)
        if coeffs != coeffs[::-1]:
            ok_sym = False
    report.add("partial_coinvariant_dimension_is_orbit_count", ok_orbit)
    report.add("coinvariant_hilbert_series_is_palindromic", ok_sym)

    ok_count = ok_van = ok_top = True
    for mu in _shapes(n):
        lam = transpose(mu)
        for nu in _weights(n, window):
            pres = presentation(nu, mu, form=form)
            d = pres.dim()
            expected = count_column_strict(lam, nu)
            if d != expected:
                ok_count = False
            if (d > 0) != is_nonzero(mu, nu):
                ok_van = False
            if d > 0:
                series = pres.hilbert()
                if series.degree() != quotient_top_degree(nu, mu):
                    ok_top = False
                if series.coeff(series.degree()) != kostka(lam, nu):
                    ok_top = False
    report.add("dimension_matches_column_strict_count", ok_count)
    report.add("vanishing_matches_dominance", ok_van)
    report.add("top_degree_and_top_dimension_formulas", ok_top)
    return [report]


def _suite_relations(n: int, window: tuple) -> list:
    out = [relation_report(n, window)]
    out.extend(relation_report(n, window, mu) for mu in _shapes(n))
    return out


def _suite_ideal_invariance(n: int, window: tuple) -> list:
    return [ideal_invariance_check(mu, window) for mu in _shapes(n)]


def _suite_weights(n: int, window: tuple) -> list:
    return [weight_dim_report(mu, window) for mu in _shapes(n)]


def _suite_hilbert(n: int, window: tuple) -> list:
    report = Report(f"graded character identity, n={n}")
    ok = True
    bad = ""
    for mu in _shapes(n):
        for nu in _weights(n, window):
            if not is_nonzero(mu, nu):
                continue
            if not hilbert_identity_check(mu, nu):
                ok = False
                bad = bad or f"mu={format_composition(mu)} nu={format_composition(nu)}"
    report.add("hilbert_series_matches_charge_generating_function", ok, bad)
    return [report]


def _suite_traces(n: int, window: tuple) -> list:
    return [trace_map_report(n, window), adjunction_report(n, window)]


def _center_table(n_max_val: int, form: str) -> tuple:
    """Rows (mu, nu, center dimension, simple count) for all n <= n_max_val."""
    rows = []
    ok = True
    for n in range(1, n_max_val + 1):
        window = (1, n)
        for mu in _shapes(n):
            lam = transpose(mu)
            for nu in _weights(n, window):
                d = presentation(nu, mu, form=form).dim()
                c = count_column_strict(lam, nu)
                match = d == c
                ok = ok and match
                rows.append(
                    {
                        "n": n,
                        "mu": list(mu.parts),
                        "nu": nu.to_json(),
                        "center_dim": d,
                        "simple_count": c,
                        "match": match,
                    }
                )
    return rows, ok


def _center_table_lines(rows) -> list:
    lines = ["center dimension table (block centers vs simple-module counts):"]
    header = f"  {'n':<3}{'mu':<12}{'nu':<14}{'center_dim':<12}{'simples':<9}match"
    lines.append(header)
    for row in rows:
        mu_s = ",".join(str(p) for p in row["mu"])
        nu_s = format_composition(Composition.from_json(row["nu"]))
        lines.append(
            f"  {row['n']:<3}{mu_s:<12}{nu_s:<14}"
            f"{row['center_dim']:<12}{row['simple_count']:<9}"
            f"{'yes' if row['match'] else 'NO'}"
        )
    return lines


def cmd_verify(args) -> int:
    n = args.n
    if n < 1:
        raise InputError("--n must be at least 1")
    check_size(n, for_suite=True)
    window = parse_window(args.window) if args.window else (1, n)
    r_max = args.r_max if args.r_max is not None else 2 * n

    builders = {
        "identities": lambda: _suite_identities(n, r_max),
        "ideals-equal": lambda: _suite_ideals_equal(n, window),
        "dims": lambda: _suite_dims(n, window, args.form),
        "relations": lambda: _suite_relations(n, window),
        "ideal-invariance": lambda: _suite_ideal_invariance(n, window),
        "weights": lambda: _suite_weights(n, window),
        "hilbert": lambda: _suite_hilbert(n, window),
        "traces": lambda: _suite_traces(n, window),
    }
    names = list(builders) if args.suite == "all" else [args.suite]

    reports = []
    for name in names:
        reports.extend(builders[name]())

    table_rows = None
    if args.suite == "all":
        table_rows, table_ok = _center_table(n, args.form)
        table_report = Report(f"center dimension table, n<={n}")
        table_report.add(
            "center_dimensions_count_simple_modules",
            table_ok,
            f"{len(table_rows)} pairs",
        )
        reports.append(table_report)

    npass = sum(1 for r in reports for c in r.checks if c.passed)
    nfail = sum(1 for r in reports for c in r.checks if not c.passed)
    passed = nfail == 0

    lines = []
    for report in reports:
        lines.extend(report.lines())
        lines.append("")
    if table_rows is not None:
        lines.extend(_center_table_lines(table_rows))
        lines.append("")
    lines.append(f"checks: {npass} passed, {nfail} failed")
    data = {
        "suite": args.suite,
        "n": n,
        "window": list(window),
        "passed": passed,
        "counts": {"passed": npass, "failed": nfail},
        "reports": [r.to_json() for r in reports],
    }
    if table_rows is not None:
        data["center_dimension_table"] = table_rows
    emit(args, lines, data)
    return EXIT_OK if passed else EXIT_VERIFY


# ----------------------------------------------------------------------
# wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coinv",
        description="Exact graded-quotient and trace-map computations.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, form=True):
        p.add_argument(
            "--output", choices=("text", "json"), default="text",
            help="output format",
        )
        if form:
            p.add_argument(
                "--form", choices=("h", "e"), default="e",
                help="generator family for shape-cut ideals",
            )

    p = sub.add_parser("present", help="print ideal generators")
    p.add_argument("--nu", required=True, help="composition, e.g. 1,2,1 or 2@0")
    p.add_argument("--mu", required=True, help="shape composition or 'regular'")
    common(p)
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("dim", help="dimension with tableau cross-check")
    p.add_argument("--nu", required=True)
    p.add_argument("--mu")
    common(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("hilbert", help="graded dimension series")
    p.add_argument("--nu", required=True)
    p.add_argument("--mu")
    common(p)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("basis", help="canonical graded basis")
    p.add_argument("--nu", required=True)
    p.add_argument("--mu")
    p.add_argument("--degree", type=int, help="single (doubled) degree")
    common(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("act", help="apply an operator word to a weight family")
    p.add_argument("--op", required=True, help="word like 'F_2 F_1 E_2'")
    p.add_argument("--nu", required=True, help="starting weight")
    p.add_argument("--mu")
    p.add_argument("--window", help="LO,HI index window")
    p.add_argument("--elem", help="starting element as term-list JSON")
    common(p)
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("kostka", help="semistandard tableau count")
    p.add_argument("--lam", required=True, help="partition, e.g. 2,1")
    p.add_argument("--nu", required=True, help="content composition")
    common(p, form=False)
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("kf", help="charge generating polynomial")
    p.add_argument("--tau", required=True, help="partition")
    p.add_argument("--mu", required=True, help="content composition")
    common(p, form=False)
    p.set_defaults(func=cmd_kf)

    p = sub.add_parser("tableaux", help="enumerate fillings")
    p.add_argument("--lam", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument(
        "--kind", choices=("column-strict", "semistandard"),
        default="column-strict",
    )
    common(p, form=False)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--window", help="LO,HI (default 1,n)")
    p.add_argument("--r-max", type=int, dest="r_max")
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except WindowOverflowError as exc:
        print(f"window overflow: {exc}", file=sys.stderr)
        return EXIT_WINDOW
    except NotInvariantError as exc:
        # only reachable from user-supplied elements
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NonTerminatingError as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except CoinvError as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
