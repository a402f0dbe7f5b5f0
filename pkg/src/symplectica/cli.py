"""Command-line front end.

Every subcommand builds a report: a JSON-ready dict plus a list of rows for
the table and CSV renderings.  Exit status is 0 on success, 2 when an input
is outside an operation's domain, 64 on a usage error and 1 if an internal
identity check fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import mpmath

from .errors import DomainError, InvariantError
from .exact_arith import format_rational, parse_rational
from .mixed_complex import (
    BUILTIN_MODELS,
    builtin_model,
    hc_odd_sequence,
    hodge_report,
    load_model as _load_model_source,
    model_to_json,
    save_model,
)
from .moments import (
    HermitianMatrix,
    killing_proportionality,
    mixed_moment,
    monte_carlo_moment,
    sphere_moment,
)
from .root_systems import parse_group
from .secondary_invariants import (
    TorusSymplectomorphism,
    cap_rho,
    rationality_denominator,
    rho_rpn,
    rpn_torsion_order,
    torus_character,
)
from .witten_zeta import (
    DEFAULT_PRECISION,
    a2_double_sum,
    hurwitz_data,
    moduli_volume,
    su2_zeta_exact,
    von_staudt_audit,
    witten_zeta,
)

__all__ = ["EXIT_DOMAIN", "EXIT_USAGE", "Report", "dispatch", "load_model", "main"]

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 64
MAX_EXACT_DIGITS = 5000
PRECISION_ENV = "SYMPLECTICA_PRECISION"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class Report:
    data: dict
    rows: list[dict] = field(default_factory=list)


# ----- input parsing


_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")


def _int(text: str) -> int:
    """Integers like ``1000000``, ``10^6``, ``10**6`` or ``1e6``."""
    t = str(text).strip()
    m = re.fullmatch(r"(\d+)([⁰¹²³⁴⁵⁶⁷⁸⁹]+)", t)
    if m:
        t = m.group(1) + "^" + m.group(2).translate(_SUPERSCRIPTS)
    m = re.fullmatch(r"(\d+)\s*(?:\^|\*\*)\s*(\d+)", t)
    if m:
        return int(m.group(1)) ** int(m.group(2))
    m = re.fullmatch(r"(\d+)[eE](\d+)", t)
    if m:
        return int(m.group(1)) * 10 ** int(m.group(2))
    try:
        return int(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_list(text: str) -> list[Fraction]:
    return [_rational(x) for x in str(text).split(",") if x.strip()]


def _range(text: str) -> range:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.|-|:)\s*(\d+)\s*", str(text))
    if not m:
        raise argparse.ArgumentTypeError(f"expected a range like 2..30, got {text!r}")
    return range(int(m.group(1)), int(m.group(2)) + 1)


def _precision(args) -> int:
    if getattr(args, "precision", None) is not None:
        return args.precision
    env = os.environ.get(PRECISION_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise DomainError(f"{PRECISION_ENV} must be an integer, got {env!r}") from None
        if value < 1:
            raise DomainError(f"{PRECISION_ENV} must be positive")
        return value
    return DEFAULT_PRECISION


def _decimal(q, digits: int) -> str:
    with mpmath.workdps(digits + 5):
        if isinstance(q, Fraction):
            q = mpmath.mpf(q.numerator) / q.denominator
        return mpmath.nstr(q, digits, strip_zeros=False)


def load_model(source: str):
    """Model from ``builtin:<name>`` (case-insensitive), a bare built-in name, or a JSON file."""
    text = str(source)
    name = text[len("builtin:"):] if text.lower().startswith("builtin:") else text
    lookup = {k.lower(): k for k in BUILTIN_MODELS}
    if name.lower() in lookup and not Path(text).exists():
        return builtin_model(lookup[name.lower()])
    if text.lower().startswith("builtin:"):
        raise DomainError(f"unknown built-in model {name!r}; available: {', '.join(BUILTIN_MODELS)}")
    if not Path(text).exists():
        raise DomainError(f"model file not found: {text}")
    return _load_model_source(text)


# ----- subcommands


def cmd_zeta(args) -> Report:
    label = args.group_opt or args.group
    if not label:
        raise UsageError("zeta: a group is required (positional or --group)")
    rs = parse_group(label)
    if args.s < 2:
        raise DomainError(f"s must be an integer >= 2, got {args.s}")
    if args.cutoff < 1:
        raise DomainError("cutoff must be >= 1")
    digits = _precision(args)
    res = witten_zeta(rs, args.s, args.cutoff, precision=digits)
    checks = []
    if rs.family == "A" and rs.rank == 1 and args.s % 2 == 0:
        with mpmath.workdps(digits + 10):
            closed = mpmath.pi ** args.s * mpmath.mpf(su2_zeta_exact(args.s // 2).numerator) / su2_zeta_exact(args.s // 2).denominator
            gap = closed - res.float_estimate
            ok = bool(0 <= gap <= res.tail_bound)
        checks.append({"name": "closed_form", "pass": ok, "difference": _decimal(gap, 6)})
    if rs.family == "A" and rs.rank == 2:
        other, other_tail = a2_double_sum(args.s)
        gap = abs(float(res.float_estimate) - other)
        ok = gap <= float(res.tail_bound) + other_tail
        checks.append({"name": "double_sum", "pass": ok, "difference": f"{gap:.3e}", "bound": f"{float(res.tail_bound) + other_tail:.3e}"})
    exact = None
    if res.exact_size_digits <= MAX_EXACT_DIGITS:
        exact = format_rational(res.exact_partial_sum)
    data = {
        "group": rs.name,
        "s": args.s,
        "value": _decimal(res.float_estimate, digits),
        "exact": exact,
        "cutoff": args.cutoff,
        "terms": res.terms_used,
        "tail_bound": _decimal(res.tail_bound, 6),
        "tail_rigorous": res.tail_rigorous,
        "checks": checks,
    }
    rows = [{"field": k, "value": _cell(v)} for k, v in data.items() if k != "checks"]
    rows += [{"field": f"check:{c['name']}", "value": "PASS" if c["pass"] else "FAIL"} for c in checks]
    return Report(data, rows)


def cmd_volume(args) -> Report:
    rs = parse_group(args.group)
    digits = _precision(args)
    res = moduli_volume(rs, args.genus, args.cutoff, precision=digits)
    data = {
        "group": rs.name,
        "genus": args.genus,
        "s": res.s,
        "volume_zeta": _decimal(res.float_estimate, digits),
        "cutoff": args.cutoff,
        "tail_bound": _decimal(res.tail_bound, 6),
        "tail_rigorous": res.tail_rigorous,
    }
    return Report(data, [{"field": k, "value": _cell(v)} for k, v in data.items()])


def cmd_vonstaudt(args) -> Report:
    if (args.m_from is None) != (args.m_to is None):
        raise UsageError("vonstaudt: --m-from and --m-to go together")
    if args.m_from is not None:
        if args.m_range is not None:
            raise UsageError("vonstaudt: give --m-range or --m-from/--m-to, not both")
        args.m_range = range(args.m_from, args.m_to + 1)
    if args.m is not None and args.m_range is not None:
        raise UsageError("vonstaudt: give --m or a range, not both")
    if args.m_range is not None and not args.m_range:
        raise DomainError("empty m range")
    ms = [args.m] if args.m is not None else list(args.m_range or range(2, 31))
    reports = von_staudt_audit(ms, args.variant)
    entries, rows = [], []
    for r in reports:
        primes = [
            {"p": c.p, "applies": c.applies, "divides": c.divides, "valuation": c.valuation,
             "status": ("PASS" if c.divides else "FAIL") if c.applies else "n/a"}
            for c in r.prime_checks
        ]
        entries.append({"m": r.m, "value": format_rational(r.value), "passed": r.passed, "primes": primes})
        for p in primes:
            rows.append({"m": r.m, "p": p["p"], "applies": p["applies"], "valuation": p["valuation"], "status": p["status"]})
    data = {"variant": reports[0].variant.value, "all_passed": all(r.passed for r in reports), "results": entries}
    return Report(data, rows)


def cmd_hurwitz(args) -> Report:
    h = hurwitz_data(args.g, args.p, strict=not args.non_strict)
    data = {
        "g": h.g,
        "p": h.p,
        "quotient_euler": h.quotient_euler,
        "kbar": h.kbar,
        "branch_points": h.branch_points,
        "riemann_hurwitz": h.riemann_hurwitz_holds(),
    }
    return Report(data, [data])


def cmd_hodge(args) -> Report:
    model = load_model(args.model)
    rep = hodge_report(model)
    data = rep.to_dict()
    if model.dim == 4:
        cert = hc_odd_sequence(model)
        data["hc_odd_sequence"] = {
            "exact": cert.exact,
            "plus_eigenspace_dim": cert.plus_eigenspace_dim,
            "minus_eigenspace_dim": cert.minus_eigenspace_dim,
        }
    rows = []
    for k in range(model.dim + 1):
        b, hdim = rep.betti[k], rep.brylinski_harmonic_dims[k]
        rows.append({
            "k": k,
            "betti": b,
            "canonical": rep.canonical_homology_dims[k],
            "harmonic": hdim,
            "brylinski": "HOLDS" if hdim == b else "FAIL",
            "lefschetz_rank": rep.hard_lefschetz_ranks[k] if k <= model.dim // 2 else "",
        })
    return Report(data, rows)


def cmd_moments(args) -> Report:
    eigs = args.eigs
    if len(eigs) != args.n + 1:
        raise DomainError(f"--eigs needs n+1 = {args.n + 1} values, got {len(eigs)}")
    if args.k < 0:
        raise DomainError("k must be >= 0")
    exact = sphere_moment(eigs, args.n, args.k)
    A = HermitianMatrix.diagonal(eigs)
    cross = mixed_moment([A] * args.k, args.n) if args.k else Fraction(1)
    data = {
        "n": args.n,
        "eigs": [format_rational(x) for x in eigs],
        "k": args.k,
        "exact": format_rational(exact),
        "value": _decimal(exact, _precision(args)),
        "trace_formula_agrees": cross == exact,
    }
    if args.samples:
        mc = monte_carlo_moment([A] * args.k, args.n, samples=args.samples, seed=args.seed)
        data["monte_carlo"] = {"mean": f"{mc.mean:.6f}", "stderr": f"{mc.stderr:.6f}", "within_3_sigma": mc.agrees(exact)}
    return Report(data, [{"field": k, "value": _cell(v)} for k, v in data.items()])


def cmd_killing(args) -> Report:
    c = killing_proportionality(args.n)
    data = {"n": args.n, "group": f"SU({args.n + 1})", "constant": format_rational(c), "value": _decimal(c, _precision(args)), "positive": c > 0}
    return Report(data, [data])


def cmd_rho(args) -> Report:
    value = rho_rpn(args.rpn, args.k)
    data = {
        "n": args.rpn,
        "k": args.k,
        "degree": 2 * args.k - 1,
        "rho": format_rational(value),
        "denominator_bound": rationality_denominator(rpn_torsion_order(args.rpn)),
    }
    return Report(data, [data])


def cmd_cap(args) -> Report:
    value = cap_rho(args.height)
    data = {"height": format_rational(args.height), "rho": format_rational(value), "value": _decimal(value, _precision(args))}
    return Report(data, [data])


def cmd_character(args) -> Report:
    if len(args.translate) != 2:
        raise DomainError("--translate needs two values a,b")
    f = TorusSymplectomorphism.translation(*args.translate)
    cx, cy = torus_character(f)
    data = {
        "translation": [format_rational(f.a), format_rational(f.b)],
        "chi_x_cycle": format_rational(cx),
        "chi_y_cycle": format_rational(cy),
    }
    return Report(data, [{"cycle": "x", "chi": data["chi_x_cycle"]}, {"cycle": "y", "chi": data["chi_y_cycle"]}])


def cmd_models(args) -> Report:
    entries, rows = [], []
    for name in BUILTIN_MODELS:
        model = builtin_model(name)
        doc = model_to_json(model)
        entries.append(doc)
        rows.append({"name": name, "dim": model.dim, "brackets": len(doc["brackets"]), "omega_terms": len(doc["omega"])})
    data = {"models": entries}
    if args.export:
        out = Path(args.export)
        out.mkdir(parents=True, exist_ok=True)
        written = []
        for name in BUILTIN_MODELS:
            path = out / f"{name.lower()}.json"
            save_model(builtin_model(name), path)
            written.append(path.name)
        data["exported"] = written
    return Report(data, rows)


# ----- rendering


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, (list, tuple, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.data, indent=2) + "\n"
    rows = report.rows or [report.data]
    cols: list[str] = []
    for r in rows:
        cols += [c for c in r if c not in cols]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(r.get(c, "")) for c in cols])
        return buf.getvalue()
    cells = [[_cell(r.get(c, "")) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default=None, help="output format (default table)")
    common.add_argument("--json", dest="format", action="store_const", const="json", help="same as --format json")
    common.add_argument("--precision", type=int, default=None, help=f"decimal digits (env {PRECISION_ENV}, default {DEFAULT_PRECISION})")

    p = _Parser(prog="symplectica", description="Exact computations for symplectic invariants.")
    p.add_argument("--format", dest="global_format", choices=("table", "json", "csv"), default=None)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("zeta", parents=[common], help="Witten zeta partial sum with tail bound")
    s.add_argument("group", nargs="?", help="A1, A2, G2, SU(3), ...")
    s.add_argument("--group", dest="group_opt")
    s.add_argument("--s", type=_int, required=True)
    s.add_argument("--cutoff", type=_int, default=10**4)
    s.set_defaults(func=cmd_zeta)

    s = sub.add_parser("volume", parents=[common], help="zeta(2g-2): volume of the representation variety")
    s.add_argument("--group", required=True)
    s.add_argument("--genus", type=_int, required=True)
    s.add_argument("--cutoff", type=_int, default=10**4)
    s.set_defaults(func=cmd_volume)

    s = sub.add_parser("vonstaudt", parents=[common], help="divisibility audit of normalized special values")
    s.add_argument("--m", type=_int)
    s.add_argument("--m-range", type=_range, help="inclusive range such as 2..30")
    s.add_argument("--m-from", type=_int)
    s.add_argument("--m-to", type=_int)
    s.add_argument("--variant", default="intersection_number")
    s.set_defaults(func=cmd_vonstaudt)

    s = sub.add_parser("hurwitz", parents=[common], help="quotient data of a Z_p action")
    s.add_argument("--g", "--genus", dest="g", type=_int, required=True)
    s.add_argument("--p", type=_int, required=True)
    s.add_argument("--non-strict", action="store_true", help="admit p(p-1) = 2(g-1)")
    s.set_defaults(func=cmd_hurwitz)

    s = sub.add_parser("hodge", parents=[common], help="symplectic Hodge report of a Lie model")
    s.add_argument("--model", required=True, help="builtin:<name> or a JSON model file")
    s.add_argument("--report", dest="report_format", choices=("table", "json", "csv"))
    s.set_defaults(func=cmd_hodge)

    s = sub.add_parser("moments", parents=[common], help="sphere moment E[(Bv,v)^k]")
    s.add_argument("--n", type=_int, required=True)
    s.add_argument("--eigs", type=_rational_list, required=True)
    s.add_argument("--k", type=_int, required=True)
    s.add_argument("--samples", type=_int, default=0, help="Monte Carlo cross-check sample count")
    s.add_argument("--seed", type=_int, default=0)
    s.set_defaults(func=cmd_moments)

    s = sub.add_parser("killing", parents=[common], help="quadratic moment / Killing form constant")
    s.add_argument("--n", type=_int, required=True)
    s.set_defaults(func=cmd_killing)

    s = sub.add_parser("rho", parents=[common], help="rho on RP^n")
    s.add_argument("--rpn", type=_int, required=True)
    s.add_argument("--k", type=_int, required=True)
    s.set_defaults(func=cmd_rho)

    s = sub.add_parser("cap", parents=[common], help="rho of a latitude circle on S^2")
    s.add_argument("--height", type=_rational, required=True)
    s.set_defaults(func=cmd_cap)

    s = sub.add_parser("character", parents=[common], help="torus character of a translation")
    s.add_argument("--translate", type=_rational_list, required=True, help="a,b")
    s.set_defaults(func=cmd_character)

    s = sub.add_parser("models", parents=[common], help="list (or export) built-in Lie models")
    s.add_argument("--export", metavar="DIR")
    s.set_defaults(func=cmd_models)
    return p


def dispatch(argv: Sequence[str], out=None, err=None) -> int:
    """Run one command; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        if not args.command:
            raise UsageError(parser.format_usage().strip())
        fmt = getattr(args, "report_format", None) or args.format or args.global_format or "table"
        report = args.func(args)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except InvariantError as exc:
        err.write(f"invariant failure: {exc}\n")
        return EXIT_INTERNAL
    out.write(render(report, fmt))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    try:
        return dispatch(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
