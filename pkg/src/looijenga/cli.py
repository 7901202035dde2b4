"""Command-line front end.

    looijenga compute --family p1ab --a 1 --b 1 --d 1 --theory log
    looijenga check log-local --max-ab 5 --dmax 4
    looijenga table kp --family y2 --b 1 --d0max 5 --d1max 4 --format csv
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import checks
from .bps import kp_genus0, omega_q
from .geometry import Family, InvalidClass, Kind, validate, winding_of
from .localgw import local_closed, local_psi
from .loggw import genus_coefficients, log_poly, log_psi
from .opengw import open_closed
from .qkernel import QExact, QRatio
from .quiverdt import SymQuiver, dt_invariants, dt_numerical

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

THEORIES = ["log", "log-psi", "genus", "local", "local-psi", "open", "bps", "kp", "dt"]
CHECK_NAMES = ["log-local", "log-open", "loc-open", "bps-integrality", "quiver-dt", "oracle-equivalence", "table1", "kp-sequence"]


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    family: Optional[Family] = None
    degrees: Optional[tuple] = None
    theory: Optional[str] = None
    fmt: str = "text"
    genus_max: int = 3
    winding: Optional[tuple] = None
    qdeg: Optional[int] = None
    quiver: Optional[SymQuiver] = None
    cutoff: int = 5


# -- formatting ------------------------------------------------------------------------


def _rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_text(value) -> str:
    if isinstance(value, (QExact, QRatio)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return " ".join(to_text(v) for v in value)
    return _rational(value)


def to_jsonable(value):
    if isinstance(value, QExact):
        return value.to_json()
    if isinstance(value, QRatio):
        if value.is_laurent():
            return value.to_exact().to_json()
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else _rational(value)


def emit(records: list[dict], fields: list[str], fmt: str, out) -> None:
    """Print a list of flat records as text lines, CSV rows or a JSON array."""
    if fmt == "json":
        out.write(json.dumps([{k: to_jsonable(r[k]) if k == "value" else r[k] for k in fields} for r in records]) + "\n")
        return
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(fields)
        for r in records:
            w.writerow([to_text(r[k]) if k == "value" else r[k] for k in fields])
        out.write(buf.getvalue())
        return
    for r in records:
        out.write(to_text(r["value"]) + "\n")


# -- compute ----------------------------------------------------------------------------


def _family(args) -> Family:
    if args.family is None:
        raise ConfigError("--family is required")
    try:
        return Family(Kind(args.family), args.a, args.b)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _degrees(args, fam: Family) -> Optional[tuple]:
    if fam.kind is Kind.P1AB:
        if args.d is None:
            return None
        return (args.d,)
    if args.d0 is None:
        return None
    return (args.d0, args.d1 if args.d1 is not None else 0)


def _parse_quiver(spec: str) -> SymQuiver:
    kind, _, rest = spec.partition(":")
    try:
        if kind == "loops":
            return SymQuiver.loops(int(rest))
        if kind == "file":
            with open(rest) as fh:
                return SymQuiver.from_json(fh.read())
    except (OSError, ValueError, KeyError) as exc:
        raise ConfigError(f"bad quiver {spec!r}: {exc}") from exc
    raise ConfigError(f"quiver must be loops:M or file:PATH, got {spec!r}")


def compute_value(cfg: RunConfig):
    fam, d, theory = cfg.family, cfg.degrees, cfg.theory
    if theory == "dt":
        dts = dt_invariants(cfg.quiver, cfg.cutoff, total=cfg.cutoff if cfg.quiver.n > 1 else None)
        return [(k, v.count(), v.poly) for k, v in sorted(dts.items(), key=lambda kv: (sum(kv[0]), kv[0]))]
    if theory == "open" and cfg.winding is not None:
        return open_closed(fam, cfg.winding)
    if d is None:
        raise ConfigError("a curve class (--d, or --d0/--d1) is required")
    table = {
        "log": log_poly,
        "log-psi": log_psi,
        "local": local_closed,
        "local-psi": local_psi,
        "bps": omega_q,
        "kp": kp_genus0,
        "open": lambda f, dd: open_closed(f, winding_of(f, dd)),
        "genus": lambda f, dd: genus_coefficients(f, dd, cfg.genus_max),
    }
    return table[theory](fam, d)


def cmd_compute(args, out) -> int:
    if args.theory == "dt":
        if not args.quiver:
            raise ConfigError("--theory dt needs --quiver loops:M or file:PATH")
        cfg = RunConfig("compute", theory="dt", fmt=args.format, quiver=_parse_quiver(args.quiver), cutoff=args.cutoff)
        if cfg.cutoff < 1:
            raise ConfigError("--cutoff must be >= 1")
        rows = compute_value(cfg)
        records = [
            {"dim": ",".join(map(str, k)), "dt_numerical": n, "value": p} for k, n, p in rows
        ]
        if args.format == "text":
            for r in records:
                out.write(f"d=({r['dim']}) DT={r['dt_numerical']} DT(q)={to_text(r['value'])}\n")
        else:
            emit(records, ["dim", "dt_numerical", "value"], args.format, out)
        return EXIT_OK
    fam = _family(args)
    winding = None
    if args.winding:
        try:
            winding = tuple(int(x) for x in args.winding.split(","))
        except ValueError as exc:
            raise ConfigError(f"bad --winding {args.winding!r}") from exc
        if fam.kind is Kind.Y2:
            if args.qdeg is None or len(winding) != 1:
                raise ConfigError("y2 open invariants take --winding J --qdeg L")
            winding = (winding[0], args.qdeg)
    cfg = RunConfig("compute", fam, _degrees(args, fam), args.theory, args.format, args.genus_max, winding)
    value = compute_value(cfg)
    record = {
        "family": fam.kind.value,
        "a": fam.a,
        "b": fam.b,
        "class": ",".join(map(str, cfg.degrees)) if cfg.degrees else "",
        "winding": ",".join(map(str, winding)) if winding else "",
        "theory": args.theory,
        "value": value,
    }
    if args.format == "json":
        out.write(json.dumps({k: (to_jsonable(v) if k == "value" else v) for k, v in record.items()}) + "\n")
    else:
        emit([record], list(record), args.format, out)
    return EXIT_OK


# -- check -------------------------------------------------------------------------------


def _sweep_config(args) -> checks.SweepConfig:
    for name in ("max_ab", "dmax", "a_max", "b_max", "d_max", "jobs"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            raise ConfigError(f"--{name.replace('_', '-')} must be positive")
    kinds = (Kind.P1AB, Kind.Y2, Kind.Y3) if args.family is None else (Kind(args.family),)
    dmax = args.d_max if args.d_max is not None else args.dmax
    return checks.SweepConfig(
        kinds=kinds,
        ab_max=args.max_ab,
        dmax=dmax,
        a_max=args.a_max,
        b_max=args.b_max,
        all_orders=args.all_orders,
        jobs=args.jobs,
    )


def cmd_check(args, out) -> int:
    name = args.name
    cfg = _sweep_config(args)
    if name in checks.CHECKS:
        results = checks.run_sweep(name, cfg)
    elif name == "oracle-equivalence":
        results = checks.run_oracle_equivalence(cfg, args.open_dmax)
    elif name == "table1":
        results = checks.run_table1([args.b] if args.b else range(1, 6))
    elif name == "kp-sequence":
        results = checks.run_kp_sequence([args.b] if args.b else range(1, 5), cfg.dmax)
    else:  # quiver-dt
        if args.family not in (None, "p1ab", "y2"):
            raise ConfigError("quiver-dt applies to p1ab or y2 with a = 1")
        bs = [args.b] if args.b else list(range(1, 5))
        results = []
        if args.family in (None, "p1ab"):
            results += checks.run_loop_quiver(bs, cfg.dmax)
        if args.family in (None, "y2"):
            for b in bs:
                results += checks.run_conifold_dt(b, cfg.dmax)
    for r in results:
        if not args.quiet or not r.ok:
            out.write(r.line() + "\n")
    out.write(f"{name}: {checks.summarize(results)}\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


# -- table -------------------------------------------------------------------------------


def cmd_table(args, out) -> int:
    fam = _family(args)
    records = []
    if fam.kind is Kind.P1AB:
        fields = ["d", "value"]
        grid = [(d,) for d in range(1, (args.dmax or 0) + 1)]
    else:
        fields = ["d0", "d1", "value"]
        d0max = args.d0max if args.d0max is not None else (args.dmax or 0)
        d1max = args.d1max if args.d1max is not None else d0max
        grid = [(d0, d1) for d0 in range(1, d0max + 1) for d1 in range(args.d1min, d1max + 1)]
    if args.kind == "kp":
        for d in grid:
            try:
                validate(fam, d)
            except InvalidClass:
                continue
            records.append(dict(zip(fields, d), value=kp_genus0(fam, d)))
    else:
        if fam.a != 1 or fam.kind is Kind.Y3:
            raise ConfigError("dt tables exist for p1ab or y2 with a = 1")
        if grid:
            records = _dt_records(fam, grid, fields)
    if args.format == "text":
        for r in records:
            out.write(" ".join(str(r[k]) if k != "value" else to_text(r[k]) for k in fields) + "\n")
    else:
        emit(records, fields, args.format, out)
    return EXIT_OK


def _dt_records(fam: Family, grid, fields):
    cap = max(sum(d) for d in grid)
    if fam.kind is Kind.P1AB:
        dts = dt_numerical(SymQuiver.loops(fam.b + 1), cap)
    else:
        _, Q = checks.run_conifold_search(fam.b)
        if Q is None:
            raise ConfigError(f"no quiver found for {fam}")
        dts = dt_numerical(Q, cap, total=cap)
    return [dict(zip(fields, d), value=dts.get(tuple(d), 0)) for d in grid]


# -- entry point ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="looijenga", description="Exact log/local/open/BPS/DT invariants of orbifold Looijenga pairs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def family_opts(sp, required=False):
        sp.add_argument("--family", choices=[k.value for k in Kind], required=required)
        sp.add_argument("--a", type=int, default=1)
        sp.add_argument("--b", type=int, default=None)

    c = sub.add_parser("compute", help="compute one invariant")
    family_opts(c)
    c.add_argument("--d", type=int)
    c.add_argument("--d0", type=int)
    c.add_argument("--d1", type=int)
    c.add_argument("--theory", choices=THEORIES, required=True)
    c.add_argument("--winding", help="j, or j1,j2 for y3")
    c.add_argument("--qdeg", type=int, help="degree along the compact curve (y2 open)")
    c.add_argument("--quiver", help="loops:M or file:PATH with {\"arrows\": [[...]]}")
    c.add_argument("--cutoff", type=int, default=5)
    c.add_argument("--genus-max", type=int, default=3)
    c.add_argument("--format", choices=["text", "json", "csv"], default="text")

    k = sub.add_parser("check", help="run a correspondence sweep")
    k.add_argument("name", choices=CHECK_NAMES)
    family_opts(k)
    k.add_argument("--max-ab", type=int, default=5)
    k.add_argument("--dmax", type=int, default=4)
    k.add_argument("--a-max", type=int)
    k.add_argument("--b-max", type=int)
    k.add_argument("--d-max", type=int)
    k.add_argument("--open-dmax", type=int, default=3)
    k.add_argument("--all-orders", action="store_true", help="include a > b")
    k.add_argument("--jobs", type=int, default=1)
    k.add_argument("--quiet", action="store_true", help="print failures and the summary only")

    t = sub.add_parser("table", help="emit a KP or DT table")
    t.add_argument("kind", choices=["kp", "dt"])
    family_opts(t, required=True)
    t.add_argument("--dmax", type=int)
    t.add_argument("--d0max", type=int)
    t.add_argument("--d1max", type=int)
    t.add_argument("--d1min", type=int, default=1)
    t.add_argument("--format", choices=["text", "json", "csv"], default="csv")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "b", None) is None and args.command != "check":
        args.b = 1
    try:
        if args.command == "compute":
            return cmd_compute(args, out)
        if args.command == "check":
            return cmd_check(args, out)
        return cmd_table(args, out)
    except ValueError as exc:  # includes invalid classes and windings
        sys.stderr.write(f"looijenga: error: {exc}\n")
        return EXIT_CONFIG
    except ArithmeticError as exc:  # a certified identity or integrality statement failed
        sys.stderr.write(f"looijenga: violation: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
