"""Command-line interface: ``harmonia compute|verify|table|limits``.

Exit codes: 0 success, 1 verification or numerical failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import os
import sys
from typing import Any, Callable, Optional, Sequence

from . import oracle as O
from .exactq import Variant
from .fourier import (FourierSpec, Trig, corollary1_integral, limit_closed_form, partial_sum,
                      theorem1_integral, theorem2_integral)
from .harmonic import genfun_even, genfun_odd, h_integral, theorem3_integral, theorem4_integral
from .quad import ConvergenceError, QuadratureError, QuadSpec
from .verify import LIMIT_N, SUITES, limit_cases, run_suite, trend_ok
from .zeta import ZetaRepresentation, euler_sum_even_orders, euler_sum_odd_orders, zeta_odd

SCHEMA = "harmonia/1"
ENV_MAX_PANELS = "HARMONIA_MAX_PANELS"


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- formatting

def fmt_float(x: float) -> str:
    """17 significant digits, lowercase scientific notation."""
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".16e")


def to_json(obj: Any) -> str:
    """Deterministic JSON with fixed float formatting (non-finite floats become strings)."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, float):
        s = fmt_float(obj)
        return s if math.isfinite(obj) else json.dumps(s)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _cell(v: Any) -> str:
    if isinstance(v, float):
        return fmt_float(v)
    return "" if v is None else str(v)


# ---------------------------------------------------------------- evaluation

def _quad_from_env(tol: Optional[float] = None) -> QuadSpec:
    spec = QuadSpec()
    raw = os.environ.get(ENV_MAX_PANELS)
    if raw:
        try:
            panels = int(raw)
        except ValueError:
            raise UsageError(f"{ENV_MAX_PANELS} must be an integer, got {raw!r}") from None
        if panels < 1:
            raise UsageError(f"{ENV_MAX_PANELS} must be >= 1")
        spec = spec.with_(max_panels=panels)
    if tol is not None:
        if not tol > 0:
            raise UsageError("--tol must be positive")
        spec = spec.with_(rel_tol=tol, abs_tol=tol)
    return spec


def _need(params: dict, *names: str) -> list:
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise UsageError("missing parameter(s): " + ", ".join("--" + n for n in missing))
    return [params[n] for n in names]


def _as_int(x: Any, name: str) -> int:
    if isinstance(x, float) and not x.is_integer():
        raise UsageError(f"--{name} must be an integer")
    return int(x)


def _h(p: dict, quad: QuadSpec) -> dict:
    k, n = _need(p, "k", "n")
    k = _as_int(k, "k")
    variant = Variant(p.get("variant") or Variant.SIN_PI_K.value)
    ev = h_integral(k, n, variant, quad)
    oracle = None
    if float(n).is_integer():
        oracle = 0.0 if k == 0 else float(O.direct_harmonic(k, int(n)))
    elif k == 1:
        oracle = O.harmonic_real(n).value
    return {"value": ev.value, "err_estimate": ev.quad.err_estimate, "oracle": oracle}


def _trig_sum(trig: Trig) -> Callable[[dict, QuadSpec], dict]:
    def run(p: dict, quad: QuadSpec) -> dict:
        m, k, n = _need(p, "m", "k", "n")
        k = _as_int(k, "k")
        if math.isinf(n):
            return {"value": limit_closed_form(FourierSpec(m, k, trig), quad),
                    "err_estimate": None, "oracle": None}
        n = _as_int(n, "n")
        return {"value": partial_sum(FourierSpec(m, k, trig, n), quad), "err_estimate": None,
                "oracle": O.direct_trig_sum(m, k, n, trig.value)}
    return run


def _zeta_odd(p: dict, quad: QuadSpec) -> dict:
    (k,) = _need(p, "k")
    k = _as_int(k, "k")
    rep = ZetaRepresentation(p.get("rep") or ZetaRepresentation.TAN.value)
    return {"value": zeta_odd(k, rep, quad), "err_estimate": None,
            "oracle": O.zeta_series(2 * k + 1).value if k >= 1 else None}


def _euler_sum(p: dict, quad: QuadSpec) -> dict:
    k, r = (_as_int(v, name) for v, name in zip(_need(p, "k", "r"), ("k", "r")))
    parity = p.get("parity") or "even"
    if parity == "even":
        value = euler_sum_even_orders(k, r, quad)
        oracle = 0.0 if k == 0 else O.euler_sum_brute(2 * k, 2 * r + 1).value
    elif parity == "odd":
        value = euler_sum_odd_orders(k, r, quad)
        oracle = O.euler_sum_brute(2 * k + 1, 2 * r).value
    else:
        raise UsageError("--parity must be 'even' or 'odd'")
    return {"value": value, "err_estimate": None, "oracle": oracle}


def _limit_kind(fn: Callable, limit: Callable[..., float], names: tuple[str, ...]):
    def run(p: dict, quad: QuadSpec) -> dict:
        args = _need(p, *names)
        args = [_as_int(a, nm) if nm in ("k", "p") else a for a, nm in zip(args, names)]
        value = fn(*args, quad)
        return {"value": value, "err_estimate": None, "oracle": limit(*args)}
    return run


def _theorem1_limit(k, m, n):
    return 1.0 if (k == 0 and m == 1) else m / 2


def _theorem4(p: int, n: float, quad: QuadSpec) -> float:
    return theorem4_integral(p // 2, n, quad, odd=p % 2 == 1)


def _genfun(fn: Callable, odd: bool):
    def run(p: dict, quad: QuadSpec) -> dict:
        n, x = _need(p, "n", "x")
        value = fn(n, x, quad)
        oracle = None
        if float(n).is_integer() and abs(x) <= 0.99:
            start = 1 if odd else 2
            terms = 600 if abs(x) <= 0.9 else 6000
            oracle = math.fsum(math.fsum(i**-j for i in range(1, int(n) + 1)) * x**j
                               for j in range(start, terms, 2))
        return {"value": value, "err_estimate": None, "oracle": oracle}
    return run


KINDS: dict[str, Callable[[dict, QuadSpec], dict]] = {
    "h": _h,
    "c": _trig_sum(Trig.COS),
    "s": _trig_sum(Trig.SIN),
    "zeta-odd": _zeta_odd,
    "euler-sum": _euler_sum,
    "theorem1": _limit_kind(theorem1_integral, _theorem1_limit, ("k", "m", "n")),
    "theorem2": _limit_kind(theorem2_integral, lambda k, m, n: m * math.log(m) / math.pi,
                            ("k", "m", "n")),
    "theorem3": _limit_kind(theorem3_integral, lambda k, n: 1.0, ("k", "n")),
    "theorem4": _limit_kind(_theorem4, lambda p, n: -1.0 if p == 0 else -0.5, ("p", "n")),
    "corollary1": _limit_kind(corollary1_integral, lambda k, n: 0.0, ("k", "n")),
    "genfun-even": _genfun(genfun_even, odd=False),
    "genfun-odd": _genfun(genfun_odd, odd=True),
}
COMPUTE_KINDS = ("h", "c", "s", "zeta-odd", "euler-sum")
NUMERIC_PARAMS = ("k", "n", "m", "r", "p", "x")


def evaluate(kind: str, params: dict, quad: QuadSpec) -> dict:
    out = KINDS[kind](params, quad)
    oracle = out["oracle"]
    out["discrepancy"] = None if oracle is None else abs(out["value"] - oracle)
    return out


# ---------------------------------------------------------------- commands

def _parse_number(text: str) -> float | int:
    t = text.strip().lower()
    if t in ("inf", "infinity"):
        return math.inf
    try:
        return int(t)
    except ValueError:
        pass
    try:
        return float(t)
    except ValueError:
        raise UsageError(f"not a number: {text!r}") from None


def _parse_values(text: str) -> list:
    out: list = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..", 1)
            a, b = _parse_number(lo), _parse_number(hi)
            if not (isinstance(a, int) and isinstance(b, int)) or b < a:
                raise UsageError(f"bad integer range {part!r}")
            out.extend(range(a, b + 1))
        elif part.strip():
            out.append(_parse_number(part))
    if not out:
        raise UsageError(f"empty value list {text!r}")
    return out


def parse_grid(items: Sequence[str]) -> dict[str, list]:
    grid: dict[str, list] = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"grid entries look like name=values, got {item!r}")
        name, values = item.split("=", 1)
        name = name.strip()
        if name in NUMERIC_PARAMS:
            grid[name] = sorted(set(_parse_values(values)))
        else:
            grid[name] = sorted({v.strip() for v in values.split(",") if v.strip()})
    return grid


def _params_from_args(args: argparse.Namespace) -> dict:
    p: dict[str, Any] = {}
    for name in NUMERIC_PARAMS:
        raw = getattr(args, name, None)
        if raw is not None:
            p[name] = _parse_number(raw)
    for name in ("variant", "rep", "parity"):
        if getattr(args, name, None) is not None:
            p[name] = getattr(args, name)
    return p


def cmd_compute(args: argparse.Namespace, out) -> int:
    quad = _quad_from_env(args.tol)
    params = _params_from_args(args)
    res = evaluate(args.kind, params, quad)
    obj = {"schema": SCHEMA, "kind": args.kind, "params": params, **res}
    out.write(to_json(obj) + "\n")
    return 0


def cmd_verify(args: argparse.Namespace, out) -> int:
    if not args.tol_scale > 0:
        raise UsageError("--tol-scale must be positive")
    checks = run_suite(args.suite, args.tol_scale, _quad_from_env())
    failed = sum(not c.passed for c in checks)
    if args.format == "json":
        rows = [{"id": c.id, "expected": c.expected, "got": c.got, "tol": c.tol,
                 "pass": c.passed} for c in checks]
        out.write(to_json({"schema": SCHEMA, "suite": args.suite, "tol_scale": args.tol_scale,
                           "checks": rows, "failed": failed}) + "\n")
    else:
        width = max(len(c.id) for c in checks)
        out.write(f"{'id':<{width}}  {'expected':>23}  {'got':>23}  {'tol':>23}  pass\n")
        for c in checks:
            out.write(f"{c.id:<{width}}  {fmt_float(c.expected):>23}  {fmt_float(c.got):>23}  "
                      f"{fmt_float(c.tol):>23}  {'PASS' if c.passed else 'FAIL'}\n")
        out.write(f"{len(checks)} checks, {failed} failed\n")
    return 1 if failed else 0


def _write_rows(fmt: str, header: list[str], rows: list[dict], meta: dict) -> str:
    if fmt == "json":
        return to_json({"schema": SCHEMA, **meta, "rows": rows}) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_cell(r.get(h)) for h in header])
    return buf.getvalue()


def _emit(text: str, path: Optional[str], out) -> None:
    if path is None or path == "-":
        out.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def cmd_table(args: argparse.Namespace, out) -> int:
    quad = _quad_from_env(args.tol)
    grid = parse_grid(args.grid or [])
    names = sorted(grid)
    rows = []
    for combo in itertools.product(*(grid[n] for n in names)):
        params = dict(zip(names, combo))
        res = evaluate(args.kind, params, quad)
        rows.append({**params, **res})
    header = names + ["value", "err_estimate", "oracle", "discrepancy"]
    _emit(_write_rows(args.format, header, rows, {"kind": args.kind}), args.out, out)
    return 0


def cmd_limits(args: argparse.Namespace, out) -> int:
    rows = []
    failed = 0
    for cid, fn, lim, m in limit_cases():
        errs = [abs(fn(n) - lim) for n in LIMIT_N]
        ok = errs[-1] <= 0.05 * max(1.0, m) and trend_ok(errs[1], errs[-1])
        failed += not ok
        row: dict[str, Any] = {"id": cid, "limit": lim}
        row.update({f"err_n{n}": e for n, e in zip(LIMIT_N, errs)})
        row["pass"] = ok
        rows.append(row)
    header = ["id", "limit"] + [f"err_n{n}" for n in LIMIT_N] + ["pass"]
    _emit(_write_rows(args.format, header, rows, {"kind": "limits"}), args.out, out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="harmonia", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add_params(p: argparse.ArgumentParser) -> None:
        for name in NUMERIC_PARAMS:
            p.add_argument(f"--{name}", help=f"parameter {name}")
        p.add_argument("--variant", choices=[v.value for v in Variant])
        p.add_argument("--rep", choices=[r.value for r in ZetaRepresentation])
        p.add_argument("--parity", choices=("even", "odd"))
        p.add_argument("--tol", type=float, help="relative and absolute quadrature tolerance")

    c = sub.add_parser("compute", help="evaluate one quantity and print a JSON object")
    c.add_argument("--kind", required=True, choices=COMPUTE_KINDS + tuple(
        k for k in KINDS if k not in COMPUTE_KINDS))
    add_params(c)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all", choices=("all",) + tuple(SUITES))
    v.add_argument("--tol-scale", type=float, default=1.0)
    v.add_argument("--format", choices=("text", "json"), default="text")

    t = sub.add_parser("table", help="evaluate a quantity over a parameter grid")
    t.add_argument("--kind", required=True, choices=tuple(KINDS))
    t.add_argument("--grid", action="append", metavar="NAME=VALUES",
                   help="e.g. k=1..4 or m=2,3,4 (repeatable)")
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--out", help="output path (default: standard output)")
    t.add_argument("--tol", type=float)

    lim = sub.add_parser("limits", help="convergence table for the limit theorems")
    lim.add_argument("--format", choices=("csv", "json"), default="csv")
    lim.add_argument("--out")
    return ap


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "table": cmd_table,
            "limits": cmd_limits}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"harmonia: error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, QuadratureError) as exc:
        print(f"harmonia: numerical failure: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(f"harmonia: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
