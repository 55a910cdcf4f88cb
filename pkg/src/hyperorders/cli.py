"""Command line front end.

Every command builds a document ``{command, inputs, results, version}``
and renders it as an aligned table (default), JSON or CSV.  Exit codes:
0 success, 2 invalid input, 3 a valid question answered negatively.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from math import gcd
from pathlib import Path
from typing import Any, Callable

from . import __version__
from .autos import Signature, decide_F_liftable, klein_signature, semi_invariance_exponent
from .criterion import (
    ORACLE_MAX_MODULUS,
    ORACLE_MAX_VARS,
    OracleBoundExceeded,
    OrderCertificate,
    all_admissible,
    brute_force_admissible,
    factor_table,
    is_admissible,
)
from .family import HypersurfaceFamily, InvalidFamily
from .forms import format_form, klein
from .numtheory import PrimePower, factorize, is_prime
from .sylow import SylowVerdict, exponent_report, p_squared_excluded

EXIT_OK, EXIT_INVALID, EXIT_NEGATIVE = 0, 2, 3
FORMATS = ("table", "json", "csv")


class UsageError(Exception):
    """Invalid input; maps to exit code 2."""


class Result:
    """Payload plus a flat table view of it."""

    def __init__(self, results: dict, headers: list[str], rows: list[list[Any]], negative: bool = False,
                 notes: list[str] | None = None):
        self.results = results
        self.headers = headers
        self.rows = rows
        self.negative = negative
        self.notes = notes or []


# -- payload builders ---------------------------------------------------


def _family(n: int, d: int) -> HypersurfaceFamily:
    try:
        return HypersurfaceFamily(n, d)
    except InvalidFamily as exc:
        raise UsageError(str(exc)) from None


def _prime_power(p: int, r: int) -> PrimePower:
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    if r < 1:
        raise UsageError(f"exponent must be >= 1, got {r}")
    return PrimePower(p, r)


def _sig_json(sig: Signature) -> dict:
    return {"q": sig.q, "entries": list(sig.entries)}


def _checks_json(cert: OrderCertificate) -> dict | None:
    ch = cert.checks
    if ch is None:
        return None
    q = cert.pp.value
    det = None
    if ch.determinant is not None:
        det = {"exponent": ch.determinant[0], "ok": ch.determinant[1]}
    return {
        "invariance": {"c": ch.invariance_c, "ok": ch.invariance_c == 0},
        "pgl_order": {"value": ch.pgl_order, "ok": ch.pgl_order == q},
        "smooth": {"ok": ch.smooth},
        "determinant": det,
    }


def _cert_json(cert: OrderCertificate) -> dict:
    out = {
        "p": cert.pp.p,
        "r": cert.pp.r,
        "value": cert.pp.value,
        "verdict": cert.verdict,
        "case": cert.case.value,
        "ell": cert.ell,
        "k": cert.k,
        "bound": cert.bound,
        "reason": cert.reason,
        "form": None,
        "signature": None,
        "checks": _checks_json(cert),
    }
    if cert.witness is not None:
        form, sig = cert.witness
        out["form"] = format_form(form)
        out["signature"] = _sig_json(sig)
    return out


def orders_payload(n: int, d: int) -> Result:
    fam = _family(n, d)
    certs = all_admissible(fam)
    items = [_cert_json(c) for c in certs]
    rows = [
        [str(c.pp), c.pp.value, c.case.value, c.ell if c.ell is not None else "", c.k if c.k is not None else "",
         format_form(c.witness[0]), str(c.witness[1])]
        for c in certs
    ]
    results = {"n": n, "d": d, "values": [c.pp.value for c in certs], "prime_powers": items}
    return Result(results, ["p^r", "value", "case", "ell", "k", "witness form", "signature"], rows)


def witness_payload(n: int, d: int, p: int, r: int) -> Result:
    fam = _family(n, d)
    cert = is_admissible(fam, _prime_power(p, r))
    results = _cert_json(cert)
    if not cert.admissible:
        return Result(results, ["p^r", "verdict", "reason"], [[str(cert.pp), cert.verdict, cert.reason]],
                      negative=True)
    ch = results["checks"]
    det = ch["determinant"]
    rows = [
        ["form", results["form"]],
        ["signature", str(cert.witness[1])],
        ["case", f"({cert.case.value})"],
        ["invariance", f"c={ch['invariance']['c']} {'ok' if ch['invariance']['ok'] else 'FAIL'}"],
        ["pgl order", f"{ch['pgl_order']['value']} {'ok' if ch['pgl_order']['ok'] else 'FAIL'}"],
        ["smooth", "ok" if ch["smooth"]["ok"] else "FAIL"],
        ["determinant", "n/a (p | d-1)" if det is None else f"exponent {det['exponent']} {'ok' if det['ok'] else 'FAIL'}"],
    ]
    return Result(results, ["check", "value"], rows)


def _klein_block(n: int, d: int, p: int) -> dict:
    sig = klein_signature(n, p)
    c = semi_invariance_exponent(sig, klein(n, d))
    ok, b = decide_F_liftable(sig.q, c, d)
    return {"p": p, "signature": _sig_json(sig), "c": c, "f_liftable": ok, "shift": b}


def liftable_payload(n: int, d: int) -> Result:
    fam = _family(n, d)
    g = gcd(d, n + 2)
    blocks = [_klein_block(n, d, p) for p, _ in factorize(g).factors]
    results = {"n": n, "d": d, "gcd": g, "liftable": g == 1, "klein_obstructions": blocks}
    rows = [["liftable", str(g == 1).lower()], ["gcd(d, n+2)", g]]
    rows += [[f"klein p={b['p']}", f"c={b['c']}, F-liftable={str(b['f_liftable']).lower()}"] for b in blocks]
    return Result(results, ["item", "value"], rows, negative=g != 1)


def _verdict_json(v: SylowVerdict) -> dict:
    return {
        "p": v.p,
        "status": v.status.value,
        "ell_p": v.ell_p,
        "ell_p2": v.ell_p2,
        "max_exponent": v.max_exponent,
        "sylow_cap": v.sylow_cap,
        "via_embedding": v.via_embedding,
        "reasons": list(v.reasons),
    }


def _blank(x):
    return "" if x is None else x


def sylow_payload(n: int, d: int, p: int | None = None, assume: tuple[int, ...] = ()) -> Result:
    fam = _family(n, d)
    if p is None:
        verdicts = exponent_report(fam, assume_f_liftable=assume)
    else:
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
        verdicts = [p_squared_excluded(fam, p, assume_f_liftable=p in assume)]
    items = [_verdict_json(v) for v in verdicts]
    caps = {str(v.p): v.sylow_cap for v in verdicts if v.sylow_cap is not None}
    rows = [[v.p, v.status.value, _blank(v.ell_p), _blank(v.ell_p2), _blank(v.max_exponent),
             _blank(v.sylow_cap), str(v.via_embedding).lower()] for v in verdicts]
    results = {"n": n, "d": d, "primes": items, "caps": caps}
    return Result(results, ["p", "status", "l(p)", "l(p^2)", "max r", "cap", "embedded"], rows)


def factor_table_payload(d: int, max_ell: int) -> Result:
    if d < 3 or max_ell < 1:
        raise UsageError("factor-table needs d >= 3 and max_ell >= 1")
    rows_ = factor_table(d, max_ell)
    items = [
        {"ell": row.ell, "value": row.value, "abs_value": abs(row.value),
         "factors": [list(f) for f in row.factorization.factors], "text": str(row.factorization)}
        for row in rows_
    ]
    rows = [[row.ell, row.value, abs(row.value), str(row.factorization)] for row in rows_]
    return Result({"d": d, "rows": items}, ["ell", "(1-d)^ell - 1", "abs", "factorization"], rows)


def oracle_payload(n: int, d: int, p: int, r: int, max_modulus: int, max_vars: int, jobs: int) -> Result:
    fam = _family(n, d)
    pp = _prime_power(p, r)
    try:
        found = brute_force_admissible(fam, pp, jobs=jobs, max_modulus=max_modulus, max_vars=max_vars)
    except OracleBoundExceeded as exc:
        raise UsageError(str(exc)) from None
    criterion = is_admissible(fam, pp).admissible
    results = {"n": n, "d": d, "p": p, "r": r, "oracle": found, "criterion": criterion, "agree": found == criterion}
    rows = [["oracle", str(found).lower()], ["criterion", str(criterion).lower()]]
    return Result(results, ["method", "admissible"], rows, negative=not found)


CUBIC_FAMILIES = ((2, 3), (3, 3), (4, 3), (5, 3))


def reference_tables_payload() -> Result:
    orders = {f"{n},{d}": orders_payload(n, d).results["values"] for n, d in CUBIC_FAMILIES + ((3, 4), (3, 5))}
    klein_block = {"n": 4, "d": 3, **_klein_block(4, 3, 3)}
    liftable = {f"{n},{d}": gcd(d, n + 2) == 1 for n, d in ((2, 3), (3, 3), (4, 3), (5, 3), (3, 4), (3, 5))}
    sylow = {f"{n},{d}": sylow_payload(n, d).results["caps"] for n, d in CUBIC_FAMILIES}
    # quintic threefold: Sylow p-subgroups for p != 5 are F-liftable by an outside result
    sylow["3,5"] = sylow_payload(3, 5, assume=(13, 17, 41)).results["caps"]
    ft = factor_table_payload(3, 9).results["rows"]
    results = {
        "orders": orders,
        "factor_table_d3": [{"ell": r["ell"], "abs_value": r["abs_value"], "text": r["text"]} for r in ft],
        "klein_non_liftable": klein_block,
        "liftable": liftable,
        "sylow_caps": sylow,
    }
    rows = [[f"orders {k}", " ".join(map(str, v))] for k, v in orders.items()]
    rows += [[f"2^{r['ell']} + (-1)^{r['ell'] + 1}", f"{r['abs_value']} = {r['text']}"] for r in results["factor_table_d3"]]
    rows.append(["klein n=4 d=3 p=3", f"c={klein_block['c']}, F-liftable={str(klein_block['f_liftable']).lower()}"])
    rows += [[f"liftable {k}", str(v).lower()] for k, v in liftable.items()]
    rows += [[f"sylow caps {k}", ", ".join(f"r_{p}<={c}" for p, c in v.items())] for k, v in sylow.items()]
    return Result(results, ["block", "value"], rows)


# -- rendering ----------------------------------------------------------


def document(command: str, inputs: dict, result: Result) -> dict:
    return {"command": command, "inputs": inputs, "results": result.results, "version": __version__}


def dumps_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_csv(result: Result) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(result.headers)
    w.writerows(result.rows)
    return buf.getvalue()


def use_color(stream) -> bool:
    if os.environ.get("HYPERORDERS_NO_COLOR"):
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def render_table(result: Result, color: bool = False) -> str:
    cells = [[str(x) for x in row] for row in result.rows]
    widths = [len(h) for h in result.headers]
    for row in cells:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    head = "  ".join(h.ljust(w) for h, w in zip(result.headers, widths)).rstrip()
    if color:
        head = f"\x1b[1m{head}\x1b[0m"
    lines = [head, "  ".join("-" * w for w in widths)]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines += result.notes
    return "\n".join(lines) + "\n"


def render(command: str, inputs: dict, result: Result, fmt: str, stream=None) -> str:
    if fmt == "json":
        return dumps_json(document(command, inputs, result))
    if fmt == "csv":
        return render_csv(result)
    return render_table(result, color=use_color(stream or sys.stdout))


# -- config and argument parsing ---------------------------------------


def load_config(path: str | None) -> dict:
    """Read defaults from a TOML file; only ``format`` is recognised."""
    try:
        import tomllib
    except ImportError:  # Python < 3.11
        import tomli as tomllib

    candidates = [path] if path else [
        os.environ.get("HYPERORDERS_CONFIG"),
        str(Path.home() / ".config" / "hyperorders" / "config.toml"),
    ]
    for cand in candidates:
        if cand and Path(cand).is_file():
            with open(cand, "rb") as fh:
                try:
                    cfg = tomllib.load(fh)
                except tomllib.TOMLDecodeError as exc:
                    raise UsageError(f"bad config {cand}: {exc}") from None
            fmt = cfg.get("format")
            if fmt is not None and fmt not in FORMATS:
                raise UsageError(f"config {cand}: unknown format {fmt!r}")
            return cfg
        if path:
            raise UsageError(f"config file {path} not found")
    return {}


def build_parser() -> argparse.ArgumentParser:
    def global_options(default):
        opts = argparse.ArgumentParser(add_help=False)
        opts.add_argument("--format", choices=FORMATS, default=default, help="output format (default: table)")
        opts.add_argument("--config", default=default, help="TOML file with a default 'format'")
        return opts

    # subcommands must not reset options given before the subcommand name
    common = global_options(argparse.SUPPRESS)
    parser = argparse.ArgumentParser(
        prog="hyperorders",
        description="Orders and liftability of automorphisms of smooth projective hypersurfaces.",
        parents=[global_options(None)],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orders", parents=[common], help="all admissible prime-power orders for (n, d)")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)

    p = sub.add_parser("witness", parents=[common], help="witness hypersurface for an order p^r")
    for name in ("n", "d", "p", "r"):
        p.add_argument(name, type=int)

    p = sub.add_parser("liftable", parents=[common], help="is every automorphism group F-liftable for (n, d)")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)

    p = sub.add_parser("sylow", parents=[common], help="Sylow p^2-exclusion report")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("p", type=int, nargs="?")
    p.add_argument("--assume-liftable", type=int, action="append", default=[], metavar="P",
                   help="treat the Sylow P-subgroup as F-liftable (repeatable)")

    p = sub.add_parser("factor-table", parents=[common], help="factorizations of (1-d)^l - 1")
    p.add_argument("d", type=int)
    p.add_argument("max_ell", type=int)

    p = sub.add_parser("oracle", parents=[common], help="brute-force signature search for one p^r")
    for name in ("n", "d", "p", "r"):
        p.add_argument(name, type=int)
    p.add_argument("--max-modulus", type=int, default=ORACLE_MAX_MODULUS)
    p.add_argument("--max-vars", type=int, default=ORACLE_MAX_VARS)
    p.add_argument("--jobs", type=int, default=1)

    sub.add_parser("paper-tables", parents=[common], help="every reproduced table in one document")
    return parser


def _dispatch(args) -> tuple[dict, Result]:
    c = args.command
    if c == "orders":
        return {"n": args.n, "d": args.d}, orders_payload(args.n, args.d)
    if c == "witness":
        inputs = {"n": args.n, "d": args.d, "p": args.p, "r": args.r}
        return inputs, witness_payload(args.n, args.d, args.p, args.r)
    if c == "liftable":
        return {"n": args.n, "d": args.d}, liftable_payload(args.n, args.d)
    if c == "sylow":
        inputs = {"n": args.n, "d": args.d, "p": args.p, "assume_liftable": sorted(args.assume_liftable)}
        return inputs, sylow_payload(args.n, args.d, args.p, tuple(args.assume_liftable))
    if c == "factor-table":
        return {"d": args.d, "max_ell": args.max_ell}, factor_table_payload(args.d, args.max_ell)
    if c == "oracle":
        inputs = {"n": args.n, "d": args.d, "p": args.p, "r": args.r}
        return inputs, oracle_payload(args.n, args.d, args.p, args.r, args.max_modulus, args.max_vars, args.jobs)
    if c == "paper-tables":
        return {}, reference_tables_payload()
    raise UsageError(f"unknown command {c}")


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = load_config(args.config)
        fmt = args.format or cfg.get("format") or "table"
        inputs, result = _dispatch(args)
    except UsageError as exc:
        print(f"hyperorders: error: {exc}", file=stderr)
        return EXIT_INVALID
    stdout.write(render(args.command, inputs, result, fmt, stdout))
    return EXIT_NEGATIVE if result.negative else EXIT_OK


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
