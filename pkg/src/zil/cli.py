"""Command line front end: ``zil list`` and ``zil verify``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from . import __version__
from .catalog import SECTIONS, STATUSES, Report, UnknownIdentityError, run_suite, select
from .numkernel import ConfigurationError, default_digits, make_context

FORMATS = ("text", "json", "csv")
CSV_COLUMNS = ("id", "section", "status", "lhs", "rhs", "rel_err", "verdict")


@dataclass(frozen=True)
class CliConfig:
    command: str
    digits: int = 40
    ids: tuple = ()
    section: Optional[str] = None
    status: Optional[str] = None
    fmt: str = "text"
    jobs: int = 1
    out: Optional[str] = None
    tol_override: Optional[int] = None

    def __post_init__(self):
        if self.digits < 16:
            raise ConfigurationError("digits must be >= 16")
        if self.jobs < 1:
            raise ConfigurationError("jobs must be >= 1")
        if self.fmt not in FORMATS:
            raise ConfigurationError(f"unknown format {self.fmt!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zil", description="Verify the built-in identity catalog.")
    p.add_argument("--version", action="version", version=f"zil {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_ in (("list", "list catalog entries"), ("verify", "check catalog entries")):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--id", dest="ids", action="append", default=[], metavar="ID",
                       help="entry id; repeatable")
        s.add_argument("--section", choices=SECTIONS)
        s.add_argument("--status", choices=STATUSES)
        s.add_argument("--digits", type=int, default=None,
                       help="decimal digits (default: $ZIL_DIGITS or 40)")
        s.add_argument("--jobs", type=int, default=1)
        s.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
        s.add_argument("--out", metavar="PATH")
        s.add_argument("--tol", dest="tol_override", type=int, default=None, metavar="EXP",
                       help="override proven-entry tolerance with 10^-EXP")
    return p


def parse_config(argv: Optional[Sequence[str]] = None) -> CliConfig:
    ns = build_parser().parse_args(argv)
    digits = ns.digits if ns.digits is not None else default_digits()
    return CliConfig(ns.command, digits, tuple(ns.ids), ns.section, ns.status, ns.fmt, ns.jobs,
                     ns.out, ns.tol_override)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _num(mp, x, digits: int) -> Optional[str]:
    if x is None:
        return None
    if isinstance(x, Fraction):
        x = mp.mpf(x.numerator) / x.denominator
    return mp.nstr(mp.mpf(x), digits + 5, min_fixed=-5, max_fixed=6)


def report_dict(report: Report, digits: int) -> dict:
    from .numkernel import Context

    mp = Context(**report.context).mp
    rows = []
    for r in report.results:
        row = {
            "id": r.id,
            "section": r.section,
            "status": r.status,
            "anchor": r.anchor,
            "lhs": _num(mp, r.lhs, digits),
            "rhs": _num(mp, r.rhs, digits),
            "abs_err": _num(mp, r.abs_err, 6),
            "rel_err": _num(mp, r.rel_err, 6),
            "verdict": r.verdict,
            "tol_class": r.tol_class,
            "tolerance": _num(mp, r.tolerance, 3),
            "lhs_err": _num(mp, r.lhs_err, 3),
            "rhs_err": _num(mp, r.rhs_err, 3),
            "param": None if r.param is None else str(r.param),
            "points": [{"param": None if pt.param is None else str(pt.param),
                        "lhs": _num(mp, pt.lhs, digits), "rhs": _num(mp, pt.rhs, digits),
                        "rel_err": _num(mp, pt.rel_err, 6)} for pt in r.points],
            "claims": [{"label": c.label, "origin": c.origin, "oracle": c.oracle,
                        "value": _num(mp, c.value, digits), "oracle_value": _num(mp, c.oracle_value, digits),
                        "rel_err": _num(mp, c.rel_err, 6), "classification": c.classification}
                       for c in r.claims],
            "reason": r.reason,
            "elapsed": round(r.elapsed, 3),
        }
        rows.append(row)
    c = report.counts
    return {
        "tool_version": __version__,
        "digits": digits,
        "results": rows,
        "summary": {"pass": c.get("pass", 0), "fail": c.get("fail", 0),
                    "adjudicated": c.get("adjudicated", 0), "conjectures": c.get("conjecture_value", 0)},
    }


def render(report: Report, digits: int, fmt: str) -> str:
    data = report_dict(report, digits)
    if fmt == "json":
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for row in data["results"]:
            w.writerow([row[k] if row[k] is not None else "" for k in CSV_COLUMNS])
        return buf.getvalue()
    lines = []
    for row in data["results"]:
        lines.append(f"{row['id']:<22} {row['status']:<10} {row['verdict']:<16} rel_err={row['rel_err']}  {row['anchor']}")
        if row["reason"]:
            lines.append(f"    reason: {row['reason']}")
        for c in row["claims"]:
            lines.append(f"    [{c['classification']:<12}] {c['origin']:<9} {c['label']}  (rel_err={c['rel_err']} vs {c['oracle']})")
    s = data["summary"]
    lines.append(f"pass={s['pass']} fail={s['fail']} adjudicated={s['adjudicated']} conjectures={s['conjectures']}")
    return "\n".join(lines) + "\n"


def render_list(entries, fmt: str) -> str:
    rows = [{"id": e.id, "section": e.section, "status": e.status, "anchor": e.anchor,
             "tol_class": e.tol_class, "description": e.description} for e in entries]
    if fmt == "json":
        return json.dumps(rows, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["id"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    return "".join(f"{r['id']:<22} {r['section']:<3} {r['status']:<10} {r['anchor']}\n" for r in rows)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_list(cfg: CliConfig) -> int:
    entries = select(ids=cfg.ids or None, section=cfg.section, status=cfg.status)
    _emit(render_list(entries, cfg.fmt), cfg.out)
    return 0


def cmd_verify(cfg: CliConfig) -> int:
    entries = select(ids=cfg.ids or None, section=cfg.section, status=cfg.status)
    if not entries:
        print("zil: no catalog entries match the filters", file=sys.stderr)
        return 2
    ctx = make_context(cfg.digits)
    report = run_suite(ctx, section=cfg.section, status=cfg.status, ids=cfg.ids or None,
                       jobs=cfg.jobs, tol_override=cfg.tol_override)
    _emit(render(report, cfg.digits, cfg.fmt), cfg.out)
    return 0 if report.proven_ok else 1


def main(argv: Optional[List[str]] = None) -> int:
    try:
        cfg = parse_config(argv)
        return cmd_list(cfg) if cfg.command == "list" else cmd_verify(cfg)
    except UnknownIdentityError as exc:
        print(f"zil: unknown identity id: {exc.args[0]}", file=sys.stderr)
        return 2
    except ConfigurationError as exc:
        print(f"zil: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
