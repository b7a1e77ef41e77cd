"""Acceptance criteria 1-10.

Each test records one ``criterion N: PASS|FAIL`` line; the lines are
printed in the pytest terminal summary, or directly when this file is run
as a script.
"""
from __future__ import annotations

import json
import subprocess
import sys
import time
from fractions import Fraction as F
from pathlib import Path

import pytest

from zil import make_context, specfun
from zil.catalog import check_identity, get_identity, run_suite
from zil.cli import main as cli_main
from zil.identities import Kit, PiMul
from zil.numkernel import constants
from zil.quadkit import quad
from zil.sumkit import TermGenerator, sum_series

LINES: dict = {}
HERE = Path(__file__).resolve().parent


def record(n: int, ok: bool, detail: str) -> None:
    LINES[n] = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(LINES[n])


def ctx40():
    return make_context(40)


def pairwise(values):
    vals = list(values.items())
    worst = 0
    for i, (_, a) in enumerate(vals):
        for _, b in vals[i + 1:]:
            worst = max(worst, abs(a - b) / abs(b))
    return worst


def test_criterion_1_constants():
    ctx = ctx40()
    k = Kit(ctx)
    mp, c = ctx.mp, constants(ctx)
    zeta3 = {
        "constant": c.zeta3,
        "hurwitz": specfun.hurwitz_zeta(ctx, 3, 1),
        "levin": sum_series(ctx, TermGenerator(lambda n: 1 / mp.mpf(n) ** 3, 1, "power", 3)).value,
        "zeta(2n) series": check_identity(ctx, "E6.71").rhs,
        "log B": 4 * c.pi ** 2 * c.log_glaisher_B,
    }
    catalan = {
        "constant": c.catalan_G,
        "quarter hurwitz": (specfun.hurwitz_zeta(ctx, 2, F(1, 4)) - specfun.hurwitz_zeta(ctx, 2, F(3, 4))) / 16,
        "clausen": specfun.clausen(ctx, 2, c.pi / 2),
        "x/sin x": k.q(lambda x: x / mp.sin(x) if x else mp.mpf(1), 0, PiMul(F(1, 2))) / 2,
        "central binomial": check_identity(ctx, "E8.15a").rhs,
    }
    log_a = {
        "constant": c.log_glaisher_A,
        "closed zeta'(-1)": k.r(F(1, 12)) - specfun.zeta_sderiv(ctx, -1),
        "hurwitz zeta'(-1,1)": k.r(F(1, 12)) - specfun.hurwitz_zeta_sderiv(ctx, -1, 1),
        "Ci sum": k.sici("Ci", 2, 2) / (2 * c.pi ** 2) + F(1, 4),
    }
    worst = {name: pairwise(v) for name, v in (("zeta3", zeta3), ("G", catalan), ("logA", log_a))}
    ok = all(w <= mp.mpf(10) ** -35 for w in worst.values())
    record(1, ok, "worst pairwise rel: " + ", ".join(f"{n} {mp.nstr(w, 2)}" for n, w in worst.items()))
    assert ok


QUAD_GOLDEN = ["E6.28", "E6.29", "E6.30", "E6.69o", "E6.106", "E6.107b", "E6.107d", "E8.51", "E8.55"]


def test_criterion_2_quadrature_golden():
    ctx = ctx40()
    mp = ctx.mp
    bound = mp.mpf(10) ** -30
    bad = []
    t0 = time.perf_counter()
    k = Kit(ctx)
    lhs = k.q(lambda t: t * mp.log(mp.sin(t)) if t else mp.mpf(0), 0, PiMul(F(1, 2)))
    rhs = F(7, 16) * k.z3 - k.pi ** 2 / 8 * k.ln2
    el = time.perf_counter() - t0
    if abs(lhs - rhs) / abs(rhs) > bound or el >= 5:
        bad.append(f"7.16 rel={mp.nstr(abs(lhs - rhs) / abs(rhs), 3)}")
    for id_ in QUAD_GOLDEN:
        r = check_identity(ctx, id_)
        worst = max((p.rel_err for p in r.points), default=r.rel_err)
        if worst > bound or r.elapsed >= 5:
            bad.append(f"{id_} rel={mp.nstr(worst, 3)} t={r.elapsed:.2f}s")
    record(2, not bad, "all within 1e-30 and 5 s" if not bad else "; ".join(bad))
    assert not bad


SERIES_GOLDEN = ["E5.11", "E6.52", "E6.54", "E6.71", "E6.79", "E6.92", "E6.99", "E6.102d", "E6.103g",
                 "E6.107i", "E6.107l", "E8.4", "E8.15a", "E8.17", "E8.37a", "E8.44"]


def _points(r):
    return r.points or []


def test_criterion_3_series_golden():
    ctx = ctx40()
    mp = ctx.mp
    bad = []
    for id_ in SERIES_GOLDEN:
        r = check_identity(ctx, id_)
        pts = _points(r)
        if id_ == "E6.99":
            pts = [p for p in pts if p.param == F(1, 3)]
        worst = max((p.rel_err for p in pts), default=r.rel_err)
        if worst > mp.mpf(10) ** -30:
            bad.append(f"{id_} rel={mp.nstr(worst, 3)}")
    record(3, not bad, "all within 1e-30" if not bad else "; ".join(bad))
    assert not bad


SICI_BLOCK = {"E6.91": 25, "E6.94k": 25, "E6.94ki": 25, "E6.117": 25, "E6.117e": 25, "E6.94o": 25,
              "E6.117r": 25, "E6.117s": 25, "E6.120": 25, "E6.94a": 12, "E6.121": 12}


def test_criterion_4_sici_block():
    ctx = ctx40()
    mp = ctx.mp
    bad = []
    for id_, exp in SICI_BLOCK.items():
        r = check_identity(ctx, id_)
        worst = max((p.rel_err for p in r.points), default=r.rel_err)
        if worst > mp.mpf(10) ** -exp:
            bad.append(f"{id_} rel={mp.nstr(worst, 3)} (needs 1e-{exp})")
    record(4, not bad, "all within class bounds" if not bad else "; ".join(bad))
    assert not bad


def test_criterion_5_exact_combinatorics():
    e = get_identity("E8.11d")
    k = Kit(ctx40())
    bad = [n for n in range(51) if not (isinstance(e.lhs(k, n), F) and e.lhs(k, n) == e.rhs(k, n))]
    record(5, not bad, "exact Fraction equality for n = 0..50" if not bad else f"mismatch at n = {bad}")
    assert not bad


def test_criterion_6_fourier_coefficients():
    ctx = ctx40()
    mp = ctx.mp
    bad = []
    for id_ in ("E6.111c", "E6.119i"):
        r = check_identity(ctx, id_)
        got = sorted(p.param for p in r.points)
        if got != [1, 2, 3]:
            bad.append(f"{id_} sampled {got}")
        for p in r.points:
            if p.rel_err > mp.mpf(10) ** -25:
                bad.append(f"{id_} n={p.param} rel={mp.nstr(p.rel_err, 3)}")
    record(6, not bad, "n = 1..3 within 1e-25" if not bad else "; ".join(bad))
    assert not bad


def _classes(r):
    return {c.label: c.classification for c in r.claims}


def test_criterion_7_adjudication():
    ctx = ctx40()
    rep = {r.id: r for r in run_suite(ctx, status="adjudicate").results}

    def cls(id_, pred):
        return [c.classification for c in rep[id_].claims if pred(c)]

    checks = {}
    r = rep["A-6.48a"]
    checks["a"] = (cls("A-6.48a", lambda c: c.origin == "printed") == ["inconsistent"]
                   and any(c.classification == "consistent" and c.oracle == "quarter" for c in r.claims))
    printed_j = cls("A-6.117j", lambda c: c.origin == "printed")
    checks["b"] = len(printed_j) == 2 and printed_j.count("consistent") <= 1
    pair = cls("A-6.119-vs-6.121c", lambda c: True)
    checks["c"] = sorted(pair) == ["consistent", "inconsistent"]
    checks["d"] = cls("A-6.135", lambda c: c.origin == "printed") == ["inconsistent"]
    checks["e"] = (cls("A-8.42b", lambda c: c.label.startswith("psi'(1/3) + psi'(2/3) = 2 pi^2")) == ["inconsistent"]
                   and "consistent" in cls("A-8.42b", lambda c: c.origin == "derived"))
    checks["f"] = all(x == "inconsistent" for x in cls("A-8.52", lambda c: c.origin == "printed" and c.oracle == "main"))
    checks["g"] = cls("A-8.31a", lambda c: c.origin == "printed") == ["inconsistent"] \
        and "consistent" in cls("A-8.31a", lambda c: c.origin == "derived")
    checks["h"] = cls("A-6.111", lambda c: c.origin == "corrected") == ["consistent"] \
        and cls("A-6.111", lambda c: c.origin == "printed") == ["inconsistent"]
    bad = [k for k, v in checks.items() if not v]
    record(7, not bad, "items a-h as required" if not bad else f"items {bad} differ")
    assert not bad


def test_criterion_8_conjectures(capsys):
    ctx = make_context(40)
    ids = ["C-6.92b", "C-6.92c", "C-8.61", "C-8.62"]
    bad = []
    for id_ in ids:
        r = check_identity(ctx, id_)
        if r.verdict != "conjecture_value" or r.lhs is None or r.rhs is None \
                or r.lhs_err is None or r.rhs_err is None:
            bad.append(id_)
    args = ["verify", "--digits", "30"] + [a for i in ids for a in ("--id", i)]
    code = cli_main(args)
    capsys.readouterr()
    if code != 0:
        bad.append(f"exit code {code}")
    record(8, not bad, "both sides with error estimates, exit code 0" if not bad else f"problems: {bad}")
    assert not bad


def test_criterion_9_property_suites():
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider",
                           str(HERE / "test_properties.py")], capture_output=True, text=True, cwd=HERE)
    tail = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr[-200:]
    record(9, proc.returncode == 0, f"digits 30 and 40: {tail}")
    assert proc.returncode == 0


def _strip_timing(data):
    for row in data["results"]:
        row.pop("elapsed", None)
    return data


@pytest.mark.slow
def test_criterion_10_determinism(tmp_path, capsys):
    outs = []
    for i in range(2):
        path = tmp_path / f"run{i}.json"
        cli_main(["verify", "--digits", "40", "--format", "json", "--out", str(path)])
        outs.append(_strip_timing(json.loads(path.read_text())))
    capsys.readouterr()
    same = outs[0] == outs[1]
    n = len(outs[0]["results"])
    record(10, same, f"two full-suite JSON reports ({n} entries) identical apart from timing" if same
           else "reports differ")
    assert same


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
