"""Identity registry and the check / adjudication engine.

An ``Identity`` pairs two code-registered evaluators.  ``check_identity``
evaluates both at every sample point and applies the entry's tolerance
class.  Adjudication entries instead carry one or more oracles computed
by this package and a list of printed or derived claims, each classified
as consistent or inconsistent with its oracle at a fixed 1e-10.
Conjecture entries report both sides and never pass or fail.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields, is_dataclass, replace
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .numkernel import Context, ConvergenceError, DomainError, make_context

__all__ = [
    "SECTIONS",
    "STATUSES",
    "TOL_CLASSES",
    "ADJUDICATION_TOL",
    "Claim",
    "Identity",
    "PointResult",
    "ClaimResult",
    "CheckResult",
    "Report",
    "UnknownIdentityError",
    "class_tolerance",
    "rel_err",
    "load_catalog",
    "get_identity",
    "select",
    "check_identity",
    "run_suite",
]

SECTIONS = ("S5", "S6", "S7", "S8")
STATUSES = ("proven", "adjudicate", "conjecture")
TOL_CLASSES = ("tight", "standard", "slow")
ADJUDICATION_TOL = 1e-10
MAIN = "main"

Evaluator = Callable[..., Any]


class UnknownIdentityError(KeyError):
    pass


@dataclass(frozen=True)
class Claim:
    """One printed, corrected or derived form of an adjudicated quantity.

    ``value(kit)`` gives the value the form asserts; it is compared with
    the entry oracle named by ``oracle``.
    """

    label: str
    value: Evaluator
    origin: str = "printed"  # printed | corrected | derived
    oracle: str = MAIN


@dataclass(frozen=True)
class Identity:
    id: str
    section: str
    status: str
    anchor: str
    description: str
    lhs: Optional[Evaluator] = None
    rhs: Optional[Evaluator] = None
    params: Tuple[Any, ...] = ()
    tol_class: str = "standard"
    oracles: Tuple[Tuple[str, str, Evaluator], ...] = ()  # (name, what it computes, evaluator)
    claims: Tuple[Claim, ...] = ()
    exact: bool = False

    @property
    def covers(self) -> Tuple[str, ...]:
        return tuple(part.strip().strip("()") for part in self.anchor.split(","))

    @property
    def variants(self) -> Tuple[str, ...]:
        return tuple(c.label for c in self.claims)


@dataclass(frozen=True)
class PointResult:
    param: Any
    lhs: Any
    rhs: Any
    abs_err: Any
    rel_err: Any


@dataclass(frozen=True)
class ClaimResult:
    label: str
    origin: str
    oracle: str
    value: Any
    oracle_value: Any
    rel_err: Any
    classification: str  # consistent | inconsistent


@dataclass
class CheckResult:
    id: str
    section: str
    status: str
    anchor: str
    tol_class: str
    verdict: str  # pass | fail | adjudicated | conjecture_value
    lhs: Any = None
    rhs: Any = None
    abs_err: Any = None
    rel_err: Any = None
    tolerance: Any = None
    lhs_err: Any = None
    rhs_err: Any = None
    param: Any = None
    points: List[PointResult] = field(default_factory=list)
    claims: List[ClaimResult] = field(default_factory=list)
    reason: str = ""
    elapsed: float = 0.0


@dataclass
class Report:
    context: dict
    results: List[CheckResult]
    counts: Dict[str, int]
    coverage: Dict[str, str]

    @property
    def proven_ok(self) -> bool:
        return all(r.verdict == "pass" for r in self.results if r.status == "proven")


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

_CATALOG: Optional[Tuple[Identity, ...]] = None


def _validate(entries: Sequence[Identity]) -> None:
    seen = set()
    for e in entries:
        if e.id in seen:
            raise ValueError(f"duplicate identity id {e.id}")
        seen.add(e.id)
        if e.section not in SECTIONS or e.status not in STATUSES or e.tol_class not in TOL_CLASSES:
            raise ValueError(f"bad metadata on {e.id}")
        if not e.anchor:
            raise ValueError(f"{e.id} has no anchor")
        if e.status == "adjudicate":
            names = {name for name, _, _ in e.oracles}
            if MAIN not in names:
                raise ValueError(f"{e.id} has no main oracle")
            if any(c.oracle not in names for c in e.claims):
                raise ValueError(f"{e.id} has a claim without an oracle")
            derived = any(c.origin == "derived" for c in e.claims)
            if len(e.claims) < 2 and not (e.claims and derived):
                raise ValueError(f"{e.id} needs two variants or a variant and a derived oracle")
        elif e.lhs is None or e.rhs is None:
            raise ValueError(f"{e.id} is missing an evaluator")


def load_catalog() -> List[Identity]:
    """The full built-in registry, in catalog order."""
    global _CATALOG
    if _CATALOG is None:
        from .identities import ENTRIES

        _validate(ENTRIES)
        _CATALOG = tuple(ENTRIES)
    return list(_CATALOG)


def get_identity(id_: str) -> Identity:
    for e in load_catalog():
        if e.id == id_:
            return e
    raise UnknownIdentityError(id_)


def select(ids: Optional[Iterable[str]] = None, section: Optional[str] = None,
           status: Optional[str] = None, prefix: Optional[str] = None) -> List[Identity]:
    """Filter the catalog; unknown explicit ids raise ``UnknownIdentityError``."""
    entries = load_catalog()
    if ids:
        wanted = list(ids)
        known = {e.id for e in entries}
        missing = [i for i in wanted if i not in known]
        if missing:
            raise UnknownIdentityError(", ".join(missing))
        entries = [e for e in entries if e.id in set(wanted)]
    if section:
        entries = [e for e in entries if e.section == section]
    if status:
        entries = [e for e in entries if e.status == status]
    if prefix:
        entries = [e for e in entries if e.id.startswith(prefix)]
    return entries


def coverage_map(entries: Optional[Sequence[Identity]] = None) -> Dict[str, str]:
    out: Dict[str, str] = {}
    for e in entries if entries is not None else load_catalog():
        for label in e.covers:
            out.setdefault(label, e.id)
    return out


# ---------------------------------------------------------------------------
# checking
# ---------------------------------------------------------------------------

def class_tolerance(ctx: Context, tol_class: str):
    mp = ctx.mp
    if tol_class == "tight":
        return mp.mpf(10) ** (-(ctx.digits - 5))
    if tol_class == "standard":
        return mp.mpf(10) ** (-(ctx.digits - 10))
    if tol_class == "slow":
        return mp.mpf(10) ** -12
    raise ValueError(f"unknown tolerance class {tol_class!r}")


def rel_err(ctx: Context, a, b):
    mp = ctx.mp
    a = _real(ctx, a)
    b = _real(ctx, b)
    return abs(a - b) / max(mp.mpf(1), abs(a), abs(b))


def _real(ctx: Context, x):
    if isinstance(x, Fraction):
        return ctx.mp.mpf(x.numerator) / x.denominator
    return ctx.mp.mpf(x)


def _side(kit_factory, fn, param):
    kit = kit_factory()
    val = fn(kit) if param is None else fn(kit, param)
    return val, kit.err


def check_identity(ctx: Context, id_or_entry, tol_override: Optional[int] = None) -> CheckResult:
    """Evaluate one catalog entry; numerical failures become a ``fail`` verdict.

    ``tol_override`` replaces the class tolerance of proven entries by 10^-tol_override.
    """
    from .identities import Kit

    entry = get_identity(id_or_entry) if isinstance(id_or_entry, str) else id_or_entry
    res = CheckResult(entry.id, entry.section, entry.status, entry.anchor, entry.tol_class, "fail")
    t0 = time.perf_counter()
    try:
        if entry.status == "adjudicate":
            _adjudicate(ctx, entry, res, Kit)
        else:
            _compare(ctx, entry, res, Kit, tol_override)
    except (ConvergenceError, DomainError, ArithmeticError, ValueError) as exc:
        res.verdict = "fail"
        res.reason = f"{type(exc).__name__}: {exc}"
    res.elapsed = time.perf_counter() - t0
    return res


def _compare(ctx: Context, entry: Identity, res: CheckResult, Kit, tol_override=None) -> None:
    if tol_override is None:
        tol = class_tolerance(ctx, entry.tol_class)
    else:
        tol = ctx.mp.mpf(10) ** (-tol_override)
    res.tolerance = tol
    worst: Optional[PointResult] = None
    worst_errs = (None, None)
    for p in entry.params or (None,):
        lhs, lerr = _side(lambda: Kit(ctx), entry.lhs, p)
        rhs, rerr = _side(lambda: Kit(ctx), entry.rhs, p)
        if entry.exact:
            exact_equal = Fraction(lhs) == Fraction(rhs)
            r = ctx.mp.mpf(0) if exact_equal else rel_err(ctx, lhs, rhs)
            lhs_v, rhs_v = lhs, rhs
        else:
            lhs_v, rhs_v = _real(ctx, lhs), _real(ctx, rhs)
            r = rel_err(ctx, lhs_v, rhs_v)
        pt = PointResult(p, lhs_v, rhs_v, abs(_real(ctx, lhs) - _real(ctx, rhs)), r)
        res.points.append(pt)
        if worst is None or r > worst.rel_err:
            worst, worst_errs = pt, (lerr, rerr)
    assert worst is not None
    res.lhs, res.rhs, res.abs_err, res.rel_err, res.param = worst.lhs, worst.rhs, worst.abs_err, worst.rel_err, worst.param
    res.lhs_err, res.rhs_err = worst_errs
    if entry.status == "conjecture":
        res.verdict = "conjecture_value"
    elif entry.exact:
        res.verdict = "pass" if all(pt.rel_err == 0 for pt in res.points) else "fail"
    else:
        res.verdict = "pass" if worst.rel_err <= tol else "fail"


def _adjudicate(ctx: Context, entry: Identity, res: CheckResult, Kit) -> None:
    tol = ctx.mp.mpf(ADJUDICATION_TOL)
    res.tolerance = tol
    oracle_vals: Dict[str, Any] = {}
    oracle_errs: Dict[str, Any] = {}
    for name, _, fn in entry.oracles:
        val, err = _side(lambda: Kit(ctx), fn, None)
        oracle_vals[name], oracle_errs[name] = _real(ctx, val), err
    for claim in entry.claims:
        val, _ = _side(lambda: Kit(ctx), claim.value, None)
        val = _real(ctx, val)
        ref = oracle_vals[claim.oracle]
        r = rel_err(ctx, val, ref)
        res.claims.append(ClaimResult(claim.label, claim.origin, claim.oracle, val, ref, r,
                                      "consistent" if r <= tol else "inconsistent"))
    first = next((c for c in res.claims if c.origin == "printed"), res.claims[0])
    res.lhs, res.rhs = first.oracle_value, first.value
    res.abs_err, res.rel_err = abs(first.value - first.oracle_value), first.rel_err
    res.lhs_err = oracle_errs[first.oracle]
    res.verdict = "adjudicated"


# ---------------------------------------------------------------------------
# suite
# ---------------------------------------------------------------------------

class _Raw(tuple):
    """An mpf's internal tuple; private-context reals do not pickle."""


def _convert(obj, to_raw: bool, mp=None):
    if to_raw and hasattr(obj, "_mpf_"):
        return _Raw(obj._mpf_)
    if not to_raw and isinstance(obj, _Raw):
        return mp.make_mpf(tuple(obj))
    if is_dataclass(obj) and not isinstance(obj, type):
        return replace(obj, **{f.name: _convert(getattr(obj, f.name), to_raw, mp)
                               for f in fields(obj) if f.init})
    if isinstance(obj, list):
        return [_convert(x, to_raw, mp) for x in obj]
    return obj


def _worker(args):
    snapshot, id_, tol_override = args
    ctx = Context(**snapshot)
    return _convert(check_identity(ctx, id_, tol_override), True)


def run_suite(ctx: Context, section: Optional[str] = None, status: Optional[str] = None,
              prefix: Optional[str] = None, ids: Optional[Iterable[str]] = None,
              jobs: int = 1, tol_override: Optional[int] = None) -> Report:
    """Run the selected entries; the report keeps catalog order whatever the completion order."""
    entries = select(ids=ids, section=section, status=status, prefix=prefix)
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    snapshot = ctx.snapshot()
    work = [(snapshot, e.id, tol_override) for e in entries]
    if jobs == 1 or len(work) < 2:
        results = [check_identity(Context(**snapshot), id_, tol) for snapshot, id_, tol in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [_convert(r, False, ctx.mp) for r in pool.map(_worker, work)]
    counts = {"pass": 0, "fail": 0, "adjudicated": 0, "conjecture_value": 0}
    for r in results:
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
    return Report(snapshot, results, counts, coverage_map(entries))
