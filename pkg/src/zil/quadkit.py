"""Double-exponential quadrature at context precision.

tanh-sinh on finite intervals, exp-sinh on [a, inf).  Nodes are generated as
offsets from the nearest endpoint, so integrands with log or algebraic
endpoint singularities can be evaluated without cancellation: pass the hint
``"offsets"`` and the integrand is called as ``f(x, da, db)`` where ``da`` and
``db`` are the exact distances to the endpoints.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, FrozenSet, Iterable, List, Tuple

from .numkernel import Context, ConvergenceError, DomainError, const_pi
from . import specfun

__all__ = [
    "EvalResult",
    "QuadratureProblem",
    "IntegrandError",
    "integrate",
    "quad",
    "integrate_semi_infinite",
    "integrate_fourier_coeff",
    "dehaan_closed_form",
]

MIN_LEVEL = 3


@dataclass(frozen=True)
class EvalResult:
    """A computed value with an error estimate and the work it took."""

    value: Any
    err_estimate: Any
    levels_used: int = 0
    terms_used: int = 0


@dataclass(frozen=True)
class QuadratureProblem:
    integrand: Callable[..., Any]
    a: Any
    b: Any  # may be mpmath inf
    hints: FrozenSet[str] = field(default_factory=frozenset)


class IntegrandError(ArithmeticError):
    def __init__(self, message: str, node: Any = None):
        super().__init__(message)
        self.node = node


# ---------------------------------------------------------------------------
# node tables
# ---------------------------------------------------------------------------

def _ts_nodes(ctx: Context, level: int) -> List[Tuple[Any, Any]]:
    """tanh-sinh nodes added at ``level``: (endpoint offset d, weight) on [-1, 1].

    Node x = 1 - d (and its mirror); weights include the step h.  Level 0
    holds t = 0 and all integer t; level k > 0 holds the odd multiples of 2^-k.
    """

    def build():
        mp = ctx.mp
        wd = ctx.working_digits
        h = mp.mpf(2) ** (-level)
        halfpi = const_pi(ctx) / 2
        tiny = mp.mpf(10) ** (-(2 * wd + 10))
        out = []
        j = 0 if level == 0 else 1
        step = 1 if level == 0 else 2
        while True:
            t = j * h
            u = halfpi * mp.sinh(t)
            e2u = mp.exp(2 * u)
            d = 2 / (e2u + 1)
            ch = mp.cosh(u)
            w = h * halfpi * mp.cosh(t) / (ch * ch)
            out.append((d, w))
            if w < tiny and d < tiny:
                break
            j += step
        return out

    return ctx.cached(("ts", level), build)


def _es_nodes(ctx: Context, level: int) -> List[Tuple[Any, Any, int]]:
    """exp-sinh nodes added at ``level``: (offset y = exp(pi/2 sinh t), weight, sign of t)."""

    def build():
        mp = ctx.mp
        wd = ctx.working_digits
        h = mp.mpf(2) ** (-level)
        halfpi = const_pi(ctx) / 2
        tiny = mp.mpf(10) ** (-(2 * wd + 10))
        big = mp.mpf(10) ** (2 * wd + 10)  # power-law tails need the far nodes
        out = []
        j = 0 if level == 0 else 1
        step = 1 if level == 0 else 2
        # t >= 0 side: offsets grow; the integrand's decay ends the sum
        jj = j
        while True:
            t = jj * h
            y = mp.exp(halfpi * mp.sinh(t))
            out.append((y, h * halfpi * mp.cosh(t) * y, 1))
            if y > big:
                break
            jj += step
        # t < 0 side: offsets shrink towards a
        jj = max(j, 1)
        if level == 0:
            jj = 1
        while True:
            t = -jj * h
            y = mp.exp(halfpi * mp.sinh(t))
            w = h * halfpi * mp.cosh(t) * y
            out.append((y, w, -1))
            if w < tiny:
                break
            jj += step
        return out

    return ctx.cached(("es", level), build)


# ---------------------------------------------------------------------------
# drivers
# ---------------------------------------------------------------------------

def _call(f, offsets, x, da, db):
    try:
        return f(x, da, db) if offsets else f(x)
    except (ZeroDivisionError, ValueError, OverflowError) as exc:
        raise IntegrandError(f"integrand failed at x={x}: {exc}", node=x) from exc


def _finite(ctx: Context, f, a, b, hints) -> EvalResult:
    mp = ctx.mp
    offsets = "offsets" in hints
    a = specfun.to_real(ctx, a)
    b = specfun.to_real(ctx, b)
    if a == b:
        return EvalResult(mp.mpf(0), mp.mpf(0), 0, 0)
    if b < a:
        r = _finite(ctx, (lambda x, da, db: f(x, db, da)) if offsets else f, b, a, hints)
        return EvalResult(-r.value, r.err_estimate, r.levels_used, r.terms_used)
    half = (b - a) / 2
    mid = a + half
    target = mp.mpf(10) ** (-(ctx.digits + 5))
    eps = ctx.eps
    total = mp.mpf(0)
    absum = mp.mpf(0)
    prev = None
    evals = 0
    for level in range(0, ctx.max_quad_level + 1):
        part = mp.mpf(0)
        for d, w in _ts_nodes(ctx, level):
            off = half * d
            if d == 1:  # centre
                v = _call(f, offsets, mid, half, half)
                part += w * v
                absum += abs(w * v)
                evals += 1
                continue
            xl = a + off
            xr = b - off
            if xl != a:
                v = _call(f, offsets, xl, off, 2 * half - off)
                part += w * v
                absum += abs(w * v)
                evals += 1
            if xr != b:
                v = _call(f, offsets, xr, 2 * half - off, off)
                part += w * v
                absum += abs(w * v)
                evals += 1
        total = total / 2 + part if level else part
        est = total * half
        if prev is not None and level >= MIN_LEVEL:
            delta = abs(est - prev)
            floor = 10 * eps * absum * half
            if delta <= target * max(1, abs(est)) or delta <= floor:
                return EvalResult(est, max(delta, floor), level, evals)
        prev = est
    floor = 10 * eps * absum * half
    best = EvalResult(est, max(abs(est - prev), floor), ctx.max_quad_level, evals)
    raise ConvergenceError("tanh-sinh did not converge at max level", partial=best)


def integrate_semi_infinite(ctx: Context, f: Callable[[Any], Any], a=0) -> EvalResult:
    """int_a^inf f(x) dx by exp-sinh; f must decay at least like a power > 1."""
    mp = ctx.mp
    a = specfun.to_real(ctx, a)
    target = mp.mpf(10) ** (-(ctx.digits + 5))
    tiny = mp.mpf(10) ** (-(ctx.working_digits + 12))
    eps = ctx.eps
    total = mp.mpf(0)
    absum = mp.mpf(0)
    prev = None
    evals = 0
    for level in range(0, ctx.max_quad_level + 1):
        part = mp.mpf(0)
        small_run = 0
        for y, w, side in _es_nodes(ctx, level):
            if side > 0 and small_run >= 2:
                continue
            x = a + y
            if x == a:
                continue
            v = _call(f, False, x, y, None) * w
            evals += 1
            part += v
            absum += abs(v)
            if side > 0:
                small_run = small_run + 1 if abs(v) < tiny * max(abs(part), 1) else 0
        total = total / 2 + part if level else part
        if prev is not None and level >= MIN_LEVEL:
            delta = abs(total - prev)
            floor = 10 * eps * absum
            if delta <= target * max(1, abs(total)) or delta <= floor:
                return EvalResult(total, max(delta, floor), level, evals)
        prev = total
    best = EvalResult(total, abs(total - prev), ctx.max_quad_level, evals)
    raise ConvergenceError("exp-sinh did not converge at max level", partial=best)


def integrate(ctx: Context, problem: QuadratureProblem) -> EvalResult:
    """Integrate ``problem`` to about 10^-(digits+5) relative accuracy."""
    mp = ctx.mp
    if problem.b == mp.inf or problem.b == float("inf"):
        if "offsets" in problem.hints:
            raise DomainError("offset-style integrands are only supported on finite intervals")
        return integrate_semi_infinite(ctx, problem.integrand, problem.a)
    return _finite(ctx, problem.integrand, problem.a, problem.b, frozenset(problem.hints))


def quad(ctx: Context, f, a, b, hints: Iterable[str] = ()) -> EvalResult:
    """Shorthand for ``integrate(ctx, QuadratureProblem(f, a, b, hints))``."""
    return integrate(ctx, QuadratureProblem(f, a, b, frozenset(hints)))


def quad_panels(ctx: Context, f, points: List[Any], hints: Iterable[str] = ()) -> EvalResult:
    """Sum of ``quad`` over consecutive breakpoints."""
    mp = ctx.mp
    val = mp.mpf(0)
    err = mp.mpf(0)
    lev = 0
    n = 0
    for lo, hi in zip(points[:-1], points[1:]):
        r = quad(ctx, f, lo, hi, hints)
        val += r.value
        err += r.err_estimate
        lev = max(lev, r.levels_used)
        n += r.terms_used
    return EvalResult(val, err, lev, n)


def integrate_fourier_coeff(ctx: Context, weight: Callable[[Any], Any], n: int, kind: str) -> EvalResult:
    """int_0^1 weight(x) * trig(2 pi n x) dx, one panel per half-period.

    ``kind`` is ``"sin"`` or ``"cos"``; panels are split at the zeros of the
    trigonometric factor.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    mp = ctx.mp
    w2 = 2 * const_pi(ctx) * n
    if kind == "sin":
        cuts = [Fraction(k, 2 * n) for k in range(0, 2 * n + 1)]
        trig = mp.sin
    elif kind == "cos":
        cuts = [Fraction(0)] + [Fraction(2 * k + 1, 4 * n) for k in range(2 * n)] + [Fraction(1)]
        trig = mp.cos
    else:
        raise ValueError("kind must be 'sin' or 'cos'")
    pts = [specfun.to_real(ctx, c) for c in cuts]
    return quad_panels(ctx, lambda x: weight(x) * trig(w2 * x), pts)


# ---------------------------------------------------------------------------
# parametric closed form  I(a, p) = int_0^{pi/2} cos^{p-1} x cos(a x) dx
# ---------------------------------------------------------------------------

def _poly_mul(p, q, da, dp):
    out = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            i, j = i1 + i2, j1 + j2
            if i <= da and j <= dp:
                out[(i, j)] = out.get((i, j), 0) + c1 * c2
    return out


def _psi(ctx, m, x):
    return specfun.digamma(ctx, x) if m == 0 else specfun.polygamma(ctx, m, x)


def dehaan_closed_form(ctx: Context, p, a, da: int = 0, dp: int = 0) -> Any:
    """Partial derivative d^da/da^da d^dp/dp^dp of

        I(a, p) = (pi / 2^p) Gamma(p) / (Gamma((p+a+1)/2) Gamma((p-a+1)/2)),

    the closed form of int_0^{pi/2} cos^{p-1}(x) cos(a x) dx.  Differentiating
    in ``a`` brings down powers of x (with sin/cos swaps); differentiating in
    ``p`` brings down powers of log cos x.
    """
    mp = ctx.mp
    p = specfun.to_real(ctx, p)
    a = specfun.to_real(ctx, a)
    if p <= 0 or abs(a) >= p + 1:
        raise DomainError("dehaan_closed_form needs p > 0 and |a| < p + 1")
    p1 = (p + a + 1) / 2
    p2 = (p - a + 1) / 2
    L0 = mp.log(const_pi(ctx)) - p * mp.log(2) + specfun.log_gamma(ctx, p) \
        - specfun.log_gamma(ctx, p1) - specfun.log_gamma(ctx, p2)
    # Taylor coefficients of L - L0 in (alpha, beta)
    M = {}
    half = mp.mpf(1) / 2
    for i in range(0, da + 1):
        for j in range(0, dp + 1):
            if i == 0 and j == 0:
                continue
            m = i + j - 1
            c = -(half ** (i + j)) * (_psi(ctx, m, p1) + (-1) ** i * _psi(ctx, m, p2))
            if i == 0:
                c += _psi(ctx, j - 1, p)
                if j == 1:
                    c -= mp.log(2)
            M[(i, j)] = c / (math.factorial(i) * math.factorial(j))
    # exp(M) truncated
    result = {(0, 0): mp.mpf(1)}
    power = {(0, 0): mp.mpf(1)}
    for k in range(1, da + dp + 1):
        power = _poly_mul(power, M, da, dp)
        for key, c in power.items():
            result[key] = result.get(key, 0) + c / math.factorial(k)
    coeff = result.get((da, dp), 0)
    return mp.exp(L0) * coeff * math.factorial(da) * math.factorial(dp)
