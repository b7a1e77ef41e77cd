"""Series evaluation.

``sum_series``        geometric / power-law series (direct sum or Levin u-transform)
``sum_alternating``   Euler transform for alternating series
``sum_trig_series``   sum a(n) cos(n t) or a(n) sin(n t) with smooth amplitude a
``sum_sici_weighted`` sums of Si, si, Ci, f, g at c*n against trigonometric weights
plus the binomial double sum, the odd-power sine/cosine integrals and a
table of generalised harmonic numbers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .numkernel import Context, ConvergenceError, DomainError, const_euler_gamma, const_pi
from .quadkit import EvalResult, integrate_semi_infinite
from . import specfun

LN10 = math.log(10)

__all__ = [
    "ClassificationError",
    "TermGenerator",
    "sum_series",
    "sum_alternating",
    "sum_trig_series",
    "sum_sici_weighted",
    "Weight",
    "ONE",
    "ALTERNATING",
    "ODD_ONLY",
    "trig_power_tail",
    "euler_binomial_double_sum",
    "wiener_odd_power_integral",
    "HarmonicTable",
]

SANITY_TERMS = 64


class ClassificationError(ValueError):
    """Observed terms contradict the declared decay class."""


@dataclass(frozen=True)
class TermGenerator:
    """Index -> term mapping with its decay metadata.

    decay is one of ``"geometric"`` (rate = ratio bound), ``"power"``
    (rate = exponent), ``"alternating"``, ``"oscillatory_trig"``
    (rate = frequency) or ``"si_ci_weighted"``.
    """

    term: Callable[[int], Any]
    start: int = 1
    decay: str = "geometric"
    rate: Any = None


def _target(ctx: Context):
    return ctx.mp.mpf(10) ** (-(ctx.working_digits + 3))


def _check_decay(ctx: Context, gen: TermGenerator, terms: Sequence[Any]) -> None:
    """Cheap consistency check of the declared class on the first terms."""
    mags = [abs(t) for t in terms]
    if gen.decay == "alternating":
        signs = [1 if t > 0 else -1 for t in terms[4:] if t != 0]
        if any(a == b for a, b in zip(signs, signs[1:])):
            raise ClassificationError("terms do not alternate in sign")
        return
    if len(mags) < 48:
        return
    early = max(mags[8:24]) or ctx.mp.mpf(1)
    late = max(mags[-16:])
    if gen.decay == "geometric":
        r = float(gen.rate)
        bound = early * (min(1.0, r * 1.25) ** (len(mags) - 24)) * len(mags) ** 4
        if late > bound + ctx.eps:
            raise ClassificationError("terms decay slower than the declared geometric ratio")
    elif gen.decay == "power":
        p = float(gen.rate)
        n1, n2 = gen.start + 16, gen.start + len(mags) - 8
        if late > early * 4 * (n2 / n1) ** (-(p - 0.5)) + ctx.eps:
            raise ClassificationError("terms decay slower than the declared power")


def sum_series(ctx: Context, gen: TermGenerator) -> EvalResult:
    """Sum a geometric or power-law series.

    Geometric: direct summation until the geometric tail bound falls below
    the working target.  Power (exponent >= 2 or any exponent > 1 with a
    smooth asymptotic expansion): Levin u-transform of the partial sums,
    carried out at doubled precision.  Terms with logarithmic factors defeat
    the transform; those fall back to a direct head plus an Euler-Maclaurin
    tail, which needs ``term`` to accept real arguments.
    """
    if gen.decay == "geometric":
        return _sum_geometric(ctx, gen)
    if gen.decay == "power":
        try:
            return _sum_levin(ctx, gen)
        except ConvergenceError:
            return _sum_em_tail(ctx, gen)
    if gen.decay == "alternating":
        return sum_alternating(ctx, gen)
    raise ClassificationError(f"sum_series does not handle decay class {gen.decay!r}")


def _sum_geometric(ctx: Context, gen: TermGenerator) -> EvalResult:
    mp = ctx.mp
    r = specfun.to_real(ctx, gen.rate)
    if not 0 <= r < 1:
        raise DomainError("geometric ratio must lie in [0, 1)")
    target = _target(ctx)
    factor = 2 * r / (1 - r) if r else mp.mpf(0)
    total = mp.mpf(0)
    window: List[Any] = []
    first: List[Any] = []
    n = gen.start
    count = 0
    biggest = mp.mpf(0)
    while True:
        t = gen.term(n)
        total += t
        count += 1
        biggest = max(biggest, abs(t))
        if len(first) < SANITY_TERMS:
            first.append(t)
            if len(first) == SANITY_TERMS:
                _check_decay(ctx, gen, first)
        window.append(abs(t))
        if len(window) > 8:
            window.pop(0)
        tail = max(window) * factor
        if count >= 8 and tail <= target * max(1, abs(total)) and max(window) <= target * max(1, abs(total)):
            err = tail + count * ctx.eps * biggest
            return EvalResult(total, err, 0, count)
        if count >= ctx.max_series_terms:
            raise ConvergenceError("series cutoff exceeds max_series_terms",
                                   partial=EvalResult(total, tail, 0, count))
        n += 1


def _levin_u(mp, partial: Sequence[Any], terms: Sequence[Any], k: int):
    """Levin u-transform T_k from S_0..S_k with remainder estimates (j+1) a_j."""
    num = mp.mpf(0)
    den = mp.mpf(0)
    bk = mp.mpf(k + 1)
    for j in range(k + 1):
        c = (-1) ** j * math.comb(k, j) * (mp.mpf(j + 1) / bk) ** (k - 1)
        w = (j + 1) * terms[j]
        num += c * partial[j] / w
        den += c / w
    return num / den


def _sum_levin(ctx: Context, gen: TermGenerator) -> EvalResult:
    mp = ctx.mp
    target = _target(ctx)
    wd = ctx.working_digits
    with mp.extradps(wd):
        terms: List[Any] = []
        partial: List[Any] = []
        s = mp.mpf(0)
        prev = None
        est = None
        k = 8
        n = gen.start
        while True:
            while len(terms) <= k:
                t = gen.term(n)
                if t == 0:
                    raise ClassificationError("power-class series has a vanishing term")
                terms.append(t)
                s += t
                partial.append(s)
                n += 1
                if len(terms) == SANITY_TERMS:
                    _check_decay(ctx, gen, terms)
            est = _levin_u(mp, partial, terms, k)
            if prev is not None:
                delta = abs(est - prev)
                if delta <= target * max(1, abs(est)):
                    return EvalResult(+est, delta + ctx.eps * abs(est), 0, len(terms))
            if k >= 400 or len(terms) >= ctx.max_series_terms:
                raise ConvergenceError("Levin transform did not settle",
                                       partial=EvalResult(+est, abs(est - prev), 0, len(terms)))
            prev = est
            k += 4


def _sum_em_tail(ctx: Context, gen: TermGenerator, N: int = 200, J: int = 14) -> EvalResult:
    # sum_{n>=N} f(n) = int_N^inf f + f(N)/2 - sum_j B_2j/(2j)! f^(2j-1)(N) + R_J
    mp = ctx.mp
    wd = ctx.working_digits
    N = max(N, gen.start)
    with mp.extradps(wd):
        head = mp.fsum(gen.term(n) for n in range(gen.start, N))
        f = gen.term
        try:
            tail = N * integrate_semi_infinite(ctx, lambda t: f(N * t), 1).value + f(mp.mpf(N)) / 2
            last = None
            for j in range(1, J + 1):
                corr = specfun.to_real(ctx, specfun.bernoulli_number(2 * j)) / mp.factorial(2 * j) \
                    * mp.diff(f, mp.mpf(N), 2 * j - 1)
                tail -= corr
                last = abs(corr)
        except (TypeError, ValueError) as exc:
            raise ConvergenceError(f"Euler-Maclaurin tail needs a term defined at real n: {exc}") from exc
        total = head + tail
        return EvalResult(+total, last + ctx.eps * abs(total), 0, N - gen.start)


def sum_alternating(ctx: Context, gen: TermGenerator) -> EvalResult:
    """Euler transform of an alternating series sum_{n>=start} t_n.

    With t_n = (-1)^(n-start) b_n, the value is sum_k (-1)^k Delta^k b_start / 2^(k+1).
    The forward differences are built incrementally; each new column costs
    one term evaluation.
    """
    mp = ctx.mp
    target = _target(ctx)
    head = [gen.term(gen.start + i) for i in range(SANITY_TERMS)]
    _check_decay(ctx, TermGenerator(gen.term, gen.start, "alternating"), head)
    s0 = 1 if head[0] > 0 else -1
    b = lambda i: s0 * (-1) ** i * (head[i] if i < len(head) else gen.term(gen.start + i))
    diag: List[Any] = []  # diag[k] = Delta^k b_(i-k) for the latest i
    total = mp.mpf(0)
    small = 0
    for i in range(ctx.max_series_terms):
        v = b(i)
        new = [v]
        for k in range(len(diag)):
            new.append(new[k] - diag[k])
        # new[k] is Delta^k b_(i-k); the leading term Delta^i b_0 enters now
        diag = new
        lead = diag[i] * (-1) ** i / mp.mpf(2) ** (i + 1)
        total += lead
        small = small + 1 if abs(lead) < target * max(1, abs(total)) else 0
        if small >= 3 and i > 8:
            return EvalResult(s0 * total, abs(lead) * 2 + i * ctx.eps, 0, i + 1)
    raise ConvergenceError("Euler transform did not converge", partial=EvalResult(s0 * total, abs(lead), 0, i + 1))


def sum_trig_series(ctx: Context, amplitude: Callable[[Any], Any], theta, kind: str = "cos",
                    start: int = 1) -> EvalResult:
    """sum_{n>=start} a(n) cos(n theta) or a(n) sin(n theta) for a smooth, decaying a.

    Direct summation to N followed by Euler's transformation of the complex
    tail, sum_{n>=N} a_n z^n = z^N/(1-z) sum_k (z/(1-z))^k Delta^k a_N with
    z = exp(i theta).  Convergence is conditional-safe: only smoothness of a
    is needed, not absolute convergence.
    """
    mp = ctx.mp
    theta = specfun.to_real(ctx, theta)
    z = mp.expj(theta)
    gap = abs(1 - z)
    if gap < mp.mpf(10) ** -6:
        raise DomainError("frequency too close to a multiple of 2 pi for the trigonometric transform")
    gapf = float(gap)
    budget = ctx.working_digits * LN10 + 12
    N = start + math.ceil(budget / gapf)
    K = math.ceil(N * gapf) + 8
    if N + K > ctx.max_series_terms:
        raise ConvergenceError("trigonometric series needs too many terms")
    extra = math.ceil(K * math.log10(2)) + 10
    with mp.extradps(extra):
        theta_x = theta
        head = mp.mpc(0)
        for n in range(start, N):
            head += amplitude(mp.mpf(n)) * mp.expj(n * theta_x)
        vals = [amplitude(mp.mpf(N + j)) for j in range(K + 1)]
        zz = mp.expj(theta_x)
        q = zz / (1 - zz)
        tail = mp.mpc(0)
        diffs = list(vals)
        qk = mp.mpc(1)
        last = None
        target = _target(ctx)
        for k in range(K + 1):
            term = qk * diffs[0]
            tail += term
            last = abs(term)
            if k > 4 and last < target * 1e-3:
                break
            diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
            if not diffs:
                break
            qk *= q
        tail *= zz**N / (1 - zz)
        total = head + tail
        val = total.real if kind == "cos" else total.imag
        return EvalResult(+val, (last or 0) + N * ctx.eps, 0, N + K)


# ---------------------------------------------------------------------------
# Si / Ci weighted sums
# ---------------------------------------------------------------------------

# A weight is a tuple of (coef, "cos"|"sin", phi) with phi a rational multiple of pi.
Weight = Tuple[Tuple[Any, str, Fraction], ...]
ONE: Weight = ((1, "cos", Fraction(0)),)
ALTERNATING: Weight = ((1, "cos", Fraction(1)),)
ODD_ONLY: Weight = ((Fraction(1, 2), "cos", Fraction(0)), (Fraction(-1, 2), "cos", Fraction(1)))


def _angle(ctx: Context, x, what: str):
    """Normalise an angle given in units of pi: Fraction when rational, else a context real."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    try:
        return specfun.to_real(ctx, x)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{what} must be a real multiple of pi") from exc


def _combine(ctx: Context, a, b, sign: int):
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a + sign * b
    return specfun.to_real(ctx, a) + sign * specfun.to_real(ctx, b)


def _mod2(ctx: Context, t):
    if isinstance(t, Fraction):
        return t % 2
    return t - 2 * ctx.mp.floor(t / 2)


def _trig_at(ctx: Context, kind: str, t) -> Any:
    """cos(t pi) or sin(t pi)."""
    if isinstance(t, Fraction):
        return specfun._exact_trig(ctx, kind, t)
    x = t * const_pi(ctx)
    return ctx.mp.cos(x) if kind == "cos" else ctx.mp.sin(x)


def _trig_product(ctx: Context, kind1: str, a, kind2: str, b) -> List[Tuple[Fraction, str, Any]]:
    """trig1(a pi) * trig2(b pi) as a sum of (coef, kind, angle)."""
    h = Fraction(1, 2)
    minus, plus = _combine(ctx, a, b, -1), _combine(ctx, a, b, 1)
    if kind1 == "cos" and kind2 == "cos":
        return [(h, "cos", minus), (h, "cos", plus)]
    if kind1 == "sin" and kind2 == "sin":
        return [(h, "cos", minus), (-h, "cos", plus)]
    if kind1 == "sin" and kind2 == "cos":
        return [(h, "sin", plus), (h, "sin", minus)]
    return [(h, "sin", plus), (-h, "sin", minus)]


def _euler_power_tail(ctx: Context, s: int, theta, M: int):
    """sum_{n>=M} n^-s e^(i n theta) by Euler's transformation (complex result).

    The k-th transformed term is q^k Delta^k n^-s with q = z/(1-z); the
    differences shrink like 1/C(M+k, k), so enough guard digits are carried
    to form them by subtraction.
    """
    mp = ctx.mp
    gap = float(abs(1 - mp.expj(theta)))
    if gap < 0.5:
        raise DomainError("angle too close to a multiple of 2 pi for the trigonometric tail")
    K = 2 * M + 60
    lost = (math.lgamma(M + K + 1) - math.lgamma(M + 1) - math.lgamma(K + 1)) / LN10
    rel = mp.mpf(10) ** (-(ctx.working_digits + 5))
    with mp.extradps(int(lost) + 15):
        z = mp.expj(theta)
        q = z / (1 - z)
        row = [mp.mpf(M + j) ** (-s) for j in range(K + 1)]
        acc = mp.mpc(0)
        qk = mp.mpc(1)
        small = 0
        for k in range(K + 1):
            term = qk * row[0]
            acc += term
            small = small + 1 if abs(term) < rel * abs(acc) else 0
            if small >= 2:
                return z**M / (1 - z) * acc
            row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
            qk *= q
    raise ConvergenceError("trigonometric tail transform did not settle")


def trig_power_tail(ctx: Context, kind: str, s: int, angle, N: int) -> Any:
    """sum_{n>N} trig(n angle pi)/n^s.

    Rational angles go through Hurwitz zeta values over residue classes;
    other angles through Euler's transformation of the complex tail.  Neither
    route subtracts a head sum, so tiny tails keep full relative precision.
    """
    mp = ctx.mp
    if not isinstance(angle, Fraction):
        v = _euler_power_tail(ctx, s, specfun.to_real(ctx, angle) * const_pi(ctx), N + 1)
        return +(v.real if kind == "cos" else v.imag)
    angle = angle % 2
    period = 2 * angle.denominator
    acc = mp.mpf(0)
    for r in range(period):
        w = specfun._exact_trig(ctx, kind, r * angle)
        if w == 0:
            continue
        first = N + 1 + ((r - N - 1) % period)
        acc += w * specfun.hurwitz_zeta(ctx, s, Fraction(first, period))
    return acc * mp.mpf(period) ** (-s)


def sum_sici_weighted(ctx: Context, components, k: int, c, weight: Weight = ONE) -> EvalResult:
    """sum_{n>=1} n^-k * sum_i coef_i trig_i(n phi_i pi) W_i(c pi n).

    ``c`` and every ``phi`` are measured in units of pi; ints and Fractions
    are treated exactly.  ``components`` is either one function name W in
    {"Si", "si", "Ci", "f", "g"}, combined with ``weight`` (``ONE``,
    ``ALTERNATING`` for (-1)^n, ``ODD_ONLY`` or an explicit tuple of
    (coef, kind, phi)), or an explicit tuple of (coef, kind, phi, W).

    The pi/2 part of Si is summed in closed form.  Everything else is
    written through f and g, summed directly for n <= N1 and replaced for
    n > N1 by the optimally truncated expansions
    f(x) ~ sum (-1)^j (2j)!/x^(2j+1), g(x) ~ sum (-1)^j (2j+1)!/x^(2j+2).
    """
    mp = ctx.mp
    c = _angle(ctx, c, "argument scale")
    if c <= 0:
        raise DomainError("argument scale must be positive")
    if isinstance(components, str):
        comps = [(coef, kind, _angle(ctx, phi, "phase"), components) for coef, kind, phi in weight]
    else:
        comps = [(coef, kind, _angle(ctx, phi, "phase"), W) for coef, kind, phi, W in components]
    pi = const_pi(ctx)
    cr = specfun.to_real(ctx, c) * pi
    target = _target(ctx)

    closed = mp.mpf(0)
    for coef, kind, phi, W in comps:
        if W == "Si":
            if k < 1 or (k == 1 and kind == "cos" and _mod2(ctx, phi) == 0):
                raise DomainError("the Si part diverges for this weight and exponent")
            closed += specfun.to_real(ctx, coef) * pi / 2 * specfun.trig_power_sum(ctx, kind, k, phi * pi)

    fg: List[Tuple[Any, str, Any, str]] = []
    for coef, kind, phi, W in comps:
        if W in ("f", "g"):
            fg.append((coef, kind, phi, W))
        elif W in ("si", "Si"):  # si = -f cos - g sin
            fg += [(-coef * cc, kk, ang, "f") for cc, kk, ang in _trig_product(ctx, kind, phi, "cos", c)]
            fg += [(-coef * cc, kk, ang, "g") for cc, kk, ang in _trig_product(ctx, kind, phi, "sin", c)]
        elif W == "Ci":  # Ci = f sin - g cos
            fg += [(coef * cc, kk, ang, "f") for cc, kk, ang in _trig_product(ctx, kind, phi, "sin", c)]
            fg += [(-coef * cc, kk, ang, "g") for cc, kk, ang in _trig_product(ctx, kind, phi, "cos", c)]
        else:
            raise ValueError(f"unknown function {W!r}")
    merged: Dict[Tuple[str, Any, str], Any] = {}
    for coef, kind, ang, F in fg:
        ang = _mod2(ctx, ang)
        if kind == "sin" and isinstance(ang, Fraction) and ang.denominator == 1:
            continue
        key = (kind, ang, F)
        merged[key] = merged.get(key, 0) + coef

    N1 = max(16, math.ceil((ctx.working_digits * LN10 + 20) / float(cr)))
    if not all(isinstance(ang, Fraction) for _, ang, _ in merged):
        # the Euler tail needs n well beyond the order of the expansion
        N1 *= 4
    if N1 > ctx.max_series_terms:
        raise ConvergenceError("cutoff exceeds max_series_terms")

    direct = mp.mpf(0)
    for n in range(1, N1 + 1):
        si_, ci_, f_, g_ = specfun.sici_fg(ctx, cr * n)
        vals = {"Si": si_, "si": si_, "Ci": ci_, "f": f_, "g": g_}  # Si's pi/2 is in ``closed``
        acc = mp.mpf(0)
        for coef, kind, phi, W in comps:
            w = _trig_at(ctx, kind, n * phi)
            if w != 0:
                acc += specfun.to_real(ctx, coef) * w * vals[W]
        direct += acc / mp.mpf(n) ** k

    tail = mp.mpf(0)
    err = mp.mpf(0)
    cN = float(cr) * N1
    for (kind, ang, F), coef in merged.items():
        if coef == 0:
            continue
        coef_r = specfun.to_real(ctx, coef)
        j = 0
        prev = None
        while True:
            m = 2 * j + 1 if F == "f" else 2 * j + 2
            # size of this order at the n = N1 scale
            size = abs(float(coef)) * math.exp(math.lgamma(m) - m * math.log(cN)) * N1 ** (1 - k)
            if prev is not None and size > prev:
                err += mp.mpf(prev)
                break
            t = trig_power_tail(ctx, kind, k + m, ang, N1)
            tail += coef_r * (-1) ** j * math.factorial(m - 1) / cr**m * t
            if size < float(target) * 1e-3:
                err += mp.mpf(size)
                break
            prev = size
            j += 1
    total = closed + direct + tail
    return EvalResult(total, err + N1 * ctx.eps, 0, N1)


# ---------------------------------------------------------------------------
# exact and combinatorial sums
# ---------------------------------------------------------------------------

def euler_binomial_double_sum(ctx: Context, s) -> EvalResult:
    """sum_{n>=1} 2^-n sum_{k=1}^n C(n,k) k^-s, expected to equal 2 zeta(s).

    The inner binomial averages decay only like (2/n)^s, so the outer sum is
    taken directly for n < N and the remainder from its Laplace form
        (2/Gamma(s)) int_0^inf t^(s-1) [q^N/(1-e^-t) - 2^-N] dt,  q = (1+e^-t)/2.
    """
    mp = ctx.mp
    if s < 2:
        raise DomainError("euler_binomial_double_sum needs s >= 2")
    s_r = specfun.to_real(ctx, s)
    N = 64
    powers = [mp.mpf(0)] + [mp.mpf(k) ** (-s_r) for k in range(1, N)]
    head = mp.mpf(0)
    for n in range(1, N):
        inner = mp.fsum(math.comb(n, k) * powers[k] for k in range(1, n + 1))
        head += inner / mp.mpf(2) ** n
    twoN = mp.mpf(2) ** (-N)

    def remainder(t):
        q = (1 + mp.exp(-t)) / 2
        return t ** (s_r - 1) * (q**N / (-mp.expm1(-t)) - twoN)

    r = integrate_semi_infinite(ctx, remainder, 0)
    gam = specfun.gamma(ctx, s_r)
    value = head + 2 * r.value / gam
    return EvalResult(value, 2 * r.err_estimate / gam + N * ctx.eps, r.levels_used, N)


_RATIONAL_COS = {
    Fraction(0): Fraction(1),
    Fraction(1, 3): Fraction(1, 2),
    Fraction(1, 2): Fraction(0),
    Fraction(2, 3): Fraction(-1, 2),
    Fraction(1): Fraction(-1),
}


def _rational_cos(t: Fraction) -> Optional[Fraction]:
    t = t % 2
    if t > 1:
        t = 2 - t
    return _RATIONAL_COS.get(t)


def _rational_sin(t: Fraction) -> Optional[Fraction]:
    return _rational_cos(Fraction(1, 2) - t)


def wiener_odd_power_integral(n: int, t, kind: str = "sin", ctx: Optional[Context] = None):
    """int_0^t sin^(2n+1) x dx (kind="sin") or int_0^t cos^(2n+1) x dx (kind="cos").

    sin: sum_k C(n,k) (-1)^(k+1) [cos^(2k+1) t - 1]/(2k+1)
    cos: sum_k C(n,k) (-1)^k sin^(2k+1) t/(2k+1)

    A ``Fraction`` t is read as a multiple of pi; when the relevant cosine or
    sine is rational the result is an exact ``Fraction``.  Otherwise ``ctx``
    is required and a context real is returned.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    exact = None
    if isinstance(t, Fraction):
        exact = _rational_cos(t) if kind == "sin" else _rational_sin(t)
    if exact is not None:
        v = exact
        one = Fraction(1)
    else:
        if ctx is None:
            raise ValueError("a context is needed for non-rational trigonometric values")
        mp = ctx.mp
        tr = specfun.to_real(ctx, t) * (const_pi(ctx) if isinstance(t, Fraction) else 1)
        v = mp.cos(tr) if kind == "sin" else mp.sin(tr)
        one = mp.mpf(1)
    acc = 0 * one
    for k in range(n + 1):
        c = math.comb(n, k)
        if kind == "sin":
            acc += c * (-1) ** (k + 1) * (v ** (2 * k + 1) - one) / (2 * k + 1)
        else:
            acc += c * (-1) ** k * v ** (2 * k + 1) / (2 * k + 1)
    return acc


def double_factorial_ratio(n: int) -> Fraction:
    """(2n)!!/(2n+1)!! = [2^n n!]^2/(2n+1)!."""
    return Fraction((2**n * math.factorial(n)) ** 2, math.factorial(2 * n + 1))


class HarmonicTable:
    """Generalised harmonic numbers H_n^(r), r = 1..4, and odd sums O_n.

    Exact ``Fraction`` values for n <= n_exact; context reals up to n_max.
    """

    ORDERS = (1, 2, 3, 4)

    def __init__(self, ctx: Context, n_max: int, n_exact: int = 200):
        self.ctx = ctx
        self.n_max = n_max
        self.n_exact = min(n_exact, n_max)
        mp = ctx.mp
        self._exact = {r: [Fraction(0)] for r in self.ORDERS}
        self._odd_exact = [Fraction(0)]
        for n in range(1, self.n_exact + 1):
            for r in self.ORDERS:
                self._exact[r].append(self._exact[r][-1] + Fraction(1, n**r))
            self._odd_exact.append(self._odd_exact[-1] + Fraction(1, 2 * n - 1))
        self._real = {r: [specfun.to_real(ctx, v) for v in self._exact[r]] for r in self.ORDERS}
        self._odd_real = [specfun.to_real(ctx, v) for v in self._odd_exact]
        for n in range(self.n_exact + 1, n_max + 1):
            nn = mp.mpf(n)
            for r in self.ORDERS:
                self._real[r].append(self._real[r][-1] + 1 / nn**r)
            self._odd_real.append(self._odd_real[-1] + 1 / (2 * nn - 1))

    def exact(self, n: int, r: int = 1) -> Fraction:
        if n > self.n_exact:
            raise IndexError("n beyond the exact range")
        return self._exact[r][n]

    def H(self, n: int, r: int = 1) -> Any:
        if n > self.n_max:
            raise IndexError("n beyond table size")
        return self._real[r][n]

    def odd(self, n: int) -> Any:
        """O_n = 1 + 1/3 + ... + 1/(2n-1)."""
        return self._odd_real[n]

    def odd_exact(self, n: int) -> Fraction:
        return self._odd_exact[n]


def harmonic_table(ctx: Context, n_max: int = 400) -> HarmonicTable:
    """Per-context shared table (built once, read-only afterwards)."""
    key = ("harmonic", n_max)
    return ctx.cached(key, lambda: HarmonicTable(ctx, n_max))
