"""Special functions at arbitrary precision.

All routines are implemented on top of the elementary functions of the
context's private mpmath instance; mpmath's own special functions are used
only by the test-suite as oracles.

Main building blocks
--------------------
* Euler--Maclaurin summation for the Hurwitz zeta function and its
  s-derivative (``hurwitz_zeta``, ``hurwitz_zeta_sderiv``).
* Stirling series with an upward shift for log-gamma and digamma.
* Exact Bernoulli / Euler numbers and polynomials as ``Fraction`` data.
* The expansion of Li_m(e^mu) about mu = 0 for polylogarithms near the unit
  circle; it drives the Clausen functions and trigonometric power sums.
* Taylor series / Laplace-integral auxiliary functions for Si, Ci.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, List, Tuple

from .numkernel import (
    Context,
    DomainError,
    const_catalan,
    const_euler_gamma,
    const_pi,
    const_zeta3,
)

LN10 = math.log(10)


def to_real(ctx: Context, x) -> Any:
    """Convert ints, Fractions, floats, strings or mpf values to a context real."""
    if isinstance(x, Fraction):
        return ctx.mp.mpf(x.numerator) / x.denominator
    return ctx.mp.mpf(x)


def _is_int(x) -> bool:
    try:
        return int(x) == x
    except (TypeError, ValueError, OverflowError):
        return False


# ---------------------------------------------------------------------------
# Exact Bernoulli and Euler numbers
# ---------------------------------------------------------------------------

_BERN: List[Fraction] = [Fraction(1)]
_EULER: List[int] = [1]


def bernoulli_number(n: int) -> Fraction:
    """B_n with the convention B_1 = -1/2."""
    if n < 0:
        raise DomainError("n must be non-negative")
    if n > 1 and n % 2:
        return Fraction(0)
    while len(_BERN) <= n:
        m = len(_BERN)
        if m > 1 and m % 2:
            _BERN.append(Fraction(0))
            continue
        acc = Fraction(0)
        c = 1  # C(m+1, k)
        for k in range(m):
            acc += c * _BERN[k]
            c = c * (m + 1 - k) // (k + 1)
        _BERN.append(-acc / (m + 1))
    return _BERN[n]


def euler_number(n: int) -> int:
    """E_n (secant numbers with signs): E_0=1, E_2=-1, E_4=5, ..."""
    if n < 0:
        raise DomainError("n must be non-negative")
    if n % 2:
        return 0
    while 2 * len(_EULER) <= n:
        m = 2 * len(_EULER)
        acc = 0
        for k in range(len(_EULER)):
            acc += math.comb(m, 2 * k) * _EULER[k]
        _EULER.append(-acc)
    return _EULER[n // 2]


@dataclass(frozen=True)
class PolySpec:
    """Exact polynomial; ``coefficients[i]`` multiplies x**i."""

    kind: str
    degree: int
    coefficients: Tuple[Fraction, ...]

    def exact(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> PolySpec:
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] += math.comb(n, k) * bernoulli_number(k)
    return PolySpec("Bernoulli", n, tuple(coeffs))


@lru_cache(maxsize=None)
def euler_poly(n: int) -> PolySpec:
    """E_n(x) = sum_k C(n,k) E_k/2^k (x - 1/2)^(n-k)."""
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        ek = euler_number(k)
        if not ek:
            continue
        c = Fraction(math.comb(n, k) * ek, 2**k)
        m = n - k
        # expand (x - 1/2)^m
        for j in range(m + 1):
            coeffs[j] += c * math.comb(m, j) * Fraction(-1, 2) ** (m - j)
    return PolySpec("Euler", n, tuple(coeffs))


def poly_eval(ctx: Context, spec: PolySpec, x) -> Any:
    """Horner evaluation at context precision (exact if ``x`` is a Fraction)."""
    if isinstance(x, (Fraction, int)):
        return to_real(ctx, spec.exact(Fraction(x)))
    x = to_real(ctx, x)
    acc = ctx.mp.mpf(0)
    for c in reversed(spec.coefficients):
        acc = acc * x + to_real(ctx, c)
    return acc


def _bern_real(ctx: Context, n: int):
    return ctx.cached(("B", n), lambda: to_real(ctx, bernoulli_number(n)))


def _bern_over_fact(ctx: Context, n: int):
    """B_n / n! as a context real."""
    return ctx.cached(("B/n!", n), lambda: to_real(ctx, bernoulli_number(n) / math.factorial(n)))


# ---------------------------------------------------------------------------
# Hurwitz zeta by Euler--Maclaurin
# ---------------------------------------------------------------------------

def _em_cutoff(ctx: Context, s) -> int:
    return max(10, math.ceil(0.4 * ctx.working_digits * LN10) + math.ceil(abs(float(s))))


def _hurwitz_em(ctx: Context, s, a, deriv: int):
    mp = ctx.mp
    sf = float(s)
    M = _em_cutoff(ctx, s)
    af = float(a)
    K = max(0, M - math.floor(af))
    extra = 8
    if sf < 1:
        extra += math.ceil((1 - sf) * math.log10(K + af + 1))
    with mp.extradps(extra):
        s = to_real(ctx, s)
        a = to_real(ctx, a)
        target = mp.mpf(10) ** (-(ctx.working_digits + 5))
        total = mp.mpf(0)
        for k in range(K):
            x = k + a
            t = x ** (-s)
            if deriv:
                t = -mp.log(x) * t
            total += t
            # fast exit for large s: the remaining tail is below target
            if sf > 2 and k > 2 and 2 * abs(t) * (k + af) / (sf - 1) < target * abs(total):
                return +total
        x = K + a
        L = mp.log(x)
        xs = x ** (-s)
        if deriv:
            total += -L * x * xs / (s - 1) - x * xs / (s - 1) ** 2 - L * xs / 2
        else:
            total += x * xs / (s - 1) + xs / 2
        scale = max(abs(total), mp.mpf(1))
        P, dP = s, mp.mpf(1)
        xpow = xs / x
        x2 = x * x
        for j in range(1, 2 * M + 2):
            b = _bern_over_fact(ctx, 2 * j)
            if deriv:
                term = b * (dP - L * P) * xpow
            else:
                if P == 0:
                    break
                term = b * P * xpow
            total += term
            if abs(term) < target * scale and j > 1:
                break
            for i in (2 * j - 1, 2 * j):
                dP = dP * (s + i) + P
                P = P * (s + i)
            xpow /= x2
        return +total


def hurwitz_zeta(ctx: Context, s, a) -> Any:
    """zeta(s, a) = sum_{k>=0} (k+a)^-s, continued analytically in s."""
    if a <= 0:
        raise DomainError("hurwitz_zeta needs a > 0")
    if s == 1:
        raise DomainError("hurwitz_zeta has a pole at s = 1")
    return _hurwitz_em(ctx, s, a, 0)


def hurwitz_zeta_sderiv(ctx: Context, s, a) -> Any:
    """d/ds zeta(s, a)."""
    if a <= 0:
        raise DomainError("hurwitz_zeta_sderiv needs a > 0")
    if s == 1:
        raise DomainError("hurwitz_zeta_sderiv has a pole at s = 1")
    return _hurwitz_em(ctx, s, a, 1)


def stieltjes1(ctx: Context, a) -> Any:
    """Generalised Stieltjes constant gamma_1(a).

    zeta(s, a) = 1/(s-1) - psi(a) - gamma_1(a) (s-1) + ...; obtained from the
    Euler--Maclaurin formula differentiated at s = 1 with the pole removed.
    """
    mp = ctx.mp
    M = _em_cutoff(ctx, 1)
    K = max(0, M - math.floor(float(a)))
    with mp.extradps(8):
        a = to_real(ctx, a)
        target = mp.mpf(10) ** (-(ctx.working_digits + 5))
        total = mp.mpf(0)
        for k in range(K):
            x = k + a
            total += mp.log(x) / x
        x = K + a
        L = mp.log(x)
        total += -L * L / 2 + L / (2 * x)
        # d/ds of B_2j/(2j)! (s)_(2j-1) x^(-s-2j+1) at s = 1, negated
        P, dP = mp.mpf(1), mp.mpf(1)
        xpow = 1 / (x * x)
        for j in range(1, 2 * M + 2):
            b = _bern_over_fact(ctx, 2 * j)
            term = b * (dP - L * P) * xpow
            total -= term
            if abs(term) < target and j > 1:
                break
            for i in (2 * j - 1, 2 * j):
                dP = dP * (1 + i) + P
                P = P * (1 + i)
            xpow /= x * x
        return +total


# ---------------------------------------------------------------------------
# Riemann zeta and relatives
# ---------------------------------------------------------------------------

def zeta_int(ctx: Context, n: int) -> Any:
    """zeta(n) for integer n != 1; exact Bernoulli route where it exists."""
    if n == 1:
        raise DomainError("zeta has a pole at s = 1")

    def compute():
        mp = ctx.mp
        if n == 0:
            return mp.mpf(-1) / 2
        if n < 0:
            return to_real(ctx, -bernoulli_number(1 - n) / (1 - n))
        if n % 2 == 0:
            b = bernoulli_number(n)
            twopi = 2 * const_pi(ctx)
            return abs(to_real(ctx, b / (2 * math.factorial(n)))) * twopi**n
        if n == 3:
            return const_zeta3(ctx)
        return _hurwitz_em(ctx, n, 1, 0)

    return ctx.cached(("zeta", n), compute)


def zeta(ctx: Context, s) -> Any:
    """Riemann zeta(s), s != 1."""
    if s == 1:
        raise DomainError("zeta has a pole at s = 1")
    if _is_int(s) and abs(int(s)) < 10**6:
        return zeta_int(ctx, int(s))
    return _hurwitz_em(ctx, s, 1, 0)


def zeta_sderiv(ctx: Context, s) -> Any:
    """zeta'(s).

    s = -1 uses zeta'(-1) = (1 - gamma - log 2pi)/12 + zeta'(2)/(2 pi^2);
    s = -2 uses zeta'(-2) = -zeta(3)/(4 pi^2); other s use the
    differentiated Euler--Maclaurin sum at a = 1.
    """
    if s == 1:
        raise DomainError("zeta' has a pole at s = 1")
    if s == -1:
        def compute():
            pi = const_pi(ctx)
            g = const_euler_gamma(ctx)
            return (1 - g - ctx.mp.log(2 * pi)) / 12 + zeta_sderiv(ctx, 2) / (2 * pi**2)

        return ctx.cached(("zeta'", -1), compute)
    if s == -2:
        return -const_zeta3(ctx) / (4 * const_pi(ctx) ** 2)
    if _is_int(s):
        return ctx.cached(("zeta'", int(s)), lambda: _hurwitz_em(ctx, int(s), 1, 1))
    return _hurwitz_em(ctx, s, 1, 1)


def dirichlet_eta(ctx: Context, s) -> Any:
    """eta(s) = sum (-1)^(n+1) n^-s = (1 - 2^(1-s)) zeta(s)."""
    if s == 1:
        return ctx.mp.log(2)
    return (1 - ctx.mp.mpf(2) ** (1 - to_real(ctx, s))) * zeta(ctx, s)


def dirichlet_lambda(ctx: Context, s) -> Any:
    """lambda(s) = sum (2n+1)^-s = (1 - 2^-s) zeta(s)."""
    return (1 - ctx.mp.mpf(2) ** (-to_real(ctx, s))) * zeta(ctx, s)


def dirichlet_beta(ctx: Context, s) -> Any:
    """beta(s) = sum (-1)^n (2n+1)^-s = 4^-s [zeta(s,1/4) - zeta(s,3/4)]."""
    if s == 1:
        return const_pi(ctx) / 4
    if s == 2:
        return const_catalan(ctx)
    q = ctx.mp.mpf(1) / 4
    s_r = to_real(ctx, s)
    return ctx.mp.mpf(4) ** (-s_r) * (hurwitz_zeta(ctx, s, q) - hurwitz_zeta(ctx, s, 3 * q))


# ---------------------------------------------------------------------------
# Gamma family
# ---------------------------------------------------------------------------

def _stirling_shift(ctx: Context, x) -> int:
    X = 0.4 * ctx.working_digits * LN10
    return max(0, math.ceil(X - float(x)))


def log_gamma(ctx: Context, x) -> Any:
    """log Gamma(x) for x > 0 (Stirling series after an upward shift)."""
    if x <= 0:
        raise DomainError("log_gamma needs x > 0")
    if x == 1 or x == 2:
        return ctx.mp.mpf(0)
    mp = ctx.mp
    with mp.extradps(5):
        x = to_real(ctx, x)
        m = _stirling_shift(ctx, x)
        prod = mp.mpf(1)
        for i in range(m):
            prod *= x + i
        y = x + m
        target = mp.mpf(10) ** (-(ctx.working_digits + 5))
        res = (y - mp.mpf(1) / 2) * mp.log(y) - y + mp.log(2 * const_pi(ctx)) / 2
        y2 = y * y
        ypow = y
        for k in range(1, 400):
            term = _bern_real(ctx, 2 * k) / (2 * k * (2 * k - 1) * ypow)
            res += term
            if abs(term) < target:
                break
            ypow *= y2
        if m:
            res -= mp.log(prod)
        return +res


def gamma(ctx: Context, x) -> Any:
    return ctx.mp.exp(log_gamma(ctx, x))


def digamma(ctx: Context, x) -> Any:
    if x <= 0:
        raise DomainError("digamma needs x > 0")
    mp = ctx.mp
    with mp.extradps(5):
        x = to_real(ctx, x)
        m = _stirling_shift(ctx, x)
        acc = mp.mpf(0)
        for i in range(m):
            acc += 1 / (x + i)
        y = x + m
        target = mp.mpf(10) ** (-(ctx.working_digits + 5))
        res = mp.log(y) - 1 / (2 * y)
        y2 = y * y
        ypow = y2
        for k in range(1, 400):
            term = _bern_real(ctx, 2 * k) / (2 * k * ypow)
            res -= term
            if abs(term) < target:
                break
            ypow *= y2
        return +(res - acc)


def polygamma(ctx: Context, k: int, x) -> Any:
    """psi^(k)(x); k = 0 is the digamma function."""
    if x <= 0:
        raise DomainError("polygamma needs x > 0")
    if k == 0:
        return digamma(ctx, x)
    sign = 1 if k % 2 else -1
    return sign * math.factorial(k) * hurwitz_zeta(ctx, k + 1, x)


def barnes_logG(ctx: Context, z) -> Any:
    """log G(z) for z > 0 (Barnes double gamma)."""
    if z <= 0:
        raise DomainError("barnes_logG needs z > 0")
    if z == 1 or z == 2:
        return ctx.mp.mpf(0)
    zr = to_real(ctx, z)
    if zr > 2:
        return barnes_logG(ctx, zr - 1) + log_gamma(ctx, zr - 1)
    if zr < 1:
        return barnes_logG(ctx, zr + 1) - log_gamma(ctx, zr)
    u = zr - 1
    return u * log_gamma(ctx, u) + zeta_sderiv(ctx, -1) - hurwitz_zeta_sderiv(ctx, -1, u)


def log_gamma3(ctx: Context, t) -> Any:
    """log Gamma_3(1 + t) for t in (0, 1] (triple gamma)."""
    if not 0 < t <= 1:
        raise DomainError("log_gamma3 needs t in (0, 1]")
    if t == 1:
        return ctx.mp.mpf(0)
    t = to_real(ctx, t)
    # 2 log Gamma_3(1+t) = zeta'(-2,t) - zeta'(-2) + (2t-1) log G(1+t) - t^2 log Gamma(t);
    # no cubic polynomial term: with one, Gamma_3(z+1) = G(z) Gamma_3(z) fails.
    val = (
        hurwitz_zeta_sderiv(ctx, -2, t)
        - zeta_sderiv(ctx, -2)
        + (2 * t - 1) * barnes_logG(ctx, 1 + t)
        - t**2 * log_gamma(ctx, t)
    )
    return val / 2


# ---------------------------------------------------------------------------
# Polylogarithm, Clausen functions, trigonometric power sums
# ---------------------------------------------------------------------------

def _harmonic_real(ctx: Context, n: int):
    return to_real(ctx, sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0)))


def _li_exp_series(ctx: Context, m: int, mu) -> Any:
    """Li_m(e^mu) for integer m >= 1 and |mu| < 2 pi (mu real or complex).

    Li_m(e^mu) = mu^(m-1)/(m-1)! [H_(m-1) - log(-mu)]
                 + sum_{k != m-1} zeta(m-k) mu^k / k!
    """
    mp = ctx.mp
    target = mp.mpf(10) ** (-(ctx.working_digits + 5))
    with mp.extradps(5):
        acc = mu ** (m - 1) / math.factorial(m - 1) * (_harmonic_real(ctx, m - 1) - mp.log(-mu))
        p = mp.mpf(1)  # mu^k / k!
        for k in range(0, 100000):
            if k > 0:
                p = p * mu / k
            if k == m - 1:
                continue
            z = zeta_int(ctx, m - k)
            if z == 0:
                continue
            term = z * p
            acc += term
            if k > m + 1 and abs(term) < target:
                break
        return acc


def _reduce_angle(ctx: Context, theta) -> Any:
    """Reduce to (-pi, pi]."""
    mp = ctx.mp
    theta = to_real(ctx, theta)
    twopi = 2 * const_pi(ctx)
    r = theta - twopi * mp.nint(theta / twopi)
    if r <= -const_pi(ctx):
        r += twopi
    return r


def trig_power_sum(ctx: Context, kind: str, s: int, theta) -> Any:
    """sum_{n>=1} cos(n theta)/n^s or sin(n theta)/n^s for integer s >= 1."""
    if kind not in ("cos", "sin"):
        raise ValueError("kind must be 'cos' or 'sin'")
    if not _is_int(s) or s < 1:
        raise DomainError("trig_power_sum needs an integer s >= 1")
    s = int(s)
    mp = ctx.mp
    th = _reduce_angle(ctx, theta)
    if th == 0:
        if kind == "sin":
            return mp.mpf(0)
        return zeta(ctx, s)
    if s == 1:
        if kind == "cos":
            return -mp.log(abs(2 * mp.sin(th / 2)))
        sgn = 1 if th > 0 else -1
        return (sgn * const_pi(ctx) - th) / 2
    val = _li_exp_series(ctx, s, mp.mpc(0, th))
    return +(val.real if kind == "cos" else val.imag)


def clausen(ctx: Context, m: int, theta) -> Any:
    """Cl_m(theta): sum sin(n theta)/n^m for even m, sum cos(n theta)/n^m for odd m."""
    if m < 1:
        raise DomainError("clausen needs m >= 1")
    return trig_power_sum(ctx, "sin" if m % 2 == 0 else "cos", m, theta)


def polylog(ctx: Context, m: int, x) -> Any:
    """Li_m(x) = sum x^n / n^m for |x| <= 1 and integer m >= 1."""
    mp = ctx.mp
    x = to_real(ctx, x)
    if abs(x) > 1:
        raise DomainError("polylog needs |x| <= 1")
    if m < 1:
        raise DomainError("polylog needs m >= 1")
    if x == 0:
        return mp.mpf(0)
    if x == 1:
        return zeta(ctx, m)
    if x == -1:
        return -dirichlet_eta(ctx, m)
    if m == 1:
        return -mp.log(1 - x)
    if x < 0 and x < -mp.mpf(1) / 2:
        return mp.mpf(2) ** (1 - m) * polylog(ctx, m, x * x) - polylog(ctx, m, -x)
    if abs(x) <= mp.mpf(1) / 2:
        target = mp.mpf(10) ** (-(ctx.working_digits + 5))
        acc = mp.mpf(0)
        p = mp.mpf(1)
        n = 0
        while True:
            n += 1
            p *= x
            term = p / mp.mpf(n) ** m
            acc += term
            if abs(term) < target:
                return acc
    return +_li_exp_series(ctx, m, mp.log(x))


def trig_zeta_sum(ctx: Context, kind: str, s, q: int) -> Any:
    """sum_{n>=1} trig(n pi/q)/n^s for s > 1 via Hurwitz zeta over residues mod 2q."""
    if s <= 1:
        raise DomainError("trig_zeta_sum needs s > 1")
    if q < 1:
        raise DomainError("q must be a positive integer")
    mp = ctx.mp
    period = 2 * q
    s_r = to_real(ctx, s)
    acc = mp.mpf(0)
    for r in range(1, period + 1):
        c = _exact_trig(ctx, kind, Fraction(r, q))
        if c == 0:
            continue
        acc += c * hurwitz_zeta(ctx, s, Fraction(r, period))
    return acc * mp.mpf(period) ** (-s_r)


def _exact_trig(ctx: Context, kind: str, t: Fraction) -> Any:
    """cos(t pi) or sin(t pi) for rational t, exact zeros at the obvious points."""
    mp = ctx.mp
    t2 = t % 2
    if kind == "sin":
        if t2.denominator == 1:
            return mp.mpf(0)
        if t2 == Fraction(1, 2):
            return mp.mpf(1)
        if t2 == Fraction(3, 2):
            return mp.mpf(-1)
        return mp.sin(to_real(ctx, t2) * const_pi(ctx))
    if t2 == 0:
        return mp.mpf(1)
    if t2 == 1:
        return mp.mpf(-1)
    if t2.denominator == 2:
        return mp.mpf(0)
    return mp.cos(to_real(ctx, t2) * const_pi(ctx))


def inverse_tangent_integral(ctx: Context, x) -> Any:
    """phi(x) = int_0^x atan(t)/t dt = sum (-1)^n x^(2n+1)/(2n+1)^2 for |x| <= 1."""
    mp = ctx.mp
    x = to_real(ctx, x)
    if x == 0:
        return mp.mpf(0)
    if x < 0:
        return -inverse_tangent_integral(ctx, -x)
    if x == 1:
        return const_catalan(ctx)
    if x > 1:
        # phi(x) - phi(1/x) = (pi/2) log x
        return inverse_tangent_integral(ctx, 1 / x) + const_pi(ctx) / 2 * mp.log(x)
    if x <= mp.mpf(6) / 10:
        target = mp.mpf(10) ** (-(ctx.working_digits + 5))
        acc = mp.mpf(0)
        p = x
        x2 = x * x
        n = 0
        while True:
            term = p / (2 * n + 1) ** 2
            acc += term if n % 2 == 0 else -term
            if term < target:
                return acc
            p *= x2
            n += 1
    # phi(x) = Im Li_2(i x)
    mu = mp.mpc(mp.log(x), const_pi(ctx) / 2)
    return +_li_exp_series(ctx, 2, mu).imag


# ---------------------------------------------------------------------------
# Sine and cosine integrals
# ---------------------------------------------------------------------------

def sici_crossover(ctx: Context) -> float:
    """X0: Taylor series below, auxiliary-function route above."""
    return 1.5 * ctx.working_digits


def _sici_taylor(ctx: Context, x) -> Tuple[Any, Any]:
    mp = ctx.mp
    extra = math.ceil(0.4343 * float(x)) + 5
    with mp.extradps(extra):
        x = to_real(ctx, x)
        target = mp.mpf(10) ** (-(ctx.working_digits + 5))
        x2 = x * x
        # Si: sum (-1)^n x^(2n+1) / ((2n+1)(2n+1)!)
        si_acc = mp.mpf(0)
        p = x  # x^(2n+1)/(2n+1)!
        n = 0
        while True:
            term = p / (2 * n + 1)
            si_acc += -term if n % 2 else term
            if abs(term) < target and n > 0:
                break
            n += 1
            p = p * x2 / ((2 * n) * (2 * n + 1))
        # Ci: gamma + log x + sum_{n>=1} (-1)^n x^(2n) / (2n (2n)!)
        ci_acc = mp.mpf(0)
        p = mp.mpf(1)
        n = 0
        while True:
            n += 1
            p = p * x2 / ((2 * n - 1) * (2 * n))
            term = p / (2 * n)
            ci_acc += -term if n % 2 else term
            if abs(term) < target:
                break
        ci_acc += const_euler_gamma(ctx) + mp.log(x)
        return +si_acc, +ci_acc


def _aux_asymptotic(ctx: Context, x, which: str):
    """Optimally truncated f ~ sum (-1)^j (2j)!/x^(2j+1), g ~ sum (-1)^j (2j+1)!/x^(2j+2), or None."""
    mp = ctx.mp
    target = mp.mpf(10) ** (-(ctx.working_digits + 2))
    m = 1 if which == "f" else 2
    term = mp.mpf(1) / x if which == "f" else mp.mpf(1) / (x * x)
    acc = mp.mpf(0)
    while True:
        acc += term
        if abs(term) < target * abs(acc):
            return acc
        nxt = -term * m * (m + 1) / (x * x)
        if abs(nxt) >= abs(term):
            return None
        term = nxt
        m += 2


def _aux_quad(ctx: Context, x, which: str):
    from .quadkit import integrate_semi_infinite

    mp = ctx.mp
    x = to_real(ctx, x)
    if x > ctx.working_digits * 2.31 + 10:  # past ln(10) * digits the divergent series suffices
        v = _aux_asymptotic(ctx, x, which)
        if v is not None:
            return v
    ix2 = 1 / (x * x)
    if which == "f":
        res = integrate_semi_infinite(ctx, lambda v: mp.exp(-v) / (1 + v * v * ix2), 0)
        return res.value / x
    res = integrate_semi_infinite(ctx, lambda v: v * mp.exp(-v) / (1 + v * v * ix2), 0)
    return res.value * ix2


def aux_f(ctx: Context, x) -> Any:
    """f(x) = int_0^inf exp(-x u)/(1+u^2) du = sin x Ci(x) - cos x si(x)."""
    if x <= 0:
        raise DomainError("aux_f needs x > 0")
    if x > sici_crossover(ctx):
        return _aux_quad(ctx, x, "f")
    mp = ctx.mp
    x = to_real(ctx, x)
    s, c = _sici_taylor(ctx, x)
    return mp.sin(x) * c - mp.cos(x) * (s - const_pi(ctx) / 2)


def aux_g(ctx: Context, x) -> Any:
    """g(x) = int_0^inf u exp(-x u)/(1+u^2) du = -cos x Ci(x) - sin x si(x)."""
    if x <= 0:
        raise DomainError("aux_g needs x > 0")
    if x > sici_crossover(ctx):
        return _aux_quad(ctx, x, "g")
    mp = ctx.mp
    x = to_real(ctx, x)
    s, c = _sici_taylor(ctx, x)
    return -mp.cos(x) * c - mp.sin(x) * (s - const_pi(ctx) / 2)


def si_shifted(ctx: Context, x) -> Any:
    """si(x) = Si(x) - pi/2."""
    mp = ctx.mp
    x = to_real(ctx, x)
    if x > sici_crossover(ctx):
        return -aux_f(ctx, x) * mp.cos(x) - aux_g(ctx, x) * mp.sin(x)
    return sin_integral(ctx, x) - const_pi(ctx) / 2


def sin_integral(ctx: Context, x) -> Any:
    """Si(x) = int_0^x sin t / t dt (odd in x)."""
    mp = ctx.mp
    x = to_real(ctx, x)
    if x == 0:
        return mp.mpf(0)
    if x < 0:
        return -sin_integral(ctx, -x)
    if x <= sici_crossover(ctx):
        return _sici_taylor(ctx, x)[0]
    return const_pi(ctx) / 2 + si_shifted(ctx, x)


def cos_integral(ctx: Context, x) -> Any:
    """Ci(x) = gamma + log x + int_0^x (cos t - 1)/t dt, x > 0."""
    if x <= 0:
        raise DomainError("cos_integral needs x > 0")
    mp = ctx.mp
    x = to_real(ctx, x)
    if x <= sici_crossover(ctx):
        return _sici_taylor(ctx, x)[1]
    return aux_f(ctx, x) * mp.sin(x) - aux_g(ctx, x) * mp.cos(x)


def sici_fg(ctx: Context, x) -> Tuple[Any, Any, Any, Any]:
    """(si(x), Ci(x), f(x), g(x)) for x > 0 with one evaluation route."""
    if x <= 0:
        raise DomainError("sici_fg needs x > 0")
    mp = ctx.mp
    x = to_real(ctx, x)
    c, s = mp.cos(x), mp.sin(x)
    if x > sici_crossover(ctx):
        f = _aux_quad(ctx, x, "f")
        g = _aux_quad(ctx, x, "g")
        return -f * c - g * s, f * s - g * c, f, g
    si_, ci_ = _sici_taylor(ctx, x)
    si_ = si_ - const_pi(ctx) / 2
    return si_, ci_, s * ci_ - c * si_, -c * ci_ - s * si_
