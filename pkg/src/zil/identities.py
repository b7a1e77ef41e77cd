"""The built-in identity catalog.

Each entry is code: two evaluators built from the specfun, sumkit and
quadkit primitives, or for adjudication entries a set of oracles plus the
competing closed forms.  Evaluators receive a fresh ``Kit`` (and the sample
parameter, if the entry has any).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from math import comb, factorial
from typing import Any, Callable

from . import specfun as sf
from .catalog import Claim, Identity
from .numkernel import Context, constants
from .quadkit import EvalResult, dehaan_closed_form, integrate_fourier_coeff, quad, quad_panels
from .sumkit import (ALTERNATING, ODD_ONLY, ONE, TermGenerator, double_factorial_ratio,
                     euler_binomial_double_sum, harmonic_table, sum_alternating, sum_series,
                     sum_sici_weighted, sum_trig_series)


@dataclass(frozen=True)
class PiMul:
    """A sample point given as a rational multiple of pi."""

    c: F

    def __str__(self) -> str:
        return f"{self.c}*pi"


class Kit:
    """Evaluation helpers bound to one context; collects error estimates."""

    def __init__(self, ctx: Context):
        self.ctx = ctx
        self.mp = ctx.mp
        c = constants(ctx)
        self.pi, self.gamma, self.G = c.pi, c.euler_gamma, c.catalan_G
        self.z3, self.logA, self.ln2 = c.zeta3, c.log_glaisher_A, c.log2
        self.err = ctx.mp.mpf(0)

    # plumbing
    def _take(self, r: EvalResult):
        self.err += abs(r.err_estimate)
        return r.value

    def r(self, x):
        """Exact rationals and PiMul points to working reals."""
        if isinstance(x, PiMul):
            return self.pi * self.r(x.c)
        if isinstance(x, F):
            return self.mp.mpf(x.numerator) / x.denominator
        return self.mp.mpf(x)

    # quadrature
    def q(self, fn, a, b, offsets=False):
        hints = ("offsets",) if offsets else ()
        return self._take(quad(self.ctx, fn, self.r(a), self.r(b), hints))

    def qp(self, fn, points):
        return self._take(quad_panels(self.ctx, fn, [self.r(p) for p in points]))

    def fourier(self, w, n, kind):
        return self._take(integrate_fourier_coeff(self.ctx, w, n, kind))

    # series
    def geo(self, term, rate, start=1):
        return self._take(sum_series(self.ctx, TermGenerator(term, start, "geometric", rate)))

    def pw(self, term, p, start=1):
        return self._take(sum_series(self.ctx, TermGenerator(term, start, "power", p)))

    def alt(self, term, start=1):
        return self._take(sum_alternating(self.ctx, TermGenerator(term, start, "alternating")))

    def trig(self, amp, theta, kind="cos", start=1):
        return self._take(sum_trig_series(self.ctx, amp, self.r(theta), kind, start))

    def sici(self, comps, k, c, weight=ONE):
        return self._take(sum_sici_weighted(self.ctx, comps, k, c, weight))

    # special functions
    def zeta(self, s):
        return sf.zeta_int(self.ctx, s) if isinstance(s, int) else sf.zeta(self.ctx, self.r(s))

    def hz(self, s, a):
        return sf.hurwitz_zeta(self.ctx, s, a)

    def zd(self, s):
        return sf.zeta_sderiv(self.ctx, s)

    def hzd(self, s, a):
        return sf.hurwitz_zeta_sderiv(self.ctx, s, a)

    def eta(self, s):
        return sf.dirichlet_eta(self.ctx, s)

    def beta(self, s):
        return sf.dirichlet_beta(self.ctx, s)

    def lg(self, x):
        return sf.log_gamma(self.ctx, x)

    def gam(self, x):
        return sf.gamma(self.ctx, x)

    def psi(self, k, x):
        return sf.polygamma(self.ctx, k, x)

    def logG(self, z):
        return sf.barnes_logG(self.ctx, z)

    def cl(self, m, theta):
        return sf.clausen(self.ctx, m, self.r(theta))

    def li(self, m, x):
        return sf.polylog(self.ctx, m, x)

    def ti(self, x):
        return sf.inverse_tangent_integral(self.ctx, x)

    def Si(self, x):
        return sf.sin_integral(self.ctx, x)

    def Ci(self, x):
        return sf.cos_integral(self.ctx, x)

    def si(self, x):
        return sf.si_shifted(self.ctx, x)

    def B(self, n, x):
        return sf.poly_eval(self.ctx, sf.bernoulli_poly(n), x)

    def E(self, n, x):
        return sf.poly_eval(self.ctx, sf.euler_poly(n), x)

    def harm(self, n_max=400):
        return harmonic_table(self.ctx, n_max)


Fn = Callable[..., Any]
ENTRIES: list = []


def _e(id_, anchor, desc, lhs: Fn, rhs: Fn, params=(), tol="standard", status="proven", exact=False):
    section = "S" + id_.lstrip("EAC-").split(".")[0]
    ENTRIES.append(Identity(id_, section, status, anchor, desc, lhs, rhs, tuple(params), tol, exact=exact))


def _adj(id_, anchor, desc, oracles, claims):
    section = "S" + id_.lstrip("EAC-").split(".")[0]
    ENTRIES.append(Identity(id_, section, "adjudicate", anchor, desc, oracles=tuple(oracles),
                            claims=tuple(claims)))


def _fr(x: F):
    return x


Q = F(1, 4)
T = F(1, 3)
H = F(1, 2)


# ---------------------------------------------------------------------------
# S5
# ---------------------------------------------------------------------------

_e("E5.9", "(5.9)", "zeta(2n+1) from B_{2n+1}(x) cot(pi x) on [0, 1/2]",
   lambda k, n: k.zeta(2 * n + 1),
   lambda k, n: (-1) ** (n + 1) * (2 * k.pi) ** (2 * n + 1) / factorial(2 * n + 1)
   * k.q(lambda x: k.B(2 * n + 1, x) * k.mp.cot(k.pi * x), 0, H),
   params=(1, 2, 3))

_e("E5.11", "(5.11), (5.8)", "Euler binomial double sum equals 2 zeta(s)",
   lambda k, s: k._take(euler_binomial_double_sum(k.ctx, s)),
   lambda k, s: 2 * k.zeta(s),
   params=(2, 3, 4))


# ---------------------------------------------------------------------------
# S6: elementary series
# ---------------------------------------------------------------------------

_e("E6.16", "(6.16)", "eta(2) = pi^2/12",
   lambda k: k.alt(lambda n: k.mp.mpf((-1) ** (n + 1)) / n ** 2),
   lambda k: k.pi ** 2 / 12, tol="tight")

_e("E6.18", "(6.18)", "Leibniz series",
   lambda k: k.pi / 4,
   lambda k: k.alt(lambda n: k.mp.mpf((-1) ** n) / (2 * n + 1), start=0), tol="tight")

_e("E6.19", "(6.19)", "beta(3) = pi^3/32",
   lambda k: k.alt(lambda n: k.mp.mpf((-1) ** n) / (2 * n + 1) ** 3, start=0),
   lambda k: k.pi ** 3 / 32, tol="tight")

_e("E6.20a", "(6.20a)", "int_0^{pi/2} x^2 cot x",
   lambda k: k.q(lambda x: x ** 2 * k.mp.cot(x), 0, PiMul(H)),
   lambda k: -F(7, 8) * k.z3 + k.pi ** 2 / 4 * k.ln2)

_e("E6.22a", "(6.22a)", "sum (-1)^(n+1) cos(nt)/n = log(2 cos(t/2))",
   lambda k, t: k.trig(lambda n: -1 / n, k.r(t) + k.pi, "cos"),
   lambda k, t: k.mp.log(2 * k.mp.cos(k.r(t) / 2)),
   params=(PiMul(Q), 1.0))

_e("E6.24", "(6.24)", "sum sin(n pi/4)/n = 3 pi/8",
   lambda k: k.trig(lambda n: 1 / n, PiMul(Q), "sin"),
   lambda k: 3 * k.pi / 8)

_e("E6.25", "(6.25)", "sum cos(n pi/4)/n^2 = 11 pi^2/192",
   lambda k: k.trig(lambda n: 1 / n ** 2, PiMul(Q), "cos"),
   lambda k: 11 * k.pi ** 2 / 192)


# ---------------------------------------------------------------------------
# S6: x / sin x family
# ---------------------------------------------------------------------------

def _x_over_sin(k, b):
    return k.q(lambda x: x / k.mp.sin(x) if x else k.mp.mpf(1), 0, b)


_e("E6.28", "(6.28)", "int_0^{pi/2} x/sin x = 2G",
   lambda k: _x_over_sin(k, PiMul(H)),
   lambda k: 2 * k.G)

_e("E6.28a", "(6.28a)", "int_0^{1/2} Gamma(1+u) Gamma(1-u) du = 2G/pi",
   lambda k: k.q(lambda u: k.gam(1 + u) * k.gam(1 - u), 0, H),
   lambda k: 2 * k.G / k.pi)

_e("E6.29", "(6.29)", "int_0^{pi/2} x^2/sin x",
   lambda k: k.q(lambda x: x ** 2 / k.mp.sin(x), 0, PiMul(H)),
   lambda k: 2 * k.pi * k.G - F(7, 2) * k.z3)

_e("E6.30", "(6.30)", "int_0^{pi/2} x(pi-x)/sin x = 7/2 zeta(3)",
   lambda k: k.q(lambda x: x * (k.pi - x) / k.mp.sin(x), 0, PiMul(H)),
   lambda k: F(7, 2) * k.z3)

def _beta_odd_series(k, shift):
    # sum_{j>=0} beta(2j+1)/((2j+1+shift)(2j+2+shift)); beta - 1 decays like 3^-(2j+1)
    head = k.ln2 if shift == 0 else 1 - k.ln2
    return head + k.geo(lambda j: (k.beta(2 * j + 1) - 1) / ((2 * j + 1 + shift) * (2 * j + 2 + shift)),
                        F(1, 9), start=0)


_e("E6.30ga", "(6.30ga)", "G as a series in beta(2j+1)",
   lambda k: k.G,
   lambda k: k.pi / 2 * _beta_odd_series(k, 0))

_e("E6.30i", "(6.30i)", "7/8 zeta(3) as a series in beta(2j+1)",
   lambda k: (k.pi / 2) ** 2 * _beta_odd_series(k, 1),
   lambda k: F(7, 8) * k.z3)


_adj("A-6.30i", "(6.30i), (6.30h)", "(pi/2)^2 sum beta(2j+1)/((2j+2)(2j+3))",
     [("main", "direct sum", lambda k: (k.pi / 2) ** 2 * _beta_odd_series(k, 1))],
     [Claim("7/8 zeta(3)", lambda k: F(7, 8) * k.z3),
      Claim("7/4 zeta(3) - pi G/2", lambda k: F(7, 4) * k.z3 - k.pi * k.G / 2, "derived")])


def _odd_harmonic_alt(k):
    h = k.harm()
    return 2 * k.alt(lambda n: (-1) ** (n - 1) * h.odd(n) / n ** 2)


_e("E6.30q", "(6.30q)", "alternating odd-harmonic series",
   _odd_harmonic_alt,
   lambda k: 2 * k.pi * k.G - F(7, 2) * k.z3)

_e("E6.30y", "(6.30y)", "sum with sign pattern ++-- over odd squares",
   lambda k: (k.hz(2, F(1, 8)) + k.hz(2, F(3, 8)) - k.hz(2, F(5, 8)) - k.hz(2, F(7, 8))) / 64,
   lambda k: k.mp.sqrt(2) * k.ti(k.mp.sqrt(2) - 1) + k.pi / (4 * k.mp.sqrt(2)) * k.mp.log(1 + k.mp.sqrt(2)))

_e("E6.30-Ramanujan-Hardy", "(6.30-Ramanujan-Hardy)", "inverse tangent integral at 1 and 2 - sqrt 3",
   lambda k: F(2, 3) * k.ti(1) - k.ti(2 - k.mp.sqrt(3)),
   lambda k: k.pi / 12 * k.mp.log(2 + k.mp.sqrt(3)))

_adj("A-6.30w", "(6.30w), (6.30x)", "value of the inverse tangent integral at 1",
     [("main", "int_0^1 arctan(t)/t dt", lambda k: k.q(lambda t: k.mp.atan(t) / t, 0, 1)),
      ("halfangle", "int_0^{pi/2} y/sin y dy", lambda k: _x_over_sin(k, PiMul(H)))],
     [Claim("phi(1) = 2G", lambda k: 2 * k.G),
      Claim("phi(1) = G", lambda k: k.G, "corrected"),
      Claim("series sum (-1)^n/(2n+1)^2", lambda k: k.ti(1), "derived"),
      Claim("int_0^{pi/2} y/sin y = 2G", lambda k: 2 * k.G, "printed", "halfangle")])

_adj("A-6.30-cho", "(6.30-cho)", "int_0^{pi/3} x/sin x",
     [("main", "quadrature", lambda k: _x_over_sin(k, PiMul(T)))],
     [Claim("-pi^2/6 log 3 ... form",
            lambda k: -k.pi ** 2 / 6 * k.mp.log(3) - k.mp.sqrt(3) * k.pi ** 2 / 9
            + k.mp.sqrt(3) / 18 * k.hz(2, F(1, 6))),
      Claim("-pi/6 log 3 - sqrt(3) pi^2/9 + sqrt(3)/18 zeta(2, 1/6)",
            lambda k: -k.pi / 6 * k.mp.log(3) - k.mp.sqrt(3) * k.pi ** 2 / 9
            + k.mp.sqrt(3) / 18 * k.hz(2, F(1, 6)), "corrected"),
      Claim("t log tan(t/2) + 2 Cl2(t) - Cl2(2t)/2",
            lambda k: k.pi / 3 * k.mp.log(k.mp.tan(k.pi / 6)) + 2 * k.cl(2, PiMul(T))
            - k.cl(2, PiMul(F(2, 3))) / 2, "derived")])


# ---------------------------------------------------------------------------
# S6: zeta(2n+1) as integrals of Bernoulli and Euler polynomials
# ---------------------------------------------------------------------------

def _fac(n):
    return factorial(n)


_e("E6.31", "(6.31)", "zeta(2n+1) from B_{2n+1} cot(pi x), half interval",
   lambda k, n: k.zeta(2 * n + 1),
   lambda k, n: (-1) ** (n + 1) * (2 * k.pi) ** (2 * n + 1) / _fac(2 * n + 1)
   * k.q(lambda x: k.B(2 * n + 1, x) * k.mp.cot(k.pi * x), 0, H),
   params=(1, 2))

_e("E6.32", "(6.32)", "zeta(2n+1) from B_{2n+1} tan(pi x)",
   lambda k, n: k.zeta(2 * n + 1),
   lambda k, n: (-1) ** (n + 1) * (2 * k.pi) ** (2 * n + 1) / ((1 - k.mp.mpf(2) ** (-2 * n)) * _fac(2 * n + 1))
   * k.q(lambda x, da, db: k.B(2 * n + 1, x) * k.mp.cot(k.pi * db), 0, H, offsets=True),
   params=(1, 2))

_e("E6.33", "(6.33)", "zeta(2n+1) from E_{2n} csc(pi x)",
   lambda k, n: k.zeta(2 * n + 1),
   lambda k, n: (-1) ** n * k.pi ** (2 * n + 1) / (2 * (1 - k.mp.mpf(2) ** (-(2 * n + 1))) * _fac(2 * n))
   * k.q(lambda x: k.E(2 * n, x) / k.mp.sin(k.pi * x), 0, H),
   params=(1, 2))

_e("E6.34", "(6.34)", "int_0^1 B_{2n}(x) log sin(pi x)",
   lambda k, n: k.q(lambda x, da, db: k.B(2 * n, x) * k.mp.log(k.mp.sin(k.pi * min(da, db))), 0, 1, offsets=True),
   lambda k, n: (-1) ** n * _fac(2 * n) * k.zeta(2 * n + 1) / (2 * k.pi) ** (2 * n),
   params=(1, 2))

_e("E6.35", "(6.35)", "int_0^1 B_{2n+1}(x) log sin(pi x) = 0",
   lambda k, n: k.q(lambda x, da, db: k.B(2 * n + 1, x) * k.mp.log(k.mp.sin(k.pi * min(da, db))), 0, 1, offsets=True),
   lambda k, n: k.mp.mpf(0),
   params=(1, 2))

_e("E6.36", "(6.36)", "zeta(2n+1) from B_{2n+1} cot(pi x/2)",
   lambda k, n: k.zeta(2 * n + 1),
   lambda k, n: (-1) ** (n + 1) * (2 * k.pi) ** (2 * n + 1) / (2 * _fac(2 * n + 1))
   * k.q(lambda x: k.B(2 * n + 1, x) * k.mp.cot(k.pi * x / 2), 0, 1),
   params=(1, 2))

_e("E6.37", "(6.37)", "zeta(2n+1) from B_{2n+1} tan(pi x/2)",
   lambda k, n: k.zeta(2 * n + 1),
   lambda k, n: (-1) ** n * (2 * k.pi) ** (2 * n + 1) / (2 * _fac(2 * n + 1))
   * k.q(lambda x, da, db: k.B(2 * n + 1, x) * k.mp.cot(k.pi * db / 2), 0, 1, offsets=True),
   params=(1, 2))

_e("E6.38", "(6.38)", "zeta(2n+1) from E_{2n} cot(pi x/2)",
   lambda k, n: k.zeta(2 * n + 1),
   lambda k, n: (-1) ** n * (2 * k.pi) ** (2 * n + 1) / (4 * (2 ** (2 * n + 1) - 1) * _fac(2 * n))
   * k.q(lambda x: k.E(2 * n, x) * k.mp.cot(k.pi * x / 2), 0, 1),
   params=(1, 2))

_e("E6.39", "(6.39)", "zeta(2n+1) from E_{2n} tan(pi x/2)",
   lambda k, n: k.zeta(2 * n + 1),
   lambda k, n: (-1) ** n * (2 * k.pi) ** (2 * n + 1) / (4 * (2 ** (2 * n + 1) - 1) * _fac(2 * n))
   * k.q(lambda x, da, db: k.E(2 * n, x) * k.mp.cot(k.pi * db / 2), 0, 1, offsets=True),
   params=(1, 2))


# ---------------------------------------------------------------------------
# S6: series in zeta(2n); Barnes G and Clausen values
# ---------------------------------------------------------------------------

def _z2n_series(k, coef, x2, start=1):
    """sum_{n>=start} zeta(2n) * coef(n) * x2^n, x2 < 1."""
    x2 = k.r(x2)
    return k.geo(lambda n: k.zeta(2 * n) * coef(n) * x2 ** n, x2, start)


_e("E6.48", "(6.48)", "pi x cot(pi x) as a zeta(2n) series",
   lambda k, x: k.pi * k.r(x) * k.mp.cot(k.pi * k.r(x)),
   lambda k, x: -2 * _z2n_series(k, lambda n: 1, k.r(x) ** 2, start=0),
   params=(Q, F(3, 10)))

_adj("A-6.48a", "(6.48a), (6.48b)", "sum zeta(2n)/2^(n+1)",
     [("main", "direct sum_{n>=1} zeta(2n)/2^(n+1)", lambda k: _z2n_series(k, lambda n: H, H)),
      ("quarter", "direct sum_{n>=1} zeta(2n)/4^n", lambda k: _z2n_series(k, lambda n: 1, Q))],
     [Claim("Q1 = 1", lambda k: k.mp.mpf(1)),
      Claim("(1 - (pi/sqrt 2) cot(pi/sqrt 2))/4",
            lambda k: (1 - k.pi / k.mp.sqrt(2) * k.mp.cot(k.pi / k.mp.sqrt(2))) / 4, "derived"),
      Claim("sum zeta(2n)/4^n = 1/2", lambda k: k.r(H), "derived", "quarter")])

_e("E6.52", "(6.52)", "sum zeta(2n)/((2n+1) 2^(2n+1)) = -log(2)/4",
   lambda k: _z2n_series(k, lambda n: F(1, 2 * (2 * n + 1)), Q, start=0),
   lambda k: -k.ln2 / 4)

_e("E6.54", "(6.54)", "sum beta(2n+1)/((2n+1) 4^n) = log(1+sqrt 2)",
   lambda k: k.geo(lambda n: k.beta(2 * n + 1) / ((2 * n + 1) * k.mp.mpf(4) ** n), Q, start=0),
   lambda k: k.mp.log(1 + k.mp.sqrt(2)))


def _z2n_odd_power(k, z):
    z = k.r(z)
    return z * _z2n_series(k, lambda n: F(1, 2 * n + 1), z ** 2)


_e("E6.63", "(6.63)", "sum zeta(2n) z^(2n+1)/(2n+1) via Barnes G",
   _z2n_odd_power,
   lambda k, z: ((1 - k.mp.log(2 * k.pi)) * k.r(z) + k.logG(1 + z) - k.logG(1 - z)) / 2,
   params=(Q, T))

_e("E6.65", "(6.65)", "sum zeta(2n) z^(2n+1)/(2n+1) via Clausen",
   _z2n_odd_power,
   lambda k, z: k.r(z) / 2 - k.r(z) / 2 * k.mp.log(2 * k.mp.sin(k.pi * k.r(z))) - k.cl(2, 2 * k.pi * k.r(z)) / (4 * k.pi),
   params=(Q, T))

_e("E6.69b", "(6.69b)", "log G(1+z)/G(1-z) as an integral of t cot t",
   lambda k, z: k.logG(1 + z) - k.logG(1 - z),
   lambda k, z: k.r(z) * k.mp.log(2 * k.pi)
   - k.q(lambda t: k.pi * t * k.mp.cot(k.pi * t) if t else k.mp.mpf(1), 0, z),
   params=(Q,))

_e("E6.69c", "(6.69c)", "sum sin(2 pi n t)/n^2 via Barnes G",
   lambda k, t: k.trig(lambda n: 1 / n ** 2, 2 * k.pi * k.r(t), "sin"),
   lambda k, t: -2 * k.pi * k.r(t) * k.mp.log(k.mp.sin(k.pi * k.r(t)) / k.pi)
   - 2 * k.pi * (k.logG(1 + t) - k.logG(1 - t)),
   params=(Q,))

_e("E6.69e", "(6.69e)", "log G(5/4)/G(3/4)",
   lambda k: k.logG(F(5, 4)) - k.logG(F(3, 4)),
   lambda k: k.ln2 / 8 + k.mp.log(k.pi) / 4 - k.G / (2 * k.pi), tol="tight")


def _a669_common(k):
    s2 = k.mp.sqrt(2)
    return (1 - s2) * k.G / 8 + (s2 * k.hz(2, F(1, 8)) - 2 * (s2 + 1) * k.pi ** 2) / 64


_adj("A-6.69m", "(6.69m), (6.69n)", "int_0^{pi/8} x cot x",
     [("main", "quadrature", lambda k: k.q(lambda x: x * k.mp.cot(x) if x else k.mp.mpf(1), 0, PiMul(F(1, 8))))],
     [Claim("pi/16 log[(2 - sqrt 2) pi] + ...",
            lambda k: k.pi / 16 * k.mp.log((2 - k.mp.sqrt(2)) * k.pi) + _a669_common(k)),
      Claim("pi/16 log(2 - sqrt 2) + ...",
            lambda k: k.pi / 16 * k.mp.log(2 - k.mp.sqrt(2)) + _a669_common(k), "corrected"),
      Claim("pi/16 log(2 - sqrt 2) + Cl2(pi/4)/2",
            lambda k: k.pi / 16 * k.mp.log(2 - k.mp.sqrt(2)) + k.cl(2, PiMul(Q)) / 2, "derived"),
      Claim("pi/16 log(2 - sqrt 2) + (1 - 2 sqrt 2) G/8 + ...",
            lambda k: k.pi / 16 * k.mp.log(2 - k.mp.sqrt(2)) + _a669_common(k) - k.mp.sqrt(2) * k.G / 8,
            "derived")])

_e("E6.69o", "(6.69o)", "int_0^{pi/4} x^2 cot x",
   lambda k: k.q(lambda x: x ** 2 * k.mp.cot(x) if x else k.mp.mpf(0), 0, PiMul(Q)),
   lambda k: -F(35, 64) * k.z3 + k.pi ** 2 / 32 * k.ln2 + k.pi * k.G / 4)

_e("E6.69t", "(6.69t)", "int_0^{pi/6} x^2 cot x",
   lambda k: k.q(lambda x: x ** 2 * k.mp.cot(x) if x else k.mp.mpf(0), 0, PiMul(F(1, 6))),
   lambda k: -k.z3 / 3 + k.pi ** 2 / 36 * k.mp.log(2 * k.mp.sin(k.pi / 6))
   + k.mp.sqrt(3) / 6 * k.pi * (-F(4, 9) * k.zeta(2) + (k.hz(2, F(1, 6)) + k.hz(2, T)) / 36))

_e("E6.69v", "(6.69v)", "difference of Hurwitz zeta derivatives at -1",
   lambda k, x: k.hzd(-1, x) - k.hzd(-1, 1 - x),
   lambda k, x: k.trig(lambda n: 1 / n ** 2, 2 * k.pi * k.r(x), "sin") / (2 * k.pi),
   params=(T,))

_e("E6.71", "(6.71)", "zeta(3) as a zeta(2n) series",
   lambda k: k.z3,
   lambda k: -4 * k.pi ** 2 / 7 * _z2n_series(k, lambda n: F(1, (2 * n + 1) * (2 * n + 2)), Q, start=0))

_e("E6.79", "(6.79)", "sum zeta(2n)/((n+1) 4^n)",
   lambda k: _z2n_series(k, lambda n: F(1, n + 1), Q),
   lambda k: H + 7 * k.z3 / (2 * k.pi ** 2) - k.ln2)

_e("E6.84", "(6.84)", "-zeta'(-2) = zeta(3)/(4 pi^2)",
   lambda k: -k.zd(-2),
   lambda k: k.z3 / (4 * k.pi ** 2), tol="tight")


# ---------------------------------------------------------------------------
# S6: Si / Ci series
# ---------------------------------------------------------------------------

_e("E6.90f", "(6.90f)", "sum zeta(2n)/((2n+1)^2 4^n) via Si(n pi)",
   lambda k: _z2n_series(k, lambda n: F(1, (2 * n + 1) ** 2), Q),
   lambda k: (1 - k.sici("Si", 2, 1) / k.pi) / 2)

_e("E6.90g", "(6.90g)", "sum Si(n pi)/n^2 as a log-log integral",
   lambda k: k.sici("Si", 2, 1),
   lambda k: k.q(lambda t, da, db: k.mp.log(t) * k.mp.log(2 * k.mp.sin(t / 2)) if t else k.mp.mpf(0),
                 0, PiMul(F(1)), offsets=True))

_e("E6.91", "(6.91)", "sum Si(n pi)/n^3 = 5 pi^3/72",
   lambda k: k.sici("Si", 3, 1),
   lambda k: 5 * k.pi ** 3 / 72)

_e("E6.92", "(6.92)", "sum zeta(2n)/(n(2n+1) 4^n) = log(pi) - 1",
   lambda k: _z2n_series(k, lambda n: F(1, n * (2 * n + 1)), Q),
   lambda k: k.mp.log(k.pi) - 1)

_e("E6.93", "(6.93)", "Hurwitz analogue of the previous series",
   lambda k, z: k.geo(lambda n: k.hz(2 * n, z) / (n * (2 * n + 1) * k.mp.mpf(4) ** n), 1 / (4 * k.r(z) ** 2)),
   lambda k, z: 2 * (k.r(z) - H) * k.mp.log(k.r(z) - H) - 2 * (k.r(z) - H) + k.mp.log(2 * k.pi) - 2 * k.lg(z),
   params=(2,))

_e("E6.94a", "(6.94a)", "x/2 from an alternating si(nx)/n series",
   lambda k, x: k.r(x) / 2,
   lambda k, x: k.pi / 2 * k.ln2 - k.sici("si", 1, x.c if isinstance(x, PiMul) else k.r(x) / k.pi, ALTERNATING),
   params=(PiMul(H), 2.0), tol="slow")

_e("E6.94ai", "(6.94ai)", "sum (-1)^n Si(2n pi)/n = -pi as printed",
   lambda k: k.sici("Si", 1, 2, ALTERNATING),
   lambda k: -k.pi)

_adj("A-6.94ai", "(6.94ai), (6.94a)", "sum (-1)^n Si(2n pi)/n",
     [("main", "direct sum", lambda k: k.sici("Si", 1, 2, ALTERNATING))],
     [Claim("-pi", lambda k: -k.pi),
      Claim("pi log 2 - pi", lambda k: k.pi * k.ln2 - k.pi, "derived")])

_e("E6.94ji", "(6.94ji)", "cosine series in si(2n pi)",
   lambda k, x: k.mp.log(k.r(x)) + k.mp.log(1 - k.r(x)) - k.mp.log(2 * k.mp.sin(k.pi * k.r(x))) + 2,
   lambda k, x: -2 / k.pi * k.sici(((1, "cos", 2 * x, "si"),), 1, 2),
   params=(T,))

_e("E6.94jii", "(6.94jii)", "sine series in Ci(2n pi) - log n",
   lambda k, x: k.mp.log(k.r(x)) - k.mp.log(1 - k.r(x)) + (k.gamma + k.mp.log(2 * k.pi)) * (1 - 2 * k.r(x)),
   lambda k, x: 2 / k.pi * (k.sici(((1, "sin", 2 * x, "Ci"),), 1, 2)
                            - k.trig(lambda n: k.mp.log(n) / n, 2 * k.pi * k.r(x), "sin")),
   params=(T,))

_e("E6.94k", "(6.94k)", "sum over odd m of Si(2 m pi)/m^3 = -pi^3/8 as printed",
   lambda k: k.sici("Si", 3, 2, ODD_ONLY),
   lambda k: -k.pi ** 3 / 8)

_adj("A-6.94k", "(6.94k), (6.94j)", "sum over odd m of Si(2 m pi)/m^3",
     [("main", "direct sum", lambda k: k.sici("Si", 3, 2, ODD_ONLY))],
     [Claim("-pi^3/8", lambda k: -k.pi ** 3 / 8),
      Claim("-pi^3/8 + pi^3 log(2)/4", lambda k: -k.pi ** 3 / 8 + k.pi ** 3 * k.ln2 / 4, "derived")])

_e("E6.94ki", "(6.94ki)", "sum Si(n pi)/n^3 and its alternating version",
   lambda k, w: k.sici("Si", 3, 1, ONE if w == "plain" else ALTERNATING),
   lambda k, w: (F(1, 8) - F(1, 18)) * k.pi ** 3 if w == "plain" else -k.pi ** 3 / 18,
   params=("plain", "alternating"))

_e("E6.94o", "(6.94o)", "sum Ci(n pi)/n^4",
   lambda k: 11 * k.pi ** 4 / 576 + k.sici("Ci", 4, 1),
   lambda k: k.zeta(4) * (k.gamma + k.mp.log(k.pi)) - k.zd(4))


def _cot_half(k, x):
    return k.mp.cot(k.pi * x / 2)


_e("E6.94q", "(6.94q)", "int_0^1 x^3 log x cot(pi x/2)",
   lambda k: k.q(lambda x: x ** 3 * k.mp.log(x) * _cot_half(k, x), 0, 1),
   lambda k: -5 / k.pi ** 3 * k.eta(3) + 6 / k.pi ** 4 * k.sici("Si", 4, 1))

_adj("A-6.94q", "(6.94q), (6.94p)", "int_0^1 x^3 log x cot(pi x/2)",
     [("main", "quadrature", lambda k: k.q(lambda x: x ** 3 * k.mp.log(x) * _cot_half(k, x), 0, 1))],
     [Claim("-5/pi^3 eta(3) + 6/pi^4 sum Si(n pi)/n^4",
            lambda k: -5 / k.pi ** 3 * k.eta(3) + 6 / k.pi ** 4 * k.sici("Si", 4, 1)),
      Claim("twice that (cot(x/2) = 2 sum sin nx)",
            lambda k: 2 * (-5 / k.pi ** 3 * k.eta(3) + 6 / k.pi ** 4 * k.sici("Si", 4, 1)), "derived")])

_e("E6.94r", "(6.94r)", "int_0^1 x^2 log x cot(pi x/2)",
   lambda k: k.q(lambda x: x ** 2 * k.mp.log(x) * _cot_half(k, x), 0, 1) / 2,
   lambda k: (-3 * (k.eta(3) + k.z3) - 2 * k.sici("Ci", 3, 1)
              + 2 * k.z3 * (k.gamma + k.mp.log(k.pi)) - 2 * k.zd(3)) / k.pi ** 3)

_e("E6.94t", "(6.94t)", "int_0^1 x^2 log x log(2 sin(pi x/2))",
   lambda k: k.q(lambda x: x ** 2 * k.mp.log(x) * k.mp.log(2 * k.mp.sin(k.pi * x / 2)), 0, 1),
   lambda k: k.r(F(1, 12)) - 2 / k.pi ** 3 * k.sici("Si", 4, 1))

_e("E6.94u", "(6.94u)", "int_0^1 x log x log(2 sin(pi x/2))",
   lambda k: k.q(lambda x: x * k.mp.log(x) * k.mp.log(2 * k.mp.sin(k.pi * x / 2)), 0, 1),
   lambda k: k.eta(2) + k.zeta(2) - F(3, 8) + k.zd(2) / k.pi ** 2)

_adj("A-6.94t", "(6.94t), (6.94s)", "int_0^1 x^2 log x log(2 sin(pi x/2))",
     [("main", "quadrature",
       lambda k: k.q(lambda x: x ** 2 * k.mp.log(x) * k.mp.log(2 * k.mp.sin(k.pi * x / 2)), 0, 1))],
     [Claim("1/12 - 2/pi^3 sum Si(n pi)/n^4", lambda k: k.r(F(1, 12)) - 2 / k.pi ** 3 * k.sici("Si", 4, 1)),
      Claim("eta(3)/pi^2 - 2/pi^3 sum Si(n pi)/n^4",
            lambda k: k.eta(3) / k.pi ** 2 - 2 / k.pi ** 3 * k.sici("Si", 4, 1), "derived")])

_adj("A-6.94u", "(6.94u)", "int_0^1 x log x log(2 sin(pi x/2))",
     [("main", "quadrature",
       lambda k: k.q(lambda x: x * k.mp.log(x) * k.mp.log(2 * k.mp.sin(k.pi * x / 2)), 0, 1))],
     [Claim("eta(2) + zeta(2) - 3/8 + zeta'(2)/pi^2",
            lambda k: k.eta(2) + k.zeta(2) - F(3, 8) + k.zd(2) / k.pi ** 2),
      Claim("(eta(3) + zeta(3) + sum Ci(n pi)/n^3 - (gamma + log pi) zeta(3) + zeta'(3))/pi^2",
            lambda k: (k.eta(3) + k.z3 + k.sici("Ci", 3, 1) - (k.gamma + k.mp.log(k.pi)) * k.z3 + k.zd(3))
            / k.pi ** 2, "derived")])

_e("E6.94v", "(6.94v)", "sum zeta(2n) x^(2n+1)/(n(2n+1))",
   lambda k, x: k.r(x) * _z2n_series(k, lambda n: F(1, n * (2 * n + 1)), k.r(x) ** 2),
   lambda k, x: -k.r(x) + k.r(x) * k.mp.log(2 * k.pi * k.r(x))
   - k.q(lambda t: k.mp.log(2 * k.mp.sin(t / 2)), 0, 2 * k.pi * k.r(x)) / (2 * k.pi),
   params=(T,))


# ---------------------------------------------------------------------------
# S6: more zeta(2n) series, log-trig integrals, Clausen integrals
# ---------------------------------------------------------------------------

_e("E6.99", "(6.99)", "sum zeta(2n) t^(2n)/n = log(pi t/sin(pi t))",
   lambda k, t: _z2n_series(k, lambda n: F(1, n), k.r(t) ** 2),
   lambda k, t: k.mp.log(k.pi * k.r(t) / k.mp.sin(k.pi * k.r(t))),
   params=(T, H))

_e("E6.102d", "(6.102d), (6.107m)", "sum zeta(2n)/(n 4^n) = log(pi/2)",
   lambda k: _z2n_series(k, lambda n: F(1, n), Q),
   lambda k: k.mp.log(k.pi / 2))


def _t_over_sin2(k, p):
    return k.q(lambda t: t ** p / k.mp.sin(t) ** 2 if t else k.mp.mpf(1 if p == 2 else 0), 0, PiMul(H))


_e("E6.103c", "(6.103c)", "eta(3) from int t^4/sin^2 t",
   lambda k: k.eta(3),
   lambda k: k.pi ** 2 / 6 * k.ln2 - _t_over_sin2(k, 4) / (3 * k.pi))

_e("E6.103d", "(6.103d)", "eta(5) from int t^(2k)/sin^2 t",
   lambda k: k.eta(5),
   lambda k: 7 * k.pi ** 3 / 360 * _t_over_sin2(k, 2) - k.pi / 18 * _t_over_sin2(k, 4)
   + 2 / (45 * k.pi) * _t_over_sin2(k, 6))

_e("E6.103g", "(6.103g)", "pi^2/240 as a zeta(2n) series",
   lambda k: k.pi ** 2 / 240,
   lambda k: _z2n_series(k, lambda n: F(n - 1, (n + 1) * (n + 2) * (n + 3)), H, start=0))

_adj("A-6.103g", "(6.103g)", "zeta(2n) series from int x^2 (x - pi/2)^2/sin^2 x",
     [("main", "sum (n-1) zeta(2n)/((n+1)(n+2)(n+3) 2^n)",
       lambda k: _z2n_series(k, lambda n: F(n - 1, (n + 1) * (n + 2) * (n + 3)), H, start=0)),
      ("even", "sum (2n-1) zeta(2n)/((2n+1)(2n+2)(2n+3) 4^n)",
       lambda k: _z2n_series(k, lambda n: F(2 * n - 1, (2 * n + 1) * (2 * n + 2) * (2 * n + 3)), Q, start=0)),
      ("integral", "-1/4 int_0^{pi/2} x^2 (x - pi/2)^2/sin^2 x",
       lambda k: -k.q(lambda x: (x * (x - k.pi / 2) / k.mp.sin(x)) ** 2 if x else (k.pi / 2) ** 2,
                      0, PiMul(H)) / 4)],
     [Claim("pi^2/240", lambda k: k.pi ** 2 / 240),
      Claim("3 zeta(3)/(4 pi^2)", lambda k: 3 * k.z3 / (4 * k.pi ** 2), "derived", "even"),
      Claim("-(3/32) pi zeta(3)", lambda k: -F(3, 32) * k.pi * k.z3, "derived", "integral")])

_e("E6.106", "(6.106)", "int_0^pi x cos x/(1 + sin x)",
   lambda k: k.q(lambda x: x * k.mp.cos(x) / (1 + k.mp.sin(x)), 0, PiMul(F(1))) / 2,
   lambda k: -2 * k.G + k.pi / 2 * k.ln2)

_e("E6.107b", "(6.107b)", "int_0^{pi/4} log cos",
   lambda k: k.q(lambda x: k.mp.log(k.mp.cos(x)), 0, PiMul(Q)),
   lambda k: k.G / 2 - k.pi / 4 * k.ln2)

_e("E6.107d", "(6.107d)", "int_0^{pi/4} log sin",
   lambda k: k.q(lambda x: k.mp.log(k.mp.sin(x)), 0, PiMul(Q)),
   lambda k: -k.G / 2 - k.pi / 4 * k.ln2)


def _bern_log_pi(k):
    def term(n):
        b = sf.bernoulli_number(2 * n)
        return (-1) ** (n + 1) * k.r(b) * k.pi ** (2 * n) / (2 * n * _fac(2 * n + 1))
    return k.geo(term, Q)


_e("E6.107g", "(6.107g)", "log(pi) - 1 as a Bernoulli number series",
   lambda k: k.mp.log(k.pi) - 1,
   _bern_log_pi)

_e("E6.107i", "(6.107i)", "sum zeta(2n)/(n(2n+1)(n+1) 4^n)",
   lambda k: _z2n_series(k, lambda n: F(1, n * (2 * n + 1) * (n + 1)), Q),
   lambda k: 7 * k.z3 / (2 * k.pi ** 2) - F(3, 2) + k.mp.log(k.pi))

_e("E6.107l", "(6.107l)", "sum zeta(2n)/(2n(2n+1)(2n+2)(2n+3) 4^n)",
   lambda k: _z2n_series(k, lambda n: F(1, 2 * n * (2 * n + 1) * (2 * n + 2) * (2 * n + 3)), Q),
   lambda k: k.z3 / (2 * k.pi ** 2) + k.mp.log(k.pi) / 12 - F(11, 72))

_e("E6.107n", "(6.107n)", "Cl2 as an arctangent integral",
   lambda k, th: k.cl(2, th),
   lambda k, th: k.q(lambda x: k.mp.atan(x * k.mp.sin(k.r(th)) / (1 - x * k.mp.cos(k.r(th)))) / x
                     if x else k.mp.sin(k.r(th)), 0, 1),
   params=(PiMul(H), PiMul(T)))


def _denom(k, x, th):
    return 1 - 2 * x * k.mp.cos(th) + x * x


_e("E6.107o", "(6.107o)", "Cl2 as a log x integral",
   lambda k, th: k.cl(2, th),
   lambda k, th: -k.mp.sin(k.r(th)) * k.q(lambda x: k.mp.log(x) / _denom(k, x, k.r(th)), 0, 1),
   params=(PiMul(H), PiMul(T)))

_e("E6.107p", "(6.107p)", "G = -int_0^1 log x/(1+x^2)",
   lambda k: -k.q(lambda x: k.mp.log(x) / (1 + x * x), 0, 1),
   lambda k: k.G)

_e("E6.107q", "(6.107q)", "Cl_m for even m as a log-power integral, theta = 1",
   lambda k, m: k.trig(lambda n: 1 / n ** m, 1, "sin"),
   lambda k, m: -k.mp.sin(1) / _fac(m - 1)
   * k.q(lambda x: k.mp.log(x) ** (m - 1) / _denom(k, x, k.mp.mpf(1)), 0, 1),
   params=(2, 4))

_e("E6.107r", "(6.107r)", "Cl_m for odd m as a log-power integral, theta = 1",
   lambda k, m: k.trig(lambda n: 1 / n ** m, 1, "cos"),
   lambda k, m: -1 / k.mp.mpf(_fac(m - 1))
   * k.q(lambda x: (x - k.mp.cos(1)) * k.mp.log(x) ** (m - 1) / _denom(k, x, k.mp.mpf(1)), 0, 1),
   params=(3, 5))


def _loglog(k, u, db):
    # log log(1/u) with u = 1 - db computed without cancellation
    return k.mp.log(-k.mp.log1p(-db)) if db < 0.5 else k.mp.log(-k.mp.log(u))


_e("E6.107rvi", "(6.107rvi)", "int_0^1 log log(1/u)/(1 - 2u cos 2 pi x + u^2)",
   lambda k, x: k.mp.sin(2 * k.pi * k.r(x))
   * k.q(lambda u, da, db: _loglog(k, u, db) / _denom(k, u, 2 * k.pi * k.r(x)), 0, 1, offsets=True),
   lambda k, x: k.pi / 2 * k.mp.log(k.pi / k.mp.sin(k.pi * k.r(x)))
   + k.pi / 2 * (1 - 2 * k.r(x)) * k.mp.log(2 * k.pi) - k.pi * k.lg(x),
   params=(Q, F(1, 6)))

_e("E6.107rvii", "(6.107rvii)", "int_0^1 log log(1/u)/(1+u^2)",
   lambda k: k.q(lambda u, da, db: _loglog(k, u, db) / (1 + u * u), 0, 1, offsets=True),
   lambda k: F(3, 4) * k.pi * k.mp.log(k.pi) + k.pi / 2 * k.ln2 - k.pi * k.lg(Q))

_e("E6.107s", "(6.107s)", "B_4(theta) as a log integral",
   lambda k, th: k.B(4, th),
   lambda k, th: 12 / (2 * k.pi) ** 4
   * k.q(lambda x: k.mp.log(_denom(k, x, 2 * k.pi * k.r(th))) * k.mp.log(x) ** 2 / x if x else k.mp.mpf(0), 0, 1),
   params=(T,))

_e("E6.107t", "(6.107t)", "B_3(theta) as a log integral",
   lambda k, th: k.B(3, th),
   lambda k, th: 3 * k.mp.sin(2 * k.pi * k.r(th)) / (2 * k.pi) ** 3
   * k.q(lambda x: k.mp.log(x) ** 2 / _denom(k, x, 2 * k.pi * k.r(th)), 0, 1),
   params=(T,))

def _b3_log_integral(k, th):
    return 3 * k.mp.sin(2 * k.pi * k.r(th)) / (2 * k.pi) ** 3 \
        * k.q(lambda x: k.mp.log(x) ** 2 / _denom(k, x, 2 * k.pi * k.r(th)), 0, 1)


_adj("A-6.107t", "(6.107t)", "B_3(1/3) against the log-squared integral",
     [("main", "Bernoulli polynomial", lambda k: k.B(3, T))],
     [Claim("3 sin(2 pi t)/(2 pi)^3 * I", lambda k: _b3_log_integral(k, T)),
      Claim("6 sin(2 pi t)/(2 pi)^3 * I", lambda k: 2 * _b3_log_integral(k, T), "derived")])


_e("E6.108", "(6.108)", "log Gamma(1+x) Taylor series",
   lambda k, x: k.lg(1 + x),
   lambda k, x: -k.gamma * k.r(x) + k.geo(lambda n: (-1) ** n * k.zeta(n) * k.r(x) ** n / n, k.r(x), start=2),
   params=(H,))


# ---------------------------------------------------------------------------
# S6: Fourier coefficients of log Gamma; Barnes G and Gamma_3 values
# ---------------------------------------------------------------------------

_e("E6.111c", "(6.111c), (6.111)", "int_0^1 log Gamma(x+1) sin(2 n pi x)",
   lambda k, n: k.fourier(lambda x: k.lg(x + 1), n, "sin"),
   lambda k, n: k.Ci(2 * n * k.pi) / (2 * k.pi * n),
   params=(1, 2, 3))

_e("E6.119i", "(6.119i)", "int_0^1 log Gamma(x) cos(2 n pi x) = 1/(4n)",
   lambda k, n: k.fourier(lambda x: k.lg(x), n, "cos"),
   lambda k, n: k.mp.mpf(1) / (4 * n),
   params=(1, 2, 3))

_adj("A-6.111", "(6.111), (6.111c)", "int_0^1 log Gamma(x + 1/2) sin(2 pi x)",
     [("main", "quadrature", lambda k: k.fourier(lambda x: k.lg(x + H), 1, "sin"))],
     [Claim("-(log(1/2) - Ci(pi))/(2 pi)", lambda k: -(k.mp.log(H) - k.Ci(k.pi)) / (2 * k.pi)),
      Claim("-(log(1/2) + Ci(pi))/(2 pi)", lambda k: -(k.mp.log(H) + k.Ci(k.pi)) / (2 * k.pi), "corrected")])

_e("E6.115", "(6.115)", "int_0^1 log G(1+t)",
   lambda k: k.q(lambda t: k.logG(1 + t), 0, 1),
   lambda k: F(1, 12) + k.mp.log(2 * k.pi) / 4 - 2 * k.logA)

_e("E6.116", "(6.116)", "int_0^1 t log Gamma(1+t)",
   lambda k: 2 * k.q(lambda t: t * k.lg(1 + t), 0, 1),
   lambda k: (k.mp.log(2 * k.pi) - 1) / 2 - 2 * k.logA)

_e("E6.117", "(6.117)", "sum Ci(2n pi)/n^2",
   lambda k: k.sici("Ci", 2, 2),
   lambda k: 2 * k.pi ** 2 * (k.logA - F(1, 4)))

_e("E6.117b", "(6.117b)", "sum (-1)^n Ci(n pi)/n^2",
   lambda k: k.sici("Ci", 2, 1, ALTERNATING) / (2 * k.pi ** 2),
   lambda k: k.ln2 / 12 + F(1, 48) + k.zd(-1) / 2)


def _lgamma_fourier(k, a, shift):
    a = F(a)
    return k.sici(((1, "sin", 2 * a + shift, "Ci"), (-1, "cos", 2 * a + shift, "si")), 1, 2 * a) / k.pi


_e("E6.117c", "(6.117c)", "log Gamma(a) from Si/Ci",
   lambda k, a: k.lg(a),
   lambda k, a: k.mp.log(2 * k.pi) / 2 + (k.r(a) - H) * k.mp.log(k.r(a)) - k.r(a) + _lgamma_fourier(k, a, 0),
   params=(Q, T))

_e("E6.117ca", "(6.117ca)", "log Gamma(a + 1/2) from alternating Si/Ci",
   lambda k, a: k.lg(a + H),
   lambda k, a: k.mp.log(2 * k.pi) / 2 + k.r(a) * k.mp.log(k.r(a)) - k.r(a) + _lgamma_fourier(k, a, 1),
   params=(Q,))

_e("E6.117e", "(6.117e), (6.117n)", "sum Si(2n pi)/n^3 = pi^3/18",
   lambda k: k.pi ** 3 / 18,
   lambda k: k.sici("Si", 3, 2))

_e("E6.117fii", "(6.117fii)", "int_0^{1/2} log Gamma",
   lambda k: k.q(lambda x: k.lg(x), 0, H),
   lambda k: F(5, 24) * k.ln2 + k.mp.log(k.pi) / 4 + F(3, 2) * k.logA)

_e("E6.117fiii", "(6.117fiii)", "quarter-period Ci/Si series",
   lambda k: k.sici(((1, "cos", H, "Ci"), (1, "sin", H, "Si")), 2, H) / (2 * k.pi ** 2),
   lambda k: F(5, 64) + k.ln2 / 48 - k.logA / 8)

_e("E6.117g", "(6.117g)", "int_0^x log Gamma via Hurwitz derivatives",
   lambda k, x: k.q(lambda t: k.lg(t), 0, x),
   lambda k, x: k.r(x) * (1 - k.r(x)) / 2 + k.r(x) / 2 * k.mp.log(2 * k.pi) + k.hzd(-1, x) - k.zd(-1),
   params=(T,))

_adj("A-6.117j", "(6.117j), (6.117j-summary)", "sum Si(2n pi)/n^2",
     [("main", "direct sum", lambda k: k.sici("Si", 2, 2))],
     [Claim("2 pi^2 (log A - 1/4)", lambda k: 2 * k.pi ** 2 * (k.logA - F(1, 4))),
      Claim("pi^2/2 log 2 pi + 2 pi^2 log A + 5 pi^2/36",
            lambda k: k.pi ** 2 / 2 * k.mp.log(2 * k.pi) + 2 * k.pi ** 2 * k.logA + 5 * k.pi ** 2 / 36)])

_e("E6.117ki", "(6.117ki)", "log G(1/2)",
   lambda k: k.logG(H),
   lambda k: k.ln2 / 24 - k.mp.log(k.pi) / 4 + F(3, 2) * k.zd(-1), tol="tight")

_e("E6.117kii", "(6.117kii)", "log G(1/4)",
   lambda k: k.logG(Q),
   lambda k: k.r(F(3, 32)) - k.G / (4 * k.pi) - F(9, 8) * k.logA - F(3, 4) * k.lg(Q), tol="tight")

_adj("A-6.127", "(6.127), (6.117ki)", "G(1/2) in terms of the Glaisher constant",
     [("main", "log G(1/2)", lambda k: k.logG(H))],
     [Claim("A^(3/2) pi^(-1/4) e^(1/8) 2^(1/24)",
            lambda k: F(3, 2) * k.logA - k.mp.log(k.pi) / 4 + F(1, 8) + k.ln2 / 24),
      Claim("A^(-3/2) pi^(-1/4) e^(1/8) 2^(1/24)",
            lambda k: -F(3, 2) * k.logA - k.mp.log(k.pi) / 4 + F(1, 8) + k.ln2 / 24, "derived")])

_e("E6.117p", "(6.117p)", "log Gamma_3(3/2)",
   lambda k: sf.log_gamma3(k.ctx, H),
   lambda k: -k.mp.log(k.pi) / 16 + 7 * k.z3 / (32 * k.pi ** 2), tol="tight")

_e("E6.117r", "(6.117r)", "sum Ci(2n pi)",
   lambda k: k.r(H) - k.gamma,
   lambda k: 2 * k.sici("Ci", 0, 2))

_e("E6.117s", "(6.117s)", "sum (-1)^n Ci(n pi)",
   lambda k: 2 * k.sici("Ci", 0, 1, ALTERNATING),
   lambda k: 1 - k.gamma - k.ln2)

_adj("A-6.117-alt2π", "(6.117-alt2π), (6.117s)", "sum (-1)^n Ci(2n pi)",
     [("main", "direct sum", lambda k: k.sici("Ci", 0, 2, ALTERNATING))],
     [Claim("1 - gamma/2 - 3/4 log 2", lambda k: 1 - k.gamma / 2 - F(3, 4) * k.ln2),
      Claim("1/2 - gamma/2 - 3/4 log 2", lambda k: k.r(H) - k.gamma / 2 - F(3, 4) * k.ln2),
      Claim("1 - gamma/2 - log 2", lambda k: 1 - k.gamma / 2 - k.ln2, "derived")])

_adj("A-6.119-vs-6.121c", "(6.119), (6.121c)", "int_0^1 log Gamma(x+1) cos(2 pi x)",
     [("main", "quadrature", lambda k: k.fourier(lambda x: k.lg(x + 1), 1, "cos"))],
     [Claim("-si(2 pi)/(2 pi)", lambda k: -k.si(2 * k.pi) / (2 * k.pi)),
      Claim("si(2 pi)/(4 pi)", lambda k: k.si(2 * k.pi) / (4 * k.pi))])

_e("E6.120", "(6.120)", "sum si(2n pi)/n",
   lambda k: k.sici("si", 1, 2),
   lambda k: k.pi / 2 * k.mp.log(2 * k.pi) - k.pi)

_e("E6.121", "(6.121), (6.117ciii), (6.117civ)", "sum (-1)^n si(n pi)/n, the x = pi endpoint",
   lambda k: k.sici("si", 1, 1, ALTERNATING),
   lambda k: k.pi / 2 * k.ln2 - k.pi / 2, tol="slow")

_adj("A-6.121-2π", "(6.121-2π)", "sum (-1)^n si(2n pi)/n",
     [("main", "direct sum", lambda k: k.sici("si", 1, 2, ALTERNATING))],
     [Claim("pi/2 log 2 - pi", lambda k: k.pi / 2 * k.ln2 - k.pi),
      Claim("3/2 pi log 2 - pi (a = 1 in the alternating log Gamma series)",
            lambda k: F(3, 2) * k.pi * k.ln2 - k.pi, "derived")])

_e("E6.123", "(6.123)", "int_0^1 log Gamma(x+1) log(2 sin pi x)",
   lambda k: k.q(lambda x, da, db: k.lg(x + 1) * k.mp.log(2 * k.mp.sin(k.pi * min(da, db))), 0, 1, offsets=True),
   lambda k: k.sici("si", 2, 2) / (2 * k.pi))

_e("E6.125", "(6.125)", "int_0^1 log Gamma(x + 1/2) sin(2 n pi x)",
   lambda k, n: k.fourier(lambda x: k.lg(x + H), n, "sin"),
   lambda k, n: (k.ln2 + (-1) ** n * k.Ci(n * k.pi)) / (2 * k.pi * n),
   params=(1, 2))

_e("E6.129", "(6.129)", "int_0^1 log Gamma(t + 1/2)",
   lambda k: k.q(lambda t: k.lg(t + H), 0, 1),
   lambda k: k.mp.log(k.pi) / 2 - H)

_e("E6.130", "(6.130)", "sum (-1)^n Ci(n pi)/n^2",
   lambda k: k.sici("Ci", 2, 1, ALTERNATING),
   lambda k: k.pi ** 2 * (k.ln2 / 6 + F(1, 8) - k.logA))

_e("E6.130f", "(6.130f)", "int_0^{1/2} log Gamma(1+x)",
   lambda k: k.q(lambda x: k.lg(1 + x), 0, H),
   lambda k: -k.r(H) - F(7, 24) * k.ln2 + k.mp.log(k.pi) / 4 + F(3, 2) * k.logA)

_e("E6.130g", "(6.130g)", "int_0^{1/4} log Gamma(1+x)",
   lambda k: k.q(lambda x: k.lg(1 + x), 0, Q),
   lambda k: -k.r(Q) - F(3, 8) * k.ln2 + k.mp.log(k.pi) / 8 + F(9, 8) * k.logA + k.G / (4 * k.pi))

_e("E6.130si", "(6.130si)", "sum over odd m of Ci(2 m pi)/m^2",
   lambda k: 2 / k.pi ** 2 * k.sici("Ci", 2, 2, ODD_ONLY),
   lambda k: k.r(Q) - 3 * k.zd(-1) - F(13, 12) * k.ln2)

_adj("A-6.130v", "(6.130v)", "sum Ci(n pi)/n^2",
     [("main", "direct sum", lambda k: k.sici("Ci", 2, 1))],
     [Claim("-pi^2/6 log 2 - 17 pi^2/24 - 2 pi^2 zeta'(-1)",
            lambda k: -k.pi ** 2 / 6 * k.ln2 - F(17, 24) * k.pi ** 2 - 2 * k.pi ** 2 * k.zd(-1)),
      Claim("-pi^2/6 log 2 - 5 pi^2/24 - 2 pi^2 zeta'(-1)",
            lambda k: -k.pi ** 2 / 6 * k.ln2 - F(5, 24) * k.pi ** 2 - 2 * k.pi ** 2 * k.zd(-1), "derived")])

_adj("A-6.135", "(6.135)", "sum 1/(n^2+1)",
     [("main", "direct sum", lambda k: k.pw(lambda n: k.mp.mpf(1) / (n * n + 1), 2))],
     [Claim("-1/2 - pi/(2 tanh pi)", lambda k: -k.r(H) - k.pi / (2 * k.mp.tanh(k.pi))),
      Claim("-1/2 + pi/(2 tanh pi)", lambda k: -H + k.pi / (2 * k.mp.tanh(k.pi)), "derived")])

_e("E6.136", "(6.136)", "pi/sinh pi as an alternating series",
   lambda k: k.pi / k.mp.sinh(k.pi),
   lambda k: 1 - 2 * k.alt(lambda n: k.mp.mpf((-1) ** (n + 1)) / (n * n + 1)))

_e("E6.138", "(6.138)", "log sin(pi x) as a zeta(2k) series",
   lambda k, x: k.mp.log(k.mp.sin(k.pi * k.r(x))),
   lambda k, x: k.mp.log(k.pi * k.r(x)) - _z2n_series(k, lambda n: F(1, n), k.r(x) ** 2),
   params=(T,))


def _e6140_rhs(k, a):
    a = k.r(a)
    mp = k.mp
    s1 = k.alt(lambda n: (-1) ** n * (1 / (a - n) ** 2 - 1 / (a + n) ** 2))
    s2 = k.alt(lambda n: (-1) ** n * n / (a * a - n * n))
    s3 = k.pw(lambda n: 1 / (a + n) ** 2 - 1 / (a - n) ** 2, 3)
    return mp.cos(a * k.pi) * s1 + 2 * k.pi * mp.sin(a * k.pi) * s2 + s3


_e("E6.140", "(6.140)", "partial fractions of the derivative of cot",
   lambda k, a: k.pi * k.mp.cos(k.r(a) * k.pi) / k.r(a) - k.mp.sin(k.r(a) * k.pi) / k.r(a) ** 2,
   _e6140_rhs,
   params=(T,))


def _e6140_cos_kernel(k, a):
    # 2 sum_n int_0^pi x sin(ax) cos(nx) dx, termwise closed form
    a, mp = k.r(a), k.mp
    c, s = mp.cos(a * k.pi), mp.sin(a * k.pi)
    return k.alt(lambda n: (-1) ** n * (-2 * k.pi * c * a / (a * a - n * n)
                                       + s * (1 / (a + n) ** 2 + 1 / (a - n) ** 2)))


_adj("A-6.140", "(6.140)", "pi cos(a pi)/a - sin(a pi)/a^2 at a = 1/3",
     [("main", "closed form", lambda k: k.pi * k.mp.cos(k.pi / 3) * 3 - k.mp.sin(k.pi / 3) * 9),
      ("quad", "-int_0^pi x sin(ax)", lambda k: -k.q(lambda x: x * k.mp.sin(x / 3), 0, PiMul(F(1))))],
     [Claim("printed partial-fraction series", lambda k: _e6140_rhs(k, T)),
      Claim("cosine-kernel series", lambda k: _e6140_cos_kernel(k, T), "derived"),
      Claim("-int_0^pi x sin(ax)", lambda k: -k.q(lambda x: x * k.mp.sin(x / 3), 0, PiMul(F(1))),
            "derived", "quad")])


def _z2n_over_odd_sq(k):
    # sum_{n>=1} zeta(2n)/(2n+1)^2 = (pi^2/8 - 1) + sum (zeta(2n) - 1)/(2n+1)^2
    return k.pi ** 2 / 8 - 1 + k.geo(lambda n: (k.zeta(2 * n) - 1) / (2 * n + 1) ** 2, Q)


_e("C-6.92b", "(6.92b)", "sum zeta(2n)/(2n+1)^2 via Si(2n pi)",
   _z2n_over_odd_sq,
   lambda k: k.r(H) - k.sici("Si", 2, 2) / (4 * k.pi), status="conjecture")

_e("C-6.92c", "(6.92c)", "int_0^1 log Gamma(x+1) log(2 sin pi x) via zeta(2n)",
   lambda k: k.q(lambda x, da, db: k.lg(x + 1) * k.mp.log(2 * k.mp.sin(k.pi * min(da, db))), 0, 1, offsets=True),
   lambda k: 1 - k.zeta(2) / 4 - 2 * _z2n_over_odd_sq(k), status="conjecture")


# ---------------------------------------------------------------------------
# S7
# ---------------------------------------------------------------------------

_e("E7.5", "(7.5)", "sawtooth Fourier series",
   lambda k, x: (k.pi - k.r(x)) / 2,
   lambda k, x: k.trig(lambda n: 1 / n, x, "sin"),
   params=(1.0, 2.0))

_e("E7.8", "(7.8)", "log(2 sin(x/2)) Fourier series",
   lambda k, x: k.mp.log(2 * k.mp.sin(k.r(x) / 2)),
   lambda k, x: -k.trig(lambda n: 1 / n, x, "cos"),
   params=(1.0, PiMul(H)))


def _e717_rhs(k, x):
    x = k.r(x)
    return (x ** 2 * k.trig(lambda n: 1 / n, 2 * x, "cos") - k.trig(lambda n: 1 / n ** 3, 2 * x, "cos") / 2
            - x * k.trig(lambda n: 1 / n ** 2, 2 * x, "sin") + x ** 2 * k.mp.log(k.mp.sin(x)) + k.z3 / 2)


_e("E7.17", "(7.17)", "int_0^x t log sin t",
   lambda k, x: 2 * k.q(lambda t: t * k.mp.log(k.mp.sin(t)) if t else k.mp.mpf(0), 0, x),
   _e717_rhs,
   params=(PiMul(T), PiMul(Q)))


# ---------------------------------------------------------------------------
# S8: central binomial series
# ---------------------------------------------------------------------------

def _cb(n):
    return F(comb(2 * n, n), 4 ** n)


_e("E8.1", "(8.1)", "arcsine series at sin x",
   lambda k, x: k.r(x),
   lambda k, x: k.geo(lambda n: k.r(_cb(n)) * k.mp.sin(k.r(x)) ** (2 * n + 1) / (2 * n + 1),
                      k.mp.sin(k.r(x)) ** 2, start=0),
   params=(0.5, 1.2))

_e("E8.4", "(8.4)", "pi/2 log 2 as a central binomial series",
   lambda k: k.pi / 2 * k.ln2,
   lambda k: k.pw(lambda n: k.r(_cb(n)) / (2 * n + 1) ** 2, F(5, 2), start=0))


def _alt_binom_inner(n):
    return sum(F(comb(n, j) * (-1) ** j, 2 * j + 1) for j in range(n + 1))


_e("E8.11d", "(8.11d)", "alternating binomial sum equals (2n)!!/(2n+1)!!",
   lambda k, n: _alt_binom_inner(n),
   lambda k, n: double_factorial_ratio(n),
   params=tuple(range(51)), tol="tight", exact=True)

_e("E8.11e", "(8.11e)", "sum 2^-n of the alternating binomial sum = pi/2",
   lambda k: k.geo(lambda n: k.r(_alt_binom_inner(n) / 2 ** n), H, start=0),
   lambda k: k.pi / 2)

_e("E8.11f", "(8.11f)", "sum 2^-n (2n)!!/(2n+1)!! = pi/2",
   lambda k: k.geo(lambda n: k.r(double_factorial_ratio(n) / 2 ** n), H, start=0),
   lambda k: k.pi / 2)


def _alt_harmonic_series(k, alt_harm):
    h = k.harm()

    def a(n):
        if alt_harm:
            return k.r(sum(F((-1) ** (j + 1), j) for j in range(1, n + 1)))
        return h.H(n)
    return F(6, 7) * k.geo(lambda n: (-1) ** n * a(n) / k.mp.mpf(2) ** (n + 1), H)


_adj("A-8.11k", "(8.11k), (8.11l), (8.11m)", "harmonic series at x = -1/2",
     [("main", "(6/7) sum (-1)^n H_n/2^(n+1)", lambda k: _alt_harmonic_series(k, False)),
      ("alternating", "(6/7) sum (-1)^n A_n/2^(n+1), A_n alternating harmonic",
       lambda k: _alt_harmonic_series(k, True))],
     [Claim("log 2", lambda k: k.ln2),
      Claim("-(2/7) log(3/2)", lambda k: -F(2, 7) * k.mp.log(F(3, 2)), "derived"),
      Claim("log 2 (alternating harmonic reading)", lambda k: k.ln2, "printed", "alternating"),
      Claim("-(2/7) log 2", lambda k: -F(2, 7) * k.ln2, "derived", "alternating")])

_e("E8.15a", "(8.15a)", "G as a squared central binomial series",
   lambda k: k.G,
   lambda k: k.pi / 4 * k.pw(lambda n: k.r(_cb(n) ** 2) / (2 * n + 1), 2, start=0))


def _printed_815e_term(n):
    # 1*3*...*(2n-1) / (n 2^(2n) n!) = C(2n,n)/(n 8^n)
    return F(comb(2 * n, n), n * 8 ** n)


_adj("A-8.15e", "(8.15e), (8.15f), (8.15g)", "central binomial series with 1/(n 8^n)",
     [("main", "sum of the printed terms", lambda k: k.geo(lambda n: k.r(_printed_815e_term(n)), H)),
      ("lehmer", "sum C(2n,n)/(n 4^n)", lambda k: k.pw(lambda n: k.r(_cb(n) / n), F(3, 2))),
      ("partial", "first two printed terms", lambda k: k.r(_printed_815e_term(1) + _printed_815e_term(2)))],
     [Claim("2 log 2", lambda k: 2 * k.ln2),
      Claim("2 log(4 (1 - 1/sqrt 2)) (x = 1/8 in the generating function)",
            lambda k: 2 * k.mp.log(4 * (1 - 1 / k.mp.sqrt(2))), "derived"),
      Claim("Lehmer sum = 2 log 2", lambda k: 2 * k.ln2, "printed", "lehmer"),
      Claim("leading terms 1/2 + 3/16", lambda k: k.r(F(1, 2) + F(3, 16)), "printed", "partial")])

_e("E8.17", "(8.17)", "pi/8 log 2 + G/2 as a central binomial series",
   lambda k: k.pi / 8 * k.ln2 + k.G / 2,
   lambda k: k.geo(lambda n: k.r(F(comb(2 * n, n), 8 ** n)) / (2 * n + 1) ** 2, H, start=0) / k.mp.sqrt(2))

_e("E8.26", "(8.26), (8.27)", "x^2 as a series in sin^(2n) x",
   lambda k, x: k.r(x) ** 2,
   lambda k, x: k.geo(lambda n: k.r(double_factorial_ratio(n - 1) / n)
                      * k.mp.sin(k.r(x)) ** (2 * n), k.mp.sin(k.r(x)) ** 2),
   params=(0.7,))


def _831a_sum(k):
    return k.pw(lambda n: k.r(F(4 ** n * factorial(n - 1) ** 2, n * n * factorial(2 * n - 1))), F(3, 2))


_adj("A-8.31a", "(8.31a), (8.30)", "sum 4^n ((n-1)!)^2/(n^2 (2n-1)!)",
     [("main", "direct sum", _831a_sum)],
     [Claim("zeta(3) - 2 pi^2 log 2", lambda k: k.z3 - 2 * k.pi ** 2 * k.ln2),
      Claim("2 pi^2 log 2 - 7 zeta(3)", lambda k: 2 * k.pi ** 2 * k.ln2 - 7 * k.z3, "derived")])

_e("E8.31b", "(8.31b)", "2 pi G - 7/2 zeta(3) as a binomial series",
   lambda k: 2 * k.pi * k.G - F(7, 2) * k.z3,
   lambda k: k.pw(lambda n: k.r(F(16 ** n * factorial(n - 1) ** 4, n * factorial(2 * n - 1) ** 2)), 2) / 16)

_e("E8.36c", "(8.36c)", "sum cos(n pi/3)/n^3 = zeta(3)/3",
   lambda k: k.trig(lambda n: 1 / n ** 3, PiMul(T), "cos"),
   lambda k: k.z3 / 3)


def _e836d_closed(k):
    return k.mp.sqrt(3) * ((F(1, 9) - 1) / 2 * k.zeta(2) + (k.hz(2, F(1, 6)) + k.hz(2, T)) / 36)


def _inv_cb_cubed(k, sign=1):
    return k.geo(lambda n: k.mp.mpf(sign) ** (n + 1) / (n ** 3 * comb(2 * n, n)), Q)


_e("E8.36d", "(8.36d)", "sum sin(n pi/3)/n^2 via Hurwitz zeta",
   lambda k: k.trig(lambda n: 1 / n ** 2, PiMul(T), "sin"),
   _e836d_closed)

_e("E8.37", "(8.37)", "zeta(3) from a Clausen value and an inverse binomial sum",
   lambda k: k.z3,
   lambda k: k.pi / 2 * k.trig(lambda n: 1 / n ** 2, PiMul(T), "sin") - F(3, 4) * _inv_cb_cubed(k))

_e("E8.37a", "(8.37a)", "zeta(3) with the Hurwitz form of the Clausen value",
   lambda k: k.z3,
   lambda k: k.pi / 2 * _e836d_closed(k) - F(3, 4) * _inv_cb_cubed(k))

_e("E8.38", "(8.38)", "sum 1/(n^3 C(2n,n)) as log-sine integrals",
   lambda k, form: _inv_cb_cubed(k),
   lambda k, form: -2 * k.q(lambda t: t * k.mp.log(2 * k.mp.sin(t / 2)) if t else k.mp.mpf(0), 0, PiMul(T))
   if form == "pi/3" else
   -8 * k.q(lambda x: x * k.mp.log(2 * k.mp.sin(x)) if x else k.mp.mpf(0), 0, PiMul(F(1, 6))),
   params=("pi/3", "pi/6"))


def _psi1_third(k):
    return k.psi(1, T)


_adj("A-8.42b", "(8.42b), (8.42c), (8.42)", "trigamma at 1/3 and 2/3",
     [("main", "psi'(1/3) + psi'(2/3)", lambda k: k.psi(1, T) + k.psi(1, F(2, 3))),
      ("binomial", "sum 1/(n^3 C(2n,n))", _inv_cb_cubed)],
     [Claim("psi'(1/3) + psi'(2/3) = 2 pi^2", lambda k: 2 * k.pi ** 2),
      Claim("psi'(1/3) + psi'(2/3) = 4 pi^2/3", lambda k: 4 * k.pi ** 2 / 3, "derived"),
      Claim("(8.42) with psi'(1/3) - psi'(2/3)",
            lambda k: k.pi * k.mp.sqrt(3) / 18 * (k.psi(1, T) - k.psi(1, F(2, 3))) - F(4, 3) * k.z3,
            "printed", "binomial"),
      Claim("(8.42c): ... + sqrt(3) pi^3/9",
            lambda k: k.pi * k.mp.sqrt(3) / 9 * _psi1_third(k) - F(4, 3) * k.z3 + k.mp.sqrt(3) * k.pi ** 3 / 9,
            "printed", "binomial"),
      Claim("(8.42c) corrected: ... - 2 sqrt(3) pi^3/27",
            lambda k: k.pi * k.mp.sqrt(3) / 9 * _psi1_third(k) - F(4, 3) * k.z3
            - 2 * k.mp.sqrt(3) * k.pi ** 3 / 27, "corrected", "binomial")])

_e("E8.44", "(8.44)", "zeta(3) as an alternating inverse binomial sum",
   lambda k: k.z3,
   lambda k: F(5, 2) * _inv_cb_cubed(k, -1))

_e("E8.46", "(8.46)", "(arcsin x)^2 series",
   lambda k, x: k.mp.asin(k.r(x)) ** 2,
   lambda k, x: k.geo(lambda n: k.r(F(factorial(n - 1) ** 2, factorial(2 * n))) * (2 * k.r(x)) ** (2 * n),
                      k.r(x) ** 2) / 2,
   params=(0.4,))


# ---------------------------------------------------------------------------
# S8: log-cosine moments
# ---------------------------------------------------------------------------

def _log_cos(k, db):
    # cos(pi/2 - db) = sin(db), exact near the right endpoint
    return k.mp.log(k.mp.sin(db))


def _x2_logcos(k):
    return k.q(lambda x, da, db: x ** 2 * _log_cos(k, db), 0, PiMul(H), offsets=True)


_e("E8.51", "(8.51)", "int_0^{pi/2} x^2 log cos x as printed",
   _x2_logcos,
   lambda k: -k.pi ** 3 / 24 * k.ln2 - k.pi / 2 * k.z3)

_adj("A-8.51", "(8.51), (8.50)", "int_0^{pi/2} x^2 log cos x",
     [("main", "quadrature", _x2_logcos)],
     [Claim("-pi^3/24 log 2 - pi/2 zeta(3)", lambda k: -k.pi ** 3 / 24 * k.ln2 - k.pi / 2 * k.z3),
      Claim("-pi^3/24 log 2 - pi/4 zeta(3)", lambda k: -k.pi ** 3 / 24 * k.ln2 - k.pi / 4 * k.z3, "corrected"),
      Claim("parametric derivative of the cos^(p-1) cos(ax) integral",
            lambda k: -dehaan_closed_form(k.ctx, 1, 0, da=2, dp=1), "derived")])


def _x2_logcos_sq(k):
    return k.q(lambda x, da, db: x ** 2 * _log_cos(k, db) ** 2, 0, PiMul(H), offsets=True)


_adj("A-8.52", "(8.52), (8.52a)", "int_0^pi theta^2 log^2(2 cos(theta/2))",
     [("main", "quadrature",
       lambda k: k.q(lambda t, da, db: t ** 2 * k.mp.log(2 * k.mp.sin(db / 2)) ** 2, 0, PiMul(F(1)), offsets=True)),
      ("x2logcos2", "int_0^{pi/2} x^2 log^2 cos x by quadrature", _x2_logcos_sq)],
     [Claim("11 pi^4/180", lambda k: 11 * k.pi ** 4 / 180),
      Claim("11/4 zeta(4)", lambda k: F(11, 4) * k.zeta(4)),
      Claim("11 pi^5/180", lambda k: 11 * k.pi ** 5 / 180, "derived"),
      Claim("(pi/1440)(11 pi^4 + 60 pi^2 log^2 2 + 720 zeta(3) log 2)",
            lambda k: k.pi / 1440 * (11 * k.pi ** 4 + 60 * k.pi ** 2 * k.ln2 ** 2 + 720 * k.z3 * k.ln2),
            "printed", "x2logcos2"),
      Claim("parametric derivative of the cos^(p-1) cos(ax) integral",
            lambda k: -dehaan_closed_form(k.ctx, 1, 0, da=2, dp=2), "derived", "x2logcos2")])

_e("E8.55", "(8.55)", "int_0^{pi/2} cos^2 x log cos x",
   lambda k: k.q(lambda x, da, db: k.mp.sin(db) ** 2 * _log_cos(k, db), 0, PiMul(H), offsets=True),
   lambda k: k.pi / 4 * (k.r(H) - k.ln2))

_e("E8.58", "(8.58)", "int_0^{pi/2} x^2 cos^n x cos(nx)",
   lambda k, n: k.q(lambda x: x ** 2 * k.mp.cos(x) ** n * k.mp.cos(n * x), 0, PiMul(H)),
   lambda k, n: k.pi / 2 ** (n + 3) * (-k.r(sum(F(1, j) for j in range(1, n + 1))) ** 2 + 2 * k.zeta(2)
                                       - k.r(sum(F(1, j * j) for j in range(1, n + 1)))),
   params=(1, 2, 3))


def _harm_sum(k, f):
    h = k.harm()
    return k.geo(lambda n: f(h, n) / k.mp.mpf(2) ** n, H)


_e("E8.58a", "(8.58a)", "sum (H_n^2 + H_n^(2))/2^n and its closed form",
   lambda k, which: _harm_sum(k, lambda h, n: h.H(n) ** 2 + h.H(n, 2)) - 2 * k.zeta(2) if which == "series"
   else 2 * k.ln2 ** 2 + 4 * k.li(2, H) - 2 * k.zeta(2),
   lambda k, which: 2 * k.ln2 ** 2 + 4 * k.li(2, H) - 2 * k.zeta(2) if which == "series" else k.mp.mpf(0),
   params=("series", "closed"))

_adj("A-8.59", "(8.59), (8.60)", "int_0^{pi/2} x^3 cot x and sum H_n H_n^(2)/2^n",
     [("main", "quadrature", lambda k: k.q(lambda x: x ** 3 * k.mp.cot(x) if x else k.mp.mpf(0), 0, PiMul(H))),
      ("harmonic", "sum H_n H_n^(2)/2^n", lambda k: _harm_sum(k, lambda h, n: h.H(n) * h.H(n, 2)))],
     [Claim("pi^3/8 log 2 - 9/10 pi zeta(3)", lambda k: k.pi ** 3 / 8 * k.ln2 - F(9, 10) * k.pi * k.z3),
      Claim("pi^3/8 log 2 - 9/16 pi zeta(3)", lambda k: k.pi ** 3 / 8 * k.ln2 - F(9, 16) * k.pi * k.z3, "corrected"),
      Claim("pi^2 log 2 - 72/10 zeta(3) + 4 zeta(2) log 2 - 2 Li3(1/2)",
            lambda k: k.pi ** 2 * k.ln2 - F(72, 10) * k.z3 + 4 * k.zeta(2) * k.ln2 - 2 * k.li(3, H),
            "printed", "harmonic"),
      Claim("11/6 pi^2 log 2 - 179/20 zeta(3) - 1/3 log^3 2",
            lambda k: F(11, 6) * k.pi ** 2 * k.ln2 - F(179, 20) * k.z3 - k.ln2 ** 3 / 3,
            "printed", "harmonic"),
      Claim("3/2 zeta(3) - 1/3 log^3 2", lambda k: F(3, 2) * k.z3 - k.ln2 ** 3 / 3, "derived", "harmonic")])


def _c861(h, n, k):
    z2, z4 = k.zeta(2), k.zeta(4)
    return -2 * h.H(n) * h.H(n, 3) - 2 * (2 * z2 - h.H(n, 2)) ** 2 + 12 * z4 - 6 * h.H(n, 4)


def _c862(h, n, k):
    z2 = k.zeta(2)
    return -2 * (-2 * h.H(n) * (2 * z2 - h.H(n, 2)) + 2 * h.H(n, 3)) * h.H(n, 2)


_e("C-8.61", "(8.61)", "weighted harmonic sum with H^(3), H^(4)",
   lambda k: _harm_sum(k, lambda h, n: _c861(h, n, k)),
   lambda k: k.mp.mpf(0), status="conjecture")

_e("C-8.62", "(8.62)", "weighted harmonic sum with H H^(2), H^(3)",
   lambda k: _harm_sum(k, lambda h, n: _c862(h, n, k)),
   lambda k: k.mp.mpf(0), status="conjecture")
