"""Property suites, run at 30 and 40 digits."""
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from zil import make_context
from zil import specfun as sf
from zil.numkernel import constants
from zil.quadkit import quad

CTX = {d: make_context(d) for d in (30, 40)}
DIGITS = pytest.mark.parametrize("d", [30, 40])
fast = settings(max_examples=20, deadline=None)


def tol(ctx, drop):
    return ctx.mp.mpf(10) ** (-(ctx.digits - drop))


def rel(ctx, a, b):
    return abs(a - b) / max(abs(b), ctx.mp.mpf(10) ** -ctx.digits)


unit = st.fractions(min_value=F(1, 1000), max_value=F(999, 1000))


@DIGITS
@fast
@given(x=unit)
def test_reflection(d, x):
    k = CTX[d]
    mp, pi = k.mp, constants(k).pi
    lhs = sf.log_gamma(k, x) + sf.log_gamma(k, 1 - x)
    rhs = mp.log(pi) - mp.log(mp.sin(pi * sf.to_real(k, x)))
    assert abs(lhs - rhs) < tol(k, 5)


@DIGITS
@fast
@given(a=st.fractions(min_value=F(1, 100), max_value=F(2)))
def test_duplication(d, a):
    k = CTX[d]
    mp = k.mp
    lhs = mp.sqrt(constants(k).pi) * sf.gamma(k, 2 * a)
    rhs = mp.mpf(2) ** (2 * sf.to_real(k, a) - 1) * sf.gamma(k, a) * sf.gamma(k, a + F(1, 2))
    assert rel(k, lhs, rhs) < tol(k, 5)


@DIGITS
@pytest.mark.parametrize("s", [2, 3, 4, -1, -2])
def test_hurwitz_half(d, s):
    k = CTX[d]
    lhs = sf.hurwitz_zeta(k, s, F(1, 2))
    rhs = (k.mp.mpf(2) ** s - 1) * sf.zeta(k, s)
    assert abs(lhs - rhs) < tol(k, 5) * max(1, abs(rhs))


@DIGITS
@pytest.mark.parametrize("theta", ["0.5", "1.0", "2.0"])
def test_clausen_derivative(d, theta):
    k = CTX[d]
    mp = k.mp
    th = mp.mpf(theta)
    h = mp.mpf(10) ** (-(d // 2))
    diff = (sf.clausen(k, 2, th + h) - sf.clausen(k, 2, th - h)) / (2 * h)
    # truncation O(h^2) plus rounding O(eps/h)
    assert abs(diff + mp.log(abs(2 * mp.sin(th / 2)))) < 10 * h * h + 100 * k.eps / h


@DIGITS
@pytest.mark.parametrize("j", range(5))
def test_beta_odd_from_euler_numbers(d, j):
    k = CTX[d]
    mp, pi = k.mp, constants(k).pi
    n = 2 * j
    via_euler = (-1) ** j * sf.euler_number(n) * pi ** (n + 1) / (4 ** (j + 1) * mp.factorial(n))
    assert rel(k, via_euler, sf.dirichlet_beta(k, 2 * j + 1)) < tol(k, 5)


@DIGITS
@fast
@given(alpha=st.fractions(min_value=F(1, 50), max_value=F(3)))
def test_s2_splitting(d, alpha):
    # S_2(a) = sum over odd n of sin(n a)/n^2 = Cl_2(a) - Cl_2(2a)/4;
    # oracle: Im chi_2(e^{ia}) from mpmath's complex dilogarithm
    import mpmath

    k = CTX[d]
    a = sf.to_real(k, alpha)
    odd = sf.clausen(k, 2, a) - sf.clausen(k, 2, 2 * a) / 4
    with mpmath.workdps(d + 15):
        z = mpmath.expj(mpmath.mpf(alpha.numerator) / alpha.denominator)
        chi = ((mpmath.polylog(2, z) - mpmath.polylog(2, -z)) / 2).imag
    assert abs(odd - k.mp.mpf(chi)) < tol(k, 5)


@DIGITS
@pytest.mark.parametrize("t", [F(1, 10), F(3, 10), F(7, 10)])
def test_bernoulli_fourier(d, t):
    from zil.sumkit import sum_trig_series

    k = CTX[d]
    pi = constants(k).pi
    series = sum_trig_series(k, lambda n: 1 / n ** 2, 2 * pi * sf.to_real(k, t), "cos").value
    rhs = 4 * series / (2 * pi) ** 2
    assert abs(sf.poly_eval(k, sf.bernoulli_poly(2), t) - rhs) < tol(k, 5)


@DIGITS
@pytest.mark.parametrize("z", [F(1, 4), F(1, 3), F(1, 2)])
def test_barnes_cross_route(d, z):
    # log G(1+z) - log G(1-z) = z log 2 pi - int_0^z pi t cot(pi t) dt
    k = CTX[d]
    mp, pi = k.mp, constants(k).pi
    zr = sf.to_real(k, z)
    integral = quad(k, lambda t: pi * t * mp.cot(pi * t) if t else mp.mpf(1), 0, zr).value
    lhs = sf.barnes_logG(k, 1 + z) - sf.barnes_logG(k, 1 - z)
    assert abs(lhs - (zr * mp.log(2 * pi) - integral)) < tol(k, 8)


@DIGITS
@pytest.mark.parametrize("side", [-1, 1])
def test_sici_crossover_continuity(d, side):
    k = CTX[d]
    mp = k.mp
    x = mp.mpf(sf.sici_crossover(k)) + side
    s_t, c_t = sf._sici_taylor(k, x)
    f = sf._aux_quad(k, x, "f")
    g = sf._aux_quad(k, x, "g")
    s_a = constants(k).pi / 2 - f * mp.cos(x) - g * mp.sin(x)
    c_a = f * mp.sin(x) - g * mp.cos(x)
    assert abs(s_t - s_a) < tol(k, 3)
    assert abs(c_t - c_a) < tol(k, 3)


@DIGITS
def test_splitting_identity(d):
    # alternating sum = 2 * (even part) - (full sum), for sum Ci(n pi)/n^2
    from zil.identities import Kit
    from zil.sumkit import ALTERNATING

    k = CTX[d]
    kit = Kit(k)
    alt = kit.sici("Ci", 2, 1, ALTERNATING)
    full = kit.sici("Ci", 2, 1)
    even = kit.sici("Ci", 2, 2) / 4
    assert abs(alt - (2 * even - full)) < tol(k, 10)
    pi, logA, ln2 = constants(k).pi, constants(k).log_glaisher_A, constants(k).log2
    assert abs(alt - pi ** 2 * (ln2 / 6 + F(1, 8) - logA)) < tol(k, 10)
    assert abs(even * 4 - 2 * pi ** 2 * (logA - F(1, 4))) < tol(k, 10)
