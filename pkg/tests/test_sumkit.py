from fractions import Fraction as F

import mpmath
import pytest

from zil import DomainError
from zil import sumkit as sk
from conftest import close


def test_geometric(ctx, ref):
    r = sk.sum_series(ctx, sk.TermGenerator(lambda n: ctx.mp.mpf(1) / (n * 3 ** n), 1, "geometric", F(1, 3)))
    assert close(r.value, ref.log(ref.mpf(3) / 2), 45)


def test_power_levin(ctx, ref):
    r = sk.sum_series(ctx, sk.TermGenerator(lambda n: 1 / ctx.mp.mpf(n) ** 2, 1, "power", 2))
    assert close(r.value, ref.pi ** 2 / 6, 45)
    assert r.terms_used <= 10**4


def test_power_slow_tail(ctx, ref):
    r = sk.sum_series(ctx, sk.TermGenerator(lambda n: ctx.mp.log(n) / ctx.mp.mpf(n) ** 3, 2, "power", 3))
    assert close(r.value, -ref.zeta(3, 1, 1), 40)


def test_alternating(ctx, ref):
    r = sk.sum_alternating(ctx, sk.TermGenerator(lambda n: ctx.mp.mpf(-1) ** (n + 1) / n, 1, "alternating"))
    assert close(r.value, ref.log(2), 45)


def test_alternating_rejects_constant_sign(ctx):
    with pytest.raises(sk.ClassificationError):
        sk.sum_alternating(ctx, sk.TermGenerator(lambda n: ctx.mp.mpf(1) / n ** 2, 1, "alternating"))


def test_geometric_misdeclared(ctx):
    with pytest.raises(sk.ClassificationError):
        sk.sum_series(ctx, sk.TermGenerator(lambda n: ctx.mp.mpf(1) / n, 1, "geometric", F(1, 2)))


def test_trig_series(ctx, ref):
    th = ctx.mp.mpf(1)
    r = sk.sum_trig_series(ctx, lambda n: 1 / n, th, "sin")
    assert close(r.value, (ref.pi - 1) / 2, 40)


def test_sici_weighted_matches_mpmath(ctx, ref):
    # sum Ci(2 n pi)/n^2 and sum (-1)^n si(n pi)/n
    v = sk.sum_sici_weighted(ctx, "Ci", 2, 2).value
    oracle = ref.nsum(lambda n: ref.ci(2 * n * ref.pi) / n ** 2, [1, ref.inf])
    assert close(v, oracle, 25)
    w = sk.sum_sici_weighted(ctx, "si", 1, 1, sk.ALTERNATING).value
    assert close(w, ref.pi / 2 * ref.log(2) - ref.pi / 2, 40)


def test_sici_weighted_domain(ctx):
    with pytest.raises(DomainError):
        sk.sum_sici_weighted(ctx, "Ci", 2, 0)


@pytest.mark.parametrize("s", [2, 3, 4])
def test_euler_binomial(ctx, ref, s):
    assert close(sk.euler_binomial_double_sum(ctx, s).value, 2 * ref.zeta(s), 40)


def test_double_factorial_ratio():
    assert sk.double_factorial_ratio(0) == 1
    assert sk.double_factorial_ratio(1) == F(2, 3)
    assert sk.double_factorial_ratio(3) == F(48, 105)


def test_wiener_exact():
    # int_0^{pi/3} sin^3 = 2/3 - cos(pi/3) + cos^3(pi/3)/3 = 5/24
    assert sk.wiener_odd_power_integral(1, F(1, 3)) == F(5, 24)


def test_wiener_against_quadrature(ctx, ref):
    v = sk.wiener_odd_power_integral(3, ctx.mp.mpf("0.7"), "cos", ctx)
    assert close(v, ref.quad(lambda x: ref.cos(x) ** 7, [0, ref.mpf("0.7")]), 44)


def test_harmonic_table(ctx):
    h = sk.harmonic_table(ctx, 400)
    assert h.exact(4) == F(25, 12)
    assert h.exact(3, 2) == F(49, 36)
    assert h.odd_exact(2) == F(4, 3)
    assert close(h.H(400), mpmath.harmonic(400), 45)
    assert sk.harmonic_table(ctx, 400) is h
