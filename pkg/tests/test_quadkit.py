import mpmath
import pytest

from zil import DomainError
from zil.numkernel import constants
from zil.quadkit import dehaan_closed_form, integrate_fourier_coeff, integrate_semi_infinite, quad, quad_panels
from conftest import close


def test_polynomial(ctx):
    r = quad(ctx, lambda x: x ** 2, 0, 1)
    assert abs(r.value - ctx.mp.mpf(1) / 3) < ctx.mp.mpf(10) ** -45


def test_log_endpoint(ctx):
    r = quad(ctx, lambda x: ctx.mp.log(x), 0, 1)
    assert abs(r.value + 1) < ctx.mp.mpf(10) ** -45


def test_catalan_integral(ctx):
    mp = ctx.mp
    c = constants(ctx)
    r = quad(ctx, lambda x: x / mp.sin(x) if x else mp.mpf(1), 0, c.pi / 2)
    assert abs(r.value - 2 * c.catalan_G) < mp.mpf(10) ** -42
    assert r.err_estimate < mp.mpf(10) ** -35


def test_offsets_hint(ctx):
    # log(sin x) near x = pi with the offset from b passed in exactly
    mp = ctx.mp
    pi = constants(ctx).pi
    r = quad(ctx, lambda x, da, db: mp.log(mp.sin(db)), 0, pi / 2, ("offsets",))
    assert close(r.value, -pi / 2 * mp.log(2), 45)


def test_semi_infinite(ctx, ref):
    r = integrate_semi_infinite(ctx, lambda t: ctx.mp.exp(-t) / (1 + t * t))
    assert close(r.value, ref.quad(lambda t: ref.exp(-t) / (1 + t * t), [0, ref.inf]), 44)


def test_panels(ctx):
    pi = constants(ctx).pi
    r = quad_panels(ctx, lambda x: abs(ctx.mp.sin(x)), [0, pi, 2 * pi])
    assert abs(r.value - 4) < ctx.mp.mpf(10) ** -45


@pytest.mark.parametrize("n", [1, 2, 3])
def test_fourier_coeff(ctx, ref, n):
    v = integrate_fourier_coeff(ctx, lambda x: x * x, n, "cos").value
    assert close(v, 1 / (2 * ref.pi ** 2 * n ** 2), 44)
    with pytest.raises(DomainError):
        integrate_fourier_coeff(ctx, lambda x: x, 0, "sin")


def test_dehaan(ctx, ref):
    # I(0, 1) = pi/2; d/dp at p = 1 is int log cos = -pi/2 log 2
    assert close(dehaan_closed_form(ctx, 1, 0), ref.pi / 2, 45)
    assert close(dehaan_closed_form(ctx, 1, 0, dp=1), -ref.pi / 2 * ref.log(2), 45)
    # second a-derivative at a = 0, p = 1: -int_0^{pi/2} x^2 = -pi^3/24
    assert close(dehaan_closed_form(ctx, 1, 0, da=2), -ref.pi ** 3 / 24, 44)


def test_semi_infinite_power_decay(ctx, ref):
    r = integrate_semi_infinite(ctx, lambda x: 1 / x ** 2, 1)
    assert abs(r.value - 1) < ctx.mp.mpf(10) ** -42
    r = integrate_semi_infinite(ctx, lambda x: ctx.mp.log(x) / x ** 3, 1)
    assert abs(r.value - ctx.mp.mpf(1) / 4) < ctx.mp.mpf(10) ** -42
