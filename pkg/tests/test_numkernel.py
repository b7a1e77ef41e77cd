import pickle

import mpmath
import pytest

from zil import ConfigurationError, make_context
from zil.numkernel import Context, constants, default_digits
from conftest import close


def test_rejects_low_precision():
    with pytest.raises(ConfigurationError):
        Context(digits=10)


def test_negative_guard():
    with pytest.raises(ConfigurationError):
        Context(digits=20, guard=-1)


def test_env_digits(monkeypatch):
    monkeypatch.setenv("ZIL_DIGITS", "33")
    assert default_digits() == 33
    monkeypatch.setenv("ZIL_DIGITS", "banana")
    with pytest.raises(ConfigurationError):
        default_digits()


def test_private_precision_leaves_global_alone():
    before = mpmath.mp.dps
    make_context(80).mp.pi
    assert mpmath.mp.dps == before


def test_pickle_roundtrip():
    c = make_context(35, guard=7)
    c2 = pickle.loads(pickle.dumps(c))
    assert c2.snapshot() == c.snapshot()
    assert c2.mp.dps == c.mp.dps


def test_constants_against_mpmath(ctx, ref):
    c = constants(ctx)
    assert close(c.pi, ref.pi, 45)
    assert close(c.euler_gamma, ref.euler, 45)
    assert close(c.log2, ref.log(2), 45)
    assert close(c.catalan_G, ref.catalan, 45)
    assert close(c.zeta3, ref.zeta(3), 45)
    assert close(c.log_glaisher_A, ref.log(ref.glaisher), 45)
    assert close(c.log_glaisher_B, ref.zeta(3) / (4 * ref.pi ** 2), 45)


def test_low_precision_values():
    c = constants(make_context(16))
    assert mpmath.nstr(c.catalan_G, 20).startswith("0.915965594177219")
    assert mpmath.nstr(c.log_glaisher_A, 16) == "0.2487544770337843"


def test_precision_monotone():
    lo, hi = constants(make_context(16)), constants(make_context(40))
    for name in ("pi", "euler_gamma", "catalan_G", "zeta3", "log_glaisher_A"):
        a, b = getattr(lo, name), getattr(hi, name)
        assert abs(a - b) <= abs(b) * mpmath.mpf(10) ** -16


def test_constants_deterministic():
    a, b = constants(make_context(40)), constants(make_context(40))
    assert a.catalan_G == b.catalan_G and a.zeta3 == b.zeta3


def test_sin_pi_vanishes(ctx):
    assert abs(ctx.mp.sin(constants(ctx).pi)) < ctx.mp.mpf(10) ** -40
