"""Precision context and fundamental constants.

Every numerical routine in the package takes a :class:`Context` as its first
argument.  A context owns a private ``mpmath.MPContext`` fixed at
``digits + guard`` decimal digits, so evaluations never touch mpmath's global
precision and separate contexts can coexist in one process.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Any, Callable, Dict

import mpmath

__all__ = [
    "ConfigurationError",
    "DomainError",
    "ConvergenceError",
    "Context",
    "Constants",
    "make_context",
    "default_digits",
    "const_pi",
    "const_euler_gamma",
    "const_log2",
    "const_catalan",
    "const_zeta3",
    "const_log_glaisher_A",
    "const_log_glaisher_B",
    "constants",
]

MIN_DIGITS = 16


class ConfigurationError(ValueError):
    """Invalid context configuration."""


class DomainError(ValueError):
    """Argument outside the domain of a function."""


class ConvergenceError(ArithmeticError):
    """An iterative evaluation did not reach its target.

    ``partial`` carries the best value obtained so far (an ``EvalResult``
    or a bare number) so callers can still report it.
    """

    def __init__(self, message: str, partial: Any = None):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class Context:
    """Working-precision configuration.

    Parameters
    ----------
    digits:
        Target decimal precision of results (at least 16).
    guard:
        Extra internal digits carried by every evaluation.
    max_series_terms:
        Hard cap on the number of terms any series routine may add.
    max_quad_level:
        Deepest level-halving step the double-exponential rules may take.
    """

    digits: int = 40
    guard: int = 10
    max_series_terms: int = 10**6
    max_quad_level: int = 12
    mp: Any = field(init=False, repr=False, compare=False)
    _cache: Dict[Any, Any] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.digits, int) or self.digits < MIN_DIGITS:
            raise ConfigurationError(f"digits must be an integer >= {MIN_DIGITS}, got {self.digits!r}")
        if self.guard < 0:
            raise ConfigurationError("guard must be non-negative")
        if self.max_series_terms < 1 or self.max_quad_level < 1:
            raise ConfigurationError("term and level limits must be positive")
        mp = mpmath.MPContext()
        mp.dps = self.digits + self.guard
        object.__setattr__(self, "mp", mp)
        object.__setattr__(self, "_cache", {})

    def __reduce__(self):
        # the private MPContext is rebuilt on unpickling
        return (Context, (self.digits, self.guard, self.max_series_terms, self.max_quad_level))

    # -- precision helpers -------------------------------------------------
    @property
    def working_digits(self) -> int:
        return self.digits + self.guard

    @property
    def eps(self):
        """Unit of the working precision, 10^-(digits+guard)."""
        return self.mp.mpf(10) ** (-self.working_digits)

    def tol(self, drop: int = 0):
        """10^-(digits-drop), a target-relative tolerance."""
        return self.mp.mpf(10) ** (-(self.digits - drop))

    def mpf(self, x) -> Any:
        return self.mp.mpf(x)

    def extra(self, n: int):
        """Context manager raising the private precision by ``n`` digits."""
        return self.mp.extradps(n)

    def cached(self, key, compute: Callable[[], Any]):
        """Return ``compute()`` memoised under ``key`` for this context."""
        try:
            return self._cache[key]
        except KeyError:
            val = compute()
            self._cache[key] = val
            return val

    def snapshot(self) -> dict:
        return {
            "digits": self.digits,
            "guard": self.guard,
            "max_series_terms": self.max_series_terms,
            "max_quad_level": self.max_quad_level,
        }


def default_digits() -> int:
    """Default precision, overridable through ``ZIL_DIGITS``."""
    raw = os.environ.get("ZIL_DIGITS")
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise ConfigurationError(f"ZIL_DIGITS is not an integer: {raw!r}") from exc
    return 40


def make_context(digits: int | None = None, **kwargs) -> Context:
    """Build a context; ``digits`` defaults to :func:`default_digits`."""
    return Context(digits=default_digits() if digits is None else digits, **kwargs)


# -- constants -------------------------------------------------------------

def const_pi(ctx: Context):
    return ctx.cached("pi", lambda: +ctx.mp.pi)


def const_euler_gamma(ctx: Context):
    return ctx.cached("euler", lambda: +ctx.mp.euler)


def const_log2(ctx: Context):
    return ctx.cached("log2", lambda: +ctx.mp.ln2)


def const_catalan(ctx: Context):
    """G = beta(2) = (zeta(2,1/4) - zeta(2,3/4)) / 16."""
    from . import specfun

    def compute():
        q = ctx.mpf(1) / 4
        return (specfun.hurwitz_zeta(ctx, 2, q) - specfun.hurwitz_zeta(ctx, 2, 3 * q)) / 16

    return ctx.cached("catalan", compute)


def const_zeta3(ctx: Context):
    from . import specfun

    return ctx.cached("zeta3", lambda: specfun.hurwitz_zeta(ctx, 3, 1))


def const_log_glaisher_A(ctx: Context):
    """log A = 1/12 - zeta'(-1)."""
    from . import specfun

    return ctx.cached("logA", lambda: ctx.mpf(1) / 12 - specfun.zeta_sderiv(ctx, -1))


def const_log_glaisher_B(ctx: Context):
    """log B = -zeta'(-2) = zeta(3) / (4 pi^2)."""
    return ctx.cached("logB", lambda: const_zeta3(ctx) / (4 * const_pi(ctx) ** 2))


@dataclass(frozen=True)
class Constants:
    pi: Any
    euler_gamma: Any
    log2: Any
    catalan_G: Any
    log_glaisher_A: Any
    log_glaisher_B: Any
    zeta3: Any


def constants(ctx: Context) -> Constants:
    return Constants(
        pi=const_pi(ctx),
        euler_gamma=const_euler_gamma(ctx),
        log2=const_log2(ctx),
        catalan_G=const_catalan(ctx),
        log_glaisher_A=const_log_glaisher_A(ctx),
        log_glaisher_B=const_log_glaisher_B(ctx),
        zeta3=const_zeta3(ctx),
    )

