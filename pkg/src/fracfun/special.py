"""Gamma-function layer and Pochhammer machinery.

Real arguments go through :mod:`math` (``gamma``/``lgamma``), complex ones
through :mod:`scipy.special`.  Products and ratios of Gamma values are
assembled by :func:`gamma_ratio`, which falls back to log space with a tracked
sign whenever the direct product would overflow.
"""

from __future__ import annotations

import cmath
import math
from typing import Iterable, NamedTuple, Union

from scipy import special as sc

from .errors import DomainError, PoleError

Number = Union[float, complex]

#: Distance below which an argument is treated as sitting on a Gamma pole.
POLE_TOL = 1e-9


def _real_or_none(z) -> float | None:
    if isinstance(z, complex):
        return z.real if z.imag == 0 else None
    return float(z)


def nonpositive_integer(z, tol: float = 0.0) -> int | None:
    """Return ``n`` if ``z`` lies within ``tol`` of the integer ``n <= 0``."""
    z = complex(z)
    if abs(z.imag) > tol:
        return None
    n = round(z.real)
    if n <= 0 and abs(z.real - n) <= tol:
        return int(n)
    return None


def is_integer(z, tol: float = 0.0) -> bool:
    z = complex(z)
    return abs(z.imag) <= tol and abs(z.real - round(z.real)) <= tol


def gamma(z: Number) -> Number:
    """Gamma function; raises :class:`PoleError` at ``0, -1, -2, ...``."""
    if nonpositive_integer(z) is not None:
        raise PoleError(f"Gamma has a pole at {z!r}")
    x = _real_or_none(z)
    if x is not None:
        return math.gamma(x)
    return complex(sc.gamma(complex(z)))


def log_gamma(z: float) -> float:
    """``ln Gamma(z)`` for real ``z > 0``."""
    z = float(z)
    if not z > 0:
        raise DomainError(f"log_gamma requires z > 0, got {z!r}")
    return math.lgamma(z)


def reciprocal_gamma(z: Number) -> Number:
    """``1/Gamma(z)``, entire; exactly ``0`` at the poles of Gamma."""
    if nonpositive_integer(z) is not None:
        return 0.0
    x = _real_or_none(z)
    if x is None:
        return complex(sc.rgamma(complex(z)))
    try:
        g = math.gamma(x)
    except OverflowError:
        return float(sc.rgamma(x))
    if g == 0.0 or math.isinf(g):
        return float(sc.rgamma(x))
    return 1.0 / g


def _gamma_sign(x: float) -> int:
    if x > 0:
        return 1
    return 1 if math.floor(x) % 2 == 0 else -1


def gamma_ratio(num: Iterable[Number], den: Iterable[Number]) -> Number:
    """``prod Gamma(num) / prod Gamma(den)`` with overflow-safe assembly.

    A pole in ``den`` makes the ratio vanish; a pole in ``num`` that is not
    matched by one in ``den`` raises :class:`PoleError`.  Matched pole pairs
    are not resolved here (see :func:`pochhammer_regularized`).
    """
    num, den = list(num), list(den)
    num_poles = [z for z in num if nonpositive_integer(z) is not None]
    den_poles = [z for z in den if nonpositive_integer(z) is not None]
    if num_poles:
        raise PoleError(f"Gamma pole in numerator at {num_poles!r}")
    if den_poles:
        return 0.0

    reals = [_real_or_none(z) for z in num + den]
    if all(r is not None for r in reals):
        num_r, den_r = reals[: len(num)], reals[len(num):]
        if all(abs(r) < 170.0 for r in reals):
            out = 1.0
            for i in range(max(len(num_r), len(den_r))):
                if i < len(num_r):
                    out *= math.gamma(num_r[i])
                if i < len(den_r):
                    out /= math.gamma(den_r[i])
            if math.isfinite(out) and out != 0.0:
                return out
        log_mag = sum(math.lgamma(r) for r in num_r) - sum(math.lgamma(r) for r in den_r)
        sign = 1
        for r in num_r + den_r:
            sign *= _gamma_sign(r)
        return sign * math.exp(log_mag)

    log_val = sum(complex(sc.loggamma(complex(z))) for z in num)
    log_val -= sum(complex(sc.loggamma(complex(z))) for z in den)
    return cmath.exp(log_val)


def beta(p: float, q: float) -> float:
    """Euler Beta function for ``p, q > 0``."""
    if not (p > 0 and q > 0):
        raise DomainError(f"beta requires p > 0 and q > 0, got ({p!r}, {q!r})")
    return gamma_ratio([p, q], [p + q])


def pochhammer(a: Number, k: int) -> Number:
    """Rising factorial ``a (a+1) ... (a+k-1)``."""
    if int(k) != k or k < 0:
        raise DomainError(f"pochhammer needs a nonnegative integer k, got {k!r}")
    out = 1.0
    for i in range(int(k)):
        out *= a + i
    return out


def binomial_general(z: Number, k: Number) -> Number:
    """Binomial coefficient with arbitrary upper argument.

    Integer ``k >= 0`` uses the falling product ``z (z-1) ... (z-k+1) / k!``;
    any other ``k`` goes through ``Gamma(z+1) / (Gamma(k+1) Gamma(z-k+1))``.
    """
    if is_integer(k):
        k = int(round(complex(k).real))
        if k < 0:
            return 0.0
        out = 1.0
        for i in range(k):
            out *= (z - i) / (i + 1)
        return out
    return gamma(z + 1) * reciprocal_gamma(k + 1) * reciprocal_gamma(z - k + 1)


def _sincospi(t: float) -> tuple[float, float]:
    r = math.fmod(t, 2.0)
    if r < 0:
        r += 2.0
    q = round(2.0 * r)
    y = r - 0.5 * q
    s, c = math.sin(math.pi * y), math.cos(math.pi * y)
    q %= 4
    if q == 0:
        return s, c
    if q == 1:
        return c, -s
    if q == 2:
        return -s, -c
    return -c, s


def cis_pi(t: Number) -> complex:
    """``exp(i pi t)``, exact at (half-)integers for real ``t``."""
    t = complex(t)
    s, c = _sincospi(t.real)
    scale = math.exp(-math.pi * t.imag) if t.imag else 1.0
    return complex(scale * c, scale * s)


def principal_power(base: Number, exponent: Number) -> complex:
    """``exp(exponent * Log(base))`` with the principal logarithm.

    Negative real bases use ``Log(-r) = ln r + i pi``, so ``(-1)**nu`` is
    ``exp(i pi nu)``.
    """
    base = complex(base)
    if base == 0:
        if complex(exponent).real > 0:
            return 0j
        raise DomainError("0 raised to a nonpositive power")
    if base.imag == 0 and base.real < 0:
        return cmath.exp(complex(exponent) * math.log(-base.real)) * cis_pi(exponent)
    return cmath.exp(complex(exponent) * cmath.log(base))


class GenPochhammer(NamedTuple):
    """Value of ``(alpha)_beta`` tagged with the branch of its definition.

    ``case`` is one of ``"ratio"``, ``"one"``, ``"zero"``, ``"undefined"``;
    ``value`` is ``None`` for the undefined branch.
    """

    value: Number | None
    case: str


def pochhammer_general(alpha: Number, beta: Number) -> GenPochhammer:
    """Generalized Pochhammer symbol ``(alpha)_beta`` with its four branches."""
    a_pole = nonpositive_integer(alpha, POLE_TOL)
    ab_pole = nonpositive_integer(alpha + beta, POLE_TOL)
    if a_pole is None and ab_pole is None:
        if is_integer(beta) and complex(beta).real >= 0:
            return GenPochhammer(pochhammer(alpha, int(round(complex(beta).real))), "ratio")
        return GenPochhammer(gamma_ratio([alpha + beta], [alpha]), "ratio")
    if a_pole == 0:
        b_pole = nonpositive_integer(beta, POLE_TOL)
        if b_pole == 0:
            return GenPochhammer(1.0, "one")
        if b_pole is None:
            return GenPochhammer(0.0, "zero")
    return GenPochhammer(None, "undefined")


def pochhammer_regularized(alpha: Number, beta: Number) -> Number:
    """``(alpha)_beta`` continued through the undefined branch at ``alpha = -N``.

    For ``alpha = -N`` the reflection formula gives
    ``(-N)_beta = exp(i pi beta) Gamma(N+1) / Gamma(N+1-beta)``, which
    reproduces the falling product ``(-N)(-N+1)...(-N+m-1)`` for integer
    ``beta = m`` and the pole-pair limit for negative integer ``beta``.
    Outside the undefined branch this is :func:`pochhammer_general`.
    """
    g = pochhammer_general(alpha, beta)
    if g.case != "undefined":
        return g.value
    n = nonpositive_integer(alpha, POLE_TOL)
    if n is None:
        raise PoleError(f"({alpha!r})_({beta!r}): alpha + beta is a pole and alpha is regular")
    big_n = -n
    if is_integer(beta):
        m = int(round(complex(beta).real))
        if m >= 0:
            return pochhammer(float(n), m)
        return (-1) ** m * reciprocal_gamma(big_n + 1 - m) * math.gamma(big_n + 1)
    return cis_pi(beta) * math.gamma(big_n + 1) * reciprocal_gamma(big_n + 1 - beta)
