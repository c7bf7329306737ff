"""Generalized hypergeometric series pFq.

The engine sums the series with the term recurrence

    t_{k+1} = t_k * prod(a_i + k) / prod(b_j + k) * z / (k + 1)

in compensated (Neumaier) arithmetic, stops exactly on termination, and
otherwise stops once a geometric bound on the tail is below ``tol`` relative
to the partial sum for three consecutive terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ConvergenceError, DivergenceError, DomainError
from .special import Number, nonpositive_integer, pochhammer, principal_power

DEFAULT_TOL = 1e-12
MAX_TERMS = 100_000
_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class HyperSeriesSpec:
    """Parameters and argument of one pFq evaluation."""

    num: tuple
    den: tuple
    z: complex

    def __init__(self, num: Sequence[Number], den: Sequence[Number], z: Number):
        object.__setattr__(self, "num", tuple(num))
        object.__setattr__(self, "den", tuple(den))
        object.__setattr__(self, "z", z)

    @property
    def p(self) -> int:
        return len(self.num)

    @property
    def q(self) -> int:
        return len(self.den)

    def termination(self) -> int | None:
        """Smallest ``m`` with some numerator parameter equal to ``-m``."""
        ms = [-n for n in map(nonpositive_integer, self.num) if n is not None]
        return min(ms) if ms else None

    def validate(self) -> int | None:
        """Check the spec can be summed; return the termination index or None."""
        m = self.termination()
        for b in self.den:
            nb = nonpositive_integer(b)
            if nb is not None and (m is None or -nb < m):
                raise DomainError(
                    f"denominator parameter {b!r} is a pole reached before termination"
                )
        if m is None:
            if self.p > self.q + 1 and self.z != 0:
                raise DivergenceError(
                    f"non-terminating {self.p}F{self.q} diverges for z != 0"
                )
            if self.p == self.q + 1 and abs(self.z) >= 1:
                raise DivergenceError(
                    f"non-terminating {self.p}F{self.q} needs |z| < 1, got |z| = {abs(self.z)}"
                )
        return m


@dataclass(frozen=True)
class EvalResult:
    """A series value with its truncation-error estimate."""

    value: Number
    abs_error_estimate: float
    terms_used: int
    terminated: bool

    def scaled(self, factor: Number) -> "EvalResult":
        return EvalResult(
            self.value * factor,
            self.abs_error_estimate * abs(factor),
            self.terms_used,
            self.terminated,
        )


def _sort_key(c):
    c = complex(c)
    return (c.real, c.imag)


def phyperq(spec: HyperSeriesSpec, tol: float = DEFAULT_TOL,
            max_terms: int = MAX_TERMS) -> EvalResult:
    """Sum the series described by ``spec``.

    Real parameters and argument give a real value; anything complex gives a
    complex one.  Parameters are sorted before summation so that permuting
    them yields bit-identical results.
    """
    m = spec.validate()
    num = sorted(spec.num, key=_sort_key)
    den = sorted(spec.den, key=_sort_key)
    z = spec.z
    if all(not isinstance(v, complex) for v in (*num, *den, z)):
        num, den, z = [float(a) for a in num], [float(b) for b in den], float(z)

    limit_ratio = abs(z) if spec.p == spec.q + 1 else 0.0
    term = 1.0 if isinstance(z, float) else 1.0 + 0j
    total, comp = term * 0, term * 0
    biggest = 0.0
    streak = 0
    k = 0
    while True:
        if k >= max_terms:
            raise ConvergenceError(
                f"{spec.p}F{spec.q} did not converge within {max_terms} terms"
            )
        # Neumaier summation of term k
        s = total + term
        if abs(total) >= abs(term):
            comp += (total - s) + term
        else:
            comp += (term - s) + total
        total = s
        biggest = max(biggest, abs(term))
        if m is not None and k == m:
            return EvalResult(total + comp, 0.0, k + 1, True)

        ratio = z / (k + 1)
        for a in num:
            ratio *= a + k
        for b in den:
            ratio /= b + k
        nxt = term * ratio
        k += 1

        if m is None:
            r = max(abs(ratio), limit_ratio)
            if r < 1.0:
                tail = abs(nxt) / (1.0 - r)
                current = abs(total + comp)
                if tail <= tol * current or tail <= _EPS * biggest:
                    streak += 1
                    if streak >= 3:
                        return EvalResult(total + comp, tail, k, False)
                else:
                    streak = 0
            else:
                streak = 0
        term = nxt


def hyper(num: Sequence[Number], den: Sequence[Number], z: Number,
          tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS) -> EvalResult:
    """Shorthand for ``phyperq(HyperSeriesSpec(num, den, z), ...)``."""
    return phyperq(HyperSeriesSpec(num, den, z), tol=tol, max_terms=max_terms)


def gauss_2f1_euler(a: Number, b: Number, c: Number, z: Number,
                    tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS) -> EvalResult:
    """2F1 through ``(1-z)^(-a) 2F1(a, c-b; c; z/(z-1))``."""
    if z == 1:
        raise DomainError("Euler transformation is singular at z = 1")
    w = z / (z - 1)
    res = hyper([a, c - b], [c], w, tol=tol, max_terms=max_terms)
    factor = principal_power(1 - z, -a)
    if isinstance(res.value, float) and factor.imag == 0:
        factor = factor.real
    return res.scaled(factor)


def hyp2f1(a: Number, b: Number, c: Number, z: Number,
           tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS) -> EvalResult:
    """Gauss 2F1, switching to the Euler transform when it shrinks the argument."""
    spec = HyperSeriesSpec([a, b], [c], z)
    if spec.termination() is None and z != 1 and abs(z / (z - 1)) < abs(z):
        return gauss_2f1_euler(a, b, c, z, tol=tol, max_terms=max_terms)
    return phyperq(spec, tol=tol, max_terms=max_terms)


def hyper_derivative(num: Sequence[Number], den: Sequence[Number], z: Number, k: int,
                     tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS) -> Number:
    """k-th derivative in ``z`` by parameter shift.

    ``d^k/dz^k pFq(a; b; z) = prod (a)_k / prod (b)_k * pFq(a+k; b+k; z)``.
    """
    if k == 0:
        if len(num) == 2 and len(den) == 1:
            return hyp2f1(*num, *den, z, tol=tol, max_terms=max_terms).value
        return hyper(num, den, z, tol=tol, max_terms=max_terms).value
    coef = 1.0
    for a in num:
        coef *= pochhammer(a, k)
    for b in den:
        coef /= pochhammer(b, k)
    if coef == 0:
        return 0.0 * coef
    shifted_num = [a + k for a in num]
    shifted_den = [b + k for b in den]
    if len(num) == 2 and len(den) == 1:
        val = hyp2f1(*shifted_num, *shifted_den, z, tol=tol, max_terms=max_terms).value
    else:
        val = hyper(shifted_num, shifted_den, z, tol=tol, max_terms=max_terms).value
    return coef * val


def hyper_2f1_derivative(a: Number, b: Number, c: Number, z: Number, k: int,
                         tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS) -> Number:
    """``d^k/dz^k 2F1(a, b; c; z)``."""
    return hyper_derivative([a, b], [c], z, k, tol=tol, max_terms=max_terms)


def gauss_ode_residual(a: Number, b: Number, c: Number, z: Number,
                       tol: float = DEFAULT_TOL) -> float:
    """Absolute residual of ``z(1-z)y'' + [c-(a+b+1)z]y' - ab y`` for ``y = 2F1(a, b; c; z)``."""
    if z == 0 or z == 1:
        raise DomainError("the Gauss equation is singular at z = 0 and z = 1")
    y, dy, d2y = (hyper_2f1_derivative(a, b, c, z, k, tol=tol) for k in range(3))
    return abs(z * (1 - z) * d2y + (c - (a + b + 1) * z) * dy - a * b * y)


def is_terminating(num: Sequence[Number]) -> bool:
    return any(nonpositive_integer(a) is not None for a in num)


def magnitude(value: Number) -> float:
    return math.hypot(value.real, value.imag) if isinstance(value, complex) else abs(value)
