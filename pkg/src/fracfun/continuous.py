"""Riemann-Liouville and Caputo operators on the real line.

Quadrature forms go through :func:`scipy.integrate.quad` after a change of
variables that absorbs the weakly singular kernel, so the integrand handed to
the quadrature is bounded.  Power functions have exact fast paths.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Sequence

from scipy import integrate

from .errors import ConvergenceError, DomainError
from .hypergeom import EvalResult, hyper
from .special import binomial_general, gamma_ratio, reciprocal_gamma

#: Orders this close to an integer use the classical derivative.
INTEGER_TOL = 1e-9
NEAR_INTEGER_FLAG = 1e-6
DEFAULT_TOL = 1e-10
_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class FractionalOrder:
    """A positive order ``nu`` with ``n - 1 < nu <= n``."""

    nu: float

    def __post_init__(self):
        if not self.nu > 0:
            raise DomainError(f"fractional order must be positive, got {self.nu!r}")

    @property
    def n(self) -> int:
        if self.is_integer:
            return int(round(self.nu))
        return math.ceil(self.nu)

    @property
    def near_integer(self) -> bool:
        return abs(self.nu - round(self.nu)) < NEAR_INTEGER_FLAG

    @property
    def is_integer(self) -> bool:
        return abs(self.nu - round(self.nu)) < INTEGER_TOL


def _as_order(nu) -> FractionalOrder:
    return nu if isinstance(nu, FractionalOrder) else FractionalOrder(float(nu))


def central_derivative(func: Callable[[float], float], x: float, k: int,
                       h: float | None = None) -> float:
    """k-th derivative by a central stencil with one Richardson step.

    The stencil samples ``x + (k/2 - i) h`` for ``i = 0..k``; combining steps
    ``h`` and ``h/2`` cancels the ``h^2`` error term.
    """
    if k == 0:
        return func(x)
    if h is None:
        h = _EPS ** (1.0 / (k + 4)) * max(1.0, abs(x))

    def stencil(step):
        acc = 0.0
        for i in range(k + 1):
            acc += (-1) ** i * math.comb(k, i) * func(x + (k / 2 - i) * step)
        return acc / step ** k

    return (4.0 * stencil(h / 2) - stencil(h)) / 3.0


@dataclass
class SmoothFunction:
    """A real function with optional known derivatives and a lower limit.

    ``derivatives[k-1]`` is the k-th derivative; ``nth(k, x)``, when given,
    supplies any order.  Missing orders fall back to finite differences.
    """

    func: Callable[[float], float]
    derivatives: Sequence[Callable[[float], float]] = field(default_factory=tuple)
    a: float = 0.0
    nth: Callable[[int, float], float] | None = None

    def __call__(self, x: float) -> float:
        return self.func(x)

    def derivative(self, k: int, x: float) -> float:
        if k == 0:
            return self.func(x)
        if self.nth is not None:
            return self.nth(k, x)
        if k <= len(self.derivatives):
            return self.derivatives[k - 1](x)
        return central_derivative(self.func, x, k)

    def derivative_function(self, k: int) -> Callable[[float], float]:
        return lambda x: self.derivative(k, x)


def _wrap(f, a=None) -> SmoothFunction:
    if isinstance(f, SmoothFunction):
        if a is not None and a != f.a:
            return SmoothFunction(f.func, f.derivatives, float(a), f.nth)
        return f
    return SmoothFunction(f, a=0.0 if a is None else float(a))


def power_function(beta: float, a: float = 0.0) -> SmoothFunction:
    """``(x - a)^beta`` with exact derivatives."""

    def nth(k, x):
        coef = 1.0
        for i in range(k):
            coef *= beta - i
        if coef == 0.0:
            return 0.0
        return coef * (x - a) ** (beta - k)

    return SmoothFunction(lambda x: (x - a) ** beta, a=a, nth=nth)


def exponential_function(a: float = 0.0) -> SmoothFunction:
    return SmoothFunction(math.exp, a=a, nth=lambda k, x: math.exp(x))


def _hermite_physicists(n: int, x: float) -> float:
    h0, h1 = 1.0, 2.0 * x
    if n == 0:
        return h0
    for k in range(1, n):
        h0, h1 = h1, 2.0 * x * h1 - 2.0 * k * h0
    return h1


def gaussian_function(a: float = 0.0) -> SmoothFunction:
    """``exp(-x^2)``; its k-th derivative is ``(-1)^k H_k(x) exp(-x^2)``."""
    return SmoothFunction(
        lambda x: math.exp(-x * x),
        a=a,
        nth=lambda k, x: (-1) ** k * _hermite_physicists(k, x) * math.exp(-x * x),
    )


def _quad(func, lo, hi, tol):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err, info = integrate.quad(
            func, lo, hi, epsabs=tol * 1e-3, epsrel=max(tol * 1e-3, 5e-15),
            limit=400, full_output=1,
        )[:3]
    # quad's estimate is very conservative near algebraic endpoint
    # singularities, so only gross failures raise
    if not math.isfinite(val) or err > max(1e3 * tol, 1e-6) * (1.0 + abs(val)):
        raise ConvergenceError(
            f"quadrature did not reach tol {tol:g} (estimate {err:.3g})"
        )
    return val


def rl_integral(f, nu: float, x: float, a: float | None = None,
                tol: float = DEFAULT_TOL) -> float:
    """Left-sided Riemann-Liouville integral ``J^nu f(x)`` from ``a``.

    For ``nu < 1`` the substitution ``tau = x - (x-a) s^(1/nu)`` turns the
    kernel into a constant, leaving ``(x-a)^nu / Gamma(nu+1)`` times the mean
    of ``f`` over ``s`` in ``[0, 1]``.  Larger orders have a bounded kernel and
    are integrated directly.
    """
    f = _wrap(f, a)
    a = f.a
    if not nu > 0:
        raise DomainError(f"integral order must be positive, got {nu!r}")
    if not x > a:
        raise DomainError(f"need x > a, got x={x!r}, a={a!r}")
    span = x - a
    if nu < 1:
        inv = 1.0 / nu
        mean = _quad(lambda s: f(x - span * s ** inv), 0.0, 1.0, tol)
        return span ** nu * reciprocal_gamma(nu + 1) * mean
    if nu == 1:
        return _quad(f.func, a, x, tol)
    integral = _quad(lambda t: (x - t) ** (nu - 1) * f(t), a, x, tol)
    return integral * reciprocal_gamma(nu)


def _richardson_derivative(g: Callable[[float], float], x: float, n: int, h: float) -> float:
    """n-th derivative with half-offset central stencils and two Richardson levels."""

    def stencil(step):
        acc = 0.0
        for i in range(n + 1):
            acc += (-1) ** i * math.comb(n, i) * g(x + (n / 2 - i) * step)
        return acc / step ** n

    d1, d2, d3 = stencil(h), stencil(h / 2), stencil(h / 4)
    e1 = (4 * d2 - d1) / 3
    e2 = (4 * d3 - d2) / 3
    return (16 * e2 - e1) / 15


def rl_derivative(f, nu, x: float, a: float | None = None,
                  tol: float = DEFAULT_TOL) -> float:
    """Riemann-Liouville derivative ``D^nu f(x) = D^n J^(n-nu) f(x)``."""
    f = _wrap(f, a)
    order = _as_order(nu)
    if not x > f.a:
        raise DomainError(f"need x > a, got x={x!r}, a={f.a!r}")
    if order.is_integer:
        return f.derivative(order.n, x)
    n = order.n
    # wide enough that quadrature noise divided by h^n stays small
    h = (x - f.a) * min(0.05, 0.5 / n)
    inner_tol = min(tol, 1e-13)
    return _richardson_derivative(
        lambda y: rl_integral(f, n - order.nu, y, tol=inner_tol), x, n, h
    )


def caputo_derivative(f, nu, x: float, a: float | None = None,
                      tol: float = DEFAULT_TOL) -> float:
    """Caputo derivative ``J^(n-nu) f^(n)(x)``."""
    f = _wrap(f, a)
    order = _as_order(nu)
    if not x > f.a:
        raise DomainError(f"need x > a, got x={x!r}, a={f.a!r}")
    if order.is_integer:
        return f.derivative(order.n, x)
    n = order.n
    fn = SmoothFunction(f.derivative_function(n), a=f.a)
    return rl_integral(fn, n - order.nu, x, tol=tol)


def rl_caputo_correction(f, nu, x: float, a: float | None = None) -> float:
    """``sum_{k<n} f^(k)(a) (x-a)^(k-nu) / Gamma(k+1-nu)``.

    Subtracting it from the Riemann-Liouville derivative gives the Caputo one.
    """
    f = _wrap(f, a)
    order = _as_order(nu)
    if order.is_integer:
        return 0.0
    span = x - f.a
    return sum(
        f.derivative(k, f.a) * span ** (k - order.nu) * reciprocal_gamma(k + 1 - order.nu)
        for k in range(order.n)
    )


def rl_power_rule(beta: float, nu: float, a: float, x: float) -> float:
    """``D^nu (x-a)^beta`` for ``beta > -1``; a negative ``nu`` gives the integral."""
    if not beta > -1:
        raise DomainError(f"power rule needs beta > -1, got {beta!r}")
    if not x > a:
        raise DomainError(f"need x > a, got x={x!r}, a={a!r}")
    return gamma_ratio([beta + 1], []) * reciprocal_gamma(beta + 1 - nu) * (x - a) ** (beta - nu)


def rl_integral_power_rule(beta: float, nu: float, a: float, x: float) -> float:
    """``J^nu (x-a)^beta = Gamma(beta+1)/Gamma(beta+nu+1) (x-a)^(beta+nu)``."""
    return rl_power_rule(beta, -nu, a, x)


def caputo_power_rule(beta: float, nu, a: float, x: float) -> float:
    """Caputo derivative of ``(x-a)^beta``.

    Integer powers below the order are annihilated; otherwise the value is
    ``Gamma(1+beta)/Gamma(1+beta-nu) (x-a)^(beta-nu)``.
    """
    order = _as_order(nu)
    if not beta > order.nu - 1:
        raise DomainError(f"Caputo power rule needs beta > nu - 1, got beta={beta!r}")
    if not x > a:
        raise DomainError(f"need x > a, got x={x!r}, a={a!r}")
    if float(beta).is_integer() and beta < order.n:
        return 0.0
    return rl_power_rule(beta, order.nu, a, x)


def _series_sum(term_at: Callable[[int], float], terms: int, tol: float) -> EvalResult:
    total = comp = 0.0
    streak = 0
    last = 0.0
    for k in range(terms):
        t = term_at(k)
        s = total + t
        if abs(total) >= abs(t):
            comp += (total - s) + t
        else:
            comp += (t - s) + total
        total = s
        last = abs(t)
        if last <= tol * abs(total + comp):
            streak += 1
            if streak >= 3:
                return EvalResult(total + comp, last, k + 1, False)
        else:
            streak = 0
    raise ConvergenceError(f"series did not settle within {terms} terms")


def rl_derivative_analytic_series(taylor, nu: float, x: float, a: float = 0.0,
                                  terms: int = 500, tol: float = 1e-14) -> EvalResult:
    """``D^nu f(x)`` for analytic ``f`` from its derivatives at ``a``.

    ``taylor`` is either a callable ``k -> f^(k)(a)`` or a sequence of those
    values (missing entries count as zero).  The sum is
    ``sum_k f^(k)(a) (x-a)^(k-nu) / Gamma(k+1-nu)``.
    """
    if not x > a:
        raise DomainError(f"need x > a, got x={x!r}, a={a!r}")
    if callable(taylor):
        coef = taylor
    else:
        seq = list(taylor)
        coef = lambda k: seq[k] if k < len(seq) else 0.0
    span = x - a

    def term(k):
        c = coef(k)
        if c == 0:
            return 0.0
        return c * span ** (k - nu) * reciprocal_gamma(k + 1 - nu)

    return _series_sum(term, terms, tol)


def rl_product_rule(frac_f: Callable[[float, float], float], g, nu: float, x: float,
                    terms: int = 20000, tol: float = 1e-12) -> EvalResult:
    """Fractional Leibniz rule ``sum_k C(nu, k) D^(nu-k) f(x) g^(k)(x)``.

    ``frac_f(order, x)`` must return ``D^order f(x)`` for every order ``nu - k``
    (negative orders are integrals).  ``g`` is a :class:`SmoothFunction`.
    """
    g = _wrap(g)

    def term(k):
        c = binomial_general(nu, k)
        if c == 0:
            return 0.0
        dg = g.derivative(k, x)
        if dg == 0:
            return 0.0
        return c * frac_f(nu - k, x) * dg

    return _series_sum(term, terms, tol)


def _gaussian_rl_terms(nu: float, x: float, k0: int, tol: float) -> EvalResult:
    # term_k = (-1)^k (2k)!/k! x^(2k-nu) / Gamma(2k+1-nu); ratio in k gives a 2F2
    lead = (-1) ** k0 * math.factorial(2 * k0) / math.factorial(k0)
    lead *= x ** (2 * k0 - nu) * reciprocal_gamma(2 * k0 + 1 - nu)
    series = hyper(
        [k0 + 0.5, 1.0], [k0 + 1 - nu / 2, k0 + (1 - nu) / 2], -x * x, tol=tol
    )
    return series.scaled(lead)


def rl_exp_minus_x2(nu: float, x: float, tol: float = 1e-14) -> float:
    """Riemann-Liouville derivative of ``exp(-x^2)`` from 0.

    ``x^(-nu)/Gamma(1-nu) * 2F2(1/2, 1; (1-nu)/2, (2-nu)/2; -x^2)``.
    """
    if not x > 0:
        raise DomainError(f"need x > 0, got {x!r}")
    order = FractionalOrder(nu)
    if order.is_integer:
        return gaussian_function().derivative(order.n, x)
    return _gaussian_rl_terms(nu, x, 0, tol).value


def caputo_exp_minus_x2(nu: float, x: float, tol: float = 1e-14) -> float:
    """Caputo derivative of ``exp(-x^2)`` from 0.

    The Caputo operator drops the powers ``x^(2k)`` with ``2k < n``, so the
    series starts at ``k0 = ceil(n/2)``:
    ``term_k0 * 2F2(k0+1/2, 1; k0+1-nu/2, k0+(1-nu)/2; -x^2)``.
    """
    if not x > 0:
        raise DomainError(f"need x > 0, got {x!r}")
    order = FractionalOrder(nu)
    if order.is_integer:
        return gaussian_function().derivative(order.n, x)
    k0 = (order.n + 1) // 2
    return _gaussian_rl_terms(nu, x, k0, tol).value
