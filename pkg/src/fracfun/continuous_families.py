"""C-Hermite, C-Laguerre, C-Jacobi and the Jacobi-type specializations.

Every evaluator has a closed hypergeometric form; integer orders go to the
classical three-term recurrences.  ``(-1)^nu`` is always ``exp(i pi nu)``, so
Jacobi-type values come back complex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .continuous import SmoothFunction, caputo_derivative, caputo_exp_minus_x2
from .errors import DomainError
from .hypergeom import DEFAULT_TOL, EvalResult, hyp2f1, hyper, hyper_derivative
from .special import cis_pi, gamma_ratio, pochhammer, principal_power, reciprocal_gamma

#: Orders within this distance of an integer use the classical polynomial.
INTEGER_WINDOW = 1e-9
#: C-Hermite uses a wider window; its closed form cancels poles near integers.
HERMITE_WINDOW = 1e-6

FAMILIES = ("hermite", "laguerre", "jacobi", "gegenbauer", "chebyshev_t",
            "chebyshev_u", "legendre")


def _integer_order(nu: float, window: float = INTEGER_WINDOW) -> int | None:
    n = round(nu)
    if n >= 0 and abs(nu - n) < window:
        return int(n)
    return None


# classical polynomials by recurrence

def hermite_poly(n: int, x: float) -> float:
    h0, h1 = 1.0, 2.0 * x
    if n == 0:
        return h0
    for k in range(1, n):
        h0, h1 = h1, 2.0 * x * h1 - 2.0 * k * h0
    return h1


def laguerre_poly(n: int, alpha: float, x: float) -> float:
    l0, l1 = 1.0, 1.0 + alpha - x
    if n == 0:
        return l0
    for k in range(1, n):
        l0, l1 = l1, ((2 * k + 1 + alpha - x) * l1 - (k + alpha) * l0) / (k + 1)
    return l1


def jacobi_poly(n: int, alpha: float, beta: float, x: float) -> float:
    p0 = 1.0
    p1 = (alpha + 1) + (alpha + beta + 2) * (x - 1) / 2
    if n == 0:
        return p0
    ab = alpha + beta
    for k in range(2, n + 1):
        c = 2 * k + ab
        a1 = 2 * k * (k + ab) * (c - 2)
        a2 = (c - 1) * (c * (c - 2) * x + alpha ** 2 - beta ** 2)
        a3 = 2 * (k + alpha - 1) * (k + beta - 1) * c
        p0, p1 = p1, (a2 * p1 - a3 * p0) / a1
    return p1


def gegenbauer_poly(n: int, lam: float, x: float) -> float:
    c0, c1 = 1.0, 2.0 * lam * x
    if n == 0:
        return c0
    for k in range(2, n + 1):
        c0, c1 = c1, (2 * x * (k + lam - 1) * c1 - (k + 2 * lam - 2) * c0) / k
    return c1


def chebyshev_t_poly(n: int, x: float) -> float:
    t0, t1 = 1.0, x
    if n == 0:
        return t0
    for _ in range(1, n):
        t0, t1 = t1, 2 * x * t1 - t0
    return t1


def chebyshev_u_poly(n: int, x: float) -> float:
    u0, u1 = 1.0, 2.0 * x
    if n == 0:
        return u0
    for _ in range(1, n):
        u0, u1 = u1, 2 * x * u1 - u0
    return u1


def legendre_poly(n: int, x: float) -> float:
    p0, p1 = 1.0, x
    if n == 0:
        return p0
    for k in range(1, n):
        p0, p1 = p1, ((2 * k + 1) * x * p1 - k * p0) / (k + 1)
    return p1


def classical_polynomial(family: str, n: int, x: float, alpha: float = 0.0,
                         beta: float = 0.0, lam: float = 1.0) -> float:
    """Classical polynomial of degree ``n`` with the usual normalization."""
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    family = family.lower()
    if family == "hermite":
        return hermite_poly(n, x)
    if family == "laguerre":
        _check_laguerre(alpha)
        return laguerre_poly(n, alpha, x)
    if family == "jacobi":
        _check_jacobi(alpha, beta)
        return jacobi_poly(n, alpha, beta, x)
    if family == "gegenbauer":
        _check_gegenbauer(lam)
        return gegenbauer_poly(n, lam, x)
    if family == "chebyshev_t":
        return chebyshev_t_poly(n, x)
    if family == "chebyshev_u":
        return chebyshev_u_poly(n, x)
    if family == "legendre":
        return legendre_poly(n, x)
    raise DomainError(f"unknown family {family!r}")


def _check_laguerre(alpha):
    if not alpha > -1:
        raise DomainError(f"Laguerre needs alpha > -1, got {alpha!r}")


def _check_jacobi(alpha, beta):
    if not (alpha > -1 and beta > -1):
        raise DomainError(f"Jacobi needs alpha, beta > -1, got ({alpha!r}, {beta!r})")


def _check_gegenbauer(lam):
    if not lam >= 0.5:
        raise DomainError(f"Gegenbauer needs lambda >= 1/2, got {lam!r}")


def _classical_result(value: float, n: int) -> EvalResult:
    return EvalResult(value, 0.0, n + 1, True)


# C-Hermite

def c_hermite_result(nu: float, x: float, form: str = "caputo",
                     tol: float = DEFAULT_TOL) -> EvalResult:
    if not x > 0:
        raise DomainError(f"C-Hermite needs x > 0, got {x!r}")
    if not nu > 0:
        raise DomainError(f"order must be positive, got {nu!r}")
    n = _integer_order(nu, HERMITE_WINDOW)
    if n is not None:
        return _classical_result(hermite_poly(n, x), n)
    if form == "caputo":
        val = cis_pi(nu) * math.exp(x * x) * caputo_exp_minus_x2(nu, x, tol=tol)
        return EvalResult(val, tol * abs(val), 0, False)
    if form == "printed":
        series = hyper([0.5, 1.0], [(1 - nu) / 2, (2 - nu) / 2], -x * x, tol=tol)
        pref = principal_power(-x, -nu) * math.exp(x * x) * reciprocal_gamma(1 - nu)
        return series.scaled(pref)
    raise DomainError(f"unknown C-Hermite form {form!r}")


def c_hermite(nu: float, x: float, form: str = "caputo", tol: float = DEFAULT_TOL) -> complex:
    """C-Hermite function ``(-1)^nu e^{x^2} D_*^nu e^{-x^2}`` for ``x > 0``.

    ``form="printed"`` evaluates ``(-x)^{-nu} e^{x^2}/Gamma(1-nu) 2F2(...)``
    instead, which carries the Riemann-Liouville constant term.
    """
    return c_hermite_result(nu, x, form, tol).value


def c_hermite_operator(nu: float, x: float, tol: float = 1e-10) -> complex:
    """C-Hermite from the Caputo quadrature of ``e^{-x^2}``."""
    from .continuous import gaussian_function

    return cis_pi(nu) * math.exp(x * x) * caputo_derivative(gaussian_function(), nu, x, tol=tol)


# C-Laguerre

def _laguerre_prefactor(nu, alpha):
    return gamma_ratio([nu + alpha + 1], [alpha + 1]) * reciprocal_gamma(nu + 1)


def c_laguerre_result(nu: float, alpha: float, x: float, tol: float = DEFAULT_TOL) -> EvalResult:
    _check_laguerre(alpha)
    n = _integer_order(nu)
    if n is not None:
        return _classical_result(laguerre_poly(n, alpha, x), n)
    return hyper([-nu], [alpha + 1], x, tol=tol).scaled(_laguerre_prefactor(nu, alpha))


def c_laguerre(nu: float, alpha: float, x: float, tol: float = DEFAULT_TOL) -> float:
    """``Gamma(nu+alpha+1)/(Gamma(nu+1)Gamma(alpha+1)) 1F1(-nu; alpha+1; x)``."""
    return c_laguerre_result(nu, alpha, x, tol).value


def c_laguerre_derivatives(nu: float, alpha: float, x: float, tol: float = DEFAULT_TOL):
    """``(y, y', y'')`` from term-shifted 1F1 series."""
    _check_laguerre(alpha)
    pref = _laguerre_prefactor(nu, alpha)
    return tuple(pref * hyper_derivative([-nu], [alpha + 1], x, k, tol=tol) for k in range(3))


def c_laguerre_derivative_relation(nu: float, alpha: float, x: float,
                                   tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """``(d/dx L_nu^alpha(x), -L_{nu-1}^{alpha+1}(x))``; the two agree."""
    _check_laguerre(alpha)
    lhs = c_laguerre_derivatives(nu, alpha, x, tol)[1]
    shifted = nu - 1
    pref = _laguerre_prefactor(shifted, alpha + 1)
    if pref == 0:
        rhs = 0.0
    else:
        rhs = -pref * hyper([-shifted], [alpha + 2], x, tol=tol).value
    return lhs, rhs


def c_laguerre_operator(nu: float, alpha: float, x: float, tol: float = 1e-10) -> float:
    """C-Laguerre from the Caputo quadrature of ``e^{-t} t^{nu+alpha}``."""
    p = nu + alpha

    def nth(k, t):
        # Leibniz rule on e^{-t} * t^p
        acc = 0.0
        for i in range(k + 1):
            coef = 1.0
            for j in range(i):
                coef *= p - j
            acc += math.comb(k, i) * (-1) ** (k - i) * coef * t ** (p - i)
        return acc * math.exp(-t)

    f = SmoothFunction(lambda t: math.exp(-t) * t ** p, a=0.0, nth=nth)
    d = caputo_derivative(f, nu, x, tol=tol)
    return reciprocal_gamma(nu + 1) * x ** (-alpha) * math.exp(x) * d


# C-Jacobi and its specializations

def _jacobi_type(nu, pref, a, b, c, x, tol, euler: bool | None = None) -> EvalResult:
    z = (x + 1) / 2
    if euler is None:
        series = hyp2f1(a, b, c, z, tol=tol)
    elif euler:
        from .hypergeom import gauss_2f1_euler

        series = gauss_2f1_euler(a, b, c, z, tol=tol)
    else:
        series = hyper([a, b], [c], z, tol=tol)
    return series.scaled(cis_pi(nu) * pref)


def _jacobi_prefactor(nu, beta):
    return gamma_ratio([nu + beta + 1], [beta + 1]) * reciprocal_gamma(nu + 1)


def c_jacobi_result(nu: float, alpha: float, beta: float, x: float,
                    tol: float = DEFAULT_TOL, euler: bool | None = None) -> EvalResult:
    _check_jacobi(alpha, beta)
    n = _integer_order(nu)
    if n is not None:
        return _classical_result(jacobi_poly(n, alpha, beta, x), n)
    return _jacobi_type(nu, _jacobi_prefactor(nu, beta), -nu, nu + alpha + beta + 1,
                        beta + 1, x, tol, euler)


def c_jacobi(nu: float, alpha: float, beta: float, x: float, tol: float = DEFAULT_TOL):
    """``(-1)^nu Gamma(nu+beta+1)/(Gamma(nu+1)Gamma(beta+1)) 2F1(-nu, nu+alpha+beta+1; beta+1; (x+1)/2)``."""
    return c_jacobi_result(nu, alpha, beta, x, tol).value


def c_jacobi_kth_derivative(nu: float, alpha: float, beta: float, x: float, k: int,
                            tol: float = DEFAULT_TOL):
    """``(nu+alpha+beta+1)_k / 2^k * P_{nu-k}^{(alpha+k, beta+k)}(x)``."""
    k = int(k)
    if k < 0:
        raise DomainError(f"derivative order must be nonnegative, got {k}")
    if k == 0:
        return c_jacobi(nu, alpha, beta, x, tol)
    factor = pochhammer(nu + alpha + beta + 1, k) / 2 ** k
    n = _integer_order(nu)
    if n is not None:
        if k > n:
            return 0.0
        return factor * jacobi_poly(n - k, alpha + k, beta + k, x)
    shifted = nu - k
    pref = gamma_ratio([shifted + beta + k + 1], [beta + k + 1]) * reciprocal_gamma(shifted + 1)
    res = _jacobi_type(shifted, pref, -shifted, shifted + alpha + beta + 2 * k + 1,
                       beta + k + 1, x, tol)
    return factor * res.value


def c_jacobi_derivative_series(nu: float, alpha: float, beta: float, x: float, k: int,
                               tol: float = DEFAULT_TOL):
    """k-th x-derivative of the closed form through the 2F1 parameter shift."""
    _check_jacobi(alpha, beta)
    pref = cis_pi(nu) * _jacobi_prefactor(nu, beta)
    d = hyper_derivative([-nu, nu + alpha + beta + 1], [beta + 1], (x + 1) / 2, k, tol=tol)
    return pref * d / 2 ** k


def _weight_power_function(p: float, q: float, a: float) -> SmoothFunction:
    """``(1-t)^p (1+t)^q`` with exact derivatives from the Leibniz rule."""

    def falling(e, i):
        out = 1.0
        for j in range(i):
            out *= e - j
        return out

    def nth(k, t):
        acc = 0.0
        for i in range(k + 1):
            left = falling(p, i) * (-1) ** i
            right = falling(q, k - i)
            if left == 0 or right == 0:
                continue
            acc += math.comb(k, i) * left * (1 - t) ** (p - i) * right * (1 + t) ** (q - k + i)
        return acc

    return SmoothFunction(lambda t: (1 - t) ** p * (1 + t) ** q, a=a, nth=nth)


def c_jacobi_operator(nu: float, alpha: float, beta: float, x: float, tol: float = 1e-10):
    """C-Jacobi from its Rodrigues-type definition with a Caputo quadrature from -1."""
    _check_jacobi(alpha, beta)
    if not -1 < x < 1:
        raise DomainError(f"operator form needs -1 < x < 1, got {x!r}")
    f = _weight_power_function(nu + alpha, nu + beta, -1.0)
    d = caputo_derivative(f, nu, x, tol=tol)
    weight = (1 - x) ** alpha * (1 + x) ** beta
    return cis_pi(nu) * reciprocal_gamma(nu + 1) / 2 ** nu * d / weight


def gegenbauer_jacobi_ratio(nu: float, lam: float) -> float:
    """``C_nu^lam / P_nu^(lam-1/2, lam-1/2)`` for the closed forms."""
    return gamma_ratio([nu + 2 * lam, lam + 0.5], [2 * lam, nu + lam + 0.5])


def c_gegenbauer_result(nu: float, lam: float, x: float, tol: float = DEFAULT_TOL,
                        euler: bool | None = None) -> EvalResult:
    _check_gegenbauer(lam)
    n = _integer_order(nu)
    if n is not None:
        return _classical_result(gegenbauer_poly(n, lam, x), n)
    pref = gamma_ratio([nu + 2 * lam], [2 * lam]) * reciprocal_gamma(nu + 1)
    return _jacobi_type(nu, pref, -nu, nu + 2 * lam, lam + 0.5, x, tol, euler)


def c_gegenbauer(nu: float, lam: float, x: float, tol: float = DEFAULT_TOL):
    """``(-1)^nu Gamma(nu+2 lam)/(Gamma(2 lam)Gamma(nu+1)) 2F1(-nu, nu+2 lam; lam+1/2; (x+1)/2)``."""
    return c_gegenbauer_result(nu, lam, x, tol).value


def chebyshev_t_scale(n: int) -> float:
    """Closed-form T at integer ``n`` divided by the classical ``T_n``."""
    return pochhammer(0.5, n) / math.factorial(n)


def chebyshev_u_scale(n: int) -> float:
    """Closed-form U at integer ``n`` divided by the classical ``U_n``."""
    return pochhammer(1.5, n) / math.factorial(n + 1)


def c_chebyshev_t_result(nu: float, x: float, tol: float = DEFAULT_TOL,
                         euler: bool | None = None) -> EvalResult:
    n = _integer_order(nu)
    if n is not None:
        return _classical_result(chebyshev_t_scale(n) * chebyshev_t_poly(n, x), n)
    pref = gamma_ratio([nu + 0.5], [0.5]) * reciprocal_gamma(nu + 1)
    return _jacobi_type(nu, pref, -nu, nu, 0.5, x, tol, euler)


def c_chebyshev_t(nu: float, x: float, tol: float = DEFAULT_TOL):
    """``(-1)^nu Gamma(nu+1/2)/(Gamma(nu+1)Gamma(1/2)) 2F1(-nu, nu; 1/2; (x+1)/2)``."""
    return c_chebyshev_t_result(nu, x, tol).value


def c_chebyshev_u_result(nu: float, x: float, tol: float = DEFAULT_TOL,
                         euler: bool | None = None) -> EvalResult:
    n = _integer_order(nu)
    if n is not None:
        return _classical_result(chebyshev_u_scale(n) * chebyshev_u_poly(n, x), n)
    pref = gamma_ratio([nu + 1.5], [1.5]) * reciprocal_gamma(nu + 1)
    return _jacobi_type(nu, pref, -nu, nu + 2, 1.5, x, tol, euler)


def c_chebyshev_u(nu: float, x: float, tol: float = DEFAULT_TOL):
    """``(-1)^nu Gamma(nu+3/2)/(Gamma(nu+1)Gamma(3/2)) 2F1(-nu, nu+2; 3/2; (x+1)/2)``."""
    return c_chebyshev_u_result(nu, x, tol).value


def c_legendre_result(nu: float, x: float, form: str = "real",
                      tol: float = DEFAULT_TOL) -> EvalResult:
    n = _integer_order(nu)
    if n is not None:
        return _classical_result(legendre_poly(n, x), n)
    if form == "real":
        return hyp2f1(-nu, nu + 1, 1.0, (1 - x) / 2, tol=tol)
    if form == "jacobi":
        return _jacobi_type(nu, 1.0, -nu, nu + 1, 1.0, x, tol)
    raise DomainError(f"unknown Legendre form {form!r}")


def c_legendre(nu: float, x: float, form: str = "real", tol: float = DEFAULT_TOL):
    """Legendre function ``2F1(-nu, nu+1; 1; (1-x)/2)``.

    ``form="jacobi"`` gives ``(-1)^nu 2F1(-nu, nu+1; 1; (x+1)/2)``, which
    equals ``(-1)^nu`` times the real form at ``-x``.
    """
    return c_legendre_result(nu, x, form, tol).value


# shared spec, residuals, dispatch

@dataclass(frozen=True)
class ContinuousFamilySpec:
    """A family tag, its order and parameters."""

    family: str
    nu: float
    alpha: float = 0.0
    beta: float = 0.0
    lam: float = 1.0
    options: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        fam = self.family.lower()
        if fam not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        object.__setattr__(self, "family", fam)
        if fam == "laguerre":
            _check_laguerre(self.alpha)
        elif fam == "jacobi":
            _check_jacobi(self.alpha, self.beta)
        elif fam == "gegenbauer":
            _check_gegenbauer(self.lam)

    def evaluate(self, x: float, tol: float = DEFAULT_TOL) -> EvalResult:
        return evaluate_family(self, x, tol)

    def classical(self, n: int, x: float) -> float:
        return classical_polynomial(self.family, n, x, self.alpha, self.beta, self.lam)


def evaluate_family(spec: ContinuousFamilySpec, x: float, tol: float = DEFAULT_TOL) -> EvalResult:
    fam, nu = spec.family, spec.nu
    if fam == "hermite":
        return c_hermite_result(nu, x, spec.options.get("form", "caputo"), tol)
    if fam == "laguerre":
        return c_laguerre_result(nu, spec.alpha, x, tol)
    if fam == "jacobi":
        return c_jacobi_result(nu, spec.alpha, spec.beta, x, tol)
    if fam == "gegenbauer":
        return c_gegenbauer_result(nu, spec.lam, x, tol)
    if fam == "chebyshev_t":
        return c_chebyshev_t_result(nu, x, tol)
    if fam == "chebyshev_u":
        return c_chebyshev_u_result(nu, x, tol)
    return c_legendre_result(nu, x, spec.options.get("form", "real"), tol)


def _jacobi_type_derivatives(nu, pref, a, b, c, x, tol):
    z = (x + 1) / 2
    ph = cis_pi(nu) * pref
    return tuple(ph * hyper_derivative([a, b], [c], z, k, tol=tol) / 2 ** k for k in range(3))


def family_derivatives(spec: ContinuousFamilySpec, x: float, tol: float = DEFAULT_TOL):
    """``(y, y', y'')`` from term-shifted series (fractional orders only)."""
    fam, nu = spec.family, spec.nu
    n = _integer_order(nu)
    if n is not None:
        from .continuous import central_derivative

        f = lambda t: spec.classical(n, t)
        return tuple(central_derivative(f, x, k) for k in range(3))
    if fam == "laguerre":
        return c_laguerre_derivatives(nu, spec.alpha, x, tol)
    if fam == "jacobi":
        return _jacobi_type_derivatives(nu, _jacobi_prefactor(nu, spec.beta), -nu,
                                        nu + spec.alpha + spec.beta + 1, spec.beta + 1, x, tol)
    if fam == "gegenbauer":
        lam = spec.lam
        pref = gamma_ratio([nu + 2 * lam], [2 * lam]) * reciprocal_gamma(nu + 1)
        return _jacobi_type_derivatives(nu, pref, -nu, nu + 2 * lam, lam + 0.5, x, tol)
    if fam == "chebyshev_t":
        pref = gamma_ratio([nu + 0.5], [0.5]) * reciprocal_gamma(nu + 1)
        return _jacobi_type_derivatives(nu, pref, -nu, nu, 0.5, x, tol)
    if fam == "chebyshev_u":
        pref = gamma_ratio([nu + 1.5], [1.5]) * reciprocal_gamma(nu + 1)
        return _jacobi_type_derivatives(nu, pref, -nu, nu + 2, 1.5, x, tol)
    if fam == "legendre":
        z = (1 - x) / 2
        return tuple(
            hyper_derivative([-nu, nu + 1], [1.0], z, k, tol=tol) * (-0.5) ** k for k in range(3)
        )
    raise DomainError(f"no series derivatives for {fam!r}")


def continuous_ode_residual(spec: ContinuousFamilySpec, x: float,
                            tol: float = DEFAULT_TOL) -> float:
    """Absolute residual of the family's second-order equation at ``x``."""
    y, dy, d2y = family_derivatives(spec, x, tol)
    nu, al, be = spec.nu, spec.alpha, spec.beta
    fam = spec.family
    if fam == "laguerre":
        r = x * d2y + (al + 1 - x) * dy + nu * y
    elif fam == "jacobi":
        r = (1 - x * x) * d2y + (be - al - (al + be + 2) * x) * dy + nu * (nu + al + be + 1) * y
    elif fam == "gegenbauer":
        lam = spec.lam
        r = (1 - x * x) * d2y - (2 * lam + 1) * x * dy + nu * (nu + 2 * lam) * y
    elif fam == "chebyshev_t":
        r = (1 - x * x) * d2y - x * dy + nu * nu * y
    elif fam == "chebyshev_u":
        r = (1 - x * x) * d2y - 3 * x * dy + nu * (nu + 2) * y
    else:
        r = (1 - x * x) * d2y - 2 * x * dy + nu * (nu + 1) * y
    return abs(r)
