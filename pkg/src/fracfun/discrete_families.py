"""Fractional Charlier, Meixner, Krawtchouk and Hahn functions.

Each family has two independent evaluations: the Rodrigues-type form, which
applies the Gray-Zhang difference to a weight sequence on ``{0, ..., x}``, and
a terminating hypergeometric sum.  When a Gamma argument of the closed form
sits on a pole (integer orders near ``N``, for instance) the sum is assembled
in a merged product form that has no poles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .discrete import DiscreteSequence, alpha_diff
from .errors import DomainError, PoleError
from .hypergeom import DEFAULT_TOL, EvalResult, hyper
from .special import (
    POLE_TOL,
    binomial_general,
    cis_pi,
    gamma_ratio,
    nonpositive_integer,
    pochhammer,
    pochhammer_general,
    pochhammer_regularized,
    reciprocal_gamma,
)

FAMILIES = ("charlier", "meixner", "krawtchouk", "hahn")


def _check_x(x, N=None):
    if int(x) != x or x < 0:
        raise DomainError(f"x must be a nonnegative integer, got {x!r}")
    if N is not None and x > N:
        raise DomainError(f"x = {x} exceeds N = {N}")
    return int(x)


def _check_N(N):
    if int(N) != N or N < 1:
        raise DomainError(f"N must be a positive integer, got {N!r}")
    return int(N)


def _any_pole(*args) -> bool:
    return any(nonpositive_integer(z, POLE_TOL) is not None for z in args)


def _gen_poch(a, b):
    g = pochhammer_general(a, b)
    if g.case == "undefined":
        raise PoleError(f"({a!r})_({b!r}) is undefined")
    return g.value


def _rodrigues(weights, mu, x):
    seq = DiscreteSequence(0, weights)
    return alpha_diff(seq, mu, x, 0)


def _terminating(terms) -> EvalResult:
    total = 0.0
    for t in terms:
        total += t
    return EvalResult(total, 0.0, len(terms), True)


# Charlier

def frac_charlier_result(mu, a, x, tol: float = DEFAULT_TOL) -> EvalResult:
    if a == 0:
        raise DomainError("Charlier parameter a must be nonzero")
    x = _check_x(x)
    return hyper([-mu, -x], [], -1 / a, tol=tol)


def frac_charlier(mu, a, x, tol: float = DEFAULT_TOL):
    """``2F0(-mu, -x; ; -1/a)``, a terminating sum of ``x+1`` terms."""
    return frac_charlier_result(mu, a, x, tol).value


def frac_charlier_rodrigues(mu, a, x):
    """``x!/a^x * nabla^mu [a^k/k!]`` over ``{0, ..., x}``."""
    if a == 0:
        raise DomainError("Charlier parameter a must be nonzero")
    x = _check_x(x)
    w = [a ** k / math.factorial(k) for k in range(x + 1)]
    return math.factorial(x) / a ** x * _rodrigues(w, mu, x)


# Meixner

def _meixner_merged(mu, beta, c, x):
    den = pochhammer(beta, x)
    terms = []
    for j in range(x + 1):
        t = pochhammer(-mu, j) * pochhammer(-x, j) / math.factorial(j)
        terms.append(t * (-1 / c) ** j * pochhammer(beta + mu, x - j) / den)
    return _terminating(terms)


def frac_meixner_result(mu, beta, c, x, tol: float = DEFAULT_TOL) -> EvalResult:
    if c == 0:
        raise DomainError("Meixner parameter c must be nonzero")
    x = _check_x(x)
    if pochhammer(beta, x) == 0:
        raise PoleError(f"(beta)_x vanishes for beta={beta!r}, x={x}")
    if _any_pole(beta, beta + x, beta + mu, beta + mu + x):
        return _meixner_merged(mu, beta, c, x)
    pref = gamma_ratio([beta, beta + mu + x], [beta + x, beta + mu])
    try:
        series = hyper([-mu, -x], [-beta - mu - x + 1], 1 / c, tol=tol)
    except DomainError:
        return _meixner_merged(mu, beta, c, x)
    return series.scaled(pref)


def frac_meixner(mu, beta, c, x, tol: float = DEFAULT_TOL):
    """``(beta+mu)_x/(beta)_x 2F1(-mu, -x; 1-beta-mu-x; 1/c)``."""
    return frac_meixner_result(mu, beta, c, x, tol).value


def frac_meixner_rodrigues(mu, beta, c, x):
    """``x!/(c^x (beta)_x) * nabla^mu [(beta+mu)_k c^k/k!]``."""
    if c == 0:
        raise DomainError("Meixner parameter c must be nonzero")
    x = _check_x(x)
    den = pochhammer(beta, x)
    if den == 0:
        raise PoleError(f"(beta)_x vanishes for beta={beta!r}, x={x}")
    w = [pochhammer(beta + mu, k) * c ** k / math.factorial(k) for k in range(x + 1)]
    return math.factorial(x) / (c ** x * den) * _rodrigues(w, mu, x)


# Krawtchouk

def _krawtchouk_merged(mu, p, N, x):
    z = 1 - 1 / p
    den = pochhammer(N - x + 1, x)
    terms = []
    for j in range(x + 1):
        t = pochhammer(-mu, j) * pochhammer(-x, j) / math.factorial(j) * z ** j
        terms.append(t * pochhammer(N - mu - x + 1 + j, x - j) / den)
    return _terminating(terms)


def frac_krawtchouk_result(mu, p, N, x, tol: float = DEFAULT_TOL) -> EvalResult:
    if p == 0 or p == 1:
        raise DomainError("Krawtchouk parameter p must avoid 0 and 1")
    N = _check_N(N)
    x = _check_x(x, N)
    if _any_pole(N - mu + 1, N - mu - x + 1):
        return _krawtchouk_merged(mu, p, N, x)
    pref = gamma_ratio([N - x + 1, N - mu + 1], [N + 1, N - mu - x + 1])
    try:
        series = hyper([-mu, -x], [N - mu - x + 1], 1 - 1 / p, tol=tol)
    except DomainError:
        return _krawtchouk_merged(mu, p, N, x)
    return series.scaled(pref)


def frac_krawtchouk(mu, p, N, x, tol: float = DEFAULT_TOL):
    """``Gamma(N-x+1)Gamma(N-mu+1)/(Gamma(N+1)Gamma(N-mu-x+1)) 2F1(-mu, -x; N-mu-x+1; 1-1/p)``."""
    return frac_krawtchouk_result(mu, p, N, x, tol).value


def frac_krawtchouk_rodrigues(mu, p, N, x):
    """``1/(C(N,x) q^x) * nabla^mu [C(N-mu, k) q^k]`` with ``q = p/(1-p)``."""
    if p == 0 or p == 1:
        raise DomainError("Krawtchouk parameter p must avoid 0 and 1")
    N = _check_N(N)
    x = _check_x(x, N)
    q = p / (1 - p)
    w = [binomial_general(N - mu, k) * q ** k for k in range(x + 1)]
    return _rodrigues(w, mu, x) / (math.comb(N, x) * q ** x)


# Hahn

def _hahn_reduced_norm(mu, N):
    """``(-1)^mu / (-N)_mu`` with the regularized ``(-N)_mu = e^{i pi mu} N!/Gamma(N+1-mu)``."""
    if nonpositive_integer(N + 1 - mu, POLE_TOL) is not None:
        raise PoleError(f"(-N)_mu vanishes for mu={mu!r}, N={N}")
    val = cis_pi(mu) / pochhammer_regularized(-N, mu)
    if isinstance(mu, (int, float)):
        return val.real
    return val


def hahn_normalization(mu, beta, N):
    """Rodrigues prefactor ``(-1)^mu (beta+1)_mu / (-N)_mu``.

    ``(-N)_mu`` is taken as its reflection continuation, so the phase of
    ``(-1)^mu`` cancels and the result is ``(beta+1)_mu Gamma(N+1-mu)/N!``.
    """
    N = _check_N(N)
    return _hahn_reduced_norm(mu, N) * _gen_poch(beta + 1, mu)


def _hahn_merged(mu, alpha, beta, N, x, norm):
    lead = norm * math.factorial(N - x) / pochhammer(alpha + 1, x)
    terms = []
    for j in range(x + 1):
        t = pochhammer(-mu, j) * pochhammer(-x, j) * pochhammer(beta + N - x + 1, j)
        t /= math.factorial(j)
        t *= (-1) ** j * pochhammer(alpha + mu + 1, x - j) * reciprocal_gamma(N - mu - x + 1 + j)
        terms.append(lead * t)
    return _terminating(terms)


def frac_hahn_result(mu, alpha, beta, N, x, tol: float = DEFAULT_TOL) -> EvalResult:
    N = _check_N(N)
    x = _check_x(x, N)
    norm = _hahn_reduced_norm(mu, N)
    if pochhammer(alpha + 1, x) == 0:
        raise PoleError(f"(alpha+1)_x vanishes for alpha={alpha!r}, x={x}")
    if _any_pole(alpha + 1, alpha + mu + x + 1, alpha + mu + 1, N - mu - x + 1):
        return _hahn_merged(mu, alpha, beta, N, x, norm)
    pref = norm * gamma_ratio(
        [alpha + 1, alpha + mu + x + 1, N - x + 1],
        [alpha + x + 1, alpha + mu + 1, N - mu - x + 1],
    )
    try:
        series = hyper([-mu, -x, beta + N - x + 1], [N - mu - x + 1, -alpha - mu - x], 1.0, tol=tol)
    except DomainError:
        return _hahn_merged(mu, alpha, beta, N, x, norm)
    return series.scaled(pref)


def frac_hahn(mu, alpha, beta, N, x, tol: float = DEFAULT_TOL):
    """Fractional Hahn function as a terminating 3F2 at 1.

    ``(-1)^mu/(-N)_mu * Gamma(alpha+1)Gamma(alpha+mu+x+1)Gamma(N-x+1)
    / (Gamma(alpha+x+1)Gamma(alpha+mu+1)Gamma(N-mu-x+1))
    * 3F2(-mu, -x, beta+N-x+1; N-mu-x+1, -alpha-mu-x; 1)``
    """
    return frac_hahn_result(mu, alpha, beta, N, x, tol).value


def frac_hahn_rodrigues(mu, alpha, beta, N, x):
    """Rodrigues form on ``k -> C(alpha+mu+k, k) C(beta+N-k, N-mu-k)``."""
    N = _check_N(N)
    x = _check_x(x, N)
    norm = hahn_normalization(mu, beta, N)
    w = [binomial_general(alpha + mu + k, k) * binomial_general(beta + N - k, N - mu - k)
         for k in range(x + 1)]
    den = binomial_general(alpha + x, x) * binomial_general(beta + N - x, N - x)
    if den == 0:
        raise PoleError("Hahn weight vanishes at x")
    return norm / den * _rodrigues(w, mu, x)


# classical polynomials from their terminating hypergeometric forms

def classical_discrete(family: str, n: int, x: int, a=None, beta=None, c=None, p=None,
                       N=None, alpha=None) -> float:
    """Classical Charlier, Meixner, Krawtchouk or Hahn polynomial of degree ``n``."""
    family = family.lower()
    if n < 0 or int(n) != n:
        raise DomainError(f"degree must be a nonnegative integer, got {n!r}")
    x = _check_x(x)
    if family == "charlier":
        return hyper([-n, -x], [], -1 / a).value
    if family == "meixner":
        return hyper([-n, -x], [beta], 1 - 1 / c).value
    if family == "krawtchouk":
        return hyper([-n, -x], [-N], 1 / p).value
    if family == "hahn":
        return hyper([-n, n + alpha + beta + 1, -x], [alpha + 1, -N], 1.0).value
    raise DomainError(f"unknown discrete family {family!r}")


@dataclass(frozen=True)
class DiscreteFamilySpec:
    """Family tag, order ``mu`` and parameters.

    Charlier uses ``a``; Meixner ``beta, c``; Krawtchouk ``p, N``; Hahn
    ``alpha, beta, N``.
    """

    family: str
    mu: complex
    a: complex | None = None
    alpha: complex | None = None
    beta: complex | None = None
    c: complex | None = None
    p: complex | None = None
    N: int | None = None

    _required = {
        "charlier": ("a",),
        "meixner": ("beta", "c"),
        "krawtchouk": ("p", "N"),
        "hahn": ("alpha", "beta", "N"),
    }

    def __post_init__(self):
        fam = self.family.lower()
        if fam not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        object.__setattr__(self, "family", fam)
        missing = [k for k in self._required[fam] if getattr(self, k) is None]
        if missing:
            raise DomainError(f"{fam} needs parameters {missing}")
        if self.N is not None:
            object.__setattr__(self, "N", _check_N(self.N))

    def closed_form(self, x: int, tol: float = DEFAULT_TOL) -> EvalResult:
        f = self.family
        if f == "charlier":
            return frac_charlier_result(self.mu, self.a, x, tol)
        if f == "meixner":
            return frac_meixner_result(self.mu, self.beta, self.c, x, tol)
        if f == "krawtchouk":
            return frac_krawtchouk_result(self.mu, self.p, self.N, x, tol)
        return frac_hahn_result(self.mu, self.alpha, self.beta, self.N, x, tol)

    def rodrigues(self, x: int):
        return discrete_rodrigues(self, x)

    def classical(self, x: int) -> float:
        n = round(complex(self.mu).real)
        return classical_discrete(self.family, n, x, a=self.a, beta=self.beta, c=self.c,
                                  p=self.p, N=self.N, alpha=self.alpha)


def discrete_rodrigues(spec: DiscreteFamilySpec, x: int):
    """Rodrigues-type evaluation of ``spec`` at ``x``."""
    f = spec.family
    if f == "charlier":
        return frac_charlier_rodrigues(spec.mu, spec.a, x)
    if f == "meixner":
        return frac_meixner_rodrigues(spec.mu, spec.beta, spec.c, x)
    if f == "krawtchouk":
        return frac_krawtchouk_rodrigues(spec.mu, spec.p, spec.N, x)
    return frac_hahn_rodrigues(spec.mu, spec.alpha, spec.beta, spec.N, x)


def relative_gap(u, v) -> float:
    """``|u - v| / max(1, |u|, |v|)``."""
    return abs(u - v) / max(1.0, abs(u), abs(v))
