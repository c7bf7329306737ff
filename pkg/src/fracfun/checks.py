"""Property suites run by ``fracfun check`` and the acceptance tests.

Each suite returns a list of :class:`CheckResult`, one per property, holding
the worst residual seen and the tolerance it was held to.  All random draws
come from a seeded generator so runs are reproducible.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from importlib import resources

from . import continuous as fc
from . import continuous_families as cf
from . import discrete as gz
from . import discrete_families as df
from .hypergeom import gauss_2f1_euler, gauss_ode_residual, hyper, hyp2f1
from .special import (
    beta,
    gamma,
    log_gamma,
    pochhammer,
    pochhammer_general,
    reciprocal_gamma,
)


@dataclass
class CheckResult:
    name: str
    worst: float
    tol: float
    count: int = 0

    @property
    def passed(self) -> bool:
        return self.worst <= self.tol

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name:<44s} worst={self.worst:.3e}  tol={self.tol:.0e}  n={self.count}"


class _Tracker:
    def __init__(self, name, tol):
        self.result = CheckResult(name, 0.0, tol)

    def add(self, err):
        err = float(err)
        if math.isnan(err):
            err = math.inf
        self.result.worst = max(self.result.worst, err)
        self.result.count += 1


def rel(u, v) -> float:
    return abs(u - v) / max(abs(u), abs(v), 1e-300)


def gap(u, v) -> float:
    return abs(u - v) / max(1.0, abs(u), abs(v))


def _non_integer(rng, lo, hi, margin=0.02):
    while True:
        v = rng.uniform(lo, hi)
        if abs(v - round(v)) > margin:
            return v


def load_gamma_fixture():
    """The 64-point high-precision Gamma table shipped with the package."""
    text = resources.files("fracfun").joinpath("data/gamma_fixture.json").read_text()
    return json.loads(text)


# special functions and hypergeometric engine

def suite_special(seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []

    t = _Tracker("gamma recurrence G(z+1)=zG(z)", 1e-12)
    for _ in range(1000):
        z = rng.uniform(0.1, 60)
        t.add(rel(gamma(z + 1), z * gamma(z)))
    out.append(t.result)

    t = _Tracker("pochhammer (z)_k G(z) = G(z+k)", 1e-12)
    for _ in range(300):
        z, k = rng.uniform(0.1, 20), rng.randint(0, 30)
        t.add(rel(pochhammer(z, k) * gamma(z), gamma(z + k)))
    out.append(t.result)

    t = _Tracker("Legendre duplication of (a)_2n", 1e-11)
    for _ in range(300):
        a, n = rng.uniform(-10, 10), rng.randint(0, 15)
        lhs = pochhammer(a, 2 * n)
        rhs = 4.0 ** n * pochhammer(a / 2, n) * pochhammer((1 + a) / 2, n)
        t.add(rel(lhs, rhs) if lhs != 0 else abs(rhs))
    out.append(t.result)

    t = _Tracker("Beta-Gamma B(p,q)G(p+q) = G(p)G(q)", 1e-12)
    for _ in range(300):
        p, q = rng.uniform(0.1, 30), rng.uniform(0.1, 30)
        t.add(rel(beta(p, q) * gamma(p + q), gamma(p) * gamma(q)))
    out.append(t.result)

    t = _Tracker("generalized vs plain Pochhammer", 1e-12)
    for _ in range(300):
        a, m = rng.uniform(-20, 20), rng.randint(1, 25)
        g = pochhammer_general(a, m)
        ref = pochhammer(a, m)
        if g.case != "ratio":
            if pochhammer_general(a, m).case == "undefined" and ref != 0:
                t.add(math.inf)
            continue
        t.add(rel(g.value, ref) if ref != 0 else abs(g.value))
    out.append(t.result)

    t = _Tracker("reciprocal gamma is 0 at poles to -170", 0.0)
    for k in range(0, 171):
        t.add(abs(reciprocal_gamma(-k)))
    out.append(t.result)

    t = _Tracker("log_gamma vs gamma", 1e-12)
    for _ in range(300):
        z = rng.uniform(0.01, 170)
        t.add(rel(math.exp(log_gamma(z)), gamma(z)))
    out.append(t.result)

    t = _Tracker("64-point high-precision Gamma fixture", 1e-13)
    for row in load_gamma_fixture()["points"]:
        t.add(rel(gamma(float(row["z"])), float(row["gamma"])))
    out.append(t.result)

    t = _Tracker("2F1 direct vs Euler transform", 1e-11)
    for _ in range(500):
        a, b = rng.uniform(-3, 3), rng.uniform(-3, 3)
        # negative c near a pole blows the direct terms up to ~1e7 and
        # cancellation then caps the direct sum near 1e-9
        c = rng.uniform(0.5, 4)
        # the transformed argument z/(z-1) converges only for z < 1/2
        z = rng.uniform(-0.95, 0.45)
        direct = hyper([a, b], [c], z).value
        euler = gauss_2f1_euler(a, b, c, z).value
        t.add(gap(direct, euler))
    out.append(t.result)

    t = _Tracker("Gauss ODE residual", 1e-8)
    for _ in range(100):
        a, b = rng.uniform(-3, 3), rng.uniform(-3, 3)
        c = _non_integer(rng, 0.2, 4, 0.1)
        z = rng.uniform(-0.9, 0.9)
        if abs(z) < 0.05:
            continue
        y = hyp2f1(a, b, c, z).value
        t.add(gauss_ode_residual(a, b, c, z) / (1 + abs(y)))
    out.append(t.result)
    return out


# classical limits

_LIMIT_PARAMS = {
    "laguerre": dict(alpha=0.7),
    "jacobi": dict(alpha=0.6, beta=-0.3),
    "gegenbauer": dict(lam=1.3),
    "chebyshev_t": {},
    "chebyshev_u": {},
    "legendre": {},
}


def _scaled_classical(spec: cf.ContinuousFamilySpec, n: int, x: float) -> float:
    val = spec.classical(n, x)
    if spec.family == "chebyshev_t":
        return cf.chebyshev_t_scale(n) * val
    if spec.family == "chebyshev_u":
        return cf.chebyshev_u_scale(n) * val
    return val


def suite_limits(seed: int = 0, points: int = 25) -> list[CheckResult]:
    out = []
    for fam, params in _LIMIT_PARAMS.items():
        t = _Tracker(f"classical limit {fam} (n +- 1e-6)", 1e-4)
        if fam == "laguerre":
            grid = [5.0 * i / (points - 1) for i in range(points)]
        else:
            grid = [-0.9 + 1.8 * i / (points - 1) for i in range(points)]
        for n in range(1, 5):
            for eps in (1e-6, -1e-6):
                spec = cf.ContinuousFamilySpec(fam, n + eps, **params)
                for x in grid:
                    t.add(gap(spec.evaluate(x).value, _scaled_classical(spec, n, x)))
        out.append(t.result)

    discrete_params = dict(a=1.3, alpha=0.4, beta=1.7, c=0.4, p=0.3, N=10)
    for fam in df.FAMILIES:
        t = _Tracker(f"classical limit {fam} (mu = n <= 5)", 1e-10)
        for n in range(0, 6):
            spec = df.DiscreteFamilySpec(fam, float(n), **df_params(fam, discrete_params))
            for x in range(0, 11):
                ref = spec.classical(x)
                t.add(gap(spec.closed_form(x).value, ref))
                t.add(gap(spec.rodrigues(x), ref))
        out.append(t.result)
    return out


def df_params(fam, params):
    keep = df.DiscreteFamilySpec._required[fam]
    return {k: params[k] for k in keep}


# ODE residuals

def _random_continuous_spec(rng, fam):
    nu = _non_integer(rng, 0.1, 4.0)
    return cf.ContinuousFamilySpec(
        fam, nu,
        alpha=rng.uniform(-0.5, 2.0),
        beta=rng.uniform(-0.5, 2.0),
        lam=rng.uniform(0.5, 2.5),
    )


def suite_odes(seed: int = 0, draws: int = 20) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []
    for fam in ("jacobi", "laguerre", "gegenbauer", "legendre", "chebyshev_t", "chebyshev_u"):
        t = _Tracker(f"ODE residual {fam}", 1e-8)
        for _ in range(draws):
            spec = _random_continuous_spec(rng, fam)
            x = rng.uniform(0.1, 6.0) if fam == "laguerre" else rng.uniform(-0.8, 0.8)
            y = spec.evaluate(x).value
            t.add(cf.continuous_ode_residual(spec, x) / (1 + abs(y)))
        out.append(t.result)
    return out


# discrete dual paths

def random_discrete_spec(rng, fam, max_x):
    return df.DiscreteFamilySpec(
        fam,
        rng.uniform(0.0, 3.0),
        a=rng.choice([-1, 1]) * rng.uniform(0.3, 3.0),
        alpha=rng.uniform(-0.5, 3.0),
        beta=rng.uniform(0.2, 3.0),
        c=rng.uniform(0.1, 0.9),
        p=rng.uniform(0.1, 0.9),
        N=rng.randint(max_x, max_x + 10),
    )


def suite_dualpath(seed: int = 0, draws: int = 50, max_x: int = 15) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []
    for fam in df.FAMILIES:
        t = _Tracker(f"dual path {fam} (x <= {max_x})", 1e-8)
        for _ in range(draws):
            spec = random_discrete_spec(rng, fam, max_x)
            for x in range(max_x + 1):
                t.add(gap(spec.closed_form(x).value, spec.rodrigues(x)))
        out.append(t.result)
    return out


# continuous operators

def suite_operators(seed: int = 0, draws: int = 50) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []

    t_rl = _Tracker("RL power rule vs quadrature", 1e-7)
    t_cap = _Tracker("Caputo power rule vs quadrature", 1e-7)
    for _ in range(draws):
        nu = _non_integer(rng, 0.05, 2.95, 0.02)
        n = math.ceil(nu)
        b = rng.uniform(n - 1 + 0.05, n + 3.0)
        a = rng.uniform(-1.0, 1.0)
        x = a + rng.uniform(0.2, 3.0)
        f = fc.power_function(b, a)
        t_rl.add(gap(fc.rl_derivative(f, nu, x), fc.rl_power_rule(b, nu, a, x)))
        t_cap.add(gap(fc.caputo_derivative(f, nu, x), fc.caputo_power_rule(b, nu, a, x)))
    out += [t_rl.result, t_cap.result]

    t = _Tracker("RL - correction = Caputo (analytic f)", 1e-7)
    makers = (fc.exponential_function, fc.gaussian_function,
              lambda a: fc.SmoothFunction(math.cos, a=a,
                                          nth=lambda k, x: math.cos(x + k * math.pi / 2)))
    for _ in range(draws // 2):
        nu = _non_integer(rng, 0.05, 2.95, 0.02)
        a = rng.uniform(-1.0, 0.5)
        x = a + rng.uniform(0.2, 2.0)
        f = rng.choice(makers)(a)
        lhs = fc.rl_derivative(f, nu, x) - fc.rl_caputo_correction(f, nu, x)
        t.add(gap(lhs, fc.caputo_derivative(f, nu, x)))
    out.append(t.result)

    t = _Tracker("Caputo derivative of constants", 1e-12)
    for _ in range(20):
        nu = _non_integer(rng, 0.01, 1.99, 1e-3)
        c = rng.uniform(-10, 10)
        t.add(abs(fc.caputo_derivative(lambda s, c=c: c, nu, rng.uniform(0.1, 3.0))))
    out.append(t.result)

    t_rl = _Tracker("exp(-x^2): printed 2F2 form vs RL quadrature", 1e-6)
    t_cap = _Tracker("exp(-x^2): Caputo 2F2 form vs Caputo quadrature", 1e-6)
    g = fc.gaussian_function()
    for nu in (0.25, 0.5, 0.75):
        for x in (0.5, 1.0, 2.0):
            t_rl.add(gap(fc.rl_exp_minus_x2(nu, x), fc.rl_derivative(g, nu, x)))
            t_cap.add(gap(fc.caputo_exp_minus_x2(nu, x), fc.caputo_derivative(g, nu, x)))
    out += [t_rl.result, t_cap.result]

    t = _Tracker("integral semigroup on powers", 1e-8)
    for _ in range(draws):
        mu, nu, b = rng.uniform(0.1, 3), rng.uniform(0.1, 3), rng.uniform(-0.9, 4)
        a = rng.uniform(-1, 1)
        x = a + rng.uniform(0.1, 3)
        inner = fc.rl_integral_power_rule(b, nu, a, x) / (x - a) ** (b + nu)
        lhs = inner * fc.rl_integral_power_rule(b + nu, mu, a, x)
        t.add(gap(lhs, fc.rl_integral_power_rule(b, mu + nu, a, x)))
    out.append(t.result)

    t = _Tracker("analytic series vs RL quadrature (exp)", 1e-7)
    for _ in range(10):
        nu = _non_integer(rng, 0.05, 1.95, 0.02)
        x = rng.uniform(0.2, 2.0)
        series = fc.rl_derivative_analytic_series(lambda k: 1.0, nu, x).value
        t.add(gap(series, fc.rl_derivative(fc.exponential_function(), nu, x)))
    out.append(t.result)

    t = _Tracker("fractional Leibniz rule vs quadrature", 1e-6)
    nu, al, be = 0.5, 0.5, 0.5
    p, q = nu + be, nu + al
    frac_f = lambda order, x: fc.rl_power_rule(p, order, -1.0, x)
    gfun = fc.SmoothFunction(
        lambda s: (1 - s) ** q, a=-1.0,
        nth=lambda k, s: (-1) ** k * math.prod(q - i for i in range(k)) * (1 - s) ** (q - k),
    )
    prod_f = cf._weight_power_function(q, p, -1.0)
    for x in (-0.5, 0.0, 0.5):
        lhs = fc.rl_product_rule(frac_f, gfun, nu, x).value
        t.add(gap(lhs, fc.caputo_derivative(prod_f, nu, x)))
    out.append(t.result)

    t = _Tracker("C-Jacobi operator definition vs closed form", 1e-5)
    for x in (-0.5, 0.0, 0.5):
        t.add(abs(cf.c_jacobi_operator(0.5, 0.5, 0.5, x) - cf.c_jacobi(0.5, 0.5, 0.5, x)))
    out.append(t.result)

    t = _Tracker("C-Laguerre/C-Hermite operator vs closed form", 1e-7)
    for _ in range(5):
        nu = _non_integer(rng, 0.1, 1.9, 0.05)
        x = rng.uniform(0.3, 2.0)
        al = rng.uniform(0.0, 2.0)
        t.add(gap(cf.c_laguerre_operator(nu, al, x), cf.c_laguerre(nu, al, x)))
        t.add(gap(cf.c_hermite_operator(nu, x), cf.c_hermite(nu, x)))
    out.append(t.result)
    return out


# Gray-Zhang laws

def _random_sequence(rng, start, length):
    return gz.DiscreteSequence(start, [rng.uniform(-1, 1) for _ in range(length)])


def suite_laws(seed: int = 0, draws: int = 100) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []

    t = _Tracker("inverse law nabla^a nabla^-a f = f", 1e-10)
    for _ in range(draws):
        f = _random_sequence(rng, 0, rng.randint(1, 20))
        for al in (0.3, 0.5, 1.7):
            for s in range(f.start, f.end + 1):
                t.add(abs(gz.compose_diff(f, al, -al, s) - f(s)))
    out.append(t.result)

    t = _Tracker("composition case 2 (beta not a positive int)", 1e-9)
    for _ in range(draws):
        f = _random_sequence(rng, 0, rng.randint(2, 15))
        al, be = rng.uniform(-2, 2), rng.uniform(-2, 0.95)
        if abs(be - round(be)) < 1e-3 and round(be) > 0:
            continue
        s = rng.randint(f.start, f.end)
        t.add(abs(gz.compose_diff(f, al, be, s) - gz.alpha_diff(f, al + be, s)))
    out.append(t.result)

    t = _Tracker("composition case 3 correction term", 1e-9)
    for _ in range(draws // 2):
        m = rng.randint(1, 3)
        f = _random_sequence(rng, -m, rng.randint(2 * m + 1, 15))
        al = _non_integer(rng, -2, 2, 0.05)
        s = rng.randint(m, f.end)
        t.add(abs(gz.compose_diff(f, al, m, s, a=0) - gz.composition_rhs(f, al, m, s, a=0)))
    out.append(t.result)

    t = _Tracker("p-independence of the difference", 1e-10)
    for _ in range(draws):
        f = _random_sequence(rng, 0, rng.randint(1, 15))
        al = rng.uniform(-2, 3)
        s = rng.randint(f.start, f.end)
        ref = gz.alpha_diff(f, al, s)
        for p in range(0, 4):
            if abs((p - al) - round(p - al)) < 1e-9 and round(p - al) <= 0:
                continue
            t.add(abs(gz.alpha_diff(f, al, s, p=p) - ref))
    out.append(t.result)

    t = _Tracker("rising factorial rule (nonzero branch)", 1e-10)
    tz = _Tracker("rising factorial rule (exact-zero branch)", 1e-10)
    for _ in range(draws):
        p = rng.uniform(-0.9, 3)
        a = rng.randint(-3, 3)
        tmax = a + rng.randint(1, 10)
        seq = gz.rising_factorial_sequence(p, a, tmax)
        if rng.random() < 0.3:
            # dyadic p keeps p + 1 - alpha an exact integer
            p = rng.randint(-7, 24) / 8
            seq = gz.rising_factorial_sequence(p, a, tmax)
            k = rng.randint(0, 2)
            al = p + 1 + k
            for s in range(a + 1, tmax + 1):
                if s - a >= k + 2:
                    tz.add(abs(gz.alpha_diff(seq, al, s)))
                    tz.add(abs(gz.diff_rising_factorial(p, al, a, s)))
        else:
            al = rng.uniform(-2, 2)
            for s in range(a + 1, tmax + 1):
                t.add(gap(gz.alpha_diff(seq, al, s), gz.diff_rising_factorial(p, al, a, s)))
    out += [t.result, tz.result]

    t = _Tracker("fractional product rule", 1e-9)
    for _ in range(draws // 2):
        n = rng.randint(1, 9)
        f, g = _random_sequence(rng, 0, n), _random_sequence(rng, 0, n)
        al = _non_integer(rng, -2, 2, 0.05)
        s = rng.randint(0, f.end)
        t.add(abs(gz.discrete_product_rule(f, g, al, s) - gz.alpha_diff(f * g, al, s)))
    out.append(t.result)

    t = _Tracker("linearity, same summation order", 0.0)
    td = _Tracker("linearity, distributed", 1e-12)
    for _ in range(draws):
        f = _random_sequence(rng, 0, 10)
        g = _random_sequence(rng, 0, 10)
        c = rng.uniform(-3, 3)
        al = rng.uniform(-2, 2)
        lhs = gz.alpha_diff(f.scale(c) + g, al, 9)
        w = gz.kernel_weights(-al, 10)
        # identical summation order: weights applied to c f + g term by term
        rhs = 0.0
        for j, wj in enumerate(w):
            rhs += wj * (c * f(9 - j) + g(9 - j))
        t.add(abs(lhs - rhs))
        td.add(gap(lhs, c * gz.alpha_diff(f, al, 9) + gz.alpha_diff(g, al, 9)))
    out += [t.result, td.result]

    t = _Tracker("integer order = classical difference", 0.0)
    for _ in range(draws):
        vals = [rng.randint(-50, 50) for _ in range(12)]
        f = gz.DiscreteSequence(0, [float(v) for v in vals])
        m = rng.randint(0, 4)
        for s in range(m, 12):
            t.add(abs(gz.alpha_diff(f, m, s) - gz.backward_difference(f, m, s)))
    out.append(t.result)
    return out


# derivative relations

def suite_derivatives(seed: int = 0, draws: int = 30) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []

    t = _Tracker("Laguerre d/dx L_nu^a = -L_(nu-1)^(a+1)", 1e-10)
    for _ in range(draws):
        nu = _non_integer(rng, 0.1, 4)
        al = rng.uniform(-0.5, 2)
        x = rng.uniform(0, 5)
        lhs, rhs = cf.c_laguerre_derivative_relation(nu, al, x)
        t.add(gap(lhs, rhs))
    out.append(t.result)

    t = _Tracker("Jacobi k-th derivative relation (k <= 3)", 1e-9)
    for _ in range(draws):
        nu = _non_integer(rng, 0.1, 4)
        al, be = rng.uniform(-0.5, 2), rng.uniform(-0.5, 2)
        x = rng.uniform(-0.8, 0.8)
        for k in range(4):
            lhs = cf.c_jacobi_kth_derivative(nu, al, be, x, k)
            rhs = cf.c_jacobi_derivative_series(nu, al, be, x, k)
            t.add(gap(lhs, rhs))
    out.append(t.result)

    t = _Tracker("Legendre reflection P_nu = P_(-nu-1)", 1e-12)
    for _ in range(draws):
        nu = _non_integer(rng, 0.05, 4)
        x = rng.uniform(-0.9, 0.99)
        t.add(gap(cf.c_legendre(nu, x), cf.c_legendre(-nu - 1, x)))
    out.append(t.result)
    return out


SUITES = {
    "special": suite_special,
    "limits": suite_limits,
    "odes": suite_odes,
    "dualpath": suite_dualpath,
    "operators": suite_operators,
    "laws": suite_laws,
    "derivatives": suite_derivatives,
}


def run_suite(name: str, seed: int = 0, max_x: int = 15) -> list[CheckResult]:
    if name == "all":
        results = []
        for key in SUITES:
            results += run_suite(key, seed, max_x)
        return results
    if name not in SUITES:
        raise KeyError(name)
    if name == "dualpath":
        return suite_dualpath(seed, max_x=max_x)
    return SUITES[name](seed)
