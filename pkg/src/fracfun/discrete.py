"""Gray-Zhang fractional sums and differences on integer windows.

An order-``q`` sum over ``{a, ..., t}`` is

    (1/Gamma(q)) sum_{k=a}^{t} (t-k+1)_{q-1} f(k) = sum_{j=0}^{t-a} w_j f(t-j),

with ``w_j = (q)_j / j!``.  The difference of order ``alpha`` is the sum of
order ``-alpha``.  Sums whose upper limit falls below ``a`` are empty, so the
operators never read values left of ``a``; only the classical
:func:`backward_difference` does.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import DomainError, UndefinedPochhammerError, WindowError
from .special import (
    Number,
    binomial_general,
    is_integer,
    nonpositive_integer,
    pochhammer_general,
    reciprocal_gamma,
)


@dataclass(frozen=True)
class DiscreteSequence:
    """Values ``f(start), f(start+1), ..., f(end)`` on a dense integer window."""

    start: int
    values: tuple

    def __init__(self, start: int, values: Sequence[Number]):
        values = tuple(values)
        if not values:
            raise DomainError("a sequence needs at least one value")
        object.__setattr__(self, "start", int(start))
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(cls, func: Callable[[int], Number], start: int, end: int):
        return cls(start, [func(k) for k in range(start, end + 1)])

    @property
    def end(self) -> int:
        return self.start + len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, k: int) -> Number:
        if not self.start <= k <= self.end:
            raise WindowError(f"index {k} outside window [{self.start}, {self.end}]")
        return self.values[k - self.start]

    def scale(self, c: Number) -> "DiscreteSequence":
        return DiscreteSequence(self.start, [c * v for v in self.values])

    def __add__(self, other: "DiscreteSequence") -> "DiscreteSequence":
        self._aligned(other)
        return DiscreteSequence(self.start, [u + v for u, v in zip(self.values, other.values)])

    def __mul__(self, other: "DiscreteSequence") -> "DiscreteSequence":
        self._aligned(other)
        return DiscreteSequence(self.start, [u * v for u, v in zip(self.values, other.values)])

    def _aligned(self, other):
        if (self.start, self.end) != (other.start, other.end):
            raise WindowError("sequences live on different windows")


def kernel_weights(q: Number, count: int) -> list:
    """``w_j = (q)_j / j!`` for ``j < count``, i.e. ``(j+1)_{q-1} / Gamma(q)``."""
    w = [1.0]
    for j in range(count - 1):
        w.append(w[-1] * (q + j) / (j + 1))
    return w[:count]


def _window(f: DiscreteSequence, t: int, a: int | None) -> int:
    a = f.start if a is None else int(a)
    if a < f.start:
        raise WindowError(f"lower limit {a} precedes window start {f.start}")
    if t > f.end:
        raise WindowError(f"t = {t} beyond window end {f.end}")
    return a


def _kernel_sum(f: DiscreteSequence, q: Number, t: int, a: int) -> Number:
    if t < a:
        return 0.0
    w = kernel_weights(q, t - a + 1)
    acc = 0.0
    for j, wj in enumerate(w):
        if wj != 0:
            acc += wj * f(t - j)
    return acc


def alpha_sum(f: DiscreteSequence, alpha: Number, t: int, a: int | None = None) -> Number:
    """Order-``alpha`` sum of ``f`` over ``{a, ..., t}``.

    For a positive integer ``alpha = n`` this is the n-fold repeated sum.
    """
    a = _window(f, t, a)
    if nonpositive_integer(alpha) is not None and alpha != 0:
        raise UndefinedPochhammerError(
            f"the sum kernel (t-k+1)_({alpha}-1)/Gamma({alpha}) is undefined; "
            "use alpha_diff for integer differences"
        )
    return _kernel_sum(f, alpha, t, a)


def backward_difference(f: DiscreteSequence, m: int, t: int) -> Number:
    """Classical ``nabla^m f(t)`` from the actual values ``f(t-m), ..., f(t)``."""
    m = int(m)
    if m < 0:
        raise DomainError(f"difference order must be nonnegative, got {m}")
    if t - m < f.start or t > f.end:
        raise WindowError(
            f"nabla^{m} at t={t} needs [{t - m}, {t}] inside [{f.start}, {f.end}]"
        )
    acc = 0.0
    c = 1
    for i in range(m + 1):
        acc += c * f(t - i)
        c = c * (i - m) // (i + 1)
    return acc


def alpha_diff(f: DiscreteSequence, alpha: Number, t: int, a: int | None = None,
               p: int | None = None) -> Number:
    """Gray-Zhang difference of order ``alpha`` over ``{a, ..., t}``.

    With ``p`` omitted the difference is the single weighted sum of order
    ``-alpha``.  An explicit nonnegative ``p`` evaluates
    ``nabla^p`` of the order ``p - alpha`` sums instead; all admissible ``p``
    give the same value.
    """
    a = _window(f, t, a)
    if p is None:
        return _kernel_sum(f, -alpha, t, a)
    p = int(p)
    if p < 0:
        raise DomainError(f"p must be a nonnegative integer, got {p}")
    if nonpositive_integer(p - alpha) is not None:
        raise UndefinedPochhammerError(
            f"p - alpha = {p - alpha} is zero or a negative integer"
        )
    acc = 0.0
    c = 1
    for i in range(p + 1):
        acc += c * _kernel_sum(f, p - alpha, t - i, a)
        c = c * (i - p) // (i + 1)
    return acc


def smallest_admissible_p(alpha: Number) -> int:
    """Smallest ``n >= 0`` with ``0 < Re(n - alpha) <= 1``."""
    re = complex(alpha).real
    n = 0
    while not (0 < n - re <= 1):
        if n - re > 1:
            return n
        n += 1
    return n


def _is_positive_integer(z) -> bool:
    return is_integer(z) and complex(z).real > 0


def _is_nonneg_integer(z) -> bool:
    return is_integer(z) and complex(z).real >= 0


def _diff_sequence(f: DiscreteSequence, beta: Number, a: int, t: int) -> DiscreteSequence:
    if _is_positive_integer(beta):
        m = int(round(complex(beta).real))
        return DiscreteSequence(a, [backward_difference(f, m, s) for s in range(a, t + 1)])
    return DiscreteSequence(a, [alpha_diff(f, beta, s, a) for s in range(a, t + 1)])


def compose_diff(f: DiscreteSequence, alpha: Number, beta: Number, t: int,
                 a: int | None = None) -> Number:
    """``nabla^alpha`` applied to the sequence ``s -> nabla^beta f(s)``.

    A positive-integer ``beta`` is the classical difference, which reads
    ``f`` down to ``a - beta``.
    """
    a = _window(f, t, a)
    inner = _diff_sequence(f, beta, a, t)
    return alpha_diff(inner, alpha, t, a)


def composition_rhs(f: DiscreteSequence, alpha: Number, beta: Number, t: int,
                    a: int | None = None) -> Number:
    """Closed-form value of ``nabla^alpha nabla^beta f(t)`` from the composition law.

    The law is ``nabla^(alpha+beta) f`` except when ``alpha`` is not a
    nonnegative integer and ``beta`` is a positive integer, where the values
    of ``f`` left of ``a`` enter through a correction sum.
    """
    a = _window(f, t, a)
    base = alpha_diff(f, alpha + beta, t, a)
    if _is_nonneg_integer(alpha) or not _is_positive_integer(beta):
        return base
    m = int(round(complex(beta).real))
    if a - m < f.start:
        raise WindowError(f"the correction needs f down to {a - m}")
    rg = reciprocal_gamma(-alpha)
    corr = 0.0
    for l in range(1, m + 1):
        c = (-1) ** l * binomial_general(m, l)
        for j in range(a - l, a):
            kern = pochhammer_general(t - l - j + 1, -alpha - 1)
            if kern.case == "undefined":
                raise UndefinedPochhammerError(
                    f"({t - l - j + 1})_({-alpha - 1}) is undefined"
                )
            corr += c * kern.value * f(j)
    return base + rg * corr


def leibniz_backward(f: DiscreteSequence, g: DiscreteSequence, m: int, t: int) -> Number:
    """``sum_n C(m, n) nabla^(m-n) f(t-n) nabla^n g(t)``, equal to ``nabla^m (fg)(t)``."""
    return sum(
        binomial_general(m, n) * backward_difference(f, m - n, t - n) * backward_difference(g, n, t)
        for n in range(m + 1)
    )


def discrete_product_rule(f: DiscreteSequence, g: DiscreteSequence, alpha: Number,
                          t: int, a: int | None = None) -> Number:
    """Fractional Leibniz sum for ``nabla^alpha (f g)(t)``.

    ``sum_{n=0}^{t-a} C(alpha, n) [nabla^(alpha-n) f](t-n) nabla^n g(t)``,
    the inner difference taken over ``{a, ..., t-n}``.
    """
    a = _window(f, t, a)
    _window(g, t, a)
    acc = 0.0
    for n in range(t - a + 1):
        c = binomial_general(alpha, n)
        if c == 0:
            continue
        acc += c * alpha_diff(f, alpha - n, t - n, a) * backward_difference(g, n, t)
    return acc


def diff_rising_factorial(p: Number, alpha: Number, a: int, t: int) -> Number:
    """Closed form of ``nabla^alpha (t-a)_p`` over ``{a+1, ..., t}``.

    ``(t-a)_(p-alpha) / (p+1)_(-alpha)``, and 0 when ``p+1-alpha`` is zero or
    a negative integer.  With ``alpha = p + 1 + k`` the operator itself
    vanishes only from ``t - a >= k + 2`` on.
    """
    if nonpositive_integer(p + 1) is not None:
        raise UndefinedPochhammerError(f"p + 1 = {p + 1} is zero or a negative integer")
    if t <= a:
        raise WindowError(f"need t > a, got t={t}, a={a}")
    if nonpositive_integer(p + 1 - alpha) is not None:
        return 0.0
    num = pochhammer_general(t - a, p - alpha)
    den = pochhammer_general(p + 1, -alpha)
    if num.case == "undefined" or den.case == "undefined":
        raise UndefinedPochhammerError(f"rising factorial rule undefined at p={p}, alpha={alpha}")
    return num.value / den.value


def rising_factorial_sequence(p: Number, a: int, t: int) -> DiscreteSequence:
    """``k -> (k-a)_p`` on ``{a+1, ..., t}``."""
    vals = []
    for k in range(a + 1, t + 1):
        g = pochhammer_general(k - a, p)
        if g.case == "undefined":
            raise UndefinedPochhammerError(f"({k - a})_({p}) is undefined")
        vals.append(g.value)
    return DiscreteSequence(a + 1, vals)
