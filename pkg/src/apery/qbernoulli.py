"""Generalized q-Bernoulli family, evaluated from its generating function.

The base family B^(a)_{k;q}(t; lam) is defined by

    (-z)^a * sum_n  c_n * lam^n * q^(n+t) * exp([n+t]_q z)
        = sum_k B^(a)_{k;q}(t; lam) z^k / k!

with c_0 = 1 and c_n = c_{n-1} * [a+n-1]_q / [n]_q, where [x]_q is the
q-number (q^x - 1)/(q - 1).  Extracting the z^k coefficient gives the series
this module sums directly:

    B^(a)_{k;q}(t) = (-1)^a * k!/(k-a)! * sum_n c_n lam^n q^(n+t) [n+t]_q^(k-a)

for k >= a, and 0 for k < a.  The shifted family rescales the base one:

    B^(a)_{n;q^l;y}(t) = sum_k C(n,k) q^(l(k-a+1)y) [l]_q^k B^(a)_{k;q^l}(t-1).

Everything is floating point (the parameters are real), summed with Kahan
compensation and a relative truncation cutoff; this is the one module of
the package that is not exact, so every check reports a residual instead of
an equality bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace


class ConvergenceError(RuntimeError):
    """Series did not converge within max_terms; carries the last term size."""

    def __init__(self, message: str, last_term: float):
        super().__init__(message)
        self.last_term = last_term


@dataclass(frozen=True)
class QBernoulliParams:
    """Parameter bundle for the q-Bernoulli family.

    The convergence domain |lam| * q^l < 1 is enforced strictly; alpha is
    restricted to nonnegative integers (the (-z)^alpha prefactor is only
    unambiguous there).
    """

    q: float
    l: int = 1
    y: float = 0.0
    alpha: int = 0
    lam: float = 0.0
    truncation_tol: float = 1e-14
    max_terms: int = 100_000

    def __post_init__(self):
        if not 0.0 < self.q < 1.0:
            raise ValueError(f"q must lie in (0,1), got {self.q}")
        if self.l < 1 or not isinstance(self.l, int):
            raise ValueError(f"l must be a positive integer, got {self.l}")
        if self.alpha < 0 or not isinstance(self.alpha, int):
            raise ValueError(f"alpha must be a nonnegative integer, got {self.alpha}")
        if abs(self.lam) * self.q ** self.l >= 1.0:
            raise ValueError(
                f"outside convergence domain: |lam|*q^l = "
                f"{abs(self.lam) * self.q ** self.l} >= 1"
            )
        if self.truncation_tol <= 0:
            raise ValueError("truncation_tol must be positive")


def q_number(x: float, q: float) -> float:
    """The q-number [x]_q = (q^x - 1)/(q - 1), equal to 1+q+...+q^(x-1) for
    positive integer x.  For q = 1 returns x, the continuous limit."""
    if q == 1.0:
        return float(x)
    return (q ** x - 1.0) / (q - 1.0)


def _base_series(k: int, t: float, q: float, lam: float, alpha: int,
                 tol: float, max_terms: int) -> float:
    """B^(alpha)_{k;q}(t; lam) by direct summation of the coefficient series.

    Zero for k < alpha.  Stops once three consecutive terms fall below
    tol times the running sum magnitude (Kahan-compensated).
    """
    if k < alpha:
        return 0.0
    power = k - alpha
    prefactor = (-1.0) ** alpha * math.factorial(k) / math.factorial(k - alpha)
    total = 0.0
    comp = 0.0
    coeff = 1.0
    lam_pow = 1.0
    small_streak = 0
    term = 0.0
    for n in range(max_terms):
        if n > 0:
            coeff *= q_number(alpha + n - 1, q) / q_number(n, q)
            lam_pow *= lam
            if coeff == 0.0:
                # alpha = 0 kills every coefficient past n = 0 exactly
                break
        term = coeff * lam_pow * q ** (n + t) * q_number(n + t, q) ** power
        y = term - comp
        s = total + y
        comp = (s - total) - y
        total = s
        if abs(term) <= tol * max(abs(total), 1e-300):
            small_streak += 1
            if small_streak >= 3:
                break
        else:
            small_streak = 0
    else:
        raise ConvergenceError(
            f"series for B^({alpha})_{k} did not settle in {max_terms} terms",
            last_term=abs(term),
        )
    return prefactor * total


def base_eval(k: int, t: float, params: QBernoulliParams) -> float:
    """Evaluate the base family at the q carried by `params` (callers pass
    q^l themselves when they need the rescaled base)."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    return _base_series(k, t, params.q, params.lam, params.alpha,
                        params.truncation_tol, params.max_terms)


def shifted_eval(n: int, t: float, params: QBernoulliParams) -> float:
    """The shifted family B^(alpha)_{n;q^l;y}(t; lam).

    Its defining relation expresses the value at t+1 through base values at
    t, so reading it at argument t means base arguments t-1.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    q, l, y, alpha = params.q, params.l, params.y, params.alpha
    ql = q ** l
    lq = q_number(l, q)
    total = 0.0
    for k in range(n + 1):
        base = _base_series(k, t - 1.0, ql, params.lam, alpha,
                            params.truncation_tol, params.max_terms)
        if base == 0.0:
            continue
        total += math.comb(n, k) * q ** (l * (k - alpha + 1) * y) * lq ** k * base
    return total


def difference_relation_residual(n: int, t: float, params: QBernoulliParams) -> float:
    """Residual of the first-order difference relation

        lam * q^(l(alpha-1)) * B^(a)_n(t+1) - B^(a)_n(t)
            = n * [l]_q * B^(a-1)_{n-1}(t)

    for the shifted family (alpha >= 1; the right side drops to order
    alpha - 1).  All three evaluations run through independent truncations.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if params.alpha < 1:
        raise ValueError("difference relation needs alpha >= 1")
    q, l = params.q, params.l
    lower = replace(params, alpha=params.alpha - 1)
    lhs = (params.lam * q ** (l * (params.alpha - 1)) * shifted_eval(n, t + 1.0, params)
           - shifted_eval(n, t, params))
    rhs = n * q_number(l, q) * shifted_eval(n - 1, t, lower)
    return abs(lhs - rhs)


def semigroup_weight_function(params: QBernoulliParams, n: int, m: int, x: float):
    """The weight i -> (lam q^(l(alpha-1)))^floor((x+i)/m) * B^(a)_{n;q^l;y}(i/m).

    Returned as a plain callable on integers.  Its m-step difference
    f(i+m) - f(i) collapses, through the difference relation, to
    (lam q^(l(alpha-1)))^floor((x+i)/m) * n [l]_q * B^(a-1)_{n-1}(i/m),
    which is what ties it to gap-sum identities.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    ratio = params.lam * params.q ** (params.l * (params.alpha - 1))

    def f(i: int) -> float:
        return ratio ** math.floor((x + i) / m) * shifted_eval(n, i / m, params)

    return f


def weight_difference_residual(params: QBernoulliParams, n: int, m: int,
                               x: float, i: int) -> float:
    """|f(i+m) - f(i) - closed form| for the semigroup weight at point i,
    with the closed form evaluated through the lower-order family."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    f = semigroup_weight_function(params, n, m, x)
    ratio = params.lam * params.q ** (params.l * (params.alpha - 1))
    lower = replace(params, alpha=params.alpha - 1)
    closed = (ratio ** math.floor((x + i) / m)
              * n * q_number(params.l, params.q)
              * shifted_eval(n - 1, i / m, lower))
    return abs(f(i + m) - f(i) - closed)
