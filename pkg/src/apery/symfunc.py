"""Exact symmetric-function kernel.

Elementary and complete homogeneous symmetric functions, products of linear
factors, and Newton divided differences in Lagrange form.  Everything here
is ring-agnostic: the routines work over any exact commutative coefficient
type (int, Fraction, Poly), which the identity verifiers exploit to run
their hot loops over plain integers.

Index conventions: e_0 = h_0 = 1, e_k = h_k = 0 for k < 0, and e_k = 0 for
k larger than the number of variables.
"""

from __future__ import annotations

from fractions import Fraction
from collections.abc import Sequence


class Poly:
    """Univariate polynomial with exact coefficients, low degree first.

    Trailing zero coefficients are stripped; the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, n: int, c=1) -> "Poly":
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return self
            other = Poly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly([-other]))

    def __rsub__(self, other):
        return Poly([other]) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly"):
        """Polynomial long division; exact over Fractions or monic divisors."""
        if not isinstance(other, Poly) or not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dd = other.degree
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = c / lead if lead != 1 else c
            quot[i - dd] = q
            for j, b in enumerate(other.coeffs):
                rem[i - dd + j] -= q * b
        return Poly(quot), Poly(rem)

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = [f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c]
        return "Poly(" + " + ".join(terms) + ")"


def elementary(k: int, xs: Sequence):
    """Elementary symmetric function e_k: sum over strictly increasing index
    tuples of products.  One-pass update: multiplying out prod(t + x_i)
    incrementally and keeping the first k+1 coefficients."""
    if k < 0 or k > len(xs):
        return 0
    e = [1] + [0] * k
    for x in xs:
        for j in range(k, 0, -1):
            e[j] = e[j] + x * e[j - 1]
    return e[k]


def complete(k: int, xs: Sequence):
    """Complete homogeneous symmetric function h_k: sum over weakly
    increasing index tuples.  Dynamic programming over prefixes:
    h_k(x_1..x_j) = h_k(x_1..x_{j-1}) + x_j * h_{k-1}(x_1..x_j)."""
    if k < 0:
        return 0
    h = [1] + [0] * k
    for x in xs:
        for j in range(1, k + 1):
            h[j] = h[j] + x * h[j - 1]
    return h[k]


def complete_series(xs: Sequence, order: int = 8) -> list:
    """First `order`+1 coefficients of prod_i 1/(1 - x_i u) as a truncated
    power series in u.  Independent route to h_0..h_order: each factor is
    expanded geometrically and the truncated series are multiplied out."""
    series = [1] + [0] * order
    for x in xs:
        geom = [1]
        for _ in range(order):
            geom.append(geom[-1] * x)
        out = [0] * (order + 1)
        for i in range(order + 1):
            si = series[i]
            if not si:
                continue
            for j in range(order + 1 - i):
                out[i + j] += si * geom[j]
        series = out
    return series


def product_poly(xs: Sequence, sign: int = 1) -> Poly:
    """The monic polynomial prod_i (z + sign*x_i).

    Its coefficient of z^(p-k) is e_k of the signed inputs; the zero-factor
    product is the constant polynomial 1.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    coeffs = [1]
    for x in xs:
        sx = x if sign == 1 else -x
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c * sx
            nxt[i + 1] += c
        coeffs = nxt
    return Poly(coeffs)


def divided_difference(w: Poly, nodes: Sequence):
    """Newton divided difference of the polynomial w at pairwise distinct
    nodes, in Lagrange form:

        sum_j w(x_j) / prod_{k != j} (x_j - x_k).

    Annihilates polynomials of degree < len(nodes)-1, and equals
    h_{N-p+1}(nodes) for w = z^N with N >= p-1.  Repeated nodes are
    rejected: confluent nodes unsupported.
    """
    pts = [x if isinstance(x, Fraction) else Fraction(x) for x in nodes]
    if not pts:
        raise ValueError("divided difference needs at least one node")
    if len(set(pts)) != len(pts):
        raise ValueError(f"confluent nodes unsupported: {sorted(nodes)}")
    total = Fraction(0)
    for j, xj in enumerate(pts):
        denom = Fraction(1)
        for k, xk in enumerate(pts):
            if k != j:
                denom *= xj - xk
        total += w(xj) / denom
    return total


def e_recurrence_check(xs: Sequence, k: int, corrected: bool = True) -> bool:
    """Check the one-element-swap recurrence for elementary symmetric
    functions on x_1..x_p:

        e_k(x_2..x_p) - e_k(x_1..x_{p-1}) = (x_p - x_1) * e_{k-1}(x_2..x_{p-1})

    With `corrected=False` the right side uses e_k instead of e_{k-1}; that
    variant is false in general (already at p=2, k=1 with x_1 != x_2) and is
    kept available as a negative control.
    """
    if len(xs) < 2:
        raise ValueError("recurrence needs at least two variables")
    middle = xs[1:-1]
    lhs = elementary(k, xs[1:]) - elementary(k, xs[:-1])
    rhs_k = k - 1 if corrected else k
    rhs = (xs[-1] - xs[0]) * elementary(rhs_k, middle)
    return lhs == rhs


def h_recurrence_check(xs: Sequence, k: int) -> bool:
    """Check the swap recurrence for complete homogeneous functions:

        h_k(x_2..x_p) - h_k(x_1..x_{p-1}) = (x_p - x_1) * h_{k-1}(x_1..x_p)

    which holds as displayed (k=0 degenerates to 0 = 0 with h_{-1} = 0).
    """
    if len(xs) < 2:
        raise ValueError("recurrence needs at least two variables")
    lhs = complete(k, xs[1:]) - complete(k, xs[:-1])
    rhs = (xs[-1] - xs[0]) * complete(k - 1, xs)
    return lhs == rhs
