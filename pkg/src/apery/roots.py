"""Finite crystallographic root systems and their height identities.

Positive roots are generated from the Cartan matrix by the height-layered
closure algorithm (root strings computed from the pairing integers, no
floating point), while the Coxeter exponents come from static tables.  The
two are tied together at construction time through the conjugacy of the
height-count partition and the exponent partition, so the tables and the
generator genuinely cross-check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from collections.abc import Sequence

from .partitions import conjugate_partition
from .symfunc import Poly
from .identities import FunctionTable, IdentityReport
from . import qbernoulli as qb

VALID_RANKS = {
    "A": range(1, 9), "B": range(2, 9), "C": range(2, 9), "D": range(3, 9),
    "E": range(6, 9), "F": range(4, 5), "G": range(2, 3),
}


def _exponent_table(label: str, rank: int) -> tuple[int, ...]:
    if label == "A":
        return tuple(range(1, rank + 1))
    if label in ("B", "C"):
        return tuple(range(1, 2 * rank, 2))
    if label == "D":
        return tuple(sorted(list(range(1, 2 * rank - 2, 2)) + [rank - 1]))
    return {
        ("E", 6): (1, 4, 5, 7, 8, 11),
        ("E", 7): (1, 5, 7, 9, 11, 13, 17),
        ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
        ("F", 4): (1, 5, 7, 11),
        ("G", 2): (1, 5),
    }[(label, rank)]


def cartan_matrix(label: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Integer Cartan matrix, entry [i][j] = 2(a_i, a_j)/(a_j, a_j)."""
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if label in ("A", "B", "C"):
        for i in range(rank - 1):
            bond(i, i + 1)
        if label == "B" and rank >= 2:
            bond(rank - 2, rank - 1, -2, -1)
        if label == "C" and rank >= 2:
            bond(rank - 2, rank - 1, -1, -2)
    elif label == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
    elif label == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (1, 3)] + \
                    [(k, k + 1) for k in range(4, rank - 1)]:
            bond(i, j)
    elif label == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)
        bond(2, 3)
    elif label == "G":
        bond(0, 1, -1, -3)
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class RootSystem:
    label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    exponents: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.label}{self.rank}"

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(sorted(sum(r) for r in self.positive_roots))

    def height_counts(self) -> tuple[int, ...]:
        """b[i] = number of positive roots of height i+1."""
        top = max(self.heights)
        b = [0] * top
        for h in self.heights:
            b[h - 1] += 1
        return tuple(b)


def build_root_system(label: str, rank: int | None = None) -> RootSystem:
    """Generate the positive roots of the given type by layered closure.

    Accepts either ("G", 2) or the combined form ("G2").  A root r extends
    to r + a_i exactly when the a_i-string through r has room above, i.e.
    (length below) - (pairing of r with the coroot of a_i) >= 1.  The
    result is checked against the exponent table: root count, partition
    conjugacy, and maximal height must all agree.
    """
    if rank is None:
        label, rank = label[0], int(label[1:])
    label = label.upper()
    if label not in VALID_RANKS or rank not in VALID_RANKS[label]:
        raise ValueError(f"no root system of type {label} and rank {rank}")
    cartan = cartan_matrix(label, rank)

    roots: set[tuple[int, ...]] = set()
    layer = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    roots.update(layer)
    while layer:
        nxt = []
        for r in layer:
            for i in range(rank):
                below = 1
                probe = list(r)
                probe[i] -= 1
                while tuple(probe) in roots:
                    below += 1
                    probe[i] -= 1
                pairing = sum(r[j] * cartan[j][i] for j in range(rank))
                if below - 1 - pairing >= 1:
                    up = list(r)
                    up[i] += 1
                    t = tuple(up)
                    if t not in roots:
                        roots.add(t)
                        nxt.append(t)
        layer = nxt

    exponents = _exponent_table(label, rank)
    rs = RootSystem(label=label, rank=rank, cartan=cartan,
                    positive_roots=tuple(sorted(roots)), exponents=exponents)
    _validate(rs)
    return rs


def _validate(rs: RootSystem) -> None:
    if len(rs.positive_roots) != sum(rs.exponents):
        raise RuntimeError(
            f"{rs.name}: generated {len(rs.positive_roots)} positive roots, "
            f"exponents sum to {sum(rs.exponents)}"
        )
    b = rs.height_counts()
    expected = conjugate_partition(sorted(rs.exponents, reverse=True))
    if b != expected:
        raise RuntimeError(f"{rs.name}: height counts {b} are not conjugate "
                           f"to the exponents {rs.exponents}")
    if b[0] != rs.rank or max(rs.heights) != max(rs.exponents):
        raise RuntimeError(f"{rs.name}: height layer sanity checks failed")


def all_root_systems(max_rank: int = 8) -> list[RootSystem]:
    """Every valid system of rank at most max_rank, in label order."""
    out = []
    for label, ranks in VALID_RANKS.items():
        for rank in ranks:
            if rank <= max_rank:
                out.append(build_root_system(label, rank))
    return out


# ---------------------------------------------------------------------------
# Poincare polynomial: degree product vs height product


def verify_poincare_products(rs: RootSystem) -> IdentityReport:
    """Solomon form prod_i (q^(e_i+1)-1)/(q-1) against the Macdonald form
    prod_r (q^(ht+1)-1)/(q^ht-1), both as normalized rational functions
    over integer polynomials.

    The two are compared after clearing denominators, and each quotient is
    divided out exactly so polynomiality is asserted rather than assumed.
    """
    one = Poly([1])
    sol_num, sol_den = one, one
    for e in rs.exponents:
        sol_num *= Poly([-1] + [0] * e + [1])
    for _ in range(rs.rank):
        sol_den *= Poly([-1, 1])
    mac_num, mac_den = one, one
    for r in rs.positive_roots:
        h = sum(r)
        mac_num *= Poly([-1] + [0] * h + [1])
        mac_den *= Poly([-1] + [0] * (h - 1) + [1])

    cleared_equal = sol_num * mac_den == mac_num * sol_den
    sol_q, sol_rem = divmod(sol_num, sol_den)
    mac_q, mac_rem = divmod(mac_num, mac_den)
    if sol_rem or mac_rem:
        raise RuntimeError(f"{rs.name}: product form failed to divide out "
                           f"to a polynomial")
    equal = cleared_equal and sol_q == mac_q
    return IdentityReport(
        identity="poincare-products", params={"system": rs.name},
        lhs=sol_q, rhs=mac_q, equal=equal,
        witness=None if equal else "cleared forms disagree",
    )


# ---------------------------------------------------------------------------
# Height/exponent difference identity


def verify_height_exponent(rs: RootSystem, f: FunctionTable,
                           multiplicative: bool | None = None) -> IdentityReport:
    """Difference identity between root heights and exponents:

        sum_r (f(ht(r)+1) - f(ht(r)))  =  sum_i (f(e_i+1) - f(1)).

    With `multiplicative=None` the product variant is checked too whenever
    no f-value involved vanishes; passing True insists on it and raises on
    a zero value; False skips it.
    """
    top = max(rs.exponents) + 1
    f.require_domain(top)
    lhs = sum((f(h + 1) - f(h) for h in rs.heights), Fraction(0))
    rhs = sum((f(e + 1) - f(1) for e in rs.exponents), Fraction(0))
    equal = lhs == rhs
    mult_status = "skipped"
    if multiplicative is not False:
        zeros = [i for i in range(1, top + 1) if f(i) == 0]
        if zeros and multiplicative:
            raise ZeroDivisionError(
                f"undefined fraction: f({zeros[0]}) = 0 in multiplicative mode"
            )
        if not zeros:
            mp_lhs = math.prod((Fraction(f(h + 1), f(h)) for h in rs.heights),
                               start=Fraction(1))
            mp_rhs = math.prod((Fraction(f(e + 1), f(1)) for e in rs.exponents),
                               start=Fraction(1))
            equal = equal and mp_lhs == mp_rhs
            mult_status = "ok" if mp_lhs == mp_rhs else "mismatch"
        else:
            mult_status = f"skipped (f({zeros[0]}) = 0)"
    return IdentityReport(
        identity="height-exponent",
        params={"system": rs.name, "multiplicative": mult_status},
        lhs=lhs, rhs=rhs, equal=equal,
        witness=None if equal else "height and exponent sums disagree",
    )


def verify_height_exponent_qbernoulli(rs: RootSystem, params: qb.QBernoulliParams,
                                      n: int, tol: float = 1e-8) -> IdentityReport:
    """Height/exponent identity specialized to the q-Bernoulli weight
    f(i) = (lam q^(l(alpha-1)))^i B^(a)_{n;q^l;y}(i), with the left side
    collapsed through the lower-order family."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if params.alpha < 1:
        raise ValueError("specialization needs alpha >= 1")
    ratio = params.lam * params.q ** (params.l * (params.alpha - 1))
    lower = replace(params, alpha=params.alpha - 1)
    lhs = n * qb.q_number(params.l, params.q) * sum(
        ratio ** h * qb.shifted_eval(n - 1, float(h), lower) for h in rs.heights
    )
    b1 = qb.shifted_eval(n, 1.0, params)
    rhs = sum(
        ratio ** (e + 1) * qb.shifted_eval(n, float(e + 1), params) - ratio * b1
        for e in rs.exponents
    )
    residual = abs(lhs - rhs)
    return IdentityReport(
        identity="height-exponent-qbernoulli",
        params={"system": rs.name, "n": n, "q": params.q, "l": params.l,
                "y": params.y, "alpha": params.alpha, "lam": params.lam,
                "tol": tol},
        lhs=lhs, rhs=rhs, equal=residual < tol, residual=residual,
    )


# ---------------------------------------------------------------------------
# Floor-function identities of the same shape


@dataclass(frozen=True)
class FloorIdentityInstance:
    """Input bundle for the floor identities: an order k and a table
    covering 0..2k."""

    k: int
    f: FunctionTable

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        self.f.require_domain(2 * self.k)


def verify_floor_doubling(inst: FloorIdentityInstance) -> IdentityReport:
    """Doubled-floor identity:

        sum_{i=1}^{2k} f(i)*(floor(2k/i) - 2*floor(k/i))
            = sum over {i : frac(k/i) >= 1/2} of f(i).

    The index set on the right is built by the direct fractional-part test
    2*(k mod i) >= i."""
    k, f = inst.k, inst.f
    lhs = sum((f(i) * ((2 * k) // i) - 2 * f(i) * (k // i)
               for i in range(1, 2 * k + 1)), Fraction(0))
    half_up = [i for i in range(1, 2 * k + 1) if 2 * (k % i) >= i]
    rhs = sum((f(i) for i in half_up), Fraction(0))
    return IdentityReport(
        identity="floor-doubling", params={"k": k, "index_set": half_up},
        lhs=lhs, rhs=rhs, equal=lhs == rhs,
        witness=None if lhs == rhs else "floor sums disagree",
    )


def verify_divisor_identity(k: int, f: FunctionTable) -> IdentityReport:
    """Divisor-sum identity:

        sum_{i=1}^{k} f(i)*(floor(k/i) - floor((k-1)/i)) = sum_{i | k} f(i).

    The left side's bracket is the indicator of i dividing k."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    f.require_domain(k)
    lhs = sum((f(i) * (k // i - (k - 1) // i) for i in range(1, k + 1)),
              Fraction(0))
    divisors = [i for i in range(1, k + 1) if k % i == 0]
    rhs = sum((f(i) for i in divisors), Fraction(0))
    return IdentityReport(
        identity="divisor-sum", params={"k": k, "divisors": divisors},
        lhs=lhs, rhs=rhs, equal=lhs == rhs,
        witness=None if lhs == rhs else "divisor sums disagree",
    )
