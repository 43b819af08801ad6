"""Independent two-sided verification of Apery-set identities.

Every verifier here computes the left and the right side of an identity
directly from its defining sums or products: subsets are enumerated
explicitly (lexicographic combinations), never collapsed through the
telescoping argument that proves the identity.  The canonical path supplies
the per-step data (the adjoined gap c_i and the shared Apery elements T_i);
the path construction itself double-checks the one-element update law, and
the telescoping machinery in `treepath` provides a third, independent
computation route that the test suite compares against.

Exactness strategy: test functions are tables of rationals; each verifier
extracts a common denominator once and runs its inner loops over plain
integers (all the summands are homogeneous in the function values, so both
sides scale by the same power of the denominator).  Reported values are
exact rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from collections.abc import Callable, Sequence

from .semigroup import NumericalSemigroup, AperySet, apery_set
from .treepath import CanonicalPath, canonical_path
from .symfunc import Poly, elementary, complete, divided_difference
from . import qbernoulli as qb

# Explicit subset enumeration is the whole point; refuse to grind through
# astronomically many combinations instead of silently taking minutes.
SUBSET_LIMIT = 100_000

# Denominators for random tables are drawn from the divisors of this base,
# so the common denominator of a table stays machine-word sized.
_DENOMINATOR_BASE = 2520
_DENOMINATORS = tuple(d for d in range(1, 101) if _DENOMINATOR_BASE % d == 0)


class FunctionTable:
    """An exact-rational test function on {0, 1, ..., n_max}."""

    def __init__(self, values: Sequence):
        self.values: tuple[Fraction, ...] = tuple(Fraction(v) for v in values)
        if not self.values:
            raise ValueError("function table must cover at least the point 0")

    @classmethod
    def from_callable(cls, fn: Callable[[int], object], n_max: int) -> "FunctionTable":
        return cls([fn(i) for i in range(n_max + 1)])

    @property
    def domain_max(self) -> int:
        return len(self.values) - 1

    @cached_property
    def injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def require_domain(self, n_needed: int) -> None:
        if self.domain_max < n_needed:
            raise ValueError(
                f"function table domain too small: need 0..{n_needed}, "
                f"have 0..{self.domain_max}"
            )

    @cached_property
    def _scaled(self) -> tuple[tuple[int, ...], int]:
        den = math.lcm(*(v.denominator for v in self.values))
        return tuple(v.numerator * (den // v.denominator) for v in self.values), den

    def scaled(self) -> tuple[tuple[int, ...], int]:
        """Integer numerators over one common denominator."""
        return self._scaled

    def __call__(self, i: int) -> Fraction:
        if not 0 <= i <= self.domain_max:
            raise ValueError(f"point {i} outside table domain 0..{self.domain_max}")
        return self.values[i]

    def collision(self) -> tuple[int, int] | None:
        """A pair of points with equal values, if any."""
        seen: dict[Fraction, int] = {}
        for i, v in enumerate(self.values):
            if v in seen:
                return seen[v], i
            seen[v] = i
        return None


def random_function_table(rng, n_max: int, injective: bool = True) -> FunctionTable:
    """Random rational table with numerators up to 10^6 and denominators up
    to 100.  Denominators divide 2520 so the table's common denominator
    stays small; injectivity is enforced by rejection.  With
    `injective=False` one deliberate collision is planted."""
    values: list[Fraction] = []
    used = set()
    while len(values) <= n_max:
        v = Fraction(rng.randint(-(10 ** 6), 10 ** 6), rng.choice(_DENOMINATORS))
        if injective and v in used:
            continue
        used.add(v)
        values.append(v)
    if not injective and n_max >= 1:
        j = rng.randrange(1, n_max + 1)
        values[j] = values[0]
    return FunctionTable(values)


@dataclass(frozen=True)
class SymmetricSpec:
    """A symmetric function F(x_1..x_p) to feed the general identity.

    Kinds: elementary(k), complete(k), product (prod of z+x_i, polynomial
    valued), inverse_product (prod of 1/(z-x_i) at a fixed rational z),
    divided_difference(w), power_sum(k), custom (arbitrary callable; not
    necessarily symmetric, in which case the identity is expected to fail
    and the verifier simply reports the inequality).
    """

    kind: str
    p: int
    k: int | None = None
    w: Poly | None = None
    z: Fraction | None = None
    func: Callable | None = None
    label: str | None = None

    _KINDS = ("elementary", "complete", "product", "inverse_product",
              "divided_difference", "power_sum", "custom")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {self._KINDS}")
        if self.p < 1:
            raise ValueError(f"subset size p must be >= 1, got {self.p}")
        if self.kind in ("elementary", "complete", "power_sum"):
            if self.k is None or self.k < 1:
                raise ValueError(f"kind {self.kind} needs an order k >= 1")
            if self.kind == "elementary" and self.k > self.p:
                raise ValueError(f"elementary needs k <= p, got k={self.k}, p={self.p}")
        if self.kind == "divided_difference" and self.w is None:
            raise ValueError("divided_difference needs a polynomial w")
        if self.kind == "inverse_product" and self.z is None:
            raise ValueError("inverse_product needs a sample point z")
        if self.kind == "custom" and self.func is None:
            raise ValueError("custom kind needs a callable")

    @property
    def needs_injective(self) -> bool:
        return self.kind == "divided_difference"

    @property
    def name(self) -> str:
        if self.label:
            return self.label
        if self.k is not None:
            return f"{self.kind}[k={self.k}]"
        return self.kind

    def evaluate(self, xs: Sequence[Fraction]):
        if len(xs) != self.p:
            raise ValueError(f"expected {self.p} arguments, got {len(xs)}")
        if self.kind == "elementary":
            return elementary(self.k, xs)
        if self.kind == "complete":
            return complete(self.k, xs)
        if self.kind == "power_sum":
            return sum((x ** self.k for x in xs), Fraction(0))
        if self.kind == "product":
            coeffs = [Fraction(1)]
            for x in xs:
                nxt = [Fraction(0)] * (len(coeffs) + 1)
                for i, c in enumerate(coeffs):
                    nxt[i] += c * x
                    nxt[i + 1] += c
                coeffs = nxt
            return Poly(coeffs)
        if self.kind == "inverse_product":
            out = Fraction(1)
            for x in xs:
                out /= self.z - x
            return out
        if self.kind == "divided_difference":
            return divided_difference(self.w, xs)
        return self.func(xs)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one two-sided verification.

    `equal` means exact equality of lhs and rhs (component-wise when the
    values are polynomials or per-sample tuples); numerical identities set
    `residual` instead and `equal` reflects the tolerance used.
    """

    identity: str
    params: dict
    lhs: object
    rhs: object
    equal: bool
    witness: str | None = None
    residual: float | None = None


def _paths_of(s: NumericalSemigroup, m: int,
              path: CanonicalPath | None) -> CanonicalPath:
    if path is not None:
        if path.base != s or path.m != m:
            raise ValueError("supplied path belongs to a different instance")
        return path
    return canonical_path(s, m)


def _check_subset_budget(m: int, p: int):
    if not 1 <= p <= m:
        raise ValueError(f"need 1 <= p <= m={m}, got p={p}")
    if math.comb(m, p) > SUBSET_LIMIT:
        raise ValueError(
            f"binomial({m},{p}) = {math.comb(m, p)} exceeds the enumeration "
            f"limit {SUBSET_LIMIT}"
        )


def _needed_domain(s: NumericalSemigroup, m: int) -> int:
    frob = s.frobenius or 0
    return frob + m


def evaluation_points(s: NumericalSemigroup, m: int) -> list[int]:
    """Every point any Apery identity evaluates: the residues, the gaps, the
    shifted gaps, and (inside those) the Apery values of all path vertices."""
    pts = set(range(m)) | set(s.gaps) | {g + m for g in s.gaps}
    return sorted(pts)


# ---------------------------------------------------------------------------
# The gap-sum / Apery-sum identity


def verify_gassert_shor(s: NumericalSemigroup, m: int, f: FunctionTable,
                        apery: AperySet | None = None) -> IdentityReport:
    """Gassert-Shor formula: sum over gaps of f(i+m)-f(i) equals the sum
    over residues of f(a_i)-f(i).

    Both sides are evaluated from scratch.  An `apery` override is accepted
    so that corrupted data can be fed in; on inequality the witness names
    the first residue class whose partial sums disagree.
    """
    f.require_domain(_needed_domain(s, m))
    aset = apery if apery is not None else apery_set(s, m)
    lhs = sum((f(i + m) - f(i) for i in s.gaps), Fraction(0))
    rhs = sum((f(aset.values[i]) - f(i) for i in range(m)), Fraction(0))
    witness = None
    if lhs != rhs:
        for i in range(m):
            class_lhs = sum((f(g + m) - f(g) for g in s.gaps if g % m == i),
                            Fraction(0))
            class_rhs = f(aset.values[i]) - f(i)
            if class_lhs != class_rhs:
                witness = (f"residue class {i}: gap-side sum {class_lhs} != "
                           f"apery-side {class_rhs} (a_{i} = {aset.values[i]})")
                break
    return IdentityReport(
        identity="gassert-shor", params={"m": m},
        lhs=lhs, rhs=rhs, equal=lhs == rhs, witness=witness,
    )


# ---------------------------------------------------------------------------
# General symmetric-function form


def verify_general(s: NumericalSemigroup, m: int, f: FunctionTable,
                   spec: SymmetricSpec,
                   path: CanonicalPath | None = None) -> IdentityReport:
    """General subset identity for a symmetric function F over p-subsets.

    Left: per path step, F over (p-1)-subsets of T_i with the swapped
    element appended, upper minus lower.  Right: F summed over p-subsets of
    the Apery set minus p-subsets of the residues.  F receives its
    arguments in increasing point order with the swapped element last, so a
    non-symmetric F shows up as an inequality, which is reported, not
    raised.
    """
    p = spec.p
    _check_subset_budget(m, p)
    f.require_domain(_needed_domain(s, m))
    if spec.needs_injective and not f.injective:
        i, j = f.collision()
        raise ValueError(
            f"{spec.kind} needs injective f, but f({i}) == f({j}) == {f(i)}"
        )
    path = _paths_of(s, m, path)

    def subset_sum(points: Sequence[int], size: int, extra: tuple = ()):
        total = 0
        for js in combinations(points, size):
            total = total + spec.evaluate(tuple(f(a) for a in js) + extra)
        return total

    lhs = 0
    for step in path.steps:
        c = step.frobenius_added
        lhs = lhs + (subset_sum(step.t_set, p - 1, (f(c + m),))
                     - subset_sum(step.t_set, p - 1, (f(c),)))
    top = path.apery_sets[-1].values
    rhs = subset_sum(sorted(top), p) - subset_sum(range(m), p)
    equal = lhs == rhs
    witness = None
    if not equal:
        witness = _general_witness(path, f, spec, p)
    return IdentityReport(
        identity="general", params={"m": m, "p": p, "F": spec.name},
        lhs=lhs, rhs=rhs, equal=equal, witness=witness,
    )


def _general_witness(path: CanonicalPath, f: FunctionTable,
                     spec: SymmetricSpec, p: int) -> str:
    """First step where the per-step terms stop matching the difference of
    full subset sums over the two adjacent Apery sets."""
    def full(vals):
        return sum((spec.evaluate(tuple(f(a) for a in js))
                    for js in combinations(sorted(vals), p)), 0)

    m = path.m
    for i, step in enumerate(path.steps, start=1):
        c = step.frobenius_added
        step_term = sum(
            (spec.evaluate(tuple(f(a) for a in js) + (f(c + m),))
             - spec.evaluate(tuple(f(a) for a in js) + (f(c),))
             for js in combinations(step.t_set, p - 1)),
            0,
        )
        h_diff = (full(path.apery_sets[i].values)
                  - full(path.apery_sets[i - 1].values))
        if step_term != h_diff:
            return (f"step {i} (gap {c}): per-step term differs from the "
                    f"vertex-difference by {step_term - h_diff}")
    return "aggregate mismatch without a single offending step"


# ---------------------------------------------------------------------------
# Linear-factor products (polynomial valued)


def _linear_product(values: Sequence[int]) -> list[int]:
    """Integer coefficients of prod (v + u) over the given u's."""
    coeffs = [1]
    for u in values:
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c * u
            nxt[i + 1] += c
        coeffs = nxt
    return coeffs


def _poly_from_scaled(vcoeffs: Sequence[int], den: int, p: int) -> Poly:
    """Convert coefficients in v = den*z back to a polynomial in z with an
    overall den^-p prefactor."""
    return Poly([Fraction(c * den ** j, den ** p) for j, c in enumerate(vcoeffs)])


def verify_products(s: NumericalSemigroup, m: int, f: FunctionTable, p: int,
                    path: CanonicalPath | None = None) -> IdentityReport:
    """Product identity: subset sums of prod_(a in I) (z + f(a)), as exact
    polynomials in z, against the per-step form with the factor
    f(c_i+m) - f(c_i) pulled out.  Equality is coefficient-wise."""
    _check_subset_budget(m, p)
    f.require_domain(_needed_domain(s, m))
    path = _paths_of(s, m, path)
    u, den = f.scaled()

    lhs_v = [0] * (p + 1)
    for step in path.steps:
        c = step.frobenius_added
        diff = u[c + m] - u[c]
        inner = [0] * p
        for js in combinations(step.t_set, p - 1):
            prod = _linear_product([u[a] for a in js])
            for i, coef in enumerate(prod):
                inner[i] += coef
        for i, coef in enumerate(inner):
            lhs_v[i] += diff * coef

    rhs_v = [0] * (p + 1)
    top = sorted(path.apery_sets[-1].values)
    for points, sign in ((top, 1), (range(m), -1)):
        for js in combinations(points, p):
            prod = _linear_product([u[a] for a in js])
            for i, coef in enumerate(prod):
                rhs_v[i] += sign * coef

    equal = lhs_v == rhs_v
    witness = None
    if not equal:
        bad = next(j for j in range(p + 1) if lhs_v[j] != rhs_v[j])
        witness = f"coefficient of z^{bad} differs"
    return IdentityReport(
        identity="products", params={"m": m, "p": p},
        lhs=_poly_from_scaled(lhs_v, den, p), rhs=_poly_from_scaled(rhs_v, den, p),
        equal=equal, witness=witness,
    )


# ---------------------------------------------------------------------------
# Inverse-product (rational function) identity, certified at sample points


def inverse_product_degree_bound(s: NumericalSemigroup, m: int,
                                 f: FunctionTable, p: int) -> int:
    """Degree bound of the identity after clearing denominators.

    The common denominator collects one linear factor per distinct f-value
    over the evaluation points; each cleared term then has degree at most
    (number of factors) - p.  Repeated values square factors, so the
    non-injective fallback multiplies by p instead of subtracting."""
    pts = evaluation_points(s, m)
    distinct = len({f(a) for a in pts})
    if distinct == len(pts):
        return max(distinct - p, 0)
    return p * distinct


def generic_z_samples(count: int, avoid: set[Fraction],
                      start: int = 0) -> list[Fraction]:
    """Rational sample points t + 1/101 clear of the given poles.  Any f
    with denominators up to 100 can never collide with these."""
    samples: list[Fraction] = []
    t = start
    shift = Fraction(1, 101)
    while len(samples) < count:
        z = t + shift
        if z not in avoid:
            samples.append(z)
        t += 1
    return samples


def verify_inverse_products(s: NumericalSemigroup, m: int, f: FunctionTable,
                            p: int, z_samples: Sequence[Fraction],
                            path: CanonicalPath | None = None) -> IdentityReport:
    """Inverse-product identity: subset sums of prod 1/(z - f(a)) at each
    given sample point, exactly.

    Supplying more samples than the cleared-denominator degree bound makes
    the sample certificate complete; the bound is recorded in the report
    parameters.  A sample colliding with an f-value raises and names the
    collision so the caller can resample.
    """
    _check_subset_budget(m, p)
    f.require_domain(_needed_domain(s, m))
    path = _paths_of(s, m, path)
    u, den = f.scaled()
    pts = evaluation_points(s, m)
    top = sorted(path.apery_sets[-1].values)

    lhs_list: list[Fraction] = []
    rhs_list: list[Fraction] = []
    for z in z_samples:
        z = Fraction(z)
        zn, zd = z.numerator, z.denominator
        lin = {a: zn * den - u[a] * zd for a in pts}
        for a, num in lin.items():
            if num == 0:
                raise ValueError(
                    f"sample z={z} hits the pole f({a}) = {f(a)}; resample"
                )
        scale = zd * den

        rhs = Fraction(0)
        for points, sign in ((top, 1), (list(range(m)), -1)):
            full = math.prod(lin[a] for a in points)
            acc = 0
            for js in combinations(points, p):
                rest = set(points) - set(js)
                acc += math.prod((lin[a] for a in rest), start=1)
            rhs += sign * Fraction(scale ** p * acc, full)

        lhs = Fraction(0)
        for step in path.steps:
            c = step.frobenius_added
            pool = list(step.t_set) + [c, c + m]
            full = math.prod(lin[a] for a in pool)
            acc = 0
            for js in combinations(step.t_set, p - 1):
                rest = set(step.t_set) - set(js)
                acc += math.prod((lin[a] for a in rest), start=1)
            diff = u[c + m] - u[c]
            lhs += Fraction(diff * zd ** (p + 1) * den ** p * acc, full)
        lhs_list.append(lhs)
        rhs_list.append(rhs)

    equal = lhs_list == rhs_list
    witness = None
    if not equal:
        bad = next(i for i in range(len(z_samples)) if lhs_list[i] != rhs_list[i])
        witness = f"mismatch at sample z={z_samples[bad]}"
    return IdentityReport(
        identity="inverse-products",
        params={"m": m, "p": p, "samples": len(list(z_samples)),
                "degree_bound": inverse_product_degree_bound(s, m, f, p)},
        lhs=tuple(lhs_list), rhs=tuple(rhs_list), equal=equal, witness=witness,
    )


# ---------------------------------------------------------------------------
# Elementary / complete symmetric function identities


def verify_elementary(s: NumericalSemigroup, m: int, f: FunctionTable,
                      p: int, k: int,
                      path: CanonicalPath | None = None) -> IdentityReport:
    """Elementary symmetric identity of order k (1 <= k <= p): per-step
    e_{k-1} over (p-1)-subsets of T_i times the swap difference, against
    e_k subset sums over the Apery set minus the residues."""
    _check_subset_budget(m, p)
    if not 1 <= k <= p:
        raise ValueError(f"need 1 <= k <= p={p}, got k={k}")
    f.require_domain(_needed_domain(s, m))
    path = _paths_of(s, m, path)
    u, den = f.scaled()

    lhs_int = 0
    for step in path.steps:
        c = step.frobenius_added
        diff = u[c + m] - u[c]
        inner = 0
        for js in combinations(step.t_set, p - 1):
            inner += elementary(k - 1, [u[a] for a in js])
        lhs_int += diff * inner

    rhs_int = 0
    top = sorted(path.apery_sets[-1].values)
    for points, sign in ((top, 1), (range(m), -1)):
        for js in combinations(points, p):
            rhs_int += sign * elementary(k, [u[a] for a in js])

    scale = den ** k
    return IdentityReport(
        identity="elementary", params={"m": m, "p": p, "k": k},
        lhs=Fraction(lhs_int, scale), rhs=Fraction(rhs_int, scale),
        equal=lhs_int == rhs_int,
        witness=None if lhs_int == rhs_int else "aggregate mismatch",
    )


def verify_complete(s: NumericalSemigroup, m: int, f: FunctionTable,
                    p: int, k: int,
                    path: CanonicalPath | None = None) -> IdentityReport:
    """Complete homogeneous identity of order k >= 1: per-step h_{k-1} over
    (p-1)-subsets of T_i extended by both swap values, against h_k subset
    sums over the Apery set minus the residues."""
    _check_subset_budget(m, p)
    if k < 1:
        raise ValueError(f"need k >= 1, got k={k}")
    f.require_domain(_needed_domain(s, m))
    path = _paths_of(s, m, path)
    u, den = f.scaled()

    lhs_int = 0
    for step in path.steps:
        c = step.frobenius_added
        diff = u[c + m] - u[c]
        inner = 0
        for js in combinations(step.t_set, p - 1):
            inner += complete(k - 1, [u[a] for a in js] + [u[c], u[c + m]])
        lhs_int += diff * inner

    rhs_int = 0
    top = sorted(path.apery_sets[-1].values)
    for points, sign in ((top, 1), (range(m), -1)):
        for js in combinations(points, p):
            rhs_int += sign * complete(k, [u[a] for a in js])

    scale = den ** k
    return IdentityReport(
        identity="complete", params={"m": m, "p": p, "k": k},
        lhs=Fraction(lhs_int, scale), rhs=Fraction(rhs_int, scale),
        equal=lhs_int == rhs_int,
        witness=None if lhs_int == rhs_int else "aggregate mismatch",
    )


# ---------------------------------------------------------------------------
# Divided-difference identity


def verify_divided_differences(s: NumericalSemigroup, m: int, f: FunctionTable,
                               p: int, w: Poly,
                               path: CanonicalPath | None = None) -> IdentityReport:
    """Divided-difference identity: per-step Lagrange-form differences at
    p+1 nodes (the subset plus both swap values) against plain p-node
    divided differences over the Apery set minus the residues.

    Requires f injective on every evaluation point, so all node sets are
    pairwise distinct.
    """
    _check_subset_budget(m, p)
    f.require_domain(_needed_domain(s, m))
    path = _paths_of(s, m, path)
    pts = evaluation_points(s, m)
    seen: dict[Fraction, int] = {}
    for a in pts:
        v = f(a)
        if v in seen:
            raise ValueError(
                f"divided differences need injective f on the evaluation "
                f"points, but f({seen[v]}) == f({a}) == {v}"
            )
        seen[v] = a
    u, den = f.scaled()
    # Absorb the node denominator into the weight per node: a divided
    # difference at r nodes u/den equals sum_c w_c den^(r-1-c) * (the same
    # form on integer nodes with w = z^c).  With the step factor's 1/den,
    # both sides share the den^(p-1-c) monomial scaling, folded in here.
    wtilde = {
        a: sum((wc * Fraction(den) ** (p - 1 - c) * u[a] ** c
                for c, wc in enumerate(w.coeffs) if wc), Fraction(0))
        for a in pts
    }

    def lagrange(nodes: Sequence[int]):
        total = Fraction(0)
        for a in nodes:
            ua = u[a]
            denom = 1
            for b in nodes:
                if b != a:
                    denom *= ua - u[b]
            total += wtilde[a] / denom
        return total

    lhs = Fraction(0)
    for step in path.steps:
        c = step.frobenius_added
        diff = u[c + m] - u[c]
        inner = Fraction(0)
        for js in combinations(step.t_set, p - 1):
            inner += lagrange(list(js) + [c, c + m])
        lhs += diff * inner

    rhs = Fraction(0)
    top = sorted(path.apery_sets[-1].values)
    for points, sign in ((top, 1), (list(range(m)), -1)):
        for js in combinations(points, p):
            rhs += sign * lagrange(js)

    return IdentityReport(
        identity="divided-differences",
        params={"m": m, "p": p, "w_degree": w.degree},
        lhs=lhs, rhs=rhs, equal=lhs == rhs,
        witness=None if lhs == rhs else "aggregate mismatch",
    )


# ---------------------------------------------------------------------------
# Multiplicative power-sum identity


def verify_power_sum_products(s: NumericalSemigroup, m: int, k: int, p: int,
                              path: CanonicalPath | None = None) -> IdentityReport:
    """Multiplicative identity for power sums over zero-free subsets
    (k >= 1, 1 <= p < m).

    Left: product over steps and (p-1)-subsets J of T_i - {0} of
    1 + (sum_j C(k,j) c_i^(k-j) m^j) / (sum_(a in J) a^k + c_i^k).
    Right: the ratio of products of subset power sums over the zero-free
    Apery set and the zero-free residues.  Every denominator is positive
    because c_i >= 1, which is asserted.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got k={k}")
    if not 1 <= p < m:
        raise ValueError(f"need 1 <= p < m={m}, got p={p}")
    _check_subset_budget(m - 1, p)
    path = _paths_of(s, m, path)

    lhs = Fraction(1)
    for step in path.steps:
        c = step.frobenius_added
        bump = sum(math.comb(k, j) * c ** (k - j) * m ** j for j in range(1, k + 1))
        pool = [a for a in step.t_set if a != 0]
        for js in combinations(pool, p - 1):
            base = sum(a ** k for a in js) + c ** k
            if base <= 0:
                raise RuntimeError(f"nonpositive denominator {base} at gap {c}")
            lhs *= 1 + Fraction(bump, base)

    top = [a for a in path.apery_sets[-1].values if a != 0]
    num = math.prod(sum(a ** k for a in js) for js in combinations(sorted(top), p))
    dencomb = math.prod(sum(a ** k for a in js)
                        for js in combinations(range(1, m), p))
    rhs = Fraction(num, dencomb)

    params: dict = {"m": m, "p": p, "k": k}
    if p == 1:
        params["closed_rhs"] = str(Fraction(
            math.prod(a ** k for a in top), math.factorial(m - 1) ** k))
    if p == m - 1:
        params["closed_rhs"] = str(Fraction(sum(a ** k for a in top),
                                            sum(a ** k for a in range(1, m))))
    return IdentityReport(
        identity="power-sum-products", params=params,
        lhs=lhs, rhs=rhs, equal=lhs == rhs,
        witness=None if lhs == rhs else "aggregate mismatch",
    )


# ---------------------------------------------------------------------------
# q-Bernoulli specialization of the gap-sum identity


def verify_gassert_shor_qbernoulli(s: NumericalSemigroup, m: int,
                                   params: "qb.QBernoulliParams", n: int,
                                   x: float = 0.0,
                                   tol: float = 1e-8) -> IdentityReport:
    """Gap-sum identity specialized to the q-Bernoulli weight function.

    The left side goes through the lower-order family (the closed form of
    the m-step difference); the right side sums the weight itself over the
    Apery values, so the two evaluations are numerically independent.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if params.alpha < 1:
        raise ValueError("specialization needs alpha >= 1")
    aset = apery_set(s, m)
    f = qb.semigroup_weight_function(params, n, m, x)
    ratio = params.lam * params.q ** (params.l * (params.alpha - 1))
    lower = replace(params, alpha=params.alpha - 1)
    lhs = n * qb.q_number(params.l, params.q) * sum(
        ratio ** math.floor((x + g) / m) * qb.shifted_eval(n - 1, g / m, lower)
        for g in s.gaps
    )
    rhs = sum(f(aset.values[i]) - f(i) for i in range(m))
    residual = abs(lhs - rhs)
    return IdentityReport(
        identity="gassert-shor-qbernoulli",
        params={"m": m, "n": n, "q": params.q, "l": params.l, "y": params.y,
                "alpha": params.alpha, "lam": params.lam, "x": x, "tol": tol},
        lhs=lhs, rhs=rhs, equal=residual < tol, residual=residual,
    )


# ---------------------------------------------------------------------------
# Structural invariants as reports


def structural_reports(s: NumericalSemigroup, m: int) -> list[IdentityReport]:
    """Re-derive the structural facts about (S, m) from first principles and
    package each as a report: the Apery defining property, the congruence
    chains inside the gap set, the window reconstruction of the member set,
    the one-element update along the canonical path, and the conjugacy of
    the count and height partitions."""
    from .partitions import conjugate_partition
    from .semigroup import height_partition

    aset = apery_set(s, m)
    frob = s.frobenius or 0
    reports = []

    defining = all(
        s.contains(a) and not s.contains(a - m) and a % m == i
        for i, a in enumerate(aset.values)
    ) and aset.values[0] == 0 and aset.counts[0] == 0 \
        and sorted(a % m for a in aset.values) == list(range(m))
    reports.append(IdentityReport(
        identity="structure:apery-defining", params={"m": m},
        lhs=list(aset.values), rhs=list(aset.values), equal=defining,
        witness=None if defining else "apery defining property violated",
    ))

    chains_ok = all(
        all((i + t * m) in s.gaps for t in range(aset.counts[i]))
        for i in range(m)
    )
    reports.append(IdentityReport(
        identity="structure:gap-chains", params={"m": m},
        lhs=list(aset.counts), rhs=list(aset.counts), equal=chains_ok,
        witness=None if chains_ok else "congruence chain leaves the gap set",
    ))

    hi = frob + 2 * m
    direct = [x for x in range(hi + 1) if s.contains(x)]
    rebuilt = sorted(
        a + t * m for a in aset.values for t in range((hi - a) // m + 1)
    )
    reports.append(IdentityReport(
        identity="structure:window-reconstruction", params={"m": m, "window": hi},
        lhs=direct, rhs=rebuilt, equal=direct == rebuilt,
        witness=None if direct == rebuilt else "apery translates miss a member",
    ))

    path = canonical_path(s, m)
    bad_step = None
    for i, step in enumerate(path.steps, start=1):
        c = step.frobenius_added
        upper = set(path.apery_sets[i].values)
        lower_set = set(path.apery_sets[i - 1].values)
        if (upper - {c + m}) != (lower_set - {c}) or len(upper ^ lower_set) != 2:
            bad_step = i
            break
    reports.append(IdentityReport(
        identity="structure:apery-update", params={"m": m, "steps": path.n},
        lhs=path.n, rhs=path.n, equal=bad_step is None,
        witness=None if bad_step is None else f"update law fails at step {bad_step}",
    ))

    hp = height_partition(s, m)
    a_parts = tuple(sorted((c for c in aset.counts if c), reverse=True))
    conj = conjugate_partition(a_parts)
    reports.append(IdentityReport(
        identity="structure:partition-conjugacy", params={"m": m},
        lhs=list(conj), rhs=list(hp.b), equal=conj == tuple(hp.b),
        witness=None if conj == tuple(hp.b) else "conjugate mismatch",
    ))
    return reports
