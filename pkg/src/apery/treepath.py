"""Canonical paths in the tree of numerical semigroups.

The tree joins each semigroup S to S together with its Frobenius number.
Walking from S toward the full semigroup by repeatedly adjoining the
Frobenius number removes the gaps from largest to smallest, so the i-th
vertex from the root is exactly the semigroup whose gaps are the i smallest
gaps of S.  Along the path the Apery set changes by a single element per
step, and this module verifies that update law at construction time.

Vertex functions are plain sequences: a list of n+1 exact values, one per
vertex, ordered from the full semigroup (index 0) up to S (index n).  The
generic difference relations (telescoping sum, telescoping product, and the
first-row determinant relation) each return both sides, computed
independently, so callers can assert equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from collections.abc import Sequence

from .semigroup import NumericalSemigroup, AperySet, apery_set, from_gaps, _require_member


@dataclass(frozen=True)
class PathStep:
    """One edge of the canonical path: S_{i-1} = S_i + {c_i}.

    `t_set` holds the m-1 Apery values shared by the two endpoint
    semigroups; the step swaps c_i + m (above) for c_i (below).
    """

    semigroup: NumericalSemigroup
    frobenius_added: int
    apery: AperySet
    t_set: tuple[int, ...]


class CanonicalPath:
    """The chain S = S_n, S_{n-1}, ..., S_0 = full semigroup, with Apery data.

    `vertices[i]` has gap set {c_1, ..., c_i}; `steps[i-1]` describes the
    edge from S_{i-1} to S_i for i = 1..n.
    """

    def __init__(self, base: NumericalSemigroup, m: int):
        _require_member(base, m)
        self.base = base
        self.m = m
        gaps = base.gaps
        self.vertices: tuple[NumericalSemigroup, ...] = tuple(
            from_gaps(gaps[:i]) for i in range(len(gaps) + 1)
        )
        self.apery_sets: tuple[AperySet, ...] = tuple(
            apery_set(v, m) for v in self.vertices
        )
        steps = []
        for i in range(1, len(gaps) + 1):
            c = gaps[i - 1]
            upper = set(self.apery_sets[i].values)
            lower = set(self.apery_sets[i - 1].values)
            if c + m not in upper or c not in lower:
                raise RuntimeError(
                    f"apery update law violated at step {i}: expected swap "
                    f"of {c + m} for {c}"
                )
            t_set = upper - {c + m}
            if t_set != lower - {c}:
                raise RuntimeError(
                    f"apery update law violated at step {i}: shared sets "
                    f"differ by more than the swapped element"
                )
            frob = self.vertices[i].frobenius
            if frob != c:
                raise RuntimeError(f"vertex {i} has Frobenius {frob}, expected {c}")
            steps.append(
                PathStep(
                    semigroup=self.vertices[i],
                    frobenius_added=c,
                    apery=self.apery_sets[i],
                    t_set=tuple(sorted(t_set)),
                )
            )
        self.steps: tuple[PathStep, ...] = tuple(steps)

    @property
    def n(self) -> int:
        return len(self.steps)

    def __len__(self) -> int:
        """Number of vertices (n + 1)."""
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"CanonicalPath({self.base!r}, m={self.m}, n={self.n})"


def canonical_path(s: NumericalSemigroup, m: int) -> CanonicalPath:
    """Build the canonical path of `s` for the fixed member m, validating
    the one-element Apery update at every step."""
    return CanonicalPath(s, m)


def _check_values(values: Sequence, path: CanonicalPath) -> None:
    if len(values) != len(path):
        raise ValueError(
            f"vertex function has {len(values)} values, path has {len(path)} vertices"
        )


def telescoping_sum(values: Sequence, path: CanonicalPath):
    """Both sides of the telescoping identity along the path.

    Left: sum of per-edge differences H(S_{i+1}) - H(S_i).  Right: the
    endpoint difference H(S_n) - H(S_0).  Equal for every H.
    """
    _check_values(values, path)
    lhs = sum((values[i + 1] - values[i] for i in range(len(values) - 1)), 0)
    rhs = values[-1] - values[0]
    return lhs, rhs


def telescoping_product(values: Sequence, path: CanonicalPath):
    """Both sides of the multiplicative telescoping identity.

    Defined only when H never vanishes on the path; a zero vertex value
    raises, since the fractions are then undefined.
    """
    _check_values(values, path)
    for i, v in enumerate(values):
        if v == 0:
            raise ZeroDivisionError(f"undefined fraction: H vanishes at vertex {i}")
    lhs = 1
    for i in range(len(values) - 1):
        lhs = lhs * Fraction(values[i + 1]) / Fraction(values[i])
    rhs = Fraction(values[-1]) / Fraction(values[0])
    return lhs, rhs


def determinant_relation(values: Sequence, path: CanonicalPath, p: int,
                         fixed_rows: Sequence[Sequence]):
    """Both sides of the sliding-window determinant relation of order p.

    D(y_1..y_p) places the argument vector as the first row above the fixed
    (p-1) x p rows and takes the determinant.  The left side sums D over all
    windows of p consecutive edge differences; the right side is a single D
    of the column-summed differences.  Equality is multilinearity of the
    determinant in its first row; both sides are computed independently
    (the left as a sum of full determinant evaluations).
    """
    _check_values(values, path)
    n = path.n
    if not 0 < p <= n:
        raise ValueError(f"need 0 < p <= n={n}, got p={p}")
    rows = [list(r) for r in fixed_rows]
    if len(rows) != p - 1 or any(len(r) != p for r in rows):
        raise ValueError(f"fixed_rows must be {p - 1}x{p}, got "
                         f"{len(rows)}x{[len(r) for r in rows]}")
    lhs = 0
    for i in range(n - p + 1):
        window = [values[i + j + 1] - values[i + j] for j in range(p)]
        lhs = lhs + _det([window] + rows)
    rhs_row = [values[n - p + 1 + j] - values[j] for j in range(p)]
    rhs = _det([rhs_row] + rows)
    return lhs, rhs


def _det(matrix: Sequence[Sequence]):
    """Exact determinant by cofactor expansion along the first row."""
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    total = 0
    for j in range(size):
        if not matrix[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
