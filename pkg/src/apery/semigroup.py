"""Numerical semigroups and their first-order invariants.

A numerical semigroup is a subset of the nonnegative integers that contains
0, is closed under addition, and has finite complement (the gap set).  The
sorted gap list is the ground-truth representation here: every identity the
package verifies sums over it.  The full semigroup (no gaps) is a valid,
representable instance and is never special-cased away; it is the endpoint
of every canonical path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from collections.abc import Iterable

from .partitions import conjugate_partition


class NumericalSemigroup:
    """Immutable numerical semigroup, represented by its sorted gap tuple.

    Use :func:`from_generators` or :func:`from_gaps` to construct one; the
    raw constructor trusts its input.
    """

    def __init__(self, gaps: Iterable[int]):
        self.gaps: tuple[int, ...] = tuple(gaps)
        self._gapset = frozenset(self.gaps)

    @property
    def frobenius(self) -> int | None:
        """Largest gap, or None for the full semigroup."""
        return self.gaps[-1] if self.gaps else None

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def multiplicity(self) -> int:
        """Least nonzero member."""
        x = 1
        while x in self._gapset:
            x += 1
        return x

    def contains(self, x: int) -> bool:
        """Membership test; true for every integer beyond the Frobenius number."""
        return x >= 0 and x not in self._gapset

    __contains__ = contains

    def members(self, upto: int) -> list[int]:
        """All members in [0, upto]."""
        return [x for x in range(upto + 1) if x not in self._gapset]

    @cached_property
    def minimal_generators(self) -> tuple[int, ...]:
        """Members that are not sums of two smaller nonzero members.

        Every minimal generator is at most frobenius + multiplicity, so the
        search window is finite.
        """
        bound = (self.frobenius or 0) + self.multiplicity
        window = [x for x in range(1, bound + 1) if x in self]
        winset = set(window)
        gens = []
        for x in window:
            if not any(x - s in winset for s in window if 0 < s < x):
                gens.append(x)
        return tuple(gens)

    def __eq__(self, other) -> bool:
        return isinstance(other, NumericalSemigroup) and self.gaps == other.gaps

    def __hash__(self) -> int:
        return hash(self.gaps)

    def __repr__(self) -> str:
        gens = ",".join(str(g) for g in self.minimal_generators)
        return f"NumericalSemigroup(<{gens}>)"


@dataclass(frozen=True)
class AperySet:
    """Apery set of a semigroup with respect to a nonzero member m.

    `values[i]` is the least member congruent to i mod m; `counts[i]` is the
    number of gaps congruent to i mod m.  The two are tied together by
    values[i] = m*counts[i] + i, which :func:`apery_set` cross-checks.
    """

    m: int
    values: tuple[int, ...]
    counts: tuple[int, ...]

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class HeightPartition:
    """Gap counts by m-height: b[i] = #{gaps k with floor(k/m) == i}."""

    m: int
    b: tuple[int, ...]


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Smallest numerical semigroup containing 0 and the given generators.

    Gaps are found by an additive-closure sieve over [0, B] with
    B = (min-1)*max, a finite bound that always exceeds the Frobenius
    number of a coprime generating set.
    """
    gen_list = sorted(set(gens))
    if not gen_list:
        raise ValueError("empty generator set")
    if any(g <= 0 for g in gen_list):
        raise ValueError(f"generators must be positive: {gen_list}")
    if math.gcd(*gen_list) != 1:
        raise ValueError(
            f"gcd({','.join(map(str, gen_list))}) != 1: infinite gap set, "
            "not a numerical semigroup"
        )
    bound = (gen_list[0] - 1) * gen_list[-1]
    member = bytearray(bound + 1)
    member[0] = 1
    for x in range(bound + 1):
        if member[x]:
            for g in gen_list:
                if x + g <= bound:
                    member[x + g] = 1
    return NumericalSemigroup(x for x in range(1, bound + 1) if not member[x])


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    """Semigroup with exactly the given gaps.

    Raises if the complement is not additively closed, naming a witness
    pair of members whose sum lands in the gap set.
    """
    gap_list = sorted(set(gaps))
    if any(g <= 0 for g in gap_list):
        raise ValueError(f"gaps must be positive integers: {gap_list}")
    gapset = set(gap_list)
    for g in gap_list:
        for s in range(1, g // 2 + 1):
            if s not in gapset and (g - s) not in gapset:
                raise ValueError(
                    f"closure violated: {s}+{g - s}={g} is listed as a gap "
                    f"but {s} and {g - s} are members"
                )
    return NumericalSemigroup(gap_list)


def apery_set(s: NumericalSemigroup, m: int) -> AperySet:
    """Apery set of `s` with respect to the nonzero member `m`.

    Values are computed by scanning each residue class for its least member;
    counts are computed independently from the gap list, and the relation
    values[i] = m*counts[i] + i is verified before returning.
    """
    _require_member(s, m)
    values = []
    for i in range(m):
        x = i
        while not s.contains(x):
            x += m
        values.append(x)
    counts = [0] * m
    for g in s.gaps:
        counts[g % m] += 1
    for i in range(m):
        if values[i] != m * counts[i] + i:
            raise RuntimeError(
                f"apery cross-check failed at residue {i}: "
                f"least member {values[i]} != {m}*{counts[i]}+{i}"
            )
    return AperySet(m=m, values=tuple(values), counts=tuple(counts))


def height_partition(s: NumericalSemigroup, m: int) -> HeightPartition:
    """Counts of gaps by m-height, verified conjugate to the Apery counts.

    The multiset of nonzero counts[i], sorted descending, is a partition
    whose conjugate is exactly (b[0], b[1], ...).
    """
    _require_member(s, m)
    if not s.gaps:
        return HeightPartition(m=m, b=())
    top = s.gaps[-1] // m
    b = [0] * (top + 1)
    for g in s.gaps:
        b[g // m] += 1
    a_parts = tuple(sorted((c for c in apery_set(s, m).counts if c), reverse=True))
    if conjugate_partition(a_parts) != tuple(b):
        raise RuntimeError(
            f"height/count conjugacy failed for m={m}: counts {a_parts}, heights {b}"
        )
    return HeightPartition(m=m, b=tuple(b))


def _require_member(s: NumericalSemigroup, m: int) -> None:
    if m <= 0 or not s.contains(m):
        raise ValueError(f"m={m} is not a nonzero member of {s!r}")
