"""Integer partition helpers (conjugation and validation)."""

from __future__ import annotations

from collections.abc import Iterable


def is_partition(parts: Iterable[int]) -> bool:
    """True if `parts` is a weakly decreasing sequence of positive integers."""
    seq = list(parts)
    return all(x > 0 for x in seq) and all(a >= b for a, b in zip(seq, seq[1:]))


def conjugate_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Transpose the Young diagram of a partition.

    `parts` must be weakly decreasing positive integers.  Row i of the
    conjugate counts how many parts are >= i+1.
    """
    seq = list(parts)
    if not is_partition(seq):
        raise ValueError(f"not a partition (weakly decreasing, positive): {seq}")
    if not seq:
        return ()
    return tuple(sum(1 for p in seq if p >= i) for i in range(1, seq[0] + 1))
