"""Bead (beta-set) encoding behind the ordinary Springer correspondence.

A partition padded to L parts gives the beads lambda*_i + i - 1 (parts read
in increasing order).  Beads of one parity are halved into X, the others
into Y.  Which parity lands in X depends on the group type.
"""

from __future__ import annotations

from typing import Iterable

from .partitions import Partition, PartitionClass


def beads(lam: Iterable[int], length: int) -> list[int]:
    parts = sorted(lam)
    parts = [0] * (length - len(parts)) + parts
    return [p + i for i, p in enumerate(parts)]


def from_beads(bs: Iterable[int]) -> Partition:
    bs = sorted(bs)
    return Partition(sorted((b - i for i, b in enumerate(bs)), reverse=True))


def _padded_length(lam: Partition, cls: PartitionClass) -> int:
    n = len(lam)
    want_odd = cls is not PartitionClass.ORTH_EVEN
    if (n % 2 == 1) != want_odd:
        n += 1
    return n


def split_beads(lam: Partition, cls: PartitionClass) -> tuple[frozenset, frozenset]:
    """The (X, Y) sets of the ordinary Springer symbol of (lam, 1).

    Symplectic: even beads go to X.  Orthogonal: odd beads go to X.  For the
    even orthogonal class the two sides are unordered; the caller picks.
    """
    x_parity = 0 if cls is PartitionClass.SYMP else 1
    xs, ys = [], []
    for b in beads(lam, _padded_length(lam, cls)):
        (xs if b % 2 == x_parity else ys).append(b // 2)
    return frozenset(xs), frozenset(ys)


def join_beads(X: Iterable[int], Y: Iterable[int], cls: PartitionClass) -> Partition:
    """Inverse of :func:`split_beads`."""
    x_parity = 0 if cls is PartitionClass.SYMP else 1
    bs = [2 * x + x_parity for x in X] + [2 * y + 1 - x_parity for y in Y]
    return from_beads(bs)
