"""Partition arithmetic, classification, intervals and enumeration.

Partitions are immutable tuples of positive integers in weakly decreasing
order.  Indexed reads through :meth:`Partition.at` are 1-based and
zero-extended, which is the convention every formula in the package uses.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import BoundExceeded, NotAPartition, NotSpecial, WrongClass

DEFAULT_BOUND = 30


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros stripped)."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise NotAPartition(f"not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise NotAPartition(f"negative part: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def at(self, j: int) -> int:
        """lambda_j, 1-based, zero beyond the stored length."""
        if j < 1:
            raise IndexError(j)
        return self[j - 1] if j <= len(self) else 0

    @property
    def size(self) -> int:
        return sum(self)

    def mult(self, i: int) -> int:
        return sum(1 for p in self if p == i)

    def mult_geq(self, i: int) -> int:
        return sum(1 for p in self if p >= i)

    def jord(self) -> list[int]:
        """Distinct positive parts, decreasing."""
        return sorted(set(self), reverse=True)

    def multiplicities(self) -> Counter:
        return Counter(self)


class PartitionClass(str, enum.Enum):
    SYMP = "symp"
    ORTH_ODD = "orth_odd"
    ORTH_EVEN = "orth_even"

    @classmethod
    def parse(cls, text: str) -> "PartitionClass":
        aliases = {
            "symp": cls.SYMP, "symplectic": cls.SYMP, "c": cls.SYMP,
            "orth_odd": cls.ORTH_ODD, "orth-odd": cls.ORTH_ODD, "b": cls.ORTH_ODD,
            "orth_even": cls.ORTH_EVEN, "orth-even": cls.ORTH_EVEN, "d": cls.ORTH_EVEN,
        }
        try:
            return aliases[text.lower()]
        except KeyError:
            raise ValueError(f"unknown partition class {text!r}") from None

    @property
    def bad_parity(self) -> int:
        """Parity (0 even, 1 odd) of the parts carrying a sign in Jord^bp."""
        return 0 if self is PartitionClass.SYMP else 1


def as_partition(lam: Iterable[int]) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def part_sum_k(lam: Sequence[int], k: int) -> int:
    return sum(lam[:k])


def dominance_leq(lam: Sequence[int], other: Sequence[int]) -> bool:
    s = t = 0
    for j in range(max(len(lam), len(other))):
        s += lam[j] if j < len(lam) else 0
        t += other[j] if j < len(other) else 0
        if s > t:
            return False
    return True


def union(lam: Iterable[int], other: Iterable[int]) -> Partition:
    return Partition(sorted(list(lam) + list(other), reverse=True))


def add_sequence(lam: Sequence[int], seq: Sequence[int]) -> Partition:
    n = max(len(lam), len(seq))
    out = [(lam[j] if j < len(lam) else 0) + (seq[j] if j < len(seq) else 0) for j in range(n)]
    if any(x < 0 for x in out):
        raise NotAPartition(f"negative entry in {out}")
    return Partition(out)


def transpose(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


# -- classification ---------------------------------------------------------

def is_symplectic(lam: Sequence[int]) -> bool:
    c = Counter(lam)
    return all(m % 2 == 0 for i, m in c.items() if i % 2 == 1)


def is_orthogonal(lam: Sequence[int]) -> bool:
    c = Counter(lam)
    return all(m % 2 == 0 for i, m in c.items() if i % 2 == 0 and i > 0)


def _pairs_same_parity(lam: Partition, offset: int) -> bool:
    # checks lambda_{2j-1+offset} and lambda_{2j+offset} for all j >= 1
    n = len(lam) + 2
    return all(lam.at(j) % 2 == lam.at(j + 1) % 2 for j in range(1 + offset, n + 1, 2))


def belongs(lam: Iterable[int], cls: PartitionClass) -> bool:
    lam = as_partition(lam)
    if cls is PartitionClass.SYMP:
        return lam.size % 2 == 0 and is_symplectic(lam)
    parity = 1 if cls is PartitionClass.ORTH_ODD else 0
    return lam.size % 2 == parity and is_orthogonal(lam)


def is_special(lam: Iterable[int], cls: PartitionClass) -> bool:
    lam = as_partition(lam)
    if not belongs(lam, cls):
        return False
    if cls is PartitionClass.ORTH_ODD:
        return _pairs_same_parity(lam, 1)
    return _pairs_same_parity(lam, 0)


@dataclass(frozen=True)
class Classification:
    symplectic: bool
    orthogonal_odd: bool
    orthogonal_even: bool
    special_symplectic: bool
    special_orthogonal_odd: bool
    special_orthogonal_even: bool

    def classes(self) -> set[PartitionClass]:
        out = set()
        if self.symplectic:
            out.add(PartitionClass.SYMP)
        if self.orthogonal_odd:
            out.add(PartitionClass.ORTH_ODD)
        if self.orthogonal_even:
            out.add(PartitionClass.ORTH_EVEN)
        return out


def classify(lam: Iterable[int]) -> Classification:
    lam = as_partition(lam)
    return Classification(
        symplectic=belongs(lam, PartitionClass.SYMP),
        orthogonal_odd=belongs(lam, PartitionClass.ORTH_ODD),
        orthogonal_even=belongs(lam, PartitionClass.ORTH_EVEN),
        special_symplectic=is_special(lam, PartitionClass.SYMP),
        special_orthogonal_odd=is_special(lam, PartitionClass.ORTH_ODD),
        special_orthogonal_even=is_special(lam, PartitionClass.ORTH_EVEN),
    )


# -- enumeration ------------------------------------------------------------

def _gen(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _gen(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _all_partitions(n: int) -> tuple[Partition, ...]:
    # lexicographically descending, which is a linear extension of dominance
    return tuple(Partition(p) for p in _gen(n, n))


def enumerate_partitions(
    n: int,
    cls: PartitionClass | str | None = None,
    special_only: bool = False,
    bound: int = DEFAULT_BOUND,
) -> list[Partition]:
    """All partitions of n in a class ("all"/None for every partition).

    The result is sorted lexicographically descending, so every partition
    precedes the partitions it dominates.
    """
    if n < 0:
        return []
    if n > bound:
        raise BoundExceeded(f"{n} exceeds enumeration bound {bound}")
    if isinstance(cls, str):
        cls = None if cls == "all" else PartitionClass.parse(cls)
    parts = _all_partitions(n)
    if cls is None:
        if special_only:
            raise WrongClass("special_only needs a partition class")
        return list(parts)
    test = is_special if special_only else belongs
    return [p for p in parts if test(p, cls)]


# -- intervals of special partitions ---------------------------------------

@dataclass(frozen=True)
class Interval:
    """One interval of a special partition: a set of part values.

    ``j_max`` is None for the interval containing 0, whose index set J is
    infinite.
    """

    values: tuple[int, ...]  # decreasing
    j_min: int
    j_max: int | None

    @property
    def top(self) -> int:
        return self.values[0]

    @property
    def bottom(self) -> int:
        return self.values[-1]

    def __contains__(self, i: object) -> bool:
        return i in self.values

    def __lt__(self, other: "Interval") -> bool:
        return self.top < other.bottom

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.values)) + "}"


@dataclass(frozen=True)
class IntervalSet:
    lam: Partition
    cls: PartitionClass
    tilde: tuple[Interval, ...]  # increasing; for SYMP tilde[0] is Delta_min

    @property
    def ints(self) -> tuple[Interval, ...]:
        if self.cls is PartitionClass.SYMP:
            return self.tilde[1:]
        return self.tilde

    @property
    def delta_min(self) -> Interval | None:
        return self.tilde[0] if self.tilde else None

    def containing(self, i: int) -> Interval | None:
        for d in self.tilde:
            if i in d:
                return d
        return None


def _jmin_jmax(lam: Partition, values: Sequence[int]) -> tuple[int, int | None]:
    js = [j for j in range(1, len(lam) + 1) if lam.at(j) in values]
    if 0 in values:
        return (js[0] if js else len(lam) + 1), None
    return js[0], js[-1]


@lru_cache(maxsize=None)
def _intervals(lam: Partition, cls: PartitionClass) -> IntervalSet:
    if cls is PartitionClass.ORTH_ODD or not is_special(lam, cls):
        raise NotSpecial(f"{list(lam)} is not special of class {cls.value}")
    bad = cls.bad_parity
    jord = lam.jord()
    jbp = [i for i in jord if i % 2 == bad]
    odd_mult = [i for i in jbp if lam.mult(i) % 2 == 1]
    universe = list(jord)
    if cls is PartitionClass.SYMP:
        universe.append(0)
        if len(odd_mult) % 2 == 1:
            odd_mult.append(0)
        singles = jbp + [0]
    else:
        singles = jbp
    spans = [(odd_mult[2 * h], odd_mult[2 * h + 1]) for h in range(len(odd_mult) // 2)]
    blocks: list[tuple[int, ...]] = []
    for hi, lo in spans:
        blocks.append(tuple(i for i in universe if hi >= i >= lo))
    for i in singles:
        if not any(hi >= i >= lo for hi, lo in spans):
            blocks.append((i,))
    blocks.sort(key=lambda b: b[0])
    tilde = tuple(Interval(b, *_jmin_jmax(lam, b)) for b in blocks)
    return IntervalSet(lam, cls, tilde)


def intervals(lam: Iterable[int], cls: PartitionClass | str = PartitionClass.SYMP) -> IntervalSet:
    if isinstance(cls, str):
        cls = PartitionClass.parse(cls)
    return _intervals(as_partition(lam), cls)


def to_json(lam: Iterable[int]) -> list[int]:
    return [int(p) for p in lam]
