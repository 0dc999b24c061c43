"""Special closure, duality and the orthogonal collapse."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NoSuchPartition, WrongClass
from .partitions import (
    IntervalSet,
    Partition,
    PartitionClass,
    add_sequence,
    as_partition,
    belongs,
    dominance_leq,
    enumerate_partitions,
    intervals,
    is_orthogonal,
    is_special,
    transpose,
)
from .symbols import IMP, PAIR, Symbol, family_of, ordinary_symbol

__all__ = [
    "IntervalSet", "ZetaData", "intervals", "zeta_s", "sp_closure",
    "sp_closure_bruteforce", "dual", "dual_via_symbols", "symbol_dual",
    "orth_collapse", "orth_collapse_bruteforce",
]


@dataclass(frozen=True)
class ZetaData:
    P_plus: tuple[int, ...]
    P_minus: tuple[int, ...]
    Q_plus: tuple[int, ...]
    Q_minus: tuple[int, ...]
    zeta: tuple[int, ...]
    s: tuple[int, ...]


def _sequence(n: int, plus: Iterable[int], minus: Iterable[int]) -> tuple[int, ...]:
    seq = [0] * n
    for j in plus:
        seq[j - 1] = 1
    for j in minus:
        seq[j - 1] = -1
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)


def zeta_s(lam: Iterable[int], cls: PartitionClass = PartitionClass.SYMP) -> ZetaData:
    lam = as_partition(lam)
    if cls is PartitionClass.ORTH_ODD:
        raise WrongClass("zeta is defined for symplectic and even orthogonal partitions")
    if not belongs(lam, cls):
        raise WrongClass(f"{list(lam)} is not of class {cls.value}")
    good = 0 if cls is PartitionClass.SYMP else 1  # parity carried by P
    n = len(lam) + 1

    def prev_gt(j: int) -> bool:
        return j == 1 or lam.at(j - 1) > lam.at(j)

    P_plus = [j for j in range(1, n + 1, 2) if lam.at(j) % 2 == good and prev_gt(j)]
    P_minus = [j for j in range(2, n + 1, 2) if lam.at(j) % 2 == good and lam.at(j) > lam.at(j + 1)]
    if cls is PartitionClass.ORTH_EVEN:
        # lambda_j odd forces lambda_j > 0
        P_plus = [j for j in P_plus if lam.at(j) > 0]
        Q_plus: list[int] = []
        Q_minus: list[int] = []
    else:
        Q_plus = [j for j in range(2, n + 1, 2) if lam.at(j) % 2 == 1 and prev_gt(j)]
        Q_minus = [j for j in range(1, n + 1, 2) if lam.at(j) % 2 == 1 and lam.at(j) > lam.at(j + 1)]
    return ZetaData(
        tuple(P_plus), tuple(P_minus), tuple(Q_plus), tuple(Q_minus),
        _sequence(n, P_plus, P_minus), _sequence(n, Q_plus, Q_minus),
    )


def sp_closure(lam: Iterable[int]) -> Partition:
    lam = as_partition(lam)
    return add_sequence(lam, zeta_s(lam).s)


def sp_closure_bruteforce(lam: Iterable[int]) -> Partition:
    """Minimum of the special symplectic partitions dominating lam."""
    lam = as_partition(lam)
    above = [mu for mu in enumerate_partitions(lam.size, PartitionClass.SYMP, True, bound=10**6)
             if dominance_leq(lam, mu)]
    mins = [mu for mu in above if all(dominance_leq(mu, nu) for nu in above)]
    if len(mins) != 1:
        raise NoSuchPartition(f"no unique special closure for {list(lam)}")
    return mins[0]


def symbol_dual(sym: Symbol) -> Symbol:
    d = max(sym.X | sym.Y, default=-1) + 1
    full = frozenset(range(d + 1))
    X2 = full - {d - y for y in sym.Y}
    Y2 = full - {d - x for x in sym.X}
    return Symbol(X2, Y2, sym.kind)


_TARGET = {
    PartitionClass.SYMP: PartitionClass.ORTH_ODD,
    PartitionClass.ORTH_ODD: PartitionClass.SYMP,
    PartitionClass.ORTH_EVEN: PartitionClass.ORTH_EVEN,
}


def dual_via_symbols(lam: Iterable[int], cls: PartitionClass) -> Partition:
    """d(lam) through the ordinary Springer symbol and the symbol complement."""
    lam = as_partition(lam)
    if not belongs(lam, cls):
        raise WrongClass(f"{list(lam)} is not of class {cls.value}")
    return family_of(symbol_dual(ordinary_symbol(lam, cls)), _TARGET[cls])


def dual(lam: Iterable[int], cls: PartitionClass | str = PartitionClass.SYMP) -> Partition:
    if isinstance(cls, str):
        cls = PartitionClass.parse(cls)
    lam = as_partition(lam)
    if not belongs(lam, cls):
        raise WrongClass(f"{list(lam)} is not of class {cls.value}")
    if cls is PartitionClass.SYMP:
        return transpose(add_sequence(lam, zeta_s(lam).zeta))
    if cls is PartitionClass.ORTH_EVEN and is_special(lam, cls):
        return transpose(add_sequence(lam, zeta_s(lam, cls).zeta))
    # no closed formula in this direction: go through symbols
    return dual_via_symbols(lam, cls)


def orth_collapse(nu: Iterable[int], total: int | None = None) -> Partition:
    """Largest orthogonal partition dominated by nu.

    Repeatedly takes the largest even part q of odd multiplicity, lowers its
    last occurrence by one and raises the first later part smaller than q-1.
    """
    parts = list(as_partition(nu))
    if total is not None and sum(parts) != total:
        raise NoSuchPartition(f"{parts} does not sum to {total}")
    while not is_orthogonal(parts):
        bad = max(q for q in set(parts) if q % 2 == 0 and parts.count(q) % 2 == 1)
        i = max(k for k, p in enumerate(parts) if p == bad)
        parts[i] -= 1
        j = next((k for k in range(i + 1, len(parts)) if parts[k] < bad - 1), len(parts))
        if j == len(parts):
            parts.append(0)
        parts[j] += 1
        parts = sorted((p for p in parts if p), reverse=True)
    return Partition(parts)


def orth_collapse_bruteforce(nu: Iterable[int]) -> Partition:
    nu = as_partition(nu)
    below = [mu for mu in _orthogonal_of_size(nu.size) if dominance_leq(mu, nu)]
    tops = [mu for mu in below if all(dominance_leq(x, mu) for x in below)]
    if len(tops) != 1:
        raise NoSuchPartition(f"no greatest orthogonal partition below {list(nu)}")
    return tops[0]


def _orthogonal_of_size(n: int) -> list[Partition]:
    return [p for p in enumerate_partitions(n, bound=10**6) if is_orthogonal(p)]
