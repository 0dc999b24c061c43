"""Symbols, the symb bijections, families and the Fourier transform on them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import _beads
from .errors import DifferentFamilies, InvalidTriple, NotSpecial
from .partitions import (
    Interval,
    Partition,
    PartitionClass,
    as_partition,
    intervals,
    is_special,
)

IMP = "imp"
PAIR = "pair"


def _shift(s: frozenset, k: int) -> frozenset:
    return frozenset(range(k)) | frozenset(x + k for x in s)


@dataclass(frozen=True)
class Symbol:
    """A pair (X, Y) of finite sets of nonnegative integers, kept reduced.

    The constructor applies the shift reduction while 0 lies in both sets, so
    two equivalent symbols compare equal.
    """

    X: frozenset
    Y: frozenset
    kind: str = IMP

    def __post_init__(self):
        X, Y = frozenset(self.X), frozenset(self.Y)
        if any(v < 0 for v in X | Y):
            raise ValueError("symbol entries must be nonnegative")
        while 0 in X and 0 in Y:
            X = frozenset(x - 1 for x in X if x)
            Y = frozenset(y - 1 for y in Y if y)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)
        d = len(X) - len(Y)
        if self.kind == IMP:
            if d <= 0 or d % 2 == 0:
                raise ValueError(f"imp symbol needs |X|-|Y| odd positive: {self}")
        elif self.kind == PAIR:
            if d % 2:
                raise ValueError(f"pair symbol needs |X|-|Y| even: {self}")
        else:
            raise ValueError(f"unknown symbol kind {self.kind!r}")

    def __repr__(self) -> str:
        xs = ",".join(map(str, sorted(self.X, reverse=True)))
        ys = ",".join(map(str, sorted(self.Y, reverse=True)))
        return f"({{{xs}}},{{{ys}}}){'' if self.kind == IMP else 'p'}"

    def at_level(self, k: int) -> tuple[frozenset, frozenset]:
        """Representative shifted k times (k >= 0)."""
        return _shift(self.X, k), _shift(self.Y, k)

    @property
    def size(self) -> int:
        return len(self.X) + len(self.Y)

    @property
    def rank(self) -> int:
        n = self.size
        return sum(self.X) + sum(self.Y) - (n - 1) ** 2 // 4

    @property
    def defect(self) -> int:
        return abs(len(self.X) - len(self.Y))

    @property
    def r(self) -> int:
        if self.kind == IMP:
            return (self.defect - 1) // 2
        return (len(self.X) - len(self.Y)) // 2

    def swapped(self) -> "Symbol":
        """sigma: (X, Y) -> (Y, X) on pair symbols."""
        if self.kind != PAIR:
            raise ValueError("sigma is only defined on pair symbols")
        return Symbol(self.Y, self.X, PAIR)

    def to_json(self) -> dict:
        return {
            "X": sorted(self.X, reverse=True),
            "Y": sorted(self.Y, reverse=True),
            "kind": self.kind,
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "Symbol":
        return cls(frozenset(obj["X"]), frozenset(obj["Y"]), obj.get("kind", IMP))


def symbol_stats(sym: Symbol) -> tuple[int, int, int]:
    return sym.rank, sym.defect, sym.r


def common_level(*syms: Symbol) -> list[tuple[frozenset, frozenset]]:
    """Shift all symbols so that they have the same |X|+|Y|."""
    top = max(s.size for s in syms)
    out = []
    for s in syms:
        if (top - s.size) % 2:
            raise DifferentFamilies("symbols of incompatible sizes")
        out.append(s.at_level((top - s.size) // 2))
    return out


# -- symb -----------------------------------------------------------------

def _stair(n: int) -> list[int]:
    return list(range(n - 1, -1, -1))


def _add(lam: Partition, n: int) -> frozenset:
    st = _stair(n)
    return frozenset(st[i] + lam.at(i + 1) for i in range(n))


def symb(kind: str, r: int, alpha: Iterable[int], beta: Iterable[int]) -> Symbol:
    alpha, beta = as_partition(alpha), as_partition(beta)
    if kind == IMP:
        if r < 0:
            raise InvalidTriple(f"imp symbols need r >= 0, got {r}")
        a = max(len(beta), len(alpha) - 2 * r - 1)
        return Symbol(_add(alpha, a + 2 * r + 1), _add(beta, a), IMP)
    if kind != PAIR:
        raise InvalidTriple(f"unknown kind {kind!r}")
    ar = abs(r)
    a = max(len(beta), len(alpha) - 2 * ar)
    long_side, short_side = _add(alpha, a + 2 * ar), _add(beta, a)
    if r >= 0:
        return Symbol(long_side, short_side, PAIR)
    return Symbol(short_side, long_side, PAIR)


def _unstair(s: frozenset) -> Partition:
    xs = sorted(s, reverse=True)
    n = len(xs)
    return Partition(x - (n - 1 - i) for i, x in enumerate(xs))


def symb_inv(sym: Symbol) -> tuple[int, Partition, Partition]:
    r = sym.r
    if sym.kind == PAIR and r < 0:
        return r, _unstair(sym.Y), _unstair(sym.X)
    return r, _unstair(sym.X), _unstair(sym.Y)


# -- special symbols and families -----------------------------------------

def _kind_of(cls: PartitionClass) -> str:
    return PAIR if cls is PartitionClass.ORTH_EVEN else IMP


def special_symbol(lam: Iterable[int], cls: PartitionClass = PartitionClass.SYMP) -> Symbol:
    lam = as_partition(lam)
    if not is_special(lam, cls):
        raise NotSpecial(f"{list(lam)} is not special of class {cls.value}")
    return ordinary_symbol(lam, cls)


def ordinary_symbol(lam: Partition, cls: PartitionClass) -> Symbol:
    """symb(0, rho_{lam,1}) from the bead split; lam need not be special."""
    X, Y = _beads.split_beads(lam, cls)
    if cls is PartitionClass.ORTH_EVEN:
        # the two sides are unordered; take the lexicographically larger alpha
        s1, s2 = Symbol(X, Y, PAIR), Symbol(Y, X, PAIR)
        _, a1, _ = symb_inv(s1)
        _, a2, _ = symb_inv(s2)
        return s1 if tuple(a1) >= tuple(a2) else s2
    return Symbol(X, Y, IMP)


def _special_split(sym: Symbol) -> tuple[frozenset, frozenset]:
    """Interleaved representative of sym's family at sym's own level."""
    common = sym.X & sym.Y
    singles = sorted(sym.X ^ sym.Y, reverse=True)
    xs = common | frozenset(singles[0::2])
    ys = common | frozenset(singles[1::2])
    return xs, ys


def family_of(sym: Symbol, cls: PartitionClass | None = None) -> Partition:
    """The special partition whose family contains sym.

    Imp symbols belong to one symplectic and one odd orthogonal family;
    ``cls`` selects which (symplectic by default).
    """
    if cls is None:
        cls = PartitionClass.SYMP if sym.kind == IMP else PartitionClass.ORTH_EVEN
    if _kind_of(cls) != sym.kind:
        raise DifferentFamilies(f"{sym} has no family of class {cls.value}")
    xs, ys = _special_split(sym)
    if cls is PartitionClass.ORTH_EVEN:
        # type D symbols are unordered at the level of beads; exactly one
        # orientation yields an orthogonal partition
        found = {p for p in (_beads.join_beads(xs, ys, cls), _beads.join_beads(ys, xs, cls))
                 if is_special(p, cls)}
        if len(found) != 1:
            raise NotSpecial(f"no unique special orthogonal partition for {sym}")
        return found.pop()
    return _beads.join_beads(xs, ys, cls)


@dataclass(frozen=True)
class Family:
    lam: Partition
    cls: PartitionClass
    special: Symbol
    X0: frozenset
    Y0: frozenset
    x_of: dict = field(hash=False, compare=False)  # Interval -> single in X0
    y_of: dict = field(hash=False, compare=False)  # Interval -> single in Y0
    tilde: tuple = ()
    ints: tuple = ()

    @property
    def kind(self) -> str:
        return self.special.kind

    @property
    def common(self) -> frozenset:
        return self.X0 & self.Y0

    @property
    def singles(self) -> frozenset:
        return self.X0 ^ self.Y0

    def represent(self, sym: Symbol) -> tuple[frozenset, frozenset]:
        """sym at the shift level of X0, Y0."""
        k = (len(self.X0) + len(self.Y0) - sym.size)
        if k < 0 or k % 2:
            raise DifferentFamilies(f"{sym} is not in Fam({list(self.lam)})")
        X, Y = sym.at_level(k // 2)
        if X | Y != self.X0 | self.Y0 or X & Y != self.common:
            raise DifferentFamilies(f"{sym} is not in Fam({list(self.lam)})")
        return X, Y

    def members(self) -> list[Symbol]:
        singles = sorted(self.singles)
        out = []
        for bits in itertools.product((0, 1), repeat=len(singles)):
            A = frozenset(s for s, b in zip(singles, bits) if b)
            X, Y = self.common | A, self.common | (self.singles - A)
            if self.kind == IMP and len(X) <= len(Y):
                continue
            out.append(Symbol(X, Y, self.kind))
        return out

    def __len__(self) -> int:
        return 4 ** len(self.ints)


@lru_cache(maxsize=None)
def _family(lam: Partition, cls: PartitionClass) -> Family:
    sym0 = special_symbol(lam, cls)
    ivs = intervals(lam, cls)
    tilde, ints = ivs.tilde, ivs.ints
    X0, Y0 = sym0.X, sym0.Y
    sx = sorted(X0 - Y0)
    sy = sorted(Y0 - X0)
    x_domain = tilde if cls is PartitionClass.SYMP else ints
    if len(sx) != len(x_domain) or len(sy) != len(ints):
        raise NotSpecial(f"interval/single mismatch for {list(lam)}")
    x_of = dict(zip(x_domain, sx))
    y_of = dict(zip(ints, sy))
    return Family(lam, cls, sym0, X0, Y0, x_of, y_of, tilde, ints)


def family(lam: Iterable[int], cls: PartitionClass = PartitionClass.SYMP) -> Family:
    return _family(as_partition(lam), cls)


def family_enumerate(lam: Iterable[int], cls: PartitionClass = PartitionClass.SYMP) -> list[Symbol]:
    return family(lam, cls).members()


# -- (tau, delta) coordinates ----------------------------------------------

@dataclass(frozen=True)
class FamilyCoord:
    """Coordinates of a symbol in its family; tau and delta map Interval -> 0/1."""

    tau: tuple  # tuple of (Interval, bit), increasing intervals
    delta: tuple
    r: int
    kind: str = IMP

    @property
    def tau_map(self) -> dict:
        return dict(self.tau)

    @property
    def delta_map(self) -> dict:
        return dict(self.delta)

    def __repr__(self) -> str:
        t = "".join(str(b) for _, b in self.tau)
        d = "".join(str(b) for _, b in self.delta)
        return f"FamilyCoord(tau={t}, delta={d}, r={self.r}, {self.kind})"

    @property
    def cls(self) -> PartitionClass:
        return PartitionClass.SYMP if self.kind == IMP else PartitionClass.ORTH_EVEN


def tau_delta(sym: Symbol, fam: Family | None = None) -> FamilyCoord:
    if fam is None:
        fam = family(family_of(sym), PartitionClass.SYMP if sym.kind == IMP else PartitionClass.ORTH_EVEN)
    X, Y = fam.represent(sym)
    r = sym.r
    tau_domain = fam.tilde if fam.cls is PartitionClass.SYMP else fam.ints
    tau = []
    for d in tau_domain:
        c = sum(1 for d2 in tau_domain if not d2 < d and fam.x_of[d2] in Y)
        c += sum(1 for d2 in fam.ints if d < d2 and fam.y_of[d2] in X)
        tau.append((d, (c + r) % 2))
    delta = []
    for d in fam.ints:
        c = sum(1 for d2 in fam.ints if not d2 < d and fam.x_of[d2] in Y)
        c += sum(1 for d2 in fam.ints if not d2 < d and fam.y_of[d2] in X)
        delta.append((d, c % 2))
    return FamilyCoord(tuple(tau), tuple(delta), r, fam.kind)


@lru_cache(maxsize=None)
def _coord_table(fam: Family) -> dict:
    table = {}
    for s in fam.members():
        c = tau_delta(s, fam)
        table[(c.tau, c.delta)] = s
    if len(table) != len(fam.members()):
        raise DifferentFamilies(f"coordinates are not injective on Fam({list(fam.lam)})")
    return table


def coord_inv(lam: Iterable[int], coord: FamilyCoord) -> Symbol:
    fam = family(lam, coord.cls)
    try:
        return _coord_table(fam)[(coord.tau, coord.delta)]
    except KeyError:
        raise DifferentFamilies(f"{coord} is not a coordinate of Fam({list(fam.lam)})") from None


def family_coords(lam: Iterable[int], cls: PartitionClass = PartitionClass.SYMP) -> list[FamilyCoord]:
    fam = family(lam, cls)
    return [tau_delta(s, fam) for s in fam.members()]


# -- pairing and Fourier ----------------------------------------------------

def _family_for(sym: Symbol) -> Family:
    cls = PartitionClass.SYMP if sym.kind == IMP else PartitionClass.ORTH_EVEN
    return family(family_of(sym, cls), cls)


def pairing(a: Symbol, b: Symbol, fam: Family | None = None) -> int:
    fam = fam or _family_for(a)
    Xa, Ya = fam.represent(a)
    Xb, Yb = fam.represent(b)
    # r-term taken as the product r(a) r(b): with the sum, F is not an
    # involution on symplectic families (e.g. Fam(2,2))
    v = a.r * b.r + len(Xa & Xb & fam.Y0) + len(Ya & Yb & fam.X0)
    return v % 2


def fourier_apply(vec: Mapping[Symbol, Fraction | int], fam: Family | None = None) -> dict:
    """Apply F to a combination of symbols from one family.

    Coefficients are Fractions; they stay dyadic since |Fam| is a power of 4.
    """
    if not vec:
        return {}
    fam = fam or _family_for(next(iter(vec)))
    members = fam.members()
    scale = Fraction(1, 2 ** len(fam.ints))
    out: dict = {}
    for s, c in vec.items():
        if c == 0:
            continue
        c = Fraction(c)
        for t in members:
            sign = -1 if pairing(s, t, fam) else 1
            out[t] = out.get(t, 0) + sign * c * scale
    return {k: v for k, v in out.items() if v != 0}


# -- enumeration of all symbols of a rank ----------------------------------

def _bipartitions(n: int) -> list[tuple[Partition, Partition]]:
    from .partitions import enumerate_partitions

    out = []
    for k in range(n + 1):
        for a in enumerate_partitions(k):
            for b in enumerate_partitions(n - k):
                out.append((a, b))
    return out


def all_symbols(m: int, kind: str) -> list[Symbol]:
    """S_{m,kind}, generated from Sigma_{m,kind} through symb."""
    out = []
    if kind == IMP:
        r = 0
        while r * r + r <= m:
            out += [symb(IMP, r, a, b) for a, b in _bipartitions(m - r * r - r)]
            r += 1
    else:
        r = 0
        while r * r <= m:
            for rr in ([r] if r == 0 else [r, -r]):
                out += [symb(PAIR, rr, a, b) for a, b in _bipartitions(m - r * r)]
            r += 1
    return out


__all__ = [
    "IMP", "PAIR", "Symbol", "Family", "FamilyCoord", "Interval",
    "symbol_stats", "symb", "symb_inv", "special_symbol", "ordinary_symbol",
    "family", "family_of", "family_enumerate", "tau_delta", "coord_inv",
    "family_coords", "pairing", "fourier_apply", "all_symbols", "common_level",
]
