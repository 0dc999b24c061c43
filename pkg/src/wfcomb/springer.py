"""Generalized Springer parametrizations (lambda, eps) <-> (k, rho).

Symplectic case
---------------
The map is computed row by row.  Pad lambda with zeros to an even number of
rows plus two, and halve: an even part v gives v/2, a pair of equal odd
parts (v, v) gives (v//2, v//2 + 1).  The even parts of odd multiplicity
are then matched from the bottom with a stack whose floor is a permanent
``(0, +)`` entry: a part whose sign agrees with the top of the stack pairs
with it, otherwise it is pushed.  The k unmatched parts lose a staircase
k, k-1, ..., 1, and every remaining pair of rows is either spread apart or
exchanged between the two sides of the bipartition, depending on whether
its sign agrees with the unmatched part governing that stretch of rows.
The bipartition is read from beta-numbers, sorted inside each side.

With eps trivial this reduces to the ordinary correspondence (halves at odd
rows give alpha, at even rows give beta).

Orthogonal cases
----------------
k is |sum_h (-1)^h eps(i_h)| over the odd parts of odd multiplicity, which
is invariant under the global sign flip and has the right parity.  The
ordinary pairs (lambda, 1) use the orthogonal halving rule (see
``_orth_halves``).  The remaining pairs of each k are matched to the
remaining bipartitions in a fixed order; see ``_orth_table``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import InvalidDatum, NotSpecial, WrongClass
from .partitions import Partition, PartitionClass, as_partition, belongs, enumerate_partitions, is_special
from .weyl_reps import Bipartition, bipartitions

SYMP = PartitionClass.SYMP
ORTH_ODD = PartitionClass.ORTH_ODD
ORTH_EVEN = PartitionClass.ORTH_EVEN

_BIG = 10 ** 6


# -- signed partitions -------------------------------------------------------

@dataclass(frozen=True)
class SignedPartition:
    """A partition with a sign on each part of the bad parity.

    ``eps`` is a tuple of (part, sign) pairs, parts decreasing.  Orthogonal
    signs are stored with the first sign +1.
    """

    lam: Partition
    cls: PartitionClass
    eps: tuple[tuple[int, int], ...]

    def __post_init__(self):
        lam = as_partition(self.lam)
        if not belongs(lam, self.cls):
            raise WrongClass(f"{list(lam)} is not of class {self.cls.value}")
        eps = dict(self.eps)
        want = sorted({i for i in lam if i % 2 == self.cls.bad_parity}, reverse=True)
        if sorted(eps, reverse=True) != want:
            raise InvalidDatum(f"signs must be given exactly on {want}, got {sorted(eps, reverse=True)}")
        if any(s not in (1, -1) for s in eps.values()):
            raise InvalidDatum("signs must be +1 or -1")
        if self.cls is not SYMP and want and eps[want[0]] == -1:
            eps = {i: -s for i, s in eps.items()}
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "eps", tuple((i, eps[i]) for i in want))

    @classmethod
    def of(cls, lam: Iterable[int], eps: Mapping[int, int] | None = None,
           pclass: PartitionClass = SYMP) -> "SignedPartition":
        lam = as_partition(lam)
        if eps is None:
            eps = {i: 1 for i in lam if i % 2 == pclass.bad_parity}
        return cls(lam, pclass, tuple(eps.items()))

    @property
    def sign(self) -> dict[int, int]:
        return dict(self.eps)

    @property
    def N(self) -> int:
        return self.lam.size // 2

    def key(self) -> tuple:
        return (tuple(self.lam), self.eps)

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "class": self.cls.value,
                "eps": {str(i): s for i, s in self.eps}}

    @classmethod
    def from_json(cls, obj: Mapping | str) -> "SignedPartition":
        if isinstance(obj, str):
            obj = json.loads(obj)
        pclass = PartitionClass.parse(obj.get("class", "symp"))
        eps = {int(i): int(s) for i, s in obj.get("eps", {}).items()}
        return cls(as_partition(obj["lambda"]), pclass, tuple(eps.items()))

    def __repr__(self) -> str:
        signs = "".join("+" if s > 0 else "-" for _, s in self.eps)
        return f"SignedPartition({list(self.lam)}, {self.cls.value}, {signs or '-'})"


def _size_of(cls: PartitionClass, N: int) -> int:
    return 2 * N + 1 if cls is ORTH_ODD else 2 * N


def signed_partitions(cls: PartitionClass, N: int) -> Iterator[SignedPartition]:
    """All signed partitions of size 2N (2N+1 for the odd orthogonal class)."""
    for lam in enumerate_partitions(_size_of(cls, N), cls, bound=_BIG):
        jb = sorted({i for i in lam if i % 2 == cls.bad_parity}, reverse=True)
        free = jb if cls is SYMP else jb[1:]
        for signs in itertools.product((1, -1), repeat=len(free)):
            eps = dict(zip(free, signs))
            if cls is not SYMP and jb:
                eps[jb[0]] = 1
            yield SignedPartition(lam, cls, tuple(eps.items()))


# -- Springer data -------------------------------------------------------------

@dataclass(frozen=True)
class SpringerDatum:
    """(k, rho).  For the even orthogonal class with k = 0 rho is only
    defined up to swapping its two sides; it is then stored as rho^+, the
    representative whose first side is lexicographically larger."""

    k: int
    rho: Bipartition
    unordered: bool = False

    def __post_init__(self):
        rho = Bipartition.of(*self.rho)
        if self.unordered and tuple(rho.alpha) < tuple(rho.beta):
            rho = Bipartition(rho.beta, rho.alpha)
        object.__setattr__(self, "rho", rho)

    @property
    def rho_plus(self) -> Bipartition:
        return self.rho

    @property
    def rho_minus(self) -> Bipartition:
        if not self.unordered:
            raise InvalidDatum("rho^- only exists for the even orthogonal class at k = 0")
        return Bipartition(self.rho.beta, self.rho.alpha)

    def to_json(self) -> dict:
        out = {"k": self.k, "rho": [list(self.rho.alpha), list(self.rho.beta)]}
        if self.unordered:
            out["rho_minus"] = [list(self.rho.beta), list(self.rho.alpha)]
        return out


def k_offset(cls: PartitionClass, k: int) -> int:
    """N - N_{lam,eps} as a function of k."""
    if cls is SYMP:
        return k * (k + 1) // 2
    if cls is ORTH_ODD:
        return (k * k - 1) // 2
    return k * k // 2


def _valid_k(cls: PartitionClass, k: int) -> bool:
    if k < 0:
        return False
    if cls is ORTH_ODD:
        return k % 2 == 1
    if cls is ORTH_EVEN:
        return k % 2 == 0
    return True


def codomain(cls: PartitionClass, N: int) -> list[SpringerDatum]:
    out = []
    k = 0
    while k_offset(cls, k) <= N:
        if _valid_k(cls, k):
            unordered = cls is ORTH_EVEN and k == 0
            seen = set()
            for b in bipartitions(N - k_offset(cls, k)):
                d = SpringerDatum(k, b, unordered)
                if d not in seen:
                    seen.add(d)
                    out.append(d)
        k += 1
    return out


def _odd_mult_seq(sp: SignedPartition) -> list[int]:
    lam = sp.lam
    return [i for i in lam.jord() if i % 2 == sp.cls.bad_parity and lam.mult(i) % 2 == 1]


def k_of(sp: SignedPartition) -> int:
    """k_{lam,eps} from the signs of the odd-multiplicity even parts."""
    if sp.cls is not SYMP:
        raise WrongClass("k_of takes a symplectic signed partition")
    eps = sp.sign
    M = 0
    for h, i in enumerate(_odd_mult_seq(sp), 1):
        if eps[i] == -1:
            M += 1 if h % 2 == 0 else -1
    return 2 * M if M >= 0 else -2 * M - 1


def k_orth(sp: SignedPartition) -> int:
    if sp.cls is SYMP:
        raise WrongClass("k_orth takes an orthogonal signed partition")
    eps = sp.sign
    return abs(sum((-1) ** h * eps[i] for h, i in enumerate(_odd_mult_seq(sp))))


def n_lambda_eps(sp: SignedPartition) -> int:
    return sp.N - k_offset(sp.cls, springer(sp).k)


# -- symplectic recipe -------------------------------------------------------

def _symp_rho(lam: Partition, eps: Mapping[int, int]) -> tuple[int, Partition, Partition]:
    rows = list(lam)
    if len(rows) % 2:
        rows.append(0)
    rows += [0, 0]
    L = len(rows)

    h = []
    j = 0
    while j < L:
        v = rows[j]
        if v % 2:
            h += [v // 2, v // 2 + 1]
            j += 2
        else:
            h.append(v // 2)
            j += 1

    where: dict[int, list[int]] = {}
    for j, v in enumerate(rows):
        where.setdefault(v, []).append(j)

    # match odd-multiplicity even parts from the bottom; 0 is a permanent floor
    odd_mult = [i for i in lam.jord() if i % 2 == 0 and lam.mult(i) % 2 == 1]
    stack = [(0, 1)]
    matched = []
    for v in reversed(odd_mult):
        s = eps[v]
        if stack[-1][1] == s:
            below = stack[-1][0]
            if below:
                stack.pop()
            matched.append((v, below, s))
        else:
            stack.append((v, s))
    unmatched = sorted((u for u in stack if u[0]), reverse=True)
    k = len(unmatched)

    tops = {a for a, _, _ in matched}
    bottoms = {b for _, b, _ in matched if b}
    single: dict[int, int] = {}
    units = []  # (upper row, lower row, sign or None)
    for v in lam.jord():
        m = lam.mult(v)
        block = where[v][:m]
        if v % 2:
            units += [(block[2 * p], block[2 * p + 1], None) for p in range(m // 2)]
            continue
        if m % 2:
            if v in bottoms and v not in tops:
                single[v], block = block[0], block[1:]
            else:
                single[v], block = block[-1], block[:-1]
        units += [(block[2 * p], block[2 * p + 1], eps[v]) for p in range(len(block) // 2)]
    for a, b, s in matched:
        units.append((single[a], single[b] if b else len(lam), s))

    for idx, (u, _) in enumerate(unmatched):
        h[single[u]] -= k - idx
    tails = sorted(single[u] for u, _ in unmatched)

    def level(row: int) -> int:
        return sum(1 for q in tails if q < row)

    x = [h[j] + (L - 1 - j) for j in range(L)]
    phase = [(j + level(j)) % 2 for j in range(L)]
    side = list(phase)
    for top, bot, s in units:
        lvl = level(top)
        ambient = unmatched[lvl][1] if lvl < k else 1
        spread = k - lvl
        if s is not None and s != ambient:
            side[top], side[bot] = side[bot], side[top]
            spread = -spread
        x[top] -= spread
        x[bot] += spread

    out = []
    for c in (0, 1):
        vals = sorted((x[j] for j in range(L) if side[j] == c), reverse=True)
        slots = [j for j in range(L) if phase[j] == c]
        out.append(Partition(sorted((v - (L - 1 - j) for v, j in zip(vals, slots) if v != L - 1 - j),
                                    reverse=True)))
    return k, out[0], out[1]


# -- orthogonal recipe -------------------------------------------------------

def _orth_halves(lam: Partition, cls: PartitionClass) -> Bipartition:
    """Ordinary Springer datum of (lam, 1) for an orthogonal lam.

    Pad to odd (B) or even (D) length.  Odd parts are halved rounding down
    and up alternately, starting down for B and up for D.  A pair of equal
    even parts is spread by one when it starts on a row of the parity fixed
    by the type, otherwise halved.  Even rows give alpha, odd rows beta.
    """
    rows = list(lam)
    shift = 0 if cls is ORTH_ODD else 1
    if len(rows) % 2 != 1 - shift:
        rows.append(0)
    h = []
    odd_seen = 0
    j = 0
    while j < len(rows):
        v = rows[j]
        if v % 2:
            h.append(v // 2 + (odd_seen + shift) % 2)
            odd_seen += 1
            j += 1
        elif v and j + 1 < len(rows) and rows[j + 1] == v:
            h += [v // 2 - 1, v // 2 + 1] if j % 2 == shift else [v // 2, v // 2]
            j += 2
        else:
            h.append(v // 2)
            j += 1
    alpha = Partition(sorted((a for a in h[0::2] if a), reverse=True))
    beta = Partition(sorted((b for b in h[1::2] if b), reverse=True))
    if cls is ORTH_EVEN and tuple(alpha) < tuple(beta):
        alpha, beta = beta, alpha
    return Bipartition(alpha, beta)


def _is_ordinary(sp: SignedPartition) -> bool:
    return all(s == 1 for _, s in sp.eps)


@lru_cache(maxsize=None)
def _orth_table(cls: PartitionClass, N: int) -> tuple[dict, dict]:
    """Forward and inverse tables for one orthogonal size.

    Within each k the pairs (lam, 1) take their halving datum; the other
    pairs, sorted by (lam, eps) decreasing, are matched in order with the
    unused data of that k, sorted by rho decreasing.
    """
    fwd: dict[SignedPartition, SpringerDatum] = {}
    by_k: dict[int, list[SignedPartition]] = {}
    for sp in signed_partitions(cls, N):
        k = k_orth(sp)
        if _is_ordinary(sp):
            fwd[sp] = SpringerDatum(k, _orth_halves(sp.lam, cls), cls is ORTH_EVEN and k == 0)
        else:
            by_k.setdefault(k, []).append(sp)
    used = set(fwd.values())
    if len(used) != len(fwd):
        raise AssertionError("ordinary halving is not injective")
    free: dict[int, list[SpringerDatum]] = {}
    for d in codomain(cls, N):
        if d not in used:
            free.setdefault(d.k, []).append(d)
    for k, dom in by_k.items():
        targets = sorted(free.get(k, []), key=lambda d: (tuple(d.rho.alpha), tuple(d.rho.beta)), reverse=True)
        dom = sorted(dom, key=lambda s: s.key(), reverse=True)
        if len(dom) != len(targets):
            raise AssertionError(f"k={k}: {len(dom)} pairs for {len(targets)} data")
        fwd.update(zip(dom, targets))
    inv = {d: sp for sp, d in fwd.items()}
    return fwd, inv


# -- public maps ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _symp_table(N: int) -> dict:
    return {springer(sp): sp for sp in signed_partitions(SYMP, N)}


def springer(sp: SignedPartition) -> SpringerDatum:
    if sp.cls is SYMP:
        k, alpha, beta = _symp_rho(sp.lam, sp.sign)
        return SpringerDatum(k, Bipartition(alpha, beta))
    return _orth_table(sp.cls, sp.N)[0][sp]


def springer_inv(cls: PartitionClass | str, datum: SpringerDatum, N: int) -> SignedPartition:
    if isinstance(cls, str):
        cls = PartitionClass.parse(cls)
    if not _valid_k(cls, datum.k) or datum.rho.size != N - k_offset(cls, datum.k):
        raise InvalidDatum(f"{datum} is not a {cls.value} datum for N={N}")
    if datum.unordered != (cls is ORTH_EVEN and datum.k == 0):
        datum = SpringerDatum(datum.k, datum.rho, cls is ORTH_EVEN and datum.k == 0)
    table = _symp_table(N) if cls is SYMP else _orth_table(cls, N)[1]
    try:
        return table[datum]
    except KeyError:
        raise InvalidDatum(f"{datum} has no preimage at N={N}") from None


def ordinary_springer_special(lam: Iterable[int], cls: PartitionClass = SYMP) -> Bipartition:
    """(alpha(lam), beta(lam)) for a special lam; D-type keeps alpha >= beta."""
    lam = as_partition(lam)
    if not is_special(lam, cls):
        raise NotSpecial(f"{list(lam)} is not special of class {cls.value}")
    return springer(SignedPartition.of(lam, pclass=cls)).rho
