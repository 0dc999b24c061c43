"""Representations of the hyperoctahedral groups W_N.

Irreducibles of W_N are bipartitions (alpha, beta).  A representation of a
product W_{N_1} x ... x W_{N_k} is a dict from k-tuples of bipartitions to
integer (or Fraction) multiplicities.  Restriction and induction between
W_N and W_a x W_b are given by Littlewood-Richardson coefficients on each
side of the bipartition.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple

from .errors import PreconditionViolated
from .partitions import Partition, as_partition, enumerate_partitions, transpose
from .symbols import IMP, PAIR, FamilyCoord, Symbol, coord_inv, fourier_apply, symb, symb_inv


class Bipartition(NamedTuple):
    alpha: Partition
    beta: Partition

    @classmethod
    def of(cls, alpha: Iterable[int] = (), beta: Iterable[int] = ()) -> "Bipartition":
        return cls(as_partition(alpha), as_partition(beta))

    @property
    def size(self) -> int:
        return self.alpha.size + self.beta.size

    def __repr__(self) -> str:
        return f"({list(self.alpha)},{list(self.beta)})"


TRIVIAL0 = Bipartition(Partition(), Partition())


def bipartitions(n: int) -> list[Bipartition]:
    return [Bipartition(a, b) for k in range(n, -1, -1)
            for a in enumerate_partitions(k, bound=10**6)
            for b in enumerate_partitions(n - k, bound=10**6)]


def twist_sgn(b: Bipartition) -> Bipartition:
    return Bipartition(transpose(b.beta), transpose(b.alpha))


def twist_sgn_cd(b: Bipartition) -> Bipartition:
    return Bipartition(b.beta, b.alpha)


# -- Littlewood-Richardson ---------------------------------------------------

@lru_cache(maxsize=None)
def _lr(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    if alpha.size + beta.size != gamma.size:
        return 0
    if len(alpha) > len(gamma) or any(alpha.at(i) > gamma.at(i) for i in range(1, len(alpha) + 1)):
        return 0
    if len(beta) > len(gamma):
        return 0
    rows = [(alpha.at(i), gamma.at(i)) for i in range(1, len(gamma) + 1)]
    target = tuple(beta)
    nlet = len(target)

    def fill(r: int, above: tuple[int, ...], counts: tuple[int, ...]) -> int:
        # above: entries of row r-1 indexed by column (0 where no skew cell)
        if r == len(rows):
            return 1 if counts == target else 0
        lo, hi = rows[r]
        total = 0

        def place(c: int, prev: int, row: list[int], cnt: list[int]) -> None:
            nonlocal total
            if c == hi:
                # lattice check reading the row right to left
                run = list(counts)
                for v in reversed(row):
                    run[v] += 1
                    if run[v] > target[v] or (v and run[v] > run[v - 1]):
                        return
                cells = dict(zip(range(lo, hi), row))
                total += fill(r + 1, tuple(cells.get(k, 0) for k in range(hi)) if hi else (), tuple(run))
                return
            floor = prev
            if c < len(above) and r > 0 and c >= rows[r - 1][0]:
                floor = max(floor, above[c] + 1)
            for v in range(floor, nlet):
                row.append(v)
                place(c + 1, v, row, cnt)
                row.pop()

        place(lo, 0, [], [])
        return total

    return fill(0, (), tuple([0] * nlet))


def lr_coeff(alpha: Iterable[int], beta: Iterable[int], gamma: Iterable[int]) -> int:
    return _lr(as_partition(alpha), as_partition(beta), as_partition(gamma))


@lru_cache(maxsize=None)
def _lr_product(alpha: Partition, beta: Partition) -> tuple[tuple[Partition, int], ...]:
    n = alpha.size + beta.size
    out = []
    for g in enumerate_partitions(n, bound=10**6):
        c = _lr(alpha, beta, g)
        if c:
            out.append((g, c))
    return tuple(out)


@lru_cache(maxsize=None)
def _lr_split(gamma: Partition, a: int) -> tuple[tuple[Partition, Partition, int], ...]:
    b = gamma.size - a
    out = []
    for x in enumerate_partitions(a, bound=10**6):
        for y in enumerate_partitions(b, bound=10**6):
            c = _lr(x, y, gamma)
            if c:
                out.append((x, y, c))
    return tuple(out)


# -- induction / restriction -------------------------------------------------

def induce_pair(x: Bipartition, y: Bipartition) -> dict[Bipartition, int]:
    """ind_{W_a x W_b}^{W_{a+b}} of x (x) y."""
    out: dict[Bipartition, int] = defaultdict(int)
    for ga, ca in _lr_product(x.alpha, y.alpha):
        for gb, cb in _lr_product(x.beta, y.beta):
            out[Bipartition(ga, gb)] += ca * cb
    return dict(out)


def induct(pieces: Iterable[Mapping[Bipartition, int]]) -> dict[Bipartition, int]:
    """Induce an outer tensor product of virtual representations."""
    acc: dict[Bipartition, int] = {TRIVIAL0: 1}
    for piece in pieces:
        nxt: dict[Bipartition, int] = defaultdict(int)
        for u, cu in acc.items():
            for v, cv in piece.items():
                for w, cw in induce_pair(u, v).items():
                    nxt[w] += cu * cv * cw
        acc = {k: v for k, v in nxt.items() if v}
    return acc


def restrict_irr(b: Bipartition, n1: int) -> dict[tuple[Bipartition, Bipartition], int]:
    """res_{W_{n1} x W_{N-n1}} of the irreducible b."""
    out: dict = defaultdict(int)
    for a1 in range(0, n1 + 1):
        b1 = n1 - a1
        if a1 > b.alpha.size or b1 > b.beta.size:
            continue
        for x, y, c in _lr_split(b.alpha, a1):
            for u, v, d in _lr_split(b.beta, b1):
                out[(Bipartition(x, u), Bipartition(y, v))] += c * d
    return dict(out)


def restrict(v: Mapping[Bipartition, int], split: tuple[int, int]) -> dict[tuple[Bipartition, Bipartition], int]:
    n1, n2 = split
    out: dict = defaultdict(int)
    for b, c in v.items():
        if b.size != n1 + n2:
            raise PreconditionViolated(f"{b} is not of size {n1 + n2}")
        for k, d in restrict_irr(b, n1).items():
            out[k] += c * d
    return {k: x for k, x in out.items() if x}


def inner(u: Mapping, v: Mapping) -> int:
    return sum(c * v.get(k, 0) for k, c in u.items())


# -- the four-factor ind/res composite --------------------------------------

def _twist_cd(b: Bipartition, a: int) -> Bipartition:
    return twist_sgn_cd(b) if a else b


def _compose(
    rep: Mapping[tuple[Bipartition, Bipartition], int],
    sizes_in: tuple[int, int],
    sizes_out: tuple[int, int],
    a: tuple[int, int, int, int],
    crossed: bool,
) -> dict[tuple[Bipartition, Bipartition], int]:
    """Sum over 4-splittings of ind(sgn_CD^a (x) res(rep)).

    The source group is W_{P} x W_{Q} (sizes_in) and the target is
    W_{S} x W_{T} (sizes_out).  W_N = W_{P1} x W_{P2} x W_{Q1} x W_{Q2}
    sits in the source with P = P1 + P2, Q = Q1 + Q2 and in the target with
    S = P1 + Q1, T = P2 + Q2.  The character sgn_CD^a is applied factorwise
    in the order (S-part of P, T-part of P, S-part of Q, T-part of Q) when
    ``crossed`` is False; the caller supplies the order matching its own
    labelling of a.
    """
    P, Q = sizes_in
    S, T = sizes_out
    if P + Q != S + T:
        raise PreconditionViolated("size mismatch in ind/res composite")
    out: dict = defaultdict(int)
    for P1 in range(max(0, S - Q), min(P, S) + 1):
        P2, Q1 = P - P1, S - P1
        Q2 = Q - Q1
        if min(P2, Q1, Q2) < 0:
            continue
        for (bp, bq), c in rep.items():
            for (x1, x2), c1 in restrict_irr(bp, P1).items():
                for (y1, y2), c2 in restrict_irr(bq, Q1).items():
                    if crossed:
                        tw = (_twist_cd(x1, a[0]), _twist_cd(y1, a[1]), _twist_cd(x2, a[2]), _twist_cd(y2, a[3]))
                    else:
                        tw = (_twist_cd(x1, a[0]), _twist_cd(x2, a[1]), _twist_cd(y1, a[2]), _twist_cd(y2, a[3]))
                    s_side = induce_pair(tw[0], tw[2] if not crossed else tw[1])
                    t_side = induce_pair(tw[1] if not crossed else tw[2], tw[3])
                    for u, cu in s_side.items():
                        for w, cw in t_side.items():
                            out[(u, w)] += c * c1 * c2 * cu * cw
    return {k: v for k, v in out.items() if v}


# -- the space R and rho-iota ------------------------------------------------

class Gamma(NamedTuple):
    r1: int  # r'
    r2: int  # r''
    n_plus: int
    n_minus: int

    @property
    def n(self) -> int:
        return self.r1 ** 2 + self.r1 + self.n_plus + self.r2 ** 2 + self.n_minus


def a_rho_iota(r1: int, r2: int) -> tuple[int, int, int, int]:
    """(a1+, a1-, a2+, a2-) for rho-iota, keyed on (r', r'')."""
    if 0 < r2 <= r1 or (r2 == 0 and r1 % 2 == 0):
        return (0, 0, 0, 1)
    if -r1 <= r2 < 0 or (r2 == 0 and r1 % 2 == 1):
        return (0, 0, 1, 0)
    if r1 < r2:
        return (0, 1, 0, 0)
    return (1, 0, 0, 0)


def a_pi_zeta(zeta: int, r1: int, r2: int) -> tuple[int, int, int, int]:
    """(a1+, a1-, a2+, a2-) for Pi^zeta, keyed on zeta and r1 versus |r2|."""
    if r1 >= abs(r2):
        return (0, 0, 0, 1) if zeta == 1 else (0, 0, 1, 0)
    return (0, 1, 0, 0) if zeta == 1 else (1, 0, 0, 0)


RElement = dict  # Gamma -> {(Bipartition, Bipartition): coefficient}


def rho_iota(x: Mapping[Gamma, Mapping]) -> dict:
    out: dict = defaultdict(lambda: defaultdict(int))
    for g, comp in x.items():
        g = Gamma(*g)
        a = a_rho_iota(g.r1, g.r2)
        r2_new = (-1) ** g.r1 * g.r2
        N = g.n_plus + g.n_minus
        for N1 in range(N + 1):
            N2 = N - N1
            # source W_{N+} x W_{N-}; N+ = N1+ + N2+, N- = N1- + N2-
            # target W_{N1} x W_{N2}; N1 = N1+ + N1-, N2 = N2+ + N2-
            # a is ordered (N1+, N1-, N2+, N2-) = (P1, Q1, P2, Q2)
            res = _compose(comp, (g.n_plus, g.n_minus), (N1, N2), a, crossed=True)
            for k, v in res.items():
                out[Gamma(g.r1, r2_new, N1, N2)][k] += v
    return _clean(out)


def _clean(x: Mapping) -> dict:
    res = {}
    for g, comp in x.items():
        comp = {k: v for k, v in comp.items() if v}
        if comp:
            res[g] = comp
    return res


def sgn_twist_R(x: Mapping[Gamma, Mapping]) -> dict:
    return _clean({g: {(twist_sgn(p), twist_sgn(m)): c for (p, m), c in comp.items()}
                   for g, comp in x.items()})


def fourier_R(x: Mapping[Gamma, Mapping]) -> dict:
    out: dict = defaultdict(lambda: defaultdict(Fraction))
    for g, comp in x.items():
        g = Gamma(*g)
        for (bp, bm), c in comp.items():
            s1 = symb(IMP, g.r1, bp.alpha, bp.beta)
            s2 = symb(PAIR, g.r2, bm.alpha, bm.beta)
            f1 = fourier_apply({s1: 1})
            f2 = fourier_apply({s2: 1})
            for t1, c1 in f1.items():
                r1, a1, b1 = symb_inv(t1)
                for t2, c2 in f2.items():
                    r2, a2, b2 = symb_inv(t2)
                    key = Gamma(r1, r2, a1.size + b1.size, a2.size + b2.size)
                    out[key][(Bipartition(a1, b1), Bipartition(a2, b2))] += Fraction(c) * c1 * c2
    return _clean(out)


# -- Pi^zeta -----------------------------------------------------------------

def h_pair(zeta: int, r1: int, r2: int) -> tuple[int, int]:
    big = r1 + abs(r2)
    small = max(r1 - abs(r2), abs(r2) - r1 - 1)
    return (big, small) if zeta == 1 else (small, big)


def tri(h: int) -> int:
    return h * (h + 1) // 2


def rho_of_coord(lam: Iterable[int], coord: FamilyCoord) -> tuple[int, Bipartition]:
    r, a, b = symb_inv(coord_inv(lam, coord))
    return r, Bipartition(a, b)


def pi_zeta_from_reps(
    r1: int, rho1: Bipartition, r2: int, rho2: Bipartition, zeta: int, n_plus: int, n_minus: int,
) -> dict[tuple[Bipartition, Bipartition], int]:
    hp, hm = h_pair(zeta, r1, r2)
    if n_plus < tri(hp) or n_minus < tri(hm):
        raise PreconditionViolated(f"n+={n_plus}, n-={n_minus} too small for h=({hp},{hm})")
    Np, Nm = n_plus - tri(hp), n_minus - tri(hm)
    N1, N2 = rho1.size, rho2.size
    if Np + Nm != N1 + N2:
        raise PreconditionViolated("N+ + N- must equal N1 + N2")
    a = a_pi_zeta(zeta, r1, r2)
    # source W_{N1} x W_{N2}, target W_{N+} x W_{N-};
    # a is ordered (N1+, N1-, N2+, N2-) = (P1, P2, Q1, Q2)
    return _compose({(rho1, rho2): 1}, (N1, N2), (Np, Nm), a, crossed=False)


def pi_zeta(
    lam1: Iterable[int], iota1: FamilyCoord, lam2: Iterable[int], iota2: FamilyCoord,
    zeta: int, n_plus: int, n_minus: int,
) -> dict[tuple[Bipartition, Bipartition], int]:
    r1, rho1 = rho_of_coord(lam1, iota1)
    r2, rho2 = rho_of_coord(lam2, iota2)
    return pi_zeta_from_reps(r1, rho1, r2, rho2, zeta, n_plus, n_minus)
