"""Endoscopic induction of a special symplectic and a special even
orthogonal partition, and the combinatorics built on it.

Index sets are handled as closed ranges (j_min, j_max) with ``None``
standing for an infinite upper end.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .duality import dual
from .errors import (
    BoundExceeded,
    HypothesesViolated,
    InvalidChi,
    PreconditionViolated,
    WrongClass,
)
from .partitions import (
    Interval,
    Partition,
    PartitionClass,
    as_partition,
    intervals,
    is_special,
    union,
)
from .symbols import FamilyCoord, family_coords

SYMP = PartitionClass.SYMP
ORTH_EVEN = PartitionClass.ORTH_EVEN
INF = None


def _le(a: int | None, b: int | None) -> bool:
    """a <= b where None is +infinity."""
    if b is None:
        return True
    if a is None:
        return False
    return a <= b


def _range_in(inner: tuple, outer: tuple) -> bool:
    return outer[0] <= inner[0] and _le(inner[1], outer[1])


@dataclass(frozen=True)
class RelInterval:
    values: tuple[int, ...]  # decreasing, may end with 0
    j_min: int
    j_max: int | None
    owner: int | None  # d for intervals owned by lam_d, None for singletons
    chi: int

    @property
    def is_min(self) -> bool:
        return self.j_max is None

    @property
    def span(self) -> tuple:
        return (self.j_min, self.j_max)

    @property
    def n_indices(self) -> float:
        return float("inf") if self.j_max is None else self.j_max - self.j_min + 1

    @property
    def i_min(self) -> int:
        return self.values[-1]

    def __repr__(self) -> str:
        return "D{" + ",".join(map(str, self.values)) + "}"


@dataclass(frozen=True)
class InductionData:
    lam1: Partition
    lam2: Partition
    lam: Partition
    xi: tuple[int, ...]
    J_plus: frozenset
    J_minus: frozenset
    rel: tuple[RelInterval, ...]  # increasing; rel[0] contains 0

    @property
    def d_min(self) -> RelInterval:
        return self.rel[0]

    @property
    def rel_ints(self) -> tuple[RelInterval, ...]:
        return self.rel[1:]

    @property
    def chi(self) -> dict[int, int]:
        return {i: D.chi for D in self.rel for i in D.values}

    def plus(self, D: RelInterval) -> RelInterval | None:
        k = self.rel.index(D)
        return self.rel[k + 1] if k + 1 < len(self.rel) else None


def _tilde(lam: Partition, cls: PartitionClass) -> tuple[Interval, ...]:
    return intervals(lam, cls).tilde if lam or cls is SYMP else ()


def _span(delta: Interval) -> tuple:
    return (delta.j_min, delta.j_max)


def induce(lam1: Iterable[int], lam2: Iterable[int]) -> InductionData:
    lam1, lam2 = as_partition(lam1), as_partition(lam2)
    if not is_special(lam1, SYMP):
        raise WrongClass(f"{list(lam1)} is not special symplectic")
    if lam2 and not is_special(lam2, ORTH_EVEN):
        raise WrongClass(f"{list(lam2)} is not special even orthogonal")
    top = max(len(lam1), len(lam2)) + 1

    def good(j: int) -> bool:
        return lam1.at(j) % 2 == 0 and lam2.at(j) % 2 == 1

    def drop_before(lam: Partition, j: int) -> bool:
        return j == 1 or lam.at(j - 1) > lam.at(j)

    J_plus = frozenset(j for j in range(1, top + 1, 2)
                       if good(j) and (drop_before(lam1, j) or drop_before(lam2, j)))
    J_minus = frozenset(j for j in range(2, top + 1, 2)
                        if good(j) and (lam1.at(j) > lam1.at(j + 1) or lam2.at(j) > lam2.at(j + 1)))
    xi = [0] * top
    for j in J_plus:
        xi[j - 1] = 1
    for j in J_minus:
        xi[j - 1] = -1
    while xi and xi[-1] == 0:
        xi.pop()
    lam = Partition([lam1.at(j) + lam2.at(j) + (xi[j - 1] if j <= len(xi) else 0)
                     for j in range(1, top + 1)])

    t1 = _tilde(lam1, SYMP)
    t2 = _tilde(lam2, ORTH_EVEN)
    spans = {1: [_span(d) for d in t1], 2: [_span(d) for d in t2]}
    j1min = {s[0] for s in spans[1]}
    j2min = {s[0] for s in spans[2]}
    j1max = {s[1] for s in spans[1] if s[1] is not None}
    j2max = {s[1] for s in spans[2]}
    singles = (j1min & j2min) | (j1max & j2max)
    calJ = sorted(j1min | j2min | j1max | j2max)
    bounds = calJ + [INF]

    def value_set(a: int, b: int | None) -> tuple[int, ...]:
        hi = len(lam) + 1 if b is None else b
        return tuple(sorted({lam.at(j) for j in range(a, hi + 1)}, reverse=True))

    rel = [RelInterval(value_set(j, j), j, j, None, 0) for j in singles]
    for a, b in zip(bounds, bounds[1:]):
        owners = [d for d in (1, 2) if any(_range_in((a, b), s) for s in spans[d])]
        if len(owners) == 1:
            d = owners[0]
            rel.append(RelInterval(value_set(a, b), a, b, d, 0 if b is None else d % 2))
    rel.sort(key=lambda D: D.values[0])
    data = InductionData(lam1, lam2, lam, tuple(xi), J_plus, J_minus, tuple(rel))
    _check_partition(data)
    return data


def _check_partition(data: InductionData) -> None:
    seen = Counter(i for D in data.rel for i in D.values)
    want = {i for i in data.lam if i % 2 == 0} | {0}
    if set(seen) != want or any(c != 1 for c in seen.values()):
        raise AssertionError(f"relative intervals do not partition Jord^bp: {data.rel}")


def is_regular(data: InductionData) -> bool:
    return all(len(D.values) == 1 for D in data.rel)


def endpoints_property(data: InductionData) -> bool:
    """Every j in the index set calJ is an endpoint of exactly one relative interval."""
    t1 = _tilde(data.lam1, SYMP)
    t2 = _tilde(data.lam2, ORTH_EVEN)
    calJ = {d.j_min for d in t1} | {d.j_min for d in t2}
    calJ |= {d.j_max for d in t1 if d.j_max is not None} | {d.j_max for d in t2}
    for j in calJ:
        hits = [D for D in data.rel if j in (D.j_min, D.j_max)]
        if len(hits) != 1:
            return False
    return True


# -- zeta sequences: zeta(l1) + zeta(l2) = zeta_rel + xi -----------------------

def zeta_relative(data: InductionData) -> tuple[int, ...]:
    plus = [D.j_min for D in data.rel if D.j_min % 2 == 1]
    minus = [D.j_max for D in data.rel_ints if D.j_max % 2 == 0]
    n = max([0] + plus + minus)
    seq = [0] * n
    for j in plus:
        seq[j - 1] = 1
    for j in minus:
        seq[j - 1] = -1
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)


# -- split_for_chi -----------------------------------------------------------

def admissible_chis(lam: Iterable[int]) -> list[dict[int, int]]:
    lam = as_partition(lam)
    free = [i for i in lam.jord() if i % 2 == 0 and lam.mult(i) >= 2]
    fixed = {i: 0 for i in lam.jord() if i % 2 == 0}
    fixed[0] = 0
    out = []
    for bits in itertools.product((0, 1), repeat=len(free)):
        chi = dict(fixed)
        chi.update(zip(free, bits))
        out.append(chi)
    return out


def _odd_mult_sequence(lam: Partition) -> list[int]:
    seq = [i for i in lam.jord() if i % 2 == 0 and lam.mult(i) % 2 == 1]
    if len(seq) % 2:
        seq.append(0)
    return seq


def _j_second(lam: Partition) -> set[int]:
    """The parts i of even multiplicity (and 0 when it is not some i_h)
    lying strictly between i_{2h-1} and i_{2h}."""
    seq = _odd_mult_sequence(lam)
    cand = {i for i in lam.jord() if lam.mult(i) % 2 == 0}
    if 0 not in seq:
        cand.add(0)
    return {i for i in cand
            if any(seq[2 * h] > i > seq[2 * h + 1] for h in range(len(seq) // 2))}


def split_for_chi(lam: Iterable[int], chi: Mapping[int, int]) -> tuple[Partition, Partition]:
    lam = as_partition(lam)
    chi = {int(k): int(v) % 2 for k, v in chi.items()}
    chi.setdefault(0, 0)
    for i in lam.jord():
        if i % 2 == 0:
            chi.setdefault(i, 0)
            if lam.mult(i) == 1 and chi[i]:
                raise InvalidChi(f"chi({i}) must vanish: multiplicity one")
    if chi[0]:
        raise InvalidChi("chi(0) must vanish")
    L = len(lam)
    top = L + 2  # every j >= top behaves like j = L + 2
    at = lam.at

    J_plus = {j for j in range(1, top + 1, 2) if at(j) % 2 == 0 and at(j) > at(j + 1)}
    J_minus = {j for j in range(2, top + 1, 2) if at(j) % 2 == 0 and at(j - 1) > at(j)}

    def frak_r(j: int) -> int:
        return 1 if j in J_plus else -1 if j in J_minus else 0

    second = _j_second(lam)

    def linked(d: int, j: int) -> bool:
        a, b = at(j), at(j + 1)
        if a == b and a % 2 == 0 and (d == 1 if a == 0 else chi[a] == d % 2):
            return True
        if j in J_plus or (j + 1) in J_minus:
            return True
        return a % 2 == 1 and b % 2 == 1 and a in second

    # equivalence classes of d-linkage among 1..top; the tail beyond L+1 is
    # 1-linked forever, which the class touching `top` records as infinite
    classes: dict[int, list[tuple[int, int | None]]] = {}
    for d in (1, 2):
        cls_list = []
        j = 1
        while j <= top:
            k = j
            while k < top and linked(d, k):
                k += 1
            if k == top and linked(d, top):
                cls_list.append((j, None))
                break
            if k > j:
                cls_list.append((j, k))
            j = k + 1
        classes[d] = cls_list

    def p(d: int, j: int) -> int:
        return int(any(a <= j and _le(j, b) for a, b in classes[d]))

    def is_finite_max(d: int, j: int) -> bool:
        return any(b == j for a, b in classes[d])

    vals = {1: {}, 2: {}}
    for j in range(top, L + 2 - 1, -1):
        vals[1][j] = vals[2][j] = 0
    for j in range(L + 1, 0, -1):
        total = at(j) - at(j + 1) + frak_r(j + 1) - frak_r(j)
        par = {d: (p(d, j) + p(d, j + 1)) % 2 for d in (1, 2)}
        cond = {}
        for d in (1, 2):
            if (j % 2 == 0 and p(d, j) and not is_finite_max(d, j)) or (j % 2 == 1 and not p(d, j)):
                cond[d] = "a"
            elif j % 2 == 0 and is_finite_max(d, j):
                cond[d] = "b"
            else:
                cond[d] = "c"
        e = {}
        if "a" in cond.values():
            d = 1 if cond[1] == "a" else 2
            e[d] = 0
            e[3 - d] = total
        elif "b" in cond.values():
            d = 1 if cond[1] == "b" else 2
            e[d] = 1 if par[d] == 1 else 2
            e[3 - d] = total - e[d]
        else:
            e[1] = par[1]
            e[2] = total - e[1]
        for d in (1, 2):
            vals[d][j] = vals[d][j + 1] + e[d]
    lam1 = Partition([vals[1][j] for j in range(1, L + 2)])
    lam2 = Partition([vals[2][j] for j in range(1, L + 2)])
    return lam1, lam2


def check_split(lam: Iterable[int], chi: Mapping[int, int], lam1: Partition, lam2: Partition) -> bool:
    """Postconditions (i), (ii), (iii) of the splitting."""
    lam = as_partition(lam)
    if not is_special(lam1, SYMP) or (lam2 and not is_special(lam2, ORTH_EVEN)):
        return False
    data = induce(lam1, lam2)
    if data.lam != lam or not is_regular(data):
        return False
    d2 = dual(lam2, ORTH_EVEN) if lam2 else Partition()
    if union(dual(lam1, SYMP), d2) != dual(lam, SYMP):
        return False
    got = data.chi
    return all(got[i] == chi.get(i, 0) % 2 for i in got)


# -- tau^zeta, delta^zeta ----------------------------------------------------

@dataclass(frozen=True)
class ZetaFunctions:
    tau: Mapping[int, dict]  # zeta -> {RelInterval: bit} on all relative intervals
    delta: Mapping[int, dict]  # zeta -> {RelInterval: bit} on rel_ints
    r1: int
    r2: int

    def key(self) -> tuple:
        return tuple((z, tuple(sorted((D.values, b) for D, b in self.tau[z].items())),
                      tuple(sorted((D.values, b) for D, b in self.delta[z].items())))
                     for z in (1, -1)) + (self.r1, self.r2)


def _delta_d(data: InductionData, d: int, D: RelInterval) -> Interval | None:
    """Delta_d(D): the largest Delta in tilde(lam_d) with j_max(D) <= j_max(Delta)."""
    if D.is_min:
        return _tilde(data.lam1, SYMP)[0] if d == 1 else None
    tl = _tilde(data.lam1, SYMP) if d == 1 else _tilde(data.lam2, ORTH_EVEN)
    cands = [t for t in tl if _le(D.j_max, t.j_max)]
    return max(cands, key=lambda t: t.values[0]) if cands else None


def _ints(data: InductionData, d: int) -> tuple[Interval, ...]:
    if d == 1:
        return intervals(data.lam1, SYMP).ints
    return _tilde(data.lam2, ORTH_EVEN)


def _succ(data: InductionData, d: int, delta: Interval | None) -> Interval | None:
    """Delta^+: the smallest element of Int(lam_d) above delta (or the
    smallest element of Int(lam_2) when Delta_2(D) is absent)."""
    above = [t for t in _ints(data, d) if delta is None or delta < t]
    return min(above, key=lambda t: t.values[0]) if above else None


def zeta_functions(iota1: FamilyCoord, iota2: FamilyCoord, data: InductionData) -> ZetaFunctions:
    t1, d1 = iota1.tau_map, iota1.delta_map
    t2, d2 = iota2.tau_map, iota2.delta_map
    r1, r2 = iota1.r, iota2.r

    def dl1(x):
        return 0 if x is None else d1[x]

    def dl2(x):
        return 0 if x is None else d2[x]

    tau = {1: {}, -1: {}}
    delta = {1: {}, -1: {}}
    for D in data.rel:
        A1 = _delta_d(data, 1, D)
        A2 = _delta_d(data, 2, D)
        in1 = A1 is not None and _range_in(D.span, _span(A1))
        in2 = A2 is not None and _range_in(D.span, _span(A2))
        if not D.is_min:
            jm = D.j_max
            if jm in data.J_plus:
                dp = t1[A1] + t2[A2] + r1 + r2 + 1
                dm = dp + 1
            elif jm in data.J_minus:
                dp = dm = d1[A1] + d2[A2]
            elif in1:
                dp = dm = d1.get(A1, 0) + dl2(_succ(data, 2, A2))
            elif in2:
                dp = dm = dl1(_succ(data, 1, A1)) + d2[A2]
            else:
                raise AssertionError(f"no delta case for {D}")
            delta[1][D], delta[-1][D] = dp % 2, dm % 2
        if D.n_indices >= 2 and in1:
            tp = tm = t1[A1] + dl2(_succ(data, 2, A2)) + r2
        elif D.n_indices >= 2 and in2:
            tp = dl1(_succ(data, 1, A1)) + t2[A2] + r1
            tm = tp + 1
        elif D.j_min in data.J_plus:
            tp = tm = t1[A1] + dl2(_succ(data, 2, A2)) + r2
        elif D.j_min in data.J_minus:
            tp = tm = t1[A1] + d2[A2] + r2
        else:
            raise AssertionError(f"no tau case for {D}")
        tau[1][D], tau[-1][D] = tp % 2, tm % 2
    return ZetaFunctions(tau, delta, r1, r2)


def c_zeta(fns: ZetaFunctions, data: InductionData, zeta: int) -> int:
    total = 0
    for D in data.rel_ints:
        nxt = data.plus(D)
        dn = 0 if nxt is None else fns.delta[zeta][nxt]
        total += (1 - (-1) ** fns.tau[zeta][D]) * ((-1) ** fns.delta[zeta][D] - (-1) ** dn)
    return total


def c_zeta_expected(r1: int, r2: int, zeta: int) -> int:
    if (r1 + r2) % 2 == 0:
        return 2 * (r1 + zeta * r2)
    return -2 * (r1 + zeta * r2 + 1)


def hypotheses_hold(fns: ZetaFunctions, data: InductionData) -> bool:
    """Whether tau/delta functions have the shape of an induced pair: delta
    flips across zeta exactly at J+ endpoints, tau flips exactly on intervals
    owned by lam2, tau vanishes on D_min, and the C^zeta identity holds."""
    for D in data.rel_ints:
        flip = fns.delta[-1][D] != fns.delta[1][D]
        if flip != (D.j_max in data.J_plus):
            return False
    for D in data.rel:
        A2 = _delta_d(data, 2, D)
        owned2 = D.n_indices >= 2 and A2 is not None and _range_in(D.span, _span(A2))
        if (fns.tau[-1][D] != fns.tau[1][D]) != owned2:
            return False
    if fns.tau[1][data.d_min] or fns.tau[-1][data.d_min]:
        return False
    return all(c_zeta(fns, data, z) == c_zeta_expected(fns.r1, fns.r2, z) for z in (1, -1))


def reconstruct_iotas(
    lam1: Iterable[int], lam2: Iterable[int], r1: int, r2: int, fns: ZetaFunctions,
) -> tuple[FamilyCoord, FamilyCoord]:
    """The unique pair of family coordinates producing fns.

    Found by scanning Fam(lam1) x Fam(lam2); uniqueness is asserted.
    """
    data = induce(lam1, lam2)
    fns = ZetaFunctions(fns.tau, fns.delta, r1, r2)
    if not hypotheses_hold(fns, data):
        raise HypothesesViolated("tau/delta data do not come from any pair of family coordinates")
    target = fns.key()
    hits = []
    for i1 in family_coords(data.lam1, SYMP):
        for i2 in _coords2(data.lam2):
            if zeta_functions(i1, i2, data).key() == target:
                hits.append((i1, i2))
    if len(hits) != 1:
        raise HypothesesViolated(f"{len(hits)} preimages instead of one")
    return hits[0]


def _coords2(lam2: Partition) -> list[FamilyCoord]:
    if not lam2:
        return [FamilyCoord((), (), 0, "pair")]
    return family_coords(lam2, ORTH_EVEN)


# -- the sets I^{zeta,max} ---------------------------------------------------

def _signed_key(lam: Partition, eps: Mapping[int, int]) -> tuple:
    return (tuple(lam), tuple(sorted(eps.items(), reverse=True)))


def _sub_multisets(lam: Partition, size: int) -> Iterable[tuple[Partition, Partition]]:
    items = sorted(Counter(lam).items(), reverse=True)
    for take in itertools.product(*[range(m + 1) for _, m in items]):
        plus = [i for (i, _), t in zip(items, take) for _ in range(t)]
        if sum(plus) != size:
            continue
        minus = [i for (i, m), t in zip(items, take) for _ in range(m - t)]
        yield Partition(plus), Partition(minus)


def _is_symp(lam: Partition) -> bool:
    return all(lam.mult(i) % 2 == 0 for i in set(lam) if i % 2)


def i_zeta_max(
    lam1: Iterable[int], iota1: FamilyCoord, lam2: Iterable[int], iota2: FamilyCoord,
    zeta: int, n_plus: int, n_minus: int,
) -> set[tuple]:
    """Quadruples ((lam+, eps+), (lam-, eps-)) as hashable keys."""
    from .weyl_reps import h_pair, tri  # local: weyl_reps imports symbols only

    data = induce(lam1, lam2)
    hp, hm = h_pair(zeta, iota1.r, iota2.r)
    if n_plus < tri(hp) or n_minus < tri(hm) or 2 * (n_plus + n_minus) != data.lam.size:
        raise PreconditionViolated("bad (n+, n-)")
    fns = zeta_functions(iota1, iota2, data)
    nu = 1 if iota2.r >= 0 else -1
    sp, sm = zeta * nu, -zeta * nu
    out = set()
    for lp, lm in _sub_multisets(data.lam, 2 * n_plus):
        if not (_is_symp(lp) and _is_symp(lm)):
            continue
        ok = True
        for D in data.rel_ints:
            if lp.mult_geq(D.i_min) % 2 != fns.delta[sp][D] or lm.mult_geq(D.i_min) % 2 != fns.delta[sm][D]:
                ok = False
                break
        if not ok:
            continue
        ep, em = {}, {}
        for D in data.rel:
            for i in D.values:
                if i == 0:
                    continue
                if lp.mult(i):
                    ep[i] = (-1) ** fns.tau[sp][D]
                if lm.mult(i):
                    em[i] = (-1) ** fns.tau[sm][D]
        out.add((_signed_key(lp, ep), _signed_key(lm, em)))
    return out


def i_zeta_bruteforce(
    lam1: Iterable[int], iota1: FamilyCoord, lam2: Iterable[int], iota2: FamilyCoord,
    zeta: int, n_plus: int, n_minus: int, bound: int = 7,
) -> dict[tuple, int]:
    """Quadruples read off Pi^zeta through the inverse Springer maps.

    Every constituent (rho+, rho-) of Pi^zeta is pulled back to signed
    partitions with k = h+ and k = h-.  Returns key -> multiplicity, keys
    in the format of :func:`i_zeta_max`.
    """
    from .springer import SpringerDatum, springer_inv
    from .weyl_reps import h_pair, pi_zeta, tri

    if n_plus + n_minus > bound:
        raise BoundExceeded(f"n={n_plus + n_minus} exceeds bound {bound}")
    hp, hm = h_pair(zeta, iota1.r, iota2.r)
    out: dict[tuple, int] = {}
    for (rp, rm), mult in pi_zeta(lam1, iota1, lam2, iota2, zeta, n_plus, n_minus).items():
        if mult <= 0:
            continue
        sp = springer_inv(SYMP, SpringerDatum(hp, rp), n_plus)
        sm = springer_inv(SYMP, SpringerDatum(hm, rm), n_minus)
        out[(sp.key(), sm.key())] = mult
    return out


def special_pairs(n: int, bound: int = 12) -> Iterable[tuple[Partition, Partition]]:
    """All (lam1, lam2) special symplectic / even orthogonal with n1 + n2 = n."""
    from .partitions import enumerate_partitions

    if n > bound:
        raise BoundExceeded(f"n={n} exceeds bound {bound}")
    for n1 in range(n + 1):
        for l1 in enumerate_partitions(2 * n1, SYMP, True, bound=10 ** 6):
            for l2 in enumerate_partitions(2 * (n - n1), ORTH_EVEN, True, bound=10 ** 6):
                yield l1, l2
