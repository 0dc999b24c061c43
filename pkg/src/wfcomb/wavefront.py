"""Wave front of pi(lam+, eps+, lam-, eps-) when all parts are even.

Pipeline: (lam, eps) -> (lam^max, eps^max) by recursion, then the closed
formula for the transpose of lam^min, then the orthogonal collapse of the
sum of the two transposes with 1 added to the largest term.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .duality import dual, orth_collapse
from .errors import OddPart, PreconditionViolated, WrongClass
from .partitions import Partition, PartitionClass, add_sequence, as_partition, transpose, union
from .springer import SignedPartition, k_of
from .symbols import IMP, PAIR, coord_inv, family, pairing, symb
from .weyl_reps import Bipartition, twist_sgn

SYMP = PartitionClass.SYMP
ORTH_ODD = PartitionClass.ORTH_ODD
ORTH_EVEN = PartitionClass.ORTH_EVEN


def _check_bp(sp: SignedPartition) -> None:
    if sp.cls is not SYMP:
        raise WrongClass("expected a symplectic signed partition")
    odd = [p for p in sp.lam if p % 2]
    if odd:
        raise OddPart(f"odd parts {odd} in {list(sp.lam)}")


def _rows(lam: Partition, pad: int = 0) -> list[int]:
    """lam as (lam_1, ..., lam_{2r+1}) with lam_{2r+1} = 0, r minimal (+pad)."""
    r = (len(lam) + 1) // 2 + pad
    return list(lam) + [0] * (2 * r + 1 - len(lam))


# -- lam^max -----------------------------------------------------------------

def _lambda_max(parts: list[int], eps: dict[int, int], pad: int) -> tuple[list[int], dict[int, int]]:
    if not any(parts):
        return [], {}
    rows = _rows(Partition(parts), pad)
    n_rows = len(rows)
    e = [eps.get(v, 1) if v else 1 for v in rows]  # e[j-1] = eps(j)

    def sgn(j: int) -> int:
        return e[j - 1] * (-1) ** j

    S = [1] + [j for j in range(2, n_rows + 1) if sgn(j) != sgn(j - 1)]
    in_S = set(S)
    J = {z: {j for j in range(1, n_rows + 1) if (-1) ** (j + 1) * e[j - 1] == z} for z in (1, -1)}
    e1 = e[0]
    top = sum(rows[s - 1] for s in S) + 2 * (len(S) // 2) - 2 * len(J[-e1])

    rest: list[int] = []
    rest_eps: dict[int, int] = {}
    for j in range(1, n_rows + 1):
        if j in in_S:
            continue
        v = rows[j - 1] + (0 if j in J[e1] else 2)
        if v == 0:
            continue
        h = max(x for x in range(1, len(S) + 1) if S[x - 1] < j)
        s = (-1) ** (h + 1) * e[j - 1]
        if rest_eps.setdefault(v, s) != s:
            raise AssertionError(f"inconsistent eps' at {v} for {parts} {eps}")
        rest.append(v)
    if 2 * sum(rest) + 2 * top != 2 * sum(parts):
        raise AssertionError("size not preserved")

    sub, sub_eps = _lambda_max(sorted(rest, reverse=True), rest_eps, pad)
    out_eps = dict(sub_eps)
    first = eps[parts[0]]
    if out_eps.setdefault(top, first) != first:
        raise AssertionError(f"eps^max clash at {top} for {parts} {eps}")
    return sorted([top] + sub, reverse=True), out_eps


def lambda_max(sp: SignedPartition, pad: int = 0) -> SignedPartition:
    """(lam^max, eps^max); ``pad`` adds extra zero row pairs (result unchanged)."""
    _check_bp(sp)
    parts, eps = _lambda_max(list(sp.lam), sp.sign, pad)
    return SignedPartition(Partition(parts), SYMP, tuple(sorted(eps.items(), reverse=True)))


# -- transpose of lam^min -----------------------------------------------------

@dataclass(frozen=True)
class MinTrace:
    k: int
    R: int
    j_plus: tuple[int, ...]
    j_minus: tuple[int, ...]
    nu_prime: tuple[int, ...]
    nu: Partition
    lam_max: SignedPartition

    @property
    def counts_ok(self) -> bool:
        return (len(self.j_plus) == self.R + self.k // 2 + 1
                and len(self.j_minus) == self.R - self.k // 2)


def _stair_down(top: int) -> list[int]:
    return list(range(top, -1, -1)) if top >= 0 else []


def t_lambda_min_trace(sp: SignedPartition, pad: int = 0) -> MinTrace:
    _check_bp(sp)
    k = k_of(sp)
    lm = lambda_max(sp, pad)
    rows = _rows(lm.lam, pad)
    R = (len(rows) - 1) // 2
    e = [lm.sign.get(v, 1) if v else 1 for v in rows]
    sk = (-1) ** k
    jp = [j for j in range(1, 2 * R + 2) if e[j - 1] * (-1) ** (j + 1) == sk]
    jm = [j for j in range(1, 2 * R + 2) if e[j - 1] * (-1) ** j == sk]
    seq = [2 * R + 3 * u - k - 1 + rows[j - 1] - 2 * j for u, j in enumerate(jp, 1)]
    seq += [2 * R + 3 * v + k + rows[j - 1] - 2 * j for v, j in enumerate(jm, 1)]
    seq += _stair_down(R + (k - 1) // 2)
    seq += _stair_down(R - (k + 3) // 2)
    nu_prime = sorted(seq, reverse=True)
    nu = [x - 2 * R + j // 2 for j, x in enumerate(nu_prime, 1)]
    return MinTrace(k, R, tuple(jp), tuple(jm), tuple(nu_prime), Partition(nu), lm)


def t_lambda_min(sp: SignedPartition, pad: int = 0) -> Partition:
    return t_lambda_min_trace(sp, pad).nu


def lambda_min(sp: SignedPartition) -> Partition:
    return transpose(t_lambda_min(sp))


def eps_min_choice(sp: SignedPartition) -> SignedPartition:
    """A signing of lam^min with the same k as sp.

    The true eps^min is not computed here. We take, among signings of
    lam^min with k preserved, the one agreeing with eps on the most even
    parts (ties: lexicographically largest sign vector). When lam^min = lam
    this returns sp itself.
    """
    import itertools

    lam = lambda_min(sp)
    k = k_of(sp)
    even = [i for i in lam.jord() if i % 2 == 0]
    eps = sp.sign
    best = None
    for signs in itertools.product((1, -1), repeat=len(even)):
        cand = SignedPartition(lam, SYMP, tuple(zip(even, signs)))
        if k_of(cand) != k:
            continue
        score = (sum(eps.get(i, 1) == s for i, s in zip(even, signs)), signs)
        if best is None or score > best[0]:
            best = (score, cand)
    if best is None:
        raise AssertionError(f"no signing of {list(lam)} has k={k}")
    return best[1]


# -- quadruples ---------------------------------------------------------------

@dataclass(frozen=True)
class QuadrupleBP:
    plus: SignedPartition
    minus: SignedPartition

    def __post_init__(self):
        _check_bp(self.plus)
        _check_bp(self.minus)

    @property
    def n(self) -> int:
        return (self.plus.lam.size + self.minus.lam.size) // 2

    @classmethod
    def of(cls, lp: Iterable[int], ep: Sequence[int], lm: Iterable[int] = (), em: Sequence[int] = ()) -> "QuadrupleBP":
        return cls(_positional(lp, ep), _positional(lm, em))

    def to_json(self) -> dict:
        return {"lp": list(self.plus.lam), "ep": [s for _, s in self.plus.eps],
                "lm": list(self.minus.lam), "em": [s for _, s in self.minus.eps]}

    @classmethod
    def from_json(cls, obj: Mapping | str) -> "QuadrupleBP":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls.of(obj.get("lp", []), obj.get("ep", []), obj.get("lm", []), obj.get("em", []))


def _positional(lam: Iterable[int], signs: Sequence[int]) -> SignedPartition:
    """Signs aligned with the distinct parts of lam in decreasing order."""
    lam = as_partition(lam)
    jord = lam.jord()
    if len(signs) != len(jord):
        raise PreconditionViolated(f"{len(signs)} signs for distinct parts {jord}")
    return SignedPartition(lam, SYMP, tuple(zip(jord, (int(s) for s in signs))))


def r_params(k_plus: int, k_minus: int) -> tuple[int, int]:
    if (k_plus - k_minus) % 2 == 0:
        return (k_plus + k_minus) // 2, (k_plus - k_minus) // 2
    if k_plus > k_minus:
        return (k_plus - k_minus - 1) // 2, (k_plus + k_minus + 1) // 2
    return (k_minus - k_plus - 1) // 2, -(k_plus + k_minus + 1) // 2


def r_pair(q: QuadrupleBP) -> tuple[int, int]:
    """(r1, r2) = (r', (-1)^r' r'')."""
    rp, rpp = r_params(k_of(q.plus), k_of(q.minus))
    return rp, (-1) ** rp * rpp


def sgn_sharp(q: QuadrupleBP) -> int:
    s = 1
    for sp in (q.plus, q.minus):
        for i, e in sp.eps:
            s *= e ** sp.lam.mult(i)
    return s


def wavefront(q: QuadrupleBP) -> Partition:
    """Orthogonal collapse of tlam^{+,min} + tlam^{-,min} with 1 added on top."""
    nu = list(add_sequence(t_lambda_min(q.plus), t_lambda_min(q.minus)))
    if nu:
        nu[0] += 1
    else:
        nu = [1]
    return orth_collapse(nu, 2 * q.n + 1)


def wavefront_via_dual(q: QuadrupleBP) -> Partition:
    return dual(union(lambda_min(q.plus), lambda_min(q.minus)), SYMP)


# -- M_pi(mu1, 1; mu2, 1) ----------------------------------------------------

def minimal(q: QuadrupleBP) -> tuple[SignedPartition, SignedPartition]:
    """(lam^{+,min}, eps^{+,min}), (lam^{-,min}, eps^{-,min}) with the chosen signs."""
    return eps_min_choice(q.plus), eps_min_choice(q.minus)


def chi_for(q: QuadrupleBP) -> dict[int, int]:
    """The chi on Jord^bp(lam^{+,min} u lam^{-,min})."""
    plus, minus = minimal(q)
    lp, lm = plus.lam, minus.lam
    lam = union(lp, lm)
    ep, em = plus.sign, minus.sign
    chi = {0: 0}
    for i in lam.jord():
        if i % 2:
            continue
        if lam.mult(i) == 1:
            chi[i] = 0
        elif lp.mult(i) and lm.mult(i):
            chi[i] = 1 if ep[i] == em[i] else 0
        else:
            chi[i] = 1
    return chi


def _fns_for(q: QuadrupleBP, lam1: Partition, lam2: Partition):
    from .endoscopy import ZetaFunctions, induce

    r1, r2 = r_pair(q)
    eta = (-1) ** r1
    side = dict(zip((1, -1), minimal(q)))
    data = induce(lam1, lam2)
    tau = {1: {}, -1: {}}
    delta = {1: {}, -1: {}}
    for z in (1, -1):
        own, other = side[z * eta], side[-z * eta]
        for D in data.rel:
            taus = set()
            for i in D.values:
                if i == 0:
                    taus.add(0)
                elif own.lam.mult(i):
                    taus.add(0 if own.sign[i] == 1 else 1)
                else:
                    taus.add(0 if other.sign[i] == 1 else 1)
            if len(taus) != 1:
                raise AssertionError(f"tau not constant on {D}")
            tau[z][D] = taus.pop()
            if not D.is_min:
                deltas = {own.lam.mult_geq(i) % 2 for i in D.values}
                if len(deltas) != 1:
                    raise AssertionError(f"delta not constant on {D}")
                delta[z][D] = deltas.pop()
    return ZetaFunctions(tau, delta, r1, r2)


@dataclass(frozen=True)
class MPiResult:
    value: Fraction
    sqrt_fam: tuple[int, int]
    lam1: Partition
    lam2: Partition
    sign_pm: tuple[int, int]
    sgn_sharp: int
    r2: int

    @property
    def expected_abs(self) -> Fraction:
        return Fraction(2, self.sqrt_fam[0] * self.sqrt_fam[1])


def _isqrt_exact(n: int) -> int:
    s = math.isqrt(n)
    if s * s != n:
        raise AssertionError(f"family size {n} is not a square")
    return s


def m_pi_min(q: QuadrupleBP, split: tuple[Iterable[int], Iterable[int]] | None = None) -> MPiResult:
    """M_pi(mu1, 1; mu2, 1) with q read as its own minimal quadruple.

    ``split`` is the (lam1, lam2) produced by split_for_chi for chi_for(q);
    it is computed when not given.
    """
    from .endoscopy import reconstruct_iotas, split_for_chi
    from .springer import ordinary_springer_special

    lam = union(lambda_min(q.plus), lambda_min(q.minus))
    if split is None:
        split = split_for_chi(lam, chi_for(q))
    lam1, lam2 = (as_partition(x) for x in split)
    r1, r2 = r_pair(q)
    fns = _fns_for(q, lam1, lam2)
    iota1, iota2 = reconstruct_iotas(lam1, lam2, r1, r2, fns)

    mu1 = dual(lam1, SYMP)
    mu2 = dual(lam2, ORTH_EVEN) if lam2 else Partition()
    fam1 = family(lam1, SYMP)
    fam2 = family(lam2, ORTH_EVEN)
    big1 = symb(IMP, 0, *twist_sgn(ordinary_springer_special(mu1, ORTH_ODD)))
    rho2 = ordinary_springer_special(mu2, ORTH_EVEN)
    big2 = {+1: symb(PAIR, 0, *twist_sgn(rho2)),
            -1: symb(PAIR, 0, *twist_sgn(Bipartition(rho2.beta, rho2.alpha)))}
    if big1 not in fam1.members() or any(s not in fam2.members() for s in big2.values()):
        raise AssertionError("sgn-twisted Springer symbols fall outside Fam(lam_d)")

    s1 = (-1) ** pairing(big1, coord_inv(lam1, iota1), fam1)
    s_iota2 = coord_inv(lam2, iota2)
    sp_ = (-1) ** pairing(big2[1], s_iota2, fam2)
    sm_ = (-1) ** pairing(big2[-1], s_iota2, fam2)
    sg = sgn_sharp(q)
    f1 = _isqrt_exact(len(fam1.members()))
    f2 = _isqrt_exact(len(fam2.members()))
    value = Fraction(s1 * (sp_ + sg * sm_), f1 * f2)
    return MPiResult(value, (f1, f2), lam1, lam2, (sp_, sm_), sg, r2)


# -- the worked table ---------------------------------------------------------

TABLE_SIGNS = [(1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1),
               (-1, 1, 1), (-1, 1, -1), (-1, -1, 1), (-1, -1, -1)]


@dataclass(frozen=True)
class TableRow:
    eps: tuple[int, int, int]
    k: int
    lam_max: Partition
    eps_max: tuple[int, ...]
    t_lam_min: Partition
    mu: Partition

    def to_json(self) -> dict:
        return {"eps": list(self.eps), "k": self.k, "lambda_max": list(self.lam_max),
                "eps_max": list(self.eps_max), "t_lambda_min": list(self.t_lam_min),
                "mu": list(self.mu)}


def table_5_3(lam: Iterable[int]) -> list[TableRow]:
    lam = as_partition(lam)
    if len(lam) != 3 or len(set(lam)) != 3 or any(p % 2 for p in lam):
        raise PreconditionViolated("need three distinct positive even parts")
    rows = []
    for eps in TABLE_SIGNS:
        q = QuadrupleBP.of(lam, eps)
        lm = lambda_max(q.plus)
        eps_max = tuple(lm.sign[v] for v in lm.lam)
        rows.append(TableRow(eps, k_of(q.plus), lm.lam, eps_max, t_lambda_min(q.plus), wavefront(q)))
    return rows


def bp_signed(m: int) -> list[SignedPartition]:
    """Signed symplectic partitions of 2m with all parts even."""
    from .springer import signed_partitions

    return [sp for sp in signed_partitions(SYMP, m) if all(p % 2 == 0 for p in sp.lam)]


def quadruples(n: int) -> list[QuadrupleBP]:
    return [QuadrupleBP(a, b) for npl in range(n + 1) for a in bp_signed(npl) for b in bp_signed(n - npl)]
