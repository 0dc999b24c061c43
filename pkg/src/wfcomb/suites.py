"""Exhaustive verification suites behind ``wfcomb verify``.

Each suite walks every instance up to a bound, checks one or more laws on
it and collects the violations in a :class:`SuiteReport`. An exception
raised while checking an instance counts as a failure of that instance.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import duality, endoscopy, springer, symbols, wavefront
from .errors import WfcombError
from .partitions import (
    Partition,
    PartitionClass,
    dominance_leq,
    enumerate_partitions,
    intervals,
    union,
)

SYMP = PartitionClass.SYMP
ORTH_ODD = PartitionClass.ORTH_ODD
ORTH_EVEN = PartitionClass.ORTH_EVEN

DEFAULT_BOUNDS = {"duality": 16, "symbols": 8, "springer": 6, "endoscopy": 6, "wavefront": 6}


class UnknownSuite(WfcombError, ValueError):
    pass


@dataclass
class SuiteReport:
    suite: str
    bound: int
    instances: int = 0
    failures: list = field(default_factory=list)
    wall: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, inp: Any, law: str, got: Any = None) -> None:
        self.instances += 1
        if not ok:
            self.failures.append({"input": _jsonable(inp), "law": law, "got": _jsonable(got)})

    def run(self, inp: Any, law: str, fn: Callable[[], Any]) -> None:
        """Check ``fn()``; it returns True, or a falsy/other value reported as ``got``."""
        try:
            res = fn()
        except Exception as exc:  # a crash is a failed instance, not a crashed suite
            self.check(False, inp, law, f"{type(exc).__name__}: {exc}")
            return
        if res is True:
            self.check(True, inp, law)
        else:
            self.check(False, inp, law, res)

    def merge(self, other: "SuiteReport") -> None:
        self.instances += other.instances
        self.failures += other.failures

    def to_json(self) -> dict:
        return {"suite": self.suite, "bound": self.bound, "instances": self.instances,
                "failures": self.failures, "passed": self.passed,
                "wall_seconds": round(self.wall, 3)}


def _jsonable(x: Any) -> Any:
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in x]
    return repr(x)


def _parts(m2: int, cls, special: bool = False) -> list[Partition]:
    return enumerate_partitions(m2, cls, special, bound=10 ** 6)


# -- duality ---------------------------------------------------------------

def suite_duality(bound: int, rep: SuiteReport) -> None:
    for m2 in range(0, bound + 1, 2):
        for lam in _parts(m2, SYMP, True):
            rep.run(lam, "d(d(lam)) = lam, symplectic special",
                    lambda lam=lam: duality.dual(duality.dual(lam, SYMP), ORTH_ODD) == lam)
        for mu in _parts(m2 + 1, ORTH_ODD, True):
            rep.run(mu, "d(d(mu)) = mu, odd orthogonal special",
                    lambda mu=mu: duality.dual(duality.dual(mu, ORTH_ODD), SYMP) == mu)
        for lam in _parts(m2, SYMP):
            rep.run(lam, "formula route = symbol route (symplectic)",
                    lambda lam=lam: duality.dual(lam, SYMP) == duality.dual_via_symbols(lam, SYMP) or
                    [list(duality.dual(lam, SYMP)), list(duality.dual_via_symbols(lam, SYMP))])
        for lam in _parts(m2, ORTH_EVEN, True):
            rep.run(lam, "formula route = symbol route (even orthogonal special)",
                    lambda lam=lam: duality.dual(lam, ORTH_EVEN) == duality.dual_via_symbols(lam, ORTH_EVEN))
        if m2 <= min(bound, 14):
            for lam in _parts(m2, SYMP):
                rep.run(lam, "sp(lam) = lam + s(lam) is the minimal special closure",
                        lambda lam=lam: duality.sp_closure(lam) == duality.sp_closure_bruteforce(lam))
        if m2 <= min(bound, 12):
            ps = _parts(m2, SYMP)
            for i, a in enumerate(ps):
                da = duality.dual(a, SYMP)
                for b in ps[i:]:  # descending lex order: only b below a can be dominated
                    if dominance_leq(b, a):
                        rep.run((b, a), "d is order reversing",
                                lambda a=a, b=b, da=da: dominance_leq(da, duality.dual(b, SYMP)))
        if m2 + 1 <= min(bound, 12) + 1:
            for nu in enumerate_partitions(m2 + 1, bound=10 ** 6):
                rep.run(nu, "orthogonal collapse is the greatest orthogonal partition below",
                        lambda nu=nu: duality.orth_collapse(nu) == duality.orth_collapse_bruteforce(nu))


# -- symbols ---------------------------------------------------------------

def _family_partition(m: int, kind: str, cls: PartitionClass, rep: SuiteReport) -> None:
    pool = symbols.all_symbols(m, kind)
    seen: dict = {}
    for lam in _parts(2 * m + (1 if cls is ORTH_ODD else 0), cls, True):
        for s in symbols.family(lam, cls).members():
            seen.setdefault(s, []).append(lam)
    rep.check(set(seen) == set(pool), (m, kind, cls.value), "families cover S_m exactly",
              sorted(map(repr, set(seen) ^ set(pool))))
    rep.check(all(len(v) == 1 for v in seen.values()), (m, kind, cls.value), "families are disjoint",
              [repr(s) for s, v in seen.items() if len(v) != 1])


def suite_symbols(bound: int, rep: SuiteReport) -> None:
    for m in range(bound + 1):
        for kind in (symbols.IMP, symbols.PAIR):
            pool = symbols.all_symbols(m, kind)
            rep.check(len(set(pool)) == len(pool), (m, kind), "symb is injective", len(pool) - len(set(pool)))
            for s in pool:
                rep.run(s, "symb(symb_inv(S)) = S and rank(S) = m",
                        lambda s=s, kind=kind: symbols.symb(kind, *symbols.symb_inv(s)) == s and s.rank == m)
        _family_partition(m, symbols.IMP, SYMP, rep)
        _family_partition(m, symbols.PAIR, ORTH_EVEN, rep)
        for cls in (SYMP, ORTH_EVEN):
            for lam in _parts(2 * m, cls, True):
                fam = symbols.family(lam, cls)
                members = fam.members()
                rep.check(len(members) == len(fam), (lam, cls.value), "|Fam| = 4^|Int|", len(members))
                for s in members:
                    rep.run((lam, s), "F(F(S)) = S", lambda s=s, fam=fam:
                            symbols.fourier_apply(symbols.fourier_apply({s: 1}, fam), fam) == {s: 1})
                    rep.run((lam, s), "coord_inv(tau_delta(S)) = S with the normalisations",
                            lambda s=s, fam=fam, lam=lam, cls=cls: _coord_ok(s, fam, lam, cls))


def _coord_ok(s, fam, lam, cls) -> bool:
    c = symbols.tau_delta(s, fam)
    if symbols.coord_inv(lam, c) != s:
        return False
    ivs = intervals(lam, cls)
    if cls is SYMP:
        return c.tau_map[ivs.delta_min] == 0
    if ivs.ints:
        return c.delta_map[ivs.ints[0]] == c.r % 2
    return True


# -- springer --------------------------------------------------------------

def suite_springer(bound: int, rep: SuiteReport) -> None:
    for cls in (SYMP, ORTH_ODD, ORTH_EVEN):
        for N in range(bound + 1):
            dom = list(springer.signed_partitions(cls, N))
            img = [springer.springer(sp) for sp in dom]
            cod = springer.codomain(cls, N)
            rep.check(sorted(map(repr, img)) == sorted(map(repr, cod)), (cls.value, N),
                      "springer is a bijection onto the codomain", [len(img), len(set(img)), len(cod)])
            for sp, datum in zip(dom, img):
                rep.run(sp, "springer_inv(springer(x)) = x and k is preserved",
                        lambda sp=sp, datum=datum, cls=cls, N=N:
                        springer.springer_inv(cls, datum, N) == sp and datum.k == _k(sp))
            for lam in _parts(2 * N + (1 if cls is ORTH_ODD else 0), cls):
                sp = springer.SignedPartition.of(lam, pclass=cls)
                rep.run(sp, "all-plus signs give the ordinary Springer datum",
                        lambda sp=sp, cls=cls: _ordinary_ok(sp, cls))


def _k(sp) -> int:
    return springer.k_of(sp) if sp.cls is SYMP else springer.k_orth(sp)


def _ordinary_ok(sp, cls) -> bool:
    datum = springer.springer(sp)
    if datum.k != (1 if cls is ORTH_ODD else 0):
        return False
    _, a, b = symbols.symb_inv(symbols.ordinary_symbol(sp.lam, cls))
    if cls is ORTH_EVEN:
        return {tuple(a), tuple(b)} == {tuple(datum.rho.alpha), tuple(datum.rho.beta)}
    return (a, b) == (datum.rho.alpha, datum.rho.beta)


# -- endoscopy -------------------------------------------------------------

def _xi_ok(data) -> bool:
    z1 = duality.zeta_s(data.lam1, SYMP).zeta
    z2 = duality.zeta_s(data.lam2, ORTH_EVEN).zeta if data.lam2 else ()
    lhs = _seq_add(z1, z2)
    rhs = _seq_add(endoscopy.zeta_relative(data), data.xi)
    return lhs == rhs


def _seq_add(a, b) -> tuple[int, ...]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def suite_endoscopy(bound: int, rep: SuiteReport) -> None:
    from .weyl_reps import h_pair, tri

    for n in range(bound + 1):
        for l1, l2 in endoscopy.special_pairs(n, bound=10 ** 6):
            data = endoscopy.induce(l1, l2)
            rep.run((l1, l2), "zeta(l1) + zeta(l2) = zeta_rel + xi", lambda data=data: _xi_ok(data))
            rep.check(endoscopy.endpoints_property(data), (l1, l2), "every j in calJ ends one relative interval")
            for i1 in symbols.family_coords(l1, SYMP):
                for i2 in endoscopy._coords2(l2):
                    fns = endoscopy.zeta_functions(i1, i2, data)
                    for z in (1, -1):
                        rep.run((l1, l2, i1, i2, z), "C^zeta identity",
                                lambda fns=fns, z=z, data=data: endoscopy.c_zeta(fns, data, z)
                                == endoscopy.c_zeta_expected(i1.r, i2.r, z) or endoscopy.c_zeta(fns, data, z))
                    if n <= min(bound, 5):
                        rep.run((l1, l2, i1, i2), "inverse reconstruction returns the unique preimage",
                                lambda l1=l1, l2=l2, i1=i1, i2=i2, fns=fns:
                                endoscopy.reconstruct_iotas(l1, l2, i1.r, i2.r, fns) == (i1, i2))
                    if n <= min(bound, 5):
                        for z in (1, -1):
                            hp, hm = h_pair(z, i1.r, i2.r)
                            for npl in range(tri(hp), n - tri(hm) + 1):
                                rep.run((l1, l2, i1, i2, z, npl), "multiplicity one on the top stratum",
                                        lambda a=(l1, i1, l2, i2, z, npl, n - npl), lam=data.lam:
                                        _mult_one(a, lam))
        for lam in _parts(2 * n, SYMP):
            for chi in endoscopy.admissible_chis(lam):
                rep.run((lam, chi), "split_for_chi postconditions",
                        lambda lam=lam, chi=chi: endoscopy.check_split(lam, chi, *endoscopy.split_for_chi(lam, chi)))


def _mult_one(args, lam) -> Any:
    brute = endoscopy.i_zeta_bruteforce(*args)
    top = endoscopy.i_zeta_max(*args)
    eq = {}
    for (a, b), m in brute.items():
        u = union(Partition(a[0]), Partition(b[0]))
        if not dominance_leq(u, lam):
            return {"not dominated": [list(a[0]), list(b[0])]}
        if u == lam:
            eq[(a, b)] = m
    if set(eq) != top or any(m != 1 for m in eq.values()):
        return {"brute": sorted(map(repr, eq.items())), "formula": sorted(map(repr, top))}
    return True


# -- wave front ------------------------------------------------------------

def _row_closed_forms(l1: int, l2: int, l3: int) -> list[tuple]:
    """(k, lam^max, eps^max, t lam^min, mu) for the eight sign patterns."""
    return [
        (0, (l1 + l2 + l3,), (1,), (l1 + l2 + l3,), (l1 + l2 + l3 + 1,)),
        (1, (l1 + l2 - 4, l3 + 2, 2), (1, 1, -1), (l1 + l2 - 2, l3, 1, 1), (l1 + l2 - 1, l3 - 1, 1, 1, 1)),
        (2, (l1, l2, l3), (1, -1, 1), (l1 - 2, l2, l3 + 1, 1), (l1 - 1, l2 - 1, l3 + 1, 1, 1)),
        (0, (l1 + l3 - 2, l2, 2), (1, -1, -1), (l1 + l3 - 2, l2 + 2), (l1 + l3 - 1, l2 + 1, 1)),
        (1, (l1 + l3, l2), (-1, 1), (l1 + l3 - 1, l2 + 1), (l1 + l3 - 1, l2 + 1, 1)),
        (3, (l1, l2, l3), (-1, 1, -1), (l1 - 3, l2 - 1, l3, 2, 1, 1), (l1 - 3, l2 - 1, l3 + 1, 1, 1, 1, 1)),
        (0, (l1 + l2 - 2, l3 + 2), (-1, -1), (l1 + l2 - 1, l3 + 1), (l1 + l2 - 1, l3 + 1, 1)),
        (1, (l1 + l2 + l3,), (-1,), (l1 + l2 + l3 - 1, 1), (l1 + l2 + l3 - 1, 1, 1)),
    ]


def table_matches(lam) -> Any:
    rows = wavefront.table_5_3(lam)
    want = _row_closed_forms(*lam)
    got = [(r.k, tuple(r.lam_max), r.eps_max, tuple(r.t_lam_min), tuple(r.mu)) for r in rows]
    # closed forms may list a part twice where lam^max merges; compare as partitions
    norm = [(k, tuple(sorted(a, reverse=True)), e, tuple(sorted(t, reverse=True)), tuple(sorted(m, reverse=True)))
            for k, a, e, t, m in want]
    return got == norm or {"got": got, "want": norm}


def cuspidal(h: int) -> springer.SignedPartition:
    """The staircase (2h, ..., 2) with the signs making k = h."""
    lam = [2 * i for i in range(h, 0, -1)]
    return wavefront.QuadrupleBP.of(lam, [(-1) ** i for i in range(h, 0, -1)]).plus


TABLE_TRIPLES = ((6, 4, 2), (8, 4, 2), (10, 6, 2))


def suite_wavefront(bound: int, rep: SuiteReport) -> None:
    for lam in TABLE_TRIPLES:
        rep.run(lam, "worked table rows", lambda lam=lam: table_matches(lam))
    for m in range(bound + 1):
        for sp in wavefront.bp_signed(m):
            for pad in (0, 1):
                rep.run((sp, pad), "k(lam^max) = k and the N, M counts",
                        lambda sp=sp, pad=pad: _counts_ok(sp, pad))
    for n in range(bound + 1):
        for q in wavefront.quadruples(n):
            w = wavefront.wavefront(q)
            rep.check(w == wavefront.wavefront_via_dual(q), q, "collapse route = dual of the union", w)
            if all(s == 1 for _, s in q.plus.eps + q.minus.eps):
                rep.check(w == Partition([2 * n + 1]), q, "Whittaker case gives (2n+1)", w)
            if n <= min(bound, 5):
                rep.check(wavefront.sgn_sharp(q) == (-1) ** wavefront.r_pair(q)[1], q, "sgn_sharp = (-1)^r2")
                rep.run(q, "|M_pi| = 2 |Fam1|^-1/2 |Fam2|^-1/2, nonzero", lambda q=q: _mpi_ok(q))
    for hp in range(4):
        for hm in range(4):
            a, b = cuspidal(hp), cuspidal(hm)
            q = wavefront.QuadrupleBP(a, b)
            rep.run(q, "cuspidal: lam^max = lam and mu = d(lam+ u lam-)", lambda a=a, b=b, q=q:
                    wavefront.lambda_max(a) == a and wavefront.lambda_max(b) == b
                    and wavefront.wavefront(q) == duality.dual(union(a.lam, b.lam), SYMP))


def _counts_ok(sp, pad) -> Any:
    tr = wavefront.t_lambda_min_trace(sp, pad)
    base = wavefront.t_lambda_min_trace(sp)
    if not tr.counts_ok:
        return {"k": tr.k, "R": tr.R, "|J+|": len(tr.j_plus), "|J-|": len(tr.j_minus)}
    if springer.k_of(tr.lam_max) != springer.k_of(sp):
        return {"k": springer.k_of(sp), "k_max": springer.k_of(tr.lam_max)}
    return (tr.nu == base.nu and tr.lam_max == base.lam_max) or "padding changed the result"


def _mpi_ok(q) -> Any:
    res = wavefront.m_pi_min(q)
    return (res.value != 0 and abs(res.value) == res.expected_abs) or str(res.value)


SUITES: dict[str, Callable[[int, SuiteReport], None]] = {
    "duality": suite_duality,
    "symbols": suite_symbols,
    "springer": suite_springer,
    "endoscopy": suite_endoscopy,
    "wavefront": suite_wavefront,
}


def run_suite(name: str, bound: int | None = None) -> SuiteReport:
    if name == "all":
        total = SuiteReport("all", -1 if bound is None else bound)
        t0 = time.perf_counter()
        for sub in SUITES:
            total.merge(run_suite(sub, bound))
        total.wall = time.perf_counter() - t0
        return total
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    b = DEFAULT_BOUNDS[name] if bound is None else bound
    rep = SuiteReport(name, b)
    t0 = time.perf_counter()
    SUITES[name](b, rep)
    rep.wall = time.perf_counter() - t0
    return rep
