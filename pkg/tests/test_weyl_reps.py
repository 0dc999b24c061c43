from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wfcomb.errors import PreconditionViolated
from wfcomb.partitions import PartitionClass, enumerate_partitions
from wfcomb.duality import symbol_dual
from wfcomb.symbols import family_coords, symb
from wfcomb.weyl_reps import (
    Bipartition,
    Gamma,
    bipartitions,
    fourier_R,
    h_pair,
    induct,
    inner,
    lr_coeff,
    pi_zeta,
    restrict,
    rho_iota,
    sgn_twist_R,
    tri,
    twist_sgn,
    twist_sgn_cd,
)

B = Bipartition.of


@pytest.mark.parametrize("a,b,g,want", [
    ((1,), (1,), (2,), 1),
    ((1,), (1,), (1, 1), 1),
    ((2, 1), (2, 1), (3, 2, 1), 2),
    ((2, 1), (1,), (3, 2), 0),
])
def test_lr(a, b, g, want):
    assert lr_coeff(a, b, g) == want


def test_induct_examples():
    assert induct([{B((1,)): 1}, {B((1,)): 1}]) == {B((2,)): 1, B((1, 1)): 1}
    assert induct([{B((1,)): 1}, {B((), (1,)): 1}]) == {B((1,), (1,)): 1}
    v = {B((2,), (1,)): 3}
    assert induct([{B(): 1}, v]) == v


def test_restrict_examples():
    assert restrict({B((2,)): 1}, (1, 1)) == {(B((1,)), B((1,))): 1}
    v = {B((2,), (1,)): 1}
    assert restrict(v, (3, 0)) == {(B((2,), (1,)), B()): 1}


def test_frobenius_adjointness():
    for N in range(5):
        for n1 in range(N + 1):
            for x in bipartitions(n1):
                for y in bipartitions(N - n1):
                    up = induct([{x: 1}, {y: 1}])
                    for b in bipartitions(N):
                        assert restrict({b: 1}, (n1, N - n1)).get((x, y), 0) == up.get(b, 0)


def test_twists():
    assert twist_sgn(B((2,))) == B((), (1, 1))
    assert twist_sgn_cd(B((2, 1), (2, 1))) == B((2, 1), (2, 1))
    for N in range(7):
        for b in bipartitions(N):
            assert twist_sgn(twist_sgn(b)) == b
            assert twist_sgn_cd(twist_sgn_cd(b)) == b


def test_sgn_twist_is_symbol_duality():
    for m in range(7):
        for r in range(3):
            if r * r + r > m:
                continue
            for b in bipartitions(m - r * r - r):
                t = twist_sgn(b)
                assert symb("imp", r, t.alpha, t.beta) == symbol_dual(symb("imp", r, b.alpha, b.beta))


def test_h_identity():
    for r1 in range(6):
        for r2 in range(-5, 6):
            hp, hm = h_pair(1, r1, r2)
            assert tri(hp) + tri(hm) == r1 * r1 + r1 + r2 * r2
            assert h_pair(-1, r1, r2) == (hm, hp)


def test_pi_zeta_trivial():
    (c1,) = family_coords((), PartitionClass.SYMP)
    (c2,) = family_coords((), PartitionClass.ORTH_EVEN)
    assert pi_zeta((), c1, (), c2, 1, 0, 0) == {(B(), B()): 1}
    with pytest.raises(PreconditionViolated):
        pi_zeta((2,), family_coords((2,))[0], (), c2, 1, 0, 0)


def test_rho_iota_example():
    x = {Gamma(0, 0, 1, 0): {(B((1,)), B()): 1}}
    out = rho_iota(x)
    assert out == {Gamma(0, 0, 1, 0): {(B((1,)), B()): 1},
                   Gamma(0, 0, 0, 1): {(B(), B((1,))): 1}}


def test_rho_iota_empty_groups():
    for r1, r2 in [(0, 0), (1, 1), (2, -1), (1, -2)]:
        x = {Gamma(r1, r2, 0, 0): {(B(), B()): 5}}
        assert rho_iota(x) == {Gamma(r1, (-1) ** r1 * r2, 0, 0): {(B(), B()): 5}}


def r_elements(max_n=4):
    def build(g, pairs):
        return {g: {p: c for p, c in pairs}}

    def for_gamma(g):
        plus, minus = bipartitions(g.n_plus), bipartitions(g.n_minus)
        pair = st.tuples(st.sampled_from(plus), st.sampled_from(minus))
        return st.lists(st.tuples(pair, st.integers(-3, 3)), min_size=1, max_size=3).map(lambda ps: build(g, ps))

    gammas = [Gamma(a, b, p, m) for a in range(2) for b in range(-1, 2)
              for p in range(3) for m in range(3) if Gamma(a, b, p, m).n <= max_n]
    return st.sampled_from(gammas).flatmap(for_gamma)


def _merge(x):
    out = {}
    for g, comp in x.items():
        comp = {k: v for k, v in comp.items() if v}
        if comp:
            out[g] = comp
    return out


@given(r_elements())
def test_rho_iota_commutes_with_sgn(x):
    assert rho_iota(sgn_twist_R(x)) == sgn_twist_R(rho_iota(x))


@given(r_elements(5))
def test_fourier_R_involution(x):
    x = _merge(x)
    back = fourier_R(fourier_R(x))
    assert back == {g: {k: Fraction(v) for k, v in comp.items()} for g, comp in x.items()}
