from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wfcomb.errors import DifferentFamilies, NotSpecial
from wfcomb.partitions import PartitionClass, enumerate_partitions
from wfcomb.symbols import (
    IMP,
    PAIR,
    Symbol,
    all_symbols,
    coord_inv,
    family,
    family_enumerate,
    family_of,
    fourier_apply,
    pairing,
    special_symbol,
    symb,
    symb_inv,
    symbol_stats,
    tau_delta,
)

SYMP = PartitionClass.SYMP
ORTH_EVEN = PartitionClass.ORTH_EVEN


def S(X, Y, kind=IMP):
    return Symbol(frozenset(X), frozenset(Y), kind)


def test_stats_examples():
    assert symbol_stats(S({1}, ())) == (1, 1, 0)
    assert symbol_stats(S({2, 0}, {1})) == (2, 1, 0)
    assert symbol_stats(S({0}, {0}, PAIR)) == (0, 0, 0)


def test_shift_reduction():
    assert S({3, 1, 0}, {2, 0}) == S({2, 0}, {1})
    with pytest.raises(ValueError):
        S({1}, {0, 2})


def test_symb_examples():
    assert symb(IMP, 0, (1,), ()) == S({1}, ())
    s = symb(IMP, 1, (), ())
    assert s == S({2, 1, 0}, ()) and (s.rank, s.defect) == (2, 3)
    assert symb(PAIR, -1, (), ()) == S((), {1, 0}, PAIR)


def test_special_symbol_examples():
    assert special_symbol(()).rank == 0
    assert len(family_enumerate((2, 2))) == 4
    for lam in enumerate_partitions(8, SYMP, special_only=True):
        assert family_of(special_symbol(lam), SYMP) == lam


def test_not_special():
    with pytest.raises(NotSpecial):
        family((4, 3, 3, 2))


def test_special_symbol_coordinates_vanish():
    for lam in enumerate_partitions(10, SYMP, special_only=True):
        c = tau_delta(special_symbol(lam))
        assert c.r == 0
        assert all(b == 0 for _, b in c.tau + c.delta)


def test_sigma_keeps_delta_and_shifts_tau():
    for lam in enumerate_partitions(8, ORTH_EVEN, special_only=True):
        fam = family(lam, ORTH_EVEN)
        for s in fam.members():
            a, b = tau_delta(s, fam), tau_delta(s.swapped(), fam)
            assert a.delta == b.delta
            assert [(x + 1) % 2 for _, x in a.tau] == [x for _, x in b.tau]


def test_pairing_examples():
    fam = family((2, 2))
    sym0 = fam.special
    assert pairing(sym0, sym0, fam) == 0
    single = family((2,))
    (only,) = single.members()
    assert pairing(only, only, single) == 0
    with pytest.raises(DifferentFamilies):
        pairing(sym0, only)


def test_pairing_sigma_relation():
    for lam in enumerate_partitions(8, ORTH_EVEN, special_only=True):
        fam = family(lam, ORTH_EVEN)
        for a in fam.members():
            for b in fam.members():
                assert pairing(a.swapped(), b, fam) == (b.r + pairing(a, b, fam)) % 2


def test_fourier_coefficients_are_dyadic():
    fam = family((4, 2, 2), SYMP)
    for s in fam.members():
        out = fourier_apply({s: 1}, fam)
        assert all(abs(c) == Fraction(1, 2 ** len(fam.ints)) for c in out.values())
        assert len(out) == len(fam)


def test_fourier_identity_on_singletons():
    fam = family((2,))
    (only,) = fam.members()
    assert fourier_apply({only: 1}, fam) == {only: 1}


def test_json_roundtrip():
    s = S({5, 2, 0}, {3, 1})
    assert Symbol.from_json(s.to_json()) == s


@given(st.sampled_from([IMP, PAIR]), st.integers(-3, 3),
       st.lists(st.integers(0, 4), max_size=4), st.lists(st.integers(0, 4), max_size=4))
def test_symb_roundtrip(kind, r, a, b):
    if kind == IMP:
        r = abs(r)
    a, b = sorted(a, reverse=True), sorted(b, reverse=True)
    s = symb(kind, r, a, b)
    assert symb_inv(s) == (r, tuple(a_ for a_ in a if a_), tuple(b_ for b_ in b if b_))
    assert s.rank == sum(a) + sum(b) + (r * r + r if kind == IMP else r * r)


@given(st.integers(0, 6).flatmap(lambda m: st.sampled_from(all_symbols(m, IMP))))
def test_coordinate_roundtrip(s):
    lam = family_of(s, SYMP)
    assert coord_inv(lam, tau_delta(s)) == s


@given(st.integers(0, 6).flatmap(lambda m: st.sampled_from(all_symbols(m, PAIR))))
def test_fourier_involution_pair(s):
    fam = family(family_of(s, ORTH_EVEN), ORTH_EVEN)
    assert fourier_apply(fourier_apply({s: 1}, fam), fam) == {s: 1}
