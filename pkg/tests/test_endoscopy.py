import pytest
from hypothesis import given, strategies as st

from wfcomb import endoscopy
from wfcomb.duality import dual
from wfcomb.errors import BoundExceeded, InvalidChi, WrongClass
from wfcomb.partitions import PartitionClass, enumerate_partitions, union
from wfcomb.symbols import family_coords

SYMP = PartitionClass.SYMP


def test_induce_example():
    data = endoscopy.induce((2, 2), (3, 1))
    assert data.lam == (6, 2)
    assert data.xi == (1, -1)
    assert (set(data.J_plus), set(data.J_minus)) == ({1}, {2})
    assert sorted(D.values for D in data.rel) == [(0,), (2,), (6,)]
    assert all(D.chi == 0 for D in data.rel)
    assert endoscopy.is_regular(data)


def test_induce_degenerate():
    data = endoscopy.induce((), ())
    assert data.lam == () and [D.values for D in data.rel] == [(0,)]
    assert endoscopy.is_regular(data)
    data = endoscopy.induce((2,), ())
    assert data.lam == (2,) and data.xi == () and not data.J_plus


def test_irregular():
    assert not endoscopy.is_regular(endoscopy.induce((4, 2), ()))


def test_induce_needs_special():
    with pytest.raises(WrongClass):
        endoscopy.induce((4, 3, 3, 2), ())


def test_c_zeta_vanishes_for_trivial_coordinates():
    data = endoscopy.induce((2, 2), (3, 1))
    i1 = next(c for c in family_coords((2, 2)) if c.r == 0 and not any(b for _, b in c.tau + c.delta))
    i2 = next(c for c in endoscopy._coords2((3, 1)) if c.r == 0 and not any(b for _, b in c.tau + c.delta))
    fns = endoscopy.zeta_functions(i1, i2, data)
    assert endoscopy.c_zeta(fns, data, 1) == endoscopy.c_zeta(fns, data, -1) == 0
    assert fns.tau[1][data.d_min] == fns.tau[-1][data.d_min] == 0


def test_split_examples():
    assert endoscopy.split_for_chi((), {0: 0}) == ((), ())
    lam1, lam2 = endoscopy.split_for_chi((6, 2), {6: 0, 2: 0, 0: 0})
    assert endoscopy.check_split((6, 2), {6: 0, 2: 0, 0: 0}, lam1, lam2)
    assert union(dual(lam1, SYMP), dual(lam2, PartitionClass.ORTH_EVEN)) == (3, 1, 1, 1, 1, 1, 1)
    chi = {2: 1, 0: 0}
    assert endoscopy.check_split((2, 2), chi, *endoscopy.split_for_chi((2, 2), chi))


def test_split_rejects_bad_chi():
    with pytest.raises(InvalidChi):
        endoscopy.split_for_chi((2,), {2: 1, 0: 0})


def test_bruteforce_bound():
    (c,) = family_coords(())
    with pytest.raises(BoundExceeded):
        endoscopy.i_zeta_bruteforce((), c, (), c, 1, 5, 5, bound=7)


def test_i_zeta_empty():
    (c1,) = family_coords(())
    (c2,) = endoscopy._coords2(())
    assert len(endoscopy.i_zeta_max((), c1, (), c2, 1, 0, 0)) == 1


def _pairs(max_n):
    pairs = [p for n in range(max_n + 1) for p in endoscopy.special_pairs(n)]
    return st.sampled_from(pairs)


@given(_pairs(5), st.data())
def test_reconstruction_roundtrip(pair, data):
    l1, l2 = pair
    ind = endoscopy.induce(l1, l2)
    i1 = data.draw(st.sampled_from(family_coords(l1)))
    i2 = data.draw(st.sampled_from(endoscopy._coords2(l2)))
    fns = endoscopy.zeta_functions(i1, i2, ind)
    assert endoscopy.hypotheses_hold(fns, ind)
    assert endoscopy.reconstruct_iotas(l1, l2, i1.r, i2.r, fns) == (i1, i2)


@given(st.integers(0, 6).flatmap(lambda n: st.sampled_from(enumerate_partitions(2 * n, SYMP))), st.data())
def test_split_postconditions(lam, data):
    chi = data.draw(st.sampled_from(endoscopy.admissible_chis(lam)))
    l1, l2 = endoscopy.split_for_chi(lam, chi)
    assert endoscopy.check_split(lam, chi, l1, l2)
    ind = endoscopy.induce(l1, l2)
    assert ind.lam == lam and endoscopy.is_regular(ind)
