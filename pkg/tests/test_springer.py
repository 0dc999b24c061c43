import pytest
from hypothesis import given, strategies as st

from wfcomb.duality import sp_closure
from wfcomb.errors import InvalidDatum, WrongClass
from wfcomb.partitions import PartitionClass, enumerate_partitions
from wfcomb.springer import (
    SignedPartition,
    SpringerDatum,
    codomain,
    k_of,
    n_lambda_eps,
    ordinary_springer_special,
    signed_partitions,
    springer,
    springer_inv,
)
from wfcomb.symbols import Symbol, family, symb
from wfcomb.weyl_reps import Bipartition

SYMP = PartitionClass.SYMP
ORTH_ODD = PartitionClass.ORTH_ODD
ORTH_EVEN = PartitionClass.ORTH_EVEN


def signed(cls, maxN=5):
    return st.integers(0, maxN).flatmap(lambda N: st.sampled_from(list(signed_partitions(cls, N))))


def sp642(*signs):
    return SignedPartition.of((6, 4, 2), dict(zip((6, 4, 2), signs)))


@pytest.mark.parametrize("signs,k", [((1, 1, -1), 1), ((1, -1, 1), 2), ((-1, 1, -1), 3), ((1, 1, 1), 0)])
def test_k_of_table_rows(signs, k):
    assert k_of(sp642(*signs)) == k
    assert springer(sp642(*signs)).k == k


def test_trivial_datum():
    d = springer(SignedPartition.of((2, 2)))
    assert d.k == 0 and d.rho.size == 2


def test_k_of_rejects_orthogonal():
    with pytest.raises(WrongClass):
        k_of(SignedPartition.of((3, 1, 1), pclass=ORTH_ODD))


def test_n_lambda_eps():
    sp = sp642(-1, 1, -1)
    assert n_lambda_eps(sp) == 6 - 6


def test_even_orthogonal_k0_representative():
    for N in range(5):
        for d in codomain(ORTH_EVEN, N):
            if d.k == 0:
                assert d.unordered and tuple(d.rho.alpha) >= tuple(d.rho.beta)
                assert d.rho_minus == Bipartition(d.rho.beta, d.rho.alpha)


def test_bad_datum():
    with pytest.raises(InvalidDatum):
        springer_inv(SYMP, SpringerDatum(1, Bipartition.of((1,), ())), 4)


def test_ordinary_special():
    assert ordinary_springer_special(()) == Bipartition.of((), ())
    for m in range(7):
        for lam in enumerate_partitions(2 * m, SYMP, special_only=True):
            a, b = ordinary_springer_special(lam)
            assert symb("imp", 0, a, b) == family(lam).special


def test_sp_closure_compatibility():
    for m in range(7):
        for lam in enumerate_partitions(2 * m, SYMP):
            rho = springer(SignedPartition.of(lam)).rho
            s = symb("imp", 0, rho.alpha, rho.beta)
            assert s in family(sp_closure(lam)).members()


def test_json_roundtrip():
    sp = SignedPartition.from_json({"lambda": [6, 4, 2], "class": "symp", "eps": {"6": 1, "4": -1, "2": 1}})
    assert SignedPartition.from_json(sp.to_json()) == sp


@pytest.mark.parametrize("cls", [SYMP, ORTH_ODD, ORTH_EVEN])
def test_codomain_counts(cls):
    for N in range(6):
        assert len(list(signed_partitions(cls, N))) == len(codomain(cls, N))


@given(st.sampled_from([SYMP, ORTH_ODD, ORTH_EVEN]).flatmap(signed))
def test_inverse_roundtrip(sp):
    assert springer_inv(sp.cls, springer(sp), sp.N) == sp


@given(signed(SYMP, 6))
def test_k_matches_datum(sp):
    assert springer(sp).k == k_of(sp)


@given(st.sampled_from([ORTH_ODD, ORTH_EVEN]).flatmap(signed))
def test_orthogonal_sign_flip_invariance(sp):
    flipped = SignedPartition(sp.lam, sp.cls, tuple((i, -s) for i, s in sp.eps))
    assert flipped == sp
    assert springer(flipped) == springer(sp)
