from fractions import Fraction

import pytest

from hyperorders.autos import Signature, pgl_order, semi_invariance_exponent
from hyperorders.family import HypersurfaceFamily
from hyperorders.forms import (
    ChainSumForm,
    MonomialForm,
    NonInjectiveChain,
    NotAdmissible,
    chain_fermat,
    compositions,
    covering_condition,
    degree_in_variable,
    fermat,
    format_form,
    invariant_monomials,
    klein,
    mixed_cycle_fermat,
    witness,
)
from hyperorders.numtheory import PrimePower

from oracles import n_monomials


def test_monomial_form_validation_and_order():
    f = MonomialForm(2, 3, ((1, (0, 3)), (2, (3, 0)), (Fraction(1, 2), (1, 2))))
    assert [e for _, e in f.terms] == [(3, 0), (1, 2), (0, 3)]
    assert format_form(f) == "2*x0^3 + 1/2*x0*x1^2 + 1*x1^3"
    with pytest.raises(ValueError):
        MonomialForm(2, 3, ((1, (1, 1)),))
    with pytest.raises(ValueError):
        MonomialForm(2, 3, ((0, (3, 0)),))
    with pytest.raises(ValueError):
        MonomialForm(2, 3, ((1, (3, 0)), (2, (3, 0))))
    g = f + MonomialForm(2, 3, ((-2, (3, 0)),))
    assert [e for _, e in g.terms] == [(1, 2), (0, 3)]


def test_chain_sum_validation():
    with pytest.raises(NonInjectiveChain):
        ChainSumForm(3, 3, ((0, 2), (1, 2)))
    with pytest.raises(ValueError):
        ChainSumForm(3, 3, ((0, 0),))
    with pytest.raises(ValueError):
        ChainSumForm(3, 3, ((0, 1),), frozenset({0}))
    with pytest.raises(ValueError):
        ChainSumForm(3, 3, ((0, 1),), coefficients=((2, 5),))


def test_klein_and_fermat_expand():
    assert str(klein(1, 3)) == "1*x0^2*x1 + 1*x0*x2^2 + 1*x1^2*x2"
    assert str(fermat(1, 4)) == "1*x0^4 + 1*x1^4 + 1*x2^4"
    form = ChainSumForm(3, 3, ((0, 1),), frozenset({1, 2}), ((1, Fraction(-3, 2)),))
    assert str(form) == "1*x0^2*x1 + -3/2*x1^3 + 1*x2^3"


def test_cycle_and_chain_builders():
    assert mixed_cycle_fermat(3, 3, 5).chain == tuple((i, (i + 1) % 5) for i in range(5))
    assert mixed_cycle_fermat(2, 3, 3).fermat == frozenset({3})
    with pytest.raises(ValueError):
        mixed_cycle_fermat(2, 3, 1)
    with pytest.raises(ValueError):
        mixed_cycle_fermat(2, 3, 5)
    f = chain_fermat(2, 3, 3)
    assert f.chain == ((0, 1), (1, 2), (2, 3)) and f.fermat == frozenset({3})


def test_compositions_count_and_order():
    comps = list(compositions(3, 3))
    assert len(comps) == n_monomials(3, 3)
    assert comps[0] == (3, 0, 0) and comps[-1] == (0, 0, 3)
    assert comps == sorted(comps, reverse=True)


def test_invariant_monomials_q11_contains_five_klein_terms():
    sig = Signature(11, (1, 9, 4, 3, 5))
    inv = invariant_monomials(sig, 3)
    klein_like = [e for e in inv if sorted(e) == [0, 0, 0, 1, 2]]
    assert len(klein_like) == 5
    assert all(sig.weight(e) == 0 for e in inv)


@pytest.mark.parametrize("q,entries,d", [(5, (1, 3, 4, 2), 3), (9, (1, 7, 4, 0, 0), 3), (8, (1, 5, 3), 4)])
def test_invariant_monomials_partition_all_monomials(q, entries, d):
    sig = Signature(q, entries)
    total = sum(len(invariant_monomials(sig, d, c)) for c in range(q))
    assert total == n_monomials(d, len(entries))


def test_covering_condition():
    assert covering_condition(Signature(11, (1, 9, 4, 3, 5)), 3)
    assert not covering_condition(Signature(5, (1, 0, 0, 0)), 3)
    assert covering_condition(Signature(3, (0, 1, 2, 0, 1, 2)), 3, 1)


@pytest.mark.parametrize(
    "n,d,p,r,entries",
    [
        (3, 3, 11, 1, (1, 9, 4, 3, 5)),
        (2, 3, 2, 3, (1, 6, 4, 0)),
        (2, 3, 3, 2, (1, 7, 4, 0)),
        (2, 3, 5, 1, (1, 3, 4, 2)),
        (3, 3, 3, 1, (1, 0, 0, 0, 0)),
    ],
)
def test_witness_examples(n, d, p, r, entries):
    form, sig = witness(HypersurfaceFamily(n, d), PrimePower(p, r))
    assert sig.entries == entries
    assert semi_invariance_exponent(sig, form) == 0
    assert pgl_order(sig) == p**r


def test_witness_refuses_inadmissible():
    with pytest.raises(NotAdmissible):
        witness(HypersurfaceFamily(2, 3), PrimePower(2, 4))
    with pytest.raises(NotAdmissible):
        witness(HypersurfaceFamily(2, 3), PrimePower(7, 1))


def test_degree_in_variable():
    f = chain_fermat(2, 3, 2)
    assert [degree_in_variable(f, i) for i in range(4)] == [2, 2, 3, 3]
    assert degree_in_variable(ChainSumForm(3, 3, ((0, 1),)), 2) == 0
