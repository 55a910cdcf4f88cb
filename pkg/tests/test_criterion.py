import pytest
import sympy

from hyperorders.criterion import (
    OracleBoundExceeded,
    all_admissible,
    brute_force_admissible,
    factor_table,
    is_admissible,
)
from hyperorders.family import Case, HypersurfaceFamily, InvalidFamily, classify
from hyperorders.numtheory import PrimePower


def fam(n, d):
    return HypersurfaceFamily(n, d)


def test_family_validation():
    for bad in ((1, 3), (2, 4), (0, 3), (2, 2)):
        with pytest.raises(InvalidFamily):
            fam(*bad)


@pytest.mark.parametrize(
    "n,d,p,r,case,admissible",
    [
        (2, 3, 2, 3, Case.DividesDminus1, True),
        (2, 3, 2, 4, Case.DividesDminus1, False),
        (2, 3, 3, 2, Case.DividesD, True),
        (2, 3, 3, 3, Case.DividesD, False),
        (2, 3, 5, 1, Case.Coprime, True),
        (2, 3, 5, 2, Case.Coprime, False),
        (2, 3, 7, 1, Case.Coprime, False),
        (3, 3, 11, 1, Case.Coprime, True),
        (3, 4, 61, 1, Case.Coprime, True),
        (3, 4, 3, 4, Case.DividesDminus1, True),
        (3, 4, 3, 5, Case.DividesDminus1, False),
    ],
)
def test_classification_examples(n, d, p, r, case, admissible):
    cert = is_admissible(fam(n, d), PrimePower(p, r))
    assert cert.case is case and cert.admissible is admissible
    assert (cert.witness is not None) is admissible
    if admissible:
        assert cert.checks.passed(p**r)


def test_certificate_reasons_mention_case():
    bad = is_admissible(fam(2, 3), PrimePower(2, 4))
    assert bad.reason.startswith("case (i)") and "r=4 > k(n+1)=1*3=3" in bad.reason
    assert "order of 1-d mod 7 is 6 > 4" in is_admissible(fam(2, 3), PrimePower(7, 1)).reason


def _orders(n, d):
    return sorted(c.pp.value for c in all_admissible(fam(n, d)))


def test_all_admissible_matches_known_sets():
    assert _orders(2, 3) == [2, 3, 4, 5, 8, 9]
    assert _orders(3, 4) == sorted([2, 4, 8, 16, 3, 9, 27, 81, 5, 7, 61])


@pytest.mark.parametrize("n,d", [(1, 4), (2, 3), (3, 3), (2, 5), (4, 4), (1, 7), (3, 6)])
def test_all_admissible_is_complete(n, d):
    # any admissible p^r is at most |1-d|^(n+2) + 1 or a power of a prime dividing d-1
    listed = {c.pp.value for c in all_admissible(fam(n, d))}
    limit = max(abs(1 - d) ** (n + 2) + 1, 2 ** (n + 1) * 64)
    for p in sympy.primerange(2, min(limit, 20000) + 1):
        r = 1
        while p**r <= limit and p**r <= 10**6:
            assert is_admissible(fam(n, d), PrimePower(p, r)).admissible == (p**r in listed), (p, r)
            r += 1


def test_monotone_in_r_and_n():
    pps = [(p, r) for p in (2, 3, 5, 7, 11, 13, 31, 43) for r in range(1, 7) if p**r < 10**5]
    for d in (3, 4, 5, 6):
        for n in range(1, 7):
            if (n, d) in ((1, 3), (2, 4)):
                continue
            for p, r in pps:
                ok = is_admissible(fam(n, d), PrimePower(p, r)).admissible
                if r > 1 and ok:
                    assert is_admissible(fam(n, d), PrimePower(p, r - 1)).admissible
                if ok and (n + 1, d) not in ((1, 3), (2, 4)):
                    assert is_admissible(fam(n + 1, d), PrimePower(p, r)).admissible


def test_classify_ell_is_order():
    cl = classify(fam(5, 3), PrimePower(43, 1))
    assert cl.ell == 7 and cl.bound == 7 and cl.admissible


def test_factor_table_rows():
    rows = factor_table(3, 9)
    assert [abs(r.value) for r in rows] == [3, 3, 9, 15, 33, 63, 129, 255, 513]
    assert [str(r.factorization) for r in rows][-3:] == ["3*43", "3*5*17", "3^3*19"]
    with pytest.raises(ValueError):
        factor_table(2, 3)


def test_oracle_small_cases_and_bounds():
    assert brute_force_admissible(fam(2, 3), PrimePower(5, 1))
    assert not brute_force_admissible(fam(2, 3), PrimePower(5, 2))
    assert not brute_force_admissible(fam(4, 5), PrimePower(3, 3))
    with pytest.raises(OracleBoundExceeded):
        brute_force_admissible(fam(2, 3), PrimePower(29, 1))
    with pytest.raises(OracleBoundExceeded):
        brute_force_admissible(fam(5, 3), PrimePower(2, 1))


def test_oracle_parallel_matches_serial():
    for p, r in ((2, 3), (2, 4), (3, 2), (5, 1), (7, 1)):
        f, pp = fam(3, 3), PrimePower(p, r)
        assert brute_force_admissible(f, pp, jobs=2) == brute_force_admissible(f, pp, jobs=1)
