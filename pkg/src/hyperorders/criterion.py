"""Which prime powers are orders of F-liftable automorphisms.

``is_admissible`` applies the three-case criterion (``p | d-1``, ``p | d``,
``p`` coprime to ``d(d-1)``) and backs every positive answer with an
explicit witness that is re-verified from scratch.  ``brute_force_admissible``
is an independent search over signatures used to cross-check the
criterion on small instances.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import gcd

from .autos import Signature, determinant_check, pgl_order, semi_invariance_exponent
from .family import Case, Classification, HypersurfaceFamily, InvalidFamily, classify
from .forms import ChainSumForm, witness
from .numtheory import Factorization, PrimePower, factorize
from .smoothness import is_smooth_chain_sum

__all__ = [
    "Case",
    "HypersurfaceFamily",
    "InvalidFamily",
    "OrderCertificate",
    "WitnessChecks",
    "all_admissible",
    "brute_force_admissible",
    "factor_table",
    "is_admissible",
    "verify_witness",
]

ORACLE_MAX_MODULUS = 27
ORACLE_MAX_VARS = 6


class WitnessVerificationError(AssertionError):
    pass


class OracleBoundExceeded(ValueError):
    pass


@dataclass(frozen=True)
class WitnessChecks:
    invariance_c: int
    pgl_order: int
    smooth: bool
    determinant: tuple[int, bool] | None

    def passed(self, q: int) -> bool:
        det_ok = self.determinant is None or self.determinant[1]
        return self.invariance_c == 0 and self.pgl_order == q and self.smooth and det_ok


@dataclass(frozen=True)
class OrderCertificate:
    """Verdict on one prime power.

    ``case`` is always filled in, also for inadmissible prime powers, so
    callers can report which branch of the criterion failed.  ``ell`` is
    the least qualifying exponent (cases ii and iii), ``k`` the valuation
    of ``d-1`` (case i) and ``bound`` the limit the criterion compares
    against.
    """

    family: HypersurfaceFamily
    pp: PrimePower
    admissible: bool
    case: Case
    ell: int | None = None
    k: int | None = None
    bound: int | None = None
    twist_order: int | None = None
    witness: tuple[ChainSumForm, Signature] | None = None
    checks: WitnessChecks | None = None

    @property
    def verdict(self) -> str:
        return "admissible" if self.admissible else "inadmissible"

    @property
    def reason(self) -> str:
        p, r = self.pp.p, self.pp.r
        n, d = self.family.n, self.family.d
        if self.case is Case.DividesDminus1:
            rel = "<=" if self.admissible else ">"
            return f"case (i): {p} | d-1={d - 1}, r={r} {rel} k(n+1)={self.k}*{n + 1}={self.bound}"
        tag = "ii" if self.case is Case.DividesD else "iii"
        where = f"{p} | d={d}" if self.case is Case.DividesD else f"{p} coprime to d(d-1)"
        rel = "<=" if self.admissible else ">"
        return (
            f"case ({tag}): {where}, order of 1-d mod {self.pp.value} is "
            f"{self.twist_order} {rel} {self.bound}"
        )


def verify_witness(family: HypersurfaceFamily, pp: PrimePower, form: ChainSumForm, sig: Signature) -> WitnessChecks:
    """Run the invariance, order, smoothness and determinant checks."""
    c = semi_invariance_exponent(sig, form)
    order = pgl_order(sig)
    smooth = bool(is_smooth_chain_sum(form))
    det = None
    if (family.d - 1) % pp.p:
        det = determinant_check(sig, family.d, pp.p, pp.r)
    return WitnessChecks(c, order, smooth, det)


def _certificate(family: HypersurfaceFamily, pp: PrimePower, cl: Classification) -> OrderCertificate:
    if not cl.admissible:
        return OrderCertificate(family, pp, False, cl.case, k=cl.k, bound=cl.bound, twist_order=cl.ell)
    form, sig = witness(family, pp)
    checks = verify_witness(family, pp, form, sig)
    if not checks.passed(pp.value):
        raise WitnessVerificationError(f"witness for {pp} at (n={family.n}, d={family.d}) failed: {checks}")
    return OrderCertificate(
        family, pp, True, cl.case, ell=cl.ell, k=cl.k, bound=cl.bound,
        twist_order=cl.ell, witness=(form, sig), checks=checks,
    )


def is_admissible(family: HypersurfaceFamily, pp: PrimePower) -> OrderCertificate:
    return _certificate(family, pp, classify(family, pp))


def all_admissible(family: HypersurfaceFamily) -> list[OrderCertificate]:
    """Every admissible prime power for the family, sorted by (p, r).

    Case (i) primes come from ``d-1``.  Any other admissible ``p^r``
    divides ``(1-d)^l - 1`` for some ``l <= n+2``, so those n+2 numbers
    are factored and each prime-power divisor is re-checked.
    """
    n, d = family.n, family.d
    candidates: set[tuple[int, int]] = set()
    for p, _ in factorize(d - 1).factors:
        candidates.update((p, r) for r in range(1, classify(family, PrimePower(p, 1)).bound + 1))
    for ell in range(1, n + 3):
        for p, e in factorize(abs((1 - d) ** ell - 1)).factors:
            if (d - 1) % p:
                candidates.update((p, r) for r in range(1, e + 1))
    certs = [is_admissible(family, PrimePower(p, r)) for p, r in sorted(candidates)]
    return [c for c in certs if c.admissible]


@dataclass(frozen=True)
class FactorRow:
    ell: int
    value: int
    factorization: Factorization


def factor_table(d: int, max_ell: int) -> list[FactorRow]:
    """Rows ``(l, (1-d)^l - 1, factorization of |(1-d)^l - 1|)``."""
    if d < 3 or max_ell < 1:
        raise ValueError("need d >= 3 and max_ell >= 1")
    rows = []
    for ell in range(1, max_ell + 1):
        v = (1 - d) ** ell - 1
        rows.append(FactorRow(ell, v, factorize(abs(v))))
    return rows


# -- brute-force oracle -------------------------------------------------


def _covers(entries: tuple[int, ...], a: int, q: int) -> bool:
    # every x_i has an invariant x_i^(d-1) x_j, i.e. a*sigma_i is some sigma_j
    values = set(entries)
    return all(a * s % q in values for s in values)


def _search_shard(args) -> bool:
    q, N, a, prefix = args
    if prefix is None:
        # signatures with no unit entry
        pool = [x for x in range(q) if gcd(x, q) != 1]
        multisets = combinations_with_replacement(pool, N)
    else:
        # after unit scaling some entry equals 1; ``prefix`` is the least other entry
        multisets = ((1, prefix) + rest for rest in combinations_with_replacement(range(prefix, q), N - 2))
    for ms in multisets:
        if _covers(ms, a, q) and pgl_order(Signature(q, ms)) == q:
            return True
    return False


def brute_force_admissible(
    family: HypersurfaceFamily,
    pp: PrimePower,
    jobs: int = 1,
    max_modulus: int = ORACLE_MAX_MODULUS,
    max_vars: int = ORACLE_MAX_VARS,
) -> bool:
    """Search all signatures mod ``p^r`` for one that has projective order
    ``p^r`` and whose invariant monomials include some ``x_i^(d-1) x_j``
    for every ``i``.

    Signatures are sorted multisets; when one has a unit entry it is
    scaled so that entry is 1.  The search is split into shards by the
    least entry besides that 1, and the answer does not depend on how the
    shards are scheduled.
    """
    q, N = pp.value, family.nvars
    if q > max_modulus or N > max_vars:
        raise OracleBoundExceeded(
            f"oracle limited to p^r <= {max_modulus} and n+2 <= {max_vars}, got {q} and {N}"
        )
    a = (1 - family.d) % q
    shards = [(q, N, a, x) for x in range(q)] + [(q, N, a, None)]
    if jobs <= 1:
        return any(_search_shard(s) for s in shards)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return any(pool.map(_search_shard, shards))
