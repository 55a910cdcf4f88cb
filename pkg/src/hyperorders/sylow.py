"""Sylow p^2-exclusion from the orders of 1-d modulo p and p^2."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

from .criterion import all_admissible
from .family import HypersurfaceFamily
from .numtheory import is_prime, mult_order


class SylowStatus(enum.Enum):
    ExcludedPSquared = "excluded-p2"
    BoundFromCriterion = "criterion-bound"
    PreconditionFailed = "precondition-failed"


@dataclass(frozen=True)
class SylowVerdict:
    """Outcome for one prime.

    ``max_exponent`` is the largest r for which p^r is an admissible
    element order (filled in by ``exponent_report``).  ``sylow_cap`` is 1
    when p^2 cannot divide the order of the automorphism group.
    """

    family: HypersurfaceFamily
    p: int
    status: SylowStatus
    ell_p: int | None = None
    ell_p2: int | None = None
    max_exponent: int | None = None
    via_embedding: bool = False
    reasons: tuple[str, ...] = field(default=())

    @property
    def sylow_cap(self) -> int | None:
        return 1 if self.status is SylowStatus.ExcludedPSquared else None


def _inequalities(n: int, ell_p: int, ell_p2: int) -> list[str]:
    N = n + 2
    failed = []
    if ell_p2 <= N:
        failed.append(f"l(p^2)={ell_p2} <= n+2={N}")
    if 2 * ell_p <= N:
        failed.append(f"2*l(p)={2 * ell_p} <= n+2={N}")
    return failed


def p_squared_excluded(
    family: HypersurfaceFamily, p: int, embed: bool = True, assume_f_liftable: bool = False
) -> SylowVerdict:
    """Whether p^2 is ruled out as a divisor of |Aut(X)|.

    Needs ``p`` coprime to ``d(d-1)`` and ``gcd(d, n+2) = 1``; the gcd
    condition only serves to make the Sylow p-subgroup F-liftable, so
    ``assume_f_liftable=True`` skips it for callers who know liftability
    from elsewhere.  When only the gcd condition fails but
    ``gcd(d, n+3) = 1``, the test is rerun one dimension up and a success
    is flagged ``via_embedding``.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n, d = family.n, family.d
    if (d * (d - 1)) % p == 0:
        return SylowVerdict(family, p, SylowStatus.PreconditionFailed,
                            reasons=(f"p={p} divides d(d-1)={d * (d - 1)}",))
    a = 1 - d
    ell_p, ell_p2 = mult_order(a, p), mult_order(a, p * p)
    if assume_f_liftable or gcd(d, n + 2) == 1:
        failed = _inequalities(n, ell_p, ell_p2)
        status = SylowStatus.PreconditionFailed if failed else SylowStatus.ExcludedPSquared
        return SylowVerdict(family, p, status, ell_p, ell_p2, reasons=tuple(failed))
    reasons = [f"gcd(d, n+2)={gcd(d, n + 2)} != 1"]
    if embed and gcd(d, n + 3) == 1:
        failed = _inequalities(n + 1, ell_p, ell_p2)
        if not failed:
            return SylowVerdict(family, p, SylowStatus.ExcludedPSquared, ell_p, ell_p2,
                                via_embedding=True, reasons=tuple(reasons))
        reasons += [f"at n+1={n + 1}: {r}" for r in failed]
    return SylowVerdict(family, p, SylowStatus.PreconditionFailed, ell_p, ell_p2, reasons=tuple(reasons))


def exponent_report(family: HypersurfaceFamily, assume_f_liftable: Iterable[int] = ()) -> list[SylowVerdict]:
    """One verdict per prime occurring in ``all_admissible(family)``.

    ``assume_f_liftable`` lists primes whose Sylow subgroups are known to
    be F-liftable by other means.
    """
    assumed = set(assume_f_liftable)
    best: dict[int, int] = {}
    for cert in all_admissible(family):
        best[cert.pp.p] = max(best.get(cert.pp.p, 0), cert.pp.r)
    out = []
    for p in sorted(best):
        v = p_squared_excluded(family, p, assume_f_liftable=p in assumed)
        status = v.status
        if status is SylowStatus.PreconditionFailed:
            status = SylowStatus.BoundFromCriterion
        out.append(SylowVerdict(family, p, status, v.ell_p, v.ell_p2, best[p], v.via_embedding, v.reasons))
    return out
