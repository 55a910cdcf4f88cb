"""Hypersurface families and the three-way classification of prime powers."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .numtheory import PrimePower, mult_order, padic_split

EXCLUDED_PAIRS = frozenset({(1, 3), (2, 4)})


class InvalidFamily(ValueError):
    pass


@dataclass(frozen=True, order=True)
class HypersurfaceFamily:
    """Smooth hypersurfaces of dimension ``n`` and degree ``d`` in P^(n+1)."""

    n: int
    d: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidFamily(f"dimension must be >= 1, got n={self.n}")
        if self.d < 3:
            raise InvalidFamily(f"degree must be >= 3, got d={self.d}")
        if (self.n, self.d) in EXCLUDED_PAIRS:
            raise InvalidFamily(
                f"(n, d) = ({self.n}, {self.d}) is excluded: automorphisms need not be linear"
            )

    @property
    def nvars(self) -> int:
        return self.n + 2

    @property
    def twist(self) -> int:
        """The multiplier ``1 - d`` acting on signatures."""
        return 1 - self.d


class Case(enum.Enum):
    DividesDminus1 = "i"
    DividesD = "ii"
    Coprime = "iii"


@dataclass(frozen=True)
class Classification:
    """Raw outcome of the order criterion, before any witness is built.

    ``ell`` is the least ``l >= 1`` with ``(1-d)^l = 1 mod p^r`` (cases ii
    and iii; it may exceed ``bound``) and ``k`` the valuation of ``d - 1``
    (case i).
    """

    case: Case
    admissible: bool
    ell: int | None = None
    k: int | None = None
    bound: int | None = None


def classify(family: HypersurfaceFamily, pp: PrimePower) -> Classification:
    n, d = family.n, family.d
    p, r, q = pp.p, pp.r, pp.value
    if (d - 1) % p == 0:
        k = padic_split(d - 1, p).k
        return Classification(Case.DividesDminus1, r <= k * (n + 1), k=k, bound=k * (n + 1))
    case, limit = (Case.DividesD, n + 1) if d % p == 0 else (Case.Coprime, n + 2)
    ell = mult_order(1 - d, q)
    return Classification(case, ell <= limit, ell=ell, bound=limit)
