"""Diagonal automorphisms encoded by signatures.

A signature ``(q, sigma)`` stands for ``diag(xi**sigma_0, ..., xi**sigma_{N-1})``
with ``xi`` a primitive q-th root of unity.  Roots of unity never appear
as numbers: every statement about them is a congruence on exponents.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .family import HypersurfaceFamily
from .numtheory import (
    factorize,
    padic_split,
    smith_normal_form,
    solve_linear_congruence,
    integer_left_kernel,
)

GROUP_LIMIT = 10**6


class NotSemiInvariant(ValueError):
    """The diagonal element does not preserve the hypersurface."""


class NoSolution(ValueError):
    pass


class GroupTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Signature:
    q: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.q < 1:
            raise ValueError(f"modulus must be >= 1, got {self.q}")
        if len(self.entries) < 2:
            raise ValueError("a signature needs at least two entries")
        object.__setattr__(self, "entries", tuple(int(x) % self.q for x in self.entries))

    @classmethod
    def of(cls, q: int, entries: Sequence[int]) -> "Signature":
        return cls(q, tuple(entries))

    @property
    def nvars(self) -> int:
        return len(self.entries)

    def shift(self, b: int) -> "Signature":
        """Multiply the matrix by the scalar ``xi**b``."""
        return Signature(self.q, tuple(x + b for x in self.entries))

    def scale(self, t: int) -> "Signature":
        """The ``t``-th power of the element."""
        return Signature(self.q, tuple(t * x for x in self.entries))

    def weight(self, exponents: Sequence[int]) -> int:
        """Eigenvalue exponent of the monomial with these exponents."""
        return sum(s * e for s, e in zip(self.entries, exponents)) % self.q

    def __str__(self) -> str:
        return f"({', '.join(map(str, self.entries))}) mod {self.q}"


@dataclass(frozen=True)
class EigenspaceProfile:
    q: int
    multiplicity: dict[int, int] = field(hash=False)

    def dim(self, a: int) -> int:
        return self.multiplicity.get(a % self.q, 0)


@dataclass(frozen=True)
class LiftingReport:
    signature: Signature
    c: int
    f_liftable: bool
    shift_b: int | None
    det_exponent: int
    det_ok: bool | None = None


def eigenspace_profile(sig: Signature) -> EigenspaceProfile:
    return EigenspaceProfile(sig.q, dict(sorted(Counter(sig.entries).items())))


def gl_order(sig: Signature) -> int:
    return sig.q // math.gcd(sig.q, *sig.entries)


def pgl_order(sig: Signature) -> int:
    # brute force over scalar shifts; q is small
    return min(gl_order(sig.shift(-t)) for t in range(sig.q))


def _exponent_vectors(form) -> list[tuple[int, ...]]:
    return [tuple(e) for _, e in form.terms]


def semi_invariance_exponent(sig: Signature, form) -> int:
    """The residue ``c`` with ``phi*(F) = xi**c F``.

    ``form`` is anything exposing ``terms`` as ``(coeff, exponents)``
    pairs.  Raises NotSemiInvariant when the monomials carry different
    weights.
    """
    exps = _exponent_vectors(form)
    if not exps:
        raise ValueError("the zero form has no semi-invariance exponent")
    if any(len(e) != sig.nvars for e in exps):
        raise ValueError("form and signature have different numbers of variables")
    weights = {sig.weight(e) for e in exps}
    if len(weights) != 1:
        raise NotSemiInvariant(f"monomial weights {sorted(weights)} differ under {sig}")
    return weights.pop()


def decide_F_liftable(q: int, c: int, d: int) -> tuple[bool, int | None]:
    """Whether an element with semi-invariance residue ``c`` has an F-lifting.

    When it does, the returned shift ``b`` is the least nonnegative
    solution of ``d*b = -c (mod q)``; shifting the signature by ``b`` makes
    the form invariant.
    """
    if q < 1:
        raise ValueError(f"modulus must be >= 1, got {q}")
    sol = solve_linear_congruence(d, -c, q)
    if sol is None:
        return False, None
    return True, sol[0]


def count_F_liftings(q: int, d: int) -> int:
    return math.gcd(d, q)


def _prime_power(q: int) -> tuple[int, int]:
    fac = factorize(q).factors
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    return fac[0]


def determinant_check(sig: Signature, d: int, p: int, r: int) -> tuple[int, bool]:
    """Determinant exponent and whether it is a ``p**min(s, r)``-th root of unity.

    ``s`` is the valuation of ``d`` at ``p``; for ``p`` not dividing ``d``
    the determinant must be 1.
    """
    q = p**r
    if sig.q != q:
        raise ValueError(f"signature modulus {sig.q} is not {p}^{r}")
    if (d - 1) % p == 0:
        raise ValueError(f"p={p} divides d-1={d - 1}; the determinant bound does not apply")
    s = padic_split(d, p).k
    det = sum(sig.entries) % q
    return det, det % p ** (r - min(s, r)) == 0


def sl_normalize(sig: Signature, d: int) -> Signature:
    """The unique F-lifting with determinant 1 among the scalar shifts of ``sig``.

    Needs ``q = p^r`` with ``p | d`` and ``p`` not dividing the number of
    variables.  Only shifts by multiples of ``q / gcd(d, q)`` are allowed,
    since those keep the form invariant.
    """
    p, _ = _prime_power(sig.q)
    N = sig.nvars
    if d % p:
        raise NoSolution(f"p={p} does not divide d={d}")
    if N % p == 0:
        raise NoSolution(f"p={p} divides the number of variables {N}")
    g = math.gcd(d, sig.q)
    step = sig.q // g
    total = sum(sig.entries)
    hits = [j * step for j in range(g) if (total + N * j * step) % sig.q == 0]
    if not hits:
        raise NoSolution(f"no admissible scalar shift of {sig} has determinant 1")
    assert len(hits) == 1
    return sig.shift(hits[0])


def lifting_report(sig: Signature, form, d: int) -> LiftingReport:
    c = semi_invariance_exponent(sig, form)
    ok, b = decide_F_liftable(sig.q, c, d)
    det_ok = None
    det = sum(sig.entries) % sig.q
    if ok:
        lifted = sig.shift(b)
        det = sum(lifted.entries) % sig.q
        fac = factorize(sig.q).factors if sig.q > 1 else ()
        if len(fac) == 1 and (d - 1) % fac[0][0]:
            det, det_ok = determinant_check(lifted, d, *fac[0])
    return LiftingReport(sig, c, ok, b, det, det_ok)


@dataclass(frozen=True)
class GroupLifting:
    liftable: bool
    shifts: tuple[int, ...] | None
    projective_order: int
    invariants: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.liftable


def group_F_liftable(generators: Sequence[Signature], form, d: int) -> GroupLifting:
    """Decide whether the projective group generated by diagonal elements
    has an F-lifting.

    The lifts of the group form ``H``, generated by the generators and the
    scalars; ``G = H / scalars`` is the projective group.  Smith form of
    the relation lattice of ``G`` gives a basis ``b_i`` of orders ``m_i``.
    A lifting is a section ``G -> H`` killing the semi-invariance residue,
    and such a section exists iff every basis element has a lift ``w_i +
    beta_i`` with ``d*beta_i = -c(w_i)`` and ``m_i (w_i + beta_i) = 0``.

    Returned shifts are per input generator: ``gen_j + shift_j`` generate
    an F-invariant lifting.
    """
    if not generators:
        return GroupLifting(True, (), 1, ())
    q = generators[0].q
    N = generators[0].nvars
    if any(g.q != q or g.nvars != N for g in generators):
        raise ValueError("generators must share modulus and length")
    cs = [semi_invariance_exponent(g, form) for g in generators]
    exps = _exponent_vectors(form)

    # coordinates modulo scalars: v -> (v_j - v_0)_{j >= 1}
    k = len(generators)
    M = [[(g.entries[j] - g.entries[0]) % q for j in range(1, N)] for g in generators]
    stacked = M + [[q * int(i == j) for j in range(N - 1)] for i in range(N - 1)]
    relations = [list(u[:k]) for u in integer_left_kernel(stacked)]
    D, _, V, Vi = smith_normal_form(relations)
    orders = [abs(D[i][i]) for i in range(k)]
    assert all(orders), "relation lattice must have full rank"
    size = math.prod(orders)
    if size * q > GROUP_LIMIT:
        raise GroupTooLarge(f"group of lifts has order {size * q} > {GROUP_LIMIT}")

    def combine(coeffs):
        return tuple(
            sum(a * g.entries[j] for a, g in zip(coeffs, generators)) % q for j in range(N)
        )

    section = []
    for i, m in enumerate(orders):
        w = combine(Vi[i])
        scaled = {m * x % q for x in w}
        assert len(scaled) == 1
        t = scaled.pop()
        c_w = sum(a * x for a, x in zip(w, exps[0])) % q
        beta = next(
            (b for b in range(q) if (c_w + d * b) % q == 0 and (t + m * b) % q == 0), None
        )
        if beta is None:
            return GroupLifting(False, None, size, tuple(m for m in orders if m > 1))
        section.append(tuple((x + beta) % q for x in w))

    shifts = []
    for j, g in enumerate(generators):
        img = tuple(sum(V[j][i] * section[i][col] for i in range(k)) % q for col in range(N))
        diff = {(a - b) % q for a, b in zip(img, g.entries)}
        assert len(diff) == 1
        shift = diff.pop()
        assert (cs[j] + d * shift) % q == 0
        shifts.append(shift)
    return GroupLifting(True, tuple(shifts), size, tuple(m for m in orders if m > 1))


def all_liftable_decision(family: HypersurfaceFamily) -> bool:
    return math.gcd(family.d, family.n + 2) == 1


def klein_signature(n: int, p: int) -> Signature:
    """The order-p element ``diag(1, xi, ..., xi^(p-1), 1, ...)`` on n+2 variables.

    Needs ``p | n + 2``.
    """
    N = n + 2
    if N % p:
        raise ValueError(f"p={p} does not divide n+2={N}")
    return Signature(p, tuple(i % p for i in range(N)))
