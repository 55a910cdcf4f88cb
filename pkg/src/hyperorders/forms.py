"""Monomial forms, chain-sum forms and witness construction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .autos import Signature
from .family import Case, HypersurfaceFamily, classify
from .numtheory import PrimePower

Exponents = tuple[int, ...]


class NotAdmissible(ValueError):
    pass


class NonInjectiveChain(ValueError):
    pass


def _sort_key(exps: Exponents):
    # descending lexicographic: x0^d first
    return tuple(-e for e in exps)


@dataclass(frozen=True)
class MonomialForm:
    nvars: int
    d: int
    terms: tuple[tuple[Fraction, Exponents], ...]

    def __post_init__(self):
        seen = set()
        clean = []
        for coeff, exps in self.terms:
            exps = tuple(int(e) for e in exps)
            coeff = Fraction(coeff)
            if coeff == 0:
                raise ValueError("zero coefficient in form")
            if len(exps) != self.nvars or any(e < 0 for e in exps) or sum(exps) != self.d:
                raise ValueError(f"bad exponent vector {exps} for degree {self.d} in {self.nvars} variables")
            if exps in seen:
                raise ValueError(f"duplicate monomial {exps}")
            seen.add(exps)
            clean.append((coeff, exps))
        clean.sort(key=lambda t: _sort_key(t[1]))
        object.__setattr__(self, "terms", tuple(clean))

    def __add__(self, other: "MonomialForm") -> "MonomialForm":
        if (self.nvars, self.d) != (other.nvars, other.d):
            raise ValueError("forms live in different spaces")
        acc: dict[Exponents, Fraction] = {}
        for c, e in self.terms + other.terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return MonomialForm(self.nvars, self.d, tuple((c, e) for e, c in acc.items() if c))

    def __str__(self) -> str:
        return format_form(self)


def format_form(form) -> str:
    """Canonical text: ``coeff*x0^a0*x1^a1`` terms in descending lex order,
    joined by `` + ``; exponent 1 is written bare, exponent 0 omitted."""
    parts = []
    for coeff, exps in form.terms:
        factors = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exps) if e]
        parts.append("*".join([str(coeff)] + factors))
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class ChainSumForm:
    """``sum_{i in C} a_i x_i^(d-1) x_f(i) + sum_{j in D} a_j x_j^d``.

    ``chain`` maps each index of C to ``f(i)``; ``fermat`` is D.  Every
    variable in C or D owns exactly one term, whose coefficient defaults
    to 1 and can be overridden through ``coefficients``.
    """

    nvars: int
    d: int
    chain: tuple[tuple[int, int], ...] = ()
    fermat: frozenset[int] = frozenset()
    coefficients: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        chain = tuple(sorted((int(i), int(j)) for i, j in dict(self.chain).items()))
        if len(chain) != len(self.chain):
            raise ValueError("chain lists an index twice")
        object.__setattr__(self, "chain", chain)
        object.__setattr__(self, "fermat", frozenset(self.fermat))
        coeffs = tuple(sorted((int(i), Fraction(c)) for i, c in dict(self.coefficients).items()))
        object.__setattr__(self, "coefficients", coeffs)
        N = self.nvars
        if N < 1 or self.d < 2:
            raise ValueError("need at least one variable and degree >= 2")
        targets = [j for _, j in chain]
        for i, j in chain:
            if not (0 <= i < N and 0 <= j < N):
                raise ValueError(f"chain entry {i}->{j} out of range")
            if i == j:
                raise ValueError(f"chain entry {i}->{j} is a loop")
        if any(not 0 <= j < N for j in self.fermat):
            raise ValueError("Fermat index out of range")
        if self.fermat & self.domain:
            raise ValueError("chain and Fermat indices overlap")
        if len(set(targets)) != len(targets):
            raise NonInjectiveChain(f"chain map {dict(chain)} is not injective")
        owners = self.domain | self.fermat
        for i, c in coeffs:
            if i not in owners or c == 0:
                raise ValueError(f"bad coefficient {c} for variable {i}")

    @property
    def f(self) -> dict[int, int]:
        return dict(self.chain)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.chain)

    def coefficient(self, i: int) -> Fraction:
        return dict(self.coefficients).get(i, Fraction(1))

    def expand(self) -> MonomialForm:
        N, d = self.nvars, self.d
        terms = []
        for i, j in self.chain:
            e = [0] * N
            e[i] += d - 1
            e[j] += 1
            terms.append((self.coefficient(i), tuple(e)))
        for j in sorted(self.fermat):
            e = [0] * N
            e[j] = d
            terms.append((self.coefficient(j), tuple(e)))
        return MonomialForm(N, d, tuple(terms))

    @property
    def terms(self):
        return self.expand().terms

    def __str__(self) -> str:
        return format_form(self)


def klein(n: int, d: int) -> ChainSumForm:
    N = n + 2
    return ChainSumForm(N, d, tuple((i, (i + 1) % N) for i in range(N)))


def fermat(n: int, d: int) -> ChainSumForm:
    return ChainSumForm(n + 2, d, (), frozenset(range(n + 2)))


def mixed_cycle_fermat(n: int, d: int, ell: int) -> ChainSumForm:
    """An ``ell``-cycle on x_0..x_(ell-1) plus Fermat terms on the rest."""
    N = n + 2
    if ell == 1:
        raise ValueError("a cycle of length 1 would need the monomial x0^(d-1)*x0")
    if not 2 <= ell <= N:
        raise ValueError(f"cycle length must lie in 2..{N}, got {ell}")
    return ChainSumForm(N, d, tuple((i, (i + 1) % ell) for i in range(ell)), frozenset(range(ell, N)))


def chain_fermat(n: int, d: int, chain_len: int) -> ChainSumForm:
    """Open chain x_0 -> ... -> x_chain_len plus Fermat terms from chain_len on."""
    N = n + 2
    if not 0 < chain_len < N:
        raise ValueError(f"chain length must lie in 1..{N - 1}, got {chain_len}")
    return ChainSumForm(N, d, tuple((i, i + 1) for i in range(chain_len)), frozenset(range(chain_len, N)))


def witness(family: HypersurfaceFamily, pp: PrimePower) -> tuple[ChainSumForm, Signature]:
    """An invariant smooth chain-sum form and a diagonal element of order ``p^r``.

    Case p | d-1: open chain of length n+1 with signature
    ``(1, (1-d), ..., (1-d)^n, 0)``.  Otherwise an ``ell``-cycle with
    signature ``(1, (1-d), ..., (1-d)^(ell-1), 0, ..., 0)``, ``ell`` the
    order of ``1-d`` mod ``p^r``.  When ``ell = 1`` (that is ``p^r | d``)
    the cycle is replaced by the Fermat term ``x_0^d`` and the signature
    is ``(1, 0, ..., 0)``.
    """
    cl = classify(family, pp)
    if not cl.admissible:
        raise NotAdmissible(f"{pp} is not the order of an F-liftable automorphism for n={family.n}, d={family.d}")
    n, d, q, N = family.n, family.d, pp.value, family.nvars
    a = (1 - d) % q
    if cl.case is Case.DividesDminus1:
        form = chain_fermat(n, d, n + 1)
        entries = [pow(a, i, q) for i in range(n + 1)] + [0]
    elif cl.ell == 1:
        form = fermat(n, d)
        entries = [1] + [0] * (N - 1)
    else:
        form = mixed_cycle_fermat(n, d, cl.ell)
        entries = [pow(a, i, q) for i in range(cl.ell)] + [0] * (N - cl.ell)
    return form, Signature(q, tuple(entries))


def compositions(d: int, N: int) -> Iterator[Exponents]:
    """Exponent vectors of degree ``d`` in ``N`` variables, descending lex order."""
    if N == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in compositions(d - first, N - 1):
            yield (first,) + rest


def invariant_monomials(sig: Signature, d: int, c: int = 0) -> list[Exponents]:
    return [e for e in compositions(d, sig.nvars) if sig.weight(e) == c % sig.q]


def covering_condition(sig: Signature, d: int, c: int = 0) -> bool:
    """Whether each x_i has some x_i^(d-1) x_j of weight ``c``."""
    q = sig.q
    values = set(sig.entries)
    return all(((c - (d - 1) * s) % q) in values for s in sig.entries)


def degree_in_variable(form, i: int) -> int:
    return max((e[i] for _, e in form.terms), default=0)
