"""Exact smoothness of chain-sum hypersurfaces.

Projective space is cut into strata by which coordinates vanish.  On a
stratum every partial derivative of a chain-sum form restricts to zero,
one or two monomials, so the singular locus there is a binomial system on
a torus, and torus solvability of binomial systems is a lattice question.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .autos import Signature, eigenspace_profile
from .forms import ChainSumForm, NonInjectiveChain
from .numtheory import factorize, integer_left_kernel, multiplication_orbits

MAX_VARS = 12


@dataclass(frozen=True)
class SupportPattern:
    S: tuple[int, ...]

    def __post_init__(self):
        if not self.S:
            raise ValueError("a support pattern must be nonempty")


@dataclass(frozen=True)
class BinomialSystem:
    """Equations ``prod_j x_j**A[i][j] = c[i]`` over nonzero complex numbers."""

    A: tuple[tuple[int, ...], ...]
    c: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.A) != len(self.c):
            raise ValueError("one constant per row")
        if any(x == 0 for x in self.c):
            raise ValueError("binomial constants must be nonzero")


@dataclass(frozen=True)
class SmoothnessResult:
    smooth: bool
    certificate: SupportPattern | None = None

    def __bool__(self) -> bool:
        return self.smooth


@dataclass(frozen=True)
class FilterViolation:
    residue: int
    image: int
    dim: int
    image_dim: int

    def __str__(self) -> str:
        return f"dim V({self.residue}) = {self.dim} > dim V({self.image}) = {self.image_dim}"


def binomial_solvable(system: BinomialSystem) -> bool:
    """Torus solvability of ``x^A = c``.

    The image of ``x -> x^A`` is cut out by the characters ``y^u`` with
    ``u A = 0``, so the system is solvable iff ``c^u = 1`` for a basis of
    that left kernel.
    """
    if not system.A:
        return True
    for u in integer_left_kernel(system.A):
        val = Fraction(1)
        for ui, ci in zip(u, system.c):
            val *= ci**ui
        if val != 1:
            return False
    return True


# A partial derivative is a list of (coeff, exponent dict) terms.
Term = tuple[Fraction, dict[int, int]]


def partials(form: ChainSumForm) -> list[list[Term]]:
    d = form.d
    f = form.f
    inv = {j: i for i, j in form.chain}
    out = []
    for k in range(form.nvars):
        terms: list[Term] = []
        if k in inv:
            i = inv[k]
            terms.append((form.coefficient(i), {i: d - 1}))
        if k in f:
            terms.append(((d - 1) * form.coefficient(k), {k: d - 2, f[k]: 1}))
        if k in form.fermat:
            terms.append((d * form.coefficient(k), {k: d - 1}))
        out.append([(c, {v: e for v, e in m.items() if e}) for c, m in terms])
    return out


def _stratum_system(derivs: list[list[Term]], S: tuple[int, ...]) -> BinomialSystem | None:
    """Binomial system for singular points supported exactly on ``S``,
    or None when some partial is a lone monomial there."""
    col = {v: i for i, v in enumerate(S)}
    rows, consts = [], []
    for terms in derivs:
        live = [(c, m) for c, m in terms if all(v in col for v in m)]
        if not live:
            continue
        if len(live) == 1:
            return None
        (ca, ma), (cb, mb) = live
        row = [0] * len(S)
        for v, e in ma.items():
            row[col[v]] += e
        for v, e in mb.items():
            row[col[v]] -= e
        rows.append(tuple(row))
        consts.append(-cb / ca)
    return BinomialSystem(tuple(rows), tuple(consts))


def singular_strata(form: ChainSumForm) -> list[SupportPattern]:
    derivs = partials(form)
    found = []
    for size in range(1, form.nvars + 1):
        for S in combinations(range(form.nvars), size):
            system = _stratum_system(derivs, S)
            if system is not None and binomial_solvable(system):
                found.append(SupportPattern(S))
    return found


def is_smooth_chain_sum(form: ChainSumForm) -> SmoothnessResult:
    """Decide smoothness of a chain-sum hypersurface in characteristic 0.

    By Euler's relation a common zero of all partials lies on the
    hypersurface, so only the gradient is examined.  A singular answer
    carries the lexicographically least singular support.
    """
    if not isinstance(form, ChainSumForm):
        raise TypeError("is_smooth_chain_sum needs a ChainSumForm")
    if len({j for _, j in form.chain}) != len(form.chain):
        raise NonInjectiveChain("chain map is not injective")
    if form.nvars > MAX_VARS:
        raise ValueError(f"at most {MAX_VARS} variables are supported")
    if form.d < 3:
        raise ValueError("degree must be at least 3")
    bad = singular_strata(form)
    if not bad:
        return SmoothnessResult(True)
    return SmoothnessResult(False, min(bad, key=lambda s: s.S))


def structural_singularity_filter(sig: Signature, d: int, c: int = 0) -> FilterViolation | None:
    """Eigenspace-orbit test for invariant hypersurfaces.

    Walk each orbit of multiplication by ``1-d`` on ``Z/q``; a smooth
    invariant hypersurface needs ``dim V(x) <= dim V((1-d)x)`` at every
    step.  Returns the first violation met, orbits taken in order of
    their least residue.  A violation proves every invariant member
    singular; no violation proves nothing.
    """
    fac = factorize(sig.q).factors
    if len(fac) != 1:
        raise ValueError(f"modulus {sig.q} is not a prime power")
    p = fac[0][0]
    if (d - 1) % p == 0:
        raise ValueError(f"p={p} divides d-1={d - 1}")
    if c % sig.q:
        raise ValueError("the filter applies to invariant forms (c = 0)")
    prof = eigenspace_profile(sig)
    a = (1 - d) % sig.q
    for orbit in multiplication_orbits(sig.q, a):
        for x in orbit:
            y = a * x % sig.q
            if prof.dim(x) > prof.dim(y):
                return FilterViolation(x, y, prof.dim(x), prof.dim(y))
    return None


def euler_identity_holds(form: ChainSumForm) -> bool:
    """Check ``d F = sum_k x_k dF/dx_k`` coefficientwise."""
    lhs: dict[tuple[int, ...], Fraction] = {}
    for coeff, e in form.terms:
        lhs[e] = form.d * coeff
    rhs: dict[tuple[int, ...], Fraction] = {}
    for k, terms in enumerate(partials(form)):
        for coeff, m in terms:
            e = [0] * form.nvars
            for v, x in m.items():
                e[v] += x
            e[k] += 1
            rhs[tuple(e)] = rhs.get(tuple(e), Fraction(0)) + coeff
    return {e: v for e, v in rhs.items() if v} == lhs
