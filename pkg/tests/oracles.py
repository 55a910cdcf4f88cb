"""Independent reference implementations used only by the tests.

Nothing here imports the package's arithmetic: orders come from repeated
multiplication, smoothness from sympy polynomial algebra, factorizations
from sympy.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from math import comb, gcd

import numpy as np
import sympy
from sympy.polys.matrices import DomainMatrix


def naive_order(a: int, m: int) -> int:
    x, k = a % m, 1
    while x != 1 % m:
        x = x * a % m
        k += 1
    return k


def naive_orders_many_moduli(a: int, moduli: np.ndarray) -> np.ndarray:
    """Order of ``a`` modulo each entry of ``moduli`` by stepping all of them
    in lockstep; entries must be coprime to ``a``."""
    base = np.mod(a, moduli)
    x = base.copy()
    order = np.zeros_like(moduli)
    k = 1
    live = np.ones(len(moduli), dtype=bool)
    while live.any():
        hit = live & (x % moduli == 1 % moduli)
        order[hit] = k
        live &= ~hit
        x = (x * base) % moduli
        k += 1
    return order


def naive_orders_all_units(m: int) -> dict[int, int]:
    units = np.array([a for a in range(1, m) if gcd(a, m) == 1] or [1], dtype=np.int64)
    mods = np.full(len(units), m, dtype=np.int64)
    x = units % m
    order = np.zeros_like(units)
    k = 1
    live = np.ones(len(units), dtype=bool)
    while live.any():
        hit = live & (x == 1 % m)
        order[hit] = k
        live &= ~hit
        x = (x * units) % mods
        k += 1
    return dict(zip(units.tolist(), order.tolist()))


# -- polynomials ---------------------------------------------------------


def to_sympy(form, gens):
    return sympy.Add(*[sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[g**e for g, e in zip(gens, exps)])
                      for c, exps in form.terms])


def binary_form_smooth(form) -> bool:
    """A binary form defines a smooth (reduced) subscheme of P^1 iff it is
    squarefree."""
    x, y = sympy.symbols("x y")
    F = sympy.Poly(to_sympy(form, (x, y)), x, y)
    if F.is_zero:
        return False
    _, factors = F.sqf_list()
    return all(mult == 1 for _, mult in factors)


def _monomials(deg: int, nvars: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations(range(deg + nvars - 1), nvars - 1):
        prev, parts = -1, []
        for c in combo:
            parts.append(c - prev - 1)
            prev = c
        parts.append(deg + nvars - 2 - prev)
        out.append(tuple(parts))
    return out


def ternary_partials_have_common_zero(form) -> bool:
    """Three forms of degree e in three variables share a projective zero
    iff multiplication into degree 3(e-1)+1 is not onto, i.e. the
    Macaulay matrix there has rank below the number of monomials."""
    gens = sympy.symbols("x0 x1 x2")
    F = to_sympy(form, gens)
    partials = [sympy.Poly(sympy.diff(F, g), *gens) for g in gens]
    # a vanishing partial means a cone; the other two still meet and the rank test sees it
    partials = [p for p in partials if not p.is_zero]
    e = form.d - 1
    target = 3 * (e - 1) + 1
    rows_idx = {m: i for i, m in enumerate(_monomials(target, 3))}
    cols = []
    for P in partials:
        for shift in _monomials(target - e, 3):
            col = [0] * len(rows_idx)
            for mon, coeff in P.terms():
                col[rows_idx[tuple(a + b for a, b in zip(mon, shift))]] = coeff
            cols.append(col)
    if not cols:
        return True
    M = DomainMatrix.from_Matrix(sympy.Matrix(cols)).convert_to(sympy.QQ)
    return M.rank() < len(rows_idx)


def chain_structures(N: int):
    """Every (chain, fermat) pair: an injective loop-free map on a subset C
    of the variables plus a subset of the remaining ones."""
    idx = range(N)
    for size in range(N + 1):
        for C in combinations(idx, size):
            for image in permutations(idx, size):
                if any(i == j for i, j in zip(C, image)):
                    continue
                rest = [j for j in idx if j not in C]
                for mask in product((0, 1), repeat=len(rest)):
                    D = frozenset(j for j, keep in zip(rest, mask) if keep)
                    if not C and not D:
                        continue
                    yield tuple(zip(C, image)), D


def sympy_factor(n: int) -> dict[int, int]:
    return dict(sympy.factorint(n))


def group_liftable_by_search(generators, cs, d: int) -> bool:
    """Try every choice of scalar shifts: a lifting exists iff some choice
    makes each generator invariant and the generated group meets the
    scalars trivially."""
    q, N = generators[0].q, generators[0].nvars
    choices = [[b for b in range(q) if (c + d * b) % q == 0] for c in cs]
    for shifts in product(*choices):
        gens = [tuple((x + b) % q for x in g.entries) for g, b in zip(generators, shifts)]
        group = {tuple([0] * N)}
        frontier = list(group)
        while frontier:
            v = frontier.pop()
            for g in gens:
                w = tuple((a + b) % q for a, b in zip(v, g))
                if w not in group:
                    group.add(w)
                    frontier.append(w)
        if all(len(set(v)) > 1 or v[0] == 0 for v in group):
            return True
    return False


def n_monomials(d: int, N: int) -> int:
    return comb(d + N - 1, N - 1)
