"""Exact integer and modular arithmetic.

Everything here works on Python ints, so values of any size are handled
exactly.  Factorization is trial division by the primes below 10**6
followed by Brent's variant of Pollard rho, with a Miller-Rabin test that
is deterministic below 3.3 * 10**24.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

TRIAL_LIMIT = 10**6

# Deterministic for n < 3317044064679887385961981 (first 13 primes).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("Factorization value must be positive")
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factor list {self.factors!r}")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors do not multiply to {self.value}")

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)


@dataclass(frozen=True)
class PrimePower:
    p: int
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"exponent must be >= 1, got {self.r}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def value(self) -> int:
        return self.p**self.r

    def __str__(self) -> str:
        return str(self.p) if self.r == 1 else f"{self.p}^{self.r}"


@dataclass(frozen=True)
class PadicSplit:
    base: int
    p: int
    k: int
    e: int


@lru_cache(maxsize=None)
def small_primes(limit: int = TRIAL_LIMIT) -> tuple[int, ...]:
    """Primes below ``limit`` by an Eratosthenes sieve."""
    if limit < 3:
        return ()
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit, i)))
    return tuple(i for i in range(limit) if sieve[i])


def is_prime(n: int) -> bool:
    """Strong-pseudoprime test to the first 13 prime bases.

    Exact for every n below 3.3 * 10**24, which covers all values this
    package produces at the dimensions it is meant for.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    dm = n - 1
    s = (dm & -dm).bit_length() - 1
    dm >>= s
    for a in _MR_BASES:
        x = pow(a, dm, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int, seed: int) -> int:
    # returns a nontrivial divisor of the odd composite n, or n on failure
    rng = random.Random(seed)
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g


def _split_large(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split_large(r, out)
        _split_large(r, out)
        return
    seed = 0
    while True:
        g = _brent(n, seed)
        if 1 < g < n:
            break
        seed += 1
    _split_large(g, out)
    _split_large(n // g, out)


def factorize(n: int) -> Factorization:
    """Prime factorization of a positive integer.

    >>> str(factorize(129))
    '3*43'
    """
    if n < 1:
        raise ValueError(f"factorize expects a positive integer, got {n}")
    out: dict[int, int] = {}
    m = n
    for p in small_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out[p] = e
    if m > 1:
        if m < TRIAL_LIMIT**2:
            out[m] = out.get(m, 0) + 1
        else:
            _split_large(m, out)
    return Factorization(n, tuple(sorted(out.items())))


def padic_split(m: int, p: int) -> PadicSplit:
    """Write ``m = p**k * e`` with ``p`` not dividing ``e``."""
    if m == 0:
        raise ValueError("padic_split is undefined for 0")
    k, e = 0, m
    while e % p == 0:
        e //= p
        k += 1
    return PadicSplit(m, p, k, e)


def valuation(m: int, p: int) -> int:
    return padic_split(m, p).k


def mult_order(a: int, m: int) -> int:
    """Multiplicative order of ``a`` modulo ``m``.

    Starts from Euler's totient and strips prime factors while the power
    stays 1, so only the factorizations of ``m`` and ``p - 1`` are needed.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    a %= m
    phi_factors: dict[int, int] = {}
    phi = 1
    for p, e in factorize(m).factors:
        phi *= (p - 1) * p ** (e - 1)
        if e > 1:
            phi_factors[p] = phi_factors.get(p, 0) + e - 1
        for q, f in factorize(p - 1).factors:
            phi_factors[q] = phi_factors.get(q, 0) + f
    order = phi
    for q in phi_factors:
        while order % q == 0 and pow(a, order // q, m) == 1:
            order //= q
    return order


def solve_linear_congruence(a: int, b: int, m: int) -> tuple[int, int] | None:
    """Solve ``a*x = b (mod m)``.

    Returns ``(x0, m // gcd(a, m))`` with ``x0`` the least nonnegative
    solution, or None when ``gcd(a, m)`` does not divide ``b``.
    """
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    g = math.gcd(a, m)
    if b % g:
        return None
    mod = m // g
    if mod == 1:
        return 0, 1
    x0 = (b // g) * pow(a // g, -1, mod) % mod
    return x0, mod


def multiplication_orbits(q: int, a: int) -> list[tuple[int, ...]]:
    """Orbits of ``x -> a*x`` on Z/q for a unit ``a``.

    Orbits are listed by their least element; each orbit starts there and
    follows the map.
    """
    if math.gcd(a, q) != 1:
        raise ValueError(f"{a} is not a unit modulo {q}")
    seen = [False] * q
    orbits = []
    for x in range(q):
        if seen[x]:
            continue
        orbit = []
        y = x
        while not seen[y]:
            seen[y] = True
            orbit.append(y)
            y = a * y % q
        orbits.append(tuple(orbit))
    return orbits


# -- integer matrices ---------------------------------------------------

Matrix = list[list[int]]


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _row_echelon(rows: Matrix, ncols: int, track: Matrix | None = None) -> int:
    """Integer row echelon form in place using unimodular row operations.

    ``track`` receives the same row operations.  Returns the rank.
    """
    m = len(rows)
    piv_row = 0
    for col in range(ncols):
        if piv_row == m:
            break
        while True:
            nz = [i for i in range(piv_row, m) if rows[i][col]]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(rows[i][col]))
            if best != piv_row:
                rows[piv_row], rows[best] = rows[best], rows[piv_row]
                if track is not None:
                    track[piv_row], track[best] = track[best], track[piv_row]
            pv = rows[piv_row][col]
            done = True
            for i in range(piv_row + 1, m):
                f = rows[i][col] // pv
                if f:
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[piv_row])]
                    if track is not None:
                        track[i] = [x - f * y for x, y in zip(track[i], track[piv_row])]
                if rows[i][col]:
                    done = False
            if done:
                break
        if any(rows[i][col] for i in range(piv_row, m)):
            piv_row += 1
    return piv_row


def _normalize_sign(v: Sequence[int]) -> tuple[int, ...]:
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def integer_left_kernel(A: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Basis of the lattice ``{u in Z^M : u A = 0}``.

    The rows of the unimodular transform that kill ``A`` during row
    reduction span the kernel; each vector has its first nonzero entry
    positive.
    """
    m = len(A)
    if m == 0:
        return []
    n = len(A[0])
    rows = [list(map(int, r)) for r in A]
    track = _identity(m)
    rank = _row_echelon(rows, n, track)
    return [_normalize_sign(track[i]) for i in range(rank, m)]


def rank(A: Sequence[Sequence[int]]) -> int:
    if not A:
        return 0
    rows = [list(map(int, r)) for r in A]
    return _row_echelon(rows, len(rows[0]))


def smith_normal_form(A: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """Smith normal form with transforms.

    Returns ``(D, U, V, Vinv)`` with ``U A V = D``, ``U`` and ``V``
    unimodular, ``Vinv`` the inverse of ``V`` and the diagonal of ``D``
    nonnegative with each entry dividing the next.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, r)) for r in A]
    U = _identity(m)
    V = _identity(n)
    Vi = _identity(n)

    def swap_cols(i, j):
        for R in D:
            R[i], R[j] = R[j], R[i]
        for R in V:
            R[i], R[j] = R[j], R[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_col(dst, src, f):
        # col_dst -= f * col_src
        for R in D:
            R[dst] -= f * R[src]
        for R in V:
            R[dst] -= f * R[src]
        Vi[src] = [x + f * y for x, y in zip(Vi[src], Vi[dst])]

    def add_row(dst, src, f):
        D[dst] = [x - f * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x - f * y for x, y in zip(U[dst], U[src])]

    t = 0
    while t < min(m, n):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, i0, j0 = min(nz)
        D[t], D[i0] = D[i0], D[t]
        U[t], U[i0] = U[i0], U[t]
        if j0 != t:
            swap_cols(t, j0)
        while True:
            clean = True
            pv = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, D[i][t] // pv)
                    if D[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, D[t][j] // pv)
                    if D[t][j]:
                        clean = False
            if clean:
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % pv),
                    None,
                )
                if bad is None:
                    break
                # fold the offending row into the pivot row to expose a smaller remainder
                add_row(t, bad[0], -1)
                continue
            nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]
                  and (i == t or j == t)]
            _, i0, j0 = min(nz)
            if i0 != t:
                D[t], D[i0] = D[i0], D[t]
                U[t], U[i0] = U[i0], U[t]
            if j0 != t:
                swap_cols(t, j0)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return D, U, V, Vi


def divisors_of(n: int) -> Iterator[int]:
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [x * p**k for x in divs for k in range(e + 1)]
    yield from sorted(divs)
