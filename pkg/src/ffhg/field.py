"""Prime-field contexts: generator, discrete-log table, roots of unity.

A :class:`PrimeContext` fixes everything downstream code needs to turn
field elements into exact character values: the smallest primitive root
``g``, a full discrete-log table, and for each requested order ``N`` a
root ``r_N`` of the cyclotomic polynomial mod ``p``.  The root pins the
prime ideal ``(p, zeta_N - r_N)`` above ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping

import numpy as np
from sympy import isprime, primefactors

from .errors import MissingRoot, NotPrime, OrderNotDividing, ZeroArgument

# order of the root each derived subfield generator is built from
_DERIVED_SOURCES = {
    "sqrt-2": (8,),
    "i": (12, 4),
    "sqrt-3": (12, 6, 3),
}


@dataclass(frozen=True, eq=False)
class PrimeContext:
    p: int
    g: int
    dlog_table: np.ndarray = field(repr=False)
    roots: Mapping[int, int]

    def __post_init__(self):
        self.dlog_table.setflags(write=False)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(sorted(self.roots))

    def dlog(self, x: int) -> int:
        return dlog(self, x)

    def power_table(self) -> np.ndarray:
        """``g**k mod p`` for ``k in range(p - 1)``."""
        out = np.empty(self.p - 1, dtype=np.int64)
        out[self.dlog_table[1:]] = np.arange(1, self.p)
        return out

    def with_root(self, N: int, r: int) -> "PrimeContext":
        """Copy of this context with ``r_N`` overridden (a Galois-conjugate ideal)."""
        r %= self.p
        if N not in self.roots:
            raise MissingRoot(f"order {N} not stored for p={self.p}")
        if _order(r, self.p) != N:
            raise OrderNotDividing(f"{r} does not have order {N} mod {self.p}")
        roots = dict(self.roots)
        roots[N] = r
        return PrimeContext(self.p, self.g, self.dlog_table, roots)


def _order(x: int, p: int) -> int:
    x %= p
    if x == 0:
        return 0
    n = p - 1
    for ell in primefactors(n):
        while n % ell == 0 and pow(x, n // ell, p) == 1:
            n //= ell
    return n


def primitive_root(p: int) -> int:
    """Smallest generator of F_p^x."""
    factors = primefactors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // ell, p) != 1 for ell in factors):
            return g
    return 1  # p == 2


def make_prime_context(p: int, orders: Iterable[int] = ()) -> PrimeContext:
    if p < 3 or not isprime(p):
        raise NotPrime(f"{p} is not an odd prime")
    orders = set(orders)
    bad = sorted(N for N in orders if N < 1 or (p - 1) % N)
    if bad:
        raise OrderNotDividing(f"orders {bad} do not divide p-1={p - 1}")

    g = primitive_root(p)
    powers = np.empty(p - 1, dtype=np.int64)
    acc = 1
    for k in range(p - 1):
        powers[k] = acc
        acc = acc * g % p
    table = np.full(p, -1, dtype=np.int64)
    table[powers] = np.arange(p - 1)

    roots = {}
    for N in sorted(orders):
        # elements of exact order N are g^(k(p-1)/N) with gcd(k, N) = 1
        step = (p - 1) // N
        roots[N] = min(int(powers[k * step]) for k in range(N) if gcd(k, N) == 1)
    return PrimeContext(p, g, table, roots)


def admissible_orders(p: int, candidates: Iterable[int] = (1, 2, 3, 4, 6, 8, 12, 24)) -> set[int]:
    return {N for N in candidates if (p - 1) % N == 0}


def dlog(ctx: PrimeContext, x: int) -> int:
    x %= ctx.p
    if x == 0:
        raise ZeroArgument("discrete log of 0")
    return int(ctx.dlog_table[x])


def quadratic_character(ctx: PrimeContext, x: int) -> int:
    x %= ctx.p
    if x == 0:
        return 0
    return 1 if ctx.dlog_table[x] % 2 == 0 else -1


def derived_root(ctx: PrimeContext, target: str) -> int:
    """Residue of a quadratic subfield generator under ``zeta_N -> r_N``.

    ``target`` is one of ``"sqrt-2"``, ``"i"``, ``"sqrt-3"``.  The result
    squares to -2, -1, -3 mod p respectively.  ``"i"`` and ``"sqrt-3"``
    prefer ``r_12`` so that the ideal below a chosen prime of Z[zeta_12]
    is the one described.
    """
    try:
        sources = _DERIVED_SOURCES[target]
    except KeyError:
        raise ValueError(f"unknown target {target!r}") from None
    p = ctx.p
    for N in sources:
        if N not in ctx.roots:
            continue
        r = ctx.roots[N]
        if target == "sqrt-2":
            return (r + pow(r, 3, p)) % p
        if target == "i":
            return pow(r, 3, p) if N == 12 else r
        # sqrt(-3) = 2*zeta_6 - 1 = 2*zeta_3 + 1, zeta_6 = zeta_12^2
        if N == 12:
            return (2 * r * r - 1) % p
        if N == 6:
            return (2 * r - 1) % p
        return (2 * r + 1) % p  # zeta_3: sqrt(-3) = 2*zeta_3 + 1
    raise MissingRoot(f"no stored root among orders {sources} for {target} at p={p}")
