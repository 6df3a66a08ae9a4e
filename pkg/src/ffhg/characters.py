"""Multiplicative characters of F_p^x with exact values in Z[zeta_N].

A character is stored as ``(N, t)`` against the context generator:
``chi(g) = zeta_N^t``.  Evaluation goes through the discrete-log table,
and ``chi(0) = 0`` for every character, the trivial one included.

Character sums are computed by histogramming exponents: a sum of roots
of unity ``sum_x zeta_M^{e(x)}`` is exactly ``sum_k n_k zeta_M^k`` with
``n_k`` the number of ``x`` hitting exponent ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .cyclotomic import DEGREE, CycInt, check_conductor, lcm
from .cyclotomic import _POWER_MATRIX
from .errors import ConductorTooLarge, MissingRoot, OrderNotDividing
from .field import PrimeContext
from .hgvalue import HGValue


@dataclass(frozen=True, eq=False)
class MulChar:
    ctx: PrimeContext
    N: int
    t: int

    def __post_init__(self):
        if (self.ctx.p - 1) % self.N:
            raise OrderNotDividing(f"no character of order dividing {self.N} mod {self.ctx.p}")
        object.__setattr__(self, "t", self.t % self.N)

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def index(self) -> int:
        """``j`` with ``chi(g) = exp(2 pi i j / (p - 1))``."""
        return self.t * ((self.p - 1) // self.N) % (self.p - 1)

    @property
    def order(self) -> int:
        return self.N // gcd(self.N, self.t)

    def is_trivial(self) -> bool:
        return self.t == 0

    def reduced(self) -> MulChar:
        """Same character written over its exact order."""
        d = gcd(self.N, self.t)
        return MulChar(self.ctx, self.N // d, self.t // d)

    def exponent(self, x: int) -> int | None:
        """``k`` with ``chi(x) = zeta_N^k``, or None when ``x = 0``."""
        x %= self.p
        if x == 0:
            return None
        return self.t * int(self.ctx.dlog_table[x]) % self.N

    def value(self, x: int) -> CycInt:
        check_conductor(self.N)
        k = self.exponent(x)
        if k is None:
            return CycInt.from_int(0, self.N)
        return CycInt.zeta(self.N, k)

    __call__ = value

    def complex_value(self, x: int) -> complex:
        k = self.exponent(x)
        if k is None:
            return 0j
        return complex(np.exp(2j * np.pi * k / self.N))

    def exponents(self, xs, M: int | None = None) -> np.ndarray:
        """Vectorized exponents scaled to zeta_M (M a multiple of N); -1 marks ``x = 0``."""
        M = self.N if M is None else M
        if M % self.N:
            raise ValueError(f"zeta_{self.N} powers do not scale to zeta_{M}")
        d = self.ctx.dlog_table[np.asarray(xs) % self.p]
        out = (d * self.t) % self.N * (M // self.N)
        return np.where(d < 0, -1, out)

    def __mul__(self, other: MulChar) -> MulChar:
        if other.ctx is not self.ctx and other.p != self.p:
            raise ValueError("characters over different primes")
        M = lcm(self.N, other.N)
        return MulChar(self.ctx, M, self.t * (M // self.N) + other.t * (M // other.N))

    def __pow__(self, k: int) -> MulChar:
        return MulChar(self.ctx, self.N, self.t * k)

    def conj(self) -> MulChar:
        return MulChar(self.ctx, self.N, -self.t)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MulChar):
            return NotImplemented
        return self.p == other.p and self.index == other.index

    def __hash__(self) -> int:
        return hash((self.p, self.index))

    def __repr__(self) -> str:
        return f"MulChar(p={self.p}, N={self.N}, t={self.t})"


def trivial(ctx: PrimeContext) -> MulChar:
    return MulChar(ctx, 1, 0)


def quadratic(ctx: PrimeContext) -> MulChar:
    return MulChar(ctx, 2, 1)


def char_from_ideal(ctx: PrimeContext, N: int) -> MulChar:
    """The order-N character with ``psi(x) = x^((p-1)/N)`` modulo ``(p, zeta_N - r_N)``."""
    if N == 1:
        return trivial(ctx)
    if N not in ctx.roots:
        raise MissingRoot(f"r_{N} not stored for p={ctx.p}")
    p = ctx.p
    # r_N = g^(u (p-1)/N); psi(g) = zeta^t with r_N^t = g^((p-1)/N), so t = u^-1 mod N
    u = int(ctx.dlog_table[ctx.roots[N]]) // ((p - 1) // N)
    return MulChar(ctx, N, pow(u, -1, N))


def all_characters(ctx: PrimeContext, N: int) -> list[MulChar]:
    """Every character whose order divides N, ``chi(g) = zeta_N^t`` for t = 0..N-1."""
    return [MulChar(ctx, N, t) for t in range(N)]


# summation kernels ------------------------------------------------------

def exponent_counts(M: int, *exps: np.ndarray) -> np.ndarray:
    """Histogram of ``sum(exps) mod M`` over the trailing axis, skipping any -1 entry.

    Inputs broadcast together; the result has the broadcast shape with the
    last axis replaced by M bins.
    """
    arrs = np.broadcast_arrays(*exps)
    valid = np.ones(arrs[0].shape, dtype=bool)
    total = np.zeros(arrs[0].shape, dtype=np.int64)
    for a in arrs:
        valid &= a >= 0
        total += a
    total %= M
    lead = total.shape[:-1]
    rows = int(np.prod(lead)) if lead else 1
    flat = total.reshape(rows, -1)
    offs = (np.arange(rows, dtype=np.int64) * M)[:, None]
    idx = (flat + offs)[valid.reshape(rows, -1)]
    counts = np.bincount(idx, minlength=rows * M).reshape(lead + (M,))
    return counts


def counts_to_cyc(M: int, counts: np.ndarray) -> CycInt | list[CycInt]:
    """Exact element(s) from exponent histograms (last axis of length M)."""
    check_conductor(M)
    coords = counts @ _POWER_MATRIX[M]
    if coords.ndim == 1:
        return CycInt(M, coords.tolist())
    return [CycInt(M, row) for row in coords.reshape(-1, DEGREE[M]).tolist()]


def exact_conductor(*chars: MulChar) -> int:
    M = 1
    for c in chars:
        M = lcm(M, c.N)
    try:
        return check_conductor(M)
    except ConductorTooLarge:
        raise ConductorTooLarge(
            f"character values need zeta_{M}; exact mode supports conductors dividing 24"
        ) from None


def jacobi_sum(A: MulChar, B: MulChar) -> CycInt:
    """``J(A, B) = sum_x A(x) B(1 - x)`` with ``chi(0) = 0``."""
    M = exact_conductor(A, B)
    xs = np.arange(A.p)
    counts = exponent_counts(M, A.exponents(xs, M), B.exponents(1 - xs, M))
    return counts_to_cyc(M, counts)


def greene_binomial(A: MulChar, B: MulChar) -> HGValue:
    """Greene's binomial ``B(-1) J(A, conj(B)) / p``."""
    J = jacobi_sum(A, B.conj())
    return HGValue(J * B.value(-1), A.p, 1)
