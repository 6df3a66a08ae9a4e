"""Character sums F_eta, S_eta' and Greene's hypergeometric functions over F_p.

Every exact routine has a ``*_table`` twin that evaluates all arguments
``z`` of a prime at once; the scalar versions are thin wrappers.  The
floating-point oracle follows the all-characters definition and shares
no code path with the exact sums.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .characters import (
    MulChar,
    counts_to_cyc,
    exact_conductor,
    exponent_counts,
    quadratic,
)
from .cyclotomic import CycInt, lcm
from .errors import OddOrder
from .field import PrimeContext
from .hgvalue import HGValue, common_conductor, render

__all__ = [
    "HGValue",
    "render",
    "common_conductor",
    "f_eta",
    "f_eta_table",
    "s_eta",
    "s_eta_table",
    "hg2f1",
    "hg2f1_table",
    "hg_n1fn",
    "hg_n1fn_table",
    "hg2f1_float_oracle",
    "hg_float_oracle",
]

# rows of the (z, x) exponent grid processed per numpy pass
_CHUNK = 256


def _zs(ctx: PrimeContext, zs) -> np.ndarray:
    if zs is None:
        return np.arange(ctx.p, dtype=np.int64)
    return np.atleast_1d(np.asarray(zs, dtype=np.int64)) % ctx.p


def _grid_counts(M: int, zs: np.ndarray, build) -> np.ndarray:
    """Exponent histograms, one row per z; ``build(z_column)`` returns exponent arrays."""
    parts = []
    for start in range(0, len(zs), _CHUNK):
        zcol = zs[start : start + _CHUNK, None]
        counts = exponent_counts(M, *build(zcol))
        parts.append(np.broadcast_to(counts, (len(zcol), M)) if counts.ndim == 1 else counts)
    if not parts:
        return np.zeros((0, M), dtype=np.int64)
    return np.concatenate(parts)


def f_eta_table(ctx: PrimeContext, eta: MulChar, zs=None) -> list[CycInt]:
    """``F_eta(z) = sum_x eta(x) (phi conj(eta))(x-1) (phi conj(eta))(x-z)`` for each z."""
    phb = quadratic(ctx) * eta.conj()
    M = exact_conductor(eta, phb)
    xs = np.arange(ctx.p, dtype=np.int64)
    head = eta.exponents(xs, M)[None, :]
    mid = phb.exponents(xs - 1, M)[None, :]
    counts = _grid_counts(M, _zs(ctx, zs), lambda z: (head, mid, phb.exponents(xs - z, M)))
    return counts_to_cyc(M, counts)


def f_eta(ctx: PrimeContext, eta: MulChar, z: int) -> CycInt:
    return f_eta_table(ctx, eta, [z])[0]


def s_eta_table(
    ctx: PrimeContext, eta: MulChar, zs=None, x_power: int | None = None
) -> list[CycInt]:
    """``S(z) = sum_x eta(x^e (x-1)(x-z))`` with ``e = order/2 - 1`` by default.

    ``x_power`` overrides ``e``; the superelliptic point counts need this
    for powers of a character whose order is smaller than the curve's.
    """
    if x_power is None:
        N = eta.order
        if N % 2:
            raise OddOrder(f"S-sum needs a character of even order, got order {N}")
        x_power = N // 2 - 1
    M = exact_conductor(eta)
    xs = np.arange(ctx.p, dtype=np.int64)
    ex = eta.exponents(xs, M)
    if x_power == 0:
        head = np.zeros_like(ex)  # x^0 = 1, also at x = 0
    else:
        head = np.where(ex < 0, -1, ex * x_power % M)
    fixed = head[None, :], eta.exponents(xs - 1, M)[None, :]
    counts = _grid_counts(M, _zs(ctx, zs), lambda z: fixed + (eta.exponents(xs - z, M),))
    return counts_to_cyc(M, counts)


def s_eta(ctx: PrimeContext, eta: MulChar, z: int, x_power: int | None = None) -> CycInt:
    return s_eta_table(ctx, eta, [z], x_power)[0]


def hg2f1_table(ctx: PrimeContext, A: MulChar, B: MulChar, C: MulChar, zs=None) -> list[HGValue]:
    """``2F1(A, B; C | z)`` for each z, as exact values over p."""
    p = ctx.p
    CBb = C * B.conj()
    Ab = A.conj()
    M = exact_conductor(A, B, C)
    xs = np.arange(p, dtype=np.int64)
    head = B.exponents(xs, M)[None, :]
    mid = CBb.exponents(1 - xs, M)[None, :]
    zarr = _zs(ctx, zs)
    counts = _grid_counts(M, zarr, lambda z: (head, mid, Ab.exponents(1 - z * xs, M)))
    sign = CycInt.zeta(M, (B * C).exponents(np.array([-1]), M)[0])
    out = []
    for z, num in zip(zarr.tolist(), counts_to_cyc(M, counts)):
        if z == 0:
            out.append(HGValue.zero(p, M))
        else:
            out.append(HGValue(num * sign, p, 1))
    return out


def hg2f1(ctx: PrimeContext, A: MulChar, B: MulChar, C: MulChar, z: int) -> HGValue:
    return hg2f1_table(ctx, A, B, C, [z])[0]


def hg_n1fn_table(
    ctx: PrimeContext, As: Sequence[MulChar], Bs: Sequence[MulChar], zs=None
) -> list[HGValue]:
    """``{n+1}F_n(A_0..A_n; B_1..B_n | z)`` by the inductive definition.

    Each induction step carries the factor ``A_n B_n(-1) / p`` in front of
    ``sum_y A_n(y) (B_n conj(A_n))(1-y) nF_{n-1}(...| zy)``.
    """
    n = len(Bs)
    if n < 1 or len(As) != n + 1:
        raise ValueError("need n+1 numerator and n denominator characters, n >= 1")
    p = ctx.p
    zarr = _zs(ctx, zs)
    if n == 1:
        return hg2f1_table(ctx, As[0], As[1], Bs[0], zarr)

    inner = hg_n1fn_table(ctx, As[:-1], Bs[:-1])  # every argument zy is needed
    An, Bn = As[-1], Bs[-1]
    M = lcm(exact_conductor(An, Bn), common_conductor(*inner))
    d = len(CycInt.zeta(M).coeffs)
    # numerators over the common denominator p^(n-1)
    V = np.array(
        [v.num.embed(M).coeffs for v in inner], dtype=object
    ) * np.array([p ** (n - 1 - v.pexp) for v in inner], dtype=object)[:, None]

    ys = np.arange(p, dtype=np.int64)
    w1 = An.exponents(ys, M)
    w2 = (Bn * An.conj()).exponents(1 - ys, M)
    valid = (w1 >= 0) & (w2 >= 0)
    w = ((w1 + w2) % M)[valid]
    ys = ys[valid]
    shifts = (w[:, None] + np.arange(d)[None, :]) % M
    sign = CycInt.zeta(M, (An * Bn).exponents(np.array([-1]), M)[0])

    out = []
    for z in zarr.tolist():
        hist = np.zeros(M, dtype=object)
        np.add.at(hist, shifts.ravel(), V[(z * ys) % p].ravel())
        num = CycInt.from_exponent_counts(M, hist) * sign
        out.append(HGValue(num, p, n))
    return out


def hg_n1fn(ctx: PrimeContext, As: Sequence[MulChar], Bs: Sequence[MulChar], z: int) -> HGValue:
    return hg_n1fn_table(ctx, As, Bs, [z])[0]


# floating-point oracle --------------------------------------------------

def _float_jacobi(ctx: PrimeContext, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Complex ``J(chi_a, chi_b)`` for index arrays a, b (chi_j(g) = e^(2 pi i j/(p-1)))."""
    p = ctx.p
    xs = np.arange(2, p)  # terms at x = 0, 1 vanish
    d1 = ctx.dlog_table[xs]
    d2 = ctx.dlog_table[(1 - xs) % p]
    phase = np.outer(a, d1) + np.outer(b, d2)
    return np.exp(2j * np.pi * (phase % (p - 1)) / (p - 1)).sum(axis=1)


def _float_binomial(ctx: PrimeContext, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Greene binomial ``(chi_a over chi_b) = chi_b(-1) J(chi_a, conj chi_b) / p``."""
    p = ctx.p
    sign = np.where(b % 2 == 0, 1.0, -1.0)  # chi_b(-1), dlog(-1) = (p-1)/2
    return sign * _float_jacobi(ctx, a % (p - 1), (-b) % (p - 1)) / p


def hg_float_oracle(
    ctx: PrimeContext, As: Sequence[MulChar], Bs: Sequence[MulChar], z: int
) -> complex:
    """Greene's all-characters sum, in complex floating point."""
    p = ctx.p
    z %= p
    if z == 0:
        return 0j
    js = np.arange(p - 1)
    terms = _float_binomial(ctx, As[0].index + js, js)
    for A, B in zip(As[1:], Bs):
        terms = terms * _float_binomial(ctx, A.index + js, B.index + js)
    chi_z = np.exp(2j * np.pi * (js * int(ctx.dlog_table[z]) % (p - 1)) / (p - 1))
    return complex(p / (p - 1) * (terms * chi_z).sum())


def hg2f1_float_oracle(ctx: PrimeContext, A: MulChar, B: MulChar, C: MulChar, z: int) -> complex:
    return hg_float_oracle(ctx, [A, B], [C], z)
