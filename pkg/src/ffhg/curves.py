"""Point counts over F_p for the elliptic, C_{N,a,c} and D_{N,c,d} families.

Brute force is the reference path.  ``#{y : y^M = v}`` comes from the
discrete-log table: it is 1 for ``v = 0`` and otherwise ``gcd(M, p-1)``
or 0 depending on whether ``dlog(v)`` is divisible by that gcd.
The conventions at infinity and at singular points follow the
character-sum identities being checked, not smooth projective models.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

from .characters import MulChar, counts_to_cyc, exponent_counts, jacobi_sum, quadratic
from .cyclotomic import CycInt
from .errors import BadParams, NoSquareRoot, SingularCurve
from .field import PrimeContext, quadratic_character
from .hypergeometric import s_eta_table


@dataclass(frozen=True)
class CurveSpec:
    """A member of one of the curve families.

    family is ``"E"`` (``c y^2 = x^3 + alpha x^2 + beta x + gamma``, with
    ``coeffs = (alpha, beta, gamma)``), ``"C"`` (``C_{N,a,c}``) or ``"D"``
    (``D_{N,c,d}: c y^2 = x^(N/2+1) + c d x``).
    """

    family: str
    N: int = 2
    a: int = 0
    c: int = 1
    d: int = 0
    coeffs: tuple[int, int, int] = (0, 0, 0)

    def label(self) -> str:
        if self.family == "E":
            al, be, ga = self.coeffs
            return f"E:{self.c}y^2=x^3{al:+d}x^2{be:+d}x{ga:+d}"
        if self.family == "C":
            return f"C[N={self.N},a={self.a},c={self.c}]"
        return f"D[N={self.N},c={self.c},d={self.d}]"


@dataclass(frozen=True)
class TraceRecord:
    p: int
    curve: CurveSpec
    count: int
    trace: int = field(default=0)


def weierstrass(alpha: int, beta: int, gamma: int, c: int = 1) -> CurveSpec:
    return CurveSpec("E", c=c, coeffs=(alpha, beta, gamma))


def root_counts(ctx: PrimeContext, M: int, values) -> np.ndarray:
    """``#{y in F_p : y^M = v}`` for each v."""
    p = ctx.p
    v = np.asarray(values, dtype=np.int64) % p
    k = math.gcd(M, p - 1)
    d = ctx.dlog_table[v]
    return np.where(v == 0, 1, np.where(d % k == 0, k, 0))


def powmod(xs, e: int, p: int) -> np.ndarray:
    """Elementwise ``xs**e mod p`` (p below 3e9 so products fit in int64)."""
    base = np.asarray(xs, dtype=np.int64) % p
    out = np.ones_like(base)
    while e:
        if e & 1:
            out = out * base % p
        base = base * base % p
        e >>= 1
    return out


def _poly_values(ctx: PrimeContext, coeffs_low_first, xs) -> np.ndarray:
    p = ctx.p
    acc = np.zeros_like(xs)
    for c in reversed(coeffs_low_first):
        acc = (acc * xs + c) % p
    return acc


def count_elliptic(ctx: PrimeContext, spec: CurveSpec) -> TraceRecord:
    """Affine points of ``c y^2 = f(x)`` plus the point at infinity."""
    if spec.family != "E":
        raise BadParams(f"not a Weierstrass curve: {spec.label()}")
    p = ctx.p
    al, be, ga = (x % p for x in spec.coeffs)
    c = spec.c % p
    if c == 0:
        raise BadParams("c must be nonzero mod p")
    # discriminant of the cubic x^3 + al x^2 + be x + ga
    disc = (al * al * be * be - 4 * be**3 - 4 * al**3 * ga - 27 * ga * ga + 18 * al * be * ga) % p
    if disc == 0:
        raise SingularCurve(f"{spec.label()} is singular mod {p}")
    xs = np.arange(p, dtype=np.int64)
    f = _poly_values(ctx, (ga, be, al, 1), xs)
    # c y^2 = f  <=>  y^2 = f / c
    rhs = f * pow(c, -1, p) % p
    count = 1 + int(root_counts(ctx, 2, rhs).sum())
    trace = p + 1 - count
    if trace * trace > 4 * p:
        raise AssertionError(f"Hasse bound violated: a_p={trace} at p={p}")
    return TraceRecord(p, spec, count, trace)


def _check_D(ctx: PrimeContext, N: int, c: int, d: int) -> None:
    p = ctx.p
    if N % 2 or N < 2 or (p - 1) % N:
        raise BadParams(f"D-family needs even N dividing p-1, got N={N}, p={p}")
    if c % p == 0 or d % p == 0:
        raise BadParams("c and d must be nonzero mod p")


def count_D(ctx: PrimeContext, N: int, c: int, d: int) -> TraceRecord:
    """``#D_{N,c,d}``: affine points plus 1 (N = 0 mod 4) or 1 + phi(c) (N = 2 mod 4) at infinity."""
    _check_D(ctx, N, c, d)
    p = ctx.p
    c %= p
    d %= p
    xs = np.arange(p, dtype=np.int64)
    f = (powmod(xs, N // 2 + 1, p) + c * d % p * xs) % p
    affine = int(root_counts(ctx, 2, f * pow(c, -1, p) % p).sum())
    infinity = 1 if N % 4 == 0 else 1 + quadratic_character(ctx, c)
    spec = CurveSpec("D", N=N, c=c, d=d)
    count = affine + infinity
    return TraceRecord(p, spec, count, p + 1 - count)


def jacobi_formula_D(ctx: PrimeContext, N: int, c: int, d: int) -> int:
    """``#D_{N,c,d}`` from Jacobi sums over the characters with psi^N = 1, psi^(N/2) != 1."""
    _check_D(ctx, N, c, d)
    phi = quadratic(ctx)
    total = CycInt.from_int(0, 1)
    for t in range(N):
        psi = MulChar(ctx, N, t)
        if (psi ** (N // 2)).is_trivial():
            continue
        total = total + psi.value(-c * d) * jacobi_sum(phi, psi)
    s = total.to_int() * quadratic_character(ctx, d)
    base = ctx.p + 1 + s
    if N % 4 == 2:
        base += quadratic_character(ctx, c)
    return base


def _check_C(ctx: PrimeContext, N: int, a: int, c: int) -> None:
    p = ctx.p
    if N not in (3, 4, 6, 8, 12):
        raise BadParams(f"C-family is defined here for N in 3, 4, 6, 8, 12; got {N}")
    M = N if N % 2 == 0 else 2 * N
    if (p - 1) % M:
        raise BadParams(f"y^{M} needs {M} | p-1, p={p}")
    if a % p in (0, 1):
        raise BadParams("a must be different from 0 and 1 mod p")
    if c % p == 0:
        raise BadParams("c must be nonzero mod p")


def c_family_polynomial(ctx: PrimeContext, N: int, a: int, xs) -> np.ndarray:
    """Right-hand side of C_{N,a,c} without the factor c."""
    p = ctx.p
    xs = np.asarray(xs, dtype=np.int64) % p
    if N % 2 == 0:
        e = N // 2 - 1
        return powmod(xs, e, p) * ((xs - 1) % p) % p * ((xs - a) % p) % p
    return xs * powmod(xs - 1, N - 1, p) % p * powmod(xs - a, N - 1, p) % p


def c_boundary(ctx: PrimeContext, N: int, c: int) -> int:
    """Points added for infinity and the resolved singularity at (0, 0).

    For N = 2 mod 4 both places resolve to ``1 + phi(c)`` points; the
    affine count already has (0, 0) once, so the correction is
    ``1 + 2 phi(c)``.  Otherwise a single point at infinity.
    """
    if N % 2 == 0 and N % 4 == 2:
        return 1 + 2 * quadratic_character(ctx, c)
    return 1


def count_C_affine(ctx: PrimeContext, N: int, a: int, c: int) -> int:
    _check_C(ctx, N, a, c)
    p = ctx.p
    M = N if N % 2 == 0 else 2 * N
    f = c_family_polynomial(ctx, N, a, np.arange(p)) * (c % p) % p
    return int(root_counts(ctx, M, f).sum())


def count_C(ctx: PrimeContext, N: int, a: int, c: int) -> int:
    return count_C_affine(ctx, N, a, c) + c_boundary(ctx, N, c)


def count_C_by_characters(ctx: PrimeContext, N: int, a: int, c: int) -> CycInt:
    """The same count written as ``p + boundary + sum_k omega^k(c) S_k(a)``.

    ``omega`` runs over the characters of order dividing the exponent of y
    and ``S_k`` is the character sum of ``omega^k`` against the curve's
    polynomial.  For even N the sums are S-sums with the curve's power of x.
    """
    _check_C(ctx, N, a, c)
    p = ctx.p
    M = N if N % 2 == 0 else 2 * N
    total = CycInt.from_int(p + c_boundary(ctx, N, c), M)
    xs = np.arange(p)
    fx = c_family_polynomial(ctx, N, a, xs)
    for k in range(1, M):
        omega = MulChar(ctx, M, k)
        if N % 2 == 0:
            S = s_eta_table(ctx, omega, [a], x_power=N // 2 - 1)[0]
        else:
            S = counts_to_cyc(M, exponent_counts(M, omega.exponents(fx, M)))
        total = total + omega.value(c) * S
    return total


def morphism_check(ctx: PrimeContext, N: int, a: int, c: int, sample: int | None = None,
                   seed: int = 0) -> bool:
    """Check that the quotient map sends points of C_{N,a,c} onto its target curve.

    Even N: ``(x, y) -> (y^2/x, y(x+b)/x)`` into ``c Y^2 = X^(N/2+1) + c(1+b)^2 X``.
    Odd N: ``(x, y) -> ((x-1)(x-a)/y^2, (x+b)(x-1)^k (x-a)^k / y^N)``, k = (N-1)/2,
    into ``c Y^2 = c X^N + (1+b)^2``.  Both square roots b of a are tried.
    """
    p = ctx.p
    a %= p
    c %= p
    if quadratic_character(ctx, a) != 1:
        raise NoSquareRoot(f"{a} is not a square mod {p}")
    _check_C(ctx, N, a, c)
    M = N if N % 2 == 0 else 2 * N
    b0 = next(b for b in range(1, p) if b * b % p == a)
    f = c_family_polynomial(ctx, N, a, np.arange(p)) * c % p
    points = []
    for x in range(p):
        for y in range(p):
            if pow(y, M, p) == f[x]:
                points.append((x, y))
    if sample is not None and sample < len(points):
        points = random.Random(seed).sample(points, sample)
    for b in (b0, p - b0):
        for x, y in points:
            if N % 2 == 0:
                if x == 0:
                    continue
                xi = pow(x, -1, p)
                X = y * y * xi % p
                Y = y * (x + b) * xi % p
                lhs = c * Y * Y % p
                rhs = (pow(X, N // 2 + 1, p) + c * (1 + b) ** 2 * X) % p
            else:
                if y == 0:
                    continue
                k = (N - 1) // 2
                yi = pow(y, -1, p)
                X = (x - 1) * (x - a) * yi * yi % p
                Y = (x + b) * pow(x - 1, k, p) * pow(x - a, k, p) * pow(yi, N, p) % p
                lhs = c * Y * Y % p
                rhs = (c * pow(X, N, p) + (1 + b) ** 2) % p
            if lhs != rhs:
                return False
    return True


def random_nonzero_pairs(p: int, n: int, seed: int) -> list[tuple[int, int]]:
    rng = random.Random(seed * 1_000_003 + p)
    return [(rng.randrange(1, p), rng.randrange(1, p)) for _ in range(n)]


# the four CM curves paired with the Hecke characters
CM_CURVES = {
    "zi": weierstrass(0, -1, 0),  # y^2 = x^3 - x
    "z2": weierstrass(4, 2, 0),  # y^2 = x^3 + 4x^2 + 2x
    "z6": weierstrass(0, 0, 1),  # y^2 = x^3 + 1
    "zi_twisted": weierstrass(0, -3, 0),  # y^2 = x^3 - 3x
}


def cm_trace(ctx: PrimeContext, tag: str) -> int:
    return count_elliptic(ctx, CM_CURVES[tag]).trace


__all__ = [
    "CurveSpec",
    "TraceRecord",
    "weierstrass",
    "root_counts",
    "count_elliptic",
    "count_D",
    "jacobi_formula_D",
    "count_C",
    "count_C_affine",
    "count_C_by_characters",
    "c_boundary",
    "morphism_check",
    "CM_CURVES",
    "cm_trace",
]
