"""Hecke characters of the CM curves y^2 = x^3 - x, x^3 + 4x^2 + 2x, x^3 + 1, x^3 - 3x.

Values live in Z[i], Z[sqrt(-2)] or Z[zeta_6] (:class:`QuadInt`).  Each
evaluator first picks the generator of the prime ideal matching the
context's chosen root (so the character and the Jacobi sums refer to the
same ideal), then fixes the unit by the congruence normalization of the
curve, and finally checks ``chi + conj(chi) = a_p`` against a brute-force
point count.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from sympy.ntheory import sqrt_mod

from .curves import cm_trace
from .cyclotomic import CycInt
from .errors import CongruenceViolation, MissingRoot, NormalizationMismatch, NotRepresentable
from .field import PrimeContext, derived_root

RINGS = {-1: "Z[i]", -2: "Z[sqrt-2]", -3: "Z[zeta6]"}


@dataclass(frozen=True)
class QuadInt:
    """``x + y*w`` with w = i (D=-1), sqrt(-2) (D=-2) or zeta_6 (D=-3)."""

    D: int
    x: int
    y: int

    def __post_init__(self):
        if self.D not in RINGS:
            raise ValueError(f"unsupported ring D={self.D}")

    def _same(self, other: QuadInt) -> None:
        if other.D != self.D:
            raise ValueError(f"ring mismatch {RINGS[self.D]} vs {RINGS[other.D]}")

    def norm(self) -> int:
        x, y = self.x, self.y
        if self.D == -1:
            return x * x + y * y
        if self.D == -2:
            return x * x + 2 * y * y
        return x * x + x * y + y * y

    def trace(self) -> int:
        return 2 * self.x + (self.y if self.D == -3 else 0)

    def conj(self) -> QuadInt:
        if self.D == -3:
            # conj(zeta6) = 1 - zeta6
            return QuadInt(-3, self.x + self.y, -self.y)
        return QuadInt(self.D, self.x, -self.y)

    def __add__(self, other: QuadInt) -> QuadInt:
        self._same(other)
        return QuadInt(self.D, self.x + other.x, self.y + other.y)

    def __neg__(self) -> QuadInt:
        return QuadInt(self.D, -self.x, -self.y)

    def __sub__(self, other: QuadInt) -> QuadInt:
        return self + (-other)

    def __mul__(self, other) -> QuadInt:
        if isinstance(other, int):
            return QuadInt(self.D, self.x * other, self.y * other)
        self._same(other)
        a, b, c, d = self.x, self.y, other.x, other.y
        if self.D == -1:
            return QuadInt(-1, a * c - b * d, a * d + b * c)
        if self.D == -2:
            return QuadInt(-2, a * c - 2 * b * d, a * d + b * c)
        # zeta6^2 = zeta6 - 1
        return QuadInt(-3, a * c - b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def divides(self, other: QuadInt) -> bool:
        """True iff ``self`` divides ``other`` in the ring."""
        n = self.norm()
        q = other * self.conj()
        return q.x % n == 0 and q.y % n == 0

    def reduce_mod(self, p: int, root: int) -> int:
        """Residue mod the prime (p, w - root)."""
        return (self.x + self.y * root) % p

    def to_cyc(self) -> CycInt:
        if self.D == -1:
            return CycInt(4, (self.x, self.y))
        if self.D == -3:
            return CycInt(6, (self.x, self.y))
        # sqrt(-2) = zeta8 + zeta8^3
        return CycInt(8, (self.x, self.y, 0, self.y))

    def __str__(self) -> str:
        return f"{self.x}{self.y:+d}*w[{self.D}]"


def unit(D: int, k: int = 0) -> QuadInt:
    """The k-th power of the generating unit: i, -1, zeta_6."""
    if D == -1:
        return [QuadInt(-1, 1, 0), QuadInt(-1, 0, 1), QuadInt(-1, -1, 0), QuadInt(-1, 0, -1)][k % 4]
    if D == -2:
        return QuadInt(-2, (-1) ** (k % 2), 0)
    z = QuadInt(-3, 1, 0)
    for _ in range(k % 6):
        z = z * QuadInt(-3, 0, 1)
    return z


def units(D: int) -> list[QuadInt]:
    return [unit(D, k) for k in range({-1: 4, -2: 2, -3: 6}[D])]


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for a in {-1, -2} and odd n of either sign."""
    if n % 2 == 0:
        raise ValueError("odd modulus expected")
    m = abs(n) % 8
    if a == -1:
        s = 1 if m % 4 == 1 else -1
    elif a == -2:
        s = 1 if m in (1, 3) else -1
    else:
        raise ValueError(f"kronecker symbol only implemented for -1, -2; got {a}")
    return -s if n < 0 else s


def cornacchia(p: int, D: int) -> tuple[int, int]:
    """Nonnegative (x, y) with x^2 + |D| y^2 = p (or x^2 + xy + y^2 = p for D = -3)."""
    if D not in RINGS:
        raise ValueError(f"unsupported D={D}")
    d = 3 if D == -3 else -D
    roots = sqrt_mod(-d % p, p, all_roots=True) if p > 2 else [1]
    if not roots:
        raise NotRepresentable(f"{p} is not x^2 + {d} y^2")
    r0 = max(r for r in roots)  # root in (p/2, p)
    a, b = p, r0
    bound = isqrt(p)
    while b > bound:
        a, b = b, a % b
    rest = p - b * b
    if rest % d or isqrt(rest // d) ** 2 != rest // d:
        raise NotRepresentable(f"{p} is not x^2 + {d} y^2")
    x, z = b, isqrt(rest // d)
    if D != -3:
        return x, z
    # x + z sqrt(-3) = (x - z) + 2z zeta6; rotate into the sector with both coordinates >= 0
    alpha = QuadInt(-3, x - z, 2 * z)
    for u in units(-3):
        beta = alpha * u
        if beta.x >= 0 and beta.y >= 0:
            return beta.x, beta.y
    raise AssertionError("no associate in the first sector")


# ideal generators --------------------------------------------------------

def ideal_generators(p: int, D: int, root: int) -> list[QuadInt]:
    """All generators of the prime (p, w - root), w the ring generator."""
    x, y = cornacchia(p, D)
    base = QuadInt(D, x, y)
    out = []
    for g in (base, base.conj()):
        for u in units(D):
            h = g * u
            if h.reduce_mod(p, root) == 0 and h not in out:
                out.append(h)
    if not out:
        raise AssertionError(f"no generator of ({p}, w - {root}) in {RINGS[D]}")
    return out


def _primary(gens: list[QuadInt], modulus: QuadInt) -> QuadInt:
    one = QuadInt(modulus.D, 1, 0)
    hits = [g for g in gens if modulus.divides(g - one)]
    if len(hits) != 1:
        raise AssertionError(f"expected one generator = 1 mod {modulus}, found {len(hits)}")
    return hits[0]


def unit_residue(alpha: QuadInt, modulus: QuadInt) -> int:
    """The unique k with ``alpha = unit^k`` modulo ``modulus``."""
    ks = [k for k, u in enumerate(units(alpha.D)) if modulus.divides(alpha - u)]
    if len(ks) != 1:
        raise AssertionError(f"{alpha} is congruent to {len(ks)} units mod {modulus}")
    return ks[0]


ONE_PLUS_I_CUBED = QuadInt(-1, -2, 2)  # (1+i)^3
TWO_SQRT_M3 = QuadInt(-3, -2, 4)  # 2 sqrt(-3) = 2(2 zeta6 - 1)


def zi_unit_twist(g: QuadInt) -> QuadInt:
    """``i^k g`` with ``g = i^k mod (1+i)^3``, read literally."""
    return unit(-1, unit_residue(g, ONE_PLUS_I_CUBED)) * g


def zi_parity_rule(g: QuadInt) -> QuadInt:
    """The parity-case formula for a generator ``a + bi``."""
    a, b = g.x, g.y
    if a % 2 and not b % 2:
        return g * ((-1) ** ((b // 2) % 2) * kronecker(-1, a))
    if b % 2 and not a % 2:
        return unit(-1, 1) * g * ((-1) ** ((a // 2) % 2) * kronecker(-1, b))
    raise ValueError(f"{g} has a and b of equal parity")


def z2_sign_rule(g: QuadInt) -> QuadInt:
    c, d = g.x, g.y
    s = (-1) ** ((d // 2) % 2) if d % 2 == 0 else -1
    return g * (kronecker(-2, c) * s)


def z6_unit_twist(alpha: QuadInt) -> QuadInt:
    """``zeta6^k alpha`` with ``alpha = zeta6^k mod 2 sqrt(-3)``, read literally."""
    return unit(-3, unit_residue(alpha, TWO_SQRT_M3)) * alpha


# Hecke values -------------------------------------------------------------

@dataclass(frozen=True)
class HeckeValue:
    value: QuadInt
    p: int
    root: int  # residue of the ring generator defining the ideal
    tag: str

    def to_cyc(self) -> CycInt:
        return self.value.to_cyc()

    def conj(self) -> QuadInt:
        return self.value.conj()


def _finish(value: QuadInt, ctx: PrimeContext, root: int, tag: str, check: bool) -> HeckeValue:
    hv = HeckeValue(value, ctx.p, root, tag)
    if check:
        problems = []
        if value.norm() != ctx.p:
            problems.append(f"norm {value.norm()} != {ctx.p}")
        if value.reduce_mod(ctx.p, root) != 0:
            problems.append("value is not in the chosen prime")
        ap = cm_trace(ctx, tag)
        if value.trace() != ap:
            problems.append(f"trace {value.trace()} != a_p {ap}")
        if problems:
            raise NormalizationMismatch(f"{tag} at p={ctx.p}: {value}: " + "; ".join(problems))
    return hv


def _require(ctx: PrimeContext, modulus: int) -> None:
    if ctx.p % modulus != 1:
        raise CongruenceViolation(f"p={ctx.p} is not 1 mod {modulus}")


def hecke_zi(ctx: PrimeContext, check: bool = True) -> HeckeValue:
    """chi(p) for y^2 = x^3 - x: the generator of (p, i - r_4) that is 1 mod (1+i)^3."""
    _require(ctx, 4)
    if 4 not in ctx.roots:
        raise MissingRoot(f"r_4 not stored for p={ctx.p}")
    r = ctx.roots[4]
    value = _primary(ideal_generators(ctx.p, -1, r), ONE_PLUS_I_CUBED)
    return _finish(value, ctx, r, "zi", check)


def hecke_z2(ctx: PrimeContext, check: bool = True) -> HeckeValue:
    """chi(P) for y^2 = x^3 + 4x^2 + 2x, P the prime of Z[sqrt(-2)] below (p, zeta8 - r_8)."""
    _require(ctx, 8)
    s = derived_root(ctx, "sqrt-2")
    gens = ideal_generators(ctx.p, -2, s)
    values = {z2_sign_rule(g) for g in gens}
    if len(values) != 1:
        raise AssertionError(f"z2 normalization depends on the generator at p={ctx.p}")
    return _finish(values.pop(), ctx, s, "z2", check)


def hecke_z6(ctx: PrimeContext, check: bool = True) -> HeckeValue:
    """chi(p) for y^2 = x^3 + 1: the generator of (p, zeta6 - r_6) that is 1 mod 2 sqrt(-3)."""
    _require(ctx, 6)
    if 6 not in ctx.roots:
        raise MissingRoot(f"r_6 not stored for p={ctx.p}")
    r = ctx.roots[6]
    value = _primary(ideal_generators(ctx.p, -3, r), TWO_SQRT_M3)
    return _finish(value, ctx, r, "z6", check)


def hecke_zi_twisted(ctx: PrimeContext, check: bool = True) -> HeckeValue:
    """chi(P) for y^2 = x^3 - 3x, P in Z[i] below the chosen prime of Z[zeta_12].

    With ``3^((p-1)/4) = i^k mod P`` the value is ``i^-k`` times the
    normalized generator of P (the odd-``a`` branch of the parity formula).
    Falls back to ``r_4`` when ``r_12`` is not stored.
    """
    _require(ctx, 4)
    p = ctx.p
    r = derived_root(ctx, "i")
    gens = ideal_generators(p, -1, r)
    base = _primary(gens, ONE_PLUS_I_CUBED)
    t = pow(3, (p - 1) // 4, p)
    k = next(k for k in range(4) if pow(r, k, p) == t)
    value = unit(-1, -k) * base
    return _finish(value, ctx, r, "zi_twisted", check)


def twisted_parity_rule(g: QuadInt, k: int) -> QuadInt:
    """The parity-case formula for y^2 = x^3 - 3x given generator g and twist exponent k."""
    a, b = g.x, g.y
    if a % 2 and not b % 2:
        return unit(-1, -k) * g * ((-1) ** ((b // 2) % 2) * kronecker(-1, a))
    if b % 2 and not a % 2:
        return unit(-1, 1 - k) * g * ((-1) ** ((a // 2) % 2) * kronecker(-1, b))
    raise ValueError(f"{g} has a and b of equal parity")


HECKE = {
    "zi": hecke_zi,
    "z2": hecke_z2,
    "z6": hecke_z6,
    "zi_twisted": hecke_zi_twisted,
}
