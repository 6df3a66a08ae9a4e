"""Exact arithmetic in Z[zeta_N] for N dividing 24.

Elements are stored in the power basis ``1, z, ..., z^(phi(N)-1)`` with
``z = zeta_N`` and reduced modulo the cyclotomic polynomial.  Every value
computed by the character-sum code lives here, so equality is exact.
"""

from __future__ import annotations

import cmath
import re
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import ConductorMismatch, ConductorTooLarge, NotCoprime, NotRational

CONDUCTORS = (1, 2, 3, 4, 6, 8, 12, 24)

# cyclotomic polynomials, low degree first, monic
_PHI = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    6: (1, -1, 1),
    8: (1, 0, 0, 0, 1),
    12: (1, 0, -1, 0, 1),
    24: (1, 0, 0, 0, -1, 0, 0, 0, 1),
}


def _power_table(N: int) -> tuple[tuple[int, ...], ...]:
    """Coordinates of zeta_N^k, k = 0..N-1, in the reduced power basis."""
    phi = _PHI[N]
    d = len(phi) - 1
    rows = []
    cur = [1] + [0] * (d - 1)
    for _ in range(N):
        rows.append(tuple(cur))
        # multiply by z and reduce the z^d term
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


DEGREE = {N: len(_PHI[N]) - 1 for N in CONDUCTORS}
POWERS = {N: _power_table(N) for N in CONDUCTORS}
_POWER_MATRIX = {N: np.array(POWERS[N], dtype=np.int64) for N in CONDUCTORS}


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def check_conductor(N: int) -> int:
    if N not in DEGREE:
        raise ConductorTooLarge(f"conductor {N} does not divide 24")
    return N


def _reduce(N: int, hist: Sequence[int]) -> tuple[int, ...]:
    """Collapse exponent counts ``hist[k]`` (coefficient of zeta_N^k) to the power basis."""
    out = [0] * DEGREE[N]
    for k, c in enumerate(hist):
        if c:
            for i, v in enumerate(POWERS[N][k]):
                if v:
                    out[i] += c * v
    return tuple(out)


class CycInt:
    """An element of Z[zeta_N] with exact (big) integer coordinates."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs: Iterable[int]):
        check_conductor(N)
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != DEGREE[N]:
            raise ValueError(f"Z[zeta_{N}] needs {DEGREE[N]} coordinates, got {len(coeffs)}")
        self.N = N
        self.coeffs = coeffs

    # construction -----------------------------------------------------

    @classmethod
    def from_int(cls, n: int, N: int = 1) -> CycInt:
        return cls(N, (n,) + (0,) * (DEGREE[check_conductor(N)] - 1))

    @classmethod
    def zeta(cls, N: int, k: int = 1) -> CycInt:
        check_conductor(N)
        return cls(N, POWERS[N][k % N])

    @classmethod
    def from_exponent_counts(cls, N: int, counts) -> CycInt:
        """``sum_k counts[k] * zeta_N^k`` for an integer vector of length N."""
        check_conductor(N)
        counts = np.asarray(counts)
        if counts.shape != (N,):
            raise ValueError(f"expected {N} exponent counts, got shape {counts.shape}")
        if counts.dtype == object:
            return cls(N, _reduce(N, [int(c) for c in counts]))
        return cls(N, (counts.astype(np.int64) @ _POWER_MATRIX[N]).tolist())

    # structure --------------------------------------------------------

    def embed(self, M: int) -> CycInt:
        """Image under zeta_N -> zeta_M^(M/N)."""
        check_conductor(M)
        if M % self.N:
            raise ConductorMismatch(f"Z[zeta_{self.N}] does not embed in Z[zeta_{M}]")
        if M == self.N:
            return self
        step = M // self.N
        hist = [0] * M
        for i, c in enumerate(self.coeffs):
            hist[i * step] += c
        return CycInt(M, _reduce(M, hist))

    def galois(self, j: int) -> CycInt:
        """Image under sigma_j: zeta_N -> zeta_N^j."""
        N = self.N
        if gcd(j, N) != 1:
            raise NotCoprime(f"sigma_{j} is not an automorphism of Q(zeta_{N})")
        hist = [0] * N
        for i, c in enumerate(self.coeffs):
            hist[i * j % N] += c
        return CycInt(N, _reduce(N, hist))

    def conj(self) -> CycInt:
        return self.galois(-1)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_rational():
            raise NotRational(f"{self} is not a rational integer")
        return self.coeffs[0]

    def abs_square(self) -> int:
        """``a * conj(a)`` as an integer; raises NotRational if that fails."""
        return (self * self.conj()).to_int()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def divisible_by(self, n: int) -> bool:
        return all(c % n == 0 for c in self.coeffs)

    def exact_div(self, n: int) -> CycInt:
        if not self.divisible_by(n):
            raise ValueError(f"{self} is not divisible by {n}")
        return CycInt(self.N, (c // n for c in self.coeffs))

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.N)
        return sum((c * z**i for i, c in enumerate(self.coeffs)), 0j)

    def reduce_mod(self, p: int, root: int) -> int:
        """Residue modulo the prime ideal (p, zeta_N - root)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * root + c) % p
        return acc

    # arithmetic -------------------------------------------------------

    def _coerce(self, other) -> tuple[CycInt, CycInt]:
        if isinstance(other, int):
            other = CycInt.from_int(other, self.N)
        elif not isinstance(other, CycInt):
            return NotImplemented, NotImplemented
        if other.N == self.N:
            return self, other
        M = lcm(self.N, other.N)
        return self.embed(M), other.embed(M)

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return CycInt(a.N, (x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        return CycInt(self.N, (-c for c in self.coeffs))

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return CycInt(a.N, (x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.N, (c * other for c in self.coeffs))
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        N = a.N
        hist = [0] * N
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        hist[(i + j) % N] += x * y
        return CycInt(N, _reduce(N, hist))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CycInt:
        if k < 0:
            raise ValueError("negative powers are not ring elements")
        out = CycInt.from_int(1, self.N)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        return hash(self.embed(24).coeffs)

    def __repr__(self) -> str:
        return f"CycInt({self.N}, {list(self.coeffs)})"

    def __str__(self) -> str:
        return render(self)


# text form --------------------------------------------------------------

def render(a: CycInt) -> str:
    """Canonical text, e.g. ``3 + 2*z4`` or ``-1 - z8 + 4*z8^3`` (``zN`` = zeta_N)."""
    parts = []
    for i, c in enumerate(a.coeffs):
        if c == 0:
            continue
        if i == 0:
            mono = str(abs(c))
        else:
            base = f"z{a.N}" if i == 1 else f"z{a.N}^{i}"
            mono = base if abs(c) == 1 else f"{abs(c)}*{base}"
        if not parts:
            parts.append(mono if c > 0 else f"-{mono}")
        else:
            parts.append(f"+ {mono}" if c > 0 else f"- {mono}")
    return " ".join(parts) if parts else "0"


_TERM = re.compile(r"([+-]?)\s*(?:(\d+)\s*\*?\s*)?(z(\d+)(?:\^(\d+))?)?")


def parse(text: str, N: int | None = None) -> CycInt:
    """Inverse of :func:`render`.  Integers without ``zN`` need ``N`` (default 1)."""
    s = text.strip()
    terms: list[tuple[int, int, int | None]] = []
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at {s[pos:]!r}")
        sign, num, mono, cond, exp = m.groups()
        if num is None and mono is None:
            raise ValueError(f"cannot parse {text!r} at {s[pos:]!r}")
        coef = int(num) if num is not None else 1
        if sign == "-":
            coef = -coef
        if mono is None:
            terms.append((coef, 0, None))
        else:
            terms.append((coef, int(exp) if exp else 1, int(cond)))
        pos = m.end()
        while pos < len(s) and s[pos] == " ":
            pos += 1
    conds = {c for _, _, c in terms if c is not None}
    if len(conds) > 1:
        raise ValueError(f"mixed conductors in {text!r}")
    cond = conds.pop() if conds else (N or 1)
    if N is not None and N % cond:
        raise ConductorMismatch(f"{text!r} does not live in Z[zeta_{N}]")
    target = N or cond
    hist = [0] * cond
    for coef, e, _ in terms:
        hist[e % cond] += coef
    return CycInt(cond, _reduce(cond, hist)).embed(target)
