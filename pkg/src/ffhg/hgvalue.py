"""Exact hypergeometric values: a cyclotomic integer over a power of p."""

from __future__ import annotations

from .cyclotomic import CycInt, lcm


class HGValue:
    """``num / p**pexp`` with ``pexp`` minimal."""

    __slots__ = ("num", "p", "pexp")

    def __init__(self, num: CycInt, p: int, pexp: int = 0):
        if pexp < 0:
            raise ValueError("pexp must be nonnegative")
        while pexp > 0 and num.divisible_by(p):
            num = num.exact_div(p)
            pexp -= 1
        if num.is_zero():
            pexp = 0
        self.num = num
        self.p = p
        self.pexp = pexp

    @classmethod
    def zero(cls, p: int, N: int = 1) -> HGValue:
        return cls(CycInt.from_int(0, N), p)

    @property
    def N(self) -> int:
        return self.num.N

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def embed(self, M: int) -> HGValue:
        return HGValue(self.num.embed(M), self.p, self.pexp)

    def to_complex(self) -> complex:
        return self.num.to_complex() / self.p**self.pexp

    def _check(self, other: HGValue) -> None:
        if other.p != self.p:
            raise ValueError(f"values over different primes {self.p} and {other.p}")

    def __add__(self, other: HGValue) -> HGValue:
        self._check(other)
        k = max(self.pexp, other.pexp)
        num = self.num * self.p ** (k - self.pexp) + other.num * self.p ** (k - other.pexp)
        return HGValue(num, self.p, k)

    def __neg__(self) -> HGValue:
        return HGValue(-self.num, self.p, self.pexp)

    def __sub__(self, other: HGValue) -> HGValue:
        return self + (-other)

    def __mul__(self, other) -> HGValue:
        if isinstance(other, HGValue):
            self._check(other)
            return HGValue(self.num * other.num, self.p, self.pexp + other.pexp)
        if isinstance(other, (int, CycInt)):
            return HGValue(self.num * other, self.p, self.pexp)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, HGValue):
            return NotImplemented
        if other.p != self.p:
            return False
        # both normalized: equal iff same exponent and same numerator
        return self.pexp == other.pexp and self.num == other.num

    def __hash__(self) -> int:
        return hash((self.p, self.pexp, self.num))

    def __repr__(self) -> str:
        return f"HGValue({self.num!r}, p={self.p}, pexp={self.pexp})"

    def __str__(self) -> str:
        return render(self)


def common_conductor(*values: HGValue | CycInt) -> int:
    M = 1
    for v in values:
        M = lcm(M, v.N)
    return M


def render(v: HGValue) -> str:
    """``num/p^k`` text form, e.g. ``(-2 - 4*z4)/13``; integers print bare."""
    from .cyclotomic import render as render_cyc

    body = render_cyc(v.num)
    if v.pexp == 0:
        return body
    if len(v.num.coeffs) > 1 and sum(1 for c in v.num.coeffs if c) > 1:
        body = f"({body})"
    den = str(v.p) if v.pexp == 1 else f"{v.p}^{v.pexp}"
    return f"{body}/{den}"
