"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored as rational coordinate vectors over the power basis
1, zeta, ..., zeta^(phi(N)-1), reduced modulo the N-th cyclotomic polynomial.
All arithmetic is exact; no floating point enters this module.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    count = 0
    for k in range(1, n + 1):
        if gcd(k, n) == 1:
            count += 1
    return count


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Exact division of integer polynomials, denominator monic.
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first, monic."""
    if n == 1:
        return (-1, 1)
    poly = [0] * (n + 1)
    poly[0], poly[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_rows(n: int) -> tuple[tuple[int, ...], ...]:
    # Row t is zeta_n^t written over the power basis, for t = 0..max(n, 2*phi-1)-1.
    phi = euler_phi(n)
    top = max(n, 2 * phi - 1)
    mod = cyclotomic_polynomial(n)
    rows: list[tuple[int, ...]] = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(top):
        rows.append(tuple(cur))
        nxt = [0] + cur[: phi - 1]
        lead = cur[phi - 1]
        if lead:
            # zeta^phi = -(mod[0] + mod[1] zeta + ...), mod is monic
            for j in range(phi):
                nxt[j] -= lead * mod[j]
        cur = nxt
    return tuple(rows)


def _reduce(n: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    phi = euler_phi(n)
    rows = _power_rows(n)
    out = list(coeffs[:phi]) + [Fraction(0)] * (phi - len(coeffs))
    for t in range(phi, len(coeffs)):
        c = coeffs[t]
        if c:
            row = rows[t]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
    return tuple(out)


class CycNum:
    """An element of Q(zeta_N) in canonical reduced form.

    Mixed-level operands are lifted to the lcm level first, so values of
    different levels compare and combine consistently.
    """

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs):
        if level < 1:
            raise ValueError("level must be positive")
        phi = euler_phi(level)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != phi:
            raise ValueError(f"expected {phi} coefficients at level {level}")
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CycNum is immutable")

    @classmethod
    def from_rational(cls, q) -> "CycNum":
        return cls(1, (Fraction(q),))

    def lift(self, level: int) -> "CycNum":
        """Rewrite at a finer level (self.level must divide level)."""
        if level == self.level:
            return self
        if level % self.level != 0:
            raise ValueError("can only lift to a multiple of the current level")
        step = level // self.level
        acc = [Fraction(0)] * (euler_phi(self.level) * step)
        for j, c in enumerate(self.coeffs):
            acc[j * step] = c
        return CycNum(level, _reduce(level, acc))

    def _common(self, other: "CycNum") -> tuple["CycNum", "CycNum"]:
        n = lcm(self.level, other.level)
        return self.lift(n), other.lift(n)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return CycNum(a.level, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.level, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycNum(self.level, tuple(c * q for c in self.coeffs))
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        phi = len(a.coeffs)
        conv = [Fraction(0)] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        conv[i + j] += x * y
        return CycNum(a.level, _reduce(a.level, conv))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta)")
        n = self.level
        mod = [Fraction(c) for c in cyclotomic_polynomial(n)]
        u = _poly_invert(list(self.coeffs), mod)
        return CycNum(n, _reduce(n, u))

    def conj(self) -> "CycNum":
        """Complex conjugation, the Galois map k = -1."""
        return self.galois(-1)

    def galois(self, k: int) -> "CycNum":
        """Apply the field automorphism zeta -> zeta^k, gcd(k, level) = 1."""
        n = self.level
        k %= n
        if gcd(k, n) != 1:
            raise ValueError(f"galois exponent {k} not coprime to level {n}")
        rows = _power_rows(n)
        phi = len(self.coeffs)
        out = [Fraction(0)] * phi
        for j, c in enumerate(self.coeffs):
            if c:
                row = rows[(j * k) % n]
                for t in range(phi):
                    if row[t]:
                        out[t] += c * row[t]
        return CycNum(n, tuple(out))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # cross-level equality is not hash-compatible

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                z = f"z{self.level}" + (f"^{j}" if j > 1 else "")
                terms.append(z if c == 1 else f"{c}*{z}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"level": self.level, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, doc: dict) -> "CycNum":
        return cls(doc["level"], [Fraction(c) for c in doc["coeffs"]])


def _coerce(x):
    if isinstance(x, CycNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycNum.from_rational(x)
    return NotImplemented


def _poly_invert(a: list[Fraction], mod: list[Fraction]) -> list[Fraction]:
    # Extended Euclid in Q[x]: find u with a*u = 1 modulo mod (mod irreducible).
    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def divmod_(num, den):
        num = list(num)
        q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
        inv = 1 / den[-1]
        for i in range(len(num) - len(den), -1, -1):
            c = num[i + len(den) - 1] * inv
            q[i] = c
            if c:
                for j, d in enumerate(den):
                    num[i + j] -= c * d
        return q, trim(num)

    r0, r1 = trim(list(mod)), trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1:
        q, r = divmod_(r0, r1)
        s = list(s0)
        s += [Fraction(0)] * (len(q) + len(s1) - 1 - len(s))
        for i, qc in enumerate(q):
            if qc:
                for j, sc in enumerate(s1):
                    s[i + j] -= qc * sc
        r0, r1 = r1, trim(r)
        s0, s1 = s1, trim(s)
    if not r1:
        raise ZeroDivisionError("element is a zero divisor (unexpected)")
    c = r1[0]
    return [x / c for x in s1]


def root_of_unity(n: int, j: int = 1) -> CycNum:
    """zeta_n^j in canonical form; root_of_unity(n, 0) is 1."""
    if n < 1:
        raise ValueError("n must be positive")
    rows = _power_rows(n)
    return CycNum(n, tuple(Fraction(c) for c in rows[j % n]))


def galois_apply(a: CycNum, k: int) -> CycNum:
    """Module-level alias for the Galois action zeta -> zeta^k."""
    return a.galois(k)


ZERO = CycNum.from_rational(0)
ONE = CycNum.from_rational(1)
