"""Exact arithmetic in the degree-16 cyclotomic field of 60th roots of unity.

One field hosts every root of unity needed downstream: order 3 (theta),
order 4 (the imaginary unit) and order 5 (zeta), since lcm(3,4,5) | 60.
Elements are integer coefficient vectors over the power basis z^0..z^15
with a common positive denominator, reduced by the minimal polynomial
    z^16 + z^14 - z^10 - z^8 - z^6 + z^2 + 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

N = 60
DEGREE = 16
# -(coefficients of the minimal polynomial below degree 16): z^16 = _SUBST . (z^0..z^15)
_MIN_POLY_TAIL = (1, 0, 1, 0, 0, 0, -1, 0, -1, 0, -1, 0, 0, 0, 1, 0)
_SUBST = tuple(-c for c in _MIN_POLY_TAIL)


def _build_power_table() -> tuple[tuple[int, ...], ...]:
    """Reduced coefficient vectors of z^k for k = 0..60."""
    table = [tuple(1 if j == k else 0 for j in range(DEGREE)) for k in range(DEGREE)]
    for _ in range(DEGREE, N + 1):
        prev = table[-1]
        shifted = [0] + list(prev[:-1])
        top = prev[-1]
        if top:
            shifted = [s + top * c for s, c in zip(shifted, _SUBST)]
        table.append(tuple(shifted))
    return tuple(table)


_POWERS = _build_power_table()


class Cyc:
    """An element of the field, immutable and hashable."""

    __slots__ = ("num", "den")

    def __init__(self, num, den: int = 1):
        num = tuple(int(c) for c in num)
        if len(num) != DEGREE:
            raise ValueError(f"need {DEGREE} coefficients, got {len(num)}")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = tuple(-c for c in num), -den
        g = gcd(den, *num) if any(num) else den
        if g > 1:
            num = tuple(c // g for c in num)
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("Cyc values are immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero() -> "Cyc":
        return Cyc((0,) * DEGREE)

    @staticmethod
    def one() -> "Cyc":
        return Cyc((1,) + (0,) * (DEGREE - 1))

    @staticmethod
    def from_rational(q) -> "Cyc":
        q = Fraction(q)
        return Cyc((q.numerator,) + (0,) * (DEGREE - 1), q.denominator)

    @staticmethod
    def root_of_unity(order: int, power: int = 1) -> "Cyc":
        """The chosen primitive root of the given order, raised to a power."""
        if order <= 0 or N % order:
            raise ValueError(f"order must divide {N}, got {order}")
        exp = (N // order) * power % N
        return Cyc(_POWERS[exp])

    @staticmethod
    def theta() -> "Cyc":
        return Cyc.root_of_unity(3)

    @staticmethod
    def imag_unit() -> "Cyc":
        return Cyc.root_of_unity(4)

    @staticmethod
    def zeta5() -> "Cyc":
        return Cyc.root_of_unity(5)

    # -- ring operations ------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "Cyc":
        if isinstance(value, Cyc):
            return value
        if isinstance(value, (int, Fraction)):
            return Cyc.from_rational(value)
        return NotImplemented

    def __add__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        da, db = self.den, other.den
        return Cyc(tuple(a * db + b * da for a, b in zip(self.num, other.num)), da * db)

    __radd__ = __add__

    def __neg__(self) -> "Cyc":
        return Cyc(tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        conv = [0] * (2 * DEGREE - 1)
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(other.num):
                    if b:
                        conv[i + j] += a * b
        out = [0] * DEGREE
        for k, c in enumerate(conv):
            if c:
                pk = _POWERS[k]
                for j in range(DEGREE):
                    if pk[j]:
                        out[j] += c * pk[j]
        return Cyc(tuple(out), self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Cyc":
        if n < 0:
            return self.inverse() ** (-n)
        out = Cyc.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyc._coerce(other) * self.inverse()

    def inverse(self) -> "Cyc":
        """Field inverse via the extended Euclidean algorithm mod the minimal polynomial."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        min_poly = [Fraction(c) for c in _MIN_POLY_TAIL] + [Fraction(1)]
        a = [Fraction(c, self.den) for c in self.num]
        # invariants: r0 = s0 * self (mod min_poly), r1 = s1 * self (mod min_poly)
        r0, r1 = min_poly, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        lead = next(c for c in reversed(r0) if c)
        if len(_poly_trim(r0)) != 1:
            raise ZeroDivisionError("element is a zero divisor (reduction polynomial not coprime)")
        inv_coeffs = [c / lead for c in s0]
        inv_coeffs += [Fraction(0)] * (DEGREE - len(inv_coeffs))
        den = 1
        for c in inv_coeffs[:DEGREE]:
            den = den * c.denominator // gcd(den, c.denominator)
        return Cyc(tuple(int(c * den) for c in inv_coeffs[:DEGREE]), den)

    def conj(self) -> "Cyc":
        """Complex conjugation: the base root maps to its inverse."""
        out = [0] * DEGREE
        for j, c in enumerate(self.num):
            if c:
                pk = _POWERS[(N - j) % N]
                for t in range(DEGREE):
                    if pk[t]:
                        out[t] += c * pk[t]
        return Cyc(tuple(out), self.den)

    # -- predicates and conversions -------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def to_complex(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / N)
        return sum(c * z**j for j, c in enumerate(self.num)) / self.den

    def __eq__(self, other) -> bool:
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        if self.is_rational():
            return f"Cyc({self.to_rational()})"
        terms = [f"{Fraction(c, self.den)}*z^{j}" for j, c in enumerate(self.num) if c]
        return "Cyc(" + " + ".join(terms) + ")"

    def to_json(self) -> list[dict]:
        return [
            {"num": Fraction(c, self.den).numerator, "den": Fraction(c, self.den).denominator, "exp": j}
            for j, c in enumerate(self.num)
            if c
        ]


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p = p[:-1]
    return p


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    size = max(len(a), len(b))
    a = a + [Fraction(0)] * (size - len(a))
    b = b + [Fraction(0)] * (size - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        coeff = a[-1] / b[-1]
        q[shift] = coeff
        a = _poly_trim([a[i] - coeff * b[i - shift] if i >= shift else a[i] for i in range(len(a))])
    return q, a
