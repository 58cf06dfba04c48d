"""Dense univariate polynomials with exact rational coefficients.

A polynomial is stored as a tuple of :class:`fractions.Fraction`, index equal
to degree, with trailing zeros stripped.  The zero polynomial is the empty
tuple.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def _normalize(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Immutable polynomial in ``t`` over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _normalize([Fraction(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> "Poly":
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls([c])

    @classmethod
    def one_minus_t_pow(cls, w: int) -> "Poly":
        """The factor ``1 - t**w``."""
        if w < 1:
            raise ValueError("weight must be positive")
        return cls([1] + [0] * (w - 1) + [-1])

    @classmethod
    def product_one_minus(cls, weights: Iterable[int]) -> "Poly":
        """Expanded ``prod (1 - t^w)``; integer arithmetic throughout."""
        weights = list(weights)
        if any(w < 1 for w in weights):
            raise ValueError("weight must be positive")
        res = [0] * (sum(weights) + 1)
        res[0] = 1
        top = 0
        for w in weights:
            for i in range(top, -1, -1):
                if res[i]:
                    res[i + w] -= res[i]
            top += w
        return cls(res)

    # -- basic queries ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly([x])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return Poly(res)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[1]

    def shift(self, k: int) -> "Poly":
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return Poly([0] * k + list(self.coeffs))

    def reverse(self) -> "Poly":
        """``t**deg * p(1/t)``."""
        return Poly(reversed(self.coeffs))

    def monic(self) -> "Poly":
        return self * (1 / self.lead())

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = poly_divmod(self, other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def divides(self, other: "Poly") -> bool:
        """True if ``self`` divides ``other``."""
        return not poly_divmod(other, self)[1]

    # -- display ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return format_poly(self)


def poly_mul(a: Poly, b: Poly) -> Poly:
    """Schoolbook product."""
    if not a.coeffs or not b.coeffs:
        return ZERO
    res = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            res[i + j] += x * y
    return Poly(res)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b.coeffs:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lb = b.coeffs[-1]
    if len(rem) - 1 < db:
        return ZERO, a
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db] / lb
        quot[k] = c
        if c:
            for j, y in enumerate(b.coeffs):
                rem[k + j] -= c * y
    return Poly(quot), Poly(rem[:db])


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, u, v)`` with ``u*a + v*b == g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return ZERO, ZERO, ZERO
    inv = 1 / r0.lead()
    return r0 * inv, s0 * inv, t0 * inv


def format_poly(p: Poly, var: str = "t") -> str:
    """Human form, highest degree first, e.g. ``-t^23 + t^17 + 1``."""
    if not p.coeffs:
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


ZERO = Poly()
ONE = Poly([1])
T = Poly([0, 1])
