"""Independent reference computations used only by the tests."""

from __future__ import annotations

import random
from fractions import Fraction

import mpmath

from orbifold_rr.basket import CurveBasketEntry, PointBasketEntry, PolarizedData

ORACLE_BITS = 200


def naive_convolution(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def long_division_series(num, den, order):
    """Power series of num/den by repeated subtraction, coefficient by coefficient."""
    rem = [Fraction(c) for c in num] + [Fraction(0)] * (order + len(den) + 1)
    out = []
    for k in range(order + 1):
        c = rem[k] / den[0]
        out.append(c)
        for i, d in enumerate(den):
            rem[k + i] -= c * d
    return out


def float_point_contribution(s, a, n, m, bits=ORACLE_BITS):
    """c_P(mD) by literal summation over the s-th roots of unity."""
    with mpmath.workprec(bits):
        total = mpmath.mpc(0)
        for j in range(1, s):
            if any((j * x) % s == 0 for x in a):
                continue

            def eps(k):
                return mpmath.expjpi(mpmath.mpf(2 * k * j) / s)

            term = eps(-n * m) - 1
            for x in a:
                term /= 1 - eps(-x)
            total += term
        return total / s


def oracle_error(approx, exact: Fraction, bits=ORACLE_BITS):
    """|approx - exact| evaluated at oracle precision."""
    with mpmath.workprec(bits):
        return abs(approx - mpmath.mpf(exact.numerator) / exact.denominator)


def _valid_point(s, a):
    return not PointBasketEntry(s, a, 0).violations()


def random_point(rng: random.Random, s_max=20) -> PointBasketEntry:
    while True:
        s = rng.randint(2, s_max)
        a = tuple(rng.randint(1, s - 1) for _ in range(3))
        if _valid_point(s, a):
            return PointBasketEntry(s, a, rng.randint(0, s - 1))


def random_curve(rng: random.Random, r_max=12) -> CurveBasketEntry:
    from math import gcd

    r = rng.randint(2, r_max)
    k = rng.choice([k for k in range(1, r) if gcd(k, r) == 1])
    return CurveBasketEntry(
        r=r,
        k=k,
        degD=Fraction(rng.randint(-20, 40), rng.randint(1, 12)),
        tau=rng.randint(1, 4),
        N=0 if r == 2 else rng.randint(-40, 40),
    )


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-60, 60), rng.randint(1, 30))


def random_cy_data(rng: random.Random, s_max=20, r_max=12) -> PolarizedData:
    return PolarizedData(
        D3=random_rational(rng),
        Dc2=random_rational(rng),
        points=[random_point(rng, s_max) for _ in range(rng.randint(0, 3))],
        curves=[random_curve(rng, r_max) for _ in range(rng.randint(0, 2))],
    )
