"""Singularity baskets and global invariants of a polarized threefold.

A point entry ``_n(1/s(a1, a2, a3))`` records a cyclic quotient point with
polarization eigenvalue ``n``; a curve entry ``_k(1/r(1, -1))`` records a
curve of transverse A_{r-1} singularities together with the degree data,
its index and the integer invariant ``N``.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence


class BasketError(ValueError):
    """Raised when an entry or dataset fails validation."""

    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class PointKind(enum.Enum):
    ISOLATED = "isolated"
    DISSIDENT = "dissident"


@dataclass(frozen=True)
class PointClass:
    kind: PointKind
    # (index into a, alpha_i = gcd(a_i, s)) for every alpha_i > 1
    divisors: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class PointBasketEntry:
    s: int
    a: tuple[int, int, int]
    n: int
    multiplicity: int = 1

    def __post_init__(self):
        s = int(self.s)
        if s < 1:
            raise BasketError([f"point order s must be positive, got {s}"])
        a = tuple(int(x) % s for x in self.a)
        if len(a) != 3:
            raise BasketError([f"point weights must be a triple, got {self.a}"])
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "n", int(self.n) % s)
        object.__setattr__(self, "multiplicity", int(self.multiplicity))

    def violations(self) -> list[str]:
        s, a = self.s, self.a
        out = []
        if s < 2:
            out.append(f"point order s must be >= 2, got {s}")
            return out
        if any(x == 0 for x in a):
            out.append(f"point weights {a} must be nonzero mod s={s}")
        if self.multiplicity < 1:
            out.append(f"multiplicity must be positive, got {self.multiplicity}")
        for i in range(3):
            for j in range(i + 1, 3):
                if gcd(gcd(a[i], a[j]), s) != 1:
                    out.append(
                        f"a_{i + 1}, a_{j + 1}, s must have no common divisor "
                        f"(a={a}, s={s})"
                    )
        if out:
            return out
        for i in range(3):
            alpha = gcd(a[i], s)
            if alpha > 1:
                j, k = [x for x in range(3) if x != i]
                if (a[j] + a[k]) % alpha:
                    out.append(
                        f"dissident point needs a_{j + 1} + a_{k + 1} = 0 mod "
                        f"{alpha} (a={a}, s={s})"
                    )
        return out

    def __str__(self):
        a1, a2, a3 = self.a
        mult = f" x{self.multiplicity}" if self.multiplicity != 1 else ""
        return f"_{self.n}(1/{self.s}({a1},{a2},{a3})){mult}"


@dataclass(frozen=True)
class CurveBasketEntry:
    r: int
    k: int
    degD: Fraction
    degK: Fraction = Fraction(0)
    tau: int = 1
    N: int = 0

    def __post_init__(self):
        r = int(self.r)
        object.__setattr__(self, "r", r)
        if r >= 1:
            object.__setattr__(self, "k", int(self.k) % r)
        object.__setattr__(self, "degD", Fraction(self.degD))
        object.__setattr__(self, "degK", Fraction(self.degK))
        object.__setattr__(self, "tau", int(self.tau))
        object.__setattr__(self, "N", int(self.N))

    def violations(self) -> list[str]:
        out = []
        if self.r < 2:
            out.append(f"curve transverse order r must be >= 2, got {self.r}")
            return out
        if self.k == 0:
            out.append(f"curve eigenvalue k must be nonzero mod r={self.r}")
        elif gcd(self.k, self.r) != 1:
            out.append(f"k,r must be coprime (k={self.k}, r={self.r})")
        if self.tau < 1:
            out.append(f"curve index tau must be positive, got {self.tau}")
        return out

    def warnings(self) -> list[str]:
        if self.r == 2 and self.N:
            return [f"N={self.N} has no effect on a 1/2(1,1) curve"]
        return []

    def __str__(self):
        return (
            f"_{self.k}(1/{self.r}(1,-1)) degD={self.degD} degK={self.degK} "
            f"tau={self.tau} N={self.N}"
        )


@dataclass(frozen=True)
class PolarizedData:
    D3: Fraction
    Dc2: Fraction
    D2K: Fraction = Fraction(0)
    DK2: Fraction = Fraction(0)
    chiO: Fraction = Fraction(0)
    points: tuple[PointBasketEntry, ...] = ()
    curves: tuple[CurveBasketEntry, ...] = ()
    calabi_yau: bool = True

    def __post_init__(self):
        for name in ("D3", "Dc2", "D2K", "DK2", "chiO"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "curves", tuple(self.curves))

    def periods(self) -> list[int]:
        return [p.s for p in self.points] + [c.r for c in self.curves]


@dataclass(frozen=True)
class WeightedSpace:
    weights: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))


def classify_point(p: PointBasketEntry) -> PointClass:
    """ISOLATED if every a_i is a unit mod s, else DISSIDENT with the alpha_i > 1."""
    bad = p.violations()
    if bad:
        raise BasketError(bad)
    divisors = tuple(
        (i, gcd(x, p.s)) for i, x in enumerate(p.a) if gcd(x, p.s) > 1
    )
    if divisors:
        return PointClass(PointKind.DISSIDENT, divisors)
    return PointClass(PointKind.ISOLATED)


def is_well_formed(w: WeightedSpace | Iterable[int]) -> bool:
    """Every choice of all-but-one weight has gcd 1."""
    weights = w.weights if isinstance(w, WeightedSpace) else tuple(w)
    if not weights:
        raise ValueError("weighted projective space needs at least one weight")
    if len(weights) == 1:
        return False
    for i in range(len(weights)):
        rest = weights[:i] + weights[i + 1 :]
        if reduce(gcd, rest) != 1:
            return False
    return True


def validate(data: PolarizedData) -> list[str]:
    """All invariant violations, each tagged with the offending entry."""
    report = []
    for i, p in enumerate(data.points):
        report += [f"points[{i}]: {v}" for v in p.violations()]
    for i, c in enumerate(data.curves):
        report += [f"curves[{i}]: {v}" for v in c.violations()]
    if data.calabi_yau:
        for name in ("D2K", "DK2", "chiO"):
            if getattr(data, name):
                report.append(f"calabi_yau requires {name}=0")
        for i, c in enumerate(data.curves):
            if c.degK:
                report.append(f"curves[{i}]: calabi_yau requires degK=0")
    return report


def validation_warnings(data: PolarizedData) -> list[str]:
    out = []
    for i, c in enumerate(data.curves):
        out += [f"curves[{i}]: {w}" for w in c.warnings()]
    return out


def check(data: PolarizedData) -> PolarizedData:
    """Raise :class:`BasketError` unless ``data`` is valid; warn on ignored input."""
    report = validate(data)
    if report:
        raise BasketError(report)
    for msg in validation_warnings(data):
        warnings.warn(msg, stacklevel=2)
    return data
