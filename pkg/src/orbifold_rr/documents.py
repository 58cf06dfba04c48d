"""JSON input documents.

Fractions are written as strings ``"p/q"`` (plain integers are accepted too)
so that nothing passes through floating point.  A document gives either the
invariants ``D3`` and ``Dc2`` directly or the pair ``h0_1``/``h0_2``, from which
they are solved in the Calabi-Yau setting.

Example::

    {
      "name": "cy_codim4",
      "calabi_yau": true,
      "h0_1": 2, "h0_2": 4,
      "points": [{"s": 5, "a": [1, 1, 3], "n": 4}],
      "curves": [{"r": 3, "k": 1, "degD": "1", "tau": 1, "N": 12}]
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from .basket import CurveBasketEntry, PointBasketEntry, PolarizedData
from .rr_core import solve_invariants

_TOP_KEYS = {
    "name", "notes", "calabi_yau", "D3", "Dc2", "D2K", "DK2", "chiO",
    "h0_1", "h0_2", "points", "curves",
}
_POINT_KEYS = {"s", "a", "n", "multiplicity"}
_CURVE_KEYS = {"r", "k", "degD", "degK", "tau", "N"}


class DocumentError(ValueError):
    """The input document is malformed."""


def parse_fraction(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise DocumentError(f"{where}: use an integer or a 'p/q' string, not {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"{where}: cannot parse {value!r} as a fraction") from exc
    raise DocumentError(f"{where}: expected a fraction, got {type(value).__name__}")


def parse_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{where}: expected an integer, got {value!r}")
    return value


def format_fraction(x: Fraction) -> str:
    return str(x)


@dataclass(frozen=True)
class InputDocument:
    name: str = ""
    notes: str = ""
    calabi_yau: bool = True
    D3: Fraction | None = None
    Dc2: Fraction | None = None
    h0_1: int | None = None
    h0_2: int | None = None
    D2K: Fraction = Fraction(0)
    DK2: Fraction = Fraction(0)
    chiO: Fraction = Fraction(0)
    points: tuple[PointBasketEntry, ...] = field(default=())
    curves: tuple[CurveBasketEntry, ...] = field(default=())

    @property
    def uses_h0(self) -> bool:
        return self.h0_1 is not None

    def invariants(self) -> tuple[Fraction, Fraction]:
        if self.uses_h0:
            return solve_invariants(self.h0_1, self.h0_2, self.points, self.curves)
        return self.D3, self.Dc2

    def polarized_data(self) -> PolarizedData:
        D3, Dc2 = self.invariants()
        return PolarizedData(
            D3=D3,
            Dc2=Dc2,
            D2K=self.D2K,
            DK2=self.DK2,
            chiO=self.chiO,
            points=self.points,
            curves=self.curves,
            calabi_yau=self.calabi_yau,
        )

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"name": self.name}
        if self.notes:
            out["notes"] = self.notes
        out["calabi_yau"] = self.calabi_yau
        if self.uses_h0:
            out["h0_1"], out["h0_2"] = self.h0_1, self.h0_2
        else:
            out["D3"], out["Dc2"] = str(self.D3), str(self.Dc2)
        for key in ("D2K", "DK2", "chiO"):
            if getattr(self, key):
                out[key] = str(getattr(self, key))
        out["points"] = [
            {"s": p.s, "a": list(p.a), "n": p.n, "multiplicity": p.multiplicity}
            for p in self.points
        ]
        out["curves"] = [
            {
                "r": c.r,
                "k": c.k,
                "degD": str(c.degD),
                "degK": str(c.degK),
                "tau": c.tau,
                "N": c.N,
            }
            for c in self.curves
        ]
        return out


def _check_keys(obj: Any, allowed: set[str], where: str) -> dict:
    if not isinstance(obj, dict):
        raise DocumentError(f"{where}: expected an object")
    unknown = set(obj) - allowed
    if unknown:
        raise DocumentError(f"{where}: unknown keys {sorted(unknown)}")
    return obj


def _parse_point(obj: Any, where: str) -> PointBasketEntry:
    obj = _check_keys(obj, _POINT_KEYS, where)
    try:
        a = obj["a"]
        if not isinstance(a, list) or len(a) != 3:
            raise DocumentError(f"{where}.a: expected a list of three integers")
        return PointBasketEntry(
            s=parse_int(obj["s"], f"{where}.s"),
            a=tuple(parse_int(x, f"{where}.a") for x in a),
            n=parse_int(obj["n"], f"{where}.n"),
            multiplicity=parse_int(obj.get("multiplicity", 1), f"{where}.multiplicity"),
        )
    except KeyError as exc:
        raise DocumentError(f"{where}: missing key {exc.args[0]!r}") from None


def _parse_curve(obj: Any, where: str) -> CurveBasketEntry:
    obj = _check_keys(obj, _CURVE_KEYS, where)
    try:
        r = parse_int(obj["r"], f"{where}.r")
        if r < 1:
            raise DocumentError(f"{where}.r: must be positive")
        return CurveBasketEntry(
            r=r,
            k=parse_int(obj["k"], f"{where}.k"),
            degD=parse_fraction(obj["degD"], f"{where}.degD"),
            degK=parse_fraction(obj.get("degK", 0), f"{where}.degK"),
            tau=parse_int(obj.get("tau", 1), f"{where}.tau"),
            N=parse_int(obj.get("N", 0), f"{where}.N"),
        )
    except KeyError as exc:
        raise DocumentError(f"{where}: missing key {exc.args[0]!r}") from None


def parse_document(obj: Any) -> InputDocument:
    obj = _check_keys(obj, _TOP_KEYS, "document")
    has_inv = "D3" in obj or "Dc2" in obj
    has_h0 = "h0_1" in obj or "h0_2" in obj
    if has_inv == has_h0:
        raise DocumentError("give exactly one of (D3, Dc2) or (h0_1, h0_2)")
    calabi_yau = obj.get("calabi_yau", True)
    if not isinstance(calabi_yau, bool):
        raise DocumentError("calabi_yau must be true or false")
    kw: dict[str, Any] = {}
    if has_h0:
        if "h0_1" not in obj or "h0_2" not in obj:
            raise DocumentError("h0_1 and h0_2 must be given together")
        if not calabi_yau:
            raise DocumentError("h0_1/h0_2 input requires calabi_yau = true")
        kw["h0_1"] = parse_int(obj["h0_1"], "h0_1")
        kw["h0_2"] = parse_int(obj["h0_2"], "h0_2")
    else:
        if "D3" not in obj or "Dc2" not in obj:
            raise DocumentError("D3 and Dc2 must be given together")
        kw["D3"] = parse_fraction(obj["D3"], "D3")
        kw["Dc2"] = parse_fraction(obj["Dc2"], "Dc2")
    for key in ("D2K", "DK2", "chiO"):
        kw[key] = parse_fraction(obj.get(key, 0), key)
    points = obj.get("points", [])
    curves = obj.get("curves", [])
    if not isinstance(points, list) or not isinstance(curves, list):
        raise DocumentError("points and curves must be lists")
    name = obj.get("name", "")
    notes = obj.get("notes", "")
    if not isinstance(name, str) or not isinstance(notes, str):
        raise DocumentError("name and notes must be strings")
    return InputDocument(
        name=name,
        notes=notes,
        calabi_yau=calabi_yau,
        points=tuple(_parse_point(p, f"points[{i}]") for i, p in enumerate(points)),
        curves=tuple(_parse_curve(c, f"curves[{i}]") for i, c in enumerate(curves)),
        **kw,
    )


def builtin_fixtures() -> list[str]:
    files = resources.files("orbifold_rr") / "fixtures"
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".json"))


def read_text(source: str | Path) -> str:
    """Contents of a path, or of a built-in fixture named ``source``."""
    path = Path(source)
    if path.exists():
        return path.read_text(encoding="utf-8")
    name = str(source)
    if name.startswith("builtin:"):
        name = name[len("builtin:"):]
    if name in builtin_fixtures():
        return (resources.files("orbifold_rr") / "fixtures" / f"{name}.json").read_text(
            encoding="utf-8"
        )
    raise DocumentError(f"no such file or built-in fixture: {source}")


def load_document(source: str | Path) -> InputDocument:
    text = read_text(source)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{source}: invalid JSON ({exc})") from exc
    return parse_document(obj)
