"""Command line interface.

    orbifold-rr chi cy_codim3 --m-max 10
    orbifold-rr search cy_codim4 --json
    orbifold-rr search cy_codim5 --weights 1,1,2,2,2,2,3,3,4
    orbifold-rr check my_basket.json
    orbifold-rr search --batch inputs/ --out reports/

Inputs are JSON files or the names of built-in fixtures.  Exit codes:
0 success, 1 self-consistency check failed, 2 unreadable input,
3 validation failure, 4 no embedding found.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from math import lcm
from pathlib import Path

from . import basket
from .basket import BasketError
from .documents import DocumentError, InputDocument, builtin_fixtures, load_document
from .embed import (
    DEFAULT_MAX_DEGREE,
    DEFAULT_MAX_WEIGHTS,
    EmbeddingCandidate,
    NotPolynomial,
    SearchFailure,
    greedy_weights,
    make_candidate,
    round_trip_ok,
    suggest_relations,
)
from .exactmath import Poly, format_poly
from .hilbert import HilbertSeriesMismatch, assemble, verification_order
from .rr_core import chi

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_SEARCH = 4

DEFAULT_M_MAX = 10


class CommandError(Exception):
    def __init__(self, code: int, message: str, payload: dict | None = None):
        super().__init__(message)
        self.code = code
        self.payload = payload or {}


def _frac(x: Fraction) -> str:
    return str(x)


def _poly_json(p: Poly) -> dict:
    return {"coefficients": [_frac(c) for c in p.coeffs], "text": format_poly(p)}


def factored_text(q: Poly, weights) -> str:
    counts: dict[int, int] = {}
    for w in weights:
        counts[w] = counts.get(w, 0) + 1
    den = "".join(
        f"(1-t{'' if w == 1 else f'^{w}'})" + (f"^{e}" if e > 1 else "")
        for w, e in sorted(counts.items())
    )
    return f"({format_poly(q)}) / ({den})" if den else format_poly(q)


def _prepare(doc: InputDocument):
    data = doc.polarized_data()
    report = basket.validate(data)
    if report:
        raise CommandError(
            EXIT_VALIDATION, "validation failed", {"violations": report}
        )
    return data


def _base_report(doc: InputDocument, data) -> dict:
    out = {"input": doc.to_dict(), "derived": {"D3": _frac(data.D3), "Dc2": _frac(data.Dc2)}}
    warns = basket.validation_warnings(data)
    if warns:
        out["warnings"] = warns
    return out


def _chi_rows(data, m_max: int, verbose: bool) -> list[dict]:
    rows = []
    for m in range(1, m_max + 1):
        res = chi(data, m, validated=True)
        row = {"m": m, "value": _frac(res.value)}
        if verbose:
            b = res.breakdown
            row["polynomial_part"] = _frac(b.polynomial_part)
            row["point_contribs"] = [_frac(x) for x in b.point_contribs]
            row["curve_contribs"] = [_frac(x) for x in b.curve_contribs]
        rows.append(row)
    return rows


def run_chi(doc: InputDocument, m_max: int = DEFAULT_M_MAX, verbose: bool = False) -> tuple[dict, int]:
    data = _prepare(doc)
    out = _base_report(doc, data)
    out["quantity"] = "h0" if data.calabi_yau else "chi"
    out["chi"] = _chi_rows(data, m_max, verbose)
    return out, EXIT_OK


def _hilbert_json(hs) -> dict:
    q, weights = hs.factored()
    return {
        "denominator_weights": list(weights),
        "numerator": _poly_json(q),
        "text": factored_text(q, weights),
    }


def run_hilbert(doc: InputDocument, order: int = 20) -> tuple[dict, int]:
    data = _prepare(doc)
    out = _base_report(doc, data)
    hs = assemble(data)
    out["hilbert"] = _hilbert_json(hs)
    out["hilbert"]["coefficients"] = [_frac(c) for c in hs.coefficients(order)]
    return out, EXIT_OK


def _candidate_json(c: EmbeddingCandidate) -> dict:
    rel = suggest_relations(c)
    return {
        "weights": list(c.weights),
        "numerator": _poly_json(c.numerator),
        "text": factored_text(c.numerator, c.weights),
        "codimension": c.codimension,
        "well_formed": c.well_formed,
        "symmetric": c.symmetric,
        "symmetry_sign": c.symmetry_sign,
        "relations": {"heuristic": rel.heuristic, "degrees": list(rel.degrees)},
    }


def run_search(
    doc: InputDocument,
    max_degree: int = DEFAULT_MAX_DEGREE,
    max_weights: int = DEFAULT_MAX_WEIGHTS,
    weights: list[int] | None = None,
    m_max: int = DEFAULT_M_MAX,
    verbose: bool = False,
) -> tuple[dict, int]:
    start = time.perf_counter()
    data = _prepare(doc)
    if not data.calabi_yau:
        raise CommandError(EXIT_VALIDATION, "search needs Calabi-Yau input")
    out = _base_report(doc, data)
    out["chi"] = _chi_rows(data, m_max, verbose)
    hs = assemble(data)
    out["hilbert"] = _hilbert_json(hs)
    code = EXIT_OK
    if weights:
        try:
            cand = make_candidate(hs, weights)
        except NotPolynomial as exc:
            out["candidate"] = None
            out["failure"] = {
                "reason": "NOT_POLYNOMIAL",
                "weights": list(exc.weights),
                "residual": {str(d): e for d, e in exc.residual.items()},
                "message": str(exc),
            }
            cand, code = None, EXIT_SEARCH
    else:
        cand = greedy_weights(hs, max_degree=max_degree, max_weights=max_weights)
        if isinstance(cand, SearchFailure):
            out["candidate"] = None
            out["failure"] = {
                "reason": cand.reason,
                "weights": list(cand.weights),
                "residual": None
                if cand.residual is None
                else {
                    "numerator": _poly_json(cand.residual.num),
                    "weights": list(cand.residual.weights),
                },
            }
            cand, code = None, EXIT_SEARCH
    if cand is not None:
        assert round_trip_ok(hs, cand)
        out["candidate"] = _candidate_json(cand)
    out["timing_seconds"] = round(time.perf_counter() - start, 6)
    return out, code


def run_check(doc: InputDocument) -> tuple[dict, int]:
    data = _prepare(doc)
    out = _base_report(doc, data)
    periods = data.periods()
    scan_to = 2 * lcm(*periods) if periods else 2
    failures = []
    for m in range(1, scan_to + 1):
        v = chi(data, m, validated=True).value
        if v.denominator != 1:
            failures.append(f"chi({m}D) = {v} is not an integer")
            break
    out["integrality"] = {"m_max": scan_to, "ok": not failures}
    if data.calabi_yau:
        try:
            assemble(data)
            out["closed_form"] = {"order": verification_order(data), "ok": True}
        except HilbertSeriesMismatch as exc:
            failures.append(f"closed form disagrees with direct summation: {exc}")
            out["closed_form"] = {"order": verification_order(data), "ok": False}
    out["ok"] = not failures
    if failures:
        out["failure"] = failures[0]
    return out, EXIT_OK if not failures else EXIT_CHECK_FAILED


# -- presentation -----------------------------------------------------------


def _human(command: str, report: dict) -> str:
    lines = []
    inp = report.get("input", {})
    if inp:
        lines.append(f"# {inp.get('name') or '(unnamed)'}")
    if "derived" in report:
        d = report["derived"]
        lines.append(f"D^3 = {d['D3']}    D.c2 = {d['Dc2']}")
    for w in report.get("warnings", []):
        lines.append(f"warning: {w}")
    if "chi" in report and command in ("chi", "search"):
        label = report.get("quantity", "h0")
        for row in report["chi"]:
            extra = ""
            if "polynomial_part" in row:
                extra = (
                    f"   [poly {row['polynomial_part']}; points {row['point_contribs']};"
                    f" curves {row['curve_contribs']}]"
                )
            lines.append(f"{label}({row['m']}D) = {row['value']}{extra}")
    if "hilbert" in report:
        lines.append(f"P(t) = {report['hilbert']['text']}")
        if "coefficients" in report["hilbert"]:
            lines.append("coefficients: " + ", ".join(report["hilbert"]["coefficients"]))
    if command == "search":
        cand = report.get("candidate")
        if cand:
            lines.append(f"weights: {cand['weights']}  (codimension {cand['codimension']})")
            lines.append(f"Q(t) = {cand['numerator']['text']}")
            lines.append(f"P(t) = {cand['text']}")
            sym = f"sign {cand['symmetry_sign']:+d}" if cand["symmetric"] else "no"
            lines.append(f"well formed: {cand['well_formed']}   symmetric: {sym}")
            lines.append(
                "relation degrees (heuristic): " + ", ".join(map(str, cand["relations"]["degrees"]))
            )
        elif "failure" in report:
            f = report["failure"]
            lines.append(f"no embedding: {f.get('message') or f['reason']}")
            lines.append(f"partial weights: {f['weights']}")
        if "timing_seconds" in report:
            lines.append(f"time: {report['timing_seconds']:.3f} s")
    if command == "check":
        lines.append(
            f"integrality up to m = {report['integrality']['m_max']}: "
            f"{'ok' if report['integrality']['ok'] else 'FAILED'}"
        )
        if "closed_form" in report:
            cf = report["closed_form"]
            lines.append(
                f"closed form vs direct sum to order {cf['order']}: "
                f"{'ok' if cf['ok'] else 'FAILED'}"
            )
        if not report["ok"]:
            lines.append(f"FAILED: {report['failure']}")
    return "\n".join(lines)


def _parse_weights(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        ws = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise CommandError(EXIT_PARSE, f"cannot parse weights {text!r}") from None
    if not ws or any(w < 1 for w in ws):
        raise CommandError(EXIT_PARSE, f"weights must be positive integers: {text!r}")
    return ws


def run_one(args, source) -> tuple[dict, int]:
    """Run the selected command on one input; never raises for bad input."""
    try:
        doc = load_document(source)
        if args.command == "chi":
            return run_chi(doc, args.m_max, args.verbose)
        if args.command == "hilbert":
            return run_hilbert(doc, args.m_max)
        if args.command == "search":
            return run_search(
                doc,
                max_degree=args.max_degree,
                max_weights=args.max_weights,
                weights=_parse_weights(args.weights),
                m_max=args.m_max,
                verbose=args.verbose,
            )
        return run_check(doc)
    except DocumentError as exc:
        return {"error": str(exc), "exit_code": EXIT_PARSE}, EXIT_PARSE
    except BasketError as exc:
        return (
            {"error": "validation failed", "violations": exc.violations, "exit_code": EXIT_VALIDATION},
            EXIT_VALIDATION,
        )
    except CommandError as exc:
        return {"error": str(exc), **exc.payload, "exit_code": exc.code}, exc.code


def _emit(args, report: dict, code: int, stream) -> None:
    if args.json:
        stream.write(json.dumps(report, indent=2) + "\n")
    elif "error" in report:
        msg = f"error: {report['error']}"
        for v in report.get("violations", []):
            msg += f"\n  - {v}"
        stream.write(msg + "\n")
    else:
        stream.write(_human(args.command, report) + "\n")


SUMMARY_FIELDS = ["name", "D3", "Dc2", "weights", "codimension", "symmetric", "exit_code"]


def _summary_row(path: Path, report: dict, code: int) -> dict:
    cand = report.get("candidate") or {}
    derived = report.get("derived", {})
    return {
        "name": report.get("input", {}).get("name") or path.stem,
        "D3": derived.get("D3", ""),
        "Dc2": derived.get("Dc2", ""),
        "weights": " ".join(map(str, cand.get("weights", []))),
        "codimension": cand.get("codimension", ""),
        "symmetric": cand.get("symmetric", ""),
        "exit_code": code,
    }


def run_batch(args) -> int:
    directory = Path(args.batch)
    files = sorted(directory.glob("*.json"))
    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    rows, worst = [], EXIT_OK
    for path in files:
        report, code = run_one(args, path)
        worst = max(worst, code)
        rows.append(_summary_row(path, report, code))
        if out_dir:
            (out_dir / f"{path.stem}.json").write_text(
                json.dumps(report, indent=2) + "\n", encoding="utf-8"
            )
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SUMMARY_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if out_dir:
        (out_dir / "summary.csv").write_text(buf.getvalue(), encoding="utf-8")
    if args.json:
        sys.stdout.write(json.dumps({"summary": rows}, indent=2) + "\n")
    elif not out_dir:
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(f"{len(files)} inputs processed; reports in {out_dir}\n")
    return worst


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="JSON input file or built-in fixture name")
    common.add_argument("--json", action="store_true", help="emit JSON on standard output")
    common.add_argument("--verbose", action="store_true", help="per-term breakdown")
    common.add_argument("--m-max", type=int, default=DEFAULT_M_MAX, help="largest m to tabulate")
    common.add_argument("--batch", metavar="DIR", help="process every *.json file in DIR")
    common.add_argument("--out", metavar="PATH", help="write the report (or batch reports) here")

    parser = argparse.ArgumentParser(
        prog="orbifold-rr",
        description="Orbifold Riemann-Roch, Hilbert series and weighted embeddings "
        "for polarized threefolds.",
        epilog="built-in fixtures: " + ", ".join(builtin_fixtures()),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("chi", parents=[common], help="tabulate chi(mD) or h0(mD)")
    sub.add_parser("hilbert", parents=[common], help="closed-form Hilbert series")
    search = sub.add_parser("search", parents=[common], help="search for a weighted embedding")
    search.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    search.add_argument("--max-weights", type=int, default=DEFAULT_MAX_WEIGHTS)
    search.add_argument("--weights", help="clear against these weights, e.g. 1,1,2,3,6")
    sub.add_parser("check", parents=[common], help="validation and self-consistency checks")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for attr, default in (
        ("max_degree", DEFAULT_MAX_DEGREE),
        ("max_weights", DEFAULT_MAX_WEIGHTS),
        ("weights", None),
    ):
        if not hasattr(args, attr):
            setattr(args, attr, default)
    if args.batch:
        return run_batch(args)
    if not args.input:
        parser.error("an input file (or --batch DIR) is required")
    report, code = run_one(args, args.input)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            _emit(args, report, code, fh)
    else:
        _emit(args, report, code, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
