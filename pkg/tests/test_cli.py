import csv
import json
from pathlib import Path

import pytest

from orbifold_rr.cli import main
from orbifold_rr.documents import DocumentError, load_document, parse_document

GOLDEN = ["cy_codim3", "cy_codim4", "cy_codim5"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj), encoding="utf-8")
    return str(path)


def doc_dict(name):
    return load_document(name).to_dict()


class TestDocuments:
    @pytest.mark.parametrize("name", GOLDEN + ["pure_cubic"])
    def test_echo_round_trip(self, name):
        doc = load_document(name)
        assert parse_document(json.loads(json.dumps(doc.to_dict()))) == doc

    @pytest.mark.parametrize(
        "patch, message",
        [
            ({"D3": "1", "Dc2": "0"}, "exactly one"),
            ({"h0_2": None}, "together"),
            ({"calabi_yau": False}, "requires calabi_yau"),
            ({"extra": 1}, "unknown keys"),
        ],
    )
    def test_bad_documents(self, patch, message):
        obj = doc_dict("cy_codim4")
        for k, v in patch.items():
            if v is None:
                obj.pop(k)
            else:
                obj[k] = v
        with pytest.raises(DocumentError, match=message):
            parse_document(obj)

    def test_float_rejected(self):
        obj = doc_dict("pure_cubic")
        obj["D3"] = 6.0
        with pytest.raises(DocumentError, match="p/q"):
            parse_document(obj)

    def test_missing_file(self):
        with pytest.raises(DocumentError):
            load_document("no/such/file.json")


class TestChi:
    def test_cy_codim3(self, capsys):
        code, rep = run_json(capsys, "chi", "cy_codim3", "--m-max", "2")
        assert code == 0
        assert [(r["m"], r["value"]) for r in rep["chi"]] == [(1, "3"), (2, "6")]
        assert rep["derived"] == {"D3": "29/27", "Dc2": "86/3"}

    def test_cy_codim4(self, capsys):
        code, rep = run_json(capsys, "chi", "cy_codim4", "--m-max", "2")
        assert [(r["m"], r["value"]) for r in rep["chi"]] == [(1, "2"), (2, "4")]

    def test_pure_cubic(self, capsys):
        code, rep = run_json(capsys, "chi", "pure_cubic", "--m-max", "3")
        assert [(r["m"], r["value"]) for r in rep["chi"]] == [(1, "1"), (2, "8"), (3, "27")]

    def test_verbose_breakdown(self, capsys):
        code, rep = run_json(capsys, "chi", "cy_codim3", "--m-max", "1", "--verbose")
        row = rep["chi"][0]
        assert len(row["point_contribs"]) == 2 and len(row["curve_contribs"]) == 1

    def test_human(self, capsys):
        code, out = run(capsys, "chi", "cy_codim3", "--m-max", "2")
        assert "h0(1D) = 3" in out and "h0(2D) = 6" in out

    def test_parse_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json", encoding="utf-8")
        code, rep = run_json(capsys, "chi", str(bad))
        assert code == 2 and rep["exit_code"] == 2

    def test_validation_error(self, capsys, tmp_path):
        obj = doc_dict("cy_codim4")
        obj["curves"][0]["k"] = 3
        obj["curves"][0]["r"] = 9
        code, rep = run_json(capsys, "chi", write(tmp_path, "v.json", obj))
        assert code == 3
        assert any("coprime" in v for v in rep["violations"])


class TestSearch:
    def test_cy_codim3(self, capsys):
        code, rep = run_json(capsys, "search", "cy_codim3")
        assert code == 0
        cand = rep["candidate"]
        assert cand["weights"] == [1, 1, 1, 3, 3, 5, 9]
        assert cand["codimension"] == 3 and cand["well_formed"]
        assert cand["numerator"]["text"] == (
            "-t^23 + t^17 + t^15 + 2*t^13 - t^12 + t^11 - 2*t^10 - t^8 - t^6 + 1"
        )
        assert cand["relations"]["heuristic"] is True
        assert rep["timing_seconds"] >= 0

    def test_explicit_weights(self, capsys):
        code, rep = run_json(capsys, "search", "cy_codim5", "--weights", "1,1,2,2,2,2,3,3,4")
        assert code == 0
        assert rep["candidate"]["numerator"]["text"] == (
            "-t^20 + 3*t^16 + 4*t^15 + t^14 - 6*t^13 - 6*t^12 - 2*t^11 + 2*t^9 "
            "+ 6*t^8 + 6*t^7 - t^6 - 4*t^5 - 3*t^4 + 1"
        )

    def test_not_polynomial(self, capsys):
        code, rep = run_json(capsys, "search", "cy_codim3", "--weights", "1,1,1")
        assert code == 4
        assert rep["failure"]["reason"] == "NOT_POLYNOMIAL"
        assert rep["candidate"] is None

    def test_greedy_failure_exit(self, capsys):
        code, rep = run_json(capsys, "search", "cy_codim3", "--max-weights", "3")
        assert code == 4 and rep["failure"]["weights"] == [1, 1, 1]

    def test_human(self, capsys):
        code, out = run(capsys, "search", "cy_codim4")
        assert "weights: [1, 1, 2, 3, 3, 3, 3, 5]" in out
        assert "(1-t)^2(1-t^2)(1-t^3)^4(1-t^5)" in out

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "r.json"
        code, _ = run(capsys, "search", "cy_codim4", "--json", "--out", str(target))
        assert json.loads(target.read_text())["candidate"]["codimension"] == 4

    def test_echo_reparses(self, capsys):
        code, rep = run_json(capsys, "search", "cy_codim4")
        assert parse_document(rep["input"]) == load_document("cy_codim4")


class TestCheck:
    @pytest.mark.parametrize("name", GOLDEN)
    def test_golden_pass(self, capsys, name):
        code, rep = run_json(capsys, "check", name)
        assert code == 0 and rep["ok"]

    def test_perturbed_N_fails_integrality(self, capsys, tmp_path):
        obj = doc_dict("cy_codim3")
        obj["curves"][0]["N"] += 1
        code, rep = run_json(capsys, "check", write(tmp_path, "p.json", obj))
        assert code == 1
        assert rep["integrality"]["ok"] is False
        assert "is not an integer" in rep["failure"]

    def test_bad_coprime(self, capsys, tmp_path):
        obj = doc_dict("cy_codim3")
        obj["curves"][0]["k"] = 3
        obj["curves"][0]["r"] = 6
        code, rep = run_json(capsys, "check", write(tmp_path, "c.json", obj))
        assert code == 3


def test_hilbert_command(capsys):
    code, rep = run_json(capsys, "hilbert", "pure_cubic", "--m-max", "4")
    assert code == 0
    assert rep["hilbert"]["coefficients"][:5] == ["1", "1", "8", "27", "64"]


def test_batch(capsys, tmp_path):
    src = tmp_path / "in"
    src.mkdir()
    for name in GOLDEN:
        write(src, f"{name}.json", doc_dict(name))
    out = tmp_path / "out"
    code, _ = run(capsys, "search", "--batch", str(src), "--out", str(out))
    assert code == 0
    rows = list(csv.DictReader((out / "summary.csv").open()))
    assert [r["name"] for r in rows] == GOLDEN
    assert rows[1]["weights"] == "1 1 2 3 3 3 3 5"
    assert rows[2]["codimension"] == "5"
    for name in GOLDEN:
        assert json.loads((out / f"{name}.json").read_text())["candidate"]
