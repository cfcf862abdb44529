import io
import json

import pytest

from fshopf.algebra import StructureAlgebra
from fshopf.cli import run
from fshopf.constructions import matrix_units_algebra, presets
from fshopf.errors import InputError
from fshopf.io import document_to_hopf, dumps, hopf_to_document, load_document


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", ["s3", "q8", "kac16", "sweedler4"])
def test_document_round_trip(name, tmp_path):
    H = presets(name)
    path = tmp_path / "h.json"
    path.write_text(dumps(hopf_to_document(H)))
    back = load_document(path)
    assert back.algebra == H.algebra
    assert back.comult == H.comult and back.counit == H.counit and back.antipode == H.antipode
    assert back.reps == H.reps


def test_bare_algebra_document():
    A = matrix_units_algebra(2)
    back = document_to_hopf(json.loads(dumps(hopf_to_document(A))))
    assert isinstance(back, StructureAlgebra) and back == A


def test_bad_documents(tmp_path):
    doc = hopf_to_document(presets("c2"))
    bad = dict(doc, mult=doc["mult"] + [[0, 0, 5, "1"]])
    with pytest.raises(InputError, match=r"mult\[4\]"):
        document_to_hopf(bad)
    with pytest.raises(InputError, match="malformed scalar"):
        document_to_hopf(dict(doc, counit=[[0, "0.5"]]))
    with pytest.raises(InputError, match="missing"):
        document_to_hopf({k: v for k, v in doc.items() if k != "antipode"})
    path = tmp_path / "broken.json"
    path.write_text('{\n "dim": 2,\n "mult": [\n')
    with pytest.raises(InputError, match="line 4"):
        load_document(path)


def test_exit_codes(tmp_path):
    assert call("indicators", "--preset", "s3")[0] == 0
    assert call("verify", "--preset", "kac16")[0] == 0
    assert call("decompose", "--preset", "c3")[0] == 3
    assert call("decompose", "--preset", "sweedler4")[0] == 3
    assert call("verify", "--preset", "sweedler4")[0] == 1
    assert call("indicators")[0] == 2
    assert call("bogus")[0] == 2
    path = tmp_path / "broken.json"
    path.write_text("{")
    code, _, err = call("verify", str(path))
    assert code == 2 and "line 1" in err


def test_indicators_json_report(tmp_path):
    path = tmp_path / "r.json"
    code, text, _ = call("indicators", "--preset", "kac16", "--m", "3", "--json", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["ok"] and doc["trace_S"] == "6" and doc["seed"] == 20_000_101
    assert [r["nu"]["2"] for r in doc["indicators"]] == ["1", "1", "1", "1", "1", "0", "0", "1", "-1", "1"]
    assert "Tr S = 6" in text


def test_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    first = call("indicators", "--preset", "d4", "--json", str(a))
    second = call("indicators", "--preset", "d4", "--json", str(b))
    assert first == second
    assert a.read_bytes() == b.read_bytes()


def test_seed_from_environment(tmp_path, monkeypatch):
    path = tmp_path / "r.json"
    monkeypatch.setenv("HOPF_SEED", "7")
    call("decompose", "--preset", "s3", "--json", str(path))
    assert json.loads(path.read_text())["seed"] == 7
    call("decompose", "--preset", "s3", "--seed", "9", "--json", str(path))
    assert json.loads(path.read_text())["seed"] == 9


def test_dump_then_verify_file(tmp_path):
    path = tmp_path / "q8.json"
    assert call("dump", "--preset", "q8", "-o", str(path))[0] == 0
    code, text, _ = call("indicators", str(path))
    assert code == 0 and "skew" in text


def test_eq1_and_sq2_commands():
    code, text, _ = call("eq1", "--preset", "d4", "--m", "2", "--m", "3")
    assert code == 0 and "FAIL" not in text
    code, text, _ = call("sq2", "--preset", "s3")
    assert code == 0 and text.count("in_span") == 3
