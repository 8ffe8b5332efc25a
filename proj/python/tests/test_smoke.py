import json
import os
import pathlib

import pytest

import qcat

FIXTURES = pathlib.Path(os.environ.get("QCAT_FIXTURE_DIR", pathlib.Path(__file__).parents[2] / "fixtures"))


def test_builtin_quantale():
    q = qcat.builtin("chain_luk(3)")
    assert q.elements == ["0", "1/2", "1"]
    assert q.tensor("1/2", "1/2") == "0"
    assert q.hom("1/2", "0") == "1/2"
    assert q.check_residuation()["ok"]


def test_unknown_builtin_raises():
    with pytest.raises(qcat.QcatError) as info:
        qcat.builtin("chain_foo(3)")
    assert info.value.kind == "UnknownBuiltin"


def test_document_queries():
    doc = qcat.load_document(str(FIXTURES / "x2.qcat"))
    assert doc.objects("X2") == ["p", "q"]
    assert doc.closure("X2", ["q"]) == ["q"]
    assert doc.cauchy_degree("X2", "pre=[];per=[p,q]") == "1/2"
    assert doc.cauchy_complete("X2")["ok"]
    assert qcat.parse_document(doc.serialize()) == doc


def test_w_witness():
    doc = qcat.load_document(str(FIXTURES / "w.qcat"))
    r = doc.cauchy_complete("W")
    assert not r["ok"]
    assert r["lhs"] == "((0,1),(1,0))"


def test_suite_and_cli(tmp_path):
    r = qcat.run_suite("thm1", 7)
    assert r["failed"] == 0 and r["cases"] > 0
    assert "codirected" in qcat.suite_names()
    report = tmp_path / "w.json"
    code, out, _ = qcat.run_cli(["complete", str(FIXTURES / "w.qcat"), "--cat", "W", "--json", str(report)])
    assert code == 1
    assert json.loads(report.read_text())["verdict"] == "fail"
    assert qcat.run_cli(["replay", str(FIXTURES / "w.qcat"), str(report)])[0] == 0
    assert qcat.run_cli(["validate", str(FIXTURES / "malformed.qcat")])[0] == 2
