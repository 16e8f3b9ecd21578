import json

import pytest

from ordtop import cli, suite
from ordtop.classifiers import CheckCatalogResult
from ordtop.zoo import shipped_claim


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(data if isinstance(data, str) else json.dumps(data))
    return str(p)


def test_classify_p3(tmp_path, capsys):
    f = write(tmp_path, "p3.json", {"kind": "finite-poset", "elements": ["bot", "a", "b"],
                                    "order": [["bot", "a"], ["bot", "b"]]})
    code, rep, _ = run(capsys, "classify", "--space", f)
    assert code == 0
    assert rep["results"]["flags"]["sober"] is True and rep["results"]["flags"]["t1"] is False
    assert rep["tool"] == "ordtop" and rep["wall_clock"] is None
    assert rep["input_digest"].startswith("sha256:")


def test_classify_finite_space(tmp_path, capsys):
    f = write(tmp_path, "s.json", {"kind": "finite-space", "carrier": ["0", "1"], "opens": [[], ["1"], ["0", "1"]]})
    code, rep, _ = run(capsys, "classify", "--space", f)
    assert code == 0 and rep["results"]["flags"]["t1"] is False


def test_classify_zoo(tmp_path, capsys):
    f = write(tmp_path, "j.json", {"kind": "zoo", "id": "johnstone-scott"})
    code, rep, _ = run(capsys, "classify", "--space", f)
    assert code == 0
    assert {r["status"] for r in rep["results"]["curated"]} == {"VERIFIED", "ASSUMED"}


@pytest.mark.parametrize("content", ["{not json", '{"kind": "weird"}', '{"kind": "finite-poset"}',
                                     '{"kind": "finite-poset", "elements": ["x", "y"], "order": [["x", "y"], ["y", "x"]]}',
                                     '{"kind": "zoo", "id": "moon"}'])
def test_classify_bad_input(tmp_path, capsys, content):
    code, rep, err = run(capsys, "classify", "--space", write(tmp_path, "bad.json", content))
    assert code == 2 and rep is None and "ordtop:" in err


def test_unknown_named_poset(tmp_path, capsys):
    f = write(tmp_path, "v.json", {"kind": "finite-poset", "named": "V"})
    code, rep, err = run(capsys, "classify", "--space", f)
    assert code == 2 and rep is None and "'V'" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "classify", "--space", "/nonexistent/file.json")
    assert code == 2 and "cannot read" in err


@pytest.mark.parametrize("which,expected", [
    ("rd", [["bot"], ["a", "bot"], ["b", "bot"]]),
    ("kx", [["a"], ["b"], ["a", "b"], ["a", "b", "bot"]]),
])
def test_sets(tmp_path, capsys, which, expected):
    f = write(tmp_path, "p3.json", {"kind": "finite-poset", "named": "P3"})
    code, rep, _ = run(capsys, "sets", "--space", f, "--which", which)
    assert code == 0 and rep["results"]["family"] == expected


def test_sets_small_examples(tmp_path, capsys):
    a2 = write(tmp_path, "a2.json", {"kind": "finite-poset", "elements": ["a", "b"], "order": []})
    assert run(capsys, "sets", "--space", a2, "--which", "kx")[1]["results"]["family"] == [["a"], ["b"], ["a", "b"]]
    one = write(tmp_path, "one.json", {"kind": "finite-poset", "elements": ["*"], "order": []})
    assert run(capsys, "sets", "--space", one, "--which", "irr")[1]["results"]["family"] == [["*"]]


def test_sets_guards(tmp_path, capsys, monkeypatch):
    z = write(tmp_path, "z.json", {"kind": "zoo", "id": "cofinite-nat"})
    assert run(capsys, "sets", "--space", z, "--which", "rd")[0] == 2
    big = write(tmp_path, "big.json", {"kind": "finite-poset", "elements": list("abcdef"), "order": []})
    monkeypatch.setenv("ORDTOP_SIZE_LIMIT", "4")
    assert run(capsys, "sets", "--space", big, "--which", "kx")[0] == 2
    assert run(capsys, "sets", "--space", big, "--which", "nope")[0] == 2


def test_verify(tmp_path, capsys):
    code, rep, _ = run(capsys, "verify", "--claim", "cofinite-not-well-filtered")
    assert code == 0 and rep["results"]["verdict"]["status"] == "Verified"
    data = shipped_claim("cofinite-not-well-filtered").to_json()
    data["witness"]["open"] = "ALL"
    code, rep, _ = run(capsys, "verify", "--claim", write(tmp_path, "t.json", data))
    assert code == 1 and rep["results"]["verdict"]["status"] == "Refuted"
    data["witness"]["open"] = "PT(1,2)"
    assert run(capsys, "verify", "--claim", write(tmp_path, "g.json", data))[0] == 2


def test_refuted_report_replays(tmp_path, capsys):
    data = shipped_claim("johnstone-scott-not-strong-d").to_json()
    data["witness"]["point"] = "(2,1)"
    code, rep, _ = run(capsys, "verify", "--claim", write(tmp_path, "lit.json", data))
    assert code == 1
    again = write(tmp_path, "again.json", rep["results"]["claim"])
    code2, rep2, _ = run(capsys, "verify", "--claim", again)
    assert code2 == 1 and rep2["results"]["verdict"] == rep["results"]["verdict"]


def test_suite_small_and_deterministic(tmp_path, capsys):
    o1, o2 = str(tmp_path / "r1.json"), str(tmp_path / "r2.json")
    assert cli.main(["suite", "--max-size", "3", "--seed", "5", "--out", o1]) == 0
    assert cli.main(["suite", "--max-size", "3", "--seed", "5", "--out", o2]) == 0
    capsys.readouterr()
    b1, b2 = open(o1, "rb").read(), open(o2, "rb").read()
    assert b1 == b2
    rep = json.loads(b1)
    assert rep["results"]["labeled_counts"] == {"1": 1, "2": 3, "3": 19}
    assert rep["results"]["status"] == "PASS" and rep["seed"] == 5


def test_suite_dedup(capsys):
    code, rep, _ = run(capsys, "suite", "--max-size", "3", "--dedup")
    assert code == 0 and rep["results"]["exhaustive_instances"] == 1 + 2 + 5


@pytest.mark.parametrize("argv", [["--max-size", "9"], ["--max-size", "0"], ["--samples", "-1"], ["--seed", "x"]])
def test_suite_bad_flags(capsys, argv):
    assert run(capsys, "suite", *argv)[0] == 2


def test_forced_failure_serializes_and_replays(tmp_path, capsys, monkeypatch):
    real = suite.theorem_suite

    def broken(P):
        out = real(P)
        if P.n == 3 and len(P.leq) == 6:
            out.append(CheckCatalogResult("BROKEN", "FAIL", witness=sorted(P.leq)))
        return out

    monkeypatch.setattr(suite, "theorem_suite", broken)
    code, rep, _ = run(capsys, "suite", "--max-size", "3")
    assert code == 1
    fail = rep["results"]["failures"][0]
    assert fail["check"] == "BROKEN"
    f = write(tmp_path, "fail.json", fail["space"])
    code, rep2, _ = run(capsys, "suite", "--space", f)
    assert code == 1
    assert rep2["results"]["failures"][0]["check"] == "BROKEN"
    assert rep2["results"]["failures"][0]["witness"] == fail["witness"]


def test_zoo_listing(capsys):
    code, rep, _ = run(capsys, "zoo")
    assert code == 0 and set(rep["results"]) == {
        "cofinite-nat", "cocountable", "johnstone-scott", "johnstone-upper", "ex334-scott", "ex334-upper"}
    assert run(capsys, "zoo", "nowhere")[0] == 2
