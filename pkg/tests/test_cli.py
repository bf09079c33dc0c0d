import json

import pytest

from starcentral.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_identity(capsys):
    code, out, _ = run(capsys, "check", "identity", "[z1,z2]*[z3,z4]")
    assert code == 0 and "holds" in out


def test_check_central_pass_and_fail(capsys):
    assert run(capsys, "check", "central", "jord(z1,z2)")[0] == 0
    code, out, _ = run(capsys, "check", "central", "y1")
    assert code == 1 and "y1 ->" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "central", "y1", "--json")
    data = json.loads(out)
    assert code == 1 and data["schema"].startswith("starcentral/") and "witness" in data


def test_char_p_check(capsys):
    assert run(capsys, "check", "central", "y1^3", "--char", "3", "--strategy", "symbolic")[0] == 0


def test_exit_codes_for_errors(capsys):
    assert run(capsys, "check", "identity", "y1*(")[0] == 2
    assert run(capsys, "check", "identity", "y1", "--char", "4")[0] == 3
    assert run(capsys, "check", "identity", "[y1,y2]", "--truncation", "1")[0] == 3
    assert run(capsys, "rank", "y1 + z1")[0] == 3
    assert run(capsys, "catalog", "get", "nothing")[0] == 3


@pytest.mark.parametrize("text, expected", [("z1*z2 - z2*z1", "z1*z2 - z2*z1"),
                                            ("jord(z1,z2)", "1/2*z1*z2 + 1/2*z2*z1"),
                                            ("adj(y1*z1)", "-1*z1*y1")])
def test_parse(capsys, text, expected):
    code, out, _ = run(capsys, "parse", text)
    assert code == 0 and out.strip() == expected


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "H10" in out
    code, out, _ = run(capsys, "catalog", "get", "H", "1")
    assert code == 0 and out.strip() == "y1*y2 - y2*y1"


def test_decompose_and_rank(capsys):
    code, out, _ = run(capsys, "decompose", "z1*y1", "--json")
    data = json.loads(out)
    assert code == 0 and data["frame"] == ["y1"]
    code, out, _ = run(capsys, "rank", "z1*y1")
    assert code == 0 and "(1,)" in out


def test_member(capsys, tmp_path):
    code, out, _ = run(capsys, "member", "--target", "[y2,z2,z1]-[y2,z1,z2]", "--gens", "b")
    assert code == 0 and "found" in out
    assert run(capsys, "member", "--target", "y1", "--gens", "I", "--mode", "ideal")[0] == 1
    gens = tmp_path / "gens.txt"
    gens.write_text("# generators\n[y1,y2]\n")
    code, out, _ = run(capsys, "member", "--target", "[y2,y1]", "--gens", str(gens), "--json")
    assert code == 0 and json.loads(out)["found"]


def test_verify_paper_subset(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "identities", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and len(data["claims"]) == 10


def test_verify_paper_truncation_one(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "identities", "--truncation", "1")
    assert code == 1 and "truncation-insufficient" in out and " fail " not in out
