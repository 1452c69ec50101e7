import json
import subprocess
import sys

import pytest

from qsymdp.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_poset(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def chain2(tmp_path):
    return write_poset(
        tmp_path,
        "chain2.json",
        {"elements": ["a", "b"], "lt1": [["a", "b"]], "lt2": [["a", "b"]]},
    )


@pytest.fixture
def antichain2(tmp_path):
    return write_poset(
        tmp_path, "anti2.json", {"elements": ["a", "b"], "lt1": [], "lt2": []}
    )


@pytest.fixture
def swap_group(tmp_path):
    path = tmp_path / "swap.json"
    path.write_text(json.dumps({"generators": [{"a": "b", "b": "a"}]}))
    return str(path)


@pytest.fixture
def trivial_group(tmp_path):
    path = tmp_path / "trivial.json"
    path.write_text(json.dumps({"generators": []}))
    return str(path)


def test_antipode_m(capsys):
    code, out, _ = invoke(capsys, "antipode-m", "(1,1)")
    assert code == 0
    assert out.strip() == "M(2) + M(1,1)"


def test_antipode_m_json(capsys):
    code, out, _ = invoke(capsys, "--json", "antipode-m", "(2)")
    assert code == 0
    assert json.loads(out) == [["-1", [2]]]


def test_antipode_m_bad_input(capsys):
    code, out, err = invoke(capsys, "antipode-m", "(1,0)")
    assert code == 2
    assert "error:" in err


def test_antipode_f(capsys):
    code, out, _ = invoke(capsys, "antipode-f", "(2)")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "conjugate: (1,1)"
    assert lines[1] == "M(1,1)"


def test_gamma(capsys, chain2):
    code, out, _ = invoke(capsys, "gamma", chain2)
    assert code == 0
    assert out.strip() == "M(2) + M(1,1)"


def test_gamma_with_weights(capsys, tmp_path):
    path = write_poset(
        tmp_path,
        "w.json",
        {
            "elements": ["a", "b"],
            "lt1": [["a", "b"]],
            "lt2": [["b", "a"]],
            "w": {"a": 2, "b": 1},
        },
    )
    code, out, _ = invoke(capsys, "gamma", path)
    assert code == 0
    assert out.strip() == "M(2,1)"


def test_gamma_cycle_is_input_error(capsys, tmp_path):
    path = write_poset(
        tmp_path,
        "cyc.json",
        {"elements": ["a", "b"], "lt1": [["a", "b"], ["b", "a"]], "lt2": []},
    )
    code, _, err = invoke(capsys, "gamma", path)
    assert code == 2
    assert "cycle" in err


def test_coproduct(capsys, chain2):
    code, out, _ = invoke(capsys, "coproduct", chain2)
    assert code == 0
    lines = out.strip().splitlines()
    assert all("(x)" in line for line in lines)
    # grouped by left factor: M(), M(1), M(2), M(1,1)
    assert len(lines) == 4


def test_product(capsys, chain2, antichain2):
    code, out, _ = invoke(capsys, "product", chain2, chain2)
    assert code == 0
    assert "M(" in out


def test_verify_antipode_pass(capsys, chain2):
    code, out, _ = invoke(capsys, "verify-antipode", chain2)
    assert code == 0
    assert out.strip().splitlines()[-1] == "PASS"


def test_verify_antipode_fail(capsys, tmp_path):
    path = write_poset(
        tmp_path,
        "bad.json",
        {"elements": ["a", "b"], "lt1": [["a", "b"]], "lt2": []},
    )
    code, out, _ = invoke(capsys, "verify-antipode", path)
    assert code == 1
    assert out.strip().splitlines()[-1] == "FAIL"


def test_equivariant(capsys, antichain2, swap_group):
    code, out, _ = invoke(capsys, "equivariant", antichain2, swap_group)
    assert code == 0
    assert out.strip() == "M(2) + M(1,1)"


def test_equivariant_plus(capsys, antichain2, swap_group):
    code, out, _ = invoke(capsys, "equivariant", antichain2, swap_group, "--plus")
    assert code == 0
    assert out.strip() == "M(1,1)"


def test_equivariant_bad_group(capsys, antichain2, tmp_path):
    path = tmp_path / "badgroup.json"
    path.write_text(json.dumps({"generators": [{"a": "a", "b": "a"}]}))
    code, _, err = invoke(capsys, "equivariant", antichain2, str(path))
    assert code == 2


def test_verify_equivariant(capsys, antichain2, swap_group):
    code, out, _ = invoke(capsys, "verify-equivariant", antichain2, swap_group)
    assert code == 0
    assert out.strip() == "PASS"


def test_order_poly(capsys, chain2, trivial_group):
    code, out, _ = invoke(capsys, "order-poly", chain2, trivial_group)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "binomial basis: 1*C(q,1) + 1*C(q,2)"
    assert lines[1] == "power basis: 1/2*q^1 + 1/2*q^2"


def test_order_poly_json(capsys, chain2, trivial_group):
    code, out, _ = invoke(capsys, "--json", "order-poly", chain2, trivial_group)
    assert code == 0
    doc = json.loads(out)
    assert doc["binomial"] == ["0", "1", "1"]


def test_reciprocity(capsys, chain2, trivial_group):
    code, out, _ = invoke(capsys, "reciprocity", chain2, trivial_group, "--q", "3")
    assert code == 0
    assert out.strip() == "PASS"


def test_reciprocity_non_tertispecial(capsys, tmp_path, trivial_group):
    path = write_poset(
        tmp_path,
        "bad.json",
        {"elements": ["a", "b"], "lt1": [["a", "b"]], "lt2": []},
    )
    code, _, err = invoke(capsys, "reciprocity", path, trivial_group, "--q", "2")
    assert code == 2


def test_schur(capsys):
    code, out, _ = invoke(capsys, "schur", "[2]")
    assert code == 0
    assert out.strip() == "M(2) + M(1,1)"


def test_schur_skew(capsys):
    code, out, _ = invoke(capsys, "schur", "[2,1]/[1]")
    assert code == 0
    assert out.strip() == "M(2) + 2*M(1,1)"


def test_schur_cell_cap(capsys):
    code, _, err = invoke(capsys, "schur", "[5,4]")
    assert code == 2
    assert "cells" in err
    code, out, _ = invoke(capsys, "schur", "[5,4]", "--max-cells", "9")
    assert code == 0


def test_verify_schur(capsys):
    code, out, _ = invoke(capsys, "verify-schur", "[2,2]/[1]")
    assert code == 0
    assert out.strip() == "PASS"


def test_selftest_deterministic():
    cmd = [sys.executable, "-m", "qsymdp.cli", "selftest", "--max-size", "2"]
    first = subprocess.run(cmd, capture_output=True, text=True)
    second = subprocess.run(cmd, capture_output=True, text=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout.strip().splitlines()[-1] == "selftest: PASS"
