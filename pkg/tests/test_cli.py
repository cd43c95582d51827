from __future__ import annotations

import io
import subprocess
import sys

import pytest

from leavitt.cli import data_dir, run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue().strip()


@pytest.mark.parametrize("argv,expected", [
    (["nf", "1*[v|v]", "--graph", "g_2loop"], "1*[a|a] + 1*[b|b]"),
    (["nf", "1*[v|v] + 1*[a|a]", "--graph", "g_2loop"], "2*[a|a] + 1*[b|b]"),
    (["mul", "1*[a|b]", "1*[b|v]", "--graph", "g_2loop"], "1*[a|v]"),
    (["add", "1*[a|a]", "1*[b|b]", "--graph", "g_2loop", "--depth", "0"], "1*[a|a] + 1*[b|b]"),
    (["star", "(2+i)*[a|v]", "--graph", "g_2loop", "--ring", "gauss"], "(2-i)*[v|a]"),
    (["deg", "1*[a.b|a]", "--graph", "g_2loop"], "Homogeneous(1)"),
    (["deg", "1*[a|v] + 1*[v|a]", "--graph", "g_2loop"], "Mixed"),
    (["isnorm", "1*[a|b]", "--graph", "g_2loop"], "true"),
    (["dom", "1*[a|b]", "--graph", "g_2loop"], "{b}"),
    (["ran", "1*[a|b]", "--graph", "g_2loop"], "{a}"),
    (["alpha", "1*[a|b]", "--graph", "g_2loop", "--at", "b(a)^inf"], "(a)^inf"),
    (["alpha", "1*[a|b]", "--graph", "g_2loop"], "b -> a"),
    (["compress", "1*[e|v]", "--graph", "g_loop", "--at", "(e)^inf"], "(1, 1)"),
    (["weyl-eq", "1*[e|v]", "(e)^inf", "1*[e.e|e]", "(e)^inf", "--graph", "g_loop"], "true"),
    (["phi", "((e)^inf, 1, (e)^inf)", "--graph", "g_loop"], "[(1*[e|v], (e)^inf)]"),
    (["phi-inv", "[(2*[e.e|e], (e)^inf)]", "--graph", "g_loop"], "((e)^inf, 1, (e)^inf)"),
    (["kappa", "a.b(a)^inf", "--spec", "swap-g_2loop"], "b.a(b)^inf"),
])
def test_golden_outputs(argv, expected):
    assert call(*argv) == (0, expected)


def test_negative_literal_is_not_an_option():
    assert call("nf", "-1*[a|b]", "--graph", "g_2loop") == (0, "-1*[a|b]")


def test_failing_verdicts_exit_one():
    assert call("isnorm", "1*[a|v] + 1*[b|v]", "--graph", "g_2loop") == (1, "false")
    assert call("isdiag", "1*[a|b]", "--graph", "g_2loop") == (1, "false")
    code, text = call("weyl-eq", "1*[e|v]", "(e)^inf", "1*[v|v]", "(e)^inf", "--graph", "g_loop")
    assert (code, text) == (1, "false")


def test_verify_iso():
    code, text = call("verify-iso", "--spec", "identity-g_2loop")
    assert code == 0 and text.splitlines()[-1].startswith("PASS")
    code, text = call("verify-iso", "--spec", "duplicate-edge")
    assert code == 1 and "FAIL L3: s_a* s_b = 1*[v|v]" in text
    code, text = call("verify-iso", "--spec", "skew")
    assert code == 1 and "FAIL diagonal-preservation" in text


def test_parse_errors_exit_two(capsys):
    assert run(["nf", "1*[a|q]", "--graph", "g_2loop"], io.StringIO()) == 2
    assert "line 1, column 6" in capsys.readouterr().err
    assert run(["nf", "1*[a|a]"], io.StringIO()) == 2
    assert run(["nf", "1*[a|a]", "--graph", "no-such-graph"], io.StringIO()) == 2
    assert run(["mul", "1*[a|a]", "--graph", "g_2loop"], io.StringIO()) == 2
    assert run(["frobnicate"], io.StringIO()) == 2


def test_graph_file_argument(tmp_path):
    p = tmp_path / "two.graph"
    p.write_text("vertex x\nedge p range=x source=x\nedge q range=x source=x\n")
    assert call("nf", "1*[x|x]", "--graph", str(p)) == (0, "1*[p|p] + 1*[q|q]")
    bad = tmp_path / "src.graph"
    bad.write_text("vertex x\nvertex y\nedge p range=x source=y\n")
    assert run(["nf", "1*[x|x]", "--graph", str(bad)], io.StringIO()) == 2


def test_pi_from_omega_round_trip(tmp_path):
    code, text = call("pi-from-omega", "swap-g_cycle2")
    assert code == 0 and text.endswith("# validate_pi: PASS")
    spec = tmp_path / "recovered.iso"
    spec.write_text(text.replace("g_cycle2.graph", str(data_dir() / "g_cycle2.graph")))
    code, again = call("verify-iso", "--spec", str(spec))
    assert code == 0


def test_induce_groupoid_iso_and_stone_check():
    code, text = call("induce-groupoid-iso", "--spec", "swap-g_2loop", "--depth", "1")
    assert code == 0 and "Z(a,v) -> 1*[b|v]" in text
    code, text = call("stone-check", "--spec", "conjugate-g_2loop")
    assert code == 0 and "diagonal values preserved: false" in text


def test_check_props_is_deterministic():
    argv = ["check-props", "--graph", "g_cycle2e", "--suite", "weyl", "--count", "5", "--seed", "7"]
    first, second = call(*argv), call(*argv)
    assert first == second and first[0] == 0
    assert first[1].splitlines()[-1].startswith("PASS")


def test_console_module_entry_point():
    done = subprocess.run([sys.executable, "-m", "leavitt.cli", "mul", "1*[a|b]", "1*[b|v]",
                           "--graph", "g_2loop"], capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout.strip() == "1*[a|v]"
