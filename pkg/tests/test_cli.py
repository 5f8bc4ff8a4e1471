"""Command-line interface: outputs, exit codes, config plumbing."""

import json

import pytest

from cographmean.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_mean_of_cotree_expression(capsys):
    code, out, _ = run(capsys, "mean", "J(L,U(L,L,L))")
    assert code == 0
    assert out.strip() == "23/11"


def test_mean_of_single_vertex(capsys):
    code, out, _ = run(capsys, "mean", "@")
    assert code == 0 and out.strip() == "1"


def test_local_mean_via_graph6(capsys):
    # Bw is the triangle; every vertex has local polynomial x + 2x^2 + x^3
    code, out, _ = run(capsys, "mean", "Bw", "--local", "1")
    assert code == 0 and out.strip() == "2"


def test_mean_multiple_quantities_and_poly(capsys):
    # the selector flags replace the default global-mean output
    code, out, _ = run(capsys, "mean", "J(L,L,L)", "--mstar", "--density", "--poly")
    assert code == 0
    lines = dict(line.split("\t", 1) for line in out.strip().splitlines())
    assert "mean" not in lines
    assert lines["mstar"] == "9/4"
    assert lines["density"] == "4/7"
    assert json.loads(lines["poly"]) == {"n": 3, "coeffs": ["3", "3", "1"]}


def test_mean_decimal_marking(capsys):
    code, out, _ = run(capsys, "mean", "J(L,U(L,L,L))", "--decimal")
    assert code == 0
    assert out.strip() == "23/11 ~2.090909090909"


def test_mean_falls_back_to_bruteforce_for_non_cographs(capsys):
    # Bg is the 3-path (a cograph); DQc is order 5 with an induced 4-path
    code, out, _ = run(capsys, "mean", "DQc")
    assert code == 0


def test_cotree_only_rejects_p4(capsys):
    # the 4-path in graph6
    from cographmean import emit_graph6, from_edge_list

    p4 = emit_graph6(from_edge_list(4, [(0, 1), (1, 2), (2, 3)]))
    code, _, err = run(capsys, "mean", p4, "--cotree-only")
    assert code == 2
    assert "error" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "mean", "J(L")
    assert code == 2 and "error" in err


def test_brute_force_cap_flag(capsys):
    from cographmean import emit_graph6, from_edge_list

    p5 = emit_graph6(from_edge_list(5, [(i, i + 1) for i in range(4)]))
    code, _, err = run(capsys, "mean", p5, "--brute-force-cap", "4")
    assert code == 2 and "cap" in err


def test_brute_force_cap_env(capsys, monkeypatch):
    from cographmean import emit_graph6, from_edge_list

    monkeypatch.setenv("COGRAPHMEAN_BRUTE_FORCE_CAP", "4")
    p5 = emit_graph6(from_edge_list(5, [(i, i + 1) for i in range(4)]))
    code, _, err = run(capsys, "mean", p5)
    assert code == 2 and "cap" in err


def test_flag_overrides_env(capsys, monkeypatch):
    from cographmean import emit_graph6, from_edge_list

    monkeypatch.setenv("COGRAPHMEAN_BRUTE_FORCE_CAP", "4")
    p5 = emit_graph6(from_edge_list(5, [(i, i + 1) for i in range(4)]))
    code, out, _ = run(capsys, "mean", p5, "--brute-force-cap", "24")
    assert code == 0


def test_reliability_triangle(capsys):
    code, out, _ = run(capsys, "reliability", "Bw", "--p", "1/2")
    assert code == 0 and out.strip() == "7/8"


def test_reliability_edgeless_pair(capsys):
    code, out, _ = run(capsys, "reliability", "U(L,L)", "--p", "1/2")
    assert code == 0 and out.strip() == "1/2"


def test_reliability_rejects_bad_probability(capsys):
    code, _, err = run(capsys, "reliability", "Bw", "--p", "3/2")
    assert code == 2


def test_enumerate_cographs(capsys):
    code, out, _ = run(capsys, "enumerate", "cographs", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 10
    assert lines == sorted(lines)


def test_enumerate_connected_cographs_order2(capsys):
    code, out, _ = run(capsys, "enumerate", "connected-cographs", "2")
    assert code == 0 and out.strip() == "J(L,L)"


def test_enumerate_emit_graph6(capsys):
    code, out, _ = run(capsys, "enumerate", "connected-graphs", "3")
    assert code == 0
    assert set(out.strip().splitlines()) == {"BW", "Bw"}


def test_enumerate_shard_union(capsys):
    _, full, _ = run(capsys, "enumerate", "cographs", "5")
    parts = []
    for i in range(3):
        _, out, _ = run(capsys, "enumerate", "cographs", "5", "--shard", f"{i}/3")
        parts.extend(out.strip().splitlines())
    assert sorted(parts) == sorted(full.strip().splitlines())


def test_verify_table1_json(capsys):
    code, out, _ = run(capsys, "verify", "table1")
    assert code == 0
    payload = json.loads(out)
    assert payload["suite"] == "table1"
    assert all(v["status"] == "PASS" for v in payload["verdicts"])


def test_verify_table2_small(capsys):
    code, out, _ = run(capsys, "verify", "table2", "--nmax", "5")
    assert code == 0


def test_verify_output_is_deterministic(capsys):
    _, out1, _ = run(capsys, "verify", "table1")
    _, out2, _ = run(capsys, "verify", "table1")
    assert out1 == out2


def test_verify_tsv_format(capsys):
    code, out, _ = run(capsys, "verify", "inequalities", "--nmax", "16", "--format", "tsv")
    assert code == 0
    assert out.splitlines()[0].split("\t")[0].strip() == "suite"


def test_verify_golden_table1(capsys):
    code, out, _ = run(capsys, "verify", "table1", "--golden")
    assert code == 0
    payload = json.loads(out)
    assert any(v["theorem"] == "golden-diff-table1" for v in payload["verdicts"])


def test_unknown_suite_exit_code(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify", "nonsense"])
    assert err.value.code == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["mean"])
    assert err.value.code == 2
