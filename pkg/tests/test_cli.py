"""Command-line interface: outputs, exit codes, determinism."""

import json
import math

import pytest

from manalab import named_state, state_to_json
from manalab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_measure_strange_mana(capsys):
    code, out, _ = run(capsys, "measure", "--state", "strange", "--measures", "mana")
    assert code == 0
    assert out.strip() == f"mana = {math.log(5 / 3):.8f}"
    assert "0.51082562" in out


def test_measure_maxmixed_l1(capsys):
    code, out, _ = run(capsys, "measure", "--state", "maxmixed", "--dim", "3",
                       "--measures", "mana,l1")
    assert code == 0
    lines = dict(line.split(" = ") for line in out.strip().splitlines())
    assert float(lines["mana"]) == pytest.approx(0.0, abs=1e-8)
    assert float(lines["l1"]) == pytest.approx(1.0, abs=1e-8)
    assert float(lines["log_l1"]) == pytest.approx(0.0, abs=1e-8)


def test_measure_log_base_conversion(capsys):
    code, out, _ = run(capsys, "measure", "--state", "strange", "--measures", "mana",
                       "--log-base", "2")
    assert code == 0
    assert float(out.strip().split(" = ")[1]) == pytest.approx(math.log2(5 / 3), abs=1e-8)


def test_measure_state_file_sre2_stabilizer(tmp_path, capsys):
    path = tmp_path / "psi.json"
    path.write_text(state_to_json(named_state("basis", [0])))
    code, out, _ = run(capsys, "measure", "--state-file", str(path), "--measures", "sre2")
    assert code == 0
    assert float(out.strip().split(" = ")[1]) == pytest.approx(0.0, abs=1e-8)


def test_measure_noise_flag(capsys):
    code, out, _ = run(capsys, "measure", "--state", "strange", "--noise", "0.5",
                       "--measures", "mana")
    assert code == 0
    assert float(out.strip().split(" = ")[1]) == pytest.approx(math.log(11 / 9), abs=1e-8)


def test_measure_usage_errors(capsys):
    code, _, err = run(capsys, "measure", "--measures", "mana")
    assert code == 2 and "state" in err
    code, _, err = run(capsys, "measure", "--state", "nosuch")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "measure", "--state", "strange", "--measures", "bogus")
    assert code == 2


def test_verify_pass_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "thm1", "--trials", "10", "--seed", "7")
    assert code == 0
    assert "all" in out and "passed" in out
    assert "max deviation" in out


def test_verify_prop1(capsys):
    code, out, _ = run(capsys, "verify", "prop1", "--trials", "50")
    assert code == 0


def test_verify_wigner_axioms(capsys):
    code, out, _ = run(capsys, "verify", "wigner-axioms", "--trials", "20")
    assert code == 0


def test_verify_unknown_suite_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nosuite"])
    assert exc.value.code == 2


def test_figure_fig4a_values(tmp_path, capsys):
    path = tmp_path / "fig4a.csv"
    code, _, _ = run(capsys, "figure", "fig4a", "--output", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "p,I,m_l1,m_sre2,m_mana"
    assert len(lines) == 102
    last = [float(x) for x in lines[-1].split(",")]
    assert last[0] == 1.0
    assert last[4] == pytest.approx(math.log(15 / 9), abs=1e-10)
    first = [float(x) for x in lines[1].split(",")]
    assert first[1] == pytest.approx(math.log(3), abs=1e-10)  # I at p=0


def test_figure_fig4a_deterministic(tmp_path, capsys):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    run(capsys, "figure", "fig4a", "--output", str(p1))
    run(capsys, "figure", "fig4a", "--output", str(p2))
    assert p1.read_bytes() == p2.read_bytes()


def test_figure_fig3a_header_and_peak(tmp_path, capsys):
    path = tmp_path / "fig3a.csv"
    run(capsys, "figure", "fig3a", "--output", str(path))
    lines = path.read_text().splitlines()
    assert lines[0] == "lambda,I,m_l1,m_sre2,m_mana"
    assert len(lines) == 102
    last = [float(x) for x in lines[-1].split(",")]  # lambda = 1/sqrt2
    assert last[0] == pytest.approx(1 / math.sqrt(2), abs=1e-12)
    assert last[4] == pytest.approx(math.log(5 / 3), abs=1e-10)


def test_figure_fig3b_zero_endpoints(tmp_path, capsys):
    path = tmp_path / "fig3b.csv"
    run(capsys, "figure", "fig3b", "--output", str(path))
    lines = path.read_text().splitlines()
    first = [float(x) for x in lines[1].split(",")]
    last = [float(x) for x in lines[-1].split(",")]
    for row in (first, last):  # stabilizer endpoints: all four measures vanish
        assert max(abs(v) for v in row[1:]) < 1e-9


def test_figure_unwritable_path(capsys):
    code, _, err = run(capsys, "figure", "fig4a", "--output", "/nonexistent-dir/x.csv")
    assert code == 2 and "error:" in err


def test_maximize_d3(capsys):
    code, out, _ = run(capsys, "maximize", "--dim", "3", "--grid", "32", "--refine", "40")
    assert code == 0
    assert "bound not certified attained" in out
    best = float(out.splitlines()[0].split(" = ")[1])
    assert best == pytest.approx(math.log((1 + 4 * math.cos(math.pi / 9)) / 3), abs=1e-6)


def test_measure_parameterized_state(capsys):
    code, out, _ = run(capsys, "measure", "--state", "phi_lambda", "--params",
                       "0.7071067811865476", "--measures", "mana")
    assert code == 0
    assert float(out.strip().split(" = ")[1]) == pytest.approx(math.log(5 / 3), abs=1e-8)


def test_figure_fig2_zero_region_and_peak(tmp_path, capsys):
    path = tmp_path / "fig2.csv"
    run(capsys, "figure", "fig2", "--output", str(path))
    rows = [
        [float(x) for x in line.split(",")]
        for line in path.read_text().splitlines()[1:]
    ]
    for p, th, mm in rows:
        if p <= 2.0 / (2.0 + 3.0 * math.sin(2 * th)) :
            assert abs(mm) < 1e-12
    peak = max(mm for _, _, mm in rows)
    assert peak == pytest.approx(math.log(5 / 3), abs=1e-10)


def test_verify_failure_exit_code(capsys):
    from manalab.cli import Check, _print_checks

    code = _print_checks([Check("won't hold", deviation=1.0, tolerance=1e-10)])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL" in out and "1/1 checks failed" in out


def test_measure_bipartite_state_file(tmp_path, capsys):
    from manalab.oracles import csum_output

    out_state = csum_output("strange", 1.0)
    path = tmp_path / "pair.json"
    from manalab import state_to_json

    path.write_text(state_to_json(out_state))
    code, out, _ = run(capsys, "measure", "--state-file", str(path))
    assert code == 0
    lines = dict(line.split(" = ") for line in out.strip().splitlines())
    assert float(lines["mutual_mana"]) == pytest.approx(math.log(5 / 3), abs=1e-8)


def test_maximize_json_output(tmp_path, capsys):
    jpath = tmp_path / "result.json"
    code, _, _ = run(capsys, "maximize", "--dim", "3", "--grid", "16", "--refine", "30",
                     "--json", str(jpath))
    assert code == 0
    doc = json.loads(jpath.read_text())
    assert doc["grid"] == 16
    assert doc["best_value"] <= doc["bound"] + 1e-9
    assert all(len(v) == 2 for v in doc["argmax"])
