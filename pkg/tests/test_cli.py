import json
import subprocess
import sys

import pytest

from covering_cycles import catalog
from covering_cycles.cli import run
from covering_cycles.graph import format_graph


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="g.txt"):
        path = tmp_path / name
        path.write_text(format_graph(g), encoding="utf-8")
        return str(path)

    return write


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() and "--format" not in argv else out), err


def test_census_rose2(capsys, graph_file):
    code, out, _ = invoke(capsys, "census", "-g", graph_file(catalog.rose(2)), "-N", "2")
    assert code == 0
    assert out == {"omega": {"2": "8"}, "theta": {"2": "4"}}


def test_census_range_is_ordered(capsys):
    code, out, _ = invoke(capsys, "census", "--builtin", "theta", "-N", "2..12")
    assert code == 0
    assert list(out["omega"]) == [str(N) for N in range(2, 13)]
    assert out["omega"]["12"] == str(2 * 2**12 - 8)


def test_euler_theta(capsys, graph_file):
    code, out, _ = invoke(capsys, "euler", "-g", graph_file(catalog.theta()))
    assert code == 0 and out == {"euler_cycles": "0"}


def test_euler_directed_reports_halving(capsys):
    code, out, err = invoke(capsys, "euler", "--builtin", "dircycle:3")
    assert code == 0
    assert out == {"hamiltonian_classes": "1", "halved_value": "1/2", "discrepancy": True}
    assert "halving" in err


def test_verify_cycle5(capsys, graph_file):
    code, out, _ = invoke(capsys, "verify", "--order", "8", "-g", graph_file(catalog.cycle(5)))
    assert code == 0
    assert out["passed"] is True
    assert all(item["passed"] for item in out["items"].values())
    assert out["determinant_product"] == "(1 - z^5)^2"


@pytest.mark.parametrize("route", ["exp", "partition", "determinant"])
def test_series_routes(capsys, route):
    code, out, _ = invoke(capsys, "series", "--builtin", "rose:2", "--route", route, "--sign", "plus")
    assert code == 0 and out["route"] == route
    assert out["d_plus"] == {str(n): str(4 * (n - 1)) for n in range(1, 9)}
    assert "d_minus" not in out


def test_oracle_subcommand(capsys):
    code, out, _ = invoke(capsys, "oracle", "--builtin", "theta", "-N", "1..6")
    assert code == 0 and out["discrepancies"] == []
    assert out["lengths"]["6"]["nonperiodic_classes"] == "20"


def test_oracle_cap_exit_code(capsys):
    code, _, err = invoke(capsys, "oracle", "--builtin", "rose:3", "-N", "8", "--oracle-cap", "100")
    assert code == 2 and "cap" in err


def test_parse_error_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("directed 0\nvertices two\n")
    code, _, _ = invoke(capsys, "census", "-g", str(bad))
    assert code == 1


def test_missing_file_exit_1(capsys, tmp_path):
    code, _, _ = invoke(capsys, "census", "-g", str(tmp_path / "nope.txt"))
    assert code == 1


def test_precondition_exit_2(capsys):
    assert invoke(capsys, "census", "--builtin", "rose:2", "-N", "0")[0] == 2
    assert invoke(capsys, "census", "--builtin", "cycle:9", "--subset-limit", "8")[0] == 2
    assert invoke(capsys, "census", "--builtin", "moebius")[0] == 2
    assert invoke(capsys, "verify", "--builtin", "cycle:5", "--order", "3")[0] == 2


def test_disconnected_input(capsys, graph_file):
    from covering_cycles.graph import MultiGraph

    path = graph_file(MultiGraph(4, ((0, 1), (1, 0), (2, 3), (3, 2))))
    assert invoke(capsys, "census", "-g", path)[0] == 2


def test_leaf_prune_warning(capsys, graph_file):
    g = catalog.small_undirected()["C4_pendant"]
    code, out, err = invoke(capsys, "census", "-g", graph_file(g), "-N", "4")
    assert code == 0
    assert out["omega"]["4"] == "8"
    assert "degree-1" in err


def test_table_format(capsys):
    code, out, _ = invoke(capsys, "census", "--builtin", "rose:2", "-N", "2", "--format", "table")
    assert code == 0
    assert out.splitlines() == ["omega.2  8", "theta.2  4"]


def test_output_is_deterministic(capsys):
    first = invoke(capsys, "verify", "--builtin", "theta")[1]
    second = invoke(capsys, "verify", "--builtin", "theta")[1]
    assert json.dumps(first) == json.dumps(second)


def test_big_integers_are_strings(capsys):
    _, out, _ = invoke(capsys, "census", "--builtin", "rose:3", "-N", "40")
    value = out["omega"]["40"]
    assert isinstance(value, str) and int(value) > 2**64


def test_plot_written(capsys, tmp_path):
    fig = tmp_path / "census.png"
    code, _, _ = invoke(capsys, "census", "--builtin", "theta", "--plot", str(fig))
    assert code == 0 and fig.stat().st_size > 0
    fig2 = tmp_path / "verify.png"
    assert invoke(capsys, "verify", "--builtin", "cycle:4", "--plot", str(fig2))[0] == 0
    assert fig2.stat().st_size > 0


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "covering_cycles.cli", "euler", "--builtin", "rose:2"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"euler_cycles": "2"}
