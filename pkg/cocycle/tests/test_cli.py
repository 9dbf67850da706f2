"""
Tests de la interfaz de línea de comandos: códigos de salida y salida JSON.
"""

import contextlib
import io
import json
import os
import sys
import tempfile
from unittest import mock

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from cocycle.config import EMOJIS
from cocycle.core.exceptions import MatrixError
from cocycle.main import main
from cocycle.tests.fixtures import fixture_path


def _run(*argv):
    """Ejecuta la CLI con un settings.yaml vacío; devuelve (código, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with tempfile.TemporaryDirectory() as tmp:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(["--data-dir", tmp] + list(argv))
    return code, out.getvalue(), err.getvalue()


def _run_json(*argv):
    code, out, err = _run(*argv, "--format", "json")
    return code, json.loads(out) if out else None, err


def test_analyze_json():
    code, report, _ = _run_json("analyze", fixture_path("four_vertex.json"), "--tree", "e1,e2,e3")
    assert code == 0
    assert report['passed'] is True
    assert report['data']['permutation'] == ["e1", "e2", "e3", "e4", "e5"]
    assert report['matrices']['K'] == [["3", "-1"], ["-1", "3"]]
    assert report['matrices']['omega'] == [["0", "1"], ["1", "-1"], ["1", "0"]]
    assert report['data']['char_K'] == "x**2 - 6*x + 8"


def test_analyze_tree_change():
    code, report, _ = _run_json("analyze", fixture_path("four_vertex.json"), "--tree2", "e1,e3,e4")
    assert code == 0
    change = [s for s in report['sections'] if s['title'] == "Cambio de árbol"][0]
    assert change['values']['S'] == [["1", "0"], ["1", "1"]]
    assert change['values']['spectra_differ'] is True


def test_analyze_text():
    code, out, _ = _run("analyze", fixture_path("triangle.json"))
    assert code == 0
    assert "K" in out
    assert "✅" in out
    assert f"{EMOJIS['spectrum']} Espectros" in out
    assert f"{EMOJIS['tree']} Árbol: " in out
    assert f"{EMOJIS['timer']} Tiempo: " in out

    code, out, _ = _run("thermo", fixture_path("four_vertex.json"), fixture_path("state_c4.json"))
    assert code == 0
    assert f"{EMOJIS['thermo']} Leyes de Kirchhoff" in out


def test_count_trees():
    for name, count in (("four_vertex.json", 8), ("triangle.json", 3), ("edge.json", 1)):
        code, report, _ = _run_json("count-trees", fixture_path(name))
        assert code == 0
        assert report['data']['spanning_trees'] == count
        assert report['data']['det_K'] == str(count)


def test_dual():
    code, report, _ = _run_json("dual", fixture_path("four_vertex.json"))
    assert code == 0
    dual = report['data']['dual']
    assert dual['vertices'] == ["f1", "f2", "f3"]
    assert sorted(dual['tree']) == ["e4", "e5"]


def test_thermo():
    code, report, _ = _run_json("thermo", fixture_path("four_vertex.json"), fixture_path("state_c4.json"))
    assert code == 0
    assert report['data']['sigma'] == "3"
    assert report['data']['sigma_vortex'] == "3"
    assert report['data']['kcl'] is True
    assert report['data']['kvl'] is False


def test_verify_random():
    code, report, _ = _run_json("verify", "--random", "2", "--seed", "1", "--max-v", "4", "--max-e", "6")
    assert code == 0
    assert report['data']['failures'] == 0
    assert report['inputs']['cases'] == 2


def test_input_errors():
    code, _, err = _run("count-trees", fixture_path("no_such_graph.json"))
    assert code == 2
    assert "no_such_graph.json" in err

    code, _, err = _run("dual", fixture_path("loop.json"))
    assert code == 2
    assert "rotations" in err

    code, _, _ = _run("analyze", fixture_path("four_vertex.json"), "--tree", "e1,e2")
    assert code == 2


def test_broken_identities_exit_one():
    with mock.patch("cocycle.main.entropy_production",
                    side_effect=ArithmeticError("sigma = 3 != 2 + 0")):
        code, out, err = _run("thermo", fixture_path("four_vertex.json"), fixture_path("state_c4.json"))
    assert code == 1
    assert out == ""
    assert "sigma = 3 != 2 + 0" in err

    with mock.patch("cocycle.main.build_projections",
                    side_effect=MatrixError("Proyecciones inconsistentes: P + Q = I")):
        code, _, err = _run("analyze", fixture_path("four_vertex.json"))
    assert code == 1
    assert "Proyecciones inconsistentes" in err


def _run_in(data_dir, *argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(["--data-dir", data_dir] + list(argv) + ["--format", "json"])
    return code, json.loads(out.getvalue()) if out.getvalue() else None, err.getvalue()


def test_settings_command():
    with tempfile.TemporaryDirectory() as tmp:
        code, report, _ = _run_in(tmp, "settings")
        assert code == 0
        assert report['data']['settings']['random_suite']['cases'] == 200

        code, report, _ = _run_in(tmp, "settings", "--set", "random_suite.cases=3",
                                  "--set", "tolerances.float=1e-8")
        assert code == 0
        assert report['data']['settings']['random_suite']['cases'] == 3
        assert report['data']['settings']['tolerances']['float'] == 1e-8

        # El valor guardado lo recoge la siguiente invocación
        code, report, _ = _run_in(tmp, "verify", "--max-v", "3", "--max-e", "4")
        assert report['inputs']['cases'] == 3

        code, report, _ = _run_in(tmp, "settings", "--reset")
        assert report['data']['settings']['random_suite']['cases'] == 200


def test_settings_command_errors():
    with tempfile.TemporaryDirectory() as tmp:
        code, _, err = _run_in(tmp, "settings", "--set", "random_suite.cases")
        assert code == 2
        assert "seccion.clave=valor" in err

        code, _, err = _run_in(tmp, "settings", "--set", "random_suite.cases=-1")
        assert code == 2
        assert "random_suite.cases" in err
