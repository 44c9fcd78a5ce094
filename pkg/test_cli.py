#!/usr/bin/env python3
"""
Pruebas de la interfaz de línea de comandos sobre los fixtures generados:
salidas, veredictos y códigos de salida
"""

import json
import os
import sys

import pytest
from click.testing import CliRunner

# Agregar el directorio del proyecto al path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from alterweight import __version__
from alterweight.core.errors import ExitCode
from alterweight.main import cli
from alterweight.models.tree import generic_hom, generic_tree
from alterweight.scripts.fixtures import write_fixtures
from alterweight.services.document_service import dump_document, parse_document


@pytest.fixture
def fixtures_dir(tmp_path):
    write_fixtures(str(tmp_path))
    return tmp_path


@pytest.fixture
def invoke(fixtures_dir):
    runner = CliRunner()

    def run(*args):
        resolved = [str(fixtures_dir / a) if a.endswith(".json") else a for a in args]
        result = runner.invoke(cli, resolved)
        print(f"🧪 {' '.join(args)} → {result.exit_code}")
        return result

    return run


def test_version():
    result = CliRunner().invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.stdout


@pytest.mark.parametrize("file, word, expected", [
    ("square_tower.json", "aab", "16"),
    ("square_tower.json", "ba", "0"),
    ("square_tower.json", "ε", "1"),
    ("square_tower.pa.json", "baa", "16"),
])
def test_eval(invoke, file, word, expected):
    result = invoke("eval", file, word)
    assert result.exit_code == ExitCode.OK
    assert result.stdout.strip() == expected


def test_eval_with_states(invoke):
    result = invoke("eval", "square_tower.json", "b", "--states")
    assert result.exit_code == ExitCode.OK
    assert result.stdout.splitlines()[0] == "2"
    assert "estado" in result.stdout


def test_eval_unknown_letter(invoke):
    result = invoke("eval", "square_tower.json", "abc")
    assert result.exit_code == ExitCode.RUNTIME_ERROR
    assert "Error:" in result.stderr


def test_invalid_json_is_a_parse_error(invoke, fixtures_dir):
    (fixtures_dir / "broken.json").write_text("{", encoding="utf-8")
    result = invoke("eval", "broken.json", "a")
    assert result.exit_code == ExitCode.PARSE_ERROR
    assert "Error:" in result.stderr
    assert result.stdout == ""


def test_non_ascii_coefficient_is_a_parse_error(invoke, fixtures_dir):
    """Un coeficiente "²" es un documento mal formado (2), no un FAIL (1)"""
    data = json.loads((fixtures_dir / "square_tower.json").read_text(encoding="utf-8"))
    data["final"]["p"] = "²"
    (fixtures_dir / "superscript.json").write_text(json.dumps(data, ensure_ascii=False), encoding="utf-8")
    result = invoke("eval", "superscript.json", "a")
    assert result.exit_code == ExitCode.PARSE_ERROR
    assert "Error:" in result.stderr
    assert result.stdout == ""


def test_wrong_document_kind(invoke):
    result = invoke("pa", "zeroness", "square_tower.json")
    assert result.exit_code == ExitCode.PARSE_ERROR
    assert "se esperaba un documento pa" in result.stderr


def test_normalize_pure(invoke):
    result = invoke("normalize", "square_tower.json", "--pure")
    assert result.exit_code == ExitCode.OK
    automaton = parse_document(json.loads(result.stdout))
    assert automaton.is_pure()
    assert automaton.behavior(["a", "a", "b"]) == 16


def test_convert_round_trip(invoke, fixtures_dir):
    result = invoke("convert", "to-wfta", "square_tower.json")
    assert result.exit_code == ExitCode.OK
    wfta = parse_document(json.loads(result.stdout))
    assert wfta.behavior(generic_tree(["a", "a", "b"], 2)) == 16

    (fixtures_dir / "square_tower.wfta.json").write_text(result.stdout, encoding="utf-8")
    (fixtures_dir / "generic2.hom.json").write_text(dump_document(generic_hom(["a", "b"], 2)), encoding="utf-8")
    result = invoke("convert", "to-wafa", "square_tower.wfta.json", "--hom", "generic2.hom.json")
    assert result.exit_code == ExitCode.OK
    automaton = parse_document(json.loads(result.stdout))
    assert automaton.behavior(["a", "a", "b"]) == 16
    assert automaton.behavior(["b", "a"]) == 0


def test_nivat(invoke):
    result = invoke("nivat", "decompose", "square_tower.json")
    assert result.exit_code == ExitCode.OK
    assert "rango: 2" in result.stdout
    assert "h lineal: true" in result.stdout
    assert "h no borrador: true" in result.stdout
    assert "estados de A_w: 1" in result.stdout

    result = invoke("nivat", "check", "square_tower.json", "--max-len", "3")
    assert result.exit_code == ExitCode.OK
    assert result.stdout.strip() == "PASS (15 palabras)"


def test_zeroness_verdicts(invoke):
    result = invoke("pa", "zeroness", "zero_squares.pa.json")
    assert result.exit_code == ExitCode.OK
    assert result.stdout.startswith("ZERO")
    assert "certificado (grlex" in result.stdout

    result = invoke("wafa", "zeroness", "square_tower_rat.json")
    assert result.exit_code == ExitCode.FAIL
    assert "NONZERO, witness: ε" in result.stdout
    assert "valor: 1" in result.stdout


def test_zeroness_requires_rationals(invoke):
    result = invoke("wafa", "zeroness", "square_tower.json")
    assert result.exit_code == ExitCode.RUNTIME_ERROR
    assert "ℚ" in result.stderr


def test_zeroness_budgets(invoke):
    assert invoke("pa", "zeroness", "stress.pa.json").exit_code == ExitCode.OK
    result = invoke("pa", "zeroness", "stress.pa.json", "--max-degree", "2")
    assert result.exit_code == ExitCode.RESOURCE_EXHAUSTED
    assert "presupuesto" in result.stderr
    assert invoke("pa", "zeroness", "stress.pa.json", "--max-steps", "2").exit_code == ExitCode.RESOURCE_EXHAUSTED


def test_equivalence(invoke):
    result = invoke("wafa", "equiv", "square_tower_rat.json", "square_tower_tau3_rat.json")
    assert result.exit_code == ExitCode.FAIL
    assert "NOT EQUAL, witness: b" in result.stdout
    assert "valores: 2 vs 3" in result.stdout

    result = invoke("pa", "equiv", "pow2_pair.pa.json", "pow2_single.pa.json")
    assert result.exit_code == ExitCode.OK
    assert result.stdout.startswith("EQUAL")


def test_pa_eval(invoke):
    result = invoke("pa", "eval", "pow2_pair.pa.json", "aaa")
    assert result.exit_code == ExitCode.OK
    assert result.stdout.strip() == "8"


def test_groebner_basis(invoke):
    result = invoke("groebner", "basis", "ideal.json")
    assert result.exit_code == ExitCode.OK
    assert result.stdout.splitlines() == ["orden: grlex", "x2^2 - 1", "x1 - x2", "auditoría: ok"]

    result = invoke("groebner", "basis", "ideal.json", "--order", "lex")
    assert result.stdout.splitlines() == ["orden: lex", "x1 - x2", "x2^2 - 1", "auditoría: ok"]


def test_oracle(invoke):
    result = invoke("oracle", "square_tower.json", "--derived", "to-wfta", "--max-len", "3")
    assert result.exit_code == ExitCode.OK
    assert result.stdout.strip() == "PASS (15 palabras, |w| ≤ 3)"

    result = invoke("oracle", "square_tower_rat.json", "square_tower.pa.json", "--max-len", "3")
    assert result.exit_code == ExitCode.OK

    result = invoke("oracle", "square_tower_rat.json", "square_tower_tau3_rat.json", "--max-len", "2")
    assert result.exit_code == ExitCode.FAIL
    assert result.stdout.strip() == "FAIL, witness: b (2 vs 3)"


def test_oracle_needs_exactly_one_comparison(invoke):
    result = invoke("oracle", "square_tower.json", "square_tower.json", "--derived", "nice")
    assert result.exit_code == ExitCode.PARSE_ERROR
    assert invoke("oracle", "square_tower.json").exit_code == ExitCode.PARSE_ERROR


def test_render(invoke):
    result = invoke("render", "square_tower.json")
    assert result.exit_code == ExitCode.OK
    assert "digraph" in result.stdout


def test_semiring_check(invoke):
    result = invoke("semiring", "check", "rat")
    assert result.exit_code == ExitCode.OK
    assert "additive_inverse" in result.stdout
    assert invoke("semiring", "check", "reals").exit_code == ExitCode.PARSE_ERROR


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
