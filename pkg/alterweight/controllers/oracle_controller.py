from typing import Optional

import click
from prettytable import PrettyTable

from alterweight.core.errors import ExitCode, ParseError
from alterweight.core.logging_config import main_logger, log_function_call
from alterweight.controllers.common import document_path, load, run_command
from alterweight.models.pa import PolyAutomaton
from alterweight.models.semiring import check_axioms, default_samples, get_semiring
from alterweight.models.wafa import Wafa
from alterweight.models.wfta import Wfta
from alterweight.models.words import render_word
from alterweight.schemas.reports import OracleReport
from alterweight.services.oracle_service import DerivedSeries, compare_derived, compare_documents

logger = main_logger

AXIOMS = [
    "add_identity", "mul_identity", "annihilation",
    "add_commutativity", "mul_commutativity",
    "add_associativity", "mul_associativity",
    "left_distributivity", "right_distributivity",
    "additive_inverse",
]


def report_oracle(report: OracleReport) -> ExitCode:
    if report.passed:
        click.echo(f"PASS ({report.words_checked} palabras, |w| ≤ {report.max_len})")
        return ExitCode.OK
    m = report.mismatch
    click.echo(f"FAIL, witness: {render_word(m.word)} ({m.left} vs {m.right})")
    return ExitCode.FAIL


@log_function_call(logger)
def run_oracle(file: str, other: Optional[str], derived: Optional[str], max_len: int) -> ExitCode:
    if (other is None) == (derived is None):
        raise ParseError("oracle necesita un segundo documento o --derived, exactamente uno de los dos")
    if derived is not None:
        return report_oracle(compare_derived(load(file, Wafa), DerivedSeries(derived), max_len))
    left = load(file, Wafa, PolyAutomaton, Wfta)
    right = load(other, Wafa, PolyAutomaton, Wfta)
    return report_oracle(compare_documents(left, right, max_len))


@click.command("oracle")
@click.argument("file", type=document_path)
@click.argument("other", type=document_path, required=False)
@click.option("--derived", type=click.Choice([d.value for d in DerivedSeries]), default=None,
              help="Compara el WAFA con una construcción derivada de él")
@click.option("--max-len", default=5, show_default=True, type=click.IntRange(min=0))
@click.pass_context
def oracle_command(ctx, file, other, derived, max_len):
    """Comparación exhaustiva de dos series en todas las palabras |w| ≤ max-len."""
    run_command(ctx, run_oracle, file, other, derived, max_len)


@click.group("semiring")
def semiring_group():
    """Utilidades de semianillos."""


@log_function_call(logger)
def semiring_check(name: str) -> ExitCode:
    desc = get_semiring(name)
    report = check_axioms(desc, default_samples(desc))
    violated = {v.axiom: v for v in report.violations}
    table = PrettyTable(["axioma", "estado", "testigo"])
    table.align = "l"
    for axiom in AXIOMS:
        if axiom == "additive_inverse" and not desc.has_subtraction:
            continue
        violation = violated.get(axiom)
        table.add_row([axiom, "falla" if violation else "ok", ", ".join(violation.witness) if violation else ""])
    click.echo(f"{desc.name}: {report.sample_count} elementos de muestra")
    click.echo(table.get_string())
    return ExitCode.OK if report.ok else ExitCode.FAIL


@semiring_group.command("check")
@click.argument("name")
@click.pass_context
def semiring_check_command(ctx, name):
    """Verifica los axiomas de semianillo conmutativo sobre la muestra fija."""
    run_command(ctx, semiring_check, name)
