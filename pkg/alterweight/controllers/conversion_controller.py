import click
from prettytable import PrettyTable

from alterweight.core.errors import ExitCode
from alterweight.core.logging_config import main_logger, log_function_call
from alterweight.controllers.common import document_path, load, run_command
from alterweight.models.tree import TreeHomomorphism, generic_tree
from alterweight.models.wafa import Wafa
from alterweight.models.wfta import Wfta
from alterweight.models.words import all_words, render_word
from alterweight.services.conversion_service import wafa_to_wfta, wfta_hom_to_wafa
from alterweight.services.document_service import dump_document
from alterweight.services.nivat_service import WEIGHT_STATE, nivat_decompose, nivat_eval

logger = main_logger


@click.group("convert")
def convert_group():
    """Traducciones WAFA ↔ WFTA∘homomorfismo."""


@log_function_call(logger)
def convert_to_wfta(file: str) -> ExitCode:
    translation = wafa_to_wfta(load(file, Wafa))
    click.echo(dump_document(translation.wfta), nl=False)
    return ExitCode.OK


@convert_group.command("to-wfta")
@click.argument("file", type=document_path)
@click.pass_context
def to_wfta_command(ctx, file):
    """WAFA → WFTA B sobre Σ_#^r con ⟦B⟧(t^r_w) = ⟦A⟧(w)."""
    run_command(ctx, convert_to_wfta, file)


@log_function_call(logger)
def convert_to_wafa(file: str, hom_file: str) -> ExitCode:
    automaton = load(file, Wfta)
    hom = load(hom_file, TreeHomomorphism)
    click.echo(dump_document(wfta_hom_to_wafa(automaton, hom)), nl=False)
    return ExitCode.OK


@convert_group.command("to-wafa")
@click.argument("file", type=document_path)
@click.option("--hom", "hom_file", type=document_path, required=True, help="Homomorfismo desde árboles-palabra")
@click.pass_context
def to_wafa_command(ctx, file, hom_file):
    """WFTA B y homomorfismo h → WAFA A con ⟦A⟧(w) = ⟦B⟧(h(w))."""
    run_command(ctx, convert_to_wafa, file, hom_file)


@click.group("nivat")
def nivat_group():
    """Descomposición de Nivat de un WAFA."""


@log_function_call(logger)
def decompose_document(file: str) -> ExitCode:
    decomposition = nivat_decompose(load(file, Wafa))
    sr = decomposition.weights.semiring
    click.echo(f"rango: {decomposition.rank}")
    click.echo(f"letras de corrida: {len(decomposition.run_alphabet)}")
    click.echo(f"h lineal: {str(decomposition.hom.linear).lower()}")
    click.echo(f"h no borrador: {str(decomposition.hom.non_deleting).lower()}")
    click.echo(f"estados de A_w: {len(decomposition.weights.states)}")
    click.echo(f"L determinista y completo: {str(decomposition.consistency.is_complete()).lower()}")
    table = PrettyTable(["letra", "rango", "peso"])
    table.align = "l"
    for name, rank in decomposition.run_alphabet:
        weight = decomposition.weights.weight(name, (WEIGHT_STATE,) * rank, WEIGHT_STATE)
        table.add_row([name, rank, sr.render(weight)])
    click.echo(table.get_string())
    return ExitCode.OK


@nivat_group.command("decompose")
@click.argument("file", type=document_path)
@click.pass_context
def decompose_command(ctx, file):
    """Muestra Λ, h, L y A_w con sus propiedades."""
    run_command(ctx, decompose_document, file)


@log_function_call(logger)
def check_document(file: str, max_len: int) -> ExitCode:
    automaton = load(file, Wafa)
    decomposition = nivat_decompose(automaton)
    sr = automaton.semiring
    checked = 0
    for word in all_words(automaton.alphabet, max_len):
        expected = automaton.behavior(word)
        value = nivat_eval(decomposition, generic_tree(word, decomposition.rank))
        checked += 1
        if not sr.eq(expected, value):
            click.echo(f"FAIL, witness: {render_word(word)} ({sr.render(expected)} vs {sr.render(value)})")
            return ExitCode.FAIL
    click.echo(f"PASS ({checked} palabras)")
    return ExitCode.OK


@nivat_group.command("check")
@click.argument("file", type=document_path)
@click.option("--max-len", default=4, show_default=True, type=click.IntRange(min=0))
@click.pass_context
def check_command(ctx, file, max_len):
    """Contrasta nivat_eval(t^r_w) con ⟦A⟧(w) para |w| ≤ max-len."""
    run_command(ctx, check_document, file, max_len)
