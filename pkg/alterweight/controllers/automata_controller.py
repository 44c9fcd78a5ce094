import click

from alterweight.core.errors import ExitCode
from alterweight.core.logging_config import main_logger, log_function_call
from alterweight.controllers.common import document_path, load, run_command, state_table
from alterweight.models.pa import PolyAutomaton
from alterweight.models.tree import parse_tree
from alterweight.models.wafa import Wafa
from alterweight.models.wfta import Dta, Wfta
from alterweight.models.words import parse_word
from alterweight.services.document_service import dump_document
from alterweight.services.normal_form_service import equalize, make_nice, make_pure
from alterweight.services.render_service import to_dot

logger = main_logger


@log_function_call(logger)
def evaluate_document(file: str, text: str, states: bool) -> ExitCode:
    obj = load(file, Wafa, PolyAutomaton, Wfta, Dta)
    if isinstance(obj, Dta):
        t = parse_tree(text, obj.alphabet)
        click.echo("1" if obj.accepts(t) else "0")
        if states:
            click.echo(f"estado: {obj.run(t)}")
        return ExitCode.OK

    sr = obj.semiring
    if isinstance(obj, Wfta):
        t = parse_tree(text, obj.alphabet)
        click.echo(sr.render(obj.behavior(t)))
        if states:
            click.echo(state_table(obj.states, obj.state_behavior(t), sr.render))
        return ExitCode.OK

    word = parse_word(text, obj.alphabet)
    click.echo(sr.render(obj.behavior(word)))
    if states:
        if isinstance(obj, Wafa):
            click.echo(state_table(obj.states, obj.state_behavior(word), sr.render))
        else:
            click.echo(state_table(obj.names(), obj.configuration(word), sr.render))
    return ExitCode.OK


@click.command("eval")
@click.argument("file", type=document_path)
@click.argument("text")
@click.option("--states", is_flag=True, help="Muestra también el valor de cada estado")
@click.pass_context
def eval_command(ctx, file, text, states):
    """Evalúa un WAFA o PA en una palabra, o un WFTA/DTA en un árbol."""
    run_command(ctx, evaluate_document, file, text, states)


@log_function_call(logger)
def normalize_document(file: str, nice: bool, pure: bool, equalized: bool) -> ExitCode:
    automaton = load(file, Wafa)
    result = make_nice(automaton)
    if pure:
        result = make_pure(result)
    if equalized:
        result = equalize(result)
    click.echo(dump_document(result), nl=False)
    return ExitCode.OK


@click.command("normalize")
@click.argument("file", type=document_path)
@click.option("--nice", is_flag=True, help="Formas (i)-(iii); es el paso por defecto")
@click.option("--pure", is_flag=True, help="Además todos los coeficientes valen 1")
@click.option("--equalize", "equalized", is_flag=True, help="Además todos los monomios de δ del mismo grado")
@click.pass_context
def normalize_command(ctx, file, nice, pure, equalized):
    """Normaliza un WAFA y escribe el documento resultante."""
    run_command(ctx, normalize_document, file, nice, pure, equalized)


@log_function_call(logger)
def render_document(file: str) -> ExitCode:
    click.echo(to_dot(load(file, Wafa, Wfta)))
    return ExitCode.OK


@click.command("render")
@click.argument("file", type=document_path)
@click.option("--dot", is_flag=True, default=True, help="Salida en formato DOT (única disponible)")
@click.pass_context
def render_command(ctx, file, dot):
    """Dibuja un WAFA (multiflechas) o un WFTA (hiperaristas) en DOT."""
    run_command(ctx, render_document, file)
