from typing import Optional

import click

from alterweight.core.errors import ExitCode
from alterweight.core.logging_config import main_logger, log_function_call
from alterweight.controllers.common import document_path, load, run_command
from alterweight.models.groebner import GroebnerBasis, Ideal
from alterweight.models.pa import EquivalenceVerdict, PolyAutomaton, ZeronessVerdict
from alterweight.models.polynomial import MonomialOrder
from alterweight.models.semiring import SemiringDescriptor
from alterweight.models.wafa import Wafa
from alterweight.models.words import parse_word, render_word
from alterweight.services.groebner_service import audit, buchberger
from alterweight.services.zeroness_service import pa_equivalence, wafa_equivalence, wafa_zeroness, zeroness

logger = main_logger

budget_options = [
    click.option("--max-steps", type=click.IntRange(min=1), default=None,
                 help="Pasos de saturación (ALTERWEIGHT_ZERONESS_MAX_STEPS)"),
    click.option("--max-degree", type=click.IntRange(min=0), default=None,
                 help="Grado máximo de un generador (ALTERWEIGHT_ZERONESS_MAX_DEGREE)"),
]


def with_budget(func):
    for option in reversed(budget_options):
        func = option(func)
    return func


def echo_certificate(basis: GroebnerBasis):
    click.echo(f"certificado ({basis.order.value}, {len(basis)} generadores):")
    for g in basis.generators:
        click.echo(f"  {g.render()}")


def report_zeroness(verdict: ZeronessVerdict, sr: SemiringDescriptor) -> ExitCode:
    if verdict.is_zero:
        click.echo(verdict.kind.value)
        echo_certificate(verdict.certificate)
        return ExitCode.OK
    click.echo(f"{verdict.kind.value}, witness: {render_word(verdict.witness)}")
    click.echo(f"valor: {sr.render(verdict.value)}")
    return ExitCode.FAIL


def report_equivalence(verdict: EquivalenceVerdict, sr: SemiringDescriptor) -> ExitCode:
    if verdict.equal:
        click.echo(verdict.kind.value)
        echo_certificate(verdict.certificate)
        return ExitCode.OK
    click.echo(f"{verdict.kind.value}, witness: {render_word(verdict.witness)}")
    click.echo(f"valores: {sr.render(verdict.left)} vs {sr.render(verdict.right)}")
    return ExitCode.FAIL


# ----------------------------------------------------------------------
# pa
# ----------------------------------------------------------------------

@click.group("pa")
def pa_group():
    """Autómatas polinomiales: evaluación, nulidad y equivalencia sobre ℚ."""


@log_function_call(logger)
def pa_eval(file: str, text: str) -> ExitCode:
    automaton = load(file, PolyAutomaton)
    click.echo(automaton.semiring.render(automaton.behavior(parse_word(text, automaton.alphabet))))
    return ExitCode.OK


@pa_group.command("eval")
@click.argument("file", type=document_path)
@click.argument("text")
@click.pass_context
def pa_eval_command(ctx, file, text):
    """Evalúa un PA en una palabra (lectura hacia adelante)."""
    run_command(ctx, pa_eval, file, text)


@log_function_call(logger)
def pa_zeroness(file: str, max_steps: Optional[int], max_degree: Optional[int]) -> ExitCode:
    automaton = load(file, PolyAutomaton)
    return report_zeroness(zeroness(automaton, max_steps, max_degree), automaton.semiring)


@pa_group.command("zeroness")
@click.argument("file", type=document_path)
@with_budget
@click.pass_context
def pa_zeroness_command(ctx, file, max_steps, max_degree):
    """Decide si ⟦P⟧ ≡ 0."""
    run_command(ctx, pa_zeroness, file, max_steps, max_degree)


@log_function_call(logger)
def pa_equiv(left_file: str, right_file: str, max_steps: Optional[int], max_degree: Optional[int]) -> ExitCode:
    left = load(left_file, PolyAutomaton)
    right = load(right_file, PolyAutomaton)
    return report_equivalence(pa_equivalence(left, right, max_steps, max_degree), left.semiring)


@pa_group.command("equiv")
@click.argument("left_file", type=document_path)
@click.argument("right_file", type=document_path)
@with_budget
@click.pass_context
def pa_equiv_command(ctx, left_file, right_file, max_steps, max_degree):
    """Decide si ⟦P1⟧ = ⟦P2⟧."""
    run_command(ctx, pa_equiv, left_file, right_file, max_steps, max_degree)


# ----------------------------------------------------------------------
# wafa
# ----------------------------------------------------------------------

@click.group("wafa")
def wafa_group():
    """Nulidad y equivalencia de WAFA sobre ℚ (vía su PA invertido)."""


@log_function_call(logger)
def wafa_zero(file: str, max_steps: Optional[int], max_degree: Optional[int]) -> ExitCode:
    automaton = load(file, Wafa)
    return report_zeroness(wafa_zeroness(automaton, max_steps, max_degree), automaton.semiring)


@wafa_group.command("zeroness")
@click.argument("file", type=document_path)
@with_budget
@click.pass_context
def wafa_zeroness_command(ctx, file, max_steps, max_degree):
    """Decide si ⟦A⟧ ≡ 0."""
    run_command(ctx, wafa_zero, file, max_steps, max_degree)


@log_function_call(logger)
def wafa_equiv(left_file: str, right_file: str, max_steps: Optional[int], max_degree: Optional[int]) -> ExitCode:
    left = load(left_file, Wafa)
    right = load(right_file, Wafa)
    return report_equivalence(wafa_equivalence(left, right, max_steps, max_degree), left.semiring)


@wafa_group.command("equiv")
@click.argument("left_file", type=document_path)
@click.argument("right_file", type=document_path)
@with_budget
@click.pass_context
def wafa_equiv_command(ctx, left_file, right_file, max_steps, max_degree):
    """Decide si ⟦A1⟧ = ⟦A2⟧; el testigo se da en el sentido del WAFA."""
    run_command(ctx, wafa_equiv, left_file, right_file, max_steps, max_degree)


# ----------------------------------------------------------------------
# groebner
# ----------------------------------------------------------------------

@click.group("groebner")
def groebner_group():
    """Núcleo de Gröbner (depuración)."""


@log_function_call(logger)
def groebner_basis(file: str, order: Optional[str]) -> ExitCode:
    ideal = load(file, Ideal)
    basis = buchberger(list(ideal.generators), order or ideal.order, n=ideal.n)
    click.echo(f"orden: {basis.order.value}")
    for g in basis.generators:
        click.echo(g.render())
    report = audit(basis)
    click.echo(f"auditoría: {'ok' if report.ok else 'pares fallidos ' + str(report.failing_pairs)}")
    return ExitCode.OK if report.ok else ExitCode.FAIL


@groebner_group.command("basis")
@click.argument("file", type=document_path)
@click.option("--order", type=click.Choice([o.value for o in MonomialOrder]), default=None,
              help="Orden monomial (por defecto el del documento o ALTERWEIGHT_MONOMIAL_ORDER)")
@click.pass_context
def groebner_basis_command(ctx, file, order):
    """Base de Gröbner reducida de un documento ideal."""
    run_command(ctx, groebner_basis, file, order)
