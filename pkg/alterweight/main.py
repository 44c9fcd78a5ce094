import logging

import click

from alterweight import __version__
from alterweight.controllers.automata_controller import eval_command, normalize_command, render_command
from alterweight.controllers.conversion_controller import convert_group, nivat_group
from alterweight.controllers.decision_controller import groebner_group, pa_group, wafa_group
from alterweight.controllers.oracle_controller import oracle_command, semiring_group
from alterweight.core.config import settings
from alterweight.core.logging_config import main_logger

logger = main_logger


@click.group()
@click.version_option(__version__, prog_name="alterweight")
@click.option("-v", "--verbose", is_flag=True, help="Logs de depuración en stderr")
def cli(verbose):
    """Autómatas alternantes con pesos: evaluación, formas normales, traducciones y decisiones."""
    if verbose:
        logger.setLevel(logging.DEBUG)
        for handler in logger.handlers:
            handler.setLevel(logging.DEBUG)
    logger.debug(f"⚙️ Límite de grado: {settings.ALTERWEIGHT_MAX_DEGREE}, orden: {settings.ALTERWEIGHT_MONOMIAL_ORDER}")


# Registro de comandos
cli.add_command(eval_command)
cli.add_command(normalize_command)
cli.add_command(render_command)
cli.add_command(convert_group)
cli.add_command(nivat_group)
cli.add_command(pa_group)
cli.add_command(wafa_group)
cli.add_command(groebner_group)
cli.add_command(oracle_command)
cli.add_command(semiring_group)


if __name__ == "__main__":
    cli()
