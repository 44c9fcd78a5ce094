from typing import Callable, Type

import click
from prettytable import PrettyTable

from alterweight.core.errors import AlterweightError, ExitCode, ParseError
from alterweight.core.logging_config import main_logger
from alterweight.services.document_service import load_document

logger = main_logger

KIND_NAMES = {
    "Wafa": "wafa",
    "Wfta": "wfta",
    "Dta": "dta",
    "PolyAutomaton": "pa",
    "TreeHomomorphism": "hom",
    "Tree": "tree",
    "Ideal": "ideal",
}

document_path = click.Path(exists=True, dir_okay=False)


def run_command(ctx: click.Context, func: Callable[..., ExitCode], *args, **kwargs):
    """Ejecuta un comando y traduce los errores del dominio a su código de salida"""
    try:
        code = func(*args, **kwargs)
    except AlterweightError as e:
        click.echo(f"Error: {e.detail}", err=True)
        ctx.exit(int(e.exit_code))
    ctx.exit(int(code if code is not None else ExitCode.OK))


def load(path: str, *expected: Type):
    """Carga un documento y comprueba que sea de alguno de los tipos esperados"""
    obj = load_document(path)
    if expected and not isinstance(obj, expected):
        wanted = " o ".join(KIND_NAMES.get(t.__name__, t.__name__) for t in expected)
        found = KIND_NAMES.get(type(obj).__name__, type(obj).__name__)
        raise ParseError(f"{path}: se esperaba un documento {wanted} y se leyó {found}")
    return obj


def state_table(states, values, render: Callable) -> str:
    table = PrettyTable(["estado", "valor"])
    table.align = "l"
    for q, v in zip(states, values):
        table.add_row([q, render(v)])
    return table.get_string()
