"""
Jerarquía de errores del dominio.

Cada error lleva un código de salida para la CLI, igual que una
HTTPException lleva su status_code.
"""

from enum import IntEnum
from typing import Any, Dict, Optional


class ExitCode(IntEnum):
    """Códigos de salida de la CLI"""
    OK = 0
    FAIL = 1
    PARSE_ERROR = 2
    RUNTIME_ERROR = 3
    RESOURCE_EXHAUSTED = 4


class AlterweightError(Exception):
    """Error base del dominio"""

    exit_code: ExitCode = ExitCode.RUNTIME_ERROR

    def __init__(self, detail: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(detail)
        self.detail = detail
        self.context = context or {}

    def __str__(self) -> str:
        return self.detail


class ParseError(AlterweightError):
    """Documento, árbol, palabra o elemento mal formado"""
    exit_code = ExitCode.PARSE_ERROR


class EvaluationError(AlterweightError):
    """Error al evaluar un autómata o un árbol"""


class ArityMismatchError(EvaluationError):
    """Número de argumentos o de indeterminadas incompatible"""


class UnknownSymbolError(EvaluationError):
    """Letra o símbolo fuera del alfabeto"""


class InvalidPositionError(EvaluationError):
    """Posición que no pertenece a pos(t)"""


class PreconditionError(AlterweightError):
    """No se cumple la precondición de una construcción"""


class SemiringMismatchError(AlterweightError):
    """Operandos sobre semianillos o alfabetos distintos"""


class FieldRequiredError(AlterweightError):
    """La operación exige coeficientes en un cuerpo computable (ℚ)"""


class ResourceExhaustedError(AlterweightError):
    """Se agotó un presupuesto configurado"""
    exit_code = ExitCode.RESOURCE_EXHAUSTED


class DegreeOverflowError(ResourceExhaustedError):
    """El grado de un polinomio supera el límite global"""
