from pydantic import BaseModel, Field
from typing import List, Optional
from enum import Enum

class VerdictKind(str, Enum):
    """Veredictos de nulidad y equivalencia, tal como los imprime la CLI"""
    ZERO = "ZERO"
    NONZERO = "NONZERO"
    EQUAL = "EQUAL"
    NOT_EQUAL = "NOT EQUAL"

# Schemas para la verificación de axiomas
class AxiomViolation(BaseModel):
    """Axioma violado con su primer testigo"""
    axiom: str = Field(..., description="Nombre del axioma")
    witness: List[str] = Field(..., description="Elementos (renderizados) que lo violan")

class AxiomReport(BaseModel):
    """Reporte de check_axioms"""
    semiring: str = Field(..., description="Nombre del semianillo verificado")
    sample_count: int = Field(..., ge=1, description="Tamaño de la muestra")
    violations: List[AxiomViolation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def violated(self) -> List[str]:
        return [v.axiom for v in self.violations]

# Schemas para el oráculo de fuerza bruta
class OracleMismatch(BaseModel):
    """Primera discrepancia encontrada (mínima en orden longitud-lexicográfico)"""
    word: List[str] = Field(..., description="Palabra testigo")
    left: str = Field(..., description="Valor del primer documento")
    right: str = Field(..., description="Valor del segundo documento")

class OracleReport(BaseModel):
    """Resultado de comparar dos series sobre todas las palabras de longitud ≤ N"""
    max_len: int = Field(..., ge=0)
    words_checked: int = Field(..., ge=0)
    mismatch: Optional[OracleMismatch] = None

    @property
    def passed(self) -> bool:
        return self.mismatch is None

# Schemas para la auditoría de bases de Gröbner
class GroebnerAuditReport(BaseModel):
    """Pares cuyo S-polinomio no reduce a 0"""
    order: str
    generator_count: int = Field(..., ge=0)
    failing_pairs: List[List[int]] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failing_pairs
