from pydantic import BaseModel, Field
from typing import Annotated, Any, Dict, List, Literal, Optional, Union

from alterweight.models.polynomial import MonomialOrder

# Documentos autodescriptivos: el campo "kind" decide el esquema

class DocumentBase(BaseModel):
    """Campos comunes; cualquier campo desconocido se rechaza"""

    class Config:
        extra = "forbid"

class WafaDocument(DocumentBase):
    """WAFA: polinomios en forma serializada {"n", "terms"}"""
    kind: Literal["wafa"]
    semiring: str = Field(..., description="Nombre del semianillo, p. ej. nat o poly(bool,1)")
    states: List[str] = Field(..., min_length=1, description="Estados en orden (x_i ≙ q_i)")
    alphabet: List[str] = Field(..., description="Letras en orden")
    initial: Any = Field(..., description="Polinomio inicial P_0")
    transitions: Dict[str, Dict[str, Any]] = Field(default_factory=dict, description="estado → letra → polinomio")
    final: Dict[str, Any] = Field(default_factory=dict, description="Pesos finales τ (ausente = 0)")

class WftaRule(DocumentBase):
    """Transición con peso no escalar (p. ej. un polinomio)"""
    rule: str = Field(..., description="g(p1,...,pk) -> q")
    weight: Any

class WftaDocument(DocumentBase):
    """WFTA: transiciones "g(p1,...,pk) -> q : peso" """
    kind: Literal["wfta"]
    semiring: str
    states: List[str] = Field(..., min_length=1)
    alphabet: List[str] = Field(..., description="Declaraciones nombre/rango")
    transitions: List[Union[str, WftaRule]] = Field(default_factory=list)
    root_weights: Dict[str, Any] = Field(default_factory=dict, description="Pesos raíz λ (ausente = 0)")

class DtaDocument(DocumentBase):
    """DTA: transiciones "g(p1,...,pk) -> q"; las ausentes van a un sumidero implícito"""
    kind: Literal["dta"]
    states: List[str] = Field(..., min_length=1)
    alphabet: List[str]
    transitions: List[str] = Field(default_factory=list)
    accepting: List[str] = Field(default_factory=list)

class PaDocument(DocumentBase):
    """Autómata polinomial"""
    kind: Literal["pa"]
    semiring: str = Field(default="rat")
    n: int = Field(..., ge=0, description="Número de estados/indeterminadas")
    alphabet: List[str]
    initial: List[Any] = Field(..., description="Vector inicial α")
    transitions: Dict[str, List[Any]] = Field(default_factory=dict, description="letra → n polinomios")
    output: Any = Field(..., description="Polinomio de salida γ")
    state_names: Optional[List[str]] = None

class HomDocument(DocumentBase):
    """
    Homomorfismo de árboles (patterns con source/target) o de palabras
    (word_images con source_letters/target_letters)
    """
    kind: Literal["hom"]
    source: Optional[List[str]] = None
    target: Optional[List[str]] = None
    patterns: Optional[Dict[str, str]] = None
    source_letters: Optional[List[str]] = None
    target_letters: Optional[List[str]] = None
    word_images: Optional[Dict[str, List[str]]] = None

class TreeDocument(DocumentBase):
    kind: Literal["tree"]
    tree: str = Field(..., description="Árbol en sintaxis g(t1,...,tk)")
    alphabet: Optional[List[str]] = None

class IdealDocument(DocumentBase):
    """Generadores racionales para groebner basis"""
    kind: Literal["ideal"]
    n: int = Field(..., ge=0)
    order: Optional[MonomialOrder] = None
    generators: List[Any] = Field(default_factory=list)

Document = Annotated[
    Union[WafaDocument, WftaDocument, DtaDocument, PaDocument, HomDocument, TreeDocument, IdealDocument],
    Field(discriminator="kind"),
]
