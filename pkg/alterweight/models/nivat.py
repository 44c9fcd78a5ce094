"""Descomposición de Nivat: letras de corrida, homomorfismo, lenguaje de corridas y autómata de pesos"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from alterweight.models.tree import RankedAlphabet, TreeHomomorphism
from alterweight.models.wfta import Dta, Wfta, join_names

ROOT_MARK = "*"


@dataclass(frozen=True)
class RunLetter:
    """Letra (g, p̄, q, raíz?) del alfabeto de corridas"""
    symbol: str
    children: Tuple[str, ...]
    target: str
    root: bool = False

    @property
    def name(self) -> str:
        parts = [self.symbol, join_names(".", self.children), self.target]
        return join_names("|", parts + [ROOT_MARK] if self.root else parts)


@dataclass
class NivatDecomposition:
    """s(t) = h(⟦A_w⟧ ⊙ χ_L)(t) con h lineal y no borrador y A_w de un solo estado"""
    rank: int
    run_alphabet: RankedAlphabet
    letters: Dict[str, RunLetter]
    hom: TreeHomomorphism
    consistency: Dta
    weights: Wfta
    source: Wfta
    evaluator: Optional[Wfta] = field(default=None, repr=False, compare=False)
