"""Bases de Gröbner sobre ℚ[X_n]"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from alterweight.models.polynomial import Exponents, MonomialOrder, Polynomial, order_key


@dataclass(frozen=True)
class GroebnerBasis:
    """Base reducida: generadores mónicos, inter-reducidos y ordenados por monomio líder descendente"""
    n: int
    order: MonomialOrder
    generators: Tuple[Polynomial, ...]

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant

    def leading_monomials(self) -> List[Exponents]:
        return [
            max((m.exponents for m in g.terms), key=lambda e: order_key(e, self.order))
            for g in self.generators
        ]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


@dataclass(frozen=True)
class Ideal:
    """Generadores de un ideal de ℚ[X_n] tal como se leen de un documento"""
    n: int
    generators: Tuple[Polynomial, ...]
    order: Optional[MonomialOrder] = None
