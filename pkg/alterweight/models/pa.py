"""Autómatas polinomiales (PA) y veredictos de nulidad y equivalencia"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from alterweight.core.errors import ArityMismatchError, ParseError, SemiringMismatchError, UnknownSymbolError
from alterweight.models.groebner import GroebnerBasis
from alterweight.models.polynomial import Polynomial, evaluate
from alterweight.models.semiring import SemiringDescriptor
from alterweight.schemas.reports import VerdictKind


class PolyAutomaton:
    """
    PA (n, Σ, α, p, γ): la configuración arranca en α y cada letra a la
    transforma con p(a); la salida es γ evaluado en la configuración final.

    state_names es opcional y solo conserva los nombres de estados del WAFA
    de origen.
    """

    def __init__(self,
                 semiring: SemiringDescriptor,
                 n: int,
                 alphabet: Sequence[str],
                 initial: Sequence[Any],
                 transitions: Mapping[str, Sequence[Polynomial]],
                 output: Polynomial,
                 state_names: Optional[Sequence[str]] = None):
        if n < 0:
            raise ParseError("n debe ser no negativo")
        self.semiring = semiring
        self.n = n
        self.alphabet: List[str] = list(alphabet)
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ParseError("Letras duplicadas en el alfabeto del PA")
        if len(initial) != n:
            raise ArityMismatchError(f"α tiene {len(initial)} valores para n={n}")
        self.initial: Tuple[Any, ...] = tuple(initial)

        unknown = set(transitions) - set(self.alphabet)
        if unknown:
            raise UnknownSymbolError(f"Transiciones para letras desconocidas: {sorted(unknown)}")
        self.transitions: Dict[str, Tuple[Polynomial, ...]] = {}
        for a in self.alphabet:
            polys = tuple(transitions.get(a, [Polynomial.zero(n, semiring)] * n))
            if len(polys) != n:
                raise ArityMismatchError(f"p({a}) tiene {len(polys)} componentes para n={n}")
            for i, poly in enumerate(polys, start=1):
                self._check_poly(poly, f"p_{i}({a})")
            self.transitions[a] = polys

        self._check_poly(output, "γ")
        self.output = output

        if state_names is not None:
            state_names = list(state_names)
            if len(state_names) != n or len(set(state_names)) != n:
                raise ParseError("state_names debe tener n nombres distintos")
        self.state_names: Optional[List[str]] = state_names

    def _check_poly(self, poly: Polynomial, where: str):
        if poly.n != self.n:
            raise ArityMismatchError(f"{where} tiene {poly.n} indeterminadas y el PA n={self.n}")
        if poly.base.name != self.semiring.name:
            raise SemiringMismatchError(f"{where} está sobre {poly.base.name} y el PA sobre {self.semiring.name}")

    def names(self) -> List[str]:
        return self.state_names or [f"x{i}" for i in range(1, self.n + 1)]

    def configuration(self, word: Sequence[str]) -> List[Any]:
        """c_ε = α, c_{va} = p(a)(c_v)"""
        values = list(self.initial)
        for letter in word:
            if letter not in self.transitions:
                raise UnknownSymbolError(f"Letra fuera del alfabeto: {letter!r}")
            values = [evaluate(p, values) for p in self.transitions[letter]]
        return values

    def behavior(self, word: Sequence[str]):
        return evaluate(self.output, self.configuration(word))

    def __eq__(self, other):
        if not isinstance(other, PolyAutomaton):
            return NotImplemented
        eq = self.semiring.eq
        return (
            self.semiring == other.semiring
            and self.n == other.n
            and self.alphabet == other.alphabet
            and all(eq(a, b) for a, b in zip(self.initial, other.initial))
            and self.transitions == other.transitions
            and self.output == other.output
        )

    __hash__ = None

    def __repr__(self):
        return f"PolyAutomaton({self.semiring.name}, n={self.n}, alphabet={self.alphabet})"


@dataclass
class ZeronessVerdict:
    """Zero con la base de Gröbner del ideal invariante, o NonZero con testigo y valor"""
    is_zero: bool
    certificate: Optional[GroebnerBasis] = None
    witness: Optional[List[str]] = None
    value: Any = None
    steps: int = 0

    @property
    def kind(self) -> VerdictKind:
        return VerdictKind.ZERO if self.is_zero else VerdictKind.NONZERO

    @classmethod
    def zero(cls, certificate: GroebnerBasis, steps: int) -> "ZeronessVerdict":
        return cls(True, certificate=certificate, steps=steps)

    @classmethod
    def nonzero(cls, witness: Sequence[str], value, steps: int) -> "ZeronessVerdict":
        return cls(False, witness=list(witness), value=value, steps=steps)


@dataclass
class EquivalenceVerdict:
    """Equal (con certificado) o NotEqual con el testigo y ambos valores"""
    equal: bool
    certificate: Optional[GroebnerBasis] = None
    witness: Optional[List[str]] = None
    left: Any = None
    right: Any = None
    steps: int = field(default=0, compare=False)

    @property
    def kind(self) -> VerdictKind:
        return VerdictKind.EQUAL if self.equal else VerdictKind.NOT_EQUAL
