"""
Autómatas finitos alternantes con pesos (WAFA).

Los estados están ordenados; la indeterminada x_i del polinomio de una
transición representa al estado i-ésimo. Una transición ausente vale el
polinomio cero.
"""

from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from alterweight.core.errors import (
    ArityMismatchError, ParseError, SemiringMismatchError, UnknownSymbolError
)
from alterweight.models.polynomial import Polynomial, evaluate, is_non_constant_sum
from alterweight.models.semiring import SemiringDescriptor


class BehaviorVector:
    """Valores ⟦A⟧_q(w) por estado, en el orden de los estados"""

    __slots__ = ("states", "values")

    def __init__(self, states: Sequence[str], values: Sequence[Any]):
        if len(states) != len(values):
            raise ArityMismatchError("El vector de comportamiento debe tener un valor por estado")
        self.states = tuple(states)
        self.values = tuple(values)

    def __getitem__(self, state: str):
        return self.values[self.states.index(state)]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if isinstance(other, BehaviorVector):
            return self.states == other.states and self.values == other.values
        return tuple(self.values) == tuple(other)

    def __repr__(self):
        return "BehaviorVector(" + ", ".join(f"{q}={v}" for q, v in zip(self.states, self.values)) + ")"


class Wafa:
    """
    WAFA (Q, Σ, δ, P_0, τ) sobre un semianillo conmutativo.

    origins anota, para los estados creados por las formas normales, qué
    papel cumplen; no forma parte de la igualdad estructural.
    """

    def __init__(self,
                 semiring: SemiringDescriptor,
                 states: Sequence[str],
                 alphabet: Sequence[str],
                 transitions: Mapping[Tuple[str, str], Polynomial],
                 initial: Polynomial,
                 final: Union[Mapping[str, Any], Sequence[Any]],
                 origins: Optional[Mapping[str, str]] = None):
        self.semiring = semiring
        self.states: List[str] = list(states)
        self.alphabet: List[str] = list(alphabet)
        if len(set(self.states)) != len(self.states):
            raise ParseError("Estados duplicados en el WAFA")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ParseError("Letras duplicadas en el alfabeto del WAFA")
        self.n = len(self.states)
        self._index = {q: i for i, q in enumerate(self.states)}

        self.transitions: Dict[Tuple[str, str], Polynomial] = {}
        for (q, a), poly in transitions.items():
            if q not in self._index:
                raise UnknownSymbolError(f"Transición desde un estado desconocido: {q!r}")
            if a not in self.alphabet:
                raise UnknownSymbolError(f"Transición con una letra desconocida: {a!r}")
            self._check_poly(poly, f"δ({q},{a})")
            if not poly.is_zero:
                self.transitions[(q, a)] = poly

        self._check_poly(initial, "P_0")
        self.initial = initial

        if isinstance(final, Mapping):
            unknown = set(final) - set(self.states)
            if unknown:
                raise UnknownSymbolError(f"Pesos finales para estados desconocidos: {sorted(unknown)}")
            self.final = tuple(final.get(q, semiring.zero) for q in self.states)
        else:
            if len(final) != self.n:
                raise ArityMismatchError(f"τ tiene {len(final)} valores para {self.n} estados")
            self.final = tuple(final)
        self.origins: Dict[str, str] = dict(origins or {})

    def _check_poly(self, poly: Polynomial, where: str):
        if poly.n != self.n:
            raise ArityMismatchError(f"{where} tiene {poly.n} indeterminadas y el WAFA {self.n} estados")
        if poly.base.name != self.semiring.name:
            raise SemiringMismatchError(
                f"{where} está sobre {poly.base.name} y el WAFA sobre {self.semiring.name}"
            )

    # Acceso -----------------------------------------------------------

    def index(self, state: str) -> int:
        return self._index[state]

    def delta(self, state: str, letter: str) -> Polynomial:
        return self.transitions.get((state, letter)) or Polynomial.zero(self.n, self.semiring)

    def tau(self, state: str):
        return self.final[self._index[state]]

    def all_polynomials(self) -> List[Polynomial]:
        return [self.initial] + [self.delta(q, a) for q in self.states for a in self.alphabet]

    def delta_polynomials(self) -> List[Polynomial]:
        return [self.delta(q, a) for q in self.states for a in self.alphabet]

    # Semántica --------------------------------------------------------

    def state_behavior(self, word: Sequence[str]) -> BehaviorVector:
        """⟦A⟧_q(w) para todos los q, leyendo w de derecha a izquierda"""
        for letter in word:
            if letter not in self.alphabet:
                raise UnknownSymbolError(f"Letra fuera del alfabeto: {letter!r}")
        values = list(self.final)
        for letter in reversed(list(word)):
            values = [evaluate(self.delta(q, letter), values) for q in self.states]
        return BehaviorVector(self.states, values)

    def behavior(self, word: Sequence[str]):
        return evaluate(self.initial, list(self.state_behavior(word)))

    # Propiedades de forma normal ------------------------------------------

    def is_wfa(self) -> bool:
        """P_0 y cada δ(q,a) son combinaciones lineales de estados"""
        return all(all(m.degree == 1 for m in p.terms) for p in self.all_polynomials())

    def has_no_constants(self) -> bool:
        return all(is_non_constant_sum(p) for p in self.all_polynomials())

    def initial_is_first_state(self) -> bool:
        return self.n >= 1 and self.initial == Polynomial.variable(self.n, 1, self.semiring)

    def all_coefficients_one(self) -> bool:
        return all(self.semiring.is_one(m.coeff) for p in self.all_polynomials() for m in p.terms)

    def equalized_degree(self) -> Optional[int]:
        """El grado común d de todos los monomios de δ, o None"""
        degrees = {m.degree for p in self.delta_polynomials() for m in p.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def is_nice(self) -> bool:
        return self.has_no_constants() and self.initial_is_first_state()

    def is_pure(self) -> bool:
        return self.is_nice() and self.all_coefficients_one()

    def is_equalized(self) -> bool:
        return self.equalized_degree() is not None

    # Igualdad estructural ------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Wafa):
            return NotImplemented
        return (
            self.semiring == other.semiring
            and self.states == other.states
            and self.alphabet == other.alphabet
            and self.transitions == other.transitions
            and self.initial == other.initial
            and len(self.final) == len(other.final)
            and all(self.semiring.eq(a, b) for a, b in zip(self.final, other.final))
        )

    __hash__ = None

    def __repr__(self):
        return f"Wafa({self.semiring.name}, states={self.states}, alphabet={self.alphabet})"
