"""
Autómatas de árboles ascendentes con pesos (WFTA), autómatas de árboles
deterministas completos (DTA) y funciones escalonadas reconocibles.
"""

from collections import Counter
from functools import cached_property
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from alterweight.core.errors import (
    ArityMismatchError, ParseError, PreconditionError, SemiringMismatchError, UnknownSymbolError
)
from alterweight.models.semiring import BOOL, SemiringDescriptor
from alterweight.models.tree import RankedAlphabet, Tree
from alterweight.models.wafa import BehaviorVector

TransitionKey = Tuple[str, Tuple[str, ...], str]


def join_names(separator: str, names: Iterable[str]) -> str:
    """Une nombres de estados escapando \\ y el separador: la unión es inyectiva"""
    def escape(name: str) -> str:
        return name.replace("\\", "\\\\").replace(separator, "\\" + separator)

    return separator.join(escape(name) for name in names)


class Wfta:
    """WFTA (Q, Γ, (δ_g), λ) con transiciones dispersas; lo ausente vale 0"""

    def __init__(self,
                 semiring: SemiringDescriptor,
                 states: Sequence[str],
                 alphabet: RankedAlphabet,
                 transitions: Mapping[TransitionKey, Any],
                 root_weights: Union[Mapping[str, Any], Sequence[Any]]):
        self.semiring = semiring
        self.states: List[str] = list(states)
        if len(set(self.states)) != len(self.states):
            raise ParseError("Estados duplicados en el WFTA")
        self.alphabet = alphabet
        self._index = {q: i for i, q in enumerate(self.states)}

        self.transitions: Dict[TransitionKey, Any] = {}
        for (g, children, q), weight in transitions.items():
            children = tuple(children)
            if g not in alphabet:
                raise UnknownSymbolError(f"Transición con un símbolo desconocido: {g!r}")
            if alphabet.rank(g) != len(children):
                raise ArityMismatchError(
                    f"δ_{g} espera {alphabet.rank(g)} estados hijos y recibió {len(children)}"
                )
            for p in children + (q,):
                if p not in self._index:
                    raise UnknownSymbolError(f"Estado desconocido en δ_{g}: {p!r}")
            if not semiring.is_zero(weight):
                self.transitions[(g, children, q)] = weight

        if isinstance(root_weights, Mapping):
            unknown = set(root_weights) - set(self.states)
            if unknown:
                raise UnknownSymbolError(f"Pesos raíz para estados desconocidos: {sorted(unknown)}")
            self.root_weights = tuple(root_weights.get(q, semiring.zero) for q in self.states)
        else:
            if len(root_weights) != len(self.states):
                raise ArityMismatchError("λ debe tener un valor por estado")
            self.root_weights = tuple(root_weights)

    @cached_property
    def by_symbol(self) -> Dict[str, List[Tuple[Tuple[int, ...], int, Any]]]:
        """Transiciones no nulas por símbolo, como índices de estados y en orden de estados"""
        table: Dict[str, List[Tuple[Tuple[int, ...], int, Any]]] = {g: [] for g in self.alphabet.names}
        for (g, children, q), weight in self.transitions.items():
            table[g].append((tuple(self._index[p] for p in children), self._index[q], weight))
        for entries in table.values():
            entries.sort(key=lambda e: (e[1], e[0]))
        return table

    def index(self, state: str) -> int:
        return self._index[state]

    def weight(self, symbol: str, children: Sequence[str], state: str):
        return self.transitions.get((symbol, tuple(children), state), self.semiring.zero)

    def lam(self, state: str):
        return self.root_weights[self._index[state]]

    def sorted_transitions(self) -> List[Tuple[TransitionKey, Any]]:
        """Orden determinista: símbolo, estado destino, tupla de hijos"""
        symbol_order = {g: i for i, g in enumerate(self.alphabet.names)}
        return sorted(
            self.transitions.items(),
            key=lambda kv: (symbol_order[kv[0][0]], self._index[kv[0][2]],
                            tuple(self._index[p] for p in kv[0][1])),
        )

    def _vectors(self, t: Tree) -> List[Any]:
        sr = self.semiring
        n = len(self.states)
        memo: Dict[int, List[Any]] = {}
        by_symbol = self.by_symbol

        def vector(node: Tree) -> List[Any]:
            key = id(node)
            if key in memo:
                return memo[key]
            if node.is_variable:
                raise PreconditionError(f"El árbol debe ser cerrado; contiene {node.label}")
            if node.label not in self.alphabet:
                raise UnknownSymbolError(f"Símbolo fuera del alfabeto del WFTA: {node.label!r}")
            if self.alphabet.rank(node.label) != len(node.children):
                raise ArityMismatchError(f"Aridad incorrecta de {node.label!r}")
            child_vectors = [vector(c) for c in node.children]
            out = [sr.zero] * n
            for children, q, weight in by_symbol[node.label]:
                value = weight
                for i, p in enumerate(children):
                    value = sr.mul(value, child_vectors[i][p])
                    if sr.is_zero(value):
                        break
                else:
                    out[q] = sr.add(out[q], value)
            memo[key] = out
            return out

        return vector(t)

    def state_behavior(self, t: Tree) -> BehaviorVector:
        """⟦B⟧_q(t) para todos los q, por programación dinámica ascendente"""
        return BehaviorVector(self.states, self._vectors(t))

    def behavior(self, t: Tree):
        sr = self.semiring
        values = self._vectors(t)
        return sr.sum(sr.mul(lam, v) for lam, v in zip(self.root_weights, values))

    def __eq__(self, other):
        if not isinstance(other, Wfta):
            return NotImplemented
        return (
            self.semiring == other.semiring
            and self.states == other.states
            and self.alphabet == other.alphabet
            and self.transitions.keys() == other.transitions.keys()
            and all(self.semiring.eq(w, other.transitions[k]) for k, w in self.transitions.items())
            and all(self.semiring.eq(a, b) for a, b in zip(self.root_weights, other.root_weights))
        )

    __hash__ = None

    def __repr__(self):
        return f"Wfta({self.semiring.name}, states={self.states}, alphabet={self.alphabet})"


class Dta:
    """
    Autómata de árboles ascendente determinista y completo.

    delta guarda solo las entradas explícitas. Si alguna (g, p̄) falta se
    agrega un sumidero implícito: toda entrada ausente, y toda tupla que lo
    contenga, va a él. Así un DTA sobre muchos estados no se materializa.
    """

    def __init__(self,
                 states: Sequence[str],
                 alphabet: RankedAlphabet,
                 delta: Mapping[Tuple[str, Tuple[str, ...]], str],
                 accepting: Iterable[str],
                 sink_name: str = "sink"):
        self.alphabet = alphabet
        self.states: List[str] = list(states)
        if len(set(self.states)) != len(self.states):
            raise ParseError("Estados duplicados en el DTA")
        known = set(self.states)
        self.delta: Dict[Tuple[str, Tuple[str, ...]], str] = {}
        for (g, children), q in delta.items():
            children = tuple(children)
            if g not in alphabet:
                raise UnknownSymbolError(f"Transición con un símbolo desconocido: {g!r}")
            if alphabet.rank(g) != len(children):
                raise ArityMismatchError(f"δ_{g} espera {alphabet.rank(g)} estados hijos")
            if not set(children) | {q} <= known:
                raise UnknownSymbolError(f"Estado desconocido en δ_{g}{children}")
            self.delta[(g, children)] = q
        self.accepting = frozenset(accepting)
        if not self.accepting <= known:
            raise UnknownSymbolError("Estados de aceptación desconocidos")

        self.sink: Optional[str] = None
        if self._has_missing_entries():
            sink = sink_name
            while sink in known:
                sink += "'"
            self.sink = sink
            self.states.append(sink)

    def _has_missing_entries(self) -> bool:
        n = len(self.states)
        counts = Counter(g for g, _ in self.delta)
        return any(counts[g] < n ** rank for g, rank in self.alphabet)

    @property
    def declared_states(self) -> List[str]:
        """Estados sin el sumidero implícito"""
        return [q for q in self.states if q != self.sink]

    def is_complete(self) -> bool:
        """Certificado de determinismo: cada (g, p̄) tiene un único destino"""
        return self.sink is not None or not self._has_missing_entries()

    def target(self, symbol: str, children: Sequence[str]) -> str:
        children = tuple(children)
        if self.sink is not None and self.sink in children:
            return self.sink
        q = self.delta.get((symbol, children), self.sink)
        if q is None:
            raise UnknownSymbolError(f"Sin transición para {symbol}{children}")
        return q

    def run(self, t: Tree) -> str:
        memo: Dict[int, str] = {}

        def walk(node: Tree) -> str:
            key = id(node)
            if key not in memo:
                if node.label not in self.alphabet or node.is_variable:
                    raise UnknownSymbolError(f"Símbolo fuera del alfabeto del DTA: {node.label!r}")
                children = tuple(walk(c) for c in node.children)
                if len(children) != self.alphabet.rank(node.label):
                    raise ArityMismatchError(f"Aridad incorrecta de {node.label!r}")
                memo[key] = self.target(node.label, children)
            return memo[key]

        return walk(t)

    def run_pattern(self, pattern: Tree, assignment: Sequence[str]) -> str:
        """Estado alcanzado sobre un patrón cuyas variables x_i valen assignment[i-1]"""
        def walk(node: Tree) -> str:
            if node.is_variable:
                if node.var > len(assignment):
                    raise ArityMismatchError(f"Sin estado asignado para x{node.var}")
                return assignment[node.var - 1]
            children = tuple(walk(c) for c in node.children)
            if node.label not in self.alphabet:
                raise UnknownSymbolError(f"Símbolo fuera del alfabeto del DTA: {node.label!r}")
            return self.target(node.label, children)

        return walk(pattern)

    def accepts(self, t: Tree) -> bool:
        return self.run(t) in self.accepting

    def with_accepting(self, accepting: Iterable[str]) -> "Dta":
        return Dta(self.declared_states, self.alphabet, self.delta, accepting,
                   sink_name=self.sink or "sink")

    def to_wfta(self, semiring: SemiringDescriptor = BOOL) -> Wfta:
        """
        Levantamiento a un WFTA cuya única corrida da χ_L. Las transiciones
        hacia el sumidero se omiten: nunca llegan a un estado de aceptación.
        """
        transitions = {(g, children, q): semiring.one for (g, children), q in self.delta.items()}
        roots = {q: semiring.one for q in self.accepting}
        return Wfta(semiring, self.states, self.alphabet, transitions, roots)

    def sorted_delta(self) -> List[Tuple[Tuple[str, Tuple[str, ...]], str]]:
        """Entradas explícitas en orden determinista (el sumidero queda implícito)"""
        symbol_order = {g: i for i, g in enumerate(self.alphabet.names)}
        index = {q: i for i, q in enumerate(self.states)}
        return sorted(
            self.delta.items(),
            key=lambda kv: (symbol_order[kv[0][0]], tuple(index[p] for p in kv[0][1])),
        )

    def __repr__(self):
        return f"Dta(states={self.states}, accepting={sorted(self.accepting)})"


class StepFunction:
    """Función escalonada reconocible Σ l_i·χ_{L_i}"""

    def __init__(self, semiring: SemiringDescriptor, cells: Sequence[Tuple[Dta, Any]], partition: bool = False):
        if not cells:
            raise PreconditionError("Una función escalonada necesita al menos una celda")
        alphabet = cells[0][0].alphabet
        for dta, _ in cells:
            if dta.alphabet != alphabet:
                raise SemiringMismatchError("Todas las celdas deben compartir el alfabeto")
        self.semiring = semiring
        self.cells: List[Tuple[Dta, Any]] = list(cells)
        self.partition = partition
        self.alphabet = alphabet

    def __repr__(self):
        return f"StepFunction({len(self.cells)} celdas, partition={self.partition})"
