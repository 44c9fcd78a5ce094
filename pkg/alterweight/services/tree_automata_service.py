from collections import defaultdict
from itertools import product as cartesian
from typing import Any, Dict, Iterator, List, Sequence, Tuple

from alterweight.core.errors import (
    ArityMismatchError, PreconditionError, SemiringMismatchError
)
from alterweight.core.logging_config import main_logger, exception_handler
from alterweight.models.semiring import SemiringDescriptor
from alterweight.models.tree import (
    Tree, TreeHomomorphism, count_variable, format_position, match_pattern, variables_of
)
from alterweight.models.wfta import Dta, StepFunction, Wfta, join_names

logger = main_logger

# Tabla extendida: (p̄, q) ↦ peso, solo entradas no nulas
ExtendedTable = Dict[Tuple[Tuple[str, ...], str], Any]


def product_state(*names: str) -> str:
    return join_names("&", names)


class TreeAutomataService:
    """Servicio para WFTA, DTA y funciones escalonadas"""

    # ------------------------------------------------------------------
    # Familia extendida δ′
    # ------------------------------------------------------------------

    def extended_table(self, automaton: Wfta, pattern: Tree) -> ExtendedTable:
        """
        δ′_pattern completo. Las hojas x1 se numeran de izquierda a derecha,
        así p̄ tiene longitud ra(pattern).
        """
        if variables_of(pattern) - {1}:
            raise PreconditionError("La familia extendida solo admite la variable x1")
        sr = automaton.semiring
        memo: Dict[int, ExtendedTable] = {}

        def table(node: Tree) -> ExtendedTable:
            key = id(node)
            if key in memo:
                return memo[key]
            if node.is_variable:
                result = {((p,), p): sr.one for p in automaton.states}
            else:
                if automaton.alphabet.rank(node.label) != len(node.children):
                    raise ArityMismatchError(f"Aridad incorrecta de {node.label!r} en el patrón")
                child_tables = [table(c) for c in node.children]
                by_target = []
                for child in child_tables:
                    grouped = defaultdict(list)
                    for (tuple_, target), weight in child.items():
                        grouped[target].append((tuple_, weight))
                    by_target.append(grouped)
                result = {}
                for (g, children, q), weight in automaton.transitions.items():
                    if g != node.label:
                        continue
                    options = [by_target[i].get(p, []) for i, p in enumerate(children)]
                    for combination in cartesian(*options):
                        value = weight
                        leaves: Tuple[str, ...] = ()
                        for tuple_, w in combination:
                            value = sr.mul(value, w)
                            leaves += tuple_
                        if sr.is_zero(value):
                            continue
                        entry = (leaves, q)
                        result[entry] = sr.add(result[entry], value) if entry in result else value
            memo[key] = result
            return result

        return table(pattern)

    @exception_handler(logger, {"service": "TreeAutomataService", "method": "extended_delta"})
    def extended_delta(self, automaton: Wfta, pattern: Tree, leaves: Sequence[str], state: str):
        """δ′_pattern(p̄, q); para patrones cerrados coincide con ⟦B⟧_q(pattern)"""
        expected = count_variable(pattern, 1)
        if len(leaves) != expected:
            raise ArityMismatchError(
                f"El patrón tiene {expected} hojas x1 y se dieron {len(leaves)} estados"
            )
        return self.extended_table(automaton, pattern).get((tuple(leaves), state), automaton.semiring.zero)

    # ------------------------------------------------------------------
    # Productos y levantamientos
    # ------------------------------------------------------------------

    @exception_handler(logger, {"service": "TreeAutomataService", "method": "hadamard_wfta"})
    def hadamard_wfta(self, left: Wfta, right: Wfta) -> Wfta:
        """Producto de Hadamard: estados pares, pesos multiplicados punto a punto"""
        if left.alphabet != right.alphabet:
            raise SemiringMismatchError("hadamard_wfta exige el mismo alfabeto con rango")
        if left.semiring != right.semiring:
            raise SemiringMismatchError(
                f"Semianillos incompatibles: {left.semiring.name} vs {right.semiring.name}"
            )
        sr = left.semiring
        states = [product_state(p, q) for p in left.states for q in right.states]
        right_by_symbol = defaultdict(list)
        for (g, children, q), weight in right.transitions.items():
            right_by_symbol[g].append((children, q, weight))
        transitions = {}
        for (g, children_l, q_l), w_l in left.transitions.items():
            for children_r, q_r, w_r in right_by_symbol[g]:
                children = tuple(product_state(a, b) for a, b in zip(children_l, children_r))
                transitions[(g, children, product_state(q_l, q_r))] = sr.mul(w_l, w_r)
        roots = [sr.mul(a, b) for a in left.root_weights for b in right.root_weights]
        return Wfta(sr, states, left.alphabet, transitions, roots)

    @exception_handler(logger, {"service": "TreeAutomataService", "method": "char_lift"})
    def char_lift(self, dta: Dta, semiring: SemiringDescriptor) -> Wfta:
        """χ_L como WFTA sobre S"""
        if not dta.is_complete():
            raise PreconditionError("char_lift exige un DTA completo y determinista")
        return dta.to_wfta(semiring)

    @exception_handler(logger, {"service": "TreeAutomataService", "method": "dta_inverse_hom"})
    def dta_inverse_hom(self, dta: Dta, hom: TreeHomomorphism) -> Dta:
        """DTA que acepta t si y solo si dta acepta h(t)"""
        if not dta.is_complete():
            raise PreconditionError("dta_inverse_hom exige un DTA completo y determinista")
        for name, rank in hom.target:
            if name not in dta.alphabet or dta.alphabet.rank(name) != rank:
                raise SemiringMismatchError(f"El alfabeto destino del homomorfismo no coincide en {name!r}")
        delta = {}
        for g, rank in hom.source:
            for children in cartesian(dta.states, repeat=rank):
                delta[(g, children)] = dta.run_pattern(hom.patterns[g], children)
        return Dta(dta.states, hom.source, delta, dta.accepting)

    # ------------------------------------------------------------------
    # Funciones escalonadas
    # ------------------------------------------------------------------

    def step_eval(self, step: StepFunction, t: Tree):
        sr = step.semiring
        return sr.sum(weight for dta, weight in step.cells if dta.accepts(t))

    @exception_handler(logger, {"service": "TreeAutomataService", "method": "step_partition"})
    def step_partition(self, step: StepFunction) -> StepFunction:
        """
        Producto de todos los DTA de las celdas (solo estados alcanzables);
        cada vector de aceptación define una celda con la suma de sus pesos.
        """
        sr = step.semiring
        dtas = [dta for dta, _ in step.cells]
        alphabet = step.alphabet

        reachable: List[Tuple[str, ...]] = []
        seen = set()
        delta: Dict[Tuple[str, Tuple[str, ...]], Tuple[str, ...]] = {}
        changed = True
        while changed:
            changed = False
            for g, rank in alphabet:
                for children in cartesian(list(reachable), repeat=rank):
                    key = (g, children)
                    if key in delta:
                        continue
                    target = tuple(
                        dta.target(g, tuple(child[i] for child in children))
                        for i, dta in enumerate(dtas)
                    )
                    delta[key] = target
                    if target not in seen:
                        seen.add(target)
                        reachable.append(target)
                        changed = True

        names = {tup: product_state(*tup) for tup in reachable}
        named_delta = {
            (g, tuple(names[c] for c in children)): names[target]
            for (g, children), target in delta.items()
        }
        product = Dta([names[t] for t in reachable], alphabet, named_delta, ())

        classes: Dict[Tuple[bool, ...], List[str]] = {}
        for tup in reachable:
            vector = tuple(tup[i] in dta.accepting for i, dta in enumerate(dtas))
            classes.setdefault(vector, []).append(names[tup])

        cells = []
        for vector, members in classes.items():
            weight = sr.sum(step.cells[i][1] for i, accepted in enumerate(vector) if accepted)
            cells.append((product.with_accepting(members), weight))
        logger.info(f"🧩 step_partition: {len(step.cells)} celdas → {len(cells)} clases")
        return StepFunction(sr, cells, partition=True)

    @exception_handler(logger, {"service": "TreeAutomataService", "method": "step_compose_hom"})
    def step_compose_hom(self, step: StepFunction, hom: TreeHomomorphism) -> StepFunction:
        """r∘h = Σ l_i·χ_{h⁻¹(L_i)}"""
        if not step.partition:
            raise PreconditionError("step_compose_hom exige una función escalonada marcada como partición")
        cells = [(self.dta_inverse_hom(dta, hom), weight) for dta, weight in step.cells]
        return StepFunction(step.semiring, cells, partition=True)

    # ------------------------------------------------------------------
    # Enumeración explícita de corridas e imágenes
    # ------------------------------------------------------------------

    def enumerate_runs(self, automaton: Wfta, t: Tree) -> Iterator[Tuple[Dict[str, str], Any]]:
        """
        Corridas de peso no nulo como etiquetados explícitos de pos(t), con
        su peso (producto de pesos locales por el peso raíz).
        """
        sr = automaton.semiring

        def label(node: Tree, path: Tuple[int, ...], state: str) -> Iterator[Tuple[Dict[str, str], Any]]:
            for (g, children, q), weight in automaton.transitions.items():
                if g != node.label or q != state or len(children) != len(node.children):
                    continue
                partials: List[List[Tuple[Dict[str, str], Any]]] = [
                    list(label(child, path + (i + 1,), p))
                    for i, (child, p) in enumerate(zip(node.children, children))
                ]
                for combination in cartesian(*partials):
                    labeling = {format_position(path): state}
                    value = weight
                    for sub_labeling, sub_weight in combination:
                        labeling.update(sub_labeling)
                        value = sr.mul(value, sub_weight)
                    if not sr.is_zero(value):
                        yield labeling, value

        for q, lam in zip(automaton.states, automaton.root_weights):
            if sr.is_zero(lam):
                continue
            for labeling, value in label(t, (), q):
                total = sr.mul(lam, value)
                if not sr.is_zero(total):
                    yield labeling, total

    def brute_force_behavior(self, automaton: Wfta, t: Tree):
        sr = automaton.semiring
        return sr.sum(weight for _, weight in self.enumerate_runs(automaton, t))

    @exception_handler(logger, {"service": "TreeAutomataService", "method": "image_value"})
    def image_value(self, automaton: Wfta, hom: TreeHomomorphism, t: Tree):
        """
        h(⟦C⟧)(t) = Σ_{t' ∈ h⁻¹(t)} ⟦C⟧(t') para h no borrador, agrupando
        las preimágenes por símbolo raíz y ligaduras (distributividad).
        """
        if not hom.non_deleting:
            raise PreconditionError("image_value exige un homomorfismo no borrador")
        sr = automaton.semiring
        n = len(automaton.states)
        by_symbol = automaton.by_symbol
        memo: Dict[Tree, List[Any]] = {}

        def vector(node: Tree) -> List[Any]:
            if node in memo:
                return memo[node]
            out = [sr.zero] * n
            for g, rank in hom.source:
                bindings = match_pattern(hom.patterns[g], node)
                if bindings is None or g not in by_symbol:
                    continue
                child_vectors = [vector(bindings[i]) for i in range(1, rank + 1)]
                for children, q, weight in by_symbol[g]:
                    value = weight
                    for i, p in enumerate(children):
                        value = sr.mul(value, child_vectors[i][p])
                        if sr.is_zero(value):
                            break
                    else:
                        out[q] = sr.add(out[q], value)
            memo[node] = out
            return out

        values = vector(t)
        return sr.sum(sr.mul(lam, v) for lam, v in zip(automaton.root_weights, values))


tree_automata_service = TreeAutomataService()
extended_table = tree_automata_service.extended_table
extended_delta = tree_automata_service.extended_delta
hadamard_wfta = tree_automata_service.hadamard_wfta
char_lift = tree_automata_service.char_lift
dta_inverse_hom = tree_automata_service.dta_inverse_hom
step_eval = tree_automata_service.step_eval
step_partition = tree_automata_service.step_partition
step_compose_hom = tree_automata_service.step_compose_hom
enumerate_runs = tree_automata_service.enumerate_runs
brute_force_behavior = tree_automata_service.brute_force_behavior
image_value = tree_automata_service.image_value
