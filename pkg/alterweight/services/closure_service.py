from typing import Sequence

from alterweight.core.errors import PreconditionError, SemiringMismatchError
from alterweight.core.logging_config import main_logger, exception_handler
from alterweight.models.polynomial import shift
from alterweight.models.tree import (
    TreeHomomorphism, generic_hom, hom_preimages, word_of_tree, word_tree
)
from alterweight.models.wafa import Wafa
from alterweight.services.conversion_service import compose_homs, wafa_to_wfta, wfta_hom_to_wafa

logger = main_logger

LEFT_PREFIX = "A."
RIGHT_PREFIX = "B."


class ClosureService:
    """Construcciones de clausura a nivel de palabras"""

    @exception_handler(logger, {"service": "ClosureService", "method": "hadamard_wafa"})
    def hadamard_wafa(self, left: Wafa, right: Wafa) -> Wafa:
        """Unión disjunta de estados con P_0 = P_0^A · P_0^B"""
        if left.semiring != right.semiring:
            raise SemiringMismatchError(
                f"Semianillos incompatibles: {left.semiring.name} vs {right.semiring.name}"
            )
        if left.alphabet != right.alphabet:
            raise SemiringMismatchError(f"Alfabetos distintos: {left.alphabet} vs {right.alphabet}")
        n1, n = left.n, left.n + right.n
        states = [LEFT_PREFIX + q for q in left.states] + [RIGHT_PREFIX + q for q in right.states]
        transitions = {}
        for (q, a), poly in left.transitions.items():
            transitions[(LEFT_PREFIX + q, a)] = shift(poly, 0, n)
        for (q, a), poly in right.transitions.items():
            transitions[(RIGHT_PREFIX + q, a)] = shift(poly, n1, n)
        initial = shift(left.initial, 0, n) * shift(right.initial, n1, n)
        return Wafa(left.semiring, states, left.alphabet, transitions, initial, left.final + right.final)

    @exception_handler(logger, {"service": "ClosureService", "method": "inverse_word_hom"})
    def inverse_word_hom(self, automaton: Wafa, hom: TreeHomomorphism) -> Wafa:
        """
        h'⁻¹(⟦A⟧) = ⟦B⟧∘(h^r∘h') con (B, r) = wafa_to_wfta(A). h' puede ser
        borrador: la composición sigue siendo total.
        """
        translation = wafa_to_wfta(automaton)
        composed = compose_homs(hom, generic_hom(automaton.alphabet, translation.rank))
        result = wfta_hom_to_wafa(translation.wfta, composed)
        logger.info(f"🔁 inverse_word_hom: {automaton.n} → {result.n} estados sobre {result.alphabet}")
        return result

    @exception_handler(logger, {"service": "ClosureService", "method": "image_behavior"})
    def image_behavior(self, automaton: Wafa, hom: TreeHomomorphism, word: Sequence[str]):
        """h(r)(w) = Σ_{v ∈ h⁻¹(w)} r(v) para h de palabras no borrador"""
        if not hom.non_deleting:
            raise PreconditionError("image_behavior exige un homomorfismo de palabras no borrador")
        sr = automaton.semiring
        total = sr.zero
        for preimage in hom_preimages(hom, word_tree(word)):
            total = sr.add(total, automaton.behavior(word_of_tree(preimage)))
        return total


closure_service = ClosureService()
hadamard_wafa = closure_service.hadamard_wafa
inverse_word_hom = closure_service.inverse_word_hom
image_behavior = closure_service.image_behavior
