from typing import List, Optional, Sequence, Tuple

from alterweight.core.config import settings
from alterweight.core.errors import FieldRequiredError, ResourceExhaustedError, SemiringMismatchError
from alterweight.core.logging_config import main_logger, exception_handler
from alterweight.models.groebner import GroebnerBasis
from alterweight.models.pa import EquivalenceVerdict, PolyAutomaton, ZeronessVerdict
from alterweight.models.polynomial import Polynomial, evaluate, shift, substitute
from alterweight.models.semiring import RAT
from alterweight.models.wafa import Wafa
from alterweight.models.words import reverse, words_of_length
from alterweight.services.groebner_service import buchberger, normal_form

logger = main_logger

# Tope de palabras de la búsqueda del testigo lexicográficamente mínimo
MAX_WITNESS_SCAN = 100_000


def _require_rationals(*automata):
    for automaton in automata:
        if automaton.semiring.name != RAT.name:
            raise FieldRequiredError(
                f"Nulidad y equivalencia solo se deciden sobre ℚ; el autómata está sobre {automaton.semiring.name}",
                {"semiring": automaton.semiring.name},
            )


class ZeronessService:
    """Correspondencia WAFA ↔ PA y decisión de nulidad/equivalencia sobre ℚ"""

    # ------------------------------------------------------------------
    # Inversión WAFA ↔ PA
    # ------------------------------------------------------------------

    def wafa_to_pa(self, automaton: Wafa) -> PolyAutomaton:
        """α_i = τ(q_i), p_i(a) = δ(q_i, a), γ = P_0; ⟦A⟧(w) = ⟦P⟧(w^R)"""
        transitions = {
            a: tuple(automaton.delta(q, a) for q in automaton.states)
            for a in automaton.alphabet
        }
        return PolyAutomaton(
            automaton.semiring, automaton.n, automaton.alphabet, automaton.final,
            transitions, automaton.initial, state_names=automaton.states,
        )

    def pa_to_wafa(self, automaton: PolyAutomaton) -> Wafa:
        states = automaton.names()
        transitions = {
            (q, a): automaton.transitions[a][i]
            for a in automaton.alphabet
            for i, q in enumerate(states)
        }
        return Wafa(automaton.semiring, states, automaton.alphabet, transitions,
                    automaton.output, automaton.initial)

    # ------------------------------------------------------------------
    # Nulidad
    # ------------------------------------------------------------------

    def _minimal_witness(self, automaton: PolyAutomaton, length: int, found: Sequence[str],
                         reverse_words: bool) -> Tuple[List[str], object]:
        """
        Primer testigo de longitud `length` en orden lexicográfico. Con
        reverse_words el orden es el de las palabras invertidas (lectura WAFA).
        """
        sr = automaton.semiring
        if len(automaton.alphabet) ** length <= MAX_WITNESS_SCAN:
            for candidate in words_of_length(automaton.alphabet, length):
                word = reverse(candidate) if reverse_words else candidate
                value = automaton.behavior(word)
                if not sr.is_zero(value):
                    return word, value
        return list(found), automaton.behavior(found)

    @exception_handler(logger, {"service": "ZeronessService", "method": "zeroness"})
    def zeroness(self, automaton: PolyAutomaton,
                 max_steps: Optional[int] = None,
                 max_degree: Optional[int] = None,
                 reverse_words: bool = False) -> ZeronessVerdict:
        """
        Saturación hacia atrás por niveles de longitud: el generador de la
        palabra a·u es g_u∘p(a), empezando en g_ε = γ. Si algún generador no
        se anula en α hay testigo; los generadores cuya forma normal módulo
        la base actual es 0 no se expanden. Un nivel vacío cierra la cadena
        de ideales y la base final es el certificado.
        """
        _require_rationals(automaton)
        max_steps = settings.ALTERWEIGHT_ZERONESS_MAX_STEPS if max_steps is None else max_steps
        max_degree = settings.ALTERWEIGHT_ZERONESS_MAX_DEGREE if max_degree is None else max_degree
        sr = automaton.semiring
        alpha = list(automaton.initial)

        basis = buchberger([], n=automaton.n)
        level: List[Tuple[Tuple[str, ...], Polynomial]] = [((), automaton.output)]
        steps = 0
        while level:
            if steps >= max_steps:
                raise ResourceExhaustedError(
                    f"La saturación no se estabilizó en {max_steps} pasos",
                    {"max_steps": max_steps, "frontier": len(level)},
                )
            steps += 1

            for word, generator in level:
                if not sr.is_zero(evaluate(generator, alpha)):
                    witness, value = self._minimal_witness(automaton, len(word), word, reverse_words)
                    logger.info(f"🔎 zeroness: NONZERO en el paso {steps}, testigo de longitud {len(witness)}")
                    return ZeronessVerdict.nonzero(witness, value, steps)

            retained = []
            for word, generator in level:
                if generator.max_degree > max_degree:
                    raise ResourceExhaustedError(
                        f"Un generador alcanzó grado {generator.max_degree} (presupuesto {max_degree})",
                        {"max_degree": max_degree, "step": steps},
                    )
                remainder = normal_form(generator, basis)
                if remainder.is_zero:
                    continue
                basis = buchberger(list(basis.generators) + [remainder], basis.order, n=automaton.n)
                retained.append((word, generator))

            logger.debug(f"🧮 zeroness paso {steps}: {len(retained)}/{len(level)} generadores nuevos, "
                         f"base de {len(basis)}")
            level = [
                ((a,) + word, substitute(generator, automaton.transitions[a]))
                for word, generator in retained
                for a in automaton.alphabet
            ]

        logger.info(f"🔎 zeroness: ZERO tras {steps} pasos, certificado de {len(basis)} generadores")
        return ZeronessVerdict.zero(basis, steps)

    def certificate_holds(self, automaton: PolyAutomaton, certificate: GroebnerBasis) -> bool:
        """Cada elemento de la base se anula en α y g∘p(a) reduce a 0 para toda letra a"""
        alpha = list(automaton.initial)
        for g in certificate.generators:
            if not automaton.semiring.is_zero(evaluate(g, alpha)):
                return False
            for a in automaton.alphabet:
                if not normal_form(substitute(g, automaton.transitions[a]), certificate).is_zero:
                    return False
        return normal_form(automaton.output, certificate).is_zero

    # ------------------------------------------------------------------
    # Equivalencia
    # ------------------------------------------------------------------

    def difference(self, left: PolyAutomaton, right: PolyAutomaton) -> PolyAutomaton:
        """Unión disjunta con γ = γ1 − γ2 desplazado"""
        if set(left.alphabet) != set(right.alphabet):
            raise SemiringMismatchError(
                f"Alfabetos distintos: {left.alphabet} vs {right.alphabet}",
                {"left": left.alphabet, "right": right.alphabet},
            )
        n1, n2 = left.n, right.n
        n = n1 + n2
        transitions = {
            a: tuple(shift(p, 0, n) for p in left.transitions[a])
               + tuple(shift(p, n1, n) for p in right.transitions[a])
            for a in left.alphabet
        }
        output = shift(left.output, 0, n) - shift(right.output, n1, n)
        return PolyAutomaton(left.semiring, n, left.alphabet, left.initial + right.initial, transitions, output)

    @exception_handler(logger, {"service": "ZeronessService", "method": "pa_equivalence"})
    def pa_equivalence(self, left: PolyAutomaton, right: PolyAutomaton,
                       max_steps: Optional[int] = None,
                       max_degree: Optional[int] = None,
                       reverse_words: bool = False) -> EquivalenceVerdict:
        _require_rationals(left, right)
        verdict = self.zeroness(self.difference(left, right), max_steps, max_degree, reverse_words)
        if verdict.is_zero:
            return EquivalenceVerdict(True, certificate=verdict.certificate, steps=verdict.steps)
        w = verdict.witness
        return EquivalenceVerdict(False, witness=w, left=left.behavior(w), right=right.behavior(w),
                                  steps=verdict.steps)

    @exception_handler(logger, {"service": "ZeronessService", "method": "wafa_zeroness"})
    def wafa_zeroness(self, automaton: Wafa,
                      max_steps: Optional[int] = None,
                      max_degree: Optional[int] = None) -> ZeronessVerdict:
        """Nulidad de ⟦A⟧ vía su PA invertido; el testigo se lee en el sentido del WAFA"""
        verdict = self.zeroness(self.wafa_to_pa(automaton), max_steps, max_degree, reverse_words=True)
        if not verdict.is_zero:
            verdict.witness = reverse(verdict.witness)
        return verdict

    @exception_handler(logger, {"service": "ZeronessService", "method": "wafa_equivalence"})
    def wafa_equivalence(self, left: Wafa, right: Wafa,
                         max_steps: Optional[int] = None,
                         max_degree: Optional[int] = None) -> EquivalenceVerdict:
        verdict = self.pa_equivalence(self.wafa_to_pa(left), self.wafa_to_pa(right),
                                      max_steps, max_degree, reverse_words=True)
        if not verdict.equal:
            verdict.witness = reverse(verdict.witness)
        return verdict


zeroness_service = ZeronessService()
wafa_to_pa = zeroness_service.wafa_to_pa
pa_to_wafa = zeroness_service.pa_to_wafa
zeroness = zeroness_service.zeroness
certificate_holds = zeroness_service.certificate_holds
pa_equivalence = zeroness_service.pa_equivalence
wafa_zeroness = zeroness_service.wafa_zeroness
wafa_equivalence = zeroness_service.wafa_equivalence
