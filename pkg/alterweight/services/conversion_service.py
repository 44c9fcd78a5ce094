from typing import Dict, NamedTuple

from alterweight.core.errors import PreconditionError
from alterweight.core.logging_config import main_logger, exception_handler
from alterweight.models.polynomial import Polynomial
from alterweight.models.tree import END_MARKER, TreeHomomorphism, apply_hom, generic_alphabet
from alterweight.models.wafa import Wafa
from alterweight.models.wfta import Wfta
from alterweight.services.normal_form_service import equalize, make_nice
from alterweight.services.tree_automata_service import extended_table

logger = main_logger


class WftaTranslation(NamedTuple):
    """Resultado de wafa_to_wfta"""
    wfta: Wfta
    rank: int
    normalized: Wafa
    state_origins: Dict[str, str]


class ConversionService:
    """Servicio de compilación WAFA ↔ WFTA∘homomorfismo"""

    @exception_handler(logger, {"service": "ConversionService", "method": "wafa_to_wfta"})
    def wafa_to_wfta(self, automaton: Wafa) -> WftaTranslation:
        """
        WAFA → WFTA B sobre Σ_#^r con ⟦B⟧(t^r_w) = ⟦A⟧(w).

        β_#(ε,q) = τ(q); β_a(p̄,q) = s si s·p1···pr ∈ M_(q,a) con p̄ ordenada
        según el orden de los estados (0 para tuplas desordenadas); λ = χ_{q1}.
        """
        normalized = equalize(make_nice(automaton))
        rank = normalized.equalized_degree() or 1
        sr = normalized.semiring
        alphabet = generic_alphabet(normalized.alphabet, rank)

        transitions = {}
        for (q, a), poly in normalized.transitions.items():
            for mono in poly.terms:
                children = tuple(
                    state
                    for state, power in zip(normalized.states, mono.exponents)
                    for _ in range(power)
                )
                transitions[(a, children, q)] = mono.coeff
        for q, tau in zip(normalized.states, normalized.final):
            transitions[(END_MARKER, (), q)] = tau

        roots = {normalized.states[0]: sr.one}
        wfta = Wfta(sr, normalized.states, alphabet, transitions, roots)

        origins = {q: "estado original" for q in automaton.states}
        origins.update(normalized.origins)
        logger.info(f"🌳 wafa_to_wfta: rango r={rank}, {len(wfta.states)} estados, "
                    f"{len(wfta.transitions)} transiciones no nulas")
        return WftaTranslation(wfta, rank, normalized, origins)

    @exception_handler(logger, {"service": "ConversionService", "method": "wfta_hom_to_wafa"})
    def wfta_hom_to_wafa(self, automaton: Wfta, hom: TreeHomomorphism) -> Wafa:
        """
        WFTA B y homomorfismo h desde árboles-palabra → WAFA A con
        ⟦A⟧(w) = ⟦B⟧(h(w)).
        """
        letters = []
        for name, rank in hom.source:
            if name == END_MARKER:
                if rank != 0:
                    raise PreconditionError(f"{END_MARKER} debe tener rango 0 en el dominio del homomorfismo")
                continue
            if rank != 1:
                raise PreconditionError(
                    f"El dominio debe ser de árboles-palabra: {name!r} tiene rango {rank}"
                )
            letters.append(name)
        if END_MARKER not in hom.source:
            raise PreconditionError(f"El homomorfismo debe definir la imagen de {END_MARKER}")
        for name, rank in hom.target:
            if name not in automaton.alphabet or automaton.alphabet.rank(name) != rank:
                raise PreconditionError(f"El símbolo destino {name!r} no pertenece al alfabeto del WFTA")

        sr = automaton.semiring
        states = automaton.states
        n = len(states)
        index = {q: i for i, q in enumerate(states)}

        initial = Polynomial(n, sr, [
            (tuple(1 if j == i else 0 for j in range(n)), lam)
            for i, lam in enumerate(automaton.root_weights)
        ])

        end_table = extended_table(automaton, hom.patterns[END_MARKER])
        final = [end_table.get(((), q), sr.zero) for q in states]

        transitions = {}
        for a in letters:
            table = extended_table(automaton, hom.patterns[a])
            terms = {q: [] for q in states}
            for (leaves, q), weight in table.items():
                exps = [0] * n
                for p in leaves:
                    exps[index[p]] += 1
                terms[q].append((tuple(exps), weight))
            for q in states:
                transitions[(q, a)] = Polynomial(n, sr, terms[q])

        return Wafa(sr, states, letters, transitions, initial, final)

    @exception_handler(logger, {"service": "ConversionService", "method": "compose_homs"})
    def compose_homs(self, first: TreeHomomorphism, second: TreeHomomorphism) -> TreeHomomorphism:
        """second∘first a nivel de patrones: t_g = second(first.t_g)"""
        for name, rank in first.target:
            if name not in second.source or second.source.rank(name) != rank:
                raise PreconditionError(
                    f"Dominios incompatibles: {name!r} no está en el dominio del segundo homomorfismo"
                )
        patterns = {g: apply_hom(second, first.patterns[g]) for g in first.source.names}
        return TreeHomomorphism(first.source, second.target, patterns)


conversion_service = ConversionService()
wafa_to_wfta = conversion_service.wafa_to_wfta
wfta_hom_to_wafa = conversion_service.wfta_hom_to_wafa
compose_homs = conversion_service.compose_homs
