from typing import Any, List, Tuple

from alterweight.core.errors import PreconditionError
from alterweight.core.logging_config import main_logger, exception_handler
from alterweight.models.polynomial import (
    Polynomial, evaluate, reindex, shift, substitute
)
from alterweight.models.wafa import Wafa

logger = main_logger

INITIAL_STATE = "init"
SINK_STATE = "h_1"


def fresh_name(candidate: str, taken) -> str:
    """candidate, o candidate con primas hasta que no choque"""
    name = candidate.replace(" ", "")
    while name in taken:
        name += "'"
    return name


class NormalFormService:
    """Servicio para las formas normales de WAFA: nice, puramente polinomial y ecualizado"""

    @exception_handler(logger, {"service": "NormalFormService", "method": "make_nice"})
    def make_nice(self, automaton: Wafa) -> Wafa:
        """
        Devuelve un WAFA equivalente que cumple (i)-(iii): sumas canónicas de
        monomios, sin monomios constantes y con P_0 = x1.
        """
        result = self._remove_constants(automaton)
        if not result.initial_is_first_state():
            result = self._add_initial_state(result)
            if not result.has_no_constants():
                result = self._remove_constants(result)
        logger.info(f"✨ make_nice: {automaton.n} → {result.n} estados")
        return result

    def _remove_constants(self, automaton: Wafa) -> Wafa:
        """Cada constante c pasa a ser un estado bloqueado c_<c> con τ = c"""
        sr = automaton.semiring
        constants: List[Any] = []
        for poly in automaton.all_polynomials():
            c = poly.constant_term
            if not sr.is_zero(c) and not any(sr.eq(c, seen) for seen in constants):
                constants.append(c)
        if not constants:
            return automaton

        states = list(automaton.states)
        origins = dict(automaton.origins)
        constant_index: List[Tuple[Any, int]] = []
        for c in constants:
            name = fresh_name(f"c_{sr.render(c)}", states)
            states.append(name)
            origins[name] = f"constante {sr.render(c)}"
            constant_index.append((c, len(states)))
        n_new = len(states)
        identity = list(range(1, automaton.n + 1))

        def lift(poly: Polynomial) -> Polynomial:
            moved = reindex(poly, identity, n_new)
            c = moved.constant_term
            if sr.is_zero(c):
                return moved
            idx = next(i for value, i in constant_index if sr.eq(value, c))
            terms = [(m.exponents, m.coeff) for m in moved.terms if m.degree > 0]
            terms.append((self._unit(n_new, idx), sr.one))
            return Polynomial(n_new, sr, terms)

        transitions = {key: lift(p) for key, p in automaton.transitions.items()}
        for c, idx in constant_index:
            loop = Polynomial.variable(n_new, idx, sr)
            for a in automaton.alphabet:
                transitions[(states[idx - 1], a)] = loop
        final = list(automaton.final) + [c for c, _ in constant_index]
        return Wafa(sr, states, automaton.alphabet, transitions, lift(automaton.initial), final, origins)

    @staticmethod
    def _unit(n: int, idx: int) -> Tuple[int, ...]:
        exps = [0] * n
        exps[idx - 1] = 1
        return tuple(exps)

    def _add_initial_state(self, automaton: Wafa) -> Wafa:
        """Estado inicial nuevo con τ = P_0(τ) y δ(init,a) = P_0⟨δ(q1,a),...,δ(qn,a)⟩"""
        sr = automaton.semiring
        name = fresh_name(INITIAL_STATE, automaton.states)
        states = [name] + list(automaton.states)
        n_new = len(states)

        transitions = {}
        for (q, a), poly in automaton.transitions.items():
            transitions[(q, a)] = shift(poly, 1, n_new)
        for a in automaton.alphabet:
            composed = substitute(automaton.initial, [automaton.delta(q, a) for q in automaton.states],
                                  n_target=automaton.n)
            transitions[(name, a)] = shift(composed, 1, n_new)

        final = [evaluate(automaton.initial, list(automaton.final))] + list(automaton.final)
        origins = dict(automaton.origins)
        origins[name] = "estado inicial"
        return Wafa(sr, states, automaton.alphabet, transitions,
                    Polynomial.variable(n_new, 1, sr), final, origins)

    @exception_handler(logger, {"service": "NormalFormService", "method": "make_pure"})
    def make_pure(self, automaton: Wafa) -> Wafa:
        """Cada monomio s·m con s ≠ 1 pasa a ser m·k_s, con k_s bloqueado y τ(k_s) = s"""
        if not automaton.is_nice():
            raise PreconditionError("make_pure exige un WAFA nice (formas (i)-(iii))")
        sr = automaton.semiring
        coefficients: List[Any] = []
        for poly in automaton.all_polynomials():
            for mono in poly.terms:
                if not sr.is_one(mono.coeff) and not any(sr.eq(mono.coeff, s) for s in coefficients):
                    coefficients.append(mono.coeff)
        if not coefficients:
            return automaton

        states = list(automaton.states)
        origins = dict(automaton.origins)
        coeff_index = []
        for s in coefficients:
            name = fresh_name(f"k_{sr.render(s)}", states)
            states.append(name)
            origins[name] = f"coeficiente {sr.render(s)}"
            coeff_index.append((s, len(states)))
        n_new = len(states)
        identity = list(range(1, automaton.n + 1))

        def purify(poly: Polynomial) -> Polynomial:
            terms = []
            for mono in reindex(poly, identity, n_new).terms:
                if sr.is_one(mono.coeff):
                    terms.append((mono.exponents, sr.one))
                    continue
                idx = next(i for value, i in coeff_index if sr.eq(value, mono.coeff))
                exps = list(mono.exponents)
                exps[idx - 1] += 1
                terms.append((tuple(exps), sr.one))
            return Polynomial(n_new, sr, terms)

        transitions = {key: purify(p) for key, p in automaton.transitions.items()}
        for s, idx in coeff_index:
            loop = Polynomial.variable(n_new, idx, sr)
            for a in automaton.alphabet:
                transitions[(states[idx - 1], a)] = loop
        final = list(automaton.final) + [s for s, _ in coeff_index]
        result = Wafa(sr, states, automaton.alphabet, transitions, purify(automaton.initial), final, origins)
        logger.info(f"🧪 make_pure: {len(coefficients)} coeficientes distintos de 1")
        return result

    @exception_handler(logger, {"service": "NormalFormService", "method": "equalize"})
    def equalize(self, automaton: Wafa) -> Wafa:
        """Agrega el sumidero h_1 (τ = 1, δ = h_1^d) y rellena cada monomio hasta grado d"""
        if not automaton.is_nice():
            raise PreconditionError("equalize exige un WAFA nice (formas (i)-(iii))")
        sr = automaton.semiring
        d = max([1] + [p.max_degree for p in automaton.delta_polynomials()])
        sink = fresh_name(SINK_STATE, automaton.states)
        states = list(automaton.states) + [sink]
        n_new = len(states)
        identity = list(range(1, automaton.n + 1))

        def pad(poly: Polynomial) -> Polynomial:
            terms = []
            for mono in reindex(poly, identity, n_new).terms:
                exps = list(mono.exponents)
                exps[-1] += d - mono.degree
                terms.append((tuple(exps), mono.coeff))
            return Polynomial(n_new, sr, terms)

        transitions = {key: pad(p) for key, p in automaton.transitions.items()}
        sink_loop = Polynomial.variable(n_new, n_new, sr, power=d)
        for a in automaton.alphabet:
            transitions[(sink, a)] = sink_loop
        origins = dict(automaton.origins)
        origins[sink] = "sumidero de ecualización"
        result = Wafa(sr, states, automaton.alphabet, transitions,
                      reindex(automaton.initial, identity, n_new),
                      list(automaton.final) + [sr.one], origins)
        logger.info(f"⚖️ equalize: grado común d={d}")
        return result


normal_form_service = NormalFormService()
make_nice = normal_form_service.make_nice
make_pure = normal_form_service.make_pure
equalize = normal_form_service.equalize
