from graphviz import Digraph

from alterweight.core.errors import PreconditionError
from alterweight.core.logging_config import main_logger, exception_handler
from alterweight.models.polynomial import Polynomial
from alterweight.models.wafa import Wafa
from alterweight.models.wfta import Wfta

logger = main_logger

START_NODE = "__P0__"


class RenderService:
    """Salida DOT: una multiflecha por monomio, con el coeficiente en la etiqueta"""

    def _multi_arrow(self, graph: Digraph, name: str, source: str, label: str,
                     poly_states, exponents) -> None:
        heads = [(state, e) for state, e in zip(poly_states, exponents) if e]
        if len(heads) == 1 and heads[0][1] == 1:
            graph.edge(source, heads[0][0], label=label)
            return
        graph.node(name, label="", shape="point")
        graph.edge(source, name, label=label, arrowhead="none")
        for state, e in heads:
            graph.edge(name, state, label=str(e) if e > 1 else "")

    def _monomial_label(self, automaton: Wafa, prefix: str, coeff) -> str:
        sr = automaton.semiring
        if sr.is_one(coeff):
            return prefix
        rendered = sr.render(coeff)
        return f"{prefix} / {rendered}" if prefix else rendered

    def _polynomial_arrows(self, graph: Digraph, automaton: Wafa, source: str, key: str,
                           letter: str, poly: Polynomial) -> None:
        for i, mono in enumerate(poly.terms):
            self._multi_arrow(graph, f"__{key}_{i}", source, self._monomial_label(automaton, letter, mono.coeff),
                              automaton.states, mono.exponents)

    @exception_handler(logger, {"service": "RenderService", "method": "wafa_to_dot"})
    def wafa_to_dot(self, automaton: Wafa) -> str:
        sr = automaton.semiring
        graph = Digraph("WAFA")
        graph.attr(rankdir="LR")
        graph.node(START_NODE, label="", shape="none")
        for q, tau in zip(automaton.states, automaton.final):
            shape = "circle" if sr.is_zero(tau) else "doublecircle"
            label = q if sr.is_zero(tau) else f"{q} / {sr.render(tau)}"
            graph.node(q, label=label, shape=shape)
        self._polynomial_arrows(graph, automaton, START_NODE, "init", "", automaton.initial)
        for qi, q in enumerate(automaton.states):
            for ai, a in enumerate(automaton.alphabet):
                if (q, a) in automaton.transitions:
                    self._polynomial_arrows(graph, automaton, q, f"m{qi}_{ai}", a, automaton.transitions[(q, a)])
        return graph.source

    @exception_handler(logger, {"service": "RenderService", "method": "wfta_to_dot"})
    def wfta_to_dot(self, automaton: Wfta) -> str:
        """Hiperaristas hijos → punto → destino, etiquetadas g / peso"""
        sr = automaton.semiring
        graph = Digraph("WFTA")
        graph.attr(rankdir="BT")
        for q, lam in zip(automaton.states, automaton.root_weights):
            if sr.is_zero(lam):
                graph.node(q, shape="circle")
            else:
                graph.node(q, label=f"{q} / {sr.render(lam)}", shape="doublecircle")
        for i, ((g, children, q), weight) in enumerate(automaton.sorted_transitions()):
            label = g if sr.is_one(weight) else f"{g} / {sr.render(weight)}"
            name = f"__t{i}"
            graph.node(name, label="", shape="point")
            for position, p in enumerate(children, start=1):
                graph.edge(p, name, label=str(position), arrowhead="none")
            graph.edge(name, q, label=label)
        return graph.source

    def to_dot(self, obj) -> str:
        if isinstance(obj, Wafa):
            return self.wafa_to_dot(obj)
        if isinstance(obj, Wfta):
            return self.wfta_to_dot(obj)
        raise PreconditionError(f"render --dot admite WAFA y WFTA, no {type(obj).__name__}")


render_service = RenderService()
wafa_to_dot = render_service.wafa_to_dot
wfta_to_dot = render_service.wfta_to_dot
to_dot = render_service.to_dot
