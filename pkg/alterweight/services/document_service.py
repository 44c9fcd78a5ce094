import json
import re
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple, Union

from pydantic import TypeAdapter, ValidationError

from alterweight.core.errors import ParseError
from alterweight.core.logging_config import main_logger, exception_handler
from alterweight.models.groebner import Ideal
from alterweight.models.pa import PolyAutomaton
from alterweight.models.polynomial import Polynomial, polynomial_from_json, polynomial_to_json
from alterweight.models.semiring import RAT, SemiringDescriptor, get_semiring
from alterweight.models.tree import (
    END_MARKER, RankedAlphabet, Tree, TreeHomomorphism, parse_tree, word_hom
)
from alterweight.models.wafa import Wafa
from alterweight.models.wfta import Dta, Wfta
from alterweight.schemas.documents import (
    Document, DtaDocument, HomDocument, IdealDocument, PaDocument, TreeDocument,
    WafaDocument, WftaDocument, WftaRule
)

logger = main_logger

DomainObject = Union[Wafa, Wfta, Dta, PolyAutomaton, TreeHomomorphism, Tree, Ideal]

_RULE_RE = re.compile(r"^\s*([^\s(),]+)\s*(?:\(([^()]*)\))?\s*->\s*([^\s(),:]+)\s*$")
_document_adapter = TypeAdapter(Document)


def _parse_rule(text: str) -> Tuple[str, Tuple[str, ...], str]:
    match = _RULE_RE.match(text)
    if not match:
        raise ParseError(f"Regla mal formada, se esperaba 'g(p1,...,pk) -> q': {text!r}")
    symbol, children, target = match.groups()
    states = tuple(c.strip() for c in children.split(",")) if children and children.strip() else ()
    if any(not c for c in states):
        raise ParseError(f"Estado vacío en la regla {text!r}")
    return symbol, states, target


def _format_rule(symbol: str, children: Sequence[str], target: str) -> str:
    if children:
        return f"{symbol}({','.join(children)}) -> {target}"
    return f"{symbol} -> {target}"


class DocumentService:
    """Lectura y escritura de los documentos JSON autodescriptivos"""

    # ------------------------------------------------------------------
    # Lectura
    # ------------------------------------------------------------------

    @exception_handler(logger, {"service": "DocumentService", "method": "load_document"})
    def load_document(self, path: Union[str, Path]) -> DomainObject:
        text = Path(path).read_text(encoding="utf-8")
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"JSON inválido en {path}: {e.msg} (línea {e.lineno})", {"path": str(path)})
        return self.parse_document(data)

    def parse_document(self, data: Any) -> DomainObject:
        try:
            document = _document_adapter.validate_python(data)
        except ValidationError as e:
            first = e.errors()[0]
            where = ".".join(str(p) for p in first["loc"])
            raise ParseError(f"Documento inválido en {where or 'raíz'}: {first['msg']}", {"errors": e.error_count()})
        builder = {
            "wafa": self._build_wafa,
            "wfta": self._build_wfta,
            "dta": self._build_dta,
            "pa": self._build_pa,
            "hom": self._build_hom,
            "tree": self._build_tree,
            "ideal": self._build_ideal,
        }[document.kind]
        return builder(document)

    def _build_wafa(self, doc: WafaDocument) -> Wafa:
        sr = get_semiring(doc.semiring)
        n = len(doc.states)
        transitions = {}
        for q, row in doc.transitions.items():
            for a, poly in row.items():
                transitions[(q, a)] = polynomial_from_json(poly, sr, n)
        initial = polynomial_from_json(doc.initial, sr, n)
        final = {q: sr.parse_element(v) for q, v in doc.final.items()}
        return Wafa(sr, doc.states, doc.alphabet, transitions, initial, final)

    def _build_wfta(self, doc: WftaDocument) -> Wfta:
        sr = get_semiring(doc.semiring)
        alphabet = RankedAlphabet.parse(doc.alphabet)
        transitions = {}
        for entry in doc.transitions:
            if isinstance(entry, WftaRule):
                rule, weight = entry.rule, sr.parse_element(entry.weight)
            else:
                rule, sep, raw = entry.rpartition(":")
                if not sep:
                    raise ParseError(f"Transición sin peso: {entry!r}")
                weight = sr.parse_element(raw.strip())
            key = _parse_rule(rule)
            if key in transitions:
                raise ParseError(f"Transición repetida: {rule.strip()!r}")
            transitions[key] = weight
        roots = {q: sr.parse_element(v) for q, v in doc.root_weights.items()}
        return Wfta(sr, doc.states, alphabet, transitions, roots)

    def _build_dta(self, doc: DtaDocument) -> Dta:
        alphabet = RankedAlphabet.parse(doc.alphabet)
        delta = {}
        for rule in doc.transitions:
            symbol, children, target = _parse_rule(rule)
            if (symbol, children) in delta:
                raise ParseError(f"El DTA no es determinista en {rule!r}")
            delta[(symbol, children)] = target
        return Dta(doc.states, alphabet, delta, doc.accepting)

    def _build_pa(self, doc: PaDocument) -> PolyAutomaton:
        sr = get_semiring(doc.semiring)
        transitions = {
            a: [polynomial_from_json(p, sr, doc.n) for p in polys]
            for a, polys in doc.transitions.items()
        }
        return PolyAutomaton(
            sr, doc.n, doc.alphabet, [sr.parse_element(v) for v in doc.initial], transitions,
            polynomial_from_json(doc.output, sr, doc.n), state_names=doc.state_names,
        )

    def _build_hom(self, doc: HomDocument) -> TreeHomomorphism:
        tree_form = doc.patterns is not None
        word_form = doc.word_images is not None
        if tree_form == word_form:
            raise ParseError("Un homomorfismo se da con patterns o con word_images, no ambos ni ninguno")
        if word_form:
            if doc.source_letters is None or doc.target_letters is None:
                raise ParseError("word_images exige source_letters y target_letters")
            return word_hom(doc.word_images, doc.source_letters, doc.target_letters)
        if doc.source is None or doc.target is None:
            raise ParseError("patterns exige source y target")
        source = RankedAlphabet.parse(doc.source)
        target = RankedAlphabet.parse(doc.target)
        patterns = {g: parse_tree(text, allow_variables=True) for g, text in doc.patterns.items()}
        return TreeHomomorphism(source, target, patterns)

    def _build_tree(self, doc: TreeDocument) -> Tree:
        alphabet = RankedAlphabet.parse(doc.alphabet) if doc.alphabet else None
        return parse_tree(doc.tree, alphabet)

    def _build_ideal(self, doc: IdealDocument) -> Ideal:
        generators = tuple(polynomial_from_json(g, RAT, doc.n) for g in doc.generators)
        return Ideal(doc.n, generators, doc.order)

    # ------------------------------------------------------------------
    # Escritura (orden determinista: estados y alfabeto en su orden)
    # ------------------------------------------------------------------

    def to_document(self, obj: DomainObject) -> Dict[str, Any]:
        if isinstance(obj, Wafa):
            return self._wafa_document(obj)
        if isinstance(obj, Wfta):
            return self._wfta_document(obj)
        if isinstance(obj, Dta):
            return self._dta_document(obj)
        if isinstance(obj, PolyAutomaton):
            return self._pa_document(obj)
        if isinstance(obj, TreeHomomorphism):
            return self._hom_document(obj)
        if isinstance(obj, Tree):
            return {"kind": "tree", "tree": str(obj)}
        if isinstance(obj, Ideal):
            doc = {"kind": "ideal", "n": obj.n}
            if obj.order is not None:
                doc["order"] = obj.order.value
            doc["generators"] = [polynomial_to_json(g) for g in obj.generators]
            return doc
        raise ParseError(f"No hay formato de documento para {type(obj).__name__}")

    def dump_document(self, obj: DomainObject) -> str:
        return json.dumps(self.to_document(obj), indent=2, ensure_ascii=False) + "\n"

    def _wafa_document(self, automaton: Wafa) -> Dict[str, Any]:
        sr = automaton.semiring
        transitions: Dict[str, Dict[str, Any]] = {}
        for q in automaton.states:
            row = {
                a: polynomial_to_json(automaton.transitions[(q, a)])
                for a in automaton.alphabet
                if (q, a) in automaton.transitions
            }
            if row:
                transitions[q] = row
        return {
            "kind": "wafa",
            "semiring": sr.name,
            "states": list(automaton.states),
            "alphabet": list(automaton.alphabet),
            "initial": polynomial_to_json(automaton.initial),
            "transitions": transitions,
            "final": {
                q: sr.element_to_json(v)
                for q, v in zip(automaton.states, automaton.final)
                if not sr.is_zero(v)
            },
        }

    def _weighted_entry(self, sr: SemiringDescriptor, rule: str, weight) -> Union[str, Dict[str, Any]]:
        raw = sr.element_to_json(weight)
        if isinstance(raw, (str, int)):
            return f"{rule} : {raw}"
        return {"rule": rule, "weight": raw}

    def _wfta_document(self, automaton: Wfta) -> Dict[str, Any]:
        sr = automaton.semiring
        return {
            "kind": "wfta",
            "semiring": sr.name,
            "states": list(automaton.states),
            "alphabet": automaton.alphabet.declarations(),
            "transitions": [
                self._weighted_entry(sr, _format_rule(g, children, q), weight)
                for (g, children, q), weight in automaton.sorted_transitions()
            ],
            "root_weights": {
                q: sr.element_to_json(lam)
                for q, lam in zip(automaton.states, automaton.root_weights)
                if not sr.is_zero(lam)
            },
        }

    def _dta_document(self, dta: Dta) -> Dict[str, Any]:
        return {
            "kind": "dta",
            "states": dta.declared_states,
            "alphabet": dta.alphabet.declarations(),
            "transitions": [_format_rule(g, children, q) for (g, children), q in dta.sorted_delta()],
            "accepting": [q for q in dta.states if q in dta.accepting],
        }

    def _pa_document(self, automaton: PolyAutomaton) -> Dict[str, Any]:
        sr = automaton.semiring
        doc = {
            "kind": "pa",
            "semiring": sr.name,
            "n": automaton.n,
            "alphabet": list(automaton.alphabet),
            "initial": [sr.element_to_json(v) for v in automaton.initial],
            "transitions": {
                a: [polynomial_to_json(p) for p in automaton.transitions[a]]
                for a in automaton.alphabet
            },
            "output": polynomial_to_json(automaton.output),
        }
        if automaton.state_names is not None:
            doc["state_names"] = list(automaton.state_names)
        return doc

    def _word_images(self, hom: TreeHomomorphism) -> Union[Dict[str, List[str]], None]:
        """Imágenes como palabras si hom es un homomorfismo de palabras; None en otro caso"""
        for alphabet in (hom.source, hom.target):
            if END_MARKER not in alphabet or alphabet.rank(END_MARKER) != 0:
                return None
            if any(rank != 1 for name, rank in alphabet if name != END_MARKER):
                return None
        if hom.patterns[END_MARKER] != Tree(END_MARKER):
            return None
        images = {}
        for name, _ in hom.source:
            if name == END_MARKER:
                continue
            letters, node = [], hom.patterns[name]
            while not node.is_variable:
                if len(node.children) != 1:
                    return None
                letters.append(node.label)
                node = node.children[0]
            if node.var != 1:
                return None
            images[name] = letters
        return images

    def _hom_document(self, hom: TreeHomomorphism) -> Dict[str, Any]:
        images = self._word_images(hom)
        if images is not None:
            return {
                "kind": "hom",
                "source_letters": [g for g in hom.source.names if g != END_MARKER],
                "target_letters": [g for g in hom.target.names if g != END_MARKER],
                "word_images": images,
            }
        return {
            "kind": "hom",
            "source": hom.source.declarations(),
            "target": hom.target.declarations(),
            "patterns": {g: str(hom.patterns[g]) for g in hom.source.names},
        }


document_service = DocumentService()
load_document = document_service.load_document
parse_document = document_service.parse_document
to_document = document_service.to_document
dump_document = document_service.dump_document
