from typing import Dict

from alterweight.core.logging_config import main_logger, exception_handler
from alterweight.models.nivat import NivatDecomposition, RunLetter
from alterweight.models.tree import RankedAlphabet, Tree, TreeHomomorphism, hom_preimages
from alterweight.models.wafa import Wafa
from alterweight.models.wfta import Dta, Wfta
from alterweight.services.conversion_service import wafa_to_wfta
from alterweight.services.normal_form_service import fresh_name
from alterweight.services.tree_automata_service import char_lift, hadamard_wfta, image_value

logger = main_logger

ROOT_OK_STATE = "root"
WEIGHT_STATE = "w"


class NivatService:
    """Servicio para la descomposición de Nivat de un WAFA"""

    @exception_handler(logger, {"service": "NivatService", "method": "nivat_decompose"})
    def nivat_decompose(self, automaton: Wafa) -> NivatDecomposition:
        """
        Λ = transiciones no nulas del WFTA traducido (más sus copias marcadas
        como raíz cuando λ(q) ≠ 0), h olvida la anotación, L acepta las
        corridas localmente consistentes con la marca solo en la raíz, y A_w
        pondera cada letra con β_g(p̄,q), por λ(q) en las letras raíz.
        """
        translation = wafa_to_wfta(automaton)
        source = translation.wfta
        sr = source.semiring

        letters: Dict[str, RunLetter] = {}
        weights = {}
        for (g, children, q), beta in source.sorted_transitions():
            plain = RunLetter(g, children, q)
            letters[plain.name] = plain
            weights[plain.name] = beta
            lam = source.lam(q)
            if not sr.is_zero(lam):
                marked = RunLetter(g, children, q, root=True)
                letters[marked.name] = marked
                weights[marked.name] = sr.mul(beta, lam)

        if not letters:
            # Sin transiciones no nulas la serie es 0; un alfabeto no puede quedar vacío
            dead = RunLetter("#", (), source.states[0])
            letters[dead.name] = dead
            weights[dead.name] = sr.zero

        run_alphabet = RankedAlphabet([(name, len(letter.children)) for name, letter in letters.items()])

        patterns = {
            name: Tree(letter.symbol, [Tree.variable(i) for i in range(1, len(letter.children) + 1)])
            for name, letter in letters.items()
        }
        hom = TreeHomomorphism(run_alphabet, source.alphabet, patterns)

        root_ok = fresh_name(ROOT_OK_STATE, source.states)
        delta = {
            (name, letter.children): (root_ok if letter.root else letter.target)
            for name, letter in letters.items()
        }
        consistency = Dta(list(source.states) + [root_ok], run_alphabet, delta, [root_ok])

        weight_automaton = Wfta(
            sr,
            [WEIGHT_STATE],
            run_alphabet,
            {
                (name, (WEIGHT_STATE,) * len(letter.children), WEIGHT_STATE): weights[name]
                for name, letter in letters.items()
            },
            {WEIGHT_STATE: sr.one},
        )
        logger.info(f"🧬 nivat_decompose: |Λ|={len(letters)}, |Q_L|={len(consistency.states)}")
        return NivatDecomposition(
            rank=translation.rank,
            run_alphabet=run_alphabet,
            letters=letters,
            hom=hom,
            consistency=consistency,
            weights=weight_automaton,
            source=source,
        )

    def _evaluator(self, decomposition: NivatDecomposition) -> Wfta:
        """A_w ⊙ χ_L, construido una vez por descomposición"""
        if decomposition.evaluator is None:
            lifted = char_lift(decomposition.consistency, decomposition.weights.semiring)
            decomposition.evaluator = hadamard_wfta(decomposition.weights, lifted)
        return decomposition.evaluator

    @exception_handler(logger, {"service": "NivatService", "method": "nivat_eval"})
    def nivat_eval(self, decomposition: NivatDecomposition, t: Tree):
        """h(⟦A_w⟧ ⊙ χ_L)(t) sumando sobre todas las preimágenes de t, agrupadas"""
        return image_value(self._evaluator(decomposition), decomposition.hom, t)

    @exception_handler(logger, {"service": "NivatService", "method": "nivat_eval_enumerated"})
    def nivat_eval_enumerated(self, decomposition: NivatDecomposition, t: Tree):
        """La misma suma, enumerando explícitamente cada preimagen (con límite de tamaño)"""
        sr = decomposition.weights.semiring
        total = sr.zero
        for preimage in hom_preimages(decomposition.hom, t):
            if decomposition.consistency.accepts(preimage):
                total = sr.add(total, decomposition.weights.behavior(preimage))
        return total


nivat_service = NivatService()
nivat_decompose = nivat_service.nivat_decompose
nivat_eval = nivat_service.nivat_eval
nivat_eval_enumerated = nivat_service.nivat_eval_enumerated
