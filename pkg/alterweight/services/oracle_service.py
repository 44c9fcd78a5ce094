from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Any, Callable, List, Sequence, Tuple

from alterweight.core.config import settings
from alterweight.core.errors import PreconditionError, SemiringMismatchError
from alterweight.core.logging_config import main_logger, exception_handler
from alterweight.models.pa import PolyAutomaton
from alterweight.models.semiring import SemiringDescriptor
from alterweight.models.tree import END_MARKER, generic_tree
from alterweight.models.wafa import Wafa
from alterweight.models.wfta import Wfta
from alterweight.models.words import all_words, reverse
from alterweight.schemas.reports import OracleMismatch, OracleReport
from alterweight.services.conversion_service import wafa_to_wfta
from alterweight.services.normal_form_service import equalize, make_nice, make_pure
from alterweight.services.zeroness_service import wafa_to_pa

logger = main_logger

Series = Callable[[Sequence[str]], Any]


class DerivedSeries(str, Enum):
    """Construcciones contra las que se puede contrastar un WAFA"""
    TO_WFTA = "to-wfta"
    REVERSE_PA = "reverse-pa"
    NICE = "nice"
    PURE = "pure"
    EQUALIZE = "equalize"


def _word_tree_rank(automaton: Wfta) -> Tuple[List[str], int]:
    """Letras y rango r de un WFTA sobre Σ_#^r"""
    ranks = {rank for name, rank in automaton.alphabet if name != END_MARKER}
    if END_MARKER not in automaton.alphabet or automaton.alphabet.rank(END_MARKER) != 0 or len(ranks) > 1:
        raise PreconditionError("El WFTA no está sobre un alfabeto de árboles-palabra Σ_#^r")
    letters = [name for name in automaton.alphabet.names if name != END_MARKER]
    return letters, ranks.pop() if ranks else 1


class OracleService:
    """Oráculo de fuerza bruta: compara dos series en todas las palabras de longitud ≤ N"""

    def series_of(self, obj, reverse_pa: bool = False) -> Tuple[Series, List[str], SemiringDescriptor]:
        """Serie de palabras de un documento; un PA se lee invertido si reverse_pa"""
        if isinstance(obj, Wafa):
            return obj.behavior, obj.alphabet, obj.semiring
        if isinstance(obj, PolyAutomaton):
            if reverse_pa:
                return (lambda w: obj.behavior(reverse(w))), obj.alphabet, obj.semiring
            return obj.behavior, obj.alphabet, obj.semiring
        if isinstance(obj, Wfta):
            letters, r = _word_tree_rank(obj)
            return (lambda w: obj.behavior(generic_tree(w, r))), letters, obj.semiring
        raise PreconditionError(f"Un documento de tipo {type(obj).__name__} no define una serie de palabras")

    def derived_series(self, automaton: Wafa, derived: DerivedSeries) -> Series:
        derived = DerivedSeries(derived)
        if derived == DerivedSeries.TO_WFTA:
            translation = wafa_to_wfta(automaton)
            return lambda w: translation.wfta.behavior(generic_tree(w, translation.rank))
        if derived == DerivedSeries.REVERSE_PA:
            pa = wafa_to_pa(automaton)
            return lambda w: pa.behavior(reverse(w))
        nice = make_nice(automaton)
        if derived == DerivedSeries.NICE:
            return nice.behavior
        if derived == DerivedSeries.PURE:
            return make_pure(nice).behavior
        return equalize(nice).behavior

    @exception_handler(logger, {"service": "OracleService", "method": "compare"})
    def compare(self, left: Series, right: Series, alphabet: Sequence[str],
                semiring: SemiringDescriptor, max_len: int) -> OracleReport:
        """
        Evalúa ambas series en paralelo; la discrepancia reportada es la
        primera en orden longitud-lexicográfico.
        """
        words = list(all_words(alphabet, max_len))
        workers = max(1, settings.ALTERWEIGHT_ORACLE_WORKERS)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(lambda w: (left(w), right(w)), words))
        for word, (a, b) in zip(words, values):
            if not semiring.eq(a, b):
                logger.info(f"❌ oráculo: discrepancia en {word} tras {len(words)} palabras")
                return OracleReport(
                    max_len=max_len,
                    words_checked=len(words),
                    mismatch=OracleMismatch(word=word, left=semiring.render(a), right=semiring.render(b)),
                )
        logger.info(f"✅ oráculo: {len(words)} palabras coinciden (|w| ≤ {max_len})")
        return OracleReport(max_len=max_len, words_checked=len(words))

    def compare_documents(self, left_obj, right_obj, max_len: int) -> OracleReport:
        """Un WAFA frente a un PA se compara a través de la inversión w ↦ w^R"""
        mixed = isinstance(left_obj, PolyAutomaton) != isinstance(right_obj, PolyAutomaton)
        left, letters_l, sr_l = self.series_of(left_obj, reverse_pa=mixed)
        right, letters_r, sr_r = self.series_of(right_obj, reverse_pa=mixed)
        if sr_l != sr_r:
            raise SemiringMismatchError(f"Semianillos incompatibles: {sr_l.name} vs {sr_r.name}")
        if set(letters_l) != set(letters_r):
            raise SemiringMismatchError(f"Alfabetos distintos: {letters_l} vs {letters_r}")
        return self.compare(left, right, letters_l, sr_l, max_len)

    def compare_derived(self, automaton: Wafa, derived: DerivedSeries, max_len: int) -> OracleReport:
        return self.compare(automaton.behavior, self.derived_series(automaton, derived),
                            automaton.alphabet, automaton.semiring, max_len)


oracle_service = OracleService()
series_of = oracle_service.series_of
derived_series = oracle_service.derived_series
compare = oracle_service.compare
compare_documents = oracle_service.compare_documents
compare_derived = oracle_service.compare_derived
