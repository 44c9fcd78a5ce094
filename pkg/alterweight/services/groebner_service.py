from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

from alterweight.core.config import settings
from alterweight.core.errors import ArityMismatchError, FieldRequiredError, PreconditionError
from alterweight.core.logging_config import main_logger, exception_handler
from alterweight.models.groebner import GroebnerBasis
from alterweight.models.polynomial import Exponents, MonomialOrder, Polynomial, order_key
from alterweight.models.semiring import RAT
from alterweight.schemas.reports import GroebnerAuditReport

logger = main_logger

# Polinomio de trabajo: exponentes → coeficiente racional no nulo
Terms = Dict[Exponents, Fraction]
Generators = Union[GroebnerBasis, Sequence[Polynomial]]


def resolve_order(order: Optional[Union[str, MonomialOrder]]) -> MonomialOrder:
    return MonomialOrder(order or settings.ALTERWEIGHT_MONOMIAL_ORDER)


def _require_field(p: Polynomial):
    if p.base.name != RAT.name:
        raise FieldRequiredError(
            f"Gröbner exige coeficientes en ℚ y el polinomio está sobre {p.base.name}",
            {"semiring": p.base.name},
        )


def _lead(terms: Terms, order: MonomialOrder) -> Exponents:
    return max(terms, key=lambda e: order_key(e, order))


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _monic(terms: Terms, order: MonomialOrder) -> Terms:
    c = terms[_lead(terms, order)]
    return {e: v / c for e, v in terms.items()}


def _to_poly(n: int, terms: Terms) -> Polynomial:
    return Polynomial._from_dict(n, RAT, dict(terms))


class GroebnerService:
    """Núcleo de Gröbner sobre ℚ: división, Buchberger, pertenencia y auditoría"""

    def _unpack(self, generators: Generators, order) -> Tuple[MonomialOrder, List[Polynomial]]:
        if isinstance(generators, GroebnerBasis):
            return generators.order, list(generators.generators)
        return resolve_order(order), list(generators)

    def _reduce(self, terms: Terms, divisors: List[Terms], order: MonomialOrder,
                track: bool = False) -> Tuple[List[Terms], Terms]:
        """División multivariada; el resto no tiene monomios divisibles por ningún líder"""
        p = dict(terms)
        heads = [(_lead(g, order), g) for g in divisors]
        cofactors: List[Terms] = [{} for _ in divisors]
        remainder: Terms = {}
        while p:
            lead = _lead(p, order)
            coeff = p[lead]
            for i, (g_lead, g) in enumerate(heads):
                if not _divides(g_lead, lead):
                    continue
                shift = tuple(a - b for a, b in zip(lead, g_lead))
                factor = coeff / g[g_lead]
                if track:
                    value = cofactors[i].get(shift, 0) + factor
                    if value:
                        cofactors[i][shift] = value
                    else:
                        cofactors[i].pop(shift, None)
                for e, c in g.items():
                    key = tuple(a + b for a, b in zip(e, shift))
                    value = p.get(key, 0) - factor * c
                    if value:
                        p[key] = value
                    else:
                        p.pop(key, None)
                break
            else:
                remainder[lead] = coeff
                del p[lead]
        return cofactors, remainder

    def _s_terms(self, f: Terms, g: Terms, order: MonomialOrder) -> Terms:
        lf, lg = _lead(f, order), _lead(g, order)
        lcm = tuple(max(a, b) for a, b in zip(lf, lg))
        mf = tuple(a - b for a, b in zip(lcm, lf))
        mg = tuple(a - b for a, b in zip(lcm, lg))
        out: Terms = {}
        for e, c in f.items():
            key = tuple(a + b for a, b in zip(e, mf))
            out[key] = out.get(key, 0) + c / f[lf]
        for e, c in g.items():
            key = tuple(a + b for a, b in zip(e, mg))
            out[key] = out.get(key, 0) - c / g[lg]
        return {e: c for e, c in out.items() if c}

    # ------------------------------------------------------------------
    # Operaciones públicas
    # ------------------------------------------------------------------

    def leading_term(self, p: Polynomial, order=None) -> Tuple[Exponents, Fraction]:
        """Monomio y coeficiente líderes de p (no nulo)"""
        _require_field(p)
        if p.is_zero:
            raise PreconditionError("El polinomio cero no tiene término líder")
        terms = p.as_dict()
        lead = _lead(terms, resolve_order(order))
        return lead, terms[lead]

    @exception_handler(logger, {"service": "GroebnerService", "method": "divide"})
    def divide(self, p: Polynomial, generators: Generators, order=None) -> Tuple[List[Polynomial], Polynomial]:
        """p = Σ cofactor_i·g_i + resto, con aritmética exacta"""
        order, gens = self._unpack(generators, order)
        _require_field(p)
        for g in gens:
            _require_field(g)
            if g.n != p.n:
                raise ArityMismatchError(f"Generador con {g.n} indeterminadas para un polinomio con {p.n}")
        nonzero = [(i, g.as_dict()) for i, g in enumerate(gens) if not g.is_zero]
        cofactors, remainder = self._reduce(p.as_dict(), [t for _, t in nonzero], order, track=True)
        result = [Polynomial.zero(p.n, RAT) for _ in gens]
        for (i, _), terms in zip(nonzero, cofactors):
            result[i] = _to_poly(p.n, terms)
        return result, _to_poly(p.n, remainder)

    def normal_form(self, p: Polynomial, generators: Generators, order=None) -> Polynomial:
        order, gens = self._unpack(generators, order)
        _require_field(p)
        for g in gens:
            _require_field(g)
            if g.n != p.n:
                raise ArityMismatchError(f"Generador con {g.n} indeterminadas para un polinomio con {p.n}")
        divisors = [g.as_dict() for g in gens if not g.is_zero]
        _, remainder = self._reduce(p.as_dict(), divisors, order)
        return _to_poly(p.n, remainder)

    def s_polynomial(self, f: Polynomial, g: Polynomial, order=None) -> Polynomial:
        order = resolve_order(order)
        _require_field(f)
        _require_field(g)
        if f.is_zero or g.is_zero:
            return Polynomial.zero(f.n, RAT)
        return _to_poly(f.n, self._s_terms(f.as_dict(), g.as_dict(), order))

    @exception_handler(logger, {"service": "GroebnerService", "method": "buchberger"})
    def buchberger(self, generators: Sequence[Polynomial], order=None, n: Optional[int] = None) -> GroebnerBasis:
        """
        Base de Gröbner reducida de ⟨F⟩. Se descartan los pares con líderes
        coprimos (primer criterio); el resultado es mónico, inter-reducido y
        ordenado, por lo que es único para un orden fijo.
        """
        order = resolve_order(order)
        gens = list(generators)
        if n is None:
            if not gens:
                raise ArityMismatchError("buchberger necesita n cuando no hay generadores")
            n = gens[0].n
        for g in gens:
            _require_field(g)
            if g.n != n:
                raise ArityMismatchError("Todos los generadores deben compartir indeterminadas")

        basis: List[Terms] = [_monic(g.as_dict(), order) for g in gens if not g.is_zero]
        unit = GroebnerBasis(n, order, (Polynomial.one(n, RAT),))
        if any(_lead(g, order) == (0,) * n for g in basis):
            return unit

        pairs = list(combinations(range(len(basis)), 2))
        while pairs:
            i, j = pairs.pop(0)
            li, lj = _lead(basis[i], order), _lead(basis[j], order)
            if all(a == 0 or b == 0 for a, b in zip(li, lj)):
                continue
            _, r = self._reduce(self._s_terms(basis[i], basis[j], order), basis, order)
            if not r:
                continue
            r = _monic(r, order)
            if _lead(r, order) == (0,) * n:
                return unit
            basis.append(r)
            k = len(basis) - 1
            pairs.extend((m, k) for m in range(k))

        # Base mínima: se quitan los generadores cuyo líder es múltiplo de otro
        leads = [_lead(g, order) for g in basis]
        minimal = []
        for i, g in enumerate(basis):
            redundant = any(
                j != i and _divides(leads[j], leads[i]) and (leads[j] != leads[i] or j < i)
                for j in range(len(basis))
            )
            if not redundant:
                minimal.append(g)

        reduced: List[Terms] = []
        for i, g in enumerate(minimal):
            others = minimal[:i] + minimal[i + 1:]
            lead = _lead(g, order)
            tail = {e: c for e, c in g.items() if e != lead}
            _, r = self._reduce(tail, others, order)
            r[lead] = g[lead]
            reduced.append(r)

        reduced.sort(key=lambda t: order_key(_lead(t, order), order), reverse=True)
        result = GroebnerBasis(n, order, tuple(_to_poly(n, t) for t in reduced))
        logger.debug(f"🧮 buchberger: {len(gens)} generadores → base de {len(result)} ({order.value})")
        return result

    def ideal_member(self, p: Polynomial, basis: GroebnerBasis) -> bool:
        return self.normal_form(p, basis).is_zero

    @exception_handler(logger, {"service": "GroebnerService", "method": "audit"})
    def audit(self, basis: GroebnerBasis) -> GroebnerAuditReport:
        """Criterio de Buchberger: todo S-polinomio de la base reduce a 0"""
        terms = [g.as_dict() for g in basis.generators]
        failing = []
        for i, j in combinations(range(len(terms)), 2):
            _, r = self._reduce(self._s_terms(terms[i], terms[j], basis.order), terms, basis.order)
            if r:
                failing.append([i, j])
        return GroebnerAuditReport(
            order=basis.order.value, generator_count=len(terms), failing_pairs=failing
        )


groebner_service = GroebnerService()
leading_term = groebner_service.leading_term
divide = groebner_service.divide
normal_form = groebner_service.normal_form
s_polynomial = groebner_service.s_polynomial
buchberger = groebner_service.buchberger
ideal_member = groebner_service.ideal_member
audit = groebner_service.audit
