"""
Polinomios multivariados dispersos sobre un semianillo conmutativo.

Forma canónica: monomios con vectores de exponentes distintos, sin
coeficientes nulos, ordenados de forma descendente en orden graduado
lexicográfico (x1 > x2 > ... > xn). Dos polinomios son iguales si y solo
si sus representaciones coinciden.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from alterweight.core.config import settings
from alterweight.core.errors import (
    ArityMismatchError, DegreeOverflowError, ParseError, SemiringMismatchError
)
from alterweight.models.semiring import SemiringDescriptor

Exponents = Tuple[int, ...]


class MonomialOrder(str, Enum):
    """Órdenes monomiales soportados"""
    GRLEX = "grlex"
    LEX = "lex"


def order_key(exponents: Exponents, order: MonomialOrder = MonomialOrder.GRLEX):
    """Clave de comparación: mayor clave ⇒ monomio mayor"""
    if order == MonomialOrder.LEX:
        return exponents
    return (sum(exponents), exponents)


@dataclass(frozen=True)
class Monomial:
    """Monomio s·x1^k1·...·xn^kn (exponentes densos, de longitud n)"""
    coeff: Any
    exponents: Exponents

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def exponent_map(self) -> Dict[int, int]:
        return {i + 1: e for i, e in enumerate(self.exponents) if e}


def _check_degree(degree: int, operation: str):
    limit = settings.ALTERWEIGHT_MAX_DEGREE
    if degree > limit:
        raise DegreeOverflowError(
            f"Grado {degree} excede el límite ALTERWEIGHT_MAX_DEGREE={limit} en {operation}",
            {"degree": degree, "limit": limit, "operation": operation},
        )


class Polynomial:
    """Elemento de S[X_n] en forma canónica (inmutable)"""

    __slots__ = ("n", "base", "terms", "_hash")

    def __init__(self, n: int, base: SemiringDescriptor, terms: Iterable = ()):
        acc: Dict[Exponents, Any] = {}
        for term in terms:
            if isinstance(term, Monomial):
                exps, coeff = term.exponents, term.coeff
            else:
                exps, coeff = term
            exps = tuple(exps)
            if len(exps) != n:
                raise ArityMismatchError(
                    f"Monomio con {len(exps)} exponentes en un polinomio sobre {n} indeterminadas"
                )
            acc[exps] = base.add(acc[exps], coeff) if exps in acc else coeff
        self._init_from(n, base, acc)

    def _init_from(self, n, base, acc):
        self.n = n
        self.base = base
        self.terms = tuple(
            Monomial(coeff, exps)
            for exps, coeff in sorted(acc.items(), key=lambda kv: order_key(kv[0]), reverse=True)
            if not base.is_zero(coeff)
        )
        self._hash = None

    @classmethod
    def _from_dict(cls, n: int, base: SemiringDescriptor, acc: Dict[Exponents, Any]) -> "Polynomial":
        poly = cls.__new__(cls)
        poly._init_from(n, base, acc)
        return poly

    # Constructores -----------------------------------------------------

    @classmethod
    def zero(cls, n: int, base: SemiringDescriptor) -> "Polynomial":
        return cls(n, base)

    @classmethod
    def constant(cls, n: int, value, base: SemiringDescriptor) -> "Polynomial":
        return cls(n, base, [((0,) * n, value)])

    @classmethod
    def one(cls, n: int, base: SemiringDescriptor) -> "Polynomial":
        return cls.constant(n, base.one, base)

    @classmethod
    def variable(cls, n: int, index: int, base: SemiringDescriptor, power: int = 1) -> "Polynomial":
        """x_index (índice 1-based)"""
        if not 1 <= index <= n:
            raise ArityMismatchError(f"Indeterminada x{index} fuera de rango (n={n})")
        exps = [0] * n
        exps[index - 1] = power
        return cls(n, base, [(tuple(exps), base.one)])

    @classmethod
    def from_terms(cls, n: int, base: SemiringDescriptor,
                   terms: Iterable[Tuple[Any, Dict[int, int]]]) -> "Polynomial":
        """Construye desde pares (coeficiente, {índice: potencia})"""
        dense = []
        for coeff, exp_map in terms:
            exps = [0] * n
            for idx, power in exp_map.items():
                if not 1 <= idx <= n:
                    raise ArityMismatchError(f"Indeterminada x{idx} fuera de rango (n={n})")
                exps[idx - 1] += power
            dense.append((tuple(exps), coeff))
        return cls(n, base, dense)

    # Consultas ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(m.degree == 0 for m in self.terms)

    @property
    def constant_term(self):
        for mono in self.terms:
            if mono.degree == 0:
                return mono.coeff
        return self.base.zero

    @property
    def max_degree(self) -> int:
        return self.terms[0].degree if self.terms else 0

    def as_dict(self) -> Dict[Exponents, Any]:
        return {m.exponents: m.coeff for m in self.terms}

    def coefficient(self, exponents: Exponents):
        for mono in self.terms:
            if mono.exponents == tuple(exponents):
                return mono.coeff
        return self.base.zero

    def variables(self) -> List[int]:
        """Índices (1-based) de las indeterminadas que aparecen"""
        used = set()
        for mono in self.terms:
            used.update(mono.exponent_map)
        return sorted(used)

    # Protocolo de igualdad y operadores ---------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.n != other.n or self.base.name != other.base.name or len(self.terms) != len(other.terms):
            return False
        return all(
            a.exponents == b.exponents and self.base.eq(a.coeff, b.coeff)
            for a, b in zip(self.terms, other.terms)
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.base.name, tuple((m.exponents, m.coeff) for m in self.terms)))
        return self._hash

    def __add__(self, other):
        return poly_add(self, other)

    def __mul__(self, other):
        return poly_mul(self, other)

    def __neg__(self):
        return poly_neg(self)

    def __sub__(self, other):
        return poly_sub(self, other)

    def __pow__(self, k: int):
        return poly_pow(self, k)

    def __repr__(self):
        return f"Polynomial(n={self.n}, base={self.base.name}, {self})"

    def __str__(self):
        return self.render()

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        """Representación legible; names reemplaza a x1..xn"""
        base = self.base
        if not self.terms:
            return base.render(base.zero)
        names = list(names) if names is not None else [f"x{i + 1}" for i in range(self.n)]
        minus_one = base.neg(base.one) if base.has_subtraction else None
        parts = []
        for mono in self.terms:
            factors = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(mono.exponents) if e
            )
            coeff = base.render(mono.coeff)
            if " " in coeff:
                coeff = f"({coeff})"
            if not factors:
                text = coeff
            elif base.is_one(mono.coeff):
                text = factors
            elif minus_one is not None and base.eq(mono.coeff, minus_one):
                text = f"-{factors}"
            else:
                text = f"{coeff}*{factors}"
            if not parts:
                parts.append(text)
            elif text.startswith("-"):
                parts.append(f" - {text[1:]}")
            else:
                parts.append(f" + {text}")
        return "".join(parts)


def _check_compatible(p: Polynomial, q: Polynomial):
    if p.n != q.n:
        raise ArityMismatchError(
            f"Número de indeterminadas incompatible: {p.n} vs {q.n}",
            {"left": p.n, "right": q.n},
        )
    if p.base.name != q.base.name:
        raise SemiringMismatchError(
            f"Semianillos incompatibles: {p.base.name} vs {q.base.name}"
        )


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_compatible(p, q)
    base = p.base
    acc = p.as_dict()
    for mono in q.terms:
        acc[mono.exponents] = base.add(acc[mono.exponents], mono.coeff) if mono.exponents in acc else mono.coeff
    return Polynomial._from_dict(p.n, base, acc)


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_compatible(p, q)
    if p.terms and q.terms:
        _check_degree(p.max_degree + q.max_degree, "poly_mul")
    base = p.base
    acc: Dict[Exponents, Any] = {}
    for a in p.terms:
        for b in q.terms:
            exps = tuple(x + y for x, y in zip(a.exponents, b.exponents))
            coeff = base.mul(a.coeff, b.coeff)
            acc[exps] = base.add(acc[exps], coeff) if exps in acc else coeff
    return Polynomial._from_dict(p.n, base, acc)


def poly_neg(p: Polynomial) -> Polynomial:
    base = p.base
    if not base.has_subtraction:
        raise SemiringMismatchError(f"El semianillo {base.name} no admite resta")
    return Polynomial._from_dict(p.n, base, {m.exponents: base.neg(m.coeff) for m in p.terms})


def poly_sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return poly_add(p, poly_neg(q))


def poly_scale(p: Polynomial, c) -> Polynomial:
    base = p.base
    return Polynomial._from_dict(p.n, base, {m.exponents: base.mul(c, m.coeff) for m in p.terms})


def poly_pow(p: Polynomial, k: int) -> Polynomial:
    if k < 0:
        raise ArityMismatchError("Exponente negativo en poly_pow")
    if p.terms:
        _check_degree(p.max_degree * k, "poly_pow")
    result = Polynomial.one(p.n, p.base)
    square = p
    while k > 0:
        if k & 1:
            result = poly_mul(result, square)
        k >>= 1
        if k:
            square = poly_mul(square, square)
    return result


def substitute(p: Polynomial, subs: Sequence[Polynomial], n_target: Optional[int] = None) -> Polynomial:
    """
    Sustitución simultánea p⟨p1,...,pn⟩ con expansión completa.
    n_target solo es necesario cuando subs está vacía.
    """
    if len(subs) != p.n:
        raise ArityMismatchError(
            f"La sustitución espera {p.n} polinomios y recibió {len(subs)}",
            {"expected": p.n, "received": len(subs)},
        )
    base = p.base
    m = subs[0].n if subs else (n_target if n_target is not None else 0)
    for s in subs:
        if s.n != m:
            raise ArityMismatchError("Los polinomios sustituidos deben compartir indeterminadas")
        if s.base.name != base.name:
            raise SemiringMismatchError(f"Semianillos incompatibles: {base.name} vs {s.base.name}")

    degrees = [s.max_degree for s in subs]
    predicted = max((sum(e * d for e, d in zip(mono.exponents, degrees)) for mono in p.terms), default=0)
    _check_degree(predicted, "substitute")

    powers: Dict[Tuple[int, int], Polynomial] = {}
    acc: Dict[Exponents, Any] = {}
    for mono in p.terms:
        term = Polynomial.constant(m, mono.coeff, base)
        for i, e in enumerate(mono.exponents):
            if not e:
                continue
            if (i, e) not in powers:
                powers[(i, e)] = poly_pow(subs[i], e)
            term = poly_mul(term, powers[(i, e)])
            if term.is_zero:
                break
        for t in term.terms:
            acc[t.exponents] = base.add(acc[t.exponents], t.coeff) if t.exponents in acc else t.coeff
    return Polynomial._from_dict(m, base, acc)


def evaluate(p: Polynomial, point: Sequence[Any]):
    """Valor numérico de p en un punto de S^n"""
    if len(point) != p.n:
        raise ArityMismatchError(
            f"El punto tiene {len(point)} coordenadas y el polinomio {p.n} indeterminadas"
        )
    base = p.base
    total = base.zero
    for mono in p.terms:
        value = mono.coeff
        for i, e in enumerate(mono.exponents):
            if e:
                value = base.mul(value, base.power(point[i], e))
        total = base.add(total, value)
    return total


class DegreeInfo(NamedTuple):
    max_degree: int
    min_degree: int
    is_uniform_degree: bool
    monomials: List[Monomial]


def degree_info(p: Polynomial) -> DegreeInfo:
    degrees = [m.degree for m in p.terms]
    if not degrees:
        return DegreeInfo(0, 0, True, [])
    return DegreeInfo(max(degrees), min(degrees), len(set(degrees)) == 1, list(p.terms))


def is_non_constant_sum(p: Polynomial) -> bool:
    """Cierto si ningún monomio es constante"""
    return all(m.degree >= 1 for m in p.terms)


def reindex(p: Polynomial, mapping: Sequence[int], n_target: int) -> Polynomial:
    """Renombra x_i ↦ x_mapping[i-1] dentro de un espacio de n_target indeterminadas"""
    if len(mapping) != p.n:
        raise ArityMismatchError(f"El reindexado espera {p.n} destinos y recibió {len(mapping)}")
    base = p.base
    acc: Dict[Exponents, Any] = {}
    for mono in p.terms:
        exps = [0] * n_target
        for i, e in enumerate(mono.exponents):
            if e:
                exps[mapping[i] - 1] += e
        key = tuple(exps)
        acc[key] = base.add(acc[key], mono.coeff) if key in acc else mono.coeff
    return Polynomial._from_dict(n_target, base, acc)


def shift(p: Polynomial, offset: int, n_target: int) -> Polynomial:
    return reindex(p, [i + 1 + offset for i in range(p.n)], n_target)


# ---------------------------------------------------------------------------
# Serialización
# ---------------------------------------------------------------------------

def polynomial_to_json(p: Polynomial) -> Dict[str, Any]:
    return {
        "n": p.n,
        "terms": [
            {"c": p.base.element_to_json(m.coeff), "e": {str(i): e for i, e in m.exponent_map.items()}}
            for m in p.terms
        ],
    }


def polynomial_from_json(data: Any, base: SemiringDescriptor, n: Optional[int] = None) -> Polynomial:
    """Lee la forma {"n": int, "terms": [{"c": ..., "e": {"idx": pow}}]}"""
    if not isinstance(data, dict) or set(data) != {"n", "terms"}:
        raise ParseError(f"Polinomio mal formado, se esperaban las claves n y terms: {data!r}")
    n_doc = data["n"]
    if isinstance(n_doc, bool) or not isinstance(n_doc, int) or n_doc < 0:
        raise ParseError(f"Número de indeterminadas inválido: {n_doc!r}")
    if n is not None and n_doc != n:
        raise ParseError(f"Se esperaba un polinomio sobre {n} indeterminadas y se leyó n={n_doc}")
    if not isinstance(data["terms"], list):
        raise ParseError("terms debe ser una lista")

    dense = []
    for term in data["terms"]:
        if not isinstance(term, dict) or "c" not in term or not set(term) <= {"c", "e"}:
            raise ParseError(f"Término mal formado: {term!r}")
        exps = [0] * n_doc
        for idx, power in (term.get("e") or {}).items():
            if not (str(idx).isascii() and str(idx).isdigit()) or not 1 <= int(idx) <= n_doc:
                raise ParseError(f"Índice de indeterminada inválido: {idx!r}")
            if isinstance(power, bool) or not isinstance(power, int) or power < 1:
                raise ParseError(f"Potencia inválida para x{idx}: {power!r}")
            exps[int(idx) - 1] = power
        dense.append((tuple(exps), base.parse_element(term["c"])))
    return Polynomial(n_doc, base, dense)


# ---------------------------------------------------------------------------
# S[X_k] como semianillo
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def polynomial_semiring(base: SemiringDescriptor, k: int) -> SemiringDescriptor:
    """El semianillo de polinomios S[X_k] (p. ej. 𝔹[x] = poly(bool,1))"""

    def parse(raw):
        if isinstance(raw, dict):
            return polynomial_from_json(raw, base, n=k)
        return Polynomial.constant(k, base.parse_element(raw), base)

    zero = Polynomial.zero(k, base)
    one = Polynomial.one(k, base)
    samples = [zero, one]
    if k:
        x1 = Polynomial.variable(k, 1, base)
        xk = Polynomial.variable(k, k, base)
        b = base.samples[2] if len(base.samples) > 2 else base.one
        samples += [x1, poly_add(x1, one), poly_mul(x1, xk), poly_add(Polynomial.constant(k, b, base), xk)]
    else:
        samples += [Polynomial.constant(0, s, base) for s in base.samples[2:]]

    return SemiringDescriptor(
        name=f"poly({base.name},{k})",
        zero=zero,
        one=one,
        add=poly_add,
        mul=poly_mul,
        parse_element=parse,
        element_to_json=polynomial_to_json,
        render=str,
        has_subtraction=base.has_subtraction,
        neg=poly_neg if base.has_subtraction else None,
        idempotent=base.idempotent,
        samples=tuple(samples),
    )
