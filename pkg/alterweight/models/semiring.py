"""
Semianillos conmutativos.

Un SemiringDescriptor agrupa el cero, el uno, la suma, el producto y la
igualdad de un semianillo. Los elementos no llevan contexto global: toda
operación recibe el descriptor de forma explícita, así un mismo programa
puede mezclar autómatas sobre 𝔹, ℕ, ℚ y 𝔹[x].
"""

import math
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product as cartesian
from typing import Any, Callable, Iterable, List, Optional, Sequence

from alterweight.core.errors import ParseError, PreconditionError
from alterweight.schemas.reports import AxiomReport, AxiomViolation


@dataclass(frozen=True, eq=False)
class SemiringDescriptor:
    """Descripción de un semianillo conmutativo"""

    name: str
    zero: Any
    one: Any
    add: Callable[[Any, Any], Any]
    mul: Callable[[Any, Any], Any]
    parse_element: Callable[[Any], Any]
    element_to_json: Callable[[Any], Any]
    render: Callable[[Any], str] = str
    eq: Callable[[Any, Any], bool] = operator.eq
    has_subtraction: bool = False
    neg: Optional[Callable[[Any], Any]] = None
    idempotent: bool = False
    samples: tuple = field(default=(), repr=False)

    def __eq__(self, other):
        return isinstance(other, SemiringDescriptor) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero)

    def is_one(self, a) -> bool:
        return self.eq(a, self.one)

    def sum(self, values: Iterable[Any]):
        return reduce(self.add, values, self.zero)

    def product(self, values: Iterable[Any]):
        return reduce(self.mul, values, self.one)

    def power(self, a, k: int):
        """a^k por cuadrados sucesivos; a^0 = 1"""
        result = self.one
        while k > 0:
            if k & 1:
                result = self.mul(result, a)
            k >>= 1
            if k:
                a = self.mul(a, a)
        return result

    def sub(self, a, b):
        if not self.has_subtraction:
            raise PreconditionError(f"El semianillo {self.name} no admite resta")
        return self.add(a, self.neg(b))


# ---------------------------------------------------------------------------
# Instancias concretas
# ---------------------------------------------------------------------------

def _parse_nat(raw) -> int:
    if isinstance(raw, bool):
        raise ParseError(f"Elemento natural inválido: {raw!r}")
    if isinstance(raw, int):
        value = raw
    elif isinstance(raw, str) and raw.strip().isascii() and raw.strip().isdigit():
        value = int(raw.strip())
    else:
        raise ParseError(f"Elemento natural inválido: {raw!r}")
    if value < 0:
        raise ParseError(f"Los naturales no pueden ser negativos: {raw!r}")
    return value


def _parse_rat(raw) -> Fraction:
    if isinstance(raw, bool) or isinstance(raw, float):
        raise ParseError(f"Racional inválido (se exige forma exacta a/b): {raw!r}")
    if isinstance(raw, (int, Fraction)):
        return Fraction(raw)
    if isinstance(raw, str) and raw.isascii():
        try:
            return Fraction(raw.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise ParseError(f"Racional inválido: {raw!r}")


def _parse_bool(raw) -> bool:
    if isinstance(raw, bool):
        return raw
    if raw in (0, 1, "0", "1"):
        return bool(int(raw))
    if isinstance(raw, str) and raw.strip().lower() in ("true", "false"):
        return raw.strip().lower() == "true"
    raise ParseError(f"Booleano inválido: {raw!r}")


def _parse_minplus(raw):
    if isinstance(raw, str) and raw.strip().lower() in ("inf", "∞"):
        return math.inf
    if isinstance(raw, float) and math.isinf(raw) and raw > 0:
        return math.inf
    return _parse_nat(raw)


def _rat_to_json(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _minplus_to_json(a):
    return "inf" if a == math.inf else str(a)


NAT = SemiringDescriptor(
    name="nat",
    zero=0,
    one=1,
    add=operator.add,
    mul=operator.mul,
    parse_element=_parse_nat,
    element_to_json=str,
    samples=(0, 1, 2, 3, 5, 7),
)

RAT = SemiringDescriptor(
    name="rat",
    zero=Fraction(0),
    one=Fraction(1),
    add=operator.add,
    mul=operator.mul,
    parse_element=_parse_rat,
    element_to_json=_rat_to_json,
    has_subtraction=True,
    neg=operator.neg,
    samples=(Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-3), Fraction(2, 3), Fraction(-1)),
)

BOOL = SemiringDescriptor(
    name="bool",
    zero=False,
    one=True,
    add=operator.or_,
    mul=operator.and_,
    parse_element=_parse_bool,
    element_to_json=int,
    render=lambda b: "1" if b else "0",
    idempotent=True,
    samples=(False, True, True, False, False, True),
)

MINPLUS = SemiringDescriptor(
    name="minplus",
    zero=math.inf,
    one=0,
    add=min,
    mul=operator.add,
    parse_element=_parse_minplus,
    element_to_json=_minplus_to_json,
    render=_minplus_to_json,
    idempotent=True,
    samples=(math.inf, 0, 1, 2, 5, 9),
)

_BASIC = {desc.name: desc for desc in (NAT, RAT, BOOL, MINPLUS)}


@lru_cache(maxsize=None)
def get_semiring(name: str) -> SemiringDescriptor:
    """Resuelve "nat", "rat", "bool", "minplus" o "poly(<base>,<k>)" (anidable)"""
    key = name.replace(" ", "")
    if key in _BASIC:
        return _BASIC[key]
    if key.startswith("poly(") and key.endswith(")"):
        inner = key[len("poly("):-1]
        base_name, sep, k = inner.rpartition(",")
        if not sep or not (k.isascii() and k.isdigit()):
            raise ParseError(f"Semianillo polinomial mal formado: {name!r}")
        # Import diferido: polynomial depende de este módulo
        from alterweight.models.polynomial import polynomial_semiring
        return polynomial_semiring(get_semiring(base_name), int(k))
    raise ParseError(f"Semianillo desconocido: {name!r}")


def lift_bool(b: bool, desc: SemiringDescriptor):
    """Inyecta 𝔹 en S: true ↦ 1, false ↦ 0"""
    return desc.one if b else desc.zero


def default_samples(desc: SemiringDescriptor) -> List[Any]:
    return list(desc.samples)


def check_axioms(desc: SemiringDescriptor, samples: Sequence[Any]) -> AxiomReport:
    """
    Verifica los axiomas de semianillo conmutativo sobre todas las ternas
    de la muestra. El reporte lista cada axioma violado con su primer testigo.
    """
    if not samples:
        raise PreconditionError("La muestra de elementos no puede estar vacía")

    add, mul, eq, zero, one = desc.add, desc.mul, desc.eq, desc.zero, desc.one
    checks = [
        ("add_identity", 1, lambda a: eq(add(a, zero), a) and eq(add(zero, a), a)),
        ("mul_identity", 1, lambda a: eq(mul(a, one), a) and eq(mul(one, a), a)),
        ("annihilation", 1, lambda a: eq(mul(zero, a), zero) and eq(mul(a, zero), zero)),
        ("add_commutativity", 2, lambda a, b: eq(add(a, b), add(b, a))),
        ("mul_commutativity", 2, lambda a, b: eq(mul(a, b), mul(b, a))),
        ("add_associativity", 3, lambda a, b, c: eq(add(add(a, b), c), add(a, add(b, c)))),
        ("mul_associativity", 3, lambda a, b, c: eq(mul(mul(a, b), c), mul(a, mul(b, c)))),
        ("left_distributivity", 3, lambda a, b, c: eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))),
        ("right_distributivity", 3, lambda a, b, c: eq(mul(add(a, b), c), add(mul(a, c), mul(b, c)))),
    ]
    if desc.has_subtraction:
        checks.append(("additive_inverse", 1, lambda a: eq(add(a, desc.neg(a)), zero)))

    violations = []
    for axiom, arity, holds in checks:
        for witness in cartesian(samples, repeat=arity):
            if not holds(*witness):
                violations.append(AxiomViolation(
                    axiom=axiom,
                    witness=[desc.render(w) for w in witness],
                ))
                break

    return AxiomReport(
        semiring=desc.name,
        sample_count=len(samples),
        violations=violations,
    )
