#!/usr/bin/env python3
"""
Automatas de referencia para pruebas y documentación.
Ejecutado como script escribe sus documentos JSON en fixtures/
"""

import os
import sys
from fractions import Fraction
from typing import Dict, List

# Agregar el directorio raíz al path
sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from alterweight.models.groebner import Ideal
from alterweight.models.pa import PolyAutomaton
from alterweight.models.polynomial import Polynomial
from alterweight.models.semiring import BOOL, NAT, RAT, SemiringDescriptor, get_semiring
from alterweight.models.tree import TreeHomomorphism, word_hom
from alterweight.models.wafa import Wafa
from alterweight.services.document_service import dump_document
from alterweight.services.zeroness_service import wafa_to_pa

SEPARATOR = "$"


def _poly(n: int, sr: SemiringDescriptor, *terms) -> Polynomial:
    """Términos como (coeficiente, {índice: potencia})"""
    return Polynomial.from_terms(n, sr, terms)


def square_tower(sr: SemiringDescriptor = NAT, tau_p=2) -> Wafa:
    """⟦A⟧(a^i b^j) = (2^j)^(2^i) y 0 fuera de a*b*"""
    one, two = sr.one, sr.parse_element(2)
    return Wafa(
        sr, ["q", "p"], ["a", "b"],
        {
            ("q", "a"): _poly(2, sr, (one, {1: 2})),
            ("q", "b"): _poly(2, sr, (one, {2: 1})),
            ("p", "b"): _poly(2, sr, (two, {2: 1})),
        },
        _poly(2, sr, (one, {1: 1})),
        {"q": one, "p": sr.parse_element(tau_p)},
    )


def square_tower_perturbed(sr: SemiringDescriptor = RAT) -> Wafa:
    """La torre con τ(p) = 3: difiere en la palabra b (2 vs 3)"""
    return square_tower(sr, tau_p=3)


def copy_count_witness() -> Wafa:
    """
    Serie sobre 𝔹[x] con s(a^i $ c^k d^l) = x^(k·i) y 0 en otro caso.
    δ(q,a) = q·p copia una rama que cuenta las c por cada a.
    """
    sr = get_semiring("poly(bool,1)")
    one = sr.one
    x = Polynomial.variable(1, 1, BOOL)
    q, p, s, t, g = 1, 2, 3, 4, 5
    return Wafa(
        sr, ["q", "p", "s", "t", "g"], ["a", SEPARATOR, "c", "d"],
        {
            ("q", "a"): _poly(5, sr, (one, {q: 1, p: 1})),
            ("q", SEPARATOR): _poly(5, sr, (one, {g: 1})),
            ("p", "a"): _poly(5, sr, (one, {p: 1})),
            ("p", SEPARATOR): _poly(5, sr, (one, {s: 1})),
            ("s", "c"): _poly(5, sr, (x, {s: 1})),
            ("s", "d"): _poly(5, sr, (one, {t: 1})),
            ("t", "d"): _poly(5, sr, (one, {t: 1})),
            ("g", "c"): _poly(5, sr, (one, {g: 1})),
            ("g", "d"): _poly(5, sr, (one, {t: 1})),
        },
        _poly(5, sr, (one, {q: 1})),
        {"s": one, "t": one, "g": one},
    )


def copy_count_image_hom() -> TreeHomomorphism:
    """c, d ↦ b; a y $ se conservan"""
    return word_hom(
        {"a": ["a"], SEPARATOR: [SEPARATOR], "c": ["b"], "d": ["b"]},
        ["a", SEPARATOR, "c", "d"],
        ["a", SEPARATOR, "b"],
    )


def _pa(n: int, alphabet: List[str], initial, transitions: Dict[str, list], output) -> PolyAutomaton:
    return PolyAutomaton(RAT, n, alphabet, [Fraction(v) for v in initial], transitions, output)


def _x(n: int, i: int, power: int = 1) -> Polynomial:
    return Polynomial.variable(n, i, RAT, power)


def _c(n: int, value) -> Polynomial:
    return Polynomial.constant(n, Fraction(value), RAT)


def pow2_single() -> PolyAutomaton:
    """w ↦ 2^|w| con un estado: p(a) = 2·x1"""
    return _pa(1, ["a"], [1], {"a": [_c(1, 2) * _x(1, 1)]}, _x(1, 1))


def pow2_pair() -> PolyAutomaton:
    """w ↦ 2^|w| con dos estados que se suman: p(a) = (x1+x2, x1+x2)"""
    s = _x(2, 1) + _x(2, 2)
    return _pa(2, ["a"], [1, 1], {"a": [s, s]}, _x(2, 1))


def stress_pa() -> PolyAutomaton:
    """
    Nulo, pero los generadores crecen en grado (1, 3, 9): con el presupuesto
    por defecto se decide ZERO; con --max-degree 2 se agota el presupuesto.
    """
    return _pa(2, ["a"], [1, 1], {"a": [_x(2, 1, 2), _x(2, 2, 3)]}, _x(2, 1) - _x(2, 2))


def zero_fixtures() -> Dict[str, PolyAutomaton]:
    """PA sobre ℚ cuya serie es idénticamente 0"""
    n2 = 2
    return {
        "tau_zero": wafa_to_pa(Wafa(
            RAT, ["q", "p"], ["a", "b"],
            dict(square_tower(RAT).transitions), _x(2, 1), {},
        )),
        "gamma_zero": _pa(1, ["a"], [1], {"a": [_c(1, 2) * _x(1, 1)]}, Polynomial.zero(1, RAT)),
        "vanishing_square": _pa(1, ["a"], [0], {"a": [_x(1, 1, 2)]}, _x(1, 1)),
        "zero_fixed_point": _pa(1, ["a", "b"], [0], {"a": [_x(1, 1) + _x(1, 1, 2)], "b": [_c(1, 3) * _x(1, 1)]},
                                _x(1, 1)),
        "symmetric_difference": _pa(n2, ["a"], [1, 1], {"a": [_x(2, 1) + _x(2, 2)] * 2}, _x(2, 1) - _x(2, 2)),
        "absorbed_coordinate": _pa(n2, ["a"], [1, 0], {"a": [_x(2, 1), _x(2, 1) * _x(2, 2)]}, _x(2, 2)),
        "squares": _pa(n2, ["a"], [1, 1], {"a": [_x(2, 1, 2), _x(2, 2, 2)]}, _x(2, 1) - _x(2, 2)),
        "parabola": _pa(n2, ["a", "b"], [2, 4],
                        {"a": [_x(2, 1), _x(2, 1, 2)], "b": [_c(2, -1) * _x(2, 1), _x(2, 2)]},
                        _x(2, 2) - _x(2, 1, 2)),
        "cancelling_outputs": _pa(n2, ["a", "b"], [3, 3],
                                  {"a": [_x(2, 1) * _x(2, 2), _x(2, 2) * _x(2, 1)], "b": [_x(2, 2), _x(2, 1)]},
                                  _x(2, 1) - _x(2, 2)),
        "stress": stress_pa(),
    }


def nonzero_fixtures() -> Dict[str, PolyAutomaton]:
    """PA sobre ℚ con serie no nula, con su testigo mínimo esperado"""
    return {
        "square_tower": wafa_to_pa(square_tower(RAT)),
        "square_tower_perturbed": wafa_to_pa(square_tower_perturbed()),
        "pow2": pow2_single(),
        "late_b": _pa(1, ["a", "b"], [0], {"a": [_x(1, 1, 2)], "b": [_x(1, 1) + _c(1, 1)]}, _x(1, 1)),
        "late_second_b": _pa(2, ["a", "b"], [0, 0],
                             {"a": [_x(2, 1), _x(2, 2)], "b": [_x(2, 1) + _c(2, 1), _x(2, 1)]},
                             _x(2, 2)),
        "minus_half": _pa(1, ["a"], [Fraction(-1, 2)], {"a": [_x(1, 1, 2)]}, _x(1, 1, 2) - _c(1, Fraction(1, 4))),
        "after_two_a": _pa(1, ["a"], [0], {"a": [_x(1, 1) + _c(1, 1)]}, _x(1, 1) * (_x(1, 1) - _c(1, 1))),
        "rotated": _pa(2, ["a"], [1, 0], {"a": [_x(2, 2), _x(2, 1)]}, _x(2, 2)),
        "constant_one": _pa(0, ["a"], [], {"a": []}, _c(0, 1)),
        "product_of_states": _pa(2, ["a", "b"], [1, 0], {"a": [_x(2, 1), _x(2, 1)], "b": [_x(2, 2), _x(2, 1)]},
                                 _x(2, 1) * _x(2, 2)),
    }


# Testigos mínimos (lectura PA) de nonzero_fixtures
NONZERO_WITNESSES = {
    "square_tower": [],
    "square_tower_perturbed": [],
    "pow2": [],
    "late_b": ["b"],
    "late_second_b": ["b", "b"],
    "minus_half": ["a"],
    "after_two_a": ["a", "a"],
    "rotated": ["a"],
    "constant_one": [],
    "product_of_states": ["a"],
}


def ideal_example() -> Ideal:
    """⟨x1² − 1, x1·x2 − 1⟩ = ⟨x1 − x2, x2² − 1⟩"""
    return Ideal(2, (_x(2, 1, 2) - _c(2, 1), _x(2, 1) * _x(2, 2) - _c(2, 1)))


def all_documents() -> Dict[str, object]:
    docs: Dict[str, object] = {
        "square_tower.json": square_tower(),
        "square_tower_rat.json": square_tower(RAT),
        "square_tower_tau3_rat.json": square_tower_perturbed(),
        "square_tower.pa.json": wafa_to_pa(square_tower(RAT)),
        "copy_count.json": copy_count_witness(),
        "copy_count_image.hom.json": copy_count_image_hom(),
        "pow2_single.pa.json": pow2_single(),
        "pow2_pair.pa.json": pow2_pair(),
        "stress.pa.json": stress_pa(),
        "ideal.json": ideal_example(),
    }
    for name, automaton in zero_fixtures().items():
        docs[f"zero_{name}.pa.json"] = automaton
    return docs


def write_fixtures(directory: str) -> List[str]:
    os.makedirs(directory, exist_ok=True)
    written = []
    for name, obj in all_documents().items():
        path = os.path.join(directory, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(dump_document(obj))
        written.append(path)
    return written


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))), "fixtures"
    )
    print("🚀 Escribiendo fixtures...")
    for path in write_fixtures(target):
        print(f"  📄 {path}")
    print("✅ Fixtures escritos")
