#!/usr/bin/env python3
"""
Pruebas de nulidad y equivalencia sobre ℚ: fixtures nulos y no nulos,
testigos mínimos, certificados, presupuestos e inversión WAFA ↔ PA
"""

import os
import sys
from fractions import Fraction

import pytest

# Agregar el directorio del proyecto al path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from alterweight.core.errors import FieldRequiredError, ResourceExhaustedError, SemiringMismatchError
from alterweight.models.pa import PolyAutomaton
from alterweight.models.polynomial import Polynomial
from alterweight.models.semiring import NAT, RAT
from alterweight.models.words import all_words, reverse
from alterweight.schemas.reports import VerdictKind
from alterweight.scripts.fixtures import (
    NONZERO_WITNESSES, square_tower, square_tower_perturbed, nonzero_fixtures, pow2_pair, pow2_single,
    stress_pa, zero_fixtures
)
from alterweight.services.zeroness_service import (
    certificate_holds, pa_equivalence, pa_to_wafa, wafa_equivalence, wafa_to_pa, wafa_zeroness, zeroness
)

ZERO = zero_fixtures()
NONZERO = nonzero_fixtures()


@pytest.mark.parametrize("name", sorted(ZERO))
def test_zero_fixtures(name):
    automaton = ZERO[name]
    verdict = zeroness(automaton)
    print(f"✅ {name}: ZERO en {verdict.steps} pasos, {len(verdict.certificate)} generadores")
    assert verdict.is_zero
    assert verdict.kind == VerdictKind.ZERO
    assert certificate_holds(automaton, verdict.certificate)
    for word in all_words(automaton.alphabet, 4):
        assert automaton.behavior(word) == 0


@pytest.mark.parametrize("name", sorted(NONZERO))
def test_nonzero_fixtures_give_minimal_witness(name):
    automaton = NONZERO[name]
    verdict = zeroness(automaton)
    assert not verdict.is_zero
    assert verdict.kind == VerdictKind.NONZERO
    assert verdict.witness == NONZERO_WITNESSES[name]
    assert verdict.value == automaton.behavior(verdict.witness)
    assert verdict.value != 0
    # Ninguna palabra más corta, ni anterior de la misma longitud, es testigo
    for word in all_words(automaton.alphabet, len(verdict.witness)):
        if word == verdict.witness:
            break
        assert automaton.behavior(word) == 0


def test_stress_fixture_budgets():
    """Nulo con el presupuesto por defecto; se agota con grado 2 o con 2 pasos"""
    automaton = stress_pa()
    verdict = zeroness(automaton)
    assert verdict.is_zero
    assert verdict.steps == 3
    with pytest.raises(ResourceExhaustedError):
        zeroness(automaton, max_degree=2)
    with pytest.raises(ResourceExhaustedError):
        zeroness(automaton, max_steps=2)


def test_certificate_rejects_foreign_automaton():
    """El certificado de un PA nulo no vale para un PA no nulo"""
    certificate = zeroness(ZERO["symmetric_difference"]).certificate
    assert certificate_holds(ZERO["symmetric_difference"], certificate)
    assert not certificate_holds(NONZERO["rotated"], certificate)


def test_requires_rationals():
    pa = PolyAutomaton(NAT, 1, ["a"], [1], {"a": [Polynomial.variable(1, 1, NAT)]},
                       Polynomial.variable(1, 1, NAT))
    with pytest.raises(FieldRequiredError):
        zeroness(pa)
    with pytest.raises(FieldRequiredError):
        wafa_zeroness(square_tower())


def test_wafa_to_pa_reverses_words():
    automaton = square_tower(RAT)
    pa = wafa_to_pa(automaton)
    assert pa.state_names == ["q", "p"]
    assert pa.initial == (Fraction(1), Fraction(2))
    for word in all_words(["a", "b"], 4):
        assert pa.behavior(reverse(word)) == automaton.behavior(word)
    assert pa_to_wafa(pa) == automaton


def test_wafa_zeroness_reads_witness_in_wafa_direction():
    """ε ya es testigo de la torre; un WAFA que solo vale en 'ab' da 'ab'"""
    verdict = wafa_zeroness(square_tower(RAT))
    assert not verdict.is_zero and verdict.witness == []

    x = lambda i: Polynomial.variable(3, i, RAT)
    only_ab = pa_to_wafa(PolyAutomaton(
        RAT, 3, ["a", "b"], [Fraction(0), Fraction(0), Fraction(1)],
        {"a": [Polynomial.zero(3, RAT), x(1), Polynomial.zero(3, RAT)],
         "b": [x(3), Polynomial.zero(3, RAT), Polynomial.zero(3, RAT)]},
        x(2),
    ))
    assert only_ab.behavior(["a", "b"]) == 1
    assert only_ab.behavior(["b", "a"]) == 0
    verdict = wafa_zeroness(only_ab)
    assert verdict.witness == ["a", "b"]
    assert verdict.value == 1


def test_wafa_equivalence_witness():
    """La torre y su variante con τ(p) = 3 difieren en b: 2 vs 3"""
    verdict = wafa_equivalence(square_tower(RAT), square_tower_perturbed())
    assert not verdict.equal
    assert verdict.kind == VerdictKind.NOT_EQUAL
    assert verdict.witness == ["b"]
    assert (verdict.left, verdict.right) == (Fraction(2), Fraction(3))
    assert wafa_equivalence(square_tower(RAT), square_tower(RAT)).equal


def test_pa_equivalence():
    verdict = pa_equivalence(pow2_pair(), pow2_single())
    assert verdict.equal
    assert verdict.kind == VerdictKind.EQUAL
    assert verdict.certificate is not None
    with pytest.raises(SemiringMismatchError):
        pa_equivalence(pow2_single(), NONZERO["late_b"])


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
