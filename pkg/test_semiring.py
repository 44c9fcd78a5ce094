#!/usr/bin/env python3
"""
Pruebas de los semianillos: axiomas sobre las muestras fijas, lectura de
elementos y resolución de nombres
"""

import operator
import os
import sys
from fractions import Fraction

import pytest

# Agregar el directorio del proyecto al path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from alterweight.core.errors import ParseError, PreconditionError
from alterweight.models.polynomial import Polynomial
from alterweight.models.semiring import (
    BOOL, MINPLUS, NAT, RAT, SemiringDescriptor, check_axioms, default_samples, get_semiring, lift_bool
)


@pytest.mark.parametrize("name", ["nat", "rat", "bool", "minplus", "poly(bool,1)", "poly(rat,2)", "poly(nat,0)"])
def test_builtin_semirings_satisfy_axioms(name):
    """Todas las instancias incluidas pasan la verificación de axiomas"""
    desc = get_semiring(name)
    report = check_axioms(desc, default_samples(desc))
    print(f"🧪 {name}: {report.sample_count} elementos, violaciones: {report.violated()}")
    assert report.ok
    assert report.semiring == desc.name


def test_broken_semiring_reports_first_witness():
    """Una 'suma' no conmutativa se reporta con su testigo"""
    broken = SemiringDescriptor(
        name="broken", zero=0, one=1, add=operator.sub, mul=operator.mul,
        parse_element=int, element_to_json=str,
    )
    report = check_axioms(broken, [0, 1, 2])
    assert not report.ok
    assert "add_commutativity" in report.violated()
    assert "mul_commutativity" not in report.violated()
    violation = next(v for v in report.violations if v.axiom == "add_commutativity")
    assert len(violation.witness) == 2


def test_empty_sample_is_rejected():
    with pytest.raises(PreconditionError):
        check_axioms(NAT, [])


def test_element_parsing():
    assert NAT.parse_element("7") == 7
    assert RAT.parse_element("-3/4") == Fraction(-3, 4)
    assert RAT.parse_element(2) == Fraction(2)
    assert BOOL.parse_element(1) is True
    assert BOOL.parse_element("false") is False
    assert MINPLUS.parse_element("inf") == MINPLUS.zero
    with pytest.raises(ParseError):
        RAT.parse_element(0.5)
    with pytest.raises(ParseError):
        NAT.parse_element(-1)
    with pytest.raises(ParseError):
        NAT.parse_element(True)


def test_rationals_serialize_as_fractions():
    assert RAT.element_to_json(Fraction(3)) == "3/1"
    assert RAT.element_to_json(Fraction(-6, 4)) == "-3/2"
    assert RAT.element_to_json(Fraction(0)) == "0/1"
    assert RAT.parse_element(RAT.element_to_json(Fraction(3))) == 3


@pytest.mark.parametrize("raw", ["²", "٣", "１"])
def test_non_ascii_digits_are_rejected(raw):
    """Solo se aceptan dígitos ASCII; los demás no llegan a int()"""
    with pytest.raises(ParseError):
        NAT.parse_element(raw)
    with pytest.raises(ParseError):
        RAT.parse_element(raw)
    with pytest.raises(ParseError):
        MINPLUS.parse_element(raw)
    with pytest.raises(ParseError):
        get_semiring(f"poly(nat,{raw})")


def test_polynomial_semiring_by_name():
    """poly(base,k) se resuelve recursivamente y sus elementos son polinomios"""
    bx = get_semiring("poly(bool,1)")
    assert bx.name == "poly(bool,1)"
    assert bx.zero == Polynomial.zero(1, BOOL)
    x = Polynomial.variable(1, 1, BOOL)
    # En 𝔹[x] la suma es idempotente: x + x = x
    assert bx.add(x, x) == x
    assert bx.mul(x, x) == Polynomial.variable(1, 1, BOOL, power=2)

    nested = get_semiring("poly(poly(nat,1),1)")
    assert nested.name == "poly(poly(nat,1),1)"
    assert get_semiring("poly( bool , 1 )") is bx


def test_unknown_semiring():
    with pytest.raises(ParseError):
        get_semiring("tropical")
    with pytest.raises(ParseError):
        get_semiring("poly(nat)")


def test_lift_bool_and_power():
    assert lift_bool(True, RAT) == Fraction(1)
    assert lift_bool(False, MINPLUS) == MINPLUS.zero
    assert NAT.power(3, 4) == 81
    assert NAT.power(5, 0) == 1
    # En (min,+) la potencia es multiplicación por k
    assert MINPLUS.power(2, 3) == 6


def test_subtraction_only_on_rings():
    assert RAT.sub(Fraction(1), Fraction(3)) == Fraction(-2)
    with pytest.raises(PreconditionError):
        NAT.sub(3, 1)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
