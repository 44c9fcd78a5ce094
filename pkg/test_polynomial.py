#!/usr/bin/env python3
"""
Pruebas de la aritmética de polinomios dispersos: forma canónica,
sustitución, evaluación, límites de grado y serialización
"""

import os
import sys
from fractions import Fraction

import pytest

# Agregar el directorio del proyecto al path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from alterweight.core.errors import ArityMismatchError, DegreeOverflowError, ParseError, SemiringMismatchError
from alterweight.models.polynomial import (
    MonomialOrder, Polynomial, degree_info, evaluate, is_non_constant_sum, order_key,
    polynomial_from_json, polynomial_to_json, poly_pow, poly_scale, reindex, shift, substitute
)
from alterweight.models.semiring import BOOL, MINPLUS, NAT, RAT


def x(n, i, base=NAT, power=1):
    return Polynomial.variable(n, i, base, power)


def c(n, value, base=NAT):
    return Polynomial.constant(n, value, base)


def test_canonical_form_merges_and_orders():
    """Monomios repetidos se suman, los nulos desaparecen y el orden es grlex descendente"""
    p = Polynomial(2, NAT, [((1, 0), 1), ((0, 0), 4), ((1, 0), 2), ((0, 2), 1), ((1, 1), 0)])
    assert [m.exponents for m in p.terms] == [(0, 2), (1, 0), (0, 0)]
    assert p.coefficient((1, 0)) == 3
    assert p == x(2, 1) * c(2, 3) + x(2, 2, power=2) + c(2, 4)
    assert Polynomial(1, NAT, [((1,), 0)]).is_zero


def test_equality_and_hash_are_structural():
    p = x(2, 1) + x(2, 2)
    q = x(2, 2) + x(2, 1)
    assert p == q
    assert hash(p) == hash(q)
    assert x(2, 1, NAT) != x(2, 1, RAT)
    assert x(2, 1) != x(3, 1)


def test_arithmetic_and_render():
    a = x(2, 1, RAT) - x(2, 2, RAT)
    assert str(a) == "x1 - x2"
    square = a * a
    assert square == x(2, 1, RAT, 2) - c(2, Fraction(2), RAT) * x(2, 1, RAT) * x(2, 2, RAT) + x(2, 2, RAT, 2)
    assert str(square) == "x1^2 - 2*x1*x2 + x2^2"
    assert str(Polynomial.zero(2, RAT)) == "0"
    assert (a ** 0) == Polynomial.one(2, RAT)
    assert poly_scale(a, Fraction(1, 2)).coefficient((1, 0)) == Fraction(1, 2)


def test_incompatible_operands():
    with pytest.raises(ArityMismatchError):
        x(1, 1) + x(2, 1)
    with pytest.raises(SemiringMismatchError):
        x(1, 1, NAT) + x(1, 1, RAT)
    with pytest.raises(SemiringMismatchError):
        -x(1, 1, NAT)
    with pytest.raises(ArityMismatchError):
        Polynomial(2, NAT, [((1,), 1)])
    with pytest.raises(ArityMismatchError):
        Polynomial.variable(2, 3, NAT)


def test_substitute_expands_fully():
    """p⟨p1,...,pn⟩ sobre ℕ: x1²·x2 con x1 ↦ x1+1, x2 ↦ 2"""
    p = x(2, 1, power=2) * x(2, 2)
    result = substitute(p, [x(1, 1) + c(1, 1), c(1, 2)])
    assert result == c(1, 2) * x(1, 1, power=2) + c(1, 4) * x(1, 1) + c(1, 2)
    assert result.n == 1


def test_substitute_into_constant_and_empty():
    assert substitute(c(0, 5), [], n_target=3) == c(3, 5)
    with pytest.raises(ArityMismatchError):
        substitute(x(2, 1), [x(1, 1)])


def test_evaluate_matches_substitution():
    """Evaluar en un punto es sustituir constantes"""
    p = x(3, 1) * x(3, 2) + c(3, 2) * x(3, 3, power=3) + c(3, 7)
    point = [2, 5, 3]
    assert evaluate(p, point) == 2 * 5 + 2 * 27 + 7
    constants = [c(0, v) for v in point]
    assert substitute(p, constants).constant_term == evaluate(p, point)


def test_evaluate_in_other_semirings():
    # (min,+): x1 + x2 con coeficiente 0 es min(...) de sumas
    p = Polynomial(2, MINPLUS, [((1, 0), 0), ((0, 2), 1)])
    assert evaluate(p, [4, 1]) == min(4, 1 + 2)
    q = Polynomial(2, BOOL, [((1, 1), True)])
    assert evaluate(q, [True, False]) is False
    with pytest.raises(ArityMismatchError):
        evaluate(q, [True])


def test_degree_limit():
    with pytest.raises(DegreeOverflowError):
        poly_pow(x(1, 1), 10_000)
    with pytest.raises(DegreeOverflowError):
        substitute(x(1, 1, power=300), [x(1, 1, power=300)])


def test_degree_info_and_constants():
    p = x(2, 1, power=2) + x(2, 2)
    info = degree_info(p)
    assert (info.max_degree, info.min_degree, info.is_uniform_degree) == (2, 1, False)
    assert is_non_constant_sum(p)
    assert not is_non_constant_sum(p + c(2, 1))
    assert degree_info(Polynomial.zero(2, NAT)).is_uniform_degree


def test_reindex_and_shift():
    p = x(2, 1) * x(2, 2, power=2)
    moved = shift(p, 1, 4)
    assert moved == x(4, 2) * x(4, 3, power=2)
    merged = reindex(x(2, 1) + x(2, 2), [1, 1], 1)
    assert merged == c(1, 2) * x(1, 1)
    assert p.variables() == [1, 2]


def test_monomial_orders():
    assert order_key((0, 2)) > order_key((1, 0))
    assert order_key((1, 0), MonomialOrder.LEX) > order_key((0, 2), MonomialOrder.LEX)


def test_json_form():
    p = c(2, Fraction(-1, 2), RAT) * x(2, 1, RAT) + c(2, 3, RAT)
    data = polynomial_to_json(p)
    assert data == {"n": 2, "terms": [{"c": "-1/2", "e": {"1": 1}}, {"c": "3/1", "e": {}}]}
    assert polynomial_from_json(data, RAT) == p
    with pytest.raises(ParseError):
        polynomial_from_json({"n": 2, "terms": [{"c": "1", "e": {"3": 1}}]}, RAT)
    with pytest.raises(ParseError):
        polynomial_from_json({"n": 1, "terms": []}, RAT, n=2)
    with pytest.raises(ParseError):
        polynomial_from_json({"terms": []}, RAT)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
