#!/usr/bin/env python3
"""
Pruebas del núcleo de Gröbner sobre ℚ: división con cofactores, base
reducida, pertenencia, auditoría y contraste con sympy
"""

import os
import random
import sys
from fractions import Fraction

import pytest
import sympy

# Agregar el directorio del proyecto al path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from alterweight.core.errors import ArityMismatchError, FieldRequiredError, PreconditionError
from alterweight.models.groebner import GroebnerBasis
from alterweight.models.polynomial import MonomialOrder, Polynomial
from alterweight.models.semiring import NAT, RAT
from alterweight.scripts.fixtures import ideal_example
from alterweight.services.groebner_service import (
    audit, buchberger, divide, ideal_member, leading_term, normal_form, s_polynomial
)


def x(n, i, power=1):
    return Polynomial.variable(n, i, RAT, power)


def c(n, value):
    return Polynomial.constant(n, Fraction(value), RAT)


def to_sympy(p: Polynomial, symbols):
    expr = sympy.Integer(0)
    for mono in p.terms:
        term = sympy.Rational(mono.coeff.numerator, mono.coeff.denominator)
        for symbol, e in zip(symbols, mono.exponents):
            term *= symbol ** e
        expr += term
    return sympy.expand(expr)


def monic(expr, symbols, order):
    return sympy.expand(expr / sympy.LC(expr, *symbols, order=order))


def random_polynomial(rng: random.Random, n: int) -> Polynomial:
    terms = []
    for _ in range(rng.randint(1, 3)):
        exps = [0] * n
        for _ in range(rng.randint(0, 2)):
            exps[rng.randrange(n)] += 1
        terms.append((tuple(exps), Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))))
    return Polynomial(n, RAT, terms)


def test_reduced_basis_of_example_ideal():
    """⟨x1² − 1, x1·x2 − 1⟩ = ⟨x2² − 1, x1 − x2⟩"""
    ideal = ideal_example()
    basis = buchberger(list(ideal.generators), MonomialOrder.GRLEX)
    assert basis.generators == (x(2, 2, 2) - c(2, 1), x(2, 1) - x(2, 2))
    assert basis.leading_monomials() == [(0, 2), (1, 0)]
    lex = buchberger(list(ideal.generators), "lex")
    assert lex.generators == (x(2, 1) - x(2, 2), x(2, 2, 2) - c(2, 1))
    assert audit(basis).ok and audit(lex).ok


def test_unit_ideal():
    basis = buchberger([x(2, 1), x(2, 1) - c(2, 1)])
    assert basis.is_unit
    assert basis.generators == (Polynomial.one(2, RAT),)


def test_empty_and_zero_generators():
    basis = buchberger([Polynomial.zero(2, RAT)], n=2)
    assert len(basis) == 0
    assert normal_form(x(2, 1), basis) == x(2, 1)
    with pytest.raises(ArityMismatchError):
        buchberger([])


def test_division_with_cofactors():
    """p = Σ q_i·g_i + r exactamente"""
    generators = [x(2, 1) * x(2, 2) - c(2, 1), x(2, 2, 2) - c(2, 1)]
    p = x(2, 1, 2) * x(2, 2) + x(2, 1) * x(2, 2, 2) + x(2, 2, 2)
    cofactors, remainder = divide(p, generators)
    recombined = remainder
    for q, g in zip(cofactors, generators):
        recombined = recombined + q * g
    assert recombined == p
    # Ningún monomio del resto es divisible por un líder
    leads = [leading_term(g)[0] for g in generators]
    for mono in remainder.terms:
        assert not any(all(a <= b for a, b in zip(lead, mono.exponents)) for lead in leads)


def test_ideal_membership_and_s_polynomial():
    basis = buchberger(list(ideal_example().generators))
    assert ideal_member(x(2, 1, 2) - x(2, 2, 2), basis)
    assert not ideal_member(x(2, 1) - c(2, 1), basis)
    s = s_polynomial(x(2, 1, 2) - c(2, 1), x(2, 1) * x(2, 2) - c(2, 1))
    assert s == x(2, 1) - x(2, 2)


def test_audit_detects_non_groebner_set():
    generators = ideal_example().generators
    fake = GroebnerBasis(2, MonomialOrder.GRLEX, tuple(generators))
    report = audit(fake)
    assert not report.ok
    assert report.failing_pairs == [[0, 1]]


def test_leading_term():
    p = c(2, 3) * x(2, 2, 3) + c(2, 5) * x(2, 1)
    assert leading_term(p) == ((0, 3), Fraction(3))
    assert leading_term(p, "lex") == ((1, 0), Fraction(5))
    with pytest.raises(PreconditionError):
        leading_term(Polynomial.zero(2, RAT))


def test_field_required():
    p = Polynomial.variable(1, 1, NAT)
    with pytest.raises(FieldRequiredError):
        buchberger([p])
    with pytest.raises(FieldRequiredError):
        normal_form(x(1, 1), [p])


def test_arity_checked_in_normal_form():
    with pytest.raises(ArityMismatchError):
        normal_form(x(2, 1), [x(3, 1)])


@pytest.mark.parametrize("order", ["grlex", "lex"])
def test_matches_sympy_on_random_ideals(order):
    """La base reducida es única: debe coincidir con la de sympy"""
    rng = random.Random(4242)
    for _ in range(15):
        n = rng.choice([2, 3])
        generators = [random_polynomial(rng, n) for _ in range(rng.randint(1, 3))]
        symbols = sympy.symbols(f"x1:{n + 1}")
        ours = buchberger(generators, order)
        expected = sympy.groebner([to_sympy(g, symbols) for g in generators], *symbols, order=order, domain=sympy.QQ)
        print(f"🧮 {[str(g) for g in generators]} → {len(ours)} generadores")
        assert {to_sympy(g, symbols) for g in ours} == {monic(e, symbols, order) for e in expected.exprs}
        assert audit(ours).ok


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
