#!/usr/bin/env python3
"""
Pruebas de WFTA, DTA y funciones escalonadas: evaluación ascendente frente
a corridas explícitas, sumidero implícito, productos y composición con
homomorfismos
"""

import os
import random
import sys

import pytest

# Agregar el directorio del proyecto al path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from alterweight.core.errors import ArityMismatchError, PreconditionError, UnknownSymbolError
from alterweight.models.semiring import BOOL, NAT, RAT
from alterweight.models.tree import RankedAlphabet, Tree, apply_hom, enumerate_trees, parse_tree
from alterweight.models.wfta import Dta, StepFunction, Wfta
from alterweight.scripts.random_automata import (
    random_dta, random_step_function, random_tree_hom, random_wfta
)
from alterweight.services.tree_automata_service import (
    brute_force_behavior, char_lift, dta_inverse_hom, enumerate_runs, extended_delta,
    hadamard_wfta, product_state, step_compose_hom, step_eval, step_partition
)

SIGMA = RankedAlphabet.parse(["f/2", "g/1", "a/0"])
TREES = enumerate_trees(SIGMA, 3)


def counting_wfta() -> Wfta:
    """Cuenta las hojas a: estado n (número) y u (unidad)"""
    return Wfta(
        NAT, ["n", "u"], SIGMA,
        {
            ("a", (), "n"): 1, ("a", (), "u"): 1,
            ("f", ("n", "u"), "n"): 1, ("f", ("u", "n"), "n"): 1, ("f", ("u", "u"), "u"): 1,
            ("g", ("n",), "n"): 1, ("g", ("u",), "u"): 1,
        },
        {"n": 1},
    )


def parity_dta() -> Dta:
    """Acepta los árboles con un número par de hojas; sin transiciones para g"""
    return Dta(
        ["even", "odd"], SIGMA,
        {
            ("a", ()): "odd",
            ("f", ("even", "even")): "even", ("f", ("odd", "odd")): "even",
            ("f", ("even", "odd")): "odd", ("f", ("odd", "even")): "odd",
        },
        ["even"],
    )


def test_wfta_counts_leaves():
    automaton = counting_wfta()
    t = parse_tree("f(g(a),f(a,a))", SIGMA)
    assert automaton.behavior(t) == 3
    assert automaton.state_behavior(t)["u"] == 1
    assert automaton.weight("f", ("n", "n"), "n") == 0


def test_wfta_validation():
    with pytest.raises(ArityMismatchError):
        Wfta(NAT, ["q"], SIGMA, {("f", ("q",), "q"): 1}, {"q": 1})
    with pytest.raises(UnknownSymbolError):
        Wfta(NAT, ["q"], SIGMA, {("a", (), "z"): 1}, {"q": 1})
    with pytest.raises(UnknownSymbolError):
        counting_wfta().behavior(parse_tree("h(a)"))


@pytest.mark.parametrize("sr", [NAT, RAT, BOOL])
def test_dynamic_programming_matches_explicit_runs(sr):
    """La evaluación ascendente coincide con la suma de corridas explícitas"""
    rng = random.Random(7)
    for _ in range(10):
        automaton = random_wfta(rng, sr, SIGMA)
        for t in TREES:
            assert sr.eq(automaton.behavior(t), brute_force_behavior(automaton, t)), str(t)


def test_runs_are_labelings_of_positions():
    automaton = counting_wfta()
    t = parse_tree("f(a,a)", SIGMA)
    runs = list(enumerate_runs(automaton, t))
    assert len(runs) == 2
    for labeling, weight in runs:
        assert set(labeling) == {"", "1", "2"}
        assert labeling[""] == "n"
        assert weight == 1


def test_extended_delta_on_ground_patterns():
    """Para un patrón cerrado δ′ coincide con ⟦B⟧_q"""
    automaton = counting_wfta()
    t = parse_tree("f(a,g(a))", SIGMA)
    for q in automaton.states:
        assert extended_delta(automaton, t, (), q) == automaton.state_behavior(t)[q]
    pattern = parse_tree("f(x1,g(x1))", allow_variables=True)
    assert extended_delta(automaton, pattern, ("n", "u"), "n") == 1
    assert extended_delta(automaton, pattern, ("n", "n"), "n") == 0
    with pytest.raises(ArityMismatchError):
        extended_delta(automaton, pattern, ("n",), "n")


def test_dta_with_implicit_sink():
    dta = parity_dta()
    assert dta.sink == "sink"
    assert dta.declared_states == ["even", "odd"]
    assert dta.is_complete()
    assert dta.accepts(parse_tree("f(a,a)", SIGMA))
    assert not dta.accepts(parse_tree("f(a,f(a,a))", SIGMA))
    # g no tiene transiciones: todo árbol con g termina en el sumidero
    assert dta.run(parse_tree("f(g(a),a)", SIGMA)) == "sink"


def test_complete_dta_has_no_sink():
    dta = random_dta(random.Random(3), SIGMA)
    assert dta.sink is None
    assert dta.is_complete()


def test_char_lift_is_characteristic_function():
    dta = parity_dta()
    for sr in (NAT, BOOL):
        lifted = char_lift(dta, sr)
        for t in TREES:
            expected = sr.one if dta.accepts(t) else sr.zero
            assert sr.eq(lifted.behavior(t), expected)


def test_hadamard_wfta():
    rng = random.Random(11)
    left, right = random_wfta(rng, NAT, SIGMA), random_wfta(rng, NAT, SIGMA)
    product = hadamard_wfta(left, right)
    for t in TREES:
        assert product.behavior(t) == left.behavior(t) * right.behavior(t)


def test_product_state_names_stay_distinct():
    """("p&q", "r") y ("p", "q&r") dan estados distintos del producto"""
    left = Wfta(NAT, ["p&q", "p"], SIGMA,
                {("a", (), "p&q"): 2, ("a", (), "p"): 1, ("g", ("p",), "p&q"): 3}, [1, 1])
    right = Wfta(NAT, ["r", "q&r"], SIGMA,
                 {("a", (), "r"): 1, ("a", (), "q&r"): 5, ("g", ("q&r",), "r"): 1}, [1, 1])
    assert product_state("p&q", "r") != product_state("p", "q&r")
    assert product_state("p", "q") == "p&q"
    product = hadamard_wfta(left, right)
    assert len(set(product.states)) == 4
    for t in TREES:
        assert product.behavior(t) == left.behavior(t) * right.behavior(t)


def test_dta_inverse_hom():
    rng = random.Random(5)
    target = RankedAlphabet.parse(["h/2", "k/1", "c/0"])
    for _ in range(10):
        dta = random_dta(rng, target, 3)
        hom = random_tree_hom(rng, SIGMA, target)
        pulled = dta_inverse_hom(dta, hom)
        for t in TREES:
            assert pulled.accepts(t) == dta.accepts(apply_hom(hom, t))


def test_step_partition_is_disjoint_and_equivalent():
    rng = random.Random(13)
    for _ in range(10):
        step = random_step_function(rng, NAT, SIGMA, partition=False)
        partition = step_partition(step)
        assert partition.partition
        for t in TREES:
            accepted = [dta for dta, _ in partition.cells if dta.accepts(t)]
            assert len(accepted) == 1
            assert step_eval(partition, t) == step_eval(step, t)


def test_step_compose_hom_matches_apply_hom():
    """(r∘h)(t) = r(h(t)) para 20 pares aleatorios"""
    rng = random.Random(17)
    target = RankedAlphabet.parse(["h/2", "k/1", "c/0"])
    for _ in range(20):
        step = random_step_function(rng, RAT, target)
        hom = random_tree_hom(rng, SIGMA, target)
        composed = step_compose_hom(step, hom)
        for t in TREES:
            assert composed.semiring.eq(step_eval(composed, t), step_eval(step, apply_hom(hom, t)))


def test_step_compose_requires_partition():
    step = StepFunction(NAT, [(parity_dta(), 2)])
    hom = random_tree_hom(random.Random(1), SIGMA, SIGMA)
    with pytest.raises(PreconditionError):
        step_compose_hom(step, hom)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
