#!/usr/bin/env python3
"""
Pruebas de la descomposición de Nivat: forma de los componentes y
s(t) = h(⟦A_w⟧ ⊙ χ_L)(t)
"""

import os
import random
import sys

import pytest

# Agregar el directorio del proyecto al path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from alterweight.models.nivat import RunLetter
from alterweight.models.polynomial import Polynomial
from alterweight.models.semiring import NAT, RAT
from alterweight.models.tree import enumerate_trees, generic_tree
from alterweight.models.wafa import Wafa
from alterweight.models.words import all_words, render_word
from alterweight.scripts.fixtures import square_tower, copy_count_witness
from alterweight.scripts.random_automata import random_wafa
from alterweight.services.nivat_service import (
    WEIGHT_STATE, nivat_decompose, nivat_eval, nivat_eval_enumerated
)


def test_decomposition_shape():
    decomposition = nivat_decompose(square_tower())
    assert decomposition.rank == 2
    assert decomposition.hom.linear
    assert decomposition.hom.non_deleting
    assert decomposition.consistency.is_complete()
    assert decomposition.weights.states == [WEIGHT_STATE]
    # Una letra por transición no nula, más su copia raíz cuando λ(q) ≠ 0
    plain = [letter for letter in decomposition.letters.values() if not letter.root]
    roots = [letter for letter in decomposition.letters.values() if letter.root]
    assert len(plain) == len(decomposition.source.transitions)
    assert all(letter.target == "q" for letter in roots)
    assert "a|q.q|q|*" in decomposition.letters


def test_nivat_eval_matches_wafa_on_word_trees():
    automaton = square_tower()
    decomposition = nivat_decompose(automaton)
    for word in all_words(["a", "b"], 4):
        tree = generic_tree(word, decomposition.rank)
        assert nivat_eval(decomposition, tree) == automaton.behavior(word), render_word(word)


def test_enumerated_preimages_agree():
    automaton = square_tower()
    decomposition = nivat_decompose(automaton)
    for word in all_words(["a", "b"], 2):
        tree = generic_tree(word, decomposition.rank)
        assert nivat_eval_enumerated(decomposition, tree) == nivat_eval(decomposition, tree)


def test_nivat_eval_matches_wfta_on_all_trees():
    """La igualdad vale en todo árbol de Σ_#^r, no solo en los árboles-palabra"""
    decomposition = nivat_decompose(square_tower())
    for t in enumerate_trees(decomposition.source.alphabet, 3):
        assert nivat_eval(decomposition, t) == decomposition.source.behavior(t), str(t)


@pytest.mark.parametrize("sr", [NAT, RAT])
def test_nivat_on_random_population(sr):
    rng = random.Random(31)
    for _ in range(50):
        automaton = random_wafa(rng, sr)
        decomposition = nivat_decompose(automaton)
        assert decomposition.hom.linear and decomposition.hom.non_deleting
        assert decomposition.weights.states == [WEIGHT_STATE]
        assert decomposition.consistency.is_complete()
        for word in all_words(automaton.alphabet, 4):
            tree = generic_tree(word, decomposition.rank)
            assert sr.eq(nivat_eval(decomposition, tree), automaton.behavior(word)), render_word(word)
        for t in enumerate_trees(decomposition.source.alphabet, 3):
            assert sr.eq(nivat_eval(decomposition, t), decomposition.source.behavior(t)), str(t)


def test_run_letter_names_are_injective():
    """Estados con '.' o '|' no confunden las letras de corrida"""
    assert RunLetter("x", ("a.b", "c"), "q").name != RunLetter("x", ("a", "b.c"), "q").name
    assert RunLetter("x", (), "q|*").name != RunLetter("x", (), "q", root=True).name
    assert RunLetter("a", ("q", "q"), "q", root=True).name == "a|q.q|q|*"


def test_nivat_with_separator_characters_in_state_names():
    """x(a.b, c) y x(a, b.c) hacia a.b son dos letras distintas"""
    v = lambda i: Polynomial.variable(4, i, NAT)
    automaton = Wafa(
        NAT, ["a.b", "c", "a", "b.c"], ["x"],
        {("a.b", "x"): v(1) * v(2) + v(3) * v(4), ("c", "x"): v(2) * v(2),
         ("a", "x"): v(1) * v(4), ("b.c", "x"): v(3) * v(2)},
        v(1), [1, 2, 3, 1],
    )
    decomposition = nivat_decompose(automaton)
    assert len(decomposition.letters) == len(decomposition.source.transitions) + len(
        [letter for letter in decomposition.letters.values() if letter.root]
    )
    for word in all_words(["x"], 4):
        tree = generic_tree(word, decomposition.rank)
        assert nivat_eval(decomposition, tree) == automaton.behavior(word), render_word(word)


def test_nivat_over_polynomial_semiring():
    automaton = copy_count_witness()
    decomposition = nivat_decompose(automaton)
    sr = automaton.semiring
    for word in (["a", "$", "c"], ["a", "a", "$", "c", "d"], ["$"], ["a"]):
        tree = generic_tree(word, decomposition.rank)
        assert sr.eq(nivat_eval(decomposition, tree), automaton.behavior(word))


def test_zero_automaton_keeps_nonempty_alphabet():
    automaton = square_tower()
    silent = Wafa(automaton.semiring, automaton.states, automaton.alphabet, {},
                  automaton.initial, {})
    decomposition = nivat_decompose(silent)
    assert len(decomposition.run_alphabet) >= 1
    for word in all_words(["a", "b"], 2):
        assert nivat_eval(decomposition, generic_tree(word, decomposition.rank)) == 0


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
