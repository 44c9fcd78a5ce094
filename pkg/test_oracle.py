#!/usr/bin/env python3
"""
Pruebas del oráculo de fuerza bruta: construcciones derivadas sobre
poblaciones aleatorias, documentos mixtos WAFA/PA y primera discrepancia
"""

import os
import sys

import pytest

# Agregar el directorio del proyecto al path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from alterweight.core.errors import PreconditionError, SemiringMismatchError
from alterweight.models.semiring import MINPLUS, NAT, RAT
from alterweight.models.tree import RankedAlphabet
from alterweight.scripts.fixtures import square_tower, square_tower_perturbed, pow2_single
from alterweight.scripts.random_automata import population, random_wafa, random_wfta
from alterweight.services.conversion_service import wafa_to_wfta
from alterweight.services.oracle_service import DerivedSeries, compare, compare_derived, compare_documents
from alterweight.services.zeroness_service import wafa_to_pa


@pytest.mark.parametrize("derived", list(DerivedSeries))
@pytest.mark.parametrize("semiring", [NAT, RAT, MINPLUS], ids=lambda sr: sr.name)
def test_derived_constructions_agree(derived, semiring):
    for automaton in population(7, 8, random_wafa, semiring):
        report = compare_derived(automaton, derived, max_len=3)
        assert report.passed, f"{derived.value} difiere en {report.mismatch}"
    print(f"✅ {derived.value} sobre {semiring.name}")


def test_words_checked_counts_all_lengths():
    report = compare_derived(square_tower(), DerivedSeries.NICE, max_len=4)
    assert report.passed
    assert report.words_checked == 1 + 2 + 4 + 8 + 16


def test_mixed_wafa_and_pa_use_reversal():
    assert compare_documents(square_tower(RAT), wafa_to_pa(square_tower(RAT)), 4).passed
    assert compare_documents(wafa_to_pa(square_tower(RAT)), square_tower(RAT), 4).passed
    assert compare_documents(square_tower(), wafa_to_wfta(square_tower()).wfta, 3).passed


def test_first_mismatch_is_length_lexicographic():
    report = compare_documents(square_tower(RAT), square_tower_perturbed(), 3)
    assert not report.passed
    assert report.mismatch.word == ["b"]
    assert (report.mismatch.left, report.mismatch.right) == ("2", "3")


def test_compare_plain_series():
    report = compare(lambda w: len(w), lambda w: len(w) if len(w) < 2 else 0, ["a"], NAT, 3)
    assert report.mismatch.word == ["a", "a"]


def test_incompatible_documents():
    with pytest.raises(SemiringMismatchError):
        compare_documents(square_tower(), square_tower(RAT), 2)
    with pytest.raises(SemiringMismatchError):
        compare_documents(wafa_to_pa(square_tower(RAT)), pow2_single(), 2)
    alphabet = RankedAlphabet([("f", 2), ("c", 0)])
    wfta = population(1, 1, random_wfta, NAT, alphabet)[0]
    with pytest.raises(PreconditionError):
        compare_documents(wfta, wfta, 2)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
