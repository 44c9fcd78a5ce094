#!/usr/bin/env python3
"""
Generadores aleatorios con semilla para las pruebas de propiedades.
Todos reciben un random.Random para que las poblaciones sean reproducibles.
"""

import random
from itertools import product as cartesian
from typing import Any, List, Optional, Sequence

from alterweight.models.polynomial import Polynomial
from alterweight.models.semiring import SemiringDescriptor
from alterweight.models.tree import END_MARKER, RankedAlphabet, Tree, TreeHomomorphism, word_hom
from alterweight.models.wafa import Wafa
from alterweight.models.wfta import Dta, StepFunction, Wfta
from alterweight.services.tree_automata_service import step_partition

STATE_NAMES = ["q", "p", "r", "s"]
LETTERS = ["a", "b", "c"]


def random_element(rng: random.Random, sr: SemiringDescriptor, nonzero: bool = True) -> Any:
    pool = [s for s in sr.samples if not (nonzero and sr.is_zero(s))]
    return rng.choice(pool or [sr.one])


def random_polynomial(rng: random.Random, sr: SemiringDescriptor, n: int,
                      max_degree: int = 2, max_monomials: int = 3, constants: bool = True) -> Polynomial:
    terms = []
    for _ in range(rng.randint(0, max_monomials)):
        low = 0 if constants else 1
        degree = rng.randint(low, max_degree)
        exps = [0] * n
        for _ in range(degree):
            exps[rng.randrange(n)] += 1
        terms.append((tuple(exps), random_element(rng, sr)))
    return Polynomial(n, sr, terms)


def random_wafa(rng: random.Random, sr: SemiringDescriptor, max_states: int = 3, max_letters: int = 2,
                max_degree: int = 2, max_monomials: int = 3, constants: bool = True) -> Wafa:
    """WAFA con ≤ max_states estados y ≤ max_letters letras; a veces con constantes"""
    n = rng.randint(1, max_states)
    states = STATE_NAMES[:n]
    alphabet = LETTERS[:rng.randint(1, max_letters)]
    use_constants = constants and rng.random() < 0.5
    transitions = {
        (q, a): random_polynomial(rng, sr, n, max_degree, max_monomials, use_constants)
        for q in states for a in alphabet
    }
    initial = random_polynomial(rng, sr, n, max_degree, 2, use_constants)
    if initial.is_zero:
        initial = Polynomial.variable(n, 1, sr)
    final = [random_element(rng, sr, nonzero=False) for _ in states]
    return Wafa(sr, states, alphabet, transitions, initial, final)


def random_wfta(rng: random.Random, sr: SemiringDescriptor, alphabet: RankedAlphabet,
                max_states: int = 2, density: float = 0.5) -> Wfta:
    n = rng.randint(1, max_states)
    states = STATE_NAMES[:n]
    transitions = {}
    for g, rank in alphabet:
        for children in cartesian(states, repeat=rank):
            for q in states:
                if rng.random() < density:
                    transitions[(g, children, q)] = random_element(rng, sr)
    roots = [random_element(rng, sr, nonzero=False) for _ in states]
    return Wfta(sr, states, alphabet, transitions, roots)


def random_pattern(rng: random.Random, target: RankedAlphabet, variables: int, max_size: int = 4) -> Tree:
    """Patrón sobre target con variables x1..x_variables (cada una puede faltar o repetirse)"""
    leaves = [name for name, rank in target if rank == 0]
    inner = [(name, rank) for name, rank in target if rank > 0]

    def build(budget: int) -> Tree:
        options = []
        if variables:
            options.append("var")
        if leaves:
            options.append("leaf")
        if inner and budget > 1:
            options.append("inner")
        choice = rng.choice(options)
        if choice == "var":
            return Tree.variable(rng.randint(1, variables))
        if choice == "leaf":
            return Tree(rng.choice(leaves))
        name, rank = rng.choice(inner)
        remaining = budget - 1
        children = []
        for _ in range(rank):
            share = max(1, remaining // rank)
            children.append(build(share))
        return Tree(name, children)

    return build(max_size)


def random_tree_hom(rng: random.Random, source: RankedAlphabet, target: RankedAlphabet,
                    max_size: int = 4) -> TreeHomomorphism:
    patterns = {name: random_pattern(rng, target, rank, max_size) for name, rank in source}
    return TreeHomomorphism(source, target, patterns)


def random_word_tree_hom(rng: random.Random, letters: Sequence[str], target: RankedAlphabet,
                         max_size: int = 4) -> TreeHomomorphism:
    """Homomorfismo desde árboles-palabra Λ_#^1: las letras solo usan x1 y # va a un árbol cerrado"""
    source = RankedAlphabet([(a, 1) for a in letters] + [(END_MARKER, 0)])
    patterns = {a: random_pattern(rng, target, 1, max_size) for a in letters}
    patterns[END_MARKER] = random_pattern(rng, target, 0, max_size)
    return TreeHomomorphism(source, target, patterns)


def random_word_hom(rng: random.Random, source_letters: Sequence[str], target_letters: Sequence[str],
                    max_len: int = 2, allow_empty: bool = True) -> TreeHomomorphism:
    """h'(c) con longitud 0..max_len (1..max_len si no se permiten imágenes vacías)"""
    low = 0 if allow_empty else 1
    mapping = {
        c: [rng.choice(list(target_letters)) for _ in range(rng.randint(low, max_len))]
        for c in source_letters
    }
    return word_hom(mapping, source_letters, target_letters)


def random_dta(rng: random.Random, alphabet: RankedAlphabet, max_states: int = 2) -> Dta:
    n = rng.randint(1, max_states)
    states = [f"d{i}" for i in range(n)]
    delta = {
        (g, children): rng.choice(states)
        for g, rank in alphabet
        for children in cartesian(states, repeat=rank)
    }
    accepting = [q for q in states if rng.random() < 0.5]
    return Dta(states, alphabet, delta, accepting)


def random_step_function(rng: random.Random, sr: SemiringDescriptor, alphabet: RankedAlphabet,
                         max_cells: int = 3, partition: bool = True) -> StepFunction:
    cells = [(random_dta(rng, alphabet), random_element(rng, sr)) for _ in range(rng.randint(1, max_cells))]
    step = StepFunction(sr, cells)
    return step_partition(step) if partition else step


def seeded(seed: Optional[int] = None) -> random.Random:
    return random.Random(seed)


def population(seed: int, count: int, factory, *args, **kwargs) -> List[Any]:
    rng = random.Random(seed)
    return [factory(rng, *args, **kwargs) for _ in range(count)]
