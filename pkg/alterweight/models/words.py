"""Palabras finitas sobre un alfabeto ordenado"""

from itertools import product as cartesian
from typing import Iterator, List, Sequence

from alterweight.core.errors import ParseError, UnknownSymbolError

EMPTY_WORD_SPELLINGS = ("", "ε")


def parse_word(text: str, alphabet: Sequence[str]) -> List[str]:
    """
    Lee una palabra. Con espacios se separa por espacios; si todas las
    letras son de un carácter se lee carácter a carácter; en otro caso se
    segmenta de forma voraz por la letra más larga que encaje.
    """
    text = text.strip()
    if text in EMPTY_WORD_SPELLINGS:
        return []
    if " " in text:
        letters = text.split()
    elif all(len(a) == 1 for a in alphabet):
        letters = list(text)
    else:
        letters, pos = [], 0
        by_length = sorted(alphabet, key=len, reverse=True)
        while pos < len(text):
            match = next((a for a in by_length if text.startswith(a, pos)), None)
            if match is None:
                raise ParseError(f"No se puede segmentar la palabra {text!r} en el alfabeto")
            letters.append(match)
            pos += len(match)
    unknown = [a for a in letters if a not in alphabet]
    if unknown:
        raise UnknownSymbolError(f"Letras fuera del alfabeto: {unknown}")
    return letters


def render_word(word: Sequence[str]) -> str:
    if not word:
        return "ε"
    if all(len(a) == 1 for a in word):
        return "".join(word)
    return " ".join(word)


def all_words(alphabet: Sequence[str], max_len: int) -> Iterator[List[str]]:
    """Todas las palabras de longitud ≤ max_len en orden longitud-lexicográfico"""
    for length in range(max_len + 1):
        for letters in cartesian(alphabet, repeat=length):
            yield list(letters)


def reverse(word: Sequence[str]) -> List[str]:
    return list(reversed(word))


def words_of_length(alphabet: Sequence[str], length: int) -> Iterator[List[str]]:
    for letters in cartesian(alphabet, repeat=length):
        yield list(letters)
