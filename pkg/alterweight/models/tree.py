"""
Alfabetos con rango, términos con variables, posiciones, sustituciones y
homomorfismos de árboles.

Las posiciones se escriben como índices 1-based separados por puntos
("1.2"); la raíz es la cadena vacía. Los árboles comparten subárboles
libremente (t^r_w usa r referencias al mismo hijo), por eso todas las
operaciones son puras.
"""

import re
from itertools import product as cartesian
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from alterweight.core.config import settings
from alterweight.core.errors import (
    ArityMismatchError, InvalidPositionError, ParseError, PreconditionError,
    ResourceExhaustedError, UnknownSymbolError
)

END_MARKER = "#"
_VARIABLE_RE = re.compile(r"^x([1-9][0-9]*)$")
_TOKEN_RE = re.compile(r"\s*(?:([(),])|([^(),\s]+))")


class RankedAlphabet:
    """Alfabeto con rango: lista ordenada de (nombre, rango)"""

    def __init__(self, symbols: Iterable[Tuple[str, int]]):
        self.symbols: List[Tuple[str, int]] = []
        self._ranks: Dict[str, int] = {}
        for name, rank in symbols:
            if name in self._ranks:
                raise ParseError(f"Símbolo duplicado en el alfabeto: {name!r}")
            if rank < 0:
                raise ParseError(f"Rango negativo para {name!r}")
            self._ranks[name] = rank
            self.symbols.append((name, rank))
        if not self.symbols:
            raise ParseError("El alfabeto con rango no puede estar vacío")

    @classmethod
    def parse(cls, declarations: Iterable[str]) -> "RankedAlphabet":
        """Lee declaraciones "nombre/rango" """
        symbols = []
        for decl in declarations:
            name, sep, rank = str(decl).strip().rpartition("/")
            if not sep or not name or not (rank.isascii() and rank.isdigit()):
                raise ParseError(f"Declaración de símbolo inválida: {decl!r}")
            symbols.append((name, int(rank)))
        return cls(symbols)

    def rank(self, name: str) -> int:
        if name not in self._ranks:
            raise UnknownSymbolError(f"Símbolo desconocido: {name!r}")
        return self._ranks[name]

    @property
    def names(self) -> List[str]:
        return [name for name, _ in self.symbols]

    @property
    def max_rank(self) -> int:
        return max(rank for _, rank in self.symbols)

    def declarations(self) -> List[str]:
        return [f"{name}/{rank}" for name, rank in self.symbols]

    def __contains__(self, name) -> bool:
        return name in self._ranks

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __eq__(self, other):
        return isinstance(other, RankedAlphabet) and self.symbols == other.symbols

    def __hash__(self):
        return hash(tuple(self.symbols))

    def __repr__(self):
        return f"RankedAlphabet({', '.join(self.declarations())})"


class Tree:
    """Término g(t1,...,tk) o variable x_i (var > 0)"""

    __slots__ = ("label", "children", "var", "_hash")

    def __init__(self, label: str, children: Sequence["Tree"] = (), var: int = 0):
        self.label = label
        self.children: Tuple[Tree, ...] = tuple(children)
        self.var = var
        self._hash = hash((label, var, self.children))

    @classmethod
    def variable(cls, index: int) -> "Tree":
        return cls(f"x{index}", (), var=index)

    @property
    def is_variable(self) -> bool:
        return self.var > 0

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Tree) or self._hash != other._hash:
            return False
        return self.label == other.label and self.var == other.var and self.children == other.children

    def __hash__(self):
        return self._hash

    def __str__(self):
        if not self.children:
            return self.label
        return f"{self.label}({','.join(str(c) for c in self.children)})"

    def __repr__(self):
        return f"Tree({self})"


# ---------------------------------------------------------------------------
# Lectura de s-expresiones
# ---------------------------------------------------------------------------

def _tokenize(text: str) -> List[str]:
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match or match.end() == pos:
            raise ParseError(f"Carácter inesperado en el árbol: {text[pos:]!r}")
        tokens.append(match.group(1) or match.group(2))
        pos = match.end()
    return tokens


def parse_tree(text: str, alphabet: Optional[RankedAlphabet] = None,
               allow_variables: bool = False) -> Tree:
    """Lee un árbol como a(b(#,#),#); x1, x2, ... son variables si allow_variables"""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("Árbol vacío")
    index = 0

    def parse_node() -> Tree:
        nonlocal index
        if index >= len(tokens) or tokens[index] in "(),":
            raise ParseError(f"Se esperaba un símbolo en {text!r}")
        name = tokens[index]
        index += 1
        children = []
        if index < len(tokens) and tokens[index] == "(":
            index += 1
            children.append(parse_node())
            while index < len(tokens) and tokens[index] == ",":
                index += 1
                children.append(parse_node())
            if index >= len(tokens) or tokens[index] != ")":
                raise ParseError(f"Falta ')' en {text!r}")
            index += 1

        var_match = _VARIABLE_RE.match(name) if allow_variables else None
        if var_match:
            if children:
                raise ParseError(f"La variable {name} no puede tener hijos")
            return Tree.variable(int(var_match.group(1)))
        if alphabet is not None:
            if name not in alphabet:
                raise ParseError(f"Símbolo {name!r} fuera del alfabeto")
            if alphabet.rank(name) != len(children):
                raise ParseError(
                    f"El símbolo {name!r} tiene rango {alphabet.rank(name)} y recibió {len(children)} hijos"
                )
        return Tree(name, children)

    tree = parse_node()
    if index != len(tokens):
        raise ParseError(f"Texto sobrante tras el árbol: {' '.join(tokens[index:])!r}")
    return tree


# ---------------------------------------------------------------------------
# Posiciones
# ---------------------------------------------------------------------------

def parse_position(w: str) -> Tuple[int, ...]:
    if w in ("", "ε"):
        return ()
    parts = w.split(".")
    if not all(p.isascii() and p.isdigit() and int(p) >= 1 for p in parts):
        raise InvalidPositionError(f"Posición mal formada: {w!r}")
    return tuple(int(p) for p in parts)


def format_position(path: Sequence[int]) -> str:
    return ".".join(str(i) for i in path)


def positions(t: Tree) -> List[str]:
    """pos(t) en orden lexicográfico (preorden)"""
    result = []

    def walk(node: Tree, path: Tuple[int, ...]):
        result.append(format_position(path))
        for i, child in enumerate(node.children, start=1):
            walk(child, path + (i,))

    walk(t, ())
    return result


def subtree_at(t: Tree, w: str) -> Tree:
    node = t
    for i in parse_position(w):
        if i > len(node.children):
            raise InvalidPositionError(f"La posición {w!r} no pertenece a pos({t})")
        node = node.children[i - 1]
    return node


def label_at(t: Tree, w: str) -> str:
    return subtree_at(t, w).label


def _replace(node: Tree, path: Tuple[int, ...], replacement: Tree, original: str) -> Tree:
    if not path:
        return replacement
    head, rest = path[0], path[1:]
    if head > len(node.children):
        raise InvalidPositionError(f"La posición {original!r} no pertenece al árbol")
    children = list(node.children)
    children[head - 1] = _replace(children[head - 1], rest, replacement, original)
    return Tree(node.label, children, node.var)


def substitute_at(t: Tree, w: str, replacement: Tree) -> Tree:
    """t⟨w ← t'⟩"""
    return _replace(t, parse_position(w), replacement, w)


def substitute_many(t: Tree, M: Iterable[str], replacements: Sequence[Tree]) -> Tree:
    """t⟨M ← (t'1,...,t'l)⟩ emparejando M en orden lexicográfico"""
    paths = sorted(parse_position(w) for w in M)
    if len(paths) != len(replacements):
        raise ArityMismatchError(f"{len(paths)} posiciones y {len(replacements)} reemplazos")
    for a, b in zip(paths, paths[1:]):
        if b[:len(a)] == a:
            raise InvalidPositionError(
                f"Posiciones comparables: {format_position(a)!r} es prefijo de {format_position(b)!r}"
            )
    for path, replacement in zip(paths, replacements):
        t = _replace(t, path, replacement, format_position(path))
    return t


# ---------------------------------------------------------------------------
# Variables y medidas
# ---------------------------------------------------------------------------

def variables_of(t: Tree) -> Set[int]:
    if t.is_variable:
        return {t.var}
    found: Set[int] = set()
    for child in t.children:
        found |= variables_of(child)
    return found


def count_variable(t: Tree, index: int) -> int:
    if t.is_variable:
        return 1 if t.var == index else 0
    return sum(count_variable(c, index) for c in t.children)


def is_ground(t: Tree) -> bool:
    return not variables_of(t)


def size(t: Tree) -> int:
    """Número de nodos, |pos(t)|"""
    memo: Dict[int, int] = {}

    def count(node: Tree) -> int:
        key = id(node)
        if key not in memo:
            memo[key] = 1 + sum(count(c) for c in node.children)
        return memo[key]

    return count(t)


def depth(t: Tree) -> int:
    """Número de niveles: una hoja tiene profundidad 1"""
    memo: Dict[int, int] = {}

    def measure(node: Tree) -> int:
        key = id(node)
        if key not in memo:
            memo[key] = 1 + max((measure(c) for c in node.children), default=0)
        return memo[key]

    return measure(t)


def substitute_vars(t: Tree, args: Sequence[Tree]) -> Tree:
    """t⟨t'1,...,t'n⟩: reemplaza cada x_i por args[i-1]"""
    used = variables_of(t)
    if used and max(used) > len(args):
        raise ArityMismatchError(
            f"El término usa x{max(used)} pero solo se dieron {len(args)} argumentos"
        )

    def walk(node: Tree) -> Tree:
        if node.is_variable:
            return args[node.var - 1]
        if not node.children:
            return node
        return Tree(node.label, [walk(c) for c in node.children])

    return walk(t)


# ---------------------------------------------------------------------------
# Homomorfismos de árboles
# ---------------------------------------------------------------------------

class TreeHomomorphism:
    """h: T_Γ → T_Λ dado por un patrón t_g ∈ T_Λ[X_rank(g)] por símbolo"""

    def __init__(self, source: RankedAlphabet, target: RankedAlphabet, patterns: Dict[str, Tree]):
        self.source = source
        self.target = target
        self.patterns: Dict[str, Tree] = {}
        for name, rank in source:
            if name not in patterns:
                raise ParseError(f"El homomorfismo no define patrón para {name!r}")
            pattern = patterns[name]
            self._validate_pattern(name, rank, pattern)
            self.patterns[name] = pattern
        extra = set(patterns) - set(source.names)
        if extra:
            raise ParseError(f"Patrones para símbolos fuera del alfabeto fuente: {sorted(extra)}")

        self.non_deleting = all(
            not self.patterns[name].is_variable
            and all(count_variable(self.patterns[name], i) >= 1 for i in range(1, rank + 1))
            for name, rank in source
        )
        self.linear = all(
            all(count_variable(self.patterns[name], i) <= 1 for i in range(1, rank + 1))
            for name, rank in source
        )

    def _validate_pattern(self, name: str, rank: int, pattern: Tree):
        def walk(node: Tree):
            if node.is_variable:
                if node.var > rank:
                    raise ParseError(
                        f"El patrón de {name!r} usa x{node.var} pero el rango es {rank}"
                    )
                return
            if node.label not in self.target:
                raise ParseError(f"El patrón de {name!r} usa {node.label!r}, ajeno al alfabeto destino")
            if self.target.rank(node.label) != len(node.children):
                raise ParseError(f"Aridad incorrecta de {node.label!r} en el patrón de {name!r}")
            for child in node.children:
                walk(child)
        walk(pattern)

    def __call__(self, t: Tree) -> Tree:
        return apply_hom(self, t)

    def __repr__(self):
        return "TreeHomomorphism(" + ", ".join(f"{g} ↦ {p}" for g, p in self.patterns.items()) + ")"


def apply_hom(h: TreeHomomorphism, t: Tree) -> Tree:
    """h(g(t1..tr)) = t_g⟨h(t1),...,h(tr)⟩; las variables pasan intactas"""
    memo: Dict[int, Tree] = {}

    def walk(node: Tree) -> Tree:
        if node.is_variable:
            return node
        key = id(node)
        if key in memo:
            return memo[key]
        if node.label not in h.source:
            raise UnknownSymbolError(f"El símbolo {node.label!r} no está en el dominio del homomorfismo")
        if h.source.rank(node.label) != len(node.children):
            raise ArityMismatchError(f"Aridad incorrecta de {node.label!r}")
        result = substitute_vars(h.patterns[node.label], [walk(c) for c in node.children])
        memo[key] = result
        return result

    return walk(t)


def generic_alphabet(letters: Sequence[str], r: int) -> RankedAlphabet:
    """Σ_#^r: cada letra con rango r, más # con rango 0"""
    return RankedAlphabet([(a, r) for a in letters] + [(END_MARKER, 0)])


def generic_tree(word: Sequence[str], r: int) -> Tree:
    """t^r_ε = #, t^r_{av} = a(t^r_v,...,t^r_v)"""
    if r < 1:
        raise PreconditionError(f"El rango del árbol genérico debe ser ≥ 1 (recibido {r})")
    tree = Tree(END_MARKER)
    for letter in reversed(list(word)):
        tree = Tree(letter, (tree,) * r)
    return tree


def word_tree(word: Sequence[str]) -> Tree:
    return generic_tree(word, 1)


def word_of_tree(t: Tree) -> List[str]:
    """Inversa de word_tree sobre cadenas unarias terminadas en #"""
    word = []
    node = t
    while node.children:
        if len(node.children) != 1:
            raise PreconditionError(f"{t} no es un árbol-palabra")
        word.append(node.label)
        node = node.children[0]
    if node.label != END_MARKER or node.is_variable:
        raise PreconditionError(f"{t} no termina en {END_MARKER}")
    return word


def generic_hom(letters: Sequence[str], r: int) -> TreeHomomorphism:
    """h^r: árboles-palabra sobre Σ_#^1 → Σ_#^r"""
    x1 = Tree.variable(1)
    patterns = {a: Tree(a, (x1,) * r) for a in letters}
    patterns[END_MARKER] = Tree(END_MARKER)
    return TreeHomomorphism(generic_alphabet(letters, 1), generic_alphabet(letters, r), patterns)


def word_hom(mapping: Dict[str, Sequence[str]], source_letters: Sequence[str],
             target_letters: Sequence[str]) -> TreeHomomorphism:
    """
    Homomorfismo de palabras h': Λ* → Σ* como homomorfismo de rango 1:
    h'(c) = u1...uk se vuelve u1(u2(...uk(x1)...)); h'(c) = ε se vuelve x1.
    """
    x1 = Tree.variable(1)
    patterns = {}
    for c in source_letters:
        if c not in mapping:
            raise ParseError(f"El homomorfismo de palabras no define imagen para {c!r}")
        pattern = x1
        for letter in reversed(list(mapping[c])):
            if letter not in target_letters:
                raise ParseError(f"La imagen de {c!r} usa {letter!r}, ajena al alfabeto destino")
            pattern = Tree(letter, (pattern,))
        patterns[c] = pattern
    patterns[END_MARKER] = Tree(END_MARKER)
    return TreeHomomorphism(generic_alphabet(source_letters, 1), generic_alphabet(target_letters, 1), patterns)


def match_pattern(pattern: Tree, t: Tree) -> Optional[Dict[int, Tree]]:
    """Ligaduras de las variables si t es una instancia del patrón; None si no"""
    bindings: Dict[int, Tree] = {}

    def walk(p: Tree, node: Tree) -> bool:
        if p.is_variable:
            bound = bindings.get(p.var)
            if bound is None:
                bindings[p.var] = node
                return True
            return bound == node
        if p.label != node.label or len(p.children) != len(node.children) or node.is_variable:
            return False
        return all(walk(pc, nc) for pc, nc in zip(p.children, node.children))

    return bindings if walk(pattern, t) else None


def hom_preimages(h: TreeHomomorphism, t: Tree) -> FrozenSet[Tree]:
    """{ t' | h(t') = t } para h no borrador, por emparejamiento memoizado"""
    if not h.non_deleting:
        raise PreconditionError("hom_preimages exige un homomorfismo no borrador")
    limit_nodes = settings.ALTERWEIGHT_PREIMAGE_MAX_NODES
    if size(t) > limit_nodes:
        raise ResourceExhaustedError(
            f"El árbol tiene {size(t)} nodos; ALTERWEIGHT_PREIMAGE_MAX_NODES={limit_nodes}",
            {"nodes": size(t), "limit": limit_nodes},
        )
    limit_results = settings.ALTERWEIGHT_PREIMAGE_MAX_RESULTS
    memo: Dict[Tree, FrozenSet[Tree]] = {}

    def preimages(node: Tree) -> FrozenSet[Tree]:
        if node in memo:
            return memo[node]
        found: Set[Tree] = set()
        for name, rank in h.source:
            bindings = match_pattern(h.patterns[name], node)
            if bindings is None:
                continue
            choices = [preimages(bindings[i]) for i in range(1, rank + 1)]
            for children in cartesian(*choices):
                found.add(Tree(name, children))
                if len(found) > limit_results:
                    raise ResourceExhaustedError(
                        f"Más de {limit_results} preimágenes (ALTERWEIGHT_PREIMAGE_MAX_RESULTS)",
                        {"limit": limit_results},
                    )
        memo[node] = frozenset(found)
        return memo[node]

    return preimages(t)


def enumerate_trees(alphabet: RankedAlphabet, max_depth: int, max_size: Optional[int] = None) -> List[Tree]:
    """Todos los árboles cerrados de profundidad ≤ max_depth (y tamaño ≤ max_size)"""
    leaves = [Tree(name) for name, rank in alphabet if rank == 0]
    level: List[Tree] = list(leaves) if max_depth >= 1 else []
    for _ in range(1, max_depth):
        nxt = list(leaves)
        for name, rank in alphabet:
            if rank == 0:
                continue
            for children in cartesian(level, repeat=rank):
                nxt.append(Tree(name, children))
        level = nxt
    if max_size is not None:
        level = [t for t in level if size(t) <= max_size]
    return level
