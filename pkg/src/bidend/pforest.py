"""Decorated planar rooted trees and forests.

Children are stored left to right.  Text encoding::

    forest := tree (' ' tree)*
    tree   := label ('[' tree (',' tree)* ']')?

``*`` is the default decoration of degree 1.  The empty forest (the unit of
the Hopf algebra) renders as ``1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .core import LinComb, ZERO


@dataclass(frozen=True, order=True)
class Decoration:
    label: str
    degree: int = 1

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"decoration {self.label!r} must have degree >= 1")


STAR = Decoration("*", 1)

_LABEL_RE = re.compile(r"\*|[A-Za-z_][A-Za-z0-9_]*")


class DecorationSet:
    """Ordered set of decorations, graded by degree; no degree-0 elements."""

    def __init__(self, decorations: Iterable[Decoration] = ()):
        self.decorations: tuple[Decoration, ...] = tuple(decorations)
        self._by_label = {}
        for d in self.decorations:
            if d.label in self._by_label:
                raise ValueError(f"duplicate decoration label {d.label!r}")
            if not _LABEL_RE.fullmatch(d.label):
                raise ValueError(f"invalid decoration label {d.label!r}")
            self._by_label[d.label] = d

    @classmethod
    def single(cls) -> "DecorationSet":
        return cls([STAR])

    @classmethod
    def from_profile(cls, counts: Sequence[int], prefix: str = "p") -> "DecorationSet":
        """counts[n-1] decorations of degree n, labelled ``p<n>_<i>``."""
        return cls(Decoration(f"{prefix}{n}_{i}", n)
                   for n, c in enumerate(counts, start=1) for i in range(1, c + 1))

    @classmethod
    def parse(cls, spec: str) -> "DecorationSet":
        """``"a:1,b:3"`` (degree defaults to 1)."""
        decs = []
        for item in filter(None, (s.strip() for s in spec.split(","))):
            label, _, deg = item.partition(":")
            decs.append(Decoration(label, int(deg) if deg else 1))
        return cls(decs)

    def __getitem__(self, label: str) -> Decoration:
        return self._by_label[label]

    def __contains__(self, label: str) -> bool:
        return label in self._by_label

    def __iter__(self) -> Iterator[Decoration]:
        return iter(self.decorations)

    def __len__(self) -> int:
        return len(self.decorations)

    def of_degree(self, n: int) -> list[Decoration]:
        return [d for d in self.decorations if d.degree == n]

    def profile(self, max_degree: int) -> list[int]:
        return [len(self.of_degree(n)) for n in range(1, max_degree + 1)]

    def __repr__(self) -> str:
        return "DecorationSet(" + ",".join(f"{d.label}:{d.degree}" for d in self) + ")"


class Tree:
    __slots__ = ("dec", "children", "weight", "degree", "_str", "_hash")

    def __init__(self, dec: Decoration, children: Sequence["Tree"] = ()):
        self.dec = dec
        self.children = tuple(children)
        self.weight = 1 + sum(c.weight for c in self.children)
        self.degree = dec.degree + sum(c.degree for c in self.children)
        if self.children:
            self._str = f"{dec.label}[{','.join(c._str for c in self.children)}]"
        else:
            self._str = dec.label
        self._hash = hash((dec, self.children))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Tree) and self._hash == other._hash
                and self.dec == other.dec and self.children == other.children)

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return self._str

    def __repr__(self) -> str:
        return f"Tree({self._str!r})"

    def vertices(self) -> Iterator[tuple[tuple[int, ...], "Tree"]]:
        """Preorder (path, subtree) pairs; a path lists child indices from the root."""
        stack = [((), self)]
        while stack:
            path, t = stack.pop()
            yield path, t
            for i in range(len(t.children) - 1, -1, -1):
                stack.append((path + (i,), t.children[i]))

    def leaves(self) -> int:
        return 1 if not self.children else sum(c.leaves() for c in self.children)


class Forest:
    """Ordered sequence of trees; the empty forest is the unit ``1``."""

    __slots__ = ("trees", "weight", "degree", "_str", "_hash")

    def __init__(self, trees: Iterable[Tree] = ()):
        self.trees = tuple(trees)
        self.weight = sum(t.weight for t in self.trees)
        self.degree = sum(t.degree for t in self.trees)
        self._str = " ".join(t._str for t in self.trees) if self.trees else "1"
        self._hash = hash(self.trees)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Forest) and self._hash == other._hash and self.trees == other.trees

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Forest") -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        return (self.degree, self._str)

    def __str__(self) -> str:
        return self._str

    def __repr__(self) -> str:
        return f"Forest({self._str!r})"

    def __len__(self) -> int:
        return len(self.trees)

    def __bool__(self) -> bool:
        return bool(self.trees)

    def __mul__(self, other: "Forest") -> "Forest":
        return Forest(self.trees + other.trees)

    def is_tree(self) -> bool:
        return len(self.trees) == 1

    def roots(self) -> int:
        return len(self.trees)

    def leaves(self) -> int:
        return sum(t.leaves() for t in self.trees)

    def decorations(self) -> list[Decoration]:
        return sorted(t.dec for tree in self.trees for _, t in tree.vertices())


ONE = Forest()


def as_forest(x: "Forest | Tree") -> Forest:
    return x if isinstance(x, Forest) else Forest((x,))


def b_plus(d: Decoration, forest: Forest) -> Tree:
    return Tree(d, forest.trees)


def node(d: Decoration = STAR) -> Forest:
    return Forest((Tree(d),))


def ladder(k: int, d: Decoration = STAR) -> Forest:
    f = ONE
    for _ in range(k):
        f = Forest((b_plus(d, f),))
    return f


# ---------------------------------------------------------------- parsing

class ForestSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownDecorationError(ValueError):
    pass


class _Parser:
    def __init__(self, text: str, decorations: DecorationSet | None):
        self.text = text
        self.pos = 0
        self.decorations = decorations

    def error(self, msg: str):
        raise ForestSyntaxError(msg, len(self.text[:self.pos].encode()))

    def label(self) -> Decoration:
        m = _LABEL_RE.match(self.text, self.pos)
        if not m:
            self.error("expected a label")
        self.pos = m.end()
        lab = m.group()
        if self.decorations is None:
            return STAR if lab == "*" else Decoration(lab, 1)
        if lab not in self.decorations:
            raise UnknownDecorationError(f"unknown decoration label {lab!r}")
        return self.decorations[lab]

    def tree(self) -> Tree:
        dec = self.label()
        children = []
        if self.pos < len(self.text) and self.text[self.pos] == "[":
            self.pos += 1
            children.append(self.tree())
            while self.pos < len(self.text) and self.text[self.pos] == ",":
                self.pos += 1
                children.append(self.tree())
            if self.pos >= len(self.text) or self.text[self.pos] != "]":
                self.error("expected ']' or ','")
            self.pos += 1
        return Tree(dec, children)

    def forest(self) -> Forest:
        if self.text.strip() == "1":
            return ONE
        trees = [self.tree()]
        while self.pos < len(self.text):
            if self.text[self.pos] != " ":
                self.error("expected ' ' between trees")
            while self.pos < len(self.text) and self.text[self.pos] == " ":
                self.pos += 1
            if self.pos == len(self.text):
                break
            trees.append(self.tree())
        return Forest(trees)


def parse_forest(text: str, decorations: DecorationSet | None = None) -> Forest:
    """Parse the text encoding.

    Without ``decorations`` every label is accepted with degree 1.  With a
    :class:`DecorationSet`, unknown labels raise :class:`UnknownDecorationError`.
    """
    return _Parser(text.strip(), decorations).forest()


def render_forest(forest: Forest) -> str:
    return str(forest)


# ------------------------------------------------------------ enumeration

@lru_cache(maxsize=None)
def _trees(decs: tuple[Decoration, ...], n: int) -> tuple[Tree, ...]:
    out = []
    for d in decs:
        if d.degree <= n:
            for f in _forests(decs, n - d.degree):
                out.append(Tree(d, f.trees))
    return tuple(out)


@lru_cache(maxsize=None)
def _forests(decs: tuple[Decoration, ...], n: int) -> tuple[Forest, ...]:
    if n == 0:
        return (ONE,)
    out = []
    for k in range(1, n + 1):
        for t in _trees(decs, k):
            for rest in _forests(decs, n - k):
                out.append(Forest((t,) + rest.trees))
    return tuple(out)


def enumerate_forests(decorations: DecorationSet, n: int) -> list[Forest]:
    """All forests of total degree ``n`` in canonical order."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return sorted(_forests(tuple(decorations), n), key=Forest.sort_key)


def enumerate_trees(decorations: DecorationSet, n: int) -> list[Tree]:
    return sorted(_trees(tuple(decorations), n), key=str)


# ------------------------------------------------------------------- cuts

EMPTY_CUT = "empty"
TOTAL_CUT = "total"


@dataclass(frozen=True)
class Cut:
    """Per-tree cut descriptors: ``"empty"``, ``"total"``, or a frozenset of
    edges, each edge named by the path of its lower vertex."""

    parts: tuple

    def is_empty(self) -> bool:
        return all(p == EMPTY_CUT for p in self.parts)

    def is_total(self) -> bool:
        return all(p == TOTAL_CUT for p in self.parts)


@lru_cache(maxsize=None)
def _subtree_cuts(t: Tree) -> tuple[tuple[frozenset, tuple[Tree, ...], Tree], ...]:
    """Cuts of ``t`` that keep its root: (edges, pruned trees, root part)."""
    options_per_child = []
    for i, c in enumerate(t.children):
        opts = [(frozenset({(i,)}), (c,), None)]
        for edges, pruned, rest in _subtree_cuts(c):
            opts.append((frozenset((i,) + e for e in edges), pruned, rest))
        options_per_child.append(opts)
    out = []
    for combo in product(*options_per_child):
        edges = frozenset().union(*(o[0] for o in combo)) if combo else frozenset()
        pruned = tuple(tr for o in combo for tr in o[1])
        kept = tuple(o[2] for o in combo if o[2] is not None)
        out.append((edges, pruned, Tree(t.dec, kept)))
    return tuple(out)


@lru_cache(maxsize=None)
def tree_cuts(t: Tree) -> tuple[tuple[object, tuple[Tree, ...], tuple[Tree, ...]], ...]:
    """All of Adm_* for one tree: (descriptor, P trees, R trees)."""
    out = []
    for edges, pruned, rest in _subtree_cuts(t):
        out.append((edges if edges else EMPTY_CUT, pruned, (rest,)))
    out.append((TOTAL_CUT, (t,), ()))
    return tuple(out)


def all_cuts(forest: Forest) -> Iterator[tuple[Cut, Forest, Forest]]:
    """Every cut of Adm_*(F), including the empty and the total cut."""
    if not forest:
        yield Cut(()), ONE, ONE
        return
    for combo in product(*(tree_cuts(t) for t in forest.trees)):
        cut = Cut(tuple(c[0] for c in combo))
        p = Forest(tr for c in combo for tr in c[1])
        r = Forest(tr for c in combo for tr in c[2])
        yield cut, p, r


def enumerate_cuts(forest: Forest) -> list[tuple[Cut, Forest, Forest]]:
    """Admissible cuts other than the empty and total cut, as (cut, P, R)."""
    return [(c, p, r) for c, p, r in all_cuts(forest) if not (c.is_empty() or c.is_total())]


# ------------------------------------------------- rightmost leaf and xi

def rightmost_path(forest: Forest) -> tuple[int, ...]:
    """Child-index path from the root of the last tree to the rightmost leaf."""
    if not forest:
        raise ValueError("the empty forest has no leaves")
    t = forest.trees[-1]
    path = []
    while t.children:
        path.append(len(t.children) - 1)
        t = t.children[-1]
    return tuple(path)


def rightmost_leaf(forest: Forest) -> tuple[int, tuple[int, ...], Tree]:
    """(tree index, path, leaf subtree) of the rightmost leaf."""
    path = rightmost_path(forest)
    t = forest.trees[-1]
    for i in path:
        t = t.children[i]
    return len(forest.trees) - 1, path, t


def _drop_rightmost(t: Tree) -> Tree | None:
    if not t.children:
        return None
    last = _drop_rightmost(t.children[-1])
    kids = t.children[:-1] + ((last,) if last is not None else ())
    return Tree(t.dec, kids)


def xi(d: Decoration, forest: Forest) -> LinComb:
    """Delete the rightmost leaf if it is decorated by ``d``, else 0."""
    _, _, leaf = rightmost_leaf(forest)
    if leaf.dec != d:
        return ZERO
    last = _drop_rightmost(forest.trees[-1])
    trees = forest.trees[:-1] + ((last,) if last is not None else ())
    return LinComb.basis(Forest(trees))


# ------------------------------------------------------------ vertex data

def vertex_table(forest: Forest) -> tuple[list[Decoration], list[int | None], list[tuple]]:
    """Flatten a forest: decorations, parent index, and (tree, path) per vertex,
    in preorder, trees left to right."""
    decs, parent, where = [], [], []
    for ti, tree in enumerate(forest.trees):
        index = {}
        for path, sub in tree.vertices():
            index[path] = len(decs)
            decs.append(sub.dec)
            parent.append(index[path[:-1]] if path else None)
            where.append((ti, path))
    return decs, parent, where
