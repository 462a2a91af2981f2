"""Cycles of K_m up to rotation and reflection, permutation parity, and the
Petersen graph O_3 on the 3-subsets of {1, ..., 5} with its edge 5-colouring.

A vertex of O_3 is a sorted 3-tuple; an edge is ``(u, v, colour)`` with
``u < v`` and ``colour`` the single element shared by ``u`` and ``v``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from typing import Hashable, Iterable, Sequence

__all__ = [
    "CycleClass",
    "Parity",
    "ColoredGraph",
    "ThetaCorrespondence",
    "canonical_cycle",
    "parse_word",
    "permutation_parity",
    "cycle_parity",
    "reversal_preserves_parity",
    "build_petersen",
    "enumerate_graph_cycles",
    "induced_color_cycle",
    "theta_correspondence",
    "shared_edge",
    "k5_cycle_classes",
]


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1


@dataclass(frozen=True, order=True)
class CycleClass:
    """An unoriented cycle, stored as the least word of its dihedral orbit."""

    canonical: tuple

    @property
    def length(self) -> int:
        return len(self.canonical)

    def __str__(self) -> str:
        if all(isinstance(s, int) and 0 <= s < 10 for s in self.canonical):
            return "(" + "".join(str(s) for s in self.canonical) + ")"
        return "(" + ", ".join(_vertex_str(s) for s in self.canonical) + ")"

    @property
    def key(self) -> str:
        """Compact digit string, e.g. ``"13524"``; only for single-digit symbols."""
        return "".join(str(s) for s in self.canonical)

    def edges(self) -> list[tuple]:
        c = self.canonical
        return [(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]


def _vertex_str(v) -> str:
    if isinstance(v, tuple):
        return "".join(str(s) for s in v)
    return str(v)


def parse_word(word) -> tuple:
    """``"13524"`` or ``[1, 3, 5, 2, 4]`` -> ``(1, 3, 5, 2, 4)``."""
    if isinstance(word, str):
        if not word.isdigit():
            raise ValueError(f"not a digit word: {word!r}")
        return tuple(int(c) for c in word)
    return tuple(word)


def canonical_cycle(word: Sequence[Hashable] | str) -> CycleClass:
    w = parse_word(word)
    if len(w) < 3:
        raise ValueError(f"a cycle needs at least 3 symbols, got {w}")
    if len(set(w)) != len(w):
        raise ValueError(f"cycle word {w} repeats a symbol")
    n = len(w)
    best = None
    for seq in (w, w[::-1]):
        for k in range(n):
            rot = seq[k:] + seq[:k]
            if best is None or rot < best:
                best = rot
    return CycleClass(best)


def permutation_parity(word) -> Parity:
    """Parity of a one-line permutation of ``1..n`` by inversion count."""
    w = parse_word(word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
    inversions = sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
    return Parity(inversions % 2)


def cycle_parity(c: CycleClass) -> Parity:
    """Permutation parity of a cycle class on all of ``1..n``.

    Defined only for ``n % 4 == 1``; otherwise rotations or the reversal
    change the parity and the class has none.
    """
    n = c.length
    if n % 4 != 1:
        raise ValueError(f"parity is not a class invariant for cycles of length {n}")
    return permutation_parity(c.canonical)


def reversal_preserves_parity(n: int) -> bool:
    """Whether reversing an n-circuit keeps its permutation parity (n odd)."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and at least 3, got {n}")
    k = (n - 1) // 2
    return k % 2 == 0


@lru_cache(maxsize=None)
def k5_cycle_classes(length: int) -> tuple:
    """All unoriented cycles of K_5 of the given length, sorted."""
    classes = set()
    for subset in combinations(range(1, 6), length):
        for perm in permutations(subset):
            classes.add(canonical_cycle(perm))
    return tuple(sorted(classes))


@dataclass(frozen=True)
class ColoredGraph:
    vertices: tuple
    edges: tuple

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: [] for v in self.vertices}
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    @cached_property
    def colour_of(self) -> dict:
        out = {}
        for u, v, c in self.edges:
            out[frozenset((u, v))] = c
        return out

    def color(self, u, v) -> int:
        try:
            return self.colour_of[frozenset((u, v))]
        except KeyError:
            raise ValueError(f"{u} and {v} are not adjacent") from None


def build_petersen() -> ColoredGraph:
    vertices = tuple(combinations(range(1, 6), 3))
    edges = []
    for u, v in combinations(vertices, 2):
        common = set(u) & set(v)
        if len(common) == 1:
            edges.append((u, v, common.pop()))
    return ColoredGraph(vertices, tuple(edges))


def enumerate_graph_cycles(g: ColoredGraph, k: int) -> list[CycleClass]:
    if not 3 <= k <= len(g.vertices):
        raise ValueError(f"cycle length {k} out of range")
    adj = g.adjacency
    found = set()

    def extend(path, on_path):
        last = path[-1]
        if len(path) == k:
            if path[0] in adj[last]:
                found.add(canonical_cycle(path))
            return
        for nxt in adj[last]:
            # path[0] is kept the least vertex of the cycle
            if nxt > path[0] and nxt not in on_path:
                on_path.add(nxt)
                path.append(nxt)
                extend(path, on_path)
                path.pop()
                on_path.discard(nxt)

    for start in g.vertices:
        extend([start], {start})
    return sorted(found)


def _as_vertex_cycle(cycle) -> tuple:
    if isinstance(cycle, CycleClass):
        return cycle.canonical
    return tuple(tuple(v) if not isinstance(v, tuple) else v for v in cycle)


def color_word(g: ColoredGraph, cycle) -> tuple:
    vs = _as_vertex_cycle(cycle)
    return tuple(g.color(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


def induced_color_cycle(g: ColoredGraph, cycle) -> CycleClass:
    """Class of the colour word read around ``cycle``.

    A word of distinct colours gives its own class; a word that is a
    3-word repeated twice gives the class of the 3-word.
    """
    word = color_word(g, cycle)
    if len(set(word)) == len(word):
        return canonical_cycle(word)
    if len(word) == 6 and word[:3] == word[3:] and len(set(word[:3])) == 3:
        return canonical_cycle(word[:3])
    raise ValueError(f"colour word {word} is neither injective nor a doubled 3-word")


@dataclass(frozen=True)
class ThetaCorrespondence:
    """theta5: 5-cycle class of K_5 -> 5-cycle of O_3; theta3: 3-class -> 6-cycle."""

    theta5: dict
    theta3: dict

    def five_cycle(self, c) -> CycleClass:
        return self.theta5[_k5_class(c)]

    def six_cycle(self, c) -> CycleClass:
        return self.theta3[_k5_class(c)]


def _k5_class(c) -> CycleClass:
    if isinstance(c, CycleClass):
        return c
    if isinstance(c, (set, frozenset)):
        return canonical_cycle(sorted(c))
    return canonical_cycle(c)


def _invert_induced(g: ColoredGraph, cycles: Iterable[CycleClass], targets: Sequence[CycleClass]) -> dict:
    inverse = {}
    for cyc in cycles:
        cls = induced_color_cycle(g, cyc)
        if cls in inverse:
            raise AssertionError(f"two O_3 cycles induce {cls}")
        inverse[cls] = cyc
    if set(inverse) != set(targets):
        raise AssertionError("induced colour map is not onto the K_5 cycle classes")
    return dict(sorted(inverse.items()))


@lru_cache(maxsize=None)
def _petersen() -> ColoredGraph:
    return build_petersen()


@lru_cache(maxsize=None)
def theta_correspondence() -> ThetaCorrespondence:
    g = _petersen()
    theta5 = _invert_induced(g, enumerate_graph_cycles(g, 5), k5_cycle_classes(5))
    theta3 = _invert_induced(g, enumerate_graph_cycles(g, 6), k5_cycle_classes(3))
    return ThetaCorrespondence(theta5, theta3)


def _cycle_edge_set(g: ColoredGraph, cycle: CycleClass) -> set:
    return {(min(u, v), max(u, v), g.color(u, v)) for u, v in cycle.edges()}


def shared_edge(y, x) -> tuple | None:
    """The unique O_3 edge on both theta5(y) and theta3(x), or None.

    ``y`` is a 5-cycle class (or word) of K_5, ``x`` a 3-subset.  Raises
    ``ValueError`` when the two cycles share two or more edges.
    """
    g = _petersen()
    theta = theta_correspondence()
    common = _cycle_edge_set(g, theta.five_cycle(y)) & _cycle_edge_set(g, theta.six_cycle(x))
    if len(common) > 1:
        raise ValueError(f"{len(common)} shared edges between theta5({y}) and theta3({x})")
    return common.pop() if common else None


def parse_o3_vertex(text: str) -> tuple:
    """``"512"`` -> ``(1, 2, 5)``."""
    v = tuple(sorted(parse_word(text)))
    if len(v) != 3 or len(set(v)) != 3 or not set(v) <= {1, 2, 3, 4, 5}:
        raise ValueError(f"{text!r} is not a 3-subset of 1..5")
    return v


def is_cycle_of(g: ColoredGraph, vertices: Sequence[tuple]) -> bool:
    """Whether consecutive vertices (cyclically) are distinct and adjacent."""
    if len(set(vertices)) != len(vertices) or len(vertices) < 3:
        return False
    adj = g.adjacency
    return all(
        v in adj and vertices[(i + 1) % len(vertices)] in adj[v] for i, v in enumerate(vertices)
    )
