"""The two-cyclic-group bigraphs on Z_m (part Y) and Z_n (part X).

Edge ``i`` joins ``i mod m`` to ``i mod n`` for ``0 <= i < mn/gcd(m, n)``,
so edge positions follow ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Mapping, Sequence

from .core import BiregularGraph, EdgeBicoloring


@dataclass(frozen=True)
class CyclicParams:
    m: int
    n: int

    def __post_init__(self):
        if self.n < 1 or self.m < self.n:
            raise ValueError(f"need m >= n >= 1, got m={self.m}, n={self.n}")

    @property
    def g(self) -> int:
        return gcd(self.m, self.n)

    @property
    def edge_count(self) -> int:
        return self.m * self.n // self.g

    @property
    def lam(self) -> int:
        return self.n // self.g

    @property
    def mu(self) -> int:
        return self.m // self.g


def build_cyclic_bigraph(params: CyclicParams) -> BiregularGraph:
    m, n = params.m, params.n
    edges = tuple((i % m, i % n, 0) for i in range(params.edge_count))
    return BiregularGraph(m, n, edges, params.lam, params.mu)


def greedy_bicolor(
    params: CyclicParams,
    ordered_theta: Sequence[tuple[int, int]],
    omega: Mapping | Sequence[int],
) -> EdgeBicoloring:
    """Colour edges in order ``i = 0, 1, ...``, spending each pair's weight in turn.

    ``omega`` is either a mapping pair -> weight or a sequence aligned with
    ``ordered_theta``.  The result is not checked for validity.
    """
    theta = [tuple(p) for p in ordered_theta]
    if len(set(theta)) != len(theta):
        raise ValueError("ordered_theta repeats a pair")
    if isinstance(omega, Mapping):
        weights = [int(omega[p]) for p in theta]
    else:
        weights = [int(w) for w in omega]
        if len(weights) != len(theta):
            raise ValueError("omega and ordered_theta differ in length")
    if any(w < 1 for w in weights):
        raise ValueError("weights must be positive")
    if sum(weights) != params.edge_count:
        raise ValueError(f"weights sum to {sum(weights)}, graph has {params.edge_count} edges")
    pairs = []
    for pair, w in zip(theta, weights):
        pairs.extend([pair] * w)
    return EdgeBicoloring(tuple(pairs))
