"""Exhaustive search for GCC bicolorings of G'.

Two engines share one canonical order, lexicographic over (edge index,
pair code) with G' edges sorted by (y-alias, w):

* :class:`EdgeSearch` assigns one edge at a time with per-vertex palette
  masks, pair counters and forward checking.  A memo of completion counts
  makes counting fast and lets enumeration skip dead branches.
* :class:`StarSearch` assigns a whole y-star at a time and meets in the
  middle.  It tracks the level-table mirror defect, so it counts and lists
  distribution-reversible solutions without visiting the others.
"""

from __future__ import annotations

import random
import sys
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .gcc import ANSATZ_PAIR, CODE, OMEGA, RHO, THETA_GCC, GccSolution, GPrime, default_gprime

__all__ = [
    "EdgeSearch",
    "StarSearch",
    "EnumerationResult",
    "enumerate_gcc_solutions",
    "fingerprint_weights",
    "FINGERPRINT_MODULUS",
]

ALPHA = tuple(int(p[0]) - 1 for p in THETA_GCC)
BETA = tuple("abc".index(p[1]) for p in THETA_GCC)
WEIGHT = tuple(OMEGA[p] for p in THETA_GCC)
FINGERPRINT_MODULUS = (1 << 61) - 1


def allowed_codes(w: int, fix_135: bool) -> tuple[int, ...]:
    if fix_135 and w in ANSATZ_PAIR:
        return (CODE[ANSATZ_PAIR[w]],)
    return tuple(range(len(THETA_GCC)))


def fingerprint_weights(n_edges: int, seed: int) -> list[list[int]]:
    """Random evaluation point: one residue per (edge, pair code)."""
    rng = random.Random(seed)
    return [[rng.randrange(1, FINGERPRINT_MODULUS) for _ in THETA_GCC] for _ in range(n_edges)]


class EdgeSearch:
    """Edge-by-edge backtracking over a G' whose edges are grouped by y."""

    def __init__(self, gprime: GPrime, fix_135: bool = False):
        self.gprime = gprime
        self.edges = gprime.edges
        self.n = len(self.edges)
        self.options = [allowed_codes(w, fix_135) for _, _, w in self.edges]
        # edges still to come at the same x, and whether the next edge starts a new star
        self.x_left = [sum(1 for j in range(i + 1, self.n) if self.edges[j][1] == x) for i, (_, x, _) in enumerate(self.edges)]
        self.new_star = [i + 1 < self.n and self.edges[i + 1][0] != self.edges[i][0] for i in range(self.n)]
        self._memo: dict = {}
        self._fp_memo: dict = {}
        self._fp_weights = None

    # states are (ymask, xmask, counts) with counts packed 4 bits per pair

    def _step(self, i: int, state: tuple, k: int):
        """The state after giving edge ``i`` pair ``k``, or None if that is illegal."""
        ymask, xmask, counts = state
        _, x, _ = self.edges[i]
        abit = 1 << ALPHA[k]
        bbit = 1 << (3 * x + BETA[k])
        if ymask & abit or xmask & bbit or (counts >> (4 * k)) & 15 >= WEIGHT[k]:
            return None
        xmask |= bbit
        free = 3 - bin((xmask >> (3 * x)) & 7).count("1")
        if free < self.x_left[i]:
            return None
        ymask = 0 if self.new_star[i] else ymask | abit
        return ymask, xmask, counts + (1 << (4 * k))

    def _count(self, i: int, state: tuple) -> int:
        if i == self.n:
            return 1
        key = (i, *state)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        total = 0
        for k in self.options[i]:
            nxt = self._step(i, state, k)
            if nxt is not None:
                total += self._count(i + 1, nxt)
        self._memo[key] = total
        return total

    def _walk_prefix(self, prefix: Sequence[int]):
        state = (0, 0, 0)
        for i, k in enumerate(prefix):
            if k not in self.options[i]:
                return None
            state = self._step(i, state, k)
            if state is None:
                return None
        return state

    def count(self, prefix: Sequence[int] = ()) -> int:
        """Exact number of solutions extending ``prefix`` (pair codes of the first edges)."""
        state = self._walk_prefix(prefix)
        return 0 if state is None else self._count(len(prefix), state)

    def fingerprint(self, seed: int, prefix: Sequence[int] = ()) -> int:
        """Sum over solutions of the product of their edge residues, mod 2^61 - 1."""
        if self._fp_weights is None or self._fp_weights[0] != seed:
            self._fp_weights = (seed, fingerprint_weights(self.n, seed))
            self._fp_memo = {}
        r = self._fp_weights[1]
        state = self._walk_prefix(prefix)
        if state is None:
            return 0
        lead = 1
        for i, k in enumerate(prefix):
            lead = lead * r[i][k] % FINGERPRINT_MODULUS
        return lead * self._fingerprint(len(prefix), state, r) % FINGERPRINT_MODULUS

    def _fingerprint(self, i: int, state: tuple, r) -> int:
        if i == self.n:
            return 1
        key = (i, *state)
        hit = self._fp_memo.get(key)
        if hit is not None:
            return hit
        total = 0
        for k in self.options[i]:
            nxt = self._step(i, state, k)
            if nxt is not None:
                total += r[i][k] * self._fingerprint(i + 1, nxt, r)
        total %= FINGERPRINT_MODULUS
        self._fp_memo[key] = total
        return total

    def solutions(self, prefix: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
        """Pair-code tuples of all solutions extending ``prefix``, in canonical order."""
        state = self._walk_prefix(prefix)
        if state is None or self._count(len(prefix), state) == 0:
            return
        codes = list(prefix) + [0] * (self.n - len(prefix))
        # explicit stack of (edge, state, option iterator) keeps deep streams cheap
        stack = [(len(prefix), state, iter(self.options[len(prefix)]))] if len(prefix) < self.n else []
        if not stack:
            yield tuple(codes)
            return
        while stack:
            i, st, it = stack[-1]
            for k in it:
                nxt = self._step(i, st, k)
                if nxt is None or self._count(i + 1, nxt) == 0:
                    continue
                codes[i] = k
                if i + 1 == self.n:
                    yield tuple(codes)
                else:
                    stack.append((i + 1, nxt, iter(self.options[i + 1])))
                break
            else:
                stack.pop()


def _mirror_cells() -> dict:
    """(code, level) -> (digit, sign) for the cells paired by the mirror."""
    cells = {}
    digits = 0
    for k, p in enumerate(THETA_GCC):
        for level in range(1, 6):
            mate = (CODE[RHO[p]], 6 - level)
            if mate == (k, level):
                continue
            if mate in cells:
                cells[(k, level)] = (cells[mate][0], -1)
            else:
                cells[(k, level)] = (digits, 1)
                digits += 1
    return cells


_MIRROR = _mirror_cells()
_DIGIT = 1 << 8  # signed base-256 digits; every digit stays within [-12, 12]
_COUNT_SHIFT = _DIGIT ** len({d for d, _ in _MIRROR.values()})


class StarSearch:
    """Star-at-a-time search that meets in the middle.

    A state is an x-mask (one bit per x and beta) and a signed integer that
    packs the pair counters and, when ``track_mirror`` is set, the defect
    ``T[p][l] - T[rho p][6 - l]`` of the level table.  A complete solution
    has the full x-mask and value ``target``.
    """

    def __init__(self, gprime: GPrime, fix_135: bool = False, track_mirror: bool = True, split: int | None = None):
        self.gprime = gprime
        edges = gprime.edges
        ys = sorted({y for y, _, _ in edges})
        self.stars = [[i for i, e in enumerate(edges) if e[0] == y] for y in ys]
        for star in self.stars:
            if star != list(range(star[0], star[0] + len(star))):
                raise ValueError("edges of a y-star must be consecutive")
        self.full = (1 << (3 * gprime.graph.x_count)) - 1
        self.track_mirror = track_mirror
        self.target = sum(WEIGHT[k] * _COUNT_SHIFT * _DIGIT ** k for k in range(len(THETA_GCC)))
        self.local = [self._local_options(star, fix_135) for star in self.stars]
        self.split = len(self.stars) // 2 if split is None else split

    def _local_options(self, star: list[int], fix_135: bool) -> list[tuple[tuple, int, int]]:
        edges = self.gprime.edges
        out = []
        for codes in product(*(allowed_codes(edges[i][2], fix_135) for i in star)):
            if len({ALPHA[k] for k in codes}) != len(codes):
                continue
            xmask, value, ok = 0, 0, True
            for i, k in zip(star, codes):
                bit = 1 << (3 * edges[i][1] + BETA[k])
                if xmask & bit:
                    ok = False
                    break
                xmask |= bit
                value += _COUNT_SHIFT * _DIGIT ** k
                if self.track_mirror and (k, edges[i][2]) in _MIRROR:
                    digit, sign = _MIRROR[(k, edges[i][2])]
                    value += sign * _DIGIT ** digit
            if ok:
                out.append((codes, xmask, value))
        return out

    def _forward(self, stars: range, start=None) -> list[dict]:
        layers = [start or {0: Counter({0: 1})}]
        for s in stars:
            nxt = defaultdict(Counter)
            for xmask, values in layers[-1].items():
                for _, lmask, lvalue in self.local[s]:
                    if xmask & lmask:
                        continue
                    bucket = nxt[xmask | lmask]
                    for v, c in values.items():
                        bucket[v + lvalue] += c
            layers.append(dict(nxt))
        return layers

    def count(self) -> int:
        """Exact count by meeting in the middle."""
        h = self.split
        front = self._forward(range(h))[-1]
        back = self._forward(range(h, len(self.stars)))[-1]
        total = 0
        for xmask, values in front.items():
            other = back.get(self.full ^ xmask)
            if other:
                total += sum(c * other.get(self.target - v, 0) for v, c in values.items())
        return total

    def _group_paths(self, stars: range, first=None) -> dict:
        """x-mask -> value -> code tuples of every partial assignment of ``stars``."""
        paths = {(0, 0): [()]}
        for s in stars:
            options = self.local[s]
            if s == 0 and first is not None:
                allowed = set(first)
                options = [o for o in options if o[0] in allowed]
            nxt = defaultdict(list)
            for (xmask, value), prefixes in paths.items():
                for codes, lmask, lvalue in options:
                    if not xmask & lmask:
                        nxt[(xmask | lmask, value + lvalue)].extend(p + codes for p in prefixes)
            paths = nxt
        grouped = defaultdict(dict)
        for (xmask, value), plist in paths.items():
            grouped[xmask][value] = plist
        return dict(grouped)

    def solutions(self, first: Sequence[tuple] | None = None) -> Iterator[tuple[int, ...]]:
        """Solutions in canonical order; ``first`` restricts the first star's options.

        The stars are cut into three runs whose partial assignments are
        joined on complementary x-masks and values summing to ``target``.
        """
        m = len(self.stars)
        cut1, cut2 = m // 3, (2 * m) // 3
        head = self._group_paths(range(0, cut1), first)
        middle = self._group_paths(range(cut1, cut2))
        tail = self._group_paths(range(cut2, m))
        found = []
        for hx, hvals in head.items():
            rest = self.full ^ hx
            for mx, mvals in middle.items():
                if mx & hx:
                    continue
                tvals = tail.get(rest ^ mx)
                if tvals is None:
                    continue
                for hv, hpaths in hvals.items():
                    need = self.target - hv
                    for mv, mpaths in mvals.items():
                        tpaths = tvals.get(need - mv)
                        if tpaths:
                            found.extend(a + b + c for a in hpaths for b in mpaths for c in tpaths)
        found.sort()
        yield from found

    def first_star_options(self) -> list[tuple]:
        return [codes for codes, _, _ in self.local[0]]


@dataclass(frozen=True)
class EnumerationResult:
    count: int
    solutions: tuple  # GccSolution, canonical order, at most ``limit``

    @property
    def truncated(self) -> bool:
        return len(self.solutions) < self.count


def _run_chunk(gprime: GPrime, fix_135: bool, reversible_only: bool, count_only: bool, limit, prefixes: list) -> list:
    """Worker body: count and list solutions for each first-star prefix."""
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))
    out = []
    if reversible_only:
        engine = StarSearch(gprime, fix_135)
        width = len(engine.stars[0])
        by_prefix = defaultdict(list)
        for sol in engine.solutions(first=prefixes):
            by_prefix[sol[:width]].append(sol)
        for prefix in prefixes:
            sols = by_prefix.get(tuple(prefix), [])
            out.append((prefix, len(sols), [] if count_only else sols[:limit]))
    else:
        engine = EdgeSearch(gprime, fix_135)
        for prefix in prefixes:
            n = engine.count(prefix)
            sols = [] if count_only else _take(engine.solutions(prefix), limit)
            out.append((prefix, n, sols))
    return out


def _take(it, limit):
    if limit is None:
        return list(it)
    out = []
    for s in it:
        if len(out) >= limit:
            break
        out.append(s)
    return out


def enumerate_gcc_solutions(
    gprime: GPrime | None = None,
    fix_135: bool = False,
    reversible_only: bool = False,
    count_only: bool = False,
    limit: int | None = None,
    workers: int = 1,
) -> EnumerationResult:
    """All faithful weight-compatible bicolorings of G', counted exactly.

    ``solutions`` holds the first ``limit`` solutions in canonical order
    (all of them when ``limit`` is None, none when ``count_only``).  With
    ``reversible_only`` only distribution-reversible solutions count.  The
    result does not depend on ``workers``.
    """
    gp = gprime or default_gprime()
    if workers < 1:
        raise ValueError("workers must be at least 1")
    if limit is not None and limit < 0:
        raise ValueError("limit must be non-negative")
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))
    if workers == 1:
        if reversible_only:
            engine = StarSearch(gp, fix_135)
            if count_only:
                return EnumerationResult(engine.count(), ())
            sols = list(engine.solutions())
            return EnumerationResult(len(sols), _wrap(sols[:limit] if limit is not None else sols, gp))
        engine = EdgeSearch(gp, fix_135)
        total = engine.count()
        codes = [] if count_only else _take(engine.solutions(), limit)
        return EnumerationResult(total, _wrap(codes, gp))

    prefixes = StarSearch(gp, fix_135, track_mirror=False).first_star_options()
    chunks = [prefixes[i::workers] for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_chunk, gp, fix_135, reversible_only, count_only, limit, c) for c in chunks if c]
        parts = [row for f in futures for row in f.result()]
    parts.sort(key=lambda row: row[0])
    total = sum(n for _, n, _ in parts)
    codes = [s for _, _, sols in parts for s in sols]
    if limit is not None:
        codes = codes[:limit]
    return EnumerationResult(total, () if count_only else _wrap(codes, gp))


def _wrap(codes: Sequence[tuple], gp: GPrime) -> tuple:
    return tuple(GccSolution.from_codes(c, gp) for c in codes)
