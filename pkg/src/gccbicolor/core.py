"""Biregular bipartite graphs, colour-pair systems and edge bicolorings.

Palettes are 0-based here: alpha ranges over ``range(lam)`` and beta over
``range(mu)``.  Everything is an immutable value; every check returns a
:class:`ValidationReport` and only malformed input raises.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict, namedtuple
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

__all__ = [
    "BiregularGraph",
    "ColorPairSystem",
    "EdgeBicoloring",
    "SymbolPermutationPair",
    "Violation",
    "ValidationReport",
    "validate_biregular",
    "is_increasing",
    "check_proper",
    "check_faithful",
    "check_weight_compatible",
    "apply_pair_permutation",
    "is_symmetrically_reversible",
]

Pair = tuple[int, int]

Violation = namedtuple("Violation", "kind location message")


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a check.  ``notes`` carry documented, non-fatal findings."""

    violations: tuple = ()
    notes: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def kinds(self) -> Counter:
        return Counter(v.kind for v in self.violations)

    def merged(self, *others: "ValidationReport") -> "ValidationReport":
        violations = list(self.violations)
        notes = list(self.notes)
        for other in others:
            violations.extend(other.violations)
            notes.extend(other.notes)
        return ValidationReport(tuple(violations), tuple(notes))

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [_violation_dict(v) for v in self.violations],
            "notes": [_violation_dict(v) for v in self.notes],
        }


def _violation_dict(v: Violation) -> dict:
    return {"kind": v.kind, "location": v.location, "message": v.message}


def report_from(violations: Iterable[Violation], notes: Iterable[Violation] = ()) -> ValidationReport:
    return ValidationReport(tuple(violations), tuple(notes))


@dataclass(frozen=True)
class BiregularGraph:
    """Bipartite graph with parts Y (``y_count``) and X (``x_count``).

    Edges are ``(y, x, tag)`` triples identified by their position in
    ``edges``.  ``lam`` and ``mu`` are the intended degrees of Y- and
    X-vertices; use :func:`validate_biregular` to check them.
    """

    y_count: int
    x_count: int
    edges: tuple
    lam: int
    mu: int
    y_names: tuple | None = field(default=None, compare=True)
    x_names: tuple | None = field(default=None, compare=True)

    def __post_init__(self):
        edges = tuple((int(y), int(x), int(t)) for y, x, t in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.y_count < 0 or self.x_count < 0:
            raise ValueError("vertex counts must be non-negative")
        seen = set()
        for i, (y, x, t) in enumerate(edges):
            if not (0 <= y < self.y_count and 0 <= x < self.x_count):
                raise ValueError(f"edge {i} = {(y, x, t)} has an out-of-range endpoint")
            if (y, x, t) in seen:
                raise ValueError(f"edge {i} duplicates {(y, x)} with the same tag {t}")
            seen.add((y, x, t))
        for names, count, side in ((self.y_names, self.y_count, "y"), (self.x_names, self.x_count, "x")):
            if names is not None:
                if len(names) != count or len(set(names)) != count:
                    raise ValueError(f"{side}_names must list {count} distinct names")
        if self.y_names is not None:
            object.__setattr__(self, "y_names", tuple(self.y_names))
        if self.x_names is not None:
            object.__setattr__(self, "x_names", tuple(self.x_names))

    @cached_property
    def y_stars(self) -> tuple:
        stars = [[] for _ in range(self.y_count)]
        for i, (y, _, _) in enumerate(self.edges):
            stars[y].append(i)
        return tuple(tuple(s) for s in stars)

    @cached_property
    def x_stars(self) -> tuple:
        stars = [[] for _ in range(self.x_count)]
        for i, (_, x, _) in enumerate(self.edges):
            stars[x].append(i)
        return tuple(tuple(s) for s in stars)

    def y_name(self, y: int) -> str:
        return self.y_names[y] if self.y_names else f"y{y}"

    def x_name(self, x: int) -> str:
        return self.x_names[x] if self.x_names else f"x{x}"

    def to_dict(self) -> dict:
        doc = {
            "y_count": self.y_count,
            "x_count": self.x_count,
            "lambda": self.lam,
            "mu": self.mu,
            "edges": [list(e) for e in self.edges],
        }
        if self.y_names is not None:
            doc["y_names"] = list(self.y_names)
        if self.x_names is not None:
            doc["x_names"] = list(self.x_names)
        return doc

    @classmethod
    def from_dict(cls, doc: Mapping) -> "BiregularGraph":
        try:
            return cls(
                y_count=doc["y_count"],
                x_count=doc["x_count"],
                edges=tuple(tuple(e) for e in doc["edges"]),
                lam=doc["lambda"],
                mu=doc["mu"],
                y_names=tuple(doc["y_names"]) if "y_names" in doc else None,
                x_names=tuple(doc["x_names"]) if "x_names" in doc else None,
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed graph document: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class ColorPairSystem:
    """A pair alphabet ``theta`` inside ``range(lam) x range(mu)`` with weights ``omega``."""

    lam: int
    mu: int
    theta: tuple
    omega: Mapping

    def __post_init__(self):
        theta = tuple((int(a), int(b)) for a, b in self.theta)
        if not theta:
            raise ValueError("theta must be nonempty")
        if len(set(theta)) != len(theta):
            raise ValueError("theta lists a pair twice")
        for a, b in theta:
            if not (0 <= a < self.lam and 0 <= b < self.mu):
                raise ValueError(f"pair {(a, b)} lies outside the palettes")
        omega = {(int(a), int(b)): int(w) for (a, b), w in dict(self.omega).items()}
        if set(omega) != set(theta):
            raise ValueError("omega must be defined exactly on theta")
        if any(w < 1 for w in omega.values()):
            raise ValueError("weights must be positive")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "omega", omega)

    @property
    def total_weight(self) -> int:
        return sum(self.omega.values())

    @classmethod
    def from_weights(cls, lam: int, mu: int, theta: Sequence[Pair], weights: Sequence[int]) -> "ColorPairSystem":
        if len(theta) != len(weights):
            raise ValueError("theta and weights differ in length")
        return cls(lam, mu, tuple(theta), dict(zip((tuple(p) for p in theta), weights)))


@dataclass(frozen=True)
class EdgeBicoloring:
    """``pairs[i]`` is the (alpha, beta) pair assigned to edge ``i``."""

    pairs: tuple

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(a), int(b)) for a, b in self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def to_dict(self) -> dict:
        return {"pairs": [list(p) for p in self.pairs]}

    @classmethod
    def from_dict(cls, doc: Mapping) -> "EdgeBicoloring":
        try:
            return cls(tuple(tuple(p) for p in doc["pairs"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed coloring document: {exc}") from exc


@dataclass(frozen=True)
class SymbolPermutationPair:
    """Permutations of the alpha and beta palettes, in one-line form."""

    perm_alpha: tuple
    perm_beta: tuple

    def __post_init__(self):
        for name in ("perm_alpha", "perm_beta"):
            perm = tuple(int(v) for v in getattr(self, name))
            if sorted(perm) != list(range(len(perm))):
                raise ValueError(f"{name} = {perm} is not a permutation of range({len(perm)})")
            object.__setattr__(self, name, perm)

    @classmethod
    def identity(cls, lam: int, mu: int) -> "SymbolPermutationPair":
        return cls(tuple(range(lam)), tuple(range(mu)))

    @classmethod
    def from_transpositions(cls, lam: int, mu: int, alpha_swaps=(), beta_swaps=()) -> "SymbolPermutationPair":
        """Build from lists of 2-cycles, e.g. ``alpha_swaps=[(0, 1)]``."""
        pa, pb = list(range(lam)), list(range(mu))
        for perm, swaps in ((pa, alpha_swaps), (pb, beta_swaps)):
            for i, j in swaps:
                perm[i], perm[j] = perm[j], perm[i]
        return cls(tuple(pa), tuple(pb))


def _require_total(g: BiregularGraph, coloring: EdgeBicoloring) -> None:
    if len(coloring.pairs) != len(g.edges):
        raise ValueError(f"coloring has {len(coloring.pairs)} pairs for {len(g.edges)} edges")


def validate_biregular(g: BiregularGraph) -> ValidationReport:
    violations = []
    for side, stars, want, name in (("Y", g.y_stars, g.lam, g.y_name), ("X", g.x_stars, g.mu, g.x_name)):
        for v, star in enumerate(stars):
            if len(star) != want:
                violations.append(
                    Violation("degree", f"{side}:{name(v)}", f"degree {len(star)}, expected {want}")
                )
    return report_from(violations)


def is_increasing(theta: Iterable[Pair]) -> bool:
    """True iff ``theta`` is a chain in the componentwise order."""
    pairs = list(theta)
    for i, (a, b) in enumerate(pairs):
        for a2, b2 in pairs[i + 1:]:
            if (a < a2 and b > b2) or (a > a2 and b < b2):
                return False
    return True


def check_proper(g: BiregularGraph, coloring: EdgeBicoloring) -> ValidationReport:
    """Alpha injective on every Y-star and beta injective on every X-star."""
    _require_total(g, coloring)
    violations = []
    for side, stars, comp, name in (("Y", g.y_stars, 0, g.y_name), ("X", g.x_stars, 1, g.x_name)):
        for v, star in enumerate(stars):
            values = Counter(coloring.pairs[i][comp] for i in star)
            repeated = sorted(c for c, k in values.items() if k > 1)
            if repeated:
                label = "alpha" if comp == 0 else "beta"
                violations.append(
                    Violation("proper", f"{side}:{name(v)}", f"{label} repeated at star: {repeated}")
                )
    return report_from(violations)


def check_faithful(g: BiregularGraph, coloring: EdgeBicoloring, system: ColorPairSystem) -> ValidationReport:
    """Properness, membership in theta, and palette coverage at every vertex.

    For a biregular graph coverage follows from properness, but both are
    checked separately so a failure in either is reported on its own.
    """
    _require_total(g, coloring)
    if (g.lam, g.mu) != (system.lam, system.mu):
        raise ValueError("graph degrees and system palettes disagree")
    violations = list(check_proper(g, coloring).violations)
    theta = set(system.theta)
    for i, p in enumerate(coloring.pairs):
        if not (0 <= p[0] < system.lam and 0 <= p[1] < system.mu):
            violations.append(Violation("palette", f"edge:{i}", f"pair {p} outside the palettes"))
        elif p not in theta:
            violations.append(Violation("membership", f"edge:{i}", f"pair {p} not in theta"))
    for side, stars, comp, size, name in (
        ("Y", g.y_stars, 0, system.lam, g.y_name),
        ("X", g.x_stars, 1, system.mu, g.x_name),
    ):
        for v, star in enumerate(stars):
            present = {coloring.pairs[i][comp] for i in star if coloring.pairs[i] in theta}
            missing = sorted(set(range(size)) - present)
            if missing:
                label = "alpha" if comp == 0 else "beta"
                violations.append(
                    Violation("faithful", f"{side}:{name(v)}", f"{label} values missing: {missing}")
                )
    return report_from(violations)


def check_weight_compatible(coloring: EdgeBicoloring, system: ColorPairSystem) -> ValidationReport:
    counts = Counter(coloring.pairs)
    violations = []
    for p in system.theta:
        if counts.get(p, 0) != system.omega[p]:
            violations.append(
                Violation("weight", f"pair:{p}", f"used {counts.get(p, 0)} times, omega = {system.omega[p]}")
            )
    for p in sorted(set(counts) - set(system.theta)):
        violations.append(Violation("weight", f"pair:{p}", f"pair outside theta used {counts[p]} times"))
    return report_from(violations)


def apply_pair_permutation(coloring: EdgeBicoloring, perms: SymbolPermutationPair) -> EdgeBicoloring:
    la, lb = len(perms.perm_alpha), len(perms.perm_beta)
    out = []
    for a, b in coloring.pairs:
        if not (0 <= a < la and 0 <= b < lb):
            raise ValueError(f"pair {(a, b)} does not fit palettes of sizes {(la, lb)}")
        out.append((perms.perm_alpha[a], perms.perm_beta[b]))
    return EdgeBicoloring(tuple(out))


def is_symmetrically_reversible(
    g: BiregularGraph,
    coloring: EdgeBicoloring,
    system: ColorPairSystem,
    perms: SymbolPermutationPair,
) -> bool:
    """Whether the permuted coloring is again faithful and weight-compatible.

    Raises ``ValueError`` if ``coloring`` itself is not.
    """
    if (len(perms.perm_alpha), len(perms.perm_beta)) != (system.lam, system.mu):
        raise ValueError("permutation sizes differ from the system palettes")
    before = check_faithful(g, coloring, system).merged(check_weight_compatible(coloring, system))
    if not before.ok:
        raise ValueError(f"coloring is not a valid bicoloring: {before.violations[0].message}")
    image = apply_pair_permutation(coloring, perms)
    return check_faithful(g, image, system).ok and check_weight_compatible(image, system).ok


def degree_sequence(g: BiregularGraph) -> tuple[list[int], list[int]]:
    return [len(s) for s in g.y_stars], [len(s) for s in g.x_stars]


def multiset_by_vertex(g: BiregularGraph, coloring: EdgeBicoloring) -> tuple[dict, dict]:
    """Alpha multiset per Y-vertex and beta multiset per X-vertex."""
    ya, xb = defaultdict(Counter), defaultdict(Counter)
    for (y, x, _), (a, b) in zip(g.edges, coloring.pairs):
        ya[y][a] += 1
        xb[x][b] += 1
    return dict(ya), dict(xb)
