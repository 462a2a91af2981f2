"""The Great Circle Challenge as an edge bicoloring problem on G'.

Pairs are written ``"1a"`` ... ``"5c"``; their codes 0..6 follow the order of
:data:`THETA_GCC`.  The level of a piece is the w-color of its edge.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterable, Mapping, Sequence

from .core import (
    BiregularGraph,
    ColorPairSystem,
    EdgeBicoloring,
    ValidationReport,
    Violation,
    check_faithful,
    check_weight_compatible,
    report_from,
)
from .dataset import (
    GccDataset,
    GreatCircle,
    build_G,
    build_Gprime_theta,
    covering_map,
    gprime_aliases,
    load_corrected,
)

__all__ = [
    "THETA_GCC",
    "OMEGA",
    "RHO",
    "GCC_SYSTEM",
    "GPrime",
    "GccSolution",
    "LevelTable",
    "CircleTable",
    "default_gprime",
    "gprime_from",
    "verify_gcc_solution",
    "apply_reversal",
    "level_distribution",
    "is_distribution_reversible",
    "lift_solution",
    "verify_lifted",
    "circle_distribution",
    "import_paper_solution",
    "paper_solution_doc",
    "compare_printed_levels",
    "compare_printed_circles",
]

THETA_GCC = ("1a", "2a", "2b", "3b", "4b", "4c", "5c")
OMEGA = {"1a": 6, "2a": 4, "2b": 2, "3b": 6, "4b": 2, "4c": 4, "5c": 6}
RHO = {"1a": "5c", "2a": "4c", "2b": "4b", "3b": "3b", "4b": "2b", "4c": "2a", "5c": "1a"}
ANSATZ_PAIR = {1: "1a", 3: "3b", 5: "5c"}
CODE = {p: k for k, p in enumerate(THETA_GCC)}


def pair_to_core(pair: str) -> tuple[int, int]:
    """``"4c"`` -> ``(3, 2)`` on the 0-based palettes."""
    return int(pair[0]) - 1, "abc".index(pair[1])


def core_to_pair(p: tuple[int, int]) -> str:
    return f"{p[0] + 1}{'abc'[p[1]]}"


GCC_SYSTEM = ColorPairSystem(5, 3, tuple(pair_to_core(p) for p in THETA_GCC), {pair_to_core(p): w for p, w in OMEGA.items()})


@dataclass(frozen=True)
class GPrime:
    """G' with alias-ordered vertices and edges sorted by (y-alias, w).

    ``graph`` uses the aliases as vertex names, so edge ``5*y + w - 1`` is
    the w-colored edge at ``y_names[y]``.  ``keys`` maps aliases back to
    canonical class strings.
    """

    graph: BiregularGraph
    keys: Mapping = field(compare=False)

    @property
    def edges(self) -> tuple:
        return self.graph.edges

    def edge_label(self, i: int) -> tuple[str, str, int]:
        y, x, w = self.graph.edges[i]
        return self.graph.y_names[y], self.graph.x_names[x], w

    def find_edge(self, y_alias: str, x_alias: str) -> int | None:
        return self._edge_index.get((y_alias, x_alias))

    def edges_with_color(self, w: int) -> list[int]:
        return [i for i, e in enumerate(self.graph.edges) if e[2] == w]

    @property
    def _edge_index(self) -> dict:
        return {self.edge_label(i)[:2]: i for i in range(len(self.graph.edges))}

    def edge_by_keys(self) -> dict:
        """(y_key, x_key, w) -> edge index."""
        out = {}
        for i, (y, x, w) in enumerate(self.graph.edges):
            out[(self.keys[self.graph.y_names[y]], self.keys[self.graph.x_names[x]], w)] = i
        return out


def _alias_order(alias: str) -> tuple:
    # y_0..y_5, then x_1..x_5, then x'_1..x'_5
    return (alias[0], "'" in alias, int(alias[-1]))


def gprime_from(canonical: BiregularGraph, aliases: Mapping[str, str]) -> GPrime:
    """Re-order a canonically keyed G' by the printed aliases."""
    ys = sorted((aliases[k] for k in canonical.y_names), key=_alias_order)
    xs = sorted((aliases[k] for k in canonical.x_names), key=_alias_order)
    yi = {a: i for i, a in enumerate(ys)}
    xi = {a: i for i, a in enumerate(xs)}
    edges = sorted(
        ((yi[aliases[canonical.y_names[y]]], xi[aliases[canonical.x_names[x]]], w) for y, x, w in canonical.edges),
        key=lambda e: (e[0], e[2], e[1]),
    )
    pairs = {(y, x) for y, x, _ in edges}
    if len(pairs) != len(edges):
        raise ValueError("G' has parallel edges")
    graph = BiregularGraph(len(ys), len(xs), tuple(edges), canonical.lam, canonical.mu, tuple(ys), tuple(xs))
    keys = {a: k for k, a in aliases.items() if a in yi or a in xi}
    return GPrime(graph, keys)


@lru_cache(maxsize=None)
def default_gprime() -> GPrime:
    return gprime_from(build_Gprime_theta(), gprime_aliases(load_corrected()))


@dataclass(frozen=True)
class GccSolution:
    """``pairs[i]`` is the pair on G' edge ``i``; ``None`` marks an open edge."""

    pairs: tuple
    gprime: GPrime = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        for p in self.pairs:
            if p is not None and p not in CODE:
                raise ValueError(f"{p!r} is not a GCC pair")

    @property
    def complete(self) -> bool:
        return None not in self.pairs

    @property
    def open_edges(self) -> list[int]:
        return [i for i, p in enumerate(self.pairs) if p is None]

    @property
    def codes(self) -> tuple:
        return tuple(CODE[p] for p in self.pairs)

    @classmethod
    def from_codes(cls, codes: Iterable[int], gprime: GPrime | None = None) -> "GccSolution":
        return cls(tuple(THETA_GCC[k] for k in codes), gprime)

    def satisfies_ansatz(self) -> bool:
        g = self._graph()
        return all(p == ANSATZ_PAIR[w] for p, (_, _, w) in zip(self.pairs, g.edges) if w in ANSATZ_PAIR)

    def _graph(self) -> GPrime:
        return self.gprime if self.gprime is not None else default_gprime()

    def to_dict(self) -> dict:
        gp = self._graph()
        entries = []
        for i, p in enumerate(self.pairs):
            if p is None:
                continue
            y, x, w = gp.edge_label(i)
            entries.append({"y": y, "x": x, "w": w, "pair": p})
        return {"ansatz135": self.complete and self.satisfies_ansatz(), "entries": entries}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


def verify_gcc_solution(gprime: GPrime, sol: GccSolution) -> ValidationReport:
    """Faithfulness, membership and weights, reported with pair names."""
    if len(sol.pairs) != len(gprime.edges):
        return report_from([Violation("size", "solution", f"{len(sol.pairs)} entries for {len(gprime.edges)} edges")])
    if not sol.complete:
        open_ = [gprime.edge_label(i) for i in sol.open_edges]
        return report_from([Violation("incomplete", f"{y}-{x}", f"w={w} has no pair") for y, x, w in open_])
    coloring = EdgeBicoloring(tuple(pair_to_core(p) for p in sol.pairs))
    report = check_faithful(gprime.graph, coloring, GCC_SYSTEM).merged(check_weight_compatible(coloring, GCC_SYSTEM))
    return ValidationReport(tuple(_readable(v) for v in report.violations), report.notes)


def _readable(v: Violation) -> Violation:
    if v.location.startswith("pair:("):
        a, b = (int(t) for t in v.location[6:-1].split(","))
        return v._replace(location=f"pair:{core_to_pair((a, b))}")
    return v


def apply_reversal(sol: GccSolution) -> GccSolution:
    return GccSolution(tuple(None if p is None else RHO[p] for p in sol.pairs), sol.gprime)


@dataclass(frozen=True)
class LevelTable:
    """``counts[pair][l - 1]`` = pieces of ``pair`` at level l (G edges)."""

    counts: Mapping

    def row(self, pair: str) -> tuple:
        return tuple(self.counts[pair])

    def column_sums(self) -> tuple:
        return tuple(sum(self.counts[p][l] for p in THETA_GCC) for l in range(5))

    def row_sums(self) -> dict:
        return {p: sum(self.counts[p]) for p in THETA_GCC}

    def mirrored(self) -> "LevelTable":
        return LevelTable({p: tuple(reversed(self.counts[RHO[p]])) for p in THETA_GCC})

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["pair", "l1", "l2", "l3", "l4", "l5", "total"])
        for p in THETA_GCC:
            w.writerow([p, *self.counts[p], sum(self.counts[p])])
        w.writerow(["sum", *self.column_sums(), sum(self.column_sums())])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {p: list(self.counts[p]) for p in THETA_GCC}

    @classmethod
    def from_dict(cls, doc: Mapping) -> "LevelTable":
        return cls({p: tuple(int(v) for v in doc.get(p, (0,) * 5)) for p in THETA_GCC})


def level_distribution(sol: GccSolution, gprime: GPrime | None = None) -> LevelTable:
    """Pieces per pair and level, counting both lifts of every assigned edge."""
    gp = gprime or sol._graph()
    counts = {p: [0] * 5 for p in THETA_GCC}
    for p, (_, _, w) in zip(sol.pairs, gp.edges):
        if p is not None:
            counts[p][w - 1] += 2
    return LevelTable({p: tuple(v) for p, v in counts.items()})


def is_distribution_reversible(sol: GccSolution, gprime: GPrime | None = None) -> bool:
    """Whether the level table is fixed by (pair, l) -> (rho(pair), 6 - l)."""
    gp = gprime or sol._graph()
    report = verify_gcc_solution(gp, sol)
    if not report.ok:
        raise ValueError(f"not a valid GCC solution: {report.violations[0].message}")
    table = level_distribution(sol, gp)
    return table == table.mirrored()


def lift_solution(sol: GccSolution, ds: GccDataset | None = None, gprime: GPrime | None = None) -> tuple:
    """Pairs on the 60 edges of G (S3P row order), copied from their images."""
    ds = ds or load_corrected()
    gp = gprime or sol._graph()
    g = build_G(ds)
    image = covering_map(ds).image
    by_keys = gp.edge_by_keys()
    return tuple(sol.pairs[by_keys[(image[g.y_names[y]], image[g.x_names[x]], t)]] for y, x, t in g.edges)


def verify_lifted(lifted: Sequence[str], ds: GccDataset | None = None) -> ValidationReport:
    """Faithfulness on G with every weight doubled."""
    g = build_G(ds or load_corrected())
    doubled = ColorPairSystem(5, 3, GCC_SYSTEM.theta, {p: 2 * w for p, w in GCC_SYSTEM.omega.items()})
    coloring = EdgeBicoloring(tuple(pair_to_core(p) for p in lifted))
    report = check_faithful(g, coloring, doubled).merged(check_weight_compatible(coloring, doubled))
    return ValidationReport(tuple(_readable(v) for v in report.violations), report.notes)


@dataclass(frozen=True)
class CircleTable:
    """Per circle, the sorted pairs of its two antipodal piece classes."""

    entries: tuple  # ((circle, (pair, pair)), ...)

    def by_symbol(self) -> dict:
        out = {}
        for circle, pairs in self.entries:
            out.setdefault(circle.symbol, []).append("".join(pairs))
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["w", "circle1", "circle2", "circle3"])
        for symbol, cells in sorted(self.by_symbol().items()):
            w.writerow([symbol, *cells])
        return buf.getvalue()


def circle_distribution(lifted: Sequence[str], circles: Sequence[GreatCircle], ds: GccDataset | None = None) -> CircleTable:
    """Read each circle's two piece types off a lifted assignment.

    Raises ``ValueError`` if the two pieces of an antipodal class differ.
    """
    ds = ds or load_corrected()
    image = covering_map(ds).image
    entries = []
    for circle in circles:
        per_class = {}
        for row in circle.rows:
            r = ds.s3p[row]
            cls = (image[r.deg5], image[r.deg3])
            if per_class.setdefault(cls, lifted[row]) != lifted[row]:
                raise ValueError(f"circle {circle.name}: antipodal pieces carry different pairs")
        entries.append((circle, tuple(sorted(per_class.values(), key=CODE.get))))
    return CircleTable(tuple(entries))


# ------------------------------------------------------------ printed solution imports


@lru_cache(maxsize=None)
def _paper_solutions() -> dict:
    text = resources.files("gccbicolor").joinpath("data").joinpath("paper_solutions.json").read_text(encoding="utf-8")
    return json.loads(text)["solutions"]


def paper_solution_doc(name: str) -> dict:
    try:
        return _paper_solutions()[name]
    except KeyError:
        raise KeyError(f"no printed solution {name!r}; choose from {sorted(_paper_solutions())}") from None


def _ansatz_colors(doc: Mapping) -> tuple[int, ...]:
    if "ansatz" in doc:
        colors = tuple(int(w) for w in doc["ansatz"])
    else:
        colors = (1, 3, 5) if doc.get("ansatz135") else ()
    bad = [w for w in colors if w not in ANSATZ_PAIR]
    if bad:
        raise ValueError(f"ansatz colors must be among 1, 3, 5; got {bad}")
    return colors


def import_paper_solution(doc: Mapping, gprime: GPrime | None = None) -> tuple[GccSolution, ValidationReport]:
    """Place printed entries on G' and report every entry that does not fit.

    Discrepancy kinds: ``bad-pair``, ``unknown-vertex``, ``non-edge``,
    ``w-color``, ``conflict`` and ``duplicate``.  Reported entries are
    left unassigned.  Malformed documents raise ``ValueError``.
    """
    gp = gprime or default_gprime()
    if not isinstance(doc, Mapping) or not isinstance(doc.get("entries", []), list):
        raise ValueError("solution document must be an object with an 'entries' list")
    pairs: list = [None] * len(gp.edges)
    source: list = [None] * len(gp.edges)
    for w in _ansatz_colors(doc):
        for i in gp.edges_with_color(w):
            pairs[i] = ANSATZ_PAIR[w]
            source[i] = f"ansatz {w}"
    ys, xs = set(gp.graph.y_names), set(gp.graph.x_names)
    out = []
    for n, entry in enumerate(doc.get("entries", [])):
        try:
            x, w, y, pair = entry["x"], int(entry["w"]), entry["y"], entry["pair"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"entry {n} is malformed: {exc}") from exc
        loc = f"{pair}: {x} {w} {y}"
        if pair not in CODE:
            out.append(Violation("bad-pair", loc, f"{pair!r} is not in the pair alphabet"))
            continue
        unknown = [v for v, known in ((x, xs), (y, ys)) if v not in known]
        if unknown:
            out.append(Violation("unknown-vertex", loc, f"no vertex named {', '.join(unknown)}"))
            continue
        i = gp.find_edge(y, x)
        if i is None:
            out.append(Violation("non-edge", loc, f"{y} and {x} are not adjacent"))
            continue
        actual = gp.edges[i][2]
        if actual != w:
            out.append(Violation("w-color", loc, f"edge {y}-{x} has w-color {actual}, not {w}"))
            continue
        if pairs[i] is not None:
            if pairs[i] == pair and source[i].startswith("ansatz"):
                continue  # restating an ansatz edge is consistent
            kind = "duplicate" if pairs[i] == pair else "conflict"
            out.append(Violation(kind, loc, f"edge already carries {pairs[i]} from {source[i]}"))
            continue
        pairs[i] = pair
        source[i] = f"entry {n}"
    return GccSolution(tuple(pairs), gp), report_from(out)


def claimed_level_distribution(doc: Mapping) -> LevelTable:
    """The level table the printed entries claim, using their stated w-colors."""
    counts = {p: [0] * 5 for p in THETA_GCC}
    for w in _ansatz_colors(doc):
        counts[ANSATZ_PAIR[w]][w - 1] += 12
    for entry in doc.get("entries", []):
        if entry["pair"] in counts and 1 <= int(entry["w"]) <= 5:
            counts[entry["pair"]][int(entry["w"]) - 1] += 2
    return LevelTable({p: tuple(v) for p, v in counts.items()})


def compare_printed_levels(name: str, gprime: GPrime | None = None) -> ValidationReport:
    """Printed level block against the entries of the same solution.

    Violations: the claimed table (stated w-colors) differs from the printed
    block, or the entries that fit G' place more pieces in a cell than the
    block prints.  When the printed block breaks its own row or column sums
    every finding is demoted to a note.
    """
    doc = paper_solution_doc(name)
    printed = LevelTable.from_dict(doc["printed_levels"])
    claimed = claimed_level_distribution(doc)
    placed = level_distribution(import_paper_solution(doc, gprime)[0], gprime or default_gprime())
    found = []
    for p in THETA_GCC:
        for l in range(5):
            if claimed.counts[p][l] != printed.counts[p][l]:
                found.append(Violation("level-claimed", f"{p} l{l + 1}", f"entries claim {claimed.counts[p][l]}, table prints {printed.counts[p][l]}"))
            if placed.counts[p][l] > printed.counts[p][l]:
                found.append(Violation("level-placed", f"{p} l{l + 1}", f"fitting entries place {placed.counts[p][l]}, table prints {printed.counts[p][l]}"))
    garbled = []
    if printed.column_sums() != (12,) * 5:
        garbled.append(Violation("level-table", name, f"printed columns sum to {printed.column_sums()}"))
    for p, total in printed.row_sums().items():
        if total != 2 * OMEGA[p]:
            garbled.append(Violation("level-table", f"{name} {p}", f"printed row sums to {total}, expected {2 * OMEGA[p]}"))
    if garbled:
        return report_from((), garbled + found)
    return report_from(found)


def compare_printed_circles(name: str, table: CircleTable) -> ValidationReport:
    """Report-only comparison of circle cells, per w as multisets."""
    printed = paper_solution_doc(name)["printed_circles"]
    notes = []
    for symbol, cells in sorted(table.by_symbol().items()):
        want = Counter(printed.get(str(symbol), []))
        if Counter(cells) != want:
            notes.append(Violation("circle-table", f"w={symbol}", f"computed {sorted(cells)}, printed {sorted(want.elements())}"))
    return report_from((), notes)
