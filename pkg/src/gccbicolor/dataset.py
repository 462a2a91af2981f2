"""The printed GCC tables, their validation, errata overlays, and the graphs
G and G' they define.

The verbatim transcription ships as ``data/paper_tables.json`` and is never
edited; corrections live in ``data/errata.json`` and are applied on load.
Inner vertices are named as printed (``"y_0"``, ``"y'_3"``, ``"x'_1"``,
``"z_2"``) and faces as ``"w_i"`` strings.

G' vertices are keyed by canonical class strings: the least dihedral word of
a 5-cycle (``"13524"``) or the sorted digits of a 3-subset (``"125"``).
"""

from __future__ import annotations

import json
import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field, replace
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

from .core import BiregularGraph, ValidationReport, Violation, report_from
from .petersen import (
    Parity,
    build_petersen,
    canonical_cycle,
    cycle_parity,
    induced_color_cycle,
    is_cycle_of,
    k5_cycle_classes,
    parse_o3_vertex,
    shared_edge,
    theta_correspondence,
)

__all__ = [
    "DatasetError",
    "FaceId",
    "S3PRecord",
    "VertexFaceRecord",
    "Erratum",
    "GccDataset",
    "CoveringMap",
    "GreatCircle",
    "load_dataset",
    "load_corrected",
    "shipped_errata",
    "read_errata",
    "validate_dataset",
    "audit_errata",
    "build_G",
    "covering_map",
    "printed_pairing_discrepancies",
    "build_Gprime_quotient",
    "build_Gprime_theta",
    "cross_validate_gprime",
    "great_circles",
    "pentagon_cycles_check",
    "theta_display_check",
    "op_ep_check",
    "observation2_check",
    "gprime_aliases",
]

_NAME_RE = re.compile(r"^([xyz])('?)_(\d)$")
_FACE_RE = re.compile(r"^([1-5])_([1-6])$")

# index-pair patterns of the three great circles through each symbol
CIRCLE_PATTERNS = (
    frozenset(map(frozenset, [(1, 2), (2, 4), (4, 5), (5, 1)])),
    frozenset(map(frozenset, [(1, 3), (3, 4), (4, 6), (6, 1)])),
    frozenset(map(frozenset, [(2, 3), (3, 5), (5, 6), (6, 2)])),
)


class DatasetError(ValueError):
    """Malformed table or overlay, or a build requested on invalid data."""


@dataclass(frozen=True, order=True)
class FaceId:
    symbol: int
    index: int

    @classmethod
    def parse(cls, text: str) -> "FaceId":
        m = _FACE_RE.match(text)
        if not m:
            raise DatasetError(f"bad face name {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.symbol}_{self.index}"


def name_kind(name: str) -> tuple[str, int]:
    """``"x'_3"`` -> ``("x'", 3)``; raises on names outside the 32 inner vertices."""
    m = _NAME_RE.match(name)
    if not m:
        raise DatasetError(f"bad vertex name {name!r}")
    kind, idx = m.group(1) + m.group(2), int(m.group(3))
    if (kind[0] == "y" and not 0 <= idx <= 5) or (kind[0] != "y" and not 1 <= idx <= 5):
        raise DatasetError(f"vertex index out of range in {name!r}")
    return kind, idx


def is_y_kind(name: str) -> bool:
    return name_kind(name)[0][0] == "y"


def all_vertex_names() -> tuple[str, ...]:
    ys = [f"y_{i}" for i in range(6)] + [f"y'_{i}" for i in range(6)]
    rest = [f"{k}_{i}" for k in ("x", "x'", "z", "z'") for i in range(1, 6)]
    return tuple(ys + rest)


@dataclass(frozen=True)
class S3PRecord:
    end_a: str
    deg5: str
    deg3: str
    end_b: str

    @property
    def symbol(self) -> int:
        return FaceId.parse(self.end_a).symbol

    @property
    def ends(self) -> tuple[str, str]:
        return self.end_a, self.end_b

    def as_list(self) -> list[str]:
        return [self.end_a, self.deg5, self.deg3, self.end_b]


@dataclass(frozen=True)
class VertexFaceRecord:
    vertex: str
    faces: tuple

    def symbol_word(self) -> tuple[int, ...]:
        return tuple(FaceId.parse(f).symbol for f in self.faces)


@dataclass(frozen=True)
class Erratum:
    table: str
    key: object
    original: tuple
    replacement: tuple
    justification: str

    @classmethod
    def from_dict(cls, doc: Mapping) -> "Erratum":
        try:
            return cls(
                table=doc["table"],
                key=doc["key"],
                original=tuple(doc["original"]),
                replacement=tuple(doc["replacement"]),
                justification=doc.get("justification", ""),
            )
        except (KeyError, TypeError) as exc:
            raise DatasetError(f"malformed erratum: {exc}") from exc

    def to_dict(self) -> dict:
        return {
            "table": self.table,
            "key": self.key,
            "original": list(self.original),
            "replacement": list(self.replacement),
            "justification": self.justification,
        }

    @property
    def location(self) -> str:
        return f"{self.table}[{self.key}]"


@dataclass(frozen=True)
class GccDataset:
    s3p: tuple
    vertex_faces: tuple
    display1: tuple
    display2: tuple
    theta5_rows: tuple
    theta3_rows: tuple
    pentagon_cycles: tuple
    printed_phi_pairs: tuple
    notes: tuple = ()
    errata: tuple = field(default=(), compare=False)

    def faces_of(self, vertex: str) -> tuple:
        for rec in self.vertex_faces:
            if rec.vertex == vertex:
                return rec.faces
        raise KeyError(vertex)

    @property
    def face_table(self) -> dict:
        return {rec.vertex: rec.faces for rec in self.vertex_faces}


def _package_json(name: str) -> dict:
    return json.loads(resources.files("gccbicolor").joinpath("data").joinpath(name).read_text(encoding="utf-8"))


@lru_cache(maxsize=None)
def _raw_dataset() -> GccDataset:
    doc = _package_json("paper_tables.json")
    return GccDataset(
        s3p=tuple(S3PRecord(*row) for row in doc["s3p"]),
        vertex_faces=tuple(VertexFaceRecord(r["vertex"], tuple(r["faces"])) for r in doc["vertex_faces"]),
        display1=tuple(tuple(r) for r in doc["display1"]),
        display2=tuple(tuple(r) for r in doc["display2"]),
        theta5_rows=tuple(tuple(r) for r in doc["theta5_rows"]),
        theta3_rows=tuple(tuple(r) for r in doc["theta3_rows"]),
        pentagon_cycles=tuple((c["name"], tuple(c["entries"])) for c in doc["pentagon_cycles"]),
        printed_phi_pairs=tuple(tuple(p) for p in doc["printed_phi_pairs"]),
        notes=tuple(doc.get("notes", ())),
    )


def read_errata(source) -> tuple[Erratum, ...]:
    """Errata from a path, a JSON document, or an iterable of entries."""
    if isinstance(source, (str, Path)):
        try:
            source = json.loads(Path(source).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise DatasetError(f"cannot read errata file {source}: {exc}") from exc
    if isinstance(source, Mapping):
        source = source.get("errata")
        if source is None:
            raise DatasetError("errata document lacks an 'errata' list")
    return tuple(e if isinstance(e, Erratum) else Erratum.from_dict(e) for e in source)


def shipped_errata() -> tuple[Erratum, ...]:
    return read_errata(_package_json("errata.json"))


def _apply(ds: GccDataset, e: Erratum) -> GccDataset:
    if e.table == "s3p":
        rows = list(ds.s3p)
        if not isinstance(e.key, int) or not 0 <= e.key < len(rows):
            raise DatasetError(f"erratum {e.location}: no such row")
        if tuple(rows[e.key].as_list()) != e.original:
            raise DatasetError(f"erratum {e.location}: printed row is {rows[e.key].as_list()}, not {list(e.original)}")
        if len(e.replacement) != 4:
            raise DatasetError(f"erratum {e.location}: replacement must have 4 entries")
        rows[e.key] = S3PRecord(*e.replacement)
        return replace(ds, s3p=tuple(rows))
    if e.table == "vertex_faces":
        recs = list(ds.vertex_faces)
        for i, rec in enumerate(recs):
            if rec.vertex == e.key:
                if rec.faces != e.original:
                    raise DatasetError(f"erratum {e.location}: printed faces are {list(rec.faces)}")
                recs[i] = VertexFaceRecord(rec.vertex, e.replacement)
                return replace(ds, vertex_faces=tuple(recs))
        raise DatasetError(f"erratum {e.location}: no such vertex")
    raise DatasetError(f"erratum targets unknown table {e.table!r}")


def load_dataset(errata_overlay=None) -> GccDataset:
    """The verbatim tables, with ``errata_overlay`` applied in order if given."""
    ds = _raw_dataset()
    if errata_overlay is None:
        return ds
    errata = read_errata(errata_overlay)
    for e in errata:
        ds = _apply(ds, e)
    return replace(ds, errata=ds.errata + errata)


def load_corrected() -> GccDataset:
    return load_dataset(shipped_errata())


# ---------------------------------------------------------------- validation


def _class_of_faces(faces: Iterable[str]):
    word = tuple(FaceId.parse(f).symbol for f in faces)
    if len(word) == 3:
        return frozenset(word)
    return canonical_cycle(word)


def class_key(cls) -> str:
    if isinstance(cls, frozenset):
        return "".join(str(s) for s in sorted(cls))
    return cls.key


def validate_dataset(ds: GccDataset) -> ValidationReport:
    """Row-level and table-level consistency of the GCC tables.

    Violation kinds: ``schema``, ``count``, ``end-face``, ``face-sharing``,
    ``face-word``, ``display`` and ``alias``.
    """
    out: list[Violation] = []
    names = set(all_vertex_names())
    table = {}
    for rec in ds.vertex_faces:
        if rec.vertex not in names:
            out.append(Violation("schema", f"vertex_faces[{rec.vertex}]", "unknown vertex name"))
            continue
        if rec.vertex in table:
            out.append(Violation("schema", f"vertex_faces[{rec.vertex}]", "vertex listed twice"))
        table[rec.vertex] = rec.faces
    for v in sorted(names - set(table)):
        out.append(Violation("schema", f"vertex_faces[{v}]", "vertex missing from the face tables"))

    # (d) face words
    for v, faces in table.items():
        want = 5 if is_y_kind(v) else 3
        try:
            word = tuple(FaceId.parse(f).symbol for f in faces)
        except DatasetError as exc:
            out.append(Violation("face-word", f"vertex_faces[{v}]", str(exc)))
            continue
        if len(faces) != want or len(set(faces)) != want or len(set(word)) != want:
            out.append(Violation("face-word", f"vertex_faces[{v}]", f"symbols {word} do not form a {want}-cycle word"))

    # row schema, (b) end faces, (c) face sharing
    per_vertex = defaultdict(list)
    for i, row in enumerate(ds.s3p):
        loc = f"s3p[{i}]"
        try:
            a, b = FaceId.parse(row.end_a), FaceId.parse(row.end_b)
            k5, k3 = name_kind(row.deg5)[0], name_kind(row.deg3)[0]
        except DatasetError as exc:
            out.append(Violation("schema", loc, str(exc)))
            continue
        if a.symbol != b.symbol:
            out.append(Violation("schema", loc, f"end faces {row.end_a}, {row.end_b} differ in symbol"))
            continue
        if k5[0] != "y" or k3[0] == "y":
            out.append(Violation("schema", loc, "inner vertices must be one y-kind and one x/z-kind"))
            continue
        per_vertex[row.deg5].append((i, a.symbol))
        per_vertex[row.deg3].append((i, a.symbol))
        f5, f3 = set(table.get(row.deg5, ())), set(table.get(row.deg3, ()))
        if not ((row.end_a in f5 and row.end_b in f3) or (row.end_b in f5 and row.end_a in f3)):
            out.append(
                Violation("end-face", loc, f"{row.deg5} and {row.deg3} do not carry the ends {row.end_a}, {row.end_b}")
            )
        shared = len(f5 & f3)
        if shared != 2:
            out.append(Violation("face-sharing", loc, f"{row.deg5} and {row.deg3} share {shared} faces, expected 2"))

    # (a) row counts per vertex and per symbol
    for v in sorted(names):
        hits = per_vertex.get(v, [])
        symbols = Counter(s for _, s in hits)
        if is_y_kind(v):
            want = Counter(range(1, 6))
        elif v in table and len(table[v]) == 3:
            want = Counter(FaceId.parse(f).symbol for f in table[v])
        else:
            want = None
        if len(hits) != (5 if is_y_kind(v) else 3) or (want is not None and symbols != want):
            detail = ", ".join(f"{s}x{k}" if k > 1 else str(s) for s, k in sorted(symbols.items()))
            out.append(
                Violation("count", f"vertex {v}", f"in {len(hits)} rows with symbols [{detail}], expected one per symbol of {sorted(want or [])}")
            )

    # (e) displays
    try:
        d1 = [canonical_cycle(w) for _, w in ds.display1]
        d2 = [frozenset(int(c) for c in w) for _, w in ds.display2]
    except ValueError as exc:
        out.append(Violation("display", "display", str(exc)))
    else:
        if len(ds.display1) != 12 or len(set(d1)) != 12 or any(c.length != 5 for c in d1):
            out.append(Violation("display", "display1", "does not list 12 distinct 5-cycle classes"))
        if len(ds.display2) != 10 or len(set(d2)) != 10 or any(len(s) != 3 for s in d2):
            out.append(Violation("display", "display2", "does not list 10 distinct 3-subsets"))
        # (f) aliases: y_i, y'_i carry display y_i; x_i, x'_i carry their display sets
        labels = dict(zip((lbl for lbl, _ in ds.display1), d1)) | dict(zip((lbl for lbl, _ in ds.display2), d2))
        for v, faces in table.items():
            kind, idx = name_kind(v)
            label = f"y_{idx}" if kind[0] == "y" else (f"{kind}_{idx}" if kind[0] == "x" else None)
            if label is None or label not in labels:
                continue
            try:
                cls = _class_of_faces(faces)
            except (DatasetError, ValueError):
                continue
            if cls != labels[label]:
                out.append(Violation("alias", f"vertex_faces[{v}]", f"face word class {class_key(cls)} differs from display {label}"))
    return report_from(out)


def audit_errata(errata: Iterable[Erratum] | None = None) -> ValidationReport:
    """Check that each erratum, applied in order, cures a violation and adds none,
    and that none can be dropped without leaving the tables invalid."""
    errata = tuple(shipped_errata() if errata is None else errata)
    out = []
    ds = load_dataset()
    before = _violation_keys(validate_dataset(ds))
    for e in errata:
        ds = _apply(ds, e)
        after = _violation_keys(validate_dataset(ds))
        if not before - after:
            out.append(Violation("erratum-inert", e.location, "cures no violation"))
        for k in sorted(after - before):
            out.append(Violation("erratum-harmful", e.location, f"introduces {k[0]} at {k[1]}"))
        before = after
    if before:
        out.append(Violation("erratum-incomplete", "errata", f"{len(before)} violations remain"))
    for i, e in enumerate(errata):
        rest = errata[:i] + errata[i + 1:]
        if validate_dataset(load_dataset(rest)).ok:
            out.append(Violation("erratum-redundant", e.location, "the tables are valid without it"))
    return report_from(out)


def _violation_keys(report: ValidationReport) -> set:
    return {(v.kind, v.location) for v in report.violations}


# -------------------------------------------------------------------- graphs


def _require_valid(ds: GccDataset, strict: bool) -> None:
    if strict:
        report = validate_dataset(ds)
        if not report.ok:
            first = report.violations[0]
            raise DatasetError(f"dataset invalid ({len(report.violations)} violations, first: {first.location}: {first.message})")


def build_G(ds: GccDataset, strict: bool = True) -> BiregularGraph:
    """The 32-vertex graph of S3P middle edges; tags are w-colors.

    Y lists ``y_0..y_5, y'_0..y'_5``; X lists ``x, x', z, z'`` by index.
    Edge ``i`` comes from S3P row ``i``.
    """
    _require_valid(ds, strict)
    names = all_vertex_names()
    y_names, x_names = names[:12], names[12:]
    yi = {n: i for i, n in enumerate(y_names)}
    xi = {n: i for i, n in enumerate(x_names)}
    try:
        edges = tuple((yi[r.deg5], xi[r.deg3], r.symbol) for r in ds.s3p)
    except KeyError as exc:
        raise DatasetError(f"S3P row names unknown vertex {exc}") from exc
    return BiregularGraph(12, 20, edges, 5, 3, y_names, x_names)


@dataclass(frozen=True)
class CoveringMap:
    """Fibres of phi: G' vertex key -> the two G vertices above it."""

    fibres: tuple  # ((key, (v, w)), ...) sorted by key

    @property
    def image(self) -> dict:
        return {v: key for key, pair in self.fibres for v in pair}

    @property
    def pairs(self) -> tuple:
        return tuple(pair for _, pair in self.fibres)

    def fibre(self, key: str) -> tuple:
        return dict(self.fibres)[key]


def covering_map(ds: GccDataset, strict: bool = True) -> CoveringMap:
    """Pair G vertices whose face words agree as unoriented classes."""
    _require_valid(ds, strict)
    groups = defaultdict(list)
    for rec in ds.vertex_faces:
        try:
            groups[class_key(_class_of_faces(rec.faces))].append(rec.vertex)
        except ValueError as exc:
            raise DatasetError(f"face word of {rec.vertex}: {exc}") from exc
    bad = {k: v for k, v in groups.items() if len(v) != 2}
    if bad:
        raise DatasetError(f"classes without exactly two vertices: {bad}")
    order = {n: i for i, n in enumerate(all_vertex_names())}
    return CoveringMap(tuple(sorted((k, tuple(sorted(v, key=order.get))) for k, v in groups.items())))


def printed_pairing_discrepancies(ds: GccDataset, cmap: CoveringMap) -> ValidationReport:
    """Notes for every printed phi pair that is not a fibre of the derived map."""
    fibres = {frozenset(p) for p in cmap.pairs}
    notes = []
    for pair in ds.printed_phi_pairs:
        if frozenset(pair) not in fibres:
            derived = [p for p in cmap.pairs if pair[0] in p][0]
            notes.append(
                Violation("phi-pairing", "{" + ", ".join(pair) + "}", "printed pair; face tables give {" + ", ".join(derived) + "}")
            )
    return report_from((), notes)


def _gprime_from_edges(triples: Iterable[tuple[str, str, int]]) -> BiregularGraph:
    triples = sorted(set(triples))
    y_keys = sorted({t[0] for t in triples})
    x_keys = sorted({t[1] for t in triples})
    yi = {k: i for i, k in enumerate(y_keys)}
    xi = {k: i for i, k in enumerate(x_keys)}
    edges = sorted(((yi[y], xi[x], w) for y, x, w in triples), key=lambda e: (e[0], e[2], e[1]))
    return BiregularGraph(len(y_keys), len(x_keys), tuple(edges), 5, 3, tuple(y_keys), tuple(x_keys))


def quotient_edge_multiset(ds: GccDataset, strict: bool = True) -> Counter:
    g = build_G(ds, strict)
    image = covering_map(ds, strict).image
    return Counter((image[g.y_names[y]], image[g.x_names[x]], t) for y, x, t in g.edges)


def build_Gprime_quotient(ds: GccDataset, strict: bool = True) -> BiregularGraph:
    """G' as the quotient of G by phi.

    In strict mode every G' edge must have exactly two preimages with equal
    tags; otherwise the distinct projected edges are returned as they are.
    """
    projected = quotient_edge_multiset(ds, strict)
    if strict:
        odd = {e: k for e, k in projected.items() if k != 2}
        if odd:
            raise DatasetError(f"projected edges without two preimages: {odd}")
    return _gprime_from_edges(projected)


@lru_cache(maxsize=None)
def build_Gprime_theta() -> BiregularGraph:
    """G' read off the Petersen graph: y ~ x iff x lies on theta5(y), tagged
    by the middle symbol of x along that cycle."""
    g = build_petersen()
    theta = theta_correspondence()
    triples = []
    for cls in k5_cycle_classes(5):
        if cycle_parity(cls) is not Parity.ODD:
            continue
        cyc = theta.five_cycle(cls).canonical
        for i, v in enumerate(cyc):
            around = {g.color(cyc[i - 1], v), g.color(v, cyc[(i + 1) % 5])}
            middle = set(v) - around
            if len(middle) != 1:
                raise AssertionError(f"no middle symbol for {v} on {cls}")
            triples.append((cls.key, "".join(map(str, v)), middle.pop()))
    return _gprime_from_edges(triples)


def _edge_names(g: BiregularGraph) -> set:
    return {(g.y_names[y], g.x_names[x], t) for y, x, t in g.edges}


def cross_validate_gprime(ds: GccDataset, strict: bool = False) -> ValidationReport:
    """Compare the quotient route with the Petersen route, edge by edge."""
    try:
        quotient = build_Gprime_quotient(ds, strict)
    except DatasetError as exc:
        return report_from([Violation("quotient", "G'", str(exc))])
    projected = quotient_edge_multiset(ds, strict=False)
    theta_edges = _edge_names(build_Gprime_theta())
    out = []
    for e in sorted(_edge_names(quotient) - theta_edges):
        rows = _rows_projecting_to(ds, e)
        out.append(Violation("extra-edge", f"{e[0]}-{e[1]}", f"w={e[2]} from S3P rows {rows}, absent from the Petersen route"))
    for e in sorted(theta_edges - _edge_names(quotient)):
        out.append(Violation("missing-edge", f"{e[0]}-{e[1]}", f"w={e[2]} has no S3P preimage"))
    for e, k in sorted(projected.items()):
        if k != 2 and e in theta_edges:
            out.append(Violation("fibre-size", f"{e[0]}-{e[1]}", f"w={e[2]} has {k} preimages, expected 2"))
    return report_from(out)


def _rows_projecting_to(ds: GccDataset, edge: tuple) -> list[int]:
    image = covering_map(ds, strict=False).image
    return [
        i for i, r in enumerate(ds.s3p)
        if (image.get(r.deg5), image.get(r.deg3), r.symbol) == edge
    ]


def gprime_aliases(ds: GccDataset) -> dict:
    """Canonical G' key -> printed alias (``y_i``, ``x_i``, ``x'_i``)."""
    out = {}
    for label, word in ds.display1:
        if label.startswith("y_"):
            out[canonical_cycle(word).key] = label
    for label, word in ds.display2:
        out["".join(sorted(word))] = label
    return out


# ------------------------------------------------------------ great circles


@dataclass(frozen=True)
class GreatCircle:
    symbol: int
    pattern: int  # 1, 2 or 3
    rows: tuple  # S3P row indices
    gprime_edges: tuple  # the two (y_key, x_key, w) classes its rows project to

    @property
    def name(self) -> str:
        return f"{self.symbol}.{self.pattern}"


def great_circles(ds: GccDataset) -> tuple[GreatCircle, ...]:
    """The 15 circles, ordered by symbol then pattern."""
    image = covering_map(ds).image
    buckets = defaultdict(list)
    for i, r in enumerate(ds.s3p):
        pair = frozenset((FaceId.parse(r.end_a).index, FaceId.parse(r.end_b).index))
        hits = [k for k, pat in enumerate(CIRCLE_PATTERNS, start=1) if pair in pat]
        if len(hits) != 1:
            raise DatasetError(f"S3P row {i} matches {len(hits)} circle patterns")
        buckets[(r.symbol, hits[0])].append(i)
    circles = []
    for (symbol, pattern), rows in sorted(buckets.items()):
        edges = sorted({(image[ds.s3p[i].deg5], image[ds.s3p[i].deg3], symbol) for i in rows})
        circles.append(GreatCircle(symbol, pattern, tuple(rows), tuple(edges)))
    return tuple(circles)


# -------------------------------------------------------- auxiliary checks


def pentagon_cycles_check(ds: GccDataset) -> ValidationReport:
    """Each face in a printed pentagon cycle must lie on both neighbouring vertices."""
    table = ds.face_table
    out = []
    for name, entries in ds.pentagon_cycles:
        if len(entries) % 2:
            out.append(Violation("pentagon", name, "odd number of entries"))
            continue
        for i in range(1, len(entries), 2):
            face, left, right = entries[i], entries[i - 1], entries[(i + 1) % len(entries)]
            for v in (left, right):
                if v not in table:
                    out.append(Violation("pentagon", f"{name}[{i}]", f"unknown vertex {v}"))
                elif face not in table[v]:
                    out.append(Violation("pentagon", f"{name}[{i}]", f"face {face} is not on {v}"))
    notes = [Violation("transcription", "pentagon_cycles", n) for n in ds.notes]
    return report_from(out, notes)


def theta_display_check(ds: GccDataset) -> ValidationReport:
    """Check the printed theta5/theta3 rows against O_3.

    A theta5 row must be a 5-cycle whose colour class is its label's class;
    rows whose source name carries a different class are noted, not failed.
    """
    g = build_petersen()
    labels = {lbl: canonical_cycle(w) for lbl, w in ds.display1}
    sets = {lbl: frozenset(int(c) for c in w) for lbl, w in ds.display2}
    out, notes = [], []
    for i, (source, text, label) in enumerate(ds.theta5_rows):
        loc = f"theta5[{i}] {source}"
        try:
            cyc = [parse_o3_vertex(t) for t in text.split()]
        except ValueError as exc:
            out.append(Violation("theta5", loc, str(exc)))
            continue
        if len(cyc) != 5 or not is_cycle_of(g, cyc):
            out.append(Violation("theta5", loc, f"{text} is not a 5-cycle of O_3"))
            continue
        induced = induced_color_cycle(g, cyc)
        if induced != labels.get(label):
            out.append(Violation("theta5", loc, f"colour class {induced} differs from label {label}"))
        if induced != labels.get(source):
            notes.append(Violation("theta5-source", loc, f"colour class {induced} belongs to {label}, not to the source {source}"))
    for i, (source, text) in enumerate(ds.theta3_rows):
        loc = f"theta3[{i}] {source}"
        try:
            cyc = [parse_o3_vertex(t) for t in text.split()]
        except ValueError as exc:
            out.append(Violation("theta3", loc, str(exc)))
            continue
        if len(cyc) != 6 or not is_cycle_of(g, cyc):
            out.append(Violation("theta3", loc, f"{text} is not a 6-cycle of O_3"))
            continue
        try:
            triple = frozenset(induced_color_cycle(g, cyc).canonical)
        except ValueError as exc:
            out.append(Violation("theta3", loc, str(exc)))
            continue
        if triple != sets.get(source):
            out.append(Violation("theta3", loc, f"colour triple {sorted(triple)} differs from {source}"))
    return report_from(out, notes)


def op_ep_check(ds: GccDataset) -> ValidationReport:
    """y_i of the first display must be the odd classes and ybar_i the even ones."""
    odd = {c for c in k5_cycle_classes(5) if cycle_parity(c) is Parity.ODD}
    even = set(k5_cycle_classes(5)) - odd
    ys = {canonical_cycle(w) for lbl, w in ds.display1 if lbl.startswith("y_")}
    bars = {canonical_cycle(w) for lbl, w in ds.display1 if lbl.startswith("ybar_")}
    out = []
    if ys != odd:
        out.append(Violation("op-ep", "display1 y", "y_i classes are not exactly the odd classes"))
    if bars != even:
        out.append(Violation("op-ep", "display1 ybar", "ybar_i classes are not exactly the even classes"))
    return report_from(out)


def observation2_check(gprime: BiregularGraph) -> ValidationReport:
    """Every G' edge meets O_3 in one shared edge coloured by its w-color."""
    out = []
    for y, x, w in gprime.edges:
        yk, xk = gprime.y_names[y], gprime.x_names[x]
        loc = f"{yk}-{xk}"
        try:
            edge = shared_edge(yk, frozenset(int(c) for c in xk))
        except ValueError as exc:
            out.append(Violation("obs2", loc, str(exc)))
            continue
        if edge is None:
            out.append(Violation("obs2", loc, "no shared O_3 edge"))
        elif edge[2] != w:
            out.append(Violation("obs2", loc, f"shared edge colour {edge[2]}, w-color {w}"))
    return report_from(out)
