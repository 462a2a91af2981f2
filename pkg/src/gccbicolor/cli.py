"""Command line: ``gccbicolor {cyclic,petersen,gcc} <verb> [options]``.

Exit codes are shared by every verb: 0 when the result is clean, 1 when a
check found violations, 2 for usage errors or malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import core, cyclic, dataset, gcc, petersen, render, search

ERRATA_ENV = "GCCBICOLOR_ERRATA"

OK, VIOLATIONS, BAD_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


@dataclass(frozen=True)
class RunConfig:
    errata: str | None  # path, or None for the shipped overlay
    raw: bool
    seed: int
    workers: int
    output: str | None

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        if args.workers < 1:
            raise UsageError("--workers must be at least 1")
        return cls(args.errata or os.environ.get(ERRATA_ENV) or None, args.raw, args.seed, args.workers, args.output)

    def dataset(self) -> dataset.GccDataset:
        if self.raw:
            return dataset.load_dataset()
        if self.errata:
            return dataset.load_dataset(self.errata)
        return dataset.load_corrected()


def _global_options(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--errata", metavar="FILE", default=d(None), help=f"errata overlay (default: shipped, or ${ERRATA_ENV})")
    p.add_argument("--raw", action="store_true", default=d(False), help="use the printed tables without errata")
    p.add_argument("--workers", type=int, default=d(1), help="worker processes for enumeration")
    p.add_argument("--seed", type=int, default=d(0), help="accepted for reproducible scripts; every computation here is deterministic")
    p.add_argument("--output", metavar="PATH", default=d(None), help="write the rendering here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gccbicolor", description="Faithful bicolorings of biregular bigraphs and the Great Circle Challenge.")
    _global_options(parser, suppress=False)
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def verb(sub, name, help_):
        p = sub.add_parser(name, help=help_)
        _global_options(p, suppress=True)
        return p

    cyc = groups.add_parser("cyclic", help="Z_m / Z_n bigraphs").add_subparsers(dest="verb", required=True, parser_class=_Parser)
    p = verb(cyc, "build", "build the bigraph")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p = verb(cyc, "color", "greedy bicoloring along an ordered pair list")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theta", required=True, help='ordered pairs, e.g. "0,0;0,1;1,1;1,2"')
    p.add_argument("--weights", required=True, help='weights aligned with --theta, e.g. "6,3,3,6"')
    p.add_argument("--check", action="store_true", help="check faithfulness and weights")
    p.add_argument("--reversible", action="store_true", help="check symmetric reversibility")
    p.add_argument("--perm-alpha", help='alpha permutation, one-line "1,0" or cycles "(0 1)"')
    p.add_argument("--perm-beta", help='beta permutation, one-line "2,1,0" or cycles "(0 2)"')

    pet = groups.add_parser("petersen", help="K_5 cycles and the Petersen graph").add_subparsers(dest="verb", required=True, parser_class=_Parser)
    p = verb(pet, "build", "the edge-coloured Petersen graph")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p = verb(pet, "cycles", "cycles of the Petersen graph")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--format", choices=["json"], default="json")
    p = verb(pet, "theta", "the theta5 / theta3 correspondences")
    p.add_argument("--check-paper", action="store_true", help="check the printed correspondence rows")
    p = verb(pet, "parity", "parity of a permutation word and of its cycle class")
    p.add_argument("--word", required=True)

    g = groups.add_parser("gcc", help="the Great Circle Challenge").add_subparsers(dest="verb", required=True, parser_class=_Parser)
    verb(g, "validate-data", "validate the tables")
    p = verb(g, "graph", "export G or G'")
    p.add_argument("--which", choices=["G", "Gprime"], default="Gprime")
    p.add_argument("--route", choices=["phi", "theta"], default="phi")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p = verb(g, "solve", "enumerate solutions")
    p.add_argument("--fix-135", action="store_true", help="put 1a, 3b, 5c on the edges of w-color 1, 3, 5")
    p.add_argument("--reversible-only", action="store_true", help="keep distribution-reversible solutions")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--limit", type=int)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p = verb(g, "verify", "verify a solution file")
    p.add_argument("--solution", required=True, metavar="FILE")
    p = verb(g, "tables", "level or circle table of a solution")
    p.add_argument("--solution", required=True, metavar="FILE")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--levels", action="store_true")
    which.add_argument("--circles", action="store_true")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p = verb(g, "import", "import a printed solution")
    p.add_argument("--paper", choices=["ss4", "ss5a", "ss5b"], required=True)
    return parser


# ------------------------------------------------------------------ helpers


def _pairs(text: str) -> list[tuple[int, int]]:
    try:
        return [tuple(int(t) for t in chunk.split(",")) for chunk in text.split(";") if chunk.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot parse pair list {text!r}: {exc}") from exc


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot parse integer list {text!r}: {exc}") from exc


def parse_permutation(text: str, size: int) -> tuple[int, ...]:
    """``"1,0"`` (one-line) or ``"(0 1)(2 3)"`` (cycles) on ``range(size)``."""
    text = text.strip()
    if text.startswith("("):
        perm = list(range(size))
        for chunk in text.replace(")", "").split("(")[1:]:
            cycle = [int(t) for t in chunk.replace(",", " ").split()]
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if not (0 <= a < size and 0 <= b < size):
                    raise UsageError(f"symbol out of range in {text!r}")
                perm[a] = b
        return tuple(perm)
    perm = tuple(_ints(text))
    if len(perm) != size:
        raise UsageError(f"permutation {text!r} must have {size} entries")
    return perm


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _code(report: core.ValidationReport) -> int:
    return OK if report.ok else VIOLATIONS


# ------------------------------------------------------------------- verbs


def _cyclic_build(args, cfg):
    g = cyclic.build_cyclic_bigraph(cyclic.CyclicParams(args.m, args.n))
    text = render.export_dot(g, name=f"Z{args.m}_Z{args.n}") if args.format == "dot" else render.dumps(g.to_dict())
    return OK, text


def _cyclic_color(args, cfg):
    params = cyclic.CyclicParams(args.m, args.n)
    theta, weights = _pairs(args.theta), _ints(args.weights)
    coloring = cyclic.greedy_bicolor(params, theta, weights)
    g = cyclic.build_cyclic_bigraph(params)
    doc = {"edges": [list(e[:2]) for e in g.edges], **coloring.to_dict()}
    code = OK
    if args.check or args.reversible:
        system = core.ColorPairSystem.from_weights(params.lam, params.mu, theta, weights)
        report = core.check_faithful(g, coloring, system).merged(core.check_weight_compatible(coloring, system))
        doc["increasing"] = core.is_increasing(theta)
        doc["report"] = report.to_dict()
        code = _code(report)
        if args.reversible:
            perms = core.SymbolPermutationPair(
                parse_permutation(args.perm_alpha, params.lam) if args.perm_alpha else tuple(reversed(range(params.lam))),
                parse_permutation(args.perm_beta, params.mu) if args.perm_beta else tuple(reversed(range(params.mu))),
            )
            if report.ok:
                doc["reversible"] = core.is_symmetrically_reversible(g, coloring, system, perms)
                code = OK if doc["reversible"] else VIOLATIONS
            else:
                doc["reversible"] = None
    return code, render.dumps(doc)


def _petersen_build(args, cfg):
    g = petersen.build_petersen()
    return OK, render.export_colored_dot(g) if args.format == "dot" else render.dumps(render.colored_graph_dict(g))


def _petersen_cycles(args, cfg):
    g = petersen.build_petersen()
    if not 3 <= args.length <= len(g.vertices):
        raise UsageError(f"--length must lie in 3..{len(g.vertices)}")
    cycles = petersen.enumerate_graph_cycles(g, args.length)
    doc = {
        "length": args.length,
        "count": len(cycles),
        "cycles": [{"vertices": [render.vertex_text(v) for v in c.canonical], "colors": str(petersen.induced_color_cycle(g, c))} for c in cycles],
    }
    return OK, render.dumps(doc)


def _petersen_theta(args, cfg):
    theta = petersen.theta_correspondence()
    doc = {
        "theta5": {c.key: [render.vertex_text(v) for v in cyc.canonical] for c, cyc in theta.theta5.items()},
        "theta3": {c.key: [render.vertex_text(v) for v in cyc.canonical] for c, cyc in theta.theta3.items()},
    }
    code = OK
    if args.check_paper:
        report = dataset.theta_display_check(cfg.dataset()).merged(dataset.op_ep_check(cfg.dataset()))
        doc["check"] = report.to_dict()
        code = _code(report)
    return code, render.dumps(doc)


def _petersen_parity(args, cfg):
    word = petersen.parse_word(args.word)
    doc = {"word": args.word, "parity": petersen.permutation_parity(word).name}
    cls = petersen.canonical_cycle(word)
    doc["class"] = str(cls)
    doc["class_parity"] = petersen.cycle_parity(cls).name if cls.length % 4 == 1 else None
    return OK, render.dumps(doc)


def _validate_data(args, cfg):
    ds = cfg.dataset()
    report = dataset.validate_dataset(ds)
    sections = {"tables": report}
    if report.ok:
        cmap = dataset.covering_map(ds)
        sections["covering"] = dataset.printed_pairing_discrepancies(ds, cmap)
        sections["gprime"] = dataset.cross_validate_gprime(ds)
        sections["pentagons"] = dataset.pentagon_cycles_check(ds)
        sections["observation2"] = dataset.observation2_check(dataset.build_Gprime_quotient(ds))
    else:
        sections["gprime"] = dataset.cross_validate_gprime(ds, strict=False)
        sections["pentagons"] = dataset.pentagon_cycles_check(ds)
    sections["theta_display"] = dataset.theta_display_check(ds)
    sections["op_ep"] = dataset.op_ep_check(ds)
    combined = core.ValidationReport().merged(*sections.values())
    doc = {
        "ok": combined.ok,
        "errata": [e.to_dict() for e in ds.errata],
        "sections": {name: r.to_dict() for name, r in sections.items()},
    }
    return _code(combined), render.dumps(doc)


def _graph(args, cfg):
    ds = cfg.dataset()
    strict = not cfg.raw
    if args.which == "G":
        g = dataset.build_G(ds, strict)
        aliases = dataset.covering_map(ds, strict).image
        name = "G"
    else:
        g = dataset.build_Gprime_quotient(ds, strict) if args.route == "phi" else dataset.build_Gprime_theta()
        aliases = dataset.gprime_aliases(ds)
        name = "Gprime"
    if args.format == "dot":
        return OK, render.export_dot(g, aliases, name)
    doc = g.to_dict()
    doc["aliases"] = {n: aliases[n] for n in list(g.y_names) + list(g.x_names) if n in aliases}
    return OK, render.dumps(doc)


def _gprime(cfg) -> gcc.GPrime:
    if not cfg.raw and not cfg.errata:
        return gcc.default_gprime()
    ds = cfg.dataset()
    return gcc.gprime_from(dataset.build_Gprime_quotient(ds, strict=not cfg.raw), dataset.gprime_aliases(ds))


def _solve(args, cfg):
    if args.limit is not None and args.limit < 0:
        raise UsageError("--limit must be non-negative")
    gp = _gprime(cfg)
    result = search.enumerate_gcc_solutions(
        gp,
        fix_135=args.fix_135,
        reversible_only=args.reversible_only,
        count_only=args.count_only,
        limit=args.limit,
        workers=cfg.workers,
    )
    if args.count_only:
        return OK, f"{result.count}\n"
    if args.format == "csv":
        header = ["index"] + ["|".join(map(str, gp.edge_label(i))) for i in range(len(gp.edges))]
        rows = ([n, *s.pairs] for n, s in enumerate(result.solutions))
        return OK, render.rows_to_csv(header, rows)
    doc = {
        "count": result.count,
        "fix_135": args.fix_135,
        "reversible_only": args.reversible_only,
        "listed": len(result.solutions),
        "solutions": [s.to_dict() for s in result.solutions],
    }
    return OK, render.dumps(doc)


def _load_solution(path: str, gp: gcc.GPrime):
    try:
        return gcc.import_paper_solution(_read_json(path), gp)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _verify(args, cfg):
    gp = _gprime(cfg)
    sol, placement = _load_solution(args.solution, gp)
    report = placement.merged(gcc.verify_gcc_solution(gp, sol))
    doc = {"ok": report.ok, "report": report.to_dict()}
    if report.ok:
        doc["distribution_reversible"] = gcc.is_distribution_reversible(sol, gp)
        doc["ansatz135"] = sol.satisfies_ansatz()
    return _code(report), render.dumps(doc)


def _tables(args, cfg):
    gp = _gprime(cfg)
    sol, placement = _load_solution(args.solution, gp)
    report = placement.merged(gcc.verify_gcc_solution(gp, sol))
    if not report.ok:
        return VIOLATIONS, render.dumps({"ok": False, "report": report.to_dict()})
    if args.circles:
        ds = cfg.dataset()
        lifted = gcc.lift_solution(sol, ds, gp)
        table = gcc.circle_distribution(lifted, dataset.great_circles(ds), ds)
        if args.format == "json":
            return OK, render.dumps({str(w): cells for w, cells in sorted(table.by_symbol().items())})
        return OK, table.to_csv()
    table = gcc.level_distribution(sol, gp)
    return OK, table.to_csv() if args.format == "csv" else render.dumps(table.to_dict())


def _import(args, cfg):
    gp = _gprime(cfg)
    doc = gcc.paper_solution_doc(args.paper)
    sol, report = gcc.import_paper_solution(doc, gp)
    levels = gcc.compare_printed_levels(args.paper, gp)
    out = {
        "paper": args.paper,
        "assigned": len(gp.edges) - len(sol.open_edges),
        "open": len(sol.open_edges),
        "solution": sol.to_dict(),
        "discrepancies": report.to_dict(),
        "levels": levels.to_dict(),
    }
    return _code(report.merged(levels)), render.dumps(out)


HANDLERS = {
    ("cyclic", "build"): _cyclic_build,
    ("cyclic", "color"): _cyclic_color,
    ("petersen", "build"): _petersen_build,
    ("petersen", "cycles"): _petersen_cycles,
    ("petersen", "theta"): _petersen_theta,
    ("petersen", "parity"): _petersen_parity,
    ("gcc", "validate-data"): _validate_data,
    ("gcc", "graph"): _graph,
    ("gcc", "solve"): _solve,
    ("gcc", "verify"): _verify,
    ("gcc", "tables"): _tables,
    ("gcc", "import"): _import,
}


def run(argv) -> tuple[int, str, str]:
    """Execute a command line; returns (exit code, stdout text, stderr text)."""
    try:
        args = build_parser().parse_args(list(argv))
        cfg = RunConfig.from_args(args)
        code, text = HANDLERS[(args.group, args.verb)](args, cfg)
    except UsageError as exc:
        return BAD_INPUT, "", f"{exc}\n"
    except SystemExit as exc:  # --help
        return (OK if exc.code in (0, None) else BAD_INPUT), "", ""
    except (ValueError, KeyError, OSError) as exc:
        return BAD_INPUT, "", f"gccbicolor: error: {exc}\n"
    if cfg.output:
        try:
            Path(cfg.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            return BAD_INPUT, "", f"gccbicolor: error: {exc}\n"
        return code, "", ""
    return code, text, ""


def dispatch(argv=None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
