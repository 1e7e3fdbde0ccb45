"""Command-line pipeline: solve -> layout -> verify -> config -> render.

Every stage reads and writes JSON files, so each step can be rerun or fed
user-supplied artifacts.  Exit codes: 0 success, 1 usage error, 2 a
computation verdict failed (no roots found, drawing not faithful, ...).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from ._jsonfmt import dumps
from .configuration import (IncidenceStructure, IncidenceMismatchError,
                            NotFaithfulError, build_point_circle,
                            validate_configuration)
from .graph import bipartition
from .layout import Drawing, InfeasibleLayoutError, circular_layout, rhombus_layout
from .render import RenderStyle, render_drawing, render_configuration
from .solver import (enumerate_solutions, solution_from_json_dict,
                     solution_to_json_dict)
from .verifier import FaithfulnessReport, verify

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERDICT = 2


@dataclass(frozen=True)
class RunConfig:
    command: str
    out_dir: Path
    seed_count: int = 10_000
    rng_seed: int = 0
    solver_tol: float = 1e-12
    edge_tol: float = 1e-9
    gap_threshold: float = 1e-2
    rotation_sign: int = -1
    centers_class: str = "a"
    solutions_path: Path | None = None
    drawing_paths: tuple[Path, ...] = ()
    configuration_paths: tuple[Path, ...] = ()


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; the contract here is 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="unitdist",
        description="Faithful unit-distance embeddings of GP(8,3) and their "
                    "point-circle configurations.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out-dir", type=Path, default=Path("out"),
                       help="directory for output artifacts (default: out)")

    def add_solver_flags(p):
        p.add_argument("--seeds", type=int, default=10_000,
                       help="number of random starts (default: 10000)")
        p.add_argument("--rng-seed", type=int, default=0,
                       help="seed for the random start generator (default: 0)")
        p.add_argument("--tol", type=float, default=1e-12,
                       help="residual max-norm tolerance (default: 1e-12)")

    def add_verify_flags(p):
        p.add_argument("--edge-tol", type=float, default=1e-9,
                       help="edge length tolerance (default: 1e-9)")
        p.add_argument("--gap-threshold", type=float, default=1e-2,
                       help="required non-edge clearance from distance 1 "
                            "(default: 0.01)")

    p = sub.add_parser("solve", help="enumerate roots of the embedding system")
    add_common(p)
    add_solver_flags(p)

    p = sub.add_parser("layout", help="build drawings from solved parameters")
    add_common(p)
    p.add_argument("--solutions", type=Path, default=None,
                   help="solutions JSON (default: <out-dir>/solutions.json)")
    p.add_argument("--rotation-sign", type=int, choices=(1, -1), default=-1,
                   help="inner-ring rotation branch of the circular drawing "
                        "(default: -1)")

    p = sub.add_parser("verify", help="certify drawings from JSON files")
    add_common(p)
    add_verify_flags(p)
    p.add_argument("drawings", type=Path, nargs="+", metavar="DRAWING.json")

    p = sub.add_parser("config", help="derive a point-circle configuration")
    add_common(p)
    add_verify_flags(p)
    p.add_argument("drawing", type=Path, metavar="DRAWING.json")
    p.add_argument("--centers-class", choices=("a", "b"), default="a",
                   help="bipartition class used as circle centres (default: a)")

    p = sub.add_parser("render", help="render drawings/configurations to SVG")
    add_common(p)
    p.add_argument("--drawing", type=Path, action="append", default=[],
                   metavar="DRAWING.json")
    p.add_argument("--configuration", type=Path, action="append", default=[],
                   metavar="CONFIG.json")

    p = sub.add_parser("all", help="run the whole pipeline")
    add_common(p)
    add_solver_flags(p)
    add_verify_flags(p)
    p.add_argument("--rotation-sign", type=int, choices=(1, -1), default=-1)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    kwargs = {
        "command": args.command,
        "out_dir": args.out_dir,
        "seed_count": getattr(args, "seeds", 10_000),
        "rng_seed": getattr(args, "rng_seed", 0),
        "solver_tol": getattr(args, "tol", 1e-12),
        "edge_tol": getattr(args, "edge_tol", 1e-9),
        "gap_threshold": getattr(args, "gap_threshold", 1e-2),
        "rotation_sign": getattr(args, "rotation_sign", -1),
        "centers_class": getattr(args, "centers_class", "a"),
        "solutions_path": getattr(args, "solutions", None),
    }
    drawings = getattr(args, "drawings", None) or getattr(args, "drawing", None)
    if drawings is not None:
        if isinstance(drawings, Path):
            drawings = [drawings]
        kwargs["drawing_paths"] = tuple(drawings)
    configs = getattr(args, "configuration", None)
    if configs:
        kwargs["configuration_paths"] = tuple(configs)
    return RunConfig(**kwargs)


class _InputError(Exception):
    """Unusable input artifact (missing file, bad JSON, wrong schema)."""


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path}")


def _load_json(path: Path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise _InputError(f"input file {path} not found") from None
    except json.JSONDecodeError as exc:
        raise _InputError(f"{path} is not valid JSON: {exc}") from None


def _read_drawing(path: Path) -> Drawing:
    try:
        return Drawing.from_json_dict(_load_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise _InputError(f"{path} is not a drawing artifact: {exc}") from None


def _read_structure(path: Path) -> IncidenceStructure:
    try:
        return IncidenceStructure.from_json_dict(_load_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise _InputError(f"{path} is not a configuration artifact: {exc}") from None


def _report_table(name: str, report: FaithfulnessReport) -> str:
    gap_ok = report.min_nonedge_gap >= report.gap_threshold
    gap_txt = ("-" if math.isinf(report.min_nonedge_gap)
               else f"{report.min_nonedge_gap:.6f}")
    rows = [
        ("unit-distance", report.is_unit_distance,
         f"max edge residual {report.max_edge_residual:.3e} "
         f"(tol {report.edge_tol:g}, witness {report.max_edge_residual_witness})"),
        ("non-edge gap", gap_ok,
         f"min gap {gap_txt} (threshold {report.gap_threshold:g}, "
         f"witness {report.min_nonedge_gap_witness})"),
        ("degeneracies", not report.degeneracies,
         f"{len(report.degeneracies)} finding(s)"),
        ("faithful", report.is_faithful,
         f"{report.n_edges} edges, {report.n_nonadjacent_pairs} non-adjacent pairs"),
    ]
    lines = [f"[{name}]"]
    for label, ok, detail in rows:
        lines.append(f"  {'PASS' if ok else 'FAIL'}  {label:<14} {detail}")
    return "\n".join(lines)


def cmd_solve(cfg: RunConfig) -> int:
    solutions = enumerate_solutions(seed_count=cfg.seed_count,
                                    rng_seed=cfg.rng_seed, tol=cfg.solver_tol)
    _write(cfg.out_dir / "solutions.json",
           dumps([solution_to_json_dict(s) for s in solutions]))
    print(f"found {len(solutions)} non-degenerate solution(s)")
    for s in solutions:
        print(f"  h={s.h:.6f} k={s.k:.6f} p={s.p:.6f} q={s.q:.6f}")
    return EXIT_OK if solutions else EXIT_VERDICT


def cmd_layout(cfg: RunConfig) -> int:
    path = cfg.solutions_path or cfg.out_dir / "solutions.json"
    if not path.exists():
        print(f"error: solutions file {path} not found (run solve first)",
              file=sys.stderr)
        return EXIT_USAGE
    entries = _load_json(path)
    if not entries:
        print("error: solutions file is empty", file=sys.stderr)
        return EXIT_VERDICT
    params = solution_from_json_dict(entries[0])
    _write(cfg.out_dir / "drawing.json",
           dumps(rhombus_layout(params).to_json_dict()))
    try:
        circular = circular_layout(8, 3, cfg.rotation_sign)
    except InfeasibleLayoutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERDICT
    _write(cfg.out_dir / "circular.json", dumps(circular.to_json_dict()))
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    all_faithful = True
    for path in cfg.drawing_paths:
        drawing = _read_drawing(path)
        report = verify(drawing, edge_tol=cfg.edge_tol,
                        gap_threshold=cfg.gap_threshold)
        _write(cfg.out_dir / f"{path.stem}_report.json",
               dumps(report.to_json_dict()))
        print(_report_table(path.stem, report))
        all_faithful = all_faithful and report.is_faithful
    return EXIT_OK if all_faithful else EXIT_VERDICT


def cmd_config(cfg: RunConfig) -> int:
    drawing = _read_drawing(cfg.drawing_paths[0])
    bp = bipartition(drawing.graph)
    try:
        structure = build_point_circle(drawing, bp, cfg.centers_class,
                                       edge_tol=cfg.edge_tol,
                                       gap_threshold=cfg.gap_threshold)
    except (NotFaithfulError, IncidenceMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERDICT
    _write(cfg.out_dir / f"config_centers_{cfg.centers_class}.json",
           dumps(structure.to_json_dict()))
    check = validate_configuration(structure)
    if check.signature is None:
        print("configuration axioms violated:")
        for violation in check.violations:
            print(f"  {violation}")
        return EXIT_VERDICT
    v, b, r, c = check.signature
    print(f"valid ({v}_{r}, {b}_{c}) configuration")
    return EXIT_OK


def cmd_render(cfg: RunConfig) -> int:
    if not cfg.drawing_paths and not cfg.configuration_paths:
        print("error: nothing to render; pass --drawing and/or --configuration",
              file=sys.stderr)
        return EXIT_USAGE
    style = RenderStyle()
    for path in cfg.drawing_paths:
        _write(cfg.out_dir / f"{path.stem}.svg",
               render_drawing(_read_drawing(path), style))
    for path in cfg.configuration_paths:
        _write(cfg.out_dir / f"{path.stem}.svg",
               render_configuration(_read_structure(path), style))
    return EXIT_OK


def cmd_all(cfg: RunConfig) -> int:
    style = RenderStyle()

    solutions = enumerate_solutions(seed_count=cfg.seed_count,
                                    rng_seed=cfg.rng_seed, tol=cfg.solver_tol)
    _write(cfg.out_dir / "solutions.json",
           dumps([solution_to_json_dict(s) for s in solutions]))
    if not solutions:
        print("stage solve failed: no non-degenerate solutions found",
              file=sys.stderr)
        return EXIT_VERDICT
    print(f"stage solve: {len(solutions)} non-degenerate solution(s)")

    drawing = rhombus_layout(solutions[0])
    try:
        circular = circular_layout(8, 3, cfg.rotation_sign)
    except InfeasibleLayoutError as exc:
        print(f"stage layout failed: {exc}", file=sys.stderr)
        return EXIT_VERDICT
    _write(cfg.out_dir / "drawing.json", dumps(drawing.to_json_dict()))
    _write(cfg.out_dir / "circular.json", dumps(circular.to_json_dict()))

    report = verify(drawing, edge_tol=cfg.edge_tol,
                    gap_threshold=cfg.gap_threshold)
    circular_report = verify(circular, edge_tol=cfg.edge_tol,
                             gap_threshold=cfg.gap_threshold)
    _write(cfg.out_dir / "drawing_report.json", dumps(report.to_json_dict()))
    _write(cfg.out_dir / "circular_report.json",
           dumps(circular_report.to_json_dict()))
    print(_report_table("drawing", report))
    print(_report_table("circular", circular_report))

    _write(cfg.out_dir / "drawing.svg", render_drawing(drawing, style))
    _write(cfg.out_dir / "circular.svg", render_drawing(circular, style))

    if not report.is_faithful:
        print("stage verify failed: rhombus drawing is not faithful",
              file=sys.stderr)
        return EXIT_VERDICT

    bp = bipartition(drawing.graph)
    try:
        structures = {
            "a": build_point_circle(drawing, bp, "a", edge_tol=cfg.edge_tol,
                                    gap_threshold=cfg.gap_threshold),
            "b": build_point_circle(drawing, bp, "b", edge_tol=cfg.edge_tol,
                                    gap_threshold=cfg.gap_threshold),
        }
    except (NotFaithfulError, IncidenceMismatchError) as exc:
        print(f"stage config failed: {exc}", file=sys.stderr)
        return EXIT_VERDICT
    for cls, structure in structures.items():
        check = validate_configuration(structure)
        if check.signature is None:
            print(f"stage config failed: centers {cls}: "
                  f"{'; '.join(check.violations)}", file=sys.stderr)
            return EXIT_VERDICT
        v, b, r, c = check.signature
        print(f"stage config: centers {cls}: valid ({v}_{r}, {b}_{c}) configuration")
        _write(cfg.out_dir / f"config_centers_{cls}.json",
               dumps(structure.to_json_dict()))
        _write(cfg.out_dir / f"config_centers_{cls}.svg",
               render_configuration(structure, style))
    return EXIT_OK


_COMMANDS = {
    "solve": cmd_solve,
    "layout": cmd_layout,
    "verify": cmd_verify,
    "config": cmd_config,
    "render": cmd_render,
    "all": cmd_all,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "gap_threshold", 1e-2) <= getattr(args, "edge_tol", 1e-9):
        print("unitdist: error: --gap-threshold must exceed --edge-tol",
              file=sys.stderr)
        return EXIT_USAGE
    cfg = _config_from_args(args)
    try:
        return _COMMANDS[cfg.command](cfg)
    except _InputError as exc:
        print(f"unitdist: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
