"""Main entry point for the Gabriel-Roiter measure toolkit."""

import argparse
import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import List, Optional

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.artubes import Family, all_families, build_tube, family_of
from src.config import Config
from src.errors import GRError, UsageError
from src.exporters.picture import PictureRenderer
from src.exporters.reports import (
    HookReport,
    IPFReport,
    classify_report,
    distinguished_report,
    export_json,
    family_report,
    measure_report,
    picture_report,
    suite_report,
    tiling_report_model,
    tube_report,
)
from src.exporters.tabular import TableExporter
from src.grcompute import gr_comeasure, module_ipf, oracle_measure
from src.models import TubeKind
from src.quiver import QuiverSpec, parse_quiver
from src.rhombic import RhombicPicture, build_picture, distinguished_limits, tiling_report
from src.strings import HomogeneousModule, Module, make_string
from src.verification import SUITES, get_suite, random_quivers

DEFAULT_QUIVERS = ["><<><,a,b,c,d,e", ">>><,a,d,c,b"]

VERBS = [
    "measure",
    "comeasure",
    "ipf",
    "oracle",
    "classify",
    "family",
    "tube",
    "limits",
    "rhombic",
    "verify",
    "tiling",
    "hooks",
]


def setup_logging(level: str, log_dir: str = "") -> None:
    """Configure logging on stderr, plus a dated file when a log directory is set."""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_dir:
        log_file = Path(log_dir) / f"grmeasure_{datetime.now().strftime('%Y-%m-%d')}.log"
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))

    logging.basicConfig(
        level=getattr(logging, level.upper()),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Gabriel-Roiter measures, tubes and rhombic pictures for quivers of type Ã_n"
    )
    parser.add_argument("verb", choices=VERBS, help="What to compute")
    parser.add_argument(
        "suite",
        nargs="?",
        choices=sorted(SUITES),
        help="Property suite (verify only)",
    )
    parser.add_argument(
        "--quiver",
        action="append",
        default=None,
        help='Orientation word and labels, e.g. "><<><,a,b,c,d,e" (repeatable for verify)',
    )
    parser.add_argument("--module", help="String module as <left label>:<dimension>, e.g. c:18")
    parser.add_argument("--homogeneous", type=int, help="Quasi-length q of the band module H[q]")
    parser.add_argument("--family", help="Family name such as ce or ce_*, or H")
    parser.add_argument("--kind", choices=[kind.value for kind in TubeKind], default="right", help="Tube kind")
    parser.add_argument("--depth", type=int, default=None, help="Tube rows or family members")
    parser.add_argument("--max-dim", type=int, default=None, help="Dimension bound")
    parser.add_argument("--format", choices=["json", "csv", "svg", "tikz"], default="json", help="Output format")
    parser.add_argument("--out", type=Path, default=None, help="Write the report here instead of stdout (a directory for rhombic --format csv)")
    parser.add_argument("--seed", type=int, default=None, help="Seed for random orientations")
    parser.add_argument(
        "--random",
        type=int,
        nargs="?",
        const=Config.RANDOM_QUIVERS,
        default=0,
        help="Add random orientations to verify (RANDOM_QUIVERS when no count is given)",
    )
    parser.add_argument(
        "--no-extrema-check",
        action="store_true",
        help="Report the tiling even without a unique widest valley and hill",
    )
    return parser


def parse_module(q: QuiverSpec, args: argparse.Namespace) -> Module:
    if args.homogeneous is not None:
        return HomogeneousModule(q, args.homogeneous)
    if not args.module:
        raise UsageError("Give --module <label>:<dim> or --homogeneous <q>")
    label, sep, dim = args.module.rpartition(":")
    if not sep or not dim.isdigit():
        raise UsageError(f"Expected <label>:<dim>, got {args.module!r}")
    return make_string(q, label, int(dim))


def parse_family(q: QuiverSpec, args: argparse.Namespace) -> Family:
    if not args.family:
        return family_of(parse_module(q, args))
    for family in all_families(q):
        if args.family in (family.name, family.name.removesuffix("_*")):
            return family
    raise UsageError(f"No family named {args.family!r} over {q.word}")


def _single_quiver(args: argparse.Namespace) -> QuiverSpec:
    if not args.quiver:
        raise UsageError("--quiver is required")
    if len(args.quiver) > 1:
        raise UsageError(f"{args.verb} takes a single --quiver")
    return parse_quiver(args.quiver[0])


def _require_format(args: argparse.Namespace, *allowed: str) -> None:
    if args.format not in allowed:
        raise UsageError(f"{args.verb} supports --format {', '.join(allowed)}, not {args.format}")


def run_verify(args: argparse.Namespace, logger: logging.Logger) -> tuple[str, int]:
    if not args.suite:
        raise UsageError(f"verify needs a suite: {', '.join(sorted(SUITES))}")
    _require_format(args, "json")
    quivers = [parse_quiver(text) for text in (args.quiver or DEFAULT_QUIVERS)]
    if args.random:
        seed = Config.RANDOM_SEED if args.seed is None else args.seed
        quivers += random_quivers(args.random, Config.RANDOM_MAX_VERTICES, seed)

    result = get_suite(args.suite, max_dim=args.max_dim).run(quivers)
    for failure in result.failures:
        logger.error(failure)
    return export_json(suite_report(result)), 0 if result.passed else 1


def _rhombic_tables(q: QuiverSpec, picture: RhombicPicture, out_dir: Optional[Path]) -> Optional[str]:
    """Family table, then the point table when points were computed.

    With an output directory both go to files there and nothing is printed.
    """
    families = all_families(q)
    if out_dir is not None:
        exporter = TableExporter(out_dir)
        exporter.export_families(families)
        if picture.points:
            exporter.export_points(picture.points)
        return None
    text = TableExporter.render_families(families)
    if picture.points:
        text += "\n" + TableExporter.render_points(picture.points)
    return text


def run_command(args: argparse.Namespace, logger: logging.Logger) -> tuple[Optional[str], int]:
    """Execute one verb; returns the report text (None once written to files) and the exit status."""
    if args.verb == "verify":
        return run_verify(args, logger)

    q = _single_quiver(args)
    verb = args.verb

    if verb == "hooks":
        _require_format(args, "json")
        return export_json(HookReport.of(q.hooks)), 0

    if verb in ("measure", "comeasure", "ipf", "oracle", "classify"):
        _require_format(args, "json")
        m = parse_module(q, args)
        if verb == "measure":
            return export_json(measure_report(m)), 0
        if verb == "comeasure":
            return export_json(measure_report(m, measure=gr_comeasure(m), branch="dual")), 0
        if verb == "oracle":
            return export_json(measure_report(m, measure=oracle_measure(m, args.max_dim), branch="oracle")), 0
        if verb == "ipf":
            return export_json(IPFReport.of(module_ipf(m))), 0
        return export_json(classify_report(m)), 0

    if verb == "family":
        _require_format(args, "json", "csv")
        family = parse_family(q, args)
        if args.format == "csv":
            return TableExporter.render_families([family]), 0
        return export_json(family_report(family, args.depth or 4)), 0

    if verb == "tube":
        _require_format(args, "json")
        kind = TubeKind(args.kind)
        rank = {TubeKind.LEFT: q.hooks.s, TubeKind.RIGHT: q.hooks.t, TubeKind.HOMOGENEOUS: 1}[kind]
        tube = build_tube(q, kind, args.depth or Config.TUBE_DEPTH_FACTOR * rank)
        return export_json(tube_report(tube)), 0

    if verb == "limits":
        _require_format(args, "json")
        return export_json(distinguished_report(distinguished_limits(q))), 0

    if verb == "tiling":
        _require_format(args, "json")
        kind = TubeKind(args.kind)
        if kind is TubeKind.HOMOGENEOUS:
            raise UsageError("tiling needs --kind left or right")
        rank = q.hooks.s if kind is TubeKind.LEFT else q.hooks.t
        tube = build_tube(q, kind, args.depth or Config.TUBE_DEPTH_FACTOR * max(rank, 3))
        report = tiling_report(tube, require_unique_extrema=not args.no_extrema_check)
        return export_json(tiling_report_model(report)), 1 if report.tiled is False else 0

    # rhombic
    picture = build_picture(q, max_dim=args.max_dim or 0)
    if args.format == "csv":
        return _rhombic_tables(q, picture, args.out), 0
    if args.format in ("svg", "tikz"):
        renderer = PictureRenderer()
        text = renderer.render_svg(picture) if args.format == "svg" else renderer.render_tikz(picture)
        return text, 0
    return export_json(picture_report(picture)), 0


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2

    # Validate configuration
    errors = Config.validate()
    if errors:
        print("Configuration errors:", file=sys.stderr)
        for error in errors:
            print(f"  - {error}", file=sys.stderr)
        print("\nPlease check your .env file", file=sys.stderr)
        return 2

    Config.ensure_directories()
    setup_logging(Config.LOG_LEVEL, Config.LOG_DIR)
    logger = logging.getLogger(__name__)
    logger.info(f"Running {args.verb}")

    try:
        text, status = run_command(args, logger)
    except GRError as e:
        print(f"error: [{e.code}] {e}", file=sys.stderr)
        return 2

    if text is None:
        return status
    if args.out:
        args.out.write_text(text, encoding="utf-8")
        logger.info(f"Report written to: {args.out}")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
