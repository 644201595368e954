#!/usr/bin/env python3
"""
circumradius - metric circumradius toolkit, command line entry point.

Exit codes:
  classify   0 INNER_PRODUCT, 1 NOT_INNER_PRODUCT, 2 INCONCLUSIVE
  embed4     0 embeddable, 1 not embeddable
  any        64 usage or config error, 65 bad input data, 70 internal error
"""

import argparse
import sys
from typing import Optional

import numpy as np

from core import __version__
from core.config import (
    embedding_document,
    energy_document,
    load_norm_config,
    load_table,
    report_document,
)
from core.degeneracy import ClassifierOptions, SearchBudget, circumradius_landscape, classify
from core.degeneracy.sections import section_bases
from core.energies import EnergyOptions, estimate_menger_energy, load_point_cloud, thickness
from core.errors import CircumradiusError, ConfigError
from core.euclid_embed import DistanceMatrix4, four_point_embeddable
from core.log import configure_logging, get_logger
from core.menger import TriangleSides, circumradius, circumradius_points
from core.normspace import NormSpec

EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_SOFTWARE = 70

logger = get_logger("core.cli")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="circumradius",
        description="Metric circumradius toolkit: sphere degeneracy, inner product test, Menger energies",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  circumradius classify docs/configs/linf2.json --radius 1
  circumradius circumradius --sides 3 4 5
  circumradius embed4 --distances d.txt
  circumradius energy --cloud circle.txt --energy menger --p 2
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--log-json", action="store_true", help="JSON log lines on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="Classify a norm as inner product or not")
    p.add_argument("config", help="JSON norm config")
    p.add_argument("--center", type=float, nargs="+", help="sphere center (default: origin)")
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--grid", "--budget", dest="grid", type=int, default=SearchBudget.grid)
    p.add_argument("--top-k", type=int, default=SearchBudget.top_k)
    p.add_argument("--sections", type=int, default=SearchBudget.sections)
    p.add_argument("--refine-iterations", type=int, default=SearchBudget.refine_iterations)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--margin", type=float, default=ClassifierOptions.margin)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--emit-plot", metavar="CSV", help="write the first-section circumradius landscape")

    p = sub.add_parser("circumradius", help="Circumradius of one triple")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--sides", type=float, nargs=3, metavar=("A", "B", "C"))
    src.add_argument("--points", help="file with three points, one per line")
    p.add_argument("--config", help="JSON norm config for --points (default: Euclidean)")

    p = sub.add_parser("embed4", help="Four-point Euclidean embeddability")
    p.add_argument("--distances", required=True, help="4x4 distance table")
    p.add_argument("--format", choices=["json", "text"], default="text")

    p = sub.add_parser("energy", help="Thickness or integral Menger curvature of a point cloud")
    p.add_argument("--cloud", required=True, help="points, one per line, optional trailing weight")
    p.add_argument("--energy", choices=["thickness", "menger"], default="menger")
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--dim", type=int, help="coordinate count; an extra column is read as weight")
    p.add_argument("--config", help="JSON norm config (default: Euclidean)")
    p.add_argument("--exact-limit", type=int, default=EnergyOptions.exact_limit)
    p.add_argument("--samples", type=int, default=EnergyOptions.samples)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=["json", "text"], default="text")
    return parser


def _write_landscape(path: str, spec: NormSpec, r: float, budget: SearchBudget) -> None:
    basis = section_bases(spec.dim, 1, budget.seed)[0]
    tu, tv, radii = circumradius_landscape(spec, r, budget.grid, basis)
    gu, gv = np.meshgrid(tu, tv, indexing="ij")
    rows = np.column_stack([gu.ravel(), gv.ravel(), radii.ravel()])
    np.savetxt(path, rows, delimiter=",", header="theta_u,theta_v,circumradius", comments="", fmt="%.17g")
    logger.info("landscape written to %s", path)


def cmd_classify(args) -> int:
    spec = load_norm_config(args.config)
    try:
        budget = SearchBudget(
            grid=args.grid,
            top_k=args.top_k,
            sections=args.sections,
            refine_iterations=args.refine_iterations,
            seed=args.seed,
            workers=args.workers,
        )
    except ValueError as e:
        raise ConfigError(str(e), "budget") from None
    center = np.zeros(spec.dim) if args.center is None else np.array(args.center)

    report = classify(spec, center, args.radius, ClassifierOptions(budget=budget, margin=args.margin))
    doc = report_document(report, spec)
    if args.format == "json":
        sys.stdout.write(doc.to_json())
    else:
        print(f"norm:      {doc.norm}")
        print(f"verdict:   {doc.verdict}")
        print(f"S >=       {report.s_estimate}  (r = {report.r!r})")
        if doc.witness is not None:
            print(f"witness:   {doc.witness.points}  sides {doc.witness.sides}")
        print(f"max |defect|: {report.max_abs_defect!r}")

    if args.emit_plot:
        _write_landscape(args.emit_plot, spec, args.radius, budget)
    return report.verdict.exit_code


def cmd_circumradius(args) -> int:
    if args.sides is not None:
        radius = circumradius(TriangleSides(*args.sides))
    else:
        spec: Optional[NormSpec] = load_norm_config(args.config) if args.config else None
        pts = load_table(args.points, rows=3, cols=None if spec is None else spec.dim)
        spec = spec or NormSpec.euclidean(pts.shape[1])
        radius = circumradius_points(spec, *pts)
    print(radius)
    return 0


def cmd_embed4(args) -> int:
    verdict = four_point_embeddable(DistanceMatrix4(load_table(args.distances, rows=4, cols=4)))
    doc = embedding_document(verdict)
    if args.format == "json":
        sys.stdout.write(doc.to_json())
    elif verdict.embeddable:
        print("embeddable")
        for row in doc.coordinates:
            print(" ".join(repr(x) for x in row))
    else:
        print(f"not embeddable: {doc.obstruction} ({verdict.obstruction.value!r})")
    return 0 if verdict.embeddable else 1


def cmd_energy(args) -> int:
    spec = load_norm_config(args.config) if args.config else None
    cloud = load_point_cloud(args.cloud, dim=args.dim, spec=spec)
    options = EnergyOptions(exact_limit=args.exact_limit, samples=args.samples, seed=args.seed, workers=args.workers)

    if args.energy == "thickness":
        value = thickness(cloud, options)
        doc = energy_document("thickness", len(cloud), value)
        text = str(value)
    else:
        estimate = estimate_menger_energy(cloud, args.p, options)
        doc = energy_document("menger", len(cloud), estimate, p=args.p)
        text = repr(estimate.value) if estimate.exact else f"{estimate.value!r} +- {estimate.standard_error!r}"

    if args.format == "json":
        sys.stdout.write(doc.to_json())
    else:
        print(text)
    return 0


COMMANDS = {
    "classify": cmd_classify,
    "circumradius": cmd_circumradius,
    "embed4": cmd_embed4,
    "energy": cmd_energy,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level, args.log_json)

    try:
        return COMMANDS[args.command](args)
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (CircumradiusError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DATA
    except Exception:
        logger.exception("unexpected failure in %s", args.command)
        return EXIT_SOFTWARE


if __name__ == "__main__":
    sys.exit(main())
