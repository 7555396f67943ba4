#!/usr/bin/env python3
"""
Command-line front end for spinscreen.

Subcommands:
    sixj      exact or floating-point value of one 6j symbol
    screen    the full (j12, j23) screen with geometric classification
    curves    caustic and ridge polylines, optionally swept over one parameter
    limit3j   convergence of scaled 6j values and determinants to the 3j limit
    symmetry  Regge data, orbits, canonical form and degeneracy flags
    figure    data files of a named figure preset

Exit codes: 0 ok, 2 usage or parse error, 3 empty screen domain,
4 numerical failure.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import pandas as pd
from pydantic import ValidationError

from src.angular.half_int import HalfInt
from src.angular.labels import SixJLabels
from src.cli.writers import (curves_frame, curves_meta, screen_document, screen_frame,
                             screen_meta, write_json, write_table)
from src.config.figures import get_preset, list_presets, parse_sweep, preset_quadruples
from src.config.settings import (JobConfig, Tolerances, load_defaults, parse_tolerance_overrides,
                                 resolve_threads)
from src.errors import (EmptyDomain, GeometryError, InvalidSchedule, LabelError,
                        RecurrenceBreakdown, SpinScreenError, UnknownPreset)
from src.exact.factorials import set_factorial_cap
from src.exact.limit import limit_labels_from_fd, threej_limit_estimate
from src.exact.racah import sixj_exact
from src.geometry.caustics import (CurveSample, ScreenParams, check_curves, mirror_curves, sample_caustic,
                                  sample_ridges)
from src.geometry.classify import classify_screen
from src.geometry.threej_caustic import limit_det_table
from src.recurrence.screen import build_screen, exact_screen, transpose_defect
from src.symmetry.flags import corner_points, degeneracy_flags, piero_axis
from src.symmetry.orbits import canonical_form, orbit_sizes
from src.symmetry.regge import regge_rho, regge_rho_quadruple, regge_twin_quadruple

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_EMPTY = 3
EXIT_NUMERIC = 4

Quad = Tuple[HalfInt, HalfInt, HalfInt, HalfInt]


def _int_list(text: str) -> List[int]:
    return [int(x.strip()) for x in text.split(",") if x.strip()]


def _job(args: argparse.Namespace, params: Sequence[str]) -> JobConfig:
    return JobConfig(
        command=args.command,
        params=list(params),
        output=getattr(args, "out", None),
        format=getattr(args, "format", "csv"),
        n_points=400 if getattr(args, "n", None) is None else args.n,
        tolerances=parse_tolerance_overrides(getattr(args, "tol", None)),
        threads=1 if getattr(args, "threads", None) is None else args.threads,
        mirror=getattr(args, "mirror", False),
        stamp=getattr(args, "stamp", False),
    )


def _tolerances(job: JobConfig, defaults: Optional[dict] = None) -> Tolerances:
    tol = job.resolved_tolerances(defaults)
    set_factorial_cap(tol.factorial_cap)
    logger.debug(f"tolerances: {tol}")
    return tol


def _curves(quad: Quad, which: str, n_points: int, mirror: bool, tol: Tolerances) -> List[CurveSample]:
    curves: List[CurveSample] = []
    if which in ("caustic", "both"):
        curves.append(sample_caustic(*quad, n_points=n_points))
    if which in ("ridges", "both"):
        curves.extend(sample_ridges(*quad, n_points=n_points))
    check_curves(curves, ScreenParams.from_labels(*quad), tol.caustic_rel, tol.ridge_rel)
    return mirror_curves(curves) if mirror else curves


def cmd_sixj(args: argparse.Namespace) -> int:
    """Print one 6j symbol."""
    job = _job(args, args.labels)
    labels = SixJLabels(*job.labels())
    _tolerances(job)
    failed = labels.failed_triad()
    if failed is not None:
        print(f"0 (triangle violation {failed})")
        return EXIT_OK
    value = sixj_exact(labels)
    if args.float:
        print(format(value.to_float(), ".17g"))
    else:
        print(f"{value} = {value.to_float():.17g}")
    return EXIT_OK


def cmd_screen(args: argparse.Namespace) -> int:
    """Build a screen and write it as CSV or JSON."""
    job = _job(args, args.labels)
    quad = tuple(job.labels())
    tol = _tolerances(job)
    threads = job.threads if args.threads is not None else resolve_threads()
    if args.exact:
        screen = exact_screen(*quad)
    else:
        screen = build_screen(*quad, threads=threads, fallback_exact=args.fallback_exact,
                              overflow_rescale=tol.overflow_rescale)
    if screen.column_defect > tol.unitarity:
        logger.warning(f"column unitarity defect {screen.column_defect:.3g} exceeds {tol.unitarity:.3g}")
    if piero_axis(*quad) is not None:
        defect = transpose_defect(screen)
        if defect is not None and defect > tol.symmetry:
            logger.warning(f"diagonal symmetry defect {defect:.3g} exceeds {tol.symmetry:.3g}")

    params = ScreenParams.from_labels(*quad)
    regions = classify_screen(params, screen.j12_axis() + 0.5, screen.j23_axis() + 0.5, tol.caustic_rel)
    logger.info(f"region fractions: {regions}")
    if job.format == "json":
        curves = _curves(quad, "both", job.n_points, job.mirror, tol) if args.with_curves else []
        write_json(screen_document(screen, curves, regions), job.output)
    else:
        write_table(screen_frame(screen, tol.caustic_rel), screen_meta(screen), job.output, job.stamp)
    return EXIT_OK


def cmd_curves(args: argparse.Namespace) -> int:
    """Sample caustic and ridges, optionally over a sweep of one parameter."""
    job = _job(args, args.labels)
    tol = _tolerances(job)
    base = dict(zip(("j1", "j2", "j3", "j"), job.labels()))
    if args.sweep:
        name, values = parse_sweep(args.sweep)
    else:
        name, values = None, [None]

    frames = []
    meta: dict = {"sweep": args.sweep, "base": " ".join(str(x) for x in job.labels())}
    for v in values:
        if name is not None:
            base[name] = v
        quad = (base["j1"], base["j2"], base["j3"], base["j"])
        curves = _curves(quad, args.which, job.n_points, job.mirror, tol)
        frame = curves_frame(curves)
        if name is not None:
            frame.insert(0, name, str(v))
        frames.append(frame)
        if name is None:
            meta = curves_meta(quad, curves)
    write_table(pd.concat(frames, ignore_index=True), meta, job.output, job.stamp)
    return EXIT_OK


def cmd_limit3j(args: argparse.Namespace) -> int:
    """Value and determinant convergence towards a 3j symbol."""
    job = _job(args, args.labels)
    defaults = load_defaults()
    _tolerances(job, defaults)
    h = job.labels()
    j1, j2, j3 = h[:3]
    if args.fd:
        if len(h) != 5:
            raise LabelError("--fd expects j1 j2 j3 F D")
        l1, l2, l3 = limit_labels_from_fd(h[3], h[4])
    else:
        if len(h) != 6:
            raise LabelError("expected j1 j2 j3 l1 l2 l3")
        l1, l2, l3 = h[3:]
    schedule = _int_list(args.R_schedule) if args.R_schedule else defaults["limit3j"]["R_schedule"]
    det_schedule = (_int_list(args.det_R_schedule) if args.det_R_schedule
                    else defaults["limit3j"]["det_R_schedule"])

    rows = threej_limit_estimate(j1, j2, j3, l1, l2, l3, schedule)
    values = pd.DataFrame({
        "R": [r.R for r in rows],
        "scaled_6j": [r.scaled for r in rows],
        "exact_3j": [r.target for r in rows],
        "abs_error": [r.abs_error for r in rows],
        "sign_match": [r.sign_match for r in rows],
    })
    dets = limit_det_table(j1, j2, j3, l1, l2, l3, det_schedule)
    ratios = pd.DataFrame({
        "R": [r.R for r in dets],
        "scaled_det5": [r.scaled for r in dets],
        "det4": [r.det4 for r in dets],
        "ratio": [r.ratio for r in dets],
        "error": [r.error for r in dets],
    })
    meta = {"threej": f"({j1} {j2} {j3}; {l3 - l2} {l1 - l3} {l2 - l1})",
            "offsets": f"{l1} {l2} {l3}"}
    write_table(values, {**meta, "table": "value convergence"}, job.output, job.stamp)
    det_out = job.output.with_name(job.output.stem + "_det" + job.output.suffix) if job.output else None
    write_table(ratios, {**meta, "table": "determinant ratio"}, det_out, job.stamp)
    return EXIT_OK


def cmd_symmetry(args: argparse.Namespace) -> int:
    """Print symmetry data of a quadruple or a full symbol."""
    job = _job(args, args.labels)
    h = job.labels()
    if len(h) not in (4, 6):
        raise LabelError("expected j1 j2 j3 j [j12 j23]")
    j1, j2, j3, j = h[:4]
    everything = not (args.orbit or args.canonical or args.regge or args.flags)

    if everything or args.regge:
        data = regge_rho_quadruple(j1, j2, j3, j)
        twin = regge_twin_quadruple(j1, j2, j3, j)
        print(f"rho: {data.rho}")
        print(f"s: {data.s}")
        print(f"twin: {' '.join(str(v) for v in twin)}")
        print(f"twin_distinct: {twin != (j1, j2, j3, j)}")
    if everything or args.flags:
        flags = degeneracy_flags(j1, j2, j3, j)
        print(f"flags: {','.join(sorted(flags)) or 'none'}")
        for flag, (x, y) in corner_points(j1, j2, j3, j).items():
            print(f"corner {flag}: ({x}, {y})")
        cert = piero_axis(j1, j2, j3, j)
        if cert is None:
            contact = "; ".join(f"degeneracy {f} contacts corner ({x}, {y})"
                                for f, (x, y) in corner_points(j1, j2, j3, j).items())
            print("piero: no diagonal certificate" + (f"; {contact}" if contact else ""))
        else:
            print(f"piero: {cert}")
    if len(h) == 6 and (everything or args.orbit or args.canonical):
        labels = SixJLabels(j1, j2, h[4], j3, j, h[5])
        if not labels.is_valid():
            raise LabelError(f"{labels} violates triangle {labels.failed_triad()}")
        if everything or args.orbit:
            sizes = orbit_sizes(labels)
            print(f"orbit_classical: {sizes['classical']}")
            print(f"orbit_full: {sizes['full']}")
            print(f"symbol_rho: {regge_rho(labels).rho}")
        if everything or args.canonical:
            print(f"canonical: {canonical_form(labels)}")
    elif everything or args.orbit:
        twin = regge_twin_quadruple(j1, j2, j3, j)
        print(f"orbit_screen: {1 if twin == (j1, j2, j3, j) else 2}")
    return EXIT_OK


def cmd_figure(args: argparse.Namespace) -> int:
    """Write the data files of a figure preset."""
    preset = get_preset(args.name)
    defaults = load_defaults()
    job = _job(args, [])
    tol = _tolerances(job, defaults)
    out_dir = Path(args.out_dir)
    n_points = defaults["sampling"]["n_points"] if args.n is None else job.n_points
    max_side = defaults["sampling"]["max_screen_side"]
    quads = preset_quadruples(preset)

    for quad in quads:
        suffix = f"_j{quad[3]}".replace("/", "_") if preset.sweep else ""
        curves = _curves(quad, "both", n_points, args.mirror, tol)
        write_table(curves_frame(curves), curves_meta(quad, curves),
                    out_dir / f"{preset.name}{suffix}_curves.csv", args.stamp)
        if preset.sweep:
            continue
        params = ScreenParams.from_labels(*quad)
        side = int(round(params.x_bounds[1] - params.x_bounds[0]))
        if side > max_side:
            logger.info(f"skipping screen for {preset.name}: side {side} exceeds {max_side}")
            continue
        screen = build_screen(*quad, threads=resolve_threads(defaults), fallback_exact=True,
                              overflow_rescale=tol.overflow_rescale)
        write_table(screen_frame(screen), screen_meta(screen),
                    out_dir / f"{preset.name}_screen.csv", args.stamp)
    print(f"{preset.name}: {preset.caption} ({len(quads)} parameter set(s)) -> {out_dir}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    parser = argparse.ArgumentParser(prog="spinscreen", description="6j symbols, screens and tetrahedron geometry")
    parser.add_argument("--verbose", action="store_true", help="Debug logging on stderr")
    tolerance = argparse.ArgumentParser(add_help=False)
    tolerance.add_argument("--tol", action="append", metavar="KEY=VALUE",
                           help="Override one tolerance of config/defaults.json, repeatable")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sixj", help="Evaluate one 6j symbol", parents=[tolerance])
    p.add_argument("labels", nargs=6, metavar="J", help="j1 j2 j12 j3 j j23 as 'n' or 'n/2'")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="Print r * sqrt(d) = value (default)")
    mode.add_argument("--float", action="store_true", help="Print 17 significant digits only")
    p.set_defaults(handler=cmd_sixj)

    p = sub.add_parser("screen", help="Build a full screen", parents=[tolerance])
    p.add_argument("labels", nargs=4, metavar="J", help="j1 j2 j3 j")
    p.add_argument("--out", type=Path, help="Output file (stdout if omitted)")
    p.add_argument("--format", choices=["csv", "json"], default="csv", help="Output format")
    p.add_argument("--threads", type=int, help="Worker threads (default from SPINSCREEN_THREADS)")
    p.add_argument("--exact", action="store_true", help="Evaluate every entry exactly")
    p.add_argument("--fallback-exact", action="store_true", help="Recover broken columns exactly")
    p.add_argument("--with-curves", action="store_true", help="Embed curves in JSON output")
    p.add_argument("--n", type=int, default=400, help="Curve sampling density")
    p.add_argument("--mirror", action="store_true", help="Add reflected curve copies")
    p.add_argument("--stamp", action="store_true", help="Timestamp the header")
    p.set_defaults(handler=cmd_screen)

    p = sub.add_parser("curves", help="Sample caustic and ridges", parents=[tolerance])
    p.add_argument("labels", nargs=4, metavar="J", help="j1 j2 j3 j")
    p.add_argument("--which", choices=["caustic", "ridges", "both"], default="both")
    p.add_argument("--n", type=int, default=400, help="Sampling density")
    p.add_argument("--out", type=Path, help="Output file (stdout if omitted)")
    p.add_argument("--mirror", action="store_true", help="Add reflected copies in negative quadrants")
    p.add_argument("--sweep", help="Sweep one parameter, e.g. j=25:275:25")
    p.add_argument("--stamp", action="store_true", help="Timestamp the header")
    p.set_defaults(handler=cmd_curves)

    p = sub.add_parser("limit3j", help="3j symbol as a limit of 6j symbols", parents=[tolerance])
    p.add_argument("labels", nargs="+", metavar="J", help="j1 j2 j3 l1 l2 l3 (or j1 j2 j3 F D with --fd)")
    p.add_argument("--fd", action="store_true", help="Read the offsets as F D")
    p.add_argument("--R-schedule", dest="R_schedule", help="Comma-separated R values")
    p.add_argument("--det-R-schedule", dest="det_R_schedule", help="Comma-separated R values for determinants")
    p.add_argument("--out", type=Path, help="Output file; the determinant table goes next to it")
    p.add_argument("--stamp", action="store_true", help="Timestamp the header")
    p.set_defaults(handler=cmd_limit3j)

    p = sub.add_parser("symmetry", help="Symmetry report")
    p.add_argument("labels", nargs="+", metavar="J", help="j1 j2 j3 j [j12 j23]")
    p.add_argument("--orbit", action="store_true")
    p.add_argument("--canonical", action="store_true")
    p.add_argument("--regge", action="store_true")
    p.add_argument("--flags", action="store_true")
    p.set_defaults(handler=cmd_symmetry)

    p = sub.add_parser("figure", help="Write figure data files", parents=[tolerance],
                       description="Presets: " + ", ".join(list_presets()))
    p.add_argument("name", help="Preset name, e.g. fig1a")
    p.add_argument("--out-dir", default=".", help="Directory for the CSV files")
    p.add_argument("--n", type=int, help="Curve sampling density")
    p.add_argument("--mirror", action="store_true", help="Add reflected curve copies")
    p.add_argument("--stamp", action="store_true", help="Timestamp the headers")
    p.set_defaults(handler=cmd_figure)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main function for command-line execution."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    try:
        return args.handler(args)
    except (LabelError, UnknownPreset, InvalidSchedule, ValidationError, ValueError) as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_USAGE
    except EmptyDomain as e:
        logger.error(f"Empty screen: {e}")
        return EXIT_EMPTY
    except (RecurrenceBreakdown, GeometryError) as e:
        logger.error(f"Numerical failure: {e}")
        return EXIT_NUMERIC
    except SpinScreenError as e:
        logger.error(f"spinscreen error: {e}")
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
