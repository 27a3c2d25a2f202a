"""Command-line front end: verification suites, volume evaluation, and
mesh / field-sample exports for figure reproduction.

Exit codes: 0 all checks pass, 1 at least one check failed (the report is
still written), 2 usage error.  ``LAWSONLAB_NODES`` overrides the default
quadrature node count.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Sequence

import numpy as np

from .lawson import LawsonParams, immerse
from .numerics import QuadratureSpec
from .spheres import frame_e1_e2, latlon_to_point
from .suites import SUITE_NAMES, run_verify
from .vfields import AngleField, ellipse_length, volume_of_field

_ENV_NODES = "LAWSONLAB_NODES"


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def _quadrature_spec(nodes: int | None) -> QuadratureSpec:
    if nodes is None:
        env = os.environ.get(_ENV_NODES)
        nodes = int(env) if env else None
    if nodes is None:
        return QuadratureSpec()
    return QuadratureSpec(nodes=nodes, nodes_y=max(8, nodes // 2))


def _cmd_verify(args: argparse.Namespace) -> int:
    spec = _quadrature_spec(args.nodes)
    report = run_verify(suite=args.suite, seed=args.seed, out=args.json, spec=spec)
    for entry in sorted(report.entries, key=lambda e: e.check_id):
        status = "PASS" if entry.passed else "FAIL"
        print(f"[{status}] {entry.check_id}: metric={entry.metric:.3e} tolerance={entry.tolerance:.3e}")
    failed = report.failed_ids()
    print(f"{len(report.entries) - len(failed)}/{len(report.entries)} checks passed")
    if failed:
        print("failed: " + ", ".join(failed))
        return 1
    return 0


def _cmd_volume(args: argparse.Namespace) -> int:
    spec = _quadrature_spec(args.nodes)
    volume = volume_of_field(AngleField(args.k), spec)
    bound = math.pi * ellipse_length(args.k, spec)
    print(f"volume(k={args.k}) = {_fmt(volume)}")
    print(f"pi * ellipse_length({args.k}) = {_fmt(bound)}")
    print(f"relative defect = {_fmt(abs(volume - bound) / bound)}")
    return 0


def _surface_grid(width: int, height: int) -> tuple[np.ndarray, np.ndarray]:
    # Half-cell offset keeps projection poles off the sample grid.
    xs = -math.pi + 2.0 * math.pi * (np.arange(width) + 0.5) / width
    ys = -math.pi + 2.0 * math.pi * (np.arange(height) + 0.5) / height
    return xs, ys


def _project(points: np.ndarray, radius: float, mode: str) -> np.ndarray:
    if mode == "drop4":
        return points[..., :3]
    # Stereographic from (0, 0, 0, -R) onto the equatorial 3-plane.
    denom = radius + points[..., 3]
    if np.any(np.abs(denom) < 1e-9):
        raise ValueError("projection pole on the sample grid; use --project drop4")
    return radius * points[..., :3] / denom[..., None]


def _cmd_export_surface(args: argparse.Namespace) -> int:
    try:
        width, height = (int(part) for part in args.res.lower().split("x"))
    except ValueError:
        raise SystemExit(2)
    if width < 8 or height < 8:
        print("resolution must be at least 8x8", file=sys.stderr)
        return 2
    params = LawsonParams(args.n, args.m, float(args.radius))
    xs, ys = _surface_grid(width, height)
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    points = immerse(params, gx, gy)

    if args.format == "csv":
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write("x,y,p1,p2,p3,p4\n")
            for j in range(height):
                for i in range(width):
                    row = [gx[i, j], gy[i, j], *points[i, j]]
                    handle.write(",".join(_fmt(v) for v in row) + "\n")
        return 0

    projected = _project(points, params.radius, args.project)
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(f"# surface tau_{args.n}_{args.m}, radius {params.radius}\n")
        handle.write(f"# projection: {args.project}" + (
            f" from (0,0,0,{-params.radius})\n" if args.project == "stereo" else "\n"
        ))
        handle.write(f"# grid: {width}x{height}, periodic wrap in both directions\n")
        for j in range(height):
            for i in range(width):
                x3, y3, z3 = projected[i, j]
                handle.write(f"v {_fmt(x3)} {_fmt(y3)} {_fmt(z3)}\n")
        for j in range(height):
            for i in range(width):
                # Vertex (i, j) has 1-based index j*width + i + 1.
                v00 = j * width + i + 1
                v10 = j * width + (i + 1) % width + 1
                v01 = ((j + 1) % height) * width + i + 1
                v11 = ((j + 1) % height) * width + (i + 1) % width + 1
                handle.write(f"f {v00} {v10} {v11}\n")
                handle.write(f"f {v00} {v11} {v01}\n")
    return 0


def _cmd_export_field(args: argparse.Namespace) -> int:
    if args.res < 8:
        print("resolution must be at least 8", file=sys.stderr)
        return 2
    field = AngleField(args.k)
    margin = 1e-2
    lats = np.linspace(-0.5 * math.pi + margin, 0.5 * math.pi - margin, args.res)
    lons = 2.0 * math.pi * np.arange(args.res) / args.res
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write("alpha,t,p1,p2,p3,v1,v2,v3\n")
        for lat in lats:
            for lon in lons:
                p = latlon_to_point(float(lat), float(lon))
                element = field.at(p)
                row = [lat, lon, *p.vector, *element.vector]
                handle.write(",".join(_fmt(v) for v in row) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lawsonlab",
        description="Verification suites and data exports for minimal immersions "
        "of round 3-spheres and unit vector fields on the punctured 2-sphere.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", choices=SUITE_NAMES, default="all")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--json", type=str, default=None, help="write the JSON report here")
    verify.add_argument("--nodes", type=int, default=None, help="quadrature nodes (first axis)")
    verify.set_defaults(func=_cmd_verify)

    volume = sub.add_parser("volume", help="area of the index-k unit field")
    volume.add_argument("--k", type=int, required=True)
    volume.add_argument("--nodes", type=int, default=None)
    volume.set_defaults(func=_cmd_volume)

    surface = sub.add_parser("export-surface", help="sample an immersion to OBJ or CSV")
    surface.add_argument("--n", type=int, required=True)
    surface.add_argument("--m", type=int, required=True)
    surface.add_argument("--radius", type=float, default=2.0)
    surface.add_argument("--res", type=str, default="64x32", help="WxH sample grid")
    surface.add_argument("--format", choices=("obj", "csv"), default="obj")
    surface.add_argument("--project", choices=("stereo", "drop4"), default="stereo")
    surface.add_argument("--out", type=str, required=True)
    surface.set_defaults(func=_cmd_export_surface)

    fieldp = sub.add_parser("export-field", help="sample the index-k field to CSV")
    fieldp.add_argument("--k", type=int, required=True)
    fieldp.add_argument("--res", type=int, default=64)
    fieldp.add_argument("--out", type=str, required=True)
    fieldp.set_defaults(func=_cmd_export_field)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
