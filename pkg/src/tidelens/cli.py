"""Command-line front end.

    tidelens --config data/sample/config.json info
    tidelens --config ... flood --year 2100 --out-mask mask.pgm --out-stats stats.json
    tidelens --config ... mesh --year 2050 --out-dir build/meshes
    tidelens --config ... curve
    tidelens --config ... serve --port 9000
    tidelens --config ... report --out-dir build/report

--config falls back to $TIDELENS_CONFIG.  Exit codes: 0 success, 1 data
error (unreadable/invalid dataset), 2 usage error (bad flags, bad year).
File outputs are byte-identical to what the HTTP service returns for the
same dataset and year.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .config import load_config
from .engine import Engine
from .errors import TidelensError, UsageError
from .sealevel import TIMELINE, slider_for_year

EXIT_OK = 0
EXIT_DATA = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tidelens",
        description="Coastal sea-level-rise explorer: flood masks, meshes, "
        "reports, and a viewer service over a DEM and projection curve.",
    )
    parser.add_argument(
        "--config",
        help="path to the dataset config JSON (default: $TIDELENS_CONFIG)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("info", help="print a dataset summary")

    flood = sub.add_parser("flood", help="compute the flood mask for one year")
    flood.add_argument("--year", type=int, required=True, help="calendar year 2021-2100")
    flood.add_argument("--out-mask", type=Path, help="write the mask as binary PGM")
    flood.add_argument("--out-stats", type=Path, help="write flood stats as JSON")

    mesh = sub.add_parser("mesh", help="export terrain and ocean meshes as OBJ")
    mesh.add_argument("--year", type=int, required=True, help="calendar year 2021-2100")
    mesh.add_argument("--out-dir", type=Path, required=True)
    mesh.add_argument(
        "--exaggeration", type=float, help="override the configured vertical exaggeration"
    )

    sub.add_parser("curve", help="print the per-year water level table")

    serve = sub.add_parser("serve", help="run the HTTP viewer service")
    serve.add_argument("--port", type=int, help="override the configured port")

    report = sub.add_parser("report", help="render the stats table and figures")
    report.add_argument("--out-dir", type=Path, required=True)
    report.add_argument(
        "--map-years",
        default="2021,2050,2100",
        help="comma-separated years to render flood maps for (default 2021,2050,2100)",
    )
    return parser


def _check_year(year: int) -> None:
    slider_for_year(year)  # YearOutOfRange -> usage error


def _cmd_info(engine: Engine) -> int:
    dem = engine.dem
    xmin, ymin, xmax, ymax = dem.extent
    nodata_cells = int(dem.nodata_mask().sum())
    print(f"grid:      {dem.nrows} rows x {dem.ncols} cols, cellsize {dem.cellsize} m")
    print(f"extent:    x [{xmin}, {xmax}] m, y [{ymin}, {ymax}] m")
    print(f"nodata:    {nodata_cells} cells (sentinel {dem.nodata_value})")
    print(
        f"curve:     {len(engine.curve.anchors)} anchors, "
        f"{engine.curve.years[0]}-{engine.curve.years[-1]}, "
        f"levels {engine.curve.levels[0]} to {engine.curve.levels[-1]} m"
    )
    print(
        f"timeline:  {TIMELINE.step_count} steps, "
        f"{TIMELINE.start_year}-{TIMELINE.end_year}"
    )
    origin = engine.config.anchor.origin_geo
    print(f"anchor:    ({origin.lat}, {origin.lon}) -> local {engine.config.anchor.origin_local}")
    print(f"pois:      {len(engine.catalog)}")
    for poi in engine.catalog:
        print(f"  {poi.id}: {poi.name}")
    return EXIT_OK


def _cmd_flood(engine: Engine, args: argparse.Namespace) -> int:
    stats_bytes = engine.stats_json_bytes(args.year)
    if args.out_mask:
        args.out_mask.write_bytes(engine.pgm_bytes(args.year))
    if args.out_stats:
        args.out_stats.write_bytes(stats_bytes)
    else:
        sys.stdout.write(stats_bytes.decode("utf-8"))
    return EXIT_OK


def _cmd_mesh(engine: Engine, args: argparse.Namespace) -> int:
    args.out_dir.mkdir(parents=True, exist_ok=True)
    (args.out_dir / "terrain.obj").write_bytes(engine.terrain_obj_bytes)
    (args.out_dir / "ocean.obj").write_bytes(engine.ocean_obj_bytes(args.year))
    print(f"wrote {args.out_dir / 'terrain.obj'} and {args.out_dir / 'ocean.obj'}")
    return EXIT_OK


def _cmd_curve(engine: Engine) -> int:
    for year, level in engine.curve_rows():
        print(f"{year},{level!r}")
    return EXIT_OK


def _cmd_report(engine: Engine, args: argparse.Namespace, map_years: list[int]) -> int:
    from .report import render_report

    written = render_report(engine, args.out_dir, map_years)
    for path in written:
        print(f"wrote {path}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    config_path = args.config or os.environ.get("TIDELENS_CONFIG")
    if not config_path:
        parser.error("--config is required (or set TIDELENS_CONFIG)")

    try:
        # usage validation first: a bad year must not depend on data health
        if args.command in ("flood", "mesh"):
            _check_year(args.year)
        map_years: list[int] = []
        if args.command == "report":
            try:
                map_years = [int(y) for y in args.map_years.split(",") if y.strip()]
            except ValueError:
                raise UsageError(f"--map-years {args.map_years!r} is not a year list") from None
            for year in map_years:
                _check_year(year)
        if args.command == "serve" and args.port is not None:
            if not 1 <= args.port <= 65535:
                raise UsageError(f"port {args.port} outside [1, 65535]")

        config = load_config(config_path)
        if args.command == "mesh" and args.exaggeration is not None:
            import dataclasses

            config = dataclasses.replace(config, vertical_exaggeration=args.exaggeration)
        if args.command == "serve" and args.port is not None:
            import dataclasses

            config = dataclasses.replace(
                config, listen=dataclasses.replace(config.listen, port=args.port)
            )

        if args.command == "serve":
            from .service import serve as run_service

            run_service(config)
            return EXIT_OK

        engine = Engine(config)
        if args.command == "info":
            return _cmd_info(engine)
        if args.command == "flood":
            return _cmd_flood(engine, args)
        if args.command == "mesh":
            return _cmd_mesh(engine, args)
        if args.command == "curve":
            return _cmd_curve(engine)
        if args.command == "report":
            return _cmd_report(engine, args, map_years)
        parser.error(f"unknown command {args.command!r}")
    except UsageError as e:
        print(f"tidelens: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except TidelensError as e:
        print(f"tidelens: {e}", file=sys.stderr)
        return EXIT_DATA
    except OSError as e:
        print(f"tidelens: {e}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
