"""HTTP facade over the engine.

Every data endpoint returns bytes produced by the Engine encoders, so
responses are byte-deterministic and identical to CLI output for the
same dataset.  Errors come back as JSON {"error", "message"} with 400
for bad parameters and 404 for unknown resources.

    GET /api/meta                  dataset + timeline summary
    GET /api/curve                 projection curve CSV, verbatim file bytes
    GET /api/pois                  POI catalog with scene-space positions
    GET /api/poi/{id}?year=Y       one POI evaluated at a year
    GET /api/flood?year=Y          run-length JSON flood mask
    GET /api/flood.pgm?year=Y      binary PGM flood mask
    GET /api/mesh/terrain.obj      terrain mesh
    GET /api/mesh/ocean.obj?year=Y water surface mesh for a year
    GET /api/stats?year=Y          flooded cells/area/fraction
    /media/*, /*                   optional static file trees
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from .config import AppConfig
from .engine import Engine
from .errors import TidelensError, UsageError
from .sealevel import TIMELINE


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _year_param(request: Request) -> int:
    raw = request.query_params.get("year")
    if raw is None:
        raise ApiError(400, "MissingParameter", "year query parameter is required")
    try:
        year = int(raw)
    except ValueError:
        raise ApiError(400, "BadParameter", f"year={raw!r} is not an integer") from None
    if not TIMELINE.start_year <= year <= TIMELINE.end_year:
        raise ApiError(
            400,
            "YearOutOfRange",
            f"year {year} outside [{TIMELINE.start_year}, {TIMELINE.end_year}]",
        )
    return year


def build_app(engine: Engine) -> FastAPI:
    app = FastAPI(title="tidelens", docs_url=None, redoc_url=None, openapi_url=None)

    @app.exception_handler(ApiError)
    async def _api_error(_request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status, content={"error": exc.code, "message": exc.message}
        )

    @app.exception_handler(TidelensError)
    async def _engine_error(_request, exc: TidelensError):
        status = 400 if isinstance(exc, UsageError) else 500
        return JSONResponse(
            status_code=status,
            content={"error": type(exc).__name__, "message": str(exc)},
        )

    @app.get("/api/meta")
    def meta():
        return Response(engine.meta_bytes, media_type="application/json")

    @app.get("/api/curve")
    def curve():
        return Response(engine.curve_text, media_type="text/csv; charset=utf-8")

    @app.get("/api/pois")
    def pois():
        return Response(engine.pois_bytes, media_type="application/json")

    @app.get("/api/poi/{poi_id}")
    def poi(poi_id: str, request: Request):
        year = _year_param(request)
        try:
            body = engine.poi_view_bytes(poi_id, year)
        except KeyError:
            raise ApiError(404, "UnknownPoi", f"no POI with id {poi_id!r}") from None
        return Response(body, media_type="application/json")

    @app.get("/api/flood")
    def flood(request: Request):
        return Response(
            engine.rle_bytes(_year_param(request)), media_type="application/json"
        )

    @app.get("/api/flood.pgm")
    def flood_pgm(request: Request):
        return Response(
            engine.pgm_bytes(_year_param(request)),
            media_type="image/x-portable-graymap",
        )

    @app.get("/api/mesh/terrain.obj")
    def mesh_terrain():
        return Response(engine.terrain_obj_bytes, media_type="text/plain; charset=utf-8")

    @app.get("/api/mesh/ocean.obj")
    def mesh_ocean(request: Request):
        return Response(
            engine.ocean_obj_bytes(_year_param(request)),
            media_type="text/plain; charset=utf-8",
        )

    @app.get("/api/stats")
    def stats(request: Request):
        return Response(
            engine.stats_json_bytes(_year_param(request)), media_type="application/json"
        )

    if engine.config.media_dir is not None:
        app.mount("/media", StaticFiles(directory=engine.config.media_dir), name="media")
    if engine.config.static_dir is not None:
        app.mount(
            "/", StaticFiles(directory=engine.config.static_dir, html=True), name="static"
        )

    return app


def create_app(config: AppConfig) -> FastAPI:
    """Load the dataset (failing fast on any data error) and build the app."""
    return build_app(Engine(config))


def serve(config: AppConfig) -> None:
    """Run the service with uvicorn; blocks until interrupted."""
    import uvicorn

    app = create_app(config)
    uvicorn.run(app, host=config.listen.host, port=config.listen.port, log_level="info")
