"""FastAPI service wrapping the geometry kernel.

Every operation is pure and stateless, so the service holds no state at all;
constructions return their SVG artifacts inline and the client decides where
to write them.  /construct/run reports script problems in-band with the CLI
exit-code convention (0 ok, 1 assert failed, 2 malformed/infeasible);
domain errors on the plain computation endpoints map to HTTP 422.
"""

from __future__ import annotations

import math

from fastapi import FastAPI, HTTPException

from .. import measure, mensura, solids, verify
from ..construct import is_constructible_ngon, parse_program
from ..construct.vm import VM
from ..errors import (
    AssertionFailedError,
    ConstructionError,
    DomainError,
    GeometryError,
    InfeasibleConstructionError,
    ScriptError,
)
from ..plane import Arc, Circle, Line, Point
from ..scalar import Tolerance
from . import schemas

GOLDEN = (1 + math.sqrt(5.0)) / 2

_NAMED_VALUES = {
    "sqrt2": math.sqrt(2.0),
    "pi": math.pi,
    "golden": GOLDEN,
    "phi": GOLDEN,
    "e": math.e,
}

_SOLID_KINDS = {
    "box": solids.Box,
    "prism": solids.Prism,
    "pyramid": solids.Pyramid,
    "pyramid_frustum": solids.PyramidFrustum,
    "cylinder": solids.Cylinder,
    "cone": solids.Cone,
    "cone_frustum": solids.ConeFrustum,
    "sphere": solids.Sphere,
    "spherical_sector": solids.SphericalSector,
    "spherical_segment": solids.SphericalSegmentSolid,
    "spherical_zone": solids.SphericalZoneSurface,
}


def _object_out(name: str, obj, note: str | None) -> schemas.ObjectOut:
    if isinstance(obj, Point):
        return schemas.ObjectOut(name=name, kind="point",
                                 data={"x": obj.x, "y": obj.y}, note=note)
    if isinstance(obj, Line):
        return schemas.ObjectOut(name=name, kind="line",
                                 data={"a": obj.a, "b": obj.b, "c": obj.c}, note=note)
    if isinstance(obj, Circle):
        return schemas.ObjectOut(
            name=name, kind="circle",
            data={"cx": obj.center.x, "cy": obj.center.y, "r": obj.radius}, note=note)
    assert isinstance(obj, Arc)
    return schemas.ObjectOut(
        name=name, kind="arc",
        data={"cx": obj.circle.center.x, "cy": obj.circle.center.y,
              "r": obj.circle.radius, "start": obj.start_angle.radians,
              "sweep": obj.sweep.radians}, note=note)


def create_app() -> FastAPI:
    app = FastAPI(
        title="euclidkit",
        description="Ruler-and-compass construction VM, mensuration, continued "
                    "fractions, and the polygon-doubling pi engine as a service.",
        version="0.1.0",
    )

    @app.get("/health")
    def health() -> dict[str, str]:
        return {"status": "ok"}

    @app.post("/construct/run", response_model=schemas.ConstructResponse)
    def construct_run(request: schemas.ConstructRequest) -> schemas.ConstructResponse:
        tolerance = Tolerance(request.tolerance, request.tolerance) \
            if request.tolerance else Tolerance()
        vm = VM(tolerance=tolerance, capture_emits=True)
        error: schemas.ErrorOut | None = None
        exit_code = 0
        try:
            program = parse_program(request.script)
            vm.run(program)
        except ScriptError as exc:
            error = schemas.ErrorOut(kind="parse-error", message=exc.message,
                                     line=exc.line, column=exc.column)
            exit_code = 2
        except AssertionFailedError as exc:
            error = schemas.ErrorOut(kind="assert-failed", message=str(exc), line=exc.line)
            exit_code = 1
        except InfeasibleConstructionError as exc:
            error = schemas.ErrorOut(kind="infeasible", message=str(exc))
            exit_code = 2
        except (ConstructionError, DomainError) as exc:
            error = schemas.ErrorOut(kind="construction-error", message=str(exc))
            exit_code = 2
        ws = vm.ws
        return schemas.ConstructResponse(
            exit_code=exit_code,
            objects=[_object_out(name, obj, ws.macro_notes.get(name))
                     for name, obj in ws.objects.items()],
            asserts=[schemas.AssertOut(
                description=r.description, passed=r.passed, measured=r.measured,
                expected=r.expected, tolerance=r.tolerance, line=r.line)
                for r in ws.assert_results],
            artifacts=dict(ws.emitted),
            error=error,
        )

    @app.post("/pi/table", response_model=schemas.PiTableResponse)
    def pi_table(request: schemas.PiTableRequest) -> schemas.PiTableResponse:
        try:
            table = mensura.pi_doubling_table(request.rounds, request.stabilized,
                                              request.start_n, request.max_rounds)
        except DomainError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return schemas.PiTableResponse(rows=[
            schemas.PiRowOut(n=row.n, side=row.side, perimeter=row.perimeter,
                             pi_estimate=row.perimeter / 2,
                             error_vs_reference=row.perimeter / 2 - math.pi)
            for row in table.rows])

    @app.post("/cf/expand", response_model=schemas.CfResponse)
    def cf_expand(request: schemas.CfRequest) -> schemas.CfResponse:
        try:
            if request.a is not None and request.b is not None:
                a, b = request.a, request.b
            elif request.value is not None:
                text = request.value.strip().lower()
                if text in _NAMED_VALUES:
                    a = _NAMED_VALUES[text]
                else:
                    try:
                        a = float(text)
                    except ValueError:
                        raise DomainError(
                            f"unknown value {request.value!r}; use a number or one of "
                            f"{', '.join(sorted(_NAMED_VALUES))}") from None
                b = 1.0
                if a <= 0:
                    raise DomainError("value must be positive")
            else:
                raise DomainError("provide either `value` or the pair `a`, `b`")
            expansion = measure.euclid_on_lengths(a, b, max_steps=request.steps)
            convergent_list = measure.convergents(expansion)
        except DomainError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        target = a / b
        rows = [schemas.CfRowOut(k=k, quotient=q, p=conv.p, q=conv.q,
                                 value=conv.value, error=conv.value - target)
                for k, (q, conv) in enumerate(zip(expansion.quotients, convergent_list),
                                              start=1)]
        return schemas.CfResponse(quotients=expansion.quotients,
                                  terminated=expansion.terminated,
                                  target=target, rows=rows)

    @app.post("/triangle/solve", response_model=schemas.TriangleResponse)
    def triangle_solve(request: schemas.TriangleRequest) -> schemas.TriangleResponse:
        try:
            sides = mensura.TriangleSides(request.a, request.b, request.c)
            metrics = mensura.triangle_metrics(sides)
        except DomainError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return schemas.TriangleResponse(
            a=sides.a, b=sides.b, c=sides.c,
            area=metrics.area, semiperimeter=metrics.semiperimeter,
            projection_c_on_a=metrics.projection_c_on_a,
            projection_b_on_a=metrics.projection_b_on_a,
            heights=list(metrics.heights), medians=list(metrics.medians),
            angle_classes=list(metrics.angle_classes),
            circumradius=metrics.circumradius, inradius=metrics.inradius,
            bisector_splits=[schemas.BisectorSplitOut(
                toward_first=s.toward_first, toward_second=s.toward_second)
                for s in metrics.bisector_splits])

    @app.post("/mensurate/plane", response_model=schemas.PlaneAreaResponse)
    def mensurate_plane(request: schemas.PlaneAreaRequest) -> schemas.PlaneAreaResponse:
        try:
            area = mensura.polygon_area(request.shape, **request.params)
        except (DomainError, TypeError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return schemas.PlaneAreaResponse(shape=request.shape, area=area)

    @app.post("/mensurate/solid", response_model=schemas.SolidResponse)
    def mensurate_solid(request: schemas.SolidRequest) -> schemas.SolidResponse:
        cls = _SOLID_KINDS.get(request.kind)
        if cls is None:
            raise HTTPException(
                status_code=422,
                detail=f"unknown solid kind {request.kind!r}; "
                       f"available: {', '.join(sorted(_SOLID_KINDS))}")
        import warnings

        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                spec = cls(**request.params)
                try:
                    vol = solids.volume(spec)
                except DomainError:
                    vol = None
                surfaces = {}
                for which in ("lateral", "total"):
                    try:
                        surfaces[which] = solids.surface_area(spec, which)
                    except DomainError:
                        surfaces[which] = None
        except (DomainError, TypeError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return schemas.SolidResponse(kind=request.kind, volume=vol,
                                     lateral=surfaces["lateral"],
                                     total=surfaces["total"],
                                     degenerate=bool(spec.degenerate))

    @app.post("/lantern", response_model=schemas.LanternResponse)
    def lantern(request: schemas.LanternRequest) -> schemas.LanternResponse:
        import warnings

        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                spec = solids.LanternSpec(request.radius, request.height,
                                          request.m, request.n)
                area = solids.schwarz_lantern_area(spec)
        except DomainError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return schemas.LanternResponse(m=spec.m, n=spec.n,
                                       triangle_count=spec.triangle_count, area=area)

    @app.post("/verify/{suite}", response_model=schemas.VerifyResponse)
    def verify_suite(suite: str, request: schemas.VerifyRequest) -> schemas.VerifyResponse:
        try:
            report = verify.run_suite(suite, request.seed, request.samples)
        except KeyError as exc:
            raise HTTPException(status_code=422, detail=str(exc.args[0])) from exc
        return schemas.VerifyResponse(
            name=report.name, samples=report.samples,
            max_residual=report.max_residual, tolerance=report.tolerance,
            passed=report.passed, detail=report.detail)

    @app.get("/ngon/constructible/{n}", response_model=schemas.NgonResponse)
    def ngon(n: int) -> schemas.NgonResponse:
        try:
            verdict = is_constructible_ngon(n)
        except DomainError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return schemas.NgonResponse(n=n, constructible=verdict)

    @app.exception_handler(GeometryError)
    async def geometry_error_handler(_, exc: GeometryError):
        from fastapi.responses import JSONResponse

        return JSONResponse(status_code=422, content={"detail": str(exc)})

    return app


app = create_app()
