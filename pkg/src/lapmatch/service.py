"""FastAPI service wrapping the core package.

Every endpoint is a pure computation over the request body; nothing is stored
between calls, so the service scales to any number of clients and the CLI can
mount it in-process.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from .census import coefficient_b, ratio_check, spanning_tree_count, unicyclic_spanning_count
from .errors import (
    DomainError,
    Graph6ParseError,
    InternalInconsistencyError,
    SizeCapError,
)
from .graphs import parse_graph6, structural_metrics
from .laplacian import cross_validated, lm_roots
from .matching import matching_polynomial
from .polynomials import format_decimal, parse_decimal
from .schemas import (
    CensusRequest,
    CensusResponse,
    PolyRequest,
    PolyResponse,
    RatioRequest,
    RatioResponse,
    RootEntry,
    RootsRequest,
    RootsResponse,
    ScanNotice,
    ScanRequest,
    ScanResponse,
    VariationModel,
    VerifyRecord,
    VerifyRequest,
    VerifyResponse,
    VerifySummary,
)
from .variation import scan_record, summarize_scan
from .verify import verify_record


def create_app() -> FastAPI:
    app = FastAPI(title="lapmatch", version=__version__)

    @app.exception_handler(Graph6ParseError)
    async def _parse_error(request: Request, exc: Graph6ParseError):
        return JSONResponse(status_code=400, content={"error": "parse", "detail": str(exc)})

    @app.exception_handler(DomainError)
    async def _domain_error(request: Request, exc: DomainError):
        return JSONResponse(status_code=400, content={"error": "domain", "detail": str(exc)})

    @app.exception_handler(SizeCapError)
    async def _size_error(request: Request, exc: SizeCapError):
        return JSONResponse(status_code=400, content={"error": "size_cap", "detail": str(exc)})

    @app.exception_handler(InternalInconsistencyError)
    async def _internal_error(request: Request, exc: InternalInconsistencyError):
        return JSONResponse(
            status_code=500, content={"error": "internal_inconsistency", "detail": str(exc)}
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/poly", response_model=PolyResponse)
    def poly(req: PolyRequest) -> PolyResponse:
        g = _parse_sized(req.graph6, req.max_size)
        if req.kind == "matching":
            coeffs = matching_polynomial(g)
            return PolyResponse(
                graph=req.graph6.strip(), kind=req.kind,
                degree=len(coeffs) - 1, coefficients=list(coeffs),
            )
        poly_value, routes = cross_validated(g)
        return PolyResponse(
            graph=req.graph6.strip(), kind=req.kind,
            degree=poly_value.degree, coefficients=list(poly_value.coeffs),
            b=list(poly_value.b), routes=routes, routes_agree=True,
        )

    @app.post("/roots", response_model=RootsResponse)
    def roots(req: RootsRequest) -> RootsResponse:
        width = parse_decimal(req.width)
        if width <= 0:
            raise DomainError(f"width must be positive, got {req.width}")
        g = _parse_sized(req.graph6, req.max_size)
        root_set = lm_roots(g).refined(width)
        entries = [
            RootEntry(
                value=_distinct_value(root_set, k),
                multiplicity=entry.multiplicity,
                low=str(entry.low),
                high=str(entry.high),
            )
            for k, entry in enumerate(root_set.entries)
        ]
        return RootsResponse(
            graph=req.graph6.strip(), n=g.n, roots=entries,
            total_multiplicity=root_set.total_multiplicity,
        )

    @app.post("/census", response_model=CensusResponse)
    def census_endpoint(req: CensusRequest) -> CensusResponse:
        g = _parse_sized(req.graph6, req.max_size)
        metrics = structural_metrics(g)
        b_i = coefficient_b(g, req.i)
        trees = spanning_tree_count(g)
        unicyclic = unicyclic_spanning_count(g)
        ratio_holds: bool | None = None
        ratio_error: str | None = None
        try:
            ratio_holds = ratio_check(g).holds
        except DomainError as exc:
            ratio_error = str(exc)
        return CensusResponse(
            graph=req.graph6.strip(), i=req.i, b_i=b_i,
            spanning_trees=trees, unicyclic_spanning=unicyclic,
            girth=metrics.girth, cycle_dim=metrics.cycle_space_dim,
            ratio_holds=ratio_holds, ratio_error=ratio_error,
        )

    @app.post("/ratio", response_model=RatioResponse)
    def ratio(req: RatioRequest) -> RatioResponse:
        g = _parse_sized(req.graph6, req.max_size)
        check = ratio_check(g)
        return RatioResponse(
            graph=req.graph6.strip(),
            spanning_trees=check.spanning_trees,
            unicyclic_spanning=check.unicyclic_spanning,
            girth=check.girth, cycle_dim=check.cycle_space_dim,
            holds=check.holds,
        )

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        tasks = [(k + 1, line, req.suite, req.max_size) for k, line in enumerate(req.graphs)]
        raw = _run_tasks(verify_record, tasks, req.jobs)
        records = [VerifyRecord(**r) for r in raw]
        parse_errors = sum(1 for r in records if r.error and r.error.startswith("parse error"))
        failed = sum(1 for r in records if not r.ok)
        summary = VerifySummary(
            graphs=len(records), failed=failed, parse_errors=parse_errors,
            passed=(failed == 0 and parse_errors == 0),
        )
        return VerifyResponse(records=records, summary=summary)

    @app.post("/scan", response_model=ScanResponse)
    def scan(req: ScanRequest) -> ScanResponse:
        tasks = [(k + 1, line, req.max_size) for k, line in enumerate(req.graphs)]
        raw = _run_tasks(scan_record, tasks, req.jobs)
        reports = [VariationModel(**r) for rec in raw for r in rec["reports"]]
        notices = [
            ScanNotice(line=rec["line"], message=rec["notice"])
            for rec in raw
            if rec["notice"] is not None
        ]
        return ScanResponse(reports=reports, notices=notices, summary=summarize_scan(raw))

    return app


def _parse_sized(graph6: str, max_size: int | None):
    g = parse_graph6(graph6)
    if max_size is not None and g.n + g.m > max_size:
        raise SizeCapError(f"graph has n+m={g.n + g.m}, above the requested cap {max_size}")
    return g


def _run_tasks(fn, tasks: list[tuple], jobs: int) -> list:
    """Map fn over argument tuples, optionally across processes, keeping order."""
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_star_apply, [(fn, t) for t in tasks]))


def _star_apply(packed):
    fn, args = packed
    return fn(*args)


def _distinct_value(root_set, index: int, places: int = 9, max_places: int = 15) -> str:
    """Decimal for entry ``index`` with enough digits to separate its neighbors."""
    entry = root_set.entries[index]
    value = format_decimal(entry.midpoint, places)
    neighbors = [e for k, e in enumerate(root_set.entries) if k != index]
    while places < max_places and any(
        format_decimal(e.midpoint, places) == format_decimal(entry.midpoint, places)
        for e in neighbors
    ):
        places += 1
        value = format_decimal(entry.midpoint, places)
    return value


app = create_app()
