"""HTTP service wrapping the kernel.

Thin by design: every endpoint parses strings with textio, calls one kernel
procedure, and prints results back to strings.  Input problems become 422
responses; a proper enlarged ideal in certificate generation is a normal
200 with outcome "not-unit-ideal"; a verification failure is a genuine 500.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..groebner import buchberger, is_member, is_unit_ideal
from ..nullstellensatz import (
    NotUnitIdealError,
    VerificationFailedError,
    check_scalar_family,
    condition_holds,
    example_suite,
    rabinowitsch_certificate,
    search_N,
)
from ..polyring import (
    MonomialOrder,
    NonCommutingPointError,
    VariableCountMismatchError,
    evaluate,
)
from ..textio import (
    ParseError,
    parse_point,
    parse_poly,
    parse_quaternion,
    print_poly,
    print_quaternion,
    render_certificate,
    validate_variables,
)
from .models import (
    CertificateRequest,
    CertificateResponse,
    ConditionRequest,
    ConditionResponse,
    EvalRequest,
    EvalResponse,
    ExampleCheck,
    ExampleResponse,
    GroebnerRequest,
    GroebnerResponse,
    HealthResponse,
    IdealRequest,
    MemberRequest,
    MemberResponse,
    ScalarFamilyRequest,
    ScalarFamilyResponse,
    ScalarOutcomeModel,
)

app = FastAPI(
    title="quatnull",
    description="Exact quaternion-polynomial kernel: evaluation at commuting "
    "points, left Groebner bases with cofactors, and vanishing certificates.",
    version="0.1.0",
)

@app.exception_handler(ParseError)
@app.exception_handler(NonCommutingPointError)
@app.exception_handler(VariableCountMismatchError)
@app.exception_handler(ValueError)
@app.exception_handler(ZeroDivisionError)
async def _input_error(request: Request, exc: Exception) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(VerificationFailedError)
async def _verification_error(request: Request, exc: Exception) -> JSONResponse:
    return JSONResponse(status_code=500, content={"detail": str(exc)})


def _build_ideal(req: IdealRequest):
    variables = tuple(req.variables)
    validate_variables(variables)
    order = MonomialOrder(req.order)
    gens = [parse_poly(g, variables) for g in req.generators]
    return buchberger(gens, order, nvars=len(variables)), variables


@app.get("/health", response_model=HealthResponse)
async def health() -> HealthResponse:
    return HealthResponse(status="ok")


@app.post("/eval", response_model=EvalResponse)
async def eval_endpoint(req: EvalRequest) -> EvalResponse:
    variables = tuple(req.variables)
    validate_variables(variables)
    f = parse_poly(req.polynomial, variables)
    p = parse_point(req.point)
    return EvalResponse(value=print_quaternion(evaluate(f, p)))


@app.post("/groebner", response_model=GroebnerResponse)
async def groebner_endpoint(req: GroebnerRequest) -> GroebnerResponse:
    ideal, variables = _build_ideal(req)
    cofactors = None
    if req.include_cofactors:
        cofactors = [
            [print_poly(c, variables) for c in row] for row in ideal.cofactors
        ]
    return GroebnerResponse(
        basis=[print_poly(b, variables) for b in ideal.basis],
        cofactors=cofactors,
        unit_ideal=is_unit_ideal(ideal),
    )


@app.post("/member", response_model=MemberResponse)
async def member_endpoint(req: MemberRequest) -> MemberResponse:
    ideal, variables = _build_ideal(req)
    f = parse_poly(req.polynomial, variables)
    result = is_member(f, ideal)
    if not result.member:
        return MemberResponse(member=False)
    return MemberResponse(
        member=True,
        cofactors=[print_poly(c, variables) for c in result.cofactors],
    )


@app.post("/condition", response_model=ConditionResponse)
async def condition_endpoint(req: ConditionRequest) -> ConditionResponse:
    ideal, variables = _build_ideal(req)
    f = parse_poly(req.polynomial, variables)
    a = parse_quaternion(req.scalar)
    if req.n is not None:
        report = condition_holds(ideal, f, a, req.n)
    else:
        report = search_N(ideal, f, a, req.n_max)
    if report is None or not report.holds:
        return ConditionResponse(holds=False, n=req.n)
    return ConditionResponse(
        holds=True,
        n=report.N,
        witnesses=[print_poly(w, variables) for w in report.witnesses],
    )


@app.post("/scalar-family", response_model=ScalarFamilyResponse)
async def scalar_family_endpoint(req: ScalarFamilyRequest) -> ScalarFamilyResponse:
    ideal, variables = _build_ideal(req)
    f = parse_poly(req.polynomial, variables)
    scalars = [parse_quaternion(s) for s in req.scalars]
    report = check_scalar_family(ideal, f, scalars, req.n_max)
    return ScalarFamilyResponse(
        outcomes=[
            ScalarOutcomeModel(
                scalar=print_quaternion(o.scalar), n=o.N, holds=o.holds
            )
            for o in report.outcomes
        ],
        note=report.note,
    )


@app.post("/certificate", response_model=CertificateResponse)
async def certificate_endpoint(req: CertificateRequest) -> CertificateResponse:
    ideal, variables = _build_ideal(req)
    f = parse_poly(req.polynomial, variables)
    a = parse_quaternion(req.scalar)
    try:
        cert = rabinowitsch_certificate(ideal, f, a)
    except NotUnitIdealError:
        return CertificateResponse(outcome="not-unit-ideal")
    return CertificateResponse(
        outcome="verified",
        document=render_certificate(cert, variables),
    )


@app.get("/example", response_model=ExampleResponse)
async def example_endpoint() -> ExampleResponse:
    report = example_suite()
    return ExampleResponse(
        checks=[
            ExampleCheck(description=c.description, passed=c.passed)
            for c in report.checks
        ],
        ok=report.ok,
    )
