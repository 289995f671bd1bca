"""Request and response schemas for the HTTP service.

All polynomials, quaternions and points travel as strings in the shared
text grammar; the service parses on the way in and prints canonically on
the way out, so clients never deal with internal representations.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str


class EvalRequest(BaseModel):
    variables: list[str]
    polynomial: str
    point: str = Field(description="comma-separated quaternion coordinates")


class EvalResponse(BaseModel):
    value: str


class IdealRequest(BaseModel):
    variables: list[str]
    generators: list[str]
    order: Literal["degrevlex", "deglex", "lex"] = "degrevlex"


class GroebnerRequest(IdealRequest):
    include_cofactors: bool = False


class GroebnerResponse(BaseModel):
    basis: list[str]
    cofactors: list[list[str]] | None = None
    unit_ideal: bool


class MemberRequest(IdealRequest):
    polynomial: str


class MemberResponse(BaseModel):
    member: bool
    cofactors: list[str] | None = None


class ConditionRequest(IdealRequest):
    polynomial: str
    scalar: str
    n: int | None = Field(default=None, description="fixed exponent; search when absent")
    n_max: int = 8


class ConditionResponse(BaseModel):
    holds: bool
    n: int | None
    witnesses: list[str] | None = None


class ScalarFamilyRequest(IdealRequest):
    polynomial: str
    scalars: list[str]
    n_max: int = 8


class ScalarOutcomeModel(BaseModel):
    scalar: str
    n: int | None
    holds: bool


class ScalarFamilyResponse(BaseModel):
    outcomes: list[ScalarOutcomeModel]
    note: str


class CertificateRequest(IdealRequest):
    polynomial: str
    scalar: str


class CertificateResponse(BaseModel):
    outcome: Literal["verified", "not-unit-ideal"]
    document: str | None = None


class ExampleCheck(BaseModel):
    description: str
    passed: bool


class ExampleResponse(BaseModel):
    checks: list[ExampleCheck]
    ok: bool
