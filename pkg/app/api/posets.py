from fastapi import APIRouter, status

from app.dependencies import SettingsDep, load_request_poset, resolve_requested_algorithm
from app.schemas.poset import HStarResponse, PolynomialResponse, PosetRecordRequest
from app.schemas.verification import VerificationRecord
from app.services.ehrhart_service import (
    ehrhart_polynomial,
    hstar_from_ehrhart,
    order_polynomial,
    resolve_algorithm,
)
from app.services.verification_service import verify_poset

router = APIRouter(prefix="/posets", tags=["posets"])

BAD_RECORD_RESPONSES = {
    status.HTTP_400_BAD_REQUEST: {"description": "Record is not a valid poset or has too many elements."},
}


@router.post(
    "/omega",
    summary="Order polynomial",
    description="Exact coefficients of the order polynomial of one poset record.",
    responses=BAD_RECORD_RESPONSES,
)
def omega(payload: PosetRecordRequest, app_settings: SettingsDep) -> PolynomialResponse:
    poset = load_request_poset(payload.record, app_settings)
    algorithm = resolve_requested_algorithm(payload.algorithm, app_settings)
    polynomial = order_polynomial(poset, algorithm)
    return PolynomialResponse(p=poset.p, algorithm=resolve_algorithm(poset, algorithm), coeffs=polynomial.tokens())


@router.post(
    "/ehrhart",
    summary="Ehrhart polynomial",
    description="Exact coefficients of the Ehrhart polynomial of the order polytope.",
    responses=BAD_RECORD_RESPONSES,
)
def ehrhart(payload: PosetRecordRequest, app_settings: SettingsDep) -> PolynomialResponse:
    poset = load_request_poset(payload.record, app_settings)
    algorithm = resolve_requested_algorithm(payload.algorithm, app_settings)
    polynomial = ehrhart_polynomial(poset, algorithm)
    return PolynomialResponse(p=poset.p, algorithm=resolve_algorithm(poset, algorithm), coeffs=polynomial.tokens())


@router.post(
    "/hstar",
    summary="h*-vector",
    responses=BAD_RECORD_RESPONSES,
)
def hstar(payload: PosetRecordRequest, app_settings: SettingsDep) -> HStarResponse:
    poset = load_request_poset(payload.record, app_settings)
    algorithm = resolve_requested_algorithm(payload.algorithm, app_settings)
    vector = hstar_from_ehrhart(ehrhart_polynomial(poset, algorithm), poset.p)
    return HStarResponse(p=poset.p, hstar=list(vector.h))


@router.post(
    "/verify",
    summary="Verify one poset",
    description="Full verification record: both h* routes, structural identities and every property verdict.",
    responses={
        **BAD_RECORD_RESPONSES,
        status.HTTP_500_INTERNAL_SERVER_ERROR: {"description": "An internal invariant failed."},
    },
)
def verify(payload: PosetRecordRequest, app_settings: SettingsDep) -> VerificationRecord:
    poset = load_request_poset(payload.record, app_settings)
    return verify_poset(poset, resolve_requested_algorithm(payload.algorithm, app_settings))
