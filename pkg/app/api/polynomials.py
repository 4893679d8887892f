from fastapi import APIRouter, status

from app.models.polynomial import RatPolynomial
from app.schemas.poset import SturmRequest, SturmResponse
from app.services.polycheck_service import count_distinct_real_roots, is_real_rooted, sturm_chain

router = APIRouter(prefix="/polynomials", tags=["polynomials"])


@router.post(
    "/sturm",
    summary="Sturm chain",
    description="Distinct real roots and real-rootedness of an integer polynomial, with its Sturm chain.",
    responses={status.HTTP_400_BAD_REQUEST: {"description": "The polynomial is zero."}},
)
def sturm(payload: SturmRequest) -> SturmResponse:
    polynomial = RatPolynomial.of(payload.coeffs)
    chain = sturm_chain(polynomial)
    return SturmResponse(
        distinct_real_roots=count_distinct_real_roots(polynomial),
        real_rooted=is_real_rooted(polynomial),
        chain=[list(member.integer_coeffs()) for member in chain.polys],
    )
