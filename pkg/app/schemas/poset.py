from __future__ import annotations

from pydantic import BaseModel, Field

from app.core.settings import AlgorithmName


class PosetRecordRequest(BaseModel):
    record: str = Field(
        min_length=1,
        max_length=512,
        description="One digraph6 line or a hex canonical record.",
        examples=["&AO"],
    )
    algorithm: AlgorithmName | None = Field(default=None, description="Defaults to the configured algorithm.")


class PolynomialResponse(BaseModel):
    p: int
    algorithm: str
    coeffs: list[str] = Field(description="Exact coefficients, ascending powers, num/den.")


class HStarResponse(BaseModel):
    p: int
    hstar: list[int]


class SturmRequest(BaseModel):
    coeffs: list[int] = Field(min_length=1, description="Integer coefficients a0..am.", examples=[[1, 4, 1]])


class SturmResponse(BaseModel):
    distinct_real_roots: int
    real_rooted: bool
    chain: list[list[int]] = Field(description="Primitive Sturm chain members, ascending coefficients.")
