from __future__ import annotations

from pydantic import BaseModel, Field

from app.schemas.verification import SweepSummary


class SweepCheckpoint(BaseModel):
    config_hash: str = Field(min_length=64, max_length=64)
    output_path: str | None = Field(default=None, description="Resolved record file; None for summary-only sweeps.")
    output_offset: int | None = Field(default=None, ge=0)
    summary: SweepSummary
