from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from app.core.constants import CHECKED_PROPERTIES


class VerificationRecord(BaseModel):
    """Per-poset certificate; one JSONL line per record."""

    model_config = ConfigDict(frozen=True)

    canon: str = Field(description="Canonical byte string of the poset, hex.")
    p: int = Field(ge=1)
    num_linear_extensions: str = Field(pattern=r"^[1-9][0-9]*$")
    ehr_coeffs: list[str] = Field(description="Ehrhart coefficients, ascending powers, num/den.")
    hstar: list[int]
    ehrhart_positive: bool
    real_rooted: bool
    log_concave: bool
    unimodal: bool
    narrow: bool
    graded: bool

    def failed_properties(self, *, graded_symmetric: bool = True) -> list[str]:
        verdicts = {
            "ehrhart_positive": self.ehrhart_positive,
            "real_rooted": self.real_rooted,
            "log_concave": self.log_concave,
            "unimodal": self.unimodal,
            "graded_symmetric": graded_symmetric,
        }
        return [name for name in CHECKED_PROPERTIES if not verdicts[name]]


class SweepSummary(BaseModel):
    p: int | None
    source: str
    total_posets: int = Field(ge=0)
    expected_posets: int | None = None
    counterexamples: dict[str, int]
    narrow_posets: int = Field(ge=0)
    graded_posets: int = Field(ge=0)
    shard_id: int = Field(ge=0)
    shard_count: int = Field(ge=1)
    cursor: int = Field(ge=0, description="Completed work units.")
    total_units: int | None = None
    complete: bool
    elapsed_seconds: float = Field(ge=0)

    @property
    def counterexample_total(self) -> int:
        return sum(self.counterexamples.values())
