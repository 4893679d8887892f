from __future__ import annotations

from dataclasses import dataclass

from app.core.exceptions import NegativeEntry
from app.models.polynomial import RatPolynomial


@dataclass(slots=True, frozen=True)
class HStarVector:
    """Coefficients ``h_0..h_p`` of the h*-polynomial of an order polytope."""

    h: tuple[int, ...]

    def __post_init__(self) -> None:
        for i, value in enumerate(self.h):
            if value < 0:
                raise NegativeEntry(details={"index": i, "value": value})

    @property
    def top_index(self) -> int:
        """Largest ``i`` with ``h_i != 0``, ``-1`` when every entry vanishes."""
        for i in range(len(self.h) - 1, -1, -1):
            if self.h[i]:
                return i
        return -1

    @property
    def total(self) -> int:
        return sum(self.h)

    def truncated(self) -> tuple[int, ...]:
        return self.h[: self.top_index + 1]

    def as_polynomial(self) -> RatPolynomial:
        return RatPolynomial.of(self.h)
