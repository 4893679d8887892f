"""Exact certification of real-rootedness, log-concavity and unimodality."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum

from app.core.exceptions import ZeroPolynomial
from app.models.polynomial import RatPolynomial


class Infinity(StrEnum):
    POSITIVE = "+inf"
    NEGATIVE = "-inf"


@dataclass(slots=True, frozen=True)
class SturmChain:
    """Primitive integer polynomials ``f_0, f_1, ...`` with ``f_{i+1} ~ -rem(f_{i-1}, f_i)``."""

    polys: tuple[RatPolynomial, ...]

    def __len__(self) -> int:
        return len(self.polys)

    def signs_at(self, at: Infinity) -> list[int]:
        signs = []
        for poly in self.polys:
            sign = 1 if poly.leading > 0 else -1
            if at is Infinity.NEGATIVE and poly.degree % 2:
                sign = -sign
            signs.append(sign)
        return signs


def _require_nonzero(f: RatPolynomial) -> None:
    if f.is_zero:
        raise ZeroPolynomial


def squarefree_part(f: RatPolynomial) -> RatPolynomial:
    """``f / gcd(f, f')`` as a primitive integer polynomial with positive leading coefficient."""
    _require_nonzero(f)
    if f.degree == 0:
        return RatPolynomial.constant(1)
    reduced = (f // f.gcd(f.derivative())).primitive_part()
    return -reduced if reduced.leading < 0 else reduced


def sturm_chain(f: RatPolynomial) -> SturmChain:
    """Sturm sequence of the squarefree part of ``f``, each member scaled by a positive factor."""
    polys = [squarefree_part(f)]
    if polys[0].degree > 0:
        polys.append(polys[0].derivative().primitive_part())
        while True:
            remainder = polys[-2] % polys[-1]
            if remainder.is_zero:
                break
            polys.append((-remainder).primitive_part())
    return SturmChain(tuple(polys))


def sign_variations(signs: Sequence[int]) -> int:
    """Sign changes in a sequence, zeros ignored."""
    nonzero = [s for s in signs if s]
    return sum(1 for a, b in zip(nonzero, nonzero[1:], strict=False) if a != b)


def sign_variations_at_infinity(chain: SturmChain, at: Infinity) -> int:
    return sign_variations(chain.signs_at(at))


def count_distinct_real_roots(f: RatPolynomial) -> int:
    """``V(-inf) - V(+inf)`` over the Sturm chain of the squarefree part."""
    chain = sturm_chain(f)
    return sign_variations_at_infinity(chain, Infinity.NEGATIVE) - sign_variations_at_infinity(
        chain,
        Infinity.POSITIVE,
    )


def is_real_rooted(f: RatPolynomial) -> bool:
    reduced = squarefree_part(f)
    if reduced.degree == 0:
        return True
    return count_distinct_real_roots(reduced) == reduced.degree


def is_log_concave(coeffs: Sequence[int]) -> bool:
    return all(coeffs[i] ** 2 >= coeffs[i - 1] * coeffs[i + 1] for i in range(1, len(coeffs) - 1))


def is_unimodal(coeffs: Sequence[int]) -> bool:
    i = 0
    while i + 1 < len(coeffs) and coeffs[i] <= coeffs[i + 1]:
        i += 1
    while i + 1 < len(coeffs) and coeffs[i] >= coeffs[i + 1]:
        i += 1
    return i + 1 >= len(coeffs)


def is_symmetric(coeffs: Sequence[int]) -> bool:
    """Palindromic up to the top nonzero entry."""
    trimmed = truncate_at_top(coeffs)
    return trimmed == trimmed[::-1]


def truncate_at_top(coeffs: Sequence[int]) -> tuple[int, ...]:
    top = len(coeffs)
    while top and not coeffs[top - 1]:
        top -= 1
    return tuple(coeffs[:top])
