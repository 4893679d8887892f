"""Order polynomials, Ehrhart polynomials and h*-vectors of order polytopes."""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from fractions import Fraction
from math import comb
from typing import Literal

from app.core.exceptions import DegreeMismatch, NegativeEntry, NotInteger
from app.core.settings import AlgorithmName, settings
from app.models.hstar import HStarVector
from app.models.polynomial import RatPolynomial
from app.models.poset import IdealLattice, LinearExtension, Poset
from app.services.poset_service import ideal_masks, linear_extensions, order_ideals

type ResolvedAlgorithm = Literal["linear", "ideals"]


def resolve_algorithm(poset: Poset, algorithm: AlgorithmName = "auto") -> ResolvedAlgorithm:
    if algorithm == "auto":
        return "linear" if poset.p <= settings.auto_linear_max_elements else "ideals"
    return algorithm


def descents(word: LinearExtension) -> int:
    return sum(1 for a, b in zip(word, word[1:], strict=False) if a > b)


def order_polynomial_linear(poset: Poset) -> RatPolynomial:
    """Sum of ``C(t + p - 1 - des(w), p)`` over linear extensions ``w``, grouped by descent count."""
    p = poset.p
    tally = Counter(descents(word) for word in linear_extensions(poset))
    result = RatPolynomial.zero()
    for descent, multiplicity in sorted(tally.items()):
        result += RatPolynomial.binomial(p, shift=p - 1 - descent).scale(multiplicity)
    return result


def multichain_counts(lattice: IdealLattice, t_max: int) -> list[int]:
    """``[Omega(1), ..., Omega(t_max)]``: multichains of ideals of length ``t - 1``."""
    values = [1]
    chains = [1] * len(lattice)
    for _ in range(2, t_max + 1):
        values.append(sum(chains))
        extended = [0] * len(lattice)
        for index, count in enumerate(chains):
            for target in lattice.supersets[index]:
                extended[target] += count
        chains = extended
    return values[:t_max]


def newton_interpolate(values: Sequence[int | Fraction], start: int = 0) -> RatPolynomial:
    """Polynomial through ``(start + k, values[k])`` via forward differences."""
    differences = [Fraction(v) for v in values]
    result = RatPolynomial.zero()
    for k in range(len(values)):
        if differences[0]:
            result += RatPolynomial.binomial(k, shift=-start).scale(differences[0])
        differences = [b - a for a, b in zip(differences, differences[1:], strict=False)]
    return result


def order_polynomial_ideals(poset: Poset) -> RatPolynomial:
    values = multichain_counts(order_ideals(poset), poset.p + 1)
    return newton_interpolate(values, start=1)


def order_polynomial(poset: Poset, algorithm: AlgorithmName = "auto") -> RatPolynomial:
    """``Omega_P(t)``, the number of order-preserving maps from the poset to a ``t``-chain."""
    if resolve_algorithm(poset, algorithm) == "linear":
        return order_polynomial_linear(poset)
    return order_polynomial_ideals(poset)


def ehrhart_polynomial(poset: Poset, algorithm: AlgorithmName = "auto") -> RatPolynomial:
    """``ehr(O(P), t) = Omega_P(t + 1)``."""
    return order_polynomial(poset, algorithm).shift(1)


def hstar_from_ehrhart(ehr: RatPolynomial, p: int) -> HStarVector:
    """Coordinates of ``ehr`` in the basis ``C(t + p - i, p)``, ``i = 0..p``.

    ``C(t + p - i, p)`` vanishes at ``t < i`` and equals 1 at ``t = i``, so evaluating at ``t = 0..p``
    gives a unit lower-triangular system.
    """
    if ehr.degree != p:
        raise DegreeMismatch(details={"expected": p, "actual": ehr.degree})
    h: list[int] = []
    for t in range(p + 1):
        value = ehr(t) - sum(h[i] * comb(t + p - i, p) for i in range(t))
        if value.denominator != 1:
            raise NotInteger(details={"index": t, "value": str(value)})
        if value < 0:
            raise NegativeEntry(details={"index": t, "value": str(value)})
        h.append(int(value))
    return HStarVector(tuple(h))


def descent_distribution(poset: Poset) -> list[int]:
    """Number of linear extensions with ``k`` descents, ``k = 0..p``.

    Dynamic programming over pairs (order ideal, last element placed); no extension is listed.
    """
    p = poset.p
    down = poset.down
    table: dict[int, dict[int, list[int]]] = {}
    for v in poset.minimal_elements():
        start = [0] * (p + 1)
        start[0] = 1
        table[1 << v] = {v: start}

    for ideal in ideal_masks(down):
        states = table.get(ideal)
        if not states or ideal == poset.full_mask:
            continue
        for v in range(p):
            bit = 1 << v
            if ideal & bit or down[v] & ~ideal:
                continue
            targets = table.setdefault(ideal | bit, {})
            counts = targets.setdefault(v, [0] * (p + 1))
            for last, vector in states.items():
                step = 1 if last > v else 0
                for k in range(p + 1 - step):
                    counts[k + step] += vector[k]

    totals = [0] * (p + 1)
    for vector in table.get(poset.full_mask, {}).values():
        for k, count in enumerate(vector):
            totals[k] += count
    return totals


def hstar_from_descents(poset: Poset) -> HStarVector:
    """``h_i`` = number of linear extensions with ``i`` descents under the natural labeling."""
    return HStarVector(tuple(descent_distribution(poset)))


def is_ehrhart_positive(ehr: RatPolynomial) -> bool:
    return all(c >= 0 for c in ehr.coeffs)
