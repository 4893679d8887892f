"""Finite posets stored as bitmask rows of a transitively closed, naturally labeled relation."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field

from app.core.constants import MAX_ELEMENTS
from app.core.exceptions import InvalidPoset, OutOfRange

type LinearExtension = tuple[int, ...]


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(slots=True, frozen=True)
class Poset:
    """Strict partial order on the elements ``0..p-1``.

    ``down[j]`` is the bitmask of elements strictly below ``j``. Every element below ``j`` has a smaller
    label, so the identity permutation is always a linear extension. User-facing renderings add 1 to labels.
    """

    down: tuple[int, ...]
    up: tuple[int, ...] = field(init=False, repr=False, compare=False)
    upper_covers: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        p = len(self.down)
        if not 1 <= p <= MAX_ELEMENTS:
            raise OutOfRange(f"Posets must have between 1 and {MAX_ELEMENTS} elements.", details={"p": p})

        up = [0] * p
        for j, below in enumerate(self.down):
            if below >> j:
                raise InvalidPoset("Relation is not naturally labeled.", details={"element": j + 1})
            for i in iter_bits(below):
                if self.down[i] & ~below:
                    raise InvalidPoset("Relation is not transitively closed.", details={"element": j + 1})
                up[i] |= 1 << j

        covers = []
        for i in range(p):
            shortcuts = 0
            for k in iter_bits(up[i]):
                shortcuts |= up[k]
            covers.append(up[i] & ~shortcuts)

        object.__setattr__(self, "up", tuple(up))
        object.__setattr__(self, "upper_covers", tuple(covers))

    @classmethod
    def chain(cls, p: int) -> Poset:
        return cls(down=tuple((1 << j) - 1 for j in range(p)))

    @classmethod
    def antichain(cls, p: int) -> Poset:
        return cls(down=(0,) * p)

    @property
    def p(self) -> int:
        return len(self.down)

    @property
    def full_mask(self) -> int:
        return (1 << self.p) - 1

    def less(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def comparable(self, i: int, j: int) -> bool:
        return self.less(i, j) or self.less(j, i)

    def covers(self, i: int, j: int) -> bool:
        """True iff ``j`` covers ``i``."""
        return bool(self.upper_covers[i] >> j & 1)

    def lower_covers(self, j: int) -> int:
        return sum(1 << i for i in iter_bits(self.down[j]) if self.covers(i, j))

    def minimal_elements(self) -> list[int]:
        return [v for v in range(self.p) if not self.down[v]]

    def maximal_elements(self) -> list[int]:
        return [v for v in range(self.p) if not self.up[v]]

    def relation_matrix(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(self.less(i, j) for j in range(self.p)) for i in range(self.p))

    def relations(self) -> list[tuple[int, int]]:
        """All pairs ``(i, j)`` with ``i < j`` in the order, 1-based."""
        return [(i + 1, j + 1) for j in range(self.p) for i in iter_bits(self.down[j])]


@dataclass(slots=True, frozen=True)
class IdealLattice:
    """Order ideals of a poset as bitmasks in ascending integer order.

    ``supersets[k]`` lists the indices of every ideal containing ideal ``k``, itself included. A subset
    always has a smaller integer value than its proper supersets, so those indices are all ``>= k``.
    """

    p: int
    ideals: tuple[int, ...]
    supersets: tuple[tuple[int, ...], ...] = field(repr=False)
    _index: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {ideal: k for k, ideal in enumerate(self.ideals)})

    def __len__(self) -> int:
        return len(self.ideals)

    def __contains__(self, mask: object) -> bool:
        return mask in self._index

    def index_of(self, mask: int) -> int:
        return self._index[mask]

    def members(self, k: int) -> frozenset[int]:
        return frozenset(iter_bits(self.ideals[k]))
