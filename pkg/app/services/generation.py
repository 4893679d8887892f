"""Isomorphism-free generation of posets.

Posets are grown one element at a time: the new element takes the last label and its down-set is an
order ideal of the poset built so far, which keeps every relation closed and naturally labeled. A child is
kept only if its labeling is canonical. Every prefix of a canonical labeling is canonical itself, so each
isomorphism class is reached exactly once, from the canonical labeling of its prefix.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field

from app.core.constants import MAX_ELEMENTS
from app.core.exceptions import OutOfRange
from app.core.logging import get_logger
from app.models.poset import Poset
from app.services.canonical import identity_row, is_canonical
from app.services.poset_service import ideal_masks

logger = get_logger(__name__)

type Relation = tuple[int, ...]

ROOT: Relation = (0,)


def check_element_count(p: int, limit: int = MAX_ELEMENTS) -> None:
    if not 1 <= p <= limit:
        raise OutOfRange(f"Element count must be between 1 and {limit}.", details={"p": p})


def children(down: Relation) -> Iterator[Relation]:
    """Canonical one-element extensions in ascending order of their code."""
    size = len(down)
    for ideal in sorted(ideal_masks(down), key=lambda mask: identity_row(mask, size)):
        child = (*down, ideal)
        if is_canonical(child):
            yield child


def expand(down: Relation, p: int) -> Iterator[Relation]:
    if len(down) == p:
        yield down
        return
    for child in children(down):
        yield from expand(child, p)


def level(nodes: list[Relation]) -> list[Relation]:
    return [child for node in nodes for child in children(node)]


def split_nodes(p: int, target: int) -> list[Relation]:
    """Canonical relations of the shallowest size with at least ``target`` of them (at most ``p``)."""
    nodes = [ROOT]
    while len(nodes[0]) < p and len(nodes) < target:
        nodes = level(nodes)
    return nodes


@dataclass(slots=True, frozen=True)
class GenerationShard:
    """Deterministic slice of the generation tree.

    The subtrees rooted at the canonical relations of the split level are numbered in generation order and
    dealt round-robin: shard ``i`` owns every subtree whose number is ``i`` modulo ``shard_count``.
    """

    p: int
    shard_id: int = 0
    shard_count: int = 1
    units_per_shard: int = 64
    _roots: list[Relation] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        check_element_count(self.p)
        if self.shard_count < 1 or not 0 <= self.shard_id < self.shard_count:
            raise OutOfRange(
                "Shard index must satisfy 0 <= shard < shards.",
                details={"shard": self.shard_id, "shards": self.shard_count},
            )
        roots = split_nodes(self.p, self.shard_count * self.units_per_shard)
        object.__setattr__(self, "_roots", roots)

    @property
    def label(self) -> str:
        return f"shard {self.shard_id}/{self.shard_count}"

    @property
    def split_level(self) -> int:
        return len(self._roots[0])

    @property
    def total_units(self) -> int:
        return len(self._roots)

    def prefixes(self) -> list[Relation]:
        """Roots of the subtrees owned by this shard, in generation order."""
        return self._roots[self.shard_id :: self.shard_count]


def generate_relations(p: int, shard: GenerationShard | None = None) -> Iterator[Relation]:
    check_element_count(p)
    if shard is None:
        yield from expand(ROOT, p)
        return
    if shard.p != p:
        raise OutOfRange("Shard was planned for a different element count.", details={"p": p, "shard_p": shard.p})
    logger.debug(
        "Generating %s: %d of %d subtrees at size %d",
        shard.label,
        len(shard.prefixes()),
        shard.total_units,
        shard.split_level,
    )
    for prefix in shard.prefixes():
        yield from expand(prefix, p)


def generate_all(p: int, shard: GenerationShard | None = None) -> Iterator[Poset]:
    """One canonically labeled representative per isomorphism class, in ascending canonical order."""
    for down in generate_relations(p, shard):
        yield Poset(down=down)
