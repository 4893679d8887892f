"""Construction, enumeration and structural predicates for posets."""

from __future__ import annotations

from collections.abc import Iterator, Sequence

import networkx as nx

from app.core.constants import MAX_ELEMENTS
from app.core.exceptions import CyclicInput, OutOfRange, ReflexiveInput
from app.core.logging import get_logger
from app.models.poset import IdealLattice, LinearExtension, Poset, iter_bits

logger = get_logger(__name__)


def transitive_closure(rel: Sequence[Sequence[bool]]) -> Poset:
    """Close an acyclic strict relation and relabel it naturally.

    Elements are relabeled by a depth-first topological order that visits original labels in ascending
    order and places every element right after its predecessors, so naturally labeled input keeps its
    labels.
    """
    p = len(rel)
    if not 1 <= p <= MAX_ELEMENTS:
        raise OutOfRange(f"Posets must have between 1 and {MAX_ELEMENTS} elements.", details={"p": p})
    if any(len(row) != p for row in rel):
        raise OutOfRange("Relation matrix must be square.", details={"p": p})
    for i in range(p):
        if rel[i][i]:
            raise ReflexiveInput(details={"element": i + 1})

    predecessors = nx.DiGraph()
    predecessors.add_nodes_from(range(p))
    for j in range(p):
        for i in range(p):
            if rel[i][j]:
                predecessors.add_edge(j, i)

    if not nx.is_directed_acyclic_graph(predecessors):
        cycle = nx.find_cycle(predecessors)
        raise CyclicInput(details={"cycle": sorted({u + 1 for u, _ in cycle})})

    order = list(nx.dfs_postorder_nodes(predecessors))
    if order != list(range(p)):
        logger.debug("Relabeled relation to natural order %s", [v + 1 for v in order])
    label = {old: new for new, old in enumerate(order)}

    down = [0] * p
    for old in order:
        new = label[old]
        for pred in predecessors.successors(old):
            down[new] |= down[label[pred]] | 1 << label[pred]
    return Poset(down=tuple(down))


def poset_from_relations(p: int, pairs: Sequence[tuple[int, int]]) -> Poset:
    """Build a poset from 1-based pairs ``(i, j)`` meaning ``i < j``."""
    if not 1 <= p <= MAX_ELEMENTS:
        raise OutOfRange(f"Posets must have between 1 and {MAX_ELEMENTS} elements.", details={"p": p})
    rel = [[False] * p for _ in range(p)]
    for i, j in pairs:
        if not (1 <= i <= p and 1 <= j <= p):
            raise OutOfRange("Relation pair outside the ground set.", details={"pair": [i, j]})
        rel[i - 1][j - 1] = True
    return transitive_closure(rel)


def linear_extensions(poset: Poset) -> Iterator[LinearExtension]:
    """Every linear extension exactly once, in lexicographic order of the word."""
    p = poset.p
    full = poset.full_mask
    down = poset.down
    word: list[int] = []

    def extend(placed: int) -> Iterator[LinearExtension]:
        if placed == full:
            yield tuple(word)
            return
        for v in range(p):
            bit = 1 << v
            if not placed & bit and not down[v] & ~placed:
                word.append(v)
                yield from extend(placed | bit)
                word.pop()

    yield from extend(0)


def ideal_masks(down: Sequence[int]) -> list[int]:
    """Down-sets of a naturally labeled relation given by its ``down`` rows, ascending."""
    masks = [0]
    for v, below in enumerate(down):
        bit = 1 << v
        masks += [mask | bit for mask in masks if not below & ~mask]
    masks.sort()
    return masks


def order_ideals(poset: Poset) -> IdealLattice:
    ideals = tuple(ideal_masks(poset.down))
    supersets = tuple(
        tuple(k for k in range(index, len(ideals)) if ideals[k] & ideal == ideal)
        for index, ideal in enumerate(ideals)
    )
    return IdealLattice(p=poset.p, ideals=ideals, supersets=supersets)


def count_linear_extensions(poset: Poset) -> int:
    """``e(P)`` by dynamic programming over order ideals."""
    down = poset.down
    counts: dict[int, int] = {0: 1}
    for ideal in ideal_masks(down):
        ways = counts.get(ideal, 0)
        if not ways:
            continue
        for v in range(poset.p):
            bit = 1 << v
            if not ideal & bit and not down[v] & ~ideal:
                counts[ideal | bit] = counts.get(ideal | bit, 0) + ways
    return counts[poset.full_mask]


def is_narrow(poset: Poset) -> bool:
    """True iff the poset has no 3-element antichain (equivalently, it is a union of two chains)."""
    full = poset.full_mask
    incomparable = [full & ~(poset.down[v] | poset.up[v] | 1 << v) for v in range(poset.p)]
    for i in range(poset.p):
        for j in iter_bits(incomparable[i] >> (i + 1) << (i + 1)):
            if (incomparable[i] & incomparable[j]) >> (j + 1):
                return False
    return True


def maximal_chain_lengths(poset: Poset) -> set[int]:
    """Lengths (number of cover steps) of all maximal chains."""
    lengths: list[set[int]] = []
    for v in range(poset.p):
        below = poset.lower_covers(v)
        if not below:
            lengths.append({0})
        else:
            lengths.append({length + 1 for u in iter_bits(below) for length in lengths[u]})
    return {length for v in poset.maximal_elements() for length in lengths[v]}


def is_graded(poset: Poset) -> bool:
    return len(maximal_chain_lengths(poset)) == 1


def hasse_diagram(poset: Poset) -> str:
    """Cover relations, one ``i < j`` pair per line, 1-based."""
    lines = [f"{i + 1} < {j + 1}" for i in range(poset.p) for j in iter_bits(poset.upper_covers[i])]
    return "\n".join(lines)
