"""Canonical forms of posets under relabeling by linear extensions.

A relabeling by a linear extension ``w`` puts ``w[a]`` at position ``a``. Its code is the strictly lower
triangle of the "is below" matrix read row by row: row ``a`` has one bit per earlier position ``b``, set iff
``w[b] < w[a]`` in the poset. Row ``a`` is kept as an integer whose most significant bit is position 0, so
comparing the rows one after another is the lexicographic order of the bit string. The canonical form is
the minimal code; positions fill up front to back, which lets the search discard a branch as soon as one
row exceeds the best row seen at that depth.
"""

from __future__ import annotations

from collections.abc import Sequence

from app.core.constants import MAX_ELEMENTS
from app.core.exceptions import BadCanonicalRecord, InvalidPoset, OutOfRange
from app.models.poset import Poset, iter_bits

type Rows = tuple[int, ...]


def up_masks(down: Sequence[int]) -> list[int]:
    up = [0] * len(down)
    for j, below in enumerate(down):
        for i in iter_bits(below):
            up[i] |= 1 << j
    return up


def identity_row(below: int, position: int) -> int:
    """Row of an element placed at ``position`` under the identity labeling."""
    return sum(1 << (position - 1 - a) for a in iter_bits(below))


def _twin_predecessors(down: Sequence[int], up: Sequence[int]) -> list[int]:
    # Twins share both neighborhoods; swapping two of them is an automorphism.
    twins = [0] * len(down)
    for v in range(len(down)):
        for u in range(v):
            if down[u] == down[v] and up[u] == up[v]:
                twins[v] |= 1 << u
    return twins


def _search(down: Sequence[int], *, stop_below_identity: bool) -> tuple[Rows, tuple[int, ...]] | None:
    # With stop_below_identity the search gives up as soon as some extension beats the identity.
    p = len(down)
    twins = _twin_predecessors(down, up_masks(down))
    frontier: list[tuple[tuple[int, ...], int]] = [((), 0)]
    rows: list[int] = []

    for depth in range(p):
        best: int | None = None
        survivors: list[tuple[tuple[int, ...], int]] = []
        for order, placed in frontier:
            for v in range(p):
                bit = 1 << v
                if placed & bit or down[v] & ~placed or twins[v] & ~placed:
                    continue
                below = down[v]
                row = 0
                for a, u in enumerate(order):
                    if below >> u & 1:
                        row |= 1 << (depth - 1 - a)
                if best is None or row < best:
                    best = row
                    survivors = [(order + (v,), placed | bit)]
                elif row == best:
                    survivors.append((order + (v,), placed | bit))
        if best is None:
            raise InvalidPoset("Relation admits no linear extension.")
        if stop_below_identity and best < identity_row(down[depth], depth):
            return None
        rows.append(best)
        frontier = survivors

    return tuple(rows), frontier[0][0]


def minimal_rows(down: Sequence[int]) -> tuple[Rows, tuple[int, ...]]:
    """Minimal code over all linear extensions and one extension attaining it."""
    result = _search(down, stop_below_identity=False)
    if result is None:
        raise InvalidPoset("Relation admits no linear extension.")
    return result


def is_canonical(down: Sequence[int]) -> bool:
    """True iff the identity labeling already attains the minimal code."""
    return _search(down, stop_below_identity=True) is not None


def encode_rows(rows: Rows) -> bytes:
    p = len(rows)
    value = 0
    for position in range(1, p):
        value = value << position | rows[position]
    bits = p * (p - 1) // 2
    size = (bits + 7) // 8
    return bytes([p]) + (value << (size * 8 - bits)).to_bytes(size, "big")


def canonical_form(poset: Poset) -> bytes:
    """Byte string equal for two posets iff they are isomorphic: ``p`` then the packed minimal code."""
    return encode_rows(minimal_rows(poset.down)[0])


def poset_from_canonical(data: bytes) -> Poset:
    """Decode a canonical byte string into the poset labeled by its minimal code."""
    if not data:
        raise BadCanonicalRecord("Canonical record is empty.")
    p = data[0]
    if not 1 <= p <= MAX_ELEMENTS:
        raise BadCanonicalRecord("Canonical record has an invalid size byte.", details={"p": p})
    bits = p * (p - 1) // 2
    size = (bits + 7) // 8
    if len(data) != 1 + size:
        raise BadCanonicalRecord(
            "Canonical record has the wrong length.",
            details={"expected": 1 + size, "actual": len(data)},
        )
    value = int.from_bytes(data[1:], "big")
    padding = size * 8 - bits
    if value & ((1 << padding) - 1):
        raise BadCanonicalRecord("Canonical record has nonzero padding bits.")
    value >>= padding

    down = [0] * p
    remaining = bits
    for position in range(1, p):
        remaining -= position
        row = value >> remaining & ((1 << position) - 1)
        down[position] = sum(1 << a for a in range(position) if row >> (position - 1 - a) & 1)
    try:
        return Poset(down=tuple(down))
    except (InvalidPoset, OutOfRange) as exc:
        raise BadCanonicalRecord("Canonical record is not a closed relation.") from exc


def parse_canonical_hex(text: str) -> Poset:
    try:
        data = bytes.fromhex(text.strip())
    except ValueError as exc:
        raise BadCanonicalRecord("Canonical record is not hexadecimal.") from exc
    return poset_from_canonical(data)
