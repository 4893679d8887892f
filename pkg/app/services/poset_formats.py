"""Text formats for posets: digraph6 lines and hex canonical records."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

from app.core.constants import (
    DIGRAPH6_BIAS,
    DIGRAPH6_HEADER,
    DIGRAPH6_MAX_BYTE,
    DIGRAPH6_MAX_SHORT_ORDER,
    DIGRAPH6_PREFIX,
)
from app.core.exceptions import BadByte, BadHeader, BadLength, InputIoError, OrderCheckError, OutOfRange
from app.models.poset import Poset
from app.services.canonical import canonical_form, parse_canonical_hex
from app.services.poset_service import transitive_closure

type RecordFormat = Literal["digraph6", "canon"]

HEADER_BYTES = DIGRAPH6_HEADER.encode("ascii")


@dataclass(slots=True, frozen=True)
class Digraph6Record:
    line: bytes
    n: int
    adjacency: tuple[tuple[bool, ...], ...]


def decode_digraph6(line: bytes | str) -> Digraph6Record:
    data = line.encode("utf-8") if isinstance(line, str) else line
    data = data.strip()
    data = data.removeprefix(HEADER_BYTES)

    if not data or data[0] != DIGRAPH6_PREFIX:
        raise BadHeader("digraph6 records start with '&'.")
    if len(data) < 2:  # noqa: PLR2004
        raise BadHeader("digraph6 record has no size field.")

    size_byte = data[1]
    if size_byte == DIGRAPH6_MAX_BYTE:
        raise BadHeader("Multi-byte digraph6 size fields are not supported.")
    if not DIGRAPH6_BIAS <= size_byte < DIGRAPH6_MAX_BYTE:
        raise BadByte("digraph6 size byte out of range.", details={"position": 1, "byte": size_byte})

    n = size_byte - DIGRAPH6_BIAS
    if n == 0:
        raise OutOfRange("Empty posets are not supported.", details={"p": 0})

    payload = data[2:]
    expected = (n * n + 5) // 6
    if len(payload) != expected:
        raise BadLength(details={"n": n, "expected": expected, "actual": len(payload)})
    for offset, value in enumerate(payload):
        if not DIGRAPH6_BIAS <= value <= DIGRAPH6_MAX_BYTE:
            raise BadByte(details={"position": offset + 2, "byte": value})

    def bit(index: int) -> bool:
        return bool((payload[index // 6] - DIGRAPH6_BIAS) >> (5 - index % 6) & 1)

    if any(bit(index) for index in range(n * n, expected * 6)):
        raise BadByte("digraph6 padding bits must be zero.", details={"position": len(data) - 1})

    adjacency = tuple(tuple(bit(i * n + j) for j in range(n)) for i in range(n))
    return Digraph6Record(line=data, n=n, adjacency=adjacency)


def parse_digraph6(line: bytes | str) -> Poset:
    """Read one digraph6 record as the directed graph of a strict order (closure or covers both work)."""
    return transitive_closure(decode_digraph6(line).adjacency)


def encode_digraph6(poset: Poset) -> bytes:
    """digraph6 line (without newline) of the full strict relation."""
    n = poset.p
    if n > DIGRAPH6_MAX_SHORT_ORDER:
        raise OutOfRange("Multi-byte digraph6 size fields are not supported.", details={"p": n})
    bits = [flag for row in poset.relation_matrix() for flag in row]
    bits += [False] * (-len(bits) % 6)
    payload = bytearray()
    for start in range(0, len(bits), 6):
        value = 0
        for flag in bits[start : start + 6]:
            value = value << 1 | flag
        payload.append(value + DIGRAPH6_BIAS)
    return bytes([DIGRAPH6_PREFIX, n + DIGRAPH6_BIAS]) + bytes(payload)


def iter_digraph6_lines(path: Path) -> Iterator[tuple[int, bytes]]:
    """Non-empty record lines with their 1-based line numbers; a leading ``>>digraph6<<`` is skipped."""
    try:
        with path.open("rb") as handle:
            for number, raw in enumerate(handle, start=1):
                line = raw.strip()
                if number == 1:
                    line = line.removeprefix(HEADER_BYTES)
                if line:
                    yield number, line
    except OSError as exc:
        raise InputIoError(f"Cannot read {path}: {exc.strerror or exc}", details={"path": str(path)}) from exc


def parse_numbered_line(number: int, line: bytes) -> Poset:
    try:
        return parse_digraph6(line)
    except OrderCheckError as exc:
        raise exc.with_details(line=number) from None


def read_digraph6_file(path: Path) -> Iterator[Poset]:
    for number, line in iter_digraph6_lines(path):
        yield parse_numbered_line(number, line)


def parse_poset_record(text: str) -> Poset:
    """One record in either format: digraph6 when it starts with ``&``, hex canonical otherwise."""
    stripped = text.strip().removeprefix(DIGRAPH6_HEADER)
    if stripped.startswith("&"):
        return parse_digraph6(stripped)
    return parse_canonical_hex(stripped)


def format_poset_record(poset: Poset, record_format: RecordFormat) -> str:
    if record_format == "digraph6":
        return encode_digraph6(poset).decode("ascii")
    return canonical_form(poset).hex()
