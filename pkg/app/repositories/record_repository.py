from __future__ import annotations

from pathlib import Path
from types import TracebackType
from typing import BinaryIO, Self

from app.core.exceptions import CheckpointCorrupt, InputIoError
from app.schemas.verification import VerificationRecord


class JsonlRecordRepository:
    """Append-only JSONL sink for verification records."""

    def __init__(self, stream: BinaryIO, *, path: Path | None = None) -> None:
        self._stream = stream
        self._path = path

    @classmethod
    def create(cls, path: Path, *, resume_offset: int | None = None) -> Self:
        """Open ``path`` for writing; with ``resume_offset`` the file is cut back to that offset first."""
        try:
            if resume_offset is None:
                path.parent.mkdir(parents=True, exist_ok=True)
                stream = path.open("wb")
            else:
                stream = path.open("r+b")
                if path.stat().st_size < resume_offset:
                    stream.close()
                    raise CheckpointCorrupt(
                        "Output file is shorter than the checkpointed offset.",
                        details={"path": str(path), "offset": resume_offset},
                    )
                stream.truncate(resume_offset)
                stream.seek(resume_offset)
        except FileNotFoundError as exc:
            raise CheckpointCorrupt(
                "Output file of the checkpointed sweep is missing.",
                details={"path": str(path)},
            ) from exc
        except OSError as exc:
            raise InputIoError(f"Cannot open {path}", details={"path": str(path)}) from exc
        return cls(stream, path=path)

    def write(self, record: VerificationRecord) -> None:
        self._stream.write(record.model_dump_json().encode("utf-8") + b"\n")

    def flush(self) -> None:
        self._stream.flush()

    def offset(self) -> int | None:
        """Byte offset for checkpoints, ``None`` for unseekable streams."""
        if self._path is None:
            return None
        self.flush()
        return self._stream.tell()

    def close(self) -> None:
        self.flush()
        if self._path is not None:
            self._stream.close()

    def __enter__(self) -> Self:
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc: BaseException | None,
        traceback: TracebackType | None,
    ) -> None:
        self.close()
