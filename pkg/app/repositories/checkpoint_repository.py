from __future__ import annotations

from pathlib import Path

from pydantic import ValidationError

from app.core.exceptions import CheckpointCorrupt, InputIoError
from app.core.logging import get_logger
from app.schemas.checkpoint import SweepCheckpoint

logger = get_logger(__name__)


class CheckpointRepository:
    """Single-writer JSON checkpoint file, replaced atomically on every save."""

    def __init__(self, path: Path) -> None:
        self._path = path

    @property
    def path(self) -> Path:
        return self._path

    def load(self) -> SweepCheckpoint | None:
        if not self._path.exists():
            return None
        try:
            raw = self._path.read_text(encoding="utf-8")
        except OSError as exc:
            raise InputIoError(f"Cannot read checkpoint {self._path}", details={"path": str(self._path)}) from exc
        try:
            return SweepCheckpoint.model_validate_json(raw)
        except ValidationError as exc:
            raise CheckpointCorrupt(details={"path": str(self._path), "errors": exc.error_count()}) from exc

    def save(self, checkpoint: SweepCheckpoint) -> None:
        staging = self._path.with_name(f"{self._path.name}.tmp")
        try:
            self._path.parent.mkdir(parents=True, exist_ok=True)
            staging.write_text(checkpoint.model_dump_json(), encoding="utf-8")
            staging.replace(self._path)
        except OSError as exc:
            raise InputIoError(f"Cannot write checkpoint {self._path}", details={"path": str(self._path)}) from exc
        logger.info(
            "Checkpoint saved at unit %d (%d posets)",
            checkpoint.summary.cursor,
            checkpoint.summary.total_posets,
        )
