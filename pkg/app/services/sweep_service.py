"""Exhaustive verification sweeps over generated or ingested posets.

Work is cut into units: subtrees of the generation tree, or fixed-size batches of digraph6 lines. Units
are verified by a worker pool and written back in unit order by this process alone, so the record stream
does not depend on the number of workers. Checkpoints store the number of completed units.
"""

from __future__ import annotations

import hashlib
import json
import time
from collections import Counter
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext
from dataclasses import dataclass, field
from enum import StrEnum
from itertools import batched, islice
from pathlib import Path
from typing import BinaryIO

from app.core.constants import CHECKED_PROPERTIES, EXIT_COUNTEREXAMPLE, EXIT_OK, POSET_COUNTS
from app.core.exceptions import ConfigMismatch, InputError, OutOfRange, SweepCountMismatch
from app.core.logging import get_logger, shard_context
from app.core.settings import AlgorithmName, settings
from app.models.poset import Poset
from app.repositories.checkpoint_repository import CheckpointRepository
from app.repositories.record_repository import JsonlRecordRepository
from app.schemas.checkpoint import SweepCheckpoint
from app.schemas.verification import SweepSummary, VerificationRecord
from app.services.canonical import poset_from_canonical
from app.services.generation import GenerationShard, Relation, check_element_count, expand
from app.services.poset_formats import iter_digraph6_lines, parse_numbered_line
from app.services.poset_service import hasse_diagram
from app.services.verification_service import failed_properties, verify_poset

logger = get_logger(__name__)


class SweepSource(StrEnum):
    GENERATE = "generate"
    DIGRAPH6 = "digraph6"


@dataclass(slots=True, frozen=True)
class SweepConfig:
    source: SweepSource
    p: int | None = None
    input_path: Path | None = None
    shard_id: int = 0
    shard_count: int = 1
    algorithm: AlgorithmName = "auto"
    units_per_shard: int = field(default_factory=lambda: settings.units_per_shard)
    batch_size: int = field(default_factory=lambda: settings.digraph6_batch_size)

    def __post_init__(self) -> None:
        if self.shard_count < 1 or not 0 <= self.shard_id < self.shard_count:
            raise OutOfRange(
                "Shard index must satisfy 0 <= shard < shards.",
                details={"shard": self.shard_id, "shards": self.shard_count},
            )
        if self.source is SweepSource.GENERATE:
            if self.p is None:
                raise InputError("Generated sweeps need an element count.")
            check_element_count(self.p, settings.max_generate_elements)
        elif self.input_path is None:
            raise InputError("digraph6 sweeps need an input file.")

    @property
    def shard_label(self) -> str:
        return f"shard {self.shard_id}/{self.shard_count}" if self.shard_count > 1 else "unsharded"

    def config_hash(self) -> str:
        identity = {
            "source": self.source.value,
            "p": self.p,
            "input_path": str(self.input_path.resolve()) if self.input_path else None,
            "shard_id": self.shard_id,
            "shard_count": self.shard_count,
            "algorithm": self.algorithm,
            "units_per_shard": self.units_per_shard,
            "batch_size": self.batch_size,
        }
        return hashlib.sha256(json.dumps(identity, sort_keys=True).encode("utf-8")).hexdigest()


@dataclass(slots=True, frozen=True)
class WorkUnit:
    index: int
    source: SweepSource
    algorithm: AlgorithmName
    p: int = 0
    root: Relation = ()
    lines: tuple[tuple[int, bytes], ...] = ()

    def posets(self) -> Iterator[Poset]:
        if self.source is SweepSource.GENERATE:
            for down in expand(self.root, self.p):
                yield Poset(down=down)
        else:
            for number, line in self.lines:
                yield parse_numbered_line(number, line)


def run_unit(unit: WorkUnit) -> list[VerificationRecord]:
    return [verify_poset(poset, unit.algorithm) for poset in unit.posets()]


@dataclass(slots=True)
class SweepTally:
    total: int = 0
    counterexamples: Counter[str] = field(default_factory=Counter)
    narrow: int = 0
    graded: int = 0
    cursor: int = 0
    elapsed: float = 0.0

    @classmethod
    def from_summary(cls, summary: SweepSummary) -> SweepTally:
        return cls(
            total=summary.total_posets,
            counterexamples=Counter(summary.counterexamples),
            narrow=summary.narrow_posets,
            graded=summary.graded_posets,
            cursor=summary.cursor,
            elapsed=summary.elapsed_seconds,
        )

    def add(self, record: VerificationRecord) -> list[str]:
        self.total += 1
        self.narrow += record.narrow
        self.graded += record.graded
        failed = failed_properties(record)
        self.counterexamples.update(failed)
        return failed


class SweepService:
    def __init__(
        self,
        config: SweepConfig,
        *,
        jobs: int = 1,
        output_path: Path | None = None,
        output_stream: BinaryIO | None = None,
        checkpoint_path: Path | None = None,
        summary_only: bool = False,
        checkpoint_interval: int | None = None,
        max_units: int | None = None,
    ) -> None:
        if checkpoint_path is not None and output_path is None and not summary_only:
            raise InputError("Checkpointed sweeps write records to a file (--output) or none (--summary-only).")
        self._config = config
        self._jobs = max(jobs, 1)
        self._output_path = None if summary_only else output_path
        self._output_stream = None if summary_only else output_stream
        self._checkpoints = CheckpointRepository(checkpoint_path) if checkpoint_path else None
        self._checkpoint_interval = checkpoint_interval or settings.checkpoint_interval
        self._max_units = max_units
        self._total_units: int | None = None

    def _generation_units(self) -> Iterator[WorkUnit]:
        config = self._config
        assert config.p is not None  # noqa: S101
        shard = GenerationShard(
            p=config.p,
            shard_id=config.shard_id,
            shard_count=config.shard_count,
            units_per_shard=config.units_per_shard,
        )
        prefixes = shard.prefixes()
        self._total_units = len(prefixes)
        logger.info(
            "Planned %d of %d subtrees rooted at size %d for p=%d",
            len(prefixes),
            shard.total_units,
            shard.split_level,
            config.p,
        )
        for index, root in enumerate(prefixes):
            yield WorkUnit(index=index, source=config.source, algorithm=config.algorithm, p=config.p, root=root)

    def _digraph6_units(self) -> Iterator[WorkUnit]:
        config = self._config
        assert config.input_path is not None  # noqa: S101
        index = 0
        for batch_number, lines in enumerate(batched(iter_digraph6_lines(config.input_path), config.batch_size)):
            if batch_number % config.shard_count == config.shard_id:
                yield WorkUnit(index=index, source=config.source, algorithm=config.algorithm, lines=lines)
                index += 1

    def units(self) -> Iterator[WorkUnit]:
        if self._config.source is SweepSource.GENERATE:
            return self._generation_units()
        return self._digraph6_units()

    def _summary(self, tally: SweepTally, *, complete: bool) -> SweepSummary:
        config = self._config
        unsharded_generation = config.source is SweepSource.GENERATE and config.shard_count == 1
        return SweepSummary(
            p=config.p,
            source=config.source.value,
            total_posets=tally.total,
            expected_posets=POSET_COUNTS.get(config.p or 0) if unsharded_generation else None,
            counterexamples={name: tally.counterexamples[name] for name in CHECKED_PROPERTIES},
            narrow_posets=tally.narrow,
            graded_posets=tally.graded,
            shard_id=config.shard_id,
            shard_count=config.shard_count,
            cursor=tally.cursor,
            total_units=self._total_units if self._total_units is not None else (tally.cursor if complete else None),
            complete=complete,
            elapsed_seconds=round(tally.elapsed, 3),
        )

    def _save_checkpoint(self, summary: SweepSummary, records: JsonlRecordRepository | None) -> None:
        if self._checkpoints is None:
            return
        self._checkpoints.save(
            SweepCheckpoint(
                config_hash=self._config.config_hash(),
                output_path=self._output_target(),
                output_offset=records.offset() if records else None,
                summary=summary,
            ),
        )

    def _open_records(self, resume_offset: int | None) -> JsonlRecordRepository | None:
        if self._output_path is not None:
            return JsonlRecordRepository.create(self._output_path, resume_offset=resume_offset)
        if self._output_stream is not None:
            return JsonlRecordRepository(self._output_stream)
        return None

    def _output_target(self) -> str | None:
        return str(self._output_path.resolve()) if self._output_path is not None else None

    def _resume(self) -> tuple[SweepTally, int | None, SweepSummary | None]:
        checkpoint = self._checkpoints.load() if self._checkpoints else None
        if checkpoint is None:
            return SweepTally(), None, None
        checkpoint_label = str(self._checkpoints.path) if self._checkpoints else None
        if checkpoint.config_hash != self._config.config_hash():
            raise ConfigMismatch(details={"checkpoint": checkpoint_label})
        if checkpoint.output_path != self._output_target():
            raise ConfigMismatch(
                "Checkpoint was written for a different record file.",
                details={
                    "checkpoint": checkpoint_label,
                    "expected": checkpoint.output_path,
                    "actual": self._output_target(),
                },
            )
        if checkpoint.summary.complete:
            logger.info("Checkpointed sweep is already complete")
            return SweepTally.from_summary(checkpoint.summary), None, checkpoint.summary
        logger.info("Resuming after %d completed units", checkpoint.summary.cursor)
        return SweepTally.from_summary(checkpoint.summary), checkpoint.output_offset, None

    def run(self) -> SweepSummary:
        tally, resume_offset, finished = self._resume()
        if finished is not None:
            return finished

        started = time.monotonic()
        elapsed_before = tally.elapsed
        remaining = islice(self.units(), tally.cursor, None)
        selected = islice(remaining, self._max_units) if self._max_units is not None else remaining
        window = max(self._checkpoint_interval, self._jobs)

        pool = ProcessPoolExecutor(max_workers=self._jobs) if self._jobs > 1 else None
        records = self._open_records(resume_offset)
        with shard_context(self._config.shard_label), pool or nullcontext(), records or nullcontext():
            logger.info("Sweep started: %s, p=%s, jobs=%d", self._config.source.value, self._config.p, self._jobs)
            for batch in batched(selected, window):
                results = pool.map(run_unit, batch) if pool else map(run_unit, batch)
                for unit_records in results:
                    for record in unit_records:
                        failed = tally.add(record)
                        if failed:
                            logger.warning(
                                "Counterexample (%s): %s\nHasse diagram:\n%s",
                                ", ".join(failed),
                                record.model_dump_json(),
                                hasse_diagram(poset_from_canonical(bytes.fromhex(record.canon))),
                            )
                        if records:
                            records.write(record)
                    tally.cursor += 1
                tally.elapsed = elapsed_before + time.monotonic() - started
                self._save_checkpoint(self._summary(tally, complete=False), records)

            complete = self._max_units is None or next(remaining, None) is None
            tally.elapsed = elapsed_before + time.monotonic() - started
            summary = self._summary(tally, complete=complete)
            if complete and summary.expected_posets is not None and summary.total_posets != summary.expected_posets:
                raise SweepCountMismatch(
                    details={"p": summary.p, "expected": summary.expected_posets, "actual": summary.total_posets},
                )
            self._save_checkpoint(summary, records)

        logger.info(
            "Sweep %s: %d posets, %d counterexamples, %.1fs",
            "complete" if complete else "paused",
            summary.total_posets,
            summary.counterexample_total,
            summary.elapsed_seconds,
        )
        return summary


def summary_exit_code(summary: SweepSummary) -> int:
    return EXIT_COUNTEREXAMPLE if summary.counterexample_total else EXIT_OK
