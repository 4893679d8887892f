import json
import logging
from pathlib import Path

import pytest

from app.core.constants import POSET_COUNTS
from app.core.exceptions import CheckpointCorrupt, ConfigMismatch, InputError, OutOfRange, SweepCountMismatch
from app.models.poset import Poset
from app.schemas.verification import VerificationRecord
from app.services import sweep_service
from app.services.generation import generate_all
from app.services.poset_formats import encode_digraph6
from app.services.poset_service import is_graded, is_narrow
from app.services.sweep_service import SweepConfig, SweepService, SweepSource, summary_exit_code
from app.services.verification_service import verify_poset


def generate_config(p: int, **overrides: object) -> SweepConfig:
    return SweepConfig(source=SweepSource.GENERATE, p=p, **overrides)


def read_records(path: Path) -> list[dict]:
    return [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]


def write_digraph6_file(path: Path, p: int) -> list[Poset]:
    posets = list(generate_all(p))
    lines = [">>digraph6<<" + encode_digraph6(posets[0]).decode("ascii")]
    lines += [encode_digraph6(poset).decode("ascii") for poset in posets[1:]]
    path.write_text("\n".join(lines) + "\n", encoding="ascii")
    return posets


def test_three_element_sweep_writes_every_record(tmp_path: Path) -> None:
    output = tmp_path / "records.jsonl"

    summary = SweepService(generate_config(3), output_path=output).run()

    assert summary.total_posets == 5
    assert summary.expected_posets == 5
    assert summary.complete
    assert summary.counterexample_total == 0
    assert summary_exit_code(summary) == 0
    assert [record["canon"] for record in read_records(output)] == ["0300", "0320", "0360", "03c0", "03e0"]


def test_six_element_sweep_summary() -> None:
    posets = list(generate_all(6))

    summary = SweepService(generate_config(6), summary_only=True).run()

    assert summary.total_posets == POSET_COUNTS[6]
    assert summary.counterexamples == dict.fromkeys(summary.counterexamples, 0)
    assert set(summary.counterexamples) == {
        "ehrhart_positive",
        "real_rooted",
        "log_concave",
        "unimodal",
        "graded_symmetric",
    }
    assert summary.narrow_posets == sum(is_narrow(poset) for poset in posets)
    assert summary.graded_posets == sum(is_graded(poset) for poset in posets)
    assert summary.cursor == summary.total_units


def test_worker_pool_output_is_identical_to_inline(tmp_path: Path) -> None:
    inline = tmp_path / "inline.jsonl"
    pooled = tmp_path / "pooled.jsonl"

    SweepService(generate_config(5, units_per_shard=4), output_path=inline).run()
    SweepService(generate_config(5, units_per_shard=4), jobs=2, output_path=pooled).run()

    assert inline.read_bytes() == pooled.read_bytes()


def test_shards_merge_to_the_unsharded_sweep(tmp_path: Path) -> None:
    full = tmp_path / "full.jsonl"
    SweepService(generate_config(6), output_path=full).run()

    merged: list[dict] = []
    total = 0
    for shard_id in range(3):
        output = tmp_path / f"shard-{shard_id}.jsonl"
        summary = SweepService(
            generate_config(6, shard_id=shard_id, shard_count=3, units_per_shard=2),
            output_path=output,
        ).run()
        assert summary.expected_posets is None
        total += summary.total_posets
        merged += read_records(output)

    assert total == POSET_COUNTS[6]
    assert sorted(merged, key=lambda record: record["canon"]) == sorted(
        read_records(full),
        key=lambda record: record["canon"],
    )


def test_interrupted_sweep_resumes_to_the_same_output(tmp_path: Path) -> None:
    fresh = tmp_path / "fresh.jsonl"
    resumed = tmp_path / "resumed.jsonl"
    checkpoint = tmp_path / "sweep.ckpt"
    config = generate_config(7, units_per_shard=8)
    SweepService(config, output_path=fresh).run()

    paused = SweepService(
        config,
        output_path=resumed,
        checkpoint_path=checkpoint,
        checkpoint_interval=1,
        max_units=3,
    ).run()
    assert not paused.complete
    assert paused.cursor == 3
    assert 0 < paused.total_posets < POSET_COUNTS[7]

    finished = SweepService(config, output_path=resumed, checkpoint_path=checkpoint, checkpoint_interval=1).run()

    assert finished.complete
    assert finished.total_posets == POSET_COUNTS[7]
    assert resumed.read_bytes() == fresh.read_bytes()


def test_completed_checkpoint_is_a_no_op(tmp_path: Path) -> None:
    output = tmp_path / "records.jsonl"
    checkpoint = tmp_path / "sweep.ckpt"
    first = SweepService(generate_config(4), output_path=output, checkpoint_path=checkpoint).run()
    written = output.read_bytes()

    again = SweepService(generate_config(4), output_path=output, checkpoint_path=checkpoint).run()

    assert again == first
    assert output.read_bytes() == written


def test_checkpoint_from_another_configuration_is_refused(tmp_path: Path) -> None:
    checkpoint = tmp_path / "sweep.ckpt"
    SweepService(generate_config(4), summary_only=True, checkpoint_path=checkpoint, max_units=1).run()

    with pytest.raises(ConfigMismatch):
        SweepService(generate_config(4, algorithm="ideals"), summary_only=True, checkpoint_path=checkpoint).run()


def test_summary_only_checkpoint_cannot_resume_into_a_record_file(tmp_path: Path) -> None:
    output = tmp_path / "records.jsonl"
    checkpoint = tmp_path / "sweep.ckpt"
    config = generate_config(6)
    SweepService(config, summary_only=True, checkpoint_path=checkpoint, checkpoint_interval=1, max_units=3).run()

    with pytest.raises(ConfigMismatch):
        SweepService(config, output_path=output, checkpoint_path=checkpoint).run()
    assert not output.exists()


def test_checkpoint_cannot_resume_into_another_record_file(tmp_path: Path) -> None:
    checkpoint = tmp_path / "sweep.ckpt"
    config = generate_config(5, units_per_shard=4)
    SweepService(
        config,
        output_path=tmp_path / "first.jsonl",
        checkpoint_path=checkpoint,
        checkpoint_interval=1,
        max_units=1,
    ).run()

    with pytest.raises(ConfigMismatch):
        SweepService(config, output_path=tmp_path / "second.jsonl", checkpoint_path=checkpoint).run()
    with pytest.raises(ConfigMismatch):
        SweepService(config, summary_only=True, checkpoint_path=checkpoint).run()


def test_corrupt_checkpoint_is_refused(tmp_path: Path) -> None:
    checkpoint = tmp_path / "sweep.ckpt"
    checkpoint.write_text("{", encoding="utf-8")

    with pytest.raises(CheckpointCorrupt):
        SweepService(generate_config(4), summary_only=True, checkpoint_path=checkpoint).run()


def test_missing_output_of_checkpointed_sweep_is_refused(tmp_path: Path) -> None:
    output = tmp_path / "records.jsonl"
    checkpoint = tmp_path / "sweep.ckpt"
    SweepService(
        generate_config(5, units_per_shard=4),
        output_path=output,
        checkpoint_path=checkpoint,
        checkpoint_interval=1,
        max_units=1,
    ).run()
    output.unlink()

    with pytest.raises(CheckpointCorrupt):
        SweepService(generate_config(5, units_per_shard=4), output_path=output, checkpoint_path=checkpoint).run()


def test_checkpoint_requires_a_record_file(tmp_path: Path) -> None:
    with pytest.raises(InputError):
        SweepService(generate_config(3), checkpoint_path=tmp_path / "sweep.ckpt")


def test_digraph6_sweep_in_batches(tmp_path: Path) -> None:
    source = tmp_path / "posets.d6"
    posets = write_digraph6_file(source, 4)
    config = SweepConfig(source=SweepSource.DIGRAPH6, input_path=source, batch_size=5)

    summary = SweepService(config, summary_only=True).run()

    assert summary.total_posets == len(posets) == POSET_COUNTS[4]
    assert summary.total_units == 4
    assert summary.expected_posets is None
    assert summary.p is None


def test_digraph6_shards_split_batches(tmp_path: Path) -> None:
    source = tmp_path / "posets.d6"
    write_digraph6_file(source, 4)

    totals = [
        SweepService(
            SweepConfig(source=SweepSource.DIGRAPH6, input_path=source, batch_size=3, shard_id=i, shard_count=2),
            summary_only=True,
        )
        .run()
        .total_posets
        for i in range(2)
    ]

    assert totals == [9, 7]


def test_bad_digraph6_line_stops_the_sweep(tmp_path: Path) -> None:
    source = tmp_path / "posets.d6"
    source.write_text("&AO\n&A?\n&AW\n", encoding="ascii")

    with pytest.raises(InputError) as exc_info:
        SweepService(SweepConfig(source=SweepSource.DIGRAPH6, input_path=source), summary_only=True).run()
    assert exc_info.value.details["line"] == 3


def test_counterexamples_are_logged_and_fail_the_exit_code(
    monkeypatch: pytest.MonkeyPatch,
    caplog: pytest.LogCaptureFixture,
) -> None:
    def not_real_rooted(poset: Poset, algorithm: str) -> VerificationRecord:
        return verify_poset(poset, algorithm).model_copy(update={"real_rooted": False})

    monkeypatch.setattr(sweep_service, "verify_poset", not_real_rooted)

    with caplog.at_level(logging.WARNING, logger="app.services.sweep_service"):
        summary = SweepService(generate_config(3), summary_only=True).run()

    assert summary.counterexamples["real_rooted"] == 5
    assert summary_exit_code(summary) == 1
    assert sum("Counterexample (real_rooted)" in message for message in caplog.messages) == 5
    assert any(message.endswith("Hasse diagram:\n1 < 2\n2 < 3") for message in caplog.messages)


def test_count_mismatch_with_known_table_raises(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setitem(POSET_COUNTS, 3, 6)

    with pytest.raises(SweepCountMismatch) as exc_info:
        SweepService(generate_config(3), summary_only=True).run()
    assert exc_info.value.details == {"p": 3, "expected": 6, "actual": 5}


def test_config_validation() -> None:
    with pytest.raises(InputError):
        SweepConfig(source=SweepSource.GENERATE)
    with pytest.raises(InputError):
        SweepConfig(source=SweepSource.DIGRAPH6)
    with pytest.raises(OutOfRange):
        generate_config(13)
    with pytest.raises(OutOfRange):
        generate_config(4, shard_id=2, shard_count=2)


def test_config_hash_tracks_identity_fields() -> None:
    assert generate_config(5).config_hash() == generate_config(5).config_hash()
    assert generate_config(5).config_hash() != generate_config(5, algorithm="linear").config_hash()
    assert generate_config(5).config_hash() != generate_config(6).config_hash()


@pytest.mark.slow
def test_eight_element_sweep_has_no_counterexamples() -> None:
    summary = SweepService(generate_config(8), jobs=4, summary_only=True).run()

    assert summary.total_posets == POSET_COUNTS[8]
    assert summary.counterexample_total == 0
