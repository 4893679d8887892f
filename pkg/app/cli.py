"""Command-line entry point: ``ordercheck gen|omega|ehr|hstar|sturm|verify|serve``."""

from __future__ import annotations

import argparse
import sys
from collections.abc import Callable, Iterator, Sequence
from pathlib import Path
from typing import TextIO

from app.core.constants import EXIT_OK
from app.core.exception_handler import report_exception
from app.core.exceptions import InputError, OrderCheckError
from app.core.logging import get_logger, setup_logging
from app.core.settings import settings
from app.models.polynomial import RatPolynomial
from app.models.poset import Poset
from app.services.ehrhart_service import ehrhart_polynomial, hstar_from_ehrhart, order_polynomial
from app.services.generation import GenerationShard, generate_all
from app.services.polycheck_service import count_distinct_real_roots, is_real_rooted, sturm_chain
from app.services.poset_formats import format_poset_record, parse_poset_record, read_digraph6_file
from app.services.sweep_service import SweepConfig, SweepService, SweepSource, summary_exit_code

logger = get_logger(__name__)

ALGORITHMS = ("linear", "ideals", "auto")


def _add_shard_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--shards", type=int, default=1, metavar="K", help="Number of shards (default: 1).")
    parser.add_argument("--shard", type=int, default=0, metavar="I", help="Shard index in 0..K-1 (default: 0).")


def _add_source_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("record", nargs="?", help="One digraph6 line or hex canonical record.")
    parser.add_argument("--input", type=Path, help="digraph6 file; one output line per poset.")
    parser.add_argument("--algorithm", choices=ALGORITHMS, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordercheck",
        description="Exact Ehrhart and h*-vector verification for order polytopes of finite posets.",
    )
    parser.add_argument("--log-level", default=None, help=f"Logging level (default: {settings.log_level}).")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="Generate all posets on p elements up to isomorphism.")
    gen.add_argument("-p", type=int, required=True, help="Number of elements.")
    _add_shard_arguments(gen)
    gen.add_argument("--format", choices=("digraph6", "canon"), default="digraph6", dest="record_format")
    gen.add_argument("--output", type=Path, help="Write records here instead of stdout.")
    gen.set_defaults(handler=run_gen)

    for name, handler, summary in (
        ("omega", run_omega, "Order polynomial coefficients as num/den tokens."),
        ("ehr", run_ehr, "Ehrhart polynomial coefficients as num/den tokens."),
        ("hstar", run_hstar, "h*-vector entries h_0..h_p."),
    ):
        command = commands.add_parser(name, help=summary)
        _add_source_arguments(command)
        command.set_defaults(handler=handler)

    sturm = commands.add_parser("sturm", help="Count distinct real roots of an integer polynomial.")
    sturm.add_argument(
        "--coeffs",
        required=True,
        help="Comma-separated integer coefficients a0,a1,...,am (write --coeffs=-1,0,1 when a0 is negative).",
    )
    sturm.add_argument("--show-chain", action="store_true", help="Also print the Sturm chain.")
    sturm.set_defaults(handler=run_sturm)

    verify = commands.add_parser("verify", help="Verify every poset of a generated or ingested family.")
    source = verify.add_mutually_exclusive_group(required=True)
    source.add_argument("-p", type=int, help="Generate all posets on p elements.")
    source.add_argument("--input", type=Path, help="Verify the posets of a digraph6 file.")
    verify.add_argument("--algorithm", choices=ALGORITHMS, default=None)
    verify.add_argument("--jobs", type=int, default=None, help=f"Worker processes (default: {settings.jobs}).")
    _add_shard_arguments(verify)
    verify.add_argument("--checkpoint", type=Path, help="Resume from and save progress to this file.")
    verify.add_argument("--summary-only", action="store_true", help="Do not write per-poset records.")
    verify.add_argument("--output", type=Path, help="Write JSONL records here instead of stdout.")
    verify.add_argument("--max-units", type=int, default=None, help="Stop after this many work units.")
    verify.set_defaults(handler=run_verify)

    serve = commands.add_parser("serve", help="Serve the HTTP API with uvicorn.")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(handler=run_serve)

    return parser


def _write_lines(lines: Iterator[str], output: Path | None) -> int:
    if output is None:
        return _emit(lines, sys.stdout)
    try:
        with output.open("w", encoding="ascii") as handle:
            return _emit(lines, handle)
    except OSError as exc:
        raise InputError(f"Cannot write {output}: {exc.strerror or exc}", details={"path": str(output)}) from exc


def _emit(lines: Iterator[str], stream: TextIO) -> int:
    count = 0
    for line in lines:
        stream.write(line + "\n")
        count += 1
    return count


def run_gen(args: argparse.Namespace) -> int:
    shard = GenerationShard(
        p=args.p,
        shard_id=args.shard,
        shard_count=args.shards,
        units_per_shard=settings.units_per_shard,
    )
    posets = generate_all(args.p, shard)
    count = _write_lines((format_poset_record(poset, args.record_format) for poset in posets), args.output)
    logger.info("Generated %d posets on %d elements (%s)", count, args.p, shard.label)
    return EXIT_OK


def _input_posets(args: argparse.Namespace) -> Iterator[Poset]:
    if (args.record is None) == (args.input is None):
        raise InputError("Give exactly one of a record argument or --input.")
    if args.input is not None:
        yield from read_digraph6_file(args.input)
    else:
        yield parse_poset_record(args.record)


def _print_per_poset(args: argparse.Namespace, render: Callable[[Poset], list[str]]) -> int:
    _emit((" ".join(render(poset)) for poset in _input_posets(args)), sys.stdout)
    return EXIT_OK


def run_omega(args: argparse.Namespace) -> int:
    algorithm = args.algorithm or settings.algorithm
    return _print_per_poset(args, lambda poset: order_polynomial(poset, algorithm).tokens())


def run_ehr(args: argparse.Namespace) -> int:
    algorithm = args.algorithm or settings.algorithm
    return _print_per_poset(args, lambda poset: ehrhart_polynomial(poset, algorithm).tokens())


def run_hstar(args: argparse.Namespace) -> int:
    algorithm = args.algorithm or settings.algorithm

    def render(poset: Poset) -> list[str]:
        vector = hstar_from_ehrhart(ehrhart_polynomial(poset, algorithm), poset.p)
        return [str(entry) for entry in vector.h]

    return _print_per_poset(args, render)


def parse_coefficients(text: str) -> RatPolynomial:
    try:
        coeffs = [int(token) for token in text.replace(" ", "").split(",")]
    except ValueError as exc:
        raise InputError("Coefficients must be comma-separated integers.", details={"coeffs": text}) from exc
    return RatPolynomial.of(coeffs)


def run_sturm(args: argparse.Namespace) -> int:
    polynomial = parse_coefficients(args.coeffs)
    print(f"distinct_real_roots: {count_distinct_real_roots(polynomial)}")
    print(f"real_rooted: {str(is_real_rooted(polynomial)).lower()}")
    if args.show_chain:
        for member in sturm_chain(polynomial).polys:
            print(",".join(str(c) for c in member.integer_coeffs()))
    return EXIT_OK


def run_verify(args: argparse.Namespace) -> int:
    if args.checkpoint is not None and args.output is None and not args.summary_only:
        raise InputError("--checkpoint needs --output or --summary-only.")
    config = SweepConfig(
        source=SweepSource.GENERATE if args.p is not None else SweepSource.DIGRAPH6,
        p=args.p,
        input_path=args.input,
        shard_id=args.shard,
        shard_count=args.shards,
        algorithm=args.algorithm or settings.algorithm,
    )
    records_on_stdout = args.output is None and not args.summary_only
    service = SweepService(
        config,
        jobs=args.jobs or settings.jobs,
        output_path=args.output,
        output_stream=sys.stdout.buffer if records_on_stdout else None,
        checkpoint_path=args.checkpoint,
        summary_only=args.summary_only,
        max_units=args.max_units,
    )
    summary = service.run()
    report = sys.stderr if records_on_stdout else sys.stdout
    report.write(summary.model_dump_json(indent=2) + "\n")
    return summary_exit_code(summary)


def run_serve(args: argparse.Namespace) -> int:
    import uvicorn  # noqa: PLC0415

    uvicorn.run("app.main:app", host=args.host, port=args.port, log_level=settings.log_level.lower())
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level or settings.log_level)
    try:
        return args.handler(args)
    except (OrderCheckError, OSError) as exc:
        return report_exception(exc)


if __name__ == "__main__":
    sys.exit(main())
