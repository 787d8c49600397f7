"""Command-line front end: gen, test, oracle, bench.

Exit codes: 0 success, 1 runtime failure, 2 usage error, 3 a test failed.
"""

import argparse
import asyncio
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import BinaryIO, TextIO

import aiosqlite
import numpy as np

from ..archive import ReportArchive
from ..combiner import ExtendedGenerator, index_to_unit, open_unit
from ..errors import InsufficientDataError, SourceExhaustedError, StreamParseError
from ..sources import SourceKind, derive_seed
from ..stats import (
    OracleResult,
    TestReport,
    chi_square_uniformity,
    exhaustive_oracle,
    ks_uniformity,
    low_bits_uniformity,
)
from .bench import run_benchmark
from .config import RunConfig
from .formats import read_stream, write_stream

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_TEST_FAILED = 3

RUNTIME_ERRORS = (
    RuntimeError,
    OSError,
    StreamParseError,
    InsufficientDataError,
    SourceExhaustedError,
)


def _p_band(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'lo,hi', got {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splicerand",
        description="Extended-precision uniform random numbers from pairs of w-bit draws.",
    )
    parser.add_argument(
        "--log-level",
        default=os.environ.get("SPLICERAND_LOG_LEVEL", "WARNING"),
        help="Logging level for stderr (default: $SPLICERAND_LOG_LEVEL or WARNING).",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    stream = argparse.ArgumentParser(add_help=False)
    stream.add_argument("--source", choices=[k.value for k in SourceKind])
    stream.add_argument("--seed", type=int)
    stream.add_argument("--n", type=int, help="Number of samples.")
    stream.add_argument("--w", type=int, help="Bits per base draw, 2..26.")
    stream.add_argument("--m", type=int, help="Base modulus (default 2^w).")

    gen = sub.add_parser("gen", parents=[stream], help="Write extended samples.")
    gen.add_argument("--format", choices=["bin", "text", "hex"])
    gen.add_argument("--open-interval", action="store_true", default=None)
    gen.add_argument("--out", help="Output file (default: stdout).")
    gen.add_argument(
        "--shards", type=int, help="Independent seeded streams, concatenated."
    )

    test = sub.add_parser("test", parents=[stream], help="Run uniformity tests.")
    test.add_argument("--test", choices=["chi2", "ks", "lowbits", "all"])
    test.add_argument("--bins", type=int)
    test.add_argument("--p-band", type=_p_band, help="Passing p-value band 'lo,hi'.")
    test.add_argument(
        "--in", dest="input", help="Read samples from a file ('-' for stdin)."
    )
    test.add_argument("--format", choices=["bin", "text", "hex"])
    test.add_argument("--open-interval", action="store_true", default=None)
    test.add_argument("--store", help="Append reports to a SQLite archive.")

    oracle = sub.add_parser("oracle", help="Exhaustive exact-uniformity check.")
    oracle.add_argument("--m", type=int)
    oracle.add_argument("--w", type=int)
    oracle.add_argument("--store", help="Append the result to a SQLite archive.")

    sub.add_parser(
        "bench", parents=[stream], help="Throughput of raw vs extended draws."
    )
    return parser


def _generator(cfg: RunConfig, seed: int) -> ExtendedGenerator:
    return ExtendedGenerator.create(cfg.source.value, seed=seed, w=cfg.w, m=cfg.m)


def generate_values(cfg: RunConfig) -> np.ndarray:
    """The n values of a gen run, sharded over independent streams when asked."""
    if cfg.shards == 1:
        return _generator(cfg, cfg.seed).values(cfg.n, cfg.open_interval)
    base, extra = divmod(cfg.n, cfg.shards)
    sizes = [base + (1 if i < extra else 0) for i in range(cfg.shards)]
    seeds = [derive_seed(cfg.seed, i) for i in range(cfg.shards)]
    logger.info("gen: %d shards of sizes %s", cfg.shards, sizes)

    def shard(i: int) -> np.ndarray:
        return _generator(cfg, seeds[i]).values(sizes[i], cfg.open_interval)

    with ThreadPoolExecutor(max_workers=cfg.shards) as pool:
        parts = list(pool.map(shard, range(cfg.shards)))
    return np.concatenate(parts)


def run_gen(cfg: RunConfig, out: BinaryIO) -> int:
    write_stream(generate_values(cfg), cfg.format, out)
    return EXIT_OK


async def _archive(path: str, reports: list[TestReport | OracleResult]):
    archive = await ReportArchive.create_file(path)
    try:
        for report in reports:
            await archive.save(report)
    except aiosqlite.Error as e:
        raise RuntimeError(f"Failed to archive reports in {path}: {e}")
    finally:
        await archive.close()


def _load_samples(cfg: RunConfig, stdin: BinaryIO | None) -> np.ndarray:
    if str(cfg.input) == "-":
        return read_stream(stdin or sys.stdin.buffer, cfg.format)
    with open(cfg.input, "rb") as fh:
        return read_stream(fh, cfg.format)


def run_test(cfg: RunConfig, out: TextIO, stdin: BinaryIO | None = None) -> int:
    """Run the selected tests, print one JSON report per line."""
    p = cfg.resolution
    indices = None
    if cfg.input is not None:
        samples = _load_samples(cfg, stdin)
    else:
        indices = _generator(cfg, cfg.seed).indices(cfg.n)
        samples = index_to_unit(indices, cfg.modulus, p)
        if cfg.open_interval:
            samples = open_unit(samples, p)

    selected = ["chi2", "ks", "lowbits"] if cfg.test == "all" else [cfg.test]
    reports: list[TestReport] = []
    for name in selected:
        if name == "chi2":
            reports.append(chi_square_uniformity(samples, cfg.bins, cfg.p_band))
        elif name == "ks":
            reports.append(ks_uniformity(samples, cfg.p_band))
        elif indices is None:
            if cfg.test == "lowbits":
                raise ValueError(
                    "The low-bits test needs internally generated samples."
                )
            logger.warning(
                "skipping lowbits: lattice indices are not in an external stream"
            )
        else:
            bins = min(cfg.bins, p.grid_size)
            reports.append(low_bits_uniformity(indices, p, bins, cfg.p_band))

    for report in reports:
        print(report.model_dump_json(), file=out)
    if cfg.store is not None:
        asyncio.run(_archive(str(cfg.store), reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_TEST_FAILED


def run_oracle(cfg: RunConfig, out: TextIO) -> int:
    result = exhaustive_oracle(cfg.modulus, cfg.resolution)
    print(result.summary(), file=out)
    if cfg.store is not None:
        asyncio.run(_archive(str(cfg.store), [result]))
    return EXIT_OK if result.uniform else EXIT_TEST_FAILED


def run_bench(cfg: RunConfig, out: TextIO) -> int:
    result = run_benchmark(cfg.source.value, seed=cfg.seed, w=cfg.w, m=cfg.m, n=cfg.n)
    for line in result.lines():
        print(line, file=out)
    return EXIT_OK


def _dispatch(cfg: RunConfig) -> int:
    if cfg.subcommand == "gen":
        if cfg.out is None:
            return run_gen(cfg, sys.stdout.buffer)
        with open(cfg.out, "wb") as fh:
            return run_gen(cfg, fh)
    if cfg.subcommand == "test":
        return run_test(cfg, sys.stdout)
    if cfg.subcommand == "oracle":
        return run_oracle(cfg, sys.stdout)
    return run_bench(cfg, sys.stdout)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    logging.basicConfig(
        level=str(ns.log_level).upper(),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    debug = logger.isEnabledFor(logging.DEBUG)
    try:
        cfg = RunConfig.from_namespace(ns)
        return _dispatch(cfg)
    except RUNTIME_ERRORS as e:
        logger.debug("runtime failure", exc_info=debug)
        print(f"splicerand: error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as e:
        logger.debug("usage error", exc_info=debug)
        print(f"splicerand: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
