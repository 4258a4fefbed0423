"""Operation-count measurement of the GCD algorithms across operand bit
sizes, with least-squares growth fitting and CSV emission.

Reproducibility contract: every trial pair is drawn from a
``random.Random`` seeded with the SHA-256 digest of
``"gcd-bench:{seed}:{bits}:{trial}"``, so a report is a pure function of its
:class:`TrialSpec` -- independent of process, platform, and any execution
parallelism.  Sampled operands are odd with the top bit set, giving every
draw the exact nominal bit length and making it a legal input for every
algorithm.
"""

from __future__ import annotations

import csv
import hashlib
import random
import statistics
from dataclasses import dataclass, fields
from pathlib import Path
from typing import IO, Iterable, Sequence

from .errors import DomainError
from .gcd import Algorithm, OperationCounts, run_algorithm

#: Exact column order of the CSV schema.
CSV_HEADER = (
    "algorithm",
    "bits",
    "trial",
    "iterations",
    "subtractions",
    "shifts",
    "mod_reductions",
    "comparisons",
)

_COUNT_FIELDS = tuple(f.name for f in fields(OperationCounts))


@dataclass(frozen=True)
class TrialSpec:
    """What to measure: algorithms, bit-size sweep, trials per size, seed."""

    algorithms: tuple[Algorithm, ...]
    bits_min: int
    bits_max: int
    bits_step: int = 64
    trials_per_size: int = 10
    seed: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "algorithms", tuple(Algorithm(a) for a in self.algorithms)
        )
        if not self.algorithms:
            raise DomainError("no algorithms selected")
        if self.bits_min < 2:
            raise DomainError("bits_min must be >= 2")
        if self.bits_max < self.bits_min:
            raise DomainError("bits_max must be >= bits_min")
        if self.bits_step < 1:
            raise DomainError("bits_step must be >= 1")
        if self.trials_per_size < 1:
            raise DomainError("trials_per_size must be >= 1")

    def sizes(self) -> range:
        return range(self.bits_min, self.bits_max + 1, self.bits_step)


@dataclass(frozen=True)
class BenchRow:
    algorithm: Algorithm
    bits: int
    trial: int
    counts: OperationCounts


@dataclass(frozen=True)
class SizeStats:
    """Per-(algorithm, bit size) mean and sample standard deviation of each
    count (standard deviation is 0.0 for a single trial)."""

    algorithm: Algorithm
    bits: int
    mean: dict[str, float]
    std: dict[str, float]


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]

    def algorithms(self) -> list[Algorithm]:
        seen: list[Algorithm] = []
        for row in self.rows:
            if row.algorithm not in seen:
                seen.append(row.algorithm)
        return seen

    def mean_series(
        self, algorithm: Algorithm | str, metric: str = "iterations"
    ) -> list[tuple[int, float]]:
        """``(bits, mean metric)`` pairs for one algorithm, bits ascending."""
        alg = Algorithm(algorithm)
        buckets: dict[int, list[int]] = {}
        for row in self.rows:
            if row.algorithm is alg:
                buckets.setdefault(row.bits, []).append(
                    getattr(row.counts, metric)
                )
        return [
            (bits, statistics.fmean(values))
            for bits, values in sorted(buckets.items())
        ]

    def size_stats(self, algorithm: Algorithm | str) -> list[SizeStats]:
        alg = Algorithm(algorithm)
        buckets: dict[int, list[OperationCounts]] = {}
        for row in self.rows:
            if row.algorithm is alg:
                buckets.setdefault(row.bits, []).append(row.counts)
        out = []
        for bits, counts in sorted(buckets.items()):
            mean = {}
            std = {}
            for name in _COUNT_FIELDS:
                values = [getattr(c, name) for c in counts]
                mean[name] = statistics.fmean(values)
                std[name] = statistics.stdev(values) if len(values) > 1 else 0.0
            out.append(SizeStats(alg, bits, mean, std))
        return out


@dataclass(frozen=True)
class FitResult:
    """Ordinary least-squares line through (bit length, mean count)."""

    slope: float
    intercept: float
    r_squared: float


def count_operations(algorithm: Algorithm | str, a: int, b: int) -> OperationCounts:
    """Run one algorithm on ``(a, b)`` and return its operation tallies."""
    return run_algorithm(algorithm, a, b, record_steps=False).counts


def trial_pair(seed: int, bits: int, trial: int) -> tuple[int, int]:
    """The deterministic odd pair of exactly ``bits`` bits for one trial."""
    if bits < 2:
        raise DomainError("bit length must be >= 2")
    digest = hashlib.sha256(f"gcd-bench:{seed}:{bits}:{trial}".encode("ascii")).digest()
    rng = random.Random(int.from_bytes(digest, "big"))
    return _random_odd(rng, bits), _random_odd(rng, bits)


def _random_odd(rng: random.Random, bits: int) -> int:
    middle = rng.getrandbits(bits - 2) if bits > 2 else 0
    return (1 << (bits - 1)) | (middle << 1) | 1


def run_trials(spec: TrialSpec) -> BenchReport:
    """Measure every (algorithm, size, trial) cell of ``spec``.

    The same pairs are presented to every selected algorithm, and identical
    specs produce identical reports.
    """
    rows = []
    for algorithm in spec.algorithms:
        for bits in spec.sizes():
            for trial in range(spec.trials_per_size):
                a, b = trial_pair(spec.seed, bits, trial)
                counts = run_algorithm(algorithm, a, b, record_steps=False).counts
                rows.append(BenchRow(algorithm, bits, trial, counts))
    return BenchReport(tuple(rows))


def fit_growth(
    report: BenchReport, algorithm: Algorithm | str, metric: str = "iterations"
) -> FitResult:
    """Least squares on the per-size means of ``metric`` against bit length.

    Requires at least three distinct bit sizes.  ``r_squared`` is
    ``1 - SS_res / SS_tot``, clamped to [0, 1]; data with zero variance fits
    its own mean exactly and reports 1.0.
    """
    series = report.mean_series(algorithm, metric)
    if len(series) < 3:
        raise DomainError("insufficient sizes for fit")
    xs = [float(bits) for bits, _ in series]
    ys = [mean for _, mean in series]
    n = len(xs)
    x_bar = sum(xs) / n
    y_bar = sum(ys) / n
    sxx = sum((x - x_bar) ** 2 for x in xs)
    sxy = sum((x - x_bar) * (y - y_bar) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = y_bar - slope * x_bar
    ss_res = sum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys))
    ss_tot = sum((y - y_bar) ** 2 for y in ys)
    if ss_tot == 0.0:
        r_squared = 1.0 if ss_res == 0.0 else 0.0
    else:
        r_squared = 1.0 - ss_res / ss_tot
    return FitResult(slope, intercept, min(1.0, max(0.0, r_squared)))


def write_csv(report: BenchReport, dest: str | Path | IO[str]) -> None:
    """Emit the report with the exact :data:`CSV_HEADER` schema.

    Output is byte-identical for identical reports (LF line endings, rows in
    report order).
    """
    if isinstance(dest, (str, Path)):
        with open(dest, "w", newline="") as handle:
            _write_csv_rows(report.rows, handle)
    else:
        _write_csv_rows(report.rows, dest)


def _write_csv_rows(rows: Iterable[BenchRow], handle: IO[str]) -> None:
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        c = row.counts
        writer.writerow(
            (
                row.algorithm.value,
                row.bits,
                row.trial,
                c.iterations,
                c.subtractions,
                c.shifts,
                c.mod_reductions,
                c.comparisons,
            )
        )


def read_csv(src: str | Path | IO[str]) -> BenchReport:
    """Parse a CSV produced by :func:`write_csv` back into a report."""
    if isinstance(src, (str, Path)):
        with open(src, newline="") as handle:
            return _read_csv_rows(handle)
    return _read_csv_rows(src)


def _read_csv_rows(handle: IO[str]) -> BenchReport:
    reader = csv.reader(handle)
    try:
        header = tuple(next(reader))
    except StopIteration:
        raise DomainError("empty CSV") from None
    if header != CSV_HEADER:
        raise DomainError(f"unexpected CSV header: {header!r}")
    rows = []
    for record in reader:
        if not record:
            continue
        algorithm, bits, trial, iterations, subtractions, shifts, mods, comparisons = record
        try:
            counts = OperationCounts(
                subtractions=int(subtractions),
                shifts=int(shifts),
                mod_reductions=int(mods),
                comparisons=int(comparisons),
                iterations=int(iterations),
            )
            rows.append(BenchRow(Algorithm(algorithm), int(bits), int(trial), counts))
        except ValueError as exc:
            raise DomainError(f"malformed CSV row {record!r}: {exc}") from None
    return BenchReport(tuple(rows))
