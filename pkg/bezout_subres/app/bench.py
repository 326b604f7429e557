"""Benchmark harness: per-δ sweeps over random systems with the matrix
generation / determinant calculation / total split for each formula.

Every timed cell also checks that the three formulas agree.
"""
import csv
import logging
import os
import random
import time
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import srsly

from bezout_subres.app.system_file import (
    poly_to_entry,
    system_from_entries,
    write_system_file,
)
from bezout_subres.services import ids
from bezout_subres.services.poly import Poly
from bezout_subres.services.subresultant import (
    DeltaIndex,
    Formula,
    PolySystem,
    iter_deltas,
    scaled_determinant,
    subresultant,
    subresultant_matrix,
)

CSV_HEADER = [
    "formula",
    "degrees",
    "delta",
    "trial",
    "t_matrix_ns",
    "t_det_ns",
    "t_total_ns",
]
CSV_LIST_SEP = "-"
PROGRESS_EVERY_CELLS = 50
NS_PER_SECOND = 1_000_000_000
MISMATCH_SYSTEM_SUFFIX = ".system.json"

log = logging.getLogger(__name__)


class SubresultantMismatch(ArithmeticError):
    """The formulas disagreed; `bundle` holds everything needed to reproduce"""

    def __init__(self, message: str, bundle: dict):
        super().__init__(message, bundle)
        self.bundle = bundle

    def __str__(self):
        return self.args[0]


@dataclass(frozen=True)
class BenchSpec:
    degrees: Tuple[int, ...]
    coeff_bound: int = 9
    trials: int = 1
    seed: int = 42
    # None means every valid nonzero δ
    deltas: Optional[Tuple[Tuple[int, ...], ...]] = None
    workers: int = 0

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if self.deltas is not None:
            object.__setattr__(self, "deltas", tuple(tuple(d) for d in self.deltas))

        if len(self.degrees) < 2 or any(d < 0 for d in self.degrees):
            raise ValueError(f"Need at least two non-negative degrees: {self.degrees}")
        if self.degrees[0] != max(self.degrees):
            raise ValueError(f"d0 must be maximal in degrees {self.degrees}")
        if self.trials < 1:
            raise ValueError(f"trials must be at least 1, got {self.trials}")
        if self.coeff_bound < 1:
            raise ValueError(f"coeff_bound must be positive, got {self.coeff_bound}")
        for delta in self.deltas or ():
            if not DeltaIndex(delta, self.degrees).total:
                raise ValueError("delta must be nonzero")

    @property
    def run_id(self) -> str:
        return ids.bench_run(self.degrees, self.seed, self.coeff_bound)

    def delta_list(self) -> List[Tuple[int, ...]]:
        if self.deltas is None:
            return list(iter_deltas(self.degrees))
        return list(self.deltas)


@dataclass(frozen=True)
class TimingRecord:
    formula: Formula
    degrees: Tuple[int, ...]
    delta: Tuple[int, ...]
    trial: int
    t_matrix: int
    t_det: int
    t_total: int

    def to_row(self) -> List[str]:
        return [
            str(self.formula),
            _join(self.degrees),
            _join(self.delta),
            str(self.trial),
            str(self.t_matrix),
            str(self.t_det),
            str(self.t_total),
        ]

    @classmethod
    def from_row(cls, row: Dict[str, str]) -> "TimingRecord":
        return cls(
            formula=Formula(row["formula"]),
            degrees=_split(row["degrees"]),
            delta=_split(row["delta"]),
            trial=int(row["trial"]),
            t_matrix=int(row["t_matrix_ns"]),
            t_det=int(row["t_det_ns"]),
            t_total=int(row["t_total_ns"]),
        )


def _join(values):
    return CSV_LIST_SEP.join(str(v) for v in values)


def _split(text):
    return tuple(int(v) for v in text.split(CSV_LIST_SEP)) if text else ()


def random_system(spec: BenchSpec, rng: random.Random) -> PolySystem:
    """Integer coefficients uniform in [-bound, bound]; leading ones resampled until nonzero"""
    bound = spec.coeff_bound
    polys = []
    for degree in spec.degrees:
        coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
        lc = 0
        while lc == 0:
            lc = rng.randint(-bound, bound)
        polys.append(Poly(coeffs + [lc]))
    return PolySystem(tuple(polys))


@dataclass
class _Cell:
    run_id: str
    seed: int
    trial: int
    system: PolySystem
    delta: Tuple[int, ...]


def _reproduction_bundle(cell, results):
    return {
        "run_id": cell.run_id,
        "cell_id": ids.bench_cell(cell.run_id, cell.trial, cell.delta),
        "seed": cell.seed,
        "trial": cell.trial,
        "degrees": list(cell.system.degrees),
        "delta": list(cell.delta),
        "polys": [poly_to_entry(p) for p in cell.system.polys],
        "results": {name: str(p) for name, p in results.items()},
    }


def time_cell(cell: _Cell) -> List[TimingRecord]:
    """Times every formula on one (trial, δ) cell and checks they agree"""
    F = cell.system
    delta = DeltaIndex.for_system(cell.delta, F)
    records, results = [], OrderedDict()

    for formula in Formula:
        # warm-up, discarded
        subresultant(F, delta, formula)

        start = time.perf_counter_ns()
        matrix = subresultant_matrix(F, delta, formula)
        generated = time.perf_counter_ns()
        value = scaled_determinant(F, delta, formula, matrix)
        finished = time.perf_counter_ns()

        total_start = time.perf_counter_ns()
        total_value = subresultant(F, delta, formula)
        total_end = time.perf_counter_ns()

        results[f"{formula}"] = value
        results[f"{formula}:end-to-end"] = total_value
        records.append(
            TimingRecord(
                formula=formula,
                degrees=F.degrees,
                delta=cell.delta,
                trial=cell.trial,
                t_matrix=generated - start,
                t_det=finished - generated,
                t_total=total_end - total_start,
            )
        )

    if len(set(results.values())) > 1:
        bundle = _reproduction_bundle(cell, results)
        raise SubresultantMismatch(
            f"Formulas disagree on degrees {F.degrees}, delta {cell.delta}, "
            f"trial {cell.trial} (seed {cell.seed}, cell {bundle['cell_id']})",
            bundle,
        )
    return records


def _cells(spec):
    rng = random.Random(spec.seed)
    systems = [random_system(spec, rng) for _ in range(spec.trials)]
    deltas = spec.delta_list()
    return [
        _Cell(spec.run_id, spec.seed, trial, system, delta)
        for trial, system in enumerate(systems)
        for delta in deltas
    ]


def run_bench(spec: BenchSpec) -> List[TimingRecord]:
    cells = _cells(spec)
    log.info(
        f"Bench {spec.run_id}: degrees {spec.degrees}, {spec.trials} trial(s), "
        f"{len(cells)} cell(s), workers={spec.workers or 1}"
    )

    if spec.workers and spec.workers > 1:
        # whole cells per worker; timed regions never split
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            per_cell = pool.map(time_cell, cells)
            records = _collect(per_cell, len(cells))
    else:
        records = _collect((time_cell(c) for c in cells), len(cells))

    log.info(f"Bench {spec.run_id}: {len(records)} record(s), all formulas agree")
    return records


def _collect(per_cell, total):
    records = []
    for idx, cell_records in enumerate(per_cell, start=1):
        records.extend(cell_records)
        if not idx % PROGRESS_EVERY_CELLS:
            log.info(f"{idx}/{total} cells done - still working ...")
    return records


# --- output ---


def write_csv(records: Sequence[TimingRecord], path):
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f)
            writer.writerow(CSV_HEADER)
            writer.writerows(r.to_row() for r in records)
    except OSError as e:
        raise OSError(f"Could not write bench CSV {path}: {e}") from e
    log.info(f"Wrote {len(records)} record(s) to {path}")


def read_csv(path) -> List[TimingRecord]:
    try:
        with open(path, newline="", encoding="utf-8") as f:
            reader = csv.DictReader(f)
            if reader.fieldnames != CSV_HEADER:
                raise ValueError(
                    f"Unexpected CSV header in {path}: {reader.fieldnames}"
                )
            return [TimingRecord.from_row(row) for row in reader]
    except OSError as e:
        raise OSError(f"Could not read bench CSV {path}: {e}") from e


def write_mismatch_bundle(error: SubresultantMismatch, out_dir) -> str:
    """Writes mismatch-<cell id>.json and, next to it, the failing system as
    mismatch-<cell id>.system.json for `check --system`"""
    out_dir = out_dir or "."
    os.makedirs(out_dir, exist_ok=True)
    stem = os.path.join(out_dir, f"mismatch-{error.bundle['cell_id']}")
    path = stem + ".json"
    srsly.write_json(path, error.bundle)
    write_system_file(
        stem + MISMATCH_SYSTEM_SUFFIX, system_from_entries(error.bundle["polys"])
    )
    log.info(f"Reproduction files written to {stem}.*")
    return path


def summarize(records: Iterable[TimingRecord]) -> OrderedDict:
    """(T, M, D) totals in seconds per degree profile and formula"""
    totals = OrderedDict()
    for r in records:
        per_formula = totals.setdefault(r.degrees, {f: [0, 0, 0] for f in Formula})
        acc = per_formula[r.formula]
        acc[0] += r.t_total
        acc[1] += r.t_matrix
        acc[2] += r.t_det

    return OrderedDict(
        (
            degrees,
            {f: tuple(v / NS_PER_SECOND for v in acc) for f, acc in per_formula.items()},
        )
        for degrees, per_formula in totals.items()
    )


def format_seconds(seconds):
    return f"{seconds:.3f}"


def cheapest_generation(summary) -> Optional[Formula]:
    generation = {f: 0.0 for f in Formula}
    for per_formula in summary.values():
        for f, (_, m, _) in per_formula.items():
            generation[f] += m
    if not summary:
        return None
    return min(generation, key=generation.get)


def format_summary(summary) -> str:
    """Text table: one row per degree profile, T / M / D per formula"""
    label_width = max([len("d = deg F")] + [len(_profile(d)) for d in summary])
    header = "d = deg F".ljust(label_width) + " | " + " | ".join(
        f"{str(f):^26}" for f in Formula
    )
    subheader = " " * label_width + " | " + " | ".join(
        f"{'T':>8} {'M':>8} {'D':>8}" for _ in Formula
    )
    lines = [header, subheader, "-" * len(header)]
    for degrees, per_formula in summary.items():
        cells = " | ".join(
            " ".join(format_seconds(v).rjust(8) for v in per_formula[f])
            for f in Formula
        )
        lines.append(_profile(degrees).ljust(label_width) + " | " + cells)

    cheapest = cheapest_generation(summary)
    if cheapest is not None:
        lines.append(f"Cheapest matrix generation: {cheapest}")
    return "\n".join(lines)


def _profile(degrees):
    return "(" + ",".join(str(d) for d in degrees) + ")"
