import csv
import os
import random
import tempfile

from bezout_subres.app import bench
from bezout_subres.app.cli import cli
from bezout_subres.services.poly import Poly, from_roots
from bezout_subres.services.roots import RootSystem, oracle_subresultant
from bezout_subres.services.subresultant import (
    DeltaIndex,
    Formula,
    PolySystem,
    iter_deltas,
    subresultant,
)
from click.testing import CliRunner
from pytest import mark


def _random_poly(rng, degree, bound=9):
    lc = rng.choice([c for c in range(-bound, bound + 1) if c])
    return Poly([rng.randint(-bound, bound) for _ in range(degree)] + [lc])


@mark.parametrize("t", [1, 2, 3])
def test_formulas_agree_on_random_systems(t):
    rng = random.Random(1000 + t)
    for _ in range(100):
        d0 = rng.randint(1, 8 if t < 3 else 6)
        degrees = [d0] + [rng.randint(0, d0) for _ in range(t)]
        F = PolySystem(tuple(_random_poly(rng, d) for d in degrees))

        for delta in iter_deltas(F.degrees):
            delta = DeltaIndex.for_system(delta, F)
            results = [subresultant(F, delta, formula) for formula in Formula]
            assert results[0] == results[1] == results[2], (str(F), str(delta))


def test_oracle_agrees_on_random_root_systems():
    rng = random.Random(2000)
    for _ in range(100):
        d0 = rng.randint(1, 6)
        roots = tuple(rng.sample(range(-6, 7), d0))
        tail = tuple(
            _random_poly(rng, rng.randint(0, d0)) for _ in range(rng.randint(1, 3))
        )
        rs = RootSystem(rng.choice([1, -1, 2, 3]), roots, tail)
        F = rs.system()

        zero = DeltaIndex((0,) * len(tail), rs.degrees)
        assert oracle_subresultant(rs, zero) == from_roots(rs.lc0, roots)

        for delta in iter_deltas(rs.degrees):
            delta = DeltaIndex(delta, rs.degrees)
            expected = oracle_subresultant(rs, delta)
            for formula in Formula:
                assert subresultant(F, delta, formula) == expected, (str(F), str(delta))


@mark.parametrize(
    "degrees",
    [
        "12,11,10",
        "13,10,10",
        "16,12,10",
        "13,12,12",
        "14,10,5",
    ],
)
def test_bench_profiles(degrees):
    with tempfile.TemporaryDirectory() as tmpdir:
        out = os.path.join(tmpdir, "bench.csv")
        runner = CliRunner()

        result = runner.invoke(
            cli,
            [
                "bench",
                f"--degrees={degrees}",
                "--trials=1",
                "--seed=42",
                f"--out={out}",
            ],
            catch_exceptions=False,
        )
        assert result.exit_code == 0, result.output

        with open(out, newline="") as f:
            rows = list(csv.reader(f))
        assert rows[0] == bench.CSV_HEADER

        profile = tuple(int(d) for d in degrees.split(","))
        n_deltas = len(list(iter_deltas(profile)))
        assert len(rows) - 1 == 3 * n_deltas
        assert {row[1] for row in rows[1:]} == {degrees.replace(",", "-")}
        assert "Cheapest matrix generation" in result.output
