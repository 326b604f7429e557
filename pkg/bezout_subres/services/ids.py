import hashlib

import base62

# !!! NOTE that changing these (or 'encode' below) invalidates existing bundle names
IDENTIFIER_LENGTH_BITS = 80
HASH_LENGTH_BITS = 256
SEP = "-"

BENCH_RUN_ID_PREFIX = "run"
BENCH_CELL_ID_PREFIX = "cel"


def encode(id_: str) -> str:
    if not id_:
        raise ValueError("Empty id to encode")
    hashed = hashlib.sha256(id_.encode("utf-8")).hexdigest()
    truncated = int(hashed, base=16) >> (HASH_LENGTH_BITS - IDENTIFIER_LENGTH_BITS)
    return base62.encode(truncated)


def _dashed(values) -> str:
    return SEP.join(str(v) for v in values)


def bench_run(degrees, seed: int, coeff_bound: int) -> str:
    id_ = f"{_dashed(degrees)}::{seed}::{coeff_bound}"
    return f"{BENCH_RUN_ID_PREFIX}{SEP}{encode(id_)}"


def bench_cell(run_id: str, trial: int, delta) -> str:
    id_ = f"{run_id}|{trial}|{_dashed(delta)}"
    return f"{BENCH_CELL_ID_PREFIX}{SEP}{encode(id_)}"
