import logging
from typing import Sequence, Union

import srsly

from bezout_subres.services.poly import Poly, parse_poly, parse_rat
from bezout_subres.services.subresultant import PolySystem

SYSTEM_POLYS_KEY = "polys"

log = logging.getLogger(__name__)

PolyEntry = Union[str, Sequence[Union[str, int]]]


def poly_from_entry(entry: PolyEntry) -> Poly:
    """A parse_poly string, or rational literals in ascending power order"""
    if isinstance(entry, str):
        return parse_poly(entry)
    if isinstance(entry, list):
        return Poly(parse_rat(c) for c in entry)
    raise ValueError(f"Unexpected polynomial entry: {entry!r}")


def poly_to_entry(p):
    return [str(c) for c in p.coeffs]


def system_from_entries(entries) -> PolySystem:
    if not isinstance(entries, list) or len(entries) < 2:
        raise ValueError("A system needs a list of at least two polynomials")
    return PolySystem(tuple(poly_from_entry(e) for e in entries))


def load_system_file(path) -> PolySystem:
    try:
        doc = srsly.read_json(path)
    except ValueError as e:
        raise ValueError(f"Could not read system file {path}: {e}") from e

    if not isinstance(doc, dict) or SYSTEM_POLYS_KEY not in doc:
        raise ValueError(f"System file {path} has no '{SYSTEM_POLYS_KEY}' list")
    system = system_from_entries(doc[SYSTEM_POLYS_KEY])
    log.info(f"Loaded system with degrees {system.degrees} from {path}")
    return system


def write_system_file(path, system):
    srsly.write_json(
        path, {SYSTEM_POLYS_KEY: [poly_to_entry(p) for p in system.polys]}
    )
