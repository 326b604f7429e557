"""Generalized δ-th subresultants of F = (F_0, ..., F_t) via Bézout-type matrices.

Every assembled matrix has the shape [R_1 ... R_t X]^T: δ_i rows per F_i,
then ε = d0 - |δ| rows of the transposed X block, d0 x d0 overall.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

from .bezout import bezout_matrix, cayley_table, hybrid_rows, nonhom_rows
from .linalg import PMatrix, det_poly
from .poly import Poly

log = logging.getLogger(__name__)


class Formula(str, Enum):
    BEZOUT = "bezout"
    HYBRID = "hybrid"
    NONHOM = "nonhom"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PolySystem:
    polys: Tuple[Poly, ...]

    def __post_init__(self):
        polys = tuple(self.polys)
        object.__setattr__(self, "polys", polys)
        if len(polys) < 2:
            raise ValueError("A system needs at least two polynomials")
        for idx, p in enumerate(polys):
            if not isinstance(p, Poly):
                raise ValueError(f"F_{idx} is not a polynomial: {p!r}")
            if p.is_zero():
                raise ValueError(f"F_{idx} must be nonzero")
        if polys[0].degree < max(p.degree for p in polys):
            raise ValueError(
                f"F_0 must have maximal degree, got degrees {self.degrees}"
            )

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(p.degree for p in self.polys)

    @property
    def d0(self) -> int:
        return self.polys[0].degree

    @property
    def t(self) -> int:
        return len(self.polys) - 1

    @property
    def lc0(self) -> Fraction:
        return self.polys[0].lc

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.polys) + ")"


@dataclass(frozen=True)
class DeltaIndex:
    """δ = (δ_1, ..., δ_t) against the degree vector (d_0, ..., d_t)"""

    delta: Tuple[int, ...]
    degrees: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "delta", tuple(self.delta))
        object.__setattr__(self, "degrees", tuple(self.degrees))
        t = len(self.degrees) - 1
        if len(self.delta) != t:
            raise ValueError(f"delta must have {t} entries, got {len(self.delta)}")
        if any(not isinstance(d, int) or d < 0 for d in self.delta):
            raise ValueError(f"delta entries must be non-negative integers: {self.delta}")
        if self.total > self.d0:
            raise ValueError(f"|delta| = {self.total} exceeds d0 = {self.d0}")

    @classmethod
    def for_system(cls, delta: Sequence[int], system: PolySystem) -> "DeltaIndex":
        return cls(tuple(delta), system.degrees)

    @property
    def d0(self) -> int:
        return self.degrees[0]

    @property
    def total(self) -> int:
        return sum(self.delta)

    @property
    def eps(self) -> int:
        return self.d0 - self.total

    @property
    def delta0(self) -> int:
        return max(
            *(d + dl - self.d0 for d, dl in zip(self.degrees[1:], self.delta)),
            1 - self.total,
        )

    def is_zero(self) -> bool:
        return not any(self.delta)

    def __str__(self):
        return ",".join(str(d) for d in self.delta)


def parse_delta(text: str) -> Tuple[int, ...]:
    """'2,2' -> (2, 2)"""
    try:
        delta = tuple(int(part) for part in text.split(","))
    except (AttributeError, ValueError):
        raise ValueError(f"delta must be comma-separated integers, got {text!r}")
    if any(d < 0 for d in delta):
        raise ValueError(f"delta entries must be non-negative integers: {text!r}")
    return delta


def iter_deltas(degrees: Sequence[int], include_zero=False) -> Iterator[Tuple[int, ...]]:
    """Every δ with |δ| <= d0, lexicographic"""
    d0, t = degrees[0], len(degrees) - 1
    for delta in product(range(d0 + 1), repeat=t):
        if sum(delta) > d0:
            continue
        if not include_zero and not any(delta):
            continue
        yield delta


def _check(F: PolySystem, delta: DeltaIndex):
    if delta.degrees != F.degrees:
        raise ValueError(
            f"delta was built for degrees {delta.degrees}, system has {F.degrees}"
        )
    if delta.is_zero():
        raise ValueError("delta must be nonzero")


def x_block(delta: DeltaIndex, d0: int) -> PMatrix:
    """d0 x ε: x on the diagonal, -1 just below it"""
    eps = d0 - delta.total
    x, minus_one = Poly.x(), Poly.constant(-1)
    rows = [[Poly()] * eps for _ in range(d0)]
    for k in range(eps):
        rows[k][k] = x
        rows[k + 1][k] = minus_one
    return PMatrix.from_rows(rows, cols=eps)


def _assemble(blocks: List[List[List[Fraction]]], delta: DeltaIndex) -> PMatrix:
    d0 = delta.d0
    rows = [[Poly.constant(e) for e in row] for block in blocks for row in block]
    rows.extend(x_block(delta, d0).transpose().to_rows())
    return PMatrix.from_rows(rows, cols=d0)


def bez_delta(F: PolySystem, delta: DeltaIndex) -> PMatrix:
    """R_i^T = c[d0-1], ..., c[d0-δ_i] of the Cayley table of (F_0, F_i)

    These are the leading δ_i rows of Bez(F_0, F_i) as displayed, each read
    against ascending powers of x like every other block.
    """
    _check(F, delta)
    F0, d0 = F.polys[0], F.d0
    blocks = []
    for Fi, count in zip(F.polys[1:], delta.delta):
        if not count:
            continue
        bez = bezout_matrix(F0, Fi, table=cayley_table(F0, Fi))
        blocks.append([list(bez.row(j)) for j in range(count)])
    return _assemble(blocks, delta)


def h_delta(F: PolySystem, delta: DeltaIndex) -> PMatrix:
    """R_i^T = first δ_i rows of H(F_0, F_i)"""
    _check(F, delta)
    F0 = F.polys[0]
    blocks = [
        hybrid_rows(F0, Fi, count)
        for Fi, count in zip(F.polys[1:], delta.delta)
        if count
    ]
    return _assemble(blocks, delta)


def n_delta(F: PolySystem, delta: DeltaIndex) -> PMatrix:
    """R_i^T = first δ_i rows of N(F_0, F_i)"""
    _check(F, delta)
    F0 = F.polys[0]
    blocks = [
        nonhom_rows(F0, Fi, count)
        for Fi, count in zip(F.polys[1:], delta.delta)
        if count
    ]
    return _assemble(blocks, delta)


def subresultant_matrix(F: PolySystem, delta: DeltaIndex, formula: Formula) -> PMatrix:
    formula = Formula(formula)
    if formula is Formula.BEZOUT:
        return bez_delta(F, delta)
    if formula is Formula.HYBRID:
        return h_delta(F, delta)
    return n_delta(F, delta)


def scale_exponent(F: PolySystem, delta: DeltaIndex, formula: Formula) -> int:
    """Exponent e of a_{0,d0} in S_δ = a_{0,d0}^e * det(matrix); may be negative"""
    if Formula(formula) is Formula.BEZOUT:
        return delta.delta0 - delta.total
    d0 = F.d0
    overlap = sum(
        max(0, dl + d - d0) for d, dl in zip(F.degrees[1:], delta.delta)
    )
    return delta.delta0 - overlap


def scaled_determinant(
    F: PolySystem,
    delta: DeltaIndex,
    formula: Formula,
    matrix: PMatrix,
    workers: int = 0,
) -> Poly:
    det = det_poly(matrix, degree_bound=delta.eps, workers=workers)
    return det.scale(F.lc0 ** scale_exponent(F, delta, formula))


def subresultant(
    F: PolySystem, delta: DeltaIndex, formula: Formula, workers: int = 0
) -> Poly:
    formula = Formula(formula)
    matrix = subresultant_matrix(F, delta, formula)
    result = scaled_determinant(F, delta, formula, matrix, workers=workers)
    log.debug(f"S_({delta}) via {formula}: {result}")
    return result


def degree_report(F: PolySystem, delta: DeltaIndex) -> List[Dict]:
    """Per-formula exponent of a_{0,d0}; the hybrid and non-homogeneous
    exponents are never below the Bézout one"""
    _check(F, delta)
    return [
        {
            "formula": str(formula),
            "scale_exponent": scale_exponent(F, delta, formula),
            "matrix_size": F.d0,
            "eps": delta.eps,
        }
        for formula in Formula
    ]
