"""S_δ straight from its definition in the (distinct, rational) roots of F_0.

Serves as the independent oracle the matrix formulas are checked against.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .linalg import PMatrix, det_poly, det_vandermonde
from .poly import Poly, from_roots, parse_rat
from .subresultant import DeltaIndex, PolySystem

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootSystem:
    lc0: Fraction
    roots: Tuple[Fraction, ...]
    tail: Tuple[Poly, ...]

    def __post_init__(self):
        object.__setattr__(self, "lc0", parse_rat(self.lc0))
        object.__setattr__(self, "roots", tuple(parse_rat(r) for r in self.roots))
        object.__setattr__(self, "tail", tuple(self.tail))

        if self.lc0 == 0:
            raise ValueError("Leading coefficient must be nonzero")
        if len(set(self.roots)) != len(self.roots):
            raise ValueError("roots must be distinct")
        if not self.tail:
            raise ValueError("At least one tail polynomial is required")
        for idx, p in enumerate(self.tail, start=1):
            if p.is_zero():
                raise ValueError(f"F_{idx} must be nonzero")
            if p.degree > len(self.roots):
                raise ValueError(
                    f"deg F_{idx} = {p.degree} exceeds d0 = {len(self.roots)}"
                )

    @property
    def d0(self) -> int:
        return len(self.roots)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return (self.d0,) + tuple(p.degree for p in self.tail)

    @property
    def f0(self) -> Poly:
        return from_roots(self.lc0, self.roots)

    def system(self) -> PolySystem:
        return PolySystem((self.f0,) + self.tail)


def _check(rs: RootSystem, delta: DeltaIndex):
    if delta.degrees != rs.degrees:
        raise ValueError(
            f"delta was built for degrees {delta.degrees}, root system has {rs.degrees}"
        )


def m_delta(rs: RootSystem, delta: DeltaIndex) -> PMatrix:
    """δ_i rows α_j^k F_i(α_j) per tail polynomial, then ε rows α_j^k (x - α_j)"""
    _check(rs, delta)
    rows = []
    for Fi, count in zip(rs.tail, delta.delta):
        values = [Fi(alpha) for alpha in rs.roots]
        rows.extend(
            [Poly.constant(alpha ** k * v) for alpha, v in zip(rs.roots, values)]
            for k in range(count)
        )
    linear = [Poly((-alpha, 1)) for alpha in rs.roots]
    rows.extend(
        [lin.scale(alpha ** k) for alpha, lin in zip(rs.roots, linear)]
        for k in range(delta.eps)
    )
    return PMatrix.from_rows(rows, cols=rs.d0)


def oracle_subresultant(rs: RootSystem, delta: DeltaIndex) -> Poly:
    """a_{0,d0}^{δ0} det M_δ / det V"""
    det_m = det_poly(m_delta(rs, delta), degree_bound=delta.eps)
    det_v = det_vandermonde(rs.roots)
    result = det_m.scale(rs.lc0 ** delta.delta0 / det_v)
    log.debug(f"Oracle S_({delta}) = {result}")
    return result
