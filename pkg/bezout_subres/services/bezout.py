"""Two-polynomial Bézout-type matrices.

Columns are indexed by powers of x, ascending left to right. A has degree m,
B degree n, m >= n; coefficients a_k, b_k are read with Poly.coefficient so
indices outside a polynomial's support contribute nothing.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .linalg import RMatrix, det_rat
from .poly import Poly

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CayleyTable:
    """c[i][j] is the coefficient of x^i y^j in (A(x)B(y) - A(y)B(x)) / (x - y)"""

    m: int
    c: Tuple[Tuple[Fraction, ...], ...]

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.c[i][j]

    def is_symmetric(self) -> bool:
        return all(
            self.c[i][j] == self.c[j][i] for i in range(self.m) for j in range(i)
        )


def _check_degrees(A: Poly, B: Poly) -> Tuple[int, int]:
    if A.is_zero():
        raise ValueError("First polynomial must be nonzero")
    if A.degree < B.degree:
        raise ValueError(
            f"degree order violated: deg A = {A.degree} < deg B = {B.degree}"
        )
    return A.degree, B.degree


def cayley_numerator(A: Poly, B: Poly) -> List[List[Fraction]]:
    """Coefficient table N[p][q] of x^p y^q in A(x)B(y) - A(y)B(x)"""
    size = max(len(A.coeffs), len(B.coeffs))
    a, b = A.coefficient, B.coefficient
    return [[a(p) * b(q) - a(q) * b(p) for q in range(size)] for p in range(size)]


def cayley_table(A: Poly, B: Poly) -> CayleyTable:
    m, _ = _check_degrees(A, B)
    numerator = cayley_numerator(A, B)

    # synthetic division by (x - y): N[i+1][j] = Q[i][j] - Q[i+1][j-1]
    q = [[Fraction(0)] * m for _ in range(m + 1)]
    for i in range(m - 1, -1, -1):
        for j in range(m):
            carry = q[i + 1][j - 1] if j > 0 else 0
            q[i][j] = numerator[i + 1][j] + carry

    return CayleyTable(m=m, c=tuple(tuple(row) for row in q[:m]))


def bezout_matrix(A: Poly, B: Poly, table: Optional[CayleyTable] = None) -> RMatrix:
    """Row k carries c[m-1-k][.], so the top row is c[m-1] and the bottom c[0]"""
    table = table or cayley_table(A, B)
    m = table.m
    return RMatrix.from_rows([table.c[m - 1 - k] for k in range(m)], cols=m)


def k_poly(A: Poly, B: Poly, r: int) -> Poly:
    """k_r = (a_m x^{r-1} + ... + a_{m-r+1})(b_{n-r} x^{m-r} + ... + b_0 x^{m-n})
    - (a_{m-r} x^{m-r} + ... + a_0)(b_n x^{r-1} + ... + b_{n-r+1});
    the coefficient of x^{m-j} is f_{r,j}."""
    m, n = _check_degrees(A, B)
    if not 1 <= r <= n:
        raise ValueError(f"r must lie in 1..{n}, got {r}")

    a_high = Poly(A.coefficient(m - r + 1 + k) for k in range(r))
    b_low = Poly([0] * (m - n) + [B.coefficient(k) for k in range(n - r + 1)])
    a_low = Poly(A.coefficient(k) for k in range(m - r + 1))
    b_high = Poly(B.coefficient(n - r + 1 + k) for k in range(r))
    return a_high * b_low - a_low * b_high


def coefficient_rows(B: Poly, m: int, count: int) -> List[List[Fraction]]:
    """Shifted rows [b_0 ... b_n]: row s starts at column s"""
    n = B.degree
    rows = []
    for s in range(count):
        row = [Fraction(0)] * m
        for k in range(n + 1):
            row[s + k] = B.coefficient(k)
        rows.append(row)
    return rows


def hybrid_rows(A: Poly, B: Poly, count: Optional[int] = None) -> List[List[Fraction]]:
    """The first `count` rows of H(A, B)"""
    m, n = _check_degrees(A, B)
    if B.is_zero():
        raise ValueError("Second polynomial must be nonzero")
    count = m if count is None else count

    rows = coefficient_rows(B, m, min(count, m - n))
    for r in range(1, count - len(rows) + 1):
        k_r = k_poly(A, B, r)
        rows.append([k_r.coefficient(col) for col in range(m)])
    return rows


def nonhom_rows(
    A: Poly, B: Poly, count: Optional[int] = None, table: Optional[CayleyTable] = None
) -> List[List[Fraction]]:
    """The first `count` rows of N(A, B)"""
    m, n = _check_degrees(A, B)
    if B.is_zero():
        raise ValueError("Second polynomial must be nonzero")
    count = m if count is None else count

    rows = coefficient_rows(B, m, min(count, m - n))
    bezout_count = count - len(rows)
    if bezout_count:
        table = table or cayley_table(A, B)
        rows.extend(list(table.c[n - r]) for r in range(1, bezout_count + 1))
    return rows


def hybrid_bezout_matrix(A: Poly, B: Poly) -> RMatrix:
    return RMatrix.from_rows(hybrid_rows(A, B), cols=A.degree)


def nonhom_bezout_matrix(A: Poly, B: Poly) -> RMatrix:
    return RMatrix.from_rows(nonhom_rows(A, B), cols=A.degree)


BEZOUT_MATRIX_BUILDERS = {
    "bezout": bezout_matrix,
    "hybrid": hybrid_bezout_matrix,
    "nonhom": nonhom_bezout_matrix,
}


def resultant(A: Poly, B: Poly, kind: str = "bezout") -> Fraction:
    """Bézout, hybrid Bézout or non-homogeneous Bézout resultant of A and B"""
    try:
        builder = BEZOUT_MATRIX_BUILDERS[kind]
    except KeyError:
        raise ValueError(f"Unknown resultant kind: {kind}")
    value = det_rat(builder(A, B))
    log.debug(f"{kind} resultant of ({A}, {B}) = {value}")
    return value
