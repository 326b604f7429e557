import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterator, List, Optional, Sequence, Tuple

from .poly import Poly, parse_rat

log = logging.getLogger(__name__)


class _DenseMatrix:
    """Row-major dense matrix, immutable once built"""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        entries = tuple(self._coerce(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError(
                f"Expected {rows}x{cols}={rows * cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __reduce__(self):
        return (type(self), (self.rows, self.cols, self.entries))

    @staticmethod
    def _coerce(entry):
        return entry

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for idx, row in enumerate(rows):
            if len(row) != cols:
                raise ValueError(f"Row {idx} has {len(row)} entries, expected {cols}")
        return cls(len(rows), cols, [e for row in rows for e in row])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: Tuple[int, int]):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"Index {ij} out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def iter_rows(self) -> Iterator[tuple]:
        for i in range(self.rows):
            yield self.row(i)

    def to_rows(self) -> List[list]:
        return [list(r) for r in self.iter_rows()]

    def transpose(self):
        return type(self)(
            self.cols,
            self.rows,
            [self[i, j] for j in range(self.cols) for i in range(self.rows)],
        )

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (
            other.rows,
            other.cols,
            other.entries,
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"{type(self).__name__}({self.to_rows()!r})"

    def __str__(self):
        cells = [[str(e) for e in row] for row in self.iter_rows()]
        if not cells:
            return f"[] ({self.rows}x{self.cols})"
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(
            "[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells
        )


class RMatrix(_DenseMatrix):
    __slots__ = ()

    @staticmethod
    def _coerce(entry):
        return parse_rat(entry)


class PMatrix(_DenseMatrix):
    """Matrix with Poly entries. xdeg_max bounds the x-degree of every entry
    and sizes the interpolation in det_poly."""

    __slots__ = ("xdeg_max",)

    def __init__(self, rows: int, cols: int, entries: Sequence):
        super().__init__(rows, cols, entries)
        degrees = [e.degree for e in self.entries if not e.is_zero()]
        object.__setattr__(self, "xdeg_max", max(degrees, default=0))

    @staticmethod
    def _coerce(entry):
        return entry if isinstance(entry, Poly) else Poly.constant(entry)

    def evaluate(self, a) -> RMatrix:
        return RMatrix(self.rows, self.cols, [e(a) for e in self.entries])


# --- determinants ---


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _bareiss(m: List[List[int]]) -> int:
    """Fraction-free elimination on an integer matrix, in place"""
    n = len(m)
    if n == 0:
        return 1

    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0

        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot

    return sign * m[n - 1][n - 1]


def det_rat(m: RMatrix) -> Fraction:
    """Exact determinant: rows are cleared to integers (scale tracked), then Bareiss"""
    if not m.is_square:
        raise ValueError(f"Determinant of non-square {m.rows}x{m.cols} matrix")

    scale = 1
    int_rows = []
    for row in m.iter_rows():
        row_lcm = reduce(_lcm, (e.denominator for e in row), 1)
        scale *= row_lcm
        int_rows.append([e.numerator * (row_lcm // e.denominator) for e in row])

    return Fraction(_bareiss(int_rows), scale)


def det_laplace(m: _DenseMatrix):
    """Cofactor expansion along the first row; a reference for small matrices
    that works for Rat and Poly entries alike."""
    if not m.is_square:
        raise ValueError(f"Determinant of non-square {m.rows}x{m.cols} matrix")

    def expand(rows):
        n = len(rows)
        if n == 0:
            return 1
        if n == 1:
            return rows[0][0]
        total = 0
        for j, entry in enumerate(rows[0]):
            if entry == 0:
                continue
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            term = entry * expand(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    result = expand(m.to_rows())
    if isinstance(m, PMatrix) and not isinstance(result, Poly):
        return Poly.constant(result)
    return result


def interpolation_nodes(count: int) -> List[Fraction]:
    """0, 1, -1, 2, -2, ..."""
    nodes = []
    k = 0
    while len(nodes) < count:
        nodes.append(Fraction(k))
        if k > 0 and len(nodes) < count:
            nodes.append(Fraction(-k))
        k += 1
    return nodes


def interpolate(points: Sequence[Fraction], values: Sequence[Fraction]) -> Poly:
    """Exact Newton divided-difference interpolation"""
    if len(points) != len(values):
        raise ValueError("Point and value counts differ")
    if len(set(points)) != len(points):
        raise ValueError("Interpolation points must be distinct")

    n = len(points)
    coef = [parse_rat(v) for v in values]
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (points[i] - points[i - k])

    result = Poly()
    for i in range(n - 1, -1, -1):
        result = result * Poly((-points[i], 1)) + coef[i]
    return result


def _det_at(args) -> Fraction:
    m, point = args
    return det_rat(m.evaluate(point))


def det_poly(
    m: PMatrix, degree_bound: Optional[int] = None, workers: int = 0
) -> Poly:
    """Determinant of a polynomial matrix by evaluation and interpolation.

    degree_bound tightens the default rows * xdeg_max; with workers > 1 the
    point evaluations run in a process pool (results collected in order).
    """
    if not m.is_square:
        raise ValueError(f"Determinant of non-square {m.rows}x{m.cols} matrix")

    if m.xdeg_max == 0 or m.rows == 0:
        return Poly.constant(det_rat(m.evaluate(0)))

    bound = m.rows * m.xdeg_max
    if degree_bound is not None:
        bound = max(0, min(bound, degree_bound))
    nodes = interpolation_nodes(bound + 1)
    log.debug(f"det_poly: {m.rows}x{m.cols}, degree bound {bound}")

    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(_det_at, [(m, p) for p in nodes]))
    else:
        values = [det_rat(m.evaluate(p)) for p in nodes]

    return interpolate(nodes, values)


# --- Vandermonde ---


def vandermonde(points: Sequence) -> RMatrix:
    """Row i holds points[j] ** i"""
    points = [parse_rat(p) for p in points]
    n = len(points)
    return RMatrix(n, n, [p ** i for i in range(n) for p in points])


def det_vandermonde(points: Sequence) -> Fraction:
    points = [parse_rat(p) for p in points]
    result = Fraction(1)
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            result *= points[j] - points[i]
    return result

