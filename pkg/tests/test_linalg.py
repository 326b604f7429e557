import random
from fractions import Fraction

from bezout_subres.services import linalg
from bezout_subres.services.linalg import (
    PMatrix,
    RMatrix,
    det_laplace,
    det_poly,
    det_rat,
    det_vandermonde,
    interpolate,
    vandermonde,
)
from bezout_subres.services.poly import Poly, parse_poly
from pytest import raises


def _random_rmatrix(rng, n, bound=9):
    return RMatrix(
        n, n, [Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(n * n)]
    )


def _random_pmatrix(rng, n, bound=5):
    # entries of x-degree <= 1, the shape the subresultant matrices have
    return PMatrix(
        n,
        n,
        [Poly((rng.randint(-bound, bound), rng.choice([0, 0, 1, -1]))) for _ in range(n * n)],
    )


def test_det_rat():
    assert det_rat(RMatrix.from_rows([[1, 2], [3, 4]])) == -2
    assert det_rat(RMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert det_rat(RMatrix.from_rows([["1/2", 0], [0, "1/3"]])) == Fraction(1, 6)
    assert det_rat(RMatrix.from_rows([[1, 2], [2, 4]])) == 0
    assert det_rat(RMatrix(0, 0, [])) == 1
    assert det_rat(RMatrix.from_rows([[0, 0, 1], [0, 1, 0], [1, 0, 0]])) == -1

    with raises(ValueError, match="non-square"):
        det_rat(RMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_matrix_construction():
    m = RMatrix.from_rows([[1, "2/4"], [3, 4]])
    assert m[0, 1] == Fraction(1, 2)
    assert m.row(1) == (3, 4)
    assert m.transpose().to_rows() == [[1, 3], [Fraction(1, 2), 4]]

    with raises(ValueError, match="Row 1 has 1 entries"):
        RMatrix.from_rows([[1, 2], [3]])
    with raises(ValueError, match="Expected 2x2=4 entries"):
        RMatrix(2, 2, [1, 2, 3])
    with raises(IndexError):
        m[2, 0]
    with raises(AttributeError):
        m.rows = 3


def test_pmatrix_evaluate():
    x = Poly.x()
    m = PMatrix.from_rows([[-1, 1], [x, -1]])
    assert m.xdeg_max == 1
    assert m.evaluate(3) == RMatrix.from_rows([[-1, 1], [3, -1]])
    assert PMatrix.from_rows([[1, 2], [3, 4]]).xdeg_max == 0


def test_det_matches_cofactor_expansion():
    rng = random.Random(17)
    for _ in range(200):
        m = _random_rmatrix(rng, rng.randint(1, 5))
        assert det_rat(m) == det_laplace(m)


def test_det_row_operations():
    rng = random.Random(23)
    for _ in range(100):
        n = rng.randint(2, 5)
        m = _random_rmatrix(rng, n)
        rows = m.to_rows()
        det = det_rat(m)

        i, j = rng.sample(range(n), 2)
        swapped = list(rows)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        assert det_rat(RMatrix.from_rows(swapped)) == -det

        c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        scaled = list(rows)
        scaled[i] = [c * e for e in scaled[i]]
        assert det_rat(RMatrix.from_rows(scaled)) == c * det


def test_interpolation_nodes():
    assert linalg.interpolation_nodes(5) == [0, 1, -1, 2, -2]
    assert linalg.interpolation_nodes(1) == [0]
    assert linalg.interpolation_nodes(0) == []


def test_interpolate():
    p = parse_poly("3*x^3 - 1/2*x + 7")
    points = linalg.interpolation_nodes(4)
    assert interpolate(points, [p(a) for a in points]) == p
    assert interpolate([0, 1], [5, 5]) == Poly([5])

    with raises(ValueError, match="distinct"):
        interpolate([1, 1], [2, 3])
    with raises(ValueError, match="counts differ"):
        interpolate([1, 2], [2])


def test_det_poly():
    x = Poly.x()
    assert det_poly(PMatrix.from_rows([[-1, 1], [x, -1]])) == parse_poly("1 - x")
    assert det_poly(PMatrix.from_rows([[-1, 1], [-2, 2]])) == Poly()
    assert det_poly(PMatrix.from_rows([[x, -1], [-1, x]])) == parse_poly("x^2 - 1")
    # a bound that is tight still recovers the determinant
    assert det_poly(PMatrix.from_rows([[x, 0], [0, 2]]), degree_bound=1) == Poly([0, 2])

    with raises(ValueError, match="non-square"):
        det_poly(PMatrix.from_rows([[x, 1]]))


def test_det_poly_matches_cofactor_expansion():
    rng = random.Random(29)
    for _ in range(200):
        m = _random_pmatrix(rng, rng.randint(1, 5))
        assert det_poly(m) == det_laplace(m)


def test_det_poly_workers():
    rng = random.Random(31)
    m = _random_pmatrix(rng, 4)
    assert det_poly(m, workers=2) == det_poly(m)


def test_vandermonde():
    v = vandermonde([1, 2, 3])
    assert v.to_rows() == [[1, 1, 1], [1, 2, 3], [1, 4, 9]]
    assert det_vandermonde([1, 2, 3]) == 2
    assert det_vandermonde([2, 1]) == -1
    assert det_vandermonde([1, 1, 2]) == 0

    rng = random.Random(37)
    for _ in range(50):
        points = rng.sample(range(-6, 7), rng.randint(1, 6))
        assert det_rat(vandermonde(points)) == det_vandermonde(points)
