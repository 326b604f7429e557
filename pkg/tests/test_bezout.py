import random
from fractions import Fraction

from bezout_subres.services import bezout
from bezout_subres.services.bezout import (
    bezout_matrix,
    cayley_numerator,
    cayley_table,
    hybrid_bezout_matrix,
    k_poly,
    nonhom_bezout_matrix,
    resultant,
)
from bezout_subres.services.linalg import RMatrix
from bezout_subres.services.poly import Poly, from_roots, parse_poly
from pytest import mark, raises

A = parse_poly("x^2 - 3*x + 2")
B = parse_poly("x - 1")


def _random_poly(rng, degree, bound=9):
    lc = rng.choice([c for c in range(-bound, bound + 1) if c])
    return Poly([rng.randint(-bound, bound) for _ in range(degree)] + [lc])


def _random_pair(rng, max_degree=6):
    m = rng.randint(1, max_degree)
    n = rng.randint(0, m)
    return _random_poly(rng, m), _random_poly(rng, n)


def test_cayley_table():
    table = cayley_table(parse_poly("x^2"), Poly([1]))
    assert table.c == ((0, 1), (1, 0))

    table = cayley_table(A, B)
    assert table.m == 2
    assert table[1, 1] == 1
    assert table[1, 0] == table[0, 1] == -1
    assert table[0, 0] == 1

    table = cayley_table(A, A)
    assert all(c == 0 for row in table.c for c in row)


def test_cayley_table_degree_order():
    with raises(ValueError, match="degree order violated"):
        cayley_table(B, A)
    with raises(ValueError, match="nonzero"):
        cayley_table(Poly(), Poly())


def test_cayley_table_symmetric():
    rng = random.Random(41)
    for _ in range(200):
        assert cayley_table(*_random_pair(rng)).is_symmetric()


def test_cayley_table_bilinear():
    rng = random.Random(43)
    for _ in range(100):
        A_, B1 = _random_pair(rng)
        B2 = _random_poly(rng, rng.randint(0, A_.degree))
        lhs = cayley_table(A_, B1 + B2)
        t1, t2 = cayley_table(A_, B1), cayley_table(A_, B2)
        m = A_.degree
        assert all(
            lhs[i, j] == t1[i, j] + t2[i, j] for i in range(m) for j in range(m)
        )


def test_cayley_division_round_trip():
    rng = random.Random(47)
    for _ in range(100):
        A_, B_ = _random_pair(rng)
        m = A_.degree
        table = cayley_table(A_, B_)
        numerator = cayley_numerator(A_, B_)

        def c(i, j):
            return table[i, j] if 0 <= i < m and 0 <= j < m else Fraction(0)

        # (x - y) * sum c[i][j] x^i y^j
        for p in range(m + 1):
            for q in range(m + 1):
                assert c(p - 1, q) - c(p, q - 1) == numerator[p][q]


def test_bezout_matrix():
    assert bezout_matrix(parse_poly("x^2"), Poly([1])) == RMatrix.from_rows(
        [[1, 0], [0, 1]]
    )
    assert bezout_matrix(A, B) == RMatrix.from_rows([[-1, 1], [1, -1]])
    assert bezout_matrix(parse_poly("x - 1"), parse_poly("x - 3")).to_rows() == [[-2]]


def test_bezout_matrix_antisymmetric_for_equal_degrees():
    rng = random.Random(53)
    for _ in range(100):
        degree = rng.randint(1, 6)
        A_, B_ = _random_poly(rng, degree), _random_poly(rng, degree)
        lhs, rhs = bezout_matrix(A_, B_), bezout_matrix(B_, A_)
        assert lhs.entries == tuple(-e for e in rhs.entries)


def test_k_poly():
    assert k_poly(A, B, 1) == parse_poly("2*x - 2")
    # B = b_n x^n alone: the first product is empty
    assert k_poly(parse_poly("x^2 + 2*x + 3"), parse_poly("5*x^2"), 1) == parse_poly(
        "-5*(2*x + 3)"
    )

    with raises(ValueError, match="r must lie in 1..1"):
        k_poly(A, B, 0)
    with raises(ValueError, match="r must lie in 1..1"):
        k_poly(A, B, 2)


def test_hybrid_bezout_matrix():
    assert hybrid_bezout_matrix(A, B) == RMatrix.from_rows([[-1, 1], [-2, 2]])

    # m = n: no coefficient rows, only k_r rows
    A_, B_ = parse_poly("x^2 + 1"), parse_poly("x^2 - x")
    H = hybrid_bezout_matrix(A_, B_)
    assert H.to_rows() == [
        [k_poly(A_, B_, r).coefficient(col) for col in range(2)] for r in (1, 2)
    ]

    with raises(ValueError, match="Second polynomial must be nonzero"):
        hybrid_bezout_matrix(A, Poly())


def test_nonhom_bezout_matrix():
    assert nonhom_bezout_matrix(A, B) == RMatrix.from_rows([[-1, 1], [1, -1]])

    # m = n: same rows as the Bezout matrix
    rng = random.Random(59)
    for _ in range(20):
        degree = rng.randint(1, 5)
        A_, B_ = _random_poly(rng, degree), _random_poly(rng, degree)
        assert nonhom_bezout_matrix(A_, B_) == bezout_matrix(A_, B_)

    # the top rows are shared with the hybrid matrix
    A_, B_ = parse_poly("x^4 - 2*x + 7"), parse_poly("3*x^2 + x - 1")
    N, H = nonhom_bezout_matrix(A_, B_), hybrid_bezout_matrix(A_, B_)
    assert N.to_rows()[:2] == H.to_rows()[:2] == [[-1, 1, 3, 0], [0, -1, 1, 3]]


def test_resultant():
    assert resultant(parse_poly("x - 1"), parse_poly("x - 3")) == -2
    assert resultant(parse_poly("x - 1"), parse_poly("x - 3"), "hybrid") == -2
    assert resultant(parse_poly("x - 1"), parse_poly("x - 3"), "nonhom") == -2
    assert resultant(A, B) == 0

    with raises(ValueError, match="Unknown resultant kind"):
        resultant(A, B, "sylvester")


@mark.parametrize("kind", list(bezout.BEZOUT_MATRIX_BUILDERS))
def test_resultant_vanishes_on_common_root(kind):
    rng = random.Random(61)
    for _ in range(100):
        root = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        m = rng.randint(1, 6)
        n = rng.randint(1, m)
        A_ = from_roots(1, [root]) * _random_poly(rng, m - 1)
        B_ = from_roots(rng.randint(1, 4), [root]) * _random_poly(rng, n - 1)
        assert resultant(A_, B_, kind) == 0
