import logging
import re
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, List, Sequence, Tuple, Union

Rat = Fraction
RatLike = Union[int, str, Fraction]

# zero polynomial degree; compares below every integer
ZERO_DEGREE = float("-inf")
VARIABLE = "x"

RAT_LITERAL_REGEX = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
TOKEN_REGEX = re.compile(r"\s*(?:(\d+)|(x)|(\*\*|[-+*/^()]))")

log = logging.getLogger(__name__)


def parse_rat(value: RatLike) -> Fraction:
    """Exact rational from an int, a Fraction or a "n" / "p/q" literal"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValueError(f"Not a rational literal: {value!r}")
    if isinstance(value, int):
        return Fraction(value)

    matches = RAT_LITERAL_REGEX.match(value)
    if not matches:
        raise ValueError(f"Not a rational literal: {value!r}")
    numerator, denominator = matches.groups()
    if denominator is not None and int(denominator) == 0:
        raise ValueError(f"Zero denominator in rational literal: {value!r}")
    return Fraction(int(numerator), int(denominator or 1))


class Poly:
    """Dense univariate polynomial over the rationals, immutable.

    coeffs[k] is the coefficient of x^k; trailing zeros are always trimmed,
    so the zero polynomial has no coefficients at all.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        trimmed = [parse_rat(c) for c in coeffs]
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        object.__setattr__(self, "coeffs", tuple(trimmed))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.coeffs,))

    @classmethod
    def constant(cls, c: RatLike) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    # --- arithmetic ---

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return Poly(
            a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()

        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Only non-negative integer powers allowed: {exponent}")
        result, base = Poly.constant(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, c: RatLike) -> "Poly":
        c = parse_rat(c)
        return Poly(c * a for a in self.coeffs)

    def __call__(self, a: RatLike) -> Fraction:
        """Horner evaluation"""
        a = parse_rat(a)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    evaluate = __call__

    # --- comparison / display ---

    def __eq__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def __str__(self):
        terms = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c:
                terms.append(_render_term(c, power, first=not terms))
        return "".join(terms) or "0"


def _as_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Poly.constant(value)
    return NotImplemented


def _render_term(c: Fraction, power: int, first: bool) -> str:
    if first:
        sign = "-" if c < 0 else ""
    else:
        sign = " - " if c < 0 else " + "
    magnitude = abs(c)

    if power == 0:
        return f"{sign}{magnitude}"
    monomial = VARIABLE if power == 1 else f"{VARIABLE}^{power}"
    if magnitude == 1:
        return f"{sign}{monomial}"
    return f"{sign}{magnitude}*{monomial}"


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def from_roots(lc: RatLike, roots: Sequence[RatLike]) -> Poly:
    """lc * prod(x - root)"""
    lc = parse_rat(lc)
    if lc == 0:
        raise ValueError("Leading coefficient must be nonzero")

    result = Poly.constant(lc)
    for root in roots:
        result = result * Poly((-parse_rat(root), 1))
    return result


# --- parsing ---


class PolyParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        matches = TOKEN_REGEX.match(text, pos)
        if not matches:
            offset = len(text[pos:]) - len(text[pos:].lstrip())
            raise PolyParseError(f"Unexpected character {text[pos + offset]!r}", pos + offset)
        number, var, op = matches.groups()
        start = matches.end() - len(number or var or op)
        if number is not None:
            tokens.append(("num", number, start))
        elif var is not None:
            tokens.append(("var", var, start))
        else:
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = matches.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over: expr := term (+|- term)*,
    term := unary (*|/ unary)*, unary := (+|-) unary | power,
    power := atom (^ integer)?, atom := integer | x | ( expr )"""

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.idx = 0

    @property
    def current(self):
        return self.tokens[self.idx]

    def _take(self):
        token = self.tokens[self.idx]
        self.idx += 1
        return token

    def _expect_op(self, op):
        kind, value, pos = self.current
        if kind == "end":
            raise PolyParseError("Unexpected end of input", pos)
        if kind != "op" or value != op:
            raise PolyParseError(f"Expected {op!r}", pos)
        self._take()

    def parse(self) -> Poly:
        result = self.expr()
        kind, value, pos = self.current
        if kind != "end":
            raise PolyParseError(f"Unexpected token {value!r}", pos)
        return result

    def expr(self) -> Poly:
        result = self.term()
        while self.current[0] == "op" and self.current[1] in "+-":
            op = self._take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Poly:
        result = self.unary()
        while self.current[0] == "op" and self.current[1] in "*/":
            _, op, pos = self._take()
            rhs = self.unary()
            if op == "*":
                result = result * rhs
            elif not rhs.is_constant():
                raise PolyParseError("Division by a non-constant polynomial", pos)
            elif rhs.is_zero():
                raise PolyParseError("Division by zero", pos)
            else:
                result = result.scale(1 / rhs.lc)
        return result

    def unary(self) -> Poly:
        if self.current[0] == "op" and self.current[1] in "+-":
            op = self._take()[1]
            operand = self.unary()
            return operand if op == "+" else -operand
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.current[0] == "op" and self.current[1] == "^":
            self._take()
            kind, value, pos = self.current
            if kind != "num":
                raise PolyParseError("Exponent must be a non-negative integer", pos)
            self._take()
            return base ** int(value)
        return base

    def atom(self) -> Poly:
        kind, value, pos = self.current
        if kind == "num":
            self._take()
            return Poly.constant(int(value))
        if kind == "var":
            self._take()
            return Poly.x()
        if kind == "op" and value == "(":
            self._take()
            inner = self.expr()
            self._expect_op(")")
            return inner
        if kind == "end":
            raise PolyParseError("Unexpected end of input", pos)
        raise PolyParseError(f"Unexpected token {value!r}", pos)


def parse_poly(text: str) -> Poly:
    if not isinstance(text, str) or not text.strip():
        raise PolyParseError("Empty polynomial expression", 0)
    result = _Parser(text).parse()
    log.debug(f"Parsed {text!r} as {result}")
    return result
