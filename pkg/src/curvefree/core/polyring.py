"""Exact polynomial arithmetic over the rationals.

Two representations live here:

- ``Polynomial``: sparse polynomials in x, y, z (the coordinate ring of the
  projective plane), keyed by exponent triples.
- ``UniPolynomial``: dense univariate polynomials, lowest degree first, used
  for resultants and tangent-cone analysis.

Coefficients are always ``fractions.Fraction``; nothing in this module uses
floating point.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import sympy

from .errors import PolynomialSyntaxError, PreconditionError, UnknownVariableError
from .exactla import determinant

Monomial = Tuple[int, int, int]
Scalar = Union[int, Fraction]

VARIABLES = ("x", "y", "z")

_ROOT_SYMBOL = sympy.Symbol("t")


def monomial_degree(monomial: Monomial) -> int:
    """Total degree of an exponent triple."""
    return monomial[0] + monomial[1] + monomial[2]


def grlex_key(monomial: Monomial) -> Tuple[int, Monomial]:
    """Sort key for graded-lexicographic order (x > y > z)."""
    return (monomial_degree(monomial), monomial)


@lru_cache(maxsize=None)
def monomial_basis(degree: int) -> Tuple[Monomial, ...]:
    """Monomials of the given degree in graded-lex order, largest first.

    Args:
        degree: Non-negative total degree

    Returns:
        Tuple of (degree+1)(degree+2)/2 exponent triples
    """
    if degree < 0:
        raise PreconditionError(f"Monomial basis needs a non-negative degree, got {degree}")
    return tuple(
        (a, b, degree - a - b) for a in range(degree, -1, -1) for b in range(degree - a, -1, -1)
    )


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Polynomial:
    """Sparse polynomial in x, y, z with rational coefficients.

    Instances are immutable; arithmetic returns new polynomials. Zero
    coefficients are never stored, so equality of term maps is equality of
    polynomials.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        clean: Dict[Monomial, Fraction] = {}
        for monomial, coeff in (terms or {}).items():
            key = tuple(int(e) for e in monomial)
            if len(key) != 3 or any(e < 0 for e in key):
                raise ValueError(f"Invalid exponent triple: {monomial!r}")
            value = Fraction(coeff)
            if value:
                clean[key] = clean.get(key, Fraction(0)) + value
                if not clean[key]:
                    del clean[key]
        self._terms = clean

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        value = Fraction(value)
        return cls._raw({(0, 0, 0): value} if value else {})

    @classmethod
    def variable(cls, index: int) -> "Polynomial":
        exponents = [0, 0, 0]
        exponents[index] = 1
        return cls._raw({tuple(exponents): Fraction(1)})

    @classmethod
    def linear_form(cls, coefficients: Sequence[Scalar]) -> "Polynomial":
        """The linear form c0*x + c1*y + c2*z."""
        c0, c1, c2 = coefficients
        return cls({(1, 0, 0): c0, (0, 1, 0): c1, (0, 0, 1): c2})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self._terms.get(tuple(monomial), Fraction(0))

    def monomials(self) -> List[Monomial]:
        """Monomials with nonzero coefficient, graded-lex descending."""
        return sorted(self._terms, key=grlex_key, reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((monomial_degree(m) for m in self._terms), default=-1)

    def is_constant(self) -> bool:
        return all(m == (0, 0, 0) for m in self._terms)

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        """True iff every monomial has the same total degree (``degree`` if given)."""
        degrees = {monomial_degree(m) for m in self._terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees.pop() == degree

    # Arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = dict(self._terms)
        for monomial, coeff in other._terms.items():
            value = result.get(monomial, 0) + coeff
            if value:
                result[monomial] = value
            else:
                result.pop(monomial, None)
        return Polynomial._raw(result)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result: Dict[Monomial, Fraction] = {}
        for (a0, a1, a2), c1 in self._terms.items():
            for (b0, b1, b2), c2 in other._terms.items():
                key = (a0 + b0, a1 + b1, a2 + b2)
                result[key] = result.get(key, 0) + c1 * c2
        return Polynomial._raw({m: c for m, c in result.items() if c})

    __rmul__ = __mul__

    def scalar_mul(self, scalar: Scalar) -> "Polynomial":
        scalar = Fraction(scalar)
        if not scalar:
            return Polynomial()
        return Polynomial._raw({m: c * scalar for m, c in self._terms.items()})

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Polynomial exponent must be a non-negative integer")
        result = Polynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # Calculus and substitution -------------------------------------------

    def partial(self, index: int) -> "Polynomial":
        """Formal partial derivative with respect to variable ``index`` (0=x, 1=y, 2=z)."""
        result: Dict[Monomial, Fraction] = {}
        for monomial, coeff in self._terms.items():
            power = monomial[index]
            if power:
                lowered = list(monomial)
                lowered[index] = power - 1
                result[tuple(lowered)] = coeff * power
        return Polynomial._raw(result)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        values = [Fraction(v) for v in point]
        total = Fraction(0)
        for (a, b, c), coeff in self._terms.items():
            total += coeff * values[0] ** a * values[1] ** b * values[2] ** c
        return total

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Replace x, y, z by the given polynomials."""
        powers: List[Dict[int, Polynomial]] = [{0: Polynomial.constant(1)} for _ in range(3)]

        def power(var: int, exponent: int) -> Polynomial:
            cache = powers[var]
            if exponent not in cache:
                cache[exponent] = power(var, exponent - 1) * images[var]
            return cache[exponent]

        result = Polynomial()
        for monomial, coeff in self._terms.items():
            term = Polynomial.constant(coeff)
            for var, exponent in enumerate(monomial):
                if exponent:
                    term = term * power(var, exponent)
            result = result + term
        return result

    def dehomogenize(self, index: int = 2) -> "Polynomial":
        """Set variable ``index`` to 1 (affine chart where that coordinate is nonzero)."""
        result: Dict[Monomial, Fraction] = {}
        for monomial, coeff in self._terms.items():
            lowered = list(monomial)
            lowered[index] = 0
            key = tuple(lowered)
            result[key] = result.get(key, 0) + coeff
        return Polynomial._raw({m: c for m, c in result.items() if c})

    def lowest_degree_part(self) -> Tuple[int, "Polynomial"]:
        """Lowest total degree present and the sum of the terms of that degree."""
        if not self._terms:
            return -1, Polynomial()
        low = min(monomial_degree(m) for m in self._terms)
        part = {m: c for m, c in self._terms.items() if monomial_degree(m) == low}
        return low, Polynomial._raw(part)

    # Printing ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for position, monomial in enumerate(self.monomials()):
            coeff = self._terms[monomial]
            factors = [
                f"{name}^{power}" if power > 1 else name
                for name, power in zip(VARIABLES, monomial)
                if power
            ]
            magnitude = abs(coeff)
            if not factors:
                body = _format_rational(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_format_rational(magnitude)] + factors)
            if position == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial('{self}')"


def product(polynomials: Iterable[Polynomial]) -> Polynomial:
    result = Polynomial.constant(1)
    for poly in polynomials:
        result = result * poly
    return result


def partial(f: Polynomial, index: int) -> Polynomial:
    return f.partial(index)


def linear_substitution(f: Polynomial, matrix: Sequence[Sequence[Scalar]]) -> Polynomial:
    """f(M·(x, y, z)): row i of ``matrix`` is the linear form replacing variable i."""
    return f.substitute([Polynomial.linear_form(row) for row in matrix])


def shear(f: Polynomial, s: Sequence[Scalar]) -> Polynomial:
    """Apply x -> x + s[0]*z, y -> y + s[1]*z, z -> z.

    A third entry of ``s`` is accepted and ignored, since z is fixed.
    """
    s1, s2 = Fraction(s[0]), Fraction(s[1])
    return linear_substitution(f, ((1, 0, s1), (0, 1, s2), (0, 0, 1)))


# Parsing --------------------------------------------------------------------

_OPERATORS = "+-*/^()"


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        char = text[i]
        if char.isspace():
            i += 1
        elif char.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("NUM", text[i:j], i))
            i = j
        elif char.isalpha() or char == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            name = text[i:j]
            if name in VARIABLES:
                tokens.append(("VAR", name, i))
            elif name.isalpha() and set(name) <= set(VARIABLES):
                raise PolynomialSyntaxError(
                    f"Implicit multiplication '{name}' is not allowed; write it with '*'", i
                )
            else:
                raise UnknownVariableError(name, i)
            i = j
        elif char in _OPERATORS:
            tokens.append((char, char, i))
            i += 1
        else:
            raise PolynomialSyntaxError(f"Unexpected character '{char}'", i)
    tokens.append(("END", "", n))
    return tokens


class _Parser:
    """Recursive-descent parser for the polynomial grammar (see docs/reference.md)."""

    def __init__(self, text: str, max_degree: Optional[int] = None):
        self.tokens = _tokenize(text)
        self.index = 0
        self.max_degree = max_degree

    def _cap(self, degree: int, position: int) -> None:
        if self.max_degree is not None and degree > self.max_degree:
            raise PreconditionError(
                f"Expression reaches degree {degree} > allowed degree {self.max_degree} "
                f"(at position {position})"
            )

    def _peek(self) -> Tuple[str, str, int]:
        return self.tokens[self.index]

    def _advance(self) -> Tuple[str, str, int]:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def parse(self) -> Polynomial:
        if self._peek()[0] == "END":
            raise PolynomialSyntaxError("Empty expression", 0)
        result = self._expr()
        kind, text, position = self._peek()
        if kind in ("NUM", "VAR"):
            raise PolynomialSyntaxError(
                f"Implicit multiplication before '{text}' is not allowed; use '*'", position
            )
        if kind != "END":
            raise PolynomialSyntaxError(f"Unexpected '{text}'", position)
        return result

    def _expr(self) -> Polynomial:
        result = self._term()
        while self._peek()[0] in ("+", "-"):
            operator = self._advance()[0]
            operand = self._term()
            result = result + operand if operator == "+" else result - operand
        return result

    def _term(self) -> Polynomial:
        result = self._unary()
        while True:
            kind, _, position = self._peek()
            if kind == "*":
                self._advance()
                operand = self._unary()
                self._cap(result.degree() + operand.degree(), position)
                result = result * operand
            elif kind == "/":
                self._advance()
                divisor = self._unary()
                if not divisor.is_constant() or divisor.is_zero():
                    raise PolynomialSyntaxError(
                        "Division is only allowed by a nonzero constant", position
                    )
                result = result.scalar_mul(1 / divisor.coefficient((0, 0, 0)))
            elif kind == "(":
                # juxtaposed parenthesized factor, as in (x+y)(x-y)
                operand = self._power()
                self._cap(result.degree() + operand.degree(), position)
                result = result * operand
            else:
                return result

    def _unary(self) -> Polynomial:
        kind = self._peek()[0]
        if kind == "-":
            self._advance()
            return -self._unary()
        if kind == "+":
            self._advance()
            return self._unary()
        return self._power()

    def _power(self) -> Polynomial:
        base = self._atom()
        if self._peek()[0] == "^":
            self._advance()
            kind, text, position = self._advance()
            if kind != "NUM":
                raise PolynomialSyntaxError(
                    "Exponent must be a non-negative integer literal", position
                )
            exponent = int(text)
            self._cap(base.degree() * exponent, position)
            base = base ** exponent
        return base

    def _atom(self) -> Polynomial:
        kind, text, position = self._advance()
        if kind == "NUM":
            return Polynomial.constant(int(text))
        if kind == "VAR":
            return Polynomial.variable(VARIABLES.index(text))
        if kind == "(":
            inner = self._expr()
            closing, text, position = self._advance()
            if closing != ")":
                raise PolynomialSyntaxError("Expected ')'", position)
            return inner
        if kind == "END":
            raise PolynomialSyntaxError("Unexpected end of input", position)
        raise PolynomialSyntaxError(f"Unexpected '{text}'", position)


def parse(text: str, max_degree: Optional[int] = None) -> Polynomial:
    """Parse polynomial text into its expanded canonical form.

    Args:
        text: Expression over integers, x, y, z and + - * / ^ ( )
        max_degree: Refuse, before expanding, any product or power above this degree

    Returns:
        Expanded Polynomial

    Raises:
        PolynomialSyntaxError: malformed input (with character position)
        UnknownVariableError: a name other than x, y, z
        PreconditionError: a subexpression exceeds ``max_degree``
    """
    return _Parser(text, max_degree).parse()


# Univariate polynomials -------------------------------------------------------


class UniPolynomial:
    """Dense univariate polynomial over the rationals, lowest degree first."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coefficients: Tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def constant(cls, value: Scalar) -> "UniPolynomial":
        return cls((value,))

    @classmethod
    def identity(cls) -> "UniPolynomial":
        return cls((0, 1))

    def degree(self) -> int:
        return len(self.coefficients) - 1

    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPolynomial.constant(other)
        if not isinstance(other, UniPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    @staticmethod
    def _coerce(other) -> "UniPolynomial":
        if isinstance(other, UniPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other) -> "UniPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return UniPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "UniPolynomial":
        return UniPolynomial([-c for c in self.coefficients])

    def __sub__(self, other) -> "UniPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "UniPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "UniPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return UniPolynomial()
        result = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    result[i + j] += x * y
        return UniPolynomial(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPolynomial":
        result = UniPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def divmod(self, divisor: "UniPolynomial") -> Tuple["UniPolynomial", "UniPolynomial"]:
        if divisor.is_zero():
            raise ZeroDivisionError("Division by the zero polynomial")
        remainder = list(self.coefficients)
        lead = divisor.leading()
        shift = len(remainder) - len(divisor.coefficients)
        if shift < 0:
            return UniPolynomial(), self
        quotient = [Fraction(0)] * (shift + 1)
        for k in range(shift, -1, -1):
            factor = remainder[k + divisor.degree()] / lead
            quotient[k] = factor
            if factor:
                for i, c in enumerate(divisor.coefficients):
                    remainder[k + i] -= factor * c
        return UniPolynomial(quotient), UniPolynomial(remainder)

    def __truediv__(self, other) -> "UniPolynomial":
        """Exact division; raises ArithmeticError if a remainder is left."""
        if isinstance(other, (int, Fraction)):
            return UniPolynomial([c / other for c in self.coefficients])
        quotient, remainder = self.divmod(other)
        if remainder:
            raise ArithmeticError("Polynomial division is not exact")
        return quotient

    def derivative(self) -> "UniPolynomial":
        return UniPolynomial([i * c for i, c in enumerate(self.coefficients)][1:])

    def evaluate(self, value: Scalar) -> Fraction:
        total = Fraction(0)
        for coeff in reversed(self.coefficients):
            total = total * value + coeff
        return total

    def monic(self) -> "UniPolynomial":
        if not self.coefficients:
            return self
        return self / self.leading()

    def integer_coefficients(self) -> List[int]:
        """Primitive integer multiple of this polynomial (same roots)."""
        if not self.coefficients:
            return []
        scale = 1
        for c in self.coefficients:
            scale = scale * c.denominator // gcd(scale, c.denominator)
        ints = [int(c * scale) for c in self.coefficients]
        content = 0
        for value in ints:
            content = gcd(content, value)
        return [value // content for value in ints]

    def __str__(self) -> str:
        return self.format("x")

    def format(self, variable: str) -> str:
        if not self.coefficients:
            return "0"
        text = str(Polynomial({(i, 0, 0): c for i, c in enumerate(self.coefficients)}))
        return text if variable == "x" else text.replace("x", variable)

    def __repr__(self) -> str:
        return f"UniPolynomial({[str(c) for c in self.coefficients]})"


def uni_gcd(a: UniPolynomial, b: UniPolynomial) -> UniPolynomial:
    """Monic greatest common divisor (zero iff both inputs are zero)."""
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic()


def squarefree_check(g: UniPolynomial) -> bool:
    """True iff ``g`` has no repeated root, i.e. gcd(g, g') is constant."""
    if g.is_zero():
        raise PreconditionError("squarefree_check needs a nonzero polynomial")
    return uni_gcd(g, g.derivative()).degree() == 0


def squarefree_decomposition(g: UniPolynomial) -> List[Tuple[UniPolynomial, int]]:
    """Yun's algorithm: monic square-free factors paired with their multiplicities."""
    if g.degree() <= 0:
        return []
    g = g.monic()
    derivative = g.derivative()
    common = uni_gcd(g, derivative)
    b = g / common
    c = derivative / common
    d = c - b.derivative()
    multiplicity = 1
    factors = []
    while b.degree() > 0:
        a = uni_gcd(b, d)
        if a.degree() > 0:
            factors.append((a, multiplicity))
        b = b / a
        c = d / a
        d = c - b.derivative()
        multiplicity += 1
    return factors


def rational_roots(g: UniPolynomial) -> List[Fraction]:
    """Distinct rational roots, ascending, read off the linear factors over Z."""
    if g.is_zero():
        raise PreconditionError("The zero polynomial has no finite root set")
    if g.degree() < 1:
        return []
    coeffs = g.integer_coefficients()
    poly = sympy.Poly.from_list(coeffs[::-1], _ROOT_SYMBOL, domain=sympy.ZZ)
    _, factors = poly.factor_list()
    roots = set()
    for factor, _ in factors:
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            roots.add(Fraction(-int(b), int(a)))
    return sorted(roots)


# Polynomials in y over Q[x] ---------------------------------------------------

YPolynomial = Sequence[UniPolynomial]


def y_coefficients(f: Polynomial) -> List[UniPolynomial]:
    """Coefficients of an affine polynomial in x, y as a polynomial in y over Q[x].

    Entry i is the coefficient of y^i; exponents of z are ignored, so callers
    pass a dehomogenized polynomial.
    """
    by_power: Dict[int, Dict[int, Fraction]] = {}
    for (a, b, _), coeff in f.terms.items():
        row = by_power.setdefault(b, {})
        row[a] = row.get(a, 0) + coeff
    top = max(by_power, default=-1)
    result = []
    for power in range(top + 1):
        row = by_power.get(power, {})
        result.append(UniPolynomial([row.get(i, 0) for i in range(max(row, default=-1) + 1)]))
    return result


def _sylvester_rows(f: YPolynomial, g: YPolynomial, j: int) -> List[List[UniPolynomial]]:
    """Rows of the j-th subresultant matrix: n-j shifts of f above m-j shifts of g.

    Columns run over descending powers of y, from y^(m+n-j-1) down to 1.
    """
    m, n = len(f) - 1, len(g) - 1
    if m < 0 or n < 0:
        raise PreconditionError("Subresultants need nonzero polynomials")
    if not 0 <= j <= min(m, n):
        raise PreconditionError(f"Subresultant index {j} out of range for degrees {m}, {n}")
    width = m + n - j
    zero = UniPolynomial()
    rows = []
    for coefficients, count in ((f, n - j), (g, m - j)):
        high_first = list(reversed(coefficients))
        for shift in range(count):
            row = [zero] * width
            for offset, coeff in enumerate(high_first):
                row[shift + offset] = coeff
            rows.append(row)
    return rows


def subresultant(f: YPolynomial, g: YPolynomial, j: int) -> List[UniPolynomial]:
    """Coefficients (lowest power of y first) of the j-th subresultant S_j.

    The coefficient of y^i is the determinant of the leading m+n-2j-1 columns
    together with the column of y^i.
    """
    m, n = len(f) - 1, len(g) - 1
    rows = _sylvester_rows(f, g, j)
    width = m + n - j
    lead = m + n - 2 * j - 1
    if not rows:
        return [UniPolynomial()] * j + [UniPolynomial.constant(1)]
    coefficients = []
    for power in range(j + 1):
        column = width - 1 - power
        minor = [row[:lead] + [row[column]] for row in rows]
        coefficients.append(determinant(minor))
    return coefficients


def principal_subresultant(f: YPolynomial, g: YPolynomial, j: int) -> UniPolynomial:
    """j-th principal subresultant coefficient of f and g with respect to y.

    Determinant of the first m+n-2j columns of the subresultant matrix; for
    j = 0 this is the resultant.
    """
    m, n = len(f) - 1, len(g) - 1
    rows = _sylvester_rows(f, g, j)
    if not rows:
        return UniPolynomial.constant(1)
    size = m + n - 2 * j
    return determinant([row[:size] for row in rows])


def resultant(f: YPolynomial, g: YPolynomial) -> UniPolynomial:
    """Res_y(f, g) as a polynomial in x.

    Sylvester determinant with the rows of ``f`` on top, columns ordered by
    descending powers of y, evaluated by Bareiss elimination over Q[x].
    """
    return principal_subresultant(f, g, 0)
