"""
Exact bivariate polynomials with integer coefficients.

A thin wrapper over sympy.Poly in ZZ[x, y]. Printing and JSON list terms
in graded lexicographic order: higher total degree first, then higher
degree in x.
"""

import json
from typing import Iterable, Iterator, Mapping

import sympy
from sympy import ZZ, Poly
from sympy.polys.polyerrors import ExactQuotientFailed

from ..core.errors import InexactDivisionError

Exponent = tuple[int, int]

X, Y = sympy.symbols("x y")


class BivariatePolynomial:
    """Immutable element of Z[x, y]."""

    __slots__ = ("_poly",)

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] | Poly = ()):
        if isinstance(terms, Poly):
            self._poly = terms
            return
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[Exponent, int] = {}
        for (dx, dy), c in items:
            if dx < 0 or dy < 0:
                raise ValueError(f"negative exponent ({dx},{dy})")
            collected[(dx, dy)] = collected.get((dx, dy), 0) + c
        self._poly = Poly.from_dict(collected or {(0, 0): 0}, X, Y, domain=ZZ)

    # --------------------------------------------------------------------------
    # Constructors
    # --------------------------------------------------------------------------

    @classmethod
    def from_expr(cls, expr: sympy.Expr) -> "BivariatePolynomial":
        """Polynomial of a sympy expression in x and y with integer coefficients."""
        return cls(Poly(expr, X, Y, domain=ZZ))

    @classmethod
    def constant(cls, c: int) -> "BivariatePolynomial":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, dx: int, dy: int, c: int = 1) -> "BivariatePolynomial":
        return cls({(dx, dy): c})

    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls()

    @classmethod
    def one(cls) -> "BivariatePolynomial":
        return cls.constant(1)

    @classmethod
    def x(cls) -> "BivariatePolynomial":
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> "BivariatePolynomial":
        return cls.monomial(0, 1)

    # --------------------------------------------------------------------------
    # Access
    # --------------------------------------------------------------------------

    @property
    def poly(self) -> Poly:
        return self._poly

    def as_expr(self) -> sympy.Expr:
        return self._poly.as_expr()

    @property
    def terms(self) -> dict[Exponent, int]:
        return {e: c for e, c in self.ordered_terms()}

    def coefficient(self, dx: int, dy: int) -> int:
        return int(self._poly.coeff_monomial((dx, dy)))

    def ordered_terms(self) -> list[tuple[Exponent, int]]:
        """Nonzero terms in graded lexicographic order."""
        if self.is_zero():
            return []
        return [((dx, dy), int(c)) for (dx, dy), c in self._poly.terms(order="grlex")]

    def is_zero(self) -> bool:
        return self._poly.is_zero

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self.ordered_terms())

    def __len__(self) -> int:
        return len(self.ordered_terms())

    # --------------------------------------------------------------------------
    # Arithmetic
    # --------------------------------------------------------------------------

    @staticmethod
    def _coerce(other: "BivariatePolynomial | int") -> "BivariatePolynomial":
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, int):
            return BivariatePolynomial.constant(other)
        return NotImplemented

    def __add__(self, other: "BivariatePolynomial | int") -> "BivariatePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return BivariatePolynomial(self._poly + other._poly)

    __radd__ = __add__

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial(-self._poly)

    def __sub__(self, other: "BivariatePolynomial | int") -> "BivariatePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return BivariatePolynomial(self._poly - other._poly)

    def __rsub__(self, other: int) -> "BivariatePolynomial":
        return (-self) + other

    def __mul__(self, other: "BivariatePolynomial | int") -> "BivariatePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return BivariatePolynomial(self._poly * other._poly)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BivariatePolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        return BivariatePolynomial(self._poly ** exponent)

    def exact_div(self, divisor: "BivariatePolynomial") -> "BivariatePolynomial":
        """
        Quotient of an exact division in Z[x, y].

        Raises:
            InexactDivisionError: the divisor is zero or leaves a remainder
        """
        if divisor.is_zero():
            raise InexactDivisionError("division by the zero polynomial")
        try:
            return BivariatePolynomial(self._poly.exquo(divisor._poly, auto=False))
        except ExactQuotientFailed as exc:
            raise InexactDivisionError("polynomial division leaves a remainder") from exc

    # --------------------------------------------------------------------------
    # Evaluation and symmetry
    # --------------------------------------------------------------------------

    def evaluate(self, x: int, y: int) -> int:
        return int(self.as_expr().subs({X: x, Y: y}))

    def swap(self) -> "BivariatePolynomial":
        """P(y, x)."""
        return BivariatePolynomial({(dy, dx): c for (dx, dy), c in self.ordered_terms()})

    # --------------------------------------------------------------------------
    # Comparison and output
    # --------------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def to_dict(self) -> dict:
        return {"terms": [{"x": dx, "y": dy, "c": str(c)} for (dx, dy), c in self.ordered_terms()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "BivariatePolynomial":
        data = json.loads(text)
        return cls({(term["x"], term["y"]): int(term["c"]) for term in data["terms"]})

    def __str__(self) -> str:
        terms = self.ordered_terms()
        if not terms:
            return "0"
        parts = []
        for (dx, dy), c in terms:
            factors = []
            if dx:
                factors.append("x" if dx == 1 else f"x^{dx}")
            if dy:
                factors.append("y" if dy == 1 else f"y^{dy}")
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude), *factors])
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self})"
