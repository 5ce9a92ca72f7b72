# core/algebra/text.py
"""Canonical text form of polynomials and rational functions.

Polynomials print their nonzero terms in decreasing degree joined by " + ",
e.g. ``T^3 + 2*T`` over F_3. A coefficient equal to one is omitted in front of
a power of T. Over extension fields coefficients print as coordinate tuples
``(c0,c1,...)`` in the basis 1, u, ... . Rational functions print as
``(num)/(den)``, or as the bare numerator when the denominator is 1.
"""

import re
from typing import TYPE_CHECKING, Dict

import numpy as np

from core.exceptions import ParseError

from .field import FieldElem, FieldSpec

if TYPE_CHECKING:
    from .poly import Poly
    from .ratfunc import RatFunc

_COEF = r"\d+|\([\d,\s]+\)"
_TERM_RE = re.compile(rf"^(?:(?P<coef>{_COEF})\s*\*\s*)?T(?:\s*\^\s*(?P<exp>\d+))?$")
_CONST_RE = re.compile(rf"^(?P<coef>{_COEF})$")


def format_coefficient(spec: FieldSpec, code: int) -> str:
    return str(FieldElem(spec, int(code)))


def format_poly(poly: "Poly") -> str:
    if poly.is_zero:
        return "0"
    terms = []
    coeffs = poly.coefficients
    for degree in np.flatnonzero(coeffs)[::-1]:
        degree = int(degree)
        code = int(coeffs[degree])
        if degree == 0:
            terms.append(format_coefficient(poly.spec, code))
            continue
        power = "T" if degree == 1 else f"T^{degree}"
        terms.append(power if code == 1 else f"{format_coefficient(poly.spec, code)}*{power}")
    return " + ".join(terms)


def format_ratfunc(value: "RatFunc") -> str:
    if value.den.is_one:
        return format_poly(value.num)
    return f"({format_poly(value.num)})/({format_poly(value.den)})"


def _parse_coefficient(spec: FieldSpec, text: str) -> int:
    if text.startswith("("):
        parts = [part.strip() for part in text[1:-1].split(",")]
        if any(not part.isdigit() for part in parts):
            raise ParseError(f"malformed coefficient {text!r}")
        try:
            return spec.code_from_rep([int(part) for part in parts])
        except ValueError as e:
            raise ParseError(str(e)) from e
    value = int(text)
    if value >= spec.p:
        raise ParseError(f"coefficient {value} is not below p = {spec.p}")
    return value


def _split_top_level(text: str, separator: str) -> list:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {text!r}")
        elif ch == separator and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth:
        raise ParseError(f"unbalanced parentheses in {text!r}")
    parts.append(text[start:])
    return parts


def _unwrap(text: str) -> str:
    """Strip one pair of parentheses enclosing the whole text"""
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        return text
    depth = 0
    for i, ch in enumerate(text):
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0 and i < len(text) - 1:
            return text
    return text[1:-1].strip()


def parse_poly(spec: FieldSpec, text: str) -> "Poly":
    from .poly import poly_from_codes

    text = text.strip()
    if not text:
        raise ParseError("empty polynomial text")
    terms: Dict[int, int] = {}
    for raw in _split_top_level(text, "+"):
        term = raw.strip()
        match = _TERM_RE.match(term)
        if match:
            coef = match.group("coef")
            code = _parse_coefficient(spec, coef) if coef else 1
            degree = int(match.group("exp") or 1)
        else:
            match = _CONST_RE.match(term)
            if not match:
                raise ParseError(f"malformed term {term!r} in {text!r}")
            code = _parse_coefficient(spec, match.group("coef"))
            degree = 0
        terms[degree] = int(spec.add(terms.get(degree, 0), code))
    codes = [0] * (max(terms) + 1)
    for degree, code in terms.items():
        codes[degree] = code
    return poly_from_codes(spec, codes)


def parse_ratfunc(spec: FieldSpec, text: str) -> "RatFunc":
    from .ratfunc import RatFunc

    parts = _split_top_level(text.strip(), "/")
    if len(parts) == 1:
        return RatFunc(parse_poly(spec, parts[0]))
    if len(parts) != 2:
        raise ParseError(f"more than one fraction bar in {text!r}")
    num, den = (parse_poly(spec, _unwrap(part)) for part in parts)
    return RatFunc(num, den)
