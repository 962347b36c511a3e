"""Exact rational scalars.

All coefficients in this package are `fractions.Fraction` values: always in
lowest terms, zero represented as 0/1, arbitrary-precision integer parts.
No floating point is used anywhere.
"""

from fractions import Fraction

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(value) -> Fraction:
    """Coerce an int, string ("p/q" or "p") or Fraction to a Scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot build an exact scalar from {type(value).__name__}")


def format_scalar(value: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))


def parse_scalar(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def scalar_arith(a, b, op: str) -> Fraction:
    """Field arithmetic on exact rationals. `op` is one of '+', '-', '*', '/'."""
    a, b = scalar(a), scalar(b)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        if b == 0:
            raise ZeroDivisionError("scalar division by zero")
        return a / b
    raise ValueError(f"unknown scalar operation {op!r}")
