"""Exact rationals.

``fractions.Fraction`` already keeps values in canonical form (positive
denominator, reduced) over Python's unbounded ints, so it is used directly.
This module adds the ``"num/den"`` wire format and a display-only decimal view.
"""

from decimal import Decimal, localcontext
from fractions import Fraction
import operator
import re

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_arith(a: Fraction, b: Fraction, op: str):
    """Apply ``op`` to two rationals; ``cmp`` gives -1, 0 or 1.

    Raises ZeroDivisionError for ``div`` by zero.
    """
    a, b = Fraction(a), Fraction(b)
    if op == "cmp":
        return (a > b) - (a < b)
    try:
        return _OPS[op](a, b)
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None


def format_rational(x: Fraction) -> str:
    """Canonical ``num/den`` string; integers keep the ``/1``."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not a rational: {text!r}")
    num, den = match.groups()
    den = int(den) if den is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), den)


def approx(x: Fraction, digits: int = 12) -> str:
    # display only; never fed back into a computation
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = digits
        return str(+(Decimal(x.numerator) / Decimal(x.denominator)))
