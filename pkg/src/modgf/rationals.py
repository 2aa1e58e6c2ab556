"""Canonical string form for exact rationals: "p" or "p/q" with q > 0, gcd = 1.

str(Fraction) already produces exactly this form; the helpers exist so every
JSON writer and reader in the package shares one validated code path.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError


def rat_to_str(value: Fraction) -> str:
    return str(value)


def rat_from_str(text: str) -> Fraction:
    """Parse "p" or "p/q". Rejects floats, whitespace padding and q = 0."""
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {type(text).__name__}", 0)
    body = text.strip()
    if not body:
        raise ParseError("empty rational literal", 0)
    num_part, slash, den_part = body.partition("/")
    try:
        num = int(num_part)
    except ValueError:
        raise ParseError(f"bad integer {num_part!r} in rational literal", 0) from None
    if not slash:
        return Fraction(num)
    try:
        den = int(den_part)
    except ValueError:
        raise ParseError(f"bad integer {den_part!r} in rational literal", 0) from None
    if den == 0:
        raise ParseError("division by zero in rational literal", 0)
    return Fraction(num, den)
