"""
Farey sequences.

F(n) is enumerated lazily with the neighbour recurrence, so even large orders
never materialize the full list. Endpoints 0/1 and 1/1 are always yielded;
product index sets exclude them in the callers.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

try:
    from .numtheory import coprime_residues, totient
except ImportError:
    from numtheory import coprime_residues, totient

HALF = Fraction(1, 2)


@dataclass
class FareyCursor:
    """Two adjacent members a/b < c/d of F(order)."""
    order: int
    previous: Fraction
    current: Fraction

    @classmethod
    def start(cls, order: int) -> "FareyCursor":
        return cls(order, Fraction(0, 1), Fraction(1, order))

    def advance(self) -> None:
        a, b = self.previous.numerator, self.previous.denominator
        c, d = self.current.numerator, self.current.denominator
        k = (self.order + b) // d
        self.previous, self.current = self.current, Fraction(k * c - a, k * d - b)


def farey_sequence(order: int) -> Iterator[Fraction]:
    """Yield F(order) from 0/1 to 1/1 in increasing order."""
    if order < 1:
        raise ValueError(f"Farey order must be >= 1, got {order}")
    return _walk(order)


def _walk(order: int) -> Iterator[Fraction]:
    cursor = FareyCursor.start(order)
    yield cursor.previous
    while True:
        yield cursor.current
        if cursor.current == 1:
            return
        cursor.advance()


def farey_count(order: int) -> int:
    """|F(order)| = 1 + sum of totients up to order."""
    if order < 1:
        raise ValueError(f"Farey order must be >= 1, got {order}")
    return 1 + sum(totient(m) for m in range(1, order + 1))


def farey_interior_count(order: int) -> int:
    """Members strictly between 0 and 1."""
    return farey_count(order) - 2


def farey_half(order: int, include_half: bool = True) -> Iterator[Fraction]:
    """Members of F(order) in (0, 1/2], or (0, 1/2) without include_half."""
    for r in farey_sequence(order):
        if r == 0:
            continue
        if r > HALF or (r == HALF and not include_half):
            return
        yield r


def farey_denominator_slice(order: int, m: int) -> Iterator[Fraction]:
    """Interior members of F(order) with denominator exactly m."""
    if not 1 <= m <= order:
        return iter(())
    return (Fraction(k, m) for k in coprime_residues(m))
