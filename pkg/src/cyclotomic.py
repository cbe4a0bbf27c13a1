"""
Exact cyclotomic polynomials over the integers.

Polynomials are dense coefficient tuples, index = degree. Phi_n is built by
exact division of X^n - 1 by the Phi_d of its proper divisors; the
recursion (Phi_np(X) = Phi_n(X^p), or Phi_n(X^p) / Phi_n(X) when p does not
divide n) is kept as a second, independent constructor.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple

try:
    from .numtheory import classify_prime_power, classify_twice_prime_power, factorize, proper_divisors
except ImportError:
    from numtheory import classify_prime_power, classify_twice_prime_power, factorize, proper_divisors


def _normalize(coeffs: Sequence[int]) -> Tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class IntPoly:
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(tuple(self.coeffs)))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def x_power_minus_one(cls, n: int) -> "IntPoly":
        return cls((-1,) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return IntPoly(res)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero or other.is_zero:
            return IntPoly(())
        res = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    res[i + j] += a * b
        return IntPoly(res)

    def __divmod__(self, divisor: "IntPoly"):
        """Division by a monic (or unit-leading) divisor, quotient and remainder."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise ArithmeticError("integer division needs a divisor with leading coefficient +-1")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return IntPoly(()), IntPoly(rem)
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            q = rem[i] * lead
            if q:
                quot[i - dd] = q
                for j, c in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= q * c
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, divisor: "IntPoly") -> "IntPoly":
        quot, rem = divmod(self, divisor)
        if not rem.is_zero:
            raise ArithmeticError(f"inexact polynomial division, remainder {rem.coeffs}")
        return quot

    def compose_power(self, p: int) -> "IntPoly":
        """P(X^p)."""
        res = [0] * (self.degree * p + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            res[i * p] = c
        return IntPoly(res)

    def __call__(self, x: int) -> int:
        return eval_int(self, x)

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coeffs) or "0"


def eval_int(p: IntPoly, x: int) -> int:
    """Horner evaluation, exact."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=512)
def cyclotomic_poly(n: int) -> IntPoly:
    if n < 1:
        raise ValueError(f"cyclotomic_poly requires n >= 1, got {n}")
    if n == 1:
        return IntPoly((-1, 1))
    result = IntPoly.x_power_minus_one(n)
    for d in proper_divisors(n):
        result = result.exact_div(cyclotomic_poly(d))
    return result


def cyclotomic_poly_by_recursion(n: int) -> IntPoly:
    """Phi_n built from Phi_1 by adjoining one prime at a time."""
    if n < 1:
        raise ValueError(f"cyclotomic_poly requires n >= 1, got {n}")
    poly, m = IntPoly((-1, 1)), 1
    if n == 1:
        return poly
    for p, alpha in factorize(n):
        # p does not divide m: Phi_mp(X) = Phi_m(X^p) / Phi_m(X)
        poly, m = poly.compose_power(p).exact_div(poly), m * p
        # p divides m: Phi_mp(X) = Phi_m(X^p)
        for _ in range(alpha - 1):
            poly, m = poly.compose_power(p), m * p
    return poly


def xn_minus_one_quotient(n: int) -> IntPoly:
    """(X^n - 1) / (X - 1) = 1 + X + ... + X^(n-1); its value at 1 is n."""
    return IntPoly.x_power_minus_one(n).exact_div(IntPoly((-1, 1)))


def even_cosine_quotient(n: int) -> IntPoly:
    """(X^n - 1) / ((X - 1)(X + 1)) for even n; its value at -1 is n/2."""
    if n < 2 or n % 2:
        raise ValueError(f"even_cosine_quotient requires even n >= 2, got {n}")
    return IntPoly.x_power_minus_one(n).exact_div(IntPoly((-1, 0, 1)))


def phi_at_1(n: int) -> int:
    """Phi_n(1) by classification: 0 for n = 1, p for n = p^a, 1 otherwise."""
    if n < 1:
        raise ValueError(f"phi_at_1 requires n >= 1, got {n}")
    if n == 1:
        return 0
    cls = classify_prime_power(n)
    return cls.prime if cls.is_prime_power else 1


def phi_at_minus1(n: int) -> int:
    """Phi_n(-1) by classification: -2, 0 for n = 1, 2; p for n = 2p^a; else 1."""
    if n < 1:
        raise ValueError(f"phi_at_minus1 requires n >= 1, got {n}")
    if n == 1:
        return -2
    if n == 2:
        return 0
    twice = classify_twice_prime_power(n)
    return twice.prime if twice else 1
