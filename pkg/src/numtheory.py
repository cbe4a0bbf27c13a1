"""
Exact integer number theory.

Oracles for LCM(n) = lcm{1..n} and the dual LCM over proper divisors, the
totient, factorization, and the prime-power classifications that select the
right-hand side of every identity in the catalog.
"""
import math
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Iterator, List, Optional, Tuple

import sympy

# Trial division handles every n whose smallest factors are below this bound;
# sympy takes over for the (never desk-scale) remainder.
TRIAL_LIMIT = 10 ** 6

Factorization = List[Tuple[int, int]]


class PrimePowerKind(str, Enum):
    NOT_PRIME_POWER = "NotPrimePower"
    PRIME_POWER = "PrimePower"
    TWICE_PRIME_POWER = "TwicePrimePower"


@dataclass(frozen=True)
class PrimePowerClass:
    kind: PrimePowerKind
    prime: Optional[int] = None
    exponent: Optional[int] = None

    @property
    def is_prime_power(self) -> bool:
        return self.kind == PrimePowerKind.PRIME_POWER

    def __str__(self) -> str:
        if self.prime is None:
            return self.kind.value
        return f"{self.kind.value}({self.prime},{self.exponent})"


NOT_PRIME_POWER = PrimePowerClass(PrimePowerKind.NOT_PRIME_POWER)


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def lcm_upto(n: int) -> int:
    """lcm{1, ..., n}; the empty fold gives 1 for n in {0, 1}."""
    return reduce(math.lcm, range(1, n + 1), 1)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n >= TRIAL_LIMIT:
        return bool(sympy.isprime(n))
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def factorize(n: int) -> Factorization:
    """Prime factorization as ascending (prime, exponent) pairs."""
    if n < 2:
        raise ValueError(f"factorize requires n >= 2, got {n}")
    factors: Factorization = []
    remaining = n
    d = 2
    while d * d <= remaining and d <= TRIAL_LIMIT:
        if remaining % d == 0:
            exponent = 0
            while remaining % d == 0:
                remaining //= d
                exponent += 1
            factors.append((d, exponent))
        d += 1 if d == 2 else 2
    if remaining > 1:
        if d * d <= remaining:
            # Cofactor has no prime below TRIAL_LIMIT; hand it to sympy.
            factors.extend(sorted(sympy.factorint(remaining).items()))
        else:
            factors.append((remaining, 1))
    assert all(is_prime(p) for p, _ in factors), f"non-prime factor of {n}"
    return factors


def multiply_out(factorization: Factorization) -> int:
    return reduce(lambda acc, pe: acc * pe[0] ** pe[1], factorization, 1)


def totient(n: int) -> int:
    if n < 1:
        raise ValueError(f"totient requires n >= 1, got {n}")
    if n == 1:
        return 1
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def classify_prime_power(n: int) -> PrimePowerClass:
    if n < 2:
        return NOT_PRIME_POWER
    factors = factorize(n)
    if len(factors) == 1:
        p, alpha = factors[0]
        return PrimePowerClass(PrimePowerKind.PRIME_POWER, p, alpha)
    return NOT_PRIME_POWER


def classify_twice_prime_power(n: int) -> Optional[PrimePowerClass]:
    """
    TwicePrimePower(p, alpha) when n = 2 * p^alpha, otherwise None.

    Powers of two count with p = 2: n = 2^(a+1) is read as 2 * 2^a and
    reported as (2, a + 1), the exponent of 2 in n.
    """
    if n < 3:
        raise ValueError(f"classify_twice_prime_power requires n >= 3, got {n}")
    if n % 2:
        return None
    half = classify_prime_power(n // 2)
    if not half.is_prime_power:
        return None
    exponent = half.exponent + 1 if half.prime == 2 else half.exponent
    return PrimePowerClass(PrimePowerKind.TWICE_PRIME_POWER, half.prime, exponent)


def proper_divisors(n: int) -> List[int]:
    """All d with d | n and 0 < d < n, ascending; empty for n in {0, 1}."""
    if n < 2:
        return []
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    divisors = small + large[::-1]
    return divisors[:-1]


def lcm_bar(n: int) -> int:
    """lcm of the proper divisors of n, 1 when there are none."""
    return reduce(math.lcm, proper_divisors(n), 1)


def coprime_residues(n: int) -> Iterator[int]:
    if n < 1:
        raise ValueError(f"coprime_residues requires n >= 1, got {n}")
    return (k for k in range(1, n) if math.gcd(k, n) == 1)


def noncoprime_residues(n: int) -> Iterator[int]:
    """0 < k < n with gcd(k, n) > 1."""
    return (k for k in range(1, n) if math.gcd(k, n) != 1)
