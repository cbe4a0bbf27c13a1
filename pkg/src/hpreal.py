"""
Arbitrary-precision real enclosures (balls).

A Ball is a midpoint and a nonnegative radius, both raw mpmath dyadic floats
(``mpmath.libmp`` tuples). Every operation returns a ball containing the exact
result for every choice of inputs inside the operand balls:

- midpoints are computed exactly, then rounded to the working precision, and
  the exact rounding error is folded into the radius;
- radii are carried at a short fixed precision, always rounded upward;
- monotone functions (exp, log, sqrt) are evaluated at both endpoints with
  directed rounding.

sin/cos of pi*r reduce r exactly in the rationals before any floating-point
work, then sum a Taylor series in fixed point with an explicit error count.
ln Gamma of a rational shifts the argument upward by an exact rational product
and sums the Stirling series with a bound from the first omitted term.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional, Tuple, Union

import sympy
from mpmath.libmp import (
    fone,
    from_int,
    from_man_exp,
    from_rational,
    fzero,
    mpf_abs,
    mpf_add,
    mpf_exp,
    mpf_log,
    mpf_mul,
    mpf_neg,
    mpf_pi,
    mpf_pos,
    mpf_shift,
    mpf_sign,
    mpf_sqrt,
    mpf_sub,
    round_ceiling,
    round_floor,
    round_nearest,
    to_str,
)

RAD_PREC = 32           # radii only need a few significant bits
GUARD_BITS = 24         # extra bits carried inside transcendental kernels
ELEMENTARY_SLACK = 2    # ulps of slack granted to mpmath exp/log endpoints
MIN_BITS = 16

RawMpf = Tuple[int, int, int, int]


@dataclass(frozen=True)
class Precision:
    bits: int

    def __post_init__(self):
        if self.bits < MIN_BITS:
            raise ValueError(f"precision must be at least {MIN_BITS} bits, got {self.bits}")

    def doubled(self) -> "Precision":
        return Precision(self.bits * 2)


PrecisionLike = Union[Precision, int]


def _bits(p: PrecisionLike) -> int:
    return p.bits if isinstance(p, Precision) else Precision(int(p)).bits


def _to_fraction(s: RawMpf) -> Fraction:
    sign, man, exp, _ = s
    man = int(man)
    if not man:
        return Fraction(0)
    value = Fraction(man << exp) if exp >= 0 else Fraction(man, 1 << -exp)
    return -value if sign else value


def _rad_up(x: RawMpf) -> RawMpf:
    return mpf_pos(x, RAD_PREC, round_ceiling)


def _rad_sum(*terms: RawMpf) -> RawMpf:
    acc = fzero
    for t in terms:
        acc = mpf_add(acc, t, RAD_PREC, round_ceiling)
    return acc


def _rad_mul(a: RawMpf, b: RawMpf) -> RawMpf:
    return mpf_mul(a, b, RAD_PREC, round_ceiling)


def _round(exact: RawMpf, prec: int) -> Tuple[RawMpf, RawMpf]:
    """Round to nearest at prec bits; return (rounded, exact |error| rounded up)."""
    mid = mpf_pos(exact, prec, round_nearest)
    return mid, _rad_up(mpf_abs(mpf_sub(exact, mid)))


@dataclass(frozen=True)
class Ball:
    mid: RawMpf
    rad: RawMpf
    prec: int

    @classmethod
    def exact(cls, value: Union[int, Fraction], prec: PrecisionLike) -> "Ball":
        """Ball for an integer or rational, exact whenever the value is dyadic and fits."""
        if isinstance(value, Fraction):
            return cls.from_ratio(value.numerator, value.denominator, prec)
        return cls.from_ratio(int(value), 1, prec)

    @classmethod
    def from_ratio(cls, p: int, q: int, prec: PrecisionLike) -> "Ball":
        bits = _bits(prec)
        if q <= 0:
            raise ValueError(f"denominator must be positive, got {q}")
        if q & (q - 1) == 0:
            mid, err = _round(from_man_exp(p, -(q.bit_length() - 1)), bits)
            return cls(mid, err, bits)
        mid = from_rational(p, q, bits, round_nearest)
        return cls(mid, _rad_up(mpf_shift(mpf_abs(mid), 1 - bits)), bits)

    @classmethod
    def from_fraction(cls, r: Fraction, prec: PrecisionLike) -> "Ball":
        return cls.from_ratio(r.numerator, r.denominator, prec)

    @classmethod
    def from_endpoints(cls, lo: RawMpf, hi: RawMpf, prec: int) -> "Ball":
        mid, _ = _round(mpf_shift(mpf_add(lo, hi), -1), prec)
        spread = max(_to_fraction(mpf_sub(hi, mid)), _to_fraction(mpf_sub(mid, lo)))
        return cls(mid, _rad_up(from_rational(spread.numerator, spread.denominator, RAD_PREC, round_ceiling)), prec)

    @property
    def lower(self) -> RawMpf:
        return mpf_sub(self.mid, self.rad)

    @property
    def upper(self) -> RawMpf:
        return mpf_add(self.mid, self.rad)

    @property
    def is_exact(self) -> bool:
        return self.rad == fzero

    @property
    def midpoint(self) -> Fraction:
        return _to_fraction(self.mid)

    @property
    def radius(self) -> Fraction:
        return _to_fraction(self.rad)

    @property
    def radius_exponent(self) -> Optional[int]:
        """Smallest e with radius <= 2^e; None for exact balls."""
        if self.is_exact:
            return None
        _, man, exp, bc = self.rad
        e = exp + bc
        return e - 1 if int(man) == 1 << (bc - 1) else e

    def contains(self, value: Union[int, Fraction]) -> bool:
        v = Fraction(value)
        return abs(v - self.midpoint) <= self.radius

    def contains_ball(self, other: "Ball") -> bool:
        return (_to_fraction(self.lower) <= _to_fraction(other.lower)
                and _to_fraction(other.upper) <= _to_fraction(self.upper))

    def overlaps(self, other: "Ball") -> bool:
        return (_to_fraction(self.lower) <= _to_fraction(other.upper)
                and _to_fraction(other.lower) <= _to_fraction(self.upper))

    def digits(self, dps: int = 30) -> str:
        return to_str(self.mid, dps)

    def summary(self, dps: int = 30) -> dict:
        return {"midpoint": self.digits(dps), "radius_exp": self.radius_exponent}

    def __str__(self) -> str:
        if self.is_exact:
            return f"[{self.digits()} exact]"
        return f"[{self.digits()} +/- 2^{self.radius_exponent}]"


def zero_ball(prec: PrecisionLike) -> Ball:
    return Ball(fzero, fzero, _bits(prec))


def one_ball(prec: PrecisionLike) -> Ball:
    return Ball(fone, fzero, _bits(prec))


# ---------------------------------------------------------------------------
# Arithmetic
# ---------------------------------------------------------------------------

def ball_add(a: Ball, b: Ball) -> Ball:
    prec = max(a.prec, b.prec)
    mid, err = _round(mpf_add(a.mid, b.mid), prec)
    return Ball(mid, _rad_sum(a.rad, b.rad, err), prec)


def ball_neg(a: Ball) -> Ball:
    return Ball(mpf_neg(a.mid), a.rad, a.prec)


def ball_sub(a: Ball, b: Ball) -> Ball:
    return ball_add(a, ball_neg(b))


def ball_mul(a: Ball, b: Ball) -> Ball:
    prec = max(a.prec, b.prec)
    mid, err = _round(mpf_mul(a.mid, b.mid), prec)
    rad = _rad_sum(
        _rad_mul(mpf_abs(a.mid), b.rad),
        _rad_mul(mpf_abs(b.mid), a.rad),
        _rad_mul(a.rad, b.rad),
        err,
    )
    return Ball(mid, rad, prec)


def ball_square(a: Ball) -> Ball:
    return ball_mul(a, a)


def ball_scale_by_int(a: Ball, k: int) -> Ball:
    mid, err = _round(mpf_mul(a.mid, from_int(k)), a.prec)
    return Ball(mid, _rad_sum(_rad_mul(a.rad, from_int(abs(k))), err), a.prec)


def ball_shift(a: Ball, e: int) -> Ball:
    """Exact multiplication by 2^e."""
    return Ball(mpf_shift(a.mid, e), mpf_shift(a.rad, e), a.prec)


def ball_widen(a: Ball, extra: RawMpf) -> Ball:
    return Ball(a.mid, _rad_sum(a.rad, extra), a.prec)


def ball_abs(a: Ball) -> Ball:
    if mpf_sign(a.lower) >= 0:
        return a
    if mpf_sign(a.upper) <= 0:
        return ball_neg(a)
    top = mpf_add(mpf_abs(a.mid), a.rad)
    return Ball.from_endpoints(fzero, top, a.prec)


def _widen_down(x: RawMpf, prec: int) -> RawMpf:
    return mpf_sub(x, mpf_shift(mpf_abs(x), ELEMENTARY_SLACK - prec), prec, round_floor)


def _widen_up(x: RawMpf, prec: int) -> RawMpf:
    return mpf_add(x, mpf_shift(mpf_abs(x), ELEMENTARY_SLACK - prec), prec, round_ceiling)


def ball_exp(a: Ball) -> Ball:
    if a.mid == fzero and a.is_exact:
        return one_ball(a.prec)
    prec = a.prec
    lo = _widen_down(mpf_exp(a.lower, prec, round_floor), prec)
    hi = _widen_up(mpf_exp(a.upper, prec, round_ceiling), prec)
    return Ball.from_endpoints(lo, hi, prec)


def ball_log(a: Ball) -> Ball:
    if mpf_sign(a.lower) <= 0:
        raise ValueError(f"logarithm needs a strictly positive ball, got {a}")
    if a.mid == fone and a.is_exact:
        return zero_ball(a.prec)
    prec = a.prec
    lo = _widen_down(mpf_log(a.lower, prec, round_floor), prec)
    hi = _widen_up(mpf_log(a.upper, prec, round_ceiling), prec)
    return Ball.from_endpoints(lo, hi, prec)


def ball_sqrt(a: Ball) -> Ball:
    if mpf_sign(a.lower) < 0:
        raise ValueError(f"square root of a ball reaching below zero: {a}")
    prec = a.prec
    lo = mpf_sqrt(a.lower, prec, round_floor)
    hi = mpf_sqrt(a.upper, prec, round_ceiling)
    if lo == hi:
        return Ball(lo, fzero, prec)
    return Ball.from_endpoints(lo, hi, prec)


def _tree_reduce(op: Callable[[Ball, Ball], Ball], items: Iterable[Ball], identity: Ball) -> Ball:
    """
    Pairwise reduction with a binary-counter stack: item i is combined with its
    sibling at every level, so the grouping depends only on the item count.
    """
    stack = []   # (level, value)
    for item in items:
        level, value = 0, item
        while stack and stack[-1][0] == level:
            _, left = stack.pop()
            value = op(left, value)
            level += 1
        stack.append((level, value))
    if not stack:
        return identity
    _, result = stack.pop()
    while stack:
        _, left = stack.pop()
        result = op(left, result)
    return result


def ball_product(balls: Iterable[Ball], prec: PrecisionLike) -> Ball:
    return _tree_reduce(ball_mul, balls, one_ball(prec))


def ball_sum(balls: Iterable[Ball], prec: PrecisionLike) -> Ball:
    return _tree_reduce(ball_add, balls, zero_ball(prec))


# ---------------------------------------------------------------------------
# Constants and transcendental kernels
# ---------------------------------------------------------------------------

@lru_cache(maxsize=64)
def pi_ball(p: PrecisionLike) -> Ball:
    """pi with radius 2^(2 - bits), one ulp of a value in [2, 4)."""
    bits = _bits(p)
    return Ball(mpf_pi(bits, round_nearest), from_man_exp(1, 2 - bits), bits)


@lru_cache(maxsize=64)
def _pi_fixed(wp: int) -> int:
    """floor(pi * 2^wp) up to an error below 2 units."""
    _, man, exp, _ = mpf_pi(wp + 8, round_floor)
    shift = exp + wp
    return int(man) << shift if shift >= 0 else int(man) >> -shift


def _sin_fixed(x: int, wp: int) -> Tuple[int, int]:
    """Taylor sum for sin(x / 2^wp), |x / 2^wp| < 1; returns (value, steps)."""
    x2 = (x * x) >> wp
    s = t = x
    j = 1
    while t:
        t = ((t * x2) >> wp) // ((2 * j) * (2 * j + 1))
        s = s - t if j % 2 else s + t
        j += 1
    return s, j


def _cos_fixed(x: int, wp: int) -> Tuple[int, int]:
    x2 = (x * x) >> wp
    c = t = 1 << wp
    j = 1
    while t:
        t = ((t * x2) >> wp) // ((2 * j - 1) * (2 * j))
        c = c - t if j % 2 else c + t
        j += 1
    return c, j


_EXACT_SINES = {
    Fraction(0): 0,
    Fraction(1, 6): Fraction(1, 2),
    Fraction(1, 2): 1,
}

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def _sin_pi(r: Fraction, bits: int) -> Ball:
    """sin(pi * r) for any rational r; reduction is exact."""
    r = r % 2
    sign = 1
    if r >= 1:
        r -= 1
        sign = -1
    if r > HALF:
        r = 1 - r
    # r in [0, 1/2] from here on
    if r in _EXACT_SINES:
        return Ball.exact(sign * _EXACT_SINES[r], bits)
    wp = bits + GUARD_BITS + max(8, bits.bit_length())
    pi_fix = _pi_fixed(wp)
    if r <= QUARTER:
        x = pi_fix * r.numerator // r.denominator
        value, steps = _sin_fixed(x, wp)
    else:
        t = HALF - r
        x = pi_fix * t.numerator // t.denominator
        value, steps = _cos_fixed(x, wp)
    # argument error < 2 units (|derivative| <= 1), one unit per series step,
    # plus the tail and the x^2 truncation
    err_units = 8 + 2 * steps
    return Ball(from_man_exp(sign * value, -wp), from_man_exp(err_units, -wp), bits)


def _check_unit_interval(r: Fraction, name: str) -> Fraction:
    r = Fraction(r)
    if not 0 <= r <= 1:
        raise ValueError(f"{name} expects 0 <= r <= 1, got {r}")
    return r


def sin_pi_frac(r: Fraction, p: PrecisionLike) -> Ball:
    """Enclosure of sin(pi * r), exact at r in {0, 1/6, 1/2, 5/6, 1}."""
    return _sin_pi(_check_unit_interval(r, "sin_pi_frac"), _bits(p))


def cos_pi_frac(r: Fraction, p: PrecisionLike) -> Ball:
    """Enclosure of cos(pi * r) = sin(pi * (r + 1/2)); exactly 0 at r = 1/2."""
    return _sin_pi(_check_unit_interval(r, "cos_pi_frac") + HALF, _bits(p))


@lru_cache(maxsize=None)
def _bernoulli(k: int) -> Tuple[int, int]:
    b = sympy.bernoulli(k)
    return int(b.p), int(b.q)


@lru_cache(maxsize=64)
def half_ln_two_pi(p: PrecisionLike) -> Ball:
    bits = _bits(p)
    return ball_shift(ball_log(ball_scale_by_int(pi_ball(bits), 2)), -1)


@lru_cache(maxsize=64)
def ln_two_pi(p: PrecisionLike) -> Ball:
    return ball_shift(half_ln_two_pi(p), 1)


def _stirling(z_num: int, z_den: int, wp: int) -> Ball:
    """
    ln Gamma(z), z = z_num / z_den large enough that the Stirling terms drop
    below 2^-(wp+2) before they start growing.
    """
    z = Ball.from_ratio(z_num, z_den, wp)
    ln_z = ball_log(z)
    acc = ball_mul(Ball.from_ratio(2 * z_num - z_den, 2 * z_den, wp), ln_z)
    acc = ball_add(ball_sub(acc, z), half_ln_two_pi(wp))

    terms = []
    num_pow, den_pow = z_den, z_num          # z^-(2k-1) as num_pow / den_pow
    step_num, step_den = z_den * z_den, z_num * z_num
    k = 1
    while True:
        b_num, b_den = _bernoulli(2 * k)
        tn = b_num * num_pow
        td = b_den * (2 * k) * (2 * k - 1) * den_pow
        log2_bound = abs(tn).bit_length() - td.bit_length() + 1
        if log2_bound <= -(wp + 2):
            # remainder is at most the first omitted term; take twice that
            remainder = from_man_exp(1, log2_bound + 1)
            break
        if k > 4 * wp:
            raise RuntimeError(f"Stirling series did not converge for z = {z_num}/{z_den}")
        terms.append(Ball.from_ratio(tn, td, wp))
        num_pow *= step_num
        den_pow *= step_den
        k += 1
    return ball_widen(ball_add(acc, ball_sum(terms, wp)), remainder)


def ln_gamma_frac(r: Fraction, p: PrecisionLike) -> Ball:
    """
    Enclosure of ln Gamma(r) for rational r > 0.

    ln Gamma(r) = ln Gamma(r + m) - ln(r (r+1) ... (r+m-1)), with the shift
    product taken exactly and r + m >= max(10, bits/8).
    """
    r = Fraction(r)
    if r <= 0:
        raise ValueError(f"ln_gamma_frac needs r > 0 (pole at {r})")
    bits = _bits(p)
    if r == 1 or r == 2:
        return zero_ball(bits)
    wp = bits + GUARD_BITS
    target = max(10, wp // 8 + 2)
    m = max(0, math.ceil(target - r))
    num, den = r.numerator, r.denominator
    result = _stirling(num + m * den, den, wp)
    if m:
        shift_num = math.prod(num + j * den for j in range(m))
        result = ball_sub(result, ball_log(Ball.from_ratio(shift_num, den ** m, wp)))
    return Ball(result.mid, result.rad, bits)


def round_to_integer(b: Ball) -> Optional[int]:
    """
    The unique integer z with radius < 1/4 and |mid - z| + radius < 1/2;
    None means the ball is too wide and precision must be raised.
    """
    mid, rad = b.midpoint, b.radius
    if rad >= QUARTER:
        return None
    z = round(mid)
    if abs(mid - z) + rad < HALF:
        return int(z)
    return None
