#!/usr/bin/env python3
"""
Identity verification engine.

Each identity in the catalog evaluates its left-hand side as a certified ball
(a product of sine/cosine balls, or a Gamma sum in log space) and compares it
with an exact right-hand side from numtheory/cyclotomic. Precision starts from
plan_precision() and doubles until a rounding certificate exists or the plan's
max_bits is spent.

Catalog ids:
    E1      prod_{k coprime n} Gamma^2(k/n) / 2pi = 1 or 1/p
    E2      LCM(n) = prod_{r in F(n), 0<r<1} 2pi / Gamma^2(r)
    E3      LCM(n) = 1/2 (prod_{r in F(n), 0<r<=1/2} 2 sin(pi r))^2
    E4      prod_{k coprime n} 2 sin(pi k/n) = p or 1
    E4H     E4 over 1 <= k <= n/2, squared
    E5      |1 - exp(2 pi i k/n)| = 2 sin(pi k/n)
    E7      prod_{0<k<n} sin(pi k/n) = n / 2^(n-1)
    E8      n = (coprime sine product) * (non-coprime sine product)
    E9      non-coprime sine product = n/p or n
    E10     non-coprime sine product = LCMbar(n)
    E11     prod_{k not coprime n} 2pi / Gamma^2(k/n) = LCMbar(n)
    E12     prod_{k coprime n} 2|cos(pi k/n)| = p (n = 2p^a) or 1
    E12F    (prod_{r in F(n), 0<r<1/2} 2 cos(pi r))^2 = LCM(floor(n/2))
    E13     prod_{1<=k<=n/2} 2 cos(pi k/n) = 1 (n odd) or 0 (n even)
    PHI_M1  prod_{k coprime n} 2|cos(pi k/n)| = |Phi_n(-1)|
    E14     sqrt(N) prod_{0<k<=N} Gamma(k/N) = (2pi)^(phi(n)/2), N = phi(n)+1
    GCI     prod_{k coprime n} Gamma(k/n) = sqrt(N) prod_{0<k<N} Gamma(k/N)
    GCP     prod_{k coprime n} Gamma(k/n) = (2pi)^(phi(n)/2)
    GUT     LCM(n) / LCM(n-1) = p (n = p^a) or 1
"""
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from enum import Enum
from fractions import Fraction
from functools import partial
from typing import Callable, Dict, Iterable, List, Optional, Tuple, Union

from loguru import logger

try:
    from .config import DEFAULT_CONFIG
    from .cyclotomic import phi_at_1, phi_at_minus1
    from .farey import farey_half, farey_interior_count, farey_sequence
    from .hpreal import (
        Ball,
        Precision,
        ball_abs,
        ball_add,
        ball_exp,
        ball_log,
        ball_mul,
        ball_product,
        ball_scale_by_int,
        ball_shift,
        ball_sqrt,
        ball_square,
        ball_sub,
        ball_sum,
        cos_pi_frac,
        half_ln_two_pi,
        ln_gamma_frac,
        ln_two_pi,
        one_ball,
        round_to_integer,
        sin_pi_frac,
    )
    from .numtheory import (
        classify_prime_power,
        classify_twice_prime_power,
        coprime_residues,
        lcm_bar,
        lcm_upto,
        noncoprime_residues,
        totient,
    )
except ImportError:
    from config import DEFAULT_CONFIG
    from cyclotomic import phi_at_1, phi_at_minus1
    from farey import farey_half, farey_interior_count, farey_sequence
    from hpreal import (
        Ball,
        Precision,
        ball_abs,
        ball_add,
        ball_exp,
        ball_log,
        ball_mul,
        ball_product,
        ball_scale_by_int,
        ball_shift,
        ball_sqrt,
        ball_square,
        ball_sub,
        ball_sum,
        cos_pi_frac,
        half_ln_two_pi,
        ln_gamma_frac,
        ln_two_pi,
        one_ball,
        round_to_integer,
        sin_pi_frac,
    )
    from numtheory import (
        classify_prime_power,
        classify_twice_prime_power,
        coprime_residues,
        lcm_bar,
        lcm_upto,
        noncoprime_residues,
        totient,
    )


class Status(str, Enum):
    VERIFIED = "Verified"
    FAILED = "Failed"
    SKIPPED = "Skipped"


@dataclass(frozen=True)
class PrecisionPlan:
    """initial_bits=None means plan_precision(n, factor_count) per report."""
    initial_bits: Optional[int] = None
    max_bits: Optional[int] = None
    growth_factor: int = 2

    def __post_init__(self):
        floor = DEFAULT_CONFIG["INITIAL_BITS_FLOOR"]
        if self.initial_bits is not None and self.initial_bits < floor:
            raise ValueError(f"initial_bits must be >= {floor}, got {self.initial_bits}")
        if self.max_bits is not None and self.initial_bits is not None and self.max_bits < self.initial_bits:
            raise ValueError("max_bits must be >= initial_bits")

    def resolve(self, n: int, factor_count: int) -> Tuple[int, int]:
        """(initial, max) bits for one report; an explicit max_bits below the start is an error."""
        initial = self.initial_bits or plan_precision(n, factor_count).bits
        if self.max_bits is None:
            return initial, DEFAULT_CONFIG["MAX_BITS_FACTOR"] * initial
        if self.max_bits < initial:
            raise ValueError(f"max_bits {self.max_bits} is below the planned initial precision "
                             f"{initial} for n={n}")
        return initial, self.max_bits


DEFAULT_PLAN = PrecisionPlan()

Value = Union[int, Fraction, None]


@dataclass
class IdentityReport:
    equation_id: str
    n: int
    status: Status
    value: Value = None
    rhs: str = ""
    lhs: Optional[dict] = None
    bits_used: int = 0
    factor_count: int = 0
    retries: int = 0
    elapsed: float = 0.0
    detail: str = ""

    @property
    def verified(self) -> bool:
        return self.status == Status.VERIFIED

    def to_dict(self) -> dict:
        data = asdict(self)
        data["status"] = self.status.value
        if isinstance(self.value, Fraction):
            data["value"] = str(self.value)
        data["elapsed_ms"] = round(self.elapsed * 1000, 3)
        del data["elapsed"]
        return data


def plan_precision(n: int, factor_count: int) -> Precision:
    """64 + ceil(1.5 n) + ceil(log2(factor_count + 1)) bits; ln LCM(n) grows like n."""
    return Precision(DEFAULT_CONFIG["INITIAL_BITS_FLOOR"] + (3 * n + 1) // 2 + factor_count.bit_length())


# ---------------------------------------------------------------------------
# Certification driver
# ---------------------------------------------------------------------------

def _certify_integer(ball: Ball, bits: int) -> Value:
    return round_to_integer(ball)


def _certify_zero(ball: Ball, bits: int) -> Value:
    """0 when the ball is tight (radius < 2^(-bits/2)) and contains 0."""
    if ball.radius >= Fraction(1, 1 << (bits // 2)):
        return None
    return 0 if ball.contains(0) else ball.midpoint


def _certified_run(equation_id: str, n: int, expected: Value, factor_count: int,
                   compute: Callable[[int], Ball], plan: PrecisionPlan,
                   certify: Callable[[Ball, int], Value] = _certify_integer,
                   rhs: Optional[str] = None) -> IdentityReport:
    initial, max_bits = plan.resolve(n, factor_count)
    bits, retries = initial, 0
    start = time.perf_counter()
    while True:
        ball = compute(bits)
        value = certify(ball, bits)
        if value is not None:
            break
        if bits * plan.growth_factor > max_bits:
            logger.warning(f"{equation_id} n={n}: no certificate within {max_bits} bits")
            return IdentityReport(equation_id, n, Status.FAILED, None, rhs or str(expected),
                                  ball.summary(), bits, factor_count, retries,
                                  time.perf_counter() - start,
                                  f"precision exhausted at {bits} bits")
        logger.debug(f"{equation_id} n={n}: retry {bits} -> {bits * plan.growth_factor} bits")
        bits *= plan.growth_factor
        retries += 1
    elapsed = time.perf_counter() - start
    if value == expected:
        return IdentityReport(equation_id, n, Status.VERIFIED, value, rhs or str(expected),
                              ball.summary(), bits, factor_count, retries, elapsed)
    logger.warning(f"{equation_id} n={n}: certified {value}, expected {expected}")
    return IdentityReport(equation_id, n, Status.FAILED, value, rhs or str(expected),
                          ball.summary(), bits, factor_count, retries, elapsed,
                          f"certified {value} but expected {expected}")


def _skipped(equation_id: str, n: int, reason: str) -> IdentityReport:
    return IdentityReport(equation_id, n, Status.SKIPPED, detail=reason)


# Validity windows: equation id -> (smallest n, prime powers excluded)
WINDOWS: Dict[str, Tuple[int, bool]] = {
    "E4": (0, False),
    "E9": (1, False), "E10": (1, False), "E11": (1, False),
    "E1": (2, False), "E2": (2, False), "E3": (2, False), "E5": (2, False),
    "E7": (2, False), "E8": (2, False), "E12F": (2, False), "E13": (2, False),
    "E14": (2, False),
    "E4H": (3, False), "E12": (3, False), "PHI_M1": (3, False), "GUT": (3, False),
    "GCI": (2, True), "GCP": (2, True),
}


def in_window(equation_id: str, n: int) -> bool:
    low, no_prime_powers = WINDOWS[equation_id]
    return n >= low and not (no_prime_powers and classify_prime_power(n).is_prime_power)


def _outside_window(equation_id: str, n: int) -> Optional[IdentityReport]:
    if in_window(equation_id, n):
        return None
    low, no_prime_powers = WINDOWS[equation_id]
    reason = f"requires n >= {low}" + (" and n != p^a" if no_prime_powers else "")
    return _skipped(equation_id, n, reason)


# ---------------------------------------------------------------------------
# Factor families
# ---------------------------------------------------------------------------

def _two_sin(r: Fraction, bits: int) -> Ball:
    return ball_shift(sin_pi_frac(r, bits), 1)


def _two_abs_cos(r: Fraction, bits: int) -> Ball:
    return ball_shift(ball_abs(cos_pi_frac(r, bits)), 1)


def _sine_product(n: int, ks: Iterable[int], bits: int) -> Ball:
    return ball_product((_two_sin(Fraction(k, n), bits) for k in ks), bits)


def _coprime_sines(n: int, bits: int) -> Ball:
    if n < 2:
        return one_ball(bits)
    return _sine_product(n, coprime_residues(n), bits)


def _noncoprime_sines(n: int, bits: int) -> Ball:
    return _sine_product(n, noncoprime_residues(n), bits)


def _coprime_abs_cosines(n: int, bits: int) -> Ball:
    return ball_product((_two_abs_cos(Fraction(k, n), bits) for k in coprime_residues(n)), bits)


def _gamma_lcm_terms(rs: Iterable[Fraction], bits: int) -> Ball:
    """exp(sum of ln 2pi - 2 ln Gamma(r)), i.e. prod 2pi / Gamma^2(r)."""
    two_pi = ln_two_pi(bits)
    logs = (ball_sub(two_pi, ball_shift(ln_gamma_frac(r, bits), 1)) for r in rs)
    return ball_exp(ball_sum(logs, bits))


def _ln_gamma_sum(rs: Iterable[Fraction], bits: int) -> Ball:
    return ball_sum((ln_gamma_frac(r, bits) for r in rs), bits)


def _half_ln(m: int, bits: int) -> Ball:
    return ball_shift(ball_log(Ball.exact(m, bits)), -1)


def _prime_power_value(n: int) -> int:
    cls = classify_prime_power(n)
    return cls.prime if cls.is_prime_power else 1


# ---------------------------------------------------------------------------
# Identities
# ---------------------------------------------------------------------------

def martin_gamma_ratio(n: int, plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """E1: prod_{k coprime n} Gamma^2(k/n) / 2pi is 1, or 1/p when n = p^a."""
    skipped = _outside_window("E1", n)
    if skipped:
        return skipped
    cls = classify_prime_power(n)
    scale = cls.prime if cls.is_prime_power else 1

    def compute(bits: int) -> Ball:
        two_pi = ln_two_pi(bits)
        logs = (ball_sub(ball_shift(ln_gamma_frac(Fraction(k, n), bits), 1), two_pi)
                for k in coprime_residues(n))
        # compare scale * product against 1 so the rounding certificate applies
        return ball_scale_by_int(ball_exp(ball_sum(logs, bits)), scale)

    rhs = f"1/{scale}" if scale > 1 else "1"
    return _certified_run("E1", n, 1, totient(n), compute, plan, rhs=rhs)


def lcm_via_farey_gamma(n: int, plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """E2: LCM(n) = prod_{r in F(n), 0<r<1} 2pi / Gamma^2(r), summed in log space."""
    skipped = _outside_window("E2", n)
    if skipped:
        return skipped

    def compute(bits: int) -> Ball:
        return _gamma_lcm_terms((r for r in farey_sequence(n) if 0 < r < 1), bits)

    return _certified_run("E2", n, lcm_upto(n), farey_interior_count(n), compute, plan)


def lcm_via_farey_sine(n: int, plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """E3: LCM(n) = 1/2 (prod_{r in F(n), 0<r<=1/2} 2 sin(pi r))^2."""
    skipped = _outside_window("E3", n)
    if skipped:
        return skipped

    def compute(bits: int) -> Ball:
        product = ball_product((_two_sin(r, bits) for r in farey_half(n, include_half=True)), bits)
        return ball_shift(ball_square(product), -1)

    return _certified_run("E3", n, lcm_upto(n), farey_interior_count(n), compute, plan)


def product_sine_coprime(n: int, plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """E4: prod_{0<k<n, k coprime n} 2 sin(pi k/n) = p if n = p^a, else 1 (n >= 0)."""
    skipped = _outside_window("E4", n)
    if skipped:
        return skipped
    factor_count = totient(n) if n >= 2 else 0
    return _certified_run("E4", n, phi_at_1(n) if n >= 2 else 1, factor_count,
                          partial(_coprime_sines, n), plan)


def product_sine_coprime_half(n: int, plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """E4H: for n > 2, E4 over 1 <= k <= n/2 only, squared."""
    skipped = _outside_window("E4H", n)
    if skipped:
        return skipped

    def compute(bits: int) -> Ball:
        ks = (k for k in coprime_residues(n) if 2 * k <= n)
        return ball_square(_sine_product(n, ks, bits))

    return _certified_run("E4H", n, _prime_power_value(n), totient(n) // 2, compute, plan)


def chord_identity_check(n: int, plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """
    E5: for 0 < k <= n/2 the chord |1 - exp(2 pi i k/n)|, built from the real
    and imaginary parts, agrees with 2 sin(pi k/n). The certified value is the
    number of chords checked.
    """
    skipped = _outside_window("E5", n)
    if skipped:
        return skipped
    chords = n // 2

    def compute(bits: int) -> Ball:
        tight = Fraction(1, 1 << (bits // 2))
        agreed, last = 0, one_ball(bits)
        for k in range(1, chords + 1):
            theta = Fraction(2 * k, n)
            re = ball_sub(one_ball(bits), cos_pi_frac(theta, bits))
            im = sin_pi_frac(theta, bits)
            chord = ball_sqrt(ball_add(ball_square(re), ball_square(im)))
            last = _two_sin(Fraction(k, n), bits)
            if chord.overlaps(last):
                agreed += 1
            elif chord.radius < tight and last.radius < tight:
                # disjoint tight balls: a genuine disagreement
                return Ball.exact(-k, bits)
        return Ball.exact(agreed, bits) if agreed == chords else Ball(last.mid, last.rad, bits)

    return _certified_run("E5", n, chords, chords, compute, plan,
                          certify=lambda ball, bits: round_to_integer(ball) if ball.is_exact else None,
                          rhs=f"{chords} chords agree")


def product_sin_all_check(n: int, plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """E7: 2^(n-1) prod_{0<k<n} sin(pi k/n) = n."""
    skipped = _outside_window("E7", n)
    if skipped:
        return skipped

    def compute(bits: int) -> Ball:
        product = ball_product((sin_pi_frac(Fraction(k, n), bits) for k in range(1, n)), bits)
        return ball_shift(product, n - 1)

    return _certified_run("E7", n, n, n - 1, compute, plan)


def partition_identity_check(n: int, plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """E8: coprime and non-coprime sine products multiply to n."""
    skipped = _outside_window("E8", n)
    if skipped:
        return skipped

    def compute(bits: int) -> Ball:
        return ball_mul(_coprime_sines(n, bits), _noncoprime_sines(n, bits))

    return _certified_run("E8", n, n, n - 1, compute, plan)


def product_sine_noncoprime(n: int, plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """E9: prod_{0<k<n, k not coprime n} 2 sin(pi k/n) = n/p if n = p^a, else n."""
    skipped = _outside_window("E9", n)
    if skipped:
        return skipped
    expected = n // _prime_power_value(n)
    return _certified_run("E9", n, expected, n - 1 - (totient(n) if n > 1 else 0),
                          partial(_noncoprime_sines, n), plan)


def lcm_bar_via_sine(n: int, plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """E10: LCMbar(n) as the non-coprime sine product."""
    skipped = _outside_window("E10", n)
    if skipped:
        return skipped
    return _certified_run("E10", n, lcm_bar(n), n - 1 - (totient(n) if n > 1 else 0),
                          partial(_noncoprime_sines, n), plan)


def lcm_bar_via_gamma(n: int, plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """E11: LCMbar(n) = prod_{0<k<n, k not coprime n} 2pi / Gamma^2(k/n)."""
    skipped = _outside_window("E11", n)
    if skipped:
        return skipped

    def compute(bits: int) -> Ball:
        return _gamma_lcm_terms((Fraction(k, n) for k in noncoprime_residues(n)), bits)

    return _certified_run("E11", n, lcm_bar(n), n - 1 - (totient(n) if n > 1 else 0), compute, plan)


def product_cos_coprime(n: int, plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """E12: prod_{k coprime n} 2|cos(pi k/n)| = p if n = 2p^a (p = 2 included), else 1."""
    skipped = _outside_window("E12", n)
    if skipped:
        return skipped
    twice = classify_twice_prime_power(n)
    expected = twice.prime if twice else 1
    return _certified_run("E12", n, expected, totient(n), partial(_coprime_abs_cosines, n), plan)


def lcm_half_via_farey_cos(n: int, plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """E12F: (prod_{r in F(n), 0<r<1/2} 2 cos(pi r))^2 = LCM(floor(n/2))."""
    skipped = _outside_window("E12F", n)
    if skipped:
        return skipped

    def compute(bits: int) -> Ball:
        rs = farey_half(n, include_half=False)
        return ball_square(ball_product((ball_shift(cos_pi_frac(r, bits), 1) for r in rs), bits))

    return _certified_run("E12F", n, lcm_upto(n // 2), farey_interior_count(n) // 2, compute, plan)


def cos_half_product(n: int, plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """
    E13: prod_{1<=k<=n/2} 2 cos(pi k/n) is 1 for odd n and 0 for even n.

    The even-n zero is structural (the factor k = n/2). What gets certified is
    that the other factors, 2|cos(pi k/n)| over 0 < k < n with k != n/2,
    multiply to n/2.
    """
    skipped = _outside_window("E13", n)
    if skipped:
        return skipped
    half = n // 2

    if n % 2:
        def compute(bits: int) -> Ball:
            return ball_product((ball_shift(cos_pi_frac(Fraction(k, n), bits), 1)
                                 for k in range(1, half + 1)), bits)

        return _certified_run("E13", n, 1, half, compute, plan)

    def compute_others(bits: int) -> Ball:
        return ball_product((_two_abs_cos(Fraction(k, n), bits) for k in range(1, n) if k != half), bits)

    report = _certified_run("E13", n, half, n - 2, compute_others, plan,
                            rhs=f"0 (zero factor at k={half}; other factors = {half})")
    if report.verified:
        report.value = 0
    return report


def phi_minus1_product_check(n: int, plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """PHI_M1: prod_{k coprime n} 2|cos(pi k/n)| = |Phi_n(-1)| from the cyclotomic closed form."""
    skipped = _outside_window("PHI_M1", n)
    if skipped:
        return skipped
    return _certified_run("PHI_M1", n, abs(phi_at_minus1(n)), totient(n),
                          partial(_coprime_abs_cosines, n), plan)


def _plan_from(p: Optional[Precision], plan: PrecisionPlan) -> PrecisionPlan:
    if p is None:
        return plan
    return PrecisionPlan(max(p.bits, DEFAULT_CONFIG["INITIAL_BITS_FLOOR"]), plan.max_bits, plan.growth_factor)


def multiplication_theorem_check(n: int, p: Optional[Precision] = None,
                                 plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """E14: sqrt(N) prod_{0<k<=N} Gamma(k/N) = (2pi)^(phi(n)/2), N = phi(n) + 1."""
    skipped = _outside_window("E14", n)
    if skipped:
        return skipped
    phi = totient(n)
    big_n = phi + 1

    def compute(bits: int) -> Ball:
        lhs = ball_add(_half_ln(big_n, bits),
                       _ln_gamma_sum((Fraction(k, big_n) for k in range(1, big_n + 1)), bits))
        rhs = ball_scale_by_int(half_ln_two_pi(bits), phi)
        return ball_sub(lhs, rhs)

    return _certified_run("E14", n, 0, big_n, compute, _plan_from(p, plan),
                          certify=_certify_zero, rhs=f"(2pi)^({phi}/2)")


def gamma_coprime_identity_check(n: int, p: Optional[Precision] = None,
                                 plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """GCI: prod_{k coprime n} Gamma(k/n) = sqrt(N) prod_{0<k<N} Gamma(k/N) for n != p^a."""
    skipped = _outside_window("GCI", n)
    if skipped:
        return skipped
    phi = totient(n)
    big_n = phi + 1

    def compute(bits: int) -> Ball:
        lhs = _ln_gamma_sum((Fraction(k, n) for k in coprime_residues(n)), bits)
        rhs = ball_add(_half_ln(big_n, bits),
                       _ln_gamma_sum((Fraction(k, big_n) for k in range(1, big_n)), bits))
        return ball_sub(lhs, rhs)

    return _certified_run("GCI", n, 0, phi + big_n - 1, compute, _plan_from(p, plan),
                          certify=_certify_zero, rhs=f"sqrt({big_n}) prod Gamma(k/{big_n})")


def gamma_coprime_power_check(n: int, p: Optional[Precision] = None,
                              plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """GCP: prod_{k coprime n} Gamma(k/n) = (2pi)^(phi(n)/2) for n != p^a."""
    skipped = _outside_window("GCP", n)
    if skipped:
        return skipped
    phi = totient(n)

    def compute(bits: int) -> Ball:
        lhs = _ln_gamma_sum((Fraction(k, n) for k in coprime_residues(n)), bits)
        return ball_sub(lhs, ball_scale_by_int(half_ln_two_pi(bits), phi))

    return _certified_run("GCP", n, 0, phi, compute, _plan_from(p, plan),
                          certify=_certify_zero, rhs=f"(2pi)^({phi}/2)")


def gauss_multiplication_check(m: int, z: Fraction, p: Optional[Precision] = None,
                               plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """
    prod_{0<=k<m} Gamma(z + k/m) = (2pi)^((m-1)/2) m^(1/2 - mz) Gamma(mz), for
    rational z > 0. Reported under id E14G with n = m.
    """
    z = Fraction(z)
    if m < 1 or z <= 0:
        return _skipped("E14G", m, "requires m >= 1 and z > 0")

    def compute(bits: int) -> Ball:
        lhs = _ln_gamma_sum((z + Fraction(k, m) for k in range(m)), bits)
        ln_m = ball_log(Ball.exact(m, bits))
        rhs = ball_add(ball_scale_by_int(half_ln_two_pi(bits), m - 1),
                       ball_add(ball_mul(Ball.exact(Fraction(1, 2) - m * z, bits), ln_m),
                                ln_gamma_frac(m * z, bits)))
        return ball_sub(lhs, rhs)

    return _certified_run("E14G", m, 0, m + 1, compute, _plan_from(p, plan),
                          certify=_certify_zero, rhs=f"Gauss multiplication, z={z}")


def gut_ratio_check(n: int, plan: PrecisionPlan = DEFAULT_PLAN) -> IdentityReport:
    """GUT: LCM(n) / LCM(n-1) is p when n = p^a and 1 otherwise (exact)."""
    skipped = _outside_window("GUT", n)
    if skipped:
        return skipped
    start = time.perf_counter()
    ratio, remainder = divmod(lcm_upto(n), lcm_upto(n - 1))
    expected = _prime_power_value(n)
    ok = remainder == 0 and ratio == expected
    return IdentityReport("GUT", n, Status.VERIFIED if ok else Status.FAILED, ratio, str(expected),
                          elapsed=time.perf_counter() - start,
                          detail="" if ok else f"ratio {ratio} but expected {expected}")


# ---------------------------------------------------------------------------
# Catalog and batch runs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Identity:
    equation_id: str
    check: Callable[..., IdentityReport]
    description: str


CATALOG: Dict[str, Identity] = {i.equation_id: i for i in [
    Identity("E1", martin_gamma_ratio, "Gamma^2 product over coprime residues = 1 or 1/p"),
    Identity("E2", lcm_via_farey_gamma, "LCM(n) as Farey Gamma product"),
    Identity("E3", lcm_via_farey_sine, "LCM(n) as squared Farey sine product"),
    Identity("E4", product_sine_coprime, "coprime sine product = 1 or p"),
    Identity("E4H", product_sine_coprime_half, "half-range coprime sine product, squared"),
    Identity("E5", chord_identity_check, "chord length equals 2 sin"),
    Identity("E7", product_sin_all_check, "full sine product = n / 2^(n-1)"),
    Identity("E8", partition_identity_check, "coprime x non-coprime sine products = n"),
    Identity("E9", product_sine_noncoprime, "non-coprime sine product = n/p or n"),
    Identity("E10", lcm_bar_via_sine, "LCMbar(n) as non-coprime sine product"),
    Identity("E11", lcm_bar_via_gamma, "LCMbar(n) as non-coprime Gamma product"),
    Identity("E12", product_cos_coprime, "coprime cosine product = p (n = 2p^a) or 1"),
    Identity("E12F", lcm_half_via_farey_cos, "LCM(n/2) as squared Farey cosine product"),
    Identity("E13", cos_half_product, "half cosine product = 1 (odd) or 0 (even)"),
    Identity("PHI_M1", phi_minus1_product_check, "coprime cosine product = |Phi_n(-1)|"),
    Identity("E14", multiplication_theorem_check, "Gauss multiplication at m = phi(n)+1"),
    Identity("GCI", gamma_coprime_identity_check, "coprime Gamma product = sqrt(N) prod Gamma(k/N)"),
    Identity("GCP", gamma_coprime_power_check, "coprime Gamma product = (2pi)^(phi/2)"),
    Identity("GUT", gut_ratio_check, "LCM(n)/LCM(n-1) = p or 1"),
]}


def lookup(equation_id: str) -> Identity:
    key = equation_id.upper()
    if key not in CATALOG:
        raise KeyError(f"Unknown equation id {equation_id!r}; choose from {', '.join(CATALOG)}")
    return CATALOG[key]


def _evaluate(equation_id: str, plan: PrecisionPlan, n: int) -> IdentityReport:
    return CATALOG[equation_id].check(n, plan=plan)


def verify_range(equation_id: str, n_lo: int, n_hi: int, plan: PrecisionPlan = DEFAULT_PLAN,
                 workers: int = 1) -> List[IdentityReport]:
    """One report per n in [n_lo, n_hi], in order of n whatever the worker count."""
    identity = lookup(equation_id)
    if n_lo > n_hi:
        return []
    ns = range(n_lo, n_hi + 1)
    job = partial(_evaluate, identity.equation_id, plan)
    logger.info(f"verifying {identity.equation_id} for n in [{n_lo}, {n_hi}] with {workers} worker(s)")
    if workers <= 1:
        reports = [job(n) for n in ns]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(job, ns, chunksize=max(1, len(ns) // (4 * workers))))
    failed = sum(1 for r in reports if r.status == Status.FAILED)
    logger.info(f"{identity.equation_id}: {len(reports)} reports, {failed} failed")
    return reports
