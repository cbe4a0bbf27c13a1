import math
import unittest
from fractions import Fraction

import numpy as np
from scipy.special import gammaln

from src.hpreal import (
    Ball,
    Precision,
    ball_abs,
    ball_add,
    ball_exp,
    ball_log,
    ball_mul,
    ball_neg,
    ball_product,
    ball_shift,
    ball_sqrt,
    ball_square,
    ball_sub,
    ball_sum,
    cos_pi_frac,
    half_ln_two_pi,
    ln_gamma_frac,
    one_ball,
    pi_ball,
    round_to_integer,
    sin_pi_frac,
)

# pi to 60 digits, for containment checks independent of mpmath
PI_60 = Fraction("3.141592653589793238462643383279502884197169399375105820974944")
PI_60_ERR = Fraction(1, 10 ** 60)


def as_float(ball):
    return float(ball.midpoint)


def random_fractions(seed, count, interior=False):
    """Seeded p/q with q < 500, in [0, 1] or, with interior, in (0, 1)."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        q = int(rng.integers(2, 500))
        p = int(rng.integers(1, q)) if interior else int(rng.integers(0, q + 1))
        out.append(Fraction(p, q))
    return out


class TestBallBasics(unittest.TestCase):
    def setUp(self):
        self.bits = 128

    def test_precision_floor(self):
        with self.assertRaises(ValueError):
            Precision(8)
        self.assertEqual(Precision(64).doubled().bits, 128)

    def test_exact_construction(self):
        self.assertTrue(Ball.exact(3, self.bits).is_exact)
        self.assertTrue(Ball.exact(Fraction(3, 8), self.bits).is_exact)
        third = Ball.from_ratio(1, 3, self.bits)
        self.assertFalse(third.is_exact)
        self.assertTrue(third.contains(Fraction(1, 3)))
        self.assertLessEqual(third.radius_exponent, 2 - self.bits)

    def test_arithmetic_contains_exact_result(self):
        a = Ball.from_ratio(1, 3, self.bits)
        b = Ball.from_ratio(2, 7, self.bits)
        self.assertTrue(ball_add(a, b).contains(Fraction(1, 3) + Fraction(2, 7)))
        self.assertTrue(ball_sub(a, b).contains(Fraction(1, 3) - Fraction(2, 7)))
        self.assertTrue(ball_mul(a, b).contains(Fraction(2, 21)))
        self.assertTrue(ball_square(a).contains(Fraction(1, 9)))
        self.assertTrue(ball_neg(a).contains(Fraction(-1, 3)))
        self.assertTrue(ball_shift(a, 3).contains(Fraction(8, 3)))

    def test_abs_of_straddling_ball(self):
        straddle = Ball.from_endpoints(Ball.exact(-1, 64).mid, Ball.exact(3, 64).mid, 64)
        result = ball_abs(straddle)
        self.assertTrue(result.contains(0))
        self.assertTrue(result.contains(3))
        self.assertFalse(result.contains(-1))

    def test_products_are_grouping_independent(self):
        balls = [Ball.from_ratio(k, k + 1, self.bits) for k in range(1, 40)]
        product = ball_product(balls, self.bits)
        self.assertTrue(product.contains(Fraction(1, 40)))
        self.assertEqual(product, ball_product(list(balls), self.bits))
        self.assertTrue(ball_product([], self.bits).is_exact)
        self.assertTrue(ball_sum([], self.bits).contains(0))
        self.assertTrue(ball_sum(balls[:3], self.bits).contains(Fraction(1, 2) + Fraction(2, 3) + Fraction(3, 4)))

    def test_overlap_and_containment(self):
        a = Ball.from_ratio(1, 3, self.bits)
        self.assertTrue(a.overlaps(Ball.from_ratio(1, 3, 2 * self.bits)))
        self.assertFalse(a.overlaps(Ball.exact(1, self.bits)))
        wide = ball_add(a, Ball.from_endpoints(Ball.exact(-1, 64).mid, Ball.exact(1, 64).mid, 64))
        self.assertTrue(wide.contains_ball(a))


class TestElementary(unittest.TestCase):
    def test_exp_log_sqrt(self):
        bits = 200
        two = Ball.exact(2, bits)
        self.assertAlmostEqual(as_float(ball_log(two)), math.log(2), places=14)
        self.assertAlmostEqual(as_float(ball_exp(one_ball(bits))), math.e, places=14)
        self.assertTrue(ball_sqrt(Ball.exact(4, bits)).contains(2))
        self.assertTrue(ball_exp(Ball.exact(0, bits)).contains(1))
        self.assertTrue(ball_log(one_ball(bits)).is_exact)
        self.assertTrue(ball_log(ball_exp(Ball.from_ratio(1, 3, bits))).contains(Fraction(1, 3)))

    def test_domain_errors(self):
        with self.assertRaises(ValueError):
            ball_log(Ball.exact(0, 64))
        with self.assertRaises(ValueError):
            ball_sqrt(Ball.exact(-1, 64))

    def test_pi(self):
        ball = pi_ball(180)
        self.assertTrue(abs(ball.midpoint - PI_60) <= ball.radius + PI_60_ERR)
        self.assertLessEqual(ball.radius_exponent, 2 - 180)
        self.assertLessEqual(pi_ball(16).radius, Fraction(1, 2 ** 14))

    def test_pi_refines_inside_coarser_ball(self):
        self.assertTrue(pi_ball(64).contains_ball(pi_ball(256)))
        self.assertTrue(pi_ball(128).contains_ball(pi_ball(256)))
        self.assertFalse(pi_ball(256).contains_ball(pi_ball(64)))


class TestTrigonometry(unittest.TestCase):
    def setUp(self):
        self.bits = 128
        self.rng = np.random.default_rng(20240601)

    def test_exact_table(self):
        self.assertTrue(sin_pi_frac(Fraction(0), 64).contains(0))
        self.assertTrue(sin_pi_frac(Fraction(1, 6), 64).is_exact)
        self.assertTrue(sin_pi_frac(Fraction(1, 6), 64).contains(Fraction(1, 2)))
        self.assertTrue(sin_pi_frac(Fraction(5, 6), 64).contains(Fraction(1, 2)))
        self.assertTrue(sin_pi_frac(Fraction(1, 2), 64).contains(1))
        self.assertTrue(sin_pi_frac(Fraction(1), 64).contains(0))
        self.assertTrue(cos_pi_frac(Fraction(1, 2), 64).is_exact)
        self.assertTrue(cos_pi_frac(Fraction(1, 2), 64).contains(0))
        self.assertTrue(cos_pi_frac(Fraction(1), 64).contains(-1))

    def test_against_numpy(self):
        for _ in range(200):
            q = int(self.rng.integers(2, 500))
            p = int(self.rng.integers(0, q + 1))
            r = Fraction(p, q)
            s = sin_pi_frac(r, self.bits)
            c = cos_pi_frac(r, self.bits)
            self.assertAlmostEqual(as_float(s), float(np.sin(np.pi * p / q)), delta=1e-12)
            self.assertAlmostEqual(as_float(c), float(np.cos(np.pi * p / q)), delta=1e-12)
            self.assertLessEqual(s.radius, Fraction(1, 2 ** (self.bits - 4)))
            self.assertLessEqual(c.radius, Fraction(1, 2 ** (self.bits - 4)))

    def test_pythagorean_identity(self):
        grid = [Fraction(p, q) for q in (7, 12, 97) for p in range(q + 1)]
        for r in grid + random_fractions(7, 200):
            total = ball_add(ball_square(sin_pi_frac(r, self.bits)), ball_square(cos_pi_frac(r, self.bits)))
            self.assertTrue(total.contains(1), r)

    def test_refinement_stays_inside(self):
        for r in random_fractions(11, 60):
            for f in (sin_pi_frac, cos_pi_frac):
                coarse, fine = f(r, self.bits), f(r, 2 * self.bits)
                self.assertTrue(coarse.contains_ball(fine), (f.__name__, r))
                reference = float(np.sin(np.pi * float(r))) if f is sin_pi_frac else float(np.cos(np.pi * float(r)))
                self.assertAlmostEqual(as_float(coarse), reference, delta=1e-14)
                self.assertAlmostEqual(as_float(fine), reference, delta=1e-14)

    def test_symmetry(self):
        for r in random_fractions(13, 200):
            left, right = sin_pi_frac(r, self.bits), sin_pi_frac(1 - r, self.bits)
            self.assertTrue(left.overlaps(right), r)
            reference = float(np.sin(np.pi * float(r)))
            self.assertAlmostEqual(as_float(left), reference, delta=1e-14)
            self.assertAlmostEqual(as_float(right), reference, delta=1e-14)

    def test_sine_near_zero_keeps_relative_accuracy(self):
        s = sin_pi_frac(Fraction(1, 10 ** 6), 128)
        self.assertGreater(s.midpoint, 0)
        self.assertLess(s.radius / s.midpoint, Fraction(1, 2 ** 80))

    def test_rejects_out_of_range(self):
        with self.assertRaises(ValueError):
            sin_pi_frac(Fraction(3, 2), 64)
        with self.assertRaises(ValueError):
            cos_pi_frac(Fraction(-1, 3), 64)


class TestGamma(unittest.TestCase):
    def setUp(self):
        self.bits = 128

    def test_special_values(self):
        self.assertTrue(ln_gamma_frac(Fraction(1), 64).contains(0))
        self.assertTrue(ln_gamma_frac(Fraction(2), 64).contains(0))
        # Gamma(1/2) = sqrt(pi)
        half = ln_gamma_frac(Fraction(1, 2), 200)
        self.assertAlmostEqual(as_float(half), 0.5 * math.log(math.pi), places=14)
        self.assertTrue(half.overlaps(ball_shift(ball_log(pi_ball(200)), -1)))

    def test_against_scipy(self):
        for q in range(2, 30):
            for p in range(1, q + 1):
                value = ln_gamma_frac(Fraction(p, q), self.bits)
                self.assertAlmostEqual(as_float(value), float(gammaln(p / q)), delta=1e-12)
                self.assertLessEqual(value.radius, Fraction(1, 2 ** (self.bits - 8)))

    def test_larger_arguments(self):
        for r in (Fraction(7, 2), Fraction(25, 3), Fraction(41)):
            self.assertAlmostEqual(as_float(ln_gamma_frac(r, self.bits)), float(gammaln(float(r))), delta=1e-11)

    def test_reflection_formula(self):
        # Gamma(r) Gamma(1 - r) = pi / sin(pi r)
        for r in [Fraction(1, 3), Fraction(1, 6), Fraction(5, 12)] + random_fractions(17, 100, interior=True):
            lhs = ball_add(ln_gamma_frac(r, self.bits), ln_gamma_frac(1 - r, self.bits))
            rhs = ball_sub(ball_log(pi_ball(self.bits)), ball_log(sin_pi_frac(r, self.bits)))
            self.assertTrue(lhs.overlaps(rhs), r)

    def test_refinement_stays_inside(self):
        for r in random_fractions(19, 30, interior=True) + [Fraction(1, 2), Fraction(1)]:
            coarse, fine = ln_gamma_frac(r, self.bits), ln_gamma_frac(r, 2 * self.bits)
            self.assertTrue(coarse.contains_ball(fine), r)
            self.assertAlmostEqual(as_float(fine), float(gammaln(float(r))), delta=1e-13)

    def test_half_ln_two_pi(self):
        self.assertAlmostEqual(as_float(half_ln_two_pi(self.bits)), 0.5 * math.log(2 * math.pi), places=14)

    def test_pole(self):
        with self.assertRaises(ValueError):
            ln_gamma_frac(Fraction(0), 64)


class TestRounding(unittest.TestCase):
    def test_certificate(self):
        self.assertEqual(round_to_integer(Ball.exact(7, 64)), 7)
        self.assertEqual(round_to_integer(Ball.from_ratio(2 * 10 ** 9 + 1, 10 ** 9, 64)), 2)
        self.assertEqual(round_to_integer(Ball.exact(-3, 64)), -3)

    def test_too_wide(self):
        wide = Ball.from_endpoints(Ball.exact(Fraction(7, 2), 64).mid, Ball.exact(4, 64).mid, 64)
        self.assertIsNone(round_to_integer(wide))
        self.assertIsNone(round_to_integer(Ball.exact(Fraction(5, 2), 64)))


if __name__ == "__main__":
    unittest.main()
