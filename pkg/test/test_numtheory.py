import unittest

import sympy

from src.numtheory import (
    PrimePowerKind,
    classify_prime_power,
    classify_twice_prime_power,
    coprime_residues,
    factorize,
    is_prime,
    lcm_bar,
    lcm_upto,
    multiply_out,
    noncoprime_residues,
    proper_divisors,
    totient,
)


class TestLcm(unittest.TestCase):
    def test_small_values(self):
        self.assertEqual(lcm_upto(0), 1)
        self.assertEqual(lcm_upto(1), 1)
        self.assertEqual(lcm_upto(10), 2520)
        self.assertEqual(lcm_upto(20), 232792560)

    def test_lcm_bar(self):
        self.assertEqual(lcm_bar(1), 1)
        self.assertEqual(lcm_bar(7), 1)
        self.assertEqual(lcm_bar(12), 12)
        self.assertEqual(lcm_bar(8), 4)
        self.assertEqual(lcm_bar(9), 3)

    def test_lcm_ratio_jumps_only_at_prime_powers(self):
        for n in range(2, 300):
            ratio = lcm_upto(n) // lcm_upto(n - 1)
            cls = classify_prime_power(n)
            self.assertEqual(ratio, cls.prime if cls.is_prime_power else 1, n)

    def test_lcm_bar_is_n_over_p_or_n(self):
        for n in range(2, 300):
            cls = classify_prime_power(n)
            self.assertEqual(lcm_bar(n), n // cls.prime if cls.is_prime_power else n, n)


class TestFactorization(unittest.TestCase):
    def test_factorize_against_sympy(self):
        for n in list(range(2, 500)) + [2 ** 31 - 1, 600851475143, 1000003 * 1000033]:
            factors = factorize(n)
            self.assertEqual(dict(factors), sympy.factorint(n), n)
            self.assertEqual(multiply_out(factors), n)
            self.assertEqual([p for p, _ in factors], sorted(p for p, _ in factors))

    def test_factorize_rejects_small_input(self):
        with self.assertRaises(ValueError):
            factorize(1)
        with self.assertRaises(ValueError):
            factorize(0)

    def test_is_prime(self):
        primes = [n for n in range(200) if is_prime(n)]
        self.assertEqual(primes, list(sympy.primerange(0, 200)))
        self.assertTrue(is_prime(1000003))
        self.assertFalse(is_prime(1000003 * 3))

    def test_totient(self):
        for n in range(1, 400):
            self.assertEqual(totient(n), int(sympy.totient(n)), n)
        with self.assertRaises(ValueError):
            totient(0)


class TestClassification(unittest.TestCase):
    def test_prime_powers(self):
        self.assertEqual(classify_prime_power(8).kind, PrimePowerKind.PRIME_POWER)
        self.assertEqual((classify_prime_power(8).prime, classify_prime_power(8).exponent), (2, 3))
        self.assertEqual(classify_prime_power(49).prime, 7)
        self.assertFalse(classify_prime_power(12).is_prime_power)
        self.assertFalse(classify_prime_power(1).is_prime_power)
        self.assertFalse(classify_prime_power(0).is_prime_power)
        self.assertEqual(str(classify_prime_power(9)), "PrimePower(3,2)")

    def test_twice_prime_power(self):
        def pair(n):
            c = classify_twice_prime_power(n)
            return (c.prime, c.exponent)

        self.assertEqual(pair(18), (3, 2))
        self.assertEqual(pair(10), (5, 1))
        # powers of two are read as 2 * 2^a
        self.assertEqual(pair(4), (2, 2))
        self.assertEqual(pair(8), (2, 3))
        twice = classify_twice_prime_power(18)
        self.assertEqual(twice.kind, PrimePowerKind.TWICE_PRIME_POWER)
        self.assertFalse(twice.is_prime_power)
        self.assertEqual(str(twice), "TwicePrimePower(3,2)")
        self.assertIsNone(classify_twice_prime_power(12))
        self.assertIsNone(classify_twice_prime_power(9))
        with self.assertRaises(ValueError):
            classify_twice_prime_power(2)


class TestResidues(unittest.TestCase):
    def test_divisors(self):
        self.assertEqual(proper_divisors(1), [])
        self.assertEqual(proper_divisors(12), [1, 2, 3, 4, 6])
        self.assertEqual(proper_divisors(16), [1, 2, 4, 8])
        self.assertEqual(proper_divisors(13), [1])

    def test_residue_partition(self):
        for n in range(1, 60):
            co = list(coprime_residues(n))
            non = list(noncoprime_residues(n))
            self.assertEqual(sorted(co + non), list(range(1, n)))
            self.assertEqual(len(co), totient(n) if n > 1 else 0)
        with self.assertRaises(ValueError):
            list(coprime_residues(0))


if __name__ == "__main__":
    unittest.main()
