import unittest
from fractions import Fraction

from src.farey import (
    FareyCursor,
    farey_count,
    farey_denominator_slice,
    farey_half,
    farey_interior_count,
    farey_sequence,
)


def brute_force(order):
    return sorted({Fraction(a, b) for b in range(1, order + 1) for a in range(0, b + 1)})


class TestFareySequence(unittest.TestCase):
    def test_order_five(self):
        f5 = [str(r) for r in farey_sequence(5)]
        self.assertEqual(f5, ["0", "1/5", "1/4", "1/3", "2/5", "1/2", "3/5", "2/3", "3/4", "4/5", "1"])

    def test_order_one(self):
        self.assertEqual(list(farey_sequence(1)), [Fraction(0), Fraction(1)])

    def test_matches_brute_force(self):
        for order in range(1, 30):
            self.assertEqual(list(farey_sequence(order)), brute_force(order), order)

    def test_neighbours_are_unimodular(self):
        seq = list(farey_sequence(40))
        for left, right in zip(seq, seq[1:]):
            self.assertEqual(right.numerator * left.denominator - left.numerator * right.denominator, 1)

    def test_rejects_order_zero(self):
        with self.assertRaises(ValueError):
            farey_sequence(0)
        with self.assertRaises(ValueError):
            farey_count(0)

    def test_cursor_advance(self):
        cursor = FareyCursor.start(5)
        self.assertEqual((cursor.previous, cursor.current), (Fraction(0), Fraction(1, 5)))
        cursor.advance()
        self.assertEqual(cursor.current, Fraction(1, 4))


class TestFareyCounts(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(farey_count(1), 2)
        self.assertEqual(farey_count(5), 11)
        self.assertEqual(farey_count(300), 27399)
        self.assertEqual(farey_interior_count(300), 27397)
        for order in range(1, 60):
            self.assertEqual(farey_count(order), len(list(farey_sequence(order))))

    def test_half(self):
        self.assertEqual([str(r) for r in farey_half(5)], ["1/5", "1/4", "1/3", "2/5", "1/2"])
        self.assertEqual([str(r) for r in farey_half(5, include_half=False)], ["1/5", "1/4", "1/3", "2/5"])
        self.assertEqual(list(farey_half(1)), [])

    def test_half_is_symmetric_slice(self):
        for order in range(2, 40):
            interior = [r for r in farey_sequence(order) if 0 < r < 1]
            half = list(farey_half(order, include_half=False))
            self.assertEqual(len(interior), 2 * len(half) + 1)
            self.assertEqual(sorted(1 - r for r in half), [r for r in interior if r > Fraction(1, 2)])

    def test_denominator_slices_partition_interior(self):
        order = 12
        interior = [r for r in farey_sequence(order) if 0 < r < 1]
        sliced = sorted(r for m in range(2, order + 1) for r in farey_denominator_slice(order, m))
        self.assertEqual(sliced, interior)
        self.assertEqual(list(farey_denominator_slice(order, order + 1)), [])


if __name__ == "__main__":
    unittest.main()
