"""Tests for algebra.poly: arithmetic, gcd, roots and irreducibility."""
import random
import unittest

from algebra.errors import FieldMismatchError
from algebra.field import build_field, enumerate_field
from algebra.poly import (
    NEG_INF,
    Poly,
    poly_arith,
    poly_gcd,
    poly_is_irreducible,
    poly_powmod,
    poly_roots,
    poly_splits,
    split_off_roots,
)

F2 = build_field(2, "prime")
F4 = build_field(2)
F9 = build_field(3)
A4 = F4.alpha
A9 = F9.alpha


def P(ctx, *coeffs):
    """Polynomial from coefficients, lowest degree first."""
    return Poly(ctx, list(coeffs))


def random_poly(rng, ctx, degree):
    elems = enumerate_field(ctx)
    return Poly(ctx, [rng.choice(elems) for _ in range(degree + 1)])


class TestPolyBasics(unittest.TestCase):

    def test_zero_degree(self):
        self.assertEqual(Poly.zero(F4).degree, NEG_INF)
        self.assertEqual(P(F4, 1, 0, 0).degree, 0)

    def test_trailing_zeros_stripped(self):
        self.assertEqual(P(F9, 1, 2, 0, 0).coeffs, (F9.elem(1), F9.elem(2)))

    def test_str(self):
        self.assertEqual(str(P(F4, 1, A4 + 1, 1)), "x^2+(1+a)*x+1")
        self.assertEqual(str(Poly.zero(F4)), "0")
        self.assertEqual(str(P(F9, 0, 2)), "2*x")


class TestPolyArith(unittest.TestCase):

    def test_square_char_two(self):
        x1 = P(F4, 1, 1)
        self.assertEqual(poly_arith(x1, x1, "mul"), P(F4, 1, 0, 1))

    def test_divrem_f4(self):
        quo, rem = poly_arith(P(F4, 1, 1, 1), P(F4, A4, 1), "divrem")
        self.assertEqual(quo, P(F4, A4 + 1, 1))
        self.assertTrue(rem.is_zero())

    def test_difference_of_squares_f9(self):
        prod = poly_arith(P(F9, -1, 1), P(F9, 1, 1), "mul")
        self.assertEqual(prod, P(F9, -1, 0, 1))

    def test_add_sub(self):
        a = P(F9, 1, A9, 2)
        b = P(F9, 2, A9, 1)
        self.assertEqual(poly_arith(a, b, "add"), P(F9, 0, 2 * A9, 0))
        self.assertEqual(poly_arith(a, a, "sub"), Poly.zero(F9))

    def test_divrem_reconstruction(self):
        rng = random.Random(7)
        for ctx in (F4, F9, build_field(5)):
            for _ in range(40):
                a = random_poly(rng, ctx, rng.randint(0, 12))
                b = random_poly(rng, ctx, rng.randint(0, 6))
                if b.is_zero():
                    continue
                q, r = divmod(a, b)
                self.assertEqual(q * b + r, a)
                self.assertLess(r.degree, b.degree)

    def test_division_by_zero(self):
        with self.assertRaises(ValueError):
            divmod(P(F4, 1, 1), Poly.zero(F4))

    def test_context_mismatch(self):
        with self.assertRaises(FieldMismatchError):
            P(F4, 1, 1) + P(F9, 1, 1)

    def test_mul_matches_schoolbook(self):
        rng = random.Random(11)
        for ctx in (F2, F4, F9, build_field(5, "prime")):
            for _ in range(30):
                a = random_poly(rng, ctx, rng.randint(0, 8))
                b = random_poly(rng, ctx, rng.randint(0, 8))
                expected = [ctx.zero] * (len(a.coeffs) + len(b.coeffs))
                for i, u in enumerate(a.coeffs):
                    for j, v in enumerate(b.coeffs):
                        expected[i + j] = expected[i + j] + u * v
                self.assertEqual(a * b, Poly(ctx, expected))

    def test_evaluate(self):
        f = P(F4, 1, 1, 1)
        self.assertFalse(f(A4))
        self.assertTrue(f(F4.one).is_one())


class TestGcd(unittest.TestCase):

    def test_examples(self):
        x = Poly.x(F4)
        self.assertEqual(poly_gcd(x ** 2, x ** 3), x ** 2)
        self.assertEqual(poly_gcd(P(F4, 0, 1, 1), P(F4, 1, 0, 1)), P(F4, 1, 1))
        self.assertEqual(poly_gcd(P(F9, 2, A9, 1), Poly.one(F9)), Poly.one(F9))

    def test_monic(self):
        g = poly_gcd(P(F9, 2, 2), P(F9, 0, 2, 2))
        self.assertTrue(g.is_monic())
        self.assertEqual(g, P(F9, 1, 1))

    def test_divides_both(self):
        rng = random.Random(3)
        for _ in range(40):
            common = random_poly(rng, F9, 2)
            a = common * random_poly(rng, F9, 3)
            b = common * random_poly(rng, F9, 3)
            if a.is_zero() and b.is_zero():
                continue
            g = poly_gcd(a, b)
            self.assertTrue((a % g).is_zero())
            self.assertTrue((b % g).is_zero())

    def test_both_zero(self):
        with self.assertRaises(ValueError):
            poly_gcd(Poly.zero(F4), Poly.zero(F4))


class TestRoots(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(poly_roots(P(F4, 0, 1, 1)), {F4.zero: 1, F4.one: 1})
        f = P(F4, 1, 1) ** 2 * P(F4, A4, 1) * P(F4, A4 + 1, 1)
        self.assertEqual(poly_roots(f), {F4.one: 2, A4: 1, A4 + 1: 1})
        self.assertEqual(poly_roots(P(F9, 1, 0, 1)), {A9: 1, 2 * A9: 1})

    def test_splits(self):
        self.assertFalse(poly_splits(P(F2, 1, 1, 1)))
        self.assertTrue(poly_splits(P(F4, 1, 1, 1)))
        sigma_x8 = Poly(F4, [1] * 9)
        self.assertFalse(poly_splits(sigma_x8))
        sigma_x5 = Poly(F4, [1] * 6)
        self.assertTrue(poly_splits(sigma_x5))
        sigma_x6 = Poly(F4, [1] * 7)
        self.assertFalse(poly_splits(sigma_x6))

    def test_reconstruct_splitting(self):
        rng = random.Random(5)
        elems = enumerate_field(F9)
        for _ in range(30):
            f = Poly.constant(rng.choice(elems[1:]))
            for _ in range(rng.randint(1, 6)):
                f = f * Poly.linear(rng.choice(elems))
            roots, rest = split_off_roots(f)
            rebuilt = Poly.constant(f.leading)
            for g, m in roots.items():
                rebuilt = rebuilt * Poly.linear(g) ** m
            self.assertEqual(rebuilt, f)
            self.assertEqual(rest.degree, 0)

    def test_zero_rejected(self):
        with self.assertRaises(ValueError):
            poly_roots(Poly.zero(F9))


class TestIrreducible(unittest.TestCase):

    def test_small_cases(self):
        self.assertTrue(poly_is_irreducible(P(F2, 1, 1, 1)))
        self.assertFalse(poly_is_irreducible(P(F4, 1, 1, 1)))
        self.assertTrue(poly_is_irreducible(P(F9, A9, 1)))
        self.assertFalse(poly_is_irreducible(Poly.one(F9)))

    def test_against_root_count_for_low_degree(self):
        """Degree 2 and 3 are irreducible exactly when rootless."""
        rng = random.Random(9)
        for ctx in (F2, F4, F9):
            for _ in range(40):
                f = random_poly(rng, ctx, rng.choice((2, 3)))
                if f.degree < 2:
                    continue
                self.assertEqual(poly_is_irreducible(f), not poly_roots(f))

    def test_degree_four_product(self):
        q = P(F2, 1, 1, 1)
        self.assertFalse(poly_is_irreducible(q * q))
        self.assertTrue(poly_is_irreducible(P(F2, 1, 1, 0, 0, 1)))

    def test_powmod(self):
        f = P(F9, 1, 0, 1)
        x = Poly.x(F9)
        self.assertEqual(poly_powmod(x, 2, f), P(F9, -1))
        self.assertEqual(poly_powmod(x, 9, f), (x ** 9) % f)


if __name__ == "__main__":
    unittest.main()
