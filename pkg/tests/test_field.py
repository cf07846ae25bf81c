"""Tests for algebra.field: F_p and F_{p^2} arithmetic."""
import random
import unittest

from algebra.errors import FieldMismatchError
from algebra.field import FieldExt, build_field, enumerate_field, fe_inv, format_elem


class TestBuildField(unittest.TestCase):

    def test_f4_rule(self):
        """a^2 = a + 1 over F4."""
        F4 = build_field(2, "quadratic")
        a = F4.alpha
        self.assertEqual(a * a, a + 1)
        self.assertEqual(F4.q, 4)

    def test_smallest_nonresidue(self):
        self.assertEqual(build_field(3).c, 2)
        self.assertEqual(build_field(5).c, 2)
        self.assertEqual(build_field(7).c, 3)
        self.assertEqual(build_field(13).c, 2)

    def test_nonresidue_has_no_root(self):
        for p in (3, 5, 7, 11, 13, 17, 19, 23):
            c = build_field(p).c
            self.assertFalse(any(z * z % p == c for z in range(p)))

    def test_rejects_non_prime(self):
        for bad in (0, 1, 4, 9, 15):
            with self.assertRaises(ValueError):
                build_field(bad)

    def test_deterministic(self):
        self.assertEqual(build_field(5, FieldExt.QUADRATIC), build_field(5, "ext"))
        self.assertEqual(build_field(5, "quadratic").c, build_field(5, "ext").c)

    def test_prime_field_has_no_alpha(self):
        F3 = build_field(3, "prime")
        with self.assertRaises(ValueError):
            F3.alpha
        with self.assertRaises(ValueError):
            F3.elem(1, 1)


class TestInverse(unittest.TestCase):

    def test_examples(self):
        F4 = build_field(2)
        F9 = build_field(3)
        self.assertEqual(fe_inv(F4.one), F4.one)
        self.assertEqual(fe_inv(F4.alpha), F4.alpha + 1)
        self.assertEqual(fe_inv(F9.alpha), F9.elem(0, 2))

    def test_zero_rejected(self):
        with self.assertRaises(ZeroDivisionError):
            fe_inv(build_field(3).zero)

    def test_every_inverse(self):
        for p in (2, 3, 5, 7):
            for ext in ("prime", "ext"):
                ctx = build_field(p, ext)
                for e in enumerate_field(ctx):
                    if e:
                        self.assertTrue((e * fe_inv(e)).is_one())


class TestEnumerate(unittest.TestCase):

    def test_orders(self):
        F2 = build_field(2, "prime")
        self.assertEqual([str(e) for e in enumerate_field(F2)], ["0", "1"])
        F4 = build_field(2)
        self.assertEqual([str(e) for e in enumerate_field(F4)], ["0", "a", "1", "1+a"])
        F9 = build_field(3)
        self.assertEqual([str(e) for e in enumerate_field(F9)[:5]], ["0", "a", "2*a", "1", "1+a"])

    def test_counts_and_distinct(self):
        for p in (2, 3, 5, 7):
            for ext, size in (("prime", p), ("ext", p * p)):
                elems = enumerate_field(build_field(p, ext))
                self.assertEqual(len(elems), size)
                self.assertEqual(len(set(elems)), size)

    def test_lexicographic_order(self):
        F4 = build_field(2)
        self.assertEqual(enumerate_field(F4), (F4.zero, F4.alpha, F4.one, F4.one + F4.alpha))
        ctx = build_field(5)
        elems = enumerate_field(ctx)
        self.assertEqual(elems[7], ctx.elem(1, 2))
        self.assertEqual(elems[24], ctx.elem(4, 4))
        self.assertEqual(enumerate_field(build_field(5, "prime"))[3], build_field(5, "prime").elem(3))


class TestFieldAxioms(unittest.TestCase):

    def test_fermat(self):
        """e^(q-1) = 1 for nonzero e."""
        for p in (2, 3, 5, 7):
            ctx = build_field(p)
            for e in enumerate_field(ctx):
                if e:
                    self.assertTrue((e ** (ctx.q - 1)).is_one())

    def test_random_triples(self):
        rng = random.Random(20240917)
        for p in (2, 3, 5, 11):
            ctx = build_field(p)
            elems = enumerate_field(ctx)
            for _ in range(300):
                x, y, z = (rng.choice(elems) for _ in range(3))
                self.assertEqual(x + y, y + x)
                self.assertEqual(x * y, y * x)
                self.assertEqual((x + y) + z, x + (y + z))
                self.assertEqual((x * y) * z, x * (y * z))
                self.assertEqual(x * (y + z), x * y + x * z)
                self.assertEqual(x - x, ctx.zero)

    def test_mixing_contexts_rejected(self):
        with self.assertRaises(FieldMismatchError):
            build_field(3).one + build_field(5).one
        with self.assertRaises(FieldMismatchError):
            build_field(3, "prime").one * build_field(3).one


class TestFormat(unittest.TestCase):

    def test_text(self):
        F9 = build_field(3)
        self.assertEqual(format_elem(F9.elem(0)), "0")
        self.assertEqual(format_elem(F9.elem(2)), "2")
        self.assertEqual(format_elem(F9.elem(0, 1)), "a")
        self.assertEqual(format_elem(F9.elem(0, 2)), "2*a")
        self.assertEqual(format_elem(F9.elem(1, 1)), "1+a")
        self.assertEqual(format_elem(F9.elem(1, 2)), "1+2*a")


if __name__ == "__main__":
    unittest.main()
