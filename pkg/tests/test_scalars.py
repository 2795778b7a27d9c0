"""Field axioms, tower arithmetic, square roots, serialization."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from d4vgit.scalars import (
    QI, DegenerateExtensionError, ExtensionLimitError, adjoin_sqrt,
    as_scalar, format_scalar, lower, parse_scalar, scalar_from_json,
    scalar_to_json,
)


small_fraction = st.fractions(min_value=-10, max_value=10, max_denominator=8)


@st.composite
def scalars(draw):
    return QI.scalar(draw(small_fraction), draw(small_fraction))


class TestFieldAxioms:
    @given(a=scalars(), b=scalars(), c=scalars())
    def test_add_associative(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(a=scalars(), b=scalars(), c=scalars())
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(a=scalars(), b=scalars())
    def test_mul_commutative(self, a, b):
        assert a * b == b * a

    @given(a=scalars())
    def test_inverse(self, a):
        if not a.is_zero():
            assert a * a.inverse() == QI.one()

    def test_thousand_random_identities(self):
        rng = random.Random(7)

        def rand():
            return QI.scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
                             Fraction(rng.randint(-9, 9), rng.randint(1, 5)))

        for _ in range(1000):
            a, b, c = rand(), rand(), rand()
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            if not a.is_zero():
                assert a * a.inverse() == QI.one()

    def test_i_squared(self):
        assert QI.i() * QI.i() == QI.scalar(-1)

    def test_zero_test_exact(self):
        x = QI.scalar(Fraction(1, 3)) + QI.scalar(Fraction(1, 6)) - QI.scalar(Fraction(1, 2))
        assert x.is_zero()


class TestAdjoinSqrt:
    def test_defining_relation(self):
        field, s = adjoin_sqrt(QI, 2)
        assert s * s == field.scalar(2)

    def test_minus_one_gives_existing_i(self):
        field, s = adjoin_sqrt(QI, -1)
        assert field is QI
        assert s == QI.i()

    def test_rational_square_gives_base(self):
        field, s = adjoin_sqrt(QI, Fraction(9, 4))
        assert field is QI
        assert s == QI.scalar(Fraction(3, 2))

    def test_zero_degenerate(self):
        with pytest.raises(DegenerateExtensionError):
            adjoin_sqrt(QI, 0)

    def test_depth_cap(self):
        field = QI
        primes = (2, 3, 5, 7)
        for p in primes:
            field, _ = adjoin_sqrt(field, field.scalar(p))
        assert field.depth == 4
        with pytest.raises(ExtensionLimitError):
            adjoin_sqrt(field, field.scalar(11))

    def test_square_detection_in_tower(self):
        field, s = adjoin_sqrt(QI, 2)
        # (1 + s)^2 = 3 + 2s must be recognized as a square
        x = (field.one() + s) ** 2
        root = field.sqrt(x)
        assert root is not None and root * root == x
        assert field.sqrt(field.scalar(2)) == s or field.sqrt(field.scalar(2)) == -s

    def test_tower_difference_of_squares(self):
        field, s = adjoin_sqrt(QI, 5)
        rng = random.Random(3)
        for _ in range(50):
            x = field.lift(QI.scalar(rng.randint(-4, 4), rng.randint(-4, 4))) + \
                s * field.lift(QI.scalar(rng.randint(-4, 4)))
            y = field.lift(QI.scalar(rng.randint(-4, 4))) + \
                s * field.lift(QI.scalar(rng.randint(-4, 4), rng.randint(-2, 2)))
            assert (x + y) * (x - y) == x * x - y * y

    def test_nested_tower_arithmetic(self):
        f1, s1 = adjoin_sqrt(QI, 2)
        f2, s2 = adjoin_sqrt(f1, f1.scalar(3))
        x = f2.lift(s1) + s2
        assert x * x == f2.scalar(5) + f2.lift(s1) * s2 * 2
        assert lower(x * x - f2.lift(s1) * s2 * 2) == QI.scalar(5)

    def test_gaussian_sqrt(self):
        # 2i = (1+i)^2
        root = QI.sqrt(QI.scalar(0, 2))
        assert root is not None and root * root == QI.scalar(0, 2)
        assert QI.sqrt(QI.scalar(3)) is None


class TestSerialization:
    @given(a=scalars())
    @settings(max_examples=60)
    def test_string_roundtrip(self, a):
        assert parse_scalar(format_scalar(a)) == a

    def test_string_format(self):
        assert format_scalar(QI.scalar(Fraction(1, 2), Fraction(-3, 4))) == "1/2-3/4*i"
        assert parse_scalar("1/2-3/4*i") == QI.scalar(Fraction(1, 2), Fraction(-3, 4))
        assert parse_scalar("i") == QI.i()
        assert parse_scalar("-2") == QI.scalar(-2)

    def test_json_roundtrip_tower(self):
        field, s = adjoin_sqrt(QI, 2)
        x = field.lift(QI.scalar(1, 1)) + s * field.scalar(3)
        data = scalar_to_json(x)
        assert scalar_from_json(data) == x

    def test_json_roundtrip_base(self):
        x = QI.scalar(Fraction(-7, 3), Fraction(2, 5))
        assert scalar_from_json(scalar_to_json(x)) == x

    def test_as_scalar(self):
        assert as_scalar(3) == QI.scalar(3)
        assert as_scalar(Fraction(1, 2)) == QI.scalar(Fraction(1, 2))
