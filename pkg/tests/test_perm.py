"""Permutation arithmetic: conventions pinned by hand-evaluated examples,
then algebraic laws on seeded random elements."""

import random

import pytest

from centerbound.errors import DegreeMismatch, DegreeViolation, ParseError
from centerbound.perm import (Perm, commutator, compose, format_perm,
                              from_cycles, identity, parse_perm)


def P(text, degree):
    return parse_perm(text, degree)


def random_perm(rng, degree):
    images = list(range(1, degree + 1))
    rng.shuffle(images)
    return Perm(images)


class TestCompose:
    def test_involution_squares_to_identity(self):
        t = P("(1 2)", 2)
        assert compose(t, t) == identity(2)

    def test_apply_left_factor_first(self):
        # evaluate (1 2 3) then (1 2) pointwise:
        # 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
        got = compose(P("(1 2 3)", 3), P("(1 2)", 3))
        assert got == P("(2 3)", 3)
        assert format_perm(got) == "(2 3)"

    def test_identity_is_neutral(self):
        p = P("(1 3 2 4)", 5)
        assert compose(p, identity(5)) == p
        assert compose(identity(5), p) == p

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            compose(P("(1 2)", 2), P("(1 2)", 3))


class TestCommutator:
    def test_self_commutator_trivial(self):
        p = P("(1 2 3)(4 5)", 5)
        assert commutator(p, p) == identity(5)

    def test_transposition_pair(self):
        # [x, y] = x^-1 y^-1 x y, evaluated pointwise:
        # 1 ->(12) 2 ->(13) 2 ->(12) 1 ->(13) 3, so 1 -> 3
        assert commutator(P("(1 2)", 3), P("(1 3)", 3)) == P("(1 3 2)", 3)

    def test_identity_argument(self):
        x = P("(1 4)(2 3)", 4)
        assert commutator(x, identity(4)) == identity(4)

    def test_conjugation_identity(self):
        # [ab, x] = [a, x]^b [b, x] for random a, b, x
        rng = random.Random(20250810)
        for _ in range(200):
            a, b, x = (random_perm(rng, 7) for _ in range(3))
            lhs = commutator(a * b, x)
            rhs = commutator(a, x).conjugate(b) * commutator(b, x)
            assert lhs == rhs


class TestAlgebraicLaws:
    def test_associativity_and_inverse_antihomomorphism(self):
        rng = random.Random(7)
        for _ in range(200):
            p, q, r = (random_perm(rng, 9) for _ in range(3))
            assert (p * q) * r == p * (q * r)
            assert (p * q).inverse() == q.inverse() * p.inverse()
            assert p * p.inverse() == identity(9)

    def test_power_matches_repeated_product(self):
        rng = random.Random(8)
        for _ in range(50):
            p = random_perm(rng, 8)
            acc = identity(8)
            for k in range(10):
                assert p ** k == acc
                acc = acc * p
            assert p ** -1 == p.inverse()

    def test_order(self):
        assert identity(4).order() == 1
        assert P("(1 2 3)(4 5)", 5).order() == 6
        assert P("(1 2 3 4 5 6)", 6).order() == 6


class TestCycleNotation:
    def test_round_trip(self):
        rng = random.Random(99)
        for _ in range(100):
            p = random_perm(rng, 10)
            assert parse_perm(format_perm(p), 10) == p

    def test_identity_prints_and_parses(self):
        assert format_perm(identity(6)) == "()"
        assert parse_perm("()", 6) == identity(6)

    def test_whitespace_insensitive(self):
        assert parse_perm(" ( 1   2 3 ) (4  5)", 5) == P("(1 2 3)(4 5)", 5)
        assert parse_perm("(1,2,3)(4,5)", 5) == P("(1 2 3)(4 5)", 5)

    def test_non_disjoint_cycles_multiply_left_first(self):
        # (1 2)(2 3): 1 -> 2 -> 3 under left-factor-first
        assert parse_perm("(1 2)(2 3)", 3) == P("(1 3 2)", 3)

    def test_degree_is_external(self):
        p = parse_perm("(1 2)", 6)
        assert p.degree == 6
        with pytest.raises(DegreeViolation):
            parse_perm("(1 7)", 6)

    def test_parse_errors(self):
        for bad in ("", "(1 2", "1 2 3", "(1 2)(x)", "(1 1 2)", "(0 1)"):
            with pytest.raises(ParseError):
                parse_perm(bad, 5)

    def test_canonical_form(self):
        assert format_perm(P("(2 1)", 3)) == "(1 2)"
        assert format_perm(from_cycles(5, [(4, 5), (2, 1)])) == "(1 2)(4 5)"


class TestPermValue:
    def test_images_are_one_based(self):
        p = P("(1 2 3)", 3)
        assert p.images == (2, 3, 1)
        assert p.apply(1) == 2
        assert Perm((2, 3, 1)) == p

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Perm((1, 1, 3))

    def test_hash_and_ordering(self):
        a, b = P("(1 2)", 3), P("(1 3)", 3)
        assert len({a, b, P("(2 1)", 3)}) == 2
        assert sorted([b, a]) == sorted([a, b])
