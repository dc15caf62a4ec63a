import random

import pytest

from forge.exact import (MINUS_ONE, OMEGA, OMEGA2, ONE, ZERO, BothZero,
                         DivisionByZero, Polynomial, Scalar, ZeroPolynomial,
                         format_scalar, is_squarefree, parse_scalar, poly_gcd,
                         poly_lcm, sc)

X = Polynomial.x
C = Polynomial.constant


def test_omega_relations():
    assert OMEGA * OMEGA == Scalar(-1, -1)
    assert OMEGA * OMEGA * OMEGA == ONE
    assert ONE + OMEGA + OMEGA * OMEGA == ZERO
    # (1 + w) + (-w) == 1
    assert (ONE + OMEGA) + (-OMEGA) == ONE


def test_scalar_reduction_and_equality():
    assert Scalar(2, 4, 6) == Scalar(1, 2, 3)
    assert Scalar(1, 0, -2) == Scalar(-1, 0, 2)
    assert Scalar(3, 0, 3) == ONE
    assert hash(Scalar(2, 4, 6)) == hash(Scalar(1, 2, 3))


def test_division():
    a = Scalar(3, 2, 7)
    assert a * a.inv() == ONE
    assert (a / a) == ONE
    with pytest.raises(DivisionByZero):
        ZERO.inv()
    assert OMEGA.inv() == OMEGA2


def test_field_axioms_sampled():
    rng = random.Random(11)
    xs = [Scalar(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(1, 9))
          for _ in range(12)]
    for x in xs:
        for y in xs:
            assert x + y == y + x
            assert x * y == y * x
            for z in xs[:4]:
                assert (x + y) + z == x + (y + z)
                assert (x * y) * z == x * (y * z)
                assert x * (y + z) == x * y + x * z
            if not x.is_zero():
                assert x * x.inv() == ONE


def test_scalar_text_round_trip():
    rng = random.Random(5)
    cases = [ZERO, ONE, MINUS_ONE, OMEGA, -OMEGA, OMEGA2, Scalar(1, -1, 2),
             Scalar(-3, 5, 7), Scalar(0, -2, 3)]
    cases += [Scalar(rng.randint(-20, 20), rng.randint(-20, 20),
                     rng.randint(1, 20)) for _ in range(40)]
    for x in cases:
        assert parse_scalar(format_scalar(x)) == x
    assert format_scalar(Scalar(1, 0, 2)) == "1/2"
    assert format_scalar(OMEGA) == "1*w"
    assert format_scalar(Scalar(1, -1, 2)) == "1/2-1/2*w"


def test_poly_gcd_examples():
    assert poly_gcd(X(2) - C(1), X() - C(1)) == X() - C(1)
    assert poly_gcd(X(3) - C(1), X(2).scale(3)) == C(1)
    p = (X() - C(1)) * (X() - C(1)) * (X() + C(2))
    q = (X() - C(1)) * (X() + C(3))
    assert poly_gcd(p, q) == X() - C(1)
    with pytest.raises(BothZero):
        poly_gcd(Polynomial([]), Polynomial([]))


def test_poly_division_invariant():
    rng = random.Random(3)
    for _ in range(25):
        p = Polynomial([sc(rng.randint(-4, 4)) for _ in range(rng.randint(0, 6))])
        q = Polynomial([sc(rng.randint(-4, 4)) for _ in range(rng.randint(1, 5))])
        if q.is_zero():
            continue
        quot, rem = p.divmod(q)
        assert quot * q + rem == p
        assert rem.degree() < q.degree()


def test_squarefree():
    assert is_squarefree(X(3) - C(5))
    assert not is_squarefree((X() - C(1)) * (X() - C(1)))
    assert is_squarefree(X(6) - C(1))  # (X^3+1)(X^3-1)
    with pytest.raises(ZeroPolynomial):
        is_squarefree(Polynomial([]))


def test_squarefree_of_square_always_fails():
    rng = random.Random(9)
    for _ in range(10):
        p = Polynomial([sc(rng.randint(-3, 3)) for _ in range(3)] + [ONE])
        assert not is_squarefree(p * p)


def test_lcm():
    a = (X() - C(1)) * (X() + C(1))
    b = (X() - C(1)) * X()
    assert poly_lcm(a, b) == (X() - C(1)) * (X() + C(1)) * X()


def test_poly_str():
    assert str(X(3) - C(1)) == "X^3-1"
    assert str(X(6) - C(1)) == "X^6-1"
    assert str(Polynomial([])) == "0"
