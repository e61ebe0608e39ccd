import random
from fractions import Fraction

from kodaira import GF, BivariatePolynomial
from kodaira.families import RAW11_RELATION


def random_bivar(rng, max_deg=4):
    terms = {}
    for _ in range(rng.randint(0, 8)):
        terms[(rng.randint(0, max_deg), rng.randint(0, max_deg))] = Fraction(
            rng.randint(-9, 9)
        )
    return BivariatePolynomial(terms)


def test_reduce_r_squared():
    # r^2 rewrites to r(s^3 - 3s^2 + 4s) - s
    r2 = BivariatePolynomial({(2, 0): 1})
    expected = BivariatePolynomial({(1, 3): 1, (1, 2): -3, (1, 1): 4, (0, 1): -1})
    assert r2.reduce_by_monic_in_r(RAW11_RELATION) == expected


def test_reduce_fixes_reduced_and_kills_generator():
    s = BivariatePolynomial.var_s()
    assert s.reduce_by_monic_in_r(RAW11_RELATION) == s
    assert RAW11_RELATION.reduce_by_monic_in_r(RAW11_RELATION).is_zero


def test_reduce_idempotent_and_linear():
    rng = random.Random(2)
    for _ in range(30):
        g = random_bivar(rng)
        h = random_bivar(rng)
        rg = g.reduce_by_monic_in_r(RAW11_RELATION)
        assert rg.reduce_by_monic_in_r(RAW11_RELATION) == rg
        assert rg.degree_r() <= 1
        lhs = (3 * g - 2 * h).reduce_by_monic_in_r(RAW11_RELATION)
        rhs = 3 * rg - 2 * h.reduce_by_monic_in_r(RAW11_RELATION)
        assert lhs == rhs


def test_reduce_kills_ideal_multiples():
    rng = random.Random(4)
    for _ in range(30):
        h = random_bivar(rng)
        assert (RAW11_RELATION * h).reduce_by_monic_in_r(RAW11_RELATION).is_zero


def test_evaluate_in_prime_field():
    F23 = GF(23)
    val = RAW11_RELATION.evaluate(F23.coerce(2), F23.coerce(3), field=F23)
    # 4 - 2*27 + 3*2*9 - 4*6 + 3 = -17 = 6 mod 23
    assert val == F23.coerce(6)


def test_ring_ops():
    r = BivariatePolynomial.var_r()
    s = BivariatePolynomial.var_s()
    one = BivariatePolynomial.const(1)
    assert (r + s) * (r - s) == r * r - s * s
    assert (r - one) ** 2 == r * r - 2 * r + one
    assert (r * s).degree_r() == 1 and (r * s).degree_s() == 1
