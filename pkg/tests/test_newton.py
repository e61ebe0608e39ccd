import random
from fractions import Fraction

import pytest

from kodaira import Polynomial, QQ, newton_polygon
from kodaira.places import Place, valuation


def test_polygon_two_slopes():
    # coefficient valuations of the degree-2 parameter relation at v(s) = -2
    poly = newton_polygon([(0, -2), (1, -6), (2, 0)])
    assert poly.segments == ((Fraction(-4), 1), (Fraction(6), 1))
    assert sorted(poly.root_valuations()) == [-6, 4]


def test_polygon_flat():
    poly = newton_polygon([(0, 0), (2, 0)])
    assert poly.segments == ((Fraction(0), 2),)
    assert poly.root_valuations() == (0, 0)


def test_polygon_no_negative_root_valuations_when_constant_integral():
    # hull of (0, v), (1, >= min), (2, 0) with v >= 0 never has a positive slope
    for v in range(0, 6):
        poly = newton_polygon([(0, v), (1, v), (2, 0)])
        assert all(rv >= 0 for rv in poly.root_valuations())


def test_polygon_requires_two_points():
    with pytest.raises(ValueError):
        newton_polygon([(0, 1)])


def test_polygon_matches_constructed_rational_roots():
    # build polynomials from roots with prescribed 5-adic valuations and
    # compare the negated slopes against the known root valuations
    rng = random.Random(21)
    place = Place.rational_prime(5)
    for _ in range(40):
        exps = [rng.randint(-3, 3) for _ in range(rng.randint(2, 3))]
        units = [rng.choice([1, 2, 3, 4, 6, 7]) for _ in exps]
        roots = [Fraction(u) * Fraction(5) ** e for u, e in zip(units, exps)]
        poly = Polynomial(QQ, [1])
        for r in roots:
            poly = poly * Polynomial(QQ, [-r, 1])
        pts = [
            (i, valuation(poly[i], place))
            for i in range(poly.degree + 1)
            if poly[i] != 0
        ]
        ng = newton_polygon(pts)
        assert sorted(ng.root_valuations()) == sorted(Fraction(e) for e in exps)


def test_polygon_collinear_merge():
    poly = newton_polygon([(0, 4), (1, 2), (2, 0), (3, 5)])
    assert poly.segments == ((Fraction(-2), 2), (Fraction(5), 1))
