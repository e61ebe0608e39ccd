"""Exact computation of Kodaira reduction types and Tamagawa numbers for
elliptic curves over Q and F_p(t), with torsion-family verification tooling."""

from .bivar import BivariatePolynomial
from .errors import (
    DegenerateParameters,
    InsufficientPrecision,
    OrderBoundExceeded,
    SingularModelError,
    UnsupportedResidueCharacteristic,
)
from .fields import GF, QQ, PrimeField, PrimeFieldElem, RationalField, is_prime
from .newton import NewtonPolygon, newton_polygon
from .padic import PadicContext, PadicField, PadicNumber, hensel_root
from .places import Place, local_context, residue, valuation
from .poly import Polynomial, factor, is_irreducible, poly_gcd
from .quotient import QuotientField, QuotientFieldElem
from .ratfunc import FunctionField, RationalFunction
from .reduction import (
    KodairaType,
    ReductionResult,
    bad_places,
    global_tamagawa,
    minimal_model_at,
    observation_fastpath,
    tate_reduce,
)
from .weierstrass import (
    CurvePoint,
    INFINITY_POINT,
    WeierstrassModel,
    group_add,
    group_neg,
    hasse_invariant,
    on_curve,
    point_order,
    scalar_mul,
    to_short_form,
    transform,
)

__version__ = "0.1.0"
