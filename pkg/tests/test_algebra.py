"""
代数模块测试：Laurent 多项式、F8 与系数方案
"""

import random

import pytest
import sympy

from src.core.algebra import (
    F8,
    SYMBOLIC_RING,
    LaurentRing,
    bar,
    f8_arith,
    laurent_arith,
    make_scheme,
    monomial_pow,
    substitute,
)
from src.core.utils.exceptions import AlgebraError, RingMismatchError

XY = LaurentRing(("x", "y"))


def _random_poly(rng: random.Random, ring: LaurentRing, terms: int = 3):
    total = ring.zero
    for _ in range(terms):
        exponents = [rng.randint(-3, 3) for _ in ring.variables]
        total = total + ring.monomial(rng.randint(-4, 4), exponents)
    return total


def test_ring_axioms_on_random_polynomials():
    """测试交换律、结合律与分配律"""
    rng = random.Random(11)
    for _ in range(40):
        p, q, r = (_random_poly(rng, XY) for _ in range(3))
        assert p + q == q + p
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p - p == XY.zero
        assert p * XY.one == p


def test_monomial_inverse_and_negative_powers():
    """测试单项式的负幂"""
    x, y = XY.gens()
    m = x * y ** -2
    assert m ** -1 * m == XY.one
    assert monomial_pow(-x, -3) == -(x ** -3)
    assert (x ** 2) ** -2 == x ** -4


def test_negative_power_of_binomial_raises():
    x, y = XY.gens()
    with pytest.raises(AlgebraError):
        (x + y) ** -1
    with pytest.raises(AlgebraError):
        (2 * x) ** -1


def test_zero_is_zero_and_cancellation():
    x, _ = XY.gens()
    assert (x - x).is_zero()
    assert (x + x ** -1) - (x ** -1 + x) == XY.zero
    assert laurent_arith(x, x, "sub").is_zero()


def test_parse_canonical_and_short_forms():
    """测试规范文本与简写文本的解析"""
    A = LaurentRing(("A",))
    p = A.parse("-A^5 - A^-3 + A^-7")
    assert p.coefficient([5]) == -1
    assert p.coefficient([-3]) == -1
    assert p.coefficient([-7]) == 1
    assert A.parse(p.to_text()) == p
    assert XY.parse("2*x^-1*y + 3 - y") == 2 * XY.gen("x") ** -1 * XY.gen("y") + 3 - XY.gen("y")


def test_numeric_substitution():
    x, y = XY.gens()
    assert (x + x ** -1).substitute({"x": 2, "y": 1}) == pytest.approx(2.5)
    assert (x * y).evaluate_at(x=1j, y=1j) == pytest.approx(-1)


def test_zero_into_negative_exponent_raises():
    x, _ = XY.gens()
    with pytest.raises(AlgebraError):
        (x ** -1).substitute({"x": 0, "y": 1})


def test_cross_ring_arithmetic_raises():
    with pytest.raises(RingMismatchError):
        XY.gen("x") + LaurentRing(("t",)).gen("t")


def test_to_sympy_matches_expression():
    x, y = XY.gens()
    sx, sy = sympy.symbols("x y")
    p = 3 * x ** 2 * y ** -1 - x ** -1
    assert sympy.simplify(p.to_sympy() - (3 * sx ** 2 / sy - 1 / sx)) == 0


def test_f8_field_structure():
    """测试 F8 = Z2[t]/(1+t+t^3)"""
    t, one = F8.t, F8.one
    assert t ** 3 == one + t
    assert t ** 7 == one
    assert one + one == F8.zero
    for u in F8.elements():
        if not u.is_zero():
            assert u * u.inverse() == one
    assert f8_arith(t, t, "mul") == F8.from_coefficients(0, 0, 1)
    assert F8.parse("1 + t^2") == F8.from_coefficients(1, 0, 1)
    assert F8.parse((one + t).to_text()) == one + t


def test_f8_zero_inverse_raises():
    with pytest.raises(AlgebraError):
        F8.zero.inverse()
    with pytest.raises(ZeroDivisionError):
        F8.one / F8.zero


def test_symbolic_scheme_values(symbolic):
    a, b, n, w, e = SYMBOLIC_RING.gens()
    assert symbolic.a("n") == n * a
    assert symbolic.a("s") == symbolic.a("n")
    assert symbolic.b("e", True) == (w * b) ** -1
    assert symbolic.d == -(a * b ** -1) - b * a ** -1
    assert symbolic.all_units()


def test_nor_scheme_values(nor):
    t = F8.t
    assert nor.d == F8.one + t + t ** 2
    assert nor.b("n") * nor.b("n", True) == F8.one
    assert nor.all_units()


def test_bar_swaps_east_and_west(symbolic, nor):
    assert bar(symbolic.a("e")) == symbolic.a("w")
    assert bar(symbolic.b("w", True)) == symbolic.b("e", True)
    assert bar(symbolic.d) == symbolic.d
    assert bar(nor.a("e")) == nor.a("e")
    assert substitute(symbolic.a("e"), {"e": "w", "w": "e"}) == symbolic.a("w")


def test_scheme_replace_and_unknown_family(symbolic):
    doubled = symbolic.replace(b_n=symbolic.b("n") * 2)
    assert doubled.b("n") == 2 * symbolic.b("n")
    assert doubled.family == "symbolic*"
    with pytest.raises(KeyError):
        symbolic.replace(c_n=1)
    with pytest.raises(ValueError):
        make_scheme("lifted")
