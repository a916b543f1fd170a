"""Dense homogeneous polynomials: ordering, arithmetic, restriction."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrlog.poly import (HomPoly, compose2, from_terms, line_param, linear,
                         monomial_count, monomial_index, monomials, poly_mul,
                         power, product, substitute_line, zero)


def test_monomial_order_three_vars_degree_two():
    assert monomials(3, 2) == ((2, 0, 0), (1, 1, 0), (1, 0, 1),
                               (0, 2, 0), (0, 1, 1), (0, 0, 2))
    assert monomial_index((2, 0, 0), 2, 3) == 0
    assert monomial_index((0, 0, 2), 2, 3) == 5


def test_monomial_order_two_vars():
    assert monomials(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert monomial_index((1, 1), 2, 2) == 1


def test_monomial_count():
    assert monomial_count(3, 2) == 6
    assert monomial_count(2, 4) == 5


def test_bad_exponent_tuple():
    with pytest.raises(ValueError):
        monomial_index((1, 0, 0), 2, 3)


def test_linear_and_str():
    p = linear(3, (1, -2, 0))
    assert str(p) == "x - 2*y"
    assert p.coefficient((1, 0, 0)) == 1
    assert p.coefficient((0, 1, 0)) == -2


def test_mul_small():
    x = linear(3, (1, 0, 0))
    y = linear(3, (0, 1, 0))
    xy = poly_mul(x, y)
    assert xy.degree == 2
    assert xy.coefficient((1, 1, 0)) == 1
    assert sum(1 for c in xy.coeffs if c) == 1


def rand_poly(rng, nvars, degree):
    n = monomial_count(nvars, degree)
    return HomPoly(nvars, degree,
                   tuple(Fraction(rng.randint(-5, 5)) for _ in range(n)))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.randoms(use_true_random=False))
def test_mul_agrees_with_evaluation(d1, d2, rng):
    p = rand_poly(rng, 3, d1)
    q = rand_poly(rng, 3, d2)
    pq = poly_mul(p, q)
    for _ in range(4):
        pt = [rng.randint(-4, 4) for _ in range(3)]
        assert pq.evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)


def test_mul_by_zero():
    z = zero(3, 1)
    p = linear(3, (1, 2, 3))
    assert poly_mul(z, p).is_zero


def test_power_and_product():
    x = linear(2, (1, 0))
    assert power(x, 3).coefficient((3, 0)) == 1
    p = product([linear(3, (1, 0, 0)), linear(3, (0, 1, 0)),
                 linear(3, (0, 0, 1))], 3)
    assert p.coefficient((1, 1, 1)) == 1


def test_diff():
    p = from_terms(3, 2, {(2, 0, 0): 1, (1, 1, 0): 3})
    px = p.diff(0)
    assert px.coefficient((1, 0, 0)) == 2
    assert px.coefficient((0, 1, 0)) == 3
    with pytest.raises(ValueError):
        from_terms(3, 0, {(0, 0, 0): 1}).diff(0)


def test_substitute_line_vanishing():
    # the defining form restricts to zero on its own line
    coeffs = (1, 2, 3)
    param = line_param(coeffs, 2)
    assert substitute_line(linear(3, coeffs), param).is_zero


def test_substitute_line_example():
    # restrict x^2 to x + y = 0 eliminating x: x = -u where (u, v) = (y, z)
    param = line_param((1, 1, 0), 0)
    p = from_terms(3, 2, {(2, 0, 0): 1})
    r = substitute_line(p, param)
    assert r.coefficient((2, 0)) == 1
    assert r.coefficient((1, 1)) == 0
    assert r.coefficient((0, 2)) == 0


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 3), st.randoms(use_true_random=False))
def test_substitute_line_agrees_with_evaluation(d, rng):
    p = rand_poly(rng, 3, d)
    param = line_param((2, 3, 5), 2)  # z = -(2x + 3y)/5
    r = substitute_line(p, param)
    for _ in range(4):
        u, v = rng.randint(-4, 4), rng.randint(-4, 4)
        zval = param.expr[0] * u + param.expr[1] * v
        assert r.evaluate((u, v)) == p.evaluate((u, v, zval))


def test_line_param_retained():
    param = line_param((1, 1, 1), 1)
    assert param.eliminated == 1
    assert param.retained == (0, 2)
    with pytest.raises(ValueError):
        line_param((1, 0, 1), 1)


def test_compose2():
    # g(s, t) = s*t with s = u + v, t = u - v gives u^2 - v^2
    g = from_terms(2, 2, {(1, 1): 1})
    out = compose2(g, linear(2, (1, 1)), linear(2, (1, -1)))
    assert out.coefficient((2, 0)) == 1
    assert out.coefficient((1, 1)) == 0
    assert out.coefficient((0, 2)) == -1
