"""Dense homogeneous polynomials in 2 or 3 variables over the rationals.

A polynomial of degree d is a coefficient vector indexed by the degree-d
monomials in graded-lexicographic order (largest exponent on the first
variable first).  All downstream computations work degree by degree, so a
dense per-degree vector feeds the exact linear solver directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

VAR_NAMES = ("x", "y", "z")


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Degree-d exponent tuples in graded-lexicographic order."""
    if nvars not in (2, 3):
        raise ValueError("only 2 or 3 variables are supported")
    if nvars == 2:
        return tuple((degree - j, j) for j in range(degree + 1))
    out = []
    for i in range(degree, -1, -1):
        for j in range(degree - i, -1, -1):
            out.append((i, j, degree - i - j))
    return tuple(out)


@lru_cache(maxsize=None)
def _index_table(nvars: int, degree: int) -> dict[tuple[int, ...], int]:
    return {m: i for i, m in enumerate(monomials(nvars, degree))}


def monomial_count(nvars: int, degree: int) -> int:
    return comb(degree + nvars - 1, nvars - 1)


def monomial_index(exps: tuple[int, ...], degree: int, nvars: int) -> int:
    if len(exps) != nvars or any(e < 0 for e in exps) or sum(exps) != degree:
        raise ValueError(f"bad exponent tuple {exps} for degree {degree}")
    return _index_table(nvars, degree)[tuple(exps)]


_ZERO = Fraction(0)


@dataclass(frozen=True)
class HomPoly:
    """Homogeneous polynomial: dense grlex coefficient vector at one degree."""

    nvars: int
    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != monomial_count(self.nvars, self.degree):
            raise ValueError("coefficient vector has the wrong length")

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "HomPoly") -> "HomPoly":
        self._check_like(other)
        return HomPoly(self.nvars, self.degree,
                       tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        self._check_like(other)
        return HomPoly(self.nvars, self.degree,
                       tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "HomPoly":
        c = Fraction(c)
        return HomPoly(self.nvars, self.degree, tuple(c * a for a in self.coeffs))

    def __neg__(self) -> "HomPoly":
        return self.scale(-1)

    def _check_like(self, other: "HomPoly"):
        if self.nvars != other.nvars or self.degree != other.degree:
            raise ValueError("nvars/degree mismatch")

    def __mul__(self, other: "HomPoly") -> "HomPoly":
        if self.nvars != other.nvars:
            raise ValueError("nvars mismatch")
        return poly_mul(self, other)

    def coefficient(self, exps: tuple[int, ...]) -> Fraction:
        return self.coeffs[monomial_index(tuple(exps), self.degree, self.nvars)]

    def diff(self, var: int) -> "HomPoly":
        """Exact partial derivative; degree drops by one."""
        if self.degree == 0:
            raise ValueError("cannot differentiate a constant homogeneous form")
        out = [_ZERO] * monomial_count(self.nvars, self.degree - 1)
        table = _index_table(self.nvars, self.degree - 1)
        for m, c in zip(monomials(self.nvars, self.degree), self.coeffs):
            e = m[var]
            if c and e:
                low = list(m)
                low[var] -= 1
                out[table[tuple(low)]] += c * e
        return HomPoly(self.nvars, self.degree - 1, tuple(out))

    def evaluate(self, point) -> Fraction:
        pt = [Fraction(v) for v in point]
        total = _ZERO
        for m, c in zip(monomials(self.nvars, self.degree), self.coeffs):
            if c:
                term = c
                for v, e in zip(pt, m):
                    term *= v ** e
                total += term
        return total

    def __str__(self) -> str:
        names = VAR_NAMES[: self.nvars]
        terms = []
        for m, c in zip(monomials(self.nvars, self.degree), self.coeffs):
            if not c:
                continue
            mono = "".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e
            )
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        s = terms[0]
        for t in terms[1:]:
            s += f" + {t}" if not t.startswith("-") else f" - {t[1:]}"
        return s


def zero(nvars: int, degree: int) -> HomPoly:
    return HomPoly(nvars, degree, (_ZERO,) * monomial_count(nvars, degree))


def from_terms(nvars: int, degree: int, terms: dict) -> HomPoly:
    coeffs = [_ZERO] * monomial_count(nvars, degree)
    for exps, c in terms.items():
        coeffs[monomial_index(tuple(exps), degree, nvars)] += Fraction(c)
    return HomPoly(nvars, degree, tuple(coeffs))


def linear(nvars: int, coefficients) -> HomPoly:
    cs = [Fraction(c) for c in coefficients]
    if len(cs) != nvars:
        raise ValueError("wrong number of coefficients")
    terms = {}
    for i, c in enumerate(cs):
        e = [0] * nvars
        e[i] = 1
        terms[tuple(e)] = c
    return from_terms(nvars, 1, terms)


def one(nvars: int) -> HomPoly:
    return HomPoly(nvars, 0, (Fraction(1),))


def poly_mul(p: HomPoly, q: HomPoly) -> HomPoly:
    """Exact product; bilinear, degree adds.  0 * q is the zero polynomial."""
    if p.nvars != q.nvars:
        raise ValueError("nvars mismatch")
    d = p.degree + q.degree
    out = [_ZERO] * monomial_count(p.nvars, d)
    table = _index_table(p.nvars, d)
    qm = [(m, c) for m, c in zip(monomials(q.nvars, q.degree), q.coeffs) if c]
    for mp, cp in zip(monomials(p.nvars, p.degree), p.coeffs):
        if not cp:
            continue
        for mq, cq in qm:
            out[table[tuple(a + b for a, b in zip(mp, mq))]] += cp * cq
    return HomPoly(p.nvars, d, tuple(out))


def product(polys, nvars: int = 3) -> HomPoly:
    acc = one(nvars)
    for p in polys:
        acc = poly_mul(acc, p)
    return acc


def power(p: HomPoly, e: int) -> HomPoly:
    acc = one(p.nvars)
    for _ in range(e):
        acc = poly_mul(acc, p)
    return acc


@dataclass(frozen=True)
class LineParam:
    """Elimination parametrization of a plane a*x + b*y + c*z = 0.

    The eliminated coordinate equals expr[0] * u + expr[1] * v, where (u, v)
    are the retained coordinates in increasing index order.
    """

    eliminated: int
    expr: tuple[Fraction, Fraction]

    @property
    def retained(self) -> tuple[int, int]:
        r = [i for i in range(3) if i != self.eliminated]
        return (r[0], r[1])


def line_param(coefficients, eliminated: int) -> LineParam:
    cs = [Fraction(c) for c in coefficients]
    if cs[eliminated] == 0:
        raise ValueError("cannot eliminate a variable with zero coefficient")
    others = [i for i in range(3) if i != eliminated]
    return LineParam(eliminated,
                     (-cs[others[0]] / cs[eliminated], -cs[others[1]] / cs[eliminated]))


def substitute_line(p: HomPoly, param: LineParam) -> HomPoly:
    """Restrict a 3-variable form to the plane, in the retained coordinates.

    Degree is preserved; the defining form itself restricts to zero.
    """
    if p.nvars != 3:
        raise ValueError("substitute_line expects a 3-variable polynomial")
    d = p.degree
    out = [_ZERO] * (d + 1)
    table = _index_table(2, d)
    u, v = param.retained
    c0, c1 = param.expr
    for m, c in zip(monomials(3, d), p.coeffs):
        if not c:
            continue
        e = m[param.eliminated]
        bu, bv = m[u], m[v]
        # (c0 u + c1 v)^e expanded by the binomial theorem; 0^0 == 1
        for t in range(e + 1):
            w = (c0 ** (e - t)) * (c1 ** t)
            if w:
                out[table[(bu + e - t, bv + t)]] += c * w * comb(e, t)
    return HomPoly(2, d, tuple(out))


def compose2(g: HomPoly, sub_s: HomPoly, sub_t: HomPoly) -> HomPoly:
    """Substitute linear forms for the two variables of g."""
    if g.nvars != 2 or sub_s.degree != 1 or sub_t.degree != 1:
        raise ValueError("compose2 expects a binary form and two linear forms")
    d = g.degree
    acc = zero(2, d)
    s_pows = [one(2)]
    t_pows = [one(2)]
    for _ in range(d):
        s_pows.append(poly_mul(s_pows[-1], sub_s))
        t_pows.append(poly_mul(t_pows[-1], sub_t))
    for (i, j), c in zip(monomials(2, d), g.coeffs):
        if c:
            acc = acc + poly_mul(s_pows[i], t_pows[j]).scale(c)
    return acc
