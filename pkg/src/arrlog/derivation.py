"""The graded module of Jacobian syzygies of an arrangement.

For a defining polynomial f (product of the lines), the syzygies
(a, b, c) with a f_x + b f_y + c f_z = 0 form a rank-2 graded module whose
minimal free resolution has length at most one.  Everything here is read off
degree by degree with exact kernels: graded dimensions, minimal generators,
relation degrees (recovered from the Hilbert data of the free relation
module), and the classification free / nearly free / plus-one generated.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from . import linalg
from .arrangement import Arrangement
from .poly import (HomPoly, _index_table, line_param, monomial_count,
                   monomials, substitute_line, zero)

MAX_DEGREE_ENV = "ARRLOG_MAX_DEGREE"


class CertificationFailure(AssertionError):
    """Degree-by-degree bookkeeping contradicted the length-<=1 resolution."""


@dataclass(frozen=True)
class JacobianRow:
    f: HomPoly
    fx: HomPoly
    fy: HomPoly
    fz: HomPoly

    @property
    def partials(self) -> tuple[HomPoly, HomPoly, HomPoly]:
        return (self.fx, self.fy, self.fz)


def _primitive_form(coeffs) -> list[int]:
    lcm = 1
    for c in coeffs:
        lcm = lcm // gcd(lcm, c.denominator) * c.denominator
    ints = [int(c * lcm) for c in coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints]


@lru_cache(maxsize=1024)
def jacobian(A: Arrangement) -> JacobianRow:
    """Defining polynomial (integer-scaled) and its exact partials.

    The Euler identity x f_x + y f_y + z f_z = |A| f is asserted.
    """
    from .poly import linear, product

    f = product((linear(3, _primitive_form(l.coeffs)) for l in A.lines), 3)
    fx, fy, fz = f.diff(0), f.diff(1), f.diff(2)
    n = len(A)
    euler = _var_shift(fx, 0) + _var_shift(fy, 1) + _var_shift(fz, 2)
    if euler != f.scale(n):
        raise CertificationFailure("Euler identity failed")
    return JacobianRow(f, fx, fy, fz)


def _var_shift(p: HomPoly, var: int) -> HomPoly:
    """Multiply by the given coordinate variable."""
    d = p.degree + 1
    out = [Fraction(0)] * monomial_count(p.nvars, d)
    table = _index_table(p.nvars, d)
    for m, c in zip(monomials(p.nvars, p.degree), p.coeffs):
        if c:
            e = list(m)
            e[var] += 1
            out[table[tuple(e)]] = c
    return HomPoly(p.nvars, d, tuple(out))


@dataclass(frozen=True)
class SyzygyElement:
    """Component triple (a, b, c) of equal degree with a f_x + b f_y + c f_z = 0."""

    a: HomPoly
    b: HomPoly
    c: HomPoly

    @property
    def degree(self) -> int:
        return self.a.degree

    @property
    def components(self) -> tuple[HomPoly, HomPoly, HomPoly]:
        return (self.a, self.b, self.c)

    def coeff_vector(self) -> list[Fraction]:
        return list(self.a.coeffs) + list(self.b.coeffs) + list(self.c.coeffs)


def _vec_to_syzygy(v, k: int) -> SyzygyElement:
    m = monomial_count(3, k)
    return SyzygyElement(HomPoly(3, k, tuple(v[:m])),
                         HomPoly(3, k, tuple(v[m:2 * m])),
                         HomPoly(3, k, tuple(v[2 * m:])))


def _ar_matrix(A: Arrangement, k: int) -> list[list[Fraction]]:
    jac = jacobian(A)
    n = len(A)
    mk = monomial_count(3, k)
    target = k + n - 1
    rows = monomial_count(3, target)
    table = _index_table(3, target)
    cols: list[list[Fraction]] = []
    for part in jac.partials:
        terms = [(m, c) for m, c in zip(monomials(3, n - 1), part.coeffs) if c]
        for mu in monomials(3, k):
            col = [Fraction(0)] * rows
            for m, c in terms:
                col[table[tuple(a + b for a, b in zip(mu, m))]] = c
            cols.append(col)
    return [[cols[c][r] for c in range(3 * mk)] for r in range(rows)]


@lru_cache(maxsize=8192)
def _ar_kernel(A: Arrangement, k: int) -> tuple[tuple[Fraction, ...], ...]:
    """Kernel of (a,b,c) -> a f_x + b f_y + c f_z on degree-k triples."""
    mk = monomial_count(3, k)
    # integer-scaled copies keep the downstream span arithmetic in ints
    return tuple(tuple(linalg._int_row(v))
                 for v in linalg.kernel_basis(_ar_matrix(A, k), 3 * mk))


@lru_cache(maxsize=8192)
def _ar_quick_dim(A: Arrangement, k: int) -> int:
    """Kernel dimension only (forward elimination, no basis extraction)."""
    mk = monomial_count(3, k)
    return 3 * mk - linalg.rank(_ar_matrix(A, k), 3 * mk)


def ar_dim(A: Arrangement, k: int) -> int:
    """Dimension of the degree-k layer of the syzygy module."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    return len(_ar_kernel(A, k))


def ar_basis(A: Arrangement, k: int) -> list[SyzygyElement]:
    return [_vec_to_syzygy(v, k) for v in _ar_kernel(A, k)]


def mdr(A: Arrangement) -> int:
    """Minimal degree of a nonzero syzygy."""
    k = 0
    while True:
        if ar_dim(A, k) > 0:
            return k
        k += 1


def _shift_vec(v, k: int, var: int) -> list[Fraction]:
    """Multiply a degree-k syzygy coefficient vector by a coordinate."""
    mk = monomial_count(3, k)
    mk1 = monomial_count(3, k + 1)
    table = _index_table(3, k + 1)
    out = [Fraction(0)] * (3 * mk1)
    for comp in range(3):
        base_in = comp * mk
        base_out = comp * mk1
        for m, idx in _index_table(3, k).items():
            c = v[base_in + idx]
            if c:
                e = list(m)
                e[var] += 1
                out[base_out + table[tuple(e)]] = c
    return out


@dataclass(frozen=True)
class ResolutionShape:
    """Minimal generator degrees and relation degrees (multisets, sorted)."""

    generator_degrees: tuple[int, ...]
    relation_degrees: tuple[int, ...]
    complete: bool = True
    cap_hit: bool = False


@dataclass(frozen=True)
class _ResolutionData:
    shape: ResolutionShape
    generators: tuple[tuple[int, tuple[Fraction, ...]], ...]  # (degree, vector)


def degree_cap(A: Arrangement) -> int:
    env = os.environ.get(MAX_DEGREE_ENV)
    if env is not None:
        return int(env)
    return 2 * len(A)


def _resolution(A: Arrangement, early_stop: bool) -> _ResolutionData:
    cap = degree_cap(A)
    n = len(A)
    gens: list[tuple[int, tuple[Fraction, ...]]] = []
    rels: list[int] = []
    prev: tuple = ()
    k = 0
    partial = False
    cap_hit = False
    while True:
        basis = _ar_kernel(A, k)
        dim = len(basis)
        span = linalg.SpanBuilder(3 * monomial_count(3, k))
        if k > 0:
            for v in prev:
                for var in range(3):
                    span.add(_shift_vec(v, k - 1, var))
        covered = span.dim
        gamma = dim - covered
        if gamma < 0:
            raise CertificationFailure(f"span exceeds layer dimension at degree {k}")
        if gamma:
            for v in basis:
                if span.add(v):
                    gens.append((k, v))
            if sum(1 for g, _ in gens if g == k) != gamma:
                raise CertificationFailure(f"generator extraction mismatch at degree {k}")
        # Hilbert value of the relation module at this degree: the free cover
        # by the generators found so far is surjective in degrees <= k, and
        # the relation module is free (resolution length <= 1), so its new
        # generators are recovered from the dimension count alone.
        cover = sum(comb(k - g + 2, 2) for g, _ in gens if g <= k)
        d_k = cover - dim
        if d_k < 0:
            raise CertificationFailure(f"negative relation dimension at degree {k}")
        rho = d_k - sum(comb(k - r + 2, 2) for r in rels if r <= k)
        if rho < 0:
            raise CertificationFailure(f"relation recovery failed at degree {k}")
        rels.extend([k] * rho)
        if early_stop and (len(gens) > 3 or len(rels) > 1):
            partial = True
            break
        # once the shape is rank-2 consistent, the remaining degrees up to
        # two past every generator and relation degree only need the Hilbert
        # identity, which a rank computation checks without extracting bases
        gd = [g for g, _ in gens]
        shape_ok = (gens and len(gd) - len(rels) == 2
                    and sum(gd) - sum(rels) == n - 1)
        target = (max(gd) if gd else 0) + (max(rels) if rels else 0) + 2
        if shape_ok:
            tail_ok = True
            for kk in range(k + 1, min(target, cap) + 1):
                predicted = (sum(comb(kk - g + 2, 2) for g in gd)
                             - sum(comb(kk - r + 2, 2) for r in rels))
                if _ar_quick_dim(A, kk) != predicted:
                    tail_ok = False  # more structure ahead; keep scanning
                    break
            if tail_ok:
                cap_hit = target > cap
                break
        if k >= cap:
            cap_hit = True
            break
        prev = basis
        k += 1
    complete = not partial and not cap_hit
    if complete:
        gd = [g for g, _ in gens]
        if len(gd) - len(rels) != 2 or sum(gd) - sum(rels) != n - 1:
            raise CertificationFailure(
                f"resolution shape {sorted(gd)} / {sorted(rels)} fails the "
                f"rank/degree certificate for {n} lines")
    shape = ResolutionShape(tuple(sorted(g for g, _ in gens)),
                            tuple(sorted(rels)), complete, cap_hit)
    return _ResolutionData(shape, tuple(gens))


@lru_cache(maxsize=1024)
def minimal_resolution(A: Arrangement) -> ResolutionShape:
    """Generator and relation degrees of the full minimal resolution."""
    return _resolution(A, early_stop=False).shape


@lru_cache(maxsize=1024)
def _classification_resolution(A: Arrangement) -> _ResolutionData:
    return _resolution(A, early_stop=True)


def relation_vectors(A: Arrangement, gens, r: int) -> list[list[Fraction]]:
    """Kernel of the evaluation map from degree-r combinations of the given
    generators onto the syzygy module; one coefficient block per generator."""
    blocks = [monomial_count(3, r - g) for g, _ in gens]
    ncols = sum(blocks)
    nrows = 3 * monomial_count(3, r)
    cols: list[list[Fraction]] = []
    for g, vec in gens:
        for mono in monomials(3, r - g):
            v = vec
            d = g
            for var in range(3):
                for _ in range(mono[var]):
                    v = _shift_vec(v, d, var)
                    d += 1
            cols.append(list(v))
    matrix = [[cols[c][rw] for c in range(ncols)] for rw in range(nrows)]
    return linalg.kernel_basis(matrix, ncols)


@dataclass(frozen=True)
class Classification:
    verdict: str  # "free" | "nearly-free" | "plus-one-generated" | "other"
    exponents: tuple[int, int] | None
    level: int | None
    mdr: int | None
    nu: int | None
    shape: ResolutionShape

    @property
    def is_free(self) -> bool:
        return self.verdict == "free"

    @property
    def is_plus_one(self) -> bool:
        """Plus-one generated in the wide sense (nearly free included)."""
        return self.verdict in ("nearly-free", "plus-one-generated")

    def to_json(self) -> dict:
        doc: dict = {"verdict": self.verdict}
        if self.exponents is not None:
            doc["exponents"] = list(self.exponents)
        if self.level is not None:
            doc["level"] = self.level
        doc["mdr"] = self.mdr
        if self.nu is not None:
            doc["nu"] = self.nu
        doc["generators"] = list(self.shape.generator_degrees)
        doc["relations"] = list(self.shape.relation_degrees)
        doc["cap_hit"] = self.shape.cap_hit
        return doc


def _other(shape: ResolutionShape) -> Classification:
    md = min(shape.generator_degrees) if shape.generator_degrees else None
    return Classification("other", None, None, md, None, shape)


@lru_cache(maxsize=2048)
def classify(A: Arrangement) -> Classification:
    """Classification from the resolution shape.

    Free: two generators, no relation.  Plus-one generated: three generators
    a <= b <= d with one relation of degree d + 1 whose coefficient on a
    top-degree generator is a nonzero linear form; reported as nearly free
    when b = d.  Everything else (including a degenerate relation) is other.
    """
    data = _classification_resolution(A)
    shape = data.shape
    gd = shape.generator_degrees
    rd = shape.relation_degrees
    if not shape.complete:
        return _other(shape)
    if len(gd) == 2 and not rd:
        return Classification("free", gd, None, gd[0], None, shape)
    if len(gd) == 3 and len(rd) == 1:
        a, b, d = gd
        if rd[0] != d + 1:
            return _other(shape)
        kernel = relation_vectors(A, data.generators, d + 1)
        if len(kernel) != 1:
            raise CertificationFailure("relation space dimension mismatch")
        rel = kernel[0]
        # coefficient blocks, in generator order
        offset = 0
        top_ok = False
        for g, _ in data.generators:
            size = monomial_count(3, d + 1 - g)
            block = rel[offset:offset + size]
            if g == d and any(block):
                top_ok = True
            offset += size
        if not top_ok:
            return _other(shape)
        nu = d - b + 1
        verdict = "nearly-free" if b == d else "plus-one-generated"
        return Classification(verdict, (a, b), d, a, nu, shape)
    return _other(shape)


# ---------------------------------------------------------------------------
# derivations vanishing on one line

@dataclass(frozen=True)
class Derivation3:
    """a * d/dx + b * d/dy + c * d/dz with homogeneous components."""

    a: HomPoly
    b: HomPoly
    c: HomPoly

    @property
    def degree(self) -> int:
        return self.a.degree

    @property
    def components(self) -> tuple[HomPoly, HomPoly, HomPoly]:
        return (self.a, self.b, self.c)

    def apply_linear(self, coeffs) -> HomPoly:
        cs = [Fraction(c) for c in coeffs]
        return self.a.scale(cs[0]) + self.b.scale(cs[1]) + self.c.scale(cs[2])


@lru_cache(maxsize=8192)
def _dh_kernel(A: Arrangement, H: int, k: int) -> tuple[tuple[Fraction, ...], ...]:
    mk = monomial_count(3, k)
    ncols = 3 * mk
    rows: list[list[Fraction]] = []
    alpha_h = A.lines[H].coeffs
    # theta(alpha_H) = 0: one condition per degree-k monomial
    for idx in range(mk):
        row = [Fraction(0)] * ncols
        for comp in range(3):
            row[comp * mk + idx] = alpha_h[comp]
        rows.append(row)
    # theta(alpha_K) restricted to K vanishes, for every other line
    for K, form in enumerate(A.lines):
        if K == H:
            continue
        coeffs = form.coeffs
        elim = max(range(3), key=lambda i: (abs(coeffs[i]), i))
        param = line_param(coeffs, elim)
        # restriction of each unknown basis monomial, per component weight
        cond = [[Fraction(0)] * ncols for _ in range(k + 1)]
        for m, idx in _index_table(3, k).items():
            mono = zero(3, k).coeffs[:idx] + (Fraction(1),) + zero(3, k).coeffs[idx + 1:]
            restricted = substitute_line(HomPoly(3, k, mono), param)
            for comp in range(3):
                w = coeffs[comp]
                if w == 0:
                    continue
                for i, c in enumerate(restricted.coeffs):
                    if c:
                        cond[i][comp * mk + idx] += w * c
        rows.extend(cond)
    return tuple(tuple(v) for v in linalg.kernel_basis(rows, ncols))


def dh_basis(A: Arrangement, H: int, k: int) -> list[Derivation3]:
    """Deterministic basis of the degree-k derivations preserving every line
    and annihilating the defining form of line H."""
    if not 0 <= H < len(A):
        raise IndexError("line index out of range")
    mk = monomial_count(3, k)
    out = []
    for v in _dh_kernel(A, H, k):
        out.append(Derivation3(HomPoly(3, k, tuple(v[:mk])),
                               HomPoly(3, k, tuple(v[mk:2 * mk])),
                               HomPoly(3, k, tuple(v[2 * mk:]))))
    return out


def in_dh(A: Arrangement, H: int, theta: Derivation3) -> bool:
    """Membership test for an explicitly given derivation."""
    if not theta.apply_linear(A.lines[H].coeffs).is_zero:
        return False
    for K, form in enumerate(A.lines):
        if K == H:
            continue
        coeffs = form.coeffs
        elim = max(range(3), key=lambda i: (abs(coeffs[i]), i))
        param = line_param(coeffs, elim)
        if not substitute_line(theta.apply_linear(coeffs), param).is_zero:
            return False
    return True
