"""Everything built on the restriction map from the arrangement's derivations
to the derivation module of the induced weighted arrangement on one line:
image/cokernel dimensions, defects, the near-freeness witness scan, splitting
types along arbitrary admissible lines, the property-[P] decision, and the
umbrella validator that checks the whole battery of structural identities on
a single arrangement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .arrangement import (Arrangement, LinearForm3, chi0, intersection_points,
                          is_balanced, n_H, nr_form, to_document)
from .derivation import classify, degree_cap, dh_basis, jacobian
from .multiarr import (Derivation2, basis, deriv_dim, exponents,
                       ziegler_restriction)
from .poly import HomPoly, LineParam, line_param, substitute_line
from .rng import XorShift64


class ConsistencyFailure(AssertionError):
    """Two provably-equal quantities disagreed (internal error)."""


class InadmissibleLine(ValueError):
    """External line through a singular point; splitting type out of scope."""


class NotApplicable(ValueError):
    """The requested invariant is undefined for this verdict."""


# ---------------------------------------------------------------------------
# the restriction map on derivations

def _restrict_derivation(theta, param: LineParam) -> Derivation2:
    u, v = param.retained
    comps = theta.components
    return Derivation2(substitute_line(comps[u], param),
                       substitute_line(comps[v], param))


@dataclass(frozen=True)
class ZieglerMapData:
    H: int
    exponents: tuple[int, int]
    domain_dims: tuple[int, ...]
    codomain_dims: tuple[int, ...]
    image_dims: tuple[int, ...]

    @property
    def coker_dims(self) -> tuple[int, ...]:
        return tuple(c - i for c, i in zip(self.codomain_dims, self.image_dims))

    @property
    def coker_total(self) -> int:
        return sum(self.coker_dims)


@lru_cache(maxsize=2048)
def _image_vectors(A: Arrangement, H: int, k: int) -> tuple[tuple[Fraction, ...], ...]:
    _, param = ziegler_restriction(A, H)
    return tuple(tuple(_restrict_derivation(t, param).coeff_vector())
                 for t in dh_basis(A, H, k))


def _image_dim(A: Arrangement, H: int, k: int) -> int:
    span = linalg.SpanBuilder(2 * (k + 1))
    for v in _image_vectors(A, H, k):
        span.add(v)
    return span.dim


def ziegler_map(A: Arrangement, H: int) -> ZieglerMapData:
    """Per-degree domain/codomain/image dimensions of the restriction map.

    Degrees 0..e2 are always computed; the scan continues while the cokernel
    is nonzero (it vanishes for good once zero past e2, since the codomain is
    generated in degrees <= e2), hard-capped by the degree cap.
    """
    M, _ = ziegler_restriction(A, H)
    exp = exponents(M)
    cap = max(degree_cap(A), exp.e2)
    dom, cod, img = [], [], []
    k = 0
    while True:
        dom.append(len(dh_basis(A, H, k)))
        cod.append(deriv_dim(M, k))
        img.append(_image_dim(A, H, k))
        if k >= exp.e2 and cod[-1] == img[-1]:
            break
        if k >= cap:
            raise ConsistencyFailure(
                f"cokernel of the restriction map at line {H} did not "
                f"vanish by degree {cap}")
        k += 1
    return ZieglerMapData(H, exp.as_pair(), tuple(dom), tuple(cod), tuple(img))


@dataclass(frozen=True)
class DefectReport:
    H: int
    exponents: tuple[int, int]
    defect: int
    coker_total: int
    coker_by_degree: tuple[int, ...]

    def to_json(self) -> dict:
        return {"H": self.H, "exponents": list(self.exponents),
                "defect": self.defect, "coker_total": self.coker_total,
                "coker_by_degree": list(self.coker_by_degree)}


def yoshinaga_defect(A: Arrangement, H: int) -> DefectReport:
    """Defect b2^0 - e1 e2 of the restriction onto line H, cross-checked
    against the independently computed total cokernel dimension."""
    data = ziegler_map(A, H)
    e1, e2 = data.exponents
    defect = chi0(A).b2_0 - e1 * e2
    if defect != data.coker_total or defect < 0:
        raise ConsistencyFailure(
            f"defect {defect} != cokernel total {data.coker_total} at line {H}")
    return DefectReport(H, data.exponents, defect, data.coker_total,
                        data.coker_dims)


def _quick_defect(A: Arrangement, H: int) -> int:
    """Defect without the cokernel cross-check (exponents only)."""
    M, _ = ziegler_restriction(A, H)
    exp = exponents(M)
    return chi0(A).b2_0 - exp.e1 * exp.e2


def is_free_by_defect(A: Arrangement) -> bool:
    """Freeness via the defect of a single restriction (zero iff free)."""
    return _quick_defect(A, 0) == 0


def free_exponents_by_defect(A: Arrangement) -> tuple[int, int] | None:
    """(e1, e2) of any restriction when the arrangement is free, else None."""
    M, _ = ziegler_restriction(A, 0)
    exp = exponents(M)
    if chi0(A).b2_0 == exp.e1 * exp.e2:
        return exp.as_pair()
    return None


# ---------------------------------------------------------------------------
# splitting types

@dataclass(frozen=True)
class SplittingType:
    line: int | LinearForm3
    e1: int
    e2: int

    def as_pair(self) -> tuple[int, int]:
        return (self.e1, self.e2)

    def to_json(self) -> dict:
        if isinstance(self.line, int):
            where: object = self.line
        else:
            where = [str(c) for c in self.line.coeffs]
        return {"line": where, "exponents": [self.e1, self.e2]}


def is_admissible(A: Arrangement, form: LinearForm3) -> bool:
    """True if the line is not in A and passes through no intersection point."""
    if form in A.lines:
        return False
    p = form.poly()
    return all(p.evaluate(pt.point) != 0 for pt in intersection_points(A))


def _external_splitting(A: Arrangement, form: LinearForm3) -> SplittingType:
    n = len(A)
    coeffs = form.coeffs
    elim = max(range(3), key=lambda i: (abs(coeffs[i]), i))
    param = line_param(coeffs, elim)
    jac = jacobian(A)
    parts = [substitute_line(p, param) for p in jac.partials]

    def dim(k: int) -> int:
        rows = k + n
        cols_n = 3 * (k + 1)
        matrix = [[Fraction(0)] * cols_n for _ in range(rows)]
        for comp, part in enumerate(parts):
            for j in range(k + 1):
                # u^(k-j) v^j times the restricted partial
                col = comp * (k + 1) + j
                for i, c in enumerate(part.coeffs):
                    matrix[i + j][col] = c
        return len(linalg.kernel_basis(matrix, cols_n))

    e1 = None
    for k in range((n - 1) // 2 + 1):
        if dim(k) > 0:
            e1 = k
            break
    if e1 is None:
        raise InadmissibleLine(f"no splitting found along {form}")
    e2 = n - 1 - e1
    for k in range(e2 + 2):
        if dim(k) != max(0, k - e1 + 1) + max(0, k - e2 + 1):
            raise InadmissibleLine(
                f"splitting certificate failed along {form}")
    return SplittingType(form, e1, e2)


def splitting_type(A: Arrangement, line: int | LinearForm3) -> SplittingType:
    """Splitting type along a line: for members, the exponents of the induced
    weighted arrangement; for admissible external lines, read off the graded
    kernel of the restricted Jacobian row and certified by e1+e2 = |A|-1."""
    if isinstance(line, int):
        M, _ = ziegler_restriction(A, line)
        exp = exponents(M)
        return SplittingType(line, exp.e1, exp.e2)
    form = LinearForm3.make(line.coeffs if isinstance(line, LinearForm3) else line)
    if form in A.lines:
        return splitting_type(A, A.index_of(form))
    if not is_admissible(A, form):
        raise InadmissibleLine(f"{form} passes through an intersection point")
    return _external_splitting(A, form)


def random_external_lines(A: Arrangement, count: int, seed: int,
                          attempts: int = 100) -> list[LinearForm3]:
    """Seeded admissible external lines with coefficients in [-9, 9]."""
    rng = XorShift64(seed)
    out: list[LinearForm3] = []
    seen = set(A.lines)
    for _ in range(count):
        for _ in range(attempts):
            coeffs = tuple(rng.randint(-9, 9) for _ in range(3))
            if not any(coeffs):
                continue
            form = LinearForm3.make(coeffs)
            if form in seen:
                continue
            if is_admissible(A, form):
                out.append(form)
                seen.add(form)
                break
        else:
            break  # budget exhausted; return what we have
    return out


def nearly_free_by_criterion(A: Arrangement, seed: int = 1,
                             external_count: int = 20):
    """First line (index or external form) with defect exactly 1, or None.

    Scans the lines of A first, then a bounded batch of random admissible
    external lines.
    """
    b2 = chi0(A).b2_0
    for H in range(len(A)):
        if _quick_defect(A, H) == 1:
            return H
    for form in random_external_lines(A, external_count, seed):
        st = _external_splitting(A, form)
        if b2 - st.e1 * st.e2 == 1:
            return form
    return None


# ---------------------------------------------------------------------------
# splitting range

@dataclass(frozen=True)
class SplittingRange:
    r0: int
    r0_prime: int
    candidates: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {"r0": self.r0, "r0_prime": self.r0_prime,
                "candidates": [list(c) for c in self.candidates]}


def splitting_range(A: Arrangement) -> SplittingRange:
    """Candidate splitting types from the classification data (defined only
    for the plus-one generated / nearly free verdicts)."""
    cls = classify(A)
    if not cls.is_plus_one:
        raise NotApplicable(f"splitting range undefined for verdict {cls.verdict}")
    md = cls.mdr
    nu = cls.nu
    n = len(A)
    r0 = min(md, (n - 1) // 2)
    r0p = max(md - nu, 0)
    cands = tuple((r, n - 1 - r) for r in range(r0, r0p - 1, -1))
    return SplittingRange(r0, r0p, cands)


# ---------------------------------------------------------------------------
# property [P]

@dataclass(frozen=True)
class PropertyPResult:
    holds: str | None  # None | "variant1"
    H: int
    alpha: HomPoly | None = None          # linear form on the line
    alpha_lifted: tuple[Fraction, ...] | None = None  # same form in x,y,z
    theta1: str | None = None

    def to_json(self) -> dict:
        doc: dict = {"holds": self.holds, "H": self.H}
        if self.alpha is not None:
            doc["alpha"] = str(self.alpha)
            doc["alpha_lifted"] = [str(c) for c in self.alpha_lifted]
            doc["theta1"] = self.theta1
        return doc


def _coords_matrix(th1: Derivation2, th2: Derivation2, k: int):
    """Columns expressing degree-k module elements in the given basis."""
    cols = []
    e1, e2 = th1.degree, th2.degree
    for base in (th1, th2):
        e = base.degree
        if k < e:
            continue
        for mono in _binary_monomials(k - e):
            cols.append(Derivation2(mono * base.p, mono * base.q).coeff_vector())
    return [[cols[c][r] for c in range(len(cols))] for r in range(2 * (k + 1))]


def _binary_monomials(d: int) -> list[HomPoly]:
    out = []
    for i in range(d + 1):
        coeffs = [Fraction(0)] * (d + 1)
        coeffs[i] = Fraction(1)
        out.append(HomPoly(2, d, tuple(coeffs)))
    return out


def _im_coords(A: Arrangement, H: int, th1: Derivation2, th2: Derivation2,
               k: int) -> list[tuple[HomPoly | None, HomPoly | None]]:
    """Basis-coordinates (p, q) with v = p*theta1 + q*theta2, one pair per
    image vector at degree k; a None block means that degree is too low."""
    matrix = _coords_matrix(th1, th2, k)
    e1, e2 = th1.degree, th2.degree
    n1 = k - e1 + 1 if k >= e1 else 0
    n2 = k - e2 + 1 if k >= e2 else 0
    out = []
    for v in _image_vectors(A, H, k):
        if not any(v):
            continue
        sol = linalg.solve_unique(matrix, list(v), n1 + n2)
        if sol is None:
            raise ConsistencyFailure(
                f"restricted derivation outside the free module at line {H}")
        p = HomPoly(2, k - e1, tuple(sol[:n1])) if n1 else None
        q = HomPoly(2, k - e2, tuple(sol[n1:])) if n2 else None
        out.append((p, q))
    return out


def _lift(alpha: HomPoly, param: LineParam) -> tuple[Fraction, ...]:
    u, v = param.retained
    out = [Fraction(0)] * 3
    out[u] = alpha.coefficient((1, 0))
    out[v] = alpha.coefficient((0, 1))
    return tuple(out)


def property_P(A: Arrangement, H: int) -> PropertyPResult:
    """Decide whether some basis of the restriction's derivation module and
    some nonzero linear form witness a proper image containing one basis
    vector and a linear multiple of the other."""
    if not 0 <= H < len(A):
        raise IndexError("line index out of range")
    M, param = ziegler_restriction(A, H)
    exp = exponents(M)
    e1, e2 = exp.e1, exp.e2
    if chi0(A).b2_0 - e1 * e2 <= 0:
        return PropertyPResult(None, H)  # the map is surjective
    th1, th2 = basis(M)
    if e1 < e2:
        if _im_coords(A, H, th1, th2, e1):
            # theta1 is in the image (degree-e1 layer is spanned by theta1);
            # look for a linear theta2-coordinate one past the top degree
            for p, q in _im_coords(A, H, th1, th2, e2 + 1):
                if q is not None and not q.is_zero:
                    return PropertyPResult("variant1", H, q, _lift(q, param),
                                           str_derivation(th2))
            return PropertyPResult(None, H)
        # theta1 not in the image: need theta2 reachable exactly and a linear
        # multiple of theta1 in the image
        has_theta2 = any(q is not None and not q.is_zero
                         for _, q in _im_coords(A, H, th1, th2, e2))
        if not has_theta2:
            return PropertyPResult(None, H)
        # look for a nonzero combination of image elements with vanishing
        # theta2-coordinate; its theta1-coordinate is the linear witness
        coords = _im_coords(A, H, th1, th2, e1 + 1)
        if not coords:
            return PropertyPResult(None, H)
        if e1 + 1 < e2:
            combos = [[Fraction(1)] + [Fraction(0)] * (len(coords) - 1)]
        else:
            qmat = [[c[1].coeffs[j] for c in coords]
                    for j in range(e1 + 1 - e2 + 1)]
            combos = linalg.kernel_basis(qmat, len(coords))
        for combo in combos:
            p = None
            for w, (pc, _) in zip(combo, coords):
                term = pc.scale(w)
                p = term if p is None else p + term
            if p is not None and not p.is_zero:
                return PropertyPResult("variant1", H, p, _lift(p, param),
                                       str_derivation(th1))
        return PropertyPResult(None, H)
    # e1 == e2: pick the basis vector inside the image, then proceed as above
    for p0, q0 in _im_coords(A, H, th1, th2, e1):
        c1 = p0.coeffs[0] if p0 is not None else Fraction(0)
        c2 = q0.coeffs[0] if q0 is not None else Fraction(0)
        for p, q in _im_coords(A, H, th1, th2, e1 + 1):
            # coordinate on the completed second basis vector
            if c1 != 0:
                adj = (q - p.scale(c2 / c1)) if q is not None else None
                partner = str_derivation(th2)
            else:
                adj = p
                partner = str_derivation(th1)
            if adj is not None and not adj.is_zero:
                return PropertyPResult("variant1", H, adj, _lift(adj, param),
                                       partner)
        break  # the image layer has dimension <= 1 when the map is not onto
    return PropertyPResult(None, H)


def str_derivation(t: Derivation2) -> str:
    return f"({t.p})*d/du + ({t.q})*d/dv"


# ---------------------------------------------------------------------------
# umbrella validator

@dataclass(frozen=True)
class Check:
    id: str
    status: str  # pass | fail | na | one-sided
    detail: str

    def to_json(self) -> dict:
        return {"id": self.id, "status": self.status, "detail": self.detail}


@dataclass(frozen=True)
class TheoremReport:
    arrangement: Arrangement
    classification: object
    lines: tuple[DefectReport, ...]
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def check(self, check_id: str) -> Check:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def to_json(self) -> dict:
        return {"arrangement": to_document(self.arrangement),
                "classification": self.classification.to_json(),
                "lines": [{"H": d.H, "exponents": list(d.exponents),
                           "defect": d.defect, "n_H": n_H(self.arrangement, d.H),
                           "coker_by_degree": list(d.coker_by_degree)}
                          for d in self.lines],
                "checks": [c.to_json() for c in self.checks]}


def _sorted_pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


def verify(A: Arrangement, seed: int = 1, external_count: int = 20) -> TheoremReport:
    """Run the full battery of structural checks on one arrangement."""
    n = len(A)
    cls = classify(A)
    chi = chi0(A)
    b2 = chi.b2_0
    nr = nr_form(A)
    bal = is_balanced(A)
    defects = tuple(yoshinaga_defect(A, H) for H in range(n))
    nhs = [n_H(A, H) for H in range(n)]
    z_exps = [d.exponents for d in defects]
    checks: list[Check] = []

    free = cls.verdict == "free"
    nf = cls.verdict == "nearly-free"
    pog_wide = cls.is_plus_one  # nearly free or plus-one generated
    if pog_wide:
        a, b = cls.exponents
        d_lvl = cls.level
    externals = random_external_lines(A, external_count, seed)
    ext_types = [_external_splitting(A, f) for f in externals]
    all_types = ([_sorted_pair(*e) for e in z_exps]
                 + [st.as_pair() for st in ext_types])

    def add(cid: str, status: str, detail: str):
        checks.append(Check(cid, status, detail))

    # free arrangements restrict with their own exponents, surjectively
    if free:
        fa, fb = cls.exponents
        bad = [H for H, e in enumerate(z_exps) if _sorted_pair(*e) != (fa, fb)]
        bad += [d.H for d in defects if d.coker_total != 0]
        add("thm1.2", "fail" if bad else "pass",
            f"free({fa},{fb}); deviating lines {sorted(set(bad))}" if bad
            else f"all restrictions have exponents ({fa},{fb}) and zero cokernel")
    else:
        add("thm1.2", "na", "not free")

    # defect equals cokernel dimension; zero exactly in the free case
    zero_lines = [d.H for d in defects if d.defect == 0]
    consistent = all(d.defect == d.coker_total and d.defect >= 0 for d in defects)
    iff_ok = (len(zero_lines) == n) if free else (not zero_lines)
    add("thm1.3", "pass" if consistent and iff_ok else "fail",
        f"defects {[d.defect for d in defects]}; free={free}")

    # defect-1 witness scan vs the nearly-free verdict
    witness = next((d.H for d in defects if d.defect == 1), None)
    if witness is None:
        ext_w = next((f for f, st in zip(externals, ext_types)
                      if b2 - st.e1 * st.e2 == 1), None)
        witness = ext_w
    if witness is not None:
        add("thm1.5", "pass" if nf else "fail",
            f"defect-1 witness {witness}; verdict {cls.verdict}")
    elif nf:
        add("thm1.5", "fail", "nearly free but no defect-1 line found in A")
    else:
        add("thm1.5", "one-sided",
            "no defect-1 witness in the finite scan; verdict not nearly free")

    # property [P] holds somewhere iff plus-one generated (wide sense)
    p_hold = None
    for H in range(n):
        res = property_P(A, H)
        if res.holds:
            p_hold = res
            break
    add("thm1.6", "pass" if (p_hold is not None) == pog_wide else "fail",
        f"property holds at H={p_hold.H if p_hold else None}; "
        f"verdict {cls.verdict}")

    # nearly free: restriction exponents drop one from (a,b)
    if nf:
        allowed = {_sorted_pair(a - 1, b), _sorted_pair(a, b - 1)}
        bad = [H for H, e in enumerate(z_exps) if _sorted_pair(*e) not in allowed]
        add("thm1.7", "fail" if bad else "pass",
            f"exponents {z_exps} vs allowed {sorted(allowed)}")
    else:
        add("thm1.7", "na", "not nearly free")

    # free case point-count dichotomy
    if free:
        fa, fb = cls.exponents
        n0, r = fa, fb - fa
        bad = [H for H, v in enumerate(nhs) if not (v <= n0 + 1 or v == n0 + r + 1)]
        add("thm2.3", "fail" if bad else "pass",
            f"n_H values {nhs}, bounds n+1={n0 + 1}, n+r+1={n0 + r + 1}")
    else:
        add("thm2.3", "na", "not free")

    # heavy lines force the restriction exponents
    bad = [H for H in range(n)
           if 2 * nhs[H] >= n + 1
           and _sorted_pair(*z_exps[H]) != _sorted_pair(n - nhs[H], nhs[H] - 1)]
    add("prop2.5", "fail" if bad else "pass",
        f"heavy lines {[H for H in range(n) if 2 * nhs[H] >= n + 1]}")

    # balanced restrictions have close exponents
    bad = []
    for H, d in enumerate(defects):
        M, _ = ziegler_restriction(A, H)
        if max(M.mult, default=0) * 2 <= n - 1 and len(M.forms) > 2:
            e1, e2 = d.exponents
            if e2 - e1 > nhs[H] - 2:
                bad.append(H)
    add("thm2.7", "fail" if bad else "pass", f"violations {bad}")

    # deletion two-of-three
    violations = []
    applicable = False
    for H in range(n):
        if n < 2:
            break
        Ad = A.without(H)
        del_exp = free_exponents_by_defect(Ad) if len(Ad) >= 1 else None
        s1 = del_exp is not None
        if s1:
            ab = del_exp
        elif nf:
            ab = (cls.exponents[0] - 1, cls.exponents[1] - 1)
        else:
            continue
        da, db = ab
        s2 = nf and _sorted_pair(*cls.exponents) == _sorted_pair(da + 1, db + 1)
        s3 = nhs[H] == db + 2
        held = [s for s in (s1, s2, s3) if s]
        if len(held) >= 2:
            applicable = True
            if not (s1 and s2 and s3):
                violations.append((H, s1, s2, s3))
    if not applicable:
        add("thm2.8", "na", "no line with two of the three conditions")
    else:
        add("thm2.8", "fail" if violations else "pass",
            f"violations {violations}")

    # point-count gap under the residual-1 normal form
    if nr is not None and nr.c == 1 and nr.r != 2:
        bad = [H for H, v in enumerate(nhs) if nr.n + 1 < v < nr.n + nr.r + 1]
        add("prop3.1", "fail" if bad else "pass",
            f"n={nr.n}, r={nr.r}; gap violations {bad}")
    else:
        add("prop3.1", "na", "normal form residual is not 1 (or r = 2)")

    # balanced + matching point count forces near-freeness
    if (bal.balanced and nr is not None and nr.c == 1 and nr.r != 2
            and any(nr.r == v - 2 for v in nhs)):
        add("prop3.2", "pass" if nf else "fail",
            f"balanced, r={nr.r}=n_H-2 for some H; verdict {cls.verdict}")
    else:
        add("prop3.2", "na", "hypotheses not met")

    # nearly free point-count ceiling
    if nf:
        over = [H for H, v in enumerate(nhs) if v > b + 1]
        generic4 = (n == 4 and all(p.multiplicity == 2
                                   for p in intersection_points(A)))
        strict = generic4 or any(v < b + 1 for v in nhs)
        add("prop3.5", "fail" if over or not strict else "pass",
            f"n_H {nhs}, ceiling {b + 1}, generic4={generic4}")
        tops = [H for H, v in enumerate(nhs) if v == b + 1]
        pair_bad = []
        pts = intersection_points(A)
        for i in range(len(tops)):
            for j in range(i + 1, len(tops)):
                pt = next(p for p in pts
                          if tops[i] in p.incident_lines and tops[j] in p.incident_lines)
                if pt.multiplicity != 2:
                    pair_bad.append((tops[i], tops[j]))
        add("cor3.6", "fail" if pair_bad else "pass",
            f"lines at ceiling {tops}; non-double meets {pair_bad}")
    else:
        add("prop3.5", "na", "not nearly free")
        add("cor3.6", "na", "not nearly free")

    # every splitting type sums to |A| - 1
    bad_sum = [t for t in all_types if t[0] + t[1] != n - 1]
    add("prop4.1", "fail" if bad_sum else "pass",
        f"{len(all_types)} splitting types checked")

    # plus-one generated: splitting types live in a 3-element set
    if pog_wide:
        allowed = {_sorted_pair(a - 1, b), _sorted_pair(a, b - 1),
                   _sorted_pair(a + b - d_lvl - 1, d_lvl)}
        bad = [t for t in all_types if t not in allowed]
        add("thm4.3", "fail" if bad else "pass",
            f"types {sorted(set(all_types))} vs allowed {sorted(allowed)}")
    else:
        add("thm4.3", "na", "not plus-one generated")

    # with b < d the extreme restriction type occurs at most once
    if pog_wide and b < d_lvl:
        extreme = _sorted_pair(a + b - d_lvl - 1, d_lvl)
        hits = [H for H, e in enumerate(z_exps) if _sorted_pair(*e) == extreme]
        add("lemma4.4", "fail" if len(hits) > 1 else "pass",
            f"lines with extreme type {extreme}: {hits}")
        tops = [H for H, v in enumerate(nhs) if v == d_lvl + 1]
        add("cor4.5", "fail" if len(tops) > 1 else "pass",
            f"lines with n_H = {d_lvl + 1}: {tops}")
    else:
        add("lemma4.4", "na", "level equals the top exponent (or not POG)")
        add("cor4.5", "na", "level equals the top exponent (or not POG)")

    # plus-one generated point-count ceiling and value list
    if pog_wide:
        over = [H for H, v in enumerate(nhs) if v > d_lvl + 1]
        add("prop4.6", "fail" if over else "pass",
            f"n_H {nhs}, ceiling {d_lvl + 1}")
        allowed_vals = {a, a + 1, b, b + 1, d_lvl + 1}
        bad = [H for H, v in enumerate(nhs) if v >= a and v not in allowed_vals]
        add("prop4.7", "fail" if bad else "pass",
            f"n_H {nhs} vs allowed {sorted(allowed_vals)}")
    else:
        add("prop4.6", "na", "not plus-one generated")
        add("prop4.7", "na", "not plus-one generated")

    return TheoremReport(A, cls, defects, tuple(checks))
