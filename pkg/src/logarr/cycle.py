"""Chow classes, multidegrees, and the verification layer.

The rational equivalence class of the biprojectivized critical-point
variety of an arrangement lives in Z[h,k] / (h^rank, k^n).  This module
computes that class as the multidegree of S/I from the bigraded Hilbert
series and machine-checks the identities tying it to arrangement
combinatorics:

* the cycle-class formula: the class equals the homogenized
  characteristic polynomial evaluated at (-h, k-h);
* its deletion-restriction recurrences at every hyperplane, at the level
  of characteristic polynomials, homogenized polynomials, and classes;
* normalization of the class (no h^rank term, k^rank coefficient one);
* the set-level deletion-restriction decomposition of the critical
  variety, via two-sided radical membership;
* Hilbert polynomial and highest-order pole coefficients as
  reparameterizations of the Tutte coefficients t_i0;
* the Solomon-Terao specialization and the Euler-characteristic identity
  of the logarithmic derivation complex.

All checks return :class:`Report` values with machine-readable payloads;
classes and polynomials compare exactly (integer coefficient tables), so
there are no tolerances anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb, factorial
from typing import Dict, List, Optional, Tuple

from .arrangement import Arrangement, Restriction
from .groebner import (
    BigradedIdeal,
    GroebnerBasis,
    HilbertSeries,
    _count,
    buchberger,
    hilbert_function_oracle,
    hilbert_series,
    intersect,
    normal_form,
    radical_member,
)
from .logder import (
    FreenessCertificate,
    dp_generators,
    dp_slice,
    freeness,
    p_poly_free,
)
from .logideal import log_ideal
from .poly import (
    MPoly,
    TruncatedRing,
    binomial_polynomial,
    taylor_at_one,
)

# -- Chow classes -------------------------------------------------------------


class CodimensionMismatch(ValueError):
    """The substituted K-polynomial has nonzero parts below the codimension."""


@dataclass(frozen=True)
class ChowClass:
    """Homogeneous element of Z[h,k]/(h^hbound, k^kbound)."""

    ring: TruncatedRing
    poly: MPoly  # bivariate in (h, k), already reduced

    @classmethod
    def make(cls, ring: TruncatedRing, poly: MPoly) -> "ChowClass":
        return cls(ring, ring.reduce(poly))

    def coeff(self, i: int, j: int) -> int:
        c = self.poly.coeff((i, j))
        if c.denominator != 1:
            raise AssertionError("Chow class coefficients must be integers")
        return int(c)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def lift(self, ring: TruncatedRing) -> "ChowClass":
        """Reinterpret the coefficient table in a larger truncated ring."""
        if ring.hbound < self.ring.hbound or ring.kbound < self.ring.kbound:
            raise ValueError("lift target ring must be at least as large")
        return ChowClass.make(ring, self.poly)

    def scaled(self, c) -> "ChowClass":
        return ChowClass.make(self.ring, self.poly * c)

    def times(self, p: MPoly) -> "ChowClass":
        return ChowClass.make(self.ring, self.poly * p)

    def format(self) -> str:
        return self.poly.format(["h", "k"])

    def to_json_dict(self) -> dict:
        return {
            "hbound": self.ring.hbound,
            "kbound": self.ring.kbound,
            "coefficients": {
                f"{i},{j}": str(c) for (i, j), c in sorted(self.poly.terms.items())
            },
        }


_H = MPoly.variable(2, 0)
_K = MPoly.variable(2, 1)
_ONE2 = MPoly.const(2, 1)


def substituted_numerator(hs: HilbertSeries) -> MPoly:
    """K(1-h, 1-k), the untruncated multidegree generating polynomial."""
    return hs.numerator.compose([_ONE2 - _H, _ONE2 - _K])


def multidegree(hs: HilbertSeries, codim: int) -> ChowClass:
    """Multidegree of S/I: the degree-``codim`` part of K(1-h, 1-k).

    Reduces in Z[h,k]/(h^xdim, k^adim) and verifies that all homogeneous
    parts of degree below the codimension vanish there, signalling a
    codimension mismatch otherwise.
    """
    ring = TruncatedRing(hs.xdim, hs.adim)
    b = ring.reduce(substituted_numerator(hs))
    for d in range(codim):
        if not b.homogeneous_part(d).is_zero():
            raise CodimensionMismatch(
                f"nonzero part in degree {d} < codimension {codim}"
            )
    return ChowClass(ring, b.homogeneous_part(codim))


# -- reports -------------------------------------------------------------------


@dataclass
class Report:
    """Outcome of one verification on one fixture."""

    fixture: str
    check: str
    status: str  # "pass" | "fail" | "skipped"
    payload: dict = field(default_factory=dict)
    duration: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self, with_timing: bool = False) -> dict:
        out = {
            "fixture": self.fixture,
            "check": self.check,
            "status": self.status,
            "payload": self.payload,
        }
        if with_timing and self.duration is not None:
            out["duration_s"] = round(self.duration, 3)
        return out


def _report(fixture, check, ok: bool, payload=None) -> Report:
    return Report(fixture, check, "pass" if ok else "fail", payload or {})


# -- cached computation pipeline -------------------------------------------------


class Workspace:
    """Caches the expensive pipeline for one arrangement.

    Cycle computations always run on the essentialization; the heavy
    artifacts (derivation generators, the logarithmic ideal, its Groebner
    basis and Hilbert series, the class) are computed once and reused by
    every check.
    """

    def __init__(self, arrangement: Arrangement, name: str = "", max_degree: Optional[int] = None):
        self.input = arrangement
        self.arr = arrangement.essentialize()
        self.name = name or arrangement.name or "arrangement"
        self.max_degree = max_degree if max_degree is not None else self.arr.n

    @cached_property
    def search(self):
        return dp_generators(self.arr, 1, self.max_degree)

    @cached_property
    def cert(self) -> FreenessCertificate:
        return freeness(self.arr, self.search)

    @cached_property
    def ideal(self) -> BigradedIdeal:
        return log_ideal(self.arr, self.search)

    @cached_property
    def gb(self) -> GroebnerBasis:
        return buchberger(self.ideal)

    @cached_property
    def hs(self) -> HilbertSeries:
        return hilbert_series(self.gb)

    @cached_property
    def cycle_class(self) -> ChowClass:
        return multidegree(self.hs, self.arr.rank)

    @cached_property
    def ring(self) -> TruncatedRing:
        return TruncatedRing(self.arr.rank, self.arr.n)

    def chi_class(self) -> ChowClass:
        """The class predicted by combinatorics: sum t_i0 h^(rank-i) k^i."""
        return ChowClass.make(self.ring, self.arr.homog_char())

    def chi_class_direct(self) -> ChowClass:
        """Same prediction via direct substitution into the homogenized chi."""
        return ChowClass.make(self.ring, self.arr.chi_hom_at(-_H, _K - _H))


_WS_CACHE: Dict[Tuple[Arrangement, Optional[int]], Workspace] = {}


def workspace(arrangement: Arrangement, name: str = "", max_degree: Optional[int] = None) -> Workspace:
    key = (arrangement, max_degree)
    ws = _WS_CACHE.get(key)
    if ws is None:
        ws = Workspace(arrangement, name=name, max_degree=max_degree)
        _WS_CACHE[key] = ws
    return ws


def is_boolean(arr: Arrangement) -> bool:
    return arr.rank == arr.n


# -- the cycle-class formula -----------------------------------------------------


def check_cycle_class(ws: Workspace) -> Report:
    """Exact equality of the computed class with chihom(-h, k-h)."""
    lhs = ws.cycle_class
    rhs = ws.chi_class()
    rhs_direct = ws.chi_class_direct()
    ok = lhs == rhs == rhs_direct
    return _report(
        ws.name,
        "main",
        ok,
        {
            "class": lhs.to_json_dict(),
            "predicted": rhs.to_json_dict(),
            "class_formula": lhs.format(),
        },
    )


def check_monic(ws: Workspace) -> Report:
    """Normalization of the class before truncation.

    In the degree-rank part of K(1-h,1-k): the h^rank coefficient
    vanishes, and for a non-Boolean arrangement the k^rank coefficient
    is 1.
    """
    ell = ws.arr.rank
    if is_boolean(ws.arr):
        return Report(ws.name, "monic", "skipped", {"reason": "Boolean arrangement"})
    part = substituted_numerator(ws.hs).homogeneous_part(ell)
    h_top = part.coeff((ell, 0))
    k_top = part.coeff((0, ell))
    ok = h_top == 0 and k_top == 1
    return _report(ws.name, "monic", ok, {"h_top": str(h_top), "k_top": str(k_top)})


# -- recurrences -----------------------------------------------------------------


def chi_delres_identity(arr: Arrangement, i: int) -> bool:
    """chi(A) = chi(A') - chi(A''), or (t-1) chi(A') at a bridge."""
    t = MPoly.variable(1, 0)
    chi = arr.char_poly()
    chi_del = arr.delete(i).char_poly()
    if arr.is_bridge(i):
        return chi == (t - 1) * chi_del
    chi_res = arr.restrict(i).restricted.char_poly()
    return chi == chi_del - chi_res


def homog_recurrence_identity(arr: Arrangement, i: int) -> bool:
    """The recurrence of the homogenized characteristic polynomial.

    With f(B) = chihom(B, -s, t-s): f(A) = t f(A') at a bridge and
    f(A) = f(A') + s f(A'') otherwise, as exact bivariate polynomials.
    """
    s = MPoly.variable(2, 0)
    t = MPoly.variable(2, 1)
    f_a = arr.chi_hom_at(-s, t - s)
    f_del = arr.delete(i).chi_hom_at(-s, t - s)
    if arr.is_bridge(i):
        return f_a == t * f_del
    f_res = arr.restrict(i).restricted.chi_hom_at(-s, t - s)
    return f_a == f_del + s * f_res


def class_of(arr: Arrangement, method: str = "chi", max_degree: Optional[int] = None) -> ChowClass:
    """Cycle class of an arrangement, in its own truncated ring.

    ``method="chi"`` uses the combinatorial formula; ``method="groebner"``
    runs the full pipeline (derivations, logarithmic ideal, Groebner,
    multidegree) on the essentialization.
    """
    ess = arr.essentialize()
    if method == "chi":
        ring = TruncatedRing(ess.rank, ess.n)
        return ChowClass.make(ring, ess.homog_char())
    if method == "groebner":
        ws = workspace(ess, max_degree=max_degree)
        return ws.cycle_class
    raise ValueError(f"unknown class method {method!r}")


def check_class_recurrence(ws: Workspace, i: int, method: str = "chi") -> Report:
    """Deletion-restriction recurrence for cycle classes at hyperplane i.

    Bridge: [X(A)] = k [X(A')].  Otherwise
    k [X(A)] = k [X(A')] + h k^rank when the restriction is Boolean, and
    k [X(A)] = k [X(A')] + h k [X(A'')] in general; classes of the smaller
    arrangements are computed in their own rings and transported by
    reusing their coefficient tables.
    """
    arr = ws.arr
    ring = ws.ring
    ell = arr.rank
    cls_a = ws.cycle_class if method == "groebner" else class_of(arr, "chi")
    payload: dict = {"hyperplane": arr.labels[i], "method": method}
    if arr.is_bridge(i):
        cls_del = class_of(arr.delete(i), method, ws.max_degree).lift(ring)
        lhs = cls_a
        rhs = cls_del.times(_K)
        payload["case"] = "bridge"
    else:
        restriction = arr.restrict(i)
        cls_del = class_of(arr.delete(i), method, ws.max_degree).lift(ring)
        lhs = cls_a.times(_K)
        if is_boolean(restriction.restricted):
            rhs = ChowClass.make(
                ring, cls_del.poly * _K + _H * _K ** ell
            )
            payload["case"] = "restriction Boolean"
        else:
            cls_res = class_of(restriction.restricted, method, ws.max_degree).lift(ring)
            rhs = ChowClass.make(ring, cls_del.poly * _K + _H * _K * cls_res.poly)
            payload["case"] = "generic"
    ok = lhs == rhs
    payload["lhs"] = lhs.to_json_dict()
    payload["rhs"] = rhs.to_json_dict()
    return _report(ws.name, "recurrence", ok, payload)


def check_recurrence(ws: Workspace, method: str = "chi") -> Report:
    """All three recurrence layers at every hyperplane."""
    arr = ws.arr
    failures = []
    for i in range(arr.n):
        if not chi_delres_identity(arr, i):
            failures.append((arr.labels[i], "chi"))
        if not homog_recurrence_identity(arr, i):
            failures.append((arr.labels[i], "homogenized chi"))
        rep = check_class_recurrence(ws, i, method=method)
        if not rep.passed:
            failures.append((arr.labels[i], "class"))
    return _report(
        ws.name,
        "recurrence",
        not failures,
        {"hyperplanes": arr.n, "method": method, "failures": failures},
    )


# -- set-level deletion-restriction ------------------------------------------------


def check_delres_set(
    ws: Workspace, i: int, max_hyperplanes: int = 5, max_dim: int = 3
) -> Report:
    """Set-level decomposition of the critical variety over a_i = 0.

    Non-bridge: V(I + (a_i)) = V(J1) union V(J2) with J1 the extension of
    the deletion ideal and J2 the pullback of the restriction data,
    verified by two-sided radical membership.  Bridge: I + (a_i) equals J1
    exactly (plain two-sided membership) and its variety is contained in
    V(J2).  Fixtures beyond the size guard are reported as skipped.
    """
    arr = ws.arr
    if arr.n > max_hyperplanes or arr.m > max_dim:
        return Report(
            ws.name,
            "delres",
            "skipped",
            {"reason": f"size guard: n={arr.n}, m={arr.m}"},
        )
    m, n = arr.m, arr.n
    nv = m + n
    a_i = MPoly.variable(nv, m + i)
    ideal_j = BigradedIdeal(m, n, ws.ideal.generators + (a_i,))

    deletion = arr.delete(i)
    del_ideal = log_ideal(deletion)
    var_map = list(range(m)) + [m + j for j in range(n) if j != i]
    j1_gens = tuple(g.embed(nv, var_map) for g in del_ideal.generators) + (a_i,)
    ideal_j1 = BigradedIdeal(m, n, j1_gens)

    ideal_j2 = _restriction_pullback_ideal(arr, arr.restrict(i))

    payload: dict = {"hyperplane": arr.labels[i]}
    if arr.is_bridge(i):
        gb_j = buchberger(ideal_j)
        gb_j1 = buchberger(ideal_j1)
        equal = all(normal_form(g, gb_j1).is_zero() for g in ideal_j.generators) and all(
            normal_form(g, gb_j).is_zero() for g in ideal_j1.generators
        )
        contained = all(radical_member(g, ideal_j2) for g in ideal_j1.generators)
        ok = equal and contained
        payload.update({"case": "bridge", "ideals_equal": equal, "contained_in_pullback": contained})
    else:
        inter = intersect(ideal_j1, ideal_j2)
        fwd = all(radical_member(g, ideal_j) for g in inter.generators)
        bwd = all(radical_member(g, inter) for g in ideal_j.generators)
        ok = fwd and bwd
        payload.update({"case": "generic", "union_in_variety": fwd, "variety_in_union": bwd})
    return _report(ws.name, "delres", ok, payload)


def _restriction_pullback_ideal(arr: Arrangement, restriction: Restriction) -> BigradedIdeal:
    """Pullback of the restriction's logarithmic data to the big ring.

    Generators: the defining form of the restricted-to hyperplane, its
    weight variable, and the contractions of the restriction's derivation
    generators with the weight of each restricted hyperplane replaced by
    the sum of the weights mapping onto it.
    """
    from .logideal import contract

    m, n = arr.m, arr.n
    nv = m + n
    i = restriction.hyperplane
    app = restriction.restricted
    pivot = next(c for c, v in enumerate(arr.rows[i]) if v)
    free_cols = [c for c in range(m) if c != pivot]
    targets = [MPoly.variable(nv, c) for c in free_cols]
    for parents in restriction.sigma_weights():
        acc = MPoly.zero(nv)
        for j in parents:
            acc = acc + MPoly.variable(nv, m + j)
        targets.append(acc)
    gens: List[MPoly] = [
        MPoly.from_linear(arr.rows[i]).embed(nv),
        MPoly.variable(nv, m + i),
    ]
    for theta in dp_generators(app, 1, app.n).derivations():
        c = contract(theta, app)
        lifted = c.compose(targets)
        if not lifted.is_zero() and lifted not in gens:
            gens.append(lifted)
    return BigradedIdeal(m, n, tuple(gens))


# -- Hilbert polynomial and pole analysis -------------------------------------------


def hilbert_polynomial(hs: HilbertSeries) -> MPoly:
    """Exact bivariate Hilbert polynomial of S/I, in variables (p, q).

    Obtained from the K-polynomial by the binomial transform: each term
    c t^i u^j contributes c C(p-i+m-1, m-1) C(q-j+n-1, n-1), with the
    binomials read as polynomials.
    """
    m, n = hs.xdim, hs.adim
    p_var = MPoly.variable(2, 0)
    q_var = MPoly.variable(2, 1)
    out = MPoly.zero(2)
    for (i, j), c in sorted(hs.numerator.terms.items()):
        term = binomial_polynomial(p_var + (m - 1 - i), m - 1) * binomial_polynomial(
            q_var + (n - 1 - j), n - 1
        )
        out = out + c * term
    return out


def hilbert_polynomial_leading_check(ws: Workspace) -> Report:
    """Top-degree part of the Hilbert polynomial against the Tutte data.

    The homogeneous part of total degree n-2 must equal
    (1/(n-2)!) sum_i t_i0 C(n-2, i-1) p^(i-1) q^(n-1-i).
    """
    arr = ws.arr
    n = arr.n
    if n < 2:
        return Report(ws.name, "hpoly", "skipped", {"reason": "needs n >= 2"})
    hp = hilbert_polynomial(ws.hs)
    top = hp.homogeneous_part(n - 2)
    expected = MPoly.zero(2)
    tutte = arr.tutte
    from math import comb

    for i in range(1, arr.rank + 1):
        c = tutte.coeff((i, 0))
        if c:
            expected = expected + c * comb(n - 2, i - 1) * MPoly(
                2, {(i - 1, n - 1 - i): Fraction(1)}
            )
    expected = expected * Fraction(1, factorial(n - 2))
    ok = top == expected
    return _report(
        ws.name,
        "hpoly",
        ok,
        {
            "hilbert_polynomial": hp.to_coeff_map(),
            "leading_part": top.to_coeff_map(),
        },
    )


def leading_poles(hs: HilbertSeries) -> Dict[int, int]:
    """Coefficients of the total-order-n poles of the Hilbert series.

    Expanding K over the basis (1-t)^i (1-u)^j, the coefficient of the
    pole (1-t)^(-i) (1-u)^(-(n-i)) is kappa[m-i, i].
    """
    kappa = taylor_at_one(hs.numerator)
    m = hs.xdim
    out = {}
    for i in range(1, m + 1):
        c = kappa.coeff((m - i, i))
        if c.denominator != 1:
            raise AssertionError("pole coefficients must be integers")
        out[i] = int(c)
    return out


def check_leading_poles(ws: Workspace) -> Report:
    """Highest-order pole coefficients equal the Tutte coefficients t_i0."""
    arr = ws.arr
    if is_boolean(arr):
        return Report(ws.name, "hs-leading", "skipped", {"reason": "Boolean arrangement"})
    poles = leading_poles(ws.hs)
    tutte = arr.tutte
    expected = {i: int(tutte.coeff((i, 0))) for i in range(1, arr.rank + 1)}
    ok = poles == expected
    return _report(ws.name, "hs-leading", ok, {"poles": poles, "tutte_i0": expected})


# -- Tutte specialization and Solomon-Terao -----------------------------------------


_S = MPoly.variable(2, 0)
_T = MPoly.variable(2, 1)


def tutte_specialization(ws: Workspace) -> Report:
    """Specialize the Hilbert series along u = t - s t (1-t).

    G(s,t) = K(t, t - s t (1-t)) must be exactly divisible by (1-t)^m and
    the quotient at t = 1 must equal (-1)^rank chi(-s).
    """
    arr = ws.arr
    k_poly = ws.hs.numerator
    g = k_poly.compose([_T, _T - _S * _T * (_ONE2 - _T)])
    try:
        quot = g.div_exact((_ONE2 - _T) ** ws.hs.xdim)
    except Exception:
        return _report(ws.name, "tutte-spec", False, {"reason": "division not exact"})
    at_one = quot.compose([_S, _ONE2])
    expected = ((-1) ** arr.rank) * arr.char_poly().compose([-_S])
    ok = at_one == expected
    return _report(
        ws.name,
        "tutte-spec",
        ok,
        {"value_at_1": at_one.to_coeff_map(), "expected": expected.to_coeff_map()},
    )


def solomon_terao(ws: Workspace, tame: bool = False, bound: Optional[int] = None) -> Report:
    """Solomon-Terao specialization Psi(s,1) = (-1)^m chi(-s).

    Psi(s,t) = P(t, s t (1-t) - t) where P(x,y) collects the Hilbert
    series of all D_p.  Free arrangements use the closed form of P from
    the generator degrees; tame ones derive P from the K-polynomial;
    otherwise only truncated evidence up to a degree bound is reported.
    """
    arr = ws.arr
    m = arr.m
    expected = ((-1) ** m) * arr.char_poly().compose([-_S])
    payload: dict = {"expected": expected.to_coeff_map()}
    y_sub = _S * _T * (_ONE2 - _T) - _T
    if ws.cert.free:
        num, e = p_poly_free(ws.cert, m)
        psi_num = num.compose([_T, y_sub])
        try:
            psi = psi_num.div_exact((_ONE2 - _T) ** e)
        except Exception:
            return _report(ws.name, "solomon-terao", False, {"reason": "Psi not polynomial"})
        payload["path"] = "free"
    elif tame:
        g = ws.hs.numerator.compose([_T, _T - _S * _T * (_ONE2 - _T)])
        try:
            psi = g.div_exact((_ONE2 - _T) ** ws.hs.xdim)
        except Exception:
            return _report(ws.name, "solomon-terao", False, {"reason": "Psi not polynomial"})
        payload["path"] = "tame"
    else:
        if bound is None:
            bound = arr.n + 2
        psi = _psi_truncated(arr, bound)
        max_deg = psi.degree_in(1)
        tail_clear = max_deg <= bound - 2
        payload.update(
            {
                "path": "truncated",
                "bound": bound,
                "observed_t_degree": max_deg,
                "tail_clear": tail_clear,
            }
        )
        if not tail_clear:
            return Report(ws.name, "solomon-terao", "fail", payload)
    at_one = psi.compose([_S, _ONE2])
    ok = at_one == expected
    payload["value_at_1"] = at_one.to_coeff_map()
    return _report(ws.name, "solomon-terao", ok, payload)


def _psi_truncated(arr: Arrangement, bound: int) -> MPoly:
    """Truncation of Psi(s,t) at t-degree <= bound from graded dimensions."""
    m = arr.m
    y_sub = _S * _T * (_ONE2 - _T) - _T
    out = MPoly.zero(2)
    for p in range(m + 1):
        dims = [dp_slice(arr, p, d).dim for d in range(bound + 1)]
        hp = MPoly(2, {(0, d): Fraction(c) for d, c in enumerate(dims) if c})
        out = out + hp * (y_sub ** p)
    return MPoly(
        2, {mo: c for mo, c in out.terms.items() if mo[1] <= bound}, _raw=True
    )


# -- derivation-complex Euler characteristic ------------------------------------------


def dcplx_euler_check(ws: Workspace, bound: int = 4, tame: bool = False) -> Report:
    """Euler-characteristic identity of the logarithmic derivation complex.

    For every bidegree (a,b) with a+b <= bound:
    dim (S/I)_(a,b) = sum_p (-1)^p dim D_p(A)_a * C(b-p+n-1, n-1),
    the left side from the rank oracle, the right side from graded slices.
    Exactness of the complex holds under tameness, so non-tame fixtures
    are reported as skipped.
    """
    arr = ws.arr
    if not tame:
        return Report(ws.name, "dcplx", "skipped", {"reason": "not flagged tame"})
    m, n = arr.m, arr.n
    dims: Dict[Tuple[int, int], int] = {}
    for p in range(m + 1):
        for a in range(bound + 1):
            dims[(p, a)] = dp_slice(arr, p, a).dim
    mismatches = []
    checked = 0
    for a in range(bound + 1):
        for b in range(bound + 1 - a):
            lhs = hilbert_function_oracle(ws.ideal, a, b)
            rhs = 0
            for p in range(m + 1):
                rhs += ((-1) ** p) * dims[(p, a)] * _count(b - p, n)
            checked += 1
            if lhs != rhs:
                mismatches.append({"bidegree": [a, b], "lhs": lhs, "rhs": rhs})
    return _report(
        ws.name,
        "dcplx",
        not mismatches,
        {"bound": bound, "bidegrees_checked": checked, "mismatches": mismatches},
    )


# -- small consequences ------------------------------------------------------------


def beta_intersection(ws: Workspace) -> Report:
    """Reading the beta invariant off the class.

    The coefficient of h^(rank-1) k in the cycle class equals t_10.
    """
    arr = ws.arr
    ell = arr.rank
    from_class = ws.cycle_class.coeff(ell - 1, 1)
    ok = from_class == arr.beta()
    return _report(ws.name, "beta", ok, {"from_class": from_class, "beta": arr.beta()})


def chern_class(ws: Workspace) -> Report:
    """Top Chern class of the structure sheaf as a scalar multiple.

    c_rank = (-1)^(rank-1) (rank-1)! times the cycle class; the equivalent
    expression -(rank-1)! chihom(h, h-k) is computed independently and
    compared.
    """
    arr = ws.arr
    ell = arr.rank
    scalar = ((-1) ** (ell - 1)) * factorial(ell - 1)
    via_class = ws.cycle_class.scaled(scalar)
    via_chi = ChowClass.make(
        ws.ring, -factorial(ell - 1) * arr.chi_hom_at(_H, _H - _K)
    )
    ok = via_class == via_chi
    return _report(
        ws.name,
        "chern",
        ok,
        {"scalar": scalar, "class": via_class.to_json_dict()},
    )
