"""Deterministic Buchberger engine over the rationals.

Works in the bigraded ring S = Q[x_1..x_m, a_1..a_n]: reduced Groebner
bases, normal forms, exact bigraded Hilbert series (K-polynomials),
elimination, ideal intersection, saturation, and radical membership.

Implementation notes:

* the fixed monomial order is graded reverse lexicographic with the
  x-block more significant than the a-block (x_1 is the top variable);
* coefficient arithmetic is fraction-free: basis elements are primitive
  integer polynomials and reductions track a single integer scale factor,
  with content stripped after every completed reduction;
* pair selection follows the normal strategy (least lcm degree, ties by
  lex on the lcm), with the Gebauer-Moeller product and chain criteria;
* the reduced basis is unique for a given order, so results are
  reproducible regardless of pair-processing details.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from .linalg import RowSpace
from .poly import (
    MPoly,
    Mono,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
)

_ZERO = Fraction(0)


# -- monomial orders ---------------------------------------------------------


class GrevlexOrder:
    """Graded reverse lexicographic; variable 0 is the most significant."""

    def __init__(self, nvars: int):
        self.nvars = nvars
        self._keys: Dict[Mono, tuple] = {}
        self._negkeys: Dict[Mono, tuple] = {}

    def key(self, mono: Mono) -> tuple:
        k = self._keys.get(mono)
        if k is None:
            k = (sum(mono), tuple(-e for e in reversed(mono)))
            self._keys[mono] = k
        return k

    def negkey(self, mono: Mono) -> tuple:
        """Key whose ascending order is the descending monomial order."""
        k = self._negkeys.get(mono)
        if k is None:
            k = (-sum(mono), tuple(reversed(mono)))
            self._negkeys[mono] = k
        return k

    def __repr__(self):
        return f"GrevlexOrder({self.nvars})"


class BlockOrder:
    """Elimination order: grevlex on a front block, then grevlex on the rest.

    Any monomial involving a front variable is larger than any monomial
    free of them, so the front block can be eliminated by discarding basis
    elements that touch it.
    """

    def __init__(self, nvars: int, front: Iterable[int]):
        self.nvars = nvars
        self.front = tuple(sorted(front))
        fset = set(self.front)
        self.rest = tuple(i for i in range(nvars) if i not in fset)
        self._keys: Dict[Mono, tuple] = {}
        self._negkeys: Dict[Mono, tuple] = {}

    def key(self, mono: Mono) -> tuple:
        k = self._keys.get(mono)
        if k is None:
            f = tuple(mono[i] for i in self.front)
            r = tuple(mono[i] for i in self.rest)
            k = (
                sum(f),
                tuple(-e for e in reversed(f)),
                sum(r),
                tuple(-e for e in reversed(r)),
            )
            self._keys[mono] = k
        return k

    def negkey(self, mono: Mono) -> tuple:
        k = self._negkeys.get(mono)
        if k is None:
            f = tuple(mono[i] for i in self.front)
            r = tuple(mono[i] for i in self.rest)
            k = (-sum(f), tuple(reversed(f)), -sum(r), tuple(reversed(r)))
            self._negkeys[mono] = k
        return k

    def __repr__(self):
        return f"BlockOrder({self.nvars}, front={self.front})"


# -- ideals ------------------------------------------------------------------


@dataclass(frozen=True)
class BigradedIdeal:
    """An ideal of S = Q[x_1..x_m, a_1..a_n] with bihomogeneous generators."""

    xdim: int
    adim: int
    generators: Tuple[MPoly, ...]

    def __post_init__(self):
        nv = self.xdim + self.adim
        for g in self.generators:
            if g.nvars != nv:
                raise ValueError("generator has wrong variable count")
            if g.is_zero():
                raise ValueError("zero generator")
            g.bidegree(self.xdim)  # raises if not bihomogeneous

    @property
    def nvars(self) -> int:
        return self.xdim + self.adim

    def bidegrees(self) -> List[Tuple[int, int]]:
        return [g.bidegree(self.xdim) for g in self.generators]

    def to_json_dict(self) -> dict:
        return {
            "xdim": self.xdim,
            "adim": self.adim,
            "generators": [
                {"coeffs": g.to_coeff_map(), "bidegree": list(g.bidegree(self.xdim))}
                for g in self.generators
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "BigradedIdeal":
        nv = int(data["xdim"]) + int(data["adim"])
        gens = tuple(MPoly.from_coeff_map(nv, g["coeffs"]) for g in data["generators"])
        return cls(int(data["xdim"]), int(data["adim"]), gens)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, tail-reduced, sorted by leading term."""

    xdim: int
    adim: int
    polys: Tuple[MPoly, ...]
    order: object = field(compare=False, hash=False)

    def lead_monomials(self) -> List[Mono]:
        return [max(p.terms, key=self.order.key) for p in self.polys]

    def contains(self, p: MPoly) -> bool:
        return normal_form(p, self).is_zero()

    def contains_one(self) -> bool:
        nv = self.xdim + self.adim
        return any(p == MPoly.const(nv, 1) for p in self.polys)

    def to_json_dict(self) -> dict:
        return {
            "xdim": self.xdim,
            "adim": self.adim,
            "basis": [p.to_coeff_map() for p in self.polys],
        }


# -- integer polynomial internals -------------------------------------------


class _GBP:
    """Primitive integer polynomial with cached leading data."""

    __slots__ = ("terms", "lt", "lc")

    def __init__(self, terms: Dict[Mono, int], order):
        self.terms = terms
        self.lt = max(terms, key=order.key)
        self.lc = terms[self.lt]


def _strip_content(terms: Dict[Mono, int], order) -> Dict[Mono, int]:
    g = 0
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        terms = {m: c // g for m, c in terms.items()}
    lt = max(terms, key=order.key)
    if terms[lt] < 0:
        terms = {m: -c for m, c in terms.items()}
    return terms


def _to_int_terms(p: MPoly) -> Tuple[Dict[Mono, int], Fraction]:
    """Scale to integer coefficients; returns (terms, lam) with terms = lam * p."""
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    num = 0
    for c in p.terms.values():
        num = gcd(num, c.numerator * (den // c.denominator))
    lam = Fraction(den, num if num else 1)
    return {m: int(c * lam) for m, c in p.terms.items()}, lam


def _nf_int(p: Dict[Mono, int], reducers: Sequence[_GBP], order) -> Tuple[Dict[Mono, int], int]:
    """Fraction-free full normal form.

    Returns (terms, scale) with terms / scale the true normal form of p
    with respect to the reducers (first matching reducer wins).
    """
    if not p:
        return {}, 1
    negkey = order.negkey
    work = dict(p)
    heap = [(negkey(m), m) for m in work]
    heapq.heapify(heap)
    entries: List[Tuple[Mono, int, int]] = []
    scale = 1
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, 0)
        if not c:
            continue
        red = None
        for g in reducers:
            if mono_divides(g.lt, m):
                red = g
                break
        if red is None:
            entries.append((m, c, scale))
            continue
        d = gcd(c, red.lc)
        factor = red.lc // d
        if factor != 1:
            scale *= factor
            for mm in work:
                work[mm] *= factor
            c *= factor
        k = c // red.lc
        t = mono_div(m, red.lt)
        lt = red.lt
        for m2, c2 in red.terms.items():
            if m2 == lt:
                continue
            mm = mono_mul(t, m2)
            old = work.get(mm)
            if old is None:
                work[mm] = -k * c2
                heapq.heappush(heap, (negkey(mm), mm))
            else:
                new = old - k * c2
                if new:
                    work[mm] = new
                else:
                    del work[mm]
    if not entries:
        return {}, scale
    out = {m: c * (scale // s) for m, c, s in entries}
    return out, scale


def _spoly_int(f: _GBP, g: _GBP) -> Dict[Mono, int]:
    l = mono_lcm(f.lt, g.lt)
    tf, tg = mono_div(l, f.lt), mono_div(l, g.lt)
    d = gcd(f.lc, g.lc)
    cf, cg = g.lc // d, f.lc // d
    out: Dict[Mono, int] = {}
    for m, c in f.terms.items():
        mm = mono_mul(tf, m)
        out[mm] = out.get(mm, 0) + cf * c
    for m, c in g.terms.items():
        mm = mono_mul(tg, m)
        acc = out.get(mm, 0) - cg * c
        if acc:
            out[mm] = acc
        else:
            out.pop(mm, None)
    return {m: c for m, c in out.items() if c}


def _update(G: List[int], B: Set[Tuple[int, int]], ih: int, polys: List[_GBP]):
    """Gebauer-Moeller pair update on adding polys[ih] to the basis."""
    lth = polys[ih].lt

    def lcm_with(ig):
        return mono_lcm(lth, polys[ig].lt)

    C = sorted(G)
    D: List[int] = []
    while C:
        ig = C.pop(0)
        l = lcm_with(ig)
        coprime = l == mono_mul(lth, polys[ig].lt)
        if coprime or not any(
            mono_divides(lcm_with(ix), l) for ix in C + D
        ):
            D.append(ig)
    E = [ig for ig in D if lcm_with(ig) != mono_mul(lth, polys[ig].lt)]

    B_new: Set[Tuple[int, int]] = set()
    for (i1, i2) in B:
        l12 = mono_lcm(polys[i1].lt, polys[i2].lt)
        if (
            not mono_divides(lth, l12)
            or mono_lcm(polys[i1].lt, lth) == l12
            or mono_lcm(polys[i2].lt, lth) == l12
        ):
            B_new.add((i1, i2))
    for ig in E:
        B_new.add((min(ig, ih), max(ig, ih)))

    G_new = [ig for ig in G if not mono_divides(lth, polys[ig].lt)]
    G_new.append(ih)
    return G_new, B_new


def _buchberger_int(int_gens: List[Dict[Mono, int]], order) -> List[_GBP]:
    polys: List[_GBP] = []
    G: List[int] = []
    B: Set[Tuple[int, int]] = set()

    for gen in int_gens:
        h, _ = _nf_int(gen, [polys[i] for i in G], order)
        if h:
            polys.append(_GBP(_strip_content(h, order), order))
            G, B = _update(G, B, len(polys) - 1, polys)

    def pair_key(pair):
        i, j = pair
        l = mono_lcm(polys[i].lt, polys[j].lt)
        return (sum(l), l, i, j)

    while B:
        best = min(B, key=pair_key)
        B.discard(best)
        i, j = best
        s = _spoly_int(polys[i], polys[j])
        h, _ = _nf_int(s, [polys[k] for k in G], order)
        if h:
            polys.append(_GBP(_strip_content(h, order), order))
            G, B = _update(G, B, len(polys) - 1, polys)

    # minimal basis
    Gs = sorted(G, key=lambda i: order.key(polys[i].lt))
    minimal = [
        i
        for i in Gs
        if not any(j != i and mono_divides(polys[j].lt, polys[i].lt) for j in Gs)
    ]
    # tail reduction
    reduced: List[_GBP] = []
    for i in minimal:
        others = [polys[j] for j in minimal if j != i]
        r, _ = _nf_int(dict(polys[i].terms), others, order)
        reduced.append(_GBP(_strip_content(r, order), order))
    reduced.sort(key=lambda g: order.key(g.lt))
    return reduced


def _gbp_to_monic(g: _GBP, nvars: int) -> MPoly:
    lc = g.lc
    return MPoly(nvars, {m: Fraction(c, lc) for m, c in g.terms.items()}, _raw=True)


# -- public engine ------------------------------------------------------------


def buchberger(ideal: BigradedIdeal, order=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal under the fixed (or given) order."""
    nv = ideal.nvars
    if order is None:
        order = GrevlexOrder(nv)
    int_gens = [_to_int_terms(g)[0] for g in ideal.generators if not g.is_zero()]
    basis = _buchberger_int(int_gens, order)
    polys = tuple(_gbp_to_monic(g, nv) for g in basis)
    return GroebnerBasis(xdim=ideal.xdim, adim=ideal.adim, polys=polys, order=order)


def normal_form(p: MPoly, gb: GroebnerBasis) -> MPoly:
    """Unique normal form of p modulo the reduced basis."""
    if p.is_zero():
        return p
    order = gb.order
    terms, lam = _to_int_terms(p)
    reducers = [_GBP(_to_int_terms(q)[0], order) for q in gb.polys]
    out, scale = _nf_int(terms, reducers, order)
    inv = Fraction(1, 1) / (lam * scale)
    return MPoly(p.nvars, {m: c * inv for m, c in out.items()}, _raw=True)


def s_polynomial(f: MPoly, g: MPoly, order=None) -> MPoly:
    """S-polynomial over Q (for the reduction-to-zero property tests)."""
    if order is None:
        order = GrevlexOrder(f.nvars)
    fm, fc = max(f.terms, key=order.key), None
    gm = max(g.terms, key=order.key)
    fc, gc = f.terms[fm], g.terms[gm]
    l = mono_lcm(fm, gm)
    tf = MPoly(f.nvars, {mono_div(l, fm): 1 / fc}, _raw=False)
    tg = MPoly(g.nvars, {mono_div(l, gm): 1 / gc}, _raw=False)
    return tf * f - tg * g


# -- Hilbert series ------------------------------------------------------------


@dataclass(frozen=True)
class HilbertSeries:
    """Bigraded Hilbert series K(t,u) / ((1-t)^xdim (1-u)^adim)."""

    xdim: int
    adim: int
    numerator: MPoly  # K(t, u), integer coefficients

    def reduced(self) -> "HilbertSeries":
        """Cancel common (1-t) and (1-u) factors against the denominator."""
        one_minus_t = MPoly(2, {(0, 0): 1, (1, 0): -1})
        one_minus_u = MPoly(2, {(0, 0): 1, (0, 1): -1})
        num, xd, ad = self.numerator, self.xdim, self.adim
        while xd > 0 and one_minus_t.divides(num):
            num = num.div_exact(one_minus_t)
            xd -= 1
        while ad > 0 and one_minus_u.divides(num):
            num = num.div_exact(one_minus_u)
            ad -= 1
        return HilbertSeries(xd, ad, num)

    def series_equal(self, other: "HilbertSeries") -> bool:
        a, b = self.reduced(), other.reduced()
        return (a.xdim, a.adim, a.numerator) == (b.xdim, b.adim, b.numerator)

    def coefficient(self, a: int, b: int) -> int:
        """Coefficient of t^a u^b in the power-series expansion."""
        total = _ZERO
        for (i, j), c in self.numerator.terms.items():
            total += c * _count(a - i, self.xdim) * _count(b - j, self.adim)
        if total.denominator != 1:
            raise AssertionError("Hilbert function values must be integers")
        return int(total)

    def difference(self, other: "HilbertSeries") -> "HilbertSeries":
        if (self.xdim, self.adim) != (other.xdim, other.adim):
            raise ValueError("series with different denominators")
        return HilbertSeries(self.xdim, self.adim, self.numerator - other.numerator)

    def to_json_dict(self) -> dict:
        from .poly import taylor_at_one

        return {
            "xdim": self.xdim,
            "adim": self.adim,
            "numerator": self.numerator.to_coeff_map(),
            "numerator_at_one": taylor_at_one(self.numerator).to_coeff_map(),
        }


def _count(d: int, dim: int) -> int:
    """Monomials of degree d in dim variables (0 for d < 0)."""
    if d < 0:
        return 0
    if dim == 0:
        return 1 if d == 0 else 0
    return comb(d + dim - 1, dim - 1)


def hilbert_numerator(lead_monos: Sequence[Mono], weights: Sequence[int]) -> MPoly:
    """K-polynomial of a monomial ideal under a two-weight grading.

    ``weights[i]`` is 0 when variable i counts in t and 1 when it counts
    in u.  Uses the pivot-splitting recursion
    K(I) = K(I + (v)) + w_v * K(I : v), pivoting on the variable occurring
    in the most minimal generators (ties by variable index), with
    pairwise-coprime generator sets as the closed-form base case.
    """
    nv = len(weights)
    t_of = tuple((1, 0) if w == 0 else (0, 1) for w in weights)

    def wdeg(mono: Mono) -> Tuple[int, int]:
        a = b = 0
        for e, w in zip(mono, weights):
            if w == 0:
                a += e
            else:
                b += e
        return a, b

    one = MPoly.const(2, 1)
    memo: Dict[Tuple[Mono, ...], MPoly] = {}

    def minimalize(gens: Iterable[Mono]) -> Tuple[Mono, ...]:
        gens = sorted(set(gens))
        out = []
        for g in gens:
            if not any(h != g and mono_divides(h, g) for h in gens):
                out.append(g)
        return tuple(out)

    def rec(gens: Tuple[Mono, ...]) -> MPoly:
        if not gens:
            return one
        if any(not any(g) for g in gens):
            return MPoly.zero(2)
        cached = memo.get(gens)
        if cached is not None:
            return cached
        usage = [0] * nv
        for g in gens:
            for i, e in enumerate(g):
                if e:
                    usage[i] += 1
        vmax = max(usage)
        if vmax <= 1:
            out = one
            for g in gens:
                a, b = wdeg(g)
                out = out * (one - MPoly(2, {(a, b): 1}))
        else:
            v = usage.index(vmax)
            ev = tuple(1 if i == v else 0 for i in range(nv))
            plus = minimalize([g for g in gens if g[v] == 0] + [ev])
            colon = minimalize(
                [g[:v] + (g[v] - 1,) + g[v + 1:] if g[v] else g for g in gens]
            )
            wv = MPoly(2, {t_of[v]: 1})
            out = rec(plus) + wv * rec(colon)
        memo[gens] = out
        return out

    start = minimalize(lead_monos)
    return rec(start)


def hilbert_series(gb: GroebnerBasis) -> HilbertSeries:
    """Exact bigraded Hilbert series of S/I from the lead ideal.

    By the Macaulay principle the Hilbert function of S/I equals that of
    S modulo the lead ideal of any Groebner basis of I.
    """
    weights = [0] * gb.xdim + [1] * gb.adim
    leads = [max(p.terms, key=gb.order.key) for p in gb.polys]
    return HilbertSeries(gb.xdim, gb.adim, hilbert_numerator(leads, weights))


_oracle_cache: Dict = {}


def hilbert_function_oracle(ideal: BigradedIdeal, a: int, b: int, guard: int = 5000) -> int:
    """dim (S/I)_(a,b) by exact rank of generator multiples.

    Deliberately independent of the Groebner machinery: spans the bidegree
    (a,b) slice of the ideal by all monomial multiples of the generators
    and subtracts its rank from dim S_(a,b).  ``guard`` caps the slice
    dimension to keep accidental huge calls in check.
    """
    key = (ideal, a, b)
    if key in _oracle_cache:
        return _oracle_cache[key]
    m, n = ideal.xdim, ideal.adim
    total = _count(a, m) * _count(b, n)
    if total > guard:
        raise ResourceWarning(
            f"bidegree ({a},{b}) slice has dimension {total} > guard {guard}"
        )
    xmonos = {d: monomials_of_degree(m, d) for d in range(a + 1)}
    amonos = {d: monomials_of_degree(n, d) for d in range(b + 1)}
    order = GrevlexOrder(m + n)
    cols = sorted(
        (xm + am for xm in xmonos[a] for am in amonos[b]),
        key=order.key,
    )
    col_index = {mono: i for i, mono in enumerate(cols)}
    space = RowSpace()
    for g in ideal.generators:
        ga, gb_ = g.bidegree(m)
        if ga > a or gb_ > b:
            continue
        for xm in xmonos[a - ga]:
            for am in amonos[b - gb_]:
                mu = xm + am
                row = {col_index[mono_mul(mu, mono)]: c for mono, c in g.terms.items()}
                space.add(row)
    result = total - space.rank
    _oracle_cache[key] = result
    return result


# -- elimination, intersection, saturation, radical membership ----------------


def _bihomogeneous_components(p: MPoly, split: int) -> List[MPoly]:
    buckets: Dict[Tuple[int, int], Dict[Mono, Fraction]] = {}
    for mono, c in p.terms.items():
        kd = (sum(mono[:split]), sum(mono[split:]))
        buckets.setdefault(kd, {})[mono] = c
    return [MPoly(p.nvars, terms, _raw=True) for _, terms in sorted(buckets.items())]


def _dedup_generators(gens: Iterable[MPoly], xdim: int, adim: int) -> BigradedIdeal:
    seen = []
    for g in gens:
        if g.is_zero():
            continue
        mg = _monic(g)
        if mg not in seen:
            seen.append(mg)
    return BigradedIdeal(xdim, adim, tuple(seen))


def _monic(p: MPoly) -> MPoly:
    m = max(p.terms, key=grevlex_sort_key)
    lc = p.terms[m]
    if lc == 1:
        return p
    return MPoly(p.nvars, {mm: c / lc for mm, c in p.terms.items()}, _raw=True)


def grevlex_sort_key(mono: Mono) -> tuple:
    return (sum(mono), tuple(-e for e in reversed(mono)))


def eliminate(ideal: BigradedIdeal, variables: Iterable[int]) -> BigradedIdeal:
    """Intersection with the subring omitting the given variables.

    Computes a Groebner basis under a block order with the eliminated
    variables in front and keeps the basis elements free of them; each
    survivor is split into its bihomogeneous components.
    """
    elim = sorted(set(variables))
    nv = ideal.nvars
    order = BlockOrder(nv, elim)
    gb = buchberger(ideal, order=order)
    kept: List[MPoly] = []
    for p in gb.polys:
        if all(all(m[i] == 0 for i in elim) for m in p.terms):
            kept.extend(_bihomogeneous_components(p, ideal.xdim))
    return _dedup_generators(kept, ideal.xdim, ideal.adim)


def _extend(p: MPoly, nv_new: int) -> MPoly:
    return p.embed(nv_new, list(range(p.nvars)))


def _project_drop_last(p: MPoly, nv_new: int) -> MPoly:
    return MPoly(nv_new, {m[:-1]: c for m, c in p.terms.items()}, _raw=True)


def intersect(I: BigradedIdeal, J: BigradedIdeal) -> BigradedIdeal:
    """Ideal intersection via the single-tag-variable construction.

    I cap J = (z*I + (1-z)*J) cap S, with z a fresh variable placed last
    and eliminated through a block order.
    """
    if (I.xdim, I.adim) != (J.xdim, J.adim):
        raise ValueError("ideals live in different rings")
    nv = I.nvars
    z = MPoly.variable(nv + 1, nv)
    one = MPoly.const(nv + 1, 1)
    gens = [z * _extend(g, nv + 1) for g in I.generators]
    gens += [(one - z) * _extend(g, nv + 1) for g in J.generators]
    order = BlockOrder(nv + 1, [nv])
    basis = _buchberger_int([_to_int_terms(g)[0] for g in gens], order)
    kept: List[MPoly] = []
    for g in basis:
        if all(m[-1] == 0 for m in g.terms):
            p = _project_drop_last(_gbp_to_monic(g, nv + 1), nv)
            kept.extend(_bihomogeneous_components(p, I.xdim))
    return _dedup_generators(kept, I.xdim, I.adim)


def saturate(ideal: BigradedIdeal, g: MPoly) -> BigradedIdeal:
    """Saturation I : g^infinity via the extra-variable trick.

    (I + (1 - z*g)) cap S equals the saturation; z is eliminated through a
    block order.
    """
    nv = ideal.nvars
    z = MPoly.variable(nv + 1, nv)
    one = MPoly.const(nv + 1, 1)
    gens = [_extend(q, nv + 1) for q in ideal.generators]
    gens.append(one - z * _extend(g, nv + 1))
    order = BlockOrder(nv + 1, [nv])
    basis = _buchberger_int([_to_int_terms(q)[0] for q in gens], order)
    kept: List[MPoly] = []
    for q in basis:
        if all(m[-1] == 0 for m in q.terms):
            p = _project_drop_last(_gbp_to_monic(q, nv + 1), nv)
            kept.extend(_bihomogeneous_components(p, ideal.xdim))
    return _dedup_generators(kept, ideal.xdim, ideal.adim)


def radical_member(g: MPoly, ideal: BigradedIdeal) -> bool:
    """True iff g vanishes on the zero set of the ideal.

    Rabinowitsch trick: g is in the radical iff 1 lies in
    I + (1 - z*g) in the ring extended by a fresh variable z.
    """
    if g.is_zero():
        return True
    nv = ideal.nvars
    z = MPoly.variable(nv + 1, nv)
    one = MPoly.const(nv + 1, 1)
    gens = [_extend(q, nv + 1) for q in ideal.generators]
    gens.append(one - z * _extend(g, nv + 1))
    order = GrevlexOrder(nv + 1)
    basis = _buchberger_int([_to_int_terms(q)[0] for q in gens], order)
    return any(len(q.terms) == 1 and not any(q.lt) for q in basis)
