"""Graded logarithmic derivation and form modules by exact linear algebra.

For an arrangement with defining forms f_1..f_n in R = Q[x_1..x_m]:

* D_p is the module of logarithmic p-derivations: alternating p-derivations
  theta with theta(f_j, g_2, .., g_p) in (f_j) for every j and all g's.
  Since the slots depend only on differentials, it suffices to let the g's
  range over the coordinate functions, which turns each graded piece into
  a finite exact linear system.
* Omega^p is the module of logarithmic p-forms: omega = eta / f with eta a
  polynomial form such that f * d(omega) is again polynomial, i.e. every
  component of df_j wedge eta vanishes mod f_j.

Gradings: a p-derivation whose coefficients are homogeneous of degree c
sits in degree c - p (so the Euler derivation has degree 0); a p-form
eta / f with coefficients of degree c sits in degree c + p - n (so each
df_j / f_j has degree 0).  With these conventions the modules pair into
degree 0 and, on the free fixtures, D_p and Omega^(rank-p) agree up to the
empirically determined shift rank - n recorded by :func:`duality_shift`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .arrangement import Arrangement
from .linalg import QMatrix, RowSpace
from .poly import MPoly, Mono, count_monomials, mono_mul, monomials_of_degree

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Derivation:
    """A logarithmic vector field theta = sum p_i d/dx_i.

    Components are homogeneous polynomials of a common degree; the
    derivation degree is that degree minus one (Euler has degree 0).
    """

    components: Tuple[MPoly, ...]

    @property
    def m(self) -> int:
        return len(self.components)

    @property
    def degree(self) -> int:
        degs = {c.total_degree() for c in self.components if not c.is_zero()}
        if len(degs) != 1:
            raise ValueError("components are not homogeneous of a common degree")
        return degs.pop() - 1

    def apply_form(self, row: Sequence[Fraction]) -> MPoly:
        """theta(f) for a linear form f with the given coefficients."""
        out = MPoly.zero(self.m)
        for w, p in zip(row, self.components):
            if w:
                out = out + p * w
        return out

    def is_logarithmic(self, arr: Arrangement) -> bool:
        for row in arr.rows:
            form = MPoly.from_linear(row)
            if not form.divides(self.apply_form(row)):
                return False
        return True

    def to_json_list(self) -> list:
        return [c.to_coeff_map() for c in self.components]


def euler_derivation(m: int) -> Derivation:
    return Derivation(tuple(MPoly.variable(m, i) for i in range(m)))


@dataclass(frozen=True)
class GradedSlice:
    """Exact basis of one graded piece of D_p or Omega^p.

    Vectors are coefficient vectors over ``component_index`` x
    ``monomials``: unknown (I, mu) sits at position
    index(I) * len(monomials) + index(mu).
    """

    module: str  # "D" or "Omega"
    p: int
    degree: int
    component_index: Tuple[Tuple[int, ...], ...]
    monomials: Tuple[Mono, ...]
    vectors: Tuple[Tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def component_polys(self, vector: Sequence[Fraction]) -> Tuple[MPoly, ...]:
        m = len(self.monomials[0]) if self.monomials else 0
        nmono = len(self.monomials)
        out = []
        for ci in range(len(self.component_index)):
            terms = {}
            for k, mono in enumerate(self.monomials):
                c = vector[ci * nmono + k]
                if c:
                    terms[mono] = c
            out.append(MPoly(m, terms, _raw=True))
        return tuple(out)

    def to_json_dict(self) -> dict:
        return {
            "module": self.module,
            "p": self.p,
            "degree": self.degree,
            "dimension": self.dim,
            "basis": [
                [c.to_coeff_map() for c in self.component_polys(v)] for v in self.vectors
            ],
        }


def _pivot_reduction(row: Sequence[Fraction], coeff_degree: int, m: int):
    """Reduction of degree-``coeff_degree`` monomials modulo a linear form.

    Substitutes the pivot variable by the solved linear expression; returns
    (reduced-monomial list, map mono -> sparse coefficient dict).
    """
    t = next(i for i, w in enumerate(row) if w)
    subst = MPoly.from_linear(
        [(-w / row[t]) if i != t else _ZERO for i, w in enumerate(row)]
    )
    pows = [MPoly.const(m, 1)]
    while len(pows) <= coeff_degree:
        pows.append(pows[-1] * subst)
    out_monos = [mu for mu in monomials_of_degree(m, coeff_degree) if mu[t] == 0]
    out_index = {mu: i for i, mu in enumerate(out_monos)}
    cache: Dict[Mono, Dict[int, Fraction]] = {}

    def reduce_mono(mu: Mono) -> Dict[int, Fraction]:
        got = cache.get(mu)
        if got is None:
            rest = mu[:t] + (0,) + mu[t + 1:]
            got = {
                out_index[mono_mul(m2, rest)]: c for m2, c in pows[mu[t]].terms.items()
            }
            cache[mu] = got
        return got

    return out_monos, reduce_mono


def dp_slice(arr: Arrangement, p: int, degree: int) -> GradedSlice:
    """Degree piece of the logarithmic p-derivation module.

    For p = 0 this is just the polynomial ring in its natural grading.
    """
    m = arr.m
    if not 0 <= p <= m:
        raise ValueError(f"p must be between 0 and {m}")
    if p == 0:
        monos = tuple(monomials_of_degree(m, degree))
        vecs = tuple(
            tuple(Fraction(int(i == k)) for i in range(len(monos)))
            for k in range(len(monos))
        )
        return GradedSlice("D", 0, degree, ((),), monos, vecs)
    coeff_degree = degree + p
    comps = tuple(combinations(range(m), p))
    monos = tuple(monomials_of_degree(m, coeff_degree))
    nunk = len(comps) * len(monos)
    if coeff_degree < 0:
        return GradedSlice("D", p, degree, comps, (), ())
    comp_pos = {c: i for i, c in enumerate(comps)}
    rows: List[List[Fraction]] = []
    for w in arr.rows:
        out_monos, reduce_mono = _pivot_reduction(w, coeff_degree, m)
        for K in combinations(range(m), p - 1):
            # theta(f_j, x_K): sum over I = K + {i} of the cofactor w_i
            block: List[List[Fraction]] = [[_ZERO] * nunk for _ in out_monos]
            touched = False
            for i in range(m):
                if i in K:
                    continue
                I = tuple(sorted(K + (i,)))
                pos = I.index(i)
                coeff = w[i] if pos % 2 == 0 else -w[i]
                if not coeff:
                    continue
                touched = True
                base = comp_pos[I] * len(monos)
                for k, mu in enumerate(monos):
                    red = reduce_mono(mu)
                    for out_i, c in red.items():
                        block[out_i][base + k] += coeff * c
            if touched:
                rows.extend(block)
    if not rows:
        vectors = tuple(
            tuple(Fraction(int(i == k)) for i in range(nunk)) for k in range(nunk)
        )
    else:
        vectors = tuple(QMatrix(rows).kernel_basis())
    return GradedSlice("D", p, degree, comps, monos, vectors)


def omega_slice(arr: Arrangement, p: int, degree: int) -> GradedSlice:
    """Degree piece of the logarithmic p-form module.

    Elements are eta / f with eta polynomial; the linear conditions say
    each component of df_j wedge eta vanishes modulo f_j.
    """
    m, n = arr.m, arr.n
    if not 0 <= p <= m:
        raise ValueError(f"p must be between 0 and {m}")
    coeff_degree = degree - p + n
    comps = tuple(combinations(range(m), p))
    if coeff_degree < 0:
        return GradedSlice("Omega", p, degree, comps, (), ())
    monos = tuple(monomials_of_degree(m, coeff_degree))
    nunk = len(comps) * len(monos)
    comp_pos = {c: i for i, c in enumerate(comps)}
    rows: List[List[Fraction]] = []
    for w in arr.rows:
        out_monos, reduce_mono = _pivot_reduction(w, coeff_degree, m)
        for J in combinations(range(m), p + 1):
            block: List[List[Fraction]] = [[_ZERO] * nunk for _ in out_monos]
            touched = False
            for pos, i in enumerate(J):
                coeff = w[i] if pos % 2 == 0 else -w[i]
                if not coeff:
                    continue
                touched = True
                I = tuple(v for v in J if v != i)
                base = comp_pos[I] * len(monos)
                for k, mu in enumerate(monos):
                    for out_i, c in reduce_mono(mu).items():
                        block[out_i][base + k] += coeff * c
            if touched:
                rows.extend(block)
    if not rows:
        vectors = tuple(
            tuple(Fraction(int(i == k)) for i in range(nunk)) for k in range(nunk)
        )
    else:
        vectors = tuple(QMatrix(rows).kernel_basis())
    return GradedSlice("Omega", p, degree, comps, monos, vectors)


@dataclass(frozen=True)
class GeneratorSearch:
    """Minimal generators of D_p up to a degree bound, with evidence.

    ``generators[k]`` is a tuple of component polynomials over
    ``component_index`` (for p = 1, also available as Derivations).
    ``complete`` is False when generators were still appearing at the
    bound, in which case the bound may be insufficient.
    """

    p: int
    dmax: int
    component_index: Tuple[Tuple[int, ...], ...]
    generators: Tuple[Tuple[MPoly, ...], ...]
    degrees: Tuple[int, ...]
    slice_dims: Tuple[int, ...]
    complete: bool
    warning: Optional[str]

    def derivations(self) -> Tuple[Derivation, ...]:
        if self.p != 1:
            raise ValueError("derivations() requires p = 1")
        m = len(self.component_index)
        out = []
        for comps in self.generators:
            vec = [MPoly.zero(m)] * m
            for ci, (i,) in enumerate(self.component_index):
                vec[i] = comps[ci]
            out.append(Derivation(tuple(vec)))
        return tuple(out)


def dp_generators(arr: Arrangement, p: int = 1, dmax: Optional[int] = None) -> GeneratorSearch:
    """Greedy minimal generators of D_p degree by degree.

    At each degree the span of polynomial multiples of the generators
    found so far is compared with the full slice; canonical basis vectors
    outside the span become new generators.  By construction the result
    generates every slice up to ``dmax`` (default: the number of
    hyperplanes).
    """
    m = arr.m
    if dmax is None:
        dmax = arr.n
    gens: List[Tuple[int, Tuple[MPoly, ...]]] = []
    dims: List[int] = []
    last_new = None
    for d in range(dmax + 1):
        sl = dp_slice(arr, p, d)
        dims.append(sl.dim)
        if sl.dim == 0:
            continue
        mono_pos = {mu: k for k, mu in enumerate(sl.monomials)}
        nmono = len(sl.monomials)
        span = RowSpace()
        for gdeg, gcomps in gens:
            for mu in monomials_of_degree(m, d - gdeg):
                row: Dict[int, Fraction] = {}
                for ci, gp in enumerate(gcomps):
                    for mono, c in gp.terms.items():
                        row[ci * nmono + mono_pos[mono_mul(mu, mono)]] = c
                span.add(row)
        for vec in sl.vectors:
            sparse = {i: c for i, c in enumerate(vec) if c}
            if span.add(sparse):
                gens.append((d, sl.component_polys(vec)))
                last_new = d
    complete = last_new is None or last_new < dmax
    warning = None
    if not complete:
        warning = (
            f"new generators appeared at the degree bound {dmax}; "
            "raise the bound to confirm completeness"
        )
    return GeneratorSearch(
        p=p,
        dmax=dmax,
        component_index=tuple(combinations(range(m), p)) if p else ((),),
        generators=tuple(g for _, g in gens),
        degrees=tuple(d for d, _ in gens),
        slice_dims=tuple(dims),
        complete=complete,
        warning=warning,
    )


@dataclass(frozen=True)
class FreenessCertificate:
    """Saito-criterion outcome: generator degrees and the determinant scalar."""

    free: bool
    degrees: Tuple[int, ...]
    scalar: Optional[Fraction]


def saito_check(arr: Arrangement, gens: Sequence[Derivation]) -> FreenessCertificate:
    """Saito's criterion on a candidate basis of the derivation module.

    The arrangement is free with the given basis iff the determinant of
    the coefficient matrix equals a nonzero scalar times the product of
    the defining forms.
    """
    m = arr.m
    if arr.rank != m:
        raise ValueError("Saito check requires an essential arrangement")
    if len(gens) != m:
        raise ValueError(f"need exactly {m} candidate generators, got {len(gens)}")
    det = _poly_det([[g.components[j] for j in range(m)] for g in gens])
    degrees = tuple(sorted(g.degree for g in gens))
    if det.is_zero():
        return FreenessCertificate(False, degrees, None)
    f = MPoly.const(m, 1)
    for row in arr.rows:
        f = f * MPoly.from_linear(row)
    try:
        q = det.div_exact(f)
    except Exception:
        return FreenessCertificate(False, degrees, None)
    c = q.constant_term()
    if q == MPoly.const(m, c) and c:
        return FreenessCertificate(True, degrees, c)
    return FreenessCertificate(False, degrees, None)


def freeness(arr: Arrangement, search: GeneratorSearch) -> FreenessCertificate:
    """Freeness certificate from a generator search (p = 1).

    A free essential arrangement in dimension m has exactly m minimal
    generators passing Saito's criterion; any other generator count is an
    immediate certificate of non-freeness.
    """
    degrees = tuple(sorted(search.degrees))
    if len(search.generators) != arr.m:
        return FreenessCertificate(False, degrees, None)
    return saito_check(arr, search.derivations())


def terao_check(arr: Arrangement, cert: FreenessCertificate) -> bool:
    """Factorization of chi into exponents for a free arrangement."""
    if not cert.free:
        raise ValueError("terao_check requires a freeness certificate")
    t = MPoly.variable(1, 0)
    prod = MPoly.const(1, 1)
    for d in cert.degrees:
        prod = prod * (t - (d + 1))
    return prod == arr.char_poly()


def hilbert_dp_truncated(arr: Arrangement, p: int, dmax: int) -> List[int]:
    """Dimensions of the degree-d pieces of D_p for d = 0..dmax."""
    return [dp_slice(arr, p, d).dim for d in range(dmax + 1)]


def free_model_dims(degrees: Sequence[int], m: int, dmax: int) -> List[int]:
    """Graded dimensions of a free module with the given generator degrees."""
    return [
        sum(count_monomials(m, d - dd) for dd in degrees) for d in range(dmax + 1)
    ]


def p_poly_free(cert: FreenessCertificate, m: int) -> Tuple[MPoly, int]:
    """Generating function of all D_p Hilbert series for a free arrangement.

    Returns (numerator N(x, y), e) with N / (1-x)^e = sum_p h(D_p, x) y^p;
    the numerator is the product of (1 + x^(d_i) y) over the generator
    degrees, since D_p is then the p-th exterior power of D_1.
    """
    if not cert.free:
        raise ValueError("p_poly_free requires a free arrangement")
    x = MPoly.variable(2, 0)
    y = MPoly.variable(2, 1)
    num = MPoly.const(2, 1)
    for d in cert.degrees:
        num = num * (MPoly.const(2, 1) + (x ** d) * y)
    return num, m


def duality_shift(arr: Arrangement, p: int, dmax: int = 6) -> Optional[int]:
    """Empirical degree shift s with dim Omega^(rank-p)_(d+s) = dim D_p_d.

    Probed on a window of degrees; returns the unique consistent shift, or
    None when no shift in the search window matches.  On the free test
    fixtures this comes out as rank - n.
    """
    if arr.rank != arr.m:
        raise ValueError("duality_shift requires an essential arrangement")
    dp_dims = [dp_slice(arr, p, d).dim for d in range(dmax + 1)]
    if not any(dp_dims):
        return None
    q = arr.m - p
    lo = -(2 * arr.n + arr.m)
    hi = 2 * arr.n + arr.m
    omega_cache: Dict[int, int] = {}

    def om(d: int) -> int:
        if d not in omega_cache:
            omega_cache[d] = omega_slice(arr, q, d).dim
        return omega_cache[d]

    matches = []
    for s in range(lo, hi + 1):
        if all(om(d + s) == dp_dims[d] for d in range(dmax + 1)):
            matches.append(s)
    if len(matches) == 1:
        return matches[0]
    return None


def _poly_det(mat: List[List[MPoly]]) -> MPoly:
    n = len(mat)
    if n == 1:
        return mat[0][0]
    nv = mat[0][0].nvars
    out = MPoly.zero(nv)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * _poly_det(minor)
        out = out + term if j % 2 == 0 else out - term
    return out
