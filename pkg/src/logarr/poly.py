"""Sparse exact polynomial arithmetic over the rationals.

A polynomial in ``nvars`` variables is stored as a map from exponent tuples
to nonzero ``Fraction`` coefficients:

    x0^2*x1 + 3/2  ->  {(2, 1): Fraction(1), (0, 0): Fraction(3, 2)}

Everything is exact; no floating point appears anywhere in the package.
Polynomials are immutable value objects, so they are safe to share across
threads and to use as dictionary keys via :meth:`MPoly.key`.

The same class serves three roles throughout the package:

* polynomials in the coordinate variables x_1..x_m (derivation components),
* bigraded polynomials in x_1..x_m, a_1..a_n (the ring S), where the
  bidegree of a monomial splits its total degree at position ``m``,
* small bivariate polynomials (characteristic polynomials, Tutte
  polynomials, K-polynomials, Chow classes), with variable names supplied
  only at formatting/serialization time.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterable, Mapping, Sequence, Tuple

Mono = Tuple[int, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def grevlex_key(mono: Mono) -> tuple:
    """Sort key realizing graded reverse lexicographic order.

    Larger key = larger monomial.  Variable significance decreases with
    index: x_0 is the most significant variable.
    """
    return (sum(mono), tuple(-e for e in reversed(mono)))


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    """True iff monomial a divides monomial b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_div(a: Mono, b: Mono) -> Mono:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


class MPoly:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Mono, Fraction] | Iterable = (), *, _raw: bool = False):
        self.nvars = nvars
        if _raw:
            # internal fast path: caller guarantees a clean dict
            self.terms: Dict[Mono, Fraction] = terms  # type: ignore[assignment]
            return
        clean: Dict[Mono, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != nvars:
                raise ValueError(f"exponent tuple {mono} has wrong length (expected {nvars})")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = Fraction(c)
            if c:
                acc = clean.get(mono, _ZERO) + c
                if acc:
                    clean[mono] = acc
                else:
                    clean.pop(mono, None)
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls(nvars, {}, _raw=True)

    @classmethod
    def const(cls, nvars: int, c) -> "MPoly":
        c = Fraction(c)
        if not c:
            return cls.zero(nvars)
        return cls(nvars, {(0,) * nvars: c}, _raw=True)

    @classmethod
    def variable(cls, nvars: int, i: int, power: int = 1) -> "MPoly":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range")
        mono = tuple(power if j == i else 0 for j in range(nvars))
        return cls(nvars, {mono: _ONE}, _raw=True)

    @classmethod
    def from_linear(cls, coeffs: Sequence) -> "MPoly":
        """The linear form sum(coeffs[i] * x_i)."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            c = Fraction(c)
            if c:
                terms[tuple(1 if j == i else 0 for j in range(n))] = c
        return cls(n, terms, _raw=True)

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash(self.key())

    def key(self) -> tuple:
        """Canonical hashable form: terms sorted lexicographically."""
        return (self.nvars, tuple(sorted(self.terms.items())))

    def coeff(self, mono: Mono) -> Fraction:
        return self.terms.get(tuple(mono), _ZERO)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, _ZERO)

    def total_degree(self) -> int:
        """Max total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def bidegree(self, split: int) -> Tuple[int, int]:
        """Bidegree of a bihomogeneous polynomial split at position ``split``.

        Raises ValueError if the polynomial is not bihomogeneous
        (or is zero).
        """
        degs = {(sum(m[:split]), sum(m[split:])) for m in self.terms}
        if len(degs) != 1:
            raise ValueError(f"polynomial is not bihomogeneous: bidegrees {sorted(degs)}")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_part(self, d: int) -> "MPoly":
        return MPoly(self.nvars, {m: c for m, c in self.terms.items() if sum(m) == d}, _raw=True)

    def max_degree_split(self, split: int) -> Tuple[int, int]:
        """Componentwise max of (x-degree, tail-degree) over all monomials."""
        a = b = 0
        for m in self.terms:
            a = max(a, sum(m[:split]))
            b = max(b, sum(m[split:]))
        return a, b

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "MPoly"):
        if self.nvars != other.nvars:
            raise ValueError(f"mixed variable counts: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.nvars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m, _ZERO) + c
            if acc:
                out[m] = acc
            else:
                out.pop(m, None)
        return MPoly(self.nvars, out, _raw=True)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {m: -c for m, c in self.terms.items()}, _raw=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.nvars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return MPoly.zero(self.nvars)
            return MPoly(self.nvars, {m: cc * c for m, cc in self.terms.items()}, _raw=True)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        out: Dict[Mono, Fraction] = {}
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                acc = out.get(m, _ZERO) + c1 * c2
                if acc:
                    out[m] = acc
                else:
                    out.pop(m, None)
        return MPoly(self.nvars, out, _raw=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- calculus and substitution -------------------------------------

    def derivative(self, i: int) -> "MPoly":
        out: Dict[Mono, Fraction] = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mm = m[:i] + (e - 1,) + m[i + 1:]
                acc = out.get(mm, _ZERO) + c * e
                if acc:
                    out[mm] = acc
                else:
                    out.pop(mm, None)
        return MPoly(self.nvars, out, _raw=True)

    def compose(self, targets: Sequence["MPoly"]) -> "MPoly":
        """Substitute targets[i] for variable i.

        All targets must share a common variable count, which becomes the
        variable count of the result.
        """
        if len(targets) != self.nvars:
            raise ValueError("need one target per variable")
        if self.nvars == 0:
            raise ValueError("compose needs at least one variable")
        out_nvars = targets[0].nvars
        # cache powers of each target
        pows = [[MPoly.const(out_nvars, 1)] for _ in targets]
        result = MPoly.zero(out_nvars)
        for m, c in sorted(self.terms.items()):
            term = MPoly.const(out_nvars, c)
            for i, e in enumerate(m):
                while len(pows[i]) <= e:
                    pows[i].append(pows[i][-1] * targets[i])
                term = term * pows[i][e]
            result = result + term
        return result

    def evaluate(self, values: Sequence) -> Fraction:
        vals = [Fraction(v) for v in values]
        total = _ZERO
        for m, c in self.terms.items():
            prod = c
            for v, e in zip(vals, m):
                if e:
                    prod *= v ** e
            total += prod
        return total

    def embed(self, nvars: int, var_map: Sequence[int] | None = None) -> "MPoly":
        """Reinterpret in a larger ring; variable i maps to var_map[i]."""
        if var_map is None:
            var_map = range(self.nvars)
        out: Dict[Mono, Fraction] = {}
        for m, c in self.terms.items():
            mm = [0] * nvars
            for i, e in enumerate(m):
                if e:
                    mm[var_map[i]] += e
            out[tuple(mm)] = c
        return MPoly(nvars, out, _raw=True)

    # -- division -----------------------------------------------------

    def leading(self) -> Tuple[Mono, Fraction]:
        """Leading (monomial, coefficient) under grevlex; error on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=grevlex_key)
        return m, self.terms[m]

    def div_exact(self, divisor: "MPoly") -> "MPoly":
        """Exact quotient self / divisor.

        Raises ExactDivisionError when the division leaves a remainder.
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return MPoly.zero(self.nvars)
        dm, dc = divisor.leading()
        rem = dict(self.terms)
        quot: Dict[Mono, Fraction] = {}
        while rem:
            m = max(rem, key=grevlex_key)
            if not mono_divides(dm, m):
                raise ExactDivisionError("inexact polynomial division")
            q = mono_div(m, dm)
            c = rem[m] / dc
            quot[q] = c
            for m2, c2 in divisor.terms.items():
                mm = mono_mul(q, m2)
                acc = rem.get(mm, _ZERO) - c * c2
                if acc:
                    rem[mm] = acc
                else:
                    rem.pop(mm, None)
        return MPoly(self.nvars, quot, _raw=True)

    def divides(self, other: "MPoly") -> bool:
        try:
            other.div_exact(self)
            return True
        except ExactDivisionError:
            return False

    # -- formatting and serialization ----------------------------------

    def sorted_terms(self):
        """Terms sorted descending by grevlex; deterministic."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def format(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        names = [f"v{i}" for i in range(self.nvars)]
        return f"MPoly({self.format(names)})"

    def to_coeff_map(self) -> Dict[str, str]:
        """JSON form: exponent-tuple strings to rational strings."""
        return {",".join(map(str, m)): str(c) for m, c in sorted(self.terms.items())}

    @classmethod
    def from_coeff_map(cls, nvars: int, data: Mapping[str, str]) -> "MPoly":
        terms = {}
        for k, v in data.items():
            mono = tuple(int(p) for p in k.split(",")) if k else ()
            terms[mono] = Fraction(v)
        return cls(nvars, terms)


class ExactDivisionError(ArithmeticError):
    """Polynomial division that was required to be exact left a remainder."""


# -- bivariate helpers -------------------------------------------------
#
# Bivariate polynomials (characteristic polynomials in t, K-polynomials in
# (t,u), Chow classes in (h,k), ...) are MPoly values with nvars=2; the
# helpers below cover the recurring reparameterizations.

def bp_const(c) -> MPoly:
    return MPoly.const(2, c)


def bp_var(i: int) -> MPoly:
    return MPoly.variable(2, i)


def bp(entries: Mapping[Tuple[int, int], object]) -> MPoly:
    return MPoly(2, {k: Fraction(v) for k, v in entries.items()})  # type: ignore[arg-type]


def taylor_at_one(k_poly: MPoly) -> MPoly:
    """Re-expand a bivariate polynomial K(t,u) in powers of (1-t), (1-u).

    Returns kappa with K(t,u) = sum kappa[i,j] (1-t)^i (1-u)^j; the
    coefficients are read off by substituting t -> 1-T, u -> 1-U.  The
    transform is an involution: applying it twice gives back K.
    """
    if k_poly.nvars != 2:
        raise ValueError("taylor_at_one expects a bivariate polynomial")
    one_minus = [bp_const(1) - bp_var(0), bp_const(1) - bp_var(1)]
    return k_poly.compose(one_minus)


def binomial_polynomial(x: MPoly, k: int) -> MPoly:
    """The binomial coefficient C(x, k) as a polynomial in x."""
    if k < 0:
        raise ValueError("negative binomial order")
    result = MPoly.const(x.nvars, 1)
    for i in range(k):
        result = result * (x - i)
    return result * Fraction(1, factorial(k))


class TruncatedRing:
    """The quotient Z[h,k] / (h^hbound, k^kbound).

    Elements are bivariate MPoly values reduced eagerly: monomials whose
    h-exponent reaches hbound or k-exponent reaches kbound are discarded.
    """

    def __init__(self, hbound: int, kbound: int):
        if hbound < 0 or kbound < 0:
            raise ValueError("bounds must be nonnegative")
        self.hbound = hbound
        self.kbound = kbound

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedRing)
            and (self.hbound, self.kbound) == (other.hbound, other.kbound)
        )

    def __hash__(self):
        return hash((self.hbound, self.kbound))

    def __repr__(self):
        return f"TruncatedRing(h^{self.hbound}=0, k^{self.kbound}=0)"

    def reduce(self, p: MPoly) -> MPoly:
        if p.nvars != 2:
            raise ValueError("truncated ring elements are bivariate")
        return MPoly(
            2,
            {
                m: c
                for m, c in p.terms.items()
                if m[0] < self.hbound and m[1] < self.kbound
            },
            _raw=True,
        )

    def mul(self, p: MPoly, q: MPoly) -> MPoly:
        return self.reduce(p * q)


def monomials_of_degree(nvars: int, d: int) -> list:
    """All exponent tuples of total degree d, in lexicographic order."""
    if d < 0:
        return []
    if nvars == 0:
        return [()] if d == 0 else []
    if nvars == 1:
        return [(d,)]
    out = []
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - e):
            out.append((e,) + rest)
    return out


def count_monomials(nvars: int, d: int) -> int:
    """Number of degree-d monomials in nvars variables."""
    if d < 0:
        return 0
    return comb(d + nvars - 1, nvars - 1)
