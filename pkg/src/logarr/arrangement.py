"""Central hyperplane arrangements and their combinatorics.

An arrangement is a finite set of distinct linear hyperplanes through the
origin of a rational vector space, stored as the coefficient rows of its
defining forms.  This module computes the intersection lattice with its
Moebius function, the characteristic and Tutte polynomials, deletion /
restriction / multirestriction, bridges, irreducible decomposition, and
essentialization.

Conventions:

* the rank of a flat is its codimension in the ambient space;
* the characteristic polynomial follows the matroid convention: its degree
  is the rank of the arrangement, not the ambient dimension;
* hyperplane indices are 0-based throughout the code.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .linalg import QMatrix
from .poly import MPoly

_ZERO = Fraction(0)


def _canonical_form(row: Sequence[Fraction]) -> Tuple[int, ...]:
    """Primitive integer vector with positive leading entry.

    Two rows define the same hyperplane iff they have the same canonical
    form, since forms are only meaningful up to a nonzero scalar.
    """
    den = 1
    for x in row:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        raise ValueError("zero row has no canonical form")
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


@dataclass(frozen=True)
class Flat:
    """A flat of the intersection lattice.

    ``echelon`` is the reduced row-echelon basis of the span of the
    defining forms: the unique canonical representative of the flat, used
    for equality and hashing.  ``support`` is the set of hyperplane indices
    containing the flat.
    """

    echelon: Tuple[Tuple[Fraction, ...], ...]
    rank: int
    support: FrozenSet[int]

    def key(self):
        return self.echelon

    def __le__(self, other: "Flat") -> bool:
        return self.support <= other.support

    def __lt__(self, other: "Flat") -> bool:
        return self.support < other.support


class IntersectionLattice:
    """Ranked lattice of flats with Moebius values mu(V, X)."""

    def __init__(self, flats: Sequence[Flat], mobius: Sequence[int]):
        self.flats: Tuple[Flat, ...] = tuple(flats)
        self.mobius: Tuple[int, ...] = tuple(mobius)
        self.rank = max((f.rank for f in self.flats), default=0)

    def __len__(self):
        return len(self.flats)

    def by_rank(self, r: int) -> List[Flat]:
        return [f for f in self.flats if f.rank == r]

    def rank_sizes(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for f in self.flats:
            out[f.rank] = out.get(f.rank, 0) + 1
        return out

    def covers(self) -> List[Tuple[int, int]]:
        """Covering pairs (i, j): flats[i] covered by flats[j].

        The lattice is geometric, hence graded: covers are exactly the
        comparable pairs whose ranks differ by one.
        """
        out = []
        for i, x in enumerate(self.flats):
            for j, y in enumerate(self.flats):
                if y.rank == x.rank + 1 and x.support <= y.support:
                    out.append((i, j))
        return out

    def mobius_of(self, flat: Flat) -> int:
        return self.mobius[self.flats.index(flat)]

    def support_profile(self) -> Tuple[Tuple[int, Tuple[int, ...]], ...]:
        """Combinatorial fingerprint: (rank, support) per flat, sorted.

        Two arrangements on the same ground set have isomorphic lattices
        (by the identity on hyperplane indices) iff the profiles agree.
        """
        return tuple(sorted((f.rank, tuple(sorted(f.support))) for f in self.flats))

    def to_json_dict(self) -> dict:
        flats = [
            {
                "rank": f.rank,
                "support": sorted(f.support),
                "mobius": mu,
                "basis": [[str(x) for x in row] for row in f.echelon],
            }
            for f, mu in zip(self.flats, self.mobius)
        ]
        return {"flats": flats, "covers": [list(c) for c in self.covers()]}


class Arrangement:
    """A central arrangement of n distinct hyperplanes in dimension m."""

    def __init__(
        self,
        rows: Iterable,
        labels: Optional[Sequence[str]] = None,
        name: str = "",
        dim: Optional[int] = None,
    ):
        self.rows: Tuple[Tuple[Fraction, ...], ...] = tuple(
            tuple(Fraction(x) for x in r) for r in rows
        )
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("matrix rows have unequal lengths")
        if widths:
            self._m = widths.pop()
            if dim is not None and dim != self._m:
                raise ValueError("dim does not match row length")
        else:
            self._m = dim if dim is not None else 0
        if self.rows and self._m == 0:
            raise ValueError("ambient dimension must be positive")
        seen = {}
        for i, r in enumerate(self.rows):
            if not any(r):
                raise ValueError(f"row {i} is zero: every defining form must be nonzero")
            ck = _canonical_form(r)
            if ck in seen:
                raise ValueError(f"rows {seen[ck]} and {i} define the same hyperplane")
            seen[ck] = i
        if labels is None:
            labels = [f"H{i + 1}" for i in range(len(self.rows))]
        if len(labels) != len(self.rows):
            raise ValueError("label count does not match row count")
        self.labels: Tuple[str, ...] = tuple(labels)
        self.name = name

    # -- basic data -----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return self._m

    @cached_property
    def rank(self) -> int:
        if not self.rows:
            return 0
        return QMatrix(self.rows).rank()

    def is_essential(self) -> bool:
        return self.rank == self.m

    def __eq__(self, other):
        return (
            isinstance(other, Arrangement)
            and self.rows == other.rows
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.rows, self.labels))

    def __repr__(self):
        return f"Arrangement({self.name or 'unnamed'}: n={self.n}, m={self.m}, rank={self.rank})"

    def forms(self) -> List[MPoly]:
        """Defining linear forms as polynomials in the x-variables."""
        return [MPoly.from_linear(r) for r in self.rows]

    # -- intersection lattice --------------------------------------------

    @cached_property
    def lattice(self) -> IntersectionLattice:
        """Build the intersection lattice level by level.

        Every rank-(r+1) flat is the closure of a rank-r flat together with
        one more hyperplane, so breadth-first closure over the canonical
        echelon forms enumerates each flat exactly once.
        """
        top = Flat(echelon=(), rank=0, support=frozenset())
        flats: Dict[tuple, Flat] = {top.key(): top}
        current = [top]
        while current:
            nxt: Dict[tuple, Flat] = {}
            for x in current:
                for i in range(self.n):
                    if i in x.support:
                        continue
                    mat = QMatrix(x.echelon + (self.rows[i],))
                    red, rank, _ = mat.rref()
                    ech = red.rows[:rank]
                    if ech in flats or ech in nxt:
                        continue
                    support = frozenset(
                        j for j in range(self.n) if _in_row_space(ech, self.rows[j])
                    )
                    nxt[ech] = Flat(echelon=ech, rank=rank, support=support)
            current = [nxt[k] for k in sorted(nxt)]
            flats.update(nxt)
        ordered = sorted(flats.values(), key=lambda f: (f.rank, f.echelon))
        mobius = _mobius_values(ordered)
        return IntersectionLattice(ordered, mobius)

    def char_poly(self) -> MPoly:
        """Characteristic polynomial, univariate in t, degree = rank."""
        lat = self.lattice
        ell = self.rank
        terms: Dict[Tuple[int], Fraction] = {}
        for f, mu in zip(lat.flats, lat.mobius):
            e = (ell - f.rank,)
            terms[e] = terms.get(e, _ZERO) + mu
        return MPoly(1, terms)

    # -- Tutte polynomial -------------------------------------------------

    @cached_property
    def tutte(self) -> MPoly:
        """Tutte polynomial in (x, y), by deletion-contraction."""
        return _tutte_rec(self.rows)

    def beta(self) -> int:
        """Beta invariant: the coefficient of x^1 y^0 in the Tutte polynomial."""
        b = self.tutte.coeff((1, 0))
        if b.denominator != 1:
            raise AssertionError("Tutte coefficients must be integers")
        return int(b)

    def homog_char(self) -> MPoly:
        """Homogenized characteristic polynomial at (-s, t-s).

        Equals sum over i of t_i0 s^(rank-i) t^i, with t_i0 the Tutte
        coefficients on the y=0 line; the same polynomial is obtained by
        homogenizing chi and substituting, which the test suite checks.
        """
        ell = self.rank
        terms = {}
        for (i, j), c in self.tutte.terms.items():
            if j == 0 and i >= 1:
                terms[(ell - i, i)] = c
        return MPoly(2, terms)

    def chi_hom_at(self, s_val: MPoly, t_val: MPoly) -> MPoly:
        """Evaluate the homogenized characteristic polynomial.

        chihom(s,t) = s^rank * chi(t/s); substituting polynomial arguments
        yields sum over d of chi_d * s_val^(rank-d) * t_val^d.
        """
        ell = self.rank
        nv = s_val.nvars
        out = MPoly.zero(nv)
        for (d,), c in self.char_poly().terms.items():
            out = out + c * (s_val ** (ell - d)) * (t_val ** d)
        return out

    # -- deletion, restriction, bridges ------------------------------------

    def delete(self, i: int) -> "Arrangement":
        self._check_index(i)
        rows = self.rows[:i] + self.rows[i + 1:]
        labels = self.labels[:i] + self.labels[i + 1:]
        return Arrangement(rows, labels, name=f"{self.name}-del-{self.labels[i]}" if self.name else "")

    def is_bridge(self, i: int) -> bool:
        """A hyperplane whose deletion drops the rank."""
        self._check_index(i)
        return self.delete(i).rank < self.rank

    def restrict(self, i: int) -> "Restriction":
        """Restriction to hyperplane i, with the full multirestriction data.

        Coordinates on H_i come from the canonical kernel basis of its
        defining form (one basis vector per free column, ascending).  The
        multirestriction keeps one form per remaining hyperplane, with
        repetitions; the restricted arrangement deduplicates them and sigma
        records the merge.
        """
        self._check_index(i)
        basis = QMatrix([self.rows[i]]).kernel_basis()
        others = [j for j in range(self.n) if j != i]
        multi = []
        for j in others:
            form = tuple(
                sum((a * b for a, b in zip(self.rows[j], vec)), _ZERO) for vec in basis
            )
            multi.append(form)
        reps: List[Tuple[Fraction, ...]] = []
        rep_keys: List[Tuple[int, ...]] = []
        rep_labels: List[List[str]] = []
        sigma = []
        for pos, form in enumerate(multi):
            ck = _canonical_form(form)
            if ck in rep_keys:
                idx = rep_keys.index(ck)
            else:
                idx = len(rep_keys)
                rep_keys.append(ck)
                reps.append(form)
                rep_labels.append([])
            rep_labels[idx].append(self.labels[others[pos]])
            sigma.append(idx)
        restricted = Arrangement(
            reps,
            ["=".join(ls) for ls in rep_labels],
            name=f"{self.name}|{self.labels[i]}" if self.name else "",
            dim=len(basis),
        )
        return Restriction(
            parent=self,
            hyperplane=i,
            deletion=self.delete(i),
            restricted=restricted,
            deleted_indices=tuple(others),
            multi_forms=tuple(multi),
            sigma=tuple(sigma),
            basis=tuple(basis),
        )

    def delres_check(self) -> bool:
        """Deletion-restriction recurrence for chi at every hyperplane."""
        chi = self.char_poly()
        t = MPoly.variable(1, 0)
        for i in range(self.n):
            chi_del = self.delete(i).char_poly()
            if self.is_bridge(i):
                if chi != (t - 1) * chi_del:
                    return False
            else:
                chi_res = self.restrict(i).restricted.char_poly()
                if chi != chi_del - chi_res:
                    return False
        return True

    # -- essentialization and decomposition ---------------------------------

    def essentialize(self) -> "Arrangement":
        """Project along the common intersection of all hyperplanes.

        Returns an essential arrangement of the same rank whose lattice is
        isomorphic to the original (the identity on hyperplane indices).
        Essential arrangements are returned unchanged.
        """
        if not self.rows:
            return self
        red, rank, pivots = QMatrix(self.rows).rref()
        if rank == self.m:
            return self
        # each form is recovered from the echelon basis by reading off its
        # values at the pivot columns
        newrows = [tuple(r[p] for p in pivots) for r in self.rows]
        return Arrangement(newrows, self.labels, name=f"{self.name}^e" if self.name else "")

    def decompose(self) -> List["Arrangement"]:
        """Irreducible summands (connected components of the matroid).

        Requires an essential arrangement.  Components are computed from
        fundamental circuits with respect to a greedy basis; each summand
        is returned in its own coordinates.
        """
        if not self.is_essential():
            raise ValueError("decompose requires an essential arrangement")
        if not self.rows:
            return []
        basis_idx: List[int] = []
        mat_rows: List[Tuple[Fraction, ...]] = []
        rank_so_far = 0
        for i, r in enumerate(self.rows):
            cand = QMatrix(mat_rows + [r])
            if cand.rank() > rank_so_far:
                basis_idx.append(i)
                mat_rows.append(r)
                rank_so_far += 1
        parent = list(range(self.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

        bmat = QMatrix(mat_rows)
        for j in range(self.n):
            if j in basis_idx:
                continue
            coeffs = _solve_in_row_space(bmat, self.rows[j])
            for pos, c in enumerate(coeffs):
                if c:
                    union(j, basis_idx[pos])
        groups: Dict[int, List[int]] = {}
        for i in range(self.n):
            groups.setdefault(find(i), []).append(i)
        out = []
        for root in sorted(groups):
            idxs = groups[root]
            rows = [self.rows[i] for i in idxs]
            red, rank, pivots = QMatrix(rows).rref()
            comp_rows = [tuple(r[p] for p in pivots) for r in rows]
            out.append(
                Arrangement(comp_rows, [self.labels[i] for i in idxs])
            )
        return out

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "matrix": [[str(x) for x in r] for r in self.rows],
            "labels": list(self.labels),
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "Arrangement":
        if "matrix" not in data:
            raise ValueError("missing field 'matrix'")
        matrix = data["matrix"]
        rows = []
        for i, row in enumerate(matrix):
            parsed = []
            for j, entry in enumerate(row):
                try:
                    parsed.append(Fraction(str(entry)))
                except (ValueError, ZeroDivisionError) as exc:
                    raise ValueError(
                        f"matrix[{i}][{j}]: {entry!r} is not a rational number"
                    ) from exc
            rows.append(parsed)
        return cls(rows, data.get("labels"), name=data.get("name", ""))

    def _check_index(self, i: int):
        if not 0 <= i < self.n:
            raise IndexError(f"hyperplane index {i} out of range (n={self.n})")


@dataclass(frozen=True)
class Restriction:
    """Deletion/restriction data at one hyperplane.

    ``multi_forms[p]`` is the form of hyperplane ``deleted_indices[p]``
    restricted to H (in kernel-basis coordinates); ``sigma[p]`` is the index
    of its class in the deduplicated restricted arrangement.
    """

    parent: Arrangement
    hyperplane: int
    deletion: Arrangement
    restricted: Arrangement
    deleted_indices: Tuple[int, ...]
    multi_forms: Tuple[Tuple[Fraction, ...], ...]
    sigma: Tuple[int, ...]
    basis: Tuple[Tuple[Fraction, ...], ...]

    def sigma_weights(self) -> List[List[int]]:
        """For each restricted hyperplane, the parent indices mapping to it."""
        out: List[List[int]] = [[] for _ in range(self.restricted.n)]
        for pos, idx in enumerate(self.sigma):
            out[idx].append(self.deleted_indices[pos])
        return out


# -- internals -------------------------------------------------------------


def _in_row_space(echelon: Tuple[Tuple[Fraction, ...], ...], row: Tuple[Fraction, ...]) -> bool:
    """Membership test against a reduced row-echelon basis."""
    work = list(row)
    for base in echelon:
        pivot = next(c for c, v in enumerate(base) if v)
        f = work[pivot]
        if f:
            work = [x - f * y for x, y in zip(work, base)]
    return not any(work)


def _solve_in_row_space(mat: QMatrix, row: Tuple[Fraction, ...]) -> Tuple[Fraction, ...]:
    """Coefficients c with row = c . mat (rows independent)."""
    aug = QMatrix([list(m) + [r] for m, r in zip(mat.transpose().rows, row)])
    red, rank, pivots = aug.rref()
    if rank > mat.nrows or any(p == mat.nrows for p in pivots):
        raise ValueError("row is not in the row space")
    sol = [_ZERO] * mat.nrows
    for i, p in enumerate(pivots):
        sol[p] = red.rows[i][mat.nrows]
    return tuple(sol)


def _mobius_values(ordered: Sequence[Flat]) -> List[int]:
    """mu(V, X) by the defining recursion over supports."""
    mobius: List[int] = []
    for i, x in enumerate(ordered):
        if x.rank == 0:
            mobius.append(1)
            continue
        acc = 0
        for j in range(i):
            y = ordered[j]
            if y.rank < x.rank and y.support <= x.support:
                acc += mobius[j]
        mobius.append(-acc)
    return mobius


def _matrix_rank(rows: Sequence[Tuple[Fraction, ...]]) -> int:
    if not rows:
        return 0
    return QMatrix(rows).rank()


def _tutte_rec(rows: Tuple[Tuple[Fraction, ...], ...]) -> MPoly:
    """Deletion-contraction on a tuple of (possibly zero) row vectors.

    Zero rows are loops, which arise from contraction even though the
    arrangement itself has none.
    """
    if not rows:
        return MPoly.const(2, 1)
    first, rest = rows[0], rows[1:]
    if not any(first):
        return MPoly.variable(2, 1) * _tutte_rec(rest)
    if _matrix_rank(rows) > _matrix_rank(rest):
        # coloop: contraction and deletion give the same matroid
        return MPoly.variable(2, 0) * _tutte_rec(rest)
    return _tutte_rec(rest) + _tutte_rec(_contract_rows(first, rest))


def _contract_rows(pivot_row, rows):
    """Project rows modulo a nonzero vector, dropping its pivot column."""
    p = next(c for c, v in enumerate(pivot_row) if v)
    out = []
    for r in rows:
        f = r[p] / pivot_row[p]
        proj = tuple(x - f * y for c, (x, y) in enumerate(zip(r, pivot_row)) if c != p)
        out.append(proj)
    return tuple(out)
