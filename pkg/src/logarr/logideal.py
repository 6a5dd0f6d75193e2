"""The logarithmic ideal of an arrangement.

The universal logarithmic derivative of the master function is the 1-form
omega = sum_i a_i df_i / f_i with weight variables a_1..a_n.  Contracting
omega along a logarithmic vector field theta gives the polynomial

    <theta, omega> = sum_i a_i theta(f_i) / f_i

(each division exact precisely because theta is logarithmic), and the
logarithmic ideal is generated by these contractions in the bigraded ring
S = Q[x_1..x_m, a_1..a_n].  Its zero set is the closure of the variety of
critical points of the master function over all weights.
"""

from __future__ import annotations

from typing import List, Sequence

from .arrangement import Arrangement
from .groebner import BigradedIdeal
from .logder import Derivation, GeneratorSearch, dp_generators
from .poly import MPoly


class NotLogarithmicError(ArithmeticError):
    """Contraction against a vector field that is not logarithmic."""


def contract(theta: Derivation, arr: Arrangement) -> MPoly:
    """Contraction of theta against the universal logarithmic 1-form.

    Returns sum_i a_i * (theta(f_i) / f_i) in S; the result is
    bihomogeneous of bidegree (deg theta, 1).
    """
    m, n = arr.m, arr.n
    nv = m + n
    out = MPoly.zero(nv)
    for i, row in enumerate(arr.rows):
        form = MPoly.from_linear(row)
        applied = theta.apply_form(row)
        if applied.is_zero():
            continue
        try:
            quot = applied.div_exact(form)
        except Exception as exc:
            raise NotLogarithmicError(
                f"theta({arr.labels[i]}) is not divisible by the defining form"
            ) from exc
        a_i = MPoly.variable(nv, m + i)
        out = out + quot.embed(nv) * a_i
    return out


def log_ideal(arr: Arrangement, gens: Sequence[Derivation] | GeneratorSearch | None = None) -> BigradedIdeal:
    """The logarithmic ideal, generated by contractions of D-generators.

    ``gens`` should generate the derivation module up to the working
    degree bound (a GeneratorSearch from :func:`logarr.logder.dp_generators`
    carries that evidence); by default generators are searched up to
    degree n.  Every generator of the resulting ideal has a-degree exactly
    one, since the contraction is linear in the weight variables.
    """
    if gens is None:
        gens = dp_generators(arr, 1, arr.n)
    if isinstance(gens, GeneratorSearch):
        gens = gens.derivations()
    polys: List[MPoly] = []
    for theta in gens:
        c = contract(theta, arr)
        if c.is_zero():
            continue
        if c not in polys:
            polys.append(c)
    ideal = BigradedIdeal(arr.m, arr.n, tuple(polys))
    for g in ideal.generators:
        if g.bidegree(arr.m)[1] != 1:
            raise AssertionError("contraction must be linear in the weight variables")
    return ideal
