"""Capped sparse expansion of the two orientation polynomials.

Both polynomials are products of one degree-1 factor per arc:

* classical: (x_v - x_w) for each arc (v, w);
* additive:  sum of x_u over u in N(w) \\ N(v) minus the sum over
  N(v) \\ N(w), the within-factor cancellation of the neighbor-sum form.

The certificate monomial raises each x_v to the out-degree of v. Expansion
prunes any intermediate term that exceeds the requested exponent cap in
some coordinate; since factors only ever raise exponents, pruning never
loses a coefficient that fits under the cap. Coefficients are exact Python
integers throughout.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Mapping, Sequence

from .graphs import Orientation

ExponentVector = tuple[int, ...]


@dataclass(frozen=True)
class LinearFactor:
    """Signed sum of distinct variables: terms are (sign, vertex) pairs."""

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        ids = [u for _, u in self.terms]
        if len(set(ids)) != len(ids):
            raise ValueError("repeated variable inside a factor")
        if any(s not in (1, -1) for s, _ in self.terms):
            raise ValueError("signs must be +1 or -1")

    def support(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class CappedPolynomial:
    """Sparse terms within a per-variable exponent cap; no zero entries."""

    cap: ExponentVector
    terms: Mapping[ExponentVector, int]

    def coefficient(self, exponents: ExponentVector) -> int:
        if any(e > c for e, c in zip(exponents, self.cap)):
            raise ValueError(f"exponents {exponents} exceed the cap {self.cap}")
        return self.terms.get(tuple(exponents), 0)


def classical_factors(D: Orientation) -> list[LinearFactor]:
    """One (x_v - x_w) factor per arc, in sorted arc order."""
    return [LinearFactor(((1, v), (-1, w))) for v, w in D.sorted_arcs()]


def additive_factors(D: Orientation) -> list[LinearFactor]:
    """Neighbor-sum difference per arc, reduced to the disjoint parts.

    For the arc (v, w) the positive variables are N(w) \\ N(v) and the
    negative ones N(v) \\ N(w); w always appears negatively and v
    positively, so no factor is ever empty.
    """
    factors = []
    for v, w in D.sorted_arcs():
        nv, nw = D.neighbors(v), D.neighbors(w)
        plus = tuple((1, u) for u in sorted(nw - nv))
        minus = tuple((-1, u) for u in sorted(nv - nw))
        assert plus or minus
        factors.append(LinearFactor(plus + minus))
    return factors


def expand_capped(factors: Sequence[LinearFactor], cap: ExponentVector) -> CappedPolynomial:
    """Multiply the factors, discarding terms that overflow the cap.

    Factors are taken smallest support first to keep the working term map
    small; the product does not depend on the order.
    """
    cap = tuple(cap)
    terms: dict[ExponentVector, int] = {(0,) * len(cap): 1}
    for factor in sorted(factors, key=LinearFactor.support):
        nxt: dict[ExponentVector, int] = defaultdict(int)
        for exp, coef in terms.items():
            for sign, u in factor.terms:
                i = u - 1
                if exp[i] + 1 > cap[i]:
                    continue
                bumped = exp[:i] + (exp[i] + 1,) + exp[i + 1 :]
                nxt[bumped] += sign * coef
        terms = {e: c for e, c in nxt.items() if c != 0}
    return CappedPolynomial(cap, terms)


def expand_full(factors: Sequence[LinearFactor], n: int) -> CappedPolynomial:
    """Uncapped expansion over n variables (cap wide enough to never prune)."""
    return expand_capped(factors, (len(factors),) * n)


def classical_coefficient(D: Orientation) -> int:
    """Coefficient of the out-degree monomial in the classical polynomial.

    Equals the even-odd difference of spanning Eulerian subdigraph counts
    of D itself.
    """
    cap = D.out_degrees()
    return expand_capped(classical_factors(D), cap).coefficient(cap)


def additive_coefficient(D: Orientation) -> int:
    """Coefficient of the out-degree monomial in the additive polynomial.

    Equals the even-odd difference for W(D); nonzero certifies that every
    assignment of lists of size out-degree + 1 admits an additive coloring.
    """
    cap = D.out_degrees()
    return expand_capped(additive_factors(D), cap).coefficient(cap)


def evaluate_additive(D: Orientation, assignment: Mapping[int, int]) -> int:
    """Exact value of the additive polynomial at an integer labeling."""
    missing = [v for v in D.vertices() if v not in assignment]
    if missing:
        raise ValueError(f"assignment is missing vertices {missing}")
    value = 1
    for v, w in D.sorted_arcs():
        nv, nw = D.neighbors(v), D.neighbors(w)
        value *= sum(assignment[u] for u in nw - nv) - sum(assignment[u] for u in nv - nw)
        if value == 0:
            return 0
    return value
