"""Exact Hoeffding decomposition of symmetric statistics of draws without replacement.

A statistic is a `ModuleVector` h on the m-subsets of [1..n], read as
h(X(1), ..., X(m)) for the first m extractions without replacement.  This
module computes, in exact rational arithmetic:

  * the coefficient tables driving the projection kernels,
  * conditional expectations given any partial assignment of draws,
  * the order-l completely degenerate kernels and their U-statistic lifts,
  * the orthogonal projections onto each symmetric Hoeffding space, and
  * the brute-force character-projection oracle (a literal sum over all n!
    permutations) against which the fast kernel route is verified.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .algebra import ModuleVector
from .characters import dimension, two_row_character
from .combinatorics import (
    Subset,
    check_subset,
    enumerate_permutations,
    enumerate_subsets,
    subset_index,
)
from .errors import DomainError, ResourceLimitError

#: A projection via the n!-permutation oracle is refused above this n unless overridden.
DEFAULT_ORACLE_CEILING = 8

_ZERO = Fraction(0)


class CoefficientTable:
    """The rational coefficients that turn centered conditional expectations
    into completely degenerate kernels, for statistics of m draws from [1..n].

    ratio(l, j) is a product of factors (n-r)/(n-r-j); weight(l, j) follows a
    signed binomial recursion with unit diagonal.  Both families have
    ratio(l, l) = weight(l, l) = 1.
    """

    __slots__ = ("n", "m", "_ratio", "_weight")

    def __init__(self, n: int, m: int):
        if m < 1 or 2 * m > n:
            raise DomainError(f"need 1 <= m <= n/2, got n={n}, m={m}")
        self.n = n
        self.m = m
        ratio: dict[tuple[int, int], Fraction] = {}
        weight: dict[tuple[int, int], Fraction] = {}
        for l in range(1, m + 1):
            ratio[l, l] = Fraction(1)
            weight[l, l] = Fraction(1)
            for j in range(1, l):
                prod = Fraction(1)
                for r in range(j, l):
                    prod *= Fraction(n - r, n - r - j)
                ratio[l, j] = prod
        for l in range(2, m + 1):
            for j in range(1, l):
                acc = _ZERO
                for i in range(j, l):
                    acc += comb(l - j, i - j) * ratio[l, i] * weight[i, j]
                weight[l, j] = -acc
        self._ratio = ratio
        self._weight = weight

    def ratio(self, l: int, j: int) -> Fraction:
        self._check(l, j)
        return self._ratio[l, j]

    def weight(self, l: int, j: int) -> Fraction:
        self._check(l, j)
        return self._weight[l, j]

    def _check(self, l: int, j: int) -> None:
        if not (1 <= j <= l <= self.m):
            raise DomainError(f"indices (l={l}, j={j}) outside 1 <= j <= l <= {self.m}")

    def __repr__(self) -> str:
        return f"CoefficientTable(n={self.n}, m={self.m})"


@lru_cache(maxsize=None)
def coefficient_table(n: int, m: int) -> CoefficientTable:
    return CoefficientTable(n, m)


def conditional_expectation(h: ModuleVector, assigned: Subset) -> Fraction:
    """Exact average of h(assigned ∪ S) over all (m-a)-subsets S of the complement.

    With a = len(assigned): a = 0 gives the global mean, a = m gives
    h(assigned) itself.
    """
    n, m = h.n, h.l
    assigned = check_subset(n, assigned)
    a = len(assigned)
    if a > m:
        raise DomainError(f"assigned {assigned} has size {a} > m={m}")
    taken = set(assigned)
    complement = [j for j in range(1, n + 1) if j not in taken]
    idx = subset_index(n, m)
    vals = h.values
    total = _ZERO
    for extra in itertools.combinations(complement, m - a):
        total += vals[idx[tuple(sorted(assigned + extra))]]
    return Fraction(total, comb(n - a, m - a))


def _kernel_values(
    h: ModuleVector,
    l: int,
    table: CoefficientTable,
    mean: Fraction,
    cond_cache: dict[Subset, Fraction],
) -> list[Fraction]:
    n = h.n
    scale = table.ratio(h.l, l)
    out = []
    for points in enumerate_subsets(n, l):
        acc = _ZERO
        for a in range(1, l + 1):
            w = table.weight(l, a)
            block = _ZERO
            for part in itertools.combinations(points, a):
                cond = cond_cache.get(part)
                if cond is None:
                    cond = conditional_expectation(h, part)
                    cond_cache[part] = cond
                block += cond - mean
            acc += w * block
        out.append(scale * acc)
    return out


def hoeffding_kernel(h: ModuleVector, l: int) -> ModuleVector:
    """The order-l completely degenerate kernel of h, on the l-subsets of [1..n].

    At each l-subset: ratio(m, l) times the weighted sum, over nonempty
    sub-assignments of the l points, of centered conditional expectations of h.
    """
    m = h.l
    if l < 1 or l > m:
        raise DomainError(f"kernel order l={l} outside [1..{m}]")
    table = coefficient_table(h.n, m)
    return ModuleVector(h.n, l, _kernel_values(h, l, table, h.mean(), {}))


def u_statistic_lift(phi: ModuleVector, m: int) -> ModuleVector:
    """Lift an order-l kernel to m draws: f(K) = sum of phi over l-subsets of K.

    For phi = indicator(J) the lift is the containment indicator
    K -> 1 if J ⊆ K else 0.
    """
    n, l = phi.n, phi.l
    if l > m:
        raise DomainError(f"cannot lift order-{l} kernel to m={m} < {l} draws")
    if m > n:
        raise DomainError(f"cannot draw m={m} points from [1..{n}]")
    if l == m:
        return phi
    idx = subset_index(n, l)
    vals = phi.values
    out = []
    for K in enumerate_subsets(n, m):
        out.append(sum(vals[idx[J]] for J in itertools.combinations(K, l)))
    return ModuleVector(n, m, out)


def project(h: ModuleVector, l: int) -> ModuleVector:
    """Orthogonal projection of h onto the order-l symmetric Hoeffding space.

    l = 0 gives the constant mean vector; l >= 1 is the U-statistic lift of the
    order-l kernel.  Summing over l = 0..m reconstructs h exactly.
    """
    m = h.l
    if l < 0 or l > m:
        raise DomainError(f"projection order l={l} outside [0..{m}]")
    if l == 0:
        return ModuleVector.constant(h.n, m, h.mean())
    return u_statistic_lift(hoeffding_kernel(h, l), m)


def is_completely_degenerate(phi: ModuleVector) -> bool:
    """True iff every conditional expectation of phi given l-1 points vanishes.

    Concretely: for every (l-1)-subset A, the sum of phi(A ∪ {j}) over
    j outside A is exactly zero.
    """
    n, l = phi.n, phi.l
    if l < 1:
        raise DomainError("degeneracy is defined for kernels of order >= 1")
    idx = subset_index(n, l)
    vals = phi.values
    for A in enumerate_subsets(n, l - 1):
        taken = set(A)
        total = _ZERO
        for j in range(1, n + 1):
            if j not in taken:
                total += vals[idx[tuple(sorted(A + (j,)))]]
        if total != 0:
            return False
    return True


@dataclass(frozen=True)
class HoeffdingDecomposition:
    """The full orthogonal decomposition of a statistic of m draws.

    components[0] is the constant mean vector; components[l] for l >= 1 is
    the lift of kernels[l]; the components sum back to the input exactly and
    are pairwise orthogonal.
    """

    n: int
    m: int
    mean: Fraction
    kernels: dict[int, ModuleVector]  # l -> kernel on l-subsets, l = 1..m
    components: dict[int, ModuleVector]  # l -> component on m-subsets, l = 0..m

    def reconstruction(self) -> ModuleVector:
        total = ModuleVector.zero(self.n, self.m)
        for l in range(self.m + 1):
            total = total + self.components[l]
        return total


def decompose(h: ModuleVector) -> HoeffdingDecomposition:
    """Compute every kernel and component of h in one pass.

    Shares the conditional-expectation cache across orders, so this is much
    cheaper than m separate `project` calls.
    """
    n, m = h.n, h.l
    if m < 1 or 2 * m > n:
        raise DomainError(f"need 1 <= m <= n/2, got n={n}, m={m}")
    table = coefficient_table(n, m)
    mean = h.mean()
    cache: dict[Subset, Fraction] = {}
    kernels = {}
    components = {0: ModuleVector.constant(n, m, mean)}
    for l in range(1, m + 1):
        kernel = ModuleVector(n, l, _kernel_values(h, l, table, mean, cache))
        kernels[l] = kernel
        components[l] = u_statistic_lift(kernel, m)
    return HoeffdingDecomposition(n, m, mean, kernels, components)


@lru_cache(maxsize=None)
def _projection_weights(n: int, m: int, l: int) -> tuple[tuple[int, ...], ...]:
    """Integer matrix W with W[K][J] = sum of chi_{(n-l,l)}(x) over all x mapping J to K.

    Assembled by a literal loop over all n! permutations; the caller applies it
    to a vector and scales by dimension/n!.
    """
    subs = enumerate_subsets(n, m)
    idx = subset_index(n, m)
    weights = [[0] * len(subs) for _ in subs]
    chi_by_type: dict[tuple[int, ...], int] = {}
    for x in enumerate_permutations(n, ceiling=None):
        ct = x.cycle_type()
        chi = chi_by_type.get(ct)
        if chi is None:
            chi = two_row_character(n, l, ct)
            chi_by_type[ct] = chi
        if chi == 0:
            continue
        img = x.images
        for j, J in enumerate(subs):
            k = idx[tuple(sorted(img[a - 1] for a in J))]
            weights[k][j] += chi
    return tuple(tuple(row) for row in weights)


def character_projection_oracle(
    f: ModuleVector, l: int, ceiling: int | None = DEFAULT_ORACLE_CEILING
) -> ModuleVector:
    """Isotypic projection of f by direct group averaging over all n! permutations:

        (dimension/n!) * sum over x of chi_{(n-l,l)}(x) * f(x^{-1} K)

    at every m-subset K.  Factorial cost by design: this is the slow oracle the
    kernel route is checked against.  Refuses n above `ceiling`.
    """
    n, m = f.n, f.l
    if l < 0 or l > m:
        raise DomainError(f"projection order l={l} outside [0..{m}]")
    if ceiling is not None and n > ceiling:
        raise ResourceLimitError(
            f"oracle projection at n={n} exceeds the ceiling {ceiling}; "
            f"pass ceiling={n} (or None) to override"
        )
    weights = _projection_weights(n, m, l)
    scale = Fraction(dimension(n, l), factorial(n))
    vals = f.values
    out = []
    for row in weights:
        acc = sum((w * v for w, v in zip(row, vals) if w and v), _ZERO)
        out.append(scale * acc)
    return ModuleVector(n, m, out)


def clear_oracle_cache() -> None:
    """Drop memoized oracle weight matrices (used when timing the oracle honestly)."""
    _projection_weights.cache_clear()
