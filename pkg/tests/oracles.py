"""Independent brute-force oracles used only by the tests.

Everything here recomputes library results from first principles along a
different route: subset scanning instead of generating polynomials, exact
least-squares against lifted-indicator spans instead of the coefficient
recursion, and a reversed-pivot elimination for ranks.
"""

from fractions import Fraction
from itertools import combinations
from math import factorial

from spechtstat import (
    ModuleVector,
    Permutation,
    apply_perm_to_subset,
    enumerate_permutations,
    enumerate_subsets,
    indicator,
    inner_product,
    u_statistic_lift,
)


def brute_fixed_subset_count(x: Permutation, l: int) -> int:
    """Count setwise-fixed l-subsets by scanning every subset."""
    return sum(1 for s in enumerate_subsets(x.n, l) if apply_perm_to_subset(x, s) == s)


def perm_average_inner_product(f: ModuleVector, g: ModuleVector) -> Fraction:
    """(1/n!) * sum over all permutations x of f(x{1..m}) g(x{1..m})."""
    assert (f.n, f.l) == (g.n, g.l)
    base = tuple(range(1, f.l + 1))
    total = Fraction(0)
    for x in enumerate_permutations(f.n, ceiling=None):
        s = apply_perm_to_subset(x, base)
        total += f[s] * g[s]
    return total / factorial(f.n)


def rank_reversed_pivots(vectors) -> int:
    """Rank by Gaussian elimination scanning columns right-to-left and picking
    the last candidate row: a deliberately different pivot path."""
    if not vectors:
        return 0
    rows = [list(v.values) for v in vectors]
    ncols = len(rows[0])
    pivot = 0
    for col in range(ncols - 1, -1, -1):
        hit = None
        for r in range(len(rows) - 1, pivot - 1, -1):
            if rows[r][col] != 0:
                hit = r
                break
        if hit is None:
            continue
        rows[pivot], rows[hit] = rows[hit], rows[pivot]
        prow = rows[pivot]
        pval = prow[col]
        for r in range(pivot + 1, len(rows)):
            factor = rows[r][col]
            if factor == 0:
                continue
            ratio = factor / pval
            for c in range(ncols):
                if prow[c]:
                    rows[r][c] -= ratio * prow[c]
        pivot += 1
        if pivot == len(rows):
            break
    return pivot


def solve_exact(matrix, rhs):
    """Solve a square nonsingular rational system by elimination with the
    largest-absolute-value pivot."""
    k = len(matrix)
    a = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(k):
        piv = max(range(col, k), key=lambda r: abs(a[r][col]))
        if a[piv][col] == 0:
            raise ValueError("singular system")
        a[col], a[piv] = a[piv], a[col]
        pval = a[col][col]
        for r in range(k):
            if r == col or a[r][col] == 0:
                continue
            ratio = a[r][col] / pval
            for c in range(col, k + 1):
                a[r][c] -= ratio * a[col][c]
    return [a[i][k] / a[i][i] for i in range(k)]


def lifted_indicator(n: int, points, m: int) -> ModuleVector:
    """Containment indicator K -> 1 if points ⊆ K else 0, built directly."""
    points = tuple(sorted(points))
    vals = [Fraction(1) if set(points) <= set(K) else Fraction(0) for K in enumerate_subsets(n, m)]
    return ModuleVector(n, m, vals)


def least_squares_onto_lifted_span(h: ModuleVector, l: int) -> ModuleVector:
    """Orthogonal projection of h onto the span of all lifted order-l indicators,
    via exact normal equations.  l = 0 projects onto constants."""
    n, m = h.n, h.l
    if l == 0:
        return ModuleVector.constant(n, m, h.mean())
    basis = [u_statistic_lift(indicator(n, J), m) for J in enumerate_subsets(n, l)]
    gram = [[inner_product(u, v) for v in basis] for u in basis]
    rhs = [inner_product(u, h) for u in basis]
    coeffs = solve_exact(gram, rhs)
    out = ModuleVector.zero(n, m)
    for c, v in zip(coeffs, basis):
        out = out + c * v
    return out


def hoeffding_projection_by_least_squares(h: ModuleVector, l: int) -> ModuleVector:
    """project(h, l) recomputed as the difference of two exact least-squares
    projections: onto the order-l lifted span minus onto the order-(l-1) span."""
    if l == 0:
        return ModuleVector.constant(h.n, h.l, h.mean())
    return least_squares_onto_lifted_span(h, l) - least_squares_onto_lifted_span(h, l - 1)


def brute_isotypic_projection(f: ModuleVector, l: int, chi) -> ModuleVector:
    """Literal per-permutation group average with caller-supplied character
    values: (dim/n!) sum_x chi(x) f(x^{-1} K).  No weight-matrix shortcut."""
    from spechtstat import dimension

    n, m = f.n, f.l
    out = []
    for K in enumerate_subsets(n, m):
        total = Fraction(0)
        for x in enumerate_permutations(n, ceiling=None):
            total += chi(x) * f[apply_perm_to_subset(x.inverse(), K)]
        out.append(Fraction(dimension(n, l), factorial(n)) * total)
    return ModuleVector(n, m, out)


def combinations_of(population, r):
    return combinations(population, r)
