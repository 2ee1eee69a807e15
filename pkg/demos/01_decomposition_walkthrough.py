"""Walkthrough: decomposing a symmetric statistic of draws without replacement.

We take a statistic of m = 2 draws from a population of n = 5, split it into
its mean and two orthogonal U-statistic components, and check the defining
identities exactly.  Run as: python demos/01_decomposition_walkthrough.py
"""

from fractions import Fraction

from spechtstat import (
    ModuleVector,
    conditional_expectation,
    decompose,
    inner_product,
    is_completely_degenerate,
    random_module_vector,
)

n, m = 5, 2

print(f"population [1..{n}], statistic of the first {m} draws without replacement")
h = random_module_vector(n, m, seed=2024)
print("\ninput statistic h (value at each 2-subset):")
for subset, value in h.items():
    print(f"  h{subset} = {value}")

print(f"\nglobal mean E[h] = {h.mean()}")
print("conditional expectations given one draw:")
for j in range(1, n + 1):
    print(f"  E[h | first draw = {j}] = {conditional_expectation(h, (j,))}")

dec = decompose(h)
print("\norder-1 kernel (one value per point):")
for subset, value in dec.kernels[1].items():
    print(f"  phi1{subset} = {value}")
print("order-2 kernel equals the residual component:")
for subset, value in dec.kernels[2].items():
    print(f"  phi2{subset} = {value}")

print("\nchecks, all exact:")
print("  components sum back to h:      ", dec.reconstruction() == h)
print("  kernels completely degenerate: ",
      all(is_completely_degenerate(dec.kernels[l]) for l in (1, 2)))
pairs = [(i, j) for i in range(3) for j in range(i + 1, 3)]
print("  components pairwise orthogonal:",
      all(inner_product(dec.components[i], dec.components[j]) == 0 for i, j in pairs))

print("\nvariance split (inner products are expectations of products):")
total = inner_product(h, h) - h.mean() ** 2
parts = [inner_product(dec.components[l], dec.components[l]) for l in (1, 2)]
print(f"  Var h = {total} = {parts[0]} + {parts[1]} (order 1 + order 2)")
assert total == parts[0] + parts[1]

print("\na constant statistic has no fluctuation components:")
const = decompose(ModuleVector.constant(n, m, Fraction(3, 7)))
print("  all kernels zero:", all(const.kernels[l].is_zero() for l in (1, 2)))
