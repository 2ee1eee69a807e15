"""Walkthrough: two-row characters by cycle type.

The order-l character value at x is the count of setwise-fixed l-subsets minus
the count of fixed (l-1)-subsets; at order 1 that is "fixed points minus one".
Run as: python demos/03_character_tables.py
"""

from math import factorial

from spechtstat import (
    Permutation,
    character_table,
    dimension,
    fixed_subset_count,
    two_row_character,
)

n = 6
table = character_table(n, n // 2)

header = f"{'cycle type':>12} {'class size':>10} " + " ".join(
    f"{f'chi_{l}':>6}" for l in range(n // 2 + 1)
)
print(header)
for row in table.rows:
    print(
        f"{'-'.join(map(str, row.cycle_type)):>12} {row.class_size:>10} "
        + " ".join(f"{v:>6}" for v in row.values)
    )

print("\nidentity column carries the dimensions:",
      [dimension(n, l) for l in range(n // 2 + 1)])

x = Permutation.from_cycles(n, (1, 2, 3))
print(f"\nfor x = a 3-cycle on [1..{n}]:")
print("  fixed 1-subsets:", fixed_subset_count(x, 1), " fixed 2-subsets:", fixed_subset_count(x, 2))
print("  chi_1(x) = fixed points - 1 =", two_row_character(n, 1, x))
print("  chi_2(x) = fixed 2-subsets - fixed 1-subsets =", two_row_character(n, 2, x))

print("\nfirst orthogonality, per column (must equal n! = %d):" % factorial(n))
for l in range(n // 2 + 1):
    total = sum(row.class_size * row.values[l] ** 2 for row in table.rows)
    print(f"  l={l}: {total}")

print("\nCSV export (first three lines):")
print("\n".join(table.csv_text().splitlines()[:3]))
