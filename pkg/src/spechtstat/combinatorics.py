"""Subsets, permutations, cycle types and two-row tableaux over [1..n].

Everything here is 1-based: the ground set is [n] = {1, ..., n}.  A subset is
a strictly increasing tuple of ints, a cycle type is a weakly decreasing tuple
of positive ints summing to n.  All values are immutable and hashable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError, ResourceLimitError

Subset = tuple[int, ...]
CycleType = tuple[int, ...]

#: Enumerating all of S_n is refused above this degree unless overridden.
DEFAULT_PERMUTATION_CEILING = 9


@lru_cache(maxsize=None)
def enumerate_subsets(n: int, l: int) -> tuple[Subset, ...]:
    """All l-element subsets of [1..n], sorted tuples in lexicographic order.

    This order is the canonical indexing contract: vector coordinates and
    serialized records always follow it.
    """
    if n < 1:
        raise DomainError(f"population size must be positive, got n={n}")
    if l < 0 or l > n:
        raise DomainError(f"subset size l={l} outside [0..{n}]")
    return tuple(itertools.combinations(range(1, n + 1), l))


@lru_cache(maxsize=None)
def subset_index(n: int, l: int) -> dict[Subset, int]:
    """Position of each l-subset in the canonical order.  Treat as read-only."""
    return {s: i for i, s in enumerate(enumerate_subsets(n, l))}


def check_subset(n: int, elements: Iterable[int]) -> Subset:
    """Validate and canonicalize a subset of [1..n] (sorted, distinct, in range)."""
    elems = tuple(sorted(elements))
    if len(set(elems)) != len(elems):
        raise DomainError(f"subset has repeated elements: {elems}")
    if elems and (elems[0] < 1 or elems[-1] > n):
        raise DomainError(f"subset {elems} not contained in [1..{n}]")
    return elems


def parse_subset(text: str) -> Subset:
    """Parse the comma-joined text form, e.g. '1,4,7'.  '-' denotes the empty set."""
    text = text.strip()
    if text in ("", "-"):
        return ()
    try:
        elems = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise DomainError(f"bad subset text {text!r}") from None
    if any(e < 1 for e in elems) or tuple(sorted(set(elems))) != tuple(sorted(elems)):
        raise DomainError(f"bad subset text {text!r}")
    return tuple(sorted(elems))


def format_subset(s: Subset) -> str:
    return ",".join(str(e) for e in s) if s else "-"


def parse_cycle_type(text: str) -> CycleType:
    """Parse the dash-joined text form, e.g. '3-2-1-1'."""
    try:
        parts = tuple(int(p) for p in text.strip().split("-"))
    except ValueError:
        raise DomainError(f"bad cycle type text {text!r}") from None
    if not parts or any(p < 1 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise DomainError(f"bad cycle type text {text!r}")
    return parts


def format_cycle_type(ct: CycleType) -> str:
    return "-".join(str(p) for p in ct)


class Permutation:
    """A bijection of [1..n], stored as the image tuple: images[a-1] = x(a).

    Composition follows (x * y)(a) = x(y(a)).
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"not a permutation of [1..{len(images)}]: {images}")
        self.images = images

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        """The permutation of [1..n] swapping i and j."""
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise DomainError(f"bad transposition ({i} {j}) on [1..{n}]")
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    @classmethod
    def from_cycles(cls, n: int, *cycles: Iterable[int]) -> "Permutation":
        """Build from disjoint cycles, e.g. from_cycles(5, (1, 2, 3), (4, 5))."""
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            cyc = tuple(cycle)
            if any(a < 1 or a > n for a in cyc) or seen.intersection(cyc) or len(set(cyc)) != len(cyc):
                raise DomainError(f"bad cycle {cyc} on [1..{n}]")
            seen.update(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(images)

    def __call__(self, a: int) -> int:
        return self.images[a - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise DomainError(f"degree mismatch: {self.n} vs {other.n}")
        img = self.images
        return Permutation(img[b - 1] for b in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for a, b in enumerate(self.images, start=1):
            inv[b - 1] = a
        return Permutation(inv)

    def cycle_type(self) -> CycleType:
        """Multiset of cycle lengths, sorted descending."""
        seen = [False] * self.n
        lengths = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            length = 0
            a = start
            while not seen[a - 1]:
                seen[a - 1] = True
                a = self.images[a - 1]
                length += 1
            lengths.append(length)
        lengths.sort(reverse=True)
        return tuple(lengths)

    def fixed_points(self) -> int:
        return sum(1 for a, b in enumerate(self.images, start=1) if a == b)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def apply_perm_to_subset(x: Permutation, s: Subset) -> Subset:
    """Pointwise image {x(j) : j in s}, re-sorted ascending."""
    img = x.images
    n = len(img)
    if any(j < 1 or j > n for j in s):
        raise DomainError(f"subset {s} not contained in [1..{n}]")
    return tuple(sorted(img[j - 1] for j in s))


def cycle_type(x: Permutation) -> CycleType:
    return x.cycle_type()


@lru_cache(maxsize=None)
def _fixed_subset_poly(ct: CycleType) -> tuple[int, ...]:
    # Coefficients of prod over cycle lengths c of (1 + z^c); coefficient of
    # z^l counts the l-subsets that are unions of whole cycles, i.e. the
    # setwise-fixed l-subsets.
    coeffs = [1]
    for c in ct:
        nxt = coeffs + [0] * c
        for i, v in enumerate(coeffs):
            nxt[i + c] += v
        coeffs = nxt
    return tuple(coeffs)


def fixed_subset_count_of_type(ct: CycleType, l: int) -> int:
    """Number of l-subsets fixed setwise by any permutation of cycle type ct."""
    if l < 0:
        return 0
    poly = _fixed_subset_poly(tuple(ct))
    return poly[l] if l < len(poly) else 0


def fixed_subset_count(x: Permutation, l: int) -> int:
    """Number of l-subsets S with apply_perm_to_subset(x, S) = S."""
    return fixed_subset_count_of_type(x.cycle_type(), l)


def enumerate_permutations(
    n: int, ceiling: int | None = DEFAULT_PERMUTATION_CEILING
) -> Iterator[Permutation]:
    """All n! permutations of [1..n] in lexicographic order of image tuples.

    Factorial cost by design; refuses n above `ceiling` at call time (pass a
    larger bound or None to override).
    """
    if n < 1:
        raise DomainError(f"degree must be positive, got n={n}")
    if ceiling is not None and n > ceiling:
        raise ResourceLimitError(
            f"enumerating S_{n} exceeds the ceiling {ceiling}; "
            f"pass ceiling={n} (or None) to override"
        )
    return (Permutation(images) for images in itertools.permutations(range(1, n + 1)))


@dataclass(frozen=True)
class Tabloid:
    """A two-block row-unordered arrangement of [1..n], identified by its bottom block."""

    n: int
    bottom_block: Subset

    def __post_init__(self):
        object.__setattr__(self, "bottom_block", check_subset(self.n, self.bottom_block))
        m = len(self.bottom_block)
        if m < 1 or 2 * m > self.n:
            raise DomainError(f"bottom block size {m} outside [1..{self.n}/2]")

    @property
    def m(self) -> int:
        return len(self.bottom_block)

    @property
    def top_block(self) -> Subset:
        bottom = set(self.bottom_block)
        return tuple(a for a in range(1, self.n + 1) if a not in bottom)


@dataclass(frozen=True)
class Tableau:
    """An ordered two-row arrangement of [1..n]: top row of length n-m, bottom of length m."""

    top_row: tuple[int, ...]
    bottom_row: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "top_row", tuple(self.top_row))
        object.__setattr__(self, "bottom_row", tuple(self.bottom_row))
        n = len(self.top_row) + len(self.bottom_row)
        m = len(self.bottom_row)
        if m < 1 or 2 * m > n:
            raise DomainError(f"bottom row length {m} outside [1..{n}/2]")
        if sorted(self.top_row + self.bottom_row) != list(range(1, n + 1)):
            raise DomainError(
                f"rows {self.top_row} and {self.bottom_row} do not partition [1..{n}]"
            )

    @property
    def n(self) -> int:
        return len(self.top_row) + len(self.bottom_row)

    @property
    def m(self) -> int:
        return len(self.bottom_row)

    def columns(self) -> list[tuple[int, ...]]:
        """The m vertical pairs (top[k], bottom[k]) followed by the n-2m singletons."""
        m = self.m
        pairs = [(self.top_row[k], self.bottom_row[k]) for k in range(m)]
        singles = [(a,) for a in self.top_row[m:]]
        return pairs + singles

    def tabloid(self) -> Tabloid:
        """Forget the order within each row."""
        return Tabloid(self.n, tuple(sorted(self.bottom_row)))

    def apply(self, x: Permutation) -> "Tableau":
        """Entrywise image under x, preserving positions."""
        if x.n != self.n:
            raise DomainError(f"degree mismatch: {x.n} vs {self.n}")
        img = x.images
        return Tableau(
            tuple(img[a - 1] for a in self.top_row),
            tuple(img[a - 1] for a in self.bottom_row),
        )

    def is_standard(self) -> bool:
        """Strictly increasing rows and columns."""
        rows_ok = all(a < b for a, b in zip(self.top_row, self.top_row[1:])) and all(
            a < b for a, b in zip(self.bottom_row, self.bottom_row[1:])
        )
        cols_ok = all(self.top_row[k] < self.bottom_row[k] for k in range(self.m))
        return rows_ok and cols_ok

    @classmethod
    def parse(cls, text: str) -> "Tableau":
        """Parse the text form 'top;bottom', e.g. '2,1,3;5,4'."""
        parts = text.strip().split(";")
        if len(parts) != 2:
            raise DomainError(f"tableau text must have two ';'-separated rows: {text!r}")
        try:
            top = tuple(int(p) for p in parts[0].split(","))
            bottom = tuple(int(p) for p in parts[1].split(","))
        except ValueError:
            raise DomainError(f"bad tableau text {text!r}") from None
        return cls(top, bottom)

    def text(self) -> str:
        return ";".join(",".join(str(a) for a in row) for row in (self.top_row, self.bottom_row))


def tabloid_of(t: Tableau) -> Tabloid:
    return t.tabloid()


def columns(t: Tableau) -> list[tuple[int, ...]]:
    return t.columns()


def standard_tableaux(n: int, l: int) -> tuple[Tableau, ...]:
    """All standard tableaux with top row of length n-l and bottom row of length l.

    Bottom rows run over l-subsets in lexicographic order; the top row is the
    sorted complement; keep the fillings whose columns strictly increase.
    """
    if l < 1 or 2 * l > n:
        raise DomainError(f"bottom row length l={l} outside [1..{n}/2]")
    out = []
    full = set(range(1, n + 1))
    for bottom in enumerate_subsets(n, l):
        top = tuple(sorted(full.difference(bottom)))
        if all(top[k] < bottom[k] for k in range(l)):
            out.append(Tableau(top, bottom))
    return tuple(out)


def standard_tableau_count(n: int, l: int) -> int:
    """Number of standard two-row tableaux, counted by direct enumeration."""
    if l < 0 or 2 * l > n:
        raise DomainError(f"shape ({n - l},{l}) is not a valid two-row shape")
    if l == 0:
        return 1
    return len(standard_tableaux(n, l))
