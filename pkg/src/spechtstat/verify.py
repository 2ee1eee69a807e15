"""Verification suites: the library's central identities as executable checks.

Each suite takes a `RunConfig`, generates reproducible pseudorandom inputs,
and asserts exact rational identities (zero tolerance everywhere).  A
`VerificationReport` collects named pass/fail checks; rendering a report is
deterministic, so identical configurations produce byte-identical output.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .algebra import ModuleVector, act, indicator, inner_product, rank_of_span
from .characters import dimension
from .combinatorics import (
    Permutation,
    Tableau,
    enumerate_permutations,
    enumerate_subsets,
    subset_index,
)
from .errors import DomainError, ResourceLimitError
from .fileformats import module_vector_to_text
from .hoeffding import (
    DEFAULT_ORACLE_CEILING,
    character_projection_oracle,
    clear_oracle_cache,
    coefficient_table,
    conditional_expectation,
    decompose,
    is_completely_degenerate,
)
from .specht import lift_to_hoeffding, polytabloid, specht_basis

_ZERO = Fraction(0)


class Lcg64:
    """64-bit linear congruential generator with Knuth's MMIX constants:

        state' = (6364136223846793005 * state + 1442695040888963407) mod 2^64

    Each step returns the new state; bounded draws use the top 32 bits.  The
    only requirement here is cross-platform reproducibility, not statistical
    quality.
    """

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        if not 0 <= seed <= self.MASK:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.state = seed

    def next_uint(self) -> int:
        self.state = (self.MULTIPLIER * self.state + self.INCREMENT) & self.MASK
        return self.state

    def int_in(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo..hi] (inclusive)."""
        return lo + (self.next_uint() >> 32) % (hi - lo + 1)

    def shuffle(self, items: list) -> list:
        out = list(items)
        for i in range(len(out) - 1, 0, -1):
            j = self.int_in(0, i)
            out[i], out[j] = out[j], out[i]
        return out

    def permutation(self, n: int) -> Permutation:
        return Permutation(self.shuffle(list(range(1, n + 1))))


def random_module_vector(n: int, m: int, seed: int) -> ModuleVector:
    """Reproducible pseudorandom vector: numerators in [-9..9], denominators in [1..9].

    Identical (n, m, seed) always yields the identical vector, on any platform.
    """
    gen = Lcg64(seed)
    vals = []
    for _ in range(comb(n, m)):
        num = gen.int_in(-9, 9)
        den = gen.int_in(1, 9)
        vals.append(Fraction(num, den))
    return ModuleVector(n, m, vals)


@dataclass(frozen=True)
class RunConfig:
    """Parameters shared by all verification suites."""

    n: int
    m: int
    seed: int = 0
    trials: int = 20
    brute_force_ceiling: int = DEFAULT_ORACLE_CEILING
    report_path: str | None = None

    def __post_init__(self):
        if self.m < 1 or 2 * self.m > self.n:
            raise DomainError(f"need 1 <= m <= n/2, got n={self.n}, m={self.m}")
        if not 0 <= self.seed < 2**64:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.trials < 0:
            raise DomainError(f"trials must be non-negative, got {self.trials}")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    suite: str
    n: int
    m: int
    seed: int
    trials: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        lines = [f"suite {self.suite}: n={self.n} m={self.m} seed={self.seed} trials={self.trials}"]
        for c in self.checks:
            tag = "PASS" if c.passed else "FAIL"
            line = f"  [{tag}] {c.name}"
            if c.detail:
                detail = c.detail.replace("\n", "\n        ")
                line += f" -- {detail}"
            lines.append(line)
        passed = sum(1 for c in self.checks if c.passed)
        verdict = "PASS" if self.ok else "FAIL"
        lines.append(f"result: {verdict} ({passed}/{len(self.checks)} checks)")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "m": self.m,
            "seed": self.seed,
            "trials": self.trials,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
        }


class _Collector:
    """Aggregates per-trial outcomes into one named check with first-failure detail."""

    def __init__(self):
        self.records: dict[str, CheckResult] = {}
        self.counts: dict[str, tuple[int, int]] = {}

    def record(self, name: str, passed: bool, detail: str = "") -> None:
        good, total = self.counts.get(name, (0, 0))
        self.counts[name] = (good + (1 if passed else 0), total + 1)
        if name not in self.records:
            self.records[name] = CheckResult(name, passed, detail if not passed else "")
        elif not passed and self.records[name].passed:
            self.records[name] = CheckResult(name, False, detail)

    def results(self) -> list[CheckResult]:
        out = []
        for name, result in self.records.items():
            good, total = self.counts[name]
            if result.passed and total > 1:
                result = CheckResult(name, True, f"{good}/{total} instances")
            out.append(result)
        return out


def _offending(trial: int, vec: ModuleVector, note: str = "") -> str:
    head = f"trial {trial}" + (f" ({note})" if note else "")
    return head + "; input:\n" + module_vector_to_text(vec).rstrip("\n")


def verify_decomposition(config: RunConfig) -> VerificationReport:
    """Reconstruction, component orthogonality, kernel degeneracy, idempotence,
    and the covariance expansion, on seeded random vectors."""
    n, m = config.n, config.m
    report = VerificationReport("decomp", n, m, config.seed, config.trials)
    col = _Collector()
    gen = Lcg64(config.seed)

    const = ModuleVector.constant(n, m, Fraction(7, 3))
    dec_const = decompose(const)
    col.record(
        "constant_input_zero_components",
        all(dec_const.components[l].is_zero() for l in range(1, m + 1))
        and all(dec_const.kernels[l].is_zero() for l in range(1, m + 1))
        and dec_const.components[0] == const,
    )

    zero = ModuleVector.zero(n, m)
    for trial in range(config.trials):
        h = random_module_vector(n, m, gen.next_uint())
        f = random_module_vector(n, m, gen.next_uint())
        dec_h = decompose(h)
        dec_f = decompose(f)

        total = dec_h.components[0]
        for l in range(1, m + 1):
            total = total + dec_h.components[l]
        col.record("reconstruction", total == h, _offending(trial, h))

        ortho = all(
            inner_product(dec_h.components[i], dec_h.components[j]) == 0
            for i in range(m + 1)
            for j in range(i + 1, m + 1)
        )
        col.record("component_orthogonality", ortho, _offending(trial, h))

        degen = all(is_completely_degenerate(dec_h.kernels[l]) for l in range(1, m + 1))
        col.record("kernel_degeneracy", degen, _offending(trial, h))

        idem = True
        for l in range(m + 1):
            again = decompose(dec_h.components[l])
            for j in range(m + 1):
                want = dec_h.components[l] if j == l else zero
                if again.components[j] != want:
                    idem = False
        col.record("projection_idempotence", idem, _offending(trial, h))

        lhs = inner_product(h, f)
        rhs = dec_h.mean * dec_f.mean + sum(
            (
                inner_product(dec_h.components[l], dec_f.components[l])
                for l in range(1, m + 1)
            ),
            _ZERO,
        )
        col.record("covariance_expansion", lhs == rhs, _offending(trial, h, "paired input"))

    report.checks = col.results()
    return report


def _double_sum_values(f: ModuleVector, l: int) -> ModuleVector:
    # The fully spelled-out projection expression: at each m-subset, sum over
    # its l-subsets of the weighted centered conditional expectations.  Kept
    # free of the kernel/lift plumbing on purpose.
    n, m = f.n, f.l
    table = coefficient_table(n, m)
    mean = f.mean()
    scale = table.ratio(m, l)
    cond: dict[tuple[int, ...], Fraction] = {}

    def centered(points: tuple[int, ...]) -> Fraction:
        got = cond.get(points)
        if got is None:
            got = conditional_expectation(f, points)
            cond[points] = got
        return got - mean

    out = []
    for K in enumerate_subsets(n, m):
        total = _ZERO
        for J in itertools.combinations(K, l):
            acc = _ZERO
            for a in range(1, l + 1):
                w = table.weight(l, a)
                for A in itertools.combinations(J, a):
                    acc += w * centered(A)
            total += acc
        out.append(scale * total)
    return ModuleVector(n, m, out)


def _fixed_point_route(f: ModuleVector) -> ModuleVector:
    # Order-1 projection via the explicit fixed-point count weighting
    # (fix(x) - 1), summed over all n! permutations.
    n, m = f.n, f.l
    subs = enumerate_subsets(n, m)
    idx = subset_index(n, m)
    vals = f.values
    acc = [_ZERO] * len(subs)
    for x in enumerate_permutations(n, ceiling=None):
        w = x.fixed_points() - 1
        if w == 0:
            continue
        img = x.images
        for k, K in enumerate(subs):
            v = vals[idx[tuple(sorted(img[a - 1] for a in K))]]
            if v:
                acc[k] += w * v
    scale = Fraction(n - 1, factorial(n))
    return ModuleVector(n, m, [scale * v for v in acc])


def verify_equivalence(config: RunConfig) -> VerificationReport:
    """The central identity: the n!-permutation character-projection oracle equals
    the kernel-route projection, entrywise-exactly, at every order."""
    n, m = config.n, config.m
    if n > config.brute_force_ceiling:
        raise ResourceLimitError(
            f"equivalence suite needs the n!-oracle; n={n} exceeds ceiling "
            f"{config.brute_force_ceiling}"
        )
    report = VerificationReport("equiv", n, m, config.seed, config.trials)
    col = _Collector()
    gen = Lcg64(config.seed)

    for trial in range(config.trials):
        f = random_module_vector(n, m, gen.next_uint())
        fast = decompose(f)
        oracle_sum = ModuleVector.zero(n, m)
        for l in range(m + 1):
            slow = character_projection_oracle(f, l, ceiling=config.brute_force_ceiling)
            oracle_sum = oracle_sum + slow
            col.record(
                f"oracle_equals_projection_l{l}",
                slow == fast.components[l],
                _offending(trial, f),
            )
            if l >= 1:
                col.record(
                    f"oracle_equals_double_sum_l{l}",
                    slow == _double_sum_values(f, l),
                    _offending(trial, f),
                )
        col.record("oracle_components_sum_to_input", oracle_sum == f, _offending(trial, f))
        if trial == 0:
            col.record(
                "order1_fixed_point_weighting",
                _fixed_point_route(f) == fast.components[1],
                _offending(trial, f),
            )

    comps_by_subset = [decompose(indicator(n, K)).components for K in enumerate_subsets(n, m)]
    for l in range(m + 1):
        rank = rank_of_span([c[l] for c in comps_by_subset])
        col.record(
            f"projection_image_rank_l{l}",
            rank == dimension(n, l),
            f"rank {rank}, expected {dimension(n, l)}",
        )

    report.checks = col.results()
    return report


def verify_shift_orthogonality(config: RunConfig) -> VerificationReport:
    """Orthogonality of different-order components survives shifting one argument:
    for every overlap r, the exact average over all n! permutations of
    F(x{1..m}) * H(x k_r) vanishes, where k_r = {1..r, m+1..2m-r}."""
    n, m = config.n, config.m
    if n > config.brute_force_ceiling:
        raise ResourceLimitError(
            f"shift suite needs an n!-average; n={n} exceeds ceiling "
            f"{config.brute_force_ceiling}"
        )
    report = VerificationReport("shift", n, m, config.seed, config.trials)
    col = _Collector()
    gen = Lcg64(config.seed)

    idx = subset_index(n, m)
    base = tuple(range(1, m + 1))
    overlap_sets = {r: tuple(range(1, r + 1)) + tuple(range(m + 1, 2 * m - r + 1)) for r in range(m + 1)}

    for trial in range(config.trials):
        f0 = random_module_vector(n, m, gen.next_uint())
        h0 = random_module_vector(n, m, gen.next_uint())
        fc = decompose(f0).components
        hc = decompose(h0).components

        sums: dict[tuple[int, int, int], Fraction] = {
            (j, l, r): _ZERO for j in range(m + 1) for l in range(m + 1) for r in range(m + 1)
        }
        same: dict[int, Fraction] = {j: _ZERO for j in range(m + 1)}
        for x in enumerate_permutations(n, ceiling=None):
            img = x.images
            bpos = idx[tuple(sorted(img[a - 1] for a in base))]
            kpos = {
                r: idx[tuple(sorted(img[a - 1] for a in k))] for r, k in overlap_sets.items()
            }
            for j in range(m + 1):
                fv = fc[j].values[bpos]
                if fv:
                    same[j] += fv * fc[j].values[bpos]
                    for l in range(m + 1):
                        if l == j:
                            continue
                        for r in range(m + 1):
                            hv = hc[l].values[kpos[r]]
                            if hv:
                                sums[j, l, r] += fv * hv

        for j in range(m + 1):
            for l in range(m + 1):
                if l == j:
                    continue
                for r in range(m + 1):
                    col.record(
                        f"shifted_orthogonality_j{j}_l{l}_r{r}",
                        sums[j, l, r] == 0,
                        _offending(trial, f0, f"j={j} l={l} r={r}"),
                    )

        # Negative control: the same-order, full-overlap sum is a squared norm,
        # so it must be strictly positive for any nonzero component.  The suite
        # asserts nothing about same-order shifted sums beyond this.
        witness = [j for j in range(m + 1) if not fc[j].is_zero()]
        col.record(
            "negative_control_same_order_norm_positive",
            bool(witness) and all(same[j] > 0 for j in witness),
            _offending(trial, f0),
        )

    report.checks = col.results()
    return report


def verify_specht(config: RunConfig) -> VerificationReport:
    """Polytabloid construction, basis ranks, equivariance, and the span identity
    between lifted standard polytabloids and the projection image."""
    n, m = config.n, config.m
    report = VerificationReport("specht", n, m, config.seed, config.trials)
    col = _Collector()
    gen = Lcg64(config.seed)

    # Worked four-term example: the (4,2)-shape polytabloid of ((1,2,3,4);(5,6)).
    t0 = Tableau((1, 2, 3, 4), (5, 6))
    expected = (
        indicator(6, (5, 6))
        - indicator(6, (1, 6))
        - indicator(6, (2, 5))
        + indicator(6, (1, 2))
    )
    col.record("polytabloid_four_term_example", polytabloid(t0) == expected)

    for l in range(1, m + 1):
        basis = specht_basis(n, l)
        rank = rank_of_span(basis)
        col.record(
            f"specht_basis_rank_l{l}",
            len(basis) == dimension(n, l) and rank == dimension(n, l),
            f"{len(basis)} polytabloids, rank {rank}, expected {dimension(n, l)}",
        )

    for trial in range(config.trials):
        x = gen.permutation(n)
        arrangement = gen.shuffle(list(range(1, n + 1)))
        t = Tableau(tuple(arrangement[: n - m]), tuple(arrangement[n - m :]))
        pt = polytabloid(t)
        col.record(
            "polytabloid_equivariance",
            polytabloid(t.apply(x)) == act(x, pt),
            f"trial {trial}; x={list(x.images)}, tableau={t.text()}",
        )
        col.record(
            "lift_equivariance",
            lift_to_hoeffding(act(x, pt), m) == act(x, lift_to_hoeffding(pt, m)),
            f"trial {trial}; x={list(x.images)}, tableau={t.text()}",
        )

    comps_by_subset = [decompose(indicator(n, K)).components for K in enumerate_subsets(n, m)]
    for l in range(1, m + 1):
        lifted = [lift_to_hoeffding(v, m) for v in specht_basis(n, l)]
        image = [c[l] for c in comps_by_subset]
        want = dimension(n, l)
        ranks = (rank_of_span(lifted), rank_of_span(image), rank_of_span(lifted + image))
        col.record(
            f"lifted_specht_equals_projection_image_l{l}",
            ranks == (want, want, want),
            f"ranks {ranks}, expected all {want}",
        )

    report.checks = col.results()
    return report


SUITES = {
    "decomp": verify_decomposition,
    "equiv": verify_equivalence,
    "shift": verify_shift_orthogonality,
    "specht": verify_specht,
}


def run_suites(config: RunConfig, which: str = "all") -> list[VerificationReport]:
    if which == "all":
        names = list(SUITES)
    elif which in SUITES:
        names = [which]
    else:
        raise DomainError(f"unknown suite {which!r}; choose from all, {', '.join(SUITES)}")
    return [SUITES[name](config) for name in names]


@dataclass(frozen=True)
class BenchResult:
    n: int
    m: int
    kernel_seconds: float
    oracle_seconds: float | None  # None when n exceeds the ceiling

    def render(self) -> str:
        lines = [
            f"bench: n={self.n} m={self.m}",
            f"  kernel route (full decomposition): {self.kernel_seconds:.6f} s",
        ]
        if self.oracle_seconds is None:
            lines.append("  oracle route: infeasible above the brute-force ceiling")
        else:
            lines.append(
                f"  oracle route (all orders, n! sum): {self.oracle_seconds:.6f} s"
            )
        return "\n".join(lines) + "\n"


def bench(
    n: int, m: int, seed: int = 0, ceiling: int = DEFAULT_ORACLE_CEILING
) -> BenchResult:
    """Time the kernel route against the n!-oracle route on one random vector."""
    h = random_module_vector(n, m, seed)
    start = time.perf_counter()
    decompose(h)
    kernel_seconds = time.perf_counter() - start

    oracle_seconds = None
    if n <= ceiling:
        clear_oracle_cache()
        start = time.perf_counter()
        for l in range(m + 1):
            character_projection_oracle(h, l, ceiling=ceiling)
        oracle_seconds = time.perf_counter() - start
    return BenchResult(n, m, kernel_seconds, oracle_seconds)
