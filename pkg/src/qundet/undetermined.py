"""Decide when codeword pairs are undetermined by reduced density matrices.

The symbolic decision rule: for a k=1 code with logical phase operator
Z-bar, the difference of the two codeword projectors expands as

    rho_0 - rho_1 = 2^(1-n) * sum over the coset Z-bar * S.

A Pauli survives a partial trace iff it acts as identity on every
traced qubit, and the surviving restrictions are linearly independent,
so the reduced matrices are equal iff NO coset element has its support
entirely inside the kept set.  Consequences used throughout:

  * equality after tracing any D qubits  <=>  every coset element has
    weight >= n - D + 1, i.e. D >= n - w_min + 1;
  * undeterminedness is monotone upward in D;
  * the k=2 equal mixtures obey the same rule with the coset
    (Z-bar_1 Z-bar_2) * S.

Everything here is exact integer/bit work; the dense module provides
the independent floating-point verification.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from qundet.codes import CodeSpec
from qundet.pauli import PauliOperator
from qundet.stabilizer import (
    MAX_ENUM_N,
    StabilizerGroup,
    coset_min_weight,
    code_distance,
    logical_x_set,
)

# cost ceiling (subset count * coset size) for automatic scan cross-checks
_AUTO_SCAN_BUDGET = 4_000_000

X_SET_COUNTING_NOTE = (
    "logical X sets and E_D counts are over distinct unsigned Paulis "
    "(phase stripped), not over cosets modulo the stabilizer group"
)


@lru_cache(maxsize=128)
def _group_of(spec: CodeSpec) -> StabilizerGroup:
    return spec.group()


def _difference_rep(spec: CodeSpec) -> PauliOperator:
    """Z-bar for k=1; Z-bar_1 * Z-bar_2 for the k=2 equal mixtures."""
    z_bars = spec.logical_z_ops()
    if spec.k == 1:
        return z_bars[0]
    if spec.k == 2:
        return z_bars[0] * z_bars[1]
    raise ValueError(f"unsupported k={spec.k}")


@lru_cache(maxsize=128)
def _coset_support_masks(spec: CodeSpec) -> tuple[tuple[int, PauliOperator], ...]:
    """(support_mask, element) over the difference coset, enumeration order."""
    group = _group_of(spec)
    rep = _difference_rep(spec)
    return tuple((el.support_mask, el) for el in group.coset(rep))


def _subset_mask(subset: Iterable[int], n: int) -> int:
    mask = 0
    for q in subset:
        if not 1 <= q <= n:
            raise ValueError(f"qubit {q} outside 1..{n}")
        mask |= 1 << (q - 1)
    return mask


def reduced_equal_on(
    spec: CodeSpec, traced_out: Iterable[int]
) -> tuple[bool, PauliOperator | None]:
    """Are the codeword reductions equal after tracing out these qubits?

    Returns (equal, witness); the witness is a difference-coset element
    supported inside the kept set when the reductions differ (the
    lexicographically least such element), else None.  Handles k=1
    codeword pairs and the k=2 equal mixtures uniformly.
    """
    traced = sorted(set(traced_out))
    if not 1 <= len(traced) <= spec.n - 1:
        raise ValueError(f"traced set must have 1..{spec.n - 1} qubits, got {traced}")
    mask = _subset_mask(traced, spec.n)
    surviving = [el for sup, el in _coset_support_masks(spec) if sup & mask == 0]
    if not surviving:
        return True, None
    return False, min(surviving, key=lambda p: p.letters)


class UnconditionalResult(NamedTuple):
    d_min: int | None
    w_min: int
    witness: PauliOperator


def unconditional_D(spec: CodeSpec, cross_check: bool | None = None) -> UnconditionalResult:
    """Smallest D with equality after tracing ANY D qubits, via w_min.

    d_min = n - w_min + 1, undefined (None) when w_min <= 1 because no
    feasible trace (at most n - 1 qubits) reaches equality.  When the
    subset-scan cost is affordable (or cross_check=True) the formula is
    re-derived by scanning all subsets at d_min and d_min - 1.
    """
    group = _group_of(spec)
    w_min, witness = coset_min_weight(group, _difference_rep(spec))
    d_min: int | None = spec.n - w_min + 1
    if d_min > spec.n - 1:
        d_min = None
    if cross_check is None:
        cost = (1 << group.rank) * sum(
            math.comb(spec.n, d) for d in ((d_min, d_min - 1) if d_min else (spec.n - 1,))
            if d and 1 <= d <= spec.n - 1
        )
        cross_check = cost <= _AUTO_SCAN_BUDGET
    if cross_check:
        _assert_scan_agreement(spec, d_min)
    return UnconditionalResult(d_min, w_min, witness)


def _assert_scan_agreement(spec: CodeSpec, d_min: int | None) -> None:
    if d_min is None:
        # even the largest feasible trace must leave some subset determined
        equal_all, _ = _scan_equal_all(spec, spec.n - 1)
        if equal_all:
            raise RuntimeError("coset formula and subset scan disagree (d_min=None)")
        return
    equal_all, _ = _scan_equal_all(spec, d_min)
    if not equal_all:
        raise RuntimeError(f"subset scan found a determined {d_min}-subset")
    if d_min > 1:
        equal_below, _ = _scan_equal_all(spec, d_min - 1)
        if equal_below:
            raise RuntimeError(f"all {d_min - 1}-subsets equal; d_min not minimal")


def _scan_equal_all(spec: CodeSpec, size: int) -> tuple[bool, tuple[int, ...] | None]:
    """(all subsets of this size equal?, first determined subset if any)."""
    for subset in itertools.combinations(range(1, spec.n + 1), size):
        equal, _ = reduced_equal_on(spec, subset)
        if not equal:
            return False, subset
    return True, None


@dataclass(frozen=True)
class ConditionalScan:
    """Partition of all size-d_prime traced-out subsets."""

    d_prime: int
    undetermined: tuple[tuple[int, ...], ...]
    determined: tuple[tuple[tuple[int, ...], PauliOperator], ...]

    @property
    def all_undetermined(self) -> bool:
        return not self.determined

    @property
    def any_undetermined(self) -> bool:
        return bool(self.undetermined)

    def as_dict(self) -> dict:
        return {
            "d_prime": self.d_prime,
            "undetermined": [list(s) for s in self.undetermined],
            "determined": [
                {"subset": list(s), "witness": str(w)} for s, w in self.determined
            ],
        }


def conditional_scan(spec: CodeSpec, d_prime: int) -> ConditionalScan:
    """Label every size-d_prime subset undetermined or determined.

    Determined subsets carry their distinguishing witness.  Subsets
    iterate lexicographically, so output order is reproducible.
    """
    if not 1 <= d_prime <= spec.n - 1:
        raise ValueError(f"d_prime must be in 1..{spec.n - 1}")
    undet: list[tuple[int, ...]] = []
    det: list[tuple[tuple[int, ...], PauliOperator]] = []
    for subset in itertools.combinations(range(1, spec.n + 1), d_prime):
        equal, witness = reduced_equal_on(spec, subset)
        if equal:
            undet.append(subset)
        else:
            det.append((subset, witness))
    return ConditionalScan(d_prime, tuple(undet), tuple(det))


def minimal_conditional_D(spec: CodeSpec) -> int | None:
    """Smallest subset size with at least one undetermined traced set."""
    for size in range(1, spec.n):
        for subset in itertools.combinations(range(1, spec.n + 1), size):
            equal, _ = reduced_equal_on(spec, subset)
            if equal:
                return size
    return None


@dataclass(frozen=True)
class CoverResult:
    """Support-exact undetected-error assignment for all size-D subsets."""

    d: int
    assignments: tuple[tuple[tuple[int, ...], PauliOperator], ...]
    uncovered: tuple[tuple[int, ...], ...]
    agrees_with_reduced: bool

    @property
    def full_cover(self) -> bool:
        return not self.uncovered

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "assignments": [
                {"subset": list(s), "operator": str(p)} for s, p in self.assignments
            ],
            "uncovered": [list(s) for s in self.uncovered],
            "full_cover": self.full_cover,
            "agrees_with_reduced": self.agrees_with_reduced,
        }


def undetected_error_cover(
    spec: CodeSpec, d: int, max_enum_n: int = MAX_ENUM_N
) -> CoverResult:
    """Find, per size-d subset, a logical X member supported exactly there.

    Full coverage is the structural counterpart of d-undeterminedness:
    every forgettable subset needs its own undetected error.
    ``agrees_with_reduced`` records whether full coverage coincides
    with every size-d trace being undetermined (measured, not assumed).
    """
    if not 1 <= d <= spec.n - 1:
        raise ValueError(f"d must be in 1..{spec.n - 1}")
    group = _group_of(spec)
    members = logical_x_set(group, _difference_rep(spec), max_enum_n)
    by_support: dict[tuple[int, ...], PauliOperator] = {}
    for p in members:
        if p.weight == d:
            key = tuple(sorted(p.support))
            by_support.setdefault(key, p)
    assignments = []
    uncovered = []
    for subset in itertools.combinations(range(1, spec.n + 1), d):
        if subset in by_support:
            assignments.append((subset, by_support[subset]))
        else:
            uncovered.append(subset)
    all_undet = _scan_equal_all(spec, d)[0]
    full = not uncovered
    return CoverResult(d, tuple(assignments), tuple(uncovered), full == all_undet)


class EDResult(NamedTuple):
    e_d: int
    binomial: int
    passed: bool


def necessary_ED(spec: CodeSpec, d: int, max_enum_n: int = MAX_ENUM_N) -> EDResult:
    """Count weight-d logical X members against the binomial threshold.

    E_D >= C(n, D) is necessary for unconditional D-undeterminedness:
    each of the C(n, D) supports needs its own undetected error.
    """
    if not 1 <= d <= spec.n:
        raise ValueError(f"d must be in 1..{spec.n}")
    group = _group_of(spec)
    members = logical_x_set(group, _difference_rep(spec), max_enum_n)
    e_d = sum(1 for p in members if p.weight == d)
    binomial = math.comb(spec.n, d)
    return EDResult(e_d, binomial, e_d >= binomial)


@dataclass(frozen=True)
class TracedownResult:
    """Oracle verdict for undeterminedness surviving a partial trace-down."""

    d_pure: int
    d_prime: int
    d_double: int
    traced_subset: tuple[int, ...]
    verdict: bool
    subsets_checked: int
    max_deviation: float

    def as_dict(self) -> dict:
        return {
            "d_pure": self.d_pure,
            "d_prime": self.d_prime,
            "d_double": self.d_double,
            "traced_subset": list(self.traced_subset),
            "verdict": self.verdict,
            "subsets_checked": self.subsets_checked,
            "max_deviation": self.max_deviation,
        }


def mixed_tracedown_check(
    spec: CodeSpec,
    d_prime: int,
    traced_subset: Sequence[int] | None = None,
    atol: float = 1e-9,
) -> TracedownResult:
    """Trace d_prime qubits off both codewords, then test D'' = D - d_prime.

    Dense-oracle computation: builds both codeword densities, traces out
    ``traced_subset`` (default the first d_prime qubits), and checks that
    every further (D - d_prime)-qubit trace of the two mixed states
    leaves equal matrices.  The remaining qubits renumber to 1..n-d_prime
    in ascending original order.
    """
    from qundet import dense

    if spec.k != 1:
        raise ValueError("mixed_tracedown_check needs a k=1 code")
    d_pure = unconditional_D(spec, cross_check=False).d_min
    if d_pure is None:
        raise ValueError("codeword pair has no unconditional D")
    if not 0 <= d_prime < d_pure:
        raise ValueError(f"d_prime must be in 0..{d_pure - 1}")
    if traced_subset is None:
        traced_subset = tuple(range(1, d_prime + 1))
    else:
        traced_subset = tuple(sorted(set(traced_subset)))
        if len(traced_subset) != d_prime:
            raise ValueError("traced_subset size must equal d_prime")
    d_double = d_pure - d_prime
    m = spec.n - d_prime
    rho0 = dense.partial_trace(dense.build_density(spec, 0), traced_subset, spec.n)
    rho1 = dense.partial_trace(dense.build_density(spec, 1), traced_subset, spec.n)
    worst = 0.0
    checked = 0
    for subset in itertools.combinations(range(1, m + 1), d_double):
        dev = dense.frobenius_distance(
            dense.partial_trace(rho0, subset, m), dense.partial_trace(rho1, subset, m)
        )
        worst = max(worst, dev)
        checked += 1
    return TracedownResult(
        d_pure, d_prime, d_double, traced_subset, worst < atol, checked, worst
    )


@dataclass(frozen=True)
class MixedPairResult:
    """Symbolic analysis of the k=2 equal-mixture pair."""

    d_mixed: int | None
    w_min: int
    witness: PauliOperator
    x12_size: int
    weight_d_members: tuple[PauliOperator, ...]

    def as_dict(self) -> dict:
        return {
            "d_mixed": self.d_mixed,
            "w_min": self.w_min,
            "witness": str(self.witness),
            "x12_size": self.x12_size,
            "weight_d_members": [str(p) for p in self.weight_d_members],
        }


def mixed_pair_n2(spec: CodeSpec, max_enum_n: int = MAX_ENUM_N) -> MixedPairResult:
    """D for the two k=2 equal mixtures, plus the X12 anticommutant.

    X12 is the symmetric difference of the two logical X sets, which
    equals the set of unsigned centralizer members anticommuting with
    Z-bar_1 Z-bar_2 (anticommuting with the product means anticommuting
    with exactly one factor).
    """
    if spec.k != 2:
        raise ValueError("mixed_pair_n2 needs a k=2 code")
    group = _group_of(spec)
    rep = _difference_rep(spec)
    w_min, witness = coset_min_weight(group, rep)
    d_mixed: int | None = spec.n - w_min + 1
    if d_mixed > spec.n - 1:
        d_mixed = None
    x12 = logical_x_set(group, rep, max_enum_n)
    weight_d = tuple(p for p in x12 if d_mixed is not None and p.weight == d_mixed)
    return MixedPairResult(d_mixed, w_min, witness, len(x12), weight_d)


@dataclass(frozen=True)
class UndeterminedReport:
    """Full symbolic analysis of one code, JSON-ready via as_dict()."""

    name: str
    n: int
    k: int
    rank: int
    distance: int
    w_min: int
    d_min: int | None
    threshold_shares: int | None
    x_set_size: int | None
    e_d_table: tuple[tuple[int, EDResult], ...]
    conditional: tuple[ConditionalScan, ...]
    mixed: MixedPairResult | None
    methods: tuple[str, ...]
    notes: tuple[str, ...] = field(default=(X_SET_COUNTING_NOTE,))

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "k": self.k,
            "rank": self.rank,
            "distance": self.distance,
            "w_min": self.w_min,
            "minimal_unconditional_d": self.d_min,
            "threshold_shares": self.threshold_shares,
            "x_set_size": self.x_set_size,
            "e_d_table": {
                str(d): {"count": r.e_d, "binomial": r.binomial, "pass": r.passed}
                for d, r in self.e_d_table
            },
            "conditional": {str(c.d_prime): c.as_dict() for c in self.conditional},
            "mixed": self.mixed.as_dict() if self.mixed else None,
            "methods": list(self.methods),
            "notes": list(self.notes),
        }


def analyze_code(
    spec: CodeSpec,
    conditional: Sequence[int] = (),
    max_trace: int | None = None,
    oracle: bool = False,
    oracle_atol: float = 1e-9,
) -> UndeterminedReport:
    """Run the full symbolic analysis, optionally oracle cross-checked.

    ``max_trace`` bounds the E_D table (default: just D = d_min when it
    exists); ``conditional`` lists the subset sizes to partition.  With
    ``oracle`` the symbolic verdict for every feasible subset is checked
    against dense partial traces; any disagreement raises.
    """
    group = _group_of(spec)
    rep = _difference_rep(spec)
    w_min, witness = coset_min_weight(group, rep)
    d_min: int | None = spec.n - w_min + 1
    if d_min > spec.n - 1:
        d_min = None
    distance = code_distance(group)
    if spec.n <= MAX_ENUM_N:
        x_size = len(logical_x_set(group, rep))
    else:
        x_size = None
    ed_ds: list[int]
    if max_trace is not None:
        ed_ds = list(range(1, min(max_trace, spec.n - 1) + 1))
    elif d_min is not None:
        ed_ds = [d_min]
    else:
        ed_ds = []
    e_d_table = tuple(
        (d, necessary_ED(spec, d)) for d in ed_ds if spec.n <= MAX_ENUM_N
    )
    scans = tuple(conditional_scan(spec, dp) for dp in sorted(set(conditional)))
    mixed = mixed_pair_n2(spec) if spec.k == 2 else None
    methods = ["symbolic"]
    if oracle:
        _oracle_sweep(spec, oracle_atol)
        methods.append("oracle")
    return UndeterminedReport(
        name=spec.name,
        n=spec.n,
        k=spec.k,
        rank=group.rank,
        distance=distance,
        w_min=w_min,
        d_min=d_min,
        threshold_shares=(spec.n - d_min + 1) if d_min is not None else None,
        x_set_size=x_size,
        e_d_table=e_d_table,
        conditional=scans,
        mixed=mixed,
        methods=tuple(methods),
    )


def _oracle_sweep(spec: CodeSpec, atol: float) -> None:
    """Dense cross-check of reduced_equal_on over every traced subset."""
    from qundet import dense

    if spec.k == 1:
        rho0 = dense.build_density(spec, 0)
        rho1 = dense.build_density(spec, 1)
    else:
        rho0 = dense.build_mixed_density(spec, 0)
        rho1 = dense.build_mixed_density(spec, 1)
    for size in range(1, spec.n):
        for subset in itertools.combinations(range(1, spec.n + 1), size):
            symbolic, _ = reduced_equal_on(spec, subset)
            dev = dense.frobenius_distance(
                dense.partial_trace(rho0, subset, spec.n),
                dense.partial_trace(rho1, subset, spec.n),
            )
            numeric = dev < atol
            if symbolic != numeric:
                raise RuntimeError(
                    f"symbolic/oracle disagreement on {spec.name} traced {subset}: "
                    f"symbolic={symbolic}, dense deviation={dev:.3e}"
                )
