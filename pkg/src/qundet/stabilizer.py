"""Stabilizer groups over the binary symplectic representation.

A group is given by commuting, independent, Hermitian Pauli generators
whose generated group avoids -I.  Independence and membership are GF(2)
linear algebra on symplectic rows (x_bits | z_bits << n); commutation is
the symplectic form, so the centralizer of the group is the kernel of
the swapped rows (z_bits | x_bits << n).

Enumeration-based operations (group elements, cosets, logical X sets,
code distance) fail loudly past configurable caps instead of sampling;
witnesses are chosen by (weight, string) so reruns agree byte-for-byte.
An "unsigned" Pauli here means the phase is normalized to make the
operator Hermitian with + sign; logical X sets and distance counts are
over distinct unsigned Paulis, not cosets modulo the group.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from qundet import gf2
from qundet.pauli import PauliOperator

MAX_ENUM_RANK = 20
MAX_ENUM_N = 16


class GroupValidationError(ValueError):
    """Base for errors raised while validating a generating set."""


class NonCommutingGeneratorsError(GroupValidationError):
    def __init__(self, i: int, j: int, a: PauliOperator, b: PauliOperator):
        self.pair = (i, j)
        super().__init__(f"generators {i} and {j} anticommute: {a} vs {b}")


class DependentGeneratorsError(GroupValidationError):
    def __init__(self, subset: tuple[int, ...]):
        self.subset = subset
        super().__init__(
            "generators are dependent: product of generators "
            f"{list(subset)} is the identity"
        )


class MinusIdentityError(GroupValidationError):
    def __init__(self, subset: tuple[int, ...], message: str | None = None):
        self.subset = subset
        super().__init__(
            message
            or f"generated group contains -I: product of generators {list(subset)}"
        )


class EnumerationCapError(ValueError):
    """Raised when an enumeration would exceed its configured cap."""


class StabilizerGroup:
    """A validated stabilizer group.

    Construction checks Hermiticity, pairwise commutation, GF(2)
    independence, and absence of -I, raising a typed error naming the
    offending generators otherwise.  ``rank`` equals the generator
    count once validation passes.
    """

    def __init__(self, generators: Sequence[PauliOperator], n: int | None = None):
        generators = list(generators)
        if not generators:
            if n is None:
                raise ValueError("empty generating set needs an explicit n")
            self.n = n
            self.generators: tuple[PauliOperator, ...] = ()
            self.rank = 0
            self._ech: list[int] = []
            self._pivots: list[int] = []
            return
        self.n = generators[0].n
        for g in generators:
            if g.n != self.n:
                raise ValueError(f"mixed qubit counts: {g.n} != {self.n}")
        for idx, g in enumerate(generators, start=1):
            if not g.is_hermitian:
                # a non-Hermitian Pauli squares to -I
                raise MinusIdentityError(
                    (idx,), f"generator {idx} ({g}) is not Hermitian; its square is -I"
                )
        for i in range(len(generators)):
            for j in range(i + 1, len(generators)):
                if generators[i].anticommutes(generators[j]):
                    raise NonCommutingGeneratorsError(
                        i + 1, j + 1, generators[i], generators[j]
                    )
        self._validate_independent(generators)
        self.generators = tuple(generators)
        self.rank = len(generators)
        rows = [self._symplectic_row(g) for g in generators]
        self._ech, self._pivots = gf2.echelon(rows)

    def _symplectic_row(self, p: PauliOperator) -> int:
        return p.x_bits | (p.z_bits << self.n)

    def _validate_independent(self, generators: Sequence[PauliOperator]) -> None:
        # eliminate symplectic rows, tracking which generators combine,
        # so a vanishing row names its subset and fixes the product sign
        ech: list[int] = []
        pivots: list[int] = []
        combos: list[int] = []
        for idx, g in enumerate(generators):
            row = self._symplectic_row(g)
            combo = 1 << idx
            for e, p, c in zip(ech, pivots, combos):
                if row >> p & 1:
                    row ^= e
                    combo ^= c
            if row == 0:
                subset = tuple(
                    i + 1 for i in range(len(generators)) if combo >> i & 1
                )
                prod = PauliOperator.identity(self.n)
                for i in range(len(generators)):
                    if combo >> i & 1:
                        prod = prod * generators[i]
                if prod.phase_exp == 2:
                    raise MinusIdentityError(subset)
                raise DependentGeneratorsError(subset)
            ech.append(row)
            pivots.append(gf2.lowest_set_bit(row))
            combos.append(combo)

    # -- membership ----------------------------------------------------

    def contains_unsigned(self, p: PauliOperator) -> bool:
        """True iff p is in the group up to sign."""
        if p.n != self.n:
            raise ValueError("qubit count mismatch")
        return gf2.reduce_row(self._symplectic_row(p), self._ech, self._pivots) == 0

    def commutes_with_all(self, p: PauliOperator) -> bool:
        return all(p.commutes(g) for g in self.generators)

    # -- enumeration ---------------------------------------------------

    def elements(self, cap: int = MAX_ENUM_RANK) -> list[PauliOperator]:
        """All 2^rank signed elements, Gray-code order starting from +I."""
        if self.rank > cap:
            raise EnumerationCapError(f"rank {self.rank} exceeds enumeration cap {cap}")
        out = [PauliOperator.identity(self.n)]
        cur = out[0]
        for m in range(1, 1 << self.rank):
            cur = cur * self.generators[(m & -m).bit_length() - 1]
            out.append(cur)
        return out

    def coset(self, rep: PauliOperator, cap: int = MAX_ENUM_RANK) -> list[PauliOperator]:
        """The signed elements {rep * s} in group enumeration order."""
        if rep.n != self.n:
            raise ValueError("qubit count mismatch")
        return [rep * s for s in self.elements(cap)]

    def centralizer_basis(self) -> list[PauliOperator]:
        """2n - rank unsigned Paulis spanning the commutant of the group."""
        swapped = [g.z_bits | (g.x_bits << self.n) for g in self.generators]
        mask = (1 << self.n) - 1
        basis = []
        for v in gf2.nullspace(swapped, 2 * self.n):
            basis.append(PauliOperator(self.n, v & mask, v >> self.n).unsigned())
        return basis

    def normalizer_masks(self, cap_n: int = MAX_ENUM_N) -> Iterator[tuple[int, int]]:
        """(x_bits, z_bits) of every element of the centralizer span.

        Yields 2^(2n - rank) pairs in Gray-code order, the zero pair
        first.  Phases are irrelevant at this level; wrap a pair in
        PauliOperator(...).unsigned() for the Hermitian representative.
        """
        if self.n > cap_n:
            raise EnumerationCapError(f"n {self.n} exceeds enumeration cap {cap_n}")
        basis = self.centralizer_basis()
        x, z = 0, 0
        yield x, z
        for m in range(1, 1 << len(basis)):
            b = basis[(m & -m).bit_length() - 1]
            x ^= b.x_bits
            z ^= b.z_bits
            yield x, z


def build_group(generators: Sequence[PauliOperator]) -> StabilizerGroup:
    """Validate a nonempty generating set into a StabilizerGroup."""
    if not generators:
        raise ValueError("empty generating set")
    return StabilizerGroup(generators)


def enumerate_group(group: StabilizerGroup, cap: int = MAX_ENUM_RANK) -> list[PauliOperator]:
    return group.elements(cap)


def centralizer_basis(group: StabilizerGroup) -> list[PauliOperator]:
    return group.centralizer_basis()


def coset_min_weight(
    group: StabilizerGroup, rep: PauliOperator, cap: int = MAX_ENUM_RANK
) -> tuple[int, PauliOperator]:
    """Minimum Pauli weight over {rep * s}, with a deterministic witness.

    Ties break by the witness's string form, so results are stable
    across runs and generator orderings that span the same group.
    """
    best: tuple[int, str, PauliOperator] | None = None
    for el in group.coset(rep, cap):
        key = (el.weight, el.letters)
        if best is None or key < (best[0], best[1]):
            best = (el.weight, el.letters, el)
    assert best is not None
    return best[0], best[2]


def logical_x_set(
    group: StabilizerGroup,
    z_bar: PauliOperator,
    max_enum_n: int = MAX_ENUM_N,
) -> list[PauliOperator]:
    """All unsigned centralizer members anticommuting with z_bar.

    Counting is per distinct unsigned Pauli, not per coset modulo the
    group: one operator per (x, z) pair, sign stripped.  For a rank
    n - 1 group this yields 2^n operators.  Sorted by (weight, string).
    """
    if not group.commutes_with_all(z_bar):
        raise ValueError("z_bar is not in the centralizer of the group")
    zx, zz = z_bar.x_bits, z_bar.z_bits
    members = []
    for x, z in group.normalizer_masks(max_enum_n):
        if ((x & zz).bit_count() + (z & zx).bit_count()) & 1:
            members.append(PauliOperator(group.n, x, z).unsigned())
    members.sort(key=lambda p: (p.weight, p.letters))
    return members


def in_logical_x_set(group: StabilizerGroup, z_bar: PauliOperator, candidate: PauliOperator) -> bool:
    """Membership test that avoids enumeration (any n)."""
    return group.commutes_with_all(candidate) and candidate.anticommutes(z_bar)


def code_distance(group: StabilizerGroup, cap_n: int = MAX_ENUM_N) -> int:
    """Minimum weight over unsigned centralizer members outside the group.

    This is the usual stabilizer-code distance; it needs only the group
    (logical representatives are centralizer members too).
    """
    best: int | None = None
    for x, z in group.normalizer_masks(cap_n):
        if x == 0 and z == 0:
            continue
        row = x | (z << group.n)
        if gf2.reduce_row(row, group._ech, group._pivots) == 0:
            continue
        w = (x | z).bit_count()
        if best is None or w < best:
            best = w
            if best == 1:
                break
    if best is None:
        raise ValueError("group has no logical operators (rank = n with k = 0)")
    return best


def min_weight_nontrivial(elements: Iterable[PauliOperator]) -> tuple[int, PauliOperator]:
    """Minimum weight and deterministic witness over an iterable, identity excluded."""
    best: tuple[int, str, PauliOperator] | None = None
    for el in elements:
        if el.weight == 0:
            continue
        key = (el.weight, el.letters)
        if best is None or key < (best[0], best[1]):
            best = (el.weight, el.letters, el)
    if best is None:
        raise ValueError("no nontrivial elements")
    return best[0], best[2]
