"""Non-crossing pair partitions and their order-preserving labelings.

A pair partition of {1, ..., 2n} splits the set into n two-element blocks
(l, r) with l < r.  Non-crossing means no two blocks interleave.  Blocks
carry a nesting partial order (outer encloses inner), and a labeling into
{1, ..., m} is *weakly monotone* when nested blocks never get a smaller
label than the block enclosing them.  Counting those labelings, summed over
all non-crossing pairings, yields the even moment sequence computed
independently in :mod:`monosemi.moments` and :mod:`monosemi.fock`.

Sign strings over {-1, +1} encode the pairings: -1 opens a block, +1 closes
the innermost open one.  Admissible strings have total sum zero and every
suffix sum nonnegative.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator, Mapping, Optional

DEFAULT_ENUM_BOUND = 10


class EnumerationBoundError(ValueError):
    """Requested block count exceeds the configured enumeration bound."""


def catalan(n: int) -> int:
    """The n-th Catalan number binom(2n, n) / (n + 1), exactly."""
    if n < 0:
        raise ValueError("catalan index must be nonnegative")
    return comb(2 * n, n) // (n + 1)


def validate_sign_string(entries: tuple[int, ...]) -> None:
    """Check membership in the admissible set: even length over {-1, +1},
    total sum zero, every suffix sum nonnegative."""
    if len(entries) % 2 != 0:
        raise ValueError("sign string must have even length")
    if any(e not in (-1, 1) for e in entries):
        raise ValueError("sign string entries must be -1 or +1")
    if sum(entries) != 0:
        raise ValueError("sign string must sum to zero")
    suffix = 0
    for e in reversed(entries):
        suffix += e
        if suffix < 0:
            raise ValueError("sign string has a negative suffix sum")


@dataclass(frozen=True)
class PairPartition:
    """Non-crossing pairing of {1, ..., 2n}; blocks sorted by left leg."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple(tuple(p) for p in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        size = 2 * len(pairs)
        seen = sorted(itertools.chain.from_iterable(pairs))
        if seen != list(range(1, size + 1)):
            raise ValueError("pairs must cover 1..2n exactly once")
        last_left = 0
        for l, r in pairs:
            if not l < r:
                raise ValueError(f"block ({l}, {r}) must have l < r")
            if l <= last_left:
                raise ValueError("blocks must be sorted by strictly increasing left leg")
            last_left = l
        # linear non-crossing check: walking left to right, a closing leg must
        # close the innermost open block
        closer = {l: r for l, r in pairs}
        stack: list[int] = []
        for pos in range(1, size + 1):
            if pos in closer:
                stack.append(closer[pos])
            else:
                if not stack or stack[-1] != pos:
                    raise ValueError("partition has a crossing")
                stack.pop()

    @property
    def n_blocks(self) -> int:
        return len(self.pairs)

    @property
    def size(self) -> int:
        return 2 * len(self.pairs)

    def is_interval(self) -> bool:
        """True when the blocks are adjacent: (1,2)(3,4)... with no nesting."""
        return all(r == l + 1 for l, r in self.pairs)


@dataclass(frozen=True)
class NestingForest:
    """Nesting structure of a non-crossing pairing.

    ``parent[i]`` is the index of the tightest block enclosing block i, or
    None for the outermost blocks.
    """

    parent: tuple[Optional[int], ...]
    children: tuple[tuple[int, ...], ...]
    roots: tuple[int, ...]


@dataclass(frozen=True)
class LabeledPairPartition:
    """A pairing together with a block -> label map into {1, ..., m}."""

    partition: PairPartition
    labels: tuple[int, ...]

    def is_weakly_monotone(self) -> bool:
        """Nested blocks never carry a smaller label than their enclosing block."""
        forest = nesting_forest(self.partition)
        return all(
            p is None or self.labels[i] >= self.labels[p]
            for i, p in enumerate(forest.parent)
        )


def sign_string_to_partition(entries: tuple[int, ...]) -> PairPartition:
    """Match each -1 with the next unmatched +1 to its right (stack matching).

    This is a bijection from admissible sign strings onto non-crossing pair
    partitions; inadmissible strings raise ValueError.
    """
    validate_sign_string(tuple(entries))
    stack: list[int] = []
    pairs: list[tuple[int, int]] = []
    for pos, e in enumerate(entries, start=1):
        if e == -1:
            stack.append(pos)
        else:
            pairs.append((stack.pop(), pos))
    pairs.sort()
    return PairPartition(tuple(pairs))


def partition_to_sign_string(partition: PairPartition) -> tuple[int, ...]:
    """Inverse bijection: left legs map to -1, right legs to +1."""
    entries = [1] * partition.size
    for l, _ in partition.pairs:
        entries[l - 1] = -1
    return tuple(entries)


def enumerate_nc2(n: int, bound: int = DEFAULT_ENUM_BOUND) -> list[PairPartition]:
    """All non-crossing pair partitions of {1, ..., 2n}, in the lexicographic
    order of their sign strings (with -1 before +1).

    The list has exactly catalan(n) entries.  ``n`` above ``bound`` raises
    :class:`EnumerationBoundError` (catalan growth; default bound 10).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > bound:
        raise EnumerationBoundError(
            f"n={n} exceeds enumeration bound {bound} (catalan({n}) = {catalan(n)} partitions)"
        )
    results: list[PairPartition] = []

    def extend(seq: list[int], opens: int, closes: int) -> None:
        if opens == n and closes == n:
            results.append(sign_string_to_partition(tuple(seq)))
            return
        if opens < n:
            seq.append(-1)
            extend(seq, opens + 1, closes)
            seq.pop()
        if closes < opens:
            seq.append(1)
            extend(seq, opens, closes + 1)
            seq.pop()

    extend([], 0, 0)
    return results


def nesting_forest(partition: PairPartition) -> NestingForest:
    """Parent/children structure under block nesting, in one left-to-right scan."""
    index_of_left = {l: i for i, (l, _) in enumerate(partition.pairs)}
    closer = {l: r for l, r in partition.pairs}
    parent: list[Optional[int]] = [None] * partition.n_blocks
    children: list[list[int]] = [[] for _ in partition.pairs]
    roots: list[int] = []
    stack: list[int] = []  # indices of currently open blocks, outermost first
    for pos in range(1, partition.size + 1):
        if pos in closer:
            idx = index_of_left[pos]
            if stack:
                parent[idx] = stack[-1]
                children[stack[-1]].append(idx)
            else:
                roots.append(idx)
            stack.append(idx)
        elif stack and closer[partition.pairs[stack[-1]][0]] == pos:
            stack.pop()
    return NestingForest(
        parent=tuple(parent),
        children=tuple(tuple(c) for c in children),
        roots=tuple(roots),
    )


def count_weakly_monotone_labelings(partition: PairPartition, m: int) -> int:
    """Number of labelings of the blocks into {1, ..., m} that respect nesting.

    Forest dynamic program: count(B, lo) = sum over labels l in [lo, m] of the
    product of count(C, l) over children C; the answer multiplies over roots
    with lo = 1.  Polynomial in the block count, unlike the m**n label scan.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    forest = nesting_forest(partition)
    memo: dict[tuple[int, int], int] = {}

    def count(block: int, lo: int) -> int:
        key = (block, lo)
        if key not in memo:
            total = 0
            for label in range(lo, m + 1):
                prod = 1
                for child in forest.children[block]:
                    prod *= count(child, label)
                total += prod
            memo[key] = total
        return memo[key]

    result = 1
    for root in forest.roots:
        result *= count(root, 1)
    return result


def iter_weakly_monotone_labelings(
    partition: PairPartition, m: int
) -> Iterator[LabeledPairPartition]:
    """Exhaustive labeling scan; the m**n oracle behind the forest DP."""
    for labels in itertools.product(range(1, m + 1), repeat=partition.n_blocks):
        labeled = LabeledPairPartition(partition, labels)
        if labeled.is_weakly_monotone():
            yield labeled


def count_labelings_exhaustive(partition: PairPartition, m: int) -> int:
    return sum(1 for _ in iter_weakly_monotone_labelings(partition, m))


def count_nc2wmo(m: int, n: int, bound: int = DEFAULT_ENUM_BOUND) -> int:
    """Total weakly monotone labeled non-crossing pairings of {1, ..., 2n}
    with labels in {1, ..., m}: the combinatorial route to the 2n-th moment."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return sum(
        count_weakly_monotone_labelings(p, m) for p in enumerate_nc2(n, bound=bound)
    )
