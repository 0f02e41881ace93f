"""Fixed-length partition enumeration and equal-product family detection.

The enumerator emits each nondecreasing n-partition of s exactly once, in
lexicographic order, via the classic in-place successor step (running
minimum part, constant amortized work). Grouping by product and the family
searches inherit that deterministic order for free, and the optional worker
split is by smallest part so parallel runs merge back into the identical
sequence.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

from .core import (
    EmptyInput,
    PartitionMultiset,
    Triple,
    canonicalize,
    checked_product,
    signature,
)


def _parts_raw(s: int, n: int, lo: int = 1) -> Iterator[tuple[int, ...]]:
    """Yield nondecreasing n-tuples of integers >= lo summing to s, lex order."""
    if n < 1 or lo < 1 or s < n * lo:
        return
    a = [lo] * n
    a[-1] = s - lo * (n - 1)
    while True:
        yield tuple(a)
        # rightmost position (before the last) whose increment leaves enough
        # room for a nondecreasing completion of the suffix
        rem = a[-1]
        i = n - 2
        while i >= 0:
            rem += a[i]
            if rem >= (a[i] + 1) * (n - i):
                break
            i -= 1
        if i < 0:
            return
        v = a[i] + 1
        for t in range(i, n - 1):
            a[t] = v
            rem -= v
        a[-1] = rem


def enumerate_partitions(s: int, n: int, min_part: int = 1) -> Iterator[PartitionMultiset]:
    """Stream every canonical n-partition of s with all parts >= min_part.

    Lexicographic order; the stream is empty when n * min_part > s.
    """
    if s < 1 or n < 1 or min_part < 1:
        raise ValueError("s, n and min_part must be positive")
    return (PartitionMultiset(t) for t in _parts_raw(s, n, min_part))


def _group_chunk(args: tuple[int, int, int]) -> dict[int, list[tuple[int, ...]]]:
    # one unit of the smallest-part work split
    s, n, first = args
    out: dict[int, list[tuple[int, ...]]] = {}
    for rest in _parts_raw(s - first, n - 1, first):
        t = (first,) + rest
        out.setdefault(checked_product(t), []).append(t)
    return out


def group_by_product(s: int, n: int, workers: int = 1) -> dict[int, list[PartitionMultiset]]:
    """Bucket every n-partition of s by its product.

    Keys are exactly the realized products, each bucket is in lexicographic
    order, and the buckets partition the full enumeration. With workers > 1
    the sweep is split by smallest part and merged in a fixed order, so the
    result never depends on the worker count.
    """
    if s < 1 or n < 1:
        raise ValueError("s and n must be positive")
    raw: dict[int, list[tuple[int, ...]]] = {}
    if workers > 1 and n >= 2:
        chunks = [(s, n, first) for first in range(1, s // n + 1)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for chunk in ex.map(_group_chunk, chunks):
                for p, ts in chunk.items():
                    raw.setdefault(p, []).extend(ts)
    else:
        for t in _parts_raw(s, n, 1):
            raw.setdefault(checked_product(t), []).append(t)
    return {p: [PartitionMultiset(t) for t in ts] for p, ts in raw.items()}


@lru_cache(maxsize=None)
def _product_collision_stats(s: int, n: int) -> tuple[int, int]:
    """(largest equal-product bucket, number of products hit at least twice)."""
    counts: dict[int, int] = {}
    for t in _parts_raw(s, n, 1):
        p = checked_product(t)
        counts[p] = counts.get(p, 0) + 1
    best = 0
    collided = 0
    for c in counts.values():
        if c > best:
            best = c
        if c >= 2:
            collided += 1
    return best, collided


@dataclass(frozen=True)
class Family:
    """Distinct partitions sharing one (sum, product, length) signature.

    Members are stored sorted; every member is re-verified against the
    triple on construction.
    """

    triple: Triple
    members: tuple[PartitionMultiset, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise EmptyInput("a family needs at least one member")
        ordered = tuple(sorted(self.members))
        for i, m in enumerate(ordered):
            if signature(m) != self.triple:
                raise ValueError(f"member {m} does not have signature {self.triple}")
            if i and m == ordered[i - 1]:
                raise ValueError(f"duplicate member {m}")
        object.__setattr__(self, "members", ordered)

    def __len__(self) -> int:
        return len(self.members)

    def to_dict(self) -> dict:
        return {
            "product": self.triple.p,
            "members": [list(m.parts) for m in self.members],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Family":
        members = tuple(canonicalize(m) for m in data["members"])
        triple = signature(members[0])
        if "product" in data and int(data["product"]) != triple.p:
            raise ValueError("stated product does not match the members")
        return cls(triple, members)


def equal_product_families(s: int, n: int, r: int = 2, workers: int = 1) -> list[Family]:
    """Every maximal family of >= r equal-product n-partitions of s, by product."""
    if r < 2:
        raise ValueError("r must be >= 2")
    groups = group_by_product(s, n, workers=workers)
    out = []
    for p in sorted(groups):
        members = groups[p]
        if len(members) >= r:
            out.append(Family(Triple(s, p, n), tuple(members)))
    return out


def _first_disjoint_subset(
    cands: list[PartitionMultiset], r: int
) -> tuple[PartitionMultiset, ...] | None:
    """Lexicographically first r-subset whose part sets are pairwise disjoint."""
    part_sets = [set(m.parts) for m in cands]
    chosen: list[PartitionMultiset] = []
    used: set[int] = set()

    def descend(start: int) -> bool:
        if len(chosen) == r:
            return True
        for i in range(start, len(cands)):
            if len(cands) - i < r - len(chosen):
                return False
            ps = part_sets[i]
            if used.isdisjoint(ps):
                chosen.append(cands[i])
                used.update(ps)
                if descend(i + 1):
                    return True
                chosen.pop()
                used.difference_update(ps)
        return False

    return tuple(chosen) if descend(0) else None


def disjoint_families(s: int, n: int, r: int = 2, workers: int = 1) -> list[Family]:
    """Families of r equal-product n-partitions whose r*n parts are all distinct.

    No value may repeat within or across members, so each member itself has
    distinct parts. One witness subset per qualifying product, sorted by
    product; the subset is the lexicographically first one.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    groups = group_by_product(s, n, workers=workers)
    out = []
    for p in sorted(groups):
        cands = [m for m in groups[p] if len(set(m.parts)) == n]
        if len(cands) < r:
            continue
        witness = _first_disjoint_subset(cands, r)
        if witness is not None:
            out.append(Family(Triple(s, p, n), witness))
    return out
