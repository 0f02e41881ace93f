"""Sum-side admissibility: which lengths n admit an equal-product pair at sum s.

F(s) collects those lengths and f(s) counts them. Lengths 1 and 2 can never
collide (a 1-partition is unique, and equal products for {a, s-a} and
{b, s-b} force the pairs to coincide), and neither can the top band
s-7 .. s, where the realized products are all distinct; excluded_n_check
re-derives both facts by pure enumeration. A family extends from (s, n) to
(s + s2, n + n2) by appending n2 - 1 ones and one balancing part.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Mapping

from .core import ProductOverflow, Triple, canonicalize, checked_product
from .partitions import Family, _parts_raw, _product_collision_stats, equal_product_families

# largest sum whose partition products are all guaranteed to fit 128 bits
SAFE_SUM_LIMIT = 240


class InvalidExtension(ValueError):
    """Family extension needs n2 <= s2."""


@dataclass(frozen=True)
class AdmissibilityReport:
    """Lengths admitting at least two equal-product partitions of a fixed sum."""

    s: int
    F: tuple[int, ...]
    witnesses: Mapping[int, Family]

    @property
    def f(self) -> int:
        return len(self.F)

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "f": self.f,
            "F": list(self.F),
            "witnesses": {str(n): fam.to_dict() for n, fam in self.witnesses.items()},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "AdmissibilityReport":
        witnesses = {int(n): Family.from_dict(fam) for n, fam in data["witnesses"].items()}
        return cls(int(data["s"]), tuple(int(n) for n in data["F"]), witnesses)


def is_admissible(s: int, p: int, n: int) -> bool:
    """True when at least two distinct n-partitions of s share the product p."""
    if s < 1 or p < 1 or n < 1:
        raise ValueError("inputs must be positive")
    if n <= 2 or n > s:
        return False
    hits = 0
    for t in _parts_raw(s, n, 1):
        if checked_product(t) == p:
            hits += 1
            if hits == 2:
                return True
    return False


def _length_has_pair(args: tuple[int, int]) -> tuple[int, bool]:
    s, n = args
    return n, _product_collision_stats(s, n)[0] >= 2


def compute_report(s: int, use_shortcuts: bool = True, workers: int = 1) -> AdmissibilityReport:
    """Compute F(s) with one witness family per admitting length.

    The default scan covers n in [3, s-8] only, skipping the lengths that
    can never collide; use_shortcuts=False scans all n in [1, s] so the
    skip itself can be validated against enumeration.
    """
    if s < 1:
        raise ValueError("s must be positive")
    if use_shortcuts:
        candidates = list(range(3, s - 7))
    else:
        candidates = list(range(1, s + 1))
    if workers > 1 and len(candidates) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            flags = list(ex.map(_length_has_pair, [(s, n) for n in candidates]))
    else:
        flags = [_length_has_pair((s, n)) for n in candidates]
    lengths = tuple(n for n, ok in flags if ok)
    witnesses = {n: equal_product_families(s, n, 2)[0] for n in lengths}
    return AdmissibilityReport(s, lengths, witnesses)


def excluded_n_check(s: int) -> bool:
    """Confirm by enumeration that no excluded length admits a collision.

    The excluded lengths are 1, 2 and s-7 .. s; every product realized
    there must be unique. This is the no-shortcut cross-check for the
    algebraic skips used elsewhere.
    """
    if s < 11:
        raise ValueError("the excluded-length band needs s >= 11")
    lengths = {1, 2} | set(range(s - 7, s + 1))
    for n in sorted(lengths):
        if _product_collision_stats(s, n)[0] >= 2:
            return False
    return True


def extend_family(fam: Family, s_extra: int, n_extra: int) -> Family:
    """Append n_extra - 1 ones and one part of s_extra - (n_extra - 1).

    Sends the family triple (s, p, n) to
    (s + s_extra, p * (s_extra - n_extra + 1), n + n_extra).
    """
    if s_extra < 1 or n_extra < 1:
        raise ValueError("extension amounts must be positive")
    if n_extra > s_extra:
        raise InvalidExtension(f"cannot add {n_extra} parts summing to {s_extra}")
    tail = s_extra - (n_extra - 1)
    suffix = (1,) * (n_extra - 1) + (tail,)
    members = tuple(canonicalize(m.parts + suffix) for m in fam.members)
    t = fam.triple
    return Family(Triple(t.s + s_extra, t.p * tail, t.n + n_extra), members)


def wizard_bus_numbers(limit: int) -> list[int]:
    """All s <= limit admitting exactly one (product, length) collision pair.

    This answers the bus-riddle reading: knowing the sum, and that product
    plus child count cannot pin down the ages, identifies the product
    uniquely. Only the counting reduction is implemented; no plausibility
    bound ties the ages to the parent's.
    """
    if limit < 1 or limit > 240:
        raise ValueError("limit must be in [1, 240]")
    out = []
    for s in range(1, limit + 1):
        pairs = 0
        for n in range(3, s - 7):
            pairs += _product_collision_stats(s, n)[1]
            if pairs > 1:
                break
        if pairs == 1:
            out.append(s)
    return out
