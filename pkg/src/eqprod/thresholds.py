"""Threshold functions for r-member equal-product families.

s_r_0(n) is the first sum carrying r equal-product n-partitions. The starred
threshold s_r_star(n) is the first sum from which every larger sum carries
them too: for n >= 4 appending u = s - s_r_0(n - 1) to each member of an
optimal family at length n - 1 certifies the whole tail above
s_r_0(n - 1) + 1 exactly, so a downward scan from there is complete. n = 3
admits no such certificate here and is scanned down from a configurable
ceiling only, so its result is certified just up to that ceiling.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .core import SearchBudgetExceeded
from .partitions import Family, _product_collision_stats, equal_product_families

DEFAULT_S_CAP = 120
DEFAULT_SCAN_CEILING = 200


def has_r_family(s: int, n: int, r: int) -> bool:
    """True when some product is shared by at least r n-partitions of s."""
    if s < 1 or n < 1:
        raise ValueError("s and n must be positive")
    if r < 2:
        raise ValueError("r must be >= 2")
    return _product_collision_stats(s, n)[0] >= r


@lru_cache(maxsize=None)
def s_r_0(n: int, r: int, cap: int = DEFAULT_S_CAP) -> int | None:
    """Smallest s <= cap with an r-member equal-product family of n-partitions.

    None reports cap exhaustion; it never claims nonexistence.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if r < 2:
        raise ValueError("r must be >= 2")
    for s in range(1, cap + 1):
        if _product_collision_stats(s, n)[0] >= r:
            return s
    return None


@lru_cache(maxsize=None)
def s_r_star(
    n: int,
    r: int,
    cap: int = DEFAULT_S_CAP,
    scan_ceiling: int = DEFAULT_SCAN_CEILING,
) -> int:
    """First sum from which every sum admits an r-member family at length n.

    For n >= 4 the scan starts at s_r_0(n - 1) + 1, above which every sum
    is covered by the append-one-part construction; it walks down to the
    largest failing sum and returns the next one (or the floor 1 when
    nothing fails). For n = 3 the scan starts at scan_ceiling and the
    result is certified only up to that ceiling.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if r < 2:
        raise ValueError("r must be >= 2")
    if n == 3:
        top = scan_ceiling + 1
    else:
        prev = s_r_0(n - 1, r, cap)
        if prev is None:
            raise SearchBudgetExceeded(f"s_r_0({n - 1}, {r}) not found below cap {cap}")
        top = prev + 1
    for s in range(top - 1, 0, -1):
        if not has_r_family(s, n, r):
            return s + 1
    return 1


@dataclass(frozen=True)
class ThresholdRecord:
    """One computed table row; stores only what was actually computed."""

    n: int
    r: int
    s0: int | None = None
    sstar: int | None = None
    witness: Family | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "s0": self.s0,
            "sstar": self.sstar,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "ThresholdRecord":
        witness = data.get("witness")
        return cls(
            n=int(data["n"]),
            r=int(data["r"]),
            s0=None if data.get("s0") is None else int(data["s0"]),
            sstar=None if data.get("sstar") is None else int(data["sstar"]),
            witness=None if witness is None else Family.from_dict(witness),
        )


def _map_rows(fn: Callable, rows: list, workers: int) -> list:
    if workers > 1 and len(rows) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(fn, rows))
    return [fn(a) for a in rows]


def _s0_row(args: tuple[int, int, int]) -> ThresholdRecord:
    n, r, cap = args
    s0 = s_r_0(n, r, cap)
    witness = equal_product_families(s0, n, r)[0] if s0 is not None else None
    return ThresholdRecord(n=n, r=r, s0=s0, witness=witness)


def table_s_n0(n_max: int, cap: int = DEFAULT_S_CAP, workers: int = 1) -> list[ThresholdRecord]:
    """Rows (n, r=n, s0) for n = 3 .. n_max."""
    if not 3 <= n_max <= 20:
        raise ValueError("n_max must be in [3, 20]")
    rows = [(n, n, cap) for n in range(3, n_max + 1)]
    return _map_rows(_s0_row, rows, workers)


def _sstar_row(args: tuple[int, int, int, int]) -> ThresholdRecord:
    n, r, cap, ceiling = args
    return ThresholdRecord(n=n, r=r, sstar=s_r_star(n, r, cap, ceiling))


def table_s_star(
    n_max: int,
    cap: int = DEFAULT_S_CAP,
    scan_ceiling: int = DEFAULT_SCAN_CEILING,
    workers: int = 1,
) -> list[ThresholdRecord]:
    """Rows (n, r=n-1, sstar) for n = 3 .. n_max, diffable against OEIS A317254.

    The n = 3 row comes from the bounded scan and is certified only up to
    scan_ceiling.
    """
    if not 3 <= n_max <= 21:
        raise ValueError("n_max must be in [3, 21]")
    rows = [(n, n - 1, cap, scan_ceiling) for n in range(3, n_max + 1)]
    return _map_rows(_sstar_row, rows, workers)


@dataclass(frozen=True)
class ConjectureCheck:
    """One swept identity instance; HOLD means lhs == rhs."""

    conjecture: str
    n: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {
            "conjecture": self.conjecture,
            "n": self.n,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
        }


def check_conjectures(
    n_max: int,
    cap: int = DEFAULT_S_CAP,
    scan_ceiling: int = DEFAULT_SCAN_CEILING,
) -> list[ConjectureCheck]:
    """Sweep the four observed threshold identities over their ranges.

    1:  s_r_star(n, n-1)  == s_r_0(n-1, n-1) + 1    for n >= 6
    2a: s_r_star(n, n-2)  == s_r_star(n-1, n-2) + 1 for n >= 9
    2b: s_r_star(n, n-1)  == s_r_star(n-1, n-1) + 1 for n >= 7
    2c: s_r_star(n, n)    == s_r_star(n-1, n) + 1   for n >= 10
    """

    def star(m: int, r: int) -> int:
        return s_r_star(m, r, cap, scan_ceiling)

    def zero(m: int, r: int) -> int:
        v = s_r_0(m, r, cap)
        if v is None:
            raise SearchBudgetExceeded(f"s_r_0({m}, {r}) not found below cap {cap}")
        return v

    checks = []
    for n in range(6, n_max + 1):
        checks.append(ConjectureCheck("1", n, star(n, n - 1), zero(n - 1, n - 1) + 1))
    for n in range(9, n_max + 1):
        checks.append(ConjectureCheck("2a", n, star(n, n - 2), star(n - 1, n - 2) + 1))
    for n in range(7, n_max + 1):
        checks.append(ConjectureCheck("2b", n, star(n, n - 1), star(n - 1, n - 1) + 1))
    for n in range(10, n_max + 1):
        checks.append(ConjectureCheck("2c", n, star(n, n), star(n - 1, n) + 1))
    return checks


def render_csv(records: Iterable[ThresholdRecord]) -> str:
    """CSV with columns n, r, s0, sstar; missing values stay empty."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "r", "s0", "sstar"])
    for rec in records:
        writer.writerow(
            [
                rec.n,
                rec.r,
                "" if rec.s0 is None else rec.s0,
                "" if rec.sstar is None else rec.sstar,
            ]
        )
    return buf.getvalue()


def render_bfile(records: Iterable[ThresholdRecord]) -> str:
    """OEIS b-file lines "n value" taken from the starred column."""
    lines = []
    for rec in records:
        if rec.sstar is None:
            raise ValueError(f"record n={rec.n} has no starred value")
        lines.append(f"{rec.n} {rec.sstar}")
    return "\n".join(lines) + "\n"
