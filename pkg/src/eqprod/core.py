"""Canonical data types and checked arithmetic shared by every other module.

A partition is kept as a nondecreasing multiset of positive integers; its
signature is the (sum, product, length) triple. Partition products are
checked against a 128-bit ceiling: a partition of s has product at most
3**(s // 3), so every sum up to 240 is safe, and anything beyond raises
instead of silently growing without bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from sympy import factorint, isprime

PRODUCT_BITS = 128
PRODUCT_MAX = 2**PRODUCT_BITS - 1


class ProductOverflow(OverflowError):
    """A product exceeded the 128-bit representable range."""


class EmptyInput(ValueError):
    """A partition needs at least one part."""


class NonPositivePart(ValueError):
    """Partition parts must be positive integers."""


class SearchBudgetExceeded(RuntimeError):
    """An exhaustive search hit its configured node or scan cap."""


def checked_product(values: Iterable[int]) -> int:
    """Multiply positive integers, raising ProductOverflow past 128 bits."""
    p = math.prod(values)
    if p > PRODUCT_MAX:
        raise ProductOverflow(f"product does not fit in {PRODUCT_BITS} bits")
    return p


@dataclass(frozen=True, order=True)
class PartitionMultiset:
    """A canonical (nondecreasing) multiset of positive integers.

    Two multisets are equal exactly when their canonical part sequences
    are equal; ordering is lexicographic on those sequences.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise EmptyInput("a partition needs at least one part")
        prev = 1
        for p in self.parts:
            if not isinstance(p, int) or p < 1:
                raise NonPositivePart(f"part {p!r} is not a positive integer")
            if p < prev:
                raise ValueError("parts must be nondecreasing; use canonicalize()")
            prev = p

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.parts) + "}"


@dataclass(frozen=True, order=True)
class Triple:
    """The (sum, product, length) signature of a partition."""

    s: int
    p: int
    n: int

    def __post_init__(self) -> None:
        if self.s < 1 or self.n < 1:
            raise ValueError("sum and length must be positive")
        if self.n > self.s:
            raise ValueError(f"no {self.n}-partition of {self.s} exists")
        if self.p < 1:
            raise ValueError("product must be positive")
        if self.p > PRODUCT_MAX:
            raise ProductOverflow(f"product does not fit in {PRODUCT_BITS} bits")


def canonicalize(raw: Iterable[int]) -> PartitionMultiset:
    """Sort raw parts into the canonical nondecreasing representation."""
    return PartitionMultiset(tuple(sorted(raw)))


def signature(x: PartitionMultiset) -> Triple:
    """Map a partition to its (sum, product, length) triple."""
    return Triple(sum(x.parts), checked_product(x.parts), len(x.parts))


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer held as its prime -> exponent map; {} represents 1."""

    factors: Mapping[int, int]

    def __post_init__(self) -> None:
        clean: dict[int, int] = {}
        for q, e in self.factors.items():
            q, e = int(q), int(e)
            if e < 1:
                raise ValueError(f"exponent of {q} must be >= 1, got {e}")
            if not isprime(q):
                raise ValueError(f"{q} is not prime")
            clean[q] = e
        object.__setattr__(self, "factors", clean)

    @property
    def value(self) -> int:
        """Expand back to the represented integer (checked at 128 bits)."""
        return checked_product(q**e for q, e in self.factors.items())

    @property
    def total_multiplicity(self) -> int:
        """Number of prime factors counted with multiplicity."""
        return sum(self.factors.values())

    def primes(self) -> tuple[int, ...]:
        return tuple(sorted(self.factors))

    def exponents(self) -> tuple[int, ...]:
        """Exponents in ascending-prime order."""
        return tuple(self.factors[q] for q in self.primes())


def factorize(u: int) -> FactoredInteger:
    """Prime factorization of u >= 1; u = 1 gives the empty map."""
    if u < 1:
        raise ValueError(f"factorize needs a positive integer, got {u!r}")
    return FactoredInteger({int(q): int(e) for q, e in factorint(u).items()})


@dataclass(frozen=True)
class IntPolynomial:
    """Sparse integer-coefficient polynomial in k >= 1 variables.

    terms maps exponent tuples of length k to nonzero coefficients; the
    empty map is the zero polynomial. Zero coefficients handed to the
    constructor are dropped.
    """

    k: int
    terms: Mapping[tuple[int, ...], int]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("a polynomial needs at least one variable")
        clean: dict[tuple[int, ...], int] = {}
        for expt, coeff in self.terms.items():
            expt = tuple(int(t) for t in expt)
            coeff = int(coeff)
            if len(expt) != self.k:
                raise ValueError(f"exponent tuple {expt} does not have length {self.k}")
            if any(t < 0 for t in expt):
                raise ValueError(f"negative exponent in {expt}")
            if coeff != 0:
                clean[expt] = coeff
        object.__setattr__(self, "terms", clean)

    @classmethod
    def univariate(cls, coeffs: Sequence[int]) -> "IntPolynomial":
        """One-variable polynomial from dense coefficients [c0, c1, ...]."""
        return cls(1, {(t,): c for t, c in enumerate(coeffs) if c})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) != self.k:
            raise ValueError(f"need {self.k} coordinates, got {len(point)}")
        total = 0
        for expt, coeff in self.terms.items():
            v = coeff
            for base, t in zip(point, expt):
                v *= base**t
            total += v
        return total

    def partial(self, var: int) -> "IntPolynomial":
        """Partial derivative with respect to variable index var (0-based)."""
        if not 0 <= var < self.k:
            raise ValueError(f"variable index {var} out of range")
        out: dict[tuple[int, ...], int] = {}
        for expt, coeff in self.terms.items():
            t = expt[var]
            if t:
                lowered = expt[:var] + (t - 1,) + expt[var + 1:]
                out[lowered] = out.get(lowered, 0) + coeff * t
        return IntPolynomial(self.k, out)

    def coeff_abs_sum(self) -> int:
        return sum(abs(c) for c in self.terms.values())

    def coeffs(self) -> list[int]:
        """Dense [c0, ..., cd] view; univariate only."""
        if self.k != 1:
            raise ValueError("dense coefficient view is univariate-only")
        if not self.terms:
            return []
        degree = max(t for (t,) in self.terms)
        out = [0] * (degree + 1)
        for (t,), c in self.terms.items():
            out[t] = c
        return out

    def divide_linear(self, root: int) -> tuple["IntPolynomial", int]:
        """Synthetic division by (z - root); univariate only.

        Returns (quotient, remainder); remainder 0 means (z - root) divides.
        """
        cs = self.coeffs()
        degree = len(cs) - 1
        if degree < 1:
            return IntPolynomial(1, {}), (cs[0] if cs else 0)
        quot = [0] * degree
        quot[degree - 1] = cs[degree]
        for i in range(degree - 1, 0, -1):
            quot[i - 1] = cs[i] + root * quot[i]
        remainder = cs[0] + root * quot[0]
        return IntPolynomial.univariate(quot), remainder
