"""Product-side admissibility: witness searches and polynomial certificates.

A positive integer p is product-admissible when two distinct multisets with
product p share a sum and a length. Stripping the 1-parts reduces the
question to finding two distinct multisets of divisors > 1 of p, each with
product exactly p, whose (sum - length) values agree; the shorter side is
then topped up with 1-parts. Independently, the multiplicity difference of
the two multisets' prime-exponent patterns is an integer polynomial
certificate that can be verified on its own and inverted back into a
witness, and for a prime power q**j admissibility holds exactly from
j = 2q + 4 on, with an explicit witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from sympy import isprime

from .core import (
    FactoredInteger,
    IntPolynomial,
    PartitionMultiset,
    SearchBudgetExceeded,
    Triple,
    canonicalize,
    factorize,
    signature,
)

DEFAULT_NODE_CAP = 5_000_000
MAX_MULTIPLICITY = 40
MAX_DIVISORS = 1_000_000


class UnequalSignatures(ValueError):
    """Witness members must be distinct multisets with one shared signature."""


class InfeasiblePadding(ValueError):
    """A certificate's padding exponents or lengths cannot be reconciled."""


@dataclass(frozen=True)
class WitnessPair:
    """Two distinct partitions sharing a (sum, product, length) signature."""

    x: PartitionMultiset
    y: PartitionMultiset

    def __post_init__(self) -> None:
        if self.x == self.y:
            raise UnequalSignatures("witness members must be distinct multisets")
        if signature(self.x) != signature(self.y):
            raise UnequalSignatures(
                f"signatures differ: {signature(self.x)} vs {signature(self.y)}"
            )

    @property
    def triple(self) -> Triple:
        return signature(self.x)

    def to_dict(self) -> dict:
        return {"x": list(self.x.parts), "y": list(self.y.parts)}

    @classmethod
    def from_dict(cls, data: Mapping) -> "WitnessPair":
        return cls(canonicalize(data["x"]), canonicalize(data["y"]))


@dataclass(frozen=True)
class ChiCertificate:
    """Certificate polynomial for the product primes[0]**e0 * primes[1]**e1 ...

    Positive coefficients encode one multiset, negative coefficients the
    other. Construction checks structure only; the four admissibility
    conditions are the job of verify_chi, so invalid certificates can be
    represented and rejected.
    """

    chi: IntPolynomial
    primes: tuple[int, ...]
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        primes = tuple(int(q) for q in self.primes)
        exponents = tuple(int(j) for j in self.exponents)
        if self.chi.is_zero:
            raise ValueError("certificate polynomial must be nonzero")
        if len(primes) != self.chi.k or len(exponents) != self.chi.k:
            raise ValueError("primes and exponents must match the variable count")
        if len(set(primes)) != len(primes):
            raise ValueError("primes must be distinct")
        for q in primes:
            if not isprime(q):
                raise ValueError(f"{q} is not prime")
        if any(j < 1 for j in exponents):
            raise ValueError("exponents must be >= 1")
        object.__setattr__(self, "primes", primes)
        object.__setattr__(self, "exponents", exponents)

    def to_dict(self) -> dict:
        return {
            "primes": list(self.primes),
            "exponents": list(self.exponents),
            "terms": [[list(expt), self.chi.terms[expt]] for expt in sorted(self.chi.terms)],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "ChiCertificate":
        primes = tuple(int(q) for q in data["primes"])
        terms = {tuple(int(t) for t in expt): int(c) for expt, c in data["terms"]}
        chi = IntPolynomial(len(primes), terms)
        return cls(chi, primes, tuple(int(j) for j in data["exponents"]))


def verify_chi(cert: ChiCertificate) -> bool:
    """Check the four certificate conditions.

    The polynomial must vanish at the prime point and at the all-ones
    point, every partial derivative must vanish at all-ones, and the
    absolute coefficient sum of the partial in variable i must be at most
    twice the i-th exponent.
    """
    chi = cert.chi
    ones = (1,) * chi.k
    if chi.evaluate(cert.primes) != 0:
        return False
    if chi.evaluate(ones) != 0:
        return False
    for var in range(chi.k):
        d = chi.partial(var)
        if d.evaluate(ones) != 0:
            return False
        if d.coeff_abs_sum() > 2 * cert.exponents[var]:
            return False
    return True


def _exponent_tuple(value: int, primes: Sequence[int]) -> tuple[int, ...]:
    out = []
    for q in primes:
        e = 0
        while value % q == 0:
            value //= q
            e += 1
        out.append(e)
    if value != 1:
        raise ValueError(f"part does not factor over primes {tuple(primes)}")
    return tuple(out)


def chi_from_witness(w: WitnessPair) -> ChiCertificate:
    """Certificate whose coefficients are multiplicity differences of w.

    The coefficient at exponent tuple t counts how often the part
    primes[0]**t0 * primes[1]**t1 ... appears in x minus how often in y;
    the certificate exponents are the prime exponents of the shared
    product.
    """
    trip = w.triple
    fact = factorize(trip.p)
    primes = fact.primes()
    counts: dict[tuple[int, ...], int] = {}
    for part in w.x.parts:
        t = _exponent_tuple(part, primes)
        counts[t] = counts.get(t, 0) + 1
    for part in w.y.parts:
        t = _exponent_tuple(part, primes)
        counts[t] = counts.get(t, 0) - 1
    chi = IntPolynomial(len(primes), counts)
    return ChiCertificate(chi, primes, fact.exponents())


def witness_from_chi(cert: ChiCertificate) -> WitnessPair:
    """Rebuild the two partitions a certificate encodes.

    Positive coefficients populate x, negative populate y, and one shared
    padding part carries whatever prime mass the positive coefficients
    leave short of the stated exponents. An all-ones padding part is
    dropped, which keeps the output length minimal; when lengths still
    disagree the short side takes unit parts, but only if that preserves
    the equal sums.
    """
    k = cert.chi.k
    x_parts: list[int] = []
    y_parts: list[int] = []
    used = [0] * k
    for expt in sorted(cert.chi.terms):
        coeff = cert.chi.terms[expt]
        part = 1
        for q, t in zip(cert.primes, expt):
            part *= q**t
        if coeff > 0:
            x_parts.extend([part] * coeff)
            for i in range(k):
                used[i] += coeff * expt[i]
        else:
            y_parts.extend([part] * (-coeff))
    pad_exp = [j - u for j, u in zip(cert.exponents, used)]
    if any(e < 0 for e in pad_exp):
        raise InfeasiblePadding(
            f"positive coefficients exceed the stated exponents {cert.exponents}"
        )
    pad = 1
    for q, e in zip(cert.primes, pad_exp):
        pad *= q**e
    if pad > 1:
        x_parts.append(pad)
        y_parts.append(pad)
    if len(x_parts) != len(y_parts):
        short, long_ = (
            (x_parts, y_parts) if len(x_parts) < len(y_parts) else (y_parts, x_parts)
        )
        need = len(long_) - len(short)
        if sum(short) + need != sum(long_):
            raise InfeasiblePadding("length gap cannot be closed with unit parts")
        short.extend([1] * need)
    if not x_parts or not y_parts:
        raise InfeasiblePadding("one side of the certificate is empty")
    return WitnessPair(canonicalize(x_parts), canonicalize(y_parts))


def _sorted_divisors(fact: FactoredInteger) -> list[int]:
    divs = [1]
    for q, e in sorted(fact.factors.items()):
        powers = [q**i for i in range(e + 1)]
        divs = [d * m for d in divs for m in powers]
    return sorted(divs)


def is_product_admissible(
    p: FactoredInteger, node_cap: int = DEFAULT_NODE_CAP
) -> WitnessPair | None:
    """Search for two distinct equal-signature multisets with product p.

    Multiset factorizations of p into parts > 1 are streamed in
    lexicographic order and bucketed by (sum - length); the first bucket
    collision yields the witness after topping the shorter side up with
    1-parts. Stripping 1-parts from any witness leaves exactly such a
    colliding pair, so an exhausted search means no witness exists.
    """
    if p.total_multiplicity > MAX_MULTIPLICITY:
        raise SearchBudgetExceeded(
            f"{p.total_multiplicity} prime factors exceeds the bound {MAX_MULTIPLICITY}"
        )
    value = p.value
    if value == 1:
        return None
    ndiv = 1
    for e in p.factors.values():
        ndiv *= e + 1
    if ndiv > MAX_DIVISORS:
        raise SearchBudgetExceeded(f"{ndiv} divisors exceeds the bound {MAX_DIVISORS}")
    divisors = [d for d in _sorted_divisors(p) if d > 1]
    nodes = 0

    def factorizations(remaining: int, lo_idx: int, acc: list[int]):
        nonlocal nodes
        for idx in range(lo_idx, len(divisors)):
            d = divisors[idx]
            if d > remaining:
                break
            if remaining % d:
                continue
            nodes += 1
            if nodes > node_cap:
                raise SearchBudgetExceeded(f"factorization search passed {node_cap} nodes")
            acc.append(d)
            if d == remaining:
                yield tuple(acc)
            else:
                yield from factorizations(remaining // d, idx, acc)
            acc.pop()

    buckets: dict[int, tuple[int, ...]] = {}
    for f in factorizations(value, 0, []):
        key = sum(f) - len(f)
        other = buckets.get(key)
        if other is None:
            buckets[key] = f
            continue
        a, b = other, f
        first = PartitionMultiset((1,) * max(0, len(b) - len(a)) + a)
        second = PartitionMultiset((1,) * max(0, len(a) - len(b)) + b)
        if second < first:
            first, second = second, first
        return WitnessPair(first, second)
    return None


def _search_c_vector(q: int, j: int, node_cap: int) -> tuple[int, ...] | None:
    """Backtrack for a nonzero integer vector (c_0 .. c_j) with zero
    coefficient sum, zero index-weighted sum, zero q-power-weighted sum,
    and index-weighted absolute mass at most 2j.

    Positions j down to 2 are enumerated high powers first so the q-power
    partial sum prunes hard; c_1 and c_0 are then forced by the two linear
    constraints and checked. Any valid vector has |c_t| <= 2j / max(t, 1),
    and the remaining positions 1..u can shift the power sum by at most
    (remaining mass) * q**u / u, plus 2j of slack for c_0.
    """
    budget = 2 * j
    qpow = [q**t for t in range(j + 1)]
    c = [0] * (j + 1)
    nodes = 0

    def descend(t: int, csum: int, tsum: int, wsum: int, weight: int):
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise SearchBudgetExceeded(f"coefficient search passed {node_cap} nodes")
        if t == 1:
            c1 = -tsum
            if weight + abs(c1) > budget:
                return None
            c0 = -(csum + c1)
            if wsum + c1 * q + c0 != 0:
                return None
            c[1], c[0] = c1, c0
            if not any(c):
                return None
            return tuple(c)
        slack = budget - weight
        for v in range(-(slack // t), slack // t + 1):
            w2 = wsum + v * qpow[t]
            rem = slack - abs(v) * t
            limit = rem * qpow[t - 1] // max(t - 1, 1) + budget
            if abs(w2) > limit:
                continue
            c[t] = v
            hit = descend(t - 1, csum + v, tsum + v * t, w2, weight + abs(v) * t)
            if hit is not None:
                return hit
        c[t] = 0
        return None

    return descend(j, 0, 0, 0, 0)


def is_prime_power_admissible(
    q: int, j: int, mode: str = "theorem", node_cap: int = DEFAULT_NODE_CAP
) -> tuple[bool, WitnessPair | None]:
    """Decide whether q**j is product-admissible.

    Theorem mode applies the closed criterion j >= 2q + 4 and attaches the
    explicit witness; exhaustive mode re-derives the answer by coefficient
    vector search and reconstructs a witness from the certificate it finds.
    """
    if not isprime(q):
        raise ValueError(f"{q} is not prime")
    if j < 1:
        raise ValueError("the exponent must be >= 1")
    if mode == "theorem":
        if j >= 2 * q + 4:
            return True, construct_prime_power_witness(q, j)
        return False, None
    if mode == "exhaustive":
        coeffs = _search_c_vector(q, j, node_cap)
        if coeffs is None:
            return False, None
        cert = ChiCertificate(IntPolynomial.univariate(coeffs), (q,), (j,))
        return True, witness_from_chi(cert)
    raise ValueError(f"unknown mode {mode!r}")


def construct_prime_power_witness(q: int, j: int) -> WitnessPair:
    """The explicit witness pair for q**j with j >= 2q + 4.

    x is {q**3} with 2q + 1 copies of q; y is q + 2 copies of q**2 with q
    ones. Both sides sum to q**3 + 2q**2 + q at length 2q + 2, and any
    exponent excess over 2q + 4 rides along as one extra part
    q**(j - 2q - 4) on both sides.
    """
    if not isprime(q):
        raise ValueError(f"{q} is not prime")
    threshold = 2 * q + 4
    if j < threshold:
        raise ValueError(f"exponent {j} is below the threshold {threshold}")
    x = [q**3] + [q] * (2 * q + 1)
    y = [q * q] * (q + 2) + [1] * q
    if j > threshold:
        x.append(q ** (j - threshold))
        y.append(q ** (j - threshold))
    return WitnessPair(canonicalize(x), canonicalize(y))


def construct_qu_witness(q: int, u: int) -> WitnessPair:
    """Witness for q**(2q + 4) * u: the threshold pair with u on both sides.

    The triple is (q**3 + 2q**2 + q + u, q**(2q + 4) * u, 2q + 3).
    """
    if u < 1:
        raise ValueError("u must be a positive integer")
    base = construct_prime_power_witness(q, 2 * q + 4)
    return WitnessPair(
        canonicalize(base.x.parts + (u,)),
        canonicalize(base.y.parts + (u,)),
    )
