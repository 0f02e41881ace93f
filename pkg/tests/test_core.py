"""Core types: canonical multisets, signatures, factorization, polynomials."""

import random

import pytest

from eqprod.core import (
    PRODUCT_MAX,
    EmptyInput,
    FactoredInteger,
    IntPolynomial,
    NonPositivePart,
    PartitionMultiset,
    ProductOverflow,
    Triple,
    canonicalize,
    checked_product,
    factorize,
    signature,
)


def test_signature_examples():
    assert signature(canonicalize([2, 2, 9])) == Triple(13, 36, 3)
    for n in (1, 4, 17):
        assert signature(canonicalize([1] * n)) == Triple(n, 1, n)
    assert signature(canonicalize([8, 2, 2, 2, 2, 2])) == Triple(18, 256, 6)


def test_canonicalize_examples():
    assert canonicalize((9, 2, 2)).parts == (2, 2, 9)
    assert canonicalize((1,)).parts == (1,)
    assert canonicalize((6, 1, 6)).parts == (1, 6, 6)


def test_canonicalize_idempotent():
    rng = random.Random(7)
    for _ in range(50):
        raw = [rng.randint(1, 40) for _ in range(rng.randint(1, 12))]
        once = canonicalize(raw)
        assert canonicalize(once.parts) == once


def test_signature_permutation_invariant():
    rng = random.Random(11)
    for _ in range(50):
        raw = [rng.randint(1, 20) for _ in range(rng.randint(1, 10))]
        shuffled = raw[:]
        rng.shuffle(shuffled)
        assert signature(canonicalize(raw)) == signature(canonicalize(shuffled))


def test_canonicalize_rejects_bad_input():
    with pytest.raises(EmptyInput):
        canonicalize([])
    with pytest.raises(NonPositivePart):
        canonicalize([3, 0, 1])
    with pytest.raises(NonPositivePart):
        canonicalize([3, -2])


def test_multiset_requires_sorted_parts():
    with pytest.raises(ValueError):
        PartitionMultiset((3, 1, 2))
    assert PartitionMultiset((1, 2, 3)).parts == (1, 2, 3)


def test_multiset_ordering_is_lexicographic():
    assert canonicalize([1, 6, 6]) < canonicalize([2, 2, 9])
    assert sorted([canonicalize([2, 2, 9]), canonicalize([1, 6, 6])])[0].parts == (1, 6, 6)


def test_triple_validation():
    with pytest.raises(ValueError):
        Triple(3, 1, 4)  # length exceeds sum
    with pytest.raises(ValueError):
        Triple(3, 0, 1)
    with pytest.raises(ProductOverflow):
        Triple(1000, 2**128, 3)


def test_checked_product_overflow():
    assert checked_product([2] * 127) == 2**127
    with pytest.raises(ProductOverflow):
        checked_product([2] * 129)
    with pytest.raises(ProductOverflow):
        signature(canonicalize([3] * 81))


def test_factorize_examples():
    assert factorize(36).factors == {2: 2, 3: 2}
    assert factorize(1).factors == {}
    assert factorize(256).factors == {2: 8}
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_expand_roundtrip():
    rng = random.Random(2024)
    samples = [1, 2, 6, 720, 2**62] + [rng.randrange(1, 2**63) for _ in range(25)]
    for u in samples:
        assert factorize(u).value == u


def test_factored_integer_validation():
    with pytest.raises(ValueError):
        FactoredInteger({4: 1})
    with pytest.raises(ValueError):
        FactoredInteger({3: 0})
    fi = FactoredInteger({3: 2, 2: 1})
    assert fi.value == 18
    assert fi.total_multiplicity == 3
    assert fi.primes() == (2, 3)
    assert fi.exponents() == (1, 2)


def test_univariate_polynomial_basics():
    p = IntPolynomial.univariate([-2, 5, -4, 1])
    assert p.evaluate((2,)) == 0
    assert p.evaluate((1,)) == 0
    d = p.partial(0)
    assert d.coeffs() == [5, -8, 3]
    assert d.evaluate((1,)) == 0
    assert d.coeff_abs_sum() == 16


def test_polynomial_drops_zero_coefficients():
    p = IntPolynomial(1, {(0,): 0, (2,): 3})
    assert p.terms == {(2,): 3}
    assert IntPolynomial(1, {(1,): 0}).is_zero


def test_polynomial_validation():
    with pytest.raises(ValueError):
        IntPolynomial(0, {})
    with pytest.raises(ValueError):
        IntPolynomial(2, {(1,): 1})
    with pytest.raises(ValueError):
        IntPolynomial(1, {(-1,): 1})


def test_multivariate_polynomial():
    p = IntPolynomial(2, {(0, 0): 1, (1, 1): 2, (1, 0): -2, (0, 2): -1})
    assert p.evaluate((2, 3)) == 0
    assert p.evaluate((1, 1)) == 0
    d0, d1 = p.partial(0), p.partial(1)
    assert d0.evaluate((1, 1)) == 0 and d1.evaluate((1, 1)) == 0
    assert d0.coeff_abs_sum() == 4 and d1.coeff_abs_sum() == 4


def test_synthetic_division():
    p = IntPolynomial.univariate([-2, 5, -4, 1])
    q1, rem = p.divide_linear(2)
    assert rem == 0 and q1.coeffs() == [1, -2, 1]
    q2, rem = q1.divide_linear(1)
    assert rem == 0 and q2.coeffs() == [-1, 1]
    q3, rem = q2.divide_linear(1)
    assert rem == 0 and q3.coeffs() == [1]
    _, rem = p.divide_linear(5)
    assert rem == p.evaluate((5,))
