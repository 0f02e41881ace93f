"""Product-side admissibility: divisor search, certificates, constructions."""

import pytest

from eqprod.core import (
    IntPolynomial,
    SearchBudgetExceeded,
    Triple,
    canonicalize,
    factorize,
    signature,
)
from eqprod.partitions import group_by_product
from eqprod.product_side import (
    ChiCertificate,
    InfeasiblePadding,
    UnequalSignatures,
    WitnessPair,
    chi_from_witness,
    construct_prime_power_witness,
    construct_qu_witness,
    is_prime_power_admissible,
    is_product_admissible,
    verify_chi,
    witness_from_chi,
)

CHI_2 = IntPolynomial.univariate([-2, 5, -4, 1])  # vanishes at 2 and doubly at 1
CHI_23 = IntPolynomial(2, {(0, 0): 1, (1, 1): 2, (1, 0): -2, (0, 2): -1})


def test_witness_pair_validation():
    x = canonicalize([1, 6, 6])
    with pytest.raises(UnequalSignatures):
        WitnessPair(x, x)
    with pytest.raises(UnequalSignatures):
        WitnessPair(x, canonicalize([1, 5, 7]))
    w = WitnessPair(x, canonicalize([2, 2, 9]))
    assert w.triple == Triple(13, 36, 3)


def test_witness_pair_dict_roundtrip():
    w = WitnessPair(canonicalize([1, 6, 6]), canonicalize([2, 2, 9]))
    assert WitnessPair.from_dict(w.to_dict()) == w


def test_is_product_admissible_examples():
    w = is_product_admissible(factorize(36))
    assert w.x.parts == (1, 6, 6) and w.y.parts == (2, 2, 9)
    assert is_product_admissible(factorize(7)) is None
    assert is_product_admissible(factorize(1)) is None


def test_product_search_covers_all_small_products():
    # every product collision visible at sums <= 24 must be detected
    seen = set()
    for s in range(3, 25):
        for n in range(3, 8):
            for p, members in group_by_product(s, n).items():
                if len(members) >= 2:
                    seen.add(p)
    for p in sorted(seen):
        w = is_product_admissible(factorize(p))
        assert w is not None, p
        assert signature(w.x).p == p


def test_product_search_budgets():
    with pytest.raises(SearchBudgetExceeded):
        is_product_admissible(factorize(2**41))
    with pytest.raises(SearchBudgetExceeded):
        is_product_admissible(factorize(720), node_cap=3)


def test_prime_power_theorem_mode():
    ok, w = is_prime_power_admissible(2, 8)
    assert ok and w.triple == Triple(18, 256, 6)
    assert is_prime_power_admissible(2, 7) == (False, None)
    ok, w = is_prime_power_admissible(5, 14)
    assert ok and w.triple == Triple(5**3 + 2 * 25 + 5, 5**14, 12)


def test_prime_power_exhaustive_mode():
    assert is_prime_power_admissible(2, 7, "exhaustive") == (False, None)
    assert is_prime_power_admissible(3, 9, "exhaustive") == (False, None)
    ok, w = is_prime_power_admissible(2, 8, "exhaustive")
    assert ok and w is not None and signature(w.x).p == 256
    ok, w = is_prime_power_admissible(3, 10, "exhaustive")
    assert ok and w is not None and signature(w.x).p == 3**10


def test_prime_power_modes_agree():
    for q in (2, 3):
        for j in range(1, 2 * q + 5):
            th, _ = is_prime_power_admissible(q, j, "theorem")
            ex, _ = is_prime_power_admissible(q, j, "exhaustive")
            assert th == ex, (q, j)


def test_prime_power_agrees_with_divisor_search():
    for q in (2, 3):
        for j in range(1, 11):
            th, _ = is_prime_power_admissible(q, j)
            assert th == (is_product_admissible(factorize(q**j)) is not None), (q, j)


def test_prime_power_validation_and_budget():
    with pytest.raises(ValueError):
        is_prime_power_admissible(4, 8)
    with pytest.raises(ValueError):
        is_prime_power_admissible(2, 0)
    with pytest.raises(ValueError):
        is_prime_power_admissible(2, 8, "guess")
    with pytest.raises(SearchBudgetExceeded):
        is_prime_power_admissible(3, 10, "exhaustive", node_cap=10)


def test_construct_prime_power_witness():
    w = construct_prime_power_witness(2, 8)
    assert w.x.parts == (2, 2, 2, 2, 2, 8)
    assert w.y.parts == (1, 1, 4, 4, 4, 4)
    w = construct_prime_power_witness(3, 10)
    assert w.x.parts == (3,) * 7 + (27,)
    assert w.y.parts == (1, 1, 1) + (9,) * 5
    assert w.triple == Triple(48, 3**10, 8)
    w = construct_prime_power_witness(2, 9)
    assert w.triple == Triple(20, 512, 7)
    assert w.x.parts == (2, 2, 2, 2, 2, 2, 8)
    with pytest.raises(ValueError):
        construct_prime_power_witness(2, 7)


def test_construct_qu_witness():
    w = construct_qu_witness(2, 3)
    assert w.x.parts == (2, 2, 2, 2, 2, 3, 8)
    assert w.y.parts == (1, 1, 3, 4, 4, 4, 4)
    assert w.triple == Triple(21, 768, 7)
    assert construct_qu_witness(2, 1).triple == Triple(19, 256, 7)
    assert construct_qu_witness(3, 2).triple == Triple(50, 2 * 3**10, 9)
    with pytest.raises(ValueError):
        construct_qu_witness(2, 0)


def test_verify_chi_examples():
    assert verify_chi(ChiCertificate(CHI_2, (2,), (8,)))
    assert not verify_chi(ChiCertificate(CHI_2, (2,), (7,)))
    assert verify_chi(ChiCertificate(CHI_23, (2, 3), (2, 2)))


def test_verify_chi_rejects_each_condition():
    # wrong prime point
    assert not verify_chi(ChiCertificate(CHI_2, (3,), (8,)))
    # nonzero at all-ones
    bad = IntPolynomial.univariate([-1, 0, 0, 1])  # z^3 - 1
    assert not verify_chi(ChiCertificate(bad, (2,), (8,)))


def test_certificate_structure_validation():
    with pytest.raises(ValueError):
        ChiCertificate(IntPolynomial(1, {}), (2,), (8,))
    with pytest.raises(ValueError):
        ChiCertificate(CHI_2, (2, 3), (8,))
    with pytest.raises(ValueError):
        ChiCertificate(CHI_2, (4,), (8,))
    with pytest.raises(ValueError):
        ChiCertificate(CHI_2, (2,), (0,))


def test_certificate_dict_roundtrip():
    cert = ChiCertificate(CHI_23, (2, 3), (2, 2))
    assert ChiCertificate.from_dict(cert.to_dict()) == cert


def test_chi_from_witness_examples():
    w = WitnessPair(canonicalize([1, 6, 6]), canonicalize([2, 2, 9]))
    cert = chi_from_witness(w)
    assert cert.primes == (2, 3) and cert.exponents == (2, 2)
    assert dict(cert.chi.terms) == {(0, 0): 1, (1, 1): 2, (1, 0): -2, (0, 2): -1}
    cert = chi_from_witness(construct_prime_power_witness(2, 8))
    assert cert.chi.coeffs() == [-2, 5, -4, 1]
    assert verify_chi(cert)


def test_witness_from_chi_examples():
    w = witness_from_chi(ChiCertificate(CHI_2, (2,), (8,)))
    assert w.x.parts == (2, 2, 2, 2, 2, 8) and w.y.parts == (1, 1, 4, 4, 4, 4)
    w = witness_from_chi(ChiCertificate(CHI_2, (2,), (9,)))
    assert w.triple == Triple(20, 512, 7)
    assert 2 in w.x.parts and 2 in w.y.parts
    w = witness_from_chi(ChiCertificate(CHI_23, (2, 3), (2, 2)))
    assert w.x.parts == (1, 6, 6) and w.y.parts == (2, 2, 9)


def test_witness_from_chi_infeasible_padding():
    lopsided = IntPolynomial(1, {(5,): 1, (0,): -1})
    with pytest.raises(InfeasiblePadding):
        witness_from_chi(ChiCertificate(lopsided, (2,), (3,)))


def test_chi_roundtrip_preserves_triples():
    witnesses = [
        WitnessPair(canonicalize([1, 6, 6]), canonicalize([2, 2, 9])),
        construct_prime_power_witness(2, 8),
        construct_prime_power_witness(2, 11),
        construct_prime_power_witness(3, 10),
        construct_qu_witness(2, 3),
        construct_qu_witness(3, 5),
    ]
    for w in witnesses:
        cert = chi_from_witness(w)
        assert verify_chi(cert)
        back = witness_from_chi(cert)
        assert back.triple == w.triple


def test_unit_cofactor_certificate_collapses_to_base_witness():
    # the shared unit parts of the u = 1 construction cancel in the
    # multiplicity difference, so its certificate equals the base one and
    # the minimal-length reconstruction returns the shorter pair
    for q in (2, 3):
        w1 = construct_qu_witness(q, 1)
        base = construct_prime_power_witness(q, 2 * q + 4)
        cert = chi_from_witness(w1)
        assert cert.chi == chi_from_witness(base).chi
        assert witness_from_chi(cert).triple == base.triple


def test_univariate_certificates_divide_by_root_factors():
    for q in (2, 3, 5):
        cert = chi_from_witness(construct_prime_power_witness(q, 2 * q + 4))
        quotient, rem = cert.chi.divide_linear(q)
        assert rem == 0
        quotient, rem = quotient.divide_linear(1)
        assert rem == 0
        _, rem = quotient.divide_linear(1)
        assert rem == 0
