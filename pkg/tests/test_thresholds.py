"""Threshold functions, tables, renders, and the conjecture sweep."""

import pytest

from eqprod.core import SearchBudgetExceeded
from eqprod.thresholds import (
    ConjectureCheck,
    ThresholdRecord,
    check_conjectures,
    has_r_family,
    render_bfile,
    render_csv,
    s_r_0,
    s_r_star,
    table_s_n0,
    table_s_star,
)


def test_has_r_family_examples():
    assert has_r_family(19, 3, 2)
    assert not has_r_family(18, 3, 2)
    assert not has_r_family(2, 3, 2)
    with pytest.raises(ValueError):
        has_r_family(19, 3, 1)


def test_s_r_0_examples():
    assert s_r_0(3, 2) == 13
    assert s_r_0(3, 3) == 39
    assert s_r_0(4, 4) == 24


def test_s_r_0_cap_exhaustion_returns_none():
    assert s_r_0(3, 60, cap=30) is None


def test_s_r_star_examples():
    assert s_r_star(4, 3) == 23
    assert s_r_star(7, 6) == 27
    assert s_r_star(3, 2) == 19


def test_s_r_star_propagates_cap_exhaustion():
    with pytest.raises(SearchBudgetExceeded):
        s_r_star(4, 80, cap=25)


def test_s_r_star_scan_boundary():
    # every sum from the threshold up to the scan top has a family, and the
    # sum just below it does not
    for n, r in ((4, 3), (5, 4)):
        star = s_r_star(n, r)
        top = s_r_0(n - 1, r) + 1
        assert not has_r_family(star - 1, n, r)
        for s in range(star, top + 1):
            assert has_r_family(s, n, r), (n, r, s)


def test_s0_is_at_most_sstar():
    for n, r in ((4, 3), (5, 4), (6, 5)):
        assert s_r_0(n, r) <= s_r_star(n, r)


def test_table_s_n0_small():
    records = table_s_n0(6)
    assert [(rec.n, rec.r, rec.s0) for rec in records] == [
        (3, 3, 39), (4, 4, 24), (5, 5, 25), (6, 6, 26),
    ]
    for rec in records:
        assert rec.witness is not None
        assert len(rec.witness) >= rec.r
        assert rec.witness.triple.s == rec.s0
        assert rec.witness.triple.n == rec.n


def test_table_s_star_small():
    records = table_s_star(6)
    assert [(rec.n, rec.r, rec.sstar) for rec in records] == [
        (3, 2, 19), (4, 3, 23), (5, 4, 23), (6, 5, 26),
    ]


def test_table_bounds_validated():
    with pytest.raises(ValueError):
        table_s_n0(21)
    with pytest.raises(ValueError):
        table_s_star(22)
    with pytest.raises(ValueError):
        table_s_n0(2)


def test_tables_deterministic_across_workers():
    assert table_s_n0(5, workers=2) == table_s_n0(5, workers=1)
    assert table_s_star(5, workers=2) == table_s_star(5, workers=1)


def test_threshold_record_roundtrip():
    for rec in table_s_n0(4) + table_s_star(4):
        assert ThresholdRecord.from_dict(rec.to_dict()) == rec


def test_render_csv():
    out = render_csv(table_s_star(4))
    assert out == "n,r,s0,sstar\n3,2,,19\n4,3,,23\n"


def test_render_bfile():
    assert render_bfile(table_s_star(5)) == "3 19\n4 23\n5 23\n"
    with pytest.raises(ValueError):
        render_bfile(table_s_n0(4))


def test_theorem_inequality_small():
    # s_r_star(n+1) <= s_r_0(n) + 1 <= s_r_star(n) + 1 for r = n - 1
    for n in range(4, 7):
        r = n - 1
        assert s_r_star(n + 1, r) <= s_r_0(n, r) + 1 <= s_r_star(n, r) + 1


def test_conjecture_sweep_ranges_and_status():
    checks = check_conjectures(9)
    by_name = {}
    for c in checks:
        by_name.setdefault(c.conjecture, []).append(c.n)
        assert c.holds, c
    assert by_name["1"] == [6, 7, 8, 9]
    assert by_name["2a"] == [9]
    assert by_name["2b"] == [7, 8, 9]
    assert "2c" not in by_name


def test_conjecture_check_dict():
    c = ConjectureCheck("1", 7, 27, 27)
    assert c.holds
    assert c.to_dict() == {"conjecture": "1", "n": 7, "lhs": 27, "rhs": 27, "holds": True}
