import pytest

from dichot.affine import GroupSpec
from dichot.pipeline import group_for
from dichot.polya import (affine_cycle_index, affine_inventory_poly, cycle_index,
                          dichotomy_count, group_inventory, pie_report,
                          self_complementary_count)
from dichot.tables import published_summary


def test_cycle_index_identity_term():
    terms = cycle_index(group_for(GroupSpec.affine(6)))
    ident = [t for t in terms if t.cycles == ((1, 6),)]
    assert len(ident) == 1 and ident[0].multiplicity == 1
    assert sum(t.multiplicity for t in terms) == 12


def test_cycle_index_aff2():
    terms = affine_cycle_index(2)
    assert {t.cycles: t.multiplicity for t in terms} == {((1, 2),): 1, ((2, 1),): 1}


def test_total_pattern_count_aff6():
    assert affine_inventory_poly(6).evaluate(1) == 13
    assert group_inventory(group_for(GroupSpec.affine(6))).evaluate(1) == 13


def test_dichotomy_count_examples():
    assert dichotomy_count(6) == 3
    assert dichotomy_count(12) == 34
    assert dichotomy_count(50) == 126410742103


def test_self_complementary_examples():
    assert self_complementary_count(6) == 3
    assert self_complementary_count(24) == 440
    assert self_complementary_count(50) == 872893


def test_even_modulus_required():
    for bad in (5, 1, 0, -2):
        with pytest.raises(ValueError):
            dichotomy_count(bad)
        with pytest.raises(ValueError):
            self_complementary_count(bad)


def test_d_and_s_columns_match_published_table():
    for n, row in published_summary().items():
        assert dichotomy_count(n) == row["D"], f"D mismatch at {n}"
        assert self_complementary_count(n) == row["S"], f"S mismatch at {n}"


@pytest.mark.parametrize("n", list(range(2, 51, 2)))
def test_inventory_shape_invariants(n):
    p = affine_inventory_poly(n)
    assert p.is_palindromic(n)
    assert p.is_nonnegative() and p.is_integral()
    assert abs(p.evaluate(-1)) <= p.coeff(n // 2)  # every self-complementary
    # pattern is a dichotomy


def test_pie_report_rows():
    r10 = pie_report(10)
    assert (r10.dichotomies, r10.self_complementary, r10.rigid_dichotomies,
            r10.bound, r10.sieve) == (9, 7, 5, 3, 3)
    assert r10.rigid_total == 15  # rigid patterns of every size
    r8 = pie_report(8)
    assert (r8.dichotomies, r8.self_complementary, r8.rigid_total,
            r8.bound, r8.sieve) == (6, 4, 1, -1, 1)
    r2 = pie_report(2)
    assert (r2.dichotomies, r2.self_complementary, r2.rigid_total,
            r2.bound, r2.sieve) == (1, 1, 1, 1, 1)


def test_pie_bound_against_published():
    pub = published_summary()
    for n in range(8, 25, 2):
        r = pie_report(n)
        assert r.rigid_dichotomies == pub[n]["R"]
        assert r.bound == pub[n]["pie"]
        assert r.sieve == pub[n]["sieve"]


def test_documented_discrepancy_at_six():
    # the published row prints R = 0, but the trivial-class inventory is x^3
    r = pie_report(6)
    assert r.rigid_total == 1 and r.rigid_dichotomies == 1
    assert published_summary()[6]["R"] == 0
