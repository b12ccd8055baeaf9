import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dichot.affine import (AffineElement, GroupSpec, aff_apply, aff_compose,
                           aff_inverse, build_group, klein_rectangle_spec,
                           units_of)


def test_units_examples():
    assert units_of(2) == [1]
    assert units_of(6) == [1, 5]
    assert units_of(12) == [1, 5, 7, 11]
    assert units_of(1) == [0]


def test_units_rejects_nonpositive():
    with pytest.raises(ValueError):
        units_of(0)


def test_apply_examples():
    ident = AffineElement(0, 1, 6)
    assert all(aff_apply(ident, x) == x for x in range(6))
    assert aff_apply(AffineElement(5, 5, 6), 1) == 4
    assert aff_apply(AffineElement(5, 7, 8), 0) == 5


def test_compose_examples():
    t = AffineElement(1, 1, 6)
    assert aff_compose(t, t) == AffineElement(2, 1, 6)
    r = AffineElement(0, 5, 6)
    assert aff_compose(r, r) == AffineElement(0, 1, 6)
    s = AffineElement(5, 5, 6)
    assert aff_compose(s, s) == AffineElement(0, 1, 6)
    assert s.order() == 2


def test_compose_modulus_mismatch():
    with pytest.raises(ValueError):
        aff_compose(AffineElement(0, 1, 6), AffineElement(0, 1, 8))


@given(st.integers(2, 40), st.data())
@settings(max_examples=150, deadline=None)
def test_compose_matches_pointwise_application(n, data):
    us = units_of(n)
    pick = st.tuples(st.integers(0, n - 1), st.sampled_from(us))
    (u1, v1), (u2, v2) = data.draw(pick), data.draw(pick)
    a, b = AffineElement(u1, v1, n), AffineElement(u2, v2, n)
    c = aff_compose(a, b)
    for x in range(n):
        assert aff_apply(c, x) == aff_apply(a, aff_apply(b, x))
    assert aff_compose(a, aff_inverse(a)) == AffineElement(0, 1, n)
    assert aff_compose(aff_inverse(a), a) == AffineElement(0, 1, n)


def test_label_parsing_and_negative_normalization():
    a = AffineElement.from_label("e^5.-1", 8)
    assert a == AffineElement(5, 7, 8)
    assert a.display_label == "e^5.-1"
    assert a.label == "e^5.7"
    assert AffineElement.from_label("e^{5}.{7}", 8) == a
    with pytest.raises(ValueError):
        AffineElement.from_label("x^2.3", 8)
    with pytest.raises(ValueError):
        AffineElement.from_label("e^1.2", 8)  # 2 is not a unit mod 8


@pytest.mark.parametrize("n", list(range(2, 25, 2)) + [49, 50])
def test_affine_group_order(n):
    group = build_group(GroupSpec.affine(n))
    assert group.order == n * len(units_of(n))


def test_affine_swap_order_and_kernel():
    group = build_group(GroupSpec.affine_swap(8))
    assert group.order == 64
    assert sum(1 for g in range(group.order) if group.color_bits[g] == 0) == 32
    assert "(e^5.7, swap)" in group.labels


def test_group_axioms_spot_checks():
    for spec in (GroupSpec.affine(6), GroupSpec.affine_swap(6),
                 klein_rectangle_spec(), GroupSpec.affine(12)):
        build_group(spec).validate()


def test_affine_domain_action_faithful():
    for n in (2, 3, 6, 12):
        group = build_group(GroupSpec.affine(n))
        assert len(set(group.dom_perms)) == group.order


def test_klein_spec_builds_v4():
    group = build_group(klein_rectangle_spec())
    assert group.order == 4
    assert all(group.element_order(g) in (1, 2) for g in range(4))


def test_explicit_rejects_bad_permutation():
    with pytest.raises(ValueError):
        GroupSpec.explicit(3, [((0, 0, 1), False)])


def test_descriptor_stability():
    assert GroupSpec.affine(6).descriptor == "affine-6"
    assert GroupSpec.affine_swap(8).descriptor == "affine-swap-8"
    d1 = klein_rectangle_spec().descriptor
    d2 = klein_rectangle_spec().descriptor
    assert d1 == d2 and d1.startswith("explicit-")


def test_trivial_modulus_allowed():
    group = build_group(GroupSpec.affine(1))
    assert group.order == 1
