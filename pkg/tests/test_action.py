"""Diagonal cyclic actions: acting, weight reading, weight-space counting."""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from godeaux import (
    CyclicAction,
    Polynomial,
    act,
    enumerate_monomials,
    project_to_weight,
    weight_of,
    weight_space_dim,
    zeta,
)
from godeaux.scenarios import fixtures
from godeaux.scenarios.torsion5 import z5_quintic


@pytest.fixture(scope="module")
def z5():
    desc = fixtures.z5_descriptor()
    return desc, CyclicAction.for_descriptor(desc), z5_quintic()


class TestAct:
    def test_quintic_invariant(self, z5):
        desc, action, q = z5
        assert act(action, 1, q) == q

    def test_variable_image(self, z5):
        desc, action, _ = z5
        x1 = desc.variable("x1")
        assert act(action, 1, x1) == x1.scale(zeta(5))

    def test_identity_element(self, z5):
        desc, action, q = z5
        p = q + desc.variable("x1")
        assert act(action, 0, p) == p

    def test_order_acts_trivially(self, z5):
        desc, action, _ = z5
        p = desc.variable("x1") * desc.variable("x3") + desc.variable("x2")
        out = p
        for _ in range(5):
            out = act(action, 1, out)
        assert out == p
        assert act(action, 5, p) == p

    @settings(max_examples=20, deadline=None)
    @given(data=st.data())
    def test_ring_homomorphism(self, z5, data):
        desc, action, _ = z5
        mons = enumerate_monomials(desc, 2)
        coeff = st.integers(min_value=-4, max_value=4)

        def rand():
            return Polynomial(desc, {m: Fraction(data.draw(coeff)) for m in mons})

        p, q = rand(), rand()
        k = data.draw(st.integers(min_value=0, max_value=4))
        assert act(action, k, p * q) == act(action, k, p) * act(action, k, q)
        assert act(action, k, p + q) == act(action, k, p) + act(action, k, q)

    def test_invalid_root(self, z5):
        desc, _, _ = z5
        with pytest.raises(ValueError, match="not primitive"):
            CyclicAction(desc, 5, root=Fraction(1))


class TestWeightOf:
    def test_quintic_weight_zero(self, z5):
        _, action, q = z5
        assert weight_of(action, q) == 0

    def test_monomial_weight(self):
        desc = fixtures.z3_descriptor()
        action = CyclicAction.for_descriptor(desc)
        p = desc.variable("x2") ** 2 * desc.variable("y1")
        assert weight_of(action, p) == 2  # (2*2 + 1) mod 3

    def test_mixed(self, z5):
        desc, action, _ = z5
        assert weight_of(action, desc.variable("x1") + desc.variable("x2")) == "mixed"

    def test_relation_weights_match_declared(self):
        desc = fixtures.z3_descriptor()
        action = CyclicAction.for_descriptor(desc)
        for name, _, wt, poly in fixtures.z3_relations():
            assert weight_of(action, poly) == wt, name

    def test_project(self, z5):
        desc, action, _ = z5
        p = desc.variable("x1") + desc.variable("x2")
        assert project_to_weight(p, 1) == desc.variable("x1")
        assert project_to_weight(p, 2) == desc.variable("x2")
        assert project_to_weight(p, 0).is_zero()


class TestWeightSpaceDim:
    def test_no_invariant_linear_forms(self, z5):
        desc, _, _ = z5
        assert weight_space_dim(desc, 1, 0) == 0

    def test_z4_degree_one(self):
        desc = fixtures.z4_descriptor()
        assert [weight_space_dim(desc, 1, w) for w in range(4)] == [0, 1, 1, 1]

    def test_degree_five_invariants_brute_force(self, z5):
        desc, _, _ = z5
        # Independent oracle: scan all exponent vectors with sum 5 and
        # weighted sum divisible by 5.
        count = sum(
            1
            for e in product(range(6), repeat=4)
            if sum(e) == 5 and sum((i + 1) * x for i, x in enumerate(e)) % 5 == 0
        )
        assert count == 12
        assert weight_space_dim(desc, 5, 0) == 12

    @settings(max_examples=25, deadline=None)
    @given(m=st.integers(min_value=0, max_value=9))
    def test_weights_partition_total(self, m):
        desc = fixtures.z4_descriptor()
        total = weight_space_dim(desc, m, "all")
        assert total == sum(weight_space_dim(desc, m, w) for w in range(4))
        assert total == len(enumerate_monomials(desc, m))
