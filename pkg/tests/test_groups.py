import numpy as np
import pytest

from finalg.groups import (
    FiniteGroup,
    GroupConstructionError,
    GroupOrderCapError,
    NotASubgroupError,
    direct_product,
    make_cyclic,
    make_dihedral,
    make_quaternion8,
)


def brute_is_normal(g, subset):
    """Conjugation triple loop, independent of FiniteGroup.is_normal."""
    s = set(subset)
    for a in range(g.order):
        ainv = g.inv(a)
        for x in s:
            if g.mul(g.mul(a, x), ainv) not in s:
                return False
    return True


def enumerate_subgroups(g):
    """All subgroups by iterative closure, workable for order <= 24."""
    def closure(seed):
        members = {0}
        frontier = list(seed)
        while frontier:
            v = frontier.pop()
            if v in members:
                continue
            members.add(v)
            new = {g.inv(v)}
            for w in list(members):
                new.add(g.mul(v, w))
                new.add(g.mul(w, v))
            frontier.extend(new - members)
        return frozenset(members)

    subgroups = {frozenset([0])}
    grew = True
    while grew:
        grew = False
        for h in list(subgroups):
            for e in range(g.order):
                if e in h:
                    continue
                bigger = closure(h | {e})
                if bigger not in subgroups:
                    subgroups.add(bigger)
                    grew = True
    return subgroups


class TestCyclic:
    def test_trivial_group(self):
        c1 = make_cyclic(1)
        assert c1.order == 1
        assert c1.element_order(0) == 1

    def test_c4_orders(self):
        c4 = make_cyclic(4)
        assert c4.element_order(1) == 4
        assert c4.element_order(2) == 2

    def test_c3_prime_order(self):
        c3 = make_cyclic(3)
        assert all(c3.element_order(e) == 3 for e in range(1, 3))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            make_cyclic(0)


class TestQuaternion:
    def test_order_and_unique_involution(self, q8):
        assert q8.order == 8
        assert [e for e in range(8) if q8.element_order(e) == 2] == [2]  # x^2 only

    def test_defining_relation_yx(self, q8):
        x, y = q8.generators["x"], q8.generators["y"]
        x3 = q8.mul(q8.mul(x, x), x)
        assert q8.mul(y, x) == q8.mul(x3, y)

    def test_x_has_order_four(self, q8):
        assert q8.element_order(q8.generators["x"]) == 4

    def test_every_cyclic_subgroup_normal(self, q8):
        for s in q8.cyclic_subgroups():
            assert brute_is_normal(q8, s)
        assert q8.is_hamiltonian()


class TestDihedral:
    def test_d3_is_s3(self, d3):
        assert d3.order == 6
        assert not d3.is_abelian

    def test_reflection_subgroup_not_normal(self, d3):
        s = d3.generators["s"]
        refl = d3.cyclic_subgroup(s)
        assert not brute_is_normal(d3, refl)
        assert not d3.is_normal(refl)
        assert not d3.is_hamiltonian()

    def test_d4_element_order_census(self):
        d4 = make_dihedral(4)
        assert d4.order == 8
        assert sum(1 for e in range(8) if d4.element_order(e) == 2) == 5

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            make_dihedral(2)


class TestDirectProduct:
    def test_klein_four(self):
        c2 = make_cyclic(2)
        v4 = direct_product(c2, c2)
        assert v4.order == 4
        assert v4.is_abelian
        assert all(v4.element_order(e) <= 2 for e in range(4))

    def test_q8_times_c3_hamiltonian(self, q8):
        g = direct_product(q8, make_cyclic(3))
        assert g.order == 24
        assert g.is_hamiltonian()

    def test_identity_padding(self, q8):
        padded = direct_product(make_cyclic(1), q8)
        assert np.array_equal(padded.mul_table, q8.mul_table)

    def test_order_cap(self, q8):
        with pytest.raises(GroupOrderCapError):
            direct_product(q8, make_cyclic(64), order_cap=256)

    def test_abelian_iff_both(self, q8):
        assert not direct_product(q8, make_cyclic(2)).is_abelian
        assert direct_product(make_cyclic(2), make_cyclic(3)).is_abelian


class TestAxioms:
    def test_lagrange_exhaustive(self, q8, d3):
        for g in (q8, d3, make_cyclic(12), make_dihedral(4), direct_product(q8, make_cyclic(3))):
            for e in range(g.order):
                assert g.order % g.element_order(e) == 0

    def test_bad_table_rejected(self):
        table = [[0, 1], [1, 1]]  # not a Latin square
        with pytest.raises(GroupConstructionError):
            FiniteGroup(table, "bad", ("1", "a"))

    def test_non_associative_rejected(self):
        # Latin square with two-sided identity that is not a group (order 5 loop)
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 3, 4, 0, 1],
            [3, 4, 1, 2, 0],
            [4, 2, 0, 1, 3],
        ]
        with pytest.raises(GroupConstructionError):
            FiniteGroup(table, "loop5", tuple("eabcd"))

    def test_is_normal_rejects_non_subgroup(self, q8):
        with pytest.raises(NotASubgroupError):
            q8.is_normal({1, 2})


class TestHamiltonianViaSubgroupEnumeration:
    @pytest.mark.parametrize("maker", [
        lambda: make_quaternion8(),
        lambda: make_dihedral(3),
        lambda: make_dihedral(4),
        lambda: make_cyclic(12),
        lambda: direct_product(make_quaternion8(), make_cyclic(2)),
        lambda: direct_product(make_quaternion8(), make_cyclic(3)),
    ])
    def test_all_cyclic_normal_iff_all_subgroups_normal(self, maker):
        g = maker()
        assert g.order <= 24
        cyclic_all_normal = all(g.is_normal(s) for s in g.cyclic_subgroups())
        all_normal = all(brute_is_normal(g, h) for h in enumerate_subgroups(g))
        assert cyclic_all_normal == all_normal
