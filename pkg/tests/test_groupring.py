import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import conv_oracle

from finalg.groups import make_cyclic, make_quaternion8
from finalg.groupring import ElementParseError, GroupRing, right_annihilator
from finalg.rings import make_gf, make_matrix_ring, make_zmod


class TestConstruction:
    def test_size_and_characteristic(self, f2q8, f3q8, z3c4):
        assert f2q8.size == 256 and f2q8.characteristic == 2
        assert f3q8.size == 6561 and f3q8.characteristic == 3
        assert z3c4.size == 81 and z3c4.characteristic == 3

    def test_commutative_iff_group_abelian(self, f2q8, z3c4):
        assert not f2q8.commutative
        assert z3c4.commutative

    def test_noncommutative_base_rejected(self, q8, m2gf2):
        with pytest.raises(ValueError):
            GroupRing(m2gf2, q8)

    def test_characteristic_equals_base_for_corpus(self, q8):
        for base in (make_zmod(4), make_zmod(6), make_gf(2, 2)):
            assert GroupRing(base, make_cyclic(2)).characteristic == base.characteristic
        assert GroupRing(make_zmod(6), q8).characteristic == 6


class TestMultiplication:
    def test_basis_elements_multiply_like_the_group(self, f2q8, q8):
        for i in range(8):
            for j in range(8):
                prod = f2q8.basis_element(i) * f2q8.basis_element(j)
                assert prod == f2q8.basis_element(q8.mul(i, j))

    def test_identity_law(self, f3q8):
        rng = np.random.default_rng(5)
        for idx in rng.integers(0, f3q8.size, size=20):
            a = f3q8.element_from_index(int(idx))
            assert a * f3q8.one_element == a
            assert f3q8.one_element * a == a

    def test_cyclic_sum_annihilates_one_minus_x(self, f2q8):
        a = f2q8.from_literal("1 + x")
        b = f2q8.from_literal("1 + x + x^2 + x^3")
        assert (a * b).is_zero

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 6560), st.integers(0, 6560))
    def test_convolution_matches_oracle(self, ai, bi):
        gr = GroupRing(make_gf(3), make_quaternion8())
        a, b = gr.element_from_index(ai), gr.element_from_index(bi)
        expect = conv_oracle(gr.group, gr.base, a.coeffs, b.coeffs)
        assert np.array_equal((a * b).coeffs, expect)


class TestInvolution:
    def test_basis_goes_to_inverse(self, f2q8, q8):
        for g in range(8):
            assert f2q8.basis_element(g).involution() == f2q8.basis_element(q8.inv(g))

    def test_involution_is_involutive(self, f3q8):
        rng = np.random.default_rng(11)
        for idx in rng.integers(0, f3q8.size, size=50):
            a = f3q8.element_from_index(int(idx))
            assert a.involution().involution() == a

    def test_anti_automorphism_on_seeded_pairs(self, f2q8):
        rng = np.random.default_rng(0xA17)
        for _ in range(100):
            a = f2q8.element_from_index(int(rng.integers(0, f2q8.size)))
            b = f2q8.element_from_index(int(rng.integers(0, f2q8.size)))
            lhs = (a * b).involution()
            rhs = b.involution() * a.involution()
            assert lhs == rhs

    def test_involution_additive(self, f3q8):
        rng = np.random.default_rng(0xADD)
        for _ in range(50):
            a = f3q8.element_from_index(int(rng.integers(0, f3q8.size)))
            b = f3q8.element_from_index(int(rng.integers(0, f3q8.size)))
            assert (a + b).involution() == a.involution() + b.involution()


class TestTraceAndAugmentation:
    def test_trace_picks_identity_coefficient(self, f2q8):
        assert f2q8.one_element.trace() == 1
        for g in range(1, 8):
            assert f2q8.basis_element(g).trace() == 0

    def test_trace_symmetry_exhaustive_z3c4(self, z3c4):
        idx = np.arange(z3c4.size, dtype=np.int64)
        rows = idx.repeat(z3c4.size)
        cols = np.tile(idx, z3c4.size)
        ab = z3c4.mul_arr(rows, cols)
        ba = z3c4.mul_arr(cols, rows)
        # trace = digit 0 of the index
        assert np.array_equal(ab % 3, ba % 3)

    def test_trace_symmetry_sampled_f3q8(self, f3q8):
        rng = np.random.default_rng(0x7ACE)
        for _ in range(200):
            a = f3q8.element_from_index(int(rng.integers(0, f3q8.size)))
            b = f3q8.element_from_index(int(rng.integers(0, f3q8.size)))
            assert (a * b).trace() == (b * a).trace()

    def test_trace_recovers_coefficients(self, f2q8, q8):
        rng = np.random.default_rng(0xC0EF)
        for _ in range(100):
            w = f2q8.element_from_index(int(rng.integers(0, f2q8.size)))
            for g in range(8):
                ginv = f2q8.basis_element(q8.inv(g))
                assert (ginv * w).trace() == int(w.coeffs[g])

    def test_augmentation_of_basis_and_differences(self, f2q8):
        assert f2q8.basis_element(3).augmentation() == 1
        assert f2q8.from_literal("1 - x").augmentation() == 0

    def test_augmentation_multiplicative(self, f3q8):
        rng = np.random.default_rng(0xAB6)
        for _ in range(100):
            a = f3q8.element_from_index(int(rng.integers(0, f3q8.size)))
            b = f3q8.element_from_index(int(rng.integers(0, f3q8.size)))
            assert (a * b).augmentation() == f3q8.base.mul(a.augmentation(), b.augmentation())


class TestLeftMulMatrix:
    def test_identity_gives_identity_matrix(self, f3q8):
        lm = f3q8.one_element.left_matrix()
        assert np.array_equal(lm, np.eye(8, dtype=np.int64))

    def test_basis_gives_permutation(self, f2q8):
        lm = f2q8.basis_element(4).left_matrix()  # y
        assert np.array_equal(np.sort(lm.sum(axis=0)), np.ones(8, dtype=np.int64) * 1)
        assert np.array_equal(lm @ np.ones(8, dtype=np.int64) % 2, np.ones(8, dtype=np.int64))

    def test_matrix_action_matches_multiplication(self, f3q8):
        rng = np.random.default_rng(0x117)
        for _ in range(100):
            a = f3q8.element_from_index(int(rng.integers(0, f3q8.size)))
            b = f3q8.element_from_index(int(rng.integers(0, f3q8.size)))
            via_matrix = (a.left_matrix() @ b.coeffs) % 3
            assert np.array_equal(via_matrix, (a * b).coeffs)


class TestRightAnnihilator:
    def test_unit_has_trivial_annihilator(self, f2q8):
        ann = right_annihilator(f2q8.basis_element(1))
        assert ann.complete and ann.count == 1
        assert ann.indices().tolist() == [0]

    def test_one_plus_x_annihilator_contains_cyclic_sum(self, f2q8):
        a = f2q8.from_literal("1 + x")
        s = f2q8.from_literal("1 + x + x^2 + x^3")
        ann = right_annihilator(a)
        assert ann.complete
        assert s.index in ann.indices().tolist()
        assert ann.contains(s.index)

    def test_zero_annihilates_everything(self, f2q8):
        ann = right_annihilator(f2q8.zero_element)
        assert ann.complete and ann.count == f2q8.size

    def test_field_basis_matches_brute_scan(self, f2q8):
        rng = np.random.default_rng(0xA22)
        everyone = np.arange(f2q8.size, dtype=np.int64)
        for _ in range(10):
            aidx = int(rng.integers(1, f2q8.size))
            a = f2q8.element_from_index(aidx)
            products = f2q8.mul_arr(np.full(f2q8.size, aidx, dtype=np.int64), everyone)
            brute = set(everyone[products == 0].tolist())
            assert set(right_annihilator(a).indices().tolist()) == brute

    def test_composite_base_scan(self):
        z4c2 = GroupRing(make_zmod(4), make_cyclic(2))
        a = z4c2.from_literal("2 + 2*g")
        ann = right_annihilator(a)
        assert ann.complete
        everyone = np.arange(z4c2.size, dtype=np.int64)
        products = z4c2.mul_arr(np.full(z4c2.size, a.index, dtype=np.int64), everyone)
        assert set(ann.indices().tolist()) == set(everyone[products == z4c2.zero].tolist())

    def test_budget_flags_incomplete(self):
        z6q8 = GroupRing(make_zmod(6), make_quaternion8())
        ann = right_annihilator(z6q8.zero_element, max_pairs=1 << 16)
        assert not ann.complete


class TestLiteralsAndSerialization:
    def test_round_trip_rendering(self, f3q8):
        rng = np.random.default_rng(0x21)
        for idx in rng.integers(0, f3q8.size, size=40):
            elem = f3q8.element_from_index(int(idx))
            assert f3q8.from_literal(elem.render()) == elem

    def test_negative_coefficients(self, f3q8):
        elem = f3q8.from_literal("2 - x")
        assert elem == f3q8.from_literal("2 + 2*x")

    def test_monomial_powers(self, f2q8):
        assert f2q8.from_literal("x^2*y") == f2q8.basis_element(6)
        assert f2q8.from_literal("x^-1") == f2q8.basis_element(3)

    def test_unknown_name_rejected(self, f2q8):
        with pytest.raises(ElementParseError):
            f2q8.from_literal("1 + z")

    def test_json_payload(self, f2q8):
        elem = f2q8.from_literal("1 + x*y")
        payload = elem.to_json()
        assert payload == {"ring": "GF(2)", "group": "Q8", "coeffs": [1, 0, 0, 0, 0, 1, 0, 0]}

    def test_parent_mismatch_rejected(self, f2q8, f3q8):
        with pytest.raises(ValueError):
            f2q8.one_element * f3q8.one_element


class TestElementArithmetic:
    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 255))
    def test_ring_axioms_on_elements(self, ai, bi, ci):
        gr = GroupRing(make_gf(2), make_quaternion8())
        a, b, c = (gr.element_from_index(i) for i in (ai, bi, ci))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == gr.zero_element
