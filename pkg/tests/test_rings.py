import numpy as np
import pytest

from conftest import brute_nilpotents, brute_units

from finalg.groups import make_cyclic
from finalg.groupring import GroupRing
from finalg.rings import (
    RingCapError,
    center,
    direct_sum,
    is_division_ring,
    is_semisimple,
    jacobson_radical,
    make_gf,
    make_matrix_ring,
    make_zmod,
    nilpotents,
    two_sided_closure,
    units,
    validate_ideal,
)

E11, E12, E21, E22 = 1, 2, 4, 8  # digit encodings in M2(GF(2))


class TestZmod:
    def test_z2_is_field(self):
        z2 = make_zmod(2)
        assert z2.is_field and z2.characteristic == 2

    def test_z4_nilpotents(self):
        assert nilpotents(make_zmod(4)).tolist() == [0, 2]

    def test_z6_reduced(self):
        z6 = make_zmod(6)
        assert z6.characteristic == 6
        assert nilpotents(z6).tolist() == [0]

    def test_rejects_small_modulus(self):
        with pytest.raises(ValueError):
            make_zmod(1)


class TestGF:
    def test_gf2_matches_z2(self):
        gf2 = make_gf(2)
        z2 = make_zmod(2)
        for a in range(2):
            for b in range(2):
                assert gf2.add(a, b) == z2.add(a, b)
                assert gf2.mul(a, b) == z2.mul(a, b)

    def test_gf4_every_nonzero_invertible(self):
        gf4 = make_gf(2, 2, modulus=[1, 1, 1])
        assert brute_units(gf4) == {1, 2, 3}
        assert is_division_ring(gf4)

    def test_gf3(self):
        gf3 = make_gf(3)
        assert gf3.size == 3 and gf3.is_field

    def test_reducible_modulus_rejected(self):
        with pytest.raises(ValueError):
            make_gf(2, 2, modulus=[1, 0, 1])  # t^2 + 1 = (t+1)^2 over GF(2)

    def test_nonprime_rejected(self):
        with pytest.raises(ValueError):
            make_gf(4, 1)

    def test_default_moduli_up_to_k4(self):
        for p, k in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)]:
            f = make_gf(p, k)
            assert f.size == p**k
            assert is_division_ring(f)


class TestMatrixRing:
    def test_m1_isomorphic_to_base(self):
        m1 = make_matrix_ring(make_gf(3), 1)
        gf3 = make_gf(3)
        for a in range(3):
            for b in range(3):
                assert m1.mul(a, b) == gf3.mul(a, b)

    def test_m2_not_commutative(self, m2gf2):
        assert m2gf2.size == 16
        assert not m2gf2.commutative
        assert m2gf2.mul(E12, E21) != m2gf2.mul(E21, E12)

    def test_first_row_is_right_ideal_only(self, m2gf2):
        first_row = [0, E11, E12, E11 + E12]
        ok_right, _, _ = validate_ideal(m2gf2, first_row, "right")
        ok_left, reason, witness = validate_ideal(m2gf2, first_row, "left")
        assert ok_right
        assert not ok_left and reason == "left absorption fails" and witness is not None

    def test_noncommutative_base_rejected(self, m2gf2):
        with pytest.raises(ValueError):
            make_matrix_ring(m2gf2, 2)

    def test_size_cap(self):
        with pytest.raises(RingCapError):
            make_matrix_ring(make_zmod(17), 3, size_cap=1 << 16)


class TestDirectSum:
    def test_crt_shape(self):
        ds = direct_sum([make_zmod(2), make_zmod(3)])
        assert ds.size == 6 and ds.characteristic == 6

    def test_two_copies_of_gf2(self):
        ds = direct_sum([make_gf(2), make_gf(2)])
        assert ds.one == 3  # (1, 1)
        idem = [e for e in range(4) if ds.mul(e, e) == e]
        assert idem == [0, 1, 2, 3]

    def test_single_part_identity_case(self):
        ds = direct_sum([make_zmod(5)])
        z5 = make_zmod(5)
        for a in range(5):
            for b in range(5):
                assert ds.mul(a, b) == z5.mul(a, b)


class TestStructuralQueries:
    def test_units(self):
        assert units(make_zmod(4)).tolist() == [1, 3]
        assert units(make_gf(2, 2)).size == 3
        assert units(make_zmod(6)).tolist() == [1, 5]

    def test_units_against_brute(self, m2gf2):
        for r in (make_zmod(8), make_gf(3, 2), m2gf2, direct_sum([make_zmod(4), make_gf(3)])):
            assert set(units(r).tolist()) == brute_units(r)

    def test_units_closed_under_mul(self, m2gf2):
        u = units(m2gf2)
        uset = set(u.tolist())
        for a in u:
            for b in u:
                assert m2gf2.mul(int(a), int(b)) in uset

    def test_nilpotents(self, m2gf2):
        assert nilpotents(make_gf(5)).tolist() == [0]
        assert nilpotents(make_zmod(8)).tolist() == [0, 2, 4, 6]
        assert E12 in nilpotents(m2gf2).tolist()

    def test_nilpotents_against_brute(self, m2gf2):
        for r in (make_zmod(12), m2gf2, direct_sum([make_zmod(4), make_zmod(9)])):
            assert set(nilpotents(r).tolist()) == brute_nilpotents(r)

    def test_radical_small_rings(self):
        assert jacobson_radical(make_gf(7)).carrier == {0}
        assert jacobson_radical(make_zmod(4)).carrier == {0, 2}

    def test_radical_f2q8_matches_brute_quasi_regularity(self, f2q8):
        r = f2q8
        unit_set = brute_units(r)
        brute = set()
        for a in range(r.size):
            if all(r.sub(r.one, r.mul(x, a)) in unit_set for x in range(r.size)):
                brute.add(a)
        assert len(brute) == 128
        assert set(jacobson_radical(r).carrier) == brute

    def test_radical_is_nil_two_sided(self, f2q8):
        for r in (make_zmod(12), f2q8, direct_sum([make_zmod(4), make_gf(3)])):
            rad = jacobson_radical(r)
            assert rad.side == "two-sided"
            nil = set(nilpotents(r).tolist())
            assert set(rad.carrier) <= nil
            ok, _, _ = validate_ideal(r, rad.carrier, "two-sided")
            assert ok

    def test_nilpotents_inside_radical_commutative(self):
        for r in (make_zmod(4), make_zmod(12), direct_sum([make_zmod(8), make_zmod(9)])):
            assert set(nilpotents(r).tolist()) <= set(jacobson_radical(r).carrier)

    def test_semisimple(self, f3q8):
        assert is_semisimple(make_gf(3))
        assert not is_semisimple(make_zmod(4))
        assert is_semisimple(f3q8)

    def test_division_ring(self, m2gf2):
        assert is_division_ring(make_gf(2, 2))
        assert not is_division_ring(make_zmod(6))
        assert not is_division_ring(m2gf2)

    def test_center(self, m2gf2, f3q8):
        z6 = make_zmod(6)
        assert center(z6).size == 6
        assert center(m2gf2).tolist() == [0, m2gf2.one]
        assert center(f3q8).size == 243

    def test_center_f3q8_matches_brute_basis_commutation(self, f3q8, q8):
        from conftest import conv_oracle

        base = f3q8.base
        brute = []
        for idx in range(0, f3q8.size, 29):  # deterministic stride sample
            coeffs = f3q8.decode(idx)
            central = True
            for g in range(q8.order):
                gv = np.zeros(q8.order, dtype=np.int64)
                gv[g] = base.one
                if not np.array_equal(conv_oracle(q8, base, coeffs, gv), conv_oracle(q8, base, gv, coeffs)):
                    central = False
                    break
            if central:
                brute.append(idx)
        mask = f3q8.center_mask()
        assert brute == [i for i in range(0, f3q8.size, 29) if mask[i]]

    def test_center_is_subring(self, m2gf2):
        z = center(m2gf2).tolist()
        for a in z:
            for b in z:
                assert m2gf2.add(a, b) in z
                assert m2gf2.mul(a, b) in z

    def test_two_sided_closure(self, m2gf2):
        # any nonzero matrix generates everything: M2 over a field is simple
        assert len(two_sided_closure(m2gf2, [E12])) == 16
