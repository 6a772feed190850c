import json

import numpy as np
import pytest

from finalg.groups import make_cyclic, make_dihedral, make_quaternion8
from finalg.groupring import GroupRing
from finalg.properties import (
    FAILS,
    HOLDS,
    UNKNOWN,
    Budget,
    check_duo,
    check_reduced,
    check_reversible,
    check_si,
    check_symmetric,
    check_two_primal,
    evaluate_all_properties,
    implication_audit,
    mirror_duo_witness,
    replay_witness,
)
from finalg.rings import direct_sum, make_gf, make_matrix_ring, make_zmod


def brute_reversible(r):
    """Raw-definition pair scan; first witness in lexicographic order."""
    for a in range(r.size):
        for b in range(r.size):
            if r.mul(a, b) == r.zero and r.mul(b, a) != r.zero:
                return FAILS, (a, b)
    return HOLDS, None


def brute_symmetric(r):
    for a in range(r.size):
        for b in range(r.size):
            ab = r.mul(a, b)
            for c in range(r.size):
                if r.mul(ab, c) == r.zero and r.mul(r.mul(a, c), b) != r.zero:
                    return FAILS, (a, b, c)
    return HOLDS, None


def brute_si(r):
    for a in range(r.size):
        for x in range(r.size):
            ax = r.mul(a, x)
            for b in range(r.size):
                if r.mul(a, b) == r.zero and r.mul(ax, b) != r.zero:
                    return FAILS, (a, x, b)
    return HOLDS, None


def brute_duo(r, side):
    for a in range(r.size):
        principal = {r.mul(a, t) if side == "right" else r.mul(t, a) for t in range(r.size)}
        for x in range(r.size):
            v = r.mul(x, a) if side == "right" else r.mul(a, x)
            if v not in principal:
                return FAILS, (a, x)
    return HOLDS, None


class TestAgainstBruteForce:
    """Full-definition loops versus the optimised checkers, on small carriers."""

    @pytest.fixture()
    def small_rings(self, m2gf2, f2d3):
        return [m2gf2, f2d3, make_zmod(9), direct_sum([make_matrix_ring(make_gf(2), 2), make_gf(3)])]

    def test_reversible_matches(self, small_rings):
        for r in small_rings:
            status, witness = brute_reversible(r)
            verdict = check_reversible(r)
            assert verdict.status == status, r.label
            if status == FAILS and not r.commutative:
                assert verdict.witness == witness  # deterministic lex-first

    def test_symmetric_matches(self, small_rings):
        for r in small_rings:
            if r.size > 100:
                continue  # cubic brute force
            status, witness = brute_symmetric(r)
            verdict = check_symmetric(r)
            assert verdict.status == status, r.label
            if status == FAILS:
                assert verdict.witness == witness

    def test_si_matches(self, small_rings):
        for r in small_rings:
            if r.size > 100:
                continue
            status, witness = brute_si(r)
            verdict = check_si(r)
            assert verdict.status == status, r.label
            if status == FAILS:
                assert verdict.witness == witness

    def test_duo_matches(self, small_rings):
        for r in small_rings:
            for side in ("left", "right"):
                status, witness = brute_duo(r, side)
                verdict = check_duo(r, side)
                assert verdict.status == status, (r.label, side)
                if status == FAILS and not r.commutative:
                    assert verdict.witness == witness


class TestReduced:
    def test_field_holds(self):
        assert check_reduced(make_gf(2, 2)).status == HOLDS

    def test_z4_fails_with_two(self):
        v = check_reduced(make_zmod(4))
        assert v.status == FAILS and v.witness == (2,)

    def test_f2q8_fails_nilpotent_witness(self, f2q8):
        v = check_reduced(f2q8)
        assert v.status == FAILS
        assert replay_witness(f2q8, "reduced", v.witness)
        # classic square-zero element: (1 + x^2)^2 = 0 in characteristic 2
        sq_zero = f2q8.from_literal("1 + x^2")
        assert (sq_zero * sq_zero).is_zero


class TestReversible:
    def test_f2q8_holds_certified(self, f2q8):
        v = check_reversible(f2q8)
        assert v.status == HOLDS and v.certified

    def test_commutative_short_circuit(self):
        v = check_reversible(make_zmod(6))
        assert v.status == HOLDS and v.work == 0 and "commutative" in v.notes

    def test_z3q8_fails_with_replayable_witness(self, q8):
        r = GroupRing(make_zmod(3), q8)
        v = check_reversible(r)
        assert v.status == FAILS
        assert replay_witness(r, "reversible", v.witness)

    def test_dihedral_group_rings_fail(self, f2d3):
        v = check_reversible(f2d3)
        assert v.status == FAILS
        a, b = v.witness
        assert f2d3.mul(a, b) == 0 and f2d3.mul(b, a) != 0

    def test_budget_exhaustion_returns_unknown(self, f3q8):
        v = check_reversible(f3q8, Budget(max_pairs=100))
        assert v.status == UNKNOWN and not v.certified

    def test_rand_mode_reproducible(self, q8):
        r = GroupRing(make_zmod(4), q8)
        b = Budget(mode="rand", seed=2)
        v1 = check_reversible(r, b)
        v2 = check_reversible(r, b)
        assert v1.status == FAILS
        assert v1.witness == v2.witness and v1.work == v2.work

    def test_rand_mode_never_claims_holds_without_coverage(self, q8):
        r = GroupRing(make_zmod(2), q8)
        v = check_reversible(r, Budget(mode="rand", seed=1, max_pairs=100))
        assert v.status in (FAILS, UNKNOWN)


class TestSymmetric:
    def test_f2q8_fails(self, f2q8):
        v = check_symmetric(f2q8)
        assert v.status == FAILS
        assert replay_witness(f2q8, "symmetric", v.witness)

    def test_f3q8_fails(self, f3q8):
        v = check_symmetric(f3q8)
        assert v.status == FAILS
        assert replay_witness(f3q8, "symmetric", v.witness)

    def test_commutative_short_circuit(self, z3c4):
        assert check_symmetric(z3c4).status == HOLDS


class TestSI:
    def test_f2q8_holds(self, f2q8):
        v = check_si(f2q8)
        assert v.status == HOLDS and v.certified

    def test_f3q8_fails(self, f3q8):
        v = check_si(f3q8)
        assert v.status == FAILS
        assert replay_witness(f3q8, "si", v.witness)

    def test_division_ring_holds(self):
        assert check_si(make_gf(3)).status == HOLDS


class TestDuo:
    def test_field_holds_both_sides(self):
        gf4 = make_gf(2, 2)
        assert check_duo(gf4, "both").status == HOLDS

    def test_m2_fails_first_row_style(self, m2gf2):
        v = check_duo(m2gf2, "right")
        assert v.status == FAILS
        a, x = v.witness
        assert a == 1  # E11: the principal right ideal is the first-row set
        assert replay_witness(m2gf2, "duo-right", v.witness)

    def test_f2q8_sides_agree(self, f2q8):
        assert check_duo(f2q8, "left").status == check_duo(f2q8, "right").status == HOLDS

    def test_f3q8_sides_agree_and_mirror(self, f3q8):
        left = check_duo(f3q8, "left")
        right = check_duo(f3q8, "right")
        assert left.status == right.status == FAILS
        a, x = mirror_duo_witness(f3q8, right)
        assert replay_witness(f3q8, "duo-left", (a, x))
        a, x = mirror_duo_witness(f3q8, left)
        assert replay_witness(f3q8, "duo-right", (a, x))


class TestTwoPrimal:
    def test_z8_holds(self):
        assert check_two_primal(make_zmod(8)).status == HOLDS

    def test_m2_fails_on_unit_sum(self, m2gf2):
        v = check_two_primal(m2gf2)
        assert v.status == FAILS
        assert replay_witness(m2gf2, "2primal", v.witness, v.notes)
        u, w = v.witness
        s = m2gf2.add(u, w)
        assert m2gf2.mul(s, s) == m2gf2.one  # E12 + E21 squares to the identity

    def test_f2q8_holds(self, f2q8):
        assert check_two_primal(f2q8).status == HOLDS


class TestWitnessContract:
    def test_every_fails_witness_replays(self, m2gf2, f2q8, f2d3, f3q8):
        for r in (m2gf2, f2q8, f2d3, f3q8, make_zmod(4), make_zmod(12)):
            for prop, v in evaluate_all_properties(r).items():
                if v.status == FAILS:
                    assert replay_witness(r, v.property, v.witness, v.notes), (r.label, prop)

    def test_verdict_json_schema(self, m2gf2):
        v = check_reversible(m2gf2)
        payload = v.to_json()
        assert payload["ring"] == "M2(GF(2))"
        assert payload["property"] == "reversible"
        assert payload["status"] == FAILS
        assert set(payload) >= {"ring", "property", "status", "certified", "work", "mode", "witness"}
        json.dumps(payload)  # serialisable

    def test_rand_verdict_records_seed(self, q8):
        r = GroupRing(make_zmod(4), q8)
        v = check_reversible(r, Budget(mode="rand", seed=2))
        assert v.to_json()["seed"] == 2

    def test_determinism_across_runs(self, f3q8):
        v1 = check_symmetric(f3q8)
        v2 = check_symmetric(f3q8)
        assert v1.to_json() == v2.to_json()


class TestImplicationAudit:
    def test_no_violations_on_mixed_corpus(self, m2gf2, f2q8):
        corpus = [make_zmod(n) for n in range(2, 8)] + [m2gf2, f2q8, make_gf(2, 2)]
        report = implication_audit(corpus)
        assert report.ok
        assert not report.violations

    def test_f2q8_pattern(self, f2q8):
        verdicts = evaluate_all_properties(f2q8)
        assert verdicts["reversible"].status == HOLDS
        assert verdicts["si"].status == HOLDS
        assert verdicts["2primal"].status == HOLDS
        assert verdicts["symmetric"].status == FAILS

    def test_render_table_mentions_every_ring(self, f2q8):
        report = implication_audit([make_zmod(4), f2q8])
        text = report.render_table()
        assert "Z/4" in text and "GF(2)[Q8]" in text
        assert "no violated implications" in text

    def test_unknown_marks_edge_skipped(self, f3q8):
        report = implication_audit([f3q8], Budget(max_pairs=50, max_triples=50))
        assert not report.violations
        assert report.edges_skipped
