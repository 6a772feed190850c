import itertools

import numpy as np
import pytest

from finalg.linalg import (
    batched_invertible_mod_p,
    nullspace_field,
    nullspace_mod_p,
    rref_mod_p,
    span_vectors_mod_p,
)
from finalg.rings import make_gf


def brute_kernel(mat, p):
    n = mat.shape[1]
    out = []
    for vec in itertools.product(range(p), repeat=n):
        if not np.any((mat @ np.array(vec)) % p):
            out.append(vec)
    return set(out)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_nullspace_matches_brute_kernel(p):
    rng = np.random.default_rng(42 + p)
    for _ in range(25):
        mat = rng.integers(0, p, size=(4, 4))
        basis = nullspace_mod_p(mat, p)
        span = {tuple(int(v) for v in row) for row in span_vectors_mod_p(basis, p)}
        assert span == brute_kernel(mat, p)


def test_rref_pivots():
    mat = np.array([[2, 4], [1, 2]])
    rref, pivots = rref_mod_p(mat, 5)
    assert pivots == [0]
    assert rref[0].tolist() == [1, 2]


def test_span_of_empty_basis_is_zero():
    basis = np.zeros((0, 3), dtype=np.int64)
    assert span_vectors_mod_p(basis, 3).tolist() == [[0, 0, 0]]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_batched_invertibility_matches_nullity(p):
    rng = np.random.default_rng(13 * p)
    mats = rng.integers(0, p, size=(200, 6, 6))
    got = batched_invertible_mod_p(mats, p)
    for k in range(200):
        expect = len(nullspace_mod_p(mats[k], p)) == 0
        assert bool(got[k]) == expect


def test_nullspace_field_gf4_matches_scan():
    gf4 = make_gf(2, 2)
    rng = np.random.default_rng(7)
    for _ in range(10):
        mat = rng.integers(0, 4, size=(3, 3))
        basis = nullspace_field([[int(v) for v in row] for row in mat], gf4)
        # independent scan over all 64 vectors using field arithmetic
        brute = set()
        for vec in itertools.product(range(4), repeat=3):
            img = []
            for row in mat:
                acc = gf4.zero
                for m, v in zip(row, vec):
                    acc = gf4.add(acc, gf4.mul(int(m), v))
                img.append(acc)
            if all(v == gf4.zero for v in img):
                brute.add(vec)
        # expand the basis over the field
        span = {(gf4.zero,) * 3}
        for row in basis:
            span = {
                tuple(gf4.add(v, gf4.mul(c, r)) for v, r in zip(vec, row))
                for vec in span
                for c in range(4)
            }
        assert span == brute
