import numpy as np
import pytest

from finalg.groups import make_cyclic, make_dihedral, make_quaternion8
from finalg.groupring import GroupRing
from finalg.rings import make_gf, make_matrix_ring, make_zmod


@pytest.fixture(scope="session")
def q8():
    return make_quaternion8()


@pytest.fixture(scope="session")
def d3():
    return make_dihedral(3)


@pytest.fixture(scope="session")
def f2q8(q8):
    return GroupRing(make_gf(2), q8)


@pytest.fixture(scope="session")
def f3q8(q8):
    return GroupRing(make_gf(3), q8)


@pytest.fixture(scope="session")
def f2d3(d3):
    return GroupRing(make_gf(2), d3)


@pytest.fixture(scope="session")
def m2gf2():
    return make_matrix_ring(make_gf(2), 2)


@pytest.fixture(scope="session")
def z3c4():
    return GroupRing(make_zmod(3), make_cyclic(4))


def conv_oracle(group, base, ca, cb):
    """Independent convolution: plain dict arithmetic, no matrix machinery."""
    out = [base.zero] * group.order
    for i in range(group.order):
        for j in range(group.order):
            k = group.mul(i, j)
            out[k] = base.add(out[k], base.mul(int(ca[i]), int(cb[j])))
    return np.array(out, dtype=np.int64)


def brute_units(r):
    """Scan all pairs for two-sided inverses."""
    out = set()
    for a in range(r.size):
        for b in range(r.size):
            if r.mul(a, b) == r.one and r.mul(b, a) == r.one:
                out.add(a)
                break
    return out


def brute_nilpotents(r):
    """Power every element up to the carrier size."""
    out = set()
    for a in range(r.size):
        cur = a
        for _ in range(r.size):
            if cur == r.zero:
                out.add(a)
                break
            cur = r.mul(cur, a)
    return out
