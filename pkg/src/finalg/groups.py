"""Finite groups presented by explicit multiplication tables.

Every group here is a dense index structure: elements are 0..order-1, the
identity is always index 0, and the whole group law is an order x order
table.  Constructors validate the group axioms at build time (exhaustively
up to order 64, seeded-random sampling above).
"""

from __future__ import annotations

import numpy as np

DEFAULT_ORDER_CAP = 256

_ASSOC_EXHAUSTIVE_LIMIT = 64
_ASSOC_SAMPLES = 10_000
_ASSOC_SEED = 0x5EED


class GroupConstructionError(ValueError):
    """A multiplication table failed the group axioms."""


class GroupOrderCapError(ValueError):
    """A product group would exceed the configured order cap."""


class NotASubgroupError(ValueError):
    """A subset handed to a normality test is not a subgroup."""


class FiniteGroup:
    """A finite group given by its multiplication table.

    Attributes:
        order: number of elements.
        mul_table: order x order array, ``mul_table[a, b]`` = index of a*b.
        identity: index of the neutral element (always 0).
        inv_table: ``inv_table[a]`` = index of a^-1.
        label: short name used by the expression mini-language.
        element_names: printable name per element.
        generators: name -> index map for the named generators, used by
            the element-literal parser.
    """

    def __init__(
        self,
        mul_table,
        label: str,
        element_names: tuple[str, ...],
        generators: dict[str, int] | None = None,
    ):
        table = np.asarray(mul_table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise GroupConstructionError("multiplication table must be square")
        self.order: int = int(table.shape[0])
        self.mul_table = table
        self.label = label
        self.element_names = tuple(element_names)
        self.generators = dict(generators or {})
        if len(self.element_names) != self.order:
            raise GroupConstructionError("need one name per element")
        self.identity = 0
        self._validate_table()
        self.inv_table = self._build_inverses()
        self.mul_table.setflags(write=False)
        self.inv_table.setflags(write=False)

    # -- construction checks ------------------------------------------------

    def _validate_table(self) -> None:
        t = self.mul_table
        n = self.order
        if t.min() < 0 or t.max() >= n:
            raise GroupConstructionError("table entries out of range")
        idx = np.arange(n)
        if not (np.array_equal(t[0], idx) and np.array_equal(t[:, 0], idx)):
            raise GroupConstructionError("index 0 is not a two-sided identity")
        sorted_rows = np.sort(t, axis=1)
        sorted_cols = np.sort(t, axis=0)
        if not (np.all(sorted_rows == idx) and np.all(sorted_cols == idx.reshape(-1, 1))):
            raise GroupConstructionError("table is not a Latin square")
        if n <= _ASSOC_EXHAUSTIVE_LIMIT:
            # full O(n^3) associativity sweep
            left = t[t][:, :, :]          # left[a,b,c] = (a*b)*c
            right = t[:, t]               # right[a,b,c] = a*(b*c)
            if not np.array_equal(left, right):
                raise GroupConstructionError("multiplication is not associative")
        else:
            rng = np.random.default_rng(_ASSOC_SEED)
            a, b, c = rng.integers(0, n, size=(3, _ASSOC_SAMPLES))
            if not np.array_equal(t[t[a, b], c], t[a, t[b, c]]):
                raise GroupConstructionError("associativity sample failed")

    def _build_inverses(self) -> np.ndarray:
        rows, cols = np.nonzero(self.mul_table == 0)
        inv = np.full(self.order, -1, dtype=np.int64)
        inv[rows] = cols
        if np.any(inv < 0):
            raise GroupConstructionError("some element has no inverse")
        return inv

    # -- basic queries --------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inv_table[a])

    def conjugate(self, a: int, x: int) -> int:
        """a * x * a^-1."""
        return int(self.mul_table[self.mul_table[a, x], self.inv_table[a]])

    def element_order(self, e: int) -> int:
        """Least k >= 1 with e^k = identity."""
        if not 0 <= e < self.order:
            raise IndexError(f"element index {e} out of range")
        k, cur = 1, e
        while cur != 0:
            cur = int(self.mul_table[cur, e])
            k += 1
        return k

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul_table, self.mul_table.T))

    def cyclic_subgroup(self, e: int) -> frozenset[int]:
        members = [0]
        cur = e
        while cur != 0:
            members.append(cur)
            cur = int(self.mul_table[cur, e])
        return frozenset(members)

    def cyclic_subgroups(self) -> list[frozenset[int]]:
        seen: set[frozenset[int]] = set()
        out = []
        for e in range(self.order):
            s = self.cyclic_subgroup(e)
            if s not in seen:
                seen.add(s)
                out.append(s)
        return out

    def is_subgroup(self, subset) -> bool:
        s = frozenset(int(x) for x in subset)
        if 0 not in s:
            return False
        for a in s:
            if int(self.inv_table[a]) not in s:
                return False
            for b in s:
                if int(self.mul_table[a, b]) not in s:
                    return False
        return True

    def is_normal(self, subset) -> bool:
        """True iff a * s * a^-1 stays inside the subgroup for every a."""
        s = frozenset(int(x) for x in subset)
        if not self.is_subgroup(s):
            raise NotASubgroupError(f"{sorted(s)} is not a subgroup of {self.label}")
        for a in range(self.order):
            for x in s:
                if self.conjugate(a, x) not in s:
                    return False
        return True

    def is_hamiltonian(self) -> bool:
        """Non-abelian with every cyclic subgroup normal.

        Since any subgroup is generated by its cyclic ones, this is
        equivalent to all subgroups being normal.
        """
        if self.is_abelian:
            return False
        return all(self.is_normal(s) for s in self.cyclic_subgroups())

    def name_of(self, e: int) -> str:
        return self.element_names[e]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label}, order={self.order})"


# -- constructors -------------------------------------------------------------


def make_cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n, law i*j = (i+j) mod n."""
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    idx = np.arange(n)
    table = (idx.reshape(-1, 1) + idx) % n
    names = ["1"] + ["g" if i == 1 else f"g^{i}" for i in range(1, n)]
    gens = {"g": 1} if n > 1 else {}
    return FiniteGroup(table, f"C{n}", tuple(names), gens)


# 8x8 table for <x, y : x^4 = 1, x^2 = y^2, y^-1 x y = x^-1>,
# elements ordered 1, x, x^2, x^3, y, x*y, x^2*y, x^3*y.
_Q8_TABLE = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 2, 3, 0, 5, 6, 7, 4],
    [2, 3, 0, 1, 6, 7, 4, 5],
    [3, 0, 1, 2, 7, 4, 5, 6],
    [4, 7, 6, 5, 2, 1, 0, 3],
    [5, 4, 7, 6, 3, 2, 1, 0],
    [6, 5, 4, 7, 0, 3, 2, 1],
    [7, 6, 5, 4, 1, 0, 3, 2],
]


def make_quaternion8() -> FiniteGroup:
    """The quaternion group of order 8."""
    names = ("1", "x", "x^2", "x^3", "y", "x*y", "x^2*y", "x^3*y")
    g = FiniteGroup(_Q8_TABLE, "Q8", names, {"x": 1, "y": 4})
    x, y = 1, 4
    x2 = g.mul(x, x)
    # defining relations
    assert g.mul(x2, x2) == 0, "x^4 != 1"
    assert g.mul(y, y) == x2, "y^2 != x^2"
    assert g.mul(g.mul(g.inv(y), x), y) == g.inv(x), "y^-1 x y != x^-1"
    return g


def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n (n >= 3): rotations r^i, reflections r^i*s."""
    if n < 3:
        raise ValueError("dihedral group needs n >= 3")
    order = 2 * n
    table = np.zeros((order, order), dtype=np.int64)
    for i in range(n):
        for j in (0, 1):
            a = i + n * j
            for k in range(n):
                for l in (0, 1):
                    b = k + n * l
                    if j == 0:
                        table[a, b] = (i + k) % n + n * l
                    else:
                        # s * r^k = r^-k * s
                        table[a, b] = (i - k) % n + n * (1 - l)
    names = ["1"] + ["r" if i == 1 else f"r^{i}" for i in range(1, n)]
    names += ["s"] + ["r*s" if i == 1 else f"r^{i}*s" for i in range(1, n)]
    return FiniteGroup(table, f"D{n}", tuple(names), {"r": 1, "s": n})


def direct_product(g: FiniteGroup, h: FiniteGroup, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Componentwise product; element (a, b) gets index a*|h| + b."""
    order = g.order * h.order
    if order > order_cap:
        raise GroupOrderCapError(
            f"product order {order} exceeds cap {order_cap}; "
            "group-ring search spaces grow as |R|^|G|"
        )
    ga = np.arange(g.order).repeat(h.order)
    hb = np.tile(np.arange(h.order), g.order)
    # table[(a1,b1),(a2,b2)] = (a1*a2, b1*b2)
    gt = g.mul_table[np.ix_(ga, ga)]
    ht = h.mul_table[np.ix_(hb, hb)]
    table = gt * h.order + ht
    if g.order == 1:
        names = tuple(h.element_names)
    elif h.order == 1:
        names = tuple(g.element_names)
    else:
        names = tuple(
            f"({g.element_names[a]},{h.element_names[b]})"
            for a, b in zip(ga.tolist(), hb.tolist())
        )
    return FiniteGroup(table, f"{g.label}x{h.label}", names)
