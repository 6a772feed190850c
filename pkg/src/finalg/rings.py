"""Finite rings with identity behind a uniform dense-index contract.

Every ring exposes its elements as indices 0..size-1 with index 0 the zero
element.  Scalar operations (add/mul/neg) are mandatory; vectorised variants
operating on numpy index arrays have generic fallbacks and are overridden
where a concrete representation allows it.  Rings of size <= TABLE_CAP can
memoize full operation tables, which is what the exhaustive property
checkers feed on.

Ring axioms are verified at construction: exhaustively for size <= 256,
by seeded-random sampling above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TABLE_CAP = 4096
_EXHAUSTIVE_LIMIT = 256
_SAMPLE_COUNT = 10_000
_SAMPLE_SEED = 0xA11CE
_SCAN_CAP = 1 << 16


class RingConstructionError(ValueError):
    """Operation tables failed a ring axiom."""


class RingCapError(ValueError):
    """A construction or query would exceed its configured size cap."""


def mixed_radix_digits(indices, radix: int, length: int) -> np.ndarray:
    """Little-endian digits of each index in the given uniform radix."""
    idx = np.asarray(indices, dtype=np.int64).reshape(-1)
    out = np.empty((idx.size, length), dtype=np.int64)
    cur = idx.copy()
    for i in range(length):
        out[:, i] = cur % radix
        cur //= radix
    return out

def mixed_radix_combine(digits: np.ndarray, radix: int) -> np.ndarray:
    weights = radix ** np.arange(digits.shape[1], dtype=np.int64)
    return digits @ weights


class FiniteRing:
    """Base contract for a finite ring with identity.

    Subclasses must set ``size``, ``one``, ``commutative``, ``label`` and
    implement ``add``, ``mul``, ``neg`` on integer indices, then call
    ``_finalize()`` as the last step of construction.
    """

    size: int
    zero: int = 0
    one: int
    commutative: bool
    label: str

    # -- scalar operations -----------------------------------------------

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    # -- vectorised operations (generic fallbacks) -------------------------

    def add_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        flat = [self.add(int(x), int(y)) for x, y in zip(a.reshape(-1), b.reshape(-1))]
        return np.array(flat, dtype=np.int64).reshape(a.shape)

    def mul_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        flat = [self.mul(int(x), int(y)) for x, y in zip(a.reshape(-1), b.reshape(-1))]
        return np.array(flat, dtype=np.int64).reshape(a.shape)

    def neg_arr(self, a: np.ndarray) -> np.ndarray:
        a = np.asarray(a)
        return np.array([self.neg(int(x)) for x in a.reshape(-1)], dtype=np.int64).reshape(a.shape)

    # -- derived ------------------------------------------------------------

    @property
    def characteristic(self) -> int:
        if not hasattr(self, "_characteristic"):
            k, cur = 1, self.one
            while cur != self.zero:
                cur = self.add(cur, self.one)
                k += 1
            self._characteristic = k
        return self._characteristic

    @property
    def is_field(self) -> bool:
        return False

    def from_int(self, c: int) -> int:
        """Image of the integer c under the unique map Z -> R."""
        c %= self.characteristic
        acc = self.zero
        for _ in range(c):
            acc = self.add(acc, self.one)
        return acc

    def inverse(self, a: int) -> int | None:
        """Two-sided inverse of a, or None."""
        tabs = self.op_tables()
        if tabs is not None:
            _, mul, _ = tabs
            hits = np.flatnonzero(mul[a] == self.one)
            for b in hits:
                if mul[b, a] == self.one:
                    return int(b)
            return None
        if self.size > _SCAN_CAP:
            raise RingCapError(f"inverse scan over {self.size} elements exceeds cap")
        for b in range(self.size):
            if self.mul(a, b) == self.one and self.mul(b, a) == self.one:
                return b
        return None

    def elements(self) -> range:
        return range(self.size)

    def format_element(self, i: int) -> str:
        return str(i)

    # -- memoized operation tables ----------------------------------------

    def op_tables(self):
        """(add, mul, neg) full tables, or None when the carrier is too big."""
        if self.size > TABLE_CAP:
            return None
        if not hasattr(self, "_tables"):
            idx = np.arange(self.size, dtype=np.int64)
            rows = idx.repeat(self.size)
            cols = np.tile(idx, self.size)
            shape = (self.size, self.size)
            add = self.add_arr(rows, cols).reshape(shape)
            mul = self.mul_arr(rows, cols).reshape(shape)
            neg = self.neg_arr(idx)
            for t in (add, mul, neg):
                t.setflags(write=False)
            self._tables = (add, mul, neg)
        return self._tables

    # -- construction-time validation ---------------------------------------

    def _finalize(self) -> None:
        if self.size <= _EXHAUSTIVE_LIMIT:
            self._validate_exhaustive()
        else:
            self._validate_sampled()

    def _validate_exhaustive(self) -> None:
        add, mul, neg = self.op_tables()
        n = self.size
        idx = np.arange(n)
        if not np.array_equal(add, add.T):
            raise RingConstructionError(f"{self.label}: addition not commutative")
        if not (np.array_equal(add[0], idx) and np.array_equal(add[idx, neg], np.zeros(n, dtype=np.int64))):
            raise RingConstructionError(f"{self.label}: additive group axioms fail")
        if not (np.array_equal(mul[self.one], idx) and np.array_equal(mul[:, self.one], idx)):
            raise RingConstructionError(f"{self.label}: one is not a two-sided identity")
        for a in range(n):
            if not np.array_equal(add[add[a]], add[a][add]):
                raise RingConstructionError(f"{self.label}: addition not associative")
            if not np.array_equal(mul[mul[a]], mul[a][mul]):
                raise RingConstructionError(f"{self.label}: multiplication not associative")
            if not np.array_equal(mul[a][add], add[np.ix_(mul[a], mul[a])]):
                raise RingConstructionError(f"{self.label}: left distributivity fails")
            if not np.array_equal(mul[:, a][add], add[np.ix_(mul[:, a], mul[:, a])]):
                raise RingConstructionError(f"{self.label}: right distributivity fails")
        if self.commutative and not np.array_equal(mul, mul.T):
            raise RingConstructionError(f"{self.label}: commutative flag is wrong")

    def _validate_sampled(self) -> None:
        rng = np.random.default_rng(_SAMPLE_SEED)
        a, b, c = (rng.integers(0, self.size, size=_SAMPLE_COUNT) for _ in range(3))
        if not np.array_equal(self.add_arr(a, b), self.add_arr(b, a)):
            raise RingConstructionError(f"{self.label}: addition sample not commutative")
        ab = self.mul_arr(a, b)
        if not np.array_equal(self.mul_arr(ab, c), self.mul_arr(a, self.mul_arr(b, c))):
            raise RingConstructionError(f"{self.label}: multiplication sample not associative")
        if not np.array_equal(
            self.mul_arr(a, self.add_arr(b, c)),
            self.add_arr(self.mul_arr(a, b), self.mul_arr(a, c)),
        ):
            raise RingConstructionError(f"{self.label}: left distributivity sample fails")
        if not np.array_equal(
            self.mul_arr(self.add_arr(b, c), a),
            self.add_arr(self.mul_arr(b, a), self.mul_arr(c, a)),
        ):
            raise RingConstructionError(f"{self.label}: right distributivity sample fails")
        if not np.array_equal(self.add_arr(a, self.neg_arr(a)), np.zeros(_SAMPLE_COUNT, dtype=np.int64)):
            raise RingConstructionError(f"{self.label}: negation sample fails")
        if self.commutative and not np.array_equal(ab, self.mul_arr(b, a)):
            raise RingConstructionError(f"{self.label}: commutative flag sample fails")

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label}, size={self.size})"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# -- integers modulo n ---------------------------------------------------------


class Zmod(FiniteRing):
    """Z/n with the residues as their own indices."""

    def __init__(self, n: int, label: str | None = None):
        if n < 2:
            raise ValueError("modulus must be >= 2")
        self.n = n
        self.size = n
        self.one = 1
        self.commutative = True
        self.label = label or f"Z/{n}"
        self._characteristic = n
        self._finalize()

    def add(self, a, b):
        return (a + b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def add_arr(self, a, b):
        return (np.asarray(a, dtype=np.int64) + np.asarray(b, dtype=np.int64)) % self.n

    def mul_arr(self, a, b):
        return (np.asarray(a, dtype=np.int64) * np.asarray(b, dtype=np.int64)) % self.n

    def neg_arr(self, a):
        return (-np.asarray(a, dtype=np.int64)) % self.n

    @property
    def is_field(self) -> bool:
        return _is_prime(self.n)

    def from_int(self, c: int) -> int:
        return c % self.n

    def inverse(self, a):
        try:
            return pow(a, -1, self.n)
        except ValueError:
            return None


def make_zmod(n: int) -> Zmod:
    return Zmod(n)


# -- finite fields GF(p^k) ------------------------------------------------------


def _poly_eval_mod(coeffs: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc

def _poly_divmod(num: list[int], den: list[int], p: int):
    num = [c % p for c in num]
    den = [c % p for c in den]
    while den and den[-1] == 0:
        den.pop()
    inv_lead = pow(den[-1], -1, p)
    out = list(num)
    quot = [0] * max(len(num) - len(den) + 1, 0)
    for i in range(len(num) - len(den), -1, -1):
        coef = (out[i + len(den) - 1] * inv_lead) % p
        quot[i] = coef
        if coef:
            for j, d in enumerate(den):
                out[i + j] = (out[i + j] - coef * d) % p
    rem = out[: len(den) - 1]
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem

def _is_irreducible(coeffs: list[int], p: int) -> bool:
    """Exhaustive root/factor search, valid for degree <= 4."""
    k = len(coeffs) - 1
    if k < 1 or coeffs[-1] % p == 0:
        return False
    if any(_poly_eval_mod(coeffs, x, p) == 0 for x in range(p)):
        return False
    if k == 4:
        # a rootless degree-4 polynomial can still split into two quadratics
        for b in range(p):
            for c in range(p):
                quad = [c, b, 1]
                if any(_poly_eval_mod(quad, x, p) == 0 for x in range(p)):
                    continue
                _, rem = _poly_divmod(coeffs, quad, p)
                if not rem:
                    return False
    return True

def _find_irreducible(p: int, k: int) -> list[int]:
    """First monic irreducible of degree k in mixed-radix order of the low coefficients."""
    for idx in range(p**k):
        coeffs = [(idx // p**i) % p for i in range(k)] + [1]
        if _is_irreducible(coeffs, p):
            return coeffs
    raise ValueError(f"no irreducible polynomial of degree {k} over GF({p})")


class PolyField(FiniteRing):
    """GF(p^k) for k >= 2, elements encoded by base-p digit vectors."""

    def __init__(self, p: int, k: int, modulus: list[int]):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 2 or k > 4:
            raise ValueError("PolyField handles 2 <= k <= 4")
        size = p**k
        if size > TABLE_CAP:
            raise RingCapError(f"GF({p}^{k}) has {size} elements, beyond the table cap")
        modulus = [c % p for c in modulus]
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not _is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.size = size
        self.one = 1
        self.commutative = True
        self.label = f"GF({p}^{k})"
        self._characteristic = p
        self._build_tables()
        self._finalize()

    def _build_tables(self) -> None:
        p, k, q = self.p, self.k, self.size
        digits = mixed_radix_digits(np.arange(q), p, k)
        pair_sum = (digits[:, None, :] + digits[None, :, :]) % p
        add = mixed_radix_combine(pair_sum.reshape(q * q, k), p).reshape(q, q)
        neg = mixed_radix_combine((-digits) % p, p)
        # companion matrix of the modulus: coordinates of t * t^i
        comp = np.zeros((k, k), dtype=np.int64)
        for i in range(k - 1):
            comp[i + 1, i] = 1
        comp[:, k - 1] = [(-c) % p for c in self.modulus[:k]]
        shifted = [digits]                      # coordinates of t^i * a for all a
        for _ in range(k - 1):
            shifted.append(shifted[-1] @ comp.T % p)
        mul = np.zeros((q, q, k), dtype=np.int64)
        for i in range(k):
            mul += shifted[i][:, None, :] * digits[None, :, i : i + 1]
        mul = mixed_radix_combine((mul % p).reshape(q * q, k), p).reshape(q, q)
        for t in (add, mul, neg):
            t.setflags(write=False)
        self._tables = (add, mul, neg)
        inv = np.full(q, -1, dtype=np.int64)
        rows, cols = np.nonzero(mul == self.one)
        inv[rows] = cols
        self._inv_table = inv

    def add(self, a, b):
        return int(self._tables[0][a, b])

    def mul(self, a, b):
        return int(self._tables[1][a, b])

    def neg(self, a):
        return int(self._tables[2][a])

    def add_arr(self, a, b):
        return self._tables[0][np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)]

    def mul_arr(self, a, b):
        return self._tables[1][np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)]

    def neg_arr(self, a):
        return self._tables[2][np.asarray(a, dtype=np.int64)]

    @property
    def is_field(self) -> bool:
        return True

    def inverse(self, a):
        b = int(self._inv_table[a])
        return None if b < 0 else b

    def format_element(self, i: int) -> str:
        if i == 0:
            return "0"
        terms = []
        for j in range(self.k - 1, -1, -1):
            c = (i // self.p**j) % self.p
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                t = "t" if j == 1 else f"t^{j}"
                terms.append(t if c == 1 else f"{c}*{t}")
        return "+".join(terms)


def make_gf(p: int, k: int = 1, modulus: list[int] | None = None) -> FiniteRing:
    """GF(p^k); the modulus defaults to a built-in irreducible (k <= 4)."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k == 1:
        return Zmod(p, label=f"GF({p})")
    if modulus is None:
        modulus = _find_irreducible(p, k)
    return PolyField(p, k, modulus)


# -- matrix rings ---------------------------------------------------------------


class MatrixRing(FiniteRing):
    """n x n matrices over a base ring, entries encoded row-major."""

    def __init__(self, base: FiniteRing, n: int, size_cap: int = _SCAN_CAP):
        if n < 1:
            raise ValueError("matrix dimension must be >= 1")
        size = base.size ** (n * n)
        if size > size_cap:
            raise RingCapError(f"M{n}({base.label}) would have {size} elements (cap {size_cap})")
        self.base = base
        self.n = n
        self.size = size
        one_digits = np.zeros(n * n, dtype=np.int64)
        one_digits[[i * n + i for i in range(n)]] = base.one
        self.one = int(mixed_radix_combine(one_digits.reshape(1, -1), base.size)[0])
        self.commutative = n == 1 and base.commutative
        self.label = f"M{n}({base.label})"
        self._characteristic = base.characteristic
        self._finalize()

    def _digits(self, arr) -> np.ndarray:
        return mixed_radix_digits(arr, self.base.size, self.n * self.n)

    def add_arr(self, a, b):
        da = self._digits(a)
        db = self._digits(b)
        return mixed_radix_combine(self.base.add_arr(da, db), self.base.size)

    def neg_arr(self, a):
        return mixed_radix_combine(self.base.neg_arr(self._digits(a)), self.base.size)

    def mul_arr(self, a, b):
        n = self.n
        da = self._digits(a)
        db = self._digits(b)
        out = np.zeros_like(da)
        for i in range(n):
            for j in range(n):
                acc = np.zeros(da.shape[0], dtype=np.int64)
                for k in range(n):
                    acc = self.base.add_arr(acc, self.base.mul_arr(da[:, i * n + k], db[:, k * n + j]))
                out[:, i * n + j] = acc
        return mixed_radix_combine(out, self.base.size)

    def add(self, a, b):
        return int(self.add_arr(np.array([a]), np.array([b]))[0])

    def mul(self, a, b):
        return int(self.mul_arr(np.array([a]), np.array([b]))[0])

    def neg(self, a):
        return int(self.neg_arr(np.array([a]))[0])

    def format_element(self, i: int) -> str:
        d = self._digits(np.array([i]))[0]
        rows = []
        for r in range(self.n):
            rows.append("[" + ",".join(self.base.format_element(int(d[r * self.n + c])) for c in range(self.n)) + "]")
        return "[" + ",".join(rows) + "]"


def make_matrix_ring(base: FiniteRing, n: int, size_cap: int = _SCAN_CAP) -> MatrixRing:
    if not base.commutative and not is_division_ring(base):
        raise ValueError("matrix base must be commutative or a division ring")
    return MatrixRing(base, n, size_cap)


# -- direct sums ------------------------------------------------------------------


class DirectSumRing(FiniteRing):
    """Componentwise sum of rings; part 0 occupies the least significant digits."""

    def __init__(self, parts: list[FiniteRing], size_cap: int = 1 << 20):
        if not parts:
            raise ValueError("direct sum needs at least one part")
        size = math.prod(p.size for p in parts)
        if size > size_cap:
            raise RingCapError(f"direct sum would have {size} elements (cap {size_cap})")
        self.parts = list(parts)
        self.size = size
        self.one = self._combine([p.one for p in parts])
        self.commutative = all(p.commutative for p in parts)
        self.label = "(+)".join(p.label for p in parts)
        self._characteristic = math.lcm(*(p.characteristic for p in parts))
        self._finalize()

    def _combine(self, comps) -> int:
        idx, weight = 0, 1
        for p, c in zip(self.parts, comps):
            idx += int(c) * weight
            weight *= p.size
        return idx

    def _split_arr(self, arr) -> list[np.ndarray]:
        cur = np.asarray(arr, dtype=np.int64).reshape(-1).copy()
        comps = []
        for p in self.parts:
            comps.append(cur % p.size)
            cur //= p.size
        return comps

    def _combine_arr(self, comps) -> np.ndarray:
        idx = np.zeros_like(comps[0])
        weight = 1
        for p, c in zip(self.parts, comps):
            idx += c * weight
            weight *= p.size
        return idx

    def add_arr(self, a, b):
        ca, cb = self._split_arr(a), self._split_arr(b)
        return self._combine_arr([p.add_arr(x, y) for p, x, y in zip(self.parts, ca, cb)])

    def mul_arr(self, a, b):
        ca, cb = self._split_arr(a), self._split_arr(b)
        return self._combine_arr([p.mul_arr(x, y) for p, x, y in zip(self.parts, ca, cb)])

    def neg_arr(self, a):
        return self._combine_arr([p.neg_arr(x) for p, x in zip(self.parts, self._split_arr(a))])

    def add(self, a, b):
        return int(self.add_arr(np.array([a]), np.array([b]))[0])

    def mul(self, a, b):
        return int(self.mul_arr(np.array([a]), np.array([b]))[0])

    def neg(self, a):
        return int(self.neg_arr(np.array([a]))[0])

    def format_element(self, i: int) -> str:
        comps = [int(c[0]) for c in self._split_arr(np.array([i]))]
        return "(" + ", ".join(p.format_element(c) for p, c in zip(self.parts, comps)) + ")"


def direct_sum(parts: list[FiniteRing], size_cap: int = 1 << 20) -> FiniteRing:
    return DirectSumRing(parts, size_cap)


# -- subring views ------------------------------------------------------------------


class SubringView(FiniteRing):
    """A multiplicatively closed subset of a parent ring re-indexed densely.

    Used for corner rings e*R*e; ``one`` names the parent index acting as the
    local identity.
    """

    def __init__(self, parent: FiniteRing, members: np.ndarray, one_parent: int, label: str):
        members = np.unique(np.asarray(members, dtype=np.int64))
        if members[0] != parent.zero:
            raise RingConstructionError("subring must contain the parent zero")
        self.parent = parent
        self.members = members
        self.size = int(members.size)
        pos = int(np.searchsorted(members, one_parent))
        if pos >= self.size or members[pos] != one_parent:
            raise RingConstructionError("identity element not in the subset")
        self.one = pos
        self.label = label
        self.commutative = self._probe_commutative()
        self._finalize()

    def _probe_commutative(self) -> bool:
        if self.size > TABLE_CAP:
            return False
        idx = self.members
        rows = idx.repeat(self.size)
        cols = np.tile(idx, self.size)
        return bool(np.array_equal(self.parent.mul_arr(rows, cols), self.parent.mul_arr(cols, rows)))

    def _to_pos(self, parent_idx: np.ndarray) -> np.ndarray:
        pos = np.searchsorted(self.members, parent_idx)
        ok = (pos < self.size) & (self.members[np.minimum(pos, self.size - 1)] == parent_idx)
        if not np.all(ok):
            raise RingConstructionError(f"{self.label}: subset is not closed under the ring operations")
        return pos

    def add_arr(self, a, b):
        pa = self.members[np.asarray(a, dtype=np.int64)]
        pb = self.members[np.asarray(b, dtype=np.int64)]
        return self._to_pos(self.parent.add_arr(pa, pb))

    def mul_arr(self, a, b):
        pa = self.members[np.asarray(a, dtype=np.int64)]
        pb = self.members[np.asarray(b, dtype=np.int64)]
        return self._to_pos(self.parent.mul_arr(pa, pb))

    def neg_arr(self, a):
        return self._to_pos(self.parent.neg_arr(self.members[np.asarray(a, dtype=np.int64)]))

    def add(self, a, b):
        return int(self.add_arr(np.array([a]), np.array([b]))[0])

    def mul(self, a, b):
        return int(self.mul_arr(np.array([a]), np.array([b]))[0])

    def neg(self, a):
        return int(self.neg_arr(np.array([a]))[0])

    def format_element(self, i: int) -> str:
        return self.parent.format_element(int(self.members[i]))


# -- ideals --------------------------------------------------------------------


@dataclass(frozen=True)
class SubsetIdeal:
    """A subset together with the sidedness it absorbs multiplication on."""

    carrier: frozenset[int]
    side: str  # "left" | "right" | "two-sided"

    def __len__(self) -> int:
        return len(self.carrier)


def validate_ideal(r: FiniteRing, carrier, side: str):
    """Check the SubsetIdeal contract; returns (ok, reason, witness)."""
    members = np.unique(np.fromiter((int(x) for x in carrier), dtype=np.int64))
    if members.size == 0 or members[0] != r.zero:
        return False, "missing zero", None

    def in_members(vals: np.ndarray) -> np.ndarray:
        pos = np.searchsorted(members, vals)
        pos_clip = np.minimum(pos, members.size - 1)
        return members[pos_clip] == vals

    bad = ~in_members(r.neg_arr(members))
    if bad.any():
        return False, "not closed under negation", (int(members[bad.argmax()]),)
    for a in members:
        sums = r.add_arr(np.full(members.size, int(a), dtype=np.int64), members)
        bad = ~in_members(sums)
        if bad.any():
            return False, "not closed under addition", (int(a), int(members[bad.argmax()]))
    check_left = side in ("left", "two-sided")
    check_right = side in ("right", "two-sided")
    block = 4096
    for a in members:
        a_fill = np.full(block, int(a), dtype=np.int64)
        for lo in range(0, r.size, block):
            xs = np.arange(lo, min(lo + block, r.size), dtype=np.int64)
            if check_left:
                bad = ~in_members(r.mul_arr(xs, a_fill[: xs.size]))
                if bad.any():
                    return False, "left absorption fails", (int(xs[bad.argmax()]), int(a))
            if check_right:
                bad = ~in_members(r.mul_arr(a_fill[: xs.size], xs))
                if bad.any():
                    return False, "right absorption fails", (int(a), int(xs[bad.argmax()]))
    return True, None, None


def two_sided_closure(r: FiniteRing, seeds) -> frozenset[int]:
    """Smallest two-sided ideal containing the seeds (small rings only)."""
    if r.size > TABLE_CAP:
        raise RingCapError("ideal closure needs a small carrier")
    add, mul, neg = r.op_tables()
    in_set = np.zeros(r.size, dtype=bool)
    in_set[r.zero] = True
    frontier = [int(s) for s in seeds]
    while frontier:
        v = frontier.pop()
        if in_set[v]:
            continue
        in_set[v] = True
        members = np.flatnonzero(in_set)
        new = np.unique(np.concatenate([add[v, members], neg[v : v + 1], mul[:, v], mul[v, :]]))
        frontier.extend(int(x) for x in new if not in_set[x])
    return frozenset(int(x) for x in np.flatnonzero(in_set))


# -- structural queries -----------------------------------------------------------


def _unit_mask(r: FiniteRing) -> np.ndarray:
    if hasattr(r, "unit_mask"):
        return r.unit_mask()
    if isinstance(r, Zmod):
        return np.gcd(np.arange(r.n), r.n) == 1
    tabs = r.op_tables()
    if tabs is None:
        raise RingCapError(f"unit scan on {r.label} ({r.size} elements) exceeds the table cap")
    _, mul, _ = tabs
    return (mul == r.one).any(axis=1) & (mul == r.one).any(axis=0)


def units(r: FiniteRing) -> np.ndarray:
    """Sorted indices of the two-sided units."""
    return np.flatnonzero(_unit_mask(r))


def nilpotents(r: FiniteRing) -> np.ndarray:
    """Sorted indices of all a with a^k = 0.

    Repeated squaring: after ceil(log2(size)) + 1 rounds, a^(2^m) has
    stabilised for every element of a finite ring.
    """
    rounds = max(int(math.ceil(math.log2(max(r.size, 2)))) + 1, 2)
    if hasattr(r, "nilpotent_mask"):
        return np.flatnonzero(r.nilpotent_mask(rounds))
    tabs = r.op_tables()
    if tabs is not None:
        _, mul, _ = tabs
        v = np.arange(r.size, dtype=np.int64)
        for _ in range(rounds):
            v = mul[v, v]
        return np.flatnonzero(v == r.zero)
    if r.size > _SCAN_CAP:
        raise RingCapError(f"nilpotency scan on {r.label} exceeds cap")
    v = np.arange(r.size, dtype=np.int64)
    for _ in range(rounds):
        v = r.mul_arr(v, v)
    return np.flatnonzero(v == r.zero)


def jacobson_radical(r: FiniteRing, x_block: int = 512) -> SubsetIdeal:
    """{a : 1 - x*a is a unit for all x}, by quasi-regularity scan.

    For a finite ring this set is the Jacobson radical; the result is
    verified to be a two-sided ideal before returning.
    """
    if r.size > _SCAN_CAP:
        raise RingCapError(f"radical scan on {r.label} ({r.size} elements) exceeds cap")
    umask = _unit_mask(r)
    members = []
    tabs = r.op_tables()
    if tabs is not None:
        add, mul, neg = tabs
        for a in range(r.size):
            if umask[add[r.one, neg[mul[:, a]]]].all():
                members.append(a)
    elif hasattr(r, "quasi_regular_member"):
        for a in range(r.size):
            if r.quasi_regular_member(a, umask, x_block):
                members.append(a)
    else:
        one_col = np.full(x_block, r.one, dtype=np.int64)
        for a in range(r.size):
            is_member = True
            for lo in range(0, r.size, x_block):
                xs = np.arange(lo, min(lo + x_block, r.size), dtype=np.int64)
                xa = r.mul_arr(xs, np.full(xs.size, a, dtype=np.int64))
                t = r.add_arr(one_col[: xs.size], r.neg_arr(xa))
                if not umask[t].all():
                    is_member = False
                    break
            if is_member:
                members.append(a)
    ok, reason, _ = validate_ideal(r, members, "two-sided")
    if not ok:
        raise RingConstructionError(f"radical of {r.label} failed ideal check: {reason}")
    return SubsetIdeal(frozenset(members), "two-sided")


def is_semisimple(r: FiniteRing) -> bool:
    return jacobson_radical(r).carrier == {r.zero}


def is_division_ring(r: FiniteRing) -> bool:
    if r.size < 2:
        return False
    return units(r).size == r.size - 1


def center(r: FiniteRing) -> np.ndarray:
    """Sorted indices of all elements commuting with the whole carrier."""
    if r.commutative:
        return np.arange(r.size, dtype=np.int64)
    if hasattr(r, "center_mask"):
        return np.flatnonzero(r.center_mask())
    tabs = r.op_tables()
    if tabs is None:
        raise RingCapError(f"center scan on {r.label} exceeds the table cap")
    _, mul, _ = tabs
    return np.flatnonzero((mul == mul.T).all(axis=1))
