"""Group rings RG and their element-level algebra.

A GroupRing is itself a FiniteRing: elements are coefficient vectors over
the base ring indexed by group elements, encoded as mixed-radix integers
(coefficient of group element i is digit i, little-endian).  Carriers above
2^20 elements are never materialised; global scans stream digit blocks.

Multiplication is convolution.  For bases Z/m the left/right multiplication
matrices turn bulk products into integer matrix multiplies, which is what
the exhaustive property checkers lean on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from . import linalg
from .groups import FiniteGroup
from .rings import (
    FiniteRing,
    RingCapError,
    Zmod,
    mixed_radix_combine,
    mixed_radix_digits,
)

_MASK_CAP = 1 << 16
_ENUM_CAP = 1 << 18
_GEMM_FLOAT_MIN = 1 << 14


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


class GroupRing(FiniteRing):
    """The group ring of a finite group over a commutative coefficient ring."""

    def __init__(self, base: FiniteRing, group: FiniteGroup):
        if not base.commutative:
            raise ValueError("group-ring coefficients must come from a commutative ring")
        self.base = base
        self.group = group
        self.n = group.order
        self.size = base.size**group.order
        self.one = base.one  # coefficient base.one at the group identity (digit 0)
        self.commutative = group.is_abelian
        self.label = f"{base.label}[{group.label}]"
        self._characteristic = base.characteristic
        # kmat[i, j] = index of g_i * g_j^-1;  rmat[k, i] = index of g_i^-1 * g_k
        gm, ginv = group.mul_table, group.inv_table
        self._kmat = gm[:, ginv]
        self._rmat = gm[ginv].T
        self._finalize()

    # -- codec ---------------------------------------------------------------

    def decode(self, idx: int) -> np.ndarray:
        return mixed_radix_digits(np.array([idx], dtype=np.int64), self.base.size, self.n)[0]

    def decode_arr(self, indices) -> np.ndarray:
        return mixed_radix_digits(indices, self.base.size, self.n)

    def encode(self, coeffs) -> int:
        return int(mixed_radix_combine(np.asarray(coeffs, dtype=np.int64).reshape(1, -1), self.base.size)[0])

    def encode_arr(self, coeffs: np.ndarray) -> np.ndarray:
        return mixed_radix_combine(coeffs, self.base.size)

    def digit_blocks(self, block: int = 1 << 16, start: int = 0, stop: int | None = None):
        """Stream (lo, digits) chunks of the whole carrier in index order."""
        stop = self.size if stop is None else stop
        lo = start
        while lo < stop:
            hi = min(lo + block, stop)
            yield lo, mixed_radix_digits(np.arange(lo, hi, dtype=np.int64), self.base.size, self.n)
            lo = hi

    # -- ring operations -------------------------------------------------------

    def _conv_digits(self, da: np.ndarray, db: np.ndarray) -> np.ndarray:
        gm = self.group.mul_table
        acc = np.zeros_like(da)
        for i in range(self.n):
            for j in range(self.n):
                k = int(gm[i, j])
                acc[:, k] = self.base.add_arr(acc[:, k], self.base.mul_arr(da[:, i], db[:, j]))
        return acc

    def add(self, a: int, b: int) -> int:
        return self.encode(self.base.add_arr(self.decode(a), self.decode(b)))

    def neg(self, a: int) -> int:
        return self.encode(self.base.neg_arr(self.decode(a)))

    def mul(self, a: int, b: int) -> int:
        da = self.decode(a).reshape(1, -1)
        db = self.decode(b).reshape(1, -1)
        return self.encode(self._conv_digits(da, db)[0])

    def add_arr(self, a, b):
        return self.encode_arr(self.base.add_arr(self.decode_arr(a), self.decode_arr(b)))

    def neg_arr(self, a):
        return self.encode_arr(self.base.neg_arr(self.decode_arr(a)))

    def mul_arr(self, a, b):
        da, db = self.decode_arr(a), self.decode_arr(b)
        return self.encode_arr(self._conv_digits(da, db))

    def format_element(self, i: int) -> str:
        return self.render_coeffs(self.decode(i))

    # -- residue-base fast kernels ------------------------------------------

    @property
    def residue_modulus(self) -> int | None:
        """Base modulus when coefficients are Z/m, else None."""
        return self.base.n if isinstance(self.base, Zmod) else None

    def gemm_mod(self, digits: np.ndarray, mat: np.ndarray) -> np.ndarray:
        """(digits @ mat.T) mod m; float32 BLAS for large blocks (values stay exact)."""
        m = self.residue_modulus
        if digits.shape[0] >= _GEMM_FLOAT_MIN:
            prod = digits.astype(np.float32) @ mat.T.astype(np.float32)
            return np.remainder(prod, m).astype(np.int64)
        return (digits @ mat.T) % m

    def left_matrix_from_digits(self, coeffs: np.ndarray) -> np.ndarray:
        """L with L @ vec(b) = vec(a*b)."""
        return np.asarray(coeffs, dtype=np.int64)[self._kmat]

    def right_matrix_from_digits(self, coeffs: np.ndarray) -> np.ndarray:
        """R with R @ vec(x) = vec(x*a)."""
        return np.asarray(coeffs, dtype=np.int64)[self._rmat]

    def involution_digits(self, coeffs: np.ndarray) -> np.ndarray:
        return np.asarray(coeffs)[..., self.group.inv_table]

    def involution_index(self, idx: int) -> int:
        return self.encode(self.involution_digits(self.decode(idx)))

    # -- structural hooks used by rings queries --------------------------------

    def unit_mask(self) -> np.ndarray:
        """Boolean mask of units: L_a invertible mod every prime dividing m."""
        if not hasattr(self, "_unit_mask_cache"):
            m = self.residue_modulus
            if m is None or self.size > _MASK_CAP:
                if self.size > _MASK_CAP:
                    raise RingCapError(f"unit mask on {self.label} ({self.size} elements) exceeds cap")
                # non-residue base: fall back to table search
                _, mul, _ = self.op_tables()
                mask = (mul == self.one).any(axis=1) & (mul == self.one).any(axis=0)
            else:
                digits = self.decode_arr(np.arange(self.size))
                l_all = digits[:, self._kmat]
                mask = np.ones(self.size, dtype=bool)
                for p in _prime_factors(m):
                    mask &= linalg.batched_invertible_mod_p(l_all % p, p)
            mask.setflags(write=False)
            self._unit_mask_cache = mask
        return self._unit_mask_cache

    def center_mask(self) -> np.ndarray:
        """a is central iff it commutes with every group basis element."""
        if self.size > _MASK_CAP:
            raise RingCapError(f"center mask on {self.label} exceeds cap")
        digits = self.decode_arr(np.arange(self.size))
        gm, ginv = self.group.mul_table, self.group.inv_table
        mask = np.ones(self.size, dtype=bool)
        for g in range(1, self.n):
            right = gm[:, ginv[g]]     # (a g)_k = a[k g^-1]
            left = gm[ginv[g]]         # (g a)_k = a[g^-1 k]
            mask &= (digits[:, right] == digits[:, left]).all(axis=1)
        return mask

    def quasi_regular_member(self, a: int, umask: np.ndarray, x_block: int = 512) -> bool:
        """Whether 1 - x*a is a unit for every x (streamed, early exit)."""
        one_digits = self.decode(self.one)
        m = self.residue_modulus
        rmat = self.right_matrix_from_digits(self.decode(a))
        for lo, digits in self.digit_blocks(block=x_block):
            if m is not None:
                xa = self.gemm_mod(digits, rmat)
                t = (one_digits[None, :] - xa) % m
                idx = self.encode_arr(t)
            else:
                xs = np.arange(lo, lo + digits.shape[0], dtype=np.int64)
                a_fill = np.full(xs.size, a, dtype=np.int64)
                idx = self.add_arr(np.full(xs.size, self.one, dtype=np.int64), self.neg_arr(self.mul_arr(xs, a_fill)))
            if not umask[idx].all():
                return False
        return True

    def nilpotent_mask(self, rounds: int) -> np.ndarray:
        if self.size > _MASK_CAP:
            raise RingCapError(f"nilpotency mask on {self.label} exceeds cap")
        digits = self.decode_arr(np.arange(self.size))
        for _ in range(rounds):
            digits = self._conv_digits(digits, digits)
        return (digits == 0).all(axis=1)

    # -- elements -----------------------------------------------------------------

    def element(self, coeffs) -> "GroupRingElement":
        vec = np.asarray(coeffs, dtype=np.int64).copy()
        if vec.shape != (self.n,):
            raise ValueError(f"coefficient vector must have length {self.n}")
        if vec.min() < 0 or vec.max() >= self.base.size:
            raise ValueError("coefficient out of range for the base ring")
        vec.setflags(write=False)
        return GroupRingElement(self, vec)

    def element_from_index(self, idx: int) -> "GroupRingElement":
        return self.element(self.decode(idx))

    def basis_element(self, g: int, coeff: int | None = None) -> "GroupRingElement":
        vec = np.zeros(self.n, dtype=np.int64)
        vec[g] = self.base.one if coeff is None else coeff
        return self.element(vec)

    @property
    def zero_element(self) -> "GroupRingElement":
        return self.element(np.zeros(self.n, dtype=np.int64))

    @property
    def one_element(self) -> "GroupRingElement":
        return self.basis_element(0)

    # -- literals ------------------------------------------------------------------

    def _name_map(self) -> dict[str, int]:
        if not hasattr(self, "_names"):
            names = {name: i for i, name in enumerate(self.group.element_names)}
            names.update(self.group.generators)
            self._names = names
        return self._names

    def from_literal(self, text: str) -> "GroupRingElement":
        """Parse ``"1 + x + 2*x^2*y"`` over the group's named generators."""
        acc = np.zeros(self.n, dtype=np.int64)
        for sign, term in _split_terms(text):
            coeff, gidx = self._parse_term(term)
            val = self.base.from_int(sign * coeff)
            acc[gidx] = self.base.add(int(acc[gidx]), val)
        return self.element(acc)

    def _parse_term(self, term: str) -> tuple[int, int]:
        names = self._name_map()
        coeff, gidx = 1, 0
        for factor in _split_factors(term):
            if re.fullmatch(r"-?\d+", factor):
                coeff *= int(factor)
                continue
            if factor in names:
                gidx = self.group.mul(gidx, names[factor])
                continue
            m = re.fullmatch(r"(.+)\^(-?\d+)", factor)
            if m and m.group(1) in names:
                g, e = names[m.group(1)], int(m.group(2))
                if e < 0:
                    g, e = self.group.inv(g), -e
                for _ in range(e):
                    gidx = self.group.mul(gidx, g)
                continue
            raise ElementParseError(f"unknown factor {factor!r} in {self.label} literal")
        return coeff, gidx

    def render_coeffs(self, coeffs) -> str:
        parts = []
        one_str = self.base.format_element(self.base.one)
        for g in range(self.n):
            c = int(coeffs[g])
            if c == self.base.zero:
                continue
            cs = self.base.format_element(c)
            if not re.fullmatch(r"[\w.]+", cs):
                cs = f"({cs})"
            if g == 0:
                parts.append(cs)
            elif cs == one_str:
                parts.append(self.group.element_names[g])
            else:
                parts.append(f"{cs}*{self.group.element_names[g]}")
        return " + ".join(parts) if parts else "0"


class ElementParseError(ValueError):
    pass


def _split_terms(text: str):
    """Yield (sign, term) pieces split on top-level + and -."""
    s = text.strip()
    if not s:
        raise ElementParseError("empty element literal")
    depth, start, sign = 0, 0, 1
    out = []
    i = 0
    while i < len(s):
        ch = s[i]
        prev = s[:i].rstrip()[-1:] if i else ""
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in "+-" and prev == "^":
            pass  # exponent sign, not a term separator
        elif depth == 0 and ch in "+-" and i > start:
            piece = s[start:i].strip()
            if piece:
                out.append((sign, piece))
                sign = 1 if ch == "+" else -1
                start = i + 1
            elif ch == "-":
                sign = -sign
                start = i + 1
        elif depth == 0 and ch == "-" and i == start:
            sign = -sign
            start = i + 1
        i += 1
    piece = s[start:].strip()
    if not piece:
        raise ElementParseError(f"dangling operator in {text!r}")
    out.append((sign, piece))
    return out


def _split_factors(term: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(term):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "*" and depth == 0:
            parts.append(term[start:i].strip())
            start = i + 1
    parts.append(term[start:].strip())
    return [p for p in parts if p]


@dataclass(frozen=True)
class GroupRingElement:
    """A coefficient vector over the base ring, indexed by group elements."""

    ring: GroupRing
    coeffs: np.ndarray

    def _require_same_parent(self, other: "GroupRingElement") -> None:
        if other.ring is not self.ring:
            raise ValueError("elements come from different group rings")

    @property
    def index(self) -> int:
        return self.ring.encode(self.coeffs)

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._require_same_parent(other)
        return self.ring.element(self.ring.base.add_arr(self.coeffs, other.coeffs))

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._require_same_parent(other)
        return self + (-other)

    def __neg__(self) -> "GroupRingElement":
        return self.ring.element(self.ring.base.neg_arr(self.coeffs))

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._require_same_parent(other)
        da = self.coeffs.reshape(1, -1)
        db = other.coeffs.reshape(1, -1)
        return self.ring.element(self.ring._conv_digits(da, db)[0])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupRingElement)
            and other.ring is self.ring
            and np.array_equal(other.coeffs, self.coeffs)
        )

    def __hash__(self) -> int:
        return hash((id(self.ring), self.coeffs.tobytes()))

    @property
    def is_zero(self) -> bool:
        return bool(np.all(self.coeffs == self.ring.base.zero))

    def involution(self) -> "GroupRingElement":
        """Coefficient of g becomes the coefficient of g^-1."""
        return self.ring.element(self.ring.involution_digits(self.coeffs))

    def trace(self) -> int:
        """Coefficient of the group identity (a base-ring index)."""
        return int(self.coeffs[0])

    def augmentation(self) -> int:
        """Sum of all coefficients in the base ring."""
        acc = self.ring.base.zero
        for c in self.coeffs:
            acc = self.ring.base.add(acc, int(c))
        return acc

    def left_matrix(self) -> np.ndarray:
        return self.ring.left_matrix_from_digits(self.coeffs)

    def right_matrix(self) -> np.ndarray:
        return self.ring.right_matrix_from_digits(self.coeffs)

    def render(self) -> str:
        return self.ring.render_coeffs(self.coeffs)

    def to_json(self) -> dict:
        return {
            "ring": self.ring.base.label,
            "group": self.ring.group.label,
            "coeffs": [int(c) for c in self.coeffs],
        }

    def __repr__(self) -> str:
        return f"<{self.render()} in {self.ring.label}>"


# -- spec-level operation aliases -------------------------------------------------


def gr_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a * b


def involution(a: GroupRingElement) -> GroupRingElement:
    return a.involution()


def trace(a: GroupRingElement) -> int:
    return a.trace()


def augmentation(a: GroupRingElement) -> int:
    return a.augmentation()


def left_mul_matrix(a: GroupRingElement) -> np.ndarray:
    return a.left_matrix()


# -- annihilators ----------------------------------------------------------------


def span_member_indices(ring: GroupRing, basis: np.ndarray) -> np.ndarray:
    """Sorted element indices of the span of coefficient-vector basis rows."""
    base = ring.base
    basis = np.asarray(basis, dtype=np.int64).reshape(-1, ring.n)
    if isinstance(base, Zmod):
        vecs = linalg.span_vectors_mod_p(basis, base.n)
    else:
        vecs = np.zeros((1, ring.n), dtype=np.int64)
        for row in basis:
            expanded = []
            for c in range(base.size):
                scaled = base.mul_arr(np.full(ring.n, c, dtype=np.int64), row)
                expanded.append(base.add_arr(vecs, scaled.reshape(1, -1)))
            vecs = np.vstack(expanded)
    return np.sort(ring.encode_arr(vecs))


@dataclass
class Annihilator:
    """Right annihilator of a fixed element.

    Over a field base this is a nullspace: ``basis`` rows span it and
    ``count`` = |field|^rank(basis).  Over other bases it is whatever an
    exhaustive scan collected before the budget ran out; ``complete``
    records whether the scan covered the whole carrier.
    """

    ring: GroupRing
    of_index: int
    complete: bool
    count: int
    basis: np.ndarray | None = None
    members: np.ndarray | None = None

    def indices(self) -> np.ndarray:
        """Sorted element indices (materialises the span when needed)."""
        if self.members is not None:
            return self.members
        if self.count > _ENUM_CAP:
            raise RingCapError(f"annihilator with {self.count} members exceeds the enumeration cap")
        self.members = span_member_indices(self.ring, self.basis)
        return self.members

    def contains(self, idx: int) -> bool:
        return self.ring.mul(self.of_index, idx) == self.ring.zero


def right_annihilator(a: GroupRingElement, max_pairs: int = 1 << 24) -> Annihilator:
    """All b with a*b = 0.

    Field base: nullspace of the left multiplication matrix by exact
    elimination.  Otherwise: exhaustive scan in canonical order, stopping
    (flagged incomplete) when the pair budget is exhausted.
    """
    ring = a.ring
    base = ring.base
    aidx = a.index
    if base.is_field:
        if isinstance(base, Zmod):
            basis = linalg.nullspace_mod_p(a.left_matrix(), base.n)
        else:
            rows = [[int(v) for v in row] for row in a.left_matrix()]
            basis = np.array(linalg.nullspace_field(rows, base), dtype=np.int64).reshape(-1, ring.n)
        return Annihilator(ring, aidx, complete=True, count=base.size ** len(basis), basis=basis)
    found = []
    m = ring.residue_modulus
    swept = 0
    lmat = a.left_matrix()
    for lo, digits in ring.digit_blocks():
        if m is not None:
            prod = ring.gemm_mod(digits, lmat)
            hits = np.flatnonzero((prod == 0).all(axis=1)) + lo
        else:
            idx = np.arange(lo, lo + digits.shape[0], dtype=np.int64)
            prod = ring.mul_arr(np.full(idx.size, aidx, dtype=np.int64), idx)
            hits = idx[prod == ring.zero]
        found.append(hits)
        swept += digits.shape[0]
        if swept >= max_pairs and swept < ring.size:
            members = np.concatenate(found)
            return Annihilator(ring, aidx, complete=False, count=int(members.size), members=members)
    members = np.concatenate(found) if found else np.zeros(0, dtype=np.int64)
    return Annihilator(ring, aidx, complete=True, count=int(members.size), members=members)
