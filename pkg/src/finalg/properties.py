"""Witness-producing decision procedures for ring-theoretic properties.

Each checker returns a PropertyVerdict: Holds (certified by exhausting the
search space), Fails (with a witness that replays through the raw
definition), or Unknown (a budget ran out first).

Scan discipline:
  * canonical element order is the mixed-radix coefficient order (plain
    index order), and deterministic mode scans it ascending, so a Fails
    verdict carries the first witness in that order;
  * seeded-random mode samples scan positions from a fixed seed and can
    return Fails or Unknown but never Holds unless the space was in fact
    exhausted;
  * ``work`` counts candidate evaluations: pairs examined for the pair
    properties, enumerated (a, b, c) candidates for symmetric.  Linear
    algebra that rules a whole region out at once is charged as the region
    it covers.

Rings flagged commutative short-circuit reversible / symmetric / SI / duo
to Holds outright.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .groupring import GroupRing, span_member_indices
from .rings import FiniteRing, RingCapError, Zmod, nilpotents

HOLDS = "Holds"
FAILS = "Fails"
UNKNOWN = "Unknown"

_AUTO_TABLE_CAP = 1024

PROPERTY_NAMES = (
    "reduced",
    "reversible",
    "symmetric",
    "si",
    "duo-left",
    "duo-right",
    "duo",
    "2primal",
)


@dataclass(frozen=True)
class Budget:
    """Search budget: evaluation caps plus the scan mode."""

    max_pairs: int = 1 << 24
    max_triples: int = 1 << 26
    mode: str = "det"  # "det" | "rand"
    seed: int | None = None

    def __post_init__(self):
        if self.max_pairs <= 0 or self.max_triples <= 0:
            raise ValueError("budget counts must be positive")
        if self.mode not in ("det", "rand"):
            raise ValueError(f"unknown budget mode {self.mode!r}")

    @property
    def effective_seed(self) -> int:
        return 0 if self.seed is None else self.seed


@dataclass
class PropertyVerdict:
    """Outcome of one property check on one ring."""

    ring: str
    property: str
    status: str
    witness: tuple[int, ...] | None
    witness_text: tuple[str, ...] | None
    certified: bool
    work: int
    mode: str
    seed: int | None
    notes: str = ""

    def __post_init__(self):
        if self.status == FAILS and not self.witness:
            raise ValueError("Fails verdict requires a witness")
        if self.status == HOLDS and not self.certified:
            raise ValueError("Holds verdict must be certified")

    @property
    def definite(self) -> bool:
        return self.status in (HOLDS, FAILS)

    def to_json(self) -> dict:
        out = {
            "ring": self.ring,
            "property": self.property,
            "status": self.status,
            "certified": self.certified,
            "work": self.work,
            "mode": self.mode,
        }
        if self.witness is not None:
            out["witness"] = {
                "indices": [int(w) for w in self.witness],
                "rendering": list(self.witness_text or ()),
            }
        if self.mode == "rand":
            out["seed"] = self.seed
        if self.notes:
            out["notes"] = self.notes
        return out


class _Meter:
    def __init__(self, limit: int):
        self.limit = limit
        self.work = 0

    def charge(self, k: int) -> None:
        self.work += int(k)

    @property
    def exhausted(self) -> bool:
        return self.work >= self.limit

    def room_for(self, k: int) -> bool:
        return self.work + k <= self.limit


def _verdict(r, prop, status, witness, certified, meter, budget, notes=""):
    text = tuple(r.format_element(int(w)) for w in witness) if witness else None
    return PropertyVerdict(
        ring=r.label,
        property=prop,
        status=status,
        witness=tuple(int(w) for w in witness) if witness else None,
        witness_text=text,
        certified=certified,
        work=meter.work if meter else 0,
        mode=budget.mode,
        seed=budget.effective_seed if budget.mode == "rand" else None,
        notes=notes,
    )


def _commutative_holds(r, prop, budget):
    meter = _Meter(1)
    return _verdict(r, prop, HOLDS, None, True, meter, budget, notes="commutative short-circuit")


def _tables_for(r: FiniteRing):
    if getattr(r, "_tables", None) is not None:
        return r._tables
    if r.size <= _AUTO_TABLE_CAP:
        return r.op_tables()
    return None


def _in_sorted(vals: np.ndarray, sorted_arr: np.ndarray) -> np.ndarray:
    pos = np.searchsorted(sorted_arr, vals)
    pos = np.minimum(pos, sorted_arr.size - 1)
    return sorted_arr[pos] == vals


def _a_order(r, budget, skip_zero: bool):
    """Scan order over first components: ascending in det mode, seeded draws in rand mode."""
    lo = 1 if skip_zero else 0
    if budget.mode == "det":
        return iter(range(lo, r.size))
    rng = np.random.default_rng(budget.effective_seed)

    def draws():
        while True:
            yield int(rng.integers(lo, r.size))

    return draws()


# -- witness replay -------------------------------------------------------------


def replay_witness(r: FiniteRing, prop: str, witness: tuple[int, ...], notes: str = "") -> bool:
    """Re-evaluate the defining condition of the property on a witness."""
    if prop == "reduced":
        (w,) = witness
        cur, rounds = w, max(int(math.ceil(math.log2(max(r.size, 2)))) + 1, 2)
        for _ in range(rounds):
            cur = r.mul(cur, cur)
        return w != r.zero and cur == r.zero
    if prop == "reversible":
        a, b = witness
        return r.mul(a, b) == r.zero and r.mul(b, a) != r.zero
    if prop == "symmetric":
        a, b, c = witness
        return r.mul(r.mul(a, b), c) == r.zero and r.mul(r.mul(a, c), b) != r.zero
    if prop == "si":
        a, x, b = witness
        return r.mul(a, b) == r.zero and r.mul(r.mul(a, x), b) != r.zero
    if prop == "duo":
        side = "duo-left" if "left" in notes else "duo-right"
        return replay_witness(r, side, witness)
    if prop in ("duo-right", "duo-left"):
        a, x = witness
        block = 4096
        target = r.mul(x, a) if prop == "duo-right" else r.mul(a, x)
        for lo in range(0, r.size, block):
            ts = np.arange(lo, min(lo + block, r.size), dtype=np.int64)
            a_fill = np.full(ts.size, a, dtype=np.int64)
            prods = r.mul_arr(a_fill, ts) if prop == "duo-right" else r.mul_arr(ts, a_fill)
            if (prods == target).any():
                return False
        return True
    if prop == "2primal":
        nilset = set(int(v) for v in nilpotents(r))
        if len(witness) != 2:
            return False
        u, v = witness
        if "addition" in notes:
            return u in nilset and v in nilset and r.add(u, v) not in nilset
        return u in nilset and (r.mul(u, v) not in nilset or r.mul(v, u) not in nilset)
    raise ValueError(f"no replay rule for property {prop!r}")


def _checked(r, prop, witness, meter, budget, notes=""):
    assert replay_witness(r, prop, tuple(int(w) for w in witness), notes), (
        f"internal error: witness {witness} for {prop} on {r.label} does not replay"
    )
    return _verdict(r, prop, FAILS, witness, False, meter, budget, notes=notes)


# -- reduced ---------------------------------------------------------------------


def check_reduced(r: FiniteRing, budget: Budget | None = None) -> PropertyVerdict:
    """Holds iff the only nilpotent is zero; Fails carries the first nonzero one."""
    budget = budget or Budget()
    meter = _Meter(budget.max_pairs)
    rounds = max(int(math.ceil(math.log2(max(r.size, 2)))) + 1, 2)
    tabs = _tables_for(r)
    if tabs is not None:
        _, mul, _ = tabs
        v = np.arange(r.size, dtype=np.int64)
        for _ in range(rounds):
            v = mul[v, v]
        meter.charge(r.size)
        nil = np.flatnonzero(v == r.zero)
        nil = nil[nil != r.zero]
        if nil.size:
            return _checked(r, "reduced", (int(nil[0]),), meter, budget)
        return _verdict(r, "reduced", HOLDS, None, True, meter, budget)
    block = 1 << 14
    for lo in range(0, r.size, block):
        if not meter.room_for(block):
            return _verdict(r, "reduced", UNKNOWN, None, False, meter, budget,
                            notes="element budget exhausted")
        idx = np.arange(lo, min(lo + block, r.size), dtype=np.int64)
        v = idx.copy()
        for _ in range(rounds):
            v = r.mul_arr(v, v)
        meter.charge(idx.size)
        hits = idx[(v == r.zero) & (idx != r.zero)]
        if hits.size:
            return _checked(r, "reduced", (int(hits[0]),), meter, budget)
    return _verdict(r, "reduced", HOLDS, None, True, meter, budget)


# -- reversible -------------------------------------------------------------------


def _eq1_seed_candidates(gr: GroupRing) -> list[tuple[int, int]]:
    """Zero-divisor candidates a = g(1-x), b = 1 + x + ... + x^(n-1)."""
    group, base = gr.group, gr.base
    out, seen = [], set()
    one, neg_one = base.one, base.neg(base.one)
    for x in range(1, group.order):
        n = group.element_order(x)
        svec = np.zeros(group.order, dtype=np.int64)
        cur = 0
        for _ in range(n):
            svec[cur] = base.add(int(svec[cur]), one)
            cur = group.mul(cur, x)
        b = gr.encode(svec)
        for g in range(group.order):
            avec = np.zeros(group.order, dtype=np.int64)
            avec[g] = one
            gx = group.mul(g, x)
            avec[gx] = base.add(int(avec[gx]), neg_one)
            a = gr.encode(avec)
            if (a, b) not in seen:
                seen.add((a, b))
                out.append((a, b))
    return out


def _try_seeds(r, meter) -> tuple[int, int] | None:
    if not isinstance(r, GroupRing):
        return None
    for a, b in _eq1_seed_candidates(r):
        meter.charge(1)
        if r.mul(a, b) == r.zero and r.mul(b, a) != r.zero:
            return (a, b)
    return None


def _rev_scan_table(r, tabs, meter, budget, a_cutoff):
    _, mul, _ = tabs
    for a in _a_order(r, budget, skip_zero=False):
        if a_cutoff is not None and budget.mode == "det" and a > a_cutoff:
            return None, True
        if not meter.room_for(r.size):
            return None, False
        meter.charge(r.size)
        row = mul[a]
        ann = np.flatnonzero(row == r.zero)
        if ann.size:
            ba = mul[ann, a]
            bad = ann[ba != r.zero]
            if bad.size:
                return (int(a), int(bad[0])), True
        if budget.mode == "rand" and meter.exhausted:
            return None, False
        if budget.mode == "det" and a == r.size - 1:
            return None, True
    return None, False


def _annihilator_members(gr: GroupRing, a: int):
    """Sorted annihilator member indices of a, for a field base."""
    base = gr.base
    digits = gr.decode(a)
    lmat = gr.left_matrix_from_digits(digits)
    if isinstance(base, Zmod):
        basis = linalg.nullspace_mod_p(lmat, base.n)
    else:
        rows = [[int(v) for v in row] for row in lmat]
        basis = np.array(linalg.nullspace_field(rows, base), dtype=np.int64).reshape(-1, gr.n)
    return span_member_indices(gr, basis), basis


def _rev_scan_gr_field(r: GroupRing, meter, budget, a_cutoff):
    covered_all = budget.mode == "det"
    for a in _a_order(r, budget, skip_zero=True):
        # a = 0 never yields a witness: b*0 = 0 for every b
        if a_cutoff is not None and budget.mode == "det" and a > a_cutoff:
            return None, True
        members, _ = _annihilator_members(r, a)
        if not meter.room_for(members.size):
            return None, False
        meter.charge(members.size)
        if members.size > 1:
            digits = r.decode_arr(members)
            rmat = r.right_matrix_from_digits(r.decode(a))
            if isinstance(r.base, Zmod):
                ba = r.gemm_mod(digits, rmat)
            else:
                ba = r.decode_arr(r.mul_arr(members, np.full(members.size, a, dtype=np.int64)))
            bad = members[(ba != 0).any(axis=1)]
            if bad.size:
                return (int(a), int(bad[0])), True
        if budget.mode == "det" and a == r.size - 1:
            return None, covered_all
        if budget.mode == "rand" and meter.exhausted:
            return None, False
    return None, False


def _rev_scan_gr_sweep(r: GroupRing, meter, budget, a_cutoff):
    m = r.residue_modulus
    for a in _a_order(r, budget, skip_zero=True):
        if a_cutoff is not None and budget.mode == "det" and a > a_cutoff:
            return None, True
        if not meter.room_for(r.size):
            return None, False
        adig = r.decode(a)
        lmat = r.left_matrix_from_digits(adig)
        rmat = r.right_matrix_from_digits(adig)
        for lo, digits in r.digit_blocks(block=1 << 16):
            meter.charge(digits.shape[0])
            if m is not None:
                prod = r.gemm_mod(digits, lmat)
                zero_rows = np.flatnonzero((prod == 0).all(axis=1))
            else:
                idx = np.arange(lo, lo + digits.shape[0], dtype=np.int64)
                prod = r.mul_arr(np.full(idx.size, a, dtype=np.int64), idx)
                zero_rows = np.flatnonzero(prod == r.zero)
            if zero_rows.size:
                if m is not None:
                    ba = r.gemm_mod(digits[zero_rows], rmat)
                    bad = zero_rows[(ba != 0).any(axis=1)]
                else:
                    bs = zero_rows + lo
                    ba = r.mul_arr(bs, np.full(bs.size, a, dtype=np.int64))
                    bad = zero_rows[ba != r.zero]
                if bad.size:
                    return (int(a), int(bad[0] + lo)), True
        if budget.mode == "det" and a == r.size - 1:
            return None, True
        if meter.exhausted:
            return None, False
    return None, False


def _rev_scan_generic(r, meter, budget, a_cutoff):
    for a in _a_order(r, budget, skip_zero=False):
        if a_cutoff is not None and budget.mode == "det" and a > a_cutoff:
            return None, True
        for b in range(r.size):
            if meter.exhausted:
                return None, False
            meter.charge(1)
            if r.mul(a, b) == r.zero and r.mul(b, a) != r.zero:
                return (a, b), True
        if budget.mode == "det" and a == r.size - 1:
            return None, True
    return None, False


def check_reversible(r: FiniteRing, budget: Budget | None = None) -> PropertyVerdict:
    """ab = 0 implies ba = 0.

    Group rings first try the seeded zero-divisor candidates built from
    g(1-x) against the cyclic-subgroup sum; carriers over field bases then
    enumerate each left-multiplication nullspace, other group rings sweep
    annihilators in streamed blocks, small rings scan their tables, and
    anything else falls back to a plain pair loop.
    """
    budget = budget or Budget()
    if r.commutative:
        return _commutative_holds(r, "reversible", budget)
    meter = _Meter(budget.max_pairs)
    seed_hit = _try_seeds(r, meter)
    if seed_hit is not None and budget.mode == "rand":
        return _checked(r, "reversible", seed_hit, meter, budget, notes="seeded zero-divisor candidate")
    a_cutoff = seed_hit[0] if seed_hit is not None else None

    tabs = _tables_for(r)
    if tabs is not None:
        witness, complete = _rev_scan_table(r, tabs, meter, budget, a_cutoff)
    elif isinstance(r, GroupRing) and r.base.is_field:
        witness, complete = _rev_scan_gr_field(r, meter, budget, a_cutoff)
    elif isinstance(r, GroupRing):
        witness, complete = _rev_scan_gr_sweep(r, meter, budget, a_cutoff)
    else:
        witness, complete = _rev_scan_generic(r, meter, budget, a_cutoff)

    if witness is None and seed_hit is not None:
        witness = seed_hit
        notes = "seeded zero-divisor candidate (scan prefix found nothing earlier)"
        return _checked(r, "reversible", witness, meter, budget, notes=notes)
    if witness is not None:
        if seed_hit is not None and (seed_hit[0], seed_hit[1]) < (witness[0], witness[1]):
            witness = seed_hit
        return _checked(r, "reversible", witness, meter, budget)
    if complete and budget.mode == "det":
        return _verdict(r, "reversible", HOLDS, None, True, meter, budget)
    return _verdict(r, "reversible", UNKNOWN, None, False, meter, budget,
                    notes="pair budget exhausted before the space was covered")


# -- SI -----------------------------------------------------------------------------


def check_si(r: FiniteRing, budget: Budget | None = None) -> PropertyVerdict:
    """ab = 0 implies aRb = {0}; witness tuples are (a, x, b)."""
    budget = budget or Budget()
    if r.commutative:
        return _commutative_holds(r, "si", budget)
    meter = _Meter(budget.max_pairs)
    tabs = _tables_for(r)
    if tabs is not None:
        for a in _a_order(r, budget, skip_zero=False):
            if not meter.room_for(r.size):
                return _verdict(r, "si", UNKNOWN, None, False, meter, budget,
                                notes="pair budget exhausted")
            meter.charge(r.size)
            _, mul, _ = tabs
            ann = np.flatnonzero(mul[a] == r.zero)
            if ann.size:
                probe = mul[np.ix_(mul[a], ann)]  # [x, b] -> (a x) b
                bad = np.argwhere(probe != r.zero)
                if bad.size:
                    x, b = bad[0]
                    return _checked(r, "si", (int(a), int(x), int(ann[b])), meter, budget)
            if budget.mode == "det" and a == r.size - 1:
                return _verdict(r, "si", HOLDS, None, True, meter, budget)
            if budget.mode == "rand" and meter.exhausted:
                break
        return _verdict(r, "si", UNKNOWN, None, False, meter, budget, notes="sampling found no witness")
    if isinstance(r, GroupRing):
        return _si_gr(r, meter, budget)
    # generic loops
    for a in _a_order(r, budget, skip_zero=True):
        for b in range(r.size):
            meter.charge(1)
            if meter.exhausted:
                return _verdict(r, "si", UNKNOWN, None, False, meter, budget, notes="pair budget exhausted")
            if r.mul(a, b) != r.zero:
                continue
            for x in range(r.size):
                if r.mul(r.mul(a, x), b) != r.zero:
                    return _checked(r, "si", (a, x, b), meter, budget)
        if budget.mode == "det" and a == r.size - 1:
            return _verdict(r, "si", HOLDS, None, True, meter, budget)
    return _verdict(r, "si", UNKNOWN, None, False, meter, budget, notes="pair budget exhausted")


def _si_probe_pair(r: GroupRing, a_digits, b_digits):
    """Lex-least x with a*x*b != 0, or None.  aRb = 0 iff L_a @ R_b = 0 over the base."""
    lmat = r.left_matrix_from_digits(a_digits)
    rmat = r.right_matrix_from_digits(b_digits)
    base = r.base
    if isinstance(base, Zmod):
        m = (lmat @ rmat) % base.n
    else:
        m = np.zeros((r.n, r.n), dtype=np.int64)
        for i in range(r.n):
            for j in range(r.n):
                acc = base.zero
                for k in range(r.n):
                    acc = base.add(acc, base.mul(int(lmat[i, k]), int(rmat[k, j])))
                m[i, j] = acc
    nz_cols = np.flatnonzero((m != r.base.zero).any(axis=0))
    if nz_cols.size == 0:
        return None
    # indices below base.size**j have support only on zero columns
    return int(r.base.size ** int(nz_cols[0]))


def _si_gr(r: GroupRing, meter, budget):
    m = r.residue_modulus
    field = r.base.is_field
    for a in _a_order(r, budget, skip_zero=True):
        # a = 0: a x b = 0 identically, no witness possible
        adig = r.decode(a)
        if field:
            members, _ = _annihilator_members(r, a)
            if not meter.room_for(members.size):
                return _verdict(r, "si", UNKNOWN, None, False, meter, budget, notes="pair budget exhausted")
            meter.charge(members.size)
            candidates = members[members != 0]
        else:
            lmat = r.left_matrix_from_digits(adig)
            found = []
            stop = False
            for lo, digits in r.digit_blocks(block=1 << 16):
                if not meter.room_for(digits.shape[0]):
                    stop = True
                    break
                meter.charge(digits.shape[0])
                if m is not None:
                    prod = r.gemm_mod(digits, lmat)
                    hits = np.flatnonzero((prod == 0).all(axis=1)) + lo
                else:
                    idx = np.arange(lo, lo + digits.shape[0], dtype=np.int64)
                    prod = r.mul_arr(np.full(idx.size, a, dtype=np.int64), idx)
                    hits = idx[prod == r.zero]
                found.append(hits)
            if stop:
                return _verdict(r, "si", UNKNOWN, None, False, meter, budget, notes="pair budget exhausted")
            candidates = np.concatenate(found) if found else np.zeros(0, dtype=np.int64)
            candidates = candidates[candidates != 0]
        best = None
        for b in candidates:
            x = _si_probe_pair(r, adig, r.decode(int(b)))
            if x is not None and (best is None or (x, int(b)) < best):
                best = (x, int(b))
        if best is not None:
            return _checked(r, "si", (int(a), best[0], best[1]), meter, budget)
        if budget.mode == "det" and a == r.size - 1:
            return _verdict(r, "si", HOLDS, None, True, meter, budget)
        if budget.mode == "rand" and meter.exhausted:
            return _verdict(r, "si", UNKNOWN, None, False, meter, budget, notes="sampling found no witness")
    return _verdict(r, "si", UNKNOWN, None, False, meter, budget, notes="pair budget exhausted")


# -- symmetric ------------------------------------------------------------------------


def check_symmetric(r: FiniteRing, budget: Budget | None = None) -> PropertyVerdict:
    """abc = 0 implies acb = 0; witness tuples are (a, b, c).

    Triples are enumerated as pairs (a, b) with c ranging over the right
    annihilator of ab.
    """
    budget = budget or Budget()
    if r.commutative:
        return _commutative_holds(r, "symmetric", budget)
    meter = _Meter(budget.max_triples)
    tabs = _tables_for(r)
    if tabs is not None:
        _, mul, _ = tabs
        for a in _a_order(r, budget, skip_zero=False):
            if not meter.room_for(r.size * r.size):
                return _verdict(r, "symmetric", UNKNOWN, None, False, meter, budget,
                                notes="triple budget exhausted")
            meter.charge(r.size * r.size)
            ab = mul[a]
            zero_bc = mul[ab] == r.zero          # [b, c]: (a b) c == 0
            acb = mul[mul[a]]                    # [c, b]: (a c) b
            bad = zero_bc & (acb.T != r.zero)
            if bad.any():
                b, c = np.argwhere(bad)[0]
                return _checked(r, "symmetric", (int(a), int(b), int(c)), meter, budget)
            if budget.mode == "det" and a == r.size - 1:
                return _verdict(r, "symmetric", HOLDS, None, True, meter, budget)
            if budget.mode == "rand" and meter.exhausted:
                break
        return _verdict(r, "symmetric", UNKNOWN, None, False, meter, budget,
                        notes="sampling found no witness")
    if isinstance(r, GroupRing):
        return _symmetric_gr(r, meter, budget)
    for a in _a_order(r, budget, skip_zero=True):
        for b in range(r.size):
            ab = r.mul(a, b)
            for c in range(r.size):
                meter.charge(1)
                if meter.exhausted:
                    return _verdict(r, "symmetric", UNKNOWN, None, False, meter, budget,
                                    notes="triple budget exhausted")
                if r.mul(ab, c) == r.zero and r.mul(r.mul(a, c), b) != r.zero:
                    return _checked(r, "symmetric", (a, b, c), meter, budget)
        if budget.mode == "det" and a == r.size - 1:
            return _verdict(r, "symmetric", HOLDS, None, True, meter, budget)
    return _verdict(r, "symmetric", UNKNOWN, None, False, meter, budget, notes="triple budget exhausted")


def _symmetric_gr(r: GroupRing, meter, budget):
    """Pair-driven scan; only field bases get the nullspace treatment."""
    base = r.base
    if not base.is_field or not isinstance(base, Zmod):
        return _verdict(r, "symmetric", UNKNOWN, None, False, meter, budget,
                        notes="no exhaustive strategy for this carrier within budget")
    p = base.n
    for a in _a_order(r, budget, skip_zero=True):
        # a = 0 makes both abc and acb vanish identically
        adig = r.decode(a)
        lmat_a = r.left_matrix_from_digits(adig)
        for b in range(r.size):
            bdig = r.decode(b)
            rmat_b = r.right_matrix_from_digits(bdig)
            ab = (lmat_a @ bdig) % p
            lmat_ab = r.left_matrix_from_digits(ab)
            basis = linalg.nullspace_mod_p(lmat_ab, p)
            kernel_count = p ** len(basis)
            if not meter.room_for(kernel_count):
                return _verdict(r, "symmetric", UNKNOWN, None, False, meter, budget,
                                notes="triple budget exhausted")
            meter.charge(kernel_count)
            if len(basis) == 0:
                continue
            m = (lmat_a @ rmat_b) % p
            # some kernel c with a c b != 0 exists iff ker(L_ab) is not inside ker(M)
            stacked = np.vstack([lmat_ab, m])
            _, piv_ab = linalg.rref_mod_p(lmat_ab, p)
            _, piv_st = linalg.rref_mod_p(stacked, p)
            if len(piv_st) == len(piv_ab):
                continue
            members = span_member_indices(r, basis)
            cand = r.decode_arr(members)
            vals = (cand @ m.T) % p
            bad = members[(vals != 0).any(axis=1)]
            if bad.size:
                return _checked(r, "symmetric", (int(a), int(b), int(bad[0])), meter, budget)
        if budget.mode == "det" and a == r.size - 1:
            return _verdict(r, "symmetric", HOLDS, None, True, meter, budget)
        if budget.mode == "rand" and meter.exhausted:
            break
    return _verdict(r, "symmetric", UNKNOWN, None, False, meter, budget,
                    notes="triple budget exhausted")


# -- duo --------------------------------------------------------------------------------


def _duo_one_side(r, side: str, budget, meter):
    """Right duo iff x a lies in aR for all a, x (left duo mirrored).

    With identity every one-sided ideal is a sum of principal ones, so the
    principal-ideal criterion is equivalent to the definition.
    """
    tabs = _tables_for(r)
    prop = f"duo-{side}"
    if tabs is not None:
        _, mul, _ = tabs
        for a in _a_order(r, budget, skip_zero=False):
            if not meter.room_for(2 * r.size):
                return _verdict(r, prop, UNKNOWN, None, False, meter, budget, notes="pair budget exhausted")
            meter.charge(2 * r.size)
            if side == "right":
                principal = np.unique(mul[a])
                others = mul[:, a]
            else:
                principal = np.unique(mul[:, a])
                others = mul[a]
            bad = np.flatnonzero(~_in_sorted(others, principal))
            if bad.size:
                return _checked(r, prop, (int(a), int(bad[0])), meter, budget)
            if budget.mode == "det" and a == r.size - 1:
                return _verdict(r, prop, HOLDS, None, True, meter, budget)
            if budget.mode == "rand" and meter.exhausted:
                break
        return _verdict(r, prop, UNKNOWN, None, False, meter, budget, notes="sampling found no witness")
    if isinstance(r, GroupRing) and r.residue_modulus is not None:
        for a in _a_order(r, budget, skip_zero=False):
            if not meter.room_for(2 * r.size):
                return _verdict(r, prop, UNKNOWN, None, False, meter, budget, notes="pair budget exhausted")
            meter.charge(2 * r.size)
            adig = r.decode(a)
            lmat = r.left_matrix_from_digits(adig)
            rmat = r.right_matrix_from_digits(adig)
            principal_chunks, other_chunks = [], []
            for _, digits in r.digit_blocks(block=1 << 16):
                pmat = lmat if side == "right" else rmat
                omat = rmat if side == "right" else lmat
                principal_chunks.append(r.encode_arr(r.gemm_mod(digits, pmat)))
                other_chunks.append(r.encode_arr(r.gemm_mod(digits, omat)))
            principal = np.unique(np.concatenate(principal_chunks))
            others = np.concatenate(other_chunks)
            bad = np.flatnonzero(~_in_sorted(others, principal))
            if bad.size:
                return _checked(r, prop, (int(a), int(bad[0])), meter, budget)
            if budget.mode == "det" and a == r.size - 1:
                return _verdict(r, prop, HOLDS, None, True, meter, budget)
            if budget.mode == "rand" and meter.exhausted:
                break
        return _verdict(r, prop, UNKNOWN, None, False, meter, budget, notes="sampling found no witness")
    for a in _a_order(r, budget, skip_zero=False):
        principal = set()
        for t in range(r.size):
            principal.add(r.mul(a, t) if side == "right" else r.mul(t, a))
        meter.charge(r.size)
        for x in range(r.size):
            meter.charge(1)
            if meter.exhausted:
                return _verdict(r, prop, UNKNOWN, None, False, meter, budget, notes="pair budget exhausted")
            val = r.mul(x, a) if side == "right" else r.mul(a, x)
            if val not in principal:
                return _checked(r, prop, (a, x), meter, budget)
        if budget.mode == "det" and a == r.size - 1:
            return _verdict(r, prop, HOLDS, None, True, meter, budget)
    return _verdict(r, prop, UNKNOWN, None, False, meter, budget, notes="pair budget exhausted")


def check_duo(r: FiniteRing, side: str = "both", budget: Budget | None = None) -> PropertyVerdict:
    """Every one-sided ideal two-sided, via the principal-ideal criterion."""
    budget = budget or Budget()
    if side not in ("left", "right", "both"):
        raise ValueError(f"unknown side {side!r}")
    if r.commutative:
        return _commutative_holds(r, "duo" if side == "both" else f"duo-{side}", budget)
    if side in ("left", "right"):
        return _duo_one_side(r, side, budget, _Meter(budget.max_pairs))
    meter = _Meter(budget.max_pairs)
    right = _duo_one_side(r, "right", budget, meter)
    if right.status == FAILS:
        return PropertyVerdict(r.label, "duo", FAILS, right.witness, right.witness_text,
                               False, meter.work, budget.mode,
                               right.seed, notes="right-side violation: " + (right.notes or "x*a outside a*R"))
    left = _duo_one_side(r, "left", budget, meter)
    if left.status == FAILS:
        return PropertyVerdict(r.label, "duo", FAILS, left.witness, left.witness_text,
                               False, meter.work, budget.mode,
                               left.seed, notes="left-side violation: " + (left.notes or "a*x outside R*a"))
    if right.status == HOLDS and left.status == HOLDS:
        return _verdict(r, "duo", HOLDS, None, True, meter, budget)
    return _verdict(r, "duo", UNKNOWN, None, False, meter, budget, notes="one side undecided")


# -- 2-primal ----------------------------------------------------------------------------


def check_two_primal(r: FiniteRing, budget: Budget | None = None) -> PropertyVerdict:
    """Holds iff the nilpotent set is an ideal.

    In a finite ring every nil ideal sits inside the prime radical, so the
    nilpotents forming a two-sided ideal forces the lower nilradical to be
    the whole nilpotent set; that equivalence is what gets decided here.
    """
    budget = budget or Budget()
    meter = _Meter(budget.max_pairs)
    note = "finite ring: nilpotents form an ideal iff the lower nilradical is all of them"
    try:
        nil = nilpotents(r)
    except RingCapError as e:
        return _verdict(r, "2primal", UNKNOWN, None, False, meter, budget, notes=str(e))
    nilset = nil  # sorted
    cost = nil.size * nil.size + 2 * nil.size * r.size
    if not meter.room_for(cost):
        return _verdict(r, "2primal", UNKNOWN, None, False, meter, budget,
                        notes="pair budget too small for the closure scan")
    meter.charge(cost)
    for u in nil:
        sums = r.add_arr(np.full(nil.size, int(u), dtype=np.int64), nil)
        bad = np.flatnonzero(~_in_sorted(sums, nilset))
        if bad.size:
            return _checked(r, "2primal", (int(u), int(nil[bad[0]])), meter, budget,
                            notes=note + "; witness violates closure under addition")
    block = 4096
    for u in nil:
        for lo in range(0, r.size, block):
            xs = np.arange(lo, min(lo + block, r.size), dtype=np.int64)
            u_fill = np.full(xs.size, int(u), dtype=np.int64)
            left = r.mul_arr(xs, u_fill)
            right = r.mul_arr(u_fill, xs)
            bad = np.flatnonzero(~(_in_sorted(left, nilset) & _in_sorted(right, nilset)))
            if bad.size:
                return _checked(r, "2primal", (int(u), int(xs[bad[0]])), meter, budget,
                                notes=note + "; witness violates multiplicative absorption")
    return _verdict(r, "2primal", HOLDS, None, True, meter, budget, notes=note)


# -- implication audit ---------------------------------------------------------------------

AUDIT_EDGES = (
    ("reduced", "symmetric"),
    ("reduced", "reversible"),
    ("symmetric", "reversible"),
    ("symmetric", "si"),
    ("reversible", "si"),
    ("duo", "duo-left"),
    ("duo", "duo-right"),
    ("duo-left", "si"),
    ("duo-right", "si"),
    ("duo", "si"),
    ("si", "2primal"),
)


@dataclass
class AuditRow:
    ring: str
    verdicts: dict[str, PropertyVerdict]

    def to_json(self) -> dict:
        return {"ring": self.ring, "verdicts": {k: v.to_json() for k, v in self.verdicts.items()}}


@dataclass
class AuditReport:
    rows: list[AuditRow] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    edges_skipped: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "rows": [row.to_json() for row in self.rows],
            "violations": self.violations,
            "edges_skipped": self.edges_skipped,
            "ok": self.ok,
        }

    def render_table(self) -> str:
        props = ["reduced", "symmetric", "reversible", "si", "duo-left", "duo-right", "duo", "2primal"]
        mark = {HOLDS: "+", FAILS: "-", UNKNOWN: "?"}
        width = max((len(row.ring) for row in self.rows), default=4) + 2
        head = "ring".ljust(width) + " ".join(p.rjust(10) for p in props)
        lines = [head, "-" * len(head)]
        for row in self.rows:
            cells = [mark[row.verdicts[p].status].rjust(10) for p in props]
            lines.append(row.ring.ljust(width) + " ".join(cells))
        lines.append("")
        if self.violations:
            lines.append("violated implications:")
            for v in self.violations:
                lines.append(f"  {v['ring']}: {v['from']} => {v['to']}")
        else:
            lines.append("no violated implications")
        return "\n".join(lines)


def evaluate_all_properties(r: FiniteRing, budget: Budget | None = None) -> dict[str, PropertyVerdict]:
    budget = budget or Budget()
    verdicts = {
        "reduced": check_reduced(r, budget),
        "symmetric": check_symmetric(r, budget),
        "reversible": check_reversible(r, budget),
        "si": check_si(r, budget),
        "duo-left": check_duo(r, "left", budget),
        "duo-right": check_duo(r, "right", budget),
        "2primal": check_two_primal(r, budget),
    }
    dl, dr = verdicts["duo-left"], verdicts["duo-right"]
    if dl.status == FAILS:
        both = PropertyVerdict(r.label, "duo", FAILS, dl.witness, dl.witness_text, False,
                               dl.work + dr.work, budget.mode, dl.seed, notes="left side fails")
    elif dr.status == FAILS:
        both = PropertyVerdict(r.label, "duo", FAILS, dr.witness, dr.witness_text, False,
                               dl.work + dr.work, budget.mode, dr.seed, notes="right side fails")
    elif dl.status == HOLDS and dr.status == HOLDS:
        both = PropertyVerdict(r.label, "duo", HOLDS, None, None, True,
                               dl.work + dr.work, budget.mode, dl.seed)
    else:
        both = PropertyVerdict(r.label, "duo", UNKNOWN, None, None, False,
                               dl.work + dr.work, budget.mode, dl.seed, notes="a side is undecided")
    verdicts["duo"] = both
    return verdicts


def implication_audit(corpus: list[FiniteRing], budget: Budget | None = None) -> AuditReport:
    """Evaluate all properties on every ring and assert the implication lattice.

    A violated edge needs a certified Holds on the left and a definite Fails
    on the right; Unknown verdicts mark the edge as not evaluated.
    """
    budget = budget or Budget()
    report = AuditReport()
    for r in corpus:
        verdicts = evaluate_all_properties(r, budget)
        report.rows.append(AuditRow(r.label, verdicts))
        for src, dst in AUDIT_EDGES:
            vs, vd = verdicts[src], verdicts[dst]
            if vs.status == UNKNOWN or vd.status == UNKNOWN:
                report.edges_skipped.append({"ring": r.label, "from": src, "to": dst})
                continue
            if vs.status == HOLDS and vs.certified and vd.status == FAILS:
                report.violations.append({
                    "ring": r.label,
                    "from": src,
                    "to": dst,
                    "witness": list(vd.witness or ()),
                })
    return report


# -- duo witness mirroring (classical involution) -----------------------------------------


def mirror_duo_witness(gr: GroupRing, verdict: PropertyVerdict) -> tuple[int, int]:
    """Map a one-sided duo witness through g -> g^-1 to the other side.

    A right-duo witness (a, x) with x*a outside a*R becomes (a*, x*) with
    a* x* outside R a*, and vice versa.
    """
    if verdict.status != FAILS or verdict.property not in ("duo-left", "duo-right"):
        raise ValueError("need a failing one-sided duo verdict")
    a, x = verdict.witness
    return gr.involution_index(a), gr.involution_index(x)
