"""Semisimple structure analysis via primitive central idempotents.

The decomposition enumerates central idempotents inside the (capped)
center, refines them to the primitive ones, and builds the corner rings
e*R*e as dense subring views.  Harnesses on top reproduce the semisimple
equivalence statements and the direct-sum composition law for the four
ring properties.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .groupring import GroupRing
from .groups import FiniteGroup
from .properties import (
    FAILS,
    HOLDS,
    Budget,
    PropertyVerdict,
    check_duo,
    check_reversible,
    check_si,
    check_symmetric,
)
from .rings import (
    FiniteRing,
    RingCapError,
    SubringView,
    center,
    direct_sum,
    is_division_ring,
    is_semisimple,
    two_sided_closure,
    units,
)

_CENTER_CAP = 1 << 16
_REASSEMBLY_EXHAUSTIVE = 1 << 16
_REASSEMBLY_SAMPLES = 10_000
_REASSEMBLY_SEED = 0xDEC0


@dataclass
class Decomposition:
    """Primitive central idempotents and the corner rings they cut out."""

    ring: str
    idempotents: list[int]
    factors: list[SubringView]
    factor_kinds: list[str]
    checks: dict = field(default_factory=dict)

    @property
    def factor_sizes(self) -> list[int]:
        return [f.size for f in self.factors]

    def to_json(self) -> dict:
        return {
            "ring": self.ring,
            "idempotents": [int(e) for e in self.idempotents],
            "factor_sizes": self.factor_sizes,
            "factor_kinds": list(self.factor_kinds),
            "checks": self.checks,
        }


def _corner_members(r: FiniteRing, e: int) -> np.ndarray:
    """Distinct values of e*x*e over the whole carrier."""
    block = 1 << 14
    chunks = []
    for lo in range(0, r.size, block):
        xs = np.arange(lo, min(lo + block, r.size), dtype=np.int64)
        e_fill = np.full(xs.size, e, dtype=np.int64)
        chunks.append(np.unique(r.mul_arr(e_fill, r.mul_arr(xs, e_fill))))
    return np.unique(np.concatenate(chunks))


def _is_simple(view: FiniteRing) -> bool:
    """No proper nonzero two-sided ideal: every nonzero element generates everything."""
    for v in range(1, view.size):
        if len(two_sided_closure(view, [v])) != view.size:
            return False
    return True


def central_idempotent_decomposition(r: FiniteRing, center_cap: int = _CENTER_CAP) -> Decomposition:
    """Split a ring along its primitive central idempotents.

    Primitivity is decided by exhaustive search for a central idempotent
    strictly under each candidate.
    """
    z = center(r)
    if z.size > center_cap:
        raise RingCapError(f"center of {r.label} has {z.size} elements, beyond the cap {center_cap}")
    sq = r.mul_arr(z, z)
    idem = z[sq == z]
    idem = idem[idem != r.zero]
    atoms = []
    for e in idem:
        e_fill = np.full(idem.size, int(e), dtype=np.int64)
        under = r.mul_arr(e_fill, idem)
        strictly_under = idem[(under == idem) & (idem != e)]
        if strictly_under.size == 0:
            atoms.append(int(e))
    atoms.sort()
    checks = {"central_idempotents": int(idem.size) + 1, "primitive": len(atoms)}
    # contract: pairwise orthogonal, summing to one
    total = r.zero
    for i, e in enumerate(atoms):
        total = r.add(total, e)
        for f in atoms[i + 1 :]:
            if r.mul(e, f) != r.zero or r.mul(f, e) != r.zero:
                raise RingCapError(f"idempotents {e}, {f} of {r.label} are not orthogonal")
    if total != r.one:
        raise RingCapError(f"primitive central idempotents of {r.label} do not sum to one")
    checks["orthogonal"] = True
    checks["sum_is_one"] = True
    factors, kinds = [], []
    for i, e in enumerate(atoms):
        members = _corner_members(r, e)
        view = SubringView(r, members, one_parent=e, label=f"{r.label}@e{i}")
        if is_division_ring(view):
            kind = "division-ring"
        elif _is_simple(view):
            kind = "matrix-like"
        else:
            kind = "other"
        factors.append(view)
        kinds.append(kind)
    sizes_product = int(np.prod([f.size for f in factors], dtype=np.int64))
    checks["sizes_multiply_to_ring"] = sizes_product == r.size
    if not checks["sizes_multiply_to_ring"]:
        raise RingCapError(f"factor sizes of {r.label} do not multiply back to the carrier")
    dec = Decomposition(r.label, atoms, factors, kinds, checks)
    checks["reassembly_bijective"] = _check_reassembly(r, dec)
    return dec


def _check_reassembly(r: FiniteRing, dec: Decomposition) -> bool:
    """a -> (e_i * a) must be an add/mul-respecting bijection onto the product."""
    k = len(dec.idempotents)
    if r.size <= _REASSEMBLY_EXHAUSTIVE:
        xs = np.arange(r.size, dtype=np.int64)
    else:
        rng = np.random.default_rng(_REASSEMBLY_SEED)
        xs = rng.integers(0, r.size, size=_REASSEMBLY_SAMPLES)
    proj = np.empty((xs.size, k), dtype=np.int64)
    for i, e in enumerate(dec.idempotents):
        proj[:, i] = r.mul_arr(np.full(xs.size, e, dtype=np.int64), xs)
    if r.size <= _REASSEMBLY_EXHAUSTIVE:
        if np.unique(proj, axis=0).shape[0] != r.size:
            return False
    rng = np.random.default_rng(_REASSEMBLY_SEED + 1)
    a = rng.integers(0, r.size, size=min(_REASSEMBLY_SAMPLES, 4096))
    b = rng.integers(0, r.size, size=a.size)
    for op_name in ("add", "mul"):
        op = r.add_arr if op_name == "add" else r.mul_arr
        combined = op(a, b)
        for e in dec.idempotents:
            e_fill = np.full(a.size, e, dtype=np.int64)
            lhs = r.mul_arr(e_fill, combined)
            ea, eb = r.mul_arr(e_fill, a), r.mul_arr(e_fill, b)
            rhs = op(ea, eb)
            if not np.array_equal(lhs, rhs):
                return False
    return True


# -- semisimple equivalence harness ------------------------------------------------------


@dataclass
class SemisimpleReport:
    """Joint outcome of the four property checks and the decomposition on RG."""

    base: str
    group: str
    ring: str
    base_semisimple: bool
    group_order_invertible: bool
    hypothesis_ok: bool
    rg_semisimple: bool | None = None
    verdicts: dict[str, PropertyVerdict] = field(default_factory=dict)
    decomposition: Decomposition | None = None
    all_factors_division: bool | None = None
    statuses_agree: bool | None = None
    matches_division_criterion: bool | None = None
    consistent: bool | None = None
    notes: str = ""

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "group": self.group,
            "ring": self.ring,
            "hypothesis_ok": self.hypothesis_ok,
            "base_semisimple": self.base_semisimple,
            "group_order_invertible": self.group_order_invertible,
            "rg_semisimple": self.rg_semisimple,
            "verdicts": {k: v.to_json() for k, v in self.verdicts.items()},
            "decomposition": self.decomposition.to_json() if self.decomposition else None,
            "all_factors_division": self.all_factors_division,
            "statuses_agree": self.statuses_agree,
            "matches_division_criterion": self.matches_division_criterion,
            "consistent": self.consistent,
            "notes": self.notes,
        }


def verify_semisimple_equivalences(
    base: FiniteRing, group: FiniteGroup, budget: Budget | None = None
) -> SemisimpleReport:
    """duo / symmetric / reversible / SI agree on RG and hold exactly when
    every decomposition factor is a division ring.

    Requires the group order to be invertible in a semisimple base; when
    that hypothesis fails the report says so and asserts nothing.
    """
    budget = budget or Budget()
    rg = GroupRing(base, group)
    base_ss = is_semisimple(base)
    unit_set = set(int(u) for u in units(base))
    order_inv = base.from_int(group.order) in unit_set
    rep = SemisimpleReport(
        base=base.label,
        group=group.label,
        ring=rg.label,
        base_semisimple=base_ss,
        group_order_invertible=order_inv,
        hypothesis_ok=base_ss and order_inv,
    )
    if not rep.hypothesis_ok:
        rep.notes = "hypothesis failed: need a semisimple base with |G| invertible; nothing asserted"
        return rep
    rep.rg_semisimple = is_semisimple(rg)
    rep.verdicts = {
        "duo": check_duo(rg, "both", budget),
        "reversible": check_reversible(rg, budget),
        "symmetric": check_symmetric(rg, budget),
        "si": check_si(rg, budget),
    }
    rep.decomposition = central_idempotent_decomposition(rg)
    rep.all_factors_division = all(k == "division-ring" for k in rep.decomposition.factor_kinds)
    statuses = {v.status for v in rep.verdicts.values()}
    if statuses <= {HOLDS, FAILS}:
        rep.statuses_agree = len(statuses) == 1
        shared_holds = statuses == {HOLDS}
        rep.matches_division_criterion = shared_holds == rep.all_factors_division
        rep.consistent = rep.statuses_agree and rep.matches_division_criterion and rep.rg_semisimple
    else:
        rep.notes = "some verdicts are Unknown; equivalence not assessed"
    return rep


# -- direct-sum composition harness --------------------------------------------------------


@dataclass
class DirectSumLemmaReport:
    parts: list[str]
    sum_ring: str
    per_property: dict[str, dict] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return all(row["consistent"] for row in self.per_property.values() if row["consistent"] is not None)

    def to_json(self) -> dict:
        return {
            "parts": self.parts,
            "sum_ring": self.sum_ring,
            "per_property": self.per_property,
            "consistent": self.consistent,
        }


_CHECKERS = {
    "duo": lambda r, b: check_duo(r, "both", b),
    "reversible": check_reversible,
    "symmetric": check_symmetric,
    "si": check_si,
}


def verify_direct_sum_lemma(
    parts: list[FiniteRing], budget: Budget | None = None
) -> DirectSumLemmaReport:
    """Each of the four properties holds on a direct sum iff it holds on
    every summand; verdicts on both sides come from the real checkers."""
    budget = budget or Budget()
    total = direct_sum(parts)
    rep = DirectSumLemmaReport([p.label for p in parts], total.label)
    for prop, checker in _CHECKERS.items():
        part_verdicts = [checker(p, budget) for p in parts]
        sum_verdict = checker(total, budget)
        if any(v.status == "Unknown" for v in part_verdicts) or sum_verdict.status == "Unknown":
            expected = None
            consistent = None
        else:
            expected = HOLDS if all(v.status == HOLDS for v in part_verdicts) else FAILS
            consistent = sum_verdict.status == expected
        rep.per_property[prop] = {
            "parts": [v.to_json() for v in part_verdicts],
            "sum": sum_verdict.to_json(),
            "expected_from_parts": expected,
            "consistent": consistent,
        }
    return rep


# -- factorwise property composition (semisimple base) --------------------------------------


@dataclass
class FactorwiseReport:
    base: str
    group: str
    factor_rings: list[str]
    per_property: dict[str, dict] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return all(row["consistent"] for row in self.per_property.values() if row["consistent"] is not None)

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "group": self.group,
            "factor_rings": self.factor_rings,
            "per_property": self.per_property,
            "consistent": self.consistent,
        }


def verify_factorwise_properties(
    base: FiniteRing, group: FiniteGroup, budget: Budget | None = None
) -> FactorwiseReport:
    """For a semisimple base split as corner rings D_i, each property of RG
    must equal the conjunction over the factor group rings D_i G."""
    budget = budget or Budget()
    if not is_semisimple(base):
        raise ValueError("factorwise composition needs a semisimple base")
    dec = central_idempotent_decomposition(base)
    factor_grs = [GroupRing(f, group) for f in dec.factors]
    rg = GroupRing(base, group)
    rep = FactorwiseReport(base.label, group.label, [g.label for g in factor_grs])
    for prop, checker in _CHECKERS.items():
        factor_verdicts = [checker(g, budget) for g in factor_grs]
        whole = checker(rg, budget)
        if any(v.status == "Unknown" for v in factor_verdicts) or whole.status == "Unknown":
            expected = None
            consistent = None
        else:
            expected = HOLDS if all(v.status == HOLDS for v in factor_verdicts) else FAILS
            consistent = whole.status == expected
        rep.per_property[prop] = {
            "factors": [v.to_json() for v in factor_verdicts],
            "whole": whole.to_json(),
            "expected_from_factors": expected,
            "consistent": consistent,
        }
    return rep
