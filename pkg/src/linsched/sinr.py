"""Affectance computation and SINR feasibility checking.

The affectance of link v caused by a set S is the sum over w in S (minus v
itself) of (len_w / d(s_w, r_v))^alpha: the relative interference each
concurrent sender inflicts on v's receiver.  Under linear powers the SINR
decoding condition for v inside slot S is equivalent to

    affectance_S(v) <= 1/beta - noise/c_l

and this additive form is what the scheduler and oracle manipulate.  Every
slot verdict is double-checked here against the raw power-ratio form of the
SINR condition; the two must always agree.

Terms where the cross distance is zero saturate to +inf, so any slot that
collocates a sender with a foreign receiver is infeasible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .model import Instance, Schedule, check_partition, rel_leq


def _ratio_pow(num: float, den: float, alpha: float) -> float:
    """(num/den)^alpha, saturating to +inf on zero denominator or overflow."""
    if den == 0.0:
        return math.inf
    try:
        return (num / den) ** alpha
    except OverflowError:
        return math.inf


def affectance_term(w: int, v: int, inst: Instance) -> float:
    """Interference of link w's sender on link v's receiver, relative form.

    Returns (len_w / d(s_w, r_v))^alpha; +inf when the cross distance is 0.
    Requires w != v.
    """
    if w == v:
        raise ValueError("affectance term requires two distinct links")
    return _ratio_pow(inst.link_length(w), inst.asym_distance(w, v), inst.params.alpha)


def affectance(v: int, members: Iterable[int], inst: Instance) -> float:
    """Total affectance on link v from the links in ``members``.

    v itself is excluded if present.  Terms are summed in ascending order to
    stabilize floating point; the result is additive over disjoint member
    sets and monotone under set inclusion.
    """
    terms = [affectance_term(w, v, inst) for w in members if w != v]
    terms.sort()
    return sum(terms)


@dataclass(frozen=True)
class FeasibilityResult:
    """Verdict for one slot.

    ``worst_margin`` is the affectance threshold minus the affectance at the
    worst-off link; negative means that link cannot decode.
    """

    feasible: bool
    worst_link: int | None
    worst_margin: float
    per_link_affectance: dict[int, float]


def _raw_slot_feasible(members: list[int], inst: Instance) -> bool:
    """SINR check in the raw power-ratio form with linear powers.

    Computes received powers c_l*len^alpha/d^alpha directly and compares
    signal against beta*(interference + noise) per link.  Kept independent
    of the affectance path as an internal cross-check.
    """
    p = inst.params
    ok = True
    for v in members:
        d_vv = inst.link_length(v)
        signal = _ratio_pow(d_vv, d_vv, p.alpha) * p.c_l  # c_l up to rounding
        received = []
        for w in members:
            if w == v:
                continue
            power_w = p.c_l * inst.link_length(w) ** p.alpha
            den = inst.asym_distance(w, v) ** p.alpha
            received.append(math.inf if den == 0.0 else power_w / den)
        received.sort()
        rhs = p.beta * (sum(received) + p.noise)
        if not rel_leq(rhs, signal):
            ok = False
    return ok


def slot_feasible(members: Iterable[int], inst: Instance) -> FeasibilityResult:
    """Decide whether all links in a slot can transmit concurrently.

    Feasible iff every member's affectance stays within the threshold
    1/beta - noise/c_l (relative tolerance 1e-9).
    """
    member_list = sorted(set(members))
    if not member_list:
        raise ValueError("slot_feasible requires a nonempty slot")
    thr = inst.params.affectance_threshold()
    per_link: dict[int, float] = {}
    worst_link: int | None = None
    worst_margin = math.inf
    feasible = True
    for v in member_list:
        a = affectance(v, member_list, inst)
        per_link[v] = a
        margin = thr - a
        if margin < worst_margin:
            worst_margin = margin
            worst_link = v
        if not rel_leq(a, thr):
            feasible = False
    assert feasible == _raw_slot_feasible(member_list, inst), (
        f"raw SINR and affectance-form verdicts diverged on slot {member_list}"
    )
    return FeasibilityResult(
        feasible=feasible,
        worst_link=worst_link,
        worst_margin=worst_margin,
        per_link_affectance=per_link,
    )


@dataclass(frozen=True)
class FeasibilityReport:
    """Partition check plus per-slot feasibility for a whole schedule."""

    partition_ok: bool
    partition_problems: tuple[str, ...]
    slot_results: tuple[FeasibilityResult, ...]
    feasible: bool

    @property
    def verdict(self) -> str:
        if not self.partition_ok:
            return "invalid-partition"
        return "feasible" if self.feasible else "infeasible"

    def first_infeasible_slot(self) -> int | None:
        for i, res in enumerate(self.slot_results):
            if not res.feasible:
                return i
        return None


def schedule_feasible(sched: Schedule, inst: Instance) -> FeasibilityReport:
    """Check a schedule: partition invariant first, then every slot."""
    problems = check_partition(sched, inst)
    results = tuple(
        slot_feasible(slot, inst) for slot in sched.slots if slot
    )
    all_ok = all(r.feasible for r in results)
    return FeasibilityReport(
        partition_ok=not problems,
        partition_problems=tuple(problems),
        slot_results=results,
        feasible=(not problems) and all_ok,
    )
