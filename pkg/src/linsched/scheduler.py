"""Greedy first-fit scheduler over length-sorted links.

Links are processed in descending order of length and each one is placed in
the first slot whose accumulated affectance on it does not exceed 1/c^alpha,
where c is the separation constant.  With c at or above the closed-form
threshold returned by ``compute_c`` (and a path-loss exponent above the
measure-dependent bound), every output slot is guaranteed feasible; smaller
c down to 1 still yields the schedule-length-versus-interference counting
bound, with feasibility verified instead of guaranteed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import Instance, PhysicalParams, Schedule, rel_leq
from .sinr import affectance


def compute_c0(alpha: float, K: float, m: float) -> float:
    """Closed-form interference budget constant for same-slot shorter links.

    Requires alpha * (m + 1 - ceil(m)) > m; raises ValueError otherwise.
    """
    ceil_m = math.ceil(m)
    gap = alpha * (m + 1.0 - ceil_m)
    if not gap > m:
        raise ValueError(
            f"alpha condition violated: need alpha > m/(m+1-ceil(m)) = "
            f"{m / (m + 1.0 - ceil_m)!r}, got alpha = {alpha!r}"
        )
    return 3.0**alpha * (2.0 * ceil_m * K * K) ** (alpha / m) * gap / (gap - m)


def compute_c(alpha: float, beta_eff: float, K: float, m: float) -> float:
    """Smallest separation constant with a feasibility guarantee.

    ``beta_eff`` is the reciprocal affectance threshold (equal to beta when
    the noise floor is zero).
    """
    if not beta_eff > 0:
        raise ValueError(f"beta_eff must be > 0, got {beta_eff!r}")
    c0 = compute_c0(alpha, K, m)
    return (beta_eff * (c0 + 1.0)) ** (1.0 / alpha) + 3.0


@dataclass(frozen=True)
class SchedulerConfig:
    """Separation constant for the greedy admission rule.

    Any c > 1 produces a valid partition satisfying the counting bound; the
    feasibility guarantee additionally needs c >= compute_c(...) and the
    spatial-separation properties need c > 3 (see ``guarantees_separation``).
    """

    c: float

    def __post_init__(self) -> None:
        if not self.c > 1:
            raise ValueError(f"separation constant c must be > 1, got {self.c!r}")

    @property
    def guarantees_separation(self) -> bool:
        return self.c > 3

    def admit_threshold(self, alpha: float) -> float:
        return self.c**-alpha

    @classmethod
    def auto(cls, params: PhysicalParams) -> "SchedulerConfig":
        """Config at the guaranteed-feasible threshold for these parameters."""
        return cls(c=compute_c(params.alpha, params.effective_beta(), params.K, params.m))


def _processing_order(inst: Instance) -> list[int]:
    # Descending length; ties broken by ascending link id for determinism.
    return sorted(range(inst.n), key=lambda i: (-inst.link_length(i), i))


def greedy_schedule(inst: Instance, cfg: SchedulerConfig) -> Schedule:
    """First-fit greedy over length-sorted links.

    Keeps per-slot member lists and evaluates each candidate's affectance
    incrementally against slot members only (O(n^2) term evaluations
    total).  The result is bit-identical to ``greedy_schedule_reference``.
    """
    alpha = inst.params.alpha
    thr = cfg.admit_threshold(alpha)
    lengths = inst.lengths
    metric = inst.metric
    links = inst.links
    slots: list[list[int]] = []
    for v in _processing_order(inst):
        rv = links[v].receiver
        placed = False
        for slot in slots:
            terms = []
            for w in slot:
                den = metric.distance(links[w].sender, rv)
                if den == 0.0:
                    terms.append(math.inf)
                    continue
                try:
                    terms.append((lengths[w] / den) ** alpha)
                except OverflowError:
                    terms.append(math.inf)
            terms.sort()
            if rel_leq(sum(terms), thr):
                slot.append(v)
                placed = True
                break
        if not placed:
            slots.append([v])
    return Schedule(slots=tuple(frozenset(slot) for slot in slots))


def greedy_schedule_reference(inst: Instance, cfg: SchedulerConfig) -> Schedule:
    """Same algorithm, recomputing each probe from scratch via ``affectance``.

    Slow naive twin kept as the correctness oracle for ``greedy_schedule``.
    """
    thr = cfg.admit_threshold(inst.params.alpha)
    slots: list[list[int]] = []
    for v in _processing_order(inst):
        for slot in slots:
            if rel_leq(affectance(v, slot, inst), thr):
                slot.append(v)
                break
        else:
            slots.append([v])
    return Schedule(slots=tuple(frozenset(slot) for slot in slots))


def admission_trace_ok(inst: Instance, cfg: SchedulerConfig, sched: Schedule) -> bool:
    """Replay a greedy output: each member must have been admissible against
    the slot members placed before it (earlier in the processing order)."""
    thr = cfg.admit_threshold(inst.params.alpha)
    order = {v: pos for pos, v in enumerate(_processing_order(inst))}
    for slot in sched.slots:
        members = sorted(slot, key=order.__getitem__)
        for i, v in enumerate(members):
            if not rel_leq(affectance(v, members[:i], inst), thr):
                return False
    return True


def separation_violations(
    inst: Instance, cfg: SchedulerConfig, sched: Schedule, rel: float = 1e-9
) -> list[tuple[int, int, str]]:
    """Spatial-separation check for co-scheduled pairs.

    For every pair v, w sharing a slot, with d = max of the two lengths, the
    greedy admission rule forces d(s_v, r_w) >= (c-2)d, d(s_w, r_v) >= (c-2)d
    and d(s_v, s_w) >= (c-3)d.  Returns violating (v, w, which) triples.
    """
    c = cfg.c
    out: list[tuple[int, int, str]] = []
    metric = inst.metric
    links = inst.links
    for slot in sched.slots:
        members = sorted(slot)
        for i, v in enumerate(members):
            for w in members[i + 1 :]:
                d = max(inst.link_length(v), inst.link_length(w))
                guard = 1.0 - rel
                if inst.asym_distance(v, w) < (c - 2.0) * d * guard:
                    out.append((v, w, "sender_v-receiver_w"))
                if inst.asym_distance(w, v) < (c - 2.0) * d * guard:
                    out.append((v, w, "sender_w-receiver_v"))
                ss = metric.distance(links[v].sender, links[w].sender)
                if ss < (c - 3.0) * d * guard:
                    out.append((v, w, "sender_v-sender_w"))
    return out
