"""Theorem-verification campaigns behind `verify`.

Each campaign draws or enumerates instances deterministically, filters by
the relevant hypothesis class (reporting occupancy, with vacuous passes
flagged distinctly), checks the property, and collects failures up to a cap
instead of aborting.  Report bodies are byte-stable for fixed parameters;
wall time lives in a separate footer.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .cycles import (
    DEFAULT_BUDGET,
    CycleHypothesisVariant,
    check_circuit_hypothesis,
    check_cycle_hypothesis,
    every_cycle_has_symmetric_arc,
)
from .digraph import Digraph, directed_cycle
from .errors import BudgetExceededError, NoBaseKernelError, SubkernelMissingError
from .generators import (
    SplitMix64,
    derive_trial_seed,
    enumerate_labeled_digraphs,
    random_digraph,
    random_strongly_connected,
)
from .kernels import (
    KERNEL,
    THREE_KERNEL,
    _subsets_lex,
    find_kl_kernel,
    is_3_kernel_perfect,
    is_kernel_perfect,
    is_kl_kernel,
    is_quasi_3_kernel_perfect,
    k_closure,
)
from .substitution import (
    SubstitutionTrace,
    build_substitution_sequence,
    check_additive_inverse_property,
    check_pre_kernel_properties,
    check_unique_short_chord,
    find_road,
    run_substitution_method,
    validate_road,
    _kernel_of_induced,
)
from .digraph import as_vertex_set
from .errors import NoRoadFoundError
from .textio import format_digraph_text


@dataclass
class CampaignParams:
    n: int = 6
    trials: int = 100
    seed: int = 0
    exhaustive: bool = False
    max_failures: int = 10
    budget: int = DEFAULT_BUDGET
    min_cycle_len: int = 2
    arc_prob: float = 0.3
    extra_arc_prob: float = 0.15

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "exhaustive": self.exhaustive,
            "max_failures": self.max_failures,
            "budget": self.budget,
            "min_cycle_len": self.min_cycle_len,
            "arc_prob": self.arc_prob,
            "extra_arc_prob": self.extra_arc_prob,
        }


@dataclass
class VerificationReport:
    property_id: str
    parameters: dict
    instances_checked: int
    failures: list
    failures_total: int
    occupancy: dict
    vacuous: bool
    wall_time: float

    @property
    def result(self) -> str:
        if self.failures_total:
            return "fail"
        return "vacuous" if self.vacuous else "pass"

    @property
    def passed(self) -> bool:
        return self.failures_total == 0

    def body_dict(self) -> dict:
        return {
            "property_id": self.property_id,
            "parameters": self.parameters,
            "instances_checked": self.instances_checked,
            "failures": self.failures,
            "failures_total": self.failures_total,
            "occupancy": self.occupancy,
            "result": self.result,
        }

    def body_json(self) -> str:
        return json.dumps(self.body_dict(), sort_keys=True, indent=2)

    def to_json(self) -> str:
        doc = {
            "body": self.body_dict(),
            "footer": {"wall_time_s": round(self.wall_time, 6)},
        }
        return json.dumps(doc, sort_keys=True, indent=2)


class _Failures:
    def __init__(self, cap: int):
        self.cap = cap
        self.items: list = []
        self.total = 0

    def add(self, instance: Digraph, detail: str) -> None:
        self.total += 1
        if len(self.items) < self.cap:
            self.items.append(
                {"instance": format_digraph_text(instance), "detail": detail}
            )


def _random_stream(params: CampaignParams) -> Iterator[Digraph]:
    for trial in range(params.trials):
        yield random_digraph(params.n, params.arc_prob, derive_trial_seed(params.seed, trial))


def _sc_stream(params: CampaignParams) -> Iterator[Digraph]:
    if params.exhaustive:
        for d in enumerate_labeled_digraphs(params.n):
            if d.is_strongly_connected():
                yield d
    else:
        for trial in range(params.trials):
            yield random_strongly_connected(
                params.n, params.extra_arc_prob, derive_trial_seed(params.seed, trial)
            )


def _plain_stream(params: CampaignParams) -> Iterator[Digraph]:
    if params.exhaustive:
        yield from enumerate_labeled_digraphs(params.n)
    else:
        yield from _random_stream(params)


def _all_subsets(n: int) -> Iterator[tuple[int, ...]]:
    yield from _subsets_lex(n)


# -- individual campaigns ---------------------------------------------------


def _closure_lemma(params: CampaignParams, failures: _Failures) -> dict:
    checked = 0
    for d in _plain_stream(params):
        checked += 1
        closed = k_closure(d, 2)
        for subset in _all_subsets(d.vertex_count):
            left = is_kl_kernel(d, subset, THREE_KERNEL)
            right = is_kl_kernel(closed, subset, KERNEL)
            if left != right:
                failures.add(d, f"subset {list(subset)}: (3,2) {left} vs closure (2,1) {right}")
    return {"instances_checked": checked, "occupancy": {"tried": checked}, "vacuous": checked == 0}


def _duchet(params: CampaignParams, failures: _Failures) -> dict:
    tried = accepted = 0
    for d in _sc_stream(params):
        tried += 1
        if not every_cycle_has_symmetric_arc(d).satisfied:
            continue
        accepted += 1
        ok, counterexample = is_kernel_perfect(d)
        if not ok:
            failures.add(d, f"induced subdigraph {list(counterexample)} has no kernel")
    return {
        "instances_checked": accepted,
        "occupancy": {"tried": tried, "accepted": accepted},
        "vacuous": accepted == 0,
    }


def _reverse_path(params: CampaignParams, failures: _Failures) -> dict:
    tried = accepted = 0
    occupancy_by_len = {2: 0, 3: 0}
    for d in _sc_stream(params):
        tried += 1
        passing = {
            m: check_cycle_hypothesis(
                d, CycleHypothesisVariant.TWO_CONSECUTIVE, m
            ).satisfied
            for m in (2, 3)
        }
        for m in (2, 3):
            if passing[m]:
                occupancy_by_len[m] += 1
        if not passing.get(params.min_cycle_len, False):
            continue
        accepted += 1
        raw = d._raw_matrix
        for u, v in sorted(d.arcs):
            back = raw[v][u]
            if back is None or back > 2:
                failures.add(d, f"arc ({u}, {v}) with d({v}, {u}) = {back}")
    return {
        "instances_checked": accepted,
        "occupancy": {
            "tried": tried,
            "accepted": accepted,
            "accepted_min_cycle_len_2": occupancy_by_len[2],
            "accepted_min_cycle_len_3": occupancy_by_len[3],
        },
        "vacuous": accepted == 0,
    }


def _theorem2(params: CampaignParams, failures: _Failures) -> dict:
    tried = accepted = 0
    for d in _sc_stream(params):
        tried += 1
        if not check_cycle_hypothesis(
            d, CycleHypothesisVariant.THREE_WITH_CROSSING, params.min_cycle_len
        ).satisfied:
            continue
        accepted += 1
        if not find_kl_kernel(d, THREE_KERNEL).found:
            failures.add(d, "hypothesis satisfied but no 3-kernel found")
    return {
        "instances_checked": accepted,
        "occupancy": {"tried": tried, "accepted": accepted},
        "vacuous": accepted == 0,
    }


def _trace_stream(
    params: CampaignParams,
) -> Iterator[tuple[Digraph, int, SubstitutionTrace | None, str | None]]:
    """One (D, x0) attempt per trial; trace is None with a reason when the
    pipeline cannot start."""
    for trial in range(params.trials):
        ts = derive_trial_seed(params.seed, trial)
        d = random_strongly_connected(params.n, params.extra_arc_prob, ts)
        x0 = SplitMix64(ts + 1).next_u64() % params.n
        rest = as_vertex_set(v for v in d.vertices() if v != x0)
        base = _kernel_of_induced(d, rest)
        if base is None:
            yield d, x0, None, "no base kernel"
            continue
        try:
            trace = build_substitution_sequence(d, x0, base)
        except SubkernelMissingError:
            yield d, x0, None, "subkernel missing"
            continue
        yield d, x0, trace, None


def _roads_of(trace: SubstitutionTrace):
    for s in range(3 * trace.p + 1):
        for v in trace.set_at(s):
            yield s, v


def _pre_kernel_props(params: CampaignParams, failures: _Failures) -> dict:
    tried = built = 0
    skips: dict[str, int] = {}
    for d, x0, trace, reason in _trace_stream(params):
        tried += 1
        if trace is None:
            skips[reason] = skips.get(reason, 0) + 1
            continue
        built += 1
        report = check_pre_kernel_properties(trace)
        for u in report.absorption_violations:
            failures.add(d, f"x0={x0}: vertex {u} not 2-absorbed by the pre-3-kernel")
        for a, b, path, why in report.shape_violations:
            failures.add(d, f"x0={x0}: internal path {path} from {a} to {b}: {why}")
    return {
        "instances_checked": built,
        "occupancy": {"tried": tried, "traces_built": built, "skipped": skips},
        "vacuous": built == 0,
    }


def _roads(params: CampaignParams, failures: _Failures) -> dict:
    tried = built = roads_checked = 0
    skips: dict[str, int] = {}
    for d, x0, trace, reason in _trace_stream(params):
        tried += 1
        if trace is None:
            skips[reason] = skips.get(reason, 0) + 1
            continue
        built += 1
        for s, v in _roads_of(trace):
            try:
                road = find_road(trace, v, s)
            except NoRoadFoundError:
                failures.add(d, f"x0={x0}: no road of length {s} from {v}")
                continue
            roads_checked += 1
            validation = validate_road(trace, road.path)
            if not validation.passed:
                details = "; ".join(c.detail for c in validation.conditions if not c.ok)
                failures.add(d, f"x0={x0}: road {list(road.path)} invalid: {details}")
    return {
        "instances_checked": built,
        "occupancy": {
            "tried": tried,
            "traces_built": built,
            "roads_checked": roads_checked,
            "skipped": skips,
        },
        "vacuous": roads_checked == 0,
    }


def _unique_chord(params: CampaignParams, failures: _Failures) -> dict:
    tried = built = roads_checked = roads_with_skip = 0
    skips: dict[str, int] = {}
    for d, x0, trace, reason in _trace_stream(params):
        tried += 1
        if trace is None:
            skips[reason] = skips.get(reason, 0) + 1
            continue
        built += 1
        for s, v in _roads_of(trace):
            try:
                road = find_road(trace, v, s)
            except NoRoadFoundError:
                failures.add(d, f"x0={x0}: no road of length {s} from {v}")
                continue
            roads_checked += 1
            report = check_unique_short_chord(trace, road)
            if report.inner_positions:
                roads_with_skip += 1
            for violation in report.violations:
                failures.add(d, f"x0={x0}: road {list(road.path)}: {violation}")
    return {
        "instances_checked": built,
        "occupancy": {
            "tried": tried,
            "traces_built": built,
            "roads_checked": roads_checked,
            "roads_with_inner_skip_arc": roads_with_skip,
            "skipped": skips,
        },
        "vacuous": roads_with_skip == 0,
    }


def _additive_inverse(params: CampaignParams, failures: _Failures) -> dict:
    tried = accepted = built = roads_checked = 0
    skips: dict[str, int] = {}
    for d, x0, trace, reason in _trace_stream(params):
        tried += 1
        try:
            hypothesis = check_circuit_hypothesis(
                d, max_len=len(d.arcs), budget=params.budget
            )
        except BudgetExceededError:
            skips["budget"] = skips.get("budget", 0) + 1
            continue
        if not hypothesis.satisfied:
            skips["circuit hypothesis"] = skips.get("circuit hypothesis", 0) + 1
            continue
        accepted += 1
        if trace is None:
            skips[reason] = skips.get(reason, 0) + 1
            continue
        built += 1
        for s, v in _roads_of(trace):
            try:
                road = find_road(trace, v, s)
            except NoRoadFoundError:
                failures.add(d, f"x0={x0}: no road of length {s} from {v}")
                continue
            roads_checked += 1
            report = check_additive_inverse_property(trace, road)
            for pos, dist in report.violations:
                failures.add(
                    d,
                    f"x0={x0}: road {list(road.path)} position {pos}: "
                    f"d(x0, t_{pos}) = {dist} != -{pos} mod 3",
                )
    return {
        "instances_checked": built,
        "occupancy": {
            "tried": tried,
            "accepted": accepted,
            "traces_built": built,
            "roads_checked": roads_checked,
            "skipped": skips,
        },
        "vacuous": roads_checked == 0,
    }


def _theorem4(params: CampaignParams, failures: _Failures) -> dict:
    # The canonical directed n-cycle is checked first so the class, when
    # occupied at all, deterministically contains it.
    tried = accepted = 0
    skips: dict[str, int] = {}
    canonical_accepted = False

    def instances() -> Iterator[tuple[bool, Digraph]]:
        yield True, directed_cycle(params.n)
        for trial in range(params.trials):
            yield False, random_strongly_connected(
                params.n, params.extra_arc_prob, derive_trial_seed(params.seed, trial)
            )

    for is_canonical, d in instances():
        tried += 1
        if not d.is_strongly_connected():
            skips["not strongly connected"] = skips.get("not strongly connected", 0) + 1
            continue
        try:
            hypothesis = check_circuit_hypothesis(
                d, max_len=len(d.arcs), budget=params.budget
            )
        except BudgetExceededError:
            skips["budget"] = skips.get("budget", 0) + 1
            continue
        if not hypothesis.satisfied:
            skips["circuit hypothesis"] = skips.get("circuit hypothesis", 0) + 1
            continue
        if not is_quasi_3_kernel_perfect(d)[0]:
            skips["not quasi-3-kernel-perfect"] = skips.get("not quasi-3-kernel-perfect", 0) + 1
            continue
        accepted += 1
        if is_canonical:
            canonical_accepted = True

        ok, counterexample = is_3_kernel_perfect(d)
        if not ok:
            failures.add(d, f"not 3-kernel-perfect: subset {list(counterexample)}")
        for x0 in d.vertices():
            try:
                outcome = run_substitution_method(d, x0)
            except (NoBaseKernelError, SubkernelMissingError) as exc:
                failures.add(d, f"x0={x0}: substitution failed: {exc}")
                continue
            if not outcome.is_3_kernel:
                failures.add(
                    d,
                    f"x0={x0}: pre-3-kernel {list(outcome.pre_3_kernel)} is not a "
                    f"3-kernel (witness {outcome.failure_witness})",
                )
            for s, v in _roads_of(outcome.trace):
                try:
                    road = find_road(outcome.trace, v, s)
                except NoRoadFoundError:
                    failures.add(d, f"x0={x0}: no road of length {s} from {v}")
                    continue
                report = check_additive_inverse_property(outcome.trace, road)
                if not report.passed:
                    failures.add(
                        d, f"x0={x0}: additive-inverse fails on road {list(road.path)}"
                    )
    return {
        "instances_checked": accepted,
        "occupancy": {
            "tried": tried,
            "accepted": accepted,
            "canonical_cycle_accepted": canonical_accepted,
            "skipped": skips,
        },
        "vacuous": accepted == 0,
    }


CAMPAIGNS: dict[str, Callable[[CampaignParams, _Failures], dict]] = {
    "closure-lemma": _closure_lemma,
    "duchet": _duchet,
    "reverse-path": _reverse_path,
    "theorem2": _theorem2,
    "pre-kernel-props": _pre_kernel_props,
    "roads": _roads,
    "unique-chord": _unique_chord,
    "additive-inverse": _additive_inverse,
    "theorem4": _theorem4,
}


def run_campaign(property_id: str, params: CampaignParams) -> VerificationReport:
    if property_id not in CAMPAIGNS:
        raise KeyError(f"unknown property {property_id!r}; known: {sorted(CAMPAIGNS)}")
    failures = _Failures(params.max_failures)
    start = time.perf_counter()
    summary = CAMPAIGNS[property_id](params, failures)
    elapsed = time.perf_counter() - start
    return VerificationReport(
        property_id=property_id,
        parameters=params.as_dict(),
        instances_checked=summary["instances_checked"],
        failures=failures.items,
        failures_total=failures.total,
        occupancy=summary["occupancy"],
        vacuous=summary["vacuous"],
        wall_time=elapsed,
    )
