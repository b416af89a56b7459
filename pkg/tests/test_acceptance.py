"""Acceptance gate: one test per published criterion, one printed verdict line
each.  All thresholds are exact (zero failures, byte equality); no tolerances.

Criteria 7, 8 and 9 are implemented exactly as stated and are expected to
FAIL: the underlying per-trace claims have genuine counterexamples (frozen in
test_substitution.py) that seeded sampling reproduces.  The failures below are
the harness doing its job — see the README's "reported findings" section.
"""

import math

from kernelkit import (
    CampaignParams,
    THREE_KERNEL,
    directed_cycle,
    find_kl_kernel,
    k_closure,
    run_campaign,
    run_substitution_method,
)
from kernelkit.generators import derive_trial_seed, random_digraph

SEED = 20260823


def verdict(num: int, ok: bool, detail: str) -> None:
    print(f"criterion {num:02d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num:02d}: {detail}"


def test_criterion_01_closure_lemma_exhaustive():
    failures = checked = 0
    for n in range(1, 5):
        report = run_campaign("closure-lemma", CampaignParams(n=n, exhaustive=True))
        failures += report.failures_total
        checked += report.instances_checked
    verdict(1, failures == 0, f"{checked} digraphs x all subsets, {failures} mismatches")


def test_criterion_02_closure_distance_law():
    bad = 0
    for trial in range(200):
        d = random_digraph(10, 0.2, derive_trial_seed(SEED, trial))
        raw = d._raw_matrix
        for k in (2, 3):
            closed = k_closure(d, k)
            for u in d.vertices():
                for v in d.vertices():
                    if u == v or raw[u][v] is None:
                        continue
                    if closed.distance(u, v).hops != math.ceil(raw[u][v] / k):
                        bad += 1
    verdict(2, bad == 0, f"200 digraphs (n=10) x k in {{2,3}}, {bad} law violations")


def test_criterion_03_duchet_implication():
    failures = accepted = 0
    for n in range(1, 5):
        report = run_campaign("duchet", CampaignParams(n=n, exhaustive=True))
        failures += report.failures_total
        accepted += report.occupancy["accepted"]
    verdict(3, failures == 0, f"{accepted} qualifying digraphs, {failures} without a kernel-perfect witness")


REVERSE_BATCHES = [(4, 200, 0.7), (5, 200, 0.7), (6, 100, 0.8)]


def test_criterion_04_reverse_path_lemma():
    failures = accepted = 0
    occ = {2: 0, 3: 0}
    for n, trials, prob in REVERSE_BATCHES:
        report = run_campaign(
            "reverse-path",
            CampaignParams(n=n, trials=trials, seed=SEED, extra_arc_prob=prob, min_cycle_len=3),
        )
        failures += report.failures_total
        accepted += report.occupancy["accepted"]
        for m in (2, 3):
            occ[m] += report.occupancy[f"accepted_min_cycle_len_{m}"]
    verdict(
        4,
        failures == 0 and accepted > 0,
        f"500 trials, occupancy min_len=2: {occ[2]}, min_len=3: {occ[3]}, {failures} arcs without a short return path",
    )


def test_criterion_05_three_chord_kernel_theorem():
    failures = accepted = 0
    for n, trials, prob in REVERSE_BATCHES:
        report = run_campaign(
            "theorem2",
            CampaignParams(n=n, trials=trials, seed=SEED, extra_arc_prob=prob, min_cycle_len=3),
        )
        failures += report.failures_total
        accepted += report.occupancy["accepted"]
    verdict(5, failures == 0, f"500 trials, {accepted} accepted, {failures} without a (3,2)-kernel")


def test_criterion_06_fixed_worked_instances():
    checks = []
    checks.append(find_kl_kernel(directed_cycle(3), THREE_KERNEL).witness == (0,))
    checks.append(find_kl_kernel(directed_cycle(4), THREE_KERNEL).found is False)
    checks.append(find_kl_kernel(directed_cycle(6), THREE_KERNEL).witness == (0, 3))

    c6 = run_substitution_method(directed_cycle(6), 0)
    checks.append(c6.pre_3_kernel == (0, 3) and c6.trace.p == 2)
    checks.append(c6.trace.set_at(1) == (5,) and c6.trace.set_at(2) == ())
    checks.append(c6.trace.set_at(3) == (3,) and c6.trace.set_at(4) == (2,))

    c3 = run_substitution_method(directed_cycle(3), 0)
    checks.append(c3.pre_3_kernel == (0,) and c3.is_3_kernel)

    c4 = run_substitution_method(directed_cycle(4), 0)
    checks.append(c4.pre_3_kernel == (0, 1) and not c4.is_3_kernel)

    bad = checks.count(False)
    verdict(6, bad == 0, f"{len(checks)} frozen facts, {bad} mismatches")


TRACE_BATCHES = [(5, 150), (6, 150), (7, 100), (8, 100)]


def test_criterion_07_pre_kernel_lemma_suite():
    failures = built = 0
    for n, trials in TRACE_BATCHES:
        report = run_campaign("pre-kernel-props", CampaignParams(n=n, trials=trials, seed=SEED))
        failures += report.failures_total
        built += report.occupancy["traces_built"]
    verdict(7, failures == 0, f"{built} traces from 500 trials, {failures} absorbence/shape violations")


def test_criterion_08_road_suite():
    failures = roads = 0
    for n, trials in TRACE_BATCHES:
        for property_id in ("roads", "unique-chord"):
            report = run_campaign(property_id, CampaignParams(n=n, trials=trials, seed=SEED))
            failures += report.failures_total
        roads += report.occupancy["roads_checked"]
    verdict(8, failures == 0, f"{roads} roads over 500 trials, {failures} missing/invalid roads or chord-label breaks")


def test_criterion_09_end_to_end_theorem():
    failures = accepted = 0
    canonical_c6 = False
    for n, trials, prob in [(6, 150, 0.08), (7, 100, 0.08)]:
        report = run_campaign(
            "theorem4", CampaignParams(n=n, trials=trials, seed=SEED, extra_arc_prob=prob)
        )
        failures += report.failures_total
        accepted += report.occupancy["accepted"]
        if n == 6:
            canonical_c6 = report.occupancy["canonical_cycle_accepted"]
    verdict(
        9,
        failures == 0 and canonical_c6,
        f"{accepted} accepted (C6 included: {canonical_c6}), {failures} theorem-pipeline failures",
    )


def test_criterion_10_determinism():
    stable = True
    for property_id, params in [
        ("closure-lemma", CampaignParams(n=3, exhaustive=True)),
        ("pre-kernel-props", CampaignParams(n=6, trials=60, seed=SEED)),
        ("theorem4", CampaignParams(n=6, trials=30, seed=SEED, extra_arc_prob=0.3)),
    ]:
        first = run_campaign(property_id, params).body_json()
        second = run_campaign(property_id, params).body_json()
        if first != second:
            stable = False
    verdict(10, stable, "repeated campaigns produce byte-identical report bodies")
