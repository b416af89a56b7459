"""Deterministic digraph generation: seeded random models, exhaustive
labeled enumeration, and rejection sampling of hypothesis classes.

The PRNG is splitmix64 (published constants), so corpora are bit-identical
across platforms and runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Union

from .cycles import (
    CycleHypothesisVariant,
    check_circuit_hypothesis,
    check_cycle_hypothesis,
    every_cycle_has_symmetric_arc,
    DEFAULT_BUDGET,
)
from .digraph import Digraph, build_digraph, iter_arc_pairs
from .errors import BudgetExceededError, SizeBoundError
from .kernels import is_quasi_3_kernel_perfect

_MASK64 = (1 << 64) - 1
EXHAUSTIVE_BOUND = 4


class SplitMix64:
    """splitmix64 with the published increment and mixing constants."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def unit(self) -> float:
        """Uniform in [0, 1)."""
        return self.next_u64() / 2**64

    def below(self, bound: int) -> int:
        return self.next_u64() % bound


def derive_trial_seed(seed: int, trial: int) -> int:
    """Per-trial seed: one splitmix64 step of seed XOR trial index."""
    return SplitMix64(seed ^ trial).next_u64()


def random_digraph(n: int, arc_prob: float, seed: int) -> Digraph:
    """Each ordered pair included independently with probability arc_prob,
    visited in lexicographic order."""
    if not 0 <= arc_prob <= 1:
        raise ValueError("arc_prob must be in [0, 1]")
    rng = SplitMix64(seed)
    arcs = [pair for pair in iter_arc_pairs(n) if rng.unit() < arc_prob]
    return build_digraph(n, arcs)


def random_strongly_connected(n: int, extra_arc_prob: float, seed: int) -> Digraph:
    """A seeded random Hamiltonian cycle plus independent extra arcs; strongly
    connected by construction."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= extra_arc_prob <= 1:
        raise ValueError("extra_arc_prob must be in [0, 1]")
    rng = SplitMix64(seed)
    perm = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    backbone = set()
    if n >= 2:
        backbone = {(perm[i], perm[(i + 1) % n]) for i in range(n)}
    extras = [
        pair
        for pair in iter_arc_pairs(n)
        if pair not in backbone and rng.unit() < extra_arc_prob
    ]
    return build_digraph(n, sorted(backbone) + extras)


def enumerate_labeled_digraphs(n: int) -> Iterator[Digraph]:
    """All labeled loopless digraphs on n vertices, in arc-bitmask order."""
    if n > EXHAUSTIVE_BOUND:
        raise SizeBoundError(f"exhaustive enumeration capped at n = {EXHAUSTIVE_BOUND}")
    pairs = list(iter_arc_pairs(n))
    for mask in range(1 << len(pairs)):
        arcs = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        yield build_digraph(n, arcs)


# -- hypothesis classes -----------------------------------------------------


@dataclass(frozen=True)
class Thm2Hypothesis:
    variant: CycleHypothesisVariant
    min_cycle_len: int = 2


@dataclass(frozen=True)
class CircuitHypothesisPlusQuasi:
    min_circuit_len: int = 2


@dataclass(frozen=True)
class DuchetHypothesis:
    pass


ClassId = Union[Thm2Hypothesis, CircuitHypothesisPlusQuasi, DuchetHypothesis]


@dataclass(frozen=True)
class ClassSample:
    class_id: ClassId
    instances: tuple[Digraph, ...]
    tried: int
    accepted: int
    skipped: int  # budget-exceeded trials, excluded from the class


def class_predicate(class_id: ClassId, d: Digraph, budget: int = DEFAULT_BUDGET) -> bool:
    if isinstance(class_id, Thm2Hypothesis):
        return check_cycle_hypothesis(d, class_id.variant, class_id.min_cycle_len).satisfied
    if isinstance(class_id, CircuitHypothesisPlusQuasi):
        report = check_circuit_hypothesis(
            d, max_len=len(d.arcs), min_circuit_len=class_id.min_circuit_len, budget=budget
        )
        return report.satisfied and is_quasi_3_kernel_perfect(d)[0]
    if isinstance(class_id, DuchetHypothesis):
        return every_cycle_has_symmetric_arc(d).satisfied
    raise TypeError(f"unknown class id {class_id!r}")


def sample_hypothesis_class(
    class_id: ClassId,
    n: int,
    trials: int,
    seed: int,
    extra_arc_prob: float = 0.15,
    budget: int = DEFAULT_BUDGET,
    generator: Callable[[int], Digraph] | None = None,
) -> ClassSample:
    """Rejection-sample strongly connected digraphs and keep those passing
    the class predicate, reporting occupancy honestly."""
    if generator is None:
        generator = lambda s: random_strongly_connected(n, extra_arc_prob, s)
    instances = []
    skipped = 0
    for trial in range(trials):
        d = generator(derive_trial_seed(seed, trial))
        try:
            if class_predicate(class_id, d, budget=budget):
                instances.append(d)
        except BudgetExceededError:
            skipped += 1
    return ClassSample(class_id, tuple(instances), trials, len(instances), skipped)
