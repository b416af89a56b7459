"""Cycle and circuit enumeration, chords, and chord-condition predicates.

Cycles are simple directed cycles stored with their smallest vertex first.
Circuits are closed trails (arcs pairwise distinct, vertices may repeat)
stored in their lexicographically least rotation; every cycle is also a
circuit.  Chords are position-indexed so repeated vertices on a circuit
contribute separately.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .digraph import Digraph
from .errors import BudgetExceededError

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class Cycle:
    """A simple directed cycle, canonical rotation: smallest vertex id first."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def arcs(self) -> frozenset:
        n = len(self.vertices)
        return frozenset(
            (self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)
        )


@dataclass(frozen=True)
class Circuit:
    """A closed directed trail, canonical rotation: lexicographically least."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def arcs(self) -> frozenset:
        n = len(self.vertices)
        return frozenset(
            (self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)
        )


ClosedWalk = Union[Cycle, Circuit]


@dataclass(frozen=True)
class Chord:
    """An off-cycle arc between positions of a cycle/circuit.

    length is the along-cycle distance (head_pos - tail_pos) mod n, always
    in 2..n-1.
    """

    tail_pos: int
    head_pos: int
    length: int


@dataclass(frozen=True)
class Violation:
    subject: tuple[int, ...]
    reason: str
    chords: tuple[Chord, ...] = ()


@dataclass(frozen=True)
class HypothesisReport:
    satisfied: bool
    violations: tuple[Violation, ...]
    cycles_examined: int


class CycleHypothesisVariant(enum.Enum):
    TWO_CONSECUTIVE = "two-consecutive"
    THREE_WITH_CROSSING = "three-with-crossing"


def enumerate_cycles(d: Digraph, min_len: int = 2, max_len: int | None = None) -> Iterator[Cycle]:
    """Yield every simple directed cycle with min_len <= length <= max_len,
    sorted by length then lexicographically, each in canonical rotation."""
    if max_len is None:
        max_len = d.vertex_count
    if min_len < 2:
        raise ValueError("min_len must be >= 2")
    found: list[tuple[int, ...]] = []
    adj = d.out_adj
    path: list[int] = []
    on_path = [False] * d.vertex_count

    def extend(root: int, u: int) -> None:
        for w in adj[u]:
            if w == root:
                if min_len <= len(path):
                    found.append(tuple(path))
            elif w > root and not on_path[w] and len(path) < max_len:
                path.append(w)
                on_path[w] = True
                extend(root, w)
                path.pop()
                on_path[w] = False

    for root in d.vertices():
        path = [root]
        extend(root, root)
    found.sort(key=lambda seq: (len(seq), seq))
    for seq in found:
        yield Cycle(seq)


def _canonical_rotation(seq: tuple[int, ...]) -> tuple[int, ...]:
    n = len(seq)
    return min(seq[i:] + seq[:i] for i in range(n))


def enumerate_circuits(
    d: Digraph,
    max_len: int,
    min_len: int = 2,
    budget: int = DEFAULT_BUDGET,
) -> Iterator[Circuit]:
    """Yield every closed trail up to max_len arcs, once per canonical
    rotation, sorted by length then lexicographically.

    Raises BudgetExceededError when the trail search exceeds `budget` steps.
    """
    if min_len < 2:
        raise ValueError("min_len must be >= 2")
    adj = d.out_adj
    found: set[tuple[int, ...]] = set()
    steps = 0

    def extend(root: int, u: int, trail: list[int], used: set) -> None:
        nonlocal steps
        for w in adj[u]:
            if w < root or (u, w) in used:
                continue
            steps += 1
            if steps > budget:
                raise BudgetExceededError(f"circuit enumeration exceeded {budget} steps")
            if w == root and len(trail) >= min_len:
                found.add(_canonical_rotation(tuple(trail)))
            if len(trail) < max_len:
                trail.append(w)
                used.add((u, w))
                extend(root, w, trail, used)
                used.discard((u, w))
                trail.pop()

    for root in d.vertices():
        extend(root, root, [root], set())
    for seq in sorted(found, key=lambda s: (len(s), s)):
        yield Circuit(seq)


def chords_of(d: Digraph, c: ClosedWalk) -> list[Chord]:
    """All position-indexed chords of the cycle/circuit, sorted by position."""
    seq = c.vertices
    n = len(seq)
    walk_arcs = c.arcs()
    result = []
    for i in range(n):
        for j in range(n):
            if i == j or j == (i + 1) % n:
                continue
            arc = (seq[i], seq[j])
            if arc in d.arcs and arc not in walk_arcs:
                result.append(Chord(i, j, (j - i) % n))
    result.sort(key=lambda ch: (ch.tail_pos, ch.head_pos))
    return result


def is_short_chord(ch: Chord) -> bool:
    return ch.length == 2


def are_consecutive(a: Chord, b: Chord, c: ClosedWalk) -> bool:
    """True iff b starts where a ends (directional; test both orders for the
    unordered notion)."""
    return a.head_pos == b.tail_pos


def are_crossed(a: Chord, b: Chord, c: ClosedWalk) -> bool:
    """True iff some rotation lift satisfies j < j' < j+k < j'+k'."""
    n = len(c.vertices)
    gap_tail = (b.tail_pos - a.tail_pos) % n
    gap_head = (a.head_pos - b.tail_pos) % n
    return 0 < gap_tail < a.length and 0 < gap_head < b.length


def _has_consecutive_pair(shorts: Sequence[Chord], c: ClosedWalk):
    for a in shorts:
        for b in shorts:
            if a is not b and are_consecutive(a, b, c):
                return a, b
    return None


def _cycle_ok(
    d: Digraph, cyc: ClosedWalk, variant: CycleHypothesisVariant
) -> Violation | None:
    shorts = [ch for ch in chords_of(d, cyc) if is_short_chord(ch)]
    if len(cyc) % 3 == 0:
        if shorts:
            return None
        return Violation(cyc.vertices, "length = 0 mod 3 but no short chord")
    pair = _has_consecutive_pair(shorts, cyc)
    if pair is None:
        return Violation(
            cyc.vertices,
            "length != 0 mod 3 but no two consecutive short chords",
            tuple(shorts),
        )
    if variant is CycleHypothesisVariant.TWO_CONSECUTIVE:
        return None
    # need, for some consecutive pair, a third short chord crossing either member
    for a in shorts:
        for b in shorts:
            if a is b or not are_consecutive(a, b, cyc):
                continue
            for third in shorts:
                if third is a or third is b:
                    continue
                if (
                    are_crossed(third, a, cyc)
                    or are_crossed(a, third, cyc)
                    or are_crossed(third, b, cyc)
                    or are_crossed(b, third, cyc)
                ):
                    return None
    return Violation(
        cyc.vertices,
        "length != 0 mod 3 but no third short chord crossing the consecutive pair",
        tuple(shorts),
    )


def check_cycle_hypothesis(
    d: Digraph,
    variant: CycleHypothesisVariant,
    min_cycle_len: int = 2,
) -> HypothesisReport:
    """Check the short-chord hypothesis over every simple cycle of length
    >= min_cycle_len."""
    violations = []
    examined = 0
    for cyc in enumerate_cycles(d, min_len=max(2, min_cycle_len)):
        examined += 1
        bad = _cycle_ok(d, cyc, variant)
        if bad is not None:
            violations.append(bad)
    return HypothesisReport(not violations, tuple(violations), examined)


def check_circuit_hypothesis(
    d: Digraph,
    max_len: int,
    min_circuit_len: int = 2,
    budget: int = DEFAULT_BUDGET,
) -> HypothesisReport:
    """Every circuit of length != 0 mod 3 (within the bounds) must have at
    least four distinct short chords."""
    violations = []
    examined = 0
    for circ in enumerate_circuits(d, max_len=max_len, min_len=min_circuit_len, budget=budget):
        examined += 1
        if len(circ) % 3 == 0:
            continue
        shorts = [ch for ch in chords_of(d, circ) if is_short_chord(ch)]
        if len(shorts) < 4:
            violations.append(
                Violation(
                    circ.vertices,
                    f"length != 0 mod 3 with only {len(shorts)} short chords",
                    tuple(shorts),
                )
            )
    return HypothesisReport(not violations, tuple(violations), examined)


def every_cycle_has_symmetric_arc(d: Digraph) -> HypothesisReport:
    """Duchet's hypothesis: each simple cycle contains an arc whose reverse
    is also present."""
    violations = []
    examined = 0
    for cyc in enumerate_cycles(d):
        examined += 1
        seq = cyc.vertices
        n = len(seq)
        if not any((seq[(i + 1) % n], seq[i]) in d.arcs for i in range(n)):
            violations.append(Violation(seq, "cycle without symmetric arc"))
    return HypothesisReport(not violations, tuple(violations), examined)
