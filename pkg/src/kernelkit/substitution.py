"""The 3-substitution method: sequences, pre-3-kernels, roads, and the
per-lemma checkers the verification harness runs on concrete traces.

Index conventions: set i of a sequence is N_i, with i = 3k, 3k+1, 3k+2 for
round k; positions on a road count from x0 (position 0) to the far end
(position s).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .digraph import Digraph, VertexSet, as_vertex_set
from .errors import (
    NoBaseKernelError,
    NoRoadFoundError,
    NotAKernelError,
    SubkernelMissingError,
)
from .kernels import (
    THREE_KERNEL,
    find_kl_kernel,
    is_k_independent,
    is_kl_kernel,
    is_l_absorbent,
)


def _kernel_of_induced(d: Digraph, subset: VertexSet) -> VertexSet | None:
    """Lexicographically least 3-kernel of D[subset], in original labels."""
    sub, mapping = d.induced(subset)
    result = find_kl_kernel(sub, THREE_KERNEL)
    if not result.found:
        return None
    inverse = {new: old for old, new in mapping.items()}
    return as_vertex_set(inverse[v] for v in result.witness)


@dataclass(frozen=True)
class SubstitutionTrace:
    """Full record of one 3-substitution run.

    added[k] = N_{3k}, removed_one[k] = N_{3k+1}, removed_two[k] = N_{3k+2},
    m_sets[k] = M_{3k}, for k = 0..p.  The terminal round p has empty
    removed sets.
    """

    digraph: Digraph
    x0: int
    base_kernel: VertexSet
    added: tuple[VertexSet, ...]
    removed_one: tuple[VertexSet, ...]
    removed_two: tuple[VertexSet, ...]
    m_sets: tuple[VertexSet, ...]
    p: int

    def set_at(self, i: int) -> VertexSet:
        """N_i, empty beyond the sequence."""
        k, r = divmod(i, 3)
        if i < 0 or k > self.p:
            return ()
        return (self.added, self.removed_one, self.removed_two)[r][k]

    @cached_property
    def _added_index(self) -> dict[int, int]:
        return {v: k for k, vs in enumerate(self.added) for v in vs}

    def added_round(self, v: int) -> int | None:
        """k such that v is in N_{3k}, if any."""
        return self._added_index.get(v)

    def intermediate_at(self, i: int) -> VertexSet:
        """N'_i (i = 3k+1 or 3k+2 with k < p), empty outside that range."""
        k, r = divmod(i, 3)
        if r == 0 or not 0 <= k < self.p:
            return ()
        source = self.added[k]
        if not source:
            return ()
        reach = self.digraph.in_neighborhood_at_distance(source, 1 if r == 1 else 2)
        return as_vertex_set(set(reach) - set(self.set_at(i)))

    def label_of(self, v: int, i: int) -> str:
        """Display label of v relative to position/index i."""
        if v in self.set_at(i):
            return f"N{i}"
        if v in self.intermediate_at(i):
            return f"N'{i}"
        return "-"


def intermediate_sets(trace: SubstitutionTrace) -> list[tuple[VertexSet, VertexSet]]:
    """(N'_{3k+1}, N'_{3k+2}) for k = 0..p-1."""
    return [
        (trace.intermediate_at(3 * k + 1), trace.intermediate_at(3 * k + 2))
        for k in range(trace.p)
    ]


def build_substitution_sequence(d: Digraph, x0: int, kernel: VertexSet) -> SubstitutionTrace:
    """Run the iterative set construction from x0 and a verified 3-kernel of
    D - x0 until the first round with nothing left to remove."""
    d.check_vertex(x0)
    kernel = as_vertex_set(kernel)
    rest = as_vertex_set(v for v in d.vertices() if v != x0)
    sub, mapping = d.induced(rest)
    if x0 in kernel or not is_kl_kernel(sub, [mapping[v] for v in kernel], THREE_KERNEL):
        raise NotAKernelError(f"{kernel} is not a 3-kernel of D - {x0}")

    kernel_set = set(kernel)
    added: list[VertexSet] = [(x0,)]
    removed_one: list[VertexSet] = []
    removed_two: list[VertexSet] = []
    m_sets: list[VertexSet] = [(x0,)]
    removed: set[int] = set()
    m_union: set[int] = {x0}
    added_union: set[int] = {x0}

    k = 0
    while True:
        current = added[k]
        if current:
            near = set(d.in_neighborhood_at_distance(current, 1))
            far = set(d.in_neighborhood_at_distance(current, 2))
        else:
            near = set()
            far = set()
        n1 = as_vertex_set((near & kernel_set) - removed)
        n2 = as_vertex_set((far & kernel_set) - removed - set(n1))
        removed_one.append(n1)
        removed_two.append(n2)
        if not n1 and not n2:
            p = k
            break
        removed |= set(n1) | set(n2)

        surviving = kernel_set - removed
        m_next = []
        for x in sorted(set(d.vertices()) - m_union):
            if x in surviving:
                continue  # retained kernel vertices stay in the pre-3-kernel
            cone = set(d.out_cone([x], 2))
            if cone & kernel_set <= removed and not cone & added_union:
                m_next.append(x)
        m_next = as_vertex_set(m_next)
        n_next = _kernel_of_induced(d, m_next)
        if n_next is None:
            raise SubkernelMissingError(f"D[{m_next}] has no 3-kernel")
        m_sets.append(m_next)
        added.append(n_next)
        m_union |= set(m_next)
        added_union |= set(n_next)
        k += 1

    trace = SubstitutionTrace(
        digraph=d,
        x0=x0,
        base_kernel=kernel,
        added=tuple(added),
        removed_one=tuple(removed_one),
        removed_two=tuple(removed_two),
        m_sets=tuple(m_sets),
        p=p,
    )
    _check_trace_invariants(trace)
    return trace


def _check_trace_invariants(trace: SubstitutionTrace) -> None:
    all_sets = []
    for i in range(3 * trace.p + 3):
        all_sets.append(trace.set_at(i))
    flat = [v for vs in all_sets for v in vs]
    assert len(flat) == len(set(flat)), "substitution sets must be disjoint"
    assert trace.added[0] == (trace.x0,) == trace.m_sets[0]
    kernel_set = set(trace.base_kernel)
    for k in range(trace.p + 1):
        assert set(trace.removed_one[k]) <= kernel_set
        assert set(trace.removed_two[k]) <= kernel_set
        if k >= 1:
            assert not set(trace.added[k]) & kernel_set
    assert trace.removed_one[trace.p] == () == trace.removed_two[trace.p]


def assemble_pre_3_kernel(trace: SubstitutionTrace) -> VertexSet:
    """(K minus all removed sets) union all added sets."""
    removed = {v for vs in trace.removed_one + trace.removed_two for v in vs}
    kept = set(trace.base_kernel) - removed
    for vs in trace.added:
        kept |= set(vs)
    return as_vertex_set(kept)


# -- roads ------------------------------------------------------------------


@dataclass(frozen=True)
class Road:
    """A (v, x0)-path (stored far-end first) with per-position set labels."""

    path: tuple[int, ...]  # (t_s, ..., t_0)
    labels: tuple[str, ...]  # aligned with path: labels[j] labels path[j]

    @property
    def length(self) -> int:
        return len(self.path) - 1

    def vertex_at(self, i: int) -> int:
        return self.path[self.length - i]


@dataclass(frozen=True)
class ConditionResult:
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class RoadValidation:
    conditions: tuple[ConditionResult, ConditionResult, ConditionResult, ConditionResult]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.conditions)


def _road_conditions(trace: SubstitutionTrace, path: tuple[int, ...]) -> RoadValidation:
    d = trace.digraph
    s = len(path) - 1
    at = lambda i: path[s - i]

    bad_arcs = [
        (path[j], path[j + 1]) for j in range(s) if (path[j], path[j + 1]) not in d.arcs
    ]
    if bad_arcs or len(set(path)) != len(path):
        broken = ConditionResult(False, f"not a path: {bad_arcs or 'repeated vertex'}")
        return RoadValidation((broken, broken, broken, broken))

    if s <= 3 * trace.p and at(s) in trace.set_at(s):
        c9 = ConditionResult(True)
    else:
        c9 = ConditionResult(False, f"t_{s}={at(s)} not in N_{s}")

    bad10 = []
    i = 0
    while 3 * i + 2 <= s:
        lhs = at(3 * i + 1) in trace.set_at(3 * i + 1)
        rhs = at(3 * i + 2) in trace.intermediate_at(3 * i + 2)
        if lhs != rhs:
            bad10.append(3 * i + 1)
        i += 1
    c10 = ConditionResult(not bad10, f"biconditional fails at positions {bad10}" if bad10 else "")

    bad11 = [3 * i for i in range(s // 3 + 1) if at(3 * i) not in trace.set_at(3 * i)]
    c11 = ConditionResult(not bad11, f"t_i not in N_i at positions {bad11}" if bad11 else "")

    bad12 = []
    for i in range(2, s + 1):
        if (at(i), at(i - 2)) not in d.arcs:
            continue
        ok = any(
            at(i) in trace.intermediate_at(3 * j + 1)
            and at(i - 2) in trace.intermediate_at(3 * (j - 1) + 2)
            for j in range(1, trace.p + 1)
            if 3 * j < s
        )
        if not ok:
            bad12.append(i)
    c12 = ConditionResult(not bad12, f"skip-arc label fails at positions {bad12}" if bad12 else "")

    return RoadValidation((c9, c10, c11, c12))


def validate_road(trace: SubstitutionTrace, path: tuple[int, ...]) -> RoadValidation:
    """Evaluate the four road conditions independently; reports, never raises."""
    return _road_conditions(trace, tuple(path))


def _make_labels(trace: SubstitutionTrace, path: tuple[int, ...]) -> tuple[str, ...]:
    s = len(path) - 1
    return tuple(trace.label_of(path[j], s - j) for j in range(s + 1))


def find_road(trace: SubstitutionTrace, v: int, s: int) -> Road:
    """Backtracking search for a length-s road from v down to x0.

    Raises NoRoadFoundError when no labeled path satisfies the conditions;
    for a valid trace that is itself a lemma violation worth reporting.
    """
    if v not in trace.set_at(s):
        raise ValueError(f"vertex {v} is not in N_{s}")
    d = trace.digraph
    adj = d.out_adj
    path = [v]  # built far-end first

    def descend(pos: int):
        if pos == 0:
            candidate = tuple(path)
            if _road_conditions(trace, candidate).passed:
                return candidate
            return None
        for w in adj[path[-1]]:
            if w in path:
                continue
            if (pos - 1) % 3 == 0 and w not in trace.set_at(pos - 1):
                continue
            path.append(w)
            hit = descend(pos - 1)
            if hit is not None:
                return hit
            path.pop()
        return None

    found = descend(s)
    if found is None:
        raise NoRoadFoundError(f"no road of length {s} from {v} to {trace.x0}")
    return Road(found, _make_labels(trace, found))


# -- lemma checkers ---------------------------------------------------------


def _shortest_path(d: Digraph, a: int, b: int) -> tuple[int, ...] | None:
    parents: dict[int, int] = {a: a}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            out = [b]
            while out[-1] != a:
                out.append(parents[out[-1]])
            return tuple(reversed(out))
        for w in d.out_adj[u]:
            if w not in parents:
                parents[w] = u
                queue.append(w)
    return None


@dataclass(frozen=True)
class PreKernelReport:
    absorption_violations: tuple[int, ...]
    shape_violations: tuple[tuple, ...]  # (a, b, path, reason)

    @property
    def passed(self) -> bool:
        return not self.absorption_violations and not self.shape_violations


def check_pre_kernel_properties(trace: SubstitutionTrace) -> PreKernelReport:
    """2-absorbence of the pre-3-kernel, plus the restricted shape of
    internal paths of length at most two."""
    d = trace.digraph
    pre = assemble_pre_3_kernel(trace)
    members = set(pre)
    raw = d._raw_matrix

    absorption = tuple(
        u
        for u in d.vertices()
        if u not in members
        and not any(raw[u][v] is not None and raw[u][v] <= 2 for v in pre)
    )

    shape = []
    for a in pre:
        for b in pre:
            if a == b or raw[a][b] is None or raw[a][b] > 2:
                continue
            witness = _shortest_path(d, a, b)
            ka = trace.added_round(a)
            kb = trace.added_round(b)
            if ka is None or kb is None:
                shape.append((a, b, witness, "endpoint outside the added sets"))
            elif ka > kb:
                shape.append((a, b, witness, f"rounds out of order: {ka} > {kb}"))
    return PreKernelReport(absorption, tuple(shape))


@dataclass(frozen=True)
class UniqueChordReport:
    skip_positions: tuple[int, ...]  # all i with (t_i, t_{i-2}) an arc
    inner_positions: tuple[int, ...]  # those with 2 < i < s
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def check_unique_short_chord(trace: SubstitutionTrace, road: Road) -> UniqueChordReport:
    """When a road carries an inner position-skip arc, it must be the only
    skip arc, and positions 3k'+2 beyond it must carry plain N labels."""
    d = trace.digraph
    s = road.length
    skips = tuple(
        i for i in range(2, s + 1) if (road.vertex_at(i), road.vertex_at(i - 2)) in d.arcs
    )
    inner = tuple(i for i in skips if 2 < i < s)
    violations = []
    if inner:
        i = inner[0]
        if len(skips) > 1:
            violations.append(f"multiple skip arcs at positions {list(skips)}")
        q = 2
        while q <= s:
            if q > i and road.vertex_at(q) not in trace.set_at(q):
                violations.append(f"t_{q}={road.vertex_at(q)} beyond the skip arc not in N_{q}")
            q += 3
    return UniqueChordReport(skips, inner, tuple(violations))


@dataclass(frozen=True)
class AdditiveInverseReport:
    violations: tuple[tuple[int, int | None], ...]  # (position, distance or None)

    @property
    def passed(self) -> bool:
        return not self.violations


def check_additive_inverse_property(
    trace: SubstitutionTrace, road: Road
) -> AdditiveInverseReport:
    """For every road position s != 1, the shortest x0 -> t_s path has length
    congruent to -s mod 3."""
    d = trace.digraph
    raw = d._raw_matrix[trace.x0]
    violations = []
    for pos in range(road.length + 1):
        if pos == 1:
            continue
        dist = raw[road.vertex_at(pos)]
        if dist is None or dist % 3 != (-pos) % 3:
            violations.append((pos, dist))
    return AdditiveInverseReport(tuple(violations))


# -- end-to-end -------------------------------------------------------------


@dataclass(frozen=True)
class MethodOutcome:
    pre_3_kernel: VertexSet
    is_3_kernel: bool
    trace: SubstitutionTrace
    failure_witness: tuple[int, ...] | None


def run_substitution_method(d: Digraph, x0: int) -> MethodOutcome:
    """Full pipeline: base kernel of D - x0, substitution trace, pre-3-kernel,
    and the (3,2)-kernel verdict with a witness path on failure."""
    d.check_vertex(x0)
    rest = as_vertex_set(v for v in d.vertices() if v != x0)
    base = _kernel_of_induced(d, rest)
    if base is None:
        raise NoBaseKernelError(f"D - {x0} has no 3-kernel")
    trace = build_substitution_sequence(d, x0, base)
    pre = assemble_pre_3_kernel(trace)
    independent = is_k_independent(d, pre, 3)
    absorbent = is_l_absorbent(d, pre, 2)
    witness = None
    if not independent:
        raw = d._raw_matrix
        for a in pre:
            for b in pre:
                if a != b and raw[a][b] is not None and raw[a][b] < 3:
                    witness = _shortest_path(d, a, b)
                    break
            if witness is not None:
                break
    return MethodOutcome(pre, independent and absorbent, trace, witness)
