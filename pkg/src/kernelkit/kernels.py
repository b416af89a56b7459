"""k-closures, (k,l)-kernel predicates, brute-force solvers, and
kernel-perfection checkers.

The solver is the package's oracle: deterministic lexicographic subset
search with independence pruning, tractable to roughly 24 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .digraph import Digraph, VertexSet, as_vertex_set
from .errors import SizeBoundError

SUBSET_SEARCH_BOUND = 24
PERFECTION_BOUND = 16


@dataclass(frozen=True)
class KernelQuery:
    """Independence radius k and absorption radius l."""

    k: int
    l: int

    @classmethod
    def k_kernel(cls, k: int) -> "KernelQuery":
        return cls(k, k - 1)


KERNEL = KernelQuery(2, 1)
THREE_KERNEL = KernelQuery(3, 2)


@dataclass(frozen=True)
class KernelResult:
    found: bool
    witness: VertexSet | None
    subsets_examined: int


def k_closure(d: Digraph, k: int) -> Digraph:
    """Same vertices; arc (u, v) whenever 0 < d(u, v) <= k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    raw = d._raw_matrix
    arcs = frozenset(
        (u, v)
        for u in d.vertices()
        for v in d.vertices()
        if u != v and raw[u][v] is not None and raw[u][v] <= k
    )
    return Digraph(d.vertex_count, arcs)


def is_k_independent(d: Digraph, subset: Iterable[int], k: int) -> bool:
    """Every ordered pair of distinct members lies at distance >= k
    (unreachable counts as >= k)."""
    vs = as_vertex_set(subset)
    for v in vs:
        d.check_vertex(v)
    raw = d._raw_matrix
    for u in vs:
        for v in vs:
            if u != v and raw[u][v] is not None and raw[u][v] < k:
                return False
    return True


def is_l_absorbent(d: Digraph, subset: Iterable[int], ell: int) -> bool:
    """Every non-member reaches some member within distance l."""
    vs = as_vertex_set(subset)
    for v in vs:
        d.check_vertex(v)
    members = set(vs)
    raw = d._raw_matrix
    for u in d.vertices():
        if u in members:
            continue
        if not any(raw[u][v] is not None and raw[u][v] <= ell for v in vs):
            return False
    return True


def is_kl_kernel(d: Digraph, subset: Iterable[int], query: KernelQuery) -> bool:
    return is_k_independent(d, subset, query.k) and is_l_absorbent(d, subset, query.l)


def _subsets_lex(n: int) -> Iterator[tuple[int, ...]]:
    """All subsets of 0..n-1 as sorted tuples, in lexicographic list order
    (empty set first)."""
    prefix: list[int] = []

    def rec(start: int) -> Iterator[tuple[int, ...]]:
        yield tuple(prefix)
        for v in range(start, n):
            prefix.append(v)
            yield from rec(v + 1)
            prefix.pop()

    return rec(0)


def find_kl_kernel(
    d: Digraph, query: KernelQuery, size_bound: int = SUBSET_SEARCH_BOUND
) -> KernelResult:
    """Lexicographically least (k,l)-kernel by pruned subset search."""
    n = d.vertex_count
    if n > size_bound:
        raise SizeBoundError(f"{n} vertices exceeds subset-search bound {size_bound}")
    raw = d._raw_matrix
    k, ell = query.k, query.l
    examined = 0

    def compatible(members: list[int], v: int) -> bool:
        for u in members:
            duv = raw[u][v]
            dvu = raw[v][u]
            if duv is not None and duv < k:
                return False
            if dvu is not None and dvu < k:
                return False
        return True

    def absorbent(members: list[int]) -> bool:
        in_set = set(members)
        for u in range(n):
            if u in in_set:
                continue
            if not any(raw[u][v] is not None and raw[u][v] <= ell for v in members):
                return False
        return True

    members: list[int] = []

    def search(start: int) -> tuple[int, ...] | None:
        nonlocal examined
        examined += 1
        if absorbent(members):
            return tuple(members)
        for v in range(start, n):
            if compatible(members, v):
                members.append(v)
                hit = search(v + 1)
                if hit is not None:
                    return hit
                members.pop()
        return None

    witness = search(0)
    return KernelResult(witness is not None, witness, examined)


def find_kernel_via_closure(
    d: Digraph, k: int, size_bound: int = SUBSET_SEARCH_BOUND
) -> KernelResult:
    """k-kernel of D via a classic kernel of its (k-1)-closure."""
    if k < 3:
        raise ValueError("closure reduction applies for k >= 3")
    return find_kl_kernel(k_closure(d, k - 1), KERNEL, size_bound=size_bound)


def _perfection_scan(
    d: Digraph, query: KernelQuery, proper_only: bool, size_bound: int
) -> tuple[bool, VertexSet | None]:
    n = d.vertex_count
    if n > size_bound:
        raise SizeBoundError(f"{n} vertices exceeds perfection bound {size_bound}")
    for subset in _subsets_lex(n):
        if not subset:
            continue
        if proper_only and len(subset) == n:
            continue
        sub, _ = d.induced(subset)
        if not find_kl_kernel(sub, query).found:
            return False, subset
    return True, None


def is_kernel_perfect(
    d: Digraph, size_bound: int = PERFECTION_BOUND
) -> tuple[bool, VertexSet | None]:
    """Every nonempty induced subdigraph has a classic kernel."""
    return _perfection_scan(d, KERNEL, proper_only=False, size_bound=size_bound)


def is_quasi_3_kernel_perfect(
    d: Digraph, size_bound: int = PERFECTION_BOUND
) -> tuple[bool, VertexSet | None]:
    """Every proper nonempty induced subdigraph has a 3-kernel."""
    return _perfection_scan(d, THREE_KERNEL, proper_only=True, size_bound=size_bound)


def is_3_kernel_perfect(
    d: Digraph, size_bound: int = PERFECTION_BOUND
) -> tuple[bool, VertexSet | None]:
    """Every nonempty induced subdigraph (including D itself) has a 3-kernel."""
    return _perfection_scan(d, THREE_KERNEL, proper_only=False, size_bound=size_bound)
