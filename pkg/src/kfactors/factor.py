"""k-factor construction by superposition and edge switching.

Given a k-factorable sequence d on n vertices, realize A with degrees
d - k and B with degrees n - 1 - d.  Vertex i then has total degree
n - 1 - k in the superposition A + B, and the complement of B would have
degree d_i.  If A and B were edge-disjoint, complement(B) \\ A would be the
wanted k-regular spanning graph on a realization of d; shared edges are
removed one 2-switch at a time.

For a shared edge {u, v}: pick any x not adjacent to v in the
superposition.  Because u and x have equal total degree while u spends two
units on v and x spends none, x must have a neighbor y with either a
single edge x-y and no u-y edge at all, or a double edge x-y and at most a
single u-y edge.  Switching {u,v},{x,y} for {v,x},{u,y} inside one of the
two graphs then lowers the number of shared edges by at least one, so the
loop ends after at most m switches (m = initial shared-edge count).  Each
search is a linear scan, giving O(n^2 + m n) work overall.

The resulting factor is k-regular and edge-disjoint from the final A, but
not connected in general; connectivity is reported, not enforced.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    InvalidSwitch,
    NotFactorable,
    SwitchNotFound,
    VertexCountMismatch,
)
from .graphs import Edge, SimpleGraph, normalize_edge
from .realization import realize
from .sequences import DegreeSequence, is_graphic_eg, is_k_factorable, subtract_k


@dataclass(frozen=True)
class Multigraph:
    """Superposition of two simple graphs; multiplicities are 0, 1 or 2."""

    n: int
    multiplicity: dict[Edge, int]

    @classmethod
    def superpose(cls, a: SimpleGraph, b: SimpleGraph) -> "Multigraph":
        if a.n != b.n:
            raise VertexCountMismatch(f"vertex counts differ: {a.n} vs {b.n}")
        mult: dict[Edge, int] = {}
        for e in a.iter_edges():
            mult[e] = 1
        for e in b.iter_edges():
            mult[e] = mult.get(e, 0) + 1
        return cls(a.n, mult)

    def multiplicity_of(self, u: int, v: int) -> int:
        return self.multiplicity.get(normalize_edge(u, v), 0)

    def multiedges(self) -> list[Edge]:
        return sorted(e for e, m in self.multiplicity.items() if m == 2)


def shared_edges(a: SimpleGraph, b: SimpleGraph) -> list[Edge]:
    """Edges present in both graphs, ascending; the count is the m of the
    complexity bound."""
    if a.n != b.n:
        raise VertexCountMismatch(f"vertex counts differ: {a.n} vs {b.n}")
    return sorted(e for e in a.iter_edges() if b.has_edge(*e))


@dataclass(frozen=True)
class SwitchStep:
    """One degree-preserving 2-switch applied to graph A or B.

    ``removed`` holds ({u,v}, {x,y}) and ``added`` holds ({v,x}, {u,y});
    the same four distinct vertices appear on both sides, which is what
    keeps every degree unchanged.
    """

    target: str  # "A" or "B"
    removed: tuple[Edge, Edge]
    added: tuple[Edge, Edge]

    def __post_init__(self) -> None:
        if self.target not in ("A", "B"):
            raise ValueError(f"target must be 'A' or 'B', got {self.target!r}")
        edges = [*self.removed, *self.added]
        if any(u == v for u, v in edges):
            raise ValueError("switch edges cannot be loops")
        norm_removed = tuple(normalize_edge(*e) for e in self.removed)
        norm_added = tuple(normalize_edge(*e) for e in self.added)
        object.__setattr__(self, "removed", norm_removed)
        object.__setattr__(self, "added", norm_added)
        vertices = {v for e in norm_removed for v in e}
        if len(vertices) != 4:
            raise ValueError(f"switch must involve 4 distinct vertices: {edges}")
        if sorted(v for e in norm_removed for v in e) != sorted(
            v for e in norm_added for v in e
        ):
            raise ValueError("added edges must rewire the removed endpoints")

    def reversed(self) -> "SwitchStep":
        return SwitchStep(self.target, self.added, self.removed)

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "removed": [list(e) for e in self.removed],
            "added": [list(e) for e in self.added],
        }


@dataclass
class SwitchCounters:
    """Instrumentation for the switching loop."""

    initial_shared_edges: int = 0
    switch_count: int = 0
    candidate_scans: int = 0
    max_scans_per_switch: int = 0

    def to_dict(self) -> dict:
        return {
            "initial_shared_edges": self.initial_shared_edges,
            "switch_count": self.switch_count,
            "candidate_scans": self.candidate_scans,
            "max_scans_per_switch": self.max_scans_per_switch,
        }


@dataclass
class FactorComputation:
    """Everything produced by one run of :func:`compute_k_factor`."""

    sequence: DegreeSequence
    k: int
    graph_a: SimpleGraph  # final state, realizes d - k
    graph_b: SimpleGraph  # final state, realizes n - 1 - d
    initial_a: SimpleGraph
    initial_b: SimpleGraph
    trace: list[SwitchStep] = field(default_factory=list)
    factor: SimpleGraph | None = None
    counters: SwitchCounters = field(default_factory=SwitchCounters)

    def realization(self) -> SimpleGraph:
        """Complement of the final B: a realization of d containing both
        the factor and graph A."""
        n = self.sequence.n
        g = SimpleGraph(n)
        for u in range(n):
            for v in range(u + 1, n):
                if not self.graph_b.has_edge(u, v):
                    g.add_edge(u, v)
        return g


def _check_switch_applies(h: SimpleGraph, step: SwitchStep) -> None:
    for u, v in step.removed:
        if not h.has_edge(u, v):
            raise InvalidSwitch(f"removed edge {{{u},{v}}} not present")
    for u, v in step.added:
        if h.has_edge(u, v):
            raise InvalidSwitch(f"added edge {{{u},{v}}} already present")


def _apply_switch_inplace(h: SimpleGraph, step: SwitchStep) -> None:
    _check_switch_applies(h, step)
    for u, v in step.removed:
        h.remove_edge(u, v)
    for u, v in step.added:
        h.add_edge(u, v)


def apply_switch(h: SimpleGraph, step: SwitchStep) -> SimpleGraph:
    """Return a copy of h with the switch applied; degrees are unchanged."""
    out = h.copy()
    _apply_switch_inplace(out, step)
    return out


def _search_switch(
    a: SimpleGraph, b: SimpleGraph, edge: Edge
) -> tuple[SwitchStep, int]:
    """Find a multiedge-reducing switch for the shared edge {u, v}.

    Scan for the lowest x with no u-v-side contact (mult(v, x) = 0), then
    for the lowest valid y, trying switches in B before switches in A.
    Valid pairs are exactly the two cases of the existence argument:

    * mult(x,y) = 1 with mult(u,y) = 0: switch in the graph owning {x,y};
    * mult(x,y) = 2 with mult(u,y) <= 1: switch in a graph not containing
      {u,y} (the new u-y edge may become a shared edge, but two shared
      edges disappear).

    Either way the shared-edge count strictly drops.  Both scans are
    linear, so the step costs O(n).
    """
    u, v = edge
    n = a.n
    scans = 0

    def mult(p: int, q: int) -> int:
        return int(a.has_edge(p, q)) + int(b.has_edge(p, q))

    if mult(u, v) != 2:
        raise ValueError(f"{{{u},{v}}} is not a shared edge")

    x = -1
    for cand in range(n):
        scans += 1
        if cand == u or cand == v:
            continue
        if mult(v, cand) == 0:
            x = cand
            break
    if x < 0:
        raise SwitchNotFound(_dump(a, b, edge, "no vertex independent of v"))

    for target, h in (("B", b), ("A", a)):
        for y in range(n):
            scans += 1
            if y == u or y == v or y == x:
                continue
            if not h.has_edge(x, y):
                continue
            m_xy = mult(x, y)
            m_uy = mult(u, y)
            if m_xy == 1:
                ok = m_uy == 0
            else:
                ok = m_uy <= 1 and not h.has_edge(u, y)
            if ok:
                step = SwitchStep(
                    target=target,
                    removed=(normalize_edge(u, v), normalize_edge(x, y)),
                    added=(normalize_edge(v, x), normalize_edge(u, y)),
                )
                return step, scans
    raise SwitchNotFound(_dump(a, b, edge, f"no valid partner for x={x}"))


def find_switch(a: SimpleGraph, b: SimpleGraph, edge: Edge) -> SwitchStep:
    """Public single-switch search; see :func:`_search_switch`."""
    step, _ = _search_switch(a, b, normalize_edge(*edge))
    return step


def _dump(a: SimpleGraph, b: SimpleGraph, edge: Edge, why: str) -> str:
    return (
        f"switch search failed for multiedge {edge}: {why}\n"
        f"A edges: {a.edges()}\nB edges: {b.edges()}"
    )


def compute_k_factor(seq: DegreeSequence, k: int) -> FactorComputation:
    """Run the full superposition-and-switching construction.

    Raises NotFactorable unless seq is graphic, has min degree >= k, and
    d - k is graphic.  The returned factor is k-regular on all n vertices,
    edge-disjoint from graph A, and together with A realizes d.
    """
    if not is_k_factorable(seq, k):
        raise NotFactorable(f"{seq.to_list()} is not {k}-factorable")
    n = len(seq)
    d = seq.degrees

    initial_a = realize(subtract_k(seq, k))
    comp_sorted = DegreeSequence(tuple(n - 1 - x for x in reversed(d)))
    assert is_graphic_eg(comp_sorted), (
        "complement sequence must be graphic whenever d is"
    )
    b_sorted = realize(comp_sorted)
    initial_b = SimpleGraph(n)
    for u, v in b_sorted.iter_edges():
        # sorted-order vertex j carries the degree of original vertex n-1-j
        initial_b.add_edge(n - 1 - u, n - 1 - v)

    a = initial_a.copy()
    b = initial_b.copy()
    shared = set(shared_edges(a, b))
    counters = SwitchCounters(initial_shared_edges=len(shared))
    trace: list[SwitchStep] = []

    while shared:
        uv = min(shared)
        step, scans = _search_switch(a, b, uv)
        counters.candidate_scans += scans
        counters.max_scans_per_switch = max(counters.max_scans_per_switch, scans)
        _apply_switch_inplace(b if step.target == "B" else a, step)
        counters.switch_count += 1
        trace.append(step)
        before = len(shared)
        for e in (*step.removed, *step.added):
            if a.has_edge(*e) and b.has_edge(*e):
                shared.add(e)
            else:
                shared.discard(e)
        if len(shared) >= before:
            raise SwitchNotFound(
                _dump(a, b, uv, f"switch did not reduce shared edges ({before} -> {len(shared)})")
            )

    factor = SimpleGraph(n)
    for u in range(n):
        for v in sorted(set(range(u + 1, n)) - b.neighbors(u) - a.neighbors(u)):
            factor.add_edge(u, v)

    if any(factor.degree(v) != k for v in range(n)):
        raise SwitchNotFound(
            _dump(a, b, (0, 0), f"factor degrees {factor.degrees()} are not uniformly {k}")
        )
    union_degrees = [factor.degree(v) + a.degree(v) for v in range(n)]
    if tuple(union_degrees) != d:
        raise SwitchNotFound(
            _dump(a, b, (0, 0), f"factor + A degrees {union_degrees} != d {list(d)}")
        )

    return FactorComputation(
        sequence=seq,
        k=k,
        graph_a=a,
        graph_b=b,
        initial_a=initial_a,
        initial_b=initial_b,
        trace=trace,
        factor=factor,
        counters=counters,
    )
