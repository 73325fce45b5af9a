"""Construct labeled realizations of graphic sequences.

:func:`realize` is a deterministic Havel-Hakimi style reduction usable on
any graphic sequence.  :func:`circulant_regular` gives the closed-form
r-regular witness (offsets 1..r/2 around a cycle, plus the diagonal when r
is odd).  The family constructions mirror the saturate-then-regular proofs
for the (n-1, x, s) template: universal prefix vertices, a circulant
middle block, and an already-saturated suffix.
"""

from __future__ import annotations

from .errors import (
    InfeasibleRegular,
    NotGraphic,
    PackingFailed,
)
from .generators import FamilyParams, family_sequence, packing_demo_sequence
from .graphs import SimpleGraph
from .sequences import DegreeSequence, is_graphic_eg, subtract_k


def realize(seq: DegreeSequence) -> SimpleGraph:
    """Build a graph whose vertex i has degree seq[i].

    Largest-first reduction: repeatedly take the vertex with the highest
    remaining degree (lowest index on ties) and connect it to the vertices
    with the next-highest remaining degrees (again lowest index on ties).
    Deterministic by construction, so fixtures can rely on exact edge
    sets.
    """
    if not is_graphic_eg(seq):
        raise NotGraphic(f"not a graphic sequence: {seq.to_list()}")
    n = len(seq)
    remaining = list(seq.degrees)
    g = SimpleGraph(n)
    for _ in range(n):
        order = sorted(range(n), key=lambda v: (-remaining[v], v))
        u = order[0]
        need = remaining[u]
        if need == 0:
            break
        remaining[u] = 0
        targets = [v for v in order[1:] if remaining[v] > 0][:need]
        if len(targets) < need:
            raise NotGraphic(
                f"reduction ran out of targets for {seq.to_list()}"
            )  # unreachable after the Erdos-Gallai precheck
        for v in targets:
            g.add_edge(u, v)
            remaining[v] -= 1
    return g


def circulant_regular(n: int, r: int) -> SimpleGraph:
    """r-regular circulant on n vertices: i ~ i +/- 1..r//2 (mod n), and
    i ~ i + n/2 when r is odd.  Feasible iff 0 <= r <= n-1 and nr is even."""
    if n < 1 or r < 0 or r > n - 1 or (n * r) % 2 != 0:
        raise InfeasibleRegular(f"no {r}-regular graph on {n} vertices")
    g = SimpleGraph(n)
    for offset in range(1, r // 2 + 1):
        # offset < n/2, so {i, i+offset mod n} enumerates each edge once
        for i in range(n):
            g.add_edge(i, (i + offset) % n)
    if r % 2 == 1:
        half = n // 2  # n is even here since nr is even and r is odd
        for i in range(half):
            g.add_edge(i, i + half)
    return g


def realize_family(fp: FamilyParams, variant: str = "general") -> SimpleGraph:
    """Realize the (n-1)^s, x^(n-2s), s^s sequence constructively.

    The first s vertices are joined to each other and to everything else,
    which saturates the suffix; the middle block then needs x - s more at
    each vertex, supplied by a circulant.
    """
    seq = family_sequence(fp, variant)
    n, s, x = fp.n, fp.k, fp.x
    assert x is not None
    g = SimpleGraph(n)
    for i in range(s):
        for j in range(i + 1, n):
            g.add_edge(i, j)
    middle = circulant_regular(n - 2 * s, x - s)
    for u, v in middle.iter_edges():
        g.add_edge(u + s, v + s)
    built = g.degree_sequence()
    if built != seq.degrees:
        raise AssertionError(
            f"family realization degrees {built} != sequence {seq.degrees}"
        )
    return g


def realize_family_minus_k(fp: FamilyParams, variant: str = "general") -> SimpleGraph:
    """Realize d - k for the family sequence, keeping all n vertices.

    The k former suffix vertices drop to degree zero and stay as isolated
    vertices so indices line up with :func:`realize_family`.  The prefix
    is joined to itself and the middle block only; the middle block gets
    the remaining x - 2k from a circulant.
    """
    seq = family_sequence(fp, variant)
    target = subtract_k(seq, fp.k)
    n, k, x = fp.n, fp.k, fp.x
    assert x is not None
    g = SimpleGraph(n)
    for i in range(k):
        for j in range(i + 1, n - k):
            g.add_edge(i, j)
    middle = circulant_regular(n - 2 * k, x - 2 * k)
    for u, v in middle.iter_edges():
        g.add_edge(u + k, v + k)
    built = g.degree_sequence()
    if built != target.degrees:
        raise AssertionError(
            f"family d-k realization degrees {built} != sequence {target.degrees}"
        )
    return g


def packing_demo_realize(num_threes: int, num_twos: int) -> tuple[SimpleGraph, SimpleGraph]:
    """Pack a spanning 2-regular graph with a matching on the 3-degree prefix.

    Returns (F, M): F a single-offset circulant 2-factor on all vertices,
    M a perfect matching on the first ``num_threes`` vertices, chosen
    edge-disjoint from F.  The deterministic search rotates the matching
    (shifted consecutive pairs, then the diagonal pairing) and then the
    circulant offset.  F union M realizes (3, ..., 3, 2, ..., 2).
    """
    seq = packing_demo_sequence(num_threes, num_twos)
    n = len(seq)
    t = num_threes
    for offset in range(1, (n - 1) // 2 + 1):
        factor = SimpleGraph(n)
        for i in range(n):
            factor.add_edge(i, (i + offset) % n)
        for pairs in _candidate_matchings(t):
            if any(factor.has_edge(u, v) for u, v in pairs):
                continue
            matching = SimpleGraph(n, pairs)
            return factor, matching
    raise PackingFailed(
        f"no matching on the first {t} vertices avoids every 2-regular "
        f"circulant on {n} vertices"
    )


def _candidate_matchings(t: int) -> list[list[tuple[int, int]]]:
    """Deterministic perfect matchings of {0..t-1}: consecutive pairs under
    every rotation, then the diagonal pairing i <-> i + t/2."""
    seen: set[frozenset[frozenset[int]]] = set()
    out: list[list[tuple[int, int]]] = []

    def push(pairs: list[tuple[int, int]]) -> None:
        key = frozenset(frozenset(p) for p in pairs)
        if key not in seen:
            seen.add(key)
            out.append(sorted(tuple(sorted(p)) for p in pairs))

    for r in range(t):
        push([((2 * i + r) % t, (2 * i + 1 + r) % t) for i in range(t // 2)])
    push([(i, i + t // 2) for i in range(t // 2)])
    return out
