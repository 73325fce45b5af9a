"""Labeled simple graphs on vertices 0..n-1 with O(1) edge queries."""

from __future__ import annotations

from typing import Iterable, Iterator


Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class SimpleGraph:
    """Undirected simple graph backed by adjacency sets."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        self.n = n
        self._adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            self.add_edge(u, v)

    def _check_vertex(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise ValueError(f"vertex {u} out of range 0..{self.n - 1}")

    def add_edge(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if v in self._adj[u]:
            raise ValueError(f"duplicate edge {{{u},{v}}}")
        self._adj[u].add(v)
        self._adj[v].add(u)

    def remove_edge(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if v not in self._adj[u]:
            raise ValueError(f"edge {{{u},{v}}} not present")
        self._adj[u].discard(v)
        self._adj[v].discard(u)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors(self, u: int) -> set[int]:
        """Live adjacency set of u; callers must not mutate it."""
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def degrees(self) -> list[int]:
        """Vertexwise degrees, indexed by vertex."""
        return [len(nbrs) for nbrs in self._adj]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    def edges(self) -> list[Edge]:
        """All edges as (u, v) with u < v, in ascending order."""
        return sorted((u, v) for u in range(self.n) for v in self._adj[u] if u < v)

    def iter_edges(self) -> Iterator[Edge]:
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj) // 2

    def copy(self) -> "SimpleGraph":
        g = SimpleGraph(self.n)
        g._adj = [set(nbrs) for nbrs in self._adj]
        return g

    def to_dict(self) -> dict:
        """JSON shape used by the CLI and the HTTP service."""
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges()]}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"


def to_dot(g: SimpleGraph) -> str:
    """Render as an undirected DOT graph.

    Every vertex gets its own node statement so isolated vertices survive
    a round-trip; edges follow, one per line, in ascending order.
    """
    lines = ["graph {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
