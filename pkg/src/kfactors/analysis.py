"""Post-hoc structural analysis of computed factors."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InconsistentReport
from .factor import FactorComputation
from .graphs import SimpleGraph
from .sequences import DegreeSequence, rao_connected_predicate


def components(g: SimpleGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by minimum
    element (iterative BFS, no recursion limits)."""
    seen = [False] * g.n
    out: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        out.append(sorted(comp))
    return out


@dataclass(frozen=True)
class FactorReport:
    """Connectivity verdicts for one factor computation."""

    sequence: DegreeSequence
    k: int
    rao_holds: bool
    witness_s: int | None
    factor_components: list[list[int]]
    factor_connected: bool

    @property
    def rao_verdict(self) -> str:
        return "connected_factorable" if self.rao_holds else "not_connected_factorable"

    def to_dict(self) -> dict:
        return {
            "sequence": self.sequence.to_list(),
            "k": self.k,
            "rao_verdict": self.rao_verdict,
            "witness_s": self.witness_s,
            "factor_components": self.factor_components,
            "factor_connected": self.factor_connected,
        }


def report(seq: DegreeSequence, k: int, fc: FactorComputation) -> FactorReport:
    """Cross-check the computed factor against the Rao verdict.

    A connected factor for a sequence failing the Rao inequalities is
    impossible; seeing one means the computation is wrong somewhere, so it
    aborts loudly instead of returning a report.
    """
    if fc.sequence != seq or fc.k != k:
        raise ValueError("factor computation does not belong to (sequence, k)")
    if fc.factor is None:
        raise ValueError("factor computation is incomplete")
    rao = rao_connected_predicate(seq)
    comps = components(fc.factor)
    connected = len(comps) == 1
    if connected and not rao.holds:
        raise InconsistentReport(
            f"computed a connected {k}-factor for {seq.to_list()} although the "
            f"Rao inequality fails at s={rao.witness}; factor edges: "
            f"{fc.factor.edges()}"
        )
    return FactorReport(
        sequence=seq,
        k=k,
        rao_holds=rao.holds,
        witness_s=rao.witness,
        factor_components=comps,
        factor_connected=connected,
    )
