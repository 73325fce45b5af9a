"""JSON payload builders shared by the CLI and the HTTP service.

Keeping these in one place is what makes the CLI/service parity guarantee
cheap: both surfaces serialize the same dictionaries.
"""

from __future__ import annotations

import json
from typing import Any

from .analysis import report
from .factor import compute_k_factor
from .generators import (
    MAX_SEED,
    PRNG_ALGORITHM,
    FamilyParams,
    GenerationParams,
    generate_connected,
    generate_disconnected,
    generate_heuristic,
)
from .sequences import (
    DegreeSequence,
    is_graphic_eg,
    is_k_factorable,
    rao_connected_predicate,
)

GENERATE_MODES = ("connected", "disconnected", "heuristic")


def canonical_json(payload: Any) -> str:
    """Byte-stable rendering: sorted keys, fixed separators, trailing newline."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def check_payload(seq: DegreeSequence, k: int | None = None) -> dict:
    out: dict[str, Any] = {"graphic": is_graphic_eg(seq)}
    if k is not None:
        out["k_factorable"] = is_k_factorable(seq, k)
    rao = rao_connected_predicate(seq)
    out["rao_connected"] = rao.holds
    if rao.witness is not None:
        out["witness_s"] = rao.witness
    return out


def generate_payload(
    mode: str,
    *,
    seed: int,
    a: int | None = None,
    b: int | None = None,
    k: int | None = None,
    n: int | None = None,
    x: int | None = None,
    variant: str = "general",
    max_retries: int = 1000,
) -> dict:
    """Run one generator and wrap the result with its reproducibility data."""
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must fit in 64 bits, got {seed}")
    if mode == "disconnected":
        if n is None or k is None:
            raise ValueError("disconnected mode needs n and k")
        fp = FamilyParams(n=n, k=k, x=x)
        seq = generate_disconnected(fp, seed, variant)
        params: dict[str, Any] = {"n": n, "k": k, "x": x, "variant": variant}
    elif mode in ("connected", "heuristic"):
        if a is None or b is None or k is None:
            raise ValueError(f"{mode} mode needs a, b and k")
        gp = GenerationParams(a=a, b=b, k=k, seed=seed, max_retries=max_retries)
        seq = generate_connected(gp) if mode == "connected" else generate_heuristic(gp)
        params = {"a": a, "b": b, "k": k, "max_retries": max_retries}
    else:
        raise ValueError(f"unknown mode {mode!r}; expected one of {GENERATE_MODES}")
    return {
        "mode": mode,
        "seed": seed,
        "prng": PRNG_ALGORITHM,
        "params": params,
        "n": len(seq),
        "sequence": seq.to_list(),
    }


def kfactor_payload(seq: DegreeSequence, k: int) -> dict:
    """Full bundle for one factor computation: the three graphs, the switch
    trace, the loop counters and the connectivity report."""
    fc = compute_k_factor(seq, k)
    rep = report(seq, k, fc)
    return {
        "sequence": seq.to_list(),
        "k": k,
        "realization": fc.realization().to_dict(),
        "d_minus_k_graph": fc.graph_a.to_dict(),
        "factor": fc.factor.to_dict(),
        "trace": [step.to_dict() for step in fc.trace],
        "counters": fc.counters.to_dict(),
        "report": rep.to_dict(),
    }
