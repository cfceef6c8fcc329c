"""Rainbow / revised-rainbow path search and all-pairs certificate checking.

A rainbow path has pairwise-distinct colors on its internal vertices. A
revised rainbow path has all vertices distinctly colored, or all but its
end vertices distinctly colored; the end vertices are exempt, so in
particular the two ends may share a color. Searches are exhaustive
depth-first over simple paths, carrying the used color set as a bitmask;
absence of a path is therefore a proof, while running out of node budget
raises instead of claiming absence.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Sequence

from .errors import PreconditionError, SearchInconclusiveError
from .graph import Graph, all_pairs, is_connected

DEFAULT_NODE_BUDGET = 5_000_000


def node_budget_default() -> int:
    env = os.environ.get("RVC_NODE_BUDGET")
    return int(env) if env else DEFAULT_NODE_BUDGET


@dataclass(frozen=True)
class RainbowMode:
    """Path predicate selector; forbidden_color bans a color everywhere on the path.

    The revised flag selects the predicate "all vertices distinct, or all
    but the ends distinct", which coincides with the plain internal
    distinctness check; it is kept as a separate mode so callers state
    which notion they are certifying.
    """

    revised: bool = False
    forbidden_color: int | None = None


RAINBOW = RainbowMode()
REVISED = RainbowMode(revised=True)


@dataclass(frozen=True)
class Certificate:
    """All-pairs verification outcome with optional per-pair witness paths."""

    status: str  # "verified" | "counterexample"
    failing_pair: tuple[int, int] | None = None
    witnesses: dict[tuple[int, int], tuple[int, ...]] | None = None

    @property
    def verified(self) -> bool:
        return self.status == "verified"


@dataclass(frozen=True)
class ColorStats:
    distinct: int
    histogram: dict[int, int] = field(default_factory=dict)
    once_used: tuple[int, ...] = ()


def _colors_of(c) -> Sequence[int]:
    return getattr(c, "colors", c)


def is_rainbow_path(path: Sequence[int], c, mode: RainbowMode = RAINBOW) -> bool:
    """Color predicate on a path given as its vertex sequence."""
    colors = _colors_of(c)
    seq = [colors[v] for v in path]
    if mode.forbidden_color is not None and mode.forbidden_color in seq:
        return False
    # both modes demand pairwise-distinct internal colors; the revised
    # disjunction "all distinct, or all but the ends distinct" reduces to
    # the same check, with the ends exempt either way
    internal = seq[1:-1]
    return len(internal) == len(set(internal))


def exists_rainbow_path(
    g: Graph,
    c,
    u: int,
    v: int,
    mode: RainbowMode = RAINBOW,
    node_budget: int | None = None,
) -> tuple[int, ...] | None:
    """Some qualifying simple path from u to v, or None after exhaustive search.

    Deterministic: at every step the direct edge to the target is tried
    first, then neighbors in ascending id order.
    """
    if u == v:
        raise PreconditionError("exists_rainbow_path requires distinct endpoints")
    colors = _colors_of(c)
    budget = node_budget if node_budget is not None else node_budget_default()
    forb = mode.forbidden_color
    if forb is not None and (colors[u] == forb or colors[v] == forb):
        return None

    # colors an internal vertex may not take (end colors are exempt)
    base_block = 0 if forb is None else 1 << forb

    adj = [sorted(g.adj(w)) for w in range(g.n)]
    nodes = 0
    path = [u]
    on_path = 1 << u

    def dfs(w: int, used: int) -> bool:
        nonlocal nodes, on_path
        if v in g.adj(w):
            return True
        for x in adj[w]:
            if on_path >> x & 1:
                continue
            cx = colors[x]
            bit = 1 << cx
            if bit & (used | base_block):
                continue
            nodes += 1
            if nodes > budget:
                raise SearchInconclusiveError(
                    f"path search for pair ({u}, {v}) exceeded node budget {budget}"
                )
            path.append(x)
            on_path |= 1 << x
            if dfs(x, used | bit):
                return True
            path.pop()
            on_path &= ~(1 << x)
        return False

    if dfs(u, 0):
        return tuple(path) + (v,)
    return None


def _pair_job(args) -> tuple[tuple[int, int], tuple[int, ...] | None]:
    g, colors, pair, mode, budget = args
    u, v = pair
    return pair, exists_rainbow_path(g, colors, u, v, mode, budget)


def verify_rainbow_vc(
    g: Graph,
    c,
    mode: RainbowMode = RAINBOW,
    store_witnesses: bool = False,
    node_budget: int | None = None,
    jobs: int = 1,
) -> Certificate:
    """Check every unordered vertex pair for a qualifying path.

    The counterexample reported is the lexicographically first failing
    pair regardless of worker scheduling.
    """
    if not is_connected(g):
        raise PreconditionError("verify_rainbow_vc requires a connected graph")
    colors = tuple(_colors_of(c))
    if len(colors) != g.n:
        raise PreconditionError(
            f"coloring covers {len(colors)} vertices but the graph has {g.n}"
        )
    pairs = list(all_pairs(g.n))
    results: dict[tuple[int, int], tuple[int, ...] | None] = {}
    if jobs > 1 and len(pairs) > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            tasks = [(g, colors, p, mode, node_budget) for p in pairs]
            for pair, found in pool.imap(_pair_job, tasks, chunksize=8):
                results[pair] = found
        failing = min((p for p, f in results.items() if f is None), default=None)
        if failing is not None:
            return Certificate("counterexample", failing_pair=failing)
    else:
        for pair in pairs:
            found = exists_rainbow_path(g, colors, pair[0], pair[1], mode, node_budget)
            if found is None:
                return Certificate("counterexample", failing_pair=pair)
            results[pair] = found
    witnesses = dict(sorted(results.items())) if store_witnesses else None
    return Certificate("verified", witnesses=witnesses)


def has_color_avoiding_connectivity(g: Graph, c, v: int, x: int) -> bool:
    """True iff every vertex not colored x is reachable from v by a revised
    rainbow path that avoids color x entirely."""
    colors = _colors_of(c)
    if colors[v] == x:
        raise PreconditionError("the source vertex must not carry the avoided color")
    mode = RainbowMode(revised=True, forbidden_color=x)
    for u in range(g.n):
        if u == v or colors[u] == x:
            continue
        if exists_rainbow_path(g, colors, v, u, mode) is None:
            return False
    return True


def color_stats(c) -> ColorStats:
    """Distinct count, multiplicity histogram, and once-used colors."""
    colors = _colors_of(c)
    hist: dict[int, int] = {}
    for col in colors:
        hist[col] = hist.get(col, 0) + 1
    once = tuple(sorted(col for col, k in hist.items() if k == 1))
    return ColorStats(distinct=len(hist), histogram=hist, once_used=once)


def serialize_certificate(cert: Certificate) -> str:
    """Structured text record: status, failing pair, optional witnesses."""
    lines = [f"status {cert.status}"]
    if cert.failing_pair is not None:
        lines.append(f"failing {cert.failing_pair[0]} {cert.failing_pair[1]}")
    if cert.witnesses:
        for (u, v), path in cert.witnesses.items():
            lines.append(f"witness {u} {v} " + " ".join(map(str, path)))
    return "\n".join(lines) + "\n"
