"""Coloring constructions: cycles, balanced ear extensions, 2-connected
graphs via nonincreasing ear decompositions, and block composition.

Counts follow the complete-graph convention: a complete host graph reports
0 even though one physical color is present on the vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .decompose import Ear, EarDecomposition, ear_decomposition
from .errors import ConstructionError, GraphFormatError, PreconditionError
from .graph import Graph, block_decomposition, diameter, is_2_connected, is_connected
from .verify import (
    RAINBOW,
    REVISED,
    has_color_avoiding_connectivity,
    verify_rainbow_vc,
)


@dataclass(frozen=True)
class Coloring:
    """Total vertex-color assignment plus the rvc-style reported count."""

    colors: tuple[int, ...]
    reported_count: int
    method: str = ""

    @property
    def n(self) -> int:
        return len(self.colors)

    def distinct(self) -> int:
        return len(set(self.colors))


@dataclass
class PaletteLedger:
    """Monotone fresh-color allocator; palettes are never renumbered."""

    old_colors: frozenset[int]
    new_colors: list[int] = field(default_factory=list)

    @classmethod
    def start(cls, used) -> "PaletteLedger":
        return cls(old_colors=frozenset(used))

    def fresh(self) -> int:
        nxt = max(
            max(self.old_colors, default=-1),
            max(self.new_colors, default=-1),
        ) + 1
        self.new_colors.append(nxt)
        return nxt


def serialize_coloring(c: Coloring) -> str:
    """Structured record: vertex count, color array, count, provenance tag."""
    lines = [
        f"vertices {c.n}",
        "colors " + " ".join(map(str, c.colors)),
        f"count {c.reported_count}",
        f"method {c.method or 'unknown'}",
    ]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    n = None
    colors: tuple[int, ...] | None = None
    count = None
    method = ""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "vertices" and len(parts) == 2:
                n = int(parts[1])
            elif parts[0] == "colors":
                colors = tuple(int(p) for p in parts[1:])
            elif parts[0] == "count" and len(parts) == 2:
                count = int(parts[1])
            elif parts[0] == "method" and len(parts) == 2:
                method = parts[1]
            else:
                raise GraphFormatError(f"line {lineno}: unrecognized record line {line!r}")
        except ValueError:
            raise GraphFormatError(f"line {lineno}: malformed value in {line!r}")
    if colors is None:
        raise GraphFormatError("coloring record is missing a 'colors' line")
    if n is not None and n != len(colors):
        raise GraphFormatError(f"declared {n} vertices but {len(colors)} colors")
    if count is None:
        count = len(set(colors))
    return Coloring(colors, reported_count=count, method=method)


def cycle_rvc_value(n: int) -> int:
    """Exact rainbow vertex-connection number of the n-cycle."""
    if n < 3:
        raise PreconditionError("cycles need at least 3 vertices")
    if n == 3:
        return 0
    if n in (4, 5):
        return 1
    if n == 9:
        return 3
    if n in (6, 7, 8, 10, 11, 12, 13, 15):
        return (n + 1) // 2 - 1
    return (n + 1) // 2  # n == 14 or n >= 16


# Optimal colorings for the cycle orders whose count beats the wraparound
# pattern. Found by exhaustive search (see tests for the regeneration
# check) and verified rainbow vertex-connected.
SMALL_CYCLE_COLORINGS: dict[int, tuple[int, ...]] = {
    6: (0, 0, 0, 1, 0, 1),
    7: (0, 0, 0, 1, 0, 2, 1),
    8: (0, 1, 0, 1, 2, 0, 1, 2),
    9: (0, 1, 2, 0, 1, 2, 0, 1, 2),
    10: (0, 1, 2, 0, 1, 3, 0, 1, 2, 3),
    11: (0, 1, 2, 0, 1, 3, 0, 1, 2, 4, 3),
    12: (0, 1, 2, 3, 0, 1, 4, 2, 0, 1, 3, 4),
    13: (0, 1, 2, 3, 0, 1, 4, 2, 0, 1, 3, 5, 4),
    15: (0, 1, 2, 3, 4, 0, 5, 1, 6, 2, 0, 3, 4, 5, 6),
}


def cycle_coloring(n: int) -> Coloring:
    """A rainbow vertex-coloring of the n-cycle with the optimal count.

    Vertices 0..n-1 are taken in cyclic order. For n = 14 and n >= 16 the
    half-wraparound pattern i mod ceil(n/2) is optimal; small cycles use
    frozen search results.
    """
    if n < 3:
        raise PreconditionError("cycles need at least 3 vertices")
    if n == 3:
        return Coloring((0,) * 3, reported_count=0, method="cycle")
    if n in (4, 5):
        return Coloring((0,) * n, reported_count=1, method="cycle")
    if n == 14 or n >= 16:
        half = (n + 1) // 2
        return Coloring(tuple(i % half for i in range(n)), reported_count=half, method="cycle")
    colors = SMALL_CYCLE_COLORINGS[n]
    return Coloring(colors, reported_count=len(set(colors)), method="cycle")


def _once_used(colors: dict[int, int]) -> list[int]:
    counts: dict[int, int] = {}
    for col in colors.values():
        counts[col] = counts.get(col, 0) + 1
    return sorted(c for c, k in counts.items() if k == 1)


def _check_balanced_precondition(
    colors: dict[int, int], h_order: int, a: int, strict: bool = True
) -> int | None:
    """Structural checks on the incoming coloring; returns the once-used
    color when the host order is odd.

    strict additionally enforces that the once-used color differs from the
    first attachment's color; the chain relaxes this on fallback plans and
    relies on the verification gate instead.
    """
    distinct = len(set(colors.values()))
    if distinct != (h_order + 1) // 2:
        raise PreconditionError(
            f"host coloring uses {distinct} colors, expected {(h_order + 1) // 2}"
        )
    counts: dict[int, int] = {}
    for col in colors.values():
        counts[col] = counts.get(col, 0) + 1
    if max(counts.values()) > 2:
        raise PreconditionError("host coloring uses some color more than twice")
    if h_order % 2 == 1:
        once = [c for c, k in counts.items() if k == 1]
        if len(once) != 1:
            raise PreconditionError("odd-order host coloring must have exactly one once-used color")
        if strict and once[0] == colors[a]:
            raise PreconditionError(
                "the once-used color must differ from the first attachment's color"
            )
        return once[0]
    return None


def _balanced_sequences(
    s: int,
    case: tuple[int, int],
    ca: int,
    cb: int,
    new: list[int],
    x: int | None,
) -> tuple[list[int], list[int]]:
    """First-half and last-half color sequences for the four parity cases."""
    h_odd, ell_odd = case
    if (h_odd, ell_odd) == (0, 1):  # even host, odd ear length
        last = [cb] + new
        first = new + [ca] if ca != cb else [ca] + new
    elif (h_odd, ell_odd) == (1, 0):  # odd host, even ear length
        last = [cb] + new
        first = (new + [ca, x]) if ca != cb else ([ca] + new + [x])
    elif (h_odd, ell_odd) == (0, 0):  # both even: singleton pre-placed
        last = [cb] + new
        first = new + [ca] if ca != cb else [ca] + new
    else:  # both odd: singleton pre-placed
        last = [cb] + new
        first = (new + [ca, x]) if ca != cb else ([ca] + new + [x])
    return first, last


def _apply_balanced(
    colors: dict[int, int],
    h_order: int,
    ear_path: tuple[int, ...],
    palette: PaletteLedger,
    placement_idx: int | None,
    strict: bool = True,
) -> tuple[dict[int, int], int | None]:
    """One balanced extension step over arbitrary vertex ids.

    placement_idx is the 0-based ear position that receives the once-used
    singleton (only for the odd-result cases). Returns the extended
    coloring and the singleton color, if any.
    """
    s = len(ear_path)
    ell = s - 1
    a, b = ear_path[0], ear_path[-1]
    ca, cb = colors[a], colors[b]
    h_odd, ell_odd = h_order % 2, ell % 2
    x_prime = _check_balanced_precondition(colors, h_order, a, strict)
    ceil_s2 = (s + 1) // 2

    result_odd = (h_order + s - 2) % 2 == 1
    out = dict(colors)
    singleton: int | None = None

    if (h_odd, ell_odd) == (0, 1):
        new = [palette.fresh() for _ in range(s // 2 - 1)]
        x = None
    elif (h_odd, ell_odd) == (1, 0):
        new = [palette.fresh() for _ in range(ceil_s2 - 2)]
        x = x_prime
    elif (h_odd, ell_odd) == (0, 0):
        new = [palette.fresh() for _ in range(ceil_s2 - 2)]
        x = None
        singleton = palette.fresh()
    else:
        new = [palette.fresh() for _ in range(s // 2 - 2)]
        x = x_prime
        singleton = palette.fresh()

    positions = list(range(s))
    if singleton is not None:
        if placement_idx is None:
            placement_idx = ceil_s2 - 1  # middle vertex, 0-based
        out[ear_path[placement_idx]] = singleton
        positions.remove(placement_idx)
    elif placement_idx is not None:
        raise PreconditionError("singleton placement only applies when the result order is odd")

    first_seq, last_seq = _balanced_sequences(s, (h_odd, ell_odd), ca, cb, new, x)
    if len(first_seq) + len(last_seq) != len(positions):
        raise AssertionError("balanced sequences do not cover the ear")
    for idx, col in zip(positions[: len(first_seq)], first_seq):
        out[ear_path[idx]] = col
    for idx, col in zip(positions[len(first_seq):], last_seq):
        out[ear_path[idx]] = col
    assert result_odd == (singleton is not None)
    return out, singleton


def _star_placement_candidates(
    colors: dict[int, int],
    h_order: int,
    ear_path: tuple[int, ...],
    star_target: int,
) -> list[int]:
    """0-based ear positions to try for the once-used singleton so that the
    color-avoiding reachability property holds at star_target.

    The prescribed position comes first; the remaining positions follow as
    checked fallbacks for the configurations the construction leaves open.
    """
    s = len(ear_path)
    ell = s - 1
    ceil_s2 = (s + 1) // 2
    case4 = h_order % 2 == 1 and ell % 2 == 1
    prescribed: int | None = None
    if star_target in ear_path:
        j = ear_path.index(star_target) + 1  # 1-based position
        for u in (j - ceil_s2, j + ceil_s2):
            if 1 <= u <= s:
                prescribed = u - 1
                break
    elif case4:
        a = ear_path[0]
        if colors[star_target] != colors[a]:
            prescribed = s // 2  # v_{s/2+1}, 0-based
        else:
            prescribed = s // 2 - 1  # v_{s/2}
    else:
        prescribed = ceil_s2 - 1  # middle vertex
    order = list(range(s))
    if prescribed is not None:
        order.remove(prescribed)
        order.insert(0, prescribed)
    if star_target in ear_path:
        # placing the singleton on the target itself would violate c(v) != x
        target_idx = ear_path.index(star_target)
        order = [i for i in order if i != target_idx]
    return order


def _extension_options(
    colors: dict[int, int],
    h_order: int,
    ear_path: tuple[int, ...],
    palette: PaletteLedger,
    star_target: int | None,
    host_edges,
    avoid_vertices: frozenset[int] = frozenset(),
    strict: bool = True,
):
    """Yield verified balanced extensions of the host coloring across one ear.

    Each yielded item is (out_colors, singleton_color, palette_new_colors).
    An extension qualifies when it verifies revised-rainbow and, if
    star_target is given, the color-avoiding property holds there. For odd
    extended order the singleton placement ranges over the ear (prescribed
    position first); vertices in avoid_vertices never receive the singleton
    (a chain uses this to keep the once-used color off the next ear's
    attachment points). The even cases have no free choice, so at most one
    extension is yielded.
    """
    if len(ear_path) < 6:
        raise PreconditionError("balanced coloring needs an ear on at least 6 vertices")
    result_odd = (h_order + len(ear_path) - 2) % 2 == 1
    if star_target is not None and not result_odd:
        raise PreconditionError(
            "a star target is only meaningful when the extended order is odd"
        )

    vertex_ids = sorted(set(colors) | set(ear_path))
    dense = {v: i for i, v in enumerate(vertex_ids)}
    g2 = Graph(len(vertex_ids), [(dense[u], dense[v]) for u, v in host_edges])

    def flatten(out: dict[int, int]) -> list[int]:
        flat = [0] * len(vertex_ids)
        for v, col in out.items():
            flat[dense[v]] = col
        return flat

    base_new = list(palette.new_colors)
    if not result_odd:
        out, singleton = _apply_balanced(colors, h_order, ear_path, palette, None, strict)
        if verify_rainbow_vc(g2, flatten(out), REVISED).verified:
            yield out, singleton, list(palette.new_colors)
        palette.new_colors[:] = base_new
        return

    if star_target is not None:
        placements = _star_placement_candidates(colors, h_order, ear_path, star_target)
    else:
        mid = (len(ear_path) + 1) // 2 - 1
        placements = [mid] + [i for i in range(len(ear_path)) if i != mid]
    placements = [i for i in placements if ear_path[i] not in avoid_vertices]
    for placement in placements:
        palette.new_colors[:] = base_new
        out, singleton = _apply_balanced(colors, h_order, ear_path, palette, placement, strict)
        assert singleton is not None
        flat = flatten(out)
        if not verify_rainbow_vc(g2, flat, REVISED).verified:
            continue
        if star_target is not None and not has_color_avoiding_connectivity(
            g2, flat, dense[star_target], singleton
        ):
            continue
        allocated = list(palette.new_colors)
        palette.new_colors[:] = base_new
        yield out, singleton, allocated
        palette.new_colors[:] = base_new
    palette.new_colors[:] = base_new


def _extend_balanced(
    colors: dict[int, int],
    h_order: int,
    ear_path: tuple[int, ...],
    palette: PaletteLedger,
    star_target: int | None,
    host_edges,
    avoid_vertices: frozenset[int] = frozenset(),
) -> tuple[dict[int, int], int | None]:
    """First verified balanced extension; raises when none exists."""
    for out, singleton, allocated in _extension_options(
        colors, h_order, ear_path, palette, star_target, host_edges, avoid_vertices
    ):
        palette.new_colors[:] = allocated
        return out, singleton
    raise ConstructionError(
        "no balanced extension verifies"
        + (f" with the avoiding property at vertex {star_target}" if star_target is not None else "")
    )


def attach_ear(h: Graph, a: int, b: int, interior_count: int) -> tuple[Graph, Ear]:
    """Grow h by a fresh ear from a to b with interior_count new vertices."""
    if a == b:
        raise PreconditionError("ear endpoints must be distinct")
    if not (0 <= a < h.n and 0 <= b < h.n):
        raise PreconditionError("ear endpoints must be vertices of the host graph")
    if interior_count < 1:
        raise PreconditionError("an attached ear needs at least one interior vertex")
    path = (a,) + tuple(range(h.n, h.n + interior_count)) + (b,)
    edges = set(h.edges)
    edges.update((min(x, y), max(x, y)) for x, y in zip(path, path[1:]))
    return Graph(h.n + interior_count, edges), Ear(path)


def balanced_coloring(
    h: Graph,
    c_prime: Coloring,
    p: Ear,
    star_target: int | None = None,
) -> Coloring:
    """Extend a half-order revised rainbow coloring of h across the ear p.

    The ear's interior ids must continue h's id space densely (use
    attach_ear to build such instances). When the extended order is odd and
    star_target is given, the once-used color is placed so every vertex not
    carrying it stays reachable from star_target by a revised rainbow path
    avoiding it.
    """
    s = len(p.path)
    if s < 6:
        raise PreconditionError("balanced coloring needs an ear on at least 6 vertices")
    if not (0 <= p.a < h.n and 0 <= p.b < h.n):
        raise PreconditionError("ear attachment vertices must lie in the host graph")
    if sorted(p.interior) != list(range(h.n, h.n + s - 2)):
        raise PreconditionError(
            "ear interior must be the next dense vertex ids after the host"
        )
    if len(c_prime.colors) != h.n:
        raise PreconditionError("host coloring does not cover the host graph")
    colors = dict(enumerate(c_prime.colors))
    palette = PaletteLedger.start(set(c_prime.colors))
    edges = set(h.edges)
    edges.update((min(x, y), max(x, y)) for x, y in zip(p.path, p.path[1:]))
    out, _ = _extend_balanced(colors, h.n, p.path, palette, star_target, edges)
    n2 = h.n + s - 2
    flat = tuple(out[v] for v in range(n2))
    return Coloring(flat, reported_count=len(set(flat)), method="balanced")


def _wraparound(seq: tuple[int, ...]) -> dict[int, int]:
    """Half-count wraparound coloring along a cycle sequence."""
    half = (len(seq) + 1) // 2
    return {v: i % half for i, v in enumerate(seq)}


_CHAIN_STEP_BUDGET = 600


def _balanced_chain(
    initial_cycle: tuple[int, ...],
    ears: list[Ear],
    final_target: int | None = None,
) -> tuple[dict[int, int], PaletteLedger]:
    """Base cycle coloring followed by one balanced extension per ear.

    The construction's free choices (singleton placements, the orientation
    of each ear where it is not pinned) are searched depth-first with every
    extension verify-gated, so a dead end at a later ear backtracks to an
    earlier choice. When an intermediate order is odd, the chain prepares
    the color-avoiding property at one endpoint of the next ear (pinning
    that ear's orientation) and keeps the singleton off the other endpoint,
    so the next step never sees an attachment carrying the once-used color.
    final_target asks for the avoiding property at that vertex in the last
    (odd-order) extension. Intermediate checks run on the accumulated graph
    (initial cycle plus the ears added so far).
    """
    n0 = len(initial_cycle)
    if n0 % 2 == 1:
        if ears:
            raise PreconditionError(
                "an odd initial cycle is only valid when the graph is that cycle"
            )
        if final_target is not None:
            raise PreconditionError("an odd cycle alone admits no placement choice")
        return _wraparound(initial_cycle), PaletteLedger.start(range((n0 + 1) // 2))
    for ear in ears:
        if len(ear.path) < 6:
            raise PreconditionError("balanced chain requires ears of length at least 5")
    base_colors = _wraparound(initial_cycle)
    palette = PaletteLedger.start(range(n0 // 2))
    steps_left = [_CHAIN_STEP_BUDGET]
    cycle_edges = _cycle_edge_set(initial_cycle)

    def dfs(colors: dict[int, int], h_order: int, idx: int,
            paths: tuple[tuple[int, ...], ...],
            edges: set[tuple[int, int]]) -> dict[int, int] | None:
        if idx == len(paths):
            return colors
        path = paths[idx]
        s = len(path)
        new_order = h_order + s - 2
        edges2 = edges | {(min(x, y), max(x, y)) for x, y in zip(path, path[1:])}
        # when a previous step prepared the avoiding property at path[0],
        # that orientation goes first; the flipped one stays as a gated
        # fallback since every extension is verified anyway
        orientations = (path, tuple(reversed(path)))
        for oriented in orientations:
            if new_order % 2 == 1 and idx + 1 < len(paths):
                nxt = paths[idx + 1]
                # preferred: prepare the avoiding property at one endpoint
                # of the next ear and keep the singleton off the other;
                # fallbacks drop the preparation and trust the verify gates
                plans = [(nxt[0], frozenset({nxt[-1]}), False),
                         (nxt[-1], frozenset({nxt[0]}), True),
                         (None, frozenset({nxt[0], nxt[-1]}), False),
                         (None, frozenset(), False)]
            elif new_order % 2 == 1 and idx + 1 == len(paths) and final_target is not None:
                plans = [(final_target, frozenset(), False)]
            else:
                plans = [(None, frozenset(), False)]
            for target, avoid, flip_next in plans:
                for out, _, allocated in _extension_options(
                    colors, h_order, oriented, palette, target, edges2, avoid,
                    strict=False,
                ):
                    steps_left[0] -= 1
                    if steps_left[0] < 0:
                        raise ConstructionError("balanced chain search budget exhausted")
                    nxt_paths = paths
                    if flip_next:
                        lst = list(paths)
                        lst[idx + 1] = tuple(reversed(lst[idx + 1]))
                        nxt_paths = tuple(lst)
                    palette.new_colors[:] = allocated
                    result = dfs(out, new_order, idx + 1, nxt_paths, edges2)
                    if result is not None:
                        return result
        return None

    result = dfs(base_colors, n0, 0, tuple(e.path for e in ears), set(cycle_edges))
    if result is None:
        raise ConstructionError("no verified balanced chain exists for this decomposition")
    return result, palette


def balanced_chain_coloring(
    n0: int,
    ears,
    final_target: int | None = None,
) -> tuple[Graph, Coloring]:
    """Grow an even base cycle 0..n0-1 by successive balanced ear extensions.

    Each ear must attach to two distinct existing vertices and bring fresh
    dense interior ids (attach_ear produces this shape). final_target asks
    for the color-avoiding property at that vertex when the final order is
    odd. Returns the grown graph and its coloring.
    """
    if n0 < 4 or n0 % 2 == 1:
        raise PreconditionError("the base cycle must be even, on at least 4 vertices")
    cyc = tuple(range(n0))
    edges = set(_cycle_edge_set(cyc))
    n = n0
    for ear in ears:
        s = len(ear.path)
        if not (0 <= ear.a < n and 0 <= ear.b < n):
            raise PreconditionError("ear attachments must be existing vertices")
        if sorted(ear.interior) != list(range(n, n + s - 2)):
            raise PreconditionError("ear interior must be the next dense vertex ids")
        edges.update((min(x, y), max(x, y)) for x, y in zip(ear.path, ear.path[1:]))
        n += s - 2
    if final_target is not None and not (0 <= final_target < n):
        raise PreconditionError("final target is not a vertex of the grown graph")
    if final_target is not None and n % 2 == 0:
        raise PreconditionError("a final target is only meaningful for odd final order")
    g = Graph(n, edges)
    colors, _ = _balanced_chain(cyc, list(ears), final_target)
    flat = tuple(colors[v] for v in range(n))
    return g, Coloring(flat, reported_count=len(set(flat)), method="balanced")


def long_ear_coloring(g: Graph, d: EarDecomposition) -> Coloring:
    """Revised half-order rainbow coloring of a 2-connected graph whose ear
    decomposition has only ears of length >= 5 (or none at all).

    Every color is used at most twice; for odd order exactly one color is
    used once.
    """
    if not is_2_connected(g):
        raise PreconditionError("long_ear_coloring requires a 2-connected graph")
    if g.n < 16:
        raise PreconditionError("long_ear_coloring is stated for order at least 16")
    if any(e.length < 5 for e in d.ears):
        raise PreconditionError("long_ear_coloring requires every ear length >= 5")
    if d.replay_edges() != set(g.edges):
        raise PreconditionError("decomposition does not reconstruct the graph")
    colors, _ = _balanced_chain(d.initial_cycle, list(d.ears))
    flat = tuple(colors[v] for v in range(g.n))
    return Coloring(flat, reported_count=len(set(flat)), method="long-ear")


def _cycle_edge_set(cycle: tuple[int, ...]) -> set[tuple[int, int]]:
    pairs = list(zip(cycle, cycle[1:])) + [(cycle[-1], cycle[0])]
    return {(min(u, v), max(u, v)) for u, v in pairs}


def _cycle_order(g: Graph) -> tuple[int, ...]:
    """Vertex sequence of a cycle graph, starting at 0, smaller neighbor first."""
    order = [0, min(g.adj(0))]
    while len(order) < g.n:
        nxt = [w for w in g.adj(order[-1]) if w != order[-2]]
        order.append(nxt[0])
    return tuple(order)


def _short_ear_colors(
    c_t: dict[int, int],
    short_ears: list[Ear],
    x: int,
    palette: PaletteLedger,
) -> dict[int, int]:
    """Color short ears (length 2..4) on top of the long-prefix coloring.

    Length-4 ears pair a fresh color across a_j and the third interior
    vertex and push a_j's old color inward; centers share one fresh color
    when there are several length-4 ears, otherwise reuse x. Length-3 ears
    do the same without a center; length-2 interiors reuse x. Later ears
    win recoloring conflicts at shared attachment vertices.
    """
    out = dict(c_t)
    four_count = sum(1 for e in short_ears if e.length == 4)
    x0 = palette.fresh() if four_count >= 2 else None
    queue = sorted(short_ears, key=lambda e: (-e.length, e.path))
    ordered: list[Ear] = []
    colored = set(c_t)
    while queue:
        # an attachment can sit on another short ear's interior; that ear
        # must be colored first, so defer until the attachment has a color
        ready = next((e for e in queue if e.a in colored), None)
        if ready is None:
            raise AssertionError("short ears form an unresolvable attachment chain")
        queue.remove(ready)
        ordered.append(ready)
        colored.update(ready.interior)
    for ear in ordered:
        a = ear.a
        old_a = c_t[a] if a in c_t else out[a]
        if ear.length == 4:
            v1, v2, v3 = ear.interior
            xj = palette.fresh()
            out[a] = xj
            out[v3] = xj
            out[v1] = old_a
            out[v2] = x0 if x0 is not None else x
        elif ear.length == 3:
            v1, v2 = ear.interior
            xj = palette.fresh()
            out[a] = xj
            out[v2] = xj
            out[v1] = old_a
        elif ear.length == 2:
            out[ear.interior[0]] = x
        else:
            raise AssertionError("short ears have length 2..4")
    return out


def _search_capped(g: Graph, cap: int) -> Coloring | None:
    """Bounded exhaustive witness search with at most cap colors."""
    from .oracle import SearchBudget, find_rainbow_coloring

    lb = max(diameter(g) - 1, 1)
    budget = SearchBudget(max_vertices=g.n)
    for k in range(lb, cap + 1):
        found = find_rainbow_coloring(g, k, RAINBOW, budget)
        if found is not None:
            coloring, _ = found
            return Coloring(coloring.colors, coloring.reported_count, method="exact")
    return None


def two_connected_coloring(g: Graph) -> Coloring:
    """Rainbow vertex-coloring of a 2-connected graph with at most as many
    colors as the same-order cycle needs.

    Pipeline: nonincreasing ear decomposition; balanced chain over the
    ears of length >= 5; explicit rules for ears of length 2..4; chords
    need no colors of their own. The result is verified before being
    returned, retrying each available reuse color if needed, and small
    orders fall back to a capped exhaustive search.
    """
    if not is_2_connected(g):
        raise PreconditionError("two_connected_coloring requires a 2-connected graph")
    n = g.n
    if g.is_complete():
        return Coloring((0,) * n, reported_count=0, method="complete")
    if g.m == n:  # a cycle
        pattern = cycle_coloring(n)
        order = _cycle_order(g)
        flat = [0] * n
        for pos, v in enumerate(order):
            flat[v] = pattern.colors[pos]
        return Coloring(tuple(flat), pattern.reported_count, method="cycle")
    cap = cycle_rvc_value(n)
    if diameter(g) == 2:
        flat = (0,) * n
        if verify_rainbow_vc(g, flat).verified:
            return Coloring(flat, reported_count=1, method="two-connected")

    attempt = _two_connected_pipeline(g)
    if attempt is not None and attempt.reported_count <= cap:
        return attempt
    if n <= 15:
        found = _search_capped(g, cap)
        if found is not None:
            return Coloring(found.colors, found.reported_count, method="two-connected")
    raise ConstructionError(
        f"no verified coloring within {cap} colors was constructed for n={n}"
    )


def _two_connected_pipeline(g: Graph) -> Coloring | None:
    """Decomposition-driven construction; None when no reuse color verifies."""
    d = ear_decomposition(g)
    long_ears: list[Ear] = []
    rest: list[Ear] = []
    for ear in d.ears:
        if ear.length >= 5 and not rest:
            long_ears.append(ear)
        else:
            rest.append(ear)
    if any(e.length >= 5 for e in rest):
        # only possible when a budget-exhausted ear search broke monotonicity
        raise ConstructionError(
            "ear lengths are not nonincreasing; rerun with a larger ear budget"
        )
    short_ears = [e for e in rest if 2 <= e.length <= 4]
    c_t, palette = _balanced_chain(d.initial_cycle, long_ears)

    stats_once = _once_used(c_t)
    candidates = stats_once + sorted(set(c_t.values()) - set(stats_once))
    base_new = list(palette.new_colors)
    for x in candidates:
        palette.new_colors[:] = base_new
        colors = _short_ear_colors(c_t, short_ears, x, palette)
        if len(colors) != g.n:
            raise AssertionError("pipeline did not color every vertex")
        flat = tuple(colors[v] for v in range(g.n))
        if len(set(flat)) > cycle_rvc_value(g.n):
            return None  # count is independent of the reuse color; retrying cannot help
        if verify_rainbow_vc(g, flat).verified:
            return Coloring(flat, reported_count=len(set(flat)), method="two-connected")
    return None


def block_coloring(g: Graph) -> Coloring:
    """Rainbow vertex-coloring of a connected graph, one palette per
    non-complete block plus fresh distinct colors on the cut vertices.

    Complete blocks reuse a color from the first non-complete block's
    palette; when every block is complete the cut vertices' colors and one
    shared color suffice.
    """
    if g.n < 2:
        raise PreconditionError("block_coloring requires at least 2 vertices")
    if not is_connected(g):
        raise PreconditionError("block_coloring requires a connected graph")
    if g.is_complete():
        return Coloring((0,) * g.n, reported_count=0, method="complete")
    bd = block_decomposition(g)
    cuts = sorted(bd.cut_vertices)
    flat = [0] * g.n

    block_graphs = []
    any_noncomplete = False
    for block in bd.blocks:
        sub, back = g.induced(block)
        complete = sub.is_complete()
        any_noncomplete = any_noncomplete or not complete
        block_graphs.append((sub, back, complete))

    if not any_noncomplete:
        # cut vertices distinct, everything else shares the first cut color
        for i, v in enumerate(cuts):
            flat[v] = i
        coloring = Coloring(tuple(flat), reported_count=len(set(flat)), method="blocks")
        cert = verify_rainbow_vc(g, coloring.colors)
        if not cert.verified:
            raise ConstructionError(f"block coloring failed verification at {cert.failing_pair}")
        return coloring

    offset = 0
    reuse_color: int | None = None
    for sub, back, complete in block_graphs:
        if complete:
            continue
        sub_coloring = two_connected_coloring(sub)
        if reuse_color is None:
            reuse_color = offset  # a color that appears in the first palette
        for new_id, col in enumerate(sub_coloring.colors):
            flat[back[new_id]] = col + offset
        offset += max(sub_coloring.colors) + 1
    for sub, back, complete in block_graphs:
        if not complete:
            continue
        for new_id in range(sub.n):
            flat[back[new_id]] = reuse_color
    for i, v in enumerate(cuts):
        flat[v] = offset + i

    coloring = Coloring(tuple(flat), reported_count=len(set(flat)), method="blocks")
    cert = verify_rainbow_vc(g, coloring.colors)
    if not cert.verified:
        raise ConstructionError(f"block coloring failed verification at {cert.failing_pair}")
    return coloring


def block_bound(g: Graph) -> int:
    """Sum of per-block cycle bounds plus the cut-vertex count."""
    if g.is_complete():
        return 0
    bd = block_decomposition(g)
    total = bd.t
    for block in bd.blocks:
        sub, _ = g.induced(block)
        if not sub.is_complete():
            total += cycle_rvc_value(sub.n)
    return total
