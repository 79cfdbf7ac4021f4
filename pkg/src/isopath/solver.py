"""Independent brute-force oracle: enumerate all isometric paths of a small
graph and find a minimum cover by branch-and-bound set cover.

Correctness over speed: intended for graphs up to roughly 30 vertices.
The search is single-threaded and fully deterministic; identical inputs
yield identical results including the node count.
"""

from dataclasses import dataclass

from .cover import PROVENANCE_SOLVER, Cover, Path
from .errors import DisconnectedGraphError, PoolBudgetError
from .formulas import ceil_div
from .graph import DistanceMatrix, Graph, all_pairs_distances

DEFAULT_POOL_CAP = 10**7
DEFAULT_NODE_BUDGET = 10**8


@dataclass(frozen=True)
class PathPool:
    """All isometric paths of a graph in canonical order.

    Paths are stored with the lexicographically smaller endpoint first and
    the list is sorted lexicographically by vertex sequence.  ``masks[i]``
    is the covered-vertex bitset of ``paths[i]``.
    """

    paths: tuple
    masks: tuple
    max_path_vertices: int


@dataclass(frozen=True)
class SolveResult:
    optimum: Cover
    size: int
    nodes_explored: int
    proof_of_optimality: bool


def enumerate_isometric_paths(
    g: Graph, d: DistanceMatrix, pool_cap: int = DEFAULT_POOL_CAP
) -> PathPool:
    """Every simple path whose edge length equals its endpoint distance,
    including all 1- and 2-vertex paths, each exactly once in canonical form.
    """
    n = g.n
    if n == 0 or not all(d[0][v] >= 0 for v in range(n)):
        raise DisconnectedGraphError("isometric path enumeration needs a connected graph")
    found = [Path((v,)) for v in range(n)]
    adj = [g.neighbors(v) for v in range(n)]

    def extend(prefix, t, remaining):
        # prefix is isometric from its start; remaining = d(start, t) - len in edges
        if len(found) > pool_cap:
            raise PoolBudgetError(f"isometric path pool exceeds cap {pool_cap}")
        tail = prefix[-1]
        row_s = d[prefix[0]]
        row_t = d[t]
        depth = len(prefix)
        for w in adj[tail]:
            if row_s[w] != depth or row_t[w] != remaining - 1:
                continue
            if w == t:
                found.append(Path(prefix + (w,)))
            else:
                extend(prefix + (w,), t, remaining - 1)

    for s in range(n):
        for t in range(s + 1, n):
            extend((s,), t, d[s][t])
    if len(found) > pool_cap:
        raise PoolBudgetError(f"isometric path pool exceeds cap {pool_cap}")
    found.sort(key=lambda p: p.vertices)
    masks = []
    for p in found:
        mask = 0
        for v in p.vertices:
            mask |= 1 << v
        masks.append(mask)
    return PathPool(tuple(found), tuple(masks), max(len(p) for p in found))


def _greedy_indices(pool: PathPool, n: int):
    full = (1 << n) - 1
    covered = 0
    chosen = []
    while covered != full:
        best_idx = -1
        best_gain = 0
        for i, mask in enumerate(pool.masks):
            gain = (mask & ~covered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_idx = i
        if best_idx < 0:
            raise DisconnectedGraphError("pool cannot cover every vertex")
        chosen.append(best_idx)
        covered |= pool.masks[best_idx]
    return chosen


def greedy_cover(g: Graph, pool: PathPool) -> Cover:
    """Valid cover from repeatedly taking the canonical-first path covering
    the most uncovered vertices; used to seed the exact search."""
    chosen = _greedy_indices(pool, g.n)
    return Cover(
        tuple(pool.paths[i] for i in chosen),
        provenance=PROVENANCE_SOLVER,
        note="greedy upper bound",
    )


def solve_min_cover(g: Graph, budget: int | None = None) -> SolveResult:
    """Minimum isometric path cover by branch-and-bound over the path pool.

    Branches on the lowest-index uncovered vertex, trying pool paths through
    it in canonical order; prunes with the bound size + ceil(uncovered /
    max-path-size).  The returned optimum is the first optimum in the
    canonical search order.  If the node budget runs out the best incumbent
    is returned with proof_of_optimality False.
    """
    if budget is None:
        budget = DEFAULT_NODE_BUDGET
    d = all_pairs_distances(g)
    if g.n == 0 or not d.connected:
        raise DisconnectedGraphError("solver needs a non-empty connected graph")
    pool = enumerate_isometric_paths(g, d)
    n = g.n
    full = (1 << n) - 1
    masks = pool.masks
    max_len = pool.max_path_vertices

    # Dominance rule: never branch on a singleton while a multi-vertex path
    # covers the branching vertex (always true for connected n >= 2).
    candidates = [[] for _ in range(n)]
    for i, p in enumerate(pool.paths):
        if len(p) > 1:
            for v in p.vertices:
                candidates[v].append(i)
    for v in range(n):
        if not candidates[v]:
            candidates[v] = [
                i for i, p in enumerate(pool.paths) if p.vertices == (v,)
            ]

    greedy = _greedy_indices(pool, n)
    # limit = smallest size we still have to beat; ties with the greedy seed
    # are explored so the first optimum in canonical order is the one kept.
    limit = len(greedy) + 1
    best = list(greedy)
    improved = False
    nodes = 0
    exhausted = False

    def search(covered, chosen):
        nonlocal nodes, limit, best, improved, exhausted
        nodes += 1
        if nodes > budget:
            exhausted = True
            return True
        if covered == full:
            best = list(chosen)
            improved = True
            limit = len(chosen)
            return False
        if len(chosen) + ceil_div(n - covered.bit_count(), max_len) >= limit:
            return False
        v = ((~covered & full) & -(~covered & full)).bit_length() - 1
        for i in candidates[v]:
            chosen.append(i)
            stop = search(covered | masks[i], chosen)
            chosen.pop()
            if stop:
                return True
        return False

    search(0, [])
    note = "branch-and-bound optimum" if not exhausted else "budget-truncated incumbent"
    if not improved and exhausted:
        note = "greedy incumbent (budget exhausted)"
    cover = Cover(
        tuple(pool.paths[i] for i in best),
        provenance=PROVENANCE_SOLVER,
        note=note,
    )
    return SolveResult(
        optimum=cover,
        size=len(best),
        nodes_explored=nodes,
        proof_of_optimality=not exhausted,
    )
