"""Exact maximum-independent-set solving over conflict graphs of vector families.

Two engines: a branch-and-bound search (greedy clique-cover upper
bounds, max-degree branching, deterministic) and an exhaustive oracle
for small graphs.  solve_extremal wraps them for the two extremal
targets: "g" (largest family avoiding the minimum product -2l) and "m"
(largest family with no negative product).  For "g" the search may be
restricted to shift-closed families, which preserves the optimum value.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .constructions import ekr_family, inductive_extend, split_family
from .formulas import p_split
from .shifting import precedes
from .vectors import Profile, SignedVector, VectorFamily, enumerate_all, scalar_product

DEFAULT_VERTEX_CAP = 5000
BRUTEFORCE_VERTEX_CAP = 25

STATUS_EXACT = "exact"
STATUS_TIMEOUT = "lower_bound_timeout"


class VertexCapExceeded(ValueError):
    """Raised when a requested conflict graph would exceed the vertex cap."""


@dataclass(frozen=True)
class ForbiddenSpec:
    """Which scalar products create a conflict edge.

    Exactly one of exact_values (a nonempty set of forbidden products)
    or below (every product strictly less is forbidden) is set.
    """

    exact_values: Optional[frozenset[int]] = None
    below: Optional[int] = None

    def __post_init__(self) -> None:
        if (self.exact_values is None) == (self.below is None):
            raise ValueError("exactly one of exact_values / below must be given")
        if self.exact_values is not None and not self.exact_values:
            raise ValueError("exact_values must be nonempty")

    @classmethod
    def exact(cls, values) -> "ForbiddenSpec":
        return cls(exact_values=frozenset(values))

    @classmethod
    def all_below(cls, threshold: int) -> "ForbiddenSpec":
        return cls(below=threshold)

    def forbids(self, product: int) -> bool:
        if self.exact_values is not None:
            return product in self.exact_values
        return product < self.below

    def describe(self) -> str:
        if self.exact_values is not None:
            return "exact:" + ",".join(str(v) for v in sorted(self.exact_values))
        return f"below:{self.below}"


class ConflictGraph:
    """Vertices in canonical family order; adjacency as per-vertex bit masks."""

    __slots__ = ("family", "spec", "adj")

    def __init__(
        self,
        adj: Sequence[int],
        family: Optional[VectorFamily] = None,
        spec: Optional[ForbiddenSpec] = None,
    ):
        self.adj = tuple(adj)
        self.family = family
        self.spec = spec
        for v, mask in enumerate(self.adj):
            if mask >> len(self.adj):
                raise ValueError(f"adjacency mask of vertex {v} out of range")
            if mask & (1 << v):
                raise ValueError(f"vertex {v} adjacent to itself")
        for v, mask in enumerate(self.adj):
            rest = mask
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not self.adj[u] & (1 << v):
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                rest ^= low

    @property
    def n_vertices(self) -> int:
        return len(self.adj)

    @property
    def n_edges(self) -> int:
        return sum(mask.bit_count() for mask in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()


def build_conflict_graph(
    profile: Profile,
    spec: ForbiddenSpec,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> ConflictGraph:
    """Conflict graph of the full vector class under a forbidden-product spec."""
    size = profile.family_size()
    if size > vertex_cap:
        raise VertexCapExceeded(
            f"class of profile (n={profile.n}, k={profile.k}, l={profile.l}) "
            f"has {size} vectors, above the cap of {vertex_cap}"
        )
    family = enumerate_all(profile)
    return graph_from_family(family, spec)


def graph_from_family(family: VectorFamily, spec: ForbiddenSpec) -> ConflictGraph:
    members = family.members
    n = len(members)
    adj = [0] * n
    for a in range(n):
        va = members[a]
        for b in range(a + 1, n):
            if spec.forbids(scalar_product(va, members[b])):
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return ConflictGraph(adj, family, spec)


@dataclass(frozen=True)
class FamilyCheck:
    ok: bool
    pairs_checked: int
    violation: Optional[tuple[SignedVector, SignedVector, int]] = None


def verify_family(fam: VectorFamily, spec: ForbiddenSpec) -> FamilyCheck:
    """Scan all pairs of a family for a forbidden product; first hit wins."""
    members = fam.members
    checked = 0
    for a in range(len(members)):
        va = members[a]
        for b in range(a + 1, len(members)):
            checked += 1
            prod = scalar_product(va, members[b])
            if spec.forbids(prod):
                return FamilyCheck(False, checked, (va, members[b], prod))
    return FamilyCheck(True, checked)


@dataclass(frozen=True)
class SolveResult:
    value: int
    status: str
    nodes_explored: int
    elapsed: float
    witness_indices: tuple[int, ...]
    witness: Optional[VectorFamily] = None

    @property
    def is_exact(self) -> bool:
        return self.status == STATUS_EXACT


def _indices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _greedy_independent(adj: Sequence[int], pool: int) -> int:
    """Deterministic greedy independent set inside pool, lowest index first."""
    chosen = 0
    while pool:
        low = pool & -pool
        v = low.bit_length() - 1
        chosen |= low
        pool &= ~(adj[v] | low)
    return chosen


def _greedy_clique_cover(adj: Sequence[int], pool: int) -> list[int]:
    """Partition pool into cliques greedily; the count bounds any independent set."""
    cliques = []
    remaining = pool
    while remaining:
        low = remaining & -remaining
        v = low.bit_length() - 1
        clique = low
        cands = remaining & adj[v] & ~low
        while cands:
            ulow = cands & -cands
            u = ulow.bit_length() - 1
            clique |= ulow
            cands &= adj[u] & ~ulow
        cliques.append(clique)
        remaining &= ~clique
    return cliques


class _Timeout(Exception):
    pass


class _SearchState:
    __slots__ = ("best_size", "best_mask", "nodes", "deadline", "cover", "covered")

    def __init__(self, best_size: int, best_mask: int, deadline: float):
        self.best_size = best_size
        self.best_mask = best_mask
        self.nodes = 0
        self.deadline = deadline
        self.cover: list[int] = []
        self.covered = 0


def _tick(state: _SearchState, adj: Sequence[int], pool: int) -> None:
    state.nodes += 1
    if state.nodes % 64 == 0:
        state.cover = _greedy_clique_cover(adj, pool)
        state.covered = 0
        for c in state.cover:
            state.covered |= c
    if state.nodes % 256 == 0 and time.monotonic() > state.deadline:
        raise _Timeout


def _cover_bound(state: _SearchState, pool: int) -> int:
    # a clique cover of any superset, restricted to pool, still covers what
    # it covers; vertices it misses count as singletons
    bound = (pool & ~state.covered).bit_count()
    for c in state.cover:
        if c & pool:
            bound += 1
    return bound


def _bnb(adj: Sequence[int], state: _SearchState, pool: int, size: int, mask: int) -> None:
    _tick(state, adj, pool)

    # cheap reductions: isolated vertices are always taken; a vertex with
    # one neighbor is always at least as good as the neighbor
    while pool:
        applied = False
        scan = pool
        while scan:
            low = scan & -scan
            scan ^= low
            if not pool & low:
                continue
            v = low.bit_length() - 1
            nbrs = adj[v] & pool
            if nbrs == 0:
                size += 1
                mask |= low
                pool ^= low
                applied = True
            elif nbrs & (nbrs - 1) == 0:
                size += 1
                mask |= low
                pool &= ~(low | nbrs)
                applied = True
        if not applied:
            break

    if pool == 0:
        if size > state.best_size:
            state.best_size = size
            state.best_mask = mask
        return

    if size + _cover_bound(state, pool) <= state.best_size:
        return

    # branch on the densest remaining vertex, lowest index on ties
    best_v = -1
    best_deg = -1
    scan = pool
    while scan:
        low = scan & -scan
        scan ^= low
        deg = (adj[low.bit_length() - 1] & pool).bit_count()
        if deg > best_deg:
            best_deg = deg
            best_v = low.bit_length() - 1
    bit = 1 << best_v
    _bnb(adj, state, pool & ~(adj[best_v] | bit), size + 1, mask | bit)
    _bnb(adj, state, pool & ~bit, size, mask)


def mis_exact(
    graph: ConflictGraph,
    budget: float = 60.0,
    initial_mask: int = 0,
) -> SolveResult:
    """Branch-and-bound maximum independent set.

    Deterministic and sequential.  initial_mask seeds the incumbent; it
    must be independent.  On budget exhaustion the best set found so far
    is returned with a lower-bound status.
    """
    n = graph.n_vertices
    adj = graph.adj
    start = time.monotonic()
    full = (1 << n) - 1

    seed = initial_mask
    rest = seed
    while rest:
        low = rest & -rest
        if adj[low.bit_length() - 1] & seed:
            raise ValueError("initial incumbent is not independent")
        rest ^= low
    greedy = _greedy_independent(adj, full)
    if greedy.bit_count() > seed.bit_count():
        seed = greedy

    state = _SearchState(seed.bit_count(), seed, start + budget)
    state.cover = _greedy_clique_cover(adj, full)
    for c in state.cover:
        state.covered |= c

    import sys

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 2 * n + 100))
    status = STATUS_EXACT
    try:
        _bnb(adj, state, full, 0, 0)
    except _Timeout:
        status = STATUS_TIMEOUT
    finally:
        sys.setrecursionlimit(old_limit)

    witness_indices = _indices(state.best_mask)
    witness = None
    if graph.family is not None:
        witness = VectorFamily(
            graph.family.profile, [graph.family.members[i] for i in witness_indices]
        )
    return SolveResult(
        value=state.best_size,
        status=status,
        nodes_explored=state.nodes,
        elapsed=time.monotonic() - start,
        witness_indices=witness_indices,
        witness=witness,
    )


def mis_bruteforce(graph: ConflictGraph) -> SolveResult:
    """Exhaustive ground-truth maximum independent set for graphs up to 25 vertices.

    Enumerates every maximal clique of the complement graph; independent
    of the branch-and-bound path.
    """
    n = graph.n_vertices
    if n > BRUTEFORCE_VERTEX_CAP:
        raise ValueError(f"oracle limited to {BRUTEFORCE_VERTEX_CAP} vertices, got {n}")
    import networkx as nx

    start = time.monotonic()
    comp = nx.Graph()
    comp.add_nodes_from(range(n))
    for a in range(n):
        for b in range(a + 1, n):
            if not graph.adj[a] & (1 << b):
                comp.add_edge(a, b)
    best: tuple[int, tuple[int, ...]] = (0, ())
    count = 0
    for clique in nx.find_cliques(comp):
        count += 1
        cand = tuple(sorted(clique))
        key = (len(cand), tuple(-i for i in cand))
        if key > (best[0], tuple(-i for i in best[1])):
            best = (len(cand), cand)
    witness = None
    if graph.family is not None:
        witness = VectorFamily(
            graph.family.profile, [graph.family.members[i] for i in best[1]]
        )
    return SolveResult(
        value=best[0],
        status=STATUS_EXACT,
        nodes_explored=count,
        elapsed=time.monotonic() - start,
        witness_indices=best[1],
        witness=witness,
    )


def _potential(v: SignedVector) -> int:
    total = 0
    for i in v.pos_support():
        total += i
    for i in v.neg_support():
        total -= i
    return total


def greedy_seed_g(profile: Profile) -> VectorFamily:
    """Strong avoiding family assembled from the known constructions.

    Starts from the full class at n = k + l (edgeless there since two
    disjoint plus supports would need 2k > k + l coordinates) and grows
    one dimension at a time, keeping the larger of the inductive
    extension and the fixed-first-coordinate family.
    """
    n, k, l = profile.n, profile.k, profile.l
    if not profile.is_g_profile:
        raise ValueError("seed construction applies to profiles with k > l >= 1")
    fam = enumerate_all(Profile(k + l, k, l))
    for dim in range(k + l + 1, n + 1):
        grown = inductive_extend(fam, check=False)
        fixed = ekr_family(Profile(dim, k, l))
        fam = grown if len(grown) >= len(fixed) else fixed
    return fam


def _solve_shifted(
    graph: ConflictGraph, budget: float, seed_mask: int
) -> SolveResult:
    """Optimum over shift-closed families only; valid for the g target."""
    family = graph.family
    assert family is not None
    members = family.members
    n = len(members)
    start = time.monotonic()

    # linear extension of the shift order: ascending weighted support sum
    order = sorted(range(n), key=lambda i: (_potential(members[i]), i))
    rank = [0] * n
    for r, i in enumerate(order):
        rank[i] = r
    adj = [0] * n
    for r, i in enumerate(order):
        mask = graph.adj[i]
        while mask:
            low = mask & -mask
            mask ^= low
            adj[r] |= 1 << rank[low.bit_length() - 1]

    succ = [0] * n
    pred = [0] * n
    for a in range(n):
        va = members[order[a]]
        for b in range(a + 1, n):
            if precedes(va, members[order[b]]):
                succ[a] |= 1 << b
                pred[b] |= 1 << a

    seed_ranked = 0
    rest = seed_mask
    while rest:
        low = rest & -rest
        rest ^= low
        seed_ranked |= 1 << rank[low.bit_length() - 1]

    state = _SearchState(seed_ranked.bit_count(), seed_ranked, start + budget)
    full = (1 << n) - 1
    state.cover = _greedy_clique_cover(adj, full)
    for c in state.cover:
        state.covered |= c

    def rec(idx: int, chosen: int, dead: int, size: int) -> None:
        _tick(state, adj, full & ~dead & (full << idx) if idx < n else 0)
        while idx < n:
            bit = 1 << idx
            if dead & bit:
                idx += 1
                continue
            if pred[idx] & dead:
                dead |= bit | succ[idx]
                idx += 1
                continue
            if adj[idx] & chosen:
                dead |= bit | succ[idx]
                idx += 1
                continue
            break
        if idx >= n:
            if size > state.best_size:
                state.best_size = size
                state.best_mask = chosen
            return
        remaining = full & ~dead & (full << idx)
        if size + _cover_bound(state, remaining) <= state.best_size:
            return
        bit = 1 << idx
        rec(idx + 1, chosen | bit, dead | (adj[idx] & ~((1 << idx) - 1)), size + 1)
        rec(idx + 1, chosen, dead | bit | succ[idx], size)

    import sys

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 2 * n + 100))
    status = STATUS_EXACT
    try:
        rec(0, 0, 0, 0)
    except _Timeout:
        status = STATUS_TIMEOUT
    finally:
        sys.setrecursionlimit(old_limit)

    witness_ranked = _indices(state.best_mask)
    witness_indices = tuple(sorted(order[r] for r in witness_ranked))
    witness = VectorFamily(family.profile, [members[i] for i in witness_indices])
    return SolveResult(
        value=state.best_size,
        status=status,
        nodes_explored=state.nodes,
        elapsed=time.monotonic() - start,
        witness_indices=witness_indices,
        witness=witness,
    )


def solve_extremal(
    profile: Profile,
    target: str,
    budget: float = 60.0,
    shifted_pruning: Optional[bool] = None,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    deterministic: bool = True,
) -> SolveResult:
    """Exact extremal family size for a profile.

    target "g": forbid the single product -2l (requires k > l >= 1);
    shift-closure pruning defaults on and preserves the optimum.
    target "m": forbid every negative product; pruning is refused since
    the optimum there is not attained on shift-closed families.
    """
    if not deterministic:
        raise ValueError("only deterministic sequential search is implemented")
    if target == "g":
        if not profile.is_g_profile:
            raise ValueError(
                f"target g requires k > l >= 1, got k={profile.k}, l={profile.l}"
            )
        spec = ForbiddenSpec.exact({-2 * profile.l})
        if shifted_pruning is None:
            shifted_pruning = True
    elif target == "m":
        if shifted_pruning:
            raise ValueError("shift-closure pruning is not valid for target m")
        spec = ForbiddenSpec.all_below(0)
        shifted_pruning = False
    else:
        raise ValueError(f"unknown target {target!r}; expected 'g' or 'm'")

    graph = build_conflict_graph(profile, spec, vertex_cap)
    assert graph.family is not None
    index_of = {v: i for i, v in enumerate(graph.family.members)}

    if target == "g":
        seed_family = greedy_seed_g(profile)
    else:
        best_x = p_split(profile.n, profile.k, profile.l).argmax
        seed_family = split_family(profile, range(1, best_x + 1))
    seed_mask = 0
    for v in seed_family:
        seed_mask |= 1 << index_of[v]
    rest = seed_mask
    while rest:
        low = rest & -rest
        rest ^= low
        if graph.adj[low.bit_length() - 1] & seed_mask:
            seed_mask = 0  # construction unexpectedly conflicts; fall back
            break

    if shifted_pruning:
        return _solve_shifted(graph, budget, seed_mask)
    return mis_exact(graph, budget, seed_mask)
