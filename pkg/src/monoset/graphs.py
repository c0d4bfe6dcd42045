"""Graphs, generators for the classic edge/vertex set systems, the
contraction-based signed min-cut membership test, and clique search.

Edge ground sets index edges by their position in the edge list; vertex
ground sets use vertex indices.  The enumeration helpers at the bottom are
deliberately independent of the operator pipeline so they can act as
verdicts for the computed structural counterparts.
"""

from collections import deque
from dataclasses import dataclass

from .approx import Bipartition, bimonotone_close
from .separation import MembershipOracle
from .setsys import (
    GroundSet,
    SetSystem,
    complement,
    down_closure,
    element_complement,
    minimal,
    up_closure,
)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with stable edge indices."""

    n: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple | None = None
    vertex_weights: tuple | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        seen = set()
        norm = []
        for u, v in self.edges:
            if u == v:
                raise ValueError("self-loops are not allowed")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError("edge endpoint out of range")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise ValueError(f"parallel edge {e}")
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "edges", tuple(norm))
        if self.weights is not None and len(self.weights) != len(self.edges):
            raise ValueError("edge weight count mismatch")
        if self.vertex_weights is not None and len(self.vertex_weights) != self.n:
            raise ValueError("vertex weight count mismatch")

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency_masks(self) -> list[int]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def closed_neighborhood_masks(self) -> list[int]:
        return [a | (1 << v) for v, a in enumerate(self.adjacency_masks())]

    def to_dict(self) -> dict:
        doc = {"n": self.n, "edges": [[u + 1, v + 1] for u, v in self.edges]}
        if self.weights is not None:
            doc["weights"] = list(self.weights)
        return doc

    @classmethod
    def from_dict(cls, doc: dict) -> "Graph":
        edges = tuple((u - 1, v - 1) for u, v in doc["edges"])
        weights = tuple(doc["weights"]) if "weights" in doc else None
        return cls(int(doc["n"]), edges, weights)


def path_graph(k: int) -> Graph:
    return Graph(k, tuple((i, i + 1) for i in range(k - 1)))


def cycle_graph(k: int) -> Graph:
    return Graph(k, tuple((i, (i + 1) % k) for i in range(k)))


def complete_graph(k: int) -> Graph:
    return Graph(k, tuple((i, j) for i in range(k) for j in range(i + 1, k)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i + 1) for i in range(leaves)))


def triangle_graph() -> Graph:
    return cycle_graph(3)


class UnionFind:
    """Array forest with path compression; enough for contraction work."""

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


# ---------------------------------------------------------------------------
# subgraph predicates


def _components(g: Graph, edge_mask: int) -> UnionFind:
    uf = UnionFind(g.n)
    for idx, (u, v) in enumerate(g.edges):
        if edge_mask >> idx & 1:
            uf.union(u, v)
    return uf


def st_connected(g: Graph, edge_mask: int, s: int, t: int) -> bool:
    uf = _components(g, edge_mask)
    return uf.find(s) == uf.find(t)


def spanning_connected(g: Graph, edge_mask: int) -> bool:
    uf = _components(g, edge_mask)
    root = uf.find(0)
    return all(uf.find(v) == root for v in range(1, g.n))


def is_forest(g: Graph, edge_mask: int) -> bool:
    uf = UnionFind(g.n)
    for idx, (u, v) in enumerate(g.edges):
        if edge_mask >> idx & 1:
            if uf.find(u) == uf.find(v):
                return False
            uf.union(u, v)
    return True


def is_bipartite_subgraph(g: Graph, edge_mask: int) -> bool:
    adj = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(g.edges):
        if edge_mask >> idx & 1:
            adj[u].append(v)
            adj[v].append(u)
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1 or not adj[start]:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if color[y] == -1:
                    color[y] = color[x] ^ 1
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def dominates(g: Graph, vertex_mask: int) -> bool:
    for nb in g.closed_neighborhood_masks():
        if not nb & vertex_mask:
            return False
    return True


def edge_cut_mask(g: Graph, side: int) -> int:
    """Edges with exactly one endpoint inside the vertex set ``side``."""
    mask = 0
    for idx, (u, v) in enumerate(g.edges):
        if (side >> u & 1) != (side >> v & 1):
            mask |= 1 << idx
    return mask


# ---------------------------------------------------------------------------
# system generators


def system_st_paths(g: Graph, s: int, t: int) -> SetSystem:
    """Edge sets of all simple s-t paths."""
    adj = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(g.edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))
    found: list[int] = []

    def walk(x: int, visited: int, edges_used: int):
        if x == t:
            found.append(edges_used)
            return
        for y, idx in adj[x]:
            if not visited >> y & 1:
                walk(y, visited | (1 << y), edges_used | (1 << idx))

    if s == t:
        return SetSystem.from_masks(max(g.m, 1), [0])
    walk(s, 1 << s, 0)
    return SetSystem.from_masks(max(g.m, 1), found)


def system_st_connected(g: Graph, s: int, t: int) -> MembershipOracle:
    return MembershipOracle(max(g.m, 1), lambda mask: st_connected(g, mask, s, t),
                            "upper", name="st-connected")


def system_edge_cuts(g: Graph) -> SetSystem:
    """All cut edge-sets over vertex bipartitions; the trivial partition
    contributes the empty set."""
    masks = {edge_cut_mask(g, side << 1) for side in range(1 << (g.n - 1))}
    return SetSystem.from_masks(max(g.m, 1), masks)


def system_bipartite_subgraphs(g: Graph) -> MembershipOracle:
    return MembershipOracle(max(g.m, 1), lambda mask: is_bipartite_subgraph(g, mask),
                            "lower", name="bipartite")


def system_dominating(g: Graph) -> MembershipOracle:
    return MembershipOracle(g.n, lambda mask: dominates(g, mask),
                            "upper", name="dominating")


def system_forests(g: Graph) -> MembershipOracle:
    return MembershipOracle(max(g.m, 1), lambda mask: is_forest(g, mask),
                            "lower", name="forests")


def system_spanning_connected(g: Graph) -> MembershipOracle:
    return MembershipOracle(max(g.m, 1), lambda mask: spanning_connected(g, mask),
                            "upper", name="spanning-connected")


def structural_counterpart(system: SetSystem, mode: str) -> SetSystem:
    """The index family whose rows reformulate optimization over the system:
    minimal complemented non-members of the up-closure for minimization,
    minimal non-members of the down-closure for maximization."""
    if mode == "min":
        return minimal(element_complement(complement(up_closure(system))))
    if mode == "max":
        return minimal(complement(down_closure(system)))
    raise ValueError("mode must be 'min' or 'max'")


# ---------------------------------------------------------------------------
# signed min-cut membership (contraction + bipartiteness)


def signed_mincut_membership(g: Graph, split: Bipartition, t: int) -> bool:
    """Whether an edge set lies in the mixed-order closure of the cut family.

    Contract the endpoints of every missing I-edge, wire the kept J-edges
    between the contracted classes, and test 2-colorability; a self-loop in
    the quotient means two forced-together endpoints must also be separated,
    so it fails immediately.
    """
    if split.ground.n != max(g.m, 1):
        raise ValueError("split does not match the edge ground set")
    uf = UnionFind(g.n)
    forced = split.part_i & ~t
    for idx, (u, v) in enumerate(g.edges):
        if forced >> idx & 1:
            uf.union(u, v)
    adj: dict[int, list[int]] = {}
    kept = t & split.part_j
    for idx, (u, v) in enumerate(g.edges):
        if kept >> idx & 1:
            ru, rv = uf.find(u), uf.find(v)
            if ru == rv:
                return False
            adj.setdefault(ru, []).append(rv)
            adj.setdefault(rv, []).append(ru)
    color: dict[int, int] = {}
    for start in adj:
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in color:
                    color[y] = color[x] ^ 1
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def signed_mincut_oracle(g: Graph, split: Bipartition) -> MembershipOracle:
    return MembershipOracle(
        max(g.m, 1), lambda mask: signed_mincut_membership(g, split, mask),
        "bimonotone", split=split, name="signed-mincut")


def signed_mincut_closure_brute(g: Graph, split: Bipartition) -> SetSystem:
    """Reference closure membership by closing the explicit cut family."""
    return bimonotone_close(system_edge_cuts(g), split)


# ---------------------------------------------------------------------------
# cliques


def find_violated_cliques(g: Graph, t: int, limit: int = 3) -> list[int]:
    """Up to ``limit`` maximal cliques (size >= 2) inside the induced
    subgraph on the vertex set t, greedily expanded in ascending
    (induced-degree, index) order."""
    adj = g.adjacency_masks()
    inside = [v for v in range(g.n) if t >> v & 1]
    order = sorted(inside, key=lambda v: ((adj[v] & t).bit_count(), v))
    cliques: list[int] = []
    for seed in order:
        if len(cliques) >= limit:
            break
        if not adj[seed] & t:
            continue
        clique = 1 << seed
        for u in order:
            if clique >> u & 1:
                continue
            if adj[u] & clique == clique:
                clique |= 1 << u
        if clique.bit_count() >= 2 and clique not in cliques:
            cliques.append(clique)
    return cliques


# ---------------------------------------------------------------------------
# independent enumerations used as verdicts for the computed counterparts


def _minimal_masks(masks) -> list[int]:
    out = []
    for m in sorted(set(masks), key=lambda x: (x.bit_count(), x)):
        if not any(k & m == k for k in out):
            out.append(m)
    return sorted(out)


def enumerate_min_st_edge_cuts(g: Graph, s: int, t: int) -> list[int]:
    """Minimal edge sets whose removal disconnects s from t (exhaustive)."""
    full = (1 << g.m) - 1
    hits = [c for c in range(1 << g.m)
            if not st_connected(g, full & ~c, s, t)]
    return _minimal_masks(hits)


def enumerate_min_global_cuts(g: Graph) -> list[int]:
    """Minimal edge sets whose removal disconnects the graph (exhaustive)."""
    full = (1 << g.m) - 1
    hits = [c for c in range(1 << g.m)
            if not spanning_connected(g, full & ~c)]
    return _minimal_masks(hits)


def enumerate_simple_cycles(g: Graph) -> list[int]:
    """Edge sets of all simple cycles, by DFS from each anchor vertex."""
    adj = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(g.edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))
    cycles: set[int] = set()

    def walk(anchor: int, x: int, visited: int, edges_used: int, depth: int):
        for y, idx in adj[x]:
            if edges_used >> idx & 1:
                continue
            if y == anchor and depth >= 2:
                cycles.add(edges_used | (1 << idx))
            elif not visited >> y & 1 and y > anchor:
                walk(anchor, y, visited | (1 << y), edges_used | (1 << idx),
                     depth + 1)

    for anchor in range(g.n):
        walk(anchor, anchor, 1 << anchor, 0, 0)
    return sorted(cycles)


def enumerate_odd_cycles(g: Graph) -> list[int]:
    return [c for c in enumerate_simple_cycles(g) if c.bit_count() % 2 == 1]


def enumerate_min_closed_neighborhoods(g: Graph) -> list[int]:
    return _minimal_masks(g.closed_neighborhood_masks())


def independent_sets(g: Graph) -> list[int]:
    adj = g.adjacency_masks()
    out = []
    for mask in range(1 << g.n):
        ok = True
        probe = mask
        while probe:
            low = probe & -probe
            probe ^= low
            if adj[low.bit_length() - 1] & mask:
                ok = False
                break
        if ok:
            out.append(mask)
    return out
