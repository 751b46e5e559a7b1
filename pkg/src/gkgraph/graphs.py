"""Prime-labeled simple graphs and the exact algorithms the audits need:
components, degrees, cliques, cocliques, and unlabeled isomorphism.

All graphs here are tiny (at most a few dozen vertices), so every search is
exact; there are no heuristics anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .arith import is_prime


@dataclass(frozen=True)
class GKGraph:
    """A simple graph whose vertices are primes (edge pairs stored (a, b), a < b)."""

    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    label: str | None = None

    @staticmethod
    def build(vertices, edges, label: str | None = None) -> "GKGraph":
        """Normalize and validate: prime vertices, known endpoints, no loops."""
        vset = frozenset(int(v) for v in vertices)
        for v in vset:
            if not is_prime(v):
                raise ValueError(f"vertex is not prime: {v}")
        eset = set()
        for a, b in edges:
            a, b = int(a), int(b)
            if a == b:
                raise ValueError(f"self-loop at {a}")
            if a not in vset or b not in vset:
                raise ValueError(f"edge endpoint not a vertex: ({a}, {b})")
            eset.add((min(a, b), max(a, b)))
        return GKGraph(vset, frozenset(eset), label)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return {v: frozenset(ns) for v, ns in nbrs.items()}

    def has_edge(self, r: int, s: int) -> bool:
        return (min(r, s), max(r, s)) in self.edges

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class ComponentPartition:
    """Disjoint vertex blocks.  Producers fix the block order: connected
    component computation puts the block containing 2 first and sorts the
    rest by minimum element, while catalog data keeps published table order.
    """

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            if block & seen:
                raise ValueError("blocks are not pairwise disjoint")
            seen |= block

    @property
    def s(self) -> int:
        return len(self.blocks)

    def vertex_set(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for block in self.blocks:
            out |= block
        return out

    def block_set(self) -> frozenset[frozenset[int]]:
        return frozenset(self.blocks)

    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted((len(b) for b in self.blocks), reverse=True))


def connected_components(g: GKGraph) -> ComponentPartition:
    """Components ordered with the block containing 2 first, then by minimum."""
    if not g.vertices:
        raise ValueError("empty graph")
    if 2 not in g.vertices:
        raise ValueError("vertex 2 is required to anchor the block order")
    adj = g.adjacency
    seen: set[int] = set()
    blocks: list[frozenset[int]] = []
    for v in g.sorted_vertices():
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        blocks.append(frozenset(comp))
    blocks.sort(key=lambda b: (2 not in b, min(b)))
    return ComponentPartition(tuple(blocks))


def degree_map(g: GKGraph) -> dict[int, int]:
    return {v: len(g.adjacency[v]) for v in g.vertices}


def is_clique(g: GKGraph, vs) -> bool:
    vs = list(vs)
    for v in vs:
        if v not in g.vertices:
            raise ValueError(f"unknown vertex: {v}")
    return all(g.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


# ---------------------------------------------------------------------------
# exact maximum coclique (branch and bound)
# ---------------------------------------------------------------------------

def _mask_adjacency(g: GKGraph, verts: list[int]) -> list[int]:
    index = {v: i for i, v in enumerate(verts)}
    masks = [0] * len(verts)
    for a, b in g.edges:
        if a in index and b in index:
            masks[index[a]] |= 1 << index[b]
            masks[index[b]] |= 1 << index[a]
    return masks


def _clique_cover_bound(cand: int, masks: list[int], order: list[int]) -> int:
    # Greedy clique cover of the candidate set; a coclique meets each clique
    # at most once, so the number of cliques bounds the coclique size.
    cliques: list[tuple[int, int]] = []  # (member mask, common-neighbor mask)
    for i in order:
        bit = 1 << i
        if not cand & bit:
            continue
        for j, (members, common) in enumerate(cliques):
            if common & bit:
                cliques[j] = (members | bit, common & masks[i])
                break
        else:
            cliques.append((bit, masks[i]))
    return len(cliques)


def _max_coclique_masks(n: int, masks: list[int], start_mask: int,
                        start_size: int) -> tuple[int, int]:
    order = sorted(range(n), key=lambda i: -bin(masks[i]).count("1"))
    full = (1 << n) - 1
    cand0 = full & ~start_mask
    for i in range(n):
        if start_mask & (1 << i):
            cand0 &= ~masks[i]
    best_size = start_size
    best_set = start_mask

    def expand(cand: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_set
        if cand == 0:
            if size > best_size:
                best_size, best_set = size, chosen
            return
        if size + _clique_cover_bound(cand, masks, order) <= best_size:
            return
        for i in order:
            bit = 1 << i
            if cand & bit:
                break
        expand(cand & ~bit & ~masks[i], chosen | bit, size + 1)
        expand(cand & ~bit, chosen, size)

    expand(cand0, start_mask, start_size)
    return best_size, best_set


def independence_number(g: GKGraph) -> tuple[int, frozenset[int]]:
    """Exact maximum coclique size with a witness."""
    if not g.vertices:
        raise ValueError("empty graph")
    verts = g.sorted_vertices()
    masks = _mask_adjacency(g, verts)
    size, chosen = _max_coclique_masks(len(verts), masks, 0, 0)
    witness = frozenset(verts[i] for i in range(len(verts)) if chosen & (1 << i))
    return size, witness


def rooted_independence_number(g: GKGraph, r: int) -> int:
    """Exact maximum size of a coclique containing r."""
    size, _ = rooted_coclique(g, r)
    return size


def rooted_coclique(g: GKGraph, r: int) -> tuple[int, frozenset[int]]:
    if r not in g.vertices:
        raise ValueError(f"unknown vertex: {r}")
    verts = g.sorted_vertices()
    masks = _mask_adjacency(g, verts)
    root = verts.index(r)
    size, chosen = _max_coclique_masks(len(verts), masks, 1 << root, 1)
    witness = frozenset(verts[i] for i in range(len(verts)) if chosen & (1 << i))
    return size, witness


# ---------------------------------------------------------------------------
# unlabeled isomorphism (refinement + backtracking, verified certificate)
# ---------------------------------------------------------------------------

def _component_sizes(g: GKGraph) -> tuple[int, ...]:
    adj = g.adjacency
    seen: set[int] = set()
    sizes = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        sizes.append(len(comp))
    return tuple(sorted(sizes, reverse=True))


def _refine(adj_g: dict, adj_h: dict, col_g: dict, col_h: dict):
    """Jointly refine colors by neighbor-color multisets until stable.
    Returns refined (col_g, col_h) or None when class sizes diverge."""
    while True:
        sig_g = {v: (col_g[v], tuple(sorted(col_g[u] for u in adj_g[v])))
                 for v in adj_g}
        sig_h = {v: (col_h[v], tuple(sorted(col_h[u] for u in adj_h[v])))
                 for v in adj_h}
        palette = sorted(set(sig_g.values()) | set(sig_h.values()))
        ids = {sig: i for i, sig in enumerate(palette)}
        new_g = {v: ids[sig_g[v]] for v in sig_g}
        new_h = {v: ids[sig_h[v]] for v in sig_h}
        if sorted(new_g.values()) != sorted(new_h.values()):
            return None
        # refinement only splits classes, so an unchanged count means stable
        if len(set(new_g.values())) == len(set(col_g.values())):
            return new_g, new_h
        col_g, col_h = new_g, new_h


def _is_valid_mapping(g: GKGraph, h: GKGraph, mapping: dict[int, int]) -> bool:
    if sorted(mapping) != g.sorted_vertices():
        return False
    if sorted(mapping.values()) != h.sorted_vertices():
        return False
    mapped = {(min(mapping[a], mapping[b]), max(mapping[a], mapping[b]))
              for a, b in g.edges}
    return mapped == h.edges


def are_isomorphic(g: GKGraph, h: GKGraph) -> tuple[bool, dict[int, int] | None]:
    """Whether an edge-preserving bijection exists; the returned mapping is
    re-verified against both edge sets before it is reported."""
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return False, None
    deg_g = sorted(len(g.adjacency[v]) for v in g.vertices)
    deg_h = sorted(len(h.adjacency[v]) for v in h.vertices)
    if deg_g != deg_h:
        return False, None
    if _component_sizes(g) != _component_sizes(h):
        return False, None

    adj_g, adj_h = g.adjacency, h.adjacency

    def search(col_g: dict, col_h: dict) -> dict[int, int] | None:
        refined = _refine(adj_g, adj_h, col_g, col_h)
        if refined is None:
            return None
        col_g, col_h = refined
        classes_g: dict[int, list[int]] = {}
        for v, c in col_g.items():
            classes_g.setdefault(c, []).append(v)
        target = None
        for c in sorted(classes_g):
            if len(classes_g[c]) > 1:
                if target is None or len(classes_g[c]) < len(classes_g[target]):
                    target = c
        if target is None:
            by_color = {c: v for v, c in col_h.items()}
            return {v: by_color[c] for v, c in col_g.items()}
        pivot = min(classes_g[target])
        fresh = max(max(col_g.values()), max(col_h.values())) + 1
        for w in sorted(v for v, c in col_h.items() if c == target):
            next_g = dict(col_g)
            next_h = dict(col_h)
            next_g[pivot] = fresh
            next_h[w] = fresh
            result = search(next_g, next_h)
            if result is not None:
                return result
        return None

    mapping = search({v: 0 for v in g.vertices}, {v: 0 for v in h.vertices})
    if mapping is None:
        return False, None
    if not _is_valid_mapping(g, h, mapping):
        raise AssertionError("isomorphism search produced an invalid certificate")
    return True, mapping


def equals_labeled(g: GKGraph, h: GKGraph) -> bool:
    """Same vertex set and same edge set."""
    return g.vertices == h.vertices and g.edges == h.edges
