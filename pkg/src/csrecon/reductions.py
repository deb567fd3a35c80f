"""Instance factories for three hardness constructions, with checkable certificates.

Each factory returns the constructed graph together with enough provenance
(padding groups, layer assignments, vertex maps) for a test to invert the
solution mapping and confirm the construction's correctness contract by
enumeration at desk scale.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .core import Graph, InvariantError, SplitModel


@dataclass
class JoinOutput:
    """Join of the source graph with disjoint padding cliques.

    Transversals of size k in the source correspond to colorable sets of
    size ``target_size`` here.
    """

    graph: Graph
    c: int
    k: int
    target_size: int
    padding_cliques: list


def oct_to_colorable_set(g, c, k):
    """Join the source with n disjoint cliques of size c-2.

    The output graph has an c-colorable set of size |V'|-k exactly when the
    source has an odd-cycle transversal of size at most k.
    """
    if c < 2:
        raise InvariantError("c must be at least 2")
    if k >= g.n:
        raise InvariantError("k must be smaller than the vertex count")
    n = g.n
    edges = list(g.edges())
    padding = []
    nxt = n
    if c > 2:
        for _ in range(n):
            group = list(range(nxt, nxt + c - 2))
            nxt += c - 2
            padding.append(group)
            for i, u in enumerate(group):
                for v in group[i + 1:]:
                    edges.append((u, v))
                for v in range(n):
                    edges.append((u, v))
    graph = Graph(nxt, edges)
    return JoinOutput(graph, c, k, nxt - k, padding)


@dataclass
class SplitReductionOutput:
    """Split graph whose clique side is the source's vertices and whose
    independent side has one vertex per source edge."""

    model: SplitModel
    c: int
    k: int
    phi_start: set
    phi_target: set
    edge_of_vertex: dict

    def phi(self, independent_set):
        return set(range(self.model.n)) - set(independent_set)


def isr_to_split_csr(g, ind_start, ind_target):
    """Map an independent-set reconfiguration instance to a split-graph one.

    Vertices of the source become a clique, edges become independent
    vertices, and an edge-vertex is adjacent exactly to the non-endpoints of
    its edge.  The images of the two independent sets are their complements.
    """
    ind_start = set(ind_start)
    ind_target = set(ind_target)
    nbrs = g.neighbor_sets
    for name, s in (("I", ind_start), ("I2", ind_target)):
        for v in s:
            if not 0 <= v < g.n:
                raise InvariantError(f"{name}: vertex {v} out of range")
            if nbrs[v] & s:
                raise InvariantError(f"{name} is not independent")
    if len(ind_start) != len(ind_target):
        raise InvariantError("size mismatch: |I| must equal |I2|")
    c = g.n - len(ind_start)
    if c < 1:
        raise InvariantError("independent sets must leave at least one vertex uncovered")
    src_edges = sorted(g.edges())
    m = len(src_edges)
    n = g.n
    hedges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edge_of_vertex = {}
    for j, (eu, ev) in enumerate(src_edges):
        ev_vertex = n + j
        edge_of_vertex[ev_vertex] = (eu, ev)
        for v in range(n):
            if v != eu and v != ev:
                hedges.append((v, ev_vertex))
    graph = Graph(n + m, hedges)
    model = SplitModel(graph, range(n), range(n, n + m))
    k = m + c
    all_vertices = set(range(n + m))
    return SplitReductionOutput(model, c, k,
                                all_vertices - ind_start,
                                all_vertices - ind_target,
                                edge_of_vertex)


@dataclass
class CocompReductionOutput:
    """Layered graph built from a shortest-path reconfiguration instance.

    Layer i holds the source vertices at distance i from s that lie on some
    shortest s-t path, made a clique; consecutive layers get the complement
    of the source edges; each layer also gets a padding clique of c-1 new
    vertices joined to it and to the next layer.  ``order`` is a vertex
    order certifying that no umbrella triple exists.
    """

    graph: Graph
    c: int
    k: int
    layers: list
    padding: list
    phi_start: set
    phi_target: set
    order: list
    source_vertex: dict

    def phi(self, path):
        new_of = {orig: new for new, orig in self.source_vertex.items()}
        members = {new_of[v] for v in path}
        for group in self.padding:
            members.update(group)
        return members


def _bfs_dist(g, src):
    dist = [math.inf] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] == math.inf:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def _check_shortest_path(g, s, t, path, length, name):
    if len(path) != length + 1 or path[0] != s or path[-1] != t:
        raise InvariantError(f"{name} is not a shortest path from s to t")
    if len(set(path)) != len(path):
        raise InvariantError(f"{name} repeats a vertex")
    for u, v in zip(path, path[1:]):
        if not g.has_edge(u, v):
            raise InvariantError(f"{name} uses a non-edge ({u}, {v})")


def spr_to_cocomp_csr(g, s, t, path_start, path_target, c):
    """Map a shortest-path reconfiguration instance to a layered colorable-set one."""
    if c < 1:
        raise InvariantError("c must be at least 1")
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise InvariantError("s or t out of range")
    dist_s = _bfs_dist(g, s)
    dist_t = _bfs_dist(g, t)
    length = dist_s[t]
    if length == math.inf:
        raise InvariantError("t is unreachable from s")
    length = int(length)
    _check_shortest_path(g, s, t, path_start, length, "P")
    _check_shortest_path(g, s, t, path_target, length, "P2")
    layers_src = []
    for i in range(length + 1):
        layers_src.append(sorted(v for v in range(g.n)
                                 if dist_s[v] == i and dist_t[v] == length - i))
    source_vertex = {}
    new_of = {}
    layers = []
    nxt = 0
    for layer in layers_src:
        ids = []
        for v in layer:
            source_vertex[nxt] = v
            new_of[v] = nxt
            ids.append(nxt)
            nxt += 1
        layers.append(ids)
    padding = []
    for _ in range(length + 1):
        group = list(range(nxt, nxt + c - 1))
        nxt += c - 1
        padding.append(group)
    edges = []
    for ids in layers:
        for i, u in enumerate(ids):
            for v in ids[i + 1:]:
                edges.append((u, v))
    for i in range(length):
        for u in layers[i]:
            for v in layers[i + 1]:
                if not g.has_edge(source_vertex[u], source_vertex[v]):
                    edges.append((u, v))
    for i, group in enumerate(padding):
        for a, u in enumerate(group):
            for v in group[a + 1:]:
                edges.append((u, v))
            for v in layers[i]:
                edges.append((u, v))
            if i + 1 <= length:
                for v in layers[i + 1]:
                    edges.append((u, v))
    graph = Graph(nxt, edges)
    k = (length + 1) * c
    order = []
    for i in range(length + 1):
        order.extend(layers[i])
        order.extend(padding[i])
    out = CocompReductionOutput(graph, c, k, layers, padding,
                                set(), set(), order, source_vertex)
    out.phi_start = out.phi(path_start)
    out.phi_target = out.phi(path_target)
    return out


def check_cocomp_order(g, order):
    """Scan a vertex order for an umbrella triple.

    Returns None when no positions a < b < c have order[a], order[c]
    adjacent while order[b] is adjacent to neither; such an order certifies
    that the graph is a co-comparability graph.  Otherwise returns the
    violating triple.
    """
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise InvariantError("order is not a permutation of the vertices")
    nbrs = g.neighbor_sets
    for a in range(len(order)):
        u = order[a]
        for b in range(a + 2, len(order)):
            w = order[b]
            if w not in nbrs[u]:
                continue
            for mid in range(a + 1, b):
                v = order[mid]
                if v not in nbrs[u] and v not in nbrs[w]:
                    return (u, v, w)
    return None
