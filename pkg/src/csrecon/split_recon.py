"""Fixed-budget TAR reachability on split graphs via a meta-graph of clique-side subsets.

Every colorable set can first be inflated to a canonical maximal extension
that depends only on its clique-side part, so reachability collapses to a
path search on the graph whose nodes are small clique-side subsets and whose
edges join C to C+v exactly when the larger extension has a vertex to spare
above the size floor.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .core import InvariantError, ResourceLimitError, is_colorable_clique_bound
from .instances import ReconSequence

DEFAULT_MAX_C = 3


@dataclass
class TSet:
    """A clique-side subset together with its canonical colorable extension."""

    base: frozenset
    members: frozenset

    @property
    def size(self):
        return len(self.members)


def t_set(model, base, c):
    """Extend clique-side subset C by every independent vertex that keeps it colorable.

    Below budget, every independent vertex fits; at exactly c clique
    vertices, independent vertices adjacent to all of C are excluded.
    """
    base = frozenset(base)
    if not base <= model.clique_part:
        raise InvariantError("C must be a subset of the clique part")
    if len(base) > c:
        raise InvariantError("C may contain at most c vertices")
    ind = model.independent_part
    if len(base) < c:
        members = base | ind
    else:
        nbrs = model.graph.neighbor_sets
        members = base | {u for u in ind if not base <= nbrs[u]}
    return TSet(base, frozenset(members))


@dataclass
class MetaGraph:
    """Nodes are canonical (sorted-tuple) clique-side subsets carrying their extensions."""

    nodes: list
    tsets: list
    adj: list
    index: dict


def build_meta_graph(model, c, k, max_c=DEFAULT_MAX_C):
    """All clique-side subsets of size at most c whose extension reaches the floor k.

    C is adjacent to every subset C-v as soon as its own extension exceeds
    the floor; node and edge counts stay within sum_{i<=c} (|K| choose i).
    """
    if c > max_c:
        raise ResourceLimitError(
            f"c={c} exceeds cap {max_c}: construction cost grows as O(n^(c+1)); "
            "raise max_c to override")
    kside = sorted(model.clique_part)
    nodes = []
    tsets = []
    index = {}
    for size in range(0, min(c, len(kside)) + 1):
        for combo in combinations(kside, size):
            ts = t_set(model, combo, c)
            if ts.size >= k:
                index[combo] = len(nodes)
                nodes.append(combo)
                tsets.append(ts)
    adj = [[] for _ in nodes]
    for i, combo in enumerate(nodes):
        if not combo or tsets[i].size < k + 1:
            continue
        for v in combo:
            j = index.get(tuple(x for x in combo if x != v))
            if j is not None:
                adj[i].append(j)
                adj[j].append(i)
    for lst in adj:
        lst.sort()
    return MetaGraph(nodes, tsets, adj, index)


def _check_inputs(model, c, start, target, k):
    if c < 1:
        raise InvariantError("color budget c must be at least 1")
    if k < 0:
        raise InvariantError("threshold k must be nonnegative")
    n = model.n
    for name, s in (("S", start), ("S2", target)):
        for v in s:
            if not 0 <= v < n:
                raise InvariantError(f"{name}: vertex {v} out of range")
        if len(s) < k:
            raise InvariantError(f"threshold violated: |{name}| < k")
        if not is_colorable_clique_bound(model, s, c):
            raise InvariantError(f"{name} is not {c}-colorable")


def _meta_path(meta, start, target, model):
    src = meta.index[tuple(sorted(start & model.clique_part))]
    dst = meta.index[tuple(sorted(target & model.clique_part))]
    parent = {src: None}
    queue = deque([src])
    while queue:
        i = queue.popleft()
        if i == dst:
            path = []
            while i is not None:
                path.append(i)
                i = parent[i]
            path.reverse()
            return path
        for j in meta.adj[i]:
            if j not in parent:
                parent[j] = i
                queue.append(j)
    return None


def split_tar_reachable(model, c, start, target, k, max_c=DEFAULT_MAX_C):
    """Decide TAR(k) reachability between two colorable sets of a split graph."""
    start = set(start)
    target = set(target)
    _check_inputs(model, c, start, target, k)
    if start == target:
        return True
    meta = build_meta_graph(model, c, k, max_c=max_c)
    return _meta_path(meta, start, target, model) is not None


def split_tar_witness(model, c, start, target, k, max_c=DEFAULT_MAX_C):
    """A valid (not necessarily shortest) TAR(k) sequence, or None when unreachable.

    The start set is inflated to its canonical extension, each meta-graph
    edge is realized by shrinking to the common part and adding the new
    clique vertex, and the final extension is deflated to the target.
    """
    start = set(start)
    target = set(target)
    _check_inputs(model, c, start, target, k)
    if start == target:
        return ReconSequence(set(start), [])
    meta = build_meta_graph(model, c, k, max_c=max_c)
    path = _meta_path(meta, start, target, model)
    if path is None:
        return None
    steps = []
    cur = set(start)
    for v in sorted(meta.tsets[path[0]].members - cur):
        steps.append(("+", v))
        cur.add(v)
    for a, b in zip(path, path[1:]):
        base_a = meta.tsets[a].base
        base_b = meta.tsets[b].base
        t_b = meta.tsets[b].members
        if len(base_b) > len(base_a):
            (v,) = base_b - base_a
            mid = t_b - {v}
            for u in sorted(cur - mid):
                steps.append(("-", u))
                cur.remove(u)
            steps.append(("+", v))
            cur.add(v)
        else:
            (v,) = base_a - base_b
            steps.append(("-", v))
            cur.remove(v)
            for u in sorted(t_b - cur):
                steps.append(("+", u))
                cur.add(u)
        if cur != set(t_b):
            raise RuntimeError("meta-graph step did not land on the node extension")
    for u in sorted(cur - target):
        steps.append(("-", u))
        cur.remove(u)
    if cur != target:
        raise RuntimeError("deflation did not reach the target set")
    return ReconSequence(set(start), steps)
