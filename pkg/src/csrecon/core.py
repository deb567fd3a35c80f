"""Core graph types: simple graphs, split partitions, interval clique paths."""
from __future__ import annotations

from itertools import accumulate


class InvariantError(ValueError):
    """Input data violates a structural precondition; the message names it."""


class FormatError(ValueError):
    """Malformed instance or sequence text."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ResourceLimitError(RuntimeError):
    """A computation would exceed a size guard; pass an override to proceed."""


class Graph:
    """Undirected simple graph on vertices 0..n-1.

    Adjacency is stored as per-vertex sorted lists; neighbor sets are built
    lazily for O(1) edge tests.
    """

    __slots__ = ("n", "m", "adjacency", "_neighbor_sets")

    def __init__(self, n, edges=()):
        if n < 0:
            raise InvariantError("vertex count must be nonnegative")
        adjacency = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvariantError(f"vertex index out of range in edge ({u}, {v})")
            if u == v:
                raise InvariantError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InvariantError(f"parallel edge ({key[0]}, {key[1]})")
            seen.add(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
        for lst in adjacency:
            lst.sort()
        self.n = n
        self.m = len(seen)
        self.adjacency = adjacency
        self._neighbor_sets = None

    @property
    def neighbor_sets(self):
        if self._neighbor_sets is None:
            self._neighbor_sets = [set(lst) for lst in self.adjacency]
        return self._neighbor_sets

    def degree(self, v):
        return len(self.adjacency[v])

    def has_edge(self, u, v):
        return v in self.neighbor_sets[u]

    def edges(self):
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class IntervalModel:
    """Clique-path model of an interval graph.

    The maximal cliques are ordered M_1..M_t so that every vertex occupies a
    consecutive run; ``spans[v] = (l, r)`` gives that run with 1-based
    indices. Two vertices are adjacent exactly when their spans intersect,
    and the spans themselves form an interval representation of the graph.
    """

    __slots__ = ("t", "spans", "_cliques")

    def __init__(self, t, spans, cliques=None):
        self.t = t
        self.spans = [(int(l), int(r)) for l, r in spans]
        for v, (l, r) in enumerate(self.spans):
            if not (1 <= l <= r <= t):
                raise InvariantError(f"span of vertex {v} falls outside 1..{t}")
        self._cliques = [sorted(cl) for cl in cliques] if cliques is not None else None

    @classmethod
    def _prevalidated(cls, t, spans):
        model = cls.__new__(cls)
        model.t = t
        model.spans = spans
        model._cliques = None
        return model

    @property
    def n(self):
        return len(self.spans)

    @property
    def cliques(self):
        if self._cliques is None:
            buckets = [[] for _ in range(self.t)]
            for v, (l, r) in enumerate(self.spans):
                for i in range(l - 1, r):
                    buckets[i].append(v)
            self._cliques = buckets
        return self._cliques

    def adjacent(self, u, v):
        lu, ru = self.spans[u]
        lv, rv = self.spans[v]
        return lu <= rv and lv <= ru

    def __repr__(self):
        return f"IntervalModel(n={self.n}, t={self.t})"


class SplitModel:
    """Split graph with an explicit partition into a clique and an independent set."""

    __slots__ = ("graph", "clique_part", "independent_part")

    def __init__(self, graph, clique_part, independent_part):
        kpart = set(clique_part)
        ipart = set(independent_part)
        n = graph.n
        if kpart & ipart or len(kpart) + len(ipart) != n:
            raise InvariantError("clique/independent parts must partition the vertices")
        if any(not 0 <= v < n for v in kpart | ipart):
            raise InvariantError("partition contains a vertex index out of range")
        nbrs = graph.neighbor_sets
        for u in kpart:
            if not kpart <= nbrs[u] | {u}:
                raise InvariantError("clique part is not a clique")
        for u in ipart:
            if nbrs[u] & ipart:
                raise InvariantError("independent part is not independent")
        self.graph = graph
        self.clique_part = kpart
        self.independent_part = ipart

    @property
    def n(self):
        return self.graph.n

    def __repr__(self):
        return f"SplitModel(n={self.n}, |K|={len(self.clique_part)})"


def model_from_intervals(endpoints):
    """Build the clique-path model whose adjacency equals interval intersection.

    ``endpoints[v] = (left, right)`` with ``left <= right``, integers.  A
    single left-to-right sweep over the endpoint events finds the maximal
    cliques: the active set is emitted whenever some interval ends at the
    current coordinate and some interval has started since the last emission.
    That rule emits exactly the maximal cliques, so no containment filtering
    is needed afterwards.  Only clique coordinates and per-vertex spans are
    computed here; member lists are materialized lazily.
    """
    endpoints = [(int(l), int(r)) for l, r in endpoints]
    for v, (l, r) in enumerate(endpoints):
        if l > r:
            raise InvariantError(f"malformed endpoint pair for vertex {v}: ({l}, {r})")
    n = len(endpoints)
    if n == 0:
        return IntervalModel(0, [])
    # events encoded as coord*n + vertex: plain ints sort much faster than
    # tuples, and floor division decodes exactly, negative coords included
    by_left = sorted(l * n + v for v, (l, _) in enumerate(endpoints))
    by_right = sorted(r * n + v for v, (_, r) in enumerate(endpoints))
    emit_coords = []
    i = 0
    fresh = False
    for x in by_right:
        coord = x // n
        bound = (coord + 1) * n
        while i < n and by_left[i] < bound:
            fresh = True
            i += 1
        if fresh:
            emit_coords.append(coord)
            fresh = False
    t = len(emit_coords)
    left_idx = [0] * n
    right_idx = [0] * n
    p = 0
    for x in by_left:
        l = x // n
        while emit_coords[p] < l:
            p += 1
        left_idx[x - l * n] = p + 1
    p = 0
    for x in by_right:
        r = x // n
        while p + 1 < t and emit_coords[p + 1] <= r:
            p += 1
        right_idx[x - r * n] = p + 1
    return IntervalModel._prevalidated(t, list(zip(left_idx, right_idx)))


def interval_clique_counts(model, members):
    """Per-clique member counts; entry i is the size of the overlap with clique i+1."""
    diff = [0] * (model.t + 1)
    spans = model.spans
    for v in members:
        l, r = spans[v]
        diff[l - 1] += 1
        diff[r] -= 1
    counts = list(accumulate(diff))
    counts.pop()
    return counts


def is_colorable_clique_bound(model, members, c):
    """Colorability via the maximum-clique bound.

    Exact on clique-path and split models: a set is c-colorable there iff its
    induced subgraph has no clique larger than c.
    """
    if isinstance(model, IntervalModel):
        return all(a <= c for a in interval_clique_counts(model, members))
    if isinstance(model, SplitModel):
        ms = members if isinstance(members, (set, frozenset)) else set(members)
        chosen = ms & model.clique_part
        if len(chosen) > c:
            return False
        if len(chosen) == c:
            nbrs = model.graph.neighbor_sets
            for u in ms - chosen:
                if chosen <= nbrs[u]:
                    return False
        return True
    raise TypeError(f"expected IntervalModel or SplitModel, got {type(model).__name__}")


def is_colorable_exact(g, members, c, limit=64):
    """Exact colorability of the induced subgraph by backtracking.

    Color symmetry is broken by letting each vertex use at most one color
    beyond the highest color placed so far.  Guarded by ``limit`` on the set
    size; raise the limit explicitly for bigger sets.
    """
    verts = sorted(members)
    if c < 0:
        raise InvariantError("color budget must be nonnegative")
    if len(verts) <= c:
        return True
    if c == 0:
        return not verts
    if len(verts) > limit:
        raise ResourceLimitError(
            f"exact coloring guard: set size {len(verts)} exceeds {limit}")
    pos = {v: i for i, v in enumerate(verts)}
    nbrs = g.neighbor_sets
    earlier = []
    for i, v in enumerate(verts):
        earlier.append([pos[u] for u in nbrs[v] if pos.get(u, i) < i])
    colors = [0] * len(verts)

    def extend(i, used):
        if i == len(verts):
            return True
        banned = {colors[j] for j in earlier[i]}
        for color in range(1, min(used + 1, c) + 1):
            if color not in banned:
                colors[i] = color
                if extend(i + 1, max(used, color)):
                    return True
        colors[i] = 0
        return False

    return extend(0, 0)


def colorable(g_or_model, members, c, limit=64):
    """Route to the clique-bound test on perfect-class models, else to backtracking."""
    if isinstance(g_or_model, (IntervalModel, SplitModel)):
        return is_colorable_clique_bound(g_or_model, members, c)
    return is_colorable_exact(g_or_model, members, c, limit=limit)


def adjacent_in(g_or_model, u, v):
    if isinstance(g_or_model, IntervalModel):
        return g_or_model.adjacent(u, v)
    if isinstance(g_or_model, SplitModel):
        return g_or_model.graph.has_edge(u, v)
    return g_or_model.has_edge(u, v)


def split_partition(g):
    """Partition a graph into (clique, independent) parts, or return None.

    Degree-sequence test: with degrees d_1 >= ... >= d_n, let h be the largest
    index with d_h >= h-1.  The graph is split iff the top-h degrees sum to
    h(h-1) plus the sum of the rest, and then the h highest-degree vertices
    form the clique side.  The resulting partition is verified before return.
    """
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    h = 0
    for j in range(n):
        if degs[j] >= j:
            h = j + 1
        else:
            break
    if sum(degs[:h]) != h * (h - 1) + sum(degs[h:]):
        return None
    return SplitModel(g, order[:h], order[h:])
