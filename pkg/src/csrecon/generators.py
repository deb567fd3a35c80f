"""Seeded random instances for tests, benchmarks, and the gen command."""
from __future__ import annotations

from .core import Graph, SplitModel, model_from_intervals
from .instances import Instance, check_instance


def random_endpoints(rng, n, coord_max=None, max_len=None):
    """n integer interval pairs; optionally cap the lengths to keep models sparse."""
    if coord_max is None:
        coord_max = max(2 * n, 4)
    endpoints = []
    for _ in range(n):
        if max_len is None:
            a = rng.randint(1, coord_max)
            b = rng.randint(1, coord_max)
            endpoints.append((min(a, b), max(a, b)))
        else:
            l = rng.randint(1, coord_max)
            endpoints.append((l, min(l + rng.randint(0, max_len), coord_max)))
    return endpoints


def greedy_interval_set(model, c, rng, target=None):
    """Random colorable set by greedy extension in a shuffled order."""
    order = list(range(model.n))
    rng.shuffle(order)
    if target is None:
        target = model.n
    counts = [0] * model.t
    chosen = set()
    spans = model.spans
    for v in order:
        if len(chosen) >= target:
            break
        l, r = spans[v]
        if all(counts[i] < c for i in range(l - 1, r)):
            chosen.add(v)
            for i in range(l - 1, r):
                counts[i] += 1
    return chosen


def greedy_split_set(model, c, rng, target=None):
    order = list(range(model.n))
    rng.shuffle(order)
    if target is None:
        target = model.n
    nbrs = model.graph.neighbor_sets
    chosen_k = set()
    chosen_i = set()
    for v in order:
        if len(chosen_k) + len(chosen_i) >= target:
            break
        if v in model.clique_part:
            grown = chosen_k | {v}
            if len(grown) > c:
                continue
            if len(grown) == c and any(grown <= nbrs[u] for u in chosen_i):
                continue
            chosen_k = grown
        else:
            if len(chosen_k) == c and chosen_k <= nbrs[v]:
                continue
            chosen_i.add(v)
    return chosen_k | chosen_i


def random_split_model(rng, n, p=0.5):
    size_k = rng.randint(0, n)
    kpart = set(rng.sample(range(n), size_k))
    ipart = set(range(n)) - kpart
    edges = []
    ksorted = sorted(kpart)
    for i, u in enumerate(ksorted):
        for v in ksorted[i + 1:]:
            edges.append((u, v))
    for u in sorted(ipart):
        for v in ksorted:
            if rng.random() < p:
                edges.append((u, v))
    return SplitModel(Graph(n, edges), kpart, ipart)


def random_graph(rng, n, p=0.4):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def _equalize(rng, a, b):
    # trim the larger set; any subset of a colorable set stays colorable
    while len(a) > len(b):
        a.remove(rng.choice(sorted(a)))
    while len(b) > len(a):
        b.remove(rng.choice(sorted(b)))


def random_interval_instance(rng, n, c, rule="tar", k=None,
                             coord_max=None, max_len=None):
    endpoints = random_endpoints(rng, n, coord_max=coord_max, max_len=max_len)
    model = model_from_intervals(endpoints)
    start = greedy_interval_set(model, c, rng, target=rng.randint(0, n))
    target = greedy_interval_set(model, c, rng, target=rng.randint(0, n))
    if rule in ("tj", "ts"):
        _equalize(rng, start, target)
    cap = min(len(start), len(target))
    k = rng.randint(0, cap) if k is None else min(k, cap)
    inst = Instance(model, rule, c, k, start, target, endpoints=endpoints)
    check_instance(inst)
    return inst


def random_split_instance(rng, n, c, rule="tar", k=None, p=0.5):
    model = random_split_model(rng, n, p=p)
    start = greedy_split_set(model, c, rng, target=rng.randint(0, n))
    target = greedy_split_set(model, c, rng, target=rng.randint(0, n))
    if rule in ("tj", "ts"):
        _equalize(rng, start, target)
    cap = min(len(start), len(target))
    k = rng.randint(0, cap) if k is None else min(k, cap)
    inst = Instance(model, rule, c, k, start, target)
    check_instance(inst)
    return inst


def random_edges_instance(rng, n, c, rule="tar", k=None, p=0.4):
    g = random_graph(rng, n, p=p)
    start = _greedy_graph_set(g, c, rng, target=rng.randint(0, n))
    target = _greedy_graph_set(g, c, rng, target=rng.randint(0, n))
    if rule in ("tj", "ts"):
        _equalize(rng, start, target)
    cap = min(len(start), len(target))
    k = rng.randint(0, cap) if k is None else min(k, cap)
    inst = Instance(g, rule, c, k, start, target)
    check_instance(inst)
    return inst


def _greedy_graph_set(g, c, rng, target=None):
    from .core import is_colorable_exact

    order = list(range(g.n))
    rng.shuffle(order)
    if target is None:
        target = g.n
    chosen = set()
    for v in order:
        if len(chosen) >= target:
            break
        if is_colorable_exact(g, chosen | {v}, c):
            chosen.add(v)
    return chosen
