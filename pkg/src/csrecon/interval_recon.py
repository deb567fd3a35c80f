"""Exact shortest TAR/TJ reconfiguration on clique-path (interval) models.

The distance between two colorable sets is the size of their symmetric
difference plus a correction of 0, 2, or 4 that depends only on whether each
set is "locked" (size exactly k and not extendable) inside the subgraph
induced by their union, and on whether a shared extension vertex exists
outside it.  If either set is locked in the whole graph no move applies at
all.  All checks reduce to per-clique member counts, so both the distance and
an explicit shortest sequence come out in time linear in the model size.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .core import InvariantError, interval_clique_counts
from .instances import ReconSequence

IDENTICAL = "identical"
CASE1 = "case1"
CASE2 = "case2"
CASE3A = "case3a"
CASE3B = "case3b"
LOCKED = "locked-in-G"


@dataclass
class DistanceVerdict:
    """Distance plus the structural case that produced it.

    ``witnesses`` holds the extension vertices used by the locked cases: one
    vertex for case2/case3a, a pair (start side, target side) for case3b.
    ``locked_side`` says which set was locked in case2.
    """

    case: str
    distance: int | float
    witnesses: tuple = ()
    locked_side: str | None = None


def profile(model, members):
    """Per-clique member counts, one entry per clique of the path."""
    return interval_clique_counts(model, members)


def _blocked_prefix(counts, c):
    # pref[i] = number of cliques among the first i whose count already reached c
    pref = [0] * (len(counts) + 1)
    run = 0
    for i, a in enumerate(counts):
        if a >= c:
            run += 1
        pref[i + 1] = run
    return pref


def _first_addable(model, pref, exclude, candidates=None):
    spans = model.spans
    if candidates is None:
        for v in range(model.n):
            if v in exclude:
                continue
            l, r = spans[v]
            if pref[r] == pref[l - 1]:
                return v
    else:
        for v in sorted(candidates):
            l, r = spans[v]
            if pref[r] == pref[l - 1]:
                return v
    return None


def find_addable(model, members, c):
    """Smallest vertex whose addition keeps the set colorable, or None.

    A None result certifies that the set is maximal.
    """
    pref = _blocked_prefix(profile(model, members), c)
    return _first_addable(model, pref, members)


def find_common_addable(model, s_a, s_b, c):
    """Smallest vertex outside both sets whose addition keeps both colorable."""
    pref_a = _blocked_prefix(profile(model, s_a), c)
    pref_b = _blocked_prefix(profile(model, s_b), c)
    return _first_common(model, pref_a, pref_b, s_a, s_b)


def _first_common(model, pref_a, pref_b, s_a, s_b):
    spans = model.spans
    for v in range(model.n):
        if v in s_a or v in s_b:
            continue
        l, r = spans[v]
        if pref_a[r] == pref_a[l - 1] and pref_b[r] == pref_b[l - 1]:
            return v
    return None


def is_locked_within(model, members, k, c, within):
    """True iff the set has size exactly k and no vertex of ``within`` extends it."""
    if len(members) != k:
        return False
    pref = _blocked_prefix(profile(model, members), c)
    return _first_addable(model, pref, members, candidates=set(within) - set(members)) is None


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


def tar_distance(model, c, start, target, k):
    """Exact TAR(k) distance, with the structural case tag and witnesses."""
    start = set(start)
    target = set(target)
    _check_inputs(model, c, start, target, k)
    counts_a = profile(model, start)
    if any(a > c for a in counts_a):
        raise InvariantError(f"S is not {c}-colorable")
    counts_b = profile(model, target)
    if any(a > c for a in counts_b):
        raise InvariantError(f"S2 is not {c}-colorable")
    if start == target:
        return DistanceVerdict(IDENTICAL, 0)
    pref_a = _blocked_prefix(counts_a, c)
    pref_b = _blocked_prefix(counts_b, c)
    if len(start) == k and _first_addable(model, pref_a, start) is None:
        return DistanceVerdict(LOCKED, math.inf)
    if len(target) == k and _first_addable(model, pref_b, target) is None:
        return DistanceVerdict(LOCKED, math.inf)
    delta = len(start ^ target)
    locked_a = (len(start) == k and
                _first_addable(model, pref_a, start, candidates=target - start) is None)
    locked_b = (len(target) == k and
                _first_addable(model, pref_b, target, candidates=start - target) is None)
    if not locked_a and not locked_b:
        return DistanceVerdict(CASE1, delta)
    if locked_a != locked_b:
        if locked_a:
            w = _first_addable(model, pref_a, start)
            return DistanceVerdict(CASE2, delta + 2, (w,), locked_side="start")
        w = _first_addable(model, pref_b, target)
        return DistanceVerdict(CASE2, delta + 2, (w,), locked_side="target")
    v = _first_common(model, pref_a, pref_b, start, target)
    if v is not None:
        return DistanceVerdict(CASE3A, delta + 2, (v,))
    u = _first_addable(model, pref_a, start)
    w = _first_addable(model, pref_b, target)
    return DistanceVerdict(CASE3B, delta + 4, (u, w))


def shortest_tar_sequence(model, c, start, target, k, verdict=None):
    """A valid TAR(k) sequence of exactly the distance length, or None.

    The locked cases are reduced to the unlocked one by adding their witness
    vertices at the ends first; the main loop then clears the symmetric
    difference two-endedly.  Steps taken from the target side go into a
    suffix buffer that is reversed, with inverted operations, when the two
    halves meet.  Pass a previously computed verdict to skip recomputing it.
    """
    start = set(start)
    target = set(target)
    if verdict is None:
        verdict = tar_distance(model, c, start, target, k)
    if verdict.distance == math.inf:
        return None
    if verdict.case == IDENTICAL:
        return ReconSequence(set(start), [])
    a = set(start)
    b = set(target)
    prefix = []
    suffix = []
    if verdict.case == CASE2:
        (w,) = verdict.witnesses
        if verdict.locked_side == "start":
            prefix.append(("+", w))
            a.add(w)
        else:
            suffix.append(("+", w))
            b.add(w)
    elif verdict.case == CASE3A:
        (w,) = verdict.witnesses
        prefix.append(("+", w))
        a.add(w)
        suffix.append(("+", w))
        b.add(w)
    elif verdict.case == CASE3B:
        u, w = verdict.witnesses
        prefix.append(("+", u))
        a.add(u)
        suffix.append(("+", w))
        b.add(w)
    _resolve_unlocked(model, c, k, a, b, prefix, suffix)
    steps = prefix
    for op in reversed(suffix):
        steps.append(("-", op[1]) if op[0] == "+" else ("+", op[1]))
    return ReconSequence(set(start), steps)


def _resolve_unlocked(model, c, k, a, b, prefix, suffix):
    """Clear the symmetric difference of two sets not locked in their union.

    Invariants kept by every branch: both sets stay colorable, at least k
    large, and unlocked within the (shrinking) union.  Each emitted step
    settles one vertex of the symmetric difference, so the step count equals
    the initial difference size.  The branch at size k can fire at most once
    per side because swaps preserve sizes afterwards.
    """
    spans = model.spans
    a_only = a - b
    b_only = b - a
    by_r_a = sorted((spans[v][1], v) for v in a_only)
    by_l_a = sorted((spans[v][0], v) for v in a_only)
    by_r_b = sorted((spans[v][1], v) for v in b_only)
    by_l_b = sorted((spans[v][0], v) for v in b_only)
    ra = la = rb = lb = 0
    while a_only or b_only:
        if len(a) == k:
            pref = _blocked_prefix(profile(model, a), c)
            v = _first_addable(model, pref, a, candidates=b_only)
            if v is None:
                raise RuntimeError("no extension found for an unlocked set")
            prefix.append(("+", v))
            a.add(v)
            b_only.discard(v)
            continue
        if len(b) == k:
            pref = _blocked_prefix(profile(model, b), c)
            v = _first_addable(model, pref, b, candidates=a_only)
            if v is None:
                raise RuntimeError("no extension found for an unlocked set")
            suffix.append(("+", v))
            b.add(v)
            a_only.discard(v)
            continue
        if not a_only:
            for v in sorted(b_only):
                prefix.append(("+", v))
                a.add(v)
            b_only.clear()
            break
        if not b_only:
            for v in sorted(a_only):
                prefix.append(("-", v))
                a.remove(v)
            a_only.clear()
            break
        while by_r_b[rb][1] not in b_only:
            rb += 1
        r_w, w = by_r_b[rb]
        while by_r_a[ra][1] not in a_only:
            ra += 1
        r_v, _ = by_r_a[ra]
        if r_w <= r_v:
            while by_l_a[la][1] not in a_only:
                la += 1
            u = by_l_a[la][1]
            prefix.append(("-", u))
            prefix.append(("+", w))
            a.remove(u)
            a.add(w)
            a_only.discard(u)
            b_only.discard(w)
        else:
            v = by_r_a[ra][1]
            while by_l_b[lb][1] not in b_only:
                lb += 1
            u = by_l_b[lb][1]
            suffix.append(("-", u))
            suffix.append(("+", v))
            b.remove(u)
            b.add(v)
            b_only.discard(u)
            a_only.discard(v)


def tj_distance(model, c, start, target):
    """Swap distance between equal-size colorable sets.

    Equals half the TAR distance at threshold one below the common size;
    infinity propagates (it never arises on clique-path models, where sets of
    size above the threshold cannot be locked).
    """
    start = set(start)
    target = set(target)
    if len(start) != len(target):
        raise InvariantError("size mismatch: |S| must equal |S2|")
    if start == target:
        return 0
    d = tar_distance(model, c, start, target, len(start) - 1).distance
    return d if d == math.inf else d // 2


def tj_sequence(model, c, start, target):
    """A shortest swap sequence, or None when unreachable.

    Built by pairing the TAR steps at threshold |S|-1, which alternate
    strictly remove/add there; a different pattern is an internal error.
    """
    start = set(start)
    target = set(target)
    if len(start) != len(target):
        raise InvariantError("size mismatch: |S| must equal |S2|")
    if start == target:
        return ReconSequence(set(start), [])
    seq = shortest_tar_sequence(model, c, start, target, len(start) - 1)
    if seq is None:
        return None
    if len(seq.steps) % 2:
        raise RuntimeError("odd step count while pairing swaps")
    steps = []
    for i in range(0, len(seq.steps), 2):
        rem, add = seq.steps[i], seq.steps[i + 1]
        if rem[0] != "-" or add[0] != "+":
            raise RuntimeError("steps do not alternate remove/add")
        steps.append((">", rem[1], add[1]))
    return ReconSequence(set(start), steps)
