"""Stability computations on trees: maximum stable sets, core, matchings.

The production path for the core (vertices common to every maximum stable
set) is a two-pass rerooting dynamic program: a downward pass collects
per-subtree optima with the subtree root forced in or out, an upward pass
propagates the optimum of everything outside each subtree, and the two
together give the stability number of T - v for every v in one O(n) sweep.
A vertex lies in the core exactly when deleting it drops the stability
number.

Independent reference paths are kept alongside: a quadratic per-deletion
recomputation, an exhaustive bitmask oracle for graphs that need not be
trees, and explicit enumeration of the maximum stable sets themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .errors import LimitExceeded, NotPendant, NotStable, StablecoreError, TooLarge
from .graph_model import (
    Bipartition,
    Forest,
    Tree,
    _bfs_order,
    bipartition,
    pendant_vertices,
)

BRUTE_FORCE_CEILING = 30


def _rooted_arrays(t: Tree):
    """Downward include/exclude DP over the tree rooted at vertex 0.

    Returns (order, parent, down_in, down_ex, sum_ex, sum_best) where
    down_in[v]/down_ex[v] are the subtree optima with v forced in/out and
    sum_ex/sum_best are the child sums they were assembled from.
    """
    n = t.n
    adjacency = t.adjacency
    parent = [-1] * n
    parent[0] = 0
    order = [0]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for w in adjacency[v]:
            if parent[w] < 0:
                parent[w] = v
                order.append(w)
    down_in = [1] * n
    down_ex = [0] * n
    sum_ex = [0] * n
    sum_best = [0] * n
    for v in order[:0:-1]:
        di = 1 + sum_ex[v]
        de = sum_best[v]
        down_in[v] = di
        down_ex[v] = de
        p = parent[v]
        sum_ex[p] += de
        sum_best[p] += di if di > de else de
    down_in[0] = 1 + sum_ex[0]
    down_ex[0] = sum_best[0]
    return order, parent, down_in, down_ex, sum_ex, sum_best


def alpha(t: Tree) -> int:
    """Stability number: size of a maximum stable set."""
    _, _, down_in, down_ex, _, _ = _rooted_arrays(t)
    return down_in[0] if down_in[0] > down_ex[0] else down_ex[0]


def mu(t: Tree) -> int:
    """Matching number, by greedy leaf matching (match a leaf to its
    neighbor, delete both, repeat). Optimal on forests."""
    n = t.n
    adjacency = t.adjacency
    degree = [len(a) for a in adjacency]
    alive = bytearray(b"\x01") * n
    leaves = [v for v in range(n) if degree[v] == 1]
    matched = 0
    qi = 0
    while qi < len(leaves):
        u = leaves[qi]
        qi += 1
        if not alive[u] or degree[u] != 1:
            continue
        partner = -1
        for w in adjacency[u]:
            if alive[w]:
                partner = w
                break
        alive[u] = 0
        alive[partner] = 0
        matched += 1
        for x in adjacency[partner]:
            if alive[x]:
                degree[x] -= 1
                if degree[x] == 1:
                    leaves.append(x)
    return matched


def has_perfect_matching(t: Tree) -> bool:
    return 2 * mu(t) == t.n


def core(t: Tree) -> frozenset[int]:
    """Intersection of all maximum stable sets, in O(n).

    v is in the core iff alpha(T - v) == alpha(T) - 1. The upward pass
    computes, for each non-root v, the optimum of the component above v
    with v's parent forced in (up_in) or out (up_ex); alpha(T - v) is then
    the child-subtree optima plus the above-v optimum.
    """
    n = t.n
    order, parent, down_in, down_ex, sum_ex, sum_best = _rooted_arrays(t)
    total = down_in[0] if down_in[0] > down_ex[0] else down_ex[0]
    target = total - 1
    up_in = [0] * n
    up_ex = [0] * n
    members = []
    if sum_best[0] == target:
        members.append(0)
    for v in order[1:]:
        p = parent[v]
        di = down_in[v]
        de = down_ex[v]
        best = di if di > de else de
        if p == 0:
            ue = sum_best[p] - best
            ui = 1 + sum_ex[p] - de
        else:
            up = up_in[p]
            ep = up_ex[p]
            ue = sum_best[p] - best + (up if up > ep else ep)
            ui = 1 + sum_ex[p] - de + ep
        up_in[v] = ui
        up_ex[v] = ue
        rest = ui if ui > ue else ue
        if sum_best[v] + rest == target:
            members.append(v)
    return frozenset(members)


def _alpha_without(t: Tree, skip: int) -> int:
    """Stability number of T - skip, recomputed from scratch (no shared state
    with the rerooting path; this is the quadratic reference's inner step)."""
    n = t.n
    adjacency = t.adjacency
    parent = [-2] * n
    parent[skip] = skip
    order = []
    for s in range(n):
        if parent[s] != -2:
            continue
        parent[s] = -1
        order.append(s)
        i = len(order) - 1
        while i < len(order):
            v = order[i]
            i += 1
            for w in adjacency[v]:
                if parent[w] == -2:
                    parent[w] = v
                    order.append(w)
    sum_ex = [0] * n
    sum_best = [0] * n
    total = 0
    for idx in range(len(order) - 1, -1, -1):
        v = order[idx]
        di = 1 + sum_ex[v]
        de = sum_best[v]
        p = parent[v]
        if p < 0:
            total += di if di > de else de
        else:
            sum_ex[p] += de
            sum_best[p] += di if di > de else de
    return total


def core_naive(t: Tree) -> frozenset[int]:
    """Quadratic reference for ``core``: n independent vertex deletions,
    summing component stability numbers."""
    target = alpha(t) - 1
    return frozenset(v for v in range(t.n) if _alpha_without(t, v) == target)


def alpha_forest(f: Forest) -> int:
    """Stability number of a forest: components add up; singletons count 1."""
    return sum(1 if c.tree is None else alpha(c.tree) for c in f.components)


def one_maximum_stable_set(t: Tree) -> frozenset[int]:
    """Deterministic representative of the maximum stable sets."""
    n = t.n
    order, parent, down_in, down_ex, _, _ = _rooted_arrays(t)
    chosen = bytearray(n)
    chosen[0] = 1 if down_in[0] >= down_ex[0] else 0
    for v in order[1:]:
        if chosen[parent[v]]:
            chosen[v] = 0
        else:
            chosen[v] = 1 if down_in[v] >= down_ex[v] else 0
    return frozenset(v for v in range(n) if chosen[v])


# ---------------------------------------------------------------------------
# Exhaustive oracle on small, possibly non-tree graphs


@dataclass(frozen=True)
class SmallGraph:
    """Simple graph on at most 30 vertices, adjacency kept as bitmasks."""

    n: int
    adjacency_masks: tuple[int, ...]


@dataclass(frozen=True)
class BruteForceResult:
    alpha: int
    count: int
    core: frozenset[int]
    one_witness: frozenset[int]


def small_graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> SmallGraph:
    if n > BRUTE_FORCE_CEILING:
        raise TooLarge(f"n={n} exceeds the brute-force ceiling {BRUTE_FORCE_CEILING}")
    if n < 1:
        raise StablecoreError("need at least one vertex")
    masks = [0] * n
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise StablecoreError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise StablecoreError(f"self-loop at vertex {u}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return SmallGraph(n=n, adjacency_masks=tuple(masks))


def small_graph_from_tree(t: Tree) -> SmallGraph:
    return small_graph_from_edges(t.n, t.edges)


def stable_masks(g: SmallGraph) -> list[int]:
    """All stable subsets of g as bitmasks, in increasing numeric order.

    Uses the subset recurrence: a set is stable iff the set minus its lowest
    vertex is stable and that vertex has no neighbor among the rest.
    Memory is 2^n bytes, so this path is capped well below the ceiling.
    """
    n = g.n
    if n > 24:
        raise TooLarge(f"stable-subset table needs 2^{n} bytes; cap is n=24")
    masks = g.adjacency_masks
    size = 1 << n
    stab = bytearray(size)
    stab[0] = 1
    out = [0]
    for m in range(1, size):
        low = m & -m
        r = m ^ low
        if stab[r] and not (masks[low.bit_length() - 1] & r):
            stab[m] = 1
            out.append(m)
    return out


def brute_force_stability(g: SmallGraph) -> BruteForceResult:
    """Exhaustive subset scan: stability number, number of maximum stable
    sets, their intersection, and the numerically first witness."""
    n = g.n
    if n > BRUTE_FORCE_CEILING:
        raise TooLarge(f"n={n} exceeds the brute-force ceiling {BRUTE_FORCE_CEILING}")
    best = 0
    count = 1
    inter = 0
    witness = 0
    if n <= 24:
        for m in stable_masks(g):
            c = m.bit_count()
            if c > best:
                best = c
                count = 1
                inter = m
                witness = m
            elif c == best:
                count += 1
                inter &= m
    else:
        # no table at this size: test each subset directly (slow, but within contract)
        masks = g.adjacency_masks
        for m in range(1, 1 << n):
            probe = m
            ok = True
            while probe:
                low = probe & -probe
                if masks[low.bit_length() - 1] & m:
                    ok = False
                    break
                probe ^= low
            if not ok:
                continue
            c = m.bit_count()
            if c > best:
                best = c
                count = 1
                inter = m
                witness = m
            elif c == best:
                count += 1
                inter &= m
    return BruteForceResult(
        alpha=best,
        count=count,
        core=_mask_to_set(inter),
        one_witness=_mask_to_set(witness),
    )


def _mask_to_set(m: int) -> frozenset[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return frozenset(out)


# ---------------------------------------------------------------------------
# Counting and enumerating stable sets


def _count_dp(t: Tree):
    """Per-state (size, multiplicity) DP. Returns (alpha, count, arrays)."""
    n = t.n
    order, parent, *_ = _rooted_arrays(t)
    in_size = [1] * n
    in_cnt = [1] * n
    ex_size = [0] * n
    ex_cnt = [1] * n
    for v in order[:0:-1]:
        p = parent[v]
        in_size[p] += ex_size[v]
        in_cnt[p] *= ex_cnt[v]
        if in_size[v] > ex_size[v]:
            ex_size[p] += in_size[v]
            ex_cnt[p] *= in_cnt[v]
        elif in_size[v] < ex_size[v]:
            ex_size[p] += ex_size[v]
            ex_cnt[p] *= ex_cnt[v]
        else:
            ex_size[p] += in_size[v]
            ex_cnt[p] *= in_cnt[v] + ex_cnt[v]
    if in_size[0] > ex_size[0]:
        best, count = in_size[0], in_cnt[0]
    elif in_size[0] < ex_size[0]:
        best, count = ex_size[0], ex_cnt[0]
    else:
        best, count = in_size[0], in_cnt[0] + ex_cnt[0]
    return best, count, order, parent, in_size, ex_size


def count_maximum_stable_sets(t: Tree) -> int:
    """|Omega(T)|. Python integers make the multiplicities overflow-safe."""
    return _count_dp(t)[1]


def enumerate_maximum_stable_sets(t: Tree, limit: int) -> list[frozenset[int]]:
    """All maximum stable sets, sorted by their sorted member tuples.

    Counts first and raises LimitExceeded (carrying the count) before
    materializing anything when more than ``limit`` sets exist.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    best, count, order, parent, in_size, ex_size = _count_dp(t)
    if count > limit:
        raise LimitExceeded(f"{count} maximum stable sets exceed limit {limit}", count=count)
    children: list[list[int]] = [[] for _ in range(t.n)]
    for v in order[1:]:
        children[parent[v]].append(v)

    memo: dict[tuple[int, bool], list[frozenset[int]]] = {}

    def expand(v: int, included: bool) -> list[frozenset[int]]:
        key = (v, included)
        got = memo.get(key)
        if got is not None:
            return got
        if included:
            parts = [expand(c, False) for c in children[v]]
            base: list[frozenset[int]] = [frozenset((v,))]
        else:
            parts = []
            for c in children[v]:
                if in_size[c] > ex_size[c]:
                    parts.append(expand(c, True))
                elif in_size[c] < ex_size[c]:
                    parts.append(expand(c, False))
                else:
                    parts.append(expand(c, True) + expand(c, False))
            base = [frozenset()]
        out = [s.union(*combo) if combo else s for s in base for combo in product(*parts)]
        memo[key] = out
        return out

    results: list[frozenset[int]] = []
    if in_size[0] >= ex_size[0]:
        results.extend(expand(0, True))
    if ex_size[0] >= in_size[0]:
        results.extend(expand(0, False))
    results.sort(key=lambda s: tuple(sorted(s)))
    return results


def enumerate_maximal_stable_sets(t: Tree, limit: int) -> list[frozenset[int]]:
    """All inclusion-maximal stable sets (Bron-Kerbosch with pivoting on the
    complement graph), sorted by their sorted member tuples."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    n = t.n
    if n > BRUTE_FORCE_CEILING:
        raise TooLarge(f"n={n} exceeds the brute-force ceiling {BRUTE_FORCE_CEILING}")
    full = (1 << n) - 1
    adj = small_graph_from_tree(t).adjacency_masks
    nonadj = [full & ~adj[v] & ~(1 << v) for v in range(n)]
    found: list[int] = []

    def grow(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            found.append(r)
            return
        px = p | x
        pivot = -1
        pivot_score = -1
        m = px
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            score = (nonadj[u] & p).bit_count()
            if score > pivot_score:
                pivot_score = score
                pivot = u
        cand = p & ~nonadj[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(r | low, p & nonadj[v], x & nonadj[v])
            p &= ~low
            x |= low

    grow(0, full, 0)
    if len(found) > limit:
        raise LimitExceeded(
            f"{len(found)} maximal stable sets exceed limit {limit}", count=len(found)
        )
    return sorted((_mask_to_set(m) for m in found), key=lambda s: tuple(sorted(s)))


# ---------------------------------------------------------------------------
# Pendant interaction and classification


def extend_pendant_set(t: Tree, a: Iterable[int]) -> frozenset[int]:
    """Grow a stable set of pendant vertices into a maximum stable set.

    Exchange procedure: start from any maximum stable set S; while some
    member u of ``a`` is outside S, its unique neighbor must occupy S, so
    swapping the two keeps S maximum and strictly grows the overlap with a.
    """
    members = frozenset(a)
    pend = pendant_vertices(t)
    stray = members - pend
    if stray:
        raise NotPendant(f"vertices {sorted(stray)} are not pendant")
    adjacency = t.adjacency
    for u in members:
        if adjacency[u][0] in members:
            raise NotStable(f"vertices {u} and {adjacency[u][0]} are adjacent")
    s = set(one_maximum_stable_set(t))
    for u in sorted(members - s):
        # u's unique neighbor sits in s, or s was not maximum
        s.remove(adjacency[u][0])
        s.add(u)
    return frozenset(s)


def is_strong_unique_independent(t: Tree) -> bool:
    """True when every pendant vertex lies on one side of the bipartition,
    i.e. all pendant-to-pendant distances are even."""
    pend = pendant_vertices(t)
    sides = bipartition(t)
    return pend <= sides.a or pend <= sides.b


def is_strong_unique_by_definition(t: Tree) -> bool:
    """Definitional cross-check: exactly one maximum stable set, whose
    complement is also stable."""
    if count_maximum_stable_sets(t) != 1:
        return False
    (s,) = enumerate_maximum_stable_sets(t, limit=1)
    return all(u in s or v in s for u, v in t.edges)


# ---------------------------------------------------------------------------
# Aggregation


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    alpha: int
    mu: int
    xi: int
    core: frozenset[int]
    pendants: frozenset[int]
    bipartition: Bipartition
    has_perfect_matching: bool
    num_maximum_stable_sets: int
    strong_unique: bool


def analyze(t: Tree) -> AnalysisReport:
    """One-stop bundle of the stability structure of a tree."""
    core_set = core(t)
    matching = mu(t)
    return AnalysisReport(
        n=t.n,
        alpha=alpha(t),
        mu=matching,
        xi=len(core_set),
        core=core_set,
        pendants=pendant_vertices(t),
        bipartition=bipartition(t),
        has_perfect_matching=2 * matching == t.n,
        num_maximum_stable_sets=count_maximum_stable_sets(t),
        strong_unique=is_strong_unique_independent(t),
    )
