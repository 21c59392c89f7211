"""Trees as immutable adjacency structures, plus generation and enumeration.

Vertices are 0-based contiguous integers. A ``Tree`` always has n >= 2,
exactly n-1 edges, and is connected; ``Forest`` (produced by vertex
deletion) may contain singleton components. Labeled trees are generated
and enumerated through the Prufer bijection, and compared up to
isomorphism through an AHU parenthesis encoding rooted at the tree center.

Randomness comes from an explicit SplitMix64 generator so that every
sampled corpus is reproducible bit-for-bit across machines and runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .errors import EmptyResult, NotATree, OutOfRange, TooLarge, TooSmall

DEFAULT_ENUMERATION_CEILING = 9

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class Tree:
    """Connected acyclic graph on vertices 0..n-1, immutable after construction.

    ``adjacency[v]`` is the sorted tuple of neighbors of v; ``edges`` holds
    the n-1 pairs as (min, max), sorted. Build through ``tree_from_edges``.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class ForestComponent:
    """One connected piece left after deletion, over the original labels.

    ``tree`` is the component relabeled to 0..k-1 following the sorted
    ``vertices`` tuple; it is None for singletons (a Tree needs n >= 2).
    """

    vertices: tuple[int, ...]
    tree: Tree | None


@dataclass(frozen=True)
class Forest:
    components: tuple[ForestComponent, ...]

    @property
    def vertex_count(self) -> int:
        return sum(len(c.vertices) for c in self.components)


@dataclass(frozen=True)
class Bipartition:
    """The unique 2-coloring of a tree; side ``a`` is the one holding vertex 0."""

    a: frozenset[int]
    b: frozenset[int]


def tree_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Tree:
    """Validate and build a Tree from an edge list.

    Raises TooSmall (n < 2), OutOfRange (endpoint outside 0..n-1) or
    NotATree (wrong edge count, self-loop, duplicate edge, disconnected).
    """
    if n < 2:
        raise TooSmall(f"a tree needs at least 2 vertices, got n={n}")
    adj: list[list[int]] = [[] for _ in range(n)]
    count = 0
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise OutOfRange(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise NotATree(f"self-loop at vertex {u}")
        adj[u].append(v)
        adj[v].append(u)
        count += 1
    if count != n - 1:
        raise NotATree(f"a tree on {n} vertices needs {n - 1} edges, got {count}")
    for v in range(n):
        adj[v].sort()
        prev = -1
        for w in adj[v]:
            if w == prev:
                raise NotATree(f"duplicate edge ({min(v, w)},{max(v, w)})")
            prev = w
    # n-1 edges and no duplicates: connected iff acyclic; one BFS settles both.
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    reached = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = 1
                reached += 1
                stack.append(w)
    if reached != n:
        raise NotATree(f"graph is disconnected ({reached} of {n} vertices reachable)")
    canon = sorted((v, w) for v in range(n) for w in adj[v] if v < w)
    return Tree(n=n, adjacency=tuple(tuple(a) for a in adj), edges=tuple(canon))


def pendant_vertices(t: Tree) -> frozenset[int]:
    """Vertices of degree exactly 1. Every tree has at least two."""
    return frozenset(v for v in range(t.n) if len(t.adjacency[v]) == 1)


def bipartition(t: Tree) -> Bipartition:
    """2-color by breadth-first traversal from vertex 0."""
    depth = bfs_depths(t, 0)
    a = frozenset(v for v in range(t.n) if depth[v] % 2 == 0)
    b = frozenset(v for v in range(t.n) if depth[v] % 2 == 1)
    return Bipartition(a=a, b=b)


def bfs_depths(t: Tree, root: int) -> list[int]:
    """Edge-count distance from ``root`` to every vertex."""
    if not 0 <= root < t.n:
        raise OutOfRange(f"vertex {root} outside 0..{t.n - 1}")
    adjacency = t.adjacency
    depth = [-1] * t.n
    depth[root] = 0
    frontier = [root]
    i = 0
    while i < len(frontier):
        v = frontier[i]
        i += 1
        d = depth[v] + 1
        for w in adjacency[v]:
            if depth[w] < 0:
                depth[w] = d
                frontier.append(w)
    return depth


def distance(t: Tree, u: int, v: int) -> int:
    """Number of edges on the unique u-v path."""
    if not 0 <= u < t.n or not 0 <= v < t.n:
        raise OutOfRange(f"vertex pair ({u},{v}) outside 0..{t.n - 1}")
    if u == v:
        return 0
    adjacency = t.adjacency
    depth = [-1] * t.n
    depth[u] = 0
    frontier = [u]
    i = 0
    while i < len(frontier):
        x = frontier[i]
        i += 1
        d = depth[x] + 1
        for w in adjacency[x]:
            if depth[w] < 0:
                if w == v:
                    return d
                depth[w] = d
                frontier.append(w)
    raise AssertionError("unreachable: trees are connected")


def delete_vertices(t: Tree, w: Iterable[int]) -> Forest:
    """Induced subgraph on V - w, decomposed into components over original labels."""
    removed = bytearray(t.n)
    for v in w:
        if not 0 <= v < t.n:
            raise OutOfRange(f"vertex {v} outside 0..{t.n - 1}")
        removed[v] = 1
    survivors = t.n - sum(removed)
    if survivors == 0:
        raise EmptyResult("deleting every vertex leaves nothing")
    adjacency = t.adjacency
    seen = bytearray(t.n)
    components = []
    for s in range(t.n):
        if removed[s] or seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        i = 0
        while i < len(comp):
            v = comp[i]
            i += 1
            for x in adjacency[v]:
                if not removed[x] and not seen[x]:
                    seen[x] = 1
                    comp.append(x)
        comp.sort()
        if len(comp) == 1:
            components.append(ForestComponent(vertices=(comp[0],), tree=None))
            continue
        index = {v: i for i, v in enumerate(comp)}
        sub_edges = [
            (index[v], index[x]) for v in comp for x in adjacency[v] if not removed[x] and v < x
        ]
        components.append(
            ForestComponent(vertices=tuple(comp), tree=tree_from_edges(len(comp), sub_edges))
        )
    return Forest(components=tuple(components))


# ---------------------------------------------------------------------------
# Prufer bijection


def prufer_decode(code: Iterable[int], n: int) -> Tree:
    """Tree for a Prufer sequence of length n-2 (the convention where the
    lowest-numbered leaf is removed first and vertex n-1 survives to the end)."""
    if n < 2:
        raise TooSmall(f"need n >= 2, got n={n}")
    seq = list(code)
    if len(seq) != n - 2:
        raise OutOfRange(f"code length {len(seq)} != n-2 = {n - 2}")
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise OutOfRange(f"code entry {x} outside 0..{n - 1}")
        degree[x] += 1
    edges = []
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return tree_from_edges(n, edges)


def prufer_encode(t: Tree) -> tuple[int, ...]:
    """Inverse of ``prufer_decode``: peel the lowest leaf n-2 times."""
    n = t.n
    if n == 2:
        return ()
    adjacency = t.adjacency
    degree = [len(a) for a in adjacency]
    alive = bytearray([1]) * n
    code = []
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for _ in range(n - 2):
        alive[leaf] = 0
        degree[leaf] = 0
        nb = -1
        for w in adjacency[leaf]:
            if alive[w]:
                nb = w
                break
        code.append(nb)
        degree[nb] -= 1
        if degree[nb] == 1 and nb < ptr:
            leaf = nb
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    return tuple(code)


# ---------------------------------------------------------------------------
# Canonical form (isomorphism classes of free trees)


def _centers(t: Tree) -> list[int]:
    # peel leaf layers until one or two vertices remain
    n = t.n
    if n == 2:
        return [0, 1]
    degree = [len(a) for a in t.adjacency]
    layer = [v for v in range(n) if degree[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            degree[v] = 0
            for w in t.adjacency[v]:
                if degree[w] > 1:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_encoding(t: Tree, root: int) -> str:
    order, parent = _bfs_order(t, root)
    children: list[list[int]] = [[] for _ in range(t.n)]
    for v in order[1:]:
        children[parent[v]].append(v)
    enc = [""] * t.n
    for v in reversed(order):
        enc[v] = "(" + "".join(sorted(enc[c] for c in children[v])) + ")"
    return enc[root]


def canonical_form(t: Tree) -> str:
    """Label-independent encoding: equal strings iff the trees are isomorphic.

    AHU parenthesis string rooted at the center; a bicentral tree takes the
    lexicographically smaller of its two rooted encodings.
    """
    return min(_rooted_encoding(t, c) for c in _centers(t))


def _bfs_order(t: Tree, root: int) -> tuple[list[int], list[int]]:
    """Breadth-first vertex order and parent array for the tree rooted at ``root``."""
    adjacency = t.adjacency
    parent = [-1] * t.n
    parent[root] = root
    order = [root]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for w in adjacency[v]:
            if parent[w] < 0:
                parent[w] = v
                order.append(w)
    parent[root] = -1
    return order, parent


# ---------------------------------------------------------------------------
# Seeded generation and exhaustive enumeration


class SplitMix64:
    """SplitMix64 generator: fixed algorithm, identical output everywhere.

    state <- state + 0x9E3779B97F4A7C15 (mod 2^64); the output is the state
    scrambled by two xor-shift-multiply rounds. Bounded draws use rejection
    sampling, so there is no modulo bias.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, bound: int) -> int:
        limit = (_MASK64 + 1) - ((_MASK64 + 1) % bound)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % bound


def derive_seed(seed: int, index: int) -> int:
    """Child seed for item ``index`` of a seeded stream.

    Pure function of (seed, index); lets corpus items be regenerated
    independently and in any order.
    """
    g = SplitMix64((seed & _MASK64) ^ (((index + 1) * 0xD1342543DE82EF95) & _MASK64))
    return g.next_u64()


def random_tree(n: int, seed: int) -> Tree:
    """Uniform random labeled tree on n vertices: a uniform Prufer code, decoded."""
    if n < 2:
        raise TooSmall(f"need n >= 2, got n={n}")
    if n == 2:
        return prufer_decode((), 2)
    rng = SplitMix64(seed)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def labeled_tree_count(n: int) -> int:
    """Cayley's count of labeled trees on n vertices."""
    return n ** (n - 2)


def labeled_tree_at(n: int, index: int) -> Tree:
    """Tree number ``index`` (0-based) in the enumeration order of
    ``enumerate_labeled_trees``: Prufer codes read as base-n numerals."""
    digits = [0] * (n - 2)
    for pos in range(n - 3, -1, -1):
        index, digits[pos] = divmod(index, n)
    return prufer_decode(digits, n)


def enumerate_labeled_trees(n: int, ceiling: int = DEFAULT_ENUMERATION_CEILING) -> Iterator[Tree]:
    """Yield every labeled tree on n vertices exactly once (n^(n-2) of them),
    in lexicographic Prufer-code order."""
    if n < 2:
        raise TooSmall(f"need n >= 2, got n={n}")
    if n > ceiling:
        raise TooLarge(f"n={n} exceeds the enumeration ceiling {ceiling}")
    for code in product(range(n), repeat=n - 2):
        yield prufer_decode(code, n)
