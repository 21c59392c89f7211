"""Executable claims about trees, checked over exhaustive or sampled corpora.

Each claim is a total function of a single tree with three outcomes: it
holds, it is refuted (with a re-checkable witness), or its hypothesis does
not apply. Claims that need a full scan over stable subsets raise
ScaleExceeded beyond the scan ceiling; the corpus runner records those
trees as skipped. Corpora are pure functions of their spec, so any worker
count produces the same verdicts.

Registry:

  C1  every stable set of size >= n/2 contains a pendant vertex
  C2  ...and if it also has a non-pendant member, then some pendant member
      sits at distance exactly two from another member
  C3  every maximum stable set contains a pendant vertex
  C4  trees with a perfect matching have two pendants at odd distance
  C5  "one maximum stable set whose complement is stable", "all pendants on
      one bipartition side" and "all pendant distances even" are equivalent
  C6  every stable set larger than the smaller bipartition side contains a
      pendant vertex, and a pendant member at distance two from a member
  C7  no perfect matching <=> core size >= 2; perfect matching <=> empty core
  C8  every stable set of pendant vertices extends to a maximum stable set
  C9  bonding laws at every internal vertex split T = T1 * v * T2: v is in
      core(T) iff it is in both factor cores; and then the stability numbers
      add up (minus one) and core(T) is the union of the factor cores
  C10 no perfect matching => at least two pendants in the core
  C11 no perfect matching and a core vertex of degree >= 2k (k >= 2)
      => at least 2k pendants in the core
  C12 no perfect matching => (a) two distinct core pendants at even
      distance; (b) if exactly two, their distance is never four
  C13 core size >= 1 + alpha - mu (report only, never asserted:
      it fails on trees with a perfect matching)
  E1  measurement: intersection of all maximal stable sets of size k for
      k = n/2 (when integral) and k = |smaller bipartition side|, and how
      many pendants it contains
"""

from __future__ import annotations

from dataclasses import dataclass
from multiprocessing import get_context
from typing import Iterable, Iterator

from .errors import ScaleExceeded, StablecoreError, TooLarge, TooSmall
from .graph_model import (
    SplitMix64,
    Tree,
    bfs_depths,
    bipartition,
    canonical_form,
    delete_vertices,
    derive_seed,
    distance,
    labeled_tree_at,
    labeled_tree_count,
    pendant_vertices,
    prufer_decode,
    tree_from_edges,
)
from .independence import (
    SmallGraph,
    alpha,
    alpha_forest,
    core,
    count_maximum_stable_sets,
    enumerate_maximal_stable_sets,
    enumerate_maximum_stable_sets,
    extend_pendant_set,
    mu,
    one_maximum_stable_set,
    small_graph_from_edges,
    small_graph_from_tree,
    stable_masks,
)

CLAIM_IDS = (
    "C1", "C2", "C3", "C4", "C5", "C6", "C7",
    "C8", "C9", "C10", "C11", "C12", "C13", "E1",
)

# Claims that scan all stable subsets (or all pendant subsets / maximal
# sets) refuse trees above this size; the runner counts them as skipped.
DEFAULT_SCAN_CEILING = 16
SCAN_CLAIMS = frozenset({"C1", "C2", "C6", "C8", "E1"})

DEFAULT_WITNESS_LIMIT = 16
DEFAULT_ENUMERATION_CEILING = 9

_CHUNK = 2048

HOLDS = "holds"
REFUTED = "refuted"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class CorpusSpec:
    """A tree population: every labeled tree with n_min <= n <= n_max, or
    ``sample_size`` seeded uniform draws with n uniform in that range."""

    mode: str  # "exhaustive" | "random"
    n_min: int
    n_max: int
    sample_size: int | None = None
    seed: int | None = None
    dedup_isomorphism: bool = False


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    tree: str  # canonical edge-list serialization, parse with tree_from_serialization
    status: str  # holds | refuted | not-applicable
    witness: dict | None


@dataclass(frozen=True)
class Verdict:
    claim: str
    corpus: CorpusSpec
    checked: int
    held: int
    refuted: int
    skipped: int
    witnesses: tuple[ClaimResult, ...]


def serialize_tree(t: Tree) -> str:
    return f"{t.n}:" + ",".join(f"{u}-{v}" for u, v in t.edges)


def tree_from_serialization(s: str) -> Tree:
    head, _, rest = s.partition(":")
    n = int(head)
    edges = []
    if rest:
        for part in rest.split(","):
            u, _, v = part.partition("-")
            edges.append((int(u), int(v)))
    return tree_from_edges(n, edges)


# ---------------------------------------------------------------------------
# Reconstructed figure fixtures


def fig1_graph() -> SmallGraph:
    """Seven-vertex non-tree whose pendant vertex is avoided by some
    maximum stable set (so C3 does not extend beyond trees)."""
    return small_graph_from_edges(
        7, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (1, 5), (2, 6), (5, 6)]
    )


def fig5_tree() -> Tree:
    """Nine-vertex tree whose core meets its pendants in exactly two
    vertices, an even distance (six) apart."""
    return tree_from_edges(
        9, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 6)]
    )


# ---------------------------------------------------------------------------
# Per-tree facts, computed lazily and shared between claims


class _TreeFacts:
    __slots__ = (
        "tree", "_alpha", "_mu", "_core", "_pend", "_bip",
        "_depth0", "_count", "_graph", "_stable", "_dist2",
    )

    def __init__(self, tree: Tree):
        self.tree = tree
        self._alpha = None
        self._mu = None
        self._core = None
        self._pend = None
        self._bip = None
        self._depth0 = None
        self._count = None
        self._graph = None
        self._stable = None
        self._dist2 = None

    def alpha(self) -> int:
        if self._alpha is None:
            self._alpha = alpha(self.tree)
        return self._alpha

    def mu(self) -> int:
        if self._mu is None:
            self._mu = mu(self.tree)
        return self._mu

    def core(self) -> frozenset[int]:
        if self._core is None:
            self._core = core(self.tree)
        return self._core

    def pend(self) -> frozenset[int]:
        if self._pend is None:
            self._pend = pendant_vertices(self.tree)
        return self._pend

    def bip(self):
        if self._bip is None:
            self._bip = bipartition(self.tree)
        return self._bip

    def depth0(self) -> list[int]:
        if self._depth0 is None:
            self._depth0 = bfs_depths(self.tree, 0)
        return self._depth0

    def count(self) -> int:
        if self._count is None:
            self._count = count_maximum_stable_sets(self.tree)
        return self._count

    def graph(self) -> SmallGraph:
        if self._graph is None:
            self._graph = small_graph_from_tree(self.tree)
        return self._graph

    def stable(self) -> list[int]:
        if self._stable is None:
            self._stable = stable_masks(self.graph())
        return self._stable

    def dist2(self) -> list[int]:
        # dist2[v]: bitmask of vertices at distance exactly 2 from v
        if self._dist2 is None:
            adj = self.graph().adjacency_masks
            out = []
            for v in range(self.tree.n):
                nn = 0
                for w in self.tree.adjacency[v]:
                    nn |= adj[w]
                out.append(nn & ~adj[v] & ~(1 << v))
            self._dist2 = out
        return self._dist2


def _members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _set_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _require_scan_scale(claim: str, n: int, scan_ceiling: int) -> None:
    if n > scan_ceiling:
        raise ScaleExceeded(f"{claim} needs an exhaustive scan; n={n} > ceiling {scan_ceiling}")


# ---------------------------------------------------------------------------
# Claim checkers: each returns (status, witness-or-None)


def _check_c1(facts: _TreeFacts, scan_ceiling: int):
    t = facts.tree
    _require_scan_scale("C1", t.n, scan_ceiling)
    n = t.n
    pend_mask = _set_mask(facts.pend())
    for m in facts.stable():
        if 2 * m.bit_count() >= n and not (m & pend_mask):
            return REFUTED, {"stable_set": _members(m)}
    return HOLDS, None


def _check_c2(facts: _TreeFacts, scan_ceiling: int):
    t = facts.tree
    _require_scan_scale("C2", t.n, scan_ceiling)
    n = t.n
    pend_mask = _set_mask(facts.pend())
    dist2 = facts.dist2()
    for m in facts.stable():
        if 2 * m.bit_count() < n or not (m & ~pend_mask):
            continue
        probe = m & pend_mask
        found = False
        while probe:
            low = probe & -probe
            probe ^= low
            if dist2[low.bit_length() - 1] & m:
                found = True
                break
        if not found:
            return REFUTED, {"stable_set": _members(m)}
    return HOLDS, None


def _check_c3(facts: _TreeFacts, scan_ceiling: int):
    t = facts.tree
    pend = facts.pend()
    if len(pend) == t.n:
        return HOLDS, None
    rest = delete_vertices(t, pend)
    if alpha_forest(rest) < facts.alpha():
        return HOLDS, None
    # a maximum stable set that avoids every pendant vertex exists; build one
    avoid = []
    for comp in rest.components:
        if comp.tree is None:
            avoid.append(comp.vertices[0])
        else:
            avoid.extend(comp.vertices[v] for v in one_maximum_stable_set(comp.tree))
    return REFUTED, {"stable_set": sorted(avoid)}


def _check_c4(facts: _TreeFacts, scan_ceiling: int):
    t = facts.tree
    if 2 * facts.alpha() != t.n:
        return NOT_APPLICABLE, None
    pend = facts.pend()
    sides = facts.bip()
    if (pend & sides.a) and (pend & sides.b):
        return HOLDS, None
    return REFUTED, {
        "pendants": sorted(pend),
        "side_a": sorted(sides.a),
        "side_b": sorted(sides.b),
    }


def _check_c5(facts: _TreeFacts, scan_ceiling: int):
    t = facts.tree
    pend = facts.pend()
    sides = facts.bip()
    one_side = pend <= sides.a or pend <= sides.b
    depth = facts.depth0()
    parities = {depth[v] % 2 for v in pend}
    even_dists = len(parities) == 1
    if facts.count() != 1:
        definitional = False
    else:
        (s,) = enumerate_maximum_stable_sets(t, limit=1)
        definitional = all(u in s or v in s for u, v in t.edges)
    if definitional == one_side == even_dists:
        return HOLDS, None
    return REFUTED, {
        "definitional": definitional,
        "pendants_on_one_side": one_side,
        "pendant_distances_even": even_dists,
    }


def _check_c6(facts: _TreeFacts, scan_ceiling: int):
    t = facts.tree
    _require_scan_scale("C6", t.n, scan_ceiling)
    sides = facts.bip()
    smaller = min(len(sides.a), len(sides.b))
    pend_mask = _set_mask(facts.pend())
    dist2 = facts.dist2()
    for m in facts.stable():
        if m.bit_count() <= smaller:
            continue
        if not (m & pend_mask):
            return REFUTED, {"stable_set": _members(m), "missing": "pendant member"}
        probe = m & pend_mask
        found = False
        while probe:
            low = probe & -probe
            probe ^= low
            if dist2[low.bit_length() - 1] & m:
                found = True
                break
        if not found:
            return REFUTED, {"stable_set": _members(m), "missing": "distance-2 pair"}
    return HOLDS, None


def _check_c7(facts: _TreeFacts, scan_ceiling: int):
    t = facts.tree
    a = facts.alpha()
    xi = len(facts.core())
    surplus_ok = (2 * a > t.n) == (xi >= 2)
    matched_ok = (2 * a == t.n) == (xi == 0)
    if surplus_ok and matched_ok:
        return HOLDS, None
    return REFUTED, {"alpha": a, "n": t.n, "xi": xi}


def _check_c8(facts: _TreeFacts, scan_ceiling: int):
    t = facts.tree
    _require_scan_scale("C8", t.n, scan_ceiling)
    pend = sorted(facts.pend())
    adj = facts.graph().adjacency_masks
    a_target = facts.alpha()
    for bits in range(1, 1 << len(pend)):
        subset = [pend[i] for i in range(len(pend)) if bits >> i & 1]
        m = _set_mask(subset)
        if any(adj[v] & m for v in subset):
            continue  # not stable (only possible when both ends of an edge are pendant)
        s = extend_pendant_set(t, subset)
        sm = _set_mask(s)
        ok = (
            m & sm == m
            and len(s) == a_target
            and not any(adj[v] & sm for v in s)
        )
        if not ok:
            return REFUTED, {"pendant_subset": subset, "returned_set": sorted(s)}
    return HOLDS, None


def _split_at(t: Tree, v: int, u: int):
    """Split T at internal vertex v into (side of neighbor u) + v and the rest.

    Returns (tree1, v1, map1, tree2, v2, map2) with mapX tuples sending
    factor labels back to T's labels.
    """
    adjacency = t.adjacency
    side = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for w in adjacency[x]:
            if w != v and w not in side:
                side.add(w)
                stack.append(w)

    def build(members: list[int]):
        index = {x: i for i, x in enumerate(members)}
        edges = [
            (index[x], index[w])
            for x in members
            for w in adjacency[x]
            if w in index and x < w
        ]
        return tree_from_edges(len(members), edges), index

    members1 = sorted(side | {v})
    members2 = sorted(set(range(t.n)) - side)
    t1, index1 = build(members1)
    t2, index2 = build(members2)
    return t1, index1[v], tuple(members1), t2, index2[v], tuple(members2)


def _check_c9(facts: _TreeFacts, scan_ceiling: int):
    t = facts.tree
    internal = [v for v in range(t.n) if t.degree(v) >= 2]
    if not internal:
        return NOT_APPLICABLE, None
    core_t = facts.core()
    alpha_t = facts.alpha()
    for v in internal:
        for u in t.adjacency[v]:
            t1, v1, map1, t2, v2, map2 = _split_at(t, v, u)
            core1 = core(t1)
            core2 = core(t2)
            bonded_in_core = v in core_t
            factors_in_core = v1 in core1 and v2 in core2
            if bonded_in_core != factors_in_core:
                return REFUTED, {
                    "vertex": v, "neighbor": u, "law": "core membership biconditional",
                    "in_bonded_core": bonded_in_core, "in_factor_cores": factors_in_core,
                }
            if not bonded_in_core:
                continue
            if alpha_t != alpha(t1) + alpha(t2) - 1:
                return REFUTED, {
                    "vertex": v, "neighbor": u, "law": "stability numbers add up",
                    "alpha": alpha_t, "alpha_factors": [alpha(t1), alpha(t2)],
                }
            mapped = {map1[x] for x in core1} | {map2[x] for x in core2}
            if mapped != core_t:
                return REFUTED, {
                    "vertex": v, "neighbor": u, "law": "core is union of factor cores",
                    "core": sorted(core_t), "factor_union": sorted(mapped),
                }
    return HOLDS, None


def _check_c10(facts: _TreeFacts, scan_ceiling: int):
    t = facts.tree
    if 2 * facts.alpha() <= t.n:
        return NOT_APPLICABLE, None
    cp = facts.core() & facts.pend()
    if len(cp) >= 2:
        return HOLDS, None
    return REFUTED, {"core_pendants": sorted(cp)}


def _check_c11(facts: _TreeFacts, scan_ceiling: int):
    t = facts.tree
    if 2 * facts.alpha() <= t.n:
        return NOT_APPLICABLE, None
    core_set = facts.core()
    max_deg = max((t.degree(v) for v in core_set), default=0)
    if max_deg < 4:
        return NOT_APPLICABLE, None
    cp = facts.core() & facts.pend()
    for k in range(2, max_deg // 2 + 1):
        if len(cp) < 2 * k:
            return REFUTED, {
                "k": k, "max_core_degree": max_deg, "core_pendants": sorted(cp),
            }
    return HOLDS, None


def _check_c12(facts: _TreeFacts, scan_ceiling: int):
    t = facts.tree
    if 2 * facts.alpha() <= t.n:
        return NOT_APPLICABLE, None
    cp = sorted(facts.core() & facts.pend())
    depth = facts.depth0()
    even = [v for v in cp if depth[v] % 2 == 0]
    odd = [v for v in cp if depth[v] % 2 == 1]
    if max(len(even), len(odd)) < 2:
        return REFUTED, {"subclaim": "a", "core_pendants": cp}
    if len(cp) == 2:
        d = distance(t, cp[0], cp[1])
        if d == 4:
            return REFUTED, {"subclaim": "b", "core_pendants": cp, "distance": d}
    return HOLDS, None


def _check_c13(facts: _TreeFacts, scan_ceiling: int):
    xi = len(facts.core())
    bound = 1 + facts.alpha() - facts.mu()
    if xi >= bound:
        return HOLDS, None
    return REFUTED, {"xi": xi, "alpha": facts.alpha(), "mu": facts.mu(), "bound": bound}


def _check_e1(facts: _TreeFacts, scan_ceiling: int):
    t = facts.tree
    _require_scan_scale("E1", t.n, scan_ceiling)
    sides = facts.bip()
    perfect = 2 * facts.mu() == t.n
    ks = []
    if t.n % 2 == 0:
        ks.append(t.n // 2)
    k2 = min(len(sides.a), len(sides.b))
    if k2 not in ks:
        ks.append(k2)
    pend = facts.pend()
    maximal = enumerate_maximal_stable_sets(t, limit=1 << 20)
    measurements = []
    for k in sorted(ks):
        of_size = [s for s in maximal if len(s) == k]
        if of_size:
            inter = frozenset.intersection(*of_size)
            measurements.append({
                "k": k,
                "num_sets": len(of_size),
                "intersection": sorted(inter),
                "pendants_in_intersection": len(inter & pend),
            })
        else:
            measurements.append({
                "k": k,
                "num_sets": 0,
                "intersection": None,
                "pendants_in_intersection": None,
            })
    return HOLDS, {
        "perfect_matching": perfect,
        "beyond_question": perfect,
        "measurements": measurements,
    }


_CHECKERS = {
    "C1": _check_c1, "C2": _check_c2, "C3": _check_c3, "C4": _check_c4,
    "C5": _check_c5, "C6": _check_c6, "C7": _check_c7, "C8": _check_c8,
    "C9": _check_c9, "C10": _check_c10, "C11": _check_c11, "C12": _check_c12,
    "C13": _check_c13, "E1": _check_e1,
}


def _check_with_facts(claim: str, facts: _TreeFacts, scan_ceiling: int) -> ClaimResult:
    status, witness = _CHECKERS[claim](facts, scan_ceiling)
    return ClaimResult(
        claim=claim, tree=serialize_tree(facts.tree), status=status, witness=witness
    )


def check_tree(claim: str, t: Tree, scan_ceiling: int = DEFAULT_SCAN_CEILING) -> ClaimResult:
    """Evaluate one claim on one tree. Raises ScaleExceeded when the claim
    needs an exhaustive scan and the tree is too large for it."""
    if claim not in _CHECKERS:
        raise StablecoreError(f"unknown claim {claim!r}; valid: {', '.join(CLAIM_IDS)}")
    return _check_with_facts(claim, _TreeFacts(t), scan_ceiling)


# ---------------------------------------------------------------------------
# Corpora


def validate_corpus(
    spec: CorpusSpec, enumeration_ceiling: int = DEFAULT_ENUMERATION_CEILING
) -> None:
    if spec.mode not in ("exhaustive", "random"):
        raise StablecoreError(f"unknown corpus mode {spec.mode!r}")
    if spec.n_min < 2:
        raise TooSmall(f"n_min={spec.n_min} < 2")
    if spec.n_min > spec.n_max:
        raise StablecoreError(f"n_min={spec.n_min} > n_max={spec.n_max}")
    if spec.mode == "exhaustive":
        if spec.n_max > enumeration_ceiling:
            raise TooLarge(
                f"exhaustive corpus needs n_max <= {enumeration_ceiling}, got {spec.n_max}"
            )
    else:
        if not spec.sample_size or spec.sample_size < 1:
            raise StablecoreError("random corpus needs sample_size >= 1")
        if spec.seed is None:
            raise StablecoreError("random corpus needs a seed")


def corpus_size(
    spec: CorpusSpec, enumeration_ceiling: int = DEFAULT_ENUMERATION_CEILING
) -> int:
    validate_corpus(spec, enumeration_ceiling)
    if spec.mode == "random":
        return spec.sample_size
    return sum(labeled_tree_count(n) for n in range(spec.n_min, spec.n_max + 1))


def corpus_tree(spec: CorpusSpec, index: int) -> Tree:
    """Tree number ``index`` of the corpus; pure in (spec, index)."""
    if spec.mode == "exhaustive":
        for n in range(spec.n_min, spec.n_max + 1):
            block = labeled_tree_count(n)
            if index < block:
                return labeled_tree_at(n, index)
            index -= block
        raise StablecoreError("index beyond corpus end")
    rng = SplitMix64(derive_seed(spec.seed, index))
    n = spec.n_min + rng.randrange(spec.n_max - spec.n_min + 1)
    if n == 2:
        return prufer_decode((), 2)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def iter_corpus(
    spec: CorpusSpec, enumeration_ceiling: int = DEFAULT_ENUMERATION_CEILING
) -> Iterator[Tree]:
    """Corpus trees in index order, with isomorphism dedup applied if asked."""
    total = corpus_size(spec, enumeration_ceiling)
    if not spec.dedup_isomorphism:
        for i in range(total):
            yield corpus_tree(spec, i)
        return
    seen: set[str] = set()
    for i in range(total):
        t = corpus_tree(spec, i)
        form = canonical_form(t)
        if form not in seen:
            seen.add(form)
            yield t


# ---------------------------------------------------------------------------
# Runner


def _canonical_key(result: ClaimResult) -> tuple[int, str]:
    return int(result.tree.partition(":")[0]), result.tree


def _process_chunk(payload):
    spec, desc, claims, scan_ceiling, witness_limit = payload
    if desc[0] == "range":
        trees = [corpus_tree(spec, i) for i in range(desc[1], desc[2])]
    else:
        trees = desc[1]
    stats = {c: [0, 0, 0, []] for c in claims}
    for t in trees:
        facts = _TreeFacts(t)
        for c in claims:
            entry = stats[c]
            try:
                res = _check_with_facts(c, facts, scan_ceiling)
            except ScaleExceeded:
                entry[2] += 1
                continue
            if res.status == HOLDS:
                entry[0] += 1
            elif res.status == REFUTED:
                entry[1] += 1
            else:
                entry[2] += 1
            if res.witness is not None:
                entry[3].append(res)
    for c in claims:
        wl = stats[c][3]
        wl.sort(key=_canonical_key)
        if witness_limit is not None:
            del wl[witness_limit:]
    return stats


def _chunk_payloads(spec, claims, scan_ceiling, witness_limit, enumeration_ceiling):
    total = corpus_size(spec, enumeration_ceiling)
    if spec.dedup_isomorphism:
        batch: list[Tree] = []
        for t in iter_corpus(spec, enumeration_ceiling):
            batch.append(t)
            if len(batch) == _CHUNK:
                yield (spec, ("trees", batch), claims, scan_ceiling, witness_limit)
                batch = []
        if batch:
            yield (spec, ("trees", batch), claims, scan_ceiling, witness_limit)
    else:
        for start in range(0, total, _CHUNK):
            desc = ("range", start, min(start + _CHUNK, total))
            yield (spec, desc, claims, scan_ceiling, witness_limit)


def run_suite(
    claims: Iterable[str],
    corpus: CorpusSpec,
    jobs: int = 1,
    witness_limit: int | None = DEFAULT_WITNESS_LIMIT,
    scan_ceiling: int = DEFAULT_SCAN_CEILING,
    enumeration_ceiling: int = DEFAULT_ENUMERATION_CEILING,
) -> list[Verdict]:
    """Check each claim over the whole corpus (one shared materialization).

    The result is a pure function of (claims, corpus, witness_limit,
    scan_ceiling): chunk boundaries, counting and witness ordering do not
    depend on ``jobs``.
    """
    claims = list(claims)
    for c in claims:
        if c not in _CHECKERS:
            raise StablecoreError(f"unknown claim {c!r}; valid: {', '.join(CLAIM_IDS)}")
    if not claims:
        return []
    validate_corpus(corpus, enumeration_ceiling)
    totals = {c: [0, 0, 0, []] for c in claims}
    payloads = _chunk_payloads(corpus, claims, scan_ceiling, witness_limit, enumeration_ceiling)
    if jobs > 1:
        with get_context("fork").Pool(jobs) as pool:
            partials = pool.imap(_process_chunk, payloads)
            _merge(totals, partials, claims)
    else:
        _merge(totals, map(_process_chunk, payloads), claims)
    verdicts = []
    for c in claims:
        held, refuted, skipped, witnessed = totals[c]
        witnessed.sort(key=_canonical_key)
        if witness_limit is not None:
            del witnessed[witness_limit:]
        verdicts.append(
            Verdict(
                claim=c,
                corpus=corpus,
                checked=held + refuted + skipped,
                held=held,
                refuted=refuted,
                skipped=skipped,
                witnesses=tuple(witnessed),
            )
        )
    return verdicts


def _merge(totals, partials, claims):
    for stats in partials:
        for c in claims:
            totals[c][0] += stats[c][0]
            totals[c][1] += stats[c][1]
            totals[c][2] += stats[c][2]
            totals[c][3].extend(stats[c][3])


def run_claim(
    claim: str,
    corpus: CorpusSpec,
    jobs: int = 1,
    witness_limit: int | None = DEFAULT_WITNESS_LIMIT,
    scan_ceiling: int = DEFAULT_SCAN_CEILING,
    enumeration_ceiling: int = DEFAULT_ENUMERATION_CEILING,
) -> Verdict:
    """Deterministic verdict for one claim over one corpus."""
    return run_suite(
        [claim], corpus, jobs=jobs, witness_limit=witness_limit,
        scan_ceiling=scan_ceiling, enumeration_ceiling=enumeration_ceiling,
    )[0]
