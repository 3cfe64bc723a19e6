"""The induced-subgraph order on graphic sequences.

D1 <= D2 holds when some realization of D1 is an induced subgraph of some
realization of D2. Three routes are provided:

* ``rao_leq_oracle`` — exact brute force for small instances: every
  labeled realization of D2 is enumerated and scanned for an induced
  subgraph with degree sequence D1. A None answer is a refutation.
* ``rao_leq_sufficient`` — constructive test through regularity counts:
  when the count vectors compare pointwise and the count difference
  expands to a graphic sequence, the disjoint union of a realization of
  D1 and a realization of the difference realizes D2, giving an explicit
  witness. None is inconclusive.
* ``rao_leq_via_components`` — both sequences are realized with bounded
  components; if the small graph's components embed injectively into
  distinct components of the large graph (induced embedding per part,
  chosen by maximum bipartite matching), the union of the matched images
  is an induced copy. None is inconclusive: only one realization pair is
  examined.

Every successful route returns a :class:`RaoWitness` that can be
revalidated independently of how it was found.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Literal, Optional

from .errors import CapExceededError
from .graphs import (
    SimpleGraph,
    components_with_vertices,
    degree_sequence,
    disjoint_union,
    sorted_edges,
    to_json_dict,
)
from .realization import realize, realize_bounded, require_graphic
from .sequences import (
    IntegerSequence,
    RegularitySequence,
    erdos_gallai_check,
    from_regularity,
    leq_pointwise,
    to_regularity,
)

DEFAULT_ORACLE_CAP = 8
DEFAULT_INDUCED_CAP = 10
DEFAULT_PART_CAP = 16


def _adjacency_masks(graph: SimpleGraph) -> list[int]:
    masks = [0] * graph.vertex_count
    for u, v in graph.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


# ---------------------------------------------------------------------------
# Canonical relabeling


def canonical_form(graph: SimpleGraph,
                   max_vertices: int = DEFAULT_PART_CAP) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Relabel ``graph`` into a canonical vertex order.

    The order minimises the adjacency code: the concatenation, vertex by
    vertex, of each newly placed vertex's adjacency bits to all earlier
    ones (the upper triangle of the adjacency matrix read column by
    column). The minimum is taken over all permutations via depth-first
    search with prefix pruning, so two graphs receive equal canonical
    forms exactly when they are isomorphic.

    Returns ``(canonical_graph, ordering)`` where ``ordering[i]`` is the
    original vertex placed at canonical index i.
    """
    n = graph.vertex_count
    if n > max_vertices:
        raise CapExceededError(
            f"canonicalization guard: {n} vertices exceeds cap {max_vertices}")
    if n <= 1:
        return graph, tuple(range(n))

    adj = _adjacency_masks(graph)
    best_cols: list[int] | None = None
    best_perm: tuple[int, ...] = ()
    placed: list[int] = []
    cols: list[int] = []
    used = [False] * n

    def extension(u: int) -> int:
        bits = 0
        row = adj[u]
        for w in placed:
            bits = (bits << 1) | ((row >> w) & 1)
        return bits

    def search(known_less: bool) -> None:
        nonlocal best_cols, best_perm
        t = len(placed)
        if t == n:
            if best_cols is None or cols < best_cols:
                best_cols = cols.copy()
                best_perm = tuple(placed)
            return
        ranked = sorted((extension(u), u) for u in range(n) if not used[u])
        for ext, u in ranked:
            less = known_less
            if best_cols is not None and not known_less:
                if ext > best_cols[t]:
                    break  # ranked ascending: nothing later can stay minimal
                if ext < best_cols[t]:
                    less = True
            used[u] = True
            placed.append(u)
            cols.append(ext)
            search(less)
            cols.pop()
            placed.pop()
            used[u] = False

    search(False)
    position = {v: i for i, v in enumerate(best_perm)}
    edges = frozenset(
        (min(position[u], position[v]), max(position[u], position[v]))
        for u, v in graph.edges)
    return SimpleGraph(n, edges), best_perm


# ---------------------------------------------------------------------------
# Induced-subgraph search


def is_induced_subgraph(small: SimpleGraph, host: SimpleGraph,
                        max_host_vertices: int = DEFAULT_INDUCED_CAP
                        ) -> Optional[tuple[int, ...]]:
    """Find an induced embedding of ``small`` into ``host``.

    Returns a tuple mapping each vertex of ``small`` to a distinct vertex
    of ``host`` with adjacency preserved in both directions (images are
    adjacent exactly when the preimages are), or None when no embedding
    exists. Exhaustive backtracking in vertex order, candidates tried
    ascending, so the result is deterministic.

    Raises :class:`CapExceededError` when the host exceeds the guard;
    callers at larger scale should fall back to a sufficient test.
    """
    if host.vertex_count > max_host_vertices:
        raise CapExceededError(
            f"induced-subgraph guard: host has {host.vertex_count} vertices,"
            f" cap is {max_host_vertices}")
    k, n = small.vertex_count, host.vertex_count
    if k > n:
        return None
    if k == 0:
        return ()
    adj_small = _adjacency_masks(small)
    adj_host = _adjacency_masks(host)
    deg_small = [m.bit_count() for m in adj_small]
    deg_host = [m.bit_count() for m in adj_host]
    image = [-1] * k
    taken = [False] * n

    def place(i: int) -> bool:
        for c in range(n):
            if taken[c] or deg_host[c] < deg_small[i]:
                continue
            if any(((adj_small[i] >> j) & 1) != ((adj_host[c] >> image[j]) & 1)
                   for j in range(i)):
                continue
            image[i] = c
            taken[c] = True
            if i + 1 == k or place(i + 1):
                return True
            taken[c] = False
        return False

    return tuple(image) if place(0) else None


# ---------------------------------------------------------------------------
# Witnesses


@dataclass(frozen=True)
class RaoWitness:
    """An explicit induced embedding between realizations.

    ``embedding[i]`` is the vertex of ``g_large`` that vertex i of
    ``g_small`` maps to.
    """

    g_small: SimpleGraph
    g_large: SimpleGraph
    embedding: tuple[int, ...]

    def validates(self, d_small: IntegerSequence, d_large: IntegerSequence) -> bool:
        """Recheck every witness invariant from scratch."""
        if degree_sequence(self.g_small) != list(d_small.entries):
            return False
        if degree_sequence(self.g_large) != list(d_large.entries):
            return False
        emb = self.embedding
        if len(emb) != self.g_small.vertex_count:
            return False
        if len(set(emb)) != len(emb):
            return False
        if any(not 0 <= v < self.g_large.vertex_count for v in emb):
            return False
        large = self.g_large.edges
        for u in range(self.g_small.vertex_count):
            for v in range(u + 1, self.g_small.vertex_count):
                image = (min(emb[u], emb[v]), max(emb[u], emb[v]))
                if ((u, v) in self.g_small.edges) != (image in large):
                    return False
        return True


def witness_to_json(d_small: IntegerSequence, d_large: IntegerSequence,
                    witness: RaoWitness) -> dict:
    return {
        "d1": list(d_small.entries),
        "d2": list(d_large.entries),
        "g_small": to_json_dict(witness.g_small),
        "g_large": to_json_dict(witness.g_large),
        "embedding": list(witness.embedding),
    }


# ---------------------------------------------------------------------------
# Exact oracle


def labeled_realizations(seq: IntegerSequence) -> Iterator[SimpleGraph]:
    """Yield every simple graph in which vertex i has degree ``entries[i]``.

    Graphs appear in ascending order of their edge-indicator vector over
    lexicographically sorted vertex pairs. Pinning degrees to the sorted
    entries enumerates one representative per labeling orbit, which loses
    nothing for containment questions (they are isomorphism-invariant).
    """
    n = seq.n
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    residual = list(seq.entries)
    capacity = [n - 1] * n
    chosen: list[tuple[int, int]] = []

    def rec(t: int) -> Iterator[SimpleGraph]:
        if t == len(pairs):
            yield SimpleGraph(n, frozenset(chosen))
            return
        u, v = pairs[t]
        capacity[u] -= 1
        capacity[v] -= 1
        if residual[u] <= capacity[u] and residual[v] <= capacity[v]:
            yield from rec(t + 1)
        if residual[u] > 0 and residual[v] > 0:
            residual[u] -= 1
            residual[v] -= 1
            chosen.append((u, v))
            yield from rec(t + 1)
            chosen.pop()
            residual[u] += 1
            residual[v] += 1
        capacity[u] += 1
        capacity[v] += 1

    if any(d > n - 1 for d in seq.entries):
        return
    yield from rec(0)


def _induced_on(host: SimpleGraph, vertices: tuple[int, ...]) -> SimpleGraph:
    index = {v: i for i, v in enumerate(vertices)}
    edges = frozenset(
        (min(index[u], index[v]), max(index[u], index[v]))
        for u, v in host.edges if u in index and v in index)
    return SimpleGraph(len(vertices), edges)


def rao_leq_oracle(d_small: IntegerSequence, d_large: IntegerSequence,
                   max_vertices: int = DEFAULT_ORACLE_CAP) -> Optional[RaoWitness]:
    """Exact decision by exhaustive search; None is a genuine refutation.

    Every realization of ``d_large`` (degrees pinned descending) is
    scanned over all vertex subsets of size ``d_small.n`` for an induced
    subgraph with degree sequence ``d_small``. The first hit in
    enumeration order is returned.
    """
    require_graphic(d_small)
    require_graphic(d_large)
    if d_large.n > max_vertices:
        raise CapExceededError(
            f"oracle guard: {d_large.n} vertices exceeds cap {max_vertices}")
    if d_small.n > d_large.n:
        return None
    want = list(d_small.entries)
    k = d_small.n
    for host in labeled_realizations(d_large):
        masks = _adjacency_masks(host)
        for subset in combinations(range(d_large.n), k):
            inside = 0
            for v in subset:
                inside |= 1 << v
            degrees = sorted(((masks[v] & inside).bit_count() for v in subset),
                             reverse=True)
            if degrees == want:
                return RaoWitness(_induced_on(host, subset), host, subset)
    return None


# ---------------------------------------------------------------------------
# Constructive sufficient test via regularity counts


def rao_leq_sufficient(d_small: IntegerSequence, d_large: IntegerSequence,
                       bound: int) -> Optional[RaoWitness]:
    """Try to certify d_small <= d_large through regularity counts.

    When the count vectors (with shared degree ``bound``) compare
    pointwise and their difference expands to a graphic sequence, the
    disjoint union of a realization of ``d_small`` and a realization of
    the difference realizes ``d_large``; the witness embeds the small
    realization identically. None is inconclusive, not a refutation.
    """
    if bound < max(d_small.max_degree, d_large.max_degree):
        raise ValueError(
            f"degree bound {bound} is smaller than a maximum entry"
            f" ({d_small.max_degree} / {d_large.max_degree})")
    require_graphic(d_small)
    require_graphic(d_large)
    counts_small = to_regularity(d_small, bound)
    counts_large = to_regularity(d_large, bound)
    if not leq_pointwise(counts_small, counts_large):
        return None
    difference = tuple(b - a for a, b in zip(counts_small.counts, counts_large.counts))
    if all(c == 0 for c in difference):
        shared = realize(d_small)
        return RaoWitness(shared, shared, tuple(range(shared.vertex_count)))
    rest = from_regularity(RegularitySequence(difference))
    if not erdos_gallai_check(rest).graphic:
        return None
    small_graph = realize(d_small)
    big = disjoint_union(small_graph, realize(rest))
    return RaoWitness(small_graph, big, tuple(range(small_graph.vertex_count)))


# ---------------------------------------------------------------------------
# Component decomposition and multiset embedding


@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected components in canonical form, deterministically ordered.

    ``parts[i]`` is the i-th component relabeled canonically;
    ``source_vertices[i][p]`` is the original vertex sitting at canonical
    position p. Parts are sorted by (vertex count, sorted edge list), so
    isomorphic components are adjacent and identical.
    """

    parts: tuple[SimpleGraph, ...]
    source_vertices: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.parts) != len(self.source_vertices):
            raise ValueError("parts and source_vertices must align")


def decompose(graph: SimpleGraph,
              max_part_vertices: int = DEFAULT_PART_CAP) -> ComponentDecomposition:
    """Split ``graph`` into canonicalized connected components."""
    items = []
    for part, original in components_with_vertices(graph):
        canon, ordering = canonical_form(part, max_vertices=max_part_vertices)
        items.append((canon, tuple(original[i] for i in ordering)))
    items.sort(key=lambda it: (it[0].vertex_count, sorted_edges(it[0])))
    return ComponentDecomposition(
        tuple(p for p, _ in items), tuple(m for _, m in items))


def _relation_embeddings(first: ComponentDecomposition,
                         second: ComponentDecomposition,
                         base: str, induced_cap: int
                         ) -> list[list[Optional[tuple[int, ...]]]]:
    table: list[list[Optional[tuple[int, ...]]]] = []
    for part in first.parts:
        row: list[Optional[tuple[int, ...]]] = []
        for other in second.parts:
            if base == "equality":
                row.append(tuple(range(part.vertex_count)) if part == other else None)
            else:
                row.append(is_induced_subgraph(part, other,
                                               max_host_vertices=induced_cap))
        table.append(row)
    return table


def _maximum_matching(related: list[list[bool]], right_size: int) -> dict[int, int]:
    """Left-to-right maximum bipartite matching (augmenting paths)."""
    match_right = [-1] * right_size

    def augment(i: int, visited: list[bool]) -> bool:
        for j in range(right_size):
            if related[i][j] and not visited[j]:
                visited[j] = True
                if match_right[j] == -1 or augment(match_right[j], visited):
                    match_right[j] = i
                    return True
        return False

    for i in range(len(related)):
        augment(i, [False] * right_size)
    return {i: j for j, i in enumerate(match_right) if i != -1}


def higman_embeds(first: ComponentDecomposition, second: ComponentDecomposition,
                  base: Literal["equality", "induced"] = "induced",
                  induced_cap: int = DEFAULT_PART_CAP) -> bool:
    """Can the parts of ``first`` map injectively into parts of ``second``?

    Each part must relate to its image under the base order: graph
    isomorphism for ``equality`` (canonical forms compare directly),
    induced-subgraph containment for ``induced``. Decided by maximum
    bipartite matching over the relation, so one small part relating to
    several images never causes a false negative.
    """
    if base not in ("equality", "induced"):
        raise ValueError(f"unknown base order {base!r}")
    embeddings = _relation_embeddings(first, second, base, induced_cap)
    related = [[e is not None for e in row] for row in embeddings]
    matched = _maximum_matching(related, len(second.parts))
    return len(matched) == len(first.parts)


def rao_leq_via_components(d_small: IntegerSequence, d_large: IntegerSequence,
                           part_cap: int = DEFAULT_PART_CAP) -> Optional[RaoWitness]:
    """Certify d_small <= d_large by matching bounded components.

    Realizes both sequences with bounded components, canonicalizes the
    decompositions, and matches the small graph's components into
    distinct components of the large graph under induced containment.
    Matched full components form an induced image, giving an explicit
    witness. None is inconclusive: only this one realization pair is
    examined.
    """
    require_graphic(d_small)
    require_graphic(d_large)
    small_graph = realize_bounded(d_small)
    large_graph = realize_bounded(d_large)
    small_parts = decompose(small_graph, max_part_vertices=part_cap)
    large_parts = decompose(large_graph, max_part_vertices=part_cap)
    embeddings = _relation_embeddings(small_parts, large_parts, "induced", part_cap)
    related = [[e is not None for e in row] for row in embeddings]
    matched = _maximum_matching(related, len(large_parts.parts))
    if len(matched) < len(small_parts.parts):
        return None
    mapping = [-1] * small_graph.vertex_count
    for i, j in matched.items():
        part_embedding = embeddings[i][j]
        for pos, vertex in enumerate(small_parts.source_vertices[i]):
            mapping[vertex] = large_parts.source_vertices[j][part_embedding[pos]]
    return RaoWitness(small_graph, large_graph, tuple(mapping))
