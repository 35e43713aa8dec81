"""Simple graphs up to isomorphism, flats, contractions, and acyclic orientations.

Vertices are 1..n.  Edges are stored as sorted pairs in a sorted tuple, so two
Graph values are equal exactly when they are equal as labeled graphs; use
canonical_form to compare up to isomorphism.

The module also implements the source-peeling involution on ordered set
partitions of the vertex set: partitions inducing a fixed flat F are paired by
a split or merge step, and the fixed points correspond to acyclic orientations
of the contraction G/F.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product

from .combinat import ordered_set_partitions

Edge = tuple[int, int]
Blocks = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, order=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class Orientation:
    """A digraph: arcs are (tail, head) pairs over an explicit vertex tuple."""

    vertices: tuple[int, ...]
    arcs: tuple[Edge, ...]


def graph(n: int, edge_pairs=()) -> Graph:
    """Build a Graph from any iterable of vertex pairs, normalizing order."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    seen = set()
    for u, v in edge_pairs:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge {u}-{v} is outside 1..{n}")
        seen.add((min(u, v), max(u, v)))
    return Graph(n, tuple(sorted(seen)))


def canonical_form(g: Graph) -> Graph:
    """Lexicographically least relabeling; equal for isomorphic graphs."""
    if g.n > 8:
        raise ValueError("canonical form is limited to at most 8 vertices")
    best = None
    for perm in permutations(range(1, g.n + 1)):
        relabeled = tuple(sorted(
            (min(perm[u - 1], perm[v - 1]), max(perm[u - 1], perm[v - 1]))
            for u, v in g.edges
        ))
        if best is None or relabeled < best:
            best = relabeled
    return Graph(g.n, best if best is not None else ())


def components(n: int, edges) -> list[tuple[int, ...]]:
    """Connected components of ([n], edges) as sorted blocks, sorted by minimum."""
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    blocks: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        blocks.setdefault(find(v), []).append(v)
    return sorted(tuple(sorted(b)) for b in blocks.values())


def flats(g: Graph) -> list[tuple[Edge, ...]]:
    """All edge subsets whose components are induced subgraphs of g."""
    out = []
    for r in range(len(g.edges) + 1):
        for subset in combinations(g.edges, r):
            comp_of = {}
            for comp in components(g.n, subset):
                for v in comp:
                    comp_of[v] = comp
            if all(
                e in subset or comp_of[e[0]] is not comp_of[e[1]]
                for e in g.edges
            ):
                out.append(subset)
    return out


def contract_labeled(g: Graph, flat_edges) -> tuple[Graph, dict[int, int]]:
    """Contract each component of flat_edges to one vertex, renumbered 1..c.

    Components are numbered in order of their minimum vertex.  Loops and
    parallel edges are discarded.  Returns the reduced graph and the map from
    original vertex to new label.
    """
    comps = components(g.n, flat_edges)
    label = {v: i for i, comp in enumerate(comps, start=1) for v in comp}
    edges = {
        (min(label[u], label[v]), max(label[u], label[v]))
        for u, v in g.edges
        if label[u] != label[v]
    }
    return Graph(len(comps), tuple(sorted(edges))), label


def contract(g: Graph, flat_edges) -> Graph:
    reduced, _ = contract_labeled(g, flat_edges)
    return canonical_form(reduced)


def _is_acyclic(vertices, arcs) -> bool:
    indeg = {v: 0 for v in vertices}
    heads: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in arcs:
        heads[u].append(v)
        indeg[v] += 1
    queue = [v for v in vertices if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in heads[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == len(indeg)


def is_acyclic(o: Orientation) -> bool:
    return _is_acyclic(o.vertices, o.arcs)


def acyclic_orientation_count(g: Graph) -> int:
    vertices = tuple(range(1, g.n + 1))
    count = 0
    for direction in product((0, 1), repeat=len(g.edges)):
        arcs = [
            (u, v) if d == 0 else (v, u)
            for (u, v), d in zip(g.edges, direction)
        ]
        if _is_acyclic(vertices, arcs):
            count += 1
    return count


def chromatic_polynomial_at(g: Graph, x: int) -> int:
    """Evaluate the chromatic polynomial by deletion and contraction."""
    memo: dict[tuple[int, tuple[Edge, ...]], int] = {}

    def run(n: int, edges: tuple[Edge, ...]) -> int:
        if not edges:
            return x ** n
        key = (n, edges)
        if key not in memo:
            reduced, _ = contract_labeled(Graph(n, edges), (edges[0],))
            memo[key] = run(n, edges[1:]) - run(reduced.n, reduced.edges)
        return memo[key]

    return run(g.n, g.edges)


def _check_partition(n: int, blocks: Blocks) -> None:
    seen: set[int] = set()
    for block in blocks:
        if not block:
            raise ValueError("blocks must be nonempty")
        if tuple(sorted(block)) != tuple(block):
            raise ValueError(f"block {block} is not sorted")
        if seen & set(block):
            raise ValueError("blocks must be disjoint")
        seen |= set(block)
    if seen != set(range(1, n + 1)):
        raise ValueError(f"blocks do not partition 1..{n}")


def orientation_from_partition(g: Graph, blocks: Blocks) -> Orientation:
    """Orient each edge from the earlier block to the later one."""
    _check_partition(g.n, blocks)
    index = {v: i for i, block in enumerate(blocks) for v in block}
    arcs = []
    for u, v in g.edges:
        if index[u] == index[v]:
            raise ValueError(f"edge {u}-{v} lies inside one block")
        arcs.append((u, v) if index[u] < index[v] else (v, u))
    return Orientation(tuple(range(1, g.n + 1)), tuple(sorted(arcs)))


def canonical_partition(o: Orientation) -> Blocks:
    """Peel off the largest source repeatedly; singleton blocks in peel order."""
    remaining = set(o.vertices)
    blocks = []
    while remaining:
        heads = {v for u, v in o.arcs if u in remaining and v in remaining}
        sources = remaining - heads
        if not sources:
            raise ValueError("orientation has a directed cycle")
        b = max(sources)
        blocks.append((b,))
        remaining.remove(b)
    return tuple(blocks)


def induced_flat(g: Graph, blocks: Blocks) -> tuple[Edge, ...]:
    """Edges of g joining two vertices of a common block."""
    index = {v: i for i, block in enumerate(blocks) for v in block}
    return tuple(e for e in g.edges if index[e[0]] == index[e[1]])


def partitions_inducing_flat(g: Graph, flat_edges):
    target = tuple(sorted((min(u, v), max(u, v)) for u, v in flat_edges))
    for pi in ordered_set_partitions(g.n):
        if induced_flat(g, pi) == target:
            yield pi


def graph_involution_step(g: Graph, flat_edges, pi: Blocks) -> Blocks:
    """One split or merge step of the orientation-indexed involution.

    The partition pi must induce the flat.  Components of the flat are
    contracted to their minimum vertex; on the reduced partition, the first
    block disagreeing with the source-peeling order determines a split (the
    distinguished label sits in a block of size at least two) or a merge (it
    is a singleton, absorbed into the block before it).  Fixed points are the
    peeling orders of acyclic orientations of the contraction.
    """
    _check_partition(g.n, pi)
    target = tuple(sorted((min(u, v), max(u, v)) for u, v in flat_edges))
    if induced_flat(g, pi) != target:
        raise ValueError("partition does not induce the given flat")

    members = {comp[0]: comp for comp in components(g.n, target)}
    label = {v: lab for lab, comp in members.items() for v in comp}
    reduced = tuple(
        tuple(sorted({label[v] for v in block})) for block in pi
    )
    index = {lab: i for i, block in enumerate(reduced) for lab in block}
    arcs = set()
    for u, v in g.edges:
        a, b = label[u], label[v]
        if a != b:
            arcs.add((a, b) if index[a] < index[b] else (b, a))
    o = Orientation(tuple(sorted(members)), tuple(sorted(arcs)))

    phi = canonical_partition(o)
    if reduced == phi:
        return pi
    i = next(t for t in range(len(reduced)) if reduced[t] != phi[t])
    b = phi[i][0]
    j = next(t for t in range(i, len(reduced)) if b in reduced[t])
    if len(reduced[j]) >= 2:
        rest = tuple(x for x in reduced[j] if x != b)
        new_reduced = reduced[:j] + (rest, (b,)) + reduced[j + 1:]
    else:
        merged = tuple(sorted(reduced[j - 1] + reduced[j]))
        new_reduced = reduced[:j - 1] + (merged,) + reduced[j + 1:]
    return tuple(
        tuple(sorted(v for lab in block for v in members[lab]))
        for block in new_reduced
    )


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """Canonical representatives of every simple graph on n vertices."""
    possible = list(combinations(range(1, n + 1), 2))
    seen = set()
    for r in range(len(possible) + 1):
        for chosen in combinations(possible, r):
            seen.add(canonical_form(Graph(n, chosen)))
    return tuple(sorted(seen))


def render_graph(g: Graph) -> str:
    return "n={};edges={}".format(
        g.n, ",".join(f"{u}-{v}" for u, v in g.edges)
    )


def parse_edge_list(text: str) -> tuple[Edge, ...]:
    """Parse "1-2,2-3" (or "") into a tuple of vertex pairs."""
    text = text.strip()
    if not text:
        return ()
    edges = []
    for chunk in text.split(","):
        left, sep, right = chunk.partition("-")
        if not sep or not left.strip().isdigit() or not right.strip().isdigit():
            raise ValueError(f"bad edge {chunk!r}, expected like 1-2")
        edges.append((int(left), int(right)))
    return tuple(edges)


def parse_graph(text: str) -> Graph:
    head, sep, tail = text.strip().partition(";")
    if not head.startswith("n=") or not head[2:].isdigit():
        raise ValueError(f"bad graph {text!r}, expected like n=3;edges=1-2")
    n = int(head[2:])
    edge_text = ""
    if sep:
        if not tail.startswith("edges="):
            raise ValueError(f"bad graph {text!r}, expected edges=... after ;")
        edge_text = tail[len("edges="):]
    return graph(n, parse_edge_list(edge_text))
