"""Immutable simple graphs: standard families, complements, products, prisms, joins.

Vertices are labeled 0..n-1 internally; 1-based labels appear only in I/O.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

BAR = "̄"  # combining macron, renders "3" + BAR as the complement-copy label


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with per-vertex neighbor sets.

    Invariants: no self-loops, symmetric adjacency. Instances are immutable
    and safe to share across threads.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = None

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def label(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return str(v + 1)

    def neighbor_masks(self) -> list[int]:
        """Adjacency as integer bitmasks, one per vertex."""
        masks = []
        for a in self.adj:
            m = 0
            for w in a:
                m |= 1 << w
            masks.append(m)
        return masks

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(a) for a in self.adj))


def _assemble(n: int, edge_set: set[tuple[int, int]],
              labels: tuple[str, ...] | None = None) -> Graph:
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edge_set:
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj), labels)


def build_graph(n: int, edges: Iterable[tuple[int, int]],
                labels: Sequence[str] | None = None) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse.

    Raises ValueError naming the offending pair on self-loops or
    out-of-range endpoints.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    edge_set: set[tuple[int, int]] = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop rejected: ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"endpoint out of range 0..{n - 1}: ({u}, {v})")
        edge_set.add((min(u, v), max(u, v)))
    lab = tuple(labels) if labels is not None else None
    if lab is not None and len(lab) != n:
        raise ValueError(f"expected {n} labels, got {len(lab)}")
    return _assemble(n, edge_set, lab)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete(n) needs n >= 1")
    return _assemble(n, {(u, v) for u in range(n) for v in range(u + 1, n)})


def cycle(n: int) -> Graph:
    """C_n on vertices 1..n (stored 0-based): path edges plus the edge {1, n}."""
    if n < 3:
        raise ValueError(f"cycle(n) needs n >= 3, got {n}")
    return _assemble(n, {(i, (i + 1) % n) if i + 1 < n else (0, n - 1)
                         for i in range(n)})


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path(n) needs n >= 1")
    return _assemble(n, {(i, i + 1) for i in range(n - 1)})


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite needs both sides >= 1")
    return complete_multipartite([a, b])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """K_{n1,...,np}: vertices grouped by part in order, edges across parts."""
    if len(parts) < 1 or any(p < 1 for p in parts):
        raise ValueError(f"part sizes must be positive, got {list(parts)}")
    n = sum(parts)
    part_of = []
    for i, p in enumerate(parts):
        part_of.extend([i] * p)
    edge_set = {(u, v) for u in range(n) for v in range(u + 1, n)
                if part_of[u] != part_of[v]}
    return _assemble(n, edge_set)


def multipartite_part_of(parts: Sequence[int]) -> list[int]:
    """Part index of each vertex of complete_multipartite(parts)."""
    out: list[int] = []
    for i, p in enumerate(parts):
        out.extend([i] * p)
    return out


def complement(g: Graph) -> Graph:
    """Same vertex set and labels; uv an edge iff it is not one in g."""
    edge_set = {(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                if v not in g.adj[u]}
    return _assemble(g.n, edge_set, g.labels)


def complementary_product(g: Graph, h: Graph, r: Iterable[int],
                          s: Iterable[int]) -> Graph:
    """G(R) square H(S): vertex (i, j) is numbered i*n(H) + j (row-major)."""
    rset, sset = set(r), set(s)
    if not rset <= set(range(g.n)):
        raise ValueError("R must be a subset of V(G)")
    if not sset <= set(range(h.n)):
        raise ValueError("S must be a subset of V(H)")
    nh = h.n
    edge_set: set[tuple[int, int]] = set()
    for i in range(g.n):
        in_r = i in rset
        for j in range(nh):
            for kk in range(j + 1, nh):
                if h.has_edge(j, kk) == in_r:
                    edge_set.add((i * nh + j, i * nh + kk))
    for j in range(nh):
        in_s = j in sset
        for i in range(g.n):
            for hh in range(i + 1, g.n):
                if g.has_edge(i, hh) == in_s:
                    edge_set.add((i * nh + j, hh * nh + j))
    return _assemble(g.n * h.n, edge_set)


def complementary_prism(g: Graph) -> Graph:
    """G joined to its complement by a perfect matching.

    Vertices 0..n-1 induce g, vertices n..2n-1 induce complement(g), and
    vertex i is matched to n+i. Labels follow the "i" / "i-bar" convention.
    """
    n = g.n
    edge_set = {(u, v) for u, v in g.edges()}
    for u in range(n):
        for v in range(u + 1, n):
            if v not in g.adj[u]:
                edge_set.add((n + u, n + v))
    for i in range(n):
        edge_set.add((i, n + i))
    labels = tuple(str(i + 1) for i in range(n)) + \
        tuple(str(i + 1) + BAR for i in range(n))
    return _assemble(2 * n, edge_set, labels)


def corona_k1(g: Graph) -> Graph:
    """G with one pendant vertex attached to each vertex."""
    n = g.n
    edge_set = set(g.edges())
    for i in range(n):
        edge_set.add((i, n + i))
    return _assemble(2 * n, edge_set)


def k_join(f: Graph, h: Graph, k: int,
           assignment: Sequence[Iterable[int]] | None = None) -> Graph:
    """Disjoint union of f and h plus edges from each f-vertex to >= k h-vertices.

    H vertices are shifted by n(f). The default assignment joins every
    f-vertex to h-vertices 0..k-1.
    """
    if h.n < k:
        raise ValueError(f"k_join needs n(H) >= k, got n(H)={h.n}, k={k}")
    if assignment is None:
        assignment = [range(k)] * f.n
    subsets = [set(a) for a in assignment]
    if len(subsets) != f.n:
        raise ValueError(f"assignment needs one subset per F vertex ({f.n})")
    for i, sub in enumerate(subsets):
        if len(sub) < k:
            raise ValueError(f"assigned subset for F vertex {i} has size "
                             f"{len(sub)} < k={k}")
        if not sub <= set(range(h.n)):
            raise ValueError(f"assigned subset for F vertex {i} not within V(H)")
    nf = f.n
    edge_set = set(f.edges())
    edge_set |= {(nf + u, nf + v) for u, v in h.edges()}
    for i, sub in enumerate(subsets):
        for j in sub:
            edge_set.add((i, nf + j))
    return _assemble(nf + h.n, edge_set)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Standard cartesian product, row-major numbering (i, j) -> i*n(H) + j."""
    nh = h.n
    edge_set: set[tuple[int, int]] = set()
    for i in range(g.n):
        for j, kk in h.edges():
            edge_set.add((i * nh + j, i * nh + kk))
    for j in range(nh):
        for i, hh in g.edges():
            edge_set.add((i * nh + j, hh * nh + j))
    return _assemble(g.n * h.n, edge_set)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on the given vertices, renumbered in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    edge_set = {(index[u], index[v]) for u in vertices for v in g.adj[u]
                if v in index and index[u] < index[v]}
    return _assemble(len(vertices), edge_set)


def write_edge_list(g: Graph, fh) -> None:
    """Emit the text edge-list format: "n m" then one "u v" line per edge."""
    fh.write(f"{g.n} {g.num_edges}\n")
    for u, v in g.edges():
        fh.write(f"{u} {v}\n")


def read_edge_list(fh) -> Graph:
    """Parse the text edge-list format; '#' starts a comment line."""
    lines = [ln.strip() for ln in fh
             if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad header line: {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    edges = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(toks[0]), int(toks[1])))
    if len(edges) != m:
        raise ValueError(f"header promises {m} edges, found {len(edges)}")
    return build_graph(n, edges)
