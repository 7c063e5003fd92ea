"""Simple graphs and the constructions used throughout: complement, union,
join, induced subgraphs, divisor graphs, and clique-replaced graphs.

Graphs are immutable after construction; adjacency is kept as frozensets for
O(1) edge queries, and dense matrices are only materialized at determinant
time (linalg module).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .linalg import IntMatrix
from .numth import divisors_desc


class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "labels", "_edge_count")

    def __init__(self, n: int, edges=(), labels=None):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        if labels is not None and len(labels) != n:
            raise ValueError("label count must match vertex count")
        sets = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in sets)
        self.labels = tuple(labels) if labels is not None else None
        self._edge_count = sum(len(s) for s in sets) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def edges(self):
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self.adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def connected_components(self) -> list[list[int]]:
        comps = []
        seen = set()
        for s in range(self.n):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(s) for s in self.adj), reverse=True))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, edges={self.edge_count})"


def complete_graph(n: int, labels=None) -> SimpleGraph:
    return SimpleGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], labels)


def empty_graph(n: int, labels=None) -> SimpleGraph:
    return SimpleGraph(n, (), labels)


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def complement(g: SimpleGraph) -> SimpleGraph:
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if v not in g.adj[u]
    ]
    return SimpleGraph(g.n, edges, g.labels)


def union(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    """Vertex-disjoint union; g2's vertices are shifted past g1's."""
    off = g1.n
    edges = list(g1.edges()) + [(u + off, v + off) for u, v in g2.edges()]
    labels = None
    if g1.labels is not None and g2.labels is not None:
        labels = g1.labels + g2.labels
    return SimpleGraph(g1.n + g2.n, edges, labels)


def join(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    """Disjoint union plus every edge between the two sides."""
    g = union(g1, g2)
    cross = [(u, g1.n + v) for u in range(g1.n) for v in range(g2.n)]
    return SimpleGraph(g.n, list(g.edges()) + cross, g.labels)


def union_all(gs) -> SimpleGraph:
    gs = list(gs)
    if not gs:
        raise ValueError("union_all needs at least one graph")
    return reduce(union, gs)


def induced_subgraph(g: SimpleGraph, vertices) -> SimpleGraph:
    verts = list(vertices)
    if len(set(verts)) != len(verts):
        raise ValueError("duplicate vertices in subset")
    index = {}
    for i, v in enumerate(verts):
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        index[v] = i
    edges = [
        (index[u], index[v])
        for u in verts
        for v in g.adj[u]
        if v in index and index[u] < index[v]
    ]
    labels = tuple(g.label(v) for v in verts) if g.labels is not None else None
    return SimpleGraph(len(verts), edges, labels)


def universal_vertices(g: SimpleGraph) -> list[int]:
    """Vertices adjacent to every other vertex."""
    return [v for v in range(g.n) if len(g.adj[v]) == g.n - 1]


def divisor_graph(n: int) -> SimpleGraph:
    """Graph on the divisors of n (decreasing order), adjacency = divisibility.

    Vertex 0 is n itself and the last vertex is 1; both are universal.
    """
    divs = divisors_desc(n)
    edges = [
        (i, j)
        for i in range(len(divs))
        for j in range(i + 1, len(divs))
        if divs[i] % divs[j] == 0
    ]
    return SimpleGraph(len(divs), edges, [str(d) for d in divs])


@dataclass(frozen=True)
class CliqueReplacedSpec:
    """A connected base graph plus one positive clique size per base vertex."""

    base: SimpleGraph
    sizes: tuple[int, ...]

    def __post_init__(self):
        if len(self.sizes) != self.base.n:
            raise ValueError("one size per base vertex required")
        if any(x < 1 for x in self.sizes):
            raise ValueError("all clique sizes must be >= 1")
        if not self.base.is_connected():
            raise ValueError("base graph must be connected")

    @property
    def k(self) -> int:
        return self.base.n

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def block_degree_plus_one(self, i: int) -> int:
        """m_i: own block size plus the sizes of all neighboring blocks."""
        return self.sizes[i] + sum(self.sizes[j] for j in self.base.adj[i])

    def block_ratio(self, i: int) -> Fraction:
        """lambda_i = m_i / x_i."""
        return Fraction(self.block_degree_plus_one(i), self.sizes[i])

    def ratio_product(self) -> Fraction:
        """Psi: the product of all block ratios."""
        out = Fraction(1)
        for i in range(self.k):
            out *= self.block_ratio(i)
        return out


def clique_replaced(spec: CliqueReplacedSpec) -> SimpleGraph:
    """Blow each base vertex i up into a clique of size x_i; base edges become
    complete bipartite connections between blocks.

    Blocks are laid out consecutively in base-vertex order.
    """
    base, sizes = spec.base, spec.sizes
    starts = [0]
    for x in sizes:
        starts.append(starts[-1] + x)
    edges = []
    for i in range(base.n):
        lo, hi = starts[i], starts[i + 1]
        edges.extend((a, b) for a in range(lo, hi) for b in range(a + 1, hi))
        for j in base.adj[i]:
            if j > i:
                edges.extend(
                    (a, b)
                    for a in range(lo, hi)
                    for b in range(starts[j], starts[j + 1])
                )
    labels = [
        f"{base.label(i)}.{t}" for i in range(base.n) for t in range(sizes[i])
    ]
    return SimpleGraph(starts[-1], edges, labels)


def adjacency_matrix(g: SimpleGraph) -> IntMatrix:
    n = g.n
    return IntMatrix(
        n, n, tuple(1 if j in g.adj[i] else 0 for i in range(n) for j in range(n))
    )


def laplacian_matrix(g: SimpleGraph) -> IntMatrix:
    n = g.n
    data = []
    for i in range(n):
        for j in range(n):
            if i == j:
                data.append(len(g.adj[i]))
            else:
                data.append(-1 if j in g.adj[i] else 0)
    return IntMatrix(n, n, tuple(data))


# --- file formats ---


def to_edge_list_text(g: SimpleGraph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> SimpleGraph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not 0 <= u < v < n:
            raise ValueError(f"edge ({u},{v}) violates 0 <= u < v < n")
        edges.append((u, v))
    return SimpleGraph(n, edges)


def to_dot(g: SimpleGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f'  {v} [label="{g.label(v)}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
