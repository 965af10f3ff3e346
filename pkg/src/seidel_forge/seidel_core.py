"""Graphs, Seidel matrices, switching, cones, and switching-class keys.

A switching class (two-graph) is an orbit of graphs under vertex switching
G -> G^U combined with relabeling; equivalently an orbit of Seidel matrices
S' = P^T S P over signed permutation matrices P.  The canonical key computed
here is a total invariant: equal keys iff switching equivalent.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from itertools import combinations

from .canon import canonical_form_bits, pack_bits
from .exact_linalg import IntMatrix

__all__ = [
    "Graph",
    "SwitchingClassKey",
    "seidel_of_graph",
    "adjacency_matrix",
    "switch",
    "cone",
    "canonical_key",
    "all_switching_classes",
    "switching_class_representatives",
]

MAX_VERTICES = 32


def pair_index(i: int, j: int, n: int) -> int:
    """Row-major index of pair (i, j), i < j, in the strict upper triangle."""
    if not 0 <= i < j < n:
        raise ValueError("need 0 <= i < j < n")
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on n <= 32 vertices; adj[v] is a bitmask."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError("adjacency bits out of range")
            if row >> v & 1:
                raise ValueError("loops are not allowed")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.adj[i] >> j & 1) != (self.adj[j] >> i & 1):
                    raise ValueError("adjacency must be symmetric")

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        adj = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError("loops are not allowed")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return Graph(n, tuple(adj))

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, (0,) * n)

    @staticmethod
    def complete(n: int) -> "Graph":
        full = (1 << n) - 1
        return Graph(n, tuple(full ^ (1 << v) for v in range(n)))

    @staticmethod
    def cycle(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)]) if n >= 3 else Graph.path(n)

    @staticmethod
    def path(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @staticmethod
    def complete_minus_matching(s: int, t: int) -> "Graph":
        """K_{s+t} minus a matching of size t (t <= s): the graph D_{s,t}."""
        if t > s:
            raise ValueError("matching size t must not exceed s")
        n = s + t
        g = Graph.complete(n)
        adj = list(g.adj)
        for k in range(t):
            a, b = 2 * k, 2 * k + 1
            adj[a] ^= 1 << b
            adj[b] ^= 1 << a
        return Graph(n, tuple(adj))

    @staticmethod
    def from_triangle_bits(n: int, bits: int) -> "Graph":
        """Graph from packed upper-triangle bits (MSB first, row-major)."""
        m = n * (n - 1) // 2
        adj = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if bits >> (m - 1 - pair_index(i, j, n)) & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        return Graph(n, tuple(adj))

    def triangle_bits(self) -> int:
        """Packed upper-triangle bits, pair (0,1) most significant."""
        bits = 0
        for i in range(self.n):
            for j in range(i + 1, self.n):
                bits = (bits << 1) | (self.adj[i] >> j & 1)
        return bits

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.adj[i] >> j & 1
        ]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> set[int]:
        row = self.adj[v]
        return {j for j in range(self.n) if row >> j & 1}

    def delete_vertex(self, v: int) -> "Graph":
        keep = [u for u in range(self.n) if u != v]
        adj = []
        for u in keep:
            row = 0
            for k, w in enumerate(keep):
                row |= (self.adj[u] >> w & 1) << k
            adj.append(row)
        return Graph(self.n - 1, tuple(adj))

    def relabel(self, perm) -> "Graph":
        """Graph with vertex v renamed to perm[v]."""
        adj = [0] * self.n
        for u in range(self.n):
            row = self.adj[u]
            new_row = 0
            while row:
                low = row & (-row)
                new_row |= 1 << perm[low.bit_length() - 1]
                row ^= low
            adj[perm[u]] = new_row
        return Graph(self.n, tuple(adj))


@total_ordering
@dataclass(frozen=True)
class SwitchingClassKey:
    """Canonical identifier of a switching class.

    key holds the packed upper triangle of the canonical representative;
    the serialized form is one byte n followed by key, rendered as lowercase
    hex.  Equal keys (with equal n) iff the source graphs are switching
    equivalent.
    """

    n: int
    key: bytes

    def to_bytes(self) -> bytes:
        return bytes([self.n]) + self.key

    @property
    def hex(self) -> str:
        return self.to_bytes().hex()

    @staticmethod
    def from_hex(s: str) -> "SwitchingClassKey":
        raw = bytes.fromhex(s)
        return SwitchingClassKey(raw[0], raw[1:])

    def __lt__(self, other: "SwitchingClassKey") -> bool:
        return self.to_bytes() < other.to_bytes()


def adjacency_matrix(G: Graph) -> IntMatrix:
    return IntMatrix.from_rows(
        [G.adj[i] >> j & 1 for j in range(G.n)] for i in range(G.n)
    )


def seidel_of_graph(G: Graph) -> IntMatrix:
    """Seidel matrix S(G) = J - I - 2A(G)."""
    return IntMatrix.from_rows(
        [0 if i == j else (-1 if G.adj[i] >> j & 1 else 1) for j in range(G.n)]
        for i in range(G.n)
    )


def switch(G: Graph, U) -> Graph:
    """Graph switching G^U: complement the edges across the cut (U, V-U)."""
    mask = 0
    for v in U:
        if not 0 <= v < G.n:
            raise ValueError("switching set must consist of vertices")
        mask |= 1 << v
    full = (1 << G.n) - 1
    adj = []
    for v in range(G.n):
        other = (full ^ mask) if mask >> v & 1 else mask
        adj.append((G.adj[v] ^ other) & ~(1 << v))
    return Graph(G.n, tuple(adj))


def cone(G: Graph) -> Graph:
    """The cone over G: one new vertex adjacent to every vertex of G."""
    if G.n + 1 > MAX_VERTICES:
        raise ValueError("cone would exceed the vertex limit")
    apex = 1 << G.n
    adj = [row | apex for row in G.adj]
    adj.append((1 << G.n) - 1)
    return Graph(G.n + 1, tuple(adj))


def canonical_key(G: Graph) -> SwitchingClassKey:
    """Canonical switching-class key of G.

    For each vertex v, switching by its neighbourhood isolates v; every graph
    in the switching orbit of G having an isolated vertex arises this way.
    The least packed form over all v -- with the isolated vertex pinned first,
    where the packing is smallest -- is therefore a full invariant of the
    switching class of G up to isomorphism.
    """
    n = G.n
    if n == 0:
        return SwitchingClassKey(0, b"")
    best = None
    seen: dict[tuple[int, ...], None] = {}
    for v in range(n):
        H = switch(G, G.neighbors(v)).delete_vertex(v)
        if H.adj in seen:
            continue
        seen[H.adj] = None
        form = canonical_form_bits(H.adj)
        if best is None or form < best:
            best = form
    assert best is not None
    m = n * (n - 1) // 2
    return SwitchingClassKey(n, pack_bits(best, m))


def _transposition_tables(n: int) -> list[tuple[int, list[int], list[int]]]:
    """Chunked lookup tables for adjacent transpositions acting on packed bits.

    Packed graphs use LSB-first pair indexing here (bit pair_index(i, j, n)).
    Returns (split, low_table, high_table) per transposition (v, v+1).
    """
    m = n * (n - 1) // 2
    split = m // 2
    tables = []
    for v in range(n - 1):
        perm = list(range(m))
        t = list(range(n))
        t[v], t[v + 1] = t[v + 1], t[v]
        for i in range(n):
            for j in range(i + 1, n):
                a, b = t[i], t[j]
                if a > b:
                    a, b = b, a
                perm[pair_index(i, j, n)] = pair_index(a, b, n)
        low_bits = [1 << perm[k] for k in range(split)]
        high_bits = [1 << perm[k + split] for k in range(m - split)]
        low = [0] * (1 << split)
        for val in range(1, 1 << split):
            lsb = val & (-val)
            low[val] = low[val ^ lsb] | low_bits[lsb.bit_length() - 1]
        high = [0] * (1 << (m - split))
        for val in range(1, 1 << (m - split)):
            lsb = val & (-val)
            high[val] = high[val ^ lsb] | high_bits[lsb.bit_length() - 1]
        tables.append((split, low, high))
    return tables


def _switch_masks(n: int) -> list[int]:
    """XOR masks on packed bits for switching by a single vertex."""
    masks = []
    for v in range(n):
        mask = 0
        for u in range(n):
            if u != v:
                i, j = min(u, v), max(u, v)
                mask |= 1 << pair_index(i, j, n)
        masks.append(mask)
    return masks


def switching_class_representatives(n: int) -> list[int]:
    """One packed graph (LSB-first pair bits) per switching class on n vertices.

    Partitions all 2^(n(n-1)/2) graphs by closure under single-vertex
    switchings and adjacent transpositions; the representative is the
    numerically least member.  Exponential in n; intended for n <= 8.
    """
    m = n * (n - 1) // 2
    if n <= 1:
        return [0]
    masks = _switch_masks(n)
    tables = _transposition_tables(n)
    total = 1 << m
    visited = bytearray(total + 7 >> 3)
    reps = []
    for g in range(total):
        if visited[g >> 3] >> (g & 7) & 1:
            continue
        reps.append(g)
        visited[g >> 3] |= 1 << (g & 7)
        stack = [g]
        while stack:
            cur = stack.pop()
            for mask in masks:
                nxt = cur ^ mask
                if not visited[nxt >> 3] >> (nxt & 7) & 1:
                    visited[nxt >> 3] |= 1 << (nxt & 7)
                    stack.append(nxt)
            for split, low, high in tables:
                nxt = low[cur & (1 << split) - 1] | high[cur >> split]
                if not visited[nxt >> 3] >> (nxt & 7) & 1:
                    visited[nxt >> 3] |= 1 << (nxt & 7)
                    stack.append(nxt)
    return reps


def graph_from_packed(n: int, packed: int) -> Graph:
    """Graph from LSB-first packed pair bits (as used by the oracle scan)."""
    adj = [0] * n
    for i, j in combinations(range(n), 2):
        if packed >> pair_index(i, j, n) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def all_switching_classes(n: int, *, allow_large: bool = False) -> list[SwitchingClassKey]:
    """Sorted distinct switching-class keys over all graphs on n vertices.

    Guarded at n <= 7 (2^21 graphs); allow_large=True admits n = 8 at a cost
    of 2^28 graphs.
    """
    limit = 8 if allow_large else 7
    if n > limit:
        raise ValueError(
            f"n = {n} exceeds the enumeration guard (n <= 7, or n = 8 with allow_large)"
        )
    keys = {canonical_key(graph_from_packed(n, g)) for g in switching_class_representatives(n)}
    return sorted(keys)
