"""Simple undirected graphs on vertices ``0..n-1`` and the structural queries we need.

Adjacency is kept as one integer bitmask per vertex; every query here is exact and
aimed at desk-scale orders (n up to ~15).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import Disconnected, InvalidEdge, MalformedGraph6

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Labeled simple graph. Parallel edges collapse on construction; loops are rejected."""

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InvalidEdge(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidEdge(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            norm.add(_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        n = len(adj)
        return cls(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        a = [0] * self.n
        for u, v in self.edges:
            a[u] |= 1 << v
            a[v] |= 1 << u
        return tuple(a)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(a).count("1") for a in self.adj]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    # edits

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or self.has_edge(u, v):
            raise InvalidEdge(f"cannot add edge {(u, v)}")
        return Graph(self.n, self.edges | {_edge(u, v)})

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise InvalidEdge(f"edge {(u, v)} not present")
        return Graph(self.n, self.edges - {_edge(u, v)})

    def contract_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise InvalidEdge(f"edge {(u, v)} not present")
        return self.identify(u, v)

    def identify(self, u: int, v: int) -> "Graph":
        """Merge ``v`` into ``u`` (edge or not), relabel to ``0..n-2``, drop the loop."""
        if u == v:
            raise InvalidEdge("cannot identify a vertex with itself")
        keep, gone = min(u, v), max(u, v)

        def lab(w: int) -> int:
            if w == gone:
                w = keep
            return w - 1 if w > gone else w

        new = set()
        for a, b in self.edges:
            a, b = lab(a), lab(b)
            if a != b:
                new.add(_edge(a, b))
        return Graph(self.n - 1, frozenset(new))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled in increasing vertex order."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), frozenset(
            (index[a], index[b]) for a, b in self.edges if a in index and b in index))

    def remove_vertices(self, vertices: Iterable[int]) -> "Graph":
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, frozenset(_edge(perm[a], perm[b]) for a, b in self.edges))

    def is_subgraph_of(self, other: "Graph", embedding: Sequence[int] | dict) -> bool:
        """True when ``embedding`` maps self injectively onto a subgraph of ``other``."""
        img = [embedding[v] for v in range(self.n)]
        if len(set(img)) != self.n:
            return False
        return all(other.has_edge(img[a], img[b]) for a, b in self.edges)

    # connectivity

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = _reach(self.adj, 1 << s, (1 << self.n) - 1)
            seen |= comp
            comps.append(_bits(comp))
        return comps

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return _reach(self.adj, 1, (1 << self.n) - 1) == (1 << self.n) - 1

    def to_json(self) -> dict:
        return {"n": self.n, "adjacency": [self.neighbors(v) for v in range(self.n)]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        n = data["n"]
        return cls(n, frozenset(_edge(u, v) for u, nb in enumerate(data["adjacency"]) for v in nb))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _reach(adj: Sequence[int], start: int, allowed: int) -> int:
    seen = start & allowed
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


# named graphs used across the package

def empty(n: int) -> Graph:
    return Graph(n)


def complete(k: int) -> Graph:
    return Graph(k, frozenset(combinations(range(k), 2)))


def path(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset(_edge(i, (i + 1) % n) for i in range(n)))


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, frozenset((i, p + j) for i in range(p) for j in range(q)))


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


# blocks

@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset, ...]
    cut_vertices: frozenset

    def block_graphs(self, g: Graph) -> list[Graph]:
        return [g.induced(b) for b in self.blocks]


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components (bridges count as blocks) of a connected graph.

    Iterative Hopcroft-Tarjan with an edge stack. A single vertex has no blocks.
    """
    if not g.is_connected():
        raise Disconnected("block decomposition needs a connected graph")
    n = g.n
    if n <= 1:
        return BlockDecomposition((), frozenset())
    nbrs = [g.neighbors(v) for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    found: list[frozenset] = []
    cuts: set[int] = set()
    edge_stack: list[Edge] = []
    counter = 0
    root = 0
    disc[root] = low[root] = counter
    counter += 1
    root_children = 0
    stack = [(root, -1, iter(nbrs[root]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                edge_stack.append((v, w))
                disc[w] = low[w] = counter
                counter += 1
                if v == root:
                    root_children += 1
                stack.append((w, v, iter(nbrs[w])))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            if parent != root:
                cuts.add(parent)
            comp = set()
            while True:
                a, b = edge_stack.pop()
                comp.add(a)
                comp.add(b)
                if (a, b) == (parent, v):
                    break
            found.append(frozenset(comp))
    if root_children > 1:
        cuts.add(root)
    return BlockDecomposition(tuple(found), frozenset(cuts))


def connectivity_class(g: Graph, k: int) -> bool:
    """True when ``g`` is connected and no set of fewer than ``k`` vertices disconnects it.

    Uses the literal definition (removal of an s-set with s < k never leaves two or
    more components); checked exhaustively.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if g.n == 0 or not g.is_connected():
        return False
    full = (1 << g.n) - 1
    for s in range(1, k):
        for removed in combinations(range(g.n), s):
            allowed = full
            for v in removed:
                allowed &= ~(1 << v)
            if not allowed:
                continue
            start = allowed & -allowed
            if _reach(g.adj, start, allowed) != allowed:
                return False
    return True


# cliques and colorings

def clique_number(g: Graph) -> int:
    """Maximum clique size by branch and bound over bitmasks."""
    if g.n == 0:
        return 0
    adj = g.adj
    best = 1

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        while cand:
            if size + _popcount(cand) <= best:
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            expand(size + 1, cand & adj[v])

    expand(0, (1 << g.n) - 1)
    return best


def greedy_coloring(g: Graph) -> list[int]:
    """DSATUR coloring; colors are 0-based."""
    n = g.n
    color = [-1] * n
    adj = g.adj
    deg = g.degrees()
    for _ in range(n):
        best, best_key = -1, None
        for v in range(n):
            if color[v] != -1:
                continue
            sat = len({color[w] for w in _bits(adj[v]) if color[w] != -1})
            key = (sat, deg[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        used = {color[w] for w in _bits(adj[best])}
        c = 0
        while c in used:
            c += 1
        color[best] = c
    return color


def is_colorable(g: Graph, k: int) -> bool:
    """Whether a proper ``k``-coloring exists (backtracking, symmetric colors pruned)."""
    n = g.n
    if n == 0:
        return True
    if k <= 0:
        return False
    adj = g.adj
    order = sorted(range(n), key=lambda v: -g.degree(v))
    color = [-1] * n

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        forbidden = {color[w] for w in _bits(adj[v]) if color[w] != -1}
        # a fresh color is interchangeable with any other unused one
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            color[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
        color[v] = -1
        return False

    return place(0, 0)


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    lower = clique_number(g)
    upper = max(greedy_coloring(g)) + 1
    for k in range(lower, upper):
        if is_colorable(g, k):
            return k
    return upper


def is_planar(g: Graph) -> bool:
    """Exact planarity verdict (Euler edge bound, then the left-right planarity test)."""
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    if g.n <= 4:
        return True
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return nx.check_planarity(h)[0]


# canonical labeling

def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; sub-cells ordered by neighbor-count signature only."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple(_popcount(adj[v] & m) for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new.append(groups[sig])
        if len(new) == len(cells):
            return new
        cells = new


def _certificate(adj: Sequence[int], order: Sequence[int]) -> int:
    n = len(order)
    code = 0
    for j in range(1, n):
        aj = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (aj >> order[i] & 1)
    return code


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order (position -> vertex) maximizing the adjacency bit string.

    Individualization-refinement; twins inside the target cell are tried once,
    since swapping two twins is an automorphism fixing the current partition.
    """
    n = g.n
    if n == 0:
        return []
    adj = g.adj
    best_code = -1
    best_order: list[int] = []

    def search(cells: list[list[int]]) -> None:
        nonlocal best_code, best_order
        cells = _refine(adj, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = _certificate(adj, order)
            if code > best_code:
                best_code, best_order = code, order
            return
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        target = cells[idx]
        tried: list[int] = []
        for v in target:
            if any((adj[v] & ~(1 << w)) == (adj[w] & ~(1 << v)) for w in tried):
                continue
            tried.append(v)
            rest = [w for w in target if w != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:])

    search([list(range(n))])
    return best_order


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string: graph6 of the canonical relabeling."""
    return to_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


# graph6

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Standard graph6 encoding (upper triangle, column by column, 6 bits per byte)."""
    bits = []
    adj = g.adj
    for j in range(1, g.n):
        for i in range(j):
            bits.append(adj[i] >> j & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_n(g.n) + "".join(body)


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise MalformedGraph6(f"graph6 contains a character outside '?'..'~': {text!r}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] != 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        raise MalformedGraph6(f"truncated graph6 size field: {text!r}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise MalformedGraph6(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, frozenset(edges))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode a line-delimited graph6 stream, skipping blank lines."""
    for line in lines:
        line = line.strip()
        if line:
            yield from_graph6(line)
