"""Chromatic polynomials: the memoized structural engine and a brute-force counter."""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import InexactDivision
from .graph import Graph, blocks, canonical_form
from .poly import X, Poly, falling_factorial

_CACHE: dict[bytes, Poly] = {}


def clear_cache() -> None:
    _CACHE.clear()


def cache_size() -> int:
    return len(_CACHE)


def cycle_polynomial(n: int) -> Poly:
    """``(x-1)^n + (-1)^n (x-1)``."""
    return (X - 1) ** n + (X - 1) * (-1) ** n


def tree_polynomial(n: int) -> Poly:
    if n == 0:
        return Poly.one()
    return X * (X - 1) ** (n - 1)


def _drop_x_power(p: Poly, k: int) -> Poly:
    if k == 0:
        return p
    if any(c != 0 for c in p.coeffs[:k]):
        raise InexactDivision(f"{p} is not divisible by x^{k}")
    return Poly(p.coeffs[k:])


def chromatic_polynomial(g: Graph, cache: Optional[dict] = None) -> Poly:
    """Exact ``pi(G, x)``.

    Components multiply; a connected graph splits into blocks (product over blocks
    divided by ``x^(blocks-1)``); trees, cycles and complete blocks are read off
    directly; any other block recurses by deletion-contraction when sparse or
    addition-contraction when dense, memoized on the canonical form.
    """
    if cache is None:
        cache = _CACHE
    if g.n == 0:
        return Poly.one()
    comps = g.components()
    if len(comps) == 1:
        return _connected(g, cache)
    result = Poly.one()
    for comp in comps:
        result = result * _connected(g.induced(comp), cache)
    return result


def _connected(g: Graph, cache: dict) -> Poly:
    n, m = g.n, g.m
    if n == 1:
        return X
    if m == n - 1:
        return tree_polynomial(n)
    parts = blocks(g).blocks
    if len(parts) == 1:
        return _block(g, cache)
    result = Poly.one()
    for b in parts:
        result = result * _block(g.induced(b), cache)
    return _drop_x_power(result, len(parts) - 1)


def _block(b: Graph, cache: dict) -> Poly:
    n, m = b.n, b.m
    if n == 2:
        return X * (X - 1)
    if m == n:
        return cycle_polynomial(n)
    full = n * (n - 1) // 2
    if m == full:
        return falling_factorial(n)
    key = canonical_form(b)
    hit = cache.get(key)
    if hit is not None:
        return hit
    deg = b.degrees()
    if 4 * m <= full * 2:
        # pi(G) = pi(G - e) - pi(G / e), on an edge at a minimum-degree vertex
        u = min(range(n), key=lambda v: (deg[v], v))
        v = min(b.neighbors(u), key=lambda w: (deg[w], w))
        result = chromatic_polynomial(b.delete_edge(u, v), cache) - chromatic_polynomial(
            b.contract_edge(u, v), cache)
    else:
        # pi(G) = pi(G + e) + pi(G / e), on a non-edge between high-degree vertices
        u = max((v for v in range(n) if deg[v] < n - 1), key=lambda v: (deg[v], -v))
        adj_u = b.adj[u]
        v = max((w for w in range(n) if w != u and not adj_u >> w & 1), key=lambda w: (deg[w], -w))
        result = chromatic_polynomial(b.add_edge(u, v), cache) + chromatic_polynomial(
            b.identify(u, v), cache)
    cache[key] = result
    return result


def count_colorings(g: Graph, x: int) -> int:
    """Number of proper colorings with colors ``0..x-1``, by exhaustive backtracking.

    Independent of :func:`chromatic_polynomial`; used as its oracle.
    """
    n = g.n
    if n == 0:
        return 1
    if x <= 0:
        return 0
    # breadth-first order so neighbors are colored early
    order: list[int] = []
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    nbrs = [g.neighbors(v) for v in range(n)]
    color = [-1] * n
    last = n - 1

    def rec(i: int) -> int:
        v = order[i]
        forbidden = {color[w] for w in nbrs[v] if color[w] >= 0}
        if i == last:
            return x - len(forbidden)
        total = 0
        for c in range(x):
            if c in forbidden:
                continue
            color[v] = c
            total += rec(i + 1)
        color[v] = -1
        return total

    return rec(0)


def clique_sum_polynomial(parts: Sequence[Poly], r: int, count: Optional[int] = None) -> Poly:
    """``prod(parts) / ((x)_r)^(count-1)`` for an r-clique sum; the division must be exact."""
    if count is None:
        count = len(parts)
    if count != len(parts):
        raise ValueError(f"count={count} but {len(parts)} parts were given")
    if count == 0:
        raise ValueError("a clique sum needs at least one part")
    product = Poly.one()
    for p in parts:
        product = product * p
    return product.exact_div(falling_factorial(r) ** (count - 1))
