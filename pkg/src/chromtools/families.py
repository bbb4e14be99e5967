"""Graph families with closed-form chromatic polynomials.

Each family has a parameter record, a constructor (:func:`build`) and a closed
form that the generic engine in :mod:`chromtools.chroma` can cross-check.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Optional, Union

from .errors import InvalidSpec, UnsupportedHost
from .graph import Graph, blocks, complete
from .poly import X, Poly, falling_factorial

__all__ = [
    "ThetaSpec", "SK4Spec", "K3tSpec", "CactusSpec", "CStarSpec", "WheelSpec", "VtSpec",
    "build", "theta_poly", "theta_poly_shifted", "sk4_poly", "k3t_poly", "cactus_poly",
    "cstar_poly", "wheel_poly", "closed_form", "cactus_witness", "is_cactus",
    "spec_from_json", "wheel", "vt",
]


def _check_sizes(name: str, values) -> None:
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise InvalidSpec(f"{name}: path sizes must be integers >= 1, got {v!r}")


@dataclass(frozen=True)
class ThetaSpec:
    """Two vertices joined by three internally disjoint paths with s1, s2, s3 edges."""

    s1: int
    s2: int
    s3: int

    def __post_init__(self):
        _check_sizes("theta", (self.s1, self.s2, self.s3))

    @property
    def sizes(self) -> tuple[int, int, int]:
        return (self.s1, self.s2, self.s3)


@dataclass(frozen=True)
class SK4Spec:
    """K4 with the three edges at one vertex replaced by paths of sizes s1, s2, s3."""

    s1: int
    s2: int
    s3: int

    def __post_init__(self):
        _check_sizes("sk4", (self.s1, self.s2, self.s3))

    @property
    def sizes(self) -> tuple[int, int, int]:
        return (self.s1, self.s2, self.s3)


@dataclass(frozen=True)
class K3tSpec:
    """Subdivision of K_{3,t}: edge a-v_i becomes a path of size a[i], likewise b, c."""

    t: int
    a: tuple
    b: tuple
    c: tuple

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not isinstance(self.t, int) or self.t < 1:
            raise InvalidSpec("k3t: t must be a positive integer")
        if not len(self.a) == len(self.b) == len(self.c) == self.t:
            raise InvalidSpec("k3t: a, b, c must each have exactly t entries")
        _check_sizes("k3t", self.a + self.b + self.c)

    @classmethod
    def uniform(cls, t: int, size: int = 1) -> "K3tSpec":
        return cls(t, (size,) * t, (size,) * t, (size,) * t)

    @property
    def order(self) -> int:
        return 3 + self.t + sum(s - 1 for s in self.a + self.b + self.c)


@dataclass(frozen=True)
class CactusSpec:
    """Connected cactus with cycle blocks of the given lengths plus ``bridges`` edge blocks.

    Blocks are laid out cycles first, then bridges. ``attachment`` (optional) gives,
    for every block after the first, the already-built vertex it hangs from; by
    default each block hangs from the most recently created vertex.
    """

    cycles: tuple = ()
    bridges: int = 0
    attachment: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(self.cycles))
        if self.attachment is not None:
            object.__setattr__(self, "attachment", tuple(self.attachment))
        if any(not isinstance(c, int) or c < 3 for c in self.cycles):
            raise InvalidSpec("cactus: cycle lengths must be integers >= 3")
        if not isinstance(self.bridges, int) or self.bridges < 0:
            raise InvalidSpec("cactus: bridge count must be >= 0")
        nblocks = len(self.cycles) + self.bridges
        if self.attachment is not None and len(self.attachment) != max(nblocks - 1, 0):
            raise InvalidSpec(f"cactus: attachment needs {max(nblocks - 1, 0)} entries")

    @property
    def p(self) -> int:
        return len(self.cycles)

    @property
    def t(self) -> int:
        return self.bridges

    @property
    def order(self) -> int:
        return self.t + 1 - self.p + sum(self.cycles)


@dataclass(frozen=True)
class CStarSpec:
    """K_k plus n-k further vertices hung on as a forest; ``attachment[i]`` is the parent of vertex k+i."""

    k: int
    n: int
    attachment: Optional[tuple] = None

    def __post_init__(self):
        if self.k < 1 or self.n < self.k:
            raise InvalidSpec("cstar: need 1 <= k <= n")
        if self.attachment is not None:
            att = tuple(self.attachment)
            object.__setattr__(self, "attachment", att)
            if len(att) != self.n - self.k:
                raise InvalidSpec("cstar: attachment needs n-k parent indices")
            for i, parent in enumerate(att):
                if not 0 <= parent < self.k + i:
                    raise InvalidSpec(f"cstar: parent {parent} of vertex {self.k + i} is not yet built")


@dataclass(frozen=True)
class WheelSpec:
    t: int

    def __post_init__(self):
        if self.t < 3:
            raise InvalidSpec("wheel needs t >= 3 spokes")


@dataclass(frozen=True)
class VtSpec:
    t: int

    def __post_init__(self):
        if self.t < 4:
            raise InvalidSpec("V_t needs t >= 4")


Spec = Union[ThetaSpec, SK4Spec, K3tSpec, CactusSpec, CStarSpec, WheelSpec, VtSpec]

_KINDS = {
    "theta": ThetaSpec, "sk4": SK4Spec, "k3t": K3tSpec, "cactus": CactusSpec,
    "cstar": CStarSpec, "wheel": WheelSpec, "vt": VtSpec,
}
FAMILY_KINDS = tuple(sorted(_KINDS))


def spec_from_json(kind: str, data: Union[str, dict]) -> Spec:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        cls = _KINDS[kind]
    except KeyError:
        raise InvalidSpec(f"unknown family {kind!r}; expected one of {sorted(_KINDS)}") from None
    try:
        return cls(**data)
    except TypeError as exc:
        raise InvalidSpec(f"bad fields for {kind}: {exc}") from None


def spec_to_json(spec: Spec) -> dict:
    return {k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(spec).items()}


# constructors

class _Builder:
    def __init__(self, n: int = 0):
        self.n = n
        self.edges: set = set()

    def new_vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def path(self, u: int, v: int, size: int) -> None:
        prev = u
        for _ in range(size - 1):
            w = self.new_vertex()
            self.edges.add((prev, w))
            prev = w
        self.edges.add((prev, v))

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


def wheel(t: int) -> Graph:
    """Hub 0 joined to the rim cycle 1..t."""
    rim = [(i, i % t + 1) for i in range(1, t + 1)]
    return Graph.from_edges(t + 1, rim + [(0, i) for i in range(1, t + 1)])


def vt_labels(t: int) -> dict[str, int]:
    """Vertex numbering of V_t: u1..ut are 0..t-1, v2..v_{t-1} are t..2t-3."""
    lab = {f"u{i}": i - 1 for i in range(1, t + 1)}
    lab.update({f"v{i}": t + i - 2 for i in range(2, t)})
    return lab


def vt(t: int) -> Graph:
    lab = vt_labels(t)
    u = lambda i: lab[f"u{i}"]  # noqa: E731
    v = lambda i: lab[f"v{i}"]  # noqa: E731
    edges = [(u(i), u(i + 1)) for i in range(1, t)]
    edges += [(v(i), v(i + 1)) for i in range(2, t - 1)]
    edges += [(u(i), v(i)) for i in range(2, t)]
    edges += [(u(1), v(2)), (u(t), v(t - 1)), (u(1), u(t))]
    return Graph.from_edges(2 * t - 2, edges)


def build(spec: Spec) -> Graph:
    if isinstance(spec, ThetaSpec):
        b = _Builder(2)
        for s in spec.sizes:
            b.path(0, 1, s)
        return b.graph()
    if isinstance(spec, SK4Spec):
        # hub 3 reaches 0, 1, 2 by subdivided paths; the triangle 0-1-2 stays intact
        b = _Builder(4)
        b.edges |= {(0, 1), (1, 2), (0, 2)}
        for end, s in zip((0, 1, 2), spec.sizes):
            b.path(3, end, s)
        return b.graph()
    if isinstance(spec, K3tSpec):
        # a, b, c are 0, 1, 2; v_i is 3 + i
        b = _Builder(3 + spec.t)
        for i in range(spec.t):
            for hub, sizes in enumerate((spec.a, spec.b, spec.c)):
                b.path(hub, 3 + i, sizes[i])
        return b.graph()
    if isinstance(spec, CactusSpec):
        return _build_cactus(spec)
    if isinstance(spec, CStarSpec):
        g = complete(spec.k)
        parents = spec.attachment
        if parents is None:
            parents = tuple(range(spec.k - 1, spec.n - 1))
        edges = set(g.edges) | {(p, spec.k + i) for i, p in enumerate(parents)}
        return Graph.from_edges(spec.n, edges)
    if isinstance(spec, WheelSpec):
        return wheel(spec.t)
    if isinstance(spec, VtSpec):
        return vt(spec.t)
    raise InvalidSpec(f"no constructor for {type(spec).__name__}")


def _build_cactus(spec: CactusSpec) -> Graph:
    kinds = [("cycle", c) for c in spec.cycles] + [("bridge", 2)] * spec.bridges
    b = _Builder(1)
    anchor = 0
    for idx, (kind, size) in enumerate(kinds):
        if idx > 0:
            anchor = spec.attachment[idx - 1] if spec.attachment is not None else b.n - 1
            if not 0 <= anchor < b.n:
                raise InvalidSpec(f"cactus: attachment vertex {anchor} does not exist yet")
        if kind == "bridge":
            w = b.new_vertex()
            b.edges.add((anchor, w))
        else:
            ring = [anchor] + [b.new_vertex() for _ in range(size - 1)]
            for i in range(size):
                b.edges.add((ring[i], ring[(i + 1) % size]))
    return b.graph()


# closed forms

@lru_cache(maxsize=4096)
def theta_poly(spec: ThetaSpec) -> Poly:
    """Two-fraction closed form: cycles of length s_i+1 over (x(x-1))^2, plus cycles of length s_i over x^2."""
    first = Poly.one()
    second = Poly.one()
    for s in spec.sizes:
        first = first * ((X - 1) ** (s + 1) + (X - 1) * (-1) ** (s + 1))
        second = second * ((X - 1) ** s + (X - 1) * (-1) ** s)
    return first.exact_div((X * (X - 1)) ** 2) + second.exact_div(X ** 2)


@lru_cache(maxsize=4096)
def theta_poly_shifted(spec: ThetaSpec) -> Poly:
    """``pi(theta, x+1)`` as a polynomial in ``x``, from the simplified shifted form."""
    s1, s2, s3 = spec.sizes
    total = s1 + s2 + s3
    inner = (X ** (total - 1) + X ** s3 * (-1) ** (s1 + s2) + X ** s2 * (-1) ** (s1 + s3)
             + X ** s1 * (-1) ** (s2 + s3) + (X - 1) * (-1) ** total)
    return (X * inner).exact_div(X + 1)


@lru_cache(maxsize=4096)
def sk4_poly(spec: SK4Spec) -> Poly:
    s1, s2, s3 = spec.sizes
    return theta_poly(ThetaSpec(s1 + 1, s2, s3 + 1)) - theta_poly(ThetaSpec(s1, s2 + 1, s3))


@lru_cache(maxsize=4096)
def k3t_poly(spec: K3tSpec) -> Poly:
    """Five-term clique-sum expansion for a subdivided K_{3,t}."""
    t = spec.t
    trip = list(zip(spec.a, spec.b, spec.c))

    def prod(polys) -> Poly:
        out = Poly.one()
        for p in polys:
            out = out * p
        return out

    edge_div = (X * (X - 1)) ** (t - 1)
    terms = [
        prod(theta_poly(ThetaSpec(a + 1, b, c)) for a, b, c in trip).exact_div(edge_div),
        prod(theta_poly(ThetaSpec(a, b + 1, c)) for a, b, c in trip).exact_div(edge_div),
        prod(theta_poly(ThetaSpec(a, b, c + 1)) for a, b, c in trip).exact_div(edge_div),
        prod(theta_poly(ThetaSpec(a, b, c)) for a, b, c in trip).exact_div(X ** (t - 1)),
        prod(sk4_poly(SK4Spec(a, b, c)) for a, b, c in trip).exact_div(falling_factorial(3) ** (t - 1)),
    ]
    return sum(terms, Poly.zero())


@lru_cache(maxsize=4096)
def cactus_poly(spec: CactusSpec) -> Poly:
    """``(x-1)^(t+p) / x^(p-1) * prod((x-1)^(n_i-1) + (-1)^n_i)``."""
    p, t = spec.p, spec.t
    out = (X - 1) ** (t + p)
    for n_i in spec.cycles:
        out = out * ((X - 1) ** (n_i - 1) + (-1) ** n_i)
    if p == 0:
        return out * X
    return out.exact_div(X ** (p - 1))


def cstar_poly(spec: CStarSpec) -> Poly:
    return falling_factorial(spec.k) * (X - 1) ** (spec.n - spec.k)


def wheel_poly(spec: WheelSpec) -> Poly:
    """Hub times the cycle polynomial evaluated at x-1."""
    t = spec.t
    return X * ((X - 2) ** t + (X - 2) * (-1) ** t)


def closed_form(spec: Spec) -> Optional[Poly]:
    """Closed-form polynomial for the family, or None where none is known (V_t)."""
    if isinstance(spec, ThetaSpec):
        return theta_poly(spec)
    if isinstance(spec, SK4Spec):
        return sk4_poly(spec)
    if isinstance(spec, K3tSpec):
        return k3t_poly(spec)
    if isinstance(spec, CactusSpec):
        return cactus_poly(spec)
    if isinstance(spec, CStarSpec):
        return cstar_poly(spec)
    if isinstance(spec, WheelSpec):
        return wheel_poly(spec)
    return None


# cactus subgraphs of large wheels and ladders

def is_cactus(g: Graph) -> bool:
    if g.n == 0 or not g.is_connected():
        return False
    for blk in blocks(g).block_graphs(g):
        if not (blk.n == 2 or blk.m == blk.n and all(d == 2 for d in blk.degrees())):
            return False
    return True


@dataclass(frozen=True)
class CactusWitness:
    """A cactus together with an injective map of its vertices into the host graph."""

    graph: Graph
    embedding: tuple
    cycles: tuple = field(default=())

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)


def _witness_from_host_edges(host_edges: list[tuple[int, int]], cycles: list[list[int]]) -> CactusWitness:
    used = sorted({v for e in host_edges for v in e})
    index = {v: i for i, v in enumerate(used)}
    g = Graph.from_edges(len(used), [(index[a], index[b]) for a, b in host_edges])
    return CactusWitness(g, tuple(used), tuple(tuple(index[v] for v in c) for c in cycles))


def cactus_witness(host: str, t: int) -> tuple[Graph, tuple]:
    """Cactus with t/2 cycles inside W_t (``"wheel"``) or V_t (``"vt"``), plus its embedding.

    W_t: hub-sharing triangles on consecutive rim pairs. V_t: end triangles
    {u1,u2,v2} and {u_{t-1},v_{t-1},u_t}, quadrilaterals u_i u_{i+1} v_{i+1} v_i for
    odd i = 3..t-3, chained by the rim edges u_{i+1} u_{i+2}.
    """
    w = witness_details(host, t)
    return w.graph, w.embedding


def witness_details(host: str, t: int) -> CactusWitness:
    if t < 12 or t % 2:
        raise UnsupportedHost(f"cactus witness needs an even t >= 12, got {t}")
    if host in ("wheel", "W"):
        edges, cycles = [], []
        for i in range(1, t // 2 + 1):
            a, b = 2 * i - 1, 2 * i
            edges += [(0, a), (a, b), (0, b)]
            cycles.append([0, a, b])
        return _witness_from_host_edges(edges, cycles)
    if host in ("vt", "V"):
        lab = vt_labels(t)
        u = lambda i: lab[f"u{i}"]  # noqa: E731
        v = lambda i: lab[f"v{i}"]  # noqa: E731
        cycles = [[u(1), u(2), v(2)]]
        for i in range(3, t - 2, 2):
            cycles.append([u(i), u(i + 1), v(i + 1), v(i)])
        cycles.append([u(t - 1), v(t - 1), u(t)])
        edges = []
        for c in cycles:
            edges += [(c[j], c[(j + 1) % len(c)]) for j in range(len(c))]
        # bridges between consecutive cycles along the u-rim
        edges += [(u(i), u(i + 1)) for i in range(2, t - 1, 2)]
        return _witness_from_host_edges(edges, cycles)
    raise UnsupportedHost(f"unknown host {host!r}; expected 'wheel' or 'vt'")


def host_graph(host: str, t: int) -> Graph:
    if host in ("wheel", "W"):
        return wheel(t)
    if host in ("vt", "V"):
        return vt(t)
    raise UnsupportedHost(f"unknown host {host!r}")
