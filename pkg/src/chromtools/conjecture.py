"""Exhaustive checks of the 4-chromatic coloring bound and its relatives at small orders."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

from .chroma import chromatic_polynomial
from .errors import Disconnected, InvalidOrder, OrderTooLarge, WrongChromaticNumber
from .families import (CStarSpec, K3tSpec, SK4Spec, build, k3t_poly, sk4_poly)
from .graph import (Graph, canonical_form, canonical_graph, chromatic_number, clique_number, connectivity_class,
                    cycle, from_graph6, is_planar, to_graph6)
from .poly import (X, PositiveForAllXGeX0, Poly, RootInterval, cauchy_bound, count_real_roots,
                   evaluate, falling_factorial, format_rational, largest_real_root,
                   positive_beyond, sign_at)

MAX_ORDER = 9

Predicate = Callable[[Graph], bool]


def conjectured_bound(n: int, k: int = 4) -> Poly:
    """``(x)_k (x-1)^(n-k)``."""
    if k < 2 or n < k:
        raise InvalidOrder(f"need n >= k >= 2, got n={n}, k={k}")
    return falling_factorial(k) * (X - 1) ** (n - k)


def three_chromatic_bound(n: int) -> Poly:
    """``(x-1)^n - (x-1)`` for odd n, ``(x-1)^n - (x-1)^2`` for even n."""
    return (X - 1) ** n - (X - 1) ** (1 if n % 2 else 2)


def in_cstar(g: Graph, k: int) -> bool:
    """Membership in the conjectured extremal family: connected, chi = omega = k, size C(k,2)+n-k."""
    return (g.is_connected() and g.m == comb(k, 2) + g.n - k and clique_number(g) == k
            and chromatic_number(g) == k)


def cstar_family(k: int, n: int) -> list[Graph]:
    """All members of the extremal family up to isomorphism, built from K_k plus attached trees."""
    seen: dict[bytes, Graph] = {}
    for parents in product(*(range(k + i) for i in range(n - k))):
        g = build(CStarSpec(k, n, parents))
        seen.setdefault(canonical_form(g), g)
    return [seen[key] for key in sorted(seen)]


# enumeration

@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[bytes, ...]:
    """Canonical forms of every graph of order n, by adding a vertex to each graph of order n-1."""
    if n <= 1:
        return (canonical_form(Graph(n)),)
    seen: set[bytes] = set()
    new = n - 1
    for key in _all_graphs(n - 1):
        h = from_graph6(key)
        for mask in range(1 << new):
            extra = {(v, new) for v in range(new) if mask >> v & 1}
            seen.add(canonical_form(Graph(n, h.edges | extra)))
    return tuple(sorted(seen))


def enumerate_graphs(n: int, max_order: int = MAX_ORDER) -> Iterator[Graph]:
    if n > max_order:
        raise OrderTooLarge(f"order {n} exceeds the enumeration cap {max_order}")
    if n < 0:
        raise InvalidOrder("order must be nonnegative")
    for key in _all_graphs(n):
        yield from_graph6(key)


def enumerate_connected(n: int, predicate: Optional[Predicate] = None,
                        max_order: int = MAX_ORDER) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected order-n graphs passing ``predicate``."""
    for g in enumerate_graphs(n, max_order):
        if g.is_connected() and (predicate is None or predicate(g)):
            yield g


def chromatic_is(k: int) -> Predicate:
    return lambda g: chromatic_number(g) == k


# verdicts

@dataclass(frozen=True)
class StrictlyBelow:
    """Gap polynomial positive on [k, oo); ``root`` brackets its largest real root (if any).

    ``certified_real`` is False when positivity holds at every integer x >= k but the
    gap dips to <= 0 between integers.
    """

    root: Optional[RootInterval]
    certified_real: bool = True


@dataclass(frozen=True)
class EqualityEverywhere:
    pass


@dataclass(frozen=True)
class ViolatedAt:
    x: int
    deficit: Fraction


GapVerdict = Union[StrictlyBelow, EqualityEverywhere, ViolatedAt]


def verdict_to_json(v: GapVerdict) -> dict:
    if isinstance(v, EqualityEverywhere):
        return {"verdict": "equality"}
    if isinstance(v, ViolatedAt):
        return {"verdict": "violated", "x": v.x, "deficit": format_rational(v.deficit)}
    return {"verdict": "strictly_below", "largest_root": None if v.root is None else v.root.to_json(),
            "certified_real": v.certified_real}


def gap_from_polynomial(pi: Poly, n: int, k: int = 4) -> GapVerdict:
    gap = conjectured_bound(n, k) - pi
    if gap.is_zero():
        return EqualityEverywhere()
    root = largest_real_root(gap)
    if isinstance(positive_beyond(gap, k), PositiveForAllXGeX0):
        return StrictlyBelow(root)
    limit = max(int(cauchy_bound(gap)) + 2, k + 1)
    for x in range(k, limit + 1):
        value = evaluate(gap, x)
        if value <= 0:
            return ViolatedAt(x, Fraction(-value))
    return StrictlyBelow(root, certified_real=False)


def gap_verdict(g: Graph, k: int = 4, require_chromatic: bool = True) -> GapVerdict:
    """Compare pi(g) with the conjectured bound on all x >= k, exactly."""
    if not g.is_connected():
        raise Disconnected("gap verdict needs a connected graph")
    if require_chromatic:
        chi = chromatic_number(g)
        if chi != k:
            raise WrongChromaticNumber(f"graph is {chi}-chromatic, expected {k}")
    return gap_from_polynomial(chromatic_polynomial(g), g.n, k)


# conjecture verification

@dataclass
class ConjectureReport:
    order: int
    checked: int
    violations: list = field(default_factory=list)
    extremal: list = field(default_factory=list)
    expected_extremal: list = field(default_factory=list)
    integer_check_failures: list = field(default_factory=list)
    runtime: float = 0.0
    kind: str = "conjecture"

    @property
    def expected_extremal_count(self) -> int:
        return len(self.expected_extremal)

    @property
    def extremal_matches(self) -> bool:
        return sorted(self.extremal) == sorted(self.expected_extremal)

    @property
    def passed(self) -> bool:
        return not self.violations and self.extremal_matches and not self.integer_check_failures

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "schema": 1,
            "kind": self.kind,
            "order": self.order,
            "checked": self.checked,
            "violations": self.violations,
            "extremal": sorted(self.extremal),
            "expected_extremal_count": self.expected_extremal_count,
            "extremal_matches": self.extremal_matches,
            "integer_check_failures": self.integer_check_failures,
            "passed": self.passed,
        }
        if timing:
            out["runtime"] = round(self.runtime, 3)
        return out


def _conjecture_row(g6: str) -> tuple[str, dict, bool, bool]:
    g = from_graph6(g6)
    pi = chromatic_polynomial(g)
    n = g.n
    verdict = gap_from_polynomial(pi, n, 4)
    bound = conjectured_bound(n, 4)
    integer_ok = all(evaluate(pi, x) <= evaluate(bound, x) for x in range(4, 13))
    member = g.m == n + 2 and clique_number(g) == 4
    return g6, verdict_to_json(verdict), integer_ok, member


def _map(fn, items: Sequence, workers: int) -> list:
    if workers <= 1 or len(items) < 2:
        return [fn(it) for it in items]
    chunk = max(1, len(items) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def verify_conjecture(n: int, workers: int = 1, max_order: int = MAX_ORDER) -> ConjectureReport:
    """Gap verdict for every connected 4-chromatic graph of order n.

    The equality set must coincide with the graphs having clique number 4 and n+2 edges.
    """
    if n < 4:
        raise InvalidOrder("the k = 4 conjecture needs n >= 4")
    if n > max_order:
        raise OrderTooLarge(f"order {n} exceeds the cap {max_order}")
    start = time.perf_counter()
    graphs = [to_graph6(g) for g in enumerate_connected(n, chromatic_is(4), max_order)]
    report = ConjectureReport(order=n, checked=len(graphs))
    for g6, verdict, integer_ok, member in _map(_conjecture_row, graphs, workers):
        if verdict["verdict"] == "violated":
            report.violations.append({"graph6": g6, **verdict})
        elif verdict["verdict"] == "equality":
            report.extremal.append(g6)
        if not integer_ok:
            report.integer_check_failures.append(g6)
        if member:
            report.expected_extremal.append(g6)
    report.runtime = time.perf_counter() - start
    return report


def verify_tomescu3(n: int, xs: Iterable[int] = range(3, 9), max_order: int = 8) -> ConjectureReport:
    """Connected 3-chromatic graphs: pi(G, x) <= three_chromatic_bound(n)(x), equality only at the unique extremal graph.

    The extremal graph is C_n (n odd) or C_{n-1} with a pendant vertex (n even).
    """
    if n < 3:
        raise InvalidOrder("need n >= 3")
    if n > max_order:
        raise OrderTooLarge(f"order {n} exceeds the cap {max_order}")
    start = time.perf_counter()
    xs = list(xs)
    bound = three_chromatic_bound(n)
    expected = three_chromatic_extremal(n)
    report = ConjectureReport(order=n, checked=0, kind="tomescu3",
                              expected_extremal=[to_graph6(expected)])
    for g in enumerate_connected(n, chromatic_is(3), max_order):
        report.checked += 1
        pi = chromatic_polynomial(g)
        g6 = to_graph6(g)
        ties = []
        for x in xs:
            lhs, rhs = evaluate(pi, x), evaluate(bound, x)
            if lhs > rhs:
                report.violations.append({"graph6": g6, "x": x, "excess": format_rational(lhs - rhs)})
            elif lhs == rhs:
                ties.append(x)
        if ties:
            if ties == xs:
                report.extremal.append(g6)
            else:
                # equality at some x but not all: uniqueness fails there
                report.integer_check_failures.append(g6)
    report.runtime = time.perf_counter() - start
    return report


def three_chromatic_extremal(n: int) -> Graph:
    """C_n for odd n; for even n the odd cycle C_{n-1} with one pendant vertex (canonically labeled)."""
    if n % 2:
        return canonical_graph(cycle(n))
    base = cycle(n - 1)
    return canonical_graph(Graph(n, base.edges | {(0, n - 1)}))


def verify_clique_bound(n: int, k: int, xs: Optional[Iterable[int]] = None,
                        max_order: int = 8) -> ConjectureReport:
    """Connected graphs with chi = omega = k: pi(G, x) <= (x)_k (x-1)^(n-k), equality exactly on C*_k(n)."""
    if k < 2 or n < k:
        raise InvalidOrder(f"need n >= k >= 2, got n={n}, k={k}")
    if n > max_order:
        raise OrderTooLarge(f"order {n} exceeds the cap {max_order}")
    start = time.perf_counter()
    xs = list(range(k, k + 5) if xs is None else xs)
    bound = conjectured_bound(n, k)
    report = ConjectureReport(order=n, checked=0, kind=f"cliquebound-k{k}")

    def wanted(g: Graph) -> bool:
        return clique_number(g) == k and chromatic_number(g) == k

    for g in enumerate_connected(n, wanted, max_order):
        report.checked += 1
        g6 = to_graph6(g)
        pi = chromatic_polynomial(g)
        member = g.m == comb(k, 2) + n - k
        if member:
            report.expected_extremal.append(g6)
        ties = []
        for x in xs:
            lhs, rhs = evaluate(pi, x), evaluate(bound, x)
            if lhs > rhs:
                report.violations.append({"graph6": g6, "x": x, "excess": format_rational(lhs - rhs)})
            elif lhs == rhs:
                ties.append(x)
        if ties == xs:
            report.extremal.append(g6)
        elif ties:
            report.integer_check_failures.append(g6)
    report.runtime = time.perf_counter() - start
    return report


# concluding-remarks computations

SK4_REMARK_SPEC = SK4Spec(3, 4, 4)
SK4_REMARK_TOP = (1, -14, 90, -352, 935)
BOUND12_TOP = (1, -14, 87, -318, 762)


def _top_coeffs(p: Poly, count: int) -> tuple:
    return tuple(p[p.degree - i] for i in range(count))


def sk4_remark_report(samples: Sequence[int] = (3, 4, 5, 10)) -> dict:
    """pi(SK4^{3,4,4}) against (x)_4 (x-1)^8: coefficient tables and where the bound fails."""
    spec = SK4_REMARK_SPEC
    g = build(spec)
    pi = sk4_poly(spec)
    bound = conjectured_bound(g.n, 4)
    diff = pi - bound
    root = largest_real_root(diff)
    above_two = count_real_roots(diff, 2, None)
    sample_values = {x: evaluate(diff, x) for x in samples}
    checks = {
        "order_is_12": g.n == 12,
        "engine_matches_closed_form": chromatic_polynomial(g) == pi,
        "chromatic_number": chromatic_number(g),
        "pi_top_coefficients_match": _top_coeffs(pi, 5) == SK4_REMARK_TOP,
        "bound_top_coefficients_match": _top_coeffs(bound, 5) == BOUND12_TOP,
        "difference_positive_at_samples": all(v > 0 for v in sample_values.values()),
        "difference_vanishes_at_2": sign_at(diff, 2) == 0,
        "no_root_above_2": above_two == 0,
        "leading_coefficient_positive": diff.lc > 0,
        "largest_root_at_most_2": root is not None and root.lo <= 2 <= root.hi,
    }
    passed = all(v for key, v in checks.items() if key != "chromatic_number")
    return {
        "schema": 1,
        "kind": "sk4-remark",
        "graph6": to_graph6(g),
        "order": g.n,
        "pi": {d: str(pi[d]) for d in range(pi.degree, -1, -1)},
        "bound": {d: str(bound[d]) for d in range(bound.degree, -1, -1)},
        "difference": str(diff),
        "difference_at": {str(x): str(v) for x, v in sample_values.items()},
        "largest_root_of_difference": None if root is None else root.to_json(),
        "checks": checks,
        "passed": passed,
    }


def k33_threshold_explore(specs: Iterable[K3tSpec], x_grid: Sequence[int] = tuple(range(4, 11))) -> dict:
    """Exploratory: where does (x)_4 (x-1)^(n-4) start to exceed pi for subdivided K_{3,3}?

    Reports the sign of the gap over ``x_grid`` per spec, the largest real root of the
    gap, and the maximum of those roots over the family. No pass/fail.
    """
    rows = []
    worst: Optional[RootInterval] = None
    for spec in specs:
        if spec.t != 3:
            raise InvalidOrder("the threshold explorer takes K_{3,3} subdivisions (t = 3)")
        n = spec.order
        gap = conjectured_bound(n, 4) - k3t_poly(spec)
        signs = {x: sign_at(gap, x) for x in x_grid}
        root = largest_real_root(gap)
        holds_from = None
        for x in sorted(x_grid, reverse=True):
            if signs[x] > 0:
                holds_from = x
            else:
                break
        rows.append({
            "a": list(spec.a), "b": list(spec.b), "c": list(spec.c), "order": n,
            "signs": {str(x): s for x, s in signs.items()},
            "holds_from": holds_from,
            "largest_root": None if root is None else root.to_json(),
        })
        if root is not None and (worst is None or root.hi > worst.hi):
            worst = root
    return {
        "schema": 1,
        "kind": "k33-explore",
        "specs": len(rows),
        "rows": rows,
        "max_largest_root": None if worst is None else worst.to_json(),
    }


def k33_specs(max_size: int) -> Iterator[K3tSpec]:
    for sizes in product(range(1, max_size + 1), repeat=9):
        yield K3tSpec(3, sizes[:3], sizes[3:6], sizes[6:])


def is_candidate(g: Graph) -> bool:
    """3-connected, nonplanar and 4-chromatic (cheapest test first)."""
    return (not is_planar(g)) and connectivity_class(g, 3) and chromatic_number(g) == 4


def finite_family_candidates(n_max: int, max_order: int = MAX_ORDER) -> Iterator[tuple[Graph, GapVerdict]]:
    """Every 3-connected nonplanar 4-chromatic graph of order <= n_max with its gap verdict."""
    if n_max > max_order:
        raise OrderTooLarge(f"order {n_max} exceeds the cap {max_order}")
    for n in range(4, n_max + 1):
        for g in enumerate_connected(n, is_candidate, max_order):
            yield g, gap_verdict(g, 4, require_chromatic=False)


def finite_family_report(n_max: int) -> dict:
    rows = []
    for g, verdict in finite_family_candidates(n_max):
        rows.append({"graph6": to_graph6(g), "order": g.n, **verdict_to_json(verdict)})
    return {
        "schema": 1,
        "kind": "finite-family",
        "n_max": n_max,
        "candidates": len(rows),
        "rows": rows,
        "passed": all(r["verdict"] == "strictly_below" for r in rows),
    }
