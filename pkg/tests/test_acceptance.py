"""Acceptance suite: eight end-to-end criteria, each reported on one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the summary lines appear at the end
of the session) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product

import networkx as nx
import pytest

from chromtools.bounds import (cactus_bound_grid, cactusson_certificate, k33son_certificate,
                               k3t_bound_grid, product_bound_grid, sk4_bound_grid, theta_bound_grid,
                               theta_uniform_grid)
from chromtools.chroma import chromatic_polynomial, count_colorings
from chromtools.conjecture import conjectured_bound, cstar_family, verify_conjecture, verify_tomescu3
from chromtools.families import (CactusSpec, K3tSpec, SK4Spec, ThetaSpec, build, cactus_poly,
                                 cactus_witness, host_graph, is_cactus, k3t_poly, sk4_poly, theta_poly,
                                 theta_poly_shifted, witness_details)
from chromtools.graph import Graph, canonical_form, chromatic_number, cycle, to_graph6
from chromtools.poly import DEFAULT_WIDTH, PositiveForAllXGeX0, evaluate, positive_beyond, shift

RESULTS: dict[int, tuple[bool, str]] = {}

SEED = 20240601
SAMPLES = 200


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"AC{number} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    RESULTS[number] = (ok, line)
    print(line)
    assert ok, line


def _random_graph(rnd: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rnd.random() < p])


def _random_connected(rnd: random.Random, n: int, p: float) -> Graph:
    edges = {(rnd.randrange(v), v) for v in range(1, n)}
    edges |= {e for e in combinations(range(n), 2) if rnd.random() < p}
    return Graph.from_edges(n, edges)


# 1

def criterion_sk4_regression() -> tuple[bool, str]:
    pi = sk4_poly(SK4Spec(3, 4, 4))
    bound = conjectured_bound(12, 4)
    top_pi = [pi[d] for d in range(12, 7, -1)]
    top_bound = [bound[d] for d in range(12, 7, -1)]
    ok = pi.degree == 12 and top_pi == [1, -14, 90, -352, 935] and top_bound == [1, -14, 87, -318, 762]
    return ok, f"pi top {top_pi}, bound top {top_bound}"


# 2

def criterion_root_certificates() -> tuple[bool, str]:
    k33 = k33son_certificate()
    cac = cactusson_certificate()
    k33_ok = (k33.root is not None and k33.root.width <= DEFAULT_WIDTH
              and k33.root.within(Fraction(29407, 10**4), Fraction(29409, 10**4))
              and positive_beyond(k33.polynomial, Fraction(295, 100)) == PositiveForAllXGeX0(Fraction(59, 20))
              and k33.ok)
    cac_ok = (cac.root is not None and cac.root.width <= DEFAULT_WIDTH
              and cac.root.within(Fraction(299790, 10**5), Fraction(299792, 10**5))
              and isinstance(positive_beyond(cac.polynomial, Fraction(2998, 1000)), PositiveForAllXGeX0)
              and cac.ok)
    return k33_ok and cac_ok, (f"k33son root ~{float(k33.root.midpoint):.7f}, "
                               f"cactusson root ~{float(cac.root.midpoint):.7f}")


# 3

def _cactus_box():
    for p in range(0, 4):
        for cycles in combinations_with_replacement((3, 4, 5), p):
            for bridges in range(0, 3):
                if p + bridges == 0:
                    continue
                yield CactusSpec(cycles, bridges)
                if p + bridges > 1:
                    # every later block hangs from vertex 0
                    yield CactusSpec(cycles, bridges, attachment=(0,) * (p + bridges - 1))


def criterion_closed_forms() -> tuple[bool, str]:
    bad = []
    counts = {}
    thetas = [ThetaSpec(*s) for s in product(range(1, 5), repeat=3)]
    for spec in thetas:
        engine = chromatic_polynomial(build(spec))
        if theta_poly(spec) != engine or theta_poly_shifted(spec) != shift(engine, 1):
            bad.append(spec)
    counts["theta"] = len(thetas)
    sk4s = [SK4Spec(*s) for s in product(range(1, 4), repeat=3)]
    bad += [s for s in sk4s if sk4_poly(s) != chromatic_polynomial(build(s))]
    counts["sk4"] = len(sk4s)
    k3ts = [K3tSpec(t, z[:t], z[t:2 * t], z[2 * t:]) for t in range(1, 4)
            for z in product(range(1, 3), repeat=3 * t)]
    bad += [s for s in k3ts if k3t_poly(s) != chromatic_polynomial(build(s))]
    counts["k3t"] = len(k3ts)
    cacti = list(_cactus_box())
    bad += [s for s in cacti if cactus_poly(s) != chromatic_polynomial(build(s))]
    counts["cactus"] = len(cacti)
    return not bad and counts["theta"] == 64 and counts["sk4"] == 27, f"{counts}, mismatches {len(bad)}"


# 4

def criterion_brute_force_oracle() -> tuple[bool, str]:
    # graph source is the networkx atlas, independent of the library's enumerator
    checked, bad = 0, 0
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n == 0 or n > 6 or not nx.is_connected(h):
            continue
        g = Graph.from_edges(n, h.edges())
        pi = chromatic_polynomial(g)
        for x in range(0, 7):
            checked += 1
            bad += evaluate(pi, x) != count_colorings(g, x)
    graphs = checked // 7
    return bad == 0 and graphs == 143, f"{graphs} connected graphs x 7 points, {bad} mismatches"


# 5

def criterion_conjecture() -> tuple[bool, str]:
    notes, ok = [], True
    for n in (4, 5, 6, 7):
        report = verify_conjecture(n, workers=4 if n == 7 else 1)
        ok &= report.passed
        notes.append(f"n={n}: {report.checked} graphs, {len(report.violations)} violations, "
                     f"{len(report.extremal)} extremal")
        if n == 7:
            family = {canonical_form(g) for g in cstar_family(4, 7)}
            ok &= {g6.encode() for g6 in report.extremal} == family and len(family) == 7
    return ok, "; ".join(notes)


# 6

def criterion_three_chromatic() -> tuple[bool, str]:
    ok, notes = True, []
    for n in range(3, 8):
        report = verify_tomescu3(n)
        if n % 2:
            expected = cycle(n)
        else:
            expected = Graph(n, cycle(n - 1).edges | {(0, n - 1)})
        unique = len(report.extremal) == 1 and canonical_form(expected) == report.extremal[0].encode()
        ok &= report.passed and unique
        notes.append(f"n={n}: {report.checked} graphs")
    return ok, "; ".join(notes)


# 7

def criterion_bound_grids() -> tuple[bool, str]:
    sweeps = {
        "theta": theta_bound_grid(),
        "theta_uniform": theta_uniform_grid(),
        "sk4": sk4_bound_grid(),
        "k3t": k3t_bound_grid(),
        "k3t_mixed": k3t_bound_grid(max_t=3, max_size=3, xs=(2, 3, 5)),
        "product": product_bound_grid(),
        "cactus": cactus_bound_grid(),
    }
    totals, failures = {}, 0
    for name, reports in sweeps.items():
        count = 0
        for r in reports:
            count += 1
            failures += not r.holds
        totals[name] = count
    return failures == 0, f"{sum(totals.values())} comparisons {totals}, {failures} failures"


# 8

def criterion_structural() -> tuple[bool, str]:
    rnd = random.Random(SEED)
    failures = []

    # addition-contraction identity
    done = 0
    while done < SAMPLES:
        g = _random_graph(rnd, rnd.randint(2, 8), rnd.random())
        non_edges = [e for e in combinations(range(g.n), 2) if e not in g.edges]
        if not non_edges:
            continue
        u, v = rnd.choice(non_edges)
        if chromatic_polynomial(g) != chromatic_polynomial(g.add_edge(u, v)) + chromatic_polynomial(g.identify(u, v)):
            failures.append(("addition-contraction", to_graph6(g), (u, v)))
        done += 1

    # chromatic number under adding or identifying a non-adjacent pair
    done = 0
    while done < SAMPLES:
        g = _random_graph(rnd, rnd.randint(2, 8), rnd.random())
        non_edges = [e for e in combinations(range(g.n), 2) if e not in g.edges]
        if not non_edges:
            continue
        u, v = rnd.choice(non_edges)
        plus, merged = chromatic_number(g.add_edge(u, v)), chromatic_number(g.identify(u, v))
        if abs(plus - merged) > 1 or chromatic_number(g) != min(plus, merged):
            failures.append(("chromatic-number", to_graph6(g), (u, v)))
        done += 1

    # connected subgraph bound
    for _ in range(SAMPLES):
        g = _random_connected(rnd, rnd.randint(2, 9), rnd.random() * 0.6)
        size = rnd.randint(1, g.n)
        keep, frontier = {0}, [0]
        while frontier and len(keep) < size:
            v = frontier.pop(rnd.randrange(len(frontier)))
            for w in g.neighbors(v):
                if w not in keep and len(keep) < size:
                    keep.add(w)
                    frontier.append(w)
        h = g.induced(keep)
        for e in h.sorted_edges():
            if rnd.random() < 0.3 and h.delete_edge(*e).is_connected():
                h = h.delete_edge(*e)
        pg, ph = chromatic_polynomial(g), chromatic_polynomial(h)
        if any(evaluate(pg, x) > evaluate(ph, x) * (x - 1) ** (g.n - h.n) for x in range(2, 9)):
            failures.append(("subgraph", to_graph6(g), to_graph6(h)))

    # theta shift identity
    for s in product(range(1, 5), repeat=3):
        spec = ThetaSpec(*s)
        if theta_poly_shifted(spec) != shift(chromatic_polynomial(build(spec)), 1):
            failures.append(("theta-shift", s))

    # cactus subgraph witnesses
    for host in ("wheel", "vt"):
        g, embedding = cactus_witness(host, 12)
        w = witness_details(host, 12)
        if not (is_cactus(g) and w.cycle_count == 6 and g.is_subgraph_of(host_graph(host, 12), embedding)):
            failures.append(("witness", host))

    return not failures, f"{3 * SAMPLES} random checks, 64 shift identities, 2 witnesses, failures {failures[:3]}"


CRITERIA = [
    (1, "SK4 (3,4,4) and bound coefficients", criterion_sk4_regression),
    (2, "root certificates", criterion_root_certificates),
    (3, "closed forms equal the engine", criterion_closed_forms),
    (4, "engine equals brute-force counts", criterion_brute_force_oracle),
    (5, "4-chromatic bound verified, n = 4..7", criterion_conjecture),
    (6, "3-chromatic bound verified, n = 3..7", criterion_three_chromatic),
    (7, "bounding inequality grids", criterion_bound_grids),
    (8, "structural property suites", criterion_structural),
]


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"AC{c[0]}" for c in CRITERIA])
def test_acceptance(number, title, check):
    start = time.perf_counter()
    ok, detail = check()
    record(number, title, ok, f"{detail} ({time.perf_counter() - start:.1f}s)")


def main() -> int:
    failed = 0
    for number, title, check in CRITERIA:
        start = time.perf_counter()
        ok, detail = check()
        print(f"AC{number} {'PASS' if ok else 'FAIL'}  {title}: {detail} ({time.perf_counter() - start:.1f}s)")
        failed += not ok
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
