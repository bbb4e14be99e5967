"""Bounding functions for theta graphs, subdivided K4 / K_{3,t}, and cacti, plus root certificates.

Every ``check_*`` function evaluates both sides exactly at a rational point and
returns a :class:`BoundReport`. The two certificate functions reduce an
inequality on a half-line to exact root isolation of one polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterator, Optional, Sequence

from .errors import DomainViolation, ZeroArgument
from .families import (CactusSpec, K3tSpec, SK4Spec, ThetaSpec, cactus_poly, k3t_poly,
                       sk4_poly, theta_poly_shifted)
from .poly import (DEFAULT_WIDTH, PositiveForAllXGeX0, Poly, RootInterval, X, as_rational,
                   cauchy_bound, count_real_roots, evaluate, falling_factorial,
                   format_rational, largest_real_root, positive_beyond, shift, sign_at,
                   squarefree_part, sturm_sequence)


@dataclass(frozen=True)
class BoundReport:
    lemma: str
    params: dict
    x: Fraction
    lhs: Fraction
    rhs: Fraction
    holds: bool
    strict: bool = False

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "params": self.params,
            "x": format_rational(self.x),
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "holds": self.holds,
            "strict": self.strict,
        }


def _report(lemma: str, params: dict, x, lhs, rhs, strict: bool = False) -> BoundReport:
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    holds = lhs < rhs if strict else lhs <= rhs
    return BoundReport(lemma, params, Fraction(x), lhs, rhs, holds, strict)


def _x_at_least(x, floor_value, lemma: str) -> Fraction:
    x = Fraction(as_rational(x))
    if x < floor_value:
        raise DomainViolation(f"{lemma} needs x >= {floor_value}, got {x}")
    return x


def g_abc(a: int, b: int, c: int, x) -> Fraction:
    """Piecewise correction factor keyed on how many of a, b, c equal 1."""
    x = Fraction(as_rational(x))
    if x == 0:
        raise ZeroArgument("G_abc is undefined at x = 0")
    ones = (a == 1) + (b == 1) + (c == 1)
    if ones == 0:
        return 1 + 3 / x**3 + 1 / x**4
    if ones == 1:
        return 1 + 2 / x**3 + 1 / x**6
    if ones == 2:
        return 1 + 1 / x + 1 / x**3 + 1 / x**4
    return 1 + 2 / x + 1 / x**2


def check_theta_bound(a: int, b: int, c: int, x) -> BoundReport:
    """pi(theta_{a,b,c}, x+1) <= x^(a+b+c) G_abc(x) / (x+1) for x >= 1."""
    x = _x_at_least(x, 1, "thetabound")
    lhs = evaluate(theta_poly_shifted(ThetaSpec(a, b, c)), x)
    rhs = x ** (a + b + c) * g_abc(a, b, c, x) / (x + 1)
    return _report("thetabound", {"a": a, "b": b, "c": c}, x, lhs, rhs)


def _uniform_factor(x: Fraction) -> Fraction:
    return 1 + 1 / x + 1 / x**3 + 1 / x**4


def check_theta_uniform_bound(a: int, b: int, c: int, x) -> BoundReport:
    """pi(theta_{a,b,c}, x+1) <= x^(a+b+c) (1 + 1/x + 1/x^3 + 1/x^4) / (x+1) for x >= sqrt 2."""
    x = Fraction(as_rational(x))
    if x <= 0 or x * x < 2:
        raise DomainViolation(f"thetalastbound needs x >= sqrt(2), got {x}")
    if max(a, b, c) < 2:
        raise DomainViolation("thetalastbound needs at least one path of size >= 2")
    lhs = evaluate(theta_poly_shifted(ThetaSpec(a, b, c)), x)
    rhs = x ** (a + b + c) * _uniform_factor(x) / (x + 1)
    return _report("thetalastbound", {"a": a, "b": b, "c": c}, x, lhs, rhs)


def check_sk4_bound(s1: int, s2: int, s3: int, x) -> BoundReport:
    """pi(SK4^{s1,s2,s3}, x+1) <= ((x-1)/(x+1)) x^(s1+s2+s3+1) (1 + 2/x^2) for x >= 2."""
    x = _x_at_least(x, 2, "SK4bound")
    lhs = evaluate(shift(sk4_poly(SK4Spec(s1, s2, s3)), 1), x)
    rhs = (x - 1) / (x + 1) * x ** (s1 + s2 + s3 + 1) * (1 + 2 / x**2)
    return _report("SK4bound", {"s1": s1, "s2": s2, "s3": s3}, x, lhs, rhs)


def f_xt(x, t: int) -> Fraction:
    """3(1+1/x+1/x^3+1/x^4)^t + (1/x)(1+2/x+1/x^2)^t + (x-1)(1+2/x^2)^t."""
    x = Fraction(as_rational(x))
    if t < 1:
        raise DomainViolation("F(x, t) needs t >= 1")
    if x == 0:
        raise ZeroArgument("F(x, t) is undefined at x = 0")
    return (3 * _uniform_factor(x) ** t + (1 + 2 / x + 1 / x**2) ** t / x
            + (x - 1) * (1 + 2 / x**2) ** t)


def check_k3t_bound(spec: K3tSpec, x) -> BoundReport:
    """pi(G, x+1) <= x^(n+2t-2) F(x, t) / (x+1)^(2t-1) for a subdivided K_{3,t}, x >= 2."""
    x = _x_at_least(x, 2, "k33bound")
    t, n = spec.t, spec.order
    lhs = evaluate(shift(k3t_poly(spec), 1), x)
    rhs = x ** (n + 2 * t - 2) * f_xt(x, t) / (x + 1) ** (2 * t - 1)
    params = {"t": t, "a": list(spec.a), "b": list(spec.b), "c": list(spec.c)}
    return _report("k33bound", params, x, lhs, rhs)


def binomial_inequality_holds(p: int) -> bool:
    """C(p, i) <= C(3p, i) / 3^i for i = 0..p."""
    return all(comb(p, i) * 3**i <= comb(3 * p, i) for i in range(p + 1))


def check_product_bound(sizes: Sequence[int], x) -> BoundReport:
    """prod(x^N_i + 1) <= x^(N-3p) (x + 1/(3x^2))^(3p) for N_i >= 3 and x >= 1.

    ``holds`` also requires the binomial inequality that drives the proof.
    """
    x = _x_at_least(x, 1, "generalproductbound")
    if not sizes or any(s < 3 for s in sizes):
        raise DomainViolation("generalproductbound needs p >= 1 sizes, each >= 3")
    p, total = len(sizes), sum(sizes)
    lhs = Fraction(1)
    for s in sizes:
        lhs *= x**s + 1
    rhs = x ** (total - 3 * p) * (x + 1 / (3 * x**2)) ** (3 * p)
    rep = _report("generalproductbound", {"N": list(sizes)}, x, lhs, rhs)
    if rep.holds and not binomial_inequality_holds(p):
        return BoundReport(rep.lemma, rep.params, rep.x, rep.lhs, rep.rhs, False)
    return rep


def check_cactus_bound(spec: CactusSpec, x) -> BoundReport:
    """pi(G, x+1) <= x^(n-8p-1) (3x^3+1)^(3p) / (3^(3p) (x+1)^(p-1)) for x >= 1."""
    x = _x_at_least(x, 1, "cactusbound")
    n, p = spec.order, spec.p
    lhs = evaluate(shift(cactus_poly(spec), 1), x)
    rhs = x ** (n - 8 * p - 1) * (3 * x**3 + 1) ** (3 * p) / (3 ** (3 * p) * (x + 1) ** (p - 1))
    params = {"cycles": list(spec.cycles), "bridges": spec.bridges}
    return _report("cactusbound", params, x, lhs, rhs)


# grids

X_GRID = tuple(Fraction(v) for v in ("1", "3/2", "2", "5/2", "3", "4", "10"))
THETA_X_GRID = tuple(Fraction(v) for v in ("1", "3/2", "2", "5/2", "4", "10"))
NEAR_SQRT2 = Fraction("1.4143")


def theta_bound_grid(max_size: int = 4, xs: Sequence = THETA_X_GRID) -> Iterator[BoundReport]:
    for a, b, c in product(range(1, max_size + 1), repeat=3):
        for x in xs:
            yield check_theta_bound(a, b, c, x)


def theta_uniform_grid(max_size: int = 4, xs: Sequence = (NEAR_SQRT2,) + THETA_X_GRID[1:]) -> Iterator[BoundReport]:
    for a, b, c in product(range(1, max_size + 1), repeat=3):
        if max(a, b, c) < 2:
            continue
        for x in xs:
            yield check_theta_uniform_bound(a, b, c, x)


def sk4_bound_grid(max_size: int = 4, xs: Sequence = (2, Fraction(5, 2), 3, 10)) -> Iterator[BoundReport]:
    for s in product(range(1, max_size + 1), repeat=3):
        for x in xs:
            yield check_sk4_bound(*s, x)


def k3t_specs(max_t: int = 3, max_size: int = 2) -> Iterator[K3tSpec]:
    for t in range(1, max_t + 1):
        for sizes in product(range(1, max_size + 1), repeat=3 * t):
            yield K3tSpec(t, sizes[:t], sizes[t:2 * t], sizes[2 * t:])


def k3t_bound_grid(max_t: int = 3, max_size: int = 2, xs: Sequence = (2, 3, 5, 10)) -> Iterator[BoundReport]:
    for spec in k3t_specs(max_t, max_size):
        for x in xs:
            yield check_k3t_bound(spec, x)


def product_bound_grid(max_p: int = 6, sizes: Sequence[int] = (3, 4, 5), xs: Sequence = X_GRID) -> Iterator[BoundReport]:
    from itertools import combinations_with_replacement

    for p in range(1, max_p + 1):
        for combo in combinations_with_replacement(sizes, p):
            for x in xs:
                yield check_product_bound(combo, x)


def cactus_specs(max_p: int = 6, lengths: Sequence[int] = (3, 4, 5), max_bridges: int = 5) -> Iterator[CactusSpec]:
    from itertools import combinations_with_replacement

    for p in range(1, max_p + 1):
        for combo in combinations_with_replacement(lengths, p):
            for t in range(max_bridges + 1):
                yield CactusSpec(combo, t)


def cactus_bound_grid(max_p: int = 6, lengths: Sequence[int] = (3, 4, 5), max_bridges: int = 5,
                      xs: Sequence = X_GRID) -> Iterator[BoundReport]:
    for spec in cactus_specs(max_p, lengths, max_bridges):
        for x in xs:
            yield check_cactus_bound(spec, x)


GRIDS = {
    "thetabound": theta_bound_grid,
    "thetalastbound": theta_uniform_grid,
    "SK4bound": sk4_bound_grid,
    "k33bound": k3t_bound_grid,
    "generalproductbound": product_bound_grid,
    "cactusbound": cactus_bound_grid,
}


# root certificates

def k33son_polynomials(t: int = 10) -> tuple[Poly, Poly, Poly]:
    """(q, r, p = r - q) for the subdivided K_{3,t} comparison."""
    q = (3 * X * (X**4 + X**3 + X + 1) ** t + (X**4 + 2 * X**3 + X**2) ** t
         + X * (X - 1) * (X**4 + 2 * X**2) ** t)
    r = X ** (2 * t - 1) * (X + 1) ** (2 * t - 1) * shift(falling_factorial(4), 1)
    return q, r, r - q


def cactusson_polynomial(p: int = 6) -> Poly:
    return (3 ** (3 * p) * X ** (8 * p - 3) * shift(falling_factorial(4), 1) * (X + 1) ** (p - 1)
            - (3 * X**3 + 1) ** (3 * p))


@dataclass(frozen=True)
class RootCertificate:
    """Largest-root bracket and half-line positivity verdict for one polynomial."""

    name: str
    parameter: int
    polynomial: Poly
    x0: Fraction
    root: Optional[RootInterval]
    positive: bool
    roots_beyond_x0: int
    sign_table: dict = field(default_factory=dict)

    @property
    def leading_coefficient_positive(self) -> bool:
        return self.polynomial.lc > 0

    @property
    def ok(self) -> bool:
        return self.positive and self.leading_coefficient_positive and self.roots_beyond_x0 == 0

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "parameter": self.parameter,
            "degree": self.polynomial.degree,
            "leading_coefficient": str(self.polynomial.lc),
            "x0": format_rational(self.x0),
            "largest_root": None if self.root is None else self.root.to_json(),
            "positive_beyond_x0": self.positive,
            "roots_in_x0_to_bound": self.roots_beyond_x0,
            "sturm_sign_table": self.sign_table,
            "ok": self.ok,
            "polynomial": self.polynomial.to_json(),
        }


def certify(name: str, parameter: int, poly: Poly, x0, width=DEFAULT_WIDTH) -> RootCertificate:
    x0 = Fraction(as_rational(x0))
    root = largest_real_root(poly, width)
    verdict = positive_beyond(poly, x0)
    sq = squarefree_part(poly)
    chain = sturm_sequence(sq)
    bound = cauchy_bound(sq)
    beyond = count_real_roots(sq, x0, bound, chain=chain)
    points = {"x0": x0, "bound": Fraction(bound)}
    if root is not None:
        points.update(lo=Fraction(root.lo), hi=Fraction(root.hi))
    table = {label: [sign_at(q, pt) for q in chain] for label, pt in points.items()}
    table["points"] = {label: format_rational(pt) for label, pt in points.items()}
    return RootCertificate(name, parameter, poly, x0, root,
                           isinstance(verdict, PositiveForAllXGeX0), beyond, table)


def k33son_certificate(t: int = 10, x0="2.95", width=DEFAULT_WIDTH) -> RootCertificate:
    return certify("k33son", t, k33son_polynomials(t)[2], x0, width)


def cactusson_certificate(p: int = 6, x0="2.998", width=DEFAULT_WIDTH) -> RootCertificate:
    return certify("cactusson", p, cactusson_polynomial(p), x0, width)
