"""Exact univariate polynomials over the rationals, with Sturm-certified root isolation.

Rationals are :class:`fractions.Fraction`; integral coefficients are stored as plain
``int`` so that integer-coefficient polynomials (every chromatic polynomial) stay on
the fast path. All values are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import InexactDivision, ZeroPolynomial

Rational = Union[int, Fraction]

DEFAULT_WIDTH = Fraction(1, 10**6)


def as_rational(value) -> Rational:
    """Coerce ``value`` to an exact rational.

    Accepts ints, Fractions and strings such as ``"3/2"`` or ``"2.95"``. Floats are
    rejected because they silently smuggle binary rounding into exact verdicts.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, str):
        f = Fraction(value.strip())
        return int(f) if f.denominator == 1 else f
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(value: Rational) -> str:
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def _norm(c) -> Rational:
    if isinstance(c, int) and not isinstance(c, bool):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    return as_rational(c)


class Poly:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of ``x**i``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_norm(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def _raw(cls, coeffs: list) -> "Poly":
        # coeffs already normalized
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = cls.__new__(cls)
        p._c = tuple(coeffs)
        return p

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def linear(cls, root) -> "Poly":
        """The monic polynomial ``x - root``."""
        return cls((-_norm(root), 1))

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def lc(self) -> Rational:
        return self._c[-1] if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, i: int) -> Rational:
        return self._c[i] if 0 <= i < len(self._c) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Poly((other,))._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    # ring operations

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        elif not isinstance(other, Poly):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = _norm(out[i] + v)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw([-v for v in self._c])

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        elif not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = _norm(other)
            if other == 0:
                return Poly()
            return Poly._raw([_norm(v * other) for v in self._c])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u == 0:
                continue
            for j, v in enumerate(b):
                out[i + j] += u * v
        return Poly._raw([_norm(v) for v in out])

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = Poly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not isinstance(other, Poly):
            other = Poly((other,))
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        d = other._c
        dl = d[-1]
        if len(rem) < len(d):
            return Poly(), self
        unit = dl == 1 or dl == -1
        quot: list = [0] * (len(rem) - len(d) + 1)
        for k in range(len(quot) - 1, -1, -1):
            top = rem[k + len(d) - 1]
            coef = top * dl if unit else _norm(Fraction(top) / dl)
            quot[k] = coef
            if coef:
                for j, v in enumerate(d):
                    rem[k + j] -= coef * v
        return Poly(quot), Poly(rem[: len(d) - 1])

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise InexactDivision(f"{self} is not divisible by {other}")
        return q

    def __call__(self, x) -> Rational:
        return evaluate(self, x)

    def derivative(self) -> "Poly":
        return Poly._raw([_norm(i * v) for i, v in enumerate(self._c)][1:])

    def shift(self, c) -> "Poly":
        return shift(self, c)

    def __repr__(self) -> str:
        return f"Poly({list(map(str, self._c))})"

    def __str__(self) -> str:
        return pretty(self)

    def to_json(self) -> list[str]:
        return [format_rational(v) for v in self._c]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        return cls(as_rational(s) for s in data)


def pretty(p: Poly, var: str = "x") -> str:
    """Human-readable form, highest degree first: ``x^2 - 3x + 2``."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            if a == 1:
                body = mono
            elif isinstance(a, Fraction):
                body = f"({a}){mono}"
            else:
                body = f"{a}{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


X = Poly.x()


def evaluate(p: Poly, x) -> Rational:
    """Exact value of ``p`` at ``x`` by Horner's rule."""
    x = _norm(x)
    acc: Rational = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return _norm(acc)


def derivative(p: Poly) -> Poly:
    return p.derivative()


def shift(p: Poly, c) -> Poly:
    """Return ``q`` with ``q(x) = p(x + c)``."""
    c = _norm(c)
    if c == 0:
        return p
    out: list = []
    for coef in reversed(p.coeffs):
        # out = out * (x + c) + coef
        nxt = [0] * (len(out) + 1)
        for i, v in enumerate(out):
            nxt[i + 1] += v
            nxt[i] += v * c
        nxt[0] += coef
        out = nxt
    return Poly(out)


def falling_factorial(k: int) -> Poly:
    """``x (x-1) ... (x-k+1)``; the constant 1 when ``k == 0``."""
    if k < 0:
        raise ValueError("falling factorial needs k >= 0")
    result = Poly.one()
    for i in range(k):
        result = result * Poly((-i, 1))
    return result


def rising_shifted_falling_factorial(k: int) -> Poly:
    """``(x+1)`` falling ``k``, i.e. ``(x+1) x (x-1) ... (x-k+2)``."""
    return shift(falling_factorial(k), 1)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (zero if both are zero)."""
    a_int, b_int = _primitive(a), _primitive(b)
    while b_int:
        r = _prem(a_int, b_int)
        a_int, b_int = b_int, _primitive_list(r)
    if not a_int:
        return Poly()
    g = Poly(a_int)
    return g * Fraction(1, g.lc) if g.lc != 1 else g


def squarefree_part(p: Poly) -> Poly:
    if p.is_zero():
        raise ZeroPolynomial("square-free part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g) if g.degree > 0 else p


# integer-coefficient helpers for Sturm chains

def _primitive_list(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    if not c:
        return []
    g = 0
    for v in c:
        g = math.gcd(g, v)
        if g == 1:
            return c
    return [v // g for v in c]


def _primitive(p: Poly) -> list[int]:
    """Integer coefficient list equal to ``p`` times a positive constant, content 1."""
    den = 1
    for v in p.coeffs:
        if isinstance(v, Fraction):
            den = den * v.denominator // math.gcd(den, v.denominator)
    ints = [int(v * den) for v in p.coeffs]
    return _primitive_list(ints)


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder: ``lc(b)**(deg a - deg b + 1) * a mod b``, in integers."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    delta = len(a) - len(b) + 1
    if delta <= 0:
        return r
    for _ in range(delta):
        if len(r) - 1 < db:
            r = [v * lb for v in r]
            continue
        lr = r[-1]
        shift_by = len(r) - 1 - db
        r = [v * lb for v in r]
        for j, v in enumerate(b):
            r[shift_by + j] -= lr * v
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def sturm_sequence(p: Poly) -> list[Poly]:
    """Sturm chain of ``p``; every member is scaled by a positive constant to integers.

    Positive rescaling leaves every sign, hence every variation count, unchanged.
    """
    if p.is_zero():
        raise ZeroPolynomial("Sturm sequence of the zero polynomial")
    chain = [_primitive(p)]
    d = _primitive(p.derivative())
    if d:
        chain.append(d)
    while len(chain) >= 2 and len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        r = _prem(a, b)
        if not r:
            break
        delta = len(a) - len(b)
        scale_sign = _sign(b[-1]) ** (delta + 1)
        r = _primitive_list(r)
        # next = -(true remainder) = -r / scale
        if scale_sign > 0:
            r = [-v for v in r]
        chain.append(r)
    return [Poly(c) for c in chain]


def sign_at(p: Poly, x) -> int:
    """Sign of ``p(x)`` for rational ``x``, or at +/-infinity when ``x`` is +-inf."""
    if p.is_zero():
        return 0
    if isinstance(x, float):
        if x == math.inf:
            return _sign(p.lc)
        if x == -math.inf:
            return _sign(p.lc) * (-1) ** p.degree
        raise TypeError("only +/-inf floats are accepted")
    f = Fraction(x)
    num, den = f.numerator, f.denominator
    c = p.coeffs
    if den == 1:
        acc = 0
        for v in reversed(c):
            acc = acc * num + v
        return _sign(acc)
    if any(isinstance(v, Fraction) for v in c):
        return _sign(evaluate(p, f))
    # homogenize: den**deg * p(num/den) has the same sign
    acc = c[-1]
    denpow = 1
    for v in reversed(c[:-1]):
        denpow *= den
        acc = acc * num + v * denpow
    return _sign(acc)


def sign_variations(chain: Sequence[Poly], x) -> int:
    signs = [s for s in (sign_at(q, x) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: Poly, lo=None, hi=None, chain: Optional[Sequence[Poly]] = None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``; ``None`` means unbounded."""
    if chain is None:
        chain = sturm_sequence(squarefree_part(p))
    a = -math.inf if lo is None else as_rational(lo)
    b = math.inf if hi is None else as_rational(hi)
    return sign_variations(chain, a) - sign_variations(chain, b)


def cauchy_bound(p: Poly) -> Fraction:
    """``1 + max|a_i| / |a_lead|``; every real root ``r`` has ``|r| < B``."""
    if p.is_zero():
        raise ZeroPolynomial("root bound of the zero polynomial")
    lead = abs(Fraction(p.lc))
    m = max((abs(Fraction(v)) for v in p.coeffs[:-1]), default=Fraction(0))
    return 1 + m / lead


@dataclass(frozen=True)
class RootInterval:
    """A rational bracket ``[lo, hi]`` around one real root.

    ``isolated`` is set when the bracketed polynomial has exactly one real root
    in the closed interval.
    """

    lo: Fraction
    hi: Fraction
    isolated: bool = True

    @property
    def width(self) -> Fraction:
        return Fraction(self.hi) - Fraction(self.lo)

    @property
    def midpoint(self) -> Fraction:
        return (Fraction(self.lo) + Fraction(self.hi)) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def within(self, lo, hi) -> bool:
        """True when ``[self.lo, self.hi]`` sits strictly inside ``(lo, hi)``."""
        return as_rational(lo) < self.lo and self.hi < as_rational(hi)

    def to_json(self) -> dict:
        return {
            "lo": format_rational(self.lo),
            "hi": format_rational(self.hi),
            "isolated": self.isolated,
            "approx": float(self.midpoint),
        }


def largest_real_root(p: Poly, width=DEFAULT_WIDTH) -> Optional[RootInterval]:
    """Isolating interval of width <= ``width`` around the largest real root, or None."""
    if p.is_zero():
        raise ZeroPolynomial("largest root of the zero polynomial")
    width = as_rational(width)
    if width <= 0:
        raise ValueError("width must be positive")
    sq = squarefree_part(p)
    if sq.degree < 1:
        return None
    chain = sturm_sequence(sq)
    bound = cauchy_bound(sq)
    lo, hi = Fraction(-bound), Fraction(bound)
    v_hi = sign_variations(chain, hi)
    if sign_variations(chain, lo) - v_hi == 0:
        return None
    # invariant: the largest root lies in (lo, hi]
    while True:
        n_in = sign_variations(chain, lo) - v_hi
        if hi - lo <= width and n_in == 1 and sign_at(sq, lo) != 0:
            return RootInterval(lo, hi, True)
        mid = (lo + hi) / 2
        if sign_variations(chain, mid) - v_hi >= 1:
            lo = mid
        else:
            hi = mid
            v_hi = sign_variations(chain, hi)


def isolate_real_roots(p: Poly, lo=None, hi=None) -> list[RootInterval]:
    """Disjoint isolating intervals for the distinct real roots in ``(lo, hi]``.

    Intervals are sorted, pairwise separated (``hi_i < lo_{i+1}``) and have
    ``lo_i > lo``; each one contains exactly one root in its half-open span.
    """
    if p.is_zero():
        raise ZeroPolynomial("roots of the zero polynomial")
    sq = squarefree_part(p)
    if sq.degree < 1:
        return []
    chain = sturm_sequence(sq)
    bound = cauchy_bound(sq)
    a = Fraction(-bound) if lo is None else Fraction(as_rational(lo))
    b = Fraction(bound) if hi is None else Fraction(as_rational(hi))
    if a >= b:
        return []

    def count(u, v):
        return sign_variations(chain, u) - sign_variations(chain, v)

    found: list[list[Fraction]] = []
    stack = [(a, b)]
    while stack:
        u, v = stack.pop()
        k = count(u, v)
        if k == 0:
            continue
        if k == 1:
            found.append([u, v])
            continue
        m = (u + v) / 2
        stack.append((m, v))
        stack.append((u, m))
    found.sort()
    # lower ends must lie strictly above ``a`` and must not be roots themselves
    for iv in found:
        while iv[0] == a or sign_at(sq, iv[0]) == 0:
            m = (iv[0] + iv[1]) / 2
            if count(m, iv[1]) == 1:
                iv[0] = m
            else:
                iv[1] = m
    for i, iv in enumerate(found):
        if i + 1 < len(found):
            nxt = found[i + 1]
            while iv[1] >= nxt[0]:
                m = (iv[0] + iv[1]) / 2
                if count(iv[0], m) == 1:
                    iv[1] = m
                else:
                    iv[0] = m
    return [RootInterval(u, v, True) for u, v in found]


@dataclass(frozen=True)
class PositiveForAllXGeX0:
    x0: Rational


@dataclass(frozen=True)
class IdenticallyZero:
    pass


@dataclass(frozen=True)
class FailsAt:
    """``p(x) <= 0`` at the rational ``x`` (``x >= x0``).

    When ``p`` only touches zero at an irrational even-multiplicity root no
    rational witness exists; ``touching`` then brackets that root and ``x`` is
    its midpoint.
    """

    x: Rational
    touching: Optional[RootInterval] = None


PositivityVerdict = Union[PositiveForAllXGeX0, IdenticallyZero, FailsAt]


def positive_beyond(p: Poly, x0) -> PositivityVerdict:
    """Decide exactly whether ``p(x) > 0`` for every real ``x >= x0``."""
    x0 = as_rational(x0)
    if p.is_zero():
        return IdenticallyZero()
    s0 = sign_at(p, x0)
    if s0 == 0:
        return FailsAt(x0)
    sq = squarefree_part(p)
    bound = max(cauchy_bound(sq), Fraction(x0) + 1)
    roots = isolate_real_roots(sq, x0, bound) if sq.degree >= 1 else []
    if not roots:
        if s0 > 0:
            return PositiveForAllXGeX0(x0)
        return FailsAt(x0)
    # sign is constant on each stretch between consecutive roots
    samples = [roots[0].lo]
    for left, right in zip(roots, roots[1:]):
        samples.append((left.hi + right.lo) / 2)
    samples.append(Fraction(bound))
    for s in samples:
        if sign_at(p, s) < 0:
            return FailsAt(as_rational(s))
    first = roots[0]
    exact = _rational_root_in(sq, first)
    if exact is not None:
        return FailsAt(exact)
    return FailsAt(as_rational(first.midpoint), touching=first)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_root_in(p: Poly, iv: RootInterval, max_lead: int = 10**6) -> Optional[Rational]:
    """The root of square-free ``p`` bracketed by ``iv`` if it is rational.

    A rational root ``a/b`` of a primitive integer polynomial has ``b | lead``, so
    once the bracket is narrower than ``1/lead`` each denominator leaves at most
    two candidates. Skipped for large leading coefficients.
    """
    ints = _primitive(p)
    lead = abs(ints[-1])
    if lead > max_lead:
        return None
    chain = sturm_sequence(p)
    lo, hi = Fraction(iv.lo), Fraction(iv.hi)
    while hi - lo >= Fraction(1, lead):
        mid = (lo + hi) / 2
        if sign_variations(chain, mid) - sign_variations(chain, hi) >= 1:
            lo = mid
        else:
            hi = mid
    for den in _divisors(lead):
        for num in range(math.floor(lo * den), math.ceil(hi * den) + 1):
            cand = Fraction(num, den)
            if lo <= cand <= hi and sign_at(p, cand) == 0:
                return as_rational(cand)
    return None
