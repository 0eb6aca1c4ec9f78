"""Dedekind sums S(m, n) = 12 s(m, n), evaluated exactly.

Two independent evaluators are provided: ``dedekind_naive`` sums the sawtooth
products directly in O(n), and ``dedekind_fast`` walks the Euclidean remainder
chain using the reciprocity law in O(log n).  Both return ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd


class NotCoprimeError(ValueError):
    pass


@dataclass(frozen=True)
class SumQuery:
    """A normalized argument pair: ``0 <= m < n`` and ``gcd(m, n) == 1``."""

    m: int
    n: int

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError(f"n must be positive, got {self.n}")
        if not 0 <= self.m < self.n:
            raise ValueError(f"m must lie in [0, {self.n}), got {self.m}")
        if gcd(self.m, self.n) != 1:
            raise NotCoprimeError(f"gcd({self.m}, {self.n}) != 1")


@dataclass(frozen=True)
class ThreeTermDecomposition:
    """Witness that S(m,n) = S(c,d) + eps*S(r,q) + n/(dq) + d/(nq) + q/(nd) - 3*eps."""

    c: int
    d: int
    q: int
    epsilon: int
    r_witness: int | None = None


def sawtooth(t) -> Fraction:
    """((t)): t - floor(t) - 1/2 off the integers, 0 on them."""
    t = Fraction(t)
    if t.denominator == 1:
        return Fraction(0)
    return t - floor(t) - Fraction(1, 2)


def normalize(m: int, n: int) -> SumQuery:
    """Reduce (m, n) to (m mod |n|, |n|); S is invariant under both steps."""
    if n == 0:
        raise ValueError("n must be nonzero")
    if gcd(m, n) != 1:
        raise NotCoprimeError(f"gcd({m}, {n}) != 1")
    n = abs(n)
    return SumQuery(m % n, n)


def _as_query(m, n=None) -> SumQuery:
    if isinstance(m, SumQuery):
        return m
    return normalize(m, n)


def dedekind_naive(m, n=None) -> Fraction:
    """S(m, n) from the defining sum.

    With gcd(m, n) = 1 only k = n lands on an integer, and
    4 n^2 s(m, n) = sum_{k<n} (2k - n)(2(mk mod n) - n), so the whole sum stays
    in integers until the final division.
    """
    query = _as_query(m, n)
    m, n = query.m, query.n
    total = 0
    r = 0
    for k in range(1, n):
        r += m
        if r >= n:
            r -= n
        total += (2 * k - n) * (2 * r - n)
    return Fraction(3 * total, n * n)


def dedekind_literal(m, n=None) -> Fraction:
    """S(m, n) as 12 * sum ((k/n)) ((mk/n)) over Fractions, with no shortcuts."""
    query = _as_query(m, n)
    m, n = query.m, query.n
    return 12 * sum(
        (sawtooth(Fraction(k, n)) * sawtooth(Fraction(m * k, n)) for k in range(1, n + 1)),
        Fraction(0),
    )


def dedekind_fast_scaled(m: int, n: int) -> int:
    """n * S(m, n) as an int, for normalized coprime (m, n).

    Reciprocity gives S(a, b) = -S(b mod a, a) + (a^2 + b^2 + 1)/(ab) - 3.
    Multiplying by b turns this into
        b*S(a, b) = (a^2 + b^2 + 1 - b * [a*S(b mod a, a)]) / a - 3b,
    an exact integer division since b*S(a, b) is an integer.  The chain is
    unwound bottom-up from S(0, 1) = 0 so nothing recurses.
    """
    chain = []
    a, b = m, n
    while a:
        chain.append((a, b))
        a, b = b % a, a
    if b != 1:
        raise NotCoprimeError(f"gcd({m}, {n}) != 1")
    scaled = 0
    for a, b in reversed(chain):
        numer = a * a + b * b + 1 - b * scaled
        scaled, rem = divmod(numer, a)
        assert rem == 0, (a, b)
        scaled -= 3 * b
    return scaled


def dedekind_fast(m, n=None) -> Fraction:
    """S(m, n) in O(log n) steps via the reciprocity law."""
    query = _as_query(m, n)
    return Fraction(dedekind_fast_scaled(query.m, query.n), query.n)


def closed_form_s1(n: int) -> Fraction:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return Fraction(n * n - 3 * n + 2, n)


def closed_form_s2(n: int) -> Fraction:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"S(2, n) closed form needs odd n >= 3, got {n}")
    return Fraction(n * n - 6 * n + 5, 2 * n)


def mod_inverse(m: int, n: int) -> int:
    """Inverse of m modulo n, in [1, n-1] (0 for n = 1)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if gcd(m, n) != 1:
        raise NotCoprimeError(f"{m} is not invertible mod {n}")
    return pow(m, -1, n)


def three_term_check(m: int, n: int, c: int, d: int) -> ThreeTermDecomposition:
    """Find r with gcd(r, |q|) = 1 making the three-term relation exact.

    Raises ValueError when q = md - nc is zero and RuntimeError when no r
    in [0, |q|) works.
    """
    if gcd(m, n) != 1 or gcd(c, d) != 1:
        raise NotCoprimeError(f"need gcd(m, n) = gcd(c, d) = 1, got ({m}, {n}), ({c}, {d})")
    if d <= 0 or c < 0:
        raise ValueError("need d > 0 and c >= 0")
    q = m * d - n * c
    if q == 0:
        raise ValueError(f"q = md - nc vanishes for m/n = {m}/{n}, c/d = {c}/{d}")
    if n <= d:
        raise ValueError(f"need n > d, got n={n}, d={d}")
    eps = 1 if q > 0 else -1
    residual = (
        dedekind_fast(m, n)
        - dedekind_fast(c, d)
        - Fraction(n, d * q)
        - Fraction(d, n * q)
        - Fraction(q, n * d)
        + 3 * eps
    )
    aq = abs(q)
    for r in range(aq):
        if gcd(r, aq) == 1 and eps * dedekind_fast(r, aq) == residual:
            return ThreeTermDecomposition(c=c, d=d, q=q, epsilon=eps, r_witness=r)
    raise RuntimeError(f"no three-term witness r for (m, n, c, d) = ({m}, {n}, {c}, {d})")
