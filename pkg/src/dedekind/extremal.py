"""Where the largest Dedekind sums S(m, n) live.

For fixed k and large n, S(m, n) >= S(k, n) forces m = (nc + q)/d with
d <= k, 0 <= c < d, gcd(c, d) = 1 and 1 <= q <= k // d.  Everything else is
"ordinary" (far from every fraction c/d with d <= 2k + 2) or close to a
fraction with d*|q| > k, and both cases have explicit bounds implemented here.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
import heapq
import os

from dedekind.sums import dedekind_fast, dedekind_fast_scaled, NotCoprimeError


@dataclass(frozen=True)
class FareyWitness:
    c: int
    d: int
    q: int
    l: int


@dataclass(frozen=True)
class OrdinaryReport:
    ordinary: bool
    witness_d: int | None = None
    witness_c: int | None = None
    witness_q: int | None = None


@dataclass(frozen=True)
class Candidate:
    """One admissible m together with every (d, c, q) that produces it.

    ``d``, ``c`` and ``q`` refer to the first origin in (d, c, q) order.
    """

    m: int
    origins: tuple[tuple[int, int, int], ...]

    @property
    def d(self) -> int:
        return self.origins[0][0]

    @property
    def c(self) -> int:
        return self.origins[0][1]

    @property
    def q(self) -> int:
        return self.origins[0][2]


@dataclass
class VerifyReport:
    parameter_range: str
    checked_count: int = 0
    # (m, n, S(m, n), reference value)
    violations: list[tuple[int, int, Fraction, Fraction]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations


def totient(n: int) -> int:
    if n < 1:
        raise ValueError(f"totient needs n >= 1, got {n}")
    result = n
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _check_pair(m: int, n: int) -> None:
    if not 0 < m < n:
        raise ValueError(f"need 0 < m < n, got m={m}, n={n}")
    if gcd(m, n) != 1:
        raise NotCoprimeError(f"gcd({m}, {n}) != 1")


def farey_approx(m: int, n: int, l: int) -> FareyWitness:
    """c/d with d <= l and |m/n - c/d| <= 1/(l d).

    Takes the last continued-fraction convergent of m/n whose denominator is
    at most l.  Its successor has denominator > l, which gives the bound.
    """
    _check_pair(m, n)
    if not 0 < l < n:
        raise ValueError(f"need 0 < l < n, got l={l}, n={n}")
    p_prev, p = 1, 0
    d_prev, d = 0, 1
    a, b = m, n  # m/n = a/b, walked through the Euclidean algorithm on b/a
    while a:
        digit, rem = divmod(b, a)
        p_next = digit * p + p_prev
        d_next = digit * d + d_prev
        if d_next > l:
            break
        p_prev, p = p, p_next
        d_prev, d = d, d_next
        a, b = rem, a
    c = p
    gap = abs(Fraction(m, n) - Fraction(c, d))
    if gcd(c, d) != 1 or d > l or gap > Fraction(1, l * d):
        raise AssertionError(f"Farey witness {c}/{d} fails for {m}/{n}, l={l}")
    return FareyWitness(c=c, d=d, q=m * d - n * c, l=l)


def _near_numerators(m: int, n: int, d: int):
    lo = m * d // n
    for c in (lo, lo + 1):
        if 0 <= c <= d and gcd(c, d) == 1:
            yield c


def is_ordinary(m: int, n: int, k: int) -> OrdinaryReport:
    """Decide whether |md - nc| >= 2k + 2 for every d <= 2k + 2 and coprime c in [0, d].

    Only the two numerators bracketing md/n can give |q| < n, so no other c
    needs checking.  The reported witness has minimal |q|, then minimal d,
    then minimal c.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    _check_pair(m, n)
    l = 2 * k + 2
    if n <= l:
        raise ValueError(f"need n > 2k + 2 = {l}, got n={n}")
    best = None
    for d in range(1, l + 1):
        for c in _near_numerators(m, n, d):
            q = m * d - n * c
            if abs(q) < l:
                key = (abs(q), d, c)
                if best is None or key < best[0]:
                    best = (key, q)
    if best is None:
        return OrdinaryReport(ordinary=True)
    (_, d, c), q = best
    return OrdinaryReport(ordinary=False, witness_d=d, witness_c=c, witness_q=q)


def candidate_set(k: int, n: int) -> list[Candidate]:
    """All m = (nc + q)/d with d <= k, 0 <= c < d, gcd(c, d) = 1, 1 <= q <= k // d.

    Only integral m with 0 < m < n and gcd(m, n) = 1 are kept; sorted by m.
    """
    origins: dict[int, list[tuple[int, int, int]]] = {}
    for d in range(1, k + 1):
        for c in range(d):
            if gcd(c, d) != 1:
                continue
            for q in range(1, k // d + 1):
                m, rem = divmod(n * c + q, d)
                if rem == 0 and 0 < m < n and gcd(m, n) == 1:
                    origins.setdefault(m, []).append((d, c, q))
    return [Candidate(m, tuple(sorted(origins[m]))) for m in sorted(origins)]


def candidate_count_bound(k: int) -> int:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return sum(totient(d) * (k // d) for d in range(1, k + 1))


def ordinary_bound(k: int, n: int) -> Fraction:
    """2n/l + l + 1/n + 1/l + 3 with l = 2k + 2; caps |S(m, n)| for ordinary m."""
    l = 2 * k + 2
    return Fraction(2 * n, l) + l + Fraction(1, n) + Fraction(1, l) + 3


def skn_bounds(k: int, n: int) -> tuple[Fraction, Fraction]:
    """Lower and upper bounds on S(k, n) from reciprocity and |S(n, k)| <= S(1, k)."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    if gcd(k, n) != 1:
        raise NotCoprimeError(f"gcd({k}, {n}) != 1")
    kn = k * n
    lower = Fraction(n * n - (k * k + 2) * n + k * k + 1, kn)
    upper = Fraction(n * n + (k * k - 6 * k + 2) * n + k * k + 1, kn)
    return lower, upper


def nonordinary_deviation_bound(d: int, q: int, n: int, k: int) -> Fraction:
    """d + |q| + d/(n|q|) + |q|/(nd) + 3, a cap on |S(m, n) - n/(dq)|."""
    l = 2 * k + 2
    aq = abs(q)
    if q == 0 or aq >= l or not 1 <= d <= l or n < l:
        raise ValueError(f"need 0 < |q| < {l}, 1 <= d <= {l}, n >= {l}; got d={d}, q={q}, n={n}")
    return d + aq + Fraction(d, n * aq) + Fraction(aq, n * d) + 3


# -- scans -------------------------------------------------------------------

def _default_workers() -> int:
    return os.cpu_count() or 1


def _top_chunk(n: int, lo: int, hi: int, top: int) -> list[tuple[int, int]]:
    rows = (
        (dedekind_fast_scaled(m, n), -m)
        for m in range(lo, hi)
        if gcd(m, n) == 1
    )
    return heapq.nlargest(top, rows)


def _chunks(lo: int, hi: int, parts: int):
    size = max(1, -(-(hi - lo) // parts))
    for start in range(lo, hi, size):
        yield start, min(hi, start + size)


def scan_top(n: int, top: int, workers: int | None = None) -> list[tuple[int, Fraction]]:
    """The ``top`` largest S(m, n) over coprime m, ties broken by ascending m.

    The m-range is split into contiguous chunks; each chunk keeps its own top
    rows and the merge re-sorts, so the result does not depend on ``workers``.
    """
    if n < 2 or top < 1:
        raise ValueError(f"need n >= 2 and top >= 1, got n={n}, top={top}")
    workers = workers or _default_workers()
    if workers == 1 or n < 50_000:
        best = _top_chunk(n, 1, n, top)
    else:
        spans = list(_chunks(1, n, workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_top_chunk, *zip(*((n, lo, hi, top) for lo, hi in spans)))
            best = heapq.nlargest(top, (row for part in parts for row in part))
    return [(-neg_m, Fraction(scaled, n)) for scaled, neg_m in best]


def _run_per_n(check, ns, workers):
    workers = workers or 1
    if workers == 1 or len(ns) < 2:
        return [check(n) for n in ns]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(check, ns, chunksize=max(1, len(ns) // (workers * 8))))


def _theorem1_at(args) -> list[tuple[int, int, Fraction, Fraction]]:
    k, n = args
    allowed = {cand.m for cand in candidate_set(k, n)}
    ref = dedekind_fast_scaled(k, n)
    out = []
    for m in range(1, n):
        if m in allowed or gcd(m, n) != 1:
            continue
        scaled = dedekind_fast_scaled(m, n)
        if scaled >= ref:
            out.append((m, n, Fraction(scaled, n), Fraction(ref, n)))
    return out


def verify_theorem1(k: int, n_from: int, n_to: int, workers: int | None = 1) -> VerifyReport:
    """Check {m : S(m, n) >= S(k, n)} is inside the candidate set, for each n in range.

    n below k + 1 or sharing a factor with k is skipped.  Violations are data,
    since the inclusion is only promised for sufficiently large n.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    report = VerifyReport(parameter_range=f"k={k}, n={n_from}..{n_to}")
    ns = [n for n in range(max(n_from, k + 1, 2), n_to + 1) if gcd(k, n) == 1]
    for found in _run_per_n(_theorem1_at, [(k, n) for n in ns], workers):
        report.violations.extend(found)
    report.checked_count = len(ns)
    return report


def _theorem2_at(n: int) -> list[tuple[int, int, Fraction, Fraction]]:
    ref = dedekind_fast_scaled(2, n)
    partner = (n + 1) // 2
    out = []
    if dedekind_fast_scaled(partner, n) != ref:
        out.append((partner, n, dedekind_fast(partner, n), Fraction(ref, n)))
    for m in range(3, n):
        if m == partner or gcd(m, n) != 1:
            continue
        scaled = dedekind_fast_scaled(m, n)
        if scaled >= ref:
            out.append((m, n, Fraction(scaled, n), Fraction(ref, n)))
    return out


def verify_theorem2(n_from: int, n_to: int, workers: int | None = 1) -> VerifyReport:
    """For odd n >= 3: S(2, n) > S(m, n) for 3 <= m < n, m != (n+1)/2, and S((n+1)/2, n) = S(2, n)."""
    report = VerifyReport(parameter_range=f"odd n={n_from}..{n_to}")
    ns = [n for n in range(max(n_from, 3), n_to + 1) if n % 2]
    for found in _run_per_n(_theorem2_at, ns, workers):
        report.violations.extend(found)
    report.checked_count = len(ns)
    return report


# -- explicit thresholds -----------------------------------------------------

def _first_from(start: int, holds) -> int:
    n = start
    while not holds(n):
        n += 1
    return n


def theorem2_thresholds() -> tuple[int, int]:
    """Least n >= 3 with n/3 + 19/2 < S(2, n), and with n/3 + 19 < S(2, n).

    S(2, n) = (n^2 - 6n + 5)/(2n) here; both differences are increasing for
    n >= 3, so the first n that works keeps working.
    """
    def s2(n):
        return Fraction(n * n - 6 * n + 5, 2 * n)

    ordinary = _first_from(3, lambda n: Fraction(n, 3) + Fraction(19, 2) < s2(n))
    near = _first_from(3, lambda n: Fraction(n, 3) + 19 < s2(n))
    return ordinary, near


def theorem1_threshold(k: int) -> int:
    """An n from which the candidate-set inclusion is guaranteed by the explicit bounds.

    Every m outside the candidate set has S(m, n) <= n/(k+1) + 2l + 2l/n + 3
    (ordinary m have the smaller constant l + 1/n + 1/l + 3), so it suffices
    that this stays below the lower bound on S(k, n).  The gap grows with n.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    l = 2 * k + 2

    def holds(n):
        lower = Fraction(n * n - (k * k + 2) * n + k * k + 1, k * n)
        return Fraction(n, k + 1) + 2 * l + Fraction(2 * l, n) + 3 < lower

    return _first_from(l + 1, holds)
