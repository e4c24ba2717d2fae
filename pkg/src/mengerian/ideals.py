"""Monomial ideals of clutters: powers, symbolic powers, torsion-freeness.

Monomials are exponent tuples. Symbolic powers of a square-free monomial
ideal are computed two independent ways:

* the defining intersection of powers of minimal-cover primes, and
* direct enumeration of the minimal exponent vectors whose degree sum
  over every minimal cover reaches k (the fast path).

Both routes are exact; the test suite cross-asserts them. The headline
operation decides I^k = I^(k) for k up to ceil(mu/2), which settles the
normally-torsion-free question, and with it the Mengerian one, exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Sequence

from .clutters import Clutter, minimal_covers

Monomial = tuple[int, ...]


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def total_degree(a: Monomial) -> int:
    return sum(a)


def format_monomial(a: Monomial, labels: Optional[Sequence[str]] = None) -> str:
    parts = []
    for i, e in enumerate(a):
        if e == 0:
            continue
        name = labels[i] if labels else f"x{i + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def minimalize_generators(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Unique minimal generating set: drop every multiple of another generator."""
    uniq = sorted(set(gens), key=lambda g: (total_degree(g), g))
    kept: list[Monomial] = []
    for g in uniq:
        dg = total_degree(g)
        if not any(divides(h, g) for h in kept if total_degree(h) < dg):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its unique minimal generating set."""

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.n:
                raise ValueError("generator arity must match the variable count")
            if any(e < 0 for e in g):
                raise ValueError("exponents must be nonnegative")
        norm = minimalize_generators(self.gens)
        if norm != self.gens:
            raise ValueError("generators are not a minimal generating set")

    @property
    def mu(self) -> int:
        return len(self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)


def ideal(n: int, gens: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal(n, minimalize_generators(gens))


def edge_ideal(c: Clutter) -> MonomialIdeal:
    """Square-free generator per hyperedge; the empty clutter gives (0)."""
    if c.unit:
        raise ValueError("the unit clutter corresponds to the unit ideal, not an edge ideal")
    gens = [tuple(1 if v in e else 0 for v in range(c.n)) for e in c.edges]
    return MonomialIdeal(c.n, tuple(sorted(gens)))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """Minimal generators of I^k from all k-fold generator products."""
    if k < 1:
        raise ValueError("power exponent must be positive")
    if I.is_zero:
        return I
    prods = set()
    for combo in combinations_with_replacement(I.gens, k):
        m = combo[0]
        for g in combo[1:]:
            m = mono_mul(m, g)
        prods.add(m)
    return MonomialIdeal(I.n, minimalize_generators(prods))


def prime_power(cover: Sequence[int], k: int, n: int) -> MonomialIdeal:
    """Minimal generators of P^k for the monomial prime on the cover variables."""
    cover = tuple(sorted(set(cover)))
    if not cover:
        raise ValueError("a prime needs at least one variable")
    if any(not 0 <= v < n for v in cover):
        raise ValueError("cover variable out of range")
    if k < 1:
        raise ValueError("power exponent must be positive")
    gens = []
    for split in combinations_with_replacement(cover, k):
        g = [0] * n
        for v in split:
            g[v] += 1
        gens.append(tuple(g))
    return MonomialIdeal(n, tuple(sorted(gens)))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I cap J = minimalized pairwise lcms of the generators."""
    if I.n != J.n:
        raise ValueError("ideals live in different polynomial rings")
    if I.is_zero or J.is_zero:
        return MonomialIdeal(I.n, ())
    lcms = {mono_lcm(f, g) for f in I.gens for g in J.gens}
    return MonomialIdeal(I.n, minimalize_generators(lcms))


def cover_degree_ok(m: Monomial, covers: Sequence[tuple[int, ...]], k: int) -> bool:
    """Membership in the k-th symbolic power: every minimal cover sees degree >= k."""
    return all(sum(m[v] for v in cov) >= k for cov in covers)


def _minimal_cover_vectors(covers: Sequence[tuple[int, ...]], k: int, n: int) -> list[Monomial]:
    """Minimal exponent vectors with degree sum >= k on every cover.

    Depth-first completion: repair the first deficient cover by single
    increments, capped at k per coordinate (truncating any exponent to k
    never leaves the solution set, so minimal vectors stay below the cap).
    Visited states are memoized; minimality is the local test that every
    positive coordinate sits on some cover that is tight at k.
    """
    start = (0,) * n
    seen: set[Monomial] = set()
    sols: list[Monomial] = []
    stack = [start]
    while stack:
        e = stack.pop()
        if e in seen:
            continue
        seen.add(e)
        deficient = next((cov for cov in covers if sum(e[v] for v in cov) < k), None)
        if deficient is None:
            sols.append(e)
            continue
        for v in deficient:
            if e[v] < k:
                stack.append(e[:v] + (e[v] + 1,) + e[v + 1:])
    out = []
    for e in sols:
        minimal = True
        for v in range(n):
            if e[v] and not any(v in cov and sum(e[u] for u in cov) == k for cov in covers):
                minimal = False
                break
        if minimal:
            out.append(e)
    return out


def symbolic_power(c: Clutter, k: int, method: str = "cover-degrees") -> MonomialIdeal:
    """k-th symbolic power of the edge ideal of c.

    method="intersection" folds the powers of the minimal-cover primes,
    smallest covers first; method="cover-degrees" enumerates the minimal
    exponent vectors directly. The two agree and are cross-checked in the
    test suite.
    """
    if c.unit:
        raise ValueError("the unit clutter has no symbolic powers")
    if c.is_empty:
        raise ValueError("the zero ideal has no symbolic powers here")
    if k < 1:
        raise ValueError("power exponent must be positive")
    covers = minimal_covers(c)
    if method == "cover-degrees":
        gens = _minimal_cover_vectors(covers, k, c.n)
        return MonomialIdeal(c.n, tuple(sorted(gens)))
    if method == "intersection":
        acc: Optional[MonomialIdeal] = None
        for cov in sorted(covers, key=lambda t: (len(t), t)):
            pk = prime_power(cov, k, c.n)
            acc = pk if acc is None else intersect(acc, pk)
        assert acc is not None
        return acc
    raise ValueError(f"unknown method {method!r}")


def member_of_power(m: Monomial, I: MonomialIdeal, k: int) -> bool:
    """Does some product of k generators (with repetition) divide m?

    Depth-first over generators with divisibility and degree pruning,
    memoized on the remaining exponent budget.
    """
    if k < 1:
        raise ValueError("power exponent must be positive")
    if I.is_zero:
        return False
    if len(m) != I.n:
        raise ValueError("monomial arity mismatch")
    gens = I.gens
    min_deg = min(total_degree(g) for g in gens)
    memo: dict[tuple[Monomial, int], bool] = {}

    def search(rem: Monomial, depth: int) -> bool:
        if depth == 0:
            return True
        if total_degree(rem) < depth * min_deg:
            return False
        key = (rem, depth)
        hit = memo.get(key)
        if hit is not None:
            return hit
        ok = False
        for g in gens:
            if divides(g, rem) and search(tuple(r - x for r, x in zip(rem, g)), depth - 1):
                ok = True
                break
        memo[key] = ok
        return ok

    return search(m, k)


@dataclass(frozen=True)
class PowerEquality:
    equal: bool
    k: int
    violation: Optional[Monomial] = None


def powers_equal(c: Clutter, k: int) -> PowerEquality:
    """Decide I^k = I^(k).

    The ordinary power always sits inside the symbolic one, so equality
    holds iff every minimal generator of the symbolic power factors into
    k edge generators. The first failing generator is the certificate.
    """
    if c.unit or c.is_empty:
        raise ValueError("powers_equal needs a nonempty proper clutter")
    if k == 1:
        return PowerEquality(True, 1)
    I = edge_ideal(c)
    sym = symbolic_power(c, k)
    for g in sym.gens:
        if not member_of_power(g, I, k):
            return PowerEquality(False, k, g)
    return PowerEquality(True, k)


@dataclass(frozen=True)
class NtfResult:
    """Verdict of the exact normally-torsion-free decision.

    normally_torsion_free is equivalent to the Mengerian property of the
    underlying clutter. checked_k lists the exponents whose power equality
    was verified; the bound ceil(mu/2) makes the finite check conclusive.
    """

    normally_torsion_free: bool
    mu: int
    bound: int
    checked_k: tuple[int, ...]
    violation: Optional[PowerEquality] = None

    def __bool__(self):
        return self.normally_torsion_free


def is_normally_torsion_free(c: Clutter) -> NtfResult:
    """Exact decision via power equality for k = 2 .. ceil(mu/2)."""
    if c.unit:
        raise ValueError("the unit clutter is outside the torsion-free test")
    if c.is_empty:
        return NtfResult(True, 0, 0, ())
    mu = c.m
    bound = (mu + 1) // 2
    checked = []
    for k in range(2, bound + 1):
        res = powers_equal(c, k)
        checked.append(k)
        if not res.equal:
            return NtfResult(False, mu, bound, tuple(checked), res)
    return NtfResult(True, mu, bound, tuple(checked))
