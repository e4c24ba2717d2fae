"""Clutters (simple hypergraphs) and their combinatorial optimization.

A clutter stores an antichain of hyperedges over labeled vertices. The
degenerate result of contracting a whole edge away is the UNIT clutter,
flagged explicitly; it corresponds to the unit ideal and is excluded from
covering and Konig computations.

All solvers here are exact. Branch and bound is used for tau, nu and the
two integer sides of the min-max equation; brute subset scans survive in
the test suite as independent oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

from . import linalg


@dataclass(frozen=True)
class Clutter:
    """Antichain of hyperedges on vertices 0..n-1 with display labels."""

    n: int
    edges: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = ()
    unit: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"x{i + 1}" for i in range(self.n)))
        if len(self.labels) != self.n:
            raise ValueError("label count must match vertex count")
        if self.unit:
            if self.edges:
                raise ValueError("the unit clutter carries no edge list")
            return
        norm = tuple(sorted(set(tuple(sorted(set(e))) for e in self.edges)))
        object.__setattr__(self, "edges", norm)
        for e in norm:
            if not e:
                raise ValueError("empty edge: use unit_clutter or minimalize")
            if e[0] < 0 or e[-1] >= self.n:
                raise ValueError(f"edge {e} out of range for n={self.n}")
        for i, e in enumerate(norm):
            se = set(e)
            for f in norm:
                if f is not e and set(f) <= se:
                    raise ValueError(f"not an antichain: {f} is contained in {e}")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def is_empty(self) -> bool:
        return not self.unit and not self.edges

    @property
    def uniformity(self) -> Optional[int]:
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def edge_masks(self) -> list[int]:
        return [_mask(e) for e in self.edges]


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def unit_clutter(n: int, labels: Sequence[str] = ()) -> Clutter:
    return Clutter(n, (), tuple(labels), unit=True)


def minimalize(edges: Iterable[Iterable[int]], n: int, labels: Sequence[str] = ()) -> Clutter:
    """Drop dominated edges and duplicates; the empty edge yields UNIT."""
    cand = sorted(set(tuple(sorted(set(e))) for e in edges), key=lambda e: (len(e), e))
    if cand and not cand[0]:
        return unit_clutter(n, labels)
    kept: list[tuple[int, ...]] = []
    kept_sets: list[set[int]] = []
    for e in cand:
        se = set(e)
        if not any(k <= se for k in kept_sets):
            kept.append(e)
            kept_sets.append(se)
    return Clutter(n, tuple(kept), tuple(labels))


def _require_proper(c: Clutter, op: str) -> None:
    if c.unit:
        raise ValueError(f"{op} is undefined for the unit clutter")


def incidence_matrix(c: Clutter) -> linalg.Matrix:
    """0/1 edge-vertex incidence; rows follow the sorted edge order."""
    _require_proper(c, "incidence_matrix")
    rows = [[1 if v in e else 0 for v in range(c.n)] for e in c.edges]
    return linalg.Matrix(rows, n=c.n)


# ---------------------------------------------------------------------------
# minors

def minor(c: Clutter, deleted: Iterable[int] = (), contracted: Iterable[int] = ()) -> Clutter:
    """Delete and contract disjoint vertex sets; order never matters.

    Deletion drops every edge through the vertex, contraction removes the
    vertex from each edge, and the result is minimalized. Vertices keep
    their labels, so certificates stay readable after relabeling.
    """
    D, C = set(deleted), set(contracted)
    if D & C:
        raise ValueError("deleted and contracted sets must be disjoint")
    for v in D | C:
        if not 0 <= v < c.n:
            raise ValueError(f"vertex {v} out of range")
    keep = [v for v in range(c.n) if v not in D and v not in C]
    labels = tuple(c.labels[v] for v in keep)
    if c.unit:
        return unit_clutter(len(keep), labels)
    remap = {v: i for i, v in enumerate(keep)}
    new_edges = []
    for e in c.edges:
        if D.intersection(e):
            continue
        new_edges.append(tuple(remap[v] for v in e if v not in C))
    return minimalize(new_edges, len(keep), labels)


def delete(c: Clutter, v: int) -> Clutter:
    return minor(c, deleted=(v,))


def contract(c: Clutter, v: int) -> Clutter:
    return minor(c, contracted=(v,))


@dataclass(frozen=True)
class Minor:
    deleted: tuple[int, ...]
    contracted: tuple[int, ...]
    clutter: Clutter


def minors(c: Clutter) -> Iterator[Minor]:
    """All 3^n (delete set, contract set) minors, in deterministic order."""
    for assignment in product((0, 1, 2), repeat=c.n):
        D = tuple(v for v, a in enumerate(assignment) if a == 1)
        C = tuple(v for v, a in enumerate(assignment) if a == 2)
        yield Minor(D, C, minor(c, D, C))


def duplicate(c: Clutter, multiplicities: Sequence[int]) -> Clutter:
    """Vertex multiplication: a_i = 0 deletes, a_i = k makes k parallel copies.

    Copy labels keep the original name with a copy suffix so that covers
    and packings of the blown-up clutter remain interpretable.
    """
    if len(multiplicities) != c.n:
        raise ValueError("multiplicity vector length must equal the vertex count")
    if any(a < 0 for a in multiplicities):
        raise ValueError("multiplicities must be nonnegative")
    copies: list[list[int]] = []
    labels: list[str] = []
    nxt = 0
    for v in range(c.n):
        a = multiplicities[v]
        mine = []
        for i in range(a):
            mine.append(nxt)
            labels.append(c.labels[v] if a == 1 else f"{c.labels[v]}.{i + 1}")
            nxt += 1
        copies.append(mine)
    if c.unit:
        return unit_clutter(nxt, labels)
    new_edges: list[tuple[int, ...]] = []
    for e in c.edges:
        if any(not copies[v] for v in e):
            continue
        for choice in product(*(copies[v] for v in e)):
            new_edges.append(tuple(sorted(choice)))
    return minimalize(new_edges, nxt, labels)


# ---------------------------------------------------------------------------
# covers and matchings

def tau(c: Clutter) -> int:
    """Minimum vertex cover size, by branch and bound on uncovered edges."""
    _require_proper(c, "tau")
    masks = c.edge_masks()
    if not masks:
        return 0
    best = _greedy_cover_size(masks)

    def search(remaining: list[int], depth: int):
        nonlocal best
        if not remaining:
            best = min(best, depth)
            return
        if depth + _greedy_matching_size(remaining) >= best:
            return
        e = min(remaining, key=_popcount)
        for v in _bits(e):
            bit = 1 << v
            search([r for r in remaining if not r & bit], depth + 1)

    search(masks, 0)
    return best


def nu(c: Clutter) -> int:
    """Maximum number of pairwise disjoint edges, exact branch and bound."""
    _require_proper(c, "nu")
    masks = c.edge_masks()
    best = 0

    def search(idx: int, used: int, count: int):
        nonlocal best
        if count + len(masks) - idx <= best:
            return
        if idx == len(masks):
            best = max(best, count)
            return
        if not masks[idx] & used:
            search(idx + 1, used | masks[idx], count + 1)
        search(idx + 1, used, count)

    search(0, 0, 0)
    return best


def _popcount(x: int) -> int:
    return x.bit_count()


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _greedy_cover_size(masks: list[int]) -> int:
    remaining = list(masks)
    size = 0
    while remaining:
        counts: dict[int, int] = {}
        for e in remaining:
            for v in _bits(e):
                counts[v] = counts.get(v, 0) + 1
        v = max(sorted(counts), key=lambda u: counts[u])
        bit = 1 << v
        remaining = [e for e in remaining if not e & bit]
        size += 1
    return size


def _greedy_matching_size(masks: list[int]) -> int:
    used = 0
    count = 0
    for e in masks:
        if not e & used:
            used |= e
            count += 1
    return count


def minimal_covers(c: Clutter) -> tuple[tuple[int, ...], ...]:
    """All inclusion-minimal vertex covers via sequential transversal growth."""
    _require_proper(c, "minimal_covers")
    partial: list[int] = [0]
    for e in c.edge_masks():
        nxt: list[int] = []
        for t in partial:
            if t & e:
                nxt.append(t)
            else:
                nxt.extend(t | (1 << v) for v in _bits(e))
        # keep antichain only
        nxt = sorted(set(nxt), key=_popcount)
        kept: list[int] = []
        for t in nxt:
            if not any(k & t == k for k in kept):
                kept.append(t)
        partial = kept
    covers = sorted(tuple(sorted(_bits(t))) for t in partial)
    return tuple(sorted(covers, key=lambda t: (len(t), t)))


def has_konig(c: Clutter) -> bool:
    """tau == nu."""
    _require_proper(c, "has_konig")
    return tau(c) == nu(c)


def has_packing(c: Clutter) -> bool:
    """Konig for the clutter and every non-unit minor."""
    _require_proper(c, "has_packing")
    for mn in minors(c):
        if mn.clutter.unit:
            continue
        if not has_konig(mn.clutter):
            return False
    return True


# ---------------------------------------------------------------------------
# weighted min-max probing

def weighted_cover_min(c: Clutter, cost: Sequence[int]) -> int:
    """min <cost, x> over 0/1 covers x of every edge.

    The 0/1 restriction is harmless: with a 0/1 constraint matrix and
    right-hand side 1, raising any x_i above 1 never helps.
    """
    _require_proper(c, "weighted_cover_min")
    _check_cost(c, cost)
    free = _mask(v for v in range(c.n) if cost[v] == 0)
    remaining = [e for e in c.edge_masks() if not e & free]
    if not remaining:
        return 0
    best = sum(cost)

    def search(rem: list[int], acc: int):
        nonlocal best
        if acc >= best:
            return
        if not rem:
            best = acc
            return
        e = min(rem, key=_popcount)
        for v in sorted(_bits(e), key=lambda u: cost[u]):
            bit = 1 << v
            search([r for r in rem if not r & bit], acc + cost[v])

    search(remaining, 0)
    return best


def max_integer_packing(c: Clutter, cost: Sequence[int]) -> int:
    """max sum(y) over nonnegative integer edge multiplicities y with
    column loads at most cost, by bounded depth-first search."""
    _require_proper(c, "max_integer_packing")
    _check_cost(c, cost)
    edges = c.edges
    if not edges:
        return 0
    best = 0

    def bound(idx: int, cap: list[int]) -> int:
        return sum(min(cap[v] for v in edges[i]) for i in range(idx, len(edges)))

    def search(idx: int, cap: list[int], acc: int):
        nonlocal best
        if idx == len(edges):
            best = max(best, acc)
            return
        if acc + bound(idx, cap) <= best:
            return
        top = min(cap[v] for v in edges[idx])
        for y in range(top, -1, -1):
            if y:
                for v in edges[idx]:
                    cap[v] -= y
            search(idx + 1, cap, acc + y)
            if y:
                for v in edges[idx]:
                    cap[v] += y

    search(0, list(cost), 0)
    return best


def _check_cost(c: Clutter, cost: Sequence[int]) -> None:
    if len(cost) != c.n:
        raise ValueError("cost vector length must equal the vertex count")
    if any(not isinstance(x, int) or x < 0 for x in cost):
        raise ValueError("costs must be nonnegative integers")


@dataclass(frozen=True)
class MengerianProbe:
    """Outcome of the bounded min-max scan.

    refuted=True carries the first cost vector whose integer covering
    minimum exceeds the integer packing maximum; refuted=False means the
    scan is merely inconclusive (the exact decision lives with the
    normally-torsion-free test).
    """

    refuted: bool
    cost: Optional[tuple[int, ...]] = None
    cover_min: Optional[int] = None
    packing_max: Optional[int] = None

    @property
    def undecided(self) -> bool:
        return not self.refuted


def mengerian_bounded(c: Clutter, cmax: int) -> MengerianProbe:
    """Scan all cost vectors in {0..cmax}^n for a min-max gap."""
    _require_proper(c, "mengerian_bounded")
    if cmax < 1:
        raise ValueError("cmax must be positive")
    for cost in product(range(cmax + 1), repeat=c.n):
        wc = weighted_cover_min(c, cost)
        mp = max_integer_packing(c, cost)
        if mp < wc:
            return MengerianProbe(True, cost, wc, mp)
    return MengerianProbe(False)


# ---------------------------------------------------------------------------
# serialization

def to_text(c: Clutter) -> str:
    """Line format: header "n m", then one sorted 1-based edge per line."""
    _require_proper(c, "to_text")
    lines = [f"{c.n} {c.m}"]
    lines += [" ".join(str(v + 1) for v in e) for e in c.edges]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Clutter:
    lines = [ln for ln in (raw.split("#", 1)[0].strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty clutter text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edges, found {len(lines) - 1}")
    edges = [tuple(int(tok) - 1 for tok in ln.split()) for ln in lines[1:]]
    return minimalize(edges, n)


def to_json_dict(c: Clutter) -> dict:
    return {
        "n": c.n,
        "labels": list(c.labels),
        "unit": c.unit,
        "edges": [[v + 1 for v in e] for e in c.edges],
    }


def from_json_dict(d: dict) -> Clutter:
    labels = tuple(d.get("labels", ()))
    if d.get("unit"):
        return unit_clutter(d["n"], labels)
    edges = [tuple(v - 1 for v in e) for e in d["edges"]]
    return Clutter(d["n"], tuple(edges), labels)
