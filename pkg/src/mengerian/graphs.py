"""Finite simple graphs: parsing, standard families, path hypergraphs.

Vertices are 0-based internally; every external text format (edge lists,
reports, labels) is 1-based, matching the usual x_1 ... x_n naming.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

from .clutters import Clutter

CANONICAL_MAX_N = 9


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u + 1}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


def graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a Graph from any iterable of vertex pairs."""
    norm = frozenset((min(u, v), max(u, v)) for u, v in edges)
    return Graph(n, norm)


def adjacency(g: Graph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the vertex permutation v -> perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of the vertex set")
    return graph(g.n, ((perm[u], perm[v]) for u, v in g.edges))


def is_connected(g: Graph) -> bool:
    """True iff g has a single connected component (one vertex counts)."""
    adj = adjacency(g)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


# ---------------------------------------------------------------------------
# parsing and serialization

def parse_edge_list(text: str) -> Graph:
    """Parse a line-oriented edge list with 1-based labels.

    Lines hold two labels "u v"; '#' starts a comment; an optional header
    "n <count>" fixes the vertex count. Duplicate edges are dropped with a
    warning, loops and out-of-range labels are errors.
    """
    declared: Optional[int] = None
    edges: set[tuple[int, int]] = set()
    max_label = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if declared is not None or edges:
                raise ValueError(f"line {lineno}: header must come first")
            if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                raise ValueError(f"line {lineno}: malformed header {line!r}")
            declared = int(parts[1])
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two labels, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer label in {line!r}") from None
        if u < 1 or v < 1:
            raise ValueError(f"line {lineno}: labels are 1-based positive integers")
        if u == v:
            raise ValueError(f"line {lineno}: loop edge {u} {v}")
        if declared is not None and max(u, v) > declared:
            raise ValueError(f"line {lineno}: label {max(u, v)} exceeds declared n={declared}")
        e = (min(u, v) - 1, max(u, v) - 1)
        if e in edges:
            warnings.warn(f"line {lineno}: duplicate edge {u} {v} ignored", stacklevel=2)
        edges.add(e)
        max_label = max(max_label, u, v)
    n = declared if declared is not None else max_label
    if n == 0:
        raise ValueError("empty edge list and no header")
    return Graph(n, frozenset(edges))


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u + 1} {v + 1}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def _g6_pairs(n: int) -> list[tuple[int, int]]:
    # graph6 bit order: (0,1), (0,2), (1,2), (0,3), ... column by column
    return [(i, j) for j in range(1, n) for i in range(j)]


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional >>graph6<< header)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    for ch, v in zip(s, data):
        if not 0 <= v <= 63:
            raise ValueError(f"invalid graph6 byte {ord(ch)}")
    if data[0] <= 62:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[0] == 63 and data[1] <= 62:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise ValueError("unsupported or truncated graph6 size prefix")
    if n < 1:
        raise ValueError("graph6 graph must have at least one vertex")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ValueError("graph6 body length does not match vertex count")
    bits = []
    for v in body:
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 body")
    edges = {pair for pair, bit in zip(_g6_pairs(n), bits) if bit}
    return Graph(n, frozenset(edges))


def to_graph6(g: Graph) -> str:
    """Encode as graph6; round-trips with parse_graph6 bit for bit."""
    n = g.n
    if n <= 62:
        prefix = chr(n + 63)
    elif n <= 258047:
        prefix = chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise ValueError("graph too large for the supported graph6 sizes")
    bits = [1 if pair in g.edges else 0 for pair in _g6_pairs(n)]
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3
                       | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5]))
             for i in range(0, len(bits), 6)]
    return prefix + "".join(chars)


def to_dot(g: Graph, values: Optional[Sequence] = None, name: str = "G") -> str:
    """DOT rendering; optional per-vertex values become label annotations."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = f"x{v + 1}"
        if values is not None:
            label += f" = {values[v]}"
        lines.append(f'  {v + 1} [label="{label}"];')
    for u, v in sorted(g.edges):
        lines.append(f"  {u + 1} -- {v + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# standard families

def make_family(name: str, params: Sequence[int]) -> Graph:
    """Construct a named family member with its documented numbering.

    path k       vertices 1..k in order
    cycle k      k >= 3, ring 1..k
    star k       center 1, leaves 2..k+1
    double_star p q   adjacent centers 1, 2; p leaves on 1, q leaves on 2
    spider l1 l2 ...  center 1, legs appended one after another
    star_plus_edge k  star with k >= 2 leaves plus the edge {2, 3}
    complete k   all pairs
    """
    params = list(params)
    if name == "path":
        (k,) = params
        if k < 1:
            raise ValueError("path needs k >= 1")
        return graph(k, ((i, i + 1) for i in range(k - 1)))
    if name == "cycle":
        (k,) = params
        if k < 3:
            raise ValueError("cycle needs k >= 3")
        return graph(k, ((i, (i + 1) % k) for i in range(k)))
    if name == "star":
        (k,) = params
        if k < 1:
            raise ValueError("star needs at least one leaf")
        return graph(k + 1, ((0, i) for i in range(1, k + 1)))
    if name == "double_star":
        p, q = params
        if p < 1 or q < 1:
            raise ValueError("double_star needs positive leaf counts")
        edges = [(0, 1)]
        edges += [(0, 2 + i) for i in range(p)]
        edges += [(1, 2 + p + i) for i in range(q)]
        return graph(p + q + 2, edges)
    if name == "spider":
        legs = params
        if not legs or any(l < 1 for l in legs):
            raise ValueError("spider needs positive leg lengths")
        edges = []
        nxt = 1
        for leg in legs:
            prev = 0
            for _ in range(leg):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
        return graph(nxt, edges)
    if name == "star_plus_edge":
        (k,) = params
        if k < 2:
            raise ValueError("star_plus_edge needs at least two leaves")
        edges = [(0, i) for i in range(1, k + 1)] + [(1, 2)]
        return graph(k + 1, edges)
    if name == "complete":
        (k,) = params
        if k < 1:
            raise ValueError("complete needs k >= 1")
        return graph(k, combinations(range(k), 2))
    raise ValueError(f"unknown family {name!r}")


# ---------------------------------------------------------------------------
# path hypergraphs

def path_vertex_sets(g: Graph, t: int) -> set[frozenset[int]]:
    """Vertex sets of all simple paths with exactly t edges."""
    if t < 1:
        raise ValueError("path length t must be >= 1")
    adj = adjacency(g)
    found: set[frozenset[int]] = set()
    path: list[int] = []

    def extend(v: int, visited: set[int]):
        path.append(v)
        visited.add(v)
        if len(path) == t + 1:
            found.add(frozenset(path))
        else:
            for w in adj[v]:
                if w not in visited:
                    extend(w, visited)
        visited.discard(v)
        path.pop()

    for v in range(g.n):
        extend(v, set())
    return found


def build_path_hypergraph(g: Graph, t: int = 3) -> Clutter:
    """The (t+1)-uniform hypergraph whose edges span a t-edge path in g.

    The vertex set is all of V(g); graphs with no t-edge path give the
    empty clutter, which downstream checks treat as vacuously Mengerian.
    """
    sets = path_vertex_sets(g, t)
    edges = sorted(tuple(sorted(s)) for s in sets)
    labels = tuple(f"x{i + 1}" for i in range(g.n))
    return Clutter(g.n, tuple(edges), labels)


# ---------------------------------------------------------------------------
# canonical labeling

def canonical_form(g: Graph, max_n: int = CANONICAL_MAX_N) -> bytes:
    """Isomorphism-invariant label: lexicographic minimum adjacency bits.

    Full permutation scan, so identical output iff isomorphic; intended
    for small graphs only (the factorial cost is capped by max_n).
    """
    if g.n > max_n:
        raise ValueError(f"canonical_form capped at n <= {max_n}, got {g.n}")
    n = g.n
    pairs = list(combinations(range(n), 2))
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    best: Optional[int] = None
    for perm in permutations(range(n)):
        bits = 0
        for idx, (i, j) in enumerate(pairs):
            if adj[perm[i]] >> perm[j] & 1:
                bits |= 1 << idx
        if best is None or bits < best:
            best = bits
    nbytes = (len(pairs) + 7) // 8 if pairs else 0
    return bytes([n]) + (best or 0).to_bytes(nbytes, "big")
