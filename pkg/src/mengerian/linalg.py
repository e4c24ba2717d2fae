"""Exact rational linear algebra for covering polyhedra.

All arithmetic is over Python ints and ``fractions.Fraction``; nothing here
ever rounds. Determinants use fraction-free (Bareiss) elimination, total
unimodularity is decided by an exhaustive subdeterminant scan with an
explicit witness on failure, and the vertices of a covering polyhedron
Q(A) = {x >= 0, Ax >= 1} are enumerated exactly from tight full-rank
subsystems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Iterator, Optional, Sequence


def _exact(x) -> int | Fraction:
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, str):
        f = Fraction(x)
        return int(f) if f.denominator == 1 else f
    raise TypeError(f"entries must be exact (int, Fraction or 'p/q' string), got {type(x).__name__}")


class Matrix:
    """Immutable dense matrix with exact entries.

    Rows are tuples of ints/Fractions. A matrix with zero rows still
    carries a column count, so incidence matrices of empty hypergraphs
    stay well defined.
    """

    __slots__ = ("m", "n", "rows")

    def __init__(self, rows: Iterable[Iterable], n: Optional[int] = None):
        rs = tuple(tuple(_exact(x) for x in row) for row in rows)
        if rs:
            width = len(rs[0])
            if any(len(r) != width for r in rs):
                raise ValueError("rows have unequal lengths")
            if n is not None and n != width:
                raise ValueError(f"declared {n} columns but rows have {width}")
            n = width
        elif n is None:
            raise ValueError("a matrix with no rows needs an explicit column count")
        self.rows = rs
        self.m = len(rs)
        self.n = n

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Matrix({self.m}x{self.n})"

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows), n=self.m) if self.m else Matrix([[] for _ in range(self.n)] if self.n else [], n=0)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        return Matrix([[self.rows[i][j] for j in col_idx] for i in row_idx], n=len(col_idx))

    def det(self) -> Fraction:
        """Exact determinant by fraction-free elimination.

        Rational rows are scaled to integers first; the Bareiss recurrence
        then stays within the integers, which is asserted at every pivot.
        """
        if self.m != self.n:
            raise ValueError("determinant requires a square matrix")
        if self.m == 0:
            return Fraction(1)
        scaled = []
        scale = 1
        for row in self.rows:
            d = lcm(*(x.denominator if isinstance(x, Fraction) else 1 for x in row)) if row else 1
            scaled.append([int(x * d) for x in row])
            scale *= d
        return Fraction(bareiss_det(scaled), scale)

    def rank(self) -> int:
        return _rank(self.rows, self.n)


def bareiss_det(a: list[list[int]]) -> int:
    """Determinant of an integer matrix; mutates its argument.

    Every interior division in the Bareiss recurrence must be exact; a
    nonzero remainder would mean lost precision and raises immediately.
    """
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                num = rowi[j] * pk - aik * rowk[j]
                q, r = divmod(num, prev)
                if r:
                    raise ArithmeticError("fraction-free elimination produced a non-integer")
                rowi[j] = q
            rowi[k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]


def _rank(rows: Sequence[Sequence], n: int) -> int:
    work = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    col = 0
    while col < n and rank < len(work):
        piv = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if piv is None:
            col += 1
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        inv = 1 / prow[col]
        for i in range(rank + 1, len(work)):
            f = work[i][col] * inv
            if f:
                work[i] = [a - f * b for a, b in zip(work[i], prow)]
        rank += 1
        col += 1
    return rank


def solve(M: Matrix, b: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Solve M x = b when the solution is unique.

    Returns the solution vector, or None when the system is inconsistent.
    Raises ValueError when the system is consistent but underdetermined
    (column rank below the number of unknowns).
    """
    if M.m != len(b):
        raise ValueError("right-hand side length does not match row count")
    n = M.n
    aug = [[Fraction(x) for x in row] + [Fraction(_exact(v))] for row, v in zip(M.rows, b)]
    pivots: list[int] = []
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(aug)) if aug[i][col]), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        prow = aug[rank]
        inv = 1 / prow[col]
        for i in range(len(aug)):
            if i != rank and aug[i][col]:
                f = aug[i][col] * inv
                aug[i] = [a - f * c for a, c in zip(aug[i], prow)]
        pivots.append(col)
        rank += 1
    if any(all(r[j] == 0 for j in range(n)) and r[n] != 0 for r in aug):
        return None
    if rank < n:
        raise ValueError("underdetermined system: column rank below unknown count")
    x = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        x[col] = aug[r][n] / aug[r][col]
    return tuple(x)


# ---------------------------------------------------------------------------
# total unimodularity

@dataclass(frozen=True)
class TUWitness:
    """A square submatrix whose determinant falls outside {0, +-1}."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    det: int


@dataclass(frozen=True)
class TUResult:
    totally_unimodular: bool
    witness: Optional[TUWitness]

    def __bool__(self):
        return self.totally_unimodular


def is_totally_unimodular(M: Matrix) -> TUResult:
    """Exhaustive subdeterminant scan in increasing size with early exit.

    Sizes are scanned from 2 upward (1x1 minors equal the entries, which
    are validated to lie in {0, +-1} up front). At the minimal violating
    size no row or column of the violating submatrix can have fewer than
    two nonzeros, because a Laplace expansion along such a line would
    exhibit a smaller violation; submatrices with a thin line or a
    repeated row are therefore skipped safely.
    """
    for row in M.rows:
        for x in row:
            if x not in (0, 1, -1):
                raise ValueError(f"entry {x!r} outside {{0, 1, -1}}")
    rows = [tuple(int(x) for x in row) for row in M.rows]
    for k in range(2, min(M.m, M.n) + 1):
        for rset in combinations(range(M.m), k):
            chosen = [rows[i] for i in rset]
            if len(set(chosen)) < k:
                continue
            for cset in combinations(range(M.n), k):
                sub = [[row[j] for j in cset] for row in chosen]
                if any(sum(1 for x in r if x) < 2 for r in sub):
                    continue
                if any(sum(1 for r in sub if r[j]) < 2 for j in range(k)):
                    continue
                d = bareiss_det([list(r) for r in sub])
                if d not in (-1, 0, 1):
                    return TUResult(False, TUWitness(rset, cset, d))
    return TUResult(True, None)


def ghouila_houri_check(M: Matrix) -> bool:
    """Independent TU criterion used for cross-validation in tests.

    Every subset of rows must admit a +-1 signing whose signed column sums
    all lie in {-1, 0, 1}. Applied to the transpose when that side is
    smaller; exponential, so only suitable for small matrices.
    """
    A = M if M.m <= M.n else M.transpose()
    rows = [tuple(int(x) for x in row) for row in A.rows]
    n = A.n
    for r in range(1, len(rows) + 1):
        for subset in combinations(range(len(rows)), r):
            if not _signable(tuple(rows[i] for i in subset), n):
                return False
    return True


def _signable(rows: tuple[tuple[int, ...], ...], n: int) -> bool:
    first = rows[0]
    rest = rows[1:]
    for mask in range(1 << len(rest)):
        sums = list(first)
        for i, row in enumerate(rest):
            s = 1 if mask >> i & 1 else -1
            for j in range(n):
                sums[j] += s * row[j]
        if all(-1 <= s <= 1 for s in sums):
            return True
    return False


# ---------------------------------------------------------------------------
# covering polyhedron Q(A) = {x >= 0, Ax >= 1}

@dataclass(frozen=True)
class PolyhedronVertex:
    """A vertex of Q(A) with its full set of tight constraints.

    Constraint indices 0..m-1 are the covering rows <A_i, x> >= 1 and
    m..m+n-1 the nonnegativity rows x_j >= 0. The tight submatrix always
    has column rank n; that is what makes the point a vertex.
    """

    coords: tuple[Fraction, ...]
    tight_rows: tuple[int, ...]

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.coords)


@dataclass(frozen=True)
class IdealityResult:
    ideal: bool
    certificate: Optional[PolyhedronVertex]

    def __bool__(self):
        return self.ideal


def _validate_zero_one(M: Matrix) -> list[tuple[int, ...]]:
    rows = []
    for row in M.rows:
        for x in row:
            if x not in (0, 1):
                raise ValueError("covering systems need a 0/1 matrix")
        rows.append(tuple(int(x) for x in row))
    return rows


def _solve_unit_rhs(mat: list[list[int]]) -> Optional[list[Fraction]]:
    """Solve the square integer system mat * y = 1, or None if singular."""
    size = len(mat)
    aug = [row + [1] for row in mat]
    for k in range(size):
        piv = next((i for i in range(k, size) if aug[i][k]), None)
        if piv is None:
            return None
        if piv != k:
            aug[k], aug[piv] = aug[piv], aug[k]
        # plain integer elimination with row scaling keeps everything exact
        pk = aug[k][k]
        for i in range(k + 1, size):
            aik = aug[i][k]
            if aik:
                aug[i] = [pk * a - aik * b for a, b in zip(aug[i], aug[k])]
    sol = [Fraction(0)] * size
    for i in range(size - 1, -1, -1):
        s = Fraction(aug[i][size])
        for j in range(i + 1, size):
            s -= aug[i][j] * sol[j]
        sol[i] = s / aug[i][i]
    return sol


def tight_constraints(rows: Sequence[tuple[int, ...]], coords: Sequence[Fraction]) -> tuple[int, ...]:
    m = len(rows)
    tight = [i for i, row in enumerate(rows) if sum(c for c, a in zip(coords, row) if a) == 1]
    tight += [m + j for j, c in enumerate(coords) if c == 0]
    return tuple(tight)


def enumerate_covering_vertices(A: Matrix, sparse_first: bool = True) -> Iterator[PolyhedronVertex]:
    """Yield every vertex of Q(A) exactly once, deterministically.

    Bases are all n-subsets of the m + n constraints; each nonsingular
    tight subsystem is solved exactly and kept when feasible. Bases that
    pin more coordinates to zero are visited first when sparse_first is
    set, so sparse vertices surface early.
    """
    rows = _validate_zero_one(A)
    m, n = A.m, A.n
    seen: set[tuple[Fraction, ...]] = set()
    levels = range(n, -1, -1) if sparse_first else range(n + 1)
    for zeros in levels:
        size = n - zeros
        if size > m:
            continue
        for zset in combinations(range(n), zeros):
            zs = set(zset)
            live = [j for j in range(n) if j not in zs]
            reduced = [tuple(row[j] for j in live) for row in rows]
            for tset in combinations(range(m), size):
                sol = _solve_unit_rhs([list(reduced[i]) for i in tset]) if size else []
                if sol is None:
                    continue
                coords = [Fraction(0)] * n
                for j, v in zip(live, sol):
                    coords[j] = v
                key = tuple(coords)
                if key in seen:
                    continue
                if any(v < 0 for v in sol):
                    continue
                if any(sum(c for c, a in zip(coords, row) if a) < 1 for row in rows):
                    continue
                seen.add(key)
                yield PolyhedronVertex(key, tight_constraints(rows, coords))


def covering_polyhedron_vertices(A: Matrix) -> tuple[PolyhedronVertex, ...]:
    """All vertices of Q(A), sorted by coordinates."""
    return tuple(sorted(enumerate_covering_vertices(A), key=lambda v: v.coords))


@dataclass(frozen=True)
class VertexCheck:
    feasible: bool
    tight_rows: tuple[int, ...]
    tight_rank: int
    is_vertex: bool
    is_integral: bool


def verify_vertex(A: Matrix, coords: Sequence) -> VertexCheck:
    """Re-validate a claimed vertex of Q(A) from scratch.

    Checks feasibility exactly, recomputes the full tight set and asserts
    that the tight subsystem has column rank n.
    """
    rows = _validate_zero_one(A)
    pt = [Fraction(_exact(c)) for c in coords]
    if len(pt) != A.n:
        raise ValueError("coordinate count does not match column count")
    feasible = all(c >= 0 for c in pt) and all(
        sum(c for c, a in zip(pt, row) if a) >= 1 for row in rows
    )
    tight = tight_constraints(rows, pt) if feasible else ()
    unit = [0] * A.n
    tight_mat = []
    for idx in tight:
        if idx < A.m:
            tight_mat.append(rows[idx])
        else:
            r = list(unit)
            r[idx - A.m] = 1
            tight_mat.append(tuple(r))
    rk = _rank(tight_mat, A.n) if tight_mat else 0
    return VertexCheck(
        feasible=feasible,
        tight_rows=tight,
        tight_rank=rk,
        is_vertex=feasible and rk == A.n,
        is_integral=all(c.denominator == 1 for c in pt),
    )


def _pattern_vertices(supports: list[frozenset[int]], n: int) -> Optional[PolyhedronVertex]:
    """Fast search for fractional vertices that are uniform on their support.

    Points of the form (1/q on S, 0 elsewhere) cover every fractional
    certificate arising from odd cover structures. Purely an accelerator:
    hits are verified exactly and misses fall back to full enumeration.
    """
    for s in range(2, n + 1):
        for q in range(2, s + 1):
            for S in combinations(range(n), s):
                ss = set(S)
                weights = [len(sup & ss) for sup in supports]
                if any(w < q for w in weights):
                    continue
                tight = [i for i, w in enumerate(weights) if w == q]
                reduced = [tuple(1 if j in supports[i] else 0 for j in S) for i in tight]
                if _rank(reduced, s) != s:
                    continue
                coords = tuple(Fraction(1, q) if j in ss else Fraction(0) for j in range(n))
                full_rows = [tuple(1 if j in sup else 0 for j in range(n)) for sup in supports]
                return PolyhedronVertex(coords, tight_constraints(full_rows, coords))
    return None


def is_ideal(A: Matrix, use_patterns: bool = True) -> IdealityResult:
    """Decide whether every vertex of Q(A) is integral.

    A fractional vertex is returned as the certificate. The optional
    pattern pre-pass only accelerates refutations; a positive answer is
    always backed by the full exhaustive enumeration.
    """
    rows = _validate_zero_one(A)
    if A.m == 0:
        return IdealityResult(True, None)
    if use_patterns:
        supports = [frozenset(j for j, a in enumerate(row) if a) for row in rows]
        hit = _pattern_vertices(supports, A.n)
        if hit is not None:
            return IdealityResult(False, hit)
    for vertex in enumerate_covering_vertices(A, sparse_first=True):
        if not vertex.is_integral:
            return IdealityResult(False, vertex)
    return IdealityResult(True, None)
