"""Exact integer and rational linear algebra.

Everything here works on tuples of Python ints or ``fractions.Fraction``;
no floating point is used anywhere in the package.  Vectors are immutable
tuples so results can be hashed, cached and shared freely across threads.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

Vec = tuple[int, ...]
QVec = tuple[Fraction, ...]


def vec_gcd(v) -> int:
    """gcd of the absolute values of the entries (0 for the zero vector)."""
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v) -> Vec:
    """Scale an integer vector by 1/gcd, preserving direction.

    Raises ValueError on the zero vector, which has no primitive multiple.
    """
    g = vec_gcd(v)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(int(x) // g for x in v)


def clear_denominators(v) -> Vec:
    """Smallest positive multiple of a rational vector that is integral and primitive."""
    fracs = [Fraction(x) for x in v]
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    return primitive(tuple(int(f * lcm) for f in fracs))


def dot(a, b):
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def scale(c, v):
    return tuple(c * x for x in v)


def det(rows) -> int:
    """Determinant of a square integer matrix (Bareiss fraction-free elimination)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    m = [[int(x) for x in r] for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(rows) -> int:
    """Rank over Q of a list of rational vectors."""
    mat = [[Fraction(x) for x in r] for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return r


def solve_linear_exact(a_rows, b) -> QVec | None:
    """Solve A x = b exactly over the rationals.

    Args:
      a_rows: the rows of A, rational or integer entries.
      b: right-hand side, one entry per row.

    Returns:
      A solution vector of Fractions (free variables pinned to 0), or None
      when the system is inconsistent.  Substituting the result back yields
      b exactly.
    """
    m = len(a_rows)
    if m != len(b):
        raise ValueError(f"dimension mismatch: {m} rows vs {len(b)} rhs entries")
    n = len(a_rows[0]) if m else 0
    if any(len(r) != n for r in a_rows):
        raise ValueError("ragged matrix")
    aug = [[Fraction(x) for x in row] + [Fraction(rhs)] for row, rhs in zip(a_rows, b)]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for row, col in enumerate(pivots):
        x[col] = aug[row][n]
    return tuple(x)


def lattice_index(vectors) -> int:
    """Index of the sublattice spanned by k independent integer vectors.

    Equals the gcd of all k x k minors; for k = d (a full-dimensional
    simplicial cone) this is |det|, the cone's multiplicity.  Returns 0 when
    the vectors are dependent.
    """
    k = len(vectors)
    if k == 0:
        return 1
    n = len(vectors[0])
    if k > n:
        return 0
    g = 0
    for cols in combinations(range(n), k):
        minor = det([[v[c] for c in cols] for v in vectors])
        g = gcd(g, abs(minor))
    return g


def circuit_relation(vectors) -> Vec | None:
    """The unique primitive linear relation among vectors whose kernel is 1-dim.

    Args:
      vectors: k integer vectors of rank k-1 (a circuit, possibly with
        irrelevant members carrying coefficient 0).

    Returns:
      A primitive integer vector a with sum_i a_i * vectors[i] = 0, or None
      when the kernel is not one-dimensional.  The sign is not normalized.
    """
    k = len(vectors)
    n = len(vectors[0])
    # Row-reduce the k x n matrix whose rows are the vectors, tracking the
    # row operations on an identity block; null rows of the reduced matrix
    # expose kernel vectors of the transpose relation.
    aug = [[Fraction(x) for x in vectors[i]] + [Fraction(int(i == j)) for j in range(k)]
           for i in range(k)]
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, k) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(k):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        r += 1
        if r == k:
            break
    null_rows = [aug[i][n:] for i in range(k) if all(aug[i][c] == 0 for c in range(n))]
    if len(null_rows) != 1:
        return None
    return clear_denominators(tuple(null_rows[0]))
