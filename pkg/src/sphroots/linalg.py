"""Exact rational linear algebra on tuple vectors.

Everything downstream (reflections, lattices, cones) must be exact, so all
arithmetic runs over `fractions.Fraction`.  Vectors are immutable tuples of
Fractions; matrices are tuples of row tuples and act on column vectors.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import gcd
from typing import Iterable, Sequence

Vec = tuple[Q, ...]
Mat = tuple[Vec, ...]


def qvec(xs: Iterable) -> Vec:
    return tuple(Q(x) for x in xs)


def vadd(x: Vec, y: Vec) -> Vec:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Vec, y: Vec) -> Vec:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return tuple(a - b for a, b in zip(x, y))


def vneg(x: Vec) -> Vec:
    return tuple(-a for a in x)


def vscale(c, x: Vec) -> Vec:
    c = Q(c)
    return tuple(c * a for a in x)


def vzero(n: int) -> Vec:
    return (Q(0),) * n


def is_zero(x: Vec) -> bool:
    return all(a == 0 for a in x)


def dot(x: Vec, y: Vec) -> Q:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return sum((a * b for a, b in zip(x, y)), Q(0))


def wdot(weights: Vec, x: Vec, y: Vec) -> Q:
    """Weighted inner product sum_i w_i x_i y_i (diagonal bilinear form)."""
    if not (len(weights) == len(x) == len(y)):
        raise ValueError("dimension mismatch in weighted dot")
    return sum((w * a * b for w, a, b in zip(weights, x, y)), Q(0))


def mat_identity(n: int) -> Mat:
    return tuple(tuple(Q(1) if i == j else Q(0) for j in range(n)) for i in range(n))


def mat_vec(m: Mat, x: Vec) -> Vec:
    return tuple(dot(row, x) for row in m)


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = tuple(zip(*b))
    return tuple(tuple(dot(row, qvec(col)) for col in bt) for row in a)


def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(vsub(ra, rb) for ra, rb in zip(a, b))


def rref(rows: Sequence[Sequence[Q]]) -> tuple[list[list[Q]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    m = [list(Q(x) for x in row) for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Q(1) / m[r][c]
        m[r] = [inv * x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(vectors: Sequence[Vec]) -> int:
    _, pivots = rref(list(vectors))
    return len(pivots)


def solve_in_span(basis: Sequence[Vec], target: Vec) -> Vec | None:
    """Coordinates of `target` in `basis`, or None if outside the span.

    The basis must be linearly independent, otherwise ValueError.
    """
    if not basis:
        return () if is_zero(target) else None
    n = len(basis[0])
    k = len(basis)
    if rank(basis) != k:
        raise ValueError("basis is linearly dependent")
    # augmented system: columns are basis vectors, rhs is target
    aug = [[basis[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    m, pivots = rref(aug)
    coords = [Q(0)] * k
    for row, p in zip(m, pivots):
        if p == k:
            return None  # pivot in the rhs column: inconsistent
        coords[p] = row[k]
    return tuple(coords)


def kernel_basis(m: Mat) -> list[Vec]:
    """Basis of the right kernel {x : m x = 0}."""
    if not m:
        return []
    ncols = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Q(0)] * ncols
        x[f] = Q(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def mat_inverse(m: Mat) -> Mat:
    n = len(m)
    aug = [list(m[i]) + [Q(1) if j == i else Q(0) for j in range(n)] for i in range(n)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)


def primitive_integer(x: Vec) -> Vec:
    """Scale a nonzero rational vector by a positive factor to primitive integer form."""
    if is_zero(x):
        raise ValueError("zero vector has no primitive form")
    denom = 1
    for a in x:
        denom = denom * a.denominator // gcd(denom, a.denominator)
    ints = [int(a * denom) for a in x]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(Q(v // g) for v in ints)


def lcm_denominator(x: Vec) -> int:
    denom = 1
    for a in x:
        denom = denom * a.denominator // gcd(denom, a.denominator)
    return denom


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix (nonzero rows only).

    Canonical basis for the row lattice: positive pivots, entries above a
    pivot reduced to [0, pivot).
    """
    m = [list(int(x) for x in row) for row in rows if any(row)]
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        # clear below by gcd steps
        for i in range(r + 1, len(m)):
            while m[i][c] != 0:
                q = m[r][c] // m[i][c]
                m[r] = [a - q * b for a, b in zip(m[r], m[i])]
                m[r], m[i] = m[i], m[r]
        if m[r][c] < 0:
            m[r] = [-a for a in m[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return [row for row in m[:r] if any(row)]
