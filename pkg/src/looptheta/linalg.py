"""Exact linear algebra over the rationals (and HNF over the integers).

Matrices are plain lists of lists of Fractions; everything here is small
and exact, so no numpy.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

Rat = Fraction
Matrix = List[List[Fraction]]


def _rat(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def mat(rows) -> Matrix:
    return [[_rat(x) for x in row] for row in rows]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c) -> Matrix:
    c = _rat(c)
    return [[c * x for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return []
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Matrix, v: Sequence) -> List[Fraction]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vec_mat(v: Sequence, a: Matrix) -> List[Fraction]:
    if not a:
        return []
    cols = len(a[0])
    return [sum(v[i] * a[i][j] for i in range(len(a))) for j in range(cols)]


def rref(a: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot column list."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Matrix) -> int:
    if not a:
        return 0
    return len(rref(a)[1])


def row_space_contains(a: Matrix, v: Sequence) -> bool:
    """Is v in the row space of a?"""
    if not any(v):
        return True
    if not a:
        return False
    return rank(a) == rank(a + [list(v)])


def solve(a: Matrix, b: Sequence) -> Optional[List[Fraction]]:
    """One solution x of a x = b, or None."""
    rows = len(a)
    if rows == 0:
        return [] if not any(b) else None
    cols = len(a[0])
    aug = [a[i][:] + [_rat(b[i])] for i in range(rows)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for r, c in enumerate(pivots):
        x[c] = red[r][cols]
    return x


def nullspace(a: Matrix) -> List[List[Fraction]]:
    """Basis of the right kernel of a."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if rows == 0:
        return [list(row) for row in identity(cols)]
    red, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][fc]
        basis.append(v)
    return basis


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [a[i][:] + identity(n)[i] for i in range(n)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def det(a: Matrix) -> Fraction:
    n = len(a)
    m = [row[:] for row in a]
    d = Fraction(1)
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            d = -d
        d *= m[c][c]
        inv = Fraction(1) / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def charpoly(a: Matrix) -> List[Fraction]:
    """Coefficients [c_0, ..., c_n] of det(xI - A), c_n = 1
    (Faddeev-LeVerrier)."""
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = zeros(n, n)
    c = Fraction(1)
    for k in range(1, n + 1):
        m = mat_mul(a, m)
        for i in range(n):
            m[i][i] += c
        am = mat_mul(a, m)
        tr = sum(am[i][i] for i in range(n))
        c = -tr / k
        coeffs[n - k] = c
    return coeffs


def rational_roots(coeffs: Sequence[Fraction]) -> List[Tuple[Fraction, int]]:
    """Rational roots with multiplicities of a polynomial given by
    coefficients c_0 + c_1 x + ... (exact)."""
    poly = [(x if isinstance(x, Fraction) else Fraction(x)) for x in coeffs]
    while poly and poly[-1] == 0:
        poly.pop()
    if not poly:
        raise ValueError("zero polynomial")
    den = 1
    for c in poly:
        den = den * c.denominator // gcd(den, c.denominator)
    ip = [int(c * den) for c in poly]
    # strip powers of x
    mult0 = 0
    while ip and ip[0] == 0:
        ip.pop(0)
        mult0 += 1
    roots = []
    if mult0:
        roots.append((Fraction(0), mult0))

    def divisors(n: int):
        n = abs(n)
        out = set()
        i = 1
        while i * i <= n:
            if n % i == 0:
                out.add(i)
                out.add(n // i)
            i += 1
        return out

    if len(ip) > 1:
        cands = set()
        for p in divisors(ip[0]):
            for q in divisors(ip[-1]):
                cands.add(Fraction(p, q))
                cands.add(Fraction(-p, q))
        work = [Fraction(x) for x in ip]
        for r in sorted(cands):
            mult = 0
            while len(work) > 1:
                # synthetic division by (x - r)
                quot = [Fraction(0)] * (len(work) - 1)
                carry = Fraction(0)
                for i in range(len(work) - 1, 0, -1):
                    quot[i - 1] = work[i] + carry
                    carry = quot[i - 1] * r
                if work[0] + carry != 0:
                    break
                work = quot
                mult += 1
            if mult:
                roots.append((r, mult))
    return roots


def poly_div_factor(coeffs: Sequence[Fraction], roots: List[Tuple[Fraction, int]]) -> List[Fraction]:
    """Quotient after dividing out all (x - r)^m factors."""
    work = [(x if isinstance(x, Fraction) else Fraction(x)) for x in coeffs]
    for r, m in roots:
        for _ in range(m):
            quot = [Fraction(0)] * (len(work) - 1)
            carry = Fraction(0)
            for i in range(len(work) - 1, 0, -1):
                quot[i - 1] = work[i] + carry
                carry = quot[i - 1] * r
            work = quot
    return work


# -- integer lattices -------------------------------------------------


def hnf(rows: List[List[int]]) -> List[List[int]]:
    """Row-style Hermite normal form of the lattice spanned by the rows.

    Returns the nonzero rows, upper triangular with positive pivots and
    entries above a pivot reduced into [0, pivot).
    """
    m = [[int(x) for x in row] for row in rows if any(row)]
    if not m:
        return []
    cols = len(m[0])
    r = 0
    for c in range(cols):
        # euclidean elimination in column c below row r
        while True:
            nz = [i for i in range(r, len(m)) if m[i][c]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(m[i][c]))
            m[r], m[i0] = m[i0], m[r]
            if m[r][c] < 0:
                m[r] = [-x for x in m[r]]
            done = True
            for i in range(r + 1, len(m)):
                if m[i][c]:
                    q = m[i][c] // m[r][c]
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                    if m[i][c]:
                        done = False
            if done:
                break
        if r < len(m) and m[r][c]:
            for i in range(r):
                q = m[i][c] // m[r][c]
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
            r += 1
    return [row for row in m[:r] if any(row)]
