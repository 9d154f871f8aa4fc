import random
from fractions import Fraction

from looptheta import linalg


def test_rref_solve_roundtrip():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 5)
        a = [[Fraction(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)]
        x = [Fraction(rng.randint(-4, 4)) for _ in range(n)]
        b = linalg.mat_vec(a, x)
        sol = linalg.solve(a, b)
        assert sol is not None
        assert linalg.mat_vec(a, sol) == b


def test_inverse_and_det():
    rng = random.Random(4)
    for _ in range(30):
        n = rng.randint(1, 4)
        a = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        d = linalg.det(a)
        if d == 0:
            continue
        inv = linalg.inverse(a)
        assert linalg.mat_mul(a, inv) == linalg.identity(n)


def test_nullspace():
    a = linalg.mat([[1, 2, 3], [2, 4, 6]])
    ns = linalg.nullspace(a)
    assert len(ns) == 2
    for v in ns:
        assert linalg.mat_vec(a, v) == [0, 0]


def test_charpoly_matches_det():
    rng = random.Random(9)
    for _ in range(20):
        n = rng.randint(1, 4)
        a = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        cp = linalg.charpoly(a)
        # det(xI - A) at x = 0 is (-1)^n det A
        assert cp[0] == (-1) ** n * linalg.det(a)
        assert cp[n] == 1


def test_rational_roots():
    # (x - 2)(x + 1/3)^2, built by exact polynomial multiplication
    def polymul(p, q):
        out = [Fraction(0)] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            for j, b in enumerate(q):
                out[i + j] += a * b
        return out

    p = polymul([Fraction(-2), Fraction(1)],
                polymul([Fraction(1, 3), Fraction(1)], [Fraction(1, 3), Fraction(1)]))
    roots = dict(linalg.rational_roots(p))
    assert roots[Fraction(2)] == 1
    assert roots[Fraction(-1, 3)] == 2


def test_hnf_lattice_membership():
    rows = [[2, 0, 0], [0, 3, 0], [1, 1, 0], [0, 0, 0]]
    h = linalg.hnf(rows)
    assert len(h) == 2
    # lattice contains (1, 1, 0) and (1, -2, 0) = (1,1,0)-(0,3,0)
    # pivots positive, echelon
    assert h[0][0] > 0
