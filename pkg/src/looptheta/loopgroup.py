"""Symplectic loop-group elements as exact Laurent matrices.

A LoopMatrix acts on row vectors from the right.  Entries are exact
Laurent polynomials; elements whose true entries are infinite series
(anything built from a power-series inverse or a truncated exponential)
carry a precision marker ``prec``: coefficients above t^prec are unknown
and consumers must stay below that line.

The parabolic data is the split W = l+ . W0 . l- determined by an index
0 <= a <= n, with l+ spanned by e_1..e_a, l- by f_1..f_a.  The unipotent
radical of the corresponding maximal parabolic is generated by three
families of block matrices (rows and columns grouped as (l+, W0, l-)):

    nplus(mu, beta)   = [[1, mu, beta - mu mu*/2], [0, 1, -mu*], [0, 0, 1]]
    nminus(nu, gamma) = [[1, 0, 0], [nu, 1, 0], [gamma - nu* nu/2, -nu*, 1]]
    nzero(alpha, delta) = diag(alpha, delta, alpha*^-1)

with mu in Hom(l+, W0)[[t]], beta in Sym^2 l- [[t]], nu in
Hom(W0, l+)[[t]] t, gamma in Sym^2 l+ [[t]] t^2, and alpha, delta
congruent to 1 mod t.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .config import truncation_depth
from .errors import InvalidParams, NonzeroC, NotInU, WindowOverflow
from .laurent import LaurentScalar, ModuleVector, SymplecticSpace, project_X, project_Y
from . import linalg

LMat = List[List[LaurentScalar]]


# -- Laurent matrix helpers -------------------------------------------


def lzeros(r: int, c: int) -> LMat:
    return [[LaurentScalar.zero() for _ in range(c)] for _ in range(r)]


def lidentity(n: int) -> LMat:
    m = lzeros(n, n)
    for i in range(n):
        m[i][i] = LaurentScalar.one()
    return m


def lmat_from_rational(a) -> LMat:
    return [[LaurentScalar.const(x) for x in row] for row in a]


def lmat_add(a: LMat, b: LMat) -> LMat:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def lmat_sub(a: LMat, b: LMat) -> LMat:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def lmat_scale(a: LMat, c) -> LMat:
    return [[x.scale(c) if isinstance(c, (int, Fraction)) else x * c for x in row]
            for row in a]


def lmat_mul(a: LMat, b: LMat, rows: int | None = None, inner: int | None = None,
             cols: int | None = None, clip: int | None = None) -> LMat:
    """Product of Laurent matrices; dims may be passed for empty blocks.
    ``clip`` drops coefficients above the given exponent (jet product)."""
    r = len(a) if rows is None else rows
    k = (len(b) if b else (len(a[0]) if a else 0)) if inner is None else inner
    c = (len(b[0]) if b else 0) if cols is None else cols
    out = lzeros(r, c)
    for i in range(r):
        ai = a[i]
        for j in range(k):
            s = ai[j]
            if s.is_zero():
                continue
            bj = b[j]
            for l in range(c):
                if bj[l].is_zero():
                    continue
                out[i][l] = out[i][l] + (s * bj[l] if clip is None
                                         else (s * bj[l]).truncate(clip))
    if clip is not None:
        out = [[x.truncate(clip) for x in row] for row in out]
    return out


def lmat_transpose(a: LMat) -> LMat:
    return [list(col) for col in zip(*a)] if a else []


def lmat_truncate(a: LMat, max_exp: int) -> LMat:
    return [[x.truncate(max_exp) for x in row] for row in a]


def lmat_eq(a: LMat, b: LMat, upto: int | None = None) -> bool:
    for ra, rb in zip(a, b):
        for x, y in zip(ra, rb):
            if upto is None:
                if x != y:
                    return False
            else:
                if x.truncate(upto) != y.truncate(upto):
                    return False
    return True


def lmat_min_valuation(a: LMat) -> int:
    vals = [x.valuation() for row in a for x in row if not x.is_zero()]
    return min(vals) if vals else 0


def lmat_inverse_series(a: LMat, upto: int) -> LMat:
    """Inverse of a square Laurent matrix congruent to an invertible
    constant mod t, computed mod t^(upto+1) by a Neumann series."""
    n = len(a)
    if n == 0:
        return []
    const = [[x[0] for x in row] for row in a]
    c_inv = lmat_from_rational(linalg.inverse(const))
    # a * c_inv = 1 + N with N of valuation >= 1
    m = lmat_mul(a, c_inv, clip=upto)
    nmat = lmat_sub(m, lidentity(n))
    acc = lidentity(n)
    term = lidentity(n)
    sign = -1
    for _ in range(upto + 1):
        term = lmat_mul(term, nmat, clip=upto)
        if all(x.is_zero() for row in term for x in row):
            break
        acc = lmat_add(acc, lmat_scale(term, Fraction(sign)))
        sign = -sign
    return lmat_mul(c_inv, acc, clip=upto)


# -- parabolic split ---------------------------------------------------


class ParabolicSplit:
    """Index bookkeeping for W = l+ . W0 . l- inside the 2n basis."""

    def __init__(self, space: SymplecticSpace, a: int):
        n = space.n
        if not 0 <= a <= n:
            raise ValueError("parabolic index a must satisfy 0 <= a <= n")
        self.space = space
        self.a = a
        self.plus = list(range(a))
        self.w0 = list(range(a, n)) + list(range(n + a, 2 * n))
        self.minus = list(range(n, n + a))

    @property
    def n(self) -> int:
        return self.space.n

    def w0_gram(self):
        g = self.space.gram
        return [[g[i][j] for j in self.w0] for i in self.w0]

    def pair_block(self, rows: List[int], cols: List[int]):
        g = self.space.gram
        return [[g[i][j] for j in cols] for i in rows]

    def __repr__(self):
        return f"ParabolicSplit(n={self.n}, a={self.a})"


_FLAVORS = {
    # flavor: (source block, target block); duals map pairing partners
    "mu": ("plus", "w0"),
    "beta": ("plus", "minus"),
    "nu": ("w0", "plus"),
    "gamma": ("minus", "plus"),
    "alpha": ("plus", "plus"),
    "delta": ("w0", "w0"),
    "mu_star": ("w0", "minus"),
    "nu_star": ("minus", "w0"),
    "alpha_star": ("minus", "minus"),
}

_PARTNER = {"plus": "minus", "minus": "plus", "w0": "w0"}


def dual_map(m: LMat, flavor: str, split: ParabolicSplit) -> LMat:
    """Adjoint of a polynomial block map under the residue pairing.

    For m: A -> B the dual m*: B' -> A' (primed = pairing partner of the
    block) is determined degreewise by <w, x m> = <w m*, x>.  In matrix
    form m* = P(B', B) m^T P(A', A)^-1 with P(.,.) the constant gram
    sub-blocks.
    """
    if flavor not in _FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    src_name, tgt_name = _FLAVORS[flavor]
    blocks = {"plus": split.plus, "w0": split.w0, "minus": split.minus}
    a_idx = blocks[src_name]
    b_idx = blocks[tgt_name]
    bp_idx = blocks[_PARTNER[tgt_name]]
    ap_idx = blocks[_PARTNER[src_name]]
    if not a_idx or not b_idx:
        return lzeros(len(bp_idx), len(ap_idx))
    p_bpb = split.pair_block(bp_idx, b_idx)
    p_apa = split.pair_block(ap_idx, a_idx)
    left = lmat_from_rational(p_bpb)
    right = lmat_from_rational(linalg.inverse(p_apa))
    return lmat_mul(lmat_mul(left, lmat_transpose(m)), right)


def _check_star_symmetry(m: LMat, flavor: str, split: ParabolicSplit, label: str):
    """Require m + m* = 0 for the symmetric-tensor parameters."""
    star = dual_map(m, flavor, split)
    s = lmat_add(m, star)
    if any(not x.is_zero() for row in s for x in row):
        raise InvalidParams(f"{label} + {label}* != 0")


def _check_min_valuation(m: LMat, vmin: int, label: str):
    for row in m:
        for x in row:
            if not x.is_zero() and x.valuation() < vmin:
                raise InvalidParams(f"{label} has a coefficient below t^{vmin}")


# -- loop matrices -----------------------------------------------------


class LoopMatrix:
    """2n x 2n matrix over Laurent polynomials, acting on rows from the
    right.  ``prec`` = None means the entries are exact; an integer means
    coefficients above t^prec are unknown (jet)."""

    __slots__ = ("space", "entries", "prec")

    def __init__(self, space: SymplecticSpace, entries: LMat,
                 prec: Optional[int] = None):
        if len(entries) != space.dim or any(len(r) != space.dim for r in entries):
            raise ValueError("entries must be 2n x 2n")
        self.space = space
        self.entries = entries
        self.prec = prec

    @staticmethod
    def identity(space: SymplecticSpace) -> "LoopMatrix":
        return LoopMatrix(space, lidentity(space.dim))

    @staticmethod
    def from_rational(space: SymplecticSpace, rows) -> "LoopMatrix":
        return LoopMatrix(space, lmat_from_rational(rows))

    @staticmethod
    def t_diagonal(space: SymplecticSpace, powers: List[int]) -> "LoopMatrix":
        """diag(t^k1, ..., t^kn, t^-k1, ..., t^-kn), symplectic."""
        if len(powers) != space.n:
            raise ValueError("need one power per e-basis vector")
        m = lzeros(space.dim, space.dim)
        for i, k in enumerate(powers):
            m[i][i] = LaurentScalar.t_power(k)
            m[space.n + i][space.n + i] = LaurentScalar.t_power(-k)
        return LoopMatrix(space, m)

    def effective_prec(self) -> int:
        d = truncation_depth()
        return d if self.prec is None else min(self.prec, d)

    def __mul__(self, other: "LoopMatrix") -> "LoopMatrix":
        if other.space != self.space:
            raise ValueError("mismatched spaces")
        if self.prec is None and other.prec is None:
            return LoopMatrix(self.space, lmat_mul(self.entries, other.entries))
        pa = self.effective_prec()
        pb = other.effective_prec()
        prec = min(pa + lmat_min_valuation(other.entries),
                   pb + lmat_min_valuation(self.entries),
                   truncation_depth())
        ent = lmat_mul(self.entries, other.entries, clip=prec)
        return LoopMatrix(self.space, ent, prec)

    def __eq__(self, other):
        return (isinstance(other, LoopMatrix) and other.space == self.space
                and lmat_eq(self.entries, other.entries))

    def equal_mod(self, other: "LoopMatrix", upto: int) -> bool:
        return lmat_eq(self.entries, other.entries, upto=upto)

    def transpose(self) -> "LoopMatrix":
        return LoopMatrix(self.space, lmat_transpose(self.entries), self.prec)

    def gram_matrix(self) -> LMat:
        return lmat_from_rational(self.space.gram)

    def is_symplectic(self, upto: int | None = None) -> bool:
        """Check g J g^T = J as truncated series.  For jets the check runs
        up to the precision the product supports."""
        j = self.gram_matrix()
        prod = lmat_mul(lmat_mul(self.entries, j), lmat_transpose(self.entries))
        if upto is None:
            if self.prec is None:
                return lmat_eq(prod, j)
            upto = self.prec + 2 * lmat_min_valuation(self.entries)
        return lmat_eq(prod, j, upto=upto)

    def symplectic_inverse(self) -> "LoopMatrix":
        """g^-1 = J g^T J^-1, valid for symplectic g."""
        j = self.gram_matrix()
        jinv = lmat_from_rational(linalg.inverse(self.space.gram))
        ent = lmat_mul(lmat_mul(j, lmat_transpose(self.entries)), jinv)
        return LoopMatrix(self.space, ent, self.prec)

    def act(self, w: ModuleVector) -> ModuleVector:
        """Right action w . g.  For jets the image is clipped at the
        exponent up to which it is exact."""
        if w.space != self.space:
            raise ValueError("mismatched spaces")
        d = truncation_depth()
        reliable = None
        if self.prec is not None and w.coeffs:
            reliable = self.prec + min(w.coeffs)
        out: Dict[int, list] = {}
        for k, vec in w.coeffs.items():
            for b, c in enumerate(vec):
                if not c:
                    continue
                for j in range(self.space.dim):
                    s = self.entries[b][j]
                    for dexp, a in s.coeffs.items():
                        e = k + dexp
                        if reliable is not None and e > reliable:
                            continue
                        if e < -d or e > d:
                            raise WindowOverflow(
                                f"action pushes exponent to t^{e}")
                        row = out.get(e)
                        if row is None:
                            row = [Fraction(0)] * self.space.dim
                            out[e] = row
                        row[j] += c * a
        return ModuleVector(self.space, out)

    def entry(self, i: int, j: int) -> LaurentScalar:
        return self.entries[i][j]

    def __repr__(self):
        return f"LoopMatrix(n={self.space.n}, prec={self.prec})"


# -- block decomposition ----------------------------------------------


@dataclass
class BlockDecomposition:
    """Images of the truncated X and Y basis vectors split into X and Y
    parts.  Keys are (exponent, basis index)."""

    space: SymplecticSpace
    depth: int
    a_g: Dict[Tuple[int, int], ModuleVector] = field(default_factory=dict)
    b_g: Dict[Tuple[int, int], ModuleVector] = field(default_factory=dict)
    c_g: Dict[Tuple[int, int], ModuleVector] = field(default_factory=dict)
    d_g: Dict[Tuple[int, int], ModuleVector] = field(default_factory=dict)

    def c_is_zero(self) -> bool:
        return all(v.is_zero() for v in self.c_g.values())

    def c_rank(self) -> int:
        rows = []
        d = truncation_depth()
        dim = self.space.dim
        for v in self.c_g.values():
            if v.is_zero():
                continue
            row = []
            for k in range(-d, 0):
                row.extend(v[k])
            rows.append(row)
        if not rows:
            return 0
        return linalg.rank(rows)


def block_decompose(g: LoopMatrix, depth: int) -> BlockDecomposition:
    """Matrix of g with respect to X . Y, restricted to basis monomials
    with |exponent| <= depth."""
    if depth > truncation_depth():
        raise WindowOverflow("depth exceeds the global truncation")
    space = g.space
    out = BlockDecomposition(space, depth)
    for k in range(-depth, 0):
        for b in range(space.dim):
            img = g.act(ModuleVector.monomial(space, k, b))
            out.a_g[(k, b)] = project_X(img)
            out.b_g[(k, b)] = project_Y(img)
    for k in range(0, depth + 1):
        for b in range(space.dim):
            img = g.act(ModuleVector.monomial(space, k, b))
            out.c_g[(k, b)] = project_X(img)
            out.d_g[(k, b)] = project_Y(img)
    return out


def c_block_vanishes(g: LoopMatrix) -> bool:
    """Structural test for c_g = 0, i.e. Y g is contained in Y.  Only
    finitely many monomials can cross, bounded by the most negative
    exponent in the entries."""
    m = -lmat_min_valuation(g.entries)
    if m <= 0:
        return True
    space = g.space
    for k in range(0, m):
        for b in range(space.dim):
            img = g.act(ModuleVector.monomial(space, k, b))
            if not project_X(img).is_zero():
                return False
    return True


# -- unipotent generators ----------------------------------------------


@dataclass
class UnipotentParams:
    """Parameters of a pure unipotent generator.

    kind "plus" uses (mu, beta); "minus" uses (nu, gamma); "zero" uses
    (alpha, delta).  Unused slots stay None.  Maps are Laurent-polynomial
    matrices shaped by the split: mu (a x 2(n-a)), beta (a x a),
    nu (2(n-a) x a), gamma (a x a), alpha (a x a), delta square of size
    2(n-a).
    """

    kind: str
    split: ParabolicSplit
    mu: Optional[LMat] = None
    beta: Optional[LMat] = None
    nu: Optional[LMat] = None
    gamma: Optional[LMat] = None
    alpha: Optional[LMat] = None
    delta: Optional[LMat] = None

    def __post_init__(self):
        a = self.split.a
        w = 2 * (self.split.n - self.split.a)
        if self.kind == "plus":
            if self.mu is None:
                self.mu = lzeros(a, w)
            if self.beta is None:
                self.beta = lzeros(a, a)
        elif self.kind == "minus":
            if self.nu is None:
                self.nu = lzeros(w, a)
            if self.gamma is None:
                self.gamma = lzeros(a, a)
        elif self.kind == "zero":
            if self.alpha is None:
                self.alpha = lidentity(a)
            if self.delta is None:
                self.delta = lidentity(w)
        else:
            raise ValueError("kind must be plus, minus or zero")

    def validate(self):
        split = self.split
        if self.kind == "plus":
            _check_min_valuation(self.mu, 0, "mu")
            _check_min_valuation(self.beta, 0, "beta")
            _check_star_symmetry(self.beta, "beta", split, "beta")
        elif self.kind == "minus":
            _check_min_valuation(self.nu, 1, "nu")
            _check_min_valuation(self.gamma, 2, "gamma")
            _check_star_symmetry(self.gamma, "gamma", split, "gamma")
        else:
            for name, m in (("alpha", self.alpha), ("delta", self.delta)):
                diff = lmat_sub(m, lidentity(len(m)))
                _check_min_valuation(diff, 1, f"{name} - 1")
            j0 = self.split.w0_gram()
            if j0:
                lhs = lmat_mul(lmat_mul(self.delta, lmat_from_rational(j0)),
                               lmat_transpose(self.delta))
                d = truncation_depth()
                if not lmat_eq(lhs, lmat_from_rational(j0), upto=d):
                    raise InvalidParams("delta is not symplectic within the window")

    def is_identity(self) -> bool:
        def zero(m):
            return m is None or all(x.is_zero() for row in m for x in row)

        def ident(m):
            return m is None or lmat_eq(m, lidentity(len(m)))

        if self.kind == "plus":
            return zero(self.mu) and zero(self.beta)
        if self.kind == "minus":
            return zero(self.nu) and zero(self.gamma)
        return ident(self.alpha) and ident(self.delta)


def _place_block(target: LMat, rows: List[int], cols: List[int], block: LMat):
    for i, ri in enumerate(rows):
        for j, cj in enumerate(cols):
            target[ri][cj] = target[ri][cj] + block[i][j]


def make_unipotent(p: UnipotentParams) -> LoopMatrix:
    """Assemble the block matrix of a pure unipotent generator."""
    p.validate()
    split = p.split
    space = split.space
    dim = space.dim
    a, w0, mi = split.plus, split.w0, split.minus
    na, nw = len(a), len(w0)
    ent = lzeros(dim, dim)
    for i in range(dim):
        ent[i][i] = LaurentScalar.one()
    prec = None
    half = Fraction(1, 2)
    if p.kind == "plus":
        mu, beta = p.mu, p.beta
        mu_star = dual_map(mu, "mu", split)
        mumu = lmat_mul(mu, mu_star, rows=na, inner=nw, cols=na)
        corner = lmat_sub(beta, lmat_scale(mumu, half))
        _place_block(ent, a, w0, mu)
        _place_block(ent, a, mi, corner)
        _place_block(ent, w0, mi, lmat_scale(mu_star, Fraction(-1)))
    elif p.kind == "minus":
        nu, gamma = p.nu, p.gamma
        nu_star = dual_map(nu, "nu", split)
        nunu = lmat_mul(nu_star, nu, rows=na, inner=nw, cols=na)
        corner = lmat_sub(gamma, lmat_scale(nunu, half))
        _place_block(ent, w0, a, nu)
        _place_block(ent, mi, a, corner)
        _place_block(ent, mi, w0, lmat_scale(nu_star, Fraction(-1)))
    else:
        d = truncation_depth()
        alpha, delta = p.alpha, p.delta
        for i in range(dim):
            ent[i][i] = LaurentScalar.zero()
        alpha_star = dual_map(alpha, "alpha", split)
        if na:
            alpha_star_inv = lmat_inverse_series(alpha_star, d)
            _place_block(ent, a, a, alpha)
            _place_block(ent, mi, mi, alpha_star_inv)
            ident_alpha = lmat_eq(alpha, lidentity(na))
            if not ident_alpha:
                prec = d
        _place_block(ent, w0, w0, delta)
    return LoopMatrix(space, ent, prec)


def exp_block(xi: LMat, window: int, gram) -> LMat:
    """Truncated exponential sum(xi^i / i!) of a Lie algebra element with
    entries of valuation >= 1.  ``gram`` is the constant symplectic form
    of the space the matrix acts on; the sp condition xi J + J xi^T = 0
    is enforced exactly."""
    n = len(xi)
    if n == 0:
        return []
    _check_min_valuation(xi, 1, "xi")
    j = lmat_from_rational(gram)
    cond = lmat_add(lmat_mul(xi, j), lmat_mul(j, lmat_transpose(xi)))
    if any(not x.is_zero() for row in cond for x in row):
        raise InvalidParams("xi is not in the symplectic Lie algebra")
    val = lmat_min_valuation(xi) or 1
    acc = lidentity(n)
    term = lidentity(n)
    fact = 1
    steps = window // val + 1
    for i in range(1, steps + 1):
        term = lmat_mul(term, xi, clip=window)
        fact *= i
        if all(x.is_zero() for row in term for x in row):
            break
        acc = lmat_add(acc, lmat_scale(term, Fraction(1, fact)))
    return acc


def exp_truncated(space: SymplecticSpace, xi: LMat, window: int | None = None) -> LoopMatrix:
    """exp of an sp(W)-valued matrix with valuation >= 1, as a jet
    LoopMatrix exact mod t^(window+1)."""
    if window is None:
        window = truncation_depth()
    ent = exp_block(xi, window, space.gram)
    return LoopMatrix(space, ent, prec=window)


# -- triangular decomposition of U ------------------------------------


def _subblock(g: LoopMatrix, rows: List[int], cols: List[int]) -> LMat:
    return [[g.entries[i][j] for j in cols] for i in rows]


def _check_u_valuations(g: LoopMatrix, split: ParabolicSplit):
    """Stabilizing l- + tY and its perp pins entry valuations: everything
    in F[[t]], and the rows of l- land in l- mod t."""
    minus = set(split.minus)
    for i in range(g.space.dim):
        for j in range(g.space.dim):
            x = g.entries[i][j]
            if x.is_zero():
                continue
            need = 1 if (i in minus and j not in minus) else 0
            if x.valuation() < need:
                raise NotInU(
                    f"entry ({i},{j}) has valuation {x.valuation()} < {need}")


def decompose_U(u: LoopMatrix, split: ParabolicSplit,
                order: str = "+0-") -> Tuple[UnipotentParams, UnipotentParams, UnipotentParams]:
    """Factor u in U as a product of pure generators in the given order
    ("+0-" or "-0+"); the parameter pack is unique once the order is
    fixed.  Raises NotInU when u does not stabilize the defining flag."""
    _check_u_valuations(u, split)
    d = u.effective_prec()
    a_idx, w_idx, m_idx = split.plus, split.w0, split.minus
    na, nw = len(a_idx), len(w_idx)
    half = Fraction(1, 2)

    u11 = _subblock(u, a_idx, a_idx)
    u12 = _subblock(u, a_idx, w_idx)
    u13 = _subblock(u, a_idx, m_idx)
    u21 = _subblock(u, w_idx, a_idx)
    u22 = _subblock(u, w_idx, w_idx)
    u23 = _subblock(u, w_idx, m_idx)
    u31 = _subblock(u, m_idx, a_idx)
    u32 = _subblock(u, m_idx, w_idx)
    u33 = _subblock(u, m_idx, m_idx)

    try:
        if order == "+0-":
            # u = nplus(mu,beta) . nzero(alpha,delta) . nminus(nu,gamma)
            if na:
                a_blk = u33  # alpha*^-1
                a_inv = lmat_inverse_series(a_blk, d)
                alpha = lmat_transpose(a_inv)
                g_blk = lmat_mul(a_inv, u31, rows=na, inner=na, cols=na, clip=d)
                nu_star = lmat_scale(lmat_mul(a_inv, u32, rows=na, inner=na,
                                              cols=nw, clip=d), Fraction(-1))
                nu = dual_map(nu_star, "nu_star", split)
                mu_star = lmat_scale(lmat_mul(u23, a_inv, rows=nw, inner=na,
                                              cols=na, clip=d), Fraction(-1))
                mu = dual_map(mu_star, "mu_star", split)
                delta = lmat_add(u22, lmat_mul(mu_star, u32, rows=nw, inner=na,
                                               cols=nw, clip=d))
                beta = lmat_add(lmat_mul(u13, a_inv, rows=na, inner=na, cols=na,
                                         clip=d),
                                lmat_scale(lmat_mul(mu, mu_star, rows=na,
                                                    inner=nw, cols=na, clip=d),
                                           half))
                gamma = lmat_add(g_blk, lmat_scale(
                    lmat_mul(nu_star, nu, rows=na, inner=nw, cols=na, clip=d),
                    half))
            else:
                alpha, beta, gamma = [], lzeros(0, 0), lzeros(0, 0)
                mu, nu = lzeros(0, nw), lzeros(nw, 0)
                delta = u22
            p_plus = UnipotentParams("plus", split, mu=mu, beta=beta)
            p_zero = UnipotentParams("zero", split, alpha=alpha, delta=delta)
            p_minus = UnipotentParams("minus", split, nu=nu, gamma=gamma)
            parts = (p_plus, p_zero, p_minus)
        elif order == "-0+":
            # u = nminus(nu,gamma) . nzero(alpha,delta) . nplus(mu,beta)
            if na:
                alpha = u11
                a_inv = lmat_inverse_series(alpha, d)
                mu = lmat_mul(a_inv, u12, rows=na, inner=na, cols=nw, clip=d)
                mu_star = dual_map(mu, "mu", split)
                b_blk = lmat_mul(a_inv, u13, rows=na, inner=na, cols=na, clip=d)
                beta = lmat_add(b_blk, lmat_scale(
                    lmat_mul(mu, mu_star, rows=na, inner=nw, cols=na, clip=d),
                    half))
                nu = lmat_mul(u21, a_inv, rows=nw, inner=na, cols=na, clip=d)
                g_blk = lmat_mul(u31, a_inv, rows=na, inner=na, cols=na, clip=d)
                nu_star = dual_map(nu, "nu", split)
                gamma = lmat_add(g_blk, lmat_scale(
                    lmat_mul(nu_star, nu, rows=na, inner=nw, cols=na, clip=d),
                    half))
                delta = lmat_sub(u22, lmat_mul(
                    lmat_mul(u21, a_inv, rows=nw, inner=na, cols=na, clip=d),
                    u12, rows=nw, inner=na, cols=nw, clip=d))
            else:
                alpha, beta, gamma = [], lzeros(0, 0), lzeros(0, 0)
                mu, nu = lzeros(0, nw), lzeros(nw, 0)
                delta = u22
            p_plus = UnipotentParams("plus", split, mu=mu, beta=beta)
            p_zero = UnipotentParams("zero", split, alpha=alpha, delta=delta)
            p_minus = UnipotentParams("minus", split, nu=nu, gamma=gamma)
            parts = (p_minus, p_zero, p_plus)
        else:
            raise ValueError("order must be '+0-' or '-0+'")
        for part in parts:
            part.validate()
    except (InvalidParams, ZeroDivisionError) as exc:
        raise NotInU(str(exc)) from exc

    prod = make_unipotent(parts[0])
    for part in parts[1:]:
        prod = prod * make_unipotent(part)
    check_upto = min(d, prod.effective_prec())
    if not u.equal_mod(prod, check_upto):
        raise NotInU("recomposition does not reproduce the element")
    return parts
