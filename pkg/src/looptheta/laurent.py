"""Exact truncated Laurent arithmetic and the residue symplectic form.

Scalars are Laurent polynomials over the rationals, stored sparsely as
{exponent: coefficient} together with a window (min_exp, max_exp) outside
which coefficients are identically zero.  The residue pairing

    <w, w'> = Res <w, w'>_{F((t))}

makes W((t)) a symplectic space over F with Lagrangians
X = W[t^-1]t^-1 (exponents <= -1) and Y = W[[t]] (exponents >= 0).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from .config import truncation_depth
from .errors import WindowOverflow

Rat = Fraction


def _rat(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class LaurentScalar:
    """An exact Laurent polynomial in t with rational coefficients.

    Coefficients outside ``window`` are identically zero by construction.
    The window always sits inside the global band [-D, D]; arithmetic that
    would push a nonzero coefficient out of the band raises WindowOverflow.
    """

    __slots__ = ("coeffs", "window")

    def __init__(self, coeffs: Mapping[int, Fraction] | None = None,
                 window: Tuple[int, int] | None = None):
        d = truncation_depth()
        cleaned: Dict[int, Fraction] = {}
        if coeffs:
            for k, c in coeffs.items():
                c = _rat(c)
                if c != 0:
                    if k < -d or k > d:
                        raise WindowOverflow(
                            f"exponent {k} outside global band [{-d}, {d}]")
                    cleaned[int(k)] = c
        if window is None:
            if cleaned:
                window = (min(cleaned), max(cleaned))
            else:
                window = (0, 0)
        lo, hi = window
        lo, hi = max(int(lo), -d), min(int(hi), d)
        if lo > hi:
            lo, hi = 0, 0
        for k in cleaned:
            lo, hi = min(lo, k), max(hi, k)
        self.coeffs = cleaned
        self.window = (lo, hi)

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "LaurentScalar":
        return LaurentScalar({})

    @staticmethod
    def one() -> "LaurentScalar":
        return LaurentScalar({0: Fraction(1)})

    @staticmethod
    def const(c) -> "LaurentScalar":
        return LaurentScalar({0: _rat(c)})

    @staticmethod
    def t_power(k: int, c=1) -> "LaurentScalar":
        return LaurentScalar({k: _rat(c)})

    @staticmethod
    def from_poly(coeffs: Iterable, start: int = 0) -> "LaurentScalar":
        """Coefficients listed from exponent ``start`` upward."""
        return LaurentScalar({start + i: _rat(c) for i, c in enumerate(coeffs)})

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs.get(k, Fraction(0))

    def support(self):
        return sorted(self.coeffs)

    def valuation(self) -> int:
        """Order of vanishing at t = 0; raises on the zero series."""
        if not self.coeffs:
            raise ValueError("zero series has no valuation")
        return min(self.coeffs)

    def leading_coeff(self) -> Fraction:
        return self.coeffs[self.valuation()]

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "LaurentScalar") -> "LaurentScalar":
        coeffs = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = coeffs.get(k, Fraction(0)) + c
            if s:
                coeffs[k] = s
            else:
                coeffs.pop(k, None)
        w = (min(self.window[0], other.window[0]),
             max(self.window[1], other.window[1]))
        return LaurentScalar(coeffs, w)

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar({k: -c for k, c in self.coeffs.items()}, self.window)

    def __sub__(self, other: "LaurentScalar") -> "LaurentScalar":
        return self + (-other)

    def __mul__(self, other) -> "LaurentScalar":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        d = truncation_depth()
        coeffs: Dict[int, Fraction] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                s = coeffs.get(k, Fraction(0)) + c1 * c2
                if s:
                    coeffs[k] = s
                else:
                    coeffs.pop(k, None)
        for k in coeffs:
            if k < -d or k > d:
                raise WindowOverflow(
                    f"product coefficient at t^{k} leaves the band [{-d}, {d}]")
        lo = max(self.window[0] + other.window[0], -d)
        hi = min(self.window[1] + other.window[1], d)
        return LaurentScalar(coeffs, (lo, hi))

    __rmul__ = __mul__

    def mul_trunc(self, other: "LaurentScalar", max_exp: int) -> "LaurentScalar":
        """Product with coefficients above max_exp never formed (jet
        multiplication); the low side still overflows loudly."""
        d = truncation_depth()
        coeffs: Dict[int, Fraction] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                if k > max_exp:
                    continue
                if k < -d:
                    raise WindowOverflow(
                        f"product coefficient at t^{k} leaves the band")
                s = coeffs.get(k, Fraction(0)) + c1 * c2
                if s:
                    coeffs[k] = s
                else:
                    coeffs.pop(k, None)
        return LaurentScalar(coeffs)

    def scale(self, c) -> "LaurentScalar":
        c = _rat(c)
        if c == 0:
            return LaurentScalar.zero()
        return LaurentScalar({k: v * c for k, v in self.coeffs.items()}, self.window)

    def shift(self, n: int) -> "LaurentScalar":
        """Multiply by t^n."""
        return LaurentScalar({k + n: c for k, c in self.coeffs.items()})

    def truncate(self, max_exp: int) -> "LaurentScalar":
        """Drop coefficients above max_exp (explicit jet reduction)."""
        return LaurentScalar({k: c for k, c in self.coeffs.items() if k <= max_exp},
                             (self.window[0], min(self.window[1], max_exp)))

    def inverse(self, upto: int | None = None) -> "LaurentScalar":
        """Inverse of c * t^m * (1 + u), truncated at degree ``upto`` above -m.

        Only units-with-monomial-shift are invertible; the inverse of the
        power-series part is the geometric series computed mod t^(upto+1).
        """
        if self.is_zero():
            raise ZeroDivisionError("zero Laurent series")
        d = truncation_depth()
        if upto is None:
            upto = d
        m = self.valuation()
        lc = self.coeffs[m]
        # u has valuation >= 1: self = lc * t^m * (1 + u)
        u = LaurentScalar({k - m: c / lc for k, c in self.coeffs.items() if k != m})
        inv = LaurentScalar.one()
        term = LaurentScalar.one()
        sign = -1
        if not u.is_zero():
            steps = upto // u.valuation() + 1
            for _ in range(steps):
                term = term.mul_trunc(u, upto)
                if term.is_zero():
                    break
                inv = inv + term.scale(sign)
                sign = -sign
        return inv.scale(Fraction(1) / lc).shift(-m)

    # -- comparison / display -------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentScalar.const(other)
        return isinstance(other, LaurentScalar) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{k}" if c != 1 else f"t^{k}")
        return " + ".join(parts).replace("+ -", "- ")


def residue(a: LaurentScalar) -> Fraction:
    """Coefficient of t^-1."""
    return a[-1]


class SymplecticSpace:
    """2n-dimensional symplectic space with basis e_1..e_n, f_1..f_n and
    gram matrix [[0, I], [-I, 0]]."""

    __slots__ = ("n", "gram")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("need n >= 1")
        self.n = n
        g = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            g[i][n + i] = Fraction(1)
            g[n + i][i] = Fraction(-1)
        self.gram = g

    @property
    def dim(self) -> int:
        return 2 * self.n

    def e(self, i: int) -> int:
        """Row index of basis vector e_i (1-based)."""
        if not 1 <= i <= self.n:
            raise IndexError(f"e_{i} out of range")
        return i - 1

    def f(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"f_{i} out of range")
        return self.n + i - 1

    def label(self, idx: int) -> str:
        return f"e{idx + 1}" if idx < self.n else f"f{idx - self.n + 1}"

    def pair(self, u, v) -> Fraction:
        """Constant symplectic form <u, v>_F on coordinate tuples."""
        n = self.n
        s = Fraction(0)
        for i in range(n):
            s += u[i] * v[n + i] - u[n + i] * v[i]
        return s

    def __eq__(self, other):
        return isinstance(other, SymplecticSpace) and other.n == self.n

    def __hash__(self):
        return hash(("SymplecticSpace", self.n))

    def __repr__(self):
        return f"SymplecticSpace(n={self.n})"


class ModuleVector:
    """Element of W((t)) truncated to the global band, stored as
    {exponent: coefficient tuple of length 2n}."""

    __slots__ = ("space", "coeffs")

    def __init__(self, space: SymplecticSpace, coeffs: Mapping[int, Iterable] | None = None):
        d = truncation_depth()
        self.space = space
        cleaned: Dict[int, tuple] = {}
        if coeffs:
            for k, vec in coeffs.items():
                vec = tuple(_rat(c) for c in vec)
                if len(vec) != space.dim:
                    raise ValueError("coefficient vector has wrong length")
                if any(vec):
                    if k < -d or k > d:
                        raise WindowOverflow(
                            f"exponent {k} outside global band [{-d}, {d}]")
                    cleaned[int(k)] = vec
        self.coeffs = cleaned

    @staticmethod
    def zero(space: SymplecticSpace) -> "ModuleVector":
        return ModuleVector(space, {})

    @staticmethod
    def monomial(space: SymplecticSpace, k: int, idx: int, c=1) -> "ModuleVector":
        """c * b * t^k for the basis vector with row index idx."""
        vec = [Fraction(0)] * space.dim
        vec[idx] = _rat(c)
        return ModuleVector(space, {k: vec})

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self):
        return sorted(self.coeffs)

    def __getitem__(self, k: int) -> tuple:
        return self.coeffs.get(k, tuple(Fraction(0) for _ in range(self.space.dim)))

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        if other.space != self.space:
            raise ValueError("mismatched spaces")
        coeffs = {k: list(v) for k, v in self.coeffs.items()}
        for k, vec in other.coeffs.items():
            if k in coeffs:
                coeffs[k] = [a + b for a, b in zip(coeffs[k], vec)]
            else:
                coeffs[k] = list(vec)
        return ModuleVector(self.space, coeffs)

    def __neg__(self) -> "ModuleVector":
        return self.scale(-1)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + (-other)

    def scale(self, c) -> "ModuleVector":
        c = _rat(c)
        return ModuleVector(self.space,
                            {k: [c * x for x in vec] for k, vec in self.coeffs.items()})

    def shift(self, n: int) -> "ModuleVector":
        return ModuleVector(self.space, {k + n: vec for k, vec in self.coeffs.items()})

    def entry(self, k: int, idx: int) -> Fraction:
        v = self.coeffs.get(k)
        return v[idx] if v is not None else Fraction(0)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ModuleVector) and other.space == self.space
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.space.n, tuple(sorted((k, v) for k, v in self.coeffs.items()))))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            for idx, c in enumerate(self.coeffs[k]):
                if c:
                    lbl = self.space.label(idx)
                    tpart = "" if k == 0 else (f"*t^{k}" if k != 1 else "*t")
                    cpart = "" if c == 1 else f"{c}*"
                    parts.append(f"{cpart}{lbl}{tpart}")
        return " + ".join(parts).replace("+ -", "- ")


def project_X(w: ModuleVector) -> ModuleVector:
    """Keep exponents <= -1 (the W[t^-1]t^-1 part)."""
    return ModuleVector(w.space, {k: v for k, v in w.coeffs.items() if k <= -1})


def project_Y(w: ModuleVector) -> ModuleVector:
    """Keep exponents >= 0 (the W[[t]] part)."""
    return ModuleVector(w.space, {k: v for k, v in w.coeffs.items() if k >= 0})


def residue_form(w: ModuleVector, w2: ModuleVector) -> Fraction:
    """Residue of the F((t))-valued symplectic pairing: exact and
    antisymmetric.  Both vectors must live inside the global band."""
    if w.space != w2.space:
        raise ValueError("mismatched spaces")
    d = truncation_depth()
    for v in (w, w2):
        for k in v.coeffs:
            if k < -d or k > d:
                raise WindowOverflow("vector support leaves the global band")
    space = w.space
    total = Fraction(0)
    for k, vec in w.coeffs.items():
        other = w2.coeffs.get(-1 - k)
        if other is not None:
            total += space.pair(vec, other)
    return total
