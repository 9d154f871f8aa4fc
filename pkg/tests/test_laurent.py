import random
from fractions import Fraction

import pytest

from looptheta import (
    LaurentScalar,
    ModuleVector,
    SymplecticSpace,
    project_X,
    project_Y,
    residue,
    residue_form,
    truncation,
)
from looptheta.errors import WindowOverflow


def L(coeffs):
    return LaurentScalar(coeffs)


def test_residue_definition():
    assert residue(L({-1: 1})) == 1
    assert residue(L({-2: 3, -1: 5, 0: 7})) == 5
    assert residue(L({0: 4, 3: 1})) == 0


def test_residue_of_product():
    # (1 + t^-1)(2 + t^-1) = t^-2 + 3 t^-1 + 2, checked by expanding
    a = L({0: 1, -1: 1})
    b = L({0: 2, -1: 1})
    prod = a * b
    assert prod == L({-2: 1, -1: 3, 0: 2})
    assert residue(prod) == 3


def test_add_mul_windows():
    a = L({-2: Fraction(1, 2), 1: 3})
    b = L({0: 1, 2: -3})
    s = a + b
    assert s.window[0] <= -2 and s.window[1] >= 2
    assert (a - a).is_zero()
    assert (a * LaurentScalar.zero()).is_zero()


def test_mul_overflow_raises():
    with truncation(4):
        a = L({3: 1})
        with pytest.raises(WindowOverflow):
            a * a  # t^6 out of band


def test_constructor_rejects_out_of_band():
    with truncation(4):
        with pytest.raises(WindowOverflow):
            L({5: 1})


def test_inverse_unit():
    a = L({0: 2, 1: 1, 2: Fraction(1, 3)})
    inv = a.inverse()
    assert (a * inv).truncate(8) == LaurentScalar.one()
    # shifted unit
    b = L({-1: 3, 0: 1})
    binv = b.inverse(upto=6)
    assert (b * binv).truncate(5) == LaurentScalar.one()


def test_scalar_repr_roundtrip_style():
    assert repr(L({})) == "0"
    assert "t^-1" in repr(L({-1: 5}))


def make_random_vector(rng, space, kmin, kmax, density=0.5):
    coeffs = {}
    for k in range(kmin, kmax + 1):
        if rng.random() < density:
            coeffs[k] = [Fraction(rng.randint(-3, 3)) for _ in range(space.dim)]
    return ModuleVector(space, coeffs)


def test_residue_form_basics():
    sp = SymplecticSpace(2)
    e1 = ModuleVector.monomial(sp, -1, sp.e(1))
    f1 = ModuleVector.monomial(sp, 0, sp.f(1))
    assert residue_form(e1, f1) == 1
    e1c = ModuleVector.monomial(sp, 0, sp.e(1))
    assert residue_form(e1c, f1) == 0
    # exponent bookkeeping
    a = ModuleVector.monomial(sp, -2, sp.e(1))
    assert residue_form(a, ModuleVector.monomial(sp, 0, sp.f(1))) == 0
    assert residue_form(a, ModuleVector.monomial(sp, 1, sp.f(1))) == 1


def test_residue_form_antisymmetry_and_lagrangians():
    rng = random.Random(11)
    sp = SymplecticSpace(2)
    for _ in range(300):
        w1 = make_random_vector(rng, sp, -4, 4)
        w2 = make_random_vector(rng, sp, -4, 4)
        assert residue_form(w1, w2) == -residue_form(w2, w1)
        x1, x2 = project_X(w1), project_X(w2)
        y1, y2 = project_Y(w1), project_Y(w2)
        assert residue_form(x1, x2) == 0
        assert residue_form(y1, y2) == 0
        assert (x1 + y1) == w1


def test_projections_idempotent():
    rng = random.Random(5)
    sp = SymplecticSpace(3)
    w = make_random_vector(rng, sp, -3, 3, density=0.9)
    assert project_X(project_X(w)) == project_X(w)
    assert project_Y(project_Y(w)) == project_Y(w)
    assert project_X(ModuleVector.zero(sp)).is_zero()


def test_nondegeneracy_dual_monomials():
    sp = SymplecticSpace(2)
    for k in range(-4, 0):
        for i in range(1, sp.n + 1):
            x = ModuleVector.monomial(sp, k, sp.e(i))
            dual = ModuleVector.monomial(sp, -k - 1, sp.f(i))
            assert residue_form(x, dual) in (1, -1)
