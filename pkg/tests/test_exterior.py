import pytest
from hypothesis import given, settings

from hetnil.exterior import (
    FormError,
    KForm,
    component,
    embed,
    frame,
    hodge_star,
    inner,
    interior,
    norm2,
    perm_sign,
    top_coefficient,
    volume,
    wedge,
)
from hetnil.parsing import parse_form
from hetnil.scalars import Scalar, symbols

import strategies as S

x, y = symbols("x y")


def test_basis_sorts_indices_with_sign():
    assert KForm.basis(4, 2, 1) == -KForm.basis(4, 1, 2)
    assert KForm.basis(4, 1, 1).is_zero()
    assert perm_sign((3, 1, 2)) == 1
    assert perm_sign((2, 1, 3)) == -1
    assert perm_sign((1, 1)) == 0


def test_component_is_antisymmetric():
    f = KForm.basis(5, 1, 3, 4, coeff=x)
    assert component(f, (1, 3, 4)) == x
    assert component(f, (3, 1, 4)) == -x
    assert component(f, (4, 3, 1)) == -x
    assert component(f, (1, 1, 4)) == 0
    assert len(f.full_components()) == 6


def test_wedge_of_coframe():
    e = frame(4)
    assert wedge(e[0], e[1], e[2], e[3]) == volume(4)
    assert wedge(e[1], e[0]) == -KForm.basis(4, 1, 2)
    assert wedge(e[0], e[0]).is_zero()


def test_hodge_star_pairing():
    a = KForm.basis(4, 1, 2, coeff=x) + KForm.basis(4, 3, 4, coeff=y)
    assert wedge(a, hodge_star(a)) == volume(4) * norm2(a)
    assert hodge_star(KForm.scalar(3, 1)) == volume(3)
    assert hodge_star(volume(5)) == KForm.scalar(5, 1)


def test_inner_requires_equal_degree():
    with pytest.raises(FormError):
        inner(KForm.basis(3, 1), KForm.basis(3, 1, 2))


def test_add_checks_dimension_and_degree():
    with pytest.raises(FormError):
        KForm.basis(3, 1) + KForm.basis(4, 1)
    with pytest.raises(FormError):
        KForm.basis(3, 1) + KForm.basis(3, 1, 2)


def test_interior_signs():
    f = KForm.basis(4, 1, 2, 3)
    assert interior(1, f) == KForm.basis(4, 2, 3)
    assert interior(2, f) == -KForm.basis(4, 1, 3)
    assert interior(4, f).is_zero()


def test_embed_and_top_coefficient():
    assert embed(KForm.basis(3, 1, 2), 5, 2) == KForm.basis(5, 3, 4)
    assert top_coefficient(volume(6) * 3) == 3
    with pytest.raises(FormError):
        top_coefficient(KForm.basis(3, 1))


def test_dimension_limits():
    with pytest.raises(FormError):
        KForm(9, 1)
    with pytest.raises(FormError):
        KForm(3, 4)


def test_printing():
    f = KForm.basis(7, 1, 2, 7, coeff=x) + KForm.basis(7, 5, 6, 7, coeff=-x - y)
    assert f.to_str() == "x*e127 + (-x - y)*e567"
    assert KForm.zero(3, 2).to_str() == "0"
    assert (-KForm.basis(3, 1)).to_str() == "-e1"


@settings(max_examples=80)
@given(S.forms())
def test_form_print_parse_roundtrip(f):
    assert parse_form(f.to_str(), f.dim, ["x", "y", "z"], f.degree) == f


@settings(max_examples=60)
@given(S.form_pairs())
def test_wedge_is_bilinear(pair):
    a, b = pair
    assert wedge(a + a, b) == wedge(a, b) * 2
    assert wedge(a, b * Scalar.var("x")) == wedge(a, b) * Scalar.var("x")
