from itertools import combinations

import pytest

from hetnil.catalog import build_h7, build_h8, build_N31, h7_theta, instanton_A_lmt, n31_theta
from hetnil.exterior import KForm, hodge_star, inner, wedge
from hetnil.gstruct import (
    PHI,
    STAR_THETA,
    THETA,
    GStructure,
    StructureError,
    classify_g2,
    classify_spin7,
    g2_projector,
    in_subalgebra,
    is_instanton,
    lee_form,
    lee_form_alternate,
    spin7_from_g2,
    standard_g2,
    standard_spin7,
    standard_su3,
    structure_contraction,
    torsion_3form,
)
from hetnil.lie import LieAlgebraModel, curvature, Connection
from hetnil.scalars import Scalar, symbols

a, b, c = symbols("a b c")


def test_standard_form_components():
    assert THETA.component((1, 2, 7)) == 1
    assert STAR_THETA.component((2, 4, 6, 7)) == -1
    assert PHI.component((1, 2, 3, 8)) == 1
    assert standard_g2().dual() == STAR_THETA
    assert standard_g2().psi() == -STAR_THETA
    assert standard_spin7().psi() == -PHI


def test_catalog_forms_expand_to_the_standard_one():
    assert n31_theta() == THETA
    assert h7_theta() == THETA
    assert spin7_from_g2(THETA) == PHI


def test_unnormalized_contractions():
    g7 = structure_contraction(standard_g2())
    g8 = structure_contraction(standard_spin7())
    assert all(g7[i][i] == 6 for i in range(7))
    assert all(g8[i][i] == 42 for i in range(8))


def test_bad_structures_rejected():
    with pytest.raises(StructureError):
        GStructure("G2", PHI)
    with pytest.raises(StructureError):
        GStructure("Spin7", PHI * 2)
    with pytest.raises(StructureError):
        GStructure("G2", THETA * 2)


def test_su3_invariants():
    su3 = standard_su3()
    assert wedge(su3.F, su3.psi_plus).is_zero()
    assert wedge(su3.F, su3.psi_minus).is_zero()
    assert wedge(su3.psi_plus, su3.psi_minus) * 3 == wedge(su3.F, su3.F, su3.F) * 2


def test_su3_membership():
    su3 = standard_su3()
    beta = KForm.basis(6, 1, 2, coeff=a) - KForm.basis(6, 5, 6, coeff=a) + KForm.basis(6, 3, 4, coeff=b) - KForm.basis(6, 5, 6, coeff=b)
    assert in_subalgebra(beta, su3)
    assert not in_subalgebra(su3.F, su3)


def test_spin7_membership():
    beta = KForm.basis(8, 2, 3, coeff=a) + KForm.basis(8, 4, 5, coeff=b) - KForm.basis(8, 6, 7, coeff=a + b)
    assert in_subalgebra(beta, standard_spin7())
    eta = KForm.basis(8, 2, 4) + KForm.basis(8, 2, 5) - KForm.basis(8, 3, 4) + KForm.basis(8, 3, 5)
    assert in_subalgebra(eta, standard_spin7())
    assert not in_subalgebra(KForm.basis(8, 1, 2), standard_spin7())


def test_g2_projector_on_basis():
    S = standard_g2()
    for i, j in combinations(range(1, 8), 2):
        beta = KForm.basis(7, i, j)
        p = g2_projector(beta, S)
        assert in_subalgebra(p, S)
        assert g2_projector(p, S) == p
        rest = beta - p
        # the complement is of the form X -| Theta
        assert hodge_star(wedge(rest, THETA)) == rest * 2


def test_lee_forms():
    assert lee_form(build_N31(), standard_g2()).is_zero()
    assert lee_form(build_h8(), standard_spin7()).is_zero()
    assert lee_form(LieAlgebraModel.abelian(8), standard_spin7()).is_zero()
    for L, S in ((build_N31(c="c"), standard_g2()), (build_h7(), standard_g2()), (build_h8(), standard_spin7())):
        assert lee_form(L, S) == lee_form_alternate(L, S)


def test_classification():
    S = standard_g2()
    assert classify_g2(LieAlgebraModel.abelian(7), S).supersymmetric
    assert classify_spin7(build_h8(), standard_spin7()).balanced
    assert classify_spin7(LieAlgebraModel.abelian(8), standard_spin7()).balanced
    de8 = KForm.basis(8, 1, 2) + KForm.basis(8, 3, 4) + KForm.basis(8, 5, 6) + KForm.basis(8, 6, 7)
    L = LieAlgebraModel.from_dict(8, {8: de8})
    assert not classify_spin7(L, standard_spin7()).balanced
    with pytest.raises(StructureError):
        classify_g2(build_h8(), standard_spin7())


def test_torsion_forms():
    T = torsion_3form(build_N31(), standard_g2())
    assert T == KForm.basis(7, 1, 2, 7, coeff=a) + KForm.basis(7, 3, 4, 7, coeff=b) - KForm.basis(7, 5, 6, 7, coeff=a + b)
    assert torsion_3form(LieAlgebraModel.abelian(7), standard_g2()).is_zero()
    assert torsion_3form(LieAlgebraModel.abelian(8), standard_spin7()).is_zero()


def test_instantons():
    L = build_N31()
    assert is_instanton(curvature(L, instanton_A_lmt()), standard_g2())
    assert is_instanton(curvature(L, Connection.zero(7)), standard_g2())
    # a connection whose curvature is e12 - e34 (not in g2) fails
    bad = Connection.from_entries(7, {(1, 2): KForm.basis(7, 7)})
    L2 = LieAlgebraModel.from_dict(7, {7: KForm.basis(7, 1, 2) + KForm.basis(7, 3, 4)})
    assert not is_instanton(curvature(L2, bad), standard_g2())
