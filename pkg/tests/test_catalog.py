from fractions import Fraction

import pytest

from hetnil.catalog import (
    CATALOG,
    CatalogError,
    build_h3,
    extend_g2_product,
    extend_spin7_product,
    h8_levi_civita_configuration,
)
from hetnil.exterior import KForm
from hetnil.gstruct import classify_g2, classify_spin7
from hetnil.lie import LieAlgebraModel, check_closure
from hetnil.verifier import verify_model


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_defaults_build_closed_models(name):
    entry = CATALOG[name]
    assert set(entry.defaults) == set(entry.params)
    conf = entry.build()
    assert check_closure(conf.model)
    assert not conf.model.params


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_symbolic_build_keeps_parameters(name):
    conf = CATALOG[name].build(symbolic=True)
    assert check_closure(conf.model)
    assert conf.model.params or conf.instanton is not None


def test_unknown_parameter_is_rejected():
    with pytest.raises(CatalogError):
        CATALOG["n31"].build({"nu": Fraction(1)})


def test_partial_values_mix_with_symbols():
    conf = CATALOG["n31"].build({"a": Fraction(2)}, symbolic=True)
    assert "a" not in conf.model.params
    assert "b" in conf.model.params


def test_product_structures_are_of_the_expected_type():
    L7, S7 = extend_g2_product(build_h3())
    assert classify_g2(L7, S7).supersymmetric
    L8, S8 = extend_spin7_product(CATALOG["n31"].build().model)
    assert classify_spin7(L8, S8).balanced


def test_product_preconditions():
    with pytest.raises(CatalogError):
        extend_g2_product(LieAlgebraModel.abelian(5))
    with pytest.raises(CatalogError):
        extend_spin7_product(LieAlgebraModel.abelian(6))
    # de6 = e12 alone breaks dF ^ F = 0
    L6 = LieAlgebraModel.from_dict(6, {6: KForm.basis(6, 1, 2)})
    with pytest.raises(CatalogError):
        extend_g2_product(L6)


@pytest.mark.parametrize("name,alpha", [("h7-x-s1", "1/2"), ("n31-x-s1", "4/5"), ("n31", "4/5"), ("h8", "25/24")])
def test_default_reports(name, alpha):
    conf = CATALOG[name].build()
    rep = verify_model(conf.model, conf.structure, conf.instanton, relations=conf.relations, golden=conf.golden)
    assert rep.alpha_prime["value"] == alpha
    assert rep.passed


def test_levi_civita_h8_is_symbolic_and_positive_below_the_bound():
    conf = h8_levi_civita_configuration()
    rep = verify_model(conf.model, conf.structure, conf.instanton, connection="levi-civita",
                       relations=conf.relations, golden=conf.golden)
    assert rep.alpha_prime["value"] == "32/(-48*lambda^2 + 19)"
    assert rep.verdicts["supersymmetric"] and rep.verdicts["instanton"] and rep.verdicts["anomaly"]
    assert rep.verdicts["golden"]
