import json
from fractions import Fraction

import pytest

from hetnil.catalog import CATALOG, N31_configuration, build_N31, h7_configuration, instanton_A_lmt
from hetnil.exterior import KForm
from hetnil.gstruct import standard_g2
from hetnil.lie import Connection, LieAlgebraModel, curvature, pontrjagin_q1
from hetnil.scalars import Scalar, symbols
from hetnil.verifier import (
    RICCI_CONVENTION,
    SCHEMA,
    AlphaPrime,
    Geometry,
    anomaly_solve,
    condition_4_8_residual,
    curvature_square,
    verify_model,
)

a, b, lam, mu, tau = symbols("a b lambda mu tau")
vol = lambda k: KForm.basis(7, 1, 2, 3, 4, coeff=k)


def test_anomaly_solve_cases():
    assert anomaly_solve(vol(0), vol(0), vol(0)).status == "any"
    assert anomaly_solve(vol(1), vol(0), vol(0)).status == "none"
    r = anomaly_solve(vol(2), vol(8), vol(0))
    assert r.status == "ratio" and r.value_at({}) == 1
    r = anomaly_solve(vol(a), vol(2 * a * b), vol(0))
    assert r.equals(Scalar.const(2), b)
    bad = anomaly_solve(vol(1) + KForm.basis(7, 1, 2, 5, 6), vol(1) + KForm.basis(7, 1, 2, 5, 6, coeff=2), vol(0))
    assert bad.status == "none" and "not proportional" in bad.diagnostic
    with pytest.raises(ValueError):
        anomaly_solve(vol(1), KForm.basis(7, 1), vol(0))


def test_alpha_prime_printing_is_normalized():
    r = anomaly_solve(vol(-4 * a), vol(-a * (2 * a + 2 * b)), vol(0))
    assert r.to_str() == "8/(a + b)"
    # constant numerators are integral and positive, products stay grouped
    assert anomaly_solve(vol(1), vol(8 * a ** 2), vol(0)).to_str() == "1/(2*a^2)"
    assert anomaly_solve(vol(-8), vol(a * a - 1), vol(0)).to_str() == "32/(-a^2 + 1)"
    assert AlphaPrime("any").to_str() == "any"


def test_anomaly_solve_scales_with_instanton():
    # scaling the instanton forms by s scales q1(A) by s^2
    L = build_N31(1, 1)
    G = Geometry.build(L, standard_g2())
    A = instanton_A_lmt(1, 0, 0)
    for s in (Fraction(1, 2), 2):
        q_s = pontrjagin_q1(curvature(L, A.scaled(s)))
        assert q_s == pontrjagin_q1(curvature(L, A)) * s ** 2
        r = anomaly_solve(G.dT, pontrjagin_q1(G.K_plus), q_s)
        assert r.value_at({}) == Fraction(4, 6 - s ** 2)


def test_quadratic_condition_on_instanton_and_symmetry():
    L = build_N31()
    S = standard_g2()
    K_A = curvature(L, instanton_A_lmt())
    assert all(not x for row in condition_4_8_residual(K_A, S.psi()) for x in row)
    G = Geometry.build(L, S)
    M = curvature_square(G.K_plus)
    assert all(M[i][j] == M[j][i] for i in range(7) for j in range(7))


def test_quadratic_condition_fails_on_h7():
    conf = h7_configuration(1, 1, 0, 1)
    G = Geometry.build(conf.model, conf.structure)
    res = condition_4_8_residual(G.K_plus, conf.structure.psi())
    assert any(x for row in res for x in row)
    assert all(res[i][j] == res[j][i] for i in range(7) for j in range(7))


def test_report_numbers_and_verdicts():
    conf = CATALOG["n31"].build()
    rep = verify_model(conf.model, conf.structure, conf.instanton, golden=conf.golden)
    assert rep.alpha_prime["value"] == "4/5"
    assert rep.alpha_prime["positive"] is True
    assert rep.passed
    assert rep.schema == SCHEMA == 1
    assert rep.ricci_convention == RICCI_CONVENTION
    assert rep.motion_residuals["einstein_routes_agree"]
    assert rep.motion_residuals["conventions_agree"]
    assert rep.motion_residuals["h_divergence_matches_codifferential"]


def test_json_has_no_floats():
    conf = CATALOG["h8"].build()
    rep = verify_model(conf.model, conf.structure, conf.instanton, relations=conf.relations, golden=conf.golden)

    def walk(x):
        assert not isinstance(x, float)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)

    data = json.loads(rep.to_json())
    walk(data)
    assert data["schema"] == 1
    assert data["verdicts"] == rep.verdicts
    assert data["alpha_prime"]["value"] == "25/24"


def test_symbolic_positivity_is_undecided_without_points():
    conf = N31_configuration()
    rep = verify_model(conf.model, conf.structure, conf.instanton)
    assert rep.alpha_prime["positive"] is None
    assert rep.verdicts["anomaly"]
    rep = verify_model(conf.model, conf.structure, conf.instanton,
                       eval_points=[{"a": 1, "b": 1, "lambda": 3, "mu": 0, "tau": 0}])
    assert rep.alpha_prime["positive"] is False
    assert not rep.passed


def test_abelian_report_is_trivial():
    L = LieAlgebraModel.abelian(7)
    rep = verify_model(L, standard_g2())
    assert rep.alpha_prime["status"] == "any"
    assert rep.torsion == "0" and rep.dT == "0"
    assert rep.passed


@pytest.mark.parametrize("ab", [(1, 1), (1, 2), (2, -1)])
@pytest.mark.parametrize("lmt", [(1, 0, 0), (Fraction(1, 2), 1, 0), (0, 0, 0), (1, 1, 1)])
def test_levi_civita_has_no_solution_on_n31(ab, lmt):
    conf = N31_configuration(*ab, *lmt)
    rep = verify_model(conf.model, conf.structure, conf.instanton, connection="levi-civita")
    assert rep.alpha_prime["status"] == "none"
    assert not rep.passed


def test_levi_civita_no_solution_symbolic():
    conf = N31_configuration()
    G = Geometry.build(conf.model, conf.structure)
    r = anomaly_solve(G.dT, pontrjagin_q1(G.K_lc), pontrjagin_q1(curvature(conf.model, conf.instanton)))
    assert r.status == "none"


def test_unknown_connection_rejected():
    with pytest.raises(ValueError):
        verify_model(LieAlgebraModel.abelian(7), standard_g2(), connection="minus")


def test_text_report_ends_with_result():
    rep = verify_model(LieAlgebraModel.abelian(8), CATALOG["h8"].build().structure, Connection.zero(8))
    lines = rep.to_text().splitlines()
    assert lines[-1].split() == ["RESULT", "PASS"]
    assert any(line.startswith("DISCREPANCY") for line in lines)
