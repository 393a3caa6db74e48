from fractions import Fraction

import pytest
from hypothesis import given, settings

from hetnil.catalog import build_h8, build_N31
from hetnil.exterior import KForm, wedge
from hetnil.gstruct import standard_spin7, torsion_3form
from hetnil.lie import (
    ClosureError,
    Connection,
    LieAlgebraModel,
    ce_differential,
    check_closure,
    closure_failures,
    connection_torsion,
    covariant_derivative,
    curvature,
    levi_civita,
    pontrjagin_q1,
    ricci,
    scalar_curvature,
    with_torsion,
)
from hetnil.scalars import ZERO, Scalar

import strategies as S


def heisenberg():
    return LieAlgebraModel.from_dict(3, {3: KForm.basis(3, 1, 2)}, name="heis3")


def test_structure_constants_and_bracket():
    L = heisenberg()
    assert L.a(3, 1, 2) == 1
    assert L.a(3, 2, 1) == -1
    # de(X, Y) = -e([X, Y])
    assert L.bracket(1, 2) == {3: Scalar.const(-1)}
    assert L.bracket(1, 3) == {}


def test_d_on_products_is_leibniz():
    L = build_N31()
    e = [KForm.basis(7, i) for i in range(1, 8)]
    lhs = ce_differential(L, wedge(e[6], e[0]))
    rhs = wedge(ce_differential(L, e[6]), e[0]) - wedge(e[6], ce_differential(L, e[0]))
    assert lhs == rhs


def test_closure_failure_is_reported():
    L = LieAlgebraModel.from_dict(5, {1: KForm.basis(5, 2, 3), 2: KForm.basis(5, 1, 4)})
    assert closure_failures(L) == [1, 2]
    assert not check_closure(L)
    with pytest.raises(ClosureError) as info:
        levi_civita(L)
    assert "e1" in str(info.value)


def test_cyclic_pair_is_closed():
    # de1 = e23, de3 = e12: d(e23) = -e2 ^ e12 = 0 and d(e12) = e23 ^ e2 = 0
    L = LieAlgebraModel.from_dict(3, {1: KForm.basis(3, 2, 3), 3: KForm.basis(3, 1, 2)})
    assert check_closure(L)


def test_levi_civita_is_metric_and_torsion_free():
    for L in (heisenberg(), build_N31(), build_h8()):
        lc = levi_civita(L)
        assert lc.metric_compatible
        assert connection_torsion(L, lc).is_zero()


def test_torsion_roundtrip_h8():
    L = build_h8()
    T = torsion_3form(L, standard_spin7())
    plus = with_torsion(L, levi_civita(L), T, +1)
    assert connection_torsion(L, plus) == T
    minus = with_torsion(L, levi_civita(L), T, -1)
    assert connection_torsion(L, minus) == -T


def test_torsion_connection_preserves_structure():
    L = build_h8()
    S = standard_spin7()
    plus = with_torsion(L, levi_civita(L), torsion_3form(L, S), +1)
    assert all(f.is_zero() for f in covariant_derivative(L, plus, S.form))


def test_heisenberg_ricci():
    L = heisenberg()
    K = curvature(L, levi_civita(L))
    ric = ricci(L, K)
    assert [ric[i][i] for i in range(3)] == [Fraction(-1, 2), Fraction(-1, 2), Fraction(1, 2)]
    assert all(ric[i][j] == ZERO for i in range(3) for j in range(3) if i != j)
    assert scalar_curvature(L, K) == Fraction(-1, 2)


def test_flat_cases():
    L = LieAlgebraModel.abelian(4)
    assert curvature(L, levi_civita(L)).is_zero()
    assert pontrjagin_q1(curvature(L, Connection.zero(4))).is_zero()


def test_from_entries_antisymmetrizes():
    f = KForm.basis(3, 3)
    C = Connection.from_entries(3, {(1, 2): f})
    assert C.form(2, 1) == -f
    assert C.metric_compatible
    with pytest.raises(ValueError):
        Connection.from_entries(3, {(1, 2): f, (2, 1): f})


def test_curvature_is_antisymmetric_in_frame_indices():
    L = build_N31()
    K = curvature(L, levi_civita(L))
    for i in range(1, 8):
        for j in range(1, 8):
            assert K.form(i, j) == -K.form(j, i)


@settings(max_examples=40)
@given(S.two_step_models())
def test_random_two_step_algebras_close(L):
    assert check_closure(L)
    assert connection_torsion(L, levi_civita(L)).is_zero()
