"""Built-in nilpotent models with their known closed forms.

Golden values are stored in q1 normalization: ``q1 = 8 pi^2 p1``.  A value
given as ``c * p1`` with ``c = k pi^2`` is converted by the factor
``8 / k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .exterior import KForm, embed, hodge_star, wedge
from .gstruct import GStructure, SU3Data, classify_g2, classify_spin7, spin7_from_g2, standard_g2, standard_spin7, standard_su3
from .lie import ClosureError, Connection, LieAlgebraModel, ce_differential, closure_failures
from .scalars import Scalar, as_scalar


class CatalogError(ValueError):
    pass


def _f(dim: int, *pairs) -> KForm:
    """``_f(7, (c1, 1, 3), (c2, 2, 4))`` -> ``c1 e13 + c2 e24``."""
    out = KForm.zero(dim, len(pairs[0]) - 1)
    for coeff, *idx in pairs:
        out = out + KForm.basis(dim, *idx, coeff=as_scalar(coeff))
    return out


def _sym(value, name: str) -> Scalar:
    return Scalar.var(name) if value is None else as_scalar(value)


@dataclass(frozen=True)
class Golden:
    """A closed form published for a model, in q1 normalization where relevant."""

    quantity: str  # e.g. "dT", "q1(plus)", "q1(A)", "q1(levi-civita)", "T", "Omega(plus)^2_4", "alpha'"
    expected: object  # KForm, or (numerator, denominator) for alpha'
    anchor: str
    connection: str = "plus"  # anomaly connection an alpha' value refers to


@dataclass(frozen=True)
class Configuration:
    """A model, its structure, an instanton and the golden values that apply."""

    name: str
    model: LieAlgebraModel
    structure: GStructure
    instanton: Connection | None = None
    golden: tuple = ()
    relations: tuple = ()  # ((name, value), ...) meaning name^2 == value
    assumptions: str = ""


# ----------------------------------------------------------------- h7 family

def build_h7(t=None, c1=None, c2=None) -> LieAlgebraModel:
    t, c1, c2 = _sym(t, "t"), _sym(c1, "c1"), _sym(c2, "c2")
    d = {
        6: _f(7, (-2 * t, 1, 2), (2 * t, 3, 4)),
        7: _f(7, (c1, 1, 3), (c1, 2, 4), (c2, 1, 4), (-c2, 2, 3)),
    }
    params = sorted(set().union(t.params(), c1.params(), c2.params()))
    return LieAlgebraModel.from_dict(7, d, params, "h7")


def h7_theta() -> KForm:
    """``F ^ e7 + Psi+`` for the standard SU(3) data; equals the standard G2 form."""
    su3 = standard_su3()
    return wedge(embed(su3.F, 7), KForm.basis(7, 7)) + embed(su3.psi_plus, 7)


def instanton_A_lambda(lam=None) -> Connection:
    lam = _sym(lam, "lambda")
    e7 = KForm.basis(7, 7, coeff=lam)
    pairs = [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]
    entries = {p: e7 for p in pairs}
    entries[(6, 7)] = _f(7, (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (lam, 6), (lam, 7))
    return Connection.from_entries(7, entries, name="A_lambda")


def h7_golden(t=None, c1=None, c2=None, lam=None) -> tuple:
    t, c1, c2, lam = _sym(t, "t"), _sym(c1, "c1"), _sym(c2, "c2"), _sym(lam, "lambda")
    cc = c1 ** 2 + c2 ** 2
    Z, X, Y = _f(7, (1, 1, 2), (-1, 3, 4)), _f(7, (1, 1, 3), (1, 2, 4)), _f(7, (1, 1, 4), (-1, 2, 3))
    e67 = KForm.basis(7, 6, 7)
    om13 = X * (-c1 ** 2) + Y * (-c1 * c2) + e67 * (4 * t * c2)
    om14 = X * (-c1 * c2) + Y * (-c2 ** 2) + e67 * (-4 * t * c1)
    inst = X * (lam * c1) + Y * (lam * c2)
    return (
        Golden("T", wedge(Z, KForm.basis(7, 6)) * (-2 * t) + wedge(X, KForm.basis(7, 7)) * c1 + wedge(Y, KForm.basis(7, 7)) * c2,
               "h7: T = -*dTheta = -2t(e12 - e34)e6 + c1(e13 + e24)e7 + c2(e14 - e23)e7"),
        Golden("dT", KForm.basis(7, 1, 2, 3, 4, coeff=-2 * (4 * t ** 2 + cc)), "h7: dT = -2(4t^2 + c1^2 + c2^2)e1234"),
        Golden("Omega(plus)^1_2", Z * (-4 * t ** 2), "h7: (Omega+)^1_2 = -(Omega+)^3_4 = -4t^2(e12 - e34)"),
        Golden("Omega(plus)^3_4", Z * (4 * t ** 2), "h7: (Omega+)^1_2 = -(Omega+)^3_4"),
        Golden("Omega(plus)^1_3", om13, "h7: (Omega+)^1_3 = (Omega+)^2_4"),
        Golden("Omega(plus)^2_4", om13, "h7: (Omega+)^1_3 = (Omega+)^2_4"),
        Golden("Omega(plus)^1_4", om14, "h7: (Omega+)^1_4 = -(Omega+)^2_3"),
        Golden("Omega(plus)^2_3", -om14, "h7: (Omega+)^1_4 = -(Omega+)^2_3"),
        Golden("q1(plus)", KForm.basis(7, 1, 2, 3, 4, coeff=-4 * (16 * t ** 4 + cc ** 2)),
               "h7: p1(nabla+) = -(1/2pi^2)(16t^4 + (c1^2+c2^2)^2)e1234"),
        Golden("q1(levi-civita)", KForm.basis(7, 1, 2, 3, 4, coeff=(3 * (4 * t ** 2 - cc) ** 2 + 16 * t ** 2 * cc) * Fraction(-1, 2)),
               "h7 Levi-Civita: p1(nabla^g) = -(1/16pi^2)[3(4t^2 - c1^2 - c2^2)^2 + 16t^2(c1^2 + c2^2)]e1234"),
        Golden("q1(A)", KForm.basis(7, 1, 2, 3, 4, coeff=-2 * lam ** 2 * (4 * t ** 2 + 11 * cc)),
               "h7 instanton: p1(A_lambda) = -(lambda^2/4pi^2)(4t^2 + 11(c1^2 + c2^2))e1234"),
        *[Golden(f"Omega(A)^{i}_{j}", inst, "h7 instanton curvature: (Omega^A)^i_j = lambda c1(e13 + e24) + lambda c2(e14 - e23)")
          for i, j in [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]],
        Golden("Omega(A)^6_7", Z * (-2 * lam * t) + inst,
               "h7 instanton curvature: (Omega^A)^6_7 = -2 lambda t(e12 - e34) + lambda c1(e13 + e24) + lambda c2(e14 - e23)"),
    )


def h7_configuration(t=None, c1=None, c2=None, lam=None) -> Configuration:
    return Configuration(
        "h7",
        build_h7(t, c1, c2),
        standard_g2(),
        instanton_A_lambda(lam),
        h7_golden(t, c1, c2, lam),
        assumptions="t != 0; positive alpha' needs lambda^2 < min(8t^2, 2(c1^2 + c2^2)/11)",
    )


# ------------------------------------------------------------- N(3,1) family

def build_N31(a=None, b=None, c=None) -> LieAlgebraModel:
    """Generalized Heisenberg algebra; ``c`` defaults to ``-a - b`` (pure type)."""
    a, b = _sym(a, "a"), _sym(b, "b")
    c = -a - b if c is None else (Scalar.var(c) if isinstance(c, str) else as_scalar(c))
    d = {7: _f(7, (a, 1, 2), (b, 3, 4), (c, 5, 6))}
    params = sorted(set().union(a.params(), b.params(), c.params()))
    return LieAlgebraModel.from_dict(7, d, params, "n31")


def n31_theta() -> KForm:
    return _f(7, (1, 1, 2, 7), (1, 3, 4, 7), (1, 5, 6, 7), (1, 1, 3, 5), (-1, 1, 4, 6), (-1, 2, 3, 6), (-1, 2, 4, 5))


def instanton_A_lmt(lam=None, mu=None, tau=None) -> Connection:
    lam, mu, tau = _sym(lam, "lambda"), _sym(mu, "mu"), _sym(tau, "tau")
    entries = {
        (1, 2): KForm.basis(7, 7, coeff=lam),
        (3, 4): KForm.basis(7, 7, coeff=mu),
        (5, 6): KForm.basis(7, 7, coeff=tau),
    }
    return Connection.from_entries(7, entries, name="A_lambda_mu_tau")


def N31_golden(a=None, b=None, lam=None, mu=None, tau=None) -> tuple:
    a, b = _sym(a, "a"), _sym(b, "b")
    lam, mu, tau = _sym(lam, "lambda"), _sym(mu, "mu"), _sym(tau, "tau")
    beta = _f(7, (a, 1, 2), (b, 3, 4), (-(a + b), 5, 6))
    four = _f(7, (a * b, 1, 2, 3, 4), (-a * (a + b), 1, 2, 5, 6), (-b * (a + b), 3, 4, 5, 6))
    s = a ** 2 + a * b + b ** 2
    lc = _f(7, (a * b * (5 * a ** 2 + 4 * a * b + 5 * b ** 2), 1, 2, 3, 4),
            (-a * (a + b) * (6 * a ** 2 + 6 * a * b + 5 * b ** 2), 1, 2, 5, 6),
            (-b * (a + b) * (5 * a ** 2 + 6 * a * b + 6 * b ** 2), 3, 4, 5, 6)) * Fraction(1, 4)
    return (
        Golden("T", _f(7, (a, 1, 2, 7), (b, 3, 4, 7), (-(a + b), 5, 6, 7)), "n31: T = -*dTheta = a e127 + b e347 - (a+b)e567"),
        Golden("dT", four * 2, "n31: dT = 2ab e1234 - 2a(a+b)e1256 - 2b(a+b)e3456"),
        Golden("Omega(plus)^1_2", beta * (-a), "n31 torsion-connection curvature"),
        Golden("Omega(plus)^3_4", beta * (-b), "n31 torsion-connection curvature"),
        Golden("Omega(plus)^5_6", beta * (a + b), "n31 torsion-connection curvature"),
        Golden("q1(plus)", four * (4 * s), "n31: p1(nabla+) = ((a^2+ab+b^2)/2pi^2)(ab e1234 - ...)"),
        Golden("q1(levi-civita)", lc, "n31 Levi-Civita: p1(nabla^g) = (1/32pi^2)[ab(5a^2+4ab+5b^2)e1234 - ...]"),
        Golden("Omega(A)^1_2", beta * lam, "n31 instanton curvature"),
        Golden("Omega(A)^3_4", beta * mu, "n31 instanton curvature"),
        Golden("Omega(A)^5_6", beta * tau, "n31 instanton curvature"),
        Golden("q1(A)", four * (2 * (lam ** 2 + mu ** 2 + tau ** 2)), "n31 instanton: p1(A) = ((l^2+m^2+t^2)/4pi^2)(ab e1234 - ...)"),
        Golden("alpha'", (Scalar.const(4), 2 * s - lam ** 2 - mu ** 2 - tau ** 2),
               "n31 anomaly: alpha' = 4(2(a^2+ab+b^2) - lambda^2 - mu^2 - tau^2)^-1"),
    )


def N31_configuration(a=None, b=None, lam=None, mu=None, tau=None) -> Configuration:
    return Configuration(
        "n31",
        build_N31(a, b),
        standard_g2(),
        instanton_A_lmt(lam, mu, tau),
        N31_golden(a, b, lam, mu, tau),
        assumptions="a, b, a + b nonzero; alpha' > 0 needs lambda^2 + mu^2 + tau^2 < 2(a^2 + ab + b^2)",
    )


# ----------------------------------------------------------------- h8 family

def build_h8(a=None, b=None, c=None) -> LieAlgebraModel:
    a, b, c = _sym(a, "a"), _sym(b, "b"), _sym(c, "c")
    d = {
        1: _f(8, (c, 2, 4), (c, 2, 5), (-c, 3, 4), (c, 3, 5)),
        8: _f(8, (a, 2, 3), (b, 4, 5), (-(a + b), 6, 7)),
    }
    params = sorted(set().union(a.params(), b.params(), c.params()))
    return LieAlgebraModel.from_dict(8, d, params, "h8")


def instanton_A_lm(lam=None, mu=None) -> Connection:
    lam, mu = _sym(lam, "lambda"), _sym(mu, "mu")
    le8 = KForm.basis(8, 8, coeff=lam)
    me1 = KForm.basis(8, 1, coeff=mu)
    entries = {
        (2, 3): le8, (4, 5): le8,
        (2, 4): -me1, (2, 5): -me1, (3, 5): -me1, (4, 3): -me1,
        (3, 4): me1, (4, 2): me1, (5, 2): me1, (5, 3): me1,
        (6, 7): KForm.basis(8, 8, coeff=-2 * lam),
    }
    return Connection.from_entries(8, entries, name="A_lambda_mu")


def h8_golden(a=None, b=None, c=None, lam=None, mu=None) -> tuple:
    a, b, c = _sym(a, "a"), _sym(b, "b"), _sym(c, "c")
    lam, mu = _sym(lam, "lambda"), _sym(mu, "mu")
    s = a ** 2 + a * b + b ** 2
    common = _f(8, (-c ** 2, 2, 4), (-c ** 2, 2, 5), (c ** 2, 3, 4), (-c ** 2, 3, 5))
    e18 = KForm.basis(8, 1, 8, coeff=(a - b) * c)
    gamma = _f(8, (a, 2, 3), (b, 4, 5), (-(a + b), 6, 7))
    eta = _f(8, (1, 2, 4), (1, 2, 5), (-1, 3, 4), (1, 3, 5))
    return (
        Golden("T", _f(8, (c, 1, 2, 4), (c, 1, 2, 5), (-c, 1, 3, 4), (c, 1, 3, 5), (a, 2, 3, 8), (b, 4, 5, 8), (-(a + b), 6, 7, 8)),
               "h8: T = *dPhi = c e124 + c e125 - c e134 + c e135 + a e238 + b e458 - (a+b)e678"),
        Golden("dT", _f(8, (2 * (a * b - 2 * c ** 2), 2, 3, 4, 5), (-2 * a * (a + b), 2, 3, 6, 7), (-2 * b * (a + b), 4, 5, 6, 7)),
               "h8: dT = 2(ab - 2c^2)e2345 - 2a(a+b)e2367 - 2b(a+b)e4567"),
        Golden("Omega(plus)^2_3", _f(8, (-a ** 2, 2, 3), (-a * b, 4, 5), (a * (a + b), 6, 7)), "h8 torsion-connection curvature"),
        Golden("Omega(plus)^2_4", e18 + common, "h8 torsion-connection curvature"),
        Golden("Omega(plus)^3_5", e18 + common, "h8 torsion-connection curvature"),
        Golden("Omega(plus)^2_5", -e18 + common, "h8 torsion-connection curvature"),
        Golden("Omega(plus)^3_4", e18 - common, "h8 torsion-connection curvature: (Omega+)^2_5 = -(Omega+)^3_4"),
        Golden("Omega(plus)^4_5", _f(8, (-a * b, 2, 3), (-b ** 2, 4, 5), (b * (a + b), 6, 7)), "h8 torsion-connection curvature"),
        Golden("Omega(plus)^6_7", _f(8, (a * (a + b), 2, 3), (b * (a + b), 4, 5), (-(a + b) ** 2, 6, 7)), "h8 torsion-connection curvature"),
        Golden("q1(plus)", _f(8, (a * b * s - 4 * c ** 4, 2, 3, 4, 5), (-a * (a + b) * s, 2, 3, 6, 7), (-b * (a + b) * s, 4, 5, 6, 7)) * 4,
               "h8: 2pi^2 p1(nabla+) = (ab(a^2+ab+b^2) - 4c^4)e2345 - ..."),
        Golden("Omega(A)^2_3", gamma * lam, "h8 instanton curvature"),
        Golden("Omega(A)^4_5", gamma * lam, "h8 instanton curvature"),
        Golden("Omega(A)^2_4", eta * (-mu * c), "h8 instanton curvature"),
        Golden("Omega(A)^2_5", eta * (-mu * c), "h8 instanton curvature"),
        Golden("Omega(A)^3_4", eta * (mu * c), "h8 instanton curvature: -(Omega^A)^3_4 = -mu c(...)"),
        Golden("Omega(A)^3_5", eta * (-mu * c), "h8 instanton curvature"),
        Golden("Omega(A)^6_7", gamma * (-2 * lam), "h8 instanton curvature"),
        Golden("q1(A)", _f(8, (3 * a * b * lam ** 2 - 4 * c ** 2 * mu ** 2, 2, 3, 4, 5), (-3 * a * (a + b) * lam ** 2, 2, 3, 6, 7),
                           (-3 * b * (a + b) * lam ** 2, 4, 5, 6, 7)) * 4,
               "h8 instanton: 2pi^2 p1(A) = (3ab lambda^2 - 4c^2 mu^2)e2345 - ..."),
        Golden("alpha'", (Scalar.const(2), s - 3 * lam ** 2), "h8 anomaly: alpha' = 2(a^2 + ab + b^2 - 3 lambda^2)^-1"),
    )


def h8_mu_relation(a=None, b=None, c=None, lam=None) -> tuple:
    """``mu^2 = (3 lambda^2 - (a^2+ab+b^2) + 2c^2) / 2`` from the h8 anomaly constraint."""
    a, b, c, lam = _sym(a, "a"), _sym(b, "b"), _sym(c, "c"), _sym(lam, "lambda")
    return ("mu", (3 * lam ** 2 - (a ** 2 + a * b + b ** 2) + 2 * c ** 2) * Fraction(1, 2))


def h8_configuration(a=None, b=None, c=None, lam=None, mu=None, constrained: bool = True) -> Configuration:
    relations = ()
    if constrained and mu is None:
        relations = (h8_mu_relation(a, b, c, lam),)
    return Configuration(
        "h8",
        build_h8(a, b, c),
        standard_spin7(),
        instanton_A_lm(lam, mu),
        h8_golden(a, b, c, lam, mu),
        relations,
        assumptions="3 lambda^2 - 2 mu^2 = a^2 + ab + b^2 - 2c^2 and 3 lambda^2 < a^2 + ab + b^2",
    )


def h8_levi_civita_configuration(lam=None, mu=None) -> Configuration:
    """h8 at a = b = c = 1 with the Levi-Civita connection in the anomaly."""
    lam_s = _sym(lam, "lambda")
    relations = ()
    if mu is None:
        relations = (("mu", (96 * lam_s ** 2 - 9) * Fraction(1, 64)),)
    golden = (
        Golden("q1(levi-civita)", _f(8, (-5, 2, 3, 4, 5), (-19, 2, 3, 6, 7), (-19, 4, 5, 6, 7)) * Fraction(1, 2),
               "h8 Levi-Civita at a=b=c=1: 16pi^2 p1(nabla^g) = -5e2345 - 19e2367 - 19e4567"),
        Golden("dT", _f(8, (-2, 2, 3, 4, 5), (-4, 2, 3, 6, 7), (-4, 4, 5, 6, 7)), "h8 Levi-Civita at a=b=c=1: dT = -2e2345 - 4e2367 - 4e4567"),
        Golden("alpha'", (Scalar.const(32), 19 - 48 * lam_s ** 2), "h8 Levi-Civita at a=b=c=1: alpha' = 32(19 - 48 lambda^2)^-1", "levi-civita"),
    )
    return Configuration(
        "h8-lc",
        build_h8(1, 1, 1),
        standard_spin7(),
        instanton_A_lm(lam, mu),
        golden,
        relations,
        assumptions="64 mu^2 = 96 lambda^2 - 9 and 48 lambda^2 < 19",
    )


# ------------------------------------------------------- product extensions

def build_h3(t=None) -> LieAlgebraModel:
    t = _sym(t, "t")
    return LieAlgebraModel.from_dict(6, {6: _f(6, (-2 * t, 1, 2), (2 * t, 3, 4))}, sorted(t.params()), "h3")


def su3_balanced(L: LieAlgebraModel, su3: SU3Data) -> bool:
    """Constant-dilaton Strominger conditions ``dF ^ F = dPsi+ = dPsi- = 0``."""
    d = lambda f: ce_differential(L, f)
    return wedge(d(su3.F), su3.F).is_zero() and d(su3.psi_plus).is_zero() and d(su3.psi_minus).is_zero()


def extend_g2_product(L6: LieAlgebraModel, su3: SU3Data | None = None) -> tuple:
    """``M^6 x S^1`` with ``Theta = F ^ e7 + Psi+``; returns ``(model, structure)``."""
    su3 = su3 or standard_su3()
    if L6.dim != 6:
        raise CatalogError("extend_g2_product needs a 6-dimensional model")
    if closure_failures(L6):
        raise ClosureError(closure_failures(L6))
    if not su3_balanced(L6, su3):
        raise CatalogError("SU(3) structure does not satisfy dF^F = dPsi+ = dPsi- = 0")
    d = {k: embed(L6.d_of_frame[k - 1], 7) for k in range(1, 7)}
    L7 = LieAlgebraModel.from_dict(7, d, L6.params, f"{L6.name}-x-s1")
    theta = wedge(embed(su3.F, 7), KForm.basis(7, 7)) + embed(su3.psi_plus, 7)
    return L7, GStructure("G2", theta)


def extend_connection(C: Connection, dim: int, shift: int) -> Connection:
    """Extend by zero rows/columns; old index ``i`` becomes ``i + shift``."""
    z = KForm.zero(dim, 1)
    rows = [[z] * dim for _ in range(dim)]
    for i in range(1, C.dim + 1):
        for j in range(1, C.dim + 1):
            rows[i + shift - 1][j + shift - 1] = embed(C.form(i, j), dim, shift)
    return Connection(dim, tuple(tuple(r) for r in rows), C.name)


def extend_spin7_product(L7: LieAlgebraModel, S7: GStructure | None = None) -> tuple:
    """``S^1 x M^7`` with a closed ``e1`` prepended and ``Phi = e1 ^ Theta + *_7 Theta``."""
    S7 = S7 or standard_g2()
    if L7.dim != 7:
        raise CatalogError("extend_spin7_product needs a 7-dimensional model")
    cls = classify_g2(L7, S7)
    if not (cls.cocalibrated and cls.pure_type):
        raise CatalogError("G2 structure is not cocalibrated of pure type")
    d = {k + 1: embed(L7.d_of_frame[k - 1], 8, 1) for k in range(1, 8)}
    L8 = LieAlgebraModel.from_dict(8, d, L7.params, f"{L7.name}-x-s1")
    return L8, GStructure("Spin7", spin7_from_g2(S7.form))


def h7_x_s1_configuration(t=None) -> Configuration:
    L7, S = extend_g2_product(build_h3(t))
    return Configuration("h7-x-s1", L7, S, Connection.zero(7), assumptions="t != 0")


def n31_x_s1_configuration(a=None, b=None, lam=None, mu=None, tau=None) -> Configuration:
    L8, S = extend_spin7_product(build_N31(a, b))
    A = extend_connection(instanton_A_lmt(lam, mu, tau), 8, 1)
    return Configuration("n31-x-s1", L8, S, A, assumptions="a, b, a + b nonzero")


# ------------------------------------------------------------------ registry

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    params: tuple  # declared parameter names, in order
    defaults: Mapping[str, Fraction]
    builder: Callable[..., Configuration] = field(repr=False)

    def build(self, values: Mapping[str, object] | None = None, symbolic: bool = False) -> Configuration:
        """Build with ``values``; unspecified parameters take defaults unless
        ``symbolic`` is set, in which case they stay as symbols."""
        values = dict(values or {})
        unknown = set(values) - set(self.params)
        if unknown:
            raise CatalogError(f"unknown parameters for {self.name}: {sorted(unknown)}")
        kwargs = {}
        for p in self.params:
            if p in values:
                kwargs[p] = values[p]
            elif not symbolic:
                kwargs[p] = self.defaults[p]
            else:
                kwargs[p] = None
        return self.builder(**{_KW.get(p, p): v for p, v in kwargs.items()})


_KW = {"lambda": "lam"}

CATALOG = {
    e.name: e
    for e in [
        CatalogEntry("h7", "7-dim extension of h3 with A_lambda", ("t", "c1", "c2", "lambda"),
                     {"t": Fraction(1), "c1": Fraction(1), "c2": Fraction(0), "lambda": Fraction(1, 3)}, h7_configuration),
        CatalogEntry("n31", "generalized Heisenberg N(3,1) with A_lambda_mu_tau", ("a", "b", "lambda", "mu", "tau"),
                     {"a": Fraction(1), "b": Fraction(1), "lambda": Fraction(1), "mu": Fraction(0), "tau": Fraction(0)}, N31_configuration),
        CatalogEntry("h8", "8-dim extension h8 with A_lambda_mu", ("a", "b", "c", "lambda", "mu"),
                     {"a": Fraction(1), "b": Fraction(1), "c": Fraction(1), "lambda": Fraction(3, 5), "mu": Fraction(1, 5)}, h8_configuration),
        CatalogEntry("h7-x-s1", "h3 x S^1 product G2 structure", ("t",), {"t": Fraction(1)}, h7_x_s1_configuration),
        CatalogEntry("n31-x-s1", "S^1 x N(3,1) product Spin(7) structure with extended A_lambda_mu_tau",
                     ("a", "b", "lambda", "mu", "tau"),
                     {"a": Fraction(1), "b": Fraction(1), "lambda": Fraction(1), "mu": Fraction(0), "tau": Fraction(0)},
                     n31_x_s1_configuration),
    ]
}
