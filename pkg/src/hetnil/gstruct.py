"""G2, Spin(7) and SU(3) structure data on invariant frames."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .exterior import KForm, embed, hodge_star, inner, wedge
from .lie import Curvature, LieAlgebraModel, ce_differential
from .scalars import ONE, ZERO, Scalar


class StructureError(ValueError):
    pass


class ConsistencyError(AssertionError):
    """Two routes that must agree on an instanton/structure test disagreed."""


def _form(dim: int, spec: str) -> KForm:
    # "+127 -236 ..." -> sum of unit basis forms
    terms = {}
    for tok in spec.split():
        sign = -1 if tok[0] == "-" else 1
        terms[tuple(int(ch) for ch in tok.lstrip("+-"))] = sign
    return KForm(dim, len(next(iter(terms))), terms)


THETA = _form(7, "+127 -236 +347 +567 -146 -245 +135")
STAR_THETA = _form(7, "+3456 +1457 +1256 +1234 +2357 +1367 -2467")
PHI = _form(8, "+1238 -1347 +1458 +1678 -1257 -1356 +1246 +4567 +2568 +2367 +2345 +3468 +2478 -3578")


@dataclass(frozen=True)
class GStructure:
    """A G2 structure (3-form in dim 7) or Spin(7) structure (4-form in dim 8)."""

    kind: str  # "G2" or "Spin7"
    form: KForm
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.kind == "G2":
            if self.form.dim != 7 or self.form.degree != 3:
                raise StructureError("a G2 structure is a 3-form in dimension 7")
        elif self.kind == "Spin7":
            if self.form.dim != 8 or self.form.degree != 4:
                raise StructureError("a Spin(7) structure is a 4-form in dimension 8")
            if hodge_star(self.form) != self.form:
                raise StructureError("Spin(7) form is not self-dual")
        else:
            raise StructureError(f"unknown structure kind {self.kind!r}")
        g = metric_from_structure(self)
        n = self.dim
        if any(g[i][j] != (ONE if i == j else ZERO) for i in range(n) for j in range(n)):
            raise StructureError("fundamental form does not induce the frame metric")

    @property
    def dim(self) -> int:
        return self.form.dim

    def dual(self) -> KForm:
        """``*Theta`` for G2; ``Phi`` itself for Spin(7)."""
        return hodge_star(self.form) if self.kind == "G2" else self.form

    def psi(self) -> KForm:
        """The 4-form ``-*Theta`` (dim 7) or ``-Phi`` (dim 8)."""
        return -self.dual()


def standard_g2() -> GStructure:
    return GStructure("G2", THETA)


def standard_spin7() -> GStructure:
    return GStructure("Spin7", PHI)


def structure_for(dim: int) -> GStructure:
    if dim == 7:
        return standard_g2()
    if dim == 8:
        return standard_spin7()
    raise StructureError(f"no standard structure in dimension {dim}")


# Normalizations of the contraction sum_{kl..} X_ikl.. X_jkl.. over all index
# orderings.  For the standard Spin(7) form every index sits in 7 terms with 3!
# orderings each, so the sum is 42 delta_ij; a factor 1/24 would give 7/4 delta_ij.
METRIC_FACTOR = {"G2": Fraction(1, 6), "Spin7": Fraction(1, 42)}
PRINTED_SPIN7_FACTOR = Fraction(1, 24)


def structure_contraction(S: GStructure) -> list[list[Scalar]]:
    """Unnormalized ``sum X_ikl.. X_jkl..`` over all orderings of the tail indices."""
    full = S.form.full_components()
    n = S.form.dim
    g = [[ZERO] * n for _ in range(n)]
    by_tail: dict = {}
    for idx, v in full.items():
        by_tail.setdefault(idx[1:], []).append((idx[0], v))
    for entries in by_tail.values():
        for i, vi in entries:
            for j, vj in entries:
                g[i - 1][j - 1] = g[i - 1][j - 1] + vi * vj
    return g


def metric_from_structure(S: GStructure, factor=None) -> list[list[Scalar]]:
    """``(1/6) Theta_ikl Theta_jkl`` or ``(1/42) Phi_iklm Phi_jklm``, summed over all orderings."""
    factor = METRIC_FACTOR[S.kind] if factor is None else Fraction(factor)
    return [[x * factor for x in row] for row in structure_contraction(S)]


@dataclass(frozen=True)
class SU3Data:
    F: KForm
    psi_plus: KForm
    psi_minus: KForm
    J: tuple  # J[i-1] = (k, sign) with J(E_i) = sign * E_k

    @property
    def dim(self) -> int:
        return 6


def standard_su3() -> SU3Data:
    e = [KForm.basis(6, i) for i in range(1, 7)]
    F = wedge(e[0], e[1]) + wedge(e[2], e[3]) + wedge(e[4], e[5])
    # (e1 + i e2)(e3 + i e4) = re1 + i im1
    re1 = wedge(e[0], e[2]) - wedge(e[1], e[3])
    im1 = wedge(e[0], e[3]) + wedge(e[1], e[2])
    psi_plus = wedge(re1, e[4]) - wedge(im1, e[5])
    psi_minus = wedge(re1, e[5]) + wedge(im1, e[4])
    J = ((2, 1), (1, -1), (4, 1), (3, -1), (6, 1), (5, -1))
    return SU3Data(F, psi_plus, psi_minus, J)


def codifferential(L: LieAlgebraModel, a: KForm) -> KForm:
    """``delta = (-1)^(n(k+1)+1) * d *`` on k-forms in dimension n."""
    n, k = a.dim, a.degree
    sign = -1 if (n * (k + 1) + 1) % 2 else 1
    return hodge_star(ce_differential(L, hodge_star(a))) * sign


def lee_form(L: LieAlgebraModel, S: GStructure) -> KForm:
    if L.dim != S.dim:
        raise StructureError("model and structure dimensions differ")
    if S.kind == "G2":
        th = S.form
        return hodge_star(wedge(hodge_star(ce_differential(L, th)), th)) * Fraction(-1, 3)
    phi = S.form
    return hodge_star(wedge(codifferential(L, phi), phi)) * Fraction(1, 7)


def lee_form_alternate(L: LieAlgebraModel, S: GStructure) -> KForm:
    """An equivalent expression for the Lee form, used as a cross-check."""
    if S.kind == "G2":
        st = S.dual()
        return hodge_star(wedge(hodge_star(ce_differential(L, st)), st)) * Fraction(1, 3)
    phi = S.form
    return hodge_star(wedge(hodge_star(ce_differential(L, phi)), phi)) * Fraction(-1, 7)


@dataclass(frozen=True)
class G2Class:
    cocalibrated: bool
    pure_type: bool

    @property
    def supersymmetric(self) -> bool:
        return self.cocalibrated and self.pure_type


@dataclass(frozen=True)
class Spin7Class:
    balanced: bool

    @property
    def supersymmetric(self) -> bool:
        return self.balanced


def classify_g2(L: LieAlgebraModel, S: GStructure) -> G2Class:
    if S.kind != "G2" or L.dim != 7:
        raise StructureError("classify_g2 needs a G2 structure on a 7-dimensional model")
    d_theta = ce_differential(L, S.form)
    return G2Class(
        cocalibrated=ce_differential(L, S.dual()).is_zero(),
        pure_type=wedge(d_theta, S.form).is_zero(),
    )


def classify_spin7(L: LieAlgebraModel, S: GStructure) -> Spin7Class:
    if S.kind != "Spin7" or L.dim != 8:
        raise StructureError("classify_spin7 needs a Spin(7) structure on an 8-dimensional model")
    return Spin7Class(balanced=wedge(hodge_star(ce_differential(L, S.form)), S.form).is_zero())


def classify(L: LieAlgebraModel, S: GStructure):
    return classify_g2(L, S) if S.kind == "G2" else classify_spin7(L, S)


def torsion_3form(L: LieAlgebraModel, S: GStructure) -> KForm:
    """Torsion of the characteristic connection.

    G2 (integrable): ``(1/6)<dTheta, *Theta> Theta - *dTheta + *(theta ^ Theta)``.
    Spin(7): ``*dPhi - (7/6) *(theta ^ Phi)``.
    """
    if S.kind == "G2":
        th = S.form
        d_theta = ce_differential(L, th)
        lee = lee_form(L, S)
        return th * (inner(d_theta, S.dual()) * Fraction(1, 6)) - hodge_star(d_theta) + hodge_star(wedge(lee, th))
    phi = S.form
    lee = lee_form(L, S)
    return hodge_star(ce_differential(L, phi)) - hodge_star(wedge(lee, phi)) * Fraction(7, 6)


def _contract_2_4(beta: KForm, X: KForm) -> KForm:
    """``sum_pq beta_pq X_pqmn`` as a 2-form in (m, n)."""
    terms: dict = {}
    b = beta.full_components()
    for (p, q, m, n), x in X.full_components().items():
        if m < n:
            v = b.get((p, q))
            if v is not None:
                terms[(m, n)] = terms.get((m, n), ZERO) + v * x
    return KForm(X.dim, 2, terms)


def _contract_2_3(beta: KForm, X: KForm) -> KForm:
    """``sum_mn beta_mn X_mnp`` as a 1-form in p."""
    terms: dict = {}
    b = beta.full_components()
    for (m, n, p), x in X.full_components().items():
        v = b.get((m, n))
        if v is not None:
            terms[(p,)] = terms.get((p,), ZERO) + v * x
    return KForm(X.dim, 1, terms)


def _su3_pullback(beta: KForm, S: SU3Data) -> KForm:
    # (J^* beta)(E_i, E_j) = beta(J E_i, J E_j)
    out = {}
    for i in range(1, 7):
        for j in range(i + 1, 7):
            ki, si = S.J[i - 1]
            kj, sj = S.J[j - 1]
            v = beta.component((ki, kj))
            if v:
                out[(i, j)] = v * (si * sj)
    return KForm(6, 2, out)


def in_subalgebra(beta: KForm, S: Union[GStructure, SU3Data]) -> bool:
    """Membership of a 2-form in g2, spin(7) or su(3)."""
    if not beta:
        return True
    if beta.degree != 2 or beta.dim != S.dim:
        raise StructureError("in_subalgebra needs a 2-form of the structure's dimension")
    if isinstance(S, SU3Data):
        return _su3_pullback(beta, S) == beta and inner(beta, S.F).is_zero()
    primary = hodge_star(wedge(beta, S.form)) == -beta
    if S.kind == "G2":
        alt = wedge(beta, S.dual()).is_zero()
        if alt != primary:
            raise ConsistencyError("g2 membership tests *(b^Theta) = -b and b ^ *Theta = 0 disagree")
    return primary


def is_instanton(K: Curvature, S: GStructure) -> bool:
    """All curvature 2-forms lie in g2 / spin(7); checked by two routes."""
    if K.dim != S.dim:
        raise StructureError("curvature and structure dimensions differ")
    four = S.dual()
    verdict = True
    n = K.dim
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            om = K.form(i, j)
            if not om:
                continue
            member = in_subalgebra(om, S)
            contract = _contract_2_4(om, four) * Fraction(-1, 2) == om
            if S.kind == "G2":
                contract = contract and _contract_2_3(om, S.form).is_zero()
            if member != contract:
                raise ConsistencyError(f"instanton routes disagree on Omega^{i}_{j}")
            verdict = verdict and member
    return verdict


def g2_projector(beta: KForm, S: GStructure) -> KForm:
    """Projection of a 2-form onto g2: ``(2 beta - *(beta ^ Theta)) / 3``.

    ``*(beta ^ Theta)`` acts as -1 on g2 and as 2 on its complement.
    """
    return (beta * 2 - hodge_star(wedge(beta, S.form))) * Fraction(1, 3)


def spin7_from_g2(theta: KForm) -> KForm:
    """``e^1 ^ Theta + *_7 Theta`` with Theta moved to indices 2..8."""
    star7 = hodge_star(theta)
    e1 = KForm.basis(8, 1)
    return wedge(e1, embed(theta, 8, 1)) + embed(star7, 8, 1)
