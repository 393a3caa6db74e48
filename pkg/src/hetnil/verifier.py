"""Heterotic checks on invariant data: anomaly solve, the quadratic curvature
condition, equations-of-motion residuals and the Ricci identity suite.

Everything is exact.  The only quotient, alpha', is kept as a numerator /
denominator pair of polynomials and compared by cross-multiplication.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Mapping, Sequence

from .exterior import KForm, norm2
from .gstruct import (
    METRIC_FACTOR,
    PRINTED_SPIN7_FACTOR,
    GStructure,
    classify,
    codifferential,
    is_instanton,
    lee_form,
    lee_form_alternate,
    metric_from_structure,
    structure_contraction,
    torsion_3form,
)
from .lie import (
    ClosureError,
    Connection,
    Curvature,
    LieAlgebraModel,
    ce_differential,
    closure_failures,
    connection_torsion,
    covariant_derivative,
    curvature,
    divergence,
    levi_civita,
    pontrjagin_q1,
    ricci,
    scalar_curvature,
    tensor_covariant_derivative,
    with_torsion,
)
from .scalars import ONE, ZERO, Scalar, as_scalar

SCHEMA = 1
RICCI_CONVENTION = "Ric_mn = sum_i R(i,m,n,i), R(i,j,k,l) = Omega^l_k(E_i,E_j)"
Relations = Sequence[tuple]  # ((name, value), ...) meaning name^2 == value


def reducer(relations: Relations) -> Callable[[Scalar], Scalar]:
    """Scalar map applying every ``name^2 == value`` relation."""
    rels = tuple(relations or ())

    def red(s: Scalar) -> Scalar:
        for name, value in rels:
            s = s.reduce_square(name, value)
        return s

    return red


def _reduce_form(f: KForm, red) -> KForm:
    return f.map_coeffs(red)


# ------------------------------------------------------------------ anomaly

@dataclass(frozen=True)
class AlphaPrime:
    """Outcome of solving ``dT = (alpha'/4) (q1_R - q1_A)``.

    ``status`` is ``"ratio"`` (alpha' = numerator/denominator), ``"any"`` (both
    sides vanish) or ``"none"`` (no alpha' works; see ``diagnostic``).
    """

    status: str
    numerator: Scalar = ZERO
    denominator: Scalar = ONE
    diagnostic: str = ""

    def value_at(self, point: Mapping[str, Fraction]) -> Fraction | None:
        if self.status != "ratio":
            return None
        den = self.denominator.eval(point)
        if den == 0:
            return None
        return self.numerator.eval(point) / den

    def positive_at(self, point: Mapping[str, Fraction]) -> bool:
        v = self.value_at(point)
        return v is not None and v > 0

    def is_constant(self) -> bool:
        return self.status == "ratio" and self.numerator.is_constant() and self.denominator.is_constant()

    def equals(self, num: Scalar, den: Scalar, red=None) -> bool:
        if self.status != "ratio":
            return False
        red = red or (lambda s: s)
        return red(self.numerator * as_scalar(den) - as_scalar(num) * self.denominator).is_zero()

    def to_str(self) -> str:
        if self.status == "any":
            return "any"
        if self.status == "none":
            return "none"
        if self.denominator == ONE:
            return self.numerator.to_str()
        num, den = self.numerator.to_str(), self.denominator.to_str()
        # parenthesize anything that would not bind as a single factor
        if len(self.numerator.terms) > 1 or num.startswith("-") or "/" in num:
            num = f"({num})"
        if any(ch in den for ch in " */-"):
            den = f"({den})"
        return f"{num}/{den}"


def _normalize_ratio(num: Scalar, den: Scalar) -> tuple[Scalar, Scalar]:
    cn, cd = num.content(), den.content()
    if cn:
        num, den = num / cd, den / cd
    # a constant numerator over a nonconstant denominator is kept positive,
    # otherwise the denominator leads with +
    if num.is_constant() and not den.is_constant():
        q = Fraction(num.constant_value()).denominator
        num, den = num * q, den * q
        flip = num.constant_value() < 0
    else:
        flip = den.leading_coefficient() < 0
    if flip:
        num, den = -num, -den
    return num, den


def anomaly_solve(dT: KForm, q1_R: KForm, q1_A: KForm, relations: Relations = ()) -> AlphaPrime:
    """Solve ``dT = (alpha'/4) D`` with ``D = q1_R - q1_A`` by cross-multiplication."""
    red = reducer(relations)
    for f in (q1_R, q1_A):
        if f and (f.degree != 4 or f.dim != dT.dim):
            raise ValueError("anomaly_solve needs 4-forms of the same dimension")
    D = _reduce_form(q1_R - q1_A if q1_A else q1_R, red)
    dT = _reduce_form(dT, red)
    if D.is_zero():
        if dT.is_zero():
            return AlphaPrime("any", diagnostic="dT and q1_R - q1_A both vanish")
        return AlphaPrime("none", diagnostic="q1_R - q1_A vanishes but dT does not")
    keys = sorted(set(D.terms) | set(dT.terms))
    ref = next(k for k in keys if D.coeff(k))
    dI, DI = dT.coeff(ref), D.coeff(ref)
    for k in keys:
        if red(dT.coeff(k) * DI - dI * D.coeff(k)):
            name = lambda idx: "e" + "".join(map(str, idx))
            return AlphaPrime(
                "none",
                diagnostic=f"dT and q1_R - q1_A are not proportional: tuples {name(ref)} and {name(k)} disagree",
            )
    # alpha' = 4 dT_I / D_I for any reference tuple I; choose the simplest form
    best = None
    for k in keys:
        Dk = D.coeff(k)
        if not Dk:
            continue
        num, den = dT.coeff(k) * 4, Dk
        if num:
            q = den.exact_quotient(dT.coeff(k))
            if q is not None:
                num, den = Scalar.const(4), q
        if not num:
            den = ONE
        else:
            num, den = _normalize_ratio(num, den)
        size = (len(num.terms) + len(den.terms), num.degree() + den.degree())
        if best is None or size < best[0]:
            best = (size, num, den)
    _, num, den = best
    return AlphaPrime("ratio", red(num), red(den))


# ------------------------------------------------ quadratic curvature condition

def _pair_table(K: Curvature) -> dict:
    # (i, j) -> {(a, b): R(i, j, a, b)}
    out: dict = {}
    for (i, j, a, b), v in K.tensor().items():
        out.setdefault((i, j), {})[(a, b)] = v
    return out


def _pair_products(K: Curvature) -> dict:
    """``S[(m,j),(k,l)] = sum_ab R_mjab R_klab`` over nonzero pairs."""
    cache = K._cache.get("pair_products")
    if cache is not None:
        return cache
    table = _pair_table(K)
    keys = list(table)
    S: dict = {}
    for x in keys:
        tx = table[x]
        for y in keys:
            ty = table[y]
            small, big = (tx, ty) if len(tx) <= len(ty) else (ty, tx)
            acc = ZERO
            for ab, v in small.items():
                w = big.get(ab)
                if w is not None:
                    acc = acc + v * w
            if acc:
                S[(x, y)] = acc
    K._cache["pair_products"] = S
    return S


def curvature_square(K: Curvature) -> list[list[Scalar]]:
    """``sum_pqr R_mpqr R_npqr`` over all orderings, as an n x n matrix."""
    n = K.dim
    S = _pair_products(K)
    out = [[ZERO] * n for _ in range(n)]
    for ((m, p), (nn, q)), v in S.items():
        if p == q:
            out[m - 1][nn - 1] = out[m - 1][nn - 1] + v
    return out


def condition_4_8_residual(K: Curvature, psi: KForm) -> list[list[Scalar]]:
    """``(1/6) [R_mjab R_klab + R_mkab R_ljab + R_mlab R_jkab] Psi_jkln + R_mpqr R_npqr``.

    All sums run over every index ordering.  The bracket is the component
    ``q1_mjkl`` of the Pontrjagin 4-form, and for a curvature whose 2-forms lie in
    the structure algebra ``(1/6) q1_mjkl Psi_jkln = -R_mpqr R_npqr``; so the
    residual vanishes for instantons and its vanishing for the anomaly
    connection is what makes the Einstein equation follow.
    """
    n = K.dim
    S = _pair_products(K)
    get = lambda x, y: S.get((x, y), ZERO)
    lhs = [[ZERO] * n for _ in range(n)]
    for (j, k, l, nn), ps in psi.full_components().items():
        for m in range(1, n + 1):
            acc = get((m, j), (k, l)) + get((m, k), (l, j)) + get((m, l), (j, k))
            if acc:
                lhs[m - 1][nn - 1] = lhs[m - 1][nn - 1] + acc * ps
    sq = curvature_square(K)
    return [[lhs[i][j] * Fraction(1, 6) + sq[i][j] for j in range(n)] for i in range(n)]


# -------------------------------------------------------- identity suite

def _matrix(n: int) -> list:
    return [[ZERO] * n for _ in range(n)]


def torsion_square(T: KForm) -> list[list[Scalar]]:
    """``sum_pq T_mpq T_npq``."""
    n = T.dim
    out = _matrix(n)
    by_tail: dict = {}
    for (m, p, q), v in T.full_components().items():
        by_tail.setdefault((p, q), []).append((m, v))
    for entries in by_tail.values():
        for m, vm in entries:
            for nn, vn in entries:
                out[m - 1][nn - 1] = out[m - 1][nn - 1] + vm * vn
    return out


def _contract_4_psi(X: Mapping[tuple, Scalar], psi: KForm, n: int) -> list[list[Scalar]]:
    """``sum_jkl X_mjkl Psi_jkln``."""
    out = _matrix(n)
    pf = psi.full_components()
    for (m, j, k, l), v in X.items():
        for nn in range(1, n + 1):
            w = pf.get((j, k, l, nn))
            if w is not None:
                out[m - 1][nn - 1] = out[m - 1][nn - 1] + v * w
    return out


@dataclass
class Geometry:
    """Derived data of a model with a G2/Spin(7) structure and its torsion connection."""

    model: LieAlgebraModel
    structure: GStructure
    torsion: KForm
    dT: KForm
    levi_civita: Connection
    plus: Connection
    K_plus: Curvature
    K_lc: Curvature

    @classmethod
    def build(cls, L: LieAlgebraModel, S: GStructure) -> "Geometry":
        fails = closure_failures(L)
        if fails:
            raise ClosureError(fails)
        T = torsion_3form(L, S)
        lc = levi_civita(L)
        plus = with_torsion(L, lc, T, 1, name="plus")
        return cls(L, S, T, ce_differential(L, T), lc, plus, curvature(L, plus), curvature(L, lc))

    @property
    def dim(self) -> int:
        return self.model.dim

    def nabla_plus_T(self) -> dict:
        """``{(m, j, k, l): (nabla+_m T)_jkl}``."""
        if not hasattr(self, "_npt"):
            self._npt = tensor_covariant_derivative(self.plus, self.torsion.full_components())
        return self._npt


def identity_residuals(G: Geometry) -> dict:
    """Nonzero entries of each Ricci/Bianchi identity residual, keyed by identity name.

    Names: ``ricci-relation`` (Ric^g vs Ric+ with the torsion divergence),
    ``ricci-antisymmetric`` (Ric+ - Ric+^t vs the divergence), ``ricci-symmetrized``,
    ``ricci-psi`` (2 Ric+ = R+ . Psi and its cyclic average), ``bianchi-difference``
    (cyclic sums of R+ over two slot groups), ``bianchi`` (first Bianchi identity),
    ``ricci-dT`` (Ric+ from dT and nabla+ T) and ``ricci-dT-constant-dilaton``.
    """
    n = G.dim
    r = range(1, n + 1)
    R = G.K_plus.tensor()
    Tf = G.torsion.full_components()
    dT = G.dT.full_components()
    psi = G.structure.psi()
    npt = G.nabla_plus_T()
    ricp = ricci(G.model, G.K_plus)
    ricg = ricci(G.model, G.K_lc)
    TT = torsion_square(G.torsion)
    div = divergence(npt)  # (m, n) -> sum_s (nabla+_s T)_smn
    g = lambda d, k: d.get(k, ZERO)

    R_psi = _contract_4_psi(R, psi, n)
    Rcyc = {}
    for (m, j, k, l), v in R.items():
        for key in ((m, j, k, l), (m, l, j, k), (m, k, l, j)):
            Rcyc[key] = Rcyc.get(key, ZERO) + v
    Rcyc_psi = _contract_4_psi(Rcyc, psi, n)
    dT_psi = _contract_4_psi(dT, psi, n)
    npt_psi = _contract_4_psi(npt, psi, n)

    res = {k: {} for k in ("ricci-relation", "ricci-antisymmetric", "ricci-symmetrized", "ricci-psi",
                           "bianchi-difference", "bianchi", "ricci-dT", "ricci-dT-constant-dilaton")}

    def put(name, key, v):
        if v:
            res[name][key] = v

    for m in r:
        for nn in r:
            i, j = m - 1, nn - 1
            put("ricci-relation", (m, nn), ricg[i][j] - ricp[i][j] - TT[i][j] * Fraction(1, 4) + g(div, (m, nn)) * Fraction(1, 2))
            put("ricci-antisymmetric", (m, nn), ricp[i][j] - ricp[j][i] - g(div, (m, nn)))
            put("ricci-symmetrized", (m, nn), ricg[i][j] - (ricp[i][j] + ricp[j][i]) * Fraction(1, 2) - TT[i][j] * Fraction(1, 4))
            put("ricci-psi", (m, nn, "direct"), ricp[i][j] * 2 - R_psi[i][j])
            put("ricci-psi", (m, nn, "cyclic"), ricp[i][j] * 2 - Rcyc_psi[i][j] * Fraction(1, 3))
            put("ricci-dT", (m, nn), ricp[i][j] - dT_psi[i][j] * Fraction(1, 12) - npt_psi[i][j] * Fraction(1, 6))
            put("ricci-dT-constant-dilaton", (m, nn), ricp[i][j] - dT_psi[i][j] * Fraction(1, 12))

    # sigma^T_jklm = T_jks T_lms + T_kls T_jms + T_ljs T_kms
    pairs: dict = {}
    for (x, y, s), v in Tf.items():
        pairs.setdefault(s, []).append(((x, y), v))
    sigT: dict = {}
    for s, entries in pairs.items():
        for (j, k), v in entries:
            for (l, m), w in entries:
                # T_jks T_lms contributes to the cyclic sum at (j,k,l,m), (l,j,k,m), (k,l,j,m)
                prod = v * w
                for key in ((j, k, l, m), (l, j, k, m), (k, l, j, m)):
                    if len(set(key[:3])) == 3:
                        sigT[key] = sigT.get(key, ZERO) + prod
    for j, k, l, m in product(r, repeat=4):
        cyc = g(R, (j, k, l, m)) + g(R, (k, l, j, m)) + g(R, (l, j, k, m))
        put("bianchi", (j, k, l, m), cyc - g(dT, (j, k, l, m)) + g(sigT, (j, k, l, m)) - g(npt, (m, j, k, l)))
        cyc2 = g(R, (m, j, k, l)) + g(R, (m, k, l, j)) + g(R, (m, l, j, k))
        put("bianchi-difference", (j, k, l, m), cyc - cyc2 - g(dT, (j, k, l, m)) * Fraction(3, 2) + g(sigT, (j, k, l, m)))
    return res


# ------------------------------------------------------- motion residuals

def _sparse_matrix(M, red=lambda s: s) -> dict:
    out = {}
    for i, row in enumerate(M, 1):
        for j, v in enumerate(row, 1):
            v = red(v)
            if v:
                out[(i, j)] = v
    return out


@dataclass
class MotionResult:
    einstein: dict  # combined residual (cross-multiplied), or base when alpha' is "any"
    einstein_quadratic: dict  # FF - RR, needed when alpha' is "any"
    einstein_chain: dict  # same residual rebuilt through Ric+ = (1/12)dT.Psi + (1/6)nabla+T.Psi
    einstein_defined: bool
    h_divergence: dict
    h_divergence_matches_codifferential: bool
    instanton_divergence: dict
    instanton_divergence_mixed: dict
    divergence_convention: str = "plus"

    @property
    def einstein_zero(self) -> bool:
        return self.einstein_defined and not self.einstein and not self.einstein_quadratic

    @property
    def routes_agree(self) -> bool:
        return self.einstein == self.einstein_chain

    @property
    def all_zero(self) -> bool:
        return self.einstein_zero and not self.h_divergence and not self.instanton_divergence


def motion_residuals(
    G: Geometry,
    K_R: Curvature,
    A: Connection,
    K_A: Curvature,
    alpha: AlphaPrime,
    relations: Relations = (),
    convention: str = "plus",
) -> MotionResult:
    """Constant-dilaton residuals of the three field equations.

    1. ``Ric^g - (1/4) T.T - (alpha'/4) [F.F - R.R]``, multiplied through by the
       denominator of alpha'.  The bundle trace in ``F.F = sum_m sum_{a<b} F_imab F_jmab``
       counts each pair ``a<b`` once, the same trace that defines q1.
    2. ``sum_i (nabla^g_i H)_ijk``.
    3. ``sum_i (nabla_i F)_ijab`` with ``nabla+`` on every slot (``convention="plus"``)
       or ``nabla+`` on the form slots and ``A`` on the bundle slots (``"mixed"``).
    """
    if convention not in ("plus", "mixed"):
        raise ValueError("convention must be 'plus' or 'mixed'")
    red = reducer(relations)
    n = G.dim
    ricg = ricci(G.model, G.K_lc)
    TT = torsion_square(G.torsion)
    FF = curvature_square(K_A)
    RR = curvature_square(K_R)
    base = [[ricg[i][j] - TT[i][j] * Fraction(1, 4) for j in range(n)] for i in range(n)]
    quad = [[(FF[i][j] - RR[i][j]) * Fraction(1, 2) for j in range(n)] for i in range(n)]

    # second route: Ric^g = sym(Ric+) + T.T/4 with Ric+ = (1/12) dT.Psi + (1/6) nabla+T.Psi
    # and dT replaced through the anomaly by (alpha'/4) D
    psi = G.structure.psi()
    npt_psi = _contract_4_psi(G.nabla_plus_T(), psi, n)
    D = pontrjagin_q1(K_R) - pontrjagin_q1(K_A)
    D_psi = _contract_4_psi(D.full_components(), psi, n)

    if alpha.status == "ratio":
        num, den = alpha.numerator, alpha.denominator
        einstein = [[base[i][j] * den - quad[i][j] * num * Fraction(1, 4) for j in range(n)] for i in range(n)]
        chain = [
            [
                (D_psi[i][j] + D_psi[j][i]) * num * Fraction(1, 96)
                + (npt_psi[i][j] + npt_psi[j][i]) * den * Fraction(1, 12)
                - quad[i][j] * num * Fraction(1, 4)
                for j in range(n)
            ]
            for i in range(n)
        ]
        e, eq, ec, defined = _sparse_matrix(einstein, red), {}, _sparse_matrix(chain, red), True
    elif alpha.status == "any":
        # any alpha' works for the anomaly; the equation must then hold for all of them
        chain = [[(npt_psi[i][j] + npt_psi[j][i]) * Fraction(1, 12) for j in range(n)] for i in range(n)]
        e, eq, ec, defined = _sparse_matrix(base, red), _sparse_matrix(quad, red), _sparse_matrix(chain, red), True
    else:
        e, eq, ec, defined = _sparse_matrix(base, red), _sparse_matrix(quad, red), {}, False

    nh = tensor_covariant_derivative(G.levi_civita, G.torsion.full_components())
    hdiv = {k: red(v) for k, v in divergence(nh).items() if red(v)}
    # sum_i (nabla_i T)_ijk = -(delta T)_jk
    cod = codifferential(G.model, G.torsion).full_components()
    matches = all(red(hdiv.get(k, ZERO) + cod.get(k, ZERO)).is_zero() for k in set(hdiv) | set(cod))

    F = K_A.tensor()
    plus_div = divergence(tensor_covariant_derivative(G.plus, F))
    mixed_div = divergence(tensor_covariant_derivative(G.plus, F, slots=[G.plus, G.plus, A, A]))
    plus_div = {k: red(v) for k, v in plus_div.items() if red(v)}
    mixed_div = {k: red(v) for k, v in mixed_div.items() if red(v)}
    primary, other = (plus_div, mixed_div) if convention == "plus" else (mixed_div, plus_div)
    return MotionResult(e, eq, ec, defined, hdiv, matches, primary, other, convention)


# ------------------------------------------------------------------ report

def _s(x) -> str:
    if isinstance(x, Scalar):
        return x.to_str()
    if isinstance(x, KForm):
        return x.to_str()
    if isinstance(x, Fraction):
        return str(x)
    return str(x)


def _entries(d: Mapping) -> list:
    return [[list(k) if isinstance(k, tuple) else k, _s(v)] for k, v in sorted(d.items(), key=lambda kv: str(kv[0]))]


@dataclass
class VerificationReport:
    model: str
    dim: int
    params: list
    connection: str
    structure_class: dict
    lee_form_zero: bool
    torsion: str
    dT: str
    instanton_ok: dict
    alpha_prime: dict
    condition_4_8_residual_zero: bool
    condition_4_8_residual: list
    nabla_plus_T_zero: bool
    motion_residuals: dict
    identities: dict
    scalar_curvature: dict
    discrepancies: list
    golden: list
    notes: list = field(default_factory=list)
    ricci_convention: str = RICCI_CONVENTION
    schema: int = SCHEMA

    @property
    def verdicts(self) -> dict:
        """Boolean outcome of every check that decides the exit status."""
        ap = self.alpha_prime
        return {
            "supersymmetric": bool(self.structure_class.get("supersymmetric")),
            "instanton": all(v for k, v in self.instanton_ok.items() if k == "A"),
            "anomaly": ap["status"] in ("ratio", "any") and ap["positive"] is not False,
            "condition_4_8": self.condition_4_8_residual_zero,
            "motion": bool(self.motion_residuals["all_zero"]),
            "identities": all(self.identities.values()),
            "scalar_curvature": bool(self.scalar_curvature["agrees"]),
            "golden": all(g["match"] for g in self.golden),
        }

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verdicts"] = self.verdicts
        d["passed"] = self.passed
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        yn = lambda b: "yes" if b else "no"
        lines = [
            f"model            {self.model} (dim {self.dim}; params {', '.join(self.params) or '-'})",
            f"connection       {self.connection}",
            f"ricci            {self.ricci_convention}",
            f"structure        " + ", ".join(f"{k}={yn(v)}" for k, v in sorted(self.structure_class.items())),
            f"lee form zero    {yn(self.lee_form_zero)}",
            f"torsion T        {self.torsion}",
            f"dT               {self.dT}",
            "instanton        " + ", ".join(f"{k}={yn(v)}" for k, v in sorted(self.instanton_ok.items())),
            f"alpha'           {self.alpha_prime['value']}"
            + (f"  [{self.alpha_prime['diagnostic']}]" if self.alpha_prime["diagnostic"] else ""),
        ]
        for pt in self.alpha_prime["points"]:
            lines.append(f"  at {pt['point']}: alpha' = {pt['value']} positive={yn(pt['positive'])}")
        m = self.motion_residuals
        lines += [
            f"nabla+ T zero    {yn(self.nabla_plus_T_zero)}",
            f"quadratic cond.  residual zero={yn(self.condition_4_8_residual_zero)}",
            f"motion           einstein={yn(m['einstein_zero'])} routes_agree={yn(m['einstein_routes_agree'])} "
            f"flux={yn(m['h_divergence_zero'])} gauge={yn(m['instanton_divergence_zero'])} "
            f"(divergence on {m['divergence_convention']} slots; other convention agrees={yn(m['conventions_agree'])})",
            "identities       " + ", ".join(f"{k}={yn(v)}" for k, v in sorted(self.identities.items())),
            f"scalar curvature s_g={self.scalar_curvature['trace']} -|T|^2/12={self.scalar_curvature['torsion_route']}"
            f" agrees={yn(self.scalar_curvature['agrees'])}",
        ]
        if self.golden:
            bad = [g for g in self.golden if not g["match"]]
            lines.append(f"golden values    {len(self.golden) - len(bad)}/{len(self.golden)} reproduced")
        for d in self.discrepancies:
            lines.append(f"DISCREPANCY      {d['quantity']}: printed {d['printed']} ; computed {d['computed']} ({d['anchor']})")
        for note in self.notes:
            lines.append(f"note             {note}")
        lines.append("verdicts         " + ", ".join(f"{k}={'pass' if v else 'FAIL'}" for k, v in self.verdicts.items()))
        lines.append(f"RESULT           {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _golden_value(q: str, G: Geometry, curv: Mapping[str, Curvature]):
    if q == "T":
        return G.torsion
    if q == "dT":
        return G.dT
    if q.startswith("q1(") and q.endswith(")"):
        return pontrjagin_q1(curv[q[3:-1]])
    if q.startswith("Omega("):
        name, ij = q[len("Omega("):].split(")^")
        i, j = ij.split("_")
        return curv[name].form(int(i), int(j))
    raise KeyError(q)


def verify_model(
    L: LieAlgebraModel,
    S: GStructure,
    instanton: Connection | None = None,
    connection: str = "plus",
    eval_points: Sequence[Mapping[str, Fraction]] = (),
    relations: Relations = (),
    golden: Sequence = (),
    name: str | None = None,
    divergence_convention: str = "plus",
) -> VerificationReport:
    """Run the full checklist on one configuration.

    ``connection`` selects the curvature entering the anomaly ("plus" for the
    torsion connection, "levi-civita" for the Riemannian one).  ``golden`` is a
    sequence of catalog :class:`~hetnil.catalog.Golden` records compared against
    recomputation; mismatches become discrepancies.
    """
    if connection not in ("plus", "levi-civita"):
        raise ValueError("connection must be 'plus' or 'levi-civita'")
    red = reducer(relations)
    G = Geometry.build(L, S)
    n = L.dim
    A = instanton if instanton is not None else Connection.zero(n)
    K_A = curvature(L, A)
    K_R = G.K_plus if connection == "plus" else G.K_lc
    curv = {"plus": G.K_plus, "levi-civita": G.K_lc, "A": K_A}
    notes = []

    cls = classify(L, S)
    cls_d = {k: v for k, v in asdict(cls).items()}
    cls_d["supersymmetric"] = cls.supersymmetric
    lee = lee_form(L, S)
    lee_alt = lee_form_alternate(L, S)
    if lee != lee_alt:
        notes.append(f"the two Lee form expressions differ: {lee} vs {lee_alt}")

    # torsion connection must reproduce the torsion and preserve the structure
    if connection_torsion(L, G.plus) != G.torsion:
        notes.append("torsion connection does not reproduce T")
    struct_parallel = all(f.is_zero() for f in covariant_derivative(L, G.plus, S.form))
    if not struct_parallel:
        notes.append("structure form is not parallel for the torsion connection")

    inst = {"A": is_instanton(K_A, S), connection: is_instanton(K_R, S)}

    alpha = anomaly_solve(G.dT, pontrjagin_q1(K_R), pontrjagin_q1(K_A), relations)
    points = []
    for pt in eval_points:
        v = alpha.value_at(pt)
        points.append({"point": {k: str(x) for k, x in sorted(pt.items())}, "value": "undefined" if v is None else str(v),
                       "positive": alpha.positive_at(pt)})
    if alpha.status == "any":
        positive = True
    elif alpha.status != "ratio":
        positive = False
    elif alpha.is_constant():
        positive = alpha.value_at({}) is not None and alpha.value_at({}) > 0
        if points:
            positive = positive and all(p["positive"] for p in points)
    elif points:
        positive = all(p["positive"] for p in points)
    else:
        positive = None  # undecided without evaluation points
    alpha_d = {
        "status": alpha.status,
        "numerator": alpha.numerator.to_str(),
        "denominator": alpha.denominator.to_str(),
        "value": alpha.to_str(),
        "diagnostic": alpha.diagnostic,
        "positive": positive,
        "points": points,
    }

    c48 = condition_4_8_residual(K_R, S.psi())
    c48_sparse = _sparse_matrix(c48, red)

    npt = G.nabla_plus_T()
    motion = motion_residuals(G, K_R, A, K_A, alpha, relations, divergence_convention)
    motion_d = {
        "einstein_zero": motion.einstein_zero,
        "einstein_defined": motion.einstein_defined,
        "einstein": _entries(motion.einstein),
        "einstein_quadratic": _entries(motion.einstein_quadratic),
        "einstein_routes_agree": motion.routes_agree,
        "h_divergence_zero": not motion.h_divergence,
        "h_divergence": _entries(motion.h_divergence),
        "h_divergence_matches_codifferential": motion.h_divergence_matches_codifferential,
        "instanton_divergence_zero": not motion.instanton_divergence,
        "instanton_divergence": _entries(motion.instanton_divergence),
        "divergence_convention": motion.divergence_convention,
        "conventions_agree": motion.instanton_divergence == motion.instanton_divergence_mixed,
        "all_zero": motion.all_zero,
    }

    ids = identity_residuals(G)
    ids_d = {k: not v for k, v in ids.items()}

    sg = scalar_curvature(L, G.K_lc)
    # |T|^2 summed over all index orderings is 3! times the increasing-tuple norm
    t_route = norm2(G.torsion) * Fraction(-6, 12)
    sc = {"trace": sg.to_str(), "torsion_route": t_route.to_str(), "agrees": sg == t_route}

    discrepancies = []
    gold = []
    for gd in golden:
        if gd.quantity == "alpha'":
            if gd.connection != connection:
                continue
            gnum, gden = gd.expected
            ok = alpha.equals(gnum, gden, red)
            computed = alpha.to_str()
            printed = f"({as_scalar(gnum).to_str()})/({as_scalar(gden).to_str()})"
        else:
            try:
                got = _golden_value(gd.quantity, G, curv)
            except KeyError:
                continue
            exp = gd.expected
            if isinstance(got, KForm):
                ok = _reduce_form(got, red) == _reduce_form(exp, red)
            else:
                ok = red(got - exp).is_zero()
            computed, printed = _s(got), _s(exp)
        gold.append({"quantity": gd.quantity, "anchor": gd.anchor, "match": ok})
        if not ok:
            discrepancies.append({"quantity": gd.quantity, "anchor": gd.anchor, "printed": printed, "computed": computed})

    if S.kind == "Spin7":
        printed = metric_from_structure(S, PRINTED_SPIN7_FACTOR)
        if any(printed[i][j] != (ONE if i == j else ZERO) for i in range(n) for j in range(n)):
            discrepancies.append({
                "quantity": "metric from Phi",
                "anchor": "g_ij = (1/24) sum Phi_iklm Phi_jklm",
                "printed": "(1/24) sum Phi Phi = delta",
                "computed": f"(1/24) sum Phi Phi = {printed[0][0]} delta; factor {METRIC_FACTOR['Spin7']} gives delta",
            })

    return VerificationReport(
        model=name or L.name or "model",
        dim=n,
        params=list(L.params),
        connection=connection,
        structure_class=cls_d,
        lee_form_zero=lee.is_zero(),
        torsion=G.torsion.to_str(),
        dT=G.dT.to_str(),
        instanton_ok=inst,
        alpha_prime=alpha_d,
        condition_4_8_residual_zero=not c48_sparse,
        condition_4_8_residual=_entries(c48_sparse),
        nabla_plus_T_zero=not npt,
        motion_residuals=motion_d,
        identities=ids_d,
        scalar_curvature=sc,
        discrepancies=discrepancies,
        golden=gold,
        notes=notes,
    )
