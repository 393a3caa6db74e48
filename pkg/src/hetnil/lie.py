"""Left-invariant geometry of a Lie algebra with an orthonormal coframe.

Conventions (all frame indices are 1-based):

* ``de^k = sum_{i<j} a^k_ij e^ij`` and ``a^k_ij = component(de^k, (i, j))``.
* The bracket is ``[E_i, E_j] = -sum_k a^k_ij E_k``, i.e. ``de(X, Y) = -e([X, Y])``
  for invariant 1-forms.  With this sign the Levi-Civita forms are
  ``sigma^i_j(E_k) = (a^i_jk - a^k_ij + a^j_ki) / 2`` and come out torsion free.
* ``nabla_X E_j = sum_s sigma^s_j(X) E_s``; ``Connection.sigma[i-1][j-1]`` holds
  the 1-form ``sigma^i_j``.
* Curvature ``Omega^i_j = d sigma^i_j + sigma^i_k ^ sigma^k_j`` and
  ``R(i, j, k, l) = Omega^l_k(E_i, E_j)``.
* Ricci ``Ric_mn = sum_i R(i, m, n, i)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .exterior import FormError, KForm, perm_sign, wedge
from .scalars import ZERO, Scalar

HALF = Fraction(1, 2)


class ClosureError(ValueError):
    """The structure equations violate d^2 = 0 (Jacobi identity)."""

    def __init__(self, indices):
        self.indices = list(indices)
        names = ", ".join(f"e{k}" for k in self.indices)
        super().__init__(f"d(d e^k) != 0 for {names}")


class TorsionError(ValueError):
    """The torsion of a connection is not totally skew-symmetric."""


@dataclass(frozen=True)
class LieAlgebraModel:
    dim: int
    params: tuple
    d_of_frame: tuple  # (de^1, ..., de^n) as 2-forms
    name: str = ""
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        object.__setattr__(self, "d_of_frame", tuple(self.d_of_frame))
        if len(self.d_of_frame) != self.dim:
            raise FormError(f"need {self.dim} structure 2-forms, got {len(self.d_of_frame)}")
        for k, f in enumerate(self.d_of_frame, 1):
            if f.dim != self.dim or (f and f.degree != 2):
                raise FormError(f"de{k} must be a 2-form in dimension {self.dim}")

    @classmethod
    def from_dict(cls, dim: int, d: Mapping[int, KForm], params: Sequence[str] = (), name: str = ""):
        forms = [d.get(k, KForm.zero(dim, 2)) for k in range(1, dim + 1)]
        return cls(dim, tuple(params), tuple(forms), name)

    @classmethod
    def abelian(cls, dim: int) -> "LieAlgebraModel":
        return cls.from_dict(dim, {}, name=f"abelian{dim}")

    def a(self, k: int, i: int, j: int) -> Scalar:
        """Structure constant ``a^k_ij``."""
        return self.d_of_frame[k - 1].component((i, j))

    def bracket(self, i: int, j: int) -> dict:
        """``[E_i, E_j]`` as ``{k: coefficient}``."""
        out = {}
        for k in range(1, self.dim + 1):
            c = self.a(k, i, j)
            if c:
                out[k] = -c
        return out

    def d_basis(self, idx: tuple) -> KForm:
        cache = self._cache.setdefault("d", {})
        res = cache.get(idx)
        if res is None:
            res = KForm.zero(self.dim, len(idx) + 1)
            for s, p in enumerate(idx):
                left = KForm.basis(self.dim, *idx[:s]) if s else None
                right = KForm.basis(self.dim, *idx[s + 1:]) if s + 1 < len(idx) else None
                piece = self.d_of_frame[p - 1]
                if left is not None:
                    piece = wedge(left, piece)
                if right is not None:
                    piece = wedge(piece, right)
                res = res + (piece if s % 2 == 0 else -piece)
            cache[idx] = res
        return res

    def substitute(self, assignment) -> "LieAlgebraModel":
        params = tuple(p for p in self.params if p not in assignment)
        return LieAlgebraModel(self.dim, params, tuple(f.substitute(assignment) for f in self.d_of_frame), self.name)


def ce_differential(L: LieAlgebraModel, a: KForm) -> KForm:
    """Chevalley-Eilenberg differential of an invariant form."""
    if a.dim != L.dim:
        raise FormError(f"dimension mismatch: model {L.dim}, form {a.dim}")
    if a.degree >= L.dim:
        return KForm.zero(L.dim, L.dim)
    out = KForm.zero(L.dim, a.degree + 1)
    if a.degree == 0:
        return out
    for idx, c in a.items():
        out = out + L.d_basis(idx) * c
    return out


def closure_failures(L: LieAlgebraModel) -> list[int]:
    return [k for k in range(1, L.dim + 1) if ce_differential(L, L.d_of_frame[k - 1])]


def check_closure(L: LieAlgebraModel) -> bool:
    return not closure_failures(L)


@dataclass(frozen=True)
class Connection:
    dim: int
    sigma: tuple  # sigma[i-1][j-1] = sigma^i_j, a 1-form
    name: str = ""

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.sigma)
        object.__setattr__(self, "sigma", rows)
        if len(rows) != self.dim or any(len(r) != self.dim for r in rows):
            raise FormError("connection matrix has wrong shape")

    @classmethod
    def zero(cls, dim: int, name: str = "zero") -> "Connection":
        z = KForm.zero(dim, 1)
        return cls(dim, tuple(tuple(z for _ in range(dim)) for _ in range(dim)), name)

    @classmethod
    def from_entries(cls, dim: int, entries: Mapping[tuple, KForm], antisymmetrize: bool = True, name: str = ""):
        """Build from ``{(i, j): sigma^i_j}``; with ``antisymmetrize`` each given
        entry also sets ``sigma^j_i = -sigma^i_j`` and conflicting pairs raise."""
        z = KForm.zero(dim, 1)
        m = [[z] * dim for _ in range(dim)]
        given = {}
        for (i, j), f in entries.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise FormError(f"connection index ({i}, {j}) out of range")
            if f and (f.dim != dim or f.degree != 1):
                raise FormError(f"sigma^{i}_{j} must be a 1-form in dimension {dim}")
            given[(i, j)] = f
        for (i, j), f in given.items():
            m[i - 1][j - 1] = f
            if antisymmetrize:
                if i == j and f:
                    raise FormError(f"diagonal entry sigma^{i}_{i} must vanish for a metric connection")
                other = given.get((j, i))
                if other is not None and other != -f:
                    raise FormError(f"sigma^{i}_{j} and sigma^{j}_{i} are not antisymmetric")
                m[j - 1][i - 1] = -f
        return cls(dim, tuple(tuple(r) for r in m), name)

    def form(self, i: int, j: int) -> KForm:
        """The 1-form ``sigma^i_j``."""
        return self.sigma[i - 1][j - 1]

    def value(self, i: int, j: int, k: int) -> Scalar:
        """``sigma^i_j(E_k)``."""
        return self.sigma[i - 1][j - 1].coeff((k,))

    @property
    def metric_compatible(self) -> bool:
        n = self.dim
        return all(self.sigma[i][j] == -self.sigma[j][i] for i in range(n) for j in range(i, n))

    def nonzero_values(self) -> list[tuple]:
        """Sparse list of ``(k, p, q, value)`` with ``sigma^p_q(E_k) = value``."""
        out = []
        for p in range(1, self.dim + 1):
            for q in range(1, self.dim + 1):
                for (k,), v in self.sigma[p - 1][q - 1].items():
                    out.append((k, p, q, v))
        return out

    def map_forms(self, fn) -> "Connection":
        return Connection(self.dim, tuple(tuple(fn(f) for f in row) for row in self.sigma), self.name)

    def substitute(self, assignment) -> "Connection":
        return self.map_forms(lambda f: f.substitute(assignment))

    def scaled(self, s) -> "Connection":
        return self.map_forms(lambda f: f * s)


def levi_civita(L: LieAlgebraModel) -> Connection:
    fails = closure_failures(L)
    if fails:
        raise ClosureError(fails)
    n = L.dim
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            terms = {}
            for k in range(1, n + 1):
                v = (L.a(i, j, k) - L.a(k, i, j) + L.a(j, k, i)) * HALF
                if v:
                    terms[(k,)] = v
            row.append(KForm(n, 1, terms))
        rows.append(tuple(row))
    return Connection(n, tuple(rows), "levi-civita")


def with_torsion(L: LieAlgebraModel, base: Connection, T: KForm, sign: int = 1, name: str = "") -> Connection:
    """``g(nabla_X Y, Z) = g(base_X Y, Z) + sign * T(X, Y, Z) / 2``.

    In frame terms ``sigma^i_j(E_k) += sign * T(E_k, E_j, E_i) / 2``; the torsion of
    the result is ``sign * T`` plus the torsion of ``base``.
    """
    if T.degree != 3 and T:
        raise FormError("torsion must be a 3-form")
    n = L.dim
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            terms = {}
            for k in range(1, n + 1):
                v = T.component((k, j, i))
                if v:
                    terms[(k,)] = v * (HALF * sign)
            extra = KForm(n, 1, terms)
            row.append(base.form(i, j) + extra)
        rows.append(tuple(row))
    return Connection(n, tuple(rows), name or ("plus" if sign > 0 else "minus"))


def connection_torsion(L: LieAlgebraModel, C: Connection) -> KForm:
    """``T(E_i, E_j, E_k) = g(nabla_i E_j - nabla_j E_i - [E_i, E_j], E_k)`` as a 3-form."""
    n = L.dim
    full = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            br = L.bracket(i, j)
            for k in range(1, n + 1):
                v = C.value(k, j, i) - C.value(k, i, j) - br.get(k, ZERO)
                if v:
                    full[(i, j, k)] = v
    terms = {}
    for (i, j, k), v in full.items():
        if i < j < k:
            terms[(i, j, k)] = v
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                expected = terms.get(tuple(sorted((i, j, k))), ZERO) * perm_sign((i, j, k))
                if full.get((i, j, k), ZERO) != expected:
                    raise TorsionError(f"torsion is not totally skew-symmetric at ({i},{j},{k})")
    return KForm(n, 3, terms)


@dataclass(frozen=True)
class Curvature:
    dim: int
    omega: tuple  # omega[i-1][j-1] = Omega^i_j, a 2-form
    name: str = ""
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def form(self, i: int, j: int) -> KForm:
        """The 2-form ``Omega^i_j``."""
        return self.omega[i - 1][j - 1]

    def R(self, i: int, j: int, k: int, l: int) -> Scalar:
        return self.omega[l - 1][k - 1].component((i, j))

    def tensor(self) -> dict:
        """Sparse ``{(i, j, k, l): R(i, j, k, l)}`` over all index orderings."""
        t = self._cache.get("tensor")
        if t is None:
            t = {}
            n = self.dim
            for l in range(1, n + 1):
                for k in range(1, n + 1):
                    for (i, j), v in self.omega[l - 1][k - 1].full_components().items():
                        t[(i, j, k, l)] = v
            self._cache["tensor"] = t
        return t

    def is_zero(self) -> bool:
        return all(not f for row in self.omega for f in row)

    def map_forms(self, fn) -> "Curvature":
        return Curvature(self.dim, tuple(tuple(fn(f) for f in row) for row in self.omega), self.name)


def curvature(L: LieAlgebraModel, C: Connection) -> Curvature:
    n = L.dim
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            om = ce_differential(L, C.form(i, j))
            for k in range(1, n + 1):
                a, b = C.form(i, k), C.form(k, j)
                if a and b:
                    om = om + wedge(a, b)
            row.append(om)
        rows.append(tuple(row))
    return Curvature(n, tuple(rows), C.name)


def pontrjagin_q1(K: Curvature) -> KForm:
    """``q1 = sum_{i<j} Omega^i_j ^ Omega^i_j``, i.e. ``8 pi^2`` times the first Pontrjagin form."""
    n = K.dim
    out = KForm.zero(n, 4)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            om = K.form(i, j)
            if om:
                out = out + wedge(om, om)
    return out


def ricci(L: LieAlgebraModel, K: Curvature) -> list[list[Scalar]]:
    n = K.dim
    ric = [[ZERO] * n for _ in range(n)]
    for (i, m, nn, l), v in K.tensor().items():
        if i == l:
            ric[m - 1][nn - 1] = ric[m - 1][nn - 1] + v
    return ric


def scalar_curvature(L: LieAlgebraModel, K: Curvature) -> Scalar:
    ric = ricci(L, K)
    total = ZERO
    for i in range(K.dim):
        total = total + ric[i][i]
    return total


def covariant_derivative(L: LieAlgebraModel, C: Connection, a: KForm) -> list[KForm]:
    """``[nabla_{E_1} a, ..., nabla_{E_n} a]`` for an invariant form ``a``.

    Uses ``nabla_X e^p = -sum_q sigma^p_q(X) e^q`` extended as a derivation.
    """
    n = L.dim
    # by_p[p] -> list of (k, q, value) with sigma^p_q(E_k) = value
    by_p: dict = {}
    for k, p, q, v in C.nonzero_values():
        by_p.setdefault(p, []).append((k, q, v))
    acc = [dict() for _ in range(n)]
    for idx, c in a.items():
        for s, p in enumerate(idx):
            for k, q, v in by_p.get(p, ()):
                new = idx[:s] + (q,) + idx[s + 1:]
                sign = perm_sign(new)
                if not sign:
                    continue
                key = tuple(sorted(new))
                contrib = c * v
                if sign > 0:
                    contrib = -contrib
                d = acc[k - 1]
                d[key] = d.get(key, ZERO) + contrib
    return [KForm(n, a.degree, {k: v for k, v in d.items() if v}) for d in acc]


def tensor_covariant_derivative(C: Connection, tensor: Mapping[tuple, Scalar], slots: Sequence[Connection] | None = None) -> dict:
    """Covariant derivative of a sparse covariant tensor with invariant components.

    Returns ``{(k,) + idx: (nabla_{E_k} t)(E_idx)}``.  ``slots`` optionally gives
    a separate connection per tensor slot (defaults to ``C`` everywhere).
    """
    if not tensor:
        return {}
    rank = len(next(iter(tensor)))
    conns = list(slots) if slots is not None else [C] * rank
    tables = []
    for conn in conns:
        by_p: dict = {}
        for k, p, q, v in conn.nonzero_values():
            by_p.setdefault(p, []).append((k, q, v))
        tables.append(by_p)
    out: dict = {}
    for idx, c in tensor.items():
        for s, p in enumerate(idx):
            for k, q, v in tables[s].get(p, ()):
                key = (k,) + idx[:s] + (q,) + idx[s + 1:]
                out[key] = out.get(key, ZERO) - c * v
    return {k: v for k, v in out.items() if v}


def divergence(nabla_t: Mapping[tuple, Scalar]) -> dict:
    """``sum_i (nabla_{E_i} t)(E_i, ...)`` from the output of
    :func:`tensor_covariant_derivative`."""
    out: dict = {}
    for key, v in nabla_t.items():
        if key[0] == key[1]:
            rest = key[2:]
            out[rest] = out.get(rest, ZERO) + v
    return {k: v for k, v in out.items() if v}
