"""Invariant forms on an oriented orthonormal frame ``e^1, ..., e^n``.

Forms are stored sparsely on strictly increasing index tuples (1-based).  The
value of a form on frame vectors is the antisymmetric extension of the stored
coefficients, so ``e12(E1, E2) = 1`` and the increasing-tuple basis is
orthonormal.  Norms summed over all index orderings are ``k!`` times
:func:`inner`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping

from .scalars import ONE, ZERO, Scalar, as_scalar

MAX_DIM = 8
ORIENTATION = 1  # vol = +e^{1...n}


class FormError(ValueError):
    pass


def perm_sign(seq: Iterable[int]) -> int:
    """Sign of the permutation sorting ``seq``; 0 on a repeated entry."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def _merge(I: tuple, J: tuple):
    if set(I) & set(J):
        return 0, None
    inv = sum(1 for i in I for j in J if i > j)
    return (-1 if inv % 2 else 1), tuple(sorted(I + J))


@lru_cache(maxsize=None)
def _complement(I: tuple, n: int):
    rest = tuple(i for i in range(1, n + 1) if i not in I)
    return perm_sign(I + rest), rest


class KForm:
    """Homogeneous form of a fixed degree on an ``dim``-dimensional frame."""

    __slots__ = ("dim", "degree", "_terms", "_full", "_hash")

    def __init__(self, dim: int, degree: int, terms: Mapping[tuple, object] | None = None):
        if not 1 <= dim <= MAX_DIM:
            raise FormError(f"dimension {dim} outside 1..{MAX_DIM}")
        if not 0 <= degree <= dim:
            raise FormError(f"degree {degree} outside 0..{dim}")
        self.dim = dim
        self.degree = degree
        clean = {}
        for idx, c in (terms or {}).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise FormError(f"index tuple {idx} has wrong length for degree {degree}")
            if any(not 1 <= i <= dim for i in idx):
                raise FormError(f"index tuple {idx} out of range 1..{dim}")
            sign = perm_sign(idx)
            if sign == 0:
                continue
            key = tuple(sorted(idx))
            val = clean.get(key, ZERO) + as_scalar(c) * sign
            if val:
                clean[key] = val
            else:
                clean.pop(key, None)
        self._terms = clean
        self._full = None
        self._hash = None

    @classmethod
    def _raw(cls, dim: int, degree: int, terms: dict) -> "KForm":
        f = object.__new__(cls)
        f.dim = dim
        f.degree = degree
        f._terms = terms
        f._full = None
        f._hash = None
        return f

    @classmethod
    def zero(cls, dim: int, degree: int) -> "KForm":
        return cls(dim, degree)

    @classmethod
    def basis(cls, dim: int, *indices: int, coeff=ONE) -> "KForm":
        """``coeff * e^{i1} ^ ... ^ e^{ik}`` for arbitrary (unsorted) indices."""
        return cls(dim, len(indices), {tuple(indices): coeff})

    @classmethod
    def scalar(cls, dim: int, value) -> "KForm":
        return cls(dim, 0, {(): value})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def params(self) -> set[str]:
        out: set[str] = set()
        for c in self._terms.values():
            out |= c.params()
        return out

    def _check_same(self, other: "KForm"):
        if not isinstance(other, KForm):
            raise TypeError(f"expected KForm, got {type(other).__name__}")
        if other.dim != self.dim:
            raise FormError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        self._check_same(other)
        if other.degree != self.degree:
            raise FormError(f"cannot add forms of degree {self.degree} and {other.degree}")
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return KForm._raw(self.dim, self.degree, out)

    def __neg__(self):
        return KForm._raw(self.dim, self.degree, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, s):
        if isinstance(s, KForm):
            return NotImplemented
        s = as_scalar(s)
        if not s:
            return KForm._raw(self.dim, self.degree, {})
        out = {}
        for k, c in self._terms.items():
            v = c * s
            if v:
                out[k] = v
        return KForm._raw(self.dim, self.degree, out)

    __rmul__ = __mul__

    def __truediv__(self, q):
        return self * (Fraction(1) / Fraction(q))

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        if self.dim != other.dim:
            return False
        if not self._terms and not other._terms:
            return True
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, self.degree, frozenset(self._terms.items())))
        return self._hash

    def coeff(self, idx: tuple) -> Scalar:
        return self._terms.get(tuple(idx), ZERO)

    def component(self, indices: Iterable[int]) -> Scalar:
        indices = tuple(indices)
        if len(indices) != self.degree:
            raise FormError(f"need {self.degree} indices, got {len(indices)}")
        if any(not 1 <= i <= self.dim for i in indices):
            raise FormError(f"index out of range in {indices}")
        sign = perm_sign(indices)
        if sign == 0:
            return ZERO
        c = self._terms.get(tuple(sorted(indices)))
        if c is None:
            return ZERO
        return c if sign > 0 else -c

    def full_components(self) -> dict:
        """All nonzero components over every index ordering."""
        if self._full is None:
            full = {}
            for idx, c in self._terms.items():
                neg = -c
                for p in permutations(idx):
                    full[p] = c if perm_sign(p) > 0 else neg
            self._full = full
        return self._full

    def map_coeffs(self, fn) -> "KForm":
        out = {}
        for k, c in self._terms.items():
            v = fn(c)
            if v:
                out[k] = v
        return KForm._raw(self.dim, self.degree, out)

    def substitute(self, assignment) -> "KForm":
        return self.map_coeffs(lambda c: c.substitute(assignment))

    def eval(self, assignment) -> "KForm":
        return self.map_coeffs(lambda c: Scalar.const(c.eval(assignment)))

    def wedge(self, other: "KForm") -> "KForm":
        return wedge(self, other)

    def to_str(self, order=None) -> str:
        if not self._terms:
            return "0"
        parts = []
        for idx in sorted(self._terms):
            c = self._terms[idx]
            name = "e" + "".join(str(i) for i in idx) if idx else ""
            text = c.to_str(order)
            neg = False
            if len(c.terms) == 1:
                if text.startswith("-"):
                    neg, text = True, text[1:]
                if name and text == "1":
                    body = name
                elif name:
                    body = f"{text}*{name}"
                else:
                    body = text
            else:
                body = f"({text})*{name}" if name else f"({text})"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"KForm(dim={self.dim}, degree={self.degree}, {self.to_str()!r})"


def frame(dim: int) -> list[KForm]:
    """The coframe ``[e^1, ..., e^dim]`` (list index 0 holds ``e^1``)."""
    return [KForm.basis(dim, i) for i in range(1, dim + 1)]


def wedge(a: KForm, b: KForm, *rest: KForm) -> KForm:
    if rest:
        return wedge(wedge(a, b), *rest)
    a._check_same(b)
    deg = a.degree + b.degree
    if deg > a.dim:
        return KForm._raw(a.dim, a.dim, {})
    out: dict = {}
    for I, c1 in a._terms.items():
        for J, c2 in b._terms.items():
            sign, K = _merge(I, J)
            if not sign:
                continue
            v = c1 * c2
            if sign < 0:
                v = -v
            out[K] = out.get(K, ZERO) + v
    return KForm._raw(a.dim, deg, {k: v for k, v in out.items() if v})


def hodge_star(a: KForm, orientation: int = ORIENTATION) -> KForm:
    """Hodge star with ``a ^ *b = <a, b> vol`` and ``vol = orientation * e^{1..n}``."""
    if orientation not in (1, -1):
        raise FormError("orientation must be +1 or -1")
    n = a.dim
    out = {}
    for I, c in a._terms.items():
        sign, J = _complement(I, n)
        out[J] = c if sign * orientation > 0 else -c
    return KForm._raw(n, n - a.degree, out)


def inner(a: KForm, b: KForm) -> Scalar:
    a._check_same(b)
    if a.degree != b.degree:
        raise FormError(f"inner product of degree {a.degree} and {b.degree} forms")
    total = ZERO
    for I, c in a._terms.items():
        d = b._terms.get(I)
        if d is not None:
            total = total + c * d
    return total


def norm2(a: KForm) -> Scalar:
    return inner(a, a)


def interior(i: int, a: KForm) -> KForm:
    """Contraction ``E_i -| a`` (insertion into the first slot)."""
    if not 1 <= i <= a.dim:
        raise FormError(f"frame index {i} out of range 1..{a.dim}")
    if a.degree == 0:
        return KForm._raw(a.dim, 0, {})
    out = {}
    for I, c in a._terms.items():
        if i in I:
            pos = I.index(i)
            out[I[:pos] + I[pos + 1:]] = c if pos % 2 == 0 else -c
    return KForm._raw(a.dim, a.degree - 1, out)


def component(a: KForm, indices) -> Scalar:
    return a.component(indices)


def volume(dim: int, orientation: int = ORIENTATION) -> KForm:
    return KForm.basis(dim, *range(1, dim + 1), coeff=orientation)


def top_coefficient(a: KForm) -> Scalar:
    """Coefficient of ``e^{1..n}`` in a top-degree form."""
    if a.degree != a.dim and a:
        raise FormError("not a top-degree form")
    return a.coeff(tuple(range(1, a.dim + 1)))


def embed(a: KForm, dim: int, shift: int = 0) -> KForm:
    """Reinterpret ``a`` in a bigger frame with indices moved up by ``shift``."""
    if a.dim + shift > dim:
        raise FormError("embedding does not fit")
    return KForm._raw(dim, a.degree, {tuple(i + shift for i in I): c for I, c in a._terms.items()})
