"""Exact multivariate polynomials over the rationals.

A :class:`Scalar` is a sparse map from monomials to :class:`fractions.Fraction`
coefficients.  A monomial is a tuple of ``(name, exponent)`` pairs sorted by
name, the empty tuple being the constant monomial.  Zero coefficients are never
stored, so two scalars are equal exactly when their maps are equal.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence, Union

Monomial = tuple  # tuple[tuple[str, int], ...]
Number = Union[int, Fraction]

ONE_MONOMIAL: Monomial = ()


class ScalarError(ValueError):
    pass


@lru_cache(maxsize=65536)
def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    while i < len(m1) and j < len(m2):
        a, b = m1[i], m2[j]
        if a[0] == b[0]:
            out.append((a[0], a[1] + b[1]))
            i += 1
            j += 1
        elif a[0] < b[0]:
            out.append(a)
            i += 1
        else:
            out.append(b)
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def _coerce(x) -> "Scalar":
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.const(x)
    return NotImplemented


class Scalar:
    """Immutable polynomial with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Number] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = Fraction(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Scalar":
        # terms already canonical (no zeros, Fraction values)
        s = object.__new__(cls)
        s._terms = terms
        s._hash = None
        return s

    @classmethod
    def const(cls, value: Number) -> "Scalar":
        value = Fraction(value)
        return cls._raw({ONE_MONOMIAL: value} if value else {})

    @classmethod
    def var(cls, name: str) -> "Scalar":
        return cls._raw({((name, 1),): Fraction(1)})

    @classmethod
    def parse(cls, text: str, params: Sequence[str] | None = None) -> "Scalar":
        from .parsing import parse_scalar

        return parse_scalar(text, params)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONOMIAL in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ScalarError(f"{self} is not constant")
        return self._terms.get(ONE_MONOMIAL, Fraction(0))

    def params(self) -> set[str]:
        return {name for m in self._terms for name, _ in m}

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e for _, e in m) for m in self._terms)

    # ring operations

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v += c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Scalar._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return Scalar._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Scalar):
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Scalar._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        # division by nonzero rational constants only; the ring has no quotient
        if isinstance(other, Scalar):
            other = other.constant_value()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of a Scalar by zero")
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ScalarError("exponent must be a non-negative integer")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.const(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def content(self) -> Fraction:
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        if not self._terms:
            return Fraction(0)
        nums, dens = 0, 1
        for c in self._terms.values():
            nums = gcd(nums, c.numerator)
            dens = lcm(dens, c.denominator)
        return Fraction(nums, dens)

    def exact_quotient(self, other: "Scalar") -> "Scalar | None":
        """``self / other`` if ``other`` divides ``self`` in the polynomial ring, else None.

        Single-divisor multivariate division in lex order: the remainder is
        unique, so a nonzero remainder means ``other`` is not a factor.
        """
        other = as_scalar(other)
        if not other._terms:
            raise ZeroDivisionError("exact_quotient by zero")
        names = sorted(self.params() | other.params())

        def vec(m):
            d = dict(m)
            return tuple(d.get(n, 0) for n in names)

        lead_q = max(other._terms, key=vec)
        vq, cq = vec(lead_q), other._terms[lead_q]
        rest, quot = self, ZERO
        while rest._terms:
            lead = max(rest._terms, key=vec)
            vp = vec(lead)
            if any(a < b for a, b in zip(vp, vq)):
                return None
            mono = tuple((n, a - b) for n, a, b in zip(names, vp, vq) if a - b)
            t = Scalar._raw({mono: rest._terms[lead] / cq})
            quot = quot + t
            rest = rest - t * other
        return quot

    # substitution

    def eval(self, assignment: Mapping[str, Number]) -> Fraction:
        missing = self.params() - set(assignment)
        if missing:
            raise ScalarError(f"assignment is missing parameters: {sorted(missing)}")
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for name, e in m:
                term *= Fraction(assignment[name]) ** e
            total += term
        return total

    def substitute(self, assignment: Mapping[str, Union["Scalar", Number]]) -> "Scalar":
        """Replace some parameters by scalars; unmentioned parameters stay."""
        if not assignment or not self._terms:
            return self
        subs = {k: _coerce(v) for k, v in assignment.items()}
        out = ZERO
        for m, c in self._terms.items():
            term = Scalar.const(c)
            rest = []
            for name, e in m:
                if name in subs:
                    term = term * subs[name] ** e
                else:
                    rest.append((name, e))
            if rest:
                term = term * Scalar._raw({tuple(rest): Fraction(1)})
            out = out + term
        return out

    def reduce_square(self, name: str, value: Union["Scalar", Number]) -> "Scalar":
        """Reduce modulo the relation ``name**2 == value``.

        Every even power ``name**(2k)`` becomes ``value**k``; odd powers keep a
        single factor of ``name``.  ``value`` must not contain ``name``.
        """
        value = _coerce(value)
        if name in value.params():
            raise ScalarError(f"relation value for {name}^2 must not contain {name}")
        out = ZERO
        for m, c in self._terms.items():
            term = Scalar.const(c)
            rest = []
            for v, e in m:
                if v == name:
                    term = term * value ** (e // 2)
                    if e % 2:
                        rest.append((v, 1))
                else:
                    rest.append((v, e))
            if rest:
                term = term * Scalar._raw({tuple(rest): Fraction(1)})
            out = out + term
        return out

    # printing

    def _print_key(self, order: Sequence[str] | None = None):
        names = sorted(self.params())
        if order:
            known = [n for n in order if n in names]
            names = known + [n for n in names if n not in known]
        rank = {n: i for i, n in enumerate(names)}

        def key(m):
            exps = [0] * len(names)
            for name, e in m:
                exps[rank[name]] = e
            return (-sum(exps), [-x for x in exps])

        return rank, key

    def leading_coefficient(self, order: Sequence[str] | None = None) -> Fraction:
        """Coefficient of the first term in canonical print order."""
        if not self._terms:
            return Fraction(0)
        _, key = self._print_key(order)
        return self._terms[min(self._terms, key=key)]

    def to_str(self, order: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        rank, key = self._print_key(order)
        parts = []
        for m in sorted(self._terms, key=key):
            c = self._terms[m]
            mono = "*".join(name if e == 1 else f"{name}^{e}" for name, e in sorted(m, key=lambda p: rank[p[0]]))
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{_fmt_rational(mag)}*{mono}"
            else:
                body = _fmt_rational(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Scalar({self.to_str()!r})"


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


ZERO = Scalar._raw({})
ONE = Scalar._raw({ONE_MONOMIAL: Fraction(1)})


def as_scalar(x) -> Scalar:
    s = _coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")
    return s


def symbols(names: str | Iterable[str]) -> tuple[Scalar, ...]:
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    return tuple(Scalar.var(n) for n in names)


def scalar_eval(p: Scalar, assignment: Mapping[str, Number]) -> Fraction:
    return as_scalar(p).eval(assignment)


def scalar_is_zero(p: Scalar) -> bool:
    return as_scalar(p).is_zero()
