"""Model files: one Lie algebra with a structure, an optional instanton and
optional evaluation points.

Example::

    # generalized Heisenberg algebra
    name n31
    dim 7
    params a, b
    structure g2-standard
    d e7 = a*e1^e2 + b*e3^e4 - (a+b)*e5^e6
    A 1 2 = e7
    eval a=1, b=1

Statements, one per line (``#`` starts a comment):

* ``name NAME`` (optional)
* ``dim N`` (required, first statement other than ``name``)
* ``params p1, p2, ...`` (optional, before any expression)
* ``structure g2-standard | spin7-standard | form EXPR`` (default: standard for ``dim``)
* ``relation NAME^2 = EXPR``: reduce ``NAME^2`` to ``EXPR`` in every check
* ``d eK = EXPR``: the 2-form ``de^K``; unlisted frame elements are closed
* ``A I J = EXPR``: the instanton 1-form ``sigma^I_J``; ``sigma^J_I`` is set to its negative
* ``eval p=v, q=w``: a rational evaluation point (repeatable)
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .exterior import KForm
from .gstruct import GStructure, standard_g2, standard_spin7
from .lie import ClosureError, Connection, LieAlgebraModel, closure_failures
from .parsing import ParseError, parse_form, parse_rational, parse_scalar
from .scalars import as_scalar

KEYWORDS = ("name", "dim", "params", "structure", "relation", "d", "A", "eval")
NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


@dataclass
class ModelFile:
    dim: int
    params: list = field(default_factory=list)
    name: str = ""
    structure_spec: str = ""  # "", "g2-standard", "spin7-standard" or "form"
    structure_form: KForm | None = None
    d: dict = field(default_factory=dict)  # k -> 2-form
    instanton: dict = field(default_factory=dict)  # (i, j) with i < j -> 1-form sigma^i_j
    relations: list = field(default_factory=list)  # [(name, Scalar)]
    eval_points: list = field(default_factory=list)  # [{name: Fraction}]

    def model(self) -> LieAlgebraModel:
        L = LieAlgebraModel.from_dict(self.dim, self.d, self.params, self.name)
        fails = closure_failures(L)
        if fails:
            raise ClosureError(fails)
        return L

    def structure(self) -> GStructure:
        spec = self.structure_spec or ("g2-standard" if self.dim == 7 else "spin7-standard" if self.dim == 8 else "")
        if spec == "g2-standard":
            return standard_g2()
        if spec == "spin7-standard":
            return standard_spin7()
        if spec == "form":
            return GStructure("G2" if self.structure_form.degree == 3 else "Spin7", self.structure_form)
        raise ValueError(f"no default structure in dimension {self.dim}")

    def connection(self) -> Connection | None:
        if not self.instanton:
            return None
        return Connection.from_entries(self.dim, self.instanton, name="A")

    def to_text(self) -> str:
        """Canonical text; ``parse_model(m.to_text())`` reproduces ``m``."""
        order = self.params
        lines = []
        if self.name:
            lines.append(f"name {self.name}")
        lines.append(f"dim {self.dim}")
        if self.params:
            lines.append("params " + ", ".join(self.params))
        if self.structure_spec == "form":
            lines.append(f"structure form {self.structure_form.to_str(order)}")
        elif self.structure_spec:
            lines.append(f"structure {self.structure_spec}")
        for name, value in self.relations:
            lines.append(f"relation {name}^2 = {value.to_str(order)}")
        for k in sorted(self.d):
            if self.d[k]:
                lines.append(f"d e{k} = {self.d[k].to_str(order)}")
        for (i, j) in sorted(self.instanton):
            f = self.instanton[(i, j)]
            if f:
                lines.append(f"A {i} {j} = {f.to_str(order)}")
        for pt in self.eval_points:
            lines.append("eval " + ", ".join(f"{k}={v}" for k, v in pt.items()))
        return "\n".join(lines) + "\n"


def _split(line: str):
    stripped = line.split("#", 1)[0].rstrip()
    body = stripped.lstrip()
    indent = len(stripped) - len(body)
    if not body:
        return None, "", 0
    head, _, rest = body.partition(" ")
    return head, rest, indent + len(head) + 1 + (len(rest) - len(rest.lstrip()))


def parse_model(text: str) -> ModelFile:
    mf: ModelFile | None = None
    pending_name = ""
    seen_expr = False
    d_lines = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        head, rest, col = _split(raw)
        if head is None:
            continue
        rest = rest.strip()
        err = lambda msg, c=col + 1: ParseError(msg, lineno, c)
        if head not in KEYWORDS:
            raise ParseError(f"unknown statement {head!r}", lineno, len(raw) - len(raw.lstrip()) + 1)
        if head == "name":
            if not NAME.match(rest.replace("-", "_")):
                raise err("name must be an identifier")
            if mf is None:
                pending_name = rest
            else:
                mf.name = rest
            continue
        if head == "dim":
            if mf is not None:
                raise err("dim given twice")
            if not rest.isdigit() or not 1 <= int(rest) <= 8:
                raise err("dim must be an integer in 1..8")
            mf = ModelFile(int(rest), name=pending_name)
            continue
        if mf is None:
            raise err("dim must come before other statements", 1)
        n = mf.dim
        if head == "params":
            if seen_expr or mf.params:
                raise err("params must be declared once, before any expression")
            names = [p.strip() for p in rest.replace(",", " ").split()]
            for p in names:
                if not NAME.match(p) or re.match(r"e\d+$", p):
                    raise err(f"invalid parameter name {p!r}")
            if len(set(names)) != len(names):
                raise err("duplicate parameter name")
            mf.params = names
            continue
        seen_expr = True
        if head == "structure":
            if mf.structure_spec:
                raise err("structure given twice")
            if rest in ("g2-standard", "spin7-standard"):
                want = 7 if rest == "g2-standard" else 8
                if n != want:
                    raise err(f"{rest} needs dim {want}")
                mf.structure_spec = rest
            elif rest.startswith("form"):
                off = raw.index(rest) + 4
                degree = 3 if n == 7 else 4
                form = parse_form(rest[4:], n, mf.params, degree, lineno, off)
                try:
                    GStructure("G2" if degree == 3 else "Spin7", form)
                except ValueError as e:
                    raise err(str(e))
                mf.structure_spec, mf.structure_form = "form", form
            else:
                raise err("structure must be g2-standard, spin7-standard or form <expr>")
            continue
        lhs, eq, rhs = rest.partition("=")
        if head == "eval":
            point = {}
            for item in rest.split(","):
                k, eq2, v = item.partition("=")
                k = k.strip()
                if not eq2 or k not in mf.params:
                    raise err(f"eval entries are p=v with declared parameters; got {item.strip()!r}")
                point[k] = parse_rational(v, lineno, raw.index(item) + len(k) + 2)
            mf.eval_points.append(point)
            continue
        if not eq:
            raise err("expected '='")
        rhs_off = raw.index("=") + 1
        if head == "relation":
            m = re.fullmatch(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*\^\s*2\s*", lhs)
            if not m or m.group(1) not in mf.params:
                raise err("relation must read NAME^2 = EXPR for a declared parameter")
            value = parse_scalar(rhs, mf.params, lineno, rhs_off)
            if m.group(1) in value.params():
                raise err("relation value must not contain its own parameter")
            mf.relations.append((m.group(1), value))
        elif head == "d":
            m = re.fullmatch(r"\s*e(\d+)\s*", lhs)
            if not m:
                raise err("expected 'd eK = expr'")
            k = int(m.group(1))
            if not 1 <= k <= n:
                raise err(f"frame index {k} out of range 1..{n}")
            if k in mf.d:
                raise err(f"de{k} given twice")
            mf.d[k] = parse_form(rhs, n, mf.params, 2, lineno, rhs_off)
            d_lines[k] = lineno
        elif head == "A":
            parts = lhs.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise err("expected 'A i j = expr'")
            i, j = int(parts[0]), int(parts[1])
            if not (1 <= i <= n and 1 <= j <= n):
                raise err(f"connection index ({i}, {j}) out of range 1..{n}")
            if i == j:
                raise err("diagonal connection entries must vanish")
            f = parse_form(rhs, n, mf.params, 1, lineno, rhs_off)
            key, val = ((i, j), f) if i < j else ((j, i), -f)
            if key in mf.instanton and mf.instanton[key] != val:
                raise err(f"A {i} {j} conflicts with an earlier entry")
            mf.instanton[key] = val
    if mf is None:
        raise ParseError("missing dim statement", 1, 1)
    try:
        mf.model()
    except ClosureError as e:
        raise ParseError(str(e), d_lines.get(e.indices[0], 1), 1) from e
    return mf


def model_file_from(L: LieAlgebraModel, structure_spec: str = "", instanton: Connection | None = None,
                    relations=(), eval_points=()) -> ModelFile:
    """Build a ModelFile from in-memory objects (used for round-trip tests)."""
    inst = {}
    if instanton is not None:
        for i in range(1, L.dim + 1):
            for j in range(i + 1, L.dim + 1):
                f = instanton.form(i, j)
                if f:
                    inst[(i, j)] = f
    params = list(L.params)
    extra = set()
    for f in inst.values():
        extra |= f.params()
    for name, v in relations:
        extra |= {name} | as_scalar(v).params()
    params += sorted(extra - set(params))
    return ModelFile(
        L.dim,
        params,
        L.name,
        structure_spec,
        None,
        {k: f for k, f in enumerate(L.d_of_frame, 1) if f},
        inst,
        [(n, as_scalar(v)) for n, v in relations],
        [dict(p) for p in eval_points],
    )
