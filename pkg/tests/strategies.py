"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction
from itertools import combinations

from hypothesis import strategies as st

from hetnil.exterior import KForm
from hetnil.lie import LieAlgebraModel
from hetnil.modelfile import ModelFile
from hetnil.scalars import Scalar

PARAMS = ("x", "y", "z")

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
nonzero_rationals = rationals.filter(bool)


@st.composite
def monomials(draw, names=PARAMS, max_exp=2):
    exps = draw(st.lists(st.integers(0, max_exp), min_size=len(names), max_size=len(names)))
    return tuple((n, e) for n, e in zip(names, exps) if e)


@st.composite
def scalars(draw, names=PARAMS, max_terms=3):
    terms = draw(st.dictionaries(monomials(names), rationals, max_size=max_terms))
    return Scalar(terms)


@st.composite
def forms(draw, dim=None, degree=None, max_terms=4, coeffs=None):
    n = dim if dim is not None else draw(st.integers(1, 7))
    k = degree if degree is not None else draw(st.integers(0, n))
    idx = list(combinations(range(1, n + 1), k))
    chosen = draw(st.lists(st.sampled_from(idx), max_size=min(max_terms, len(idx)), unique=True))
    coeffs = scalars(max_terms=2) if coeffs is None else coeffs
    return KForm(n, k, {i: draw(coeffs) for i in chosen})


@st.composite
def form_pairs(draw):
    n = draw(st.integers(1, 7))
    p = draw(st.integers(0, n))
    q = draw(st.integers(0, n - p))
    return draw(forms(dim=n, degree=p)), draw(forms(dim=n, degree=q))


@st.composite
def two_step_models(draw, dim=None):
    """Random 2-step nilpotent algebras: ``de^k`` for ``k > m`` lives in
    ``Lambda^2 span(e^1..e^m)`` and ``e^1..e^m`` are closed, so ``d^2 = 0``."""
    n = dim if dim is not None else draw(st.integers(3, 7))
    m = draw(st.integers(2, n - 1))
    base = list(combinations(range(1, m + 1), 2))
    d = {}
    for k in range(m + 1, n + 1):
        chosen = draw(st.lists(st.sampled_from(base), max_size=3, unique=True))
        coeff = st.one_of(nonzero_rationals.map(Scalar.const), st.sampled_from(PARAMS).map(Scalar.var))
        d[k] = KForm(n, 2, {i: draw(coeff) for i in chosen})
    params = sorted(set().union(*(f.params() for f in d.values()))) if d else []
    return LieAlgebraModel.from_dict(n, d, params)


@st.composite
def model_and_form(draw):
    L = draw(two_step_models())
    f = draw(forms(dim=L.dim, coeffs=scalars(max_terms=1)))
    return L, f


@st.composite
def model_files(draw):
    L = draw(two_step_models(dim=draw(st.sampled_from([5, 6, 7, 8]))))
    params = list(PARAMS)
    inst = {}
    for _ in range(draw(st.integers(0, 3))):
        i, j = draw(st.sampled_from(list(combinations(range(1, L.dim + 1), 2))))
        f = draw(forms(dim=L.dim, degree=1, max_terms=2))
        if f:
            inst[(i, j)] = f
    spec = ""
    if L.dim == 7:
        spec = draw(st.sampled_from(["", "g2-standard"]))
    elif L.dim == 8:
        spec = draw(st.sampled_from(["", "spin7-standard"]))
    relations = []
    if draw(st.booleans()):
        relations.append(("z", draw(scalars(names=("x", "y"), max_terms=2))))
    points = draw(st.lists(st.fixed_dictionaries({p: rationals for p in params}), max_size=2))
    return ModelFile(
        L.dim,
        params,
        draw(st.sampled_from(["", "m1", "nil-7"])),
        spec,
        None,
        {k: f for k, f in enumerate(L.d_of_frame, 1) if f},
        inst,
        relations,
        [{k: Fraction(v) for k, v in p.items()} for p in points],
    )
