from fractions import Fraction
from pathlib import Path

import pytest

from hetnil.catalog import build_N31
from hetnil.exterior import KForm
from hetnil.modelfile import parse_model
from hetnil.parsing import ParseError, parse_form, parse_scalar
from hetnil.scalars import symbols

MODELS = Path(__file__).resolve().parent.parent / "models"
a, b, lam = symbols("a b lambda")

N31_TEXT = """\
dim 7
params a, b
d e7 = a*e1^e2 + b*e3^e4 - (a+b)*e5^e6
"""


def error_at(text):
    with pytest.raises(ParseError) as info:
        parse_model(text)
    return info.value


def test_n31_file_matches_catalog():
    mf = parse_model(N31_TEXT)
    assert mf.model().d_of_frame == build_N31().d_of_frame
    assert mf.connection() is None


def test_empty_d_block_is_abelian():
    mf = parse_model("dim 7\n")
    assert all(f.is_zero() for f in mf.model().d_of_frame)
    assert mf.structure().kind == "G2"


def test_instanton_block_antisymmetrized():
    mf = parse_model("dim 7\nparams lambda\nA 2 1 = lambda*e7\n")
    C = mf.connection()
    assert C.form(1, 2) == KForm.basis(7, 7, coeff=-lam)
    assert C.form(2, 1) == KForm.basis(7, 7, coeff=lam)


def test_comments_eval_and_relations():
    mf = parse_model(
        "# header\nname demo  # trailing\ndim 8\nparams a, mu\nrelation mu^2 = (3*a^2 - 1)/2\neval a=1/2, mu=0\n"
    )
    assert mf.name == "demo"
    assert mf.relations == [("mu", (3 * a ** 2 - 1) * Fraction(1, 2))]
    assert mf.eval_points == [{"a": Fraction(1, 2), "mu": Fraction(0)}]
    assert mf.structure().kind == "Spin7"


def test_explicit_structure_form():
    text = "dim 7\nstructure form e127 + e347 + e567 + e135 - e146 - e236 - e245\n"
    assert parse_model(text).structure().form.component((1, 2, 7)) == 1
    err = error_at("dim 7\nstructure form 2*e127\n")
    assert err.line == 2


def test_unknown_key_rejected_with_position():
    err = error_at("dim 7\n  colour red\n")
    assert (err.line, err.column) == (2, 3)
    assert "unknown statement" in err.message


def test_undeclared_parameter():
    err = error_at("dim 7\nparams a\nd e7 = a*e12 + b*e34\n")
    assert err.line == 3 and err.column == 16
    assert "undeclared parameter 'b'" in err.message


def test_index_out_of_range():
    assert "out of range" in error_at("dim 7\nd e8 = e12\n").message
    assert "out of range" in error_at("dim 7\nd e7 = e18\n").message
    assert "out of range" in error_at("dim 7\nA 1 9 = e1\n").message


def test_wrong_degree_and_syntax():
    assert "2-form" in error_at("dim 7\nd e7 = e1\n").message
    assert error_at("dim 7\nd e7 = e12 +\n").line == 2
    assert "ambiguous" in error_at("dim 7\nparams a\nd e7 = a^e12\n").message
    assert "division" in error_at("dim 7\nparams a\nd e7 = e12/a\n").message


def test_closure_error_names_frame():
    err = error_at("dim 5\nd e1 = e2^e3\nd e2 = e1^e4\n")
    assert "e1" in err.message and "e2" in err.message
    assert err.line == 2
    text = (MODELS / "closure_error.model").read_text()
    assert "e1" in error_at(text).message


def test_structural_errors():
    assert "dim" in error_at("params a\n").message
    assert "twice" in error_at("dim 7\ndim 7\n").message
    assert "twice" in error_at("dim 7\nd e7 = e12\nd e7 = e34\n").message
    assert "params" in error_at("dim 7\nd e7 = e12\nparams a\n").message
    assert "conflicts" in error_at("dim 7\nA 1 2 = e7\nA 2 1 = e7\n").message
    assert "diagonal" in error_at("dim 7\nA 1 1 = e7\n").message
    assert "missing dim" in error_at("# nothing\n").message


def test_shipped_models_roundtrip():
    for path in sorted(MODELS.glob("*.model")):
        if path.name == "closure_error.model":
            continue
        mf = parse_model(path.read_text())
        assert parse_model(mf.to_text()) == mf, path.name


def test_expression_parser():
    assert parse_scalar("-(a+b)^2/4", ["a", "b"]) == (a + b) ** 2 * Fraction(-1, 4)
    assert parse_form("e1^e2 - e21", 3) == KForm.basis(3, 1, 2) * 2
    assert parse_form("e1*e2", 3) == KForm.basis(3, 1, 2)
    assert parse_form("0", 4, degree=2) == KForm.zero(4, 2)
    with pytest.raises(ParseError) as info:
        parse_scalar("a $ b", ["a", "b"])
    assert info.value.column == 3
