import json

import pytest
from hypothesis import given, strategies as st

from shuffle_quadri import (ArityError, Combination, ExprSyntaxError, ExprTypeError,
                            UnknownLetter, UnknownOperator, evaluate, parse)
from shuffle_quadri.cli import main
from shuffle_quadri.core import Alphabet
from shuffle_quadri.expr import Add, Call, IntLiteral, ScalarMul, Sub, WordLiteral


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_call():
    assert parse("sh(ab, cd)") == Call("sh", (WordLiteral("ab"), WordLiteral("cd")))


def test_parse_linear_combination():
    got = parse("2*ab + ba - ne(a,b)")
    expected = Sub(Add(ScalarMul(IntLiteral(2), WordLiteral("ab")), WordLiteral("ba")),
                   Call("ne", (WordLiteral("a"), WordLiteral("b"))))
    assert got == expected


def test_parse_unit_and_whitespace():
    assert parse(" 1 ") == WordLiteral("")
    assert parse("se ( 1 , a )") == Call("se", (WordLiteral(""), WordLiteral("a")))


def test_type_error_for_tensor_argument():
    with pytest.raises(ExprTypeError):
        parse("ne(delta(ab), c)")
    with pytest.raises(ExprTypeError):
        parse("delta(ab) + a")


@pytest.mark.parametrize("text, position", [("sh(a,", 5), ("a + ", 4), ("sh(a b)", 5),
                                            ("(a", 2), ("a)", 1)])
def test_syntax_error_positions(text, position):
    with pytest.raises(ExprSyntaxError) as info:
        parse(text)
    assert info.value.position == position


def test_unknown_operator_and_arity():
    with pytest.raises(UnknownOperator) as info:
        parse("a + foo(a, b)")
    assert info.value.position == 4
    with pytest.raises(ArityError):
        parse("sh(a)")
    with pytest.raises(ArityError):
        parse("delta(a, b)")


def test_unknown_letter_position():
    with pytest.raises(UnknownLetter) as info:
        evaluate("sh(ab, abz)", Alphabet("ab"))
    assert info.value.position == 9


@pytest.mark.parametrize("text, expected", [
    ("sh(a,b)", "ab + ba"),
    ("ne(a,bc) - sw(bc,a)", "0"),
    ("star(ab,cd) - sh(ab,cd)", "0"),
    ("se(a,bc)", "bac"),
    ("succ(a,bc)", "bac + bca"),
    ("-a + 3", "3*1 - a"),
    ("deltap(ab)", "1|ab + a|b"),
])
def test_eval_examples(text, expected):
    assert evaluate(text).format() == expected


def test_cli_eval(capsys):
    assert run(capsys, "eval", "se(a,bc)") == (0, "bac\n", "")
    code, out, _ = run(capsys, "eval", "sh(a,b)", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"terms": [{"coef": "1", "word": "ab"},
                                         {"coef": "1", "word": "ba"}]}


def test_cli_eval_custom_alphabet(capsys):
    assert run(capsys, "eval", "sh(x,y)", "--alphabet", "xy")[:2] == (0, "xy + yx\n")


@pytest.mark.parametrize("expr, name", [("se(1,1)", "UndefinedOnUnitPair"),
                                        ("deltap(1)", "UnitNotInHPlus"),
                                        ("sh(a,", "ExprSyntaxError"),
                                        ("ne(delta(ab), c)", "ExprTypeError")])
def test_cli_eval_errors_exit_2(capsys, expr, name):
    code, out, err = run(capsys, "eval", expr)
    assert code == 2 and out == ""
    assert name in err


def test_cli_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "check", "--law", "nope")[0] == 2
    assert run(capsys, "check", "--max-len", "0")[0] == 2


def test_cli_check_single_law(capsys):
    code, out, _ = run(capsys, "check", "--law", "thm_main", "--max-len", "4")
    assert code == 0
    assert "4 laws: 4 passed, 0 failed" in out


def _canonical(out):
    reports = json.loads(out)
    for r in reports:
        r.pop("ms")
    return json.dumps(reports, sort_keys=True)


def test_cli_json_is_canonical(capsys):
    argv = ("check", "--law", "cor_one", "--max-len", "4", "--format", "json")
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert _canonical(first) == _canonical(second)
    assert [r["law"] for r in json.loads(first)] == [f"cor_one_{i}" for i in range(1, 5)]


def test_cli_laws_and_example(capsys):
    code, out, _ = run(capsys, "laws")
    assert code == 0 and "thm_main_1" in out and "group thm_main" in out
    code, out, _ = run(capsys, "example")
    assert code == 0
    assert out.count("coefficient sum 10") == 3
    assert "PASS paper_example" in out


combos = st.dictionaries(st.lists(st.integers(0, 2), max_size=4).map(tuple),
                         st.integers(-5, 5), max_size=5).map(Combination)


@given(combos)
def test_print_parse_round_trip(x):
    assert evaluate(x.format()) == x
