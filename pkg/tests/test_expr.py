"""Expression language: grammar, precedence, evaluation, round trips."""

import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from quadcheck import DomainError, EvaluationError, ParseError, PoleError
from quadcheck.expr import (
    Binary,
    Call,
    Constant,
    FUNCTIONS,
    Negate,
    Number,
    Variable,
    evaluate,
    parse,
    to_string,
    variables,
)


def test_parse_rational():
    assert parse("1/(k+2)") == Binary(
        "/", Number(1.0), Binary("+", Variable("k"), Number(2.0))
    )


def test_parse_power_binds_tighter_than_division():
    ast = parse("gamma(4*a*k/pi^2+b)")
    expected = Call(
        "gamma",
        Binary(
            "+",
            Binary(
                "/",
                Binary("*", Binary("*", Number(4.0), Variable("a")), Variable("k")),
                Binary("^", Constant("pi"), Number(2.0)),
            ),
            Variable("b"),
        ),
    )
    assert ast == expected


def test_parse_error_offset():
    with pytest.raises(ParseError) as err:
        parse("2*")
    assert err.value.offset == 2


def test_parse_error_cases():
    with pytest.raises(ParseError):
        parse("")
    with pytest.raises(ParseError) as err:
        parse("(1+2")
    assert err.value.offset == 4
    with pytest.raises(ParseError):
        parse("foo(2)")  # unknown function
    with pytest.raises(ParseError) as err:
        parse("2k")  # no implicit multiplication
    assert err.value.offset == 1
    with pytest.raises(ParseError):
        parse("1 + @")
    with pytest.raises(ParseError):
        parse("sin(1,2)")  # builtins are unary; comma is not in the grammar
    # identifiers and digits are ASCII only
    with pytest.raises(ParseError):
        parse("αk+1")  # Greek alpha
    with pytest.raises(ParseError):
        parse("٣+1")  # Arabic-Indic digit three


def test_number_literals():
    assert parse("1.5").value == 1.5
    assert parse(".25").value == 0.25
    assert parse("2e-3").value == 2e-3
    assert parse("1.25E2").value == 125.0


def test_evaluate_examples():
    assert abs(evaluate(parse("k^2+1"), {"k": 1j})) <= 1e-12
    assert abs(evaluate(parse("cos(pi)"), {}) - (-1.0)) < 1e-15
    assert abs(evaluate(parse("gamma(0.5)^2"), {}) - math.pi) < 1e-10


def test_constants():
    assert evaluate(parse("i"), {}) == 1j
    assert abs(evaluate(parse("e"), {}) - math.e) < 1e-15
    assert abs(evaluate(parse("pi"), {}) - math.pi) < 1e-15


def test_precedence_and_associativity():
    assert evaluate(parse("-2^2"), {}) == -4.0  # ^ above unary minus
    assert abs(evaluate(parse("2^-2"), {}) - 0.25) < 1e-15
    assert abs(evaluate(parse("2^3^2"), {}) - 512.0) < 5e-13  # right assoc
    assert evaluate(parse("6-3-2"), {}) == 1.0  # left assoc
    assert evaluate(parse("2*-3"), {}) == -6.0
    assert evaluate(parse("1+2*3"), {}) == 7.0


def test_unbound_variable():
    with pytest.raises(EvaluationError):
        evaluate(parse("k+1"), {})
    with pytest.raises(EvaluationError):
        evaluate(parse("q"), {"k": 1.0})


def test_division_by_zero():
    with pytest.raises(EvaluationError):
        evaluate(parse("1/k"), {"k": 0.0})


def test_domain_errors_propagate():
    with pytest.raises(DomainError):
        evaluate(parse("log(0)"), {})
    with pytest.raises(PoleError):
        evaluate(parse("gamma(0)"), {})
    with pytest.raises(PoleError):
        evaluate(parse("zeta(1)"), {})
    with pytest.raises(DomainError):
        evaluate(parse("0^(-1)"), {})


def test_variables_collection():
    assert variables(parse("1/(k+2)")) == {"k"}
    assert variables(parse("a*k+b*pi")) == {"a", "k", "b"}
    assert variables(parse("sin(cos(w))")) == {"w"}
    assert variables(parse("2+2")) == set()


def test_purity():
    ast = parse("sin(k)*gamma(k+2)/(k^2+1)")
    v1 = evaluate(ast, {"k": 0.3 + 0.2j})
    v2 = evaluate(ast, {"k": 0.3 + 0.2j})
    assert v1 == v2


# ---------------------------------------------------------------------------
# property tests
# ---------------------------------------------------------------------------

_numbers = st.floats(
    min_value=0.0, max_value=1e6, allow_nan=False, allow_infinity=False
).map(lambda x: Number(abs(x)))
_variables = st.sampled_from(["k", "b", "w"]).map(Variable)
_constants = st.sampled_from(["pi", "e", "i"]).map(Constant)
_leaves = st.one_of(_numbers, _variables, _constants)


def _extend(children):
    return st.one_of(
        st.builds(Negate, children),
        st.builds(Binary, st.sampled_from("+-*/^"), children, children),
        st.builds(Call, st.sampled_from(sorted(FUNCTIONS)), children),
    )


_asts = st.recursive(_leaves, _extend, max_leaves=25)


@settings(max_examples=200, deadline=None)
@given(_asts)
def test_roundtrip_parse_of_canonical_rendering(ast):
    assert parse(to_string(ast)) == ast


@settings(max_examples=150, deadline=None)
@given(
    st.lists(st.integers(min_value=1, max_value=9), min_size=2, max_size=6),
    st.lists(st.sampled_from("+-*/^"), min_size=1, max_size=5),
)
def test_precedence_against_reference_evaluator(atoms, ops):
    # flat expression with no parentheses; the reference is Python's own
    # precedence, which matches the grammar for these operators
    n = min(len(atoms) - 1, len(ops))
    parts = [str(atoms[0])]
    for i in range(n):
        # keep exponents small so chains like 9^9^9 stay representable
        rhs = atoms[i + 1] if ops[i] != "^" else (atoms[i + 1] % 3) + 1
        parts.append(ops[i])
        parts.append(str(rhs))
    source = "".join(parts)
    try:
        expected = complex(eval(source.replace("^", "**")))
    except OverflowError:
        assume(False)  # right-associative ^ chains can exceed double range
    assume(abs(expected) < 1e300)
    got = evaluate(parse(source), {})
    assert abs(got - expected) <= 1e-12 * max(1.0, abs(expected))


@settings(max_examples=100, deadline=None)
@given(_asts)
def test_rendering_is_stable(ast):
    assert to_string(parse(to_string(ast))) == to_string(ast)


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="0123456789.+-*/^()ksincoexpgamzetalh _\t", max_size=30))
def test_parser_never_raises_anything_but_parse_error(source):
    # arbitrary input either parses or fails with the documented error
    try:
        parse(source)
    except ParseError:
        pass
