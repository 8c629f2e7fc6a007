import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from annigraph import elaborate, format_expr, parse_ring_expr, ring_from_text
from annigraph.errors import NotPrimePower, RingSyntaxError
from annigraph.parse import GF, Product, Quotient, Zn
from annigraph.verify import builtin_corpus


def test_parse_product():
    assert parse_ring_expr("Z4 x GF(4)") == Product((Zn(4), GF(4)))


def test_parse_quotient():
    q = parse_ring_expr("Z2[x,y]/(x^2, x*y, y^2)")
    assert q == Quotient(2, ("x", "y"), ((((2, 0), 1),), (((1, 1), 1),), (((0, 2), 1),)))


def test_parse_is_whitespace_insensitive():
    assert parse_ring_expr("Z2xZ2xZ3") == parse_ring_expr("  Z2 x  Z2 x Z3 ")


def test_f_alias():
    assert parse_ring_expr("F4 x F5") == parse_ring_expr("GF(4) x GF(5)")


def test_x_inside_brackets_is_a_variable():
    q = parse_ring_expr("Z4[x]/(x^2 - 2, 2x) x Z3")
    assert isinstance(q, Product)
    assert q.items[0].variables == ("x",)


def test_syntax_error_offset():
    with pytest.raises(RingSyntaxError) as info:
        parse_ring_expr("Z6[")
    assert info.value.offset == 2
    assert info.value.expected


@pytest.mark.parametrize(
    "text, canonical",
    [
        ("Z2 x Z2 x Z3", "Z2 x Z2 x Z3"),
        ("Z4[x]/(x^2-2,2x)", "Z4[x]/(x^2 - 2, 2*x)"),
        ("Z25", "Z25"),
    ],
)
def test_format_expr(text, canonical):
    assert format_expr(parse_ring_expr(text)) == canonical


def test_elaborate_examples():
    assert elaborate(Zn(49)).order == 49
    f9 = elaborate(GF(9))
    assert f9.order == 9 and len(f9.classes.units) == 8
    with pytest.raises(NotPrimePower) as info:
        elaborate(parse_ring_expr("Z2 x GF(6)"))
    assert info.value.span == (5, 10)


@pytest.mark.parametrize("expr", sorted({e.expr for e in builtin_corpus()}))
def test_round_trip_on_corpus(expr):
    ast = parse_ring_expr(expr)
    assert parse_ring_expr(format_expr(ast)) == ast


def test_elaboration_is_deterministic():
    a = ring_from_text("Z4[x]/(x^2 + x + 1) x Z3")
    b = ring_from_text("Z4[x]/(x^2 + x + 1) x Z3")
    assert a.labels == b.labels
    assert (a.add == b.add).all() and (a.mul == b.mul).all()


atoms = st.one_of(
    st.integers(2, 60).map(lambda n: f"Z{n}"),
    st.sampled_from(["GF(4)", "GF(8)", "F9", "Z4[x]/(x^2, 2x)", "Z2[x,y]/(x^2, x*y, y^2)"]),
)


@settings(max_examples=60, deadline=None)
@given(st.lists(atoms, min_size=1, max_size=4))
def test_round_trip_on_generated_products(parts):
    ast = parse_ring_expr(" x ".join(parts))
    assert parse_ring_expr(format_expr(ast)) == ast
