from fractions import Fraction

import pytest

from mckoszul import fixtures
from mckoszul.assoc import DgAlgebra, check_axioms
from mckoszul.duality import Presentation
from mckoszul.fileformat import (ElementSyntaxError, ParseError, parse,
                                 parse_element, print_algebra)
from mckoszul.graded import GradedSpace, Vec
from mckoszul.lie import DgLieAlgebra, check_lie_axioms


ALL_FIXTURES = ["k", "interval", "dual-numbers", "k-eps-3", "lambda-x",
                "k-cross-k", "int-dual", "assoc4", "ut3", "ut3-d",
                "sl2", "heisenberg", "g2dim", "nil3", "nil4", "nil4b",
                "x1", "x2", "abelian(2)", "abelian(3,0,1,2)"]

PRESENTATIONS = ["ce-sl2", "ce-nil4", "bar-k-cross-k", "bar-interval",
                 "cobar-dual-numbers", "cobar-int-dual", "harr-k-eps-3",
                 "harr-lambda-x"]


def test_round_trip_is_byte_identical():
    for name in ALL_FIXTURES + PRESENTATIONS:
        obj = fixtures.load(name)
        text = print_algebra(obj)
        again = print_algebra(parse(text))
        assert text == again, name


def test_parsed_fixtures_pass_their_axiom_checkers():
    for name in ALL_FIXTURES:
        obj = parse(print_algebra(fixtures.load(name)))
        if isinstance(obj, DgLieAlgebra):
            assert check_lie_axioms(obj).ok, name
        else:
            assert check_axioms(obj).ok, name


def test_parse_round_trip_preserves_structure():
    interval = fixtures.load("interval")
    again = parse(print_algebra(interval))
    assert again.space == interval.space
    assert again.products == interval.products
    assert again.differential.entries == interval.differential.entries
    assert again.unit == interval.unit
    assert again.augmentation == interval.augmentation


def test_malformed_rational_names_line():
    text = "kind dga\nbasis a 0\nproduct a a a 1/0\n"
    with pytest.raises(ParseError) as err:
        parse(text)
    assert err.value.line_no == 3
    assert "malformed rational" in str(err.value)


def test_duplicate_basis_name_rejected():
    text = "kind dga\nbasis a 0\nbasis a 1\n"
    with pytest.raises(ParseError) as err:
        parse(text)
    assert "duplicate basis name" in str(err.value)


def test_product_degree_mismatch_has_witness():
    text = "kind dga\nbasis a 0\nbasis c 1\nproduct a a c 1\n"
    with pytest.raises(ParseError) as err:
        parse(text)
    assert "(a,a) -> c" in str(err.value)
    assert "degree 1" in str(err.value)


def test_differential_degree_checked():
    text = "kind dga\nbasis a 0\nbasis b 0\nd a b 1\n"
    with pytest.raises(ParseError) as err:
        parse(text)
    assert "does not raise degree by 1" in str(err.value)


def test_unknown_field_rejected():
    text = "kind dgla\nbasis a 0\nunit a 1\n"
    with pytest.raises(ParseError) as err:
        parse(text)
    assert "unknown field 'unit'" in str(err.value)
    with pytest.raises(ParseError):
        parse("kind dga\nfrobnicate yes\n")


def test_missing_kind_rejected():
    with pytest.raises(ParseError):
        parse("basis a 0\n")
    with pytest.raises(ParseError):
        parse("")


def test_unknown_basis_in_entry():
    with pytest.raises(ParseError) as err:
        parse("kind dgla\nbasis a 0\nbracket a a b 1\n")
    assert "unknown basis name 'b'" in str(err.value)


def test_formal_round_trip_and_validation():
    p = fixtures.load("cobar-int-dual")
    text = print_algebra(p)
    q = parse(text)
    assert isinstance(q, Presentation)
    assert q == p
    # cubic differentials are rejected
    bad = "kind formal\nflavor tensor\nbasis s 1\nd s s*s*s 1\n"
    with pytest.raises(ParseError):
        parse(bad)


def test_parse_element_forms():
    space = GradedSpace({0: ["x", "y⊗eps"], 1: ["z"]})
    assert parse_element("x", space) == Vec.basis("x")
    assert parse_element("3/2*x + z", space) == Vec({"x": Fraction(3, 2), "z": 1})
    assert parse_element("-x", space) == Vec({"x": -1})
    assert parse_element("x - 2*z", space) == Vec({"x": 1, "z": -2})
    assert parse_element("y@eps", space) == Vec.basis("y⊗eps")
    assert parse_element("1/3*y⊗eps", space) == Vec({"y⊗eps": Fraction(1, 3)})


def test_parse_element_errors():
    space = GradedSpace({0: ["x"]})
    for bad in ("", "q", "1/0*x", "3", "x + + y", "2*"):
        with pytest.raises(ElementSyntaxError):
            parse_element(bad, space)
