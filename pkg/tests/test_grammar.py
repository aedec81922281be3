import pytest

from chevbg.chevalley import ElemGen, Word
from chevbg.errors import ParseError, UnknownVariableError
from chevbg.grammar import max_index, parse_sp_word, parse_word, word_kind
from chevbg.ring import parse_poly
from chevbg.symplectic import SpGen
from tests.conftest import ZX, ZXY


def test_type_a_word():
    w = parse_word("E(1,2;x1^2+3) E(2,3;-1)", 3, ZX)
    assert w == Word(3, ZX, [ElemGen(1, 2, parse_poly("x1^2+3", 1)), ElemGen(2, 3, ZX.const(-1))])
    assert str(w) == "E(1,2;x1^2+3) E(2,3;-1)"


def test_round_trip():
    text = "E(3,1;x1*x2-2) E(1,2;(x1+1)^2) E(2,3;0)"
    w = parse_word(text, 3, ZXY)
    assert parse_word(str(w), 3, ZXY) == w


def test_spaces_inside_parameters():
    assert parse_word("  E(1,2; x1 + 1 )\n E(2,1;2)", 3, ZX)[0].a == parse_poly("x1+1", 1)


def test_empty():
    assert len(parse_word("", 3, ZX)) == 0
    assert word_kind("  ") == "empty"


def test_symplectic_tokens():
    gens = parse_sp_word("SpL(1,2;x1) SpU(2;1) SpD(1;-x1) SpM+(1,2;3) SpM-(2,1;x1^2)", 2, ZX)
    assert [g.kind for g in gens] == ["L", "U", "D", "M+", "M-"]
    assert gens[3] == SpGen("M+", 2, 1, ZX.const(3), 2)
    assert word_kind("SpU(1;1)") == "C"
    assert " ".join(g.token() for g in gens) == \
        "SpL(1,2;x1) SpU(2;1) SpD(1;-x1) SpM+(1,2;3) SpM-(2,1;x1^2)"


def test_max_index():
    assert max_index("E(1,5;1) E(2,3;x1)") == 5


@pytest.mark.parametrize("text,col", [
    ("E(1,2;x1) F(1,2;1)", 11),
    ("E(1,2;x1)E(2,1;1)", 10),
    ("E(1,2;x1+)", 10),
    ("E(1,1;x1)", 1),
    ("E(1,4;x1)", 1),
    ("E(1;x1)", 1),
    ("E(1,2 x1)", 3),
    ("E(1,2;(x1", 1),
    ("SpU(1;1)", 1),
])
def test_errors_have_positions(text, col):
    with pytest.raises(ParseError) as info:
        parse_word(text, 3, ZX)
    assert info.value.column == col


def test_unknown_variable_position():
    with pytest.raises(UnknownVariableError) as info:
        parse_word("E(1,2;1) E(2,3;x1+x2)", 3, ZX)
    assert info.value.column == 19


def test_sp_errors():
    with pytest.raises(ParseError):
        parse_sp_word("E(1,2;1)", 2, ZX)
    with pytest.raises(ParseError):
        parse_sp_word("SpU(1,2;1)", 2, ZX)
    with pytest.raises(ParseError):
        parse_sp_word("SpL(1,1;1)", 2, ZX)
