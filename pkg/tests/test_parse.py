import pytest

from polyfact.parse import NotMonicError, PolySyntaxError, parse_poly


@pytest.mark.parametrize("text,coeffs", [
    ("x^2+1", (1, 0)),
    ("x^3+x+1", (1, 1, 0)),
    ("x^2 - 2*x + 7", (7, -2)),
    ("  x ^ 3 - 3x^2 + 2 x - 5 ", (-5, 2, -3)),
    ("1 + x^2", (1, 0)),
    ("x**2 + x + x", (0, 2)),
    ("x^4 - 1", (-1, 0, 0, 0)),
])
def test_parse(text, coeffs):
    assert parse_poly(text).coeffs == coeffs


def test_non_monic():
    with pytest.raises(NotMonicError, match="monic"):
        parse_poly("2*x^2+1")
    with pytest.raises(NotMonicError):
        parse_poly("-x^2+1")


@pytest.mark.parametrize("text,pos", [("x^2+", 4), ("x^2 1", 4), ("x^", 2), ("", 0), ("x^2+*x", 4), ("x^2 + 3*", 8)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(PolySyntaxError) as exc:
        parse_poly(text)
    assert exc.value.pos == pos


def test_degree_checks():
    with pytest.raises(ValueError, match="degree"):
        parse_poly("x+1")
    with pytest.raises(ValueError, match="degree"):
        parse_poly("x^4+1", degrees=(2, 3))
    with pytest.raises(ValueError):
        parse_poly("x^2 - x^2")
