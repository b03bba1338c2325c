"""Parse polynomial text such as "x^3 + x + 1" or "x^2 - 2*x + 7"."""

from __future__ import annotations

from .polyring import MonicPolynomial


class PolySyntaxError(ValueError):
    def __init__(self, text: str, pos: int, message: str):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class NotMonicError(ValueError):
    pass


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, s: str) -> bool:
        self.skip()
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def integer(self) -> int | None:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            return None
        return int(self.text[start:self.pos])

    def fail(self, message: str):
        raise PolySyntaxError(self.text, self.pos, message)


def parse_terms(text: str) -> dict:
    """{exponent: coefficient} for a sum of terms [+-][k][*]x[^e] and constants."""
    sc = _Scanner(text)
    terms: dict = {}
    first = True
    while True:
        if sc.peek() == "":
            if first:
                sc.fail("empty polynomial")
            sc.fail("expected a term")
        sign = 1
        if sc.take("+"):
            pass
        elif sc.take("-"):
            sign = -1
        elif not first:
            sc.fail("expected '+' or '-'")
        coef = sc.integer()
        if coef is not None and sc.take("*"):
            if sc.peek() != "x":
                sc.fail("expected 'x' after '*'")
        if sc.take("x"):
            exp = 1
            if sc.take("^") or sc.take("**"):
                exp = sc.integer()
                if exp is None:
                    sc.fail("expected an exponent")
        elif coef is None:
            sc.fail("expected a number or 'x'")
        else:
            exp = 0
        c = sign * (1 if coef is None else coef)
        terms[exp] = terms.get(exp, 0) + c
        first = False
        if sc.peek() == "":
            break
    return {e: c for e, c in terms.items() if c}


def parse_poly(text: str, degrees=None) -> MonicPolynomial:
    """Monic integer polynomial from text; ``degrees`` restricts the allowed degree."""
    terms = parse_terms(text)
    if not terms:
        raise ValueError(f"{text!r} is the zero polynomial")
    d = max(terms)
    if terms[d] != 1:
        raise NotMonicError(
            f"{text!r} has leading coefficient {terms[d]}; only monic polynomials are supported"
        )
    if d < 2:
        raise ValueError(f"{text!r} has degree {d}; degree must be at least 2")
    if degrees is not None and d not in degrees:
        allowed = ", ".join(str(x) for x in degrees)
        raise ValueError(f"{text!r} has degree {d}; expected degree {allowed}")
    return MonicPolynomial(tuple(terms.get(e, 0) for e in range(d)))
