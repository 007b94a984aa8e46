"""Pyparsing grammars for scalars, bracket lines, operator expressions and cocycles.

Every grammar here parses a single line. Document structure (headers, comments, line
numbers) is handled in `lienil.core.serializer.text`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cache
from typing import Any

import pyparsing as pp

from lienil.core.errors import ParseError
from lienil.core.linalg.scalar import ONE, ZERO, Scalar
from lienil.core.weyl.element import WeylElement

RATIONAL = r"\d+(?:/\d+)?"
COMPLEX_PATTERN = re.compile(
    rf"^(?P<re>-?{RATIONAL})?(?:(?P<sign>^-|^|[+-])(?P<im>{RATIONAL})?i)?$"
)
"""``RAT``, ``RAT i``, ``i`` or ``RAT (+|-) RAT i``, each part optional but not both"""

_COMPLEX_LITERAL = rf"-?{RATIONAL}\s*[+-]\s*(?:{RATIONAL}\s*)?i"
_IMAGINARY_LITERAL = rf"-?(?:{RATIONAL}\s*)?i"
_REAL_LITERAL = rf"-?{RATIONAL}"


def parse_scalar(text: str) -> Scalar:
    """Read a scalar literal such as ``3``, ``-1/2``, ``i``, ``2/3i`` or ``(1/2+3i)``."""
    compact = re.sub(r"\s+", "", text)
    if compact.startswith("(") and compact.endswith(")"):
        compact = compact[1:-1]
    match = COMPLEX_PATTERN.match(compact)
    if not compact or match is None or (match["re"] is None and match["sign"] is None):
        msg = f"Invalid scalar {text!r}"
        raise ParseError(msg, line=1, text=text)
    try:
        real = Fraction(match["re"]) if match["re"] is not None else Fraction(0)
        if match["sign"] is None:
            imag = Fraction(0)
        else:
            imag = Fraction(match["im"]) if match["im"] is not None else Fraction(1)
            if match["sign"] == "-":
                imag = -imag
    except ZeroDivisionError:
        msg = f"Zero denominator in {text!r}"
        raise ParseError(msg, line=1, text=text) from None
    return Scalar(real, imag)


def _scalar_action(s: str, loc: int, tokens: pp.ParseResults) -> Scalar:
    try:
        return parse_scalar(tokens[0])
    except ParseError as error:
        raise pp.ParseFatalException(s, loc, error.message) from None


@cache
def bracket_line_grammar() -> pp.ParserElement:
    """``[i,j] = TERM ((+|-) TERM)*`` with ``TERM = [SCALAR ['*']] vK``, or ``... = 0``.

    Parses to ``(i, j, {k: coefficient})``.
    """
    integer = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
    # a coefficient is always followed by vK, so literals may touch it: 2v3, 1/2 i v3
    coefficient = (
        pp.Regex(rf"\(\s*(?:{_COMPLEX_LITERAL}|{_IMAGINARY_LITERAL}|{_REAL_LITERAL})\s*\)")
        | pp.Regex(_COMPLEX_LITERAL)
        | pp.Regex(_IMAGINARY_LITERAL)
        | pp.Regex(_REAL_LITERAL)
    ).set_parse_action(_scalar_action)
    basis = pp.Regex(r"v(\d+)").set_parse_action(lambda t: int(t[0][1:]))
    term = pp.Group(pp.Opt(coefficient + pp.Opt(pp.Suppress("*")), default=ONE) + basis)
    sign = pp.one_of("+ -")
    combination = pp.Opt(sign, default="+") + term + pp.ZeroOrMore(sign + term)
    zero = pp.Literal("0").set_parse_action(lambda: [])
    rhs = (combination | zero).set_parse_action(_fold_combination)
    pair = pp.Suppress("[") + integer + pp.Suppress(",") + integer + pp.Suppress("]")
    line = (pair + pp.Suppress("=") + rhs + pp.StringEnd()).set_parse_action(
        lambda t: (t[0], t[1], t[2])
    )
    return line.set_name("a bracket like [1,2] = 2 * v3")


def _fold_combination(tokens: pp.ParseResults) -> Any:
    values: dict[int, Scalar] = {}
    items = list(tokens)
    for index in range(0, len(items), 2):
        sign, (coefficient, k) = items[index], items[index + 1]
        c = coefficient if sign == "+" else -coefficient
        values[k] = values.get(k, ZERO) + c
    return [values]


@cache
def expression_grammar(modes: int) -> pp.ParserElement:
    """Operator expressions on ``modes`` ladder pairs, parsed to a `WeylElement`.

    ``expr := ['-'] term (('+'|'-') term)*``, ``term := factor ('*' factor)*``,
    ``factor := atom ('^' INT)*`` and ``atom := SCALAR | aK | bK | I | '(' expr ')'``.
    Products keep their order since the algebra is not commutative.
    """

    def generator(s: str, loc: int, tokens: pp.ParseResults) -> WeylElement:
        text = tokens[0]
        if text == "I":
            return WeylElement.identity(modes)
        mode = int(text[1:])
        if not 1 <= mode <= modes:
            msg = f"Generator {text} is outside modes 1..{modes}"
            raise pp.ParseFatalException(s, loc, msg)
        if text[0] == "a":
            return WeylElement.lower(modes, mode)
        return WeylElement.raise_(modes, mode)

    def scalar(s: str, loc: int, tokens: pp.ParseResults) -> WeylElement:
        return WeylElement.scalar(modes, _scalar_action(s, loc, tokens))

    def power(s: str, loc: int, tokens: pp.ParseResults) -> WeylElement:
        value = tokens[0]
        for exponent in tokens[1:]:
            if exponent < 1:
                msg = f"Exponent must be a positive integer, not {exponent}"
                raise pp.ParseFatalException(s, loc, msg)
            value = value**exponent
        return value

    def product(tokens: pp.ParseResults) -> WeylElement:
        items = list(tokens)
        negate = items[0] == "-"
        value = items[1] if negate else items[0]
        for factor in items[2 if negate else 1 :]:
            value = value * factor
        return -value if negate else value

    def total(tokens: pp.ParseResults) -> WeylElement:
        items = list(tokens)
        value = items[0]
        for index in range(1, len(items), 2):
            value = value + items[index + 1] if items[index] == "+" else value - items[index + 1]
        return value

    expr = pp.Forward()
    integer = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
    atom = (
        pp.Regex(rf"(?:{RATIONAL}\s*)?i(?![\w/])|{RATIONAL}(?![\w/])").set_parse_action(scalar)
        | pp.Regex(r"[ab]\d+|I(?!\w)").set_parse_action(generator)
        | pp.Suppress("(") + expr + pp.Suppress(")")
    )
    factor = (atom + pp.ZeroOrMore(pp.Suppress("^") + integer)).set_parse_action(power)
    term = (
        pp.Opt(pp.Literal("-")) + factor + pp.ZeroOrMore(pp.Suppress("*") + factor)
    ).set_parse_action(product)
    expr <<= (term + pp.ZeroOrMore(pp.one_of("+ -") + term)).set_parse_action(total)
    return (expr + pp.StringEnd()).set_name("an operator like 1/2 * b1^2 + a2")


@cache
def cocycle_grammar() -> pp.ParserElement:
    """``(i,j)=SCALAR`` pairs separated by commas, parsed to ``{(i, j): value}``."""
    integer = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
    value = pp.Regex(
        rf"\(\s*(?:{_COMPLEX_LITERAL}|{_IMAGINARY_LITERAL}|{_REAL_LITERAL})\s*\)"
        rf"|{_COMPLEX_LITERAL}|{_IMAGINARY_LITERAL}|{_REAL_LITERAL}"
    ).set_parse_action(_scalar_action)
    entry = pp.Group(
        pp.Suppress("(") + integer + pp.Suppress(",") + integer + pp.Suppress(")")
        + pp.Suppress("=")
        + value
    )
    pairs = (entry + pp.ZeroOrMore(pp.Suppress(",") + entry) + pp.StringEnd()).set_parse_action(
        lambda t: [{(e[0], e[1]): e[2] for e in t}]
    )
    return pairs.set_name("values like (1,4)=1,(2,3)=-1/2")


def parse_line(grammar: pp.ParserElement, text: str, *, line: int = 1, offset: int = 0) -> Any:
    """Parse one line, turning pyparsing failures into a positioned `ParseError`.

    ``offset`` is the column of ``text`` within the document line, 0-based. Syntax errors
    name what the whole line should look like rather than the innermost token.
    """
    try:
        return grammar.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as error:
        msg = error.msg
        found = text[error.loc : error.loc + 10].strip()
        if not isinstance(error, pp.ParseFatalException):
            msg = f"Expected {grammar}"
            if found:
                msg = f"{msg}, found {found!r}"
        raise ParseError(msg, line=line, column=offset + error.loc + 1, text=text) from None
