"""The ring-expression language.

    expr     := atom { "x" atom }
    atom     := "Z" INT | "GF(" INT ")" | "F" INT | quotient | "(" expr ")"
    quotient := "Z" INT "[" VAR { "," VAR } "]" "/(" poly { "," poly } ")"
    poly     := term { ("+" | "-") term }
    term     := [INT ["*"]] VAR ["^" INT] { "*" VAR ["^" INT] } | INT

A bare ``x`` between atoms is the product operator; inside brackets and
relation lists it is an ordinary variable name.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .errors import AnnigraphError, NotPrimePower, RingSyntaxError
from .presentation import make_gf, make_quotient, prime_power
from .rings import Ring, make_product, make_zn

# exponent tuple -> coefficient, kept as a sorted tuple so ASTs compare structurally
Terms = tuple[tuple[tuple[int, ...], int], ...]


@dataclass(frozen=True)
class Zn:
    n: int
    span: tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class GF:
    q: int
    span: tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Quotient:
    modulus: int
    variables: tuple[str, ...]
    relations: tuple[Terms, ...]
    span: tuple[int, int] = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Product:
    items: tuple["RingExpr", ...]
    span: tuple[int, int] = field(default=(0, 0), compare=False)


RingExpr = Union[Zn, GF, Quotient, Product]

_TOKEN = re.compile(r"\s*(?:(\d+)|(GF|[A-Za-z])|(\S))")


@dataclass
class _Tok:
    kind: str  # "int", "name", "sym", "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        if m.group(1):
            toks.append(_Tok("int", m.group(1), m.start(1)))
        elif m.group(2):
            toks.append(_Tok("name", m.group(2), m.start(2)))
        elif m.group(3):
            toks.append(_Tok("sym", m.group(3), m.start(3)))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def _fail(self, expected: tuple[str, ...]):
        tok = self.tok
        if tok.kind == "end":
            where = self.toks[self.i - 1].pos if self.i else 0
            raise RingSyntaxError("unexpected end of input", where, expected)
        raise RingSyntaxError(f"unexpected {tok.text!r}", tok.pos, expected)

    def _advance(self) -> _Tok:
        tok = self.tok
        self.i += 1
        return tok

    def _sym(self, s: str) -> _Tok:
        if self.tok.kind == "sym" and self.tok.text == s:
            return self._advance()
        self._fail((repr(s),))

    def _int(self) -> int:
        if self.tok.kind == "int":
            return int(self._advance().text)
        self._fail(("INT",))

    def _at_sym(self, s: str) -> bool:
        return self.tok.kind == "sym" and self.tok.text == s

    def parse(self) -> RingExpr:
        node = self.expr()
        if self.tok.kind != "end":
            self._fail(("'x'", "end of input"))
        return node

    def expr(self) -> RingExpr:
        start = self.tok.pos
        items = [self.atom()]
        while self.tok.kind == "name" and self.tok.text == "x":
            self._advance()
            items.append(self.atom())
        if len(items) == 1:
            return items[0]
        return Product(tuple(items), (start, self.toks[self.i - 1].pos + len(self.toks[self.i - 1].text)))

    def _end(self) -> int:
        prev = self.toks[self.i - 1]
        return prev.pos + len(prev.text)

    def atom(self) -> RingExpr:
        tok = self.tok
        start = tok.pos
        if self._at_sym("("):
            self._advance()
            inner = self.expr()
            self._sym(")")
            return inner
        if tok.kind == "name" and tok.text in ("Z", "F", "GF"):
            self._advance()
            if tok.text == "GF":
                self._sym("(")
                q = self._int()
                self._sym(")")
                return GF(q, (start, self._end()))
            value = self._int()
            if tok.text == "F":
                return GF(value, (start, self._end()))
            if self._at_sym("["):
                return self.quotient(value, start)
            return Zn(value, (start, self._end()))
        self._fail(("'Z'", "'GF('", "'F'", "'('"))

    def quotient(self, modulus: int, start: int) -> Quotient:
        self._sym("[")
        names = [self._var()]
        while self._at_sym(","):
            self._advance()
            names.append(self._var())
        self._sym("]")
        if len(set(names)) != len(names):
            raise RingSyntaxError("duplicate variable", start, ())
        self._sym("/")
        self._sym("(")
        rels = [self.poly(names)]
        while self._at_sym(","):
            self._advance()
            rels.append(self.poly(names))
        self._sym(")")
        return Quotient(modulus, tuple(names), tuple(rels), (start, self._end()))

    def _var(self) -> str:
        if self.tok.kind == "name":
            return self._advance().text
        self._fail(("VAR",))

    def poly(self, names: list[str]) -> Terms:
        acc: dict[tuple[int, ...], int] = {}
        sign = 1
        if self._at_sym("-"):
            self._advance()
            sign = -1
        elif self._at_sym("+"):
            self._advance()
        while True:
            mono, coef = self.term(names)
            acc[mono] = acc.get(mono, 0) + sign * coef
            if self._at_sym("+"):
                sign = 1
            elif self._at_sym("-"):
                sign = -1
            else:
                break
            self._advance()
        return tuple(sorted(((m, c) for m, c in acc.items() if c), key=_format_key))

    def term(self, names: list[str]) -> tuple[tuple[int, ...], int]:
        exps = [0] * len(names)
        coef = 1
        need_var = True
        if self.tok.kind == "int":
            coef = self._int()
            need_var = False
            if self._at_sym("*"):
                self._advance()
                need_var = True
            elif self.tok.kind != "name":
                return tuple(exps), coef
        while True:
            if self.tok.kind != "name":
                if need_var:
                    self._fail(("VAR",))
                break
            tok = self.tok
            if tok.text not in names:
                raise RingSyntaxError(f"undeclared variable {tok.text!r}", tok.pos, tuple(names))
            self._advance()
            e = 1
            if self._at_sym("^"):
                self._advance()
                e = self._int()
            exps[names.index(tok.text)] += e
            if self._at_sym("*"):
                self._advance()
                need_var = True
                continue
            need_var = False
            if self.tok.kind == "name" and self.tok.text in names:
                continue  # juxtaposition, as in "xy"
            break
        return tuple(exps), coef


def _format_key(item):
    mono, _ = item
    return (-sum(mono), tuple(-e for e in mono))


def parse_ring_expr(text: str) -> RingExpr:
    """Parse a ring expression such as ``"Z4 x GF(4)"`` into an AST."""
    return _Parser(text).parse()


# -- printing ---------------------------------------------------------------------------


def _format_term(mono: tuple[int, ...], coef: int, names: tuple[str, ...]) -> str:
    parts = [v if e == 1 else f"{v}^{e}" for v, e in zip(names, mono) if e]
    c = abs(coef)
    if not parts:
        return str(c)
    body = "*".join(parts)
    return body if c == 1 else f"{c}*{body}"


def format_poly(terms: Terms, names: tuple[str, ...]) -> str:
    if not terms:
        return "0"
    out = ""
    for k, (mono, coef) in enumerate(sorted(terms, key=_format_key)):
        t = _format_term(mono, coef, names)
        if k == 0:
            out = t if coef > 0 else f"-{t}"
        else:
            out += f" + {t}" if coef > 0 else f" - {t}"
    return out


def format_expr(expr: RingExpr) -> str:
    """Canonical text of an expression; ``parse(format(e)) == e``."""
    if isinstance(expr, Zn):
        return f"Z{expr.n}"
    if isinstance(expr, GF):
        return f"GF({expr.q})"
    if isinstance(expr, Quotient):
        rels = ", ".join(format_poly(r, expr.variables) for r in expr.relations)
        return f"Z{expr.modulus}[{','.join(expr.variables)}]/({rels})"
    return " x ".join(
        f"({format_expr(e)})" if isinstance(e, Product) else format_expr(e) for e in expr.items
    )


# -- elaboration -------------------------------------------------------------------------


def elaborate(expr: RingExpr) -> Ring:
    """Build the ring an expression denotes.

    Constructor errors propagate unchanged except for a ``span`` attribute
    pointing back into the source text.
    """
    try:
        if isinstance(expr, Zn):
            return make_zn(expr.n)
        if isinstance(expr, GF):
            pk = prime_power(expr.q)
            if pk is None:
                raise NotPrimePower(f"{expr.q} is not a prime power")
            return make_gf(*pk)
        if isinstance(expr, Quotient):
            rels = [dict(r) for r in expr.relations]
            return make_quotient(expr.modulus, expr.variables, rels, name=format_expr(expr))
        ring = make_product([elaborate(e) for e in expr.items])
        ring.name = format_expr(expr)
        return ring
    except AnnigraphError as err:
        if getattr(err, "span", None) is None:
            err.span = expr.span
        raise


def ring_from_text(text: str) -> Ring:
    return elaborate(parse_ring_expr(text))
