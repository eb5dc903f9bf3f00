"""Expression and presentation-file parsing, and canonical formatting.

Multiplication is always an explicit ``*``; juxtaposition is an error, so
generator names may be longer than one character.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .freealg import EMPTY, DegLex, MonomialOrder, Polynomial, Word, leading_term
from .rewrite import RuleSet

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*()=]))")
MAX_DEPTH = 200


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnknownGeneratorError(ParseError):
    pass


class PresentationError(ValueError):
    pass


class NonMonicRelationError(PresentationError):
    pass


@dataclass
class _Tok:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def _tokenize(text: str, line: int, col0: int) -> List[_Tok]:
    toks = []
    i = 0
    n = len(text)
    while True:
        while i < n and text[i].isspace():
            i += 1
        if i == n:
            toks.append(_Tok("end", "", i))
            return toks
        m = _TOKEN_RE.match(text, i)
        if m is None or m.end() == i:
            raise ParseError(f"unexpected character {text[i]!r}", line, col0 + i)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append(_Tok(kind, m.group(kind), start))
        i = m.end()


class _Parser:
    def __init__(self, text: str, names: Sequence[str], line: int = 1, col0: int = 1):
        self.line = line
        self.col0 = col0
        self.toks = _tokenize(text, line, col0)
        self.i = 0
        self.index = {name: k for k, name in enumerate(names)}
        self.depth = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: Optional[_Tok] = None, cls=ParseError):
        tok = tok or self.peek()
        return cls(msg, self.line, self.col0 + tok.pos)

    def expect_end(self):
        tok = self.peek()
        if tok.kind != "end":
            raise self.error(f"unexpected {tok.text!r}")

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek().text in ("+", "-") and self.peek().kind == "op":
            op = self.toks[self.i].text
            self.i += 1
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.i += 1
                p = p * self.factor()
            elif tok.kind in ("name", "int") or tok.text == "(":
                raise self.error("missing '*' (juxtaposition is not multiplication)")
            else:
                return p

    def factor(self) -> Polynomial:
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise self.error("expression nested too deeply")
        try:
            tok = self.peek()
            if tok.kind == "int":
                self.i += 1
                try:
                    return Polynomial.constant(int(tok.text))
                except ValueError:
                    raise self.error("integer literal too long", tok) from None
            if tok.kind == "name":
                self.i += 1
                k = self.index.get(tok.text)
                if k is None:
                    raise self.error(f"unknown generator {tok.text!r}", tok, UnknownGeneratorError)
                return Polynomial.monomial((k,))
            if tok.text == "-":
                self.i += 1
                return -self.factor()
            if tok.text == "(":
                self.i += 1
                p = self.expr()
                if self.peek().text != ")":
                    raise self.error("expected ')'")
                self.i += 1
                return p
            if tok.kind == "end":
                raise self.error("unexpected end of input")
            raise self.error(f"unexpected {tok.text!r}")
        finally:
            self.depth -= 1


def _names(P) -> Sequence[str]:
    return P.alphabet if isinstance(P, RuleSet) else P


def parse_polynomial(text: str, P, line: int = 1, column: int = 1) -> Polynomial:
    """Parse an expression over the generators of ``P`` (a RuleSet or a name list)."""
    if not text.strip():
        raise ParseError("empty expression", line, column)
    parser = _Parser(text, _names(P), line, column)
    p = parser.expr()
    parser.expect_end()
    return p


def parse_relation(text: str, P, line: int = 1, column: int = 1) -> Polynomial:
    """Parse ``L = R`` (giving ``L - R``) or a bare expression."""
    if not text.strip():
        raise ParseError("empty relation", line, column)
    parser = _Parser(text, _names(P), line, column)
    lhs = parser.expr()
    tok = parser.peek()
    if tok.kind == "op" and tok.text == "=":
        parser.i += 1
        rhs = parser.expr()
        parser.expect_end()
        return lhs - rhs
    parser.expect_end()
    return lhs


_SECTIONS = ("generators", "order", "relations")


def parse_presentation(text: str) -> RuleSet:
    """Parse a presentation file::

        generators: a b c
        order: deglex a < b < c
        relations:
          (1 - a*b)*c = 1
          c*(1 - a*b) = 1

    ``#`` starts a comment.  A missing order section means deglex in
    declaration order.  Relations are sign-normalized to monic rules.
    """
    generators: Optional[List[str]] = None
    order_spec: Optional[Tuple[int, str, int]] = None
    relations: List[Tuple[int, int, str]] = []
    section = None
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        if ":" in body:
            head, _, rest = body.partition(":")
            name = head.strip().lower()
            if name not in _SECTIONS:
                raise ParseError(f"unknown section {head.strip()!r}", lineno,
                                 len(head) - len(head.lstrip()) + 1)
            if name in seen:
                raise ParseError(f"duplicate section {name!r}", lineno, 1)
            seen.add(name)
            section = name
            col = len(head) + 2
            if name == "generators":
                generators = _parse_generators(rest, lineno, col)
            elif name == "order":
                order_spec = (lineno, rest, col)
            elif rest.strip():
                relations.append((lineno, col, rest))
            continue
        if section != "relations":
            raise ParseError("text outside the relations section", lineno,
                             len(body) - len(body.lstrip()) + 1)
        relations.append((lineno, 1, body))

    if generators is None:
        raise PresentationError("missing 'generators:' section")
    order = _parse_order(order_spec, generators)
    polys = []
    for lineno, col, rel in relations:
        p = parse_relation(rel, generators, lineno, col)
        lt = leading_term(p, order)
        if lt is None:
            raise PresentationError(f"line {lineno}: relation is trivially 0 = 0")
        c, w = lt
        if abs(c) != 1:
            raise NonMonicRelationError(
                f"line {lineno}: leading coefficient {c} is not +-1; relations must be monic "
                f"after sign normalization")
        if w == EMPTY:
            raise PresentationError(
                f"line {lineno}: relation is the constant {c}; the presented ring is trivial")
        p = p if c == 1 else -p
        if p in polys:
            raise PresentationError(f"line {lineno}: duplicate relation")
        polys.append(p)
    return RuleSet.from_polynomials(generators, order, polys)


def _parse_generators(rest: str, lineno: int, col: int) -> List[str]:
    names = []
    for m in re.finditer(r"[^\s,]+", rest):
        name = m.group()
        if not NAME_RE.match(name):
            raise ParseError(f"invalid generator name {name!r}", lineno, col + m.start())
        if name in names:
            raise ParseError(f"duplicate generator {name!r}", lineno, col + m.start())
        names.append(name)
    if not names:
        raise ParseError("no generators declared", lineno, col)
    return names


def _parse_order(spec, generators: List[str]) -> MonomialOrder:
    if spec is None:
        return DegLex(len(generators))
    lineno, rest, col = spec
    parts = rest.split(None, 1)
    if not parts:
        return DegLex(len(generators))
    if parts[0] != "deglex":
        raise ParseError(f"unsupported order {parts[0]!r} (only deglex)", lineno, col)
    if len(parts) == 1:
        return DegLex(len(generators))
    chain = [s.strip() for s in parts[1].split("<")]
    index = {n: i for i, n in enumerate(generators)}
    if any(n not in index for n in chain) or sorted(chain) != sorted(generators):
        raise ParseError("order must list every generator exactly once, as 'x < y < ...'",
                         lineno, col)
    return DegLex(len(generators), [index[n] for n in chain])


def format_word(w: Word, P) -> str:
    names = _names(P)
    return "*".join(names[x] for x in w) if w else "1"


def format_polynomial(p: Polynomial, P, order: Optional[MonomialOrder] = None) -> str:
    """Canonical text: terms in descending order, ``*`` between factors."""
    if order is None:
        order = P.order if isinstance(P, RuleSet) else DegLex(len(P))
    if not p:
        return "0"
    out = []
    for k, (w, c) in enumerate(p.sorted_terms(order)):
        mag = abs(c)
        if not w:
            body = str(mag)
        elif mag == 1:
            body = format_word(w, P)
        else:
            body = f"{mag}*{format_word(w, P)}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)
