"""Recursive-descent reader and printer for ring elements.

Grammar (whitespace is ignored)::

    identifier = [A-Za-z_][A-Za-z0-9_]*
    power      = identifier ('^' decimal)?
    term       = decimal? ('*'? power)*      # '*' required between factors
    sum        = term (('+' | '-') term)*

A leading sign is accepted. Coefficients are reduced mod p.
"""

import re

from .errors import ExpressionSyntaxError, UnknownGenerator

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^]))")


def is_identifier(name) -> bool:
    return isinstance(name, str) and _IDENT.fullmatch(name) is not None


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExpressionSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Reader:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def error(self, msg):
        raise ExpressionSyntaxError(msg, self.text, self.tok[2])

    def take(self, kind, value=None):
        k, v, _ = self.tok
        if k == kind and (value is None or v == value):
            self.i += 1
            return v
        return None

    def parse_sum(self):
        terms = {}
        sign = 1
        if self.take("op", "-") is not None:
            sign = -1
        else:
            self.take("op", "+")
        while True:
            self.add_term(terms, *self.parse_term(), sign)
            if self.take("op", "+") is not None:
                sign = 1
            elif self.take("op", "-") is not None:
                sign = -1
            else:
                break
        if self.tok[0] != "end":
            self.error(f"unexpected {self.tok[1]!r}")
        return terms

    def add_term(self, terms, coeff, exps, sign):
        p = self.ring.characteristic
        v = (terms.get(exps, 0) + sign * coeff) % p
        if v:
            terms[exps] = v
        else:
            terms.pop(exps, None)

    def parse_term(self):
        exps = [0] * self.ring.ngens
        coeff = 1
        num = self.take("num")
        if num is not None:
            coeff = int(num)
            if self.take("op", "*") is not None:
                self.parse_power(exps)
            elif self.tok[0] == "ident":
                self.parse_power(exps)
            else:
                return coeff, tuple(exps)
        elif self.tok[0] == "ident":
            self.parse_power(exps)
        else:
            self.error("expected a term")
        while True:
            if self.take("op", "*") is not None:
                self.parse_power(exps)
            elif self.tok[0] in ("ident", "num"):
                self.error("expected '*' between factors")
            else:
                return coeff, tuple(exps)

    def parse_power(self, exps):
        k, name, pos = self.tok
        if k != "ident":
            self.error("expected a generator name")
        self.i += 1
        try:
            idx = self.ring.index(name)
        except UnknownGenerator:
            raise UnknownGenerator(name, pos) from None
        e = 1
        if self.take("op", "^") is not None:
            num = self.take("num")
            if num is None:
                self.error("expected an exponent after '^'")
            e = int(num)
        exps[idx] += e


def parse_element(text: str, ring):
    """Parse ``text`` into a :class:`~cohoc.algebra.Polynomial` of ``ring``."""
    from .algebra import Polynomial

    return Polynomial(ring, _Reader(text, ring).parse_sum())


def format_monomial(exps, names) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_element(f) -> str:
    """Print in normalized form: terms by decreasing degrevlex order."""
    names = f.ring.names
    out = []
    for exps, c in f.items():
        mono = format_monomial(exps, names)
        if not mono:
            out.append(str(c))
        elif c == 1:
            out.append(mono)
        else:
            out.append(f"{c}*{mono}")
    return " + ".join(out) if out else "0"
