"""Parser and printer for the engine's textual expression form.

Grammar (EBNF):

    expr    = term { ("+" | "-") term } ;
    term    = factor { ("*" | "/") factor } ;
    factor  = [ "-" ] base [ "^" integer ] ;
    base    = "(" expr ")" | integer | "q" | identifier ;

``*`` is mandatory (no juxtaposition), ``^`` takes integer exponents
(negative allowed), and ``/`` requires a scalar divisor (a polynomial
whose only word is empty).  Identifiers resolve against the preset the
text is parsed for; ``q`` is the deformation parameter.

Suites are JSON files of the shape
``{"name", "preset", "entries": [{"name", "lhs", "rhs", "paper_ref", ...}]}``;
an entry passes when lhs - rhs normalizes to exactly zero.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .algebra import AlgebraError, NCPoly, Preset, nc_mul
from .scalars import ONE, QScalar

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([()+\-*/^]))")


class ParseError(Exception):
    def __init__(self, message, text="", pos=0):
        self.pos = pos
        if text:
            message = f"{message} at position {pos}: {text[:pos]}<HERE>{text[pos:]}"
        super().__init__(message)


def tokenize(text: str):
    out = []
    idx = 0
    while idx < len(text):
        m = _TOKEN_RE.match(text, idx)
        if not m or m.end() == idx:
            if text[idx:].strip():
                raise ParseError(f"unexpected character {text[idx]!r}", text, idx)
            break
        num, ident, op = m.groups()
        if num is not None:
            out.append(("int", int(num), idx))
        elif ident is not None:
            out.append(("name", ident, idx))
        else:
            out.append(("op", op, idx))
        idx = m.end()
    return out


class _Parser:
    def __init__(self, text, preset: Preset):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.preset = preset

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", None, len(self.text))

    def next(self):
        t = self.peek()
        self.i += 1
        return t

    def expect_op(self, op):
        kind, val, pos = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", self.text, pos)

    def parse(self) -> NCPoly:
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"trailing input {val!r}", self.text, pos)
        return p

    def expr(self) -> NCPoly:
        p = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                r = self.term()
                p = p + r if val == "+" else p - r
            else:
                return p

    def term(self) -> NCPoly:
        p = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.next()
                p = nc_mul(p, self.factor())
            elif kind == "op" and val == "/":
                self.next()
                d = self.factor()
                c = _scalar_value(d)
                if c is None or not c:
                    raise ParseError("division requires a nonzero scalar divisor",
                                     self.text, pos)
                p = p * _coeff_inverse(self.preset, c)
            else:
                return p

    def factor(self) -> NCPoly:
        kind, val, pos = self.peek()
        if kind == "op" and val == "-":
            self.next()
            return -self.factor()
        base = self.base()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.next()
            k2, v2, p2 = self.next()
            sign = 1
            if k2 == "op" and v2 == "-":
                sign = -1
                k2, v2, p2 = self.next()
            if k2 != "int":
                raise ParseError("expected integer exponent", self.text, p2)
            return _poly_pow(base, sign * v2, self.text, p2)
        return base

    def base(self) -> NCPoly:
        kind, val, pos = self.next()
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        if kind == "int":
            return NCPoly.scalar(self.preset, self.preset.one * val)
        if kind == "name":
            if val == "q":
                return NCPoly.scalar(self.preset, _q_value(self.preset))
            if val in self.preset.by_name:
                return NCPoly.generator(self.preset, val)
            aliases = getattr(self.preset, "aliases", {})
            if val in aliases:
                cache = getattr(self.preset, "_alias_cache", None)
                if cache is None:
                    cache = self.preset._alias_cache = {}
                if val not in cache:
                    cache[val] = parse(aliases[val], self.preset)
                return cache[val]
            raise ParseError(f"unknown generator {val!r} in preset "
                             f"{self.preset.name}", self.text, pos)
        raise ParseError(f"unexpected token {val!r}", self.text, pos)


def _q_value(preset):
    from fractions import Fraction

    from .scalars import Q

    if isinstance(preset.one, Fraction):
        raise ParseError("'q' is not available in a numerically specialized preset")
    return Q


def _scalar_value(p: NCPoly):
    if not p.terms:
        return p.preset.zero
    if len(p.terms) == 1 and () in p.terms:
        return p.terms[()]
    return None


def _coeff_inverse(preset, c):
    if isinstance(c, QScalar):
        return ONE / c
    return 1 / c


def _poly_pow(p: NCPoly, n: int, text="", pos=0) -> NCPoly:
    preset = p.preset
    if n == 0:
        return NCPoly.one(preset)
    base = p
    if n < 0:
        c = _scalar_value(p)
        if c is not None and c:
            base = NCPoly.scalar(preset, _coeff_inverse(preset, c))
        elif len(p.terms) == 1:
            from .algebra import _invert_monomial

            base = _invert_monomial(p)
        else:
            raise ParseError("cannot raise a sum to a negative power", text, pos)
        n = -n
    out = NCPoly.one(preset)
    for _ in range(n):
        out = nc_mul(out, base)
    return out


def parse(text: str, preset: Preset) -> NCPoly:
    """Parse and normal-order an expression over the given preset."""
    return _Parser(text, preset).parse()


# ---------------------------------------------------------------------------
# printing


def format_scalar(c: QScalar) -> str:
    neg, body, _ = _scalar_pieces(c)
    return ("-" if neg else "") + body


def _scalar_pieces(c):
    """(negative, body, atomic): body has no top-level +/-; atomic means it
    can stand as a bare product factor."""
    if not c.num:
        return (False, "0", True)
    neg = c.num[-1] < 0
    a = -c if neg else c
    nt = sum(1 for x in a.num if x)
    num = _poly_text(a.num)
    if a.den == (1,):
        if nt == 1:
            return (neg, num, True)
        return (neg, num, False)
    dt = sum(1 for x in a.den if x)
    den = _poly_text(a.den)
    num_s = f"({num})" if nt > 1 else num
    den_s = f"({den})" if dt > 1 else den
    return (neg, f"{num_s}/{den_s}", True)


def _poly_text(p: tuple) -> str:
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        if k == 0:
            t = str(abs(c))
        else:
            qs = "q" if k == 1 else f"q^{k}"
            t = qs if abs(c) == 1 else f"{abs(c)}*{qs}"
        parts.append(("-" if c < 0 else "+", t))
    sign, first = parts[0]
    out = ("-" if sign == "-" else "") + first
    for sign, t in parts[1:]:
        out += f" {sign} {t}"
    return out


def _coeff_factor(c):
    """(negative, product-safe coefficient text)."""
    if isinstance(c, QScalar):
        neg, body, atomic = _scalar_pieces(c)
        if not atomic:
            body = f"({body})"
        return neg, body
    s = str(c)
    if s.startswith("-"):
        return True, s[1:]
    return False, s


def format_poly(p: NCPoly) -> str:
    """Deterministic textual form; round-trips through ``parse``."""
    if not p.terms:
        return "0"
    preset = p.preset
    items = sorted(p.terms.items(), key=lambda kv: _word_sort_key(preset, kv[0]))
    chunks = []
    for w, c in items:
        neg, cs = _coeff_factor(c)
        body = preset.word_str(w)
        if w == ():
            text = cs
        elif cs == "1":
            text = body
        else:
            text = f"{cs}*{body}"
        chunks.append(("-" if neg else "+", text))
    sign, first = chunks[0]
    out = ("-" if sign == "-" else "") + first
    for sign, t in chunks[1:]:
        out += f" {sign} {t}"
    return out


def _word_sort_key(preset, w):
    units = []
    for g, e in w:
        units.extend([g] * abs(e) if e > 0 else [g] * abs(e))
    return (preset.word_degree(w), len(units), tuple(units),
            tuple(e for _, e in w))


def print_poly(p: NCPoly) -> str:
    return format_poly(p)


# ---------------------------------------------------------------------------
# suite files


@dataclass
class SuiteEntry:
    name: str
    lhs: str
    rhs: str
    paper_ref: str = ""
    preset: str = ""
    flag: str = ""  # nonempty -> a documented discrepancy; mismatch is not a failure
    note: str = ""


@dataclass
class Suite:
    name: str
    preset: str
    entries: list = field(default_factory=list)


def load_suite(data) -> Suite:
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    suite = Suite(name=data["name"], preset=data.get("preset", ""))
    for e in data["entries"]:
        suite.entries.append(
            SuiteEntry(
                name=e["name"],
                lhs=e["lhs"],
                rhs=e.get("rhs", "0"),
                paper_ref=e.get("paper_ref", ""),
                preset=e.get("preset", suite.preset),
                flag=e.get("flag", ""),
                note=e.get("note", ""),
            )
        )
    return suite
