"""Words in a and b, and a small grammar for writing them down.

Grammar (whitespace and ``*`` between factors are ignored)::

    word    := factor*  |  "1"
    factor  := atom ("^" INT)?
    atom    := "a" | "b" | "(" word ")" | "[" word ("," word)+ "]"

``[u, v, w]`` is left-normed, ``[[u, v], w]``, and ``[u, v] = u^-1 v^-1 u v``.
Exponents are arbitrary integers, e.g. ``a^9 [a,b]^-3`` or ``b^125 [a,b]^-25``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import hall
from .hall import NfElement

__all__ = ["Comm", "Sub", "Word", "WordSyntaxError", "parse_word", "format_word", "from_word"]


@dataclass(frozen=True)
class Comm:
    left: "Word"
    right: "Word"


@dataclass(frozen=True)
class Sub:
    """A parenthesised subword, so that ``(w)^n`` keeps its exponent."""

    word: "Word"


Term = tuple[Union[str, Comm, Sub], int]
Word = tuple[Term, ...]


class WordSyntaxError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(-?\d+)|([ab])|(\^)|([\[\](),*]))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise WordSyntaxError(f"unexpected character {text[pos]!r} at {pos} in {text!r}")
        tok = next(g for g in m.groups() if g is not None)
        if tok != "*":
            tokens.append(tok)
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            want = expected or "a token"
            raise WordSyntaxError(f"expected {want}, got {tok!r} in {self.text!r}")
        self.i += 1
        return tok

    def word(self) -> Word:
        terms = []
        while self.peek() in ("a", "b", "(", "["):
            terms.extend(self.factor())
        return tuple(terms)

    def factor(self) -> list[Term]:
        tok = self.take()
        if tok in ("a", "b"):
            atom: Union[str, Comm, Word] = tok
        elif tok == "(":
            atom = self.word()
            self.take(")")
        else:
            parts = [self.word()]
            while self.peek() == ",":
                self.take(",")
                parts.append(self.word())
            self.take("]")
            if len(parts) < 2:
                raise WordSyntaxError(f"commutator needs at least two entries in {self.text!r}")
            atom = Comm(parts[0], parts[1])
            for extra in parts[2:]:
                atom = Comm(((atom, 1),), extra)
        exp = 1
        if self.peek() == "^":
            self.take("^")
            tok = self.take()
            if not re.fullmatch(r"-?\d+", tok):
                raise WordSyntaxError(f"bad exponent {tok!r} in {self.text!r}")
            exp = int(tok)
        if exp == 0:
            return []
        if isinstance(atom, tuple):
            atom = Sub(atom)
        return [(atom, exp)]


def parse_word(text: str) -> Word:
    """Parse the relator grammar into a Word."""
    if text.strip() == "1":
        return ()
    p = _Parser(text)
    w = p.word()
    if p.peek() is not None:
        raise WordSyntaxError(f"trailing input {p.peek()!r} in {text!r}")
    return w


def _comm_entries(c: Comm) -> list[str]:
    # [[u,v],w] prints as [u,v,w]
    left = c.left
    if len(left) == 1 and isinstance(left[0][0], Comm) and left[0][1] == 1:
        head = _comm_entries(left[0][0])
    else:
        head = [format_word(left)]
    return head + [format_word(c.right)]


def format_word(w: Word) -> str:
    parts = []
    for atom, e in w:
        if isinstance(atom, Comm):
            base = "[" + ",".join(_comm_entries(atom)) + "]"
        elif isinstance(atom, Sub):
            base = f"({format_word(atom.word)})"
        else:
            base = atom
        parts.append(base if e == 1 else f"{base}^{e}")
    return " ".join(parts) if parts else "1"


def _eval_atom(atom) -> NfElement:
    if atom == "a":
        return hall.A
    if atom == "b":
        return hall.B
    if isinstance(atom, Sub):
        return from_word(atom.word)
    return hall.comm(from_word(atom.left), from_word(atom.right))


def from_word(w: Union[Word, str]) -> NfElement:
    """Normal form of a word in F/gamma_5(F)."""
    if isinstance(w, str):
        w = parse_word(w)
    return hall.product(hall.pow(_eval_atom(atom), e) for atom, e in w)
