"""Order-type terms: AST, parser and renderer.

Grammar::

    term   := item { "+" item }
    item   := factor [ "*" ]
    factor := NAT | "w" | "Z" | "Q" | "C" | IDENT
            | "(" term ")" | "Sum[" term ";" term "]"
            | "dropmin(" term ")" | "dropmax(" term ")"

``NAT`` is a finite order, ``w`` is omega, ``Z`` the integers, ``Q`` the
rationals, ``C`` the Cantor ternary set and an identifier names a cardinal of
the declared chain, read as the initial ordinal of that cardinality. Postfix
``*`` is order reversal; ``Sum[I; T]`` is the sum of copies of ``T`` indexed
by ``I``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .cardinals import (
    DEFAULT_CHAIN,
    Card,
    CardinalChain,
    ChainMismatchError,
    max_card,
)


class Term:
    """Base class for order-type terms. Subclasses are frozen dataclasses."""

    def __add__(self, other):
        return Sum(self, other)

    @property
    def star(self):
        return Reverse(self)

    def __str__(self):
        return render(self)


@dataclass(frozen=True, repr=False)
class Fin(Term):
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("Fin(n) needs n >= 0")

    def __repr__(self):
        return f"Fin({self.n})"


@dataclass(frozen=True, repr=False)
class Omega(Term):
    def __repr__(self):
        return "Omega()"


@dataclass(frozen=True, repr=False)
class Zset(Term):
    def __repr__(self):
        return "Zset()"


@dataclass(frozen=True, repr=False)
class Q(Term):
    def __repr__(self):
        return "Q()"


@dataclass(frozen=True, repr=False)
class Cantor(Term):
    def __repr__(self):
        return "Cantor()"


@dataclass(frozen=True, repr=False)
class CardSym(Term):
    card: Card

    def __repr__(self):
        return f"CardSym({self.card.name})"


@dataclass(frozen=True, repr=False)
class Sum(Term):
    left: Term
    right: Term

    def __repr__(self):
        return f"Sum({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class Reverse(Term):
    term: Term

    def __repr__(self):
        return f"Reverse({self.term!r})"


@dataclass(frozen=True, repr=False)
class SumOver(Term):
    index: Term
    summand: Term

    def __repr__(self):
        return f"SumOver({self.index!r}, {self.summand!r})"


@dataclass(frozen=True, repr=False)
class DropMin(Term):
    term: Term

    def __repr__(self):
        return f"DropMin({self.term!r})"


@dataclass(frozen=True, repr=False)
class DropMax(Term):
    term: Term

    def __repr__(self):
        return f"DropMax({self.term!r})"


def _memo_hash(cls):
    # terms are immutable and used as cache keys at every level of a
    # recursion, so the hash is computed once per node; the class name is
    # mixed in because field-less atoms would otherwise all hash alike
    structural = cls.__hash__
    tag = cls.__name__

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((tag, structural(self)))
            object.__setattr__(self, "_hash", h)
        return h

    cls.__hash__ = __hash__


for _cls in (Fin, Omega, Zset, Q, Cantor, CardSym, Sum, Reverse, SumOver, DropMin, DropMax):
    _memo_hash(_cls)

ATOMS = (Fin, Omega, Zset, Q, Cantor, CardSym)


def children(t: Term) -> tuple[Term, ...]:
    if isinstance(t, Sum):
        return (t.left, t.right)
    if isinstance(t, SumOver):
        return (t.index, t.summand)
    if isinstance(t, (Reverse, DropMin, DropMax)):
        return (t.term,)
    return ()


def depth(t: Term) -> int:
    return 1 + max((depth(c) for c in children(t)), default=0)


# --------------------------------------------------------------------------
# parsing

class ParseError(ValueError):
    def __init__(self, position: int, expected: str, text: str = ""):
        self.position = position
        self.expected = expected
        self.text = text
        super().__init__(f"at position {position}: expected {expected}")


class UnknownIdentifierError(ParseError):
    def __init__(self, position: int, name: str, text: str = ""):
        self.name = name
        ValueError.__init__(self, f"at position {position}: unknown identifier {name!r}")
        self.position = position
        self.expected = "declared cardinal"
        self.text = text


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NAT = re.compile(r"[0-9]+")
_FOLLOW = set(")];+*")


@dataclass
class _Tok:
    kind: str  # NAT IDENT or the punctuation character, EOF
    value: object
    pos: int


def _tokenize(text: str, chain: CardinalChain) -> list[_Tok]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "()[];+*":
            toks.append(_Tok(ch, ch, i))
            i += 1
            continue
        m = _NAT.match(text, i)
        if m:
            toks.append(_Tok("NAT", int(m.group()), i))
            i = m.end()
            continue
        m = _IDENT.match(text, i)
        if not m:
            raise ParseError(i, "a term", text)
        name, j = m.group(), m.end()
        # cardinal names may end in '+' (e.g. "l+"); absorb the pluses only
        # when the longer name is declared and a factor cannot follow
        k = j
        while k < n and text[k] == "+":
            k += 1
        for cut in range(k, j, -1):
            cand = name + "+" * (cut - j)
            rest = text[cut:].lstrip()
            if cand in chain.symbols and (not rest or rest[0] in _FOLLOW):
                name, j = cand, cut
                break
        toks.append(_Tok("IDENT", name, i))
        i = j
    toks.append(_Tok("EOF", None, n))
    return toks


class _Parser:
    def __init__(self, text: str, chain: CardinalChain):
        self.text = text
        self.chain = chain
        self.toks = _tokenize(text, chain)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def expect(self, kind: str, what: str | None = None) -> _Tok:
        if self.tok.kind != kind:
            raise ParseError(self.tok.pos, what or repr(kind), self.text)
        t = self.tok
        self.i += 1
        return t

    def parse(self) -> Term:
        t = self.term()
        self.expect("EOF", "end of input")
        return t

    def term(self) -> Term:
        t = self.item()
        while self.tok.kind == "+":
            self.i += 1
            t = Sum(t, self.item())
        return t

    def item(self) -> Term:
        f = self.factor()
        if self.tok.kind == "*":
            self.i += 1
            return Reverse(f)
        return f

    def factor(self) -> Term:
        tok = self.tok
        if tok.kind == "NAT":
            self.i += 1
            return Fin(tok.value)
        if tok.kind == "(":
            self.i += 1
            t = self.term()
            self.expect(")")
            return t
        if tok.kind != "IDENT":
            raise ParseError(tok.pos, "a term", self.text)
        self.i += 1
        name = tok.value
        if name == "w":
            return Omega()
        if name == "Z":
            return Zset()
        if name == "Q":
            return Q()
        if name == "C":
            return Cantor()
        if name == "Sum" and self.tok.kind == "[":
            self.i += 1
            index = self.term()
            self.expect(";")
            summand = self.term()
            self.expect("]")
            return SumOver(index, summand)
        if name in ("dropmin", "dropmax") and self.tok.kind == "(":
            self.i += 1
            inner = self.term()
            self.expect(")")
            return DropMin(inner) if name == "dropmin" else DropMax(inner)
        if name in self.chain.symbols[2:]:
            return CardSym(self.chain.card(name))
        raise UnknownIdentifierError(tok.pos, name, self.text)


def parse(text: str, chain: CardinalChain | None = None) -> Term:
    """Parse ``text`` into a term; identifiers resolve against ``chain``."""
    return _Parser(text, chain or DEFAULT_CHAIN).parse()


# --------------------------------------------------------------------------
# rendering

def render(t: Term) -> str:
    if isinstance(t, Sum):
        right = render_item(t.right)
        if isinstance(t.right, Sum):
            right = f"({right})"
        return f"{render(t.left)} + {right}"
    return render_item(t)


def render_item(t: Term) -> str:
    if isinstance(t, Reverse):
        inner = _render_factor(t.term)
        if isinstance(t.term, (Sum, Reverse)):
            inner = f"({render(t.term)})"
        return inner + "*"
    return _render_factor(t)


def _render_factor(t: Term) -> str:
    if isinstance(t, Fin):
        return str(t.n)
    if isinstance(t, Omega):
        return "w"
    if isinstance(t, Zset):
        return "Z"
    if isinstance(t, Q):
        return "Q"
    if isinstance(t, Cantor):
        return "C"
    if isinstance(t, CardSym):
        return t.card.name
    if isinstance(t, SumOver):
        return f"Sum[{render(t.index)}; {render(t.summand)}]"
    if isinstance(t, DropMin):
        return f"dropmin({render(t.term)})"
    if isinstance(t, DropMax):
        return f"dropmax({render(t.term)})"
    if isinstance(t, (Sum, Reverse)):
        return f"({render(t)})"
    raise TypeError(f"not a term: {t!r}")


# --------------------------------------------------------------------------
# structural helpers

def term_chain(t: Term, chain: CardinalChain | None = None) -> CardinalChain:
    """The cardinal chain a term lives over.

    Every ``CardSym`` must come from the same chain (and agree with ``chain``
    when one is given); terms without cardinal symbols use ``chain`` or the
    default ``fin<aleph0`` chain.
    """
    found = _symbol_chain(t)
    if found is None:
        return chain or DEFAULT_CHAIN
    if chain is not None and chain != found:
        raise ChainMismatchError(f"term is over {found}, not {chain}")
    return found


@lru_cache(maxsize=1 << 16)
def _symbol_chain(t: Term) -> CardinalChain | None:
    if isinstance(t, CardSym):
        return t.card.chain
    found = None
    for c in children(t):
        x = _symbol_chain(c)
        if x is None:
            continue
        if found is not None and x != found:
            raise ChainMismatchError(f"term mixes chains {found} and {x}")
        found = x
    return found


def is_empty(t: Term) -> bool:
    return normalize(t) == Fin(0)


@lru_cache(maxsize=1 << 16)
def normalize(t: Term) -> Term:
    """Remove empty orders: empty sides of sums vanish, empty index or summand
    makes a ``SumOver`` empty. ``Drop`` nodes are kept."""
    if isinstance(t, Sum):
        a, b = normalize(t.left), normalize(t.right)
        if a == Fin(0):
            return b
        if b == Fin(0):
            return a
        return Sum(a, b)
    if isinstance(t, Reverse):
        a = normalize(t.term)
        return a if a == Fin(0) else Reverse(a)
    if isinstance(t, SumOver):
        i, s = normalize(t.index), normalize(t.summand)
        if i == Fin(0) or s == Fin(0):
            return Fin(0)
        return SumOver(i, s)
    if isinstance(t, (DropMin, DropMax)):
        return type(t)(normalize(t.term))
    return t


def desugar_z(t: Term) -> Term:
    """Replace every ``Z`` atom by the isomorphic ``w* + w``."""
    if isinstance(t, Zset):
        return Sum(Reverse(Omega()), Omega())
    if isinstance(t, Sum):
        return Sum(desugar_z(t.left), desugar_z(t.right))
    if isinstance(t, SumOver):
        return SumOver(desugar_z(t.index), desugar_z(t.summand))
    if isinstance(t, (Reverse, DropMin, DropMax)):
        return type(t)(desugar_z(t.term))
    return t


class NoEndpointError(ValueError):
    pass


@lru_cache(maxsize=1 << 16)
def drop_free(t: Term) -> Term:
    """An isomorphic term with no ``DropMin``/``DropMax`` nodes and no empty parts.

    Removing the minimum is pushed down the structure; at the atoms
    ``C minus {0}`` is the sum of copies of ``C`` indexed by ``w*`` (the pieces
    ``C`` meets in ``[2/3^(k+1), 1/3^k]``), and dually for the maximum.
    """
    t = normalize(t)
    if isinstance(t, Sum):
        return Sum(drop_free(t.left), drop_free(t.right))
    if isinstance(t, Reverse):
        return Reverse(drop_free(t.term))
    if isinstance(t, SumOver):
        return SumOver(drop_free(t.index), drop_free(t.summand))
    if isinstance(t, DropMin):
        return _drop_min(drop_free(t.term))
    if isinstance(t, DropMax):
        return _drop_max(drop_free(t.term))
    return t


def _sum(a: Term, b: Term) -> Term:
    if a == Fin(0):
        return b
    if b == Fin(0):
        return a
    return Sum(a, b)


def _drop_min(t: Term) -> Term:
    if isinstance(t, Fin):
        if t.n == 0:
            raise NoEndpointError("the empty order has no minimum")
        return Fin(t.n - 1)
    if isinstance(t, (Omega, CardSym)):
        return t
    if isinstance(t, Cantor):
        return SumOver(Reverse(Omega()), Cantor())
    if isinstance(t, Sum):
        return _sum(_drop_min(t.left), t.right)
    if isinstance(t, Reverse):
        return normalize(Reverse(_drop_max(t.term)))
    if isinstance(t, SumOver):
        first = _drop_min(t.summand)
        rest = _drop_min(t.index)
        return _sum(first, normalize(SumOver(rest, t.summand)))
    raise NoEndpointError(f"{render(t)} has no minimum")


def _drop_max(t: Term) -> Term:
    if isinstance(t, Fin):
        if t.n == 0:
            raise NoEndpointError("the empty order has no maximum")
        return Fin(t.n - 1)
    if isinstance(t, Cantor):
        return SumOver(Omega(), Cantor())
    if isinstance(t, Sum):
        return _sum(t.left, _drop_max(t.right))
    if isinstance(t, Reverse):
        return normalize(Reverse(_drop_min(t.term)))
    if isinstance(t, SumOver):
        last = _drop_max(t.summand)
        rest = _drop_max(t.index)
        return _sum(normalize(SumOver(rest, t.summand)), last)
    raise NoEndpointError(f"{render(t)} has no maximum")


def realizable(t: Term) -> bool:
    """True when the term has no cardinal symbols, so its points have finite codes."""
    if isinstance(t, CardSym):
        return False
    return all(realizable(c) for c in children(t))


def card_of(t: Term, chain: CardinalChain | None = None) -> Card:
    """Symbolic cardinality of the order. Raises
    :class:`~orderchains.cardinals.IncomparableCardinalsError` when the answer
    depends on an undeclared continuum."""
    chain = term_chain(t, chain)
    return _card(normalize(t), chain)


def _card(t: Term, chain: CardinalChain) -> Card:
    if isinstance(t, Fin):
        return chain.fin
    if isinstance(t, (Omega, Zset, Q)):
        return chain.aleph0
    if isinstance(t, Cantor):
        return chain.continuum
    if isinstance(t, CardSym):
        return t.card
    if isinstance(t, (Sum, SumOver)):
        a, b = children(t)
        return max_card(_card(a, chain), _card(b, chain))
    return _card(t.term, chain)
