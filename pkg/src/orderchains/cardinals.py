"""Symbolic cardinal chains and weight-set profiles.

A :class:`CardinalChain` is a finite, strictly increasing list of cardinal
names. Two builtins always sit at the bottom: ``fin`` (every finite cardinal,
collapsed into one marker) and ``aleph0``. Adjacent symbols may be flagged as
successors (``l < +l+`` declares ``l+`` to be the successor of ``l``).

Between two adjacent symbols that are *not* flagged as successors there may be
undeclared cardinals. A :class:`WeightSet` keeps track of those regions
explicitly: it is a set of *atoms*, where atom ``2*i`` is the i-th declared
symbol and atom ``2*i + 1`` is the (nonempty, undeclared) region strictly
between symbol ``i`` and symbol ``i + 1``. Pointwise ``max`` with a declared
cardinal maps atoms to atoms, so every operation here stays exact.

The cardinality of the continuum is special: unless the chain declares a
symbol named ``continuum`` it floats, comparable only with ``fin`` and
``aleph0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

FIN = "fin"
ALEPH0 = "aleph0"
CONTINUUM = "continuum"

RESERVED = frozenset({"w", "Z", "Q", "C", "Sum", "dropmin", "dropmax"})

# Atom used for the floating (undeclared) continuum.
FLOAT_C = "c"


class CardinalError(ValueError):
    pass


class ChainMismatchError(CardinalError):
    pass


class SuccessorUnknownError(CardinalError, LookupError):
    pass


class IncomparableCardinalsError(CardinalError):
    """Raised when an answer would depend on how the continuum compares
    with a declared symbol."""


@dataclass(frozen=True)
class CardinalChain:
    symbols: tuple[str, ...]
    successor_flags: tuple[bool, ...] = field(default=())

    def __post_init__(self):
        syms = tuple(self.symbols)
        flags = tuple(self.successor_flags) or (False,) * (len(syms) - 1)
        object.__setattr__(self, "symbols", syms)
        object.__setattr__(self, "successor_flags", flags)
        if len(syms) < 2 or syms[0] != FIN or syms[1] != ALEPH0:
            raise CardinalError("chain must start with fin < aleph0")
        if len(set(syms)) != len(syms):
            raise CardinalError(f"duplicate symbol in chain {syms}")
        if len(flags) != len(syms) - 1:
            raise CardinalError("need one successor flag per adjacent pair")
        if flags[0]:
            raise CardinalError("aleph0 cannot be flagged as a successor of fin")
        for name in syms[2:]:
            if name in RESERVED or name in (FIN, ALEPH0):
                raise CardinalError(f"{name!r} is a reserved name")

    @classmethod
    def parse(cls, text: str) -> "CardinalChain":
        """Parse a declaration such as ``"fin<aleph0<l<+l+<k"``.

        A leading ``+`` marks a symbol as the successor of its left neighbour.
        ``fin`` and ``aleph0`` are prepended when omitted.
        """
        parts = [p.strip() for p in text.split("<")] if text.strip() else []
        if any(not p for p in parts):
            raise CardinalError(f"empty symbol in chain declaration {text!r}")
        if parts[:1] == [FIN]:
            parts = parts[1:]
        if parts[:1] == [ALEPH0]:
            parts = parts[1:]
        names = [FIN, ALEPH0]
        flags = [False]
        for p in parts:
            succ = p.startswith("+")
            name = p[1:] if succ else p
            if not name or name in (FIN, ALEPH0):
                raise CardinalError(f"bad symbol {p!r} in {text!r}")
            names.append(name)
            flags.append(succ)
        return cls(tuple(names), tuple(flags))

    def __str__(self):
        out = [FIN, ALEPH0]
        for name, succ in zip(self.symbols[2:], self.successor_flags[1:]):
            out.append("+" + name if succ else name)
        return "<".join(out)

    def __len__(self):
        return len(self.symbols)

    def card(self, name: str) -> "Card":
        if name == "w":
            name = ALEPH0
        try:
            return Card(self, self.symbols.index(name))
        except ValueError:
            if name == CONTINUUM:
                return Card(self, None)
            raise KeyError(f"unknown cardinal {name!r} in chain {self}") from None

    def __contains__(self, name):
        return name in self.symbols or name == "w"

    @property
    def fin(self) -> "Card":
        return Card(self, 0)

    @property
    def aleph0(self) -> "Card":
        return Card(self, 1)

    @property
    def continuum(self) -> "Card":
        return self.card(CONTINUUM)

    def has_gap_above(self, i: int) -> bool:
        """True when undeclared cardinals may sit strictly between symbol i and i+1."""
        return 0 < i < len(self.symbols) - 1 and not self.successor_flags[i]

    def atoms(self) -> list[int]:
        """The ordered universe of declared atoms (points and gaps)."""
        out = []
        for i in range(len(self.symbols)):
            out.append(2 * i)
            if self.has_gap_above(i):
                out.append(2 * i + 1)
        return out


DEFAULT_CHAIN = CardinalChain((FIN, ALEPH0))


@dataclass(frozen=True)
class Card:
    chain: CardinalChain
    pos: int | None  # None: the floating continuum

    def __post_init__(self):
        if self.pos is not None and not 0 <= self.pos < len(self.chain):
            raise CardinalError(f"invalid chain index {self.pos}")
        # atom index in WeightSet masks, cached since it is read constantly
        object.__setattr__(self, "atom", FLOAT_C if self.pos is None else 2 * self.pos)

    @property
    def name(self) -> str:
        return CONTINUUM if self.pos is None else self.chain.symbols[self.pos]

    @property
    def is_finite(self) -> bool:
        return self.pos == 0

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"Card({self.name})"

    # rich comparisons go through compare_cards so mismatches always raise
    def __lt__(self, other):
        return compare_cards(self, other) < 0

    def __le__(self, other):
        return compare_cards(self, other) <= 0

    def __gt__(self, other):
        return compare_cards(self, other) > 0

    def __ge__(self, other):
        return compare_cards(self, other) >= 0


def _same_chain(a: CardinalChain, b: CardinalChain):
    if a is not b and a != b:
        raise ChainMismatchError(f"cardinals from different chains: {a} vs {b}")


def _cmp_atoms(x, y) -> int:
    if x == y:
        return 0
    if x == FLOAT_C or y == FLOAT_C:
        other = y if x == FLOAT_C else x
        if other > 2:
            raise IncomparableCardinalsError(
                "continuum is not comparable with declared symbols; "
                "declare 'continuum' in the chain to fix its position"
            )
        return 1 if x == FLOAT_C else -1
    return -1 if x < y else 1


def compare_cards(a: Card, b: Card) -> int:
    """Return -1, 0 or 1 according to chain position."""
    _same_chain(a.chain, b.chain)
    return _cmp_atoms(a.atom, b.atom)


def max_card(a: Card, b: Card) -> Card:
    return b if compare_cards(a, b) < 0 else a


def successor_card(a: Card) -> Card:
    ch = a.chain
    if a.pos is not None and a.pos + 1 < len(ch) and ch.successor_flags[a.pos]:
        return Card(ch, a.pos + 1)
    raise SuccessorUnknownError(f"no successor declared for {a.name} in chain {ch}")


def _max_atom(x, y):
    return y if _cmp_atoms(x, y) < 0 else x


class WeightSet:
    """A set of cardinal values over a chain, stored as atoms.

    ``mask`` has bit ``a`` set for each declared atom ``a``; ``floating``
    marks the undeclared continuum. ``below(c)`` is every cardinal strictly
    under ``c``, gaps included. Immutable.
    """

    __slots__ = ("chain", "mask", "floating")

    def __init__(self, chain: CardinalChain, mask: int = 0, floating: bool = False):
        object.__setattr__(self, "chain", chain)
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "floating", floating)

    def __setattr__(self, name, value):
        raise AttributeError("WeightSet is immutable")

    def __eq__(self, other):
        if not isinstance(other, WeightSet):
            return NotImplemented
        return (
            self.mask == other.mask
            and self.floating == other.floating
            and (self.chain is other.chain or self.chain == other.chain)
        )

    def __hash__(self):
        return hash((self.mask, self.floating))

    def __reduce__(self):
        return (WeightSet, (self.chain, self.mask, self.floating))

    @classmethod
    def empty(cls, chain: CardinalChain) -> "WeightSet":
        return cls(chain)

    @classmethod
    def of(cls, *cards: Card) -> "WeightSet":
        if not cards:
            raise ValueError("use WeightSet.empty for the empty set")
        chain = cards[0].chain
        mask, floating = 0, False
        for c in cards:
            _same_chain(chain, c.chain)
            if c.pos is None:
                floating = True
            else:
                mask |= 1 << c.atom
        return cls(chain, mask, floating)

    @classmethod
    def from_atoms(cls, chain: CardinalChain, atoms: Iterable) -> "WeightSet":
        mask, floating = 0, False
        for a in atoms:
            if a == FLOAT_C:
                floating = True
            else:
                mask |= 1 << a
        return cls(chain, mask, floating)

    @classmethod
    def below(cls, c: Card) -> "WeightSet":
        if c.pos is None:
            raise IncomparableCardinalsError("below(continuum) needs continuum declared in the chain")
        return cls(c.chain, _atom_mask(c.chain) & ((1 << c.atom) - 1))

    @property
    def atoms(self) -> frozenset:
        out = {a for a in range(self.mask.bit_length()) if self.mask >> a & 1}
        if self.floating:
            out.add(FLOAT_C)
        return frozenset(out)

    def __bool__(self):
        return bool(self.mask) or self.floating

    def __len__(self):
        return bin(self.mask).count("1") + self.floating

    def __contains__(self, c: Card):
        _same_chain(self.chain, c.chain)
        return self.floating if c.pos is None else bool(self.mask >> c.atom & 1)

    def __or__(self, other):
        return ws_join(self, other)

    def cards(self) -> list[Card]:
        """Declared points of the set, ascending."""
        out = [Card(self.chain, a // 2) for a in sorted(self.atoms - {FLOAT_C}) if a % 2 == 0]
        if self.floating:
            out.append(Card(self.chain, None))
        return out

    def _runs(self) -> list[list[int]]:
        runs, run = [], []
        for a in self.chain.atoms():
            if self.mask >> a & 1:
                run.append(a)
            elif run:
                runs.append(run)
                run = []
        if run:
            runs.append(run)
        return runs

    @property
    def exact(self) -> frozenset:
        """Declared points that are not part of a range (runs touching a gap)."""
        pts = {a for run in self._runs() if not any(x % 2 for x in run) for a in run}
        out = {Card(self.chain, a // 2) for a in pts}
        if self.floating:
            out.add(Card(self.chain, None))
        return frozenset(out)

    @property
    def below_bound(self) -> Card | None:
        """``c`` when the set contains a range of the form ``[fin, c)``."""
        for run in self._runs():
            if run[0] == 0 and run[-1] % 2:
                return Card(self.chain, (run[-1] + 1) // 2)
        return None

    def max(self) -> Card:
        """Supremum of the set when it is attained by a declared point."""
        if not self:
            raise ValueError("empty weight set")
        top = None
        for a in self.atoms:
            top = a if top is None else _max_atom(top, a)
        if top != FLOAT_C and top % 2:
            raise ValueError("supremum falls in an undeclared region")
        return Card(self.chain, None if top == FLOAT_C else top // 2)

    def is_singleton(self, c: Card) -> bool:
        _same_chain(self.chain, c.chain)
        if c.pos is None:
            return self.floating and not self.mask
        return not self.floating and self.mask == 1 << c.atom

    def __str__(self):
        sym = self.chain.symbols
        pieces = []
        for run in self._runs():
            if not any(x % 2 for x in run):
                pieces.extend(sym[x // 2] for x in run)
                continue
            lo = ("(" if run[0] % 2 else "[") + sym[run[0] // 2]
            hi = sym[(run[-1] + 1) // 2] + ")" if run[-1] % 2 else sym[run[-1] // 2] + "]"
            pieces.append(f"{lo}, {hi}")
        if self.floating:
            pieces.append(CONTINUUM)
        return "{" + ", ".join(pieces) + "}"

    def __repr__(self):
        return f"WeightSet({self})"

    def to_json(self):
        return str(self)


@lru_cache(maxsize=None)
def _atom_mask(chain: CardinalChain) -> int:
    return sum(1 << a for a in chain.atoms())


def _ws(chain, mask, floating) -> WeightSet:
    w = object.__new__(WeightSet)
    _set(w, "chain", chain)
    _set(w, "mask", mask)
    _set(w, "floating", floating)
    return w


_set = object.__setattr__


def ws_join(u: WeightSet, v: WeightSet) -> WeightSet:
    _same_chain(u.chain, v.chain)
    mask, floating = u.mask | v.mask, u.floating or v.floating
    if mask == u.mask and floating == u.floating:
        return u
    if mask == v.mask and floating == v.floating:
        return v
    return _ws(u.chain, mask, floating)


def ws_join_all(chain: CardinalChain, sets: Iterable[WeightSet]) -> WeightSet:
    out = WeightSet.empty(chain)
    for s in sets:
        out = ws_join(out, s)
    return out


def ws_lift_max(c: Card, v: WeightSet) -> WeightSet:
    """Pointwise ``max(c, x)`` over ``v``."""
    _same_chain(c.chain, v.chain)
    if c.pos is None:
        if v.mask >> 3:
            _cmp_atoms(FLOAT_C, v.mask.bit_length() - 1)  # raises
        return WeightSet(v.chain, 0, bool(v))
    k = c.atom
    if v.floating and k > 2:
        _cmp_atoms(FLOAT_C, k)  # raises
    low = (1 << k) - 1
    if not v.mask & low:
        return v
    return _ws(v.chain, (v.mask & ~low) | 1 << k, v.floating)


def ws_drop_fin(v: WeightSet) -> WeightSet:
    return WeightSet(v.chain, v.mask & ~1, v.floating)
