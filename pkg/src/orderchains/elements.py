"""Finite codes for the points of realizable terms, and the order on them.

Codes per constructor:

* ``Fin``/``w``: ``Nat(k)``; ``Z``: ``Int(k)``; ``Q``: ``Rat(fraction)``
* ``C``: ``CantorPt(word, tail)`` for the 0/1 sequence ``word + tail*inf``,
  i.e. the point ``sum 2*bit_i / 3**(i+1)``. Canonical codes never end the
  word with the tail bit, so each eventually-constant sequence has one code.
* ``A + B``: ``L(code)`` or ``R(code)``; ``Sum[I; T]``: ``Pair(i, s)``
* reversal and ``dropmin``/``dropmax`` reuse the operand's codes.

Only eventually-constant points of ``C`` are codable. They include every
endpoint of a removed middle third, which is all the chain construction needs.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from math import gcd
from typing import Callable, Iterable, Iterator

from .terms import (
    Cantor,
    CardSym,
    DropMax,
    DropMin,
    Fin,
    Omega,
    Q,
    Reverse,
    Sum,
    SumOver,
    Term,
    Zset,
    children,
    normalize,
    render,
)


class InvalidCodeError(ValueError):
    pass


class NotRealizableError(ValueError):
    pass


@dataclass(frozen=True)
class Nat:
    k: int


@dataclass(frozen=True)
class Int:
    k: int


@dataclass(frozen=True)
class Rat:
    value: Fraction


@dataclass(frozen=True)
class CantorPt:
    word: str
    tail: int

    def bit(self, i: int) -> int:
        return int(self.word[i]) if i < len(self.word) else self.tail


@dataclass(frozen=True)
class L:
    code: object

    def __hash__(self):
        # keep L(x) and R(x) apart in the index tables
        return hash(("L", self.code))


@dataclass(frozen=True)
class R:
    code: object

    def __hash__(self):
        return hash(("R", self.code))


@dataclass(frozen=True)
class Pair:
    index: object
    summand: object


# --------------------------------------------------------------------------
# validity and comparison

def is_valid_code(t: Term, a) -> bool:
    """Structural validation; never raises."""
    try:
        return _valid(t, a)
    except (NotRealizableError, ValueError):
        return False


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _valid(t: Term, a) -> bool:
    if isinstance(t, Fin):
        return isinstance(a, Nat) and _is_int(a.k) and 0 <= a.k < t.n
    if isinstance(t, Omega):
        return isinstance(a, Nat) and _is_int(a.k) and a.k >= 0
    if isinstance(t, Zset):
        return isinstance(a, Int) and _is_int(a.k)
    if isinstance(t, Q):
        return isinstance(a, Rat) and isinstance(a.value, Fraction)
    if isinstance(t, Cantor):
        return (
            isinstance(a, CantorPt)
            and a.tail in (0, 1)
            and _is_int(a.tail)
            and set(a.word) <= {"0", "1"}
            and not a.word.endswith(str(a.tail))
        )
    if isinstance(t, Sum):
        if isinstance(a, L):
            return _valid(t.left, a.code)
        return isinstance(a, R) and _valid(t.right, a.code)
    if isinstance(t, Reverse):
        return _valid(t.term, a)
    if isinstance(t, SumOver):
        return isinstance(a, Pair) and _valid(t.index, a.index) and _valid(t.summand, a.summand)
    if isinstance(t, DropMin):
        return _valid(t.term, a) and a != min_code(t.term)
    if isinstance(t, DropMax):
        return _valid(t.term, a) and a != max_code(t.term)
    return False


def compare(t: Term, a, b) -> int:
    """Return -1, 0 or 1 comparing points ``a`` and ``b`` of ``t``."""
    _check_realizable(t)
    for x in (a, b):
        if not _valid(t, x):
            raise InvalidCodeError(f"{x!r} is not a point of {render(t)}")
    return _cmp(t, a, b)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _cmp(t: Term, a, b) -> int:
    if isinstance(t, (Fin, Omega, Zset)):
        return _sign(a.k - b.k)
    if isinstance(t, Q):
        return _sign(a.value - b.value)
    if isinstance(t, Cantor):
        n = max(len(a.word), len(b.word)) + 1
        for i in range(n):
            x, y = a.bit(i), b.bit(i)
            if x != y:
                return -1 if x < y else 1
        return 0
    if isinstance(t, Sum):
        if isinstance(a, L) and isinstance(b, L):
            return _cmp(t.left, a.code, b.code)
        if isinstance(a, R) and isinstance(b, R):
            return _cmp(t.right, a.code, b.code)
        return -1 if isinstance(a, L) else 1
    if isinstance(t, Reverse):
        return -_cmp(t.term, a, b)
    if isinstance(t, SumOver):
        c = _cmp(t.index, a.index, b.index)
        return c if c else _cmp(t.summand, a.summand, b.summand)
    if isinstance(t, (DropMin, DropMax)):
        return _cmp(t.term, a, b)
    raise NotRealizableError(f"{render(t)} has no finite codes")


def cmp_key(t: Term):
    """A ``functools.cmp_to_key`` key for sorting codes of ``t``."""
    return cmp_to_key(lambda a, b: _cmp(t, a, b))


def _check_realizable(t: Term):
    if isinstance(t, CardSym):
        raise NotRealizableError(f"cardinal {t.card.name} has no finite codes")
    for c in children(t):
        _check_realizable(c)


# --------------------------------------------------------------------------
# endpoints, predecessors, successors

@lru_cache(maxsize=None)
def _empty(t: Term) -> bool:
    return normalize(t) == Fin(0)


@lru_cache(maxsize=None)
def min_code(t: Term):
    """Code of the minimum, or None when there is none."""
    if isinstance(t, Fin):
        return Nat(0) if t.n else None
    if isinstance(t, Omega):
        return Nat(0)
    if isinstance(t, (Zset, Q)):
        return None
    if isinstance(t, Cantor):
        return CantorPt("", 0)
    if isinstance(t, Sum):
        if not _empty(t.left):
            m = min_code(t.left)
            return None if m is None else L(m)
        m = min_code(t.right)
        return None if m is None else R(m)
    if isinstance(t, Reverse):
        return max_code(t.term)
    if isinstance(t, SumOver):
        if _empty(t):
            return None
        i, s = min_code(t.index), min_code(t.summand)
        return None if i is None or s is None else Pair(i, s)
    if isinstance(t, DropMin):
        m = min_code(t.term)
        return None if m is None else succ(t.term, m)
    if isinstance(t, DropMax):
        m, top = min_code(t.term), max_code(t.term)
        return None if m == top else m
    raise NotRealizableError(f"{render(t)} has no finite codes")


@lru_cache(maxsize=None)
def max_code(t: Term):
    if isinstance(t, Fin):
        return Nat(t.n - 1) if t.n else None
    if isinstance(t, (Omega, Zset, Q)):
        return None
    if isinstance(t, Cantor):
        return CantorPt("", 1)
    if isinstance(t, Sum):
        if not _empty(t.right):
            m = max_code(t.right)
            return None if m is None else R(m)
        m = max_code(t.left)
        return None if m is None else L(m)
    if isinstance(t, Reverse):
        return min_code(t.term)
    if isinstance(t, SumOver):
        if _empty(t):
            return None
        i, s = max_code(t.index), max_code(t.summand)
        return None if i is None or s is None else Pair(i, s)
    if isinstance(t, DropMax):
        m = max_code(t.term)
        return None if m is None else pred(t.term, m)
    if isinstance(t, DropMin):
        m, bottom = max_code(t.term), min_code(t.term)
        return None if m == bottom else m
    raise NotRealizableError(f"{render(t)} has no finite codes")


def pred(t: Term, x):
    """Immediate predecessor of ``x`` in ``t``, or None."""
    if isinstance(t, (Fin, Omega)):
        return Nat(x.k - 1) if x.k > 0 else None
    if isinstance(t, Zset):
        return Int(x.k - 1)
    if isinstance(t, Q):
        return None
    if isinstance(t, Cantor):
        if x.tail == 0 and x.word.endswith("1"):
            return CantorPt(x.word[:-1] + "0", 1)
        return None
    if isinstance(t, Sum):
        if isinstance(x, L):
            p = pred(t.left, x.code)
            return None if p is None else L(p)
        p = pred(t.right, x.code)
        if p is not None:
            return R(p)
        if x.code == min_code(t.right) and not _empty(t.left):
            m = max_code(t.left)
            return None if m is None else L(m)
        return None
    if isinstance(t, Reverse):
        return succ(t.term, x)
    if isinstance(t, SumOver):
        p = pred(t.summand, x.summand)
        if p is not None:
            return Pair(x.index, p)
        if x.summand == min_code(t.summand):
            j, top = pred(t.index, x.index), max_code(t.summand)
            if j is not None and top is not None:
                return Pair(j, top)
        return None
    if isinstance(t, DropMin):
        p = pred(t.term, x)
        return None if p == min_code(t.term) else p
    if isinstance(t, DropMax):
        return pred(t.term, x)
    raise NotRealizableError(f"{render(t)} has no finite codes")


def succ(t: Term, x):
    """Immediate successor of ``x`` in ``t``, or None."""
    if isinstance(t, Fin):
        return Nat(x.k + 1) if x.k + 1 < t.n else None
    if isinstance(t, Omega):
        return Nat(x.k + 1)
    if isinstance(t, Zset):
        return Int(x.k + 1)
    if isinstance(t, Q):
        return None
    if isinstance(t, Cantor):
        if x.tail == 1 and x.word.endswith("0"):
            return CantorPt(x.word[:-1] + "1", 0)
        return None
    if isinstance(t, Sum):
        if isinstance(x, R):
            s = succ(t.right, x.code)
            return None if s is None else R(s)
        s = succ(t.left, x.code)
        if s is not None:
            return L(s)
        if x.code == max_code(t.left) and not _empty(t.right):
            m = min_code(t.right)
            return None if m is None else R(m)
        return None
    if isinstance(t, Reverse):
        return pred(t.term, x)
    if isinstance(t, SumOver):
        s = succ(t.summand, x.summand)
        if s is not None:
            return Pair(x.index, s)
        if x.summand == max_code(t.summand):
            j, bottom = succ(t.index, x.index), min_code(t.summand)
            if j is not None and bottom is not None:
                return Pair(j, bottom)
        return None
    if isinstance(t, DropMin):
        return succ(t.term, x)
    if isinstance(t, DropMax):
        s = succ(t.term, x)
        return None if s == max_code(t.term) else s
    raise NotRealizableError(f"{render(t)} has no finite codes")


# --------------------------------------------------------------------------
# lazy enumerations

class LazySeq:
    """Memoized view of an iterator; ``get(i)`` returns None past the end.

    Guarded by a lock so concurrent readers see one consistent prefix.
    """

    def __init__(self, it: Iterable):
        self._it = iter(it)
        self._items: list = []
        self._done = False
        self._lock = threading.Lock()

    def get(self, i: int):
        with self._lock:
            while len(self._items) <= i and not self._done:
                try:
                    self._items.append(next(self._it))
                except StopIteration:
                    self._done = True
            return self._items[i] if i < len(self._items) else None

    def prefix(self, n: int) -> list:
        self.get(n - 1)
        return self._items[:n]

    @property
    def exhausted(self) -> bool:
        return self._done

    def __len__(self):
        # only meaningful once exhausted
        return len(self._items)

    def __iter__(self):
        i = 0
        while True:
            x = self.get(i)
            if x is None:
                return
            yield x
            i += 1


def interleave(*streams: Iterable) -> Iterator:
    """Round-robin merge, skipping streams once they run dry."""
    its = [iter(s) for s in streams]
    while its:
        alive = []
        for it in its:
            try:
                yield next(it)
            except StopIteration:
                continue
            alive.append(it)
        its = alive


def dovetail(xs: Iterable, ys: Iterable, pair: Callable = lambda x, y: (x, y)) -> Iterator:
    """Enumerate the product along anti-diagonals; fair for infinite factors."""
    a, b = LazySeq(xs), LazySeq(ys)
    if a.get(0) is None or b.get(0) is None:
        return
    s = 0
    while True:
        for i in range(s + 1):
            x = a.get(i)
            if x is None:
                continue
            y = b.get(s - i)
            if y is None:
                continue
            yield pair(x, y)
        if a.exhausted and b.exhausted and s >= len(a) + len(b) - 2:
            return
        s += 1


def rationals() -> Iterator[Fraction]:
    """Every rational once, by increasing height max(|p|, q)."""
    yield Fraction(0)
    h = 1
    while True:
        seen = []
        for q in range(1, h + 1):
            for p in range(-h, h + 1):
                if p and max(abs(p), q) == h and gcd(p, q) == 1:
                    seen.append(Fraction(p, q))
        yield from sorted(seen)
        h += 1


def integers() -> Iterator[int]:
    yield 0
    for k in itertools.count(1):
        yield k
        yield -k


def cantor_codes(max_len: int | None = None) -> Iterator[CantorPt]:
    """Canonical Cantor codes by word length."""
    lengths = itertools.count() if max_len is None else range(max_len + 1)
    for n in lengths:
        for bits in itertools.product("01", repeat=n):
            w = "".join(bits)
            for tail in (0, 1):
                if not w.endswith(str(tail)):
                    yield CantorPt(w, tail)


def elements(t: Term) -> Iterator:
    """Fair structural enumeration of all codable points of ``t``."""
    if isinstance(t, Fin):
        return (Nat(k) for k in range(t.n))
    if isinstance(t, Omega):
        return (Nat(k) for k in itertools.count())
    if isinstance(t, Zset):
        return (Int(k) for k in integers())
    if isinstance(t, Q):
        return (Rat(x) for x in rationals())
    if isinstance(t, Cantor):
        return cantor_codes()
    if isinstance(t, Sum):
        return interleave((L(x) for x in elements(t.left)), (R(x) for x in elements(t.right)))
    if isinstance(t, Reverse):
        return elements(t.term)
    if isinstance(t, SumOver):
        return dovetail(elements(t.index), elements(t.summand), Pair)
    if isinstance(t, DropMin):
        m = min_code(t.term)
        return (x for x in elements(t.term) if x != m)
    if isinstance(t, DropMax):
        m = max_code(t.term)
        return (x for x in elements(t.term) if x != m)
    raise NotRealizableError(f"{render(t)} has no finite codes")


def jump_rights(t: Term) -> Iterator:
    """Points with an immediate predecessor, in structural order."""
    if isinstance(t, Fin):
        return (Nat(k) for k in range(1, t.n))
    if isinstance(t, Omega):
        return (Nat(k) for k in itertools.count(1))
    if isinstance(t, Zset):
        return (Int(k) for k in integers())
    if isinstance(t, Q):
        return iter(())
    if isinstance(t, Cantor):
        return (c for c in cantor_codes() if c.tail == 0 and c.word.endswith("1"))
    if isinstance(t, Sum):
        right = jump_rights(t.right)
        if not _empty(t.left) and not _empty(t.right):
            lo, hi = min_code(t.right), max_code(t.left)
            if lo is not None and hi is not None:
                right = itertools.chain([lo], right)
        return interleave((L(x) for x in jump_rights(t.left)), (R(x) for x in right))
    if isinstance(t, Reverse):
        return jump_lefts(t.term)
    if isinstance(t, SumOver):
        inner = dovetail(elements(t.index), jump_rights(t.summand), Pair)
        lo, hi = min_code(t.summand), max_code(t.summand)
        if lo is None or hi is None:
            return inner
        return interleave(inner, (Pair(i, lo) for i in jump_rights(t.index)))
    if isinstance(t, DropMin):
        m = min_code(t.term)
        return (x for x in jump_rights(t.term) if pred(t.term, x) != m)
    if isinstance(t, DropMax):
        m = max_code(t.term)
        return (x for x in jump_rights(t.term) if x != m)
    raise NotRealizableError(f"{render(t)} has no finite codes")


def jump_lefts(t: Term) -> Iterator:
    """Points with an immediate successor, in structural order."""
    if isinstance(t, Fin):
        return (Nat(k) for k in range(0, t.n - 1))
    if isinstance(t, Omega):
        return (Nat(k) for k in itertools.count())
    if isinstance(t, Zset):
        return (Int(k) for k in integers())
    if isinstance(t, Q):
        return iter(())
    if isinstance(t, Cantor):
        return (c for c in cantor_codes() if c.tail == 1 and c.word.endswith("0"))
    if isinstance(t, Sum):
        left = jump_lefts(t.left)
        if not _empty(t.left) and not _empty(t.right):
            lo, hi = min_code(t.right), max_code(t.left)
            if lo is not None and hi is not None:
                left = itertools.chain([hi], left)
        return interleave((L(x) for x in left), (R(x) for x in jump_lefts(t.right)))
    if isinstance(t, Reverse):
        return jump_rights(t.term)
    if isinstance(t, SumOver):
        inner = dovetail(elements(t.index), jump_lefts(t.summand), Pair)
        lo, hi = min_code(t.summand), max_code(t.summand)
        if lo is None or hi is None:
            return inner
        return interleave(inner, (Pair(i, hi) for i in jump_lefts(t.index)))
    if isinstance(t, DropMin):
        m = min_code(t.term)
        return (x for x in jump_lefts(t.term) if x != m)
    if isinstance(t, DropMax):
        m = max_code(t.term)
        return (x for x in jump_lefts(t.term) if succ(t.term, x) != m)
    raise NotRealizableError(f"{render(t)} has no finite codes")


# --------------------------------------------------------------------------
# JSON

def code_to_json(a):
    if isinstance(a, Nat):
        return {"nat": a.k}
    if isinstance(a, Int):
        return {"int": a.k}
    if isinstance(a, Rat):
        return {"rat": [a.value.numerator, a.value.denominator]}
    if isinstance(a, CantorPt):
        return {"cantor": {"w": a.word, "t": a.tail}}
    if isinstance(a, L):
        return {"L": code_to_json(a.code)}
    if isinstance(a, R):
        return {"R": code_to_json(a.code)}
    if isinstance(a, Pair):
        return {"pair": [code_to_json(a.index), code_to_json(a.summand)]}
    raise TypeError(f"not an element code: {a!r}")


def code_from_json(obj):
    if not isinstance(obj, dict) or len(obj) != 1:
        raise InvalidCodeError(f"bad code JSON: {obj!r}")
    (tag, val), = obj.items()
    if tag == "nat":
        return Nat(val)
    if tag == "int":
        return Int(val)
    if tag == "rat":
        p, q = val
        return Rat(Fraction(p, q))
    if tag == "cantor":
        return CantorPt(val["w"], val["t"])
    if tag == "L":
        return L(code_from_json(val))
    if tag == "R":
        return R(code_from_json(val))
    if tag == "pair":
        i, s = val
        return Pair(code_from_json(i), code_from_json(s))
    raise InvalidCodeError(f"unknown code tag {tag!r}")
